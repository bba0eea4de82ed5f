//! Right modules over a quiver algebra and the exact linear algebra on them:
//! hom spaces, Krull--Schmidt decomposition, minimal projective presentations,
//! the Nakayama functor and the Auslander--Reiten translate.
//!
//! A module is stored as one vector space per vertex and one exact rational
//! matrix per arrow, of shape `dims[tgt] x dims[src]` (the arrow acts from the
//! source-vertex component to the target-vertex component).

use crate::algebra::{AlgElem, QuiverAlgebra};
use crate::homotopy::TwoTermComplex;
use crate::linalg::{coords_in_basis, RatMat};
use crate::rat::{rat, Rat};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRep {
    pub dims: Vec<usize>,
    pub maps: Vec<RatMat>,
}

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("randomized Fitting decomposition exhausted its seed budget")]
    SplitFailure,
    #[error("module does not satisfy the algebra relations")]
    RelationsViolated,
    #[error("input is not the expected injective module")]
    NotInjective,
}

impl ModuleRep {
    pub fn zero(a: &QuiverAlgebra) -> Self {
        ModuleRep {
            dims: vec![0; a.vertex_count()],
            maps: a
                .arrows()
                .iter()
                .map(|_| RatMat::zeros(0, 0))
                .collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    /// Transpose all arrow matrices; yields the dual module over the opposite
    /// algebra (arrow indices are shared between an algebra and its opposite).
    pub fn dual(&self) -> ModuleRep {
        ModuleRep {
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn validate(&self, a: &QuiverAlgebra) -> Result<(), ModuleError> {
        if self.dims.len() != a.vertex_count() || self.maps.len() != a.arrows().len() {
            return Err(ModuleError::RelationsViolated);
        }
        for (i, ar) in a.arrows().iter().enumerate() {
            if self.maps[i].rows() != self.dims[ar.tgt] || self.maps[i].cols() != self.dims[ar.src]
            {
                return Err(ModuleError::RelationsViolated);
            }
        }
        for rel in a.relations() {
            let term = &rel.terms[0];
            let s = a.arrows()[term.path[0]].src;
            let t = a.arrows()[*term.path.last().unwrap()].tgt;
            let mut acc = RatMat::zeros(self.dims[t], self.dims[s]);
            for term in &rel.terms {
                acc = acc.add(&self.eval_path(&term.path, s).scale(&term.coef));
            }
            if !acc.is_zero() {
                return Err(ModuleError::RelationsViolated);
            }
        }
        Ok(())
    }

    /// Matrix of the right action of a path (arrow sequence, traversed left to
    /// right) starting at vertex `src`.
    pub fn eval_path(&self, seq: &[usize], src: usize) -> RatMat {
        let mut acc = RatMat::identity(self.dims[src]);
        for &ai in seq {
            acc = self.maps[ai].mul(&acc);
        }
        acc
    }

    /// Matrix of the action of an algebra element supported on paths s -> t.
    pub fn eval_elem(&self, a: &QuiverAlgebra, e: &AlgElem, s: usize, t: usize) -> RatMat {
        let mut acc = RatMat::zeros(self.dims[t], self.dims[s]);
        for (idx, coef) in e {
            let b = &a.basis_paths()[*idx];
            assert_eq!((b.src, b.tgt), (s, t), "element not supported on s->t paths");
            acc = acc.add(&self.eval_path(&b.seq, s).scale(coef));
        }
        acc
    }
}

pub fn direct_sum(a: &QuiverAlgebra, parts: &[&ModuleRep]) -> ModuleRep {
    let n = a.vertex_count();
    let mut dims = vec![0usize; n];
    for p in parts {
        for v in 0..n {
            dims[v] += p.dims[v];
        }
    }
    let mut maps = Vec::with_capacity(a.arrows().len());
    for (i, ar) in a.arrows().iter().enumerate() {
        let mut m = RatMat::zeros(dims[ar.tgt], dims[ar.src]);
        let mut roff = 0;
        let mut coff = 0;
        for p in parts {
            let pm = &p.maps[i];
            for r in 0..pm.rows() {
                for c in 0..pm.cols() {
                    m.set(roff + r, coff + c, pm.at(r, c).clone());
                }
            }
            roff += p.dims[ar.tgt];
            coff += p.dims[ar.src];
        }
        maps.push(m);
    }
    ModuleRep { dims, maps }
}

/// The indecomposable projective P_i = e_i * Lambda, realized on the basis
/// paths starting at vertex i.
pub fn projective_module(a: &QuiverAlgebra, i: usize) -> ModuleRep {
    let n = a.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| a.paths_between(i, v).len()).collect();
    let mut maps = Vec::with_capacity(a.arrows().len());
    for (ai, ar) in a.arrows().iter().enumerate() {
        let src_basis = a.paths_between(i, ar.src);
        let tgt_basis = a.paths_between(i, ar.tgt);
        let mut m = RatMat::zeros(tgt_basis.len(), src_basis.len());
        for (c, &p) in src_basis.iter().enumerate() {
            let prod = a.elem_mul(&crate::algebra::elem_basis(p), &a.arrow_elem(ai));
            for (bidx, coef) in &prod {
                let r = tgt_basis
                    .iter()
                    .position(|x| x == bidx)
                    .expect("product must stay in the i-th row of the algebra");
                m.set(r, c, coef.clone());
            }
        }
        maps.push(m);
    }
    ModuleRep { dims, maps }
}

/// The indecomposable injective I_i, as the dual of the projective over the
/// opposite algebra.
pub fn injective_module(a_op: &QuiverAlgebra, i: usize) -> ModuleRep {
    projective_module(a_op, i).dual()
}

pub fn simple_module(a: &QuiverAlgebra, i: usize) -> ModuleRep {
    let n = a.vertex_count();
    let mut dims = vec![0usize; n];
    dims[i] = 1;
    let maps = a
        .arrows()
        .iter()
        .map(|ar| RatMat::zeros(dims[ar.tgt], dims[ar.src]))
        .collect();
    ModuleRep { dims, maps }
}

// ---------------------------------------------------------------------------
// hom spaces
// ---------------------------------------------------------------------------

/// A homomorphism M -> N as one matrix per vertex (shape `N.dims[v] x M.dims[v]`).
pub type HomVec = Vec<RatMat>;

/// Basis of Hom(M, N): null space of the intertwiner system
/// { f_tgt . M_a = N_a . f_src } over all arrows.
pub fn hom_space(a: &QuiverAlgebra, m: &ModuleRep, n: &ModuleRep) -> Vec<HomVec> {
    let nv = a.vertex_count();
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offsets[nv];
    if unknowns == 0 {
        return vec![];
    }
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (ai, ar) in a.arrows().iter().enumerate() {
        let (s, t) = (ar.src, ar.tgt);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![Rat::zero(); unknowns];
                // (f_t . M_a)[r][c] = sum_k f_t[r][k] M_a[k][c]
                for k in 0..m.dims[t] {
                    let coef = m.maps[ai].at(k, c).clone();
                    if !coef.is_zero() {
                        row[offsets[t] + r * m.dims[t] + k] = coef;
                    }
                }
                // -(N_a . f_s)[r][c] = -sum_k N_a[r][k] f_s[k][c]
                for k in 0..n.dims[s] {
                    let coef = n.maps[ai].at(r, k).clone();
                    if !coef.is_zero() {
                        let slot = offsets[s] + k * m.dims[s] + c;
                        row[slot] = &row[slot] - coef;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut v = vec![Rat::zero(); unknowns];
                v[i] = Rat::one();
                v
            })
            .collect()
    } else {
        RatMat::from_rows(rows).nullspace()
    };
    kernel
        .into_iter()
        .map(|vecu| {
            (0..nv)
                .map(|v| {
                    let mut f = RatMat::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            f.set(r, c, vecu[offsets[v] + r * m.dims[v] + c].clone());
                        }
                    }
                    f
                })
                .collect()
        })
        .collect()
}

pub fn hom_dim(a: &QuiverAlgebra, m: &ModuleRep, n: &ModuleRep) -> usize {
    hom_space(a, m, n).len()
}

// ---------------------------------------------------------------------------
// submodules and quotients
// ---------------------------------------------------------------------------

/// Per-vertex spanning vectors of a subspace of a module.
#[derive(Debug, Clone)]
pub struct SubSpace {
    pub vecs: Vec<Vec<Vec<Rat>>>,
}

impl SubSpace {
    pub fn empty(n: usize) -> Self {
        SubSpace {
            vecs: vec![vec![]; n],
        }
    }

    pub fn reduce(&mut self) {
        for v in self.vecs.iter_mut() {
            if v.is_empty() {
                continue;
            }
            let mut m = RatMat::from_rows(v.clone());
            let pivots = m.rref();
            *v = (0..pivots.len())
                .map(|r| (0..m.cols()).map(|c| m.at(r, c).clone()).collect())
                .collect();
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.vecs.iter().map(|v| v.len()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.vecs.iter().map(|v| v.len()).sum()
    }
}

/// Close a set of per-vertex vectors under the arrow action.
pub fn close_under_action(a: &QuiverAlgebra, m: &ModuleRep, seed: &SubSpace) -> SubSpace {
    let mut cur = seed.clone();
    cur.reduce();
    loop {
        let mut grew = false;
        for (ai, ar) in a.arrows().iter().enumerate() {
            let images: Vec<Vec<Rat>> = cur.vecs[ar.src]
                .iter()
                .map(|v| m.maps[ai].apply(v))
                .filter(|img| img.iter().any(|x| !x.is_zero()))
                .collect();
            for img in images {
                if coords_in_basis(&cur.vecs[ar.tgt], &img).is_none() {
                    cur.vecs[ar.tgt].push(img);
                    cur.reduce();
                    grew = true;
                }
            }
        }
        if !grew {
            return cur;
        }
    }
}

/// Realize an arrow-stable subspace as a module, with per-vertex inclusions.
pub fn submodule(a: &QuiverAlgebra, m: &ModuleRep, sub: &SubSpace) -> (ModuleRep, Vec<RatMat>) {
    let n = a.vertex_count();
    let dims: Vec<usize> = sub.vecs.iter().map(|v| v.len()).collect();
    let incl: Vec<RatMat> = (0..n)
        .map(|v| {
            let mut mat = RatMat::zeros(m.dims[v], dims[v]);
            for (c, vec) in sub.vecs[v].iter().enumerate() {
                for r in 0..m.dims[v] {
                    mat.set(r, c, vec[r].clone());
                }
            }
            mat
        })
        .collect();
    let maps: Vec<RatMat> = a
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, ar)| {
            let mut mat = RatMat::zeros(dims[ar.tgt], dims[ar.src]);
            for (c, vec) in sub.vecs[ar.src].iter().enumerate() {
                let img = m.maps[ai].apply(vec);
                let coords = coords_in_basis(&sub.vecs[ar.tgt], &img)
                    .expect("subspace is not arrow-stable");
                for (r, x) in coords.into_iter().enumerate() {
                    mat.set(r, c, x);
                }
            }
            mat
        })
        .collect();
    (ModuleRep { dims, maps }, incl)
}

fn free_columns(sub_vecs: &[Vec<Rat>], dim: usize) -> (Vec<usize>, RatMat) {
    // returns (free columns, rref of the subspace rows)
    if sub_vecs.is_empty() {
        return ((0..dim).collect(), RatMat::zeros(0, dim));
    }
    let mut sm = RatMat::from_rows(sub_vecs.to_vec());
    let pivots = sm.rref();
    let pivset: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    ((0..dim).filter(|c| !pivset.contains(c)).collect(), sm)
}

/// Quotient of M by an arrow-stable subspace, with projection matrices.
pub fn quotient_module(
    a: &QuiverAlgebra,
    m: &ModuleRep,
    sub: &SubSpace,
) -> (ModuleRep, Vec<RatMat>) {
    let n = a.vertex_count();
    let mut proj: Vec<RatMat> = Vec::with_capacity(n);
    let mut sections: Vec<RatMat> = Vec::with_capacity(n);
    let mut qdims = vec![0usize; n];
    for v in 0..n {
        let d = m.dims[v];
        let (free, sm) = free_columns(&sub.vecs[v], d);
        qdims[v] = free.len();
        let mut p = RatMat::zeros(free.len(), d);
        let pivots: Vec<usize> = if sub.vecs[v].is_empty() {
            vec![]
        } else {
            // pivot columns are the complement of the free ones, in order
            (0..d).filter(|c| !free.contains(c)).collect()
        };
        for (r, &fc) in free.iter().enumerate() {
            p.set(r, fc, Rat::one());
            for (sr, &pc) in pivots.iter().enumerate() {
                p.set(r, pc, -sm.at(sr, fc).clone());
            }
        }
        let mut sec = RatMat::zeros(d, free.len());
        for (c, &fc) in free.iter().enumerate() {
            sec.set(fc, c, Rat::one());
        }
        proj.push(p);
        sections.push(sec);
    }
    let maps: Vec<RatMat> = a
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, ar)| proj[ar.tgt].mul(&m.maps[ai]).mul(&sections[ar.src]))
        .collect();
    (ModuleRep { dims: qdims, maps }, proj)
}

/// rad M = sum of the images of all arrow actions.
pub fn radical(a: &QuiverAlgebra, m: &ModuleRep) -> (ModuleRep, SubSpace) {
    let n = a.vertex_count();
    let mut seed = SubSpace::empty(n);
    for (ai, ar) in a.arrows().iter().enumerate() {
        for c in 0..m.dims[ar.src] {
            let col: Vec<Rat> = (0..m.dims[ar.tgt])
                .map(|r| m.maps[ai].at(r, c).clone())
                .collect();
            if col.iter().any(|x| !x.is_zero()) {
                seed.vecs[ar.tgt].push(col);
            }
        }
    }
    let sub = close_under_action(a, m, &seed);
    let (rad, _) = submodule(a, m, &sub);
    (rad, sub)
}

/// soc M = elements killed by every arrow.
pub fn socle(a: &QuiverAlgebra, m: &ModuleRep) -> (ModuleRep, SubSpace) {
    let n = a.vertex_count();
    let mut sub = SubSpace::empty(n);
    for v in 0..n {
        if m.dims[v] == 0 {
            continue;
        }
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for (ai, ar) in a.arrows().iter().enumerate() {
            if ar.src != v {
                continue;
            }
            for r in 0..m.dims[ar.tgt] {
                rows.push(
                    (0..m.dims[v])
                        .map(|c| m.maps[ai].at(r, c).clone())
                        .collect(),
                );
            }
        }
        sub.vecs[v] = if rows.is_empty() {
            (0..m.dims[v])
                .map(|i| {
                    let mut e = vec![Rat::zero(); m.dims[v]];
                    e[i] = Rat::one();
                    e
                })
                .collect()
        } else {
            RatMat::from_rows(rows).nullspace()
        };
    }
    sub.reduce();
    let (soc, _) = submodule(a, m, &sub);
    (soc, sub)
}

/// The quotient I_i / soc(I_i) = I_i / S_i.
pub fn injective_mod_socle(
    a: &QuiverAlgebra,
    a_op: &QuiverAlgebra,
    i: usize,
) -> Result<ModuleRep, ModuleError> {
    let inj = injective_module(a_op, i);
    let (soc, sub) = socle(a, &inj);
    if soc.total_dim() != 1 || soc.dims[i] != 1 {
        return Err(ModuleError::NotInjective);
    }
    Ok(quotient_module(a, &inj, &sub).0)
}

/// top M = M / rad M, with projections.
pub fn top(a: &QuiverAlgebra, m: &ModuleRep) -> (ModuleRep, Vec<RatMat>) {
    let (_, sub) = radical(a, m);
    quotient_module(a, m, &sub)
}

/// Generators of M: one element per top basis vector, as (vertex, vector).
pub fn top_generators(a: &QuiverAlgebra, m: &ModuleRep) -> Vec<(usize, Vec<Rat>)> {
    let (_, sub) = radical(a, m);
    let n = a.vertex_count();
    let mut gens = Vec::new();
    for v in 0..n {
        let (free, _) = free_columns(&sub.vecs[v], m.dims[v]);
        for fc in free {
            let mut vec = vec![Rat::zero(); m.dims[v]];
            vec[fc] = Rat::one();
            gens.push((v, vec));
        }
    }
    gens
}

// ---------------------------------------------------------------------------
// minimal presentations and the AR translate
// ---------------------------------------------------------------------------

/// Minimal projective presentation of a module as a two-term complex of
/// projectives (empty differential for the zero module).
pub fn min_presentation(a: &QuiverAlgebra, m: &ModuleRep) -> TwoTermComplex {
    if m.is_zero() {
        return TwoTermComplex::from_summands(a.vertex_count(), vec![], vec![], vec![]);
    }
    let gens = top_generators(a, m);
    let p0_vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let p0_parts: Vec<ModuleRep> = p0_vertices.iter().map(|&v| projective_module(a, v)).collect();
    let p0_refs: Vec<&ModuleRep> = p0_parts.iter().collect();
    let p0 = direct_sum(a, &p0_refs);

    // cover map P0 -> M, per vertex
    let n = a.vertex_count();
    let mut cover: Vec<RatMat> = (0..n)
        .map(|w| RatMat::zeros(m.dims[w], p0.dims[w]))
        .collect();
    {
        let mut col_off = vec![0usize; n];
        for (v, gen) in gens.iter() {
            for w in 0..n {
                for (k, &bp) in a.paths_between(*v, w).iter().enumerate() {
                    let b = &a.basis_paths()[bp];
                    let img = m.eval_path(&b.seq, *v).apply(gen);
                    for r in 0..m.dims[w] {
                        cover[w].set(r, col_off[w] + k, img[r].clone());
                    }
                }
                col_off[w] += a.paths_between(*v, w).len();
            }
        }
    }

    // kernel of the cover, as a subspace of P0
    let mut ker = SubSpace::empty(n);
    for w in 0..n {
        if p0.dims[w] == 0 {
            continue;
        }
        ker.vecs[w] = if m.dims[w] == 0 {
            (0..p0.dims[w])
                .map(|i| {
                    let mut e = vec![Rat::zero(); p0.dims[w]];
                    e[i] = Rat::one();
                    e
                })
                .collect()
        } else {
            cover[w].nullspace()
        };
    }
    ker.reduce();
    let (kmod, kincl) = submodule(a, &p0, &ker);

    // generators of the kernel lift to the columns of the differential
    let kgens = top_generators(a, &kmod);
    let pm1_vertices: Vec<usize> = kgens.iter().map(|(w, _)| *w).collect();
    let mut diff: Vec<Vec<AlgElem>> =
        vec![vec![crate::algebra::elem_zero(); pm1_vertices.len()]; p0_vertices.len()];
    for (h, (w, kvec)) in kgens.iter().enumerate() {
        let in_p0 = kincl[*w].apply(kvec); // vector in (P0)_w
        let mut off = 0usize;
        for (g, &v) in p0_vertices.iter().enumerate() {
            let paths = a.paths_between(v, *w);
            let mut elem = crate::algebra::elem_zero();
            for (k, &bp) in paths.iter().enumerate() {
                let coef = in_p0[off + k].clone();
                if !coef.is_zero() {
                    elem.insert(bp, coef);
                }
            }
            diff[g][h] = elem;
            off += paths.len();
        }
    }
    TwoTermComplex::from_summands(n, pm1_vertices, p0_vertices, diff)
}

/// AR translate of an indecomposable non-projective module: D Tr across the
/// opposite algebra (equivalently, the kernel of the Nakayama functor applied
/// to the minimal presentation). Projectives give the zero module.
fn tau_indecomposable(a: &QuiverAlgebra, a_op: &QuiverAlgebra, m: &ModuleRep) -> ModuleRep {
    let pres = min_presentation(a, m);
    if pres.mult_minus1_total() == 0 {
        return ModuleRep::zero(a); // projective
    }
    let tr = transpose_presentation(a, a_op, &pres);
    let tr_mod = tr.h0(a_op);
    tr_mod.dual()
}

/// The transpose: apply Hom(-, Lambda) to a presentation, yielding a two-term
/// complex over the opposite algebra with the blocks reversed.
pub fn transpose_presentation(
    a: &QuiverAlgebra,
    a_op: &QuiverAlgebra,
    pres: &TwoTermComplex,
) -> TwoTermComplex {
    let p0 = pres.summands_0();
    let pm1 = pres.summands_minus1();
    let mut diff: Vec<Vec<AlgElem>> =
        vec![vec![crate::algebra::elem_zero(); p0.len()]; pm1.len()];
    for (g, _) in p0.iter().enumerate() {
        for (h, _) in pm1.iter().enumerate() {
            diff[h][g] = reverse_elem(a, a_op, pres.diff_block(g, h));
        }
    }
    TwoTermComplex::from_summands(a.vertex_count(), p0.to_vec(), pm1.to_vec(), diff)
}

/// Image of an algebra element under the canonical anti-isomorphism to the
/// opposite algebra (reverse every path and renormalize there).
pub fn reverse_elem(a: &QuiverAlgebra, a_op: &QuiverAlgebra, e: &AlgElem) -> AlgElem {
    let mut out = crate::algebra::elem_zero();
    for (idx, coef) in e {
        let b = &a.basis_paths()[*idx];
        let rev: Vec<usize> = b.seq.iter().rev().copied().collect();
        let nf = a_op.path_elem(b.tgt, &rev);
        crate::algebra::elem_add_scaled(&mut out, &nf, coef);
    }
    out
}

/// AR translate, defined summand-wise on decomposable input.
pub fn tau(a: &QuiverAlgebra, a_op: &QuiverAlgebra, m: &ModuleRep) -> ModuleRep {
    if m.is_zero() {
        return ModuleRep::zero(a);
    }
    let parts = decompose(a, m).expect("Fitting decomposition failed in tau");
    let mut pieces: Vec<ModuleRep> = Vec::new();
    for (summand, mult) in parts {
        let t = tau_indecomposable(a, a_op, &summand);
        for _ in 0..mult {
            pieces.push(t.clone());
        }
    }
    let refs: Vec<&ModuleRep> = pieces.iter().collect();
    direct_sum(a, &refs)
}

/// Inverse AR translate: dual to `tau` over the opposite algebra.
pub fn tau_inverse(a: &QuiverAlgebra, a_op: &QuiverAlgebra, m: &ModuleRep) -> ModuleRep {
    if m.is_zero() {
        return ModuleRep::zero(a);
    }
    let md = m.dual();
    let t = tau(a_op, a, &md);
    t.dual()
}

// ---------------------------------------------------------------------------
// Krull--Schmidt
// ---------------------------------------------------------------------------

fn block_diag_operator(m: &ModuleRep, f: &HomVec) -> RatMat {
    let total = m.total_dim();
    let mut op = RatMat::zeros(total, total);
    let mut off = 0;
    for (v, d) in m.dims.iter().enumerate() {
        for r in 0..*d {
            for c in 0..*d {
                op.set(off + r, off + c, f[v].at(r, c).clone());
            }
        }
        off += d;
    }
    op
}

/// dim of End(M)/rad End(M), via the radical of the trace form (exact in
/// characteristic zero).
pub fn end_semisimple_dim(a: &QuiverAlgebra, m: &ModuleRep) -> usize {
    let basis = hom_space(a, m, m);
    let k = basis.len();
    if k == 0 {
        return 0;
    }
    let ops: Vec<RatMat> = basis.iter().map(|f| block_diag_operator(m, f)).collect();
    let mut gram = RatMat::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let prod = ops[i].mul(&ops[j]);
            let mut tr = Rat::zero();
            for d in 0..prod.rows() {
                tr += prod.at(d, d);
            }
            gram.set(i, j, tr.clone());
            gram.set(j, i, tr);
        }
    }
    gram.rank()
}

pub fn is_indecomposable(a: &QuiverAlgebra, m: &ModuleRep) -> bool {
    assert!(!m.is_zero(), "zero module");
    end_semisimple_dim(a, m) == 1
}

/// Deterministic SplitMix64 generator.
#[derive(Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn f64_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

mod unipoly {
    //! Just enough monic univariate arithmetic over Q for Fitting splittings.
    use crate::rat::Rat;
    use num_traits::Zero;

    /// coefficients low-to-high, normalized (no trailing zeros)
    pub type Poly = Vec<Rat>;

    pub fn normalize(mut p: Poly) -> Poly {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    pub fn degree(p: &Poly) -> usize {
        p.len().saturating_sub(1)
    }

    pub fn derivative(p: &Poly) -> Poly {
        if p.len() <= 1 {
            return vec![];
        }
        normalize(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn div_rem(num: &Poly, den: &Poly) -> (Poly, Poly) {
        assert!(!den.is_empty());
        let mut rem = num.clone();
        let mut quot = vec![Rat::zero(); num.len().saturating_sub(den.len()) + 1];
        while rem.len() >= den.len() && !rem.is_empty() {
            let lead = rem.last().unwrap() / den.last().unwrap();
            let shift = rem.len() - den.len();
            quot[shift] = lead.clone();
            for (i, c) in den.iter().enumerate() {
                let v = &rem[shift + i] - &lead * c;
                rem[shift + i] = v;
            }
            rem = normalize(rem);
            if degree(&rem) < degree(den) && rem.len() < den.len() {
                break;
            }
        }
        (normalize(quot), rem)
    }

    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (normalize(a.clone()), normalize(b.clone()));
        while !y.is_empty() {
            let (_, r) = div_rem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(lead) = x.last().cloned() {
            for c in x.iter_mut() {
                *c = &*c / &lead;
            }
        }
        x
    }

    pub fn eval(p: &Poly, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in p.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Minimal polynomial of a square matrix, low-to-high coefficients, monic.
fn min_poly(op: &RatMat) -> unipoly::Poly {
    let n = op.rows();
    let mut powers: Vec<RatMat> = vec![RatMat::identity(n)];
    loop {
        let flat: Vec<Vec<Rat>> = powers
            .iter()
            .map(|p| {
                let mut v = Vec::with_capacity(n * n);
                for r in 0..n {
                    for c in 0..n {
                        v.push(p.at(r, c).clone());
                    }
                }
                v
            })
            .collect();
        let next = powers.last().unwrap().mul(op);
        let mut nv = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                nv.push(next.at(r, c).clone());
            }
        }
        if let Some(coords) = coords_in_basis(&flat, &nv) {
            let mut coefs: Vec<Rat> = coords.into_iter().map(|c| -c).collect();
            coefs.push(Rat::one());
            return coefs;
        }
        powers.push(next);
    }
}

fn eval_poly_at_matrix(p: &unipoly::Poly, op: &RatMat) -> RatMat {
    let n = op.rows();
    let mut result = RatMat::zeros(n, n);
    let mut acc = RatMat::identity(n);
    for c in p {
        if !c.is_zero() {
            result = result.add(&acc.scale(c));
        }
        acc = acc.mul(op);
    }
    result
}

/// Rational roots of a monic polynomial over Q (small-height search plus the
/// classical divisor test on the constant term once denominators are cleared).
fn rational_roots(p: &unipoly::Poly) -> Vec<(Rat, usize)> {
    let mut roots = Vec::new();
    let mut current = p.clone();
    let mut candidates: Vec<Rat> = vec![Rat::zero()];
    for num in 1..=24i64 {
        for den in 1..=6i64 {
            candidates.push(crate::rat::rat_frac(num, den));
            candidates.push(crate::rat::rat_frac(-num, den));
        }
    }
    for cand in candidates {
        let mut mult = 0;
        while unipoly::degree(&current) >= 1 && unipoly::eval(&current, &cand).is_zero() {
            let lin = vec![-cand.clone(), Rat::one()];
            let (q, r) = unipoly::div_rem(&current, &lin);
            assert!(r.is_empty(), "division by a root must be exact");
            current = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
    }
    roots
}

/// Coprime factorization attempts for the minimal polynomial: rational roots
/// first, then the squarefree (multiplicity) decomposition.
fn coprime_factors(p: &unipoly::Poly) -> Vec<unipoly::Poly> {
    let deg = unipoly::degree(p);
    let roots = rational_roots(p);
    if !roots.is_empty() {
        let mut factors: Vec<unipoly::Poly> = Vec::new();
        let mut cofactor = p.clone();
        for (r, mult) in &roots {
            let mut lin_pow = vec![Rat::one()];
            for _ in 0..*mult {
                let lin = vec![-r.clone(), Rat::one()];
                lin_pow = mul_poly(&lin_pow, &lin);
            }
            factors.push(lin_pow.clone());
            let (q, rem) = unipoly::div_rem(&cofactor, &lin_pow);
            assert!(rem.is_empty());
            cofactor = q;
        }
        if unipoly::degree(&cofactor) >= 1 {
            factors.push(cofactor);
        }
        if factors.len() >= 2 {
            return factors;
        }
        return vec![];
    }
    // squarefree split: p = prod W_j^j with the W_j pairwise coprime
    let dp = unipoly::derivative(p);
    let g = unipoly::gcd(p, &dp);
    if unipoly::degree(&g) >= 1 && unipoly::degree(&g) < deg {
        let (w, rem) = unipoly::div_rem(p, &g);
        assert!(rem.is_empty());
        let common = unipoly::gcd(&w, &g);
        if unipoly::degree(&common) < unipoly::degree(&w) {
            // p = (w / common) * (g * common), coprime when the split is proper
            let (u, rem2) = unipoly::div_rem(&w, &common);
            assert!(rem2.is_empty());
            let v = mul_poly(&g, &common);
            if unipoly::degree(&u) >= 1 && unipoly::degree(&v) >= 1 {
                let check = unipoly::gcd(&u, &v);
                if unipoly::degree(&check) == 0 {
                    return vec![u, v];
                }
            }
        }
    }
    vec![]
}

fn mul_poly(a: &unipoly::Poly, b: &unipoly::Poly) -> unipoly::Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    unipoly::normalize(out)
}

fn try_split(a: &QuiverAlgebra, m: &ModuleRep, f: &HomVec) -> Option<Vec<ModuleRep>> {
    let op = block_diag_operator(m, f);
    let mp = min_poly(&op);
    let factors = coprime_factors(&mp);
    if factors.len() < 2 {
        return None;
    }
    let n = m.total_dim();
    let mut pieces = Vec::new();
    let mut covered = 0usize;
    for fac in &factors {
        let mat = eval_poly_at_matrix(fac, &op);
        let kernel = mat.nullspace();
        covered += kernel.len();
        if !kernel.is_empty() {
            pieces.push(vectors_to_subspace(m, kernel));
        }
    }
    if covered != n || pieces.len() < 2 {
        return None;
    }
    Some(pieces.iter().map(|s| submodule(a, m, s).0).collect())
}

fn vectors_to_subspace(m: &ModuleRep, flat: Vec<Vec<Rat>>) -> SubSpace {
    let n = m.dims.len();
    let mut sub = SubSpace::empty(n);
    for vec in flat {
        let mut off = 0;
        for v in 0..n {
            let d = m.dims[v];
            let part: Vec<Rat> = vec[off..off + d].to_vec();
            if part.iter().any(|x| !x.is_zero()) {
                sub.vecs[v].push(part);
            }
            off += d;
        }
    }
    sub.reduce();
    sub
}

/// Krull--Schmidt decomposition via Fitting splittings of pseudorandom
/// endomorphisms (seeded, integer coefficients in [-3, 3], 32 retries).
pub fn decompose(
    a: &QuiverAlgebra,
    m: &ModuleRep,
) -> Result<Vec<(ModuleRep, usize)>, ModuleError> {
    decompose_with_budget(a, m, 32)
}

pub fn decompose_with_budget(
    a: &QuiverAlgebra,
    m: &ModuleRep,
    budget: usize,
) -> Result<Vec<(ModuleRep, usize)>, ModuleError> {
    let mut out: Vec<(ModuleRep, usize)> = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(cur) = stack.pop() {
        if cur.is_zero() {
            continue;
        }
        if is_indecomposable(a, &cur) {
            push_summand(a, &mut out, cur);
            continue;
        }
        let basis = hom_space(a, &cur, &cur);
        let mut split = None;
        let mut rng = SplitMix64::new(0x5EED_0001);
        for _ in 0..budget {
            let coefs: Vec<i64> = (0..basis.len()).map(|_| rng.int_in(-3, 3)).collect();
            if coefs.iter().all(|&c| c == 0) {
                continue;
            }
            let f = combine(a, &cur, &cur, &basis, &coefs);
            if let Some(parts) = try_split(a, &cur, &f) {
                split = Some(parts);
                break;
            }
        }
        match split {
            Some(parts) => stack.extend(parts),
            None => return Err(ModuleError::SplitFailure),
        }
    }
    out.sort_by(|x, y| y.0.total_dim().cmp(&x.0.total_dim()));
    Ok(out)
}

fn push_summand(a: &QuiverAlgebra, out: &mut Vec<(ModuleRep, usize)>, m: ModuleRep) {
    for (existing, mult) in out.iter_mut() {
        if are_isomorphic(a, existing, &m) {
            *mult += 1;
            return;
        }
    }
    out.push((m, 1));
}

/// Isomorphism test: equal dimension vectors plus an invertible homomorphism.
/// Small hom spaces are searched exhaustively over coefficients in [-2, 2];
/// larger ones fall back to seeded random combinations.
pub fn are_isomorphic(a: &QuiverAlgebra, m: &ModuleRep, n: &ModuleRep) -> bool {
    if m.dims != n.dims {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let basis = hom_space(a, m, n);
    if basis.is_empty() {
        return false;
    }
    let invertible = |f: &HomVec| -> bool {
        (0..a.vertex_count()).all(|v| !f[v].det().is_zero())
    };
    if basis.len() <= 4 {
        let k = basis.len();
        let mut idx = vec![-2i64; k];
        loop {
            if idx.iter().any(|&c| c != 0) {
                let f = combine(a, m, n, &basis, &idx);
                if invertible(&f) {
                    return true;
                }
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return false;
                }
                idx[pos] += 1;
                if idx[pos] > 2 {
                    idx[pos] = -2;
                    pos += 1;
                } else {
                    break;
                }
            }
        }
    }
    let mut rng = SplitMix64::new(0x5EED_1503);
    for _ in 0..64 {
        let coefs: Vec<i64> = (0..basis.len()).map(|_| rng.int_in(-3, 3)).collect();
        let f = combine(a, m, n, &basis, &coefs);
        if invertible(&f) {
            return true;
        }
    }
    false
}

fn combine(
    a: &QuiverAlgebra,
    m: &ModuleRep,
    n: &ModuleRep,
    basis: &[HomVec],
    coefs: &[i64],
) -> HomVec {
    (0..a.vertex_count())
        .map(|v| {
            let mut f = RatMat::zeros(n.dims[v], m.dims[v]);
            for (b, &c) in basis.iter().zip(coefs) {
                if c != 0 {
                    f = f.add(&b[v].scale(&rat(c)));
                }
            }
            f
        })
        .collect()
}

/// Submodule of `n` generated by the images of all homomorphisms from `m`
/// (the trace of `m` in `n`).
pub fn trace_submodule(a: &QuiverAlgebra, m: &ModuleRep, n: &ModuleRep) -> SubSpace {
    let homs = hom_space(a, m, n);
    let mut seed = SubSpace::empty(a.vertex_count());
    for f in &homs {
        for v in 0..a.vertex_count() {
            for c in 0..m.dims[v] {
                let col: Vec<Rat> = (0..n.dims[v]).map(|r| f[v].at(r, c).clone()).collect();
                if col.iter().any(|x| !x.is_zero()) {
                    seed.vecs[v].push(col);
                }
            }
        }
    }
    close_under_action(a, n, &seed)
}
