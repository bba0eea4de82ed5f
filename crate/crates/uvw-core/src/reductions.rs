//! Jasso-reduction divisor maps (set one u-variable to zero) and
//! quotient-algebra monomial maps, verified by polynomial matching.

use crate::algebra::AlgebraQuotient;
use crate::catalog::{Catalog, CatalogError};
use crate::equations::{EquationError, EquationSet};
use crate::homotopy::{minimize, TwoTermComplex};
use crate::linalg::RatMat;
use crate::module::{decompose, trace_submodule, ModuleError};
use crate::poly::{Poly, RatFn, VarImage};
use crate::rat::{rat, Int};
use crate::report::Report;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("focus object is not rigid: {0}")]
    NotRigid(String),
    #[error("matching is ambiguous: {0}")]
    MatchAmbiguous(String),
    #[error("matching is incomplete: {0}")]
    MatchIncomplete(String),
    #[error("complex has a summand outside the catalog: {0}")]
    UnmatchedSummand(String),
    #[error(transparent)]
    Equation(#[from] EquationError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// Image of one source variable under a reduction map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarTarget {
    Zero,
    One,
    Variable(usize),
    /// exponent vector over the target objects (quotient maps)
    Monomial(Vec<i64>),
}

#[derive(Debug, Clone)]
pub struct ReductionMap {
    pub src_name: String,
    pub tgt_name: String,
    /// Jasso focus (source object index), if this is a divisor map
    pub focus: Option<usize>,
    pub images: Vec<VarTarget>,
}

impl ReductionMap {
    /// Apply the map to a polynomial over the source u-variables.
    pub fn apply(&self, p: &Poly, tgt_len: usize) -> Poly {
        match self.focus {
            Some(_) => p.map_variables(tgt_len, |i| match &self.images[i] {
                VarTarget::Zero => VarImage::ToZero,
                VarTarget::One => VarImage::ToOne,
                VarTarget::Variable(j) => VarImage::Var(*j),
                VarTarget::Monomial(_) => unreachable!("jasso maps have no monomial images"),
            }),
            None => unreachable!("apply is for jasso maps; use substitute for quotient maps"),
        }
    }
}

/// Build the Jasso divisor map at a rigid object: the focus goes to zero,
/// incompatible variables to one, and each compatible object to the target
/// object singled out by projecting its g-vector along g(focus) and matching
/// the H^0 dimension-vector image.
pub fn jasso_match(
    src: &Catalog,
    focus: usize,
    tgt: &Catalog,
) -> Result<ReductionMap, ReductionError> {
    let n = src.n();
    if !src.objects[focus].rigid {
        return Err(ReductionError::NotRigid(src.objects[focus].label.clone()));
    }
    if tgt.n() + 1 != n {
        return Err(ReductionError::MatchIncomplete(format!(
            "target rank {} is not one less than source rank {}",
            tgt.n(),
            n
        )));
    }
    let compat: Vec<usize> = (0..src.len())
        .filter(|&z| z != focus && src.c(z, focus) == 0)
        .collect();
    if compat.len() != tgt.len() {
        return Err(ReductionError::MatchIncomplete(format!(
            "{} compatible objects but target has {}",
            compat.len(),
            tgt.len()
        )));
    }

    // trace of the focus module inside each compatible H^0 (dimension vector
    // of t(N)); zero when the focus is a shifted projective
    let t_dims: Vec<Vec<i64>> = compat
        .iter()
        .map(|&z| {
            if src.objects[focus].h0.is_zero() || src.objects[z].h0.is_zero() {
                vec![0; n]
            } else {
                let tr = trace_submodule(&src.algebra, &src.objects[focus].h0, &src.objects[z].h0);
                tr.dims().iter().map(|&d| d as i64).collect()
            }
        })
        .collect();

    let rigid_compat: Vec<usize> = compat
        .iter()
        .copied()
        .filter(|&z| src.objects[z].rigid)
        .collect();

    let mut found: Option<Vec<(usize, usize)>> = None; // (src obj, tgt obj)
    let mut ambiguous = false;
    let m = tgt.n(); // = n - 1 for module focus; may equal n - 1 in general
    let mut frame = vec![0usize; m];
    enumerate_frames(&rigid_compat, m, &mut frame, 0, 0, &mut |frame| {
        // frame objects must be pairwise compatible and complete the focus to
        // a unimodular basis
        for (i, &a) in frame.iter().enumerate() {
            for &b in frame.iter().skip(i + 1) {
                if src.c(a, b) != 0 {
                    return;
                }
            }
        }
        let mut cols: Vec<Vec<i64>> = vec![src.objects[focus].g.clone()];
        for &z in frame {
            cols.push(src.objects[z].g.clone());
        }
        let det = crate::linalg::det_i64(&transpose_i64(&cols));
        if det != rat(1) && det != rat(-1) {
            return;
        }
        // try all assignments of the frame to the target projectives
        permutations(m, &mut |perm| {
            if found.is_some() && ambiguous {
                return;
            }
            // L: Z^n -> Z^m with L g(focus) = 0, L g(frame[k]) = e_{perm[k]}
            let mut gmat = RatMat::zeros(n, m + 1);
            for r in 0..n {
                gmat.set(r, 0, rat(src.objects[focus].g[r]));
                for (c, &z) in frame.iter().enumerate() {
                    gmat.set(r, c + 1, rat(src.objects[z].g[r]));
                }
            }
            let ginv = match gmat_extended_inverse(&gmat, n, m) {
                Some(l) => l,
                None => return,
            };
            // candidate assignment for every compatible object
            let mut assignment: Vec<(usize, usize)> = Vec::new();
            let mut used = vec![false; tgt.len()];
            for (zi, &z) in compat.iter().enumerate() {
                let gz: Vec<Int> = {
                    let gv: Vec<crate::rat::Rat> =
                        src.objects[z].g.iter().map(|&x| rat(x)).collect();
                    ginv.apply(&gv)
                        .into_iter()
                        .map(|x| {
                            assert!(x.denom().is_one());
                            x.numer().clone()
                        })
                        .collect()
                };
                let gz: Vec<i64> = gz.iter().map(|x| x.try_into().unwrap()).collect();
                // reorder by perm: coordinate k of L corresponds to target
                // projective perm[k]
                let mut g_img = vec![0i64; m];
                for k in 0..m {
                    g_img[perm[k]] = gz[k];
                }
                let d_img: Vec<i64> = (0..m)
                    .map(|j| {
                        let zj = frame[inverse_perm_slot(perm, j)];
                        let hom = if src.objects[zj].h0.is_zero()
                            || src.objects[z].h0.is_zero()
                        {
                            0
                        } else {
                            src.hom_mod[zj][z] as i64
                        };
                        let pair: i64 = src.objects[zj]
                            .g
                            .iter()
                            .zip(&t_dims[zi])
                            .map(|(a, b)| a * b)
                            .sum();
                        hom - pair
                    })
                    .collect();
                let mut cands: Vec<usize> = (0..tgt.len())
                    .filter(|&t| {
                        !used[t]
                            && tgt.objects[t].g == g_img
                            && tgt.objects[t].d == d_img
                    })
                    .collect();
                if cands.len() > 1 {
                    // keep only rigid-vs-rigid matches to resolve, otherwise
                    // ambiguity must surface
                    cands.retain(|&t| tgt.objects[t].rigid == src.objects[z].rigid);
                }
                match cands.len() {
                    1 => {
                        used[cands[0]] = true;
                        assignment.push((z, cands[0]));
                    }
                    0 => return,
                    _ => {
                        ambiguous = true;
                        return;
                    }
                }
            }
            match &found {
                None => found = Some(assignment),
                Some(prev) => {
                    if prev != &assignment {
                        ambiguous = true;
                    }
                }
            }
        });
    });

    if ambiguous {
        return Err(ReductionError::MatchAmbiguous(
            "two candidate bijections survive the (g, d) matching".into(),
        ));
    }
    let Some(assignment) = found else {
        return Err(ReductionError::MatchIncomplete(
            "no unimodular frame matches the target".into(),
        ));
    };
    let mut images = vec![VarTarget::One; src.len()];
    images[focus] = VarTarget::Zero;
    for (z, t) in assignment {
        images[z] = VarTarget::Variable(t);
    }
    Ok(ReductionMap {
        src_name: src.name.clone(),
        tgt_name: tgt.name.clone(),
        focus: Some(focus),
        images,
    })
}

fn transpose_i64(cols: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cols[0].len();
    (0..n)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect()
}

fn inverse_perm_slot(perm: &[usize], j: usize) -> usize {
    perm.iter().position(|&p| p == j).unwrap()
}

/// The rows 1..=m of the inverse of the square matrix whose columns are
/// [g(focus), g(frame_1..m)]: the linear projection along g(focus).
fn gmat_extended_inverse(gmat: &RatMat, n: usize, m: usize) -> Option<RatMat> {
    assert_eq!(n, m + 1);
    let inv = gmat.inverse()?;
    let mut l = RatMat::zeros(m, n);
    for r in 0..m {
        for c in 0..n {
            l.set(r, c, inv.at(r + 1, c).clone());
        }
    }
    Some(l)
}

fn enumerate_frames(
    pool: &[usize],
    k: usize,
    cur: &mut Vec<usize>,
    start: usize,
    depth: usize,
    f: &mut impl FnMut(&Vec<usize>),
) {
    if depth == k {
        f(cur);
        return;
    }
    for i in start..pool.len() {
        cur[depth] = pool[i];
        enumerate_frames(pool, k, cur, i + 1, depth + 1, f);
    }
}

fn permutations(k: usize, f: &mut impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..k).collect();
    heap_perm(&mut perm, k, f);
}

fn heap_perm(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(perm);
        return;
    }
    for i in 0..k {
        heap_perm(perm, k - 1, f);
        if k % 2 == 0 {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}

/// Verify that the divisor map carries the source equations onto the target
/// equations: every mu(Fhat_N) is 1 or a target Fhat (all of which are hit),
/// and every mu(u-equation) is a target u-equation or zero.
pub fn jasso_substitution_check(
    src: &Catalog,
    src_eq: &EquationSet,
    tgt: &Catalog,
    tgt_eq: &EquationSet,
    map: &ReductionMap,
) -> Result<Report, ReductionError> {
    let mut rep = Report::new(&format!(
        "jasso substitution {} @ {} -> {}",
        src.name,
        map.focus
            .map(|f| src.objects[f].label.clone())
            .unwrap_or_default(),
        tgt.name
    ));
    let tgt_fhats: Vec<(usize, Poly)> = tgt
        .module_objects()
        .into_iter()
        .map(|x| Ok((x, tgt_eq.fhat(tgt, x)?)))
        .collect::<Result<_, EquationError>>()?;
    let mut hit = vec![false; tgt_fhats.len()];
    for x in src.module_objects() {
        let image = map.apply(&src_eq.fhat(src, x)?, tgt.len());
        if image.is_one() {
            rep.push(
                &format!("mu Fhat({}) = 1", src.objects[x].label),
                true,
                String::new(),
            );
            continue;
        }
        let pos = tgt_fhats.iter().position(|(_, f)| f == &image);
        match pos {
            Some(i) => {
                hit[i] = true;
                rep.push(
                    &format!(
                        "mu Fhat({}) = Fhat({})",
                        src.objects[x].label, tgt.objects[tgt_fhats[i].0].label
                    ),
                    true,
                    String::new(),
                );
            }
            None => rep.push(
                &format!("mu Fhat({})", src.objects[x].label),
                false,
                "image is not a target Fhat".into(),
            ),
        }
    }
    rep.push(
        "every target Fhat is hit",
        hit.iter().all(|&h| h),
        String::new(),
    );

    let tgt_ueqs: Vec<Poly> = (0..tgt.len()).map(|x| tgt_eq.u_equation(tgt, x)).collect();
    for x in 0..src.len() {
        let image = map.apply(&src_eq.u_equation(src, x), tgt.len());
        let ok = image.is_zero() || tgt_ueqs.contains(&image);
        rep.push(
            &format!("mu u-equation({})", src.objects[x].label),
            ok,
            if ok { String::new() } else { "no match".into() },
        );
    }
    Ok(rep)
}

/// Apply the quotient functor - tensor_Lambda A to a two-term complex:
/// rewrite differential entries over the quotient path basis and delete
/// projective summands at killed vertices.
pub fn tensor_quotient(
    src_alg: &crate::algebra::QuiverAlgebra,
    quot: &AlgebraQuotient,
    x: &TwoTermComplex,
) -> TwoTermComplex {
    let b = &quot.algebra;
    let map_elem = |e: &crate::algebra::AlgElem| -> crate::algebra::AlgElem {
        let mut out = crate::algebra::elem_zero();
        for (idx, coef) in e {
            let bp = &src_alg.basis_paths()[*idx];
            if quot.vertex_map[bp.src].is_none() || quot.vertex_map[bp.tgt].is_none() {
                continue;
            }
            let mut seq = Vec::with_capacity(bp.seq.len());
            let mut dead = false;
            for &a in &bp.seq {
                match quot.arrow_map[a] {
                    Some(na) => seq.push(na),
                    None => {
                        dead = true;
                        break;
                    }
                }
            }
            if dead {
                continue;
            }
            let nf = b.path_elem(quot.vertex_map[bp.src].unwrap(), &seq);
            crate::algebra::elem_add_scaled(&mut out, &nf, coef);
        }
        out
    };
    let keep0: Vec<usize> = (0..x.summands_0().len())
        .filter(|&g| quot.vertex_map[x.summands_0()[g]].is_some())
        .collect();
    let keep1: Vec<usize> = (0..x.summands_minus1().len())
        .filter(|&h| quot.vertex_map[x.summands_minus1()[h]].is_some())
        .collect();
    let s0: Vec<usize> = keep0
        .iter()
        .map(|&g| quot.vertex_map[x.summands_0()[g]].unwrap())
        .collect();
    let sm1: Vec<usize> = keep1
        .iter()
        .map(|&h| quot.vertex_map[x.summands_minus1()[h]].unwrap())
        .collect();
    let diff: Vec<Vec<crate::algebra::AlgElem>> = keep0
        .iter()
        .map(|&g| {
            keep1
                .iter()
                .map(|&h| map_elem(x.diff_block(g, h)))
                .collect()
        })
        .collect();
    TwoTermComplex::from_summands(b.vertex_count(), sm1, s0, diff)
}

/// Decompose a two-term complex over the target algebra into catalog objects:
/// strip null-homotopic identity summands, split H^0, then account leftover
/// shifted projectives by g-vector bookkeeping.
pub fn decompose_complex(
    tgt: &Catalog,
    x: &TwoTermComplex,
) -> Result<Vec<(usize, usize)>, ReductionError> {
    let slim = minimize(&tgt.algebra, x);
    let mut out: Vec<(usize, usize)> = Vec::new();
    let h0 = slim.h0(&tgt.algebra);
    if !h0.is_zero() {
        for (m, mult) in decompose(&tgt.algebra, &h0)? {
            let obj = tgt.find_module(&m).ok_or_else(|| {
                ReductionError::UnmatchedSummand(format!("module of dims {:?}", m.dims))
            })?;
            out.push((obj, mult));
        }
    }
    // shifted projectives from the g-vector deficit
    let mut want = slim.g_vector();
    for &(obj, mult) in &out {
        for (w, gi) in want.iter_mut().zip(&tgt.objects[obj].g) {
            *w -= gi * mult as i64;
        }
    }
    for (v, w) in want.iter().enumerate() {
        if *w > 0 {
            return Err(ReductionError::UnmatchedSummand(format!(
                "positive g-deficit at vertex {}",
                v + 1
            )));
        }
        if *w < 0 {
            let obj = tgt
                .shifted_object(v)
                .ok_or_else(|| ReductionError::UnmatchedSummand("missing shift".into()))?;
            out.push((obj, (-*w) as usize));
        }
    }
    Ok(out)
}

/// The multiplicity matrix [pi N : M] of the quotient functor: rows indexed by
/// source objects, columns by target objects.
pub fn quotient_multiplicities(
    src: &Catalog,
    tgt: &Catalog,
    quot: &AlgebraQuotient,
) -> Result<Vec<Vec<i64>>, ReductionError> {
    let mut mat = vec![vec![0i64; tgt.len()]; src.len()];
    for n_obj in 0..src.len() {
        let img = tensor_quotient(&src.algebra, quot, &src.objects[n_obj].complex);
        for (obj, mult) in decompose_complex(tgt, &img)? {
            mat[n_obj][obj] += mult as i64;
        }
    }
    Ok(mat)
}

/// Verify functoriality of the quotient map: (i) substituting
/// phi(u_M) = prod u_N^{[pi N : M]} into every target Fhat - 1 vanishes on
/// the source parametrization, and (ii) v_M-bar equals prod v_N^{[pi N : M]}
/// as exact rational functions.
pub fn quotient_map_check(
    src: &Catalog,
    src_eq: &EquationSet,
    tgt: &Catalog,
    tgt_eq: &EquationSet,
    quot: &AlgebraQuotient,
) -> Result<(Report, Vec<Vec<i64>>), ReductionError> {
    let mut rep = Report::new(&format!("quotient map {} -> {}", src.name, tgt.name));
    let mults = quotient_multiplicities(src, tgt, quot)?;

    // (i) phi carries each Fhat - 1 into the parametrized ideal
    let images: Vec<Vec<i64>> = (0..tgt.len())
        .map(|m| (0..src.len()).map(|n_obj| mults[n_obj][m]).collect())
        .collect();
    for m in tgt.module_objects() {
        let fhat = tgt_eq.fhat(tgt, m)?;
        let pulled = fhat.monomial_substitute(src.len(), &images);
        let ok = src_eq.substitutes_to_constant(&pulled, &Int::one());
        rep.push(
            &format!("phi(Fhat({})) = 1 under v", tgt.objects[m].label),
            ok,
            String::new(),
        );
    }

    // (ii) exact identity v-bar = prod v^{mult}, with target y-variables
    // lifted along the surviving vertices
    let lift: Vec<usize> = (0..src.n())
        .filter(|&v| quot.vertex_map[v].is_some())
        .collect();
    for m in 0..tgt.len() {
        let vbar = tgt_eq.v_rational(m);
        let lifted = RatFn::new(
            lift_poly(&vbar.num, src.n(), &lift),
            lift_poly(&vbar.den, src.n(), &lift),
        );
        let mut prod = RatFn::one(src.n());
        for n_obj in 0..src.len() {
            let e = mults[n_obj][m];
            if e == 0 {
                continue;
            }
            assert!(e > 0, "multiplicities are nonnegative");
            for _ in 0..e {
                prod = prod.mul(src_eq.v_rational(n_obj));
            }
        }
        let ok = lifted.eq_ratfn(&prod);
        rep.push(
            &format!("v-bar({}) = prod v^mult", tgt.objects[m].label),
            ok,
            String::new(),
        );
    }
    Ok((rep, mults))
}

fn lift_poly(p: &Poly, src_n: usize, lift: &[usize]) -> Poly {
    let images: Vec<Vec<i64>> = (0..p.nvars())
        .map(|i| {
            let mut e = vec![0i64; src_n];
            e[lift[i]] = 1;
            e
        })
        .collect();
    p.monomial_substitute(src_n, &images)
}

/// Compose two multiplicity matrices: [pi_{AC} N : P] =
/// sum_M [pi_{AB} N : M] [pi_{BC} M : P].
pub fn compose_multiplicities(ab: &[Vec<i64>], bc: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = ab.len();
    let mid = bc.len();
    let cols = bc.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0i64; cols]; rows];
    for r in 0..rows {
        for k in 0..mid {
            if ab[r][k] == 0 {
                continue;
            }
            for c in 0..cols {
                out[r][c] += ab[r][k] * bc[k][c];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{IdealGen, Relation, RelationTerm};
    use crate::builtins;
    use crate::equations::EquationSet;

    fn path_rel(path: &[usize]) -> Relation {
        Relation {
            terms: vec![RelationTerm {
                coef: rat(1),
                path: path.to_vec(),
            }],
        }
    }

    #[test]
    fn jasso_a2_at_p1() {
        let src = builtins::load_catalog("a2").unwrap();
        let tgt = builtins::load_catalog("a1").unwrap();
        let focus = src.find_label("P1").unwrap();
        let map = jasso_match(&src, focus, &tgt).unwrap();
        // compatible objects: P2 and Sigma P2
        let p2 = src.find_label("P2").unwrap();
        let sp2 = src.find_label("ΣP2").unwrap();
        assert_eq!(
            map.images[p2],
            VarTarget::Variable(tgt.find_label("P1").unwrap())
        );
        assert_eq!(
            map.images[sp2],
            VarTarget::Variable(tgt.find_label("ΣP1").unwrap())
        );
        assert_eq!(map.images[focus], VarTarget::Zero);
        let s2 = src.find_label("S2").unwrap();
        assert_eq!(map.images[s2], VarTarget::One);

        let src_eq = EquationSet::build(&src).unwrap();
        let tgt_eq = EquationSet::build(&tgt).unwrap();
        let rep = jasso_substitution_check(&src, &src_eq, &tgt, &tgt_eq, &map).unwrap();
        assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn jasso_a2_loop_at_p2() {
        let src = builtins::load_catalog("a2-loop").unwrap();
        let tgt = builtins::load_catalog("loop2").unwrap();
        let focus = src.find_label("P2").unwrap();
        let map = jasso_match(&src, focus, &tgt).unwrap();
        // three compatible objects map onto ind K of the loop
        let hits: Vec<usize> = map
            .images
            .iter()
            .filter_map(|t| match t {
                VarTarget::Variable(j) => Some(*j),
                _ => None,
            })
            .collect();
        assert_eq!(hits.len(), 3);
        let src_eq = EquationSet::build(&src).unwrap();
        let tgt_eq = EquationSet::build(&tgt).unwrap();
        let rep = jasso_substitution_check(&src, &src_eq, &tgt, &tgt_eq, &map).unwrap();
        assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn tensor_quotient_splits_long_intervals() {
        // over the pelly quotient, presentations of long intervals split
        let src = builtins::load_catalog("an-3").unwrap();
        let tgt = builtins::load_catalog("pelly-3").unwrap();
        let quot = builtins::algebra_linear_pelly(3)
            .quotient(&[IdealGen::Element(path_rel(&[0, 1]))])
            .unwrap();
        // M_{0,4}: support 1..3 (whole), presentation 0 -> P1 over A_3;
        // M_{0,3}: support {1,2}, presentation P3 -> P1
        let m03 = src.find_label("M0,3").unwrap();
        let img = tensor_quotient(&src.algebra, &quot, &src.objects[m03].complex);
        let parts = decompose_complex(&tgt, &img).unwrap();
        // splits as P1 + Sigma P3
        let p1 = tgt.find_label("P1").unwrap();
        let sp3 = tgt.find_label("ΣP3").unwrap();
        let mut got = parts;
        got.sort_unstable();
        let mut want = vec![(p1, 1), (sp3, 1)];
        want.sort_unstable();
        assert_eq!(got, want);
        // M_{1,3} = S2 over A_3 stays the minimal presentation of S2
        let m13 = src.find_label("M1,3").unwrap();
        let img = tensor_quotient(&src.algebra, &quot, &src.objects[m13].complex);
        let parts = decompose_complex(&tgt, &img).unwrap();
        assert_eq!(parts, vec![(tgt.find_label("S2").unwrap(), 1)]);
        // projectives map to projectives
        let p1_src = src.find_label("M0,4").unwrap();
        assert_eq!(src.objects[p1_src].g, vec![1, 0, 0]);
        let img = tensor_quotient(&src.algebra, &quot, &src.objects[p1_src].complex);
        let parts = decompose_complex(&tgt, &img).unwrap();
        assert_eq!(parts, vec![(p1, 1)]);
    }

    #[test]
    fn killing_the_arrow_splits_s2() {
        // over a2 / <a> the presentation of S2 has zero differential, so it
        // splits as Sigma P1 + P2
        let src = builtins::load_catalog("a2").unwrap();
        let quot = builtins::algebra_linear_an(2, &[])
            .quotient(&[IdealGen::Element(path_rel(&[0]))])
            .unwrap();
        let tgt = crate::catalog::knit_directed("a2-killed", &quot.algebra).unwrap();
        assert_eq!(tgt.len(), 4); // two simples and their shifts
        let s2 = src.find_label("S2").unwrap();
        let img = tensor_quotient(&src.algebra, &quot, &src.objects[s2].complex);
        let mut parts = decompose_complex(&tgt, &img).unwrap();
        parts.sort_unstable();
        let p2 = tgt.projective_object(1).unwrap();
        let sp1 = tgt.shifted_object(0).unwrap();
        let mut want = vec![(p2, 1), (sp1, 1)];
        want.sort_unstable();
        assert_eq!(parts, want);
    }

    #[test]
    fn quotient_check_a3_to_a3rel() {
        let src = builtins::load_catalog("a3").unwrap();
        let tgt = builtins::load_catalog("a3-rel").unwrap();
        let quot = builtins::algebra_linear_an(3, &[])
            .quotient(&[IdealGen::Element(path_rel(&[1, 0]))])
            .unwrap();
        let src_eq = EquationSet::build(&src).unwrap();
        let tgt_eq = EquationSet::build(&tgt).unwrap();
        let (rep, mults) = quotient_map_check(&src, &src_eq, &tgt, &tgt_eq, &quot).unwrap();
        assert!(rep.passed(), "{}", rep);
        // v-bar_{P3} = v_{P3} v_{I2} and v-bar_{SigmaP1} = v_{I2} v_{SigmaP1}
        let i2 = src.find_label("I2").unwrap();
        let p3_src = src.find_label("P3").unwrap();
        let p3_tgt = tgt.find_label("P3").unwrap();
        assert_eq!(mults[i2][p3_tgt], 1);
        assert_eq!(mults[p3_src][p3_tgt], 1);
        let sp1_src = src.find_label("ΣP1").unwrap();
        let sp1_tgt = tgt.find_label("ΣP1").unwrap();
        assert_eq!(mults[i2][sp1_tgt], 1);
        assert_eq!(mults[sp1_src][sp1_tgt], 1);
        // all other source objects map one-to-one
        for x in 0..src.len() {
            if x == i2 {
                continue;
            }
            let total: i64 = mults[x].iter().sum();
            assert_eq!(total, 1, "object {}", src.objects[x].label);
        }
    }

    #[test]
    fn trivial_quotient_is_identity() {
        let src = builtins::load_catalog("a2").unwrap();
        let quot = builtins::algebra_linear_an(2, &[]).quotient(&[]).unwrap();
        let src_eq = EquationSet::build(&src).unwrap();
        let (rep, mults) = quotient_map_check(&src, &src_eq, &src, &src_eq, &quot).unwrap();
        assert!(rep.passed(), "{}", rep);
        for (i, row) in mults.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, (i == j) as i64);
            }
        }
    }

    #[test]
    fn functoriality_chain() {
        // a3 -> a3-rel -> a3-rel/<b> (an a2 next to an isolated point)
        let a3 = builtins::load_catalog("a3").unwrap();
        let a3rel = builtins::load_catalog("a3-rel").unwrap();
        let quot1 = builtins::algebra_linear_an(3, &[])
            .quotient(&[IdealGen::Element(path_rel(&[1, 0]))])
            .unwrap();
        let quot2 = a3rel
            .algebra
            .quotient(&[IdealGen::Element(path_rel(&[1]))])
            .unwrap();
        let end = crate::catalog::knit_directed("a2-plus-point", &quot2.algebra).unwrap();
        // direct quotient a3 -> end
        let quot_direct = builtins::algebra_linear_an(3, &[])
            .quotient(&[
                IdealGen::Element(path_rel(&[1, 0])),
                IdealGen::Element(path_rel(&[1])),
            ])
            .unwrap();
        let m1 = quotient_multiplicities(&a3, &a3rel, &quot1).unwrap();
        let m2 = quotient_multiplicities(&a3rel, &end, &quot2).unwrap();
        let direct = quotient_multiplicities(&a3, &end, &quot_direct).unwrap();
        assert_eq!(compose_multiplicities(&m1, &m2), direct);
    }
}
