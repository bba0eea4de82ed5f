//! Quiver algebras with relations.
//!
//! An algebra is presented by a quiver (vertices, arrows) and a set of
//! relations, each a rational combination of parallel paths of length at least
//! two. Paths compose left to right: in `p * q` the path `p` is traversed
//! first, so `p * q` is defined when `tgt(p) == src(q)`. Modules are right
//! modules; the built-in catalogs orient their quivers so that the usual
//! tables (indecomposable projectives, minimal presentations) come out in the
//! standard form.
//!
//! The basis of the quotient algebra is computed by breadth-first path
//! enumeration: at each length, all padded relation elements are fed into a
//! linear reducer, and enumeration stops at the first length where every path
//! reduces to a combination of shorter basis paths. For ideals that are not
//! homogeneous in path length this stopping rule is a desk-scale heuristic;
//! every algebra shipped with the crate has monomial or length-homogeneous
//! relations, for which it is exact.

use crate::rat::{format_rat, Rat};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// One term of a relation: `coef` times a path given as arrow indices.
#[derive(Debug, Clone)]
pub struct RelationTerm {
    pub coef: Rat,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("algebra is infinite-dimensional at path length {level} ({count} paths alive)")]
    InfiniteDimensional { level: usize, count: usize },
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("bad algebra description: {0}")]
    BadDescription(String),
}

/// Key identifying a path: the arrow sequence plus, for trivial paths, the
/// vertex. Ordered by (length, sequence, source), which is the term order the
/// reducer eliminates against.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PKey {
    len: usize,
    seq: Vec<usize>,
    src: usize,
}

impl PKey {
    fn trivial(v: usize) -> Self {
        PKey {
            len: 0,
            seq: vec![],
            src: v,
        }
    }
    fn of(seq: Vec<usize>, src: usize) -> Self {
        PKey {
            len: seq.len(),
            seq,
            src,
        }
    }
}

type LinComb = BTreeMap<PKey, Rat>;

fn comb_add(acc: &mut LinComb, key: PKey, coef: Rat) {
    if coef.is_zero() {
        return;
    }
    match acc.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get().clone() + coef;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coef);
        }
    }
}

/// Element of the algebra as a rational combination of basis paths.
pub type AlgElem = BTreeMap<usize, Rat>;

pub fn elem_zero() -> AlgElem {
    BTreeMap::new()
}

pub fn elem_basis(i: usize) -> AlgElem {
    let mut e = BTreeMap::new();
    e.insert(i, Rat::one());
    e
}

pub fn elem_add_scaled(acc: &mut AlgElem, other: &AlgElem, scale: &Rat) {
    for (k, v) in other {
        let add = v * scale;
        if add.is_zero() {
            continue;
        }
        match acc.entry(*k) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let nv = e.get().clone() + add;
                if nv.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = nv;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(add);
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct BasisPath {
    pub seq: Vec<usize>,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone)]
pub struct QuiverAlgebra {
    n: usize,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
    basis: Vec<BasisPath>,
    /// `mult[i][j]` = basis_i * basis_j (empty when not composable).
    mult: Vec<Vec<AlgElem>>,
    /// basis indices of paths from s to t
    by_pair: Vec<Vec<Vec<usize>>>,
    /// index of the trivial path at each vertex
    trivial: Vec<usize>,
}

impl std::fmt::Debug for QuiverAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "QuiverAlgebra(n={}, arrows={}, dim={})",
            self.n,
            self.arrows.len(),
            self.basis.len()
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub max_path_length: usize,
    pub max_paths_per_level: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_path_length: 64,
            max_paths_per_level: 4096,
        }
    }
}

/// A generator for `quotient_algebra`: either an ideal element (combination of
/// parallel paths, single arrows allowed) or a vertex idempotent.
#[derive(Debug, Clone)]
pub enum IdealGen {
    Element(Relation),
    Vertex(usize),
}

/// Result of a quotient: the new algebra plus vertex/arrow index maps
/// (None = deleted).
#[derive(Debug, Clone)]
pub struct AlgebraQuotient {
    pub algebra: QuiverAlgebra,
    pub vertex_map: Vec<Option<usize>>,
    pub arrow_map: Vec<Option<usize>>,
}

impl QuiverAlgebra {
    pub fn build(
        n: usize,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
        opts: BuildOptions,
    ) -> Result<Self, AlgebraError> {
        for a in &arrows {
            if a.src >= n || a.tgt >= n {
                return Err(AlgebraError::BadDescription(format!(
                    "arrow {} endpoints out of range",
                    a.id
                )));
            }
        }
        validate_relations(&arrows, &relations, 2)?;
        Self::build_unchecked(n, arrows, relations, opts)
    }

    fn build_unchecked(
        n: usize,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
        opts: BuildOptions,
    ) -> Result<Self, AlgebraError> {
        // Breadth-first path enumeration with a linear reducer for the ideal.
        let mut rules: HashMap<PKey, LinComb> = HashMap::new();
        let mut levels: Vec<Vec<PKey>> = Vec::new();
        levels.push((0..n).map(PKey::trivial).collect());

        let path_tgt = |key: &PKey| -> usize {
            if key.len == 0 {
                key.src
            } else {
                arrows[*key.seq.last().unwrap()].tgt
            }
        };

        let reduce = |rules: &HashMap<PKey, LinComb>, mut elem: LinComb| -> LinComb {
            loop {
                let hit = elem
                    .iter()
                    .rev()
                    .find(|(k, _)| rules.contains_key(*k))
                    .map(|(k, c)| (k.clone(), c.clone()));
                let Some((key, coef)) = hit else { break };
                elem.remove(&key);
                let rhs = rules.get(&key).unwrap().clone();
                for (k, v) in rhs {
                    comb_add(&mut elem, k, v * &coef);
                }
            }
            elem
        };

        let mut stop_len = None;
        for len in 1..=opts.max_path_length {
            // raw paths of this length
            let prev = &levels[len - 1];
            let mut cur = Vec::new();
            for p in prev {
                let t = path_tgt(p);
                for (ai, a) in arrows.iter().enumerate() {
                    if a.src == t {
                        let mut seq = p.seq.clone();
                        seq.push(ai);
                        cur.push(PKey::of(seq, p.src));
                    }
                }
            }
            if cur.len() > opts.max_paths_per_level {
                return Err(AlgebraError::InfiniteDimensional {
                    level: len,
                    count: cur.len(),
                });
            }
            // padded relation elements whose longest term has this length
            for rel in &relations {
                let max_term = rel.terms.iter().map(|t| t.path.len()).max().unwrap_or(0);
                if max_term > len {
                    continue;
                }
                let pad = len - max_term;
                let (rs, rt) = rel_endpoints(&arrows, rel);
                for la in 0..=pad {
                    let lb = pad - la;
                    for left in paths_into(&levels, la, path_tgt, rs) {
                        for right in paths_out_of(&levels, lb, rt) {
                            let mut elem: LinComb = BTreeMap::new();
                            for t in &rel.terms {
                                let mut seq = left.seq.clone();
                                seq.extend_from_slice(&t.path);
                                seq.extend_from_slice(&right.seq);
                                comb_add(&mut elem, PKey::of(seq, left.src), t.coef.clone());
                            }
                            let nf = reduce(&rules, elem);
                            if let Some((lead, lc)) = nf.iter().next_back().map(|(k, c)| (k.clone(), c.clone()))
                            {
                                let mut rhs: LinComb = BTreeMap::new();
                                for (k, v) in nf {
                                    if k != lead {
                                        rhs.insert(k, -v / &lc);
                                    }
                                }
                                rules.insert(lead, rhs);
                            }
                        }
                    }
                }
            }
            let alive = cur.iter().filter(|p| !rules.contains_key(*p)).count();
            levels.push(cur);
            if alive == 0 {
                stop_len = Some(len);
                break;
            }
        }
        let Some(_stop) = stop_len else {
            let last = levels.last().map_or(0, |l| l.len());
            return Err(AlgebraError::InfiniteDimensional {
                level: opts.max_path_length,
                count: last,
            });
        };

        // Collect the basis, in (length, lex) order.
        let mut basis = Vec::new();
        for level in &levels {
            for p in level {
                if !rules.contains_key(p) {
                    basis.push(BasisPath {
                        seq: p.seq.clone(),
                        src: p.src,
                        tgt: path_tgt(p),
                    });
                }
            }
        }
        let index_of: HashMap<PKey, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| (PKey::of(b.seq.clone(), b.src), i))
            .collect();
        let trivial: Vec<usize> = (0..n)
            .map(|v| *index_of.get(&PKey::trivial(v)).expect("trivial path must survive"))
            .collect();

        // Multiplication table. Products are folded one arrow at a time so the
        // reducer never needs rules beyond the enumerated lengths.
        let dim = basis.len();
        let nf_of = |rules: &HashMap<PKey, LinComb>, key: PKey| -> LinComb {
            reduce(rules, BTreeMap::from([(key, Rat::one())]))
        };
        let mut ext_cache: HashMap<(usize, usize), AlgElem> = HashMap::new();
        let mut extend_by_arrow = |i: usize, a: usize, basis: &Vec<BasisPath>| -> AlgElem {
            if let Some(e) = ext_cache.get(&(i, a)) {
                return e.clone();
            }
            let b = &basis[i];
            let out = if arrows[a].src != b.tgt {
                elem_zero()
            } else {
                let mut seq = b.seq.clone();
                seq.push(a);
                let nf = nf_of(&rules, PKey::of(seq, b.src));
                let mut e = elem_zero();
                for (k, v) in nf {
                    let idx = *index_of.get(&k).expect("normal form must be in basis");
                    e.insert(idx, v);
                }
                e
            };
            ext_cache.insert((i, a), out.clone());
            out
        };

        let mut mult = vec![vec![elem_zero(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let bj = basis[j].clone();
                if basis[i].tgt != bj.src {
                    continue;
                }
                // start with basis_i, then append the arrows of basis_j
                let mut acc = elem_basis(i);
                for &a in &bj.seq {
                    let mut next = elem_zero();
                    for (k, c) in &acc {
                        let ext = extend_by_arrow(*k, a, &basis);
                        elem_add_scaled(&mut next, &ext, c);
                    }
                    acc = next;
                }
                mult[i][j] = acc;
            }
        }

        let mut by_pair = vec![vec![Vec::new(); n]; n];
        for (i, b) in basis.iter().enumerate() {
            by_pair[b.src][b.tgt].push(i);
        }

        let alg = QuiverAlgebra {
            n,
            arrows,
            relations,
            basis,
            mult,
            by_pair,
            trivial,
        };
        alg.check_idempotents();
        alg.check_associativity();
        Ok(alg)
    }

    fn check_idempotents(&self) {
        for i in 0..self.n {
            for j in 0..self.n {
                let p = self.mult_basis(self.trivial[i], self.trivial[j]);
                if i == j {
                    assert_eq!(p, &elem_basis(self.trivial[i]), "idempotent not idempotent");
                } else {
                    assert!(p.is_empty(), "idempotents not orthogonal");
                }
            }
        }
    }

    fn check_associativity(&self) {
        let dim = self.basis.len();
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.mult[i][j].clone();
                for k in 0..dim {
                    let left = self.elem_mul(&ij, &elem_basis(k));
                    let right = self.elem_mul(&elem_basis(i), &self.mult[j][k]);
                    assert_eq!(left, right, "multiplication table not associative");
                }
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_paths(&self) -> &[BasisPath] {
        &self.basis
    }

    pub fn trivial_idx(&self, v: usize) -> usize {
        self.trivial[v]
    }

    /// Basis indices of paths from `s` to `t`.
    pub fn paths_between(&self, s: usize, t: usize) -> &[usize] {
        &self.by_pair[s][t]
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &AlgElem {
        &self.mult[i][j]
    }

    pub fn elem_mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        let mut out = elem_zero();
        for (i, ci) in a {
            for (j, cj) in b {
                let prod = &self.mult[*i][*j];
                if !prod.is_empty() {
                    let scale = ci * cj;
                    elem_add_scaled(&mut out, prod, &scale);
                }
            }
        }
        out
    }

    /// Normal form of a raw path (arrow index sequence), as an AlgElem.
    pub fn path_elem(&self, src: usize, seq: &[usize]) -> AlgElem {
        let mut acc = elem_basis(self.trivial[src]);
        for &a in seq {
            let arrow_elem = self.arrow_elem(a);
            acc = self.elem_mul(&acc, &arrow_elem);
            if acc.is_empty() {
                return acc;
            }
        }
        acc
    }

    /// The basis element corresponding to a single arrow. Relation leads have
    /// length at least two, so arrows always survive into the basis.
    pub fn arrow_elem(&self, a: usize) -> AlgElem {
        let arrow = &self.arrows[a];
        let idx = self.by_pair[arrow.src][arrow.tgt]
            .iter()
            .find(|&&i| self.basis[i].seq == [a])
            .copied()
            .expect("arrows are basis elements");
        elem_basis(idx)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Human-readable form of an element, e.g. `a*x - 1/2 e_1`.
    pub fn format_elem(&self, e: &AlgElem) -> String {
        if e.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in e {
            let b = &self.basis[*i];
            let path = if b.seq.is_empty() {
                format!("e_{}", b.src + 1)
            } else {
                b.seq
                    .iter()
                    .map(|&a| self.arrows[a].id.clone())
                    .collect::<Vec<_>>()
                    .join("*")
            };
            if c.is_one() {
                parts.push(path);
            } else {
                parts.push(format!("{} {}", format_rat(c), path));
            }
        }
        parts.join(" + ")
    }

    /// The opposite algebra: arrows reversed, relation paths reversed. Arrow
    /// and vertex indices are preserved.
    pub fn opposite(&self) -> QuiverAlgebra {
        let arrows: Vec<Arrow> = self
            .arrows
            .iter()
            .map(|a| Arrow {
                id: a.id.clone(),
                src: a.tgt,
                tgt: a.src,
            })
            .collect();
        let relations: Vec<Relation> = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|t| RelationTerm {
                        coef: t.coef.clone(),
                        path: t.path.iter().rev().copied().collect(),
                    })
                    .collect(),
            })
            .collect();
        QuiverAlgebra::build_unchecked(self.n, arrows, relations, BuildOptions::default())
            .expect("opposite of a finite-dimensional algebra is finite-dimensional")
    }

    /// Quotient by a two-sided ideal given by generators; vertex idempotents
    /// delete vertices.
    pub fn quotient(&self, gens: &[IdealGen]) -> Result<AlgebraQuotient, AlgebraError> {
        let mut killed_vertices = vec![false; self.n];
        let mut killed_arrows = vec![false; self.arrows.len()];
        let mut new_relations: Vec<Relation> = Vec::new();

        for g in gens {
            match g {
                IdealGen::Vertex(v) => {
                    if *v >= self.n {
                        return Err(AlgebraError::BadDescription(format!(
                            "vertex {} out of range",
                            v
                        )));
                    }
                    killed_vertices[*v] = true;
                }
                IdealGen::Element(rel) => {
                    if rel.terms.is_empty() {
                        continue;
                    }
                    rel_endpoints_checked(&self.arrows, rel)?;
                    let min_len = rel.terms.iter().map(|t| t.path.len()).min().unwrap();
                    if min_len == 0 {
                        return Err(AlgebraError::MalformedRelation(
                            "idempotent combinations must use vertex generators".into(),
                        ));
                    }
                    if min_len == 1 {
                        if rel.terms.len() == 1 && rel.terms[0].path.len() == 1 {
                            killed_arrows[rel.terms[0].path[0]] = true;
                        } else {
                            return Err(AlgebraError::MalformedRelation(
                                "length-1 terms are only supported as single-arrow generators"
                                    .into(),
                            ));
                        }
                    } else {
                        new_relations.push(rel.clone());
                    }
                }
            }
        }
        for (ai, a) in self.arrows.iter().enumerate() {
            if killed_vertices[a.src] || killed_vertices[a.tgt] {
                killed_arrows[ai] = true;
            }
        }

        let mut vertex_map = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !killed_vertices[v] {
                vertex_map[v] = Some(next);
                next += 1;
            }
        }
        let mut arrow_map = vec![None; self.arrows.len()];
        let mut new_arrows = Vec::new();
        for (ai, a) in self.arrows.iter().enumerate() {
            if !killed_arrows[ai] {
                arrow_map[ai] = Some(new_arrows.len());
                new_arrows.push(Arrow {
                    id: a.id.clone(),
                    src: vertex_map[a.src].unwrap(),
                    tgt: vertex_map[a.tgt].unwrap(),
                });
            }
        }

        let remap_rel = |rel: &Relation| -> Option<Relation> {
            let mut terms = Vec::new();
            for t in &rel.terms {
                if t.path.iter().any(|&a| killed_arrows[a]) {
                    continue; // the term is zero in the quotient
                }
                terms.push(RelationTerm {
                    coef: t.coef.clone(),
                    path: t.path.iter().map(|&a| arrow_map[a].unwrap()).collect(),
                });
            }
            if terms.is_empty() {
                None
            } else {
                Some(Relation { terms })
            }
        };

        let mut relations: Vec<Relation> = Vec::new();
        for r in self.relations.iter().chain(new_relations.iter()) {
            if let Some(rr) = remap_rel(r) {
                relations.push(rr);
            }
        }

        let algebra = QuiverAlgebra::build(next, new_arrows, relations, BuildOptions::default())?;
        Ok(AlgebraQuotient {
            algebra,
            vertex_map,
            arrow_map,
        })
    }
}

fn rel_endpoints(arrows: &[Arrow], rel: &Relation) -> (usize, usize) {
    let t = &rel.terms[0];
    let src = arrows[t.path[0]].src;
    let tgt = arrows[*t.path.last().unwrap()].tgt;
    (src, tgt)
}

fn rel_endpoints_checked(arrows: &[Arrow], rel: &Relation) -> Result<(usize, usize), AlgebraError> {
    let mut endpoints = None;
    for t in &rel.terms {
        if t.path.is_empty() {
            return Err(AlgebraError::MalformedRelation("empty path".into()));
        }
        for w in t.path.windows(2) {
            if arrows[w[0]].tgt != arrows[w[1]].src {
                return Err(AlgebraError::MalformedRelation(
                    "path is not composable".into(),
                ));
            }
        }
        let e = (arrows[t.path[0]].src, arrows[*t.path.last().unwrap()].tgt);
        match endpoints {
            None => endpoints = Some(e),
            Some(prev) if prev != e => {
                return Err(AlgebraError::MalformedRelation(
                    "terms are not parallel paths".into(),
                ))
            }
            _ => {}
        }
    }
    endpoints.ok_or_else(|| AlgebraError::MalformedRelation("relation has no terms".into()))
}

fn validate_relations(
    arrows: &[Arrow],
    relations: &[Relation],
    min_len: usize,
) -> Result<(), AlgebraError> {
    for rel in relations {
        rel_endpoints_checked(arrows, rel)?;
        for t in &rel.terms {
            if t.path.len() < min_len {
                return Err(AlgebraError::MalformedRelation(format!(
                    "relation term of length {} < {}",
                    t.path.len(),
                    min_len
                )));
            }
            if t.coef.is_zero() {
                return Err(AlgebraError::MalformedRelation("zero coefficient".into()));
            }
        }
    }
    Ok(())
}

fn paths_into<'a>(
    levels: &'a [Vec<PKey>],
    len: usize,
    path_tgt: impl Fn(&PKey) -> usize + 'a,
    tgt: usize,
) -> impl Iterator<Item = &'a PKey> + 'a {
    levels
        .get(len)
        .into_iter()
        .flatten()
        .filter(move |p| path_tgt(p) == tgt)
}

fn paths_out_of(levels: &[Vec<PKey>], len: usize, src: usize) -> impl Iterator<Item = &PKey> + '_ {
    levels
        .get(len)
        .into_iter()
        .flatten()
        .filter(move |p| p.src == src)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn arrow(id: &str, src: usize, tgt: usize) -> Arrow {
        Arrow {
            id: id.into(),
            src,
            tgt,
        }
    }

    fn monomial_rel(path: &[usize]) -> Relation {
        Relation {
            terms: vec![RelationTerm {
                coef: rat(1),
                path: path.to_vec(),
            }],
        }
    }

    #[test]
    fn a2_path_algebra_basis() {
        // one arrow, no relations: basis {e1, e2, a}
        let a = QuiverAlgebra::build(
            2,
            vec![arrow("a", 1, 0)],
            vec![],
            BuildOptions::default(),
        )
        .unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.paths_between(1, 0).len(), 1);
    }

    #[test]
    fn loop_with_square_zero() {
        let a = QuiverAlgebra::build(
            1,
            vec![arrow("x", 0, 0)],
            vec![monomial_rel(&[0, 0])],
            BuildOptions::default(),
        )
        .unwrap();
        // basis {e, x}
        assert_eq!(a.dim(), 2);
        let x = a.arrow_elem(0);
        assert!(a.elem_mul(&x, &x).is_empty());
    }

    #[test]
    fn free_loop_is_infinite() {
        let err = QuiverAlgebra::build(
            1,
            vec![arrow("x", 0, 0)],
            vec![],
            BuildOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::InfiniteDimensional { .. }));
    }

    #[test]
    fn relation_shape_checks() {
        let err = QuiverAlgebra::build(
            2,
            vec![arrow("a", 0, 1)],
            vec![monomial_rel(&[0])],
            BuildOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::MalformedRelation(_)));
    }

    #[test]
    fn quotient_by_path() {
        // a3 with relation b*a = 0 (stored arrows a: 1->0, b: 2->1; the long
        // path is [b, a])
        let a3 = QuiverAlgebra::build(
            3,
            vec![arrow("a", 1, 0), arrow("b", 2, 1)],
            vec![],
            BuildOptions::default(),
        )
        .unwrap();
        assert_eq!(a3.dim(), 6);
        let q = a3
            .quotient(&[IdealGen::Element(monomial_rel(&[1, 0]))])
            .unwrap();
        assert_eq!(q.algebra.dim(), 5);
        assert_eq!(q.algebra.vertex_count(), 3);
    }

    #[test]
    fn quotient_by_arrow_and_vertex() {
        let a2 = QuiverAlgebra::build(
            2,
            vec![arrow("a", 1, 0)],
            vec![],
            BuildOptions::default(),
        )
        .unwrap();
        // trivial quotient
        let q0 = a2.quotient(&[]).unwrap();
        assert_eq!(q0.algebra.dim(), a2.dim());
        // kill the arrow: semisimple of dim 2
        let q1 = a2
            .quotient(&[IdealGen::Element(monomial_rel(&[0]))])
            .unwrap();
        assert_eq!(q1.algebra.dim(), 2);
        // kill vertex 0: A1
        let q2 = a2.quotient(&[IdealGen::Vertex(0)]).unwrap();
        assert_eq!(q2.algebra.vertex_count(), 1);
        assert_eq!(q2.algebra.dim(), 1);
        assert_eq!(q2.vertex_map, vec![None, Some(0)]);
    }

    #[test]
    fn opposite_involution() {
        let a3 = QuiverAlgebra::build(
            3,
            vec![arrow("a", 1, 0), arrow("b", 2, 1)],
            vec![monomial_rel(&[1, 0])],
            BuildOptions::default(),
        )
        .unwrap();
        let op = a3.opposite();
        assert_eq!(op.dim(), a3.dim());
        let opop = op.opposite();
        assert_eq!(opop.dim(), a3.dim());
        assert_eq!(opop.arrows()[0].src, a3.arrows()[0].src);
    }
}
