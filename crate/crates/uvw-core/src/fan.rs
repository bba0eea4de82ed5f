//! The g-vector fan: rays from rigid objects, maximal cones from compatible
//! cliques, cone location, tropical evaluation, and the tropical
//! multiplicity checks.

use crate::catalog::Catalog;
use crate::equations::EquationSet;
use crate::linalg::RatMat;
use crate::module::SplitMix64;
use crate::poly::{Poly, RatFn};
use crate::rat::{rat, Rat};
use crate::report::Report;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FanError {
    #[error("sampled vector {0:?} lies in no maximal cone (fan incomplete)")]
    FanIncomplete(Vec<i64>),
    #[error("vector {0:?} lies outside the fan support")]
    OutsideSupport(Vec<i64>),
    #[error("maximal cone is not unimodular")]
    NotUnimodular,
}

#[derive(Debug, Clone)]
pub struct GFan {
    /// (object index, primitive g-vector) for each rigid object
    pub rays: Vec<(usize, Vec<i64>)>,
    /// maximal cones as sets of ray indices (into `rays`)
    pub max_cones: Vec<Vec<usize>>,
    /// integer inverse of each cone matrix (unimodularity makes them integral)
    cone_inverses: Vec<Vec<Vec<i64>>>,
    n: usize,
}

impl GFan {
    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Matrix with the cone's ray g-vectors as columns.
    fn cone_matrix(&self, cone: &[usize]) -> RatMat {
        let mut m = RatMat::zeros(self.n, cone.len());
        for (c, &r) in cone.iter().enumerate() {
            for i in 0..self.n {
                m.set(i, c, rat(self.rays[r].1[i]));
            }
        }
        m
    }

    /// Coordinates of g in the maximal cone `ci`, if all are nonnegative.
    pub fn cone_coordinates(&self, ci: usize, g: &[i64]) -> Option<Vec<i64>> {
        let inv = &self.cone_inverses[ci];
        let coords: Vec<i64> = inv
            .iter()
            .map(|row| row.iter().zip(g).map(|(a, b)| a * b).sum())
            .collect();
        if coords.iter().all(|&c| c >= 0) {
            Some(coords)
        } else {
            None
        }
    }

    /// Any maximal cone containing g.
    pub fn locate(&self, g: &[i64]) -> Option<(usize, Vec<i64>)> {
        for ci in 0..self.max_cones.len() {
            if let Some(coords) = self.cone_coordinates(ci, g) {
                return Some((ci, coords));
            }
        }
        None
    }
}

/// Build the g-vector fan of a catalog: rays are the rigid objects, maximal
/// cones the n-element pairwise-compatible ray sets (all of which must be
/// unimodular).
pub fn build_fan(cat: &Catalog) -> Result<GFan, FanError> {
    let n = cat.n();
    let rays: Vec<(usize, Vec<i64>)> = (0..cat.len())
        .filter(|&x| cat.objects[x].rigid)
        .map(|x| {
            let g = cat.objects[x].g.clone();
            let gcd = g.iter().fold(0i64, |acc, &v| gcd_i64(acc, v.abs()));
            assert!(gcd == 1, "rigid g-vector must be primitive");
            (x, g)
        })
        .collect();
    let r = rays.len();
    let compatible = |a: usize, b: usize| cat.c(rays[a].0, rays[b].0) == 0;
    // enumerate n-cliques of the compatibility graph
    let mut max_cones = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn cliques(
        start: usize,
        r: usize,
        n: usize,
        stack: &mut Vec<usize>,
        compatible: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() == n {
            out.push(stack.clone());
            return;
        }
        for cand in start..r {
            if stack.iter().all(|&s| compatible(s, cand)) {
                stack.push(cand);
                cliques(cand + 1, r, n, stack, compatible, out);
                stack.pop();
            }
        }
    }
    cliques(0, r, n, &mut stack, &compatible, &mut max_cones);
    let mut fan = GFan {
        rays,
        max_cones,
        cone_inverses: vec![],
        n,
    };
    // every maximal cone must be a unimodular basis; cache the integer
    // inverses for cone location
    for cone in fan.max_cones.clone() {
        let m = fan.cone_matrix(&cone);
        let det = m.det();
        if det != rat(1) && det != rat(-1) {
            return Err(FanError::NotUnimodular);
        }
        let inv = m.inverse().ok_or(FanError::NotUnimodular)?;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let v = inv.at(r, c);
                        assert!(v.denom() == &crate::rat::Int::from(1));
                        let x: i64 = v.numer().try_into().expect("small inverse entry");
                        x
                    })
                    .collect()
            })
            .collect();
        fan.cone_inverses.push(rows);
    }
    // light completeness sample at construction time; the verification
    // suites run the full-size scan
    let mut rng = SplitMix64::new(0xFA9);
    for _ in 0..500 {
        let g: Vec<i64> = (0..n).map(|_| rng.int_in(-10, 10)).collect();
        if fan.locate(&g).is_none() {
            return Err(FanError::FanIncomplete(g));
        }
    }
    Ok(fan)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// max over numerator exponents of <exp, g> minus the same max for the
/// denominator.
pub fn trop_eval(f: &RatFn, g: &[i64]) -> i64 {
    trop_poly(&f.num, g) - trop_poly(&f.den, g)
}

fn trop_poly(p: &Poly, g: &[i64]) -> i64 {
    assert!(!p.is_zero());
    p.terms()
        .map(|(e, _)| e.iter().zip(g).map(|(a, b)| a * b).sum::<i64>())
        .max()
        .unwrap()
}

/// Express g in the minimal cone containing it; the multiplicity map
/// object -> coefficient.
pub fn generic_multiplicities(
    fan: &GFan,
    g: &[i64],
) -> Result<Vec<(usize, i64)>, FanError> {
    if g.iter().all(|&x| x == 0) {
        return Ok(vec![]);
    }
    let (ci, coords) = fan.locate(g).ok_or(FanError::OutsideSupport(g.to_vec()))?;
    let mut out = Vec::new();
    for (&ray, &coord) in fan.max_cones[ci].iter().zip(&coords) {
        if coord != 0 {
            out.push((fan.rays[ray].0, coord));
        }
    }
    Ok(out)
}

/// Pairwise fan property: the intersection of two maximal cones is the cone
/// on their common rays. Checked exactly by enumerating the extreme rays of
/// the intersection from active constraint subsets.
pub fn check_fan_property(fan: &GFan) -> Result<bool, FanError> {
    let n = fan.n;
    for (i, ca) in fan.max_cones.iter().enumerate() {
        let ia = fan
            .cone_matrix(ca)
            .inverse()
            .ok_or(FanError::NotUnimodular)?;
        for cb in fan.max_cones.iter().skip(i + 1) {
            let ib = fan
                .cone_matrix(cb)
                .inverse()
                .ok_or(FanError::NotUnimodular)?;
            let common: Vec<usize> = ca
                .iter()
                .copied()
                .filter(|r| cb.contains(r))
                .collect();
            // constraints: rows of ia and ib, all >= 0
            let mut rows: Vec<Vec<Rat>> = Vec::new();
            for m in [&ia, &ib] {
                for r in 0..n {
                    rows.push((0..n).map(|c| m.at(r, c).clone()).collect());
                }
            }
            // candidate extreme rays: solve (n-1)-subsets of constraints = 0
            let idx: Vec<usize> = (0..rows.len()).collect();
            let mut candidates: Vec<Vec<Rat>> = Vec::new();
            subsets(&idx, n.saturating_sub(1), &mut |subset| {
                let mat = RatMat::from_rows(subset.iter().map(|&s| rows[s].clone()).collect());
                for dir in mat.nullspace() {
                    candidates.push(dir.clone());
                    candidates.push(dir.iter().map(|x| -x.clone()).collect());
                }
            });
            for cand in candidates {
                if cand.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let feasible = rows
                    .iter()
                    .all(|r| !dot_rat(r, &cand).is_negative());
                if !feasible {
                    continue;
                }
                // must lie in the common-ray cone
                let mut mat = RatMat::zeros(n, common.len());
                for (c, &ray) in common.iter().enumerate() {
                    for r in 0..n {
                        mat.set(r, c, rat(fan.rays[ray].1[r]));
                    }
                }
                let ok = match mat.solve(&cand) {
                    Some(sol) => {
                        sol.iter().all(|x| !x.is_negative())
                            && mat.apply(&sol) == cand
                    }
                    None => false,
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn subsets(idx: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(idx: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..idx.len() {
            cur.push(idx[i]);
            rec(idx, k, i + 1, cur, f);
            cur.pop();
        }
    }
    let mut cur = Vec::new();
    rec(idx, k, 0, &mut cur, f);
}

fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Completeness sampling: every integer point in the box lies in at least one
/// maximal cone, and interior membership is unique.
pub fn sample_completeness(
    fan: &GFan,
    samples: usize,
    radius: i64,
    seed: u64,
) -> Result<Report, FanError> {
    let mut rep = Report::new("fan completeness sampling");
    let mut rng = SplitMix64::new(seed);
    let mut interior_failures = Vec::new();
    for _ in 0..samples {
        let g: Vec<i64> = (0..fan.n).map(|_| rng.int_in(-radius, radius)).collect();
        let mut interior = 0usize;
        let mut any = 0usize;
        for ci in 0..fan.max_cones.len() {
            if let Some(coords) = fan.cone_coordinates(ci, &g) {
                any += 1;
                if coords.iter().all(|&c| c > 0) {
                    interior += 1;
                }
            }
        }
        if any == 0 {
            return Err(FanError::FanIncomplete(g));
        }
        if interior > 1 {
            interior_failures.push(format!("{:?} interior to {} cones", g, interior));
        }
        if interior == 0 && any == 0 {
            interior_failures.push(format!("{:?} uncovered", g));
        }
    }
    rep.push(
        "unique interior membership",
        interior_failures.is_empty(),
        interior_failures.join("; "),
    );
    rep.push("coverage", true, format!("{} samples covered", samples));
    Ok(rep)
}

/// Tropical checks: trop v_M(g_N) = -delta_{MN} on rigid rays, vanishing for
/// non-rigid M, and agreement with cone-expansion multiplicities at seeded
/// lattice points; linearity on each maximal cone via vertex sums.
pub fn check_trop_theorem(
    cat: &Catalog,
    eq: &EquationSet,
    fan: &GFan,
    seed: u64,
) -> Result<Report, FanError> {
    let mut rep = Report::new(&format!("tropical checks on {}", cat.name));
    let k = cat.len();

    // rays
    let mut ray_bad = Vec::new();
    for m in 0..k {
        let vm = eq.v_rational(m);
        for (obj, g) in &fan.rays {
            let t = trop_eval(vm, g);
            let want = if cat.objects[m].rigid && obj == &m { -1 } else { 0 };
            if t != want {
                ray_bad.push(format!(
                    "trop v_{}({}) = {} want {}",
                    cat.objects[m].label, cat.objects[*obj].label, t, want
                ));
            }
        }
    }
    rep.push("rays: trop v_M(g_N) = -delta", ray_bad.is_empty(), ray_bad.join("; "));

    // non-rigid objects vanish identically (rays plus 50 seeded samples)
    let mut rng = SplitMix64::new(seed);
    let mut nr_bad = Vec::new();
    for m in 0..k {
        if cat.objects[m].rigid {
            continue;
        }
        let vm = eq.v_rational(m);
        for _ in 0..50 {
            let g: Vec<i64> = (0..fan.n).map(|_| rng.int_in(-10, 10)).collect();
            if trop_eval(vm, &g) != 0 {
                nr_bad.push(format!("trop v_{}({:?}) != 0", cat.objects[m].label, g));
            }
        }
    }
    rep.push("non-rigid vanish", nr_bad.is_empty(), nr_bad.join("; "));

    // -trop v_M(g) = multiplicity of M in the generic presentation of weight g
    let mut mult_bad = Vec::new();
    for _ in 0..50 {
        let g: Vec<i64> = (0..fan.n).map(|_| rng.int_in(-10, 10)).collect();
        let mults = generic_multiplicities(fan, &g)?;
        for m in 0..k {
            let want = mults
                .iter()
                .find(|(obj, _)| *obj == m)
                .map(|(_, c)| *c)
                .unwrap_or(0);
            let got = -trop_eval(eq.v_rational(m), &g);
            if got != want {
                mult_bad.push(format!(
                    "at {:?}: mult of {} is {} but -trop v = {}",
                    g, cat.objects[m].label, want, got
                ));
            }
        }
    }
    rep.push(
        "cone multiplicities",
        mult_bad.is_empty(),
        mult_bad.join("; "),
    );

    // linearity on each maximal cone: trop v_M(sum of rays) = sum of values
    let mut lin_bad = Vec::new();
    for cone in &fan.max_cones {
        let total: Vec<i64> = (0..fan.n)
            .map(|i| cone.iter().map(|&r| fan.rays[r].1[i]).sum())
            .collect();
        for m in 0..k {
            let vm = eq.v_rational(m);
            let sum: i64 = cone.iter().map(|&r| trop_eval(vm, &fan.rays[r].1)).sum();
            if trop_eval(vm, &total) != sum {
                lin_bad.push(format!("object {} on cone {:?}", cat.objects[m].label, cone));
            }
        }
    }
    rep.push("linearity on cones", lin_bad.is_empty(), lin_bad.join("; "));
    Ok(rep)
}

/// The outer normal fan of the Newton polytope of prod_M F_M coincides with
/// the g-vector fan: a strictly interior functional of each maximal cone must
/// select a unique vertex of the product's support, all selected vertices
/// distinct, and their number equals the number of maximal cones. The product
/// polytope is a Minkowski sum, so the selected vertex is computed factorwise
/// (unique overall iff unique in every factor) without expanding the product.
pub fn check_newton_polytope(cat: &Catalog, eq: &EquationSet, fan: &GFan) -> Report {
    let mut rep = Report::new(&format!("Newton polytope / normal fan on {}", cat.name));
    let n = cat.n();
    let factors: Vec<Vec<Vec<i64>>> = cat
        .module_objects()
        .into_iter()
        .map(|m| eq.fpoly[m].terms().map(|(e, _)| e.clone()).collect())
        .collect();
    let mut selected: Vec<Vec<i64>> = Vec::new();
    let mut ok = true;
    let mut detail = String::new();
    'cones: for cone in &fan.max_cones {
        let w: Vec<i64> = (0..n)
            .map(|i| cone.iter().map(|&r| fan.rays[r].1[i]).sum())
            .collect();
        let mut vertex = vec![0i64; n];
        for support in &factors {
            let vals: Vec<i64> = support
                .iter()
                .map(|e| e.iter().zip(&w).map(|(a, b)| a * b).sum())
                .collect();
            let max = *vals.iter().max().unwrap();
            let argmax: Vec<usize> = (0..support.len()).filter(|&i| vals[i] == max).collect();
            if argmax.len() != 1 {
                ok = false;
                detail = format!("cone {:?} does not select a unique vertex", cone);
                break 'cones;
            }
            for (slot, x) in vertex.iter_mut().zip(&support[argmax[0]]) {
                *slot += x;
            }
        }
        selected.push(vertex);
    }
    if ok {
        let mut uniq = selected.clone();
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() != fan.max_cones.len() {
            ok = false;
            detail = "cones select coincident vertices".into();
        }
    }
    rep.push("interior functionals select unique vertices", ok, detail);
    rep
}

/// Count the cones of each dimension (faces of the maximal cones, counted as
/// distinct ray subsets); the zero cone is included in dimension 0.
pub fn cone_counts_by_dimension(fan: &GFan) -> Vec<usize> {
    let mut faces: Vec<std::collections::BTreeSet<Vec<usize>>> =
        vec![std::collections::BTreeSet::new(); fan.n + 1];
    for cone in &fan.max_cones {
        for mask in 0u32..(1 << cone.len()) {
            let face: Vec<usize> = cone
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &r)| r)
                .collect();
            faces[face.len()].insert(face);
        }
    }
    faces.into_iter().map(|s| s.len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::equations::EquationSet;

    #[test]
    fn pentagon_fan_of_a2() {
        let cat = builtins::load_catalog("a2").unwrap();
        let fan = build_fan(&cat).unwrap();
        assert_eq!(fan.ray_count(), 5);
        assert_eq!(fan.max_cones.len(), 5);
        assert!(check_fan_property(&fan).unwrap());
        let counts = cone_counts_by_dimension(&fan);
        assert_eq!(counts, vec![1, 5, 5]);
    }

    #[test]
    fn fan_of_a1() {
        let cat = builtins::load_catalog("a1").unwrap();
        let fan = build_fan(&cat).unwrap();
        assert_eq!(fan.ray_count(), 2);
        assert_eq!(fan.max_cones.len(), 2);
    }

    #[test]
    fn a2_loop_excludes_s1() {
        let cat = builtins::load_catalog("a2-loop").unwrap();
        let fan = build_fan(&cat).unwrap();
        // S1, 12 and 112 are the non-rigid objects (their u-equations carry
        // squared self-variables), so the fan has six rays
        for label in ["S1", "12", "112"] {
            let x = cat.find_label(label).unwrap();
            assert!(fan.rays.iter().all(|(obj, _)| *obj != x));
        }
        assert_eq!(fan.ray_count(), 6);
        assert!(check_fan_property(&fan).unwrap());
    }

    #[test]
    fn trop_values_of_a2() {
        let cat = builtins::load_catalog("a2").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let p1 = cat.find_label("P1").unwrap();
        // v_{P1} = 1/(1+y1)
        assert_eq!(trop_eval(eq.v_rational(p1), &[1, 0]), -1);
        assert_eq!(trop_eval(eq.v_rational(p1), &[0, 1]), 0);
        let one = RatFn::one(2);
        assert_eq!(trop_eval(&one, &[5, -7]), 0);
    }

    #[test]
    fn generic_multiplicity_examples() {
        let cat = builtins::load_catalog("a2").unwrap();
        let fan = build_fan(&cat).unwrap();
        let p1 = cat.find_label("P1").unwrap();
        let p2 = cat.find_label("P2").unwrap();
        // g = (1,1) = g(P1) + g(P2)
        let mut mults = generic_multiplicities(&fan, &[1, 1]).unwrap();
        mults.sort_unstable();
        let mut expected = vec![(p1, 1), (p2, 1)];
        expected.sort_unstable();
        assert_eq!(mults, expected);
        assert!(generic_multiplicities(&fan, &[0, 0]).unwrap().is_empty());
        // rigid ray: multiplicity one for itself
        let s2 = cat.find_label("S2").unwrap();
        let g = cat.objects[s2].g.clone();
        assert_eq!(generic_multiplicities(&fan, &g).unwrap(), vec![(s2, 1)]);
    }

    #[test]
    fn tropical_theorem_small() {
        for name in ["a2", "loop2", "a2-loop"] {
            let cat = builtins::load_catalog(name).unwrap();
            let eq = EquationSet::build(&cat).unwrap();
            let fan = build_fan(&cat).unwrap();
            let rep = check_trop_theorem(&cat, &eq, &fan, 0x7777).unwrap();
            assert!(rep.passed(), "{}:\n{}", name, rep);
        }
    }

    #[test]
    fn newton_polytope_normal_fan() {
        for name in ["a2", "a3", "a2-loop"] {
            let cat = builtins::load_catalog(name).unwrap();
            let eq = EquationSet::build(&cat).unwrap();
            let fan = build_fan(&cat).unwrap();
            let rep = check_newton_polytope(&cat, &eq, &fan);
            assert!(rep.passed(), "{}:\n{}", name, rep);
        }
    }

    #[test]
    fn sampling_completeness_a2() {
        let cat = builtins::load_catalog("a2").unwrap();
        let fan = build_fan(&cat).unwrap();
        let rep = sample_completeness(&fan, 2000, 10, 0x1234).unwrap();
        assert!(rep.passed(), "{}", rep);
    }
}
