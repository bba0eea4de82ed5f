//! Built-in algebras and catalogs.
//!
//! Quivers are stored with arrows reversed relative to the usual pictures so
//! that right modules come out with the standard projective structure (for
//! the linear quivers: P1 simple at the sink). Every built-in reproduces the
//! corresponding worked example tables.

use crate::algebra::{Arrow, BuildOptions, IdealGen, QuiverAlgebra, Relation, RelationTerm};
use crate::catalog::{build_catalog, knit_directed, Catalog, CatalogError};
use crate::homotopy::TwoTermComplex;
use crate::module::{injective_module, projective_module, simple_module, ModuleRep};
use crate::rat::rat;

fn arrow(id: &str, src: usize, tgt: usize) -> Arrow {
    Arrow {
        id: id.into(),
        src,
        tgt,
    }
}

fn path_rel(path: &[usize]) -> Relation {
    Relation {
        terms: vec![RelationTerm {
            coef: rat(1),
            path: path.to_vec(),
        }],
    }
}

pub fn builtin_names() -> Vec<String> {
    let mut names = vec![
        "a1".to_string(),
        "a2".to_string(),
        "a3".to_string(),
        "a3-rel".to_string(),
        "preproj-a2".to_string(),
        "a2-loop".to_string(),
        "grid-3-6".to_string(),
    ];
    for d in 2..=9 {
        names.push(format!("loop{}", d));
    }
    for n in 1..=6 {
        names.push(format!("pelly-{}", n));
    }
    for n in 2..=6 {
        names.push(format!("an-{}", n));
    }
    names
}

/// Linear A_n quiver oriented so that P1 is simple (arrows i+1 -> i), with
/// the given monomial relations (arrow index sequences).
pub fn algebra_linear_an(n: usize, relation_paths: &[Vec<usize>]) -> QuiverAlgebra {
    let arrows: Vec<Arrow> = (0..n.saturating_sub(1))
        .map(|i| arrow(&format!("a{}", i + 1), i + 1, i))
        .collect();
    let relations = relation_paths.iter().map(|p| path_rel(p)).collect();
    QuiverAlgebra::build(n, arrows, relations, BuildOptions::default()).unwrap()
}

/// Linear A_n quiver oriented the other way (arrows i -> i+1, P_n simple).
/// This is the orientation the pellytope quotient lives over.
pub fn algebra_linear_pelly(n: usize) -> QuiverAlgebra {
    let arrows: Vec<Arrow> = (0..n.saturating_sub(1))
        .map(|i| arrow(&format!("a{}", i + 1), i, i + 1))
        .collect();
    QuiverAlgebra::build(n, arrows, vec![], BuildOptions::default()).unwrap()
}

/// The pellytope algebra: linear A_n with all length-two paths zero.
pub fn algebra_pelly(n: usize) -> QuiverAlgebra {
    let base = algebra_linear_pelly(n);
    let gens: Vec<IdealGen> = (0..n.saturating_sub(2))
        .map(|i| IdealGen::Element(path_rel(&[i, i + 1])))
        .collect();
    base.quotient(&gens).unwrap().algebra
}

pub fn algebra_a2_loop() -> QuiverAlgebra {
    // vertex 0 carries the loop x; a: 1 -> 0; x^2 = 0
    QuiverAlgebra::build(
        2,
        vec![arrow("x", 0, 0), arrow("a", 1, 0)],
        vec![path_rel(&[0, 0])],
        BuildOptions::default(),
    )
    .unwrap()
}

pub fn algebra_loop(d: usize) -> QuiverAlgebra {
    QuiverAlgebra::build(
        1,
        vec![arrow("x", 0, 0)],
        vec![path_rel(&vec![0; d])],
        BuildOptions::default(),
    )
    .unwrap()
}

pub fn algebra_preproj_a2() -> QuiverAlgebra {
    QuiverAlgebra::build(
        2,
        vec![arrow("a", 0, 1), arrow("b", 1, 0)],
        vec![path_rel(&[0, 1]), path_rel(&[1, 0])],
        BuildOptions::default(),
    )
    .unwrap()
}

/// The 2x2 grid quiver (Grassmannian k=3, n=6 case) with both mixed
/// length-two paths zero; stored reversed like the other built-ins.
pub fn algebra_grid_3_6() -> QuiverAlgebra {
    // vertices: 0 = corner sink, 1 and 2 = middle, 3 = corner source
    let arrows = vec![
        arrow("r1", 1, 0),
        arrow("r2", 3, 2),
        arrow("d1", 2, 0),
        arrow("d2", 3, 1),
    ];
    let relations = vec![path_rel(&[1, 2]), path_rel(&[3, 0])];
    QuiverAlgebra::build(4, arrows, relations, BuildOptions::default()).unwrap()
}

/// Cokernel of the map P_w -> P_v given by left multiplication with a path.
fn coker_of_path(a: &QuiverAlgebra, w: usize, v: usize, seq: &[usize]) -> ModuleRep {
    let elem = a.path_elem(v, seq);
    assert!(!elem.is_empty(), "presentation path vanishes");
    let complex = TwoTermComplex::from_summands(a.vertex_count(), vec![w], vec![v], vec![vec![elem]]);
    complex.h0(a)
}

pub fn load_catalog(name: &str) -> Result<Catalog, CatalogError> {
    match name {
        "a1" => {
            let a = algebra_linear_an(1, &[]);
            let mods = vec![("P1".to_string(), projective_module(&a, 0))];
            build_catalog(name, a, mods)
        }
        "a2" => {
            let a = algebra_linear_an(2, &[]);
            let mods = vec![
                ("P1".to_string(), projective_module(&a, 0)),
                ("P2".to_string(), projective_module(&a, 1)),
                ("S2".to_string(), simple_module(&a, 1)),
            ];
            build_catalog(name, a, mods)
        }
        "a3" => {
            let a = algebra_linear_an(3, &[]);
            let op = a.opposite();
            let mods = vec![
                ("P1".to_string(), projective_module(&a, 0)),
                ("P2".to_string(), projective_module(&a, 1)),
                ("P3".to_string(), projective_module(&a, 2)),
                ("S2".to_string(), simple_module(&a, 1)),
                ("I2".to_string(), injective_module(&op, 1)),
                ("S3".to_string(), simple_module(&a, 2)),
            ];
            build_catalog(name, a, mods)
        }
        "a3-rel" => {
            // a3 modulo the length-two path (b then a)
            let a3 = algebra_linear_an(3, &[]);
            let a = a3
                .quotient(&[IdealGen::Element(path_rel(&[1, 0]))])
                .unwrap()
                .algebra;
            let mods = vec![
                ("P1".to_string(), projective_module(&a, 0)),
                ("P2".to_string(), projective_module(&a, 1)),
                ("P3".to_string(), projective_module(&a, 2)),
                ("S2".to_string(), simple_module(&a, 1)),
                ("S3".to_string(), simple_module(&a, 2)),
            ];
            build_catalog(name, a, mods)
        }
        "preproj-a2" => {
            let a = algebra_preproj_a2();
            let mods = vec![
                ("P1".to_string(), projective_module(&a, 0)),
                ("P2".to_string(), projective_module(&a, 1)),
                ("S1".to_string(), simple_module(&a, 0)),
                ("S2".to_string(), simple_module(&a, 1)),
            ];
            build_catalog(name, a, mods)
        }
        "a2-loop" => {
            let a = algebra_a2_loop();
            let op = a.opposite();
            let m12 = coker_of_path(&a, 0, 1, &[1, 0]); // P1 --ax--> P2
            let m112 = {
                // P1 --[x, a]--> P1 + P2
                let x = a.path_elem(0, &[0]);
                let arr = a.path_elem(1, &[1]);
                let complex =
                    TwoTermComplex::from_summands(2, vec![0], vec![0, 1], vec![vec![x], vec![arr]]);
                complex.h0(&a)
            };
            let mods = vec![
                ("P1".to_string(), projective_module(&a, 0)),
                ("P2".to_string(), projective_module(&a, 1)),
                ("S1".to_string(), simple_module(&a, 0)),
                ("S2".to_string(), simple_module(&a, 1)),
                ("I1".to_string(), injective_module(&op, 0)),
                ("12".to_string(), m12),
                ("112".to_string(), m112),
            ];
            build_catalog(name, a, mods)
        }
        "grid-3-6" => knit_directed(name, &algebra_grid_3_6()),
        _ => {
            if let Some(d) = name.strip_prefix("loop") {
                let d: usize = d
                    .parse()
                    .map_err(|_| CatalogError::UnknownCatalog(name.into()))?;
                if !(2..=9).contains(&d) {
                    return Err(CatalogError::UnknownCatalog(name.into()));
                }
                let a = algebra_loop(d);
                let mut mods = vec![("P".to_string(), projective_module(&a, 0))];
                for k in 1..d {
                    let label = if k == 1 {
                        "S".to_string()
                    } else {
                        format!("M{}", k)
                    };
                    mods.push((label, coker_of_path(&a, 0, 0, &vec![0; k])));
                }
                return build_catalog(name, a, mods);
            }
            if let Some(nstr) = name.strip_prefix("pelly-") {
                let n: usize = nstr
                    .parse()
                    .map_err(|_| CatalogError::UnknownCatalog(name.into()))?;
                if !(1..=6).contains(&n) {
                    return Err(CatalogError::UnknownCatalog(name.into()));
                }
                let a = algebra_pelly(n);
                let mut mods = Vec::new();
                for i in 0..n.saturating_sub(1) {
                    mods.push((format!("P{}", i + 1), projective_module(&a, i)));
                }
                for i in 0..n {
                    mods.push((format!("S{}", i + 1), simple_module(&a, i)));
                }
                return build_catalog(name, a, mods);
            }
            if let Some(nstr) = name.strip_prefix("an-") {
                let n: usize = nstr
                    .parse()
                    .map_err(|_| CatalogError::UnknownCatalog(name.into()))?;
                if !(2..=6).contains(&n) {
                    return Err(CatalogError::UnknownCatalog(name.into()));
                }
                let a = algebra_linear_pelly(n);
                // interval modules, labelled by polygon chords: M{i},{j} is
                // supported on vertices i+1 .. j-1 (1-indexed)
                let mut mods = Vec::new();
                for i in 0..n {
                    for j in (i + 2)..=(n + 1) {
                        mods.push((format!("M{},{}", i, j), interval_module(&a, i, j - 2)));
                    }
                }
                return build_catalog(name, a, mods);
            }
            Err(CatalogError::UnknownCatalog(name.into()))
        }
    }
}

/// Interval module over the pelly-oriented linear quiver: dimension one on
/// vertices lo..=hi, identity arrow maps inside the interval.
pub fn interval_module(a: &QuiverAlgebra, lo: usize, hi: usize) -> ModuleRep {
    let n = a.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| (lo <= v && v <= hi) as usize).collect();
    let maps = a
        .arrows()
        .iter()
        .map(|ar| {
            let mut m = crate::linalg::RatMat::zeros(dims[ar.tgt], dims[ar.src]);
            if dims[ar.src] == 1 && dims[ar.tgt] == 1 {
                m.set(0, 0, rat(1));
            }
            m
        })
        .collect();
    ModuleRep { dims, maps }
}

/// Built-in Jasso reduction pairings: (source catalog, focus label, target).
pub fn jasso_pairs() -> Vec<(&'static str, &'static str, &'static str)> {
    vec![
        ("a2", "P1", "a1"),
        ("a3", "P1", "a2"),
        ("a2-loop", "P2", "loop2"),
    ]
}

/// Built-in quotient pairings (source catalog, target catalog).
pub fn quotient_pairs() -> Vec<(String, String)> {
    let mut out = vec![("a3".to_string(), "a3-rel".to_string())];
    for n in 2..=6 {
        out.push((format!("an-{}", n), format!("pelly-{}", n)));
    }
    out
}

/// The ideal presentation of a built-in quotient pair, as a quotient of the
/// source catalog's algebra.
pub fn quotient_for(src: &str, tgt: &str) -> Option<crate::algebra::AlgebraQuotient> {
    match (src, tgt) {
        ("a3", "a3-rel") => Some(
            algebra_linear_an(3, &[])
                .quotient(&[IdealGen::Element(path_rel(&[1, 0]))])
                .unwrap(),
        ),
        _ => {
            let n: usize = src.strip_prefix("an-")?.parse().ok()?;
            if tgt != format!("pelly-{}", n) {
                return None;
            }
            let gens: Vec<IdealGen> = (0..n.saturating_sub(2))
                .map(|i| IdealGen::Element(path_rel(&[i, i + 1])))
                .collect();
            Some(algebra_linear_pelly(n).quotient(&gens).unwrap())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes_match_the_tables() {
        assert_eq!(load_catalog("a1").unwrap().len(), 2);
        assert_eq!(load_catalog("a2").unwrap().len(), 5);
        assert_eq!(load_catalog("preproj-a2").unwrap().len(), 6);
        assert_eq!(load_catalog("a3").unwrap().len(), 9);
        assert_eq!(load_catalog("a3-rel").unwrap().len(), 8);
        assert_eq!(load_catalog("a2-loop").unwrap().len(), 9);
        assert_eq!(load_catalog("loop2").unwrap().len(), 3);
        assert_eq!(load_catalog("pelly-3").unwrap().len(), 8); // 3n - 1
        assert_eq!(load_catalog("pelly-4").unwrap().len(), 11);
    }

    #[test]
    fn a2_loop_modulo_the_arrow_is_a_loop_and_a_point() {
        let a = algebra_a2_loop();
        let q = a
            .quotient(&[crate::algebra::IdealGen::Element(path_rel(&[1]))])
            .unwrap();
        // product of the square-zero loop algebra and a point: dim 2 + 1
        assert_eq!(q.algebra.vertex_count(), 2);
        assert_eq!(q.algebra.dim(), 3);
        assert_eq!(q.algebra.arrows().len(), 1);
    }

    #[test]
    fn unknown_catalog() {
        assert!(matches!(
            load_catalog("nope"),
            Err(CatalogError::UnknownCatalog(_))
        ));
    }

    #[test]
    fn a2_loop_dimension_vectors() {
        let cat = load_catalog("a2-loop").unwrap();
        let d = |label: &str| cat.objects[cat.find_label(label).unwrap()].d.clone();
        assert_eq!(d("P1"), vec![2, 0]);
        assert_eq!(d("P2"), vec![2, 1]);
        assert_eq!(d("I1"), vec![2, 2]);
        assert_eq!(d("12"), vec![1, 1]);
        assert_eq!(d("112"), vec![2, 1]);
        // g-vectors
        let g = |label: &str| cat.objects[cat.find_label(label).unwrap()].g.clone();
        assert_eq!(g("S1"), vec![0, 0]); // non-rigid
        assert_eq!(g("I1"), vec![-1, 2]);
        assert_eq!(g("112"), vec![0, 1]);
        assert!(!cat.objects[cat.find_label("S1").unwrap()].rigid);
        assert_eq!(cat.c(cat.find_label("S1").unwrap(), cat.find_label("S1").unwrap()), 2);
    }

    #[test]
    fn an_catalog_is_the_polygon() {
        let cat = load_catalog("an-2").unwrap();
        assert_eq!(cat.len(), 5); // chords of the pentagon
        let cat3 = load_catalog("an-3").unwrap();
        assert_eq!(cat3.len(), 9);
    }
}
