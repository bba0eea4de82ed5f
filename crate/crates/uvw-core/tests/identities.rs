//! Cross-module invariants that the per-module unit tests do not already pin
//! down: dimension bookkeeping, F-polynomial multiplicativity and mesh
//! identities, v-formula normalizations, and a few property tests.

use num_traits::One;
use proptest::prelude::*;
use uvw_core::builtins::{self, load_catalog};
use uvw_core::equations::EquationSet;
use uvw_core::grassmann::f_polynomial;
use uvw_core::module::{direct_sum, projective_module};
use uvw_core::poly::Poly;
use uvw_core::rat::Int;

#[test]
fn algebra_dimension_is_sum_of_projectives() {
    for name in ["a2", "a3", "a3-rel", "preproj-a2", "a2-loop", "loop3", "pelly-4"] {
        let cat = load_catalog(name).unwrap();
        let a = &cat.algebra;
        let total: usize = (0..a.vertex_count())
            .map(|i| projective_module(a, i).total_dim())
            .sum();
        assert_eq!(a.dim(), total, "{}", name);
    }
}

#[test]
fn f_polynomials_have_unit_ends_and_nonnegative_coefficients() {
    for name in builtins::builtin_names() {
        let cat = load_catalog(&name).unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        for m in cat.module_objects() {
            let f = &eq.fpoly[m];
            assert_eq!(f.constant_term(), Int::one(), "{} {}", name, cat.objects[m].label);
            let top: Vec<i64> = cat.objects[m].d.clone();
            assert_eq!(f.coeff(&top), Int::one());
            for (_, c) in f.terms() {
                assert!(c > &Int::from(0), "{} has a nonpositive F-coefficient", name);
            }
        }
    }
}

#[test]
fn split_multiplicativity_of_f() {
    let cat = load_catalog("a2-loop").unwrap();
    let a = &cat.algebra;
    let mods = cat.module_objects();
    for &x in &mods {
        for &y in &mods {
            let sum = direct_sum(a, &[&cat.objects[x].h0, &cat.objects[y].h0]);
            let f_sum = f_polynomial(a, &sum).unwrap();
            let f_x = f_polynomial(a, &cat.objects[x].h0).unwrap();
            let f_y = f_polynomial(a, &cat.objects[y].h0).unwrap();
            assert_eq!(
                f_sum,
                f_x.mul(&f_y),
                "F not multiplicative on {} + {}",
                cat.objects[x].label,
                cat.objects[y].label
            );
        }
    }
}

#[test]
fn mesh_identity_for_f_polynomials() {
    // F_{tau M} F_M = F_E + y^{d(M)} for non-projective module objects
    for name in ["a2", "a3", "preproj-a2", "a2-loop", "loop3", "pelly-3"] {
        let cat = load_catalog(name).unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        for x in cat.module_objects() {
            if cat.is_projective_object(x) {
                continue;
            }
            let mid = cat.ar_middle_term(x).unwrap();
            let mut f_e = Poly::one(cat.n());
            for &(i, mult) in &mid.modules {
                for _ in 0..mult {
                    f_e = f_e.mul(&eq.fpoly[i]);
                }
            }
            let ydx = Poly::monomial(cat.n(), cat.objects[x].d.clone(), Int::one());
            let lhs = eq.fpoly[x].mul(&eq.fpoly_tau[x]);
            assert_eq!(lhs, f_e.add(&ydx), "{} at {}", name, cat.objects[x].label);
        }
    }
}

#[test]
fn v_normalizations() {
    // denominators have constant term one; shifted-projective numerators are
    // divisible by the matching y-variable
    for name in builtins::builtin_names() {
        let cat = load_catalog(&name).unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        for x in 0..cat.len() {
            let v = eq.v_rational(x);
            assert_eq!(v.den.constant_term(), Int::one(), "{} {}", name, cat.objects[x].label);
            if let uvw_core::catalog::ObjectKind::ShiftedProjective(i) = cat.objects[x].kind {
                assert!(
                    v.num.min_exponent(i) >= 1,
                    "{}: numerator of v[{}] not divisible by y{}",
                    name,
                    cat.objects[x].label,
                    i + 1
                );
            }
        }
    }
}

#[test]
fn expansion_identities_on_every_builtin() {
    for name in builtins::builtin_names() {
        let cat = load_catalog(&name).unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        for m in cat.module_objects() {
            assert!(
                eq.expansion_identities_check(&cat, m),
                "{} at {}",
                name,
                cat.objects[m].label
            );
        }
    }
}

#[test]
fn g_vectors_are_additive_on_sums() {
    let cat = load_catalog("a3").unwrap();
    let x = &cat.objects[cat.find_label("S2").unwrap()].complex;
    let y = &cat.objects[cat.find_label("I2").unwrap()].complex;
    let sum = x.sum(y);
    let want: Vec<i64> = x
        .g_vector()
        .iter()
        .zip(y.g_vector())
        .map(|(a, b)| a + b)
        .collect();
    assert_eq!(sum.g_vector(), want);
}

#[test]
fn hom_shift_is_biadditive_on_sums() {
    // chain-level hom modulo homotopy agrees with the summandwise table on
    // direct sums, pinning the boundary-space computation beyond the
    // indecomposable cases the catalog validation covers
    let cat = load_catalog("a2-loop").unwrap();
    let pairs = [("S1", "12"), ("I1", "ΣP1"), ("P2", "112"), ("S2", "S1")];
    for (a_label, b_label) in pairs {
        let a = cat.find_label(a_label).unwrap();
        let b = cat.find_label(b_label).unwrap();
        let sum_ab = cat.objects[a].complex.sum(&cat.objects[b].complex);
        for probe_label in ["P1", "S1", "I1", "ΣP2"] {
            let p = cat.find_label(probe_label).unwrap();
            let lhs =
                uvw_core::homotopy::hom_shift(&cat.algebra, &sum_ab, &cat.objects[p].complex);
            assert_eq!(
                lhs,
                cat.hom_shift[a][p] + cat.hom_shift[b][p],
                "hom({}+{}, Sigma {})",
                a_label,
                b_label,
                probe_label
            );
            let rhs =
                uvw_core::homotopy::hom_shift(&cat.algebra, &cat.objects[p].complex, &sum_ab);
            assert_eq!(
                rhs,
                cat.hom_shift[p][a] + cat.hom_shift[p][b],
                "hom({}, Sigma ({}+{}))",
                probe_label,
                a_label,
                b_label
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// distributivity and commutativity of the polynomial ring on random
    /// small Laurent polynomials
    #[test]
    fn poly_ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        let left = a.mul(&b.add(&c));
        let right = a.mul(&b).add(&a.mul(&c));
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    /// tropical evaluation is additive under multiplication of rational
    /// functions
    #[test]
    fn trop_is_multiplicative(a in small_poly_positive(), b in small_poly_positive(), g1 in -7i64..7, g2 in -7i64..7) {
        let g = [g1, g2];
        let ra = uvw_core::poly::RatFn::from_poly(a.clone());
        let rb = uvw_core::poly::RatFn::from_poly(b.clone());
        let prod = ra.mul(&rb);
        prop_assert_eq!(
            uvw_core::fan::trop_eval(&prod, &g),
            uvw_core::fan::trop_eval(&ra, &g) + uvw_core::fan::trop_eval(&rb, &g)
        );
    }
}

fn small_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(((-3i64..4), (-3i64..4), (-5i64..6)), 0..6).prop_map(|terms| {
        let mut p = Poly::zero(2);
        for (e1, e2, c) in terms {
            p = p.add(&Poly::monomial(2, vec![e1, e2], Int::from(c)));
        }
        p
    })
}

fn small_poly_positive() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(((-3i64..4), (-3i64..4), (1i64..6)), 1..6).prop_map(|terms| {
        let mut p = Poly::zero(2);
        for (e1, e2, c) in terms {
            p = p.add(&Poly::monomial(2, vec![e1, e2], Int::from(c)));
        }
        p
    })
}
