//! The u-equations, the F-hat polynomials, the substitution homomorphism Psi,
//! the rational parametrization v_X, and the exact identity checks that tie
//! them together (parametrization, exchange relations, expansion identities,
//! rigid-variable divisibility).

use crate::catalog::{Catalog, ObjectKind};
use crate::grassmann::{f_polynomial, GrassmannError};
use crate::module::{hom_dim, ModuleRep, SplitMix64};
use crate::poly::{Poly, RatFn};
use crate::rat::{rat, rat_frac, Int, Rat};
use crate::report::Report;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EquationError {
    #[error("negative exponent in an F-hat polynomial (catalog inconsistent)")]
    NegativeExponent,
    #[error("uniform v-formula disagrees with the mesh factorization at {0}")]
    VFormulaMismatch(String),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Catalog(#[from] crate::catalog::CatalogError),
}

/// All equation data derived from one catalog.
pub struct EquationSet {
    /// F-polynomial of H0(X), per object (1 for shifted projectives)
    pub fpoly: Vec<Poly>,
    /// F-polynomial of H0(tau_K X), per object (1 for projectives)
    pub fpoly_tau: Vec<Poly>,
    /// v_X in lowest terms
    pub v: Vec<RatFn>,
    /// v_X as exponent vectors over the factor basis (y_i's, then the
    /// F-polynomials of the module objects)
    v_factored: Vec<Vec<i64>>,
    factor_polys: Vec<Poly>,
    /// slot of each module object in the factor basis
    factor_slot: Vec<Option<usize>>,
}

impl EquationSet {
    pub fn build(cat: &Catalog) -> Result<EquationSet, EquationError> {
        let n = cat.n();
        let k = cat.len();
        let mut fpoly = Vec::with_capacity(k);
        for x in 0..k {
            fpoly.push(f_polynomial(&cat.algebra, &cat.objects[x].h0)?);
        }
        let mut fpoly_tau = Vec::with_capacity(k);
        for x in 0..k {
            fpoly_tau.push(match cat.tau_obj[x] {
                Some(t) => fpoly[t].clone(),
                None => Poly::one(n),
            });
        }

        // factor basis: y_1..y_n then the module-object F-polynomials
        let mut factor_polys: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
        let mut factor_slot = vec![None; k];
        for x in cat.module_objects() {
            factor_slot[x] = Some(factor_polys.len());
            factor_polys.push(fpoly[x].clone());
        }
        let nf = factor_polys.len();

        let mut v_factored = Vec::with_capacity(k);
        let mut v = Vec::with_capacity(k);
        for x in 0..k {
            let mid = cat.ar_middle_term(x)?;
            let mut exps = vec![0i64; nf];
            for &(i, mult) in &mid.modules {
                exps[factor_slot[i].expect("middle term is a module object")] += mult as i64;
            }
            if let ObjectKind::ShiftedProjective(vx) = cat.objects[x].kind {
                exps[vx] += 1; // the extra y_i in v_{Sigma P_i}
            }
            if let Some(slot) = factor_slot[x] {
                exps[slot] -= 1;
            }
            if let Some(t) = cat.tau_obj[x] {
                exps[factor_slot[t].expect("translate is a module object")] -= 1;
            }
            // expand into a fraction and cross-check the uniform formula
            let (num, den) = expand_signed(&factor_polys, &exps);
            let den_uniform = fpoly[x].mul(&fpoly_tau[x]);
            let ydx = Poly::monomial(
                n,
                cat.objects[x].d.clone(),
                Int::one(),
            );
            let num_uniform = den_uniform.sub(&ydx);
            let lhs = RatFn::new(num.clone(), den.clone());
            let rhs = RatFn::new(num_uniform.clone(), den_uniform.clone());
            if !lhs.eq_ratfn(&rhs) {
                return Err(EquationError::VFormulaMismatch(
                    cat.objects[x].label.clone(),
                ));
            }
            // store the reduced form (numerator in factored shape divides the
            // uniform numerator exactly; constant-term-1 denominators make the
            // fraction already in lowest terms)
            v.push(RatFn::new(num, den));
            v_factored.push(exps);
        }
        Ok(EquationSet {
            fpoly,
            fpoly_tau,
            v,
            v_factored,
            factor_polys,
            factor_slot,
        })
    }

    pub fn nvars(&self) -> usize {
        self.v.len()
    }

    /// The u-equation of object x, as the polynomial
    /// u_x + prod_y u_y^{c(x,y)} - 1 over the u-variables.
    pub fn u_equation(&self, cat: &Catalog, x: usize) -> Poly {
        let k = cat.len();
        let ux = Poly::var(k, x);
        let exps: Vec<i64> = (0..k).map(|y| cat.c(x, y) as i64).collect();
        ux.add(&Poly::monomial(k, exps, Int::one()))
            .sub(&Poly::one(k))
    }

    /// The crossing monomial prod_y u_y^{c(x,y)} of object x.
    pub fn crossing_monomial(&self, cat: &Catalog, x: usize) -> Poly {
        let k = cat.len();
        let exps: Vec<i64> = (0..k).map(|y| cat.c(x, y) as i64).collect();
        Poly::monomial(k, exps, Int::one())
    }

    /// F-hat of a catalog module object: each chi(Gr_d) term contributes
    /// prod_V u_V^{hom(H0 V, M) - <g(V), d>}.
    pub fn fhat(&self, cat: &Catalog, x: usize) -> Result<Poly, EquationError> {
        assert!(cat.is_module_object(x), "F-hat is defined for modules");
        let homs: Vec<i64> = (0..cat.len()).map(|v| cat.hom_mod[v][x] as i64).collect();
        self.fhat_from_parts(cat, &self.fpoly[x], &homs)
    }

    /// F-hat of an arbitrary module over the catalog algebra (used for
    /// radicals and socle quotients in the exchange relations).
    pub fn fhat_of_module(&self, cat: &Catalog, m: &ModuleRep) -> Result<Poly, EquationError> {
        let f = f_polynomial(&cat.algebra, m)?;
        let homs: Vec<i64> = (0..cat.len())
            .map(|v| {
                if cat.objects[v].h0.is_zero() || m.is_zero() {
                    0
                } else {
                    hom_dim(&cat.algebra, &cat.objects[v].h0, m) as i64
                }
            })
            .collect();
        self.fhat_from_parts(cat, &f, &homs)
    }

    fn fhat_from_parts(
        &self,
        cat: &Catalog,
        f: &Poly,
        homs: &[i64],
    ) -> Result<Poly, EquationError> {
        let k = cat.len();
        let mut out = Poly::zero(k);
        for (d, chi) in f.terms() {
            let mut exps = vec![0i64; k];
            for v in 0..k {
                let pair: i64 = cat.objects[v].g.iter().zip(d).map(|(a, b)| a * b).sum();
                exps[v] = homs[v] - pair;
                if exps[v] < 0 {
                    return Err(EquationError::NegativeExponent);
                }
            }
            out = out.add(&Poly::monomial(k, exps, chi.clone()));
        }
        Ok(out)
    }

    /// The homomorphism Psi: y_i -> prod_V u_V^{-g(V)_i}, monomial-wise.
    pub fn psi_substitute(&self, cat: &Catalog, p: &Poly) -> Poly {
        let n = cat.n();
        assert_eq!(p.nvars(), n);
        let images: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..cat.len()).map(|v| -cat.objects[v].g[i]).collect())
            .collect();
        p.monomial_substitute(cat.len(), &images)
    }

    /// v_X as a rational function of the y-variables (lowest terms).
    pub fn v_rational(&self, x: usize) -> &RatFn {
        &self.v[x]
    }

    /// Exponent vector of v_X over the factor basis.
    pub fn v_exponents(&self, x: usize) -> &[i64] {
        &self.v_factored[x]
    }

    /// Substitute u_X <- v_X into a polynomial over the u-variables and test
    /// whether the result equals `expect` exactly, working with factored
    /// monomials over the F-polynomial basis.
    pub fn substitutes_to_constant(&self, p: &Poly, expect: &Int) -> bool {
        let nf = self.factor_polys.len();
        let mut terms: Vec<(Int, Vec<i64>)> = Vec::new();
        for (e, c) in p.terms() {
            let mut exps = vec![0i64; nf];
            for (x, &k) in e.iter().enumerate() {
                if k != 0 {
                    for (slot, &ve) in exps.iter_mut().zip(&self.v_factored[x]) {
                        *slot += k * ve;
                    }
                }
            }
            terms.push((c.clone(), exps));
        }
        if !expect.is_zero() {
            terms.push((-expect.clone(), vec![0; nf]));
        }
        self.factored_sum_is_zero(&terms)
    }

    fn factored_sum_is_zero(&self, terms: &[(Int, Vec<i64>)]) -> bool {
        if terms.is_empty() {
            return true;
        }
        let nf = self.factor_polys.len();
        let mins: Vec<i64> = (0..nf)
            .map(|f| terms.iter().map(|(_, e)| e[f]).min().unwrap())
            .collect();
        let n = self.factor_polys[0].nvars();
        let mut acc = Poly::zero(n);
        let mut cache: Vec<std::collections::HashMap<i64, Poly>> =
            vec![std::collections::HashMap::new(); nf];
        for (c, e) in terms {
            let mut term = Poly::constant(n, c.clone());
            for f in 0..nf {
                let pow = e[f] - mins[f];
                if pow == 0 {
                    continue;
                }
                let p = cache[f]
                    .entry(pow)
                    .or_insert_with(|| self.factor_polys[f].pow(pow as usize))
                    .clone();
                term = term.mul(&p);
            }
            acc = acc.add(&term);
        }
        acc.is_zero()
    }

    /// Substitute v into every F-hat equation and every u-equation; all must
    /// vanish identically, and a seeded numeric spot check confirms five
    /// random common zeros.
    pub fn verify_parametrization(&self, cat: &Catalog) -> Result<Report, EquationError> {
        let mut rep = Report::new(&format!("parametrization on {}", cat.name));
        for x in cat.module_objects() {
            let fh = self.fhat(cat, x)?;
            let ok = self.substitutes_to_constant(&fh, &Int::one());
            rep.push(
                &format!("Fhat({}) = 1 under v", cat.objects[x].label),
                ok,
                String::new(),
            );
        }
        for x in 0..cat.len() {
            let eq = self.u_equation(cat, x);
            let ok = self.substitutes_to_constant(&eq, &Int::zero());
            rep.push(
                &format!("u-equation({}) under v", cat.objects[x].label),
                ok,
                String::new(),
            );
        }
        // numeric spot check at 5 seeded rational points: v(y) is a common
        // zero of the whole system
        let mut rng = SplitMix64::new(0x5EED_0E05);
        for trial in 0..5 {
            let ys: Vec<Rat> = (0..cat.n())
                .map(|_| rat_frac(rng.int_in(1, 12), rng.int_in(1, 12)))
                .collect();
            let us: Vec<Rat> = (0..cat.len()).map(|x| self.v[x].eval(&ys)).collect();
            let mut ok = true;
            for x in cat.module_objects() {
                if self.fhat(cat, x)?.eval(&us) != rat(1) {
                    ok = false;
                }
            }
            for x in 0..cat.len() {
                if !self.u_equation(cat, x).eval(&us).is_zero() {
                    ok = false;
                }
            }
            rep.push(&format!("random common zero #{}", trial + 1), ok, String::new());
        }
        Ok(rep)
    }

    /// The applicable case of the exchange relation at object x, checked as an
    /// exact polynomial identity in the u-variables and spot-checked at five
    /// seeded rational points.
    pub fn exchange_identity_check(
        &self,
        cat: &Catalog,
        x: usize,
    ) -> Result<bool, EquationError> {
        let crossing = self.crossing_monomial(cat, x);
        let mid = cat.ar_middle_term(x)?;
        let mut fhat_mid = Poly::one(cat.len());
        for &(i, mult) in &mid.modules {
            let f = self.fhat(cat, i)?;
            for _ in 0..mult {
                fhat_mid = fhat_mid.mul(&f);
            }
        }
        let ux = Poly::var(cat.len(), x);
        let (lhs, rhs) = match cat.objects[x].kind {
            ObjectKind::Module { projective: true } => {
                // Fhat_X = u_X Fhat_{rad} + crossing
                (self.fhat(cat, x)?, ux.mul(&fhat_mid).add(&crossing))
            }
            ObjectKind::Module { projective: false } => {
                let t = cat.tau_obj[x].unwrap();
                (
                    self.fhat(cat, x)?.mul(&self.fhat(cat, t)?),
                    ux.mul(&fhat_mid).add(&crossing),
                )
            }
            ObjectKind::ShiftedProjective(_) => {
                let t = cat.tau_obj[x].unwrap();
                (self.fhat(cat, t)?, ux.mul(&fhat_mid).add(&crossing))
            }
        };
        if lhs != rhs {
            return Ok(false);
        }
        // independent numeric evaluation guards the polynomial engine
        let mut rng = SplitMix64::new(0x5EED_3E06);
        for _ in 0..5 {
            let us: Vec<Rat> = (0..cat.len())
                .map(|_| rat_frac(rng.int_in(1, 9), rng.int_in(1, 9)))
                .collect();
            if lhs.eval(&us) != rhs.eval(&us) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The three expansion identities for a module object M:
    ///   1/F_M           = prod_N v_N^{hom(N, M)}
    ///   y^{d(M)}/F_M    = prod_X v_X^{hom(M, H0 tau X)}
    ///   y^{d(M)}        = prod_Y v_Y^{-<g(Y), d(M)>}
    pub fn expansion_identities_check(&self, cat: &Catalog, m: usize) -> bool {
        assert!(cat.is_module_object(m));
        let nf = self.factor_polys.len();
        let slot_m = self.factor_slot[m].unwrap();
        let n = cat.n();

        // (1)
        let mut lhs = vec![0i64; nf];
        lhs[slot_m] = -1;
        let mut rhs = vec![0i64; nf];
        for x in cat.module_objects() {
            let h = cat.hom_mod[x][m] as i64;
            for (slot, &e) in rhs.iter_mut().zip(&self.v_factored[x]) {
                *slot += h * e;
            }
        }
        if !self.factored_monomials_equal(&lhs, &rhs) {
            return false;
        }

        // (2)
        let mut lhs = vec![0i64; nf];
        lhs[slot_m] = -1;
        for i in 0..n {
            lhs[i] += cat.objects[m].d[i];
        }
        let mut rhs = vec![0i64; nf];
        for x in 0..cat.len() {
            let h = match cat.tau_obj[x] {
                Some(t) => cat.hom_mod[m][t] as i64,
                None => continue,
            };
            for (slot, &e) in rhs.iter_mut().zip(&self.v_factored[x]) {
                *slot += h * e;
            }
        }
        if !self.factored_monomials_equal(&lhs, &rhs) {
            return false;
        }

        // (3)
        let mut lhs = vec![0i64; nf];
        for i in 0..n {
            lhs[i] = cat.objects[m].d[i];
        }
        let mut rhs = vec![0i64; nf];
        for y in 0..cat.len() {
            let pair: i64 = cat.objects[y]
                .g
                .iter()
                .zip(&cat.objects[m].d)
                .map(|(a, b)| a * b)
                .sum();
            for (slot, &e) in rhs.iter_mut().zip(&self.v_factored[y]) {
                *slot += -pair * e;
            }
        }
        self.factored_monomials_equal(&lhs, &rhs)
    }

    /// Equality of two factored monomials: cancel common exponents and expand
    /// the leftover products into polynomials.
    fn factored_monomials_equal(&self, a: &[i64], b: &[i64]) -> bool {
        let n = self.factor_polys[0].nvars();
        let mut num = Poly::one(n);
        let mut den = Poly::one(n);
        for (f, (&ea, &eb)) in a.iter().zip(b).enumerate() {
            let d = ea - eb;
            match d.cmp(&0) {
                std::cmp::Ordering::Greater => {
                    num = num.mul(&self.factor_polys[f].pow(d as usize))
                }
                std::cmp::Ordering::Less => {
                    den = den.mul(&self.factor_polys[f].pow((-d) as usize))
                }
                std::cmp::Ordering::Equal => {}
            }
        }
        num == den
    }

    /// The minimum exponent of u_m across the terms of Fhat(N); zero for
    /// every rigid m (divisibility would contradict rigidity).
    pub fn min_fhat_exponent(
        &self,
        cat: &Catalog,
        m: usize,
        n_obj: usize,
    ) -> Result<i64, EquationError> {
        let fh = self.fhat(cat, n_obj)?;
        Ok(fh.min_exponent(m))
    }
}

/// Split a factored exponent vector into (numerator, denominator) products.
fn expand_signed(factors: &[Poly], exps: &[i64]) -> (Poly, Poly) {
    let n = factors[0].nvars();
    let mut num = Poly::one(n);
    let mut den = Poly::one(n);
    for (f, &e) in exps.iter().enumerate() {
        match e.cmp(&0) {
            std::cmp::Ordering::Greater => num = num.mul(&factors[f].pow(e as usize)),
            std::cmp::Ordering::Less => den = den.mul(&factors[f].pow((-e) as usize)),
            std::cmp::Ordering::Equal => {}
        }
    }
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    /// Build a u-monomial from (label, exponent) pairs.
    fn umono(cat: &Catalog, pairs: &[(&str, i64)]) -> Poly {
        let mut exps = vec![0i64; cat.len()];
        for (label, e) in pairs {
            exps[cat.find_label(label).unwrap()] = *e;
        }
        Poly::monomial(cat.len(), exps, Int::one())
    }

    fn upoly(cat: &Catalog, monos: &[(i64, &[(&str, i64)])]) -> Poly {
        let mut p = Poly::zero(cat.len());
        for (c, pairs) in monos {
            p = p.add(&umono(cat, pairs).mul_scalar(&Int::from(*c)));
        }
        p
    }

    fn ypoly(n: usize, monos: &[(i64, &[i64])]) -> Poly {
        let mut p = Poly::zero(n);
        for (c, e) in monos {
            p = p.add(&Poly::monomial(n, e.to_vec(), Int::from(*c)));
        }
        p
    }

    #[test]
    fn u_equations_of_a2() {
        let cat = builtins::load_catalog("a2").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let x = cat.find_label("ΣP1").unwrap();
        let expected = upoly(
            &cat,
            &[(1, &[("ΣP1", 1)]), (1, &[("P1", 1), ("P2", 1)]), (-1, &[])],
        );
        assert_eq!(eq.u_equation(&cat, x), expected);
    }

    #[test]
    fn u_equation_of_a1() {
        let cat = builtins::load_catalog("a1").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let x = cat.find_label("P1").unwrap();
        let expected = upoly(&cat, &[(1, &[("P1", 1)]), (1, &[("ΣP1", 1)]), (-1, &[])]);
        assert_eq!(eq.u_equation(&cat, x), expected);
    }

    #[test]
    fn u_equation_of_preproj_s1() {
        let cat = builtins::load_catalog("preproj-a2").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let x = cat.find_label("S1").unwrap();
        let expected = upoly(
            &cat,
            &[
                (1, &[("S1", 1)]),
                (1, &[("P2", 1), ("S2", 2), ("ΣP1", 1)]),
                (-1, &[]),
            ],
        );
        assert_eq!(eq.u_equation(&cat, x), expected);
    }

    #[test]
    fn fhat_of_s2_examples() {
        // a2: Fhat_{S2} = u_{P2} u_{S2} + u_{Sigma P2}
        let cat = builtins::load_catalog("a2").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let fh = eq.fhat(&cat, cat.find_label("S2").unwrap()).unwrap();
        let expected = upoly(&cat, &[(1, &[("P2", 1), ("S2", 1)]), (1, &[("ΣP2", 1)])]);
        assert_eq!(fh, expected);

        // a3: Fhat_{S2} = u_{P2} u_{S2} + u_{S3} u_{Sigma P2}
        let cat = builtins::load_catalog("a3").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let fh = eq.fhat(&cat, cat.find_label("S2").unwrap()).unwrap();
        let expected = upoly(
            &cat,
            &[(1, &[("P2", 1), ("S2", 1)]), (1, &[("S3", 1), ("ΣP2", 1)])],
        );
        assert_eq!(fh, expected);

        // a2-loop: Fhat_{S2} = u_{Sigma P2} + u_{P2} u_{S2} u_{I1}^2 u_{12} u_{112}
        let cat = builtins::load_catalog("a2-loop").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let fh = eq.fhat(&cat, cat.find_label("S2").unwrap()).unwrap();
        let expected = upoly(
            &cat,
            &[
                (1, &[("ΣP2", 1)]),
                (
                    1,
                    &[("P2", 1), ("S2", 1), ("I1", 2), ("12", 1), ("112", 1)],
                ),
            ],
        );
        assert_eq!(fh, expected);
    }

    #[test]
    fn psi_on_a1() {
        let cat = builtins::load_catalog("a1").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        // y1 -> u_{Sigma P1} / u_{P1}
        let y = Poly::var(1, 0);
        let img = eq.psi_substitute(&cat, &y);
        let p1 = cat.find_label("P1").unwrap();
        let sp1 = cat.find_label("ΣP1").unwrap();
        let mut exps = vec![0i64; 2];
        exps[p1] = -1;
        exps[sp1] = 1;
        assert_eq!(img, Poly::monomial(2, exps, Int::one()));
        // psi(1) = 1
        assert!(eq.psi_substitute(&cat, &Poly::one(1)).is_one());
    }

    #[test]
    fn reform_lemma_reconstructs_fhat() {
        // Fhat_M = (prod_V u_V^{hom(H0 V, M)}) * Psi(F_M)
        let cat = builtins::load_catalog("a2").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let s2 = cat.find_label("S2").unwrap();
        let psi_f = eq.psi_substitute(&cat, &eq.fpoly[s2]);
        let pref: Vec<i64> = (0..cat.len()).map(|v| cat.hom_mod[v][s2] as i64).collect();
        let reconstructed = psi_f.shift(&pref);
        assert_eq!(reconstructed, eq.fhat(&cat, s2).unwrap());
    }

    #[test]
    fn v_rational_examples() {
        let cat = builtins::load_catalog("a2").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        // v_{Sigma P1} = (y1 + y1 y2) / (1 + y1 + y1 y2)
        let x = cat.find_label("ΣP1").unwrap();
        let expected = RatFn::new(
            ypoly(2, &[(1, &[1, 0]), (1, &[1, 1])]),
            ypoly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[1, 1])]),
        );
        assert!(eq.v_rational(x).eq_ratfn(&expected));

        // loop2: v_S = (1 + y + y^2) / (1 + y)^2
        let cat = builtins::load_catalog("loop2").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let s = cat.find_label("S").unwrap();
        let expected = RatFn::new(
            ypoly(1, &[(1, &[0]), (1, &[1]), (1, &[2])]),
            ypoly(1, &[(1, &[0]), (2, &[1]), (1, &[2])]),
        );
        assert!(eq.v_rational(s).eq_ratfn(&expected));
    }

    #[test]
    fn pelly_v_family() {
        // v_{S_i} = F_{P_i} / (F_{S_{i+1}} F_{S_i})
        let cat = builtins::load_catalog("pelly-3").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        for i in 1..=2usize {
            let si = cat.find_label(&format!("S{}", i)).unwrap();
            let pi = cat.find_label(&format!("P{}", i)).unwrap();
            let si1 = cat.find_label(&format!("S{}", i + 1)).unwrap();
            let expected = RatFn::new(
                eq.fpoly[pi].clone(),
                eq.fpoly[si1].mul(&eq.fpoly[si]),
            );
            assert!(eq.v_rational(si).eq_ratfn(&expected));
        }
        // v_{P_i} = F_{S_{i+1}} / F_{P_i}
        for i in 1..=2usize {
            let pi = cat.find_label(&format!("P{}", i)).unwrap();
            let si1 = cat.find_label(&format!("S{}", i + 1)).unwrap();
            let expected = RatFn::new(eq.fpoly[si1].clone(), eq.fpoly[pi].clone());
            assert!(eq.v_rational(pi).eq_ratfn(&expected));
        }
    }

    #[test]
    fn parametrization_a1_a2_loop2() {
        for name in ["a1", "a2", "loop2", "preproj-a2"] {
            let cat = builtins::load_catalog(name).unwrap();
            let eq = EquationSet::build(&cat).unwrap();
            let rep = eq.verify_parametrization(&cat).unwrap();
            assert!(rep.passed(), "{} failed:\n{}", name, rep);
        }
    }

    #[test]
    fn exchange_relations_a2() {
        let cat = builtins::load_catalog("a2").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        for label in ["S2", "P1", "ΣP2"] {
            let x = cat.find_label(label).unwrap();
            assert!(eq.exchange_identity_check(&cat, x).unwrap(), "{}", label);
        }
    }

    #[test]
    fn expansion_identities_small() {
        for name in ["a2", "loop2"] {
            let cat = builtins::load_catalog(name).unwrap();
            let eq = EquationSet::build(&cat).unwrap();
            for m in cat.module_objects() {
                assert!(
                    eq.expansion_identities_check(&cat, m),
                    "{} object {}",
                    name,
                    cat.objects[m].label
                );
            }
        }
    }

    #[test]
    fn rigid_cannot_divide_but_s1_does() {
        let cat = builtins::load_catalog("a2-loop").unwrap();
        let eq = EquationSet::build(&cat).unwrap();
        let s1 = cat.find_label("S1").unwrap();
        let p1 = cat.find_label("P1").unwrap();
        // the non-rigid S1 divides Fhat_{P1}
        assert!(eq.min_fhat_exponent(&cat, s1, p1).unwrap() >= 1);
        // no rigid variable divides any Fhat
        for m in 0..cat.len() {
            if !cat.objects[m].rigid {
                continue;
            }
            for n_obj in cat.module_objects() {
                assert_eq!(eq.min_fhat_exponent(&cat, m, n_obj).unwrap(), 0);
            }
        }
    }
}
