//! Multivariate integer-coefficient Laurent polynomials and their quotients.
//!
//! Exponent vectors may be negative (Laurent use); variable names are kept by
//! the callers (catalog labels for u-variables, y1..yn for the base ring) and
//! supplied at print time.

use crate::rat::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Int>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Int::one())
    }

    pub fn constant(nvars: usize, c: Int) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0i64; nvars];
        exp[i] = 1;
        Poly::monomial(nvars, exp, Int::one())
    }

    pub fn monomial(nvars: usize, exp: Vec<i64>, coef: Int) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = Poly::zero(nvars);
        if !coef.is_zero() {
            p.terms.insert(exp, coef);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.nvars])
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Int)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64]) -> Int {
        self.terms.get(exp).cloned().unwrap_or_else(Int::zero)
    }

    pub fn constant_term(&self) -> Int {
        self.coeff(&vec![0; self.nvars])
    }

    fn insert(&mut self, exp: Vec<i64>, coef: Int) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + coef;
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

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(exp, c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Int) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn shift(&self, delta: &[i64]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(delta).map(|(a, b)| a + b).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// True if every exponent is nonnegative (an honest polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Smallest exponent of variable `i` over all terms (0 for the zero poly).
    pub fn min_exponent(&self, i: usize) -> i64 {
        self.terms.keys().map(|e| e[i]).min().unwrap_or(0)
    }

    pub fn max_exponent(&self, i: usize) -> i64 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Exact evaluation at rational arguments (nonzero where needed for
    /// negative exponents).
    pub fn eval(&self, xs: &[Rat]) -> Rat {
        assert_eq!(xs.len(), self.nvars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = Rat::from_integer(c.clone());
            for (x, &k) in xs.iter().zip(e) {
                match k.cmp(&0) {
                    std::cmp::Ordering::Equal => {}
                    std::cmp::Ordering::Greater => {
                        for _ in 0..k {
                            term *= x;
                        }
                    }
                    std::cmp::Ordering::Less => {
                        for _ in 0..(-k) {
                            term /= x;
                        }
                    }
                }
            }
            acc += term;
        }
        acc
    }

    /// Floating evaluation; safe for the positive-coefficient polynomials at
    /// positive points that the numerics module feeds in.
    pub fn eval_f64(&self, xs: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut term = bigint_f64(c);
            for (x, &k) in xs.iter().zip(e) {
                term *= x.powi(k as i32);
            }
            acc += term;
        }
        acc
    }

    /// Substitute each variable by a Laurent monomial in a new variable set:
    /// `images[i]` is the exponent vector of the image of variable i.
    pub fn monomial_substitute(&self, new_nvars: usize, images: &[Vec<i64>]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let mut out = Poly::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut exp = vec![0i64; new_nvars];
            for (i, &k) in e.iter().enumerate() {
                for (slot, &img) in exp.iter_mut().zip(&images[i]) {
                    *slot += k * img;
                }
            }
            out.insert(exp, c.clone());
        }
        out
    }

    /// Apply a variable map: keep (renamed), set to one, or set to zero.
    pub fn map_variables(&self, new_nvars: usize, action: impl Fn(usize) -> VarImage) -> Poly {
        let images: Vec<VarImage> = (0..self.nvars).map(action).collect();
        let mut out = Poly::zero(new_nvars);
        'term: for (e, c) in &self.terms {
            let mut exp = vec![0i64; new_nvars];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match images[i] {
                    VarImage::ToZero => {
                        if k > 0 {
                            continue 'term; // the whole term vanishes
                        }
                        panic!("negative power of a variable sent to zero");
                    }
                    VarImage::ToOne => {}
                    VarImage::Var(j) => exp[j] += k,
                }
            }
            out.insert(exp, c.clone());
        }
        out
    }

    /// Render with the given variable names, monomials in the stored
    /// (lexicographic) order. `sep` is the multiplication sign.
    pub fn render(&self, names: &[String], style: RenderStyle) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (e, c) in &self.terms {
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = names[i].clone();
                if k == 1 {
                    factors.push(name);
                } else {
                    match style {
                        RenderStyle::Text => factors.push(format!("{}^{}", name, k)),
                        RenderStyle::Latex => factors.push(format!("{}^{{{}}}", name, k)),
                    }
                }
            }
            let mono = if factors.is_empty() {
                String::new()
            } else {
                factors.join(match style {
                    RenderStyle::Text => "*",
                    RenderStyle::Latex => " ",
                })
            };
            let piece = if mono.is_empty() {
                format!("{}", c)
            } else if c.is_one() {
                mono
            } else if *c == -Int::one() {
                format!("-{}", mono)
            } else {
                format!("{}{}{}", c, if matches!(style, RenderStyle::Text) { "*" } else { " " }, mono)
            };
            parts.push(piece);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub enum VarImage {
    Var(usize),
    ToOne,
    ToZero,
}

#[derive(Debug, Clone, Copy)]
pub enum RenderStyle {
    Text,
    Latex,
}

fn bigint_f64(c: &Int) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// A quotient of polynomials. Fractions produced by the parametrization are
/// reduced by construction (denominators have constant term one and the
/// numerator differs from them by a single monomial); general arithmetic does
/// not attempt multivariate gcd reduction, and equality is decided by
/// cross-multiplication, which never needs it.
#[derive(Debug, Clone)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.nvars();
        RatFn::new(p, Poly::one(n))
    }

    pub fn one(nvars: usize) -> Self {
        RatFn::new(Poly::one(nvars), Poly::one(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        RatFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFn) -> RatFn {
        assert!(!other.num.is_zero());
        RatFn::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        RatFn::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        RatFn::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn eq_ratfn(&self, other: &RatFn) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn eval(&self, xs: &[Rat]) -> Rat {
        let d = self.den.eval(xs);
        assert!(!d.is_zero(), "denominator vanishes at the sample point");
        self.num.eval(xs) / d
    }

    pub fn eval_f64(&self, xs: &[f64]) -> f64 {
        self.num.eval_f64(xs) / self.den.eval_f64(xs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn arithmetic_and_eval() {
        // (1 + y1)(1 + y2) = 1 + y1 + y2 + y1 y2
        let one = Poly::one(2);
        let p = one.add(&Poly::var(2, 0));
        let q = one.add(&Poly::var(2, 1));
        let prod = p.mul(&q);
        assert_eq!(prod.num_terms(), 4);
        assert_eq!(prod.constant_term(), int(1));
        let v = prod.eval(&[rat(2), rat(3)]);
        assert_eq!(v, rat(12));
        assert!(p.mul(&q).sub(&q.mul(&p)).is_zero());
    }

    #[test]
    fn monomial_substitution() {
        // y1 -> u0^{-1} u1, evaluated on p = 1 + y1
        let p = Poly::one(1).add(&Poly::var(1, 0));
        let img = vec![vec![-1i64, 1]];
        let q = p.monomial_substitute(2, &img);
        assert_eq!(q.num_terms(), 2);
        assert_eq!(q.min_exponent(0), -1);
        assert!(!q.is_polynomial());
    }

    #[test]
    fn ratfn_identities() {
        // 1/(1+y) + y/(1+y) = 1
        let one = Poly::one(1);
        let y = Poly::var(1, 0);
        let den = one.add(&y);
        let a = RatFn::new(one.clone(), den.clone());
        let b = RatFn::new(y, den);
        let s = a.add(&b);
        assert!(s.eq_ratfn(&RatFn::one(1)));
        assert!(s.sub(&RatFn::one(1)).is_zero() || s.sub(&RatFn::one(1)).num.is_zero());
    }

    #[test]
    fn render_orders_monomials() {
        let p = Poly::one(2)
            .add(&Poly::var(2, 0))
            .add(&Poly::var(2, 0).mul(&Poly::var(2, 1)));
        let names = vec!["y1".to_string(), "y2".to_string()];
        assert_eq!(p.render(&names, RenderStyle::Text), "1 + y1 + y1*y2");
    }
}
