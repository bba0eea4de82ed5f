//! Euler characteristics of submodule Grassmannians and F-polynomials.
//!
//! chi(Gr_d(M)) is computed by counting arrow-stable subspace tuples over
//! small prime fields and Lagrange-interpolating the counting polynomial at
//! q = 1, with a spare-prime consistency check. Two enumerators are
//! available: reduced-echelon enumeration of all subspace tuples filtered by
//! stability (the default), and a submodule-lattice walk that generates
//! stable tuples directly (used when raw enumeration is too large, e.g. the
//! high nilpotency-order loop algebras).

use crate::algebra::QuiverAlgebra;
use crate::module::ModuleRep;
use crate::poly::Poly;
use crate::rat::{rat, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GrassmannError {
    #[error("{0} is not prime (only prime fields are used for counting)")]
    NotPrime(u64),
    #[error("module matrices are not integral with respect to p = {0}")]
    NonIntegerModel(u64),
    #[error("point counts do not fit a polynomial (extra-prime check failed)")]
    NotPolynomialCount,
    #[error("not enough feasible primes to interpolate the counting polynomial")]
    TooFewPoints,
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

const PRIMES: [u64; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    let mut t: i128 = 0;
    let mut new_t: i128 = 1;
    let mut r: i128 = p as i128;
    let mut new_r: i128 = (a % p) as i128;
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

/// Module matrices reduced mod p, entries in [0, p).
struct ModModule {
    dims: Vec<usize>,
    maps: Vec<Vec<Vec<u64>>>, // [arrow][row][col]
}

fn reduce_mod_p(m: &ModuleRep, p: u64) -> Result<ModModule, GrassmannError> {
    let to_fp = |x: &Rat| -> Result<u64, GrassmannError> {
        let den = x.denom();
        let dmod = (den % Int::from(p)).to_string().parse::<i64>().unwrap();
        if dmod.rem_euclid(p as i64) == 0 {
            return Err(GrassmannError::NonIntegerModel(p));
        }
        let num_mod = num_mod_p(x.numer(), p);
        let den_mod = num_mod_p(den, p);
        Ok(num_mod * mod_inv(den_mod, p) % p)
    };
    let mut maps = Vec::with_capacity(m.maps.len());
    for mat in &m.maps {
        let mut rows = Vec::with_capacity(mat.rows());
        for r in 0..mat.rows() {
            let mut row = Vec::with_capacity(mat.cols());
            for c in 0..mat.cols() {
                row.push(to_fp(mat.at(r, c))?);
            }
            rows.push(row);
        }
        maps.push(rows);
    }
    Ok(ModModule {
        dims: m.dims.clone(),
        maps,
    })
}

fn num_mod_p(n: &Int, p: u64) -> u64 {
    let m = n % Int::from(p);
    let v: i64 = (&m).try_into().unwrap();
    v.rem_euclid(p as i64) as u64
}

/// Rows of a subspace in reduced echelon form.
type Echelon = Vec<Vec<u64>>;

/// Reduce a vector against echelon rows; returns the residue.
fn reduce_vec(rows: &Echelon, pivots: &[usize], mut v: Vec<u64>, p: u64) -> Vec<u64> {
    for (row, &piv) in rows.iter().zip(pivots) {
        if v[piv] != 0 {
            let c = v[piv];
            for (x, y) in v.iter_mut().zip(row) {
                *x = (*x + (p - c) * y) % p;
            }
        }
    }
    v
}

fn echelonize(mut rows: Vec<Vec<u64>>, p: u64) -> (Echelon, Vec<usize>) {
    let mut ech: Echelon = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    while let Some(v) = rows.pop() {
        let v = reduce_vec(&ech, &pivots, v, p);
        if let Some(piv) = v.iter().position(|&x| x != 0) {
            let inv = mod_inv(v[piv], p);
            let v: Vec<u64> = v.iter().map(|&x| x * inv % p).collect();
            // back-substitute to keep reduced form
            for row in ech.iter_mut() {
                if row[piv] != 0 {
                    let c = row[piv];
                    for (x, y) in row.iter_mut().zip(&v) {
                        *x = (*x + (p - c) * y) % p;
                    }
                }
            }
            // insert keeping pivots sorted
            let pos = pivots.iter().position(|&q| q > piv).unwrap_or(pivots.len());
            ech.insert(pos, v);
            pivots.insert(pos, piv);
        }
    }
    (ech, pivots)
}

/// Iterate over all k-dimensional subspaces of F_p^n in reduced echelon form.
fn for_each_subspace(n: usize, k: usize, p: u64, mut f: impl FnMut(&Echelon, &[usize])) {
    if k == 0 {
        f(&vec![], &[]);
        return;
    }
    if k > n {
        return;
    }
    // iterate over pivot column combinations
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free positions: (row r, col c) with c > pivots[r], c not a pivot
        let mut free: Vec<(usize, usize)> = Vec::new();
        for r in 0..k {
            for c in pivots[r] + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let mut vals = vec![0u64; free.len()];
        loop {
            let mut rows = vec![vec![0u64; n]; k];
            for r in 0..k {
                rows[r][pivots[r]] = 1;
            }
            for (slot, &(r, c)) in vals.iter().zip(&free) {
                rows[r][c] = *slot;
            }
            f(&rows, &pivots);
            // odometer
            let mut i = 0;
            loop {
                if i == vals.len() {
                    break;
                }
                vals[i] += 1;
                if vals[i] == p {
                    vals[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
            if i == vals.len() {
                break;
            }
        }
        // next pivot combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] + 1 <= n - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    // exact when it fits; saturating otherwise (only used for cost estimates
    // and to decide feasibility)
    let qp = |e: usize| -> u128 { (q as u128).saturating_pow(e as u32) };
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(qp(n - i).saturating_sub(1));
        den = den.saturating_mul(qp(i + 1).saturating_sub(1));
    }
    num / den.max(1)
}

fn apply_map(mat: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (a, b)| (acc + a * b) % p)
        })
        .collect()
}

fn in_span(rows: &Echelon, pivots: &[usize], v: &[u64], p: u64) -> bool {
    reduce_vec(rows, pivots, v.to_vec(), p)
        .iter()
        .all(|&x| x == 0)
}

/// Count arrow-stable subspace tuples of dimension vector d by exhaustive
/// echelon enumeration.
fn count_by_enumeration(mm: &ModModule, arrows: &[(usize, usize)], d: &[usize], p: u64) -> u128 {
    let n = mm.dims.len();
    // enumerate per vertex, depth-first with early stability pruning over
    // arrows whose endpoints are both already chosen
    fn recurse(
        v: usize,
        n: usize,
        mm: &ModModule,
        arrows: &[(usize, usize)],
        d: &[usize],
        p: u64,
        chosen: &mut Vec<(Echelon, Vec<usize>)>,
        count: &mut u128,
    ) {
        if v == n {
            *count += 1;
            return;
        }
        for_each_subspace_collect(mm.dims[v], d[v], p, |rows, pivots| {
            chosen.push((rows.to_vec(), pivots.to_vec()));
            let ok = arrows.iter().enumerate().all(|(ai, &(s, t))| {
                if s > v || t > v {
                    return true;
                }
                let (us, _) = (&chosen[s].0, ());
                let (ut, utp) = (&chosen[t].0, &chosen[t].1);
                us.iter()
                    .all(|row| in_span(ut, utp, &apply_map(&mm.maps[ai], row, p), p))
            });
            if ok {
                recurse(v + 1, n, mm, arrows, d, p, chosen, count);
            }
            chosen.pop();
        });
    }
    let mut count = 0u128;
    let mut chosen = Vec::new();
    recurse(0, n, mm, arrows, d, p, &mut chosen, &mut count);
    count
}

fn for_each_subspace_collect(
    n: usize,
    k: usize,
    p: u64,
    mut f: impl FnMut(&Echelon, &[usize]),
) {
    for_each_subspace(n, k, p, |rows, pivots| f(rows, pivots));
}

/// Walk the full submodule lattice over F_p by breadth-first search over
/// covers: every submodule covering U is U plus a line in the socle of M/U,
/// so candidates are few and need no closure. Tallies counts per dimension
/// vector.
fn count_by_lattice_walk(
    mm: &ModModule,
    arrows: &[(usize, usize)],
    p: u64,
) -> Option<BTreeMap<Vec<usize>, u128>> {
    let n = mm.dims.len();
    type State = Vec<(Echelon, Vec<usize>)>;
    type Key = Vec<Vec<Vec<u64>>>;
    let canonical = |sub: &State| -> Key { sub.iter().map(|(rows, _)| rows.clone()).collect() };

    // lines of soc(M/U) per vertex, lifted to vectors of M
    let socle_lines = |cur: &State| -> Vec<(usize, Vec<u64>)> {
        let mut out = Vec::new();
        for v in 0..n {
            let dim = mm.dims[v];
            let k = cur[v].0.len();
            if dim == k {
                continue;
            }
            // complement coordinates: non-pivot columns of the echelon form
            let pivset: std::collections::HashSet<usize> = cur[v].1.iter().copied().collect();
            let free: Vec<usize> = (0..dim).filter(|c| !pivset.contains(c)).collect();
            let lift = |coords: &[u64]| -> Vec<u64> {
                let mut w = vec![0u64; dim];
                for (c, &fc) in coords.iter().zip(&free) {
                    w[fc] = *c;
                }
                w
            };
            // socle condition: for each arrow out of v, the image must lie in
            // the current subspace at the target
            let mut constraint_rows: Vec<Vec<u64>> = Vec::new();
            for (ai, &(s, t)) in arrows.iter().enumerate() {
                if s != v {
                    continue;
                }
                // rows: residue coordinates of the image of each free basis
                // vector after reduction modulo U_t
                let tdim = mm.dims[t];
                let mut imgs: Vec<Vec<u64>> = Vec::new();
                for &fc in &free {
                    let mut e = vec![0u64; dim];
                    e[fc] = 1;
                    let img = apply_map(&mm.maps[ai], &e, p);
                    imgs.push(reduce_vec(&cur[t].0, &cur[t].1, img, p));
                }
                for r in 0..tdim {
                    let row: Vec<u64> = imgs.iter().map(|img| img[r]).collect();
                    if row.iter().any(|&x| x != 0) {
                        constraint_rows.push(row);
                    }
                }
            }
            // nullspace of the constraints over the free coordinates
            let kernel = fp_nullspace(&constraint_rows, free.len(), p);
            // lines of the kernel: vectors with first nonzero coordinate 1
            let kd = kernel.len();
            if kd == 0 {
                continue;
            }
            let mut coefs = vec![0u64; kd];
            loop {
                let mut i = 0;
                loop {
                    if i == kd {
                        break;
                    }
                    coefs[i] += 1;
                    if coefs[i] == p {
                        coefs[i] = 0;
                        i += 1;
                    } else {
                        break;
                    }
                }
                if i == kd {
                    break;
                }
                let mut w = vec![0u64; free.len()];
                for (ci, &c) in coefs.iter().enumerate() {
                    for (slot, kv) in w.iter_mut().zip(&kernel[ci]) {
                        *slot = (*slot + c * kv) % p;
                    }
                }
                // canonical representative: first nonzero coefficient = 1
                if let Some(first) = w.iter().position(|&x| x != 0) {
                    if w[first] == 1 {
                        out.push((v, lift(&w)));
                    }
                }
            }
        }
        out
    };

    let zero: State = (0..n).map(|_| (vec![], vec![])).collect();
    let mut seen: std::collections::HashSet<Key> = std::collections::HashSet::new();
    let mut queue: Vec<State> = vec![zero.clone()];
    seen.insert(canonical(&zero));
    let mut idx = 0;
    while idx < queue.len() {
        let cur = queue[idx].clone();
        idx += 1;
        for (v, w) in socle_lines(&cur) {
            let mut next = cur.clone();
            let mut rows: Vec<Vec<u64>> = next[v].0.clone();
            rows.push(w);
            next[v] = echelonize(rows, p);
            let key = canonical(&next);
            if seen.insert(key) {
                queue.push(next);
                if queue.len() > 500_000 {
                    return None;
                }
            }
        }
    }
    let mut counts: BTreeMap<Vec<usize>, u128> = BTreeMap::new();
    for sub in queue {
        let dims: Vec<usize> = sub.iter().map(|(rows, _)| rows.len()).collect();
        *counts.entry(dims).or_insert(0) += 1;
    }
    Some(counts)
}

/// Nullspace basis of a small F_p matrix given by rows over `ncols` columns.
fn fp_nullspace(rows: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    if rows.is_empty() {
        return (0..ncols)
            .map(|i| {
                let mut e = vec![0u64; ncols];
                e[i] = 1;
                e
            })
            .collect();
    }
    let (ech, pivots) = echelonize(rows.to_vec(), p);
    let pivset: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivset.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; ncols];
            v[fc] = 1;
            for (row, &piv) in ech.iter().zip(&pivots) {
                v[piv] = (p - row[fc]) % p;
            }
            v
        })
        .collect()
}

/// Exact count of d-dimensional submodules of M over F_q (q prime).
pub fn count_submodules_fq(
    a: &QuiverAlgebra,
    m: &ModuleRep,
    d: &[usize],
    q: u64,
) -> Result<u128, GrassmannError> {
    if !is_prime(q) || q > 32 {
        return Err(GrassmannError::NotPrime(q));
    }
    if d.iter().zip(&m.dims).any(|(x, y)| x > y) {
        return Ok(0);
    }
    let mm = reduce_mod_p(m, q)?;
    let arrows: Vec<(usize, usize)> = a.arrows().iter().map(|ar| (ar.src, ar.tgt)).collect();
    let cost: u128 = m
        .dims
        .iter()
        .zip(d)
        .map(|(&n, &k)| gaussian_binomial(n, k, q))
        .product();
    if cost <= 100_000 {
        Ok(count_by_enumeration(&mm, &arrows, d, q))
    } else {
        let counts = count_by_lattice_walk(&mm, &arrows, q)
            .ok_or(GrassmannError::TooFewPoints)?;
        Ok(counts.get(&d.to_vec()).copied().unwrap_or(0))
    }
}

/// Interpolate the counting polynomial through (q_i, c_i) and evaluate at x.
fn lagrange_eval(points: &[(u64, u128)], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for (i, (qi, ci)) in points.iter().enumerate() {
        let mut term = Rat::from_integer(Int::from(*ci as i128));
        for (j, (qj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let num = x - rat(*qj as i64);
            let den = rat(*qi as i64) - rat(*qj as i64);
            term *= num / den;
        }
        acc += term;
    }
    acc
}

/// True when some polynomial of degree <= bound through the first points
/// reproduces the rest, leaving at least `spares` confirming points.
fn stabilized(points: &[(u64, u128)], bound: usize, spares: usize) -> bool {
    if points.len() < spares + 1 {
        return false;
    }
    let max_fit = points.len() - 1 - spares;
    for deg in 0..=max_fit.min(bound) {
        let head = &points[..deg + 1];
        if points[deg + 1..].iter().all(|(q, c)| {
            lagrange_eval(head, &rat(*q as i64)) == Rat::from_integer(Int::from(*c as i128))
        }) {
            return true;
        }
    }
    false
}

/// Counting data for all submodule dimensions of one module: per-prime maps
/// d -> count. Collection stops once every dimension's counting polynomial
/// has stabilized with two spare confirming primes (or the degree-bound
/// budget of points is reached), which keeps large-prime enumeration rare.
fn collect_counts(
    a: &QuiverAlgebra,
    m: &ModuleRep,
    want_points: usize,
) -> Result<Vec<(u64, BTreeMap<Vec<usize>, u128>)>, GrassmannError> {
    let arrows: Vec<(usize, usize)> = a.arrows().iter().map(|ar| (ar.src, ar.tgt)).collect();
    let dims = dim_vectors_below(&m.dims);
    let mut out: Vec<(u64, BTreeMap<Vec<usize>, u128>)> = Vec::new();
    for &p in PRIMES.iter() {
        if out.len() >= want_points {
            break;
        }
        if out.len() >= 3 {
            let all_stable = dims.iter().all(|d| {
                let bound: usize = d
                    .iter()
                    .zip(&m.dims)
                    .map(|(&k, &nn)| k * (nn.saturating_sub(k)))
                    .sum();
                let points: Vec<(u64, u128)> = out
                    .iter()
                    .map(|(q, map)| (*q, map.get(d).copied().unwrap_or(0)))
                    .collect();
                stabilized(&points, bound, 2)
            });
            if all_stable {
                break;
            }
        }
        let mm = match reduce_mod_p(m, p) {
            Ok(mm) => mm,
            Err(GrassmannError::NonIntegerModel(_)) => continue, // skip bad primes
            Err(e) => return Err(e),
        };
        // total enumeration cost over all dimension vectors
        let total_cost: u128 = m
            .dims
            .iter()
            .map(|&n| {
                (0..=n)
                    .map(|k| gaussian_binomial(n, k, p))
                    .sum::<u128>()
            })
            .product();
        let counts = if total_cost <= 100_000 {
            let mut map = BTreeMap::new();
            for d in dims.iter() {
                let c = count_by_enumeration(&mm, &arrows, d, p);
                if c > 0 {
                    map.insert(d.clone(), c);
                }
            }
            Some(map)
        } else {
            count_by_lattice_walk(&mm, &arrows, p)
        };
        if let Some(map) = counts {
            out.push((p, map));
        }
    }
    Ok(out)
}

fn dim_vectors_below(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &d in dims {
        let mut next = Vec::new();
        for v in out {
            for k in 0..=d {
                let mut w = v.clone();
                w.push(k);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Fit the counting polynomial to the points: smallest degree whose
/// interpolation through the first deg+1 points reproduces all the others
/// (at least one spare point is required). Returns the value at q = 1.
fn interpolate_at_one(points: &[(u64, u128)], degree_bound: usize) -> Result<Int, GrassmannError> {
    if points.len() < 2 {
        return Err(GrassmannError::TooFewPoints);
    }
    let max_fit = points.len() - 2; // keep one spare point
    for deg in 0..=max_fit.min(degree_bound) {
        let head = &points[..deg + 1];
        let consistent = points[deg + 1..].iter().all(|(q, c)| {
            lagrange_eval(head, &rat(*q as i64)) == Rat::from_integer(Int::from(*c as i128))
        });
        if consistent {
            let val = lagrange_eval(head, &rat(1));
            if !val.denom().is_one() || val.is_negative() {
                return Err(GrassmannError::NotPolynomialCount);
            }
            return Ok(val.numer().clone());
        }
    }
    Err(GrassmannError::NotPolynomialCount)
}

/// chi(Gr_d(M)) via finite-field counts and interpolation at q = 1.
pub fn gr_euler(a: &QuiverAlgebra, m: &ModuleRep, d: &[usize]) -> Result<Int, GrassmannError> {
    let bound: usize = d
        .iter()
        .zip(&m.dims)
        .map(|(&k, &n)| k * (n.saturating_sub(k)))
        .sum();
    let want = (bound + 2).min(PRIMES.len());
    let data = collect_counts(a, m, want)?;
    let points: Vec<(u64, u128)> = data
        .iter()
        .map(|(p, map)| (*p, map.get(&d.to_vec()).copied().unwrap_or(0)))
        .collect();
    interpolate_at_one(&points, bound)
}

/// The F-polynomial of a module: sum over d of chi(Gr_d(M)) y^d.
pub fn f_polynomial(a: &QuiverAlgebra, m: &ModuleRep) -> Result<Poly, GrassmannError> {
    let n = a.vertex_count();
    if m.is_zero() {
        return Ok(Poly::one(n));
    }
    let max_bound: usize = m.dims.iter().map(|&x| x * x / 2 + 1).sum();
    let want = (max_bound + 2).min(PRIMES.len());
    let data = collect_counts(a, m, want)?;
    let mut poly = Poly::zero(n);
    for d in dim_vectors_below(&m.dims) {
        let bound: usize = d
            .iter()
            .zip(&m.dims)
            .map(|(&k, &nn)| k * (nn.saturating_sub(k)))
            .sum();
        let points: Vec<(u64, u128)> = data
            .iter()
            .map(|(p, map)| (*p, map.get(&d).copied().unwrap_or(0)))
            .collect();
        let chi = interpolate_at_one(&points, bound)?;
        if !chi.is_zero() {
            let exp: Vec<i64> = d.iter().map(|&x| x as i64).collect();
            poly = poly.add(&Poly::monomial(n, exp, chi));
        }
    }
    // structural sanity: constant term 1 and monic top coefficient
    debug_assert!(poly.constant_term().is_one());
    Ok(poly)
}
