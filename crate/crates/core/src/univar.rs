//! Univariate polynomials over Q: irreducible factorization and rational
//! roots.
//!
//! Special parameter values are reported exactly, as irreducible polynomials
//! in the parameter, so the engine needs a real factorization routine:
//! squarefree reduction, Berlekamp factorization modulo a small prime,
//! Hensel lifting to a Mignotte-sized modulus and subset recombination.
//! Everything is deterministic: prime choice scans a fixed list and subset
//! recombination enumerates by size then index.

use crate::poly::{squarefree_part, Integer, Polynomial, Rational};
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

/// Rational root of a degree-one polynomial a*x + b.
pub fn rational_root(p: &Polynomial) -> Option<Rational> {
    if p.total_degree() != Some(1) || p.varset().len() != 1 {
        return None;
    }
    let coeffs = p.coeffs_wrt(0);
    let b = coeffs[0].constant_value()?;
    let a = coeffs[1].constant_value()?;
    Some(-b / a)
}

/// Distinct irreducible factors over Q of a nonconstant univariate
/// polynomial, integer-primitive with positive leading coefficient, sorted
/// by degree then coefficient sequence. Multiplicities are dropped.
pub fn factor_squarefree_rational(p: &Polynomial) -> Vec<Polynomial> {
    assert_eq!(p.varset().len(), 1, "univariate factorization");
    let sf = squarefree_part(p).expect("nonzero input");
    let n = match sf.total_degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d as usize,
    };
    if n == 1 {
        return vec![sf];
    }
    let coeffs = dense_coeffs(&sf);
    // monicize: F(y) = lc^(n-1) * sf(y/lc) is integer and monic
    let lc = coeffs[n].clone();
    let mut monic = vec![Integer::zero(); n + 1];
    monic[n] = Integer::one();
    for i in 0..n {
        monic[i] = &coeffs[i] * lc.pow((n - 1 - i) as u32);
    }
    let factors = factor_monic_squarefree(&monic);
    // map back through y = lc * x and normalize
    let vars = p.varset();
    let mut out: Vec<Polynomial> = factors
        .iter()
        .map(|g| {
            let terms: Vec<(crate::poly::Monomial, Rational)> = g
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    (
                        crate::poly::Monomial::from_exps(vec![i as u32]),
                        Rational::from_integer(c.clone())
                            * Rational::from_integer(lc.pow(i as u32)),
                    )
                })
                .collect();
            Polynomial::from_terms(vars, terms).primitive()
        })
        .collect();
    out.sort_by(factor_sort_key);
    out.dedup();
    out
}

/// Deterministic ordering for reported factors.
pub fn factor_sort_key(a: &Polynomial, b: &Polynomial) -> std::cmp::Ordering {
    let da = a.total_degree().unwrap_or(0);
    let db = b.total_degree().unwrap_or(0);
    da.cmp(&db).then_with(|| {
        let ca = dense_coeffs(a);
        let cb = dense_coeffs(b);
        ca.cmp(&cb)
    })
}

fn dense_coeffs(p: &Polynomial) -> Vec<Integer> {
    let prim = p.primitive();
    let d = prim.total_degree().unwrap_or(0) as usize;
    let mut out = vec![Integer::zero(); d + 1];
    for (m, c) in prim.terms() {
        debug_assert!(c.denom().is_one());
        out[m.exp(0) as usize] = c.numer().clone();
    }
    out
}

// ---------------------------------------------------------------------------
// dense integer polynomials (index = degree)

fn deg(f: &[Integer]) -> usize {
    f.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn trim(mut f: Vec<Integer>) -> Vec<Integer> {
    while f.len() > 1 && f.last().map(|c| c.is_zero()).unwrap_or(false) {
        f.pop();
    }
    f
}

fn mul_int(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact division by a monic divisor; `None` when the remainder is nonzero.
fn div_exact_monic(f: &[Integer], g: &[Integer]) -> Option<Vec<Integer>> {
    let dg = deg(g);
    debug_assert!(g[dg].is_one());
    let df = deg(f);
    if df < dg {
        return None;
    }
    let mut rem = f.to_vec();
    let mut quot = vec![Integer::zero(); df - dg + 1];
    for k in (0..=(df - dg)).rev() {
        let c = rem[k + dg].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (j, gj) in g.iter().enumerate().take(dg + 1) {
            rem[k + j] -= &c * gj;
        }
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(trim(quot))
    } else {
        None
    }
}

fn norm2_ceil(f: &[Integer]) -> Integer {
    let sum: Integer = f.iter().map(|c| c * c).sum();
    // integer square root, rounded up
    let mut lo = Integer::zero();
    let mut hi = sum.clone() + 1;
    while &lo < &hi {
        let mid: Integer = (&lo + &hi) / 2;
        if &mid * &mid >= sum {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    hi
}

// ---------------------------------------------------------------------------
// arithmetic modulo a small prime

const PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

fn mod_p(c: &Integer, p: u64) -> u64 {
    let m = c.mod_floor(&Integer::from(p));
    m.to_u64().expect("reduced")
}

fn trim_p(mut f: Vec<u64>) -> Vec<u64> {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

fn deg_p(f: &[u64]) -> usize {
    f.iter().rposition(|&c| c != 0).unwrap_or(0)
}

fn is_zero_p(f: &[u64]) -> bool {
    f.iter().all(|&c| c == 0)
}

fn inv_p(a: u64, p: u64) -> u64 {
    // Fermat
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn mul_poly_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim_p(out)
}

fn rem_poly_p(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let dgm = deg_p(g);
    let inv = inv_p(g[dgm], p);
    let mut r = f.to_vec();
    while !is_zero_p(&r) && deg_p(&r) >= dgm {
        let dr = deg_p(&r);
        let c = r[dr] * inv % p;
        for j in 0..=dgm {
            let sub = c * g[j] % p;
            r[dr - dgm + j] = (r[dr - dgm + j] + p - sub) % p;
        }
        r = trim_p(r);
        if deg_p(&r) == 0 && r[0] == 0 {
            break;
        }
    }
    trim_p(r)
}

fn gcd_poly_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim_p(a.to_vec());
    let mut b = trim_p(b.to_vec());
    while !is_zero_p(&b) {
        let r = rem_poly_p(&a, &b, p);
        a = b;
        b = r;
    }
    // monic
    if !is_zero_p(&a) {
        let inv = inv_p(a[deg_p(&a)], p);
        for c in a.iter_mut() {
            *c = *c * inv % p;
        }
    }
    a
}

fn derivative_p(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![0];
    }
    trim_p((1..f.len()).map(|i| f[i] * (i as u64 % p) % p).collect())
}

/// x^e mod (f, p)
fn xpow_mod(e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = rem_poly_p(&[0, 1], f, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = rem_poly_p(&mul_poly_p(&acc, &base, p), f, p);
        }
        base = rem_poly_p(&mul_poly_p(&base, &base, p), f, p);
        e >>= 1;
    }
    acc
}

/// Berlekamp factorization of a monic squarefree polynomial mod p.
fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = deg_p(f);
    if n == 1 {
        return vec![f.to_vec()];
    }
    // Frobenius matrix: column i = x^(i*p) mod f
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = xpow_mod(i as u64 * p, f, p);
        c.resize(n, 0);
        cols.push(c);
    }
    // kernel of (M - I) over F_p; unknowns are coefficient vectors
    let mut mat: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let v = cols[c][r] % p;
                    if r == c {
                        (v + p - 1) % p
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    // gaussian elimination
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let pr = (row..n).find(|&r| mat[r][col] != 0);
        let pr = match pr {
            None => continue,
            Some(r) => r,
        };
        mat.swap(row, pr);
        let inv = inv_p(mat[row][col], p);
        for j in 0..n {
            mat[row][j] = mat[row][j] * inv % p;
        }
        for r in 0..n {
            if r != row && mat[r][col] != 0 {
                let fac = mat[r][col];
                for j in 0..n {
                    let sub = fac * mat[row][j] % p;
                    mat[r][j] = (mat[r][j] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let r_count = free.len();
    let mut kernel: Vec<Vec<u64>> = Vec::new();
    for &fc in &free {
        let mut v = vec![0u64; n];
        v[fc] = 1;
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - mat[ri][fc]) % p;
        }
        kernel.push(trim_p(v));
    }
    let mut factors: Vec<Vec<u64>> = vec![f.to_vec()];
    if r_count <= 1 {
        return factors;
    }
    'split: for v in &kernel {
        if deg_p(v) == 0 {
            continue; // constant kernel vector splits nothing
        }
        let mut next: Vec<Vec<u64>> = Vec::new();
        for u in factors.drain(..) {
            if deg_p(&u) <= 1 {
                next.push(u);
                continue;
            }
            let mut rest = u.clone();
            let vr = rem_poly_p(v, &rest, p);
            let mut pieces: Vec<Vec<u64>> = Vec::new();
            for s in 0..p {
                if deg_p(&rest) == 0 {
                    break;
                }
                let mut shifted = vr.clone();
                if shifted.is_empty() {
                    shifted = vec![0];
                }
                shifted[0] = (shifted[0] + p - s) % p;
                let g = gcd_poly_p(&rest, &shifted, p);
                if deg_p(&g) > 0 && deg_p(&g) < deg_p(&rest) {
                    rest = {
                        let mut q = rest.clone();
                        // divide rest by g mod p
                        let mut quot = vec![0u64; deg_p(&rest) - deg_p(&g) + 1];
                        let ginv = inv_p(g[deg_p(&g)], p);
                        while !is_zero_p(&q) && deg_p(&q) >= deg_p(&g) {
                            let dq = deg_p(&q);
                            let c = q[dq] * ginv % p;
                            quot[dq - deg_p(&g)] = c;
                            for j in 0..=deg_p(&g) {
                                let sub = c * g[j] % p;
                                q[dq - deg_p(&g) + j] = (q[dq - deg_p(&g) + j] + p - sub) % p;
                            }
                            q = trim_p(q);
                            if is_zero_p(&q) {
                                break;
                            }
                        }
                        trim_p(quot)
                    };
                    pieces.push(g);
                }
            }
            if deg_p(&rest) > 0 {
                pieces.push(rest);
            }
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == r_count {
            break 'split;
        }
    }
    // monic normalize
    for u in factors.iter_mut() {
        let inv = inv_p(u[deg_p(u)], p);
        for c in u.iter_mut() {
            *c = *c * inv % p;
        }
    }
    factors.sort();
    factors
}

// ---------------------------------------------------------------------------
// Hensel lifting

fn mod_sym(c: &Integer, m: &Integer) -> Integer {
    let r = c.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}

fn reduce_sym(f: &[Integer], m: &Integer) -> Vec<Integer> {
    trim(f.iter().map(|c| mod_sym(c, m)).collect())
}

fn mul_mod(a: &[Integer], b: &[Integer], m: &Integer) -> Vec<Integer> {
    reduce_sym(&mul_int(a, b), m)
}

fn sub_mod(a: &[Integer], b: &[Integer], m: &Integer) -> Vec<Integer> {
    let n = a.len().max(b.len());
    let mut out = vec![Integer::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(Integer::zero);
        let y = b.get(i).cloned().unwrap_or_else(Integer::zero);
        *o = x - y;
    }
    reduce_sym(&out, m)
}

fn add_mod(a: &[Integer], b: &[Integer], m: &Integer) -> Vec<Integer> {
    let n = a.len().max(b.len());
    let mut out = vec![Integer::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(Integer::zero);
        let y = b.get(i).cloned().unwrap_or_else(Integer::zero);
        *o = x + y;
    }
    reduce_sym(&out, m)
}

/// Division with remainder by a monic divisor, coefficients mod m.
fn divrem_monic_mod(f: &[Integer], g: &[Integer], m: &Integer) -> (Vec<Integer>, Vec<Integer>) {
    let dg = deg(g);
    let mut rem = reduce_sym(f, m);
    if deg(&rem) < dg {
        return (vec![Integer::zero()], rem);
    }
    let df = deg(&rem);
    let mut quot = vec![Integer::zero(); df - dg + 1];
    for k in (0..=(df - dg)).rev() {
        let c = rem.get(k + dg).cloned().unwrap_or_else(Integer::zero);
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..=dg {
            let idx = k + j;
            let v = &rem[idx] - &(&c * &g[j]);
            rem[idx] = v;
        }
    }
    (reduce_sym(&quot, m), reduce_sym(&rem, m))
}

/// One quadratic Hensel step: from f = g*h (mod m) with s*g + t*h = 1 (mod m)
/// to the same identities mod m^2. g and h monic.
fn hensel_step(
    m: &Integer,
    f: &[Integer],
    g: &[Integer],
    h: &[Integer],
    s: &[Integer],
    t: &[Integer],
) -> (Vec<Integer>, Vec<Integer>, Vec<Integer>, Vec<Integer>) {
    let m2 = m * m;
    let e = sub_mod(f, &mul_int(g, h), &m2);
    let (q, r) = divrem_monic_mod(&mul_mod(s, &e, &m2), h, &m2);
    let g_new = add_mod(&add_mod(g, &mul_mod(t, &e, &m2), &m2), &mul_mod(&q, g, &m2), &m2);
    let h_new = add_mod(h, &r, &m2);
    // lift the Bezout identity alongside
    let b = {
        let sg = mul_mod(s, &g_new, &m2);
        let th = mul_mod(t, &h_new, &m2);
        sub_mod(&add_mod(&sg, &th, &m2), &[Integer::one()], &m2)
    };
    let (c, d) = divrem_monic_mod(&mul_mod(s, &b, &m2), &h_new, &m2);
    let s_new = sub_mod(s, &d, &m2);
    let t_new = {
        let tb = mul_mod(t, &b, &m2);
        let cg = mul_mod(&c, &g_new, &m2);
        sub_mod(&sub_mod(t, &tb, &m2), &cg, &m2)
    };
    (g_new, h_new, s_new, t_new)
}

/// Extended Euclid over F_p: s*g + t*h = 1.
fn bezout_p(g: &[u64], h: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    // iterative extended gcd on polynomials mod p
    let mut r0 = g.to_vec();
    let mut r1 = h.to_vec();
    let mut s0 = vec![1u64];
    let mut s1 = vec![0u64];
    let mut t0 = vec![0u64];
    let mut t1 = vec![1u64];
    while !is_zero_p(&r1) && !(deg_p(&r1) == 0 && r1[0] == 0) {
        // quotient of r0 by r1
        let mut q = vec![0u64; deg_p(&r0).saturating_sub(deg_p(&r1)) + 1];
        let mut rem = r0.clone();
        let inv = inv_p(r1[deg_p(&r1)], p);
        while !is_zero_p(&rem) && deg_p(&rem) >= deg_p(&r1) {
            let dr = deg_p(&rem);
            let c = rem[dr] * inv % p;
            q[dr - deg_p(&r1)] = c;
            for j in 0..=deg_p(&r1) {
                let sub = c * r1[j] % p;
                rem[dr - deg_p(&r1) + j] = (rem[dr - deg_p(&r1) + j] + p - sub) % p;
            }
            rem = trim_p(rem);
            if is_zero_p(&rem) {
                break;
            }
        }
        let neg = |v: &[u64]| -> Vec<u64> { v.iter().map(|&c| (p - c % p) % p).collect() };
        let qs1 = mul_poly_p(&q, &s1, p);
        let qt1 = mul_poly_p(&q, &t1, p);
        let s2 = trim_p(add_p(&s0, &neg(&qs1), p));
        let t2 = trim_p(add_p(&t0, &neg(&qt1), p));
        r0 = r1;
        r1 = trim_p(rem);
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // r0 is the gcd, a nonzero constant (coprime inputs)
    let inv = inv_p(r0[0], p);
    let scale = |v: &[u64]| -> Vec<u64> { v.iter().map(|&c| c * inv % p).collect() };
    (scale(&s0), scale(&t0))
}

fn add_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect()
}

fn lift_ints(f: &[u64], p: u64) -> Vec<Integer> {
    let m = Integer::from(p);
    f.iter()
        .map(|&c| mod_sym(&Integer::from(c), &m))
        .collect()
}

/// Factor a monic squarefree integer polynomial into monic irreducible
/// integer factors (Zassenhaus).
fn factor_monic_squarefree(f: &[Integer]) -> Vec<Vec<Integer>> {
    let n = deg(f);
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // prime with squarefree reduction
    let (p, modular) = PRIMES
        .iter()
        .find_map(|&p| {
            let fp = trim_p(f.iter().map(|c| mod_p(c, p)).collect());
            if deg_p(&fp) != n {
                return None; // cannot happen for monic f, kept for safety
            }
            let d = derivative_p(&fp, p);
            if deg_p(&gcd_poly_p(&fp, &d, p)) == 0 && !is_zero_p(&gcd_poly_p(&fp, &d, p)) {
                Some((p, fp))
            } else {
                None
            }
        })
        .expect("some small prime keeps a squarefree polynomial squarefree");
    let mod_factors = berlekamp(&modular, p);
    if mod_factors.len() == 1 {
        return vec![f.to_vec()]; // irreducible mod p, hence over Q
    }
    // lifting bound: factor coefficients are below 2^n * ||f||_2
    let bound: Integer = (Integer::one() << (n as u32 + 1)) * norm2_ceil(f) + 1;
    let two_bound: Integer = &bound * 2;
    let mut modulus = Integer::from(p);
    let mut steps = 0u32;
    while modulus <= two_bound {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    // lift each factor against its cofactor independently (the lifted
    // factorization is unique, so the collection stays consistent)
    let mut lifted: Vec<Vec<Integer>> = Vec::new();
    for (k, gk) in mod_factors.iter().enumerate() {
        let mut cof = vec![1u64];
        for (j, gj) in mod_factors.iter().enumerate() {
            if j != k {
                cof = mul_poly_p(&cof, gj, p);
            }
        }
        let (s, t) = bezout_p(gk, &cof, p);
        let mut g = lift_ints(gk, p);
        let mut h = lift_ints(&cof, p);
        let mut sv = lift_ints(&s, p);
        let mut tv = lift_ints(&t, p);
        let mut m = Integer::from(p);
        for _ in 0..steps {
            let (g2, h2, s2, t2) = hensel_step(&m, f, &g, &h, &sv, &tv);
            g = g2;
            h = h2;
            sv = s2;
            tv = t2;
            m = &m * &m;
        }
        lifted.push(reduce_sym(&g, &m));
    }
    let final_modulus = {
        let mut m = Integer::from(p);
        for _ in 0..steps {
            m = &m * &m;
        }
        m
    };
    // subset recombination
    let mut out: Vec<Vec<Integer>> = Vec::new();
    let mut pool: Vec<Vec<Integer>> = lifted;
    let mut remaining = f.to_vec();
    'outer: while deg(&remaining) > 0 {
        let r = pool.len();
        for size in 1..=r {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let mut candidate = vec![Integer::one()];
                for &i in &idx {
                    candidate = reduce_sym(&mul_int(&candidate, &pool[i]), &final_modulus);
                }
                if let Some(quot) = div_exact_monic(&remaining, &candidate) {
                    out.push(candidate);
                    let drop: Vec<usize> = idx.clone();
                    pool = pool
                        .into_iter()
                        .enumerate()
                        .filter(|(i, _)| !drop.contains(i))
                        .map(|(_, g)| g)
                        .collect();
                    remaining = quot;
                    continue 'outer;
                }
                // next subset of this size
                let mut k = size;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    if idx[k] != k + r - size {
                        idx[k] += 1;
                        for j in (k + 1)..size {
                            idx[j] = idx[j - 1] + 1;
                        }
                        break;
                    }
                    if k == 0 {
                        idx.clear();
                        break;
                    }
                }
                if idx.is_empty() {
                    break;
                }
            }
            if pool.is_empty() {
                break;
            }
        }
        // the remaining cofactor is irreducible
        if deg(&remaining) > 0 {
            out.push(remaining.clone());
        }
        break;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;
    use std::sync::Arc;

    fn vt() -> Arc<VarSet> {
        VarSet::new(vec![("t", crate::poly::VarRole::Parameter)]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, &vt()).unwrap()
    }

    fn strings(fs: &[Polynomial]) -> Vec<String> {
        fs.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn linear_and_monomial() {
        assert_eq!(strings(&factor_squarefree_rational(&p("t"))), ["t"]);
        assert_eq!(strings(&factor_squarefree_rational(&p("3*t - 6"))), ["t - 2"]);
        assert_eq!(strings(&factor_squarefree_rational(&p("t^3"))), ["t"]);
    }

    #[test]
    fn splits_rational_roots() {
        let fs = factor_squarefree_rational(&p("t^2 - 1"));
        assert_eq!(strings(&fs), ["t - 1", "t + 1"]);
        let fs = factor_squarefree_rational(&p("2*t^2 - 3*t + 1"));
        assert_eq!(strings(&fs), ["t - 1", "2*t - 1"]);
    }

    #[test]
    fn keeps_irreducibles() {
        assert_eq!(strings(&factor_squarefree_rational(&p("t^2 - 2"))), ["t^2 - 2"]);
        assert_eq!(strings(&factor_squarefree_rational(&p("t^2 + 1"))), ["t^2 + 1"]);
        // irreducible over Q but reducible mod every prime: recombination test
        assert_eq!(strings(&factor_squarefree_rational(&p("t^4 + 1"))), ["t^4 + 1"]);
    }

    #[test]
    fn mixed_product() {
        let f = p("t").try_mul(&p("t^2 - 2")).unwrap().try_mul(&p("t - 1")).unwrap();
        let fs = factor_squarefree_rational(&f);
        assert_eq!(strings(&fs), ["t - 1", "t", "t^2 - 2"]);
        // multiplicities dropped
        let g = f.try_mul(&p("t")).unwrap();
        assert_eq!(strings(&factor_squarefree_rational(&g)), ["t - 1", "t", "t^2 - 2"]);
    }

    #[test]
    fn bigger_product_roundtrip() {
        let f = p("(t^2 + t + 1)*(t^3 - 2)*(2*t - 3)");
        let fs = factor_squarefree_rational(&f);
        assert_eq!(strings(&fs), ["2*t - 3", "t^2 + t + 1", "t^3 - 2"]);
        let mut prod = Polynomial::one(&vt());
        for g in &fs {
            prod = prod.try_mul(g).unwrap();
        }
        assert_eq!(prod.primitive(), f.primitive());
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_root(&p("t")), Some(crate::poly::rat(0)));
        assert_eq!(rational_root(&p("2*t - 1")), Some(crate::poly::rat_frac(1, 2)));
        assert_eq!(rational_root(&p("t^2 - 1")), None);
    }
}
