//! Shared helpers for the integration suites: seeded random families and an
//! independent resultant-based intersection oracle that never touches the
//! Groebner path.

#![allow(dead_code)]

use equising::invariants::{apply_generic_coordinates, verify_hypothesis, Family};
use equising::parse::{parse_polynomial, FamilyMode, FamilySpec};
use equising::poly::{exact_div, gcd, rat, Monomial, Polynomial, Rational, VarSet};
use num_traits::Zero;
use rand::Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

pub fn family(mode: FamilyMode, expr: &str, vars: &[&str]) -> Family {
    let spec = FamilySpec {
        mode,
        expression: expr.into(),
        space_vars: vars.iter().map(|s| s.to_string()).collect(),
        parameter: "t".into(),
    };
    Family::from_spec(&spec).unwrap()
}

pub fn spec(mode: FamilyMode, expr: &str, vars: &[&str]) -> FamilySpec {
    FamilySpec {
        mode,
        expression: expr.into(),
        space_vars: vars.iter().map(|s| s.to_string()).collect(),
        parameter: "t".into(),
    }
}

/// Random bivariate polynomial of space degree between 2 and `max_degree`,
/// with small integer coefficients.
pub fn random_bivariate(rng: &mut impl Rng, max_degree: u32) -> Polynomial {
    let vars = VarSet::space_only(&["x", "y"]).unwrap();
    loop {
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        for i in 0..=max_degree {
            for j in 0..=(max_degree - i) {
                if rng.gen_range(0..10) < 4 {
                    let c = loop {
                        let v = rng.gen_range(-4i64..=4);
                        if v != 0 {
                            break v;
                        }
                    };
                    terms.push((Monomial::from_exps(vec![i, j]), rat(c)));
                }
            }
        }
        let p = Polynomial::from_terms(&vars, terms);
        if p.space_degree().unwrap_or(0) >= 2 {
            return p;
        }
    }
}

/// Random bivariate fiber-mode family that satisfies the bounded-singularity
/// hypothesis (resampled until it does), with the fiber expression it was
/// built from.
pub fn random_valid_family(rng: &mut impl Rng, max_degree: u32) -> (Family, String) {
    loop {
        let f = random_bivariate(rng, max_degree);
        let expression = f.to_string();
        let spec = FamilySpec {
            mode: FamilyMode::Fiber,
            expression: expression.clone(),
            space_vars: vec!["x".into(), "y".into()],
            parameter: "t".into(),
        };
        let fam = match Family::from_spec(&spec) {
            Ok(f) => f,
            Err(_) => continue,
        };
        match verify_hypothesis(&fam) {
            Ok(h) if h.pass => return (fam, expression),
            _ => continue,
        }
    }
}

/// Resultant of two polynomials with respect to a variable, by fraction-free
/// elimination of the Sylvester matrix over the polynomial ring.
pub fn resultant(f: &Polynomial, g: &Polynomial, var: usize) -> Polynomial {
    let vars = f.varset().clone();
    let fc = f.coeffs_wrt(var);
    let gc = g.coeffs_wrt(var);
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    assert!(m > 0 || n > 0, "resultant of two constants");
    let size = m + n;
    let zero = Polynomial::zero(&vars);
    let mut mat: Vec<Vec<Polynomial>> = vec![vec![zero.clone(); size]; size];
    for row in 0..n {
        for (k, c) in fc.iter().enumerate() {
            mat[row][row + (m - k)] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in gc.iter().enumerate() {
            mat[n + row][row + (n - k)] = c.clone();
        }
    }
    // Bareiss fraction-free determinant over the polynomial ring
    let mut denom = Polynomial::one(&vars);
    let mut sign = false;
    let mut a = mat;
    for k in 0..size {
        if a[k][k].is_zero() {
            let swap = (k + 1..size).find(|&r| !a[r][k].is_zero());
            match swap {
                None => return Polynomial::zero(&vars),
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &a[k][k].try_mul(&a[i][j]).unwrap().try_sub(
                    &a[i][k].try_mul(&a[k][j]).unwrap(),
                ).unwrap();
                a[i][j] = exact_div(num, &denom).expect("Bareiss divisibility");
            }
            a[i][k] = Polynomial::zero(&vars);
        }
        denom = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Independent oracle for the top-level polar intersection number of a
/// bivariate family at a rational parameter value: the multiplicity-weighted
/// root count of Res_y(F_c, dF_c/dy) after discarding the roots shared with
/// the locus where the saturation generator dF_c/dx vanishes.
///
/// `matrix` must be the generic coordinate change used by the run under
/// test. Returns None when the configuration is degenerate for the oracle
/// (zero resultant or non-constant leading coefficient).
pub fn gamma1_resultant_oracle(
    fam: &Family,
    matrix: &[Vec<Rational>],
    c: &Rational,
) -> Option<u64> {
    let changed = apply_generic_coordinates(fam, matrix).ok()?;
    let fiber = changed.fiber(c);
    let vars = fiber.varset().clone();
    let (x, y) = (0usize, 1usize);
    let dy = fiber.degree_in(y)?;
    if dy == 0 {
        return None;
    }
    // leading y-coefficient must be constant so no intersections hide in the
    // vertical direction
    if !fiber.coeffs_wrt(y)[dy as usize].is_constant() {
        return None;
    }
    let g = fiber.partial_derivative(y);
    let h = fiber.partial_derivative(x);
    let r = resultant(&fiber, &g, y);
    if r.is_zero() {
        return None;
    }
    // x-locus of the points where the saturation generator vanishes
    let s1 = resultant(&fiber, &h, y);
    let s2 = resultant(&g, &h, y);
    let sigma = gcd(&s1, &s2);
    let mut clean = r;
    if !sigma.is_constant() {
        loop {
            let shared = gcd(&clean, &sigma);
            if shared.is_constant() {
                break;
            }
            clean = exact_div(&clean, &shared).expect("gcd divides");
        }
    }
    let _ = vars;
    Some(u64::from(clean.degree_in(x).unwrap_or(0)))
}

/// Parse helper over an explicit varset.
pub fn poly(vars: &Arc<VarSet>, s: &str) -> Polynomial {
    parse_polynomial(s, vars).unwrap()
}

/// Evaluate a univariate parameter polynomial at a rational.
pub fn eval_at(p: &Polynomial, c: &Rational) -> Rational {
    let mut pt = BTreeMap::new();
    pt.insert(0usize, c.clone());
    p.evaluate(&pt).unwrap()
}

pub fn is_root(p: &Polynomial, c: &Rational) -> bool {
    eval_at(p, c).is_zero()
}
