//! Multivariate gcd over Q via primitive subresultant remainder sequences.
//!
//! Recursion is on the last occurring variable: polynomials are viewed as
//! univariate with polynomial coefficients, contents are extracted by
//! recursive gcd, and the primitive PRS does the univariate work. Adequate
//! at desk scale (few variables, small degrees); no modular arithmetic.

use super::{PolyError, Polynomial};

/// Exact quotient f/g, or `None` when g does not divide f.
pub fn exact_div(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if g.is_zero() {
        return None;
    }
    if f.is_zero() {
        return Some(f.clone());
    }
    let vars = f.varset().clone();
    let (glm, glc) = g.leading_grevlex().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut rem = f.clone();
    let mut quot = Polynomial::zero(&vars);
    while !rem.is_zero() {
        let (rlm, rlc) = rem.leading_grevlex().map(|(m, c)| (m.clone(), c.clone()))?;
        let qm = rlm.try_div(&glm)?;
        let qc = rlc / &glc;
        let t = Polynomial::from_terms(&vars, [(qm.clone(), qc.clone())]);
        quot = quot.try_add(&t).ok()?;
        rem = rem.try_sub(&g.mul_term(&qm, &qc)).ok()?;
    }
    Some(quot)
}

/// Pseudo-remainder of f by g with respect to variable `v`:
/// lc(g)^(deg f - deg g + 1) * f = q*g + r with deg_v r < deg_v g.
fn pseudo_rem(f: &Polynomial, g: &Polynomial, v: usize) -> Polynomial {
    let vars = f.varset().clone();
    let dg = g.degree_in(v).expect("nonzero divisor");
    let g_coeffs = g.coeffs_wrt(v);
    let lc_g = g_coeffs[dg as usize].clone();
    let mut r = f.clone();
    loop {
        let dr = match r.degree_in(v) {
            None => return r,
            Some(d) => d,
        };
        if dr < dg {
            return r;
        }
        let r_coeffs = r.coeffs_wrt(v);
        let lc_r = r_coeffs[dr as usize].clone();
        // r <- lc_g * r - lc_r * v^(dr-dg) * g
        let shift = Polynomial::from_coeffs_wrt(&vars, v, &{
            let mut cs = vec![Polynomial::zero(&vars); (dr - dg) as usize + 1];
            let last = cs.len() - 1;
            cs[last] = lc_r.clone();
            cs
        });
        r = r
            .try_mul(&lc_g)
            .and_then(|a| a.try_sub(&shift.try_mul(g).unwrap()))
            .expect("same varset");
    }
}

/// Content of f with respect to variable `v`: gcd of the coefficient
/// polynomials in the remaining variables.
fn content_wrt(f: &Polynomial, v: usize) -> Polynomial {
    let coeffs = f.coeffs_wrt(v);
    let mut acc = Polynomial::zero(f.varset());
    for c in &coeffs {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, c);
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
    }
    acc
}

/// Greatest common divisor, normalized to integer-primitive form with
/// positive leading coefficient. gcd(0,0) = 0; nonzero constants give 1.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let vars = f.varset().clone();
    if f.is_zero() {
        return g.primitive();
    }
    if g.is_zero() {
        return f.primitive();
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(&vars);
    }
    // Main variable: last index occurring in either operand.
    let v = f
        .support()
        .into_iter()
        .chain(g.support())
        .max()
        .expect("nonconstant operands");
    let df = f.degree_in(v).unwrap_or(0);
    let dg = g.degree_in(v).unwrap_or(0);
    if df == 0 || dg == 0 {
        // One operand is constant in v: gcd divides both contents.
        let cf = if df == 0 { f.primitive() } else { content_wrt(f, v) };
        let cg = if dg == 0 { g.primitive() } else { content_wrt(g, v) };
        return gcd(&cf, &cg);
    }
    let (mut a, mut b) = if df >= dg {
        (f.clone(), g.clone())
    } else {
        (g.clone(), f.clone())
    };
    let content_a = content_wrt(&a, v);
    let content_b = content_wrt(&b, v);
    a = exact_div(&a, &content_a).expect("content divides");
    b = exact_div(&b, &content_b).expect("content divides");
    let c = gcd(&content_a, &content_b);
    // Primitive PRS on the primitive parts.
    loop {
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        let cont = content_wrt(&r, v);
        let r = exact_div(&r, &cont).expect("content divides");
        a = b;
        b = r;
        if b.degree_in(v).unwrap_or(0) == 0 {
            // coprime primitive parts
            return c.primitive();
        }
    }
    b.try_mul(&c).expect("same varset").primitive()
}

/// Product of the distinct irreducible factors of p, up to a rational
/// constant: p / gcd(p, dp/dx_1, ..., dp/dx_k) over every occurring
/// variable, normalized integer-primitive with positive leading coefficient.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut g = p.clone();
    for v in p.support() {
        g = gcd(&g, &p.partial_derivative(v));
        if g.is_constant() {
            break;
        }
    }
    if g.is_constant() {
        return Ok(p.primitive());
    }
    let q = exact_div(p, &g).expect("gcd divides");
    Ok(q.primitive())
}

/// True when q^2 divides p.
pub fn divides_squared(q: &Polynomial, p: &Polynomial) -> bool {
    let q2 = q.try_mul(q).expect("same varset");
    exact_div(p, &q2).is_some()
}

/// p is squarefree iff it equals its squarefree part up to a constant.
pub fn is_squarefree(p: &Polynomial) -> bool {
    match squarefree_part(p) {
        Err(_) => false,
        Ok(sf) => sf == p.primitive(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;

    fn p(vars: &std::sync::Arc<VarSet>, s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, vars).unwrap()
    }

    #[test]
    fn exact_division() {
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        let f = p(&v, "x^2 - y^2");
        let g = p(&v, "x - y");
        assert_eq!(exact_div(&f, &g).unwrap(), p(&v, "x + y"));
        assert!(exact_div(&p(&v, "x^2 + 1"), &g).is_none());
    }

    #[test]
    fn gcd_univariate() {
        let v = VarSet::space_only(&["x"]).unwrap();
        let f = p(&v, "x^2 - 1");
        let g = p(&v, "x^2 - 2*x + 1");
        assert_eq!(gcd(&f, &g), p(&v, "x - 1"));
        assert_eq!(gcd(&f, &p(&v, "x^2 + 1")), p(&v, "1"));
    }

    #[test]
    fn gcd_multivariate() {
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        let a = p(&v, "(x + y)*(x - 2*y)");
        let b = p(&v, "(x + y)*(x*y + 1)");
        assert_eq!(gcd(&a, &b), p(&v, "x + y"));
        // content interplay
        let a = p(&v, "2*x*y + 2*y^2");
        let b = p(&v, "4*x^2 - 4*y^2");
        assert_eq!(gcd(&a, &b), p(&v, "x + y"));
    }

    #[test]
    fn squarefree_examples() {
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        assert_eq!(squarefree_part(&p(&v, "(x + y)^2")).unwrap(), p(&v, "x + y"));
        let f = p(&v, "x*(1 + x*y)");
        assert_eq!(squarefree_part(&f).unwrap(), f.primitive());
        assert_eq!(squarefree_part(&p(&v, "x^2*y^3")).unwrap(), p(&v, "x*y"));
        assert!(squarefree_part(&p(&v, "0")).is_err());
    }

    #[test]
    fn squarefree_of_products() {
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        let factors = [p(&v, "x + y"), p(&v, "x - y + 1"), p(&v, "x*y - 1")];
        let f = factors[0].pow(2).try_mul(&factors[1].pow(3)).unwrap().try_mul(&factors[2]).unwrap();
        let s = squarefree_part(&f).unwrap();
        let expected = factors[0].try_mul(&factors[1]).unwrap().try_mul(&factors[2]).unwrap();
        assert_eq!(s, expected.primitive());
        for q in &factors {
            assert!(exact_div(&s, q).is_some());
            assert!(!divides_squared(q, &s));
        }
        assert_eq!(squarefree_part(&s).unwrap(), s);
        assert!(!is_squarefree(&f));
        assert!(is_squarefree(&s));
    }
}
