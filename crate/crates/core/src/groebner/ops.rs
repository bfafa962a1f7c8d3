//! Dimension theory and ideal operations on top of the Buchberger core.

use super::{GroebnerError, Ideal, MonomialOrder};
use crate::poly::{Monomial, Polynomial, Rational, VarSet};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Vector-space basis of a zero-dimensional quotient: the monomials outside
/// the leading-term ideal, closed under divisibility, ascending grevlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    basis: Vec<Monomial>,
}

impl Staircase {
    pub fn monomials(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }
}

impl Ideal {
    /// Krull dimension of the leading-term ideal: the largest cardinality of
    /// a variable subset S such that no leading monomial involves only
    /// variables of S. The unit ideal has dimension -1, the zero ideal the
    /// full ambient dimension.
    pub fn krull_dimension(&self) -> i64 {
        let n = self.varset().len();
        let lms = self.leading_monomials();
        let mut best: i64 = -1;
        for mask in 0u64..(1u64 << n) {
            let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if (subset.len() as i64) <= best {
                continue;
            }
            let bad = lms.iter().any(|m| {
                (0..n).all(|i| m.exp(i) == 0 || subset.contains(&i))
            });
            if !bad {
                best = subset.len() as i64;
            }
        }
        best
    }

    /// True iff the quotient is a finite-dimensional vector space: every
    /// variable carries a pure-power leading monomial (or the ideal is unit).
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let n = self.varset().len();
        let lms = self.leading_monomials();
        (0..n).all(|i| {
            lms.iter().any(|m| matches!(m.as_pure_power(), Some((j, _)) if j == i))
        })
    }

    /// Monomial basis of the quotient algebra; errors with the dimension when
    /// the ideal is not zero-dimensional.
    pub fn staircase(&self) -> Result<Staircase, GroebnerError> {
        if self.is_unit() {
            return Ok(Staircase { basis: Vec::new() });
        }
        if !self.is_zero_dimensional() {
            return Err(GroebnerError::NotZeroDimensional {
                dimension: self.krull_dimension(),
            });
        }
        let n = self.varset().len();
        let lms = self.leading_monomials();
        let mut seen: BTreeSet<Monomial> = BTreeSet::new();
        let mut queue = vec![Monomial::one(n)];
        while let Some(m) = queue.pop() {
            if seen.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
                continue;
            }
            for i in 0..n {
                let mut exps = m.exps().to_vec();
                exps[i] += 1;
                queue.push(Monomial::from_exps(exps));
            }
            seen.insert(m);
        }
        Ok(Staircase { basis: seen.into_iter().collect() })
    }

    /// Vector-space dimension of the quotient by a zero-dimensional ideal.
    pub fn quotient_dimension(&self) -> Result<usize, GroebnerError> {
        Ok(self.staircase()?.len())
    }

    /// Generators of the intersection with the subring omitting the given
    /// variables, via a block elimination order. The result lives over the
    /// reduced variable set and carries its (already reduced) grevlex basis.
    pub fn eliminate(&self, drop: &[usize]) -> Ideal {
        let n = self.varset().len();
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        let new_vars = self.varset().keep(&keep);
        let block = self.with_order(MonomialOrder::Block(drop.to_vec()));
        let kept: Vec<Polynomial> = block
            .groebner_basis()
            .iter()
            .filter(|g| drop.iter().all(|&i| !g.involves(i)))
            .map(|g| g.project(&keep))
            .collect();
        let ideal = Ideal::with_vars(&new_vars, kept.clone(), MonomialOrder::Grevlex)
            .expect("projected generators share the reduced varset");
        // The block order restricts to grevlex on the kept variables, so the
        // filtered elements already form the reduced grevlex basis.
        let _ = ideal.gb.set(kept);
        ideal
    }

    /// Saturation I : g^infinity via a fresh auxiliary variable w and
    /// elimination of w from I + (1 - w*g).
    pub fn saturate(&self, g: &Polynomial) -> Ideal {
        assert!(!g.is_zero(), "saturation by the zero polynomial");
        let vars = self.varset();
        let w_name = vars.fresh_name("w");
        let ext = vars.with_auxiliary(&w_name).expect("fresh name");
        let w_idx = ext.len() - 1;
        let map: Vec<usize> = (0..vars.len()).collect();
        let mut gens: Vec<Polynomial> = self
            .generators()
            .iter()
            .map(|p| p.embed(&ext, &map))
            .collect();
        let w = Polynomial::variable(&ext, w_idx);
        let one = Polynomial::one(&ext);
        gens.push(one.try_sub(&w.try_mul(&g.embed(&ext, &map)).unwrap()).unwrap());
        let extended = Ideal::with_vars(&ext, gens, MonomialOrder::Block(vec![w_idx]))
            .expect("embedded generators");
        let eliminated = extended.eliminate(&[w_idx]);
        // re-anchor on the original varset Arc
        let gens: Vec<Polynomial> = eliminated
            .groebner_basis()
            .iter()
            .map(|p| p.embed(vars, &map))
            .collect();
        let ideal = Ideal::with_vars(vars, gens.clone(), MonomialOrder::Grevlex)
            .expect("same varset");
        let _ = ideal.gb.set(gens);
        ideal
    }

    /// The principal generator of an ideal in a univariate ring, monic;
    /// `None` for the zero ideal. Panics if the ambient ring has more than
    /// one variable.
    pub fn univariate_generator(&self) -> Option<Polynomial> {
        assert_eq!(self.varset().len(), 1, "univariate_generator needs one variable");
        let basis = self.groebner_basis();
        match basis.len() {
            0 => None,
            1 => Some(basis[0].clone()),
            _ => unreachable!("reduced basis in one variable is principal"),
        }
    }
}

/// Multiply out staircase coordinates: express `p` (assumed fully reduced)
/// in the staircase basis. Panics if a term of `p` falls outside it.
pub fn staircase_coordinates(stair: &Staircase, p: &Polynomial) -> Vec<Rational> {
    use num_traits::Zero;
    let mut coords = vec![Rational::zero(); stair.len()];
    for (m, c) in p.terms() {
        let k = stair
            .position(m)
            .expect("normal form lies in the staircase span");
        coords[k] = c.clone();
    }
    coords
}

/// Convenience: the ideal `(p)` for a single polynomial.
pub fn principal(p: &Polynomial) -> Ideal {
    Ideal::new(vec![p.clone()], MonomialOrder::Grevlex).expect("nonempty")
}

/// Convenience: τ - c over a family variable set.
pub fn parameter_shift(vars: &Arc<VarSet>, c: &Rational) -> Polynomial {
    let t = vars.parameter_index().expect("family varset has a parameter");
    let tau = Polynomial::variable(vars, t);
    tau.try_sub(&Polynomial::constant(vars, c.clone())).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{audit_reduced_basis, buchberger};
    use crate::poly::rat;

    fn p(vars: &Arc<VarSet>, s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, vars).unwrap()
    }

    #[test]
    fn eliminate_examples() {
        // I = (x - t, y - t^2), drop t -> (y - x^2)
        let v = VarSet::space_only(&["x", "y", "t"]).unwrap();
        let ideal = buchberger(
            vec![p(&v, "x - t"), p(&v, "y - t^2")],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let e = ideal.eliminate(&[2]);
        let vxy = VarSet::space_only(&["x", "y"]).unwrap();
        assert_eq!(e.groebner_basis().len(), 1);
        assert!(e.contains(&p(&vxy, "y - x^2")));
        assert!(audit_reduced_basis(&e));

        // I = (x), drop y -> (x)
        let ideal = buchberger(vec![p(&v, "x")], MonomialOrder::Grevlex).unwrap();
        let e = ideal.eliminate(&[1]);
        assert_eq!(e.groebner_basis().len(), 1);
        assert!(e.groebner_basis()[0].to_string() == "x");

        // I = (x*y - 1), drop y -> (0)
        let ideal = buchberger(vec![p(&v, "x*y - 1")], MonomialOrder::Grevlex).unwrap();
        let e = ideal.eliminate(&[1]);
        assert!(e.is_zero_ideal());
    }

    #[test]
    fn saturate_examples() {
        let v = VarSet::space_only(&["x", "y", "z"]).unwrap();
        // (xy, xz) : x^inf = (y, z)
        let ideal =
            buchberger(vec![p(&v, "x*y"), p(&v, "x*z")], MonomialOrder::Grevlex).unwrap();
        let sat = ideal.saturate(&p(&v, "x"));
        let expect = buchberger(vec![p(&v, "y"), p(&v, "z")], MonomialOrder::Grevlex).unwrap();
        assert!(sat.equals(&expect));

        // (x^2) : x^inf = (1)
        let ideal = buchberger(vec![p(&v, "x^2")], MonomialOrder::Grevlex).unwrap();
        assert!(ideal.saturate(&p(&v, "x")).is_unit());

        // (y) : x^inf = (y)
        let ideal = buchberger(vec![p(&v, "y")], MonomialOrder::Grevlex).unwrap();
        let sat = ideal.saturate(&p(&v, "x"));
        assert!(sat.equals(&ideal));
    }

    #[test]
    fn saturation_idempotent() {
        let v = VarSet::space_only(&["x", "y", "z"]).unwrap();
        let ideal = buchberger(
            vec![p(&v, "x^2*y - z^2"), p(&v, "x*z - y^2")],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let s1 = ideal.saturate(&p(&v, "x"));
        let s2 = s1.saturate(&p(&v, "x"));
        assert!(s1.equals(&s2));
    }

    #[test]
    fn krull_dimension_examples() {
        let v = VarSet::space_only(&["x", "y", "z"]).unwrap();
        let ideal = buchberger(vec![p(&v, "x"), p(&v, "y")], MonomialOrder::Grevlex).unwrap();
        assert_eq!(ideal.krull_dimension(), 1);
        let unit = buchberger(vec![p(&v, "1")], MonomialOrder::Grevlex).unwrap();
        assert_eq!(unit.krull_dimension(), -1);
        let vxy = VarSet::space_only(&["x", "y"]).unwrap();
        let zero = Ideal::zero(&vxy, MonomialOrder::Grevlex);
        assert_eq!(zero.krull_dimension(), 2);
    }

    #[test]
    fn staircase_examples() {
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        let ideal = buchberger(vec![p(&v, "x^2"), p(&v, "y")], MonomialOrder::Grevlex).unwrap();
        assert_eq!(ideal.quotient_dimension().unwrap(), 2);
        let stair = ideal.staircase().unwrap();
        assert_eq!(stair.monomials().len(), 2);
        assert!(stair.monomials()[0].is_one());
        assert_eq!(stair.monomials()[1], Monomial::var(2, 0));

        let ideal =
            buchberger(vec![p(&v, "x - 1"), p(&v, "y - 2")], MonomialOrder::Grevlex).unwrap();
        assert_eq!(ideal.quotient_dimension().unwrap(), 1);

        let ideal = buchberger(
            vec![p(&v, "x^2 + y^2 - 1"), p(&v, "x*y")],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        assert_eq!(ideal.quotient_dimension().unwrap(), 4);

        // not zero-dimensional
        let ideal = buchberger(vec![p(&v, "x")], MonomialOrder::Grevlex).unwrap();
        match ideal.quotient_dimension() {
            Err(GroebnerError::NotZeroDimensional { dimension: 1 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // unit ideal: zero-dimensional with empty staircase
        let unit = buchberger(vec![p(&v, "1")], MonomialOrder::Grevlex).unwrap();
        assert_eq!(unit.quotient_dimension().unwrap(), 0);
    }

    #[test]
    fn quotient_dimension_order_independent() {
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        let ideal = buchberger(
            vec![p(&v, "x^3 - 2*x*y"), p(&v, "x^2*y - 2*y^2 + x")],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let lex = ideal.with_order(MonomialOrder::Lex);
        assert_eq!(
            ideal.quotient_dimension().unwrap(),
            lex.quotient_dimension().unwrap()
        );
    }

    #[test]
    fn parameter_shift_builds() {
        let v = VarSet::family(&["x"], "t").unwrap();
        assert_eq!(parameter_shift(&v, &rat(3)).to_string(), "t - 3");
    }
}
