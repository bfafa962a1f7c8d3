//! The bounded-singularity hypothesis: fiber singularities must stay in a
//! bounded region as the parameter varies. Verified through the ideal of
//! fiberwise-singular points: its dimension, its behaviour at infinity and
//! the finiteness of its fibers.

use super::polar::{infinity_parameter_image, tau_varset, InfinityImage};
use super::{AnalysisError, Family};
use crate::groebner::{parameter_shift, Ideal, MonomialOrder};
use crate::poly::{rat, Polynomial, Rational};
use crate::univar::factor_squarefree_rational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Parameter values with a singular fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularValues {
    /// Every fiber is smooth.
    None,
    /// Finitely many, cut out by these irreducible parameter polynomials.
    Finite(Vec<Polynomial>),
    /// Every fiber is singular (a horizontal curve of critical points).
    Everywhere,
}

impl SingularValues {
    pub fn contains(&self, c: &Rational) -> bool {
        match self {
            SingularValues::None => false,
            SingularValues::Everywhere => true,
            SingularValues::Finite(ps) => ps.iter().any(|p| {
                let mut pt = BTreeMap::new();
                pt.insert(0usize, c.clone());
                p.evaluate(&pt).map(|v| v.is_zero()).unwrap_or(false)
            }),
        }
    }

    pub fn is_smooth_family(&self) -> bool {
        matches!(self, SingularValues::None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub pass: bool,
    pub smooth_family: bool,
    pub singular_values: SingularValues,
    pub diagnostics: Vec<String>,
}

/// Check that fiber singularities form a bounded set uniformly in the
/// parameter: the singular ideal S = (F, dF/dx_1, ..., dF/dx_n) is empty or
/// a set of dimension at most one whose projective closure in the space
/// directions stays off the hyperplane at infinity, with finite fibers.
/// Failure is a reported outcome, not an error.
pub fn verify_hypothesis(fam: &Family) -> Result<HypothesisReport, AnalysisError> {
    let vars = fam.varset();
    let mut gens = vec![fam.polynomial().clone()];
    gens.extend(fam.space_partials().into_iter().filter(|p| !p.is_zero()));
    let singular = Ideal::with_vars(vars, gens, MonomialOrder::Grevlex)?;
    let mut diagnostics = Vec::new();
    if singular.is_unit() {
        diagnostics.push("fiberwise singular locus is empty: smooth family".to_string());
        return Ok(HypothesisReport {
            pass: true,
            smooth_family: true,
            singular_values: SingularValues::None,
            diagnostics,
        });
    }
    let mut pass = true;
    let dim = singular.krull_dimension();
    diagnostics.push(format!("fiberwise singular locus has dimension {dim}"));
    if dim > 1 {
        pass = false;
        diagnostics.push("singular locus dimension exceeds 1".to_string());
    }
    match infinity_parameter_image(&singular)? {
        InfinityImage::Empty => {
            diagnostics.push("singular locus stays off the hyperplane at infinity".to_string());
        }
        InfinityImage::Finite(ps) => {
            pass = false;
            let names: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
            diagnostics.push(format!(
                "singular points reach infinity over roots of: {}",
                names.join(", ")
            ));
        }
        InfinityImage::PositiveDimensional => {
            pass = false;
            diagnostics
                .push("singular locus meets infinity in positive dimension".to_string());
        }
    }
    // parameter values with singular fibers
    let pidx = fam.parameter_index();
    let drop: Vec<usize> = (0..vars.len()).filter(|&i| i != pidx).collect();
    let image = singular.eliminate(&drop);
    let singular_values = if image.is_zero_ideal() {
        diagnostics.push("every fiber is singular".to_string());
        SingularValues::Everywhere
    } else if image.is_unit() {
        // isolated singular points can still be invisible in the closure of
        // the image only when there are none at all
        SingularValues::None
    } else {
        let gen = image
            .univariate_generator()
            .expect("nonzero univariate ideal")
            .embed(&tau_varset(vars, pidx), &[0]);
        let factors = factor_squarefree_rational(&gen);
        let names: Vec<String> = factors.iter().map(|p| p.to_string()).collect();
        diagnostics.push(format!("singular fibers over roots of: {}", names.join(", ")));
        SingularValues::Finite(factors)
    };
    // fibers of the singular locus must be finite
    if let SingularValues::Finite(ps) = &singular_values {
        for p in ps {
            let fiber = singular.with_extra(&[p.embed(vars, &[pidx])])?;
            let fdim = fiber.krull_dimension();
            if fdim > 0 {
                pass = false;
                diagnostics.push(format!(
                    "singular locus over roots of {p} has dimension {fdim}"
                ));
            }
        }
    }
    for c in [rat(1), rat(-1)] {
        let fiber = singular.with_extra(&[parameter_shift(vars, &c)])?;
        let fdim = fiber.krull_dimension();
        if fdim > 0 {
            pass = false;
            diagnostics.push(format!("singular locus over {c} has dimension {fdim}"));
        }
    }
    Ok(HypothesisReport {
        pass,
        smooth_family: false,
        singular_values,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{FamilyMode, FamilySpec};

    fn fam(mode: FamilyMode, expr: &str, vars: &[&str]) -> Family {
        let spec = FamilySpec {
            mode,
            expression: expr.into(),
            space_vars: vars.iter().map(|s| s.to_string()).collect(),
            parameter: "t".into(),
        };
        Family::from_spec(&spec).unwrap()
    }

    #[test]
    fn smooth_family_passes() {
        let f = fam(FamilyMode::Fiber, "x + x^2*y", &["x", "y"]);
        let h = verify_hypothesis(&f).unwrap();
        assert!(h.pass);
        assert!(h.smooth_family);
        assert!(h.singular_values.is_smooth_family());
    }

    #[test]
    fn node_family_passes_with_singular_value() {
        let f = fam(FamilyMode::Fiber, "x^2 + y^2", &["x", "y"]);
        let h = verify_hypothesis(&f).unwrap();
        assert!(h.pass);
        assert!(!h.smooth_family);
        match &h.singular_values {
            SingularValues::Finite(ps) => {
                assert_eq!(ps.len(), 1);
                assert_eq!(ps[0].to_string(), "t");
            }
            other => panic!("unexpected: {other:?}"),
        }
        assert!(h.singular_values.contains(&rat(0)));
        assert!(!h.singular_values.contains(&rat(1)));
    }

    #[test]
    fn unbounded_singularities_fail() {
        // x^2 y - t: the fiber over 0 is singular along a line
        let f = fam(FamilyMode::General, "x^2*y - t", &["x", "y"]);
        let h = verify_hypothesis(&f).unwrap();
        assert!(!h.pass);
    }

    #[test]
    fn moving_node_passes() {
        // (x - t)^2 + y^2 - 1... the node moves with t but stays bounded on
        // parameter discs
        let f = fam(FamilyMode::General, "(x - t)^2 + y^2", &["x", "y"]);
        let h = verify_hypothesis(&f).unwrap();
        assert!(h.pass);
        assert!(matches!(h.singular_values, SingularValues::Everywhere));
        assert!(h.singular_values.contains(&rat(3)));
    }
}
