//! Per-fiber invariants: total Milnor number, Euler characteristic, the cell
//! model of the fiber, and the equisingularity verdict at a parameter value.

use super::hypothesis::HypothesisReport;
use super::profile::{GammaProfile, ProfileEngine};
use super::{AnalysisError, Family};
use crate::groebner::{Ideal, MonomialOrder};
use crate::linalg::multiplication_matrix;
use crate::poly::{Polynomial, Rational};

/// Sum of the Milnor numbers of the isolated singular points lying on the
/// fiber over c: the algebraic multiplicity of the eigenvalue 0 of
/// multiplication by F_c on the Jacobian quotient algebra.
pub fn milnor_total(fam: &Family, c: &Rational) -> Result<u64, AnalysisError> {
    let fiber = fam.fiber(c);
    if fiber.is_zero() {
        return Err(AnalysisError::Genericity(format!(
            "fiber at {c} is the whole space"
        )));
    }
    let vars = fiber.varset().clone();
    let jac: Vec<Polynomial> = (0..vars.len())
        .map(|i| fiber.partial_derivative(i))
        .filter(|p| !p.is_zero())
        .collect();
    if jac.is_empty() {
        // constant nonzero fiber polynomial: empty smooth fiber
        return Ok(0);
    }
    let jacobian = Ideal::with_vars(&vars, jac, MonomialOrder::Grevlex)?;
    if jacobian.is_unit() {
        return Ok(0);
    }
    if !jacobian.is_zero_dimensional() {
        return Err(AnalysisError::NonIsolatedSingularities {
            dimension: jacobian.krull_dimension(),
        });
    }
    let op = multiplication_matrix(&fiber, &jacobian)?;
    Ok(op.eigenvalue_zero_multiplicity() as u64)
}

/// Euler characteristic from the closed formula:
/// chi = (-1)^n mu + sum_i (-1)^i gamma_i.
pub fn euler_characteristic(n: usize, mu: u64, gamma: &[u64]) -> i64 {
    let sign = |k: usize| if k % 2 == 0 { 1i64 } else { -1i64 };
    let mut chi = sign(n) * mu as i64;
    for (i, &g) in gamma.iter().enumerate() {
        chi += sign(i) * g as i64;
    }
    chi
}

/// Euler jump between a nearby generic fiber and the fiber at c:
/// chi(X_u) - chi(X_c) = (-1)^(n-1) mu + sum_i (-1)^i lambda_i.
pub fn euler_jump(n: usize, mu: u64, lambda: &[i64]) -> i64 {
    let sign = |k: usize| if k % 2 == 0 { 1i64 } else { -1i64 };
    let mut jump = sign(n + 1) * mu as i64;
    for (i, &l) in lambda.iter().enumerate() {
        jump += sign(i) * l;
    }
    jump
}

/// Everything the tool knows about one fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub c: Rational,
    pub mu: u64,
    /// gamma[i] is the level-i value at c, ascending.
    pub gamma: Vec<u64>,
    pub chi: i64,
    /// Cell counts per dimension 0..n-1; the top count is gamma[n-1] - mu.
    pub cells: Vec<u64>,
    pub singular: bool,
}

pub(crate) fn build_fiber_report(
    fam: &Family,
    engine: &ProfileEngine,
    c: &Rational,
) -> Result<FiberReport, AnalysisError> {
    let mut gamma = Vec::with_capacity(engine.contexts.len());
    for ctx in &engine.contexts {
        gamma.push(ctx.gamma_at(c)?);
    }
    let mu = milnor_total(fam, c)?;
    let n = fam.n();
    debug_assert_eq!(gamma.len(), n);
    let top = gamma[n - 1];
    if (mu as i64) > (top as i64) {
        return Err(AnalysisError::NegativeTopCellCount {
            c: c.to_string(),
            gamma: top,
            mu,
        });
    }
    let mut cells: Vec<u64> = gamma[..n - 1].to_vec();
    cells.push(top - mu);
    let chi = euler_characteristic(n, mu, &gamma);
    let alt: i64 = cells
        .iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum();
    if alt != chi {
        return Err(AnalysisError::Internal(format!(
            "cell model disagrees with the Euler formula at {c}: {alt} vs {chi}"
        )));
    }
    Ok(FiberReport { c: c.clone(), mu, gamma, chi, cells, singular: mu > 0 })
}

/// Conclusions implied by a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImpliedTag {
    /// Equisingular at infinity implies smooth triviality near infinity.
    CInfinityTrivialAtInfinity,
    /// For a family without singular fibers near c, triviality is global.
    CInfinityTrivial,
    /// For plane curves with constant fiber degree, constancy of the top
    /// value is equivalent to topological triviality at infinity.
    TopologicalTrivialityAtInfinityIff,
}

impl ImpliedTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ImpliedTag::CInfinityTrivialAtInfinity => "c-infinity-trivial-at-infinity",
            ImpliedTag::CInfinityTrivial => "c-infinity-trivial",
            ImpliedTag::TopologicalTrivialityAtInfinityIff => {
                "topological-triviality-at-infinity-iff"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub c: Rational,
    pub t_equisingular_at_infinity: bool,
    /// lambda[i] is the level-i defect at c, ascending.
    pub lambda: Vec<i64>,
    pub implied: Vec<ImpliedTag>,
}

pub fn verdict(
    fam: &Family,
    profile: &GammaProfile,
    hypothesis: &HypothesisReport,
    c: &Rational,
) -> Verdict {
    let lambda = profile.lambda_at(c);
    let equisingular = lambda.iter().all(|&d| d == 0);
    let mut implied = Vec::new();
    if equisingular {
        implied.push(ImpliedTag::CInfinityTrivialAtInfinity);
        if !hypothesis.singular_values.contains(c) {
            implied.push(ImpliedTag::CInfinityTrivial);
        }
    }
    if fam.n() == 2 && profile.degree_constant() {
        implied.push(ImpliedTag::TopologicalTrivialityAtInfinityIff);
    }
    Verdict {
        c: c.clone(),
        t_equisingular_at_infinity: equisingular,
        lambda,
        implied,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{FamilyMode, FamilySpec};
    use crate::poly::rat;

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
    fn milnor_examples() {
        let node = fam(FamilyMode::Fiber, "x^2 + y^2", &["x", "y"]);
        assert_eq!(milnor_total(&node, &rat(0)).unwrap(), 1);
        assert_eq!(milnor_total(&node, &rat(1)).unwrap(), 0);
        let cusp = fam(FamilyMode::Fiber, "x^3 + y^2", &["x", "y"]);
        assert_eq!(milnor_total(&cusp, &rat(0)).unwrap(), 2);
        let smooth = fam(FamilyMode::Fiber, "x + x^2*y", &["x", "y"]);
        assert_eq!(milnor_total(&smooth, &rat(0)).unwrap(), 0);
    }

    #[test]
    fn non_isolated_singularities_error() {
        let f = fam(FamilyMode::General, "x^2*y - t", &["x", "y"]);
        match milnor_total(&f, &rat(0)) {
            Err(AnalysisError::NonIsolatedSingularities { dimension: 1 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn euler_formulas() {
        // n = 2 plane curves: chi = mu + gamma0 - gamma1
        assert_eq!(euler_characteristic(2, 0, &[3, 3]), 0);
        assert_eq!(euler_characteristic(2, 0, &[3, 2]), 1);
        assert_eq!(euler_characteristic(2, 1, &[2, 2]), 1);
        assert_eq!(euler_characteristic(2, 2, &[3, 4]), 1);
        // jump: chi(X_u) - chi(X_c)
        assert_eq!(euler_jump(2, 0, &[0, 1]), -1);
        assert_eq!(euler_jump(2, 1, &[0, 0]), -1);
        assert_eq!(euler_jump(2, 2, &[0, 0]), -2);
    }
}
