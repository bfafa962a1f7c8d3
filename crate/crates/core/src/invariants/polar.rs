//! The polar curve of (generic linear form, parameter) on the family
//! hypersurface, its intersection numbers with fibers, and the parameter
//! values over which intersection points escape to infinity.

use super::{AnalysisError, Family};
use crate::groebner::{parameter_shift, Ideal, MonomialOrder};
use crate::poly::{Polynomial, Rational, VarSet};
use crate::univar::{factor_sort_key, factor_squarefree_rational};
use std::sync::Arc;

/// Weight vector selecting the space grading: 1 on space variables, 0 on the
/// parameter and auxiliaries. Groebner bases under this order are
/// degree-compatible for homogenization by space degree.
pub(crate) fn space_graded_order(vars: &Arc<VarSet>) -> MonomialOrder {
    let space = vars.space_indices();
    MonomialOrder::WeightedGrevlex(
        (0..vars.len()).map(|i| u64::from(space.contains(&i))).collect(),
    )
}

/// Terms of maximal space degree: the image of a polynomial after
/// homogenizing by x0 and setting x0 = 0.
fn top_space_form(p: &Polynomial) -> Polynomial {
    let space = p.varset().space_indices();
    let d = p.space_degree().expect("nonzero");
    Polynomial::from_terms(
        p.varset(),
        p.terms()
            .filter(|(m, _)| m.degree_over(&space) == d)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// The polar ideal of the pair (first coordinate, parameter) on the family
/// hypersurface, in coordinates that are already generic:
/// (F, dF/dx_2, ..., dF/dx_n) saturated by dF/dx_1. The saturation removes
/// the components where the parameter itself is singular.
pub fn polar_ideal(fam: &Family) -> Result<Ideal, AnalysisError> {
    let partials = fam.space_partials();
    let l_partial = partials[0].clone();
    if l_partial.is_zero() {
        return Err(AnalysisError::Genericity(
            "family does not involve the generic linear form".into(),
        ));
    }
    let mut gens = vec![fam.polynomial().clone()];
    gens.extend(partials.into_iter().skip(1));
    let pre = Ideal::new(gens, MonomialOrder::Grevlex)?;
    Ok(pre.saturate(&l_partial))
}

/// Genericity proxy at a parameter value: the polar locus is a curve or
/// empty, and its intersection with the fiber is finite.
pub fn check_polar_genericity(
    fam: &Family,
    polar: &Ideal,
    c: &Rational,
) -> Result<(), AnalysisError> {
    let dim = polar.krull_dimension();
    if dim != -1 && dim != 1 {
        return Err(AnalysisError::Genericity(format!(
            "polar locus has dimension {dim}, expected a curve or empty"
        )));
    }
    let fiber = polar.with_extra(&[parameter_shift(fam.varset(), c)])?;
    if !fiber.is_zero_dimensional() {
        return Err(AnalysisError::Genericity(format!(
            "polar locus meets the fiber at {c} in positive dimension"
        )));
    }
    Ok(())
}

/// Intersection multiplicity of the polar curve with the fiber over c:
/// the vector-space dimension of the quotient by polar + (parameter - c).
pub fn gamma_top(fam: &Family, polar: &Ideal, c: &Rational) -> Result<u64, AnalysisError> {
    let fiber = polar.with_extra(&[parameter_shift(fam.varset(), c)])?;
    Ok(fiber.quotient_dimension()? as u64)
}

/// Summed intersection multiplicity over all roots of an irreducible
/// parameter polynomial, and the per-root value.
pub fn gamma_at_algebraic(
    fam: &Family,
    polar: &Ideal,
    min_poly: &Polynomial,
) -> Result<(u64, u64), AnalysisError> {
    let vars = fam.varset();
    let pidx = fam.parameter_index();
    let p = min_poly.embed(vars, &[pidx]);
    let fiber = polar.with_extra(&[p])?;
    let sum = fiber.quotient_dimension()? as u64;
    let deg = u64::from(min_poly.total_degree().unwrap_or(0));
    if deg == 0 {
        return Err(AnalysisError::Internal("constant minimal polynomial".into()));
    }
    if sum % deg != 0 {
        return Err(AnalysisError::Genericity(format!(
            "intersection count {sum} not divisible by the factor degree {deg}"
        )));
    }
    Ok((sum, sum / deg))
}

/// Image in the parameter line of the intersection of a variety's projective
/// closure (in the space directions) with the hyperplane at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum InfinityImage {
    Empty,
    /// Irreducible parameter polynomials cutting out the image.
    Finite(Vec<Polynomial>),
    PositiveDimensional,
}

/// Compute the parameter image of V(I) at infinity: take a space-degree-
/// compatible basis, keep each element's top space form (its homogenization
/// with x0 = 0), read the result in every affine chart x_i = 1 of the
/// hyperplane at infinity and eliminate everything but the parameter.
pub(crate) fn infinity_parameter_image(ideal: &Ideal) -> Result<InfinityImage, AnalysisError> {
    if ideal.is_unit() {
        return Ok(InfinityImage::Empty);
    }
    let vars = ideal.varset();
    let space = vars.space_indices();
    let pidx = vars.parameter_index().expect("family ring");
    let graded = ideal.with_order(space_graded_order(vars));
    let tops: Vec<Polynomial> = graded.groebner_basis().iter().map(top_space_form).collect();
    let tau_vars = tau_varset(vars, pidx);
    let mut factors: Vec<Polynomial> = Vec::new();
    for &chart in &space {
        // x_chart = 1 on the divisor at infinity
        let mut asg = std::collections::BTreeMap::new();
        asg.insert(chart, Polynomial::one(vars));
        let gens: Vec<Polynomial> = tops
            .iter()
            .map(|g| g.substitute_linear(&asg))
            .collect::<Result<_, _>>()?;
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Ok(InfinityImage::PositiveDimensional);
        }
        let chart_vars = gens[0].varset().clone();
        let chart_ideal = Ideal::with_vars(&chart_vars, gens, MonomialOrder::Grevlex)?;
        if chart_ideal.is_unit() {
            continue;
        }
        let drop: Vec<usize> = (0..chart_vars.len())
            .filter(|&i| chart_vars.role(i) != crate::poly::VarRole::Parameter)
            .collect();
        let image = chart_ideal.eliminate(&drop);
        if image.is_zero_ideal() {
            return Ok(InfinityImage::PositiveDimensional);
        }
        if image.is_unit() {
            continue;
        }
        let gen = image
            .univariate_generator()
            .expect("nonzero ideal in one variable");
        let gen = gen.embed(&tau_vars, &[0]);
        factors.extend(factor_squarefree_rational(&gen));
    }
    if factors.is_empty() {
        return Ok(InfinityImage::Empty);
    }
    factors.sort_by(factor_sort_key);
    factors.dedup();
    Ok(InfinityImage::Finite(factors))
}

/// Parameter values over which the closure of the polar curve meets the
/// divisor at infinity, as irreducible factors; empty when the curve stays
/// affine over every finite parameter value.
pub fn atypical_candidates_top(
    fam: &Family,
    polar: &Ideal,
) -> Result<Vec<Polynomial>, AnalysisError> {
    debug_assert_eq!(**polar.varset(), **fam.varset());
    match infinity_parameter_image(polar)? {
        InfinityImage::Empty => Ok(Vec::new()),
        InfinityImage::Finite(factors) => Ok(factors),
        InfinityImage::PositiveDimensional => Err(AnalysisError::PositiveDimensionalImage),
    }
}

/// The one-variable ring holding reported parameter polynomials.
pub(crate) fn tau_varset(vars: &Arc<VarSet>, pidx: usize) -> Arc<VarSet> {
    VarSet::new(vec![(vars.name(pidx).to_string(), crate::poly::VarRole::Parameter)])
        .expect("single name")
}
