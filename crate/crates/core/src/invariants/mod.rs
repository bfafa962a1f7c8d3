//! The geometric invariants: polar ideals, generic polar intersection
//! multiplicities and their special values, defects at infinity, Milnor
//! numbers, Euler characteristics, cell models and equisingularity verdicts.

mod family;
mod fiber;
mod hypothesis;
mod polar;
mod profile;

pub use family::{apply_generic_coordinates, slice, AffineForm, Family, GenericChoice};
pub use fiber::{
    euler_characteristic, euler_jump, milnor_total, verdict, FiberReport, ImpliedTag, Verdict,
};
pub use hypothesis::{verify_hypothesis, HypothesisReport, SingularValues};
pub use polar::{
    atypical_candidates_top, check_polar_genericity, gamma_at_algebraic, gamma_top, polar_ideal,
};
pub use profile::{gamma_star, gamma_star_profile, AtypicalEntry, GammaProfile, LevelData};

pub(crate) use fiber::build_fiber_report;
pub(crate) use profile::{profile_engine, vanishes_at as profile_vanishes_at};

use crate::groebner::GroebnerError;
use crate::poly::PolyError;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("family parse error: {0}")]
    Parse(String),
    #[error("the family polynomial is constant in the space variables")]
    ConstantInSpace,
    #[error("a family needs exactly one parameter variable, listed last")]
    ParameterCount,
    #[error("the family polynomial is not squarefree; fibers are generically non-reduced")]
    NonSquarefreeFamily,
    #[error("bounded-singularity hypothesis fails: {0}")]
    HypothesisFailed(String),
    #[error("generic choices exhausted after {0} attempts")]
    RetriesExhausted(u32),
    #[error("fiber has non-isolated singularities (Jacobian dimension {dimension})")]
    NonIsolatedSingularities { dimension: i64 },
    #[error("negative top cell count at c = {c}: gamma {gamma} < mu {mu}")]
    NegativeTopCellCount { c: String, gamma: u64, mu: u64 },
    #[error("parameter image of the polar curve at infinity is positive-dimensional")]
    PositiveDimensionalImage,
    #[error("generic choice rejected: {0}")]
    Genericity(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl AnalysisError {
    /// Failures that a fresh generic choice may cure.
    pub fn is_genericity_failure(&self) -> bool {
        matches!(
            self,
            AnalysisError::Groebner(GroebnerError::NotZeroDimensional { .. })
                | AnalysisError::Genericity(_)
        )
    }
}
