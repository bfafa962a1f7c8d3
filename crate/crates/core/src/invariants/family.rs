//! Families of affine hypersurfaces and the seeded generic choices
//! (coordinate changes and slicing hyperplanes) the invariants depend on.

use super::AnalysisError;
use crate::linalg::QMatrix;
use crate::parse::FamilySpec;
use crate::poly::{rat, Polynomial, Rational, VarSet};
use rand::Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

/// One-parameter polynomial family F(parameter, x) of affine hypersurfaces
/// X_c = { x | F(c, x) = 0 }.
#[derive(Debug, Clone)]
pub struct Family {
    f: Polynomial,
    n: usize,
    degree: u32,
    constant_in_parameter: bool,
}

impl Family {
    pub fn new(f: Polynomial) -> Result<Self, AnalysisError> {
        let vars = f.varset();
        let pidx = vars.parameter_index().ok_or(AnalysisError::ParameterCount)?;
        if vars
            .space_indices()
            .iter()
            .any(|&i| i > pidx)
        {
            // canonical layout is [space..., parameter]
            return Err(AnalysisError::ParameterCount);
        }
        let n = vars.space_indices().len();
        if n == 0 {
            return Err(AnalysisError::ConstantInSpace);
        }
        let degree = match f.space_degree() {
            None | Some(0) => return Err(AnalysisError::ConstantInSpace),
            Some(d) => d,
        };
        let constant_in_parameter = !f.involves(pidx);
        Ok(Family { f, n, degree, constant_in_parameter })
    }

    pub fn from_spec(spec: &FamilySpec) -> Result<Self, AnalysisError> {
        let f = spec.parse().map_err(|e| AnalysisError::Parse(e.to_string()))?;
        Self::new(f)
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn varset(&self) -> &Arc<VarSet> {
        self.f.varset()
    }

    /// Number of space variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total degree in the space variables.
    pub fn space_degree(&self) -> u32 {
        self.degree
    }

    pub fn parameter_index(&self) -> usize {
        self.varset().parameter_index().expect("validated")
    }

    pub fn is_constant_in_parameter(&self) -> bool {
        self.constant_in_parameter
    }

    /// The fiber polynomial F_c over the space-only variable set.
    pub fn fiber(&self, c: &Rational) -> Polynomial {
        let pidx = self.parameter_index();
        let mut asg = BTreeMap::new();
        asg.insert(pidx, Polynomial::constant(self.varset(), c.clone()));
        self.f
            .substitute_linear(&asg)
            .expect("constant substitution cannot fail")
    }

    /// Space partial derivatives of F, in variable order.
    pub fn space_partials(&self) -> Vec<Polynomial> {
        self.varset()
            .space_indices()
            .into_iter()
            .map(|i| self.f.partial_derivative(i))
            .collect()
    }
}

/// An affine form a_1 x_1 + ... + a_k x_k + b used as a slicing hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineForm {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl AffineForm {
    /// Materialize over a variable set whose first `coeffs.len()` variables
    /// receive the coefficients.
    pub fn to_polynomial(&self, vars: &Arc<VarSet>) -> Polynomial {
        let mut p = Polynomial::constant(vars, self.constant.clone());
        for (j, a) in self.coeffs.iter().enumerate() {
            let x = Polynomial::variable(vars, j).scale(a);
            p = p.try_add(&x).expect("same varset");
        }
        p
    }

    pub fn render(&self, vars: &Arc<VarSet>) -> String {
        self.to_polynomial(vars).to_string()
    }
}

/// The recorded generic data of one analysis run: an invertible change of
/// space coordinates whose first new coordinate is the generic linear form,
/// and one slicing hyperplane per level.
#[derive(Debug, Clone)]
pub struct GenericChoice {
    pub seed: u64,
    pub attempt: u32,
    pub matrix: Vec<Vec<Rational>>,
    pub hyperplanes: Vec<AffineForm>,
}

const ENTRY_POOL: [i64; 10] = [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5];

fn draw_entry(rng: &mut impl Rng) -> Rational {
    rat(ENTRY_POOL[rng.gen_range(0..ENTRY_POOL.len())])
}

fn invertible(matrix: &[Vec<Rational>]) -> bool {
    let n = matrix.len();
    let q = QMatrix::from_rows(matrix.to_vec());
    q.rank() == n
}

impl GenericChoice {
    /// Draw a fresh choice for a family with `n` space variables from the
    /// running stream of a seeded generator.
    pub fn draw(rng: &mut impl Rng, seed: u64, attempt: u32, n: usize) -> Self {
        let matrix = loop {
            let m: Vec<Vec<Rational>> =
                (0..n).map(|_| (0..n).map(|_| draw_entry(rng)).collect()).collect();
            if invertible(&m) {
                break m;
            }
        };
        // slicing stops at two space variables; the fiber degree needs no slice
        let hyperplanes = (3..=n)
            .rev()
            .map(|k| AffineForm {
                coeffs: (0..k - 1).map(|_| draw_entry(rng)).collect(),
                constant: draw_entry(rng),
            })
            .collect();
        GenericChoice { seed, attempt, matrix, hyperplanes }
    }
}

/// Compose the family with the linear change of space coordinates: old
/// variable i becomes the form sum_j M[i][j] * x_j in the new coordinates.
/// The first new coordinate plays the generic linear form.
pub fn apply_generic_coordinates(
    fam: &Family,
    matrix: &[Vec<Rational>],
) -> Result<Family, AnalysisError> {
    let vars = fam.varset();
    let space = vars.space_indices();
    assert_eq!(matrix.len(), space.len(), "matrix size matches space dimension");
    let mut asg = BTreeMap::new();
    for (row, &i) in matrix.iter().zip(&space) {
        let mut rhs = Polynomial::zero(vars);
        for (a, &j) in row.iter().zip(&space) {
            rhs = rhs
                .try_add(&Polynomial::variable(vars, j).scale(a))
                .expect("same varset");
        }
        asg.insert(i, rhs);
    }
    // a linear change keeps every variable in play, so the varset persists
    let g = fam.f.compose_linear(&asg).map_err(AnalysisError::Poly)?;
    debug_assert_eq!(g.space_degree(), Some(fam.degree));
    Family::new(g)
}

/// Intersect with the generic affine hyperplane substituting the last space
/// coordinate, producing a family with one space variable fewer.
pub fn slice(fam: &Family, plane: &AffineForm) -> Result<Family, AnalysisError> {
    assert!(fam.n >= 2, "slicing needs at least two space variables");
    let vars = fam.varset();
    let space = vars.space_indices();
    let last = *space.last().expect("nonempty");
    assert_eq!(plane.coeffs.len(), space.len() - 1);
    let mut rhs = Polynomial::constant(vars, plane.constant.clone());
    for (a, &j) in plane.coeffs.iter().zip(&space) {
        rhs = rhs
            .try_add(&Polynomial::variable(vars, j).scale(a))
            .expect("same varset");
    }
    let mut asg = BTreeMap::new();
    asg.insert(last, rhs);
    let g = fam.f.substitute_linear(&asg).map_err(AnalysisError::Poly)?;
    Family::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::FamilyMode;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

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
    fn family_basics() {
        let f = fam(FamilyMode::Fiber, "x + x^2*y", &["x", "y"]);
        assert_eq!(f.n(), 2);
        assert_eq!(f.space_degree(), 3);
        assert!(!f.is_constant_in_parameter());
        let fiber = f.fiber(&rat(0));
        assert_eq!(fiber.to_string(), "x^2*y + x");
        assert_eq!(fiber.varset().len(), 2);
    }

    #[test]
    fn identity_change_keeps_family() {
        let f = fam(FamilyMode::Fiber, "x + x^2*y", &["x", "y"]);
        let id = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let g = apply_generic_coordinates(&f, &id).unwrap();
        assert_eq!(g.polynomial(), f.polynomial());
    }

    #[test]
    fn shear_change() {
        // x -> x, y -> x + y
        let f = fam(FamilyMode::Fiber, "x + x^2*y", &["x", "y"]);
        let m = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)]];
        let g = apply_generic_coordinates(&f, &m).unwrap();
        let vars = f.varset();
        let expect = crate::parse::parse_polynomial("x + x^2*(x + y) - t", vars).unwrap();
        assert_eq!(g.polynomial(), &expect);
        assert_eq!(g.space_degree(), f.space_degree());
    }

    #[test]
    fn slicing_drops_one_variable() {
        let f = fam(FamilyMode::Fiber, "x + x^2*y*z", &["x", "y", "z"]);
        let plane = AffineForm {
            coeffs: vec![rat(2), rat(-1)],
            constant: rat(3),
        };
        let g = slice(&f, &plane).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.space_degree(), 4);
        // linear family stays linear
        let lin = fam(FamilyMode::General, "x1 - t", &["x1", "x2"]);
        let plane = AffineForm { coeffs: vec![rat(1)], constant: rat(1) };
        let l = slice(&lin, &plane).unwrap();
        assert_eq!(l.space_degree(), 1);
    }

    #[test]
    fn draw_is_deterministic_and_invertible() {
        let mut rng1 = ChaCha8Rng::seed_from_u64(7);
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        let a = GenericChoice::draw(&mut rng1, 7, 0, 3);
        let b = GenericChoice::draw(&mut rng2, 7, 0, 3);
        assert_eq!(a.matrix, b.matrix);
        assert_eq!(a.hyperplanes, b.hyperplanes);
        assert!(invertible(&a.matrix));
        assert_eq!(a.hyperplanes.len(), 1);
        assert_eq!(a.hyperplanes[0].coeffs.len(), 2);
        let mut rng3 = ChaCha8Rng::seed_from_u64(7);
        let c4 = GenericChoice::draw(&mut rng3, 7, 0, 4);
        assert_eq!(c4.hyperplanes.len(), 2);
        assert_eq!(c4.hyperplanes[0].coeffs.len(), 3);
        assert_eq!(c4.hyperplanes[1].coeffs.len(), 2);
    }
}
