//! Sparse multivariate polynomials over Q.
//!
//! Coefficients are arbitrary-precision rationals; terms are kept in a
//! `BTreeMap` keyed by grevlex order, so every polynomial has one canonical
//! form. Variables live in a shared [`VarSet`] that tags each name with a
//! role (space, parameter, auxiliary); degree bookkeeping that only counts
//! space variables is what the rest of the crate builds on.

mod gcd;

pub use gcd::{divides_squared, exact_div, gcd, is_squarefree, squarefree_part};

use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exact rational scalar used everywhere in this crate.
pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

pub fn rat<T: Into<Integer>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_frac<T: Into<Integer>>(n: T, d: T) -> Rational {
    Rational::new(n.into(), d.into())
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials belong to different variable sets")]
    VarSetMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("assigned variable `{0}` appears in the substitution for another variable")]
    CyclicAssignment(String),
    #[error("substitution for `{0}` is not an affine form")]
    NotAffine(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("expected exactly one parameter variable")]
    ParameterCount,
}

/// Role a variable plays inside a family computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarRole {
    Space,
    Parameter,
    Auxiliary,
}

/// Ordered set of named variables with roles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
    roles: Vec<VarRole>,
}

impl VarSet {
    pub fn new<S: Into<String>>(vars: Vec<(S, VarRole)>) -> Result<Arc<Self>, PolyError> {
        let mut names = Vec::with_capacity(vars.len());
        let mut roles = Vec::with_capacity(vars.len());
        for (name, role) in vars {
            let name = name.into();
            if names.contains(&name) {
                return Err(PolyError::DuplicateVariable(name));
            }
            names.push(name);
            roles.push(role);
        }
        Ok(Arc::new(VarSet { names, roles }))
    }

    /// Space variables in order, then the single parameter.
    pub fn family(space: &[&str], parameter: &str) -> Result<Arc<Self>, PolyError> {
        let mut vars: Vec<(String, VarRole)> = space
            .iter()
            .map(|s| (s.to_string(), VarRole::Space))
            .collect();
        vars.push((parameter.to_string(), VarRole::Parameter));
        Self::new(vars)
    }

    /// All-space variable set (no parameter), used for per-fiber ideals.
    pub fn space_only(space: &[&str]) -> Result<Arc<Self>, PolyError> {
        Self::new(space.iter().map(|s| (s.to_string(), VarRole::Space)).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn role(&self, i: usize) -> VarRole {
        self.roles[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn space_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.roles[i] == VarRole::Space).collect()
    }

    pub fn parameter_index(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.roles[i] == VarRole::Parameter)
    }

    /// New set with one auxiliary variable appended.
    pub fn with_auxiliary(&self, name: &str) -> Result<Arc<Self>, PolyError> {
        if self.names.iter().any(|n| n == name) {
            return Err(PolyError::DuplicateVariable(name.to_string()));
        }
        let mut names = self.names.clone();
        let mut roles = self.roles.clone();
        names.push(name.to_string());
        roles.push(VarRole::Auxiliary);
        Ok(Arc::new(VarSet { names, roles }))
    }

    /// Fresh auxiliary name not colliding with existing ones.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        let mut k = 1usize;
        loop {
            let cand = format!("{stem}_{k}");
            if self.index_of(&cand).is_none() {
                return cand;
            }
            k += 1;
        }
    }

    /// Projection keeping only the listed indices, in their current order.
    pub fn keep(&self, keep: &[usize]) -> Arc<Self> {
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let roles = keep.iter().map(|&i| self.roles[i]).collect();
        Arc::new(VarSet { names, roles })
    }
}

/// Exponent vector; one entry per variable of the owning `VarSet`.
///
/// `Ord` is graded reverse-lexicographic on the variable order, which fixes
/// the canonical storage order of polynomial terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial { exps: vec![0; len] }
    }

    pub fn var(len: usize, i: usize) -> Self {
        let mut exps = vec![0; len];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Sum of exponents over the given variable indices.
    pub fn degree_over(&self, idxs: &[usize]) -> u32 {
        idxs.iter().map(|&i| self.exps[i]).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.len(), other.len());
        let mut exps = Vec::with_capacity(self.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Pure power of a single variable, if so: (index, exponent).
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    fn grevlex(&self, other: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        debug_assert_eq!(self.len(), other.len());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                // smaller exponent in the last differing slot wins
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.grevlex(other)
    }
}

/// Sparse exact polynomial: nonzero rational coefficients keyed by monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn variable(vars: &Arc<VarSet>, i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), i), Rational::one());
        p
    }

    pub fn from_terms(
        vars: &Arc<VarSet>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn varset(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.len(), self.vars.len());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Polynomial) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VarSetMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Multiply by a single term c*m.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Self::one(&self.vars);
        for _ in 0..e {
            out = out.try_mul(self).expect("same varset");
        }
        out
    }

    /// Formal partial derivative with respect to variable index `i`.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::from_exps(exps), c * rat(e as i64));
        }
        out
    }

    pub fn partial_derivative_named(&self, name: &str) -> Result<Polynomial, PolyError> {
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.partial_derivative(i))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(i)).max()
    }

    /// Total degree in space variables only; `None` for the zero polynomial.
    pub fn space_degree(&self) -> Option<u32> {
        let space = self.vars.space_indices();
        self.terms.keys().map(|m| m.degree_over(&space)).max()
    }

    /// True iff the variable occurs with positive exponent somewhere.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    /// Indices of all variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.involves(i)).collect()
    }

    /// Leading term under the canonical grevlex storage order.
    pub fn leading_grevlex(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Simultaneous substitution of affine forms for variables, keeping the
    /// full variable set: every occurrence of an assigned variable in `self`
    /// is replaced in one pass. This is composition with an affine map.
    pub fn compose_linear(
        &self,
        assignments: &BTreeMap<usize, Polynomial>,
    ) -> Result<Polynomial, PolyError> {
        for (&i, rhs) in assignments {
            self.check_same_vars(rhs)?;
            if rhs.total_degree().unwrap_or(0) > 1 {
                return Err(PolyError::NotAffine(self.vars.name(i).to_string()));
            }
        }
        let mut full = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&self.vars, c.clone());
            for i in 0..self.vars.len() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                let factor = match assignments.get(&i) {
                    Some(rhs) => rhs.pow(e),
                    None => {
                        let mut exps = vec![0; self.vars.len()];
                        exps[i] = e;
                        Polynomial::from_terms(
                            &self.vars,
                            [(Monomial::from_exps(exps), Rational::one())],
                        )
                    }
                };
                term = term.try_mul(&factor)?;
            }
            full = full.try_add(&term)?;
        }
        Ok(full)
    }

    /// Substitution of affine forms for variables, projecting out the ones
    /// that get eliminated.
    ///
    /// Keys are variable indices; values are affine polynomials over the same
    /// variable set. An assigned variable may appear in its own replacement
    /// (translations like x -> x+1 keep x alive); a variable whose
    /// replacement does not mention itself is eliminated and must not appear
    /// in any other replacement.
    pub fn substitute_linear(
        &self,
        assignments: &BTreeMap<usize, Polynomial>,
    ) -> Result<Polynomial, PolyError> {
        let eliminated: Vec<usize> = assignments
            .iter()
            .filter(|(&i, rhs)| !rhs.involves(i))
            .map(|(&i, _)| i)
            .collect();
        for &i in &eliminated {
            for (&j, other) in assignments {
                if j != i && other.involves(i) {
                    return Err(PolyError::CyclicAssignment(self.vars.name(i).to_string()));
                }
            }
        }
        let full = self.compose_linear(assignments)?;
        if eliminated.is_empty() {
            return Ok(full);
        }
        let keep: Vec<usize> =
            (0..self.vars.len()).filter(|i| !eliminated.contains(i)).collect();
        Ok(full.project(&keep))
    }

    /// Restrict to a sub-varset; panics if a dropped variable still occurs.
    pub fn project(&self, keep: &[usize]) -> Polynomial {
        let new_vars = self.vars.keep(keep);
        let mut out = Polynomial::zero(&new_vars);
        for (m, c) in &self.terms {
            for (i, e) in m.exps().iter().enumerate() {
                if *e > 0 && !keep.contains(&i) {
                    panic!("projection drops an occurring variable");
                }
            }
            let exps = keep.iter().map(|&i| m.exp(i)).collect();
            out.add_term(Monomial::from_exps(exps), c.clone());
        }
        out
    }

    /// Re-express over a superset varset, mapping old index i to `map[i]`.
    pub fn embed(&self, new_vars: &Arc<VarSet>, map: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(new_vars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_vars.len()];
            for (i, e) in m.exps().iter().enumerate() {
                exps[map[i]] = *e;
            }
            out.add_term(Monomial::from_exps(exps), c.clone());
        }
        out
    }

    pub fn evaluate(&self, point: &BTreeMap<usize, Rational>) -> Result<Rational, PolyError> {
        for i in 0..self.vars.len() {
            if self.involves(i) && !point.contains_key(&i) {
                return Err(PolyError::MissingAssignment(self.vars.name(i).to_string()));
            }
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, e) in m.exps().iter().enumerate() {
                for _ in 0..*e {
                    v *= &point[&i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Homogenize with respect to the space variables by a fresh auxiliary
    /// variable; parameter and auxiliary variables carry weight zero.
    pub fn homogenize_space(&self, x0: &str) -> Result<Polynomial, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let d = self.space_degree().expect("nonzero");
        let new_vars = self.vars.with_auxiliary(x0)?;
        let space = self.vars.space_indices();
        let mut out = Polynomial::zero(&new_vars);
        for (m, c) in &self.terms {
            let mut exps = m.exps().to_vec();
            exps.push(d - m.degree_over(&space));
            out.add_term(Monomial::from_exps(exps), c.clone());
        }
        Ok(out)
    }

    /// Substitute 1 for the variable at `i` and project it out.
    pub fn dehomogenize(&self, i: usize) -> Polynomial {
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&j| j != i).collect();
        let new_vars = self.vars.keep(&keep);
        let mut out = Polynomial::zero(&new_vars);
        for (m, c) in &self.terms {
            let exps = keep.iter().map(|&j| m.exp(j)).collect();
            out.add_term(Monomial::from_exps(exps), c.clone());
        }
        out
    }

    /// The rational c with p = c * primitive(p): gcd of numerators over lcm
    /// of denominators, with the sign of the grevlex-leading coefficient.
    pub fn content(&self) -> Rational {
        use num_integer::Integer as _;
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num = Integer::zero();
        let mut den = Integer::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut content = Rational::new(num, den);
        if self.leading_grevlex().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        content
    }

    /// Integer-primitive normalization: coprime integer coefficients,
    /// positive grevlex-leading coefficient. Zero stays zero.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Monic under grevlex (unit leading coefficient).
    pub fn monic_grevlex(&self) -> Polynomial {
        match self.leading_grevlex() {
            None => self.clone(),
            Some((_, c)) => {
                let c = c.clone();
                self.scale(&c.recip())
            }
        }
    }

    /// Coefficients as polynomials in the remaining variables, indexed by the
    /// power of variable `v` (dense, length = deg_v + 1). Zero gives `[]`.
    pub fn coeffs_wrt(&self, v: usize) -> Vec<Polynomial> {
        let d = match self.degree_in(v) {
            None => return Vec::new(),
            Some(d) => d,
        };
        let mut out = vec![Polynomial::zero(&self.vars); d as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut exps = m.exps().to_vec();
            exps[v] = 0;
            out[e].add_term(Monomial::from_exps(exps), c.clone());
        }
        out
    }

    /// Rebuild from coefficients-by-power of variable `v`.
    pub fn from_coeffs_wrt(vars: &Arc<VarSet>, v: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero(vars);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                let mut exps = m.exps().to_vec();
                exps[v] += e as u32;
                out.add_term(Monomial::from_exps(exps), k.clone());
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                let mut sep = false;
                for (i, e) in m.exps().iter().enumerate() {
                    if *e == 0 {
                        continue;
                    }
                    if sep {
                        write!(f, "*")?;
                    }
                    sep = true;
                    write!(f, "{}", self.vars.name(i))?;
                    if *e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<VarSet> {
        VarSet::space_only(&["x", "y"]).unwrap()
    }

    fn xyt() -> Arc<VarSet> {
        VarSet::family(&["x", "y"], "t").unwrap()
    }

    fn p(vars: &Arc<VarSet>, s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, vars).unwrap()
    }

    #[test]
    fn grevlex_order() {
        // x > y, x^2*y > x*y^2, and degree dominates
        let x = Monomial::from_exps(vec![1, 0]);
        let y = Monomial::from_exps(vec![0, 1]);
        assert!(x > y);
        let x2y = Monomial::from_exps(vec![2, 1]);
        let xy2 = Monomial::from_exps(vec![1, 2]);
        assert!(x2y > xy2);
        assert!(xy2 > x);
    }

    #[test]
    fn ring_identities() {
        let v = xy();
        let a = p(&v, "(x+1)*(x-1)");
        assert_eq!(a, p(&v, "x^2 - 1"));
        let b = p(&v, "x").try_add(&p(&v, "-1*x")).unwrap();
        assert!(b.is_zero());
    }

    #[test]
    fn family_sum() {
        let v = xyt();
        let f = p(&v, "x + x^2*y").try_sub(&p(&v, "t")).unwrap();
        assert_eq!(f, p(&v, "x + x^2*y - t"));
    }

    #[test]
    fn derivative_examples() {
        let v = xy();
        let f = p(&v, "x + x^2*y");
        assert_eq!(f.partial_derivative_named("y").unwrap(), p(&v, "x^2"));
        assert_eq!(f.partial_derivative_named("x").unwrap(), p(&v, "1 + 2*x*y"));
        assert!(p(&v, "5").partial_derivative(0).is_zero());
        assert!(f.partial_derivative_named("q").is_err());
    }

    #[test]
    fn derivative_commutes() {
        let v = xy();
        let f = p(&v, "x^3*y^2 - 7*x*y + 1/3*y^4");
        assert_eq!(
            f.partial_derivative(0).partial_derivative(1),
            f.partial_derivative(1).partial_derivative(0)
        );
    }

    #[test]
    fn substitution_examples() {
        let v = xy();
        // y -> 2x+1 eliminates y
        let f = p(&v, "x + y");
        let mut asg = BTreeMap::new();
        asg.insert(1, p(&v, "2*x + 1"));
        let g = f.substitute_linear(&asg).unwrap();
        assert_eq!(g.varset().len(), 1);
        let vx = VarSet::space_only(&["x"]).unwrap();
        assert_eq!(g, p(&vx, "3*x + 1"));
        // x -> x+1 keeps x
        let f = p(&v, "x^2");
        let mut asg = BTreeMap::new();
        asg.insert(0, p(&v, "x + 1"));
        assert_eq!(f.substitute_linear(&asg).unwrap(), p(&v, "x^2 + 2*x + 1"));
    }

    #[test]
    fn substitution_slice() {
        let v = VarSet::space_only(&["x", "y", "z"]).unwrap();
        let f = p(&v, "x + x^2*y*z");
        let mut asg = BTreeMap::new();
        asg.insert(2, p(&v, "1"));
        let g = f.substitute_linear(&asg).unwrap();
        assert_eq!(g, p(&xy(), "x + x^2*y"));
    }

    #[test]
    fn substitution_cyclic() {
        let v = xy();
        let f = p(&v, "x + y");
        let mut asg = BTreeMap::new();
        asg.insert(0, p(&v, "y + 1"));
        asg.insert(1, p(&v, "2"));
        assert!(matches!(
            f.substitute_linear(&asg),
            Err(PolyError::CyclicAssignment(_))
        ));
    }

    #[test]
    fn evaluate_examples() {
        let v = xy();
        let f = p(&v, "x + x^2*y");
        let mut pt = BTreeMap::new();
        pt.insert(0, rat(1));
        pt.insert(1, rat(1));
        assert_eq!(f.evaluate(&pt).unwrap(), rat(2));
        pt.insert(0, rat(0));
        pt.insert(1, rat(5));
        assert_eq!(f.evaluate(&pt).unwrap(), rat(0));
        let vxt = VarSet::family(&["x"], "t").unwrap();
        let g = p(&vxt, "x^2 - t");
        let mut pt = BTreeMap::new();
        pt.insert(0, rat(2));
        pt.insert(1, rat(4));
        assert_eq!(g.evaluate(&pt).unwrap(), rat(0));
        let missing = f.evaluate(&BTreeMap::new());
        assert!(matches!(missing, Err(PolyError::MissingAssignment(_))));
    }

    #[test]
    fn evaluate_is_multiplicative() {
        let v = xy();
        let f = p(&v, "x^2 - 3*y + 1/2");
        let g = p(&v, "x*y + 4");
        let mut pt = BTreeMap::new();
        pt.insert(0, rat_frac(3, 2));
        pt.insert(1, rat(-2));
        let lhs = f.try_mul(&g).unwrap().evaluate(&pt).unwrap();
        let rhs = f.evaluate(&pt).unwrap() * g.evaluate(&pt).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogenize_examples() {
        let v = xyt();
        let f = p(&v, "x + x^2*y - t");
        let h = f.homogenize_space("x0").unwrap();
        let vh = h.varset().clone();
        assert_eq!(h, p(&vh, "x*x0^2 + x^2*y - t*x0^3"));
        // round trip
        let back = h.dehomogenize(vh.index_of("x0").unwrap());
        assert_eq!(back, f);

        let g = p(&v, "x^2 + y^2 - t");
        let hg = g.homogenize_space("x0").unwrap();
        let vg = hg.varset().clone();
        assert_eq!(hg, p(&vg, "x^2 + y^2 - t*x0^2"));

        let lin = p(&v, "x");
        let hl = lin.homogenize_space("x0").unwrap();
        assert_eq!(hl.to_string(), "x");
        assert!(p(&v, "0").homogenize_space("x0").is_err());
    }

    #[test]
    fn space_degree_examples() {
        let v = xyt();
        assert_eq!(p(&v, "x + x^2*y - t").space_degree(), Some(3));
        let v3 = VarSet::family(&["x", "y", "z"], "t").unwrap();
        assert_eq!(p(&v3, "x + x^2*y*z - t").space_degree(), Some(4));
        assert_eq!(p(&v, "7").space_degree(), Some(0));
        assert_eq!(p(&v, "0").space_degree(), None);
        // parameter does not count toward space degree
        assert_eq!(p(&v, "t^5 + x").space_degree(), Some(1));
    }

    #[test]
    fn primitive_normalization() {
        let v = xy();
        let f = p(&v, "2/3*x^2 - 4/9*y");
        let prim = f.primitive();
        assert_eq!(prim, p(&v, "3*x^2 - 2*y"));
        assert_eq!(f.scale(&f.content().recip()), prim);
        let g = p(&v, "-2*x - 4");
        assert_eq!(g.primitive(), p(&v, "x + 2"));
    }

    #[test]
    fn display_roundtrip() {
        let v = xyt();
        for s in [
            "x + x^2*y - t",
            "-x^2 + 1/2*x - 3/4",
            "x^2*y + x*y^2 - y - 1",
            "0",
            "7",
            "-t",
        ] {
            let f = p(&v, s);
            let printed = f.to_string();
            assert_eq!(crate::parse::parse_polynomial(&printed, &v).unwrap(), f);
        }
    }
}
