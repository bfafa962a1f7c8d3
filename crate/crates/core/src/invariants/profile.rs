//! The gamma profile: generic polar intersection multiplicities per slicing
//! level, the special parameter values where they drop, and the defects.
//!
//! Level i is computed on the family sliced down to i+1 space variables:
//! apply a seeded generic coordinate change, build the polar ideal, collect
//! the candidate parameter values from the curve's points at infinity, then
//! establish the generic value from two agreeing random samples and verify
//! every candidate exactly. The base level is the set-theoretic degree of
//! the (univariate) fiber. A whole profile is accepted only if an
//! independently resampled choice reproduces it; anything suspicious
//! triggers a bounded resample.

use super::polar::{
    atypical_candidates_top, check_polar_genericity, gamma_at_algebraic, gamma_top, polar_ideal,
    tau_varset,
};
use super::{apply_generic_coordinates, slice, AnalysisError, Family, GenericChoice};
use crate::groebner::{Ideal, MonomialOrder};
use crate::poly::{
    gcd, is_squarefree, rat, squarefree_part, Polynomial, Rational, VarSet,
};
use crate::univar::{factor_sort_key, factor_squarefree_rational, rational_root};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A candidate special value with its verified intersection data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtypicalEntry {
    /// Irreducible polynomial in the parameter, primitive with positive
    /// leading coefficient.
    pub min_poly: Polynomial,
    pub degree: u32,
    /// Sum of the level value over all roots of `min_poly`.
    pub value_sum: u64,
    /// Value at each individual root (roots are conjugate, so they agree).
    pub per_root: u64,
    /// Defect: generic value minus per-root value. Non-negative whenever the
    /// bounded-singularity hypothesis holds.
    pub defect: i64,
}

/// One level of the profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelData {
    pub level: usize,
    pub generic_value: u64,
    /// Verified values over the global candidate set.
    pub entries: Vec<AtypicalEntry>,
    /// This level's own candidate set (the parameter image of the polar
    /// curve's points at infinity; leading-coefficient and discriminant
    /// values at the base level).
    pub candidates: Vec<Polynomial>,
}

/// The full profile: levels ascending from 0 to n-1.
#[derive(Debug, Clone)]
pub struct GammaProfile {
    pub levels: Vec<LevelData>,
    pub choice: GenericChoice,
    /// Number of rejected generic choices before this one.
    pub retries_used: u32,
}

impl GammaProfile {
    pub fn n(&self) -> usize {
        self.levels.len()
    }

    /// Defect vector at a rational parameter value, ascending by level.
    pub fn lambda_at(&self, c: &Rational) -> Vec<i64> {
        self.levels
            .iter()
            .map(|lvl| {
                lvl.entries
                    .iter()
                    .find(|e| vanishes_at(&e.min_poly, c))
                    .map(|e| e.defect)
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Gamma vector at a rational value, ascending by level, read off the
    /// verified entries (generic value off the candidate set).
    pub fn gamma_at(&self, c: &Rational) -> Vec<u64> {
        self.levels
            .iter()
            .map(|lvl| {
                lvl.entries
                    .iter()
                    .find(|e| vanishes_at(&e.min_poly, c))
                    .map(|e| e.per_root)
                    .unwrap_or(lvl.generic_value)
            })
            .collect()
    }

    pub fn generic_gamma(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.generic_value).collect()
    }

    /// Entries with a nonzero defect, as (level, entry).
    pub fn jumps(&self) -> Vec<(usize, &AtypicalEntry)> {
        self.levels
            .iter()
            .flat_map(|lvl| {
                lvl.entries
                    .iter()
                    .filter(|e| e.defect != 0)
                    .map(move |e| (lvl.level, e))
            })
            .collect()
    }

    /// Rational special values among the verified jumps, sorted.
    pub fn rational_jump_values(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self
            .jumps()
            .into_iter()
            .filter_map(|(_, e)| rational_root(&e.min_poly))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn equisingular_at(&self, c: &Rational) -> bool {
        self.lambda_at(c).iter().all(|&d| d == 0)
    }

    /// True when the base-level value never jumps (constant fiber degree).
    pub fn degree_constant(&self) -> bool {
        self.levels
            .first()
            .map(|l| l.entries.iter().all(|e| e.defect == 0))
            .unwrap_or(true)
    }

    /// Semantic agreement with another run: same generic values and the same
    /// verified jumps. Candidate sets with zero defect may differ between
    /// generic choices.
    pub fn agrees_with(&self, other: &GammaProfile) -> bool {
        if self.n() != other.n() {
            return false;
        }
        for (a, b) in self.levels.iter().zip(&other.levels) {
            if a.generic_value != b.generic_value {
                return false;
            }
            let ja: Vec<(&Polynomial, u64)> = a
                .entries
                .iter()
                .filter(|e| e.defect != 0)
                .map(|e| (&e.min_poly, e.per_root))
                .collect();
            let jb: Vec<(&Polynomial, u64)> = b
                .entries
                .iter()
                .filter(|e| e.defect != 0)
                .map(|e| (&e.min_poly, e.per_root))
                .collect();
            if ja != jb {
                return false;
            }
        }
        true
    }
}

pub(crate) fn vanishes_at(min_poly: &Polynomial, c: &Rational) -> bool {
    let mut pt = BTreeMap::new();
    pt.insert(0usize, c.clone());
    min_poly.evaluate(&pt).map(|v| v.is_zero()).unwrap_or(false)
}

/// The per-level working state kept by the engine for fiber evaluations.
#[derive(Debug, Clone)]
pub(crate) struct LevelCtx {
    pub level: usize,
    pub family: Family,
    pub polar: Option<Ideal>,
    pub candidates: Vec<Polynomial>,
}

impl LevelCtx {
    pub(crate) fn gamma_at(&self, c: &Rational) -> Result<u64, AnalysisError> {
        match &self.polar {
            Some(polar) => gamma_top(&self.family, polar, c),
            None => base_gamma_at(&self.family, c),
        }
    }

    fn gamma_algebraic(&self, p: &Polynomial) -> Result<(u64, u64), AnalysisError> {
        match &self.polar {
            Some(polar) => gamma_at_algebraic(&self.family, polar, p),
            None => base_gamma_algebraic(&self.family, p),
        }
    }
}

/// Profile plus the level state needed for later fiber analyses.
#[derive(Debug, Clone)]
pub(crate) struct ProfileEngine {
    pub profile: GammaProfile,
    pub contexts: Vec<LevelCtx>,
}

/// Degenerate-input gates shared by all profile entry points.
pub(crate) fn degeneracy_gates(fam: &Family) -> Result<(), AnalysisError> {
    let f = fam.polynomial();
    // a parameter-only factor makes some fiber the whole space
    let space = fam.varset().space_indices();
    let mut content: Option<Polynomial> = None;
    for (_, coeff) in space_coefficients_with_keys(f, &space) {
        content = Some(match content {
            None => coeff,
            Some(acc) => gcd(&acc, &coeff),
        });
        if content.as_ref().map(|c| c.is_constant()).unwrap_or(false) {
            break;
        }
    }
    if let Some(c) = content {
        if !c.is_constant() {
            return Err(AnalysisError::HypothesisFailed(
                "a parameter-only factor divides the family polynomial".into(),
            ));
        }
    }
    if !is_squarefree(f) {
        return Err(AnalysisError::NonSquarefreeFamily);
    }
    Ok(())
}

/// Candidate special values of the fiber degree (base level), computed on
/// the original family. For one space variable the fiber can lose degree or
/// acquire multiple roots: roots of the leading coefficient and of the
/// eliminant of (F, dF/dx). In higher dimension a family with bounded
/// singularities always has reduced fibers, so only the common roots of the
/// top space-degree coefficients remain.
fn base_candidates(fam: &Family) -> Result<Vec<Polynomial>, AnalysisError> {
    let vars = fam.varset();
    let pidx = fam.parameter_index();
    let tau_vars = tau_varset(vars, pidx);
    let mut factors: Vec<Polynomial> = Vec::new();
    if fam.n() == 1 {
        let g = squarefree_part(fam.polynomial())?;
        let x = 0usize;
        let dx = g.degree_in(x).unwrap_or(0);
        if dx == 0 {
            return Err(AnalysisError::Genericity(
                "family is constant in its space variable".into(),
            ));
        }
        let lc = g.coeffs_wrt(x)[dx as usize].clone();
        if !lc.is_constant() {
            let lc_tau = lc.project(&[pidx]).embed(&tau_vars, &[0]);
            factors.extend(factor_squarefree_rational(&lc_tau));
        }
        let disc =
            Ideal::new(vec![g.clone(), g.partial_derivative(x)], MonomialOrder::Grevlex)?
                .eliminate(&[x]);
        if disc.is_zero_ideal() {
            return Err(AnalysisError::Internal(
                "squarefree fiber polynomial shares a component with its derivative".into(),
            ));
        }
        if !disc.is_unit() {
            let gen = disc
                .univariate_generator()
                .expect("nonzero univariate ideal")
                .embed(&tau_vars, &[0]);
            factors.extend(factor_squarefree_rational(&gen));
        }
    } else {
        let space = vars.space_indices();
        let f = fam.polynomial();
        let d = fam.space_degree();
        let mut top_content: Option<Polynomial> = None;
        for (m, c) in f.terms() {
            if m.degree_over(&space) != d {
                continue;
            }
            let mut exps = m.exps().to_vec();
            for &i in &space {
                exps[i] = 0;
            }
            let coeff = Polynomial::from_terms(
                vars,
                [(crate::poly::Monomial::from_exps(exps), c.clone())],
            );
            top_content = Some(match top_content {
                None => coeff,
                Some(acc) => {
                    let g = gcd(&acc, &coeff);
                    if g.is_constant() {
                        return Ok(Vec::new());
                    }
                    g
                }
            });
        }
        if let Some(g) = top_content {
            if !g.is_constant() {
                let g_tau = g.project(&[pidx]).embed(&tau_vars, &[0]);
                factors.extend(factor_squarefree_rational(&g_tau));
            }
        }
    }
    factors.sort_by(factor_sort_key);
    factors.dedup();
    Ok(factors)
}

/// Set-theoretic fiber degree at a rational value: space degree of the
/// squarefree part of the fiber polynomial of the original family.
fn base_gamma_at(fam: &Family, c: &Rational) -> Result<u64, AnalysisError> {
    let fiber = fam.fiber(c);
    if fiber.is_zero() {
        return Err(AnalysisError::Genericity(format!(
            "fiber at {c} is the whole space"
        )));
    }
    Ok(u64::from(squarefree_part(&fiber)?.space_degree().unwrap_or(0)))
}

/// Summed fiber degree over the roots of an irreducible parameter
/// polynomial. With one space variable this is the number of distinct points
/// of V(p, F), computed through the radical of the zero-dimensional ideal.
/// In higher dimension fibers over a family with bounded singularities are
/// reduced, so the per-root degree is the largest space degree whose
/// coefficient is not divisible by p.
fn base_gamma_algebraic(
    fam: &Family,
    min_poly: &Polynomial,
) -> Result<(u64, u64), AnalysisError> {
    let vars = fam.varset();
    let pidx = fam.parameter_index();
    let deg = u64::from(min_poly.total_degree().unwrap_or(0));
    if deg == 0 {
        return Err(AnalysisError::Internal("constant minimal polynomial".into()));
    }
    if fam.n() == 1 {
        let g = squarefree_part(fam.polynomial())?;
        let ideal = Ideal::with_vars(
            vars,
            vec![g, min_poly.embed(vars, &[pidx])],
            MonomialOrder::Grevlex,
        )?;
        let count = distinct_point_count(&ideal)?;
        if count % deg != 0 {
            return Err(AnalysisError::Genericity(format!(
                "fiber degree sum {count} not divisible by factor degree {deg}"
            )));
        }
        return Ok((count, count / deg));
    }
    let space = vars.space_indices();
    let f = fam.polynomial();
    let p = min_poly.embed(vars, &[pidx]);
    let mut per_root: u64 = 0;
    for coeff in space_coefficients_with_keys(f, &space) {
        let (key_degree, coeff) = coeff;
        if u64::from(key_degree) <= per_root {
            continue;
        }
        if crate::poly::exact_div(&coeff, &p).is_none() {
            per_root = u64::from(key_degree);
        }
    }
    Ok((per_root * deg, per_root))
}

/// Coefficients of F grouped by space monomial, tagged with the space degree.
fn space_coefficients_with_keys(
    f: &Polynomial,
    space: &[usize],
) -> Vec<(u32, Polynomial)> {
    let vars = f.varset().clone();
    let mut groups: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
    for (m, c) in f.terms() {
        let key: Vec<u32> = space.iter().map(|&i| m.exp(i)).collect();
        let mut exps = m.exps().to_vec();
        for &i in space {
            exps[i] = 0;
        }
        let term = Polynomial::from_terms(
            &vars,
            [(crate::poly::Monomial::from_exps(exps), c.clone())],
        );
        groups
            .entry(key)
            .and_modify(|acc| *acc = acc.try_add(&term).expect("same varset"))
            .or_insert(term);
    }
    groups
        .into_iter()
        .map(|(key, coeff)| (key.iter().sum::<u32>(), coeff))
        .collect()
}

/// Number of distinct points of a zero-dimensional ideal: the quotient
/// dimension after adjoining the squarefree part of every variable's
/// eliminant (a radical description of zero-dimensional ideals).
pub(crate) fn distinct_point_count(ideal: &Ideal) -> Result<u64, AnalysisError> {
    let vars: &Arc<VarSet> = ideal.varset();
    let n = vars.len();
    let mut extra: Vec<Polynomial> = Vec::new();
    for v in 0..n {
        let others: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        let eliminant = ideal.eliminate(&others);
        let gen = match eliminant.univariate_generator() {
            None => {
                return Err(AnalysisError::Groebner(
                    crate::groebner::GroebnerError::NotZeroDimensional {
                        dimension: ideal.krull_dimension(),
                    },
                ))
            }
            Some(g) => g,
        };
        extra.push(squarefree_part(&gen)?.embed(vars, &[v]));
    }
    Ok(ideal.with_extra(&extra)?.quotient_dimension()? as u64)
}

/// Build the slicing tower: polar contexts for levels n-1 down to 1 on the
/// successively sliced families, and the base level on the original family.
fn build_levels(
    fam: &Family,
    choice: &GenericChoice,
) -> Result<Vec<LevelCtx>, AnalysisError> {
    let mut contexts: Vec<LevelCtx> = Vec::new();
    if fam.n() >= 2 {
        let mut cur = apply_generic_coordinates(fam, &choice.matrix)?;
        let mut slice_idx = 0usize;
        loop {
            let polar = polar_ideal(&cur)?;
            let dim = polar.krull_dimension();
            if dim != -1 && dim != 1 {
                return Err(AnalysisError::Genericity(format!(
                    "polar locus has dimension {dim}"
                )));
            }
            let candidates = atypical_candidates_top(&cur, &polar)?;
            contexts.push(LevelCtx {
                level: cur.n() - 1,
                family: cur.clone(),
                polar: Some(polar),
                candidates,
            });
            if cur.n() == 2 {
                break;
            }
            let sliced = slice(&cur, &choice.hyperplanes[slice_idx])?;
            slice_idx += 1;
            if sliced.space_degree() != cur.space_degree() {
                return Err(AnalysisError::Genericity(
                    "slicing hyperplane dropped the fiber degree".into(),
                ));
            }
            if !is_squarefree(sliced.polynomial()) {
                return Err(AnalysisError::Genericity(
                    "slicing hyperplane produced a non-reduced family".into(),
                ));
            }
            cur = sliced;
        }
    }
    let candidates = base_candidates(fam)?;
    contexts.push(LevelCtx { level: 0, family: fam.clone(), polar: None, candidates });
    contexts.reverse();
    Ok(contexts)
}

/// Random rational samples avoiding the roots of every candidate.
fn draw_samples(
    rng: &mut impl Rng,
    avoid: &[Polynomial],
    count: usize,
) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < count {
        let c = rat(rng.gen_range(2i64..=97));
        if out.contains(&c) {
            continue;
        }
        if avoid.iter().any(|p| vanishes_at(p, &c)) {
            continue;
        }
        out.push(c);
    }
    out
}

fn compute_once(
    fam: &Family,
    choice: &GenericChoice,
    rng: &mut impl Rng,
    required_cs: &[Rational],
    allow_negative: bool,
) -> Result<ProfileEngine, AnalysisError> {
    let contexts = build_levels(fam, choice)?;
    let mut global: Vec<Polynomial> = contexts
        .iter()
        .flat_map(|ctx| ctx.candidates.iter().cloned())
        .collect();
    global.sort_by(factor_sort_key);
    global.dedup();

    let mut levels: Vec<LevelData> = Vec::new();
    for ctx in &contexts {
        if let Some(polar) = &ctx.polar {
            // a curve or empty, finite over every required fiber
            for c in required_cs {
                check_polar_genericity(&ctx.family, polar, c)?;
            }
        }
        let samples = draw_samples(rng, &global, 2);
        let g1 = ctx.gamma_at(&samples[0])?;
        let g2 = ctx.gamma_at(&samples[1])?;
        if g1 != g2 {
            return Err(AnalysisError::Genericity(format!(
                "generic samples disagree at level {}: {g1} vs {g2}",
                ctx.level
            )));
        }
        for c in required_cs {
            ctx.gamma_at(c)?;
        }
        let mut entries: Vec<AtypicalEntry> = Vec::new();
        for p in &global {
            let (value_sum, per_root) = ctx.gamma_algebraic(p)?;
            let defect = g1 as i64 - per_root as i64;
            if defect < 0 && !allow_negative {
                return Err(AnalysisError::Genericity(format!(
                    "negative defect {defect} at level {} over {p}",
                    ctx.level
                )));
            }
            entries.push(AtypicalEntry {
                min_poly: p.clone(),
                degree: p.total_degree().unwrap_or(0),
                value_sum,
                per_root,
                defect,
            });
        }
        levels.push(LevelData {
            level: ctx.level,
            generic_value: g1,
            entries,
            candidates: ctx.candidates.clone(),
        });
    }
    Ok(ProfileEngine {
        profile: GammaProfile {
            levels,
            choice: choice.clone(),
            retries_used: choice.attempt,
        },
        contexts,
    })
}

/// Full profile computation with bounded resampling and an independent
/// confirmation run. Under `force`, a non-squarefree family is let through
/// and negative defects are reported instead of rejected.
pub(crate) fn profile_engine(
    fam: &Family,
    seed: u64,
    retry_limit: u32,
    required_cs: &[Rational],
    force: bool,
) -> Result<ProfileEngine, AnalysisError> {
    match degeneracy_gates(fam) {
        Ok(()) => {}
        Err(AnalysisError::NonSquarefreeFamily) if force => {}
        Err(e) => return Err(e),
    }
    let allow_negative = force;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limit = retry_limit.max(1);
    let mut last: Option<AnalysisError> = None;
    for attempt in 0..limit {
        let choice = GenericChoice::draw(&mut rng, seed, attempt, fam.n());
        let engine = match compute_once(fam, &choice, &mut rng, required_cs, allow_negative) {
            Ok(e) => e,
            Err(e) if e.is_genericity_failure() => {
                last = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        // stability under one resample: an independent choice must agree
        let confirm = GenericChoice::draw(&mut rng, seed, attempt, fam.n());
        match compute_once(fam, &confirm, &mut rng, required_cs, allow_negative) {
            Ok(other) if engine.profile.agrees_with(&other.profile) => return Ok(engine),
            Ok(_) => {
                last = Some(AnalysisError::Genericity(
                    "profiles from independent generic choices disagree".into(),
                ));
                continue;
            }
            Err(e) if e.is_genericity_failure() => {
                last = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or(AnalysisError::RetriesExhausted(limit)))
}

/// The generic profile together with all verified special values.
pub fn gamma_star_profile(
    fam: &Family,
    seed: u64,
    retry_limit: u32,
) -> Result<GammaProfile, AnalysisError> {
    profile_engine(fam, seed, retry_limit, &[], false).map(|e| e.profile)
}

/// The profile restricted to one parameter value: the gamma vector at c
/// (ascending by level) along with the profile it came from.
pub fn gamma_star(
    fam: &Family,
    c: &Rational,
    seed: u64,
    retry_limit: u32,
) -> Result<(Vec<u64>, GammaProfile), AnalysisError> {
    let engine = profile_engine(fam, seed, retry_limit, std::slice::from_ref(c), false)?;
    let mut gamma = Vec::with_capacity(engine.contexts.len());
    for ctx in &engine.contexts {
        gamma.push(ctx.gamma_at(c)?);
    }
    Ok((gamma, engine.profile))
}
