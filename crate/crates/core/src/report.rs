//! End-to-end analysis pipeline and report rendering.
//!
//! `analyze` runs the hypothesis check, the gamma profile, per-fiber
//! invariants and verdicts, and returns a report that renders to
//! deterministic text or JSON. Rationals serialize as exact strings.

use crate::invariants::{
    build_fiber_report, euler_jump, profile_engine, profile_vanishes_at, verdict, AnalysisError,
    Family, FiberReport, GammaProfile, HypothesisReport, SingularValues, Verdict,
};
use crate::parse::{FamilyMode, FamilySpec};
use crate::poly::{rat, Rational};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub seed: u64,
    pub retry_limit: u32,
    pub at: Vec<Rational>,
    pub force: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { seed: 0, retry_limit: 8, at: Vec::new(), force: false }
    }
}

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub spec: FamilySpec,
    pub family: Family,
    pub hypothesis: HypothesisReport,
    pub profile: GammaProfile,
    pub fibers: Vec<FiberReport>,
    pub verdicts: Vec<Verdict>,
    pub warnings: Vec<String>,
    /// The generic witness value used for Euler-jump cross-checks.
    pub witness: Option<Rational>,
}

/// First non-negative integer that avoids every candidate root and singular
/// value: a deterministic generic witness independent of the seed.
fn generic_witness(profile: &GammaProfile, hyp: &HypothesisReport) -> Option<Rational> {
    if let SingularValues::Everywhere = hyp.singular_values {
        return None;
    }
    'outer: for k in 1..10_000i64 {
        let c = rat(k);
        for lvl in &profile.levels {
            for e in &lvl.entries {
                if profile_vanishes_at(&e.min_poly, &c) {
                    continue 'outer;
                }
            }
        }
        if hyp.singular_values.contains(&c) {
            continue;
        }
        return Some(c);
    }
    None
}

/// Full pipeline: hypothesis, profile, fibers, verdicts.
pub fn analyze(spec: &FamilySpec, opts: &AnalysisOptions) -> Result<AnalysisReport, AnalysisError> {
    let family = Family::from_spec(spec)?;
    let mut warnings = Vec::new();
    if family.is_constant_in_parameter() {
        warnings.push("family polynomial does not involve the parameter".to_string());
    }
    let hypothesis = verify_hypothesis_gate(&family, opts, &mut warnings)?;
    let engine = profile_engine(&family, opts.seed, opts.retry_limit, &opts.at, opts.force)?;
    let profile = engine.profile.clone();

    // fibers: requested values, verified special values, one generic witness
    let witness = generic_witness(&profile, &hypothesis);
    let mut cs: Vec<Rational> = opts.at.clone();
    cs.extend(profile.rational_jump_values());
    if let Some(w) = &witness {
        cs.push(w.clone());
    }
    cs.sort();
    cs.dedup();

    let mut fibers = Vec::new();
    for c in &cs {
        match build_fiber_report(&family, &engine, c) {
            Ok(report) => fibers.push(report),
            Err(AnalysisError::NonIsolatedSingularities { dimension }) if opts.force => {
                warnings.push(format!(
                    "fiber at {c} skipped: non-isolated singularities (dimension {dimension})"
                ));
            }
            Err(e) => return Err(e),
        }
    }

    // Euler-jump cross-check against the witness fiber
    if hypothesis.pass {
        if let Some(w) = &witness {
            let witness_fiber = fibers.iter().find(|f| &f.c == w).cloned();
            if let Some(wf) = witness_fiber {
                if wf.mu == 0 {
                    for f in &fibers {
                        let lambda = profile.lambda_at(&f.c);
                        let jump = euler_jump(family.n(), f.mu, &lambda);
                        if jump != wf.chi - f.chi {
                            return Err(AnalysisError::Internal(format!(
                                "euler jump at {} disagrees: formula {jump}, difference {}",
                                f.c,
                                wf.chi - f.chi
                            )));
                        }
                    }
                } else {
                    warnings.push("witness fiber is singular; euler jump not checked".into());
                }
            }
        } else {
            warnings.push("no nonsingular witness fiber available".into());
        }
    }

    let mut verdicts: Vec<Verdict> = cs
        .iter()
        .map(|c| verdict(&family, &profile, &hypothesis, c))
        .collect();
    if !hypothesis.pass {
        for v in &mut verdicts {
            v.implied.clear();
        }
        warnings.push(
            "hypothesis failed: defects are raw differences and verdict tags are suppressed"
                .into(),
        );
    }

    Ok(AnalysisReport {
        spec: spec.clone(),
        family,
        hypothesis,
        profile,
        fibers,
        verdicts,
        warnings,
        witness,
    })
}

fn verify_hypothesis_gate(
    family: &Family,
    opts: &AnalysisOptions,
    warnings: &mut Vec<String>,
) -> Result<HypothesisReport, AnalysisError> {
    let hypothesis = crate::invariants::verify_hypothesis(family)?;
    if !hypothesis.pass {
        if !opts.force {
            return Err(AnalysisError::HypothesisFailed(
                hypothesis.diagnostics.join("; "),
            ));
        }
        warnings.push("forced analysis despite hypothesis failure".to_string());
    }
    Ok(hypothesis)
}

// ---------------------------------------------------------------------------
// JSON shape

#[derive(Serialize)]
struct FamilyJson {
    mode: FamilyMode,
    expression: String,
    space_vars: Vec<String>,
    parameter: String,
    polynomial: String,
    n: usize,
    space_degree: u32,
}

#[derive(Serialize)]
struct HypothesisJson {
    pass: bool,
    diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct GenericChoiceJson {
    seed: u64,
    matrix: Vec<Vec<String>>,
    hyperplanes: Vec<String>,
    retries: u32,
}

#[derive(Serialize)]
struct AtypicalJson {
    min_poly: String,
    degree: u32,
    gamma: u64,
}

#[derive(Serialize)]
struct GammaLevelJson {
    level: usize,
    generic: u64,
    atypical: Vec<AtypicalJson>,
    candidates: Vec<String>,
}

#[derive(Serialize)]
struct LambdaEntryJson {
    min_poly: String,
    degree: u32,
    defect: i64,
}

#[derive(Serialize)]
struct LambdaLevelJson {
    level: usize,
    entries: Vec<LambdaEntryJson>,
}

#[derive(Serialize)]
struct FiberJson {
    c: String,
    mu: u64,
    gamma: Vec<u64>,
    chi: i64,
    cells: Vec<u64>,
    singular: bool,
}

#[derive(Serialize)]
struct VerdictJson {
    c: String,
    t_equisingular_at_infinity: bool,
    lambda: Vec<i64>,
    implied: Vec<String>,
}

#[derive(Serialize)]
struct ReportJson {
    family: FamilyJson,
    hypothesis: HypothesisJson,
    generic_choice: GenericChoiceJson,
    gamma_profile: Vec<GammaLevelJson>,
    lambda_profile: Vec<LambdaLevelJson>,
    fibers: Vec<FiberJson>,
    verdicts: Vec<VerdictJson>,
    warnings: Vec<String>,
}

impl AnalysisReport {
    fn to_json_struct(&self) -> ReportJson {
        let vars = self.family.varset();
        ReportJson {
            family: FamilyJson {
                mode: self.spec.mode,
                expression: self.spec.expression.clone(),
                space_vars: self.spec.space_vars.clone(),
                parameter: self.spec.parameter.clone(),
                polynomial: self.family.polynomial().to_string(),
                n: self.family.n(),
                space_degree: self.family.space_degree(),
            },
            hypothesis: HypothesisJson {
                pass: self.hypothesis.pass,
                diagnostics: self.hypothesis.diagnostics.clone(),
            },
            generic_choice: GenericChoiceJson {
                seed: self.profile.choice.seed,
                matrix: self
                    .profile
                    .choice
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(|e| e.to_string()).collect())
                    .collect(),
                hyperplanes: self
                    .profile
                    .choice
                    .hyperplanes
                    .iter()
                    .map(|h| h.render(vars))
                    .collect(),
                retries: self.profile.retries_used,
            },
            gamma_profile: self
                .profile
                .levels
                .iter()
                .map(|lvl| GammaLevelJson {
                    level: lvl.level,
                    generic: lvl.generic_value,
                    atypical: lvl
                        .entries
                        .iter()
                        .map(|e| AtypicalJson {
                            min_poly: e.min_poly.to_string(),
                            degree: e.degree,
                            gamma: e.per_root,
                        })
                        .collect(),
                    candidates: lvl.candidates.iter().map(|p| p.to_string()).collect(),
                })
                .collect(),
            lambda_profile: self
                .profile
                .levels
                .iter()
                .map(|lvl| LambdaLevelJson {
                    level: lvl.level,
                    entries: lvl
                        .entries
                        .iter()
                        .filter(|e| e.defect != 0)
                        .map(|e| LambdaEntryJson {
                            min_poly: e.min_poly.to_string(),
                            degree: e.degree,
                            defect: e.defect,
                        })
                        .collect(),
                })
                .collect(),
            fibers: self
                .fibers
                .iter()
                .map(|f| FiberJson {
                    c: f.c.to_string(),
                    mu: f.mu,
                    gamma: f.gamma.clone(),
                    chi: f.chi,
                    cells: f.cells.clone(),
                    singular: f.singular,
                })
                .collect(),
            verdicts: self
                .verdicts
                .iter()
                .map(|v| VerdictJson {
                    c: v.c.to_string(),
                    t_equisingular_at_infinity: v.t_equisingular_at_infinity,
                    lambda: v.lambda.clone(),
                    implied: v.implied.iter().map(|t| t.as_str().to_string()).collect(),
                })
                .collect(),
            warnings: self.warnings.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_struct()).expect("serializable")
    }

    /// The atypical set: irreducible parameter polynomials with a nonzero
    /// defect at some level, deduplicated, in display form.
    pub fn atypical_set(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .profile
            .jumps()
            .into_iter()
            .map(|(_, e)| e.min_poly.to_string())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "family: F = {}   (n = {}, space degree = {}, parameter = {})",
            self.family.polynomial(),
            self.family.n(),
            self.family.space_degree(),
            self.spec.parameter
        );
        let _ = writeln!(
            s,
            "hypothesis: {}",
            if self.hypothesis.pass { "PASS" } else { "FAIL" }
        );
        for d in &self.hypothesis.diagnostics {
            let _ = writeln!(s, "  - {d}");
        }
        let matrix: Vec<String> = self
            .profile
            .choice
            .matrix
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        let _ = writeln!(
            s,
            "generic choice: seed = {}, retries = {}, matrix = [{}]",
            self.profile.choice.seed,
            self.profile.retries_used,
            matrix.join(", ")
        );
        let vars = self.family.varset();
        if !self.profile.choice.hyperplanes.is_empty() {
            let planes: Vec<String> = self
                .profile
                .choice
                .hyperplanes
                .iter()
                .map(|h| h.render(vars))
                .collect();
            let _ = writeln!(s, "slicing hyperplanes: {}", planes.join("; "));
        }
        let _ = writeln!(s, "gamma profile:");
        for lvl in self.profile.levels.iter().rev() {
            let _ = write!(s, "  level {}: generic {}", lvl.level, lvl.generic_value);
            let special: Vec<String> = lvl
                .entries
                .iter()
                .filter(|e| e.defect != 0)
                .map(|e| format!("{} -> {} (defect {})", e.min_poly, e.per_root, e.defect))
                .collect();
            if special.is_empty() {
                let _ = writeln!(s, "; no jumps");
            } else {
                let _ = writeln!(s, "; jumps: {}", special.join(", "));
            }
        }
        let atypical = self.atypical_set();
        if atypical.is_empty() {
            let _ = writeln!(s, "atypical set: empty");
        } else {
            let _ = writeln!(s, "atypical set: {{ {} }}", atypical.join(", "));
        }
        for f in &self.fibers {
            let gamma: Vec<String> = f.gamma.iter().map(|g| g.to_string()).collect();
            let cells: Vec<String> = f.cells.iter().map(|g| g.to_string()).collect();
            let _ = writeln!(
                s,
                "fiber c = {}: mu = {}, gamma = [{}], chi = {}, cells = [{}]{}",
                f.c,
                f.mu,
                gamma.join(", "),
                f.chi,
                cells.join(", "),
                if f.singular { " (singular)" } else { "" }
            );
        }
        for v in &self.verdicts {
            let lambda: Vec<String> = v.lambda.iter().map(|l| l.to_string()).collect();
            let _ = write!(
                s,
                "verdict at {}: {} (lambda = [{}])",
                v.c,
                if v.t_equisingular_at_infinity {
                    "t-equisingular at infinity"
                } else {
                    "NOT t-equisingular at infinity"
                },
                lambda.join(", ")
            );
            if v.implied.is_empty() {
                let _ = writeln!(s);
            } else {
                let tags: Vec<&str> = v.implied.iter().map(|t| t.as_str()).collect();
                let _ = writeln!(s, " => {}", tags.join(", "));
            }
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }

    /// Gamma vector at a specific value, ascending by level.
    pub fn gamma_vector_at(&self, c: &Rational) -> Vec<u64> {
        self.fibers
            .iter()
            .find(|f| &f.c == c)
            .map(|f| f.gamma.clone())
            .unwrap_or_else(|| self.profile.gamma_at(c))
    }
}
