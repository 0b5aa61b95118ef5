//! The full pipeline for one arrangement: syzygy side, singular locus,
//! combinatorial side, identity checks and verdict.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use curvefree::combin::{self, QuadraticPolynomial, SplitResult, WeakCombinatorics};
use curvefree::singlocus::{self, SingularLocusReport, SingularityKind};
use curvefree::syzygy::{self, CurveInvariants};

use crate::arrangement::ArrangementFile;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub max_degree: u32,
    /// Take the combinatorics from the file's `expect_W` instead of
    /// computing the singular locus.
    pub skip_singlocus: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { seed: 0, max_degree: 16, skip_singlocus: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Free, and the Poincaré polynomial splits over the exponents.
    FreeConsistent,
    /// Not free; nothing contradicts that.
    NotFree,
    /// An expectation or a counting identity failed, or a free curve has a
    /// Poincaré polynomial that does not split over its exponents.
    InconsistentInput,
    /// Some singular point is not known to be quasi-homogeneous, so the
    /// combinatorial side does not apply.
    Uncertified,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::FreeConsistent | Verdict::NotFree => 0,
            Verdict::InconsistentInput => 2,
            Verdict::Uncertified => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::FreeConsistent => "FREE_CONSISTENT",
            Verdict::NotFree => "NOT_FREE",
            Verdict::InconsistentInput => "INCONSISTENT_INPUT",
            Verdict::Uncertified => "UNCERTIFIED",
        }
    }
}

/// Which quadratic the combinatorial side uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PoincareVariant {
    /// reduced Poincaré polynomial of a line arrangement
    Lines,
    /// lines and conics with ordinary points
    ConicLine,
    /// conics with ordinary points and `A_3`, `A_5`, `A_7` points
    Conics,
    /// `1 + (d-1) t + ((d-1)^2 - tau) t^2`; not combinatorial
    General,
}

impl PoincareVariant {
    /// The most specific variant that applies to `w`.
    pub fn for_combinatorics(w: &WeakCombinatorics) -> Self {
        let max_degree = w.k_by_degree.keys().next_back().copied().unwrap_or(0);
        let max_mult = w.n_by_mult.keys().next_back().copied().unwrap_or(0);
        if max_degree <= 1 && !w.has_tacnodes() {
            PoincareVariant::Lines
        } else if w.k_by_degree.keys().all(|&i| i == 2) && w.conics() >= 2 && max_mult <= 4 {
            PoincareVariant::Conics
        } else if max_degree <= 2 && !w.has_tacnodes() {
            PoincareVariant::ConicLine
        } else {
            PoincareVariant::General
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareReport {
    pub variant: PoincareVariant,
    pub polynomial: QuadraticPolynomial,
    pub text: String,
    pub split: SplitResult,
    pub factored: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub components: Vec<String>,
    pub seed: u64,
    pub invariants: CurveInvariants,
    pub combinatorics: WeakCombinatorics,
    /// Absent with `skip_singlocus`.
    pub singular_locus: Option<SingularLocusReport>,
    pub poincare: PoincareReport,
    pub identity_checks: BTreeMap<String, bool>,
    pub expectation_checks: BTreeMap<String, bool>,
    pub verdict: Verdict,
    pub reason: String,
}

impl AnalysisReport {
    /// True when quasi-homogeneity was certified (or assumed, when the
    /// combinatorics was supplied).
    pub fn certified(&self) -> bool {
        self.singular_locus.as_ref().is_none_or(|s| s.quasi_homogeneous_certified)
    }
}

fn precondition(msg: impl Into<String>) -> CliError {
    CliError::Precondition(msg.into())
}

pub fn analyze(file: &ArrangementFile, opts: &AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    let components = &file.components;
    let mut degree = 0u32;
    for (i, c) in components.iter().enumerate() {
        let d = c
            .homogeneous_degree()
            .filter(|&d| d > 0)
            .ok_or_else(|| precondition(format!("component {} is not a form of positive degree", i + 1)))?;
        degree += d;
    }
    if degree > opts.max_degree {
        return Err(precondition(format!("degree {degree} exceeds --max-degree {}", opts.max_degree)));
    }
    let f = file.product();
    if !syzygy::reducedness_check(&f, components)? {
        return Err(precondition("the arrangement is not reduced"));
    }
    for (i, c) in components.iter().enumerate() {
        if !syzygy::smoothness_check(c)? {
            return Err(precondition(format!("component {} is not smooth", i + 1)));
        }
    }
    let invariants = syzygy::is_free(&f)?;

    let (combinatorics, singular_locus) = if opts.skip_singlocus {
        let w = file
            .expected
            .combinatorics
            .clone()
            .ok_or_else(|| precondition("--skip-singlocus needs an `expect_W:` line"))?;
        (w, None)
    } else {
        let report = singlocus::derive_with_tau(components, &f, invariants.tau, opts.seed)?;
        (report.derived_combinatorics.clone(), Some(report))
    };
    let unclassified = singular_locus
        .as_ref()
        .is_some_and(|s| s.points.iter().any(|p| p.kind == SingularityKind::Unclassified));

    let variant = if unclassified {
        PoincareVariant::General
    } else {
        PoincareVariant::for_combinatorics(&combinatorics)
    };
    let polynomial = match variant {
        PoincareVariant::Lines => combin::pi0(&combinatorics)?,
        PoincareVariant::ConicLine => combin::poincare_cl(&combinatorics)?,
        PoincareVariant::Conics => combin::poincare_conics(&combinatorics)?,
        PoincareVariant::General => combin::poincare_general(degree as u64, invariants.tau)?,
    };
    let split = combin::split_over_rationals(&polynomial);
    let poincare = PoincareReport {
        variant,
        polynomial,
        text: polynomial.to_string(),
        split,
        factored: split.factored(),
    };

    let certified = singular_locus.as_ref().is_none_or(|s| s.quasi_homogeneous_certified);
    let identity_checks = identity_checks(&combinatorics, variant, &invariants, certified)?;
    let expectation_checks = expectation_checks(file, &invariants, singular_locus.as_ref());

    let (verdict, reason) = verdict(&invariants, &poincare, &identity_checks, &expectation_checks, singular_locus.as_ref());
    Ok(AnalysisReport {
        name: file.name.clone(),
        components: file.component_text.clone(),
        seed: opts.seed,
        invariants,
        combinatorics,
        singular_locus,
        poincare,
        identity_checks,
        expectation_checks,
        verdict,
        reason,
    })
}

/// The single degree `d` when every component has it.
fn common_degree(w: &WeakCombinatorics) -> Option<u32> {
    match w.k_by_degree.keys().collect::<Vec<_>>().as_slice() {
        [&d] => Some(d),
        _ => None,
    }
}

fn identity_checks(
    w: &WeakCombinatorics,
    variant: PoincareVariant,
    inv: &CurveInvariants,
    certified: bool,
) -> Result<BTreeMap<String, bool>, CliError> {
    let mut checks = BTreeMap::new();
    let exps = inv.exponents.map(|(a, b)| (a as u64, b as u64));
    match variant {
        PoincareVariant::Lines | PoincareVariant::ConicLine => {
            checks.insert("count_check".into(), combin::count_check_cl(w)?);
            if let Some((d1, d2)) = exps {
                checks.insert("exponent_identity".into(), combin::check_exponent_identity_cl(w, d1, d2)?);
            }
        }
        PoincareVariant::Conics => {
            checks.insert("count_check".into(), combin::count_check_conics(w)?);
            if let Some((d1, d2)) = exps {
                checks.insert("exponent_identity".into(), combin::check_exponent_identity_conics(w, d1, d2)?);
            }
        }
        PoincareVariant::General => {}
    }
    // the Betti polynomial covers every conic-line arrangement with ordinary points
    if variant != PoincareVariant::General && !w.has_tacnodes() {
        let p = combin::poincare_cl(w)?;
        let b = combin::betti_polynomial(w)?;
        let k = w.conics() as i64;
        checks.insert(
            "poincare_equals_betti_plus_kt(t+1)".into(),
            p == QuadraticPolynomial::new(b.c0, b.c1 + k, b.c2 + k),
        );
        checks.insert("euler_agreement".into(), combin::euler_number(w).is_ok());
    }
    if certified && variant != PoincareVariant::General {
        checks.insert("tau_equals_local_sum".into(), combin::tau_from_combinatorics(w) == inv.tau);
    }
    if let Some(d) = common_degree(w).filter(|&d| d >= 2) {
        let k = w.components_of_degree(d);
        if k >= 2 && !w.has_tacnodes() && variant != PoincareVariant::General {
            checks.insert("dd_count_check".into(), combin::dd_count_check(w, d, k)?);
            let dd = combin::dd_inequality(w, d, k)?;
            if inv.is_free && certified {
                checks.insert("dd_inequality".into(), dd.holds);
            }
            if d == 2 {
                let (lhs, rhs) = combin::dd_inequality_conic_form(w);
                checks.insert("dd_conic_form".into(), lhs - rhs == dd.lhs - dd.rhs);
            }
        }
    }
    Ok(checks)
}

fn expectation_checks(
    file: &ArrangementFile,
    inv: &CurveInvariants,
    locus: Option<&SingularLocusReport>,
) -> BTreeMap<String, bool> {
    let mut checks = BTreeMap::new();
    if let Some(tau) = file.expected.tau {
        checks.insert("tau".into(), tau == inv.tau);
    }
    if let Some(e) = file.expected.exponents {
        checks.insert("exponents".into(), inv.exponents == Some(e));
    }
    if let (Some(w), Some(locus)) = (&file.expected.combinatorics, locus) {
        checks.insert("combinatorics".into(), *w == locus.derived_combinatorics);
    }
    checks
}

fn failed(checks: &BTreeMap<String, bool>) -> Vec<&str> {
    checks.iter().filter(|(_, &ok)| !ok).map(|(k, _)| k.as_str()).collect()
}

fn verdict(
    inv: &CurveInvariants,
    poincare: &PoincareReport,
    identities: &BTreeMap<String, bool>,
    expectations: &BTreeMap<String, bool>,
    locus: Option<&SingularLocusReport>,
) -> (Verdict, String) {
    let bad_expect = failed(expectations);
    if !bad_expect.is_empty() {
        return (Verdict::InconsistentInput, format!("expectation mismatch: {}", bad_expect.join(", ")));
    }
    if let Some(s) = locus.filter(|s| !s.quasi_homogeneous_certified) {
        return (
            Verdict::Uncertified,
            format!(
                "quasi-homogeneity not certified: tau = {}, sum of local Milnor numbers = {}",
                s.total_tjurina, s.milnor_sum
            ),
        );
    }
    let bad_ids = failed(identities);
    if !bad_ids.is_empty() {
        return (Verdict::InconsistentInput, format!("identity check failed: {}", bad_ids.join(", ")));
    }
    let split_roots = poincare.split.roots;
    match inv.exponents {
        Some((d1, d2)) if split_roots == Some((d1 as u64, d2 as u64)) => {
            (Verdict::FreeConsistent, format!("free with exponents ({d1}, {d2}); Poincaré polynomial splits accordingly"))
        }
        Some((d1, d2)) => (
            Verdict::InconsistentInput,
            format!("free with exponents ({d1}, {d2}) but the Poincaré polynomial {} does not split over them", poincare.text),
        ),
        None if !poincare.split.splits => (Verdict::NotFree, "Poincaré polynomial does not split".into()),
        None => (
            Verdict::NotFree,
            format!(
                "Poincaré polynomial splits as {} but the du Plessis–Wall equality fails (mdr = {}, tau = {})",
                poincare.factored.as_deref().unwrap_or_default(),
                inv.mdr,
                inv.tau
            ),
        ),
    }
}

/// Human-readable report.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let inv = &r.invariants;
    let _ = writeln!(s, "arrangement: {}", r.name);
    let _ = writeln!(s, "degree: {}  components: {}", inv.degree, r.components.len());
    let _ = writeln!(s, "mdr: {}  tau: {}", inv.mdr, inv.tau);
    match inv.exponents {
        Some((a, b)) => {
            let _ = writeln!(s, "free: yes, exponents ({a}, {b})");
        }
        None => {
            let _ = writeln!(s, "free: no");
        }
    }
    let _ = writeln!(s, "weak combinatorics: {}", r.combinatorics);
    if let Some(locus) = &r.singular_locus {
        let _ = writeln!(s, "singular points:");
        for p in &locus.points {
            let _ = writeln!(s, "  {:<16} x{:<3} {}", p.kind.to_string(), p.count, p.location);
        }
        let _ = writeln!(
            s,
            "local Milnor sum: {}  residual: {}  certified: {}",
            locus.milnor_sum,
            locus.residual_tjurina,
            if locus.quasi_homogeneous_certified { "yes" } else { "no" }
        );
    } else {
        let _ = writeln!(s, "singular points: not computed (combinatorics supplied)");
    }
    let p = &r.poincare;
    let variant = serde_json::to_value(p.variant).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
    match &p.factored {
        Some(fac) => {
            let _ = writeln!(s, "Poincaré polynomial ({variant}): {} = {fac}", p.text);
        }
        None => {
            let _ = writeln!(s, "Poincaré polynomial ({variant}): {} (no rational splitting)", p.text);
        }
    }
    for (name, ok) in r.identity_checks.iter().chain(&r.expectation_checks) {
        let _ = writeln!(s, "  {:<36} {}", name, if *ok { "ok" } else { "FAILED" });
    }
    let _ = writeln!(s, "verdict: {} ({})", r.verdict.as_str(), r.reason);
    s
}
