//! Executable checks for the ordinal-sum construction theorems, randomized
//! family generation, and counterexample search.
//!
//! [`verify`] checks a theorem's hypotheses on a concrete family and, when
//! they hold, checks the conclusion on a grid. [`falsify`] runs the
//! contrapositive of the iff/necessity results: given a family that breaks
//! a hypothesis, it must find a witness that the conclusion breaks too.

use crate::analysis::{
    classify_negation, equilibrium_point, invert_strict_negation, AnalysisBudget, NegationClass,
};
use crate::config::family_digest;
use crate::connective::{
    make_connective, ConnectiveExpr, ConnectiveKind,
};
use crate::error::{Error, Result};
use crate::natural_negation::{
    closed_form_natneg_tconorm_sum, closed_form_natneg_tnorm_sum, natneg_of_tconorm_summand,
    natneg_of_tnorm_summand, natural_negation_implication, natural_negation_tconorm,
    natural_negation_tnorm, SupInfOracleConfig,
};
use crate::ordinal_sum::{
    left_ordinal_sum_implication, mirror_family, ordinal_sum_negation, ordinal_sum_tconorm,
    ordinal_sum_tnorm, Summand, SummandFamily, SumVariant,
};
use crate::unit::unit_grid;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt;

/// Dominance witnesses must beat the standard negation by this margin.
pub const DOMINANCE_WITNESS_MARGIN: f64 = 1e-12;
/// Involution witnesses for broken mirror families must exceed this.
pub const STRONG_WITNESS_MARGIN: f64 = 1e-6;
/// Tolerance wherever a bisection oracle participates in a comparison.
pub const ORACLE_COMPARISON_TOL: f64 = 1e-6;
/// Slack for matching mirrored interval endpoints written in decimal.
const INTERVAL_MATCH_TOL: f64 = 1e-12;
/// Binary axiom checks run on this many points per axis.
const BINARY_AXIOM_GRID: usize = 101;
/// Associativity is checked on this many points per axis.
const ASSOCIATIVITY_GRID: usize = 11;
/// Reports keep at most this many witnesses.
const MAX_WITNESSES: usize = 16;

/// One construction theorem, addressable by a stable string id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    NegationAxioms,
    RangeConfinement,
    Equilibrium,
    LeqStandardIff,
    GeqStandardIff,
    ContinuityStrictnessIff,
    FrontierSufficient,
    FrontierNecessary,
    StrongSufficient,
    StrongNecessary,
    InverseConstruction,
    NatnegTnormClosedForm,
    NatnegTconormClosedForm,
    CommutingDiagram,
}

impl TheoremId {
    pub fn id(self) -> &'static str {
        match self {
            TheoremId::NegationAxioms => "negation_axioms",
            TheoremId::RangeConfinement => "range_confinement",
            TheoremId::Equilibrium => "equilibrium",
            TheoremId::LeqStandardIff => "leq_standard_iff",
            TheoremId::GeqStandardIff => "geq_standard_iff",
            TheoremId::ContinuityStrictnessIff => "continuity_strictness_iff",
            TheoremId::FrontierSufficient => "frontier_sufficient",
            TheoremId::FrontierNecessary => "frontier_necessary",
            TheoremId::StrongSufficient => "strong_sufficient",
            TheoremId::StrongNecessary => "strong_necessary",
            TheoremId::InverseConstruction => "inverse_construction",
            TheoremId::NatnegTnormClosedForm => "natneg_tnorm_closed_form",
            TheoremId::NatnegTconormClosedForm => "natneg_tconorm_closed_form",
            TheoremId::CommutingDiagram => "commuting_diagram",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        TheoremId::all()
            .iter()
            .copied()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }

    pub fn all() -> [TheoremId; 14] {
        [
            TheoremId::NegationAxioms,
            TheoremId::RangeConfinement,
            TheoremId::Equilibrium,
            TheoremId::LeqStandardIff,
            TheoremId::GeqStandardIff,
            TheoremId::ContinuityStrictnessIff,
            TheoremId::FrontierSufficient,
            TheoremId::FrontierNecessary,
            TheoremId::StrongSufficient,
            TheoremId::StrongNecessary,
            TheoremId::InverseConstruction,
            TheoremId::NatnegTnormClosedForm,
            TheoremId::NatnegTconormClosedForm,
            TheoremId::CommutingDiagram,
        ]
    }

    fn expected_variant(self) -> SumVariant {
        match self {
            TheoremId::NatnegTnormClosedForm => SumVariant::TNorm,
            TheoremId::NatnegTconormClosedForm => SumVariant::TConorm,
            TheoremId::CommutingDiagram => SumVariant::ImplicationLeft,
            _ => SumVariant::Negation,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    HypothesesNotMet,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesesNotMet => "hypotheses_not_met",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A point where expectation and observation diverge (or, for falsification
/// passes, the found counterexample).
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub point: Vec<f64>,
    pub expected: f64,
    pub observed: f64,
}

/// Outcome of one theorem check on one family.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub family_digest: String,
    pub verdict: Verdict,
    pub max_deviation: f64,
    pub witnesses: Vec<Witness>,
    pub notes: String,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} on family {}: {} (max deviation {:e})",
            self.theorem, self.family_digest, self.verdict, self.max_deviation
        )?;
        if !self.notes.is_empty() {
            writeln!(f, "  notes: {}", self.notes)?;
        }
        for w in &self.witnesses {
            writeln!(
                f,
                "  witness at {:?}: expected {:e}, observed {:e}",
                w.point, w.expected, w.observed
            )?;
        }
        Ok(())
    }
}

/// Accumulates the max deviation and the first few witnesses of a check.
#[derive(Clone, Debug, Default)]
pub struct CheckOutcome {
    pub max_deviation: f64,
    pub witnesses: Vec<Witness>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    fn observe(&mut self, point: Vec<f64>, expected: f64, observed: f64, tol: f64) {
        let dev = (expected - observed).abs();
        if dev > self.max_deviation {
            self.max_deviation = dev;
        }
        if dev > tol && self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                point,
                expected,
                observed,
            });
        }
    }

    fn violation(&mut self, point: Vec<f64>, expected: f64, observed: f64) {
        let dev = (expected - observed).abs();
        if dev > self.max_deviation {
            self.max_deviation = dev;
        }
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                point,
                expected,
                observed,
            });
        }
    }

}

fn report(
    theorem: TheoremId,
    family: &SummandFamily,
    verdict: Verdict,
    outcome: CheckOutcome,
    notes: impl Into<String>,
) -> VerifyReport {
    VerifyReport {
        theorem,
        family_digest: family_digest(family),
        verdict,
        max_deviation: outcome.max_deviation,
        witnesses: outcome.witnesses,
        notes: notes.into(),
    }
}

fn hypotheses_not_met(
    theorem: TheoremId,
    family: &SummandFamily,
    which: impl Into<String>,
) -> VerifyReport {
    VerifyReport {
        theorem,
        family_digest: family_digest(family),
        verdict: Verdict::HypothesesNotMet,
        max_deviation: 0.0,
        witnesses: Vec::new(),
        notes: which.into(),
    }
}

fn check_family_kind(theorem: TheoremId, family: &SummandFamily) -> Result<()> {
    let expected = theorem.expected_variant();
    if family.variant() == expected {
        Ok(())
    } else {
        Err(Error::TheoremFamilyMismatch {
            theorem: theorem.id().to_string(),
            expected: expected.name().to_string(),
            found: family.variant().name().to_string(),
        })
    }
}

fn pass_fail(outcome: &CheckOutcome) -> Verdict {
    if outcome.passed() {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

// ---------------------------------------------------------------------------
// axiom batteries
// ---------------------------------------------------------------------------

/// N1 exactly at the endpoints, N2 between consecutive grid points.
pub fn check_negation_axioms(
    n: &ConnectiveExpr,
    budget: &AnalysisBudget,
) -> Result<CheckOutcome> {
    let tol = budget.equality_tol;
    let mut out = CheckOutcome::default();
    let v0 = n.raw1(0.0)?;
    let v1 = n.raw1(1.0)?;
    out.observe(vec![0.0], 1.0, v0, 0.0);
    out.observe(vec![1.0], 0.0, v1, 0.0);
    let mut prev_x = 0.0;
    let mut prev = v0;
    for x in unit_grid(budget.grid_points).skip(1) {
        let v = n.raw1(x)?;
        if v > prev + tol {
            out.violation(vec![prev_x, x], prev, v);
        } else {
            out.max_deviation = out.max_deviation.max((v - prev).max(0.0));
        }
        prev = v;
        prev_x = x;
    }
    Ok(out)
}

/// One identity, commutativity, monotonicity and associativity for a t-norm.
pub fn check_tnorm_axioms(t: &ConnectiveExpr, budget: &AnalysisBudget) -> Result<CheckOutcome> {
    check_binary_monoid_axioms(t, budget, 1.0)
}

/// Zero identity, commutativity, monotonicity and associativity for a
/// t-conorm.
pub fn check_tconorm_axioms(s: &ConnectiveExpr, budget: &AnalysisBudget) -> Result<CheckOutcome> {
    check_binary_monoid_axioms(s, budget, 0.0)
}

fn check_binary_monoid_axioms(
    op: &ConnectiveExpr,
    budget: &AnalysisBudget,
    identity: f64,
) -> Result<CheckOutcome> {
    let tol = budget.equality_tol;
    let mut out = CheckOutcome::default();
    for x in unit_grid(budget.grid_points) {
        let v = op.raw2(x, identity)?;
        out.observe(vec![x, identity], x, v, tol);
    }
    let xs: Vec<f64> = unit_grid(BINARY_AXIOM_GRID).collect();
    let mut table = vec![vec![0.0; xs.len()]; xs.len()];
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in xs.iter().enumerate() {
            table[i][j] = op.raw2(x, y)?;
        }
    }
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            out.observe(vec![xs[i], xs[j]], table[i][j], table[j][i], tol);
        }
    }
    for j in 0..xs.len() {
        for i in 0..xs.len() - 1 {
            if table[i][j] > table[i + 1][j] + tol {
                out.violation(vec![xs[i], xs[i + 1], xs[j]], table[i + 1][j], table[i][j]);
            }
        }
    }
    let g3: Vec<f64> = unit_grid(ASSOCIATIVITY_GRID).collect();
    for &x in &g3 {
        for &y in &g3 {
            for &z in &g3 {
                let left = op.raw2(x, op.raw2(y, z)?)?;
                let right = op.raw2(op.raw2(x, y)?, z)?;
                out.observe(vec![x, y, z], left, right, tol);
            }
        }
    }
    Ok(out)
}

/// J1-J5 for an implication.
pub fn check_implication_axioms(
    j: &ConnectiveExpr,
    budget: &AnalysisBudget,
) -> Result<CheckOutcome> {
    let tol = budget.equality_tol;
    let mut out = CheckOutcome::default();
    out.observe(vec![0.0, 0.0], 1.0, j.raw2(0.0, 0.0)?, tol);
    out.observe(vec![1.0, 1.0], 1.0, j.raw2(1.0, 1.0)?, tol);
    out.observe(vec![1.0, 0.0], 0.0, j.raw2(1.0, 0.0)?, tol);
    let xs: Vec<f64> = unit_grid(BINARY_AXIOM_GRID).collect();
    let mut table = vec![vec![0.0; xs.len()]; xs.len()];
    for (i, &x) in xs.iter().enumerate() {
        for (jj, &y) in xs.iter().enumerate() {
            table[i][jj] = j.raw2(x, y)?;
        }
    }
    for col in 0..xs.len() {
        for row in 0..xs.len() - 1 {
            // J1: non-increasing in the first argument
            if table[row + 1][col] > table[row][col] + tol {
                out.violation(
                    vec![xs[row], xs[row + 1], xs[col]],
                    table[row][col],
                    table[row + 1][col],
                );
            }
        }
    }
    for row in 0..xs.len() {
        for col in 0..xs.len() - 1 {
            // J2: non-decreasing in the second argument
            if table[row][col] > table[row][col + 1] + tol {
                out.violation(
                    vec![xs[row], xs[col], xs[col + 1]],
                    table[row][col + 1],
                    table[row][col],
                );
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

/// Verifies one theorem on one family: hypotheses first, then the
/// conclusion on the grid.
pub fn verify(
    theorem: TheoremId,
    family: &SummandFamily,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<VerifyReport> {
    check_family_kind(theorem, family)?;
    match theorem {
        TheoremId::NegationAxioms => verify_negation_axioms(family, budget),
        TheoremId::RangeConfinement => verify_range_confinement(family, budget),
        TheoremId::Equilibrium => verify_equilibrium(family, budget),
        TheoremId::LeqStandardIff => verify_dominance(family, budget, Dominance::Leq),
        TheoremId::GeqStandardIff => verify_dominance(family, budget, Dominance::Geq),
        TheoremId::ContinuityStrictnessIff => verify_continuity_strictness(family, budget),
        TheoremId::FrontierSufficient => verify_frontier_sufficient(family, budget),
        TheoremId::FrontierNecessary => verify_frontier_necessary(family, budget),
        TheoremId::StrongSufficient => verify_strong_sufficient(family, budget),
        TheoremId::StrongNecessary => verify_strong_necessary(family, budget),
        TheoremId::InverseConstruction => verify_inverse_construction(family, budget),
        TheoremId::NatnegTnormClosedForm => verify_closed_form_tnorm(family, budget, oracle),
        TheoremId::NatnegTconormClosedForm => verify_closed_form_tconorm(family, budget, oracle),
        TheoremId::CommutingDiagram => verify_commuting_diagram(family, budget),
    }
}

/// Checks the contrapositive of an iff/necessity theorem: the family must
/// violate a hypothesis, and a witness that the conclusion fails must be
/// found. `pass` corroborates the necessity direction on this instance.
pub fn falsify(
    theorem: TheoremId,
    family: &SummandFamily,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<VerifyReport> {
    let _ = oracle;
    check_family_kind(theorem, family)?;
    match theorem {
        TheoremId::LeqStandardIff => falsify_dominance(family, budget, Dominance::Leq),
        TheoremId::GeqStandardIff => falsify_dominance(family, budget, Dominance::Geq),
        TheoremId::ContinuityStrictnessIff => falsify_continuity_strictness(family, budget),
        TheoremId::FrontierNecessary => falsify_frontier_necessary(family, budget),
        TheoremId::StrongNecessary => falsify_strong_necessary(family, budget),
        other => Err(Error::NoFalsificationDirection(other.id().to_string())),
    }
}

fn verify_negation_axioms(family: &SummandFamily, budget: &AnalysisBudget) -> Result<VerifyReport> {
    let n = ordinal_sum_negation(family.clone())?;
    let out = check_negation_axioms(&n, budget)?;
    let verdict = pass_fail(&out);
    Ok(report(TheoremId::NegationAxioms, family, verdict, out, ""))
}

fn verify_range_confinement(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    let n = ordinal_sum_negation(family.clone())?;
    let mut out = CheckOutcome::default();
    let xs: Vec<f64> = unit_grid(budget.grid_points).collect();
    for s in family.summands() {
        let lo = 1.0 - s.b();
        let hi = 1.0 - s.a();
        let mut points: Vec<f64> = xs
            .iter()
            .copied()
            .filter(|&x| s.a() <= x && x <= s.b())
            .collect();
        points.push(s.a());
        points.push(s.b());
        for x in points {
            let v = n.raw1(x)?;
            if v < lo {
                out.violation(vec![x], lo, v);
            }
            if v > hi {
                out.violation(vec![x], hi, v);
            }
        }
    }
    for &x in &xs {
        if family.summands().iter().any(|s| s.a() <= x && x <= s.b()) {
            continue;
        }
        let v = n.raw1(x)?;
        for s in family.summands() {
            let lo = 1.0 - s.b();
            let hi = 1.0 - s.a();
            if lo < v && v < hi {
                out.violation(vec![x], lo, v);
            }
        }
    }
    let verdict = pass_fail(&out);
    Ok(report(TheoremId::RangeConfinement, family, verdict, out, ""))
}

fn verify_equilibrium(family: &SummandFamily, budget: &AnalysisBudget) -> Result<VerifyReport> {
    let n = ordinal_sum_negation(family.clone())?;
    // the fixed point must land within budget.equality_tol after rescaling,
    // so resolve the summand equilibrium a notch tighter
    let tight = AnalysisBudget {
        equality_tol: budget.equality_tol / 4.0,
        ..*budget
    };
    let mut checked = 0;
    let mut out = CheckOutcome::default();
    for s in family.summands() {
        if (s.b() - (1.0 - s.a())).abs() > INTERVAL_MATCH_TOL {
            continue;
        }
        let Some(e) = equilibrium_point(s.connective(), &tight)? else {
            continue;
        };
        checked += 1;
        let p = s.a() + (s.b() - s.a()) * e;
        let v = n.raw1(p)?;
        out.observe(vec![p], p, v, budget.equality_tol);
    }
    if checked == 0 {
        return Ok(hypotheses_not_met(
            TheoremId::Equilibrium,
            family,
            "no summand has b = 1 - a together with an equilibrium point",
        ));
    }
    let verdict = pass_fail(&out);
    Ok(report(TheoremId::Equilibrium, family, verdict, out, ""))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dominance {
    Leq,
    Geq,
}

impl Dominance {
    fn theorem(self) -> TheoremId {
        match self {
            Dominance::Leq => TheoremId::LeqStandardIff,
            Dominance::Geq => TheoremId::GeqStandardIff,
        }
    }

    /// Signed excess over the allowed side; positive means violated.
    fn excess(self, v: f64, standard: f64) -> f64 {
        match self {
            Dominance::Leq => v - standard,
            Dominance::Geq => standard - v,
        }
    }
}

fn verify_dominance(
    family: &SummandFamily,
    budget: &AnalysisBudget,
    side: Dominance,
) -> Result<VerifyReport> {
    let xs: Vec<f64> = unit_grid(budget.grid_points).collect();
    for (i, s) in family.summands().iter().enumerate() {
        for &x in &xs {
            let v = s.connective().raw1(x)?;
            if side.excess(v, 1.0 - x) > budget.equality_tol {
                return Ok(hypotheses_not_met(
                    side.theorem(),
                    family,
                    format!("summand {i} is not on the required side of the standard negation"),
                ));
            }
        }
    }
    let n = ordinal_sum_negation(family.clone())?;
    let mut out = CheckOutcome::default();
    for &x in &xs {
        let v = n.raw1(x)?;
        let excess = side.excess(v, 1.0 - x);
        out.max_deviation = out.max_deviation.max(excess.max(0.0));
        if excess > DOMINANCE_WITNESS_MARGIN {
            out.violation(vec![x], 1.0 - x, v);
        }
    }
    let verdict = pass_fail(&out);
    Ok(report(side.theorem(), family, verdict, out, ""))
}

fn falsify_dominance(
    family: &SummandFamily,
    budget: &AnalysisBudget,
    side: Dominance,
) -> Result<VerifyReport> {
    let xs: Vec<f64> = unit_grid(budget.grid_points).collect();
    let mut violated = false;
    'outer: for s in family.summands() {
        for &x in &xs {
            if side.excess(s.connective().raw1(x)?, 1.0 - x) > budget.equality_tol {
                violated = true;
                break 'outer;
            }
        }
    }
    if !violated {
        return Ok(hypotheses_not_met(
            side.theorem(),
            family,
            "every summand is on the required side of the standard negation; nothing to falsify",
        ));
    }
    let n = ordinal_sum_negation(family.clone())?;
    let mut best: Option<Witness> = None;
    let mut max_excess = 0.0_f64;
    for &x in &xs {
        let v = n.raw1(x)?;
        let excess = side.excess(v, 1.0 - x);
        if excess > max_excess {
            max_excess = excess;
            best = Some(Witness {
                point: vec![x],
                expected: 1.0 - x,
                observed: v,
            });
        }
    }
    let mut out = CheckOutcome {
        max_deviation: max_excess,
        witnesses: Vec::new(),
    };
    let verdict = if max_excess > DOMINANCE_WITNESS_MARGIN {
        out.witnesses.extend(best);
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report(
        side.theorem(),
        family,
        verdict,
        out,
        "falsification: witness shows the ordinal sum escapes the standard negation bound",
    ))
}

fn summand_continuous_strict(s: &ConnectiveExpr, budget: &AnalysisBudget) -> Result<bool> {
    let certs = s.negation_certs();
    if certs.continuous && certs.strict {
        return Ok(true);
    }
    let r = classify_negation(s, budget)?;
    Ok(r.holds(NegationClass::Continuous) && r.holds(NegationClass::Strict))
}

fn anchor_outcome(
    n: &ConnectiveExpr,
    family: &SummandFamily,
    out: &mut CheckOutcome,
) -> Result<()> {
    for s in family.summands() {
        let va = n.raw1(s.a())?;
        let vb = n.raw1(s.b())?;
        out.observe(vec![s.a()], 1.0 - s.a(), va, 0.0);
        out.observe(vec![s.b()], 1.0 - s.b(), vb, 0.0);
    }
    Ok(())
}

fn verify_continuity_strictness(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    for (i, s) in family.summands().iter().enumerate() {
        if !summand_continuous_strict(s.connective(), budget)? {
            return Ok(hypotheses_not_met(
                TheoremId::ContinuityStrictnessIff,
                family,
                format!("summand {i} is not a continuous strictly decreasing negation"),
            ));
        }
    }
    let n = ordinal_sum_negation(family.clone())?;
    let r = classify_negation(&n, budget)?;
    let mut out = CheckOutcome::default();
    if !r.holds(NegationClass::Continuous) {
        for w in r.witnesses.iter().filter(|w| w.class == NegationClass::Continuous) {
            out.violation(w.points.clone(), w.values[0], w.values[1]);
        }
    }
    if !r.holds(NegationClass::Strict) {
        for w in r.witnesses.iter().filter(|w| w.class == NegationClass::Strict) {
            out.violation(w.points.clone(), 0.0, 1.0);
        }
    }
    anchor_outcome(&n, family, &mut out)?;
    let verdict = pass_fail(&out);
    Ok(report(
        TheoremId::ContinuityStrictnessIff,
        family,
        verdict,
        out,
        "conclusion: ordinal sum continuous, strictly decreasing, anchored at 1-a_i / 1-b_i",
    ))
}

fn falsify_continuity_strictness(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    let mut broken = false;
    for s in family.summands() {
        if !summand_continuous_strict(s.connective(), budget)? {
            broken = true;
            break;
        }
    }
    if !broken {
        return Ok(hypotheses_not_met(
            TheoremId::ContinuityStrictnessIff,
            family,
            "every summand is continuous and strict; nothing to falsify",
        ));
    }
    let n = ordinal_sum_negation(family.clone())?;
    let r = classify_negation(&n, budget)?;
    let mut out = CheckOutcome::default();
    for w in &r.witnesses {
        if w.class == NegationClass::Continuous || w.class == NegationClass::Strict {
            out.violation(w.points.clone(), w.values[0], *w.values.last().unwrap());
        }
    }
    let verdict = if out.witnesses.is_empty() {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    Ok(report(
        TheoremId::ContinuityStrictnessIff,
        family,
        verdict,
        out,
        "falsification: the ordinal sum must fail continuity or strictness",
    ))
}

fn verify_frontier_sufficient(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    for (i, s) in family.summands().iter().enumerate() {
        if s.a() == 0.0 {
            let r = classify_negation(s.connective(), budget)?;
            if !r.holds(NegationClass::NonFilling) {
                return Ok(hypotheses_not_met(
                    TheoremId::FrontierSufficient,
                    family,
                    format!("summand {i} starts at 0 but is not non-filling"),
                ));
            }
        }
        if s.b() == 1.0 {
            let r = classify_negation(s.connective(), budget)?;
            if !r.holds(NegationClass::NonVanishing) {
                return Ok(hypotheses_not_met(
                    TheoremId::FrontierSufficient,
                    family,
                    format!("summand {i} ends at 1 but is not non-vanishing"),
                ));
            }
        }
    }
    let n = ordinal_sum_negation(family.clone())?;
    let r = classify_negation(&n, budget)?;
    let mut out = CheckOutcome::default();
    if !r.holds(NegationClass::Frontier) {
        for w in &r.witnesses {
            if w.class == NegationClass::NonVanishing || w.class == NegationClass::NonFilling {
                out.violation(w.points.clone(), w.values[0], w.values[0]);
            }
        }
    }
    let verdict = pass_fail(&out);
    Ok(report(TheoremId::FrontierSufficient, family, verdict, out, ""))
}

/// Boundary-uniqueness hypothesis of the frontier-necessity result:
/// `N_I(x) = 1 - a_i` only at `x = a_i` and `N_I(x) = 1 - b_i` only at
/// `x = b_i`. Returns the first violating grid point, if any.
fn boundary_uniqueness_violation(
    n: &ConnectiveExpr,
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<Option<Witness>> {
    let tol = budget.equality_tol;
    for x in unit_grid(budget.grid_points) {
        let v = n.raw1(x)?;
        for s in family.summands() {
            if x != s.a() && (v - (1.0 - s.a())).abs() <= tol {
                return Ok(Some(Witness {
                    point: vec![x],
                    expected: 1.0 - s.a(),
                    observed: v,
                }));
            }
            if x != s.b() && (v - (1.0 - s.b())).abs() <= tol {
                return Ok(Some(Witness {
                    point: vec![x],
                    expected: 1.0 - s.b(),
                    observed: v,
                }));
            }
        }
    }
    Ok(None)
}

fn verify_frontier_necessary(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    let n = ordinal_sum_negation(family.clone())?;
    if let Some(w) = boundary_uniqueness_violation(&n, family, budget)? {
        return Ok(hypotheses_not_met(
            TheoremId::FrontierNecessary,
            family,
            format!(
                "boundary value {} is attained away from its endpoint (x = {})",
                w.expected, w.point[0]
            ),
        ));
    }
    let mut out = CheckOutcome::default();
    for (i, s) in family.summands().iter().enumerate() {
        let r = classify_negation(s.connective(), budget)?;
        if !r.holds(NegationClass::Frontier) {
            let w = r
                .witnesses
                .iter()
                .find(|w| {
                    w.class == NegationClass::NonVanishing || w.class == NegationClass::NonFilling
                })
                .cloned();
            match w {
                Some(w) => out.violation(w.points, i as f64, w.values[0]),
                None => out.violation(vec![i as f64], 0.0, 1.0),
            }
        }
    }
    let verdict = pass_fail(&out);
    Ok(report(
        TheoremId::FrontierNecessary,
        family,
        verdict,
        out,
        "conclusion: every summand is frontier",
    ))
}

fn falsify_frontier_necessary(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    let mut broken = false;
    for s in family.summands() {
        let r = classify_negation(s.connective(), budget)?;
        if !r.holds(NegationClass::Frontier) {
            broken = true;
            break;
        }
    }
    if !broken {
        return Ok(hypotheses_not_met(
            TheoremId::FrontierNecessary,
            family,
            "every summand is frontier; nothing to falsify",
        ));
    }
    let n = ordinal_sum_negation(family.clone())?;
    let mut out = CheckOutcome::default();
    let verdict = match boundary_uniqueness_violation(&n, family, budget)? {
        Some(w) => {
            out.violation(w.point, w.expected, w.observed);
            Verdict::Pass
        }
        None => Verdict::Fail,
    };
    Ok(report(
        TheoremId::FrontierNecessary,
        family,
        verdict,
        out,
        "falsification: a boundary value must be attained away from its endpoint",
    ))
}

/// Strong-construction hypothesis: every summand strict, and for each
/// summand a partner on the mirrored interval carrying the inverse.
fn mirror_hypothesis_failure(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<Option<String>> {
    for (i, s) in family.summands().iter().enumerate() {
        let certs = s.connective().negation_certs();
        let strict = if certs.strict {
            true
        } else {
            classify_negation(s.connective(), budget)?.holds(NegationClass::Strict)
        };
        if !strict {
            return Ok(Some(format!("summand {i} is not strict")));
        }
    }
    let xs: Vec<f64> = unit_grid(budget.grid_points).collect();
    for (i, s) in family.summands().iter().enumerate() {
        let ma = 1.0 - s.b();
        let mb = 1.0 - s.a();
        let partner = family.summands().iter().find(|p| {
            (p.a() - ma).abs() <= INTERVAL_MATCH_TOL && (p.b() - mb).abs() <= INTERVAL_MATCH_TOL
        });
        let Some(partner) = partner else {
            return Ok(Some(format!(
                "summand {i} has no partner on the mirrored interval [{ma}, {mb}]"
            )));
        };
        let inverse = invert_strict_negation(s.connective(), budget)?;
        for &x in &xs {
            let want = inverse.raw1(x)?;
            let got = partner.connective().raw1(x)?;
            if (want - got).abs() > ORACLE_COMPARISON_TOL {
                return Ok(Some(format!(
                    "mirror partner of summand {i} is not its inverse (at x = {x}: {got} vs {want})"
                )));
            }
        }
    }
    Ok(None)
}

fn involution_outcome(
    n: &ConnectiveExpr,
    budget: &AnalysisBudget,
    tol: f64,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::default();
    for x in unit_grid(budget.grid_points) {
        let nn = n.raw1(n.raw1(x)?)?;
        out.observe(vec![x], x, nn, tol);
    }
    Ok(out)
}

fn verify_strong_sufficient(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    if let Some(reason) = mirror_hypothesis_failure(family, budget)? {
        return Ok(hypotheses_not_met(TheoremId::StrongSufficient, family, reason));
    }
    let n = ordinal_sum_negation(family.clone())?;
    let tol = if n.uses_bisection() {
        budget.equality_tol.max(ORACLE_COMPARISON_TOL)
    } else {
        budget.equality_tol
    };
    let out = involution_outcome(&n, budget, tol)?;
    let verdict = pass_fail(&out);
    Ok(report(
        TheoremId::StrongSufficient,
        family,
        verdict,
        out,
        format!("involution checked at tolerance {tol:e}"),
    ))
}

fn verify_strong_necessary(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    let n = ordinal_sum_negation(family.clone())?;
    let strong = involution_outcome(&n, budget, budget.equality_tol.max(ORACLE_COMPARISON_TOL))?;
    if !strong.passed() {
        return Ok(hypotheses_not_met(
            TheoremId::StrongNecessary,
            family,
            "ordinal sum is not strong on the grid",
        ));
    }
    let mut out = CheckOutcome::default();
    let verdict = match mirror_hypothesis_failure(family, budget)? {
        None => Verdict::Pass,
        Some(reason) => {
            out.violation(vec![], 0.0, 1.0);
            return Ok(report(
                TheoremId::StrongNecessary,
                family,
                Verdict::Fail,
                out,
                format!("strong ordinal sum without the mirror structure: {reason}"),
            ));
        }
    };
    Ok(report(
        TheoremId::StrongNecessary,
        family,
        verdict,
        out,
        "necessity checked instance-wise; the unconditional and side-conditioned layers of the \
         statement are not distinguished",
    ))
}

fn falsify_strong_necessary(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    if mirror_hypothesis_failure(family, budget)?.is_none() {
        return Ok(hypotheses_not_met(
            TheoremId::StrongNecessary,
            family,
            "family satisfies the mirror hypothesis; nothing to falsify",
        ));
    }
    let n = ordinal_sum_negation(family.clone())?;
    let mut best: Option<Witness> = None;
    let mut max_dev = 0.0_f64;
    for x in unit_grid(budget.grid_points) {
        let nn = n.raw1(n.raw1(x)?)?;
        let dev = (nn - x).abs();
        if dev > max_dev {
            max_dev = dev;
            best = Some(Witness {
                point: vec![x],
                expected: x,
                observed: nn,
            });
        }
    }
    let mut out = CheckOutcome {
        max_deviation: max_dev,
        witnesses: Vec::new(),
    };
    let verdict = if max_dev > STRONG_WITNESS_MARGIN {
        out.witnesses.extend(best);
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report(
        TheoremId::StrongNecessary,
        family,
        verdict,
        out,
        "falsification: involution must fail without the mirror structure",
    ))
}

fn verify_inverse_construction(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    let mirrored = match mirror_family(family) {
        Ok(m) => m,
        Err(Error::NotStrict) => {
            return Ok(hypotheses_not_met(
                TheoremId::InverseConstruction,
                family,
                "a summand is not strict, so the mirror family is undefined",
            ))
        }
        Err(e) => return Err(e),
    };
    let n = ordinal_sum_negation(family.clone())?;
    let m = ordinal_sum_negation(mirrored)?;
    let tol = if n.uses_bisection() || m.uses_bisection() {
        budget.equality_tol.max(ORACLE_COMPARISON_TOL)
    } else {
        budget.equality_tol
    };
    let mut out = CheckOutcome::default();
    for x in unit_grid(budget.grid_points) {
        let forward = m.raw1(n.raw1(x)?)?;
        out.observe(vec![x], x, forward, tol);
        let backward = n.raw1(m.raw1(x)?)?;
        out.observe(vec![x], x, backward, tol);
    }
    let verdict = pass_fail(&out);
    Ok(report(
        TheoremId::InverseConstruction,
        family,
        verdict,
        out,
        format!("both composition orders checked at tolerance {tol:e}"),
    ))
}

fn verify_closed_form_tnorm(
    family: &SummandFamily,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<VerifyReport> {
    let subs = family
        .summands()
        .iter()
        .map(|s| natneg_of_tnorm_summand(s.connective(), *oracle))
        .collect::<Result<Vec<_>>>()?;
    let closed = closed_form_natneg_tnorm_sum(family, subs)?;
    let sum = ordinal_sum_tnorm(family.clone())?;
    let oracle_neg = natural_negation_tnorm(&sum, *oracle)?;
    let tol = budget.equality_tol.max(ORACLE_COMPARISON_TOL);
    let mut out = CheckOutcome::default();
    for x in unit_grid(budget.grid_points) {
        let c = closed.raw1(x)?;
        let o = oracle_neg.raw1(x)?;
        out.observe(vec![x], o, c, tol);
    }
    let verdict = pass_fail(&out);
    Ok(report(
        TheoremId::NatnegTnormClosedForm,
        family,
        verdict,
        out,
        "closed form scales the a = 0 branch as b * N(x/b); the unscaled variant N(x/b) \
         disagrees with the sup oracle by the factor 1/b and is rejected",
    ))
}

fn verify_closed_form_tconorm(
    family: &SummandFamily,
    budget: &AnalysisBudget,
    oracle: &SupInfOracleConfig,
) -> Result<VerifyReport> {
    let subs = family
        .summands()
        .iter()
        .map(|s| natneg_of_tconorm_summand(s.connective(), *oracle))
        .collect::<Result<Vec<_>>>()?;
    let closed = closed_form_natneg_tconorm_sum(family, subs)?;
    let sum = ordinal_sum_tconorm(family.clone())?;
    let oracle_neg = natural_negation_tconorm(&sum, *oracle)?;
    let tol = budget.equality_tol.max(ORACLE_COMPARISON_TOL);
    let mut out = CheckOutcome::default();
    for x in unit_grid(budget.grid_points) {
        let c = closed.raw1(x)?;
        let o = oracle_neg.raw1(x)?;
        out.observe(vec![x], o, c, tol);
    }
    let verdict = pass_fail(&out);
    Ok(report(
        TheoremId::NatnegTconormClosedForm,
        family,
        verdict,
        out,
        "closed form (1-a) * N((x-a)/(1-a)) + a matches the inf oracle directly",
    ))
}

fn verify_commuting_diagram(
    family: &SummandFamily,
    budget: &AnalysisBudget,
) -> Result<VerifyReport> {
    let j_sum = left_ordinal_sum_implication(family.clone())?;
    let left_path = natural_negation_implication(&j_sum)?;
    let neg_summands = family
        .summands()
        .iter()
        .map(|s| {
            let nj = natural_negation_implication(s.connective())?;
            Summand::new(s.a(), s.b(), nj)
        })
        .collect::<Result<Vec<_>>>()?;
    let neg_family = SummandFamily::new(SumVariant::Negation, neg_summands)?;
    let right_path = ordinal_sum_negation(neg_family)?;
    let mut out = CheckOutcome::default();
    for x in unit_grid(budget.grid_points) {
        let l = left_path.raw1(x)?;
        let r = right_path.raw1(x)?;
        out.observe(vec![x], r, l, budget.equality_tol);
    }
    let verdict = pass_fail(&out);
    Ok(report(
        TheoremId::CommutingDiagram,
        family,
        verdict,
        out,
        "natural negation of the left ordinal sum vs ordinal sum of the natural negations",
    ))
}

// ---------------------------------------------------------------------------
// randomized family generation
// ---------------------------------------------------------------------------

/// Constraint flags for [`random_family`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyConstraints {
    /// Negation families only: generate the strong-construction shape (for
    /// each summand a mirrored partner carrying the inverse).
    pub mirrored: bool,
    /// Force every `b < 1`; selects the left variant for implications.
    pub b_lt_1: bool,
    /// Force every `a > 0`.
    pub a_gt_0: bool,
    /// Negations only: draw summands from the strict catalog entries.
    pub strict_only: bool,
}

/// Interval endpoints are drawn from this dyadic lattice so that mirror
/// arithmetic (`1 - b`) is exact in f64.
const LATTICE: u32 = 128;

fn lattice(i: u32) -> f64 {
    i as f64 / LATTICE as f64
}

fn sample_distinct_cuts(rng: &mut ChaCha8Rng, count: usize, lo: u32, hi: u32) -> Vec<u32> {
    let mut set = BTreeSet::new();
    while set.len() < count {
        set.insert(rng.gen_range(lo..=hi));
    }
    set.into_iter().collect()
}

/// Parameters for the power/root complements; capped so that strictness
/// stays resolvable on the default 1001-point grid.
fn sample_exponent(rng: &mut ChaCha8Rng) -> f64 {
    const CHOICES: [f64; 6] = [1.5, 2.0, 2.5, 3.0, 3.5, 4.0];
    CHOICES[rng.gen_range(0..CHOICES.len())]
}

/// Exponents for summands whose involutions must close to 1e-9: beyond
/// k = 3 the complements flatten so much near the endpoints that f64
/// roundtrips through `1 - x^k` lose the last digits.
fn sample_exponent_involution_safe(rng: &mut ChaCha8Rng) -> f64 {
    const CHOICES: [f64; 4] = [1.5, 2.0, 2.5, 3.0];
    CHOICES[rng.gen_range(0..CHOICES.len())]
}

fn random_negation(rng: &mut ChaCha8Rng, strict_only: bool) -> ConnectiveExpr {
    // strict families feed inverse-based constructions, so their exponents
    // stay in the involution-safe range
    let sample = if strict_only {
        sample_exponent_involution_safe
    } else {
        sample_exponent
    };
    let n = if strict_only { 3 } else { 5 };
    match rng.gen_range(0..n) {
        0 => make_connective(ConnectiveKind::Negation, "standard", &[]),
        1 => make_connective(ConnectiveKind::Negation, "power_complement", &[sample(rng)]),
        2 => make_connective(ConnectiveKind::Negation, "root_complement", &[sample(rng)]),
        3 => make_connective(ConnectiveKind::Negation, "least", &[]),
        _ => make_connective(ConnectiveKind::Negation, "greatest", &[]),
    }
    .expect("catalog entry")
}

fn random_strict_negation_involution_safe(rng: &mut ChaCha8Rng) -> ConnectiveExpr {
    match rng.gen_range(0..3) {
        0 => make_connective(ConnectiveKind::Negation, "standard", &[]),
        1 => make_connective(
            ConnectiveKind::Negation,
            "power_complement",
            &[sample_exponent_involution_safe(rng)],
        ),
        _ => make_connective(
            ConnectiveKind::Negation,
            "root_complement",
            &[sample_exponent_involution_safe(rng)],
        ),
    }
    .expect("catalog entry")
}

fn random_binary(rng: &mut ChaCha8Rng, kind: ConnectiveKind) -> ConnectiveExpr {
    let names: &[&str] = match kind {
        ConnectiveKind::TNorm => &["godel", "product", "lukasiewicz", "drastic"],
        ConnectiveKind::TConorm => &["godel", "probabilistic_sum", "lukasiewicz", "drastic"],
        ConnectiveKind::Implication => &["godel", "rescher", "kleene_dienes"],
        ConnectiveKind::Negation => unreachable!("negations are sampled separately"),
    };
    make_connective(kind, names[rng.gen_range(0..names.len())], &[]).expect("catalog entry")
}

/// Deterministic pseudo-random family: same seed and arguments, bit-identical
/// family. Implication families default to the rescher variant (with
/// `a > 0`) unless `b_lt_1` selects the left variant.
pub fn random_family(
    seed: u64,
    kind: ConnectiveKind,
    max_summands: usize,
    constraints: FamilyConstraints,
) -> Result<SummandFamily> {
    if max_summands == 0 {
        return Err(Error::UnsatisfiableConstraints(
            "max_summands must be at least 1".into(),
        ));
    }
    if constraints.mirrored && kind != ConnectiveKind::Negation {
        return Err(Error::UnsatisfiableConstraints(
            "mirrored families are a negation construction".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if constraints.mirrored {
        return mirrored_catalog_family(&mut rng, max_summands);
    }
    let variant = match kind {
        ConnectiveKind::Negation => SumVariant::Negation,
        ConnectiveKind::TNorm => SumVariant::TNorm,
        ConnectiveKind::TConorm => SumVariant::TConorm,
        ConnectiveKind::Implication => {
            if constraints.b_lt_1 {
                SumVariant::ImplicationLeft
            } else {
                SumVariant::ImplicationRescher
            }
        }
    };
    let a_gt_0 = constraints.a_gt_0 || variant == SumVariant::ImplicationRescher;
    let b_lt_1 = constraints.b_lt_1 || variant == SumVariant::ImplicationLeft;
    let count = rng.gen_range(1..=max_summands);
    let lo = if a_gt_0 { 1 } else { 0 };
    let hi = if b_lt_1 { LATTICE - 1 } else { LATTICE };
    let cuts = sample_distinct_cuts(&mut rng, 2 * count, lo, hi);
    let summands = cuts
        .chunks(2)
        .map(|pair| {
            let connective = match kind {
                ConnectiveKind::Negation => random_negation(&mut rng, constraints.strict_only),
                other => random_binary(&mut rng, other),
            };
            Summand::new(lattice(pair[0]), lattice(pair[1]), connective)
        })
        .collect::<Result<Vec<_>>>()?;
    SummandFamily::new(variant, summands)
}

fn mirrored_catalog_family(rng: &mut ChaCha8Rng, max_summands: usize) -> Result<SummandFamily> {
    let mut central = rng.gen_bool(0.5);
    let mut max_pairs = if central {
        (max_summands - 1) / 2
    } else {
        max_summands / 2
    };
    if max_pairs == 0 {
        central = true;
        max_pairs = 0;
    }
    let pairs = if max_pairs == 0 {
        0
    } else if central {
        rng.gen_range(0..=max_pairs)
    } else {
        rng.gen_range(1..=max_pairs)
    };
    let half = LATTICE / 2;
    let central_cut = if central {
        let lo = 2 * pairs as u32 + 1;
        if lo > half - 1 {
            return Err(Error::UnsatisfiableConstraints(format!(
                "no room for {pairs} mirrored pairs plus a central summand on the lattice"
            )));
        }
        Some(rng.gen_range(lo..=half - 1))
    } else {
        None
    };
    let pair_hi = central_cut.map(|c| c - 1).unwrap_or(half - 1);
    let cuts = sample_distinct_cuts(rng, 2 * pairs, 1, pair_hi);

    let mut summands = Vec::new();
    if let Some(c) = central_cut {
        let connective = if rng.gen_bool(0.5) {
            make_connective(ConnectiveKind::Negation, "standard", &[]).expect("catalog")
        } else {
            make_connective(
                ConnectiveKind::Negation,
                "root_complement",
                &[sample_exponent_involution_safe(rng)],
            )
            .expect("catalog")
        };
        summands.push(Summand::new(lattice(c), lattice(LATTICE - c), connective)?);
    }
    let budget = AnalysisBudget::default();
    for pair in cuts.chunks(2) {
        let (u, v) = (pair[0], pair[1]);
        let n = random_strict_negation_involution_safe(rng);
        let inv = invert_strict_negation(&n, &budget)?;
        summands.push(Summand::new(lattice(u), lattice(v), n)?);
        summands.push(Summand::new(
            lattice(LATTICE - v),
            lattice(LATTICE - u),
            inv,
        )?);
    }
    SummandFamily::new(SumVariant::Negation, summands)
}

/// Mirrored family whose summands are themselves small ordinal sums, so the
/// partner inverses have no closed form and evaluate by bisection.
pub fn random_mirrored_nested_family(seed: u64, max_summands: usize) -> Result<SummandFamily> {
    if max_summands < 2 {
        return Err(Error::UnsatisfiableConstraints(
            "nested mirrored families need at least two summands".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = rng.gen_range(1..=(max_summands / 2).min(2));
    let cuts = sample_distinct_cuts(&mut rng, 2 * pairs, 1, LATTICE / 2 - 1);
    let budget = AnalysisBudget::default();
    let mut summands = Vec::new();
    for pair in cuts.chunks(2) {
        // inner exponents stay at 2: flatter summands leave the bisected
        // inverse a preimage plateau wider than the 1e-6 target
        let inner_neg = match rng.gen_range(0..3) {
            0 => make_connective(ConnectiveKind::Negation, "standard", &[]),
            1 => make_connective(ConnectiveKind::Negation, "power_complement", &[2.0]),
            _ => make_connective(ConnectiveKind::Negation, "root_complement", &[2.0]),
        }
        .expect("catalog");
        let inner = SummandFamily::new(
            SumVariant::Negation,
            vec![Summand::new(0.25, 0.75, inner_neg)?],
        )?;
        let nested = ordinal_sum_negation(inner)?;
        let inv = invert_strict_negation(&nested, &budget)?;
        summands.push(Summand::new(lattice(pair[0]), lattice(pair[1]), nested)?);
        summands.push(Summand::new(
            lattice(LATTICE - pair[1]),
            lattice(LATTICE - pair[0]),
            inv,
        )?);
    }
    SummandFamily::new(SumVariant::Negation, summands)
}

/// Family that deliberately breaks the mirror hypothesis while satisfying
/// the side conditions (no summand equals the standard negation, all
/// interval endpoints pairwise distinct): every summand lives in the left
/// half of the unit interval, so the mirrored intervals are summand-free,
/// and summands are strict non-standard complements.
pub fn random_broken_mirror_family(seed: u64, max_summands: usize) -> Result<SummandFamily> {
    if max_summands == 0 {
        return Err(Error::UnsatisfiableConstraints(
            "max_summands must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=max_summands.min(3));
    let cuts = sample_distinct_cuts(&mut rng, 2 * count, 1, LATTICE / 2 - 1);
    let summands = cuts
        .chunks(2)
        .map(|pair| {
            let name = if rng.gen_bool(0.5) {
                "power_complement"
            } else {
                "root_complement"
            };
            let n = make_connective(ConnectiveKind::Negation, name, &[sample_exponent(&mut rng)])
                .expect("catalog");
            Summand::new(lattice(pair[0]), lattice(pair[1]), n)
        })
        .collect::<Result<Vec<_>>>()?;
    SummandFamily::new(SumVariant::Negation, summands)
}

/// Family containing one central summand with `b = 1 - a` and a continuous
/// (strict catalog) negation, plus up to two side summands.
pub fn random_equilibrium_family(seed: u64, max_summands: usize) -> Result<SummandFamily> {
    if max_summands == 0 {
        return Err(Error::UnsatisfiableConstraints(
            "max_summands must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = rng.gen_range(8..=LATTICE / 2 - 8);
    let mut summands = vec![Summand::new(
        lattice(c),
        lattice(LATTICE - c),
        random_negation(&mut rng, true),
    )?];
    if max_summands >= 2 && c >= 3 && rng.gen_bool(0.7) {
        let cuts = sample_distinct_cuts(&mut rng, 2, 0, c - 1);
        summands.push(Summand::new(
            lattice(cuts[0]),
            lattice(cuts[1]),
            random_negation(&mut rng, false),
        )?);
    }
    if max_summands >= 3 && rng.gen_bool(0.7) {
        let cuts = sample_distinct_cuts(&mut rng, 2, LATTICE - c + 1, LATTICE);
        summands.push(Summand::new(
            lattice(cuts[0]),
            lattice(cuts[1]),
            random_negation(&mut rng, false),
        )?);
    }
    SummandFamily::new(SumVariant::Negation, summands)
}

/// Family whose summands all sit on one side of the standard negation:
/// `{standard, least}` below, `{standard, power, root, greatest}` above.
pub fn random_dominated_family(
    seed: u64,
    max_summands: usize,
    above: bool,
) -> Result<SummandFamily> {
    if max_summands == 0 {
        return Err(Error::UnsatisfiableConstraints(
            "max_summands must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=max_summands);
    let cuts = sample_distinct_cuts(&mut rng, 2 * count, 0, LATTICE);
    let summands = cuts
        .chunks(2)
        .map(|pair| {
            let n = sample_one_sided_negation(&mut rng, above);
            Summand::new(lattice(pair[0]), lattice(pair[1]), n)
        })
        .collect::<Result<Vec<_>>>()?;
    SummandFamily::new(SumVariant::Negation, summands)
}

/// Like [`random_dominated_family`] but with exactly one summand swapped to
/// the other side, guaranteeing a dominance violation with a healthy margin.
pub fn random_dominance_violating_family(
    seed: u64,
    max_summands: usize,
    above: bool,
) -> Result<SummandFamily> {
    let family = random_dominated_family(seed, max_summands, above)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let violator_idx = rng.gen_range(0..family.len());
    let summands = family
        .summands()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let connective = if i == violator_idx {
                sample_violating_negation(&mut rng, above)
            } else {
                s.connective().clone()
            };
            Summand::new(s.a(), s.b(), connective)
        })
        .collect::<Result<Vec<_>>>()?;
    SummandFamily::new(SumVariant::Negation, summands)
}

/// Strict family with exactly one summand swapped to a crisp negation;
/// breaks continuity and strictness hypotheses while keeping the family
/// valid.
pub fn random_family_with_crisp_summand(seed: u64, max_summands: usize) -> Result<SummandFamily> {
    let family = random_family(
        seed,
        ConnectiveKind::Negation,
        max_summands,
        FamilyConstraints {
            strict_only: true,
            ..FamilyConstraints::default()
        },
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x517c_c1b7_2722_0a95);
    let crisp_idx = rng.gen_range(0..family.len());
    let summands = family
        .summands()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let connective = if i == crisp_idx {
                let name = if rng.gen_bool(0.5) { "least" } else { "greatest" };
                make_connective(ConnectiveKind::Negation, name, &[]).expect("catalog")
            } else {
                s.connective().clone()
            };
            Summand::new(s.a(), s.b(), connective)
        })
        .collect::<Result<Vec<_>>>()?;
    SummandFamily::new(SumVariant::Negation, summands)
}

fn sample_one_sided_negation(rng: &mut ChaCha8Rng, above: bool) -> ConnectiveExpr {
    if above {
        match rng.gen_range(0..4) {
            0 => make_connective(ConnectiveKind::Negation, "standard", &[]),
            1 => make_connective(
                ConnectiveKind::Negation,
                "power_complement",
                &[sample_exponent(rng)],
            ),
            2 => make_connective(
                ConnectiveKind::Negation,
                "root_complement",
                &[sample_exponent(rng)],
            ),
            _ => make_connective(ConnectiveKind::Negation, "greatest", &[]),
        }
    } else if rng.gen_bool(0.5) {
        make_connective(ConnectiveKind::Negation, "standard", &[])
    } else {
        make_connective(ConnectiveKind::Negation, "least", &[])
    }
    .expect("catalog")
}

fn sample_violating_negation(rng: &mut ChaCha8Rng, above: bool) -> ConnectiveExpr {
    if above {
        // something strictly below the standard negation somewhere
        make_connective(ConnectiveKind::Negation, "least", &[]).expect("catalog")
    } else {
        match rng.gen_range(0..3) {
            0 => make_connective(
                ConnectiveKind::Negation,
                "power_complement",
                &[sample_exponent(rng)],
            ),
            1 => make_connective(
                ConnectiveKind::Negation,
                "root_complement",
                &[sample_exponent(rng)],
            ),
            _ => make_connective(ConnectiveKind::Negation, "greatest", &[]),
        }
        .expect("catalog")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn neg(name: &str, params: &[f64]) -> ConnectiveExpr {
        make_connective(ConnectiveKind::Negation, name, params).unwrap()
    }
    fn neg_family(triples: Vec<(f64, f64, ConnectiveExpr)>) -> SummandFamily {
        SummandFamily::new(
            SumVariant::Negation,
            triples
                .into_iter()
                .map(|(a, b, c)| Summand::new(a, b, c).unwrap())
                .collect(),
        )
        .unwrap()
    }
    fn defaults() -> (AnalysisBudget, SupInfOracleConfig) {
        (AnalysisBudget::default(), SupInfOracleConfig::default())
    }

    #[test]
    fn strong_sufficient_example_passes_with_spot_value() {
        let (budget, oracle) = defaults();
        let p2 = neg("power_complement", &[2.0]);
        let inv = invert_strict_negation(&p2, &budget).unwrap();
        let family = neg_family(vec![(0.2, 0.5, p2), (0.5, 0.8, inv)]);
        let r = verify(TheoremId::StrongSufficient, &family, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        let n = ordinal_sum_negation(family).unwrap();
        let v = n.eval1(0.3).unwrap();
        assert!((v - 23.0 / 30.0).abs() < 1e-12);
        assert!((n.eval1(v).unwrap() - 0.3).abs() < 1e-9);
    }

    #[test]
    fn commuting_diagram_example() {
        let (budget, oracle) = defaults();
        let family = SummandFamily::new(
            SumVariant::ImplicationLeft,
            vec![Summand::new(
                0.2,
                0.5,
                make_connective(ConnectiveKind::Implication, "godel", &[]).unwrap(),
            )
            .unwrap()],
        )
        .unwrap();
        let r = verify(TheoremId::CommutingDiagram, &family, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert!(r.max_deviation <= 1e-9);
        let j = left_ordinal_sum_implication(family).unwrap();
        let njl = natural_negation_implication(&j).unwrap();
        assert_eq!(njl.eval1(0.35).unwrap(), 0.5);
    }

    #[test]
    fn negation_axioms_pass_for_any_valid_family() {
        let (budget, oracle) = defaults();
        let family = neg_family(vec![
            (0.1, 0.3, neg("least", &[])),
            (0.4, 0.9, neg("root_complement", &[3.0])),
        ]);
        let r = verify(TheoremId::NegationAxioms, &family, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
    }

    #[test]
    fn closed_form_tnorm_notes_flag_the_scaling() {
        let (budget, oracle) = defaults();
        let family = SummandFamily::new(
            SumVariant::TNorm,
            vec![Summand::new(
                0.0,
                0.5,
                make_connective(ConnectiveKind::TNorm, "lukasiewicz", &[]).unwrap(),
            )
            .unwrap()],
        )
        .unwrap();
        let r = verify(TheoremId::NatnegTnormClosedForm, &family, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert!(r.notes.contains("unscaled"));
    }

    #[test]
    fn falsify_strong_necessary_finds_witness() {
        let (budget, oracle) = defaults();
        let family = neg_family(vec![(0.2, 0.5, neg("power_complement", &[2.0]))]);
        let r = falsify(TheoremId::StrongNecessary, &family, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert!(!r.witnesses.is_empty());
        assert!(r.max_deviation > STRONG_WITNESS_MARGIN);
    }

    #[test]
    fn falsify_guards_against_satisfied_hypotheses() {
        let (budget, oracle) = defaults();
        // all summands below the standard negation: nothing to falsify
        let family = neg_family(vec![(0.2, 0.8, neg("least", &[]))]);
        let r = falsify(TheoremId::LeqStandardIff, &family, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesesNotMet, "{r}");
    }

    #[test]
    fn falsify_frontier_necessary_with_crisp_summand() {
        let (budget, oracle) = defaults();
        let family = neg_family(vec![(0.2, 0.5, neg("least", &[]))]);
        let r = falsify(TheoremId::FrontierNecessary, &family, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn equilibrium_example_family() {
        let (budget, oracle) = defaults();
        let family = neg_family(vec![(0.2, 0.8, neg("standard", &[]))]);
        let r = verify(TheoremId::Equilibrium, &family, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        let n = ordinal_sum_negation(family).unwrap();
        assert_eq!(n.eval1(0.5).unwrap(), 0.5);
    }

    #[test]
    fn equilibrium_hypotheses_guard() {
        let (budget, oracle) = defaults();
        let family = neg_family(vec![(0.2, 0.5, neg("standard", &[]))]);
        let r = verify(TheoremId::Equilibrium, &family, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesesNotMet);
    }

    #[test]
    fn continuity_strictness_verify_and_falsify() {
        let (budget, oracle) = defaults();
        let strict = neg_family(vec![
            (0.1, 0.3, neg("root_complement", &[2.0])),
            (0.5, 0.9, neg("power_complement", &[2.5])),
        ]);
        let r = verify(TheoremId::ContinuityStrictnessIff, &strict, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");

        let crisp = neg_family(vec![(0.2, 0.5, neg("least", &[]))]);
        let guard = verify(TheoremId::ContinuityStrictnessIff, &crisp, &budget, &oracle).unwrap();
        assert_eq!(guard.verdict, Verdict::HypothesesNotMet);
        let f = falsify(TheoremId::ContinuityStrictnessIff, &crisp, &budget, &oracle).unwrap();
        assert_eq!(f.verdict, Verdict::Pass, "{f}");
        assert!(!f.witnesses.is_empty());
    }

    #[test]
    fn frontier_theorems_on_hand_families() {
        let (budget, oracle) = defaults();
        // strict summands at both ends: hypotheses of the sufficiency
        // result hold and the sum is frontier
        let f = neg_family(vec![
            (0.0, 0.4, neg("power_complement", &[2.0])),
            (0.6, 1.0, neg("root_complement", &[2.0])),
        ]);
        let r = verify(TheoremId::FrontierSufficient, &f, &budget, &oracle).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");

        // a crisp summand starting at 0 is filling, so the hypothesis gate
        // must fire
        let crisp_low = neg_family(vec![(0.0, 0.4, neg("greatest", &[]))]);
        let g = verify(TheoremId::FrontierSufficient, &crisp_low, &budget, &oracle).unwrap();
        assert_eq!(g.verdict, Verdict::HypothesesNotMet, "{g}");

        // boundary uniqueness holds for a lone standard summand, and the
        // summand is frontier
        let std_fam = neg_family(vec![(0.2, 0.5, neg("standard", &[]))]);
        let n = verify(TheoremId::FrontierNecessary, &std_fam, &budget, &oracle).unwrap();
        assert_eq!(n.verdict, Verdict::Pass, "{n}");

        // a crisp summand produces a plateau at 1 - b, violating boundary
        // uniqueness: the verify direction gates, the falsify direction
        // finds the witness
        let crisp = neg_family(vec![(0.2, 0.5, neg("least", &[]))]);
        let gate = verify(TheoremId::FrontierNecessary, &crisp, &budget, &oracle).unwrap();
        assert_eq!(gate.verdict, Verdict::HypothesesNotMet);
    }

    #[test]
    fn crisp_summand_generator_breaks_strictness() {
        let f = random_family_with_crisp_summand(9, 4).unwrap();
        let (budget, _) = defaults();
        let broken = f
            .summands()
            .iter()
            .any(|s| !summand_continuous_strict(s.connective(), &budget).unwrap());
        assert!(broken);
    }

    #[test]
    fn random_family_is_deterministic() {
        let a = random_family(1, ConnectiveKind::Negation, 3, FamilyConstraints::default())
            .unwrap();
        let b = random_family(1, ConnectiveKind::Negation, 3, FamilyConstraints::default())
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_family_respects_constraints() {
        let f = random_family(
            7,
            ConnectiveKind::Negation,
            2,
            FamilyConstraints {
                mirrored: true,
                strict_only: true,
                ..FamilyConstraints::default()
            },
        )
        .unwrap();
        let (budget, _) = defaults();
        assert!(mirror_hypothesis_failure(&f, &budget).unwrap().is_none());

        let g = random_family(
            3,
            ConnectiveKind::Implication,
            2,
            FamilyConstraints {
                b_lt_1: true,
                ..FamilyConstraints::default()
            },
        )
        .unwrap();
        assert_eq!(g.variant(), SumVariant::ImplicationLeft);
        assert!(g.summands().iter().all(|s| s.b() < 1.0));
    }

    #[test]
    fn random_family_rejects_bad_arguments() {
        assert!(random_family(
            1,
            ConnectiveKind::TNorm,
            2,
            FamilyConstraints {
                mirrored: true,
                ..FamilyConstraints::default()
            }
        )
        .is_err());
        assert!(
            random_family(1, ConnectiveKind::Negation, 0, FamilyConstraints::default()).is_err()
        );
    }

    #[test]
    fn theorem_id_roundtrip() {
        for t in TheoremId::all() {
            assert_eq!(TheoremId::parse(t.id()).unwrap(), t);
        }
        assert!(TheoremId::parse("nope").is_err());
    }

    #[test]
    fn falsify_rejects_sufficiency_only_theorems() {
        let (budget, oracle) = defaults();
        let family = neg_family(vec![(0.2, 0.5, neg("standard", &[]))]);
        assert!(matches!(
            falsify(TheoremId::NegationAxioms, &family, &budget, &oracle),
            Err(Error::NoFalsificationDirection(_))
        ));
    }

    #[test]
    fn verify_checks_family_kind() {
        let (budget, oracle) = defaults();
        let family = neg_family(vec![(0.2, 0.5, neg("standard", &[]))]);
        assert!(matches!(
            verify(TheoremId::NatnegTnormClosedForm, &family, &budget, &oracle),
            Err(Error::TheoremFamilyMismatch { .. })
        ));
    }
}
