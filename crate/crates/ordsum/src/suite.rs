//! The randomized acceptance battery: seeded family generation, one check
//! per (criterion, family), and deterministic CSV export.

use crate::analysis::AnalysisBudget;
use crate::connective::ConnectiveKind;
use crate::error::Result;
use crate::natural_negation::SupInfOracleConfig;
use crate::ordinal_sum::{
    left_ordinal_sum_implication, ordinal_sum_implication_rescher, ordinal_sum_tconorm,
    ordinal_sum_tnorm,
};
use crate::verification::{
    check_implication_axioms, check_tconorm_axioms, check_tnorm_axioms, falsify, random_broken_mirror_family,
    random_dominance_violating_family, random_dominated_family, random_equilibrium_family,
    random_family, random_family_with_crisp_summand, random_mirrored_nested_family, verify,
    CheckOutcome, FamilyConstraints, TheoremId, Verdict,
};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub budget: AnalysisBudget,
    pub oracle: SupInfOracleConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            budget: AnalysisBudget::default(),
            oracle: SupInfOracleConfig::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteRow {
    pub check: String,
    pub seed: u64,
    pub verdict: Verdict,
    pub max_deviation: f64,
    pub witness_count: usize,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn failures(&self) -> usize {
        self.rows.len() - self.rows.iter().filter(|r| r.verdict == Verdict::Pass).count()
    }

    /// CSV with a fixed header and 17-significant-digit numbers; identical
    /// configs produce byte-identical output.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theorem,seed,verdict,max_deviation,witness_count\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.check,
                r.seed,
                r.verdict,
                csv_num(r.max_deviation),
                r.witness_count
            );
        }
        out
    }

    /// One line per check label with pass counts.
    pub fn summary(&self) -> String {
        let mut counts: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for r in &self.rows {
            let entry = counts.entry(r.check.as_str()).or_insert((0, 0));
            entry.1 += 1;
            if r.verdict == Verdict::Pass {
                entry.0 += 1;
            }
        }
        let mut out = String::new();
        for (check, (pass, total)) in counts {
            let _ = writeln!(out, "{check}: {pass}/{total} passed");
        }
        let _ = writeln!(
            out,
            "total: {}/{} passed",
            self.rows.len() - self.failures(),
            self.rows.len()
        );
        out
    }
}

/// 17 significant digits, locale-independent.
pub fn csv_num(v: f64) -> String {
    format!("{v:.16e}")
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn subseed(base: u64, tag: u64, i: u64) -> u64 {
    splitmix64(base ^ splitmix64(tag).wrapping_add(i))
}

fn theorem_row(
    cfg: &SuiteConfig,
    theorem: TheoremId,
    seed: u64,
    family: &crate::ordinal_sum::SummandFamily,
    falsification: bool,
) -> Result<SuiteRow> {
    let report = if falsification {
        falsify(theorem, family, &cfg.budget, &cfg.oracle)?
    } else {
        verify(theorem, family, &cfg.budget, &cfg.oracle)?
    };
    let check = if falsification {
        format!("{}_falsify", theorem.id())
    } else {
        theorem.id().to_string()
    };
    Ok(SuiteRow {
        check,
        seed,
        verdict: report.verdict,
        max_deviation: report.max_deviation,
        witness_count: report.witnesses.len(),
    })
}

fn outcome_row(check: &str, seed: u64, outcome: CheckOutcome) -> SuiteRow {
    SuiteRow {
        check: check.to_string(),
        seed,
        verdict: if outcome.passed() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        max_deviation: outcome.max_deviation,
        witness_count: outcome.witnesses.len(),
    }
}

/// Criterion 1: axiom suites for all five ordinal-sum constructions on
/// seeded random families.
pub fn criterion_axiom_suites(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    for i in 0..200 {
        let seed = subseed(cfg.seed, 1, i);
        let family = random_family(
            seed,
            ConnectiveKind::Negation,
            5,
            FamilyConstraints::default(),
        )?;
        rows.push(theorem_row(cfg, TheoremId::NegationAxioms, seed, &family, false)?);
    }
    for i in 0..100 {
        let seed = subseed(cfg.seed, 2, i);
        let family = random_family(seed, ConnectiveKind::TNorm, 5, FamilyConstraints::default())?;
        let t = ordinal_sum_tnorm(family)?;
        rows.push(outcome_row(
            "tnorm_axioms",
            seed,
            check_tnorm_axioms(&t, &cfg.budget)?,
        ));
    }
    for i in 0..100 {
        let seed = subseed(cfg.seed, 3, i);
        let family =
            random_family(seed, ConnectiveKind::TConorm, 5, FamilyConstraints::default())?;
        let s = ordinal_sum_tconorm(family)?;
        rows.push(outcome_row(
            "tconorm_axioms",
            seed,
            check_tconorm_axioms(&s, &cfg.budget)?,
        ));
    }
    for i in 0..100 {
        let seed = subseed(cfg.seed, 4, i);
        let family = random_family(
            seed,
            ConnectiveKind::Implication,
            5,
            FamilyConstraints {
                a_gt_0: true,
                ..FamilyConstraints::default()
            },
        )?;
        let j = ordinal_sum_implication_rescher(family)?;
        rows.push(outcome_row(
            "implication_rescher_axioms",
            seed,
            check_implication_axioms(&j, &cfg.budget)?,
        ));
    }
    for i in 0..100 {
        let seed = subseed(cfg.seed, 5, i);
        let family = random_family(
            seed,
            ConnectiveKind::Implication,
            5,
            FamilyConstraints {
                b_lt_1: true,
                ..FamilyConstraints::default()
            },
        )?;
        let j = left_ordinal_sum_implication(family)?;
        rows.push(outcome_row(
            "implication_left_axioms",
            seed,
            check_implication_axioms(&j, &cfg.budget)?,
        ));
    }
    Ok(rows)
}

/// Criterion 2: range confinement for the same 200 negation families.
pub fn criterion_range_confinement(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    for i in 0..200 {
        let seed = subseed(cfg.seed, 1, i);
        let family = random_family(
            seed,
            ConnectiveKind::Negation,
            5,
            FamilyConstraints::default(),
        )?;
        rows.push(theorem_row(cfg, TheoremId::RangeConfinement, seed, &family, false)?);
    }
    Ok(rows)
}

/// Criterion 3: strong construction for 25 mirrored families with analytic
/// inverses and 25 with bisected (nested ordinal-sum) inverses.
pub fn criterion_strong_construction(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    for i in 0..25 {
        let seed = subseed(cfg.seed, 6, i);
        let family = random_family(
            seed,
            ConnectiveKind::Negation,
            5,
            FamilyConstraints {
                mirrored: true,
                strict_only: true,
                ..FamilyConstraints::default()
            },
        )?;
        rows.push(theorem_row(cfg, TheoremId::StrongSufficient, seed, &family, false)?);
    }
    for i in 0..25 {
        let seed = subseed(cfg.seed, 7, i);
        let family = random_mirrored_nested_family(seed, 4)?;
        rows.push(theorem_row(cfg, TheoremId::StrongSufficient, seed, &family, false)?);
    }
    Ok(rows)
}

/// Criterion 4: strong necessity by falsification on 50 families violating
/// the mirror hypothesis.
pub fn criterion_strong_necessity(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    for i in 0..50 {
        let seed = subseed(cfg.seed, 8, i);
        let family = random_broken_mirror_family(seed, 3)?;
        rows.push(theorem_row(cfg, TheoremId::StrongNecessary, seed, &family, true)?);
    }
    Ok(rows)
}

/// Criterion 5: inverse construction, both composition orders, 50 families.
pub fn criterion_inverse_construction(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    for i in 0..25 {
        let seed = subseed(cfg.seed, 9, i);
        let family = random_family(
            seed,
            ConnectiveKind::Negation,
            4,
            FamilyConstraints {
                strict_only: true,
                ..FamilyConstraints::default()
            },
        )?;
        rows.push(theorem_row(cfg, TheoremId::InverseConstruction, seed, &family, false)?);
    }
    for i in 0..25 {
        let seed = subseed(cfg.seed, 10, i);
        let family = random_mirrored_nested_family(seed, 4)?;
        rows.push(theorem_row(cfg, TheoremId::InverseConstruction, seed, &family, false)?);
    }
    Ok(rows)
}

/// Criterion 6: equilibrium proposition on 30 families with a central
/// summand.
pub fn criterion_equilibrium(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    for i in 0..30 {
        let seed = subseed(cfg.seed, 11, i);
        let family = random_equilibrium_family(seed, 3)?;
        rows.push(theorem_row(cfg, TheoremId::Equilibrium, seed, &family, false)?);
    }
    Ok(rows)
}

/// Criterion 7: dominance iff, both sides, both directions.
pub fn criterion_dominance(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    for (tag, above, theorem) in [
        (12u64, false, TheoremId::LeqStandardIff),
        (13, true, TheoremId::GeqStandardIff),
    ] {
        for i in 0..50 {
            let seed = subseed(cfg.seed, tag, i);
            let family = random_dominated_family(seed, 4, above)?;
            rows.push(theorem_row(cfg, theorem, seed, &family, false)?);
        }
        for i in 0..50 {
            let seed = subseed(cfg.seed, tag + 2, i);
            let family = random_dominance_violating_family(seed, 4, above)?;
            rows.push(theorem_row(cfg, theorem, seed, &family, true)?);
        }
    }
    Ok(rows)
}

/// Criterion 8: closed-form natural negations against the sup/inf oracles,
/// 100 t-norm and 100 t-conorm families.
pub fn criterion_closed_forms(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    for i in 0..100 {
        let seed = subseed(cfg.seed, 16, i);
        let family = random_family(seed, ConnectiveKind::TNorm, 4, FamilyConstraints::default())?;
        rows.push(theorem_row(cfg, TheoremId::NatnegTnormClosedForm, seed, &family, false)?);
    }
    for i in 0..100 {
        let seed = subseed(cfg.seed, 17, i);
        let family =
            random_family(seed, ConnectiveKind::TConorm, 4, FamilyConstraints::default())?;
        rows.push(theorem_row(cfg, TheoremId::NatnegTconormClosedForm, seed, &family, false)?);
    }
    Ok(rows)
}

/// Criterion 9: the commuting diagram for 50 left implication families.
pub fn criterion_commuting(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    for i in 0..50 {
        let seed = subseed(cfg.seed, 18, i);
        let family = random_family(
            seed,
            ConnectiveKind::Implication,
            4,
            FamilyConstraints {
                b_lt_1: true,
                ..FamilyConstraints::default()
            },
        )?;
        rows.push(theorem_row(cfg, TheoremId::CommutingDiagram, seed, &family, false)?);
    }
    Ok(rows)
}

/// Coverage rows for the continuity/strictness and frontier results, which
/// have no dedicated acceptance criterion but are part of the battery.
pub fn theorem_coverage_rows(cfg: &SuiteConfig) -> Result<Vec<SuiteRow>> {
    let strict = FamilyConstraints {
        strict_only: true,
        ..FamilyConstraints::default()
    };
    let mut rows = Vec::new();
    for i in 0..25 {
        let seed = subseed(cfg.seed, 19, i);
        let family = random_family(seed, ConnectiveKind::Negation, 4, strict)?;
        rows.push(theorem_row(cfg, TheoremId::ContinuityStrictnessIff, seed, &family, false)?);
    }
    for i in 0..25 {
        let seed = subseed(cfg.seed, 20, i);
        let family = random_family_with_crisp_summand(seed, 4)?;
        rows.push(theorem_row(cfg, TheoremId::ContinuityStrictnessIff, seed, &family, true)?);
    }
    for i in 0..25 {
        let seed = subseed(cfg.seed, 21, i);
        let family = random_family(seed, ConnectiveKind::Negation, 4, strict)?;
        rows.push(theorem_row(cfg, TheoremId::FrontierSufficient, seed, &family, false)?);
    }
    for i in 0..25 {
        let seed = subseed(cfg.seed, 22, i);
        let family = random_family_with_crisp_summand(seed, 4)?;
        rows.push(theorem_row(cfg, TheoremId::FrontierNecessary, seed, &family, true)?);
    }
    Ok(rows)
}

/// Runs the full battery. Criterion 10 (determinism) holds by construction:
/// the battery is a pure function of the config, so rerunning it with the
/// same seed yields a byte-identical CSV.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    rows.extend(criterion_axiom_suites(cfg)?);
    rows.extend(criterion_range_confinement(cfg)?);
    rows.extend(criterion_strong_construction(cfg)?);
    rows.extend(criterion_strong_necessity(cfg)?);
    rows.extend(criterion_inverse_construction(cfg)?);
    rows.extend(criterion_equilibrium(cfg)?);
    rows.extend(criterion_dominance(cfg)?);
    rows.extend(criterion_closed_forms(cfg)?);
    rows.extend(criterion_commuting(cfg)?);
    rows.extend(theorem_coverage_rows(cfg)?);
    Ok(SuiteReport { rows })
}
