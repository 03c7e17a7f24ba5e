//! Natural negations: the negation induced by a t-norm (sup of its zero
//! set), a t-conorm (inf of its one set) or an implication (`J(x, 0)`).
//!
//! For t-norms and t-conorms the boundary is found by bisection. Membership
//! tests are exact by default (`T(x, y) == 0.0`): the catalog connectives
//! hit exact zeros and ones in double precision, and a tolerance-based test
//! would corrupt the sup boundary of strict t-norms such as the product.

use crate::connective::{
    BaseConnective, ConnectiveExpr, ConnectiveKind, NegationBase, TConormBase, TNormBase,
};
use crate::error::{Error, Result};
use crate::ordinal_sum::SummandFamily;

/// Bisection parameters for the sup/inf oracles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupInfOracleConfig {
    /// Width at which bisection stops; the result is within this of the
    /// true boundary.
    pub tolerance: f64,
    /// Hard cap on bisection steps; must allow the tolerance to be reached
    /// from a unit-width bracket.
    pub max_bisection_steps: u32,
    /// Slack for the zero / one membership tests. `0.0` means exact.
    pub zero_test_epsilon: f64,
}

impl SupInfOracleConfig {
    pub fn new(tolerance: f64, max_bisection_steps: u32, zero_test_epsilon: f64) -> Result<Self> {
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(Error::BadOracleConfig(format!(
                "tolerance must be a positive real, got {tolerance}"
            )));
        }
        let needed = (1.0 / tolerance).log2().ceil() as u32;
        if max_bisection_steps < needed {
            return Err(Error::BadOracleConfig(format!(
                "{max_bisection_steps} bisection steps cannot reach tolerance {tolerance} (need {needed})"
            )));
        }
        if !(zero_test_epsilon.is_finite() && zero_test_epsilon >= 0.0) {
            return Err(Error::BadOracleConfig(format!(
                "zero test epsilon must be a non-negative real, got {zero_test_epsilon}"
            )));
        }
        Ok(SupInfOracleConfig {
            tolerance,
            max_bisection_steps,
            zero_test_epsilon,
        })
    }
}

impl Default for SupInfOracleConfig {
    fn default() -> Self {
        SupInfOracleConfig {
            tolerance: 1e-8,
            max_bisection_steps: 60,
            zero_test_epsilon: 0.0,
        }
    }
}

/// Natural negation of a t-norm: `N_T(x) = sup{y : T(x, y) = 0}`.
pub fn natural_negation_tnorm(
    t: &ConnectiveExpr,
    cfg: SupInfOracleConfig,
) -> Result<ConnectiveExpr> {
    expect_kind(t, ConnectiveKind::TNorm)?;
    Ok(ConnectiveExpr::NaturalNegation {
        inner: Box::new(t.clone()),
        oracle: cfg,
    })
}

/// Natural negation of a t-conorm: `N_S(x) = inf{y : S(x, y) = 1}`.
pub fn natural_negation_tconorm(
    s: &ConnectiveExpr,
    cfg: SupInfOracleConfig,
) -> Result<ConnectiveExpr> {
    expect_kind(s, ConnectiveKind::TConorm)?;
    Ok(ConnectiveExpr::NaturalNegation {
        inner: Box::new(s.clone()),
        oracle: cfg,
    })
}

/// Natural negation of an implication: `N_J(x) = J(x, 0)`, evaluated
/// exactly with no oracle.
pub fn natural_negation_implication(j: &ConnectiveExpr) -> Result<ConnectiveExpr> {
    expect_kind(j, ConnectiveKind::Implication)?;
    Ok(ConnectiveExpr::NaturalNegation {
        inner: Box::new(j.clone()),
        oracle: SupInfOracleConfig::default(),
    })
}

/// Closed-form natural negation of an ordinal-sum t-norm. `sub_natnegs[i]`
/// must evaluate `N_{T_i}` for the i-th summand (analytic where known,
/// oracle-backed otherwise; see [`natneg_of_tnorm_summand`]).
///
/// On a summand `]0, b]` the value is `b * N_{T_i}(x / b)`. The scale factor
/// `b` is required for agreement with the sup oracle: substituting `y = b z`
/// in `sup{y : b T_i(x/b, y/b) = 0}` yields `b * sup{z : T_i(x/b, z) = 0}`,
/// and the unscaled variant overshoots by a factor of `1/b` (for the
/// lukasiewicz summand on `]0, 0.5]` at `x = 0.2` the sup is `0.3`, not
/// `0.6`). Verification cross-checks this against the oracle.
pub fn closed_form_natneg_tnorm_sum(
    family: &SummandFamily,
    sub_natnegs: Vec<ConnectiveExpr>,
) -> Result<ConnectiveExpr> {
    check_closed_form_inputs(family, &sub_natnegs, ConnectiveKind::TNorm)?;
    Ok(ConnectiveExpr::ClosedFormNatNegTNorm {
        family: family.clone(),
        sub_negations: sub_natnegs,
    })
}

/// Closed-form natural negation of an ordinal-sum t-conorm: `0` at `x = 1`,
/// `(1-a_i) * N_{S_i}((x-a_i)/(1-a_i)) + a_i` on a summand `[a_i, 1[`, and
/// `1` everywhere else.
pub fn closed_form_natneg_tconorm_sum(
    family: &SummandFamily,
    sub_natnegs: Vec<ConnectiveExpr>,
) -> Result<ConnectiveExpr> {
    check_closed_form_inputs(family, &sub_natnegs, ConnectiveKind::TConorm)?;
    Ok(ConnectiveExpr::ClosedFormNatNegTConorm {
        family: family.clone(),
        sub_negations: sub_natnegs,
    })
}

/// Natural negation of one t-norm summand: the known analytic form for
/// catalog t-norms, otherwise the bisection oracle.
pub fn natneg_of_tnorm_summand(t: &ConnectiveExpr, cfg: SupInfOracleConfig) -> Result<ConnectiveExpr> {
    expect_kind(t, ConnectiveKind::TNorm)?;
    Ok(match analytic_natneg_tnorm(t) {
        Some(n) => n,
        None => natural_negation_tnorm(t, cfg)?,
    })
}

/// Natural negation of one t-conorm summand, analytic where known.
pub fn natneg_of_tconorm_summand(
    s: &ConnectiveExpr,
    cfg: SupInfOracleConfig,
) -> Result<ConnectiveExpr> {
    expect_kind(s, ConnectiveKind::TConorm)?;
    Ok(match analytic_natneg_tconorm(s) {
        Some(n) => n,
        None => natural_negation_tconorm(s, cfg)?,
    })
}

/// Known analytic natural negations of the catalog t-norms.
pub fn analytic_natneg_tnorm(t: &ConnectiveExpr) -> Option<ConnectiveExpr> {
    let base = match t {
        ConnectiveExpr::Base(BaseConnective::TNorm(b)) => b,
        _ => return None,
    };
    let n = match base {
        TNormBase::Godel | TNormBase::Product => NegationBase::Least,
        TNormBase::Lukasiewicz => NegationBase::Standard,
        TNormBase::Drastic => NegationBase::Greatest,
    };
    Some(ConnectiveExpr::Base(BaseConnective::Negation(n)))
}

/// Known analytic natural negations of the catalog t-conorms.
pub fn analytic_natneg_tconorm(s: &ConnectiveExpr) -> Option<ConnectiveExpr> {
    let base = match s {
        ConnectiveExpr::Base(BaseConnective::TConorm(b)) => b,
        _ => return None,
    };
    let n = match base {
        TConormBase::Godel | TConormBase::ProbabilisticSum => NegationBase::Greatest,
        TConormBase::Lukasiewicz => NegationBase::Standard,
        TConormBase::Drastic => NegationBase::Least,
    };
    Some(ConnectiveExpr::Base(BaseConnective::Negation(n)))
}

pub(crate) fn eval_natural_negation(
    inner: &ConnectiveExpr,
    cfg: &SupInfOracleConfig,
    x: f64,
) -> Result<f64> {
    match inner.kind() {
        ConnectiveKind::TNorm => sup_zero_set(inner, cfg, x),
        ConnectiveKind::TConorm => inf_one_set(inner, cfg, x),
        ConnectiveKind::Implication => inner.raw2(x, 0.0),
        ConnectiveKind::Negation => Err(Error::KindMismatch {
            expected: "tnorm, tconorm or implication".into(),
            found: "negation".into(),
        }),
    }
}

/// Boundary of `{y : T(x, y) = 0}`. The set is a prefix interval `[0, y*]`
/// by monotonicity; bisection keeps `lo` inside the set and returns it, so
/// a zero set of `{0}` yields exactly `0` and a full column yields exactly
/// `1`. Eight probe points guard against non-monotone operands.
fn sup_zero_set(t: &ConnectiveExpr, cfg: &SupInfOracleConfig, x: f64) -> Result<f64> {
    let is_zero = |v: f64| v.abs() <= cfg.zero_test_epsilon;
    if is_zero(t.raw2(x, 1.0)?) {
        return Ok(1.0);
    }
    if !is_zero(t.raw2(x, 0.0)?) {
        // empty zero set; sup(emptyset) = 0 over the unit lattice
        return Ok(0.0);
    }
    let mut seen_positive = false;
    for i in 1..=8 {
        let y = i as f64 / 9.0;
        if is_zero(t.raw2(x, y)?) {
            if seen_positive {
                return Err(Error::OracleStructure { x });
            }
        } else {
            seen_positive = true;
        }
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..cfg.max_bisection_steps {
        if hi - lo <= cfg.tolerance {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if is_zero(t.raw2(x, mid)?) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Boundary of `{y : S(x, y) = 1}`, a suffix interval `[y*, 1]`. Bisection
/// keeps `hi` inside the set and returns it; an empty set yields `1`
/// (inf of the empty set over the unit lattice).
fn inf_one_set(s: &ConnectiveExpr, cfg: &SupInfOracleConfig, x: f64) -> Result<f64> {
    let is_one = |v: f64| 1.0 - v <= cfg.zero_test_epsilon;
    if is_one(s.raw2(x, 0.0)?) {
        return Ok(0.0);
    }
    if !is_one(s.raw2(x, 1.0)?) {
        return Ok(1.0);
    }
    let mut seen_one = false;
    for i in 1..=8 {
        let y = i as f64 / 9.0;
        if is_one(s.raw2(x, y)?) {
            seen_one = true;
        } else if seen_one {
            return Err(Error::OracleStructure { x });
        }
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..cfg.max_bisection_steps {
        if hi - lo <= cfg.tolerance {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if is_one(s.raw2(x, mid)?) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

pub(crate) fn eval_closed_form_tnorm(
    family: &SummandFamily,
    sub: &[ConnectiveExpr],
    x: f64,
) -> Result<f64> {
    if x == 0.0 {
        return Ok(1.0);
    }
    if let Some((i, s)) = family.locate_indexed(x) {
        if s.a() == 0.0 {
            let v = sub[i].raw1(x / s.b())?;
            return Ok((s.b() * v).clamp(0.0, s.b()));
        }
    }
    Ok(0.0)
}

pub(crate) fn eval_closed_form_tconorm(
    family: &SummandFamily,
    sub: &[ConnectiveExpr],
    x: f64,
) -> Result<f64> {
    if x == 1.0 {
        return Ok(0.0);
    }
    if let Some((i, s)) = family.locate_indexed(x) {
        if s.b() == 1.0 {
            let w = 1.0 - s.a();
            let v = sub[i].raw1((x - s.a()) / w)?;
            return Ok((w * v + s.a()).clamp(s.a(), 1.0));
        }
    }
    Ok(1.0)
}

fn expect_kind(expr: &ConnectiveExpr, kind: ConnectiveKind) -> Result<()> {
    if expr.kind() == kind {
        Ok(())
    } else {
        Err(Error::KindMismatch {
            expected: kind.name().into(),
            found: expr.kind().name().into(),
        })
    }
}

fn check_closed_form_inputs(
    family: &SummandFamily,
    sub: &[ConnectiveExpr],
    kind: ConnectiveKind,
) -> Result<()> {
    if family.kind() != kind {
        return Err(Error::KindMismatch {
            expected: kind.name().into(),
            found: family.kind().name().into(),
        });
    }
    if sub.len() != family.len() {
        return Err(Error::SubNegationCount {
            expected: family.len(),
            got: sub.len(),
        });
    }
    for n in sub {
        expect_kind(n, ConnectiveKind::Negation)?;
    }
    Ok(())
}
