//! Base connective catalog and the recursive connective expression tree.
//!
//! A [`ConnectiveExpr`] is either a catalog entry, an ordinal sum of a
//! summand family, an N-dual of a binary connective, the inverse of a strict
//! negation, or a natural negation extracted from a binary connective.
//! Expressions are immutable after construction and evaluation is pure, so
//! they can be shared and evaluated concurrently without synchronization.

use crate::analysis;
use crate::error::{Error, Result};
use crate::natural_negation::{self, SupInfOracleConfig};
use crate::ordinal_sum::{self, SummandFamily};
use crate::unit::{check_unit, UnitValue};
use std::fmt;

/// The four connective kinds handled by the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConnectiveKind {
    Negation,
    TNorm,
    TConorm,
    Implication,
}

impl ConnectiveKind {
    pub fn arity(self) -> usize {
        match self {
            ConnectiveKind::Negation => 1,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConnectiveKind::Negation => "negation",
            ConnectiveKind::TNorm => "tnorm",
            ConnectiveKind::TConorm => "tconorm",
            ConnectiveKind::Implication => "implication",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "negation" => Some(ConnectiveKind::Negation),
            "tnorm" => Some(ConnectiveKind::TNorm),
            "tconorm" => Some(ConnectiveKind::TConorm),
            "implication" => Some(ConnectiveKind::Implication),
            _ => None,
        }
    }
}

impl fmt::Display for ConnectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Catalog negations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NegationBase {
    /// `N(x) = 1 - x`
    Standard,
    /// `N(x) = 1 - x^k`, strict but not strong for `k > 1`
    PowerComplement(f64),
    /// `N(x) = (1 - x^k)^(1/k)`, strong (involutive) for every `k >= 1`
    RootComplement(f64),
    /// Crisp: `1` at `x = 0`, else `0`
    Least,
    /// Crisp: `0` at `x = 1`, else `1`
    Greatest,
}

impl NegationBase {
    pub(crate) fn eval(self, x: f64) -> f64 {
        match self {
            NegationBase::Standard => 1.0 - x,
            NegationBase::PowerComplement(k) => 1.0 - x.powf(k),
            NegationBase::RootComplement(k) => (1.0 - x.powf(k)).powf(k.recip()),
            NegationBase::Least => {
                if x == 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            NegationBase::Greatest => {
                if x == 1.0 {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }
}

/// Catalog t-norms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TNormBase {
    /// `min(x, y)`
    Godel,
    /// `x * y`
    Product,
    /// `max(0, x + y - 1)`
    Lukasiewicz,
    /// `0` on `[0,1[^2`, else `min(x, y)`; comparisons are exact
    Drastic,
}

impl TNormBase {
    pub(crate) fn eval(self, x: f64, y: f64) -> f64 {
        match self {
            TNormBase::Godel => x.min(y),
            TNormBase::Product => x * y,
            TNormBase::Lukasiewicz => (x + y - 1.0).max(0.0),
            TNormBase::Drastic => {
                if x < 1.0 && y < 1.0 {
                    0.0
                } else {
                    x.min(y)
                }
            }
        }
    }
}

/// Catalog t-conorms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TConormBase {
    /// `max(x, y)`
    Godel,
    /// `x + y - x*y`
    ProbabilisticSum,
    /// `min(x + y, 1)`
    Lukasiewicz,
    /// `1` on `]0,1]^2`, else `max(x, y)`; comparisons are exact
    Drastic,
}

impl TConormBase {
    pub(crate) fn eval(self, x: f64, y: f64) -> f64 {
        match self {
            TConormBase::Godel => x.max(y),
            TConormBase::ProbabilisticSum => (x + y - x * y).clamp(0.0, 1.0),
            TConormBase::Lukasiewicz => (x + y).min(1.0),
            TConormBase::Drastic => {
                if x > 0.0 && y > 0.0 {
                    1.0
                } else {
                    x.max(y)
                }
            }
        }
    }
}

/// Catalog implications.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ImplicationBase {
    /// `1` if `x <= y`, else `y`
    Godel,
    /// `1` if `x <= y`, else `0`
    Rescher,
    /// `max(1 - x, y)`
    KleeneDienes,
}

impl ImplicationBase {
    pub(crate) fn eval(self, x: f64, y: f64) -> f64 {
        match self {
            ImplicationBase::Godel => {
                if x <= y {
                    1.0
                } else {
                    y
                }
            }
            ImplicationBase::Rescher => {
                if x <= y {
                    1.0
                } else {
                    0.0
                }
            }
            ImplicationBase::KleeneDienes => (1.0 - x).max(y),
        }
    }
}

/// A catalog entry of any kind.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BaseConnective {
    Negation(NegationBase),
    TNorm(TNormBase),
    TConorm(TConormBase),
    Implication(ImplicationBase),
}

impl BaseConnective {
    pub fn kind(&self) -> ConnectiveKind {
        match self {
            BaseConnective::Negation(_) => ConnectiveKind::Negation,
            BaseConnective::TNorm(_) => ConnectiveKind::TNorm,
            BaseConnective::TConorm(_) => ConnectiveKind::TConorm,
            BaseConnective::Implication(_) => ConnectiveKind::Implication,
        }
    }

    /// Catalog name as used by `make_connective` and the config format.
    pub fn name(&self) -> &'static str {
        match self {
            BaseConnective::Negation(NegationBase::Standard) => "standard",
            BaseConnective::Negation(NegationBase::PowerComplement(_)) => "power_complement",
            BaseConnective::Negation(NegationBase::RootComplement(_)) => "root_complement",
            BaseConnective::Negation(NegationBase::Least) => "least",
            BaseConnective::Negation(NegationBase::Greatest) => "greatest",
            BaseConnective::TNorm(TNormBase::Godel) => "godel",
            BaseConnective::TNorm(TNormBase::Product) => "product",
            BaseConnective::TNorm(TNormBase::Lukasiewicz) => "lukasiewicz",
            BaseConnective::TNorm(TNormBase::Drastic) => "drastic",
            BaseConnective::TConorm(TConormBase::Godel) => "godel",
            BaseConnective::TConorm(TConormBase::ProbabilisticSum) => "probabilistic_sum",
            BaseConnective::TConorm(TConormBase::Lukasiewicz) => "lukasiewicz",
            BaseConnective::TConorm(TConormBase::Drastic) => "drastic",
            BaseConnective::Implication(ImplicationBase::Godel) => "godel",
            BaseConnective::Implication(ImplicationBase::Rescher) => "rescher",
            BaseConnective::Implication(ImplicationBase::KleeneDienes) => "kleene_dienes",
        }
    }

    pub fn params(&self) -> Vec<f64> {
        match self {
            BaseConnective::Negation(NegationBase::PowerComplement(k))
            | BaseConnective::Negation(NegationBase::RootComplement(k)) => vec![*k],
            _ => Vec::new(),
        }
    }

    fn eval1(&self, x: f64) -> Result<f64> {
        match self {
            BaseConnective::Negation(n) => Ok(n.eval(x)),
            _ => Err(Error::ArityMismatch {
                expected: 2,
                got: 1,
            }),
        }
    }

    fn eval2(&self, x: f64, y: f64) -> Result<f64> {
        match self {
            BaseConnective::TNorm(t) => Ok(t.eval(x, y)),
            BaseConnective::TConorm(s) => Ok(s.eval(x, y)),
            BaseConnective::Implication(j) => Ok(j.eval(x, y)),
            BaseConnective::Negation(_) => Err(Error::ArityMismatch {
                expected: 1,
                got: 2,
            }),
        }
    }
}

/// Symbolic class certificates carried by a negation expression. A `true`
/// flag is a structural guarantee (e.g. an ordinal sum of strict summands is
/// strict); `false` means "not certified", not "refuted".
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NegationCerts {
    pub continuous: bool,
    pub strict: bool,
    pub strong: bool,
    pub crisp: bool,
    pub frontier: bool,
}

/// A connective expression tree. See the module docs for node semantics.
#[derive(Clone, Debug, PartialEq)]
pub enum ConnectiveExpr {
    /// Catalog entry.
    Base(BaseConnective),
    /// Ordinal sum of a validated summand family; the family's variant
    /// selects the construction (negation / t-norm / t-conorm / rescher
    /// implication / left implication).
    OrdinalSum(SummandFamily),
    /// `C_N(x, y) = N^{-1}(C(N(x), N(y)))` for a strict negation `N`.
    /// Flips t-norms to t-conorms and back.
    NDual {
        inner: Box<ConnectiveExpr>,
        negation: Box<ConnectiveExpr>,
        negation_inverse: Box<ConnectiveExpr>,
    },
    /// Inverse of a strict negation. Catalog entries evaluate in closed
    /// form; anything else bisects `N(x) = y` to `tolerance`.
    Inverse {
        inner: Box<ConnectiveExpr>,
        tolerance: f64,
    },
    /// Natural negation of a t-norm (sup of the zero set), t-conorm (inf of
    /// the one set) or implication (`J(x, 0)`, exact).
    NaturalNegation {
        inner: Box<ConnectiveExpr>,
        oracle: SupInfOracleConfig,
    },
    /// Closed-form natural negation of an ordinal-sum t-norm, given the
    /// natural negations of the summand t-norms.
    ClosedFormNatNegTNorm {
        family: SummandFamily,
        sub_negations: Vec<ConnectiveExpr>,
    },
    /// Closed-form natural negation of an ordinal-sum t-conorm.
    ClosedFormNatNegTConorm {
        family: SummandFamily,
        sub_negations: Vec<ConnectiveExpr>,
    },
}

impl ConnectiveExpr {
    pub fn kind(&self) -> ConnectiveKind {
        match self {
            ConnectiveExpr::Base(b) => b.kind(),
            ConnectiveExpr::OrdinalSum(f) => f.kind(),
            ConnectiveExpr::NDual { inner, .. } => match inner.kind() {
                ConnectiveKind::TNorm => ConnectiveKind::TConorm,
                ConnectiveKind::TConorm => ConnectiveKind::TNorm,
                k => k,
            },
            ConnectiveExpr::Inverse { .. }
            | ConnectiveExpr::NaturalNegation { .. }
            | ConnectiveExpr::ClosedFormNatNegTNorm { .. }
            | ConnectiveExpr::ClosedFormNatNegTConorm { .. } => ConnectiveKind::Negation,
        }
    }

    pub fn arity(&self) -> usize {
        self.kind().arity()
    }

    /// Evaluates the expression at `args`. Arity and range are checked;
    /// evaluation itself is pure and deterministic.
    pub fn evaluate(&self, args: &[UnitValue]) -> Result<UnitValue> {
        let arity = self.arity();
        if args.len() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                got: args.len(),
            });
        }
        let v = match arity {
            1 => self.raw1(args[0].get())?,
            _ => self.raw2(args[0].get(), args[1].get())?,
        };
        UnitValue::new(v)
    }

    /// Unary evaluation with range validation.
    pub fn eval1(&self, x: f64) -> Result<f64> {
        if self.arity() != 1 {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: 1,
            });
        }
        check_unit(x)?;
        self.raw1(x)
    }

    /// Binary evaluation with range validation.
    pub fn eval2(&self, x: f64, y: f64) -> Result<f64> {
        if self.arity() != 2 {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: 2,
            });
        }
        check_unit(x)?;
        check_unit(y)?;
        self.raw2(x, y)
    }

    /// Unary evaluation on pre-validated inputs.
    pub(crate) fn raw1(&self, x: f64) -> Result<f64> {
        match self {
            ConnectiveExpr::Base(b) => b.eval1(x),
            ConnectiveExpr::OrdinalSum(f) => ordinal_sum::eval_negation_sum(f, x),
            ConnectiveExpr::Inverse { inner, tolerance } => {
                analysis::eval_inverse(inner, *tolerance, x)
            }
            ConnectiveExpr::NaturalNegation { inner, oracle } => {
                natural_negation::eval_natural_negation(inner, oracle, x)
            }
            ConnectiveExpr::ClosedFormNatNegTNorm {
                family,
                sub_negations,
            } => natural_negation::eval_closed_form_tnorm(family, sub_negations, x),
            ConnectiveExpr::ClosedFormNatNegTConorm {
                family,
                sub_negations,
            } => natural_negation::eval_closed_form_tconorm(family, sub_negations, x),
            ConnectiveExpr::NDual { .. } => Err(Error::ArityMismatch {
                expected: 2,
                got: 1,
            }),
        }
    }

    /// Binary evaluation on pre-validated inputs.
    pub(crate) fn raw2(&self, x: f64, y: f64) -> Result<f64> {
        match self {
            ConnectiveExpr::Base(b) => b.eval2(x, y),
            ConnectiveExpr::OrdinalSum(f) => ordinal_sum::eval_binary_sum(f, x, y),
            ConnectiveExpr::NDual {
                inner,
                negation,
                negation_inverse,
            } => {
                let nx = negation.raw1(x)?;
                let ny = negation.raw1(y)?;
                let v = inner.raw2(nx, ny)?;
                negation_inverse.raw1(v)
            }
            _ => Err(Error::ArityMismatch {
                expected: 1,
                got: 2,
            }),
        }
    }

    /// Structural class certificates for negation expressions. For any
    /// other kind all flags are `false`.
    pub fn negation_certs(&self) -> NegationCerts {
        match self {
            ConnectiveExpr::Base(BaseConnective::Negation(nb)) => match nb {
                NegationBase::Standard => NegationCerts {
                    continuous: true,
                    strict: true,
                    strong: true,
                    crisp: false,
                    frontier: true,
                },
                NegationBase::PowerComplement(k) => NegationCerts {
                    continuous: true,
                    strict: true,
                    strong: *k == 1.0,
                    crisp: false,
                    frontier: true,
                },
                NegationBase::RootComplement(_) => NegationCerts {
                    continuous: true,
                    strict: true,
                    strong: true,
                    crisp: false,
                    frontier: true,
                },
                NegationBase::Least | NegationBase::Greatest => NegationCerts {
                    crisp: true,
                    ..NegationCerts::default()
                },
            },
            ConnectiveExpr::OrdinalSum(f) if f.kind() == ConnectiveKind::Negation => {
                // Continuity and strictness propagate from the summands; a
                // strict negation is automatically frontier.
                let mut certs = NegationCerts {
                    continuous: true,
                    strict: true,
                    ..NegationCerts::default()
                };
                for s in f.summands() {
                    let c = s.connective().negation_certs();
                    certs.continuous &= c.continuous;
                    certs.strict &= c.strict;
                }
                certs.frontier = certs.strict;
                certs
            }
            ConnectiveExpr::Inverse { inner, .. } => {
                let c = inner.negation_certs();
                NegationCerts {
                    continuous: c.strict,
                    strict: c.strict,
                    strong: c.strong,
                    crisp: false,
                    frontier: c.strict,
                }
            }
            _ => NegationCerts::default(),
        }
    }

    /// True when some node in the tree evaluates through a bisection oracle
    /// (generic inverses, sup/inf natural negations). Checks that compare
    /// such expressions should widen their tolerance accordingly.
    pub fn uses_bisection(&self) -> bool {
        match self {
            ConnectiveExpr::Base(_) => false,
            ConnectiveExpr::OrdinalSum(f) => {
                f.summands().iter().any(|s| s.connective().uses_bisection())
            }
            ConnectiveExpr::NDual {
                inner,
                negation,
                negation_inverse,
            } => {
                inner.uses_bisection()
                    || negation.uses_bisection()
                    || negation_inverse.uses_bisection()
            }
            ConnectiveExpr::Inverse { inner, .. } => {
                !matches!(**inner, ConnectiveExpr::Base(_)) || inner.uses_bisection()
            }
            ConnectiveExpr::NaturalNegation { inner, .. } => {
                inner.kind() != ConnectiveKind::Implication || inner.uses_bisection()
            }
            ConnectiveExpr::ClosedFormNatNegTNorm { sub_negations, .. }
            | ConnectiveExpr::ClosedFormNatNegTConorm { sub_negations, .. } => {
                sub_negations.iter().any(|n| n.uses_bisection())
            }
        }
    }
}

/// Looks up a catalog connective by kind, name and parameters.
///
/// Catalog: t-norms `godel | product | lukasiewicz | drastic`; t-conorms
/// `godel | probabilistic_sum | lukasiewicz | drastic`; negations
/// `standard | power_complement(k) | root_complement(k) | least | greatest`
/// with `k >= 1`; implications `godel | rescher | kleene_dienes`.
pub fn make_connective(
    kind: ConnectiveKind,
    name: &str,
    params: &[f64],
) -> Result<ConnectiveExpr> {
    let no_params = |base: BaseConnective| -> Result<ConnectiveExpr> {
        if params.is_empty() {
            Ok(ConnectiveExpr::Base(base))
        } else {
            Err(Error::BadParams {
                name: name.to_string(),
                reason: format!("takes no parameters, got {}", params.len()),
            })
        }
    };
    let one_param = |make: fn(f64) -> NegationBase| -> Result<ConnectiveExpr> {
        match params {
            [k] if k.is_finite() && *k >= 1.0 => {
                Ok(ConnectiveExpr::Base(BaseConnective::Negation(make(*k))))
            }
            [k] => Err(Error::BadParams {
                name: name.to_string(),
                reason: format!("exponent k = {k} must be a finite real >= 1"),
            }),
            _ => Err(Error::BadParams {
                name: name.to_string(),
                reason: format!("takes exactly one parameter, got {}", params.len()),
            }),
        }
    };

    match (kind, name) {
        (ConnectiveKind::Negation, "standard") => {
            no_params(BaseConnective::Negation(NegationBase::Standard))
        }
        (ConnectiveKind::Negation, "power_complement") => {
            one_param(NegationBase::PowerComplement)
        }
        (ConnectiveKind::Negation, "root_complement") => one_param(NegationBase::RootComplement),
        (ConnectiveKind::Negation, "least") => {
            no_params(BaseConnective::Negation(NegationBase::Least))
        }
        (ConnectiveKind::Negation, "greatest") => {
            no_params(BaseConnective::Negation(NegationBase::Greatest))
        }
        (ConnectiveKind::TNorm, "godel") => no_params(BaseConnective::TNorm(TNormBase::Godel)),
        (ConnectiveKind::TNorm, "product") => no_params(BaseConnective::TNorm(TNormBase::Product)),
        (ConnectiveKind::TNorm, "lukasiewicz") => {
            no_params(BaseConnective::TNorm(TNormBase::Lukasiewicz))
        }
        (ConnectiveKind::TNorm, "drastic") => no_params(BaseConnective::TNorm(TNormBase::Drastic)),
        (ConnectiveKind::TConorm, "godel") => no_params(BaseConnective::TConorm(TConormBase::Godel)),
        (ConnectiveKind::TConorm, "probabilistic_sum") => {
            no_params(BaseConnective::TConorm(TConormBase::ProbabilisticSum))
        }
        (ConnectiveKind::TConorm, "lukasiewicz") => {
            no_params(BaseConnective::TConorm(TConormBase::Lukasiewicz))
        }
        (ConnectiveKind::TConorm, "drastic") => {
            no_params(BaseConnective::TConorm(TConormBase::Drastic))
        }
        (ConnectiveKind::Implication, "godel") => {
            no_params(BaseConnective::Implication(ImplicationBase::Godel))
        }
        (ConnectiveKind::Implication, "rescher") => {
            no_params(BaseConnective::Implication(ImplicationBase::Rescher))
        }
        (ConnectiveKind::Implication, "kleene_dienes") => {
            no_params(BaseConnective::Implication(ImplicationBase::KleeneDienes))
        }
        _ => Err(Error::UnknownConnective {
            kind: kind.name().to_string(),
            name: name.to_string(),
        }),
    }
}

/// Builds the N-dual of a t-norm or t-conorm with respect to a strict
/// negation. The result flips kind: the dual of a t-norm is a t-conorm and
/// vice versa.
pub fn n_dual(inner: ConnectiveExpr, negation: ConnectiveExpr) -> Result<ConnectiveExpr> {
    match inner.kind() {
        ConnectiveKind::TNorm | ConnectiveKind::TConorm => {}
        other => {
            return Err(Error::KindMismatch {
                expected: "tnorm or tconorm".into(),
                found: other.name().into(),
            })
        }
    }
    if negation.kind() != ConnectiveKind::Negation {
        return Err(Error::KindMismatch {
            expected: "negation".into(),
            found: negation.kind().name().into(),
        });
    }
    let inverse = analysis::invert_strict_negation(&negation, &analysis::AnalysisBudget::default())?;
    Ok(ConnectiveExpr::NDual {
        inner: Box::new(inner),
        negation: Box::new(negation),
        negation_inverse: Box::new(inverse),
    })
}
