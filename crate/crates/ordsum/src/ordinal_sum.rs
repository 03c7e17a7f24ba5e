//! Ordinal sums: gluing rescaled connectives onto disjoint subintervals.
//!
//! Each construction rescales a summand connective `C_i` onto `[a_i, b_i]`
//! and fills the rest of the domain with a fixed connective: `1 - x` for
//! negations, `min` / `max` for t-norms / t-conorms, the crisp `x <= y` test
//! for the rescher implication variant, and `max(1 - x, y)` for the left
//! implication variant (which dispatches on the first argument only).

use crate::analysis::{invert_strict_negation, AnalysisBudget};
use crate::connective::{ConnectiveExpr, ConnectiveKind, ImplicationBase};
use crate::error::{Error, Result};

/// Selects which ordinal-sum construction a family feeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumVariant {
    Negation,
    TNorm,
    TConorm,
    ImplicationRescher,
    ImplicationLeft,
}

impl SumVariant {
    pub fn kind(self) -> ConnectiveKind {
        match self {
            SumVariant::Negation => ConnectiveKind::Negation,
            SumVariant::TNorm => ConnectiveKind::TNorm,
            SumVariant::TConorm => ConnectiveKind::TConorm,
            SumVariant::ImplicationRescher | SumVariant::ImplicationLeft => {
                ConnectiveKind::Implication
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SumVariant::Negation => "negation",
            SumVariant::TNorm => "tnorm",
            SumVariant::TConorm => "tconorm",
            SumVariant::ImplicationRescher => "implication_rescher",
            SumVariant::ImplicationLeft => "implication_left",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "negation" => Some(SumVariant::Negation),
            "tnorm" => Some(SumVariant::TNorm),
            "tconorm" => Some(SumVariant::TConorm),
            "implication_rescher" | "rescher" => Some(SumVariant::ImplicationRescher),
            "implication_left" | "left" => Some(SumVariant::ImplicationLeft),
            _ => None,
        }
    }
}

/// One summand `(a, b, C)`: a connective glued onto `]a, b[`.
#[derive(Clone, Debug, PartialEq)]
pub struct Summand {
    a: f64,
    b: f64,
    connective: ConnectiveExpr,
}

impl Summand {
    pub fn new(a: f64, b: f64, connective: ConnectiveExpr) -> Result<Self> {
        for v in [a, b] {
            if v.is_nan() || !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfUnitRange(v));
            }
        }
        if a >= b {
            return Err(Error::EmptyInterval { a, b });
        }
        Ok(Summand { a, b, connective })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn connective(&self) -> &ConnectiveExpr {
        &self.connective
    }

    fn contains(&self, x: f64) -> bool {
        self.a <= x && x <= self.b
    }
}

/// A finite ordered family of summands with pairwise disjoint open
/// intervals. Stored sorted ascending by `a`; closed endpoints may touch
/// (`b_i = a_j`), in which case evaluation dispatches to the lower-indexed
/// summand — the tie-break is observationally irrelevant where the theory
/// makes both branches agree, and documented for bit-reproducibility.
#[derive(Clone, Debug, PartialEq)]
pub struct SummandFamily {
    variant: SumVariant,
    summands: Vec<Summand>,
}

impl SummandFamily {
    pub fn new(variant: SumVariant, mut summands: Vec<Summand>) -> Result<Self> {
        let kind = variant.kind();
        for s in &summands {
            let found = s.connective.kind();
            if found != kind {
                return Err(Error::KindMismatch {
                    expected: kind.name().into(),
                    found: found.name().into(),
                });
            }
        }
        summands.sort_by(|l, r| l.a.partial_cmp(&r.a).expect("validated finite"));
        for w in summands.windows(2) {
            if w[1].a < w[0].b {
                return Err(Error::OverlappingIntervals {
                    a1: w[0].a,
                    b1: w[0].b,
                    a2: w[1].a,
                    b2: w[1].b,
                });
            }
        }
        match variant {
            SumVariant::ImplicationRescher => {
                if let Some(s) = summands.iter().find(|s| s.a == 0.0) {
                    return Err(Error::RescherRequiresPositiveLower(s.a));
                }
            }
            SumVariant::ImplicationLeft => {
                if let Some(s) = summands.iter().find(|s| s.b == 1.0) {
                    return Err(Error::LeftRequiresUpperBelowOne(s.b));
                }
            }
            _ => {}
        }
        Ok(SummandFamily { variant, summands })
    }

    pub fn empty(variant: SumVariant) -> Self {
        SummandFamily {
            variant,
            summands: Vec::new(),
        }
    }

    pub fn variant(&self) -> SumVariant {
        self.variant
    }

    pub fn kind(&self) -> ConnectiveKind {
        self.variant.kind()
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Lowest-indexed summand whose closed interval contains `x`.
    pub(crate) fn locate(&self, x: f64) -> Option<&Summand> {
        self.locate_indexed(x).map(|(_, s)| s)
    }

    pub(crate) fn locate_indexed(&self, x: f64) -> Option<(usize, &Summand)> {
        let i = self.summands.partition_point(|s| s.b < x);
        let s = self.summands.get(i)?;
        if s.contains(x) {
            Some((i, s))
        } else {
            None
        }
    }
}

/// Ordinal sum of a family of negations: on `[a_i, b_i]` the rescaled
/// summand `(1-b_i) + (b_i-a_i) * N_i((x-a_i)/(b_i-a_i))`, elsewhere `1-x`.
pub fn ordinal_sum_negation(family: SummandFamily) -> Result<ConnectiveExpr> {
    expect_variant(&family, SumVariant::Negation)?;
    Ok(ConnectiveExpr::OrdinalSum(family))
}

/// Ordinal sum of a family of t-norms: rescaled summand on each square
/// `[a_i, b_i]^2`, `min` outside.
pub fn ordinal_sum_tnorm(family: SummandFamily) -> Result<ConnectiveExpr> {
    expect_variant(&family, SumVariant::TNorm)?;
    Ok(ConnectiveExpr::OrdinalSum(family))
}

/// Ordinal sum of a family of t-conorms: rescaled summand on each square,
/// `max` outside.
pub fn ordinal_sum_tconorm(family: SummandFamily) -> Result<ConnectiveExpr> {
    expect_variant(&family, SumVariant::TConorm)?;
    Ok(ConnectiveExpr::OrdinalSum(family))
}

/// Ordinal sum of a family of implications with the crisp rescher fill;
/// requires `a_i > 0` for every summand.
pub fn ordinal_sum_implication_rescher(family: SummandFamily) -> Result<ConnectiveExpr> {
    expect_variant(&family, SumVariant::ImplicationRescher)?;
    Ok(ConnectiveExpr::OrdinalSum(family))
}

/// Left ordinal sum of a family of implications: dispatches on the first
/// argument only, kleene-dienes fill; requires `b_i < 1` for every summand.
pub fn left_ordinal_sum_implication(family: SummandFamily) -> Result<ConnectiveExpr> {
    expect_variant(&family, SumVariant::ImplicationLeft)?;
    Ok(ConnectiveExpr::OrdinalSum(family))
}

/// Mirror family `{(1-b_i, 1-a_i, N_i^{-1})}` of a negation family with
/// strict summands. Feeding the result to [`ordinal_sum_negation`] yields
/// the inverse of the original ordinal sum; appending it to the original
/// family yields the strong-construction hypothesis shape.
pub fn mirror_family(family: &SummandFamily) -> Result<SummandFamily> {
    expect_variant(family, SumVariant::Negation)?;
    let budget = AnalysisBudget::default();
    let mirrored = family
        .summands
        .iter()
        .map(|s| {
            let inv = invert_strict_negation(&s.connective, &budget)?;
            Summand::new(1.0 - s.b, 1.0 - s.a, inv)
        })
        .collect::<Result<Vec<_>>>()?;
    SummandFamily::new(SumVariant::Negation, mirrored)
}

fn expect_variant(family: &SummandFamily, variant: SumVariant) -> Result<()> {
    if family.variant == variant {
        Ok(())
    } else {
        Err(Error::KindMismatch {
            expected: variant.name().into(),
            found: family.variant.name().into(),
        })
    }
}

/// Affine rescale `off + w * v` confined to `[lo, hi]`. The clamp only
/// absorbs sub-ulp rounding spill; the mathematical value already lies in
/// the interval.
fn affine(off: f64, w: f64, v: f64, lo: f64, hi: f64) -> f64 {
    (off + w * v).clamp(lo, hi)
}

/// Evaluation of a negation ordinal sum. Interval endpoints are computed as
/// `1 - a_i` / `1 - b_i` directly so that boundary anchoring is exact in
/// f64; both branches agree there in exact arithmetic.
pub(crate) fn eval_negation_sum(family: &SummandFamily, x: f64) -> Result<f64> {
    match family.locate(x) {
        None => Ok(1.0 - x),
        Some(s) => {
            if x == s.a {
                return Ok(1.0 - s.a);
            }
            if x == s.b {
                return Ok(1.0 - s.b);
            }
            let w = s.b - s.a;
            let lo = 1.0 - s.b;
            let hi = 1.0 - s.a;
            let v = s.connective.raw1((x - s.a) / w)?;
            Ok(affine(lo, w, v, lo, hi))
        }
    }
}

pub(crate) fn eval_binary_sum(family: &SummandFamily, x: f64, y: f64) -> Result<f64> {
    match family.variant {
        SumVariant::TNorm => eval_square_sum(family, x, y, |x, y| x.min(y)),
        SumVariant::TConorm => eval_square_sum(family, x, y, |x, y| x.max(y)),
        SumVariant::ImplicationRescher => {
            eval_square_sum(family, x, y, |x, y| ImplicationBase::Rescher.eval(x, y))
        }
        SumVariant::ImplicationLeft => eval_left_sum(family, x, y),
        SumVariant::Negation => Err(Error::ArityMismatch {
            expected: 1,
            got: 2,
        }),
    }
}

/// Square-dispatch sums (t-norm, t-conorm, rescher implication): the summand
/// branch applies when both arguments lie in the same `[a_i, b_i]`.
fn eval_square_sum(
    family: &SummandFamily,
    x: f64,
    y: f64,
    fill: impl Fn(f64, f64) -> f64,
) -> Result<f64> {
    let mut i = family.summands.partition_point(|s| s.b < x);
    while let Some(s) = family.summands.get(i) {
        if s.a > x {
            break;
        }
        if s.contains(y) {
            let w = s.b - s.a;
            let v = s.connective.raw2((x - s.a) / w, (y - s.a) / w)?;
            return Ok(affine(s.a, w, v, s.a, s.b));
        }
        i += 1;
    }
    Ok(fill(x, y))
}

/// Left-implication sum: dispatch on `x` only. `J(0, y) = 1` for every
/// fuzzy implication, so the `x = a_i` column is the constant `1 - a_i`;
/// returning it directly keeps the anchor exact in f64.
fn eval_left_sum(family: &SummandFamily, x: f64, y: f64) -> Result<f64> {
    match family.locate(x) {
        None => Ok((1.0 - x).max(y)),
        Some(s) => {
            if x == s.a {
                return Ok(1.0 - s.a);
            }
            let w = s.b - s.a;
            let lo = 1.0 - s.b;
            let hi = 1.0 - s.a;
            let v = s.connective.raw2((x - s.a) / w, y)?;
            Ok(affine(lo, w, v, lo, hi))
        }
    }
}
