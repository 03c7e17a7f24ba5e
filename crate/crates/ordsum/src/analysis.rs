//! Classification of negations, equilibrium points, and inverses of strict
//! negations.
//!
//! Continuity is undecidable from point samples, so the continuity verdict
//! is a falsifier: a jump between adjacent probes is suspicious, and a
//! suspicious cell is bisected until either every sub-jump falls below the
//! detection threshold (steep but continuous) or the jump persists at f64
//! resolution (a genuine discontinuity). Symbolic certificates carried by
//! the expression tree override sampling in reports; sampling still runs
//! and hard violations (monotonicity increases, resolution-persistent
//! jumps) refute even certified flags.

use crate::connective::{BaseConnective, ConnectiveExpr, ConnectiveKind, NegationBase};
use crate::error::{Error, Result};
use crate::unit::unit_grid;
use std::collections::BTreeMap;
use std::fmt;

/// Grid and tolerance parameters for classification.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalysisBudget {
    pub grid_points: usize,
    pub continuity_probe_pairs: usize,
    pub equality_tol: f64,
}

impl AnalysisBudget {
    pub fn new(grid_points: usize, continuity_probe_pairs: usize, equality_tol: f64) -> Result<Self> {
        if grid_points < 3 {
            return Err(Error::BadBudget(format!(
                "grid_points must be at least 3, got {grid_points}"
            )));
        }
        if !(equality_tol.is_finite() && equality_tol > 0.0) {
            return Err(Error::BadBudget(format!(
                "equality_tol must be a positive real, got {equality_tol}"
            )));
        }
        Ok(AnalysisBudget {
            grid_points,
            continuity_probe_pairs,
            equality_tol,
        })
    }
}

impl Default for AnalysisBudget {
    fn default() -> Self {
        AnalysisBudget {
            grid_points: 1001,
            continuity_probe_pairs: 4096,
            equality_tol: 1e-9,
        }
    }
}

/// The negation classes reported by [`classify_negation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NegationClass {
    N1,
    N2,
    Strict,
    Strong,
    Crisp,
    NonVanishing,
    NonFilling,
    Frontier,
    LeqStandard,
    GeqStandard,
    Continuous,
}

impl NegationClass {
    pub fn name(self) -> &'static str {
        match self {
            NegationClass::N1 => "N1",
            NegationClass::N2 => "N2",
            NegationClass::Strict => "strict",
            NegationClass::Strong => "strong",
            NegationClass::Crisp => "crisp",
            NegationClass::NonVanishing => "non_vanishing",
            NegationClass::NonFilling => "non_filling",
            NegationClass::Frontier => "frontier",
            NegationClass::LeqStandard => "leq_standard",
            NegationClass::GeqStandard => "geq_standard",
            NegationClass::Continuous => "continuous",
        }
    }

    pub fn all() -> [NegationClass; 11] {
        [
            NegationClass::N1,
            NegationClass::N2,
            NegationClass::Strict,
            NegationClass::Strong,
            NegationClass::Crisp,
            NegationClass::NonVanishing,
            NegationClass::NonFilling,
            NegationClass::Frontier,
            NegationClass::LeqStandard,
            NegationClass::GeqStandard,
            NegationClass::Continuous,
        ]
    }
}

impl fmt::Display for NegationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Verdict for one class: held on every grid probe, refuted with a witness,
/// or guaranteed by a structural certificate (and not refuted numerically).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassVerdict {
    HoldsOnGrid,
    Refuted,
    CertifiedSymbolically,
}

impl ClassVerdict {
    pub fn holds(self) -> bool {
        !matches!(self, ClassVerdict::Refuted)
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassVerdict::HoldsOnGrid => "holds_on_grid",
            ClassVerdict::Refuted => "refuted",
            ClassVerdict::CertifiedSymbolically => "certified_symbolically",
        }
    }
}

impl fmt::Display for ClassVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Numeric evidence for a refuted class.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassWitness {
    pub class: NegationClass,
    pub points: Vec<f64>,
    pub values: Vec<f64>,
}

/// Classification outcome for one negation.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassReport {
    pub flags: BTreeMap<NegationClass, ClassVerdict>,
    pub witnesses: Vec<ClassWitness>,
    pub grid_size: usize,
}

impl ClassReport {
    pub fn verdict(&self, class: NegationClass) -> ClassVerdict {
        self.flags[&class]
    }

    pub fn holds(&self, class: NegationClass) -> bool {
        self.verdict(class).holds()
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "grid: {} points", self.grid_size)?;
        for (class, verdict) in &self.flags {
            writeln!(f, "{}: {}", class, verdict)?;
        }
        for w in &self.witnesses {
            writeln!(
                f,
                "witness {}: x = {:?}, observed {:?}",
                w.class, w.points, w.values
            )?;
        }
        Ok(())
    }
}

enum ContinuityOutcome {
    Clean,
    Jump { left: f64, right: f64, vl: f64, vr: f64 },
}

/// Classifies a negation into the supported classes.
pub fn classify_negation(n: &ConnectiveExpr, budget: &AnalysisBudget) -> Result<ClassReport> {
    expect_negation(n)?;
    let tol = budget.equality_tol;
    let m = budget.grid_points;
    let xs: Vec<f64> = unit_grid(m).collect();
    let vs = xs.iter().map(|&x| n.raw1(x)).collect::<Result<Vec<f64>>>()?;
    let certs = n.negation_certs();

    let mut flags = BTreeMap::new();
    let mut witnesses = Vec::new();
    let record = |class: NegationClass,
                      refuted: Option<(Vec<f64>, Vec<f64>)>,
                      certified: bool,
                      flags: &mut BTreeMap<NegationClass, ClassVerdict>,
                      witnesses: &mut Vec<ClassWitness>| {
        let verdict = match (refuted, certified) {
            (Some((points, values)), _) => {
                witnesses.push(ClassWitness {
                    class,
                    points,
                    values,
                });
                ClassVerdict::Refuted
            }
            (None, true) => ClassVerdict::CertifiedSymbolically,
            (None, false) => ClassVerdict::HoldsOnGrid,
        };
        flags.insert(class, verdict);
    };

    // N1: exact endpoint identities.
    let n1_bad = if vs[0] != 1.0 || vs[m - 1] != 0.0 {
        Some((vec![0.0, 1.0], vec![vs[0], vs[m - 1]]))
    } else {
        None
    };
    record(NegationClass::N1, n1_bad, false, &mut flags, &mut witnesses);

    // N2: non-increasing between consecutive grid points.
    let n2_bad = vs
        .windows(2)
        .position(|w| w[1] > w[0] + tol)
        .map(|i| (vec![xs[i], xs[i + 1]], vec![vs[i], vs[i + 1]]));
    record(
        NegationClass::N2,
        n2_bad.clone(),
        false,
        &mut flags,
        &mut witnesses,
    );

    // Continuity: adjacent-probe jump scan with adaptive refinement.
    let continuity = continuity_scan(n, &xs, &vs, budget)?;
    let cont_bad = match &continuity {
        ContinuityOutcome::Clean => None,
        ContinuityOutcome::Jump {
            left,
            right,
            vl,
            vr,
        } => Some((vec![*left, *right], vec![*vl, *vr])),
    };
    record(
        NegationClass::Continuous,
        cont_bad.clone(),
        certs.continuous && cont_bad.is_none(),
        &mut flags,
        &mut witnesses,
    );

    // Strict: strictly decreasing (no increase beyond tol, no plateau wider
    // than one grid cell) and continuous. An increase or a persistent jump
    // is a hard refutation that overrides a certificate; a plateau at grid
    // resolution does not.
    let strict_hard = n2_bad.clone().or(cont_bad);
    let plateau = vs
        .windows(3)
        .position(|w| w[0] - w[1] <= tol && w[1] - w[2] <= tol)
        .map(|i| {
            (
                vec![xs[i], xs[i + 1], xs[i + 2]],
                vec![vs[i], vs[i + 1], vs[i + 2]],
            )
        });
    let strict_verdict = if let Some(w) = strict_hard {
        Some(w)
    } else if certs.strict {
        None
    } else {
        plateau
    };
    record(
        NegationClass::Strict,
        strict_verdict,
        certs.strict,
        &mut flags,
        &mut witnesses,
    );

    // Strong: max |N(N(x)) - x| on the grid within tol; the witness is the
    // point of largest involution defect.
    let mut strong_dev = 0.0_f64;
    let mut strong_arg = (0.0, 0.0);
    for (i, &x) in xs.iter().enumerate() {
        let nn = n.raw1(vs[i])?;
        let dev = (nn - x).abs();
        if dev > strong_dev {
            strong_dev = dev;
            strong_arg = (x, nn);
        }
    }
    let strong_bad = (strong_dev > tol).then(|| (vec![strong_arg.0], vec![strong_arg.1]));
    record(
        NegationClass::Strong,
        strong_bad,
        certs.strong,
        &mut flags,
        &mut witnesses,
    );

    // Crisp: every grid value within tol of {0, 1}.
    let crisp_bad = xs
        .iter()
        .zip(&vs)
        .find(|(_, &v)| v.min(1.0 - v) > tol)
        .map(|(&x, &v)| (vec![x], vec![v]));
    record(
        NegationClass::Crisp,
        crisp_bad,
        certs.crisp,
        &mut flags,
        &mut witnesses,
    );

    // Non-vanishing: N(x) = 0 only near x = 1. The spatial slack absorbs
    // steep frontier negations whose values dip below the tolerance a few
    // cells before the endpoint.
    let spacing = xs[1] - xs[0];
    let near_edge = 10.0 * spacing;
    let nv_bad = xs
        .iter()
        .zip(&vs)
        .find(|(&x, &v)| x <= 1.0 - near_edge && v <= tol)
        .map(|(&x, &v)| (vec![x], vec![v]));
    let nv_refuted = nv_bad.is_some();
    record(
        NegationClass::NonVanishing,
        nv_bad,
        certs.frontier,
        &mut flags,
        &mut witnesses,
    );

    // Non-filling: N(x) = 1 only near x = 0.
    let nf_bad = xs
        .iter()
        .zip(&vs)
        .find(|(&x, &v)| x >= near_edge && v >= 1.0 - tol)
        .map(|(&x, &v)| (vec![x], vec![v]));
    let nf_refuted = nf_bad.is_some();
    record(
        NegationClass::NonFilling,
        nf_bad,
        certs.frontier,
        &mut flags,
        &mut witnesses,
    );

    // Frontier = non-vanishing and non-filling.
    let frontier_verdict = if nv_refuted || nf_refuted {
        ClassVerdict::Refuted
    } else if flags[&NegationClass::NonVanishing] == ClassVerdict::CertifiedSymbolically
        && flags[&NegationClass::NonFilling] == ClassVerdict::CertifiedSymbolically
    {
        ClassVerdict::CertifiedSymbolically
    } else {
        ClassVerdict::HoldsOnGrid
    };
    flags.insert(NegationClass::Frontier, frontier_verdict);

    // Order against the standard negation.
    let leq_bad = xs
        .iter()
        .zip(&vs)
        .find(|(&x, &v)| v > (1.0 - x) + tol)
        .map(|(&x, &v)| (vec![x], vec![v]));
    record(
        NegationClass::LeqStandard,
        leq_bad,
        false,
        &mut flags,
        &mut witnesses,
    );
    let geq_bad = xs
        .iter()
        .zip(&vs)
        .find(|(&x, &v)| v < (1.0 - x) - tol)
        .map(|(&x, &v)| (vec![x], vec![v]));
    record(
        NegationClass::GeqStandard,
        geq_bad,
        false,
        &mut flags,
        &mut witnesses,
    );

    Ok(ClassReport {
        flags,
        witnesses,
        grid_size: m,
    })
}

/// Jump detection threshold for a given grid spacing.
fn jump_threshold(spacing: f64, tol: f64) -> f64 {
    10.0 * (spacing + tol)
}

fn continuity_scan(
    n: &ConnectiveExpr,
    xs: &[f64],
    vs: &[f64],
    budget: &AnalysisBudget,
) -> Result<ContinuityOutcome> {
    let spacing = xs[1] - xs[0];
    let theta = jump_threshold(spacing, budget.equality_tol);
    let mut suspicious: Vec<(f64, f64, f64, f64)> = Vec::new();
    for i in 0..xs.len() - 1 {
        if (vs[i] - vs[i + 1]).abs() > theta {
            suspicious.push((xs[i], xs[i + 1], vs[i], vs[i + 1]));
        }
    }
    match refine_jumps(n, suspicious, theta, budget.continuity_probe_pairs)? {
        Some((left, right, vl, vr)) => Ok(ContinuityOutcome::Jump {
            left,
            right,
            vl,
            vr,
        }),
        None => Ok(ContinuityOutcome::Clean),
    }
}

/// Bisects suspicious cells until every sub-jump drops below `theta`
/// (steep but continuous) or a jump persists at f64 resolution / probe
/// exhaustion (treated as a genuine discontinuity).
fn refine_jumps(
    n: &ConnectiveExpr,
    mut suspicious: Vec<(f64, f64, f64, f64)>,
    theta: f64,
    max_probes: usize,
) -> Result<Option<(f64, f64, f64, f64)>> {
    let mut probes = 0usize;
    while let Some((l, r, vl, vr)) = suspicious.pop() {
        if probes >= max_probes {
            return Ok(Some((l, r, vl, vr)));
        }
        let mid = 0.5 * (l + r);
        if mid <= l || mid >= r {
            return Ok(Some((l, r, vl, vr)));
        }
        let vm = n.raw1(mid)?;
        probes += 1;
        if (vl - vm).abs() > theta {
            suspicious.push((l, mid, vl, vm));
        }
        if (vm - vr).abs() > theta {
            suspicious.push((mid, r, vm, vr));
        }
    }
    Ok(None)
}

/// Finds the equilibrium point `N(e) = e` when one exists. A negation is
/// non-increasing, so `f(x) = N(x) - x` is strictly decreasing and has at
/// most one root; discontinuous negations may jump across zero, in which
/// case `None` is returned.
pub fn equilibrium_point(n: &ConnectiveExpr, budget: &AnalysisBudget) -> Result<Option<f64>> {
    expect_negation(n)?;
    let tol = budget.equality_tol;
    let xs: Vec<f64> = unit_grid(budget.grid_points).collect();
    let spacing = xs[1] - xs[0];
    let theta = jump_threshold(spacing, tol);
    let mut prev_x = xs[0];
    let mut prev_v = n.raw1(prev_x)?;
    if prev_v == prev_x {
        return Ok(Some(prev_x));
    }
    for &x in &xs[1..] {
        let v = n.raw1(x)?;
        if v == x {
            return Ok(Some(x));
        }
        if prev_v > prev_x && v < x {
            // continuity probe across the crossing cell: a negation that
            // jumps over the diagonal has no equilibrium
            if (prev_v - v).abs() > theta {
                let suspect = vec![(prev_x, x, prev_v, v)];
                if refine_jumps(n, suspect, theta, budget.continuity_probe_pairs)?.is_some() {
                    for e in [prev_x, x] {
                        if (n.raw1(e)? - e).abs() <= tol {
                            return Ok(Some(e));
                        }
                    }
                    return Ok(None);
                }
            }
            return bisect_equilibrium(n, prev_x, x, tol);
        }
        prev_x = x;
        prev_v = v;
    }
    Ok(None)
}

fn bisect_equilibrium(n: &ConnectiveExpr, mut lo: f64, mut hi: f64, tol: f64) -> Result<Option<f64>> {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f = n.raw1(mid)? - mid;
        if f.abs() <= tol {
            return Ok(Some(mid));
        }
        if f > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // interval exhausted without |f| <= tol: the negation jumps across zero
    for e in [lo, hi] {
        if (n.raw1(e)? - e).abs() <= tol {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Inverse of a strict negation. Catalog entries short-circuit to closed
/// forms (the standard negation and root complements are self-inverse, the
/// inverse of `1 - x^k` is `(1 - y)^(1/k)`); double inverses unwrap; any
/// other strict negation gets a bisection-backed inverse node.
pub fn invert_strict_negation(
    n: &ConnectiveExpr,
    budget: &AnalysisBudget,
) -> Result<ConnectiveExpr> {
    expect_negation(n)?;
    let certs = n.negation_certs();
    if !certs.strict {
        let report = classify_negation(n, budget)?;
        if !report.holds(NegationClass::Strict) {
            return Err(Error::NotStrict);
        }
    }
    Ok(match n {
        ConnectiveExpr::Base(BaseConnective::Negation(NegationBase::Standard))
        | ConnectiveExpr::Base(BaseConnective::Negation(NegationBase::RootComplement(_))) => {
            n.clone()
        }
        ConnectiveExpr::Inverse { inner, .. } => (**inner).clone(),
        _ => ConnectiveExpr::Inverse {
            inner: Box::new(n.clone()),
            tolerance: budget.equality_tol,
        },
    })
}

/// Evaluates an inverse node at `y`: closed form for catalog bases,
/// otherwise bisection of `N(x) = y` (unique solution by strictness).
pub(crate) fn eval_inverse(inner: &ConnectiveExpr, tolerance: f64, y: f64) -> Result<f64> {
    if let ConnectiveExpr::Base(BaseConnective::Negation(nb)) = inner {
        match nb {
            NegationBase::Standard => return Ok(1.0 - y),
            NegationBase::PowerComplement(k) => return Ok((1.0 - y).powf(k.recip())),
            NegationBase::RootComplement(k) => {
                return Ok((1.0 - y.powf(*k)).powf(k.recip()))
            }
            _ => {}
        }
    }
    if y == 0.0 {
        return Ok(1.0);
    }
    if y == 1.0 {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = inner.raw1(mid)?;
        if v > y {
            lo = mid;
        } else if v < y {
            hi = mid;
        } else {
            return Ok(mid);
        }
    }
    Ok(0.5 * (lo + hi))
}

fn expect_negation(n: &ConnectiveExpr) -> Result<()> {
    if n.kind() == ConnectiveKind::Negation {
        Ok(())
    } else {
        Err(Error::KindMismatch {
            expected: "negation".into(),
            found: n.kind().name().into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connective::make_connective;
    use crate::unit::unit_grid;

    fn neg(name: &str, params: &[f64]) -> ConnectiveExpr {
        make_connective(ConnectiveKind::Negation, name, params).unwrap()
    }

    #[test]
    fn classify_standard() {
        let r = classify_negation(&neg("standard", &[]), &AnalysisBudget::default()).unwrap();
        assert!(r.holds(NegationClass::Strong));
        assert!(r.holds(NegationClass::Strict));
        assert!(r.holds(NegationClass::Continuous));
        assert!(r.holds(NegationClass::Frontier));
        assert!(r.holds(NegationClass::LeqStandard) && r.holds(NegationClass::GeqStandard));
        assert_eq!(r.verdict(NegationClass::Crisp), ClassVerdict::Refuted);
        let w = r
            .witnesses
            .iter()
            .find(|w| w.class == NegationClass::Crisp)
            .unwrap();
        assert_eq!(w.values[0], 1.0 - w.points[0]);
    }

    #[test]
    fn classify_power_complement() {
        let n = neg("power_complement", &[2.0]);
        let r = classify_negation(&n, &AnalysisBudget::default()).unwrap();
        assert!(r.holds(NegationClass::Strict));
        assert_eq!(r.verdict(NegationClass::Strong), ClassVerdict::Refuted);
        let w = r
            .witnesses
            .iter()
            .find(|w| w.class == NegationClass::Strong)
            .unwrap();
        let x = w.points[0];
        let nn = n.eval1(n.eval1(x).unwrap()).unwrap();
        assert_eq!(nn, w.values[0]);
        assert!((nn - x).abs() > 1e-9);
        // hand-checked involution defect: N(N(0.5)) = 1 - 0.75^2 = 0.4375
        assert_eq!(n.eval1(n.eval1(0.5).unwrap()).unwrap(), 0.4375);
        assert!(r.holds(NegationClass::GeqStandard));
        assert_eq!(r.verdict(NegationClass::LeqStandard), ClassVerdict::Refuted);
    }

    #[test]
    fn classify_least() {
        let r = classify_negation(&neg("least", &[]), &AnalysisBudget::default()).unwrap();
        assert_eq!(
            r.verdict(NegationClass::Crisp),
            ClassVerdict::CertifiedSymbolically
        );
        assert_eq!(r.verdict(NegationClass::Continuous), ClassVerdict::Refuted);
        let w = r
            .witnesses
            .iter()
            .find(|w| w.class == NegationClass::Continuous)
            .unwrap();
        assert!(w.points[1] <= 0.001 + 1e-12, "jump near 0, got {:?}", w.points);
        assert_eq!(r.verdict(NegationClass::Strict), ClassVerdict::Refuted);
        assert!(r.holds(NegationClass::N1));
    }

    #[test]
    fn classify_root_complement_strong_despite_steep_tail() {
        let r = classify_negation(&neg("root_complement", &[2.0]), &AnalysisBudget::default())
            .unwrap();
        assert!(r.holds(NegationClass::Strong));
        assert!(r.holds(NegationClass::Strict));
        // steep but continuous near x = 1: refinement must not refute
        assert!(r.holds(NegationClass::Continuous));
    }

    #[test]
    fn steep_frontier_negations_are_not_misclassified() {
        // power_complement(4) sits within 1e-9 of 1 at x = 0.001, but it
        // fills only at x = 0; the near-edge slack must absorb that
        for (name, params) in [
            ("power_complement", &[4.0][..]),
            ("root_complement", &[4.0][..]),
        ] {
            let r = classify_negation(&neg(name, params), &AnalysisBudget::default()).unwrap();
            assert!(r.holds(NegationClass::NonFilling), "{name}");
            assert!(r.holds(NegationClass::NonVanishing), "{name}");
            assert!(r.holds(NegationClass::Frontier), "{name}");
        }
        // a crisp negation still refutes away from the edge
        let r = classify_negation(&neg("least", &[]), &AnalysisBudget::default()).unwrap();
        assert_eq!(r.verdict(NegationClass::NonVanishing), ClassVerdict::Refuted);
        assert_eq!(r.verdict(NegationClass::Frontier), ClassVerdict::Refuted);
    }

    #[test]
    fn strong_implies_strict_never_contradicted() {
        for (name, params) in [
            ("standard", &[][..]),
            ("root_complement", &[2.0][..]),
            ("root_complement", &[3.0][..]),
        ] {
            let r = classify_negation(&neg(name, params), &AnalysisBudget::default()).unwrap();
            assert!(r.holds(NegationClass::Strong));
            assert_ne!(r.verdict(NegationClass::Strict), ClassVerdict::Refuted);
        }
    }

    #[test]
    fn equilibrium_examples() {
        let b = AnalysisBudget::default();
        assert_eq!(equilibrium_point(&neg("standard", &[]), &b).unwrap(), Some(0.5));
        let e = equilibrium_point(&neg("root_complement", &[2.0]), &b)
            .unwrap()
            .unwrap();
        // the equilibrium of sqrt(1 - x^2) is 1/sqrt(2)
        assert!((e - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-9);
        assert_eq!(equilibrium_point(&neg("least", &[]), &b).unwrap(), None);
    }

    #[test]
    fn equilibrium_fixed_point_is_consistent_with_n1_n2() {
        let b = AnalysisBudget::default();
        for (name, params) in [("standard", &[][..]), ("power_complement", &[2.0][..])] {
            let n = neg(name, params);
            let e = equilibrium_point(&n, &b).unwrap().unwrap();
            assert!((n.eval1(e).unwrap() - e).abs() <= 1e-9);
            let r = classify_negation(&n, &b).unwrap();
            assert!(r.holds(NegationClass::N1) && r.holds(NegationClass::N2));
        }
    }

    #[test]
    fn inverse_examples() {
        let b = AnalysisBudget::default();
        let inv_std = invert_strict_negation(&neg("standard", &[]), &b).unwrap();
        assert_eq!(inv_std, neg("standard", &[]));
        assert_eq!(inv_std.eval1(0.3).unwrap(), 0.7);

        let inv_p2 = invert_strict_negation(&neg("power_complement", &[2.0]), &b).unwrap();
        assert!((inv_p2.eval1(0.36).unwrap() - 0.8).abs() < 1e-12);

        let root = neg("root_complement", &[2.0]);
        let inv_root = invert_strict_negation(&root, &b).unwrap();
        assert_eq!(inv_root, root);
        for x in unit_grid(101) {
            let y = root.eval1(x).unwrap();
            assert!((inv_root.eval1(y).unwrap() - x).abs() < 1e-9);
        }
    }

    #[test]
    fn double_inverse_unwraps() {
        let b = AnalysisBudget::default();
        let p2 = neg("power_complement", &[2.0]);
        let inv = invert_strict_negation(&p2, &b).unwrap();
        let back = invert_strict_negation(&inv, &b).unwrap();
        assert_eq!(back, p2);
    }

    #[test]
    fn inverse_roundtrip_within_1e9_for_strict_catalog() {
        let b = AnalysisBudget::default();
        for (name, params) in [
            ("standard", &[][..]),
            ("power_complement", &[2.0][..]),
            ("power_complement", &[3.0][..]),
            ("root_complement", &[2.0][..]),
            ("root_complement", &[3.0][..]),
        ] {
            let n = neg(name, params);
            let inv = invert_strict_negation(&n, &b).unwrap();
            for y in unit_grid(1001) {
                let x = inv.eval1(y).unwrap();
                assert!(
                    (n.eval1(x).unwrap() - y).abs() <= 1e-9,
                    "{name} N(N^-1(y)) at {y}"
                );
            }
            for x in unit_grid(1001) {
                let y = n.eval1(x).unwrap();
                assert!(
                    (inv.eval1(y).unwrap() - x).abs() <= 1e-9,
                    "{name} N^-1(N(x)) at {x}"
                );
            }
        }
    }

    #[test]
    fn inverse_roundtrip_floor_for_steep_exponents() {
        // exponents beyond ~3 flatten near the endpoints; the value of x^k
        // falls below the f64 resolution of 1 - x^k there, so roundtrips
        // bottom out around 1e-7 instead of 1e-9
        let b = AnalysisBudget::default();
        for (name, params) in [
            ("power_complement", &[4.0][..]),
            ("root_complement", &[4.0][..]),
        ] {
            let n = neg(name, params);
            let inv = invert_strict_negation(&n, &b).unwrap();
            for x in unit_grid(1001) {
                let y = n.eval1(x).unwrap();
                assert!(
                    (inv.eval1(y).unwrap() - x).abs() <= 1e-6,
                    "{name} N^-1(N(x)) at {x}"
                );
            }
        }
    }

    #[test]
    fn invert_rejects_non_strict() {
        let b = AnalysisBudget::default();
        assert!(matches!(
            invert_strict_negation(&neg("least", &[]), &b),
            Err(Error::NotStrict)
        ));
        assert!(matches!(
            invert_strict_negation(&neg("greatest", &[]), &b),
            Err(Error::NotStrict)
        ));
    }

    #[test]
    fn leq_and_geq_both_hold_only_for_standard_shape() {
        let b = AnalysisBudget::default();
        let r = classify_negation(&neg("standard", &[]), &b).unwrap();
        assert!(r.holds(NegationClass::LeqStandard) && r.holds(NegationClass::GeqStandard));
        for (name, params) in [
            ("power_complement", &[2.0][..]),
            ("root_complement", &[2.0][..]),
            ("least", &[][..]),
            ("greatest", &[][..]),
        ] {
            let r = classify_negation(&neg(name, params), &b).unwrap();
            assert!(
                !(r.holds(NegationClass::LeqStandard) && r.holds(NegationClass::GeqStandard)),
                "{name} should differ from the standard negation somewhere"
            );
        }
    }

    #[test]
    fn budget_validation() {
        assert!(AnalysisBudget::new(2, 100, 1e-9).is_err());
        assert!(AnalysisBudget::new(11, 100, 0.0).is_err());
        assert!(AnalysisBudget::new(11, 100, 1e-9).is_ok());
    }
}
