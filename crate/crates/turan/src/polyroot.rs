//! Root-form complex polynomials with overflow-safe evaluation and certified
//! sup norms on convex sets.
//!
//! Polynomials are stored as a leading coefficient and a root multiset, so
//! `(z²-1)^100` is exact and evaluation works in log scale: magnitudes like
//! `2^100` never overflow. Sup norms come back as certified intervals
//! `[lower, upper]`: the maximum-modulus principle reduces the sup over the
//! set to the sup over its boundary, boundary arcs are bounded through a
//! per-arc Lipschitz estimate of the derivative, and arcs are bisected
//! adaptively until the interval meets the requested relative tolerance.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{BoundaryCurve, ConvexSet, GEOM_TOL};

/// Evaluation-count cap per sup-norm call.
pub const NORM_EVAL_CAP: usize = 2_000_000;

/// Magnitude and phase of a complex value in log scale.
///
/// `log_abs = -∞` encodes an exactly zero value; the phase is meaningless in
/// that case and callers should check [`LogValue::is_zero`] first. Products
/// of values correspond to sums of `log_abs`, so magnitudes like
/// `|z²-1|^m` with `m ≥ 100` stay representable.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogValue {
    pub log_abs: f64,
    pub phase: f64,
}

impl LogValue {
    pub const ZERO: LogValue = LogValue {
        log_abs: f64::NEG_INFINITY,
        phase: 0.0,
    };

    pub fn is_zero(&self) -> bool {
        self.log_abs == f64::NEG_INFINITY
    }

    /// Linear-scale magnitude; may overflow to `inf` for large `log_abs`.
    pub fn magnitude(&self) -> f64 {
        self.log_abs.exp()
    }

    /// Complex value in linear scale (may over/underflow).
    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(self.log_abs.exp(), self.phase)
    }
}

fn wrap_phase(p: f64) -> f64 {
    let w = (p + std::f64::consts::PI).rem_euclid(2.0 * std::f64::consts::PI);
    w - std::f64::consts::PI
}

/// Product accumulator `acc · 2^exp2` kept in a normal floating-point range.
#[derive(Clone, Copy, Debug)]
struct ExtProd {
    acc: Complex64,
    exp2: i64,
}

impl ExtProd {
    fn one() -> Self {
        ExtProd {
            acc: Complex64::new(1.0, 0.0),
            exp2: 0,
        }
    }

    fn renorm(&mut self) {
        let mut m = self.acc.norm_sqr();
        if m == 0.0 {
            return;
        }
        const UP: f64 = 1.3407807929942597e154; // 2^512
        const DOWN: f64 = 7.458340731200207e-155; // 2^-512
        const SCALE_DOWN: f64 = 8.636168555094445e-78; // 2^-256
        const SCALE_UP: f64 = 1.157920892373162e77; // 2^256
        while m > UP {
            self.acc *= SCALE_DOWN;
            self.exp2 += 256;
            m = self.acc.norm_sqr();
        }
        while m < DOWN {
            self.acc *= SCALE_UP;
            self.exp2 -= 256;
            m = self.acc.norm_sqr();
        }
    }

    fn mul(&mut self, f: Complex64) {
        self.acc *= f;
        self.renorm();
    }

    fn mul_ext(&mut self, o: &ExtProd) {
        self.acc *= o.acc;
        self.exp2 += o.exp2;
        self.renorm();
    }

    /// `f^k` by binary exponentiation.
    fn pow(f: Complex64, k: u32) -> ExtProd {
        let mut result = ExtProd::one();
        let mut base = ExtProd::one();
        base.mul(f);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result.mul_ext(&base);
            }
            k >>= 1;
            if k > 0 {
                let b = base;
                base.mul_ext(&b);
            }
        }
        result
    }

    fn log_abs(&self) -> f64 {
        if self.acc == Complex64::new(0.0, 0.0) {
            f64::NEG_INFINITY
        } else {
            self.acc.norm().ln() + self.exp2 as f64 * std::f64::consts::LN_2
        }
    }

    fn phase(&self) -> f64 {
        self.acc.arg()
    }
}

/// Complex sum of terms given in log-polar form (log-sum-exp with phases).
fn log_polar_sum(terms: &[LogValue]) -> LogValue {
    let m = terms
        .iter()
        .map(|t| t.log_abs)
        .fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return LogValue::ZERO;
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for t in terms {
        if !t.is_zero() {
            sum += Complex64::from_polar((t.log_abs - m).exp(), t.phase);
        }
    }
    if sum == Complex64::new(0.0, 0.0) {
        return LogValue::ZERO;
    }
    LogValue {
        log_abs: m + sum.norm().ln(),
        phase: wrap_phase(sum.arg()),
    }
}

fn log_add_exp(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi == f64::NEG_INFINITY {
        f64::NEG_INFINITY
    } else if lo == f64::NEG_INFINITY {
        hi
    } else {
        hi + (lo - hi).exp().ln_1p()
    }
}

/// Complex polynomial `lead · Π (z - rootᵢ)` of exact degree `≥ 1`.
///
/// Roots are a multiset; construction sorts them and groups equal values so
/// that high-multiplicity polynomials evaluate in time proportional to the
/// number of distinct roots.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolySpec", into = "PolySpec")]
pub struct RootPoly {
    lead: Complex64,
    roots: Vec<Complex64>,
    #[serde(skip)]
    grouped: Vec<(Complex64, u32)>,
}

#[derive(Serialize, Deserialize)]
struct PolySpec {
    lead: [f64; 2],
    roots: Vec<[f64; 2]>,
}

impl TryFrom<PolySpec> for RootPoly {
    type Error = Error;
    fn try_from(s: PolySpec) -> Result<Self> {
        RootPoly::new(
            Complex64::new(s.lead[0], s.lead[1]),
            s.roots.iter().map(|r| Complex64::new(r[0], r[1])).collect(),
        )
    }
}

impl From<RootPoly> for PolySpec {
    fn from(p: RootPoly) -> PolySpec {
        PolySpec {
            lead: [p.lead.re, p.lead.im],
            roots: p.roots.iter().map(|r| [r.re, r.im]).collect(),
        }
    }
}

impl RootPoly {
    pub fn new(lead: Complex64, mut roots: Vec<Complex64>) -> Result<RootPoly> {
        if lead == Complex64::new(0.0, 0.0) || !lead.re.is_finite() || !lead.im.is_finite() {
            return Err(Error::InvalidInput(format!(
                "leading coefficient {lead} must be finite and nonzero"
            )));
        }
        if roots.is_empty() {
            return Err(Error::InvalidInput("degree must be at least 1".into()));
        }
        if roots.iter().any(|r| !r.re.is_finite() || !r.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite root".into()));
        }
        roots.sort_by(|p, q| (p.re, p.im).partial_cmp(&(q.re, q.im)).unwrap());
        let mut grouped: Vec<(Complex64, u32)> = Vec::new();
        for &r in &roots {
            match grouped.last_mut() {
                Some((g, k)) if *g == r => *k += 1,
                _ => grouped.push((r, 1)),
            }
        }
        Ok(RootPoly { lead, roots, grouped })
    }

    /// `lead · (z - root)^degree`.
    pub fn power(lead: Complex64, root: Complex64, degree: u32) -> Result<RootPoly> {
        RootPoly::new(lead, vec![root; degree as usize])
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn lead(&self) -> Complex64 {
        self.lead
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn scale_lead(&self, c: Complex64) -> Result<RootPoly> {
        RootPoly::new(self.lead * c, self.roots.clone())
    }

    /// Largest distance between two roots; zero when all roots coincide.
    pub fn root_spread(&self) -> f64 {
        let g = &self.grouped;
        let mut best = 0.0f64;
        for i in 0..g.len() {
            for j in (i + 1)..g.len() {
                best = best.max((g[j].0 - g[i].0).norm());
            }
        }
        best
    }

    /// `log |P(z)|` and the phase of `P(z)`; a zero value is flagged rather
    /// than producing `-inf`/NaN artifacts downstream.
    pub fn eval_log(&self, z: Complex64) -> LogValue {
        let mut prod = ExtProd::one();
        let mut log_extra = 0.0;
        let mut phase = self.lead.arg();
        for &(r, m) in &self.grouped {
            let f = z - r;
            if f == Complex64::new(0.0, 0.0) {
                return LogValue::ZERO;
            }
            let ns = f.norm_sqr();
            if !(1e-120..=1e120).contains(&ns) {
                // keep the running product in a safe range
                log_extra += m as f64 * f.norm().ln();
                phase += m as f64 * f.arg();
            } else {
                prod.mul_ext(&ExtProd::pow(f, m));
            }
        }
        LogValue {
            log_abs: self.lead.norm().ln() + prod.log_abs() + log_extra,
            phase: wrap_phase(phase + prod.phase()),
        }
    }

    /// `log |P'(z)|` with the switch radius derived from the root spread.
    pub fn eval_derivative_log(&self, z: Complex64) -> LogValue {
        self.eval_derivative_log_scaled(z, 1e-6 * self.root_spread())
    }

    /// `log |P'(z)|` and phase.
    ///
    /// Away from all roots (`min |z - root| > delta_switch`) the logarithmic
    /// derivative `P'(z) = P(z) · Σ mᵢ/(z - ρᵢ)` is used; near a root the
    /// expanded sum `Σ mᵢ (z-ρᵢ)^{mᵢ-1} Π_{k≠i}(z-ρₖ)^{mₖ}` is accumulated
    /// term by term in log-safe arithmetic, which stays exact when `z` hits
    /// a root.
    pub fn eval_derivative_log_scaled(&self, z: Complex64, delta_switch: f64) -> LogValue {
        let min_dist = self
            .grouped
            .iter()
            .map(|(r, _)| (z - r).norm())
            .fold(f64::INFINITY, f64::min);
        if min_dist > delta_switch {
            let mut s = Complex64::new(0.0, 0.0);
            for &(r, m) in &self.grouped {
                s += m as f64 / (z - r);
            }
            if s == Complex64::new(0.0, 0.0) {
                return LogValue::ZERO;
            }
            let p = self.eval_log(z);
            LogValue {
                log_abs: p.log_abs + s.norm().ln(),
                phase: wrap_phase(p.phase + s.arg()),
            }
        } else {
            let lead_phase = self.lead.arg();
            let lead_log = self.lead.norm().ln();
            let mut terms = Vec::with_capacity(self.grouped.len());
            'term: for i in 0..self.grouped.len() {
                let (ri, mi) = self.grouped[i];
                let mut prod = ExtProd::pow(z - ri, mi - 1);
                if mi > 1 && z == ri {
                    continue; // (z-ρᵢ)^{mᵢ-1} = 0
                }
                for (j, &(rj, mj)) in self.grouped.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    if z == rj {
                        continue 'term;
                    }
                    prod.mul_ext(&ExtProd::pow(z - rj, mj));
                }
                terms.push(LogValue {
                    log_abs: (mi as f64).ln() + lead_log + prod.log_abs(),
                    phase: lead_phase + prod.phase(),
                });
            }
            log_polar_sum(&terms)
        }
    }

    /// Log-scale per-root distance sums used by arc Lipschitz bounds:
    /// with `Dᵢ = |anchor - ρᵢ| + radius`, returns
    /// `(Σ mᵢ ln Dᵢ, Σ mᵢ/Dᵢ, Σ mᵢ/Dᵢ²)`.
    fn arc_distance_sums(&self, anchor: Complex64, radius: f64) -> (f64, f64, f64) {
        let mut log_prod = 0.0;
        let mut s1 = 0.0;
        let mut s2 = 0.0;
        for &(r, m) in &self.grouped {
            let d = (anchor - r).norm() + radius;
            let d = d.max(f64::MIN_POSITIVE);
            log_prod += m as f64 * d.ln();
            s1 += m as f64 / d;
            s2 += m as f64 / (d * d);
        }
        (log_prod, s1, s2)
    }
}

// ---------------------------------------------------------------------------
// certified sup norms

/// Certified bracket of a sup norm over a set, in log scale.
///
/// The true norm lies in `[lower, upper]`; `witness` is the boundary sample
/// achieving the lower bound, `mesh` the finest arc length examined, and
/// `capped` records that the evaluation cap stopped refinement before the
/// requested tolerance was met (the bracket is still sound).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(from = "NormSpec", into = "NormSpec")]
pub struct NormEstimate {
    pub log_lower: f64,
    pub log_upper: f64,
    pub witness: Complex64,
    pub mesh: f64,
    pub capped: bool,
}

#[derive(Serialize, Deserialize)]
struct NormSpec {
    lower: f64,
    upper: f64,
    witness: [f64; 2],
    mesh: f64,
    capped: bool,
    log_lower: Option<f64>,
    log_upper: Option<f64>,
}

impl From<NormSpec> for NormEstimate {
    fn from(s: NormSpec) -> Self {
        NormEstimate {
            log_lower: s.log_lower.unwrap_or_else(|| s.lower.ln()),
            log_upper: s.log_upper.unwrap_or_else(|| s.upper.ln()),
            witness: Complex64::new(s.witness[0], s.witness[1]),
            mesh: s.mesh,
            capped: s.capped,
        }
    }
}

impl From<NormEstimate> for NormSpec {
    fn from(n: NormEstimate) -> Self {
        NormSpec {
            lower: n.log_lower.exp(),
            upper: n.log_upper.exp(),
            witness: [n.witness.re, n.witness.im],
            mesh: n.mesh,
            capped: n.capped,
            log_lower: Some(n.log_lower),
            log_upper: Some(n.log_upper),
        }
    }
}

impl NormEstimate {
    /// Linear-scale lower bound (may overflow to `inf` for huge norms).
    pub fn lower(&self) -> f64 {
        self.log_lower.exp()
    }

    pub fn upper(&self) -> f64 {
        self.log_upper.exp()
    }
}

/// Boundary magnitude evaluator: `log|F|` at points plus a valid log-scale
/// bound of `|F'|` on a disk around an anchor. Both are taken with the lead
/// magnitude normalized out, which makes the refinement path invariant under
/// scaling the polynomial.
trait BoundaryFn {
    fn eval_log(&self, z: Complex64) -> f64;
    fn lipschitz_log(&self, anchor: Complex64, radius: f64) -> f64;
}

/// `|P| / |lead|`; Lipschitz bound `|Σⱼ Π_{k≠j}(z-rₖ)| ≤ (Π Dᵢ) · Σ mᵢ/Dᵢ`.
struct MagPoly<'a> {
    poly: &'a RootPoly,
    lead_log: f64,
}

impl BoundaryFn for MagPoly<'_> {
    fn eval_log(&self, z: Complex64) -> f64 {
        self.poly.eval_log(z).log_abs - self.lead_log
    }
    fn lipschitz_log(&self, anchor: Complex64, radius: f64) -> f64 {
        let (log_prod, s1, _) = self.poly.arc_distance_sums(anchor, radius);
        log_prod + s1.ln()
    }
}

/// `|P'| / |lead|`; the second-derivative bound over a multiset of distances
/// is `(Π Dᵢ) · (S₁² - S₂)` with `S₁ = Σ mᵢ/Dᵢ`, `S₂ = Σ mᵢ/Dᵢ²`.
struct MagDeriv<'a> {
    poly: &'a RootPoly,
    lead_log: f64,
    delta_switch: f64,
}

impl BoundaryFn for MagDeriv<'_> {
    fn eval_log(&self, z: Complex64) -> f64 {
        self.poly.eval_derivative_log_scaled(z, self.delta_switch).log_abs - self.lead_log
    }
    fn lipschitz_log(&self, anchor: Complex64, radius: f64) -> f64 {
        let (log_prod, s1, s2) = self.poly.arc_distance_sums(anchor, radius);
        let pair_sum = (s1 * s1 - s2).max(0.0);
        if pair_sum == 0.0 {
            f64::NEG_INFINITY // degree 1: F'' ≡ 0
        } else {
            log_prod + pair_sum.ln()
        }
    }
}

struct Arc {
    s0: f64,
    s1: f64,
    f0: f64,
    f1: f64,
}

struct CertOutcome {
    log_lower: f64,
    log_upper: f64,
    witness: Complex64,
    mesh: f64,
    capped: bool,
    evals: usize,
}

/// Adaptive boundary certification.
///
/// Each arc `[s0, s1]` (parameter gaps bound arc length) gets the sound
/// upper bound `max(f0, f1) + L·len/2` with `L` bounding `|F'|` within
/// `len` of the left endpoint; arcs whose bound cannot beat the incumbent
/// maximum are retired, the rest are bisected. Deterministic: arcs are
/// processed in parameter order, level by level.
fn certify_sup(
    f: &dyn BoundaryFn,
    curve: &BoundaryCurve,
    rel_tol: f64,
    cap: usize,
    slack: f64,
) -> CertOutcome {
    let total = curve.total();
    let coarse = total / 64.0;
    let mut params: Vec<f64> = Vec::new();
    let bps = curve.breakpoints();
    for w in bps.windows(2) {
        let (a, b) = (w[0], w[1]);
        let k = (((b - a) / coarse).ceil() as usize).max(1);
        for s in 0..k {
            params.push(a + (b - a) * s as f64 / k as f64);
        }
    }
    params.push(*bps.last().unwrap());

    let mut evals = 0usize;
    let mut eval_at = |s: f64, evals: &mut usize| {
        *evals += 1;
        f.eval_log(curve.at(s))
    };

    let values: Vec<f64> = params.iter().map(|&s| eval_at(s, &mut evals)).collect();
    let mut lower = f64::NEG_INFINITY;
    let mut witness_s = params[0];
    for (i, &v) in values.iter().enumerate() {
        if v > lower {
            lower = v;
            witness_s = params[i];
        }
    }
    let mut arcs: Vec<Arc> = params
        .windows(2)
        .zip(values.windows(2))
        .map(|(s, v)| Arc { s0: s[0], s1: s[1], f0: v[0], f1: v[1] })
        .collect();

    let target_gap = rel_tol.ln_1p() - 2.0 * slack;
    let mut mesh = arcs
        .iter()
        .map(|a| a.s1 - a.s0)
        .fold(f64::INFINITY, f64::min);
    let mut capped = false;
    let upper;

    loop {
        let mut max_u = f64::NEG_INFINITY;
        let mut active: Vec<(usize, f64)> = Vec::new();
        for (i, arc) in arcs.iter().enumerate() {
            let len = arc.s1 - arc.s0;
            let lip = f.lipschitz_log(curve.at(arc.s0), len);
            let u = log_add_exp(arc.f0.max(arc.f1), lip + (0.5 * len).ln());
            max_u = max_u.max(u);
            if u > lower {
                active.push((i, u));
            }
        }
        if active.is_empty() {
            upper = lower;
            break;
        }
        if max_u <= lower + target_gap {
            upper = max_u.max(lower);
            break;
        }
        if evals + active.len() > cap {
            capped = true;
            upper = max_u.max(lower);
            break;
        }
        let mut next: Vec<Arc> = Vec::with_capacity(2 * active.len());
        for &(i, _) in &active {
            let arc = &arcs[i];
            let sm = 0.5 * (arc.s0 + arc.s1);
            let fm = eval_at(sm, &mut evals);
            if fm > lower {
                lower = fm;
                witness_s = sm;
            }
            mesh = mesh.min(sm - arc.s0);
            next.push(Arc { s0: arc.s0, s1: sm, f0: arc.f0, f1: fm });
            next.push(Arc { s0: sm, s1: arc.s1, f0: fm, f1: arc.f1 });
        }
        arcs = next;
        if mesh < 1e-300 {
            // parameter resolution exhausted; the bracket is still sound
            capped = true;
            let mut max_u = lower;
            for arc in &arcs {
                let len = arc.s1 - arc.s0;
                let lip = f.lipschitz_log(curve.at(arc.s0), len);
                max_u = max_u.max(log_add_exp(arc.f0.max(arc.f1), lip + (0.5 * len).ln()));
            }
            upper = max_u;
            break;
        }
    }

    CertOutcome {
        log_lower: lower - slack,
        log_upper: upper + slack,
        witness: curve.at(witness_s),
        mesh,
        capped,
        evals,
    }
}

fn check_rel_tol(rel_tol: f64) -> Result<()> {
    if !(rel_tol > 1e-12 && rel_tol < 0.5) {
        return Err(Error::InvalidInput(format!(
            "rel_tol {rel_tol} outside (1e-12, 0.5)"
        )));
    }
    Ok(())
}

/// Rounding slack (in log scale, i.e. relative) applied outward to both
/// certificate ends; covers the accumulated floating-point error of the
/// evaluators, which grows with the number of factor multiplications.
fn eval_slack(degree: usize) -> f64 {
    1e-14 + 4.5e-16 * degree as f64
}

/// Certified bracket of `‖P‖_K = sup_K |P|`.
///
/// By the maximum modulus principle the sup is attained on the boundary (on
/// the segment itself for segments); the bracket satisfies
/// `upper/lower ≤ 1 + rel_tol` unless the evaluation cap was hit, which is
/// reported through `capped` rather than as an error.
pub fn sup_norm(poly: &RootPoly, set: &ConvexSet, rel_tol: f64) -> Result<NormEstimate> {
    check_rel_tol(rel_tol)?;
    let slack = eval_slack(poly.degree());
    let f = MagPoly { poly, lead_log: poly.lead.norm().ln() };
    let out = certify_sup(&f, &set.boundary_curve(), rel_tol, NORM_EVAL_CAP, slack);
    let lead_log = poly.lead.norm().ln();
    Ok(NormEstimate {
        log_lower: out.log_lower + lead_log,
        log_upper: out.log_upper + lead_log,
        witness: out.witness,
        mesh: out.mesh,
        capped: out.capped,
    })
}

/// Certified bracket of `‖P'‖_K`.
pub fn sup_norm_deriv(poly: &RootPoly, set: &ConvexSet, rel_tol: f64) -> Result<NormEstimate> {
    check_rel_tol(rel_tol)?;
    let slack = eval_slack(poly.degree());
    let f = MagDeriv {
        poly,
        lead_log: poly.lead.norm().ln(),
        delta_switch: 1e-6 * set.diameter(),
    };
    let out = certify_sup(&f, &set.boundary_curve(), rel_tol, NORM_EVAL_CAP, slack);
    let lead_log = poly.lead.norm().ln();
    Ok(NormEstimate {
        log_lower: out.log_lower + lead_log,
        log_upper: out.log_upper + lead_log,
        witness: out.witness,
        mesh: out.mesh,
        capped: out.capped,
    })
}

/// Certified interval for `‖P'‖_K / ‖P‖_K`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RatioInterval {
    pub lo: f64,
    pub hi: f64,
    pub norm: NormEstimate,
    pub norm_deriv: NormEstimate,
}

impl RatioInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn capped(&self) -> bool {
        self.norm.capped || self.norm_deriv.capped
    }
}

/// Certified `‖P'‖/‖P‖` for `P` with all zeros in `K`.
///
/// Each norm is certified at `rel_tol/2`, so the interval width satisfies
/// `hi/lo ≤ (1 + rel_tol/2)²`. Zeros outside `K` (beyond the geometric
/// tolerance) are a precondition violation reported as
/// [`Error::RootsOutsideSet`].
pub fn markov_ratio(poly: &RootPoly, set: &ConvexSet, rel_tol: f64) -> Result<RatioInterval> {
    check_rel_tol(rel_tol)?;
    let tol = GEOM_TOL * (set.diameter() / 2.0).max(1.0);
    for &r in poly.roots() {
        if !set.contains(r, tol) {
            return Err(Error::RootsOutsideSet(format!(
                "root {r} at distance {:.3e} from the set",
                set.distance(r)
            )));
        }
    }
    let half = 0.5 * rel_tol;
    let norm = sup_norm(poly, set, half)?;
    let norm_deriv = sup_norm_deriv(poly, set, half)?;
    Ok(RatioInterval {
        lo: (norm_deriv.log_lower - norm.log_upper).exp(),
        hi: (norm_deriv.log_upper - norm.log_lower).exp(),
        norm,
        norm_deriv,
    })
}
