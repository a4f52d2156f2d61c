//! Numerical and interval-arithmetic verification of every inequality step
//! behind the upper-bound theorems.
//!
//! Two kinds of checks are produced. The `t`-parameter inequalities of the
//! two subcases are certified with outward-rounded interval arithmetic over
//! whole parameter boxes: a passing interval check means the inequality
//! holds for **all** parameters in the stated box. Checks that depend on a
//! concrete set's polynomial norms (the pointwise claim for `p_m'`, the odd
//! case dichotomy) are verified at sampled points with certified norms and
//! are labelled `sampled`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::constructions::{big_p_poly, check_normalized, p_poly, WIDE_WIDTH};
use crate::error::{Error, Result};
use crate::geometry::ConvexSet;
use crate::polyroot::sup_norm;

// ---------------------------------------------------------------------------
// interval arithmetic with outward rounding

/// Closed interval with outward rounding: every operation's true result set
/// is contained in the output. Arithmetic steps one ulp outward; `exp`/`ln`
/// step three ulps to cover libm error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn up(x: f64, n: u32) -> f64 {
    let mut x = x;
    for _ in 0..n {
        x = x.next_up();
    }
    x
}

fn down(x: f64, n: u32) -> f64 {
    let mut x = x;
    for _ in 0..n {
        x = x.next_down();
    }
    x
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Interval {
        debug_assert!(lo <= hi, "bad interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Interval {
        Interval { lo: x, hi: x }
    }

    /// Tight enclosure of the rational `p/q`.
    pub fn frac(p: f64, q: f64) -> Interval {
        let v = p / q;
        Interval { lo: down(v, 1), hi: up(v, 1) }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn add(self, o: Interval) -> Interval {
        Interval { lo: down(self.lo + o.lo, 1), hi: up(self.hi + o.hi, 1) }
    }

    pub fn sub(self, o: Interval) -> Interval {
        Interval { lo: down(self.lo - o.hi, 1), hi: up(self.hi - o.lo, 1) }
    }

    pub fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }

    pub fn mul(self, o: Interval) -> Interval {
        let c = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo: down(lo, 1), hi: up(hi, 1) }
    }

    /// Division by an interval not containing zero.
    pub fn div(self, o: Interval) -> Interval {
        assert!(o.lo > 0.0 || o.hi < 0.0, "division by interval containing 0");
        let c = [self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi];
        let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo: down(lo, 1), hi: up(hi, 1) }
    }

    pub fn sqr(self) -> Interval {
        let (lo, hi) = if self.lo >= 0.0 {
            (self.lo * self.lo, self.hi * self.hi)
        } else if self.hi <= 0.0 {
            (self.hi * self.hi, self.lo * self.lo)
        } else {
            (0.0, (self.lo * self.lo).max(self.hi * self.hi))
        };
        Interval { lo: down(lo, 1).max(0.0), hi: up(hi, 1) }
    }

    pub fn exp(self) -> Interval {
        Interval {
            lo: down(self.lo.exp(), 3).max(0.0),
            hi: up(self.hi.exp(), 3),
        }
    }

    /// Natural log; the nonpositive part of the domain maps to `-inf`
    /// (sound for the `exp(k·ln)` power chains used here, whose inputs are
    /// nonnegative up to outward-rounding slop).
    pub fn ln(self) -> Interval {
        let lo = if self.lo > 0.0 { down(self.lo.ln(), 3) } else { f64::NEG_INFINITY };
        let hi = if self.hi > 0.0 { up(self.hi.ln(), 3) } else { f64::NEG_INFINITY };
        Interval { lo, hi }
    }

    /// `x^k` for nonnegative `x` via `exp(k·ln x)` with directed rounding on
    /// both factors; exponents around 10³ make this tighter to control than
    /// repeated squaring.
    pub fn pow_log(self, k: u32) -> Interval {
        debug_assert!(self.hi >= 0.0);
        if k == 0 {
            return Interval::point(1.0);
        }
        let x = Interval { lo: self.lo.max(0.0), hi: self.hi.max(0.0) };
        let l = x.ln();
        let kf = k as f64;
        Interval {
            lo: if l.lo == f64::NEG_INFINITY { 0.0 } else { down((kf * l.lo).exp(), 3).max(0.0) },
            hi: if l.hi == f64::NEG_INFINITY { 0.0 } else { up((kf * l.hi).exp(), 3) },
        }
    }

    pub fn max_with(self, o: Interval) -> Interval {
        Interval { lo: self.lo.max(o.lo), hi: self.hi.max(o.hi) }
    }

    fn split(self) -> (Interval, Interval) {
        let mid = 0.5 * (self.lo + self.hi);
        (Interval::new(self.lo, mid), Interval::new(mid, self.hi))
    }
}

/// Certify `inf f ≥ 0` (or `> 0` when `strict`) over a box by adaptive
/// bisection; returns the smallest certified enclosure lower bound, or the
/// first sub-box that could not be certified.
pub fn certify_nonneg(
    f: &dyn Fn(Interval) -> Interval,
    domain: Interval,
    strict: bool,
    max_depth: u32,
) -> std::result::Result<f64, Interval> {
    let mut stack = vec![(domain, 0u32)];
    let mut margin = f64::INFINITY;
    while let Some((b, depth)) = stack.pop() {
        let v = f(b);
        let ok = if strict { v.lo > 0.0 } else { v.lo >= 0.0 };
        if ok {
            margin = margin.min(v.lo);
            continue;
        }
        if v.hi < 0.0 || depth >= max_depth || b.width() == 0.0 {
            return Err(b);
        }
        let (l, r) = b.split();
        stack.push((r, depth + 1));
        stack.push((l, depth + 1));
    }
    Ok(margin)
}

// ---------------------------------------------------------------------------
// the proof's auxiliary functions

/// `h(t) = (1 + w² - t)² + 4w²t`.
pub fn h_func(t: Interval, w: Interval) -> Interval {
    let w2 = w.sqr();
    let a = Interval::point(1.0).add(w2).sub(t).sqr();
    let b = Interval::point(4.0).mul(w2).mul(t);
    a.add(b)
}

/// `g(t) = (t + w²)·h(t)^{m-1}` and its majorant
/// `g₁(t) = (t + w²)·(1 + 2w² - t)^{m-1}`.
pub fn g_funcs(t: Interval, w: Interval, m: u32) -> (Interval, Interval) {
    assert!(m >= 2, "g_funcs needs m ≥ 2");
    let w2 = w.sqr();
    let front = t.add(w2);
    let g = front.mul(h_func(t, w).pow_log(m - 1));
    let base = Interval::point(1.0)
        .add(Interval::point(2.0).mul(w2))
        .sub(t);
    let g1 = front.mul(base.pow_log(m - 1));
    (g, g1)
}

/// The stationary point `t* = (1 - (m-3)w²)/m` of `g₁` and the branch
/// predicate. `t* > 2w²` is algebraically equivalent to `m - 1 < 1/(3w²)`,
/// i.e. `3(m-1)w² < 1`; the predicate is evaluated in the multiplied-out
/// form, which is the same comparison for both statements.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct TStar {
    pub value: f64,
    /// `t* > 2w²`: the maximum of `g₁` sits inside the interval.
    pub interior_branch: bool,
}

pub fn t_star(m: u32, w: f64) -> TStar {
    let mf = m as f64;
    TStar {
        value: (1.0 - (mf - 3.0) * w * w) / mf,
        interior_branch: 3.0 * (mf - 1.0) * (w * w) < 1.0,
    }
}

// ---------------------------------------------------------------------------
// check records

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Outward-rounded interval certificate over the whole parameter box.
    Interval,
    /// Verified at sampled points (with certified norms where needed).
    Sampled,
}

/// One ledger entry. `margin` is the smallest slack encountered; for norm
/// inequalities it is measured in log scale (relative slack).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub params: BTreeMap<String, Value>,
    pub status: CheckStatus,
    pub margin: f64,
    pub method: Method,
}

impl CheckRecord {
    fn new(
        id: &str,
        params: BTreeMap<String, Value>,
        method: Method,
        pass: bool,
        margin: f64,
    ) -> CheckRecord {
        CheckRecord {
            check_id: id.to_string(),
            params,
            status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
            margin,
            method,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Pass/fail ledger over a parameter grid; serializes as the bare array of
/// records.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProofReport {
    pub checks: Vec<CheckRecord>,
}

impl ProofReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    fn sort(&mut self) {
        self.checks.sort_by(|a, b| {
            (a.check_id.as_str(), format!("{:?}", a.params))
                .cmp(&(b.check_id.as_str(), format!("{:?}", b.params)))
        });
    }
}

fn box_params(w: Interval, m: u32) -> BTreeMap<String, Value> {
    let mut p = BTreeMap::new();
    p.insert("w_lo".into(), json!(w.lo));
    p.insert("w_hi".into(), json!(w.hi));
    p.insert("m".into(), json!(m));
    p
}

fn interval_record(
    id: &str,
    params: BTreeMap<String, Value>,
    outcome: std::result::Result<f64, Interval>,
) -> CheckRecord {
    match outcome {
        Ok(margin) => CheckRecord::new(id, params, Method::Interval, true, margin),
        Err(bad) => {
            let mut params = params;
            params.insert("violating_box_lo".into(), json!(bad.lo));
            params.insert("violating_box_hi".into(), json!(bad.hi));
            CheckRecord::new(id, params, Method::Interval, false, f64::NEG_INFINITY)
        }
    }
}

fn check_w_box(w_box: Interval) -> Result<()> {
    if !(w_box.lo >= 0.0 && w_box.hi < WIDE_WIDTH) {
        return Err(Error::InvalidInput(format!(
            "w box [{}, {}] must sit inside [0, 3/7)",
            w_box.lo, w_box.hi
        )));
    }
    Ok(())
}

fn check_m(m: u32) -> Result<()> {
    if m < 100 {
        return Err(Error::InvalidInput(format!("m = {m} must be ≥ 100")));
    }
    Ok(())
}

const BISECT_DEPTH: u32 = 48;

/// Evenly spaced sample values in `[lo, hi]` (inclusive).
fn sample_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1).max(1) as f64)
        .collect()
}

// ---------------------------------------------------------------------------
// subcase certificates

/// Subcase `1 - w ≤ t ≤ 1`: certifies the chain
/// `h(1) ≤ h(1-w) ≤ 5w² < 1`, the 9th-power drop `5·(45/49)^8 ≤ 2.53`, and
/// the conclusion `g(t) ≤ (1 + 9/49)·2.53·w² ≤ 3w²`.
pub fn verify_subcase1(w_box: Interval, m: u32) -> Result<Vec<CheckRecord>> {
    check_w_box(w_box)?;
    check_m(m)?;
    let mut out = Vec::new();

    // h(1-w) - h(1) = w²(1 - 2w) ≥ 0 (endpoint ordering, factored form)
    out.push(interval_record(
        "subcase1/h_endpoint_order",
        box_params(w_box, m),
        certify_nonneg(
            &|w| w.sqr().mul(Interval::point(1.0).sub(Interval::point(2.0).mul(w))),
            w_box,
            false,
            BISECT_DEPTH,
        ),
    ));

    // 5w² - h(1-w) = w³(2 - w) ≥ 0
    out.push(interval_record(
        "subcase1/h_at_1mw_le_5w2",
        box_params(w_box, m),
        certify_nonneg(
            &|w| w.sqr().mul(w).mul(Interval::point(2.0).sub(w)),
            w_box,
            false,
            BISECT_DEPTH,
        ),
    ));

    // 1 - 5w² > 0 (so powers of h only shrink)
    out.push(interval_record(
        "subcase1/h_below_one",
        box_params(w_box, m),
        certify_nonneg(
            &|w| Interval::point(1.0).sub(Interval::point(5.0).mul(w.sqr())),
            w_box,
            true,
            BISECT_DEPTH,
        ),
    ));

    // 45/49 - 5w² ≥ 0 (the power drop's constant cap on h)
    out.push(interval_record(
        "subcase1/h_le_45_49",
        box_params(w_box, m),
        certify_nonneg(
            &|w| Interval::frac(45.0, 49.0).sub(Interval::point(5.0).mul(w.sqr())),
            w_box,
            false,
            BISECT_DEPTH,
        ),
    ));

    // h is a parabola in t with leading coefficient 1: second difference
    // h(t-δ) - 2h(t) + h(t+δ) = 2δ² exactly
    {
        let delta = 1e-4;
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(w_box.lo, w_box.hi, 9) {
            for &t in &sample_grid(1.0 - w, 1.0, 9) {
                let hv = |t: f64| {
                    let x = 1.0 + w * w - t;
                    x * x + 4.0 * w * w * t
                };
                let dd = hv(t - delta) - 2.0 * hv(t) + hv(t + delta);
                let err = (dd - 2.0 * delta * delta).abs();
                pass &= err <= 1e-12;
                worst = worst.min(2.0 * delta * delta - err);
            }
        }
        out.push(CheckRecord::new(
            "subcase1/h_convex_in_t",
            box_params(w_box, m),
            Method::Sampled,
            pass,
            worst,
        ));
    }

    // 2.53 - 5·(45/49)^8 ≥ 0
    out.push(interval_record(
        "subcase1/power_drop_constant",
        box_params(w_box, m),
        certify_nonneg(
            &|_| {
                Interval::point(2.53)
                    .sub(Interval::point(5.0).mul(Interval::frac(45.0, 49.0).pow_log(8)))
            },
            Interval::point(0.0),
            false,
            1,
        ),
    ));

    // 3 - (1 + 9/49)·2.53 ≥ 0
    out.push(interval_record(
        "subcase1/final_constant",
        box_params(w_box, m),
        certify_nonneg(
            &|_| {
                Interval::point(3.0).sub(
                    Interval::point(1.0)
                        .add(Interval::frac(9.0, 49.0))
                        .mul(Interval::point(2.53)),
                )
            },
            Interval::point(0.0),
            false,
            1,
        ),
    ));

    // direct spot check of the conclusion g(t) ≤ 3w² on the region
    {
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(w_box.lo.max(1e-6), w_box.hi, 7) {
            for &t in &sample_grid(1.0 - w, 1.0, 7) {
                let (g, _) = g_funcs(Interval::point(t), Interval::point(w), m);
                let slack = 3.0 * w * w - g.hi;
                pass &= slack >= -1e-15;
                worst = worst.min(slack);
            }
        }
        out.push(CheckRecord::new(
            "subcase1/g_le_3w2_spot",
            box_params(w_box, m),
            Method::Sampled,
            pass,
            worst,
        ));
    }

    // conclusion: convexity pins h at the endpoints, the rest is the
    // certified constant chain, so g ≤ 3w² for all t in [1-w, 1], w in box
    let chain_margin = out.iter().map(|c| c.margin).fold(f64::INFINITY, f64::min);
    let chain_pass = out.iter().all(|c| c.passed());
    out.push(CheckRecord::new(
        "subcase1/conclusion_g_le_3w2",
        box_params(w_box, m),
        Method::Interval,
        chain_pass,
        chain_margin,
    ));
    Ok(out)
}

/// Subcase `2w² ≤ t ≤ 1 - w`: certifies the majorant bound
/// `h(t) ≤ 1 + 2w² - t` through the convexity endpoints, then the
/// `g₁` branch analysis, yielding `g(t) ≤ max{3w², 2/m}`.
pub fn verify_subcase2(w_box: Interval, m: u32) -> Result<Vec<CheckRecord>> {
    check_w_box(w_box)?;
    check_m(m)?;
    let mut out = Vec::new();

    // the t-interval is nonempty: 1 - w - 2w² > 0
    out.push(interval_record(
        "subcase2/domain_nonempty",
        box_params(w_box, m),
        certify_nonneg(
            &|w| {
                Interval::point(1.0)
                    .sub(w)
                    .sub(Interval::point(2.0).mul(w.sqr()))
            },
            w_box,
            true,
            BISECT_DEPTH,
        ),
    ));

    // identity h(2w²) + 2w² = 1 + 9w⁴ at sampled points
    {
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(w_box.lo, w_box.hi, 17) {
            let t = 2.0 * w * w;
            let x = 1.0 + w * w - t;
            let h = x * x + 4.0 * w * w * t;
            let err = (h + t - (1.0 + 9.0 * w.powi(4))).abs();
            pass &= err <= 1e-12;
            worst = worst.min(1e-12 - err);
        }
        out.push(CheckRecord::new(
            "subcase2/identity_h_2w2",
            box_params(w_box, m),
            Method::Sampled,
            pass,
            worst,
        ));
    }

    // endpoint A: (1 + 2w²) - (h(2w²) + 2w²) = 2w² - 9w⁴ = w²(2 - 9w²) ≥ 0
    out.push(interval_record(
        "subcase2/endpoint_2w2",
        box_params(w_box, m),
        certify_nonneg(
            &|w| w.sqr().mul(Interval::point(2.0).sub(Interval::point(9.0).mul(w.sqr()))),
            w_box,
            false,
            BISECT_DEPTH,
        ),
    ));

    // endpoint B: (1 + 2w²) - (h(1-w) + 1 - w) = w((1-w)³ - w²) ≥ 0
    out.push(interval_record(
        "subcase2/endpoint_1mw",
        box_params(w_box, m),
        certify_nonneg(
            &|w| {
                let omw = Interval::point(1.0).sub(w);
                w.mul(omw.sqr().mul(omw).sub(w.sqr()))
            },
            w_box,
            false,
            BISECT_DEPTH,
        ),
    ));

    // h(t) + t is a parabola with leading coefficient 1 (convex): sampled
    // second difference again equals 2δ²
    {
        let delta = 1e-4;
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(w_box.lo, w_box.hi, 9) {
            let (t0, t1) = (2.0 * w * w, 1.0 - w);
            for &t in &sample_grid(t0, t1, 9) {
                let f = |t: f64| {
                    let x = 1.0 + w * w - t;
                    x * x + 4.0 * w * w * t + t
                };
                let dd = f(t - delta) - 2.0 * f(t) + f(t + delta);
                let err = (dd - 2.0 * delta * delta).abs();
                pass &= err <= 1e-12;
                worst = worst.min(2.0 * delta * delta - err);
            }
        }
        out.push(CheckRecord::new(
            "subcase2/h_plus_t_convex",
            box_params(w_box, m),
            Method::Sampled,
            pass,
            worst,
        ));
    }

    // Eq (13): h(t) ≤ 1 + 2w² - t on [2w², 1-w]; certified by convexity of
    // h(t)+t and the two endpoint checks above
    let eq13_pass = out.iter().all(|c| c.passed());
    let eq13_margin = out.iter().map(|c| c.margin).fold(f64::INFINITY, f64::min);
    out.push(CheckRecord::new(
        "subcase2/eq13_majorant",
        box_params(w_box, m),
        Method::Interval,
        eq13_pass,
        eq13_margin,
    ));

    // spot samples of Eq (13) directly
    {
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(w_box.lo, w_box.hi, 7) {
            for &t in &sample_grid(2.0 * w * w, 1.0 - w, 7) {
                let h = h_func(Interval::point(t), Interval::point(w));
                let slack = (1.0 + 2.0 * w * w - t) - h.hi;
                pass &= slack >= -1e-14;
                worst = worst.min(slack);
            }
        }
        out.push(CheckRecord::new(
            "subcase2/eq13_spot",
            box_params(w_box, m),
            Method::Sampled,
            pass,
            worst,
        ));
    }

    // g₁'(t) = m(1 + 2w² - t)^{m-2}(t* - t): finite-difference validation
    {
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(w_box.lo, w_box.hi, 5) {
            let ts = t_star(m, w).value;
            let (t0, t1) = (2.0 * w * w + 1e-3, (1.0 - w) - 1e-3);
            if t0 >= t1 {
                continue;
            }
            for &t in &sample_grid(t0, t1, 5) {
                let g1 = |t: f64| (t + w * w) * (1.0 + 2.0 * w * w - t).powi(m as i32 - 1);
                let delta = 1e-7;
                let fd = (g1(t + delta) - g1(t - delta)) / (2.0 * delta);
                let closed = m as f64 * (1.0 + 2.0 * w * w - t).powi(m as i32 - 2) * (ts - t);
                let scale = fd.abs().max(closed.abs()).max(1e-300);
                let rel = (fd - closed).abs() / scale;
                pass &= rel <= 1e-5;
                worst = worst.min(1e-5 - rel);
            }
        }
        out.push(CheckRecord::new(
            "subcase2/g1_derivative_identity",
            box_params(w_box, m),
            Method::Sampled,
            pass,
            worst,
        ));
    }

    // identity g₁(2w²) = 3w² at sampled points (the base collapses to 1)
    {
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(w_box.lo, w_box.hi, 17) {
            let t = 2.0 * w * w;
            let g1 = (t + w * w) * (1.0 + 2.0 * w * w - t).powi(m as i32 - 1);
            let err = (g1 - 3.0 * w * w).abs();
            let tol = 1e-12 * (3.0 * w * w).max(1e-30) + 1e-300;
            pass &= err <= tol;
            worst = worst.min(tol - err);
        }
        out.push(CheckRecord::new(
            "subcase2/identity_g1_2w2",
            box_params(w_box, m),
            Method::Sampled,
            pass,
            worst,
        ));
    }

    // branch split at w* = 1/√(3(m-1)): t* ≤ 2w² (monotone) above it,
    // t* > 2w² (interior max) below it
    let wsplit = 1.0 / (3.0 * (m as f64 - 1.0)).sqrt();

    if w_box.hi > wsplit {
        // monotone branch: 3(m-1)w² ≥ 1 ⟺ t* ≤ 2w², so g₁ is
        // non-increasing and g ≤ g₁(2w²) = 3w²
        let sub = Interval::new(w_box.lo.max(wsplit), w_box.hi);
        out.push(interval_record(
            "subcase2/monotone_branch",
            box_params(sub, m),
            certify_nonneg(
                &|w| {
                    Interval::point(3.0 * (m as f64 - 1.0))
                        .mul(w.sqr())
                        .sub(Interval::point(1.0))
                },
                sub,
                false,
                BISECT_DEPTH,
            ),
        ));
    }

    if w_box.lo < wsplit {
        // interior branch: 1 - 3(m-1)w² ≥ 0, so the max of g₁ is
        // g₁(t*) ≤ t* + w² = (1 + 3w²)/m ≤ (76/49)/m < 2/m
        let sub = Interval::new(w_box.lo, w_box.hi.min(wsplit));
        out.push(interval_record(
            "subcase2/interior_branch",
            box_params(sub, m),
            certify_nonneg(
                &|w| {
                    Interval::point(1.0)
                        .sub(Interval::point(3.0 * (m as f64 - 1.0)).mul(w.sqr()))
                },
                sub,
                false,
                BISECT_DEPTH,
            ),
        ));
        // identity t* + w² = (1 + 3w²)/m
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(sub.lo, sub.hi, 9) {
            let ts = t_star(m, w).value;
            let err = (ts + w * w - (1.0 + 3.0 * w * w) / m as f64).abs();
            pass &= err <= 1e-15;
            worst = worst.min(1e-15 - err);
        }
        out.push(CheckRecord::new(
            "subcase2/identity_tstar_plus_w2",
            box_params(sub, m),
            Method::Sampled,
            pass,
            worst,
        ));
        // (76/49) - (1 + 3w²) ≥ 0 on the box and 2 - 76/49 > 0
        out.push(interval_record(
            "subcase2/interior_constant",
            box_params(sub, m),
            certify_nonneg(
                &|w| {
                    Interval::frac(76.0, 49.0)
                        .sub(Interval::point(1.0).add(Interval::point(3.0).mul(w.sqr())))
                },
                sub,
                false,
                BISECT_DEPTH,
            ),
        ));
        out.push(interval_record(
            "subcase2/interior_lt_2_over_m",
            box_params(sub, m),
            certify_nonneg(
                &|_| Interval::point(2.0).sub(Interval::frac(76.0, 49.0)),
                Interval::point(0.0),
                true,
                1,
            ),
        ));
    }

    // combined conclusion g ≤ max{3w², 2/m} on [2w², 1-w] × w_box
    let pass = out.iter().all(|c| c.passed());
    let margin = out.iter().map(|c| c.margin).fold(f64::INFINITY, f64::min);
    out.push(CheckRecord::new(
        "subcase2/conclusion_g_le_max",
        box_params(w_box, m),
        Method::Interval,
        pass,
        margin,
    ));

    // spot samples of the combined bound, including the w → 0 limit where
    // the bound reduces to 2/m
    {
        let mut worst = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(w_box.lo, w_box.hi, 7) {
            let bound = (3.0 * w * w).max(2.0 / m as f64);
            for &t in &sample_grid(2.0 * w * w, 1.0 - w, 7) {
                let (g, g1) = g_funcs(Interval::point(t), Interval::point(w), m);
                let slack = bound - g.hi.min(g1.hi);
                pass &= slack >= -1e-14;
                worst = worst.min(slack);
            }
        }
        out.push(CheckRecord::new(
            "subcase2/g_le_max_spot",
            box_params(w_box, m),
            Method::Sampled,
            pass,
            worst,
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// sampled checks on concrete sets

/// Short label for a set in check parameters.
pub fn set_label(set: &ConvexSet) -> String {
    match set {
        ConvexSet::Polygon(v) => format!("polygon[{}]", v.len()),
        ConvexSet::Disk { radius, .. } => format!("disk(r={radius})"),
        ConvexSet::Ellipse { a, b, .. } => format!("ellipse(a={a},b={b})"),
        ConvexSet::Diamond { eps } => format!("diamond(eps={eps})"),
        ConvexSet::Segment { .. } => "segment".into(),
    }
}

fn set_params(set: &ConvexSet, m: u32, samples: usize, seed: u64) -> BTreeMap<String, Value> {
    let mut p = BTreeMap::new();
    p.insert("set".into(), json!(set_label(set)));
    p.insert("m".into(), json!(m));
    p.insert("samples".into(), json!(samples));
    p.insert("seed".into(), json!(seed));
    p
}

/// Boundary plus rejection-sampled interior points, deterministic in `seed`.
fn sample_points(set: &ConvexSet, count: usize, seed: u64) -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(count);
    let boundary_count = (count / 2).max(4);
    let spacing = 4.0 * set.diameter() / boundary_count as f64;
    if let Ok(b) = set.boundary_points(spacing) {
        pts.extend(b.into_iter().take(boundary_count));
    }
    let (x0, y0, x1, y1) = set.bounding_box();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while pts.len() < count {
        let z = Complex64::new(rng.gen_range(x0..=x1), rng.gen_range(y0..=y1));
        if set.contains(z, 0.0) {
            pts.push(z);
        }
    }
    pts
}

/// The pointwise claim for even degree: `R(z₀) = |p_m'(z₀)|/‖p_m‖ ≤
/// √3·max{2mw, 2√(2m)}` over boundary and interior samples, split by the
/// `|x₀| ≥ √2·w` region analysis.
pub fn verify_claim_11(
    k1: &ConvexSet,
    m: u32,
    sample_count: usize,
    seed: u64,
) -> Result<Vec<CheckRecord>> {
    check_normalized(k1)?;
    check_m(m)?;
    let w = k1.min_width();
    if w >= WIDE_WIDTH {
        return Err(Error::InvalidInput(format!(
            "width {w} ≥ 3/7: this set routes to the (z-1)^n case, not the claim"
        )));
    }
    let p = p_poly(m)?;
    let norm = sup_norm(&p, k1, 1e-6)?;
    let pts = sample_points(k1, sample_count, seed);
    let bound = 3f64.sqrt() * (2.0 * m as f64 * w).max(2.0 * (2.0 * m as f64).sqrt());

    let mut out = Vec::new();
    let mut near = (f64::INFINITY, true, 0usize);
    let mut far = (f64::INFINITY, true, 0usize);
    let mut eq10 = (f64::INFINITY, true);
    let mut claim = (f64::INFINITY, true);
    for &z in &pts {
        let r_hi = (p.eval_derivative_log(z).log_abs - norm.log_lower).exp();
        // Eq (10): R(z) ≤ 2m|z|
        let s10 = 2.0 * m as f64 * z.norm() * (1.0 + 1e-9) - r_hi;
        eq10.1 &= s10 >= 0.0;
        eq10.0 = eq10.0.min(s10);
        // region split at |x₀| = √2·w
        if z.re.abs() <= 2f64.sqrt() * w {
            // |z₀| ≤ √3·w here, so Eq (10) already gives √3·2mw
            let s = 3f64.sqrt() * 2.0 * m as f64 * w * (1.0 + 1e-9) - r_hi;
            near.1 &= s >= 0.0;
            near.0 = near.0.min(s);
            near.2 += 1;
        } else {
            let s = bound - r_hi;
            far.1 &= s >= 0.0;
            far.0 = far.0.min(s);
            far.2 += 1;
        }
        let s = bound * (1.0 + 1e-9) - r_hi;
        claim.1 &= s >= 0.0;
        claim.0 = claim.0.min(s);
    }

    let mut params = set_params(k1, m, sample_count, seed);
    params.insert("w".into(), json!(w));
    out.push(CheckRecord::new(
        "claim11/eq10_r_le_2mz",
        params.clone(),
        Method::Sampled,
        eq10.1,
        eq10.0,
    ));
    let mut pn = params.clone();
    pn.insert("region_samples".into(), json!(near.2));
    out.push(CheckRecord::new(
        "claim11/near_axis",
        pn,
        Method::Sampled,
        near.1,
        near.0,
    ));
    let mut pf = params.clone();
    pf.insert("region_samples".into(), json!(far.2));
    out.push(CheckRecord::new(
        "claim11/off_axis",
        pf,
        Method::Sampled,
        far.1,
        far.0,
    ));
    params.insert("bound".into(), json!(bound));
    out.push(CheckRecord::new(
        "claim11/r_le_sqrt3_max",
        params,
        Method::Sampled,
        claim.1,
        claim.0,
    ));
    Ok(out)
}

/// The odd-degree dichotomy: constant identity `2α₀√3 = 4√3 + 1/14 < 7`,
/// the norm comparison `‖p_m‖ ≤ 2‖P_m‖`, the per-sample branch bounds, and
/// the final `|P_m'(z)|/‖P_m‖ ≤ 7·max{wn, 2√n}` with `n = 2m + 1`.
pub fn verify_theorem_1b(
    k1: &ConvexSet,
    m: u32,
    sample_count: usize,
    seed: u64,
) -> Result<Vec<CheckRecord>> {
    check_normalized(k1)?;
    check_m(m)?;
    let w = k1.min_width();
    if w >= WIDE_WIDTH {
        return Err(Error::InvalidInput(format!(
            "width {w} ≥ 3/7: this set routes to the (z-1)^n case"
        )));
    }
    let n = 2.0 * m as f64 + 1.0;
    let alpha0 = 2.0 + 1.0 / (28.0 * 3f64.sqrt());
    let constant = 2.0 * alpha0 * 3f64.sqrt();

    let mut out = Vec::new();
    let base = set_params(k1, m, sample_count, seed);

    // 2α₀√3 = 4√3 + 1/14 = 6.9996… < 7
    {
        let rhs = 4.0 * 3f64.sqrt() + 1.0 / 14.0;
        let ident = (constant - rhs).abs();
        let mut p = base.clone();
        p.insert("constant".into(), json!(constant));
        out.push(CheckRecord::new(
            "thm1b/alpha0_identity",
            p,
            Method::Sampled,
            ident <= 1e-12 && constant < 7.0,
            (7.0 - constant).min(1e-12 - ident),
        ));
    }

    // √n ≥ √201 > 14
    out.push(CheckRecord::new(
        "thm1b/sqrt_n_gate",
        base.clone(),
        Method::Sampled,
        n.sqrt() > 14.0,
        n.sqrt() - 14.0,
    ));

    let p = p_poly(m)?;
    let bp = big_p_poly(m)?;
    let norm_p = sup_norm(&p, k1, 1e-6)?;
    let norm_bp = sup_norm(&bp, k1, 1e-6)?;

    // Eq (14): ‖p_m‖ ≤ 2‖P_m‖, margin in log scale
    {
        let slack = 2f64.ln() + norm_bp.log_lower - norm_p.log_upper;
        out.push(CheckRecord::new(
            "thm1b/eq14_pm_le_2Pm",
            base.clone(),
            Method::Sampled,
            slack >= 0.0,
            slack,
        ));
    }

    let pts = sample_points(k1, sample_count, seed);
    let final_bound = 7.0 * (w * n).max(2.0 * n.sqrt());
    let mut branch_a = (f64::INFINITY, true, 0usize);
    let mut branch_b = (f64::INFINITY, true, 0usize);
    let mut fin = (f64::INFINITY, true);
    for &z in &pts {
        let rp_hi = (bp.eval_derivative_log(z).log_abs - norm_bp.log_lower).exp();
        let predicate =
            (z - 1.0).norm() * ((z + 1.0) / (2.0 * m as f64) + z).norm() <= alpha0 * z.norm();
        if predicate {
            // |P'(z)|/‖P‖ ≤ 2α₀·|p'(z)|/‖p‖ through Eq (14)
            let rhs = 2.0 * alpha0 * (p.eval_derivative_log(z).log_abs - norm_p.log_lower).exp();
            let s = rhs * (1.0 + 3e-6) - rp_hi;
            branch_a.1 &= s >= 0.0;
            branch_a.0 = branch_a.0.min(s);
            branch_a.2 += 1;
        } else {
            // the failed predicate plus |z-1| ≤ 2 force 2m|z| < 2|z+1|/(α₀-2)
            let lhs = 2.0 * m as f64 * z.norm();
            let rhs = 2.0 * (z + 1.0).norm() / (alpha0 - 2.0);
            let s1 = rhs * (1.0 + 1e-9) - lhs;
            // and the branch bound |P'(z)|/‖P‖ ≤ 2√n·(1/14)·α₀/(α₀-2)
            let cap = 2.0 * n.sqrt() / 14.0 * alpha0 / (alpha0 - 2.0);
            let s2 = cap * (1.0 + 3e-6) - rp_hi;
            branch_b.1 &= s1 >= 0.0 && s2 >= 0.0;
            branch_b.0 = branch_b.0.min(s1.min(s2));
            branch_b.2 += 1;
        }
        let s = final_bound - rp_hi;
        fin.1 &= s >= 0.0;
        fin.0 = fin.0.min(s);
    }
    let mut pa = base.clone();
    pa.insert("branch_samples".into(), json!(branch_a.2));
    out.push(CheckRecord::new(
        "thm1b/branch_product_small",
        pa,
        Method::Sampled,
        branch_a.1,
        branch_a.0,
    ));
    let mut pb = base.clone();
    pb.insert("branch_samples".into(), json!(branch_b.2));
    out.push(CheckRecord::new(
        "thm1b/branch_product_large",
        pb,
        Method::Sampled,
        branch_b.1,
        branch_b.0,
    ));
    let mut pf = base.clone();
    pf.insert("bound".into(), json!(final_bound));
    out.push(CheckRecord::new(
        "thm1b/final_le_7max",
        pf,
        Method::Sampled,
        fin.1,
        fin.0,
    ));
    Ok(out)
}

// ---------------------------------------------------------------------------
// aggregation

/// Options for the aggregate certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateOptions {
    /// Ascending `w` breakpoints; consecutive pairs form the certified
    /// boxes. Must stay inside `[0, 3/7)`.
    pub w_grid: Vec<f64>,
    pub m_set: Vec<u32>,
    pub sets: Vec<ConvexSet>,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        let mut w_grid: Vec<f64> = (0..=85).map(|k| k as f64 * 0.005).collect();
        w_grid.push(WIDE_WIDTH - 1e-9);
        CertificateOptions {
            w_grid,
            m_set: vec![100, 200, 1000],
            sets: default_set_family(),
            samples: 10_000,
            seed: 1,
        }
    }
}

/// Four normalized narrow sets: two diamonds, a flat ellipse and a flat
/// hexagon, all with `d = 2`, `±1` on the boundary and `w < 3/7`.
pub fn default_set_family() -> Vec<ConvexSet> {
    let hexagon = ConvexSet::polygon(&[
        Complex64::new(-1.0, 0.0),
        Complex64::new(-0.4, -0.12),
        Complex64::new(0.4, -0.12),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.4, 0.12),
        Complex64::new(-0.4, 0.12),
    ])
    .expect("hexagon is valid");
    vec![
        ConvexSet::diamond(0.05).expect("valid"),
        ConvexSet::diamond(0.2).expect("valid"),
        ConvexSet::ellipse(Complex64::new(0.0, 0.0), 1.0, 0.1, 0.0).expect("valid"),
        hexagon,
    ]
}

/// Runs the complete ledger: strip bounds, norm floors, the `R(z) ≤ 2m|z|`
/// estimate, the small-`n`/wide-set constant chain, both subcases over the
/// `w`-boxes, the pointwise claim and the odd-degree dichotomy on each set,
/// and the gluing inequalities between the subcase bounds and the final
/// constants. Overall pass iff every entry passes.
pub fn proof_certificate(opts: &CertificateOptions) -> Result<ProofReport> {
    if opts.w_grid.len() < 2 || opts.m_set.is_empty() || opts.sets.is_empty() {
        return Err(Error::InvalidInput("empty certificate grid".into()));
    }
    let mut checks: Vec<CheckRecord> = Vec::new();

    // Eq (8) strip bounds: |Im z| ≤ w(K₁), |Re z| ≤ 1 on normalized sets
    for set in &opts.sets {
        let (k1, _) = set.normalize()?;
        let w = k1.min_width();
        let perimeter = 4.0 * k1.diameter();
        let pts = k1.boundary_points(perimeter / 10_000.0)?;
        let mut margin = f64::INFINITY;
        let mut pass = true;
        for z in pts {
            let s = (w + 1e-9 - z.im.abs()).min(1.0 + 1e-9 - z.re.abs());
            pass &= s >= 0.0;
            margin = margin.min(s);
        }
        let mut p = BTreeMap::new();
        p.insert("set".into(), json!(set_label(&k1)));
        p.insert("w".into(), json!(w));
        checks.push(CheckRecord::new("eq8/strip_bounds", p, Method::Sampled, pass, margin));
    }

    // norm floors (Eq (9)) and the R(z) ≤ 2m|z| estimate (Eq (10))
    for set in &opts.sets {
        let (k1, _) = set.normalize()?;
        for &m in &opts.m_set {
            let p = p_poly(m)?;
            let bp = big_p_poly(m)?;
            let np = sup_norm(&p, &k1, 1e-6)?;
            let nbp = sup_norm(&bp, &k1, 1e-6)?;
            let mut params = BTreeMap::new();
            params.insert("set".into(), json!(set_label(&k1)));
            params.insert("m".into(), json!(m));
            checks.push(CheckRecord::new(
                "eq9/norm_floor",
                params,
                Method::Sampled,
                np.log_lower >= 0.0 && nbp.log_lower >= 0.0,
                np.log_lower.min(nbp.log_lower),
            ));

            let count = opts.samples.min(2000);
            let pts = sample_points(&k1, count, opts.seed);
            let mut margin = f64::INFINITY;
            let mut pass = true;
            for &z in &pts {
                let r_hi = (p.eval_derivative_log(z).log_abs - np.log_lower).exp();
                let s = 2.0 * m as f64 * z.norm() * (1.0 + 1e-9) - r_hi;
                pass &= s >= 0.0;
                margin = margin.min(s);
            }
            checks.push(CheckRecord::new(
                "eq10/r_le_2mz",
                set_params(&k1, m, count, opts.seed),
                Method::Sampled,
                pass,
                margin,
            ));
        }
    }

    // small-n / wide-width constant chain (the (z-1)^n case)
    {
        let mut margin = f64::INFINITY;
        let mut pass = true;
        for n in 1..=199u32 {
            let nf = n as f64;
            // n = ½√n·2√n
            let ident = (nf - 0.5 * nf.sqrt() * 2.0 * nf.sqrt()).abs();
            pass &= ident <= 1e-12 * nf;
            // ½√n < 8 and the conclusion n/2 < 4·2√n
            let s = (8.0 - 0.5 * nf.sqrt()).min(8.0 * nf.sqrt() - 0.5 * nf);
            pass &= s > 0.0;
            margin = margin.min(s);
        }
        let mut p = BTreeMap::new();
        p.insert("n_range".into(), json!("1..=199"));
        checks.push(CheckRecord::new(
            "case_qn/small_n_constants",
            p,
            Method::Sampled,
            pass,
            margin,
        ));

        // wide branch: w ≥ 3/7 gives n ≤ (7/3)wn, equality at the boundary
        let mut margin = f64::INFINITY;
        let mut pass = true;
        for &w in &sample_grid(WIDE_WIDTH, 2.0, 40) {
            let s = 7.0 / 3.0 * w - 1.0;
            pass &= s >= -1e-15;
            margin = margin.min(s);
        }
        let mut p = BTreeMap::new();
        p.insert("w_range".into(), json!("[3/7, 2]"));
        checks.push(CheckRecord::new(
            "case_qn/wide_width_constants",
            p,
            Method::Sampled,
            pass,
            margin,
        ));
    }

    // h endpoint identities at the grid points
    {
        let mut margin = f64::INFINITY;
        let mut pass = true;
        for &w in &opts.w_grid {
            // h(1) = 4w² + w⁴
            let e1 = {
                let direct = {
                    let x = w * w; // 1 + w² - 1
                    x * x + 4.0 * w * w
                };
                (direct - (4.0 * w * w + w.powi(4))).abs()
            };
            // h(1-w) = 5w² - 2w³ + w⁴
            let e2 = {
                let t = 1.0 - w;
                let x = 1.0 + w * w - t;
                let direct = x * x + 4.0 * w * w * t;
                (direct - (5.0 * w * w - 2.0 * w.powi(3) + w.powi(4))).abs()
            };
            pass &= e1 <= 1e-13 && e2 <= 1e-13;
            margin = margin.min(1e-13 - e1).min(1e-13 - e2);
        }
        let mut p = BTreeMap::new();
        p.insert("w_grid_len".into(), json!(opts.w_grid.len()));
        checks.push(CheckRecord::new(
            "identities/h_endpoints",
            p,
            Method::Sampled,
            pass,
            margin,
        ));
    }

    // subcases over covering boxes
    for pair in opts.w_grid.windows(2) {
        let w_box = Interval::new(pair[0], pair[1]);
        for &m in &opts.m_set {
            checks.extend(verify_subcase1(w_box, m)?);
            checks.extend(verify_subcase2(w_box, m)?);
        }
    }

    // gluing: g ≤ max{3w², 2/m} ⟹ f* ≤ max{√3·w, √2/√m} ⟹
    // R ≤ 2m·f* ≤ √3·max{2mw, 2√(2m)} ≤ √3·max{wn, 2√n}
    {
        let mut margin = f64::INFINITY;
        let mut pass = true;
        for &m in &opts.m_set {
            let mf = m as f64;
            for &w in &opts.w_grid {
                let gmax = (3.0 * w * w).max(2.0 / mf);
                let fstar = (3f64.sqrt() * w).max((2.0 / mf).sqrt());
                let e = (gmax.sqrt() - fstar).abs();
                pass &= e <= 1e-14 * fstar.max(1e-30);
                let r = 2.0 * mf * fstar;
                let claim = 3f64.sqrt() * (2.0 * mf * w).max(2.0 * (2.0 * mf).sqrt());
                let s = claim * (1.0 + 1e-15) - r;
                pass &= s >= 0.0;
                margin = margin.min(s);
                // even n = 2m: √3·max{2mw, 2√(2m)} = √3·max{wn, 2√n}
                let n = 2.0 * mf;
                let even = 3f64.sqrt() * (w * n).max(2.0 * n.sqrt());
                let e2 = (claim - even).abs();
                pass &= e2 <= 1e-12 * even;
                // odd n = 2m+1: strictly below √3·max{wn, 2√n}
                let nodd = 2.0 * mf + 1.0;
                let odd = 3f64.sqrt() * (w * nodd).max(2.0 * nodd.sqrt());
                pass &= claim < odd;
                margin = margin.min(odd - claim);
            }
        }
        let mut p = BTreeMap::new();
        p.insert("m_set".into(), json!(opts.m_set));
        checks.push(CheckRecord::new(
            "summary/gluing_chain",
            p,
            Method::Sampled,
            pass,
            margin,
        ));
    }

    // pointwise claim and the odd-degree dichotomy on every narrow set
    for set in &opts.sets {
        let (k1, _) = set.normalize()?;
        if k1.min_width() >= WIDE_WIDTH {
            continue; // wide sets are covered by the (z-1)^n case above
        }
        for &m in &opts.m_set {
            checks.extend(verify_claim_11(&k1, m, opts.samples, opts.seed)?);
            checks.extend(verify_theorem_1b(&k1, m, opts.samples, opts.seed)?);
        }
    }

    let mut report = ProofReport { checks };
    report.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_outward() {
        let a = Interval::point(0.1).add(Interval::point(0.2));
        assert!(a.contains(0.30000000000000004) || a.contains(0.3));
        assert!(a.width() < 1e-15);
        let b = Interval::new(-1.0, 2.0).sqr();
        assert!(b.contains(0.0) && b.contains(4.0) && b.lo == 0.0);
        let c = Interval::point(2.0).pow_log(10);
        assert!(c.contains(1024.0));
        assert!(c.width() < 1e-10);
        let d = Interval::new(1.0, 2.0).div(Interval::new(4.0, 8.0));
        assert!(d.contains(0.125) && d.contains(0.5));
    }

    #[test]
    fn h_func_values() {
        // h(1) = 4w² + w⁴ at w = 0.4
        let h = h_func(Interval::point(1.0), Interval::point(0.4));
        assert!(h.contains(0.6656));
        assert!(h.width() < 1e-12);
        // h(1-w) = 5w² - 2w³ + w⁴ at w = 0.4
        let h = h_func(Interval::point(0.6), Interval::point(0.4));
        assert!(h.contains(0.6976));
        // h(0.5) at w = 0.2 is 0.3716 ≤ 1 + 2w² - t = 0.58
        let h = h_func(Interval::point(0.5), Interval::point(0.2));
        assert!(h.contains(0.3716));
        assert!(h.hi <= 0.58);
    }

    #[test]
    fn g1_interior_example() {
        // w = 0.05, m = 100: t* = 0.007575, g₁(t*) < (1 + 3w²)/m = 0.010075
        let ts = t_star(100, 0.05);
        assert!((ts.value - 0.007575).abs() < 1e-15);
        assert!(ts.interior_branch);
        let (_, g1) = g_funcs(Interval::point(ts.value), Interval::point(0.05), 100);
        let cap = (1.0 + 3.0 * 0.05 * 0.05) / 100.0;
        assert!(g1.hi < cap, "g1 = {g1:?} vs cap {cap}");
        assert!((cap - 0.010075).abs() < 1e-15);
    }

    #[test]
    fn g1_limit_at_small_w() {
        // g₁(2w²) = 3w² → 0 as w → 0
        for w in [1e-2, 1e-4, 1e-8] {
            let t = 2.0 * w * w;
            let (g, g1) = g_funcs(Interval::point(t), Interval::point(w), 150);
            assert!(g1.hi <= 3.0 * w * w * (1.0 + 1e-9) + 1e-300);
            assert!(g.hi <= g1.hi * (1.0 + 1e-9) + 1e-300);
        }
    }

    #[test]
    fn t_star_branches() {
        let a = t_star(100, 0.1);
        assert!((a.value - 0.0003).abs() < 1e-12);
        assert!(!a.interior_branch); // 2w² = 0.02 > t*
        let b = t_star(100, 0.05);
        assert!(b.interior_branch);
        // t* ≤ 1/m ≤ 1/100
        for m in [100u32, 250, 1000] {
            for w in [0.0, 0.1, 0.3, 0.42] {
                assert!(t_star(m, w).value <= 1.0 / m as f64 + 1e-18);
            }
        }
        // both predicate forms agree on a grid
        for m in [100u32, 200, 1000] {
            for k in 0..430 {
                let w = k as f64 * 0.001;
                let ts = t_star(m, w);
                assert_eq!(ts.interior_branch, ts.value > 2.0 * w * w, "m={m} w={w}");
            }
        }
    }

    #[test]
    fn subcase1_passes_and_guards() {
        let recs = verify_subcase1(Interval::new(0.0, WIDE_WIDTH - 1e-9), 100).unwrap();
        assert!(recs.iter().all(|c| c.passed()), "{recs:#?}");
        let recs = verify_subcase1(Interval::point(0.42), 100).unwrap();
        assert!(recs.iter().all(|c| c.passed()));
        assert!(verify_subcase1(Interval::point(0.45), 100).is_err());
        assert!(verify_subcase1(Interval::point(0.1), 99).is_err());
    }

    #[test]
    fn subcase2_passes() {
        for m in [100u32, 200, 1000] {
            let recs = verify_subcase2(Interval::new(0.0, WIDE_WIDTH - 1e-9), m).unwrap();
            assert!(recs.iter().all(|c| c.passed()), "m={m}: {recs:#?}");
        }
    }

    #[test]
    fn subcase2_spot_value() {
        // g(0.5) at w = 0.2, m = 100 sits astronomically below 2/m
        let (g, g1) = g_funcs(Interval::point(0.5), Interval::point(0.2), 100);
        assert!(g.lo <= g1.hi);
        let g1_expected = 0.54 * 0.58f64.powi(99);
        assert!((g1.hi - g1_expected).abs() <= 1e-9 * g1_expected);
        assert!(g.hi < 2.0 / 100.0);
    }

    #[test]
    fn interval_soundness_random_points() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let w: f64 = rng.gen_range(0.0..0.428);
            let t: f64 = rng.gen_range(0.0..1.0);
            let m = [100u32, 200, 1000][rng.gen_range(0..3)];
            let hv = {
                let x = 1.0 + w * w - t;
                x * x + 4.0 * w * w * t
            };
            assert!(h_func(Interval::point(t), Interval::point(w)).contains(hv));
            let (g, g1) = g_funcs(Interval::point(t), Interval::point(w), m);
            let gv = (t + w * w) * hv.powi(m as i32 - 1);
            let g1v = (t + w * w) * (1.0 + 2.0 * w * w - t).powi(m as i32 - 1);
            // powi itself is not correctly rounded; allow a hair of escape
            assert!(
                g.lo <= gv * (1.0 + 1e-11) + 1e-300 && gv * (1.0 - 1e-11) - 1e-300 <= g.hi,
                "g enclosure {g:?} misses {gv}"
            );
            assert!(
                g1.lo <= g1v * (1.0 + 1e-11) + 1e-300 && g1v * (1.0 - 1e-11) - 1e-300 <= g1.hi
            );
        }
    }

    #[test]
    fn f_monotone_and_even() {
        // f(x, y) = |z|·|z²-1|^{m-1} is even in x and in y, and nondecreasing
        // in |y| on the strip |x| ≤ 1
        use rand::Rng;
        let f = |x: f64, y: f64, m: u32| {
            let z = Complex64::new(x, y);
            z.norm() * (z * z - 1.0).norm().powi(m as i32 - 1)
        };
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let x: f64 = rng.gen_range(-1.0..1.0);
            let y: f64 = rng.gen_range(-0.42..0.42);
            let m = 100;
            let v = f(x, y, m);
            assert!((v - f(-x, y, m)).abs() <= 1e-12 * v.max(1e-300));
            assert!((v - f(x, -y, m)).abs() <= 1e-12 * v.max(1e-300));
            let y2: f64 = rng.gen_range(y.abs()..0.43);
            assert!(
                f(x, y2, m) >= v * (1.0 - 1e-12),
                "f not monotone at x={x}, |y|={} < {y2}",
                y.abs()
            );
        }
    }

    #[test]
    fn claim11_diamond_passes() {
        let k1 = ConvexSet::diamond(0.2).unwrap();
        let recs = verify_claim_11(&k1, 100, 2000, 42).unwrap();
        assert!(recs.iter().all(|c| c.passed()), "{recs:#?}");
    }

    #[test]
    fn claim11_ellipse_passes() {
        let k1 = ConvexSet::ellipse(Complex64::new(0.0, 0.0), 1.0, 0.1, 0.0).unwrap();
        let recs = verify_claim_11(&k1, 150, 2000, 42).unwrap();
        assert!(recs.iter().all(|c| c.passed()), "{recs:#?}");
    }

    #[test]
    fn claim11_rejects_wide_sets() {
        let disk = ConvexSet::disk(Complex64::new(0.0, 0.0), 1.0).unwrap();
        assert!(verify_claim_11(&disk, 100, 100, 1).is_err());
    }

    #[test]
    fn theorem_1b_passes() {
        let k1 = ConvexSet::diamond(0.2).unwrap();
        let recs = verify_theorem_1b(&k1, 100, 2000, 42).unwrap();
        assert!(recs.iter().all(|c| c.passed()), "{recs:#?}");
    }

    #[test]
    fn certificate_smoke() {
        let opts = CertificateOptions {
            w_grid: vec![0.0, 0.1, 0.2, 0.3, WIDE_WIDTH - 1e-9],
            m_set: vec![100],
            sets: vec![ConvexSet::diamond(0.2).unwrap()],
            samples: 500,
            seed: 3,
        };
        let report = proof_certificate(&opts).unwrap();
        assert!(
            report.all_pass(),
            "{:#?}",
            report.checks.iter().filter(|c| !c.passed()).collect::<Vec<_>>()
        );
        let s = serde_json::to_string(&report).unwrap();
        assert!(s.starts_with('['));
        let back: ProofReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back.checks.len(), report.checks.len());
    }
}
