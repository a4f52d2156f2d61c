//! Convex compact subsets of the plane.
//!
//! Sets are stored in exact parametric form (disk, ellipse, diamond,
//! segment) or as a strictly convex counterclockwise polygon. All values are
//! immutable after construction and every operation is a pure function, so
//! everything here is safe to share across threads.
//!
//! The plane is identified with the complex numbers; a point is a
//! [`Complex64`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for geometric predicates on the normalized scale
/// (diameter about 2).
pub const GEOM_TOL: f64 = 1e-9;

/// Hard cap on the number of points a single boundary sampling call may
/// produce.
pub const MAX_BOUNDARY_SAMPLES: usize = 2_000_000;

#[inline]
pub(crate) fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

#[inline]
fn lex_less(a: Complex64, b: Complex64) -> bool {
    (a.re, a.im) < (b.re, b.im)
}

fn require_finite(points: &[Complex64]) -> Result<()> {
    for p in points {
        if !p.re.is_finite() || !p.im.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite coordinate {p}")));
        }
    }
    Ok(())
}

/// Affine map `z ↦ αz + β` with nonzero complex `α`.
///
/// Diameter and width scale by `|α|` under the map, and
/// `M_n(t(K)) = M_n(K) / |α|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineMap {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl AffineMap {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        if alpha == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidInput("affine map with alpha = 0".into()));
        }
        require_finite(&[alpha, beta])?;
        Ok(Self { alpha, beta })
    }

    pub fn identity() -> Self {
        Self {
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.alpha == Complex64::new(1.0, 0.0) && self.beta == Complex64::new(0.0, 0.0)
    }

    #[inline]
    pub fn apply(&self, z: Complex64) -> Complex64 {
        self.alpha * z + self.beta
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            alpha: self.alpha * other.alpha,
            beta: self.alpha * other.beta + self.beta,
        }
    }

    pub fn inverse(&self) -> AffineMap {
        let inv = Complex64::new(1.0, 0.0) / self.alpha;
        AffineMap {
            alpha: inv,
            beta: -self.beta * inv,
        }
    }

    pub fn scale(&self) -> f64 {
        self.alpha.norm()
    }
}

/// A convex compact set of positive diameter.
///
/// Construct through [`ConvexSet::polygon`], [`ConvexSet::disk`],
/// [`ConvexSet::ellipse`], [`ConvexSet::diamond`] or [`ConvexSet::segment`];
/// the constructors enforce the variant invariants (polygons are strictly
/// convex and counterclockwise, radii positive, `a ≥ b ≥ 0`, `ε ∈ [0, 1]`,
/// segment endpoints distinct).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SetSpec", into = "SetSpec")]
pub enum ConvexSet {
    /// Strictly convex vertices in counterclockwise order, starting from the
    /// lexicographically smallest.
    Polygon(Vec<Complex64>),
    Disk { center: Complex64, radius: f64 },
    /// Semi-axes `a ≥ b ≥ 0`, major axis rotated by `rotation` radians.
    /// `b = 0` degenerates to a segment of length `2a`.
    Ellipse {
        center: Complex64,
        a: f64,
        b: f64,
        rotation: f64,
    },
    /// Convex hull of `{±1, ±iε}`; `ε = 0` degenerates to `[-1, 1]`.
    Diamond { eps: f64 },
    Segment { a: Complex64, b: Complex64 },
}

/// Wire format: `{"shape": "...", ...fields}`.
#[derive(Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
enum SetSpec {
    Polygon { vertices: Vec<[f64; 2]> },
    Disk { center: [f64; 2], radius: f64 },
    Ellipse {
        center: [f64; 2],
        a: f64,
        b: f64,
        #[serde(default)]
        rotation: f64,
    },
    Diamond { epsilon: f64 },
    Segment { endpoints: [[f64; 2]; 2] },
}

fn c(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

impl TryFrom<SetSpec> for ConvexSet {
    type Error = Error;
    fn try_from(spec: SetSpec) -> Result<Self> {
        match spec {
            SetSpec::Polygon { vertices } => {
                let pts: Vec<Complex64> = vertices.into_iter().map(c).collect();
                ConvexSet::polygon(&pts)
            }
            SetSpec::Disk { center, radius } => ConvexSet::disk(c(center), radius),
            SetSpec::Ellipse { center, a, b, rotation } => {
                ConvexSet::ellipse(c(center), a, b, rotation)
            }
            SetSpec::Diamond { epsilon } => ConvexSet::diamond(epsilon),
            SetSpec::Segment { endpoints } => ConvexSet::segment(c(endpoints[0]), c(endpoints[1])),
        }
    }
}

impl From<ConvexSet> for SetSpec {
    fn from(set: ConvexSet) -> SetSpec {
        match set {
            ConvexSet::Polygon(v) => SetSpec::Polygon {
                vertices: v.iter().map(|p| [p.re, p.im]).collect(),
            },
            ConvexSet::Disk { center, radius } => SetSpec::Disk {
                center: [center.re, center.im],
                radius,
            },
            ConvexSet::Ellipse { center, a, b, rotation } => SetSpec::Ellipse {
                center: [center.re, center.im],
                a,
                b,
                rotation,
            },
            ConvexSet::Diamond { eps } => SetSpec::Diamond { epsilon: eps },
            ConvexSet::Segment { a, b } => SetSpec::Segment {
                endpoints: [[a.re, a.im], [b.re, b.im]],
            },
        }
    }
}

/// Monotone-chain convex hull; collinear points are dropped, so the result
/// is strictly convex. Returns the hull counterclockwise starting from the
/// lexicographically smallest point, or fewer than 3 points when the input
/// is degenerate.
fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts = points.to_vec();
    pts.sort_by(|p, q| (p.re, p.im).partial_cmp(&(q.re, q.im)).unwrap());
    pts.dedup();
    let n = pts.len();
    if n <= 2 {
        return pts;
    }
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * n);
    for &p in &pts {
        while hull.len() >= 2
            && cross(hull[hull.len() - 1] - hull[hull.len() - 2], p - hull[hull.len() - 2]) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower
            && cross(hull[hull.len() - 1] - hull[hull.len() - 2], p - hull[hull.len() - 2]) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

impl ConvexSet {
    /// Convex hull of the given points. Interior and collinear points are
    /// dropped; two distinct extreme points degenerate to a segment.
    pub fn polygon(points: &[Complex64]) -> Result<ConvexSet> {
        if points.is_empty() {
            return Err(Error::InvalidInput("empty point list".into()));
        }
        require_finite(points)?;
        let hull = convex_hull(points);
        match hull.len() {
            0 => unreachable!(),
            1 => Err(Error::DegenerateSet("all points coincide".into())),
            2 => Ok(ConvexSet::Segment { a: hull[0], b: hull[1] }),
            _ => Ok(ConvexSet::Polygon(hull)),
        }
    }

    pub fn disk(center: Complex64, radius: f64) -> Result<ConvexSet> {
        require_finite(&[center])?;
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidInput(format!("disk radius {radius} must be positive")));
        }
        Ok(ConvexSet::Disk { center, radius })
    }

    pub fn ellipse(center: Complex64, a: f64, b: f64, rotation: f64) -> Result<ConvexSet> {
        require_finite(&[center])?;
        if !(a > 0.0) || !a.is_finite() || !b.is_finite() || !(0.0..=a).contains(&b) {
            return Err(Error::InvalidInput(format!(
                "ellipse semi-axes must satisfy a ≥ b ≥ 0, a > 0 (got a = {a}, b = {b})"
            )));
        }
        if !rotation.is_finite() {
            return Err(Error::InvalidInput("non-finite rotation".into()));
        }
        Ok(ConvexSet::Ellipse { center, a, b, rotation })
    }

    pub fn diamond(eps: f64) -> Result<ConvexSet> {
        if !(0.0..=1.0).contains(&eps) {
            return Err(Error::InvalidInput(format!("diamond epsilon {eps} outside [0, 1]")));
        }
        Ok(ConvexSet::Diamond { eps })
    }

    pub fn segment(a: Complex64, b: Complex64) -> Result<ConvexSet> {
        require_finite(&[a, b])?;
        if a == b {
            return Err(Error::DegenerateSet("segment endpoints coincide".into()));
        }
        Ok(ConvexSet::Segment { a, b })
    }

    /// The unit interval `[-1, 1]` as a segment.
    pub fn unit_interval() -> ConvexSet {
        ConvexSet::Segment {
            a: Complex64::new(-1.0, 0.0),
            b: Complex64::new(1.0, 0.0),
        }
    }

    /// Diamond vertices `{1, iε, -1, -iε}` for `ε > 0`.
    fn diamond_vertices(eps: f64) -> Vec<Complex64> {
        vec![
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -eps),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, eps),
        ]
    }

    /// Explicit polygon (or segment) with the same point set. Exact for
    /// polygons, diamonds and segments; `None` for smooth shapes.
    pub fn polygonized(&self) -> Option<ConvexSet> {
        match self {
            ConvexSet::Polygon(_) | ConvexSet::Segment { .. } => Some(self.clone()),
            ConvexSet::Diamond { eps } => {
                if *eps > 0.0 {
                    Some(ConvexSet::Polygon(Self::diamond_vertices(*eps)))
                } else {
                    Some(ConvexSet::unit_interval())
                }
            }
            _ => None,
        }
    }

    /// Largest distance between two points of the set.
    pub fn diameter(&self) -> f64 {
        match self {
            ConvexSet::Polygon(v) => polygon_diameter(v).0,
            ConvexSet::Disk { radius, .. } => 2.0 * radius,
            ConvexSet::Ellipse { a, .. } => 2.0 * a,
            ConvexSet::Diamond { .. } => 2.0,
            ConvexSet::Segment { a, b } => (b - a).norm(),
        }
    }

    /// Minimal width: the smallest distance between two parallel supporting
    /// lines. Zero exactly for segments and degenerate ellipses.
    pub fn min_width(&self) -> f64 {
        match self {
            ConvexSet::Polygon(v) => polygon_width(v),
            ConvexSet::Disk { radius, .. } => 2.0 * radius,
            ConvexSet::Ellipse { b, .. } => 2.0 * b,
            ConvexSet::Diamond { eps } => 2.0 * eps / (1.0 + eps * eps).sqrt(),
            ConvexSet::Segment { .. } => 0.0,
        }
    }

    /// Euclidean distance from `z` to the set (zero inside).
    pub fn distance(&self, z: Complex64) -> f64 {
        match self {
            ConvexSet::Polygon(v) => polygon_distance(v, z),
            ConvexSet::Disk { center, radius } => ((z - center).norm() - radius).max(0.0),
            ConvexSet::Ellipse { .. } => self.project(z).map_or(f64::INFINITY, |p| (z - p).norm()),
            ConvexSet::Diamond { eps } => {
                if *eps > 0.0 {
                    polygon_distance(&Self::diamond_vertices(*eps), z)
                } else {
                    segment_distance(Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0), z)
                }
            }
            ConvexSet::Segment { a, b } => segment_distance(*a, *b, z),
        }
    }

    /// `true` iff `distance(z) ≤ tol`.
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        debug_assert!(tol >= 0.0);
        if !z.re.is_finite() || !z.im.is_finite() {
            return false;
        }
        self.distance(z) <= tol
    }

    /// Closest point of the set to `z` (identity inside the set).
    pub fn project(&self, z: Complex64) -> Result<Complex64> {
        match self {
            ConvexSet::Polygon(v) => Ok(polygon_project(v, z)),
            ConvexSet::Disk { center, radius } => {
                let d = z - center;
                let n = d.norm();
                if n <= *radius {
                    Ok(z)
                } else {
                    Ok(center + d * (*radius / n))
                }
            }
            ConvexSet::Ellipse { center, a, b, rotation } => {
                if *b == 0.0 {
                    let u = Complex64::from_polar(1.0, *rotation);
                    return Ok(segment_project(center - a * u, center + a * u, z));
                }
                let rot = Complex64::from_polar(1.0, -rotation);
                let w = (z - center) * rot;
                let (u, v) = (w.re, w.im);
                if (u / a).powi(2) + (v / b).powi(2) <= 1.0 {
                    return Ok(z);
                }
                let (pu, pv) = ellipse_closest(*a, *b, u.abs(), v.abs());
                let p = Complex64::new(pu.copysign(u), pv.copysign(v));
                Ok(center + p * rot.conj())
            }
            ConvexSet::Diamond { eps } => {
                if *eps > 0.0 {
                    Ok(polygon_project(&Self::diamond_vertices(*eps), z))
                } else {
                    Ok(segment_project(
                        Complex64::new(-1.0, 0.0),
                        Complex64::new(1.0, 0.0),
                        z,
                    ))
                }
            }
            ConvexSet::Segment { a, b } => Ok(segment_project(*a, *b, z)),
        }
    }

    /// Image of the set under `t(z) = αz + β`.
    ///
    /// Diameter and width both scale by `|α|`. The identity map returns the
    /// set unchanged; otherwise a diamond becomes an explicit polygon (or
    /// segment when `ε = 0`).
    pub fn affine(&self, t: &AffineMap) -> ConvexSet {
        if t.is_identity() {
            return self.clone();
        }
        match self {
            ConvexSet::Polygon(v) => {
                ConvexSet::Polygon(canonicalize_ccw(v.iter().map(|&p| t.apply(p)).collect()))
            }
            ConvexSet::Disk { center, radius } => ConvexSet::Disk {
                center: t.apply(*center),
                radius: radius * t.scale(),
            },
            ConvexSet::Ellipse { center, a, b, rotation } => ConvexSet::Ellipse {
                center: t.apply(*center),
                a: a * t.scale(),
                b: b * t.scale(),
                rotation: rotation + t.alpha.arg(),
            },
            ConvexSet::Diamond { eps } => {
                if *eps > 0.0 {
                    ConvexSet::Polygon(canonicalize_ccw(
                        Self::diamond_vertices(*eps).iter().map(|&p| t.apply(p)).collect(),
                    ))
                } else {
                    ConvexSet::Segment {
                        a: t.apply(Complex64::new(-1.0, 0.0)),
                        b: t.apply(Complex64::new(1.0, 0.0)),
                    }
                }
            }
            ConvexSet::Segment { a, b } => ConvexSet::Segment {
                a: t.apply(*a),
                b: t.apply(*b),
            },
        }
    }

    /// A pair of points realizing the diameter. Ties are broken by taking
    /// the lexicographically smallest pair, so the result is deterministic.
    pub fn diameter_pair(&self) -> (Complex64, Complex64) {
        match self {
            ConvexSet::Polygon(v) => {
                let (best, _, _) = polygon_diameter(v);
                let mut cands: Vec<(Complex64, Complex64)> = Vec::new();
                for i in 0..v.len() {
                    for j in (i + 1)..v.len() {
                        if (v[j] - v[i]).norm() == best {
                            let (p, q) = if lex_less(v[i], v[j]) { (v[i], v[j]) } else { (v[j], v[i]) };
                            cands.push((p, q));
                        }
                    }
                }
                cands
                    .into_iter()
                    .min_by(|x, y| {
                        (x.0.re, x.0.im, x.1.re, x.1.im)
                            .partial_cmp(&(y.0.re, y.0.im, y.1.re, y.1.im))
                            .unwrap()
                    })
                    .expect("polygon has a diameter pair")
            }
            ConvexSet::Disk { center, radius } => (
                center - Complex64::new(*radius, 0.0),
                center + Complex64::new(*radius, 0.0),
            ),
            ConvexSet::Ellipse { center, a, rotation, .. } => {
                let u = Complex64::from_polar(*a, *rotation);
                let (p, q) = (center - u, center + u);
                if lex_less(p, q) { (p, q) } else { (q, p) }
            }
            ConvexSet::Diamond { .. } => (Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)),
            ConvexSet::Segment { a, b } => {
                if lex_less(*a, *b) { (*a, *b) } else { (*b, *a) }
            }
        }
    }

    /// Affine image with diameter 2 containing `±1`, together with the map
    /// that produced it: a diameter-realizing pair is sent to `{-1, +1}`.
    pub fn normalize(&self) -> Result<(ConvexSet, AffineMap)> {
        let (p, q) = self.diameter_pair();
        let span = q - p;
        if span.norm() == 0.0 {
            return Err(Error::DegenerateSet("zero diameter".into()));
        }
        let alpha = Complex64::new(2.0, 0.0) / span;
        let beta = -alpha * (p + q) / 2.0;
        let t = AffineMap::new(alpha, beta)?;
        Ok((self.affine(&t), t))
    }

    /// Boundary points with consecutive spacing (arc length, or chord length
    /// along polygon edges) at most `max_spacing`. Polygon vertices and
    /// segment endpoints are always included. Closed shapes return a closed
    /// chain: the wrap-around gap also respects the spacing.
    pub fn boundary_points(&self, max_spacing: f64) -> Result<Vec<Complex64>> {
        if !(max_spacing > 0.0) {
            return Err(Error::InvalidInput(format!("max_spacing {max_spacing} must be positive")));
        }
        match self {
            ConvexSet::Polygon(v) => chain_points(v, true, max_spacing),
            ConvexSet::Diamond { eps } if *eps > 0.0 => {
                chain_points(&Self::diamond_vertices(*eps), true, max_spacing)
            }
            ConvexSet::Diamond { .. } => chain_points(
                &[Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)],
                false,
                max_spacing,
            ),
            ConvexSet::Segment { a, b } => chain_points(&[*a, *b], false, max_spacing),
            ConvexSet::Disk { center, radius } => {
                let circ = 2.0 * std::f64::consts::PI * radius;
                let n = ((circ / max_spacing).ceil() as usize).max(4);
                check_cap(n)?;
                Ok((0..n)
                    .map(|k| {
                        let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                        center + Complex64::from_polar(*radius, th)
                    })
                    .collect())
            }
            ConvexSet::Ellipse { center, a, b, rotation } => {
                if *b == 0.0 {
                    let u = Complex64::from_polar(1.0, *rotation);
                    return chain_points(&[center - a * u, center + a * u], false, max_spacing);
                }
                ellipse_points(*center, *a, *b, *rotation, max_spacing)
            }
        }
    }

    /// 1-Lipschitz boundary parameterization used by certified sup-norm
    /// evaluation.
    pub(crate) fn boundary_curve(&self) -> BoundaryCurve {
        match self {
            ConvexSet::Polygon(v) => BoundaryCurve::chain(v, true),
            ConvexSet::Diamond { eps } if *eps > 0.0 => {
                BoundaryCurve::chain(&Self::diamond_vertices(*eps), true)
            }
            ConvexSet::Diamond { .. } => BoundaryCurve::chain(
                &[Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)],
                false,
            ),
            ConvexSet::Segment { a, b } => BoundaryCurve::chain(&[*a, *b], false),
            ConvexSet::Disk { center, radius } => BoundaryCurve::Circle {
                center: *center,
                radius: *radius,
            },
            ConvexSet::Ellipse { center, a, b, rotation } => {
                if *b == 0.0 {
                    let u = Complex64::from_polar(1.0, *rotation);
                    BoundaryCurve::chain(&[center - a * u, center + a * u], false)
                } else {
                    BoundaryCurve::Ellipse {
                        center: *center,
                        a: *a,
                        b: *b,
                        rotation: *rotation,
                    }
                }
            }
        }
    }

    /// Axis-aligned bounding box `(min_re, min_im, max_re, max_im)`.
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        match self {
            ConvexSet::Polygon(v) => {
                let (mut x0, mut y0, mut x1, mut y1) =
                    (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
                for p in v {
                    x0 = x0.min(p.re);
                    y0 = y0.min(p.im);
                    x1 = x1.max(p.re);
                    y1 = y1.max(p.im);
                }
                (x0, y0, x1, y1)
            }
            ConvexSet::Disk { center, radius } => (
                center.re - radius,
                center.im - radius,
                center.re + radius,
                center.im + radius,
            ),
            ConvexSet::Ellipse { center, a, b, rotation } => {
                // extent of a rotated ellipse along each axis
                let (s, co) = rotation.sin_cos();
                let ex = ((a * co).powi(2) + (b * s).powi(2)).sqrt();
                let ey = ((a * s).powi(2) + (b * co).powi(2)).sqrt();
                (center.re - ex, center.im - ey, center.re + ex, center.im + ey)
            }
            ConvexSet::Diamond { eps } => (-1.0, -eps, 1.0, *eps),
            ConvexSet::Segment { a, b } => (
                a.re.min(b.re),
                a.im.min(b.im),
                a.re.max(b.re),
                a.im.max(b.im),
            ),
        }
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_BOUNDARY_SAMPLES {
        Err(Error::ResourceLimit(format!(
            "boundary sampling would need {n} points (cap {MAX_BOUNDARY_SAMPLES})"
        )))
    } else {
        Ok(())
    }
}

/// Rotate a CCW-ordered vertex list so it starts at the lexicographically
/// smallest vertex. Multiplication by a complex scalar preserves
/// orientation, so affine images only need the start fixed.
fn canonicalize_ccw(v: Vec<Complex64>) -> Vec<Complex64> {
    let start = v
        .iter()
        .enumerate()
        .min_by(|(_, p), (_, q)| (p.re, p.im).partial_cmp(&(q.re, q.im)).unwrap())
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut out = Vec::with_capacity(v.len());
    out.extend_from_slice(&v[start..]);
    out.extend_from_slice(&v[..start]);
    out
}

/// Evenly subdivide each chain edge so gaps stay below `max_spacing`.
fn chain_points(verts: &[Complex64], closed: bool, max_spacing: f64) -> Result<Vec<Complex64>> {
    let n = verts.len();
    let edges = if closed { n } else { n - 1 };
    let mut total = 0usize;
    let mut counts = Vec::with_capacity(edges);
    for i in 0..edges {
        let len = (verts[(i + 1) % n] - verts[i]).norm();
        let k = ((len / max_spacing).ceil() as usize).max(1);
        counts.push(k);
        total = total.saturating_add(k);
    }
    check_cap(total + 1)?;
    let mut out = Vec::with_capacity(total + 1);
    for i in 0..edges {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let k = counts[i];
        for s in 0..k {
            out.push(a + (b - a) * (s as f64 / k as f64));
        }
    }
    if !closed {
        out.push(verts[n - 1]);
    }
    Ok(out)
}

/// Ellipse boundary sampling at arc-length-uniformized parameter steps.
///
/// The per-interval arc length is overestimated by `max(speed) · Δθ`
/// (the speed `√(a²sin²θ + b²cos²θ)` is monotone within each quadrant, so
/// interval endpoints give the max), and points are emitted whenever the
/// accumulated overestimate reaches the target spacing. True arc gaps are
/// therefore at most `max_spacing`.
fn ellipse_points(
    center: Complex64,
    a: f64,
    b: f64,
    rotation: f64,
    max_spacing: f64,
) -> Result<Vec<Complex64>> {
    use std::f64::consts::PI;
    let rot = Complex64::from_polar(1.0, rotation);
    let speed = |th: f64| (a * th.sin()).hypot(b * th.cos());
    let point = |th: f64| center + rot * Complex64::new(a * th.cos(), b * th.sin());

    // fine grid resolution: each fine interval's overestimate well below the
    // spacing, grid aligned to quadrant boundaries for the monotonicity bound
    let per_quadrant = (((PI / 2.0 * a) / (0.25 * max_spacing)).ceil() as usize).clamp(64, 8 << 20);
    let m = 4 * per_quadrant;
    let dth = 2.0 * PI / m as f64;

    let mut upper_total = 0.0;
    for i in 0..m {
        let t0 = i as f64 * dth;
        let t1 = t0 + dth;
        upper_total += speed(t0).max(speed(t1)) * dth;
    }
    let n_pts = ((upper_total / max_spacing).ceil() as usize).max(4);
    check_cap(n_pts)?;
    let target = upper_total / n_pts as f64;

    let mut out = Vec::with_capacity(n_pts + 1);
    out.push(point(0.0));
    let mut acc = 0.0;
    let mut next = target;
    for i in 0..m {
        let t0 = i as f64 * dth;
        let t1 = t0 + dth;
        let seg = speed(t0).max(speed(t1)) * dth;
        while acc + seg >= next && out.len() < n_pts {
            let frac = (next - acc) / seg;
            out.push(point(t0 + frac * dth));
            next += target;
        }
        acc += seg;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// polygon primitives (strictly convex, CCW input)

/// Rotating calipers over antipodal vertex pairs; returns the diameter and
/// one realizing index pair.
fn polygon_diameter(v: &[Complex64]) -> (f64, usize, usize) {
    let n = v.len();
    let mut best = 0.0;
    let (mut bi, mut bj) = (0usize, 0usize);
    let mut consider = |i: usize, j: usize, best: &mut f64| {
        let d = (v[j] - v[i]).norm();
        if d > *best {
            *best = d;
            bi = i;
            bj = j;
        }
    };
    let mut j = 1usize;
    for i in 0..n {
        let ni = (i + 1) % n;
        let e = v[ni] - v[i];
        loop {
            let nj = (j + 1) % n;
            if cross(e, v[nj] - v[i]) > cross(e, v[j] - v[i]) {
                j = nj;
            } else {
                break;
            }
        }
        consider(i, j, &mut best);
        consider(ni, j, &mut best);
    }
    (best, bi, bj)
}

/// Rotating calipers over edge normals: the width is the smallest spread of
/// the support function across all edge directions.
fn polygon_width(v: &[Complex64]) -> f64 {
    let n = v.len();
    let mut j = 1usize;
    let mut width = f64::INFINITY;
    for i in 0..n {
        let a = v[i];
        let e = v[(i + 1) % n] - a;
        let elen = e.norm();
        loop {
            let nj = (j + 1) % n;
            if cross(e, v[nj] - a) > cross(e, v[j] - a) {
                j = nj;
            } else {
                break;
            }
        }
        width = width.min(cross(e, v[j] - a) / elen);
    }
    width
}

fn segment_project(a: Complex64, b: Complex64, z: Complex64) -> Complex64 {
    let e = b - a;
    let t = ((z - a).re * e.re + (z - a).im * e.im) / e.norm_sqr();
    a + e * t.clamp(0.0, 1.0)
}

fn segment_distance(a: Complex64, b: Complex64, z: Complex64) -> f64 {
    (z - segment_project(a, b, z)).norm()
}

fn polygon_inside(v: &[Complex64], z: Complex64) -> bool {
    let n = v.len();
    (0..n).all(|i| cross(v[(i + 1) % n] - v[i], z - v[i]) >= 0.0)
}

fn polygon_distance(v: &[Complex64], z: Complex64) -> f64 {
    if polygon_inside(v, z) {
        return 0.0;
    }
    let n = v.len();
    (0..n)
        .map(|i| segment_distance(v[i], v[(i + 1) % n], z))
        .fold(f64::INFINITY, f64::min)
}

fn polygon_project(v: &[Complex64], z: Complex64) -> Complex64 {
    if polygon_inside(v, z) {
        return z;
    }
    let n = v.len();
    (0..n)
        .map(|i| segment_project(v[i], v[(i + 1) % n], z))
        .min_by(|p, q| {
            (z - p)
                .norm()
                .partial_cmp(&(z - q).norm())
                .unwrap()
                .then((p.re, p.im).partial_cmp(&(q.re, q.im)).unwrap())
        })
        .expect("polygon has edges")
}

/// Closest point on the axis-aligned ellipse `x²/a² + y²/b² = 1` to an
/// outside point `(u, v)` with `u, v ≥ 0`, via bisection on the KKT
/// parameter. The function `t ↦ (au/(t+a²))² + (bv/(t+b²))² - 1` is strictly
/// decreasing, positive at `t = 0` for outside points, and negative for
/// large `t`.
fn ellipse_closest(a: f64, b: f64, u: f64, v: f64) -> (f64, f64) {
    let g = |t: f64| {
        let x = a * u / (t + a * a);
        let y = b * v / (t + b * b);
        x * x + y * y - 1.0
    };
    let mut lo = 0.0f64;
    let mut hi = 2.0 * (a * u + b * v) + 1.0;
    debug_assert!(g(lo) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi.max(1.0) {
            break;
        }
    }
    let t = 0.5 * (lo + hi);
    (a * a * u / (t + a * a), b * b * v / (t + b * b))
}

// ---------------------------------------------------------------------------
// boundary parameterization for certified sup norms

/// A boundary curve `s ↦ point(s)` on `[0, total]` with `|point(s) -
/// point(s')| ≤ |s - s'|` (the parameter moves at most at unit speed), so
/// parameter gaps bound true arc gaps. Chains use exact arc length; the
/// ellipse uses `s = aθ`, whose speed `√(a²sin²θ + b²cos²θ)/a ≤ 1`.
#[derive(Clone, Debug)]
pub(crate) enum BoundaryCurve {
    Chain {
        pts: Vec<Complex64>,
        cum: Vec<f64>,
        closed: bool,
    },
    Circle {
        center: Complex64,
        radius: f64,
    },
    Ellipse {
        center: Complex64,
        a: f64,
        b: f64,
        rotation: f64,
    },
}

impl BoundaryCurve {
    fn chain(verts: &[Complex64], closed: bool) -> BoundaryCurve {
        let mut pts = verts.to_vec();
        if closed {
            pts.push(verts[0]);
        }
        let mut cum = Vec::with_capacity(pts.len());
        let mut acc = 0.0;
        cum.push(0.0);
        for w in pts.windows(2) {
            acc += (w[1] - w[0]).norm();
            cum.push(acc);
        }
        BoundaryCurve::Chain { pts, cum, closed }
    }

    pub fn total(&self) -> f64 {
        match self {
            BoundaryCurve::Chain { cum, .. } => *cum.last().unwrap(),
            BoundaryCurve::Circle { radius, .. } => 2.0 * std::f64::consts::PI * radius,
            BoundaryCurve::Ellipse { a, .. } => 2.0 * std::f64::consts::PI * a,
        }
    }

    pub fn closed(&self) -> bool {
        match self {
            BoundaryCurve::Chain { closed, .. } => *closed,
            _ => true,
        }
    }

    pub fn at(&self, s: f64) -> Complex64 {
        match self {
            BoundaryCurve::Chain { pts, cum, .. } => {
                let total = *cum.last().unwrap();
                let s = s.clamp(0.0, total);
                let i = match cum.binary_search_by(|c| c.partial_cmp(&s).unwrap()) {
                    Ok(i) => i.min(pts.len() - 2),
                    Err(i) => i.saturating_sub(1).min(pts.len() - 2),
                };
                let seg = cum[i + 1] - cum[i];
                if seg == 0.0 {
                    pts[i]
                } else {
                    pts[i] + (pts[i + 1] - pts[i]) * ((s - cum[i]) / seg)
                }
            }
            BoundaryCurve::Circle { center, radius } => {
                center + Complex64::from_polar(*radius, s / radius)
            }
            BoundaryCurve::Ellipse { center, a, b, rotation } => {
                let th = s / a;
                center
                    + Complex64::from_polar(1.0, *rotation)
                        * Complex64::new(a * th.cos(), b * th.sin())
            }
        }
    }

    /// Parameters that the initial subdivision must include: chain vertices,
    /// or eight equal splits for smooth curves (these hit `±1` on normalized
    /// disks and ellipses).
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            BoundaryCurve::Chain { cum, .. } => cum.clone(),
            _ => {
                let total = self.total();
                (0..=8).map(|k| total * k as f64 / 8.0).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    #[test]
    fn hull_drops_interior_point() {
        let set = ConvexSet::polygon(&[
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(1.0, 1.0),
            pt(0.0, 1.0),
            pt(0.5, 0.5),
        ])
        .unwrap();
        match set {
            ConvexSet::Polygon(v) => assert_eq!(v.len(), 4),
            other => panic!("expected polygon, got {other:?}"),
        }
    }

    #[test]
    fn collinear_degenerates_to_segment() {
        let set = ConvexSet::polygon(&[pt(-1.0, 0.0), pt(1.0, 0.0), pt(0.3, 0.0)]).unwrap();
        assert_eq!(
            set,
            ConvexSet::Segment {
                a: pt(-1.0, 0.0),
                b: pt(1.0, 0.0)
            }
        );
    }

    #[test]
    fn single_point_errors() {
        assert!(matches!(
            ConvexSet::polygon(&[pt(2.0, 3.0), pt(2.0, 3.0)]),
            Err(Error::DegenerateSet(_))
        ));
        assert!(ConvexSet::polygon(&[]).is_err());
        assert!(ConvexSet::polygon(&[pt(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn quad_matches_diamond_membership() {
        let quad = ConvexSet::polygon(&[pt(1.0, 0.0), pt(0.0, 0.3), pt(-1.0, 0.0), pt(0.0, -0.3)])
            .unwrap();
        let diamond = ConvexSet::diamond(0.3).unwrap();
        for i in 0..100 {
            for j in 0..100 {
                let z = pt(-1.1 + 2.2 * i as f64 / 99.0, -0.4 + 0.8 * j as f64 / 99.0);
                assert_eq!(
                    quad.contains(z, 1e-12),
                    diamond.contains(z, 1e-12),
                    "membership mismatch at {z}"
                );
            }
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(ConvexSet::disk(pt(0.0, 0.0), 1.0).unwrap().diameter(), 2.0);
        assert_eq!(ConvexSet::diamond(0.3).unwrap().diameter(), 2.0);
        let square = ConvexSet::polygon(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)])
            .unwrap();
        assert!((square.diameter() - 2.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn widths() {
        assert_eq!(ConvexSet::unit_interval().min_width(), 0.0);
        let d = ConvexSet::diamond(0.3).unwrap();
        assert!((d.min_width() - 0.6 / 1.09f64.sqrt()).abs() < 1e-15);
        let square = ConvexSet::polygon(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)])
            .unwrap();
        assert!((square.min_width() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn containment_examples() {
        let disk = ConvexSet::disk(pt(0.0, 0.0), 1.0).unwrap();
        assert!(disk.contains(pt(1.0, 0.0), 0.0));
        let diamond = ConvexSet::diamond(0.3).unwrap();
        assert!(!diamond.contains(pt(0.5, 0.3), 0.0));
        let seg = ConvexSet::unit_interval();
        assert!(!seg.contains(pt(0.0, 0.2), 0.1));
        assert!(seg.contains(pt(0.0, 0.2), 0.2));
    }

    #[test]
    fn boundary_points_disk() {
        let disk = ConvexSet::disk(pt(0.0, 0.0), 1.0).unwrap();
        let pts = disk.boundary_points(std::f64::consts::FRAC_PI_2).unwrap();
        assert!(pts.len() >= 4);
        for i in 0..pts.len() {
            let a = pts[i];
            let b = pts[(i + 1) % pts.len()];
            // arc gap = angle gap on the unit circle
            let gap = (a.arg() - b.arg()).rem_euclid(2.0 * std::f64::consts::PI);
            let gap = gap.min(2.0 * std::f64::consts::PI - gap);
            assert!(gap <= std::f64::consts::FRAC_PI_2 + 1e-12);
        }
    }

    #[test]
    fn boundary_points_square_vertices() {
        let square = ConvexSet::polygon(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)])
            .unwrap();
        let pts = square.boundary_points(10.0).unwrap();
        assert_eq!(pts.len(), 4);
    }

    #[test]
    fn boundary_points_diamond_on_edges() {
        let eps = 0.3;
        let diamond = ConvexSet::diamond(eps).unwrap();
        let pts = diamond.boundary_points(0.01).unwrap();
        for z in pts {
            // every edge line satisfies ε|x| + |y| = ε
            assert!(
                (eps * z.re.abs() + z.im.abs() - eps).abs() <= 1e-12,
                "point {z} off the diamond boundary"
            );
        }
    }

    #[test]
    fn boundary_points_cap() {
        let disk = ConvexSet::disk(pt(0.0, 0.0), 1.0).unwrap();
        assert!(matches!(
            disk.boundary_points(1e-9),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn affine_disk() {
        let disk = ConvexSet::disk(pt(0.0, 0.0), 1.0).unwrap();
        let t = AffineMap::new(pt(2.0, 0.0), pt(1.0, 0.0)).unwrap();
        assert_eq!(
            disk.affine(&t),
            ConvexSet::Disk {
                center: pt(1.0, 0.0),
                radius: 2.0
            }
        );
    }

    #[test]
    fn affine_diamond_rotation() {
        let d = ConvexSet::diamond(0.3).unwrap();
        let t = AffineMap::new(pt(0.0, 1.0), pt(0.0, 0.0)).unwrap();
        let img = d.affine(&t);
        let w0 = d.min_width();
        assert!((img.min_width() - w0).abs() < 1e-12);
        match &img {
            ConvexSet::Polygon(v) => {
                assert_eq!(v.len(), 4);
                for target in [pt(0.0, 1.0), pt(-0.3, 0.0), pt(0.0, -1.0), pt(0.3, 0.0)] {
                    assert!(v.iter().any(|p| (p - target).norm() < 1e-15));
                }
            }
            other => panic!("expected polygon, got {other:?}"),
        }
    }

    #[test]
    fn affine_identity_is_same_set() {
        let d = ConvexSet::diamond(0.3).unwrap();
        assert_eq!(d.affine(&AffineMap::identity()), d);
    }

    #[test]
    fn normalize_segment() {
        let seg = ConvexSet::segment(pt(0.0, 0.0), pt(4.0, 0.0)).unwrap();
        let (k1, t) = seg.normalize().unwrap();
        assert_eq!(
            k1,
            ConvexSet::Segment {
                a: pt(-1.0, 0.0),
                b: pt(1.0, 0.0)
            }
        );
        assert!((t.apply(pt(2.0, 0.0))).norm() < 1e-15);
        assert!((t.alpha - pt(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn normalize_disk() {
        let disk = ConvexSet::disk(pt(5.0, 5.0), 3.0).unwrap();
        let (k1, t) = disk.normalize().unwrap();
        match k1 {
            ConvexSet::Disk { center, radius } => {
                assert!(center.norm() < 1e-12);
                assert!((radius - 1.0).abs() < 1e-12);
            }
            other => panic!("expected disk, got {other:?}"),
        }
        assert!((t.scale() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn normalize_diamond_is_identity() {
        let d = ConvexSet::diamond(0.3).unwrap();
        let (k1, t) = d.normalize().unwrap();
        assert!(t.is_identity());
        assert_eq!(k1, d);
    }

    #[test]
    fn affine_map_inverse_roundtrip() {
        let t = AffineMap::new(pt(1.5, -2.0), pt(0.3, 7.0)).unwrap();
        let id = t.compose(&t.inverse());
        let z = pt(0.123, -4.56);
        assert!((id.apply(z) - z).norm() < 1e-12);
    }

    #[test]
    fn set_json_roundtrip() {
        let sets = [
            ConvexSet::diamond(0.3).unwrap(),
            ConvexSet::disk(pt(1.0, -2.0), 0.5).unwrap(),
            ConvexSet::ellipse(pt(0.0, 0.0), 2.0, 0.5, 0.3).unwrap(),
            ConvexSet::unit_interval(),
            ConvexSet::polygon(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(0.5, 1.0)]).unwrap(),
        ];
        for set in sets {
            let s = serde_json::to_string(&set).unwrap();
            let back: ConvexSet = serde_json::from_str(&s).unwrap();
            assert_eq!(set, back);
        }
        let d: ConvexSet = serde_json::from_str(r#"{"shape":"diamond","epsilon":0.2}"#).unwrap();
        assert_eq!(d, ConvexSet::diamond(0.2).unwrap());
        assert!(serde_json::from_str::<ConvexSet>(r#"{"shape":"diamond","epsilon":1.5}"#).is_err());
    }

    #[test]
    fn ellipse_projection_sane() {
        let e = ConvexSet::ellipse(pt(0.0, 0.0), 2.0, 1.0, 0.0).unwrap();
        // near the flat top, the closest point to (0, 2) is (0, 1)
        let p = e.project(pt(0.0, 2.0)).unwrap();
        assert!((p - pt(0.0, 1.0)).norm() < 1e-9);
        let p = e.project(pt(3.0, 0.0)).unwrap();
        assert!((p - pt(2.0, 0.0)).norm() < 1e-9);
        // interior points are fixed
        let inside = pt(0.5, 0.2);
        assert_eq!(e.project(inside).unwrap(), inside);
        assert_eq!(e.distance(pt(0.0, 2.0)), 1.0);
    }

    #[test]
    fn calipers_match_brute_force() {
        // deterministic pseudo-random convex polygons
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..50 {
            let pts: Vec<Complex64> = (0..40)
                .map(|_| pt(next() * 4.0 - 2.0, next() * 4.0 - 2.0))
                .collect();
            if let Ok(ConvexSet::Polygon(v)) = ConvexSet::polygon(&pts) {
                let (d, _, _) = polygon_diameter(&v);
                let mut brute_d = 0.0f64;
                for i in 0..v.len() {
                    for j in 0..v.len() {
                        brute_d = brute_d.max((v[j] - v[i]).norm());
                    }
                }
                assert!((d - brute_d).abs() <= 1e-12 * brute_d);

                let w = polygon_width(&v);
                let mut brute_w = f64::INFINITY;
                for i in 0..v.len() {
                    let a = v[i];
                    let e = v[(i + 1) % v.len()] - a;
                    let elen = e.norm();
                    let far = v
                        .iter()
                        .map(|&q| cross(e, q - a) / elen)
                        .fold(0.0f64, f64::max);
                    brute_w = brute_w.min(far);
                }
                assert!((w - brute_w).abs() <= 1e-12 * brute_w.max(1.0));
            }
        }
    }
}
