//! Explicit test polynomials and the case selector that certifies the upper
//! bound on `M_n(K₁)` for normalized sets.
//!
//! In the `d = 2`, `±1 ∈ K₁` frame the witnesses are `Q_n(z) = (z-1)^n` for
//! `n ≤ 199` or width `≥ 3/7`, and otherwise `p_m(z) = (z²-1)^m` (even
//! `n = 2m`) or `P_m(z) = (z-1)(z²-1)^m` (odd `n = 2m+1`). Each witness's
//! ratio is at most `7·max{wn, 2√n}`, i.e. `28·max{wn/d², √n/d}` on the
//! `d = 2` scale.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::ConvexSet;
use crate::polyroot::RootPoly;

/// Width threshold of the wide-set branch.
pub const WIDE_WIDTH: f64 = 3.0 / 7.0;

/// Largest degree handled by the `(z-1)^n` branch.
pub const SMALL_N_MAX: u32 = 199;

/// Which proof case produced the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// `n ≤ 199` or `w ≥ 3/7`: the witness is `(z-1)^n`.
    SmallNOrWide,
    /// `n = 2m > 199`, `w < 3/7`: the witness is `(z²-1)^m`.
    Even,
    /// `n = 2m+1 > 199`, `w < 3/7`: the witness is `(z-1)(z²-1)^m`.
    Odd,
}

/// A witness polynomial for the upper bound, with its selection case.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessChoice {
    pub case_tag: CaseTag,
    /// `m` of the even/odd construction; 0 in the small/wide case.
    pub m: u32,
    pub polynomial: RootPoly,
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `Q_n(z) = (z-1)^n`.
pub fn q_poly(n: u32) -> Result<RootPoly> {
    if n == 0 {
        return Err(Error::InvalidInput("q_poly needs n ≥ 1".into()));
    }
    RootPoly::power(re(1.0), re(1.0), n)
}

/// `p_m(z) = (z²-1)^m`, degree `2m`.
pub fn p_poly(m: u32) -> Result<RootPoly> {
    if m == 0 {
        return Err(Error::InvalidInput("p_poly needs m ≥ 1".into()));
    }
    let mut roots = vec![re(1.0); m as usize];
    roots.extend(vec![re(-1.0); m as usize]);
    RootPoly::new(re(1.0), roots)
}

/// `P_m(z) = (z-1)(z²-1)^m`, degree `2m+1`.
pub fn big_p_poly(m: u32) -> Result<RootPoly> {
    if m == 0 {
        return Err(Error::InvalidInput("big_p_poly needs m ≥ 1".into()));
    }
    let mut roots = vec![re(1.0); m as usize + 1];
    roots.extend(vec![re(-1.0); m as usize]);
    RootPoly::new(re(1.0), roots)
}

/// Checks the normalized-frame precondition `d(K) = 2`, `±1 ∈ K`.
pub fn check_normalized(set: &ConvexSet) -> Result<()> {
    let tol = 1e-6;
    if (set.diameter() - 2.0).abs() > tol {
        return Err(Error::NotNormalized(format!(
            "diameter {} ≠ 2",
            set.diameter()
        )));
    }
    for z in [re(1.0), re(-1.0)] {
        if !set.contains(z, tol) {
            return Err(Error::NotNormalized(format!("{z} not in the set")));
        }
    }
    Ok(())
}

/// Witness polynomial for degree `n` on a normalized set.
///
/// Deterministic and total on its precondition domain: `Q_n` when `n ≤ 199`
/// or `w ≥ 3/7` (the boundary width goes to this branch), else `p_{n/2}`
/// for even `n` and `P_{(n-1)/2}` for odd `n`; both have `m ≥ 100` because
/// `n > 199`.
pub fn witness_for(n: u32, k1: &ConvexSet) -> Result<WitnessChoice> {
    if n == 0 {
        return Err(Error::InvalidInput("witness_for needs n ≥ 1".into()));
    }
    check_normalized(k1)?;
    let w = k1.min_width();
    if n <= SMALL_N_MAX || w >= WIDE_WIDTH {
        Ok(WitnessChoice {
            case_tag: CaseTag::SmallNOrWide,
            m: 0,
            polynomial: q_poly(n)?,
        })
    } else if n % 2 == 0 {
        let m = n / 2;
        Ok(WitnessChoice {
            case_tag: CaseTag::Even,
            m,
            polynomial: p_poly(m)?,
        })
    } else {
        let m = (n - 1) / 2;
        Ok(WitnessChoice {
            case_tag: CaseTag::Odd,
            m,
            polynomial: big_p_poly(m)?,
        })
    }
}

/// The Theorem-1 style upper bound `7·max{wn, 2√n}` on the normalized scale.
pub fn witness_bound(n: u32, w: f64) -> f64 {
    7.0 * (w * n as f64).max(2.0 * (n as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyroot::{markov_ratio, sup_norm};

    #[test]
    fn q_poly_basics() {
        assert!(q_poly(0).is_err());
        let q1 = q_poly(1).unwrap();
        assert_eq!(q1.degree(), 1);
        let q5 = q_poly(5).unwrap();
        let v = q5.eval_log(re(-1.0));
        assert!((v.magnitude() - 32.0).abs() < 1e-12);
    }

    #[test]
    fn q_199_ratio_on_disk() {
        let disk = ConvexSet::disk(Complex64::new(0.0, 0.0), 1.0).unwrap();
        let q = q_poly(199).unwrap();
        let r = markov_ratio(&q, &disk, 1e-4).unwrap();
        assert!(r.hi <= 99.5 * (1.0 + 1e-3));
        assert!(r.lo <= 99.5);
    }

    #[test]
    fn p_poly_shapes() {
        assert!(p_poly(0).is_err());
        assert_eq!(p_poly(1).unwrap().degree(), 2);
        let p = p_poly(100).unwrap();
        assert_eq!(p.degree(), 200);
        let v = p.eval_log(Complex64::new(0.0, 1.0));
        assert!((v.log_abs - 100.0 * 2.0f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn big_p_poly_shapes() {
        assert!(big_p_poly(0).is_err());
        assert_eq!(big_p_poly(1).unwrap().degree(), 3);
        assert_eq!(big_p_poly(100).unwrap().degree(), 201);
    }

    #[test]
    fn big_p_derivative_factored_form() {
        // P_m'(z) = (z-1)(z²-1)^{m-1}(z+1+2mz)
        let m = 100u32;
        let bp = big_p_poly(m).unwrap();
        let mut state = 1234567u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            let z = Complex64::new(next() * 2.0 - 1.0, next() * 0.8 - 0.4);
            let direct = bp.eval_derivative_log(z);
            let zm1 = z - 1.0;
            let z2m1 = z * z - 1.0;
            let factor = z + 1.0 + 2.0 * m as f64 * z;
            let expected =
                zm1.norm().ln() + (m as f64 - 1.0) * z2m1.norm().ln() + factor.norm().ln();
            assert!(
                (direct.log_abs - expected).abs() <= 1e-9 * expected.abs().max(1.0),
                "mismatch at {z}: {} vs {expected}",
                direct.log_abs
            );
        }
    }

    #[test]
    fn p_m_dominated_by_big_p_m() {
        // ‖p_m‖ ≤ 2‖P_m‖ on a normalized set
        let k1 = ConvexSet::diamond(0.2).unwrap();
        let p = p_poly(100).unwrap();
        let bp = big_p_poly(100).unwrap();
        let np = sup_norm(&p, &k1, 1e-6).unwrap();
        let nbp = sup_norm(&bp, &k1, 1e-6).unwrap();
        assert!(np.log_upper <= 2.0f64.ln() + nbp.log_lower);
    }

    #[test]
    fn witness_cases() {
        let k1 = ConvexSet::diamond(0.2).unwrap(); // w ≈ 0.392 < 3/7
        assert_eq!(
            witness_for(50, &k1).unwrap().case_tag,
            CaseTag::SmallNOrWide
        );
        let even = witness_for(200, &k1).unwrap();
        assert_eq!(even.case_tag, CaseTag::Even);
        assert_eq!(even.m, 100);
        assert_eq!(even.polynomial.degree(), 200);
        let odd = witness_for(201, &k1).unwrap();
        assert_eq!(odd.case_tag, CaseTag::Odd);
        assert_eq!(odd.m, 100);
        assert_eq!(odd.polynomial.degree(), 201);

        let disk = ConvexSet::disk(Complex64::new(0.0, 0.0), 1.0).unwrap(); // w = 2 ≥ 3/7
        assert_eq!(
            witness_for(500, &disk).unwrap().case_tag,
            CaseTag::SmallNOrWide
        );
    }

    #[test]
    fn witness_needs_normalized_set() {
        let disk = ConvexSet::disk(Complex64::new(0.0, 0.0), 3.0).unwrap();
        assert!(matches!(
            witness_for(10, &disk),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn witness_ratio_examples() {
        let k1 = ConvexSet::diamond(0.2).unwrap();
        let w = k1.min_width();

        let q = witness_for(50, &k1).unwrap();
        let r = markov_ratio(&q.polynomial, &k1, 1e-3).unwrap();
        assert!(r.hi <= 4.0 * (w * 50.0).max(2.0 * 50f64.sqrt()));

        let even = witness_for(200, &k1).unwrap();
        let r = markov_ratio(&even.polynomial, &k1, 1e-3).unwrap();
        assert!(r.hi <= 3f64.sqrt() * (w * 200.0).max(2.0 * 200f64.sqrt()));

        let odd = witness_for(201, &k1).unwrap();
        let r = markov_ratio(&odd.polynomial, &k1, 1e-3).unwrap();
        assert!(r.hi <= 7.0 * (w * 201.0).max(2.0 * 201f64.sqrt()));
    }
}
