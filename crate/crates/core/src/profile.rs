//! Rank probability profiles: mapping `(L, m, epsilon)` to one edge
//! probability per rank.
//!
//! The cumulative number of edges expected within the first `x` ranks is a
//! rational quadratic Bézier curve through `(0, 0)` and `(L, m)` with control
//! point `(m, m)` and middle weight `b`. `epsilon` is rescaled to `b` via
//! `b = log(0.5) / log(1 - epsilon)`, so `epsilon = 0.5` lands exactly on
//! `b = 1`. The two limits bypass the curve entirely: `epsilon = 0` is the
//! exact step profile (first `m` ranks get probability 1), `epsilon = 1` the
//! exact uniform `m / L`.

use crate::{Error, Result};

/// Weight substituted at the `epsilon = 0` boundary, where the formula
/// diverges. The step profile is produced in closed form, so this constant
/// only matters for `cumulative_edges` queries at `b = B_MAX`.
pub const B_MAX: f64 = 1e8;

/// Rescale `epsilon` in `[0, 1]` to the Bézier middle-point weight `b`.
pub fn epsilon_to_weight(epsilon: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    if epsilon == 0.0 {
        Ok(B_MAX)
    } else if epsilon == 1.0 {
        Ok(0.0)
    } else {
        Ok(0.5f64.ln() / (1.0 - epsilon).ln())
    }
}

/// Rational quadratic Bézier with control points `(0,0)`, `(m,m)`, `(L,m)`
/// and weights `(1, b, 1)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RationalBezier {
    l: f64,
    m: f64,
    b: f64,
}

impl RationalBezier {
    pub(crate) fn new(l: f64, m: f64, b: f64) -> Self {
        RationalBezier { l, m, b }
    }

    #[inline]
    fn weight(&self, t: f64) -> f64 {
        1.0 + 2.0 * (self.b - 1.0) * t * (1.0 - t)
    }

    #[inline]
    pub(crate) fn x(&self, t: f64) -> f64 {
        (2.0 * self.b * self.m * t * (1.0 - t) + self.l * t * t) / self.weight(t)
    }

    #[inline]
    pub(crate) fn y(&self, t: f64) -> f64 {
        self.m * (2.0 * self.b * t * (1.0 - t) + t * t) / self.weight(t)
    }

    #[inline]
    fn x_deriv(&self, t: f64) -> f64 {
        let num = 2.0 * self.b * self.m * t * (1.0 - t) + self.l * t * t;
        let num_d = 2.0 * self.b * self.m * (1.0 - 2.0 * t) + 2.0 * self.l * t;
        let w = self.weight(t);
        let w_d = 2.0 * (self.b - 1.0) * (1.0 - 2.0 * t);
        (num_d * w - num * w_d) / (w * w)
    }

    /// Invert the strictly increasing map `t -> x(t)` on `[lo_hint, 1]`.
    ///
    /// Bisection guarantees convergence; Newton steps inside the live bracket
    /// polish the root well past the `1e-9 * L` contract so that downstream
    /// rank differences stay monotone at the 1e-12 level.
    pub(crate) fn invert(&self, x_target: f64, lo_hint: f64) -> f64 {
        if x_target <= 0.0 {
            return 0.0;
        }
        if x_target >= self.l {
            return 1.0;
        }
        let tol = 1e-15 * self.l.max(1.0);
        let mut lo = lo_hint.clamp(0.0, 1.0);
        let mut hi = 1.0;
        let mut t = 0.5 * (lo + hi);
        for _ in 0..200 {
            let fx = self.x(t) - x_target;
            if fx == 0.0 {
                break;
            }
            if fx > 0.0 {
                hi = t;
            } else {
                lo = t;
            }
            let d = self.x_deriv(t);
            let mut next = if d > 0.0 { t - fx / d } else { f64::NAN };
            if !(next > lo && next < hi) {
                next = 0.5 * (lo + hi);
            }
            if fx.abs() <= tol && (next - t).abs() <= f64::EPSILON * t.max(1e-300) {
                break;
            }
            if next == t || hi - lo <= f64::EPSILON * hi {
                break;
            }
            t = next;
        }
        t
    }

    /// `y(t2) - y(t1)` with the common mass cancelled symbolically, so the
    /// result carries only relative error even when both endpoints are close
    /// to `m`.
    pub(crate) fn segment(&self, t1: f64, t2: f64) -> f64 {
        let b = self.b;
        let bracket = 2.0 * b - (2.0 * b - 1.0) * (t1 + t2) + 2.0 * (b - 1.0) * t1 * t2;
        self.m * (t2 - t1) * bracket / (self.weight(t1) * self.weight(t2))
    }
}

/// Expected number of edges within the first `x` ranks, `Y(x)`, for pair
/// count `l`, edge target `m`, and Bézier weight `b`.
///
/// `Y(0) = 0` and `Y(l) = m` exactly; `b = 0` degenerates to the chord
/// `Y(x) = m x / l`.
pub fn cumulative_edges(l: usize, m: f64, b: f64, x: f64) -> Result<f64> {
    if !(0.0..=l as f64).contains(&x) {
        return Err(Error::AbscissaOutOfRange { x, pair_count: l });
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == l as f64 {
        return Ok(m);
    }
    let curve = RationalBezier::new(l as f64, m, b);
    Ok(curve.y(curve.invert(x, 0.0)))
}

/// The rank probability vector `P(r)`, `r` in `[1, L]`, for a given
/// `(L, m, epsilon)`.
#[derive(Debug, Clone)]
pub struct ProbabilityProfile {
    pair_count: usize,
    m: f64,
    epsilon: f64,
    b: f64,
    probs: Vec<f64>,
}

impl ProbabilityProfile {
    /// Build the profile. `epsilon = 0` and `epsilon = 1` use exact closed
    /// forms; otherwise `P(r) = Y(r) - Y(r-1)`, the discrete difference of
    /// the cumulative Bézier curve, which telescopes to `sum P = m`.
    pub fn new(pair_count: usize, m: f64, epsilon: f64) -> Result<Self> {
        if !(0.0..=pair_count as f64).contains(&m) {
            return Err(Error::InfeasibleEdgeCount { m, pair_count });
        }
        let b = epsilon_to_weight(epsilon)?;

        let probs = if epsilon == 0.0 {
            let mut p = vec![0.0; pair_count];
            let whole = m.floor() as usize;
            for slot in p.iter_mut().take(whole) {
                *slot = 1.0;
            }
            let frac = m - m.floor();
            if frac > 0.0 && whole < pair_count {
                p[whole] = frac;
            }
            p
        } else if epsilon == 1.0 {
            vec![m / pair_count as f64; pair_count]
        } else {
            let curve = RationalBezier::new(pair_count as f64, m, b);
            let mut p = Vec::with_capacity(pair_count);
            let mut t_prev = 0.0;
            for r in 1..=pair_count {
                let t_r = if r == pair_count {
                    1.0
                } else {
                    curve.invert(r as f64, t_prev)
                };
                p.push(curve.segment(t_prev, t_r).clamp(0.0, 1.0));
                t_prev = t_r;
            }
            p
        };

        Ok(ProbabilityProfile {
            pair_count,
            m,
            epsilon,
            b,
            probs,
        })
    }

    pub fn pair_count(&self) -> usize {
        self.pair_count
    }

    /// The edge-count target `m` the profile was built for.
    pub fn target_edges(&self) -> f64 {
        self.m
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn weight(&self) -> f64 {
        self.b
    }

    /// Probabilities indexed by rank - 1.
    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    /// `P(r)` for a 1-based rank.
    pub fn probability_at(&self, rank: usize) -> Option<f64> {
        if rank == 0 {
            return None;
        }
        self.probs.get(rank - 1).copied()
    }

    /// `m_hat = sum_r P(r)`; equals the target `m` within 1e-9 relative.
    /// Kahan summation keeps the check meaningful at large `L`.
    pub fn expected_edges(&self) -> f64 {
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for &p in &self.probs {
            let y = p - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_formula_fixed_point() {
        assert_eq!(epsilon_to_weight(0.5).unwrap(), 1.0);
        assert_eq!(epsilon_to_weight(0.0).unwrap(), B_MAX);
        assert_eq!(epsilon_to_weight(1.0).unwrap(), 0.0);
        assert!(epsilon_to_weight(-0.1).is_err());
        assert!(epsilon_to_weight(1.1).is_err());
        assert!(epsilon_to_weight(f64::NAN).is_err());
    }

    #[test]
    fn zero_weight_degenerates_to_chord() {
        let l = 130_816;
        let m = 128.0;
        for x in [0.0, 1.0, 17.5, 65_000.0, 130_816.0] {
            let y = cumulative_edges(l, m, 0.0, x).unwrap();
            assert!((y - m * x / l as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn endpoints_interpolate_exactly() {
        for b in [0.0, 0.3, 1.0, 40.0, B_MAX] {
            assert_eq!(cumulative_edges(100, 7.0, b, 0.0).unwrap(), 0.0);
            assert_eq!(cumulative_edges(100, 7.0, b, 100.0).unwrap(), 7.0);
        }
        assert!(cumulative_edges(100, 7.0, 1.0, -0.1).is_err());
        assert!(cumulative_edges(100, 7.0, 1.0, 100.1).is_err());
    }

    #[test]
    fn cumulative_at_m_sits_between_chord_and_control_polygon() {
        // b = 1, L = 130816, m = 128: Y(m) strictly inside (m^2/L, m).
        let l = 130_816usize;
        let m = 128.0;
        let y = cumulative_edges(l, m, 1.0, m).unwrap();
        assert!(y > m * m / l as f64);
        assert!(y < m);
    }

    #[test]
    fn parametric_x_is_strictly_increasing() {
        for b in [1e-6, 0.1, 1.0, 50.0, B_MAX] {
            let curve = RationalBezier::new(1000.0, 30.0, b);
            let mut prev = curve.x(0.0);
            for i in 1..=2000 {
                let t = i as f64 / 2000.0;
                let x = curve.x(t);
                assert!(x > prev, "x(t) not increasing at t={t}, b={b}");
                assert!(curve.x_deriv(t - 0.5 / 2000.0) > 0.0);
                prev = x;
            }
        }
    }

    #[test]
    fn step_profile_at_epsilon_zero() {
        let p = ProbabilityProfile::new(6, 3.0, 0.0).unwrap();
        assert_eq!(p.probabilities(), &[1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(p.expected_edges(), 3.0);
    }

    #[test]
    fn uniform_profile_at_epsilon_one() {
        let l = crate::pair::pair_count(512);
        let p = ProbabilityProfile::new(l, 128.0, 1.0).unwrap();
        for &prob in p.probabilities() {
            assert_eq!(prob, 128.0 / l as f64);
        }
        assert!((p.expected_edges() - 128.0).abs() / 128.0 < 1e-9);
    }

    #[test]
    fn midpoint_profile_is_monotone_and_conserves_mass() {
        let p = ProbabilityProfile::new(6, 3.0, 0.5).unwrap();
        assert!((p.expected_edges() - 3.0).abs() < 1e-9);
        let probs = p.probabilities();
        assert!(probs[0] > 0.5 && probs[0] < 1.0);
        for w in probs.windows(2) {
            assert!(w[1] <= w[0] + 1e-12);
        }
    }

    #[test]
    fn expected_edges_tracks_target() {
        let l = crate::pair::pair_count(100);
        let p = ProbabilityProfile::new(l, 500.0, 0.3).unwrap();
        let m_hat = p.expected_edges();
        assert!((m_hat - 500.0).abs() / 500.0 < 1e-9);
    }

    #[test]
    fn infeasible_edge_count_is_rejected() {
        assert!(ProbabilityProfile::new(6, 7.0, 0.5).is_err());
        assert!(ProbabilityProfile::new(6, -1.0, 0.5).is_err());
        // m = L is the complete graph; every rank gets probability 1.
        let full = ProbabilityProfile::new(6, 6.0, 0.5).unwrap();
        for &p in full.probabilities() {
            assert!((p - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn profiles_approach_uniform_as_epsilon_grows() {
        // The head of the curve always leaves the origin with slope 1, so the
        // worst-case deviation from m/L shrinks only slowly with epsilon.
        // Check the documented limit as a monotone trend plus exactness at 1.
        let l = 100usize;
        let m = 10.0;
        let uniform = m / l as f64;
        let deviation = |eps: f64| {
            let p = ProbabilityProfile::new(l, m, eps).unwrap();
            p.probabilities()
                .iter()
                .map(|q| (q - uniform).abs())
                .fold(0.0f64, f64::max)
        };
        let devs: Vec<f64> = [0.5, 0.9, 0.99, 0.999]
            .iter()
            .map(|&e| deviation(e))
            .collect();
        for w in devs.windows(2) {
            assert!(w[1] < w[0]);
        }
        assert_eq!(deviation(1.0), 0.0);
    }

    #[test]
    fn profiles_approach_step_as_epsilon_shrinks() {
        // At epsilon = 0.001 the corner of the curve is smeared over roughly
        // L * epsilon ranks, so all but that sliver of the first m entries
        // sit near 1.
        let l = 10_000usize;
        let m = 1000usize;
        let p = ProbabilityProfile::new(l, m as f64, 0.001).unwrap();
        let high = p.probabilities()[..m].iter().filter(|&&q| q > 0.9).count();
        assert!(
            high as f64 >= 0.95 * m as f64,
            "only {high} of {m} above 0.9"
        );
        assert!(p.probabilities()[0] > 0.99);
    }
}
