use super::CornerError;
use std::f64::consts::PI;

/// Leading corner exponent and angular eigenfunction of the two-phase
/// transmission problem at a polygon vertex.
///
/// In the corner-local frame (x-axis along the vertex bisector, inside
/// sector `|theta| < a/2`) the angular function is a piecewise cosine
///
/// ```text
/// phi(theta) = s       * cos(eta*theta + phi_in)    inside,
/// phi(theta) = s*c_out * cos(eta*theta + phi_out)   outside,
/// ```
///
/// with the overall scale `s` chosen so that `max |phi| = 1`. It is
/// continuous at both interface angles and satisfies the conductivity-
/// weighted derivative jump `d phi_out = k * d phi_in` there.
#[derive(Debug, Clone, Copy)]
pub struct SingularExponent {
    pub opening_a: f64,
    pub contrast_k: f64,
    pub eta: f64,
    pub phi_in: f64,
    pub phi_out: f64,
    pub c_out: f64,
    /// Global normalization factor applied to both branches.
    pub scale: f64,
    /// Parity of the eigenfunction about the corner bisector.
    pub even_mode: bool,
}

/// Roots below this are treated as the spurious `eta = 0` root.
const SPURIOUS_ETA: f64 = 1e-6;
/// Grid step of the sign scan over (0, 1].
const SCAN_STEP: f64 = 1e-3;
/// Bisection stopping width.
const BISECT_TOL: f64 = 1e-12;
/// Contrasts closer to 1 than this leave no interface.
const UNIT_CONTRAST_TOL: f64 = 1e-12;

/// Even-parity factor of the angular matching determinant.
///
/// The 4x4 matching system (continuity and weighted derivative jump at both
/// interface angles, periodicity of the outside branch) factors by parity
/// into `f_even * f_odd`; a root of either factor is an exponent.
pub fn matching_factor_even(a: f64, k: f64, eta: f64) -> f64 {
    let alpha = a / 2.0;
    (eta * alpha).cos() * (eta * (PI - alpha)).sin()
        + k * (eta * alpha).sin() * (eta * (PI - alpha)).cos()
}

/// Odd-parity factor of the angular matching determinant.
pub fn matching_factor_odd(a: f64, k: f64, eta: f64) -> f64 {
    let alpha = a / 2.0;
    (eta * alpha).sin() * (eta * (PI - alpha)).cos()
        + k * (eta * alpha).cos() * (eta * (PI - alpha)).sin()
}

/// Smallest exponent in (0, 1] for which the angular matching system has a
/// nontrivial kernel, with the normalized kernel as the angular function.
///
/// Convex corners have `a < pi`; openings up to `2*pi` are accepted so the
/// inside/outside-swapped dual system can be posed directly. `eta = 1` is
/// returned exactly when `k = 1` or `a = pi` (no singularity).
pub fn solve_exponent(a: f64, k: f64) -> Result<SingularExponent, CornerError> {
    if !(a > 0.0 && a < 2.0 * PI) {
        return Err(CornerError::InvalidOpening(a));
    }
    if !(k > 0.0) {
        return Err(CornerError::InvalidContrast(k));
    }
    if (k - 1.0).abs() <= UNIT_CONTRAST_TOL || (a - PI).abs() <= UNIT_CONTRAST_TOL {
        return Ok(build_eigenfunction(a, k, 1.0, true));
    }

    let first_root = |f: &dyn Fn(f64) -> f64| -> Option<f64> {
        let mut prev_eta = SPURIOUS_ETA;
        let mut prev_val = f(prev_eta);
        let n = (1.0 / SCAN_STEP).round() as usize;
        for i in 1..=n {
            let eta = (i as f64 * SCAN_STEP).min(1.0);
            if eta <= prev_eta {
                continue;
            }
            let val = f(eta);
            if val == 0.0 {
                return Some(eta);
            }
            if prev_val.signum() != val.signum() {
                // Bisection on [prev_eta, eta].
                let (mut lo, mut hi) = (prev_eta, eta);
                let mut flo = prev_val;
                while hi - lo > BISECT_TOL {
                    let mid = 0.5 * (lo + hi);
                    let fm = f(mid);
                    if fm == 0.0 {
                        return Some(mid);
                    }
                    if flo.signum() != fm.signum() {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                return Some(0.5 * (lo + hi));
            }
            prev_eta = eta;
            prev_val = val;
        }
        None
    };

    let root_even = first_root(&|eta| matching_factor_even(a, k, eta));
    let root_odd = first_root(&|eta| matching_factor_odd(a, k, eta));

    let (eta, even) = match (root_even, root_odd) {
        (Some(e), Some(o)) => {
            if e <= o {
                (e, true)
            } else {
                (o, false)
            }
        }
        (Some(e), None) => (e, true),
        (None, Some(o)) => (o, false),
        (None, None) => return Ok(build_eigenfunction(a, k, 1.0, true)),
    };
    if eta <= SPURIOUS_ETA {
        return Err(CornerError::SpuriousRoot(eta));
    }
    Ok(build_eigenfunction(a, k, eta, even))
}

fn build_eigenfunction(a: f64, k: f64, eta: f64, even: bool) -> SingularExponent {
    let alpha = a / 2.0;
    let (phi_in, phi_out, c_out) = if even {
        // Inside cos(eta theta); outside c cos(eta (theta - pi)).
        // c from continuity or from the weighted derivative jump, whichever
        // denominator is better conditioned (both agree at a root).
        let cc = (eta * (PI - alpha)).cos();
        let ss = (eta * (PI - alpha)).sin();
        let c = if cc.abs() >= ss.abs() {
            (eta * alpha).cos() / cc
        } else {
            -k * (eta * alpha).sin() / ss
        };
        (0.0, -eta * PI, c)
    } else {
        // Inside sin(eta theta) = cos(eta theta - pi/2); outside
        // c sin(eta (theta - pi)).
        let cc = (eta * (PI - alpha)).cos();
        let ss = (eta * (PI - alpha)).sin();
        let c = if ss.abs() >= cc.abs() {
            -(eta * alpha).sin() / ss
        } else {
            k * (eta * alpha).cos() / cc
        };
        (-PI / 2.0, -eta * PI - PI / 2.0, c)
    };

    // Normalize so max |phi| over the full circle equals 1.
    let max_in = max_abs_cos(eta, phi_in, -alpha, alpha);
    let max_out = c_out.abs() * max_abs_cos(eta, phi_out, alpha, 2.0 * PI - alpha);
    let scale = 1.0 / max_in.max(max_out);

    SingularExponent {
        opening_a: a,
        contrast_k: k,
        eta,
        phi_in,
        phi_out,
        c_out,
        scale,
        even_mode: even,
    }
}

/// Maximum of |cos(eta*theta + phase)| for theta in [t0, t1].
fn max_abs_cos(eta: f64, phase: f64, t0: f64, t1: f64) -> f64 {
    let p0 = eta * t0 + phase;
    let p1 = eta * t1 + phase;
    let (lo, hi) = if p0 <= p1 { (p0, p1) } else { (p1, p0) };
    // |cos| attains 1 at integer multiples of pi.
    if (lo / PI).ceil() <= (hi / PI).floor() {
        return 1.0;
    }
    p0.cos().abs().max(p1.cos().abs())
}

impl SingularExponent {
    /// Interface angles of the inside sector in the corner frame.
    pub fn interface_angles(&self) -> (f64, f64) {
        (self.opening_a / 2.0, -self.opening_a / 2.0)
    }

    /// Angular function at `theta` in `[-pi, pi]` (corner frame, inside
    /// sector centered on the positive x-axis).
    pub fn eval_angular(&self, theta: f64) -> f64 {
        let alpha = self.opening_a / 2.0;
        if theta.abs() <= alpha {
            self.scale * (self.eta * theta + self.phi_in).cos()
        } else {
            // Outside branch is parameterized continuously on (alpha, 2pi - alpha).
            let t = if theta > alpha { theta } else { theta + 2.0 * PI };
            self.scale * self.c_out * (self.eta * t + self.phi_out).cos()
        }
    }

    /// Derivative of the inside branch, valid for `|theta| <= a/2`.
    pub fn angular_derivative_inside(&self, theta: f64) -> f64 {
        -self.scale * self.eta * (self.eta * theta + self.phi_in).sin()
    }

    /// Derivative of the outside branch at angle `theta` (wrapped like
    /// [`Self::eval_angular`]).
    pub fn angular_derivative_outside(&self, theta: f64) -> f64 {
        let alpha = self.opening_a / 2.0;
        let t = if theta >= alpha { theta } else { theta + 2.0 * PI };
        -self.scale * self.c_out * self.eta * (self.eta * t + self.phi_out).sin()
    }

    /// Singular model `r^eta * phi(theta)` without the coefficient.
    pub fn eval_singular(&self, r: f64, theta: f64) -> f64 {
        r.powf(self.eta) * self.eval_angular(theta)
    }

    /// Amplitude of the inside branch after normalization.
    pub fn inside_amplitude(&self) -> f64 {
        self.scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn unit_contrast_gives_no_singularity() {
        for a in [0.5, 1.0, 2.0, 3.0] {
            let se = solve_exponent(a, 1.0).unwrap();
            assert_eq!(se.eta, 1.0);
            // Reproduces a global cosine.
            for theta in [-2.8, -1.0, 0.0, 0.3, 1.4, 3.0] {
                assert_relative_eq!(
                    se.eval_angular(theta),
                    se.scale * theta.cos(),
                    max_relative = 1e-12,
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn flat_interface_gives_no_singularity() {
        for k in [0.3, 2.0, 7.5] {
            let se = solve_exponent(PI, k).unwrap();
            assert_eq!(se.eta, 1.0);
        }
    }

    #[test]
    fn square_corner_contrast_two_matches_hand_value() {
        // For a = pi/2, k = 2 the even factor reduces to
        // 3 sin(pi eta) = sin(pi eta / 2); root near 0.8934.
        let se = solve_exponent(PI / 2.0, 2.0).unwrap();
        assert!(se.even_mode);
        assert!(se.eta > 0.89 && se.eta < 0.90, "eta = {}", se.eta);
        let resid = 3.0 * (PI * se.eta).sin() - (PI * se.eta / 2.0).sin();
        assert!(resid.abs() < 1e-10, "residual {resid}");
    }

    #[test]
    fn continuity_and_weighted_jump_at_interfaces() {
        for (a, k) in [(PI / 2.0, 2.0), (1.0, 0.35), (2.5, 5.0), (0.7, 1.8)] {
            let se = solve_exponent(a, k).unwrap();
            let (tp, tm) = se.interface_angles();
            for t in [tp, tm] {
                let inside = se.scale * (se.eta * t + se.phi_in).cos();
                let outside_t = if t > 0.0 { t } else { t + 2.0 * PI };
                let outside = se.scale * se.c_out * (se.eta * outside_t + se.phi_out).cos();
                assert!(
                    (inside - outside).abs() < 1e-10,
                    "continuity violated at {t}: {inside} vs {outside}"
                );
                let d_in = se.angular_derivative_inside(t);
                let d_out = se.angular_derivative_outside(t);
                assert!(
                    (d_out - k * d_in).abs() < 1e-8 * d_in.abs().max(1.0),
                    "weighted jump violated at {t}: {d_out} vs k*{d_in}"
                );
            }
            // Normalization: max over a dense grid is 1 within tolerance.
            let max = (0..20_000)
                .map(|i| se.eval_angular(-PI + 2.0 * PI * i as f64 / 20_000.0).abs())
                .fold(0.0f64, f64::max);
            assert!(max <= 1.0 + 1e-12 && max > 1.0 - 1e-4, "max {max}");
        }
    }

    #[test]
    fn eta_increases_monotonically_toward_one_as_contrast_flattens() {
        let a = PI / 2.0;
        let etas: Vec<f64> = [1.5, 1.25, 1.1, 1.01]
            .iter()
            .map(|&k| solve_exponent(a, k).unwrap().eta)
            .collect();
        for w in etas.windows(2) {
            assert!(w[1] > w[0], "eta not increasing: {etas:?}");
        }
        assert!(etas[3] > 0.995 && etas[3] < 1.0);
    }

    #[test]
    fn contrast_duality_under_sector_swap() {
        for &a in &[0.6, 1.2, 1.9, 2.6] {
            for &k in &[0.25, 0.6, 1.7, 3.5] {
                let direct = solve_exponent(a, k).unwrap().eta;
                let dual = solve_exponent(2.0 * PI - a, 1.0 / k).unwrap().eta;
                assert!(
                    (direct - dual).abs() < 1e-9,
                    "duality broken at a={a}, k={k}: {direct} vs {dual}"
                );
            }
        }
    }

    #[test]
    fn exponent_band_is_interior_on_admissible_grid() {
        let mut lo = f64::INFINITY;
        let mut hi: f64 = 0.0;
        for i in 0..6 {
            let a = 0.5 + (2.5 - 0.5) * i as f64 / 5.0;
            for j in 0..6 {
                let k = [0.3, 0.6, 0.9, 1.5, 3.0, 6.0][j];
                let eta = solve_exponent(a, k).unwrap().eta;
                lo = lo.min(eta);
                hi = hi.max(eta);
            }
        }
        assert!(lo > 0.0 && hi < 1.0, "band [{lo}, {hi}] not interior");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(solve_exponent(-1.0, 2.0).is_err());
        assert!(solve_exponent(7.0, 2.0).is_err());
        assert!(solve_exponent(1.0, -2.0).is_err());
    }
}
