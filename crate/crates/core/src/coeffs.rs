//! Model parameters and the diagonal coefficient field `A(x)`, with its
//! ellipticity/Hölder certification.

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::scalar::Real;
use crate::special;
use rand::Rng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

/// Global problem data. `beta` is kept in the reduced range `(0, alpha/4]`;
/// a larger declared exponent is substituted by `alpha/4` on construction
/// (the Hölder condition only gets weaker, so the declaration stays valid).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelParams<T> {
    pub alpha: T,
    pub d: usize,
    pub beta: T,
    pub b1: T,
    pub b2: T,
    pub b3: T,
    pub horizon: T,
    /// Generator constant; derived from `alpha`.
    pub a_alpha: T,
    /// Set when the declared Hölder exponent was clamped to `alpha/4`.
    pub beta_clamped: bool,
}

impl<T: Real> ModelParams<T> {
    pub fn new(alpha: T, d: usize, beta: T, b1: T, b2: T, b3: T, horizon: T) -> Result<Self> {
        let a = alpha.as_f64();
        if !(a > 0.0 && a < 2.0) {
            return Err(Error::domain(format!("alpha must lie in (0,2), got {a}")));
        }
        if d < 2 {
            return Err(Error::domain(format!("dimension must be >= 2, got {d}")));
        }
        if !(beta > T::zero()) {
            return Err(Error::domain("beta must be positive".to_string()));
        }
        if !(b1 > T::zero() && b1 <= b2) {
            return Err(Error::domain("need 0 < b1 <= b2".to_string()));
        }
        if !(b3 > T::zero()) {
            return Err(Error::domain("b3 must be positive".to_string()));
        }
        if !(horizon > T::zero()) {
            return Err(Error::domain("horizon must be positive".to_string()));
        }
        let cap = alpha / T::of(4.0);
        let (beta, beta_clamped) = if beta > cap { (cap, true) } else { (beta, false) };
        Ok(ModelParams {
            alpha,
            d,
            beta,
            b1,
            b2,
            b3,
            horizon,
            a_alpha: special::stable_generator_constant(alpha),
            beta_clamped,
        })
    }
}

/// Built-in coefficient families.
///
/// All built-ins make entry `i` depend on coordinate `i` only, which the
/// fast separable paths downstream exploit; expression entries may couple
/// coordinates and then fall back to dense evaluation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum FieldFamily {
    /// `a_ii(x) = level` for all i.
    Constant { level: f64 },
    /// `a_ii(x) = b1 + (b2-b1) (1 + sin(freq x_i + phase_i))/2`.
    SmoothPeriodic { freq: f64, phases: Vec<f64> },
    /// `a_ii(x) = b1 + (b2-b1) min(1, |x_i - center_i|^beta)`; genuinely only
    /// beta-Hölder at the kink.
    HolderKink { centers: Vec<f64> },
    /// One expression per diagonal entry, in coordinates `x1..xd`.
    Expressions { entries: Vec<String> },
}

/// Diagonal coefficient matrix with its declared data.
#[derive(Debug, Clone)]
pub struct CoefficientField<T> {
    params: ModelParams<T>,
    family: FieldFamily,
    parsed: Option<Vec<Expr>>,
    /// For each entry, the single coordinate it depends on (if any): enables
    /// the separable fast paths.
    separable_axes: Option<Vec<usize>>,
}

/// Certification outcome of sampling-based field verification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldReport {
    pub max_bound_violation: f64,
    pub max_holder_quotient: f64,
    pub sigma_holder_quotient: f64,
    pub samples: usize,
    pub passed: bool,
}

impl<T: Real> CoefficientField<T> {
    pub fn new(params: ModelParams<T>, family: FieldFamily) -> Result<Self> {
        let d = params.d;
        match &family {
            FieldFamily::Constant { level } => {
                if !(*level > 0.0) {
                    return Err(Error::domain("constant level must be positive".into()));
                }
            }
            FieldFamily::SmoothPeriodic { phases, .. } => {
                if phases.len() != d {
                    return Err(Error::domain(format!(
                        "need {d} phases, got {}",
                        phases.len()
                    )));
                }
            }
            FieldFamily::HolderKink { centers } => {
                if centers.len() != d {
                    return Err(Error::domain(format!(
                        "need {d} kink centers, got {}",
                        centers.len()
                    )));
                }
            }
            FieldFamily::Expressions { entries } => {
                if entries.len() != d {
                    return Err(Error::domain(format!(
                        "need {d} expressions, got {}",
                        entries.len()
                    )));
                }
            }
        }
        let parsed = match &family {
            FieldFamily::Expressions { entries } => Some(
                entries
                    .iter()
                    .map(|s| Expr::parse(s))
                    .collect::<Result<Vec<_>>>()?,
            ),
            _ => None,
        };
        let separable_axes = match &family {
            FieldFamily::Constant { .. }
            | FieldFamily::SmoothPeriodic { .. }
            | FieldFamily::HolderKink { .. } => Some((0..d).collect()),
            FieldFamily::Expressions { .. } => {
                let exprs = parsed.as_ref().unwrap();
                let mut axes = Vec::with_capacity(d);
                let mut ok = true;
                for (i, e) in exprs.iter().enumerate() {
                    let free = e.free_coords();
                    match free.as_slice() {
                        [] => axes.push(i),
                        [only] => axes.push(*only),
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    Some(axes)
                } else {
                    None
                }
            }
        };
        Ok(CoefficientField {
            params,
            family,
            parsed,
            separable_axes,
        })
    }

    pub fn params(&self) -> &ModelParams<T> {
        &self.params
    }

    pub fn family(&self) -> &FieldFamily {
        &self.family
    }

    pub fn dim(&self) -> usize {
        self.params.d
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.family, FieldFamily::Constant { .. })
    }

    /// `Some(axes)` when every entry `i` depends on a single coordinate
    /// `axes[i]`; downstream tensor factorizations additionally require
    /// `axes[i] == i`.
    pub fn separable_axes(&self) -> Option<&[usize]> {
        self.separable_axes.as_deref()
    }

    pub fn is_coordinatewise(&self) -> bool {
        match &self.separable_axes {
            Some(axes) => axes.iter().enumerate().all(|(i, &a)| a == i),
            None => false,
        }
    }

    /// Diagonal entry `a_ii(x)` (0-based index).
    pub fn a(&self, i: usize, x: &[T]) -> T {
        debug_assert!(i < self.params.d);
        match &self.family {
            FieldFamily::Constant { level } => T::of(*level),
            FieldFamily::SmoothPeriodic { freq, phases } => {
                let b1 = self.params.b1;
                let amp = (self.params.b2 - b1) * T::of(0.5);
                b1 + amp * (T::one() + (T::of(*freq) * x[i] + T::of(phases[i])).sin())
            }
            FieldFamily::HolderKink { centers } => {
                let b1 = self.params.b1;
                let amp = self.params.b2 - b1;
                let r = (x[i] - T::of(centers[i])).abs();
                b1 + amp * r.powf(self.params.beta).min(T::one())
            }
            FieldFamily::Expressions { .. } => {
                let pt: Vec<f64> = x.iter().map(|v| v.as_f64()).collect();
                T::of(self.parsed.as_ref().unwrap()[i].eval(&pt))
            }
        }
    }

    /// Entry `a_ii` as a function of the single coordinate it depends on.
    /// Only valid when `separable_axes` is set.
    pub fn a_on_axis(&self, i: usize, coord: T) -> T {
        debug_assert!(self.separable_axes.is_some());
        let mut pt = vec![T::zero(); self.params.d];
        let axis = self.separable_axes.as_ref().unwrap()[i];
        pt[axis] = coord;
        self.a(i, &pt)
    }

    /// `sigma_i(x) = a_ii(x)^alpha` (1-based index per the calling convention
    /// of the operator layer is NOT used here; `i` is 0-based).
    pub fn sigma(&self, i: usize, x: &[T]) -> Result<T> {
        if i >= self.params.d {
            return Err(Error::domain(format!(
                "coordinate index {} out of range 0..{}",
                i, self.params.d
            )));
        }
        Ok(self.a(i, x).powf(self.params.alpha))
    }

    pub fn sigma_on_axis(&self, i: usize, coord: T) -> T {
        self.a_on_axis(i, coord).powf(self.params.alpha)
    }

    /// Sampling-based certification of the ellipticity bounds and the Hölder
    /// condition over the box `[-5, 5]^d`.
    pub fn verify(&self, n_samples: usize, seed: u64) -> FieldReport {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let d = self.params.d;
        let b1 = self.params.b1.as_f64();
        let b2 = self.params.b2.as_f64();
        let b3 = self.params.b3.as_f64();
        let beta = self.params.beta.as_f64();
        let mut worst_violation = 0.0f64;
        let mut worst_quot = 0.0f64;
        let mut worst_sigma_quot = 0.0f64;
        let draw = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<T> {
            (0..d).map(|_| T::of(rng.gen_range(-5.0..5.0))).collect()
        };
        for _ in 0..n_samples.max(1) {
            let x = draw(&mut rng);
            let y = draw(&mut rng);
            let dist: f64 = x
                .iter()
                .zip(&y)
                .map(|(a, b)| ((*a - *b).as_f64()).powi(2))
                .sum::<f64>()
                .sqrt();
            for i in 0..d {
                let ax = self.a(i, &x).as_f64();
                worst_violation = worst_violation.max(b1 - ax).max(ax - b2);
                if dist > 1e-12 {
                    let ay = self.a(i, &y).as_f64();
                    worst_quot = worst_quot.max((ax - ay).abs() / dist.powf(beta));
                    let sx = ax.powf(self.params.alpha.as_f64());
                    let sy = ay.powf(self.params.alpha.as_f64());
                    worst_sigma_quot =
                        worst_sigma_quot.max((sx - sy).abs() / dist.powf(beta).min(1.0));
                }
            }
        }
        FieldReport {
            max_bound_violation: worst_violation.max(0.0),
            max_holder_quotient: worst_quot,
            sigma_holder_quotient: worst_sigma_quot,
            samples: n_samples,
            passed: worst_violation <= 0.0 && worst_quot <= b3 * (1.0 + 1e-9),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(alpha: f64, beta: f64, b1: f64, b2: f64, b3: f64) -> ModelParams<f64> {
        ModelParams::new(alpha, 2, beta, b1, b2, b3, 1.0).unwrap()
    }

    #[test]
    fn beta_clamped_to_quarter_alpha() {
        let p = ModelParams::<f64>::new(1.0, 2, 1.0, 1.0, 1.0, 1.0, 1.0).unwrap();
        assert!(p.beta_clamped);
        assert!((p.beta - 0.25).abs() < 1e-15);
    }

    #[test]
    fn constant_field_sigma() {
        let f =
            CoefficientField::new(params(1.0, 0.25, 0.5, 3.0, 1.0), FieldFamily::Constant { level: 2.0 })
                .unwrap();
        assert!((f.sigma(0, &[0.3, -4.0]).unwrap() - 2.0).abs() < 1e-15);
        assert!(f.sigma(2, &[0.0, 0.0]).is_err());
        assert!(f.is_coordinatewise());
    }

    #[test]
    fn smooth_periodic_matches_formula() {
        // a_ii(x) = 1 + 0.25 sin(x_i) via b1 = 0.75, b2 = 1.25, phase -pi/2:
        // b1 + 0.25 (1 + sin(x - pi/2)) = 1 + 0.25 (sin(x - pi/2) ... ) -- instead use
        // the direct parametrization and check the spec value at the crest.
        let p = params(1.5, 0.25, 0.75, 1.25, 0.3);
        let f = CoefficientField::new(
            p,
            FieldFamily::SmoothPeriodic {
                freq: 1.0,
                phases: vec![0.0, 0.0],
            },
        )
        .unwrap();
        let x = [std::f64::consts::FRAC_PI_2, 0.0];
        assert!((f.a(0, &x) - 1.25).abs() < 1e-14);
        let s = f.sigma(0, &x).unwrap();
        assert!((s - 1.25f64.powf(1.5)).abs() < 1e-13);
    }

    #[test]
    fn verify_passes_builtins() {
        let p = params(1.0, 0.25, 0.9, 1.1, 0.4);
        for fam in [
            FieldFamily::Constant { level: 1.0 },
            FieldFamily::SmoothPeriodic {
                freq: 1.0,
                phases: vec![0.0, 1.0],
            },
            FieldFamily::HolderKink {
                centers: vec![0.0, 0.5],
            },
        ] {
            let f = CoefficientField::new(p.clone(), fam).unwrap();
            let rep = f.verify(10_000, 1234);
            assert!(rep.passed, "{:?}: {rep:?}", f.family());
            assert_eq!(rep.max_bound_violation, 0.0);
        }
    }

    #[test]
    fn verify_flags_bound_violation() {
        // declared b2 below the actual field maximum
        let p = params(1.0, 0.25, 0.9, 1.05, 0.4);
        let f = CoefficientField::new(
            p,
            FieldFamily::SmoothPeriodic {
                freq: 1.0,
                phases: vec![0.0, 0.0],
            },
        )
        .unwrap();
        let rep = f.verify(20_000, 7);
        assert!(rep.max_bound_violation > 0.0);
        assert!(!rep.passed);
    }

    #[test]
    fn expression_field_separability() {
        let p = params(1.0, 0.25, 0.8, 1.2, 0.5);
        let f = CoefficientField::new(
            p.clone(),
            FieldFamily::Expressions {
                entries: vec!["1 + 0.1*sin(x1)".into(), "1 + 0.1*cos(x2)".into()],
            },
        )
        .unwrap();
        assert!(f.is_coordinatewise());
        let g = CoefficientField::new(
            p,
            FieldFamily::Expressions {
                entries: vec!["1 + 0.05*sin(x1 + x2)".into(), "1".into()],
            },
        )
        .unwrap();
        assert!(!g.is_coordinatewise());
        assert!(g.separable_axes().is_none());
    }

    #[test]
    fn constant_verify_report_zeroes() {
        let f = CoefficientField::new(
            params(1.0, 0.25, 0.5, 3.0, 1.0),
            FieldFamily::Constant { level: 1.5 },
        )
        .unwrap();
        let rep = f.verify(1000, 99);
        assert_eq!(rep.max_bound_violation, 0.0);
        assert_eq!(rep.max_holder_quotient, 0.0);
        assert!(rep.passed);
    }
}
