//! One-dimensional symmetric standard alpha-stable density `g_t`: evaluation,
//! spatial derivative, the fractional-Laplacian profile of `g_t`, CDF, and a
//! Chambers–Mallows–Stuck sampler.
//!
//! Convention: characteristic function `exp(-t |xi|^alpha)`. Everything scales
//! out of `t` through `g_t(x) = t^{-1/alpha} g_1(x t^{-1/alpha})`, so only unit-time
//! profiles are tabulated. Each profile is the cosine/sine transform
//! `(1/pi) int_0^inf xi^q trig(x xi) exp(-xi^alpha) dxi`:
//!
//! * `g_1`:   q = 0, cos
//! * `g_1'`:  q = 1, sin (negated)
//! * `g_1''`: q = 2, cos (negated; used only as interpolation slopes)
//! * `k_1`:   q = alpha, cos   — profile of `-(-Delta)^{alpha/2} g`, i.e.
//!   the fractional Laplacian applied to the unit kernel satisfies
//!   `L g_t(x) = k_t(x) = t^{-(1+alpha)/alpha} k_1(x t^{-1/alpha})`
//! * `k_1'`:  q = 1+alpha, sin (negated; slopes for `k_1`)
//!
//! Inside `|x| <= switch_radius` the profiles come from tabulated Fourier
//! inversion with cubic Hermite interpolation (slopes are themselves inverted
//! transforms, so interpolation is O(h^4)); outside, from the heavy-tail
//! series summed adaptively with asymptotic-optimal truncation.

use crate::error::{Error, Result};
use crate::quad::{self, CubicHermite, GlRule};
use crate::scalar::Real;
use crate::special;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Reference-grid layout and build tolerances for the inversion tables.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridSpec {
    /// Density/derivative switch to the tail series beyond this |x| (unit time).
    pub switch_radius: f64,
    /// Uniform node spacing on [0, core_extent].
    pub core_step: f64,
    /// Extent of the uniform core.
    pub core_extent: f64,
    /// Geometric spacing ratio past the core.
    pub geo_ratio: f64,
    /// Absolute tolerance of the tabulated values.
    pub abs_tol: f64,
    /// Cap on tail-series terms.
    pub max_tail_terms: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            switch_radius: 50.0,
            core_step: 2.0e-3,
            core_extent: 2.0,
            geo_ratio: 1.006,
            abs_tol: 1e-11,
            max_tail_terms: 48,
        }
    }
}

impl GridSpec {
    fn grid(&self) -> Vec<f64> {
        let mut xs = Vec::new();
        let n_core = (self.core_extent / self.core_step).round() as usize;
        for i in 0..=n_core {
            xs.push(i as f64 * self.core_extent / n_core as f64);
        }
        let mut x = self.core_extent;
        // margin past the switch radius so interpolation never extrapolates
        let hi = self.switch_radius * 1.04;
        while x < hi {
            x *= self.geo_ratio;
            xs.push(x.min(hi));
        }
        xs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Trig {
    Cos,
    Sin,
}

/// `(1/pi) int_0^inf xi^q trig(x xi) exp(-xi^alpha) dxi`, in f64.
///
/// Panels split at the trig zeros once oscillation matters, geometric panels
/// elsewhere; a tanh-sinh start panel absorbs the `xi^alpha` kink at zero.
fn fourier_profile(alpha: f64, q: f64, trig: Trig, x: f64, abs_tol: f64) -> f64 {
    debug_assert!(x >= 0.0);
    let weight = move |xi: f64| {
        let w = (-xi.powf(alpha)).exp();
        if q == 0.0 {
            w
        } else {
            xi.powf(q) * w
        }
    };
    let osc = move |xi: f64| match trig {
        Trig::Cos => (x * xi).cos(),
        Trig::Sin => (x * xi).sin(),
    };
    if trig == Trig::Sin && x == 0.0 {
        return 0.0;
    }
    // cutoff: envelope below abs_tol * 1e-3
    let log_thresh = -(abs_tol.ln().abs() + 7.0);
    let mut cutoff = (-log_thresh).powf(1.0 / alpha).max(2.0);
    for _ in 0..3 {
        cutoff = (-log_thresh + q.max(0.0) * cutoff.ln()).powf(1.0 / alpha);
    }

    let zero_spacing = if x > 1e-300 { std::f64::consts::PI / x } else { f64::INFINITY };
    let first_zero = match trig {
        Trig::Cos => 0.5 * zero_spacing,
        Trig::Sin => zero_spacing,
    };

    let f = |xi: f64| weight(xi) * osc(xi);
    let mut total = 0.0f64;

    // start panel over the kink at xi = 0
    let b0 = first_zero.min(0.5).min(cutoff);
    total += quad::tanh_sinh(&f, 0.0, b0, 7);

    let rule = GlRule::<f64>::new(10);
    let mut cursor = b0;
    while cursor < cutoff {
        let next_zero = if zero_spacing.is_finite() {
            let k = ((cursor - first_zero) / zero_spacing).floor() + 1.0;
            (first_zero + k.max(0.0) * zero_spacing).max(cursor + 1e-3 * zero_spacing)
        } else {
            f64::INFINITY
        };
        let next = next_zero.min(cursor * 2.0).min(cutoff);
        total += rule.integrate(f, cursor, next);
        cursor = next;
    }
    total / std::f64::consts::PI
}

/// Heavy-tail series machinery shared by all profiles.
///
/// Base coefficients `c_n` satisfy `g_1(x) ~ sum c_n x^(-n alpha - 1)`;
/// derivatives and the fractional profile reuse them with polynomial factors.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct TailSeries {
    alpha: f64,
    coeffs: Vec<f64>,
}

impl TailSeries {
    fn new(alpha: f64, n_terms: usize) -> Self {
        let coeffs = (1..=n_terms as u32)
            .map(|n| special::tail_series_coeff(alpha, n))
            .collect();
        TailSeries { alpha, coeffs }
    }

    /// Sum `sum_n c_n m(n) x^(-n alpha - 1 - shift)` with adaptive truncation:
    /// stop at negligible terms, or at the smallest term when the series turns
    /// asymptotic (alpha > 1).
    fn sum<M: Fn(f64) -> f64>(&self, x: f64, shift: f64, modifier: M) -> f64 {
        let mut acc = 0.0f64;
        let mut prev_mag = f64::INFINITY;
        for (i, &c) in self.coeffs.iter().enumerate() {
            let n = (i + 1) as f64;
            let term = c * modifier(n) * x.powf(-(n * self.alpha + 1.0 + shift));
            let mag = term.abs();
            if mag > prev_mag && self.alpha > 1.0 {
                break; // asymptotic regime: truncate before the terms grow
            }
            acc += term;
            if mag <= 1e-18 * acc.abs().max(1e-300) {
                break;
            }
            prev_mag = mag;
        }
        acc
    }

    fn density(&self, x: f64) -> f64 {
        self.sum(x, 0.0, |_| 1.0)
    }

    fn density_deriv(&self, x: f64) -> f64 {
        self.sum(x, 1.0, |n| -(n * self.alpha + 1.0))
    }

    fn frac_profile(&self, x: f64) -> f64 {
        self.sum(x, 0.0, |n| -n)
    }

    fn frac_profile_deriv(&self, x: f64) -> f64 {
        self.sum(x, 1.0, |n| n * (n * self.alpha + 1.0))
    }

    /// `int_x^inf g_1 = sum c_n x^(-n alpha) / (n alpha)`.
    fn upper_mass(&self, x: f64) -> f64 {
        let alpha = self.alpha;
        let mut acc = 0.0f64;
        let mut prev_mag = f64::INFINITY;
        for (i, &c) in self.coeffs.iter().enumerate() {
            let n = (i + 1) as f64;
            let term = c * x.powf(-n * alpha) / (n * alpha);
            let mag = term.abs();
            if mag > prev_mag && alpha > 1.0 {
                break;
            }
            acc += term;
            if mag <= 1e-18 * acc.abs().max(1e-300) {
                break;
            }
            prev_mag = mag;
        }
        acc
    }
}

/// Seam agreement between table and tail series, recorded at build time.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeamReport {
    pub density_gap: f64,
    pub deriv_gap: f64,
    pub frac_gap: f64,
}

/// Evaluator for the one-dimensional symmetric standard alpha-stable law.
///
/// Immutable after construction; cheap to share across threads.
#[derive(Debug, Clone)]
pub struct StableEvaluator<T> {
    alpha: T,
    switch_radius: T,
    g: CubicHermite<T>,
    gp: CubicHermite<T>,
    k: CubicHermite<T>,
    cdf: CubicHermite<T>,
    tail: TailSeries,
    seam: SeamReport,
    spec: GridSpec,
}

/// Raw build payload: kept in f64 so the disk cache is scalar-independent.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct TablePayload {
    version: u32,
    alpha: f64,
    spec: GridSpec,
    xs: Vec<f64>,
    g: Vec<f64>,
    gp: Vec<f64>,
    gpp: Vec<f64>,
    k: Vec<f64>,
    kp: Vec<f64>,
}

const TABLE_VERSION: u32 = 1;

impl TablePayload {
    fn build(alpha: f64, spec: &GridSpec) -> Self {
        let xs = spec.grid();
        let tol = spec.abs_tol;
        let make = |q: f64, trig: Trig, scale: f64| -> Vec<f64> {
            xs.par_iter()
                .map(|&x| scale * fourier_profile(alpha, q, trig, x, tol))
                .collect()
        };
        let g = make(0.0, Trig::Cos, 1.0);
        let gp = make(1.0, Trig::Sin, -1.0);
        let gpp = make(2.0, Trig::Cos, -1.0);
        let k = make(alpha, Trig::Cos, 1.0);
        let kp = make(1.0 + alpha, Trig::Sin, -1.0);
        TablePayload {
            version: TABLE_VERSION,
            alpha,
            spec: spec.clone(),
            xs,
            g,
            gp,
            gpp,
            k,
            kp,
        }
    }
}

fn to_t<T: Real>(v: &[f64]) -> Vec<T> {
    v.iter().map(|&x| T::of(x)).collect()
}

impl<T: Real> StableEvaluator<T> {
    pub fn new(alpha: T) -> Result<Self> {
        Self::with_spec(alpha, GridSpec::default())
    }

    pub fn with_spec(alpha: T, spec: GridSpec) -> Result<Self> {
        let a = alpha.as_f64();
        if !(a > 0.0 && a < 2.0) {
            return Err(Error::domain(format!("alpha must lie in (0,2), got {a}")));
        }
        let payload = TablePayload::build(a, &spec);
        Self::from_payload(alpha, payload)
    }

    fn from_payload(alpha: T, payload: TablePayload) -> Result<Self> {
        let spec = payload.spec.clone();
        let tail = TailSeries::new(payload.alpha, spec.max_tail_terms);
        let xs: Vec<T> = to_t(&payload.xs);
        let g = CubicHermite::new(xs.clone(), to_t(&payload.g), to_t(&payload.gp));
        let gp = CubicHermite::new(xs.clone(), to_t(&payload.gp), to_t(&payload.gpp));
        let k = CubicHermite::new(xs.clone(), to_t(&payload.k), to_t(&payload.kp));

        // cumulative table for the CDF on [0, switch]: integrate the Hermite
        // cubics segment by segment (exact for the interpolant)
        let n = payload.xs.len();
        let mut cum = vec![0.0f64; n];
        for i in 0..n - 1 {
            let h = payload.xs[i + 1] - payload.xs[i];
            let seg = h * (payload.g[i] + payload.g[i + 1]) / 2.0
                + h * h * (payload.gp[i] - payload.gp[i + 1]) / 12.0;
            cum[i + 1] = cum[i] + seg;
        }
        let cdf = CubicHermite::new(xs, to_t(&cum), to_t(&payload.g));

        let sr = spec.switch_radius;
        let at = |table: &CubicHermite<T>, x: f64| table.eval(T::of(x)).as_f64();
        let seam = SeamReport {
            density_gap: (at(&g, sr) - tail.density(sr)).abs(),
            deriv_gap: (at(&gp, sr) - tail.density_deriv(sr)).abs(),
            frac_gap: (at(&k, sr) - tail.frac_profile(sr)).abs(),
        };
        Ok(StableEvaluator {
            alpha,
            switch_radius: T::of(sr),
            g,
            gp,
            k,
            cdf,
            tail,
            seam,
            spec,
        })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn seam(&self) -> &SeamReport {
        &self.seam
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    fn check_t(&self, t: T) -> Result<()> {
        if t <= T::zero() || !t.is_finite() {
            return Err(Error::domain(format!("time must be positive, got {t}")));
        }
        Ok(())
    }

    #[inline]
    fn inv_scale(&self, t: T) -> T {
        t.powf(-self.alpha.recip())
    }

    /// Unit-time density `g_1(|u|)`.
    pub fn density_unit(&self, u: T) -> T {
        let u = u.abs();
        if u <= self.switch_radius {
            self.g.eval(u)
        } else {
            T::of(self.tail.density(u.as_f64()))
        }
    }

    /// Unit-time derivative `g_1'(u)` (odd).
    pub fn density_deriv_unit(&self, u: T) -> T {
        let s = if u < T::zero() { -T::one() } else { T::one() };
        let u = u.abs();
        let v = if u <= self.switch_radius {
            self.gp.eval(u)
        } else {
            T::of(self.tail.density_deriv(u.as_f64()))
        };
        s * v
    }

    /// Unit-time fractional-Laplacian profile `k_1(|u|)`.
    pub fn frac_profile_unit(&self, u: T) -> T {
        let u = u.abs();
        if u <= self.switch_radius {
            self.k.eval(u)
        } else {
            T::of(self.tail.frac_profile(u.as_f64()))
        }
    }

    /// `g_t(x)`.
    pub fn density(&self, t: T, x: T) -> Result<T> {
        self.check_t(t)?;
        let s = self.inv_scale(t);
        Ok(s * self.density_unit(x * s))
    }

    /// `d/dx g_t(x)`.
    pub fn density_deriv(&self, t: T, x: T) -> Result<T> {
        self.check_t(t)?;
        let s = self.inv_scale(t);
        Ok(s * s * self.density_deriv_unit(x * s))
    }

    /// Fractional Laplacian of the kernel: `(L g_t)(x) = k_t(x)`, which also
    /// equals `d/dt g_t(x)`.
    pub fn frac_profile(&self, t: T, x: T) -> Result<T> {
        self.check_t(t)?;
        let s = self.inv_scale(t);
        Ok(s.powf(T::one() + self.alpha) * self.frac_profile_unit(x * s))
    }

    /// Unit-time CDF `P(Z_1 <= u)`.
    pub fn cdf_unit(&self, u: T) -> T {
        let half = T::of(0.5);
        let a = u.abs();
        let tail_half = if a <= self.switch_radius {
            half - self.cdf.eval(a).max(T::zero())
        } else {
            T::of(self.tail.upper_mass(a.as_f64()))
        };
        if u >= T::zero() {
            T::one() - tail_half.max(T::zero())
        } else {
            tail_half.max(T::zero())
        }
    }

    /// `P(Z_t <= x)` under the fixed convention.
    pub fn cdf(&self, t: T, x: T) -> Result<T> {
        self.check_t(t)?;
        Ok(self.cdf_unit(x * self.inv_scale(t)))
    }

    /// Total mass diagnostic: table integral plus analytic tails.
    pub fn total_mass(&self) -> T {
        let cum_end = self.cdf.y.last().copied().unwrap_or(T::zero());
        let end = self.cdf.x.last().copied().unwrap_or(T::one());
        (cum_end + T::of(self.tail.upper_mass(end.as_f64()))) * T::of(2.0)
    }

    /// Serialize the build payload to a sidecar cache file.
    pub fn save_cache(&self, path: &std::path::Path) -> Result<()> {
        // rebuilds the payload view from the stored tables (lossless: tables are f64-born)
        let payload = TablePayload {
            version: TABLE_VERSION,
            alpha: self.alpha.as_f64(),
            spec: self.spec.clone(),
            xs: self.g.x.iter().map(|v| v.as_f64()).collect(),
            g: self.g.y.iter().map(|v| v.as_f64()).collect(),
            gp: self.gp.y.iter().map(|v| v.as_f64()).collect(),
            gpp: self.gp.dy.iter().map(|v| v.as_f64()).collect(),
            k: self.k.y.iter().map(|v| v.as_f64()).collect(),
            kp: self.k.dy.iter().map(|v| v.as_f64()).collect(),
        };
        let bytes = serde_json::to_vec(&payload).map_err(|e| Error::Serialization(e.to_string()))?;
        std::fs::write(path, bytes)?;
        Ok(())
    }

    /// Load from a sidecar cache; errors if the key (alpha, spec, version) mismatches.
    pub fn load_cache(alpha: T, spec: &GridSpec, path: &std::path::Path) -> Result<Self> {
        let bytes = std::fs::read(path)?;
        let payload: TablePayload =
            serde_json::from_slice(&bytes).map_err(|e| Error::Serialization(e.to_string()))?;
        if payload.version != TABLE_VERSION {
            return Err(Error::Serialization("cache version mismatch".into()));
        }
        if (payload.alpha - alpha.as_f64()).abs() > 1e-15 {
            return Err(Error::Serialization("cache alpha mismatch".into()));
        }
        if serde_json::to_string(&payload.spec).ok() != serde_json::to_string(spec).ok() {
            return Err(Error::Serialization("cache grid spec mismatch".into()));
        }
        Self::from_payload(alpha, payload)
    }
}

/// One draw of `Z_{scale_time}` with characteristic function
/// `exp(-scale_time |xi|^alpha)`, by the symmetric-case Chambers–Mallows–Stuck
/// transform (`alpha = 1` takes the dedicated Cauchy branch).
pub fn sample_increment<T: Real, R: Rng + ?Sized>(alpha: T, scale_time: T, rng: &mut R) -> Result<T> {
    let a = alpha.as_f64();
    if !(a > 0.0 && a < 2.0) {
        return Err(Error::domain(format!("alpha must lie in (0,2), got {a}")));
    }
    let t = scale_time.as_f64();
    if !(t > 0.0) {
        return Err(Error::domain(format!("scale_time must be positive, got {t}")));
    }
    let u: f64 = rng.gen();
    let v = std::f64::consts::PI * (u - 0.5);
    let z = if (a - 1.0).abs() < 1e-12 {
        v.tan()
    } else {
        let w = -(1.0 - rng.gen::<f64>()).ln(); // Exp(1), strictly positive
        let cv = v.cos();
        (a * v).sin() / cv.powf(1.0 / a) * (((1.0 - a) * v).cos() / w).powf((1.0 - a) / a)
    };
    Ok(T::of(t.powf(1.0 / a) * z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn cauchy() -> &'static StableEvaluator<f64> {
        static EV: OnceLock<StableEvaluator<f64>> = OnceLock::new();
        EV.get_or_init(|| StableEvaluator::new(1.0).unwrap())
    }

    fn cauchy_density(t: f64, x: f64) -> f64 {
        t / (std::f64::consts::PI * (t * t + x * x))
    }

    #[test]
    fn cauchy_closed_form() {
        let ev = cauchy();
        for &t in &[0.25f64, 1.0, 4.0] {
            for i in 0..=200 {
                let x = -50.0 * t + i as f64 * 0.5 * t;
                let d = ev.density(t, x).unwrap();
                assert!(
                    (d - cauchy_density(t, x)).abs() < 1e-8,
                    "t={t} x={x}: {d} vs {}",
                    cauchy_density(t, x)
                );
            }
        }
        // spec spot values
        assert!((ev.density(1.0, 0.0).unwrap() - 1.0 / std::f64::consts::PI).abs() < 1e-10);
        assert!((ev.density(1.0, 1.0).unwrap() - 0.5 / std::f64::consts::PI).abs() < 1e-10);
    }

    #[test]
    fn cauchy_derivative_closed_form() {
        let ev = cauchy();
        assert!(ev.density_deriv(1.0, 0.0).unwrap().abs() < 1e-12);
        let d = ev.density_deriv(1.0, 1.0).unwrap();
        let exact = -0.5 / std::f64::consts::PI;
        assert!((d - exact).abs() < 1e-9, "{d} vs {exact}");
        for i in 1..40 {
            let x = 0.2 * i as f64;
            let exact = -2.0 * x / (std::f64::consts::PI * (1.0 + x * x).powi(2));
            assert!((ev.density_deriv(1.0, x).unwrap() - exact).abs() < 1e-8);
        }
    }

    #[test]
    fn cauchy_frac_profile_closed_form() {
        // k_t(x) = (t^2 - x^2)/(pi (t^2+x^2)^2) = d/dt g_t(x)
        let ev = cauchy();
        for &(t, x) in &[(1.0f64, 0.0f64), (1.0, 0.7), (0.5, 2.0), (2.0, 5.0), (1.0, 60.0)] {
            let exact = (t * t - x * x) / (std::f64::consts::PI * (t * t + x * x).powi(2));
            let got = ev.frac_profile(t, x).unwrap();
            assert!(
                (got - exact).abs() < 1e-8,
                "t={t} x={x}: {got} vs {exact}"
            );
        }
    }

    #[test]
    fn peak_value_gamma_formula() {
        // g_1(0) = Gamma(1 + 1/alpha)/pi
        for &alpha in &[0.6f64, 1.0, 1.5] {
            let ev = StableEvaluator::<f64>::new(alpha).unwrap();
            let exact = special::gamma_fn(1.0 + 1.0 / alpha) / std::f64::consts::PI;
            let got = ev.density(1.0, 0.0).unwrap();
            assert!((got - exact).abs() < 1e-10, "alpha={alpha}: {got} vs {exact}");
        }
    }

    #[test]
    fn seam_agreement() {
        for &alpha in &[0.6f64, 1.0, 1.5] {
            let ev = StableEvaluator::<f64>::new(alpha).unwrap();
            let s = ev.seam();
            assert!(s.density_gap < 1e-6, "alpha={alpha}: {:?}", s);
            assert!(s.deriv_gap < 1e-6, "alpha={alpha}: {:?}", s);
            assert!(s.frac_gap < 1e-6, "alpha={alpha}: {:?}", s);
        }
    }

    #[test]
    fn domain_errors() {
        let ev = cauchy();
        assert!(ev.density(0.0, 1.0).is_err());
        assert!(ev.density(-1.0, 1.0).is_err());
        assert!(StableEvaluator::<f64>::new(2.0).is_err());
        assert!(StableEvaluator::<f64>::new(0.0).is_err());
    }

    #[test]
    fn symmetry_and_monotonicity() {
        let ev = StableEvaluator::<f64>::new(1.5).unwrap();
        let mut prev = f64::INFINITY;
        for i in 0..400 {
            let x = 0.05 * i as f64;
            let d = ev.density(1.0, x).unwrap();
            assert!(d > 0.0);
            assert!(d <= prev + 1e-14, "not monotone at {x}");
            assert_eq!(d, ev.density(1.0, -x).unwrap());
            prev = d;
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let ev = StableEvaluator::<f64>::new(1.5).unwrap();
        let t = 2.0;
        for i in 0..30 {
            let x = 0.1 + 0.3 * i as f64;
            let h = 1e-4;
            let fd = (ev.density(t, x + h).unwrap() - ev.density(t, x - h).unwrap()) / (2.0 * h);
            let an = ev.density_deriv(t, x).unwrap();
            assert!((fd - an).abs() < 1e-6, "x={x}: fd={fd} an={an}");
        }
    }

    #[test]
    fn cdf_cauchy() {
        let ev = cauchy();
        for i in 0..40 {
            let x = -6.0 + 0.3 * i as f64;
            let exact = 0.5 + x.atan() / std::f64::consts::PI;
            assert!((ev.cdf(1.0, x).unwrap() - exact).abs() < 1e-7);
        }
    }

    #[test]
    fn sampler_determinism_and_symmetry() {
        use rand::SeedableRng;
        let mut r1 = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut r2 = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let a: f64 = sample_increment(1.3, 0.5, &mut r1).unwrap();
        let b: f64 = sample_increment(1.3, 0.5, &mut r2).unwrap();
        assert_eq!(a, b);

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let n = 100_000;
        let mut pos = 0usize;
        for _ in 0..n {
            let z: f64 = sample_increment(0.8, 1.0, &mut rng).unwrap();
            if z > 0.0 {
                pos += 1;
            }
        }
        let p = pos as f64 / n as f64;
        assert!((p - 0.5).abs() < 3.0 * 0.5 / (n as f64).sqrt(), "p={p}");
    }
}
