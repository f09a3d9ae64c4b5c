//! Binet formulas in complex floating point and exact generating-function
//! expansion.
//!
//! The roots `α, ω1, ω2` of `x³ - r x² - s x - t` are found in closed form
//! and polished with Newton steps. Whether the roots are distinct is decided
//! from the exact discriminant; repeated roots get exact values and are
//! flagged so the Binet evaluators can refuse them.

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{gauss, int, to_f64, Scalar};
use crate::sequences::SeqParams;
use crate::spinors::Spinor;

/// Minimum pairwise root distance, relative to `1 + max|root|`.
pub const ROOT_SEPARATION: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicRoots {
    pub alpha: Complex64,
    pub omega1: Complex64,
    pub omega2: Complex64,
    pub discriminant_ok: bool,
}

impl CubicRoots {
    pub fn as_array(&self) -> [Complex64; 3] {
        [self.alpha, self.omega1, self.omega2]
    }

    /// Same roots with `ω1` and `ω2` exchanged.
    pub fn swapped(&self) -> Self {
        Self { omega1: self.omega2, omega2: self.omega1, ..*self }
    }

    /// Largest of the three Vieta residuals against `(r, -s, t)`.
    pub fn vieta_residual(&self, r: f64, s: f64, t: f64) -> f64 {
        let [a, w1, w2] = self.as_array();
        let sum = (a + w1 + w2 - r).norm();
        let pairs = (a * w1 + a * w2 + w1 * w2 + s).norm();
        let prod = (a * w1 * w2 - t).norm();
        sum.max(pairs).max(prod)
    }

    pub fn min_separation(&self) -> f64 {
        let [a, w1, w2] = self.as_array();
        (a - w1).norm().min((a - w2).norm()).min((w1 - w2).norm())
    }
}

/// Discriminant of `x³ + b x² + c x + d`.
fn discriminant(b: &Scalar, c: &Scalar, d: &Scalar) -> Scalar {
    int(18) * b * c * d - int(4) * b * b * b * d + b * b * c * c - int(4) * c * c * c - int(27) * d * d
}

fn eval_cubic(b: f64, c: f64, d: f64, x: Complex64) -> (Complex64, Complex64) {
    let f = ((x + b) * x + c) * x + d;
    let df = (x * 3.0 + 2.0 * b) * x + c;
    (f, df)
}

fn polish(b: f64, c: f64, d: f64, mut x: Complex64) -> Complex64 {
    for _ in 0..8 {
        let (f, df) = eval_cubic(b, c, d, x);
        if f.norm() == 0.0 || df.norm() == 0.0 {
            break;
        }
        let next = x - f / df;
        if eval_cubic(b, c, d, next).0.norm() >= f.norm() {
            break;
        }
        x = next;
    }
    x
}

fn polish_real(b: f64, c: f64, d: f64, x: f64) -> f64 {
    polish(b, c, d, Complex64::new(x, 0.0)).re
}

fn order_roots(mut roots: [Complex64; 3]) -> [Complex64; 3] {
    roots.sort_by(|x, y| {
        y.re.partial_cmp(&x.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(y.im.partial_cmp(&x.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    roots
}

/// Roots of `x³ - r x² - s x - t`, ordered so that `alpha` has the greatest
/// real part (ties: greatest imaginary part).
pub fn cubic_roots(r: &Scalar, s: &Scalar, t: &Scalar) -> CubicRoots {
    // monic form x³ + b x² + c x + d
    let (b, c, d) = (-r, -s, -t);
    let disc = discriminant(&b, &c, &d);
    let (bf, cf, df) = (to_f64(&b), to_f64(&c), to_f64(&d));

    let roots = if disc.is_zero() {
        repeated_roots(&b, &c, &d)
    } else {
        let shift = bf / 3.0;
        let p = cf - bf * bf / 3.0;
        let q = 2.0 * bf * bf * bf / 27.0 - bf * cf / 3.0 + df;
        if disc.is_positive() {
            // three distinct real roots
            let m = 2.0 * (-p / 3.0).sqrt();
            let arg = ((3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
            let theta = arg.acos() / 3.0;
            let two_pi_3 = 2.0 * std::f64::consts::PI / 3.0;
            [0.0, 1.0, 2.0].map(|k| {
                let y = m * (theta - two_pi_3 * k).cos();
                Complex64::new(polish_real(bf, cf, df, y - shift), 0.0)
            })
        } else {
            // one real root and a conjugate pair
            let h = (q * q / 4.0 + p * p * p / 27.0).max(0.0).sqrt();
            let y = (-q / 2.0 + h).cbrt() + (-q / 2.0 - h).cbrt();
            let x0 = polish_real(bf, cf, df, y - shift);
            // deflate to x² + (b + x0) x + (c + x0 (b + x0))
            let lin = bf + x0;
            let con = cf + x0 * lin;
            let re = -lin / 2.0;
            let im = (con - re * re).max(0.0).sqrt();
            let z = polish(bf, cf, df, Complex64::new(re, im));
            let z = Complex64::new(z.re, z.im.abs());
            [Complex64::new(x0, 0.0), z, z.conj()]
        }
    };

    let [alpha, omega1, omega2] = order_roots(roots);
    let mut out = CubicRoots { alpha, omega1, omega2, discriminant_ok: !disc.is_zero() };
    let scale = 1.0 + out.as_array().iter().map(|z| z.norm()).fold(0.0, f64::max);
    if out.min_separation() < ROOT_SEPARATION * scale {
        out.discriminant_ok = false;
    }
    out
}

/// Exact roots when the discriminant vanishes.
fn repeated_roots(b: &Scalar, c: &Scalar, d: &Scalar) -> [Complex64; 3] {
    let k = b * b - int(3) * c;
    let (double, simple) = if k.is_zero() {
        let triple = -b / int(3);
        (triple.clone(), triple)
    } else {
        let double = (int(9) * d - b * c) / (int(2) * &k);
        let simple = (int(4) * b * c - int(9) * d - b * b * b) / k;
        (double, simple)
    };
    let re = |v: &Scalar| Complex64::new(to_f64(v), 0.0);
    [re(&double), re(&double), re(&simple)]
}

/// `P`, `Q`, `R` of the Binet formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetConstants {
    pub p: Complex64,
    pub q: Complex64,
    pub r: Complex64,
}

pub fn binet_constants(p: &SeqParams, roots: &CubicRoots) -> Result<BinetConstants> {
    if !roots.discriminant_ok {
        return Err(Error::DegenerateRoots);
    }
    let [v0, v1, v2] = p.seeds().map(to_f64);
    let CubicRoots { alpha: a, omega1: w1, omega2: w2, .. } = *roots;
    let lagrange = |x: Complex64, y: Complex64| -(x + y) * v1 + x * y * v0 + v2;
    Ok(BinetConstants {
        p: lagrange(w1, w2),
        q: lagrange(a, w2),
        r: lagrange(a, w1),
    })
}

/// Coefficients `c_α, c_ω1, c_ω2` with `V_n = Σ c_x x^n`.
fn binet_weights(p: &SeqParams, roots: &CubicRoots) -> Result<[Complex64; 3]> {
    let k = binet_constants(p, roots)?;
    let CubicRoots { alpha: a, omega1: w1, omega2: w2, .. } = *roots;
    Ok([
        k.p / ((a - w1) * (a - w2)),
        -k.q / ((a - w1) * (w1 - w2)),
        k.r / ((a - w2) * (w1 - w2)),
    ])
}

fn pow(x: Complex64, n: usize) -> Complex64 {
    match u32::try_from(n) {
        Ok(e) => x.powu(e),
        Err(_) => x.powf(n as f64),
    }
}

fn roots_for(p: &SeqParams) -> CubicRoots {
    cubic_roots(&p.r, &p.s, &p.t)
}

/// `V_n` from the Binet formula.
pub fn binet_number(p: &SeqParams, n: usize) -> Result<Complex64> {
    binet_number_with(p, &roots_for(p), n)
}

pub fn binet_number_with(p: &SeqParams, roots: &CubicRoots, n: usize) -> Result<Complex64> {
    let w = binet_weights(p, roots)?;
    Ok(w.iter()
        .zip(roots.as_array())
        .map(|(c, x)| c * pow(x, n))
        .sum())
}

/// `Q_{v,n}` components from the Binet formula with weights `(1, x, x², x³)`.
pub fn binet_quaternion(p: &SeqParams, n: usize) -> Result<[Complex64; 4]> {
    binet_quaternion_with(p, &roots_for(p), n)
}

pub fn binet_quaternion_with(p: &SeqParams, roots: &CubicRoots, n: usize) -> Result<[Complex64; 4]> {
    let w = binet_weights(p, roots)?;
    let mut out = [Complex64::zero(); 4];
    for (c, x) in w.iter().zip(roots.as_array()) {
        let term = c * pow(x, n);
        let mut xp = Complex64::one();
        for slot in out.iter_mut() {
            *slot += term * xp;
            xp *= x;
        }
    }
    Ok(out)
}

/// Spinor with complex floating-point components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexSpinor {
    pub c1: Complex64,
    pub c2: Complex64,
}

impl ComplexSpinor {
    pub fn from_exact(s: &Spinor) -> Self {
        Self {
            c1: crate::spinors::gauss_to_f64(&s.c1),
            c2: crate::spinors::gauss_to_f64(&s.c2),
        }
    }

    /// `σ` applied to complex quaternion components.
    pub fn sigma(q: &[Complex64; 4]) -> Self {
        let i = Complex64::i();
        Self { c1: q[3] + i * q[0], c2: q[1] + i * q[2] }
    }

    pub fn components(&self) -> [Complex64; 2] {
        [self.c1, self.c2]
    }

    /// Largest componentwise `|self - exact| / max(1, |exact|)` over real and
    /// imaginary parts.
    pub fn relative_error(&self, exact: &ComplexSpinor) -> f64 {
        self.components()
            .iter()
            .zip(exact.components())
            .flat_map(|(a, e)| [(a.re, e.re), (a.im, e.im)])
            .map(|(a, e)| (a - e).abs() / e.abs().max(1.0))
            .fold(0.0, f64::max)
    }
}

/// Column `[x³ + i; x + i x²]` attached to each root.
fn spinor_column(x: Complex64) -> ComplexSpinor {
    let i = Complex64::i();
    ComplexSpinor { c1: x * x * x + i, c2: x + i * x * x }
}

/// `A_{v,n}` from the spinor Binet formula.
pub fn binet_spinor(p: &SeqParams, n: usize) -> Result<ComplexSpinor> {
    binet_spinor_with(p, &roots_for(p), n)
}

pub fn binet_spinor_with(p: &SeqParams, roots: &CubicRoots, n: usize) -> Result<ComplexSpinor> {
    let w = binet_weights(p, roots)?;
    Ok(combine_columns(roots, |k, x| w[k] * pow(x, n)))
}

fn combine_columns(roots: &CubicRoots, coeff: impl Fn(usize, Complex64) -> Complex64) -> ComplexSpinor {
    let mut out = ComplexSpinor { c1: Complex64::zero(), c2: Complex64::zero() };
    for (k, x) in roots.as_array().into_iter().enumerate() {
        let c = coeff(k, x);
        let col = spinor_column(x);
        out.c1 += c * col.c1;
        out.c2 += c * col.c2;
    }
    out
}

/// The classic Tribonacci specialization, where `P, Q, R` collapse to the
/// roots themselves and the powers become `x^{n+1}`.
pub fn tribonacci_binet_spinor(n: usize) -> Result<ComplexSpinor> {
    let one = Scalar::one();
    let roots = cubic_roots(&one, &one, &one);
    if !roots.discriminant_ok {
        return Err(Error::DegenerateRoots);
    }
    let CubicRoots { alpha: a, omega1: w1, omega2: w2, .. } = roots;
    let denom = [(a - w1) * (a - w2), -(a - w1) * (w1 - w2), (a - w2) * (w1 - w2)];
    Ok(combine_columns(&roots, |k, x| pow(x, n + 1) / denom[k]))
}

/// Truncated power series `Σ_{k<N} A_{v,k} x^k` of the spinor generating
/// function, with its rational form `numerator / ρ(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinorSeries {
    pub order: usize,
    /// Coefficients of `x⁰, x¹, x²` of the numerator.
    pub numerator: [Spinor; 3],
    /// `ρ(x) = 1 - r x - s x² - t x³`, lowest degree first.
    pub denominator: [Scalar; 4],
    pub coefficients: Vec<Spinor>,
}

/// Numerator `[ρ1 V3 + ρ2 V4 + x² V5 + i(ρ1 V0 + ρ2 V1 + x² V2); ρ1 V1 + ρ2 V2 + x² V3 + i(ρ1 V2 + ρ2 V3 + x² V4)]`
/// with `ρ1 = 1 - r x - s x²` and `ρ2 = x - r x²`.
pub fn genfunc_numerator(p: &SeqParams) -> [Spinor; 3] {
    let v = crate::sequences::seq_slice(p, 0, 6);
    let zero = Scalar::zero();
    let one = Scalar::one();
    let rho1 = [one.clone(), -&p.r, -&p.s];
    let rho2 = [zero.clone(), one.clone(), -&p.r];
    let x2 = [zero.clone(), zero, one];
    // ρ1 a + ρ2 b + x² c, coefficient of x^k
    let poly = |a: &Scalar, b: &Scalar, c: &Scalar, k: usize| &rho1[k] * a + &rho2[k] * b + &x2[k] * c;
    std::array::from_fn(|k| {
        Spinor::new(
            gauss(poly(&v[3], &v[4], &v[5], k), poly(&v[0], &v[1], &v[2], k)),
            gauss(poly(&v[1], &v[2], &v[3], k), poly(&v[2], &v[3], &v[4], k)),
        )
    })
}

pub fn genfunc_denominator(p: &SeqParams) -> [Scalar; 4] {
    [Scalar::one(), -&p.r, -&p.s, -&p.t]
}

/// Divides a spinor-valued polynomial by a scalar polynomial with nonzero
/// constant term, returning the first `order` series coefficients.
pub fn series_divide(numerator: &[Spinor], denominator: &[Scalar], order: usize) -> Result<Vec<Spinor>> {
    let lead = denominator
        .first()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| Error::InvalidInput("denominator has zero constant term".into()))?;
    let inv = Scalar::one() / lead;
    let mut out: Vec<Spinor> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = numerator.get(k).cloned().unwrap_or_else(Spinor::zero);
        for (j, d) in denominator.iter().enumerate().skip(1).take(k) {
            acc = &acc - &out[k - j].scale_real(d);
        }
        out.push(acc.scale_real(&inv));
    }
    Ok(out)
}

pub fn genfunc_spinor_series(p: &SeqParams, order: usize) -> SpinorSeries {
    let numerator = genfunc_numerator(p);
    let denominator = genfunc_denominator(p);
    let coefficients = series_divide(&numerator, &denominator, order).expect("ρ(0) = 1");
    SpinorSeries { order, numerator, denominator, coefficients }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::spinors::trib_spinor;

    fn roots_of(r: i64, s: i64, t: i64) -> CubicRoots {
        cubic_roots(&int(r), &int(s), &int(t))
    }

    #[test]
    fn tribonacci_roots() {
        let roots = roots_of(1, 1, 1);
        assert!(roots.discriminant_ok);
        // real root of x³ - x² - x - 1 by bisection
        let f = |x: f64| x * x * x - x * x - x - 1.0;
        let (mut lo, mut hi) = (1.0, 2.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 { hi = mid } else { lo = mid }
        }
        assert!((roots.alpha.re - lo).abs() < 1e-14);
        assert!((roots.alpha.re - 1.839286755214161).abs() < 1e-14);
        assert_eq!(roots.alpha.im, 0.0);
        assert!(roots.omega1.norm() < 1.0 && roots.omega2.norm() < 1.0);
        assert!(roots.omega1.im > 0.0);
        assert_eq!(roots.omega1, roots.omega2.conj());
        assert!(roots.vieta_residual(1.0, 1.0, 1.0) < 1e-12);
    }

    #[test]
    fn cube_roots_of_unity() {
        let roots = roots_of(0, 0, 1);
        assert!(roots.discriminant_ok);
        assert!((roots.alpha - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!((roots.omega1 - w).norm() < 1e-14);
        assert!((roots.omega2 - w.conj()).norm() < 1e-14);
    }

    #[test]
    fn triple_root_is_degenerate() {
        let roots = roots_of(3, -3, 1);
        assert!(!roots.discriminant_ok);
        for z in roots.as_array() {
            assert_eq!(z, Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn double_root_is_degenerate() {
        // (x-1)²(x-2) = x³ - 4x² + 5x - 2
        let roots = roots_of(4, -5, 2);
        assert!(!roots.discriminant_ok);
        assert_eq!(roots.alpha, Complex64::new(2.0, 0.0));
        assert_eq!(roots.omega1, Complex64::new(1.0, 0.0));
        assert!(roots.vieta_residual(4.0, -5.0, 2.0) < 1e-15);
    }

    #[test]
    fn three_real_roots() {
        // (x-1)(x+2)(x-3) = x³ - 2x² - 5x + 6
        let roots = roots_of(2, 5, -6);
        assert!(roots.discriminant_ok);
        let got = roots.as_array().map(|z| z.re);
        for (g, e) in got.iter().zip([3.0, 1.0, -2.0]) {
            assert!((g - e).abs() < 1e-13, "{got:?}");
        }
    }

    #[test]
    fn zero_t_has_zero_root() {
        let roots = roots_of(1, 1, 0);
        assert!(roots.discriminant_ok);
        assert!(roots.as_array().iter().any(|z| z.norm() < 1e-15));
    }

    #[test]
    fn binet_constants_examples() {
        let trib = SeqParams::tribonacci();
        let roots = cubic_roots(&trib.r, &trib.s, &trib.t);
        let k = binet_constants(&trib, &roots).unwrap();
        assert!((k.p - roots.alpha).norm() < 1e-12);
        assert!((k.q - roots.omega1).norm() < 1e-12);
        assert!((k.r - roots.omega2).norm() < 1e-12);

        let zero = SeqParams::from_ints([1, 1, 1], [0, 0, 0]);
        let k = binet_constants(&zero, &roots).unwrap();
        assert_eq!([k.p, k.q, k.r], [Complex64::zero(); 3]);

        let triple = SeqParams::from_ints([3, -3, 1], [0, 1, 1]);
        let roots = cubic_roots(&triple.r, &triple.s, &triple.t);
        assert_eq!(binet_constants(&triple, &roots), Err(Error::DegenerateRoots));
    }

    #[test]
    fn binet_number_examples() {
        let trib = SeqParams::tribonacci();
        assert!((binet_number(&trib, 5).unwrap() - 7.0).norm() < 1e-12);
        assert!(binet_number(&trib, 0).unwrap().norm() < 1e-12);
        let jac = SeqParams::third_order_jacobsthal();
        assert!((binet_number(&jac, 6).unwrap() - 18.0).norm() < 1e-11);
        let triple = SeqParams::from_ints([3, -3, 1], [0, 1, 1]);
        assert_eq!(binet_number(&triple, 4), Err(Error::DegenerateRoots));
    }

    #[test]
    fn binet_quaternion_examples() {
        let trib = SeqParams::tribonacci();
        let close = |got: [Complex64; 4], want: [f64; 4]| {
            got.iter().zip(want).all(|(g, w)| (g - w).norm() < 1e-11)
        };
        assert!(close(binet_quaternion(&trib, 0).unwrap(), [0.0, 1.0, 1.0, 2.0]));
        assert!(close(binet_quaternion(&trib, 3).unwrap(), [2.0, 4.0, 7.0, 13.0]));
        let zero = SeqParams::from_ints([1, 1, 1], [0, 0, 0]);
        assert_eq!(binet_quaternion(&zero, 9).unwrap(), [Complex64::zero(); 4]);
    }

    #[test]
    fn binet_spinor_examples() {
        let trib = SeqParams::tribonacci();
        let want0 = ComplexSpinor::from_exact(&Spinor::from_ints((2, 0), (1, 1)));
        assert!(binet_spinor(&trib, 0).unwrap().relative_error(&want0) < 1e-12);
        // V3..V7 = 2, 4, 7, 13, 24
        let want3 = ComplexSpinor::from_exact(&Spinor::from_ints((13, 2), (4, 7)));
        assert!(binet_spinor(&trib, 3).unwrap().relative_error(&want3) < 1e-12);
        let want4 = ComplexSpinor::from_exact(&Spinor::from_ints((24, 4), (7, 13)));
        assert!(binet_spinor(&trib, 4).unwrap().relative_error(&want4) < 1e-12);
        let general = binet_spinor(&trib, 2).unwrap();
        let special = tribonacci_binet_spinor(2).unwrap();
        assert!(general.relative_error(&special) < 1e-12);
    }

    #[test]
    fn relabeling_roots_does_not_change_binet() {
        let p = SeqParams::from_ints([2, 3, -1], [1, -2, 4]);
        let roots = cubic_roots(&p.r, &p.s, &p.t);
        for n in 0..20 {
            let a = binet_spinor_with(&p, &roots, n).unwrap();
            let b = binet_spinor_with(&p, &roots.swapped(), n).unwrap();
            assert!(a.relative_error(&b) < 1e-9);
        }
    }

    #[test]
    fn tribonacci_numerator_matches_closed_form() {
        // [2 + 2x + x² + i x; 1 + i(1 + x + x²)]
        let num = genfunc_numerator(&SeqParams::tribonacci());
        assert_eq!(num[0], Spinor::from_ints((2, 0), (1, 1)));
        assert_eq!(num[1], Spinor::from_ints((2, 1), (0, 1)));
        assert_eq!(num[2], Spinor::from_ints((1, 0), (0, 1)));
        let den = genfunc_denominator(&SeqParams::tribonacci());
        assert_eq!(den, [int(1), int(-1), int(-1), int(-1)]);
    }

    #[test]
    fn series_coefficients() {
        let trib = SeqParams::tribonacci();
        let series = genfunc_spinor_series(&trib, 12);
        assert_eq!(series.coefficients.len(), 12);
        assert_eq!(series.coefficients[0], Spinor::from_ints((2, 0), (1, 1)));
        for (k, c) in series.coefficients.iter().enumerate() {
            assert_eq!(*c, trib_spinor(&trib, k));
        }
        assert!(genfunc_spinor_series(&trib, 0).coefficients.is_empty());

        let frac = SeqParams::new(ratio(1, 2), int(-3), ratio(2, 3), int(1), ratio(-1, 4), int(2));
        let series = genfunc_spinor_series(&frac, 20);
        for (k, c) in series.coefficients.iter().enumerate() {
            assert_eq!(*c, trib_spinor(&frac, k));
        }
    }

    #[test]
    fn t_in_quadratic_term_breaks_the_expansion() {
        // The x² numerator term must use s; using t instead disagrees as soon as s ≠ t.
        let p = SeqParams::from_ints([1, 2, 5], [1, 1, 1]);
        let a: Vec<Spinor> = (0..3).map(|k| trib_spinor(&p, k)).collect();
        let with_t = &(&a[2] - &a[1].scale_real(&p.r)) - &a[0].scale_real(&p.t);
        let with_s = &(&a[2] - &a[1].scale_real(&p.r)) - &a[0].scale_real(&p.s);
        let num = genfunc_numerator(&p);
        assert_eq!(num[2], with_s);
        assert_ne!(num[2], with_t);
    }

    #[test]
    fn series_divide_rejects_zero_constant() {
        let out = series_divide(&[Spinor::zero()], &[int(0), int(1)], 3);
        assert!(matches!(out, Err(Error::InvalidInput(_))));
    }
}
