//! Spinors as pairs of Gaussian rationals and their link to quaternions.
//!
//! The map `σ(q) = [q3 + i q0; q1 + i q2]` is linear and injective. A product
//! of quaternions maps to a matrix-vector product through the "breve" matrix
//!
//! ```text
//! P̆ = | p3 + i p0   p1 - i p2 |
//!     | p1 + i p2  -p3 + i p0 |
//! ```
//!
//! with `σ(p × q) = -i P̆ σ(q)`. Transposes below are plain transposes, never
//! conjugate transposes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternions::{qv_matrix, trib_quaternion, trib_quaternions, Quaternion};
use crate::scalar::{gauss, parse_scalar, real, unit_i, Gauss, GaussDisplay, Scalar};
use crate::sequences::SeqParams;

/// Column spinor `[c1; c2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SpinorRepr", try_from = "SpinorRepr")]
pub struct Spinor {
    pub c1: Gauss,
    pub c2: Gauss,
}

impl Spinor {
    pub fn new(c1: Gauss, c2: Gauss) -> Self {
        Self { c1, c2 }
    }

    pub fn from_ints(c1: (i64, i64), c2: (i64, i64)) -> Self {
        use crate::scalar::gauss_int;
        Self::new(gauss_int(c1.0, c1.1), gauss_int(c2.0, c2.1))
    }

    pub fn zero() -> Self {
        Self::new(Gauss::zero(), Gauss::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    /// Multiplies both components by a complex scalar.
    pub fn scale(&self, k: &Gauss) -> Self {
        Self::new(&self.c1 * k, &self.c2 * k)
    }

    pub fn scale_real(&self, k: &Scalar) -> Self {
        self.scale(&real(k.clone()))
    }

    /// Plain bilinear product `selfᵗ · other` (no conjugation).
    pub fn dot(&self, other: &Spinor) -> Gauss {
        &self.c1 * &other.c1 + &self.c2 * &other.c2
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", GaussDisplay(&self.c1), GaussDisplay(&self.c2))
    }
}

impl Add for &Spinor {
    type Output = Spinor;
    fn add(self, rhs: &Spinor) -> Spinor {
        Spinor::new(&self.c1 + &rhs.c1, &self.c2 + &rhs.c2)
    }
}

impl Sub for &Spinor {
    type Output = Spinor;
    fn sub(self, rhs: &Spinor) -> Spinor {
        Spinor::new(&self.c1 - &rhs.c1, &self.c2 - &rhs.c2)
    }
}

impl Neg for &Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor::new(-self.c1.clone(), -self.c2.clone())
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(self, rhs: Spinor) -> Spinor {
        &self + &rhs
    }
}

impl Sub for Spinor {
    type Output = Spinor;
    fn sub(self, rhs: Spinor) -> Spinor {
        &self - &rhs
    }
}

impl Neg for Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct GaussRepr {
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct SpinorRepr {
    c1: GaussRepr,
    c2: GaussRepr,
}

impl From<&Gauss> for GaussRepr {
    fn from(z: &Gauss) -> Self {
        Self { re: z.re.to_string(), im: z.im.to_string() }
    }
}

impl TryFrom<GaussRepr> for Gauss {
    type Error = Error;
    fn try_from(w: GaussRepr) -> Result<Self> {
        Ok(gauss(parse_scalar(&w.re)?, parse_scalar(&w.im)?))
    }
}

impl From<Spinor> for SpinorRepr {
    fn from(s: Spinor) -> Self {
        Self { c1: (&s.c1).into(), c2: (&s.c2).into() }
    }
}

impl TryFrom<SpinorRepr> for Spinor {
    type Error = Error;
    fn try_from(w: SpinorRepr) -> Result<Self> {
        Ok(Spinor::new(w.c1.try_into()?, w.c2.try_into()?))
    }
}

/// 2×2 matrix of Gaussian rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpinMatrix2(pub [[Gauss; 2]; 2]);

impl SpinMatrix2 {
    pub fn from_ints(rows: [[(i64, i64); 2]; 2]) -> Self {
        use crate::scalar::gauss_int;
        SpinMatrix2(rows.map(|row| row.map(|(re, im)| gauss_int(re, im))))
    }

    pub fn identity() -> Self {
        Self::from_ints([[(1, 0), (0, 0)], [(0, 0), (1, 0)]])
    }

    /// `C = [[0, 1], [-1, 0]]`.
    pub fn c() -> Self {
        Self::from_ints([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]])
    }

    pub fn get(&self, row: usize, col: usize) -> &Gauss {
        &self.0[row][col]
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        SpinMatrix2([
            [m[0][0].clone(), m[1][0].clone()],
            [m[0][1].clone(), m[1][1].clone()],
        ])
    }

    pub fn scale(&self, k: &Gauss) -> Self {
        SpinMatrix2(self.0.clone().map(|row| row.map(|z| z * k)))
    }

    pub fn scale_real(&self, k: &Scalar) -> Self {
        self.scale(&real(k.clone()))
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        let m = &self.0;
        Spinor::new(
            &m[0][0] * &v.c1 + &m[0][1] * &v.c2,
            &m[1][0] * &v.c1 + &m[1][1] * &v.c2,
        )
    }

    pub fn matmul(&self, rhs: &SpinMatrix2) -> SpinMatrix2 {
        let (a, b) = (&self.0, &rhs.0);
        SpinMatrix2(std::array::from_fn(|i| {
            std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j])
        }))
    }

    /// First column as a spinor.
    pub fn first_column(&self) -> Spinor {
        Spinor::new(self.0[0][0].clone(), self.0[1][0].clone())
    }
}

impl Add for &SpinMatrix2 {
    type Output = SpinMatrix2;
    fn add(self, rhs: &SpinMatrix2) -> SpinMatrix2 {
        SpinMatrix2(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.0[i][j] + &rhs.0[i][j])
        }))
    }
}

impl Neg for &SpinMatrix2 {
    type Output = SpinMatrix2;
    fn neg(self) -> SpinMatrix2 {
        SpinMatrix2(self.0.clone().map(|row| row.map(|z| -z)))
    }
}

impl Mul for &SpinMatrix2 {
    type Output = SpinMatrix2;
    fn mul(self, rhs: &SpinMatrix2) -> SpinMatrix2 {
        self.matmul(rhs)
    }
}

impl Mul<&Spinor> for &SpinMatrix2 {
    type Output = Spinor;
    fn mul(self, rhs: &Spinor) -> Spinor {
        self.apply(rhs)
    }
}

impl fmt::Display for SpinMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            GaussDisplay(&m[0][0]),
            GaussDisplay(&m[0][1]),
            GaussDisplay(&m[1][0]),
            GaussDisplay(&m[1][1])
        )
    }
}

/// `σ(q) = [q3 + i q0; q1 + i q2]`.
pub fn sigma(q: &Quaternion) -> Spinor {
    Spinor::new(
        gauss(q.q3.clone(), q.q0.clone()),
        gauss(q.q1.clone(), q.q2.clone()),
    )
}

pub fn sigma_inv(s: &Spinor) -> Quaternion {
    Quaternion::new(s.c1.im.clone(), s.c2.re.clone(), s.c2.im.clone(), s.c1.re.clone())
}

pub fn complex_conjugate(s: &Spinor) -> Spinor {
    Spinor::new(s.c1.conj(), s.c2.conj())
}

/// Cartan conjugate `i C s̄ = [i c̄2; -i c̄1]`.
pub fn cartan_conjugate(s: &Spinor) -> Spinor {
    let i = unit_i();
    Spinor::new(&i * s.c2.conj(), -(&i * s.c1.conj()))
}

/// Mate `-C s̄ = [-c̄2; c̄1]`.
pub fn mate(s: &Spinor) -> Spinor {
    Spinor::new(-s.c2.conj(), s.c1.conj())
}

pub fn breve(q: &Quaternion) -> SpinMatrix2 {
    SpinMatrix2([
        [gauss(q.q3.clone(), q.q0.clone()), gauss(q.q1.clone(), -&q.q2)],
        [gauss(q.q1.clone(), q.q2.clone()), gauss(-&q.q3, q.q0.clone())],
    ])
}

/// `s̄ᵗ s = |c1|² + |c2|²`, returned as a Gaussian value with zero imaginary part.
pub fn spinor_norm(s: &Spinor) -> Gauss {
    complex_conjugate(s).dot(s)
}

/// `-i · breve(p) · σ(q)`, the spinor image of `p × q`.
pub fn spinor_product(p: &Quaternion, q: &Quaternion) -> Spinor {
    breve(p).apply(&sigma(q)).scale(&-unit_i())
}

/// `A_{v,n} = [V_{n+3} + i V_n; V_{n+1} + i V_{n+2}]`.
pub fn trib_spinor(p: &SeqParams, n: usize) -> Spinor {
    sigma(&trib_quaternion(p, n).value)
}

/// `[A_{v,n0}, …]` from a single pass.
pub fn trib_spinors(p: &SeqParams, n0: usize, len: usize) -> Vec<Spinor> {
    trib_quaternions(p, n0, len).iter().map(sigma).collect()
}

/// `Ă_{v,n}`, the breve matrix of `Q_{v,n}`.
pub fn breve_trib(p: &SeqParams, n: usize) -> SpinMatrix2 {
    breve(&trib_quaternion(p, n).value)
}

/// The spinor counterpart of the quaternion matrix:
///
/// ```text
/// - | A_{n+4}  K̆_{n+2}  t Ă_{n+3} |
///   | A_{n+3}  K̆_{n+1}  t Ă_{n+2} |
///   | A_{n+2}  K̆_{n}    t Ă_{n+1} |
/// ```
///
/// with `K̆_m = s Ă_{m+1} + t Ă_m`. The first column holds spinors, the
/// other two hold breve matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinorQvMatrix {
    pub shift: usize,
    pub first: [Spinor; 3],
    pub middle: [SpinMatrix2; 3],
    pub last: [SpinMatrix2; 3],
}

pub fn spinor_qv_matrix(p: &SeqParams, shift: usize) -> SpinorQvMatrix {
    let a = trib_spinors(p, shift, 5);
    let ab: Vec<SpinMatrix2> = trib_quaternions(p, shift, 5).iter().map(breve).collect();
    let kb = |m: usize| -&(&ab[m + 1].scale_real(&p.s) + &ab[m].scale_real(&p.t));
    let tb = |m: usize| -&ab[m].scale_real(&p.t);
    SpinorQvMatrix {
        shift,
        first: [-&a[4], -&a[3], -&a[2]],
        middle: [kb(2), kb(1), kb(0)],
        last: [tb(3), tb(2), tb(1)],
    }
}

impl SpinorQvMatrix {
    /// Rebuilds the entries from the quaternion matrix through `σ` and breve.
    pub fn from_quaternion_matrix(p: &SeqParams, shift: usize) -> Self {
        let m = qv_matrix(p, shift);
        let col = |j: usize| [m.get(0, j), m.get(1, j), m.get(2, j)];
        SpinorQvMatrix {
            shift,
            first: col(0).map(|q| -sigma(q)),
            middle: col(1).map(|q| -&breve(q)),
            last: col(2).map(|q| -&breve(q)),
        }
    }
}

/// Complex-scalar view of an exact Gaussian rational.
pub fn gauss_to_f64(z: &Gauss) -> Complex<f64> {
    Complex::new(crate::scalar::to_f64(&z.re), crate::scalar::to_f64(&z.im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternions::{qconj, qmul, qnorm};
    use crate::scalar::{gauss_int, int};

    fn q(c: [i64; 4]) -> Quaternion {
        Quaternion::from_ints(c)
    }

    fn sp(a: (i64, i64), b: (i64, i64)) -> Spinor {
        Spinor::from_ints(a, b)
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&q([1, 2, 3, 4])), sp((4, 1), (2, 3)));
        assert_eq!(sigma(&Quaternion::zero()), Spinor::zero());
        assert_eq!(sigma(&qconj(&q([1, 2, 3, 4]))), sp((-4, 1), (-2, -3)));
    }

    #[test]
    fn sigma_inv_examples() {
        assert_eq!(sigma_inv(&sp((4, 1), (2, 3))), q([1, 2, 3, 4]));
        assert_eq!(sigma_inv(&Spinor::zero()), Quaternion::zero());
    }

    #[test]
    fn complex_conjugate_examples() {
        assert_eq!(complex_conjugate(&sp((4, 1), (2, 3))), sp((4, -1), (2, -3)));
        let r = sp((5, 0), (-2, 0));
        assert_eq!(complex_conjugate(&r), r);
        let x = sp((1, -7), (3, 2));
        assert_eq!(complex_conjugate(&complex_conjugate(&x)), x);
    }

    #[test]
    fn cartan_and_mate_examples() {
        assert_eq!(cartan_conjugate(&sp((1, 0), (0, 0))), sp((0, 0), (0, -1)));
        assert_eq!(mate(&sp((1, 0), (0, 0))), sp((0, 0), (1, 0)));
        assert_eq!(cartan_conjugate(&Spinor::zero()), Spinor::zero());
        assert_eq!(mate(&Spinor::zero()), Spinor::zero());
    }

    #[test]
    fn conjugates_of_trib_spinor_match_displayed_forms() {
        let p = SeqParams::from_ints([2, -1, 3], [1, 4, -2]);
        for n in 0..6 {
            let v: Vec<i64> = (n..n + 4)
                .map(|k| {
                    let x = crate::sequences::seq_term(&p, k);
                    num_traits::ToPrimitive::to_i64(x.numer()).unwrap()
                })
                .collect();
            let a = trib_spinor(&p, n);
            assert_eq!(a, sp((v[3], v[0]), (v[1], v[2])));
            assert_eq!(complex_conjugate(&a), sp((v[3], -v[0]), (v[1], -v[2])));
            assert_eq!(cartan_conjugate(&a), sp((v[2], v[1]), (-v[0], -v[3])));
            assert_eq!(mate(&a), sp((-v[1], v[2]), (v[3], -v[0])));
            let qc = qconj(&trib_quaternion(&p, n).value);
            assert_eq!(sigma(&qc), sp((-v[3], v[0]), (-v[1], -v[2])));
        }
    }

    #[test]
    fn breve_examples() {
        assert_eq!(breve(&Quaternion::e1()), SpinMatrix2::from_ints([[(0, 0), (1, 0)], [(1, 0), (0, 0)]]));
        assert_eq!(breve(&Quaternion::e3()), SpinMatrix2::from_ints([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]));
        assert_eq!(breve(&Quaternion::one()), SpinMatrix2::from_ints([[(0, 1), (0, 0)], [(0, 0), (0, 1)]]));
        let x = q([3, -2, 5, 7]);
        assert_eq!(breve(&x).first_column(), sigma(&x));
    }

    #[test]
    fn c_squares_to_minus_identity() {
        let c = SpinMatrix2::c();
        assert_eq!(c.matmul(&c), -&SpinMatrix2::identity());
    }

    #[test]
    fn spinor_norm_examples() {
        assert_eq!(spinor_norm(&sp((2, 0), (1, 1))), gauss_int(6, 0));
        assert_eq!(spinor_norm(&Spinor::zero()), gauss_int(0, 0));
        assert_eq!(spinor_norm(&sp((1, 0), (0, 0))), gauss_int(1, 0));
        assert_eq!(qnorm(&q([0, 1, 1, 2])), int(6));
    }

    #[test]
    fn trib_spinor_examples() {
        let trib = SeqParams::tribonacci();
        assert_eq!(trib_spinor(&trib, 0), sp((2, 0), (1, 1)));
        assert_eq!(trib_spinor(&trib, 1), sp((4, 1), (1, 2)));
        assert_eq!(trib_spinor(&trib, 2), sp((7, 1), (2, 4)));
        assert_eq!(trib_spinors(&trib, 0, 3)[2], trib_spinor(&trib, 2));
    }

    #[test]
    fn breve_trib_matches_printed_matrices() {
        let trib = SeqParams::tribonacci();
        assert_eq!(breve_trib(&trib, 0), SpinMatrix2::from_ints([[(2, 0), (1, -1)], [(1, 1), (-2, 0)]]));
        assert_eq!(breve_trib(&trib, 1), SpinMatrix2::from_ints([[(4, 1), (1, -2)], [(1, 2), (-4, 1)]]));
        assert_eq!(breve_trib(&trib, 2), SpinMatrix2::from_ints([[(7, 1), (2, -4)], [(2, 4), (-7, 1)]]));
    }

    #[test]
    fn product_correspondence_on_basis() {
        let basis = [Quaternion::one(), Quaternion::e1(), Quaternion::e2(), Quaternion::e3()];
        for a in &basis {
            for b in &basis {
                assert_eq!(sigma(&qmul(a, b)), spinor_product(a, b), "{a} x {b}");
            }
        }
    }

    #[test]
    fn spinor_matrix_agrees_with_quaternion_matrix() {
        let p = SeqParams::from_ints([1, -2, 3], [2, 0, 1]);
        for shift in 0..4 {
            assert_eq!(spinor_qv_matrix(&p, shift), SpinorQvMatrix::from_quaternion_matrix(&p, shift));
        }
    }

    #[test]
    fn spinor_json_uses_strings() {
        let json = serde_json::to_string(&sp((7, 1), (2, 4))).unwrap();
        assert_eq!(json, r#"{"c1":{"re":"7","im":"1"},"c2":{"re":"2","im":"4"}}"#);
        let back: Spinor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sp((7, 1), (2, 4)));
    }
}
