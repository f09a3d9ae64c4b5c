//! Hamilton quaternions over exact rationals and generalized Tribonacci
//! quaternions `Q_{v,n} = V_n + V_{n+1} e1 + V_{n+2} e2 + V_{n+3} e3`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, parse_scalar, Scalar};
use crate::sequences::{aux_term, seq_slice, Mat3, SeqParams};

/// `q0 e0 + q1 e1 + q2 e2 + q3 e3` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "QuatRepr", try_from = "QuatRepr")]
pub struct Quaternion {
    pub q0: Scalar,
    pub q1: Scalar,
    pub q2: Scalar,
    pub q3: Scalar,
}

impl Quaternion {
    pub fn new(q0: Scalar, q1: Scalar, q2: Scalar, q3: Scalar) -> Self {
        Self { q0, q1, q2, q3 }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        let [q0, q1, q2, q3] = c.map(int);
        Self { q0, q1, q2, q3 }
    }

    pub fn from_array(c: [Scalar; 4]) -> Self {
        let [q0, q1, q2, q3] = c;
        Self { q0, q1, q2, q3 }
    }

    pub fn zero() -> Self {
        Self::from_ints([0; 4])
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    pub fn e1() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    pub fn e2() -> Self {
        Self::from_ints([0, 0, 1, 0])
    }

    pub fn e3() -> Self {
        Self::from_ints([0, 0, 0, 1])
    }

    pub fn components(&self) -> [&Scalar; 4] {
        [&self.q0, &self.q1, &self.q2, &self.q3]
    }

    /// Scalar part `S_q`.
    pub fn scalar_part(&self) -> &Scalar {
        &self.q0
    }

    /// Vector part `V_q` as `(q1, q2, q3)`.
    pub fn vector_part(&self) -> [&Scalar; 3] {
        [&self.q1, &self.q2, &self.q3]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self::new(&self.q0 * k, &self.q1 * k, &self.q2 * k, &self.q3 * k)
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        Self::new(
            f(&self.q0, &rhs.q0),
            f(&self.q1, &rhs.q1),
            f(&self.q2, &rhs.q2),
            f(&self.q3, &rhs.q3),
        )
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.q0, self.q1, self.q2, self.q3)
    }
}

#[derive(Serialize, Deserialize)]
struct QuatRepr {
    q0: String,
    q1: String,
    q2: String,
    q3: String,
}

impl From<Quaternion> for QuatRepr {
    fn from(q: Quaternion) -> Self {
        Self {
            q0: q.q0.to_string(),
            q1: q.q1.to_string(),
            q2: q.q2.to_string(),
            q3: q.q3.to_string(),
        }
    }
}

impl TryFrom<QuatRepr> for Quaternion {
    type Error = Error;

    fn try_from(w: QuatRepr) -> Result<Self> {
        Ok(Self::new(
            parse_scalar(&w.q0)?,
            parse_scalar(&w.q1)?,
            parse_scalar(&w.q2)?,
            parse_scalar(&w.q3)?,
        ))
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.q0, -&self.q1, -&self.q2, -&self.q3)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        qmul(self, rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Quaternion {
            type Output = Quaternion;
            fn $m(self, rhs: Quaternion) -> Quaternion {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

/// Hamilton product `S_p S_q - <V_p,V_q> + S_p V_q + S_q V_p + V_p × V_q`.
pub fn qmul(p: &Quaternion, q: &Quaternion) -> Quaternion {
    let (a0, a1, a2, a3) = (&p.q0, &p.q1, &p.q2, &p.q3);
    let (b0, b1, b2, b3) = (&q.q0, &q.q1, &q.q2, &q.q3);
    Quaternion::new(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + b0 * a1 + (a2 * b3 - a3 * b2),
        a0 * b2 + b0 * a2 + (a3 * b1 - a1 * b3),
        a0 * b3 + b0 * a3 + (a1 * b2 - a2 * b1),
    )
}

pub fn qconj(q: &Quaternion) -> Quaternion {
    Quaternion::new(q.q0.clone(), -&q.q1, -&q.q2, -&q.q3)
}

/// `Nr(q) = q0² + q1² + q2² + q3²`.
pub fn qnorm(q: &Quaternion) -> Scalar {
    q.components().iter().fold(Scalar::zero(), |acc, c| acc + *c * *c)
}

/// `Q_{v,n}` together with the parameters and index that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TribQuaternion {
    pub params: SeqParams,
    pub n: usize,
    pub value: Quaternion,
}

fn window_quaternion(terms: &[Scalar]) -> Quaternion {
    Quaternion::new(
        terms[0].clone(),
        terms[1].clone(),
        terms[2].clone(),
        terms[3].clone(),
    )
}

pub fn trib_quaternion(p: &SeqParams, n: usize) -> TribQuaternion {
    TribQuaternion {
        params: p.clone(),
        n,
        value: window_quaternion(&seq_slice(p, n, 4)),
    }
}

/// `[Q_{v,n0}, …, Q_{v,n0+len-1}]` from a single pass over the sequence.
pub fn trib_quaternions(p: &SeqParams, n0: usize, len: usize) -> Vec<Quaternion> {
    if len == 0 {
        return Vec::new();
    }
    seq_slice(p, n0, len + 3)
        .windows(4)
        .map(window_quaternion)
        .collect()
}

/// `K_{v,n} = s Q_{v,n+1} + t Q_{v,n}`.
pub fn k_quaternion(p: &SeqParams, n: usize) -> Quaternion {
    let q = trib_quaternions(p, n, 2);
    &q[1].scale(&p.s) + &q[0].scale(&p.t)
}

/// The quaternion matrix
///
/// ```text
/// | Q_{n+4}  K_{n+2}  t Q_{n+3} |
/// | Q_{n+3}  K_{n+1}  t Q_{n+2} |
/// | Q_{n+2}  K_{n}    t Q_{n+1} |
/// ```
///
/// `shift = 0` is the unshifted matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QvMatrix {
    pub shift: usize,
    pub entries: [[Quaternion; 3]; 3],
}

impl QvMatrix {
    pub fn get(&self, row: usize, col: usize) -> &Quaternion {
        &self.entries[row][col]
    }

    /// Right multiplication by an exact scalar matrix. Quaternions are
    /// treated as a module over the rationals, so no Hamilton products occur.
    pub fn mul_scalar_matrix(&self, m: &Mat3) -> [[Quaternion; 3]; 3] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(Quaternion::zero(), |acc, k| {
                    &acc + &self.entries[i][k].scale(m.get(k, j))
                })
            })
        })
    }
}

pub fn qv_matrix(p: &SeqParams, shift: usize) -> QvMatrix {
    // Q_{shift} .. Q_{shift+4}
    let q = trib_quaternions(p, shift, 5);
    let k = |m: usize| &q[m + 1].scale(&p.s) + &q[m].scale(&p.t);
    let tq = |m: usize| q[m].scale(&p.t);
    QvMatrix {
        shift,
        entries: [
            [q[4].clone(), k(2), tq(3)],
            [q[3].clone(), k(1), tq(2)],
            [q[2].clone(), k(0), tq(1)],
        ],
    }
}

/// Right-hand side of `Q_{v,n+2} = Q_{v,2} U_{n+2} + (s Q_{v,1} + t Q_{v,0}) U_{n+1} + t Q_{v,1} U_n`.
pub fn quat_u_decomposition(p: &SeqParams, n: usize) -> Quaternion {
    let q = trib_quaternions(p, 0, 3);
    let u = |m: usize| aux_term(&p.r, &p.s, &p.t, m);
    let k0 = &q[1].scale(&p.s) + &q[0].scale(&p.t);
    let a = q[2].scale(&u(n + 2));
    let b = k0.scale(&u(n + 1));
    let c = q[1].scale(&(&p.t * u(n)));
    &(&a + &b) + &c
}

/// `δ`, `λ` and `ω` of the closed-form partial sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummationCorrection {
    pub delta: Scalar,
    pub lambda: Scalar,
    pub omega: Quaternion,
}

pub fn summation_correction(p: &SeqParams) -> SummationCorrection {
    let one = Scalar::one();
    let delta = p.delta();
    let lambda = (&p.r + &p.s - &one) * &p.v0 + (&p.r - &one) * &p.v1 - &p.v2;
    let s1 = p.v0.clone();
    let s2 = &s1 + &p.v1;
    let s3 = &s2 + &p.v2;
    let omega = Quaternion::new(
        lambda.clone(),
        &lambda - &delta * s1,
        &lambda - &delta * s2,
        &lambda - &delta * s3,
    );
    SummationCorrection { delta, lambda, omega }
}

/// `Σ_{l=0}^{n} Q_{v,l}` via `(Q_{v,n+2} + (1-r) Q_{v,n+1} + t Q_{v,n} + ω) / δ`.
pub fn quat_partial_sum(p: &SeqParams, n: usize) -> Result<Quaternion> {
    let corr = summation_correction(p);
    if corr.delta.is_zero() {
        return Err(Error::DegenerateDelta);
    }
    let q = trib_quaternions(p, n, 3);
    let one_minus_r = Scalar::one() - &p.r;
    let total = &(&(&q[2] + &q[1].scale(&one_minus_r)) + &q[0].scale(&p.t)) + &corr.omega;
    Ok(total.scale(&(Scalar::one() / corr.delta)))
}
