//! Generalized Tribonacci numbers `V_n = r V_{n-1} + s V_{n-2} + t V_{n-3}`.
//!
//! Terms are computed by a forward pass. [`companion_power`] gives the same
//! numbers through powers of the companion matrix `[[r,s,t],[1,0,0],[0,1,0]]`,
//! which is what the quaternion matrix identities are built on.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, parse_scalar, Scalar};

/// Recurrence coefficients and seeds. `t = 0` is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ParamsRepr", try_from = "ParamsRepr")]
pub struct SeqParams {
    pub r: Scalar,
    pub s: Scalar,
    pub t: Scalar,
    pub v0: Scalar,
    pub v1: Scalar,
    pub v2: Scalar,
}

impl SeqParams {
    pub fn new(r: Scalar, s: Scalar, t: Scalar, v0: Scalar, v1: Scalar, v2: Scalar) -> Self {
        Self { r, s, t, v0, v1, v2 }
    }

    /// Integer coefficients `(r, s, t)` and seeds `(v0, v1, v2)`.
    pub fn from_ints(coeffs: [i64; 3], seeds: [i64; 3]) -> Self {
        let [r, s, t] = coeffs.map(int);
        let [v0, v1, v2] = seeds.map(int);
        Self { r, s, t, v0, v1, v2 }
    }

    pub fn tribonacci() -> Self {
        Self::from_ints([1, 1, 1], [0, 1, 1])
    }

    pub fn third_order_jacobsthal() -> Self {
        Self::from_ints([1, 1, 2], [0, 1, 1])
    }

    /// Same coefficients, different seeds.
    pub fn with_seeds(&self, v0: Scalar, v1: Scalar, v2: Scalar) -> Self {
        Self { v0, v1, v2, ..self.clone() }
    }

    pub fn seeds(&self) -> [&Scalar; 3] {
        [&self.v0, &self.v1, &self.v2]
    }

    /// `r + s + t - 1`, the divisor of the closed-form partial sum.
    pub fn delta(&self) -> Scalar {
        &self.r + &self.s + &self.t - Scalar::one()
    }

    pub fn is_tribonacci(&self) -> bool {
        *self == Self::tribonacci()
    }

    /// Parses the CLI form `r,s,t,V0,V1,V2`.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 6 {
            return Err(Error::InvalidParams(parts.len()));
        }
        let v = parts
            .iter()
            .map(|p| parse_scalar(p))
            .collect::<Result<Vec<_>>>()?;
        let [r, s, t, v0, v1, v2]: [Scalar; 6] = v.try_into().expect("length checked");
        Ok(Self { r, s, t, v0, v1, v2 })
    }

    pub fn to_csv(&self) -> String {
        format!("{},{},{},{},{},{}", self.r, self.s, self.t, self.v0, self.v1, self.v2)
    }
}

impl fmt::Display for SeqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V({},{},{}; {},{},{})",
            self.v0, self.v1, self.v2, self.r, self.s, self.t
        )
    }
}

impl FromStr for SeqParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_csv(s)
    }
}

/// Wire form: every exact value is a decimal-rational string.
#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    r: String,
    s: String,
    t: String,
    v0: String,
    v1: String,
    v2: String,
}

impl From<SeqParams> for ParamsRepr {
    fn from(p: SeqParams) -> Self {
        Self {
            r: p.r.to_string(),
            s: p.s.to_string(),
            t: p.t.to_string(),
            v0: p.v0.to_string(),
            v1: p.v1.to_string(),
            v2: p.v2.to_string(),
        }
    }
}

impl TryFrom<ParamsRepr> for SeqParams {
    type Error = Error;

    fn try_from(w: ParamsRepr) -> Result<Self> {
        Ok(Self {
            r: parse_scalar(&w.r)?,
            s: parse_scalar(&w.s)?,
            t: parse_scalar(&w.t)?,
            v0: parse_scalar(&w.v0)?,
            v1: parse_scalar(&w.v1)?,
            v2: parse_scalar(&w.v2)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Tribonacci,
    ThirdOrderJacobsthal,
}

impl Preset {
    pub fn params(self) -> SeqParams {
        match self {
            Preset::Tribonacci => SeqParams::tribonacci(),
            Preset::ThirdOrderJacobsthal => SeqParams::third_order_jacobsthal(),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(name: &str) -> Result<Self> {
        match name {
            "tribonacci" => Ok(Preset::Tribonacci),
            "third_order_jacobsthal" => Ok(Preset::ThirdOrderJacobsthal),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }
}

/// Looks up a named parameter set.
pub fn preset(name: &str) -> Result<SeqParams> {
    name.parse::<Preset>().map(Preset::params)
}

fn step(p: &SeqParams, a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
    // a = V_{k-3}, b = V_{k-2}, c = V_{k-1}
    &p.r * c + &p.s * b + &p.t * a
}

/// `V_n` by forward iteration.
pub fn seq_term(p: &SeqParams, n: usize) -> Scalar {
    let [mut a, mut b, mut c] = [p.v0.clone(), p.v1.clone(), p.v2.clone()];
    match n {
        0 => return a,
        1 => return b,
        2 => return c,
        _ => {}
    }
    for _ in 2..n {
        let next = step(p, &a, &b, &c);
        a = std::mem::replace(&mut b, std::mem::replace(&mut c, next));
    }
    c
}

/// `[V_{n0}, …, V_{n0+len-1}]` in one forward pass.
pub fn seq_slice(p: &SeqParams, n0: usize, len: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(len);
    if len == 0 {
        return out;
    }
    let end = n0 + len;
    let mut window = [p.v0.clone(), p.v1.clone(), p.v2.clone()];
    for k in 0..end {
        let term = if k < 3 {
            window[k].clone()
        } else {
            let next = step(p, &window[0], &window[1], &window[2]);
            window.rotate_left(1);
            window[2] = next.clone();
            next
        };
        if k >= n0 {
            out.push(term);
        }
    }
    out
}

/// `U_n`, the sequence with the same coefficients and seeds `(0, 0, 1)`.
pub fn aux_term(r: &Scalar, s: &Scalar, t: &Scalar, n: usize) -> Scalar {
    let p = SeqParams::new(
        r.clone(),
        s.clone(),
        t.clone(),
        Scalar::zero(),
        Scalar::zero(),
        Scalar::one(),
    );
    seq_term(&p, n)
}

/// Dense 3×3 matrix of exact scalars, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3(pub [[Scalar; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { Scalar::one() } else { Scalar::zero() })
        }))
    }

    /// The companion matrix `[[r,s,t],[1,0,0],[0,1,0]]`.
    pub fn companion(p: &SeqParams) -> Self {
        let (o, z) = (Scalar::one(), Scalar::zero());
        Mat3([
            [p.r.clone(), p.s.clone(), p.t.clone()],
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), o, z],
        ])
    }

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(Scalar::zero(), |acc, k| acc + &self.0[i][k] * &rhs.0[k][j])
            })
        }))
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.0[row][col]
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|row| row.map(int)))
    }
}

/// `M^n` for the companion matrix, by repeated squaring.
pub fn companion_power(p: &SeqParams, n: u64) -> Mat3 {
    let mut result = Mat3::identity();
    let mut base = Mat3::companion(p);
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    result
}

/// `V_{n+2}` from the first row of `M^n` applied to `(V2, V1, V0)`.
pub fn seq_term_fast(p: &SeqParams, n: u64) -> Scalar {
    let m = companion_power(p, n);
    m.get(0, 0) * &p.v2 + m.get(0, 1) * &p.v1 + m.get(0, 2) * &p.v0
}
