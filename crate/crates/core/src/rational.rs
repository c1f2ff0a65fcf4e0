//! Exact rational helpers shared across the crate.
//!
//! Every rational that leaves the crate (JSON, CLI output) is rendered as
//! `p/q` with `q > 0` and `gcd(p, q) = 1`, including integers (`3/1`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Canonical `p/q` rendering.
pub fn to_pq(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q`, `p` or `-p/q`.
pub fn parse_pq(s: &str) -> Result<Q> {
    let bad = || Error::ParseRational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

pub fn is_integral(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if is_integral(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Integer vector if every entry is integral and fits in `i64`.
pub fn to_i64_vec(v: &[Q]) -> Option<Vec<i64>> {
    v.iter().map(to_i64).collect()
}

pub fn fmt_vec(v: &[Q]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|x| {
            if is_integral(x) {
                x.numer().to_string()
            } else {
                to_pq(x)
            }
        })
        .collect();
    format!("({})", parts.join(", "))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_ray(v: &[Q]) -> Vec<i64> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return vec![0; v.len()];
    }
    ints.iter()
        .map(|x| (x / &g).to_i64().expect("primitive entry fits in i64"))
        .collect()
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn sign(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
