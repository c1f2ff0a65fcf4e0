//! Interlacing branching laws and closed forms for zero-weight dimensions.
//!
//! `GL_{n+1} ↓ GL_n` and `SO_{2n+1} ↓ SO_{2n}` are multiplicity free, with
//! the restricted highest weights given by interlacing. Counting zero weight
//! spaces then reduces to a recursion over the branches that can still carry
//! a zero weight: for `GL` these are the branches with trivial central
//! character (total zero), for `SO_4` those with even total.
//!
//! The closed forms below are generic over [`Ring`] so that the same text is
//! evaluated on rationals and expanded as an [`ExactPolynomial`].
//!
//! [`ExactPolynomial`]: crate::poly::ExactPolynomial

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Ring;
use crate::rational::{self, frac, q, Q};

/// Highest weight of `GL_n`: weakly decreasing integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GLWeight {
    parts: Vec<i64>,
}

impl GLWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidGlWeight(parts));
        }
        Ok(GLWeight { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Highest weight of the dual representation, `(-λ_n, ..., -λ_1)`.
    pub fn dual(&self) -> GLWeight {
        GLWeight {
            parts: self.parts.iter().rev().map(|x| -x).collect(),
        }
    }

    fn require_len(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::WrongLength {
                expected: n,
                got: self.n(),
            });
        }
        Ok(())
    }

    fn require_trace_zero(&self) -> Result<()> {
        if self.total() != 0 {
            return Err(Error::NonzeroTotal(self.parts.clone()));
        }
        Ok(())
    }

    fn qparts(&self) -> Vec<Q> {
        rational::qvec(&self.parts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SOKind {
    /// `SO_{2n+1}`: `λ_1 ≥ ... ≥ λ_n ≥ 0`.
    Odd,
    /// `SO_{2n}`: `λ_1 ≥ ... ≥ λ_{n-1} ≥ |λ_n|`.
    Even,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SOWeight {
    parts: Vec<i64>,
    kind: SOKind,
}

impl SOWeight {
    pub fn new(parts: Vec<i64>, kind: SOKind) -> Result<Self> {
        let n = parts.len();
        let chain_ok = n == 0 || parts[..n - 1].windows(2).all(|w| w[0] >= w[1]);
        let tail_ok = match (kind, n) {
            (_, 0) => true,
            (SOKind::Odd, _) => parts[n - 1] >= 0 && (n < 2 || parts[n - 2] >= parts[n - 1]),
            (SOKind::Even, 1) => true,
            (SOKind::Even, _) => parts[n - 2] >= parts[n - 1].abs(),
        };
        if chain_ok && tail_ok {
            Ok(SOWeight { parts, kind })
        } else {
            Err(Error::InvalidSoWeight(parts))
        }
    }

    pub fn odd(parts: Vec<i64>) -> Result<Self> {
        Self::new(parts, SOKind::Odd)
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn kind(&self) -> SOKind {
        self.kind
    }
}

/// Regions of the trace-zero dominant cone of `GL_4` carrying one polynomial each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GL4Region {
    /// `λ_2 ≤ 0`
    R1,
    /// `λ_3 ≥ 0`
    R2,
    /// `λ_2 > 0, λ_3 < 0, λ_1 + λ_4 ≥ 0`
    R3,
    /// `λ_2 > 0, λ_3 < 0, λ_1 + λ_4 ≤ 0`
    R4,
}

impl GL4Region {
    pub const ALL: [GL4Region; 4] = [GL4Region::R1, GL4Region::R2, GL4Region::R3, GL4Region::R4];

    /// Whether a (rational) trace-zero point satisfies this region's closed
    /// inequalities, ignoring the strict ones on walls shared with `R1`/`R2`.
    pub fn contains(self, l: &[Q]) -> bool {
        let zero = Q::from_integer(0.into());
        match self {
            GL4Region::R1 => l[1] <= zero,
            GL4Region::R2 => l[2] >= zero,
            GL4Region::R3 => l[1] > zero && l[2] < zero && &l[0] + &l[3] >= zero,
            GL4Region::R4 => l[1] > zero && l[2] < zero && &l[0] + &l[3] <= zero,
        }
    }

    /// The region's polynomial evaluated in any ring.
    pub fn polynomial<T: Ring>(self, l: &[T; 4]) -> T {
        match self {
            GL4Region::R1 => gl4_p1(l),
            GL4Region::R2 => gl4_p2(l),
            GL4Region::R3 => gl4_p3(l),
            GL4Region::R4 => gl4_p4(l),
        }
    }
}

/// `GL_{n+1} → GL_n` restriction: all `μ` with
/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ ... ≥ λ_n ≥ μ_n ≥ λ_{n+1}`.
pub fn branch_gl(lambda: &GLWeight) -> Vec<GLWeight> {
    let p = lambda.parts();
    if p.len() <= 1 {
        return vec![GLWeight { parts: vec![] }];
    }
    let n = p.len() - 1;
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, p: &[i64], cur: &mut Vec<i64>, out: &mut Vec<GLWeight>) {
        if i == cur.len() {
            out.push(GLWeight { parts: cur.clone() });
            return;
        }
        for m in (p[i + 1]..=p[i]).rev() {
            cur[i] = m;
            rec(i + 1, p, cur, out);
        }
    }
    rec(0, p, &mut cur, &mut out);
    out
}

/// Interlacing branches with total zero, without enumerating the others.
fn trace_zero_branches(p: &[i64]) -> Vec<Vec<i64>> {
    let n = p.len() - 1;
    // Range of Σ_{j ≥ i} μ_j.
    let min_tail: Vec<i64> = (0..=n).map(|i| p[i + 1..].iter().sum()).collect();
    let max_tail: Vec<i64> = (0..=n).map(|i| p[i..n].iter().sum()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(
        i: usize,
        need: i64,
        p: &[i64],
        lo: &[i64],
        hi: &[i64],
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let n = cur.len();
        if i == n {
            if need == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if need < lo[i] || need > hi[i] {
            return;
        }
        for m in p[i + 1]..=p[i] {
            cur[i] = m;
            rec(i + 1, need - m, p, lo, hi, cur, out);
        }
    }
    rec(0, 0, p, &min_tail, &max_tail, &mut cur, &mut out);
    out
}

/// Dimension of the zero weight space of the `GL_n` representation `λ`,
/// which must have total zero.
pub fn zero_dim_gl(lambda: &GLWeight) -> Result<u64> {
    if lambda.n() == 0 {
        return Ok(1);
    }
    lambda.require_trace_zero()?;
    let mut memo = HashMap::new();
    Ok(zero_dim_gl_rec(lambda.parts(), &mut memo))
}

fn zero_dim_gl_rec(p: &[i64], memo: &mut HashMap<Vec<i64>, u64>) -> u64 {
    match p.len() {
        1 => return u64::from(p[0] == 0),
        2 => return u64::from(p[0] + p[1] == 0),
        _ => {}
    }
    if let Some(&v) = memo.get(p) {
        return v;
    }
    let v = trace_zero_branches(p)
        .iter()
        .map(|mu| zero_dim_gl_rec(mu, memo))
        .sum();
    memo.insert(p.to_vec(), v);
    v
}

/// `GL_3` zero-weight dimension, both linear pieces; the first applies for
/// `λ_2 ≥ 0`, the second for `λ_2 ≤ 0`.
pub fn gl3_pieces<T: Ring>(l: &[T; 3]) -> (T, T) {
    let one = l[0].constant_like(q(1));
    (
        l[0].clone() - l[1].clone() + one.clone(),
        l[1].clone() - l[2].clone() + one,
    )
}

pub fn gl3_closed_form(lambda: &GLWeight) -> Result<i64> {
    lambda.require_len(3)?;
    lambda.require_trace_zero()?;
    let p = lambda.parts();
    let l = [q(p[0]), q(p[1]), q(p[2])];
    let (nonneg, nonpos) = gl3_pieces(&l);
    let v = if p[1] >= 0 { nonneg } else { nonpos };
    integral(v)
}

/// `SO_5` zero-weight dimension for `λ_1 + λ_2` even.
pub fn so5_even_piece<T: Ring>(l: &[T; 2]) -> T {
    let half = l[0].constant_like(frac(1, 2));
    let one = l[0].constant_like(q(1));
    (l[0].clone() - l[1].clone()) * l[1].clone() + half * (l[0].clone() + l[1].clone()) + one
}

/// `SO_5` zero-weight dimension for `λ_1 + λ_2` odd.
pub fn so5_odd_piece<T: Ring>(l: &[T; 2]) -> T {
    let half = l[0].constant_like(frac(1, 2));
    (l[0].clone() - l[1].clone()) * l[1].clone()
        + half.clone() * (l[0].clone() + l[1].clone())
        + half
}

pub fn so5_closed_form(lambda: &SOWeight) -> Result<i64> {
    require_so5(lambda)?;
    let p = lambda.parts();
    let l = [q(p[0]), q(p[1])];
    let v = if (p[0] + p[1]) % 2 == 0 {
        so5_even_piece(&l)
    } else {
        so5_odd_piece(&l)
    };
    integral(v)
}

fn require_so5(lambda: &SOWeight) -> Result<()> {
    if lambda.kind() != SOKind::Odd || lambda.parts().len() != 2 {
        return Err(Error::InvalidSoWeight(lambda.parts().to_vec()));
    }
    Ok(())
}

/// `SO_{2n+1} → SO_{2n}` restriction:
/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ ... ≥ λ_n ≥ |μ_n|`.
pub fn branch_so(lambda: &SOWeight) -> Result<Vec<SOWeight>> {
    if lambda.kind() != SOKind::Odd {
        return Err(Error::InvalidSoWeight(lambda.parts().to_vec()));
    }
    let p = lambda.parts();
    let n = p.len();
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, p: &[i64], cur: &mut Vec<i64>, out: &mut Vec<SOWeight>) {
        let n = p.len();
        if i == n {
            out.push(SOWeight {
                parts: cur.clone(),
                kind: SOKind::Even,
            });
            return;
        }
        let (lo, hi) = if i + 1 < n {
            (p[i + 1], p[i])
        } else {
            (-p[i], p[i])
        };
        for m in (lo..=hi).rev() {
            cur[i] = m;
            rec(i + 1, p, cur, out);
        }
    }
    if n > 0 {
        rec(0, p, &mut cur, &mut out);
    }
    Ok(out)
}

/// Zero-weight dimension of `SO_5`, counting the `SO_4` branches with even total.
pub fn zero_dim_so5(lambda: &SOWeight) -> Result<u64> {
    require_so5(lambda)?;
    Ok(branch_so(lambda)?
        .iter()
        .filter(|mu| (mu.parts()[0] + mu.parts()[1]) % 2 == 0)
        .count() as u64)
}

/// Region of a trace-zero dominant `GL_4` weight. Walls go to the first
/// region in the order `R1, R2, R3, R4` whose closed condition holds.
pub fn gl4_region(lambda: &GLWeight) -> Result<GL4Region> {
    lambda.require_len(4)?;
    lambda.require_trace_zero()?;
    let p = lambda.parts();
    Ok(if p[1] <= 0 {
        GL4Region::R1
    } else if p[2] >= 0 {
        GL4Region::R2
    } else if p[0] + p[3] >= 0 {
        GL4Region::R3
    } else {
        GL4Region::R4
    })
}

pub fn gl4_p1<T: Ring>(l: &[T; 4]) -> T {
    let c = |x: i64| l[0].constant_like(q(x));
    l[0].constant_like(frac(1, 2))
        * (l[1].clone() - l[2].clone() + c(1))
        * (l[2].clone() - l[3].clone() + c(1))
        * (l[1].clone() - l[3].clone() + c(2))
}

pub fn gl4_p2<T: Ring>(l: &[T; 4]) -> T {
    let c = |x: i64| l[0].constant_like(q(x));
    l[0].constant_like(frac(1, 2))
        * (l[0].clone() - l[1].clone() + c(1))
        * (l[1].clone() - l[2].clone() + c(1))
        * (l[0].clone() - l[2].clone() + c(2))
}

/// Written in `λ_1, λ_2, λ_3` only.
pub fn gl4_p3<T: Ring>(l: &[T; 4]) -> T {
    let c = |x: i64| l[0].constant_like(q(x));
    let (a, b, d) = (l[0].clone(), l[1].clone(), l[2].clone());
    let linear = a.clone() + b.clone() + c(2) * d.clone() + c(1);
    let quad = -(a.clone() * b.clone())
        + c(2) * b.clone() * b.clone()
        + a.clone() * d.clone()
        + b * d.clone()
        + d.clone() * d.clone()
        - a
        + d
        - c(2);
    l[0].constant_like(frac(-1, 2)) * linear * quad
}

/// Written in `λ_1, λ_2, λ_3` only.
pub fn gl4_p4<T: Ring>(l: &[T; 4]) -> T {
    let c = |x: i64| l[0].constant_like(q(x));
    let (a, b, d) = (l[0].clone(), l[1].clone(), l[2].clone());
    let linear = -a.clone() + b.clone() - c(1);
    let quad = -(a.clone() * b.clone())
        + a.clone() * d.clone()
        + b.clone() * d.clone()
        + c(3) * d.clone() * d.clone()
        - a
        - c(2) * b
        - d
        - c(2);
    l[0].constant_like(frac(1, 2)) * linear * quad
}

pub fn gl4_closed_form(lambda: &GLWeight) -> Result<i64> {
    let region = gl4_region(lambda)?;
    let qp = lambda.qparts();
    let l = [qp[0].clone(), qp[1].clone(), qp[2].clone(), qp[3].clone()];
    integral(region.polynomial(&l))
}

fn integral(v: Q) -> Result<i64> {
    rational::to_i64(&v).ok_or_else(|| Error::NonIntegral(rational::to_pq(&v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(p: &[i64]) -> GLWeight {
        GLWeight::new(p.to_vec()).unwrap()
    }

    fn so(p: &[i64]) -> SOWeight {
        SOWeight::odd(p.to_vec()).unwrap()
    }

    #[test]
    fn gl_branching_examples() {
        let b = branch_gl(&gl(&[1, 0, -1]));
        let parts: Vec<Vec<i64>> = b.iter().map(|w| w.parts().to_vec()).collect();
        assert_eq!(
            parts,
            vec![vec![1, 0], vec![1, -1], vec![0, 0], vec![0, -1]]
        );
        assert_eq!(branch_gl(&gl(&[0, 0, 0])), vec![gl(&[0, 0])]);
        assert_eq!(branch_gl(&gl(&[2, 0])), vec![gl(&[2]), gl(&[1]), gl(&[0])]);
    }

    #[test]
    fn weight_validation() {
        assert!(GLWeight::new(vec![0, 1]).is_err());
        assert!(SOWeight::odd(vec![1, -1]).is_err());
        assert!(SOWeight::odd(vec![1, 2]).is_err());
        assert!(SOWeight::new(vec![2, -2], SOKind::Even).is_ok());
        assert!(SOWeight::new(vec![1, -2], SOKind::Even).is_err());
    }

    #[test]
    fn gl_zero_dim_examples() {
        assert_eq!(zero_dim_gl(&gl(&[1, 0, -1])).unwrap(), 2);
        assert_eq!(zero_dim_gl(&gl(&[0, 0, 0, 0])).unwrap(), 1);
        assert_eq!(zero_dim_gl(&gl(&[2, 1, -1, -2])).unwrap(), 7);
        assert!(matches!(
            zero_dim_gl(&gl(&[1, 0, 0])),
            Err(Error::NonzeroTotal(_))
        ));
    }

    #[test]
    fn gl2_base_rule() {
        for a in -4..=4 {
            for b in -4..=a {
                let w = gl(&[a, b]);
                let expected = u64::from(a + b == 0);
                let got = if a + b == 0 {
                    zero_dim_gl(&w).unwrap()
                } else {
                    0
                };
                assert_eq!(got, expected);
                // Brute force: the GL2 representation has weights (a-k, b+k), k = 0..a-b.
                let brute = (0..=a - b).filter(|k| a - k == 0 && b + k == 0).count() as u64;
                assert_eq!(brute, expected);
            }
        }
    }

    #[test]
    fn gl3_closed_form_examples() {
        assert_eq!(gl3_closed_form(&gl(&[2, -1, -1])).unwrap(), 1);
        assert_eq!(gl3_closed_form(&gl(&[0, 0, 0])).unwrap(), 1);
        assert_eq!(gl3_closed_form(&gl(&[4, -2, -2])).unwrap(), 1);
        assert_eq!(zero_dim_gl(&gl(&[4, -2, -2])).unwrap(), 1);
        assert!(gl3_closed_form(&gl(&[1, 1, 1])).is_err());
        assert!(gl3_closed_form(&gl(&[1, -1])).is_err());
    }

    #[test]
    fn gl3_pieces_agree_on_wall() {
        for a in 0..10 {
            let l = [q(a), q(0), q(-a)];
            let (x, y) = gl3_pieces(&l);
            assert_eq!(x, y);
        }
    }

    #[test]
    fn so5_examples() {
        assert_eq!(so5_closed_form(&so(&[1, 1])).unwrap(), 2);
        assert_eq!(so5_closed_form(&so(&[1, 0])).unwrap(), 1);
        assert_eq!(so5_closed_form(&so(&[3, 1])).unwrap(), 5);
        assert_eq!(zero_dim_so5(&so(&[3, 1])).unwrap(), 5);
        assert_eq!(zero_dim_so5(&so(&[1, 1])).unwrap(), 2);
        assert_eq!(zero_dim_so5(&so(&[0, 0])).unwrap(), 1);
        assert_eq!(zero_dim_so5(&so(&[2, 0])).unwrap(), 2);
        assert!(zero_dim_so5(&so(&[1, 1, 0])).is_err());
    }

    #[test]
    fn gl4_regions() {
        assert_eq!(gl4_region(&gl(&[1, 1, -1, -1])).unwrap(), GL4Region::R3);
        assert_eq!(gl4_region(&gl(&[3, 1, -2, -2])).unwrap(), GL4Region::R3);
        assert_eq!(gl4_region(&gl(&[2, 2, -1, -3])).unwrap(), GL4Region::R4);
        assert_eq!(gl4_region(&gl(&[2, 1, 1, -4])).unwrap(), GL4Region::R2);
        assert_eq!(gl4_region(&gl(&[4, -1, -1, -2])).unwrap(), GL4Region::R1);
        // On λ2 = λ3 = 0 both R1 and R2 apply; the tie rule picks R1, and
        // both polynomials give 3 there.
        let w = gl(&[1, 0, 0, -1]);
        assert_eq!(gl4_region(&w).unwrap(), GL4Region::R1);
        let l = [q(1), q(0), q(0), q(-1)];
        assert_eq!(gl4_p1(&l), q(3));
        assert_eq!(gl4_p2(&l), q(3));
        assert!(gl4_region(&gl(&[1, 0, 0, 0])).is_err());
    }

    #[test]
    fn gl4_closed_form_examples() {
        assert_eq!(gl4_closed_form(&gl(&[1, 0, 0, -1])).unwrap(), 3);
        assert_eq!(gl4_closed_form(&gl(&[0, 0, 0, 0])).unwrap(), 1);
        assert_eq!(gl4_closed_form(&gl(&[2, 1, -1, -2])).unwrap(), 7);
    }
}
