//! Multivariate polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{self, Q};

/// Arithmetic shared by `Q` and [`ExactPolynomial`], so that closed-form
/// formulas can be written once and evaluated either numerically or
/// symbolically.
pub trait Ring:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// The constant `c` in the same ring as `self`.
    fn constant_like(&self, c: Q) -> Self;
}

impl Ring for Q {
    fn constant_like(&self, c: Q) -> Self {
        c
    }
}

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, Q>,
}

impl ExactPolynomial {
    pub fn zero(nvars: usize) -> Self {
        ExactPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Q::one());
        p
    }

    /// `Σ coeffs[i] z_i + c`.
    pub fn linear(coeffs: &[Q], c: Q) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, c);
        for (i, a) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, a.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms, ordered by exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coefficient(&vec![0; self.nvars])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn eval(&self, z: &[Q]) -> Q {
        assert_eq!(z.len(), self.nvars);
        self.terms
            .iter()
            .fold(Q::zero(), |acc, (e, c)| acc + c * monomial_value(e, z))
    }

    pub fn eval_ints(&self, z: &[i64]) -> Q {
        self.eval(&rational::qvec(z))
    }

    pub fn scale(&self, k: &Q) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| (e.clone(), c * k)),
        )
    }
}

pub fn monomial_value(e: &[u32], z: &[Q]) -> Q {
    e.iter().zip(z).fold(Q::one(), |acc, (&k, x)| {
        acc * num_traits::pow(x.clone(), k as usize)
    })
}

impl Add for ExactPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for ExactPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-Q::one())
    }
}

impl Sub for ExactPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ExactPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Ring for ExactPolynomial {
    fn constant_like(&self, c: Q) -> Self {
        Self::constant(self.nvars, c)
    }
}

impl ExactPolynomial {
    /// Renders the polynomial in graded lexicographic order with the given
    /// variable names.
    pub fn format_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| grlex_cmp(a.0, b.0));
        let parts: Vec<String> = ordered
            .into_iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            names[i].to_string()
                        } else {
                            format!("{}^{}", names[i], k)
                        }
                    })
                    .collect();
                let coeff = if rational::is_integral(c) {
                    c.numer().to_string()
                } else {
                    rational::to_pq(c)
                };
                if vars.is_empty() {
                    coeff
                } else {
                    format!("{}*{}", coeff, vars.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("z{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.format_with(&refs))
    }
}

/// Graded lexicographic order: total degree first, then the larger
/// exponent on the earliest variable comes first.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// Every exponent vector in `nvars` variables of total degree at most
/// `degree`, in graded lexicographic order.
pub fn monomial_basis(nvars: usize, degree: u32) -> Vec<Exponents> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, degree, &mut vec![0; nvars], &mut out);
    out.sort_by(|a, b| grlex_cmp(a, b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn basis_counts() {
        assert_eq!(
            monomial_basis(2, 1),
            vec![vec![0, 0], vec![1, 0], vec![0, 1]]
        );
        assert_eq!(monomial_basis(2, 2).len(), 6);
        assert_eq!(monomial_basis(3, 3).len(), 20);
        assert_eq!(monomial_basis(2, 4).len(), 15);
        assert_eq!(monomial_basis(4, 0), vec![vec![0; 4]]);
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let x = ExactPolynomial::var(2, 0);
        let y = ExactPolynomial::var(2, 1);
        let one = ExactPolynomial::constant(2, q(1));
        let p = (x.clone() + one.clone()) * (x.clone() - one.clone());
        assert_eq!(p.eval(&[q(3), q(0)]), q(8));
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.constant_term(), q(-1));
        let zero = (x.clone() * y.clone()) - (y * x);
        assert!(zero.is_zero());
        assert_eq!(zero.total_degree(), None);
        let h = ExactPolynomial::linear(&[frac(1, 2), q(0)], q(1));
        assert_eq!(h.to_string(), "1 + 1/2*z1");
    }
}
