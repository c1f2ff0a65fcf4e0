//! Root systems of simple Lie algebras with exact data.
//!
//! Simple roots follow Bourbaki numbering. A [`Weight`] is stored by its
//! coordinates over the simple roots; the fundamental-weight coordinates
//! `z_i = <λ, α_i^∨>` and, for the classical families and `G2`, the usual
//! orthonormal `ε` coordinates are derived on demand.
//!
//! The Cartan matrix convention is `cartan[i][j] = <α_i^∨, α_j>`, so the
//! fundamental coordinates of a weight with root coordinates `c` are
//! `z = cartan · c`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, frac, q, Q};

/// Default cap on the number of Weyl group elements enumerated.
pub const DEFAULT_WEYL_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::UnsupportedRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the Weyl group, from the classification.
    pub fn weyl_order(&self) -> u64 {
        let l = self.rank as u64;
        let fact = |n: u64| (1..=n).product::<u64>();
        match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u64 << l) * fact(l),
            Family::D => (1u64 << (l - 1)) * fact(l),
            Family::E => match l {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Number of positive roots, from the classification.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let bad = || Error::ParseType(s.to_string());
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| bad())?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight, stored by its coordinates over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    root: Vec<Q>,
}

impl Weight {
    pub fn from_root(root: Vec<Q>) -> Self {
        Weight { root }
    }

    pub fn from_root_ints(root: &[i64]) -> Self {
        Weight {
            root: rational::qvec(root),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            root: vec![Q::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.root.len()
    }

    pub fn root_coords(&self) -> &[Q] {
        &self.root
    }

    /// Root coordinates as integers, if the weight lies in the root lattice.
    pub fn root_ints(&self) -> Option<Vec<i64>> {
        rational::to_i64_vec(&self.root)
    }

    pub fn in_root_lattice(&self) -> bool {
        self.root.iter().all(rational::is_integral)
    }

    pub fn is_zero(&self) -> bool {
        self.root.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            root: self
                .root
                .iter()
                .zip(&other.root)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            root: self
                .root
                .iter()
                .zip(&other.root)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &Q) -> Weight {
        Weight {
            root: self.root.iter().map(|a| a * k).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rational::fmt_vec(&self.root))
    }
}

/// An element of the Weyl group, acting on root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// Integer matrix in the simple-root basis; column `j` is `w(α_j)`.
    pub matrix: Vec<Vec<i64>>,
    /// A reduced word `s_{i1} s_{i2} ...` reaching this element.
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn apply(&self, w: &Weight) -> Weight {
        let root = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(w.root_coords())
                    .fold(Q::zero(), |acc, (&m, c)| acc + q(m) * c)
            })
            .collect();
        Weight::from_root(root)
    }

    pub fn apply_ints(&self, v: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn rational_matrix(&self) -> Matrix {
        linalg::from_i64(&self.matrix)
    }
}

/// Exact root datum of a simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleType,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Matrix,
    gram: Matrix,
    sym: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    fundamental_weights: Vec<Weight>,
    dual_basis_x: Vec<Vec<Q>>,
    epsilon: Option<Matrix>,
}

impl RootSystem {
    pub fn new(ty: SimpleType) -> Self {
        let l = ty.rank();
        let epsilon = epsilon_model(ty);
        let gram = match &epsilon {
            Some(e) => linalg::mul(&linalg::transpose(e), e),
            None => exceptional_gram(ty),
        };
        let cartan: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let a = q(2) * &gram[i][j] / &gram[i][i];
                        rational::to_i64(&a).expect("Cartan entries are integers")
                    })
                    .collect()
            })
            .collect();
        let cartan_inv =
            linalg::inverse(&linalg::from_i64(&cartan)).expect("Cartan matrix is invertible");

        // (α_i, α_i)/2 scaled to coprime integers.
        let halves: Vec<Q> = (0..l).map(|i| &gram[i][i] / q(2)).collect();
        let mut den = num_bigint::BigInt::one();
        for h in &halves {
            den = den.lcm(h.denom());
        }
        let scaled: Vec<i64> = halves
            .iter()
            .map(|h| rational::to_i64(&(h * Q::from_integer(den.clone()))).unwrap())
            .collect();
        let g = scaled.iter().fold(0, |g, &x| rational::gcd_i64(g, x));
        let sym = scaled.iter().map(|x| x / g).collect();

        let positive_roots = generate_positive_roots(&cartan);
        let fundamental_weights = (0..l)
            .map(|i| Weight::from_root((0..l).map(|k| cartan_inv[k][i].clone()).collect()))
            .collect();
        let dual_basis_x = (0..l).map(|i| cartan_inv[i].clone()).collect();

        RootSystem {
            ty,
            cartan,
            cartan_inv,
            gram,
            sym,
            positive_roots,
            fundamental_weights,
            dual_basis_x,
            epsilon,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// W-invariant inner product on the simple-root basis.
    pub fn invariant_form(&self) -> &Matrix {
        &self.gram
    }

    /// Integers proportional to `(α_i, α_i) / 2`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.rank())
            .map(|i| {
                let mut v = vec![0; self.rank()];
                v[i] = 1;
                Weight::from_root_ints(&v)
            })
            .collect()
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    /// Positive roots in root coordinates, sorted by height then lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_root_weights(&self) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .map(|r| Weight::from_root_ints(r))
            .collect()
    }

    pub fn highest_root(&self) -> Weight {
        Weight::from_root_ints(self.positive_roots.last().unwrap())
    }

    /// The basis `x_1..x_ℓ` of the Cartan subalgebra dual to the simple roots,
    /// each expressed over the simple coroots.
    pub fn dual_basis_x(&self) -> &[Vec<Q>] {
        &self.dual_basis_x
    }

    /// Dimension of the full flag variety, `|R⁺|`.
    pub fn flag_dimension(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn has_epsilon_coords(&self) -> bool {
        self.epsilon.is_some()
    }

    /// Matrix whose columns are the simple roots in `ε` coordinates.
    pub fn epsilon_matrix(&self) -> Option<&Matrix> {
        self.epsilon.as_ref()
    }

    pub fn to_fundamental(&self, w: &Weight) -> Vec<Q> {
        self.cartan
            .iter()
            .map(|row| {
                row.iter()
                    .zip(w.root_coords())
                    .fold(Q::zero(), |acc, (&a, c)| acc + q(a) * c)
            })
            .collect()
    }

    pub fn from_fundamental(&self, z: &[Q]) -> Weight {
        Weight::from_root(linalg::mul_vec(&self.cartan_inv, z))
    }

    pub fn from_fundamental_ints(&self, z: &[i64]) -> Weight {
        self.from_fundamental(&rational::qvec(z))
    }

    /// Fundamental coordinates of an integral weight.
    pub fn fundamental_ints(&self, w: &Weight) -> Option<Vec<i64>> {
        rational::to_i64_vec(&self.to_fundamental(w))
    }

    pub fn to_epsilon(&self, w: &Weight) -> Result<Vec<Q>> {
        let e = self
            .epsilon
            .as_ref()
            .ok_or_else(|| Error::NoEpsilonModel(self.ty.to_string()))?;
        Ok(linalg::mul_vec(e, w.root_coords()))
    }

    pub fn from_epsilon(&self, eps: &[Q]) -> Result<Weight> {
        let e = self
            .epsilon
            .as_ref()
            .ok_or_else(|| Error::NoEpsilonModel(self.ty.to_string()))?;
        if eps.len() != e.len() {
            return Err(Error::RankMismatch {
                expected: e.len(),
                got: eps.len(),
            });
        }
        match linalg::solve(e, eps) {
            linalg::Solution::Solved { x, .. } => Ok(Weight::from_root(x)),
            linalg::Solution::Inconsistent => Err(Error::NotInSpan(rational::fmt_vec(eps))),
        }
    }

    pub fn from_epsilon_ints(&self, eps: &[i64]) -> Result<Weight> {
        self.from_epsilon(&rational::qvec(eps))
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.to_fundamental(w).iter().all(|z| !z.is_negative())
    }

    pub fn is_integral(&self, w: &Weight) -> bool {
        self.to_fundamental(w).iter().all(rational::is_integral)
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Q {
        let gb = linalg::mul_vec(&self.gram, b.root_coords());
        rational::dot(a.root_coords(), &gb)
    }

    /// `λ(x)` for `x` in the Cartan subalgebra given over the simple coroots.
    pub fn pairing(&self, w: &Weight, x: &[Q]) -> Result<Q> {
        self.check_rank(w)?;
        if x.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: x.len(),
            });
        }
        Ok(rational::dot(&self.to_fundamental(w), x))
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let zi = self.to_fundamental(w)[i].clone();
        let mut root = w.root_coords().to_vec();
        root[i] -= zi;
        Weight::from_root(root)
    }

    pub fn rho(&self) -> Weight {
        self.from_fundamental_ints(&vec![1; self.rank()])
    }

    /// Reflects integer fundamental coordinates into the dominant chamber.
    pub fn dominate_z(&self, z: &mut [i64]) {
        let l = self.rank();
        loop {
            let Some(i) = (0..l).find(|&i| z[i] < 0) else {
                return;
            };
            let zi = z[i];
            for (j, zj) in z.iter_mut().enumerate() {
                *zj -= zi * self.cartan[j][i];
            }
        }
    }

    /// Unique dominant element of the Weyl orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        loop {
            let z = self.to_fundamental(&cur);
            match z.iter().position(|x| x.is_negative()) {
                Some(i) => cur = self.reflect(i, &cur),
                None => return cur,
            }
        }
    }

    /// Integer matrix of `s_i` on root coordinates.
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let l = self.rank();
        let mut m = vec![vec![0; l]; l];
        for (j, row) in m.iter_mut().enumerate() {
            row[j] = 1;
        }
        for (x, c) in m[i].iter_mut().zip(&self.cartan[i]) {
            *x -= c;
        }
        m
    }

    pub fn weyl_group(&self) -> Result<Vec<WeylElement>> {
        self.weyl_group_capped(DEFAULT_WEYL_CAP)
    }

    /// All Weyl group elements by breadth-first closure over simple reflections.
    pub fn weyl_group_capped(&self, cap: u64) -> Result<Vec<WeylElement>> {
        let order = self.ty.weyl_order();
        if order > cap {
            return Err(Error::WeylCapExceeded {
                ty: self.ty.to_string(),
                order,
                cap,
            });
        }
        let l = self.rank();
        let gens: Vec<Vec<Vec<i64>>> = (0..l).map(|i| self.simple_reflection_matrix(i)).collect();
        let id = WeylElement {
            matrix: (0..l)
                .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
                .collect(),
            word: vec![],
        };
        let mut seen: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
        seen.insert(id.matrix.clone(), 0);
        let mut elements = vec![id];
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            head += 1;
            for (i, g) in gens.iter().enumerate() {
                let m = int_mat_mul(g, &cur.matrix);
                if !seen.contains_key(&m) {
                    if elements.len() as u64 >= cap {
                        return Err(Error::WeylCapExceeded {
                            ty: self.ty.to_string(),
                            order,
                            cap,
                        });
                    }
                    let mut word = vec![i];
                    word.extend_from_slice(&cur.word);
                    seen.insert(m.clone(), elements.len());
                    elements.push(WeylElement { matrix: m, word });
                }
            }
        }
        Ok(elements)
    }

    /// Orbit of `w` under the Weyl group, sorted.
    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank() {
                let r = self.reflect(i, &cur);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Orbit size of an integral weight given by fundamental coordinates.
    pub fn orbit_size_z(&self, z: &[i64]) -> u64 {
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(z.to_vec());
        queue.push_back(z.to_vec());
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank() {
                let zi = cur[i];
                if zi == 0 {
                    continue;
                }
                let next: Vec<i64> = cur
                    .iter()
                    .enumerate()
                    .map(|(j, &zj)| zj - zi * self.cartan[j][i])
                    .collect();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen.len() as u64
    }

    /// Roots (positive and negative) in root coordinates.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut v = self.positive_roots.clone();
        v.extend(
            self.positive_roots
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        v
    }

    /// `(μ, α)` scaled by a fixed positive constant, with `μ` in fundamental
    /// coordinates and `α` in root coordinates.
    pub fn scaled_pairing_z_root(&self, z: &[i64], root: &[i64]) -> i64 {
        z.iter()
            .zip(root)
            .zip(&self.sym)
            .map(|((a, b), d)| a * b * d)
            .sum()
    }
}

fn int_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n)
        .map(|k| if k == i { Q::one() } else { Q::zero() })
        .collect()
}

fn epsilon_model(ty: SimpleType) -> Option<Matrix> {
    let l = ty.rank();
    let cols: Vec<Vec<Q>> = match ty.family() {
        Family::A => (0..l)
            .map(|i| {
                let mut v = unit(l + 1, i);
                v[i + 1] = q(-1);
                v
            })
            .collect(),
        Family::B | Family::C | Family::D => {
            let mut cols: Vec<Vec<Q>> = (0..l - 1)
                .map(|i| {
                    let mut v = unit(l, i);
                    v[i + 1] = q(-1);
                    v
                })
                .collect();
            let last = match ty.family() {
                Family::B => unit(l, l - 1),
                Family::C => {
                    let mut v = unit(l, l - 1);
                    v[l - 1] = q(2);
                    v
                }
                _ => {
                    let mut v = unit(l, l - 1);
                    v[l - 2] = q(1);
                    v
                }
            };
            cols.push(last);
            cols
        }
        Family::G => vec![rational::qvec(&[1, -1, 0]), rational::qvec(&[-2, 1, 1])],
        Family::E | Family::F => return None,
    };
    let n = cols[0].len();
    Some(
        (0..n)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect(),
    )
}

fn exceptional_gram(ty: SimpleType) -> Matrix {
    let l = ty.rank();
    match ty.family() {
        Family::F => {
            let mut g = vec![vec![Q::zero(); 4]; 4];
            for (i, len) in [2, 2, 1, 1].into_iter().enumerate() {
                g[i][i] = q(len);
            }
            for (i, j, v) in [(0, 1, q(-1)), (1, 2, q(-1)), (2, 3, frac(-1, 2))] {
                g[i][j] = v.clone();
                g[j][i] = v;
            }
            g
        }
        Family::E => {
            let mut g = vec![vec![Q::zero(); l]; l];
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = q(2);
            }
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            edges.extend((3..l - 1).map(|i| (i, i + 1)));
            for (i, j) in edges {
                g[i][j] = q(-1);
                g[j][i] = q(-1);
            }
            g
        }
        _ => unreachable!("classical types have an epsilon model"),
    }
}

/// Positive roots by root strings: `β + α_i` is a root iff `p - <β, α_i^∨> > 0`
/// where `p` is the largest `k` with `β - kα_i` a root.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut all: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|k| i64::from(k == i)).collect())
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..l {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..l).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn parse_and_rank_constraints() {
        assert_eq!("A3".parse::<SimpleType>().unwrap().to_string(), "A3");
        assert_eq!("g2".parse::<SimpleType>().unwrap().to_string(), "G2");
        for bad in ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "X2", "A"] {
            assert!(bad.parse::<SimpleType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn a2_cartan() {
        assert_eq!(rs("A2").cartan(), &[vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn bourbaki_lengths() {
        // B2: α1 long; G2: α1 short.
        assert_eq!(rs("B2").cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs("C2").cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(rs("G2").cartan(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(rs("G2").highest_root().root_ints().unwrap(), vec![3, 2]);
        assert_eq!(
            rs("F4").highest_root().root_ints().unwrap(),
            vec![2, 3, 4, 2]
        );
        assert_eq!(
            rs("E8").highest_root().root_ints().unwrap(),
            vec![2, 3, 4, 6, 5, 4, 3, 2]
        );
    }

    #[test]
    fn positive_root_counts() {
        for s in [
            "A1", "A2", "A3", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "E6", "E7", "E8", "F4",
            "G2",
        ] {
            let r = rs(s);
            assert_eq!(
                r.positive_roots().len(),
                r.simple_type().positive_root_count(),
                "{s}"
            );
            assert!(r.positive_roots().iter().all(|v| v.iter().all(|&c| c >= 0)));
        }
    }

    #[test]
    fn weyl_group_orders() {
        for (s, n) in [("A2", 6), ("B2", 8), ("A3", 24), ("G2", 12), ("F4", 1152)] {
            let w = rs(s).weyl_group().unwrap();
            assert_eq!(w.len(), n, "{s}");
            assert!(w[0].is_identity());
        }
    }

    #[test]
    fn weyl_cap_excludes_e7() {
        assert!(matches!(
            rs("E7").weyl_group(),
            Err(Error::WeylCapExceeded { .. })
        ));
        assert!(matches!(
            rs("A3").weyl_group_capped(10),
            Err(Error::WeylCapExceeded { .. })
        ));
    }

    #[test]
    fn orbits() {
        let a2 = rs("A2");
        assert_eq!(a2.weyl_orbit(&a2.fundamental_weights()[0]).len(), 3);
        assert_eq!(a2.weyl_orbit(&Weight::zero(2)).len(), 1);
        let a3 = rs("A3");
        assert_eq!(a3.weyl_orbit(&a3.fundamental_weights()[1]).len(), 6);
        assert_eq!(a3.orbit_size_z(&[0, 1, 0]), 6);
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        let alpha1 = Weight::from_root_ints(&[1, 0]);
        assert_eq!(a2.pairing(&alpha1, &a2.dual_basis_x()[0]).unwrap(), q(1));
        assert_eq!(a2.pairing(&alpha1, &a2.dual_basis_x()[1]).unwrap(), q(0));
        assert_eq!(
            a2.pairing(&Weight::zero(2), &a2.dual_basis_x()[1]).unwrap(),
            q(0)
        );
        // ω1 + ω2 = α1 + α2 in A2, so its x1 pairing is its first root coordinate.
        let rho = a2.rho();
        assert_eq!(a2.pairing(&rho, &a2.dual_basis_x()[0]).unwrap(), q(1));
        assert!(a2.pairing(&rho, &[q(1)]).is_err());
    }

    #[test]
    fn epsilon_round_trip() {
        let a3 = rs("A3");
        let w = a3.from_epsilon_ints(&[2, 1, -1, -2]).unwrap();
        assert_eq!(w.root_ints().unwrap(), vec![2, 3, 2]);
        assert_eq!(a3.to_epsilon(&w).unwrap(), rational::qvec(&[2, 1, -1, -2]));
        assert!(a3.from_epsilon_ints(&[1, 0, 0, 0]).is_err());
        let b2 = rs("B2");
        assert_eq!(b2.from_epsilon_ints(&[1, 1]).unwrap(), b2.highest_root());
        assert!(rs("F4").to_epsilon(&Weight::zero(4)).is_err());
    }
}
