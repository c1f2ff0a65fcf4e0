//! Chambers of the open dominant cone cut out by the hyperplanes
//! `λ(w·x_i) = 0`, where `x_i` is the basis of the Cartan subalgebra dual to
//! the simple roots.
//!
//! Everything is done in fundamental coordinates `z`, where a form is an
//! integer normal vector `n` and the hyperplane is `n·z = 0`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, q, Q};
use crate::rootsys::{RootSystem, SimpleType, Weight};

pub const DEFAULT_RANK_CAP: usize = 4;
/// Environment variable overriding [`DEFAULT_RANK_CAP`].
pub const RANK_CAP_ENV: &str = "ZEROWEIGHT_RANK_CAP";

/// Rank cap in effect, honouring [`RANK_CAP_ENV`].
pub fn rank_cap() -> usize {
    std::env::var(RANK_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_RANK_CAP)
}

/// One hyperplane, with a Weyl word and index realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallForm {
    pub normal: Vec<i64>,
    /// `(word, i)` such that the form is `λ ↦ λ(w·x_i)` with `w = s_{word[0]} s_{word[1]} ...`.
    pub orbit_tag: (Vec<usize>, usize),
}

impl WallForm {
    pub fn eval(&self, z: &[Q]) -> Q {
        self.normal
            .iter()
            .zip(z)
            .fold(Q::zero(), |acc, (&n, x)| acc + q(n) * x)
    }

    /// The same hyperplane as a primitive integer form in the `ε`
    /// coordinates `λ_1, λ_2, ...`, first nonzero entry positive. When the
    /// model has one coordinate more than the rank, the coefficient of `λ_1`
    /// is fixed to zero.
    pub fn epsilon_form(&self, rs: &RootSystem) -> Option<Vec<i64>> {
        let e = rs.epsilon_matrix()?;
        let l = rs.rank();
        let m = e.len();
        // Solve Eᵀ y = cartanᵀ n.
        let mut a = linalg::transpose(e);
        let mut b: Vec<Q> = (0..l)
            .map(|j| {
                (0..l).fold(Q::zero(), |acc, i| {
                    acc + q(rs.cartan()[i][j] * self.normal[i])
                })
            })
            .collect();
        if m > l {
            let mut row = vec![Q::zero(); m];
            row[0] = Q::one();
            a.push(row);
            b.push(Q::zero());
        }
        match linalg::solve(&a, &b) {
            linalg::Solution::Solved { x, .. } => {
                let mut y = rational::primitive_ray(&x);
                if y.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0) {
                    y.iter_mut().for_each(|v| *v = -*v);
                }
                Some(y)
            }
            linalg::Solution::Inconsistent => None,
        }
    }
}

/// `λ2 + λ3`-style rendering of an integer form in `ε` coordinates.
pub fn format_epsilon_form(y: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in y.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("λ{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    /// Entries `+1`/`-1` over the atlas walls.
    pub signs: Vec<i8>,
    /// Integral point of the open chamber, in fundamental coordinates.
    pub witness: Vec<Q>,
}

impl Chamber {
    pub fn id(&self) -> String {
        sign_string(&self.signs)
    }
}

pub fn sign_string(signs: &[i8]) -> String {
    signs
        .iter()
        .map(|&s| match s {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct ChamberAtlas {
    ty: SimpleType,
    walls: Vec<WallForm>,
    chambers: Vec<Chamber>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// Signs of the weight on every wall, `0` meaning on the wall.
    pub signs: Vec<i8>,
    /// Chamber whose open set contains the weight.
    pub interior: Option<usize>,
    /// Walls containing the weight.
    pub walls: Vec<usize>,
    /// Chambers whose closure contains the weight.
    pub closure: Vec<usize>,
}

impl ChamberAtlas {
    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn walls(&self) -> &[WallForm] {
        &self.walls
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn chamber_by_id(&self, id: &str) -> Option<usize> {
        self.chambers.iter().position(|c| c.id() == id)
    }

    pub fn signs_z(&self, z: &[Q]) -> Vec<i8> {
        self.walls
            .iter()
            .map(|w| rational::sign(&w.eval(z)))
            .collect()
    }

    /// Whether the dominant point `z` lies in the closure of chamber `k`.
    pub fn in_closure_z(&self, k: usize, z: &[Q]) -> bool {
        let s = self.signs_z(z);
        s.iter()
            .zip(&self.chambers[k].signs)
            .all(|(&a, &b)| a == 0 || a == b)
    }

    /// Whether `z` lies in the open chamber `k`.
    pub fn in_interior_z(&self, k: usize, z: &[Q]) -> bool {
        z.iter().all(|x| x.is_positive()) && self.signs_z(z) == self.chambers[k].signs
    }

    pub fn classify_z(&self, z: &[Q]) -> Result<Classification> {
        if z.iter().any(|x| x.is_negative()) {
            return Err(Error::NotDominant(rational::fmt_vec(z)));
        }
        let signs = self.signs_z(z);
        let walls = (0..signs.len()).filter(|&j| signs[j] == 0).collect();
        let closure: Vec<usize> = (0..self.chambers.len())
            .filter(|&k| {
                signs
                    .iter()
                    .zip(&self.chambers[k].signs)
                    .all(|(&a, &b)| a == 0 || a == b)
            })
            .collect();
        let interior = if z.iter().all(|x| x.is_positive()) && signs.iter().all(|&s| s != 0) {
            closure.first().copied()
        } else {
            None
        };
        Ok(Classification {
            signs,
            interior,
            walls,
            closure,
        })
    }

    pub fn classify(&self, rs: &RootSystem, w: &Weight) -> Result<Classification> {
        rs.check_rank(w)?;
        self.classify_z(&rs.to_fundamental(w))
    }

    pub fn to_json(&self) -> Value {
        let walls: Vec<Value> = self
            .walls
            .iter()
            .map(|w| json!({"normal": w.normal, "word": w.orbit_tag.0, "index": w.orbit_tag.1}))
            .collect();
        let chambers: Vec<Value> = self
            .chambers
            .iter()
            .map(|c| {
                json!({
                    "signs": c.id(),
                    "witness": c.witness.iter().map(rational::to_pq).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "type": self.ty.to_string(),
            "rank": self.rank(),
            "walls": walls,
            "chambers": chambers,
        })
    }
}

/// Forms `λ ↦ λ(w·x_i)` meeting the open dominant cone, sorted by normal.
pub fn interior_wall_forms(rs: &RootSystem) -> Result<Vec<WallForm>> {
    let l = rs.rank();
    let group = rs.weyl_group()?;
    // Root coordinates of a weight as functionals of z.
    let cinv: Vec<Vec<Q>> = (0..l)
        .map(|i| {
            let e: Vec<Q> = (0..l)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect();
            rs.from_fundamental(&e).root_coords().to_vec()
        })
        .collect();
    let cinv = linalg::transpose(&cinv);
    let mut found: BTreeMap<Vec<i64>, (Vec<usize>, usize)> = BTreeMap::new();
    for w in &group {
        // λ(w·x_i) is the i-th root coordinate of w⁻¹λ.
        let m = linalg::mul(&w.rational_matrix(), &cinv);
        let inverse_word: Vec<usize> = w.word.iter().rev().copied().collect();
        for (i, row) in m.iter().enumerate() {
            let mut n = rational::primitive_ray(row);
            if let Some(&first) = n.iter().find(|&&x| x != 0) {
                if first < 0 {
                    n.iter_mut().for_each(|x| *x = -*x);
                }
            }
            found.entry(n).or_insert_with(|| (inverse_word.clone(), i));
        }
    }
    let mut out = Vec::new();
    for (normal, tag) in found {
        let n = rational::qvec(&normal);
        let mut cons: Vec<Constraint> = (0..l)
            .map(|i| Constraint::positive_coordinate(l, i))
            .collect();
        cons.push(Constraint::new(n.clone(), Q::zero(), false));
        cons.push(Constraint::new(
            n.iter().map(|x| -x).collect(),
            Q::zero(),
            false,
        ));
        if wall_feasibility(&cons, l).is_some() {
            out.push(WallForm {
                normal,
                orbit_tag: tag,
            });
        }
    }
    Ok(out)
}

pub fn enumerate_chambers(rs: &RootSystem) -> Result<ChamberAtlas> {
    enumerate_chambers_capped(rs, rank_cap())
}

/// Breadth-first search over single-wall flips, each sign system tested
/// for exact feasibility.
pub fn enumerate_chambers_capped(rs: &RootSystem, cap: usize) -> Result<ChamberAtlas> {
    let ty = rs.simple_type();
    if ty.rank() > cap {
        return Err(Error::RankCapExceeded {
            ty: ty.to_string(),
            rank: ty.rank(),
            cap,
        });
    }
    let l = ty.rank();
    let walls = interior_wall_forms(rs)?;
    let seed = generic_interior_point(&walls, l);
    let seed_signs: Vec<i8> = walls
        .iter()
        .map(|w| rational::sign(&w.eval(&seed)))
        .collect();

    let mut seen: BTreeMap<Vec<i8>, Vec<Q>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(seed_signs.clone(), integral_witness(&seed));
    queue.push_back(seed_signs);
    while let Some(signs) = queue.pop_front() {
        for j in 0..walls.len() {
            let mut flipped = signs.clone();
            flipped[j] = -flipped[j];
            if seen.contains_key(&flipped) {
                continue;
            }
            if let Some(wit) = wall_feasibility(&sign_system(&walls, &flipped, l), l) {
                seen.insert(flipped.clone(), integral_witness(&wit));
                queue.push_back(flipped);
            }
        }
    }
    let mut chambers: Vec<Chamber> = seen
        .into_iter()
        .map(|(signs, witness)| Chamber { signs, witness })
        .collect();
    chambers.sort_by_key(|c| c.id());
    Ok(ChamberAtlas {
        ty,
        walls,
        chambers,
    })
}

fn sign_system(walls: &[WallForm], signs: &[i8], l: usize) -> Vec<Constraint> {
    let mut cons: Vec<Constraint> = (0..l)
        .map(|i| Constraint::positive_coordinate(l, i))
        .collect();
    for (w, &s) in walls.iter().zip(signs) {
        cons.push(Constraint::new(
            w.normal.iter().map(|&n| q(n * i64::from(s))).collect(),
            Q::zero(),
            true,
        ));
    }
    cons
}

fn generic_interior_point(walls: &[WallForm], l: usize) -> Vec<Q> {
    for t in 2i64.. {
        let z: Vec<Q> = (0..l).map(|i| q(1 + t.pow(i as u32))).collect();
        if walls.iter().all(|w| !w.eval(&z).is_zero()) {
            return z;
        }
    }
    unreachable!()
}

fn integral_witness(z: &[Q]) -> Vec<Q> {
    rational::qvec(&rational::primitive_ray(z))
}

/// `coeffs·z + constant > 0`, or `≥ 0` when not strict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub constant: Q,
    pub strict: bool,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, constant: Q, strict: bool) -> Self {
        Constraint {
            coeffs,
            constant,
            strict,
        }
    }

    pub fn positive_coordinate(n: usize, i: usize) -> Self {
        let mut c = vec![Q::zero(); n];
        c[i] = Q::one();
        Constraint::new(c, Q::zero(), true)
    }

    fn is_satisfied(&self, z: &[Q]) -> bool {
        let v = rational::dot(&self.coeffs, z) + &self.constant;
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }

    /// Scaled so that the last nonzero coefficient has absolute value 1.
    fn normalized(mut self) -> Self {
        let pivot = self
            .coeffs
            .iter()
            .rev()
            .find(|x| !x.is_zero())
            .cloned()
            .or_else(|| {
                if self.constant.is_zero() {
                    None
                } else {
                    Some(self.constant.clone())
                }
            });
        if let Some(p) = pivot {
            let s = p.abs().recip();
            self.coeffs.iter_mut().for_each(|x| *x *= &s);
            self.constant *= &s;
        }
        self
    }
}

/// Exact Fourier–Motzkin elimination. Returns a point satisfying every
/// constraint, or `None` if the system is infeasible. Homogeneous systems
/// get a primitive integer witness.
pub fn wall_feasibility(constraints: &[Constraint], nvars: usize) -> Option<Vec<Q>> {
    // stages[k] holds the system in the variables 0..=k.
    let mut stages: Vec<Vec<Constraint>> = vec![Vec::new(); nvars];
    let mut cur: Vec<Constraint> = dedup(
        constraints
            .iter()
            .cloned()
            .map(Constraint::normalized)
            .collect(),
    );
    for k in (0..nvars).rev() {
        stages[k] = cur.clone();
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in cur {
            if c.coeffs[k].is_positive() {
                pos.push(c);
            } else if c.coeffs[k].is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for n in &neg {
                let a = -&n.coeffs[k];
                let b = p.coeffs[k].clone();
                let coeffs: Vec<Q> = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(x, y)| &a * x + &b * y)
                    .collect();
                let constant = &a * &p.constant + &b * &n.constant;
                rest.push(Constraint::new(coeffs, constant, p.strict || n.strict).normalized());
            }
        }
        cur = dedup(rest);
    }
    let zeros = vec![Q::zero(); nvars];
    if !cur.iter().all(|c| c.is_satisfied(&zeros)) {
        return None;
    }

    let mut z = vec![Q::zero(); nvars];
    for k in 0..nvars {
        let mut lo: Option<(Q, bool)> = None;
        let mut hi: Option<(Q, bool)> = None;
        for c in &stages[k] {
            let a = &c.coeffs[k];
            if a.is_zero() {
                continue;
            }
            let rest: Q = (0..k).fold(c.constant.clone(), |acc, j| acc + &c.coeffs[j] * &z[j]);
            let bound = -rest / a;
            if a.is_positive() {
                if lo
                    .as_ref()
                    .is_none_or(|(b, s)| bound > *b || (bound == *b && c.strict && !s))
                {
                    lo = Some((bound, c.strict));
                }
            } else if hi
                .as_ref()
                .is_none_or(|(b, s)| bound < *b || (bound == *b && c.strict && !s))
            {
                hi = Some((bound, c.strict));
            }
        }
        z[k] = match (lo, hi) {
            (Some((a, _)), Some((b, _))) => (a + b) / q(2),
            (Some((a, _)), None) => a.floor() + Q::one(),
            (None, Some((b, _))) => b.ceil() - Q::one(),
            (None, None) => Q::zero(),
        };
    }
    debug_assert!(constraints.iter().all(|c| c.is_satisfied(&z)));
    if constraints.iter().all(|c| c.constant.is_zero()) && z.iter().any(|x| !x.is_zero()) {
        z = integral_witness(&z);
    }
    Some(z)
}

fn dedup(v: Vec<Constraint>) -> Vec<Constraint> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for c in v {
        let key = (c.coeffs.clone(), c.constant.clone(), c.strict);
        if seen.insert(key) {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cons(coeffs: &[i64], strict: bool) -> Constraint {
        Constraint::new(rational::qvec(coeffs), Q::zero(), strict)
    }

    fn atlas(t: &str) -> (RootSystem, ChamberAtlas) {
        let rs = RootSystem::new(t.parse().unwrap());
        let a = enumerate_chambers(&rs).unwrap();
        (rs, a)
    }

    #[test]
    fn feasibility_examples() {
        let sys = [
            cons(&[1, 0], true),
            cons(&[0, 1], true),
            cons(&[1, -1], true),
        ];
        assert_eq!(wall_feasibility(&sys, 2), Some(rational::qvec(&[2, 1])));
        assert_eq!(
            wall_feasibility(&[cons(&[1], true), cons(&[-1], true)], 1),
            None
        );
        assert_eq!(
            wall_feasibility(&[cons(&[1], false), cons(&[-1], false)], 1),
            Some(vec![q(0)])
        );
        let inhomogeneous = [
            Constraint::new(vec![q(1)], q(-3), false),
            Constraint::new(vec![q(-1)], q(3), false),
        ];
        assert_eq!(wall_feasibility(&inhomogeneous, 1), Some(vec![q(3)]));
    }

    #[test]
    fn wall_counts() {
        for (t, w, c) in [
            ("A1", 0, 1),
            ("A2", 1, 2),
            ("B2", 0, 1),
            ("C2", 0, 1),
            ("G2", 0, 1),
            ("A3", 3, 4),
        ] {
            let (_, a) = atlas(t);
            assert_eq!(a.walls().len(), w, "{t}");
            assert_eq!(a.chambers().len(), c, "{t}");
        }
    }

    #[test]
    fn a3_walls_in_fundamental_coordinates() {
        let (_, a) = atlas("A3");
        let normals: Vec<Vec<i64>> = a.walls().iter().map(|w| w.normal.clone()).collect();
        assert_eq!(
            normals,
            vec![vec![1, -2, -1], vec![1, 0, -1], vec![1, 2, -1]]
        );
    }

    #[test]
    fn witnesses_realize_their_signs() {
        for t in ["A2", "A3", "B3", "C3"] {
            let (_, a) = atlas(t);
            for (k, c) in a.chambers().iter().enumerate() {
                assert!(a.in_interior_z(k, &c.witness), "{t} {}", c.id());
                assert!(c.witness.iter().all(rational::is_integral));
            }
        }
    }

    #[test]
    fn origin_is_in_every_closure() {
        let (rs, a) = atlas("A3");
        let cl = a.classify(&rs, &Weight::zero(3)).unwrap();
        assert_eq!(cl.interior, None);
        assert_eq!(cl.closure.len(), 4);
        assert_eq!(cl.walls.len(), 3);
        let theta = rs.from_epsilon_ints(&[1, 0, 0, -1]).unwrap();
        assert_eq!(a.classify(&rs, &theta).unwrap().closure.len(), 4);
    }

    #[test]
    fn regular_point_is_interior() {
        let (rs, a) = atlas("A2");
        let w = rs.from_epsilon_ints(&[3, 1, -4]).unwrap();
        let cl = a.classify(&rs, &w).unwrap();
        assert!(cl.interior.is_some());
        assert_eq!(cl.closure, vec![cl.interior.unwrap()]);
        let neg = rs.from_fundamental_ints(&[-1, 2]);
        assert!(matches!(a.classify(&rs, &neg), Err(Error::NotDominant(_))));
    }

    #[test]
    fn a3_walls_in_epsilon_coordinates() {
        let (rs, a) = atlas("A3");
        let forms: Vec<String> = a
            .walls()
            .iter()
            .map(|w| format_epsilon_form(&w.epsilon_form(&rs).unwrap()))
            .collect();
        assert_eq!(forms, vec!["λ2", "λ2 + λ3", "λ3"]);
        let (rs, a) = atlas("A2");
        assert_eq!(
            format_epsilon_form(&a.walls()[0].epsilon_form(&rs).unwrap()),
            "λ2"
        );
    }

    #[test]
    fn rank_cap() {
        let rs = RootSystem::new("A5".parse().unwrap());
        assert!(matches!(
            enumerate_chambers_capped(&rs, 4),
            Err(Error::RankCapExceeded { .. })
        ));
    }

    #[test]
    fn json_uses_ascii_signs() {
        let (_, a) = atlas("A2");
        let j = a.to_json();
        assert_eq!(j["chambers"].as_array().unwrap().len(), 2);
        assert_eq!(j["chambers"][0]["signs"], "+");
        assert_eq!(j["walls"][0]["normal"], json!([1, -1]));
    }
}
