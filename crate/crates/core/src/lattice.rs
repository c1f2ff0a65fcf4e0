//! The sublattice `Γ ⊆ Q` on whose cosets the zero-weight dimension is a
//! single polynomial per chamber, together with canonical coset reduction.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational;
use crate::rootsys::{Family, RootSystem, SimpleType, Weight};

/// Largest index for which coset representatives are listed.
pub const DEFAULT_COSET_CAP: u64 = 1_000_000;

/// A coset of `Γ` in `Q`, named by its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CosetRep {
    rep: Vec<i64>,
}

impl CosetRep {
    pub fn root_coords(&self) -> &[i64] {
        &self.rep
    }

    pub fn weight(&self) -> Weight {
        Weight::from_root_ints(&self.rep)
    }

    pub fn is_zero(&self) -> bool {
        self.rep.iter().all(|&x| x == 0)
    }
}

#[derive(Debug, Clone)]
pub struct GammaLattice {
    ty: SimpleType,
    generators: Vec<Vec<i64>>,
    /// Lower triangular column basis: `hnf[j]` is a generator with zeros
    /// above position `j` and a positive entry at `j`.
    hnf: Vec<Vec<i64>>,
    index: u64,
}

impl GammaLattice {
    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Generators in root coordinates, as listed by the table.
    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Basis matrix with the generators as columns.
    pub fn basis_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank();
        (0..l)
            .map(|i| self.generators.iter().map(|g| g[i]).collect())
            .collect()
    }

    pub fn normal_form(&self) -> &[Vec<i64>] {
        &self.hnf
    }

    /// `[Q : Γ]`.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn reduce_ints(&self, c: &[i64]) -> Vec<i64> {
        let mut v = c.to_vec();
        for (j, col) in self.hnf.iter().enumerate() {
            let k = v[j].div_euclid(col[j]);
            if k != 0 {
                for (x, y) in v.iter_mut().zip(col) {
                    *x -= k * y;
                }
            }
        }
        v
    }

    pub fn reduce(&self, w: &Weight) -> Result<CosetRep> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        let c = w
            .root_ints()
            .ok_or_else(|| Error::NotInRootLattice(w.to_string()))?;
        Ok(CosetRep {
            rep: self.reduce_ints(&c),
        })
    }

    pub fn contains_ints(&self, c: &[i64]) -> bool {
        self.reduce_ints(c).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.reduce(w).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn coset_reps(&self) -> Result<Vec<CosetRep>> {
        self.coset_reps_capped(DEFAULT_COSET_CAP)
    }

    /// All canonical representatives, lexicographically ordered.
    pub fn coset_reps_capped(&self, cap: u64) -> Result<Vec<CosetRep>> {
        if self.index > cap {
            return Err(Error::CosetCapExceeded {
                index: self.index,
                cap,
            });
        }
        let bounds: Vec<i64> = (0..self.rank()).map(|j| self.hnf[j][j]).collect();
        let mut out = Vec::with_capacity(self.index as usize);
        let mut cur = vec![0i64; bounds.len()];
        loop {
            out.push(CosetRep { rep: cur.clone() });
            let mut i = bounds.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// JSON summary; representatives are listed when the index is at most `cap`.
    pub fn to_json(&self, cap: u64) -> Value {
        let reps: Value = match self.coset_reps_capped(cap) {
            Ok(r) => r.iter().map(|c| json!(c.rep)).collect(),
            Err(_) => Value::Null,
        };
        json!({
            "type": self.ty.to_string(),
            "basis": self.generators,
            "index": self.index,
            "coset_reps": reps,
        })
    }
}

/// `Γ` for the given type, in root coordinates.
pub fn gamma_lattice(ty: SimpleType) -> Result<GammaLattice> {
    let l = ty.rank();
    let unit = |i: usize, k: i64| -> Vec<i64> {
        let mut v = vec![0; l];
        v[i] = k;
        v
    };
    let diag =
        |d: &[i64]| -> Vec<Vec<i64>> { d.iter().enumerate().map(|(i, &k)| unit(i, k)).collect() };
    let generators = match (ty.family(), l) {
        (Family::A, _) => diag(&vec![1; l]),
        // B2 ≅ C2 with the short simple roots exchanged.
        (Family::B, 2) => diag(&[1, 2]),
        (Family::B, _) => diag(&vec![2; l]),
        (Family::C, _) => {
            let mut d = vec![2; l];
            d[l - 1] = 1;
            diag(&d)
        }
        (Family::D, 4) => vec![unit(0, 2), unit(1, 2), vec![1, 0, 1, 0], vec![1, 0, 0, 1]],
        (Family::D, _) => {
            let mut g: Vec<Vec<i64>> = (0..l - 2).map(|i| unit(i, 2)).collect();
            let mut last = vec![0; l];
            last[l - 2] = 1;
            last[l - 1] = 1;
            g.push(last);
            g.push(unit(l - 1, 2));
            g
        }
        (Family::G, _) => diag(&[6, 2]),
        (Family::F, _) => diag(&[6, 6, 12, 12]),
        (Family::E, 8) => diag(&[60; 8]),
        (Family::E, _) => {
            let k = if l == 6 { 6 } else { 12 };
            let rs = RootSystem::new(ty);
            rs.fundamental_weights()
                .iter()
                .map(|w| {
                    let scaled = w.scale(&rational::q(k));
                    scaled
                        .root_ints()
                        .expect("scaled fundamental weights are in Q")
                })
                .collect()
        }
    };
    let hnf = column_hnf(&generators)?;
    let index = (0..l).map(|j| hnf[j][j] as u64).product();
    Ok(GammaLattice {
        ty,
        generators,
        hnf,
        index,
    })
}

fn column_hnf(gens: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let l = gens.first().map_or(0, |g| g.len());
    let mut cols: Vec<Vec<i64>> = gens.to_vec();
    for r in 0..l {
        // Euclid on row r across columns r.., leaving one nonzero entry.
        loop {
            let nz: Vec<usize> = (r..cols.len()).filter(|&j| cols[j][r] != 0).collect();
            if nz.is_empty() {
                return Err(Error::RankDeficient);
            }
            let p = *nz.iter().min_by_key(|&&j| cols[j][r].abs()).unwrap();
            cols.swap(r, p);
            if nz.len() == 1 {
                break;
            }
            let pivot = cols[r].clone();
            for col in cols.iter_mut().skip(r + 1) {
                let k = col[r].div_euclid(pivot[r]);
                if k != 0 {
                    for (x, y) in col.iter_mut().zip(&pivot) {
                        *x = x
                            .checked_sub(k.checked_mul(*y).ok_or(Error::Overflow("normal form"))?)
                            .ok_or(Error::Overflow("normal form"))?;
                    }
                }
            }
        }
        if cols[r][r] < 0 {
            for x in cols[r].iter_mut() {
                *x = -*x;
            }
        }
    }
    if cols.len() < l {
        return Err(Error::RankDeficient);
    }
    cols.truncate(l);
    Ok(cols)
}

/// Membership in `Γ` read directly from the table's set-builder description,
/// independent of the basis used by [`GammaLattice`].
pub fn table_membership(ty: SimpleType, c: &[i64]) -> bool {
    let l = ty.rank();
    let even = |x: i64| x.rem_euclid(2) == 0;
    match (ty.family(), l) {
        (Family::A, _) => true,
        (Family::B, 2) => even(c[1]),
        (Family::B, _) => c.iter().all(|&x| even(x)),
        (Family::C, _) => c[..l - 1].iter().all(|&x| even(x)),
        (Family::D, 4) => even(c[1]) && even(c[0] + c[2] + c[3]),
        (Family::D, _) => c[..l - 2].iter().all(|&x| even(x)) && even(c[l - 2] + c[l - 1]),
        (Family::G, _) => c[0] % 6 == 0 && c[1] % 2 == 0,
        (Family::F, _) => c[0] % 6 == 0 && c[1] % 6 == 0 && c[2] % 12 == 0 && c[3] % 12 == 0,
        (Family::E, 8) => c.iter().all(|&x| x % 60 == 0),
        (Family::E, _) => {
            // c ∈ kΛ̃ iff its fundamental coordinates are divisible by k.
            let k = if l == 6 { 6 } else { 12 };
            let rs = RootSystem::new(ty);
            rs.fundamental_ints(&Weight::from_root_ints(c))
                .map(|z| z.iter().all(|&x| x % k == 0))
                .unwrap_or(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn indices() {
        for (t, idx) in [
            ("A1", 1),
            ("A3", 1),
            ("B2", 2),
            ("C2", 2),
            ("C3", 4),
            ("B3", 8),
            ("D4", 4),
            ("D5", 16),
            ("G2", 12),
            ("F4", 5184),
        ] {
            assert_eq!(gamma_lattice(ty(t)).unwrap().index(), idx, "{t}");
        }
        // Λ̃/Q has order 3 for E6 and 2 for E7.
        assert_eq!(gamma_lattice(ty("E6")).unwrap().index(), 6u64.pow(6) / 3);
        assert_eq!(gamma_lattice(ty("E7")).unwrap().index(), 12u64.pow(7) / 2);
        assert_eq!(gamma_lattice(ty("E8")).unwrap().index(), 60u64.pow(8));
    }

    #[test]
    fn c2_reduction() {
        let g = gamma_lattice(ty("C2")).unwrap();
        let reps = g.coset_reps().unwrap();
        assert_eq!(
            reps.iter()
                .map(|r| r.root_coords().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![0, 0], vec![1, 0]]
        );
        assert_eq!(g.reduce_ints(&[1, 0]), vec![1, 0]);
        assert_eq!(g.reduce_ints(&[3, 0]), vec![1, 0]);
        assert_eq!(g.reduce_ints(&[-3, 5]), vec![1, 0]);
    }

    #[test]
    fn g2_generators_reduce_to_zero() {
        let g = gamma_lattice(ty("G2")).unwrap();
        assert_eq!(g.generators(), &[vec![6, 0], vec![0, 2]]);
        assert!(g.contains_ints(&[6, 2]));
        assert_eq!(g.coset_reps().unwrap().len(), 12);
    }

    #[test]
    fn basis_agrees_with_table_on_a_box() {
        for t in ["B2", "B3", "C3", "D4", "D5", "G2", "F4", "E6", "E7"] {
            let t = ty(t);
            let g = gamma_lattice(t).unwrap();
            let l = t.rank();
            for seed in 0..500i64 {
                let c: Vec<i64> = (0..l as i64)
                    .map(|i| ((seed * 7919 + i * 104729) % 29) - 14)
                    .collect();
                assert_eq!(g.contains_ints(&c), table_membership(t, &c), "{t} {c:?}");
            }
            for gen in g.generators() {
                assert!(table_membership(t, gen));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = gamma_lattice(ty("E8")).unwrap();
        assert!(matches!(
            g.coset_reps(),
            Err(Error::CosetCapExceeded { .. })
        ));
        assert_eq!(g.to_json(10)["coset_reps"], Value::Null);
    }
}
