//! Weight multiplicities by Freudenthal's recursion.
//!
//! For a dominant integral `λ` and a dominant `μ ≺ λ`,
//!
//! ```text
//! ((λ+ρ, λ+ρ) - (μ+ρ, μ+ρ)) · m(μ) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα) (μ+kα, α)
//! ```
//!
//! Everything runs on integers: weights are carried in fundamental
//! coordinates, depths `λ - μ` in root coordinates, and the inner product is
//! evaluated through the integer symmetrizer of the root system, which scales
//! both sides by the same constant.

use std::collections::HashMap;
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::rootsys::{RootSystem, Weight};

/// One dominant weight of `V(λ)` with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub weight: Weight,
    /// Fundamental coordinates of the weight.
    pub fundamental: Vec<i64>,
    /// Root coordinates of `λ - μ`.
    pub depth: Vec<i64>,
    pub multiplicity: u64,
    pub orbit_size: u64,
}

/// Multiplicities of all dominant weights of `V(λ)`.
#[derive(Debug, Clone)]
pub struct MultiplicityTable {
    highest_weight: Weight,
    entries: Vec<TableEntry>,
    index: HashMap<Vec<i64>, usize>,
}

fn validate_dominant_integral(rs: &RootSystem, lambda: &Weight) -> Result<Vec<i64>> {
    rs.check_rank(lambda)?;
    let z = rs
        .fundamental_ints(lambda)
        .ok_or_else(|| Error::NotIntegral(lambda.to_string()))?;
    if z.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(z)
}

fn validate_adjoint(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    validate_dominant_integral(rs, lambda)?;
    if !lambda.in_root_lattice() {
        return Err(Error::NotInRootLattice(lambda.to_string()));
    }
    Ok(())
}

/// Positive roots in fundamental coordinates, paired with their root coordinates.
fn roots_in_z(rs: &RootSystem) -> Vec<(Vec<i64>, Vec<i64>)> {
    let l = rs.rank();
    rs.positive_roots()
        .iter()
        .map(|beta| {
            let z = (0..l)
                .map(|i| (0..l).map(|j| rs.cartan()[i][j] * beta[j]).sum())
                .collect();
            (z, beta.clone())
        })
        .collect()
}

/// Dominant weights `μ` with `λ - μ ∈ ℤ≥0 Δ`, as `(fundamental, depth)` pairs,
/// ordered by the height of `λ - μ` and then lexicographically by depth.
fn dominant_support(rs: &RootSystem, z_lambda: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let roots = roots_in_z(rs);
    let l = rs.rank();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut out = vec![(z_lambda.to_vec(), vec![0; l])];
    seen.insert(z_lambda.to_vec(), ());
    let mut head = 0;
    // Every dominant μ ≺ λ is reachable through dominant weights by
    // subtracting one positive root at a time.
    while head < out.len() {
        let (z, depth) = out[head].clone();
        head += 1;
        for (bz, broot) in &roots {
            let nz: Vec<i64> = z.iter().zip(bz).map(|(a, b)| a - b).collect();
            if nz.iter().any(|&x| x < 0) || seen.contains_key(&nz) {
                continue;
            }
            let nd: Vec<i64> = depth.iter().zip(broot).map(|(a, b)| a + b).collect();
            seen.insert(nz.clone(), ());
            out.push((nz, nd));
        }
    }
    out.sort_by(|a, b| {
        let ha: i64 = a.1.iter().sum();
        let hb: i64 = b.1.iter().sum();
        ha.cmp(&hb).then_with(|| a.1.cmp(&b.1))
    });
    out
}

/// Orbit size `|W| / |W_J|`, `J` the simple reflections fixing `z`.
struct OrbitSizes<'a> {
    rs: &'a RootSystem,
    stabilizers: HashMap<u32, u64>,
}

impl<'a> OrbitSizes<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        OrbitSizes {
            rs,
            stabilizers: HashMap::new(),
        }
    }

    fn get(&mut self, z: &[i64]) -> u64 {
        let l = self.rs.rank();
        let mask = (0..l)
            .filter(|&i| z[i] == 0)
            .fold(0u32, |m, i| m | (1 << i));
        if mask == (1 << l) - 1 {
            return 1;
        }
        let rs = self.rs;
        let stab = *self
            .stabilizers
            .entry(mask)
            .or_insert_with(|| parabolic_order(rs, mask));
        rs.simple_type().weyl_order() / stab
    }
}

/// Order of the parabolic subgroup generated by the reflections in `mask`,
/// counted as the orbit of a regular weight.
fn parabolic_order(rs: &RootSystem, mask: u32) -> u64 {
    let l = rs.rank();
    let gens: Vec<usize> = (0..l).filter(|&i| mask & (1 << i) != 0).collect();
    let start = vec![1i64; l];
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.clone());
    let mut stack = vec![start];
    while let Some(cur) = stack.pop() {
        for &i in &gens {
            let zi = cur[i];
            let next: Vec<i64> = cur
                .iter()
                .enumerate()
                .map(|(j, &zj)| zj - zi * rs.cartan()[j][i])
                .collect();
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen.len() as u64
}

impl MultiplicityTable {
    /// Builds the table for a dominant integral weight.
    pub fn new(rs: &RootSystem, lambda: &Weight) -> Result<Self> {
        let z_lambda = validate_dominant_integral(rs, lambda)?;
        let roots = roots_in_z(rs);
        let support = dominant_support(rs, &z_lambda);
        let l = rs.rank();
        let sym = rs.symmetrizer();

        let mut index: HashMap<Vec<i64>, usize> = HashMap::with_capacity(support.len());
        let mut mults: Vec<u64> = Vec::with_capacity(support.len());
        let mut scratch = vec![0i64; l];

        for (pos, (z_mu, depth)) in support.iter().enumerate() {
            if pos == 0 {
                index.insert(z_mu.clone(), 0);
                mults.push(1);
                continue;
            }
            let mut numer: i128 = 0;
            for (bz, broot) in &roots {
                let mut k = 1i64;
                loop {
                    for i in 0..l {
                        scratch[i] = z_mu[i] + k * bz[i];
                    }
                    // (μ+kα, α) before moving to the dominant representative.
                    let ip = rs.scaled_pairing_z_root(&scratch, broot);
                    rs.dominate_z(&mut scratch);
                    let Some(&j) = index.get(&scratch) else {
                        break;
                    };
                    numer = numer
                        .checked_add(i128::from(mults[j]) * i128::from(ip))
                        .ok_or(Error::Overflow("freudenthal numerator"))?;
                    k += 1;
                }
            }
            let denom: i128 = (0..l)
                .map(|i| {
                    i128::from(depth[i])
                        * i128::from(sym[i])
                        * i128::from(z_lambda[i] + z_mu[i] + 2)
                })
                .sum();
            debug_assert!(denom > 0);
            let twice = 2 * numer;
            if twice % denom != 0 {
                return Err(Error::NonIntegral(format!("freudenthal {twice}/{denom}")));
            }
            let m = u64::try_from(twice / denom).map_err(|_| Error::Overflow("multiplicity"))?;
            index.insert(z_mu.clone(), pos);
            mults.push(m);
        }

        let mut orbits = OrbitSizes::new(rs);
        let entries = support
            .into_iter()
            .zip(mults)
            .map(|((z, depth), multiplicity)| TableEntry {
                weight: rs.from_fundamental_ints(&z),
                orbit_size: orbits.get(&z),
                fundamental: z,
                depth,
                multiplicity,
            })
            .collect();

        Ok(MultiplicityTable {
            highest_weight: lambda.clone(),
            entries,
            index,
        })
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    /// Multiplicity of any weight `μ` (not necessarily dominant).
    pub fn multiplicity(&self, rs: &RootSystem, mu: &Weight) -> u64 {
        let diff = self.highest_weight.sub(mu);
        if !diff.in_root_lattice() {
            return 0;
        }
        let Some(mut z) = rs.fundamental_ints(mu) else {
            return 0;
        };
        rs.dominate_z(&mut z);
        self.index
            .get(&z)
            .map_or(0, |&i| self.entries[i].multiplicity)
    }

    /// `Σ multiplicity · orbit size`, the dimension of `V(λ)`.
    pub fn total_dimension(&self) -> BigUint {
        self.entries
            .iter()
            .map(|e| BigUint::from(e.multiplicity) * BigUint::from(e.orbit_size))
            .sum()
    }

    /// CSV with columns `weight,multiplicity,orbit_size`; the weight is in
    /// root coordinates joined by `;`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["weight", "multiplicity", "orbit_size"])?;
        for e in &self.entries {
            let coords: Vec<String> = e
                .weight
                .root_coords()
                .iter()
                .map(|c| {
                    if rational::is_integral(c) {
                        c.numer().to_string()
                    } else {
                        rational::to_pq(c)
                    }
                })
                .collect();
            w.write_record([
                coords.join(";"),
                e.multiplicity.to_string(),
                e.orbit_size.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `dim V(λ)_μ` for `λ` dominant in the root lattice.
pub fn weight_multiplicity(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<u64> {
    validate_adjoint(rs, lambda)?;
    rs.check_rank(mu)?;
    let table = MultiplicityTable::new(rs, lambda)?;
    Ok(table.multiplicity(rs, mu))
}

/// `μ₀(λ) = dim V(λ)_0`.
pub fn zero_weight_dim(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    validate_adjoint(rs, lambda)?;
    let table = MultiplicityTable::new(rs, lambda)?;
    Ok(table.multiplicity(rs, &Weight::zero(rs.rank())))
}

/// Weyl's product formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    let z = validate_dominant_integral(rs, lambda)?;
    let shifted: Vec<i64> = z.iter().map(|x| x + 1).collect();
    let rho = vec![1i64; rs.rank()];
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for beta in rs.positive_roots() {
        num *= BigInt::from(rs.scaled_pairing_z_root(&shifted, beta));
        den *= BigInt::from(rs.scaled_pairing_z_root(&rho, beta));
    }
    let value = Q::new(num, den);
    debug_assert!(rational::is_integral(&value));
    Ok(value
        .to_integer()
        .to_biguint()
        .unwrap_or_else(BigUint::zero))
}

/// All dominant `μ` with `λ - μ` a non-negative integer combination of simple roots.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    let z = validate_dominant_integral(rs, lambda)?;
    Ok(dominant_support(rs, &z)
        .into_iter()
        .map(|(z, _)| rs.from_fundamental_ints(&z))
        .collect())
}
