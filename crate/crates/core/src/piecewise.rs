//! Exact interpolation of `μ₀` on each (chamber, coset) piece.
//!
//! On the closure of a chamber intersected with a coset of `Γ`, the
//! zero-weight dimension agrees with a polynomial of degree at most
//! `|R⁺| − ℓ` in the fundamental coordinates `z`. A fit samples lattice
//! points of the piece, solves the interpolation system exactly, and then
//! checks the polynomial on held-out interior and wall points.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chambers::{self, ChamberAtlas};
use crate::error::{Error, Result};
use crate::lattice::{self, CosetRep, GammaLattice};
use crate::linalg::{self, Solution};
pub use crate::poly::{grlex_cmp, monomial_basis, monomial_value, ExactPolynomial, Exponents};
use crate::rational::{self, Q};
use crate::rootsys::{RootSystem, SimpleType, Weight};

/// A pure oracle `λ ↦ μ₀(λ)`.
pub type Oracle<'a> = dyn Fn(&Weight) -> Result<u64> + Sync + 'a;

/// Freudenthal-based oracle for `rs`.
pub fn freudenthal_oracle(rs: &RootSystem) -> impl Fn(&Weight) -> Result<u64> + Sync + '_ {
    move |w| crate::multiplicity::zero_weight_dim(rs, w)
}

/// `|R⁺| − ℓ`, the dimension of the flag variety minus the rank.
pub fn degree_bound(ty: SimpleType) -> u32 {
    (ty.positive_root_count() - ty.rank()) as u32
}

#[derive(Debug, Clone)]
pub struct FitOptions {
    /// L1 radius of the first z-grid scan.
    pub initial_radius: i64,
    /// The scan radius doubles until it would exceed this.
    pub max_radius: i64,
    /// Worker threads for [`full_atlas_fit_with`]; `None` uses rayon's default.
    pub jobs: Option<usize>,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            initial_radius: 8,
            max_radius: 512,
            jobs: None,
        }
    }
}

/// Where to look: a chamber of an atlas and a coset of `Γ`.
#[derive(Clone, Copy)]
pub struct Piece<'a> {
    pub rs: &'a RootSystem,
    pub atlas: &'a ChamberAtlas,
    pub gamma: &'a GammaLattice,
    pub chamber: usize,
    pub coset: &'a CosetRep,
}

/// Dominant lattice points of a piece, in fundamental coordinates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Samples {
    /// Points of the open chamber.
    pub interior: Vec<Vec<i64>>,
    /// Points of the closure outside the open chamber.
    pub boundary: Vec<Vec<i64>>,
}

impl Piece<'_> {
    fn classify(&self, z: &[i64]) -> Option<bool> {
        let w = self.rs.from_fundamental_ints(z);
        let c = w.root_ints()?;
        if self.gamma.reduce_ints(&c) != self.coset.root_coords() {
            return None;
        }
        let zq = rational::qvec(z);
        if self.atlas.in_interior_z(self.chamber, &zq) {
            Some(true)
        } else if self.atlas.in_closure_z(self.chamber, &zq) {
            Some(false)
        } else {
            None
        }
    }

    /// Scans z-shells `Σ z_i = s` outward from the apex of the cone until
    /// `interior` open-chamber points are found, doubling the radius as
    /// needed. Closure points met within the final radius are kept, up to
    /// `boundary` of them.
    pub fn scan(&self, interior: usize, boundary: usize, opts: &FitOptions) -> Result<Samples> {
        let l = self.rs.rank();
        let mut out = Samples::default();
        let mut radius = opts.initial_radius.max(1);
        let mut s = 0i64;
        loop {
            while s <= radius {
                for z in shell(l, s) {
                    match self.classify(&z) {
                        Some(true) if out.interior.len() < interior => out.interior.push(z),
                        Some(false) if out.boundary.len() < boundary => out.boundary.push(z),
                        _ => {}
                    }
                }
                s += 1;
            }
            if out.interior.len() >= interior {
                return Ok(out);
            }
            if radius * 2 > opts.max_radius {
                return Err(Error::Sampling(format!(
                    "{} chamber {} coset {:?}: found {} of {} interior points within radius {}",
                    self.rs.simple_type(),
                    self.atlas.chambers()[self.chamber].id(),
                    self.coset.root_coords(),
                    out.interior.len(),
                    interior,
                    radius
                )));
            }
            radius *= 2;
        }
    }
}

/// All `z ∈ ℤ≥0^l` with `Σ z_i = s`, lexicographically decreasing.
fn shell(l: usize, s: i64) -> Vec<Vec<i64>> {
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
    }
    let mut out = Vec::new();
    if l > 0 {
        rec(0, s, &mut vec![0; l], &mut out);
    } else if s == 0 {
        out.push(vec![]);
    }
    out
}

/// `count` sample weights of a piece: open-chamber points followed by up
/// to a quarter as many wall points of its closure.
pub fn sample_lattice_points(
    piece: &Piece<'_>,
    count: usize,
    opts: &FitOptions,
) -> Result<Vec<Weight>> {
    let m = monomial_basis(piece.rs.rank(), degree_bound(piece.rs.simple_type())).len();
    if count < m {
        return Err(Error::Sampling(format!(
            "{count} points requested, the monomial basis has {m}"
        )));
    }
    let s = piece.scan(count, count.div_ceil(4), opts)?;
    Ok(s.interior
        .iter()
        .chain(&s.boundary)
        .map(|z| piece.rs.from_fundamental_ints(z))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePoint {
    /// Fundamental coordinates.
    pub z: Vec<i64>,
    pub value: u64,
    /// Lies on a wall of the chamber or of the dominant cone.
    pub boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed(String),
}

impl Status {
    pub fn is_verified(&self) -> bool {
        matches!(self, Status::Verified)
    }
}

#[derive(Debug, Clone)]
pub struct PiecewiseCertificate {
    pub ty: SimpleType,
    pub chamber_id: String,
    pub wall_normals: Vec<Vec<i64>>,
    pub coset: CosetRep,
    pub degree_bound: u32,
    pub polynomial: ExactPolynomial,
    /// Monomials whose coefficient was not determined by the fit points.
    pub free_monomials: Vec<Exponents>,
    pub fit_points: Vec<SamplePoint>,
    pub validation_points: Vec<SamplePoint>,
    pub status: Status,
}

impl PiecewiseCertificate {
    pub fn eval_z(&self, z: &[i64]) -> Q {
        self.polynomial.eval_ints(z)
    }

    pub fn to_json(&self) -> Value {
        let mut ordered: Vec<_> = self.polynomial.terms().collect();
        ordered.sort_by(|a, b| grlex_cmp(a.0, b.0));
        let terms: Vec<Value> = ordered
            .iter()
            .map(|(e, c)| json!({"exponents": e, "coeff": rational::to_pq(c)}))
            .collect();
        let points = |v: &[SamplePoint]| -> Vec<Value> {
            v.iter()
                .map(|p| json!({"z": p.z, "value": p.value, "boundary": p.boundary}))
                .collect()
        };
        let (status, reason) = match &self.status {
            Status::Verified => ("verified", Value::Null),
            Status::Failed(r) => ("failed", json!(r)),
        };
        json!({
            "type": self.ty.to_string(),
            "rank": self.ty.rank(),
            "chamber_id": self.chamber_id,
            "wall_normals": self.wall_normals,
            "coset": self.coset.root_coords(),
            "degree_bound": self.degree_bound,
            "terms": terms,
            "free_monomials": self.free_monomials,
            "fit_points": points(&self.fit_points),
            "validation_points": points(&self.validation_points),
            "status": status,
            "failure": reason,
        })
    }
}

fn design_matrix(basis: &[Exponents], pts: &[Vec<i64>]) -> linalg::Matrix {
    pts.iter()
        .map(|z| {
            let zq = rational::qvec(z);
            basis.iter().map(|e| monomial_value(e, &zq)).collect()
        })
        .collect()
}

fn evaluate(
    piece: &Piece<'_>,
    oracle: &Oracle<'_>,
    z: &[i64],
    boundary: bool,
) -> Result<SamplePoint> {
    let value = oracle(&piece.rs.from_fundamental_ints(z))?;
    Ok(SamplePoint {
        z: z.to_vec(),
        value,
        boundary,
    })
}

fn first_mismatch(poly: &ExactPolynomial, pts: &[SamplePoint]) -> Option<String> {
    pts.iter()
        .find(|p| poly.eval_ints(&p.z) != rational::q(p.value as i64))
        .map(|p| {
            format!(
                "at z = {:?}: polynomial gives {}, oracle gives {}",
                p.z,
                rational::to_pq(&poly.eval_ints(&p.z)),
                p.value
            )
        })
}

/// Fits the piece's polynomial from `2M` open-chamber points (more if they
/// do not determine all `M` coefficients) and validates it on `⌈M/2⌉`
/// further open-chamber points plus up to `⌈M/2⌉` closure points.
pub fn fit(
    piece: &Piece<'_>,
    oracle: &Oracle<'_>,
    opts: &FitOptions,
) -> Result<PiecewiseCertificate> {
    let ty = piece.rs.simple_type();
    let d = degree_bound(ty);
    let basis = monomial_basis(ty.rank(), d);
    let m = basis.len();
    let holdout = (2 * m).div_ceil(4);
    let mut n_fit = 2 * m;
    let samples = loop {
        let s = piece.scan(n_fit + holdout, m.div_ceil(2), opts)?;
        let r = linalg::rank(&design_matrix(&basis, &s.interior[..n_fit]));
        if r == m || n_fit >= 4 * m {
            break s;
        }
        n_fit += m;
    };
    let fit_points = samples.interior[..n_fit]
        .iter()
        .map(|z| evaluate(piece, oracle, z, false))
        .collect::<Result<Vec<_>>>()?;
    let mut validation_points = samples.interior[n_fit..]
        .iter()
        .map(|z| evaluate(piece, oracle, z, false))
        .collect::<Result<Vec<_>>>()?;
    for z in &samples.boundary {
        validation_points.push(evaluate(piece, oracle, z, true)?);
    }

    let a = design_matrix(&basis, &samples.interior[..n_fit]);
    let b: Vec<Q> = fit_points
        .iter()
        .map(|p| rational::q(p.value as i64))
        .collect();
    let (polynomial, free_monomials, status) = match linalg::solve(&a, &b) {
        Solution::Inconsistent => (
            ExactPolynomial::zero(ty.rank()),
            vec![],
            Status::Failed("interpolation system is inconsistent".into()),
        ),
        Solution::Solved { x, free } => {
            let poly = ExactPolynomial::from_terms(ty.rank(), basis.iter().cloned().zip(x));
            let free_monomials = free.iter().map(|&j| basis[j].clone()).collect();
            let status = match first_mismatch(&poly, &fit_points)
                .or_else(|| first_mismatch(&poly, &validation_points))
            {
                Some(reason) => Status::Failed(reason),
                None => Status::Verified,
            };
            (poly, free_monomials, status)
        }
    };

    Ok(PiecewiseCertificate {
        ty,
        chamber_id: piece.atlas.chambers()[piece.chamber].id(),
        wall_normals: piece
            .atlas
            .walls()
            .iter()
            .map(|w| w.normal.clone())
            .collect(),
        coset: piece.coset.clone(),
        degree_bound: d,
        polynomial,
        free_monomials,
        fit_points,
        validation_points,
        status,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Verified {
        checked: usize,
    },
    Failed {
        z: Vec<i64>,
        polynomial: Q,
        oracle: u64,
    },
}

/// Checks a certificate at `extra_count` fresh open-chamber points and up
/// to `extra_count` fresh closure points of its piece.
pub fn verify_certificate(
    cert: &PiecewiseCertificate,
    rs: &RootSystem,
    atlas: &ChamberAtlas,
    gamma: &GammaLattice,
    oracle: &Oracle<'_>,
    extra_count: usize,
    opts: &FitOptions,
) -> Result<Verification> {
    let chamber = atlas
        .chamber_by_id(&cert.chamber_id)
        .ok_or_else(|| Error::Sampling(format!("unknown chamber {}", cert.chamber_id)))?;
    let piece = Piece {
        rs,
        atlas,
        gamma,
        chamber,
        coset: &cert.coset,
    };
    let used: HashSet<&Vec<i64>> = cert
        .fit_points
        .iter()
        .chain(&cert.validation_points)
        .map(|p| &p.z)
        .collect();
    let used_interior = cert.fit_points.len()
        + cert
            .validation_points
            .iter()
            .filter(|p| !p.boundary)
            .count();
    let used_boundary = cert.validation_points.len() + cert.fit_points.len() - used_interior;
    let s = piece.scan(
        used_interior + extra_count,
        used_boundary + extra_count,
        opts,
    )?;
    let fresh: Vec<&Vec<i64>> = s
        .interior
        .iter()
        .filter(|z| !used.contains(z))
        .take(extra_count)
        .chain(
            s.boundary
                .iter()
                .filter(|z| !used.contains(z))
                .take(extra_count),
        )
        .collect();
    for z in &fresh {
        let value = oracle(&rs.from_fundamental_ints(z))?;
        let p = cert.eval_z(z);
        if p != rational::q(value as i64) {
            return Ok(Verification::Failed {
                z: z.to_vec(),
                polynomial: p,
                oracle: value,
            });
        }
    }
    Ok(Verification::Verified {
        checked: fresh.len(),
    })
}

/// Atlas, `Γ` and one certificate per (chamber, coset), in chamber-major order.
pub struct AtlasFit {
    pub atlas: ChamberAtlas,
    pub gamma: GammaLattice,
    pub certificates: Vec<PiecewiseCertificate>,
}

impl AtlasFit {
    pub fn all_verified(&self) -> bool {
        self.certificates.iter().all(|c| c.status.is_verified())
    }

    pub fn certificate(&self, chamber_id: &str, coset: &[i64]) -> Option<&PiecewiseCertificate> {
        self.certificates
            .iter()
            .find(|c| c.chamber_id == chamber_id && c.coset.root_coords() == coset)
    }
}

pub fn full_atlas_fit(ty: SimpleType) -> Result<Vec<PiecewiseCertificate>> {
    let rs = RootSystem::new(ty);
    let oracle = freudenthal_oracle(&rs);
    let fit = full_atlas_fit_with(&rs, &oracle, &FitOptions::default())?;
    Ok(fit.certificates)
}

pub fn full_atlas_fit_with(
    rs: &RootSystem,
    oracle: &Oracle<'_>,
    opts: &FitOptions,
) -> Result<AtlasFit> {
    let atlas = chambers::enumerate_chambers(rs)?;
    let gamma = lattice::gamma_lattice(rs.simple_type())?;
    let cosets = gamma.coset_reps()?;
    let pairs: Vec<(usize, &CosetRep)> = (0..atlas.chambers().len())
        .flat_map(|k| cosets.iter().map(move |c| (k, c)))
        .collect();
    let run = || -> Result<Vec<PiecewiseCertificate>> {
        pairs
            .par_iter()
            .map(|&(chamber, coset)| {
                let piece = Piece {
                    rs,
                    atlas: &atlas,
                    gamma: &gamma,
                    chamber,
                    coset,
                };
                fit(&piece, oracle, opts)
            })
            .collect()
    };
    let certificates = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    Ok(AtlasFit {
        atlas,
        gamma,
        certificates,
    })
}

/// Writes one JSON file per certificate into `dir`, named by chamber and
/// coset position.
pub fn write_certificates(dir: &Path, fit: &AtlasFit) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let cosets = fit.gamma.coset_reps()?;
    let mut paths = Vec::new();
    for cert in &fit.certificates {
        let k = fit.atlas.chamber_by_id(&cert.chamber_id).unwrap_or(0);
        let j = cosets.iter().position(|c| c == &cert.coset).unwrap_or(0);
        let path = dir.join(format!("{}_chamber{}_coset{}.json", cert.ty, k, j));
        let mut text = serde_json::to_string_pretty(&cert.to_json())?;
        text.push('\n');
        fs::write(&path, text)?;
        paths.push(path);
    }
    Ok(paths)
}

/// The `ε` coordinates of a weight as linear polynomials in `z`.
pub fn epsilon_polynomials(rs: &RootSystem) -> Result<Vec<ExactPolynomial>> {
    let l = rs.rank();
    let columns: Vec<Vec<Q>> = (0..l)
        .map(|i| {
            let mut e = vec![0; l];
            e[i] = 1;
            rs.to_epsilon(&rs.from_fundamental_ints(&e))
        })
        .collect::<Result<_>>()?;
    let n = columns.first().map_or(0, |c| c.len());
    Ok((0..n)
        .map(|r| {
            let coeffs: Vec<Q> = columns.iter().map(|c| c[r].clone()).collect();
            ExactPolynomial::linear(&coeffs, rational::q(0))
        })
        .collect())
}

/// First chamber whose witness satisfies `pred`.
pub fn chamber_where(atlas: &ChamberAtlas, pred: impl Fn(&[Q]) -> bool) -> Option<usize> {
    atlas
        .chambers()
        .iter()
        .position(|c| pred(&c.witness) && c.witness.iter().all(|x| x.is_positive()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn shells() {
        assert_eq!(shell(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(shell(3, 1).len(), 3);
        assert_eq!(shell(1, 5), vec![vec![5]]);
    }

    #[test]
    fn a2_samples() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let atlas = chambers::enumerate_chambers(&rs).unwrap();
        let gamma = lattice::gamma_lattice(rs.simple_type()).unwrap();
        let coset = &gamma.coset_reps().unwrap()[0];
        // The wall normal is (1, -1); sign '-' means z1 < z2, i.e. λ2 > 0.
        let k = atlas.chamber_by_id("-").unwrap();
        let piece = Piece {
            rs: &rs,
            atlas: &atlas,
            gamma: &gamma,
            chamber: k,
            coset,
        };
        let opts = FitOptions::default();
        let pts = sample_lattice_points(&piece, 6, &opts).unwrap();
        assert!(pts.contains(&rs.from_fundamental_ints(&[1, 1])));
        let s = piece.scan(6, 3, &opts).unwrap();
        assert!(s.interior.iter().all(|z| z[0] < z[1] && z[0] > 0));
        assert!(s.interior.contains(&vec![1, 4]));
        assert!(matches!(
            sample_lattice_points(&piece, 2, &opts),
            Err(Error::Sampling(_))
        ));
    }

    #[test]
    fn b2_even_coset_has_even_total() {
        let rs = RootSystem::new("B2".parse().unwrap());
        let atlas = chambers::enumerate_chambers(&rs).unwrap();
        let gamma = lattice::gamma_lattice(rs.simple_type()).unwrap();
        let zero = &gamma.coset_reps().unwrap()[0];
        let piece = Piece {
            rs: &rs,
            atlas: &atlas,
            gamma: &gamma,
            chamber: 0,
            coset: zero,
        };
        for w in sample_lattice_points(&piece, 20, &FitOptions::default()).unwrap() {
            let eps = rs.to_epsilon(&w).unwrap();
            assert!(rational::is_integral(&((&eps[0] + &eps[1]) / q(2))));
        }
    }

    #[test]
    fn a2_certificates() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let fit = full_atlas_fit_with(
            &rs,
            &freudenthal_oracle(&rs),
            &FitOptions {
                jobs: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(fit.all_verified());
        assert_eq!(fit.certificates.len(), 2);
        let pos = fit.certificate("-", &[0, 0]).unwrap();
        let neg = fit.certificate("+", &[0, 0]).unwrap();
        assert_eq!(pos.polynomial.to_string(), "1 + 1*z1");
        assert_eq!(neg.polynomial.to_string(), "1 + 1*z2");
        let j = pos.to_json();
        assert_eq!(j["degree_bound"], 1);
        assert_eq!(j["terms"][0]["coeff"], "1/1");
        assert_eq!(j["status"], "verified");

        let v = verify_certificate(
            pos,
            &rs,
            &fit.atlas,
            &fit.gamma,
            &freudenthal_oracle(&rs),
            5,
            &FitOptions::default(),
        )
        .unwrap();
        assert!(matches!(v, Verification::Verified { checked } if checked >= 5));
    }

    #[test]
    fn wrong_oracle_fails() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let atlas = chambers::enumerate_chambers(&rs).unwrap();
        let gamma = lattice::gamma_lattice(rs.simple_type()).unwrap();
        let coset = &gamma.coset_reps().unwrap()[0];
        let piece = Piece {
            rs: &rs,
            atlas: &atlas,
            gamma: &gamma,
            chamber: 0,
            coset,
        };
        let bad = |w: &Weight| -> Result<u64> {
            let z = rs.fundamental_ints(w).unwrap();
            Ok((z[0] * z[1] + 1) as u64)
        };
        let cert = fit(&piece, &bad, &FitOptions::default()).unwrap();
        assert!(!cert.status.is_verified());
    }
}
