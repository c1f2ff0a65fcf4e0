//! Grid checks of the rank-two and `GL_4` closed forms against branching
//! and Freudenthal, plus the polynomial identities between the `GL_4` pieces.

use std::time::Instant;

use crate::branching::{self, GL4Region, GLWeight, SOWeight};
use crate::error::Result;
use crate::lattice;
use crate::multiplicity::zero_weight_dim;
use crate::poly::ExactPolynomial;
use crate::rational::{frac, q, Q};
use crate::rootsys::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Number of points or identities examined.
    pub checked: usize,
    /// Counterexample on failure, or a note.
    pub detail: String,
    pub millis: u128,
}

impl CheckResult {
    fn new(
        name: &str,
        start: Instant,
        checked: usize,
        failure: Option<String>,
        note: String,
    ) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: failure.is_none(),
            checked,
            detail: failure.unwrap_or(note),
            millis: start.elapsed().as_millis(),
        }
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {} ({} checked, {} ms)",
            self.name, self.checked, self.millis
        )?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Trace-zero dominant `GL_n` weights with `λ_1 ≤ max`.
pub fn trace_zero_grid(n: usize, max: i64) -> Vec<GLWeight> {
    fn rec(
        i: usize,
        n: usize,
        hi: i64,
        lo: i64,
        sum: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<GLWeight>,
    ) {
        if i == n - 1 {
            let last = -sum;
            if last <= hi {
                cur.push(last);
                out.push(GLWeight::new(cur.clone()).expect("decreasing"));
                cur.pop();
            }
            return;
        }
        let mut v = hi;
        while v >= lo {
            // Remaining parts are at most v and sum to -(sum + v).
            let rest = (n - 1 - i) as i64;
            if sum + v + rest * v < 0 {
                break;
            }
            cur.push(v);
            rec(i + 1, n, v, lo, sum + v, cur, out);
            cur.pop();
            v -= 1;
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let lo = -(n as i64 - 1) * max;
    for first in 0..=max {
        let mut cur = vec![first];
        if n == 1 {
            if first == 0 {
                out.push(GLWeight::new(cur).unwrap());
            }
            continue;
        }
        rec(1, n, first, lo, first, &mut cur, &mut out);
    }
    out
}

/// `GL_3`: closed form, branching and Freudenthal on `A2` agree for `λ_1 ≤ max`.
pub fn check_gl3(max: i64) -> Result<CheckResult> {
    let start = Instant::now();
    let rs = RootSystem::new("A2".parse()?);
    let grid = trace_zero_grid(3, max);
    let mut failure = None;
    for w in &grid {
        let closed = branching::gl3_closed_form(w)?;
        let gt = branching::zero_dim_gl(w)?;
        let fr = zero_weight_dim(&rs, &rs.from_epsilon_ints(w.parts())?)?;
        if closed != gt as i64 || gt != fr {
            failure = Some(format!(
                "λ = {:?}: closed form {closed}, branching {gt}, Freudenthal {fr}",
                w.parts()
            ));
            break;
        }
    }
    Ok(CheckResult::new(
        "GL3 closed form",
        start,
        grid.len(),
        failure,
        String::new(),
    ))
}

/// `SO_5`: closed form, branching and Freudenthal on `B2` agree for `λ_1 ≤ max`.
pub fn check_so5(max: i64) -> Result<CheckResult> {
    let start = Instant::now();
    let rs = RootSystem::new("B2".parse()?);
    let mut failure = None;
    let mut checked = 0;
    'outer: for a in 0..=max {
        for b in 0..=a {
            let w = SOWeight::odd(vec![a, b])?;
            let closed = branching::so5_closed_form(&w)?;
            let gt = branching::zero_dim_so5(&w)?;
            let fr = zero_weight_dim(&rs, &rs.from_epsilon_ints(&[a, b])?)?;
            checked += 1;
            if closed != gt as i64 || gt != fr {
                failure = Some(format!(
                    "λ = ({a}, {b}): closed form {closed}, branching {gt}, Freudenthal {fr}"
                ));
                break 'outer;
            }
        }
    }
    Ok(CheckResult::new(
        "SO5 closed form",
        start,
        checked,
        failure,
        String::new(),
    ))
}

/// The two cosets of `Γ` for `B2` are the two parities of `λ_1 + λ_2`.
pub fn check_b2_parity(max: i64) -> Result<CheckResult> {
    let start = Instant::now();
    let rs = RootSystem::new("B2".parse()?);
    let gamma = lattice::gamma_lattice(rs.simple_type())?;
    let mut failure = None;
    let mut checked = 0;
    for a in 0..=max {
        for b in 0..=a {
            let c = rs
                .from_epsilon_ints(&[a, b])?
                .root_ints()
                .expect("ε-integral weights lie in Q");
            let even_coset = gamma.reduce_ints(&c).iter().all(|&x| x == 0);
            checked += 1;
            if even_coset != ((a + b) % 2 == 0) && failure.is_none() {
                failure = Some(format!(
                    "λ = ({a}, {b}) reduces to {:?}",
                    gamma.reduce_ints(&c)
                ));
            }
        }
    }
    Ok(CheckResult::new(
        "B2 cosets match the parity split",
        start,
        checked,
        failure,
        String::new(),
    ))
}

/// `GL_4`: closed form, branching and Freudenthal on `A3` agree for `λ_1 ≤ max`.
pub fn check_gl4(max: i64) -> Result<CheckResult> {
    let start = Instant::now();
    let rs = RootSystem::new("A3".parse()?);
    let grid = trace_zero_grid(4, max);
    let mut failure = None;
    for w in &grid {
        let closed = branching::gl4_closed_form(w)?;
        let gt = branching::zero_dim_gl(w)?;
        let fr = zero_weight_dim(&rs, &rs.from_epsilon_ints(w.parts())?)?;
        if closed != gt as i64 || gt != fr {
            failure = Some(format!(
                "λ = {:?}: closed form {closed}, branching {gt}, Freudenthal {fr}",
                w.parts()
            ));
            break;
        }
    }
    Ok(CheckResult::new(
        "GL4 closed form",
        start,
        grid.len(),
        failure,
        String::new(),
    ))
}

/// `d(λ) = d(λ*)` with `λ* = (-λ_4, ..., -λ_1)`.
pub fn check_gl4_duality(max: i64) -> Result<CheckResult> {
    let start = Instant::now();
    let grid = trace_zero_grid(4, max);
    let mut failure = None;
    for w in &grid {
        let (a, b) = (
            branching::zero_dim_gl(w)?,
            branching::zero_dim_gl(&w.dual())?,
        );
        let c = branching::gl4_closed_form(&w.dual())?;
        if a != b || b as i64 != c {
            failure = Some(format!(
                "λ = {:?}: {a} vs dual {b} (closed form {c})",
                w.parts()
            ));
            break;
        }
    }
    Ok(CheckResult::new(
        "GL4 duality",
        start,
        grid.len(),
        failure,
        String::new(),
    ))
}

/// `λ_i` as polynomials on the trace-zero hyperplane, in the variables
/// `λ_1, λ_2, λ_3`.
fn trace_zero_vars() -> [ExactPolynomial; 4] {
    let v = |i| ExactPolynomial::var(3, i);
    let l4 = -(v(0) + v(1) + v(2));
    [v(0), v(1), v(2), l4]
}

/// `p3 − p4 = (λ2+λ3) − (λ2+λ3)³`, as polynomials and at `points` rational points.
pub fn check_p3_minus_p4(points: usize) -> Result<CheckResult> {
    let start = Instant::now();
    let l = trace_zero_vars();
    let s = l[1].clone() + l[2].clone();
    let rhs = s.clone() - s.clone() * s.clone() * s;
    let symbolic = branching::gl4_p3(&l) - branching::gl4_p4(&l) - rhs;
    let mut failure = (!symbolic.is_zero()).then(|| {
        format!(
            "difference is {}",
            symbolic.format_with(&["λ1", "λ2", "λ3"])
        )
    });
    let mut checked = 1;
    for k in 0..points as i64 {
        let a = frac(7 * k + 3, 5);
        let b = frac(-3 * k + 1, 7);
        let c = frac(k * k - 11, 3);
        let d = -(&a + &b + &c);
        let pt = [a, b, c, d];
        let lhs = branching::gl4_p3(&pt) - branching::gl4_p4(&pt);
        let t = &pt[1] + &pt[2];
        let expected = &t - &t * &t * &t;
        checked += 1;
        if lhs != expected && failure.is_none() {
            failure = Some(format!("at {pt:?}"));
        }
    }
    Ok(CheckResult::new(
        "p3 - p4 identity",
        start,
        checked,
        failure,
        String::new(),
    ))
}

/// Two pieces agree identically on a trace-zero hyperplane.
fn identical_on(a: GL4Region, b: GL4Region, param: &[ExactPolynomial; 4]) -> Option<String> {
    let d = a.polynomial(param) - b.polynomial(param);
    (!d.is_zero()).then(|| {
        format!(
            "{a:?} - {b:?} restricts to {}",
            d.format_with(&["s", "t"][..d.nvars()])
        )
    })
}

/// Parametrizations of `λ_2 = 0` and `λ_3 = 0` inside the trace-zero hyperplane.
fn wall_params() -> ([ExactPolynomial; 4], [ExactPolynomial; 4]) {
    let v = |i| ExactPolynomial::var(2, i);
    let zero = ExactPolynomial::zero(2);
    let l2 = [v(0), zero.clone(), v(1), -(v(0) + v(1))];
    let l3 = [v(0), v(1), zero, -(v(0) + v(1))];
    (l2, l3)
}

/// Adjacent pieces agree where their regions meet, and `p1 ≠ p3` somewhere on
/// `λ_3 = 0`.
pub fn check_gl4_walls(max: i64) -> Result<Vec<CheckResult>> {
    let (on_l2, on_l3) = wall_params();
    let mut out = Vec::new();

    let start = Instant::now();
    out.push(CheckResult::new(
        "p1 = p3 on λ2 = 0",
        start,
        1,
        identical_on(GL4Region::R1, GL4Region::R3, &on_l2),
        String::new(),
    ));
    // The closures of regions (2) and (3) meet λ3 = 0 only along
    // λ2 = λ3 = 0; across the rest of that wall region (2) borders (4).
    let start = Instant::now();
    let t = ExactPolynomial::var(1, 0);
    let zero = ExactPolynomial::zero(1);
    let ray = [t.clone(), zero.clone(), zero, -t];
    let mut failure = identical_on(GL4Region::R2, GL4Region::R3, &ray);
    let mut checked = 1;
    for w in trace_zero_grid(4, max) {
        let p = w.parts();
        if p[2] == 0 && closure_contains(GL4Region::R2, p) && closure_contains(GL4Region::R3, p) {
            checked += 1;
            let pt = [q(p[0]), q(p[1]), q(p[2]), q(p[3])];
            if branching::gl4_p2(&pt) != branching::gl4_p3(&pt) && failure.is_none() {
                failure = Some(format!("λ = {p:?}"));
            }
        }
    }
    let off_wall = GL4Region::R2.polynomial(&on_l3) - GL4Region::R3.polynomial(&on_l3);
    out.push(CheckResult::new(
        "p2 = p3 where λ3 = 0 meets both closures",
        start,
        checked,
        failure,
        format!(
            "on all of λ3 = 0, p2 - p3 = {}",
            off_wall.format_with(&["λ1", "λ2"])
        ),
    ));
    let start = Instant::now();
    out.push(CheckResult::new(
        "p2 = p4 on λ3 = 0",
        start,
        1,
        identical_on(GL4Region::R2, GL4Region::R4, &on_l3),
        String::new(),
    ));

    // p3 = p4 on λ1 + λ4 = 0, i.e. λ2 + λ3 = 0 on the trace-zero hyperplane.
    let start = Instant::now();
    let v = |i| ExactPolynomial::var(2, i);
    let on_l14 = [v(0), v(1), -v(1), -v(0)];
    out.push(CheckResult::new(
        "p3 = p4 on λ1 + λ4 = 0",
        start,
        1,
        identical_on(GL4Region::R3, GL4Region::R4, &on_l14),
        String::new(),
    ));

    // Every dominant point on a shared wall gets the same value from each
    // region whose closure contains it.
    let start = Instant::now();
    let grid = trace_zero_grid(4, max);
    let mut failure = None;
    let mut checked = 0;
    for w in &grid {
        let qp: Vec<Q> = w.parts().iter().map(|&x| q(x)).collect();
        let pt = [qp[0].clone(), qp[1].clone(), qp[2].clone(), qp[3].clone()];
        let d = branching::zero_dim_gl(w)? as i64;
        for r in GL4Region::ALL {
            if closure_contains(r, w.parts()) {
                checked += 1;
                if r.polynomial(&pt) != q(d) && failure.is_none() {
                    failure = Some(format!(
                        "λ = {:?}: {r:?} gives {}, actual {d}",
                        w.parts(),
                        r.polynomial(&pt)
                    ));
                }
            }
        }
    }
    out.push(CheckResult::new(
        "closure values on the GL4 grid",
        start,
        checked,
        failure,
        String::new(),
    ));

    let start = Instant::now();
    let witness = grid.iter().find(|w| {
        let p = w.parts();
        let pt = [q(p[0]), q(p[1]), q(p[2]), q(p[3])];
        p[2] == 0 && branching::gl4_p1(&pt) != branching::gl4_p3(&pt)
    });
    let (failure, note) = match witness {
        Some(w) => {
            let p = w.parts();
            let pt = [q(p[0]), q(p[1]), q(p[2]), q(p[3])];
            (
                None,
                format!(
                    "λ = {:?}: p1 = {}, p3 = {}",
                    p,
                    branching::gl4_p1(&pt),
                    branching::gl4_p3(&pt)
                ),
            )
        }
        None => (
            Some("no point on λ3 = 0 separates p1 and p3".to_string()),
            String::new(),
        ),
    };
    out.push(CheckResult::new(
        "p1 differs from p3 on λ3 = 0",
        start,
        grid.len(),
        failure,
        note,
    ));
    Ok(out)
}

/// Closed region conditions on integer points.
fn closure_contains(r: GL4Region, p: &[i64]) -> bool {
    match r {
        GL4Region::R1 => p[1] <= 0,
        GL4Region::R2 => p[2] >= 0,
        GL4Region::R3 => p[1] >= 0 && p[2] <= 0 && p[0] + p[3] >= 0,
        GL4Region::R4 => p[1] >= 0 && p[2] <= 0 && p[0] + p[3] <= 0,
    }
}

pub fn section5() -> Result<Vec<CheckResult>> {
    Ok(vec![check_gl3(20)?, check_so5(20)?, check_b2_parity(20)?])
}

pub fn section6() -> Result<Vec<CheckResult>> {
    let mut out = vec![
        check_gl4(12)?,
        check_gl4_duality(12)?,
        check_p3_minus_p4(24)?,
    ];
    out.extend(check_gl4_walls(12)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(trace_zero_grid(3, 1).len(), 3);
        assert!(trace_zero_grid(3, 2).iter().all(|w| w.total() == 0));
        let g = trace_zero_grid(2, 3);
        assert_eq!(g.len(), 4);
        assert!(trace_zero_grid(4, 2).contains(&GLWeight::new(vec![1, 0, 0, -1]).unwrap()));
        assert!(trace_zero_grid(4, 2).contains(&GLWeight::new(vec![0, 0, 0, 0]).unwrap()));
    }

    #[test]
    fn small_sections() {
        assert!(check_gl3(5).unwrap().passed);
        assert!(check_so5(5).unwrap().passed);
        assert!(check_b2_parity(8).unwrap().passed);
        assert!(check_gl4(3).unwrap().passed);
        assert!(check_p3_minus_p4(20).unwrap().passed);
        for r in check_gl4_walls(4).unwrap() {
            assert!(r.passed, "{r}");
        }
    }
}
