//! Dense two-phase simplex over exact rationals.
//!
//! Problems here are tiny (a handful of variables and constraints), so a
//! textbook tableau with Bland's anti-cycling rule is both fast enough and
//! immune to the degeneracy that plagues floating-point solvers. All
//! arithmetic is exact; outcomes are decisions, not approximations.

use game_core::Rat;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

/// maximize `objective . x` subject to `rows`, `x >= 0`.
#[derive(Clone, Debug, Default)]
pub struct Lp {
    pub n: usize,
    pub objective: Vec<Rat>,
    pub rows: Vec<(Vec<Rat>, Rel, Rat)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, x: Vec<Rat> },
}

impl Lp {
    pub fn new(n: usize) -> Lp {
        Lp {
            n,
            objective: vec![Rat::zero(); n],
            rows: Vec::new(),
        }
    }

    pub fn constrain(&mut self, coeffs: Vec<Rat>, rel: Rel, rhs: Rat) {
        debug_assert_eq!(coeffs.len(), self.n);
        self.rows.push((coeffs, rel, rhs));
    }
}

struct Tableau {
    /// a[r] has `width` coefficient columns plus the rhs in the last slot.
    a: Vec<Vec<Rat>>,
    width: usize,
    basis: Vec<usize>,
    /// reduced-cost row; z[width] carries the negated objective value.
    z: Vec<Rat>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.a[r][c].recip();
        for v in self.a[r].iter_mut() {
            *v *= &inv;
        }
        for rr in 0..self.a.len() {
            if rr != r && !self.a[rr][c].is_zero() {
                let f = std::mem::replace(&mut self.a[rr][c], Rat::zero());
                for cc in 0..=self.width {
                    if cc == c {
                        continue;
                    }
                    let delta = &f * &self.a[r][cc];
                    self.a[rr][cc] -= delta;
                }
            }
        }
        if !self.z[c].is_zero() {
            let f = std::mem::replace(&mut self.z[c], Rat::zero());
            for cc in 0..=self.width {
                if cc == c {
                    continue;
                }
                let delta = &f * &self.a[r][cc];
                self.z[cc] -= delta;
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule: entering column = lowest index with positive reduced
    /// cost; leaving row = min ratio, ties broken by lowest basis index.
    /// `allowed` masks columns that may enter. Returns false on unbounded.
    fn run(&mut self, allowed: &[bool]) -> bool {
        loop {
            let mut enter = None;
            for c in 0..self.width {
                if allowed[c] && self.z[c].is_positive() {
                    enter = Some(c);
                    break;
                }
            }
            let Some(c) = enter else { return true };
            let mut leave: Option<usize> = None;
            for r in 0..self.a.len() {
                if self.a[r][c].is_positive() {
                    let better = match leave {
                        None => true,
                        Some(lr) => {
                            let ratio_r = &self.a[r][self.width] / &self.a[r][c];
                            let ratio_l = &self.a[lr][self.width] / &self.a[lr][c];
                            ratio_r < ratio_l
                                || (ratio_r == ratio_l && self.basis[r] < self.basis[lr])
                        }
                    };
                    if better {
                        leave = Some(r);
                    }
                }
            }
            let Some(r) = leave else { return false };
            self.pivot(r, c);
        }
    }
}

pub fn solve(lp: &Lp) -> LpOutcome {
    let n = lp.n;
    let m = lp.rows.len();
    // normalize rhs >= 0, count extra columns
    let mut rows: Vec<(Vec<Rat>, Rel, Rat)> = lp.rows.clone();
    for (coeffs, rel, rhs) in rows.iter_mut() {
        if rhs.is_negative() {
            for v in coeffs.iter_mut() {
                *v = -&*v;
            }
            *rhs = -&*rhs;
            *rel = match *rel {
                Rel::Le => Rel::Ge,
                Rel::Ge => Rel::Le,
                Rel::Eq => Rel::Eq,
            };
        }
    }
    let n_slack = rows
        .iter()
        .filter(|(_, rel, _)| matches!(rel, Rel::Le | Rel::Ge))
        .count();
    let n_art = m; // one artificial per row keeps the start basis trivial
    let width = n + n_slack + n_art;

    let mut a = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut slack_ix = n;
    for (r, (coeffs, rel, rhs)) in rows.iter().enumerate() {
        let mut row = vec![Rat::zero(); width + 1];
        row[..n].clone_from_slice(coeffs);
        match rel {
            Rel::Le => {
                row[slack_ix] = Rat::one();
                slack_ix += 1;
            }
            Rel::Ge => {
                row[slack_ix] = -Rat::one();
                slack_ix += 1;
            }
            Rel::Eq => {}
        }
        let art = n + n_slack + r;
        row[art] = Rat::one();
        row[width] = rhs.clone();
        a.push(row);
        basis.push(art);
    }

    // phase 1: maximize -(sum of artificials)
    let mut z = vec![Rat::zero(); width + 1];
    for c in n + n_slack..width {
        z[c] = -Rat::one();
    }
    // make reduced costs consistent with the artificial basis
    for r in 0..m {
        let bc = basis[r];
        if !z[bc].is_zero() {
            let f = z[bc].clone();
            for cc in 0..=width {
                let delta = &f * &a[r][cc];
                z[cc] -= delta;
            }
        }
    }
    let mut t = Tableau { a, width, basis, z };
    let allowed: Vec<bool> = (0..width).map(|_| true).collect();
    if !t.run(&allowed) {
        unreachable!("phase-1 objective is bounded");
    }
    // -z[width] is the phase-1 objective value
    if t.z[width].is_positive() {
        return LpOutcome::Infeasible;
    }
    // drive lingering artificials out of the basis
    for r in 0..m {
        if t.basis[r] >= n + n_slack {
            let mut swapped = false;
            for c in 0..n + n_slack {
                if !t.a[r][c].is_zero() {
                    t.pivot(r, c);
                    swapped = true;
                    break;
                }
            }
            if !swapped {
                // redundant row: harmless, leave the zero-valued artificial
                debug_assert!(t.a[r][t.width].is_zero());
            }
        }
    }

    // phase 2: the real objective; artificials may not re-enter
    let mut z = vec![Rat::zero(); width + 1];
    z[..n].clone_from_slice(&lp.objective);
    for r in 0..m {
        let bc = t.basis[r];
        if !z[bc].is_zero() {
            let f = z[bc].clone();
            for cc in 0..=width {
                let delta = &f * &t.a[r][cc];
                z[cc] -= delta;
            }
        }
    }
    t.z = z;
    let allowed: Vec<bool> = (0..width).map(|c| c < n + n_slack).collect();
    if !t.run(&allowed) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rat::zero(); n];
    for r in 0..m {
        if t.basis[r] < n {
            x[t.basis[r]] = t.a[r][t.width].clone();
        }
    }
    let value = -t.z[t.width].clone();
    LpOutcome::Optimal { value, x }
}
