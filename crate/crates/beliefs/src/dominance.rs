//! Dominance by mixtures, over explicit payoff rows.
//!
//! `rows[r][c]` is the value of candidate row `r` in column `c`; `target` is
//! the row being tested. Columns are whatever the caller conditioned on, so a
//! conditional strict test is the plain strict test on restricted columns.

use crate::lp::{solve, Lp, LpOutcome, Rel};
use game_core::Rat;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominanceKind {
    /// Some mixture is strictly better in every column.
    Strict,
    /// Some mixture is weakly better everywhere and strictly better somewhere.
    Weak,
}

/// Is `target` dominated by a mixture of `rows`? Returns the mixture weights
/// (one per row, summing to 1) when it is.
pub fn dominated_by_mixture(
    rows: &[Vec<Rat>],
    target: &[Rat],
    kind: DominanceKind,
) -> Option<Vec<Rat>> {
    let nr = rows.len();
    let nc = target.len();
    if nr == 0 || nc == 0 {
        return None;
    }
    debug_assert!(rows.iter().all(|r| r.len() == nc));
    match kind {
        DominanceKind::Strict => {
            // maximize the worst margin: weights plus one margin variable
            let mut lp = Lp::new(nr + 1);
            lp.objective[nr] = Rat::one();
            let mut simplex = vec![Rat::zero(); nr + 1];
            for slot in simplex.iter_mut().take(nr) {
                *slot = Rat::one();
            }
            lp.constrain(simplex, Rel::Eq, Rat::one());
            for c in 0..nc {
                let mut coeffs: Vec<Rat> = rows.iter().map(|r| r[c].clone()).collect();
                coeffs.push(-Rat::one());
                lp.constrain(coeffs, Rel::Ge, target[c].clone());
            }
            match solve(&lp) {
                LpOutcome::Optimal { value, x } if value.is_positive() => {
                    Some(x[..nr].to_vec())
                }
                _ => None,
            }
        }
        DominanceKind::Weak => {
            // stay weakly above everywhere; maximize the total surplus
            let mut lp = Lp::new(nr);
            for (r, row) in rows.iter().enumerate() {
                lp.objective[r] = row.iter().sum();
            }
            lp.constrain(vec![Rat::one(); nr], Rel::Eq, Rat::one());
            for c in 0..nc {
                let coeffs: Vec<Rat> = rows.iter().map(|r| r[c].clone()).collect();
                lp.constrain(coeffs, Rel::Ge, target[c].clone());
            }
            let base: Rat = target.iter().sum();
            match solve(&lp) {
                LpOutcome::Optimal { value, x } if value > base => Some(x),
                _ => None,
            }
        }
    }
}
