//! Reduction of a game tree to its normal form: the exact expected-utility
//! tensor over pure strategy profiles.

use crate::error::{GameError, Result};
use crate::game::{Game, PROFILE_CAP};
use crate::rational::Rat;

/// Payoff tensor over pure strategy profiles. `payoffs[flat][i]` is player
/// `i`'s expected utility at the profile with mixed-radix index `flat`
/// (player 0 most significant), chance integrated out.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub shape: Vec<usize>,
    pub payoffs: Vec<Vec<Rat>>,
    pub labels: Vec<Vec<String>>,
}

impl NormalForm {
    pub fn flat_index(&self, prof: &[usize]) -> usize {
        let mut ix = 0usize;
        for (i, &s) in prof.iter().enumerate() {
            ix = ix * self.shape[i] + s;
        }
        ix
    }

    pub fn payoff(&self, prof: &[usize], i: usize) -> &Rat {
        &self.payoffs[self.flat_index(prof)][i]
    }
}

/// Enumerate every pure profile of the game and tabulate expected utilities.
/// Errors when the profile space exceeds the cap.
pub fn to_normal_form(game: &Game) -> Result<NormalForm> {
    let np = game.n_players();
    let shape: Vec<usize> = (0..np).map(|i| game.n_strategies(i)).collect();
    let total = shape
        .iter()
        .try_fold(1u64, |a, &b| {
            let t = a.saturating_mul(b as u64);
            if t > PROFILE_CAP {
                None
            } else {
                Some(t)
            }
        })
        .ok_or_else(|| {
            GameError::TooLarge(format!("profile space exceeds {PROFILE_CAP}"))
        })? as usize;
    let mut payoffs = Vec::with_capacity(total);
    let mut prof = vec![0usize; np];
    loop {
        payoffs.push(game.eu_all(&prof));
        let mut pos = np;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            prof[pos] += 1;
            if prof[pos] < shape[pos] {
                break;
            }
            prof[pos] = 0;
            if pos == 0 {
                pos = usize::MAX;
                break;
            }
        }
        if pos == usize::MAX || total == 1 {
            break;
        }
    }
    debug_assert_eq!(payoffs.len(), total);
    let labels = (0..np)
        .map(|i| (0..shape[i]).map(|s| game.strategy_label(i, s)).collect())
        .collect();
    Ok(NormalForm {
        shape,
        payoffs,
        labels,
    })
}
