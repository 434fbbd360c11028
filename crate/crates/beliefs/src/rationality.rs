//! Rationality of a strategy at an information set, under a fixed belief.
//!
//! Two flavors:
//! - "strong": only meaningful when the strategy reaches the set (vacuously
//!   rational otherwise); compares conditional expected utility against every
//!   other own strategy that reaches the set.
//! - "continuation": never vacuous; compares the strategy's play from the set
//!   onward (its continuation class) against every alternative continuation,
//!   evaluating each through a reference strategy steered to reach the set.

use crate::types::Belief;
use game_core::{Game, GameError, Rat, Result};
use num_traits::Zero;

/// Action slices for the full profile: player `i` plays `own`, the opponents
/// play the strategies encoded by `code`.
pub(crate) fn mixed_acts<'a>(
    game: &'a Game,
    i: usize,
    own: &'a [u16],
    code: u64,
) -> Vec<&'a [u16]> {
    let opp = game.opp_players(i);
    let parts = game.opp_decode(i, code);
    let mut out: Vec<&'a [u16]> = vec![own; game.n_players()];
    for (slot, &j) in opp.iter().enumerate() {
        out[j] = game.strategy(j, parts[slot]);
    }
    out
}

/// Conditional value at the set of own actions `own` against one opponent
/// profile. Errors when the pair gives the set probability zero.
pub(crate) fn cond_value_one(
    game: &Game,
    i: usize,
    set: usize,
    own: &[u16],
    code: u64,
) -> Result<Rat> {
    let acts = mixed_acts(game, i, own, code);
    let (num, den) = game.cond_num_den(&acts, i, set);
    if den.is_zero() {
        return Err(GameError::Validation(format!(
            "profile does not reach information set {set} of player {}",
            game.player_name(i)
        )));
    }
    Ok(num / den)
}

pub(crate) fn conditional_value_acts(
    game: &Game,
    i: usize,
    set: usize,
    own: &[u16],
    belief: &Belief,
) -> Result<Rat> {
    let mut total = Rat::zero();
    for (code, w) in belief.iter() {
        total += w * cond_value_one(game, i, set, own, code)?;
    }
    Ok(total)
}

/// Expected utility conditional on reaching the information set, under a
/// belief over the opponent profiles that reach it. Errors when the strategy
/// itself does not reach the set.
pub fn conditional_expected_utility(
    game: &Game,
    i: usize,
    set: usize,
    s: usize,
    belief: &Belief,
) -> Result<Rat> {
    if !game.strat_reaches(i, set, s) {
        return Err(GameError::Validation(format!(
            "strategy {} of player {} does not reach information set {set}",
            game.strategy_label(i, s),
            game.player_name(i)
        )));
    }
    conditional_value_acts(game, i, set, game.strategy(i, s), belief)
}

/// Strong-flavor rationality: vacuously true when the strategy does not reach
/// the set; otherwise true iff no other strategy reaching the set does
/// strictly better conditionally.
pub fn is_rational_at(
    game: &Game,
    i: usize,
    set: usize,
    s: usize,
    belief: &Belief,
) -> Result<bool> {
    if !game.strat_reaches(i, set, s) {
        return Ok(true);
    }
    let v = conditional_value_acts(game, i, set, game.strategy(i, s), belief)?;
    for r in 0..game.n_strategies(i) {
        if r == s || !game.strat_reaches(i, set, r) {
            continue;
        }
        if conditional_value_acts(game, i, set, game.strategy(i, r), belief)? > v {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conditional-value rows for every continuation class at an own set.
///
/// A continuation class fixes the actions at the set and at every own set
/// weakly following it; its value against an opponent profile is the
/// conditional payoff when a reference strategy steered to reach the set
/// plays that continuation.
pub struct ContinuationTable {
    /// The set itself plus its own weak followers, ascending.
    pub post: Vec<usize>,
    /// Action counts per post slot (row index is the mixed-radix code).
    radices: Vec<usize>,
    /// rows[class][slot]: conditional value against `support[slot]`.
    pub rows: Vec<Vec<Rat>>,
    pub support: Vec<u64>,
}

impl ContinuationTable {
    /// Build the table. Every profile in `support` must reach the set.
    pub fn build(game: &Game, i: usize, set: usize, support: &[u64]) -> Result<ContinuationTable> {
        let post = game.weak_followers(i, i, set);
        debug_assert!(post.binary_search(&set).is_ok());
        let radices: Vec<usize> = post
            .iter()
            .map(|&p| game.own_sets(i)[p].actions.len())
            .collect();
        let n_classes: usize = radices.iter().product();
        let n_sets = game.own_sets(i).len();
        let mut rows = Vec::with_capacity(n_classes);
        let mut key = vec![0u16; post.len()];
        for _ in 0..n_classes {
            let mut base = vec![0u16; n_sets];
            for (slot, &p) in post.iter().enumerate() {
                base[p] = key[slot];
            }
            // Steer the reference onto the set's path; the overwritten sets
            // are disjoint from `post`, so the continuation is preserved.
            let reference = game.reach_variant(i, set, &base);
            let row = support
                .iter()
                .map(|&code| cond_value_one(game, i, set, &reference, code))
                .collect::<Result<Vec<Rat>>>()?;
            rows.push(row);
            for (slot, r) in radices.iter().enumerate().rev() {
                key[slot] += 1;
                if (key[slot] as usize) < *r {
                    break;
                }
                key[slot] = 0;
            }
        }
        Ok(ContinuationTable {
            post,
            radices,
            rows,
            support: support.to_vec(),
        })
    }

    /// Row index of the continuation class a full own strategy belongs to.
    pub fn class_of(&self, own: &[u16]) -> usize {
        let mut code = 0usize;
        for (slot, &p) in self.post.iter().enumerate() {
            code = code * self.radices[slot] + own[p] as usize;
        }
        code
    }

    pub fn n_classes(&self) -> usize {
        self.rows.len()
    }
}

/// Continuation-flavor rationality under a fixed belief: the strategy's
/// continuation class must be weakly best among all continuation classes.
pub fn is_rational_continuation_at(
    game: &Game,
    i: usize,
    set: usize,
    s: usize,
    belief: &Belief,
) -> Result<bool> {
    let support: Vec<u64> = belief.support().collect();
    let table = ContinuationTable::build(game, i, set, &support)?;
    let weights: Vec<Rat> = support.iter().map(|&c| belief.weight(c)).collect();
    let value = |row: &[Rat]| -> Rat {
        row.iter()
            .zip(&weights)
            .map(|(v, w)| v * w)
            .sum()
    };
    let mine = value(&table.rows[table.class_of(game.strategy(i, s))]);
    Ok(table.rows.iter().all(|row| value(row) <= mine))
}
