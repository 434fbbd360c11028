//! Whole-game (normal-form) level-k thinking and rationalizability.
//!
//! Both concepts ignore the tree structure beyond expected utilities: a
//! belief is a distribution over joint opponent strategy profiles, and
//! rationality means maximizing whole-game expected utility.

use beliefs::{exists_best_response_belief, Belief};
use game_core::{Game, GameError, Rat, Result};
use serde_json::json;

use crate::exec::{filter_pool, map_items};
use crate::pools::{full_pools, joint_codes};
use crate::solution::LevelSolution;
use crate::Options;

fn eu_row(game: &Game, i: usize, s: usize, support: &[u64]) -> Vec<Rat> {
    support
        .iter()
        .map(|&code| game.eu(&game.full_profile(i, s, code), i))
        .collect()
}

pub(crate) fn check_levels(k: u32) -> Result<()> {
    if k == 0 {
        return Err(GameError::Validation(
            "at least one level must be computed".into(),
        ));
    }
    Ok(())
}

fn check_beliefs(game: &Game, beliefs: &[Belief]) -> Result<()> {
    if beliefs.len() != game.n_players() {
        return Err(GameError::Validation(format!(
            "need one level-1 belief per player, got {}",
            beliefs.len()
        )));
    }
    for (i, b) in beliefs.iter().enumerate() {
        let cap = game.n_opp_profiles(i);
        if b.support().next().is_none() {
            return Err(GameError::Validation(format!(
                "level-1 belief of {} has empty support",
                game.player_name(i)
            )));
        }
        if b.support().any(|c| c >= cap) {
            return Err(GameError::Validation(format!(
                "level-1 belief of {} names an opponent profile out of range",
                game.player_name(i)
            )));
        }
    }
    Ok(())
}

/// The uniform whole-game belief profile: each player uniform over all joint
/// opponent profiles.
pub fn uniform_profile_beliefs(game: &Game) -> Vec<Belief> {
    (0..game.n_players())
        .map(|i| {
            let all: Vec<u64> = (0..game.n_opp_profiles(i)).collect();
            Belief::uniform(&all)
        })
        .collect()
}

/// Level-k reasoning over whole-game expected utility. Level 1 best-replies
/// to the given belief profile; level k best-replies to some belief over the
/// opponents' level-(k-1) sets. Not nested; may cycle.
pub fn normal_form_level_k(
    game: &Game,
    beliefs: &[Belief],
    k_max: u32,
    opts: Options,
) -> Result<LevelSolution> {
    check_levels(k_max)?;
    check_beliefs(game, beliefs)?;
    let mut solution = LevelSolution::new(
        crate::concept::NORMAL_FORM_LEVEL_K,
        json!({
            "k": k_max,
            "beliefs": beliefs
                .iter()
                .enumerate()
                .map(|(i, b)| b.to_json(game, i))
                .collect::<Vec<_>>(),
        }),
    );

    // level 1: exact best replies to the fixed beliefs
    let mut prev: Vec<Vec<usize>> = Vec::new();
    for i in 0..game.n_players() {
        let support: Vec<u64> = beliefs[i].support().collect();
        let weights: Vec<Rat> = support.iter().map(|&c| beliefs[i].weight(c)).collect();
        let values = map_items(opts.exec, &(0..game.n_strategies(i)).collect::<Vec<_>>(), |&s| {
            let row = eu_row(game, i, s, &support);
            Ok(row.iter().zip(&weights).map(|(v, w)| v * w).sum::<Rat>())
        })?;
        let best = values.iter().max().cloned().expect("nonempty strategy set");
        prev.push((0..game.n_strategies(i)).filter(|&s| values[s] == best).collect());
    }
    solution.push_level(game, &prev, Vec::new());

    for _k in 2..=k_max {
        let mut next = Vec::new();
        let mut prescribed = Vec::new();
        for i in 0..game.n_players() {
            let support = joint_codes(game, i, &prev);
            let all: Vec<usize> = (0..game.n_strategies(i)).collect();
            let rows = map_items(opts.exec, &all, |&s| Ok(eu_row(game, i, s, &support)))?;
            let keep = filter_pool(opts.exec, &all, |s| {
                Ok(exists_best_response_belief(&support, &rows[s], &rows).is_some())
            })?;
            prescribed.push(Some(json!({ "support": support })));
            next.push(keep);
        }
        solution.push_level(game, &next, prescribed);
        prev = next;
    }
    if k_max >= 2 {
        solution.detect_and_set_cycle();
    }
    Ok(solution)
}

/// Iterated best-reply reduction over whole-game expected utility: level k
/// keeps the level-(k-1) strategies that best-reply to some belief over the
/// opponents' level-(k-1) sets. Nested; equivalent to iterated strict
/// dominance elimination level by level.
pub fn rationalizability(game: &Game, k_max: u32, opts: Options) -> Result<LevelSolution> {
    check_levels(k_max)?;
    let mut solution =
        LevelSolution::new(crate::concept::NORMAL_FORM_RATIONALIZABILITY, json!({ "k": k_max }));
    let mut prev = full_pools(game);
    for _k in 1..=k_max {
        let mut next = Vec::new();
        let mut prescribed = Vec::new();
        for i in 0..game.n_players() {
            let support = joint_codes(game, i, &prev);
            let all: Vec<usize> = (0..game.n_strategies(i)).collect();
            let rows = map_items(opts.exec, &all, |&s| Ok(eu_row(game, i, s, &support)))?;
            let keep = filter_pool(opts.exec, &prev[i], |s| {
                Ok(exists_best_response_belief(&support, &rows[s], &rows).is_some())
            })?;
            debug_assert!(keep.iter().all(|s| prev[i].contains(s)));
            prescribed.push(Some(json!({ "support": support })));
            next.push(keep);
        }
        solution.push_level(game, &next, prescribed);
        prev = next;
    }
    if k_max >= 2 {
        solution.detect_and_set_cycle();
    }
    Ok(solution)
}
