//! Strong level-k thinking and its iterated-reduction counterpart.
//!
//! "Strong" rationality tests a strategy at every information set it reaches:
//! conditional on arriving there, the strategy must maximize expected utility
//! against the belief held at that set, among the strategy's own variants
//! that also arrive there.

use beliefs::{
    dominated_by_mixture, exists_belief_system, BeliefSystem, DominanceKind, RationalityFlavor,
    SetSpec, SupportSpec,
};
use game_core::{Game, GameError, Result};
use serde_json::json;

use crate::exec::filter_pool;
use crate::normal::check_levels;
use crate::pools::{full_pools, intersect, joint_codes};
use crate::solution::LevelSolution;
use crate::Options;

pub(crate) fn check_systems(game: &Game, systems: &[BeliefSystem]) -> Result<()> {
    if systems.len() != game.n_players() {
        return Err(GameError::Validation(format!(
            "need one belief system per player, got {}",
            systems.len()
        )));
    }
    for (i, sys) in systems.iter().enumerate() {
        if sys.player != i {
            return Err(GameError::Validation(format!(
                "belief system at position {i} is for {}",
                game.player_name(sys.player)
            )));
        }
        if sys.beliefs.len() != game.own_sets(i).len() {
            return Err(GameError::Validation(format!(
                "belief system of {} covers {} info sets, game has {}",
                game.player_name(i),
                sys.beliefs.len(),
                game.own_sets(i).len()
            )));
        }
        let (reaching, _) = sys.check_axioms(game)?;
        if !reaching {
            return Err(GameError::Validation(format!(
                "belief system of {} puts weight on profiles that do not reach its set",
                game.player_name(i)
            )));
        }
    }
    Ok(())
}

/// Level-k reasoning with rationality enforced at every reached information
/// set. Level 1 uses the given belief systems verbatim; at level k each set's
/// belief may be any distribution over the opponents' highest level that
/// still reaches the set (scanning k-1, k-2, ... 1), falling back to the
/// given system where no level reaches. Not nested; may cycle.
pub fn strong_level_k(
    game: &Game,
    fallback: &[BeliefSystem],
    k_max: u32,
    opts: Options,
) -> Result<LevelSolution> {
    check_levels(k_max)?;
    check_systems(game, fallback)?;
    let mut solution = LevelSolution::new(
        crate::concept::STRONG_LEVEL_K,
        json!({
            "k": k_max,
            "fallback": fallback.iter().map(|s| s.to_json(game)).collect::<Vec<_>>(),
        }),
    );

    // history[l-1] holds the level-l sets of every player
    let mut history: Vec<Vec<Vec<usize>>> = Vec::new();

    // level 1: the fixed systems
    let mut level = Vec::new();
    for i in 0..game.n_players() {
        let spec = SupportSpec {
            per_set: (0..game.own_sets(i).len())
                .map(|set| SetSpec::Fixed(fallback[i].at(set).clone()))
                .collect(),
        };
        let all: Vec<usize> = (0..game.n_strategies(i)).collect();
        let keep = filter_pool(opts.exec, &all, |s| {
            Ok(exists_belief_system(game, i, s, &spec, RationalityFlavor::Strong, opts.mode)?
                .is_some())
        })?;
        level.push(keep);
    }
    solution.push_level(game, &level, Vec::new());
    history.push(level);

    for k in 2..=k_max {
        let mut level = Vec::new();
        let mut prescribed = Vec::new();
        for i in 0..game.n_players() {
            let mut per_set = Vec::new();
            let mut shown = Vec::new();
            for set in 0..game.own_sets(i).len() {
                let reach = game.reach_list(i, set)?;
                let mut found = None;
                for l in (1..k).rev() {
                    let cand = intersect(&joint_codes(game, i, &history[(l - 1) as usize]), reach);
                    if !cand.is_empty() {
                        found = Some((l, cand));
                        break;
                    }
                }
                match found {
                    Some((l, cand)) => {
                        shown.push(json!({ "info_set": set, "level": l, "support": cand }));
                        per_set.push(SetSpec::Any(cand));
                    }
                    None => {
                        shown.push(json!({ "info_set": set, "fallback": true }));
                        per_set.push(SetSpec::Fixed(fallback[i].at(set).clone()));
                    }
                }
            }
            let spec = SupportSpec { per_set };
            let all: Vec<usize> = (0..game.n_strategies(i)).collect();
            let keep = filter_pool(opts.exec, &all, |s| {
                Ok(exists_belief_system(game, i, s, &spec, RationalityFlavor::Strong, opts.mode)?
                    .is_some())
            })?;
            prescribed.push(Some(json!(shown)));
            level.push(keep);
        }
        solution.push_level(game, &level, prescribed);
        history.push(level);
    }
    if k_max >= 2 {
        solution.detect_and_set_cycle();
    }
    Ok(solution)
}

/// Iterated conditional strict dominance. At each round a strategy is removed
/// when, at some information set it reaches that some surviving opponent
/// profile also reaches, it is strictly dominated on those profiles by a
/// mixture of the player's surviving strategies (whole-game payoffs). Both
/// players are reduced simultaneously; the sequence is nested.
pub fn strong_rationalizability(game: &Game, k_max: u32, opts: Options) -> Result<LevelSolution> {
    check_levels(k_max)?;
    let mut solution = LevelSolution::new(
        crate::concept::STRONG_RATIONALIZABILITY,
        json!({ "k": k_max }),
    );
    let mut pools = full_pools(game);
    for _k in 1..=k_max {
        let mut next = Vec::new();
        for i in 0..game.n_players() {
            // columns per own set, from the current pools of both players
            let mut cols_per_set = Vec::new();
            for set in 0..game.own_sets(i).len() {
                let reach = game.reach_list(i, set)?;
                cols_per_set.push(intersect(&joint_codes(game, i, &pools), reach));
            }
            let keep = filter_pool(opts.exec, &pools[i], |s| {
                for set in 0..game.own_sets(i).len() {
                    if !game.strat_reaches(i, set, s) {
                        continue;
                    }
                    let cols = &cols_per_set[set];
                    if cols.is_empty() {
                        continue;
                    }
                    let rows: Vec<Vec<_>> = pools[i]
                        .iter()
                        .map(|&t| {
                            cols.iter()
                                .map(|&c| game.eu(&game.full_profile(i, t, c), i))
                                .collect()
                        })
                        .collect();
                    let target: Vec<_> = cols
                        .iter()
                        .map(|&c| game.eu(&game.full_profile(i, s, c), i))
                        .collect();
                    if dominated_by_mixture(&rows, &target, DominanceKind::Strict).is_some() {
                        return Ok(false);
                    }
                }
                Ok(true)
            })?;
            next.push(keep);
        }
        solution.push_level(game, &next, Vec::new());
        pools = next;
    }
    if k_max >= 2 {
        solution.detect_and_set_cycle();
    }
    Ok(solution)
}
