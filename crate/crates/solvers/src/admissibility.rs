//! Iterated admissibility and prudent (cautious) rationalizability.

use beliefs::{
    dominated_by_mixture, exists_belief_system, DominanceKind, RationalityFlavor, SetSpec,
    SupportSpec,
};
use game_core::{Game, Result};
use serde_json::json;

use crate::exec::filter_pool;
use crate::normal::check_levels;
use crate::pools::{full_pools, intersect, joint_codes};
use crate::solution::LevelSolution;
use crate::Options;

/// Iterated elimination of weakly dominated strategies, both players reduced
/// simultaneously. Columns are the surviving opponent profiles (no reach
/// filtering), payoffs are whole-game expected utilities.
pub fn iterated_admissibility(game: &Game, k_max: u32, opts: Options) -> Result<LevelSolution> {
    check_levels(k_max)?;
    let mut solution =
        LevelSolution::new(crate::concept::ITERATED_ADMISSIBILITY, json!({ "k": k_max }));
    let mut pools = full_pools(game);
    for _k in 1..=k_max {
        let mut next = Vec::new();
        for i in 0..game.n_players() {
            let cols = joint_codes(game, i, &pools);
            let rows: Vec<Vec<_>> = pools[i]
                .iter()
                .map(|&t| {
                    cols.iter()
                        .map(|&c| game.eu(&game.full_profile(i, t, c), i))
                        .collect()
                })
                .collect();
            let keep = filter_pool(opts.exec, &pools[i], |s| {
                let target: Vec<_> = cols
                    .iter()
                    .map(|&c| game.eu(&game.full_profile(i, s, c), i))
                    .collect();
                Ok(dominated_by_mixture(&rows, &target, DominanceKind::Weak).is_none())
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

/// Cautious counterpart of iterated set-by-set best response: at every level
/// each belief must put positive weight on *every* surviving opponent profile
/// that reaches the set (full support), falling back to full support over all
/// reaching profiles when no survivor reaches. Nested.
pub fn prudent_rationalizability(game: &Game, k_max: u32, opts: Options) -> Result<LevelSolution> {
    check_levels(k_max)?;
    let mut solution = LevelSolution::new(
        crate::concept::PRUDENT_RATIONALIZABILITY,
        json!({ "k": k_max }),
    );
    let mut pools = full_pools(game);
    for _k in 1..=k_max {
        let mut next = Vec::new();
        let mut prescribed = Vec::new();
        for i in 0..game.n_players() {
            let mut per_set = Vec::new();
            let mut shown = Vec::new();
            for set in 0..game.own_sets(i).len() {
                let reach = game.reach_list(i, set)?;
                let cand = intersect(&joint_codes(game, i, &pools), reach);
                if cand.is_empty() {
                    shown.push(json!({ "info_set": set, "support": reach, "full": false }));
                    per_set.push(SetSpec::Any(reach.to_vec()));
                } else {
                    shown.push(json!({ "info_set": set, "support": cand, "full": true }));
                    per_set.push(SetSpec::Full(cand));
                }
            }
            let spec = SupportSpec { per_set };
            let keep = filter_pool(opts.exec, &pools[i], |s| {
                Ok(exists_belief_system(game, i, s, &spec, RationalityFlavor::Strong, opts.mode)?
                    .is_some())
            })?;
            prescribed.push(Some(json!(shown)));
            next.push(keep);
        }
        solution.push_level(game, &next, prescribed);
        pools = next;
    }
    if k_max >= 2 {
        solution.detect_and_set_cycle();
    }
    Ok(solution)
}
