//! Level-k reasoning and iterated reduction with continuation-plan
//! rationality: at every own information set — reached or not — the
//! strategy's plan from there onward must be optimal under some admissible
//! belief, holding the play before the set fixed.

use beliefs::{
    exists_belief_system, BeliefSystem, RationalityFlavor, SetSpec, SupportSpec,
};
use game_core::{Game, Result};
use serde_json::json;

use crate::exec::filter_pool;
use crate::normal::check_levels;
use crate::pools::{bracket_support, full_pools};
use crate::solution::LevelSolution;
use crate::strong::check_systems;
use crate::Options;

fn fixed_spec(game: &Game, system: &BeliefSystem) -> SupportSpec {
    SupportSpec {
        per_set: (0..game.own_sets(system.player).len())
            .map(|set| SetSpec::Fixed(system.at(set).clone()))
            .collect(),
    }
}

fn support_spec(
    game: &Game,
    i: usize,
    pools: &[Vec<usize>],
) -> Result<(SupportSpec, Vec<serde_json::Value>)> {
    let mut per_set = Vec::new();
    let mut shown = Vec::new();
    for set in 0..game.own_sets(i).len() {
        let sup = bracket_support(game, i, set, pools)?;
        shown.push(json!({ "info_set": set, "support": sup }));
        per_set.push(SetSpec::Any(sup));
    }
    Ok((SupportSpec { per_set }, shown))
}

/// Level-k reasoning under continuation rationality. Level 1 uses the given
/// belief systems verbatim; at level k beliefs at each set range over the
/// opponents' level-(k-1) profiles that reach it and whose continuation play
/// matches a level-(k-1) survivor, with the whole reach set as fallback.
/// Not nested; may cycle.
pub fn backward_level_k(
    game: &Game,
    fallback: &[BeliefSystem],
    k_max: u32,
    opts: Options,
) -> Result<LevelSolution> {
    check_levels(k_max)?;
    check_systems(game, fallback)?;
    let mut solution = LevelSolution::new(
        crate::concept::BACKWARD_LEVEL_K,
        json!({
            "k": k_max,
            "fallback": fallback.iter().map(|s| s.to_json(game)).collect::<Vec<_>>(),
        }),
    );

    let mut prev: Vec<Vec<usize>> = Vec::new();
    for i in 0..game.n_players() {
        let spec = fixed_spec(game, &fallback[i]);
        let all: Vec<usize> = (0..game.n_strategies(i)).collect();
        let keep = filter_pool(opts.exec, &all, |s| {
            Ok(
                exists_belief_system(game, i, s, &spec, RationalityFlavor::Continuation, opts.mode)?
                    .is_some(),
            )
        })?;
        prev.push(keep);
    }
    solution.push_level(game, &prev, Vec::new());

    for _k in 2..=k_max {
        let mut level = Vec::new();
        let mut prescribed = Vec::new();
        for i in 0..game.n_players() {
            let (spec, shown) = support_spec(game, i, &prev)?;
            let all: Vec<usize> = (0..game.n_strategies(i)).collect();
            let keep = filter_pool(opts.exec, &all, |s| {
                Ok(exists_belief_system(
                    game,
                    i,
                    s,
                    &spec,
                    RationalityFlavor::Continuation,
                    opts.mode,
                )?
                .is_some())
            })?;
            prescribed.push(Some(json!(shown)));
            level.push(keep);
        }
        solution.push_level(game, &level, prescribed);
        prev = level;
    }
    if k_max >= 2 {
        solution.detect_and_set_cycle();
    }
    Ok(solution)
}

/// Iterated reduction under continuation rationality. Level 1 admits any
/// belief over the reach set at each own set; level k restricts candidates to
/// the previous level and beliefs to opponents' previous-level continuation
/// play where possible. Nested.
pub fn backward_rationalizability(game: &Game, k_max: u32, opts: Options) -> Result<LevelSolution> {
    check_levels(k_max)?;
    let mut solution = LevelSolution::new(
        crate::concept::BACKWARD_RATIONALIZABILITY,
        json!({ "k": k_max }),
    );

    let mut pools = full_pools(game);
    for k in 1..=k_max {
        let mut level = Vec::new();
        let mut prescribed = Vec::new();
        for i in 0..game.n_players() {
            let (spec, shown) = if k == 1 {
                let mut per_set = Vec::new();
                let mut shown = Vec::new();
                for set in 0..game.own_sets(i).len() {
                    let reach = game.reach_list(i, set)?.to_vec();
                    shown.push(json!({ "info_set": set, "support": reach }));
                    per_set.push(SetSpec::Any(reach));
                }
                (SupportSpec { per_set }, shown)
            } else {
                support_spec(game, i, &pools)?
            };
            let keep = filter_pool(opts.exec, &pools[i], |s| {
                Ok(exists_belief_system(
                    game,
                    i,
                    s,
                    &spec,
                    RationalityFlavor::Continuation,
                    opts.mode,
                )?
                .is_some())
            })?;
            prescribed.push(Some(json!(shown)));
            level.push(keep);
        }
        solution.push_level(game, &level, prescribed);
        pools = level;
    }
    if k_max >= 2 {
        solution.detect_and_set_cycle();
    }
    Ok(solution)
}
