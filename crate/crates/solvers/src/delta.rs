//! Rationalizability under an explicit restriction on first-order beliefs.
//!
//! Each player comes with a finite menu of belief systems. A strategy
//! survives a level when some menu entry certifies it: the entry must respect
//! what the player has learned (certainty of the opponents' previous level
//! wherever that is consistent with being reached) and make the strategy
//! sequentially rational.

use beliefs::{
    exists_belief_system, BeliefSystem, RationalityFlavor, SetSpec, SupportSpec,
};
use game_core::{Game, GameError, Result};
use serde_json::json;

use crate::exec::filter_pool;
use crate::normal::check_levels;
use crate::pools::{intersect, joint_codes};
use crate::solution::LevelSolution;
use crate::Options;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaVariant {
    /// Beliefs must come from the menu at every level. The sequence may hit
    /// the empty set when no menu entry respects the learned restrictions;
    /// later levels then stay empty.
    Standard,
    /// Beyond level 1 the menu is dropped: any belief system concentrated on
    /// the opponents' previous level (where consistent) will do.
    Modified,
}

impl DeltaVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            DeltaVariant::Standard => "standard",
            DeltaVariant::Modified => "modified",
        }
    }
}

fn fixed_spec(game: &Game, system: &BeliefSystem) -> SupportSpec {
    SupportSpec {
        per_set: (0..game.own_sets(system.player).len())
            .map(|set| SetSpec::Fixed(system.at(set).clone()))
            .collect(),
    }
}

pub fn delta_rationalizability(
    game: &Game,
    delta: &[Vec<BeliefSystem>],
    variant: DeltaVariant,
    k_max: u32,
    opts: Options,
) -> Result<LevelSolution> {
    check_levels(k_max)?;
    if delta.len() != game.n_players() {
        return Err(GameError::Validation(format!(
            "need one belief-system menu per player, got {}",
            delta.len()
        )));
    }
    for (i, menu) in delta.iter().enumerate() {
        if menu.is_empty() {
            return Err(GameError::Validation(format!(
                "belief-system menu of {} is empty",
                game.player_name(i)
            )));
        }
        for sys in menu {
            if sys.player != i {
                return Err(GameError::Validation(format!(
                    "menu of {} contains a system for {}",
                    game.player_name(i),
                    game.player_name(sys.player)
                )));
            }
            if sys.beliefs.len() != game.own_sets(i).len() {
                return Err(GameError::Validation(format!(
                    "a menu entry of {} covers {} info sets, game has {}",
                    game.player_name(i),
                    sys.beliefs.len(),
                    game.own_sets(i).len()
                )));
            }
            let (reaching, _) = sys.check_axioms(game)?;
            if !reaching {
                return Err(GameError::Validation(format!(
                    "a menu entry of {} puts weight on profiles that do not reach its set",
                    game.player_name(i)
                )));
            }
        }
    }

    let mut solution = LevelSolution::new(
        crate::concept::DELTA_RATIONALIZABILITY,
        json!({
            "k": k_max,
            "variant": variant.as_str(),
            "delta": delta
                .iter()
                .map(|menu| menu.iter().map(|s| s.to_json(game)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        }),
    );

    // level 1: rational under some menu entry, no learning yet
    let mut pools = Vec::new();
    for i in 0..game.n_players() {
        let specs: Vec<SupportSpec> = delta[i].iter().map(|b| fixed_spec(game, b)).collect();
        let all: Vec<usize> = (0..game.n_strategies(i)).collect();
        let keep = filter_pool(opts.exec, &all, |s| {
            for spec in &specs {
                if exists_belief_system(game, i, s, spec, RationalityFlavor::Strong, opts.mode)?
                    .is_some()
                {
                    return Ok(true);
                }
            }
            Ok(false)
        })?;
        pools.push(keep);
    }
    solution.push_level(game, &pools, Vec::new());

    for _k in 2..=k_max {
        let mut next = Vec::new();
        let mut prescribed = Vec::new();
        for i in 0..game.n_players() {
            // where the opponents' previous level is consistent with reaching
            let prev_codes = joint_codes(game, i, &pools);
            let mut cands = Vec::new();
            for set in 0..game.own_sets(i).len() {
                let reach = game.reach_list(i, set)?;
                cands.push((intersect(&prev_codes, reach), reach.to_vec()));
            }
            let keep = match variant {
                DeltaVariant::Standard => {
                    let specs: Vec<SupportSpec> =
                        delta[i].iter().map(|b| fixed_spec(game, b)).collect();
                    filter_pool(opts.exec, &pools[i], |s| {
                        'menu: for (b, spec) in delta[i].iter().zip(&specs) {
                            for (set, (cand, _)) in cands.iter().enumerate() {
                                if !cand.is_empty() && !b.at(set).concentrated_on(cand) {
                                    continue 'menu;
                                }
                            }
                            if exists_belief_system(
                                game,
                                i,
                                s,
                                spec,
                                RationalityFlavor::Strong,
                                opts.mode,
                            )?
                            .is_some()
                            {
                                return Ok(true);
                            }
                        }
                        Ok(false)
                    })?
                }
                DeltaVariant::Modified => {
                    let spec = SupportSpec {
                        per_set: cands
                            .iter()
                            .map(|(cand, reach)| {
                                if cand.is_empty() {
                                    SetSpec::Any(reach.clone())
                                } else {
                                    SetSpec::Any(cand.clone())
                                }
                            })
                            .collect(),
                    };
                    filter_pool(opts.exec, &pools[i], |s| {
                        Ok(exists_belief_system(
                            game,
                            i,
                            s,
                            &spec,
                            RationalityFlavor::Strong,
                            opts.mode,
                        )?
                        .is_some())
                    })?
                }
            };
            prescribed.push(Some(json!({
                "certain_of": cands
                    .iter()
                    .enumerate()
                    .map(|(set, (cand, _))| json!({ "info_set": set, "support": cand }))
                    .collect::<Vec<_>>(),
            })));
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
