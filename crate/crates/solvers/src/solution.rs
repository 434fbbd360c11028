//! The common result shape every solver returns.
//!
//! A `LevelSolution` lists, level by level, each player's surviving strategy
//! set (indices and labels), an emptiness flag, and optionally the support
//! prescription the level was computed under. A trailing `cycle` records
//! eventual periodicity when the computed levels exhibit one.

use game_core::{Game, GameError, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PlayerRow {
    pub player: String,
    /// Sorted surviving strategy indices.
    pub strategy_indices: Vec<usize>,
    /// Labels matching `strategy_indices`.
    pub strategies: Vec<String>,
    /// True when the set died out (distinct from "full set": a solver that
    /// can empty out keeps reporting later levels with this flag raised).
    pub empty: bool,
    /// What supports the level was computed under, when the concept
    /// prescribes them per information set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prescribed: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LevelRow {
    pub k: u32,
    pub players: Vec<PlayerRow>,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Cycle {
    pub start: u32,
    pub period: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LevelSolution {
    pub concept: String,
    pub parameters: serde_json::Value,
    pub levels: Vec<LevelRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Cycle>,
}

impl LevelSolution {
    pub fn new(concept: &str, parameters: serde_json::Value) -> LevelSolution {
        LevelSolution {
            concept: concept.to_string(),
            parameters,
            levels: Vec::new(),
            cycle: None,
        }
    }

    /// Append one level; `prescribed` may carry one entry per player.
    pub fn push_level(
        &mut self,
        game: &Game,
        sets: &[Vec<usize>],
        mut prescribed: Vec<Option<serde_json::Value>>,
    ) {
        prescribed.resize(sets.len(), None);
        let k = self.levels.len() as u32 + 1;
        let players = sets
            .iter()
            .zip(prescribed)
            .enumerate()
            .map(|(i, (set, pres))| PlayerRow {
                player: game.player_name(i).to_string(),
                strategies: set
                    .iter()
                    .map(|&s| game.strategy_label(i, s))
                    .collect(),
                strategy_indices: set.clone(),
                empty: set.is_empty(),
                prescribed: pres,
            })
            .collect();
        self.levels.push(LevelRow { k, players });
    }

    /// The surviving set of one player at one level (1-based).
    pub fn set(&self, k: u32, player: usize) -> &[usize] {
        &self.levels[k as usize - 1].players[player].strategy_indices
    }

    pub fn depth(&self) -> u32 {
        self.levels.len() as u32
    }

    /// Run cycle detection over the stored levels and record the result.
    pub fn detect_and_set_cycle(&mut self) {
        let sets: Vec<Vec<Vec<usize>>> = self
            .levels
            .iter()
            .map(|row| {
                row.players
                    .iter()
                    .map(|p| p.strategy_indices.clone())
                    .collect()
            })
            .collect();
        self.cycle = detect_cycle(&sets).ok().flatten();
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("solution serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LevelSolution> {
        serde_json::from_value(v.clone())
            .map_err(|e| GameError::Json(format!("solution: {e}")))
    }
}

/// Eventual periodicity of a level sequence: the earliest start `s` and, for
/// it, the smallest period `p` such that every computed level from `s` on
/// repeats with period `p` (a reached fixed point is a period-1 cycle).
/// Needs at least two computed levels; the repetition must be observed at
/// least once, i.e. `s + p` must lie within the computed range.
pub fn detect_cycle(levels: &[Vec<Vec<usize>>]) -> Result<Option<Cycle>> {
    let n = levels.len();
    if n < 2 {
        return Err(GameError::Validation(
            "cycle detection needs at least two computed levels".into(),
        ));
    }
    for start in 1..=n as u32 {
        for period in 1..=(n as u32 - start) {
            let ok = (start..=n as u32 - period)
                .all(|j| levels[(j - 1) as usize] == levels[(j + period - 1) as usize]);
            if ok {
                return Ok(Some(Cycle { start, period }));
            }
        }
    }
    Ok(None)
}

/// Terminal nodes reachable when every player picks any strategy from their
/// set (all combinations). Chance branches contribute all their successors.
pub fn outcome_set(game: &Game, sets: &[Vec<usize>]) -> std::collections::BTreeSet<usize> {
    let mut out = std::collections::BTreeSet::new();
    if sets.iter().any(|pool| pool.is_empty()) {
        return out;
    }
    let total: usize = sets.iter().map(|s| s.len()).product();
    for mut flat in 0..total {
        let mut acts = Vec::with_capacity(sets.len());
        for (i, pool) in sets.iter().enumerate() {
            acts.push(game.strategy(i, pool[flat % pool.len()]));
            flat /= pool.len();
        }
        game.walk_terminals(&acts, |t, _| {
            out.insert(t);
        });
    }
    out
}
