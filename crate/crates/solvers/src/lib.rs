//! Iterative solution concepts for finite extensive-form games.
//!
//! Every solver maps a game (plus concept-specific parameters) to a
//! [`LevelSolution`]: per level, per player, the exact set of surviving pure
//! strategies, with the supports that justified them and an optional detected
//! cycle. All arithmetic is exact rational; results are deterministic and
//! independent of the execution backend.
//!
//! The concepts split along two axes. *Rationality*: whole-game expected
//! utility (`normal_form_level_k`, `rationalizability`), rationality at every
//! reached information set (`strong_level_k`, `strong_rationalizability`,
//! `delta_rationalizability`, `prudent_rationalizability`,
//! `iterated_admissibility`), or continuation-plan rationality at every set
//! reached or not (`backward_level_k`, `backward_rationalizability`,
//! `backward_induction_k`). *Aggregation*: level-k sequences best-reply to
//! the opponents' previous level from a fixed starting belief and need not
//! shrink; the iterated reductions are nested and shrink to a fixed point.

pub mod admissibility;
pub mod backward;
pub mod delta;
pub mod exec;
pub mod induction;
pub mod normal;
pub mod pools;
pub mod solution;
pub mod strong;

pub use admissibility::{iterated_admissibility, prudent_rationalizability};
pub use backward::{backward_level_k, backward_rationalizability};
pub use beliefs::SystemMode;
pub use delta::{delta_rationalizability, DeltaVariant};
pub use exec::Execution;
pub use induction::backward_induction_k;
pub use normal::{normal_form_level_k, rationalizability, uniform_profile_beliefs};
pub use solution::{detect_cycle, outcome_set, Cycle, LevelRow, LevelSolution, PlayerRow};
pub use strong::{strong_level_k, strong_rationalizability};

use beliefs::uniform_system;
use game_core::{Game, GameError, Result};

/// Canonical identifiers for the solution concepts, as used on the command
/// line and in serialized solutions.
pub mod concept {
    pub const NORMAL_FORM_LEVEL_K: &str = "normal-form-level-k";
    pub const NORMAL_FORM_RATIONALIZABILITY: &str = "normal-form-rationalizability";
    pub const STRONG_LEVEL_K: &str = "strong-level-k";
    pub const STRONG_RATIONALIZABILITY: &str = "strong-rationalizability";
    pub const DELTA_RATIONALIZABILITY: &str = "delta-rationalizability";
    pub const ITERATED_ADMISSIBILITY: &str = "iterated-admissibility";
    pub const PRUDENT_RATIONALIZABILITY: &str = "prudent-rationalizability";
    pub const BACKWARD_LEVEL_K: &str = "backward-level-k";
    pub const BACKWARD_RATIONALIZABILITY: &str = "backward-rationalizability";
    pub const BACKWARD_INDUCTION_K: &str = "backward-induction-k";

    pub const ALL: &[&str] = &[
        NORMAL_FORM_LEVEL_K,
        NORMAL_FORM_RATIONALIZABILITY,
        STRONG_LEVEL_K,
        STRONG_RATIONALIZABILITY,
        DELTA_RATIONALIZABILITY,
        ITERATED_ADMISSIBILITY,
        PRUDENT_RATIONALIZABILITY,
        BACKWARD_LEVEL_K,
        BACKWARD_RATIONALIZABILITY,
        BACKWARD_INDUCTION_K,
    ];
}

/// How a solver runs: belief-system discipline and execution backend.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// `Local`: each information set justified on its own. `Strict`: one
    /// belief system per player, beliefs linked by conditioning.
    pub mode: SystemMode,
    pub exec: Execution,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            mode: SystemMode::Local,
            exec: Execution::default(),
        }
    }
}

/// Runs the concept with the given identifier using default parameters where
/// the concept takes any: uniform whole-game beliefs for
/// `normal-form-level-k`, uniform belief systems for `strong-level-k` and
/// `backward-level-k`, and a one-entry uniform menu for
/// `delta-rationalizability` (suffix `-modified` selects the other variant).
pub fn solve_with_defaults(
    game: &Game,
    concept_id: &str,
    k_max: u32,
    opts: Options,
) -> Result<LevelSolution> {
    let uniform_systems = || -> Result<Vec<beliefs::BeliefSystem>> {
        (0..game.n_players()).map(|i| uniform_system(game, i)).collect()
    };
    let uniform_menu = || -> Result<Vec<Vec<beliefs::BeliefSystem>>> {
        Ok(uniform_systems()?.into_iter().map(|s| vec![s]).collect())
    };
    match concept_id {
        concept::NORMAL_FORM_LEVEL_K => {
            normal_form_level_k(game, &uniform_profile_beliefs(game), k_max, opts)
        }
        concept::NORMAL_FORM_RATIONALIZABILITY => rationalizability(game, k_max, opts),
        concept::STRONG_LEVEL_K => strong_level_k(game, &uniform_systems()?, k_max, opts),
        concept::STRONG_RATIONALIZABILITY => strong_rationalizability(game, k_max, opts),
        concept::DELTA_RATIONALIZABILITY => {
            delta_rationalizability(game, &uniform_menu()?, DeltaVariant::Standard, k_max, opts)
        }
        "delta-rationalizability-modified" => {
            delta_rationalizability(game, &uniform_menu()?, DeltaVariant::Modified, k_max, opts)
        }
        concept::ITERATED_ADMISSIBILITY => iterated_admissibility(game, k_max, opts),
        concept::PRUDENT_RATIONALIZABILITY => prudent_rationalizability(game, k_max, opts),
        concept::BACKWARD_LEVEL_K => backward_level_k(game, &uniform_systems()?, k_max, opts),
        concept::BACKWARD_RATIONALIZABILITY => backward_rationalizability(game, k_max, opts),
        concept::BACKWARD_INDUCTION_K => backward_induction_k(game, k_max, opts),
        other => Err(GameError::NotFound(format!("unknown concept {other:?}"))),
    }
}
