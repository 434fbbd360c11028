//! Exact finite extensive-form games.
//!
//! This crate owns the game representation everything else builds on:
//! trees with decision, chance, and terminal nodes; simultaneous movers;
//! information sets with perfect recall; pure-strategy enumeration; exact
//! rational expected utilities (conditional and unconditional); reachability
//! queries; the normal-form reduction; and perfect-information node ranks.

pub mod error;
pub mod game;
pub mod normal_form;
pub mod rank;
pub mod rational;
pub mod raw;

pub use error::{GameError, Result};
pub use game::{Game, InfoSet, NodeKind, PROFILE_CAP, STRATEGY_CAP};
pub use normal_form::{to_normal_form, NormalForm};
pub use rank::subgame_rank;
pub use rational::{format_rat, parse_rat, rat, rat_i, render_pct, Rat};
pub use raw::RawGame;
