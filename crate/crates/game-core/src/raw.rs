//! The on-disk JSON shape of a game, prior to validation.
//!
//! A game file is an object with `players`, `root`, `nodes`, `info_sets`.
//! Every node carries a `kind` of `"decision"`, `"chance"`, or `"terminal"`
//! and exactly the fields that kind requires:
//!
//! - decision: `movers` (player names; several movers = a simultaneous move)
//!   and `actions`, a list of `{profile, child}` edges where `profile` lists
//!   one action label per mover, in mover order. The edges must form the
//!   full Cartesian product of each mover's action labels.
//! - chance: `chance_probs`, a list of `{child, prob}` with positive rational
//!   probabilities summing to 1.
//! - terminal: `payoffs`, one rational string per player, in player order.
//!
//! `info_sets` lists `{player, members}` groups; every (node, mover) pair
//! must belong to exactly one group of that mover. Unknown fields anywhere
//! are rejected.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGame {
    pub players: Vec<String>,
    pub root: String,
    pub nodes: Vec<RawNode>,
    pub info_sets: Vec<RawInfoSet>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawNode {
    pub id: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub movers: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actions: Option<Vec<RawEdge>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chance_probs: Option<Vec<RawChance>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payoffs: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawEdge {
    pub profile: Vec<String>,
    pub child: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawChance {
    pub child: String,
    pub prob: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawInfoSet {
    pub player: String,
    pub members: Vec<String>,
}
