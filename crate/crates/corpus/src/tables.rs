//! Reference solution tables shipped with the corpus.
//!
//! `data/reference_tables.json` records, for each bundled game, the solution
//! sets a concept is documented to produce at each level, written in a small
//! pattern language:
//!
//! - `"ALL"` — the player's entire strategy set;
//! - a label with `*` coordinates, e.g. `"(In,*)"` — every strategy matching
//!   the fixed coordinates;
//! - anything else — a literal strategy label (an unknown label matches
//!   nothing, so a typo can only ever *fail* a comparison).
//!
//! Cells are stored fully expanded per level; a `cycles` section records
//! where a table marks a periodic continuation instead of listing levels.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use game_core::Game;
use serde_json::Value;

/// level -> list of cell patterns, for one (game, concept, player) column.
pub type Column = BTreeMap<u32, Vec<String>>;

/// One game's reference table: documented depth plus per-concept columns.
pub struct GameTable {
    depth: u32,
    /// concept id -> player name -> column
    concepts: BTreeMap<String, BTreeMap<String, Column>>,
}

impl GameTable {
    /// Deepest level the table documents.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn concepts(&self) -> impl Iterator<Item = &str> {
        self.concepts.keys().map(|s| s.as_str())
    }

    pub fn column(&self, concept: &str, player: &str) -> Option<&Column> {
        self.concepts.get(concept)?.get(player)
    }

    /// Raw cell patterns for one (concept, player, level).
    pub fn cell(&self, concept: &str, player: &str, k: u32) -> Option<&[String]> {
        Some(self.column(concept, player)?.get(&k)?.as_slice())
    }
}

/// All reference tables plus the cycle markers.
pub struct ReferenceTables {
    games: BTreeMap<String, GameTable>,
    /// game id -> concept id -> (start, period)
    cycles: BTreeMap<String, BTreeMap<String, (u32, u32)>>,
}

impl ReferenceTables {
    pub fn games(&self) -> impl Iterator<Item = &str> {
        self.games.keys().map(|s| s.as_str())
    }

    pub fn table(&self, game: &str) -> Option<&GameTable> {
        self.games.get(game)
    }

    /// The (start, period) a table documents for a cycling concept, if any.
    pub fn cycle(&self, game: &str, concept: &str) -> Option<(u32, u32)> {
        self.cycles.get(game)?.get(concept).copied()
    }

    pub fn cycles(&self) -> impl Iterator<Item = (&str, &str, (u32, u32))> {
        self.cycles.iter().flat_map(|(g, m)| {
            m.iter().map(move |(c, &sp)| (g.as_str(), c.as_str(), sp))
        })
    }
}

/// The parsed reference tables (parsed once, then shared).
pub fn reference_tables() -> &'static ReferenceTables {
    static TABLES: OnceLock<ReferenceTables> = OnceLock::new();
    TABLES.get_or_init(|| parse(include_str!("../data/reference_tables.json")))
}

fn parse(text: &str) -> ReferenceTables {
    let top: Value = serde_json::from_str(text).expect("reference tables JSON");
    let obj = top.as_object().expect("top-level object");
    let mut games = BTreeMap::new();
    let mut cycles = BTreeMap::new();
    for (key, val) in obj {
        match key.as_str() {
            "_format" => {}
            "cycles" => {
                for (game, per) in val.as_object().expect("cycles object") {
                    let mut m = BTreeMap::new();
                    for (concept, sp) in per.as_object().expect("cycle entry") {
                        let start = sp["start"].as_u64().expect("cycle start") as u32;
                        let period = sp["period"].as_u64().expect("cycle period") as u32;
                        m.insert(concept.clone(), (start, period));
                    }
                    cycles.insert(game.clone(), m);
                }
            }
            _ => {
                let body = val.as_object().expect("game table object");
                let depth = body["depth"].as_u64().expect("table depth") as u32;
                let mut concepts = BTreeMap::new();
                for (concept, players) in body {
                    if concept == "depth" {
                        continue;
                    }
                    let mut per_player = BTreeMap::new();
                    for (player, col) in players.as_object().expect("player map") {
                        let mut column = Column::new();
                        for (k, cell) in col.as_object().expect("level map") {
                            let patterns = cell
                                .as_array()
                                .expect("cell array")
                                .iter()
                                .map(|p| p.as_str().expect("pattern string").to_string())
                                .collect();
                            column.insert(k.parse().expect("level number"), patterns);
                        }
                        per_player.insert(player.clone(), column);
                    }
                    concepts.insert(concept.clone(), per_player);
                }
                games.insert(key.clone(), GameTable { depth, concepts });
            }
        }
    }
    ReferenceTables { games, cycles }
}

/// Expand cell patterns to the sorted strategy indices of `player` they match.
pub fn expand_cell(game: &Game, player: usize, patterns: &[String]) -> Vec<usize> {
    let n = game.n_strategies(player);
    let mut hit = vec![false; n];
    for p in patterns {
        if p == "ALL" {
            hit.iter_mut().for_each(|h| *h = true);
            continue;
        }
        match split_coords(p) {
            Some(coords) if coords.iter().any(|c| c == "*") => {
                for (s, h) in hit.iter_mut().enumerate() {
                    if matches_coords(game, player, s, &coords) {
                        *h = true;
                    }
                }
            }
            _ => {
                // literal label; unknown labels simply match nothing
                for (s, h) in hit.iter_mut().enumerate() {
                    if game.strategy_label(player, s) == *p {
                        *h = true;
                    }
                }
            }
        }
    }
    (0..n).filter(|&s| hit[s]).collect()
}

/// `"(a,b)"` -> `["a","b"]`; a bare label -> `["label"]`; `"()"` -> `[]`.
fn split_coords(p: &str) -> Option<Vec<String>> {
    let inner = if let Some(stripped) = p.strip_prefix('(') {
        stripped.strip_suffix(')')?
    } else {
        p
    };
    if inner.is_empty() {
        return Some(Vec::new());
    }
    Some(inner.split(',').map(|s| s.trim().to_string()).collect())
}

fn matches_coords(game: &Game, player: usize, s: usize, coords: &[String]) -> bool {
    let acts = game.strategy(player, s);
    if acts.len() != coords.len() {
        return false;
    }
    acts.iter().enumerate().all(|(set, &a)| {
        coords[set] == "*" || game.action_label(player, set, a) == coords[set]
    })
}
