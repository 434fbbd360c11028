//! The bundled game corpus.
//!
//! Twelve small two-player extensive-form games used throughout the test
//! suite and exposed by the CLI (`list-games`, `export-corpus`, and the
//! `game:` shorthand accepted wherever a game file is expected). Each entry
//! embeds its JSON source, so the corpus needs no files at runtime.
//!
//! Also home to the printed reference tables the acceptance suite checks
//! against ([`tables`]) and seeded random-game generators ([`gen`]).

pub mod gen;
pub mod tables;

use game_core::raw::{RawEdge, RawInfoSet, RawNode};
use game_core::{format_rat, Game, GameError, Rat, RawGame, Result};

/// One bundled game: stable id, a one-line description, and the JSON text.
pub struct CorpusEntry {
    pub id: &'static str,
    pub note: &'static str,
    pub json: &'static str,
}

macro_rules! entry {
    ($id:literal, $note:literal) => {
        CorpusEntry {
            id: $id,
            note: $note,
            json: include_str!(concat!("../data/games/", $id, ".json")),
        }
    };
}

static ENTRIES: &[CorpusEntry] = &[
    entry!(
        "matching-pennies-variant",
        "asymmetric matching pennies; its best-reply dynamic cycles with period 4"
    ),
    entry!(
        "centipede",
        "five-legged centipede with alternating take/pass moves"
    ),
    entry!(
        "reny",
        "four-stage alternating game where quitting first is backward-induction optimal"
    ),
    entry!(
        "hms",
        "two rounds of simultaneous exit/continue choices"
    ),
    entry!(
        "hms2",
        "three-action opening where the second mover cannot tell b from c"
    ),
    entry!(
        "hms3",
        "like hms2 with one payoff raised, flipping which refinements coincide"
    ),
    entry!(
        "bos1",
        "battle of the sexes behind an outside option worth 3"
    ),
    entry!(
        "bos2",
        "battle of the sexes behind an outside option worth 2"
    ),
    entry!(
        "bos3",
        "intensified battle of the sexes behind an outside option worth 1"
    ),
    entry!(
        "cooper",
        "outside option worth 300 in front of a 2x2 coordination stage"
    ),
    entry!(
        "bn",
        "outside option worth 7 in front of a 2x2 stage with an efficient risky corner"
    ),
    entry!(
        "er",
        "outside option worth 2 in front of a 2x2 stage with opposed favorites"
    ),
];

/// All bundled games, in corpus order.
pub fn entries() -> &'static [CorpusEntry] {
    ENTRIES
}

/// Ids of all bundled games, in corpus order.
pub fn ids() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.id).collect()
}

/// Load and validate a bundled game by id.
pub fn load(id: &str) -> Result<Game> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| GameError::NotFound(format!("no bundled game named `{id}`")))?;
    Game::from_json(entry.json)
}

/// Battle-of-the-sexes family: player 1 chooses Out (ending the game) or In,
/// after which both pick B or S simultaneously. The inside stage pays (5,1)
/// at (B,B), (1,5) at (S,S), and (0,0) off-diagonal; the payoff pair after
/// Out is the parameter. `out1` is the interesting knob — the solutions jump
/// as it crosses 5/2 — while `out2` never influences any solution.
pub fn bos_family(out1: &Rat, out2: &Rat) -> Result<Game> {
    let pay = |a: i64, b: i64| Some(vec![a.to_string(), b.to_string()]);
    let term = |id: &str, p: Option<Vec<String>>| RawNode {
        id: id.into(),
        kind: "terminal".into(),
        movers: None,
        actions: None,
        chance_probs: None,
        payoffs: p,
    };
    let edge = |profile: &[&str], child: &str| RawEdge {
        profile: profile.iter().map(|s| s.to_string()).collect(),
        child: child.into(),
    };
    let raw = RawGame {
        players: vec!["P1".into(), "P2".into()],
        root: "r".into(),
        nodes: vec![
            RawNode {
                id: "r".into(),
                kind: "decision".into(),
                movers: Some(vec!["P1".into()]),
                actions: Some(vec![edge(&["Out"], "zo"), edge(&["In"], "n")]),
                chance_probs: None,
                payoffs: None,
            },
            RawNode {
                id: "n".into(),
                kind: "decision".into(),
                movers: Some(vec!["P1".into(), "P2".into()]),
                actions: Some(vec![
                    edge(&["B", "B"], "zbb"),
                    edge(&["B", "S"], "zbs"),
                    edge(&["S", "B"], "zsb"),
                    edge(&["S", "S"], "zss"),
                ]),
                chance_probs: None,
                payoffs: None,
            },
            term("zo", Some(vec![format_rat(out1), format_rat(out2)])),
            term("zbb", pay(5, 1)),
            term("zbs", pay(0, 0)),
            term("zsb", pay(0, 0)),
            term("zss", pay(1, 5)),
        ],
        info_sets: vec![
            RawInfoSet {
                player: "P1".into(),
                members: vec!["r".into()],
            },
            RawInfoSet {
                player: "P1".into(),
                members: vec!["n".into()],
            },
            RawInfoSet {
                player: "P2".into(),
                members: vec!["n".into()],
            },
        ],
    };
    Game::from_raw(&raw)
}
