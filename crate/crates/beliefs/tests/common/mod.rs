#![allow(dead_code)] // each integration test binary uses its own subset

use game_core::{rat_i, Game, Rat};

/// 2x2 matching-pennies variant: row U/D, column L/R.
pub fn mp() -> Game {
    let pay = |a: i64, b: i64| vec![rat_i(a), rat_i(b)];
    Game::from_matrix(
        &["Row", "Col"],
        &[
            vec!["U".into(), "D".into()],
            vec!["L".into(), "R".into()],
        ],
        &[pay(2, -1), pay(-1, 2), pay(-1, 1), pay(1, -1)],
    )
    .expect("valid matrix game")
}

/// Battle of the sexes with an outside option worth 3.
pub fn bos1() -> Game {
    Game::from_json(
        r#"{
        "players": ["P1", "P2"],
        "root": "r",
        "nodes": [
            {"id": "r", "kind": "decision", "movers": ["P1"],
             "actions": [{"profile": ["Out"], "child": "zo"},
                         {"profile": ["In"], "child": "n"}]},
            {"id": "n", "kind": "decision", "movers": ["P1", "P2"],
             "actions": [{"profile": ["B", "B"], "child": "zbb"},
                         {"profile": ["B", "S"], "child": "zbs"},
                         {"profile": ["S", "B"], "child": "zsb"},
                         {"profile": ["S", "S"], "child": "zss"}]},
            {"id": "zo", "kind": "terminal", "payoffs": ["3", "1"]},
            {"id": "zbb", "kind": "terminal", "payoffs": ["5", "1"]},
            {"id": "zbs", "kind": "terminal", "payoffs": ["0", "0"]},
            {"id": "zsb", "kind": "terminal", "payoffs": ["0", "0"]},
            {"id": "zss", "kind": "terminal", "payoffs": ["1", "5"]}
        ],
        "info_sets": [
            {"player": "P1", "members": ["r"]},
            {"player": "P1", "members": ["n"]},
            {"player": "P2", "members": ["n"]}
        ]
    }"#,
    )
    .expect("valid game")
}

/// Four-legged centipede.
pub fn centipede() -> Game {
    Game::from_json(
        r#"{
        "players": ["P1", "P2"],
        "root": "r",
        "nodes": [
            {"id": "r", "kind": "decision", "movers": ["P1"],
             "actions": [{"profile": ["O1"], "child": "z1"},
                         {"profile": ["C1"], "child": "n2"}]},
            {"id": "n2", "kind": "decision", "movers": ["P2"],
             "actions": [{"profile": ["O2"], "child": "z2"},
                         {"profile": ["C2"], "child": "n3"}]},
            {"id": "n3", "kind": "decision", "movers": ["P1"],
             "actions": [{"profile": ["o1"], "child": "z3"},
                         {"profile": ["c1"], "child": "n4"}]},
            {"id": "n4", "kind": "decision", "movers": ["P2"],
             "actions": [{"profile": ["o2"], "child": "z4"},
                         {"profile": ["c2"], "child": "z5"}]},
            {"id": "z1", "kind": "terminal", "payoffs": ["1", "0"]},
            {"id": "z2", "kind": "terminal", "payoffs": ["0", "2"]},
            {"id": "z3", "kind": "terminal", "payoffs": ["3", "1"]},
            {"id": "z4", "kind": "terminal", "payoffs": ["2", "4"]},
            {"id": "z5", "kind": "terminal", "payoffs": ["5", "3"]}
        ],
        "info_sets": [
            {"player": "P1", "members": ["r"]},
            {"player": "P1", "members": ["n3"]},
            {"player": "P2", "members": ["n2"]},
            {"player": "P2", "members": ["n4"]}
        ]
    }"#,
    )
    .expect("valid game")
}

/// One-shot two-player game from a flat payoff list (row-major).
pub fn matrix_game(rows: usize, cols: usize, cells: &[(i64, i64)]) -> Game {
    assert_eq!(cells.len(), rows * cols);
    let row_acts: Vec<String> = (0..rows).map(|r| format!("r{r}")).collect();
    let col_acts: Vec<String> = (0..cols).map(|c| format!("c{c}")).collect();
    let payoffs: Vec<Vec<Rat>> = cells
        .iter()
        .map(|&(a, b)| vec![rat_i(a), rat_i(b)])
        .collect();
    Game::from_matrix(&["Row", "Col"], &[row_acts, col_acts], &payoffs).expect("valid matrix game")
}
