//! Every bundled game, every concept with a reference run, every level:
//! exact strategy-set equality against `tests/data/expected.json`.

use std::collections::{BTreeMap, BTreeSet};

use solvers::{solve_with_defaults, Options};

type Expected = BTreeMap<String, BTreeMap<String, BTreeMap<String, BTreeMap<String, Vec<String>>>>>;

fn expected() -> Expected {
    serde_json::from_str(include_str!("data/expected.json")).expect("expected.json parses")
}

#[test]
fn all_reference_runs_match() {
    let expected = expected();
    let mut checked = 0usize;
    for (game_id, concepts) in &expected {
        let game = corpus::load(game_id).expect("corpus game loads");
        for (concept, players) in concepts {
            let k_max = players
                .values()
                .flat_map(|col| col.keys())
                .map(|k| k.parse::<u32>().expect("level key"))
                .max()
                .expect("at least one level");
            let solution = solve_with_defaults(&game, concept, k_max, Options::default())
                .unwrap_or_else(|e| panic!("{game_id}/{concept}: {e}"));
            for (pname, col) in players {
                let player: usize = pname[1..].parse::<usize>().expect("player key") - 1;
                for (kstr, labels) in col {
                    let k: u32 = kstr.parse().expect("level");
                    let got: BTreeSet<String> = solution
                        .set(k, player)
                        .iter()
                        .map(|&s| game.strategy_label(player, s))
                        .collect();
                    let want: BTreeSet<String> = labels.iter().cloned().collect();
                    assert_eq!(
                        got, want,
                        "{game_id}/{concept} {pname} level {k}: got {got:?}, want {want:?}"
                    );
                    checked += 1;
                }
            }
        }
    }
    // 12 games x 6-7 concepts x 2 players x 6 levels (9 for the cycling one)
    assert!(checked >= 894, "only {checked} cells checked");
}

#[test]
fn documented_cycles_are_detected() {
    let cases = [
        ("matching-pennies-variant", "normal-form-level-k", 9, (1, 4)),
        ("bos3", "strong-level-k", 6, (1, 2)),
        ("bos3", "backward-level-k", 6, (1, 2)),
        ("bos2", "backward-level-k", 6, (1, 2)),
    ];
    for (game_id, concept, k, want) in cases {
        let game = corpus::load(game_id).unwrap();
        let solution = solve_with_defaults(&game, concept, k, Options::default()).unwrap();
        let cycle = solution.cycle.as_ref().unwrap_or_else(|| {
            panic!("{game_id}/{concept}: no cycle detected");
        });
        assert_eq!(
            (cycle.start, cycle.period),
            want,
            "{game_id}/{concept}: cycle {cycle:?}"
        );
    }
}

#[test]
fn local_and_strict_modes_agree_on_every_bundled_game() {
    let expected = expected();
    for (game_id, concepts) in &expected {
        let game = corpus::load(game_id).unwrap();
        for concept in concepts.keys() {
            let local = solve_with_defaults(
                &game,
                concept,
                6,
                Options {
                    mode: solvers::SystemMode::Local,
                    ..Options::default()
                },
            )
            .unwrap();
            let strict = solve_with_defaults(
                &game,
                concept,
                6,
                Options {
                    mode: solvers::SystemMode::Strict,
                    ..Options::default()
                },
            )
            .unwrap();
            for k in 1..=6 {
                for i in 0..game.n_players() {
                    assert_eq!(
                        local.set(k, i),
                        strict.set(k, i),
                        "{game_id}/{concept} level {k} player {i}: local vs strict"
                    );
                }
            }
        }
    }
}

#[test]
fn sequential_execution_is_bit_identical() {
    let expected = expected();
    for (game_id, concepts) in expected.iter() {
        let game = corpus::load(game_id).unwrap();
        for concept in concepts.keys() {
            let par = solve_with_defaults(&game, concept, 4, Options::default()).unwrap();
            let seq = solve_with_defaults(
                &game,
                concept,
                4,
                Options {
                    exec: solvers::Execution::Sequential,
                    ..Options::default()
                },
            )
            .unwrap();
            assert_eq!(
                serde_json::to_string(&par.to_json()).unwrap(),
                serde_json::to_string(&seq.to_json()).unwrap(),
                "{game_id}/{concept}: parallel vs sequential output"
            );
        }
    }
}
