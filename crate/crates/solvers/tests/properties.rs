//! Structural properties of the solution concepts on randomly generated
//! games, plus the bundled games where a property is about them
//! specifically. Larger-scale runs of the same properties back the
//! acceptance checks; these keep counts small enough for routine testing.

use std::collections::BTreeSet;

use beliefs::{dominated_by_mixture, Belief, BeliefSystem, DominanceKind};
use corpus::gen::{random_matrix, random_tree, seeded, TreeCfg};
use game_core::{format_rat, parse_rat, rat_i, Game, Rat};
use rand::Rng;
use solvers::pools::joint_codes;
use solvers::{
    backward_level_k, delta_rationalizability, iterated_admissibility, normal_form_level_k,
    outcome_set, prudent_rationalizability, rationalizability, solve_with_defaults,
    strong_level_k, uniform_profile_beliefs, DeltaVariant, Options,
};

fn opts() -> Options {
    Options::default()
}

fn random_full_support_belief(rng: &mut impl Rng, n: u64) -> Belief {
    Belief::normalized((0..n).map(|c| (c, rat_i(rng.gen_range(1..=9)))))
}

/// Condition a whole-game belief onto each of a player's reach sets.
fn conditioned_systems(game: &Game, beliefs: &[Belief]) -> Vec<BeliefSystem> {
    (0..game.n_players())
        .map(|i| BeliefSystem {
            player: i,
            beliefs: (0..game.own_sets(i).len())
                .map(|set| beliefs[i].conditioned_on(game.reach_list(i, set).unwrap()))
                .collect(),
        })
        .collect()
}

fn level_sets(solution: &solvers::LevelSolution, game: &Game, k: u32) -> Vec<Vec<usize>> {
    (0..game.n_players()).map(|i| solution.set(k, i).to_vec()).collect()
}

#[test]
fn level_k_is_inside_rationalizability() {
    for seed in 0..40 {
        let mut rng = seeded(seed);
        let game = random_matrix(&mut rng, 4);
        let r = rationalizability(&game, 6, opts()).unwrap();
        let mut profiles = vec![uniform_profile_beliefs(&game)];
        profiles.push(
            (0..game.n_players())
                .map(|i| random_full_support_belief(&mut rng, game.n_opp_profiles(i)))
                .collect(),
        );
        for beliefs in &profiles {
            let l = normal_form_level_k(&game, beliefs, 6, opts()).unwrap();
            for k in 1..=6 {
                for i in 0..game.n_players() {
                    let inside: BTreeSet<_> = r.set(k, i).iter().collect();
                    for s in l.set(k, i) {
                        assert!(
                            inside.contains(s),
                            "seed {seed}: level-{k} strategy {s} of player {i} not rationalizable"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn rationalizable_strategies_have_level_1_witnesses() {
    for seed in 0..40 {
        let mut rng = seeded(seed);
        let game = random_matrix(&mut rng, 4);
        let r = rationalizability(&game, 6, opts()).unwrap();
        let pools = level_sets(&r, &game, 6);
        for i in 0..game.n_players() {
            let support = joint_codes(&game, i, &pools);
            let rows: Vec<Vec<Rat>> = (0..game.n_strategies(i))
                .map(|s| {
                    support
                        .iter()
                        .map(|&c| game.eu(&game.full_profile(i, s, c), i))
                        .collect()
                })
                .collect();
            for &s in &pools[i] {
                let witness = beliefs::exists_best_response_belief(&support, &rows[s], &rows)
                    .expect("surviving strategy has a justifying belief");
                let mut profile = uniform_profile_beliefs(&game);
                profile[i] = witness;
                let l = normal_form_level_k(&game, &profile, 1, opts()).unwrap();
                assert!(
                    l.set(1, i).contains(&s),
                    "seed {seed}: player {i} strategy {s} not a best reply to its witness"
                );
            }
        }
    }
}

#[test]
fn strong_level_1_equals_level_1_under_full_support() {
    for seed in 0..60 {
        let mut rng = seeded(1000 + seed);
        let game = random_tree(&mut rng, &TreeCfg::default());
        let beliefs: Vec<Belief> = (0..game.n_players())
            .map(|i| random_full_support_belief(&mut rng, game.n_opp_profiles(i)))
            .collect();
        let systems = conditioned_systems(&game, &beliefs);
        let strong = strong_level_k(&game, &systems, 1, opts()).unwrap();
        let flat = normal_form_level_k(&game, &beliefs, 1, opts()).unwrap();
        for i in 0..game.n_players() {
            assert_eq!(
                strong.set(1, i),
                flat.set(1, i),
                "seed {seed}: level-1 sets differ for player {i}"
            );
        }
    }
}

#[test]
fn strong_level_k_outcomes_are_inside_level_k_outcomes() {
    for seed in 0..60 {
        let mut rng = seeded(2000 + seed);
        let game = random_tree(&mut rng, &TreeCfg::default());
        let beliefs: Vec<Belief> = (0..game.n_players())
            .map(|i| random_full_support_belief(&mut rng, game.n_opp_profiles(i)))
            .collect();
        let systems = conditioned_systems(&game, &beliefs);
        let strong = strong_level_k(&game, &systems, 5, opts()).unwrap();
        let flat = normal_form_level_k(&game, &beliefs, 5, opts()).unwrap();
        for k in 1..=5 {
            let zs = outcome_set(&game, &level_sets(&strong, &game, k));
            let zf = outcome_set(&game, &level_sets(&flat, &game, k));
            assert!(
                zs.is_subset(&zf),
                "seed {seed} level {k}: strong outcomes {zs:?} not inside {zf:?}"
            );
        }
    }
}

#[test]
fn strong_and_backward_level_1_reach_the_same_outcomes() {
    let run = |game: &Game, tag: &str| {
        let systems: Vec<BeliefSystem> = (0..game.n_players())
            .map(|i| beliefs::uniform_system(game, i).unwrap())
            .collect();
        let strong = strong_level_k(game, &systems, 1, opts()).unwrap();
        let backward = backward_level_k(game, &systems, 1, opts()).unwrap();
        let zs = outcome_set(game, &level_sets(&strong, game, 1));
        let zb = outcome_set(game, &level_sets(&backward, game, 1));
        assert_eq!(zs, zb, "{tag}: level-1 outcome sets differ");
    };
    for id in corpus::ids() {
        run(&corpus::load(id).unwrap(), id);
    }
    for seed in 0..60 {
        let mut rng = seeded(3000 + seed);
        let game = random_tree(&mut rng, &TreeCfg::default());
        run(&game, &format!("seed {seed}"));
    }
}

#[test]
fn reduction_concepts_are_nested() {
    let check = |solution: &solvers::LevelSolution, game: &Game, k_max: u32, tag: &str| {
        for k in 2..=k_max {
            for i in 0..game.n_players() {
                let prev: BTreeSet<_> = solution.set(k - 1, i).iter().collect();
                for s in solution.set(k, i) {
                    assert!(prev.contains(s), "{tag}: level {k} not inside level {}", k - 1);
                }
            }
        }
    };
    for seed in 0..25 {
        let mut rng = seeded(4000 + seed);
        for game in [random_matrix(&mut rng, 4), random_tree(&mut rng, &TreeCfg::default())] {
            for concept in [
                "normal-form-rationalizability",
                "strong-rationalizability",
                "iterated-admissibility",
                "prudent-rationalizability",
                "backward-rationalizability",
            ] {
                let s = solve_with_defaults(&game, concept, 5, opts()).unwrap();
                check(&s, &game, 5, &format!("seed {seed} {concept}"));
            }
            let menu: Vec<Vec<BeliefSystem>> = (0..game.n_players())
                .map(|i| vec![beliefs::uniform_system(&game, i).unwrap()])
                .collect();
            for variant in [DeltaVariant::Standard, DeltaVariant::Modified] {
                let s = delta_rationalizability(&game, &menu, variant, 5, opts()).unwrap();
                check(&s, &game, 5, &format!("seed {seed} delta {variant:?}"));
            }
        }
    }
}

#[test]
fn rationalizability_is_iterated_strict_dominance() {
    for seed in 0..60 {
        let mut rng = seeded(5000 + seed);
        let game = random_matrix(&mut rng, 4);
        let r = rationalizability(&game, 5, opts()).unwrap();
        // reference reduction: remove strategies strictly dominated by a
        // mixture against the surviving opponent profiles, both players at once
        let mut pools: Vec<Vec<usize>> =
            (0..game.n_players()).map(|i| (0..game.n_strategies(i)).collect()).collect();
        for k in 1..=5u32 {
            let mut next = Vec::new();
            for i in 0..game.n_players() {
                let cols = joint_codes(&game, i, &pools);
                let rows: Vec<Vec<Rat>> = pools[i]
                    .iter()
                    .map(|&t| {
                        cols.iter().map(|&c| game.eu(&game.full_profile(i, t, c), i)).collect()
                    })
                    .collect();
                next.push(
                    pools[i]
                        .iter()
                        .enumerate()
                        .filter(|&(ix, _)| {
                            dominated_by_mixture(&rows, &rows[ix], DominanceKind::Strict).is_none()
                        })
                        .map(|(_, &s)| s)
                        .collect::<Vec<_>>(),
                );
            }
            pools = next;
            for i in 0..game.n_players() {
                assert_eq!(
                    r.set(k, i),
                    &pools[i][..],
                    "seed {seed}: dominance reduction differs at level {k}, player {i}"
                );
            }
        }
    }
}

#[test]
fn prudent_rationalizability_is_iterated_admissibility() {
    for seed in 0..30 {
        let mut rng = seeded(6000 + seed);
        for game in [random_matrix(&mut rng, 4), random_tree(&mut rng, &TreeCfg::default())] {
            let p = prudent_rationalizability(&game, 5, opts()).unwrap();
            let a = iterated_admissibility(&game, 5, opts()).unwrap();
            for k in 1..=5 {
                for i in 0..game.n_players() {
                    assert_eq!(
                        p.set(k, i),
                        a.set(k, i),
                        "seed {seed}: prudent vs admissibility at level {k}, player {i}"
                    );
                }
            }
        }
    }
}

#[test]
fn level_k_sequences_become_periodic_on_bundled_games() {
    for id in corpus::ids() {
        let game = corpus::load(id).unwrap();
        for concept in ["normal-form-level-k", "strong-level-k", "backward-level-k"] {
            let s = solve_with_defaults(&game, concept, 12, opts()).unwrap();
            assert!(
                s.cycle.is_some(),
                "{id}/{concept}: no repetition within 12 levels"
            );
        }
    }
}

fn rescaled(game: &Game, player: usize, a: &Rat, b: &Rat) -> Game {
    let mut v: serde_json::Value = serde_json::from_str(&game.to_json_pretty()).unwrap();
    for node in v["nodes"].as_array_mut().unwrap() {
        if let Some(p) = node.get_mut("payoffs").and_then(|p| p.as_array_mut()) {
            let u = parse_rat(p[player].as_str().unwrap()).unwrap();
            p[player] = serde_json::Value::String(format_rat(&(a * &u + b)));
        }
    }
    Game::from_json(&v.to_string()).unwrap()
}

#[test]
fn solution_sets_survive_positive_affine_rescaling() {
    let mut rng = seeded(7000);
    for id in ["centipede", "reny", "hms", "bos1", "cooper"] {
        let game = corpus::load(id).unwrap();
        let player = rng.gen_range(0..game.n_players());
        let a = Rat::new(rng.gen_range(1..=7).into(), rng.gen_range(1..=3).into());
        let b = rat_i(rng.gen_range(-5..=5));
        let other = rescaled(&game, player, &a, &b);
        for concept in [
            "normal-form-level-k",
            "strong-level-k",
            "strong-rationalizability",
            "iterated-admissibility",
            "backward-level-k",
            "backward-rationalizability",
        ] {
            let x = solve_with_defaults(&game, concept, 4, opts()).unwrap();
            let y = solve_with_defaults(&other, concept, 4, opts()).unwrap();
            for k in 1..=4 {
                for i in 0..game.n_players() {
                    assert_eq!(
                        x.set(k, i),
                        y.set(k, i),
                        "{id}/{concept}: rescaling player {player} changed level {k}"
                    );
                }
            }
        }
    }
}

#[test]
fn outside_option_threshold_flips_at_five_halves() {
    let below = [rat_i(2), Rat::new(9.into(), 4.into())];
    let above = [Rat::new(11.into(), 4.into()), rat_i(3), rat_i(4)];
    for v in &below {
        let game = corpus::bos_family(v, &rat_i(1)).unwrap();
        let systems: Vec<BeliefSystem> =
            (0..2).map(|i| beliefs::uniform_system(&game, i).unwrap()).collect();
        let s = strong_level_k(&game, &systems, 3, opts()).unwrap();
        let labels: Vec<String> =
            s.set(3, 0).iter().map(|&x| game.strategy_label(0, x)).collect();
        assert_eq!(labels, ["(In,B)"], "outside option {}", format_rat(v));
    }
    for v in &above {
        let game = corpus::bos_family(v, &rat_i(1)).unwrap();
        let systems: Vec<BeliefSystem> =
            (0..2).map(|i| beliefs::uniform_system(&game, i).unwrap()).collect();
        let s = strong_level_k(&game, &systems, 3, opts()).unwrap();
        let labels: Vec<String> =
            s.set(3, 0).iter().map(|&x| game.strategy_label(0, x)).collect();
        assert_eq!(
            labels,
            ["(Out,B)", "(Out,S)"],
            "outside option {}",
            format_rat(v)
        );
    }
}

#[test]
fn player_2_payoff_after_out_is_irrelevant() {
    for out2 in [rat_i(0), rat_i(1), rat_i(100), rat_i(-3)] {
        let base = corpus::bos_family(&rat_i(3), &rat_i(1)).unwrap();
        let varied = corpus::bos_family(&rat_i(3), &out2).unwrap();
        for concept in ["strong-level-k", "strong-rationalizability", "backward-level-k"] {
            let x = solve_with_defaults(&base, concept, 4, opts()).unwrap();
            let y = solve_with_defaults(&varied, concept, 4, opts()).unwrap();
            for k in 1..=4 {
                for i in 0..2 {
                    assert_eq!(x.set(k, i), y.set(k, i), "{concept} level {k}");
                }
            }
        }
    }
}
