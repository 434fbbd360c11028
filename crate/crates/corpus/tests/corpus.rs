use corpus::gen::{random_matrix, random_tree, seeded, TreeCfg};
use corpus::tables::{expand_cell, reference_tables};
use corpus::{bos_family, entries, ids, load};
use game_core::{format_rat, rat, rat_i};

#[test]
fn every_bundled_game_validates() {
    assert_eq!(ids().len(), 12);
    for entry in entries() {
        let g = load(entry.id).unwrap_or_else(|e| panic!("{}: {e}", entry.id));
        assert_eq!(g.n_players(), 2, "{}", entry.id);
        for i in 0..2 {
            assert!(g.n_strategies(i) >= 1, "{}", entry.id);
        }
    }
    assert!(load("nope").is_err());
}

// spot-check payoffs that the rest of the suite depends on
#[test]
fn payoff_anchors() {
    let at = |id: &str, l1: &str, l2: &str| {
        let g = load(id).unwrap();
        let s1 = (0..g.n_strategies(0))
            .find(|&s| g.strategy_label(0, s) == l1)
            .unwrap();
        let s2 = (0..g.n_strategies(1))
            .find(|&s| g.strategy_label(1, s) == l2)
            .unwrap();
        (g.eu(&[s1, s2], 0), g.eu(&[s1, s2], 1))
    };

    assert_eq!(at("bos1", "(Out,B)", "B"), (rat_i(3), rat_i(1)));
    assert_eq!(at("bos3", "(In,B)", "B"), (rat_i(6), rat_i(2)));
    assert_eq!(at("cooper", "(O,1)", "1"), (rat_i(300), rat_i(300)));
    assert_eq!(at("hms", "(C1,o1)", "(C2,o2)"), (rat_i(5), rat_i(-10)));
    // the one payoff cell that separates hms3 from hms2
    assert_eq!(at("hms2", "b", "e").1, rat_i(2));
    assert_eq!(at("hms3", "b", "e").1, rat_i(3));
    assert_eq!(at("bn", "(In,L)", "l"), (rat_i(8), rat_i(4)));
    assert_eq!(at("er", "(Out,L)", "r"), (rat_i(2), rat_i(2)));
}

#[test]
fn bos_family_matches_bundled_games() {
    for (id, out) in [("bos1", 3), ("bos2", 2), ("bos3", 1)] {
        let fam = bos_family(&rat_i(out), &rat_i(1)).unwrap();
        let g = load(id).unwrap();
        assert_eq!(fam.n_strategies(0), g.n_strategies(0));
        assert_eq!(fam.n_strategies(1), g.n_strategies(1));
        if id == "bos3" {
            continue; // bos3 intensifies the inside payoffs too
        }
        for s1 in 0..4 {
            for s2 in 0..2 {
                assert_eq!(fam.eu(&[s1, s2], 0), g.eu(&[s1, s2], 0), "{id} {s1},{s2}");
                assert_eq!(fam.eu(&[s1, s2], 1), g.eu(&[s1, s2], 1), "{id} {s1},{s2}");
            }
        }
    }
    let half = bos_family(&rat(5, 2), &rat_i(1)).unwrap();
    let out_b = (0..4)
        .find(|&s| half.strategy_label(0, s) == "(Out,B)")
        .unwrap();
    assert_eq!(format_rat(&half.eu(&[out_b, 0], 0)), "5/2");
}

#[test]
fn reference_tables_cover_every_documented_game() {
    let tabs = reference_tables();
    let games: Vec<&str> = tabs.games().collect();
    assert_eq!(games.len(), 11); // er has no solution table
    for game in &games {
        assert!(ids().contains(game), "unknown game {game}");
        let t = tabs.table(game).unwrap();
        assert!(t.depth() >= 3, "{game}");
        let g = load(game).unwrap();
        for concept in t.concepts() {
            for player in ["P1", "P2"] {
                let col = t.column(concept, player).unwrap_or_else(|| {
                    panic!("{game}/{concept} missing column for {player}")
                });
                // a column may stop before the table depth only when a
                // documented cycle covers its continuation
                let last = *col.keys().max().unwrap();
                if last < t.depth() {
                    let (start, period) = tabs.cycle(game, concept).unwrap_or_else(|| {
                        panic!("{game}/{concept}/{player} stops at k={last} with no cycle")
                    });
                    assert!(start + period - 1 <= last, "{game}/{concept}");
                }
                for k in 1..=last {
                    let cell = col
                        .get(&k)
                        .unwrap_or_else(|| panic!("{game}/{concept}/{player} k={k}"));
                    let i = if player == "P1" { 0 } else { 1 };
                    let hits = expand_cell(&g, i, cell);
                    // a solution table never documents an empty set except for
                    // restricted-belief columns, which may empty out
                    if concept != "delta-rationalizability" {
                        assert!(!hits.is_empty(), "{game}/{concept}/{player} k={k}");
                    }
                }
            }
        }
    }
    // the four documented cycles
    assert_eq!(
        tabs.cycle("matching-pennies-variant", "normal-form-level-k"),
        Some((1, 4))
    );
    assert_eq!(tabs.cycle("bos3", "strong-level-k"), Some((1, 2)));
    assert_eq!(tabs.cycle("bos3", "backward-level-k"), Some((1, 2)));
    assert_eq!(tabs.cycle("bos2", "backward-level-k"), Some((1, 2)));
    assert_eq!(tabs.cycle("bos1", "strong-level-k"), None);
}

#[test]
fn pattern_expansion() {
    let g = load("reny").unwrap();
    let all = expand_cell(&g, 1, &["ALL".into()]);
    assert_eq!(all, vec![0, 1, 2, 3]);
    let wild = expand_cell(&g, 0, &["(O1,*)".into()]);
    assert_eq!(wild.len(), 2);
    for &s in &wild {
        assert!(g.strategy_label(0, s).starts_with("(O1,"));
    }
    let lit = expand_cell(&g, 0, &["(O1,o1)".into(), "(C1,c1)".into()]);
    assert_eq!(lit.len(), 2);
    // unknown labels match nothing rather than guessing
    assert!(expand_cell(&g, 0, &["bogus".into()]).is_empty());
}

#[test]
fn generators_are_deterministic_and_valid() {
    let cfg = TreeCfg::default();
    let mut sizes = Vec::new();
    for seed in 0..40u64 {
        let mut rng = seeded(seed);
        let m = random_matrix(&mut rng, 4);
        assert!(m.n_strategies(0) >= 2 && m.n_strategies(0) <= 4);
        assert!(m.n_strategies(1) >= 2 && m.n_strategies(1) <= 4);
        let t = random_tree(&mut rng, &cfg);
        assert!(t.n_strategies(0) >= 1 && t.n_strategies(1) >= 1);
        assert!(t.n_strategies(0) <= 243 && t.n_strategies(1) <= 243);
        sizes.push((t.n_strategies(0), t.n_strategies(1), t.n_nodes()));
    }
    // at least some trees have nontrivial strategy spaces for both players
    assert!(sizes.iter().any(|&(a, b, _)| a >= 2 && b >= 2));

    // same seed, same game; different seed, different game somewhere
    let mut r1 = seeded(7);
    let mut r2 = seeded(7);
    let a = random_tree(&mut r1, &cfg).to_json_pretty();
    let b = random_tree(&mut r2, &cfg).to_json_pretty();
    assert_eq!(a, b);
}

#[test]
fn merged_sets_appear() {
    // with merging forced on, some tree should produce a non-singleton set
    let cfg = TreeCfg {
        merge_prob: 1.0,
        term_prob: 0.2,
        node_budget: 6,
        ..TreeCfg::default()
    };
    let mut found = false;
    for seed in 0..60u64 {
        let mut rng = seeded(seed);
        let t = random_tree(&mut rng, &cfg);
        for i in 0..2 {
            if t.own_sets(i).iter().any(|s| s.members.len() > 1) {
                found = true;
            }
        }
    }
    assert!(found, "no seed produced a merged information set");
}
