//! Seeded random game generators for property tests and benches.
//!
//! Everything is driven by a caller-supplied RNG so suites can pin seeds and
//! replay failures. Payoffs are small integers drawn from a deliberately
//! tie-heavy range about half the time: set-valued concepts only get
//! interesting when best replies tie.

use game_core::raw::{RawEdge, RawInfoSet, RawNode};
use game_core::{format_rat, rat_i, Game, Rat, RawGame};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A reproducible RNG for one test case.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn payoff(rng: &mut impl Rng, ties: bool) -> Rat {
    if ties {
        rat_i(rng.gen_range(0..=3))
    } else {
        rat_i(rng.gen_range(-5..=9))
    }
}

/// A one-shot two-player game with 2..=`max_side` actions each.
pub fn random_matrix(rng: &mut impl Rng, max_side: usize) -> Game {
    let rows = rng.gen_range(2..=max_side.max(2));
    let cols = rng.gen_range(2..=max_side.max(2));
    let ties = rng.gen_bool(0.5);
    let actions = vec![
        (0..rows).map(|a| format!("a{a}")).collect::<Vec<_>>(),
        (0..cols).map(|b| format!("b{b}")).collect::<Vec<_>>(),
    ];
    let payoffs: Vec<Vec<Rat>> = (0..rows * cols)
        .map(|_| vec![payoff(rng, ties), payoff(rng, ties)])
        .collect();
    Game::from_matrix(&["P1", "P2"], &actions, &payoffs).expect("generated matrix")
}

/// Shape knobs for [`random_tree`].
pub struct TreeCfg {
    /// Longest chain of decision nodes, root included.
    pub max_depth: usize,
    /// Actions per mover at a single-mover node (simultaneous nodes use 2x2).
    pub max_branch: usize,
    /// Total decision nodes allowed in the tree.
    pub node_budget: usize,
    /// Chance that a mergeable group of same-experience nodes becomes one
    /// information set rather than singletons.
    pub merge_prob: f64,
    /// Chance that a decision node has both players moving at once.
    pub simul_prob: f64,
    /// Chance that a non-root node within depth and budget stops early.
    pub term_prob: f64,
}

impl Default for TreeCfg {
    fn default() -> Self {
        TreeCfg {
            max_depth: 3,
            max_branch: 3,
            node_budget: 5,
            merge_prob: 0.5,
            simul_prob: 0.25,
            term_prob: 0.4,
        }
    }
}

/// A random two-player tree. Information sets are built so that merged nodes
/// always share the owner's past sets and actions, so the result is a valid
/// perfect-recall game by construction; early terminals act as outside
/// options.
pub fn random_tree(rng: &mut impl Rng, cfg: &TreeCfg) -> Game {
    // a node waiting to be realized: its owner-experiences are the
    // (info set, action index) paths of each player down to it
    struct Pending {
        id: String,
        exp: [Vec<(usize, usize)>; 2],
    }
    struct Dec {
        id: String,
        movers: Vec<usize>,
        branch: Vec<usize>,
        exp: [Vec<(usize, usize)>; 2],
        // set id per mover, filled in by the grouping pass
        sets: Vec<usize>,
    }

    let mut nodes: Vec<RawNode> = Vec::new();
    let mut sets: [Vec<Vec<String>>; 2] = [Vec::new(), Vec::new()];
    let mut budget = cfg.node_budget.max(1);
    let mut next_id = 0usize;
    let fresh = |prefix: &str, next_id: &mut usize| {
        let id = format!("{prefix}{next_id}");
        *next_id += 1;
        id
    };

    let mut level: Vec<Pending> = vec![Pending {
        id: fresh("n", &mut next_id),
        exp: [Vec::new(), Vec::new()],
    }];
    let mut depth = 0usize;
    while !level.is_empty() {
        // decide which pending nodes become decisions at this depth
        let mut decs: Vec<Dec> = Vec::new();
        for p in level.drain(..) {
            let stop = depth >= cfg.max_depth
                || budget == 0
                || (depth > 0 && rng.gen_bool(cfg.term_prob));
            if stop {
                let ties = rng.gen_bool(0.5);
                nodes.push(RawNode {
                    id: p.id,
                    kind: "terminal".into(),
                    movers: None,
                    actions: None,
                    chance_probs: None,
                    payoffs: Some((0..2).map(|_| format_rat(&payoff(rng, ties))).collect()),
                });
                continue;
            }
            budget -= 1;
            let simul = rng.gen_bool(cfg.simul_prob);
            let (movers, branch) = if simul {
                (vec![0, 1], vec![2, 2])
            } else {
                let m = rng.gen_range(0..2usize);
                (vec![m], vec![rng.gen_range(2..=cfg.max_branch.max(2))])
            };
            decs.push(Dec {
                id: p.id,
                sets: vec![usize::MAX; movers.len()],
                movers,
                branch,
                exp: p.exp,
            });
        }

        // group (node, mover) pairs that share the owner's experience and
        // action count; each group becomes one set or all singletons
        for player in 0..2 {
            let mut groups: Vec<(Vec<(usize, usize)>, usize, Vec<usize>)> = Vec::new();
            for (ix, d) in decs.iter().enumerate() {
                if let Some(m) = d.movers.iter().position(|&p| p == player) {
                    let key = (d.exp[player].clone(), d.branch[m]);
                    match groups.iter_mut().find(|(e, b, _)| (*e == key.0) && *b == key.1) {
                        Some((_, _, members)) => members.push(ix),
                        None => groups.push((key.0, key.1, vec![ix])),
                    }
                }
            }
            for (_, _, members) in groups {
                let merge = members.len() > 1 && rng.gen_bool(cfg.merge_prob);
                if merge {
                    let set = sets[player].len();
                    sets[player].push(members.iter().map(|&ix| decs[ix].id.clone()).collect());
                    for ix in members {
                        let d = &mut decs[ix];
                        let m = d.movers.iter().position(|&p| p == player).unwrap();
                        d.sets[m] = set;
                    }
                } else {
                    for ix in members {
                        let set = sets[player].len();
                        sets[player].push(vec![decs[ix].id.clone()]);
                        let d = &mut decs[ix];
                        let m = d.movers.iter().position(|&p| p == player).unwrap();
                        d.sets[m] = set;
                    }
                }
            }
        }

        // realize the decision nodes and queue their children
        let mut next: Vec<Pending> = Vec::new();
        for d in decs {
            let mut edges = Vec::new();
            let total: usize = d.branch.iter().product();
            for flat in 0..total {
                let mut acts = vec![0usize; d.movers.len()];
                let mut rest = flat;
                for m in (0..d.movers.len()).rev() {
                    acts[m] = rest % d.branch[m];
                    rest /= d.branch[m];
                }
                let child = fresh("n", &mut next_id);
                let mut exp = d.exp.clone();
                for (m, &player) in d.movers.iter().enumerate() {
                    exp[player].push((d.sets[m], acts[m]));
                }
                edges.push(RawEdge {
                    profile: acts.iter().map(|a| format!("a{a}")).collect(),
                    child: child.clone(),
                });
                next.push(Pending { id: child, exp });
            }
            nodes.push(RawNode {
                id: d.id,
                kind: "decision".into(),
                movers: Some(
                    d.movers
                        .iter()
                        .map(|&p| format!("P{}", p + 1))
                        .collect(),
                ),
                actions: Some(edges),
                chance_probs: None,
                payoffs: None,
            });
        }
        level = next;
        depth += 1;
    }

    let mut info_sets = Vec::new();
    for (player, per) in sets.iter().enumerate() {
        for members in per {
            info_sets.push(RawInfoSet {
                player: format!("P{}", player + 1),
                members: members.clone(),
            });
        }
    }
    let raw = RawGame {
        players: vec!["P1".into(), "P2".into()],
        root: "n0".into(),
        nodes,
        info_sets,
    };
    Game::from_raw(&raw).expect("generated tree")
}
