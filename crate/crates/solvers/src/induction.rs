//! Depth-limited backward induction on perfect-information trees.

use std::collections::BTreeSet;

use game_core::{subgame_rank, Game, NodeKind, Rat, Result};
use serde_json::json;

use crate::exec::filter_pool;
use crate::normal::check_levels;
use crate::solution::LevelSolution;
use crate::Options;

/// Folds the tree bottom-up keeping *sets* of attainable payoff vectors: at
/// each decision node the mover keeps every action whose best attainable own
/// payoff ties for the maximum, and passes up the vectors achieving it. Level
/// k then keeps the strategies that pick a kept action at every own node
/// whose subtree height is at most k; deeper nodes are unconstrained until k
/// reaches them. Requires perfect information: singleton information sets, no
/// simultaneous moves, no chance nodes.
pub fn backward_induction_k(game: &Game, k_max: u32, opts: Options) -> Result<LevelSolution> {
    check_levels(k_max)?;
    let rank = subgame_rank(game)?;

    // preorder from the root; reversing it processes children first
    let mut order = Vec::with_capacity(game.n_nodes());
    let mut stack = vec![game.root()];
    while let Some(n) = stack.pop() {
        order.push(n);
        if let NodeKind::Decision { children, .. } = game.node(n) {
            stack.extend(children.iter().copied());
        }
    }

    let mut vals: Vec<BTreeSet<Vec<Rat>>> = vec![BTreeSet::new(); game.n_nodes()];
    let mut allowed: Vec<Vec<u16>> = vec![Vec::new(); game.n_nodes()];
    for &n in order.iter().rev() {
        match game.node(n) {
            NodeKind::Terminal { payoffs } => {
                vals[n].insert(payoffs.clone());
            }
            NodeKind::Decision {
                movers, children, ..
            } => {
                let p = movers[0];
                let tops: Vec<Rat> = children
                    .iter()
                    .map(|&c| {
                        vals[c]
                            .iter()
                            .map(|v| v[p].clone())
                            .max()
                            .expect("child has a payoff vector")
                    })
                    .collect();
                let best = tops.iter().max().cloned().expect("decision node has children");
                for (a, (&c, top)) in children.iter().zip(&tops).enumerate() {
                    if *top == best {
                        allowed[n].push(a as u16);
                        let carried: Vec<Vec<Rat>> = vals[c]
                            .iter()
                            .filter(|v| v[p] == *top)
                            .cloned()
                            .collect();
                        vals[n].extend(carried);
                    }
                }
            }
            NodeKind::Chance { .. } => unreachable!("ranked games have no chance nodes"),
        }
    }

    let mut solution =
        LevelSolution::new(crate::concept::BACKWARD_INDUCTION_K, json!({ "k": k_max }));
    for k in 1..=k_max {
        let mut level = Vec::new();
        let mut prescribed = Vec::new();
        for i in 0..game.n_players() {
            let sets = game.own_sets(i);
            let constrained: Vec<(usize, usize)> = sets
                .iter()
                .enumerate()
                .map(|(six, iset)| (six, iset.members[0]))
                .filter(|&(_, node)| rank[node] <= k)
                .collect();
            let all: Vec<usize> = (0..game.n_strategies(i)).collect();
            let keep = filter_pool(opts.exec, &all, |s| {
                let acts = game.strategy(i, s);
                Ok(constrained
                    .iter()
                    .all(|&(six, node)| allowed[node].contains(&acts[six])))
            })?;
            prescribed.push(Some(json!(constrained
                .iter()
                .map(|&(six, node)| json!({ "info_set": six, "actions": allowed[node] }))
                .collect::<Vec<_>>())));
            level.push(keep);
        }
        solution.push_level(game, &level, prescribed);
    }
    if k_max >= 2 {
        solution.detect_and_set_cycle();
    }
    Ok(solution)
}
