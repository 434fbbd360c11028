//! Node ranks for perfect-information games: a terminal has rank 0, a
//! decision node ranks one above its highest-ranked child. Only defined for
//! sequential games with singleton information sets and no chance moves.

use crate::error::{GameError, Result};
use crate::game::{Game, NodeKind};

pub fn subgame_rank(game: &Game) -> Result<Vec<u32>> {
    for i in 0..game.n_players() {
        for (six, iset) in game.own_sets(i).iter().enumerate() {
            if iset.members.len() > 1 {
                return Err(GameError::Unsupported(format!(
                    "info set {six} of {:?} has {} members; ranks need perfect information",
                    game.player_name(i),
                    iset.members.len()
                )));
            }
        }
    }
    let mut rank = vec![0u32; game.n_nodes()];
    // children precede parents in a post-order walk
    let mut order = Vec::with_capacity(game.n_nodes());
    let mut stack = vec![game.root()];
    while let Some(n) = stack.pop() {
        order.push(n);
        match game.node(n) {
            NodeKind::Terminal { .. } => {}
            NodeKind::Chance { .. } => {
                return Err(GameError::Unsupported(
                    "ranks are not defined with chance moves".into(),
                ));
            }
            NodeKind::Decision {
                movers, children, ..
            } => {
                if movers.len() > 1 {
                    return Err(GameError::Unsupported(
                        "ranks need sequential moves, found simultaneous movers".into(),
                    ));
                }
                for &c in children {
                    stack.push(c);
                }
            }
        }
    }
    for &n in order.iter().rev() {
        if let NodeKind::Decision { children, .. } = game.node(n) {
            rank[n] = 1 + children.iter().map(|&c| rank[c]).max().unwrap();
        }
    }
    Ok(rank)
}
