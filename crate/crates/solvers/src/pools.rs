//! Strategy pools and the opponent-profile supports derived from them.
//!
//! A level of any concept is a pool per player: a sorted list of surviving
//! strategy indices. Belief supports are sets of joint opponent-profile
//! codes; this module builds them from pools, intersects them with reach
//! sets, and computes the bracket restriction used by backward concepts.

use game_core::{Game, Result};

/// All players' full strategy pools.
pub fn full_pools(game: &Game) -> Vec<Vec<usize>> {
    (0..game.n_players())
        .map(|i| (0..game.n_strategies(i)).collect())
        .collect()
}

/// Sorted joint opponent-profile codes built from the opponents' pools.
pub fn joint_codes(game: &Game, i: usize, pools: &[Vec<usize>]) -> Vec<u64> {
    let opp = game.opp_players(i);
    if opp.iter().any(|&j| pools[j].is_empty()) {
        return Vec::new();
    }
    let mut codes = Vec::new();
    let mut pick = vec![0usize; opp.len()];
    'outer: loop {
        let parts: Vec<usize> = opp
            .iter()
            .zip(&pick)
            .map(|(&j, &ix)| pools[j][ix])
            .collect();
        codes.push(game.opp_encode(i, &parts));
        for slot in (0..opp.len()).rev() {
            pick[slot] += 1;
            if pick[slot] < pools[opp[slot]].len() {
                continue 'outer;
            }
            pick[slot] = 0;
        }
        break;
    }
    codes.sort_unstable();
    codes.dedup();
    codes
}

/// Intersection of two sorted code lists.
pub fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    let (mut x, mut y) = (0usize, 0usize);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[x]);
                x += 1;
                y += 1;
            }
        }
    }
    out
}

/// The bracket of the opponents' pools at one of `i`'s information sets: for
/// each opponent, the strategies whose play at sets weakly following the
/// reference set agrees with some pool member there. Opponents with no
/// following sets — or an empty pool — are unrestricted.
pub fn bracket(game: &Game, i: usize, set: usize, pools: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); game.n_players()];
    for &j in game.opp_players(i) {
        let foll = game.weak_followers(j, i, set);
        let all = || (0..game.n_strategies(j)).collect::<Vec<_>>();
        if foll.is_empty() || pools[j].is_empty() {
            out[j] = all();
            continue;
        }
        let restrict = |s: usize| -> Vec<u16> {
            let acts = game.strategy(j, s);
            foll.iter().map(|&b| acts[b]).collect()
        };
        let conts: Vec<Vec<u16>> = pools[j].iter().map(|&t| restrict(t)).collect();
        out[j] = (0..game.n_strategies(j))
            .filter(|&s| conts.contains(&restrict(s)))
            .collect();
    }
    out
}

/// Bracket support at a set: joint codes of the bracketed pools that reach
/// the set; the whole reach set when that intersection is empty.
pub fn bracket_support(
    game: &Game,
    i: usize,
    set: usize,
    pools: &[Vec<usize>],
) -> Result<Vec<u64>> {
    let reach = game.reach_list(i, set)?;
    let wide = bracket(game, i, set, pools);
    let sup = intersect(&joint_codes(game, i, &wide), reach);
    Ok(if sup.is_empty() { reach.to_vec() } else { sup })
}
