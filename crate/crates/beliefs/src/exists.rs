//! Existence of rationalizing beliefs, per info set and for whole systems.
//!
//! Each test asks: is there a belief (with the prescribed support shape)
//! under which the strategy is rational at the set? The search is a small
//! exact linear program over belief weights; a witness belief is returned
//! on success.

use crate::lp::{solve, Lp, LpOutcome, Rel};
use crate::rationality::{
    cond_value_one, is_rational_at, is_rational_continuation_at, ContinuationTable,
};
use crate::types::{Belief, BeliefSystem, SetSpec, SupportSpec};
use game_core::{Game, GameError, Rat, Result};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalityFlavor {
    /// Compare against other strategies reaching the set; vacuous when the
    /// strategy does not reach it.
    Strong,
    /// Compare continuation plans from the set onward; never vacuous.
    Continuation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemMode {
    /// Each info set is tested on its own.
    Local,
    /// One belief system: beliefs at successive own sets must come from
    /// conditioning whenever the earlier belief allows it.
    Strict,
}

fn sorted_dedup(v: &[u64]) -> Vec<u64> {
    let mut out = v.to_vec();
    out.sort_unstable();
    out.dedup();
    out
}

fn intersect_sorted(a: &[u64], b: &[u64]) -> Vec<u64> {
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

/// Support shape after intersecting with the reach set.
enum Effective {
    Any(Vec<u64>),
    Full(Vec<u64>),
    Fixed(Belief),
}

fn effective(game: &Game, i: usize, set: usize, spec: &SetSpec) -> Result<Effective> {
    let reach = game.reach_list(i, set)?;
    let empty = |kind: &str| {
        GameError::Validation(format!(
            "empty effective support ({kind}) at information set {set} of player {}",
            game.player_name(i)
        ))
    };
    match spec {
        SetSpec::Any(v) => {
            let eff = intersect_sorted(&sorted_dedup(v), reach);
            if eff.is_empty() {
                return Err(empty("any"));
            }
            Ok(Effective::Any(eff))
        }
        SetSpec::Full(v) => {
            let eff = intersect_sorted(&sorted_dedup(v), reach);
            if eff.is_empty() {
                return Err(empty("full"));
            }
            Ok(Effective::Full(eff))
        }
        SetSpec::Fixed(b) => {
            if !b.concentrated_on(reach) {
                return Err(GameError::Validation(format!(
                    "fixed belief places weight on profiles that do not reach \
                     information set {set} of player {}",
                    game.player_name(i)
                )));
            }
            Ok(Effective::Fixed(b.clone()))
        }
    }
}

/// Value rows for the per-set comparison: the tested strategy's conditional
/// values over the support, and every competitor's.
fn value_rows(
    game: &Game,
    i: usize,
    set: usize,
    s: usize,
    support: &[u64],
    flavor: RationalityFlavor,
) -> Result<(Vec<Rat>, Vec<Vec<Rat>>)> {
    match flavor {
        RationalityFlavor::Strong => {
            let own = game.strategy(i, s);
            let mine = support
                .iter()
                .map(|&t| cond_value_one(game, i, set, own, t))
                .collect::<Result<Vec<Rat>>>()?;
            let mut others = Vec::new();
            for r in 0..game.n_strategies(i) {
                if r == s || !game.strat_reaches(i, set, r) {
                    continue;
                }
                let row = support
                    .iter()
                    .map(|&t| cond_value_one(game, i, set, game.strategy(i, r), t))
                    .collect::<Result<Vec<Rat>>>()?;
                others.push(row);
            }
            Ok((mine, others))
        }
        RationalityFlavor::Continuation => {
            let table = ContinuationTable::build(game, i, set, support)?;
            let mine = table.rows[table.class_of(game.strategy(i, s))].clone();
            Ok((mine, table.rows))
        }
    }
}

/// Solve for a belief over `support` making the strategy rational at the set.
/// `full` demands positive weight everywhere on the support.
fn belief_lp(
    support: &[u64],
    mine: &[Rat],
    others: &[Vec<Rat>],
    full: bool,
) -> Option<Belief> {
    let n = support.len();
    let vars = if full { n + 1 } else { n };
    let mut lp = Lp::new(vars);
    if full {
        lp.objective[n] = Rat::one();
    }
    let mut simplex = vec![Rat::zero(); vars];
    for slot in simplex.iter_mut().take(n) {
        *slot = Rat::one();
    }
    lp.constrain(simplex, Rel::Eq, Rat::one());
    for row in others {
        let mut coeffs = vec![Rat::zero(); vars];
        let mut nontrivial = false;
        for t in 0..n {
            coeffs[t] = &mine[t] - &row[t];
            if !coeffs[t].is_zero() {
                nontrivial = true;
            }
        }
        if nontrivial {
            lp.constrain(coeffs, Rel::Ge, Rat::zero());
        }
    }
    if full {
        for t in 0..n {
            let mut coeffs = vec![Rat::zero(); vars];
            coeffs[t] = Rat::one();
            coeffs[n] = -Rat::one();
            lp.constrain(coeffs, Rel::Ge, Rat::zero());
        }
    }
    match solve(&lp) {
        LpOutcome::Optimal { value, x } => {
            if full && !value.is_positive() {
                return None;
            }
            Some(Belief::new(
                support.iter().zip(&x).map(|(&t, w)| (t, w.clone())),
            ))
        }
        _ => None,
    }
}

/// Is there a belief over exactly these support points under which `target`'s
/// expected value is weakly best against every competitor row? The plain
/// payoff-table form of the per-set question, for normal-form concepts where
/// rows are whole-game expected utilities rather than conditional ones.
pub fn exists_best_response_belief(
    support: &[u64],
    target: &[Rat],
    rows: &[Vec<Rat>],
) -> Option<Belief> {
    belief_lp(support, target, rows, false)
}

/// Is there a belief with the prescribed support under which the strategy is
/// rational at the set? Returns a witness belief.
pub fn exists_rationalizing_belief(
    game: &Game,
    i: usize,
    set: usize,
    s: usize,
    spec: &SetSpec,
    flavor: RationalityFlavor,
) -> Result<Option<Belief>> {
    let eff = effective(game, i, set, spec)?;
    if let Effective::Fixed(b) = &eff {
        let ok = match flavor {
            RationalityFlavor::Strong => is_rational_at(game, i, set, s, b)?,
            RationalityFlavor::Continuation => is_rational_continuation_at(game, i, set, s, b)?,
        };
        return Ok(if ok { Some(b.clone()) } else { None });
    }
    let (support, full) = match &eff {
        Effective::Any(v) => (v.as_slice(), false),
        Effective::Full(v) => (v.as_slice(), true),
        Effective::Fixed(_) => unreachable!(),
    };
    if flavor == RationalityFlavor::Strong && !game.strat_reaches(i, set, s) {
        return Ok(Some(Belief::uniform(support)));
    }
    let (mine, others) = value_rows(game, i, set, s, support, flavor)?;
    Ok(belief_lp(support, &mine, &others, full))
}

/// Local-mode system test: each own set on its own; the witness system pairs
/// the per-set witnesses (it need not satisfy the conditioning axiom).
fn exists_system_local(
    game: &Game,
    i: usize,
    s: usize,
    spec: &SupportSpec,
    flavor: RationalityFlavor,
) -> Result<Option<BeliefSystem>> {
    let mut beliefs = Vec::with_capacity(spec.per_set.len());
    for (set, set_spec) in spec.per_set.iter().enumerate() {
        match exists_rationalizing_belief(game, i, set, s, set_spec, flavor)? {
            Some(b) => beliefs.push(b),
            None => return Ok(None),
        }
    }
    Ok(Some(BeliefSystem { player: i, beliefs }))
}

/// Strict mode: search over zero/positive mass patterns along the own-set
/// forest. Within a "block" (a maximal chain segment where each set gets
/// positive mass from its predecessor's belief), all beliefs are restrictions
/// of one weight vector; a zero transition starts a fresh block.
struct StrictProblem<'a> {
    game: &'a Game,
    player: usize,
    n_sets: usize,
    parent: Vec<Option<usize>>,
    non_roots: Vec<usize>,
    reach: Vec<Vec<u64>>,
    /// Per-set effective shapes (Fixed prechecked separately).
    shapes: Vec<Effective>,
    /// Per-set rationality rows (empty when vacuous or Fixed).
    rows: Vec<(Vec<Rat>, Vec<Vec<Rat>>)>,
}

impl<'a> StrictProblem<'a> {
    fn block_roots(&self, mask: u64) -> Vec<usize> {
        // zero-bit for non_roots[b] means a fresh block starts at that set
        let mut root = vec![usize::MAX; self.n_sets];
        let is_cut = |set: usize| -> bool {
            match self.non_roots.iter().position(|&x| x == set) {
                Some(b) => mask >> b & 1 == 1,
                None => true, // forest roots always start a block
            }
        };
        for set in 0..self.n_sets {
            let mut chain = vec![set];
            let mut cur = set;
            while root[cur] == usize::MAX && !is_cut(cur) {
                cur = self.parent[cur].expect("non-cut set has a parent");
                chain.push(cur);
            }
            let r = if root[cur] != usize::MAX { root[cur] } else { cur };
            for c in chain {
                root[c] = r;
            }
        }
        root
    }

    fn try_pattern(&self, mask: u64) -> Option<BeliefSystem> {
        let game = self.game;
        let i = self.player;
        let block = self.block_roots(mask);
        // variable layout: per block root, one weight per profile in its
        // reach list; then per in-block Fixed set a scale variable; then
        // the shared strictness margin as the last variable.
        let mut offset = vec![usize::MAX; self.n_sets];
        let mut vars = 0usize;
        for set in 0..self.n_sets {
            if block[set] == set {
                offset[set] = vars;
                vars += self.reach[set].len();
            }
        }
        let mut lambda = vec![usize::MAX; self.n_sets];
        for set in 0..self.n_sets {
            if block[set] != set {
                if let Effective::Fixed(_) = self.shapes[set] {
                    lambda[set] = vars;
                    vars += 1;
                }
            }
        }
        let eps = vars;
        vars += 1;
        let var_of = |root: usize, t: u64| -> usize {
            offset[root]
                + self.reach[root]
                    .binary_search(&t)
                    .expect("profile in block root's reach list")
        };

        let mut lp = Lp::new(vars);
        lp.objective[eps] = Rat::one();
        let mut bound = vec![Rat::zero(); vars];
        bound[eps] = Rat::one();
        lp.constrain(bound, Rel::Le, Rat::one());

        for set in 0..self.n_sets {
            let root = block[set];
            if root == set {
                // fresh block: weights over reach(set) sum to one
                let mut coeffs = vec![Rat::zero(); vars];
                for &t in &self.reach[set] {
                    coeffs[var_of(set, t)] = Rat::one();
                }
                lp.constrain(coeffs, Rel::Eq, Rat::one());
                // a cut away from the forest root: the parent's block must
                // put no mass on this set's reach
                if let Some(p) = self.parent[set] {
                    let proot = block[p];
                    let mut zero = vec![Rat::zero(); vars];
                    for &t in &self.reach[set] {
                        zero[var_of(proot, t)] = Rat::one();
                    }
                    lp.constrain(zero, Rel::Eq, Rat::zero());
                }
            } else {
                // conditioned within the block: restriction must carry mass
                let mut mass = vec![Rat::zero(); vars];
                for &t in &self.reach[set] {
                    mass[var_of(root, t)] = Rat::one();
                }
                mass[eps] = -Rat::one();
                lp.constrain(mass, Rel::Ge, Rat::zero());
            }
            // support shape
            match &self.shapes[set] {
                Effective::Any(eff) => {
                    for &t in &self.reach[set] {
                        if eff.binary_search(&t).is_err() {
                            let mut zero = vec![Rat::zero(); vars];
                            zero[var_of(root, t)] = Rat::one();
                            lp.constrain(zero, Rel::Eq, Rat::zero());
                        }
                    }
                }
                Effective::Full(eff) => {
                    for &t in &self.reach[set] {
                        let mut row = vec![Rat::zero(); vars];
                        row[var_of(root, t)] = Rat::one();
                        if eff.binary_search(&t).is_ok() {
                            row[eps] = -Rat::one();
                            lp.constrain(row, Rel::Ge, Rat::zero());
                        } else {
                            lp.constrain(row, Rel::Eq, Rat::zero());
                        }
                    }
                }
                Effective::Fixed(b) => {
                    if root == set {
                        for &t in &self.reach[set] {
                            let mut row = vec![Rat::zero(); vars];
                            row[var_of(root, t)] = Rat::one();
                            lp.constrain(row, Rel::Eq, b.weight(t));
                        }
                    } else {
                        // proportional to the fixed belief, positive scale
                        for &t in &self.reach[set] {
                            let mut row = vec![Rat::zero(); vars];
                            row[var_of(root, t)] = Rat::one();
                            row[lambda[set]] = -b.weight(t);
                            lp.constrain(row, Rel::Eq, Rat::zero());
                        }
                    }
                }
            }
            // rationality rows (scale-invariant in the unnormalized weights)
            let (mine, others) = &self.rows[set];
            for other in others {
                let mut coeffs = vec![Rat::zero(); vars];
                let mut nontrivial = false;
                for (slot, &t) in self.reach[set].iter().enumerate() {
                    coeffs[var_of(root, t)] = &mine[slot] - &other[slot];
                    if !coeffs[var_of(root, t)].is_zero() {
                        nontrivial = true;
                    }
                }
                if nontrivial {
                    lp.constrain(coeffs, Rel::Ge, Rat::zero());
                }
            }
        }

        match solve(&lp) {
            LpOutcome::Optimal { value, x } if value.is_positive() => {
                let beliefs = (0..self.n_sets)
                    .map(|set| {
                        let root = block[set];
                        Belief::normalized(
                            self.reach[set]
                                .iter()
                                .map(|&t| (t, x[var_of(root, t)].clone())),
                        )
                    })
                    .collect();
                let system = BeliefSystem { player: i, beliefs };
                debug_assert!(matches!(system.check_axioms(game), Ok((true, true))));
                Some(system)
            }
            _ => None,
        }
    }
}

fn exists_system_strict(
    game: &Game,
    i: usize,
    s: usize,
    spec: &SupportSpec,
    flavor: RationalityFlavor,
) -> Result<Option<BeliefSystem>> {
    let n_sets = game.own_sets(i).len();
    if n_sets == 0 {
        return Ok(Some(BeliefSystem {
            player: i,
            beliefs: Vec::new(),
        }));
    }
    let parent: Vec<Option<usize>> = (0..n_sets)
        .map(|set| game.immediate_own_predecessor(i, set))
        .collect();
    let non_roots: Vec<usize> = (0..n_sets).filter(|&set| parent[set].is_some()).collect();
    if non_roots.len() > 20 {
        return Err(GameError::TooLarge(format!(
            "strict belief-system search over {} chained information sets",
            non_roots.len()
        )));
    }
    let mut reach = Vec::with_capacity(n_sets);
    let mut shapes = Vec::with_capacity(n_sets);
    let mut rows = Vec::with_capacity(n_sets);
    for (set, set_spec) in spec.per_set.iter().enumerate() {
        let rl = game.reach_list(i, set)?.to_vec();
        let shape = effective(game, i, set, set_spec)?;
        // fixed beliefs do not depend on the pattern: check rationality once
        if let Effective::Fixed(b) = &shape {
            let ok = match flavor {
                RationalityFlavor::Strong => is_rational_at(game, i, set, s, b)?,
                RationalityFlavor::Continuation => {
                    is_rational_continuation_at(game, i, set, s, b)?
                }
            };
            if !ok {
                return Ok(None);
            }
        }
        let vacuous = matches!(shape, Effective::Fixed(_))
            || (flavor == RationalityFlavor::Strong && !game.strat_reaches(i, set, s));
        let r = if vacuous {
            (Vec::new(), Vec::new())
        } else {
            value_rows(game, i, set, s, &rl, flavor)?
        };
        reach.push(rl);
        shapes.push(shape);
        rows.push(r);
    }
    let problem = StrictProblem {
        game,
        player: i,
        n_sets,
        parent,
        non_roots,
        reach,
        shapes,
        rows,
    };
    // all-positive pattern first: maximal conditioning is preferred
    for mask in 0..(1u64 << problem.non_roots.len()) {
        if let Some(sys) = problem.try_pattern(mask) {
            return Ok(Some(sys));
        }
    }
    Ok(None)
}

/// Is there a belief system with the prescribed per-set supports under which
/// the strategy is rational at every own set? Returns a witness system.
pub fn exists_belief_system(
    game: &Game,
    i: usize,
    s: usize,
    spec: &SupportSpec,
    flavor: RationalityFlavor,
    mode: SystemMode,
) -> Result<Option<BeliefSystem>> {
    debug_assert_eq!(spec.per_set.len(), game.own_sets(i).len());
    match mode {
        SystemMode::Local => exists_system_local(game, i, s, spec, flavor),
        SystemMode::Strict => exists_system_strict(game, i, s, spec, flavor),
    }
}
