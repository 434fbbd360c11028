//! Validated extensive-form games and the queries every solver builds on:
//! strategy enumeration, reachability, exact expected utility, and the
//! precedence structure of information sets.

use crate::error::{GameError, Result};
use crate::rational::{format_rat, parse_rat, Rat};
use crate::raw::{RawChance, RawEdge, RawGame, RawInfoSet, RawNode};
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap};

/// Hard cap on one player's pure-strategy count.
pub const STRATEGY_CAP: u64 = 1_000_000;
/// Hard cap on enumerated strategy-profile spaces (normal form, reach sets).
pub const PROFILE_CAP: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub enum NodeKind {
    /// One or more players move at once. `acts[m]` are the labels of mover
    /// `movers[m]`; `children` is indexed mixed-radix with the first mover
    /// most significant.
    Decision {
        movers: Vec<usize>,
        acts: Vec<Vec<String>>,
        children: Vec<usize>,
    },
    Chance {
        branches: Vec<(Rat, usize)>,
    },
    Terminal {
        payoffs: Vec<Rat>,
    },
}

/// One information set of one player. `experience` is the sequence of
/// (own info set, action index) choices on the path to any member — by
/// perfect recall, the same for all members.
#[derive(Clone, Debug)]
pub struct InfoSet {
    pub player: usize,
    pub members: Vec<usize>,
    pub actions: Vec<String>,
    pub experience: Vec<(usize, u16)>,
}

/// A validated game. Construction (`Game::from_raw` / `Game::from_json`)
/// performs every structural check; all later queries assume they passed.
#[derive(Clone, Debug)]
pub struct Game {
    players: Vec<String>,
    node_ids: Vec<String>,
    nodes: Vec<NodeKind>,
    root: usize,
    isets: Vec<Vec<InfoSet>>,
    /// set_at[node][player] = that player's own info set at the node, if a mover.
    set_at: Vec<Vec<Option<u16>>>,
    /// exp[node][player] = player's own (set, action) history strictly before the node.
    exp: Vec<Vec<Vec<(usize, u16)>>>,
    /// strategies[player][s] = action index per own info set, odometer order
    /// (first set most significant, actions ascending).
    strategies: Vec<Vec<Box<[u16]>>>,
    /// opp_players[i] = all other players, ascending.
    opp_players: Vec<Vec<usize>>,
    /// reach[i][set] = sorted codes of opponent profiles that reach the set
    /// for at least one own strategy; None if the profile space exceeds the cap.
    reach: Vec<Vec<Option<Vec<u64>>>>,
    /// anc[node] = strict ancestors, root first.
    anc: Vec<Vec<usize>>,
}

impl Game {
    pub fn from_json(s: &str) -> Result<Game> {
        let raw: RawGame =
            serde_json::from_str(s).map_err(|e| GameError::Json(e.to_string()))?;
        Game::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawGame) -> Result<Game> {
        build(raw)
    }

    /// A one-shot simultaneous-move game from a payoff tensor.
    /// `payoffs` is indexed mixed-radix over action profiles (player 0 most
    /// significant) and holds one rational per player.
    pub fn from_matrix(
        players: &[&str],
        actions: &[Vec<String>],
        payoffs: &[Vec<Rat>],
    ) -> Result<Game> {
        if players.len() != actions.len() {
            return Err(GameError::Validation(
                "one action list per player required".into(),
            ));
        }
        let total: usize = actions.iter().map(|a| a.len()).product();
        if payoffs.len() != total {
            return Err(GameError::Validation(format!(
                "payoff tensor has {} entries, expected {total}",
                payoffs.len()
            )));
        }
        let mut nodes = vec![RawNode {
            id: "r".into(),
            kind: "decision".into(),
            movers: Some(players.iter().map(|p| p.to_string()).collect()),
            actions: Some(Vec::new()),
            chance_probs: None,
            payoffs: None,
        }];
        let mut edges = Vec::new();
        for (flat, pay) in payoffs.iter().enumerate() {
            let mut profile = Vec::new();
            let mut rest = flat;
            for axis in actions.iter().rev() {
                profile.push(axis[rest % axis.len()].clone());
                rest /= axis.len();
            }
            profile.reverse();
            let id = format!("z{flat}");
            edges.push(RawEdge {
                profile,
                child: id.clone(),
            });
            nodes.push(RawNode {
                id,
                kind: "terminal".into(),
                movers: None,
                actions: None,
                chance_probs: None,
                payoffs: Some(pay.iter().map(format_rat).collect()),
            });
        }
        nodes[0].actions = Some(edges);
        let raw = RawGame {
            players: players.iter().map(|p| p.to_string()).collect(),
            root: "r".into(),
            nodes,
            info_sets: players
                .iter()
                .map(|p| RawInfoSet {
                    player: p.to_string(),
                    members: vec!["r".into()],
                })
                .collect(),
        };
        Game::from_raw(&raw)
    }

    // ---------- structure accessors ----------

    pub fn n_players(&self) -> usize {
        self.players.len()
    }

    pub fn player_name(&self, i: usize) -> &str {
        &self.players[i]
    }

    pub fn player_index(&self, name: &str) -> Result<usize> {
        self.players
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| GameError::NotFound(format!("player {name:?}")))
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, ix: usize) -> &NodeKind {
        &self.nodes[ix]
    }

    pub fn node_id(&self, ix: usize) -> &str {
        &self.node_ids[ix]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn own_sets(&self, i: usize) -> &[InfoSet] {
        &self.isets[i]
    }

    /// The info set of player `i` at a node where `i` moves.
    pub fn set_at(&self, node: usize, i: usize) -> Option<usize> {
        self.set_at[node][i].map(|s| s as usize)
    }

    /// Player `i`'s own (set, action) history strictly before `node`.
    pub fn experience_at(&self, node: usize, i: usize) -> &[(usize, u16)] {
        &self.exp[node][i]
    }

    // ---------- strategies ----------

    pub fn n_strategies(&self, i: usize) -> usize {
        self.strategies[i].len()
    }

    pub fn strategy(&self, i: usize, s: usize) -> &[u16] {
        &self.strategies[i][s]
    }

    /// Index of the strategy with the given action vector (odometer order).
    pub fn strategy_code(&self, i: usize, acts: &[u16]) -> usize {
        let mut code = 0usize;
        for (set, &a) in acts.iter().enumerate() {
            code = code * self.isets[i][set].actions.len() + a as usize;
        }
        code
    }

    /// Human-readable label: the action at each own info set, `(a,b)` when
    /// the player has several sets, `a` for exactly one, `()` for none.
    pub fn strategy_label(&self, i: usize, s: usize) -> String {
        let acts = &self.strategies[i][s];
        let parts: Vec<&str> = acts
            .iter()
            .enumerate()
            .map(|(set, &a)| self.isets[i][set].actions[a as usize].as_str())
            .collect();
        match parts.len() {
            1 => parts[0].to_string(),
            _ => format!("({})", parts.join(",")),
        }
    }

    pub fn action_label(&self, i: usize, set: usize, a: u16) -> &str {
        &self.isets[i][set].actions[a as usize]
    }

    // ---------- opponent profiles ----------

    pub fn opp_players(&self, i: usize) -> &[usize] {
        &self.opp_players[i]
    }

    /// Number of opponent strategy profiles of player `i`.
    pub fn n_opp_profiles(&self, i: usize) -> u64 {
        self.opp_players[i]
            .iter()
            .map(|&j| self.strategies[j].len() as u64)
            .product()
    }

    /// Decode an opponent-profile code into strategy indices, one per
    /// opponent in `opp_players(i)` order.
    pub fn opp_decode(&self, i: usize, code: u64) -> Vec<usize> {
        let opp = &self.opp_players[i];
        let mut out = vec![0usize; opp.len()];
        let mut rest = code;
        for (slot, &j) in opp.iter().enumerate().rev() {
            let n = self.strategies[j].len() as u64;
            out[slot] = (rest % n) as usize;
            rest /= n;
        }
        out
    }

    pub fn opp_encode(&self, i: usize, parts: &[usize]) -> u64 {
        let opp = &self.opp_players[i];
        let mut code = 0u64;
        for (slot, &j) in opp.iter().enumerate() {
            code = code * self.strategies[j].len() as u64 + parts[slot] as u64;
        }
        code
    }

    /// Full strategy profile (one index per player) from own strategy and
    /// opponent-profile code.
    pub fn full_profile(&self, i: usize, s: usize, code: u64) -> Vec<usize> {
        let mut prof = vec![0usize; self.players.len()];
        prof[i] = s;
        let parts = self.opp_decode(i, code);
        for (slot, &j) in self.opp_players[i].iter().enumerate() {
            prof[j] = parts[slot];
        }
        prof
    }

    // ---------- play ----------

    fn action_of(&self, prof_acts: &[&[u16]], node: usize, mover: usize) -> usize {
        let set = self.set_at[node][mover].expect("mover has a set") as usize;
        prof_acts[mover][set] as usize
    }

    /// Visit every terminal reachable under the profile, with its probability.
    pub fn walk_terminals<F: FnMut(usize, Rat)>(&self, prof_acts: &[&[u16]], mut f: F) {
        let mut stack = vec![(self.root, Rat::one())];
        while let Some((n, w)) = stack.pop() {
            match &self.nodes[n] {
                NodeKind::Terminal { .. } => f(n, w),
                NodeKind::Chance { branches } => {
                    for (p, c) in branches {
                        stack.push((*c, &w * p));
                    }
                }
                NodeKind::Decision {
                    movers,
                    acts,
                    children,
                } => {
                    let mut ix = 0usize;
                    for (mi, &m) in movers.iter().enumerate() {
                        ix = ix * acts[mi].len() + self.action_of(prof_acts, n, m);
                    }
                    stack.push((children[ix], w));
                }
            }
        }
    }

    /// Per-player action slices for a profile of strategy indices.
    pub fn acts_of<'a>(&'a self, prof: &[usize]) -> Vec<&'a [u16]> {
        prof.iter()
            .enumerate()
            .map(|(i, &s)| &*self.strategies[i][s])
            .collect()
    }

    /// Expected utilities of all players under a pure profile (chance
    /// integrated out).
    pub fn eu_all(&self, prof: &[usize]) -> Vec<Rat> {
        self.eu_all_acts(&self.acts_of(prof))
    }

    pub fn eu_all_acts(&self, prof_acts: &[&[u16]]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.players.len()];
        self.walk_terminals(prof_acts, |t, w| {
            if let NodeKind::Terminal { payoffs } = &self.nodes[t] {
                for (o, p) in out.iter_mut().zip(payoffs) {
                    *o += &w * p;
                }
            }
        });
        out
    }

    pub fn eu(&self, prof: &[usize], i: usize) -> Rat {
        self.eu_acts(&self.acts_of(prof), i)
    }

    pub fn eu_acts(&self, prof_acts: &[&[u16]], i: usize) -> Rat {
        let mut out = Rat::zero();
        self.walk_terminals(prof_acts, |t, w| {
            if let NodeKind::Terminal { payoffs } = &self.nodes[t] {
                out += &w * &payoffs[i];
            }
        });
        out
    }

    /// Terminal distribution under a pure profile, sorted by node index.
    pub fn playout(&self, prof: &[usize]) -> Vec<(usize, Rat)> {
        let mut terms: Vec<(usize, Rat)> = Vec::new();
        self.walk_terminals(&self.acts_of(prof), |t, w| terms.push((t, w)));
        terms.sort_by_key(|&(t, _)| t);
        let mut out: Vec<(usize, Rat)> = Vec::new();
        for (t, w) in terms {
            match out.last_mut() {
                Some((lt, lw)) if *lt == t => *lw += w,
                _ => out.push((t, w)),
            }
        }
        out
    }

    /// Conditional-value components of player `i` at an own info set under a
    /// pure profile: (probability-weighted utility through the set, probability
    /// of reaching the set). The set is reached when the play path enters any
    /// member; the denominator is positive iff that happens with positive
    /// probability.
    pub fn cond_num_den(&self, prof_acts: &[&[u16]], i: usize, set: usize) -> (Rat, Rat) {
        let mut num = Rat::zero();
        let mut den = Rat::zero();
        let mut stack = vec![(self.root, Rat::one(), false)];
        while let Some((n, w, mut reached)) = stack.pop() {
            if !reached && self.set_at[n][i] == Some(set as u16) {
                reached = true;
                den += &w;
            }
            match &self.nodes[n] {
                NodeKind::Terminal { payoffs } => {
                    if reached {
                        num += &w * &payoffs[i];
                    }
                }
                NodeKind::Chance { branches } => {
                    for (p, c) in branches {
                        stack.push((*c, &w * p, reached));
                    }
                }
                NodeKind::Decision {
                    movers,
                    acts,
                    children,
                } => {
                    let mut ix = 0usize;
                    for (mi, &m) in movers.iter().enumerate() {
                        ix = ix * acts[mi].len() + self.action_of(prof_acts, n, m);
                    }
                    stack.push((children[ix], w, reached));
                }
            }
        }
        (num, den)
    }

    // ---------- reachability ----------

    /// Does strategy `s` of player `i` reach the info set for some opponent
    /// play? Perfect recall makes this a pure own-history test.
    pub fn strat_reaches(&self, i: usize, set: usize, s: usize) -> bool {
        let acts = &self.strategies[i][s];
        self.isets[i][set]
            .experience
            .iter()
            .all(|&(sig, a)| acts[sig] == a)
    }

    /// Sorted codes of opponent profiles reaching the info set (for some own
    /// strategy). Errors when the opponent profile space exceeds the cap.
    pub fn reach_list(&self, i: usize, set: usize) -> Result<&[u64]> {
        self.reach[i][set].as_deref().ok_or_else(|| {
            GameError::TooLarge(format!(
                "opponent profile space of player {} exceeds {PROFILE_CAP}",
                self.players[i]
            ))
        })
    }

    pub fn opp_reaches(&self, i: usize, set: usize, code: u64) -> Result<bool> {
        Ok(self.reach_list(i, set)?.binary_search(&code).is_ok())
    }

    /// A strategy for `i` that plays `base`'s actions except on the path to
    /// the given info set, where it plays to reach it. Used to evaluate
    /// continuation plans: the returned strategy reaches the set whenever the
    /// opponent profile does.
    pub fn reach_variant(&self, i: usize, set: usize, base: &[u16]) -> Box<[u16]> {
        let mut s: Box<[u16]> = base.into();
        for &(sig, a) in &self.isets[i][set].experience {
            s[sig] = a;
        }
        s
    }

    // ---------- precedence among info sets ----------

    /// Own info sets strictly preceding `set` (player `i`'s), in path order.
    pub fn own_predecessors(&self, i: usize, set: usize) -> Vec<usize> {
        self.isets[i][set]
            .experience
            .iter()
            .map(|&(sig, _)| sig)
            .collect()
    }

    /// Does own set `a` strictly precede own set `b` (same player)?
    pub fn strictly_precedes(&self, i: usize, a: usize, b: usize) -> bool {
        a != b && self.isets[i][b].experience.iter().any(|&(sig, _)| sig == a)
    }

    /// The last own info set visited before `set`, if any. Perfect recall
    /// makes own predecessors a chain, so this is unique.
    pub fn immediate_own_predecessor(&self, i: usize, set: usize) -> Option<usize> {
        self.isets[i][set].experience.last().map(|&(sig, _)| sig)
    }

    /// Info sets of `follower` with a member weakly after a member of
    /// (`ref_player`, `ref_set`). A shared node counts (simultaneous movers),
    /// as does the set itself when the players coincide.
    pub fn weak_followers(
        &self,
        follower: usize,
        ref_player: usize,
        ref_set: usize,
    ) -> Vec<usize> {
        let refs: BTreeSet<usize> = self.isets[ref_player][ref_set]
            .members
            .iter()
            .copied()
            .collect();
        let mut out = Vec::new();
        'sets: for (b, iset) in self.isets[follower].iter().enumerate() {
            for &m in &iset.members {
                if refs.contains(&m) || self.ancestors(m).iter().any(|a| refs.contains(a)) {
                    out.push(b);
                    continue 'sets;
                }
            }
        }
        out
    }

    /// Node indices strictly above `node`, root first.
    pub fn ancestors(&self, node: usize) -> &[usize] {
        &self.anc[node]
    }

    /// Does the pure profile's play reach the info set with positive
    /// probability?
    pub fn profile_reaches(&self, prof: &[usize], i: usize, set: usize) -> bool {
        let acts = self.acts_of(prof);
        let (_, den) = self.cond_num_den(&acts, i, set);
        !den.is_zero()
    }
}

fn err(msg: String) -> GameError {
    GameError::Validation(msg)
}

fn build(raw: &RawGame) -> Result<Game> {
    // players
    if raw.players.is_empty() {
        return Err(err("no players".into()));
    }
    let np = raw.players.len();
    {
        let mut seen = BTreeSet::new();
        for p in &raw.players {
            if !seen.insert(p) {
                return Err(err(format!("duplicate player {p:?}")));
            }
        }
    }
    let player_ix: HashMap<&str, usize> = raw
        .players
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_str(), i))
        .collect();

    // node ids
    let nn = raw.nodes.len();
    if nn == 0 {
        return Err(err("no nodes".into()));
    }
    let mut node_ix: HashMap<&str, usize> = HashMap::new();
    for (ix, n) in raw.nodes.iter().enumerate() {
        if node_ix.insert(n.id.as_str(), ix).is_some() {
            return Err(err(format!("duplicate node id {:?}", n.id)));
        }
    }
    let root = *node_ix
        .get(raw.root.as_str())
        .ok_or_else(|| err(format!("root {:?} is not a node", raw.root)))?;

    // per-node compile
    let mut nodes: Vec<NodeKind> = Vec::with_capacity(nn);
    for rn in &raw.nodes {
        let id = &rn.id;
        let forbid = |field: &str, present: bool| -> Result<()> {
            if present {
                Err(err(format!("node {id:?} ({}) has {field}", rn.kind)))
            } else {
                Ok(())
            }
        };
        match rn.kind.as_str() {
            "decision" => {
                forbid("chance_probs", rn.chance_probs.is_some())?;
                forbid("payoffs", rn.payoffs.is_some())?;
                let movers_raw = rn
                    .movers
                    .as_ref()
                    .ok_or_else(|| err(format!("decision node {id:?} lacks movers")))?;
                if movers_raw.is_empty() {
                    return Err(err(format!("decision node {id:?} has no movers")));
                }
                let mut movers = Vec::new();
                for m in movers_raw {
                    let &ix = player_ix
                        .get(m.as_str())
                        .ok_or_else(|| err(format!("node {id:?}: unknown mover {m:?}")))?;
                    if movers.contains(&ix) {
                        return Err(err(format!("node {id:?}: repeated mover {m:?}")));
                    }
                    movers.push(ix);
                }
                let edges = rn
                    .actions
                    .as_ref()
                    .ok_or_else(|| err(format!("decision node {id:?} lacks actions")))?;
                if edges.is_empty() {
                    return Err(err(format!("decision node {id:?} has no actions")));
                }
                // derive per-mover labels in first-occurrence order
                let mut acts: Vec<Vec<String>> = vec![Vec::new(); movers.len()];
                for e in edges {
                    if e.profile.len() != movers.len() {
                        return Err(err(format!(
                            "node {id:?}: profile {:?} length != movers",
                            e.profile
                        )));
                    }
                    for (slot, lab) in e.profile.iter().enumerate() {
                        if !acts[slot].contains(lab) {
                            acts[slot].push(lab.clone());
                        }
                    }
                }
                let total: usize = acts.iter().map(|a| a.len()).product();
                if edges.len() != total {
                    return Err(err(format!(
                        "node {id:?}: {} edges do not form the {} profile combinations",
                        edges.len(),
                        total
                    )));
                }
                let mut children = vec![usize::MAX; total];
                for e in edges {
                    let mut flat = 0usize;
                    for (slot, lab) in e.profile.iter().enumerate() {
                        let a = acts[slot].iter().position(|l| l == lab).unwrap();
                        flat = flat * acts[slot].len() + a;
                    }
                    if children[flat] != usize::MAX {
                        return Err(err(format!(
                            "node {id:?}: duplicate profile {:?}",
                            e.profile
                        )));
                    }
                    let &c = node_ix
                        .get(e.child.as_str())
                        .ok_or_else(|| err(format!("node {id:?}: unknown child {:?}", e.child)))?;
                    children[flat] = c;
                }
                if acts.iter().any(|a| a.len() > u16::MAX as usize) {
                    return Err(GameError::TooLarge(format!(
                        "node {id:?}: too many actions"
                    )));
                }
                nodes.push(NodeKind::Decision {
                    movers,
                    acts,
                    children,
                });
            }
            "chance" => {
                forbid("movers", rn.movers.is_some())?;
                forbid("actions", rn.actions.is_some())?;
                forbid("payoffs", rn.payoffs.is_some())?;
                let probs = rn
                    .chance_probs
                    .as_ref()
                    .ok_or_else(|| err(format!("chance node {id:?} lacks chance_probs")))?;
                if probs.is_empty() {
                    return Err(err(format!("chance node {id:?} has no branches")));
                }
                let mut branches = Vec::new();
                let mut sum = Rat::zero();
                for RawChance { child, prob } in probs {
                    let p = parse_rat(prob)?;
                    if p <= Rat::zero() {
                        return Err(err(format!(
                            "chance node {id:?}: probability {prob:?} not positive"
                        )));
                    }
                    let &c = node_ix
                        .get(child.as_str())
                        .ok_or_else(|| err(format!("node {id:?}: unknown child {child:?}")))?;
                    sum += &p;
                    branches.push((p, c));
                }
                if !sum.is_one() {
                    return Err(err(format!(
                        "chance node {id:?}: probabilities sum to {}",
                        format_rat(&sum)
                    )));
                }
                nodes.push(NodeKind::Chance { branches });
            }
            "terminal" => {
                forbid("movers", rn.movers.is_some())?;
                forbid("actions", rn.actions.is_some())?;
                forbid("chance_probs", rn.chance_probs.is_some())?;
                let pays = rn
                    .payoffs
                    .as_ref()
                    .ok_or_else(|| err(format!("terminal node {id:?} lacks payoffs")))?;
                if pays.len() != np {
                    return Err(err(format!(
                        "terminal node {id:?}: {} payoffs for {np} players",
                        pays.len()
                    )));
                }
                let payoffs = pays.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?;
                nodes.push(NodeKind::Terminal { payoffs });
            }
            other => {
                return Err(err(format!("node {id:?}: unknown kind {other:?}")));
            }
        }
    }

    // tree shape: unique parents, all nodes reachable from the root
    let mut parent = vec![None; nn];
    for (ix, n) in nodes.iter().enumerate() {
        let kids: Vec<usize> = match n {
            NodeKind::Decision { children, .. } => children.clone(),
            NodeKind::Chance { branches } => branches.iter().map(|&(_, c)| c).collect(),
            NodeKind::Terminal { .. } => Vec::new(),
        };
        for c in kids {
            if c == root {
                return Err(err(format!(
                    "root {:?} has a parent ({:?})",
                    raw.nodes[root].id, raw.nodes[ix].id
                )));
            }
            if let Some(p) = parent[c] {
                let _: usize = p;
                return Err(err(format!(
                    "node {:?} has two parents",
                    raw.nodes[c].id
                )));
            }
            parent[c] = Some(ix);
        }
    }
    {
        let mut seen = vec![false; nn];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(n) = stack.pop() {
            let kids: Vec<usize> = match &nodes[n] {
                NodeKind::Decision { children, .. } => children.clone(),
                NodeKind::Chance { branches } => branches.iter().map(|&(_, c)| c).collect(),
                NodeKind::Terminal { .. } => Vec::new(),
            };
            for c in kids {
                if !seen[c] {
                    seen[c] = true;
                    stack.push(c);
                }
            }
        }
        if let Some(u) = seen.iter().position(|&s| !s) {
            return Err(err(format!(
                "node {:?} unreachable from the root",
                raw.nodes[u].id
            )));
        }
    }

    // info sets
    let mut isets: Vec<Vec<InfoSet>> = vec![Vec::new(); np];
    let mut set_at: Vec<Vec<Option<u16>>> = vec![vec![None; np]; nn];
    for ris in &raw.info_sets {
        let &i = player_ix
            .get(ris.player.as_str())
            .ok_or_else(|| err(format!("info set of unknown player {:?}", ris.player)))?;
        if ris.members.is_empty() {
            return Err(err(format!("empty info set of player {:?}", ris.player)));
        }
        let mut members = Vec::new();
        let mut actions: Option<Vec<String>> = None;
        for mid in &ris.members {
            let &m = node_ix
                .get(mid.as_str())
                .ok_or_else(|| err(format!("info set member {mid:?} is not a node")))?;
            let acts_here = match &nodes[m] {
                NodeKind::Decision { movers, acts, .. } => movers
                    .iter()
                    .position(|&mv| mv == i)
                    .map(|slot| acts[slot].clone()),
                _ => None,
            };
            let acts_here = acts_here.ok_or_else(|| {
                err(format!(
                    "info set member {mid:?} is not a decision node where {:?} moves",
                    ris.player
                ))
            })?;
            match &actions {
                None => actions = Some(acts_here),
                Some(a) if *a == acts_here => {}
                Some(a) => {
                    return Err(err(format!(
                        "info set member {mid:?}: actions {acts_here:?} differ from {a:?}"
                    )))
                }
            }
            if set_at[m][i].is_some() {
                return Err(err(format!(
                    "node {mid:?} appears in two info sets of {:?}",
                    ris.player
                )));
            }
            if members.contains(&m) {
                return Err(err(format!("node {mid:?} repeated in an info set")));
            }
            let ix = isets[i].len() as u16;
            set_at[m][i] = Some(ix);
            members.push(m);
        }
        isets[i].push(InfoSet {
            player: i,
            members,
            actions: actions.unwrap(),
            experience: Vec::new(),
        });
    }
    // coverage: every (decision node, mover) pair has a set
    for (ix, n) in nodes.iter().enumerate() {
        if let NodeKind::Decision { movers, .. } = n {
            for &m in movers {
                if set_at[ix][m].is_none() {
                    return Err(err(format!(
                        "node {:?}: mover {:?} belongs to no info set",
                        raw.nodes[ix].id, raw.players[m]
                    )));
                }
            }
        }
    }

    // experiences + perfect recall
    let mut exp: Vec<Vec<Vec<(usize, u16)>>> = vec![vec![Vec::new(); np]; nn];
    let mut anc: Vec<Vec<usize>> = vec![Vec::new(); nn];
    {
        let mut stack = vec![root];
        while let Some(n) = stack.pop() {
            match &nodes[n] {
                NodeKind::Terminal { .. } => {}
                NodeKind::Chance { branches } => {
                    for &(_, c) in branches {
                        exp[c] = exp[n].clone();
                        anc[c] = push_anc(&anc[n], n);
                        stack.push(c);
                    }
                }
                NodeKind::Decision {
                    movers,
                    acts,
                    children,
                } => {
                    for (flat, &c) in children.iter().enumerate() {
                        let mut e = exp[n].clone();
                        let mut rest = flat;
                        for (slot, &m) in movers.iter().enumerate().rev() {
                            let a = (rest % acts[slot].len()) as u16;
                            rest /= acts[slot].len();
                            let set = set_at[n][m].unwrap() as usize;
                            e[m].push((set, a));
                        }
                        exp[c] = e;
                        anc[c] = push_anc(&anc[n], n);
                        stack.push(c);
                    }
                }
            }
        }
    }
    for i in 0..np {
        for (six, iset) in isets[i].iter_mut().enumerate() {
            let first = exp[iset.members[0]][i].clone();
            for &m in &iset.members[1..] {
                if exp[m][i] != first {
                    return Err(err(format!(
                        "perfect recall violated: members of info set {six} of {:?} \
                         have different own histories",
                        raw.players[i]
                    )));
                }
            }
            iset.experience = first;
        }
    }

    // strategies
    let mut strategies: Vec<Vec<Box<[u16]>>> = Vec::with_capacity(np);
    for i in 0..np {
        let axes: Vec<usize> = isets[i].iter().map(|s| s.actions.len()).collect();
        let mut count: u64 = 1;
        for &a in &axes {
            count = count.saturating_mul(a as u64);
            if count > STRATEGY_CAP {
                return Err(GameError::TooLarge(format!(
                    "player {:?} has more than {STRATEGY_CAP} strategies",
                    raw.players[i]
                )));
            }
        }
        let mut all = Vec::with_capacity(count as usize);
        let mut cur = vec![0u16; axes.len()];
        loop {
            all.push(cur.clone().into_boxed_slice());
            let mut pos = axes.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                cur[pos] += 1;
                if (cur[pos] as usize) < axes[pos] {
                    break;
                }
                cur[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || axes.is_empty() {
                break;
            }
        }
        debug_assert_eq!(all.len() as u64, count);
        strategies.push(all);
    }

    let opp_players: Vec<Vec<usize>> = (0..np)
        .map(|i| (0..np).filter(|&j| j != i).collect())
        .collect();

    // reach sets per (player, info set)
    let mut reach: Vec<Vec<Option<Vec<u64>>>> = Vec::with_capacity(np);
    for i in 0..np {
        let space: u64 = opp_players[i]
            .iter()
            .map(|&j| strategies[j].len() as u64)
            .fold(1u64, |a, b| a.saturating_mul(b));
        let mut per_set = Vec::with_capacity(isets[i].len());
        for iset in &isets[i] {
            if space > PROFILE_CAP {
                per_set.push(None);
                continue;
            }
            let mut codes: BTreeSet<u64> = BTreeSet::new();
            for &m in &iset.members {
                // per opponent, strategies consistent with the path to m
                let axes: Vec<Vec<usize>> = opp_players[i]
                    .iter()
                    .map(|&j| {
                        (0..strategies[j].len())
                            .filter(|&s| {
                                exp[m][j]
                                    .iter()
                                    .all(|&(sig, a)| strategies[j][s][sig] == a)
                            })
                            .collect()
                    })
                    .collect();
                if axes.iter().any(|a| a.is_empty()) {
                    continue;
                }
                let mut sel = vec![0usize; axes.len()];
                loop {
                    let mut code = 0u64;
                    for (slot, &j) in opp_players[i].iter().enumerate() {
                        code = code * strategies[j].len() as u64 + axes[slot][sel[slot]] as u64;
                    }
                    codes.insert(code);
                    let mut pos = axes.len();
                    loop {
                        if pos == 0 {
                            break;
                        }
                        pos -= 1;
                        sel[pos] += 1;
                        if sel[pos] < axes[pos].len() {
                            break;
                        }
                        sel[pos] = 0;
                        if pos == 0 {
                            pos = usize::MAX;
                            break;
                        }
                    }
                    if pos == usize::MAX || axes.is_empty() {
                        break;
                    }
                }
            }
            per_set.push(Some(codes.into_iter().collect()));
        }
        reach.push(per_set);
    }

    Ok(Game {
        players: raw.players.clone(),
        node_ids: raw.nodes.iter().map(|n| n.id.clone()).collect(),
        nodes,
        root,
        isets,
        set_at,
        exp,
        strategies,
        opp_players,
        reach,
        anc,
    })
}

fn push_anc(parent_anc: &[usize], parent: usize) -> Vec<usize> {
    let mut v = Vec::with_capacity(parent_anc.len() + 1);
    v.extend_from_slice(parent_anc);
    v.push(parent);
    v
}

impl Game {
    /// Reconstruct the serializable form (canonical ordering: nodes in input
    /// order, edges in action-profile order, info sets grouped by player).
    pub fn to_raw(&self) -> RawGame {
        let nodes = self
            .nodes
            .iter()
            .enumerate()
            .map(|(ix, n)| {
                let id = self.node_ids[ix].clone();
                match n {
                    NodeKind::Decision {
                        movers,
                        acts,
                        children,
                    } => {
                        let mut edges = Vec::with_capacity(children.len());
                        for (flat, &c) in children.iter().enumerate() {
                            let mut profile = vec![String::new(); movers.len()];
                            let mut rest = flat;
                            for slot in (0..movers.len()).rev() {
                                profile[slot] = acts[slot][rest % acts[slot].len()].clone();
                                rest /= acts[slot].len();
                            }
                            edges.push(RawEdge {
                                profile,
                                child: self.node_ids[c].clone(),
                            });
                        }
                        RawNode {
                            id,
                            kind: "decision".into(),
                            movers: Some(
                                movers.iter().map(|&m| self.players[m].clone()).collect(),
                            ),
                            actions: Some(edges),
                            chance_probs: None,
                            payoffs: None,
                        }
                    }
                    NodeKind::Chance { branches } => RawNode {
                        id,
                        kind: "chance".into(),
                        movers: None,
                        actions: None,
                        chance_probs: Some(
                            branches
                                .iter()
                                .map(|(p, c)| RawChance {
                                    child: self.node_ids[*c].clone(),
                                    prob: format_rat(p),
                                })
                                .collect(),
                        ),
                        payoffs: None,
                    },
                    NodeKind::Terminal { payoffs } => RawNode {
                        id,
                        kind: "terminal".into(),
                        movers: None,
                        actions: None,
                        chance_probs: None,
                        payoffs: Some(payoffs.iter().map(format_rat).collect()),
                    },
                }
            })
            .collect();
        let mut info_sets = Vec::new();
        for (i, sets) in self.isets.iter().enumerate() {
            for s in sets {
                info_sets.push(RawInfoSet {
                    player: self.players[i].clone(),
                    members: s.members.iter().map(|&m| self.node_ids[m].clone()).collect(),
                });
            }
        }
        RawGame {
            players: self.players.clone(),
            root: self.node_ids[self.root].clone(),
            nodes,
            info_sets,
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("game serializes")
    }
}
