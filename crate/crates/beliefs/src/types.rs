//! Beliefs over opponent strategy profiles, per-info-set belief systems,
//! and per-info-set support prescriptions.

use game_core::{format_rat, Game, Rat};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// A probability distribution over opponent strategy-profile codes.
/// Only positive weights are stored; the weights sum to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Belief {
    weights: BTreeMap<u64, Rat>,
}

impl Belief {
    /// Build from (code, weight) pairs. Zero weights are dropped; weights
    /// must be nonnegative and sum to 1, and the support must be nonempty.
    pub fn new(pairs: impl IntoIterator<Item = (u64, Rat)>) -> Belief {
        let mut weights = BTreeMap::new();
        let mut sum = Rat::zero();
        for (code, w) in pairs {
            assert!(!w.is_negative(), "negative belief weight");
            if w.is_zero() {
                continue;
            }
            sum += &w;
            let slot = weights.entry(code).or_insert_with(Rat::zero);
            *slot += w;
        }
        assert!(sum.is_one(), "belief weights must sum to 1");
        assert!(!weights.is_empty(), "belief support must be nonempty");
        Belief { weights }
    }

    pub fn point(code: u64) -> Belief {
        Belief::new([(code, Rat::one())])
    }

    pub fn uniform(codes: &[u64]) -> Belief {
        assert!(!codes.is_empty(), "uniform belief over empty support");
        let w = Rat::new(1.into(), (codes.len() as i64).into());
        Belief::new(codes.iter().map(|&c| (c, w.clone())))
    }

    /// Normalize nonnegative weights with positive total mass.
    pub fn normalized(pairs: impl IntoIterator<Item = (u64, Rat)>) -> Belief {
        let raw: Vec<(u64, Rat)> = pairs.into_iter().collect();
        let total: Rat = raw.iter().map(|(_, w)| w.clone()).sum();
        assert!(total.is_positive(), "cannot normalize zero mass");
        Belief::new(raw.into_iter().map(|(c, w)| (c, w / &total)))
    }

    pub fn weight(&self, code: u64) -> Rat {
        self.weights.get(&code).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.weights.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &Rat)> {
        self.weights.iter().map(|(&c, w)| (c, w))
    }

    pub fn mass_on(&self, codes: &[u64]) -> Rat {
        codes.iter().map(|c| self.weight(*c)).sum()
    }

    /// Conditional on a sub-support (mass on it must be positive).
    pub fn conditioned_on(&self, codes: &[u64]) -> Belief {
        Belief::normalized(
            codes
                .iter()
                .filter_map(|&c| self.weights.get(&c).map(|w| (c, w.clone()))),
        )
    }

    /// Does the belief assign probability 1 to the given sorted code set?
    pub fn concentrated_on(&self, codes: &[u64]) -> bool {
        self.support().all(|c| codes.binary_search(&c).is_ok())
    }

    pub fn to_json(&self, game: &Game, player: usize) -> Value {
        let entries: Vec<Value> = self
            .iter()
            .map(|(code, w)| {
                let parts = game.opp_decode(player, code);
                let profile: BTreeMap<String, String> = game
                    .opp_players(player)
                    .iter()
                    .zip(&parts)
                    .map(|(&j, &s)| {
                        (game.player_name(j).to_string(), game.strategy_label(j, s))
                    })
                    .collect();
                json!({"profile": profile, "weight": format_rat(w)})
            })
            .collect();
        Value::Array(entries)
    }
}

/// One belief per own information set, in own-set order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeliefSystem {
    pub player: usize,
    pub beliefs: Vec<Belief>,
}

impl BeliefSystem {
    pub fn at(&self, set: usize) -> &Belief {
        &self.beliefs[set]
    }

    /// Check the two system axioms against the game:
    /// every belief concentrated on profiles reaching its set, and beliefs at
    /// later sets obtained by conditioning whenever the earlier belief gives
    /// the later reach set positive probability.
    pub fn check_axioms(&self, game: &Game) -> game_core::Result<(bool, bool)> {
        let i = self.player;
        let mut reaching = true;
        for (set, b) in self.beliefs.iter().enumerate() {
            let rl = game.reach_list(i, set)?;
            if !b.concentrated_on(rl) {
                reaching = false;
            }
        }
        let mut conditioning = true;
        let n = self.beliefs.len();
        for earlier in 0..n {
            for later in 0..n {
                if !game.strictly_precedes(i, earlier, later) {
                    continue;
                }
                let rl = game.reach_list(i, later)?;
                let mass = self.beliefs[earlier].mass_on(rl);
                if mass.is_positive()
                    && self.beliefs[earlier].conditioned_on(rl) != self.beliefs[later]
                {
                    conditioning = false;
                }
            }
        }
        Ok((reaching, conditioning))
    }

    pub fn to_json(&self, game: &Game) -> Value {
        let sets: Vec<Value> = self
            .beliefs
            .iter()
            .enumerate()
            .map(|(set, b)| {
                json!({
                    "info_set": set,
                    "belief": b.to_json(game, self.player),
                })
            })
            .collect();
        json!({"player": game.player_name(self.player), "beliefs": sets})
    }
}

/// The uniform belief system: at every own set, uniform over the opponent
/// profiles reaching it. Satisfies both system axioms by construction.
pub fn uniform_system(game: &Game, player: usize) -> game_core::Result<BeliefSystem> {
    let beliefs = (0..game.own_sets(player).len())
        .map(|set| Ok(Belief::uniform(game.reach_list(player, set)?)))
        .collect::<game_core::Result<Vec<_>>>()?;
    Ok(BeliefSystem { player, beliefs })
}

/// What beliefs are admissible at one info set during a membership test.
#[derive(Clone, Debug)]
pub enum SetSpec {
    /// Some belief supported inside the given codes (after intersecting with
    /// the reach set). An empty intersection admits no belief.
    Any(Vec<u64>),
    /// Some belief whose support is exactly the given codes intersected with
    /// the reach set, every weight positive.
    Full(Vec<u64>),
    /// Exactly this belief; no freedom.
    Fixed(Belief),
}

/// Per-info-set admissible beliefs for one player.
#[derive(Clone, Debug)]
pub struct SupportSpec {
    pub per_set: Vec<SetSpec>,
}

impl SetSpec {
    /// Resolve an allowed-support prescription: beliefs range over
    /// `allowed` ∩ reach when that is nonempty; otherwise rationality is
    /// tested against the fallback belief alone.
    pub fn allowed_or(
        game: &Game,
        player: usize,
        set: usize,
        allowed: &[u64],
        fallback: Belief,
    ) -> game_core::Result<SetSpec> {
        let reach = game.reach_list(player, set)?;
        let eff: Vec<u64> = allowed
            .iter()
            .copied()
            .filter(|c| reach.binary_search(c).is_ok())
            .collect();
        if eff.is_empty() {
            Ok(SetSpec::Fixed(fallback))
        } else {
            Ok(SetSpec::Any(eff))
        }
    }
}

impl SupportSpec {
    /// Free beliefs everywhere: anything over each reach set.
    pub fn free(game: &Game, player: usize) -> game_core::Result<SupportSpec> {
        let per_set = (0..game.own_sets(player).len())
            .map(|set| Ok(SetSpec::Any(game.reach_list(player, set)?.to_vec())))
            .collect::<game_core::Result<Vec<_>>>()?;
        Ok(SupportSpec { per_set })
    }
}
