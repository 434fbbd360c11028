mod common;

use beliefs::{
    dominated_by_mixture, exists_belief_system, exists_rationalizing_belief, is_rational_at,
    Belief, DominanceKind, RationalityFlavor, SetSpec, SupportSpec, SystemMode,
};
use common::{bos1, centipede, matrix_game};
use game_core::{Game, Rat};
use proptest::prelude::*;

fn payoff_rows(g: &Game, i: usize) -> Vec<Vec<Rat>> {
    let codes: Vec<u64> = (0..g.n_opp_profiles(i)).collect();
    (0..g.n_strategies(i))
        .map(|s| {
            codes
                .iter()
                .map(|&c| g.eu(&g.full_profile(i, s, c), i))
                .collect()
        })
        .collect()
}

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<(i64, i64)>)> {
    (2usize..=3, 2usize..=3).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-5i64..=5, -5i64..=5), r * c)
            .prop_map(move |cells| (r, c, cells))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// A returned witness really certifies rationality, and the existence
    /// answer is the complement of strict dominance by a mixture.
    #[test]
    fn witnesses_are_sound_and_dual_to_dominance((r, c, cells) in small_matrix()) {
        let g = matrix_game(r, c, &cells);
        let rows = payoff_rows(&g, 0);
        let all: Vec<u64> = (0..c as u64).collect();
        for s in 0..r {
            let spec = SetSpec::Any(all.clone());
            let found = exists_rationalizing_belief(&g, 0, 0, s, &spec, RationalityFlavor::Strong)
                .unwrap();
            if let Some(b) = &found {
                prop_assert!(is_rational_at(&g, 0, 0, s, b).unwrap());
                prop_assert!(b.concentrated_on(&all));
            }
            let dominated =
                dominated_by_mixture(&rows, &rows[s], DominanceKind::Strict).is_some();
            prop_assert_eq!(found.is_none(), dominated);
        }
    }

    /// Positive affine rescaling of one player's utilities changes no
    /// boolean answer.
    #[test]
    fn affine_invariance((r, c, cells) in small_matrix(), a in 1i64..=3, b in -3i64..=3) {
        let g = matrix_game(r, c, &cells);
        let scaled: Vec<(i64, i64)> = cells.iter().map(|&(u0, u1)| (a * u0 + b, u1)).collect();
        let h = matrix_game(r, c, &scaled);
        let rows_g = payoff_rows(&g, 0);
        let rows_h = payoff_rows(&h, 0);
        let all: Vec<u64> = (0..c as u64).collect();
        let uniform = Belief::uniform(&all);
        for s in 0..r {
            prop_assert_eq!(
                is_rational_at(&g, 0, 0, s, &uniform).unwrap(),
                is_rational_at(&h, 0, 0, s, &uniform).unwrap()
            );
            let spec = SetSpec::Any(all.clone());
            prop_assert_eq!(
                exists_rationalizing_belief(&g, 0, 0, s, &spec, RationalityFlavor::Strong)
                    .unwrap()
                    .is_some(),
                exists_rationalizing_belief(&h, 0, 0, s, &spec, RationalityFlavor::Strong)
                    .unwrap()
                    .is_some()
            );
            for kind in [DominanceKind::Strict, DominanceKind::Weak] {
                prop_assert_eq!(
                    dominated_by_mixture(&rows_g, &rows_g[s], kind).is_some(),
                    dominated_by_mixture(&rows_h, &rows_h[s], kind).is_some()
                );
            }
        }
    }

    /// A strict-mode witness implies a local-mode witness under the same
    /// support prescription (the strict constraints are a superset).
    #[test]
    fn strict_implies_local(masks in proptest::collection::vec(1u8..=3, 4)) {
        for (g, player) in [(bos1(), 0usize), (centipede(), 1usize)] {
            let n_sets = g.own_sets(player).len();
            let mut per_set = Vec::new();
            for set in 0..n_sets {
                let reach = g.reach_list(player, set).unwrap();
                let mask = masks[set % masks.len()];
                let subset: Vec<u64> = reach
                    .iter()
                    .enumerate()
                    .filter(|(slot, _)| mask >> (slot % 2) & 1 == 1)
                    .map(|(_, &c)| c)
                    .collect();
                let subset = if subset.is_empty() { reach.to_vec() } else { subset };
                per_set.push(SetSpec::Any(subset));
            }
            let spec = SupportSpec { per_set };
            for s in 0..g.n_strategies(player) {
                for flavor in [RationalityFlavor::Strong, RationalityFlavor::Continuation] {
                    let strict =
                        exists_belief_system(&g, player, s, &spec, flavor, SystemMode::Strict)
                            .unwrap();
                    if strict.is_some() {
                        let local =
                            exists_belief_system(&g, player, s, &spec, flavor, SystemMode::Local)
                                .unwrap();
                        prop_assert!(
                            local.is_some(),
                            "strict witness without local witness: player {}, strategy {}",
                            player,
                            s
                        );
                    }
                }
            }
        }
    }
}
