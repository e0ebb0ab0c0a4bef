//! Randomized property tests over the rank model and probability profile.

use proptest::prelude::*;

use rankgraph::pair::{all_pairs, pair_count};
use rankgraph::rank::Direction;
use rankgraph::zoo::{spatial, Metric, Positions};
use rankgraph::{ProbabilityProfile, RankModel};

proptest! {
    #[test]
    fn pair_index_is_a_bijection(n in 2u32..60) {
        let mut seen = vec![false; pair_count(n)];
        for p in all_pairs(n) {
            let idx = p.index(n);
            prop_assert!(!seen[idx]);
            seen[idx] = true;
        }
        prop_assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn lower_cost_always_outranks_higher_cost(
        n in 3u32..20,
        tie_seed in any::<u64>(),
        salt in any::<u64>(),
    ) {
        // Pseudorandom but deterministic costs with deliberate ties.
        let cost = move |u: u32, v: u32| {
            ((u as u64 * 31 + v as u64 * 17 + salt) % 7) as f64
        };
        let model = RankModel::from_cost(n, Direction::Ascending, tie_seed, cost).unwrap();
        for a in all_pairs(n) {
            for b in all_pairs(n) {
                if cost(a.u, a.v) < cost(b.u, b.v) {
                    prop_assert!(model.rank_of(a).unwrap() < model.rank_of(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn tie_seed_only_permutes_equal_costs(
        n in 3u32..16,
        seed_a in any::<u64>(),
        seed_b in any::<u64>(),
    ) {
        let cost = |u: u32, v: u32| ((u + v) % 3) as f64;
        let a = RankModel::from_cost(n, Direction::Ascending, seed_a, cost).unwrap();
        let b = RankModel::from_cost(n, Direction::Ascending, seed_b, cost).unwrap();
        for p in all_pairs(n) {
            for q in all_pairs(n) {
                if cost(p.u, p.v) != cost(q.u, q.v) {
                    let order_a = a.rank_of(p).unwrap() < a.rank_of(q).unwrap();
                    let order_b = b.rank_of(p).unwrap() < b.rank_of(q).unwrap();
                    prop_assert_eq!(order_a, order_b);
                }
            }
        }
    }

    #[test]
    fn profiles_conserve_mass_and_stay_monotone(
        l in 1usize..3000,
        m_frac in 0.0f64..=1.0,
        epsilon in 0.0f64..=1.0,
    ) {
        let m = m_frac * l as f64;
        let p = ProbabilityProfile::new(l, m, epsilon).unwrap();
        let tol = 1e-9 * m.max(1.0);
        prop_assert!((p.expected_edges() - m).abs() <= tol,
            "mass {} vs {} at l={l} eps={epsilon}", p.expected_edges(), m);
        for w in p.probabilities().windows(2) {
            prop_assert!(w[1] <= w[0] + 1e-12);
        }
        for &prob in p.probabilities() {
            prop_assert!((0.0..=1.0).contains(&prob));
        }
    }

    #[test]
    fn spatial_rank_is_translation_and_scale_invariant(
        n in 3u32..24,
        seed in any::<u64>(),
        shift in -100.0f64..100.0,
        scale in 0.01f64..50.0,
    ) {
        let base = Positions::uniform(n, 2, seed);
        let moved = Positions::new(
            (0..n)
                .map(|i| base.row(i).iter().map(|x| scale * x + shift).collect())
                .collect(),
        )
        .unwrap();
        let a = spatial(n, 2, Some(base), Metric::Euclidean, 1).unwrap();
        let b = spatial(n, 2, Some(moved), Metric::Euclidean, 1).unwrap();
        prop_assert_eq!(a.pairs_by_rank(), b.pairs_by_rank());
    }
}
