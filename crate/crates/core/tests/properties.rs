use std::sync::OnceLock;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use flypecheck::achirality::achiral_oracle;
use flypecheck::canon::Degree;
use flypecheck::checkerboard::{checkerboard_graphs, graphs_equivalent};
use flypecheck::decomposition::{canonical_family, canonical_family_seeded, decompose};
use flypecheck::diagram::{parse_gauss, parse_pd, Diagram};
use flypecheck::flype::{flype_closure, random_flypes, DEFAULT_BUDGET};
use flypecheck::tree::build_tree;

fn corpus() -> &'static Vec<(String, String)> {
    static C: OnceLock<Vec<(String, String)>> = OnceLock::new();
    C.get_or_init(|| {
        let text = include_str!("../../../data/alternating_knots_le10.pd");
        text.lines()
            .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
            .map(|l| {
                let (pd, name) = l.split_once('#').unwrap();
                (pd.trim().to_string(), name.trim().to_string())
            })
            .collect()
    })
}

fn tuples(pd: &str) -> Vec<Vec<i64>> {
    pd.split("X[")
        .skip(1)
        .map(|t| t.trim_end().trim_end_matches(']').split(',').map(|x| x.trim().parse().unwrap()).collect())
        .collect()
}

fn render(ts: &[Vec<i64>]) -> String {
    ts.iter()
        .map(|t| format!("X[{}]", t.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn diagram(i: usize) -> Diagram {
    parse_pd(&corpus()[i].0).unwrap()
}

fn index() -> impl Strategy<Value = usize> {
    0..corpus().len()
}

/// Diagrams with at most eight crossings, for the slower properties.
fn small_index() -> impl Strategy<Value = usize> {
    let n = corpus().iter().filter(|(pd, _)| tuples(pd).len() <= 8).count();
    0..n
}

fn sorted_insides(fam: &flypecheck::decomposition::HasemanFamily) -> Vec<Vec<bool>> {
    let mut v: Vec<_> = fam.curves.iter().map(|c| c.inside.clone()).collect();
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelled_pd_has_the_same_code(i in index(), shift in 0i64..40, perm_seed in any::<u64>()) {
        let (pd, _) = &corpus()[i];
        let mut ts = tuples(pd);
        let m = 2 * ts.len() as i64;
        for t in &mut ts {
            for x in t.iter_mut() {
                *x = (*x - 1 + shift).rem_euclid(m) + 1;
            }
        }
        let mut rng = StdRng::seed_from_u64(perm_seed);
        rand::seq::SliceRandom::shuffle(ts.as_mut_slice(), &mut rng);
        let d = parse_pd(pd).unwrap();
        let e = parse_pd(&render(&ts)).unwrap();
        prop_assert_eq!(d.canonical_code(Degree::Plus), e.canonical_code(Degree::Plus));
    }

    #[test]
    fn codes_round_trip(i in index()) {
        let d = diagram(i);
        let code = d.canonical_code(Degree::Plus);
        prop_assert_eq!(parse_pd(&d.to_pd()).unwrap().canonical_code(Degree::Plus), code.clone());
        prop_assert_eq!(parse_gauss(&d.to_gauss()).unwrap().canonical_code(Degree::Plus), code);
    }

    #[test]
    fn mirror_and_reverse_commute(i in index()) {
        let d = diagram(i);
        let a = d.mirror().reverse().unwrap();
        let b = d.reverse().unwrap().mirror();
        prop_assert_eq!(a.canonical_code(Degree::Plus), b.canonical_code(Degree::Plus));
        prop_assert_eq!(d.mirror().mirror().canonical_code(Degree::Plus), d.canonical_code(Degree::Plus));
        prop_assert_eq!(d.reflect().canonical_code(Degree::Minus), d.canonical_code(Degree::Plus));
    }

    #[test]
    fn family_ignores_greedy_order(i in index(), seed in any::<u64>()) {
        let d = diagram(i);
        prop_assert_eq!(
            sorted_insides(&canonical_family(&d)),
            sorted_insides(&canonical_family_seeded(&d, seed))
        );
    }

    #[test]
    fn tree_survives_random_flypes(i in index(), seed in any::<u64>(), steps in 0usize..=20) {
        let d = diagram(i);
        let mut rng = StdRng::seed_from_u64(seed);
        let e = random_flypes(&d, steps, &mut rng);
        let t = build_tree(&decompose(&d).unwrap());
        let u = build_tree(&decompose(&e).unwrap());
        prop_assert_eq!(t.term(), u.term());
        prop_assert_eq!(e.crossing_count(), d.crossing_count());
    }

    #[test]
    fn checkerboard_duality(i in index()) {
        let d = diagram(i);
        let (g, gs) = checkerboard_graphs(&d);
        prop_assert_eq!(g.vertex_count() + gs.vertex_count(), d.crossing_count() + 2);
        prop_assert!(graphs_equivalent(&g.dual().dual(), &g, Degree::Plus, false));
        let dual = g.dual();
        prop_assert!(
            graphs_equivalent(&dual, &gs, Degree::Plus, false)
                || graphs_equivalent(&dual, &gs, Degree::Minus, false)
        );
        prop_assert_eq!(dual.signs, gs.signs.clone());
        let (h, hs) = checkerboard_graphs(&d.mirror());
        prop_assert_eq!(h.signs.iter().map(|s| -s).collect::<Vec<_>>(), g.signs.clone());
        prop_assert_eq!(hs.rotation.len(), gs.rotation.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdict_is_a_flype_class_invariant(i in small_index(), seed in any::<u64>()) {
        let d = diagram(i);
        let mut rng = StdRng::seed_from_u64(seed);
        let e = random_flypes(&d, 10, &mut rng);
        let a = achiral_oracle(&d, DEFAULT_BUDGET).unwrap();
        let b = achiral_oracle(&e, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!((a.plus, a.minus), (b.plus, b.minus));
        prop_assert!(flype_closure(&d, DEFAULT_BUDGET).unwrap().contains(&e));
    }
}
