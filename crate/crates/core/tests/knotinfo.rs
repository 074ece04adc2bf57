use std::collections::HashMap;

use flypecheck::achirality::achiral_oracle;
use flypecheck::diagram::parse_pd;
use flypecheck::flype::DEFAULT_BUDGET;

#[test]
fn oracle_matches_knotinfo_symmetry_types() {
    let types: HashMap<&str, &str> = include_str!("../../../data/knotinfo_symmetry.tsv")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| l.split_once('\t'))
        .collect();
    let corpus = include_str!("../../../data/alternating_knots_le10.pd");
    let mut checked = 0;
    for line in corpus.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        let name = line.split('#').nth(1).unwrap().trim();
        let d = parse_pd(line).unwrap();
        let v = achiral_oracle(&d, DEFAULT_BUDGET).unwrap();
        let (plus, minus) = match types[name] {
            "fully amphicheiral" => (true, true),
            "negative amphicheiral" => (false, true),
            "positive amphicheiral" => (true, false),
            _ => (false, false),
        };
        assert_eq!((v.plus, v.minus), (plus, minus), "{name}");
        checked += 1;
    }
    assert_eq!(checked, 196);
}
