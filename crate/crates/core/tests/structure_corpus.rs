use flypecheck::achirality::{achiral_oracle, decide_via_structure};
use flypecheck::diagram::parse_pd;
use flypecheck::flype::DEFAULT_BUDGET;

#[test]
fn structured_method_agrees_with_oracle() {
    let corpus = include_str!("../../../data/alternating_knots_le10.pd");
    let mut bad = Vec::new();
    for line in corpus.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        let name = line.split('#').nth(1).unwrap().trim();
        let d = parse_pd(line).unwrap();
        let o = achiral_oracle(&d, DEFAULT_BUDGET).unwrap();
        match decide_via_structure(&d, DEFAULT_BUDGET) {
            Ok(s) => {
                if (o.plus, o.minus) != (s.plus, s.minus) {
                    bad.push(format!("{name}: oracle {:?} structure {:?} {:?}", (o.plus, o.minus), (s.plus, s.minus), s.evidence));
                }
            }
            Err(e) => bad.push(format!("{name}: error {e}")),
        }
    }
    for b in &bad {
        println!("{b}");
    }
    assert!(bad.is_empty(), "{} disagreements", bad.len());
}

#[test]
fn every_minus_achiral_knot_has_a_verified_witness() {
    use flypecheck::achirality::{tait_witness, verify_involution};
    let corpus = include_str!("../../../data/alternating_knots_le10.pd");
    let mut n = 0;
    for line in corpus.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        let name = line.split('#').nth(1).unwrap().trim();
        let d = parse_pd(line).unwrap();
        if !achiral_oracle(&d, DEFAULT_BUDGET).unwrap().minus {
            continue;
        }
        let w = tait_witness(&d, DEFAULT_BUDGET).unwrap_or_else(|e| panic!("{name}: {e}"));
        let c = verify_involution(&d, &w);
        assert!(c.passed(), "{name}: {:?}", c.failures());
        n += 1;
    }
    println!("{n} witnesses");
}
