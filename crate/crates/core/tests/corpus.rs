use flypecheck::canon::Degree;
use flypecheck::diagram::{parse_pd, validate};

fn corpus() -> Vec<(String, String)> {
    let text = include_str!("../../../data/alternating_knots_le10.pd");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|l| {
            let name = l.split('#').nth(1).unwrap_or("").trim().to_string();
            (name, l.to_string())
        })
        .collect()
}

#[test]
fn every_corpus_diagram_is_a_reduced_prime_alternating_knot() {
    let c = corpus();
    assert_eq!(c.len(), 196);
    for (name, line) in &c {
        let d = parse_pd(line).unwrap_or_else(|e| panic!("{name}: {e}"));
        let r = validate(&d);
        assert!(r.is_valid_knot(), "{name}: {r:?}");
    }
}

#[test]
fn pd_output_reparses_to_the_same_diagram() {
    for (name, line) in corpus().iter().step_by(7) {
        let d = parse_pd(line).unwrap();
        let e = parse_pd(&d.to_pd()).unwrap();
        assert_eq!(d.canonical_code(Degree::Plus), e.canonical_code(Degree::Plus), "{name}");
    }
}
