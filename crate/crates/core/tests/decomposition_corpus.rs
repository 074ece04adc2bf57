use flypecheck::decomposition::{classify_piece, decompose, Decomposer, PieceClass};
use flypecheck::diagram::parse_pd;

#[test]
fn corpus_decompositions_are_admissible_and_order_free() {
    let corpus = include_str!("../../../data/alternating_knots_le10.pd");
    let mut stats = std::collections::BTreeMap::new();
    for line in corpus.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        let name = line.split('#').nth(1).unwrap().trim();
        let d = parse_pd(line).unwrap();
        let dec = decompose(&d).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(dec.pieces.len(), dec.family.len() + 1);
        for (p, c) in dec.pieces.iter().zip(&dec.classes) {
            assert!(c.admissible(), "{name}: {c:?}");
            assert_eq!(&classify_piece(p).unwrap(), c);
        }
        let jewels = dec.classes.iter().filter(|c| matches!(c, PieceClass::Jewel)).count();
        *stats.entry((dec.family.len(), jewels)).or_insert(0) += 1;
        let dc = Decomposer::new(&d);
        let base = dc.family_for_seed(0);
        for seed in 1..10 {
            assert_eq!(dc.family_for_seed(seed), base, "{name} seed {seed}");
        }
    }
    eprintln!("{stats:?}");
}
