//! Oriented knot and link diagrams on the 2-sphere.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::{self, CanonicalCode, Degree, Roots};
use crate::error::{Error, Result};
use crate::map::{opposite, slot, vertex_of, Dart, Map4, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CodeFormat {
    Pd,
    Gauss,
}

/// A diagram: a 4-regular planar map of crossings with an orientation of
/// every strand. `out[d]` is true when the strand leaves its crossing
/// through dart `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    map: Map4,
    out: Vec<bool>,
}

/// Follows a strand: from an outgoing dart to the next outgoing dart.
#[inline]
pub fn strand_next(map: &Map4, d: Dart) -> Dart {
    opposite(map.twin(d))
}

impl Diagram {
    /// Builds a diagram from a map of crossings, orienting every strand
    /// component. `hint` may fix the direction of some darts; a component
    /// without hints is oriented from its lowest dart.
    pub fn from_map(map: Map4, hint: impl Fn(Dart) -> Option<bool>) -> Result<Diagram> {
        if map.vertex_count() == 0 {
            return Err(Error::EmptyDiagram);
        }
        if map.vertices().iter().any(|v| !v.is_crossing()) {
            return Err(Error::Precondition("diagram map contains tangle vertices".into()));
        }
        map.check_planar().map_err(Error::MalformedCode)?;
        let n = map.dart_count();
        let mut out: Vec<Option<bool>> = vec![None; n];
        let set = |out: &mut Vec<Option<bool>>, start: Dart| -> Result<()> {
            let mut d = start;
            loop {
                for (x, val) in [(d, true), (map.twin(d), false), (opposite(d), false)] {
                    match out[x] {
                        Some(v) if v != val => {
                            return Err(Error::MalformedCode(
                                "strand orientation is inconsistent".into(),
                            ))
                        }
                        _ => out[x] = Some(val),
                    }
                }
                d = strand_next(&map, d);
                if d == start {
                    return Ok(());
                }
            }
        };
        for d in 0..n {
            if out[d].is_none() {
                if let Some(h) = hint(d) {
                    let start = if h { d } else { opposite(d) };
                    set(&mut out, start)?;
                }
            }
        }
        for d in 0..n {
            if out[d].is_none() {
                set(&mut out, d)?;
            }
        }
        Ok(Diagram { map, out: out.into_iter().map(|x| x.unwrap()).collect() })
    }

    pub fn map(&self) -> &Map4 {
        &self.map
    }

    pub fn orientation(&self) -> &[bool] {
        &self.out
    }

    pub fn is_out(&self, d: Dart) -> bool {
        self.out[d]
    }

    pub fn crossing_count(&self) -> usize {
        self.map.vertex_count()
    }

    /// Strand components as cyclic lists of outgoing darts.
    pub fn strands(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.map.dart_count()];
        let mut comps = Vec::new();
        for s in 0..self.map.dart_count() {
            if !self.out[s] || seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                comp.push(d);
                d = strand_next(&self.map, d);
            }
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.strands().len()
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Swaps every over/under assignment; the shadow is unchanged.
    pub fn mirror(&self) -> Diagram {
        Diagram { map: self.map.mirrored(), out: self.out.clone() }
    }

    /// Reverses the orientation of a knot.
    pub fn reverse(&self) -> Result<Diagram> {
        let k = self.component_count();
        if k != 1 {
            return Err(Error::NotAKnot(k));
        }
        Ok(self.reverse_all())
    }

    pub(crate) fn reverse_all(&self) -> Diagram {
        Diagram { map: self.map.clone(), out: self.out.iter().map(|b| !b).collect() }
    }

    /// Image under a degree -1 sphere map: every cyclic order reversed.
    pub fn reflect(&self) -> Diagram {
        let mut out = vec![false; self.out.len()];
        for d in 0..out.len() {
            out[Map4::reflect_dart(d)] = self.out[d];
        }
        Diagram { map: self.map.reflected(), out }
    }

    /// The diagram seen from the other side of the sphere: rotations reversed
    /// and crossings swapped. This is an isotopy of the knot (the flype whose
    /// outer tangle carries no crossings).
    pub fn turned_over(&self) -> Diagram {
        self.reflect().mirror()
    }

    pub fn canonical_code(&self, degree: Degree) -> CanonicalCode {
        canon::canonical_code(&self.map, Some(&self.out), degree, Roots::All)
    }

    /// Code ignoring strand orientation.
    pub fn unoriented_code(&self, degree: Degree) -> CanonicalCode {
        canon::canonical_code(&self.map, None, degree, Roots::All)
    }

    /// PD code with edges numbered along the strands, components in order.
    pub fn to_pd(&self) -> String {
        let mut label = vec![0usize; self.map.dart_count()];
        let mut next = 1;
        for comp in self.strands() {
            for &d in &comp {
                label[d] = next;
                label[self.map.twin(d)] = next;
                next += 1;
            }
        }
        let mut parts = Vec::new();
        for v in 0..self.map.vertex_count() {
            let start = (0..4)
                .map(|i| 4 * v + i)
                .find(|&d| !self.map.is_over(d) && !self.out[d])
                .expect("every crossing has an incoming under-strand");
            let labels: Vec<String> =
                (0..4).map(|k| label[4 * v + (slot(start) + k) % 4].to_string()).collect();
            parts.push(format!("X[{}]", labels.join(",")));
        }
        parts.join(" ")
    }

    /// Extended Gauss code: one token per visit, `O`/`U`, crossing number, sign.
    pub fn to_gauss(&self) -> String {
        let comps = self.strands();
        let mut parts = Vec::new();
        for comp in comps {
            let toks: Vec<String> = comp
                .iter()
                .map(|&d| {
                    let t = self.map.twin(d);
                    let v = vertex_of(t);
                    format!(
                        "{}{}{}",
                        if self.map.is_over(t) { 'O' } else { 'U' },
                        v + 1,
                        if self.crossing_sign(v) > 0 { '+' } else { '-' }
                    )
                })
                .collect();
            parts.push(toks.join(" "));
        }
        parts.join(", ")
    }

    /// Sign of a crossing: +1 when, looking along the over-strand, the
    /// under-strand passes from right to left.
    pub fn crossing_sign(&self, v: usize) -> i8 {
        let under_in = (0..4)
            .map(|i| 4 * v + i)
            .find(|&d| !self.map.is_over(d) && !self.out[d])
            .unwrap();
        // counterclockwise from the incoming under dart: the next dart is the outgoing over dart
        if self.out[crate::map::ccw(under_in)] {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|v| self.crossing_sign(v) as i64).sum()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd())
    }
}

pub fn parse(text: &str, format: CodeFormat) -> Result<Diagram> {
    match format {
        CodeFormat::Pd => parse_pd(text),
        CodeFormat::Gauss => parse_gauss(text),
    }
}

fn strip_comment(text: &str) -> &str {
    text.split('#').next().unwrap_or("").trim()
}

/// Parses whitespace-separated `X[a,b,c,d]` tuples, each listed
/// counterclockwise from the incoming under-strand. A JSON-like list of
/// quadruples `[[a,b,c,d],...]` is accepted as well.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let body = strip_comment(text);
    let tuples = if body.starts_with("[[") {
        parse_nested_list(body)?
    } else {
        parse_x_tuples(body)?
    };
    pd_to_diagram(&tuples)
}

fn parse_numbers(inner: &str) -> Result<Vec<i64>> {
    inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::MalformedCode(format!("bad edge label {:?}", s.trim())))
        })
        .collect()
}

fn parse_x_tuples(body: &str) -> Result<Vec<Vec<i64>>> {
    let mut rest = body.trim_start_matches("PD[").trim_end_matches(']');
    if !body.starts_with("PD[") {
        rest = body;
    }
    let mut out = Vec::new();
    let mut s = rest.trim();
    while !s.is_empty() {
        let Some(after) = s.strip_prefix("X[") else {
            return Err(Error::MalformedCode(format!("expected X[...] at {:?}", truncate(s))));
        };
        let close = after
            .find(']')
            .ok_or_else(|| Error::MalformedCode("unterminated X[...] tuple".into()))?;
        out.push(parse_numbers(&after[..close])?);
        s = after[close + 1..].trim_start_matches(|c: char| c.is_whitespace() || c == ',');
    }
    Ok(out)
}

fn parse_nested_list(body: &str) -> Result<Vec<Vec<i64>>> {
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::MalformedCode("unbalanced brackets".into()))?;
    let mut out = Vec::new();
    let mut s = inner.trim();
    while !s.is_empty() {
        let after = s
            .strip_prefix('[')
            .ok_or_else(|| Error::MalformedCode(format!("expected [ at {:?}", truncate(s))))?;
        let close =
            after.find(']').ok_or_else(|| Error::MalformedCode("unterminated tuple".into()))?;
        out.push(parse_numbers(&after[..close])?);
        s = after[close + 1..].trim_start_matches(|c: char| c.is_whitespace() || c == ',');
    }
    Ok(out)
}

fn truncate(s: &str) -> String {
    s.chars().take(20).collect()
}

/// Builds a diagram from PD quadruples (counterclockwise, slot 0 the
/// incoming under-strand, slot 2 the outgoing under-strand).
pub fn pd_to_diagram(tuples: &[Vec<i64>]) -> Result<Diagram> {
    if tuples.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let mut uses: HashMap<i64, Vec<Dart>> = HashMap::new();
    for (v, t) in tuples.iter().enumerate() {
        if t.len() != 4 {
            return Err(Error::MalformedCode(format!(
                "crossing {} has {} labels instead of 4",
                v + 1,
                t.len()
            )));
        }
        for (i, &l) in t.iter().enumerate() {
            uses.entry(l).or_default().push(4 * v + i);
        }
    }
    let mut twin = vec![usize::MAX; 4 * tuples.len()];
    let mut labels: Vec<_> = uses.keys().copied().collect();
    labels.sort_unstable();
    for l in &labels {
        let ds = &uses[l];
        if ds.len() != 2 {
            return Err(Error::MalformedCode(format!(
                "edge label {l} is used {} times instead of 2",
                ds.len()
            )));
        }
        twin[ds[0]] = ds[1];
        twin[ds[1]] = ds[0];
    }
    let verts = vec![Vertex::Crossing { over_even: false }; tuples.len()];
    let map = Map4::new(twin, verts);
    map.check_planar().map_err(Error::MalformedCode)?;

    // Under-strand directions are explicit; propagate them along strands and
    // fall back on label order for strands that are over everywhere.
    let n = map.dart_count();
    let mut out: Vec<Option<bool>> = vec![None; n];
    for v in 0..tuples.len() {
        out[4 * v] = Some(false);
        out[4 * v + 2] = Some(true);
    }
    let mut changed = true;
    while changed {
        changed = false;
        for d in 0..n {
            if let Some(o) = out[d] {
                for (x, val) in [(map.twin(d), !o), (opposite(d), !o)] {
                    match out[x] {
                        None => {
                            out[x] = Some(val);
                            changed = true;
                        }
                        Some(w) if w != val => {
                            return Err(Error::MalformedCode(
                                "edge labels imply an inconsistent orientation".into(),
                            ))
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    let label_of = |d: Dart| tuples[vertex_of(d)][slot(d)];
    let hint = |d: Dart| -> Option<bool> {
        if let Some(o) = out[d] {
            return Some(o);
        }
        // over-strand at slots 1, 3: the outgoing label is the successor
        let a = label_of(d);
        let b = label_of(opposite(d));
        Some(b + 1 == a || (a < b && b - a > 1))
    };
    Diagram::from_map(map, hint)
}

/// Parses an extended Gauss code such as `O1+ U2+ O3+ U1+ O2+ U3+`; link
/// components are separated by commas.
pub fn parse_gauss(text: &str) -> Result<Diagram> {
    let body = strip_comment(text);
    if body.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    #[derive(Clone, Copy)]
    struct Visit {
        over: bool,
        label: u64,
        sign: i8,
    }
    let mut comps: Vec<Vec<Visit>> = Vec::new();
    for comp in body.split([',', '|']) {
        let mut visits = Vec::new();
        for tok in comp.split_whitespace() {
            let tok = tok.replace('\u{2212}', "-");
            let mut chars = tok.chars();
            let over = match chars.next() {
                Some('O') | Some('o') => true,
                Some('U') | Some('u') => false,
                _ => return Err(Error::MalformedCode(format!("bad Gauss token {tok:?}"))),
            };
            let rest: String = chars.collect();
            let (num, sign) = match rest.chars().last() {
                Some('+') => (&rest[..rest.len() - 1], 1),
                Some('-') => (&rest[..rest.len() - 1], -1),
                _ => return Err(Error::MalformedCode(format!("Gauss token {tok:?} lacks a sign"))),
            };
            let label = num
                .parse::<u64>()
                .map_err(|_| Error::MalformedCode(format!("bad crossing number in {tok:?}")))?;
            visits.push(Visit { over, label, sign });
        }
        if !visits.is_empty() {
            comps.push(visits);
        }
    }
    if comps.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    // edge e_t runs from visit t to visit t + 1 within a component
    let mut edge_base = Vec::new();
    let mut total = 0i64;
    for c in &comps {
        edge_base.push(total);
        total += c.len() as i64;
    }
    #[derive(Default)]
    struct Slots {
        under: Option<(i64, i64)>,
        over: Option<(i64, i64)>,
        sign: Option<i8>,
    }
    let mut crossings: HashMap<u64, Slots> = HashMap::new();
    for (ci, c) in comps.iter().enumerate() {
        let m = c.len() as i64;
        for (t, visit) in c.iter().enumerate() {
            let t = t as i64;
            let e_in = edge_base[ci] + (t + m - 1) % m + 1;
            let e_out = edge_base[ci] + t + 1;
            let s = crossings.entry(visit.label).or_default();
            let slot = if visit.over { &mut s.over } else { &mut s.under };
            if slot.is_some() {
                return Err(Error::MalformedCode(format!(
                    "crossing {} visited twice as {}",
                    visit.label,
                    if visit.over { "over" } else { "under" }
                )));
            }
            *slot = Some((e_in, e_out));
            match s.sign {
                Some(x) if x != visit.sign => {
                    return Err(Error::MalformedCode(format!(
                        "crossing {} has inconsistent signs",
                        visit.label
                    )))
                }
                _ => s.sign = Some(visit.sign),
            }
        }
    }
    let mut keys: Vec<_> = crossings.keys().copied().collect();
    keys.sort_unstable();
    let mut tuples = Vec::new();
    for k in keys {
        let s = &crossings[&k];
        let (Some((ui, uo)), Some((oi, oo))) = (s.under, s.over) else {
            return Err(Error::MalformedCode(format!("crossing {k} is not visited over and under")));
        };
        tuples.push(if s.sign == Some(1) { vec![ui, oo, uo, oi] } else { vec![ui, oi, uo, oo] });
    }
    let d = pd_to_diagram(&tuples)?;
    // the PD fallback is not needed: over-strands are oriented through their under visits
    Ok(d)
}

/// Witness attached to a failed hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Failure {
    Disconnected { components: usize },
    /// Two edges (given by a dart each) cut the diagram, with crossings on both sides.
    TwoCut { edges: [Dart; 2], side: Vec<usize> },
    Nugatory { crossing: usize },
    NotAlternating { dart: Dart },
    Link { components: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub connected: bool,
    pub prime: bool,
    pub reduced: bool,
    pub alternating: bool,
    pub is_knot: bool,
    pub failures: Vec<Failure>,
}

impl ValidationReport {
    /// All hypotheses needed by the decomposition and achirality machinery.
    pub fn is_valid_knot(&self) -> bool {
        self.connected && self.prime && self.reduced && self.alternating && self.is_knot
    }

    pub fn is_valid(&self) -> bool {
        self.connected && self.prime && self.reduced && self.alternating
    }
}

pub fn validate(d: &Diagram) -> ValidationReport {
    let map = d.map();
    let mut failures = Vec::new();
    let (k, _) = map.components();
    let connected = k == 1;
    if !connected {
        failures.push(Failure::Disconnected { components: k });
    }

    let faces = map.faces();
    let mut reduced = true;
    for v in 0..map.vertex_count() {
        let mut corners: Vec<usize> = (0..4).map(|i| faces.corner(v, i)).collect();
        corners.sort_unstable();
        corners.dedup();
        if corners.len() < 4 {
            reduced = false;
            failures.push(Failure::Nugatory { crossing: v });
            break;
        }
    }

    let mut prime = connected;
    if connected {
        if let Some((edges, side)) = two_edge_cut(map) {
            prime = false;
            failures.push(Failure::TwoCut { edges, side });
        }
    }

    let mut alternating = true;
    for dart in 0..map.dart_count() {
        if d.is_out(dart) && map.is_over(dart) == map.is_over(map.twin(dart)) {
            alternating = false;
            failures.push(Failure::NotAlternating { dart });
            break;
        }
    }

    let comps = d.component_count();
    let is_knot = comps == 1;
    if !is_knot {
        failures.push(Failure::Link { components: comps });
    }
    ValidationReport { connected, prime, reduced, alternating, is_knot, failures }
}

/// A pair of edges whose removal disconnects the crossings, if any.
pub fn two_edge_cut(map: &Map4) -> Option<([Dart; 2], Vec<usize>)> {
    let edges: Vec<Dart> = map.edges().collect();
    let n = map.vertex_count();
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            let blocked = |d: Dart| d == e1 || d == e2 || map.twin(d) == e1 || map.twin(d) == e2;
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut stack = vec![0];
            while let Some(v) = stack.pop() {
                for s in 0..4 {
                    let dd = 4 * v + s;
                    if blocked(dd) {
                        continue;
                    }
                    let u = vertex_of(map.twin(dd));
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            if seen.iter().any(|&s| !s) {
                let side = (0..n).filter(|&v| seen[v]).collect();
                return Some(([e1, e2], side));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapIso {
    pub degree: Degree,
    /// Image of every dart.
    pub darts: Vec<Dart>,
    pub crossings: Vec<usize>,
    /// +1 when strand orientations are carried to strand orientations, -1
    /// when they are all reversed, 0 when mixed (links only).
    pub knot_orientation_effect: i8,
}

impl MapIso {
    pub(crate) fn from_darts(degree: Degree, darts: Vec<Dart>, a: &Diagram, b: &Diagram) -> Self {
        let crossings = (0..a.crossing_count()).map(|v| vertex_of(darts[4 * v])).collect();
        let same = (0..darts.len()).all(|x| a.is_out(x) == b.is_out(darts[x]));
        let flipped = (0..darts.len()).all(|x| a.is_out(x) != b.is_out(darts[x]));
        let knot_orientation_effect = if same {
            1
        } else if flipped {
            -1
        } else {
            0
        };
        MapIso { degree, darts, crossings, knot_orientation_effect }
    }
}

/// A rotation-respecting bijection `a -> b` of the given degree carrying
/// crossings to crossings with over/under preserved, if one exists.
/// Strand orientation is not required to match; the witness reports its effect.
pub fn map_isomorphic(a: &Diagram, b: &Diagram, degree: Degree) -> Option<MapIso> {
    let darts = canon::find_isomorphism(a.map(), None, b.map(), None, degree)?;
    Some(MapIso::from_darts(degree, darts, a, b))
}

/// Every such bijection, oriented ones first when orientation-respecting
/// maps are requested through `orient`.
pub fn all_map_isomorphisms(a: &Diagram, b: &Diagram, degree: Degree) -> Vec<MapIso> {
    canon::isomorphisms(a.map(), None, b.map(), None, degree, Roots::All)
        .into_iter()
        .map(|darts| MapIso::from_darts(degree, darts, a, b))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    #[test]
    fn trefoil_counts() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.map().edge_count(), 6);
        assert_eq!(d.map().faces().count(), 5);
        assert!(d.is_knot());
    }

    #[test]
    fn empty_and_malformed() {
        assert_eq!(parse_pd(""), Err(Error::EmptyDiagram));
        assert!(matches!(
            parse_pd("X[1,4,2,4] X[3,6,4,1] X[5,2,6,3]"),
            Err(Error::MalformedCode(_))
        ));
        assert!(matches!(parse_pd("X[1,2,3]"), Err(Error::MalformedCode(_))));
        assert!(matches!(parse_pd("hello"), Err(Error::MalformedCode(_))));
    }

    #[test]
    fn trefoil_is_valid() {
        let r = validate(&parse_pd(TREFOIL).unwrap());
        assert!(r.is_valid_knot(), "{r:?}");
        assert!(r.failures.is_empty());
    }

    #[test]
    fn connected_sum_is_not_prime() {
        let granny = "X[1,4,2,5] X[3,6,4,1] X[5,2,12,3] X[7,10,8,11] X[9,12,10,7] X[11,8,6,9]";
        let d = parse_pd(granny).unwrap();
        let r = validate(&d);
        assert!(r.connected);
        assert!(!r.prime, "{r:?}");
        assert!(r.failures.iter().any(|f| matches!(f, Failure::TwoCut { .. })));
    }

    #[test]
    fn nugatory_crossing_is_not_reduced() {
        // a trefoil with an extra kink on edge 6
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert!(validate(&d).reduced);
        let kinked = parse_pd("X[1,4,2,5] X[3,8,4,1] X[5,2,6,3] X[6,7,7,8]").unwrap();
        let r = validate(&kinked);
        assert!(!r.reduced);
        assert!(r.failures.iter().any(|f| matches!(f, Failure::Nugatory { .. })));
    }

    #[test]
    fn mirror_and_reverse_are_involutions() {
        for pd in [TREFOIL, FIGURE_EIGHT] {
            let d = parse_pd(pd).unwrap();
            assert_eq!(d.mirror().mirror(), d);
            assert_eq!(d.reverse().unwrap().reverse().unwrap(), d);
            assert_eq!(d.mirror().reverse().unwrap(), d.reverse().unwrap().mirror());
            assert!(validate(&d.mirror()).alternating);
        }
    }

    #[test]
    fn trefoil_is_chiral_as_a_map() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_ne!(d.canonical_code(Degree::Plus), d.mirror().canonical_code(Degree::Plus));
        assert!(map_isomorphic(&d, &d.mirror(), Degree::Plus).is_none());
        let id = map_isomorphic(&d, &d, Degree::Plus).unwrap();
        assert_eq!(id.knot_orientation_effect, 1);
        let r = map_isomorphic(&d, &d.reflect(), Degree::Minus).unwrap();
        assert_eq!(r.degree, Degree::Minus);
    }

    #[test]
    fn gauss_round_trip() {
        for pd in [TREFOIL, FIGURE_EIGHT] {
            let d = parse_pd(pd).unwrap();
            let g = d.to_gauss();
            let e = parse_gauss(&g).unwrap();
            assert_eq!(d.canonical_code(Degree::Plus), e.canonical_code(Degree::Plus), "{g}");
            let again = parse_pd(&d.to_pd()).unwrap();
            assert_eq!(d.canonical_code(Degree::Plus), again.canonical_code(Degree::Plus));
        }
    }

    #[test]
    fn two_component_link_cannot_be_reversed() {
        let hopf = parse_pd("X[1,3,2,4] X[3,1,4,2]").unwrap();
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(hopf.reverse(), Err(Error::NotAKnot(2)));
    }
}
