//! Canonical decomposition of a projection into twisted band diagrams and
//! jewels along a minimal admissible family of Haseman circles.

use std::collections::HashMap;
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::flype::Connection;
use crate::haseman::{enumerate_curves, enumerate_haseman, HasemanCurve};
use crate::map::{opposite, slot, vertex_of, Dart, Map4, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PieceClass {
    Singleton,
    /// Intermediate weights in band order, starting after the first
    /// boundary circle; a single entry (the weight) when there is none.
    TwistedBand { weights: Vec<i64>, weight: i64, v: usize },
    Jewel,
}

impl PieceClass {
    pub fn is_jewel(&self) -> bool {
        matches!(self, PieceClass::Jewel)
    }

    pub fn weight(&self) -> Option<i64> {
        match self {
            PieceClass::TwistedBand { weight, .. } => Some(*weight),
            _ => None,
        }
    }

    /// Jewel, or a twisted band diagram obeying the second and third
    /// hypotheses.
    pub fn admissible(&self) -> bool {
        match self {
            PieceClass::Singleton => false,
            PieceClass::Jewel => true,
            PieceClass::TwistedBand { weights, v, .. } => {
                let hyp2 = match v {
                    1 => weights[0].abs() >= 2,
                    2 => weights.iter().any(|&a| a != 0),
                    _ => true,
                };
                let hyp3 = weights.iter().all(|&a| a >= 0) || weights.iter().all(|&a| a <= 0);
                hyp2 && hyp3
            }
        }
    }
}

/// A region of the sphere cut out by a family of circles.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Piece {
    /// Crossings of the projection lying in the region.
    pub crossings: Vec<usize>,
    /// Family circles bounding the region; tangle vertex `crossings.len() + i`
    /// of `map` stands for `circles[i]`.
    pub circles: Vec<usize>,
    /// The region with every complementary disc collapsed to a tangle
    /// vertex; `Vertex::Tangle(c)` carries the family index `c`.
    pub map: Map4,
    /// Per boundary circle: the darts just inside the collapsed disc, in
    /// the order of that tangle vertex's slots.
    pub ports: Vec<Vec<Dart>>,
    /// Circle whose inside contains the region (`None` for the outermost one).
    pub outer: Option<usize>,
}

impl Piece {
    pub fn v(&self) -> usize {
        self.circles.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Region-map vertex of boundary circle `c`.
    pub fn tangle_vertex(&self, c: usize) -> Option<usize> {
        self.circles.iter().position(|&x| x == c).map(|i| self.crossings.len() + i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasemanFamily {
    pub curves: Vec<HasemanCurve>,
}

impl HasemanFamily {
    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// Pairwise disjoint and pairwise distinct.
    pub fn is_family(&self) -> bool {
        let c = &self.curves;
        (0..c.len()).all(|i| (i + 1..c.len()).all(|j| c[i] != c[j] && c[i].compatible(&c[j])))
    }
}

/// Circles whose sides both hold at least two crossings.
pub fn candidate_curves(d: &Diagram) -> Vec<HasemanCurve> {
    enumerate_haseman(d).into_iter().filter(|c| !c.bounds_singleton()).collect()
}

fn parents(curves: &[&HasemanCurve]) -> Vec<Option<usize>> {
    let contains = |a: &HasemanCurve, b: &HasemanCurve| {
        a.inside.iter().zip(&b.inside).all(|(x, y)| !*y || *x) && a != b
    };
    (0..curves.len())
        .map(|i| {
            (0..curves.len())
                .filter(|&j| contains(curves[j], curves[i]))
                .min_by_key(|&j| curves[j].inside_count())
        })
        .collect()
}

/// Splits the projection along pairwise disjoint circles; `labels[i]` is
/// the index recorded for `curves[i]` in the pieces.
fn split_labelled(map: &Map4, curves: &[&HasemanCurve], labels: &[usize]) -> Vec<Piece> {
    let n = map.vertex_count();
    let parent = parents(curves);
    let mut outers: Vec<Option<usize>> = vec![None];
    outers.extend((0..curves.len()).map(Some));
    outers
        .into_iter()
        .map(|outer| {
            let children: Vec<usize> = (0..curves.len()).filter(|&i| parent[i] == outer).collect();
            let mut region = match outer {
                None => vec![true; n],
                Some(o) => curves[o].inside.clone(),
            };
            for &c in &children {
                for v in 0..n {
                    if curves[c].inside[v] {
                        region[v] = false;
                    }
                }
            }
            let mut discs: Vec<(Vec<bool>, u32)> =
                children.iter().map(|&c| (curves[c].inside.clone(), labels[c] as u32)).collect();
            let mut circles: Vec<usize> = children.iter().map(|&c| labels[c]).collect();
            if let Some(o) = outer {
                discs.push((curves[o].inside.iter().map(|b| !b).collect(), labels[o] as u32));
                circles.push(labels[o]);
            }
            let col = map.collapse(&discs);
            let crossings: Vec<usize> = (0..n).filter(|&v| region[v]).collect();
            Piece {
                crossings,
                circles,
                map: col.map,
                ports: col.ports,
                outer: outer.map(|o| labels[o]),
            }
        })
        .collect()
}

/// The pieces determined by a family: one more than the number of circles.
pub fn split(d: &Diagram, fam: &HasemanFamily) -> Vec<Piece> {
    let refs: Vec<&HasemanCurve> = fam.curves.iter().collect();
    let labels: Vec<usize> = (0..refs.len()).collect();
    split_labelled(d.map(), &refs, &labels)
}

/// Cyclic band order of a region map, if it is a twisted band.
fn necklace(map: &Map4) -> Option<Vec<usize>> {
    let m = map.vertex_count();
    if m < 2 {
        return None;
    }
    if m == 2 {
        return (0..4).all(|s| vertex_of(map.twin(s)) == 1).then(|| vec![0, 1]);
    }
    let neighbours = |u: usize| -> Option<[usize; 2]> {
        let ns: Vec<usize> = (0..4).map(|s| vertex_of(map.twin(4 * u + s))).collect();
        for i in 0..4 {
            let (a, b) = (ns[i], ns[(i + 2) % 4]);
            if a != b && ns[(i + 1) % 4] == a && ns[(i + 3) % 4] == b && a != u && b != u {
                return Some([a, b]);
            }
        }
        None
    };
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = neighbours(0)?[0];
    while cur != 0 {
        if order.len() >= m {
            return None;
        }
        order.push(cur);
        let [a, b] = neighbours(cur)?;
        let next = if a == prev { b } else if b == prev { a } else { return None };
        prev = cur;
        cur = next;
    }
    let back = neighbours(0)?;
    (order.len() == m && back.contains(&prev)).then_some(order)
}

/// Sign of a band crossing: +1 when the over-strand uses the first slot of
/// the pair facing the previous bead, which does not depend on direction.
fn band_sign(map: &Map4, u: usize, prev: usize) -> i64 {
    let i = (0..4)
        .find(|&i| {
            vertex_of(map.twin(4 * u + i)) == prev
                && vertex_of(map.twin(4 * u + (i + 1) % 4)) == prev
                && (vertex_of(map.twin(4 * u + (i + 3) % 4)) != prev || map.vertex_count() == 2)
        })
        .unwrap_or(0);
    if map.is_over(4 * u + i) {
        1
    } else {
        -1
    }
}

fn classify_map(map: &Map4) -> Option<PieceClass> {
    let v = map.vertices().iter().filter(|x| !x.is_crossing()).count();
    let crossings = map.vertex_count() - v;
    if v == 1 && crossings == 1 {
        return Some(PieceClass::Singleton);
    }
    if let Some(order) = necklace(map) {
        let m = order.len();
        let start = order.iter().position(|&u| !map.vertex(u).is_crossing()).unwrap_or(0);
        let mut weights = Vec::new();
        let mut acc = 0;
        for t in 1..=m {
            let u = order[(start + t) % m];
            if map.vertex(u).is_crossing() {
                acc += band_sign(map, u, order[(start + t + m - 1) % m]);
            } else {
                weights.push(acc);
                acc = 0;
            }
        }
        if v == 0 {
            weights.push(acc);
        }
        let weight = weights.iter().sum();
        return Some(PieceClass::TwistedBand { weights, weight, v });
    }
    let jewel = enumerate_curves(map, 0).iter().all(|c| c.bounds_singleton());
    jewel.then_some(PieceClass::Jewel)
}

pub fn classify_piece(p: &Piece) -> Result<PieceClass> {
    classify_map(&p.map).ok_or_else(|| {
        Error::UnclassifiablePiece(format!(
            "{} crossings, {} boundary circles",
            p.crossing_count(),
            p.v()
        ))
    })
}

/// Canonical-family search for one diagram, with classification results of
/// regions shared between runs.
pub struct Decomposer<'a> {
    d: &'a Diagram,
    pub candidates: Vec<HasemanCurve>,
    cache: Mutex<HashMap<(Option<usize>, Vec<usize>), bool>>,
}

impl<'a> Decomposer<'a> {
    pub fn new(d: &'a Diagram) -> Self {
        Decomposer { d, candidates: candidate_curves(d), cache: Mutex::new(HashMap::new()) }
    }

    fn admissible(&self, chosen: &[usize]) -> bool {
        let refs: Vec<&HasemanCurve> = chosen.iter().map(|&i| &self.candidates[i]).collect();
        let parent = parents(&refs);
        let mut keys: Vec<(Option<usize>, Vec<usize>)> = vec![(None, Vec::new())];
        keys.extend(chosen.iter().map(|&c| (Some(c), Vec::new())));
        for (i, &c) in chosen.iter().enumerate() {
            let outer = parent[i].map(|p| chosen[p]);
            let k = keys.iter_mut().find(|k| k.0 == outer).unwrap();
            k.1.push(c);
        }
        let missing: Vec<usize> = {
            let cache = self.cache.lock().unwrap();
            (0..keys.len()).filter(|&i| !cache.contains_key(&sorted(&keys[i]))).collect()
        };
        if !missing.is_empty() {
            let pieces = split_labelled(self.d.map(), &refs, chosen);
            let mut cache = self.cache.lock().unwrap();
            for p in pieces {
                let mut kids: Vec<usize> =
                    p.circles.iter().copied().filter(|&c| Some(c) != p.outer).collect();
                kids.sort_unstable();
                let ok = classify_map(&p.map).is_some_and(|c| c.admissible());
                cache.insert((p.outer, kids), ok);
            }
        }
        let cache = self.cache.lock().unwrap();
        keys.iter().all(|k| cache[&sorted(k)])
    }

    /// Maximal disjoint family built in `order`, then circles deleted in
    /// the same order while the family stays admissible.
    pub fn family_for_order(&self, order: &[usize]) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        for &i in order {
            if chosen.iter().all(|&j| self.candidates[i].compatible(&self.candidates[j])) {
                chosen.push(i);
            }
        }
        loop {
            let mut changed = false;
            for &i in order {
                let Some(pos) = chosen.iter().position(|&j| j == i) else { continue };
                let mut trial = chosen.clone();
                trial.remove(pos);
                if self.admissible(&trial) {
                    chosen = trial;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        chosen.sort_unstable();
        chosen
    }

    pub fn family_for_seed(&self, seed: u64) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.candidates.len()).collect();
        order.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        self.family_for_order(&order)
    }

    pub fn is_admissible(&self, chosen: &[usize]) -> bool {
        self.admissible(chosen)
    }

    pub fn family(&self, chosen: &[usize]) -> HasemanFamily {
        HasemanFamily { curves: chosen.iter().map(|&i| self.candidates[i].clone()).collect() }
    }
}

fn sorted(k: &(Option<usize>, Vec<usize>)) -> (Option<usize>, Vec<usize>) {
    let mut v = k.1.clone();
    v.sort_unstable();
    (k.0, v)
}

/// The minimal admissible family (deterministic candidate order).
pub fn canonical_family(d: &Diagram) -> HasemanFamily {
    let dec = Decomposer::new(d);
    let order: Vec<usize> = (0..dec.candidates.len()).collect();
    dec.family(&dec.family_for_order(&order))
}

/// Minimal admissible family built from a shuffled candidate order.
pub fn canonical_family_seeded(d: &Diagram, seed: u64) -> HasemanFamily {
    let dec = Decomposer::new(d);
    dec.family(&dec.family_for_seed(seed))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Decomposition {
    pub family: HasemanFamily,
    pub pieces: Vec<Piece>,
    pub classes: Vec<PieceClass>,
}

impl Decomposition {
    /// Index of the piece lying inside circle `c` (next to it).
    pub fn inner_piece(&self, c: usize) -> usize {
        self.pieces.iter().position(|p| p.outer == Some(c)).expect("every circle bounds a piece")
    }

    /// Index of the piece just outside circle `c`.
    pub fn outer_piece(&self, c: usize) -> usize {
        self.pieces
            .iter()
            .position(|p| p.outer != Some(c) && p.circles.contains(&c))
            .expect("every circle bounds two pieces")
    }
}

pub fn decompose(d: &Diagram) -> Result<Decomposition> {
    let family = canonical_family(d);
    let pieces = split(d, &family);
    let classes = pieces.iter().map(classify_piece).collect::<Result<Vec<_>>>()?;
    Ok(Decomposition { family, pieces, classes })
}

/// Replaces every collapsed disc of the region map by a crossing, choosing
/// over/under so that the projection stays alternating.
pub fn alternating_extension(p: &Piece) -> Result<Diagram> {
    let mut map = p.map.clone();
    let known: Vec<bool> = (0..map.vertex_count()).map(|v| map.vertex(v).is_crossing()).collect();
    make_alternating(&mut map, known);
    let out = Diagram::from_map(map, |_| None)?;
    if !crate::diagram::validate(&out).alternating {
        return Err(Error::NotAlternating);
    }
    Ok(out)
}

/// Turns every vertex not flagged in `known` into a crossing whose
/// over/under continues the alternation of its known neighbours.
pub(crate) fn make_alternating(map: &mut Map4, mut known: Vec<bool>) {
    if !known.iter().any(|&k| k) {
        map.verts[0] = Vertex::Crossing { over_even: true };
        known[0] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for d in 0..map.dart_count() {
            let (u, w) = (vertex_of(d), vertex_of(map.twin(d)));
            if known[u] && !known[w] {
                let t = map.twin(d);
                let want_over = !map.is_over(d);
                map.verts[w] = Vertex::Crossing { over_even: (slot(t) % 2 == 0) == want_over };
                known[w] = true;
                changed = true;
            }
        }
    }
}

/// Pairing of the four ends of a collapsed disc by the strands inside it.
pub fn disc_connection(map: &Map4, ports: &[Dart]) -> Connection {
    let exit = |start: Dart| {
        let mut d = start;
        loop {
            let e = opposite(d);
            if let Some(j) = ports.iter().position(|&p| p == e) {
                return j;
            }
            d = map.twin(e);
        }
    };
    match exit(ports[0]) {
        3 => Connection::H,
        1 => Connection::V,
        _ => Connection::X,
    }
}

/// The filled projection of a jewel piece together with, per boundary
/// circle, the crossings that replaced its disc.
#[derive(Clone, Debug)]
pub struct Filling {
    pub diagram: Diagram,
    pub disc_crossings: Vec<Vec<usize>>,
    pub connections: Vec<Connection>,
    /// Per circle, the filler dart standing at each port.
    pub ports: Vec<[Dart; 4]>,
}

/// Replaces the content of every disc bounding the piece by a singleton
/// (ends joined across) or a two-crossing twist (adjacent ends joined),
/// keeping the threads' over/under labels at the circle.
pub fn filling(d: &Diagram, p: &Piece) -> Result<Filling> {
    if !d.is_knot() {
        return Err(Error::NotAKnot(d.component_count()));
    }
    let orig = d.map();
    let base = p.crossings.len();
    let connections: Vec<Connection> =
        p.ports.iter().map(|ports| disc_connection(orig, ports)).collect();
    let extra: usize = connections.iter().map(|c| if *c == Connection::X { 1 } else { 2 }).sum();
    let total = base + extra;
    let mut twin = vec![usize::MAX; 4 * total];
    let mut verts = Vec::with_capacity(total);
    verts.extend_from_slice(&p.map.verts[..base]);
    // outer darts of each tangle vertex, per port
    let mut attach: Vec<[Dart; 4]> = Vec::new();
    for (i, _) in p.circles.iter().enumerate() {
        let tv = base + i;
        attach.push([0, 1, 2, 3].map(|j| p.map.twin(4 * tv + j)));
    }
    for d0 in 0..4 * base {
        let t = p.map.twin(d0);
        if vertex_of(t) < base {
            twin[d0] = t;
        }
    }
    let join = |twin: &mut Vec<Dart>, a: Dart, b: Dart| {
        twin[a] = b;
        twin[b] = a;
    };
    let mut disc_crossings = Vec::new();
    let mut next = base;
    let is_over = |j: usize, i: usize| orig.is_over(p.ports[i][j]);
    // filler dart standing at port j of circle i
    let mut port_dart: Vec<[Dart; 4]> = Vec::new();
    for (i, conn) in connections.iter().enumerate() {
        match conn {
            Connection::X => {
                let u = next;
                next += 1;
                verts.push(Vertex::Crossing { over_even: is_over(0, i) });
                port_dart.push([0, 1, 2, 3].map(|j| 4 * u + j));
                disc_crossings.push(vec![u]);
            }
            Connection::H | Connection::V => {
                let r = if *conn == Connection::H { 0 } else { 1 };
                let (u, w) = (next, next + 1);
                next += 2;
                verts.push(Vertex::Crossing { over_even: is_over(r, i) });
                verts.push(Vertex::Crossing { over_even: is_over((r + 2) % 4, i) });
                let mut pd = [0; 4];
                pd[r] = 4 * u;
                pd[(r + 1) % 4] = 4 * u + 1;
                pd[(r + 2) % 4] = 4 * w + 2;
                pd[(r + 3) % 4] = 4 * w + 3;
                port_dart.push(pd);
                join(&mut twin, 4 * u + 2, 4 * w + 1);
                join(&mut twin, 4 * u + 3, 4 * w);
                disc_crossings.push(vec![u, w]);
            }
        }
    }
    for (i, outer) in attach.iter().enumerate() {
        for j in 0..4 {
            let o = outer[j];
            let other = if vertex_of(o) < base {
                o
            } else {
                // two discs touching along an edge
                port_dart[vertex_of(o) - base][slot(o)]
            };
            join(&mut twin, port_dart[i][j], other);
        }
    }
    if twin.contains(&usize::MAX) {
        return Err(Error::Precondition("filling needs a piece whose discs are separate".into()));
    }
    let map = Map4 { twin, verts };
    let hint = |x: Dart| {
        let v = vertex_of(x);
        (v < base).then(|| d.is_out(4 * p.crossings[v] + slot(x)))
    };
    let diagram = Diagram::from_map(map, hint)?;
    Ok(Filling { diagram, disc_crossings, connections, ports: port_dart })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, validate};

    const TREFOIL: &str = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
    const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    #[test]
    fn trefoil_is_a_band_without_circles() {
        let d = parse_pd(TREFOIL).unwrap();
        let dec = decompose(&d).unwrap();
        assert!(dec.family.is_empty());
        assert_eq!(dec.pieces.len(), 1);
        assert_eq!(dec.classes[0].weight().map(i64::abs), Some(3));
    }

    #[test]
    fn figure_eight_splits_into_opposite_bands() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let dec = decompose(&d).unwrap();
        assert_eq!(dec.family.len(), 1);
        assert_eq!(dec.pieces.len(), 2);
        let mut w: Vec<i64> = dec.classes.iter().map(|c| c.weight().unwrap()).collect();
        w.sort();
        assert_eq!(w, vec![-2, 2]);
        for p in &dec.pieces {
            assert_eq!(p.crossing_count(), 2);
            let ext = alternating_extension(p).unwrap();
            assert_eq!(ext.crossing_count(), 3);
            assert!(validate(&ext).alternating);
        }
    }

    /// The octahedral basic polyhedron 6*, made alternating.
    fn octahedron() -> Diagram {
        // vertices +x -x +y -y +z -z; counterclockwise neighbours seen from outside
        let rot: [[usize; 4]; 6] =
            [[2, 4, 3, 5], [3, 4, 2, 5], [4, 0, 5, 1], [5, 0, 4, 1], [0, 2, 1, 3], [1, 2, 0, 3]];
        let mut twin = vec![0; 24];
        for u in 0..6 {
            for i in 0..4 {
                let w = rot[u][i];
                let j = rot[w].iter().position(|&x| x == u).unwrap();
                twin[4 * u + i] = 4 * w + j;
            }
        }
        let mut map = Map4::new(twin, vec![Vertex::Tangle(0); 6]);
        make_alternating(&mut map, vec![false; 6]);
        Diagram::from_map(map, |_| None).unwrap()
    }

    #[test]
    fn octahedron_is_a_jewel() {
        let d = octahedron();
        assert_eq!(d.map().faces().count(), 8);
        assert!(validate(&d).is_valid());
        let dec = decompose(&d).unwrap();
        assert!(dec.family.is_empty());
        assert_eq!(dec.classes, vec![PieceClass::Jewel]);
    }

    #[test]
    fn pretzel_three_three_three_is_a_star() {
        let d = pretzel(&[3, 3, 3]);
        let dec = decompose(&d).unwrap();
        assert_eq!(dec.family.len(), 3);
        let mut ws: Vec<(usize, i64)> = dec
            .classes
            .iter()
            .map(|c| match c {
                PieceClass::TwistedBand { v, weight, .. } => (*v, weight.abs()),
                _ => panic!("{c:?}"),
            })
            .collect();
        ws.sort();
        assert_eq!(ws, vec![(1, 3), (1, 3), (1, 3), (3, 0)]);
    }

    /// Alternating pretzel diagram with columns of vertical twists.
    pub(crate) fn pretzel(cols: &[usize]) -> Diagram {
        // column k is a vertical chain of crossings; crossing (k, i) has slots
        // N=1, W=2, S=3, E=0 (counterclockwise from east)
        let n: usize = cols.iter().sum();
        let mut start = Vec::new();
        let mut acc = 0;
        for &c in cols {
            start.push(acc);
            acc += c;
        }
        let mut twin = vec![usize::MAX; 4 * n];
        let mut join = |a: usize, b: usize| {
            twin[a] = b;
            twin[b] = a;
        };
        let m = cols.len();
        for k in 0..m {
            let s = start[k];
            for i in 0..cols[k] - 1 {
                // a vertical twist joins (S, E) of one crossing to (W, N) of the next
                join(4 * (s + i) + 3, 4 * (s + i + 1) + 2);
                join(4 * (s + i), 4 * (s + i + 1) + 1);
            }
            let top = s;
            let bottom = s + cols[k] - 1;
            let nk = (k + 1) % m;
            // top-east of column k to top-west of column k + 1, likewise at the bottom
            join(4 * top + 1, 4 * start[nk] + 2);
            join(4 * bottom + 0, 4 * (start[nk] + cols[nk] - 1) + 3);
        }
        let mut map = Map4::new(twin, vec![Vertex::Tangle(0); n]);
        make_alternating(&mut map, vec![false; n]);
        Diagram::from_map(map, |_| None).unwrap()
    }

    #[test]
    fn shuffled_orders_agree() {
        let d = parse_pd("X[4,2,5,1] X[8,4,9,3] X[12,9,1,10] X[10,5,11,6] X[6,11,7,12] X[2,8,3,7]")
            .unwrap();
        let dec = Decomposer::new(&d);
        let base = dec.family_for_seed(0);
        for seed in 1..20 {
            assert_eq!(dec.family_for_seed(seed), base);
        }
    }
}
