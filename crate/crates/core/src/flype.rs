//! Flypes, flype closure, and four-ended tangles.
//!
//! A flype site is a crossing `c` next to a tangle `T` (one side of a
//! Haseman curve) such that two adjacent ends of `T` run straight into `c`.
//! The flype turns `T` over about the axis through `c` and `T` and moves `c`
//! to the far side of `T`:
//!
//! ```text
//!   x ─┐ ┌─ a0 ┌───┐ a3 ─ q          x ─ a1'┌───┐a2' ┐ ┌─ q
//!      c       │ T │          ==>           │ T'│     c'
//!   y ─┘ └─ a1 └───┘ a2 ─ p          y ─ a0'└───┘a3' ┘ └─ p
//! ```

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{self, CanonicalCode, Degree, Roots};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::haseman::enumerate_curves;
use crate::map::{opposite, slot, vertex_of, Dart, Map4, Vertex};

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlypeSite {
    /// The crossing that moves across the tangle.
    pub crossing: usize,
    /// Crossings of the tangle, sorted.
    pub tangle: Vec<usize>,
    /// `crossing`'s slots `slot` and `slot + 1` run into the tangle.
    pub slot: usize,
}

/// Geometry of a site resolved against a map.
struct Resolved {
    in_t: Vec<bool>,
    c: usize,
    k: usize,
    a: [Dart; 4],
}

fn resolve(map: &Map4, site: &FlypeSite) -> Option<Resolved> {
    let n = map.vertex_count();
    let c = site.crossing;
    let k = site.slot;
    if c >= n || k >= 4 || site.tangle.is_empty() || !map.vertex(c).is_crossing() {
        return None;
    }
    let mut in_t = vec![false; n];
    for &v in &site.tangle {
        if v >= n || v == c || !map.vertex(v).is_crossing() {
            return None;
        }
        in_t[v] = true;
    }
    if site.tangle.len() + 1 >= n {
        return None;
    }
    if map.cut_darts(&in_t).len() != 4 || !map.induces_connected(&in_t) {
        return None;
    }
    let cycle = map.boundary_cycle(&in_t);
    if cycle.len() != 4 {
        return None;
    }
    let ck = 4 * c + k;
    let ck1 = 4 * c + (k + 1) % 4;
    let j = (0..4).find(|&j| map.twin(cycle[j]) == ck1 && map.twin(cycle[(j + 1) % 4]) == ck)?;
    let a = [0, 1, 2, 3].map(|i| cycle[(j + i) % 4]);
    let far = |d: Dart| {
        let u = vertex_of(map.twin(d));
        u != c && !in_t[u]
    };
    if !far(4 * c + (k + 2) % 4) || !far(4 * c + (k + 3) % 4) || !far(a[2]) || !far(a[3]) {
        return None;
    }
    Some(Resolved { in_t, c, k, a })
}

/// The map after the flype.
fn flype_map(map: &Map4, r: &Resolved) -> Map4 {
    let refl = Map4::reflect_dart;
    let mut twin = map.twin.clone();
    let mut verts = map.verts.clone();
    let n = map.vertex_count();
    for v in 0..n {
        if !r.in_t[v] {
            continue;
        }
        if let Vertex::Crossing { over_even } = verts[v] {
            verts[v] = Vertex::Crossing { over_even: !over_even };
        }
        for s in 0..4 {
            let d = 4 * v + s;
            let t = map.twin(d);
            if r.in_t[vertex_of(t)] {
                twin[refl(d)] = refl(t);
            }
        }
    }
    let c = r.c;
    let k = r.k;
    let x = map.twin(4 * c + (k + 2) % 4);
    let y = map.twin(4 * c + (k + 3) % 4);
    let p = map.twin(r.a[2]);
    let q = map.twin(r.a[3]);
    let a = r.a.map(refl);
    let mut join = |u: Dart, w: Dart| {
        twin[u] = w;
        twin[w] = u;
    };
    join(4 * c, q);
    join(4 * c + 1, a[2]);
    join(4 * c + 2, a[3]);
    join(4 * c + 3, p);
    join(a[1], x);
    join(a[0], y);
    verts[c] = Vertex::Crossing { over_even: !map.is_over(4 * c + k) };
    Map4 { twin, verts }
}

/// All flype sites (efficient or not) whose tangle and crossing avoid the
/// vertices flagged in `frozen`.
pub fn sites_of_map(map: &Map4, anchor: usize, frozen: &[bool]) -> Vec<FlypeSite> {
    let mut out = Vec::new();
    for curve in enumerate_curves(map, anchor) {
        let outside: Vec<bool> = curve.inside.iter().map(|b| !b).collect();
        for side in [curve.inside.clone(), outside] {
            let verts: Vec<usize> = (0..side.len()).filter(|&v| side[v]).collect();
            if verts.iter().any(|&v| frozen[v] || !map.vertex(v).is_crossing()) {
                continue;
            }
            let cycle = map.boundary_cycle(&side);
            for j in 0..4 {
                let u = map.twin(cycle[j]);
                let w = map.twin(cycle[(j + 1) % 4]);
                let c = vertex_of(u);
                if c != vertex_of(w) || frozen[c] || !map.vertex(c).is_crossing() {
                    continue;
                }
                if slot(u) != (slot(w) + 1) % 4 {
                    continue;
                }
                let site = FlypeSite { crossing: c, tangle: verts.clone(), slot: slot(w) };
                if resolve(map, &site).is_some() {
                    out.push(site);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Every flype site of a diagram, including those that only reproduce the
/// diagram up to isomorphism.
pub fn all_flype_sites(d: &Diagram) -> Vec<FlypeSite> {
    let frozen = vec![false; d.crossing_count()];
    sites_of_map(d.map(), 0, &frozen)
}

/// Sites whose flype changes the diagram (the crossing moves to another twist).
pub fn flype_sites(d: &Diagram) -> Vec<FlypeSite> {
    let own = d.unoriented_code(Degree::Plus);
    all_flype_sites(d)
        .into_iter()
        .filter(|s| match apply_flype(d, s) {
            Ok(e) => e.unoriented_code(Degree::Plus) != own,
            Err(_) => false,
        })
        .collect()
}

pub fn apply_flype(d: &Diagram, site: &FlypeSite) -> Result<Diagram> {
    let map = d.map();
    let r = resolve(map, site).ok_or(Error::InvalidSite)?;
    let new = flype_map(map, &r);
    let moved = |v: usize| v == r.c || r.in_t[v];
    let hint = |x: Dart| {
        let v = vertex_of(x);
        if v == r.c {
            None
        } else if moved(v) {
            Some(d.is_out(Map4::reflect_dart(x)))
        } else {
            Some(d.is_out(x))
        }
    };
    Diagram::from_map(new, hint).map_err(|_| Error::InvalidSite)
}

/// The site undoing `apply_flype(d, site)` in the resulting diagram.
pub fn inverse_site(site: &FlypeSite) -> FlypeSite {
    FlypeSite { crossing: site.crossing, tangle: site.tangle.clone(), slot: 1 }
}

#[derive(Clone, Debug)]
pub struct FlypeClosure {
    /// Degree +1 oriented codes of every diagram reached.
    pub codes: HashSet<CanonicalCode>,
    /// One representative per code, in breadth-first discovery order.
    pub diagrams: Vec<Diagram>,
    /// Codes with orientation forgotten: the distinct projections.
    pub projections: HashSet<CanonicalCode>,
}

impl FlypeClosure {
    /// Number of distinct projections reached.
    pub fn len(&self) -> usize {
        self.projections.len()
    }

    pub fn oriented_len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn contains(&self, d: &Diagram) -> bool {
        self.codes.contains(&d.canonical_code(Degree::Plus))
    }

    /// Codes in sorted order.
    pub fn sorted_codes(&self) -> Vec<CanonicalCode> {
        let mut v: Vec<_> = self.codes.iter().cloned().collect();
        v.sort();
        v
    }
}

/// Breadth-first closure of a diagram under flypes (turning the sphere over
/// included), deduplicated by the oriented degree +1 canonical code.
pub fn flype_closure(d: &Diagram, budget: usize) -> Result<FlypeClosure> {
    let mut codes = HashSet::new();
    codes.insert(d.canonical_code(Degree::Plus));
    let mut diagrams = vec![d.clone()];
    let mut frontier = vec![d.clone()];
    while !frontier.is_empty() {
        let found: Vec<Vec<(CanonicalCode, Diagram)>> = frontier
            .par_iter()
            .map(|x| {
                all_flype_sites(x)
                    .iter()
                    .filter_map(|s| apply_flype(x, s).ok())
                    .chain(std::iter::once(x.turned_over()))
                    .map(|y| (y.canonical_code(Degree::Plus), y))
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (code, y) in found.into_iter().flatten() {
            if codes.insert(code) {
                if codes.len() > budget {
                    return Err(Error::ClosureBudgetExceeded(budget));
                }
                diagrams.push(y.clone());
                next.push(y);
            }
        }
        frontier = next;
    }
    let projections = diagrams.iter().map(|x| x.unoriented_code(Degree::Plus)).collect();
    Ok(FlypeClosure { codes, diagrams, projections })
}

/// Applies up to `steps` flypes, each drawn uniformly from all sites of
/// the current diagram (inefficient ones included).
pub fn random_flypes<R: rand::Rng>(d: &Diagram, steps: usize, rng: &mut R) -> Diagram {
    let mut cur = d.clone();
    for _ in 0..steps {
        let sites = all_flype_sites(&cur);
        if sites.is_empty() {
            break;
        }
        let s = &sites[rng.gen_range(0..sites.len())];
        cur = apply_flype(&cur, s).expect("enumerated site applies");
    }
    cur
}

/// Crossings of the twists of each band diagram of the canonical
/// decomposition; distinct orbits are disjoint.
pub fn flype_orbits(d: &Diagram) -> Result<Vec<Vec<usize>>> {
    let dec = crate::decomposition::decompose(d)?;
    let mut orbits: Vec<Vec<usize>> = dec
        .pieces
        .iter()
        .zip(&dec.classes)
        .filter(|(p, c)| {
            matches!(c, crate::decomposition::PieceClass::TwistedBand { .. })
                && !p.crossings.is_empty()
        })
        .map(|(p, _)| p.crossings.clone())
        .collect();
    orbits.sort();
    Ok(orbits)
}

/// How the four ends of a tangle are paired by its strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Connection {
    /// NW-NE and SW-SE.
    H,
    /// NW-SW and NE-SE.
    V,
    /// NW-SE and SW-NE.
    X,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TangleOp {
    /// Half turn about the axis orthogonal to the projection plane.
    Star,
    /// Half turn about the horizontal axis of the plane.
    H,
    /// Half turn about the vertical axis of the plane.
    V,
    Mirror,
}

pub const NW: usize = 0;
pub const SW: usize = 1;
pub const SE: usize = 2;
pub const NE: usize = 3;

/// A four-ended tangle in a disc with marked ends NW, SW, SE, NE
/// (counterclockwise). The outside of the disc is the tangle vertex
/// `boundary`, whose slot `(4 - j) % 4` is attached to end `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tangle {
    map: Map4,
    boundary: usize,
}

fn bdart(b: usize, j: usize) -> Dart {
    4 * b + (4 - j) % 4
}

fn port_of_bdart(d: Dart) -> usize {
    (4 - slot(d)) % 4
}

impl Tangle {
    /// The tangle inside the disc `inside` of `map`, with end NW at inner
    /// dart `nw` (a dart of `inside` whose partner is outside).
    pub fn from_disc(map: &Map4, inside: &[bool], nw: Dart) -> Tangle {
        let cycle = map.boundary_cycle(inside);
        assert_eq!(cycle.len(), 4, "tangle disc must have four ends");
        let j0 = cycle.iter().position(|&d| d == nw).expect("nw is an end of the disc");
        let ports: Vec<Dart> = (0..4).map(|i| cycle[(j0 + i) % 4]).collect();
        let mut index = vec![usize::MAX; map.vertex_count()];
        let mut verts = Vec::new();
        for v in 0..map.vertex_count() {
            if inside[v] {
                index[v] = verts.len();
                verts.push(map.vertex(v));
            }
        }
        let b = verts.len();
        verts.push(Vertex::Tangle(0));
        let nd = |d: Dart| 4 * index[vertex_of(d)] + slot(d);
        let mut twin = vec![usize::MAX; 4 * verts.len()];
        for v in 0..map.vertex_count() {
            if !inside[v] {
                continue;
            }
            for s in 0..4 {
                let d = 4 * v + s;
                let t = map.twin(d);
                if inside[vertex_of(t)] {
                    twin[nd(d)] = nd(t);
                }
            }
        }
        for (j, &p) in ports.iter().enumerate() {
            twin[nd(p)] = bdart(b, j);
            twin[bdart(b, j)] = nd(p);
        }
        let t = Tangle { map: Map4 { twin, verts }, boundary: b };
        debug_assert!(t.map.check_planar().is_ok());
        t
    }

    pub fn map(&self) -> &Map4 {
        &self.map
    }

    pub fn boundary_vertex(&self) -> usize {
        self.boundary
    }

    pub fn crossing_count(&self) -> usize {
        self.map.vertex_count() - 1
    }

    /// Inner dart attached to end `j` (a boundary dart when the end runs
    /// straight to another end).
    pub fn end(&self, j: usize) -> Dart {
        self.map.twin(bdart(self.boundary, j))
    }

    /// The end reached by following the strand entering at end `j`.
    pub fn partner(&self, j: usize) -> usize {
        let mut d = self.end(j);
        loop {
            if vertex_of(d) == self.boundary {
                return port_of_bdart(d);
            }
            d = self.map.twin(opposite(d));
        }
    }

    pub fn connection(&self) -> Connection {
        match self.partner(NW) {
            NE => Connection::H,
            SW => Connection::V,
            _ => Connection::X,
        }
    }

    /// Code with the boundary fixed: root at end NW.
    pub fn code(&self) -> CanonicalCode {
        canon::canonical_code(&self.map, None, Degree::Plus, Roots::Fixed(bdart(self.boundary, NW)))
    }

    /// Rebuilds the tangle with new end `j` taken from old end `perm[j]`,
    /// reversing rotations when `reflect` and swapping crossings when `mirror`.
    pub(crate) fn rigid(&self, perm: [usize; 4], reflect: bool, mirror: bool) -> Tangle {
        let b = self.boundary;
        let r = |d: Dart| if reflect { Map4::reflect_dart(d) } else { d };
        let mut inv = [0; 4];
        for j in 0..4 {
            inv[perm[j]] = j;
        }
        let mut twin = vec![usize::MAX; self.map.dart_count()];
        let mut verts = self.map.verts.clone();
        for v in 0..self.map.vertex_count() {
            if v == b {
                continue;
            }
            if mirror {
                if let Vertex::Crossing { over_even } = verts[v] {
                    verts[v] = Vertex::Crossing { over_even: !over_even };
                }
            }
            for s in 0..4 {
                let d = 4 * v + s;
                let t = self.map.twin(d);
                if vertex_of(t) != b {
                    twin[r(d)] = r(t);
                }
            }
        }
        for i in 0..4 {
            let e = self.end(i);
            let nb = bdart(b, inv[i]);
            let other = if vertex_of(e) == b { bdart(b, inv[port_of_bdart(e)]) } else { r(e) };
            twin[nb] = other;
            twin[other] = nb;
        }
        let t = Tangle { map: Map4 { twin, verts }, boundary: b };
        debug_assert!(t.map.check_planar().is_ok());
        t
    }

    pub fn transform(&self, op: TangleOp) -> Tangle {
        match op {
            TangleOp::Star => self.rigid([SE, NE, NW, SW], false, false),
            TangleOp::H => self.rigid([SW, NW, NE, SE], true, true),
            TangleOp::V => self.rigid([NE, SE, SW, NW], true, true),
            TangleOp::Mirror => self.rigid([NW, SW, SE, NE], false, true),
        }
    }

    /// Quarter turn: new end `j` takes old end `j - 1`, i.e. NW moves to SW.
    pub fn quarter_turn(&self) -> Tangle {
        self.rigid([NE, NW, SW, SE], false, false)
    }

    pub fn flype_sites(&self) -> Vec<FlypeSite> {
        let mut frozen = vec![false; self.map.vertex_count()];
        frozen[self.boundary] = true;
        sites_of_map(&self.map, self.boundary, &frozen)
    }

    pub fn apply_flype(&self, site: &FlypeSite) -> Result<Tangle> {
        if site.crossing == self.boundary || site.tangle.contains(&self.boundary) {
            return Err(Error::InvalidSite);
        }
        let r = resolve(&self.map, site).ok_or(Error::InvalidSite)?;
        Ok(Tangle { map: flype_map(&self.map, &r), boundary: self.boundary })
    }

    /// Codes of all tangles reachable by flypes inside the disc.
    pub fn flype_closure(&self, budget: usize) -> Result<HashSet<CanonicalCode>> {
        let mut seen = HashSet::new();
        seen.insert(self.code());
        let mut queue = VecDeque::from([self.clone()]);
        while let Some(t) = queue.pop_front() {
            for s in t.flype_sites() {
                let u = t.apply_flype(&s)?;
                if seen.insert(u.code()) {
                    if seen.len() > budget {
                        return Err(Error::ClosureBudgetExceeded(budget));
                    }
                    queue.push_back(u);
                }
            }
        }
        Ok(seen)
    }
}

/// Whether a sequence of flypes fixing the boundary circle carries `a` to `b`.
pub fn flype_equivalent_tangles(a: &Tangle, b: &Tangle, budget: usize) -> Result<bool> {
    if a.crossing_count() != b.crossing_count() || a.connection() != b.connection() {
        return Ok(false);
    }
    let target = b.code();
    if a.code() == target {
        return Ok(true);
    }
    Ok(a.flype_closure(budget)?.contains(&target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, validate};
    use crate::haseman::enumerate_haseman;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
    // 7_7 from the corpus; its bands admit efficient flypes
    const SEVEN_SEVEN: &str =
        "X[1,10,2,11] X[3,13,4,12] X[5,14,6,1] X[7,5,8,4] X[9,2,10,3] X[11,9,12,8] X[13,6,14,7]";

    #[test]
    fn orbits_of_small_knots() {
        let t = flype_orbits(&parse_pd(TREFOIL).unwrap()).unwrap();
        assert_eq!(t.iter().map(Vec::len).collect::<Vec<_>>(), [3]);
        let f = flype_orbits(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap();
        assert_eq!(f.iter().map(Vec::len).collect::<Vec<_>>(), [2, 2]);
        let mut all: Vec<usize> = f.concat();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn small_knots_have_no_efficient_sites() {
        for pd in [TREFOIL, FIGURE_EIGHT] {
            let d = parse_pd(pd).unwrap();
            assert!(!all_flype_sites(&d).is_empty());
            assert!(flype_sites(&d).is_empty());
            let cl = flype_closure(&d, DEFAULT_BUDGET).unwrap();
            assert_eq!(cl.len(), 1);
            assert!(cl.contains(&d.reverse().unwrap()));
        }
    }

    #[test]
    fn flypes_preserve_validity_and_invert() {
        let d = parse_pd(SEVEN_SEVEN).unwrap();
        for s in all_flype_sites(&d) {
            let e = apply_flype(&d, &s).unwrap();
            assert!(validate(&e).is_valid_knot(), "{s:?}");
            let back = apply_flype(&e, &inverse_site(&s)).unwrap();
            assert_eq!(back.canonical_code(Degree::Plus), d.canonical_code(Degree::Plus));
        }
    }

    #[test]
    fn invalid_site_rejected() {
        let d = parse_pd(TREFOIL).unwrap();
        let s = FlypeSite { crossing: 0, tangle: vec![0], slot: 0 };
        assert_eq!(apply_flype(&d, &s), Err(Error::InvalidSite));
    }

    fn half_of_figure_eight() -> Tangle {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let c = enumerate_haseman(&d)
            .into_iter()
            .find(|c| c.inside_count() == 2 && c.outside_count() == 2)
            .unwrap();
        Tangle::from_disc(d.map(), &c.inside, c.darts[0])
    }

    #[test]
    fn transforms_obey_dihedral_relations() {
        let t = half_of_figure_eight();
        let star = t.transform(TangleOp::Star);
        assert_eq!(star.transform(TangleOp::Star).code(), t.code());
        assert_eq!(t.transform(TangleOp::V).transform(TangleOp::H).code(), star.code());
        assert_eq!(t.transform(TangleOp::H).transform(TangleOp::V).code(), star.code());
        for op in [TangleOp::Star, TangleOp::H, TangleOp::V] {
            assert_eq!(
                t.transform(op).transform(TangleOp::Mirror).code(),
                t.transform(TangleOp::Mirror).transform(op).code()
            );
        }
        let q = t.quarter_turn();
        assert_eq!(q.quarter_turn().code(), star.code());
    }

    #[test]
    fn tangle_equivalences() {
        let t = half_of_figure_eight();
        assert!(flype_equivalent_tangles(&t, &t, DEFAULT_BUDGET).unwrap());
        let m = t.transform(TangleOp::Mirror);
        assert!(!flype_equivalent_tangles(&t, &m, DEFAULT_BUDGET).unwrap());
        let h = t.transform(TangleOp::H);
        let v = t.transform(TangleOp::V);
        assert!(
            flype_equivalent_tangles(&t, &h, DEFAULT_BUDGET).unwrap()
                || flype_equivalent_tangles(&t, &v, DEFAULT_BUDGET).unwrap()
        );
        assert_ne!(t.connection(), Connection::X);
    }
}
