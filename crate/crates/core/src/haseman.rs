//! Haseman curves: simple closed curves meeting the projection in four points.
//!
//! A curve meeting the graph transversally in four edge points with crossings
//! on both sides is a minimal 4-edge cut whose two sides are connected; in a
//! plane graph such cuts are exactly the simple 4-cycles of the dual, so the
//! four faces visited are pairwise distinct and the curve is incompressible.
//! Isotopic (parallel) curves induce the same bipartition and are identified.

use serde::{Deserialize, Serialize};

use crate::diagram::{validate, Diagram};
use crate::error::{Error, Result};
use crate::map::{ccw, vertex_of, Dart, Map4};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HasemanCurve {
    /// Vertices on the inside (the side not containing the anchor vertex).
    pub inside: Vec<bool>,
    /// Inner darts of the four cut edges, counterclockwise around the inside.
    pub darts: [Dart; 4],
    /// `faces[i]` lies between `darts[i]` and `darts[i + 1]`.
    pub faces: [usize; 4],
}

impl HasemanCurve {
    pub fn inside_count(&self) -> usize {
        self.inside.iter().filter(|&&b| b).count()
    }

    pub fn outside_count(&self) -> usize {
        self.inside.len() - self.inside_count()
    }

    /// True when one side holds a single vertex.
    pub fn bounds_singleton(&self) -> bool {
        self.inside_count() == 1 || self.outside_count() == 1
    }

    pub fn inside_vertices(&self) -> Vec<usize> {
        (0..self.inside.len()).filter(|&v| self.inside[v]).collect()
    }

    /// Two curves can be drawn disjointly when their sides are nested or
    /// disjoint.
    pub fn compatible(&self, other: &HasemanCurve) -> bool {
        let (mut both, mut only_a, mut only_b) = (false, false, false);
        for (a, b) in self.inside.iter().zip(&other.inside) {
            match (a, b) {
                (true, true) => both = true,
                (true, false) => only_a = true,
                (false, true) => only_b = true,
                _ => {}
            }
        }
        !(both && only_a && only_b)
    }
}

/// Builds the curve record for a bipartition; `None` unless the cut has
/// four edges, both sides are connected and the boundary is one circle.
pub fn curve_from_side(map: &Map4, inside: Vec<bool>) -> Option<HasemanCurve> {
    let cut = map.cut_darts(&inside);
    if cut.len() != 4 {
        return None;
    }
    let outside: Vec<bool> = inside.iter().map(|b| !b).collect();
    if !map.induces_connected(&inside) || !map.induces_connected(&outside) {
        return None;
    }
    let cycle = map.boundary_cycle(&inside);
    if cycle.len() != 4 {
        return None;
    }
    let faces_all = map.faces();
    let darts = [cycle[0], cycle[1], cycle[2], cycle[3]];
    let faces = [0, 1, 2, 3].map(|i| faces_all.face_of[ccw(darts[i])]);
    let mut distinct = faces.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 4 {
        return None;
    }
    Some(HasemanCurve { inside, darts, faces })
}

/// All Haseman curves of a connected map, one per bipartition, with the
/// inside taken as the side without `anchor`. Sorted for determinism.
///
/// A curve cuts four edges forming a simple 4-cycle of the dual through
/// four distinct faces, so only those edge sets are tried.
pub fn enumerate_curves(map: &Map4, anchor: usize) -> Vec<HasemanCurve> {
    let n = map.vertex_count();
    if n < 2 {
        return Vec::new();
    }
    let faces = map.faces();
    let mut adj: Vec<Vec<(Dart, usize)>> = vec![Vec::new(); faces.count()];
    for e in map.edges() {
        let (a, b) = (faces.face_of[e], faces.face_of[map.twin(e)]);
        if a != b {
            adj[a].push((e, b));
            adj[b].push((e, a));
        }
    }
    let mut cuts = std::collections::BTreeSet::new();
    for f0 in 0..faces.count() {
        for &(e1, f1) in &adj[f0] {
            for &(e2, f2) in &adj[f1] {
                if f2 == f0 || e2 == e1 {
                    continue;
                }
                for &(e3, f3) in &adj[f2] {
                    if f3 == f0 || f3 == f1 || e3 == e2 {
                        continue;
                    }
                    for &(e4, f4) in &adj[f3] {
                        if f4 != f0 || e4 == e3 || e4 == e1 {
                            continue;
                        }
                        let mut set = [e1, e2, e3, e4];
                        set.sort_unstable();
                        cuts.insert(set);
                    }
                }
            }
        }
    }
    let mut out: Vec<HasemanCurve> =
        cuts.into_iter().filter_map(|set| curve_from_cut(map, anchor, &set)).collect();
    out.sort();
    out.dedup();
    out
}

/// The curve cutting exactly these edges, if there is one.
fn curve_from_cut(map: &Map4, anchor: usize, chosen: &[Dart]) -> Option<HasemanCurve> {
    let n = map.vertex_count();
    let mut removed = vec![false; map.dart_count()];
    for &e in chosen {
        removed[e] = true;
        removed[map.twin(e)] = true;
    }
    let mut side = vec![false; n];
    side[anchor] = true;
    let mut stack = vec![anchor];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for s in 0..4 {
            let d = 4 * v + s;
            if removed[d] {
                continue;
            }
            let u = vertex_of(map.twin(d));
            if !side[u] {
                side[u] = true;
                reached += 1;
                stack.push(u);
            }
        }
    }
    if reached == n {
        return None;
    }
    let inside: Vec<bool> = side.iter().map(|b| !b).collect();
    // every chosen edge must actually cross the cut
    if !chosen.iter().all(|&e| inside[vertex_of(e)] != inside[vertex_of(map.twin(e))]) {
        return None;
    }
    curve_from_side(map, inside)
}

/// All Haseman curves of a diagram, inside = side without crossing 0.
pub fn enumerate_haseman(d: &Diagram) -> Vec<HasemanCurve> {
    enumerate_curves(d.map(), 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Inside,
    Outside,
}

/// Over (+1) or under (-1) at the first crossing met by each of the four
/// threads on the chosen side, in boundary order.
pub fn thread_labels(d: &Diagram, curve: &HasemanCurve, side: Side) -> Result<[i8; 4]> {
    if !validate(d).alternating {
        return Err(Error::NotAlternating);
    }
    let map = d.map();
    Ok(curve.darts.map(|x| {
        let y = match side {
            Side::Inside => x,
            Side::Outside => map.twin(x),
        };
        if map.is_over(y) {
            1
        } else {
            -1
        }
    }))
}

/// Opposite threads carry equal labels.
pub fn opposite_labels_agree(labels: &[i8; 4]) -> bool {
    labels[0] == labels[2] && labels[1] == labels[3]
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every 4-edge subset, for comparison with the dual-cycle search.
    fn brute_force_curves(map: &Map4, anchor: usize) -> Vec<HasemanCurve> {
        let edges: Vec<Dart> = map.edges().collect();
        let m = edges.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    for l in k + 1..m {
                        let chosen = [edges[i], edges[j], edges[k], edges[l]];
                        out.extend(curve_from_cut(map, anchor, &chosen));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn dual_cycles_find_every_curve() {
        let corpus = include_str!("../../../data/alternating_knots_le10.pd");
        for line in corpus.lines().filter(|l| !l.starts_with('#')).step_by(5) {
            let d = parse_pd(line).unwrap();
            for anchor in [0, d.crossing_count() - 1] {
                assert_eq!(
                    enumerate_curves(d.map(), anchor),
                    brute_force_curves(d.map(), anchor),
                    "{line}"
                );
            }
        }
    }
    use crate::diagram::parse_pd;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    #[test]
    fn trefoil_curves_hold_one_or_two_crossings() {
        let d = parse_pd(TREFOIL).unwrap();
        let cs = enumerate_haseman(&d);
        assert!(!cs.is_empty());
        for c in &cs {
            assert_eq!(c.inside_count().min(c.outside_count()), 1);
            assert!(c.bounds_singleton());
        }
    }

    #[test]
    fn figure_eight_has_the_separating_circle() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let cs = enumerate_haseman(&d);
        assert!(cs.iter().any(|c| c.inside_count() == 2 && c.outside_count() == 2));
    }

    #[test]
    fn labels_alternate_and_flip_across() {
        for pd in [TREFOIL, FIGURE_EIGHT] {
            let d = parse_pd(pd).unwrap();
            for c in enumerate_haseman(&d) {
                let a = thread_labels(&d, &c, Side::Inside).unwrap();
                let b = thread_labels(&d, &c, Side::Outside).unwrap();
                assert!(opposite_labels_agree(&a));
                assert_ne!(a[0], a[1]);
                assert_eq!(a.map(|x| -x), b);
            }
        }
    }

    #[test]
    fn non_alternating_rejected() {
        let d = parse_pd(TREFOIL).unwrap();
        let c = enumerate_haseman(&d).remove(0);
        let mut m = d.map().clone();
        m.verts[1] = match m.verts[1] {
            crate::map::Vertex::Crossing { over_even } => {
                crate::map::Vertex::Crossing { over_even: !over_even }
            }
            t => t,
        };
        let bad = Diagram::from_map(m, |x| Some(d.is_out(x))).unwrap();
        assert_eq!(thread_labels(&bad, &c, Side::Inside), Err(Error::NotAlternating));
    }
}
