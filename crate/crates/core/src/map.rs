//! 4-regular planar maps stored as rotation systems.
//!
//! Every vertex owns four darts `4v..4v+4`, listed counterclockwise. A dart
//! is paired with the dart at the other end of its edge by [`Map4::twin`].
//! Vertices are either crossings (with over/under data) or tangle vertices,
//! which stand for a collapsed disc meeting the rest of the map in four
//! points; dart `4v + j` of a tangle vertex is boundary point `j`.

use serde::{Deserialize, Serialize};

pub type Dart = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Vertex {
    /// `over_even` is true when slots 0 and 2 carry the over-strand.
    Crossing { over_even: bool },
    Tangle(u32),
}

impl Vertex {
    pub fn is_crossing(&self) -> bool {
        matches!(self, Vertex::Crossing { .. })
    }
}

#[inline]
pub fn vertex_of(d: Dart) -> usize {
    d / 4
}

#[inline]
pub fn slot(d: Dart) -> usize {
    d % 4
}

#[inline]
pub fn ccw(d: Dart) -> Dart {
    (d & !3) | ((d + 1) & 3)
}

#[inline]
pub fn cw(d: Dart) -> Dart {
    (d & !3) | ((d + 3) & 3)
}

/// The dart across the vertex; at a crossing this continues the strand.
#[inline]
pub fn opposite(d: Dart) -> Dart {
    (d & !3) | ((d + 2) & 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Map4 {
    pub(crate) twin: Vec<Dart>,
    pub(crate) verts: Vec<Vertex>,
}

/// Face structure of a map: orbits of `d -> ccw(twin(d))`.
#[derive(Clone, Debug)]
pub struct Faces {
    pub face_of: Vec<usize>,
    pub boundary: Vec<Vec<Dart>>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.boundary.len()
    }

    /// Face in the corner between slot `i` and slot `i + 1` of a vertex.
    pub fn corner(&self, v: usize, i: usize) -> usize {
        self.face_of[4 * v + (i + 1) % 4]
    }

    /// The two faces on either side of the edge carrying dart `d`.
    pub fn sides(&self, map: &Map4, d: Dart) -> (usize, usize) {
        (self.face_of[d], self.face_of[map.twin(d)])
    }
}

impl Map4 {
    pub fn new(twin: Vec<Dart>, verts: Vec<Vertex>) -> Self {
        debug_assert_eq!(twin.len(), 4 * verts.len());
        Map4 { twin, verts }
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    #[inline]
    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d]
    }

    pub fn vertex(&self, v: usize) -> Vertex {
        self.verts[v]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn crossing_count(&self) -> usize {
        self.verts.iter().filter(|v| v.is_crossing()).count()
    }

    /// True when the strand through dart `d` is the over-strand at its crossing.
    pub fn is_over(&self, d: Dart) -> bool {
        match self.verts[vertex_of(d)] {
            Vertex::Crossing { over_even } => (slot(d) % 2 == 0) == over_even,
            Vertex::Tangle(_) => false,
        }
    }

    /// One representative dart per edge (the smaller of the pair).
    pub fn edges(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.twin.len()).filter(move |&d| d < self.twin[d])
    }

    pub fn faces(&self) -> Faces {
        let n = self.twin.len();
        let mut face_of = vec![usize::MAX; n];
        let mut boundary = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let f = boundary.len();
            let mut walk = Vec::new();
            let mut d = start;
            while face_of[d] == usize::MAX {
                face_of[d] = f;
                walk.push(d);
                d = ccw(self.twin[d]);
            }
            boundary.push(walk);
        }
        Faces { face_of, boundary }
    }

    /// Connected components of the underlying graph, as vertex labels.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let n = self.verts.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(v) = stack.pop() {
                for i in 0..4 {
                    let u = vertex_of(self.twin[4 * v + i]);
                    if comp[u] == usize::MAX {
                        comp[u] = count;
                        stack.push(u);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.verts.is_empty() || self.components().0 == 1
    }

    /// Checks that `twin` is a fixed-point-free involution and that the
    /// rotation system is planar (Euler characteristic 2 per component).
    pub fn check_planar(&self) -> Result<(), String> {
        let n = self.twin.len();
        if n != 4 * self.verts.len() {
            return Err("dart count is not four per vertex".into());
        }
        for d in 0..n {
            let t = self.twin[d];
            if t >= n || t == d || self.twin[t] != d {
                return Err(format!("dart {d} has no consistent partner"));
            }
        }
        let (k, _) = self.components();
        let v = self.verts.len() as i64;
        let f = self.faces().count() as i64;
        let e = self.edge_count() as i64;
        if v - e + f != 2 * k as i64 {
            return Err(format!(
                "rotation system is not planar: V={v} E={e} F={f} with {k} component(s)"
            ));
        }
        Ok(())
    }

    /// Swaps over and under at every crossing.
    pub fn mirrored(&self) -> Map4 {
        let verts = self
            .verts
            .iter()
            .map(|v| match *v {
                Vertex::Crossing { over_even } => Vertex::Crossing { over_even: !over_even },
                t => t,
            })
            .collect();
        Map4 { twin: self.twin.clone(), verts }
    }

    /// Dart relabelling `4v + i -> 4v + (-i mod 4)` that reverses every
    /// cyclic order; the image of the map under a degree -1 sphere map.
    pub fn reflect_dart(d: Dart) -> Dart {
        (d & !3) | ((4 - (d & 3)) & 3)
    }

    pub fn reflected(&self) -> Map4 {
        let mut twin = vec![0; self.twin.len()];
        for d in 0..self.twin.len() {
            twin[Self::reflect_dart(d)] = Self::reflect_dart(self.twin[d]);
        }
        Map4 { twin, verts: self.verts.clone() }
    }

    /// Darts of `set` (a vertex set) whose partner lies outside `set`.
    pub fn cut_darts(&self, inside: &[bool]) -> Vec<Dart> {
        (0..self.twin.len())
            .filter(|&d| inside[vertex_of(d)] && !inside[vertex_of(self.twin[d])])
            .collect()
    }

    /// Whether the vertices flagged in `inside` induce a connected subgraph.
    pub fn induces_connected(&self, inside: &[bool]) -> bool {
        let Some(start) = inside.iter().position(|&b| b) else {
            return false;
        };
        let mut seen = vec![false; self.verts.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for i in 0..4 {
                let u = vertex_of(self.twin[4 * v + i]);
                if inside[u] && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == inside.iter().filter(|&&b| b).count()
    }

    /// Cyclic counterclockwise order of the cut darts around the disc
    /// occupied by `inside`, as seen from outside it.
    ///
    /// Walking a face from outside into the disc, the face leaves it through
    /// the cut dart that follows the entry dart in the rotation around the
    /// collapsed disc.
    pub fn boundary_cycle(&self, inside: &[bool]) -> Vec<Dart> {
        let cut = self.cut_darts(inside);
        if cut.is_empty() {
            return cut;
        }
        let is_cut = |d: Dart| inside[vertex_of(d)] && !inside[vertex_of(self.twin[d])];
        let next = |d_in: Dart| {
            let mut x = ccw(d_in);
            let mut guard = 0;
            while !is_cut(x) {
                x = ccw(self.twin[x]);
                guard += 1;
                assert!(guard <= self.twin.len(), "face walk did not leave the disc");
            }
            x
        };
        let mut order = vec![cut[0]];
        let mut d = next(cut[0]);
        while d != cut[0] {
            order.push(d);
            d = next(d);
            assert!(order.len() <= cut.len(), "boundary is not a single circle");
        }
        order
    }

    /// Collapses every vertex set in `discs` to a tangle vertex, returning the
    /// new map together with the old-vertex to new-vertex table (`None` for
    /// collapsed vertices) and, per disc, the inner darts in port order.
    pub fn collapse(&self, discs: &[(Vec<bool>, u32)]) -> Collapsed {
        let n = self.verts.len();
        let mut owner = vec![usize::MAX; n];
        for (k, (inside, _)) in discs.iter().enumerate() {
            for v in 0..n {
                if inside[v] {
                    assert!(owner[v] == usize::MAX, "discs overlap");
                    owner[v] = k;
                }
            }
        }
        let mut new_index = vec![None; n];
        let mut verts = Vec::new();
        for v in 0..n {
            if owner[v] == usize::MAX {
                new_index[v] = Some(verts.len());
                verts.push(self.verts[v]);
            }
        }
        let mut ports = Vec::new();
        let mut disc_vertex = Vec::new();
        // image of each old dart that survives (outside darts, and cut darts on the inside)
        let mut image = vec![usize::MAX; self.twin.len()];
        for v in 0..n {
            if let Some(nv) = new_index[v] {
                for i in 0..4 {
                    image[4 * v + i] = 4 * nv + i;
                }
            }
        }
        for (inside, label) in discs {
            let cycle = self.boundary_cycle(inside);
            assert_eq!(cycle.len(), 4, "collapsed disc must meet the map in four points");
            let tv = verts.len();
            verts.push(Vertex::Tangle(*label));
            for (j, &d) in cycle.iter().enumerate() {
                image[d] = 4 * tv + j;
            }
            disc_vertex.push(tv);
            ports.push(cycle);
        }
        let mut twin = vec![usize::MAX; 4 * verts.len()];
        for d in 0..self.twin.len() {
            let (a, b) = (image[d], image[self.twin[d]]);
            if a != usize::MAX {
                assert!(b != usize::MAX, "dart {d} leaves a collapsed disc without being cut");
                twin[a] = b;
            }
        }
        Collapsed { map: Map4 { twin, verts }, new_index, disc_vertex, ports, image }
    }
}

#[derive(Clone, Debug)]
pub struct Collapsed {
    pub map: Map4,
    pub new_index: Vec<Option<usize>>,
    pub disc_vertex: Vec<usize>,
    /// Per disc: the inner (disc-side) darts of the cut edges, port order.
    pub ports: Vec<Vec<Dart>>,
    /// Old dart -> new dart, `usize::MAX` for darts interior to a disc.
    pub image: Vec<Dart>,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `n` crossings joined in a closed chain; alternating, a (2, n) torus diagram.
    pub(crate) fn necklace(n: usize) -> Map4 {
        // crossing k: slots 0,1 face crossing k-1; slots 2,3 face crossing k+1
        let mut twin = vec![0; 4 * n];
        for k in 0..n {
            let nk = (k + 1) % n;
            twin[4 * k + 2] = 4 * nk + 1;
            twin[4 * nk + 1] = 4 * k + 2;
            twin[4 * k + 3] = 4 * nk;
            twin[4 * nk] = 4 * k + 3;
        }
        let verts = (0..n).map(|_| Vertex::Crossing { over_even: true }).collect();
        Map4::new(twin, verts)
    }

    #[test]
    fn necklace_is_planar() {
        for n in 2..7 {
            let m = necklace(n);
            m.check_planar().unwrap();
            assert_eq!(m.faces().count(), n + 2);
        }
    }

    #[test]
    fn reflection_is_an_involution_and_planar() {
        let m = necklace(5);
        let r = m.reflected();
        r.check_planar().unwrap();
        assert_eq!(r.reflected(), m);
    }

    #[test]
    fn boundary_cycle_of_two_beads() {
        let m = necklace(4);
        let inside = vec![true, true, false, false];
        let cyc = m.boundary_cycle(&inside);
        assert_eq!(cyc.len(), 4);
        let c = m.collapse(&[(inside, 7)]);
        c.map.check_planar().unwrap();
        assert_eq!(c.map.vertex_count(), 3);
    }
}
