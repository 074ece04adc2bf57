//! The two checkerboard graphs of a projection and their planar
//! equivalence.
//!
//! Faces are 2-coloured with the face left of dart 0 white. `G` has the
//! black faces as vertices, `G*` the white ones; both have one edge per
//! crossing, numbered by crossing. Text export:
//!
//! ```text
//! vertices <n>
//! edge <crossing> <u> <v> <sign>
//! rotation <vertex>: <crossing> <crossing> ...
//! ```

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::Degree;
use crate::diagram::{all_map_isomorphisms, Diagram};
use crate::error::Result;
use crate::flype::flype_closure;
use crate::map::{slot, vertex_of, Map4};

/// An embedded graph with signed edges. Half-edge `2e + k` is end `k` of
/// edge `e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerboardGraph {
    /// Face of the projection behind each vertex.
    pub faces: Vec<usize>,
    /// End vertices of each edge.
    pub edges: Vec<(usize, usize)>,
    pub signs: Vec<i8>,
    /// Half-edges around each vertex, in a fixed rotational sense.
    pub rotation: Vec<Vec<usize>>,
}

impl CheckerboardGraph {
    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn half_vertex(&self) -> Vec<usize> {
        let mut hv = vec![0; 2 * self.edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for &h in rot {
                hv[h] = v;
            }
        }
        hv
    }

    /// Next half-edge around its vertex, and the previous one.
    fn sigma(&self) -> (Vec<usize>, Vec<usize>) {
        let n = 2 * self.edges.len();
        let (mut next, mut prev) = (vec![0; n], vec![0; n]);
        for rot in &self.rotation {
            for (i, &h) in rot.iter().enumerate() {
                let h2 = rot[(i + 1) % rot.len()];
                next[h] = h2;
                prev[h2] = h;
            }
        }
        (next, prev)
    }

    /// The planar dual: one vertex per face of the embedding, rotation
    /// following the face walks, signs negated.
    pub fn dual(&self) -> CheckerboardGraph {
        let n = 2 * self.edges.len();
        let (next, _) = self.sigma();
        let mut face = vec![usize::MAX; n];
        let mut rotation = Vec::new();
        for start in 0..n {
            if face[start] != usize::MAX {
                continue;
            }
            let f = rotation.len();
            let mut walk = Vec::new();
            let mut h = start;
            while face[h] == usize::MAX {
                face[h] = f;
                walk.push(h);
                h = next[h ^ 1];
            }
            rotation.push(walk);
        }
        let edges = (0..self.edges.len()).map(|e| (face[2 * e], face[2 * e + 1])).collect();
        CheckerboardGraph {
            faces: (0..rotation.len()).collect(),
            edges,
            signs: self.signs.iter().map(|s| -s).collect(),
            rotation,
        }
    }
}

impl fmt::Display for CheckerboardGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertex_count())?;
        for (e, (u, v)) in self.edges.iter().enumerate() {
            writeln!(f, "edge {e} {u} {v} {:+}", self.signs[e])?;
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let es: Vec<String> = rot.iter().map(|h| (h / 2).to_string()).collect();
            writeln!(f, "rotation {v}: {}", es.join(" "))?;
        }
        Ok(())
    }
}

/// Colour of every face, with the face of dart 0 white (false).
pub fn face_colours(map: &Map4) -> (crate::map::Faces, Vec<bool>) {
    let faces = map.faces();
    let mut black = vec![None; faces.count()];
    black[faces.face_of[0]] = Some(false);
    let mut queue = VecDeque::from([faces.face_of[0]]);
    while let Some(f) = queue.pop_front() {
        let c = black[f].expect("queued faces are coloured");
        for &d in &faces.boundary[f] {
            let g = faces.face_of[map.twin(d)];
            if black[g].is_none() {
                black[g] = Some(!c);
                queue.push_back(g);
            }
        }
    }
    let black = black.into_iter().map(|b| b.unwrap_or(false)).collect();
    (faces, black)
}

fn graph_of(map: &Map4, faces: &crate::map::Faces, black: &[bool], want: bool) -> CheckerboardGraph {
    let mut index = vec![usize::MAX; faces.count()];
    let mut vertex_faces = Vec::new();
    for f in 0..faces.count() {
        if black[f] == want {
            index[f] = vertex_faces.len();
            vertex_faces.push(f);
        }
    }
    let n = map.vertex_count();
    // first slot of the corner of colour `want` at each crossing: the corner
    // between slots i and i + 1 is the face of dart 4v + i + 1
    let first: Vec<usize> = (0..n)
        .map(|v| if black[faces.face_of[4 * v + 1]] == want { 0 } else { 1 })
        .collect();
    let mut edges = vec![(0, 0); n];
    let mut signs = vec![0; n];
    for v in 0..n {
        let i = first[v];
        let a = index[faces.face_of[4 * v + i + 1]];
        let b = index[faces.face_of[4 * v + (i + 3) % 4]];
        edges[v] = (a, b);
        signs[v] = if map.is_over(4 * v + i) { 1 } else { -1 };
    }
    let mut rotation = vec![Vec::new(); vertex_faces.len()];
    for (k, &f) in vertex_faces.iter().enumerate() {
        for &d in &faces.boundary[f] {
            let v = vertex_of(d);
            // dart d lies in the corner between slots slot(d) - 1 and slot(d)
            let corner = (slot(d) + 3) % 4;
            let end = usize::from(corner != first[v]);
            rotation[k].push(2 * v + end);
        }
    }
    CheckerboardGraph { faces: vertex_faces, edges, signs, rotation }
}

/// `(G, G*)`: the black-face graph and the white-face graph.
pub fn checkerboard_graphs(d: &Diagram) -> (CheckerboardGraph, CheckerboardGraph) {
    let map = d.map();
    let (faces, black) = face_colours(map);
    (graph_of(map, &faces, &black, true), graph_of(map, &faces, &black, false))
}

/// Whether a sphere map of the given degree carries `a` onto `b`. With
/// `signed`, every edge sign must be negated, as mirroring does.
pub fn graphs_equivalent(
    a: &CheckerboardGraph,
    b: &CheckerboardGraph,
    degree: Degree,
    signed: bool,
) -> bool {
    let n = 2 * a.edges.len();
    if n != 2 * b.edges.len() || a.vertex_count() != b.vertex_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let (an, _) = a.sigma();
    let (bn, bp) = b.sigma();
    let (ahv, bhv) = (a.half_vertex(), b.half_vertex());
    'root: for b0 in 0..n {
        let mut m = vec![usize::MAX; n];
        let mut used = vec![false; n];
        m[0] = b0;
        used[b0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(h) = queue.pop_front() {
            let img = m[h];
            let step_b = if degree == Degree::Plus { bn[img] } else { bp[img] };
            for (x, y) in [(h ^ 1, img ^ 1), (an[h], step_b)] {
                if m[x] == usize::MAX {
                    if used[y] {
                        continue 'root;
                    }
                    m[x] = y;
                    used[y] = true;
                    queue.push_back(x);
                } else if m[x] != y {
                    continue 'root;
                }
            }
        }
        if m.contains(&usize::MAX) {
            continue;
        }
        let vertices_ok = (0..n).all(|h| {
            (0..n).all(|k| (ahv[h] == ahv[k]) == (bhv[m[h]] == bhv[m[k]]))
        });
        if !vertices_ok {
            continue;
        }
        if signed && (0..a.edges.len()).any(|e| b.signs[m[2 * e] / 2] != -a.signs[e]) {
            continue;
        }
        return true;
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KauffmanResult {
    /// First projection of the flype class whose two graphs are equivalent.
    pub found_projection: Option<Diagram>,
    /// +1 or -1 for the equivalence found, preferring +1.
    pub degree: Option<i8>,
}

/// Searches the flype class of `d` for a projection with `G` equivalent to
/// `G*`, trying degree +1 over the whole class before degree -1.
pub fn kauffman_check(d: &Diagram, budget: usize) -> Result<KauffmanResult> {
    crate::achirality::require_knot(d)?;
    let closure = flype_closure(d, budget)?;
    let mut diagrams: Vec<&Diagram> = closure.diagrams.iter().collect();
    diagrams.sort_by_cached_key(|p| p.canonical_code(Degree::Plus));
    for degree in [Degree::Plus, Degree::Minus] {
        for p in &diagrams {
            let (g, gs) = checkerboard_graphs(p);
            if graphs_equivalent(&g, &gs, degree, false) {
                return Ok(KauffmanResult {
                    found_projection: Some((*p).clone()),
                    degree: Some(degree.sign()),
                });
            }
        }
    }
    Ok(KauffmanResult { found_projection: None, degree: None })
}

/// Whether a sphere map of the given degree carries the projection onto
/// itself with the knot orientation changed by `effect`, crossings swapped
/// for degree +1 and kept for degree -1.
pub fn self_map_exists(d: &Diagram, degree: Degree, effect: i8) -> bool {
    let target = match degree {
        Degree::Plus => d.mirror(),
        Degree::Minus => d.clone(),
    };
    all_map_isomorphisms(d, &target, degree)
        .iter()
        .any(|i| i.knot_orientation_effect == effect)
}
