//! Canonical codes and embedding-preserving isomorphisms of planar maps.
//!
//! A rooted code is produced by a breadth-first walk from a root dart that
//! numbers vertices in discovery order and darts by their rotation offset
//! from the dart through which the vertex was discovered. Two connected maps
//! are isomorphic by a rotation-preserving bijection exactly when they share
//! a rooted code for some pair of roots, so the minimum over all roots is a
//! complete invariant. Walking rotations backwards gives the degree -1 code.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::map::{slot, vertex_of, Dart, Map4, Vertex};

/// Orientation effect of a sphere map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Degree {
    Plus,
    Minus,
}

impl Degree {
    pub fn sign(self) -> i8 {
        match self {
            Degree::Plus => 1,
            Degree::Minus => -1,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Degree::Plus => "+1",
            Degree::Minus => "-1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(pub Vec<u32>);

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

struct Rooted {
    code: Vec<u32>,
    /// dart -> canonical dart label `4 * vertex_number + offset`
    label: Vec<usize>,
}

fn rooted(map: &Map4, root: Dart, reversed: bool, orient: Option<&[bool]>) -> Rooted {
    let n = map.vertex_count();
    let mut num = vec![usize::MAX; n];
    let mut base = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    let rel = |d: Dart, base: &[usize]| -> usize {
        let b = slot(base[vertex_of(d)]);
        if reversed {
            (b + 4 - slot(d)) % 4
        } else {
            (slot(d) + 4 - b) % 4
        }
    };
    let at = |v: usize, k: usize, base: &[usize]| -> Dart {
        let b = slot(base[v]);
        if reversed {
            4 * v + (b + 4 - k) % 4
        } else {
            4 * v + (b + k) % 4
        }
    };
    let r = vertex_of(root);
    num[r] = 0;
    base[r] = root;
    order.push(r);
    queue.push_back(r);
    let mut code = Vec::with_capacity(n * 13);
    let mut label = vec![usize::MAX; map.dart_count()];
    while let Some(v) = queue.pop_front() {
        match map.vertex(v) {
            Vertex::Crossing { .. } => code.push(map.is_over(base[v]) as u32),
            Vertex::Tangle(id) => code.push(2 + 4 * id + slot(base[v]) as u32),
        }
        for k in 0..4 {
            let d = at(v, k, &base);
            label[d] = 4 * num[v] + k;
            let t = map.twin(d);
            let u = vertex_of(t);
            if num[u] == usize::MAX {
                num[u] = order.len();
                base[u] = t;
                order.push(u);
                queue.push_back(u);
            }
            code.push(num[u] as u32);
            code.push(rel(t, &base) as u32);
            if let Some(o) = orient {
                code.push(o[d] as u32);
            }
        }
    }
    Rooted { code, label }
}

/// Which darts may serve as the root of a code.
#[derive(Clone, Copy, Debug)]
pub enum Roots {
    /// Every dart of a crossing vertex (or of any vertex when there are none).
    All,
    /// A single fixed dart, e.g. boundary point 0 of a tangle frame.
    Fixed(Dart),
}

fn root_darts(map: &Map4, roots: Roots) -> Vec<Dart> {
    match roots {
        Roots::Fixed(d) => vec![d],
        Roots::All => {
            let crossing: Vec<Dart> =
                (0..map.dart_count()).filter(|&d| map.vertex(vertex_of(d)).is_crossing()).collect();
            if crossing.is_empty() {
                (0..map.dart_count()).collect()
            } else {
                crossing
            }
        }
    }
}

/// Lexicographically minimal rooted code over the allowed roots.
pub fn canonical_code(
    map: &Map4,
    orient: Option<&[bool]>,
    degree: Degree,
    roots: Roots,
) -> CanonicalCode {
    let reversed = degree == Degree::Minus;
    let best = root_darts(map, roots)
        .into_iter()
        .map(|r| rooted(map, r, reversed, orient).code)
        .min()
        .unwrap_or_default();
    CanonicalCode(best)
}

/// All dart bijections `a -> b` carrying rotations of `a` to rotations of `b`
/// (reversed when `degree` is `Minus`), vertex kinds and over/under data, and
/// orientation flags when both are supplied. Maps must be connected.
pub fn isomorphisms(
    a: &Map4,
    a_orient: Option<&[bool]>,
    b: &Map4,
    b_orient: Option<&[bool]>,
    degree: Degree,
    roots: Roots,
) -> Vec<Vec<Dart>> {
    if a.vertex_count() != b.vertex_count() || a.vertex_count() == 0 {
        return Vec::new();
    }
    let ra = match roots {
        Roots::Fixed(d) => d,
        Roots::All => root_darts(a, Roots::All)[0],
    };
    let orient_pair = match (a_orient, b_orient) {
        (Some(x), Some(y)) => Some((x, y)),
        _ => None,
    };
    let la = rooted(a, ra, false, orient_pair.map(|p| p.0));
    let reversed = degree == Degree::Minus;
    let mut out = Vec::new();
    for rb in root_darts(b, roots) {
        let lb = rooted(b, rb, reversed, orient_pair.map(|p| p.1));
        if lb.code != la.code {
            continue;
        }
        let mut inv = vec![usize::MAX; b.dart_count()];
        for (d, &l) in lb.label.iter().enumerate() {
            inv[l] = d;
        }
        out.push(la.label.iter().map(|&l| inv[l]).collect());
    }
    out
}

pub fn find_isomorphism(
    a: &Map4,
    a_orient: Option<&[bool]>,
    b: &Map4,
    b_orient: Option<&[bool]>,
    degree: Degree,
) -> Option<Vec<Dart>> {
    isomorphisms(a, a_orient, b, b_orient, degree, Roots::All).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::Vertex;

    fn necklace(n: usize) -> Map4 {
        let mut twin = vec![0; 4 * n];
        for k in 0..n {
            let nk = (k + 1) % n;
            twin[4 * k + 2] = 4 * nk + 1;
            twin[4 * nk + 1] = 4 * k + 2;
            twin[4 * k + 3] = 4 * nk;
            twin[4 * nk] = 4 * k + 3;
        }
        Map4::new(twin, vec![Vertex::Crossing { over_even: true }; n])
    }

    #[test]
    fn relabelled_copy_has_equal_code() {
        let m = necklace(5);
        // rotate every vertex's slots by one and permute vertex numbers
        let perm = [3usize, 0, 4, 1, 2];
        let mut twin = vec![0; 20];
        let mut verts = vec![Vertex::Crossing { over_even: true }; 5];
        let mv = |d: Dart| 4 * perm[d / 4] + (d + 1) % 4;
        for d in 0..20 {
            twin[mv(d)] = mv(m.twin(d));
        }
        for v in 0..5 {
            // a one-slot shift swaps which parity is over
            verts[perm[v]] = Vertex::Crossing { over_even: false };
        }
        let c = Map4::new(twin, verts);
        assert_eq!(
            canonical_code(&m, None, Degree::Plus, Roots::All),
            canonical_code(&c, None, Degree::Plus, Roots::All)
        );
        let iso = find_isomorphism(&m, None, &c, None, Degree::Plus).unwrap();
        for d in 0..20 {
            assert_eq!(iso[m.twin(d)], c.twin(iso[d]));
        }
    }

    #[test]
    fn minus_code_matches_reflection() {
        let m = necklace(3);
        assert_eq!(
            canonical_code(&m, None, Degree::Minus, Roots::All),
            canonical_code(&m.reflected(), None, Degree::Plus, Roots::All)
        );
    }
}
