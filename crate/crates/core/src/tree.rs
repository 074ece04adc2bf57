//! The structure tree of a canonical decomposition and its
//! weight-negating automorphisms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decomposition::{Decomposition, PieceClass};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    B(i64),
    J,
}

impl Label {
    pub fn mirrored(self) -> Label {
        match self {
            Label::B(a) => Label::B(-a),
            Label::J => Label::J,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::B(a) if *a > 0 => write!(f, "B+{a}"),
            Label::B(a) => write!(f, "B{a}"),
            Label::J => f.write_str("J"),
        }
    }
}

/// Vertices are pieces, edge `i` is circle `i` of the canonical family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureTree {
    pub labels: Vec<Label>,
    pub edges: Vec<(usize, usize)>,
}

pub fn build_tree(dec: &Decomposition) -> StructureTree {
    let labels = dec
        .classes
        .iter()
        .map(|c| match c {
            PieceClass::TwistedBand { weight, .. } => Label::B(*weight),
            _ => Label::J,
        })
        .collect();
    let edges = (0..dec.family.len()).map(|c| (dec.inner_piece(c), dec.outer_piece(c))).collect();
    StructureTree { labels, edges }
}

impl StructureTree {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_arborescent(&self) -> bool {
        self.labels.iter().all(|l| matches!(l, Label::B(_)))
    }

    pub fn is_polyhedral(&self) -> bool {
        self.labels.iter().all(|l| *l == Label::J)
    }

    pub fn mirrored(&self) -> StructureTree {
        StructureTree {
            labels: self.labels.iter().map(|l| l.mirrored()).collect(),
            edges: self.edges.clone(),
        }
    }

    fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.iter().position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }

    /// One or two central vertices.
    fn centres(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut deg: Vec<usize> = (0..n).map(|v| self.neighbours(v).len()).collect();
        let mut alive = vec![true; n];
        let mut left = n;
        while left > 2 {
            let leaves: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] <= 1).collect();
            for &v in &leaves {
                alive[v] = false;
                left -= 1;
                for u in self.neighbours(v) {
                    deg[u] = deg[u].saturating_sub(1);
                }
            }
        }
        (0..n).filter(|&v| alive[v]).collect()
    }

    fn term_from(&self, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = self
            .neighbours(v)
            .into_iter()
            .filter(|&u| Some(u) != parent)
            .map(|u| self.term_from(u, Some(v)))
            .collect();
        kids.sort();
        let mut s = format!("({}", self.labels[v]);
        for k in kids {
            s.push(' ');
            s.push_str(&k);
        }
        s.push(')');
        s
    }

    /// Canonical nested-term form, rooted at the centre (or joining the two
    /// bicentres with `-`). Equal terms mean label-preserving isomorphic trees.
    pub fn term(&self) -> String {
        match self.centres().as_slice() {
            [c] => self.term_from(*c, None),
            [a, b] => {
                let mut t = [self.term_from(*a, Some(*b)), self.term_from(*b, Some(*a))];
                t.sort();
                format!("{}-{}", t[0], t[1])
            }
            _ => String::new(),
        }
    }
}

impl fmt::Display for StructureTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.term())
    }
}

/// A vertex permutation preserving adjacency and sending B(a) to B(-a).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeAut {
    pub perm: Vec<usize>,
    /// Induced permutation of edges (circles).
    pub edge_perm: Vec<usize>,
}

pub fn mirror_automorphisms(t: &StructureTree) -> Vec<TreeAut> {
    let n = t.vertex_count();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| t.neighbours(v)).collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        v: usize,
        t: &StructureTree,
        nbrs: &[Vec<usize>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<TreeAut>,
    ) {
        let n = perm.len();
        if v == n {
            let edge_perm = t
                .edges
                .iter()
                .map(|&(a, b)| t.edge_index(perm[a], perm[b]).expect("adjacency preserved"))
                .collect();
            out.push(TreeAut { perm: perm.clone(), edge_perm });
            return;
        }
        for w in 0..n {
            if used[w] || t.labels[w] != t.labels[v].mirrored() || nbrs[w].len() != nbrs[v].len() {
                continue;
            }
            let ok = nbrs[v]
                .iter()
                .filter(|&&u| u < v)
                .all(|&u| nbrs[w].contains(&perm[u]));
            let ok = ok
                && (0..v).all(|u| {
                    let adj = nbrs[v].contains(&u);
                    adj == nbrs[w].contains(&perm[u])
                });
            if !ok {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            extend(v + 1, t, nbrs, perm, used, out);
            used[w] = false;
            perm[v] = usize::MAX;
        }
    }
    if n > 0 {
        extend(0, t, &nbrs, &mut perm, &mut used, &mut out);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FixedLocus {
    /// A fixed jewel vertex.
    CaseA { jewel: usize },
    /// An inverted edge between two jewels.
    CaseB { edge: usize },
    /// An inverted edge between two twisted band diagrams.
    CaseC { edge: usize },
}

impl FixedLocus {
    pub fn name(&self) -> &'static str {
        match self {
            FixedLocus::CaseA { .. } => "A",
            FixedLocus::CaseB { .. } => "B",
            FixedLocus::CaseC { .. } => "C",
        }
    }

    pub fn circle(&self) -> Option<usize> {
        match self {
            FixedLocus::CaseB { edge } | FixedLocus::CaseC { edge } => Some(*edge),
            FixedLocus::CaseA { .. } => None,
        }
    }
}

pub fn fixed_locus(t: &StructureTree, a: &TreeAut) -> Result<FixedLocus> {
    let fixed: Vec<usize> = (0..t.vertex_count()).filter(|&v| a.perm[v] == v).collect();
    if let Some(&b) = fixed.iter().find(|&&v| matches!(t.labels[v], Label::B(_))) {
        return Err(Error::InvariantBandViolation(format!("band vertex {b} is fixed")));
    }
    match fixed.as_slice() {
        [j] => Ok(FixedLocus::CaseA { jewel: *j }),
        [] => {
            let inverted: Vec<usize> = (0..t.edges.len())
                .filter(|&e| {
                    let (x, y) = t.edges[e];
                    a.perm[x] == y && a.perm[y] == x
                })
                .collect();
            let [e] = inverted.as_slice() else { return Err(Error::NonUniqueFixedLocus) };
            let (x, y) = t.edges[*e];
            match (t.labels[x], t.labels[y]) {
                (Label::J, Label::J) => Ok(FixedLocus::CaseB { edge: *e }),
                (Label::B(_), Label::B(_)) => Ok(FixedLocus::CaseC { edge: *e }),
                _ => Err(Error::InvariantBandViolation(format!(
                    "edge {e} between a band and a jewel is inverted"
                ))),
            }
        }
        _ => Err(Error::NonUniqueFixedLocus),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose;
    use crate::diagram::parse_pd;

    fn tree(pd: &str) -> StructureTree {
        build_tree(&decompose(&parse_pd(pd).unwrap()).unwrap())
    }

    #[test]
    fn trefoil_tree_has_no_mirror_automorphism() {
        let t = tree("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
        assert_eq!(t.vertex_count(), 1);
        assert!(matches!(t.labels[0], Label::B(a) if a.abs() == 3));
        assert!(mirror_automorphisms(&t).is_empty());
    }

    #[test]
    fn figure_eight_tree_is_swapped() {
        let t = tree("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
        assert_eq!(t.term(), "(B+2)-(B-2)");
        let auts = mirror_automorphisms(&t);
        assert_eq!(auts.len(), 1);
        assert_eq!(fixed_locus(&t, &auts[0]).unwrap(), FixedLocus::CaseC { edge: 0 });
        assert_eq!(t.mirrored().term(), t.term());
    }

    #[test]
    fn single_jewel_and_fixed_band() {
        let j = StructureTree { labels: vec![Label::J], edges: vec![] };
        let auts = mirror_automorphisms(&j);
        assert_eq!(auts.len(), 1);
        assert_eq!(fixed_locus(&j, &auts[0]).unwrap(), FixedLocus::CaseA { jewel: 0 });
        let star = StructureTree {
            labels: vec![Label::B(0), Label::B(3), Label::B(-3)],
            edges: vec![(0, 1), (0, 2)],
        };
        let auts = mirror_automorphisms(&star);
        assert_eq!(auts.len(), 1);
        assert!(matches!(fixed_locus(&star, &auts[0]), Err(Error::InvariantBandViolation(_))));
        assert_eq!(star.term(), "(B0 (B+3) (B-3))");
    }
}
