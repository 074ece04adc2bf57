//! Achirality decisions and symmetry witnesses.

use serde::{Deserialize, Serialize};

use crate::canon::{CanonicalCode, Degree};
use crate::decomposition::{decompose, filling, Decomposition};
use crate::diagram::{all_map_isomorphisms, validate, Diagram, MapIso};
use crate::error::{Error, Result};
use crate::flype::{flype_closure, flype_equivalent_tangles, Tangle};
use crate::frame::{
    detect_partition, realized_symmetries, Configuration, ProjectionType, RealizedSymmetry,
    TangleRelations,
};
use crate::map::{vertex_of, Dart, Map4};
use crate::tree::{build_tree, fixed_locus, mirror_automorphisms, FixedLocus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Oracle,
    Structured,
}

/// What the structured method found at one candidate fixed locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub locus: FixedLocus,
    /// Placements found around the invariant circle (cases B and C).
    pub configurations: Vec<Configuration>,
    pub projection_types: Vec<ProjectionType>,
    pub relations: Option<TangleRelations>,
    /// Frame symmetries realized directly on the two sides of the circle.
    pub symmetries: Vec<RealizedSymmetry>,
    /// Case A: jewel symmetries of the filled projection that extend to the
    /// discs, as (degree, knot orientation effect).
    pub jewel_symmetries: Vec<(i8, i8)>,
    pub plus: bool,
    pub minus: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AchiralityVerdict {
    pub plus: bool,
    pub minus: bool,
    pub method: Method,
    /// False when the structured method could not settle `plus`.
    pub plus_conclusive: bool,
    pub evidence: Vec<Evidence>,
    /// Number of distinct projections in the flype closure (oracle only).
    pub closure_size: Option<usize>,
}

pub(crate) fn require_knot(d: &Diagram) -> Result<()> {
    let r = validate(d);
    if !r.is_knot {
        return Err(Error::NotAKnot(d.component_count()));
    }
    if !r.alternating {
        return Err(Error::NotAlternating);
    }
    if !r.is_valid() {
        return Err(Error::Precondition(
            "diagram must be connected, prime, reduced and alternating".into(),
        ));
    }
    Ok(())
}

/// Decides both achiralities by searching the flype closure of `d` for the
/// mirror image, with orientation kept (+) or reversed (-).
pub fn achiral_oracle(d: &Diagram, budget: usize) -> Result<AchiralityVerdict> {
    require_knot(d)?;
    let closure = flype_closure(d, budget)?;
    let m = d.mirror();
    let plus = closure.contains(&m);
    let minus = closure.contains(&m.reverse()?);
    Ok(AchiralityVerdict {
        plus,
        minus,
        method: Method::Oracle,
        plus_conclusive: true,
        evidence: Vec::new(),
        closure_size: Some(closure.len()),
    })
}

/// Disc of a piece's boundary circle `i`, on the side away from the piece.
pub(crate) fn disc_of(dec: &Decomposition, piece: usize, i: usize) -> Vec<bool> {
    let p = &dec.pieces[piece];
    let c = p.circles[i];
    let curve = &dec.family.curves[c];
    if p.outer == Some(c) {
        curve.inside.iter().map(|b| !b).collect()
    } else {
        curve.inside.clone()
    }
}

/// Symmetries of the filled jewel that map jewel crossings to jewel
/// crossings and carry each disc onto the disc it is sent to, up to flypes
/// fixing the circles. Degree +1 maps target the mirror, degree -1 maps the
/// projection itself.
fn jewel_symmetries(
    d: &Diagram,
    dec: &Decomposition,
    jewel: usize,
    budget: usize,
) -> Result<Vec<(i8, i8)>> {
    let p = &dec.pieces[jewel];
    let base = p.crossings.len();
    let fill = filling(d, p)?;
    let filled = fill.diagram;
    let attach = fill.ports;
    let discs: Vec<Tangle> = (0..p.v())
        .map(|i| Tangle::from_disc(d.map(), &disc_of(dec, jewel, i), p.ports[i][0]))
        .collect();
    let locate = |x: Dart| {
        (0..attach.len()).find_map(|i| attach[i].iter().position(|&y| y == x).map(|j| (i, j)))
    };
    let mut found = Vec::new();
    for (deg, target) in [(Degree::Plus, filled.mirror()), (Degree::Minus, filled.clone())] {
        'iso: for iso in all_map_isomorphisms(&filled, &target, deg) {
            let phi = &iso.darts;
            if (0..base).any(|v| vertex_of(phi[4 * v]) >= base) {
                continue;
            }
            for i in 0..p.v() {
                let mut dst = None;
                let mut g = [0; 4];
                for j in 0..4 {
                    let Some((i2, j2)) = locate(phi[attach[i][j]]) else { continue 'iso };
                    if dst.is_some_and(|x| x != i2) {
                        continue 'iso;
                    }
                    dst = Some(i2);
                    g[j] = j2;
                }
                let i2 = dst.expect("four ports");
                let perm = [0, 1, 2, 3].map(|k| (0..4).find(|&j| g[j] == k).expect("bijective"));
                let s = deg.sign();
                let image = discs[i].rigid(perm, s < 0, s > 0);
                if !flype_equivalent_tangles(&image, &discs[i2], budget)? {
                    continue 'iso;
                }
            }
            let item = (deg.sign(), iso.knot_orientation_effect);
            if !found.contains(&item) {
                found.push(item);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// Evidence gathered at one fixed locus of a weight-negating automorphism.
pub fn locus_evidence(
    d: &Diagram,
    dec: &Decomposition,
    locus: FixedLocus,
    budget: usize,
) -> Result<Evidence> {
    let mut ev = Evidence {
        locus,
        configurations: Vec::new(),
        projection_types: Vec::new(),
        relations: None,
        symmetries: Vec::new(),
        jewel_symmetries: Vec::new(),
        plus: false,
        minus: false,
    };
    match locus {
        FixedLocus::CaseA { jewel } => {
            ev.jewel_symmetries = jewel_symmetries(d, dec, jewel, budget)?;
            ev.plus = ev.jewel_symmetries.iter().any(|s| s.1 == 1);
            ev.minus = ev.jewel_symmetries.iter().any(|s| s.1 == -1);
        }
        FixedLocus::CaseB { edge } | FixedLocus::CaseC { edge } => {
            let curve = &dec.family.curves[edge];
            let part = detect_partition(d, curve, budget)?;
            (ev.plus, ev.minus) = part.verdict();
            ev.projection_types = part.projection_types();
            ev.configurations = part.configurations;
            ev.relations = Some(part.relations);
            ev.symmetries = realized_symmetries(d, curve, budget)?;
        }
    }
    Ok(ev)
}

/// Distinct fixed loci of the weight-negating automorphisms of the
/// structure tree; automorphisms fixing a band are dropped.
pub fn candidate_loci(dec: &Decomposition) -> Vec<FixedLocus> {
    let tree = build_tree(dec);
    let mut loci = Vec::new();
    for a in mirror_automorphisms(&tree) {
        if let Ok(l) = fixed_locus(&tree, &a) {
            if !loci.contains(&l) {
                loci.push(l);
            }
        }
    }
    loci
}

/// Decides both achiralities from the decomposition: a fixed jewel is
/// tested on its filling, an invariant circle through the placement of the
/// tangles on either side.
pub fn decide_via_structure(d: &Diagram, budget: usize) -> Result<AchiralityVerdict> {
    require_knot(d)?;
    let dec = decompose(d)?;
    let evidence = candidate_loci(&dec)
        .into_iter()
        .map(|l| locus_evidence(d, &dec, l, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(AchiralityVerdict {
        plus: evidence.iter().any(|e| e.plus),
        minus: evidence.iter().any(|e| e.minus),
        method: Method::Structured,
        plus_conclusive: true,
        evidence,
        closure_size: None,
    })
}

/// A point of the projection fixed by a symmetry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FixedPoint {
    Crossing(usize),
    /// Midpoint of the edge carrying this (smaller) dart, which is reversed.
    Edge(Dart),
}

/// Fixed points of a degree +1 dart map: those on the projection, and the
/// number of faces mapped to themselves (each holds one more fixed point).
pub fn fixed_points(map: &Map4, phi: &[Dart]) -> (Vec<FixedPoint>, usize) {
    let mut on = Vec::new();
    for v in 0..map.vertex_count() {
        if vertex_of(phi[4 * v]) == v {
            on.push(FixedPoint::Crossing(v));
        }
    }
    for d in map.edges() {
        let t = map.twin(d);
        if phi[d] == t {
            on.push(FixedPoint::Edge(d));
        }
    }
    let faces = map.faces();
    let fixed_faces = faces
        .boundary
        .iter()
        .filter(|walk| faces.face_of[phi[walk[0]]] == faces.face_of[walk[0]])
        .count();
    (on, fixed_faces)
}

/// The sphere involution realizing -achirality on a minimal projection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaitWitness {
    /// The projection carrying the symmetry, reached from the input by flypes.
    pub projection: Diagram,
    /// Degree +1 map of the sphere carrying the projection onto its mirror.
    pub map: MapIso,
    /// Effect on the orientation of 3-space: always -1.
    pub s3_degree: i8,
    pub order: u32,
    pub fixed_points: Vec<FixedPoint>,
    /// Each edge (by its smaller dart) and the edge it is sent to.
    pub edge_map: Vec<(Dart, Dart)>,
    pub knot_orientation_effect: i8,
}

fn map_order(phi: &[Dart]) -> u32 {
    let mut cur: Vec<Dart> = phi.to_vec();
    for k in 1..=64 {
        if cur.iter().enumerate().all(|(d, &x)| d == x) {
            return k;
        }
        cur = cur.iter().map(|&x| phi[x]).collect();
    }
    0
}

fn witness_from(p: &Diagram, iso: MapIso) -> Option<TaitWitness> {
    if iso.knot_orientation_effect != -1 || map_order(&iso.darts) != 2 {
        return None;
    }
    let (fixed, faces) = fixed_points(p.map(), &iso.darts);
    if fixed.len() != 2 || faces != 0 {
        return None;
    }
    let map = p.map();
    let edge_map = map
        .edges()
        .map(|d| {
            let (a, b) = (iso.darts[d], map.twin(iso.darts[d]));
            (d, a.min(b))
        })
        .collect();
    Some(TaitWitness {
        projection: p.clone(),
        map: iso,
        s3_degree: -1,
        order: 2,
        fixed_points: fixed,
        edge_map,
        knot_orientation_effect: -1,
    })
}

/// Searches the minimal projections of the knot (the flype class of `d`)
/// for an order-2 rotation of the sphere carrying the projection onto its
/// mirror, reversing the knot and fixing two points of the projection.
/// Ties are broken by the smallest code, then the smallest dart map.
pub fn tait_witness(d: &Diagram, budget: usize) -> Result<TaitWitness> {
    if !decide_via_structure(d, budget)?.minus {
        return Err(Error::NotMinusAchiral);
    }
    let closure = flype_closure(d, budget)?;
    let mut candidates: Vec<(CanonicalCode, &Diagram)> =
        closure.diagrams.iter().map(|p| (p.canonical_code(Degree::Plus), p)).collect();
    candidates.sort_by(|a, b| a.0.cmp(&b.0));
    for (_, p) in candidates {
        let mirror = p.mirror();
        let mut found: Vec<TaitWitness> = all_map_isomorphisms(p, &mirror, Degree::Plus)
            .into_iter()
            .filter_map(|iso| witness_from(p, iso))
            .collect();
        found.sort_by(|a, b| a.map.darts.cmp(&b.map.darts));
        if let Some(w) = found.into_iter().next() {
            return Ok(w);
        }
    }
    Err(Error::WitnessSynthesisFailed(format!(
        "no involution among {} projections",
        closure.diagrams.len()
    )))
}

/// Outcome of checking a witness against the conditions of the conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionCheck {
    /// The projection is a valid minimal diagram with the input's crossing number.
    pub minimal: bool,
    /// The map is a degree +1 sphere map onto the mirror, so in 3-space it
    /// reverses orientation.
    pub reverses_s3: bool,
    /// The projection is carried onto itself (with crossings swapped).
    pub fixes_projection: bool,
    pub order_two: bool,
    pub two_fixed_points: bool,
    pub reverses_knot: bool,
}

impl InvolutionCheck {
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.minimal, "projection is not minimal"),
            (self.reverses_s3, "map does not reverse the orientation of 3-space"),
            (self.fixes_projection, "projection is not carried onto itself"),
            (self.order_two, "map is not of order 2"),
            (self.two_fixed_points, "map does not fix exactly two points of the projection"),
            (self.reverses_knot, "knot orientation is not reversed"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, why)| why)
        .collect()
    }
}

pub fn verify_involution(d: &Diagram, w: &TaitWitness) -> InvolutionCheck {
    let p = &w.projection;
    let map = p.map();
    let phi = &w.map.darts;
    let n = map.dart_count();
    let bijective = phi.len() == n && {
        let mut seen = vec![false; n];
        phi.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
    };
    let report = validate(p);
    let minimal = report.is_valid_knot() && p.crossing_count() == d.crossing_count();
    if !bijective {
        return InvolutionCheck {
            minimal,
            reverses_s3: false,
            fixes_projection: false,
            order_two: false,
            two_fixed_points: false,
            reverses_knot: false,
        };
    }
    let structure = (0..n).all(|x| {
        phi[map.twin(x)] == map.twin(phi[x]) && phi[crate::map::ccw(x)] == crate::map::ccw(phi[x])
    });
    let swaps = (0..n).all(|x| map.is_over(phi[x]) != map.is_over(x));
    let (fixed, faces) = fixed_points(map, phi);
    InvolutionCheck {
        minimal,
        reverses_s3: w.map.degree == Degree::Plus && w.s3_degree == -1 && swaps,
        fixes_projection: structure && swaps,
        order_two: map_order(phi) == 2,
        two_fixed_points: fixed.len() == 2 && faces == 0,
        reverses_knot: (0..n).all(|x| p.is_out(phi[x]) != p.is_out(x)),
    }
}
