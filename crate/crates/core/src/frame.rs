//! The partition of a projection along an invariant Haseman circle and the
//! symmetries of its frame (two discs joined by four strands).
//!
//! Conventions. Let `c[0..4]` be the inner darts of the circle, counterclockwise
//! around the inside; point `p_j` is where `c[j]` crosses the circle. The left
//! tangle `F` is the inside with end `j` at `p_j`; the right tangle is the
//! outside with end `k` at `p_{3-k}`, so left end `j` meets right end `3 - j`
//! and strands 1 to 4 leave the left disc at NW, NE, SE, SW.
//!
//! On the sphere the circle is the equator, the inside the northern
//! hemisphere, and `p_j` sits at longitude `45 + 90 j` degrees.

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::flype::{flype_equivalent_tangles, Connection, Tangle, TangleOp};
use crate::haseman::HasemanCurve;
use crate::map::Map4;

/// Placement of the right tangle relative to the left one: the right tangle
/// is flype equivalent to the mirror of `h(F)` for the listed rigid motion `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Configuration {
    /// `h` = identity.
    I,
    /// Quarter turn.
    II,
    /// Half turn in the plane.
    III,
    /// Three quarter turns.
    IV,
    /// Half turn about the horizontal axis.
    V,
    /// Quarter turn, then half turn about the horizontal axis.
    VI,
    /// Half turn about the vertical axis.
    VII,
    /// Quarter turn, then half turn about the vertical axis.
    VIII,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ProjectionType {
    TypeI,
    TypeII,
}

impl Configuration {
    pub const ALL: [Configuration; 8] = [
        Configuration::I,
        Configuration::II,
        Configuration::III,
        Configuration::IV,
        Configuration::V,
        Configuration::VI,
        Configuration::VII,
        Configuration::VIII,
    ];

    pub fn roman(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"][self as usize]
    }

    /// The placements keeping connection paths unchanged; on a knot they
    /// cannot occur.
    pub fn keeps_paths(self) -> bool {
        matches!(self, Configuration::I | Configuration::III | Configuration::V | Configuration::VII)
    }

    /// Partner under a half turn of the whole frame about an in-plane axis.
    pub fn partner(self) -> Configuration {
        match self {
            Configuration::II => Configuration::IV,
            Configuration::IV => Configuration::II,
            Configuration::VI => Configuration::VIII,
            Configuration::VIII => Configuration::VI,
            c => c,
        }
    }

    pub fn projection_type(self) -> Option<ProjectionType> {
        match self {
            Configuration::II | Configuration::IV => Some(ProjectionType::TypeII),
            Configuration::VI | Configuration::VIII => Some(ProjectionType::TypeI),
            _ => None,
        }
    }

    fn apply(self, f: &Tangle) -> Tangle {
        let q = |t: &Tangle, n: usize| (0..n).fold(t.clone(), |t, _| t.quarter_turn());
        match self {
            Configuration::I => f.clone(),
            Configuration::II => q(f, 1),
            Configuration::III => q(f, 2),
            Configuration::IV => q(f, 3),
            Configuration::V => f.transform(TangleOp::H),
            Configuration::VI => q(f, 1).transform(TangleOp::H),
            Configuration::VII => f.transform(TangleOp::V),
            Configuration::VIII => q(f, 1).transform(TangleOp::V),
        }
    }
}

/// Which of `F ~ F*`, `F ~ F^h`, `F ~ F^v` hold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangleRelations {
    pub star: bool,
    pub h: bool,
    pub v: bool,
}

impl TangleRelations {
    pub fn of(f: &Tangle, budget: usize) -> Result<TangleRelations> {
        Ok(TangleRelations {
            star: flype_equivalent_tangles(f, &f.transform(TangleOp::Star), budget)?,
            h: flype_equivalent_tangles(f, &f.transform(TangleOp::H), budget)?,
            v: flype_equivalent_tangles(f, &f.transform(TangleOp::V), budget)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relevance {
    Impossible,
    Minus,
    Plus,
    NotPertinent,
    NotSuitable,
}

/// The eight orthogonal symmetries of the frame on the globe. `L1`..`L4` lie
/// in the equatorial plane through longitudes 135, 45, 0 and 90 degrees,
/// `L5` is the polar axis; `R` means composed with the equatorial reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FrameSymmetry {
    Identity,
    HalfTurnL1,
    HalfTurnL2,
    ReflectedQuarterL5,
    ReflectedMinusQuarterL5,
    ReflectedHalfL3,
    ReflectedHalfL4,
    HalfTurnL5,
}

impl FrameSymmetry {
    pub const ALL: [FrameSymmetry; 8] = [
        FrameSymmetry::Identity,
        FrameSymmetry::HalfTurnL1,
        FrameSymmetry::HalfTurnL2,
        FrameSymmetry::ReflectedQuarterL5,
        FrameSymmetry::ReflectedMinusQuarterL5,
        FrameSymmetry::ReflectedHalfL3,
        FrameSymmetry::ReflectedHalfL4,
        FrameSymmetry::HalfTurnL5,
    ];

    pub fn roman(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"][self as usize]
    }

    pub fn symbol(self) -> &'static str {
        match self {
            FrameSymmetry::Identity => "id",
            FrameSymmetry::HalfTurnL1 => "r^L1_2",
            FrameSymmetry::HalfTurnL2 => "r^L2_2",
            FrameSymmetry::ReflectedQuarterL5 => "R^L5_4",
            FrameSymmetry::ReflectedMinusQuarterL5 => "R^L5_-4",
            FrameSymmetry::ReflectedHalfL3 => "R^L3_2",
            FrameSymmetry::ReflectedHalfL4 => "R^L4_2",
            FrameSymmetry::HalfTurnL5 => "r^L5_2",
        }
    }

    /// Degree on the sphere, equal to the effect on the orientation of 3-space.
    pub fn degree(self) -> i8 {
        match self {
            FrameSymmetry::Identity
            | FrameSymmetry::HalfTurnL1
            | FrameSymmetry::HalfTurnL2
            | FrameSymmetry::HalfTurnL5 => 1,
            _ => -1,
        }
    }

    pub fn preserves_s3(self) -> bool {
        self.degree() == 1
    }

    pub fn exchanges_discs(self) -> bool {
        matches!(
            self,
            FrameSymmetry::HalfTurnL1
                | FrameSymmetry::HalfTurnL2
                | FrameSymmetry::ReflectedQuarterL5
                | FrameSymmetry::ReflectedMinusQuarterL5
        )
    }

    /// Image of the marked point `p_j`.
    pub fn point_map(self) -> [usize; 4] {
        match self {
            FrameSymmetry::Identity => [0, 1, 2, 3],
            FrameSymmetry::HalfTurnL1 => [2, 1, 0, 3],
            FrameSymmetry::HalfTurnL2 => [0, 3, 2, 1],
            FrameSymmetry::ReflectedQuarterL5 => [1, 2, 3, 0],
            FrameSymmetry::ReflectedMinusQuarterL5 => [3, 0, 1, 2],
            FrameSymmetry::ReflectedHalfL3 => [3, 2, 1, 0],
            FrameSymmetry::ReflectedHalfL4 => [1, 0, 3, 2],
            FrameSymmetry::HalfTurnL5 => [2, 3, 0, 1],
        }
    }

    pub fn relevance(self) -> Relevance {
        match self {
            FrameSymmetry::Identity => Relevance::Impossible,
            FrameSymmetry::HalfTurnL1 | FrameSymmetry::HalfTurnL2 => Relevance::Minus,
            FrameSymmetry::ReflectedQuarterL5 | FrameSymmetry::ReflectedMinusQuarterL5 => {
                Relevance::Plus
            }
            FrameSymmetry::ReflectedHalfL3 | FrameSymmetry::ReflectedHalfL4 => {
                Relevance::NotPertinent
            }
            FrameSymmetry::HalfTurnL5 => Relevance::NotSuitable,
        }
    }
}

/// A frame symmetry carrying the projection to its mirror image up to flypes
/// on both sides, with its effect on the knot orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RealizedSymmetry {
    pub symmetry: FrameSymmetry,
    /// +1 keeps the knot orientation, -1 reverses it.
    pub orientation_effect: i8,
}

/// The two tangles cut out by a Haseman circle, in frame position.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Partition {
    pub circle: HasemanCurve,
    /// `F`, the inside.
    pub left: Tangle,
    pub right: Tangle,
    pub connections: (Connection, Connection),
    /// Per strand 1..4: true when the knot runs from left to right.
    pub arrows: [bool; 4],
    /// Placements of the mirror of `F` matching the right tangle.
    pub configurations: Vec<Configuration>,
    pub relations: TangleRelations,
}

impl Partition {
    /// Some two consecutive strands point the same way.
    pub fn parallel(&self) -> bool {
        self.arrows.windows(2).any(|w| w[0] == w[1])
    }

    pub fn projection_types(&self) -> Vec<ProjectionType> {
        let mut t: Vec<ProjectionType> =
            self.configurations.iter().filter_map(|c| c.projection_type()).collect();
        t.sort();
        t.dedup();
        t
    }

    /// Achirality read off the placement of the tangles: type I is
    /// +achiral iff `F ~ F*` and -achiral iff `F ~ F^h` or `F ~ F^v`; type II
    /// is always -achiral and +achiral iff `F ~ F^h ~ F^v`.
    pub fn verdict(&self) -> (bool, bool) {
        let r = self.relations;
        self.projection_types().iter().fold((false, false), |(p, m), t| match t {
            ProjectionType::TypeI => (p || r.star, m || r.h || r.v),
            ProjectionType::TypeII => (p || (r.h && r.v), true),
        })
    }
}

/// Checks the constraints every knot partition obeys once a placement is
/// known: no path-preserving placement, paths `{H, V}`, antiparallel arrows.
pub fn check_frame(
    connections: (Connection, Connection),
    arrows: [bool; 4],
    configurations: &[Configuration],
) -> Result<()> {
    if configurations.is_empty() {
        return Ok(());
    }
    if let Some(c) = configurations.iter().find(|c| c.keeps_paths()) {
        return Err(Error::InconsistentPartition(format!(
            "configuration ({}) keeps the connection paths",
            c.roman()
        )));
    }
    let (a, b) = connections;
    if a == Connection::X || b == Connection::X || a == b {
        return Err(Error::InconsistentPartition(format!("connection paths {a:?} and {b:?}")));
    }
    if arrows.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InconsistentPartition("parallel strand orientation".into()));
    }
    Ok(())
}

fn outside_of(curve: &HasemanCurve) -> Vec<bool> {
    curve.inside.iter().map(|b| !b).collect()
}

fn frame_tangles(map: &Map4, curve: &HasemanCurve) -> (Tangle, Tangle) {
    let c = curve.darts;
    let outside = outside_of(curve);
    debug_assert!({
        let cyc = map.boundary_cycle(&outside);
        let want: Vec<usize> = (0..4).map(|k| map.twin(c[3 - k])).collect();
        (0..4).any(|r| (0..4).all(|k| cyc[(r + k) % 4] == want[k]))
    });
    let left = Tangle::from_disc(map, &curve.inside, c[0]);
    let right = Tangle::from_disc(map, &outside, map.twin(c[3]));
    (left, right)
}

/// Splits `d` along `curve` and locates the mirror of the left tangle on
/// the right. Fails when a placement is found that no knot can have.
pub fn detect_partition(d: &Diagram, curve: &HasemanCurve, budget: usize) -> Result<Partition> {
    let (left, right) = frame_tangles(d.map(), curve);
    let c = curve.darts;
    let arrows = [c[0], c[3], c[2], c[1]].map(|x| d.is_out(x));
    let connections = (left.connection(), right.connection());
    let mut configurations = Vec::new();
    for cfg in Configuration::ALL {
        let image = cfg.apply(&left).transform(TangleOp::Mirror);
        if flype_equivalent_tangles(&image, &right, budget)? {
            configurations.push(cfg);
        }
    }
    check_frame(connections, arrows, &configurations)?;
    let relations = TangleRelations::of(&left, budget)?;
    Ok(Partition { circle: curve.clone(), left, right, connections, arrows, configurations, relations })
}

/// Tangle whose end `k` comes from the end of `t` carried to it.
fn carried(t: &Tangle, src: [usize; 4], dst: [usize; 4], g: [usize; 4], degree: i8) -> Tangle {
    let perm = [0, 1, 2, 3].map(|k| {
        (0..4).find(|&j| g[src[j]] == dst[k]).expect("point maps are bijective")
    });
    t.rigid(perm, degree < 0, degree > 0)
}

/// Frame symmetries that carry the projection to its mirror image after
/// flypes fixing the circle, applied directly to the two sides.
pub fn realized_symmetries(
    d: &Diagram,
    curve: &HasemanCurve,
    budget: usize,
) -> Result<Vec<RealizedSymmetry>> {
    let (left, right) = frame_tangles(d.map(), curve);
    let pos_left = [0, 1, 2, 3];
    let pos_right = [3, 2, 1, 0];
    let c = curve.darts;
    let mut out = Vec::new();
    for s in FrameSymmetry::ALL {
        let g = s.point_map();
        let deg = s.degree();
        let ok = if s.exchanges_discs() {
            flype_equivalent_tangles(&carried(&left, pos_left, pos_right, g, deg), &right, budget)?
                && flype_equivalent_tangles(
                    &carried(&right, pos_right, pos_left, g, deg),
                    &left,
                    budget,
                )?
        } else {
            flype_equivalent_tangles(&carried(&left, pos_left, pos_left, g, deg), &left, budget)?
                && flype_equivalent_tangles(
                    &carried(&right, pos_right, pos_right, g, deg),
                    &right,
                    budget,
                )?
        };
        if !ok {
            continue;
        }
        // inner dart c[j] goes to the dart of the edge at p_g(j) on the far side
        let kept = (0..4).map(|j| {
            let same_side = d.is_out(c[g[j]]);
            let image = if s.exchanges_discs() { !same_side } else { same_side };
            image == d.is_out(c[j])
        });
        let kept: Vec<bool> = kept.collect();
        let orientation_effect = if kept.iter().all(|&k| k) {
            1
        } else if kept.iter().all(|&k| !k) {
            -1
        } else {
            0
        };
        out.push(RealizedSymmetry { symmetry: s, orientation_effect });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::flype::DEFAULT_BUDGET;
    use crate::haseman::enumerate_haseman;

    const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    fn middle_circle(d: &Diagram) -> HasemanCurve {
        enumerate_haseman(d).into_iter().find(|c| c.inside_count() == 2).unwrap()
    }

    #[test]
    fn figure_eight_is_type_two() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let p = detect_partition(&d, &middle_circle(&d), DEFAULT_BUDGET).unwrap();
        let mut paths = [p.connections.0, p.connections.1];
        paths.sort_by_key(|c| *c as u8);
        assert_eq!(paths, [Connection::H, Connection::V]);
        assert!(p.projection_types().contains(&ProjectionType::TypeII));
        assert!(!p.parallel());
        assert_eq!(p.verdict(), (true, true));
    }

    #[test]
    fn figure_eight_realized_symmetries_are_relevant() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let r = realized_symmetries(&d, &middle_circle(&d), DEFAULT_BUDGET).unwrap();
        assert!(!r.is_empty());
        for s in &r {
            match s.symmetry.relevance() {
                Relevance::Minus => assert_eq!(s.orientation_effect, -1),
                Relevance::Plus => assert_eq!(s.orientation_effect, 1),
                other => panic!("{other:?} realized"),
            }
        }
        assert!(r.iter().any(|s| s.orientation_effect == -1));
        assert!(r.iter().any(|s| s.orientation_effect == 1));
    }

    #[test]
    fn forbidden_frames_rejected() {
        let alt = [true, false, true, false];
        assert!(check_frame((Connection::H, Connection::V), alt, &[Configuration::II]).is_ok());
        assert!(matches!(
            check_frame((Connection::X, Connection::X), alt, &[Configuration::II]),
            Err(Error::InconsistentPartition(_))
        ));
        assert!(matches!(
            check_frame((Connection::H, Connection::V), [true, true, false, false], &[Configuration::VI]),
            Err(Error::InconsistentPartition(_))
        ));
        assert!(matches!(
            check_frame((Connection::H, Connection::V), alt, &[Configuration::III]),
            Err(Error::InconsistentPartition(_))
        ));
        assert!(check_frame((Connection::H, Connection::X), [true, true, false, false], &[]).is_ok());
    }

    #[test]
    fn configuration_pairs() {
        for c in Configuration::ALL {
            assert_eq!(c.partner().partner(), c);
            assert_eq!(c.partner().projection_type(), c.projection_type());
            assert_eq!(c.keeps_paths(), c.projection_type().is_none());
        }
    }
}
