//! The JSON report and how each section is computed.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use flypecheck::achirality::{
    achiral_oracle, decide_via_structure, tait_witness, verify_involution, AchiralityVerdict,
    FixedPoint, InvolutionCheck,
};
use flypecheck::canon::Degree;
use flypecheck::checkerboard::{checkerboard_graphs, graphs_equivalent, kauffman_check};
use flypecheck::decomposition::{canonical_family_seeded, decompose, PieceClass};
use flypecheck::diagram::{parse, validate, CodeFormat, Diagram, ValidationReport};
use flypecheck::error::Error;
use flypecheck::flype::{flype_closure, flype_orbits, flype_sites, random_flypes};
use flypecheck::tree::build_tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    Oracle,
    Structured,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Section {
    Diagram,
    Validation,
    Decomposition,
    Tree,
    Flypes,
    Achirality,
    Witness,
    Checkerboard,
}

impl Section {
    pub const ALL: [Section; 8] = [
        Section::Diagram,
        Section::Validation,
        Section::Decomposition,
        Section::Tree,
        Section::Flypes,
        Section::Achirality,
        Section::Witness,
        Section::Checkerboard,
    ];
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub format: CodeFormat,
    pub method: MethodChoice,
    pub budget: usize,
    pub seed: u64,
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramInfo {
    pub crossings: usize,
    pub components: usize,
    pub writhe: i64,
    pub pd: String,
    pub gauss: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceInfo {
    pub crossings: Vec<usize>,
    pub circles: Vec<usize>,
    pub outer: Option<usize>,
    pub class: PieceClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionInfo {
    pub family_size: usize,
    /// Whether the family built from `--seed`'s greedy order is the same.
    pub seeded_family_agrees: bool,
    pub pieces: Vec<PieceInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlypeInfo {
    pub efficient_sites: usize,
    pub orbits: Vec<Vec<usize>>,
    pub closure_size: usize,
    pub oriented_closure_size: usize,
    /// 20 random flypes drawn with `--seed`.
    pub random_walk_pd: String,
    pub random_walk_in_closure: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AchiralityInfo {
    pub oracle: Option<AchiralityVerdict>,
    pub structured: Option<AchiralityVerdict>,
    /// Present when both methods ran and the structured one is conclusive.
    pub agree: Option<bool>,
    pub plus: bool,
    pub minus: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessInfo {
    pub projection_pd: String,
    pub crossing_permutation: Vec<usize>,
    /// Edge (by its smaller dart) and its image edge.
    pub edge_map: Vec<(usize, usize)>,
    pub fixed_points: Vec<FixedPoint>,
    /// Degree of the map on the projection sphere.
    pub sphere_degree: i8,
    /// Degree of the induced map of 3-space.
    pub degree: i8,
    pub order: u32,
    pub knot_orientation_effect: i8,
    pub check: InvolutionCheck,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerboardInfo {
    pub g: String,
    pub g_star: String,
    pub plus_equivalent: bool,
    pub minus_equivalent: bool,
    /// Same tests with every edge sign required to be negated.
    pub plus_equivalent_signed: bool,
    pub minus_equivalent_signed: bool,
    pub kauffman_degree: Option<i8>,
    pub kauffman_projection_pd: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub name: Option<String>,
    pub diagram: Option<DiagramInfo>,
    pub validation: Option<ValidationReport>,
    pub decomposition: Option<DecompositionInfo>,
    pub structure_tree: Option<String>,
    pub flypes: Option<FlypeInfo>,
    pub achirality: Option<AchiralityInfo>,
    pub tait_witness: Option<WitnessInfo>,
    pub checkerboard: Option<CheckerboardInfo>,
    pub error: Option<ErrorInfo>,
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::MalformedCode(_) | Error::EmptyDiagram => 2,
        Error::ClosureBudgetExceeded(_) => 3,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> String {
    let s = format!("{e:?}");
    s.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

impl Report {
    fn new(input: &str, name: Option<String>) -> Report {
        Report {
            input: input.to_string(),
            name,
            diagram: None,
            validation: None,
            decomposition: None,
            structure_tree: None,
            flypes: None,
            achirality: None,
            tait_witness: None,
            checkerboard: None,
            error: None,
            timings_ms: None,
        }
    }

    fn fail(&mut self, e: &Error) -> i32 {
        let code = exit_code(e);
        self.error = Some(ErrorInfo { kind: error_kind(e), message: e.to_string(), exit_code: code });
        code
    }

    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, |e| e.exit_code)
    }
}

struct Timer {
    on: bool,
    times: BTreeMap<String, f64>,
}

impl Timer {
    fn time<T>(&mut self, key: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.on {
            self.times.insert(key.to_string(), start.elapsed().as_secs_f64() * 1e3);
        }
        out
    }
}

/// Parses `input` and fills the requested sections. Later sections are
/// skipped after the first error, which sets the exit code.
pub fn analyse(input: &str, name: Option<String>, sections: &[Section], opts: &Options) -> Report {
    let mut report = Report::new(input, name);
    let mut timer = Timer { on: opts.timings, times: BTreeMap::new() };
    let _ = fill(&mut report, &mut timer, input, sections, opts);
    if opts.timings {
        report.timings_ms = Some(timer.times);
    }
    report
}

fn fill(
    report: &mut Report,
    timer: &mut Timer,
    input: &str,
    sections: &[Section],
    opts: &Options,
) -> Result<(), i32> {
    let want = |s: Section| sections.contains(&s);
    let d = match timer.time("parse", || parse(input, opts.format)) {
        Ok(d) => d,
        Err(e) => return Err(report.fail(&e)),
    };
    if want(Section::Diagram) {
        report.diagram = Some(DiagramInfo {
            crossings: d.crossing_count(),
            components: d.component_count(),
            writhe: d.writhe(),
            pd: d.to_pd(),
            gauss: d.is_knot().then(|| d.to_gauss()),
        });
    }
    if sections.iter().all(|&s| s == Section::Diagram) {
        return Ok(());
    }
    let v = timer.time("validate", || validate(&d));
    report.validation = Some(v.clone());
    if !v.is_valid() || (!v.is_knot && !want(Section::Decomposition) && !want(Section::Tree)) {
        let why = if v.is_valid() {
            Error::NotAKnot(d.component_count())
        } else {
            Error::Precondition("diagram must be connected, prime, reduced and alternating".into())
        };
        return Err(report.fail(&why));
    }
    let step = |report: &mut Report, r: Result<(), Error>| r.map_err(|e| report.fail(&e));
    if want(Section::Decomposition) || want(Section::Tree) {
        let r = timer.time("decompose", || decomposition_section(report, &d, opts));
        step(report, r)?;
    }
    if !v.is_knot {
        if want(Section::Flypes) || want(Section::Achirality) || want(Section::Witness) {
            return Err(report.fail(&Error::NotAKnot(d.component_count())));
        }
        return Ok(());
    }
    if want(Section::Flypes) {
        let r = timer.time("flypes", || flype_section(report, &d, opts));
        step(report, r)?;
    }
    if want(Section::Achirality) || want(Section::Witness) {
        let r = timer.time("achirality", || achirality_section(report, &d, opts));
        step(report, r)?;
    }
    if want(Section::Witness) {
        let minus = report.achirality.as_ref().is_some_and(|a| a.minus);
        if minus || !want(Section::Achirality) {
            let r = timer.time("witness", || witness_section(report, &d, opts));
            step(report, r)?;
        }
    }
    if want(Section::Checkerboard) {
        let r = timer.time("checkerboard", || checkerboard_section(report, &d, opts));
        step(report, r)?;
    }
    Ok(())
}

fn decomposition_section(report: &mut Report, d: &Diagram, opts: &Options) -> Result<(), Error> {
    let dec = decompose(d)?;
    let seeded = canonical_family_seeded(d, opts.seed);
    let mut a: Vec<_> = dec.family.curves.iter().map(|c| c.inside.clone()).collect();
    let mut b: Vec<_> = seeded.curves.iter().map(|c| c.inside.clone()).collect();
    a.sort();
    b.sort();
    report.decomposition = Some(DecompositionInfo {
        family_size: dec.family.len(),
        seeded_family_agrees: a == b,
        pieces: dec
            .pieces
            .iter()
            .zip(&dec.classes)
            .map(|(p, c)| PieceInfo {
                crossings: p.crossings.clone(),
                circles: p.circles.clone(),
                outer: p.outer,
                class: c.clone(),
            })
            .collect(),
    });
    report.structure_tree = Some(build_tree(&dec).term());
    Ok(())
}

fn flype_section(report: &mut Report, d: &Diagram, opts: &Options) -> Result<(), Error> {
    let closure = flype_closure(d, opts.budget)?;
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let walked = random_flypes(d, 20, &mut rng);
    report.flypes = Some(FlypeInfo {
        efficient_sites: flype_sites(d).len(),
        orbits: flype_orbits(d)?,
        closure_size: closure.len(),
        oriented_closure_size: closure.oriented_len(),
        random_walk_pd: walked.to_pd(),
        random_walk_in_closure: closure.contains(&walked),
    });
    Ok(())
}

fn achirality_section(report: &mut Report, d: &Diagram, opts: &Options) -> Result<(), Error> {
    let oracle = match opts.method {
        MethodChoice::Structured => None,
        _ => Some(achiral_oracle(d, opts.budget)?),
    };
    let structured = match opts.method {
        MethodChoice::Oracle => None,
        _ => Some(decide_via_structure(d, opts.budget)?),
    };
    let agree = match (&oracle, &structured) {
        (Some(o), Some(s)) => Some(
            o.minus == s.minus && (!s.plus_conclusive || o.plus == s.plus),
        ),
        _ => None,
    };
    let main = oracle.as_ref().or(structured.as_ref()).expect("one method runs");
    report.achirality = Some(AchiralityInfo {
        plus: main.plus,
        minus: main.minus,
        oracle,
        structured,
        agree,
    });
    Ok(())
}

fn witness_section(report: &mut Report, d: &Diagram, opts: &Options) -> Result<(), Error> {
    let w = tait_witness(d, opts.budget)?;
    let check = verify_involution(d, &w);
    report.tait_witness = Some(WitnessInfo {
        projection_pd: w.projection.to_pd(),
        crossing_permutation: w.map.crossings.clone(),
        edge_map: w.edge_map.clone(),
        fixed_points: w.fixed_points.clone(),
        sphere_degree: w.map.degree.sign(),
        degree: w.s3_degree,
        order: w.order,
        knot_orientation_effect: w.knot_orientation_effect,
        check,
        verified: check.passed(),
    });
    Ok(())
}

fn checkerboard_section(report: &mut Report, d: &Diagram, opts: &Options) -> Result<(), Error> {
    let (g, gs) = checkerboard_graphs(d);
    let k = kauffman_check(d, opts.budget)?;
    report.checkerboard = Some(CheckerboardInfo {
        g: g.to_string(),
        g_star: gs.to_string(),
        plus_equivalent: graphs_equivalent(&g, &gs, Degree::Plus, false),
        minus_equivalent: graphs_equivalent(&g, &gs, Degree::Minus, false),
        plus_equivalent_signed: graphs_equivalent(&g, &gs, Degree::Plus, true),
        minus_equivalent_signed: graphs_equivalent(&g, &gs, Degree::Minus, true),
        kauffman_degree: k.degree,
        kauffman_projection_pd: k.found_projection.map(|p| p.to_pd()),
    });
    Ok(())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Plain-text rendering of the sections present.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    if let Some(name) = &r.name {
        let _ = writeln!(s, "knot: {name}");
    }
    if let Some(d) = &r.diagram {
        let _ = writeln!(s, "crossings: {}  components: {}  writhe: {}", d.crossings, d.components, d.writhe);
        let _ = writeln!(s, "pd: {}", d.pd);
        if let Some(g) = &d.gauss {
            let _ = writeln!(s, "gauss: {g}");
        }
    }
    if let Some(v) = &r.validation {
        let _ = writeln!(
            s,
            "connected: {}  prime: {}  reduced: {}  alternating: {}  knot: {}",
            yes(v.connected),
            yes(v.prime),
            yes(v.reduced),
            yes(v.alternating),
            yes(v.is_knot)
        );
        for f in &v.failures {
            let _ = writeln!(s, "  failure: {f:?}");
        }
    }
    if let Some(dec) = &r.decomposition {
        let _ = writeln!(s, "canonical family: {} circles", dec.family_size);
        for (i, p) in dec.pieces.iter().enumerate() {
            let class = match &p.class {
                PieceClass::Singleton => "singleton".to_string(),
                PieceClass::Jewel => "jewel".to_string(),
                PieceClass::TwistedBand { weights, weight, v } => {
                    format!("band v={v} weight={weight} weights={weights:?}")
                }
            };
            let _ = writeln!(s, "  piece {i}: {class}, crossings {:?}", p.crossings);
        }
    }
    if let Some(t) = &r.structure_tree {
        let _ = writeln!(s, "tree: {t}");
    }
    if let Some(f) = &r.flypes {
        let _ = writeln!(
            s,
            "flype sites: {}  orbits: {:?}  closure: {} projections ({} oriented)",
            f.efficient_sites, f.orbits, f.closure_size, f.oriented_closure_size
        );
        let _ = writeln!(s, "random walk: {} (in closure: {})", f.random_walk_pd, yes(f.random_walk_in_closure));
    }
    if let Some(a) = &r.achirality {
        for v in [&a.oracle, &a.structured].into_iter().flatten() {
            let _ = writeln!(s, "{:?}: plus={} minus={}", v.method, v.plus, v.minus);
            for e in &v.evidence {
                let _ = writeln!(
                    s,
                    "  case {}: plus={} minus={} types={:?}",
                    e.locus.name(),
                    e.plus,
                    e.minus,
                    e.projection_types
                );
            }
        }
        if let Some(agree) = a.agree {
            let _ = writeln!(s, "methods agree: {}", yes(agree));
        }
    }
    if let Some(w) = &r.tait_witness {
        let _ = writeln!(
            s,
            "witness: order {}, degree {}, fixed points {:?}, verified: {}",
            w.order,
            w.degree,
            w.fixed_points,
            yes(w.verified)
        );
        let _ = writeln!(s, "  projection: {}", w.projection_pd);
        let _ = writeln!(s, "  crossings: {:?}", w.crossing_permutation);
    }
    if let Some(c) = &r.checkerboard {
        let _ = write!(s, "G:\n{}G*:\n{}", c.g, c.g_star);
        let _ = writeln!(
            s,
            "G ~+ G*: {}  G ~- G*: {}  kauffman: {}",
            yes(c.plus_equivalent),
            yes(c.minus_equivalent),
            c.kauffman_degree.map_or("none".to_string(), |d| format!("{d:+}"))
        );
    }
    if let Some(e) = &r.error {
        let _ = writeln!(s, "error: {}", e.message);
    }
    s
}
