//! Inductive path-splice constructions of connected regular graphs.
//!
//! Every construction starts from the complete graph on `k + 1` vertices.
//! A splice step finds a path with `k` edges, deletes a set of edges along
//! it and reconnects their endpoints to one or two fresh vertices. Degrees
//! of existing vertices never change.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum RegularityClass {
    /// `n >= k + 1` and `n * k` even: a connected k-regular graph exists.
    Regular,
    /// `n >= k + 1` and `n * k` odd: a connected nearly k-regular graph exists.
    NearlyRegular,
    /// `k >= 2` but `n < k + 1`.
    Infeasible,
    /// `k < 2`.
    UnsupportedDegree,
}

impl fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegularityClass::Regular => "regular",
            RegularityClass::NearlyRegular => "nearly-regular",
            RegularityClass::Infeasible => "infeasible",
            RegularityClass::UnsupportedDegree => "unsupported-degree",
        })
    }
}

/// The degree profile a finished graph must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// Every vertex has degree `k`.
    Regular,
    /// One vertex has degree `k - 1`, the rest degree `k`.
    NearlyRegular,
}

impl Target {
    pub fn class(self) -> RegularityClass {
        match self {
            Target::Regular => RegularityClass::Regular,
            Target::NearlyRegular => RegularityClass::NearlyRegular,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegularitySpec {
    pub n: usize,
    pub k: usize,
    pub class: RegularityClass,
}

impl RegularitySpec {
    /// The verification target, if the pair is constructible.
    pub fn target(&self) -> Option<Target> {
        match self.class {
            RegularityClass::Regular => Some(Target::Regular),
            RegularityClass::NearlyRegular => Some(Target::NearlyRegular),
            _ => None,
        }
    }

    /// Number of edges of the constructed graph.
    pub fn edge_count(&self) -> Option<usize> {
        self.target().map(|_| self.n * self.k / 2)
    }
}

pub fn classify(n: usize, k: usize) -> RegularitySpec {
    let class = if k < 2 {
        RegularityClass::UnsupportedDegree
    } else if n < k + 1 {
        RegularityClass::Infeasible
    } else if (n * k).is_multiple_of(2) {
        RegularityClass::Regular
    } else {
        RegularityClass::NearlyRegular
    };
    RegularitySpec { n, k, class }
}

/// `K_m`: all `m (m - 1) / 2` edges on `m >= 2` vertices.
pub fn complete_graph(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "complete graph needs at least 2 vertices, got {m}"
        )));
    }
    let edges = (1..=m).flat_map(|u| (u + 1..=m).map(move |v| (u, v)));
    Graph::from_edges(m, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum StepKind {
    /// Even `k`: one new vertex replaces `k / 2` disjoint path edges.
    EvenSplice,
    /// Odd `k`: two new vertices replace the first `k - 1` path edges.
    OddPairSplice,
    /// Odd `n * k`: one new vertex of degree `k - 1` replaces `(k - 1) / 2`
    /// disjoint path edges.
    NearSplice,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::EvenSplice => "even-splice",
            StepKind::OddPairSplice => "odd-pair-splice",
            StepKind::NearSplice => "near-splice",
        })
    }
}

/// One inductive step. Edges are stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TraceStep {
    pub kind: StepKind,
    pub path: Vec<usize>,
    pub new_vertices: Vec<usize>,
    pub removed: Vec<(usize, usize)>,
    pub added: Vec<(usize, usize)>,
}

impl TraceStep {
    /// Applies the step to `g`: appends the new vertices, then removes and
    /// adds edges. Fails if a new vertex label is not the next free label,
    /// a removed edge is absent or an added edge is already present.
    pub fn apply(&self, g: &mut Graph) -> Result<()> {
        for &v in &self.new_vertices {
            let got = g.add_vertex();
            if got != v {
                return Err(Error::InvalidInput(format!(
                    "trace step introduces vertex {v} but next free label is {got}"
                )));
            }
        }
        for &(u, v) in &self.removed {
            g.remove_edge(u, v)?;
        }
        for &(u, v) in &self.added {
            g.add_edge(u, v)?;
        }
        Ok(())
    }
}

/// Record of a build: the base complete graph and each inductive step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstructionTrace {
    pub n: usize,
    pub k: usize,
    /// Order of the starting complete graph, always `k + 1`.
    pub base: usize,
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    /// Rebuilds the final graph from the base complete graph.
    pub fn replay(&self) -> Result<Graph> {
        let mut g = complete_graph(self.base)?;
        for step in &self.steps {
            step.apply(&mut g)?;
        }
        if g.vertex_count() != self.n {
            return Err(Error::InvalidInput(format!(
                "trace replays to {} vertices, header says {}",
                g.vertex_count(),
                self.n
            )));
        }
        Ok(g)
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn require_regular_connected(g: &Graph, k: usize) -> Result<()> {
    let n = g.vertex_count();
    if n < k + 1 {
        return Err(Error::InvalidInput(format!(
            "input has {n} vertices, need at least k + 1 = {}",
            k + 1
        )));
    }
    if let Some((i, d)) = g.degrees().enumerate().find(|&(_, d)| d != k) {
        return Err(Error::InvalidInput(format!(
            "input is not {k}-regular: vertex {} has degree {d}",
            i + 1
        )));
    }
    if !g.is_connected() {
        return Err(Error::InvalidInput("input is not connected".into()));
    }
    Ok(())
}

fn require_even(k: usize) -> Result<()> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "k = {k} must be even and >= 2"
        )));
    }
    Ok(())
}

fn require_odd(k: usize) -> Result<()> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("k = {k} must be odd and >= 3")));
    }
    Ok(())
}

/// Removes the path edges at positions `positions` and joins both endpoints
/// of each to `hub`.
fn splice_onto(
    path: &Path,
    positions: impl Iterator<Item = usize>,
    hub: usize,
    removed: &mut Vec<(usize, usize)>,
    added: &mut Vec<(usize, usize)>,
) {
    for j in positions {
        let (a, b) = path.edge(j);
        removed.push(ordered(a, b));
        added.push(ordered(hub, a));
        added.push(ordered(hub, b));
    }
}

fn plan_even(g: &Graph, k: usize) -> Result<TraceStep> {
    let path = g.find_path_with_k_edges(k)?;
    let hub = g.vertex_count() + 1;
    let (mut removed, mut added) = (Vec::with_capacity(k / 2), Vec::with_capacity(k));
    splice_onto(&path, (1..k).step_by(2), hub, &mut removed, &mut added);
    Ok(TraceStep {
        kind: StepKind::EvenSplice,
        path: path.into_vertices(),
        new_vertices: alloc::vec![hub],
        removed,
        added,
    })
}

fn plan_odd_pair(g: &Graph, k: usize) -> Result<TraceStep> {
    let path = g.find_path_with_k_edges(k)?;
    let first = g.vertex_count() + 1;
    let second = first + 1;
    let (mut removed, mut added) = (Vec::with_capacity(k - 1), Vec::with_capacity(2 * k - 1));
    // Edges (q_j, q_{j+1}) for j = 1..k-1; (q_k, q_{k+1}) stays.
    for j in 1..k {
        let hub = if j % 2 == 1 { first } else { second };
        splice_onto(&path, core::iter::once(j), hub, &mut removed, &mut added);
    }
    added.push((first, second));
    Ok(TraceStep {
        kind: StepKind::OddPairSplice,
        path: path.into_vertices(),
        new_vertices: alloc::vec![first, second],
        removed,
        added,
    })
}

fn plan_near(g: &Graph, k: usize) -> Result<TraceStep> {
    let path = g.find_path_with_k_edges(k)?;
    let hub = g.vertex_count() + 1;
    let (mut removed, mut added) = (Vec::with_capacity(k / 2), Vec::with_capacity(k));
    splice_onto(&path, (1..k - 1).step_by(2), hub, &mut removed, &mut added);
    Ok(TraceStep {
        kind: StepKind::NearSplice,
        path: path.into_vertices(),
        new_vertices: alloc::vec![hub],
        removed,
        added,
    })
}

fn run(mut g: Graph, step: TraceStep) -> Result<(Graph, TraceStep)> {
    step.apply(&mut g)?;
    Ok((g, step))
}

/// Even `k`: grows a connected k-regular graph by one vertex.
///
/// Removes the path edges at odd positions `1, 3, ..., k - 1` and joins
/// their `k` endpoints to the new vertex `n + 1`.
pub fn step_even(g: Graph, k: usize) -> Result<(Graph, TraceStep)> {
    require_even(k)?;
    require_regular_connected(&g, k)?;
    let step = plan_even(&g, k)?;
    run(g, step)
}

/// Odd `k`, even `n`: grows a connected k-regular graph by two vertices.
///
/// With `Q = (q_1, ..., q_{k+1})`, edge `(q_j, q_{j+1})` for `j < k` is
/// removed and its endpoints are joined to `n + 1` (odd `j`) or `n + 2`
/// (even `j`). Finally `(n + 1, n + 2)` is added.
pub fn step_odd_pair(g: Graph, k: usize) -> Result<(Graph, TraceStep)> {
    require_odd(k)?;
    if !g.vertex_count().is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "odd-pair splice needs an even vertex count, got {}",
            g.vertex_count()
        )));
    }
    require_regular_connected(&g, k)?;
    let step = plan_odd_pair(&g, k)?;
    run(g, step)
}

/// Odd `k`: adds one vertex of degree `k - 1` to a connected k-regular graph.
///
/// Removes the path edges at odd positions `1, 3, ..., k - 2` and joins
/// their `k - 1` endpoints to the new vertex.
pub fn step_near(g: Graph, k: usize) -> Result<(Graph, TraceStep)> {
    require_odd(k)?;
    require_regular_connected(&g, k)?;
    let step = plan_near(&g, k)?;
    run(g, step)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Check degree preservation and connectivity after every step.
    pub step_checks: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { step_checks: true }
    }
}

/// Builds the connected k-regular (or nearly k-regular) graph on `n`
/// vertices with per-step checks enabled.
pub fn build(n: usize, k: usize) -> Result<(Graph, ConstructionTrace)> {
    build_with(n, k, BuildOptions::default())
}

pub fn build_with(n: usize, k: usize, options: BuildOptions) -> Result<(Graph, ConstructionTrace)> {
    let spec = classify(n, k);
    let target = match spec.class {
        RegularityClass::UnsupportedDegree => return Err(Error::UnsupportedDegree { k }),
        RegularityClass::Infeasible => return Err(Error::Infeasible { n, k }),
        RegularityClass::Regular => Target::Regular,
        RegularityClass::NearlyRegular => Target::NearlyRegular,
    };

    let base = k + 1;
    let mut g = complete_graph(base)?;
    let regular_n = if target == Target::Regular { n } else { n - 1 };
    let mut steps = Vec::new();

    let mut advance = |g: Graph, step: TraceStep| -> Result<Graph> {
        let before: Vec<usize> = if options.step_checks {
            g.degrees().collect()
        } else {
            Vec::new()
        };
        let (g, step) = run(g, step)?;
        if options.step_checks {
            check_step(&before, &g, &step)?;
        }
        steps.push(step);
        Ok(g)
    };

    if k.is_multiple_of(2) {
        while g.vertex_count() < regular_n {
            let step = plan_even(&g, k)?;
            g = advance(g, step)?;
        }
    } else {
        while g.vertex_count() < regular_n {
            let step = plan_odd_pair(&g, k)?;
            g = advance(g, step)?;
        }
    }
    if target == Target::NearlyRegular {
        let step = plan_near(&g, k)?;
        g = advance(g, step)?;
    }

    let report = verify_target(&g, k, target);
    if !report.passed() {
        return Err(Error::Verification(format!("{report}")));
    }
    Ok((g, ConstructionTrace { n, k, base, steps }))
}

fn check_step(before: &[usize], after: &Graph, step: &TraceStep) -> Result<()> {
    for (i, (&old, new)) in before.iter().zip(after.degrees()).enumerate() {
        if old != new {
            return Err(Error::Verification(format!(
                "{} step changed degree of vertex {} from {old} to {new}",
                step.kind,
                i + 1
            )));
        }
    }
    if !after.is_connected() {
        return Err(Error::Verification(format!(
            "graph disconnected after {} step adding {:?}",
            step.kind, step.new_vertices
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    DegreeProfile,
    Connectivity,
    Simplicity,
    EdgeCount,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::DegreeProfile => "degree-profile",
            CheckKind::Connectivity => "connectivity",
            CheckKind::Simplicity => "simplicity",
            CheckKind::EdgeCount => "edge-count",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, kind: CheckKind) -> Option<&Check> {
        self.checks.iter().find(|c| c.kind == kind)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let verdict = if c.passed { "pass" } else { "FAIL" };
            write!(f, "{}: {verdict} ({})", c.kind, c.detail)?;
        }
        Ok(())
    }
}

/// Checks degree profile, connectivity, simplicity and edge count of `g`
/// against `target`. Failures are report entries.
pub fn verify_target(g: &Graph, k: usize, target: Target) -> VerificationReport {
    let n = g.vertex_count();
    let mut checks = Vec::with_capacity(4);

    let off: Vec<(usize, usize)> = g
        .degrees()
        .enumerate()
        .filter(|&(_, d)| d != k)
        .map(|(i, d)| (i + 1, d))
        .collect();
    let (passed, detail) = match target {
        Target::Regular => match off.first() {
            None => (true, format!("all {n} degrees equal {k}")),
            Some(&(v, d)) => (
                false,
                format!(
                    "{} vertices off degree {k}; first: vertex {v} has {d}",
                    off.len()
                ),
            ),
        },
        Target::NearlyRegular => match off.as_slice() {
            [(v, d)] if *d + 1 == k => (true, format!("vertex {v} has degree {d}, rest {k}")),
            [] => (
                false,
                format!(
                    "all degrees equal {k}, expected one of {}",
                    k.wrapping_sub(1)
                ),
            ),
            _ => (
                false,
                format!(
                    "expected exactly one vertex of degree {}, found {} off degree {k}",
                    k.wrapping_sub(1),
                    off.len()
                ),
            ),
        },
    };
    checks.push(Check {
        kind: CheckKind::DegreeProfile,
        passed,
        detail,
    });

    let connected = g.is_connected();
    checks.push(Check {
        kind: CheckKind::Connectivity,
        passed: connected,
        detail: if connected {
            "connected".into()
        } else {
            "disconnected".into()
        },
    });

    let simple = g.check_simple();
    checks.push(Check {
        kind: CheckKind::Simplicity,
        passed: simple.is_ok(),
        detail: simple
            .err()
            .unwrap_or_else(|| "no loops or duplicate edges".into()),
    });

    let (twice_expected, label) = match target {
        Target::Regular => (n * k, "nk/2"),
        Target::NearlyRegular => ((n * k).wrapping_sub(1), "(nk-1)/2"),
    };
    let m = g.edge_count();
    checks.push(Check {
        kind: CheckKind::EdgeCount,
        passed: 2 * m == twice_expected,
        detail: format!("{m} edges, {label} = {}", twice_expected as f64 / 2.0),
    });

    VerificationReport { checks }
}
