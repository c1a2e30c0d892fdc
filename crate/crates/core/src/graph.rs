//! Finite directed graphs: line points, their matrix blocks, and the
//! boundary-path groupoid of an acyclic graph.
//!
//! A path is a sequence of edges `e₁e₂…` with `r(eᵢ) = s(eᵢ₊₁)`; it is written
//! as the edge ids joined by `"."`, and the trivial path at `w` as `"w"`.
//! In a finite graph without infinite emitters the boundary paths are the
//! infinite paths and the finite paths ending at sinks.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::{FiniteGroupoid, RawGroupoid, MAX_ELEMENTS};

/// On-disk shape: `{"vertices": [...], "edges": [[id, source, range], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub source: usize,
    pub range: usize,
}

/// A validated finite directed graph; loops and parallel edges allowed.
#[derive(Clone, Debug)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
    on_cycle: Vec<bool>,
}

const RESERVED: [char; 4] = ['.', '(', ')', ','];

fn check_name(kind: &str, name: &str) -> Result<()> {
    if name.is_empty() || name.contains(RESERVED) {
        return Err(Error::InvalidGraph(format!(
            "{kind} id {name:?} must be nonempty and avoid '.', '(', ')' and ','"
        )));
    }
    Ok(())
}

impl DirectedGraph {
    pub fn from_raw(raw: &RawGraph) -> Result<Self> {
        let mut index = IndexMap::new();
        for v in &raw.vertices {
            check_name("vertex", v)?;
            if index.insert(v.clone(), index.len()).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex {v:?}")));
            }
        }
        let mut seen = BTreeSet::new();
        let mut edges = Vec::with_capacity(raw.edges.len());
        for [id, s, r] in &raw.edges {
            check_name("edge", id)?;
            if index.contains_key(id) || !seen.insert(id.clone()) {
                return Err(Error::InvalidGraph(format!("edge id {id:?} is not unique")));
            }
            let look = |v: &String| {
                index
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::InvalidGraph(format!("edge {id:?} uses unknown vertex {v:?}")))
            };
            edges.push(Edge {
                id: id.clone(),
                source: look(s)?,
                range: look(r)?,
            });
        }
        Ok(Self::build(raw.vertices.clone(), edges))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_raw(&serde_json::from_str(text)?)
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    [
                        e.id.clone(),
                        self.vertices[e.source].clone(),
                        self.vertices[e.range].clone(),
                    ]
                })
                .collect(),
        }
    }

    fn build(vertices: Vec<String>, edges: Vec<Edge>) -> Self {
        let n = vertices.len();
        let mut out = vec![Vec::new(); n];
        let mut incoming = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out[e.source].push(i);
            incoming[e.range].push(i);
        }
        let mut g = DirectedGraph {
            vertices,
            edges,
            out,
            incoming,
            on_cycle: vec![false; n],
        };
        g.on_cycle = (0..n)
            .map(|v| {
                let succ: Vec<usize> = g.out[v].iter().map(|&e| g.edges[e].range).collect();
                g.reach(succ, true).contains(&v)
            })
            .collect();
        g
    }

    /// Vertices reachable from `start`, along edges or against them.
    fn reach(&self, start: Vec<usize>, forward: bool) -> BTreeSet<usize> {
        let step = |v: usize| -> Vec<usize> {
            if forward {
                self.out[v].iter().map(|&e| self.edges[e].range).collect()
            } else {
                self.incoming[v].iter().map(|&e| self.edges[e].source).collect()
            }
        };
        let mut seen: BTreeSet<usize> = start.iter().copied().collect();
        let mut queue: VecDeque<usize> = start.into();
        while let Some(v) = queue.pop_front() {
            for w in step(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Vertices reachable from `v` by a path of length ≥ 0.
    pub fn descendants(&self, v: usize) -> BTreeSet<usize> {
        self.reach(vec![v], true)
    }

    /// Vertices from which `v` is reachable by a path of length ≥ 0.
    pub fn ancestors(&self, v: usize) -> BTreeSet<usize> {
        self.reach(vec![v], false)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v].is_empty()
    }

    /// Lies on a cycle (a loop counts).
    pub fn on_cycle(&self, v: usize) -> bool {
        self.on_cycle[v]
    }

    pub fn is_acyclic(&self) -> bool {
        !self.on_cycle.iter().any(|&c| c)
    }
}

/// Why a vertex is not a line point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinePointFailure {
    /// A reachable vertex emits two or more edges, so several boundary
    /// paths start at `v`.
    Branches { vertex: String },
    /// The unique boundary path runs into a cycle and is eventually
    /// periodic (isotropy ℤ).
    ReachesCycle { vertex: String },
}

impl fmt::Display for LinePointFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinePointFailure::Branches { vertex } => write!(f, "reachable vertex {vertex} emits more than one edge"),
            LinePointFailure::ReachesCycle { vertex } => write!(f, "reaches vertex {vertex} on a cycle"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexStatus {
    /// The unique boundary path from the vertex and the sink it ends at.
    LinePoint {
        path: String,
        sink: usize,
    },
    NotLinePoint(LinePointFailure),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrbitSize {
    Finite(u128),
    Infinite,
}

impl fmt::Display for OrbitSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitSize::Finite(n) => write!(f, "{n}"),
            OrbitSize::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinePointReport {
    /// Line points in declaration order.
    pub line_points: Vec<usize>,
    /// Status of every vertex, indexed like the graph's vertices.
    pub status: Vec<VertexStatus>,
    /// Orbit size of each line point's boundary path, parallel to `line_points`.
    pub orbit_sizes: Vec<OrbitSize>,
}

fn path_name(g: &DirectedGraph, edges: &[usize], end: usize) -> String {
    if edges.is_empty() {
        g.vertices[end].clone()
    } else {
        edges
            .iter()
            .map(|&e| g.edges[e].id.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn vertex_status(g: &DirectedGraph, v: usize) -> VertexStatus {
    let reach = g.descendants(v);
    if let Some(&w) = reach.iter().find(|&&w| g.out_degree(w) > 1) {
        return VertexStatus::NotLinePoint(LinePointFailure::Branches {
            vertex: g.vertices[w].clone(),
        });
    }
    if let Some(&w) = reach.iter().find(|&&w| g.on_cycle(w)) {
        return VertexStatus::NotLinePoint(LinePointFailure::ReachesCycle {
            vertex: g.vertices[w].clone(),
        });
    }
    let mut edges = Vec::new();
    let mut at = v;
    while let Some(&e) = g.out[at].first() {
        edges.push(e);
        at = g.edges[e].range;
    }
    VertexStatus::LinePoint {
        path: path_name(g, &edges, at),
        sink: at,
    }
}

pub fn line_points(g: &DirectedGraph) -> LinePointReport {
    let status: Vec<VertexStatus> = (0..g.vertices.len()).map(|v| vertex_status(g, v)).collect();
    let mut line_points = Vec::new();
    let mut orbit_sizes = Vec::new();
    for (v, s) in status.iter().enumerate() {
        if let VertexStatus::LinePoint { sink, .. } = s {
            line_points.push(v);
            orbit_sizes.push(sink_class_size(g, *sink));
        }
    }
    LinePointReport {
        line_points,
        status,
        orbit_sizes,
    }
}

/// Number of finite paths ending at the sink `w`, or infinite when a cycle
/// reaches it. Counts beyond `u128` saturate.
fn sink_class_size(g: &DirectedGraph, w: usize) -> OrbitSize {
    let anc = g.ancestors(w);
    if anc.iter().any(|&u| g.on_cycle(u)) {
        return OrbitSize::Infinite;
    }
    // paths[u] = number of paths from u to w; ancestors of w form a DAG.
    let mut paths = vec![0u128; g.vertices.len()];
    paths[w] = 1;
    let order = topological_to(g, w, &anc);
    for &u in &order {
        if u == w {
            continue;
        }
        paths[u] = g.out[u]
            .iter()
            .map(|&e| paths[g.edges[e].range])
            .fold(0u128, |a, b| a.saturating_add(b));
    }
    OrbitSize::Finite(anc.iter().map(|&u| paths[u]).fold(0u128, |a, b| a.saturating_add(b)))
}

/// Ancestors of `w` ordered so every vertex comes after all of its
/// successors within the set.
fn topological_to(g: &DirectedGraph, w: usize, anc: &BTreeSet<usize>) -> Vec<usize> {
    let mut remaining: Vec<usize> = vec![0; g.vertices.len()];
    for &u in anc {
        remaining[u] = g.out[u].iter().filter(|&&e| anc.contains(&g.edges[e].range)).count();
    }
    let mut queue = VecDeque::from([w]);
    let mut order = Vec::with_capacity(anc.len());
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &e in &g.incoming[v] {
            let u = g.edges[e].source;
            remaining[u] -= 1;
            if remaining[u] == 0 {
                queue.push_back(u);
            }
        }
    }
    order
}

/// Orbit size of the boundary path of the line point `v`.
pub fn orbit_size(g: &DirectedGraph, v: usize) -> Result<OrbitSize> {
    match vertex_status(g, v) {
        VertexStatus::LinePoint { sink, .. } => Ok(sink_class_size(g, sink)),
        VertexStatus::NotLinePoint(why) => Err(Error::NotALinePoint(format!("{}: {why}", g.vertices[v]))),
    }
}

/// One matrix block `M_size(K)` of the socle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// The sink whose trivial path represents the class.
    pub sink: usize,
    pub size: OrbitSize,
}

/// Socle decomposition of the Leavitt path algebra: one block per class of
/// line-point boundary paths, i.e. per sink, in declaration order.
pub fn lpa_socle(g: &DirectedGraph) -> Vec<Block> {
    (0..g.vertices.len())
        .filter(|&w| g.is_sink(w))
        .map(|w| Block {
            sink: w,
            size: sink_class_size(g, w),
        })
        .collect()
}

/// Paths ending at the sink `w`, shortest first, ties by edge declaration
/// order of the first edge.
fn paths_into(g: &DirectedGraph, w: usize) -> Vec<(Vec<usize>, String)> {
    let mut out = vec![(Vec::new(), g.vertices[w].clone())];
    let mut frontier: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), w)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (path, start) in &frontier {
            let mut extended: Vec<(Vec<usize>, usize)> = g.incoming[*start]
                .iter()
                .map(|&e| {
                    let mut p = Vec::with_capacity(path.len() + 1);
                    p.push(e);
                    p.extend_from_slice(path);
                    (p, g.edges[e].source)
                })
                .collect();
            next.append(&mut extended);
        }
        next.sort();
        for (p, _) in &next {
            out.push((p.clone(), path_name(g, p, w)));
        }
        frontier = next;
    }
    out
}

/// The boundary-path groupoid of an acyclic graph as a finite groupoid.
///
/// Units are the boundary paths; `(μ,k,ν)` with `k = |μ| - |ν|` is the arrow
/// from `ν` to `μ` for boundary paths ending at the same sink. Units are
/// declared first, grouped by sink, so the trivial path `w` is the least
/// unit of its class.
pub fn materialize_boundary_groupoid(g: &DirectedGraph) -> Result<FiniteGroupoid> {
    if let Some(v) = (0..g.vertices.len()).find(|&v| g.on_cycle(v)) {
        return Err(Error::CyclicGraph(format!("vertex {}", g.vertices[v])));
    }
    let blocks = lpa_socle(g);
    let total = blocks.iter().fold(0u128, |acc, b| match b.size {
        OrbitSize::Finite(n) => acc.saturating_add(n.saturating_mul(n)),
        OrbitSize::Infinite => u128::MAX,
    });
    if total > MAX_ELEMENTS as u128 {
        return Err(Error::GroupoidTooLarge {
            size: usize::try_from(total).unwrap_or(usize::MAX),
            cap: MAX_ELEMENTS,
        });
    }
    let classes: Vec<Vec<(Vec<usize>, String)>> = blocks.iter().map(|b| paths_into(g, b.sink)).collect();
    let mut raw = RawGroupoid {
        elements: Vec::new(),
        source: IndexMap::new(),
        range: IndexMap::new(),
        inverse: IndexMap::new(),
        compose: Vec::new(),
    };
    let arrow = |class: &[(Vec<usize>, String)], i: usize, j: usize| -> String {
        if i == j {
            class[i].1.clone()
        } else {
            let k = class[i].0.len() as i64 - class[j].0.len() as i64;
            format!("({},{},{})", class[i].1, k, class[j].1)
        }
    };
    for class in &classes {
        for (_, name) in class {
            raw.elements.push(name.clone());
        }
    }
    for class in &classes {
        for i in 0..class.len() {
            for j in 0..class.len() {
                if i != j {
                    raw.elements.push(arrow(class, i, j));
                }
            }
        }
    }
    for class in &classes {
        for i in 0..class.len() {
            for j in 0..class.len() {
                let a = arrow(class, i, j);
                raw.range.insert(a.clone(), class[i].1.clone());
                raw.source.insert(a.clone(), class[j].1.clone());
                raw.inverse.insert(a.clone(), arrow(class, j, i));
                for l in 0..class.len() {
                    raw.compose.push([a.clone(), arrow(class, j, l), arrow(class, i, l)]);
                }
            }
        }
    }
    crate::groupoid::validate(&raw)
}
