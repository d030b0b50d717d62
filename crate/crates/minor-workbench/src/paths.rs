//! Vertex-disjoint path families and minimum vertex cuts between vertex
//! sets (the two sides of Menger's theorem).
//!
//! Paths here are *fully* vertex-disjoint: no host vertex appears on two
//! paths, terminals included. Dually, a cut is any vertex set — terminals
//! allowed — whose removal leaves no source-to-sink path. Both quantities
//! are computed from one unit-vertex-capacity flow network, so
//! `max_vertex_disjoint_paths` and `min_vertex_cut` always agree in size.
//!
//! # Example
//!
//! ```
//! use minor_workbench::graph::Graph;
//! use minor_workbench::paths::{max_vertex_disjoint_paths, min_vertex_cut};
//!
//! // A star routes everything through its center.
//! let star = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
//! let family = max_vertex_disjoint_paths(&star, &[1, 2], &[3, 4]).unwrap();
//! assert_eq!(family.paths.len(), 1);
//! let cut = min_vertex_cut(&star, &[1, 2], &[3, 4]).unwrap();
//! assert_eq!(cut.vertices, vec![0]);
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// A family of pairwise vertex-disjoint paths, each listed source to sink.
/// A single shared terminal yields the one-vertex path `[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub paths: Vec<Vec<usize>>,
}

/// A set of vertices separating the sources from the sinks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSet {
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathsError {
    #[error("sources and sinks must both be nonempty")]
    EmptyTerminals,
    #[error("a vertex shared by sources and sinks cannot be separated")]
    Inseparable,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A maximum-cardinality family of pairwise vertex-disjoint paths from
/// `sources` to `sinks`. Deterministic; by Menger the family size equals
/// the minimum cut size.
pub fn max_vertex_disjoint_paths(
    g: &Graph,
    sources: &[usize],
    sinks: &[usize],
) -> Result<PathFamily, PathsError> {
    let (sources, sinks) = check_terminals(g, sources, sinks)?;
    let mut net = FlowNet::build(g, &sources, &sinks);
    net.max_flow();
    Ok(PathFamily { paths: net.decompose_paths(g, &sources) })
}

/// A minimum vertex set whose removal disconnects every source from every
/// sink. Errors with [`PathsError::Inseparable`] when a vertex is both a
/// source and a sink, since no removal can separate it from itself.
pub fn min_vertex_cut(
    g: &Graph,
    sources: &[usize],
    sinks: &[usize],
) -> Result<CutSet, PathsError> {
    let (sources, sinks) = check_terminals(g, sources, sinks)?;
    if sources.iter().any(|v| sinks.binary_search(v).is_ok()) {
        return Err(PathsError::Inseparable);
    }
    let mut net = FlowNet::build(g, &sources, &sinks);
    let flow = net.max_flow();
    let cut = net.residual_cut(g);
    debug_assert_eq!(cut.len() as i64, flow);
    Ok(CutSet { vertices: cut })
}

/// Checks that a family consists of pairwise vertex-disjoint source-to-sink
/// walks along host edges. Out-of-range ids are errors; structural defects
/// (wrong endpoints, non-edges, shared vertices, empty paths) make it
/// `Ok(false)`.
pub fn validate_path_family(
    family: &PathFamily,
    g: &Graph,
    sources: &[usize],
    sinks: &[usize],
) -> Result<bool, PathsError> {
    let n = g.vertex_count();
    for &v in family.paths.iter().flatten().chain(sources).chain(sinks) {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n }.into());
        }
    }
    let mut used = vec![false; n];
    for path in &family.paths {
        let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
            return Ok(false);
        };
        if !sources.contains(&first) || !sinks.contains(&last) {
            return Ok(false);
        }
        for pair in path.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Ok(false);
            }
        }
        for &v in path {
            if used[v] {
                return Ok(false);
            }
            used[v] = true;
        }
    }
    Ok(true)
}

fn check_terminals(
    g: &Graph,
    sources: &[usize],
    sinks: &[usize],
) -> Result<(Vec<usize>, Vec<usize>), PathsError> {
    if sources.is_empty() || sinks.is_empty() {
        return Err(PathsError::EmptyTerminals);
    }
    let n = g.vertex_count();
    for &v in sources.iter().chain(sinks) {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n }.into());
        }
    }
    let mut sources = sources.to_vec();
    sources.sort_unstable();
    sources.dedup();
    let mut sinks = sinks.to_vec();
    sinks.sort_unstable();
    sinks.dedup();
    Ok((sources, sinks))
}

const INF: i64 = 1 << 40;

/// Unit-vertex-capacity flow network: vertex `v` splits into `2v → 2v+1`
/// with capacity one, undirected host edges become infinite arcs between
/// the split halves, and a super source/sink attach to the terminals.
struct FlowNet {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

struct Arc {
    to: usize,
    cap: i64,
}

fn v_in(v: usize) -> usize {
    2 * v
}

fn v_out(v: usize) -> usize {
    2 * v + 1
}

impl FlowNet {
    fn build(g: &Graph, sources: &[usize], sinks: &[usize]) -> FlowNet {
        let n = g.vertex_count();
        let source = 2 * n;
        let sink = 2 * n + 1;
        let mut net =
            FlowNet { arcs: Vec::new(), out: vec![Vec::new(); 2 * n + 2], source, sink };
        for v in 0..n {
            net.add_arc(v_in(v), v_out(v), 1);
        }
        for (u, v) in g.edges() {
            net.add_arc(v_out(u), v_in(v), INF);
            net.add_arc(v_out(v), v_in(u), INF);
        }
        for &v in sources {
            net.add_arc(source, v_in(v), INF);
        }
        for &v in sinks {
            net.add_arc(v_out(v), sink, INF);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Edmonds–Karp: breadth-first augmenting paths until none remain.
    fn max_flow(&mut self) -> i64 {
        let mut total = 0;
        loop {
            let mut prev_arc = vec![usize::MAX; self.out.len()];
            let mut queue = vec![self.source];
            let mut head = 0;
            while head < queue.len() && prev_arc[self.sink] == usize::MAX {
                let u = queue[head];
                head += 1;
                for &a in &self.out[u] {
                    let to = self.arcs[a].to;
                    if self.arcs[a].cap > 0 && prev_arc[to] == usize::MAX && to != self.source {
                        prev_arc[to] = a;
                        queue.push(to);
                    }
                }
            }
            if prev_arc[self.sink] == usize::MAX {
                return total;
            }
            let mut bottleneck = INF;
            let mut node = self.sink;
            while node != self.source {
                let a = prev_arc[node];
                bottleneck = bottleneck.min(self.arcs[a].cap);
                node = self.arcs[a ^ 1].to;
            }
            let mut node = self.sink;
            while node != self.source {
                let a = prev_arc[node];
                self.arcs[a].cap -= bottleneck;
                self.arcs[a ^ 1].cap += bottleneck;
                node = self.arcs[a ^ 1].to;
            }
            total += bottleneck;
        }
    }

    /// Flow on a forward arc equals its reverse arc's residual capacity.
    fn flow(&self, arc: usize) -> i64 {
        debug_assert_eq!(arc % 2, 0);
        self.arcs[arc ^ 1].cap
    }

    fn consume(&mut self, arc: usize) {
        self.arcs[arc].cap += 1;
        self.arcs[arc ^ 1].cap -= 1;
    }

    /// Splits the integral flow into vertex-disjoint host paths. Unit
    /// vertex capacities make every positive-flow walk simple and keep
    /// distinct walks disjoint, so a greedy arc-following walk per used
    /// source is enough.
    fn decompose_paths(&mut self, g: &Graph, sources: &[usize]) -> Vec<Vec<usize>> {
        let mut paths = Vec::new();
        for &s in sources {
            let entry = self.out[self.source]
                .iter()
                .copied()
                .find(|&a| a % 2 == 0 && self.arcs[a].to == v_in(s) && self.flow(a) > 0);
            let Some(entry) = entry else { continue };
            self.consume(entry);
            let mut path = vec![s];
            let mut cur = s;
            loop {
                let vertex_arc = self.out[v_in(cur)]
                    .iter()
                    .copied()
                    .find(|&a| a % 2 == 0 && self.arcs[a].to == v_out(cur))
                    .expect("every vertex has its split arc");
                debug_assert!(self.flow(vertex_arc) > 0);
                self.consume(vertex_arc);
                let next = self.out[v_out(cur)]
                    .iter()
                    .copied()
                    .find(|&a| a % 2 == 0 && self.flow(a) > 0)
                    .expect("flow conservation: an out-arc continues the path");
                self.consume(next);
                if self.arcs[next].to == self.sink {
                    break;
                }
                cur = self.arcs[next].to / 2;
                path.push(cur);
            }
            debug_assert!(path.windows(2).all(|p| g.has_edge(p[0], p[1])));
            paths.push(path);
        }
        paths
    }

    /// Minimum vertex cut from the residual graph: vertices whose in-half
    /// is reachable from the super source but whose out-half is not. All
    /// non-split arcs are infinite, so only split arcs can be saturated.
    fn residual_cut(&self, g: &Graph) -> Vec<usize> {
        let mut reached = vec![false; self.out.len()];
        reached[self.source] = true;
        let mut queue = vec![self.source];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &a in &self.out[u] {
                let to = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !reached[to] {
                    reached[to] = true;
                    queue.push(to);
                }
            }
        }
        (0..g.vertex_count()).filter(|&v| reached[v_in(v)] && !reached[v_out(v)]).collect()
    }
}
