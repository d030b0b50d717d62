//! Reference oracle for minor containment on tiny hosts.
//!
//! Uses the textbook recursion: `pattern ≤ host` iff `pattern` is a
//! subgraph of `host` or `pattern ≤ host/e` for some edge `e`. Exponential,
//! memoized on the host's labeled adjacency matrix, and deliberately
//! independent of the branch-set search engine so the two can cross-check
//! each other.

use std::collections::HashMap;

use crate::graph::Graph;

use super::MinorError;

/// Default host-size ceiling for [`has_minor_oracle`]. Beyond ten vertices
/// the contraction recursion stops being "slow but fine".
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

/// Decides minor containment by brute force. Errors if the host has more
/// than [`DEFAULT_ORACLE_LIMIT`] vertices.
pub fn has_minor_oracle(pattern: &Graph, host: &Graph) -> Result<bool, MinorError> {
    has_minor_oracle_with_limit(pattern, host, DEFAULT_ORACLE_LIMIT)
}

/// Same as [`has_minor_oracle`] with an explicit host-size ceiling.
pub fn has_minor_oracle_with_limit(
    pattern: &Graph,
    host: &Graph,
    limit: usize,
) -> Result<bool, MinorError> {
    if host.vertex_count() > limit {
        return Err(MinorError::HostTooLargeForOracle { n: host.vertex_count(), limit });
    }
    assert!(limit <= 16, "oracle adjacency rows are 16-bit");
    let mut memo = HashMap::new();
    Ok(has_minor_rec(pattern, host, &mut memo))
}

/// Labeled adjacency-matrix key: one bitmask row per vertex. Contractions
/// of different edge sequences that reach the same labeled graph collapse.
fn adjacency_key(g: &Graph) -> Vec<u16> {
    let mut rows = vec![0u16; g.vertex_count()];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

fn has_minor_rec(pattern: &Graph, host: &Graph, memo: &mut HashMap<Vec<u16>, bool>) -> bool {
    if pattern.vertex_count() > host.vertex_count()
        || pattern.edge_count() > host.edge_count()
    {
        return false;
    }
    let key = adjacency_key(host);
    if let Some(&cached) = memo.get(&key) {
        return cached;
    }
    let answer = is_subgraph(pattern, host)
        || host
            .edges()
            .into_iter()
            .any(|(u, v)| has_minor_rec(pattern, &host.contract_edge(u, v).unwrap().graph, memo));
    memo.insert(key, answer);
    answer
}

/// Subgraph isomorphism (not induced): an injective vertex map sending
/// pattern edges to host edges. Plain backtracking, highest pattern degree
/// first.
fn is_subgraph(pattern: &Graph, host: &Graph) -> bool {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    if k > n || pattern.edge_count() > host.edge_count() {
        return false;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));
    let mut assign = vec![usize::MAX; k];
    let mut used = vec![false; n];
    extend(pattern, host, &order, 0, &mut assign, &mut used)
}

fn extend(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for v in 0..host.vertex_count() {
        if used[v] || host.degree(v) < pattern.degree(p) {
            continue;
        }
        let consistent = pattern
            .neighbors(p)
            .iter()
            .all(|&q| assign[q] == usize::MAX || host.has_edge(v, assign[q]));
        if !consistent {
            continue;
        }
        assign[p] = v;
        used[v] = true;
        if extend(pattern, host, order, depth + 1, assign, used) {
            return true;
        }
        assign[p] = usize::MAX;
        used[v] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::build(10, &edges).unwrap()
    }

    #[test]
    fn basic_containments() {
        assert!(has_minor_oracle(&Graph::complete(3), &Graph::cycle(5)).unwrap());
        assert!(has_minor_oracle(&Graph::cycle(4), &Graph::cycle(5)).unwrap());
        assert!(!has_minor_oracle(&Graph::cycle(5), &Graph::cycle(4)).unwrap());
        assert!(!has_minor_oracle(&Graph::path(4), &Graph::complete(3)).unwrap());
        assert!(!has_minor_oracle(&Graph::complete(3), &Graph::path(6)).unwrap());
    }

    #[test]
    fn reflexive_and_subgraph_cases() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(has_minor_oracle(&k33, &k33).unwrap());
        assert!(has_minor_oracle(&Graph::path(4), &k33).unwrap());
        assert!(!has_minor_oracle(&Graph::complete(5), &k33).unwrap());
    }

    #[test]
    fn petersen_contains_both_kuratowski_minors() {
        let p = petersen();
        assert!(has_minor_oracle(&Graph::complete(5), &p).unwrap());
        assert!(has_minor_oracle(&Graph::complete_bipartite(3, 3), &p).unwrap());
        assert!(!has_minor_oracle(&Graph::complete(6), &p).unwrap());
    }

    #[test]
    fn disconnected_pattern() {
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(has_minor_oracle(&two_triangles, &Graph::complete(6)).unwrap());
        assert!(!has_minor_oracle(&two_triangles, &Graph::cycle(5)).unwrap());
        assert!(has_minor_oracle(&two_triangles, &Graph::cycle(3).disjoint_union(&Graph::cycle(4))).unwrap());
    }

    #[test]
    fn host_size_limit_enforced() {
        let big = Graph::cycle(11);
        assert!(matches!(
            has_minor_oracle(&Graph::complete(3), &big),
            Err(MinorError::HostTooLargeForOracle { n: 11, limit: 10 })
        ));
        assert!(has_minor_oracle_with_limit(&Graph::complete(3), &big, 12).unwrap());
    }
}
