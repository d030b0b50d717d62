//! Planarity testing by incremental face embedding.
//!
//! The search engine proves "no K5 minor" / "no K3,3 minor" on a planar
//! scope in one stroke: planar graphs contain neither, so a planar
//! embedding is an absence certificate that replaces an exhaustive search.
//! The test embeds block by block (a graph is planar exactly when all its
//! blocks are) using the Demoucron–Malgrange–Pertuiset method: start from
//! any cycle, then repeatedly choose a fragment of the unembedded part and
//! draw one of its paths into a face whose boundary contains all of the
//! fragment's attachment vertices. A fragment with no such face proves
//! nonplanarity; when every fragment still has two or more candidate faces,
//! any choice is safe, so the greedy loop never backtracks.

use crate::bits::Bits;
use crate::graph::Graph;

/// Whether the graph has a planar embedding.
pub(crate) fn is_planar(g: &Graph) -> bool {
    let decomposition = crate::blocks::block_decomposition(g);
    decomposition.blocks.iter().all(|block| {
        if block.len() <= 2 {
            return true;
        }
        let r = g.induced_subgraph(block).expect("block vertices are in range");
        block_is_planar(&r.graph)
    })
}

/// Demoucron embedding of one 2-connected graph.
fn block_is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    Embedding::start(g).complete()
}

struct Embedding<'g> {
    g: &'g Graph,
    in_vertices: Vec<bool>,
    /// Embedded edges as adjacency masks.
    in_edges: Vec<Bits>,
    /// Face boundaries as simple cycles (the embedded subgraph stays
    /// 2-connected, so boundaries never repeat a vertex).
    faces: Vec<Vec<usize>>,
    edges_left: usize,
}

/// One piece of the unembedded remainder: either a chord between two
/// embedded vertices or a component of unembedded vertices together with
/// its embedded neighbors.
struct Fragment {
    attachments: Vec<usize>,
    inner: Vec<usize>,
}

impl<'g> Embedding<'g> {
    fn start(g: &'g Graph) -> Embedding<'g> {
        let n = g.vertex_count();
        let cycle = some_cycle(g);
        let mut e = Embedding {
            g,
            in_vertices: vec![false; n],
            in_edges: vec![Bits::new(n); n],
            faces: vec![cycle.clone(), cycle.clone()],
            edges_left: g.edge_count() - cycle.len(),
        };
        for i in 0..cycle.len() {
            e.in_vertices[cycle[i]] = true;
            e.add_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
        }
        e
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.in_edges[u].set(v);
        self.in_edges[v].set(u);
    }

    fn complete(mut self) -> bool {
        while self.edges_left > 0 {
            let fragments = self.fragments();
            let face_masks: Vec<Bits> = self
                .faces
                .iter()
                .map(|f| {
                    let mut b = Bits::new(self.g.vertex_count());
                    for &v in f {
                        b.set(v);
                    }
                    b
                })
                .collect();
            // The forced choice first: a fragment that fits in exactly one
            // face must go there. Failing that, any admissible placement of
            // any fragment keeps the embedding extendable.
            let mut choice: Option<(usize, usize)> = None;
            for (fi, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| frag.attachments.iter().all(|&a| face_masks[f].get(a)))
                    .collect();
                match admissible.len() {
                    0 => return false,
                    1 => {
                        choice = Some((fi, admissible[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, admissible[0]));
                        }
                    }
                }
            }
            let (fi, face) = choice.expect("edges remain, so a fragment exists");
            let path = self.fragment_path(&fragments[fi]);
            self.embed_path(&path, face);
        }
        true
    }

    /// Chord fragments plus one fragment per component of unembedded
    /// vertices.
    fn fragments(&self) -> Vec<Fragment> {
        let n = self.g.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            if !self.in_vertices[u] {
                continue;
            }
            for &v in self.g.neighbors(u) {
                if u < v && self.in_vertices[v] && !self.in_edges[u].get(v) {
                    out.push(Fragment { attachments: vec![u, v], inner: Vec::new() });
                }
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.in_vertices[s] || seen[s] {
                continue;
            }
            let mut inner = vec![s];
            let mut attachments = Vec::new();
            seen[s] = true;
            let mut i = 0;
            while i < inner.len() {
                let v = inner[i];
                i += 1;
                for &w in self.g.neighbors(v) {
                    if self.in_vertices[w] {
                        attachments.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        inner.push(w);
                    }
                }
            }
            attachments.sort_unstable();
            attachments.dedup();
            out.push(Fragment { attachments, inner });
        }
        out
    }

    /// A path through the fragment between two distinct attachments.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if frag.inner.is_empty() {
            return frag.attachments.clone();
        }
        let n = self.g.vertex_count();
        let a = frag.attachments[0];
        let mut member = vec![false; n];
        for &v in &frag.inner {
            member[v] = true;
        }
        let mut parent = vec![usize::MAX; n];
        let mut queue: Vec<usize> = Vec::new();
        for &x in self.g.neighbors(a) {
            if member[x] && parent[x] == usize::MAX {
                parent[x] = a;
                queue.push(x);
            }
        }
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &w in self.g.neighbors(x) {
                if member[w] && parent[w] == usize::MAX {
                    parent[w] = x;
                    queue.push(w);
                } else if self.in_vertices[w] && w != a {
                    // Reached another attachment: unwind.
                    let mut path = vec![w, x];
                    let mut cur = x;
                    while parent[cur] != a {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
            }
        }
        unreachable!("a fragment of a 2-connected graph has two attachments");
    }

    /// Draws `path` (endpoints embedded, interior new) inside face `face`,
    /// splitting its boundary into two.
    fn embed_path(&mut self, path: &[usize], face: usize) {
        let a = path[0];
        let b = *path.last().expect("paths are nonempty");
        let interior = &path[1..path.len() - 1];
        for &v in interior {
            self.in_vertices[v] = true;
        }
        for pair in path.windows(2) {
            self.add_edge(pair[0], pair[1]);
        }
        self.edges_left -= path.len() - 1;
        let boundary = self.faces[face].clone();
        let len = boundary.len();
        let pa = boundary.iter().position(|&v| v == a).expect("attachment on boundary");
        let pb = boundary.iter().position(|&v| v == b).expect("attachment on boundary");
        // Forward arc a→b plus the path walked back, and forward arc b→a
        // plus the path walked out.
        let mut face1 = Vec::new();
        let mut i = pa;
        loop {
            face1.push(boundary[i]);
            if i == pb {
                break;
            }
            i = (i + 1) % len;
        }
        face1.extend(interior.iter().rev());
        let mut face2 = Vec::new();
        let mut i = pb;
        loop {
            face2.push(boundary[i]);
            if i == pa {
                break;
            }
            i = (i + 1) % len;
        }
        face2.extend(interior.iter());
        self.faces[face] = face1;
        self.faces.push(face2);
    }
}

/// Any cycle of a 2-connected graph, as a vertex list.
fn some_cycle(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 new, 1 open, 2 done
    let mut stack = vec![(0usize, 0usize)];
    state[0] = 1;
    while let Some(&(v, ei)) = stack.last() {
        let nbrs = g.neighbors(v);
        if ei >= nbrs.len() {
            state[v] = 2;
            stack.pop();
            continue;
        }
        stack.last_mut().expect("stack is nonempty").1 += 1;
        let w = nbrs[ei];
        if state[w] == 0 {
            state[w] = 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if state[w] == 1 && parent[v] != w {
            // Back edge v→w closes a cycle through the tree path.
            let mut cycle = vec![v];
            let mut cur = v;
            while cur != w {
                cur = parent[cur];
                cycle.push(cur);
            }
            return cycle;
        }
    }
    unreachable!("2-connected graphs on three or more vertices have a cycle")
}
