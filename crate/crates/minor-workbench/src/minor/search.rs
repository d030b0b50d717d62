//! Branch-and-bound engine behind [`find_minor_model`] and
//! [`enumerate_models`].
//!
//! The search grows one branch set per pattern vertex. Instead of placing
//! all sets and repairing afterwards, every node works on a single
//! *obligation*, chosen from the pattern edges not yet realized by a host
//! edge between their branch sets:
//!
//! * both endpoints placed: grow one of the two sets a step closer to the
//!   other (moves filtered by free-space reachability and ordered by
//!   distance) — the workhorse;
//! * one endpoint placed: place the other one, anywhere in the free region
//!   that can still reach every placed pattern-neighbor through free
//!   vertices (closing the gaps is then realize work);
//! * neither placed: place the first endpoint anywhere (only happens for
//!   the first vertex of a pattern component).
//!
//! Realize obligations come first, so a newly placed set is pulled into
//! contact before the state grows further. Every move adds exactly one host
//! vertex, so the tree is finite, and the move lists are exhaustive for
//! their obligation, so a fully explored tree proves absence. Visited
//! states are memoized by their owner vector, canonicalized under pattern
//! twins (interchangeable pattern vertices), so symmetric subtrees are
//! expanded once. States where some unrealized edge joins two sets with no
//! free path between them are cut immediately.
//!
//! [`find_minor_model`]: super::find_minor_model
//! [`enumerate_models`]: super::enumerate_models

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::bits::Bits;
use crate::graph::Graph;

use super::{shrink_to_minimal, Enumeration, MinorModel};

/// Upper bound on memoized states; beyond it the search still works but
/// stops deduplicating new states.
const MEMO_CAP: usize = 1_000_000;

const NO_OWNER: i8 = -1;

/// Runs the search until the first witness. Returns the raw (unshrunk)
/// model if any, whether the budget ran out, and the expansions consumed.
pub(super) fn run_find(
    pattern: &Graph,
    host: &Graph,
    max_expansions: u64,
) -> (Option<MinorModel>, bool, u64) {
    let mut s = Searcher::new(pattern, host, max_expansions, None);
    s.dfs();
    (s.found, s.exhausted, s.expansions)
}

/// Exhausts the search tree, collecting distinct minimal models up to
/// `cap`. Also returns the expansions consumed.
pub(super) fn run_enumerate(
    pattern: &Graph,
    host: &Graph,
    cap: usize,
    max_expansions: u64,
) -> (Enumeration, u64) {
    let mut s = Searcher::new(pattern, host, max_expansions, Some(cap));
    s.dfs();
    let complete = !s.exhausted && !s.capped;
    (Enumeration { models: s.models, complete }, s.expansions)
}

/// Pattern preprocessed into "position" space: positions are pattern
/// vertices reordered by descending degree so the most constrained sets are
/// placed first.
struct Pat {
    k: usize,
    orig_of_pos: Vec<usize>,
    adj_mask: Vec<u64>,
    adj_list: Vec<Vec<usize>>,
    /// Pattern edges in position space, lexicographically sorted; the scan
    /// order that defines obligations.
    edges: Vec<(usize, usize)>,
    isolated: Vec<usize>,
    /// Groups of ≥2 pairwise interchangeable positions (equal open or equal
    /// closed neighborhoods). Permuting branch sets within a group maps
    /// valid states to valid states.
    twin_groups: Vec<Vec<usize>>,
}

impl Pat {
    fn new(pattern: &Graph) -> Pat {
        let k = pattern.vertex_count();
        let mut orig_of_pos: Vec<usize> = (0..k).collect();
        orig_of_pos.sort_by_key(|&v| (Reverse(pattern.degree(v)), v));
        let mut pos_of_orig = vec![0; k];
        for (pos, &orig) in orig_of_pos.iter().enumerate() {
            pos_of_orig[orig] = pos;
        }
        let mut adj_mask = vec![0u64; k];
        let mut adj_list = vec![Vec::new(); k];
        let mut edges = Vec::new();
        for (u, v) in pattern.edges() {
            let (a, b) = (pos_of_orig[u], pos_of_orig[v]);
            adj_mask[a] |= 1 << b;
            adj_mask[b] |= 1 << a;
            adj_list[a].push(b);
            adj_list[b].push(a);
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for list in &mut adj_list {
            list.sort_unstable();
        }
        let isolated = (0..k).filter(|&p| adj_list[p].is_empty()).collect();
        let twin_groups = twin_groups(k, &adj_mask);
        Pat { k, orig_of_pos, adj_mask, adj_list, edges, isolated, twin_groups }
    }
}

/// Positions with equal open neighborhoods (nonadjacent twins) or equal
/// closed neighborhoods (adjacent twins), grouped.
fn twin_groups(k: usize, adj_mask: &[u64]) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut by_open: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for p in 0..k {
        by_open.entry(adj_mask[p]).or_default().push(p);
    }
    let mut singles = Vec::new();
    for group in by_open.into_values() {
        if group.len() >= 2 {
            groups.push(group);
        } else {
            singles.push(group[0]);
        }
    }
    let mut by_closed: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for p in singles {
        by_closed.entry(adj_mask[p] | (1 << p)).or_default().push(p);
    }
    for group in by_closed.into_values() {
        if group.len() >= 2 {
            groups.push(group);
        }
    }
    for group in &mut groups {
        group.sort_unstable();
    }
    groups.sort();
    groups
}

enum Obligation {
    /// Both endpoints placed, no contact yet: grow one toward the other.
    Realize(usize, usize),
    /// `new` has at least one placed pattern-neighbor but no set yet: place
    /// it somewhere that keeps all its placed neighbors reachable.
    PlaceContact { new: usize },
    /// Neither endpoint of the first pending edge (or an isolated position)
    /// is placed: free placement.
    PlaceStart(usize),
}

#[derive(Clone, Copy)]
struct Move {
    pos: usize,
    vertex: usize,
    place: bool,
}

struct Searcher<'g> {
    pattern: &'g Graph,
    host: &'g Graph,
    pat: Pat,
    host_bits: Vec<Bits>,
    n: usize,

    owner: Vec<i8>,
    members: Vec<Vec<usize>>,
    set_bits: Vec<Bits>,
    nbr_bits: Vec<Bits>,
    free: Bits,
    free_count: usize,
    placed: Vec<bool>,
    placed_count: usize,
    realized: Vec<u64>,

    expansions: u64,
    max_expansions: u64,
    exhausted: bool,
    memo: HashSet<Vec<u8>>,

    /// `None`: stop at the first witness. `Some(cap)`: enumerate distinct
    /// minimal models up to the cap.
    enumerate_cap: Option<usize>,
    found: Option<MinorModel>,
    models: Vec<MinorModel>,
    seen: BTreeSet<Vec<Vec<usize>>>,
    capped: bool,
}

impl<'g> Searcher<'g> {
    fn new(
        pattern: &'g Graph,
        host: &'g Graph,
        max_expansions: u64,
        enumerate_cap: Option<usize>,
    ) -> Searcher<'g> {
        let n = host.vertex_count();
        let mut host_bits = vec![Bits::new(n); n];
        for v in 0..n {
            for &w in host.neighbors(v) {
                host_bits[v].set(w);
            }
        }
        let pat = Pat::new(pattern);
        let k = pat.k;
        let mut free = Bits::new(n);
        for v in 0..n {
            free.set(v);
        }
        Searcher {
            pattern,
            host,
            pat,
            host_bits,
            n,
            owner: vec![NO_OWNER; n],
            members: vec![Vec::new(); k],
            set_bits: vec![Bits::new(n); k],
            nbr_bits: vec![Bits::new(n); k],
            free,
            free_count: n,
            placed: vec![false; k],
            placed_count: 0,
            realized: vec![0u64; k],
            expansions: 0,
            max_expansions,
            exhausted: false,
            memo: HashSet::new(),
            enumerate_cap,
            found: None,
            models: Vec::new(),
            seen: BTreeSet::new(),
            capped: false,
        }
    }

    /// Returns true when the whole search should unwind (witness found,
    /// enumeration cap hit, or budget exhausted).
    fn dfs(&mut self) -> bool {
        if self.expansions >= self.max_expansions {
            self.exhausted = true;
            return true;
        }
        self.expansions += 1;
        if self.free_count < self.pat.k - self.placed_count {
            return false;
        }
        if self.stuck() {
            return false;
        }
        if !self.feasible() {
            return false;
        }
        let key = self.canonical_key();
        if self.memo.len() < MEMO_CAP {
            if !self.memo.insert(key) {
                return false;
            }
        } else if self.memo.contains(&key) {
            return false;
        }
        match self.next_obligation() {
            None => self.emit_leaf(),
            Some(Obligation::Realize(a, b)) => self.branch_realize(a, b),
            Some(Obligation::PlaceContact { new }) => self.branch_place_contact(new),
            Some(Obligation::PlaceStart(p)) => self.branch_place_start(p),
        }
    }

    /// A placed set with a pending pattern edge but no free neighbor can
    /// never satisfy that edge: every future contact vertex would have to
    /// be a free host vertex adjacent to the set.
    fn stuck(&self) -> bool {
        (0..self.pat.k).any(|a| {
            self.placed[a]
                && self.pat.adj_mask[a] & !self.realized[a] != 0
                && !self.nbr_bits[a].intersects(&self.free)
        })
    }

    /// Connectivity prune over the components of the free subgraph. Every
    /// unrealized edge between two placed sets needs a free component
    /// adjacent to both (branch sets only ever grow through free vertices),
    /// and every unplaced position needs a free component adjacent to all
    /// of its placed pattern-neighbors (its future set lives in one
    /// component and must reach each of them).
    fn feasible(&self) -> bool {
        let comp_of = self.free_component_labels();
        let comp_count = comp_of.iter().filter(|&&c| c != u32::MAX).max().map_or(0, |&c| c as usize + 1);
        let mut adj = vec![Bits::new(comp_count); self.pat.k];
        for p in 0..self.pat.k {
            if self.placed[p] {
                for v in self.nbr_bits[p].iter_ones() {
                    if comp_of[v] != u32::MAX {
                        adj[p].set(comp_of[v] as usize);
                    }
                }
            }
        }
        for &(a, b) in &self.pat.edges {
            if self.realized[a] >> b & 1 == 1 {
                continue;
            }
            if self.placed[a] && self.placed[b] && !adj[a].intersects(&adj[b]) {
                return false;
            }
        }
        for q in 0..self.pat.k {
            if self.placed[q] {
                continue;
            }
            let mut anchors = self.pat.adj_list[q].iter().filter(|&&p| self.placed[p]);
            let Some(&first) = anchors.next() else { continue };
            let mut region = adj[first].clone();
            for &p in anchors {
                region.intersect_with(&adj[p]);
            }
            if !region.any() {
                return false;
            }
        }
        true
    }

    /// Component label per host vertex within the free subgraph
    /// (`u32::MAX` for occupied vertices).
    fn free_component_labels(&self) -> Vec<u32> {
        let mut comp_of = vec![u32::MAX; self.n];
        let mut next = 0u32;
        let mut queue = Vec::new();
        for s in self.free.iter_ones() {
            if comp_of[s] != u32::MAX {
                continue;
            }
            comp_of[s] = next;
            queue.push(s);
            while let Some(v) = queue.pop() {
                for &w in self.host.neighbors(v) {
                    if self.free.get(w) && comp_of[w] == u32::MAX {
                        comp_of[w] = next;
                        queue.push(w);
                    }
                }
            }
            next += 1;
        }
        comp_of
    }

    /// Realize work comes before placements: unrealized edges between two
    /// placed sets first (they constrain the state most), then the first
    /// edge with exactly one placed endpoint, then fresh starts. Within each
    /// class the fixed lexicographic edge order keeps the tree
    /// deterministic.
    fn next_obligation(&self) -> Option<Obligation> {
        let mut half_placed = None;
        let mut unplaced = None;
        for &(a, b) in &self.pat.edges {
            if self.realized[a] >> b & 1 == 1 {
                continue;
            }
            match (self.placed[a], self.placed[b]) {
                (true, true) => return Some(Obligation::Realize(a, b)),
                (true, false) if half_placed.is_none() => half_placed = Some(b),
                (false, true) if half_placed.is_none() => half_placed = Some(a),
                (false, false) if unplaced.is_none() => unplaced = Some(a),
                _ => {}
            }
        }
        if let Some(new) = half_placed {
            return Some(Obligation::PlaceContact { new });
        }
        if let Some(p) = unplaced {
            return Some(Obligation::PlaceStart(p));
        }
        for &p in &self.pat.isolated {
            if !self.placed[p] {
                return Some(Obligation::PlaceStart(p));
            }
        }
        None
    }

    fn emit_leaf(&mut self) -> bool {
        let raw = self.current_model();
        let Some(cap) = self.enumerate_cap else {
            self.found = Some(raw);
            return true;
        };
        let minimal = shrink_to_minimal(&raw, self.pattern, self.host)
            .expect("leaf states satisfy all model invariants");
        if self.seen.insert(minimal.family()) {
            self.models.push(minimal);
            if self.models.len() >= cap {
                self.capped = true;
                return true;
            }
        }
        false
    }

    fn current_model(&self) -> MinorModel {
        let branch_sets = (0..self.pat.k)
            .map(|pos| (self.pat.orig_of_pos[pos], self.members[pos].clone()))
            .collect();
        MinorModel::new(branch_sets)
    }

    fn branch_realize(&mut self, a: usize, b: usize) -> bool {
        let dist_b = self.free_dist_from(b);
        let dist_a = self.free_dist_from(a);
        // (distance to the other set, side, vertex): grow the side that
        // can close the gap fastest first.
        let mut moves: Vec<(u32, u8, usize, usize)> = Vec::new();
        for v in self.nbr_bits[a].iter_ones() {
            if self.free.get(v) && dist_b[v] != u32::MAX {
                moves.push((dist_b[v], 0, v, a));
            }
        }
        for v in self.nbr_bits[b].iter_ones() {
            if self.free.get(v) && dist_a[v] != u32::MAX {
                moves.push((dist_a[v], 1, v, b));
            }
        }
        moves.sort_unstable();
        for (_, _, v, side) in moves {
            if self.run_move(Move { pos: side, vertex: v, place: false }) {
                return true;
            }
        }
        false
    }

    /// Places `new` at any free vertex that can still reach every placed
    /// pattern-neighbor of `new` through free vertices. Wherever the final
    /// branch set of `new` lives, each of its vertices satisfies that
    /// filter (the rest of that set plus the ungrown remainders of the
    /// neighbor sets are all free right now), so the move list is
    /// exhaustive. Closing the remaining gaps is realize work.
    fn branch_place_contact(&mut self, new: usize) -> bool {
        let anchors: Vec<usize> =
            self.pat.adj_list[new].iter().copied().filter(|&p| self.placed[p]).collect();
        let dists: Vec<Vec<u32>> = anchors.iter().map(|&p| self.free_dist_from(p)).collect();
        // Immediate contacts first, then placements close to the anchors.
        let mut placements: Vec<(Reverse<usize>, u32, usize)> = Vec::new();
        'vertices: for v in self.free.iter_ones() {
            let mut immediate = 0;
            let mut farthest = 0;
            for d in &dists {
                match d[v] {
                    u32::MAX => continue 'vertices,
                    1 => immediate += 1,
                    x => farthest = farthest.max(x),
                }
            }
            placements.push((Reverse(immediate), farthest, v));
        }
        placements.sort_unstable();
        for (_, _, v) in placements {
            if self.run_move(Move { pos: new, vertex: v, place: true }) {
                return true;
            }
        }
        false
    }

    fn branch_place_start(&mut self, p: usize) -> bool {
        let mut starts: Vec<(Reverse<usize>, usize)> = (0..self.n)
            .filter(|&v| self.free.get(v))
            .map(|v| (Reverse(self.host.degree(v)), v))
            .collect();
        starts.sort_unstable();
        for (_, v) in starts {
            if self.run_move(Move { pos: p, vertex: v, place: true }) {
                return true;
            }
        }
        false
    }

    fn run_move(&mut self, m: Move) -> bool {
        let newly = self.apply(m);
        let stop = self.dfs();
        self.undo(m, newly);
        stop
    }

    /// Adds `m.vertex` to position `m.pos`, returning the partner
    /// positions whose pattern edge became realized by this vertex.
    fn apply(&mut self, m: Move) -> Vec<usize> {
        let Move { pos, vertex, place } = m;
        if place {
            debug_assert!(!self.placed[pos]);
            self.placed[pos] = true;
            self.placed_count += 1;
        }
        debug_assert!(self.free.get(vertex));
        self.owner[vertex] = pos as i8;
        self.members[pos].push(vertex);
        self.set_bits[pos].set(vertex);
        self.nbr_bits[pos].union_with(&self.host_bits[vertex]);
        self.free.clear(vertex);
        self.free_count -= 1;
        let mut newly = Vec::new();
        for &t in &self.pat.adj_list[pos] {
            if self.placed[t]
                && self.realized[pos] >> t & 1 == 0
                && self.set_bits[t].intersects(&self.host_bits[vertex])
            {
                self.realized[pos] |= 1 << t;
                self.realized[t] |= 1 << pos;
                newly.push(t);
            }
        }
        newly
    }

    fn undo(&mut self, m: Move, newly: Vec<usize>) {
        let Move { pos, vertex, place } = m;
        for t in newly {
            self.realized[pos] &= !(1 << t);
            self.realized[t] &= !(1 << pos);
        }
        debug_assert_eq!(self.members[pos].last(), Some(&vertex));
        self.members[pos].pop();
        self.set_bits[pos].clear(vertex);
        self.owner[vertex] = NO_OWNER;
        self.free.set(vertex);
        self.free_count += 1;
        // Neighborhood bits do not support removal; rebuild from members.
        self.nbr_bits[pos].clear_all();
        for i in 0..self.members[pos].len() {
            let w = self.members[pos][i];
            let (nbrs, hb) = (&mut self.nbr_bits[pos], &self.host_bits[w]);
            nbrs.union_with(hb);
        }
        if place {
            self.placed[pos] = false;
            self.placed_count -= 1;
        }
    }

    /// BFS distances through free vertices, seeded at the free neighbors of
    /// position `s`'s branch set (distance 1). `u32::MAX` marks vertices
    /// the set cannot reach without crossing an occupied vertex.
    fn free_dist_from(&self, s: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = Vec::new();
        for v in self.nbr_bits[s].iter_ones() {
            if self.free.get(v) {
                dist[v] = 1;
                queue.push(v);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in self.host.neighbors(v) {
                if self.free.get(w) && dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
            }
        }
        dist
    }

    /// Owner vector with twin positions relabeled canonically (placed sets
    /// ordered by smallest member, unplaced last), so states differing only
    /// by a permutation of interchangeable pattern vertices share a key.
    fn canonical_key(&self) -> Vec<u8> {
        let mut relabel: Vec<u8> = (0..self.pat.k as u8).collect();
        for group in &self.pat.twin_groups {
            let mut placed: Vec<(usize, usize)> = group
                .iter()
                .copied()
                .filter(|&p| self.placed[p])
                .map(|p| (*self.members[p].iter().min().expect("placed sets are nonempty"), p))
                .collect();
            placed.sort_unstable();
            let mut slot = 0;
            for &(_, p) in &placed {
                relabel[p] = group[slot] as u8;
                slot += 1;
            }
            for &p in group.iter().filter(|&&p| !self.placed[p]) {
                relabel[p] = group[slot] as u8;
                slot += 1;
            }
        }
        let mut key = vec![u8::MAX; self.n];
        for v in 0..self.n {
            if self.owner[v] != NO_OWNER {
                key[v] = relabel[self.owner[v] as usize];
            }
        }
        key
    }
}
