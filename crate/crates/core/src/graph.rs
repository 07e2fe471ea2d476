//! Dense simple graphs on at most 64 vertices.
//!
//! Vertex `v` corresponds to the variable `x_{v+1}` of the ambient polynomial
//! ring. Adjacency rows are `u64` bitsets, and vertex subsets are [`VertexSet`]s.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        f.write_str("}")
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Outcome of a chordality test, with a certificate either way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Chordality {
    /// `elimination_order[0]` is simplicial in `G`, `elimination_order[1]` in what
    /// remains after deleting it, and so on.
    Chordal { elimination_order: Vec<usize> },
    /// Vertices of an induced cycle of length at least four, in cyclic order.
    NotChordal { induced_cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Centers of a family of stars with pairwise disjoint closed neighborhoods.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarPacking {
    pub centers: VertexSet,
}

impl StarPacking {
    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range vertices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            g.adj[u] = low_bits(n) & !(1 << u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, &edges)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, set: VertexSet) -> Result<()> {
        match set.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_bits(u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    /// Union of the open neighborhoods of the vertices in `set`.
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    /// Union of the closed neighborhoods of the vertices in `set`.
    pub fn closed_neighborhood_of(&self, set: VertexSet) -> VertexSet {
        self.neighborhood_of(set).union(set)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.neighbors(v).is_disjoint(set))
    }

    pub fn is_vertex_cover(&self, set: VertexSet) -> bool {
        self.is_independent(self.vertices().difference(set))
    }

    /// `G \ A`: the induced subgraph on the remaining vertices, relabeled
    /// `0..n-|A|` in increasing order. The returned map sends each new label to
    /// its old one.
    pub fn delete_vertices(&self, removed: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(removed)?;
        let keep = self.vertices().difference(removed);
        let map = keep.to_vec();
        let mut inverse = [usize::MAX; 64];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let mut g = Graph::empty(map.len())?;
        for (new, &old) in map.iter().enumerate() {
            g.adj[new] = VertexSet(self.adj[old] & keep.0)
                .iter()
                .fold(0, |acc, w| acc | 1 << inverse[w]);
        }
        Ok((g, map))
    }

    /// Deletes the edges among `removed` from the picture but keeps every vertex,
    /// so the result lives in the same ambient ring.
    pub fn isolate_vertices(&self, removed: VertexSet) -> Result<Graph> {
        self.check_set(removed)?;
        let mut g = self.clone();
        for v in 0..self.n {
            if removed.contains(v) {
                g.adj[v] = 0;
            } else {
                g.adj[v] &= !removed.0;
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = low_bits(self.n);
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| full & !self.adj[v] & !(1 << v)).collect(),
        }
    }

    /// `G^2`: two distinct vertices are adjacent when their distance in `G` is at most 2.
    pub fn square(&self) -> Graph {
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| self.closed_neighborhood_of(self.neighbors(v)).0 & !(1 << v))
                .collect(),
        }
    }

    /// Edge-union of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(Graph {
            n: self.n,
            adj: self.adj.iter().zip(&other.adj).map(|(a, b)| a | b).collect(),
        })
    }

    pub fn shares_edge_with(&self, other: &Graph) -> bool {
        self.adj.iter().zip(&other.adj).any(|(a, b)| a & b != 0)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = VertexSet::EMPTY;
        let mut count = 0;
        while let Some(start) = self.vertices().difference(seen).first() {
            count += 1;
            let mut frontier = VertexSet::singleton(start);
            seen.insert(start);
            while !frontier.is_empty() {
                let next = self.neighborhood_of(frontier).difference(seen);
                seen = seen.union(next);
                frontier = next;
            }
        }
        count
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.n
    }

    /// Chordality via maximum cardinality search, then a check of the resulting
    /// elimination order. On failure an induced cycle of length >= 4 is returned.
    pub fn chordality(&self) -> Chordality {
        let order = self.maximum_cardinality_order();
        if self.is_perfect_elimination_order(&order) {
            Chordality::Chordal {
                elimination_order: order,
            }
        } else {
            let induced_cycle = self
                .find_induced_long_cycle()
                .expect("a graph without a perfect elimination order has a long induced cycle");
            Chordality::NotChordal { induced_cycle }
        }
    }

    pub fn is_chordal(&self) -> bool {
        self.is_perfect_elimination_order(&self.maximum_cardinality_order())
    }

    /// Reverse of the maximum cardinality search visiting order.
    fn maximum_cardinality_order(&self) -> Vec<usize> {
        let mut weight = vec![0usize; self.n];
        let mut numbered = VertexSet::EMPTY;
        let mut visit = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = self
                .vertices()
                .difference(numbered)
                .iter()
                .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
                .unwrap();
            numbered.insert(v);
            visit.push(v);
            for w in self.neighbors(v).difference(numbered).iter() {
                weight[w] += 1;
            }
        }
        visit.reverse();
        visit
    }

    /// Each vertex's neighbors later in `order` form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        if order.len() != self.n {
            return false;
        }
        let mut later = self.vertices();
        for &v in order {
            if !later.contains(v) {
                return false;
            }
            later.remove(v);
            if !self.is_clique(self.neighbors(v).intersection(later)) {
                return false;
            }
        }
        true
    }

    /// For a vertex `v` with non-adjacent neighbors `x`, `y`, a shortest `x`-`y`
    /// path avoiding the rest of `N[v]` closes an induced cycle through `v`.
    fn find_induced_long_cycle(&self) -> Option<Vec<usize>> {
        for v in 0..self.n {
            let nv = self.neighbors(v);
            for x in nv.iter() {
                for y in nv.iter().filter(|&y| y > x && !self.has_edge(x, y)) {
                    let blocked = self.closed_neighborhood(v).difference(
                        VertexSet::singleton(x).union(VertexSet::singleton(y)),
                    );
                    if let Some(path) = self.shortest_path_avoiding(x, y, blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path_avoiding(&self, from: usize, to: usize, blocked: VertexSet) -> Option<Vec<usize>> {
        let mut parent = [usize::MAX; 64];
        let mut seen = blocked.union(VertexSet::singleton(from));
        let mut queue = alloc::collections::VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors(u).difference(seen).iter() {
                seen.insert(w);
                parent[w] = u;
                queue.push_back(w);
            }
        }
        None
    }

    /// Vertices whose open neighborhood is a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.is_clique(self.neighbors(v)))
            .collect()
    }

    /// All maximal independent sets, via Bron–Kerbosch with pivoting on the complement.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let comp = self.complement();
        let mut out = Vec::new();
        comp.bron_kerbosch(0, self.vertices().0, 0, &mut out);
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
        if p == 0 {
            if x == 0 {
                out.push(VertexSet(r));
            }
            return;
        }
        let pivot = VertexSet(p | x)
            .iter()
            .max_by_key(|&u| (p & self.adj[u]).count_ones())
            .unwrap();
        for v in VertexSet(p & !self.adj[pivot]).iter() {
            let bit = 1u64 << v;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    /// Minimal vertex covers, sorted by size and then lexicographically.
    /// An edgeless graph has exactly one, the empty set.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let full = self.vertices();
        let mut covers: Vec<VertexSet> = self
            .maximal_independent_sets()
            .into_iter()
            .map(|s| full.difference(s))
            .collect();
        covers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
        covers
    }

    /// Closed neighborhoods of the given centers are pairwise disjoint.
    pub fn is_star_packing(&self, centers: VertexSet) -> Result<bool> {
        self.check_set(centers)?;
        Ok(self.star_packing_conflict(centers).is_none())
    }

    fn star_packing_conflict(&self, centers: VertexSet) -> Option<(usize, usize)> {
        let mut covered = VertexSet::EMPTY;
        let mut owner = [usize::MAX; 64];
        for c in centers.iter() {
            let nb = self.closed_neighborhood(c);
            if let Some(w) = nb.intersection(covered).first() {
                return Some((owner[w], c));
            }
            for w in nb.iter() {
                owner[w] = c;
            }
            covered = covered.union(nb);
        }
        None
    }

    pub fn validate_star_packing(&self, centers: VertexSet) -> Result<StarPacking> {
        self.check_set(centers)?;
        match self.star_packing_conflict(centers) {
            Some((a, b)) => Err(Error::InvalidStarPacking(a, b)),
            None => Ok(StarPacking { centers }),
        }
    }

    /// The star packing number with a maximum packing, computed exactly as the
    /// independence number of `G^2` by branch and bound.
    pub fn star_packing_number(&self) -> (usize, StarPacking) {
        let sq = self.square();
        let best = sq.maximum_independent_set();
        (best.len(), StarPacking { centers: best })
    }

    /// Exact maximum independent set (ties broken deterministically).
    pub fn maximum_independent_set(&self) -> VertexSet {
        let greedy = self.greedy_independent_set();
        let mut best = greedy;
        self.mis_branch(self.vertices().0, 0, &mut best);
        best
    }

    fn greedy_independent_set(&self) -> VertexSet {
        let mut cand = self.vertices().0;
        let mut chosen = 0u64;
        while cand != 0 {
            let v = VertexSet(cand)
                .iter()
                .min_by_key(|&v| (self.adj[v] & cand).count_ones())
                .unwrap();
            chosen |= 1 << v;
            cand &= !(self.adj[v] | 1 << v);
        }
        VertexSet(chosen)
    }

    fn mis_branch(&self, mut cand: u64, mut chosen: u64, best: &mut VertexSet) {
        // Vertices of degree <= 1 inside the candidate set can always be taken.
        loop {
            let forced = VertexSet(cand)
                .iter()
                .find(|&v| (self.adj[v] & cand).count_ones() <= 1);
            match forced {
                Some(v) => {
                    chosen |= 1 << v;
                    cand &= !(self.adj[v] | 1 << v);
                }
                None => break,
            }
        }
        let have = chosen.count_ones() as usize;
        if cand == 0 {
            if have > best.len() {
                *best = VertexSet(chosen);
            }
            return;
        }
        // Every remaining vertex has degree >= 2 in cand, so with m edges and
        // maximum degree D an independent set has size at most |cand| - m / D.
        let size = cand.count_ones() as usize;
        let degrees = VertexSet(cand).iter().map(|v| (self.adj[v] & cand).count_ones() as usize);
        let (sum, max) = degrees.fold((0, 0), |(s, m), d| (s + d, m.max(d)));
        let edges = sum / 2;
        let bound = size - edges.div_ceil(max);
        if have + bound <= best.len() {
            return;
        }
        let v = VertexSet(cand)
            .iter()
            .max_by_key(|&v| (self.adj[v] & cand).count_ones())
            .unwrap();
        self.mis_branch(cand & !(self.adj[v] | 1 << v), chosen | 1 << v, best);
        self.mis_branch(cand & !(1 << v), chosen, best);
    }
}
