//! Seeded instance generators. Every function draws only from the `rng` it is
//! given, so a fixed seed yields a fixed instance stream.

use edgedepth_core::verify::{CertificateRow, DepthCertificate};
use edgedepth_core::{Graph, Monomial, MonomialIdeal, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn erdos_renyi<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple graph")
}

/// Adds vertices one at a time, each joined to a random clique inside the
/// neighborhood of a random earlier vertex (or to nothing), then shuffles the
/// labels. The insertion order reversed is a perfect elimination ordering.
pub fn random_chordal<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.15) {
            continue;
        }
        let anchor = rng.gen_range(0..v);
        let mut clique = VertexSet::singleton(anchor);
        let mut candidates = adj[anchor].to_vec();
        candidates.shuffle(rng);
        for w in candidates {
            if rng.gen_bool(0.6) && clique.is_subset(adj[w]) {
                clique.insert(w);
            }
        }
        for w in clique.iter() {
            adj[w].insert(v);
            adj[v].insert(w);
            edges.push((w, v));
        }
    }
    let g = Graph::from_edges(n, &edges).expect("simple graph");
    g.relabel(&permutation(n, rng)).expect("permutation")
}

pub fn permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// The tree with Prüfer sequence `seq` on `seq.len() + 2` vertices.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, &edges).expect("tree")
}

/// Uniform random labeled tree (a single vertex for `n = 1`).
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::empty(n).expect("small graph");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(&seq)
}

/// All `n^(n-2)` labeled trees on `n` vertices.
pub fn all_labeled_trees(n: usize) -> Vec<Graph> {
    if n < 2 {
        return vec![Graph::empty(n).expect("small graph")];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            tree_from_prufer(&seq)
        })
        .collect()
}

/// All `2^C(n,2)` labeled graphs on `n` vertices, in order of their edge bitmask.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("simple graph")
    })
}

/// Splits the edges of `g` into `(H, H')` with `H` chordal. Random edge
/// subsets are tried first; the fallback keeps in `H` the edges inside a random
/// vertex subset, which induces a chordal graph whenever `g` is chordal.
pub fn chordal_two_coloring<R: Rng>(g: &Graph, rng: &mut R) -> (Graph, Graph) {
    let n = g.n();
    let edges = g.edges();
    let split = |keep: &dyn Fn(usize, (usize, usize)) -> bool| {
        let (h, hp): (Vec<_>, Vec<_>) = edges.iter().enumerate().partition(|(k, e)| keep(*k, **e));
        let h: Vec<_> = h.into_iter().map(|(_, &e)| e).collect();
        let hp: Vec<_> = hp.into_iter().map(|(_, &e)| e).collect();
        (
            Graph::from_edges(n, &h).expect("subgraph"),
            Graph::from_edges(n, &hp).expect("subgraph"),
        )
    };
    for _ in 0..16 {
        let coins: Vec<bool> = edges.iter().map(|_| rng.gen_bool(0.5)).collect();
        let (h, hp) = split(&|k, _| coins[k]);
        if h.is_chordal() {
            return (h, hp);
        }
    }
    let inside: VertexSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    split(&|_, (u, v)| inside.contains(u) && inside.contains(v))
}

/// `(W, A)` with `|W| <= 3` and `A` a random subset of `N[W]`.
pub fn closed_neighborhood_deletion<R: Rng>(g: &Graph, rng: &mut R) -> (Vec<usize>, VertexSet) {
    let size = rng.gen_range(0..=3.min(g.n()));
    let mut w = permutation(g.n(), rng);
    w.truncate(size);
    let wset: VertexSet = w.iter().copied().collect();
    let a = random_subset(g.closed_neighborhood_of(wset), rng);
    (w, a)
}

/// `(W, A)` meeting the clique-deletion hypotheses: `W = [x1, ...]` a clique,
/// `A ⊆ N(W)` containing `N(x1) \ W` and avoiding `x1`.
pub fn clique_deletion<R: Rng>(g: &Graph, rng: &mut R) -> (Vec<usize>, VertexSet) {
    let x1 = rng.gen_range(0..g.n());
    let mut w = vec![x1];
    let mut wset = VertexSet::singleton(x1);
    let mut nbrs = g.neighbors(x1).to_vec();
    nbrs.shuffle(rng);
    let target = rng.gen_range(0..=nbrs.len());
    for v in nbrs {
        if w.len() > target {
            break;
        }
        if g.neighbors(v).intersection(wset) == wset {
            w.push(v);
            wset.insert(v);
        }
    }
    let x1set = VertexSet::singleton(x1);
    let forced = g.neighbors(x1).difference(wset);
    let optional = g.neighborhood_of(wset).difference(x1set);
    (w, forced.union(random_subset(optional, rng)))
}

fn random_subset<R: Rng>(set: VertexSet, rng: &mut R) -> VertexSet {
    set.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

/// A random monomial ideal in `n` variables together with a certificate it
/// satisfies. Rows are drawn first; each generator then has exponent at most 1
/// on every tail variable, and picks up a tail variable whenever it uses the
/// head (a row without tail forbids its head). The ideal may come out zero.
pub fn ideal_with_certificate<R: Rng>(
    n: usize,
    max_gens: usize,
    max_exp: u32,
    rng: &mut R,
) -> (MonomialIdeal, DepthCertificate) {
    let order = permutation(n, rng);
    let mut rows: Vec<CertificateRow> = Vec::new();
    let mut k = 0;
    while k < n && rng.gen_bool(0.6) {
        let tail_len = rng.gen_range(0..=2.min(n - k - 1));
        rows.push(CertificateRow {
            head: order[k],
            tail: order[k + 1..k + 1 + tail_len].to_vec(),
        });
        k += 1 + tail_len;
    }
    let count = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(count);
    // When every variable is a head without tail, only the zero ideal fits.
    for _ in 0..count * 20 {
        if gens.len() == count {
            break;
        }
        let mut e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        for row in &rows {
            for &t in &row.tail {
                e[t] = e[t].min(1);
            }
            if e[row.head] > 0 && row.tail.iter().all(|&t| e[t] == 0) {
                match row.tail.as_slice() {
                    [] => e[row.head] = 0,
                    tail => e[tail[rng.gen_range(0..tail.len())]] = 1,
                }
            }
        }
        let m = Monomial::new(e);
        if !m.is_one() {
            gens.push(m);
        }
    }
    let ideal = MonomialIdeal::minimalize(gens, n).expect("dimensions agree");
    let cert = DepthCertificate::new(rows).expect("distinct variables");
    (ideal, cert)
}
