#![allow(dead_code)]

use edgedepth_core::{Graph, Monomial, MonomialIdeal, VertexSet};
use proptest::prelude::*;

/// Every monomial in `n` variables of total degree at most `max_degree`.
pub fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Monomial> {
    fn rec(j: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if j == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[j] = e;
            rec(j + 1, left - e, cur, out);
        }
        cur[j] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_degree, &mut vec![0; n], &mut out);
    out
}

/// All monomial divisors of `m`.
pub fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(m.dim())];
    for (j, &e) in m.exponents().iter().enumerate() {
        let mut next = Vec::new();
        for d in &out {
            for k in 0..=e {
                let mut exps = d.exponents().to_vec();
                exps[j] = k;
                next.push(Monomial::new(exps));
            }
        }
        out = next;
    }
    out
}

/// Membership in `I^s` decided by splitting `m` into `s` factors from `I`.
pub fn in_power_by_factoring(i: &MonomialIdeal, m: &Monomial, s: u32) -> bool {
    if s == 0 {
        return true;
    }
    divisors(m).iter().any(|d| {
        i.contains(d).unwrap() && {
            let rest = Monomial::new(
                m.exponents().iter().zip(d.exponents()).map(|(a, b)| a - b).collect(),
            );
            in_power_by_factoring(i, &rest, s - 1)
        }
    })
}

/// `m ∈ p_C^s` for every vertex cover `C` found by scanning all subsets.
pub fn in_symbolic_power_brute(g: &Graph, m: &Monomial, s: u32) -> bool {
    (0u64..1 << g.n())
        .map(VertexSet)
        .filter(|&c| g.is_vertex_cover(c))
        .all(|c| c.iter().map(|j| m.exponent(j)).sum::<u32>() >= s)
}

pub fn brute_alpha2(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .map(VertexSet)
        .filter(|&c| {
            let vs = c.to_vec();
            vs.iter().enumerate().all(|(i, &a)| {
                vs[i + 1..]
                    .iter()
                    .all(|&b| g.closed_neighborhood(a).is_disjoint(g.closed_neighborhood(b)))
            })
        })
        .map(|c| c.len())
        .max()
        .unwrap_or(0)
}

/// Independence number by exhaustive search.
pub fn brute_independence(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .map(VertexSet)
        .filter(|&c| g.is_independent(c))
        .map(|c| c.len())
        .max()
        .unwrap_or(0)
}

/// Chordality by definition: no induced cycle of length >= 4, found by trying
/// every vertex subset of size >= 4 that induces a 2-regular connected graph.
pub fn brute_is_chordal(g: &Graph) -> bool {
    for mask in 0u64..1 << g.n() {
        let s = VertexSet(mask);
        if s.len() < 4 {
            continue;
        }
        let (sub, _) = g.delete_vertices(g.vertices().difference(s)).unwrap();
        if (0..sub.n()).all(|v| sub.degree(v) == 2) && sub.component_count() == 1 {
            return false;
        }
    }
    true
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Chordal graphs built by attaching each new vertex to a clique of the
/// neighborhood of an earlier vertex, then relabeled by a permutation.
pub fn arb_chordal(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec((any::<u64>(), any::<u64>()), n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(choices, perm)| {
                let mut g = Graph::empty(n).unwrap();
                let mut edges: Vec<(usize, usize)> = Vec::new();
                for v in 1..n {
                    let (pick, mask) = choices[v];
                    if pick % 5 == 0 {
                        continue;
                    }
                    let anchor = (pick as usize / 5) % v;
                    let mut clique = VertexSet::singleton(anchor);
                    for w in g.neighbors(anchor).iter().filter(|&w| w < v) {
                        if mask >> w & 1 == 1 && clique.is_subset(g.neighbors(w)) {
                            clique.insert(w);
                        }
                    }
                    for w in clique.iter() {
                        edges.push((w, v));
                    }
                    g = Graph::from_edges(n, &edges).unwrap();
                }
                g.relabel(&perm).unwrap()
            })
    })
}

pub fn arb_monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

pub fn arb_ideal(n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(arb_monomial(n, max_exp), 0..=max_gens)
        .prop_map(move |gens| MonomialIdeal::minimalize(gens, n).unwrap())
}

pub fn ideal(text: &str, n: usize) -> MonomialIdeal {
    MonomialIdeal::parse(text, n).unwrap()
}

pub fn mono(text: &str, n: usize) -> Monomial {
    Monomial::parse(text, n).unwrap()
}
