//! Ideals built from graphs: edge ideals, powers of the primes of minimal vertex
//! covers, symbolic powers, and sums `I(H)^(s) + I(H')`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::monomial::{Monomial, MonomialIdeal};

/// Default bound on the number of minimal generators a symbolic power may reach.
pub const DEFAULT_GENERATOR_CAP: usize = 5000;

/// `I(G) = (x_i x_j | ij ∈ E(G))`; the zero ideal for an edgeless graph.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::from_support(n, 1 << u | 1 << v))
        .collect();
    MonomialIdeal::from_unchecked(n, gens)
}

/// `p_C^s`: all monomials of degree `s` in the variables of `cover`.
pub fn prime_power(cover: VertexSet, s: u32, n: usize) -> Result<MonomialIdeal> {
    if cover.is_empty() {
        return Err(Error::EmptyPrime);
    }
    if s == 0 {
        return Err(Error::NonPositivePower(0));
    }
    if let Some(v) = cover.iter().find(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let vars = cover.to_vec();
    let mut gens = Vec::new();
    let mut exps = alloc::vec![0u32; n];
    compositions(&vars, s, &mut exps, &mut gens);
    Ok(MonomialIdeal::from_unchecked(n, gens))
}

/// Pushes every exponent vector that distributes `remaining` over `vars`.
fn compositions(vars: &[usize], remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    match vars {
        [] => {
            if remaining == 0 {
                out.push(Monomial::new(exps.clone()));
            }
        }
        [last] => {
            exps[*last] = remaining;
            out.push(Monomial::new(exps.clone()));
            exps[*last] = 0;
        }
        [first, rest @ ..] => {
            for e in (0..=remaining).rev() {
                exps[*first] = e;
                compositions(rest, remaining - e, exps, out);
            }
            exps[*first] = 0;
        }
    }
}

/// The minimal vertex covers of a graph with their monomial primes.
#[derive(Clone, Debug)]
pub struct CoverPrimeDecomposition {
    pub n: usize,
    pub covers: Vec<VertexSet>,
    pub primes: Vec<MonomialIdeal>,
}

impl CoverPrimeDecomposition {
    pub fn of(g: &Graph) -> Self {
        let covers = g.minimal_vertex_covers();
        let primes = covers
            .iter()
            .map(|c| MonomialIdeal::prime(g.n(), c.bits()))
            .collect();
        Self {
            n: g.n(),
            covers,
            primes,
        }
    }

    /// Intersection of the cover primes; equals the edge ideal.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        if self.covers.iter().any(|c| c.is_empty()) {
            return Ok(MonomialIdeal::zero(self.n));
        }
        Ok(MonomialIdeal::intersect_all(&self.primes)?.unwrap_or_else(|| MonomialIdeal::unit(self.n)))
    }

    /// Membership in the `s`-th symbolic power decided cover by cover:
    /// `m ∈ I^(s)` iff `Σ_{j∈C} deg_{x_j}(m) >= s` for every minimal cover `C`.
    pub fn symbolic_power_contains(&self, m: &Monomial, s: i64) -> Result<bool> {
        if m.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: m.dim(),
            });
        }
        if s <= 0 {
            return Ok(true);
        }
        Ok(self.covers.iter().all(|c| {
            let d: i64 = c.iter().map(|j| i64::from(m.exponent(j))).sum();
            d >= s
        }))
    }
}

/// `I(G)^(s)` with the default generator cap.
pub fn symbolic_power(g: &Graph, s: i64) -> Result<MonomialIdeal> {
    symbolic_power_with_cap(g, s, DEFAULT_GENERATOR_CAP)
}

/// `I(G)^(s) = ⋂_C p_C^s` over the minimal vertex covers, folded in cover order
/// (size, then lexicographic). `S` itself for `s <= 0`, zero for edgeless graphs.
pub fn symbolic_power_with_cap(g: &Graph, s: i64, cap: usize) -> Result<MonomialIdeal> {
    let n = g.n();
    if s <= 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    if g.edge_count() == 0 {
        return Ok(MonomialIdeal::zero(n));
    }
    let s = u32::try_from(s).map_err(|_| Error::GeneratorCap { cap })?;
    let mut acc: Option<MonomialIdeal> = None;
    for cover in g.minimal_vertex_covers() {
        let next = match acc {
            None => prime_power(cover, s, n)?,
            Some(a) => intersect_prime_power(&a, cover, s),
        };
        if next.len() > cap {
            return Err(Error::GeneratorCap { cap });
        }
        acc = Some(next);
    }
    Ok(acc.expect("a graph with an edge has a minimal vertex cover"))
}

/// `I ∩ p_C^s`. A generator `g` with `d = deg_C(g) < s` contributes the
/// products `g·u` over monomials `u` of degree `s - d` on `C`; the result agrees
/// with the pairwise-lcm intersection.
fn intersect_prime_power(ideal: &MonomialIdeal, cover: VertexSet, s: u32) -> MonomialIdeal {
    let n = ideal.dim();
    let vars = cover.to_vec();
    let mut gens = Vec::new();
    let mut scratch = Vec::new();
    for g in ideal.generators() {
        let d: u32 = vars.iter().map(|&j| g.exponent(j)).sum();
        if d >= s {
            gens.push(g.clone());
            continue;
        }
        scratch.clear();
        let mut exps = alloc::vec![0u32; n];
        compositions(&vars, s - d, &mut exps, &mut scratch);
        gens.extend(scratch.iter().map(|u| g.mul(u)));
    }
    MonomialIdeal::from_unchecked(n, gens)
}

/// `I(H)^(s) + I(H')` for graphs on the same vertex set with disjoint edge sets.
pub fn mixed_ideal(h: &Graph, h_prime: &Graph, s: i64) -> Result<MonomialIdeal> {
    if h.n() != h_prime.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: h_prime.n(),
        });
    }
    if s <= 0 {
        return Err(Error::NonPositivePower(s));
    }
    if h.shares_edge_with(h_prime) {
        return Err(Error::Hypothesis("E(H) and E(H') must be disjoint".into()));
    }
    symbolic_power(h, s)?.sum(&edge_ideal(h_prime))
}
