use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::complex::{homology_of_facets, koszul_facets};
use super::FieldSpec;
use crate::error::{Error, Result};
use crate::monomial::{divides, MonomialIdeal};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiEntry {
    pub i: usize,
    pub b: Vec<u32>,
    pub rank: usize,
}

/// Nonzero multigraded Betti numbers `β_{i,b}(S/I)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    pub(crate) fn new(n: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, vec![0; n]), 1);
        Self { n, entries }
    }

    pub(crate) fn from_entries(n: usize, entries: impl IntoIterator<Item = BettiEntry>) -> Self {
        let mut t = Self {
            n,
            entries: BTreeMap::new(),
        };
        for e in entries {
            t.add(e.i, e.b, e.rank);
        }
        t
    }

    pub(crate) fn add(&mut self, i: usize, b: Vec<u32>, rank: usize) {
        if rank > 0 {
            *self.entries.entry((i, b)).or_insert(0) += rank;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, b: &[u32]) -> usize {
        self.entries.get(&(i, b.to_vec())).copied().unwrap_or(0)
    }

    /// Entries ordered by homological degree, then multidegree.
    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries.iter().map(|((i, b), &rank)| BettiEntry {
            i: *i,
            b: b.clone(),
            rank,
        })
    }

    /// Total Betti numbers `β_0, ..., β_pd`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = vec![0; self.projective_dimension() + 1];
        for ((i, _), r) in &self.entries {
            out[*i] += r;
        }
        out
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, r)| r)
            .sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Auslander–Buchsbaum: `depth S/I = n - pd S/I`.
    pub fn depth(&self) -> usize {
        self.n - self.projective_dimension()
    }
}

/// How [`betti_table_with`] walks the multidegree grid.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum GridSweep {
    /// Skip grid points that are not the lcm of the generators dividing them.
    #[default]
    LcmLattice,
    /// Compute homology at every grid point and assert that points off the
    /// lcm lattice contribute nothing.
    Full,
}

pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_table_with(ideal, field, GridSweep::LcmLattice)
}

/// Sweeps `b` over `∏_j {exponents of x_j among generators, and 0}` and sets
/// `β_{i+1,b}(S/I) = dim H̃_{i-1}(K^b(I))`.
pub fn betti_table_with(ideal: &MonomialIdeal, field: FieldSpec, sweep: GridSweep) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.dim();
    let mut table = BettiTable::new(n);
    if ideal.is_zero() {
        return Ok(table);
    }
    let axes: Vec<Vec<u32>> = (0..n)
        .map(|j| {
            let mut vals: Vec<u32> = ideal.generators().iter().map(|g| g.exponent(j)).collect();
            vals.push(0);
            vals.sort_unstable();
            vals.dedup();
            vals
        })
        .collect();
    let mut pos = vec![0usize; n];
    let mut b: Vec<u32> = vec![0; n];
    loop {
        let in_lattice = lcm_of_divisors_is(ideal, &b);
        if in_lattice || sweep == GridSweep::Full {
            let facets = koszul_facets(ideal, &b);
            let h = homology_of_facets(&facets, field);
            if !in_lattice {
                assert!(h.is_acyclic(), "nonzero Betti number off the lcm lattice at {:?}", b);
            }
            for (dim, rank) in h.nonzero() {
                table.add((dim + 2) as usize, b.clone(), rank);
            }
        }
        // Odometer step.
        let mut j = 0;
        loop {
            if j == n {
                return Ok(table);
            }
            pos[j] += 1;
            if pos[j] < axes[j].len() {
                b[j] = axes[j][pos[j]];
                break;
            }
            pos[j] = 0;
            b[j] = axes[j][0];
            j += 1;
        }
    }
}

/// True when `b` is the lcm of the generators dividing `x^b` (and some does).
fn lcm_of_divisors_is(ideal: &MonomialIdeal, b: &[u32]) -> bool {
    let mut reached = vec![false; b.len()];
    let mut any = false;
    for g in ideal.generators() {
        let e = g.exponents();
        if divides(e, b) {
            any = true;
            for (r, (&x, &y)) in reached.iter_mut().zip(e.iter().zip(b)) {
                *r |= x == y;
            }
        }
    }
    any && reached.iter().all(|&r| r)
}

pub fn projective_dimension(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(ideal, field)?.projective_dimension())
}

/// `depth S/I`; `n` for the zero ideal. The unit ideal has no depth.
pub fn depth(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(ideal, field)?.depth())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(text, n).unwrap()
    }

    #[test]
    fn koszul_of_two_variables() {
        let t = betti_table(&ideal("(x1, x2)", 2), FieldSpec::Rationals).unwrap();
        assert_eq!(t.totals(), [1, 2, 1]);
        assert_eq!(t.get(2, &[1, 1]), 1);
        assert_eq!(t.depth(), 0);
    }

    #[test]
    fn principal_and_path() {
        let t = betti_table(&ideal("(x1*x2)", 2), FieldSpec::Rationals).unwrap();
        assert_eq!(t.totals(), [1, 1]);
        assert_eq!(t.depth(), 1);

        let t = betti_table(&ideal("(x1*x2, x2*x3)", 3), FieldSpec::Rationals).unwrap();
        assert_eq!(t.totals(), [1, 2, 1]);
        assert_eq!(t.get(2, &[1, 1, 1]), 1);
        assert_eq!(t.depth(), 1);
    }

    #[test]
    fn zero_and_unit() {
        let t = betti_table(&MonomialIdeal::zero(4), FieldSpec::Rationals).unwrap();
        assert_eq!(t.totals(), [1]);
        assert_eq!(depth(&MonomialIdeal::zero(4), FieldSpec::Rationals), Ok(4));
        assert_eq!(
            depth(&MonomialIdeal::unit(2), FieldSpec::Rationals),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn cycle_of_length_five() {
        let c5 = ideal("(x1*x2, x2*x3, x3*x4, x4*x5, x1*x5)", 5);
        let t = betti_table(&c5, FieldSpec::Rationals).unwrap();
        assert_eq!(t.totals(), [1, 5, 5, 1]);
        assert_eq!(t.depth(), 2);
    }

    #[test]
    fn full_sweep_agrees() {
        for text in ["(x1^2, x1*x2, x2^2)", "(x1*x2, x2*x3^2, x1^3*x3)", "(x1*x2, x3*x4)"] {
            let n = 4;
            let i = ideal(text, n);
            for f in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
                assert_eq!(
                    betti_table_with(&i, f, GridSweep::Full).unwrap(),
                    betti_table(&i, f).unwrap()
                );
            }
        }
    }
}
