use alloc::vec;
use alloc::vec::Vec;

use super::rank::matrix_rank;
use super::FieldSpec;
use crate::error::{Error, Result};
use crate::monomial::{divides, MonomialIdeal};

/// A finite simplicial complex on variable indices `0..64`, faces as bitmasks.
///
/// The void complex has no faces at all; the irrelevant complex `{∅}` has only
/// the empty face. They differ in reduced homology (`H̃_{-1}({∅}) = K`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SimplicialComplex {
    Void,
    /// Faces sorted by size, then by mask. Always contains the empty face.
    Faces(Vec<u64>),
}

impl SimplicialComplex {
    /// The complex generated by `facets` (void when `facets` is empty).
    pub fn from_facets(facets: &[u64]) -> Self {
        if facets.is_empty() {
            return SimplicialComplex::Void;
        }
        let top = facets.iter().fold(0u64, |acc, f| acc | f);
        if top.count_ones() <= BITMAP_VERTEX_LIMIT {
            return SimplicialComplex::Faces(faces_by_bitmap(facets, top));
        }
        let mut faces = Vec::new();
        for &f in facets {
            let mut sub = f;
            loop {
                faces.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        faces.sort_unstable_by_key(|&m| (m.count_ones(), m));
        faces.dedup();
        SimplicialComplex::Faces(faces)
    }

    pub fn irrelevant() -> Self {
        SimplicialComplex::Faces(vec![0])
    }

    pub fn is_void(&self) -> bool {
        matches!(self, SimplicialComplex::Void)
    }

    pub fn faces(&self) -> &[u64] {
        match self {
            SimplicialComplex::Void => &[],
            SimplicialComplex::Faces(f) => f,
        }
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces().binary_search_by_key(&(face.count_ones(), face), |&m| (m.count_ones(), m)).is_ok()
    }

    /// Union of all faces.
    pub fn vertices(&self) -> u64 {
        self.faces().iter().fold(0, |acc, f| acc | f)
    }

    /// Closed under taking subsets.
    pub fn is_downward_closed(&self) -> bool {
        self.faces().iter().all(|&f| {
            (0..64)
                .filter(|j| f >> j & 1 == 1)
                .all(|j| self.contains(f & !(1 << j)))
        })
    }
}

const BITMAP_VERTEX_LIMIT: u32 = 16;

/// Marks faces in a table indexed by subsets of the `k` vertices of `top`,
/// then lists them by size and mask. Compressing preserves the mask order.
fn faces_by_bitmap(facets: &[u64], top: u64) -> Vec<u64> {
    let verts: Vec<u32> = (0..64).filter(|j| top >> j & 1 == 1).collect();
    let k = verts.len();
    let compress = |f: u64| {
        verts
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &v)| acc | ((f >> v & 1) as usize) << i)
    };
    let mut present = vec![false; 1 << k];
    for &f in facets {
        let local = compress(f);
        if present[local] {
            continue;
        }
        let mut sub = local;
        loop {
            present[sub] = true;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & local;
        }
    }
    let expand = |local: usize| {
        verts
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &v)| acc | ((local >> i & 1) as u64) << v)
    };
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); k + 1];
    for m in (0..1usize << k).filter(|&m| present[m]) {
        by_size[m.count_ones() as usize].push(expand(m));
    }
    by_size.concat()
}

/// `K^b(I)`: subsets `τ ⊆ supp(b)` with `x^b / x^τ ∈ I`. Void when `x^b ∉ I`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &[u32]) -> Result<SimplicialComplex> {
    if b.len() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.dim(),
            found: b.len(),
        });
    }
    Ok(SimplicialComplex::from_facets(&koszul_facets(ideal, b)))
}

/// One facet candidate per generator `g | x^b`: the support of `b` minus the
/// coordinates where `g` already reaches `b`. The list may contain non-maximal sets.
pub(crate) fn koszul_facets(ideal: &MonomialIdeal, b: &[u32]) -> Vec<u64> {
    let supp = support_of(b);
    ideal
        .generators()
        .iter()
        .filter(|g| divides(g.exponents(), b))
        .map(|g| {
            let tight = g
                .exponents()
                .iter()
                .zip(b)
                .enumerate()
                .filter(|(_, (&e, &bj))| bj > 0 && e == bj)
                .fold(0u64, |acc, (j, _)| acc | 1 << j);
            supp & !tight
        })
        .collect()
}

pub(crate) fn support_of(b: &[u32]) -> u64 {
    b.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (j, _)| acc | 1 << j)
}

/// Ranks of reduced homology; entry `k` is `dim H̃_{k-1}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ReducedHomology {
    pub ranks: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_dim`, for `dim >= -1`.
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// `(dim, rank)` for every nonzero group.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (k as isize - 1, r))
    }
}

pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: FieldSpec) -> ReducedHomology {
    match complex {
        SimplicialComplex::Void => ReducedHomology::default(),
        SimplicialComplex::Faces(faces) => homology_of_faces(faces, field),
    }
}

/// Reduced homology of a complex given by possibly redundant facets, with
/// shortcuts for cones over a single facet.
pub(crate) fn homology_of_facets(facets: &[u64], field: FieldSpec) -> ReducedHomology {
    if facets.is_empty() {
        return ReducedHomology::default();
    }
    let top = facets.iter().fold(0, |acc, f| acc | f);
    if facets.contains(&top) {
        // A simplex: acyclic unless it is {∅}.
        return if top == 0 {
            ReducedHomology { ranks: vec![1] }
        } else {
            ReducedHomology::default()
        };
    }
    // A vertex lying in every facet is a cone point.
    if facets.iter().fold(top, |acc, f| acc & f) != 0 {
        return ReducedHomology::default();
    }
    match SimplicialComplex::from_facets(facets) {
        SimplicialComplex::Faces(faces) => homology_of_faces(&faces, field),
        SimplicialComplex::Void => unreachable!(),
    }
}

/// `faces` sorted by (size, mask) and downward closed.
fn homology_of_faces(faces: &[u64], field: FieldSpec) -> ReducedHomology {
    let max_size = faces.last().map_or(0, |f| f.count_ones() as usize);
    // by_size[k] = faces with k vertices, i.e. (k-1)-dimensional.
    let mut by_size: Vec<&[u64]> = Vec::with_capacity(max_size + 1);
    let mut start = 0;
    for k in 0..=max_size {
        let end = start + faces[start..].partition_point(|f| f.count_ones() as usize == k);
        by_size.push(&faces[start..end]);
        start = end;
    }
    // rank_of[k] = rank of the boundary map from size-k faces to size-(k-1) faces.
    let mut rank_of = vec![0usize; max_size + 2];
    for k in 1..=max_size {
        rank_of[k] = boundary_rank(by_size[k - 1], by_size[k], field);
    }
    let ranks = (0..=max_size)
        .map(|k| by_size[k].len() - rank_of[k] - rank_of[k + 1])
        .collect();
    ReducedHomology { ranks }
}

fn boundary_rank(lower: &[u64], upper: &[u64], field: FieldSpec) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    // Rows indexed by the upper faces: rank is invariant under transposition.
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|&face| {
            let mut row = vec![0i64; lower.len()];
            let mut sign = 1;
            let mut rest = face;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let idx = lower
                    .binary_search(&(face & !bit))
                    .expect("complex is downward closed");
                row[idx] = sign;
                sign = -sign;
                rest &= rest - 1;
            }
            row
        })
        .collect();
    matrix_rank(&rows, field)
}
