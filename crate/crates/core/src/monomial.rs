//! Monomials and monomial ideals in `K[x1, ..., xn]`.
//!
//! A [`MonomialIdeal`] is always stored by its minimal generators, sorted in the
//! canonical order of [`Monomial`] (degree first, then lexicographically with
//! `x1 > x2 > ...`). Minimal generators of a monomial ideal are unique, so
//! structural equality is ideal equality.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_{j+1}` (0-based index `j`).
    pub fn variable(n: usize, j: usize) -> Self {
        let mut exps = vec![0; n];
        exps[j] = 1;
        Self { exps }
    }

    /// Squarefree monomial on the variables whose bits are set in `mask`.
    pub fn from_support(n: usize, mask: u64) -> Self {
        Self {
            exps: (0..n).map(|j| ((mask >> j) & 1) as u32).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.exps[j]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (j, _)| acc | (1 << j))
    }

    /// Does `self` divide `other`? Both must live in the same ring.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        divides(&self.exps, &other.exps)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        assert_eq!(self.dim(), other.dim(), "monomials from different rings");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Parses the text form (`x3^2*x5`, `1`). Variables are 1-based.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut exps = vec![0u32; n];
        for (var, exp) in parse_factors(text)? {
            if var >= n {
                return Err(Error::Parse(alloc::format!(
                    "variable x{} outside a ring with {} variables",
                    var + 1,
                    n
                )));
            }
            exps[var] += exp;
        }
        Ok(Self { exps })
    }
}

/// Parses a product of variables into `(0-based index, exponent)` pairs.
pub(crate) fn parse_factors(text: &str) -> Result<Vec<(usize, u32)>> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    let bad = |what: &str| Error::Parse(alloc::format!("bad monomial `{}`: {}", text, what));
    let mut out = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let rest = factor.strip_prefix('x').ok_or_else(|| bad("expected `x<index>`"))?;
        let (idx, exp) = match rest.split_once('^') {
            Some((i, e)) => (i.trim(), e.trim().parse::<u32>().map_err(|_| bad("bad exponent"))?),
            None => (rest, 1),
        };
        let idx: usize = idx.parse().map_err(|_| bad("bad variable index"))?;
        if idx == 0 {
            return Err(bad("variables are numbered from x1"));
        }
        out.push((idx - 1, exp));
    }
    Ok(out)
}

#[inline]
pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", j + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal, held as its sorted antichain of minimal generators.
///
/// No generators is the zero ideal; the single generator `1` is the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        Self { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, n: usize) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        Ok(Self::from_unchecked(n, gens))
    }

    /// Minimalizes without checking dimensions.
    pub(crate) fn from_unchecked(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        // Canonical order is degree-first, so a divisor of g always precedes g.
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| divides(&k.exps, &g.exps)) {
                kept.push(g);
            }
        }
        Self { n, gens: kept }
    }

    /// Prime ideal generated by the variables in `mask`.
    pub fn prime(n: usize, mask: u64) -> Self {
        Self {
            n,
            gens: (0..n)
                .filter(|j| mask >> j & 1 == 1)
                .map(|j| Monomial::variable(n, j))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Bitmask of the variables occurring in some minimal generator.
    pub fn support(&self) -> u64 {
        self.gens.iter().fold(0, |acc, g| acc | g.support())
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found,
            })
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_unchecked(self.n, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// Ordinary power `I^s`, `s >= 1`.
    pub fn power(&self, s: i64) -> Result<MonomialIdeal> {
        if s <= 0 {
            return Err(Error::NonPositivePower(s));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// Left fold of [`intersect`](Self::intersect); `None` for an empty family.
    pub fn intersect_all<'a>(
        ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
    ) -> Result<Option<MonomialIdeal>> {
        let mut acc: Option<MonomialIdeal> = None;
        for ideal in ideals {
            acc = Some(match acc {
                None => ideal.clone(),
                Some(a) => a.intersect(ideal)?,
            });
        }
        Ok(acc)
    }

    /// The colon ideal `(I : u)`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_dim(u.dim())?;
        let gens = self.gens.iter().map(|g| g.strip(u)).collect();
        Ok(Self::from_unchecked(self.n, gens))
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_dim(m.dim())?;
        Ok(self.contains_exps(&m.exps))
    }

    pub(crate) fn contains_exps(&self, exps: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(&g.exps, exps))
    }

    /// `I ⊆ J`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.n)?;
        Ok(self.gens.iter().all(|g| other.contains_exps(&g.exps)))
    }

    /// Ideal equality. The derived `PartialEq` agrees with this whenever the
    /// dimensions match.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.n)?;
        Ok(self.gens == other.gens)
    }

    /// The same ideal in a larger ring, new variables appended at the end.
    pub fn extend_dim(&self, n: usize) -> Result<MonomialIdeal> {
        if n < self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: n,
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exps.clone();
                e.resize(n, 0);
                Monomial::new(e)
            })
            .collect();
        Ok(Self::from_unchecked(n, gens))
    }

    /// Renames variable `j` to `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        self.check_dim(perm.len())?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; self.n];
                for (j, &x) in g.exps.iter().enumerate() {
                    e[perm[j]] = x;
                }
                Monomial::new(e)
            })
            .collect();
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// Parses `(x1*x2, x2*x3)`, `(0)` or `(1)`; the parentheses are optional.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let gens = parse_generator_list(text)?
            .iter()
            .map(|g| Monomial::parse(g, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unchecked(n, gens))
    }

    /// Parses like [`parse`](Self::parse), taking the ring to be `K[x1..xk]`
    /// with `k` the largest variable index mentioned.
    pub fn parse_infer_dim(text: &str) -> Result<Self> {
        let list = parse_generator_list(text)?;
        let mut n = 0;
        for g in &list {
            for (var, _) in parse_factors(g)? {
                n = n.max(var + 1);
            }
        }
        Self::parse(text, n)
    }
}

fn parse_generator_list(text: &str) -> Result<Vec<String>> {
    let t = text.trim();
    let inner = match (t.strip_prefix('('), t.ends_with(')')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => t,
        _ => return Err(Error::Parse(alloc::format!("unbalanced parentheses in `{}`", t))),
    };
    let inner = inner.trim();
    if inner.is_empty() || inner == "0" {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').map(|s| s.trim().to_string()).collect())
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g)?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn m(text: &str, n: usize) -> Monomial {
        Monomial::parse(text, n).unwrap()
    }

    fn ideal(text: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(text, n).unwrap()
    }

    #[test]
    fn text_form() {
        assert_eq!(format!("{}", m("x3^2*x5", 5)), "x3^2*x5");
        assert_eq!(format!("{}", m("x5*x3*x3", 5)), "x3^2*x5");
        assert_eq!(format!("{}", Monomial::one(3)), "1");
        assert_eq!(format!("{}", MonomialIdeal::zero(2)), "(0)");
        assert_eq!(format!("{}", MonomialIdeal::unit(2)), "(1)");
        assert_eq!(
            format!("{}", ideal("(x2*x3, x1*x2)", 3)),
            "(x1*x2, x2*x3)"
        );
        assert!(Monomial::parse("y1", 2).is_err());
        assert!(Monomial::parse("x3", 2).is_err());
        assert!(Monomial::parse("x0", 2).is_err());
    }

    #[test]
    fn minimalize_examples() {
        let gens = [m("x1*x2", 3), m("x1*x2*x3", 3), m("x3^2", 3)];
        let i = MonomialIdeal::minimalize(gens, 3).unwrap();
        assert_eq!(i.generators(), &[m("x1*x2", 3), m("x3^2", 3)]);

        assert!(MonomialIdeal::minimalize([], 2).unwrap().is_zero());

        let chain = [m("x1", 1), m("x1^2", 1), m("x1^3", 1)];
        assert_eq!(MonomialIdeal::minimalize(chain, 1).unwrap(), ideal("(x1)", 1));

        let err = MonomialIdeal::minimalize([m("x1", 1)], 2).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn sum_examples() {
        assert_eq!(
            ideal("(x1*x2)", 3).sum(&ideal("(x2*x3)", 3)).unwrap(),
            ideal("(x1*x2, x2*x3)", 3)
        );
        let i = ideal("(x1*x2, x3^2)", 3);
        assert_eq!(i.sum(&MonomialIdeal::zero(3)).unwrap(), i);
        assert_eq!(
            ideal("(x1)", 2).sum(&ideal("(x1*x2)", 2)).unwrap(),
            ideal("(x1)", 2)
        );
        assert!(ideal("(x1)", 2).sum(&ideal("(x1)", 3)).is_err());
    }

    #[test]
    fn power_examples() {
        assert_eq!(
            ideal("(x1, x2)", 2).power(2).unwrap(),
            ideal("(x1^2, x1*x2, x2^2)", 2)
        );
        assert_eq!(
            ideal("(x1*x2, x2*x3)", 3).power(2).unwrap(),
            ideal("(x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2)", 3)
        );
        let i = ideal("(x1*x2, x3^2)", 3);
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(i.power(0).unwrap_err(), Error::NonPositivePower(0));
        assert_eq!(i.power(-1).unwrap_err(), Error::NonPositivePower(-1));
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(
            ideal("(x2^2)", 3)
                .intersect(&ideal("(x1^2, x1*x3, x3^2)", 3))
                .unwrap(),
            ideal("(x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2)", 3)
        );
        assert_eq!(
            ideal("(x1)", 2).intersect(&ideal("(x2)", 2)).unwrap(),
            ideal("(x1*x2)", 2)
        );
        let i = ideal("(x1*x2, x3^2)", 3);
        assert_eq!(i.intersect(&i).unwrap(), i);
        assert!(MonomialIdeal::intersect_all([]).unwrap().is_none());
    }

    #[test]
    fn colon_examples() {
        let p3 = ideal("(x1*x2, x2*x3)", 3);
        assert_eq!(p3.colon(&m("x2", 3)).unwrap(), ideal("(x1, x3)", 3));
        assert_eq!(p3.colon(&Monomial::one(3)).unwrap(), p3);
        assert_eq!(
            ideal("(x1*x2)", 3).colon(&m("x3", 3)).unwrap(),
            ideal("(x1*x2)", 3)
        );
        assert!(p3.colon(&Monomial::one(2)).is_err());
    }

    #[test]
    fn membership_examples() {
        let sq = ideal("(x1*x2, x2*x3)", 3).power(2).unwrap();
        assert!(sq.contains(&m("x1^2*x2^2*x3", 3)).unwrap());
        assert!(!ideal("(x1*x2)", 3).contains(&Monomial::one(3)).unwrap());
        let max = ideal("(x1, x2)", 2);
        assert!(max.intersect(&max).unwrap().equals(&max).unwrap());
        assert!(max.contains(&Monomial::one(3)).is_err());
    }

    #[test]
    fn unit_and_prime() {
        let u = MonomialIdeal::unit(3);
        assert!(u.is_unit());
        assert!(u.contains(&Monomial::one(3)).unwrap());
        assert_eq!(MonomialIdeal::prime(3, 0b101), ideal("(x1, x3)", 3));
        assert_eq!(MonomialIdeal::parse("(1)", 2).unwrap(), MonomialIdeal::unit(2));
        assert_eq!(MonomialIdeal::parse_infer_dim("(x1*x4)").unwrap().dim(), 4);
    }

    #[test]
    fn canonical_order_is_graded_then_lex() {
        let i = ideal("(x2^2*x3^2, x1*x3, x1^2*x2^2)", 3);
        assert_eq!(format!("{}", i), "(x1*x3, x1^2*x2^2, x2^2*x3^2)");
    }
}
