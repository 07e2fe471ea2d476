//! Executable checks of the depth lower bounds in terms of the star packing
//! number `α₂`, and of the algebraic and combinatorial facts they rest on.
//!
//! Every numeric check yields a [`VerificationReport`]. A check runs in
//! [`Mode::Guaranteed`] when a theorem covers the instance; anything else is
//! [`Mode::Exploratory`] and a violation there is a finding, not a bug.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::constructions::{edge_ideal, mixed_ideal, symbolic_power};
use crate::error::{Error, Result};
use crate::graph::{Graph, StarPacking, VertexSet};
use crate::homology::{depth, FieldSpec};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CheckKind {
    /// `depth S/I(G) >= α₂(G)`.
    EdgeIdealBound,
    /// `depth S/I(G)^(s) >= α₂(G) - s + 1` for chordal `G`.
    ChordalSymbolic,
    /// `depth S/I(G)^(2) >= α₂(G) - 1` for every `G`.
    SecondSymbolic,
    /// `(I^(k) : xy) = (I^(k-1) : x) ∩ (I^(k-1) : y)` for an edge `xy`.
    ColonIdentity,
    /// `depth S/(I(H)^(s) + I(H')) >= α₂(G) - s + 1`.
    MixedChordal,
    /// `α₂(G \ A) >= α₂(G) - |W|` for `A ⊆ N[W]`.
    NeighborhoodDeletion,
    /// `α₂(G \ A) >= α₂(G) - d + 1` for a clique `W` of size `d` and admissible `A`.
    CliqueDeletion,
    /// `I(G)^s = I(G)^(s)` for forests.
    Forest,
    /// An accepted depth certificate with `q` rows gives `depth S/I >= q`.
    Certificate,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::EdgeIdealBound,
        CheckKind::ChordalSymbolic,
        CheckKind::SecondSymbolic,
        CheckKind::ColonIdentity,
        CheckKind::MixedChordal,
        CheckKind::NeighborhoodDeletion,
        CheckKind::CliqueDeletion,
        CheckKind::Forest,
        CheckKind::Certificate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::EdgeIdealBound => "cor22",
            CheckKind::ChordalSymbolic => "thm34",
            CheckKind::SecondSymbolic => "thm42",
            CheckKind::ColonIdentity => "lem41",
            CheckKind::MixedChordal => "prop33",
            CheckKind::NeighborhoodDeletion => "lem31",
            CheckKind::CliqueDeletion => "lem32",
            CheckKind::Forest => "forest",
            CheckKind::Certificate => "prop21",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    Guaranteed,
    Exploratory,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Guaranteed => "guaranteed",
            Mode::Exploratory => "exploratory",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Verdict {
    Holds,
    Violated,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Violated
        }
    }
}

/// One checked instance. For numeric checks `slack = value - bound` and the
/// verdict holds exactly when `slack >= 0`; identity checks leave the numeric
/// fields empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub check: CheckKind,
    pub mode: Mode,
    /// `G` (for mixed ideals, the union `H ∪ H'`).
    pub graph: Option<Graph>,
    pub h: Option<Graph>,
    pub h_prime: Option<Graph>,
    pub ideal: Option<MonomialIdeal>,
    pub chordal: Option<bool>,
    /// `s`, or `k` for the colon identity.
    pub s: Option<i64>,
    pub alpha2: Option<usize>,
    /// The measured side: a depth, or `α₂(G \ A)` for the packing lemmas.
    pub value: Option<i64>,
    pub bound: Option<i64>,
    pub slack: Option<i64>,
    pub verdict: Verdict,
    pub characteristic: u32,
    pub millis: u64,
    pub detail: String,
}

impl VerificationReport {
    fn new(check: CheckKind, mode: Mode) -> Self {
        Self {
            id: String::new(),
            check,
            mode,
            graph: None,
            h: None,
            h_prime: None,
            ideal: None,
            chordal: None,
            s: None,
            alpha2: None,
            value: None,
            bound: None,
            slack: None,
            verdict: Verdict::Holds,
            characteristic: 0,
            millis: 0,
            detail: String::new(),
        }
    }

    fn with_inequality(mut self, value: i64, bound: i64) -> Self {
        self.value = Some(value);
        self.bound = Some(bound);
        self.slack = Some(value - bound);
        self.verdict = Verdict::from_bool(value >= bound);
        self
    }

    /// Violated while a theorem covers the instance.
    pub fn is_guaranteed_violation(&self) -> bool {
        self.mode == Mode::Guaranteed && self.verdict == Verdict::Violated
    }
}

/// One row `(b_{i,0}; b_{i,1}, ..., b_{i,t_i})` of a depth certificate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CertificateRow {
    pub head: usize,
    pub tail: Vec<usize>,
}

/// Distinct variables arranged in rows; see [`check_certificate`].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DepthCertificate {
    rows: Vec<CertificateRow>,
}

impl DepthCertificate {
    pub fn new(rows: Vec<CertificateRow>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for row in &rows {
            for &v in core::iter::once(&row.head).chain(&row.tail) {
                if v >= 64 {
                    return Err(Error::VertexOutOfRange { vertex: v, n: 64 });
                }
                if seen.contains(v) {
                    return Err(Error::RepeatedCertificateVariable(v));
                }
                seen.insert(v);
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[CertificateRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

impl fmt::Display for DepthCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "(x{};[", row.head + 1)?;
            for (j, t) in row.tail.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "x{}", t + 1)?;
            }
            f.write_str("])")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CertificateViolation {
    /// A generator has degree >= 2 in a tail variable.
    SquaredTailVariable { row: usize, variable: usize, generator: Monomial },
    /// A generator divisible by the head avoids every tail variable.
    UncoveredHead { row: usize, generator: Monomial },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CertificateCheck {
    pub accepted: bool,
    /// The certified lower bound on depth: the number of rows when accepted, else 0.
    pub q: usize,
    pub violation: Option<CertificateViolation>,
}

/// Tests the two conditions under which a certificate with `q` rows forces
/// `depth S/I >= q`, against the minimal generators `u` of `I`:
/// every tail variable `b` has `deg_b(u) <= 1`, and whenever the head of a row
/// divides `u`, some tail variable of that row divides `u` too.
pub fn check_certificate(ideal: &MonomialIdeal, cert: &DepthCertificate) -> Result<CertificateCheck> {
    let n = ideal.dim();
    for row in cert.rows() {
        for &v in core::iter::once(&row.head).chain(&row.tail) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
    }
    let reject = |violation| {
        Ok(CertificateCheck {
            accepted: false,
            q: 0,
            violation: Some(violation),
        })
    };
    for (r, row) in cert.rows().iter().enumerate() {
        for u in ideal.generators() {
            if let Some(&v) = row.tail.iter().find(|&&v| u.exponent(v) > 1) {
                return reject(CertificateViolation::SquaredTailVariable {
                    row: r,
                    variable: v,
                    generator: u.clone(),
                });
            }
            if u.exponent(row.head) > 0 && row.tail.iter().all(|&v| u.exponent(v) == 0) {
                return reject(CertificateViolation::UncoveredHead {
                    row: r,
                    generator: u.clone(),
                });
            }
        }
    }
    Ok(CertificateCheck {
        accepted: true,
        q: cert.len(),
        violation: None,
    })
}

/// One row per center: the center followed by its open neighborhood.
pub fn certificate_from_star_packing(g: &Graph, packing: &StarPacking) -> Result<DepthCertificate> {
    let packing = g.validate_star_packing(packing.centers)?;
    let rows = packing
        .centers
        .iter()
        .map(|c| CertificateRow {
            head: c,
            tail: g.neighbors(c).to_vec(),
        })
        .collect();
    DepthCertificate::new(rows)
}

fn to_i64(x: usize) -> i64 {
    x as i64
}

/// `depth S/I(G) >= α₂(G)`, together with the certificate read off a maximum
/// star packing.
pub fn check_edge_ideal_bound(g: &Graph, field: FieldSpec) -> Result<VerificationReport> {
    let (alpha2, packing) = g.star_packing_number();
    let ideal = edge_ideal(g);
    let d = depth(&ideal, field)?;
    let cert = certificate_from_star_packing(g, &packing)?;
    let cert_check = check_certificate(&ideal, &cert)?;
    let mut r = VerificationReport::new(CheckKind::EdgeIdealBound, Mode::Guaranteed)
        .with_inequality(to_i64(d), to_i64(alpha2));
    r.graph = Some(g.clone());
    r.chordal = Some(g.is_chordal());
    r.s = Some(1);
    r.alpha2 = Some(alpha2);
    r.characteristic = field.characteristic();
    r.detail = format!("witness={} certificate={}", packing.centers, cert);
    if !cert_check.accepted || cert_check.q != alpha2 {
        r.verdict = Verdict::Violated;
        r.detail = format!("{} rejected: {:?}", r.detail, cert_check.violation);
    }
    Ok(r)
}

/// `depth S/I(G)^(s)` against `α₂(G) - s + 1`.
///
/// Guaranteed when `G` is chordal, or `s <= 2`; other instances are exploratory.
/// With `require_chordal`, a non-chordal `G` is rejected.
pub fn check_symbolic_depth_bound(
    g: &Graph,
    s: i64,
    require_chordal: bool,
    field: FieldSpec,
) -> Result<VerificationReport> {
    if s < 1 {
        return Err(Error::NonPositivePower(s));
    }
    let chordal = g.is_chordal();
    if require_chordal && !chordal {
        return Err(Error::Hypothesis("the graph is not chordal".into()));
    }
    let check = if chordal || s != 2 {
        CheckKind::ChordalSymbolic
    } else {
        CheckKind::SecondSymbolic
    };
    let mode = if chordal || s <= 2 {
        Mode::Guaranteed
    } else {
        Mode::Exploratory
    };
    let (alpha2, packing) = g.star_packing_number();
    let d = depth(&symbolic_power(g, s)?, field)?;
    let mut r = VerificationReport::new(check, mode).with_inequality(to_i64(d), to_i64(alpha2) - s + 1);
    r.graph = Some(g.clone());
    r.chordal = Some(chordal);
    r.s = Some(s);
    r.alpha2 = Some(alpha2);
    r.characteristic = field.characteristic();
    r.detail = format!("witness={}", packing.centers);
    Ok(r)
}

/// `depth S/(I(H)^(s) + I(H'))` against `α₂(H ∪ H') - s + 1`, under the
/// hypotheses that the edge sets are disjoint and both `H` and `H ∪ H'` are chordal.
pub fn check_mixed_bound(h: &Graph, h_prime: &Graph, s: i64, field: FieldSpec) -> Result<VerificationReport> {
    if h.n() != h_prime.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: h_prime.n(),
        });
    }
    if s < 1 {
        return Err(Error::NonPositivePower(s));
    }
    if h.shares_edge_with(h_prime) {
        return Err(Error::Hypothesis("E(H) and E(H') intersect".into()));
    }
    if !h.is_chordal() {
        return Err(Error::Hypothesis("H is not chordal".into()));
    }
    let g = h.union(h_prime)?;
    if !g.is_chordal() {
        return Err(Error::Hypothesis("H ∪ H' is not chordal".into()));
    }
    let (alpha2, _) = g.star_packing_number();
    let d = depth(&mixed_ideal(h, h_prime, s)?, field)?;
    let mut r = VerificationReport::new(CheckKind::MixedChordal, Mode::Guaranteed)
        .with_inequality(to_i64(d), to_i64(alpha2) - s + 1);
    r.graph = Some(g);
    r.h = Some(h.clone());
    r.h_prime = Some(h_prime.clone());
    r.chordal = Some(true);
    r.s = Some(s);
    r.alpha2 = Some(alpha2);
    r.characteristic = field.characteristic();
    Ok(r)
}

/// Both sides of the colon identity for an edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColonIdentity {
    /// `(I(G)^(k) : xy)`.
    pub lhs: MonomialIdeal,
    /// `(I(G)^(k-1) : x) ∩ (I(G)^(k-1) : y)`.
    pub rhs: MonomialIdeal,
}

impl ColonIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn check_colon_identity(g: &Graph, edge: (usize, usize), k: i64) -> Result<ColonIdentity> {
    let (x, y) = edge;
    if !g.has_edge(x, y) {
        return Err(Error::Hypothesis(format!("{}-{} is not an edge", x, y)));
    }
    if k < 2 {
        return Err(Error::Hypothesis(format!("k must be at least 2, got {}", k)));
    }
    let n = g.n();
    let vx = Monomial::variable(n, x);
    let vy = Monomial::variable(n, y);
    let lhs = symbolic_power(g, k)?.colon(&vx.mul(&vy))?;
    let prev = symbolic_power(g, k - 1)?;
    let rhs = prev.colon(&vx)?.intersect(&prev.colon(&vy)?)?;
    Ok(ColonIdentity { lhs, rhs })
}

pub fn report_colon_identity(g: &Graph, edge: (usize, usize), k: i64) -> Result<VerificationReport> {
    let id = check_colon_identity(g, edge, k)?;
    let mut r = VerificationReport::new(CheckKind::ColonIdentity, Mode::Guaranteed);
    r.verdict = Verdict::from_bool(id.holds());
    r.graph = Some(g.clone());
    r.s = Some(k);
    r.detail = format!("edge={}-{} lhs={} rhs={}", edge.0, edge.1, id.lhs, id.rhs);
    Ok(r)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PackingLemma {
    /// `A ⊆ ⋃_{x∈W} N[x]` gives `α₂(G \ A) >= α₂(G) - |W|`.
    NeighborhoodDeletion,
    /// `W = [x1, ..., xd]` a clique, `A ⊆ ⋃ N(x_i)`, `N(x1) \ {x2..xd} ⊆ A` and
    /// `x1 ∉ A` give `α₂(G \ A) >= α₂(G) - d + 1`.
    CliqueDeletion,
}

/// Validates the hypotheses of one of the packing lemmas and compares both
/// packing numbers exactly. For [`PackingLemma::CliqueDeletion`], `w[0]` plays `x1`.
pub fn check_packing_deletion_lemmas(
    g: &Graph,
    w: &[usize],
    a: VertexSet,
    lemma: PackingLemma,
) -> Result<VerificationReport> {
    let n = g.n();
    if let Some(&v) = w.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let wset: VertexSet = w.iter().copied().collect();
    if wset.len() != w.len() {
        return Err(Error::Hypothesis("W lists a vertex twice".into()));
    }
    let (bound_drop, check) = match lemma {
        PackingLemma::NeighborhoodDeletion => {
            if !a.is_subset(g.closed_neighborhood_of(wset)) {
                return Err(Error::Hypothesis("A is not inside the closed neighborhood of W".into()));
            }
            (to_i64(w.len()), CheckKind::NeighborhoodDeletion)
        }
        PackingLemma::CliqueDeletion => {
            let (&x1, rest) = w
                .split_first()
                .ok_or_else(|| Error::Hypothesis("W must be nonempty".into()))?;
            if !g.is_clique(wset) {
                return Err(Error::Hypothesis("W is not a clique".into()));
            }
            if !a.is_subset(g.neighborhood_of(wset)) {
                return Err(Error::Hypothesis("A is not inside the open neighborhood of W".into()));
            }
            let others: VertexSet = rest.iter().copied().collect();
            if !g.neighbors(x1).difference(others).is_subset(a) {
                return Err(Error::Hypothesis("A misses a neighbor of x1 outside W".into()));
            }
            if a.contains(x1) {
                return Err(Error::Hypothesis("x1 lies in A".into()));
            }
            (to_i64(w.len()) - 1, CheckKind::CliqueDeletion)
        }
    };
    let (alpha_before, _) = g.star_packing_number();
    let (rest, _) = g.delete_vertices(a)?;
    let (alpha_after, _) = rest.star_packing_number();
    let mut r = VerificationReport::new(check, Mode::Guaranteed)
        .with_inequality(to_i64(alpha_after), to_i64(alpha_before) - bound_drop);
    r.graph = Some(g.clone());
    r.chordal = Some(g.is_chordal());
    r.alpha2 = Some(alpha_before);
    r.detail = format!("W={:?} A={}", w, a);
    Ok(r)
}

/// `I(G)^s == I(G)^(s)` for a forest `G`.
pub fn check_forest_power_coincidence(g: &Graph, s: i64) -> Result<bool> {
    if !g.is_forest() {
        return Err(Error::Hypothesis("the graph has a cycle".into()));
    }
    if s < 1 {
        return Err(Error::NonPositivePower(s));
    }
    let i = edge_ideal(g);
    if i.is_zero() {
        return Ok(symbolic_power(g, s)?.is_zero());
    }
    Ok(i.power(s)? == symbolic_power(g, s)?)
}

pub fn report_forest_power_coincidence(g: &Graph, s: i64) -> Result<VerificationReport> {
    let holds = check_forest_power_coincidence(g, s)?;
    let mut r = VerificationReport::new(CheckKind::Forest, Mode::Guaranteed);
    r.verdict = Verdict::from_bool(holds);
    r.graph = Some(g.clone());
    r.chordal = Some(true);
    r.s = Some(s);
    Ok(r)
}

/// Checks a certificate against the exact depth: acceptance with `q` rows must
/// come with `depth S/I >= q`. A rejected certificate certifies only `q = 0`.
pub fn check_certificate_soundness(
    ideal: &MonomialIdeal,
    cert: &DepthCertificate,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let verdict = check_certificate(ideal, cert)?;
    let d = depth(ideal, field)?;
    let mut r = VerificationReport::new(CheckKind::Certificate, Mode::Guaranteed)
        .with_inequality(to_i64(d), to_i64(verdict.q));
    r.ideal = Some(ideal.clone());
    r.characteristic = field.characteristic();
    r.detail = format!("certificate={} accepted={}", cert, verdict.accepted);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn ideal(text: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(text, n).unwrap()
    }

    fn row(head: usize, tail: &[usize]) -> CertificateRow {
        CertificateRow {
            head,
            tail: tail.to_vec(),
        }
    }

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn certificate_examples() {
        let p5 = Graph::path(5).unwrap();
        let i = edge_ideal(&p5);
        let cert = DepthCertificate::new(vec![row(0, &[1]), row(3, &[2, 4])]).unwrap();
        let c = check_certificate(&i, &cert).unwrap();
        assert!(c.accepted);
        assert_eq!(c.q, 2);
        assert_eq!(depth(&i, Q).unwrap(), 2);

        let from_packing =
            certificate_from_star_packing(&p5, &StarPacking { centers: set(&[0, 3]) }).unwrap();
        assert_eq!(from_packing, cert);

        let sq = ideal("(x1^2*x2)", 2);
        let bad = DepthCertificate::new(vec![row(1, &[0])]).unwrap();
        let c = check_certificate(&sq, &bad).unwrap();
        assert!(!c.accepted);
        assert!(matches!(
            c.violation,
            Some(CertificateViolation::SquaredTailVariable { variable: 0, .. })
        ));

        let c = check_certificate(&sq, &DepthCertificate::default()).unwrap();
        assert!(c.accepted);
        assert_eq!(c.q, 0);

        assert_eq!(
            DepthCertificate::new(vec![row(0, &[1]), row(1, &[2])]),
            Err(Error::RepeatedCertificateVariable(1))
        );
    }

    #[test]
    fn uncovered_head_is_rejected() {
        let i = ideal("(x1*x2, x1*x3)", 3);
        let cert = DepthCertificate::new(vec![row(0, &[1])]).unwrap();
        let c = check_certificate(&i, &cert).unwrap();
        assert!(matches!(c.violation, Some(CertificateViolation::UncoveredHead { row: 0, .. })));
    }

    #[test]
    fn packing_certificates() {
        let k3 = Graph::complete(3).unwrap();
        let cert = certificate_from_star_packing(&k3, &StarPacking { centers: set(&[0]) }).unwrap();
        assert_eq!(cert.rows(), &[row(0, &[1, 2])]);
        assert_eq!(check_certificate(&edge_ideal(&k3), &cert).unwrap().q, 1);

        let e = Graph::empty(3).unwrap();
        let cert = certificate_from_star_packing(&e, &StarPacking { centers: e.vertices() }).unwrap();
        assert_eq!(cert.len(), 3);
        let c = check_certificate(&edge_ideal(&e), &cert).unwrap();
        assert!(c.accepted && c.q == 3);

        let p5 = Graph::path(5).unwrap();
        assert_eq!(
            certificate_from_star_packing(&p5, &StarPacking { centers: set(&[0, 2]) }),
            Err(Error::InvalidStarPacking(0, 2))
        );
    }

    #[test]
    fn symbolic_bound_examples() {
        let p7 = Graph::path(7).unwrap();
        let r = check_symbolic_depth_bound(&p7, 2, true, Q).unwrap();
        assert_eq!(r.alpha2, Some(3));
        assert_eq!(r.bound, Some(2));
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.mode, Mode::Guaranteed);

        let c5 = Graph::cycle(5).unwrap();
        let r = check_symbolic_depth_bound(&c5, 2, false, Q).unwrap();
        assert_eq!((r.alpha2, r.bound, r.verdict), (Some(1), Some(0), Verdict::Holds));
        assert_eq!(r.check, CheckKind::SecondSymbolic);
        assert!(check_symbolic_depth_bound(&c5, 2, true, Q).is_err());
        let r = check_symbolic_depth_bound(&c5, 3, false, Q).unwrap();
        assert_eq!(r.mode, Mode::Exploratory);

        let p3 = Graph::path(3).unwrap();
        let r = check_symbolic_depth_bound(&p3, 1, true, Q).unwrap();
        assert_eq!((r.value, r.alpha2, r.bound, r.slack), (Some(1), Some(1), Some(1), Some(0)));
    }

    #[test]
    fn mixed_bound_examples() {
        let h = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let hp = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let r = check_mixed_bound(&h, &hp, 2, Q).unwrap();
        assert_eq!((r.bound, r.verdict), (Some(0), Verdict::Holds));

        let g = Graph::path(5).unwrap();
        let none = Graph::empty(5).unwrap();
        let mixed = check_mixed_bound(&g, &none, 2, Q).unwrap();
        let plain = check_symbolic_depth_bound(&g, 2, true, Q).unwrap();
        assert_eq!((mixed.value, mixed.bound), (plain.value, plain.bound));

        assert!(check_mixed_bound(&h, &h, 2, Q).is_err());
        let c4 = Graph::cycle(4).unwrap();
        assert!(check_mixed_bound(&c4, &Graph::empty(4).unwrap(), 2, Q).is_err());
    }

    #[test]
    fn colon_identity_examples() {
        let k3 = Graph::complete(3).unwrap();
        let id = check_colon_identity(&k3, (0, 1), 2).unwrap();
        assert!(id.holds());
        assert_eq!(id.lhs, ideal("(x3, x1*x2)", 3));

        let edge = Graph::path(2).unwrap();
        let id = check_colon_identity(&edge, (0, 1), 2).unwrap();
        assert_eq!(id.lhs, ideal("(x1*x2)", 2));
        assert!(id.holds());

        assert!(check_colon_identity(&Graph::path(3).unwrap(), (0, 1), 3).unwrap().holds());
        assert!(check_colon_identity(&Graph::path(3).unwrap(), (0, 2), 2).is_err());
        assert!(check_colon_identity(&k3, (0, 1), 1).is_err());
    }

    #[test]
    fn packing_lemma_examples() {
        let p5 = Graph::path(5).unwrap();
        let r = check_packing_deletion_lemmas(&p5, &[2], set(&[1, 2, 3]), PackingLemma::NeighborhoodDeletion).unwrap();
        assert_eq!((r.alpha2, r.value, r.bound), (Some(2), Some(2), Some(1)));
        assert_eq!(r.verdict, Verdict::Holds);

        let p3 = Graph::path(3).unwrap();
        let r = check_packing_deletion_lemmas(&p3, &[0, 1], set(&[2]), PackingLemma::CliqueDeletion).unwrap();
        assert_eq!((r.value, r.bound), (Some(1), Some(0)));

        let r = check_packing_deletion_lemmas(&p5, &[], VertexSet::EMPTY, PackingLemma::NeighborhoodDeletion).unwrap();
        assert_eq!(r.slack, Some(0));

        // Hypothesis failures.
        assert!(check_packing_deletion_lemmas(&p5, &[0], set(&[3]), PackingLemma::NeighborhoodDeletion).is_err());
        assert!(check_packing_deletion_lemmas(&p3, &[0, 2], set(&[1]), PackingLemma::CliqueDeletion).is_err());
        assert!(check_packing_deletion_lemmas(&p3, &[1], set(&[0]), PackingLemma::CliqueDeletion).is_err());
        assert!(check_packing_deletion_lemmas(&p3, &[0, 1], set(&[0, 2]), PackingLemma::CliqueDeletion).is_err());
    }

    #[test]
    fn forest_examples() {
        assert!(check_forest_power_coincidence(&Graph::path(3).unwrap(), 2).unwrap());
        assert!(check_forest_power_coincidence(&Graph::path(2).unwrap(), 3).unwrap());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(check_forest_power_coincidence(&star, 2).unwrap());
        assert!(check_forest_power_coincidence(&Graph::cycle(3).unwrap(), 2).is_err());
        assert!(check_forest_power_coincidence(&Graph::empty(3).unwrap(), 2).unwrap());
    }

    #[test]
    fn edge_ideal_bound_is_tight_on_p3() {
        let r = check_edge_ideal_bound(&Graph::path(3).unwrap(), Q).unwrap();
        assert_eq!(r.slack, Some(0));
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn soundness_report() {
        let i = edge_ideal(&Graph::path(5).unwrap());
        let cert = DepthCertificate::new(vec![row(0, &[1]), row(3, &[2, 4])]).unwrap();
        let r = check_certificate_soundness(&i, &cert, Q).unwrap();
        assert_eq!((r.value, r.bound, r.verdict), (Some(2), Some(2), Verdict::Holds));
    }
}
