//! Verification campaigns: a JSON config picks a check, an instance family and
//! a seed; instances are generated sequentially, checked in parallel, and the
//! reports merged in instance order.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use edgedepth_core::homology::TAYLOR_MAX_GENERATORS;
use edgedepth_core::verify::{
    check_certificate_soundness, check_edge_ideal_bound, check_mixed_bound,
    check_packing_deletion_lemmas, check_symbolic_depth_bound, report_colon_identity,
    report_forest_power_coincidence, DepthCertificate, PackingLemma, VerificationReport,
};
use edgedepth_core::{
    betti_table, betti_via_taylor, edge_ideal, mixed_ideal, symbolic_power, FieldSpec, Graph,
    MonomialIdeal, VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::generate;
use crate::io::{write_csv, write_json, Reproducer};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Suite {
    #[serde(rename = "cor22")]
    EdgeIdealBound,
    #[serde(rename = "thm34")]
    ChordalSymbolic,
    #[serde(rename = "thm42")]
    SecondSymbolic,
    #[serde(rename = "lem41")]
    ColonIdentity,
    #[serde(rename = "prop33")]
    MixedChordal,
    #[serde(rename = "lem31")]
    NeighborhoodDeletion,
    #[serde(rename = "lem32")]
    CliqueDeletion,
    #[serde(rename = "forest")]
    Forest,
    #[serde(rename = "prop21")]
    Certificate,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::EdgeIdealBound => "cor22",
            Suite::ChordalSymbolic => "thm34",
            Suite::SecondSymbolic => "thm42",
            Suite::ColonIdentity => "lem41",
            Suite::MixedChordal => "prop33",
            Suite::NeighborhoodDeletion => "lem31",
            Suite::CliqueDeletion => "lem32",
            Suite::Forest => "forest",
            Suite::Certificate => "prop21",
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Family {
    ErdosRenyi { p: f64 },
    RandomChordal,
    RandomTree,
    /// Every labeled graph (every labeled tree for the forest suite) with
    /// `n` in range; `count` is ignored.
    Exhaustive,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Span {
    pub min: i64,
    pub max: i64,
}

impl Span {
    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.min..=self.max
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
    /// Directory for reproducers of guaranteed violations; defaults to the
    /// directory of the CSV output, else the working directory.
    pub reproducers: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealShape {
    pub max_generators: usize,
    pub max_exponent: u32,
}

impl Default for IdealShape {
    fn default() -> Self {
        Self {
            max_generators: 10,
            max_exponent: 3,
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub suite: Suite,
    pub family: Family,
    pub n: Span,
    #[serde(default = "one_span")]
    pub s: Span,
    #[serde(default)]
    pub count: usize,
    pub seed: u64,
    #[serde(default = "default_chars")]
    pub chars: Vec<u32>,
    #[serde(default)]
    pub outputs: Outputs,
    /// Record wall-clock milliseconds per check; off keeps outputs reproducible.
    #[serde(default)]
    pub timings: bool,
    /// Compare Betti tables with the Taylor oracle and depths over char 0 and 2.
    #[serde(default)]
    pub cross_check: bool,
    #[serde(default)]
    pub ideals: IdealShape,
}

fn one_span() -> Span {
    Span { min: 1, max: 1 }
}

fn default_chars() -> Vec<u32> {
    vec![0]
}

const MAX_EXHAUSTIVE_GRAPH_ORDER: i64 = 7;
const MAX_EXHAUSTIVE_TREE_ORDER: i64 = 9;

impl ExperimentConfig {
    pub fn from_json(text: &str) -> anyhow::Result<Self> {
        let cfg: Self = serde_json::from_str(text).context("invalid experiment config")?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        let Span { min, max } = self.n;
        if !(1..=12).contains(&min) || !(min..=12).contains(&max) {
            bail!("n range must satisfy 1 <= min <= max <= 12, got {}..{}", min, max);
        }
        let Span { min, max } = self.s;
        if !(1..=4).contains(&min) || !(min..=4).contains(&max) {
            bail!("s range must satisfy 1 <= min <= max <= 4, got {}..{}", min, max);
        }
        if self.suite == Suite::ColonIdentity && self.s.min < 2 {
            bail!("the colon identity needs k >= 2; set s.min to at least 2");
        }
        if self.chars.is_empty() {
            bail!("chars must list at least one characteristic");
        }
        for &c in &self.chars {
            FieldSpec::from_characteristic(c)?;
        }
        match &self.family {
            Family::ErdosRenyi { p } if !(0.0..=1.0).contains(p) => {
                bail!("edge probability must lie in [0, 1], got {}", p)
            }
            Family::Exhaustive => {
                let cap = if self.suite == Suite::Forest {
                    MAX_EXHAUSTIVE_TREE_ORDER
                } else {
                    MAX_EXHAUSTIVE_GRAPH_ORDER
                };
                if self.n.max > cap {
                    bail!("exhaustive enumeration is limited to n <= {}", cap);
                }
            }
            _ => {}
        }
        match (self.suite, &self.family) {
            (Suite::Forest, Family::ErdosRenyi { .. } | Family::RandomChordal) => {
                bail!("the forest suite needs the random_tree or exhaustive family")
            }
            (Suite::MixedChordal, Family::ErdosRenyi { .. }) => {
                bail!("the prop33 suite needs chordal graphs: use random_chordal, random_tree or exhaustive")
            }
            _ => Ok(()),
        }
    }
}

/// One generated instance, before any checking.
#[derive(Clone, Debug)]
pub enum Instance {
    Graph(Graph),
    Colon { graph: Graph, edge: (usize, usize) },
    Mixed { h: Graph, h_prime: Graph },
    Packing { graph: Graph, w: Vec<usize>, a: VertexSet },
    Certified { ideal: MonomialIdeal, certificate: DepthCertificate },
}

/// Generates the instance stream of a config; the same config always yields
/// the same stream.
pub fn instances(cfg: &ExperimentConfig) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n_range = cfg.n.min as usize..=cfg.n.max as usize;
    let graphs: Vec<Graph> = match (&cfg.family, cfg.suite) {
        (_, Suite::Certificate) => Vec::new(),
        (Family::Exhaustive, Suite::Forest) => n_range.clone().flat_map(generate::all_labeled_trees).collect(),
        (Family::Exhaustive, suite) => {
            let chordal_only = matches!(suite, Suite::ChordalSymbolic | Suite::MixedChordal);
            n_range
                .clone()
                .flat_map(generate::all_labeled_graphs)
                .filter(|g| !chordal_only || g.is_chordal())
                .collect()
        }
        (family, suite) => (0..cfg.count)
            .map(|_| {
                let n = rng.gen_range(n_range.clone());
                random_graph(family, suite, n, &mut rng)
            })
            .collect(),
    };
    match cfg.suite {
        Suite::EdgeIdealBound | Suite::ChordalSymbolic | Suite::SecondSymbolic | Suite::Forest => {
            graphs.into_iter().map(Instance::Graph).collect()
        }
        Suite::ColonIdentity => graphs
            .into_iter()
            .filter(|g| g.edge_count() > 0)
            .map(|graph| {
                let edges = graph.edges();
                let edge = edges[rng.gen_range(0..edges.len())];
                Instance::Colon { graph, edge }
            })
            .collect(),
        Suite::MixedChordal => graphs
            .into_iter()
            .map(|g| {
                let (h, h_prime) = generate::chordal_two_coloring(&g, &mut rng);
                Instance::Mixed { h, h_prime }
            })
            .collect(),
        Suite::NeighborhoodDeletion | Suite::CliqueDeletion => graphs
            .into_iter()
            .map(|graph| {
                let (w, a) = if cfg.suite == Suite::NeighborhoodDeletion {
                    generate::closed_neighborhood_deletion(&graph, &mut rng)
                } else {
                    generate::clique_deletion(&graph, &mut rng)
                };
                Instance::Packing { graph, w, a }
            })
            .collect(),
        Suite::Certificate => (0..cfg.count)
            .map(|_| {
                let n = rng.gen_range(n_range.clone());
                let (ideal, certificate) = generate::ideal_with_certificate(
                    n,
                    cfg.ideals.max_generators,
                    cfg.ideals.max_exponent,
                    &mut rng,
                );
                Instance::Certified { ideal, certificate }
            })
            .collect(),
    }
}

/// Colon identity instances need an edge, so its random graphs are redrawn until one appears.
fn random_graph(family: &Family, suite: Suite, n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let g = match family {
            Family::ErdosRenyi { p } => generate::erdos_renyi(n, *p, rng),
            Family::RandomChordal => generate::random_chordal(n, rng),
            Family::RandomTree => generate::random_tree(n, rng),
            Family::Exhaustive => unreachable!("exhaustive families are enumerated"),
        };
        if suite != Suite::ColonIdentity || g.edge_count() > 0 || n < 2 {
            return g;
        }
    }
}

/// Outcome of comparing the homology pipeline with its oracles.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CrossCheck {
    /// Ideals compared entrywise with the Taylor oracle.
    pub taylor_checked: usize,
    /// Ideals with too many generators for the Taylor oracle.
    pub taylor_skipped: usize,
    /// Ideals whose depth was compared over characteristics 0 and 2.
    pub char_checked: usize,
    pub mismatches: Vec<String>,
}

impl CrossCheck {
    fn merge(&mut self, other: CrossCheck) {
        self.taylor_checked += other.taylor_checked;
        self.taylor_skipped += other.taylor_skipped;
        self.char_checked += other.char_checked;
        self.mismatches.extend(other.mismatches);
    }
}

#[derive(Clone, Debug, Default)]
pub struct CampaignOutcome {
    pub instances: usize,
    pub reports: Vec<VerificationReport>,
    /// `(id, message)` for instances that could not be checked.
    pub errors: Vec<(String, String)>,
    pub cross_check: CrossCheck,
    pub reproducers: Vec<PathBuf>,
}

impl CampaignOutcome {
    pub fn guaranteed_violations(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| r.is_guaranteed_violation())
    }

    pub fn exploratory_violations(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports
            .iter()
            .filter(|r| !r.is_guaranteed_violation() && r.verdict.name() == "violated")
    }
}

struct Evaluated {
    reports: Vec<VerificationReport>,
    errors: Vec<(String, String)>,
    cross: CrossCheck,
}

/// Generates, checks and (when configured) writes CSV, JSON and reproducers.
pub fn run(cfg: &ExperimentConfig) -> anyhow::Result<CampaignOutcome> {
    cfg.validate()?;
    let list = instances(cfg);
    let evaluated: Vec<Evaluated> = list
        .par_iter()
        .enumerate()
        .map(|(k, inst)| evaluate(cfg, &format!("{}-{:06}", cfg.suite.name(), k), inst))
        .collect();
    let mut out = CampaignOutcome {
        instances: list.len(),
        ..Default::default()
    };
    for e in evaluated {
        out.reports.extend(e.reports);
        out.errors.extend(e.errors);
        out.cross_check.merge(e.cross);
    }
    out.reports.sort_by(|a, b| a.id.cmp(&b.id));
    write_outputs(cfg, &mut out)?;
    Ok(out)
}

fn write_outputs(cfg: &ExperimentConfig, out: &mut CampaignOutcome) -> anyhow::Result<()> {
    if let Some(path) = &cfg.outputs.csv {
        let file = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_csv(&out.reports, std::io::BufWriter::new(file))?;
    }
    if let Some(path) = &cfg.outputs.json {
        let file = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_json(&out.reports, std::io::BufWriter::new(file))?;
    }
    let dir = cfg.outputs.reproducers.clone().unwrap_or_else(|| {
        cfg.outputs
            .csv
            .as_ref()
            .and_then(|p| p.parent())
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("."))
    });
    let violations: Vec<VerificationReport> = out.guaranteed_violations().cloned().collect();
    for r in &violations {
        out.reproducers.push(Reproducer::from_report(r).write_to(&dir)?);
    }
    Ok(())
}

fn evaluate(cfg: &ExperimentConfig, id: &str, inst: &Instance) -> Evaluated {
    let mut ev = Evaluated {
        reports: Vec::new(),
        errors: Vec::new(),
        cross: CrossCheck::default(),
    };
    let uses_s = !matches!(cfg.suite, Suite::EdgeIdealBound | Suite::NeighborhoodDeletion | Suite::CliqueDeletion | Suite::Certificate);
    let s_values: Vec<i64> = if uses_s { cfg.s.iter().collect() } else { vec![1] };
    for &s in &s_values {
        for &c in &cfg.chars {
            let field = FieldSpec::from_characteristic(c).expect("validated characteristic");
            let full_id = if uses_s {
                format!("{}-s{}-c{}", id, s, c)
            } else {
                format!("{}-c{}", id, c)
            };
            let start = Instant::now();
            match check(cfg.suite, inst, s, field) {
                Ok(mut r) => {
                    r.id = full_id;
                    r.millis = if cfg.timings {
                        start.elapsed().as_millis() as u64
                    } else {
                        0
                    };
                    ev.reports.push(r);
                }
                Err(e) => ev.errors.push((full_id, e.to_string())),
            }
        }
        if cfg.cross_check {
            match ideals_of(cfg.suite, inst, s) {
                Ok(ideals) => {
                    for i in ideals {
                        cross_check(&format!("{}-s{}", id, s), &i, &mut ev.cross);
                    }
                }
                Err(e) => ev.errors.push((format!("{}-s{}", id, s), e.to_string())),
            }
        }
    }
    ev
}

fn check(suite: Suite, inst: &Instance, s: i64, field: FieldSpec) -> edgedepth_core::Result<VerificationReport> {
    match (suite, inst) {
        (Suite::EdgeIdealBound, Instance::Graph(g)) => check_edge_ideal_bound(g, field),
        (Suite::ChordalSymbolic | Suite::SecondSymbolic, Instance::Graph(g)) => check_symbolic_depth_bound(g, s, false, field),
        (Suite::Forest, Instance::Graph(g)) => report_forest_power_coincidence(g, s),
        (Suite::ColonIdentity, Instance::Colon { graph, edge }) => report_colon_identity(graph, *edge, s),
        (Suite::MixedChordal, Instance::Mixed { h, h_prime }) => check_mixed_bound(h, h_prime, s, field),
        (Suite::NeighborhoodDeletion, Instance::Packing { graph, w, a }) => {
            check_packing_deletion_lemmas(graph, w, *a, PackingLemma::NeighborhoodDeletion)
        }
        (Suite::CliqueDeletion, Instance::Packing { graph, w, a }) => {
            check_packing_deletion_lemmas(graph, w, *a, PackingLemma::CliqueDeletion)
        }
        (Suite::Certificate, Instance::Certified { ideal, certificate }) => {
            check_certificate_soundness(ideal, certificate, field)
        }
        _ => unreachable!("instances are generated to match their suite"),
    }
}

/// The ideals whose depth a suite's check rests on.
fn ideals_of(suite: Suite, inst: &Instance, s: i64) -> edgedepth_core::Result<Vec<MonomialIdeal>> {
    Ok(match (suite, inst) {
        (Suite::EdgeIdealBound, Instance::Graph(g)) => vec![edge_ideal(g)],
        (Suite::ChordalSymbolic | Suite::SecondSymbolic, Instance::Graph(g)) => vec![symbolic_power(g, s)?],
        (Suite::ColonIdentity, Instance::Colon { graph, .. }) => {
            vec![symbolic_power(graph, s)?, symbolic_power(graph, s - 1)?]
        }
        (Suite::MixedChordal, Instance::Mixed { h, h_prime }) => vec![mixed_ideal(h, h_prime, s)?],
        (Suite::Certificate, Instance::Certified { ideal, .. }) => vec![ideal.clone()],
        _ => Vec::new(),
    })
}

fn cross_check(id: &str, ideal: &MonomialIdeal, tally: &mut CrossCheck) {
    if ideal.is_unit() {
        return;
    }
    let q = FieldSpec::Rationals;
    let main = betti_table(ideal, q).expect("not the unit ideal");
    let f2 = betti_table(ideal, FieldSpec::Prime(2)).expect("not the unit ideal");
    tally.char_checked += 1;
    if main.depth() != f2.depth() {
        tally.mismatches.push(format!(
            "{}: depth {} over Q but {} over F2 for {}",
            id,
            main.depth(),
            f2.depth(),
            ideal
        ));
    }
    if ideal.len() > TAYLOR_MAX_GENERATORS {
        tally.taylor_skipped += 1;
        return;
    }
    tally.taylor_checked += 1;
    let taylor = betti_via_taylor(ideal, q).expect("within the Taylor cap");
    if taylor != main {
        tally.mismatches.push(format!("{}: Betti table differs from Taylor for {}", id, ideal));
    }
}
