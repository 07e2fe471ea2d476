//! Graph, ideal, Betti table and report formats.

use std::fs;
use std::io::Write;
use std::path::Path;

use edgedepth_core::homology::BettiTable;
use edgedepth_core::verify::{Mode, VerificationReport};
use edgedepth_core::{Graph, MonomialIdeal};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{field}: {source}")]
    Invalid {
        field: String,
        source: edgedepth_core::Error,
    },
}

type Result<T, E = InputError> = std::result::Result<T, E>;

/// JSON shape of a graph: 0-based vertices, each edge as a pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        build_graph(self.n, self.edges.iter().map(|&[u, v]| (u, v)), |k| format!("edges[{}]", k))
    }
}

fn build_graph(
    n: usize,
    edges: impl IntoIterator<Item = (usize, usize)>,
    locate: impl Fn(usize) -> String,
) -> Result<Graph> {
    let mut g = Graph::empty(n).map_err(|source| InputError::Invalid {
        field: "n".into(),
        source,
    })?;
    let mut list = Vec::new();
    for (k, (u, v)) in edges.into_iter().enumerate() {
        list.push((u, v));
        // Rebuild per edge so a failure points at the offending entry.
        g = Graph::from_edges(n, &list).map_err(|source| InputError::Invalid {
            field: locate(k),
            source,
        })?;
    }
    Ok(g)
}

/// Accepts the JSON form or the text form (`n m`, then `m` lines `u v`).
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let file: GraphFile = serde_json::from_str(text)?;
        return file.to_graph();
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(InputError::Line {
        line: 1,
        message: "empty input".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        edges.push((u, v));
        edge_lines.push(line);
    }
    if edges.len() != m {
        return Err(InputError::Line {
            line: hline,
            message: format!("header announces {} edges, found {}", m, edges.len()),
        });
    }
    build_graph(n, edges, |k| format!("line {}", edge_lines[k]))
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let bad = |message: String| InputError::Line { line, message };
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(bad(format!("expected two integers, got {:?}", text)));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|e| bad(format!("{:?}: {}", s, e)));
    Ok([num(parts[0])?, num(parts[1])?])
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphFile::from_graph(g)).expect("graph serializes")
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

pub fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| InputError::Read {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read_to_string(path)?)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub n: usize,
    pub generators: Vec<String>,
}

/// JSON `{"n":3,"generators":["x1*x2","x2*x3"]}`, or the text form
/// `(x1*x2, x2*x3)` with `n` taken from `n` or else the largest variable index.
pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let invalid = |field: &str| {
        let field = field.to_string();
        move |source| InputError::Invalid { field, source }
    };
    if text.trim_start().starts_with('{') {
        let file: IdealFile = serde_json::from_str(text)?;
        if let Some(want) = n.filter(|&want| want != file.n) {
            return Err(InputError::Invalid {
                field: "n".into(),
                source: edgedepth_core::Error::DimensionMismatch {
                    expected: want,
                    found: file.n,
                },
            });
        }
        let gens = file
            .generators
            .iter()
            .enumerate()
            .map(|(k, g)| {
                edgedepth_core::Monomial::parse(g, file.n)
                    .map_err(invalid(&format!("generators[{}]", k)))
            })
            .collect::<Result<Vec<_>>>()?;
        return MonomialIdeal::minimalize(gens, file.n).map_err(invalid("generators"));
    }
    let text = text.trim();
    match n {
        Some(n) => MonomialIdeal::parse(text, n).map_err(invalid("ideal")),
        None => MonomialIdeal::parse_infer_dim(text).map_err(invalid("ideal")),
    }
}

pub fn read_ideal(path: &Path, n: Option<usize>) -> Result<MonomialIdeal> {
    parse_ideal(&read_to_string(path)?, n)
}

#[derive(Serialize)]
struct BettiJson {
    n: usize,
    entries: Vec<BettiEntryJson>,
}

#[derive(Serialize)]
struct BettiEntryJson {
    i: usize,
    b: Vec<u32>,
    rank: usize,
}

pub fn betti_to_json(t: &BettiTable) -> String {
    let doc = BettiJson {
        n: t.n(),
        entries: t
            .entries()
            .map(|e| BettiEntryJson {
                i: e.i,
                b: e.b,
                rank: e.rank,
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("betti table serializes")
}

/// Flat, serializable view of a [`VerificationReport`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportRecord {
    pub id: String,
    pub check: String,
    pub mode: String,
    pub graph: Option<GraphFile>,
    pub h: Option<GraphFile>,
    pub h_prime: Option<GraphFile>,
    pub ideal: Option<String>,
    pub chordal: Option<bool>,
    pub s: Option<i64>,
    pub alpha2: Option<usize>,
    pub depth: Option<i64>,
    pub bound: Option<i64>,
    pub slack: Option<i64>,
    pub verdict: String,
    #[serde(rename = "char")]
    pub characteristic: u32,
    pub ms: u64,
    pub detail: String,
}

impl ReportRecord {
    pub fn from_report(r: &VerificationReport) -> Self {
        Self {
            id: r.id.clone(),
            check: r.check.name().into(),
            mode: match r.mode {
                Mode::Guaranteed => "guaranteed".into(),
                Mode::Exploratory => "exploratory".into(),
            },
            graph: r.graph.as_ref().map(GraphFile::from_graph),
            h: r.h.as_ref().map(GraphFile::from_graph),
            h_prime: r.h_prime.as_ref().map(GraphFile::from_graph),
            ideal: r.ideal.as_ref().map(|i| i.to_string()),
            chordal: r.chordal,
            s: r.s,
            alpha2: r.alpha2,
            depth: r.value,
            bound: r.bound,
            slack: r.slack,
            verdict: r.verdict.name().into(),
            characteristic: r.characteristic,
            ms: r.millis,
            detail: r.detail.clone(),
        }
    }

    /// Number of variables: the graph order, else the ideal's ring.
    fn n(r: &VerificationReport) -> usize {
        r.graph
            .as_ref()
            .map(Graph::n)
            .or_else(|| r.ideal.as_ref().map(MonomialIdeal::dim))
            .unwrap_or(0)
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "id", "n", "edges", "chordal", "s", "alpha2", "depth", "bound", "slack", "verdict", "char", "ms",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Edges render as `0-1 1-2`.
pub fn write_csv<W: Write>(reports: &[VerificationReport], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in reports {
        let edges = r
            .graph
            .as_ref()
            .map(|g| {
                g.edges()
                    .iter()
                    .map(|(u, v)| format!("{}-{}", u, v))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .unwrap_or_default();
        w.write_record([
            r.id.clone(),
            ReportRecord::n(r).to_string(),
            edges,
            opt(r.chordal),
            opt(r.s),
            opt(r.alpha2),
            opt(r.value),
            opt(r.bound),
            opt(r.slack),
            r.verdict.name().to_string(),
            r.characteristic.to_string(),
            r.millis.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(reports: &[VerificationReport], out: W) -> serde_json::Result<()> {
    let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from_report).collect();
    serde_json::to_writer_pretty(out, &records)
}

/// Everything needed to rerun one failing instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Reproducer {
    pub id: String,
    pub check: String,
    pub graph: Option<GraphFile>,
    pub h: Option<GraphFile>,
    pub h_prime: Option<GraphFile>,
    pub ideal: Option<String>,
    pub s: Option<i64>,
    #[serde(rename = "char")]
    pub characteristic: u32,
    pub detail: String,
}

impl Reproducer {
    pub fn from_report(r: &VerificationReport) -> Self {
        let rec = ReportRecord::from_report(r);
        Self {
            id: rec.id,
            check: rec.check,
            graph: rec.graph,
            h: rec.h,
            h_prime: rec.h_prime,
            ideal: rec.ideal,
            s: rec.s,
            characteristic: rec.characteristic,
            detail: rec.detail,
        }
    }

    /// Writes `reproducer-<id>.json` into `dir` and returns its path.
    pub fn write_to(&self, dir: &Path) -> std::io::Result<std::path::PathBuf> {
        fs::create_dir_all(dir)?;
        let path = dir.join(format!("reproducer-{}.json", self.id));
        let text = serde_json::to_string_pretty(self).expect("reproducer serializes");
        fs::write(&path, text + "\n")?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_formats() {
        let p3 = parse_graph(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(p3, Graph::path(3).unwrap());
        let e = parse_graph("2 1\n0 1").unwrap();
        assert_eq!(e, Graph::path(2).unwrap());
        assert_eq!(graph_to_json(&p3), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(parse_graph(&graph_to_text(&p3)).unwrap(), p3);
    }

    #[test]
    fn graph_errors_name_the_location() {
        let err = parse_graph(r#"{"n":2,"edges":[[0,0]]}"#).unwrap_err();
        assert_eq!(err.to_string(), "edges[0]: self-loop at vertex 0");
        let err = parse_graph("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: duplicate edge 0-1");
        let err = parse_graph("3 1\n0 x\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2:"), "{}", err);
        let err = parse_graph("3 2\n0 1\n").unwrap_err();
        assert!(err.to_string().contains("announces 2 edges"));
        let err = parse_graph(r#"{"n":2,"edges":[[0,5]]}"#).unwrap_err();
        assert!(err.to_string().contains("out of range"));
        assert!(parse_graph(r#"{"n":2,"edges":[[0,1]],"extra":1}"#).is_err());
    }

    #[test]
    fn ideal_formats() {
        let i = parse_ideal("(x1*x2, x2*x3)", None).unwrap();
        assert_eq!(i.dim(), 3);
        let j = parse_ideal(r#"{"n":4,"generators":["x2*x3","x1*x2","x1*x2*x3"]}"#, None).unwrap();
        assert_eq!(j.dim(), 4);
        assert_eq!(j.to_string(), "(x1*x2, x2*x3)");
        assert_eq!(parse_ideal("(x1*x2)", Some(5)).unwrap().dim(), 5);
        assert!(parse_ideal(r#"{"n":2,"generators":["x3"]}"#, None).is_err());
    }

    #[test]
    fn betti_json() {
        let i = parse_ideal("(x1*x2, x2*x3)", None).unwrap();
        let t = edgedepth_core::betti_table(&i, Default::default()).unwrap();
        assert_eq!(
            betti_to_json(&t),
            r#"{"n":3,"entries":[{"i":0,"b":[0,0,0],"rank":1},{"i":1,"b":[0,1,1],"rank":1},{"i":1,"b":[1,1,0],"rank":1},{"i":2,"b":[1,1,1],"rank":1}]}"#
        );
    }
}
