//! Text formats for graphs, matroids and bare GF(2) matrices.
//!
//! Graph files start with `graph <name>` followed by `edge <label> <u> <v>` lines. Matroid files
//! start with `matroid <name>`, then `elements <labels...>`, then one '0'/'1' row per line.
//! Anything after `#` is a comment, except lines starting with `#!`, which carry validation
//! directives for the catalog.

use std::fmt::Write as _;

use binmat::{BinaryMatroid, Error, Gf2Matrix, Multigraph, Result};

/// A `#! <predicate> <args...>` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Directive {
    pub predicate: String,
    pub args: Vec<String>,
    pub line: usize,
}

/// Parsed file header information shared by both formats.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Meta {
    pub name: String,
    /// First plain comment line.
    pub provenance: String,
    pub directives: Vec<Directive>,
}

#[derive(Clone, Debug)]
pub enum Fixture {
    Graph(Multigraph),
    Matroid(BinaryMatroid),
}

impl Fixture {
    /// Circuit matroid for graphs.
    pub fn matroid(&self) -> Result<BinaryMatroid> {
        match self {
            Fixture::Graph(g) => g.circuit_matroid(),
            Fixture::Matroid(m) => Ok(m.clone()),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with comments stripped, plus the header metadata gathered on the way.
fn scan(text: &str) -> (Vec<(usize, Vec<&str>)>, Meta) {
    let mut meta = Meta::default();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let t = raw.trim();
        if let Some(rest) = t.strip_prefix("#!") {
            let mut w = rest.split_whitespace();
            if let Some(p) = w.next() {
                meta.directives.push(Directive {
                    predicate: p.to_string(),
                    args: w.map(str::to_string).collect(),
                    line: no,
                });
            }
            continue;
        }
        if let Some(rest) = t.strip_prefix('#') {
            if meta.provenance.is_empty() {
                meta.provenance = rest.trim().to_string();
            }
            continue;
        }
        let body = t.split('#').next().unwrap_or("").trim();
        if !body.is_empty() {
            lines.push((no, body.split_whitespace().collect()));
        }
    }
    (lines, meta)
}

fn header<'a>(lines: &[(usize, Vec<&'a str>)], keyword: &str) -> Result<&'a str> {
    match lines.first() {
        Some((_, w)) if w.len() == 2 && w[0] == keyword => Ok(w[1]),
        Some((no, _)) => Err(parse_err(*no, format!("expected \"{keyword} <name>\""))),
        None => Err(parse_err(1, "empty file")),
    }
}

pub fn parse_graph(text: &str) -> Result<(Meta, Multigraph)> {
    let (lines, mut meta) = scan(text);
    meta.name = header(&lines, "graph")?.to_string();
    let mut g = Multigraph::new();
    for (no, w) in &lines[1..] {
        match w.as_slice() {
            ["edge", label, u, v] => g
                .add_edge(label, u, v)
                .map_err(|e| parse_err(*no, e.to_string()))?,
            ["vertex", v] => {
                g.vertex(v);
            }
            _ => return Err(parse_err(*no, "expected \"edge <label> <u> <v>\"")),
        }
    }
    Ok((meta, g))
}

pub fn parse_matroid(text: &str) -> Result<(Meta, BinaryMatroid)> {
    let (lines, mut meta) = scan(text);
    meta.name = header(&lines, "matroid")?.to_string();
    let labels: Vec<&str> = match lines.get(1) {
        Some((_, w)) if w.first() == Some(&"elements") => w[1..].to_vec(),
        Some((no, _)) => return Err(parse_err(*no, "expected \"elements <label> ...\"")),
        None => return Err(parse_err(2, "missing elements line")),
    };
    let mut rows = Vec::new();
    for (no, w) in &lines[2..] {
        if w.len() != 1 || w[0].len() != labels.len() {
            return Err(parse_err(
                *no,
                format!("expected a row of {} '0'/'1' characters", labels.len()),
            ));
        }
        rows.push(w[0]);
    }
    let m = if rows.is_empty() {
        Gf2Matrix::zeros(0, labels.len())
    } else {
        Gf2Matrix::from_strs(&rows).map_err(|e| match e {
            Error::Parse { line, message } => parse_err(lines[1 + line].0, message),
            other => other,
        })?
    };
    Ok((meta, BinaryMatroid::from_matrix(&labels, &m)?))
}

/// Either format, chosen by the header keyword.
pub fn parse_fixture(text: &str) -> Result<(Meta, Fixture)> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with("graph") {
        parse_graph(text).map(|(m, g)| (m, Fixture::Graph(g)))
    } else {
        parse_matroid(text).map(|(m, x)| (m, Fixture::Matroid(x)))
    }
}

/// Matrix text: header "rows cols", then one row per line.
pub fn parse_matrix(text: &str) -> Result<Gf2Matrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines.next().ok_or_else(|| parse_err(1, "empty matrix"))?;
    let dims: Vec<usize> = head
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| parse_err(1, "expected \"rows cols\""))?;
    let [r, c] = dims[..] else {
        return Err(parse_err(1, "expected \"rows cols\""));
    };
    let rows: Vec<(usize, &str)> = lines.map(|(i, l)| (i + 1, l.trim())).collect();
    if rows.len() != r {
        return Err(Error::Dimension {
            expected: r,
            found: rows.len(),
        });
    }
    if let Some((no, l)) = rows.iter().find(|(_, l)| l.len() != c) {
        return Err(parse_err(
            *no,
            format!("row has {} columns, expected {c}", l.len()),
        ));
    }
    if r == 0 {
        return Ok(Gf2Matrix::zeros(0, c));
    }
    let strs: Vec<&str> = rows.iter().map(|(_, l)| *l).collect();
    Gf2Matrix::from_strs(&strs)
}

pub fn write_graph(name: &str, g: &Multigraph) -> String {
    let mut s = format!("graph {name}\n");
    for e in g.edges() {
        let _ = writeln!(
            s,
            "edge {} {} {}",
            e.label,
            g.vertices()[e.u],
            g.vertices()[e.v]
        );
    }
    s
}

pub fn write_matroid(name: &str, m: &BinaryMatroid) -> String {
    let mut s = format!("matroid {name}\nelements {}\n", m.labels().join(" "));
    let rep = m.rep();
    for r in 0..rep.rows() {
        for c in 0..rep.cols() {
            s.push(if rep.get(r, c) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = "graph tri\n# drawn by hand\n#! edges 3\nedge a 1 2\nedge b 2 3 # trailing\nedge c 3 1\n";
        let (meta, g) = parse_graph(text).unwrap();
        assert_eq!(meta.name, "tri");
        assert_eq!(meta.provenance, "drawn by hand");
        assert_eq!(meta.directives[0].predicate, "edges");
        let (_, h) = parse_graph(&write_graph("tri", &g)).unwrap();
        assert!(g.isomorphism(&h).is_some());
    }

    #[test]
    fn matroid_round_trip() {
        let text = "matroid two\nelements a b\n11\n";
        let (_, m) = parse_matroid(text).unwrap();
        assert_eq!(m.rank(), 1);
        let (_, n) = parse_matroid(&write_matroid("two", &m)).unwrap();
        assert_eq!(m, n);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "matroid x\nelements a b\n11\n1\n";
        assert!(matches!(
            parse_matroid(bad),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_graph("graph g\nedge a 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("graph g\nedge a 1 2\nedge a 2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn matrix_text() {
        let m = parse_matrix("2 3\n011\n110\n").unwrap();
        assert_eq!(m.to_string(), "2 3\n011\n110\n");
        assert!(parse_matrix("2 3\n011\n").is_err());
        assert_eq!(parse_matrix("0 4\n").unwrap().cols(), 4);
    }
}
