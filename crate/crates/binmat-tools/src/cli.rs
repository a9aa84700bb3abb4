//! Command line front end. [`run`] does the work so tests can drive it without a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use binmat::{
    graphic_quotients, search_forbidden_minors, split_with_element, BinaryMatroid, Classification,
    CographicOracle, Exclusion,
};
use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use crate::catalog::Catalog;
use crate::checks::{self, Options, CHECK_IDS};
use crate::error::{ToolError, ToolResult};
use crate::exec::Rayon;
use crate::formats::{self, Fixture};

#[derive(Parser, Debug)]
#[command(
    name = "binmat",
    version,
    about = "Binary matroids, splittings and cographic obstruction searches"
)]
pub struct Cli {
    /// Directory of .graph/.matroid fixtures replacing the built-in catalog.
    #[arg(long, global = true, value_name = "DIR")]
    pub fixtures: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Append a run manifest with a digest of the output.
    #[arg(long, global = true)]
    pub manifest: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One `key=value` record per line.
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    /// Drop quotients with the excluded matroid as a minor.
    Minor,
    /// Drop quotients with a single-element extension of the excluded matroid as a minor.
    Extension,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List fixtures or show one.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
    /// Print the splitting of a fixture at T.
    Split {
        fixture: String,
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<String>,
        /// Add this element, nonzero only in the new row.
        #[arg(long)]
        with_element: Option<String>,
    },
    /// Graphic quotients by one added element.
    Quotients {
        base: String,
        /// Fixture whose extensions (or itself, see --reading) rule a quotient out.
        #[arg(long)]
        exclude: Option<String>,
        #[arg(long, value_enum, default_value_t = Reading::Extension)]
        reading: Reading,
    },
    /// Whether every k-splitting of a fixture is cographic.
    Classify {
        fixture: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Minor-minimal graphic matroids with a non-cographic k-splitting.
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = checks::DEFAULT_SEARCH_ELEMENTS)]
        max_elements: usize,
    },
    /// Run verification checks by id, or `all`.
    Verify {
        #[arg(default_value = "all")]
        ids: Vec<String>,
        #[arg(long, default_value_t = checks::DEFAULT_SEARCH_ELEMENTS)]
        max_elements: usize,
        /// Random matroids in the identity check.
        #[arg(long, default_value_t = 500)]
        random: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Matroid isomorphism of two fixtures.
    Iso { a: String, b: String },
    /// Minor containment with a witness.
    HasMinor { host: String, pattern: String },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Show { name: String },
}

/// Accumulates output in either format.
struct Out {
    format: Format,
    buf: String,
}

fn quote(v: &str) -> String {
    if v.is_empty() || v.contains(char::is_whitespace) || v.contains('"') {
        format!("\"{}\"", v.replace('\\', "\\\\").replace('"', "\\\""))
    } else {
        v.to_string()
    }
}

impl Out {
    fn emit(&mut self, kind: &str, fields: &[(&str, String)], text: impl FnOnce() -> String) {
        match self.format {
            Format::Text => {
                self.buf.push_str(&text());
                self.buf.push('\n');
            }
            Format::Records => {
                self.buf.push_str("record=");
                self.buf.push_str(kind);
                for (k, v) in fields {
                    let _ = write!(self.buf, " {k}={}", quote(v));
                }
                self.buf.push('\n');
            }
        }
    }
}

/// Loads fixtures lazily and resolves names, paths and `-`.
struct Inputs<'a> {
    dir: Option<PathBuf>,
    catalog: Option<Catalog>,
    stdin: &'a mut dyn Read,
    stdin_used: bool,
    used: Vec<String>,
}

impl Inputs<'_> {
    fn catalog(&mut self) -> ToolResult<&Catalog> {
        if self.catalog.is_none() {
            let source = match &self.dir {
                Some(d) => d.display().to_string(),
                None => std::env::var(crate::catalog::FIXTURES_ENV)
                    .ok()
                    .filter(|d| !d.is_empty())
                    .unwrap_or_else(|| "built-in".into()),
            };
            self.used.push(format!("catalog:{source}"));
            self.catalog = Some(Catalog::load(self.dir.as_deref())?);
        }
        Ok(self.catalog.as_ref().expect("loaded above"))
    }

    fn fixture(&mut self, name: &str) -> ToolResult<Fixture> {
        self.used.push(name.to_string());
        let text = if name == "-" {
            if self.stdin_used {
                return Err(ToolError::Usage(
                    "standard input can be read only once".into(),
                ));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|source| ToolError::Io {
                    path: PathBuf::from("-"),
                    source,
                })?;
            s
        } else if let Some(e) = self.catalog()?.get(name) {
            return Ok(e.payload.clone());
        } else if Path::new(name).is_file() {
            std::fs::read_to_string(name).map_err(|source| ToolError::Io {
                path: name.into(),
                source,
            })?
        } else {
            return Err(ToolError::UnknownFixture(name.to_string()));
        };
        Ok(formats::parse_fixture(&text)?.1)
    }

    fn matroid(&mut self, name: &str) -> ToolResult<BinaryMatroid> {
        Ok(self.fixture(name)?.matroid()?)
    }
}

fn join(v: &[String]) -> String {
    v.join(",")
}

fn pairs(v: &[(String, String)]) -> String {
    v.iter()
        .map(|(a, b)| format!("{a}->{b}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn rows_of(m: &BinaryMatroid) -> String {
    let rep = m.rep();
    (0..rep.rows())
        .map(|r| {
            (0..rep.cols())
                .map(|c| if rep.get(r, c) { '1' } else { '0' })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Catalog names isomorphic to `m`.
fn catalog_names(cat: &Catalog, m: &BinaryMatroid, prefix: &str) -> Vec<String> {
    let sig = m.invariant_signature();
    let mut v = cat
        .entries()
        .filter(|e| e.name.starts_with(prefix))
        .filter(|e| {
            e.matroid().invariant_signature() == sig && e.matroid().is_isomorphic(m).is_some()
        })
        .map(|e| e.name.clone())
        .collect::<Vec<_>>();
    v.sort_by_key(|n| (n.len(), n.clone()));
    v
}

/// Runs one invocation; returns the exit code.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut out = Out {
        format: cli.format,
        buf: String::new(),
    };
    let mut inputs = Inputs {
        dir: cli.fixtures.clone(),
        catalog: None,
        stdin,
        stdin_used: false,
        used: Vec::new(),
    };
    let code = match execute(&cli.command, &mut inputs, &mut out) {
        Ok(ok) => i32::from(!ok),
        Err(e) => {
            let _ = stdout.write_all(out.buf.as_bytes());
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    if cli.manifest {
        let digest = Sha256::digest(out.buf.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        let command: Vec<String> = argv
            .iter()
            .skip(1)
            .map(|a| a.to_string_lossy().into_owned())
            .collect();
        let fields = [
            ("command", command.join(" ")),
            (
                "inputs",
                if inputs.used.is_empty() {
                    "none".into()
                } else {
                    inputs.used.join(",")
                },
            ),
            ("tool-version", env!("CARGO_PKG_VERSION").to_string()),
            ("digest", format!("sha256:{hex}")),
        ];
        out.emit("manifest", &fields, || {
            format!(
                "manifest: {}",
                fields
                    .iter()
                    .map(|(k, v)| format!("{k}={}", quote(v)))
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        });
    }
    let _ = stdout.write_all(out.buf.as_bytes());
    code
}

/// Returns whether the command succeeded as a check.
fn execute(cmd: &Command, inputs: &mut Inputs<'_>, out: &mut Out) -> ToolResult<bool> {
    match cmd {
        Command::Catalog { action } => {
            catalog(action.as_ref().unwrap_or(&CatalogAction::List), inputs, out)
        }
        Command::Split {
            fixture,
            t,
            with_element,
        } => {
            let m = inputs.matroid(fixture)?;
            let s = match with_element {
                Some(a) => split_with_element(&m, t, a)?,
                None => binmat::split(&m, t)?,
            };
            let name = format!("{fixture}_T");
            out.emit(
                "split",
                &[
                    ("fixture", fixture.clone()),
                    ("t", join(t)),
                    ("elements", s.labels().join(",")),
                    ("rank", s.rank().to_string()),
                    ("rows", rows_of(&s)),
                ],
                || formats::write_matroid(&name, &s).trim_end().to_string(),
            );
            Ok(true)
        }
        Command::Quotients {
            base,
            exclude,
            reading,
        } => quotients(base, exclude.as_deref(), *reading, inputs, out),
        Command::Classify { fixture, k } => {
            let m = inputs.matroid(fixture)?;
            let r = CographicOracle::new().classify(fixture, &m, *k)?;
            let verdict = match r.classification {
                Classification::CographicForAllT => "cographic-for-all-T",
                Classification::NonCographic => "non-cographic",
            };
            let hit = r
                .f_member_hit
                .as_ref()
                .map_or_else(|| "none".to_string(), |c| c.member.to_string());
            let trivial = r
                .trivial_witness
                .as_ref()
                .map_or_else(|| "none".to_string(), |c| c.member.to_string());
            let minimal = r
                .minimality
                .is_minor_minimal
                .map_or_else(|| "unchecked".to_string(), |b| b.to_string());
            out.emit(
                "classify",
                &[
                    ("fixture", fixture.clone()),
                    ("k", k.to_string()),
                    ("verdict", verdict.into()),
                    ("t", join(&r.witness_t)),
                    ("excluded-minor", hit.clone()),
                    ("trivial", trivial.clone()),
                    ("coloop", r.minimality.has_coloop.to_string()),
                    ("two-cocircuit", r.minimality.has_2cocircuit.to_string()),
                    ("minor-minimal", minimal.clone()),
                ],
                || {
                    let at = if r.witness_t.is_empty() { String::new() } else { format!(" at T={{{}}} ({hit})", join(&r.witness_t)) };
                    format!(
                        "{fixture} k={k}: {verdict}{at}; M(K5)/M(K3,3) minor: {trivial}; coloop: {}; 2-cocircuit: {}; minor-minimal: {minimal}",
                        r.minimality.has_coloop, r.minimality.has_2cocircuit
                    )
                },
            );
            Ok(true)
        }
        Command::Search { k, max_elements } => search(*k, *max_elements, inputs, out),
        Command::Verify {
            ids,
            max_elements,
            random,
            seed,
        } => {
            let opts = Options {
                max_elements: *max_elements,
                random_matroids: *random,
                seed: *seed,
            };
            verify(ids, &opts, inputs, out)
        }
        Command::Iso { a, b } => {
            let (ma, mb) = (inputs.matroid(a)?, inputs.matroid(b)?);
            let map = ma.is_isomorphic(&mb);
            out.emit(
                "iso",
                &[
                    ("a", a.clone()),
                    ("b", b.clone()),
                    ("isomorphic", map.is_some().to_string()),
                    ("map", map.as_deref().map_or_else(String::new, pairs)),
                ],
                || match &map {
                    Some(m) => format!("{a} ~= {b}: isomorphic via {}", pairs(m)),
                    None => format!("{a} !~= {b}: not isomorphic"),
                },
            );
            Ok(map.is_some())
        }
        Command::HasMinor { host, pattern } => {
            let (h, p) = (inputs.matroid(host)?, inputs.matroid(pattern)?);
            let w = h.has_minor(&p);
            let verified = w.as_ref().is_some_and(|w| w.verify(&h, &p));
            let fields = match &w {
                Some(w) => vec![
                    ("host", host.clone()),
                    ("pattern", pattern.clone()),
                    ("minor", "true".into()),
                    ("delete", join(&w.deleted)),
                    ("contract", join(&w.contracted)),
                    ("map", pairs(&w.bijection)),
                    ("replayed", verified.to_string()),
                ],
                None => vec![
                    ("host", host.clone()),
                    ("pattern", pattern.clone()),
                    ("minor", "false".into()),
                ],
            };
            out.emit("has-minor", &fields, || match &w {
                Some(w) => format!(
                    "{host} has a {pattern} minor: delete {{{}}} contract {{{}}} map {}; witness replayed: {verified}",
                    join(&w.deleted),
                    join(&w.contracted),
                    pairs(&w.bijection)
                ),
                None => format!("{host} has no {pattern} minor"),
            });
            Ok(w.is_some())
        }
    }
}

fn catalog(action: &CatalogAction, inputs: &mut Inputs<'_>, out: &mut Out) -> ToolResult<bool> {
    let cat = inputs.catalog()?;
    let mut lines = Vec::new();
    match action {
        CatalogAction::List => {
            for e in cat.entries() {
                let m = e.matroid();
                let kind = if e.graph().is_some() {
                    "graph"
                } else {
                    "matroid"
                };
                lines.push((
                    vec![
                        ("name", e.name.clone()),
                        ("kind", kind.to_string()),
                        ("elements", m.len().to_string()),
                        ("rank", m.rank().to_string()),
                        ("provenance", e.provenance.clone()),
                    ],
                    format!(
                        "{:<18} {:<8} {:>2} elements rank {:>2}  {}",
                        e.name,
                        kind,
                        m.len(),
                        m.rank(),
                        e.provenance
                    ),
                ));
            }
        }
        CatalogAction::Show { name } => {
            let e = cat.entry(name)?;
            let body = match &e.payload {
                Fixture::Graph(g) => formats::write_graph(&e.name, g),
                Fixture::Matroid(m) => formats::write_matroid(&e.name, m),
            };
            let mut text = format!("# {}\n", e.provenance);
            for v in &e.validations {
                let _ = writeln!(text, "#! {} {}", v.predicate, v.expected);
            }
            text.push_str(body.trim_end());
            lines.push((
                vec![
                    ("name", e.name.clone()),
                    ("provenance", e.provenance.clone()),
                    ("elements", e.matroid().labels().join(",")),
                    ("rank", e.matroid().rank().to_string()),
                    ("rows", rows_of(e.matroid())),
                ],
                text,
            ));
        }
    }
    for (fields, text) in lines {
        out.emit("entry", &fields, || text);
    }
    Ok(true)
}

fn quotients(
    base: &str,
    exclude: Option<&str>,
    reading: Reading,
    inputs: &mut Inputs<'_>,
    out: &mut Out,
) -> ToolResult<bool> {
    let f = inputs.matroid(base)?;
    let exclusion = match exclude {
        None => Exclusion::None,
        Some(x) => {
            let m = inputs.matroid(x)?;
            match reading {
                Reading::Minor => Exclusion::Minor(m),
                Reading::Extension => Exclusion::SingleExtension(m),
            }
        }
    };
    let cat = inputs.catalog()?;
    let results = graphic_quotients(&f, "a", &exclusion, &cat.named_graphs("H"))?;
    let mut all_names = Vec::new();
    for (i, r) in results.iter().enumerate() {
        let names = catalog_names(cat, &r.quotient, "H");
        let realized = if names.is_empty() {
            r.realizing_graph.as_ref().map_or_else(
                || "none".to_string(),
                |g| format!("unnamed graph on {} vertices", g.vertex_count()),
            )
        } else {
            join(&names)
        };
        all_names.extend(names);
        out.emit(
            "quotient",
            &[
                ("class", (i + 1).to_string()),
                ("column", format!("{:b}", r.extension_column)),
                ("elements", r.quotient.len().to_string()),
                ("rank", r.quotient.rank().to_string()),
                ("realized-by", realized.clone()),
            ],
            || {
                format!(
                    "class {}: column {:b}, {} elements rank {}, realized by {realized}",
                    i + 1,
                    r.extension_column,
                    r.quotient.len(),
                    r.quotient.rank()
                )
            },
        );
    }
    all_names.sort_by_key(|n| (n.len(), n.clone()));
    out.emit(
        "quotients",
        &[
            ("base", base.to_string()),
            ("classes", results.len().to_string()),
            ("graphs", join(&all_names)),
        ],
        || {
            format!(
                "{base}: {} graphic quotient classes, catalog graphs {}",
                results.len(),
                join(&all_names)
            )
        },
    );
    Ok(true)
}

fn search(k: usize, max: usize, inputs: &mut Inputs<'_>, out: &mut Out) -> ToolResult<bool> {
    let outcome = search_forbidden_minors(k, max, &Rayon)?;
    let cat = inputs.catalog()?;
    for (kind, list) in [
        ("obstruction", &outcome.obstructions),
        ("trivial", &outcome.trivial),
    ] {
        for r in list {
            let m = &r.matroid;
            let names = catalog_names(cat, m, "");
            let hit = r
                .f_member_hit
                .as_ref()
                .map_or_else(|| "none".to_string(), |c| c.member.to_string());
            let kur = r
                .trivial_witness
                .as_ref()
                .map_or_else(|| "none".to_string(), |c| c.member.to_string());
            out.emit(
                kind,
                &[
                    ("elements", m.len().to_string()),
                    ("rank", m.rank().to_string()),
                    ("t", join(&r.witness_t)),
                    ("excluded-minor", hit.clone()),
                    ("kuratowski", kur.clone()),
                    ("fixtures", join(&names)),
                    ("rows", rows_of(m)),
                ],
                || {
                    let named = if names.is_empty() { "no fixture".to_string() } else { join(&names) };
                    let extra = if kind == "trivial" { format!(", has {kur}") } else { String::new() };
                    format!(
                        "{kind}: {} elements rank {} ({named}), T={{{}}} gives {hit}{extra}; rows {}",
                        m.len(),
                        m.rank(),
                        join(&r.witness_t),
                        rows_of(m)
                    )
                },
            );
        }
    }
    let counts: Vec<String> = outcome
        .class_counts
        .iter()
        .map(ToString::to_string)
        .collect();
    out.emit(
        "search",
        &[
            ("k", k.to_string()),
            ("max-elements", outcome.max_elements.to_string()),
            ("obstructions", outcome.obstructions.len().to_string()),
            ("trivial", outcome.trivial.len().to_string()),
            ("good-classes-by-size", counts.join(",")),
        ],
        || {
            format!(
                "k={k} max-elements={}: {} obstructions, {} with an M(K5) or M(K3,3) minor; good classes by size {}",
                outcome.max_elements,
                outcome.obstructions.len(),
                outcome.trivial.len(),
                counts.join(",")
            )
        },
    );
    Ok(true)
}

fn verify(
    ids: &[String],
    opts: &Options,
    inputs: &mut Inputs<'_>,
    out: &mut Out,
) -> ToolResult<bool> {
    let all = ids.iter().any(|i| i == "all");
    let mut selected: Vec<&str> = Vec::new();
    let mut replay = all;
    for id in ids {
        match id.as_str() {
            "all" => selected.extend(CHECK_IDS),
            "witness-replay" => replay = true,
            s if CHECK_IDS.contains(&s) => selected.push(s),
            other => {
                return Err(ToolError::Usage(format!(
                    "unknown check {other}; known: {}, witness-replay, all",
                    CHECK_IDS.join(", ")
                )))
            }
        }
    }
    if replay && selected.is_empty() {
        selected.extend(CHECK_IDS);
    }
    let mut seen = Vec::new();
    selected.retain(|s| {
        let fresh = !seen.contains(s);
        seen.push(*s);
        fresh
    });
    let cat = inputs.catalog()?;
    let mut evidence = Vec::new();
    let mut results = Vec::new();
    let show = !(replay && !all && ids.iter().all(|i| i == "witness-replay"));
    for id in &selected {
        let o = checks::run(id, cat, opts, &Rayon)?.expect("id validated above");
        evidence.extend(o.evidence);
        if show {
            results.push(o.check);
        }
    }
    if replay {
        results.push(checks::replay_all(&evidence));
    }
    let mut ok = true;
    for c in &results {
        ok &= c.pass;
        let status = if c.pass { "PASS" } else { "FAIL" };
        out.emit(
            "check",
            &[
                ("id", c.id.to_string()),
                ("status", status.into()),
                ("detail", c.detail.clone()),
            ],
            || format!("CHECK {} {status} {}", c.id, c.detail),
        );
    }
    let passed = results.iter().filter(|c| c.pass).count();
    out.emit(
        "summary",
        &[
            ("passed", passed.to_string()),
            ("total", results.len().to_string()),
        ],
        || format!("SUMMARY {passed}/{} passed", results.len()),
    );
    Ok(ok)
}
