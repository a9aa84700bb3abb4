//! Named fixtures: every graph and matroid file under `data/`, validated at load time.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use binmat::{BinaryMatroid, ExcludedMinors, Multigraph};

use crate::error::{ToolError, ToolResult};
use crate::formats::{parse_fixture, Directive, Fixture};

/// Environment variable naming a fixture directory to use instead of the embedded files.
pub const FIXTURES_ENV: &str = "MATROID_FIXTURES";

macro_rules! embed {
    ($($f:literal),* $(,)?) => {
        &[$(($f, include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/", $f)))),*]
    };
}

const EMBEDDED: &[(&str, &str)] = embed![
    "A_i.graph",
    "A_ii.graph",
    "A_iii.graph",
    "A_iv.graph",
    "A_v.graph",
    "A_vi.graph",
    "A_vii.graph",
    "C1.graph",
    "C10.graph",
    "C11.graph",
    "C12.graph",
    "C13.graph",
    "C14.graph",
    "C15.graph",
    "C16.graph",
    "C17.graph",
    "C18.graph",
    "C19.graph",
    "C2.graph",
    "C20.graph",
    "C3.graph",
    "C4.graph",
    "C5.graph",
    "C6.graph",
    "C7.graph",
    "C8.graph",
    "C9.graph",
    "F7.matroid",
    "F7star.matroid",
    "G1.graph",
    "G1_tilde.graph",
    "G1_tilde_coloop.graph",
    "G2.graph",
    "G3.graph",
    "G3_tilde.graph",
    "G4.matroid",
    "G4_drawn.graph",
    "G5.graph",
    "G6.graph",
    "G7.graph",
    "H1.graph",
    "H10.graph",
    "H11.graph",
    "H2.graph",
    "H3.graph",
    "H4.graph",
    "H5.graph",
    "H6.graph",
    "H7.graph",
    "H8.graph",
    "H9.graph",
    "K33.graph",
    "K4.graph",
    "K5.graph",
    "Q1.graph",
    "Q2.graph",
    "Q3.graph",
    "Q4.graph",
    "Q5.graph",
    "Q6.graph",
    "a_i.graph",
    "a_ii.graph",
    "a_iii.graph",
    "a_iv.graph",
    "cycle4.graph",
    "cycle5.graph",
    "eulerian_4v10e.graph",
    "eulerian_4v9e.graph",
    "triangle.graph",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Graph,
    Matroid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub predicate: String,
    pub expected: String,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: Kind,
    pub payload: Fixture,
    pub provenance: String,
    pub validations: Vec<Validation>,
    /// Source file name, for messages.
    pub source: String,
    matroid: BinaryMatroid,
}

impl CatalogEntry {
    #[must_use]
    pub fn matroid(&self) -> &BinaryMatroid {
        &self.matroid
    }

    #[must_use]
    pub fn graph(&self) -> Option<&Multigraph> {
        match &self.payload {
            Fixture::Graph(g) => Some(g),
            Fixture::Matroid(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: BTreeMap<String, CatalogEntry>,
}

impl Catalog {
    /// Fixtures compiled into the binary.
    pub fn embedded() -> ToolResult<Self> {
        Self::from_sources(
            EMBEDDED
                .iter()
                .map(|(f, t)| ((*f).to_string(), (*t).to_string())),
        )
    }

    /// Every `.graph` and `.matroid` file in `dir`.
    pub fn from_dir(dir: &Path) -> ToolResult<Self> {
        let io = |source| ToolError::Io {
            path: dir.to_path_buf(),
            source,
        };
        let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                matches!(
                    p.extension().and_then(|x| x.to_str()),
                    Some("graph" | "matroid")
                )
            })
            .collect();
        files.sort();
        let mut sources = Vec::new();
        for p in files {
            let text = std::fs::read_to_string(&p).map_err(|source| ToolError::Io {
                path: p.clone(),
                source,
            })?;
            let name = p
                .file_name()
                .map_or_else(String::new, |n| n.to_string_lossy().into_owned());
            sources.push((name, text));
        }
        Self::from_sources(sources)
    }

    /// `dir` if given, else the directory in `MATROID_FIXTURES`, else the embedded fixtures.
    pub fn load(dir: Option<&Path>) -> ToolResult<Self> {
        match dir {
            Some(d) => Self::from_dir(d),
            None => match std::env::var_os(FIXTURES_ENV) {
                Some(d) if !d.is_empty() => Self::from_dir(Path::new(&d)),
                _ => Self::embedded(),
            },
        }
    }

    /// Parses every source, then runs every validation.
    pub fn from_sources(sources: impl IntoIterator<Item = (String, String)>) -> ToolResult<Self> {
        let mut entries = BTreeMap::new();
        for (file, text) in sources {
            let fail = |predicate: &str, detail: String| ToolError::Fixture {
                entry: file.clone(),
                predicate: predicate.to_string(),
                detail,
            };
            let (meta, payload) = parse_fixture(&text).map_err(|e| fail("parse", e.to_string()))?;
            let matroid = payload
                .matroid()
                .map_err(|e| fail("circuit matroid", e.to_string()))?;
            let kind = match payload {
                Fixture::Graph(_) => Kind::Graph,
                Fixture::Matroid(_) => Kind::Matroid,
            };
            let validations = meta
                .directives
                .iter()
                .map(
                    |Directive {
                         predicate, args, ..
                     }| Validation {
                        predicate: predicate.clone(),
                        expected: args.join(" "),
                    },
                )
                .collect();
            let entry = CatalogEntry {
                name: meta.name.clone(),
                kind,
                payload,
                provenance: meta.provenance,
                validations,
                source: file.clone(),
                matroid,
            };
            if entries.insert(meta.name.clone(), entry).is_some() {
                return Err(fail("unique name", format!("{} defined twice", meta.name)));
            }
        }
        let catalog = Self { entries };
        let excluded = ExcludedMinors::new();
        for entry in catalog.entries.values() {
            for v in &entry.validations {
                catalog
                    .check(entry, v, &excluded)
                    .map_err(|detail| ToolError::Fixture {
                        entry: entry.name.clone(),
                        predicate: format!("{} {}", v.predicate, v.expected),
                        detail,
                    })?;
            }
        }
        Ok(catalog)
    }

    #[must_use]
    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.get(name)
    }

    pub fn entry(&self, name: &str) -> ToolResult<&CatalogEntry> {
        self.get(name)
            .ok_or_else(|| ToolError::UnknownFixture(name.to_string()))
    }

    pub fn matroid(&self, name: &str) -> ToolResult<BinaryMatroid> {
        self.entry(name).map(|e| e.matroid.clone())
    }

    pub fn graph(&self, name: &str) -> ToolResult<&Multigraph> {
        self.entry(name)?
            .graph()
            .ok_or_else(|| ToolError::Usage(format!("{name} is not a graph")))
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Named graphs, for matching quotients against.
    #[must_use]
    pub fn named_graphs(&self, prefix: &str) -> Vec<(String, Multigraph)> {
        self.entries
            .values()
            .filter(|e| e.name.starts_with(prefix))
            .filter_map(|e| e.graph().map(|g| (e.name.clone(), g.clone())))
            .collect()
    }

    fn check(
        &self,
        entry: &CatalogEntry,
        v: &Validation,
        excluded: &ExcludedMinors,
    ) -> Result<(), String> {
        let m = &entry.matroid;
        let args: Vec<&str> = v.expected.split_whitespace().collect();
        let num = || -> Result<usize, String> {
            args.first()
                .and_then(|a| a.parse().ok())
                .ok_or_else(|| format!("expected a count, got {:?}", v.expected))
        };
        let flag = || -> Result<bool, String> {
            match args.first() {
                Some(&"yes") => Ok(true),
                Some(&"no") => Ok(false),
                _ => Err(format!("expected yes or no, got {:?}", v.expected)),
            }
        };
        let other = |i: usize| -> Result<&CatalogEntry, String> {
            let n = args.get(i).ok_or("missing fixture name")?;
            self.get(n).ok_or_else(|| format!("unknown fixture {n}"))
        };
        let graph = || {
            entry
                .graph()
                .ok_or_else(|| "only applies to graphs".to_string())
        };
        let expect = |ok: bool, found: String| {
            if ok {
                Ok(())
            } else {
                Err(format!("found {found}"))
            }
        };
        match v.predicate.as_str() {
            "elements" => expect(m.len() == num()?, m.len().to_string()),
            "rank" => expect(m.rank() == num()?, m.rank().to_string()),
            "loops" => {
                let l = m.loops().count_ones() as usize;
                expect(l == num()?, l.to_string())
            }
            "cographic" => {
                let c = excluded.is_cographic(m);
                expect(c == flag()?, c.to_string())
            }
            "graphic" => {
                let c = excluded.is_graphic(m);
                expect(c == flag()?, c.to_string())
            }
            "trivial" => {
                let c = excluded.kuratowski_minor(m).is_some();
                expect(c == flag()?, c.to_string())
            }
            "two_circuits" => {
                let c = m.circuits().iter().filter(|c| c.count_ones() == 2).count();
                expect(c == num()?, c.to_string())
            }
            "matroid_iso" => {
                let o = other(0)?;
                expect(
                    m.is_isomorphic(o.matroid()).is_some(),
                    format!("not isomorphic to M({})", o.name),
                )
            }
            "dual_of" => {
                let o = other(0)?;
                expect(
                    m.is_isomorphic(&o.matroid().dual()).is_some(),
                    format!("not isomorphic to the dual of {}", o.name),
                )
            }
            "has_minor" => {
                let o = other(0)?;
                expect(
                    m.has_minor(o.matroid()).is_some(),
                    format!("no minor isomorphic to {}", o.name),
                )
            }
            "deletion_of" => {
                let o = other(0)?;
                let z = args.get(1).ok_or("missing element")?;
                let d = m.delete(&[*z]).map_err(|e| e.to_string())?;
                expect(
                    d.is_isomorphic(o.matroid()).is_some(),
                    format!("deleting {z} does not give {}", o.name),
                )
            }
            "vertices" => {
                let g = graph()?;
                expect(g.vertex_count() == num()?, g.vertex_count().to_string())
            }
            "edges" => {
                let g = graph()?;
                expect(g.edge_count() == num()?, g.edge_count().to_string())
            }
            "simple" => {
                let g = graph()?;
                expect(g.is_simple() == flag()?, g.is_simple().to_string())
            }
            "biconnected" => {
                let g = graph()?;
                expect(
                    g.is_biconnected() == flag()?,
                    g.is_biconnected().to_string(),
                )
            }
            "eulerian" => {
                let g = graph()?;
                expect(g.is_eulerian() == flag()?, g.is_eulerian().to_string())
            }
            "blocks" | "loop_blocks" => {
                let p = graph()?.structural_profile().map_err(|e| e.to_string())?;
                let c = if v.predicate == "blocks" {
                    p.blocks
                } else {
                    p.loop_blocks
                };
                expect(c == num()?, c.to_string())
            }
            "two_edge_cut" => {
                let c = graph()?.has_two_edge_cut().is_some();
                expect(c == flag()?, c.to_string())
            }
            "two_edge_cuts" => {
                let c = graph()?.two_edge_cuts().len();
                expect(c == num()?, c.to_string())
            }
            "max_parallel" => {
                let p = graph()?.structural_profile().map_err(|e| e.to_string())?;
                let c = p.parallel_classes.first().copied().unwrap_or(0);
                expect(c == num()?, c.to_string())
            }
            "graph_iso" => {
                let g = graph()?;
                let o = other(0)?;
                let h = o
                    .graph()
                    .ok_or_else(|| format!("{} is not a graph", o.name))?;
                expect(
                    g.isomorphism(h).is_some(),
                    format!("not isomorphic to {}", o.name),
                )
            }
            p => Err(format!("unknown predicate {p}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_catalog_loads() {
        let c = Catalog::embedded().unwrap();
        assert_eq!(c.len(), EMBEDDED.len());
        assert_eq!(c.matroid("F7").unwrap().rank(), 3);
    }

    #[test]
    fn failed_validation_names_entry_and_predicate() {
        let src = [(
            "t.graph".to_string(),
            "graph tri\n#! edges 4\nedge a 1 2\nedge b 2 3\nedge c 1 3\n".to_string(),
        )];
        match Catalog::from_sources(src) {
            Err(ToolError::Fixture {
                entry,
                predicate,
                detail,
            }) => {
                assert_eq!(entry, "tri");
                assert_eq!(predicate, "edges 4");
                assert_eq!(detail, "found 3");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
