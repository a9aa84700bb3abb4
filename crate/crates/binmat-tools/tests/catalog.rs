use binmat::{search_forbidden_minors, Sequential};
use binmat_tools::formats::{parse_fixture, write_graph, write_matroid, Fixture};
use binmat_tools::{Catalog, Rayon, ToolError};

#[test]
fn every_fixture_loads_and_validates() {
    let cat = Catalog::embedded().unwrap();
    assert_eq!(cat.len(), 69);
    for e in cat.entries() {
        assert!(!e.provenance.is_empty(), "{} has no provenance", e.name);
        assert!(!e.validations.is_empty(), "{} has no validations", e.name);
    }
}

#[test]
fn fixtures_survive_a_write_parse_round_trip() {
    let cat = Catalog::embedded().unwrap();
    for e in cat.entries() {
        let text = match &e.payload {
            Fixture::Graph(g) => write_graph(&e.name, g),
            Fixture::Matroid(m) => write_matroid(&e.name, m),
        };
        let (meta, back) = parse_fixture(&text).unwrap();
        assert_eq!(meta.name, e.name);
        assert_eq!(&back.matroid().unwrap(), e.matroid(), "{}", e.name);
    }
}

#[test]
fn failing_validation_names_the_entry() {
    let src = vec![(
        "x.graph".to_string(),
        "graph x\n# made up\n#! edges 2\nedge a 1 2\n".to_string(),
    )];
    match Catalog::from_sources(src) {
        Err(ToolError::Fixture {
            entry, predicate, ..
        }) => {
            assert_eq!(entry, "x");
            assert_eq!(predicate, "edges 2");
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn unknown_names() {
    let cat = Catalog::embedded().unwrap();
    assert!(matches!(
        cat.matroid("G0"),
        Err(ToolError::UnknownFixture(_))
    ));
    assert!(cat.graph("F7").is_err());
}

#[test]
fn named_graph_prefix() {
    let cat = Catalog::embedded().unwrap();
    let hs: Vec<String> = cat.named_graphs("H").into_iter().map(|(n, _)| n).collect();
    assert_eq!(hs.len(), 11);
}

#[test]
fn executors_agree() {
    let a = search_forbidden_minors(3, 8, &Sequential).unwrap();
    let b = search_forbidden_minors(3, 8, &Rayon).unwrap();
    assert_eq!(a.class_counts, b.class_counts);
    assert_eq!(a.obstructions.len(), b.obstructions.len());
    for (x, y) in a.obstructions.iter().zip(&b.obstructions) {
        assert_eq!(x.matroid, y.matroid);
        assert_eq!(x.witness_t, y.witness_t);
    }
}
