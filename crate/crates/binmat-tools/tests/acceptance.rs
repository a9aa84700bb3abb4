//! The ten acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria the fixtures cannot meet are listed in `KNOWN_SHORTFALLS`; the target fails when the
//! set of failing criteria differs from that list in either direction.

use std::time::{Duration, Instant};

use binmat_tools::checks::{self, Check, Evidence, Options};
use binmat_tools::{Catalog, Rayon};

/// Criteria that fail on the published data, with the reason printed alongside.
const KNOWN_SHORTFALLS: &[(u32, &str)] = &[
    (8, "G3 contains M(K3,3), so the filter sets it and its extension aside; the extended G3 has 11 elements"),
    (9, "H2 has one coextension class without a 2-edge cut, not two"),
];

struct Criterion {
    number: u32,
    title: &'static str,
    ids: &'static [&'static str],
    limit: Duration,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "splitting the printed matrix gives F7*",
        ids: &["split-g4"],
        limit: Duration::from_secs(1),
    },
    Criterion {
        number: 2,
        title: "companion splittings",
        ids: &["split-companions"],
        limit: Duration::from_secs(10),
    },
    Criterion {
        number: 3,
        title: "graphic quotient counts",
        ids: &["quotient-counts"],
        limit: Duration::from_secs(30),
    },
    Criterion {
        number: 4,
        title: "parity of K3,3 extension quotients",
        ids: &["k33-extension-parity"],
        limit: Duration::from_secs(5),
    },
    Criterion {
        number: 5,
        title: "splitting identities",
        ids: &["split-identities"],
        limit: Duration::from_secs(120),
    },
    Criterion {
        number: 6,
        title: "excluded-minor classifier",
        ids: &["excluded-minor-classifier"],
        limit: Duration::from_secs(30),
    },
    Criterion {
        number: 7,
        title: "enumeration counts",
        ids: &["enumeration-counts"],
        limit: Duration::from_secs(60),
    },
    Criterion {
        number: 8,
        title: "obstruction searches at 10 elements",
        ids: &["search-k2", "search-k3"],
        limit: Duration::from_secs(1800),
    },
    Criterion {
        number: 9,
        title: "coextension counts",
        ids: &["coextension-counts"],
        limit: Duration::from_secs(60),
    },
];

fn main() {
    let cat = Catalog::embedded().expect("catalog loads");
    let opts = Options::default();
    let mut evidence: Vec<Evidence> = Vec::new();
    let mut failing = Vec::new();
    let mut report =
        |number: u32, title: &str, checks: &[Check], elapsed: Duration, limit: Option<Duration>| {
            let in_time = limit.is_none_or(|l| elapsed <= l);
            let pass = in_time && checks.iter().all(|c| c.pass);
            if !pass {
                failing.push(number);
            }
            println!(
                "CRITERION {number} {} {title} ({elapsed:.2?})",
                if pass { "PASS" } else { "FAIL" }
            );
            for c in checks {
                println!(
                    "    {} {}: {}",
                    if c.pass { "ok" } else { "failed" },
                    c.id,
                    c.detail
                );
            }
            if !in_time {
                println!("    over the time limit of {:?}", limit.unwrap_or_default());
            }
        };
    for c in CRITERIA {
        let start = Instant::now();
        let mut results = Vec::new();
        for id in c.ids {
            let o = checks::run(id, &cat, &opts, &Rayon)
                .expect("check runs")
                .expect("known id");
            evidence.extend(o.evidence);
            results.push(o.check);
        }
        report(c.number, c.title, &results, start.elapsed(), Some(c.limit));
    }
    // Reports from the forward checks join the replay pass too.
    for id in ["forward-k2", "forward-k3", "minor-direction-g2-g5"] {
        evidence.extend(
            checks::run(id, &cat, &opts, &Rayon)
                .expect("check runs")
                .expect("known id")
                .evidence,
        );
    }
    let start = Instant::now();
    let replay = checks::replay_all(&evidence);
    report(
        10,
        "every witness and report replays",
        &[replay],
        start.elapsed(),
        None,
    );

    let expected: Vec<u32> = KNOWN_SHORTFALLS.iter().map(|(n, _)| *n).collect();
    for (n, why) in KNOWN_SHORTFALLS {
        println!("known shortfall, criterion {n}: {why}");
    }
    if failing != expected {
        eprintln!("failing criteria {failing:?}, expected {expected:?}");
        std::process::exit(1);
    }
}
