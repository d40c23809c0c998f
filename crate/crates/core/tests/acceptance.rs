//! The twelve acceptance criteria, one line each. Time limits are wall-clock
//! bounds on the suite run and are part of the criterion.

use kummer_core::sweeps::{find_suite, SuiteResult};
use std::io::Write;
use std::time::Duration;

struct Criterion {
    id: u32,
    suite: &'static str,
    time_limit: Option<Duration>,
}

const CRITERIA: [Criterion; 12] = [
    Criterion {
        id: 1,
        suite: "tower-degree",
        time_limit: Some(Duration::from_secs(5)),
    },
    Criterion {
        id: 2,
        suite: "mu-cohomology",
        time_limit: Some(Duration::from_secs(5)),
    },
    Criterion {
        id: 3,
        suite: "top-level-acyclic",
        time_limit: None,
    },
    Criterion {
        id: 4,
        suite: "descent",
        time_limit: None,
    },
    Criterion {
        id: 5,
        suite: "theta-surjection",
        time_limit: None,
    },
    Criterion {
        id: 6,
        suite: "idempotents",
        time_limit: Some(Duration::from_secs(2)),
    },
    Criterion {
        id: 7,
        suite: "relabel",
        time_limit: None,
    },
    Criterion {
        id: 8,
        suite: "laurent-symbol",
        time_limit: None,
    },
    Criterion {
        id: 9,
        suite: "mixed-valuations",
        time_limit: None,
    },
    Criterion {
        id: 10,
        suite: "character-subgroups",
        time_limit: Some(Duration::from_secs(60)),
    },
    Criterion {
        id: 11,
        suite: "induction",
        time_limit: None,
    },
    Criterion {
        id: 12,
        suite: "cohomology-oracle",
        time_limit: None,
    },
];

fn line(c: &Criterion, r: &SuiteResult, in_time: bool) -> String {
    let limit = c
        .time_limit
        .map_or_else(String::new, |t| format!(" (limit {:.0?})", t));
    format!(
        "criterion {:>2} {:<20} {}  instances={} failures={} elapsed={:.2?}{}",
        c.id,
        c.suite,
        if r.passed() && in_time {
            "PASS"
        } else {
            "FAIL"
        },
        r.instances,
        r.failures,
        r.elapsed,
        limit,
    )
}

#[test]
fn acceptance_criteria() {
    let mut err = std::io::stderr().lock();
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let r = find_suite(c.suite).expect("registered suite").run();
        let in_time = c.time_limit.is_none_or(|t| r.elapsed <= t);
        // Written to the raw handle so the lines survive output capture.
        writeln!(err, "{}", line(c, &r, in_time)).unwrap();
        for f in &r.failure_samples {
            writeln!(err, "    {f}").unwrap();
        }
        if !(r.passed() && in_time) {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
