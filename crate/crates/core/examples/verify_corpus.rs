//! Runs selected verification suites over the shipped corpus and prints the
//! deterministic part of the report.
//!
//! Run with `cargo run --release --example verify_corpus -- prop3.1,thm6.1`.

use foxcalc::corpus::{default_corpus_path, load_corpus};
use foxcalc::groups::DEFAULT_MAX_ORDER;
use foxcalc::report::{select_suites, verify, VerifyOptions};

fn main() {
    let suites: Vec<String> = std::env::args().nth(1).unwrap_or_else(|| "prop3.1,thm3.6".into()).split(',').map(str::to_string).collect();
    let entries = load_corpus(&default_corpus_path(), DEFAULT_MAX_ORDER).expect("corpus");
    let small: Vec<_> = entries.into_iter().filter(|e| e.group.order() <= 12).collect();
    let report = verify(&small, &VerifyOptions { suites: select_suites(Some(&suites)).expect("known suites"), ..VerifyOptions::default() });
    let t = &report.payload.totals;
    println!("{} passed, {} failed, {} skipped in {} ms", t.pass, t.fail, t.skip, report.wall_time.total_ms);
    println!("{}", report.payload_json());
}
