//! The degree three presentation U3, the map onto the third Fox quotient and
//! its kernel, the relations R3 and the unit identities for H = G.
//!
//! Run with `cargo run --release --example third_quotient`.

use foxcalc::groupring::FoxSetting;
use foxcalc::groups::{build_preset, DEFAULT_MAX_ORDER};
use foxcalc::lie::{cor65, low_degree_isos, r3_checks, thm61, U3Pres};
use std::sync::Arc;

fn main() {
    for (spec, h) in [("quaternion8", "i"), ("dihedral:4", "G"), ("heisenberg:3", "x")] {
        let g = Arc::new(build_preset(spec, DEFAULT_MAX_ORDER).expect("preset"));
        let series = g.lower_central_series();
        let hsub = g.parse_subgroup(h).expect("subgroup");
        let s = FoxSetting::new(g, series, hsub, 3).expect("setting");
        let p = U3Pres::build(&s).expect("presentation");
        println!("{spec}, H = {h}: U3 = {}", p.group().describe());
        let mut verdicts = low_degree_isos(&p).expect("low degrees");
        verdicts.extend(thm61(&p, None).expect("kernel"));
        verdicts.extend(r3_checks(&p).expect("R3"));
        if h == "G" {
            verdicts.extend(cor65(&p).expect("units"));
        }
        for v in verdicts {
            println!("  {} {}", if v.pass { "ok  " } else { "FAIL" }, v.name);
            for (k, d) in &v.details {
                println!("      {k}: {d}");
            }
        }
    }
}
