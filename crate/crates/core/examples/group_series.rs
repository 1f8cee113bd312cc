//! Finite groups from presets, their N-series and the graded Lie ring of a
//! series.
//!
//! Run with `cargo run --example group_series`.

use foxcalc::groups::{build_preset, DEFAULT_MAX_ORDER};
use foxcalc::lie::GradedLieRing;
use std::sync::Arc;

fn main() {
    for spec in ["dihedral:4", "quaternion8", "heisenberg:3", "alternating:4"] {
        let g = Arc::new(build_preset(spec, DEFAULT_MAX_ORDER).expect("preset"));
        let lcs = g.lower_central_series();
        println!("{spec}: order {}, exponent {}, center of order {}", g.order(), g.exponent(), g.center().order());
        println!("  lower central series {:?} with orders {:?}", lcs.describe(&g), lcs.orders());
        let l = GradedLieRing::new(g.clone(), &lcs).expect("N-series");
        for n in 1..=3 {
            println!("  L{n} = {}", l.piece(n).group().describe());
        }
    }

    // The action series of a normal subgroup under conjugation by the whole group.
    let d4 = build_preset("dihedral:4", DEFAULT_MAX_ORDER).expect("preset");
    let v4 = d4.parse_subgroup("r2,s").expect("subgroup");
    let act = d4.action_series(&v4, &d4.whole()).expect("normal");
    println!("dihedral:4 acting on <r2,s>: {:?}", act.describe(&d4));
}
