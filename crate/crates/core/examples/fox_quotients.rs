//! Fox quotients F^(n-1) I(H) / F^n I(H) of an integral group ring, along
//! with augmentation quotients of the whole ring.
//!
//! Run with `cargo run --example fox_quotients`.

use foxcalc::groupring::FoxSetting;
use foxcalc::groups::{build_preset, DEFAULT_MAX_ORDER};
use std::sync::Arc;

fn main() {
    let depth = 4;
    for (spec, h) in [("cyclic:8", "a2"), ("dihedral:4", "r"), ("quaternion8", "i"), ("symmetric:3", "r")] {
        let g = Arc::new(build_preset(spec, DEFAULT_MAX_ORDER).expect("preset"));
        let series = g.lower_central_series();
        let hsub = g.parse_subgroup(h).expect("subgroup");
        let s = FoxSetting::new(g, series, hsub, depth + 1).expect("setting");
        for n in 1..=depth {
            let q = s.quot(&s.f_ih(n - 1), &s.f_ih(n));
            let a = s.quot(s.f(n), s.f(n + 1));
            println!("{spec}, H = <{h}>, n = {n}: fox {}, aug {}", q.group().describe(), a.group().describe());
        }
    }
}
