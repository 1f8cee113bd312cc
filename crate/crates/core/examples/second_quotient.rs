//! Checks of the second Fox quotient: the tensor description over H, the
//! pushout squares for a normal subgroup K, and the induced-subgroup
//! identities.
//!
//! Run with `cargo run --release --example second_quotient`.

use foxcalc::groupring::FoxSetting;
use foxcalc::groups::{build_preset, DEFAULT_MAX_ORDER};
use foxcalc::tensor_h::{prop31, thm110, thm33, thm36, Verdict};
use std::sync::Arc;

fn show(v: &Verdict) {
    let status = if v.pass { "ok  " } else { "FAIL" };
    println!("  {status} {}{}", v.name, v.witness.as_deref().map(|w| format!(" ({w})")).unwrap_or_default());
}

fn main() {
    for (spec, h) in [("dihedral:4", "r"), ("quaternion8", "G"), ("cyclic:2*cyclic:4", "b")] {
        let g = Arc::new(build_preset(spec, DEFAULT_MAX_ORDER).expect("preset"));
        let series = g.lower_central_series();
        let hsub = g.parse_subgroup(h).expect("subgroup");
        let s = FoxSetting::new(g.clone(), series, hsub, 3).expect("setting");
        println!("{spec}, H = {h}");
        let ih = s.ih.clone();
        show(&prop31(&s, &ih).expect("prop31"));
        for v in thm36(&s, &g.center()).expect("thm36") {
            show(&v);
        }
        for v in thm33(&s, &g.trivial_subgroup(), &ih).expect("thm33") {
            show(&v);
        }
        if g.is_normal(&s.h) {
            for v in thm110(&s, &ih).expect("thm110") {
                show(&v);
            }
        }
    }
}
