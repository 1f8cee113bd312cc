//! Hermite and Smith normal forms, and the abelian group constructions built
//! on them: tensor products, Tor and exterior squares.
//!
//! Run with `cargo run --example smith_forms`.

use foxcalc::exactla::{exterior_square, hnf, snf, tensor, tor, FgAbGroup, IntMatrix};
use std::sync::Arc;

fn show(name: &str, m: &IntMatrix) {
    println!("{name} =");
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
        println!("  [{} ]", cells.join(""));
    }
}

fn main() {
    let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let (h, _) = hnf(&m);
    let (s, _, _) = snf(&m);
    show("M", &m);
    show("HNF(M)", &h);
    show("SNF(M)", &s);

    // Rows of M as relations on three generators.
    let a = FgAbGroup::new(3, m.to_rows());
    println!("Z^3 / rows(M) = {}", a.describe());

    let x = FgAbGroup::from_i64_divisors(&[4, 6]);
    let y = FgAbGroup::from_i64_divisors(&[2, 0]);
    println!("({}) (x) ({}) = {}", x.describe(), y.describe(), tensor(&x, &y).describe());
    println!("Tor({}, {}) = {}", x.describe(), y.describe(), tor(&x, &y).0.describe());
    let (w, _) = exterior_square(&Arc::new(FgAbGroup::from_i64_divisors(&[2, 4, 12])));
    println!("wedge^2(Z/2 + Z/4 + Z/12) = {}", w.describe());
}
