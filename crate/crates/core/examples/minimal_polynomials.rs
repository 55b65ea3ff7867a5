//! Minimal polynomials of `2cos(π/k)` and arithmetic in ℚ(cos(π/k)).

use std::fmt::Write;

use rwps::{abs_cos, minimal_polynomial, number_field, rat, FieldElement};

pub fn run_example() -> String {
    let mut out = String::new();
    for k in 1..=8 {
        let mp = minimal_polynomial(k).unwrap();
        writeln!(out, "k = {k}: degree {}, {mp}", mp.degree()).unwrap();
    }

    // In ℚ(cos(π/5)) the generator theta = 2cos(π/5) is the golden ratio.
    let field = number_field(5).unwrap();
    let theta = FieldElement::theta(&field);
    writeln!(
        out,
        "field {}, generator {}",
        field.label(),
        field.theta_label()
    )
    .unwrap();
    writeln!(out, "theta^2 = {}", &theta * &theta).unwrap();
    writeln!(out, "1/theta = {}", theta.inverse().unwrap()).unwrap();

    let c = abs_cos(5).unwrap();
    let expr = &c.scale(&rat(3, 2)) - &FieldElement::from_rational(&field, &rat(1, 4));
    writeln!(out, "3/2 cos(pi/5) - 1/4 = {expr} ≈ {:.12}", expr.to_f64()).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
