//! Families, their polynomials, weights and kernel polynomials.

use std::fmt::Write;

use rwps::{c_star, kernel_polynomial, polynomial, rat, weight_h, FamilySpec};

pub fn run_example() -> String {
    let mut out = String::new();
    let families = [
        FamilySpec::chebyshev_t(),
        FamilySpec::ultraspherical(rat(1, 2)).unwrap(),
        FamilySpec::table(vec![
            rat(1, 3),
            rat(2, 5),
            rat(1, 2),
            rat(3, 7),
            rat(1, 4),
            rat(2, 3),
        ])
        .unwrap(),
    ];
    for spec in &families {
        writeln!(out, "{}", spec.fingerprint()).unwrap();
        let c = spec.coefficients(4).unwrap();
        let c: Vec<String> = c.iter().map(ToString::to_string).collect();
        writeln!(out, "  c_1..c_4 = [{}]", c.join(", ")).unwrap();
        for n in 0..=4 {
            writeln!(out, "  P_{n} = {}", polynomial(spec, n).unwrap()).unwrap();
        }
        let h = weight_h(spec, 4).unwrap();
        writeln!(out, "  h(4) = {}", h.get(4)).unwrap();
        writeln!(out, "  P_4* = {}", kernel_polynomial(spec, 4).unwrap()).unwrap();
        let (ratio, cd) = c_star(spec, 4).unwrap();
        writeln!(out, "  C_4* = {ratio} (Christoffel-Darboux: {cd})").unwrap();
    }

    // A table only covers the coefficients it lists.
    let err = polynomial(&families[2], 9).unwrap_err();
    writeln!(out, "P_9 of the table family: {err}").unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
