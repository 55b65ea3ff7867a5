//! Polynomials in the Chebyshev T-basis.

use std::fmt::Write;

use rwps::{rat, u_in_t, QPoly};

pub fn run_example() -> String {
    let mut out = String::new();
    let p = QPoly::from_terms([(3, rat(1, 2)), (1, rat(-1, 3)), (0, rat(2, 1))]);
    let q = QPoly::t(2);
    writeln!(out, "p = {p}").unwrap();
    writeln!(out, "q = {q}").unwrap();
    writeln!(out, "p + q = {}", p.checked_add(&q).unwrap()).unwrap();
    writeln!(out, "p * q = {}", p.checked_mul(&q).unwrap()).unwrap();
    writeln!(out, "x * p = {}", p.mul_x()).unwrap();
    writeln!(out, "p(T_3(x)) = {}", p.compose_t(3)).unwrap();
    writeln!(out, "p(1) = {}", p.eval_one()).unwrap();
    writeln!(out, "U_4 = {}", u_in_t(4)).unwrap();
    writeln!(out, "(1 - x²) = {}", QPoly::one_minus_x_squared()).unwrap();
    writeln!(out, "p at |cos(π/4)| = {}", p.eval_at_abs_cos(4).unwrap()).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
