//! The operators `D_k`, `A_k` and the Fourier coefficients of a family.

use std::fmt::Write;

use rwps::{
    alpha_closed_forms, apply_ak, apply_dk, fourier_table, kernel_polynomial, polynomial,
    product_rule_residual, rat, sigma_val, FamilySpec, QPoly,
};

pub fn run_example() -> String {
    let mut out = String::new();
    let parent = FamilySpec::ultraspherical(rat(1, 2)).unwrap();
    let sieved = parent.sieve(2);

    let p3 = polynomial(&sieved, 3).unwrap();
    writeln!(out, "P_3(x;2) = {p3}").unwrap();
    writeln!(out, "D_2 P_3 = {}", apply_dk(&p3, 2).unwrap()).unwrap();
    writeln!(out, "A_2 P_3 = {}", apply_ak(&p3, 2).unwrap()).unwrap();
    let kernel = kernel_polynomial(&sieved, 2).unwrap();
    writeln!(out, "P_2* = {kernel}").unwrap();

    // D_1 is d/dx.
    writeln!(out, "D_1 T_3 = {}", apply_dk(&QPoly::t(3), 1).unwrap()).unwrap();

    let p = QPoly::from_terms([(2, rat(1, 2)), (1, rat(1, 1))]);
    let q = QPoly::from_terms([(3, rat(-2, 3)), (0, rat(1, 5))]);
    let residual = product_rule_residual(&p, &q, 5).unwrap();
    writeln!(out, "product rule residual for k = 5: {residual}").unwrap();

    let table = fourier_table(&parent, 2, 4).unwrap();
    for n in 0..=4i64 {
        let row: Vec<String> = (0..=n)
            .map(|j| table.kappa(n, j).unwrap().to_string())
            .collect();
        writeln!(out, "kappa_{n}(0..={n}) = [{}]", row.join(", ")).unwrap();
    }
    let (from_table, closed) = sigma_val(&parent, 2, 3).unwrap();
    writeln!(out, "sigma(3) = {from_table} = {closed}").unwrap();
    let (diag, sub) = alpha_closed_forms(&parent, 2, 4).unwrap();
    writeln!(out, "alpha_4(4) = {diag}, alpha_4(2) = {}", sub.unwrap()).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
