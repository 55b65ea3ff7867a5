//! Explicit T-expansions of sieved polynomials from the connection tables.

use std::fmt::Write;

use rwps::{polynomial, pq_tables, rat, sieved_poly_expansion, FamilySpec};

pub fn run_example() -> String {
    let mut out = String::new();
    let parent = FamilySpec::ultraspherical(rat(1, 2)).unwrap();

    let tables = pq_tables(&parent, 3).unwrap();
    for n in 0..=3 {
        let row = |v: &[rwps::Rational]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(
            out,
            "n = {n}: r = [{}], p = [{}], q = [{}]",
            row(&tables.r[n]),
            row(&tables.p[n]),
            row(&tables.q[n])
        )
        .unwrap();
    }

    for k in 2..=3 {
        for m in 0..=7 {
            let expanded = sieved_poly_expansion(&parent, k, m).unwrap();
            let direct = polynomial(&parent.sieve(k), m).unwrap();
            assert_eq!(expanded, direct);
            writeln!(out, "P_{m}(x;{k}) = {expanded}").unwrap();
        }
    }

    // P_{km}(x;k) = P_m(T_k(x)).
    let composed = polynomial(&parent, 2).unwrap().compose_t(3);
    writeln!(out, "P_2(T_3(x)) = {composed}").unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
