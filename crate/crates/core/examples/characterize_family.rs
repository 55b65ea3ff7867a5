//! Deciding from finitely many coefficients whether a family is sieved.

use std::fmt::Write;

use rwps::{characterization_report, check_sieved_direct, rat, Condition, FamilySpec};

pub fn run_example() -> String {
    let mut out = String::new();
    let parent = FamilySpec::ultraspherical(rat(1, 2)).unwrap();

    let sieved = parent.sieve(3);
    let report = characterization_report(&sieved, 3, 12).unwrap();
    write!(out, "{report}").unwrap();

    // Moving one coefficient off ½ breaks every condition.
    let broken = sieved.with_override(7, rat(1, 3)).unwrap();
    let report = characterization_report(&broken, 3, 12).unwrap();
    write!(out, "{report}").unwrap();
    for condition in Condition::SIEVED {
        let verdict = report.verdict(condition).unwrap();
        writeln!(
            out,
            "{condition}: first failure at {:?}",
            verdict.failing_index()
        )
        .unwrap();
    }
    writeln!(
        out,
        "direct: {}",
        check_sieved_direct(&broken, 3, 12).unwrap()
    )
    .unwrap();

    // For k = 1 the conditions single out the ultraspherical families.
    let report = characterization_report(&parent, 1, 10).unwrap();
    write!(out, "{report}").unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
