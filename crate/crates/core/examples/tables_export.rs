//! Driving the command layer from JSON and rendering in every format.

use rwps::cli::{parse_config, run, Format};

pub fn run_example() -> String {
    let mut out = String::new();
    let config = br#"{
        "command": "tables",
        "family": {"kind": "ultraspherical", "alpha": "1/2"},
        "n": 4
    }"#;
    let mut config = parse_config(config).unwrap();
    for format in [Format::Text, Format::Csv, Format::Latex] {
        config.format = format;
        let output = run(&config).unwrap();
        out.push_str(&output.rendered);
        out.push('\n');
    }

    let config = br#"{"command": "minpoly", "k": 7, "format": "json"}"#;
    out.push_str(&run(&parse_config(config).unwrap()).unwrap().rendered);

    let config = br#"{"command": "expand", "family": {"kind": "random", "len": 6}, "k": 2, "m": 5, "seed": 3}"#;
    out.push_str(&run(&parse_config(config).unwrap()).unwrap().rendered);
    out
}

fn main() {
    print!("{}", run_example());
}
