//! Parsing the text format and reporting structural problems.

use pcrank::{parse_matrix, validate, DEFAULT_RECIPROCITY_TOL};

fn report(name: &str, text: &str) {
    println!("== {name}");
    match parse_matrix(text) {
        Err(e) => println!("parse error: {e}"),
        Ok(m) => {
            let report = validate(&m, DEFAULT_RECIPROCITY_TOL);
            if report.ok {
                println!("valid");
            }
            for v in &report.violations {
                println!("{v}");
            }
        }
    }
}

fn main() {
    report("fine", "1,2,?\n1/2,1,4\n?,1/4,1\n");
    report("not reciprocal", "1,2\n3,1\n");
    report("one-sided gap", "1,2,?\n1/2,1,4\n5,1/4,1\n");
    report("two islands", "1,2,?,?\n1/2,1,?,?\n?,?,1,3\n?,?,1/3,1\n");
    report("bad token", "1,two\n1/2,1\n");
    report("zero", "1,0\n1,1\n");

    // Decimal reciprocals are off by rounding; a looser tolerance accepts them.
    let m = parse_matrix("1,3\n0.333333,1\n").unwrap();
    println!("== rounded decimals");
    println!("default tolerance ok: {}", validate(&m, DEFAULT_RECIPROCITY_TOL).ok);
    println!("tolerance 1e-5 ok: {}", validate(&m, 1e-5).ok);
}
