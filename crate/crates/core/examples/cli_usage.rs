//! Drive the command-line front end in process and show text and JSON
//! output with exit codes.

use lieexp::cli::run_with_limit;

fn main() {
    let invocations: [&[&str]; 5] = [
        &[
            "lieexp",
            "bracket",
            "--algebra",
            "H(1,1)",
            "e^{2*x1}*e^{3*y1}*y1",
            "e^{-2*x1}*e^{-3*y1}",
        ],
        &[
            "lieexp",
            "decompose",
            "--algebra",
            "H(1,1)",
            "e^{2*x1}*y1 + x1 + e^{-1*y1}",
        ],
        &[
            "lieexp",
            "grade",
            "--algebra",
            "W(1; x1:[1])",
            "e^{2*x1}*x1^3 D1",
            "--json",
        ],
        &["lieexp", "parse-check", "--algebra", "W(1; x1:[1])", "x1^-2 D1"],
        &["lieexp", "bracket", "--algebra", "H(1)", "x1"],
    ];
    for args in invocations {
        let out = run_with_limit(args.iter().copied(), None);
        println!("$ {}", args[1..].join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("exit {}\n", out.code);
    }
}
