//! All simple modules of H_{2n^2} as explicit matrices: 2n characters
//! S_m and n(n-1)/2 two-dimensional modules S_{i,j}. Every one is
//! checked against the defining relations, and the squared dimensions
//! sum to the algebra dimension.
//!
//! Run with an optional parameter: `cargo run --example simple_modules -- 5`

use hopf2n2::repr::{self, SimpleLabel};
use hopf2n2::Result;

fn main() -> Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("parameter must be an integer"))
        .unwrap_or(3);

    let labels = SimpleLabel::enumerate(n);
    println!("{} simple modules for n = {n}:", labels.len());
    for chunk in labels.chunks(8) {
        let row: Vec<String> = chunk.iter().map(|l| l.to_string()).collect();
        println!("  {}", row.join("  "));
    }

    let sum_sq: usize = labels.iter().map(|l| l.dim() * l.dim()).sum();
    println!("sum of squared dimensions = {sum_sq}");
    println!();

    let label = SimpleLabel::two_dim(n, 0, 1)?;
    let rep = repr::build_simple(n, label)?;
    println!("matrices of {label}:");
    println!("x -> {:?}", rep.action.x());
    println!("y -> {:?}", rep.action.y());
    println!("z -> {:?}", rep.action.z());

    let report = repr::verify_representations(n);
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        std::process::exit(1);
    }
}
