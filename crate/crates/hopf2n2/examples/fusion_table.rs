//! The full fusion table of H_{2n^2}: products of all simple classes
//! by the closed-form rules, plus the ring checks (unit, commutativity,
//! associativity, dimension grading, duality, and agreement with the
//! trace oracle).
//!
//! Run with an optional parameter: `cargo run --example fusion_table -- 3`

use hopf2n2::fusion;
use hopf2n2::Result;

fn main() -> Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("parameter must be an integer"))
        .unwrap_or(2);

    let table = fusion::fusion_table(n)?;
    let labels = table.labels();
    println!(
        "fusion table for n = {n}: {} simples, {} products",
        labels.len(),
        labels.len() * labels.len()
    );
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate() {
            if i <= j {
                println!("  {a} * {b} = {}", table.cell(i, j));
            }
        }
    }
    println!();

    let report = fusion::verify_fusion(n);
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        std::process::exit(1);
    }
}
