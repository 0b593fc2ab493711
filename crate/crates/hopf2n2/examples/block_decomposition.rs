//! The Wedderburn decomposition of H_{2n^2}: a complete set of
//! primitive central idempotents cutting the algebra into 2n
//! one-dimensional blocks and (n^2 - n)/2 blocks of 2x2 matrices.
//!
//! Run with an optional parameter: `cargo run --example block_decomposition -- 4`

use hopf2n2::center;
use hopf2n2::repr::SimpleLabel;
use hopf2n2::Result;

fn main() -> Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("parameter must be an integer"))
        .unwrap_or(3);

    let idems = center::primitive_central_idempotents(n);
    println!("{} primitive central idempotents for n = {n}:", idems.len());
    for e in &idems {
        println!(
            "  {}  block size {}  simple module {}",
            e.kind,
            e.block_size(),
            SimpleLabel::from_block(n, e.kind)
        );
    }

    let total: usize = idems.iter().map(|e| e.block_size() * e.block_size()).sum();
    println!("sum of squared block sizes = {total} = dim H_{{2*{n}^2}}");
    println!(
        "center dimension: {} by formula, {} by commutant rank",
        center::center_dim_formula(n),
        center::center_dimension_commutant(n)
    );
    println!();

    let report = center::verify_block_structure(n);
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        std::process::exit(1);
    }
}
