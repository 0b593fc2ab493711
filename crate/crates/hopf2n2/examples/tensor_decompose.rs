//! Tensor products of simple modules, decomposed two independent ways:
//! the closed-form fusion rules, and the trace oracle that evaluates
//! each primitive central idempotent on the explicit tensor matrices.
//! The two routes must agree on every pair.
//!
//! Run with an optional parameter: `cargo run --example tensor_decompose -- 5`

use hopf2n2::fusion;
use hopf2n2::repr::{self, SimpleLabel};
use hopf2n2::Result;

fn main() -> Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("parameter must be an integer"))
        .unwrap_or(2);

    // The square of the first two-dimensional module, both ways.
    let c = SimpleLabel::two_dim(n, 0, 1)?;
    let rep = repr::build_simple(n, c)?;
    let square = repr::tensor_action(&rep.action, &rep.action);
    let oracle = repr::decompose(&square)?;
    let closed = fusion::fuse(n, c, c)?;
    println!("{c} (x) {c} by trace oracle: {oracle}");
    println!("{c} (x) {c} by closed form:  {closed}");
    println!();

    // Every ordered pair, both ways, with mismatches counted.
    let labels = SimpleLabel::enumerate(n);
    let mut checked = 0;
    let mut mismatches = 0;
    for &a in &labels {
        for &b in &labels {
            let ra = repr::build_simple(n, a)?;
            let rb = repr::build_simple(n, b)?;
            let t = repr::tensor_action(&ra.action, &rb.action);
            if repr::decompose(&t)? != fusion::fuse(n, a, b)? {
                mismatches += 1;
            }
            checked += 1;
        }
    }
    println!("checked {checked} ordered pairs for n = {n}: {mismatches} mismatches");
    if mismatches == 0 {
        Ok(())
    } else {
        std::process::exit(1);
    }
}
