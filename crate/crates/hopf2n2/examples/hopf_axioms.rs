//! Construct H_{2n^2} and machine-check every Hopf axiom: normal-form
//! multiplication, coassociativity, counit laws, the coproduct and
//! counit being algebra maps, and the antipode identities.
//!
//! Run with an optional parameter: `cargo run --example hopf_axioms -- 4`

use hopf2n2::hopf::{self, AlgElem};
use hopf2n2::Result;

fn main() -> Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("parameter must be an integer"))
        .unwrap_or(3);

    let x = AlgElem::gen_x(n);
    let z = AlgElem::gen_z(n);

    println!("H_{{2*{n}^2}} has dimension {}", hopf::dimension(n));
    println!("z * x       = {}", &z * &x);
    println!("z * z       = {}", &z * &z);
    println!("S(x)        = {}", x.antipode());
    println!("eps(x^2 z)  = {}", (&(&x * &x) * &z).counit());
    println!();

    let report = hopf::verify_hopf_axioms(n);
    print!("{report}");
    if report.passed() {
        println!("all axioms hold for n = {n}");
        Ok(())
    } else {
        std::process::exit(1);
    }
}
