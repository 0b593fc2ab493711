//! The two-sided integral and the R-matrix. The integral absorbs every
//! element through the counit; the R-matrix intertwines the coproduct
//! with its flip and satisfies both hexagon identities, making the
//! algebra quasitriangular.
//!
//! Run with an optional parameter: `cargo run --example integral_and_rmatrix -- 3`

use hopf2n2::hopf::{self, AlgElem};
use hopf2n2::Result;

fn main() -> Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("parameter must be an integer"))
        .unwrap_or(2);

    let integral = AlgElem::integral(n);
    println!("integral      = {integral}");
    println!("eps(integral) = {}", integral.counit());

    // Any element multiplies the integral down to a counit multiple.
    let h = &(&AlgElem::gen_x(n) * &AlgElem::gen_z(n)) + &AlgElem::gen_y(n);
    let absorbed = h.try_mul(&integral)?;
    let expected = integral.scale(&h.counit());
    println!("h * integral is eps(h) * integral: {}", absorbed == expected);
    println!();

    let r = hopf::r_matrix(n);
    let j = hopf::j_element(n);
    println!("R = {r}");
    println!("R * R^(-1) = {}", r.try_mul(&j)?);
    println!();

    let mut report = hopf::verify_integral(n);
    report.merge(hopf::verify_quasitriangular(n));
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        std::process::exit(1);
    }
}
