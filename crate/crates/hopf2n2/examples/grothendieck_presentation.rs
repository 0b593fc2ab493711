//! Presentations of the Grothendieck ring: the Fibonacci-window
//! relations, their evaluation on module classes (they must vanish),
//! the expansion of [S_{0,t}] in the generators, and the unimodular
//! monomial basis certificate.
//!
//! Run with an optional parameter: `cargo run --example grothendieck_presentation -- 7`

use hopf2n2::linalg;
use hopf2n2::presentation;
use hopf2n2::Result;

fn main() -> Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("parameter must be an integer"))
        .unwrap_or(5);

    println!("Fibonacci polynomials F_t with F_(t+2) = z F_(t+1) - y F_t:");
    for t in 0..=5 {
        println!("  F_{t} = {}", presentation::fibonacci_poly(t));
    }
    println!();

    println!("ring relations for n = {n} (x = [S_1], y = [S_(n+1)], z = [S_(0,1)]):");
    for r in presentation::presentation_relations(n)? {
        let value = presentation::eval_in_fusion(n, &r)?;
        println!("  {r}  evaluates to  {value}");
    }
    println!();

    if n >= 3 {
        println!("two-dimensional classes in the generators:");
        for m in 0..=n - 3 {
            let p = presentation::s0_expansion(n, m)?;
            println!("  [S_(0,{})] = {p}", m + 2);
        }
        println!();
    }

    let det = linalg::bareiss_det(presentation::basis_matrix(n)?);
    println!(
        "monomial basis: {} classes, change-of-basis determinant {det}",
        presentation::basis_monomials(n)?.len()
    );
    println!();

    let report = presentation::verify_presentation(n);
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        std::process::exit(1);
    }
}
