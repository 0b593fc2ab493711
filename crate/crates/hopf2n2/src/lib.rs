//! Exact arithmetic for the family of semisimple Hopf algebras `H_{2n^2}`.
//!
//! For each `n >= 2`, `H_{2n^2}` is the `2n^2`-dimensional Hopf algebra
//! generated by `x, y, z` with
//!
//! ```text
//! x^n = y^n = 1,   xy = yx,   zx = yz,   zy = xz,
//! z^2 = (1/n) * sum_{i,j} q^{-ij} x^i y^j
//! ```
//!
//! where `q` is a primitive `n`-th root of unity. For `n = 2` this is the
//! Kac-Paljutkin algebra of dimension 8. Every scalar lives in the
//! cyclotomic field `Q(zeta_{2n})` and is represented exactly; nothing in
//! this crate is floating point.
//!
//! What the crate computes, module by module:
//!
//! * [`cyclotomic`]: the field `Q(zeta_{2n})` in the power basis modulo the
//!   cyclotomic polynomial, with exact rational coefficients.
//! * [`hopf`]: the algebra itself (products, coproduct, counit, antipode,
//!   integral, R-matrix) plus verifiers for the Hopf axioms and
//!   quasitriangularity.
//! * [`center`]: the canonical central idempotents and the block
//!   decomposition `H = k^(2n) + M_2(k)^((n^2-n)/2)`.
//! * [`repr`]: the irreducible modules (`2n` one-dimensional, `n(n-1)/2`
//!   two-dimensional), tensor products, and a trace-based decomposition
//!   oracle grounded in the central idempotents.
//! * [`fusion`]: closed-form fusion rules, the fusion table, and the
//!   cross-check of the closed form against the trace oracle.
//! * [`presentation`]: the Grothendieck ring `r(H_{2n^2})` as a quotient of
//!   an integer polynomial ring, with Fibonacci-polynomial relations and a
//!   determinant certificate for the monomial Z-basis.
//! * [`cli`]: the verification suites behind the `hopf2n2` binary.
//! * [`poly`], [`linalg`], [`report`]: the supporting integer polynomial
//!   ring, exact matrix routines, and the report type every verifier
//!   returns.
//!
//! Runnable tours live in `examples/`:
//!
//! ```text
//! cargo run -p hopf2n2 --example hopf_axioms
//! cargo run -p hopf2n2 --example integral_and_rmatrix
//! cargo run -p hopf2n2 --example block_decomposition
//! cargo run -p hopf2n2 --example simple_modules
//! cargo run -p hopf2n2 --example tensor_decompose
//! cargo run -p hopf2n2 --example fusion_table
//! cargo run -p hopf2n2 --example grothendieck_presentation
//! ```

pub mod cli;
pub mod center;
pub mod cyclotomic;
pub mod fusion;
pub mod hopf;
pub mod linalg;
pub mod poly;
pub mod presentation;
pub mod report;
pub mod repr;

pub use cyclotomic::CycNum;
pub use fusion::FusionVector;
pub use hopf::AlgElem;
pub use poly::IntPoly;
pub use report::VerificationReport;
pub use repr::SimpleLabel;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two values from incompatible algebras (different `n`) were combined.
    #[error("parameter mismatch: expected n = {expected}, found n = {found}")]
    ParamMismatch { expected: u32, found: u32 },

    /// Inversion of zero in `Q(zeta_{2n})`.
    #[error("division by zero in Q(zeta_2n)")]
    DivisionByZero,

    /// The algebra parameter is out of range (`n >= 2` is required).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A simple-module label that does not name a simple for this `n`.
    #[error("invalid label: {0}")]
    InvalidLabel(String),

    /// A trace that should have been a nonnegative integer multiplicity
    /// was not; the input matrices do not define a module.
    #[error("non-integer multiplicity: {0}")]
    NonIntegerMultiplicity(String),

    /// A polynomial used a variable the target ring does not have.
    #[error("invalid variable: {0}")]
    InvalidVariable(String),

    /// Bad command-line usage (reserved for the CLI layer).
    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
