//! Exact-arithmetic toolkit for the spectral theory of distance transforms
//! on Hamming fibers and the split endomorphism equations they satisfy.
//!
//! The crate is organized in layers:
//!
//! - [`exactalg`]: big-integer polynomials, exact rational matrices, affine
//!   expressions in `(g_X - 1)` and `(g_Y - 1)`, and a fraction-free linear
//!   solver. Everything downstream is exact; there is no floating point in
//!   this crate.
//! - [`hamming`]: bit vectors, the distance-k transform and its Krawtchouk
//!   eigenvalues, the Hadamard eigenvectors, the quotient action on
//!   homogeneous polynomials in two variables, and the invariant-subspace
//!   spectra of that action.
//! - [`correspondence`]: the integer coefficient recursions attached to odd
//!   and even cover degrees, the assembled annihilating equations, their
//!   factored forms, and a verification report tying the algebra to the
//!   spectra from [`hamming`].
//! - [`covering`]: signed-permutation monodromy for simply-ramified covers,
//!   orbit/component counts on lifting fibers, ramification bookkeeping and
//!   Riemann-Hurwitz genus checks, plus a seeded random instance generator.
//! - [`dimensions`]: genus formulas and the per-degree linear systems whose
//!   solutions are the dimensions of eigen-abelian varieties, as affine
//!   expressions in `(g_X - 1)` and `(g_Y - 1)`.
//! - [`tridiag`]: tridiagonal determinant identities and the factored
//!   characteristic polynomial of the distance-(n-1) transform on the
//!   symmetric subspace.

pub mod correspondence;
pub mod covering;
pub mod dimensions;
pub mod exactalg;
pub mod hamming;
pub mod tridiag;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter is outside the documented domain of an operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A linear system has no unique solution.
    #[error("singular system: {0}")]
    SingularSystem(String),
    /// A requested combination is well-formed but intentionally not
    /// implemented (e.g. odd-k even/odd subspace spectra).
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// The random search exhausted its retry budget.
    #[error("no instance found: {0}")]
    NoInstanceFound(String),
    /// Monodromy data violates a structural invariant.
    #[error("invalid monodromy: {0}")]
    InvalidMonodromy(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// One named consistency check inside a verification report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    /// Short kebab-case name, unique within its report.
    pub name: String,
    /// Stable slug for the relation being verified, shared across degrees.
    pub anchor: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, anchor: &str, pass: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            pass,
            detail,
        }
    }
}
