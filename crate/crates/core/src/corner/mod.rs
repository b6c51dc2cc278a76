//! Corner singularity analysis: the angular eigenvalue problem for the
//! exponent `eta` in `(0, 1]`, evaluation of the angular eigenfunction, and
//! extraction of the singular coefficient from computed fields.

mod exponent;
mod fit;

pub use exponent::{matching_factor_even, matching_factor_odd, solve_exponent, SingularExponent};
pub use fit::{admissibility_check, extract_corner_coefficient, CornerFit, CornerFrame};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CornerError {
    #[error("corner opening must lie in (0, 2*pi), got {0}")]
    InvalidOpening(f64),
    #[error("contrast must be positive, got {0}")]
    InvalidContrast(f64),
    #[error("only the spurious eta <= 1e-6 root was found ({0})")]
    SpuriousRoot(f64),
    #[error("annulus under-resolved: {0}")]
    FitUnreliable(String),
    #[error("annulus [{r_in}, {r_out}] invalid or outside the mesh")]
    BadAnnulus { r_in: f64, r_out: f64 },
    #[error("field evaluation failed at sample point ({x}, {y})")]
    SampleOutsideField { x: f64, y: f64 },
}
