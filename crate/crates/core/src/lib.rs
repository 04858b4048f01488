//! Gröbner bases, syzygies, ideal quotients and saturation over polynomial
//! rings with rational or prime-field coefficients, and two ways of
//! eliminating variables: through a block elimination order, and by
//! homogenizing, saturating and keeping the degree-zero part.
//!
//! ```
//! use satelim::prelude::*;
//!
//! let ring = PolyRing::standard(FieldSpec::Rationals, &["b1", "b2", "b3", "t"])?;
//! let gens = ["b1 - t", "b2 - t^2", "b3 - t^3"]
//!     .iter()
//!     .map(|g| parse_polynomial(g, &ring))
//!     .collect::<Result<Vec<_>>>()?;
//! let problem = EliminationProblem::ideal(&IdealBasis::new(&ring, gens)?, &["t"])?;
//! let out = eliminate_saturation(&problem, &EliminationOptions::default())?;
//! assert_eq!(out.ideal()?.to_string(), "<b1^2 - b2, b1*b2 - b3, b2^2 - b1*b3>");
//! # Ok::<(), satelim::Error>(())
//! ```

pub mod bench;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod groebner;
pub mod idealops;
pub mod io;
pub mod orders;
pub mod polyring;

pub use error::{Error, Result};

/// The names most programs need.
pub mod prelude {
    pub use crate::coeff::{Coefficient, FieldSpec};
    pub use crate::error::{Error, Result};
    pub use crate::groebner::{
        groebner_basis, ideal_equal, ideal_membership, normal_form, syzygies, Budget, IdealBasis, ModuleBasis,
    };
    pub use crate::idealops::{
        eliminate, eliminate_block, eliminate_saturation, homogenize_ideal, quotient, saturate, EliminationOptions,
        EliminationProblem, Method,
    };
    pub use crate::io::{parse_polynomial, parse_vector, ProblemFile};
    pub use crate::orders::{ModuleOrder, MonomialOrder};
    pub use crate::polyring::{PolyRing, Polynomial, VectorPoly};
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/quotients.md")]
    mod quotients {}
    #[doc = include_str!("../../../book/src/homogenization.md")]
    mod homogenization {}
    #[doc = include_str!("../../../book/src/elimination.md")]
    mod elimination {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
