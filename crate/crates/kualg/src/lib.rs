//! Finite KU-algebras, KU-valued functions and their cut sets, the binary
//! block codes those functions generate, and the reverse construction of
//! an algebra from a given code.
//!
//! The pieces fit together like this: a finite KU-algebra carries a
//! natural order `x <= y iff y*x = 0` with least element `0`. A function
//! from a labeled domain into the algebra has one cut per element — the
//! positions whose value lies below that element — and the distinct cut
//! rows form a binary block code. For the identity function the code is
//! order-isomorphic to the algebra itself, and [`reconstruct`] inverts
//! the construction: given any binary block code it builds an algebra and
//! function whose code contains (and when possible equals) the input.
//!
//! ```
//! use kualg::{generate_code, reconstruct, KUFunction};
//!
//! let algebra = kualg::gcd_algebra(9);
//! let code = generate_code(&KUFunction::identity(algebra.clone()));
//! assert_eq!(code.words()[5].to_string(), "111001000");
//!
//! let result = reconstruct(&code).unwrap();
//! assert!(result.exact);
//! assert!(result
//!     .algebra
//!     .natural_order()
//!     .isomorphism_to(&algebra.natural_order())
//!     .is_some());
//! ```
//!
//! The `examples/` directory walks through each capability; the `kualg`
//! binary exposes the same operations over plain-text files.

pub mod algebra;
pub mod audit;
pub mod cli;
pub mod code;
pub mod enumerate;
mod error;
pub mod function;
pub mod hasse;
pub mod io;
pub mod order;
pub mod reconstruct;
pub mod samples;

pub use algebra::{gcd_algebra, verify_axioms, AxiomReport, FiniteKUAlgebra};
pub use audit::{audit_propositions, AuditConfig, AuditReport, Claim, Variant};
pub use code::{codeword_leq, generate_code, verify_order_isomorphism, BlockCode, Codeword};
pub use enumerate::{are_isomorphic, enumerate_algebras, enumerate_algebras_bounded};
pub use error::KuError;
pub use function::{
    cut_matrix, cut_set, infimum_representation, principal_downset, theta_partition, CutConvention,
    CutMatrix, KUFunction, ThetaPartition,
};
pub use order::{from_poset, OrderRelation};
pub use reconstruct::{
    exact_reconstructible, reconstruct, roundtrip_check, Provenance, ReconstructionResult,
};
