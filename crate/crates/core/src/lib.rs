//! Flag spheres obtained from the cross-polytope boundary by edge
//! subdivisions, their f-, h- and γ-polynomials, and the gamma complex Γ
//! whose f-polynomial is the γ-polynomial of the sphere.
//!
//! ```
//! use flag_gamma::{FlagComplex, IntPolynomial, SubdivisionSequence, VertexId};
//!
//! let mut seq = SubdivisionSequence::new(3).unwrap();
//! seq.extend(VertexId(0), VertexId(2)).unwrap();
//! seq.extend(VertexId(1), VertexId(4)).unwrap();
//! let report = seq.verify_main_theorem();
//! assert!(report.equal);
//! assert_eq!(report.gamma_theta, IntPolynomial::new(vec![1, 2]));
//! ```
//!
//! The `book/` directory of the repository walks through the concepts; its
//! code snippets run as doctests of this crate.

pub mod checks;
mod clique;
pub mod complex;
pub mod error;
pub mod example;
pub mod nestohedra;
pub mod poly;
pub mod subdivision;
pub mod vectors;

pub use clique::{clique_counts, clique_number, cliques};
pub use complex::{vertex_set, FaceComplex, FlagComplex, VertexId, VertexSet};
pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use subdivision::{FaceClass, InducedSequence, MainTheoremReport, SubdivisionSequence};
pub use vectors::{gamma_of, FHGammaReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/gamma-complex.md")]
    mod gamma_complex {}
    #[doc = include_str!("../../../book/src/nestohedra.md")]
    mod nestohedra {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
