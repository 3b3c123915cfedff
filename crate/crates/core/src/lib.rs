//! Finite and discretized compact hypergroups.
//!
//! * [`FiniteHypergroup`]: structure constants, convolution, involution,
//!   Haar measure, weights and axiom verification.
//! * [`constructions`]: groups, double cosets `G//H`, the two-element family,
//!   products and a gallery of named examples.
//! * [`representation`]: character tables, hyperdimensions and the Fourier
//!   transform of commutative finite hypergroups.
//! * [`continuous`]: the interval hypergroup `SO(3)//SO(2) ≅ [-1, 1]`
//!   evaluated by quadrature.
//! * [`io`] and [`cli`]: the `.hyp`/`.grp` file formats and the `hyplab`
//!   command line.
//!
//! ```
//! use hyplab::constructions::{double_coset_hypergroup, FiniteGroup};
//! use hyplab::characters;
//!
//! let g = FiniteGroup::symmetric(4);
//! let h = g.subgroup_closure(&[g.index_of("(12)").unwrap(), g.index_of("(123)").unwrap()]);
//! let (k, _) = double_coset_hypergroup(&g, &h).unwrap();
//! assert!(k.verify_axioms().passed());
//! let dims = characters(&k).unwrap().hyperdims().to_vec();
//! assert!((dims[0] - 1.0).abs() < 1e-12 && (dims[1] - 3.0).abs() < 1e-12);
//! ```

pub mod any;
pub mod axioms;
pub mod cli;
pub mod constructions;
pub mod continuous;
pub mod hypergroup;
pub mod io;
pub mod linalg;
pub mod measure;
pub mod par;
pub mod representation;
pub mod scalar;

pub use any::AnyHypergroup;
pub use axioms::{Axiom, AxiomCheck, AxiomReport};
pub use hypergroup::{FiniteHypergroup, HypergroupError};
pub use measure::{dominated, Measure, MeasureKind};
pub use par::Execution;
pub use representation::{characters, index_lower_bound, CharacterTable, FourierCoefficients, RepresentationError};
pub use scalar::{NumericMode, Rational, Scalar, DEFAULT_TOL};
