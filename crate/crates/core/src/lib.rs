//! Bent functions over `V_n` and into finite abelian 2-groups: finite field
//! arithmetic, exact Walsh and character transforms, spread and trace based
//! constructions, and the analyses around them.

pub mod analyze;
pub mod boolfun;
pub mod cli;
pub mod construct;
pub mod cyclo;
pub mod error;
pub mod gf;
pub mod groupfun;
pub mod spread;

pub use boolfun::{anf_degree, bent_dual, fwht, walsh_spectrum, PairingSpec, Spectrum, TruthTable};
pub use construct::ExponentPair;
pub use cyclo::CycloInt;
pub use error::{Error, Result};
pub use gf::{make_field, FieldElement, FieldSpec, SubfieldBasis};
pub use groupfun::{gen_walsh, is_generalized_bent, is_group_bent, GroupFunction, GroupSpec};
pub use spread::{Partition, Side};
