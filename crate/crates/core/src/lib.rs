//! Exact Goldman bracket on compact oriented surfaces with boundary, and a
//! decision procedure for whether a homotopy equivalence between two such
//! surfaces is homotopic to a homeomorphism.
//!
//! Surfaces are one-vertex ribbon graphs ([`RibbonSurface`]), free homotopy
//! classes are canonical cyclic words ([`CyclicWord`]), and brackets take
//! values in integer chains ([`Chain`]).

pub mod bracket;
pub mod chain;
pub mod enumerate;
pub mod error;
pub mod free_words;
pub mod geometricity;
pub mod group_maps;
pub mod selftest;
pub mod surface;

pub use bracket::{bracket, bracket_chain, bracket_words, build_strand_pair, crossings, splice};
pub use chain::Chain;
pub use error::{Error, Result};
pub use free_words::{CyclicWord, Letter, Word};
pub use geometricity::{find_witness, is_geometric, peripheral_structure, DecisionReport, Orientation, Reason};
pub use group_maps::{commutes_on, Homomorphism, NielsenMove, Verdict};
pub use surface::{PeripheralInfo, RibbonSurface, TopologySummary};
