//! Exact-arithmetic toolkit for neutrosophic over/under/off-sets: subset-valued
//! truth components over extended threshold frames, classification, operator
//! algebra with verified axioms, offnumbers, dependence bounds, polarity,
//! symbolic nine-valued logic, labeled structures, and off-statistics.

pub mod algebra;
pub mod dependence;
pub mod element;
pub mod error;
pub mod frame;
pub mod offnumber;
pub mod polarity;
pub mod rat;
pub mod refined;
pub mod stats;
pub mod structures;
pub mod subset;
pub mod symbolic;

pub use algebra::{
    off_and, off_complement, off_intersection, off_or, off_union, verify_norm_axioms,
    AxiomReport, ComplementVariant, NormFamily,
};
pub use element::{
    classify_collection, classify_element, normalize_attribute, off_exists, off_forall,
    Classification, Element, Evidence, OffCollection, Witness,
};
pub use error::{Error, Result};
pub use frame::{make_frame, Channel, ThresholdFrame};
pub use rat::{format_rational, frac, int, parse_rational, Rat};
pub use subset::{Piece, SubsetValue};
