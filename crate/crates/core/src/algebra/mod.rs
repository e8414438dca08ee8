//! Brauer-type algebras: parameters, relation lists for the supported
//! presentations, the normal-form engine and the tables built from it.

pub mod closed_form;
pub mod engine;
pub mod labels;
mod params;
pub mod presentations;
mod relations;
mod table;

pub use closed_form::{ClosedFormOdd, ClosedProduct, OddDihedral};
pub use engine::{rescale_iso, BrauerTypeAlgebra, EngineError, NormalWord, RescaleReport};
pub use labels::{coxeter_labels, g_m1n_labels, GLabel, GLabelReport, LabelError, LabelRule};
pub use params::{Evaluated, ParamError, ParamSet};
pub use presentations::{presentation, PresentationError, PresentationKind, Variant};
pub use relations::{
    check_relations, symbolic_values, Gen, LinearModel, ParamValues, Probes, Rebind, Relation, RelationFailure,
    RelationList, RelationReport, Term, Word,
};
pub use table::{check_star, isomorphic_under, mul, products_json, star, Algebra, Elem, Regular, StarReport, Starred};
