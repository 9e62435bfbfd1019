//! Noncommutative Gröbner bases and presentations of Brauer-type algebras.

mod engine;
mod poly;
mod presentation;

pub use engine::{
    count_normal_words, dimension_from_gb, groebner, verify, Dimension, GbOptions, GbStats, GroebnerBasis,
    DEFAULT_DEGREE_CAP,
};
pub use poly::{cmp_words, Letter, NcPoly, OrdWord, Word};
pub use presentation::{
    build_presentation, build_presentation_with, parse_presentation, specialize_scalar, PresentationError,
    Presentation, Specialization, Variant,
};
