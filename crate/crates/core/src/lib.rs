//! Combinatorics of Legendrian fronts and positive braids: positivity
//! certificates, normal rulings, HOMFLY Thurston–Bennequin bounds and
//! decomposable Lagrangian fillings built from elementary cobordisms.

pub mod audit;
pub mod braid;
pub mod cli;
pub mod cobordism;
pub mod corpus;
pub mod front;
pub mod homfly;
pub mod ruling;
