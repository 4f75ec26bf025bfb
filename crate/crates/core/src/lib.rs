//! Exact generalized chromatic polynomials.
//!
//! The crate counts vertex and edge colorings constrained by a coloring
//! property, assembles the counts into an exact polynomial in the palette
//! size, builds the reduction gadgets that relate these polynomials to each
//! other and to satisfiability and cut counting, and checks the resulting
//! identities against brute-force enumeration.

pub mod count;
pub mod gadgets;
pub mod graph;
pub mod identity;
pub mod poly;
pub mod props;
