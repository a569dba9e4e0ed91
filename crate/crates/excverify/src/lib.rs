//! Exact verification of the exceptional Lie algebra constructions: octonions,
//! the exceptional Jordan algebra, the Freudenthal space and the e8 bracket, all
//! over the cyclotomic field Q(ζ24).

pub mod cayley;
pub mod exactfield;
pub mod jordan;
pub mod freudenthal;
pub mod e8;
pub mod liealg;
pub mod words;
pub mod harness;
