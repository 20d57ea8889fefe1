//! Exact representation theory of the mixed tensor chain 3^m ⊗ 3̄^n over U_q(sl(2|1)).

pub mod qarith;
pub mod sparse;
pub mod partitions;
pub mod uqmod;
pub mod fusion;
pub mod chainrep;
pub mod xcat;
pub mod bimod;
pub mod registry;
