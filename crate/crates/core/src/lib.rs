//! Pseudo-Gröbner bases for ideals of `R[x_1, …, x_n]` where `R` is the ring
//! of integers of a number field, with applications to ideal membership,
//! intersections, contraction to `R` and primes of bad reduction.

pub mod zlinalg;
pub mod numberfield;
pub mod mpoly;
pub mod pseudo;
pub mod apps;
pub mod cli;
