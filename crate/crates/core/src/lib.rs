pub mod br1;
pub mod gb;
pub mod cli;
pub mod flatness;
pub mod group;
pub mod lattice;
pub mod linalg;
pub mod reproduce;
pub mod reps;
pub mod scalars;
