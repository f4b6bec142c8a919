pub mod automorphism;
pub mod cli;
pub mod coloring;
pub mod construct;
pub mod graph;
pub mod verify;
pub mod exact;
