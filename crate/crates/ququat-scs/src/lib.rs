//! Exact desk-scale simulator for teleportation of a ququat encoded in
//! superpositions of four coherent states.
//!
//! The crate keeps every protocol state inside the closed algebra of finite
//! coherent-state superpositions ([`algebra`]), builds the orthonormal
//! multi-photon basis and its constants ([`basis`]), simulates the heralded
//! state-generation circuit ([`generation`]), runs the full teleportation
//! machine with its 369 photon-counting classes and correction tables
//! ([`teleport`]), evaluates closed-form probabilities, fidelity forms and
//! the MASFI/MAVFI sweeps ([`analysis`]), and cross-checks everything against
//! a truncated photon-number-basis oracle ([`fock`]).

pub mod algebra;
pub mod analysis;
pub mod basis;
pub mod dm;
pub mod error;
pub mod fock;
pub mod generation;
pub mod tables;
pub mod teleport;
