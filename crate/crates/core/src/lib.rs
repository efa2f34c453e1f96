//! Construction and verification of geometries for symplectic groups over
//! small prime fields.
//!
//! The library builds the geometry of maximal-rank subspaces of a symplectic
//! space, checks its structural properties (transversality, string diagram,
//! residual connectedness, shadow diameters), computes fundamental groups of
//! incidence geometries as finite presentations, constructs the exceptional
//! double cover that appears at `(dim, q) = (6, 2)`, realizes the action of
//! `Sp(V)` as a permutation group with stabilizer-chain services, and verifies
//! that small amalgams of subgroups have the full symplectic group as their
//! universal completion via coset enumeration.

pub mod action;
pub mod amalgam;
pub mod bits;
pub mod builders;
pub mod cover;
pub mod fp;
pub mod geometry;
pub mod homotopy;
pub mod linalg;
pub mod matgroup;
pub mod perm;
pub mod symp;
