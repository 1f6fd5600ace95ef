//! Counting configurations of the full shift `A^G` by least period.
//!
//! For a finitely generated group `G`, a finite-index subgroup `H` and an
//! alphabet of `q` letters, [`counting::psi`] computes
//!
//! ```text
//! ψ_H(G; A) = Σ_{H ≤ K ≤ G} μ(H, K) · q^[G:K]
//! ```
//!
//! where `μ` is the Möbius function of the subgroup lattice. Infinite groups
//! given by presentations or as `ℤ^d` sublattices are reduced to a finite
//! group first (see [`fg`]); [`oracle`] counts the same quantities by brute
//! force.

pub mod builtin;
pub mod counting;
pub mod exec;
pub mod fg;
pub mod group;
pub mod oracle;

pub use exec::Exec;
pub use group::{FiniteGroup, GroupError, Subgroup, SubgroupId, SubgroupLattice};
