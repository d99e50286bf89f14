//! Exact mod-2 cohomology of symmetric and alternating groups.
//!
//! The engine computes `H^*(BS_n; F_2)` and `H^*(BA_n; F_2)` by three
//! independent routes and cross-validates them:
//!
//! * Fox-Neuwirth cochain complexes ([`foxneuwirth`]), giving cohomology by
//!   exact GF(2) elimination together with chain-level transfer, restriction,
//!   coproduct and transfer product;
//! * symbolic (almost-)Hopf-ring normal forms on Hopf monomial bases
//!   ([`symmetric`], [`alternating`]);
//! * a Dyer-Lashof/Nakaoka homology count ([`symmetric::nakaoka_basis`]) as
//!   the Betti-number oracle.
//!
//! On top of these sit restriction to elementary abelian subgroups and the
//! detection harness ([`restriction`]), Steenrod operations ([`steenrod`]),
//! and component-ring presentations plus the CLI surface ([`presentation`]).

pub mod alternating;
pub mod cache;
pub mod error;
pub mod expr;
pub mod f2;
pub mod foxneuwirth;
pub mod presentation;
pub mod restriction;
pub mod steenrod;
pub mod symmetric;

pub use error::{Error, Result};
