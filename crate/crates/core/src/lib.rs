//! Completability of semibrick pairs over the gentle algebra `RA_n` (which has
//! the same torsion-class lattice as the type-A preprojective algebra) and
//! over the preprojective algebra of type D4.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised bottom-up:
//!
//! * [`perm`]: permutations, inversion/descent/ascent sets and the weak order.
//! * [`arc`] and [`reading`]: green/red arcs, noncrossing diagrams and the
//!   bijections from permutations to diagrams.
//! * [`brick`]: string bricks of `RA_n`, the arc-to-brick bijection and
//!   Hom/Ext detection by arc combinatorics.
//! * [`field`] and [`quiver`]: dense linear algebra over a prime field and
//!   quiver representations with relations, used as an independent oracle.
//! * [`universe`], [`pair`], [`mutation`], [`search`], [`smc`]: semibrick
//!   pairs, left/right mutation, the completability search and the full-rank
//!   completion.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arc;
pub mod brick;
pub mod error;
pub mod field;
pub mod mutation;
pub mod pair;
pub mod perm;
pub mod quiver;
pub mod reading;
pub mod search;
pub mod smc;
pub mod universe;

pub use arc::{Arc, ArcDiagram, Color, Side, SubarcRelation};
pub use brick::{Action, StringBrick};
pub use error::Error;
pub use pair::SemibrickPair;
pub use perm::Permutation;
pub use universe::{ArcUniverse, BrickUniverse, MatrixUniverse};
