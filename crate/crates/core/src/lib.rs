//! Twisted Hodge numbers `h^i(Gr(k, n), Ω^j(t))` of Grassmannians.
//!
//! By Borel–Weil–Bott, `h^i(Gr(k,n), Ω^j(t))` (for `t ≥ 0`) is nonzero exactly
//! when some `t`-core partition of size `j` fits in the `k x (n-k)` rectangle
//! and has a `t`-interior of size `i`. This crate computes the dimensions
//! exactly, enumerates such partitions, and implements the known closed-form
//! classifications and necessary conditions so they can be checked against
//! exhaustive enumeration.
//!
//! ```
//! use grassmann_hodge::{bwb, enumeration::KnijtQuery, enumeration};
//!
//! let dim = bwb::hodge_number(2, 4, 0, 0, 1).unwrap();
//! assert_eq!(dim, 6u32.into());
//!
//! let q = KnijtQuery::new(8, 12, 12, 20, 3).unwrap();
//! let w = enumeration::knijt_witnesses(&q, 1).unwrap();
//! assert_eq!(w[0].to_string(), "(8,6,4,2)");
//! ```

pub mod bwb;
pub mod classifiers;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod partition;
pub mod tcore;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{make_partition, Cell, Partition, Rectangle};
