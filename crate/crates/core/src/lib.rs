//! Evidence fusion over power sets and hyper-power sets.
//!
//! The crate covers classical belief functions and Dempster's rule, the
//! conjunctive rule on the hyper-power set `D^Θ`, generalized pignistic and
//! entropy measures, a maximum-entropy model turning interval evidence into
//! masses, and a neutrosophic calculus with a two-level procedure for fusing
//! neutrosophic reports.
//!
//! ```
//! use evifuse::fusion::dsm_combine;
//! use evifuse::{DomainMode, Frame, Granule};
//!
//! # fn main() -> evifuse::Result<()> {
//! let f = Frame::new(["M", "C", "T"])?;
//! let m1 = Granule::parse(&f, &[("M", 0.99), ("T", 0.01)], DomainMode::HyperPowerSet, false)?;
//! let m2 = Granule::parse(&f, &[("C", 0.99), ("T", 0.01)], DomainMode::HyperPowerSet, false)?;
//! let m = dsm_combine(&m1, &m2)?;
//! assert!((m.belief(&f.prop("M")?)? - 0.99).abs() < 1e-12);
//! # Ok(())
//! # }
//! ```

pub mod entropy;
pub mod error;
pub mod frame;
pub mod fusion;
pub mod interval;
pub mod mass;
pub mod neutro;
pub mod nfusion;

pub use error::{Error, Result};
pub use frame::{Frame, PropExpr, Proposition};
pub use mass::{DomainMode, Granule};
