//! Twin groups `T_n`, pure twin groups `PT_n`, and related constructions:
//! normal forms, Reidemeister-Schreier presentations with Tietze
//! simplification, generators and rank bounds for `PT_n`, the action of
//! `T_4` on `PT_4 = F_7`, the 24-triangle surface for `PT_4`, and the
//! virtual and welded analogues.
//!
//! ```
//! use twin_core::{parse_word, word, GroupSpec};
//!
//! let spec = GroupSpec::new(3).unwrap();
//! let u = parse_word("(s1 s2)^3 (s2 s1)^3").unwrap();
//! assert!(word::normal_form(&u, &spec).unwrap().is_empty());
//! ```

pub mod error;
pub mod free_aut;
pub mod grammar;
pub mod pure_twin;
pub mod schreier;
pub mod suites;
pub mod surface;
pub mod tietze;
pub mod twin;
pub mod virtual_twin;
pub mod word;

pub use error::{Result, TwinError};
pub use free_aut::{FreeAut, FreeLetter, FreeWord};
pub use grammar::{parse_free_word, parse_word};
pub use pure_twin::PureGenerator;
pub use schreier::{Presentation, TransversalElem};
pub use suites::{SuiteOptions, SuiteReport};
pub use surface::SurfaceReport;
pub use twin::Permutation;
pub use virtual_twin::{BoundedEquality, VirtualPresentation};
pub use word::{CoxLetter, CoxWord, GroupSpec, LetterKind};
