//! Verification and search toolkit for sum-free sets in F_p^n.
//!
//! A set A is sum-free when (A + A) and A are disjoint. The crate
//! certifies sum-freeness and normality (containment in an interval of
//! hyperplane cosets), exposes Kneser/Vosper structural detectors,
//! rebuilds the explicit extremal constructions, and runs exhaustive or
//! budgeted searches in small groups.

pub mod certify;
pub mod constructions;
pub mod error;
pub mod group;
pub mod interval;
pub mod rows;
pub mod search;
pub mod set;
pub mod setfile;
pub mod verify;

pub use certify::{
    ap_detect, check_sum_free, is_normal, is_sum_free, lambda_max, vosper_check, ApResult,
    Certificate, Normality,
};
pub use error::{Error, Result};
pub use group::{GroupSpec, LinearFunctional, Subspace, Vector};
pub use set::{difference_set, kneser_defect, sumset, symmetry_group, GroupSet};
