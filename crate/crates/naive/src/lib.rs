//! Reference implementations that trade speed for obviousness.
//!
//! Everything here recomputes results that `cliph-core` produces with
//! sparser or more incremental algorithms; the test suites compare the two.

pub mod diagram;
pub mod gf2;
pub mod graphs;
pub mod matching;
