#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod builders;
pub mod config;
pub mod error;
pub mod integrals;
pub mod modalg;
pub mod numerics;
pub mod repcat;
pub mod report;
pub mod theorems;
pub mod wha;

pub use config::Config;
pub use error::{Result, WhaError};
pub use wha::{WeakBialgebra, WeakHopfAlgebra};
