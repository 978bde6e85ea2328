pub mod clock;
pub mod config;
pub mod fapi;
pub mod trace;
