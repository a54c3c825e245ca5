//! placeholder
pub fn probe() -> f64 { 1.0 }
