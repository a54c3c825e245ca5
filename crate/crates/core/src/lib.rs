//! Statistics for shape ensembles in the differential-coordinates shape space.

pub mod manifold;
