//! Exact power-series engine for inverse-coefficient bounds of the
//! generalized Janowski classes `S*[A,B]`, `K[A,B]`, `I[1,B]` and `Σ*[A,B]`.

pub mod bounds;
pub mod classes;
pub mod inversion;
pub mod report;
pub mod series;
pub mod verify;

pub use classes::{ClassError, ClassFunction, ClassKind, ClassSpec, Regime, SchwarzSpec};
pub use inversion::LaurentTail;
pub use report::{Case, Verdict, VerificationReport};
pub use series::{rat, ratio, Coeff, FloatSeries, Rational, Series, SeriesError, TaylorSeries};
