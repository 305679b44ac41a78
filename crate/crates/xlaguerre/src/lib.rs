//! Exact construction and verification of the Type I, II and III exceptional
//! X_m-Laguerre polynomials.
//!
//! The crate is organized in three layers:
//!
//! * an exact symbolic layer (`rational`, `alpha`, `xpoly`, `ratfunc`) where
//!   the parameter `alpha` is a ring generator and every identity is checked
//!   coefficient-by-coefficient;
//! * the polynomial families and their differential expressions
//!   (`classical`, `exceptional`, `ode`, `appendix`);
//! * a floating-point layer (`numerics`, `spectral`) for roots, quadrature,
//!   norms, interlacing, root asymptotics and the spectral classification
//!   rules.

pub mod alpha;
pub mod appendix;
pub mod classical;
pub mod error;
pub mod exceptional;
pub mod gamma;
pub mod numerics;
pub mod ode;
pub mod ratfunc;
pub mod rational;
pub mod spectral;
pub mod xpoly;

pub use alpha::AlphaPoly;
pub use error::{Error, Result};
pub use exceptional::Family;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use xpoly::XPoly;
