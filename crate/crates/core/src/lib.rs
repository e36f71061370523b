//! Exact arithmetic on hyperelliptic Jacobians over ℚ(x), with the tools
//! needed to certify that members of an explicit family of positive
//! polynomials in two variables are not sums of three squares in ℝ(x, y).

pub mod antineutral;
pub mod descent;
pub mod exact;
pub mod family;
pub mod funcfield;
pub mod jacobian;
pub mod text;

pub use exact::field::Field;
pub use exact::poly::Poly;
pub use exact::qpoly::QPoly;
pub use exact::rational::Rational;
pub use exact::ExactError;
pub use funcfield::ratfunc::RatFunc;

/// Polynomial in the curve variable with ℚ(x) coefficients.
pub type PolyY = Poly<RatFunc>;
