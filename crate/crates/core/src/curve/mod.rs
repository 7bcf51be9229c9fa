pub mod bipoly;
pub mod frac;
pub mod laurent;
pub mod parse;
pub mod resultant;

pub use bipoly::{jacobian, BiPoly, CurvePoly};
pub use frac::FracPoly;
pub use laurent::LaurentPoly;
pub use parse::{parse_curve, parse_poly, print_poly, split_factors};
pub use resultant::resultant_y;
