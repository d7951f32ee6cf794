//! Euler characteristics of moduli spaces of stable rank-2 and rank-3 bundles
//! on the projective plane, computed through their torus fixed points.
//!
//! The pipeline has three layers:
//!
//! * [`exactgeom`] — exact rational linear algebra and vertex/ray enumeration
//!   for systems of linear inequalities in standard form;
//! * [`filtrations`] and [`quiverrep`] — the filtration model of toric bundles
//!   (Chern data, discriminants, index shifts) and the matching subspace-quiver
//!   slope-stability oracle;
//! * [`rank2`] and [`rank3`] — the counting layer: stability inequality
//!   systems, closed-form discriminant polynomials, lattice-point counts and
//!   the generating-function series they assemble into.
//!
//! All arithmetic is exact. The linear-algebra core is generic over the
//! integer type backing its rationals (see [`ExactInt`]); the crate-root
//! aliases [`Int`] and [`Rational`] pick arbitrary precision.

pub mod exactgeom;
pub mod filtrations;
mod poly;
pub mod quiverrep;
pub mod rank2;
pub mod rank3;
pub mod series;
pub mod verify;

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::Signed;

/// Signed integers that can back exact rational arithmetic.
///
/// Implemented by `i64`, `i128` and `num_bigint::BigInt`. The `From<i64>`
/// bound lets small integer constants (inequality coefficients, test data)
/// be lifted into any instantiation.
pub trait ExactInt:
    Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + From<i64> + 'static
{
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + From<i64> + 'static
{
}

/// Default integer scalar: arbitrary precision.
pub type Int = num_bigint::BigInt;

/// Default exact rational scalar. Always reduced, denominator positive.
pub type Rational = num_rational::Ratio<Int>;

/// Fast fixed-width rational, exact as long as nothing overflows `i64`.
/// Useful for the large scan suites where all data is tiny.
pub type Rational64 = num_rational::Ratio<i64>;

/// Lift an integer constant into a rational scalar.
pub fn ratio_from_int<T: ExactInt>(n: i64) -> num_rational::Ratio<T> {
    num_rational::Ratio::from_integer(T::from(n))
}

/// Parse an exact rational from `"p/q"` or `"p"` notation. Decimal notation
/// is deliberately rejected.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int, String> {
        t.parse::<Int>()
            .map_err(|_| format!("invalid integer `{t}`"))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let num = parse_int(p.trim())?;
            let den = parse_int(q.trim())?;
            if den == Int::from(0) {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rational::new(num, den))
        }
        None => {
            if s.contains('.') {
                return Err(format!("decimal notation `{s}` not accepted; use p/q"));
            }
            Ok(Rational::from_integer(parse_int(s)?))
        }
    }
}

/// Render a rational as `"p"` or `"p/q"`, never as a decimal.
pub fn format_rational<T: ExactInt>(r: &num_rational::Ratio<T>) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
