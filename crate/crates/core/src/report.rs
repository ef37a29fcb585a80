//! Serialization helpers shared by report types.

use serde::Serializer;

use crate::graph::Rational;

/// Writes a rational as `"p/q"` (or `"p"` for integers) so reports stay exact.
pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn format_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
