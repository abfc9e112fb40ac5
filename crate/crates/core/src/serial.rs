//! Text encodings of exact values: rationals are written as `"p/q"` or `"p"`.

use crate::error::{Error, Result};
use crate::exactnum::Rational;

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

pub fn to_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn parse_all(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}
