//! Exact rational arithmetic for bound comparisons.

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serializer};

pub type Rational = Ratio<i128>;

pub fn int(v: usize) -> Rational {
    Rational::from_integer(v as i128)
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.25`.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: i128 = p.trim().parse().ok()?;
        let q: i128 = q.trim().parse().ok()?;
        return (q != 0).then(|| Rational::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 30 {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole: i128 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().ok()? };
        let scale = 10i128.pow(frac.len() as u32);
        let frac: i128 = frac.parse().ok()?;
        let signed = if negative { -frac } else { frac };
        return Some(Rational::from_integer(whole) + Rational::new(signed, scale));
    }
    text.parse().ok().map(Rational::from_integer)
}

/// Serde adapter writing rationals as `"p/q"` strings (or `"p"` when integral).
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).ok_or_else(|| serde::de::Error::custom(format!("not a rational: {text}")))
    }
}

pub mod option_as_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let text: Option<String> = Option::deserialize(d)?;
        text.map(|t| parse(&t).ok_or_else(|| serde::de::Error::custom(format!("not a rational: {t}"))))
            .transpose()
    }
}
