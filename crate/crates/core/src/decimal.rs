//! Exact decimal numbers.
//!
//! Costs and weights are read as decimal strings and kept as `mantissa / 10^scale`
//! so that equality tests (equal-cost groups, zero-cost cycles, weight
//! conditions) are exact.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const MAX_SCALE: u32 = 18;

#[derive(Debug, Clone, Copy)]
pub struct Decimal {
    mantissa: i128,
    scale: u32,
}

impl Decimal {
    pub fn new(mantissa: i128, scale: u32) -> Self {
        Decimal { mantissa, scale }.normalized()
    }

    pub fn from_int(value: i64) -> Self {
        Decimal::new(value as i128, 0)
    }

    pub fn mantissa(&self) -> i128 {
        self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa > 0
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa < 0
    }

    pub fn to_f64(&self) -> f64 {
        // Parsing the canonical text gives the correctly rounded value.
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    /// Mantissa expressed at a larger scale, or `None` on overflow.
    pub fn at_scale(&self, scale: u32) -> Option<i128> {
        if scale < self.scale {
            return None;
        }
        10i128
            .checked_pow(scale - self.scale)
            .and_then(|f| self.mantissa.checked_mul(f))
    }

    pub fn checked_add(&self, other: &Decimal) -> Option<Decimal> {
        let scale = self.scale.max(other.scale);
        let sum = self.at_scale(scale)?.checked_add(other.at_scale(scale)?)?;
        Some(Decimal::new(sum, scale))
    }

    pub fn checked_mul_int(&self, k: i64) -> Option<Decimal> {
        Some(Decimal::new(self.mantissa.checked_mul(k as i128)?, self.scale))
    }

    fn normalized(mut self) -> Self {
        while self.scale > 0 && self.mantissa % 10 == 0 {
            self.mantissa /= 10;
            self.scale -= 1;
        }
        if self.mantissa == 0 {
            self.scale = 0;
        }
        self
    }
}

/// Scales every value to the smallest shared power-of-ten denominator.
///
/// Returns the integer numerators and the shared scale.
pub fn to_common_scale(values: &[Decimal]) -> Result<(Vec<i64>, u32)> {
    let scale = values.iter().map(|d| d.scale).max().unwrap_or(0);
    let scaled = values
        .iter()
        .map(|d| {
            d.at_scale(scale)
                .and_then(|m| i64::try_from(m).ok())
                .ok_or_else(|| Error::InvalidInput(format!("value {d} overflows at scale {scale}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((scaled, scale))
}

/// Renders `value / 10^scale` as a decimal string.
pub fn format_scaled(value: i64, scale: u32) -> String {
    Decimal::new(value as i128, scale).to_string()
}

impl PartialEq for Decimal {
    fn eq(&self, other: &Self) -> bool {
        // Normalized representations are unique.
        self.mantissa == other.mantissa && self.scale == other.scale
    }
}

impl Eq for Decimal {}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let scale = self.scale.max(other.scale);
        match (self.at_scale(scale), other.at_scale(scale)) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl FromStr for Decimal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("malformed decimal '{s}'"));
        let (body, exponent) = match s.find(['e', 'E']) {
            Some(pos) => {
                let exp: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
                (&s[..pos], exp)
            }
            None => (s, 0),
        };
        let (negative, digits) = match body.as_bytes().first() {
            Some(b'-') => (true, &body[1..]),
            Some(b'+') => (false, &body[1..]),
            _ => (false, body),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let mut mantissa: i128 = 0;
        for b in int_part.bytes().chain(frac_part.bytes()) {
            mantissa = mantissa
                .checked_mul(10)
                .and_then(|m| m.checked_add((b - b'0') as i128))
                .ok_or_else(bad)?;
        }
        let mut scale = frac_part.len() as i64 - exponent as i64;
        while scale < 0 {
            mantissa = mantissa.checked_mul(10).ok_or_else(bad)?;
            scale += 1;
        }
        let d = Decimal {
            mantissa: if negative { -mantissa } else { mantissa },
            scale: u32::try_from(scale).map_err(|_| bad())?,
        }
        .normalized();
        if d.scale > MAX_SCALE {
            return Err(Error::InvalidInput(format!(
                "decimal '{s}' has more than {MAX_SCALE} fractional digits"
            )));
        }
        Ok(d)
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.mantissa < 0 { "-" } else { "" };
        let digits = self.mantissa.unsigned_abs().to_string();
        if self.scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let scale = self.scale as usize;
        let padded = format!("{digits:0>width$}", width = scale + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - scale);
        write!(f, "{sign}{int_part}.{frac_part}")
    }
}
