//! Display helpers for exact big-integer results.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Above this many bits decimal conversion (quadratic in num-bigint) becomes
/// the bottleneck, so values are emitted in hexadecimal instead.
pub const DECIMAL_BIT_LIMIT: u64 = 1 << 22;

/// Base-10 logarithm, accurate to double precision for any size.
pub fn log10(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").log10();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.log10() + shift as f64 * std::f64::consts::LOG10_2
}

/// Serializable rendering of a big integer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BigValue {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hex: Option<String>,
    pub bits: u64,
    pub log10: f64,
}

impl BigValue {
    pub fn new(x: &BigUint) -> BigValue {
        let bits = x.bits();
        let (decimal, hex) = if bits <= DECIMAL_BIT_LIMIT {
            (Some(x.to_str_radix(10)), None)
        } else {
            (None, Some(x.to_str_radix(16)))
        };
        BigValue {
            decimal,
            hex,
            bits,
            log10: log10(x),
        }
    }
}

pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    BigValue::new(x).serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn log10_small_and_large() {
        assert_eq!(log10(&BigUint::from(1000u32)), 3.0);
        let big = BigUint::from(10u32).pow(5000);
        assert!((log10(&big) - 5000.0).abs() < 1e-9);
        let odd = BigUint::from(18u32).pow(80);
        assert!((log10(&odd) - 80.0 * 18f64.log10()).abs() < 1e-9);
    }

    #[test]
    fn decimal_below_limit_hex_above() {
        let v = BigValue::new(&BigUint::from(6u32).pow(20));
        assert_eq!(v.decimal.as_deref(), Some("3656158440062976"));
        assert!(v.hex.is_none());
        let huge = BigUint::one() << DECIMAL_BIT_LIMIT;
        let v = BigValue::new(&huge);
        assert!(v.decimal.is_none());
        assert!(v.hex.unwrap().starts_with('1'));
    }
}
