//! Exact numbers in ½ℤ.
//!
//! Every coordinate this crate touches is a half-integer, so a full rational
//! type is unnecessary. `Half(k)` stores twice the value.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const HALF: Half = Half(1);
    pub const ONE: Half = Half(2);

    pub const fn int(n: i64) -> Half {
        Half(2 * n)
    }

    /// Builds `k/2`.
    pub const fn halves(k: i64) -> Half {
        Half(k)
    }

    /// Twice the value.
    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }

    pub fn signum(self) -> i64 {
        self.0.signum()
    }

    /// Product of two half-integers, returned as four times the exact value.
    pub fn mul_quarters(self, other: Half) -> i64 {
        self.0 * other.0
    }

    /// Integer scaling.
    pub fn scale(self, k: i64) -> Half {
        Half(self.0 * k)
    }

    /// Halves the value; fails when the result leaves ½ℤ.
    pub fn halve(self) -> Option<Half> {
        (self.0 % 2 == 0).then_some(Half(self.0 / 2))
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl AddAssign for Half {
    fn add_assign(&mut self, o: Half) {
        self.0 += o.0;
    }
}

impl SubAssign for Half {
    fn sub_assign(&mut self, o: Half) {
        self.0 -= o.0;
    }
}

impl Mul<i64> for Half {
    type Output = Half;
    fn mul(self, k: i64) -> Half {
        Half(self.0 * k)
    }
}

impl Sum for Half {
    fn sum<I: Iterator<Item = Half>>(it: I) -> Half {
        it.fold(Half::ZERO, |a, b| a + b)
    }
}

impl From<i64> for Half {
    fn from(n: i64) -> Half {
        Half::int(n)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a half-integer: {0:?}")]
pub struct ParseHalfError(pub String);

impl FromStr for Half {
    type Err = ParseHalfError;

    /// Accepts `3`, `-2`, `3/2`, `-1/2`, `1.5`, `-0.5`.
    fn from_str(s: &str) -> Result<Half, ParseHalfError> {
        let t = s.trim();
        let err = || ParseHalfError(s.to_string());
        if let Some((p, q)) = t.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| err())?;
            let q: i64 = q.trim().parse().map_err(|_| err())?;
            return match q {
                1 => Ok(Half::int(p)),
                2 => Ok(Half(p)),
                -1 => Ok(Half::int(-p)),
                -2 => Ok(Half(-p)),
                _ if q != 0 && (2 * p) % q == 0 => Ok(Half(2 * p / q)),
                _ => Err(err()),
            };
        }
        if let Some((ip, fp)) = t.split_once('.') {
            let neg = ip.starts_with('-');
            let whole: i64 = if ip == "-" || ip.is_empty() {
                0
            } else {
                ip.parse().map_err(|_| err())?
            };
            let frac = fp.trim_end_matches('0');
            let extra = match frac {
                "" => 0,
                "5" => 1,
                _ => return Err(err()),
            };
            let base = 2 * whole;
            return Ok(Half(if neg { base - extra } else { base + extra }));
        }
        t.parse::<i64>().map(Half::int).map_err(|_| err())
    }
}

impl Serialize for Half {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Half, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            S(String),
            I(i64),
        }
        match Raw::deserialize(d)? {
            Raw::S(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::I(i) => Ok(Half::int(i)),
        }
    }
}
