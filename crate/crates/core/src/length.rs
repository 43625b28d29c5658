use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The length `ℓ` of a flopping curve: the label of its shaded vertex, so
/// always in `1..=6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Length(u8);

impl Length {
    pub const MAX: u8 = 6;

    pub fn new(ell: i64) -> Result<Self> {
        if (1..=i64::from(Self::MAX)).contains(&ell) {
            Ok(Length(ell as u8))
        } else {
            Err(Error::LengthOutOfRange(ell))
        }
    }

    pub fn get(self) -> u32 {
        u32::from(self.0)
    }

    pub fn all() -> impl Iterator<Item = Length> {
        (1..=Self::MAX).map(Length)
    }
}

impl TryFrom<i64> for Length {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        Length::new(v)
    }
}

impl From<Length> for i64 {
    fn from(l: Length) -> i64 {
        i64::from(l.0)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
