//! The simples helix of a length `ℓ` flop, as formal symbols.
//!
//! `S_0, …, S_{N-1}` is a fixed list built from the sheaves `O_aC`, their
//! dualising sheaves `ω_aC`, and (for `ℓ = 5, 6`) the extension `Z` and its
//! dual partner `Z^ω`. The rest of the helix follows from
//! `S_{i+N} = S_i ⊗ O(1)`. No cohomology is computed; symbols compare
//! structurally after rewriting `ω_2C = O_2C(-1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::length::Length;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SheafKind {
    /// Structure sheaf of the thickening `aC`, `a ≥ 1`.
    OC(u32),
    /// Dualising sheaf of `aC`, `a ≥ 2`.
    OmegaC(u32),
    Z,
    ZOmega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SymbolJson", into = "SymbolJson")]
pub struct SheafSymbol {
    kind: SheafKind,
    twist: i64,
    shift: i64,
}

impl SheafSymbol {
    /// Builds a symbol in canonical form (`ω_2C(k)` becomes `O_2C(k-1)`).
    pub fn new(kind: SheafKind, twist: i64, shift: i64) -> Result<Self> {
        match kind {
            SheafKind::OC(0) => Err(Error::Precondition("O_aC needs a ≥ 1".into())),
            SheafKind::OmegaC(a) if a < 2 => Err(Error::Precondition("ω_aC needs a ≥ 2".into())),
            SheafKind::OmegaC(2) => Ok(SheafSymbol {
                kind: SheafKind::OC(2),
                twist: twist - 1,
                shift,
            }),
            _ => Ok(SheafSymbol { kind, twist, shift }),
        }
    }

    fn raw(kind: SheafKind, twist: i64) -> Self {
        SheafSymbol::new(kind, twist, 0).expect("helix entries are well formed")
    }

    pub fn kind(&self) -> SheafKind {
        self.kind
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// `⊗ O(k)`.
    pub fn twisted(self, k: i64) -> Self {
        SheafSymbol {
            twist: self.twist + k,
            ..self
        }
    }

    /// `[s]`.
    pub fn shifted(self, s: i64) -> Self {
        SheafSymbol {
            shift: self.shift + s,
            ..self
        }
    }
}

impl fmt::Display for SheafSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let thick = |a: u32| if a == 1 { String::new() } else { a.to_string() };
        match self.kind {
            SheafKind::OC(a) => write!(f, "O_{}C", thick(a))?,
            SheafKind::OmegaC(a) => write!(f, "ω_{}C", thick(a))?,
            SheafKind::Z => write!(f, "Z")?,
            SheafKind::ZOmega => write!(f, "Z^ω")?,
        }
        if self.twist != 0 {
            write!(f, "({})", self.twist)?;
        }
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SymbolJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<u32>,
    twist: i64,
    shift: i64,
}

impl From<SheafSymbol> for SymbolJson {
    fn from(s: SheafSymbol) -> Self {
        let (kind, a) = match s.kind {
            SheafKind::OC(a) => ("OC", Some(a)),
            SheafKind::OmegaC(a) => ("omegaC", Some(a)),
            SheafKind::Z => ("Z", None),
            SheafKind::ZOmega => ("Zomega", None),
        };
        SymbolJson {
            kind: kind.to_string(),
            a,
            twist: s.twist,
            shift: s.shift,
        }
    }
}

impl TryFrom<SymbolJson> for SheafSymbol {
    type Error = Error;

    fn try_from(j: SymbolJson) -> Result<Self> {
        let need_a = || {
            j.a
                .ok_or_else(|| Error::Precondition(format!("symbol kind {} needs `a`", j.kind)))
        };
        let kind = match j.kind.as_str() {
            "OC" => SheafKind::OC(need_a()?),
            "omegaC" => SheafKind::OmegaC(need_a()?),
            "Z" => SheafKind::Z,
            "Zomega" => SheafKind::ZOmega,
            other => return Err(Error::Precondition(format!("unknown symbol kind `{other}`"))),
        };
        SheafSymbol::new(kind, j.twist, j.shift)
    }
}

/// `S_0, …, S_{N-1}`.
pub fn base_helix(length: Length) -> Vec<SheafSymbol> {
    use SheafKind::*;
    let ell = length.get();
    let mut out = vec![SheafSymbol::raw(OC(1), -1)];
    out.extend((3..=ell).rev().map(|a| SheafSymbol::raw(OC(a), 0)));
    let with_z = ell >= 5;
    if with_z {
        out.push(SheafSymbol::raw(Z, 0));
    }
    if ell >= 2 {
        out.push(SheafSymbol::raw(OC(2), 0));
    }
    if with_z {
        out.push(SheafSymbol::raw(ZOmega, 1));
    }
    out.extend((3..=ell).map(|a| SheafSymbol::raw(OmegaC(a), 1)));
    out
}

/// Number of helix members per twist period.
pub fn helix_period(length: Length) -> usize {
    base_helix(length).len()
}

/// `S_i` for any integer `i`.
pub fn helix_entry(length: Length, i: i64) -> SheafSymbol {
    let base = base_helix(length);
    let n = base.len() as i64;
    let (q, r) = (i.div_euclid(n), i.rem_euclid(n));
    base[r as usize].twisted(q)
}

/// The heart `A_t`, reached from the perverse heart `A_0` by `t` tilts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Heart {
    pub index: i64,
    /// `(S_{t-1}[1], S_t)`.
    pub simples: (SheafSymbol, SheafSymbol),
    /// Names of the summands of the tilting progenerator `V_{t-1} ⊕ V_t`.
    pub progenerator: (String, String),
    /// Name of the algebra representing deformations of `S_t`.
    pub deformation_algebra: String,
}

pub fn heart(length: Length, t: i64) -> Heart {
    Heart {
        index: t,
        simples: (helix_entry(length, t - 1).shifted(1), helix_entry(length, t)),
        progenerator: (format!("V({})", t - 1), format!("V({t})")),
        deformation_algebra: format!("Lambda_def({t})"),
    }
}

/// `dim Ext¹(O_2C, O_3C)`: zero for `ℓ ≤ 4`, one for `ℓ = 5, 6`.
pub fn ext1_dichotomy(length: Length) -> Result<u32> {
    match length.get() {
        3 | 4 => Ok(0),
        5 | 6 => Ok(1),
        ell => Err(Error::Precondition(format!(
            "O_3C does not exist for length {ell}"
        ))),
    }
}

/// Duality, contravariant in twist and shift:
/// `𝔻(F(k)[s]) = F'(-k)[1-s]` where `F'` is the partner of `F` under
/// `Z ↔ Z^ω` and `O_2C ↔ ω_2C`. With `k = s = 0` this is `𝔻(Z) = Z^ω[1]`,
/// and applying it twice returns the input.
pub fn dual(symbol: &SheafSymbol) -> Result<SheafSymbol> {
    let partner = match symbol.kind {
        SheafKind::Z => SheafKind::ZOmega,
        SheafKind::ZOmega => SheafKind::Z,
        SheafKind::OC(2) => SheafKind::OmegaC(2),
        _ => return Err(Error::UnsupportedDual(symbol.to_string())),
    };
    SheafSymbol::new(partner, -symbol.twist, 1 - symbol.shift)
}
