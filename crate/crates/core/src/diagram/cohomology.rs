use std::fmt;
use std::str::FromStr;

/// A class in `H^1(Σ_g; Z/2)`, stored as `2g` bits.
///
/// Pairing with a circle is the parity of the dot product with the circle's
/// mod-2 label vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CohomologyClass {
    bits: u64,
    len: u8,
}

impl CohomologyClass {
    pub fn zero(genus: u32) -> Self {
        CohomologyClass { bits: 0, len: (2 * genus) as u8 }
    }

    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= 64, "class length {len} exceeds 64");
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        assert_eq!(bits & !mask, 0, "bits outside the class length");
        CohomologyClass { bits, len: len as u8 }
    }

    pub fn from_slice(v: &[u8]) -> Self {
        let bits = v.iter().enumerate().filter(|(_, b)| **b % 2 == 1).fold(0u64, |acc, (k, _)| acc | (1 << k));
        Self::from_bits(bits, v.len())
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Whether a circle with mod-2 class `z` is dotted.
    pub fn pairs_odd(&self, z: u64) -> bool {
        (self.bits & z).count_ones() % 2 == 1
    }

    /// All classes for genus `g`, in increasing bit order.
    pub fn all(genus: u32) -> impl Iterator<Item = CohomologyClass> {
        let len = (2 * genus) as usize;
        (0..1u64 << len).map(move |b| CohomologyClass::from_bits(b, len))
    }

    pub fn nonzero(genus: u32) -> impl Iterator<Item = CohomologyClass> {
        Self::all(genus).skip(1)
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (0..self.len).map(|k| ((self.bits >> k) & 1) as u8).collect()
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_vec().iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for CohomologyClass {
    type Err = String;

    /// Parses comma-separated bits, e.g. `1,0`. Parentheses are optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Ok(CohomologyClass::from_bits(0, 0));
        }
        let bits = t
            .split(',')
            .map(|p| match p.trim() {
                "0" => Ok(0u8),
                "1" => Ok(1u8),
                other => Err(format!("invalid bit {other:?} in class {s:?}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if bits.len() > 64 {
            return Err(format!("class {s:?} is longer than 64 bits"));
        }
        Ok(CohomologyClass::from_slice(&bits))
    }
}
