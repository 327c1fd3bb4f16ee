//! Local differential components.
//!
//! Signs are encoded as a bit: `0` for `v₊`, `1` for `v₋`. Every entry is
//! tagged with the component it belongs to. Summing all components gives the
//! doubled Lee map in the `v` basis, for every dotting:
//!
//! ```text
//! m: ++ → +    +-, -+ → -    -- → +
//! Δ: +  → +- + -+            -  → -- + ++
//! η: x^u → x^ℓ               ℓ+ → 2u-    ℓ- → 2u+
//! ```
//!
//! Four printed rows had source symbols that contradict their own blocks;
//! the corrected forms below are the unique ones compatible with the Lee map
//! above and with the declared degrees of each component.

use super::Component::{self, C0, C2, C4};

const P: u8 = 0;
const M: u8 = 1;

/// Merge of circles `a`, `b` (dots `da`, `db`) with signs `sa`, `sb`.
/// The coefficient is always 1.
pub fn merge(da: bool, db: bool, sa: u8, sb: u8) -> (u8, Component) {
    match (da, db, sa, sb) {
        // _ ⊗ _ → _
        (false, false, P, P) => (P, C0),
        (false, false, P, M) | (false, false, M, P) => (M, C0),
        (false, false, M, M) => (P, C4),
        // • ⊗ • → _
        (true, true, P, P) => (P, C2),
        (true, true, P, M) | (true, true, M, P) => (M, C0),
        (true, true, M, M) => (P, C4),
        // • ⊗ _ → •
        (true, false, P, P) => (P, C0),
        (true, false, P, M) => (M, C2),
        (true, false, M, P) => (M, C0),
        (true, false, M, M) => (P, C4),
        // _ ⊗ • → •, mirror of the block above
        (false, true, P, P) => (P, C0),
        (false, true, M, P) => (M, C2),
        (false, true, P, M) => (M, C0),
        (false, true, M, M) => (P, C4),
        _ => unreachable!("sign bits are 0 or 1"),
    }
}

/// Split of a circle with sign `sa` into circles with dots `d1`, `d2`.
/// Returns both terms `(s1, s2, component)`, each with coefficient 1.
pub fn split(d1: bool, d2: bool, sa: u8) -> [(u8, u8, Component); 2] {
    match (d1, d2, sa) {
        // _ → _ ⊗ _ ; the second row's +4 term had a dotted source in print
        (false, false, P) => [(P, M, C0), (M, P, C0)],
        (false, false, M) => [(M, M, C0), (P, P, C4)],
        // • → • ⊗ _
        (true, false, P) => [(P, M, C0), (M, P, C2)],
        (true, false, M) => [(M, M, C0), (P, P, C4)],
        // • → _ ⊗ •, mirror of the block above
        (false, true, P) => [(M, P, C0), (P, M, C2)],
        (false, true, M) => [(M, M, C0), (P, P, C4)],
        // _ → • ⊗ • ; the last term was printed as v₊ → v•₊•₊ under Δ⁺²,
        // which has neither the right source nor the right degree
        (true, true, P) => [(P, M, C0), (M, P, C0)],
        (true, true, M) => [(M, M, C2), (P, P, C4)],
        _ => unreachable!("sign bits are 0 or 1"),
    }
}

/// Single-cycle map on a circle with sign `sa`; `lower` is the superscript of
/// the source. The target superscript is always flipped.
/// Returns `(sign, coefficient, component)`.
pub fn eta(dotted: bool, lower: bool, sa: u8) -> (u8, i64, Component) {
    match (dotted, lower, sa) {
        (_, false, P) => (P, 1, C0),
        (_, false, M) => (M, 1, C0),
        (false, true, P) => (M, 2, C0),
        // printed with source v•₋•₋ in both blocks; the source is v₋^ℓ
        (false, true, M) => (P, 2, C4),
        (true, true, P) => (M, 2, C2),
        (true, true, M) => (P, 2, C4),
        _ => unreachable!("sign bits are 0 or 1"),
    }
}
