//! The three-step worked example on `Σ_3`.
//!
//! Vertices `±ε_i` are labelled `2(i-1)` (for `+ε_i`) and `2(i-1) + 1`
//! (for `-ε_i`); `w_1, w_2, w_3` are `8, 9, 10`. The steps subdivide
//! `{ε_1, ε_2}`, then `{ε_3, ε_4}`, then `{ε_1, w_2}`.

use crate::complex::VertexId;
use crate::subdivision::SubdivisionSequence;

/// Canonical id of `+ε_i` (`sign = 1`) or `-ε_i` (`sign = -1`), `i` 1-based.
pub fn epsilon(i: u32, sign: i8) -> VertexId {
    VertexId(2 * (i - 1) + u32::from(sign < 0))
}

pub fn sequence() -> SubdivisionSequence {
    let mut seq = SubdivisionSequence::new(4).expect("d = 4");
    let w2 = VertexId(9);
    for (a, b) in [
        (epsilon(1, 1), epsilon(2, 1)),
        (epsilon(3, 1), epsilon(4, 1)),
        (epsilon(1, 1), w2),
    ] {
        seq.extend(a, b).expect("example steps are edges");
    }
    seq
}

/// Human-readable name of a vertex of the example: `+e1`, `-e3`, `w2`, ...
pub fn label(v: VertexId) -> String {
    if v.0 < 8 {
        let sign = if v.0 & 1 == 0 { '+' } else { '-' };
        format!("{sign}e{}", v.0 / 2 + 1)
    } else {
        format!("w{}", v.0 - 7)
    }
}
