use alloc::format;
use alloc::vec::Vec;

use crate::coloring::Coloring;
use crate::error::ConstructError;

use super::Constructed;

/// Optimal strong odd coloring of `C_n` (vertices in traversal order).
///
/// On a cycle, strong odd is the same as proper on `C_n²`: both neighbours
/// of every vertex must differ from it and from each other. With `3 | n` the
/// pattern `012` repeats; `n = 5` needs the rainbow; otherwise
/// `n = 3a + 4b` with `b ≥ 1` and the blocks `012` / `0123` concatenate
/// cleanly because every block starts `0 1` and ends in `1 2` or `2 3`.
pub fn color_cycle(n: usize) -> Result<Constructed, ConstructError> {
    if n < 3 {
        return Err(ConstructError::CycleTooShort(n));
    }
    let (colors, case): (Vec<usize>, _) = if n.is_multiple_of(3) {
        ((0..n).map(|i| i % 3).collect(), "3 | n: repeat 012")
    } else if n == 5 {
        ((0..5).collect(), "n = 5: rainbow")
    } else {
        // smallest b >= 1 with n - 4b divisible by 3
        let b = (1..=3).find(|b| n >= 4 * b && (n - 4 * b).is_multiple_of(3)).unwrap();
        let a = (n - 4 * b) / 3;
        let mut colors = Vec::with_capacity(n);
        for _ in 0..a {
            colors.extend_from_slice(&[0, 1, 2]);
        }
        for _ in 0..b {
            colors.extend_from_slice(&[0, 1, 2, 3]);
        }
        (colors, "3 ∤ n: blocks 012 and 0123")
    };
    let mut out = Constructed::new(Coloring::new(colors));
    out.steps = n as u64;
    out.note(format!("C_{n}: {case}"));
    Ok(out)
}
