//! Plain enumeration of restricted-growth colorings. Only properness is
//! used to cut branches; every leaf is judged by the verifiers alone.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::Coloring;
use crate::error::SolveError;
use crate::graph::Graph;

use super::Param;

/// Largest order the oracle accepts.
pub const MAX_ORDER: usize = 9;

/// Minimum number of colors over all restricted-growth colorings of `n`
/// vertices that are proper on `conflict` and accepted by `accept`.
pub fn brute_force_min(
    n: usize,
    conflict: &Graph,
    mut accept: impl FnMut(&Coloring) -> bool,
) -> Result<usize, SolveError> {
    if n > MAX_ORDER {
        return Err(SolveError::TooLarge { n, max: MAX_ORDER });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut colors = vec![0usize; n];
    let mut best = usize::MAX;
    fn rec(
        v: usize,
        used: usize,
        colors: &mut Vec<usize>,
        conflict: &Graph,
        best: &mut usize,
        accept: &mut dyn FnMut(&Coloring) -> bool,
    ) {
        let n = colors.len();
        if v == n {
            let phi = Coloring::new(colors.clone());
            if accept(&phi) {
                *best = (*best).min(used);
            }
            return;
        }
        for c in 0..=used {
            if c == n {
                break;
            }
            if conflict.neighbors(v).iter().any(|&u| u < v && colors[u] == c) {
                continue;
            }
            colors[v] = c;
            rec(v + 1, used.max(c + 1), colors, conflict, best, accept);
        }
    }
    rec(0, 0, &mut colors, conflict, &mut best, &mut accept);
    Ok(best)
}

pub fn brute_force_param(g: &Graph, param: Param) -> Result<usize, SolveError> {
    let conflict = match param {
        Param::Square => crate::graph::square(g),
        _ => g.clone(),
    };
    brute_force_min(g.order(), &conflict, |phi| param.verifies(g, phi))
}

pub fn brute_force_chi_so(g: &Graph) -> Result<usize, SolveError> {
    brute_force_param(g, Param::StrongOdd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_cycle;

    #[test]
    fn cycles() {
        assert_eq!(brute_force_chi_so(&make_cycle(4).unwrap()), Ok(4));
        assert_eq!(brute_force_chi_so(&make_cycle(6).unwrap()), Ok(3));
        assert_eq!(brute_force_chi_so(&make_cycle(7).unwrap()), Ok(4));
        assert_eq!(brute_force_chi_so(&make_cycle(5).unwrap()), Ok(5));
    }

    #[test]
    fn size_guard() {
        assert_eq!(
            brute_force_chi_so(&make_cycle(10).unwrap()),
            Err(SolveError::TooLarge { n: 10, max: 9 })
        );
    }
}
