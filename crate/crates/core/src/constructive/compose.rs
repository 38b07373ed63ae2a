use alloc::format;
use alloc::vec::Vec;

use crate::coloring::{is_strong_odd, Coloring};
use crate::error::ConstructError;
use crate::graph::Graph;
use crate::product::{product_vertex, ProductKind};

use super::Constructed;

fn require_strong_odd(g: &Graph, phi: &Coloring, which: &'static str) -> Result<(), ConstructError> {
    if is_strong_odd(g, phi)?.holds() {
        Ok(())
    } else {
        Err(ConstructError::FactorNotStrongOdd(which))
    }
}

fn pair_coloring(g: &Graph, phi_g: &Coloring, h: &Graph, phi_h: &Coloring) -> Coloring {
    let kh = phi_h.k();
    let mut colors = Vec::with_capacity(g.order() * h.order());
    for a in 0..g.order() {
        for b in 0..h.order() {
            debug_assert_eq!(colors.len(), product_vertex(h.order(), a, b));
            colors.push(phi_g.color(a) * kh + phi_h.color(b));
        }
    }
    Coloring::new(colors)
}

/// `φ(g, h) = (φ_G(g), φ_H(h))`, flattened to `φ_G(g) · k_H + φ_H(h)`.
/// Valid for the cartesian, direct and strong products.
pub fn compose_product_coloring(
    g: &Graph,
    phi_g: &Coloring,
    h: &Graph,
    phi_h: &Coloring,
    kind: ProductKind,
) -> Result<Constructed, ConstructError> {
    if kind == ProductKind::Lexicographic {
        return Err(ConstructError::Palette(
            "lexicographic products need a coloring of H + K1; use compose_lexicographic".into(),
        ));
    }
    require_strong_odd(g, phi_g, "left")?;
    require_strong_odd(h, phi_h, "right")?;
    let mut out = Constructed::new(pair_coloring(g, phi_g, h, phi_h));
    out.steps = (g.order() * h.order()) as u64;
    out.note(format!(
        "{} product: pair colors over {} x {} factor colors",
        kind.name(),
        phi_g.k(),
        phi_h.k()
    ));
    Ok(out)
}

/// Lexicographic composition from a coloring of `H + K1` (apex is vertex 0,
/// `H`'s vertex `h` is `h + 1`, as produced by `join(K1, H)`). The apex color
/// never occurs on `H`, so the restriction uses one color fewer.
pub fn compose_lexicographic(
    g: &Graph,
    phi_g: &Coloring,
    h: &Graph,
    phi_apex_h: &Coloring,
) -> Result<Constructed, ConstructError> {
    let apex_h = crate::graph::join(&Graph::empty(1), h);
    require_strong_odd(g, phi_g, "left")?;
    require_strong_odd(&apex_h, phi_apex_h, "H + K1")?;
    let restricted = Coloring::new(phi_apex_h.colors()[1..].to_vec()).compacted();
    let mut out = Constructed::new(pair_coloring(g, phi_g, h, &restricted));
    out.steps = (g.order() * h.order()) as u64;
    out.note(format!(
        "lexicographic product: H + K1 coloring with {} colors restricted to H ({} colors)",
        phi_apex_h.distinct(),
        restricted.distinct()
    ));
    Ok(out)
}
