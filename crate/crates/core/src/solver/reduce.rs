use super::{check, Coloring, SolveError, WormInstance};
use crate::graph::{chromatic_coloring, Graph};
use crate::pattern::Pattern;

/// Turns a valid `(m, P_r)` coloring `f` into one with at most `r - 1`
/// colors.
///
/// The edges bichromatic under `f` form a `P_r`-free graph, which has an
/// exact coloring with at most `r - 1` colors. Using that coloring keeps
/// every edge monochromatic under the output monochromatic under `f`, so no
/// monochromatic copy of `m` appears; and it cannot host a rainbow `P_r`.
pub fn reduce_to_path_bound(
    g: &Graph,
    m: &Pattern,
    r: usize,
    f: &Coloring,
) -> Result<Coloring, SolveError> {
    if r == 0 {
        return Err(SolveError::PathLength);
    }
    let inst = WormInstance::new(g, m, &Pattern::Path(r))?;
    if !check(&inst, f)?.is_valid() {
        return Err(SolveError::InvalidColoring);
    }
    if f.colors_used() < r {
        return Ok(f.clone());
    }
    let mut bichromatic = Graph::new(g.order()).expect("same order as g");
    for (u, v) in g.edges() {
        if f.color(u) != f.color(v) {
            bichromatic.add_edge(u, v).expect("edge of g");
        }
    }
    let out = Coloring::new(&chromatic_coloring(&bichromatic));
    if out.colors_used() >= r || !check(&inst, &out)?.is_valid() {
        return Err(SolveError::InvalidColoring);
    }
    Ok(out)
}
