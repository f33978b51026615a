//! A JSON summary of a window module.

use serde_json::{json, Value};

use crate::endo::{end_algebra, EndOptions};
use crate::factors::identify_factors;
use crate::submodule::{filtration_subspace, generated_submodule, WindowSubmodule};
use crate::window::WindowModule;
use crate::WinError;

/// Dimensions per arity and degree, the generated submodule, the vertex
/// filtration, the composition factors and the idempotent count. Parts
/// that cannot be decided on the window are reported as errors in place.
pub fn module_report(m: &WindowModule, opts: &EndOptions) -> Result<Value, WinError> {
    let blocks: Vec<Vec<usize>> = (0..=m.window()).map(|n| m.degrees().map(|k| m.block_dim(n, k)).collect()).collect();
    let full = WindowSubmodule::full(m);
    let generated = generated_submodule(m, m.generators())?;
    let top = m.degrees().end.saturating_sub(1);
    let mut filtration = Vec::new();
    for k in 1..=top {
        let f = filtration_subspace(m, m.degrees().start, k)?;
        filtration.push(json!({ "vertices": k, "dims": f.dims() }));
    }
    let max_size = 2 * top + m.upper();
    let factors = match identify_factors(m, &full, None, max_size) {
        Ok(t) => json!({ "factors": t.to_string(), "dims": t.dims() }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let end = match end_algebra(m, opts) {
        Ok(r) => r.to_json(),
        Err(e) => json!({ "error": e.to_string() }),
    };
    Ok(json!({
        "module": m.spec().to_string(),
        "window": m.window(),
        "degrees": [m.degrees().start, m.degrees().end],
        "dims": m.dims(),
        "block_dims": blocks,
        "generated_dims": generated.dims(),
        "generated_is_everything": generated == full,
        "vertex_filtration": filtration,
        "composition_factors": factors,
        "endomorphisms": end,
    }))
}
