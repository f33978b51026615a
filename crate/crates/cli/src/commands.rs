//! Window decompositions and actions of morphism expressions.

use anyhow::{bail, Result};
use modwin::{
    build_window, identify_factors, module_report, symmetrizer_idempotent, EndOptions, WindowCarrier, WindowModule,
    WindowSpec,
};
use propdsl::{compile_str, run, Carrier};
use serde_json::{json, Value};

/// The window report, and for `A_d` and `A^L_d` the factors on each side
/// of the symmetrizer splitting.
pub fn decompose(spec: WindowSpec, n: Option<usize>) -> Result<Value> {
    let n = n.unwrap_or_else(|| spec.default_window());
    let m = build_window(spec, n)?;
    let mut v = module_report(&m, &EndOptions::default())?;
    if let Some(split) = symmetrizer_split(&m)? {
        v["symmetrizer_split"] = split;
    }
    Ok(v)
}

fn symmetrizer_split(m: &WindowModule) -> Result<Option<Value>> {
    let d = match m.spec() {
        WindowSpec::Band { lo, hi } if hi == lo + 1 && lo >= 1 => lo,
        WindowSpec::Lie { d } if d >= 1 => d,
        _ => return Ok(None),
    };
    let e = symmetrizer_idempotent(m)?;
    let size = 2 * d + m.upper();
    let side = |s: modwin::WindowSubmodule| -> Value {
        match identify_factors(m, &s, None, size) {
            Ok(t) => json!({ "dims": s.dims(), "factors": t.to_string() }),
            Err(e) => json!({ "dims": s.dims(), "error": e.to_string() }),
        }
    };
    Ok(Some(json!({ "image": side(e.image()?), "kernel": side(e.kernel()) })))
}

/// A short human-readable rendering of a decomposition report.
pub fn decompose_text(v: &Value) -> String {
    let mut out = vec![format!("{} on arities 0..={}", v["module"].as_str().unwrap_or("?"), v["window"])];
    out.push(format!("dims {}", v["dims"]));
    out.push(format!("generated dims {}", v["generated_dims"]));
    if let Some(f) = v["composition_factors"]["factors"].as_str() {
        out.push(format!("composition factors {f}"));
    } else {
        out.push(format!("composition factors undetermined: {}", v["composition_factors"]["error"]));
    }
    if let Some(s) = v.get("symmetrizer_split") {
        for side in ["image", "kernel"] {
            out.push(format!("{side} of the symmetrizer: {}", s[side]["factors"].as_str().unwrap_or("undetermined")));
        }
    }
    for f in v["vertex_filtration"].as_array().into_iter().flatten() {
        out.push(format!("vertices ≥ {}: dims {}", f["vertices"], f["dims"]));
    }
    let end = &v["endomorphisms"];
    match end.get("error") {
        None => out.push(format!(
            "End⁰ dim {}, radical dim {}, primitive idempotents {}",
            end["end0_dim"], end["radical_dim"], end["primitive_idempotents"]
        )),
        Some(e) => out.push(format!("End⁰ undetermined: {e}")),
    }
    out.join("\n")
}

/// Applies a morphism expression to basis elements of `M(n)`: all of them,
/// or the one at `index`.
pub fn act(spec: WindowSpec, window: usize, expr: &str, n: usize, index: Option<usize>, offset: usize) -> Result<Vec<(String, String)>> {
    let m = build_window(spec, window)?;
    if n > m.window() {
        bail!("arity {n} lies outside the window 0..={}", m.window());
    }
    let p = compile_str(expr)?;
    let c = WindowCarrier { module: &m, headroom: 0 };
    let picks: Vec<usize> = match index {
        Some(i) if i >= m.dim(n) => bail!("index {i} out of range: M({n}) has dimension {}", m.dim(n)),
        Some(i) => vec![i],
        None => (0..m.dim(n)).collect(),
    };
    let mut out = Vec::new();
    for i in picks {
        let x = Some(m.basis_element(n, i));
        let y = run(&c, &p, offset, &x)?;
        out.push((c.describe(&x), c.describe(&y)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_splits_into_two_sides() {
        let v = decompose("TA2".parse().unwrap(), Some(6)).unwrap();
        assert_eq!(v["endomorphisms"]["primitive_idempotents"], 2);
        assert_eq!(v["symmetrizer_split"]["image"]["factors"], "{(4)}");
        assert_eq!(v["symmetrizer_split"]["kernel"]["factors"], "{(1,1,1), (2), (2,2)}");
        assert!(decompose_text(&v).contains("primitive idempotents 2"));
    }

    #[test]
    fn small_truncation_is_indecomposable() {
        let v = decompose("A0modA2".parse().unwrap(), Some(4)).unwrap();
        assert_eq!(v["endomorphisms"]["primitive_idempotents"], 1);
    }

    #[test]
    fn zero_module_has_an_empty_report() {
        let v = decompose(WindowSpec::Zero, Some(3)).unwrap();
        assert!(v["dims"].as_array().unwrap().iter().all(|x| x == 0));
    }

    #[test]
    fn antipode_relation_acts_as_counit() {
        let lhs = act("A1".parse().unwrap(), 4, "mu . (id(H) * S) . delta", 2, None, 0).unwrap();
        let rhs = act("A1".parse().unwrap(), 4, "eta . eps", 2, None, 0).unwrap();
        assert_eq!(lhs, rhs);
        let id = act("A1".parse().unwrap(), 4, "id(H)", 2, Some(1), 1).unwrap();
        assert_eq!(id[0].0, id[0].1);
        assert!(act("A1".parse().unwrap(), 4, "id(H)", 2, Some(99), 0).is_err());
    }
}
