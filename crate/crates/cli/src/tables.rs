//! Dimension tables and hom-space listings.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use anyhow::{bail, Result};
use homspaces::{
    al0, cached_summary, clc0_cached, coend_induce, jac_space_cached, prop_hom, CatLieModule, DiskCache, HomError,
    PropCat,
};
use serde_json::{json, Value};
use symgrp::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    CatAss,
    CatLie,
    Clc0,
    Al0,
    Jac,
    Coend,
}

impl FromStr for Space {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "catass" => Space::CatAss,
            "catlie" => Space::CatLie,
            "clc0" => Space::Clc0,
            "al0" => Space::Al0,
            "jac" => Space::Jac,
            "coend" => Space::Coend,
            _ => return Err(format!("unknown space {s:?}; expected catass, catlie, clc0, al0, jac or coend")),
        })
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::CatAss => "catass",
            Space::CatLie => "catlie",
            Space::Clc0 => "clc0",
            Space::Al0 => "al0",
            Space::Jac => "jac",
            Space::Coend => "coend",
        })
    }
}

/// Parses `k`, `a..b` or `a..=b`; both forms of range include `b`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number {t:?} in range {s:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let k = num(s)?;
            (k, k)
        }
    };
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad part {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

/// A request for the dimensions of one family of spaces.
#[derive(Clone, Debug)]
pub struct DimsQuery {
    pub space: Space,
    pub d: RangeInclusive<usize>,
    pub m: RangeInclusive<usize>,
    pub n: RangeInclusive<usize>,
    /// For `coend`: induce `S_λ` instead of `C_d`.
    pub lambda: Option<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub params: Vec<(&'static str, String)>,
    pub dim: usize,
}

impl DimsQuery {
    fn columns(&self) -> &'static [&'static str] {
        match (self.space, &self.lambda) {
            (Space::CatAss | Space::CatLie | Space::Al0, _) => &["m", "n"],
            (Space::Clc0, _) | (Space::Coend, None) => &["d", "n"],
            (Space::Coend, Some(_)) => &["lambda", "n"],
            (Space::Jac, _) => &["d", "m", "n"],
        }
    }

    fn label(&self, d: usize, m: usize, n: usize) -> String {
        match (self.space, &self.lambda) {
            (Space::CatAss | Space::CatLie | Space::Al0, _) => format!("dim {}({m},{n})", self.space),
            (Space::Clc0, _) | (Space::Coend, None) => format!("dim {} d={d} n={n}", self.space),
            (Space::Coend, Some(l)) => format!("dim coend S{l} n={n}"),
            (Space::Jac, _) => format!("dim jac d={d} m={m} n={n}"),
        }
    }

    fn compute(&self, d: usize, m: usize, n: usize) -> Result<usize, HomError> {
        Ok(match (self.space, &self.lambda) {
            (Space::CatAss, _) => prop_hom(PropCat::CatAss, m, n)?.dim(),
            (Space::CatLie, _) => prop_hom(PropCat::CatLie, m, n)?.dim(),
            (Space::Al0, _) => al0(m, n)?.dim(),
            (Space::Clc0, _) => clc0_cached(n, d)?.dim(),
            (Space::Jac, _) => jac_space_cached(d, m, n)?.dim(),
            (Space::Coend, None) => coend_induce(&CatLieModule::casimir_family(d)?, n)?.dim(),
            (Space::Coend, Some(l)) if l.size() == 0 => coend_induce(&CatLieModule::unit(), n)?.dim(),
            (Space::Coend, Some(l)) => coend_induce(&CatLieModule::specht(l)?, n)?.dim(),
        })
    }

    fn cells(&self) -> Vec<(usize, usize, usize)> {
        let cols = self.columns();
        let ds: Vec<usize> = if cols.contains(&"d") { self.d.clone().collect() } else { vec![0] };
        let ms: Vec<usize> = if cols.contains(&"m") { self.m.clone().collect() } else { vec![0] };
        let mut out = Vec::new();
        for &d in &ds {
            for &m in &ms {
                for n in self.n.clone() {
                    out.push((d, m, n));
                }
            }
        }
        out
    }

    /// One row per parameter tuple, in lexicographic order. With a cache,
    /// each dimension is read from or written to `<dir>/<label>.json`.
    pub fn table(&self, cache: Option<&DiskCache>) -> Result<Vec<Row>> {
        let mut rows = Vec::new();
        for (d, m, n) in self.cells() {
            let label = self.label(d, m, n);
            let v = cached_summary(cache, &label, || Ok(json!({ "label": label, "dim": self.compute(d, m, n)? })))?;
            let Some(dim) = v["dim"].as_u64() else { bail!("cached entry {label:?} has no dimension") };
            let params = self
                .columns()
                .iter()
                .map(|&c| {
                    let val = match c {
                        "d" => d.to_string(),
                        "m" => m.to_string(),
                        "lambda" => self.lambda.as_ref().map(|l| l.to_string()).unwrap_or_default(),
                        _ => n.to_string(),
                    };
                    (c, val)
                })
                .collect();
            rows.push(Row { params, dim: dim as usize });
        }
        Ok(rows)
    }
}

pub fn rows_json(space: Space, rows: &[Row]) -> Value {
    let items: Vec<Value> = rows
        .iter()
        .map(|r| {
            let mut v = serde_json::Map::new();
            for (k, x) in &r.params {
                v.insert(k.to_string(), json!(x));
            }
            v.insert("dim".into(), json!(r.dim));
            Value::Object(v)
        })
        .collect();
    json!({ "space": space.to_string(), "rows": items })
}

pub fn rows_csv(rows: &[Row]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(first) = rows.first() {
        let mut head: Vec<&str> = first.params.iter().map(|(k, _)| *k).collect();
        head.push("dim");
        w.write_record(&head)?;
    }
    for r in rows {
        let mut rec: Vec<String> = r.params.iter().map(|(_, v)| v.clone()).collect();
        rec.push(r.dim.to_string());
        w.write_record(&rec)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn rows_text(rows: &[Row]) -> String {
    rows.iter()
        .map(|r| {
            let ps: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{}  dim {}", ps.join(" "), r.dim)
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// The basis of one hom-space: a label, its dimension and rendered basis
/// elements.
pub fn homspace_show(space: Space, d: usize, m: usize, n: usize) -> Result<Value> {
    let (label, dim, basis): (String, usize, Vec<String>) = match space {
        Space::CatAss | Space::CatLie => {
            let cat = if space == Space::CatAss { PropCat::CatAss } else { PropCat::CatLie };
            let h = prop_hom(cat, m, n)?;
            (h.label().to_string(), h.dim(), h.basis().iter().map(|k| format!("{k:?}")).collect())
        }
        Space::Al0 | Space::Jac => {
            let h = if space == Space::Al0 { al0(m, n)? } else { (*jac_space_cached(d, m, n)?).clone() };
            (h.label().to_string(), h.dim(), h.basis().iter().map(|x| modwin::window::render(x)).collect())
        }
        Space::Clc0 => {
            let c = clc0_cached(n, d)?;
            let basis = c
                .basis_forests()
                .iter()
                .map(|f| f.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ⊗ "))
                .collect();
            (c.model.label().to_string(), c.dim(), basis)
        }
        Space::Coend => bail!("coend spaces have no listed basis; use dims coend"),
    };
    Ok(json!({ "label": label, "dim": dim, "basis": basis }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_include_both_ends() {
        assert_eq!(parse_range("0..3").unwrap(), 0..=3);
        assert_eq!(parse_range("1..=2").unwrap(), 1..=2);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn jacobi_table_contains_degree_one() {
        let q = DimsQuery { space: Space::Jac, d: 0..=2, m: 0..=0, n: 0..=3, lambda: None };
        let rows = q.table(None).unwrap();
        assert_eq!(rows.len(), 12);
        let r = rows.iter().find(|r| r.params[0].1 == "1" && r.params[2].1 == "2").unwrap();
        assert_eq!(r.dim, 3);
    }

    #[test]
    fn c22_and_clc0_at_one_output() {
        let q = DimsQuery { space: Space::Al0, d: 0..=0, m: 2..=2, n: 2..=2, lambda: None };
        assert_eq!(q.table(None).unwrap()[0].dim, 6);
        let q = DimsQuery { space: Space::Clc0, d: 0..=3, m: 0..=0, n: 1..=1, lambda: None };
        assert!(q.table(None).unwrap().iter().all(|r| r.dim == 0));
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path()).unwrap();
        let q = DimsQuery { space: Space::CatLie, d: 0..=0, m: 3..=3, n: 1..=2, lambda: None };
        let a = q.table(Some(&cache)).unwrap();
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
        assert_eq!(q.table(Some(&cache)).unwrap(), a);
        assert_eq!(a[0].dim, 2);
    }

    #[test]
    fn csv_has_a_header() {
        let q = DimsQuery { space: Space::Coend, d: 0..=0, m: 0..=0, n: 0..=2, lambda: Some(parse_partition("1,1").unwrap()) };
        let s = rows_csv(&q.table(None).unwrap()).unwrap();
        assert_eq!(s.lines().next().unwrap(), "lambda,n,dim");
        assert_eq!(s.lines().count(), 4);
    }

    #[test]
    fn show_lists_a_basis() {
        let v = homspace_show(Space::Jac, 1, 0, 2, ).unwrap();
        assert_eq!(v["dim"], 3);
        assert_eq!(v["basis"].as_array().unwrap().len(), 3);
        assert!(homspace_show(Space::Coend, 0, 0, 0).is_err());
    }
}
