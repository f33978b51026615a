//! Runs `diagcat verify --all` once and judges every acceptance criterion
//! from its report, its wall time and its peak memory.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

/// Per-criterion runtime budgets in seconds; `None` means unbounded.
/// All numeric comparisons below are exact equalities.
const BUDGETS: [(usize, Option<u64>); 13] = [
    (1, Some(1)),
    (2, Some(10)),
    (3, Some(120)),
    (4, Some(120)),
    (5, None),
    (6, Some(300)),
    (7, Some(900)),
    (8, Some(600)),
    (9, Some(120)),
    (10, Some(300)),
    (11, None),
    (12, Some(1200)),
    (13, None),
];
const TOTAL_BUDGET: Duration = Duration::from_secs(45 * 60);
const MEMORY_BUDGET_BYTES: u64 = 4 << 30;

type Judged = Result<String, String>;

fn want(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
}

fn u64s(v: &Value) -> Vec<u64> {
    v.as_array().map(|a| a.iter().filter_map(Value::as_u64).collect()).unwrap_or_default()
}

/// `"{(2,2,2), (4,2)}"` as a set of partitions.
fn factors(v: &Value) -> BTreeSet<String> {
    v.as_str()
        .unwrap_or("")
        .trim_matches(|c| c == '{' || c == '}')
        .split(", ")
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn peak_child_rss_bytes() -> u64 {
    let mut usage: libc::rusage = unsafe { std::mem::zeroed() };
    let rc = unsafe { libc::getrusage(libc::RUSAGE_CHILDREN, &mut usage) };
    assert_eq!(rc, 0, "getrusage failed");
    usage.ru_maxrss as u64 * 1024
}

fn criterion_values(criterion: usize, v: &Value) -> Result<(), String> {
    match criterion {
        1 => want(v["dim_c22"] == 6, "dim C(2,2) is not 6"),
        2 => {
            let table = v["table"].as_array().ok_or("no table")?;
            want(table.len() == 36, "table does not cover m,n ≤ 5")?;
            let at = |m: u64, n: u64, k: &str| {
                table.iter().find(|r| r["m"] == m && r["n"] == n).and_then(|r| r[k].as_u64()).unwrap_or(u64::MAX)
            };
            want(at(3, 2, "catass") == 24, "catAss(3,2) ≠ 24")?;
            want(at(3, 1, "catlie") == 2, "catLie(3,1) ≠ 2")?;
            want(at(4, 2, "catlie") == 22, "catLie(4,2) ≠ 22")?;
            want(table.iter().filter(|r| r["m"].as_u64() < r["n"].as_u64()).all(|r| r["catlie"] == 0), "catLie(m,n) ≠ 0 for m < n")
        }
        3 => {
            let cells = v["cells"].as_array().ok_or("no cells")?;
            want(cells.len() == 15, "cells missing")?;
            want(cells.iter().all(|c| c["four_t"] == c["stu"]), "4T and STU dimensions differ")?;
            want(cells.iter().any(|c| c["d"] == 1 && c["n"] == 2 && c["four_t"] == 3), "dim 𝒜_1(0,2) ≠ 3")
        }
        4 => {
            let rows = v["checks"].as_array().ok_or("no checks")?;
            want(rows.iter().all(|r| r["holds"] == true), "an identity fails")?;
            let covered: BTreeSet<&str> = rows.iter().filter_map(|r| r["identity"].as_str()).collect();
            let all: BTreeSet<&str> = propdsl::all_axioms().iter().map(|a| a.id).collect();
            want(covered == all, "some identity is never checked")?;
            want(v["windows"].as_u64().unwrap_or(0) >= 10, "too few windows")
        }
        5 => {
            want(u64s(&v["dims"]) == (0..=6).map(|n| n * (n + 1) / 2).collect::<Vec<u64>>(), "dims ≠ n(n+1)/2")?;
            want(factors(&v["factors"]) == set(&["(2)"]), "A₁ is not S^(2)")
        }
        6 => {
            want(u64s(&v["ranks"]) == (0..=6).map(|n| binom(n + 3, 4)).collect::<Vec<u64>>(), "rank e ≠ binom(n+3,4)")?;
            want(factors(&v["image_factors"]) == set(&["(4)"]), "im e is not S^(4)")?;
            want(factors(&v["kernel_factors"]) == set(&["(2,2)", "(1,1,1)", "(2)"]), "complement factors differ")?;
            want(v["submodules"] == 8, "submodule count ≠ 8")?;
            want(v["idempotents"] == 2, "idempotent count ≠ 2")
        }
        7 => want(factors(&v["factors"]) == set(&["(4,2)", "(2,2,2)"]), "head factors differ"),
        8 => {
            let cells = v["cells"].as_array().ok_or("no cells")?;
            let count = |s: &str| cells.iter().filter(|c| c["side"] == s).count();
            want(count("C") == 16 && count("A") == 15, "cells missing")?;
            want(cells.iter().all(|c| c["equal"] == true), "a quotient dimension differs")?;
            want(
                cells.iter().any(|c| c["side"] == "A" && c["d"] == 2 && c["n"] == 2 && c["quotient_dim"] == 9),
                "A-side d=2 n=2 ≠ 9",
            )
        }
        9 => want(v["comparisons"] == 42, "not every |λ| ≤ 3, n ≤ 5 was compared"),
        10 => {
            let cells = v["cells"].as_array().ok_or("no cells")?;
            want(cells.len() == 15 && cells.iter().all(|c| c["induced"] == c["direct"]), "coend dims differ")
        }
        11 => {
            let mods = v["modules"].as_array().ok_or("no modules")?;
            want(mods.len() == 2, "modules missing")?;
            for m in mods {
                let d = m["d"].as_u64().ok_or("no d")?;
                let ranks: Vec<u64> = (0..=5).map(|n| binom(n + 2 * d, 2 * d + 1)).collect();
                want(u64s(&m["ranks"]) == ranks, format!("rank e on AL{d}"))?;
            }
            want(factors(&mods[0]["head_factors"]) == set(&["(2,1)", "(3)"]), "AL1 head differs")?;
            want(factors(&mods[1]["head_factors"]) == set(&["(2,2,1)", "(3,2)", "(4,1)", "(5)"]), "AL2 head differs")
        }
        12 => {
            let certs = v["certificates"].as_array().ok_or("no certificates")?;
            let modules: BTreeSet<&str> = certs.iter().filter_map(|c| c["module"].as_str()).collect();
            let expected: BTreeSet<&str> = ["A0modA2", "A0modA3", "A1modA3", "A2modA4", "AQmodAQ3", "AQmodAQ4"].into();
            want(modules == expected, "certificate set differs")?;
            for c in certs {
                want(c["kind"] == "window certificate", "unlabeled certificate")?;
                want(c["no_nontrivial_idempotent"] == true, format!("{} has an idempotent", c["module"]))?;
                let s = c["module"].as_str().unwrap_or("");
                let hi: u64 = s.rsplit(|ch: char| !ch.is_ascii_digit()).next().and_then(|x| x.parse().ok()).unwrap_or(0);
                want(c["window"] == 2 * hi, format!("{s} not at N = 2d′"))?;
            }
            Ok(())
        }
        13 => {
            want(v["AL1Q"]["nontrivial_idempotent"] == false, "AL1Q has a nontrivial idempotent")?;
            println!("    experimental AL2Q run (not asserted): {}", v["experimental"]);
            Ok(())
        }
        _ => Err(format!("unknown criterion {criterion}")),
    }
}

fn judge(report: &Value, criterion: usize, budget: Option<u64>) -> Judged {
    let check = report["checks"]
        .as_array()
        .and_then(|a| a.iter().find(|c| c["criterion"] == criterion))
        .ok_or_else(|| format!("no report for criterion {criterion}"))?;
    let ms = check["runtime_ms"].as_u64().ok_or("no runtime")?;
    let detail = format!("{} in {:.1} s", check["id"].as_str().unwrap_or("?"), ms as f64 / 1000.0);
    if check["status"] != "pass" {
        return Err(format!("{detail}: status {} {}", check["status"], check["values"]["failures"]));
    }
    if let Some(b) = budget {
        want(ms <= b * 1000, format!("{detail}: over the {b} s budget"))?;
    }
    criterion_values(criterion, &check["values"]).map_err(|e| format!("{detail}: {e}"))?;
    Ok(detail)
}

#[test]
fn acceptance_criteria() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_diagcat"))
        .args(["verify", "--all", "--jobs", "1", "--timings", "--json"])
        .arg(&path)
        .output()
        .expect("diagcat runs");
    let wall = start.elapsed();
    let rss = peak_child_rss_bytes();
    print!("{}", String::from_utf8_lossy(&out.stdout));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).expect("report written")).expect("report is JSON");

    let mut failed = Vec::new();
    for (criterion, budget) in BUDGETS {
        let verdict = judge(&report, criterion, budget);
        match &verdict {
            Ok(d) => println!("criterion {criterion:>2}: PASS  {d}"),
            Err(e) => {
                println!("criterion {criterion:>2}: FAIL  {e}");
                failed.push(criterion);
            }
        }
    }
    let resources = format!(
        "verify --all in {:.1} s (budget {} s), peak RSS {} MiB (budget {} MiB), exit {:?}",
        wall.as_secs_f64(),
        TOTAL_BUDGET.as_secs(),
        rss >> 20,
        MEMORY_BUDGET_BYTES >> 20,
        out.status.code()
    );
    if wall <= TOTAL_BUDGET && rss <= MEMORY_BUDGET_BYTES && out.status.success() {
        println!("criterion 14: PASS  {resources}");
    } else {
        println!("criterion 14: FAIL  {resources}");
        failed.push(14);
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
