mod common;

use std::process::{Command, Output};

use common::*;
use nalgebra::DMatrix;
use ptalg::algebra::{mul_table, AlgebraContext, MulTable};
use ptalg::induced::SpectralReport;
use ptalg::irreps::{IrrepKind, IrrepRecord, StructureReport};
use ptalg::report::CheckReport;
use ptalg::symgroup::Permutation;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn ptalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptalg"))
        .args(args)
        .env_remove("PTALG_CAP")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = ptalg(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json<T: DeserializeOwned + Serialize>(args: &[&str]) -> T {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let text = stdout(&full);
    let value: T = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text, "round trip of {args:?}");
    value
}

fn image(r: &IrrepRecord, sigma: &str) -> DMatrix<f64> {
    DMatrix::from_row_slice(r.dimension, r.dimension, &r.images[sigma])
}

#[test]
fn three_factor_table_text() {
    let text = stdout(&["mul-table", "--n", "3", "--symbolic"]);
    let rows: Vec<Vec<&str>> = text.lines().skip(2).map(|l| l.split_whitespace().skip(1).collect()).collect();
    assert_eq!(rows.len(), 6);
    for (i, row) in rows.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let printed = if TABLE_3[i][j] == "(32)^t" { "(23)^t" } else { TABLE_3[i][j] };
            assert_eq!(*cell, printed, "{i},{j}");
        }
    }
    assert_eq!(stdout(&["mul-table", "3"]), text);
}

#[test]
fn fixed_d_table_substitutes() {
    let symbolic: MulTable = json(&["mul-table", "3"]);
    let fixed: MulTable = json(&["mul-table", "3", "--d", "2"]);
    for (rs, rf) in symbolic.cells.iter().zip(&fixed.cells) {
        for (cs, cf) in rs.iter().zip(rf) {
            assert_eq!(cs.text.replace('d', "2"), cf.text);
        }
    }
    assert_eq!(symbolic, mul_table(AlgebraContext::symbolic(3).unwrap()).unwrap());
}

#[test]
fn two_factor_table() {
    let t: MulTable = json(&["mul-table", "--n", "2"]);
    assert_eq!(t.cells[1][1].text, "d(12)^t");
}

#[test]
fn table_csv() {
    let text = stdout(&["mul-table", "3", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 6);
    assert!(records.iter().all(|r| r.len() == 7));
    assert!(records.iter().any(|r| r.iter().any(|f| f == "d(23)^t")));
}

#[test]
fn spectra() {
    let r: SpectralReport = json(&["spectrum", "--n", "4", "--d", "2", "--alpha", "1,1"]);
    let pairs: Vec<(f64, usize)> = r.eigenpairs.iter().map(|e| (e.lambda, e.multiplicity)).collect();
    assert_eq!(pairs, vec![(3.0, 2), (0.0, 1)]);
    assert_eq!(r.rank, 2);

    let r: SpectralReport = json(&["spectrum", "3", "5", "--alpha", "1"]);
    let mut lambdas: Vec<f64> = r.eigenpairs.iter().map(|e| e.lambda).collect();
    lambdas.sort_by(f64::total_cmp);
    assert_eq!(lambdas, vec![4.0, 6.0]);

    let r: SpectralReport = json(&["spectrum", "4", "3", "--alpha", "2"]);
    let mut pairs: Vec<(f64, usize)> = r.eigenpairs.iter().map(|e| (e.lambda, e.multiplicity)).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    assert_eq!(pairs, vec![(2.0, 2), (5.0, 1)]);
}

#[test]
fn spectrum_csv_lists_eigenvalues() {
    let text = stdout(&["spectrum", "4", "2", "--alpha", "1,1", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(reader.headers().unwrap().iter().collect::<Vec<_>>(), ["nu", "lambda", "multiplicity", "null"]);
    let nulls: Vec<String> = reader.records().map(|r| r.unwrap()[3].to_string()).collect();
    assert_eq!(nulls, ["false", "true"]);
}

#[test]
fn three_factor_dual_basis_irrep() {
    let r: IrrepRecord = json(&["irrep", "3", "4", "--alpha", "1", "--basis", "e"]);
    assert_eq!(r.kind, IrrepKind::M);
    for s in TABLE_3_ORDER {
        let printed = conjugate(&three_dual(s, 4.0), &swap2());
        assert!(max_diff(&image(&r, s), &printed) < 1e-9, "{s}");
    }
}

#[test]
fn four_factor_dual_basis_irrep() {
    let r: IrrepRecord = json(&["irrep", "--n", "4", "--d", "4", "--alpha", "2", "--basis", "e"]);
    assert_eq!(r.dimension, 3);
    for s in ["id", "(12)", "(123)", "(14)", "(24)", "(34)"] {
        let sigma = Permutation::parse_cycles(s, 4).unwrap();
        assert!(max_diff(&image(&r, s), &four_dual("2", &sigma, 4.0)) < 1e-9, "{s}");
    }
}

#[test]
fn semi_trivial_sign_irrep() {
    let r: IrrepRecord = json(&["irrep", "3", "3", "--nu", "1,1"]);
    assert_eq!(r.kind, IrrepKind::S);
    for s in TABLE_3_ORDER {
        assert_eq!(r.images[s], vec![three_semi("1,1", s)], "{s}");
    }
}

#[test]
fn structure_json() {
    let r: StructureReport = json(&["structure", "4", "2", "--oracle"]);
    assert_eq!((r.dim_total, r.oracle_dim), (14, Some(14)));
    let r: StructureReport = json(&["structure", "3", "2"]);
    assert_eq!((r.dim_m, r.dim_s, r.oracle_dim), (4, 1, None));
}

#[test]
fn verify_passes_and_round_trips() {
    let out = ptalg(&["verify", "3", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<CheckReport> = json(&["verify", "4", "2", "--suite", "dims"]);
    assert!(reports.iter().all(|r| r.pass));
    assert!(reports.iter().any(|r| r.details.iter().any(|d| d.contains("span V = 14"))));
    let reports: Vec<CheckReport> = json(&["verify", "4", "3", "--suite", "spectra"]);
    assert!(!reports.is_empty() && reports.iter().all(|r| r.pass && !r.skipped));
}

#[test]
fn exit_code_counts_failures() {
    let out = ptalg(&["verify", "3", "2", "--suite", "irreps", "--tol", "1e-300"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let failed = text.lines().filter(|l| l.starts_with("FAIL")).count();
    assert!(failed > 0);
    assert_eq!(out.status.code(), Some(failed as i32));
}

#[test]
fn cap_from_environment_skips() {
    let out = Command::new(env!("CARGO_BIN_EXE_ptalg"))
        .args(["verify", "4", "3", "--suite", "mul", "--format", "json"])
        .env("PTALG_CAP", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<CheckReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports.iter().all(|r| r.skipped));
    let flag = ptalg(&["verify", "4", "3", "--suite", "mul", "--cap", "16"]);
    assert!(String::from_utf8(flag.stdout).unwrap().starts_with("SKIP"));
}

#[test]
fn bad_invocations_fail() {
    for args in [
        &["mul-table", "3", "--symbolic", "--d", "2"][..],
        &["spectrum", "3", "5", "--alpha", "2"],
        &["spectrum", "1", "2", "--alpha", "1"],
        &["verify", "3", "2", "--tol", "0"],
        &["verify", "3", "2", "--suite", "nope"],
        &["irrep", "3", "2", "--alpha", "1", "--nu", "2"],
        &["mul-table", "7"],
    ] {
        let out = ptalg(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
