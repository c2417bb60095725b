//! The `ptalg` command line: multiplication tables, spectra of `Q(α)`,
//! irreps, block structure and the verification suites.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{mul_table, table_order, AlgebraContext, MulTable};
use crate::error::{Error, Result};
use crate::induced::{SpectralQ, SpectralReport};
use crate::irreps::{irrep_m, irrep_s, structure_report, Basis, IrrepRecord, StructureReport};
use crate::oracle::{run_suite, Suite, DEFAULT_CAP, ORACLE_TOLERANCE};
use crate::report::CheckReport;
use crate::symgroup::{Partition, Permutation};

/// Environment variable holding the default oracle size cap.
pub const CAP_ENV: &str = "PTALG_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "ptalg", version, about = "The algebra of partially transposed permutation operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Tolerance of the oracle comparisons of irreps.
    #[arg(long, global = true, value_parser = positive_float)]
    pub tol: Option<f64>,

    /// Largest d^n for which dense operators are built.
    #[arg(long, global = true, env = CAP_ENV, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generator products, row times column.
    MulTable {
        #[command(flatten)]
        size: Size,
        /// Keep d as a symbol (the default without --d).
        #[arg(long, conflicts_with = "d")]
        symbolic: bool,
    },
    /// Q(α) with its closed-form spectrum.
    Spectrum {
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        alpha: Partition,
    },
    /// Generator images of one irrep: kind M with --alpha, kind S with --nu.
    Irrep {
        #[command(flatten)]
        size: Size,
        #[arg(long, conflicts_with = "nu", required_unless_present = "nu")]
        alpha: Option<Partition>,
        #[arg(long)]
        nu: Option<Partition>,
        #[arg(long, default_value = "f")]
        basis: Basis,
    },
    /// Block sizes and dimension identities.
    Structure {
        #[command(flatten)]
        size: Size,
        /// Also measure the span of the generators as operators.
        #[arg(long)]
        oracle: bool,
    },
    /// Run verification suites; the exit code is the number of failures.
    Verify {
        #[command(flatten)]
        size: Size,
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

/// `n` and `d`, as flags or positionally.
#[derive(Debug, Args)]
pub struct Size {
    #[arg(long = "n", id = "n", value_name = "N")]
    n_flag: Option<usize>,
    #[arg(long = "d", id = "d", value_name = "D")]
    d_flag: Option<u32>,
    #[arg(value_name = "N_POS", conflicts_with = "n")]
    n_pos: Option<usize>,
    #[arg(value_name = "D_POS", conflicts_with = "d")]
    d_pos: Option<u32>,
}

impl Size {
    fn n(&self) -> Result<usize> {
        let n = self
            .n_flag
            .or(self.n_pos)
            .ok_or_else(|| Error::InvalidArgument("n is required".into()))?;
        if n < 2 {
            return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
        }
        Ok(n)
    }

    fn d_opt(&self) -> Result<Option<u32>> {
        match self.d_flag.or(self.d_pos) {
            Some(0) => Err(Error::InvalidArgument("d must be at least 1".into())),
            d => Ok(d),
        }
    }

    fn d(&self) -> Result<u32> {
        self.d_opt()?
            .ok_or_else(|| Error::InvalidArgument("d is required (symbolic d is only for mul-table)".into()))
    }
}

fn positive_float(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

/// Rendered output and the number of failed checks.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub failures: usize,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> std::result::Result<Result<Outcome>, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args).map(|cli| run(&cli))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let ok = |output| Outcome { output, failures: 0 };
    match &cli.command {
        Command::MulTable { size, symbolic } => {
            let n = size.n()?;
            let ctx = match (size.d_opt()?, symbolic) {
                (Some(d), false) => AlgebraContext::fixed(n, d)?,
                _ => AlgebraContext::symbolic(n)?,
            };
            let table = mul_table(ctx)?;
            Ok(ok(render(cli.format, &table, text_table, csv_table)?))
        }
        Command::Spectrum { size, alpha } => {
            let n = size.n()?;
            if alpha.weight() + 2 != n {
                return Err(Error::InvalidArgument(format!("{alpha} is not a partition of n-2 = {}", n - 2)));
            }
            let report = SpectralQ::new(alpha, size.d()?)?.report();
            Ok(ok(render(cli.format, &report, text_spectrum, csv_spectrum)?))
        }
        Command::Irrep {
            size,
            alpha,
            nu,
            basis,
        } => {
            let (n, d) = (size.n()?, size.d()?);
            let irrep = match (alpha, nu) {
                (Some(a), _) => irrep_m(a, d, n, *basis)?,
                (None, Some(v)) => irrep_s(v, d, n)?,
                (None, None) => return Err(Error::InvalidArgument("give --alpha or --nu".into())),
            };
            Ok(ok(render(cli.format, &irrep.record(), text_irrep, csv_irrep)?))
        }
        Command::Structure { size, oracle } => {
            let report = structure_report(size.n()?, size.d()?, oracle.then_some(cli.cap))?;
            let failures = usize::from(!report.consistent());
            let output = render(cli.format, &report, text_structure, csv_structure)?;
            Ok(Outcome { output, failures })
        }
        Command::Verify { size, suite } => {
            let tol = cli.tol.unwrap_or(ORACLE_TOLERANCE);
            let reports = run_suite(*suite, size.n()?, size.d()?, cli.cap, tol)?;
            let failures = reports.iter().filter(|r| !r.pass).count();
            let output = render(cli.format, &reports, text_reports, csv_reports)?;
            Ok(Outcome { output, failures })
        }
    }
}

fn render<T: Serialize>(
    format: Format,
    value: &T,
    text: fn(&T) -> String,
    csv: fn(&T, &mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
) -> Result<String> {
    match format {
        Format::Text => Ok(text(value)),
        Format::Json => serde_json::to_string_pretty(value)
            .map(|s| s + "\n")
            .map_err(|e| Error::Numerical(e.to_string())),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            csv(value, &mut w).map_err(|e| Error::Numerical(e.to_string()))?;
            let bytes = w.into_inner().map_err(|e| Error::Numerical(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Numerical(e.to_string()))
        }
    }
}

fn label(cycle: &str) -> String {
    if cycle == "id" { "1".into() } else { format!("{cycle}^t") }
}

fn text_table(t: &MulTable) -> String {
    let mut rows = vec![std::iter::once("o".to_string()).chain(t.order.iter().map(|c| label(c))).collect::<Vec<_>>()];
    for (c, row) in t.order.iter().zip(&t.cells) {
        rows.push(std::iter::once(label(c)).chain(row.iter().map(|x| x.text.clone())).collect());
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|k| rows.iter().map(|r| r[k].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (i, r) in rows.iter().enumerate() {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        if i == 0 {
            let _ = writeln!(out, "{}", "-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1)));
        }
    }
    out
}

fn csv_table(t: &MulTable, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
    w.write_record(std::iter::once("o".to_string()).chain(t.order.iter().map(|c| label(c))))?;
    for (c, row) in t.order.iter().zip(&t.cells) {
        w.write_record(std::iter::once(label(c)).chain(row.iter().map(|x| x.text.clone())))?;
    }
    Ok(())
}

fn format_number(v: f64) -> String {
    let r = v.round();
    if (v - r).abs() < 1e-12 {
        format!("{}", r as i64)
    } else {
        format!("{v:.6}")
    }
}

fn text_spectrum(r: &SpectralReport) -> String {
    let mut out = format!("Q({}) at d = {}\n", r.alpha, r.d);
    for row in &r.matrix {
        let cells: Vec<String> = row.iter().map(|v| format!("{:>10}", format_number(*v))).collect();
        let _ = writeln!(out, "{}", cells.join(""));
    }
    let _ = writeln!(out, "eigenvalues:");
    for e in &r.eigenpairs {
        let _ = writeln!(out, "  nu = ({})  lambda = {}  multiplicity {}", e.nu, format_number(e.lambda), e.multiplicity);
    }
    let _ = writeln!(out, "rank {}", r.rank);
    if let Some(t) = &r.theta {
        let _ = writeln!(out, "null block theta = ({t})");
    }
    out
}

fn csv_spectrum(r: &SpectralReport, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
    w.write_record(["nu", "lambda", "multiplicity", "null"])?;
    for e in &r.eigenpairs {
        let null = r.theta.as_ref() == Some(&e.nu);
        w.write_record([e.nu.to_string(), format_number(e.lambda), e.multiplicity.to_string(), null.to_string()])?;
    }
    Ok(())
}

fn sorted_images(r: &IrrepRecord) -> Vec<(&String, &Vec<f64>)> {
    let order = table_order(r.n);
    let mut images: Vec<(&String, &Vec<f64>)> = r.images.iter().collect();
    images.sort_by_key(|(k, _)| {
        Permutation::parse_cycles(k, r.n)
            .ok()
            .and_then(|p| order.iter().position(|q| *q == p))
    });
    images
}

fn text_irrep(r: &IrrepRecord) -> String {
    let basis = r.basis_tag.map_or(String::new(), |b| format!(", {} basis", format!("{b:?}").to_lowercase()));
    let mut out = format!(
        "kind {:?} irrep ({}) at n = {}, d = {}: dimension {}{basis}\n",
        r.kind, r.label, r.n, r.d, r.dimension
    );
    for (k, v) in sorted_images(r) {
        let _ = writeln!(out, "{}", label(k));
        for row in v.chunks(r.dimension.max(1)) {
            let cells: Vec<String> = row.iter().map(|x| format!("{:>12}", format_number(*x))).collect();
            let _ = writeln!(out, "{}", cells.join(""));
        }
    }
    out
}

fn csv_irrep(r: &IrrepRecord, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
    w.write_record(["perm", "row", "col", "value"])?;
    for (k, v) in sorted_images(r) {
        for (idx, x) in v.iter().enumerate() {
            let (i, j) = (idx / r.dimension + 1, idx % r.dimension + 1);
            w.write_record([k.clone(), i.to_string(), j.to_string(), x.to_string()])?;
        }
    }
    Ok(())
}

fn text_structure(r: &StructureReport) -> String {
    let mut out = format!("n = {}, d = {}\n", r.n, r.d);
    for b in &r.m_blocks {
        let _ = writeln!(out, "  M  alpha = ({})  size {}", b.alpha, b.rank);
    }
    for b in &r.s_blocks {
        let _ = writeln!(out, "  S  nu = ({})  size {}", b.nu, b.dimension);
    }
    let _ = writeln!(out, "dim M = {}, dim S = {}, total {}", r.dim_m, r.dim_s, r.dim_total);
    let _ = writeln!(out, "partition sum {}", r.expected_total);
    if let Some(o) = r.oracle_dim {
        let _ = writeln!(out, "oracle span {o}");
    }
    let _ = writeln!(out, "{}", if r.consistent() { "consistent" } else { "INCONSISTENT" });
    out
}

fn csv_structure(r: &StructureReport, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
    w.write_record(["kind", "label", "size"])?;
    for b in &r.m_blocks {
        w.write_record(["M".to_string(), b.alpha.to_string(), b.rank.to_string()])?;
    }
    for b in &r.s_blocks {
        w.write_record(["S".to_string(), b.nu.to_string(), b.dimension.to_string()])?;
    }
    w.write_record(["total".to_string(), String::new(), r.dim_total.to_string()])?;
    w.write_record(["expected".to_string(), String::new(), r.expected_total.to_string()])?;
    if let Some(o) = r.oracle_dim {
        w.write_record(["oracle".to_string(), String::new(), o.to_string()])?;
    }
    Ok(())
}

fn text_reports(reports: &Vec<CheckReport>) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{}", r.summary());
        for d in &r.details {
            let _ = writeln!(out, "    {d}");
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let _ = writeln!(out, "{} checks, {failed} failed", reports.len());
    out
}

fn csv_reports(reports: &Vec<CheckReport>, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
    w.write_record(["check", "params", "pass", "skipped", "max_residual", "details"])?;
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        w.write_record([
            r.check.clone(),
            params.join(" "),
            r.pass.to_string(),
            r.skipped.to_string(),
            format!("{:e}", r.max_residual),
            r.details.join("; "),
        ])?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> Outcome {
        let mut full = vec!["ptalg"];
        full.extend_from_slice(args);
        run_args(full).unwrap().unwrap()
    }

    #[test]
    fn table_text() {
        let out = run_ok(&["mul-table", "--n", "3", "--symbolic"]).output;
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[0].starts_with("o "));
        assert!(lines[3].contains("d(23)^t"), "{out}");
        assert_eq!(lines.len(), 8);
    }

    #[test]
    fn positional_size() {
        let a = run_ok(&["structure", "4", "2"]);
        let b = run_ok(&["structure", "--n", "4", "--d", "2"]);
        assert_eq!(a, b);
    }

    #[test]
    fn bad_arguments() {
        assert!(run_args(["ptalg", "spectrum", "--n", "3", "--d", "2"]).is_err());
        assert!(run_args(["ptalg", "verify", "--n", "3", "--d", "2", "--tol", "-1"]).is_err());
        assert!(run_args(["ptalg", "irrep", "--n", "3", "--d", "2"]).is_err());
        assert!(run_args(["ptalg", "spectrum", "--n", "3", "--alpha", "1"]).unwrap().is_err());
        assert!(run_args(["ptalg", "spectrum", "--n", "4", "--d", "2", "--alpha", "1"]).unwrap().is_err());
    }

    #[test]
    fn verify_counts_failures() {
        let o = run_ok(&["verify", "3", "2", "--suite", "dims"]);
        assert_eq!(o.failures, 0);
        assert!(o.output.contains("span V = 5"));
    }
}
