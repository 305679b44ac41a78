//! `xlag`: generate exceptional X_m-Laguerre polynomial tables, run the
//! verification suites, inspect roots and spectra.
//!
//! Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage
//! error. Output is deterministic for fixed flags; timing goes to stderr.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;
use xlag_cli::report::Report;
use xlag_cli::{render, suites};
use xlaguerre::exceptional::{xlag, Family};
use xlaguerre::numerics::asymptotics::type3_asymptotics;
use xlaguerre::numerics::interlacing::interlacing_check;
use xlaguerre::spectral::{classify, spectrum, OperatorTag};

#[derive(Parser)]
#[command(
    name = "xlag",
    about = "Exceptional X_m-Laguerre polynomials: exact tables and verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[allow(clippy::upper_case_acronyms)]
enum FamilyArg {
    #[value(name = "I", alias = "i", alias = "1")]
    I,
    #[value(name = "II", alias = "ii", alias = "2")]
    II,
    #[value(name = "III", alias = "iii", alias = "3")]
    III,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::I => Family::TypeI,
            FamilyArg::II => Family::TypeII,
            FamilyArg::III => Family::TypeIII,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Inclusive `lo..hi` range; a bare number means a single value.
#[derive(Clone, Copy, Debug)]
struct RangeArg {
    lo: u32,
    hi: u32,
}

impl FromStr for RangeArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (
                lo.parse().map_err(|e| format!("bad range start: {e}"))?,
                hi.parse().map_err(|e| format!("bad range end: {e}"))?,
            ),
            None => {
                let v = s.parse().map_err(|e| format!("bad value: {e}"))?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(RangeArg { lo, hi })
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long)]
    json: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }

    fn emit(&self, body: &str) -> std::io::Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, body),
            None => std::io::stdout().write_all(body.as_bytes()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print exceptional polynomials with exact symbolic coefficients.
    Gen {
        /// Family: I, II or III.
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        m: u32,
        /// Degree or inclusive degree range `lo..hi`.
        #[arg(long)]
        n: RangeArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = ["appendix", "identities", "norms", "gram", "spectral", "all"])]
        suite: String,
        /// Codimension range `lo..hi`.
        #[arg(long)]
        m: Option<RangeArg>,
        /// Degree-offset range `lo..hi` for the identity suites.
        #[arg(long)]
        k: Option<RangeArg>,
        /// Largest degree offset above m for norm/Gram checks.
        #[arg(long)]
        nmax: Option<u32>,
        /// Restrict to one family.
        #[arg(long)]
        family: Option<FamilyArg>,
        /// Comma-separated numeric alpha values.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Option<Vec<f64>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Shorthand for `verify --suite norms`.
    Norms {
        #[arg(long)]
        m: Option<RangeArg>,
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long)]
        family: Option<FamilyArg>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Option<Vec<f64>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Type III root report: interlacing verdicts and optional asymptotics.
    Roots {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        /// Comma-separated k list for the asymptotics table.
        #[arg(long, value_delimiter = ',')]
        asymptotics: Option<Vec<u32>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Endpoint classification, deficiency index, boundary condition and
    /// spectrum of one of the operators T_I, T_II, T_III, S_I.
    Spectral {
        #[arg(long)]
        op: String,
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 8)]
        cutoff: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = std::time::Instant::now();
    let code = match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    eprintln!("elapsed: {:.2?}", started.elapsed());
    code
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Gen {
            family,
            m,
            n,
            output,
        } => cmd_gen(family.into(), m, n, &output),
        Command::Verify {
            suite,
            m,
            k,
            nmax,
            family,
            alpha,
            output,
        } => cmd_verify(&suite, m, k, nmax, family.map(Into::into), alpha, &output),
        Command::Norms {
            m,
            nmax,
            family,
            alpha,
            output,
        } => cmd_verify(
            "norms",
            m,
            None,
            nmax,
            family.map(Into::into),
            alpha,
            &output,
        ),
        Command::Roots {
            m,
            k,
            alpha,
            asymptotics,
            output,
        } => cmd_roots(m, k, alpha, asymptotics, &output),
        Command::Spectral {
            op,
            m,
            alpha,
            cutoff,
            output,
        } => cmd_spectral(&op, m, alpha, cutoff, &output),
    }
}

fn cmd_gen(family: Family, m: u32, n: RangeArg, output: &OutputArgs) -> Result<bool, String> {
    // reject inadmissible degrees up front (usage error, exit 2)
    let mut degrees = Vec::new();
    for deg in n.lo..=n.hi {
        if !family.degree_admissible(m, deg) {
            if n.lo == n.hi {
                return Err(format!(
                    "degree {deg} excluded for {} with m = {m}",
                    family.label()
                ));
            }
            continue;
        }
        degrees.push(deg);
    }
    if degrees.is_empty() {
        return Err(format!(
            "no admissible degrees in {}..{} for {} with m = {m}",
            n.lo,
            n.hi,
            family.label()
        ));
    }
    let entries: Vec<(u32, xlaguerre::XPoly)> = degrees
        .iter()
        .map(|&deg| xlag(family, m, deg).map(|p| (deg, p)))
        .collect::<xlaguerre::Result<_>>()
        .map_err(|e| format!("{e}"))?;

    let body = match output.format() {
        Format::Text => {
            let mut s = String::new();
            for (deg, p) in &entries {
                s.push_str(&format!(
                    "L[{},{}]^({}): {}\n",
                    m,
                    deg,
                    family_tag(family),
                    render::xpoly_text(p)
                ));
            }
            s
        }
        Format::Json => {
            let json = serde_json::json!({
                "command": "gen",
                "family": family_tag(family),
                "m": m,
                "entries": entries.iter().map(|(deg, p)| serde_json::json!({
                    "n": deg,
                    "coefficients": render::xpoly_json(p),
                })).collect::<Vec<_>>(),
            });
            let mut s = serde_json::to_string_pretty(&json).expect("serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("m,n,xpow,coeffs\n");
            for (deg, p) in &entries {
                for row in render::xpoly_csv_rows(m, *deg, p) {
                    s.push_str(&row);
                    s.push('\n');
                }
            }
            s
        }
    };
    output.emit(&body).map_err(|e| format!("{e}"))?;
    Ok(true)
}

fn family_tag(family: Family) -> &'static str {
    match family {
        Family::TypeI => "I",
        Family::TypeII => "II",
        Family::TypeIII => "III",
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    m: Option<RangeArg>,
    k: Option<RangeArg>,
    nmax: Option<u32>,
    family: Option<Family>,
    alpha: Option<Vec<f64>>,
    output: &OutputArgs,
) -> Result<bool, String> {
    let mut params = suites::SuiteParams::default();
    if let Some(m) = m {
        params.m_range = (m.lo, m.hi);
    }
    if let Some(k) = k {
        if k.lo < 1 {
            return Err("k must start at 1".into());
        }
        params.k_range = (k.lo, k.hi);
    }
    if let Some(nmax) = nmax {
        params.nmax_offset = nmax;
    }
    params.family = family;
    params.alphas = alpha;

    let checks = suites::run_suite(suite, &params);
    let mut parameters = BTreeMap::new();
    parameters.insert("suite".to_string(), suite.to_string());
    parameters.insert(
        "m".to_string(),
        format!("{}..{}", params.m_range.0, params.m_range.1),
    );
    parameters.insert(
        "k".to_string(),
        format!("{}..{}", params.k_range.0, params.k_range.1),
    );
    parameters.insert("nmax".to_string(), params.nmax_offset.to_string());
    if let Some(f) = params.family {
        parameters.insert("family".to_string(), family_tag(f).to_string());
    }
    if let Some(a) = &params.alphas {
        parameters.insert(
            "alpha".to_string(),
            a.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
    }
    let report = Report::new("verify", parameters, checks);
    emit_report(&report, output)?;
    Ok(report.all_passed())
}

fn emit_report(report: &Report, output: &OutputArgs) -> Result<(), String> {
    let body = match output.format() {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    output.emit(&body).map_err(|e| format!("{e}"))
}

fn cmd_roots(
    m: u32,
    k: u32,
    alpha: f64,
    asymptotics: Option<Vec<u32>>,
    output: &OutputArgs,
) -> Result<bool, String> {
    if !(-1.0 < alpha && alpha < 0.0) {
        return Err(format!("roots requires -1 < alpha < 0, got {alpha}"));
    }
    if m < 1 || k < 1 {
        return Err("roots requires m >= 1 and k >= 1".into());
    }
    let report = interlacing_check(m, k, alpha).map_err(|e| format!("{e}"))?;
    let asym = match &asymptotics {
        Some(ks) => {
            if ks.len() < 2 || ks.windows(2).any(|w| w[1] <= w[0]) {
                return Err(
                    "asymptotics k list must be increasing with at least two entries".into(),
                );
            }
            Some(type3_asymptotics(m, alpha, ks).map_err(|e| format!("{e}"))?)
        }
        None => None,
    };

    let pass = report.pass
        && asym
            .as_ref()
            .is_none_or(|a| a.distances_decreasing && a.first_root_decreasing);

    let body = match output.format() {
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "Type III roots: m={m} k={k} alpha={alpha}\n  positive: {:?}\n  negative: {:?}\n  reference positive (L_(k-1)^(a+1)): {:?}\n  reference negative (L_m^(-a-1)(-x)): {:?}\n  verdict: {}\n",
                report.positive_roots,
                report.negative_roots,
                report.reference_pos,
                report.reference_neg,
                if report.pass { "pass" } else { "FAIL" }
            ));
            if let Some(a) = &asym {
                s.push_str("asymptotics:\n");
                for row in &a.rows {
                    s.push_str(&format!(
                        "  k={:<5} first_positive={:.8} distances={:?}\n",
                        row.k, row.first_positive_root, row.distances
                    ));
                }
                s.push_str(&format!(
                    "  distances decreasing: {}\n  first positive root decreasing: {}\n",
                    a.distances_decreasing, a.first_root_decreasing
                ));
            }
            s
        }
        Format::Json => {
            let mut json = serde_json::json!({
                "command": "roots",
                "m": m,
                "k": k,
                "alpha": alpha,
                "positive_roots": report.positive_roots,
                "negative_roots": report.negative_roots,
                "reference_pos": report.reference_pos,
                "reference_neg": report.reference_neg,
                "interval_flags": report.interval_flags,
                "counts_ok": report.counts_ok,
                "verdict": if report.pass { "pass" } else { "fail" },
            });
            if let Some(a) = &asym {
                json["asymptotics"] = serde_json::json!({
                    "rows": a.rows.iter().map(|r| serde_json::json!({
                        "k": r.k,
                        "first_positive_root": r.first_positive_root,
                        "distances": r.distances,
                    })).collect::<Vec<_>>(),
                    "distances_decreasing": a.distances_decreasing,
                    "first_root_decreasing": a.first_root_decreasing,
                });
            }
            let mut s = serde_json::to_string_pretty(&json).expect("serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("kind,index,value\n");
            for (i, r) in report.positive_roots.iter().enumerate() {
                s.push_str(&format!("positive,{},{}\n", i + 1, r));
            }
            for (i, r) in report.negative_roots.iter().enumerate() {
                s.push_str(&format!("negative,{},{}\n", i + 1, r));
            }
            for (i, r) in report.reference_pos.iter().enumerate() {
                s.push_str(&format!("reference_pos,{},{}\n", i + 1, r));
            }
            for (i, r) in report.reference_neg.iter().enumerate() {
                s.push_str(&format!("reference_neg,{},{}\n", i + 1, r));
            }
            s.push_str(&format!(
                "verdict,0,{}\n",
                if report.pass { "pass" } else { "fail" }
            ));
            s
        }
    };
    output.emit(&body).map_err(|e| format!("{e}"))?;
    Ok(pass)
}

fn cmd_spectral(
    op: &str,
    m: u32,
    alpha: f64,
    cutoff: usize,
    output: &OutputArgs,
) -> Result<bool, String> {
    let tag = match op {
        "T_I" | "t_i" | "TI" => OperatorTag::TI,
        "T_II" | "t_ii" | "TII" => OperatorTag::TII,
        "T_III" | "t_iii" | "TIII" => OperatorTag::TIII,
        "S_I" | "s_i" | "SI" => OperatorTag::SI,
        other => {
            return Err(format!(
                "unknown operator {other}; use T_I, T_II, T_III or S_I"
            ))
        }
    };
    let spec = spectrum(tag, m, alpha, cutoff).map_err(|e| format!("{e}"))?;
    let classification = classify(tag.family(), m, alpha).map_err(|e| format!("{e}"))?;

    let body = match output.format() {
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "operator {} (m={m}, alpha={alpha})\n  endpoint 0: {}\n  endpoint infinity: {}\n  deficiency index: ({}, {})\n  boundary condition: {}\n  spectrum ({}):\n",
                tag.label(),
                classification.at_zero.label(),
                classification.at_infinity.label(),
                classification.deficiency.0,
                classification.deficiency.1,
                spec.boundary_condition.text(),
                spec.description
            ));
            for e in &spec.entries {
                s.push_str(&format!("    n={:<4} lambda={}\n", e.degree, e.eigenvalue));
            }
            s
        }
        Format::Json => {
            let json = serde_json::json!({
                "command": "spectral",
                "operator": tag.label(),
                "m": m,
                "alpha": alpha,
                "endpoint_zero": classification.at_zero.label(),
                "endpoint_infinity": classification.at_infinity.label(),
                "deficiency_index": [classification.deficiency.0, classification.deficiency.1],
                "boundary_condition": spec.boundary_condition.text(),
                "spectrum": spec.entries.iter().map(|e| serde_json::json!({
                    "degree": e.degree,
                    "eigenvalue": e.eigenvalue,
                })).collect::<Vec<_>>(),
            });
            let mut s = serde_json::to_string_pretty(&json).expect("serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("degree,eigenvalue\n");
            for e in &spec.entries {
                s.push_str(&format!("{},{}\n", e.degree, e.eigenvalue));
            }
            s
        }
    };
    output.emit(&body).map_err(|e| format!("{e}"))?;

    // a self-check: the listed eigenvalues must match the closed-form map
    let consistent = spec.entries.iter().all(|e| {
        let expect = match tag {
            OperatorTag::TI | OperatorTag::TII => (e.degree - m) as f64,
            OperatorTag::TIII => e.degree as f64 - m as f64 + alpha,
            OperatorTag::SI => e.degree as f64 - m as f64 - alpha,
        };
        (e.eigenvalue - expect).abs() < 1e-12
    });
    Ok(consistent)
}
