//! `rmf`: command-line access to topological types, Euler characteristics,
//! graph enumeration, strata and catalog sweeps.
//!
//! Exit status: 0 on success, 1 on a domain error, 2 on a usage error, 3 when
//! an enumeration exceeds its work limit.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rmf_core::census::{sweep, CensusRecord, SweepBounds, VariantFilter};
use rmf_core::enumerator::naive::{enum_nonsep_naive, enum_sep_naive};
use rmf_core::{
    canonical_key, chi_compactification, chi_component, chi_cover, chi_w_lambda, chi_w_real,
    enum_nonsep, enum_sep, enumerate_strata, stratum_dim, DecoratedGraph, EnumOptions, Error,
    GammaCount, GammaOrder, TopType, Variant,
};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "rmf",
    version,
    about = "Invariants of spaces of real meromorphic functions"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a type and whether it exists.
    Validate { ty: TopType },
    /// Dimension of the component.
    Dim { ty: TopType },
    /// Euler characteristic of the component.
    ChiH { ty: TopType },
    /// Euler characteristic of the compactification.
    ChiN {
        ty: TopType,
        #[command(flatten)]
        enumeration: EnumFlags,
    },
    /// List the graphs counted by the compactification's characteristic.
    Graphs {
        ty: TopType,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        /// Use the brute-force enumerator.
        #[arg(long)]
        naive: bool,
        #[command(flatten)]
        enumeration: EnumFlags,
    },
    /// Strata of the space of real unordered m-tuples.
    Strata { m: u32 },
    /// Check the alternating cell-count identities up to s.
    VerifyCells {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=24))]
        max_s: u32,
    },
    /// Sweep all types within bounds and write one record per type.
    Catalog(CatalogArgs),
}

#[derive(Args, Clone, Copy)]
struct EnumFlags {
    /// Count underlying graphs admitting some gamma instead of (graph, gamma)
    /// pairs.
    #[arg(long)]
    gamma_existence: bool,
    /// Allow gamma of any order, not only involutions.
    #[arg(long)]
    gamma_any_order: bool,
    /// Enumerate even where a closed form applies.
    #[arg(long)]
    no_shortcircuit: bool,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    g_max: u32,
    #[arg(long)]
    n_max: u32,
    #[arg(long)]
    abs_i_max: u32,
    /// Restrict to one variant.
    #[arg(long, value_enum)]
    eps: Option<EpsFilter>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CatalogFormat::Jsonl)]
    format: CatalogFormat,
    /// Worker threads; all cores when absent.
    #[arg(long)]
    jobs: Option<usize>,
    /// Include candidate types that do not exist.
    #[arg(long)]
    all: bool,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum CatalogFormat {
    Jsonl,
    Csv,
}

#[derive(ValueEnum, Clone, Copy)]
enum EpsFilter {
    #[value(name = "0")]
    NonSep,
    #[value(name = "1")]
    Sep,
    #[value(name = "ext")]
    Ext,
}

enum Failure {
    Domain(String),
    Usage(String),
    WorkLimit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::WorkLimit { .. } => Failure::WorkLimit(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(format!("i/o: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Domain(m) => (1, m),
                Failure::Usage(m) => (2, m),
                Failure::WorkLimit(m) => (3, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn enum_options(flags: &EnumFlags) -> Result<EnumOptions, Failure> {
    let mut opts = EnumOptions::from_env().map_err(|e| Failure::Usage(e.to_string()))?;
    if flags.gamma_existence {
        opts.gamma_count = GammaCount::Existence;
    }
    if flags.gamma_any_order {
        opts.gamma_order = GammaOrder::Any;
    }
    if flags.no_shortcircuit {
        opts.shortcircuit = false;
    }
    Ok(opts)
}

fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Validate { ty } => validate(&ty, json, out),
        Command::Dim { ty } => {
            let dim = ty.dimension()?;
            if json {
                writeln!(out, "{}", json!({ "type": ty, "dim": dim }))?;
            } else {
                writeln!(out, "dim={dim}")?;
            }
            Ok(())
        }
        Command::ChiH { ty } => print_chi(chi_component(&ty)?, json, out),
        Command::ChiN { ty, enumeration } => {
            let opts = enum_options(&enumeration)?;
            print_chi(chi_compactification(&ty, &opts)?, json, out)
        }
        Command::Graphs {
            ty,
            format,
            naive,
            enumeration,
        } => graphs(&ty, format, naive, &enum_options(&enumeration)?, out),
        Command::Strata { m } => strata(m, json, out),
        Command::VerifyCells { max_s } => verify_cells(max_s, json, out),
        Command::Catalog(args) => catalog(&args, out),
    }
}

fn validate(ty: &TopType, json: bool, out: &mut dyn Write) -> Outcome {
    let report = ty.exists();
    let extension = report.exists && ty.variant() == Variant::Sep && ty.admits_extension();
    if json {
        let mut v = json!({ "type": ty, "exists": report.exists, "violated": report.violated });
        if extension {
            v["xi_max"] = json!(ty.xi_bound());
        }
        writeln!(out, "{v}")?;
    } else if report.exists {
        write!(out, "type={ty} exists=true")?;
        if let Some(h) = ty.xi_bound().filter(|_| extension) {
            write!(out, " admits_extension=true xi_max={h}")?;
        }
        writeln!(out)?;
    }
    if report.exists {
        Ok(())
    } else {
        Err(Error::Nonexistent {
            ty: ty.to_string(),
            violated: report.violated,
        }
        .into())
    }
}

fn print_chi(r: rmf_core::ChiResult, json: bool, out: &mut dyn Write) -> Outcome {
    if json {
        writeln!(out, "{}", serde_json::to_string(&r).expect("serializable"))?;
    } else {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

fn enumerate(ty: &TopType, naive: bool, opts: &EnumOptions) -> Result<Vec<DecoratedGraph>, Error> {
    let mut graphs = match (ty.variant(), naive) {
        (Variant::NonSep, false) => enum_nonsep(ty, opts)?,
        (Variant::NonSep, true) => enum_nonsep_naive(ty, opts)?,
        (_, false) => enum_sep(ty, opts)?,
        (_, true) => {
            if opts.shortcircuit && ty.index_sum().unsigned_abs() == u64::from(ty.n()) {
                // Same refusal as the fast path.
                enum_sep(ty, opts)?;
            }
            enum_sep_naive(ty, opts)?
        }
    };
    graphs.sort_by_cached_key(canonical_key);
    Ok(graphs)
}

fn graphs(
    ty: &TopType,
    format: GraphFormat,
    naive: bool,
    opts: &EnumOptions,
    out: &mut dyn Write,
) -> Outcome {
    let list = enumerate(ty, naive, opts)?;
    // The two gamma counting conventions are both reported when they differ.
    let existence = if ty.variant() == Variant::NonSep && opts.gamma_count == GammaCount::PerGamma {
        let alt = EnumOptions {
            gamma_count: GammaCount::Existence,
            ..*opts
        };
        Some(enumerate(ty, naive, &alt)?.len()).filter(|&c| c != list.len())
    } else {
        None
    };
    match format {
        GraphFormat::Json => {
            let mut doc = json!({
                "count": list.len(),
                "graphs": list.iter().map(DecoratedGraph::to_json_value).collect::<Vec<_>>(),
            });
            if let Some(c) = existence {
                doc["count_gamma_existence"] = json!(c);
            }
            writeln!(out, "{doc}")?;
        }
        GraphFormat::Dot => {
            writeln!(out, "// type={ty} count={}", list.len())?;
            if let Some(c) = existence {
                writeln!(out, "// count_gamma_existence={c}")?;
            }
            for (i, g) in list.iter().enumerate() {
                write!(out, "{}", g.to_dot(&format!("G{i}")))?;
            }
        }
    }
    Ok(())
}

fn strata(m: u32, json: bool, out: &mut dyn Write) -> Outcome {
    let list = enumerate_strata(m);
    if json {
        let rows: Vec<_> = list
            .iter()
            .map(|s| json!({ "p": s.p, "q": s.q, "dim": stratum_dim(s) }))
            .collect();
        writeln!(out, "{}", serde_json::Value::Array(rows))?;
    } else {
        for s in &list {
            writeln!(out, "{s}")?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CellRow {
    s: u32,
    chi_w_real: i64,
    chi_w_lambda: i64,
    /// `chi_cover(r, s)` matches `[r = 0 and s <= 1]` for every `r <= max_s`.
    cover_row_ok: bool,
    pass: bool,
}

fn verify_cells(max_s: u32, json: bool, out: &mut dyn Write) -> Outcome {
    let rows: Vec<CellRow> = (0..=max_s)
        .map(|s| {
            let real = chi_w_real(s);
            let lambda = chi_w_lambda(s);
            let cover_row_ok = (0..=max_s).all(|r| chi_cover(r, s) == i64::from(r == 0 && s <= 1));
            let pass = real == i64::from(s == 0) && lambda == i64::from(s <= 1) && cover_row_ok;
            CellRow {
                s,
                chi_w_real: real,
                chi_w_lambda: lambda,
                cover_row_ok,
                pass,
            }
        })
        .collect();
    let all = rows.iter().all(|r| r.pass);
    if json {
        writeln!(out, "{}", json!({ "rows": rows, "pass": all }))?;
    } else {
        for r in &rows {
            writeln!(
                out,
                "s={} chi_w_real={} chi_w_lambda={} cover_row={} {}",
                r.s,
                r.chi_w_real,
                r.chi_w_lambda,
                if r.cover_row_ok { "ok" } else { "bad" },
                if r.pass { "PASS" } else { "FAIL" }
            )?;
        }
        writeln!(out, "all={}", if all { "PASS" } else { "FAIL" })?;
    }
    if all {
        Ok(())
    } else {
        Err(Failure::Domain("cell identities failed".into()))
    }
}

/// Flat projection of a record for CSV output.
#[derive(Serialize)]
struct CsvRow<'a> {
    #[serde(rename = "type")]
    ty: String,
    exists: bool,
    dim: Option<u64>,
    chi_h: Option<u64>,
    chi_n: Option<u64>,
    graph_count: Option<u64>,
    route: Option<&'a str>,
    error: Option<&'a str>,
}

fn catalog(args: &CatalogArgs, out: &mut dyn Write) -> Outcome {
    let opts = EnumOptions::from_env().map_err(|e| Failure::Usage(e.to_string()))?;
    let bounds = SweepBounds {
        g_max: args.g_max,
        n_max: args.n_max,
        abs_i_max: args.abs_i_max,
        filter: match args.eps {
            None => VariantFilter::All,
            Some(EpsFilter::NonSep) => VariantFilter::NonSep,
            Some(EpsFilter::Sep) => VariantFilter::Sep,
            Some(EpsFilter::Ext) => VariantFilter::Ext,
        },
        include_missing: args.all,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        if j == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| Failure::Domain(e.to_string()))?;
    let records = pool.install(|| sweep(&bounds, &opts));

    let mut file;
    let sink: &mut dyn Write = match &args.out {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => out,
    };
    write_records(&records, args.format, sink)?;
    sink.flush()?;

    let flagged: Vec<&CensusRecord> = records.iter().filter(|r| r.error.is_some()).collect();
    if let Some(first) = flagged.first() {
        return Err(Failure::WorkLimit(format!(
            "{} record(s) incomplete, first {}: {}",
            flagged.len(),
            first.ty,
            first.error.as_deref().unwrap_or_default()
        )));
    }
    Ok(())
}

fn write_records(records: &[CensusRecord], format: CatalogFormat, sink: &mut dyn Write) -> Outcome {
    match format {
        CatalogFormat::Jsonl => {
            for r in records {
                writeln!(sink, "{}", r.to_json_line())?;
            }
        }
        CatalogFormat::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            for r in records {
                w.serialize(CsvRow {
                    ty: r.ty.to_string(),
                    exists: r.exists,
                    dim: r.dim,
                    chi_h: r.chi_h,
                    chi_n: r.chi_n,
                    graph_count: r.graph_count,
                    route: r.route.as_deref(),
                    error: r.error.as_deref(),
                })
                .map_err(|e| Failure::Domain(format!("csv: {e}")))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
