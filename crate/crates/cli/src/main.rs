//! sl21: decompositions, bimodule structure and verification sweeps for the mixed chain.

mod cache;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use sl21_core::bimod::{self, LambdaTable};
use sl21_core::fusion::{chain_decompose, dim_of_groth};
use sl21_core::registry::{BackendConfig, BackendRegistry, SuiteContext, SuiteRegistry};
use sl21_core::uqmod::{build_indecomp, IndecompLabel};

use cache::{Cache, CacheKey};

const MAX_LEVEL: usize = 25;

#[derive(Parser)]
#[command(name = "sl21", version, about = "Mixed tensor chain 3^m ⊗ 3̄^n over U_q(sl(2|1))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV (decompose, table)
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// Matrix backend for relation checks
    #[arg(long, global = true)]
    backend: Option<String>,
    /// Seed for evaluation points
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Cache directory (overrides SL21_CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Largest m+n for verify
    #[arg(long, global = true)]
    max_mn: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Indecomposable summands of 3^m ⊗ 3̄^n
    Decompose { m: usize, n: usize },
    /// Bimodule decomposition with audits
    Bimodule { m: usize, n: usize },
    /// Run a verification suite over all m+n up to MAX_MN
    Verify {
        max_mn: Option<usize>,
        /// relations, centralizer, identities, dims or all
        #[arg(default_value = "all")]
        suite: String,
        backend: Option<String>,
    },
    /// Table of bipartitions λ_{m,n}(t, r) in the semisimple part
    Table { m: usize, n: usize },
    /// Generator matrices of an indecomposable such as Z[1,-1;3,2] or R[1,1;2,0]
    DumpRep { label: String },
}

struct UsageError(String);

fn level(m: usize, n: usize) -> Result<(), UsageError> {
    if m + n == 0 || m + n > MAX_LEVEL {
        return Err(UsageError(format!("need 1 <= m+n <= {MAX_LEVEL}, got m={m} n={n}")));
    }
    Ok(())
}

fn open_cache(cli: &Cli) -> Option<Cache> {
    let dir = cli.cache_dir.clone().or_else(|| std::env::var_os("SL21_CACHE_DIR").map(PathBuf::from))?;
    match Cache::open(&dir) {
        Ok(c) => Some(c),
        Err(e) => {
            eprintln!("warning: cache at {} unavailable: {e}", dir.display());
            None
        }
    }
}

fn cached(cache: &mut Option<Cache>, m: usize, n: usize, kind: &str, make: impl FnOnce() -> Value) -> Value {
    let key = CacheKey { m, n, kind: kind.into() };
    if let Some(v) = cache.as_ref().and_then(|c| c.get(&key)) {
        return v.clone();
    }
    let v = make();
    if let Some(c) = cache.as_mut() {
        if let Err(e) = c.put(key, v.clone()) {
            eprintln!("warning: cache write failed: {e}");
        }
    }
    v
}

fn decompose_payload(m: usize, n: usize) -> Value {
    let g = chain_decompose(m, n);
    let summands: Vec<Value> =
        g.iter().map(|(l, k)| json!({"label": l.to_string(), "mult": k, "dim": l.dim()})).collect();
    json!({"m": m, "n": n, "summands": summands, "total_dim": dim_of_groth(&g)})
}

fn bimodule_payload(m: usize, n: usize) -> Result<Value, String> {
    let semisimple: Vec<Value> = bimod::semisimple_part(m, n)
        .iter()
        .map(|s| json!({"bipartition": s.x.to_string(), "barlabel": s.z.to_string(), "t": s.z.t, "r": s.z.r}))
        .collect();
    let graph = bimod::atypical_part(m, n).map_err(|e| e.to_string())?;
    let dim = bimod::dimension_audit(m, n).map(|a| a.holds()).unwrap_or(false);
    Ok(json!({
        "m": m,
        "n": n,
        "semisimple": semisimple,
        "atypical": graph.to_json(),
        "audits": {
            "dim": dim,
            "identity1": bimod::verify_identity_tensor(m, n),
            "identity2": bimod::verify_identity_proj(m, n),
        },
    }))
}

fn write_csv(rows: &[Vec<String>]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout());
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON value serializes"));
}

fn run(cli: &Cli) -> Result<bool, UsageError> {
    let mut cache = open_cache(cli);
    match &cli.command {
        Command::Decompose { m, n } => {
            level(*m, *n)?;
            let v = cached(&mut cache, *m, *n, "decompose", || decompose_payload(*m, *n));
            if cli.json {
                print_json(&v);
            } else {
                let mut rows = vec![vec!["label".to_string(), "mult".into(), "dim".into()]];
                for s in v["summands"].as_array().into_iter().flatten() {
                    rows.push(vec![s["label"].as_str().unwrap_or("").into(), s["mult"].to_string(), s["dim"].to_string()]);
                }
                if cli.csv {
                    write_csv(&rows).map_err(|e| UsageError(e.to_string()))?;
                } else {
                    for r in &rows[1..] {
                        println!("{:<16} x{:<6} dim {}", r[0], r[1], r[2]);
                    }
                    println!("total dim {}", v["total_dim"]);
                }
            }
            Ok(true)
        }
        Command::Bimodule { m, n } => {
            level(*m, *n)?;
            let v = match cache.as_ref().and_then(|c| c.get(&CacheKey { m: *m, n: *n, kind: "bimodule".into() })) {
                Some(v) => v.clone(),
                None => {
                    let v = bimodule_payload(*m, *n).map_err(UsageError)?;
                    cached(&mut cache, *m, *n, "bimodule", || v)
                }
            };
            let audits = &v["audits"];
            let ok = ["dim", "identity1", "identity2"].iter().all(|k| audits[k] == Value::Bool(true));
            if cli.json {
                print_json(&v);
            } else {
                println!("T^s: {} summands", v["semisimple"].as_array().map_or(0, Vec::len));
                for s in v["semisimple"].as_array().into_iter().flatten() {
                    println!("  D{} ⊠ {}", s["bipartition"].as_str().unwrap_or(""), s["barlabel"].as_str().unwrap_or(""));
                }
                let at = &v["atypical"];
                println!("T^at: regime {}, {} vertices", at["regime"].as_str().unwrap_or(""), at["vertices"].as_array().map_or(0, Vec::len));
                for x in at["vertices"].as_array().into_iter().flatten() {
                    println!("  {:<7} D{} ⊠ {}", x["layer"].as_str().unwrap_or(""), x["x"].as_str().unwrap_or(""), x["z"].as_str().unwrap_or(""));
                }
                println!("audits: dim {} identity1 {} identity2 {}", audits["dim"], audits["identity1"], audits["identity2"]);
            }
            Ok(ok)
        }
        Command::Table { m, n } => {
            level(*m, *n)?;
            let t = LambdaTable::new(*m, *n);
            let rows = t.rows();
            if cli.json {
                print_json(&json!({"m": m, "n": n, "rows": rows}));
            } else if cli.csv {
                write_csv(&rows).map_err(|e| UsageError(e.to_string()))?;
            } else {
                let width = rows.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
                for r in &rows {
                    let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
                    println!("{}", cells.join(" "));
                }
            }
            Ok(true)
        }
        Command::DumpRep { label } => {
            let l = IndecompLabel::parse(label).map_err(|e| UsageError(e.to_string()))?;
            let rep = build_indecomp(&l).map_err(|e| UsageError(e.to_string()))?;
            print_json(&json!({"label": l.to_string(), "dim": rep.dim(), "rep": rep.to_json()}));
            Ok(true)
        }
        Command::Verify { max_mn, suite, backend } => {
            let max_mn = match (*max_mn, cli.max_mn) {
                (Some(a), Some(b)) if a != b => return Err(UsageError("MAX_MN given twice with different values".into())),
                (Some(a), _) | (None, Some(a)) => a,
                (None, None) => 5,
            };
            if max_mn == 0 || max_mn > MAX_LEVEL {
                return Err(UsageError(format!("need 1 <= max-mn <= {MAX_LEVEL}")));
            }
            let backend_name = match (backend, &cli.backend) {
                (Some(a), Some(b)) if a != b => return Err(UsageError("backend given twice with different values".into())),
                (Some(a), _) | (None, Some(a)) => a.clone(),
                (None, None) => "symbolic".into(),
            };
            let cfg = BackendConfig { seed: cli.seed, ..BackendConfig::default() };
            let backend = BackendRegistry::default().create(&backend_name, &cfg).map_err(|e| UsageError(e.to_string()))?;
            let registry = SuiteRegistry::default();
            let suites = registry.select(suite).map_err(|e| UsageError(e.to_string()))?;
            let ctx = SuiteContext { max_mn, backend: backend.as_ref() };
            let outcomes: Vec<_> = suites.iter().flat_map(|s| s.run(&ctx)).collect();
            let failed: Vec<_> = outcomes.iter().filter(|o| !o.holds).collect();
            if cli.json {
                print_json(&json!({
                    "max_mn": max_mn,
                    "suite": suite,
                    "backend": backend_name,
                    "seed": cli.seed,
                    "checks": outcomes.len(),
                    "failed": failed.len(),
                    "outcomes": outcomes,
                }));
            } else {
                for o in &failed {
                    println!("{o}");
                }
                println!("{} checks, {} failed ({suite}, {backend_name}, m+n <= {max_mn})", outcomes.len(), failed.len());
            }
            if !failed.is_empty() {
                eprintln!("{}", json!({"error": "verification failed", "failures": failed}));
            }
            Ok(failed.is_empty())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 || rayon::ThreadPoolBuilder::new().num_threads(j).build_global().is_err() {
            eprintln!("{}", json!({"error": "usage", "message": "--jobs needs a positive thread count"}));
            return ExitCode::from(2);
        }
    }
    let status = run(&cli);
    let _ = io::stdout().flush();
    match status {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("{}", json!({"error": "usage", "message": msg}));
            ExitCode::from(2)
        }
    }
}
