// SPDX-License-Identifier: Apache-2.0
//! The `forge` command line.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qforge_core::constructions::{
    brsh, bsh, bssh, hgp, rsh, sehgp, ssh, xzzx3d, BlockTaggedCss, Family, RshVariant,
};
use qforge_core::css::params_string;
use qforge_core::noise::{summarize, Experiment, NoiseModel, SingleShotParams, TwoStageDecoder};
use qforge_core::soundness::{soundness_scan_code, ScanOptions, SoundnessFn};
use qforge_core::{ChainComplex, ClassicalCode, Distance};
use rayon::prelude::*;
use serde::Serialize;

use crate::base::BaseSpec;
use crate::bundle::{Bundle, CodeManifest};
use crate::complex_dir::write_complex;
use crate::config::{config_hash, merge_config, parse_config};
use crate::dense::write_dense;
use crate::run::{RunManifest, RUN_FILE};

#[derive(Debug, Parser)]
#[command(
    name = "forge",
    version,
    about = "Build, check and simulate single-shot quantum codes"
)]
pub struct Cli {
    /// key=value file supplying defaults for the subcommand's flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Seed for every random draw.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a code family and write its bundle.
    Build(BuildArgs),
    /// Print parameters of a bundle.
    Params(ParamsArgs),
    /// Check commutation, syndrome checks and counting identities.
    Verify(CodeArg),
    /// Scan a bundle's syndrome map for (t, f)-soundness.
    Soundness(SoundnessArgs),
    /// Monte Carlo single-shot decoding under biased Pauli noise.
    Simulate(SimulateArgs),
    /// Re-serialize a bundle.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub family: String,
    /// rep:N, open:N, hamming or alist:PATH. Repeat to give distinct factors.
    #[arg(long, required = true)]
    pub base: Vec<String>,
    #[arg(long)]
    pub out: PathBuf,
    /// Largest weight searched exhaustively for distances.
    #[arg(long, default_value_t = 4)]
    pub max_weight: usize,
    /// Also write the chain complex the code was read off.
    #[arg(long)]
    pub emit_complex: bool,
}

#[derive(Debug, Args)]
pub struct CodeArg {
    #[arg(long)]
    pub code: PathBuf,
}

#[derive(Debug, Args)]
pub struct ParamsArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long, default_value_t = 4)]
    pub max_weight: usize,
}

#[derive(Debug, Args)]
pub struct SoundnessArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long)]
    pub t: usize,
    #[arg(long, default_value = "x2over4")]
    pub f: String,
    #[arg(long)]
    pub report: PathBuf,
    /// Stop after this many image syndromes.
    #[arg(long, default_value_t = 50_000_000)]
    pub ceiling: u64,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Total data error rate.
    #[arg(long)]
    pub p: f64,
    /// `depolarizing` or `etaZ:F` (F may be `inf`).
    #[arg(long, default_value = "depolarizing")]
    pub bias: String,
    #[arg(long, default_value_t = 0.0)]
    pub qmeas: f64,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub out: PathBuf,
    /// Soundness parameter `t`; defaults to the metacheck distance.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, default_value = "x2over4")]
    pub f: String,
    #[arg(long, default_value_t = 2)]
    pub repair_budget: usize,
    #[arg(long, default_value_t = 3)]
    pub data_budget: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Alist,
    Dense,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = ExportFormat::Alist)]
    pub format: ExportFormat,
}

/// Entry point for the binary: parses, runs, and maps errors to exit status 1.
pub fn main() -> std::process::ExitCode {
    let args: Vec<String> = std::env::args().collect();
    match run(&args) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => match e.downcast::<clap::Error>() {
            Ok(clap_err) => clap_err.exit(),
            Err(e) => {
                eprintln!("forge: {}", one_line(&e));
                std::process::ExitCode::FAILURE
            }
        },
    }
}

fn one_line(e: &anyhow::Error) -> String {
    format!("{e:#}").replace('\n', " ")
}

fn config_path(args: &[String]) -> Option<PathBuf> {
    let pos = args
        .iter()
        .position(|a| a == "--config" || a.starts_with("--config="))?;
    match args[pos].split_once('=') {
        Some((_, p)) => Some(p.into()),
        None => args.get(pos + 1).map(PathBuf::from),
    }
}

pub fn run(args: &[String]) -> Result<()> {
    let args = match config_path(args) {
        Some(p) => {
            let text = fs::read_to_string(&p)
                .with_context(|| format!("reading config {}", p.display()))?;
            merge_config(args, &parse_config(&text)?)
        }
        None => args.to_vec(),
    };
    let cli = Cli::try_parse_from(&args)?;
    if let Some(n) = cli.threads {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let mut manifest = RunManifest::new(args.clone(), config_hash(&args), cli.seed);
    match &cli.command {
        Command::Build(a) => cmd_build(a, &mut manifest),
        Command::Params(a) => cmd_params(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Soundness(a) => cmd_soundness(a, &mut manifest),
        Command::Simulate(a) => cmd_simulate(a, cli.seed.unwrap_or(0), &mut manifest),
        Command::Export(a) => cmd_export(a, &mut manifest),
    }
}

/// Replicates a single base to `count` factors, or takes exactly `count`.
fn factors(specs: &[BaseSpec], count: usize) -> Result<Vec<ClassicalCode>> {
    let codes: Vec<ClassicalCode> = specs.iter().map(BaseSpec::load).collect::<Result<_>>()?;
    match codes.len() {
        1 => Ok(vec![codes[0].clone(); count]),
        n if n == count => Ok(codes),
        n => bail!("this family takes 1 or {count} bases, got {n}"),
    }
}

/// Builds a family, returning the code and the complex it came from, if any.
pub fn build_family(
    family: Family,
    specs: &[BaseSpec],
) -> Result<(BlockTaggedCss, Option<ChainComplex>)> {
    use Family::*;
    let four = |specs| -> Result<_> {
        let f = factors(specs, 4)?;
        Ok(sehgp(&f[0], &f[1], &f[2], &f[3])?)
    };
    Ok(match family {
        Hgp => {
            let f = factors(specs, 2)?;
            (hgp(f[0].h(), f[1].h())?, None)
        }
        Sehgp => {
            let b = four(specs)?;
            (b.code, Some(b.q))
        }
        Bsh => {
            let b = four(specs)?;
            (bsh(&b)?, Some(b.q))
        }
        Rsh1 | Rsh2 | Brsh1 | Brsh2 => {
            let b = four(specs)?;
            let v = if matches!(family, Rsh1 | Brsh1) {
                RshVariant::One
            } else {
                RshVariant::Two
            };
            let code = if matches!(family, Rsh1 | Rsh2) {
                rsh(&b, v)?
            } else {
                brsh(&b, v)?
            };
            (code, Some(b.q))
        }
        Ssh | Bssh => {
            let f = factors(specs, 1)?;
            let s = ssh(&f[0])?;
            let code = if family == Ssh { s.code } else { bssh(&f[0])? };
            (code, Some(s.p))
        }
        Xzzx3d => {
            let [BaseSpec::Rep(n)] = specs else {
                bail!("xzzx3d takes a single rep:N base");
            };
            let f = factors(specs, 1)?;
            (xzzx3d(*n)?, Some(ssh(&f[0])?.p))
        }
    })
}

fn cmd_build(a: &BuildArgs, manifest: &mut RunManifest) -> Result<()> {
    let family: Family = a.family.parse()?;
    let specs: Vec<BaseSpec> = a.base.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    let inputs: Vec<PathBuf> = specs.iter().filter_map(|s| s.path().cloned()).collect();
    let (code, complex) = build_family(family, &specs)?;
    code.validate()?;
    let params = code.params(a.max_weight)?;
    let bundle = Bundle {
        manifest: CodeManifest::new(
            &code,
            specs.iter().map(ToString::to_string).collect(),
            &params,
            a.max_weight,
        ),
        code,
    };
    let mut outputs = bundle.write(&a.out)?;
    if let (true, Some(c)) = (a.emit_complex, complex) {
        let dir = a.out.join("complex");
        write_complex(&dir, &c)?;
        outputs.push(dir.join(crate::complex_dir::COMPLEX_MANIFEST));
        outputs.extend((1..=c.length()).map(|k| dir.join(format!("boundary_{k}.alist"))));
    }
    manifest.add_inputs(&inputs)?;
    manifest.add_outputs(&outputs)?;
    manifest.write(&a.out.join(RUN_FILE))?;
    println!("{} {}", family.name(), bundle.manifest.params);
    Ok(())
}

fn describe(d: Distance, max_weight: usize) -> String {
    match d {
        Distance::Exact(v) => format!("{v} (exact)"),
        other => format!("{other} (no logical up to weight {max_weight})"),
    }
}

fn cmd_params(a: &ParamsArgs) -> Result<()> {
    let b = Bundle::read(&a.code)?;
    let p = b.code.params(a.max_weight)?;
    println!(
        "{} {}",
        b.code.family.name(),
        params_string(p.n, p.k, &p.d())
    );
    println!("n={} k={} checks={}", p.n, p.k, p.checks);
    println!("d_x={}", describe(p.d_x, a.max_weight));
    println!("d_z={}", describe(p.d_z, a.max_weight));
    match p.d_s {
        Some(d) => println!("d_s={}", describe(d, a.max_weight)),
        None => println!("d_s=none"),
    }
    Ok(())
}

/// `(qubits, checks)` per `n⁴` for families over square bases.
fn counting_identity(f: Family) -> Option<(usize, usize)> {
    use Family::*;
    match f {
        Sehgp | Bsh => Some((6, 8)),
        Ssh | Bssh | Rsh1 | Rsh2 | Brsh1 | Brsh2 | Xzzx3d => Some((5, 4)),
        Hgp => None,
    }
}

pub fn verify(b: &Bundle) -> Result<Vec<String>> {
    let mut passed = Vec::new();
    b.code.validate()?;
    passed.push("commutation and syndrome checks".to_owned());
    let c = &b.code.code;
    let k = c.logical_count();
    ensure!(
        k == b.manifest.k,
        "logical count {k} disagrees with the manifest ({})",
        b.manifest.k
    );
    ensure!(
        (c.n(), c.num_checks()) == (b.manifest.n, b.manifest.checks),
        "shape {}×{} disagrees with the manifest",
        c.num_checks(),
        c.n()
    );
    passed.push(format!("k={k} by rank"));
    let specs: Vec<BaseSpec> = b
        .manifest
        .bases
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let square: Option<Vec<usize>> = specs
        .iter()
        .map(|s| {
            s.load()
                .ok()
                .filter(|h| h.h().rows() == h.n())
                .map(|h| h.n())
        })
        .collect();
    if let (Some((q, m)), Some(ns)) = (counting_identity(b.code.family), square) {
        if ns.windows(2).all(|w| w[0] == w[1]) && !ns.is_empty() {
            let n4 = ns[0].pow(4);
            ensure!(
                c.n() == q * n4,
                "qubit count {} is not {q}n⁴ = {}",
                c.n(),
                q * n4
            );
            ensure!(
                c.num_checks() == m * n4,
                "check count {} is not {m}n⁴ = {}",
                c.num_checks(),
                m * n4
            );
            passed.push(format!("{q}n⁴ qubits and {m}n⁴ checks"));
        }
    }
    Ok(passed)
}

fn cmd_verify(a: &CodeArg) -> Result<()> {
    let b = Bundle::read(&a.code)?;
    let passed = verify(&b)?;
    println!("ok {}: {}", b.code.family.name(), passed.join("; "));
    Ok(())
}

fn cmd_soundness(a: &SoundnessArgs, manifest: &mut RunManifest) -> Result<()> {
    let b = Bundle::read(&a.code)?;
    let f: SoundnessFn = a.f.parse()?;
    let opts = ScanOptions {
        ceiling: a.ceiling,
        ..ScanOptions::default()
    };
    let r = soundness_scan_code(&b.code.code, a.t, f, opts)?;
    let mut w = csv::Writer::from_path(&a.report)
        .with_context(|| format!("writing {}", a.report.display()))?;
    w.write_record(["syndrome_weight", "max_reduced_weight", "bound", "violated"])?;
    for row in &r.rows {
        let max = row
            .max_reduced_weight
            .map_or("-".to_owned(), |m| m.to_string());
        w.write_record([
            row.syndrome_weight.to_string(),
            max,
            row.bound.to_string(),
            row.violated.to_string(),
        ])?;
    }
    w.flush()?;
    drop(w);
    manifest.add_inputs(&Bundle::files(&a.code))?;
    manifest.add_outputs(std::slice::from_ref(&a.report))?;
    manifest.write(&sidecar(&a.report))?;
    let verdict = if !r.complete {
        "partial (ceiling reached)".to_owned()
    } else if r.violations.is_empty() {
        "sound".to_owned()
    } else {
        format!("{} violations", r.violations.len())
    };
    println!(
        "t={} f={} syndromes={}: {verdict}",
        a.t, f, r.syndromes_checked
    );
    Ok(())
}

/// `results.csv` -> `results.csv.run.json`.
fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(RUN_FILE);
    s.into()
}

pub fn parse_bias(p: f64, bias: &str, qmeas: f64) -> Result<NoiseModel> {
    if bias == "depolarizing" {
        return Ok(NoiseModel::depolarizing(p, qmeas)?);
    }
    let eta = bias
        .strip_prefix("etaZ:")
        .ok_or_else(|| anyhow!("bias {bias:?}: expected depolarizing or etaZ:F"))?;
    let eta = match eta {
        "inf" | "infinity" => f64::INFINITY,
        x => x.parse().with_context(|| format!("bias {bias:?}"))?,
    };
    Ok(NoiseModel::z_biased(p, eta, qmeas)?)
}

#[derive(Serialize)]
struct CsvRecord {
    trial: u64,
    ex_weight: usize,
    ez_weight: usize,
    u_weight: usize,
    residual: String,
    logical_fail: bool,
    in_regime: bool,
}

fn cmd_simulate(a: &SimulateArgs, seed: u64, manifest: &mut RunManifest) -> Result<()> {
    let b = Bundle::read(&a.code)?;
    let model = parse_bias(a.p, &a.bias, a.qmeas)?;
    let f: SoundnessFn = a.f.parse()?;
    let code = b.code.code.clone();
    let decoder = TwoStageDecoder::new(&code, a.repair_budget, a.data_budget);
    let d_m = decoder
        .syndrome_distance(b.manifest.max_weight)
        .map_or(0, |d| d.lower_bound());
    let d = b.manifest.distance().lower_bound();
    let params = SingleShotParams::new(d_m, a.t.unwrap_or(d_m), d, f);
    let exp = Experiment::new(code, model, params, decoder, seed)?;
    let records = (0..a.trials)
        .into_par_iter()
        .map(|t| exp.run_trial(t))
        .collect::<Result<Vec<_>, _>>()?;
    let summary = summarize(&records);
    let mut w =
        csv::Writer::from_path(&a.out).with_context(|| format!("writing {}", a.out.display()))?;
    for r in &records {
        w.serialize(CsvRecord {
            trial: r.trial,
            ex_weight: r.ex_weight,
            ez_weight: r.ez_weight,
            u_weight: r.u_weight,
            residual: r.residual.map_or("-".to_owned(), |x| x.to_string()),
            logical_fail: r.logical_fail,
            in_regime: r.in_regime,
        })?;
    }
    w.flush()?;
    drop(w);
    manifest.add_inputs(&Bundle::files(&a.code))?;
    manifest.add_outputs(std::slice::from_ref(&a.out))?;
    manifest.write(&sidecar(&a.out))?;
    println!(
        "trials={} logical_failures={} rate={:.6} ci95=[{:.6}, {:.6}] in_regime={} in_regime_pass={}",
        summary.trials,
        summary.logical_failures,
        summary.failure_rate,
        summary.ci95.0,
        summary.ci95.1,
        summary.in_regime,
        summary.in_regime_pass
    );
    Ok(())
}

fn cmd_export(a: &ExportArgs, manifest: &mut RunManifest) -> Result<()> {
    let b = Bundle::read(&a.code)?;
    let outputs = match a.format {
        ExportFormat::Alist => b.write(&a.out)?,
        ExportFormat::Dense => {
            fs::create_dir_all(&a.out)?;
            let c = &b.code.code;
            let mut out = Vec::new();
            for (name, m) in [
                ("hx", Some(c.hx())),
                ("hz", Some(c.hz())),
                ("hsx", c.hsx()),
                ("hsz", c.hsz()),
            ] {
                if let Some(m) = m {
                    let path = a.out.join(format!("{name}.txt"));
                    fs::write(&path, write_dense(m))?;
                    out.push(path);
                }
            }
            out
        }
    };
    manifest.add_inputs(&Bundle::files(&a.code))?;
    manifest.add_outputs(&outputs)?;
    manifest.write(&a.out.join(RUN_FILE))?;
    println!("wrote {} files to {}", outputs.len(), a.out.display());
    Ok(())
}
