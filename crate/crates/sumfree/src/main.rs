//! Command-line front end: set-file certification, searches, and the
//! verify-paper scorecard. Exit codes: 0 = predicate holds / all pass,
//! 1 = predicate fails, 2 = usage or input error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sumfree::certify::{
    affine_coset_containment, check_sum_free, coset_cover, is_normal, lambda_max, Certificate,
    Normality,
};
use sumfree::error::Error;
use sumfree::group::GroupSpec;
use sumfree::search::{
    enumerate_sumfree, max_nonnormal, sample_greedy, SearchConfig, SearchMode, SearchReport,
    SymmetryReduction,
};
use sumfree::set::{difference_set, sumset, symmetry_group};
use sumfree::setfile::{read_set, SetFile};
use sumfree::verify::{run_scorecard, ScorecardOptions};

#[derive(Parser)]
#[command(
    name = "sumfree",
    about = "Certify and search sum-free sets in F_p^n",
    version
)]
struct Cli {
    /// Worker thread count (env fallback SUMFREE_THREADS). Accepted for
    /// forward compatibility; all modes currently execute serially so
    /// that reports are byte-identical across values.
    #[arg(long, global = true, env = "SUMFREE_THREADS", default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CliMode {
    EnumerateAll,
    MaxNonnormal,
    SampleGreedy,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a set file for sum-freeness.
    Check { file: PathBuf },
    /// Search for a functional mapping the set into the central interval.
    Normal { file: PathBuf },
    /// Search for a hyperplane whose k cosets cover the set.
    Cover {
        file: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Test containment in a coset of a proper subspace.
    Affine { file: PathBuf },
    /// Maximum sum-free size for the abelian group with these invariant factors.
    Lambda {
        #[arg(long, value_delimiter = ',', required = true)]
        factors: Vec<u64>,
    },
    /// Compute A+B (or A-B) of two set files and print the result.
    Sumset {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        difference: bool,
    },
    /// Print the symmetry (period) group of a set.
    Sym { file: PathBuf },
    /// Run a search and emit a report as JSON.
    Search {
        #[arg(long)]
        mode: CliMode,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1 << 40)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        min_size: u64,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Directory to write witness set files into.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Number of samples in sample_greedy mode.
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Stream all sum-free sets of size >= min-size as set-file JSON lines.
    Enumerate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        min_size: u64,
        /// Emit one canonical representative per GL(n,p) orbit.
        #[arg(long)]
        canonical: bool,
    },
    /// Re-establish the published results and print a PASS/FAIL scorecard.
    VerifyPaper {
        #[arg(long, default_value_t = 1_000_000)]
        probe_budget: u64,
    },
}

fn report_json(report: &SearchReport, spec: GroupSpec) -> serde_json::Value {
    json!({
        "best_size": report.best_size,
        "witnesses": report
            .witnesses
            .iter()
            .map(|w| SetFile::from_set(w).elements)
            .collect::<Vec<_>>(),
        "nodes_expanded": report.nodes_expanded,
        "exhaustive": report.exhaustive,
        "p": spec.p(),
        "n": spec.n(),
    })
}

fn run(cli: Cli) -> Result<u8, Error> {
    if cli.threads < 1 {
        return Err(Error::usage("--threads must be at least 1"));
    }
    match cli.cmd {
        Cmd::Check { file } => {
            let set = read_set(&file)?;
            match check_sum_free(&set) {
                None => {
                    println!("SUM-FREE");
                    Ok(0)
                }
                Some(Certificate::SumFreeViolation { a, b, c }) => {
                    println!("NOT SUM-FREE: {} + {} = {}", a, b, c);
                    Ok(1)
                }
                Some(_) => unreachable!("check_sum_free emits violations only"),
            }
        }
        Cmd::Normal { file } => {
            let set = read_set(&file)?;
            match is_normal(&set)? {
                Normality::Witness(Certificate::NormalityWitness { coeffs }) => {
                    println!("{}", json!({ "normal": true, "functional": coeffs }));
                    Ok(0)
                }
                Normality::Witness(_) => unreachable!("is_normal emits functional witnesses"),
                Normality::NotNormal => {
                    println!("{}", json!({ "normal": false }));
                    Ok(1)
                }
            }
        }
        Cmd::Cover { file, k } => {
            let set = read_set(&file)?;
            match coset_cover(&set, k)? {
                Some(Certificate::CoverWitness {
                    functional,
                    residues,
                }) => {
                    println!(
                        "{}",
                        json!({
                            "covered": true,
                            "functional": functional.coeffs(),
                            "residues": residues,
                        })
                    );
                    Ok(0)
                }
                Some(_) => unreachable!("coset_cover emits cover witnesses"),
                None => {
                    println!("{}", json!({ "covered": false, "k": k }));
                    Ok(1)
                }
            }
        }
        Cmd::Affine { file } => {
            let set = read_set(&file)?;
            match affine_coset_containment(&set)? {
                Some(Certificate::AffineContainment { base, span }) => {
                    println!(
                        "{}",
                        json!({
                            "contained": true,
                            "base": base.coords(),
                            "span_dim": span.dim(),
                            "span_basis": span
                                .basis()
                                .iter()
                                .map(|v| v.coords().to_vec())
                                .collect::<Vec<_>>(),
                        })
                    );
                    Ok(0)
                }
                Some(_) => unreachable!("affine containment emits affine certificates"),
                None => {
                    println!("{}", json!({ "contained": false }));
                    Ok(1)
                }
            }
        }
        Cmd::Lambda { factors } => {
            println!("{}", lambda_max(&factors)?);
            Ok(0)
        }
        Cmd::Sumset {
            a,
            b,
            difference,
        } => {
            let sa = read_set(&a)?;
            let sb = read_set(&b)?;
            let out = if difference {
                difference_set(&sa, &sb)?
            } else {
                sumset(&sa, &sb)?
            };
            print!("{}", SetFile::from_set(&out).to_json());
            Ok(0)
        }
        Cmd::Sym { file } => {
            let set = read_set(&file)?;
            let h = symmetry_group(&set);
            println!(
                "{}",
                json!({
                    "dim": h.dim(),
                    "basis": h.basis().iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(),
                })
            );
            Ok(0)
        }
        Cmd::Search {
            mode,
            p,
            n,
            budget,
            seed,
            min_size,
            checkpoint,
            out_dir,
            samples,
        } => {
            let spec = GroupSpec::new(p, n)?;
            let mode = match mode {
                CliMode::EnumerateAll => SearchMode::EnumerateAll,
                CliMode::MaxNonnormal => SearchMode::MaxNonnormal,
                CliMode::SampleGreedy => SearchMode::SampleGreedy,
            };
            let mut cfg = SearchConfig::new(spec, mode);
            cfg.node_budget = budget;
            cfg.seed = seed;
            cfg.min_size = min_size;
            cfg.checkpoint_path = checkpoint;
            let witnesses;
            let report;
            match mode {
                SearchMode::MaxNonnormal => {
                    cfg.symmetry_reduction = SymmetryReduction::StabilizerPrefix;
                    let r = max_nonnormal(&cfg)?;
                    witnesses = r.witnesses.clone();
                    println!("{}", report_json(&r, spec));
                    report = Some(r);
                }
                SearchMode::EnumerateAll => {
                    let mut best = Vec::new();
                    let r = enumerate_sumfree(&cfg, &mut |a| {
                        if best.len() < 16 {
                            best.push(a.clone());
                        }
                    })?;
                    witnesses = best;
                    println!("{}", report_json(&r, spec));
                    report = Some(r);
                }
                SearchMode::SampleGreedy => {
                    witnesses = sample_greedy(&cfg, samples)?;
                    let sizes: Vec<u64> = witnesses.iter().map(|w| w.card()).collect();
                    println!("{}", json!({ "samples": sizes, "p": p, "n": n }));
                    report = None;
                }
            }
            let _ = report;
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(&dir)
                    .map_err(|e| Error::usage(format!("{}: {}", dir.display(), e)))?;
                for (i, w) in witnesses.iter().enumerate() {
                    SetFile::from_set(w).save(&dir.join(format!("witness-{:03}.json", i)))?;
                }
            }
            Ok(0)
        }
        Cmd::Enumerate {
            p,
            n,
            min_size,
            canonical,
        } => {
            let spec = GroupSpec::new(p, n)?;
            let mut cfg = SearchConfig::new(spec, SearchMode::EnumerateAll);
            cfg.min_size = min_size;
            if canonical {
                cfg.symmetry_reduction = SymmetryReduction::FullCanonical;
            }
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            let mut count = 0u64;
            enumerate_sumfree(&cfg, &mut |a| {
                count += 1;
                let file = SetFile::from_set(a);
                let line = serde_json::to_string(&file).expect("serializable");
                writeln!(lock, "{}", line).expect("stdout write");
            })?;
            writeln!(lock, "{}", json!({ "count": count })).expect("stdout write");
            Ok(0)
        }
        Cmd::VerifyPaper { probe_budget } => {
            let opts = ScorecardOptions { probe_budget };
            let stdout = std::io::stdout();
            let stderr = std::io::stderr();
            let all_pass = run_scorecard(&opts, &mut stdout.lock(), &mut stderr.lock())?;
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
