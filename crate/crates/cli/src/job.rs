use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use quadalg::rank::{graded_dims_by_rank, AnickExperiment};
use quadalg::rewriting::is_quadratic_groebner;
use quadalg::rit::{
    classify, decompose_pair, grsig_check, omega_faithful, omega_structure, pair_set_condition, rit_alphabet,
    rit_presentation, two_isomorphic, Branch, SigmaFamily,
};
use quadalg::series::{hilbert_of_presentation, TruncatedSeries};
use quadalg::ybe::gybe_commutator;
use quadalg::{Field, Word};
use serde_json::json;

use crate::error::CliError;
use crate::format::parse_presentation;
use crate::report::Report;

pub const DEFAULT_DEGREE: usize = 8;
pub const DEFAULT_PRIME: u32 = 17;
pub const DEFAULT_TRIALS: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "quadalg", version, about = "Hilbert series of quadratic algebras and RIT families")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert series of a presentation file by normal-word counting.
    Hilbert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        /// Also compute dimensions from shift-matrix ranks (prime fields).
        #[arg(long)]
        cross_check: bool,
    },
    /// Random presentations with n generators and n(n-1)/2 relations
    /// against the lower bound.
    Anick {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u32,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Stop at the first trial that attains the bound.
        #[arg(long)]
        stop_early: bool,
    },
    #[command(subcommand)]
    Rit(RitCommand),
    #[command(subcommand)]
    Omega(OmegaCommand),
    #[command(subcommand)]
    Ybe(YbeCommand),
}

#[derive(Debug, Args)]
pub struct MapsArg {
    /// Maps as "1,2;1,1" (one table per color, values from 1).
    #[arg(long)]
    pub maps: String,
}

#[derive(Debug, Subcommand)]
pub enum RitCommand {
    /// Maximality conditions and Hilbert series of one family.
    Check {
        #[command(flatten)]
        maps: MapsArg,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u32,
    },
    /// All families with m maps on n points, up to relabeling.
    Classify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u32,
    },
    /// Structure sets of a pair of maps.
    Decompose {
        #[command(flatten)]
        maps: MapsArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum OmegaCommand {
    /// Faithful family of m absorbing maps.
    Build {
        #[arg(long)]
        m: usize,
    },
    /// Class structure of an absorbing family.
    Check {
        #[command(flatten)]
        maps: MapsArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum YbeCommand {
    /// Commutator [R12, R23] of the operator built from a family.
    Check {
        #[command(flatten)]
        maps: MapsArg,
    },
}

/// A validated request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    Hilbert { input: PathBuf, degree: usize, cross_check: bool },
    Anick { n: usize, degree: usize, prime: u32, trials: usize, seed: u64, all: bool },
    RitCheck { family: SigmaFamily, degree: usize, field: Field },
    RitClassify { m: usize, n: usize, degree: usize, field: Field },
    RitDecompose { family: SigmaFamily },
    OmegaBuild { m: usize },
    OmegaCheck { family: SigmaFamily },
    YbeCheck { family: SigmaFamily },
}

impl Job {
    pub fn from_cli(cli: Cli) -> Result<Job, CliError> {
        let family = |maps: &MapsArg| maps.maps.parse::<SigmaFamily>().map_err(CliError::from);
        Ok(match cli.command {
            Command::Hilbert { input, degree, cross_check } => Job::Hilbert { input, degree, cross_check },
            Command::Anick { n, degree, prime, trials, seed, stop_early } => {
                Field::prime(prime)?;
                if n < 3 {
                    return Err(CliError::Invalid(format!("--n must be at least 3, got {n}")));
                }
                Job::Anick { n, degree, prime, trials, seed, all: !stop_early }
            }
            Command::Rit(RitCommand::Check { maps, degree, prime }) => {
                Job::RitCheck { family: family(&maps)?, degree, field: Field::prime(prime)? }
            }
            Command::Rit(RitCommand::Classify { m, n, degree, prime }) => {
                Job::RitClassify { m, n, degree, field: Field::prime(prime)? }
            }
            Command::Rit(RitCommand::Decompose { maps }) => {
                let family = family(&maps)?;
                if family.m() != 2 {
                    return Err(CliError::Invalid(format!("decompose takes exactly two maps, got {}", family.m())));
                }
                Job::RitDecompose { family }
            }
            Command::Omega(OmegaCommand::Build { m }) => {
                if m == 0 {
                    return Err(CliError::Invalid("--m must be at least 1".into()));
                }
                Job::OmegaBuild { m }
            }
            Command::Omega(OmegaCommand::Check { maps }) => Job::OmegaCheck { family: family(&maps)? },
            Command::Ybe(YbeCommand::Check { maps }) => Job::YbeCheck { family: family(&maps)? },
        })
    }
}

fn coefficients(series: &TruncatedSeries) -> Result<Vec<i64>, CliError> {
    series
        .to_i64s()
        .ok_or_else(|| CliError::Invalid("series coefficient exceeds the 64-bit range".into()))
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::First => "first",
        Branch::Second => "second",
        Branch::Both => "both",
        Branch::Neither => "neither",
    }
}

fn points(v: &[u32]) -> Vec<u32> {
    v.iter().map(|p| p + 1).collect()
}

pub fn run(job: &Job) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = match job {
        Job::Hilbert { input, degree, cross_check } => {
            let text = std::fs::read_to_string(input).map_err(|source| CliError::Io { path: input.clone(), source })?;
            let pres = parse_presentation(&text)?;
            let computed = hilbert_of_presentation(&pres, *degree)?;
            let mut report = Report::new("hilbert").param("input", input.display()).param("degree", degree);
            let series = coefficients(&computed.series)?;
            report.flag("certified", computed.certified);
            let obstructions: Vec<String> =
                computed.system.obstructions().iter().map(|w| pres.alphabet().render(w)).collect();
            let mut data = json!({
                "field": pres.field().to_string(),
                "generators": pres.generators(),
                "relations": pres.relations().len(),
                "rules": computed.system.rules().len(),
                "obstructions": obstructions,
            });
            if *cross_check {
                let ranks = coefficients(&graded_dims_by_rank(&pres, *degree)?)?;
                report.flag("methods_agree", ranks == series);
                data["rank_series"] = json!(ranks);
            }
            report.series = Some(series);
            report.data = data;
            report
        }
        Job::Anick { n, degree, prime, trials, seed, all } => {
            let experiment =
                AnickExperiment { n: *n, degree: *degree, prime: *prime, trials: *trials, seed: *seed, run_all: *all };
            let result = experiment.run()?;
            let mut report = Report::new("anick")
                .param("n", n)
                .param("degree", degree)
                .param("prime", prime)
                .param("trials", trials)
                .param("seed", seed);
            report.flag("attained", result.attained);
            let shown = result.first_attaining.or(result.trials.len().checked_sub(1));
            if let Some(i) = shown {
                report.series = Some(coefficients(&result.trials[i].dims)?);
            }
            if let Some(i) = result.first_attaining {
                report.witnesses.push(format!("trial {i} (seed {}) attains the bound", result.trials[i].seed));
            }
            let trials = result
                .trials
                .iter()
                .map(|t| Ok(json!({"index": t.index, "seed": t.seed, "dims": coefficients(&t.dims)?})))
                .collect::<Result<Vec<_>, CliError>>()?;
            report.data = json!({
                "bound": coefficients(&result.bound)?,
                "first_attaining": result.first_attaining,
                "trials": trials,
            });
            report
        }
        Job::RitCheck { family, degree, field } => {
            let pres = rit_presentation(family, *field)?;
            let verdict = grsig_check(family);
            let groebner = is_quadratic_groebner(&pres)?;
            let hilbert = hilbert_of_presentation(&pres, *degree)?;
            let mut report =
                Report::new("rit check").param("maps", family).param("degree", degree).param("field", field);
            report.flag("maximal", verdict.holds);
            report.flag("pair_sets", pair_set_condition(family));
            report.flag("quadratic_groebner", groebner.is_groebner);
            report.flag("absorbing", omega_structure(family).is_ok());
            report.flag("certified", hilbert.certified);
            report.series = Some(coefficients(&hilbert.series)?);
            for w in verdict.failures() {
                report.witnesses.push(format!(
                    "maps {} and {} at point {}: neither condition holds",
                    w.i + 1,
                    w.k + 1,
                    w.point + 1
                ));
            }
            if let Some((amb, residue)) = &groebner.witness {
                report.witnesses.push(format!(
                    "ambiguity {} does not resolve: {}",
                    pres.alphabet().render(&amb.word),
                    residue.display()
                ));
            }
            let branches: Vec<_> = verdict
                .witnesses
                .iter()
                .map(|w| json!({"i": w.i + 1, "k": w.k + 1, "point": w.point + 1, "branch": branch_name(w.branch)}))
                .collect();
            report.data = json!({"m": family.m(), "n": family.n(), "branches": branches});
            report
        }
        Job::RitClassify { m, n, degree, field } => {
            let table = classify(*m, *n, *degree, *field)?;
            let mut report = Report::new("rit classify")
                .param("m", m)
                .param("n", n)
                .param("degree", degree)
                .param("field", field);
            let rows = table
                .rows
                .iter()
                .map(|r| {
                    Ok(json!({
                        "representative": r.representative.to_string(),
                        "size": r.size,
                        "series": coefficients(&r.hilbert)?,
                        "maximal": r.maximal,
                    }))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            for r in table.rows.iter().filter(|r| !r.maximal) {
                report.witnesses.push(format!("not maximal: {} (series {})", r.representative, r.hilbert));
            }
            report.flag("all_maximal", table.maximal_count() == table.rows.len());
            report.data = json!({
                "classes": table.rows.len(),
                "maximal": table.maximal_count(),
                "non_maximal": table.rows.len() - table.maximal_count(),
                "rows": rows,
            });
            report
        }
        Job::RitDecompose { family } => {
            let d = decompose_pair(family.table(0), family.table(1))?;
            let mut report = Report::new("rit decompose").param("maps", family);
            report.flag("valid", d.valid);
            report.flag("two_isomorphic", two_isomorphic(family.table(0), family.table(1))?);
            report.witnesses.extend(d.reason.clone());
            let blocks: Vec<_> = d
                .blocks
                .iter()
                .map(|b| json!({"points": points(&b.points), "targets": [b.targets.0 + 1, b.targets.1 + 1]}))
                .collect();
            let pairs: Vec<_> = d.pairs.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
            report.data = json!({
                "y0": points(&d.y0),
                "ytilde0": points(&d.ytilde0),
                "p": points(&d.p),
                "z": points(&d.z),
                "pairs": pairs,
                "blocks": blocks,
            });
            report
        }
        Job::OmegaBuild { m } => {
            let family = omega_faithful(*m)?;
            let mut report = Report::new("omega build").param("m", m);
            report.flag("absorbing", omega_structure(&family).is_ok());
            let distinct: std::collections::BTreeSet<_> = family.tables().iter().collect();
            report.flag("faithful", distinct.len() == *m);
            report.data = json!({"n": family.n(), "maps": family.to_string()});
            report
        }
        Job::OmegaCheck { family } => {
            let mut report = Report::new("omega check").param("maps", family);
            match omega_structure(family) {
                Ok(s) => {
                    report.flag("absorbing", true);
                    let classes: Vec<_> = s
                        .classes
                        .iter()
                        .map(|c| json!({"points": points(&c.points), "targets": points(&c.targets)}))
                        .collect();
                    report.data = json!({"classes": classes});
                }
                Err(f) => {
                    report.flag("absorbing", false);
                    report.witnesses.push(format!(
                        "map {} after map {} moves point {}",
                        f.j + 1,
                        f.k + 1,
                        f.point + 1
                    ));
                }
            }
            report
        }
        Job::YbeCheck { family } => {
            let (commutator, is_zero) = gybe_commutator(family);
            let mut report = Report::new("ybe check").param("maps", family);
            report.flag("is_zero", is_zero);
            report.flag("maximal", grsig_check(family).holds);
            let alphabet = rit_alphabet(family.m(), family.n())?;
            let g = commutator.dimension();
            let word = |idx: usize| {
                let letters = vec![(idx / (g * g)) as u32, ((idx / g) % g) as u32, (idx % g) as u32];
                alphabet.render(&Word::new(letters))
            };
            let mut nonzero = 0usize;
            for col in 0..commutator.size() {
                for row in 0..commutator.size() {
                    let v = commutator.get(row, col);
                    if v != 0 {
                        nonzero += 1;
                        if report.witnesses.len() < 10 {
                            report.witnesses.push(format!("{} -> {v} {}", word(col), word(row)));
                        }
                    }
                }
            }
            report.data = json!({"dimension": g, "nonzero_entries": nonzero});
            report
        }
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
