//! Command-line entry point: ingest variety profiles and generator tables,
//! dispatch computations, emit JSON (default) or text reports.
//!
//! Exit codes: 0 success, 1 usage/parse error, 2 mathematical obstruction
//! (divisibility violation, classification exclusion, failed certificate).

mod input;
mod render;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use motivic_core::classify::{classify_profile, ClassifyOptions, VarietyProfile};
use motivic_core::error::Error as CoreError;
use motivic_core::generate::{expressed_as_polynomial_of, GenerationOutcome};
use motivic_core::ideal::kernel_of_map;
use motivic_core::measure::{measure, MeasureKind};
use motivic_core::motivic::{symmetric_powers, GeneratorTable, MotivicClass};
use motivic_core::poly::{MultiPoly, UniPoly};
use motivic_core::study::{run_study, STUDY_NAMES};

use input::{evaluate_check_input, CheckInput, CheckReport};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(
    name = "motivic",
    version,
    about = "Exact computations in the Grothendieck ring of varieties: symmetric powers, motivic measures, the Y-F(Y) relation, classifiers, and presentation kernels"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Attach citation strings to verdicts and certificates.
    #[arg(long, global = true)]
    explain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetric powers [c^(1)], ..., [c^(n)] of a pure-L class.
    SymPower {
        /// Class expression, e.g. "1 + 7L + L^2".
        class: String,
        /// Highest power to compute (capped by MOTIVIC_TRUNCATION, default 8).
        order: u32,
    },
    /// Apply a motivic measure to a class.
    Measure {
        /// Class expression; bracketed names ([V]) refer to table generators.
        class: String,
        #[arg(long, value_enum, default_value_t = MeasureArg::Poincare)]
        kind: MeasureArg,
        /// Prime power for point counts.
        #[arg(long)]
        q: Option<u64>,
        /// Generator table TOML; defaults to the builtin genus-4 table.
        #[arg(long)]
        table: Option<std::path::PathBuf>,
    },
    /// Run the Y-F(Y) relation solver on a Poincare polynomial, a class, or
    /// a profile file.
    CheckYfy {
        /// Poincare polynomial in t, e.g. "1 + 7*t^2 + t^4".
        #[arg(long)]
        poincare: Option<String>,
        /// Class expression in L, e.g. "1 + 7L + L^2".
        #[arg(long)]
        class: Option<String>,
        /// Dimension of Y (required with --poincare or --class).
        #[arg(long)]
        m: Option<u32>,
        /// Class of the singular locus (default 0).
        #[arg(long)]
        sing: Option<String>,
        /// TOML file with [poincare] / [class] / [profile] sections.
        #[arg(long)]
        profile: Option<std::path::PathBuf>,
        /// Directory of profile TOML files, evaluated concurrently, output
        /// ordered by filename.
        #[arg(long)]
        batch: Option<std::path::PathBuf>,
    },
    /// Classify a declared variety profile.
    Classify {
        #[arg(long)]
        profile: std::path::PathBuf,
        #[arg(long)]
        assume_hartshorne: bool,
        #[arg(long)]
        assume_ddj: bool,
        /// Y lies on some hypersurface of this degree (gate 2d - 4 <= n).
        #[arg(long)]
        containing_hypersurface_degree: Option<i64>,
    },
    /// Kernel of a polynomial ring map t_i -> image_i(x), as a reduced
    /// Groebner basis.
    Kernel {
        /// Assignment "t1=1+7x+x^2"; repeatable, order fixes the variables.
        #[arg(long = "map", required = true)]
        maps: Vec<String>,
        /// Name of the retained coefficient variable.
        #[arg(long, default_value = "x")]
        var: String,
        /// Optional membership candidate to divide against the kernel.
        #[arg(long)]
        member: Option<String>,
    },
    /// Run a named end-to-end case study.
    CaseStudy {
        /// One of: cubic-surface, quadric-family, plane-family,
        /// odp-threefold, non-generation.
        name: String,
        /// Dimension for the family studies.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Decide whether a target relation is A(relation) for scalar A with
    /// zero constant term.
    GeneratedBy {
        /// Target polynomial over L, T1, T2, T3.
        #[arg(long)]
        target: String,
        /// Generating relation (default: the Y-F(Y) relation for a surface).
        #[arg(long, default_value = "T3 - (1 + L^2)*T2 - L^2*T1")]
        relation: String,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MeasureArg {
    Poincare,
    HodgeDeligne,
    PointCount,
}

struct Outcome {
    stdout: String,
    obstructed: bool,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(outcome) => {
            println!("{}", outcome.stdout);
            std::process::exit(if outcome.obstructed { 2 } else { 0 });
        }
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err.downcast_ref::<CoreError>() {
                Some(core) if core.is_obstruction() => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn truncation_cap() -> u32 {
    std::env::var("MOTIVIC_TRUNCATION")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(8)
}

fn emit<T: Serialize>(format: Format, value: &T, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string(value).expect("serializable report"),
        Format::Text => text,
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let format = cli.format;
    let explain = cli.explain;
    match cli.command {
        Command::SymPower { class, order } => {
            let cap = truncation_cap();
            if order == 0 || order > cap {
                anyhow::bail!("order must be between 1 and {cap} (MOTIVIC_TRUNCATION)");
            }
            let c = MotivicClass::parse(&class)?;
            let powers = symmetric_powers(&c, order)?;
            #[derive(Serialize)]
            struct Doc {
                class: String,
                order: u32,
                powers: Vec<String>,
            }
            let doc = Doc {
                class: c.to_canonical(),
                order,
                powers: powers.iter().map(|p| p.to_canonical()).collect(),
            };
            let text = render::sym_powers(&doc.class, &doc.powers);
            Ok(Outcome {
                stdout: emit(format, &doc, text),
                obstructed: false,
            })
        }
        Command::Measure {
            class,
            kind,
            q,
            table,
        } => {
            let table = load_table(table.as_deref())?;
            let c = MotivicClass::parse(&class)?;
            let kind = match kind {
                MeasureArg::Poincare => MeasureKind::Poincare,
                MeasureArg::HodgeDeligne => MeasureKind::HodgeDeligne,
                MeasureArg::PointCount => MeasureKind::PointCount {
                    q: q.ok_or_else(|| anyhow::anyhow!("--q is required for point counts"))?,
                },
            };
            let value = measure(&c, &kind, &table)?;
            #[derive(Serialize)]
            struct Doc {
                class: String,
                #[serde(flatten)]
                kind: MeasureKind,
                value: String,
            }
            let doc = Doc {
                class: c.to_canonical(),
                kind,
                value: value.to_canonical(),
            };
            let text = format!("{} = {}", doc.class, doc.value);
            Ok(Outcome {
                stdout: emit(format, &doc, text),
                obstructed: false,
            })
        }
        Command::CheckYfy {
            poincare,
            class,
            m,
            sing,
            profile,
            batch,
        } => {
            if let Some(dir) = batch {
                return run_batch(&dir, format, explain);
            }
            let input = if let Some(path) = profile {
                CheckInput::from_toml_str(&std::fs::read_to_string(&path)?)?
            } else {
                CheckInput::from_flags(poincare.as_deref(), class.as_deref(), m, sing.as_deref())?
            };
            let report = evaluate_check_input(&input, explain)?;
            let obstructed = report.obstructed();
            let text = render::check_report(&report);
            Ok(Outcome {
                stdout: emit(format, &report, text),
                obstructed,
            })
        }
        Command::Classify {
            profile,
            assume_hartshorne,
            assume_ddj,
            containing_hypersurface_degree,
        } => {
            let raw = std::fs::read_to_string(&profile)?;
            // accept either a bare profile or a check-yfy file with a
            // [profile] section
            let profile = match VarietyProfile::from_toml_str(&raw) {
                Ok(p) => p,
                Err(_) => CheckInput::from_toml_str(&raw)?
                    .profile
                    .ok_or_else(|| anyhow::anyhow!("no [profile] section in input"))?,
            };
            let opts = ClassifyOptions {
                assume_hartshorne,
                assume_ddj,
                containing_hypersurface_degree,
            };
            let mut verdict = classify_profile(&profile, &opts);
            if !explain {
                verdict.citations.clear();
            }
            let obstructed = matches!(
                verdict.branch,
                motivic_core::classify::Branch::ExcludedFamilyCase
                    | motivic_core::classify::Branch::Excluded22Ci
                    | motivic_core::classify::Branch::ExcludedNumeric
            );
            let text = render::verdict(&verdict);
            Ok(Outcome {
                stdout: emit(format, &verdict, text),
                obstructed,
            })
        }
        Command::Kernel { maps, var, member } => {
            let mut images = Vec::new();
            for map in &maps {
                let (name, expr) = map.split_once('=').ok_or_else(|| {
                    anyhow::anyhow!("--map expects `name=expression`, got `{map}`")
                })?;
                images.push((name.trim().to_string(), UniPoly::parse(expr, &var)?));
            }
            let (_, gb) = kernel_of_map(&images, &var)?;
            let mut vars: Vec<String> = images.iter().map(|(n, _)| n.clone()).collect();
            vars.push(var.clone());
            #[derive(Serialize)]
            struct Membership {
                candidate: String,
                member: bool,
                remainder: String,
            }
            #[derive(Serialize)]
            struct Doc {
                variables: Vec<String>,
                order: String,
                basis: Vec<String>,
                #[serde(skip_serializing_if = "Option::is_none")]
                membership: Option<Membership>,
            }
            let membership = match member {
                Some(expr) => {
                    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
                    let candidate = MultiPoly::parse(&expr, &var_refs)?;
                    let (is_member, remainder) = gb.member(&candidate);
                    Some(Membership {
                        candidate: candidate.to_canonical(),
                        member: is_member,
                        remainder: remainder.to_canonical(),
                    })
                }
                None => None,
            };
            let obstructed = membership.as_ref().is_some_and(|m| !m.member);
            let doc = Doc {
                order: format!("lex: {}", vars.join(" > ")),
                variables: vars,
                basis: gb.basis.iter().map(|p| p.to_canonical()).collect(),
                membership,
            };
            let text = render::kernel(&doc.order, &doc.basis);
            Ok(Outcome {
                stdout: emit(format, &doc, text),
                obstructed,
            })
        }
        Command::CaseStudy { name, m } => {
            if !STUDY_NAMES.contains(&name.as_str()) {
                anyhow::bail!(
                    "unknown case study `{name}`; available: {}",
                    STUDY_NAMES.join(", ")
                );
            }
            let mut cert = run_study(&name, m)?;
            if !explain {
                cert = cert.strip_citations();
            }
            let obstructed = !cert.overall;
            let text = render::certificate(&cert);
            Ok(Outcome {
                stdout: emit(format, &cert, text),
                obstructed,
            })
        }
        Command::GeneratedBy { target, relation } => {
            let ring = ["L", "T1", "T2", "T3"];
            let target = MultiPoly::parse(&target, &ring)?;
            let relation = MultiPoly::parse(&relation, &ring)?;
            let outcome = expressed_as_polynomial_of(&target, &relation, &["T1", "T2", "T3"])?;
            let obstructed = matches!(outcome, GenerationOutcome::NotGenerated { .. });
            let text = render::generation(&outcome);
            Ok(Outcome {
                stdout: emit(format, &outcome, text),
                obstructed,
            })
        }
    }
}

fn load_table(path: Option<&std::path::Path>) -> anyhow::Result<GeneratorTable> {
    match path {
        Some(p) => Ok(GeneratorTable::from_toml_str(&std::fs::read_to_string(p)?)?),
        None => Ok(GeneratorTable::odp_standard()),
    }
}

fn run_batch(dir: &std::path::Path, format: Format, explain: bool) -> anyhow::Result<Outcome> {
    let mut files: Vec<std::path::PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "toml"))
        .collect();
    files.sort();
    let inputs: Vec<(String, CheckInput)> = files
        .iter()
        .map(|path| -> anyhow::Result<(String, CheckInput)> {
            let name = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            let input = CheckInput::from_toml_str(&std::fs::read_to_string(path)?)?;
            Ok((name, input))
        })
        .collect::<anyhow::Result<_>>()?;

    #[derive(Serialize)]
    struct Entry {
        file: String,
        report: CheckReport,
    }
    let evaluated: Vec<motivic_core::Result<CheckReport>> =
        motivic_core::batch::map_batch(&inputs, |(_, input)| evaluate_check_input(input, explain));
    let mut entries = Vec::new();
    let mut obstructed = false;
    for ((name, _), report) in inputs.iter().zip(evaluated) {
        let report = report?;
        obstructed |= report.obstructed();
        entries.push(Entry {
            file: name.clone(),
            report,
        });
    }
    let text = entries
        .iter()
        .map(|e| format!("== {}\n{}", e.file, render::check_report(&e.report)))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome {
        stdout: emit(format, &entries, text),
        obstructed,
    })
}
