use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ssvote_core::axioms::{self, Axiom, CheckOptions};
use ssvote_core::rules::RuleSpec;
use ssvote_core::selfselect::{check_binary_ss, check_universal_ss, SsOptions};
use ssvote_core::theorems::{self, seed_range, CampaignReport};
use ssvote_core::{parse_profile, DomainKind, Error, OrbitTable, Universe};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ssvote",
    version,
    about = "Exhaustive self-selectivity and axiom checks for voting rules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of voters.
    #[arg(short = 'n', long = "voters", global = true, default_value_t = 3)]
    n: usize,

    /// Largest number of alternatives enumerated.
    #[arg(long, global = true, default_value_t = 3)]
    tau_max: usize,

    /// Admissible profiles [default: unrestricted; condorcet for theorem2/corollary2].
    #[arg(long, global = true)]
    domain: Option<DomainKind>,

    /// Largest rule-set size for universal checks [default: tau-max].
    #[arg(short = 'k', global = true)]
    k: Option<usize>,

    /// Number of sampled rules in campaigns.
    #[arg(long, global = true, default_value_t = 100)]
    seeds: usize,

    /// First seed; campaigns use seed-base, seed-base+1, ...
    #[arg(long, global = true, default_value_t = 0)]
    seed_base: u64,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Count an empty compatible set as self-selection.
    #[arg(long, global = true)]
    vacuous_pass: bool,

    /// Check anonymity and neutrality against every permutation, not just generators.
    #[arg(long, global = true)]
    full_group: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the alternative a rule selects at the profile in FILE.
    Eval { file: PathBuf, rule: String },
    /// Check axioms on every admissible profile of the universe.
    Axioms {
        rule: String,
        /// Axiom to check (repeatable; default: all).
        #[arg(long = "axiom")]
        axioms: Vec<String>,
    },
    /// Check binary (or universal) self-selectivity.
    Selfselect {
        rule: String,
        #[arg(long)]
        universal: bool,
        /// Ignore rivals that pick the same alternative as the rule.
        #[arg(long)]
        skip_same_outcome: bool,
    },
    /// Run a verification campaign.
    Verify {
        campaign: Campaign,
        /// Also write the report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print a rule's orbit table on the universe.
    ExportTable { rule: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Campaign {
    Example1,
    Theorem1,
    Corollary1,
    Theorem2,
    Corollary2,
    Claims,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain { .. } | Error::MissingOrbit { .. } => EXIT_DOMAIN,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

impl Cli {
    fn universe(&self, default_domain: DomainKind) -> Result<Universe, Error> {
        Universe::new(self.n, self.tau_max, self.domain.unwrap_or(default_domain))
    }

    fn k(&self) -> Result<usize, Error> {
        let k = self.k.unwrap_or(self.tau_max);
        if k < 2 || k > self.tau_max {
            return Err(Error::Precondition(format!(
                "-k must satisfy 2 <= k <= tau-max ({}), got {k}",
                self.tau_max
            )));
        }
        Ok(k)
    }

    fn emit(&self, text: &str, value: Value) {
        match self.format {
            Format::Text => println!("{}", text.trim_end()),
            Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Eval { file, rule } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let profile = parse_profile(&text)?;
            let spec: RuleSpec = rule.parse()?;
            let universe = Universe::new(
                profile.voters(),
                cli.tau_max.max(profile.size()),
                cli.domain.unwrap_or(DomainKind::Unrestricted),
            )?;
            let rule = spec.build(&universe)?;
            let chosen = rule.evaluate(&profile)?;
            let label = profile.label(chosen);
            cli.emit(label, json!({ "rule": rule.name(), "chosen": label }));
            Ok(true)
        }
        Command::Axioms {
            rule,
            axioms: names,
        } => {
            let universe = cli.universe(DomainKind::Unrestricted)?;
            let list: Vec<Axiom> = if names.is_empty() {
                Axiom::ALL.to_vec()
            } else {
                names.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
            };
            let rule = rule.parse::<RuleSpec>()?.build(&universe)?;
            let opts = CheckOptions {
                full_group: cli.full_group,
            };
            let verdicts = list
                .iter()
                .map(|&a| axioms::check(a, &rule, &universe, opts))
                .collect::<Result<Vec<_>, _>>()?;
            let text: Vec<String> = verdicts.iter().map(ToString::to_string).collect();
            let json: Vec<Value> = verdicts.iter().map(|v| v.to_json()).collect();
            cli.emit(&text.join("\n"), Value::Array(json));
            Ok(verdicts.iter().all(|v| v.holds))
        }
        Command::Selfselect {
            rule,
            universal,
            skip_same_outcome,
        } => {
            let universe = cli.universe(DomainKind::Unrestricted)?;
            let k = if *universal { Some(cli.k()?) } else { None };
            let rule = rule.parse::<RuleSpec>()?.build(&universe)?;
            let opts = SsOptions {
                vacuous_pass: cli.vacuous_pass,
                skip_same_outcome: *skip_same_outcome,
                ..SsOptions::default()
            };
            let verdict = match k {
                Some(k) => check_universal_ss(&rule, &universe, k, opts)?,
                None => check_binary_ss(&rule, &universe, opts)?,
            };
            cli.emit(&verdict.to_string(), verdict.to_json());
            Ok(verdict.holds)
        }
        Command::Verify { campaign, output } => {
            let seeds = seed_range(cli.seed_base, cli.seeds);
            let report: CampaignReport = match campaign {
                Campaign::Example1 => theorems::replay_example1()?,
                Campaign::Theorem1 => theorems::verify_theorem1(
                    &cli.universe(DomainKind::Unrestricted)?,
                    &seeds,
                    cli.k()?,
                )?,
                Campaign::Corollary1 => {
                    theorems::verify_corollary1(&cli.universe(DomainKind::Unrestricted)?, &seeds)?
                }
                Campaign::Theorem2 => {
                    theorems::verify_theorem2(&cli.universe(DomainKind::Condorcet)?, &seeds)?
                }
                Campaign::Corollary2 => theorems::verify_corollary2(
                    &cli.universe(DomainKind::Condorcet)?,
                    &seeds,
                    cli.k()?,
                )?,
                Campaign::Claims => {
                    theorems::verify_claims(&cli.universe(DomainKind::Unrestricted)?, &seeds)?
                }
            };
            let text = report.to_string();
            let json = report.to_json();
            if let Some(path) = output {
                let body = match cli.format {
                    Format::Text => text.clone(),
                    Format::Json => serde_json::to_string_pretty(&json).expect("json"),
                };
                std::fs::write(path, body)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            cli.emit(&text, json);
            Ok(report.passed())
        }
        Command::ExportTable { rule } => {
            let universe = cli.universe(DomainKind::Unrestricted)?;
            let rule = rule.parse::<RuleSpec>()?.build(&universe)?;
            let table = OrbitTable::from_rule(&rule, &universe)?;
            let text = table.to_text();
            cli.emit(&text, json!({ "rule": rule.name(), "table": text }));
            Ok(true)
        }
    }
}
