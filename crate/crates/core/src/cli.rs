//! Command-line front end. Every subcommand produces a [`Report`], printed
//! as JSON by default.
//!
//! Exit status: 0 when the computation completed and nothing failed to
//! verify, 1 on a verification failure or escalator/scan disagreement, 2 on
//! a usage error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{
    classify_all, escalator_passes, is_universal, ternary_first_gap, ClassificationReport,
    EscalatorVerdict, TernaryGap, DEFAULT_SCAN_BOUND,
};
use crate::exclusions::{excluded_for, verify_lemma, LemmaId};
use crate::identities::{
    verify_base_identities, verify_coefficient_relations, CheckStatus, IdentityCheck, RelationCase,
};
use crate::qseries::{hex_theta_series, phi_series, psi_series};
use crate::repcount::{count_hex, count_quaternary, QuaternaryForm, TernaryMixedForm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_LEMMA_BOUND: u64 = 5000;
pub const DEFAULT_BASE_ORDER: u64 = 10_000;
pub const DEFAULT_RELATION_ORDER: u64 = 3000;

#[derive(Debug, Parser)]
#[command(name = "qforms", version, about = "Representation counts and universality for ax^2 + by^2 + c(z^2+zw+w^2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. CSV is only available for `classify`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Phi,
    Psi,
    Hex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityCase {
    Base,
    Relation(RelationCase),
}

fn parse_identity_case(s: &str) -> Result<IdentityCase, String> {
    if s == "base" {
        return Ok(IdentityCase::Base);
    }
    s.parse::<RelationCase>()
        .map(IdentityCase::Relation)
        .map_err(|e| format!("{e} (expected base, C1a, C1b, C3 or C4)"))
}

fn parse_lemma(s: &str) -> Result<LemmaId, String> {
    s.parse::<LemmaId>().map_err(|e| {
        let known: Vec<&str> = LemmaId::ALL.iter().map(LemmaId::as_str).collect();
        format!("{e} (expected one of {})", known.join(", "))
    })
}

fn parse_form(s: &str) -> Result<QuaternaryForm, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!("expected a,b,c, got `{s}`"));
    };
    let num = |x: &str| x.parse::<u64>().map_err(|e| format!("`{x}`: {e}"));
    QuaternaryForm::normalized(num(a)?, num(b)?, num(c)?).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of representations of n by the quaternary form.
    Count {
        #[arg(long, value_parser = parse_form)]
        form: QuaternaryForm,
        #[arg(long)]
        n: u64,
    },
    /// Number of (z, w) with z^2 + zw + w^2 = n.
    Hex {
        #[arg(long)]
        n: u64,
    },
    /// Coefficients of a theta series up to the given order.
    Series {
        #[arg(long, value_enum)]
        which: SeriesKind,
        #[arg(long)]
        order: u64,
    },
    /// Whether n lies in a lemma's exclusion set.
    Exclusion {
        #[arg(long, value_parser = parse_lemma)]
        lemma: LemmaId,
        #[arg(long)]
        n: u64,
    },
    /// Compare a lemma's exclusion set with brute-force counts.
    VerifyLemma {
        #[arg(long, value_parser = parse_lemma)]
        lemma: LemmaId,
        #[arg(long, default_value_t = DEFAULT_LEMMA_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Check theta identities or the coefficient relations derived from them.
    Identities {
        #[arg(long = "case", value_parser = parse_identity_case)]
        case: IdentityCase,
        /// Defaults to 10000 for `base` and 3000 otherwise.
        #[arg(long)]
        order: Option<u64>,
    },
    /// Scan for the first non-represented integer and run the escalator test.
    Universal {
        #[arg(long, value_parser = parse_form)]
        form: QuaternaryForm,
        #[arg(long, default_value_t = DEFAULT_SCAN_BOUND)]
        bound: u64,
    },
    /// Check that the form represents 1, 2, 3, 5, 6 and 10.
    Escalator {
        #[arg(long, value_parser = parse_form)]
        form: QuaternaryForm,
    },
    /// List every universal triple in a search box.
    Classify {
        #[arg(long)]
        amax: u64,
        #[arg(long)]
        bmax: u64,
        #[arg(long)]
        cmax: u64,
        #[arg(long, default_value_t = DEFAULT_SCAN_BOUND)]
        bound: u64,
    },
    /// First integer not represented by ax^2 + c(y^2 + yz + z^2).
    TernaryGap {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        c: u64,
        #[arg(long, default_value_t = DEFAULT_SCAN_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub subject: String,
    pub n: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub result: Value,
    pub witnesses: Vec<Witness>,
    /// Largest bound up to which everything checked held, if the command
    /// verifies anything.
    pub verified_to: Option<u64>,
}

/// What `run` hands back to `main`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

struct Executed {
    report: Report,
    failed: bool,
    table: String,
    csv: Option<String>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn form_params(f: &QuaternaryForm) -> Value {
    json!([f.a, f.b, f.c])
}

fn form_label(f: &QuaternaryForm) -> String {
    format!("{},{},{}", f.a, f.b, f.c)
}

/// Verified-to bound for a list of checks: everything below the smallest
/// failing index.
fn checks_verified_to(order: u64, checks: &[&IdentityCheck]) -> Option<u64> {
    let first_fail = checks
        .iter()
        .filter_map(|c| match c.status {
            CheckStatus::Failed { n, .. } => Some(n),
            CheckStatus::Verified => None,
        })
        .min();
    match first_fail {
        None => Some(order),
        Some(n) => n.checked_sub(1),
    }
}

fn classification_csv(r: &ClassificationReport) -> String {
    let mut rows: Vec<((u64, u64, u64), Option<u64>)> = r
        .universal_triples
        .iter()
        .map(|&t| (t, None))
        .chain(r.rejected.iter().map(|x| (x.triple, Some(x.witness))))
        .collect();
    rows.sort_by_key(|(t, _)| (t.2, t.0, t.1));
    let mut out = String::from("a,b,c,universal,first_gap\n");
    for ((a, b, c), gap) in rows {
        let gap = gap.map(|g| g.to_string()).unwrap_or_default();
        let _ = writeln!(out, "{a},{b},{c},{},{gap}", gap.is_empty());
    }
    out
}

fn execute(command: &Command) -> crate::Result<Executed> {
    let mut witnesses = Vec::new();
    let mut failed = false;
    let mut csv = None;
    let (name, params, result, verified_to, table) = match command {
        Command::Count { form, n } => {
            let count = count_quaternary(*form, *n);
            (
                "count",
                json!({ "form": form_params(form), "n": n }),
                json!({ "count": count }),
                None,
                format!("r({form}, {n}) = {count}\n"),
            )
        }
        Command::Hex { n } => {
            let count = count_hex(*n);
            (
                "hex",
                json!({ "n": n }),
                json!({ "count": count }),
                None,
                format!("#{{z^2 + zw + w^2 = {n}}} = {count}\n"),
            )
        }
        Command::Series { which, order } => {
            let order_us = *order as usize;
            let (label, s) = match which {
                SeriesKind::Phi => ("phi", phi_series(order_us)),
                SeriesKind::Psi => ("psi", psi_series(order_us)),
                SeriesKind::Hex => ("hex", hex_theta_series(order_us)),
            };
            (
                "series",
                json!({ "which": label, "order": order }),
                json!({ "coeffs": s.coeffs() }),
                None,
                format!("{label}(q) = {s}\n"),
            )
        }
        Command::Exclusion { lemma, n } => {
            let excluded = excluded_for(*lemma, *n);
            let set = lemma.exclusion_set().to_string();
            (
                "exclusion",
                json!({ "lemma": lemma.as_str(), "n": n }),
                json!({ "excluded": excluded, "exclusion_set": set, "form": lemma.shape().to_string() }),
                None,
                format!("{n} {} {{{set}}}\n", if excluded { "is in" } else { "is not in" }),
            )
        }
        Command::VerifyLemma { lemma, bound } => {
            let report = verify_lemma(*lemma, *bound);
            failed = !report.verified();
            for d in &report.discrepancies {
                witnesses.push(Witness {
                    subject: lemma.to_string(),
                    n: d.n,
                });
            }
            let verified_to = match report.discrepancies.first() {
                None => Some(*bound),
                Some(d) => d.n.checked_sub(1),
            };
            let table = format!(
                "{}: {} vs {{{}}} up to {}: {} discrepancies\n",
                report.lemma,
                report.form,
                report.exclusion_set,
                bound,
                report.discrepancies.len()
            );
            (
                "verify-lemma",
                json!({ "lemma": lemma.as_str(), "bound": bound }),
                to_value(&report),
                verified_to,
                table,
            )
        }
        Command::Identities { case, order } => match case {
            IdentityCase::Base => {
                let order = order.unwrap_or(DEFAULT_BASE_ORDER);
                let (one, two) = verify_base_identities(order);
                failed = !(one.verified() && two.verified());
                let verified_to = checks_verified_to(order, &[&one, &two]);
                let mut table = String::new();
                for c in [&one, &two] {
                    let _ = writeln!(table, "{:<50} {:?}", c.identity, c.status);
                    if let CheckStatus::Failed { n, .. } = c.status {
                        witnesses.push(Witness {
                            subject: c.identity.clone(),
                            n,
                        });
                    }
                }
                (
                    "identities",
                    json!({ "case": "base", "order": order }),
                    json!({ "checks": [to_value(&one), to_value(&two)] }),
                    verified_to,
                    table,
                )
            }
            IdentityCase::Relation(rel) => {
                let order = order.unwrap_or(DEFAULT_RELATION_ORDER);
                let report = verify_coefficient_relations(*rel, order);
                failed = !report.verified();
                let all: Vec<&IdentityCheck> =
                    report.enumeration.iter().chain(&report.series).collect();
                let verified_to = if report.routes_agree() {
                    checks_verified_to(order, &all)
                } else {
                    None
                };
                let mut table = String::new();
                for c in &all {
                    let _ = writeln!(table, "{:<70} {:?}", c.identity, c.status);
                    if let CheckStatus::Failed { n, .. } = c.status {
                        witnesses.push(Witness {
                            subject: c.identity.clone(),
                            n,
                        });
                    }
                }
                let _ = writeln!(table, "routes agree: {}", report.routes_agree());
                let mut result = to_value(&report);
                result["routes_agree"] = json!(report.routes_agree());
                (
                    "identities",
                    json!({ "case": rel.as_str(), "order": order }),
                    result,
                    verified_to,
                    table,
                )
            }
        },
        Command::Universal { form, bound } => {
            let report = is_universal(*form, *bound)?;
            failed = report.theorem_violation;
            if let Some(n) = report.first_gap {
                witnesses.push(Witness {
                    subject: form_label(form),
                    n,
                });
            }
            let verified_to = match report.first_gap {
                None => Some(*bound),
                Some(n) => n.checked_sub(1),
            };
            let table = format!(
                "{form}: first gap {}, escalator {}{}\n",
                report
                    .first_gap
                    .map_or_else(|| format!("none up to {bound}"), |n| n.to_string()),
                match report.escalator {
                    Some(EscalatorVerdict::Fail { witness }) => format!("fails at {witness}"),
                    _ => "passes".to_string(),
                },
                if report.theorem_violation {
                    " (VIOLATION)"
                } else {
                    ""
                }
            );
            let mut result = to_value(&report);
            result["universal"] = json!(report.universal_to_bound() && !report.theorem_violation);
            (
                "universal",
                json!({ "form": form_params(form), "bound": bound }),
                result,
                verified_to,
                table,
            )
        }
        Command::Escalator { form } => {
            let verdict = escalator_passes(*form);
            if let EscalatorVerdict::Fail { witness } = verdict {
                witnesses.push(Witness {
                    subject: form_label(form),
                    n: witness,
                });
            }
            (
                "escalator",
                json!({ "form": form_params(form) }),
                to_value(&verdict),
                None,
                match verdict {
                    EscalatorVerdict::Pass => format!("{form}: represents 1, 2, 3, 5, 6, 10\n"),
                    EscalatorVerdict::Fail { witness } => format!("{form}: misses {witness}\n"),
                },
            )
        }
        Command::Classify {
            amax,
            bmax,
            cmax,
            bound,
        } => {
            let report = classify_all(*amax, *bmax, *cmax, *bound)?;
            failed = !report.theorem_violations.is_empty();
            for r in &report.rejected {
                witnesses.push(Witness {
                    subject: format!("{},{},{}", r.triple.0, r.triple.1, r.triple.2),
                    n: r.witness,
                });
            }
            let mut table = format!(
                "{} universal triples (a<={amax}, b<={bmax}, c<={cmax}, scanned to {bound}):\n",
                report.universal_triples.len()
            );
            for (a, b, c) in &report.universal_triples {
                let _ = writeln!(table, "  ({a},{b},{c})");
            }
            if !report.theorem_violations.is_empty() {
                let _ = writeln!(table, "violations: {:?}", report.theorem_violations);
            }
            csv = Some(classification_csv(&report));
            (
                "classify",
                json!({ "amax": amax, "bmax": bmax, "cmax": cmax, "bound": bound }),
                to_value(&report),
                Some(*bound),
                table,
            )
        }
        Command::TernaryGap { a, c, bound } => {
            let form = TernaryMixedForm::new(*a, *c)?;
            let gap = ternary_first_gap(form, *bound);
            let table = match gap {
                TernaryGap::Gap { n } => {
                    witnesses.push(Witness {
                        subject: format!("{a},{c}"),
                        n,
                    });
                    format!("{form}: first gap {n}\n")
                }
                TernaryGap::Inconclusive { bound } => {
                    format!("{form}: no gap up to {bound} (inconclusive)\n")
                }
            };
            (
                "ternary-gap",
                json!({ "a": a, "c": c, "bound": bound }),
                to_value(&gap),
                None,
                table,
            )
        }
    };
    Ok(Executed {
        report: Report {
            command: name.to_string(),
            params,
            result,
            witnesses,
            verified_to,
        },
        failed,
        table,
        csv,
    })
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(rendered)
            } else {
                Outcome {
                    status: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    if cli.format == Format::Csv && !matches!(cli.command, Command::Classify { .. }) {
        return Outcome::usage("error: --format csv is only supported by `classify`\n");
    }
    let executed = match execute(&cli.command) {
        Ok(x) => x,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let stdout = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&executed.report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => executed.csv.unwrap_or_default(),
        Format::Table => executed.table,
    };
    Outcome {
        status: if executed.failed { EXIT_FAILED } else { EXIT_OK },
        stdout,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("qforms").chain(args.iter().copied()))
    }

    #[test]
    fn form_parsing() {
        assert_eq!(parse_form("1,2,3").unwrap(), QuaternaryForm::new(1, 2, 3).unwrap());
        assert_eq!(parse_form("5, 2, 1").unwrap(), QuaternaryForm::new(2, 5, 1).unwrap());
        assert!(parse_form("1,2").is_err());
        assert!(parse_form("0,2,3").is_err());
        assert!(parse_form("a,2,3").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["verify-lemma", "--lemma", "L999"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["identities", "--case", "C9"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["count", "--form", "1,1", "--n", "3"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["hex", "--n", "3", "--format", "csv"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["universal", "--form", "1,1,1", "--bound", "5"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["classify", "--amax", "1", "--bmax", "10", "--cmax", "4"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["ternary-gap", "--a", "0", "--c", "1"]).status, EXIT_USAGE);
        let out = run_args(&["bogus"]);
        assert_eq!(out.status, EXIT_USAGE);
        assert!(out.stdout.is_empty());
    }

    #[test]
    fn count_report() {
        let out = run_args(&["count", "--form", "1,1,1", "--n", "0"]);
        assert_eq!(out.status, EXIT_OK);
        let report: Report = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(report.command, "count");
        assert_eq!(report.result["count"], 1);
    }

    #[test]
    fn escalator_witness_in_report() {
        let out = run_args(&["escalator", "--form", "1,1,3"]);
        assert_eq!(out.status, EXIT_OK);
        let report: Report = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(report.witnesses, vec![Witness { subject: "1,1,3".into(), n: 6 }]);
    }

    #[test]
    fn verified_to_stops_below_failure() {
        let check = IdentityCheck {
            identity: "x".into(),
            order: 10,
            status: CheckStatus::Failed { n: 4, lhs: 1, rhs: 0 },
        };
        assert_eq!(checks_verified_to(10, &[&check]), Some(3));
        let ok = IdentityCheck {
            status: CheckStatus::Verified,
            ..check.clone()
        };
        assert_eq!(checks_verified_to(10, &[&ok]), Some(10));
    }
}
