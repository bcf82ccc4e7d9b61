//! Text, JSON and CSV renderings. JSON is one pretty-printed document per
//! invocation with big integers as decimal strings; CSV always has a header.
//! Wall-clock times appear in text output only.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::json;

use hdepth_core::family::{FamilyRecord, WitnessOrder, WitnessOutcome};
use hdepth_core::hilbert::HdepthResult;
use hdepth_core::ideal::SquarefreeIdeal;
use hdepth_core::verify::{CampaignReport, LemmaReport, OracleReport, ProofTable};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Output(pub String);

fn to_json<T: Serialize + ?Sized>(value: &T) -> Output {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    Output(s)
}

fn to_csv<I, R>(header: &[&str], rows: I) -> Output
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    let bytes = w.into_inner().expect("in-memory flush");
    Output(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

fn explain_text(out: &mut String, label: &str, r: &HdepthResult) {
    let row: Vec<String> = r.witness_beta.values.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(out, "  {label} witness β^{}: [{}]", r.hdepth, row.join(", "));
    for c in &r.failure_certificates {
        let _ = writeln!(out, "  {label} q={}: β_{}^{} = {} < 0", c.q, c.k, c.q, c.value);
    }
}

pub fn hdepth(
    fmt: Format,
    ideal: &SquarefreeIdeal,
    quotient: Option<&HdepthResult>,
    whole: Option<&HdepthResult>,
    explain: bool,
) -> Output {
    let targets: Vec<(&str, &HdepthResult)> = [("quotient", quotient), ("ideal", whole)]
        .into_iter()
        .filter_map(|(name, r)| r.map(|r| (name, r)))
        .collect();
    match fmt {
        Format::Text => {
            let mut out = String::new();
            for (name, r) in &targets {
                let label = if *name == "quotient" { "hdepth(S/I)" } else { "hdepth(I)" };
                let _ = writeln!(out, "{label} = {}", r.hdepth);
                if explain {
                    explain_text(&mut out, label, r);
                }
            }
            Output(out)
        }
        Format::Json => {
            let mut doc = json!({ "input": ideal });
            for (name, r) in &targets {
                doc[*name] = if explain {
                    serde_json::to_value(r).expect("serializable")
                } else {
                    json!({ "hdepth": r.hdepth })
                };
            }
            to_json(&doc)
        }
        Format::Csv => {
            if explain {
                let rows = targets.iter().flat_map(|(name, r)| {
                    let witness = r.witness_beta.values.iter().enumerate().map(move |(k, v)| {
                        vec![name.to_string(), "witness".into(), r.hdepth.to_string(), k.to_string(), v.to_string()]
                    });
                    let certs = r.failure_certificates.iter().map(move |c| {
                        vec![name.to_string(), "failure".into(), c.q.to_string(), c.k.to_string(), c.value.to_string()]
                    });
                    witness.chain(certs)
                });
                to_csv(&["target", "kind", "q", "k", "beta"], rows)
            } else {
                let rows = targets.iter().map(|(name, r)| vec![name.to_string(), r.hdepth.to_string()]);
                to_csv(&["target", "hdepth"], rows)
            }
        }
    }
}

fn record_fields(r: &FamilyRecord) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.m.to_string(),
        r.q.to_string(),
        r.h_ideal.to_string(),
        r.d.to_string(),
    ]
}

const RECORD_HEADER: [&str; 5] = ["n", "m", "q", "h_ideal", "d"];

pub fn family_records(fmt: Format, records: &[FamilyRecord]) -> Output {
    match fmt {
        Format::Text => {
            let mut out = String::new();
            for r in records {
                let _ = writeln!(
                    out,
                    "I_{{{},{}}}: hdepth(S/I) = {}, hdepth(I) = {}, d = {}",
                    r.n, r.m, r.q, r.h_ideal, r.d
                );
            }
            Output(out)
        }
        Format::Json if records.len() == 1 => to_json(&records[0]),
        Format::Json => to_json(records),
        Format::Csv => to_csv(&RECORD_HEADER, records.iter().map(record_fields)),
    }
}

pub fn witnesses(fmt: Format, outcomes: &[WitnessOutcome], order: WitnessOrder, n_cap: usize) -> Output {
    match fmt {
        Format::Text => {
            let mut out = format!("{:>5}  {:>10}  {:>5}  {:>7}\n", "d", "(n,m)", "q", "h_ideal");
            for o in outcomes {
                let line = match o {
                    WitnessOutcome::Found { d, record: r } => {
                        format!("{d:>5}  {:>10}  {:>5}  {:>7}", format!("({},{})", r.n, r.m), r.q, r.h_ideal)
                    }
                    WitnessOutcome::Unconfirmed { d, n_cap, record: r } => format!(
                        "{d:>5}  {:>10}  {:>5}  {:>7}  (smaller q possible beyond n = {n_cap})",
                        format!("({},{})", r.n, r.m),
                        r.q,
                        r.h_ideal
                    ),
                    WitnessOutcome::NotFound { d, n_cap } => format!("{d:>5}  none with n <= {n_cap}"),
                };
                out.push_str(&line);
                out.push('\n');
            }
            Output(out)
        }
        Format::Json => to_json(&json!({ "order": order, "n_cap": n_cap, "witnesses": outcomes })),
        // only settled rows have a well-defined (n, m); the exit code flags the rest
        Format::Csv => to_csv(
            &RECORD_HEADER,
            outcomes.iter().filter_map(WitnessOutcome::record).map(record_fields),
        ),
    }
}

pub fn lemma(fmt: Format, r: &LemmaReport) -> Output {
    match fmt {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{} at n={} (q={}): {}", r.lemma, r.n, r.q, r.inequality);
            if r.weakened {
                let _ = writeln!(out, "  beta >= 0 constraints dropped");
            }
            let _ = writeln!(
                out,
                "  explored {} nodes, {} feasible vectors, {} violations{} in {:.3}s",
                r.explored,
                r.feasible,
                r.violation_count,
                if r.truncated { ", TRUNCATED" } else { "" },
                r.wall_time.as_secs_f64()
            );
            for v in &r.violations {
                let _ = writeln!(out, "  violation: alpha = {v:?}");
            }
            let verdict = if r.violation_count > 0 {
                "violated"
            } else if r.truncated {
                "inconclusive (node cap reached)"
            } else {
                "certified"
            };
            let _ = writeln!(out, "  {verdict}");
            Output(out)
        }
        Format::Json => to_json(r),
        Format::Csv => to_csv(
            &["lemma", "n", "q", "weakened", "explored", "feasible", "violations", "truncated"],
            [[
                r.lemma.clone(),
                r.n.to_string(),
                r.q.to_string(),
                r.weakened.to_string(),
                r.explored.to_string(),
                r.feasible.to_string(),
                r.violation_count.to_string(),
                r.truncated.to_string(),
            ]],
        ),
    }
}

pub fn tables(fmt: Format, tables: &[ProofTable]) -> Output {
    match fmt {
        Format::Text => {
            let mut out = String::new();
            for t in tables {
                let _ = writeln!(out, "{} (q={})", t.id, t.q);
                for row in &t.rows {
                    let values: Vec<String> = row.computed.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(
                        out,
                        "  {} = {}, x = 1..{}: {}",
                        row.name,
                        row.formula,
                        row.xs.len(),
                        values.join(" ")
                    );
                }
                for c in &t.claims {
                    let _ = writeln!(
                        out,
                        "  n={:>2}: alpha_2 >= {:>3}, {} = {}, {} = {}",
                        c.n, c.alpha2_bound, c.sum_label, c.sum, c.compare_label, c.compare
                    );
                }
                for d in &t.diffs {
                    let tag = if d.known_typo { "known typo" } else { "UNDOCUMENTED" };
                    let _ = writeln!(
                        out,
                        "  diff [{tag}] {}: printed {}, computed {}",
                        d.label, d.printed, d.computed
                    );
                }
                if t.diffs.is_empty() {
                    let _ = writeln!(out, "  all printed values match");
                }
            }
            Output(out)
        }
        Format::Json => to_json(&json!({ "tables": tables })),
        Format::Csv => {
            let rows = tables.iter().flat_map(|t| {
                t.rows.iter().flat_map(move |row| {
                    row.xs.iter().zip(&row.computed).zip(&row.printed).map(move |((x, c), p)| {
                        vec![
                            t.id.to_string(),
                            row.name.clone(),
                            x.to_string(),
                            p.to_string(),
                            c.to_string(),
                        ]
                    })
                })
            });
            to_csv(&["table", "function", "x", "printed", "computed"], rows)
        }
    }
}

pub fn campaign(fmt: Format, r: &CampaignReport) -> Output {
    match fmt {
        Format::Text => {
            let mut out = format!("seed {}, {} trials per n\n", r.config.seed, r.config.trials);
            for row in &r.rows {
                let gaps: Vec<String> = row.gaps.iter().map(|(g, c)| format!("{g}:{c}")).collect();
                let _ = writeln!(
                    out,
                    "  n={:>2}: gaps {{{}}}, sharp rule checked {}, violations {}",
                    row.n,
                    gaps.join(", "),
                    row.sharp_checked,
                    row.violations
                );
            }
            for f in &r.fixtures {
                let _ = writeln!(
                    out,
                    "  fixture {}: hdepth(S/I) = {}, hdepth(I) = {}, gap {} (expected {})",
                    f.name, f.h_quotient, f.h_ideal, f.gap, f.expected_gap
                );
            }
            for c in &r.counterexamples {
                let gens: Vec<String> = c.outcome.ideal.generators().iter().map(|g| g.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  COUNTEREXAMPLE ({}) n={} trial {}: {} with gap {}",
                    c.rule,
                    c.outcome.n,
                    c.outcome.trial,
                    gens.join(", "),
                    c.outcome.gap
                );
            }
            let _ = writeln!(out, "  {}", if r.passed() { "passed" } else { "FAILED" });
            Output(out)
        }
        Format::Json => to_json(r),
        Format::Csv => to_csv(
            &["n", "gap", "count"],
            r.rows.iter().flat_map(|row| {
                row.gaps
                    .iter()
                    .map(move |(g, c)| vec![row.n.to_string(), g.to_string(), c.to_string()])
            }),
        ),
    }
}

pub fn oracle(fmt: Format, r: &OracleReport) -> Output {
    match fmt {
        Format::Text => {
            let mut out = format!(
                "Kruskal–Katona vs colex shadows, n <= {}, k <= {}: {} cases, {} mismatches\n",
                r.n_max,
                r.k_max,
                r.checked,
                r.mismatches.len()
            );
            for m in &r.mismatches {
                let _ = writeln!(out, "  mismatch {m:?}");
            }
            Output(out)
        }
        Format::Json => to_json(r),
        Format::Csv => to_csv(
            &["n_max", "k_max", "checked", "mismatches"],
            [[
                r.n_max.to_string(),
                r.k_max.to_string(),
                r.checked.to_string(),
                r.mismatches.len().to_string(),
            ]],
        ),
    }
}
