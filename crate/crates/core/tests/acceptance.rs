//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use hdepth_core::combinatorics::chu_vandermonde_check;
use hdepth_core::family::{
    family_alpha, family_beta, family_hdepth_ideal, family_hdepth_quotient, family_ideal,
    family_records, minimal_witnesses, RowCheck, WitnessOrder,
};
use hdepth_core::hilbert::{beta_sum_identity_check, beta_table, hdepth};
use hdepth_core::ideal::{alpha_of_complement, alpha_of_ideal};
use hdepth_core::verify::{
    certify_lemma_with, for_each_minimal_ideal, kk_oracle_sweep, principal_equivalence_holds,
    proof_table, random_ideal, run_campaign, CampaignConfig, LemmaId, TableId, DEFAULT_NODE_CAP,
    KNOWN_TYPOS,
};
use hdepth_core::Execution;

/// `(n, m, d, q)` as tabulated for the family `I_{n,m}`.
const TABLE: [(usize, usize, i64, usize); 16] = [
    (6, 2, 0, 4),
    (10, 2, 1, 7),
    (15, 3, 2, 11),
    (20, 4, 3, 15),
    (25, 5, 4, 19),
    (30, 6, 5, 23),
    (35, 5, 6, 26),
    (40, 8, 7, 31),
    (45, 9, 8, 35),
    (51, 7, 9, 38),
    (55, 11, 10, 43),
    (106, 20, 20, 83),
    (139, 17, 30, 108),
    (161, 19, 40, 130),
    (183, 21, 50, 152),
    (350, 7, 100, 279),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn table_rows() -> Outcome {
    let pairs: Vec<(usize, usize)> = TABLE.iter().map(|r| (r.0, r.1)).collect();
    let records = family_records(&pairs, RowCheck::AllK, Execution::Parallel).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    for (row, rec) in TABLE.iter().zip(&records) {
        if (rec.d, rec.q) != (row.2, row.3) {
            problems.push(format!(
                "({},{}): expected d={} q={}, computed d={} q={}",
                row.0, row.1, row.2, row.3, rec.d, rec.q
            ));
        }
    }
    let ds: Vec<i64> = TABLE.iter().map(|r| r.2).collect();
    let witnesses = minimal_witnesses(&ds, 350, WitnessOrder::MinQ, RowCheck::OddShift, Execution::Parallel);
    for (row, w) in TABLE.iter().zip(&witnesses) {
        let got = w.record().map(|r| (r.n, r.m, r.q));
        if got != Some((row.0, row.1, row.3)) {
            problems.push(format!("witness d={}: expected ({},{}) q={}, computed {w:?}", row.2, row.0, row.1, row.3));
        }
    }
    if problems.is_empty() {
        Ok("16 rows evaluated and re-found as minimal witnesses".into())
    } else {
        Err(format!("{} mismatches:\n    {}", problems.len(), problems.join("\n    ")))
    }
}

fn witnesses() -> Outcome {
    let ds = [0, 1, 2, 3];
    for order in [WitnessOrder::Lex, WitnessOrder::MinQ] {
        let found = minimal_witnesses(&ds, 40, order, RowCheck::AllK, Execution::Parallel);
        for (w, row) in found.iter().zip(&TABLE) {
            let got = w.record().map(|r| (r.n, r.m, r.q));
            if got != Some((row.0, row.1, row.3)) {
                return Err(format!("{order:?} d={}: {w:?}", row.2));
            }
        }
    }
    Ok("d=0..3 -> (6,2,4) (10,2,7) (15,3,11) (20,4,15)".into())
}

fn cross_module() -> Outcome {
    let mut pairs = 0;
    for n in 2..=12 {
        for m in 1..n {
            let err = |what: &str| format!("n={n} m={m}: {what}");
            let ideal = family_ideal(n, m).map_err(|e| e.to_string())?;
            let enumerated = alpha_of_complement(&ideal).map_err(|e| e.to_string())?;
            let closed = family_alpha(n, m).map_err(|e| e.to_string())?;
            if enumerated != closed {
                return Err(err("alpha"));
            }
            for q in 0..=n {
                let row = beta_table(&enumerated, q).map_err(|e| e.to_string())?;
                for k in 0..=q {
                    if family_beta(n, m, q, k).map_err(|e| e.to_string())? != row.values[k] {
                        return Err(err(&format!("beta q={q} k={k}")));
                    }
                }
            }
            let general = hdepth(&enumerated).map_err(|e| e.to_string())?.hdepth;
            if family_hdepth_quotient(n, m).map_err(|e| e.to_string())? != general {
                return Err(err("hdepth(S/I)"));
            }
            let ideal_alpha = alpha_of_ideal(&ideal).map_err(|e| e.to_string())?;
            if family_hdepth_ideal(n, m).map_err(|e| e.to_string())?
                != hdepth(&ideal_alpha).map_err(|e| e.to_string())?.hdepth
            {
                return Err(err("hdepth(I)"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs (n <= 12): alpha, beta, both depths agree"))
}

fn principal_equivalence() -> Outcome {
    let mut exhaustive = 0u64;
    let mut failure = None;
    for n in 1..=5 {
        for_each_minimal_ideal(n, |i| {
            exhaustive += 1;
            if failure.is_none() && !principal_equivalence_holds(i).unwrap() {
                failure = Some(i.to_text());
            }
        })
        .map_err(|e| e.to_string())?;
    }
    if let Some(text) = failure {
        return Err(format!("counterexample:\n{text}"));
    }
    let mut random = 0;
    for t in 0..600u64 {
        let n = 2 + (t % 9) as usize;
        let i = random_ideal(n, 1..=2 * n, 1..=n, 0xACCE_0004 + t).map_err(|e| e.to_string())?;
        if !principal_equivalence_holds(&i).map_err(|e| e.to_string())? {
            return Err(format!("counterexample:\n{}", i.to_text()));
        }
        random += 1;
    }
    Ok(format!("{exhaustive} exhaustive (n <= 5) + {random} random (n <= 10) ideals"))
}

fn campaign() -> Outcome {
    let config = CampaignConfig {
        n_values: (4..=10).collect(),
        trials: 1000,
        seed: 7,
    };
    let report = run_campaign(&config, Execution::Parallel).map_err(|e| e.to_string())?;
    if let Some(c) = report.counterexamples.first() {
        return Err(format!("{} counterexamples, first: {c:?}", report.counterexamples.len()));
    }
    let fixture = &report.fixtures[0];
    if !report.passed() || fixture.gap != 1 {
        return Err(format!("fixtures: {:?}", report.fixtures));
    }
    let max_gap = report.rows.iter().filter_map(|r| r.gaps.keys().max()).max().copied().unwrap_or(0);
    Ok(format!(
        "7000 trials, 0 violations, largest gap {max_gap}, I_{{10,2}} gap {}",
        fixture.gap
    ))
}

fn proof_tables() -> Outcome {
    let mut found = BTreeSet::new();
    let mut values = 0;
    for id in TableId::ALL {
        let t = proof_table(id);
        for row in &t.rows {
            if row.computed != row.printed {
                return Err(format!("{id} {} differs", row.name));
            }
            values += row.printed.len();
        }
        found.extend(t.diffs.iter().map(|d| (d.table.clone(), d.label.clone())));
    }
    let known: BTreeSet<(String, String)> = KNOWN_TYPOS
        .iter()
        .map(|t| (t.table.to_string(), t.label.to_string()))
        .collect();
    if found != known {
        return Err(format!("diffs {found:?} != documented {known:?}"));
    }
    Ok(format!("{values} tabulated values match; diffs = the {} documented typos", known.len()))
}

fn kk_oracle() -> Outcome {
    let report = kk_oracle_sweep(12, 4, Execution::Parallel).map_err(|e| e.to_string())?;
    match report.mismatches.first() {
        None => Ok(format!("{} (n, k, N) triples agree", report.checked)),
        Some(m) => Err(format!("{} mismatches, first {m:?}", report.mismatches.len())),
    }
}

fn identities() -> Outcome {
    let mut triples = 0;
    for n in 0..=30u64 {
        for q in 0..=n {
            for k in 0..=q {
                let (lhs, rhs) = chu_vandermonde_check(n, q, k).map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("Chu–Vandermonde fails at n={n} q={q} k={k}"));
                }
                triples += 1;
            }
        }
    }
    for t in 0..100u64 {
        let n = 2 + (t % 9) as usize;
        let i = random_ideal(n, 1..=2 * n, 1..=n, 0xACCE_0008 + t).map_err(|e| e.to_string())?;
        let a = alpha_of_complement(&i).map_err(|e| e.to_string())?;
        for q in 0..=n {
            if !beta_sum_identity_check(&a, q).map_err(|e| e.to_string())? {
                return Err(format!("sum identity fails at q={q} for\n{}", i.to_text()));
            }
        }
    }
    Ok(format!("{triples} Chu–Vandermonde triples, sum identity on 100 ideals"))
}

fn lemmas() -> Outcome {
    let mut lines = Vec::new();
    for (id, n) in [
        (LemmaId::FourQ8, 10),
        (LemmaId::FourQ8, 11),
        (LemmaId::ThreeQ9, 11),
        (LemmaId::ThreeQ9, 12),
    ] {
        let r = certify_lemma_with(id, n, DEFAULT_NODE_CAP, false, Execution::Parallel)
            .map_err(|e| e.to_string())?;
        if !r.certified() {
            return Err(format!("{id} n={n}: truncated={} violations={}", r.truncated, r.violation_count));
        }
        lines.push(format!("{id}@{n}: {} points", r.feasible));
    }
    let weak = certify_lemma_with(LemmaId::FourQ8, 10, DEFAULT_NODE_CAP, true, Execution::Parallel)
        .map_err(|e| e.to_string())?;
    if weak.violation_count == 0 {
        return Err("weakened polytope produced no violation".into());
    }
    lines.push(format!("weakened L3.3@10: {} violations", weak.violation_count));
    Ok(lines.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("family table rows", table_rows),
        ("minimal witnesses d=0..3", witnesses),
        ("closed forms vs enumeration", cross_module),
        ("principal <=> hdepth(S/I)=n-1 <=> hdepth(I)=n", principal_equivalence),
        ("random campaign hdepth(I) >= hdepth(S/I)-1", campaign),
        ("proof tables", proof_tables),
        ("Kruskal–Katona vs colex oracle", kk_oracle),
        ("Chu–Vandermonde and beta sum identity", identities),
        ("lemma certification", lemmas),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}) [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
