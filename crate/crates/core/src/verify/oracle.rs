use num_bigint::BigUint;
use serde::Serialize;

use crate::combinatorics::{binom, macaulay_rep};
use crate::{Error, Execution, Result};

const ORACLE_MAX_N: usize = 14;
const ORACLE_MAX_K: usize = 7;

/// Next integer with the same popcount (Gosper's hack).
fn next_same_popcount(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

/// Bitmasks of all `k`-subsets of `{1..n}` in colex order.
fn colex_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = if k > n { None } else { Some(first) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let v = next_same_popcount(cur);
            (v < limit).then_some(v)
        };
        Some(cur)
    })
}

/// Shadow sizes of the first `N` `k`-subsets of `{1..n}` in colex order:
/// `(lower, upper)` where `lower` counts the `(k-1)`-subsets of members and
/// `upper` counts the `(k+1)`-subsets of `{1..n}` whose `k`-subsets all lie in
/// the family.
///
/// Scale is capped at `n <= 14`, `k <= 7`.
pub fn colex_shadow_oracle(count: u64, k: usize, n: usize) -> Result<(u64, u64)> {
    if n > ORACLE_MAX_N || k > ORACLE_MAX_K {
        return Err(Error::Capacity {
            what: if n > ORACLE_MAX_N { "oracle n" } else { "oracle k" },
            value: n.max(k) as u64,
            limit: if n > ORACLE_MAX_N { ORACLE_MAX_N } else { ORACLE_MAX_K } as u64,
        });
    }
    if k == 0 || k > n {
        return Err(Error::domain(format!("oracle needs 1 <= k <= n, got k={k} n={n}")));
    }
    let layer = binom(n as u64, k as u64);
    if count == 0 || BigUint::from(count) > layer {
        return Err(Error::domain(format!(
            "oracle needs 1 <= N <= C({n},{k}) = {layer}, got {count}"
        )));
    }
    let mut member = vec![false; 1 << n];
    let mut in_shadow = vec![false; 1 << n];
    let mut lower = 0u64;
    for set in colex_subsets(n, k).take(count as usize) {
        member[set as usize] = true;
        let mut rest = set;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let sub = (set ^ bit) as usize;
            if !in_shadow[sub] {
                in_shadow[sub] = true;
                lower += 1;
            }
        }
    }
    let upper = colex_subsets(n, k + 1)
        .filter(|&sup| {
            let mut rest = sup;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if !member[(sup ^ bit) as usize] {
                    return false;
                }
            }
            true
        })
        .count() as u64;
    Ok((lower, upper))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub n: usize,
    pub k: usize,
    pub count: u64,
    pub oracle_lower: u64,
    pub oracle_upper: u64,
    pub bound_lower: Option<u64>,
    pub bound_upper: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n_max: usize,
    pub k_max: usize,
    /// Number of `(n, k, N)` triples compared.
    pub checked: u64,
    pub mismatches: Vec<OracleMismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the Kruskal–Katona bounds with the colex oracle for every
/// `1 <= k <= min(k_max, n)`, `n <= n_max` and `1 <= N <= C(n, k)`. The lower
/// bound is only defined (and compared) for `k >= 2`.
pub fn kk_oracle_sweep(n_max: usize, k_max: usize, exec: Execution) -> Result<OracleReport> {
    if n_max > ORACLE_MAX_N || k_max > ORACLE_MAX_K {
        return Err(Error::Capacity {
            what: "oracle sweep scale",
            value: n_max.max(k_max) as u64,
            limit: ORACLE_MAX_N as u64,
        });
    }
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for k in 1..=k_max.min(n) {
            cases.push((n, k));
        }
    }
    let per_case = exec.map_slice(&cases, |&(n, k)| -> Result<(u64, Vec<OracleMismatch>)> {
        let layer = u64::try_from(binom(n as u64, k as u64)).expect("small layer");
        let mut mismatches = Vec::new();
        for count in 1..=layer {
            let (lo, up) = colex_shadow_oracle(count, k, n)?;
            let rep = macaulay_rep(&BigUint::from(count), k as u32)?;
            let bound_upper = u64::try_from(rep.kk_upper_bound()).expect("small bound");
            let bound_lower = if k >= 2 {
                Some(u64::try_from(rep.kk_lower_bound()?).expect("small bound"))
            } else {
                None
            };
            if bound_upper != up || bound_lower.is_some_and(|b| b != lo) {
                mismatches.push(OracleMismatch {
                    n,
                    k,
                    count,
                    oracle_lower: lo,
                    oracle_upper: up,
                    bound_lower,
                    bound_upper,
                });
            }
        }
        Ok((layer, mismatches))
    });
    let mut report = OracleReport {
        n_max,
        k_max,
        checked: 0,
        mismatches: Vec::new(),
    };
    for case in per_case {
        let (checked, mismatches) = case?;
        report.checked += checked;
        report.mismatches.extend(mismatches);
    }
    Ok(report)
}
