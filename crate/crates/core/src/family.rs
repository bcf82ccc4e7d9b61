//! Closed forms for `I_{n,m} = (x_1⋯x_m) ∩ (x_{m+1},…,x_n)`, `1 <= m < n`.
//!
//! ```text
//! α_j(S/I_{n,m}) = C(n,j)                  j <= m
//!                = C(n,j) - C(n-m, j-m)    j >  m
//! β_k^q(S/I_{n,m}) = C(n-q+k-1, k) - C(n-q+k-1-m, k-m) + (-1)^(k-m) C(q-m, k-m)
//! hdepth(I_{n,m}) = ⌊(n+m+1)/2⌋
//! ```
//!
//! Binomials with a negative lower index vanish. The only negative upper index
//! that occurs is `C(-1, 0)` (at `q = n`, `k = m`), which must be 1 for the
//! closed form to agree with the α-sum.
//!
//! Only rows with `k - m` odd can go negative, which gives the fast check
//! behind [`RowCheck::OddShift`]; the default [`RowCheck::AllK`] evaluates
//! every entry.

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::Serialize;

use crate::combinatorics::{binom, BinomialTable};
use crate::ideal::{AlphaVector, SquarefreeIdeal, SquarefreeMonomial, MAX_VARIABLES};
use crate::{Error, Execution, Result};

/// One `(n, m)` row: `q = hdepth(S/I_{n,m})`, `h_ideal = hdepth(I_{n,m})`,
/// `d = q - h_ideal`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyRecord {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub h_ideal: usize,
    pub d: i64,
}

/// Which entries of a β-row are evaluated when testing `β^q >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RowCheck {
    /// Every `0 <= k <= q`.
    #[default]
    AllK,
    /// Only `m <= k <= q` with `k - m` odd.
    OddShift,
}

fn check_pair(n: usize, m: usize) -> Result<()> {
    if m == 0 || m >= n {
        return Err(Error::domain(format!(
            "I_{{n,m}} needs 1 <= m < n, got n={n} m={m}"
        )));
    }
    Ok(())
}

/// The ideal itself, generated by `x_1⋯x_m·x_j` for `m < j <= n`.
pub fn family_ideal(n: usize, m: usize) -> Result<SquarefreeIdeal> {
    check_pair(n, m)?;
    if n > MAX_VARIABLES {
        return Err(Error::Capacity {
            what: "variables",
            value: n as u64,
            limit: MAX_VARIABLES as u64,
        });
    }
    let prefix: u64 = (1u64 << m) - 1;
    let gens: Vec<SquarefreeMonomial> = (m..n)
        .map(|bit| SquarefreeMonomial::from_mask(prefix | 1u64 << bit))
        .collect();
    SquarefreeIdeal::new(n, &gens)
}

pub fn family_alpha(n: usize, m: usize) -> Result<AlphaVector> {
    check_pair(n, m)?;
    let values = (0..=n)
        .map(|j| {
            let all = binom(n as u64, j as u64);
            if j <= m {
                all
            } else {
                all - binom((n - m) as u64, (j - m) as u64)
            }
        })
        .collect();
    AlphaVector::new(values)
}

/// `hdepth(I_{n,m}) = ⌊(n+m+1)/2⌋`.
pub fn family_hdepth_ideal(n: usize, m: usize) -> Result<usize> {
    check_pair(n, m)?;
    Ok((n + m).div_ceil(2))
}

/// Evaluates the closed forms against one shared binomial table.
///
/// Building the table is the expensive part; reuse one evaluator for sweeps.
#[derive(Debug, Clone)]
pub struct FamilyEvaluator {
    table: BinomialTable,
}

impl FamilyEvaluator {
    /// Supports every `n <= max_n`.
    pub fn new(max_n: usize) -> Self {
        FamilyEvaluator {
            table: BinomialTable::new(max_n),
        }
    }

    pub fn max_n(&self) -> usize {
        self.table.max_n()
    }

    fn check(&self, n: usize, m: usize) -> Result<()> {
        check_pair(n, m)?;
        if n > self.max_n() {
            return Err(Error::Capacity {
                what: "n for this family evaluator",
                value: n as u64,
                limit: self.max_n() as u64,
            });
        }
        Ok(())
    }

    /// `β_k^q(S/I_{n,m})` from the closed form.
    pub fn beta(&self, n: usize, m: usize, q: usize, k: usize) -> Result<BigInt> {
        self.check(n, m)?;
        if !(k <= q && q <= n) {
            return Err(Error::domain(format!(
                "family β needs 0 <= k <= q <= n, got n={n} q={q} k={k}"
            )));
        }
        Ok(self.beta_unchecked(n, m, q, k))
    }

    fn beta_unchecked(&self, n: usize, m: usize, q: usize, k: usize) -> BigInt {
        let (n, m, q, k) = (n as i64, m as i64, q as i64, k as i64);
        let a = n - q + k - 1;
        let mut value = self.table.signed(a, k) - self.table.signed(a - m, k - m);
        if k >= m {
            let tail = self.table.signed(q - m, k - m);
            if (k - m) % 2 == 0 {
                value += tail;
            } else {
                value -= tail;
            }
        }
        value
    }

    /// Smallest `k` with `β_k^q < 0` among the entries `check` looks at.
    pub fn first_negative(&self, n: usize, m: usize, q: usize, check: RowCheck) -> Option<usize> {
        match check {
            RowCheck::AllK => {
                (0..=q).find(|&k| self.beta_unchecked(n, m, q, k).is_negative())
            }
            RowCheck::OddShift => (m + 1..=q).step_by(2).find(|&k| {
                // β_k^q < 0  ⇔  C(a, k) < C(a-m, k-m) + C(q-m, k-m), with a-m >= k-m-1 >= 0
                let a = n + k - q - 1;
                let rhs: BigUint = self.table.get(a - m, k - m) + self.table.get(q - m, k - m);
                *self.table.get(a, k) < rhs
            }),
        }
    }

    pub fn row_is_nonnegative(&self, n: usize, m: usize, q: usize, check: RowCheck) -> bool {
        self.first_negative(n, m, q, check).is_none()
    }

    /// `hdepth(S/I_{n,m})`: scan `q` down from `n`, stop at the first
    /// admissible row.
    pub fn hdepth_quotient(&self, n: usize, m: usize, check: RowCheck) -> Result<usize> {
        self.check(n, m)?;
        Ok((0..=n)
            .rev()
            .find(|&q| self.row_is_nonnegative(n, m, q, check))
            .expect("row q = 0 is nonnegative"))
    }

    pub fn record(&self, n: usize, m: usize, check: RowCheck) -> Result<FamilyRecord> {
        let q = self.hdepth_quotient(n, m, check)?;
        let h_ideal = family_hdepth_ideal(n, m)?;
        Ok(FamilyRecord {
            n,
            m,
            q,
            h_ideal,
            d: q as i64 - h_ideal as i64,
        })
    }
}

/// `β_k^q(S/I_{n,m})` from the closed form.
pub fn family_beta(n: usize, m: usize, q: usize, k: usize) -> Result<BigInt> {
    check_pair(n, m)?;
    FamilyEvaluator::new(n).beta(n, m, q, k)
}

/// `hdepth(S/I_{n,m})`, checking every entry of every scanned row.
pub fn family_hdepth_quotient(n: usize, m: usize) -> Result<usize> {
    check_pair(n, m)?;
    FamilyEvaluator::new(n).hdepth_quotient(n, m, RowCheck::AllK)
}

/// Same as [`family_hdepth_quotient`] but only evaluating `k - m` odd.
pub fn family_hdepth_quotient_fast(n: usize, m: usize) -> Result<usize> {
    check_pair(n, m)?;
    FamilyEvaluator::new(n).hdepth_quotient(n, m, RowCheck::OddShift)
}

pub fn family_record(n: usize, m: usize) -> Result<FamilyRecord> {
    check_pair(n, m)?;
    FamilyEvaluator::new(n).record(n, m, RowCheck::AllK)
}

/// Records for many pairs, evaluated concurrently, returned in input order.
pub fn family_records(
    pairs: &[(usize, usize)],
    check: RowCheck,
    exec: Execution,
) -> Result<Vec<FamilyRecord>> {
    let max_n = pairs.iter().map(|p| p.0).max().unwrap_or(1);
    let eval = FamilyEvaluator::new(max_n);
    exec.map_slice(pairs, |&(n, m)| eval.record(n, m, check))
        .into_iter()
        .collect()
}

/// How competing witnesses of the same gap are ranked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessOrder {
    /// Smallest `n`, then smallest `m`.
    #[default]
    Lex,
    /// Smallest `q`, then `n`, then `m`.
    MinQ,
}

/// Result of a minimal-witness search for one gap `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum WitnessOutcome {
    Found { d: i64, record: FamilyRecord },
    /// Under [`WitnessOrder::MinQ`]: a witness exists within `n_cap`, but a
    /// larger `n` could still give a smaller `q`.
    Unconfirmed { d: i64, n_cap: usize, record: FamilyRecord },
    NotFound { d: i64, n_cap: usize },
}

impl WitnessOutcome {
    pub fn record(&self) -> Option<&FamilyRecord> {
        match self {
            WitnessOutcome::Found { record, .. } => Some(record),
            WitnessOutcome::Unconfirmed { .. } | WitnessOutcome::NotFound { .. } => None,
        }
    }

    pub fn d(&self) -> i64 {
        match *self {
            WitnessOutcome::Found { d, .. }
            | WitnessOutcome::Unconfirmed { d, .. }
            | WitnessOutcome::NotFound { d, .. } => d,
        }
    }
}

/// First `(n, m)` in lexicographic order (`n` ascending from 2, then `m`
/// ascending from 1) with `d(n, m) = d`, for `n <= n_cap`.
pub fn minimal_witness(d: i64, n_cap: usize) -> WitnessOutcome {
    minimal_witnesses(&[d], n_cap, WitnessOrder::Lex, RowCheck::AllK, Execution::default())
        .pop()
        .expect("one outcome per requested gap")
}

/// Runs one sweep over `n = 2, 3, …` for all requested gaps at once. Each
/// `n` is evaluated as a batch over `m` (concurrently under `exec`).
///
/// Under [`WitnessOrder::Lex`] the first hit is minimal. Under
/// [`WitnessOrder::MinQ`] the sweep continues until no larger `n` can beat
/// the best `q`: a gap-`d` pair has `q = d + ⌊(n+m+1)/2⌋ >= d + ⌊n/2⌋ + 1`.
/// The sweep stops once every gap is settled. Outcomes follow `ds`.
pub fn minimal_witnesses(
    ds: &[i64],
    n_cap: usize,
    order: WitnessOrder,
    check: RowCheck,
    exec: Execution,
) -> Vec<WitnessOutcome> {
    let mut best: Vec<Option<FamilyRecord>> = vec![None; ds.len()];
    let settled = |best: &[Option<FamilyRecord>], next_n: usize| {
        best.iter().zip(ds).all(|(slot, &d)| match (slot, order) {
            (None, _) => false,
            (Some(_), WitnessOrder::Lex) => true,
            (Some(r), WitnessOrder::MinQ) => d + (next_n / 2) as i64 + 1 > r.q as i64,
        })
    };
    let mut next_n = 2;
    if n_cap >= 2 {
        let eval = FamilyEvaluator::new(n_cap);
        while next_n <= n_cap && !settled(&best, next_n) {
            let n = next_n;
            let row = exec.map_indexed(n - 1, |i| {
                eval.record(n, i + 1, check)
                    .expect("pair is in range by construction")
            });
            for record in row {
                for (slot, &d) in best.iter_mut().zip(ds) {
                    if record.d != d {
                        continue;
                    }
                    let better = match (slot.as_ref(), order) {
                        (None, _) => true,
                        (Some(_), WitnessOrder::Lex) => false,
                        (Some(cur), WitnessOrder::MinQ) => record.q < cur.q,
                    };
                    if better {
                        *slot = Some(record);
                    }
                }
            }
            next_n += 1;
        }
    }
    best.into_iter()
        .zip(ds)
        .map(|(slot, &d)| match slot {
            None => WitnessOutcome::NotFound { d, n_cap },
            Some(record) => {
                let done = match order {
                    WitnessOrder::Lex => true,
                    WitnessOrder::MinQ => d + (next_n / 2) as i64 + 1 > record.q as i64,
                };
                if done {
                    WitnessOutcome::Found { d, record }
                } else {
                    WitnessOutcome::Unconfirmed { d, n_cap, record }
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{beta_table, complement_alpha, hdepth};
    use crate::ideal::alpha_of_complement;

    #[test]
    fn alpha_matches_enumeration_at_6_2() {
        let a = family_alpha(6, 2).unwrap();
        assert_eq!(a, AlphaVector::from_u64s(&[1, 6, 15, 16, 9, 2, 0]).unwrap());
        assert_eq!(a, alpha_of_complement(&family_ideal(6, 2).unwrap()).unwrap());
    }

    #[test]
    fn alpha_is_full_up_to_m() {
        for (n, m) in [(10, 2), (12, 5), (30, 7)] {
            let a = family_alpha(n, m).unwrap();
            for j in 0..=m {
                assert_eq!(a.get(j), &binom(n as u64, j as u64));
            }
        }
        assert_eq!(
            family_alpha(10, 2).unwrap(),
            alpha_of_complement(&family_ideal(10, 2).unwrap()).unwrap()
        );
    }

    #[test]
    fn beta_below_m_is_the_full_vector_value() {
        let eval = FamilyEvaluator::new(20);
        for q in 0..=20usize {
            for k in 0..=q.min(4) {
                let expected = crate::combinatorics::binom_signed(20 - q as i64 + k as i64 - 1, k as i64);
                assert_eq!(eval.beta(20, 5, q, k).unwrap(), expected);
            }
        }
    }

    #[test]
    fn beta_agrees_with_alpha_sum_on_small_pairs() {
        for n in 2..=9 {
            for m in 1..n {
                let a = family_alpha(n, m).unwrap();
                for q in 0..=n {
                    let row = beta_table(&a, q).unwrap();
                    for k in 0..=q {
                        assert_eq!(family_beta(n, m, q, k).unwrap(), row.values[k], "{n} {m} {q} {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn row_10_2_at_7_and_8() {
        assert!((0..=7).all(|k| !family_beta(10, 2, 7, k).unwrap().is_negative()));
        assert!((0..=8).any(|k| family_beta(10, 2, 8, k).unwrap().is_negative()));
    }

    #[test]
    fn printed_quotient_depths() {
        assert_eq!(family_hdepth_quotient(6, 2).unwrap(), 4);
        assert_eq!(family_hdepth_quotient(10, 2).unwrap(), 7);
        assert_eq!(family_hdepth_quotient(15, 3).unwrap(), 11);
        assert_eq!(family_hdepth_quotient_fast(15, 3).unwrap(), 11);
    }

    #[test]
    fn ideal_depth_formula() {
        assert_eq!(family_hdepth_ideal(10, 2).unwrap(), 6);
        assert_eq!(family_hdepth_ideal(6, 2).unwrap(), 4);
        for n in 2..=9 {
            for m in 1..n {
                let ideal_alpha = complement_alpha(&family_alpha(n, m).unwrap()).unwrap();
                assert_eq!(
                    hdepth(&ideal_alpha).unwrap().hdepth,
                    family_hdepth_ideal(n, m).unwrap()
                );
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(family_alpha(5, 5).is_err());
        assert!(family_alpha(5, 0).is_err());
        assert!(family_beta(5, 2, 6, 1).is_err());
        assert!(family_beta(5, 2, 3, 4).is_err());
        assert!(family_record(3, 7).is_err());
        let eval = FamilyEvaluator::new(10);
        assert!(matches!(eval.beta(11, 2, 3, 1), Err(Error::Capacity { .. })));
    }

    #[test]
    fn small_witnesses() {
        let r = minimal_witness(0, 20);
        assert_eq!(r.record().map(|r| (r.n, r.m, r.q)), Some((6, 2, 4)));
        let r = minimal_witness(1, 20);
        assert_eq!(r.record().map(|r| (r.n, r.m, r.q)), Some((10, 2, 7)));
        assert_eq!(minimal_witness(5, 12), WitnessOutcome::NotFound { d: 5, n_cap: 12 });
    }

    #[test]
    fn orders_differ_at_gap_six() {
        let ds = [0, 6];
        let lex = minimal_witnesses(&ds, 60, WitnessOrder::Lex, RowCheck::OddShift, Execution::Sequential);
        let by_q = minimal_witnesses(&ds, 60, WitnessOrder::MinQ, RowCheck::OddShift, Execution::Sequential);
        let key = |o: &WitnessOutcome| o.record().map(|r| (r.n, r.m, r.q));
        assert_eq!(key(&lex[0]), key(&by_q[0]));
        assert_eq!(key(&lex[1]), Some((34, 8, 27)));
        assert_eq!(key(&by_q[1]), Some((35, 5, 26)));
        let short = minimal_witnesses(&[6], 37, WitnessOrder::MinQ, RowCheck::OddShift, Execution::Sequential);
        assert!(matches!(short[0], WitnessOutcome::Unconfirmed { .. }));
    }

    #[test]
    fn family_ideal_generators() {
        let i = family_ideal(5, 2).unwrap();
        let text = i.to_text();
        assert_eq!(text, "x1*x2*x3\nx1*x2*x4\nx1*x2*x5\n");
        assert!(i.is_in_m2());
        assert!(family_ideal(65, 2).is_err());
    }
}
