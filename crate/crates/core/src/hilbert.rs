//! β-tables and Hilbert depth.
//!
//! For an α-vector `(α_0..α_n)` and `0 <= k <= q <= n`:
//!
//! ```text
//! β_k^q = Σ_{j=0..k} (-1)^(k-j) C(q-j, k-j) α_j
//! hdepth = max{ q : β_k^q >= 0 for all 0 <= k <= q }
//! ```
//!
//! Both `hdepth(S/I)` and `hdepth(I)` are computed from their own α-vectors.
//! The relation `β_k^q(S/I) + β_k^q(I) = C(n-q+k-1, k)` is only exercised as
//! a check ([`beta_sum_identity_check`]); note that it is a sum, not a
//! difference.

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedSub, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::{binom_signed, BinomialTable};
use crate::ideal::AlphaVector;
use crate::{Error, Execution, Result};

/// The row `β_0^q .. β_q^q` of one α-vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaTable {
    pub n: usize,
    pub q: usize,
    #[serde(serialize_with = "crate::bigser::many")]
    pub values: Vec<BigInt>,
}

impl BetaTable {
    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|b| !b.is_negative())
    }

    /// Smallest `k` with `β_k^q < 0`.
    pub fn first_negative(&self) -> Option<usize> {
        self.values.iter().position(|b| b.is_negative())
    }
}

/// Evidence that row `q` is not admissible: `β_k^q = value < 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureCertificate {
    pub q: usize,
    pub k: usize,
    #[serde(serialize_with = "crate::bigser::one")]
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HdepthResult {
    pub hdepth: usize,
    /// The all-nonnegative row at `q = hdepth`.
    pub witness_beta: BetaTable,
    /// One negative entry for every `q` in `hdepth+1..=n`, ascending in `q`.
    pub failure_certificates: Vec<FailureCertificate>,
}

fn beta_row(table: &BinomialTable, alpha: &AlphaVector, q: usize) -> BetaTable {
    let values = (0..=q)
        .map(|k| {
            let mut acc = BigInt::zero();
            for j in 0..=k {
                let term: BigUint = table.get(q - j, k - j) * alpha.get(j);
                if (k - j) % 2 == 0 {
                    acc += BigInt::from(term);
                } else {
                    acc -= BigInt::from(term);
                }
            }
            acc
        })
        .collect();
    BetaTable {
        n: alpha.n(),
        q,
        values,
    }
}

/// `β_k^q` for `0 <= k <= q`. Requires `q <= n`.
pub fn beta_table(alpha: &AlphaVector, q: usize) -> Result<BetaTable> {
    if q > alpha.n() {
        return Err(Error::domain(format!(
            "q = {q} outside 0..={} for this α-vector",
            alpha.n()
        )));
    }
    Ok(beta_row(&BinomialTable::new(alpha.n()), alpha, q))
}

pub fn hdepth(alpha: &AlphaVector) -> Result<HdepthResult> {
    hdepth_with(alpha, Execution::Sequential)
}

/// Hilbert depth with certificates.
///
/// Sequentially, rows are scanned from `q = n` down and the scan stops at the
/// first all-nonnegative row. In parallel mode every row is evaluated and the
/// same maximum is selected.
pub fn hdepth_with(alpha: &AlphaVector, exec: Execution) -> Result<HdepthResult> {
    if alpha.is_zero() {
        return Err(Error::domain("hdepth of the zero module is undefined"));
    }
    let n = alpha.n();
    let table = BinomialTable::new(n);
    let mut certificates = Vec::new();
    let witness = if exec.is_parallel() {
        let rows = exec.map_indexed(n + 1, |q| beta_row(&table, alpha, q));
        let mut witness = None;
        for row in rows.into_iter().rev() {
            match row.first_negative() {
                Some(k) => certificates.push(certificate(&row, k)),
                None => {
                    witness = Some(row);
                    break;
                }
            }
        }
        witness
    } else {
        let mut witness = None;
        for q in (0..=n).rev() {
            let row = beta_row(&table, alpha, q);
            match row.first_negative() {
                Some(k) => certificates.push(certificate(&row, k)),
                None => {
                    witness = Some(row);
                    break;
                }
            }
        }
        witness
    };
    // β_0^0 = α_0 >= 0, so row 0 always qualifies
    let witness_beta = witness.expect("row q = 0 is always nonnegative");
    certificates.reverse();
    Ok(HdepthResult {
        hdepth: witness_beta.q,
        witness_beta,
        failure_certificates: certificates,
    })
}

fn certificate(row: &BetaTable, k: usize) -> FailureCertificate {
    FailureCertificate {
        q: row.q,
        k,
        value: row.values[k].clone(),
    }
}

/// `(C(n,j) - α_j)_j`: swaps `α(S/I)` and `α(I)`.
pub fn complement_alpha(alpha: &AlphaVector) -> Result<AlphaVector> {
    let n = alpha.n();
    let full = AlphaVector::full(n);
    let values = (0..=n)
        .map(|j| {
            full.get(j).checked_sub(alpha.get(j)).ok_or_else(|| {
                Error::domain(format!("α_{j} exceeds C({n},{j}); not a valid α-vector"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    AlphaVector::new(values)
}

/// Checks `β_k^q(S/I) + β_k^q(I) = C(n-q+k-1, k)` for all `0 <= k <= q`,
/// with `α(I)` obtained from [`complement_alpha`].
pub fn beta_sum_identity_check(alpha_quotient: &AlphaVector, q: usize) -> Result<bool> {
    let n = alpha_quotient.n();
    let quotient = beta_table(alpha_quotient, q)?;
    let ideal = beta_table(&complement_alpha(alpha_quotient)?, q)?;
    Ok((0..=q).all(|k| {
        let expected = binom_signed(n as i64 - q as i64 + k as i64 - 1, k as i64);
        &quotient.values[k] + &ideal.values[k] == expected
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{alpha_of_complement, alpha_of_ideal, SquarefreeIdeal};

    fn alpha(v: &[u64]) -> AlphaVector {
        AlphaVector::from_u64s(v).unwrap()
    }

    fn i_10_2() -> SquarefreeIdeal {
        let lists: Vec<Vec<usize>> = (3..=10).map(|j| vec![1, 2, j]).collect();
        let refs: Vec<&[usize]> = lists.iter().map(|l| l.as_slice()).collect();
        SquarefreeIdeal::from_index_lists(10, &refs).unwrap()
    }

    #[test]
    fn full_vector_row_at_q_equals_n() {
        for n in 1..=12 {
            let row = beta_table(&AlphaVector::full(n), n).unwrap();
            assert_eq!(row.values[0], BigInt::from(1));
            assert!(row.values[1..].iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn beta_2_closed_form_for_m2_ideals() {
        // I = (x1x2, x3x4x5) in 6 variables lies in m^2
        let i = SquarefreeIdeal::from_index_lists(6, &[&[1, 2], &[3, 4, 5]]).unwrap();
        let a = alpha_of_complement(&i).unwrap();
        let n = 6i64;
        let a2 = i64::try_from(a.get(2).clone()).unwrap();
        for q in 2..=6i64 {
            let row = beta_table(&a, q as usize).unwrap();
            let expected = a2 - (q - 1) * n + q * (q - 1) / 2;
            assert_eq!(row.values[2], BigInt::from(expected));
        }
    }

    #[test]
    fn beta_table_rejects_q_above_n() {
        assert!(beta_table(&alpha(&[1, 2, 1]), 3).is_err());
        assert_eq!(beta_table(&alpha(&[1, 2, 1]), 0).unwrap().values, vec![BigInt::from(1)]);
    }

    #[test]
    fn principal_quotient_has_hdepth_n_minus_1() {
        for n in 2..=8 {
            for d in 1..=n {
                let gen: Vec<usize> = (1..=d).collect();
                let i = SquarefreeIdeal::from_index_lists(n, &[&gen]).unwrap();
                let s = hdepth(&alpha_of_complement(&i).unwrap()).unwrap();
                assert_eq!(s.hdepth, n - 1, "n={n} d={d}");
                let id = hdepth(&alpha_of_ideal(&i).unwrap()).unwrap();
                assert_eq!(id.hdepth, n, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn i_10_2_depths() {
        let i = i_10_2();
        let quotient = hdepth(&alpha_of_complement(&i).unwrap()).unwrap();
        assert_eq!(quotient.hdepth, 7);
        let ideal = hdepth(&alpha_of_ideal(&i).unwrap()).unwrap();
        assert_eq!(ideal.hdepth, 6);
    }

    #[test]
    fn witness_and_certificates_are_checkable() {
        let a = alpha_of_complement(&i_10_2()).unwrap();
        let r = hdepth(&a).unwrap();
        assert!(r.witness_beta.is_nonnegative());
        assert_eq!(r.witness_beta, beta_table(&a, r.hdepth).unwrap());
        let qs: Vec<usize> = r.failure_certificates.iter().map(|c| c.q).collect();
        assert_eq!(qs, (r.hdepth + 1..=10).collect::<Vec<_>>());
        for c in &r.failure_certificates {
            let row = beta_table(&a, c.q).unwrap();
            assert_eq!(row.values[c.k], c.value);
            assert!(c.value.is_negative());
        }
        let par = hdepth_with(&a, Execution::Parallel).unwrap();
        assert_eq!(par, r);
    }

    #[test]
    fn hdepth_of_zero_module_is_an_error() {
        assert!(hdepth(&AlphaVector::zeros(4)).is_err());
        // the principal ideal (x1x2) of K[x1,x2] has hdepth 2
        let r = hdepth(&alpha(&[0, 0, 1])).unwrap();
        assert_eq!(r.hdepth, 2);
    }

    #[test]
    fn complement_examples() {
        assert!(complement_alpha(&AlphaVector::full(5)).unwrap().is_zero());
        let a = alpha(&[1, 6, 15, 16, 9, 2, 0]);
        let c = complement_alpha(&a).unwrap();
        assert_eq!(c, alpha(&[0, 0, 0, 4, 6, 4, 1]));
        assert_eq!(complement_alpha(&c).unwrap(), a);
        assert!(complement_alpha(&alpha(&[2, 0])).is_err());
    }

    #[test]
    fn sum_identity_for_zero_ideal() {
        for n in 1..=10 {
            for q in 0..=n {
                assert!(beta_sum_identity_check(&AlphaVector::full(n), q).unwrap());
            }
        }
    }
}
