//! Exact binomial arithmetic, Macaulay cascades and Kruskal–Katona bounds.
//!
//! Everything here is integer-only. Binomials of the sizes that show up in
//! the `I_{n,m}` tables (upper index in the hundreds) do not fit in 128 bits,
//! so values are [`BigUint`]/[`BigInt`].

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Error, Result};

/// `C(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1 at every step
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with a signed upper index.
///
/// `C(a, b) = 0` for `b < 0`; for `a >= 0` this is the ordinary binomial;
/// for `a < 0` it is the polynomial extension `(-1)^b C(b - a - 1, b)`, so in
/// particular `C(-1, 0) = 1`.
pub fn binom_signed(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a >= 0 {
        return BigInt::from(binom(a as u64, b as u64));
    }
    let magnitude = BigInt::from(binom((b - a - 1) as u64, b as u64));
    if b % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// Pascal triangle of exact binomials `C(n, k)` for `n <= max_n`.
///
/// Immutable after construction, so one table can be shared freely between
/// threads. Lookups outside `0 <= k <= n` return zero.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
    zero: BigUint,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        BinomialTable {
            rows,
            zero: BigUint::zero(),
        }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`; panics if `n > max_n`.
    pub fn get(&self, n: usize, k: usize) -> &BigUint {
        assert!(
            n <= self.max_n(),
            "binomial table holds n <= {}, asked for {n}",
            self.max_n()
        );
        self.rows[n].get(k).unwrap_or(&self.zero)
    }

    /// Signed-index lookup with the same conventions as [`binom_signed`].
    pub fn signed(&self, a: i64, b: i64) -> BigInt {
        if b < 0 {
            return BigInt::zero();
        }
        if a >= 0 {
            return BigInt::from(self.get(a as usize, b as usize).clone());
        }
        binom_signed(a, b)
    }
}

/// Both sides of the alternating Chu–Vandermonde identity
///
/// `Σ_{j=0..k} (-1)^(k-j) C(q-j, k-j) C(n, j) = C(n-q+k-1, k)`
///
/// for `0 <= k <= q <= n`. The left side is summed term by term.
pub fn chu_vandermonde_check(n: u64, q: u64, k: u64) -> Result<(BigInt, BigInt)> {
    if !(k <= q && q <= n) {
        return Err(Error::domain(format!(
            "chu_vandermonde_check needs 0 <= k <= q <= n, got n={n} q={q} k={k}"
        )));
    }
    let mut lhs = BigInt::zero();
    for j in 0..=k {
        let term = BigInt::from(binom(q - j, k - j) * binom(n, j));
        if (k - j).is_multiple_of(2) {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = binom_signed(n as i64 - q as i64 + k as i64 - 1, k as i64);
    Ok((lhs, rhs))
}

/// Macaulay representation of `N` in degree `k`:
///
/// `N = C(n_k, k) + C(n_{k-1}, k-1) + … + C(n_j, j)` with
/// `n_k > n_{k-1} > … > n_j >= j >= 1`.
///
/// `terms` holds `(n_i, i)` pairs in order of descending `i`. The
/// representation of zero is the empty cascade.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MacaulayRep {
    degree: u32,
    terms: Vec<(u64, u32)>,
}

impl MacaulayRep {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &[(u64, u32)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The represented integer, `Σ C(n_i, i)`.
    pub fn value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(top, i)| binom(top, i as u64))
            .sum()
    }

    /// Checks strict decrease of tops, consecutive descending indices
    /// starting at the degree, and `n_j >= j >= 1`.
    pub fn is_valid(&self) -> bool {
        let mut expected = self.degree;
        let mut prev_top: Option<u64> = None;
        for &(top, i) in &self.terms {
            if i != expected || i == 0 || top < i as u64 {
                return false;
            }
            if prev_top.is_some_and(|p| p <= top) {
                return false;
            }
            prev_top = Some(top);
            expected -= 1;
        }
        true
    }

    /// Kruskal–Katona lower bound on the count one degree down,
    /// `Σ C(n_i, i-1)`.
    pub fn kk_lower_bound(&self) -> Result<BigUint> {
        kk_lower_bound(self)
    }

    /// Kruskal–Katona upper bound on the count one degree up,
    /// `Σ C(n_i, i+1)`.
    pub fn kk_upper_bound(&self) -> BigUint {
        kk_upper_bound(self)
    }
}

/// Greedy cascade: `n_k = max{t : C(t,k) <= N}`, then recurse on the
/// remainder in degree `k-1` until nothing is left.
pub fn macaulay_rep(value: &BigUint, k: u32) -> Result<MacaulayRep> {
    if k == 0 {
        return Err(Error::domain("macaulay_rep needs degree k >= 1"));
    }
    let mut remainder = value.clone();
    let mut terms = Vec::new();
    let mut i = k;
    while !remainder.is_zero() {
        // i >= 1 here: in degree 1 the greedy top equals the remainder
        let top = greedy_top(&remainder, i);
        remainder -= binom(top, i as u64);
        terms.push((top, i));
        i -= 1;
    }
    Ok(MacaulayRep { degree: k, terms })
}

/// Largest `t >= i` with `C(t, i) <= target`, for `target >= 1`.
fn greedy_top(target: &BigUint, i: u32) -> u64 {
    let i64_ = i as u64;
    // C(i, i) = 1 <= target, so lo is always admissible
    let mut lo = i64_;
    let mut hi = i64_.max(1) * 2;
    while binom(hi, i64_) <= *target {
        lo = hi;
        hi *= 2;
    }
    // invariant: C(lo, i) <= target < C(hi, i)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binom(mid, i64_) <= *target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `Σ C(n_i, i-1)` over the cascade; requires degree >= 2.
///
/// For a family of `N` sets of size `k` this is the least possible number of
/// `(k-1)`-sets in its shadow.
pub fn kk_lower_bound(rep: &MacaulayRep) -> Result<BigUint> {
    if rep.degree < 2 {
        return Err(Error::domain(format!(
            "kk_lower_bound needs degree k >= 2, got {}",
            rep.degree
        )));
    }
    Ok(rep
        .terms
        .iter()
        .map(|&(top, i)| binom(top, i as u64 - 1))
        .sum())
}

/// `Σ C(n_i, i+1)` over the cascade.
///
/// For a family of `N` sets of size `k` this is the largest possible number of
/// `(k+1)`-sets all of whose `k`-subsets belong to the family.
pub fn kk_upper_bound(rep: &MacaulayRep) -> BigUint {
    rep.terms
        .iter()
        .map(|&(top, i)| binom(top, i as u64 + 1))
        .sum()
}
