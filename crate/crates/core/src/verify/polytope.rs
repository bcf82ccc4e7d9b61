use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::Serialize;

use crate::combinatorics::{binom, kk_lower_bound, kk_upper_bound, macaulay_rep};
use crate::hilbert::beta_table;
use crate::ideal::AlphaVector;
use crate::{Error, Execution, Result};

pub const DEFAULT_NODE_CAP: u64 = 100_000_000;
const POLYTOPE_MAX_N: usize = 16;
const STORED_VIOLATIONS: usize = 32;

/// The relaxed α-polytope for "`S/I` with `I ⊂ m²` and `hdepth(S/I) >= q`":
///
/// * `α_0 = 1`, `α_1 = n`, `0 <= α_j <= C(n, j)`;
/// * Kruskal–Katona between consecutive degrees, both directions;
/// * `β_k^q >= 0` for every `k <= q` (dropped when `beta_nonneg` is false).
///
/// Every α-vector of an actual such quotient lies inside. The enumeration
/// assigns degrees `2..=max_degree` and checks the constraints that involve
/// only those degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FeasibleAlphaConstraints {
    pub n: usize,
    pub q: usize,
    pub max_degree: usize,
    pub beta_nonneg: bool,
}

impl FeasibleAlphaConstraints {
    pub fn new(n: usize, q: usize) -> Result<Self> {
        if n > POLYTOPE_MAX_N {
            return Err(Error::Capacity {
                what: "polytope n",
                value: n as u64,
                limit: POLYTOPE_MAX_N as u64,
            });
        }
        if !(2 <= q && q <= n) {
            return Err(Error::domain(format!("polytope needs 2 <= q <= n, got q={q} n={n}")));
        }
        Ok(FeasibleAlphaConstraints {
            n,
            q,
            max_degree: q,
            beta_nonneg: true,
        })
    }

    pub fn with_max_degree(mut self, degree: usize) -> Result<Self> {
        if !(2 <= degree && degree <= self.n) {
            return Err(Error::domain(format!(
                "max degree must lie in 2..={}, got {degree}",
                self.n
            )));
        }
        self.max_degree = degree;
        Ok(self)
    }

    /// Drops the `β >= 0` constraints, keeping box and Kruskal–Katona bounds.
    pub fn weakened(mut self) -> Self {
        self.beta_nonneg = false;
        self
    }

    /// Checks a complete vector `α_0..α_n` against every constraint; the
    /// error names the first one that fails.
    pub fn check_vector(&self, alpha: &AlphaVector) -> std::result::Result<(), String> {
        let n = self.n;
        if alpha.n() != n {
            return Err(format!("vector has n={}, constraints have n={n}", alpha.n()));
        }
        if *alpha.get(0) != BigUint::from(1u8) || *alpha.get(1) != BigUint::from(n) {
            return Err("α_0 = 1 and α_1 = n required".into());
        }
        if !alpha.is_valid() {
            return Err("box bound α_j <= C(n,j) violated".into());
        }
        for j in 1..n {
            let rep = macaulay_rep(alpha.get(j), j as u32).expect("degree >= 1");
            if *alpha.get(j + 1) > kk_upper_bound(&rep) {
                return Err(format!("α_{} exceeds the Kruskal–Katona bound from α_{j}", j + 1));
            }
            if j >= 2 && *alpha.get(j - 1) < kk_lower_bound(&rep).expect("degree >= 2") {
                return Err(format!("α_{} below the Kruskal–Katona bound from α_{j}", j - 1));
            }
        }
        if self.beta_nonneg {
            let row = beta_table(alpha, self.q).expect("q <= n");
            if let Some(k) = row.first_negative() {
                return Err(format!("β_{k}^{} < 0", self.q));
            }
        }
        Ok(())
    }
}

/// Outcome of one polytope enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub n: usize,
    pub q: usize,
    /// Human-readable statement of the checked inequality.
    pub inequality: String,
    pub weakened: bool,
    /// DFS nodes (single coordinate assignments) visited.
    pub explored: u64,
    /// Complete feasible vectors handed to the check.
    pub feasible: u64,
    pub violation_count: u64,
    /// The first few violating vectors `α_0..α_max_degree`, in DFS order.
    pub violations: Vec<Vec<i64>>,
    /// Some branch hit the node cap; the search is partial.
    pub truncated: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl LemmaReport {
    /// No violations over a completely explored region.
    pub fn certified(&self) -> bool {
        self.violation_count == 0 && !self.truncated
    }
}

struct Tables {
    binom: Vec<Vec<i128>>,
    /// `kk_up[j][v]`: largest admissible `α_{j+1}` when `α_j = v`.
    kk_up: Vec<Vec<i64>>,
    /// `kk_low[j][v]`: least admissible `α_{j-1}` when `α_j = v` (`j >= 2`).
    kk_low: Vec<Vec<i64>>,
}

impl Tables {
    fn new(n: usize, top_degree: usize) -> Self {
        let binom: Vec<Vec<i128>> = (0..=n)
            .map(|a| {
                (0..=n)
                    .map(|b| i128::try_from(binom(a as u64, b as u64)).expect("small binomial"))
                    .collect()
            })
            .collect();
        let to_i64 = |v: BigUint| i64::try_from(v).expect("bounded by C(n, j)");
        let mut kk_up = vec![Vec::new(); top_degree + 1];
        let mut kk_low = vec![Vec::new(); top_degree + 1];
        for j in 1..=top_degree {
            let layer = binom[n][j] as u64;
            let reps: Vec<_> = (0..=layer)
                .map(|v| macaulay_rep(&BigUint::from(v), j as u32).expect("degree >= 1"))
                .collect();
            kk_up[j] = reps.iter().map(|r| to_i64(kk_upper_bound(r))).collect();
            if j >= 2 {
                kk_low[j] = reps
                    .iter()
                    .map(|r| to_i64(kk_lower_bound(r).expect("degree >= 2")))
                    .collect();
            }
        }
        Tables {
            binom,
            kk_up,
            kk_low,
        }
    }
}

#[derive(Default)]
struct BranchResult {
    explored: u64,
    feasible: u64,
    violation_count: u64,
    violations: Vec<Vec<i64>>,
    truncated: bool,
}

struct Search<'a, F> {
    c: FeasibleAlphaConstraints,
    t: &'a Tables,
    is_violation: &'a F,
    node_cap: u64,
}

impl<F: Fn(&[i64]) -> bool> Search<'_, F> {
    /// `Σ_{j<k} (-1)^(k-j) C(q-j, k-j) α_j`: `β_k^q` minus its `α_k` term.
    fn beta_without_top(&self, alpha: &[i64], k: usize) -> i128 {
        let q = self.c.q;
        (0..k)
            .map(|j| {
                let term = self.t.binom[q - j][k - j] * alpha[j] as i128;
                if (k - j).is_multiple_of(2) {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    /// Admissible interval for `α_k` given `α_0..α_{k-1}` (before the lower
    /// Kruskal–Katona filter).
    fn interval(&self, alpha: &[i64], k: usize) -> (i64, i64) {
        let n = self.c.n;
        let upper = (self.t.binom[n][k] as i64).min(self.t.kk_up[k - 1][alpha[k - 1] as usize]);
        let lower = if self.c.beta_nonneg && k <= self.c.q {
            (-self.beta_without_top(alpha, k)).max(0) as i64
        } else {
            0
        };
        (lower, upper)
    }

    fn descend(&self, alpha: &mut Vec<i64>, out: &mut BranchResult) {
        let k = alpha.len();
        if k > self.c.max_degree {
            out.feasible += 1;
            if (self.is_violation)(alpha) {
                out.violation_count += 1;
                if out.violations.len() < STORED_VIOLATIONS {
                    out.violations.push(alpha.clone());
                }
            }
            return;
        }
        let (lo, hi) = self.interval(alpha, k);
        for v in lo..=hi {
            // kk_low is nondecreasing in v, so once it fails it keeps failing
            if k >= 3 && alpha[k - 1] < self.t.kk_low[k][v as usize] {
                break;
            }
            if out.explored >= self.node_cap {
                out.truncated = true;
                return;
            }
            out.explored += 1;
            alpha.push(v);
            self.descend(alpha, out);
            alpha.pop();
            if out.truncated {
                return;
            }
        }
    }
}

/// Depth-first enumeration of the integer points `(α_2..α_max_degree)` of the
/// polytope, degree by degree. `is_violation` sees every complete feasible
/// vector `α_0..α_max_degree`.
///
/// The search is split at `α_2`; each `α_2` branch gets its own budget of
/// `node_cap` nodes, so the report does not depend on `exec`.
pub fn enumerate_feasible_alphas<F>(
    constraints: &FeasibleAlphaConstraints,
    node_cap: u64,
    exec: Execution,
    is_violation: F,
) -> Result<LemmaReport>
where
    F: Fn(&[i64]) -> bool + Sync,
{
    if node_cap == 0 {
        return Err(Error::domain("node cap must be positive"));
    }
    let start = Instant::now();
    let c = *constraints;
    let tables = Tables::new(c.n, c.max_degree);
    let search = Search {
        c,
        t: &tables,
        is_violation: &is_violation,
        node_cap,
    };
    let prefix = vec![1i64, c.n as i64];
    let (lo, hi) = search.interval(&prefix, 2);
    let firsts: Vec<i64> = (lo..=hi).collect();
    let branches = exec.map_slice(&firsts, |&a2| {
        let mut out = BranchResult {
            explored: 1,
            ..Default::default()
        };
        let mut alpha = prefix.clone();
        alpha.push(a2);
        search.descend(&mut alpha, &mut out);
        out
    });
    let mut report = LemmaReport {
        lemma: "custom".into(),
        n: c.n,
        q: c.q,
        inequality: String::new(),
        weakened: !c.beta_nonneg,
        explored: 0,
        feasible: 0,
        violation_count: 0,
        violations: Vec::new(),
        truncated: false,
        wall_time: Duration::ZERO,
    };
    for b in branches {
        report.explored += b.explored;
        report.feasible += b.feasible;
        report.violation_count += b.violation_count;
        report.truncated |= b.truncated;
        for v in b.violations {
            if report.violations.len() < STORED_VIOLATIONS {
                report.violations.push(v);
            }
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

/// The β upper bounds certified over the relaxed polytope. Each one reads
/// `β_k^{q-1} <= C(n-q+k, k)` under `hdepth(S/I) >= q`, `n >= q+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LemmaId {
    /// `q = 9`: `β_3^8 <= C(n-6, 3)`.
    #[serde(rename = "L3.2-q9")]
    ThreeQ9,
    /// `q = 10`: `β_3^9 <= C(n-7, 3)`.
    #[serde(rename = "L3.2-q10")]
    ThreeQ10,
    /// `q = 8`: `β_4^7 <= C(n-4, 4)`.
    #[serde(rename = "L3.3")]
    FourQ8,
    /// `q = 8`: `β_5^7 <= C(n-3, 5)`.
    #[serde(rename = "L3.4")]
    FiveQ8,
    /// `q = 8`: `β_6^7 <= C(n-2, 6)`.
    #[serde(rename = "L3.5")]
    SixQ8,
    /// `q = 8`: `β_7^7 <= C(n-1, 7)`.
    #[serde(rename = "L3.6")]
    SevenQ8,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] = [
        LemmaId::ThreeQ9,
        LemmaId::ThreeQ10,
        LemmaId::FourQ8,
        LemmaId::FiveQ8,
        LemmaId::SixQ8,
        LemmaId::SevenQ8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::ThreeQ9 => "L3.2-q9",
            LemmaId::ThreeQ10 => "L3.2-q10",
            LemmaId::FourQ8 => "L3.3",
            LemmaId::FiveQ8 => "L3.4",
            LemmaId::SixQ8 => "L3.5",
            LemmaId::SevenQ8 => "L3.6",
        }
    }

    /// The assumed lower bound on `hdepth(S/I)`.
    pub fn q(self) -> usize {
        match self {
            LemmaId::ThreeQ9 => 9,
            LemmaId::ThreeQ10 => 10,
            _ => 8,
        }
    }

    /// The `k` of the bounded entry `β_k^{q-1}`.
    pub fn degree(self) -> usize {
        match self {
            LemmaId::ThreeQ9 | LemmaId::ThreeQ10 => 3,
            LemmaId::FourQ8 => 4,
            LemmaId::FiveQ8 => 5,
            LemmaId::SixQ8 => 6,
            LemmaId::SevenQ8 => 7,
        }
    }

    /// `C(n-q+k, k)`.
    pub fn bound(self, n: usize) -> i128 {
        let top = n + self.degree() - self.q();
        i128::try_from(binom(top as u64, self.degree() as u64)).expect("small binomial")
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let known: Vec<&str> = LemmaId::ALL.iter().map(|id| id.name()).collect();
                Error::domain(format!("unknown lemma id `{s}` (known: {})", known.join(", ")))
            })
    }
}

pub fn certify_lemma(id: LemmaId, n: usize, node_cap: u64) -> Result<LemmaReport> {
    certify_lemma_with(id, n, node_cap, false, Execution::default())
}

/// Enumerates the polytope for `id.q()` up to degree `id.degree()` and flags
/// every vector with `β_k^{q-1} > C(n-q+k, k)`. With `weakened` the β
/// constraints are dropped, which must surface violations.
pub fn certify_lemma_with(
    id: LemmaId,
    n: usize,
    node_cap: u64,
    weakened: bool,
    exec: Execution,
) -> Result<LemmaReport> {
    let q = id.q();
    if n < q + 2 {
        return Err(Error::domain(format!(
            "{id} applies to non-principal quotients, n >= {}; got n={n}",
            q + 2
        )));
    }
    let mut constraints = FeasibleAlphaConstraints::new(n, q)?.with_max_degree(id.degree())?;
    if weakened {
        constraints = constraints.weakened();
    }
    let k = id.degree();
    let row = q - 1;
    let bound = id.bound(n);
    let binoms: Vec<Vec<i128>> = (0..=row)
        .map(|a| {
            (0..=k)
                .map(|b| i128::try_from(binom(a as u64, b as u64)).expect("small"))
                .collect()
        })
        .collect();
    let is_violation = |alpha: &[i64]| {
        let beta: i128 = (0..=k)
            .map(|j| {
                let term = binoms[row - j][k - j] * alpha[j] as i128;
                if (k - j).is_multiple_of(2) {
                    term
                } else {
                    -term
                }
            })
            .sum();
        beta > bound
    };
    let mut report = enumerate_feasible_alphas(&constraints, node_cap, exec, is_violation)?;
    report.lemma = id.name().to_string();
    report.inequality = format!(
        "beta_{k}^{row} <= C({}, {k}) = {bound}",
        n + k - q
    );
    Ok(report)
}
