use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::family::family_ideal;
use crate::hilbert::hdepth;
use crate::ideal::{alpha_of_complement, alpha_of_ideal, SquarefreeIdeal, SquarefreeMonomial};
use crate::{Error, Execution, Result};

const CAMPAIGN_MAX_N: usize = 12;
const ANTICHAIN_MAX_N: usize = 6;

/// Random ideal with a generator count drawn from `gen_count` and one degree
/// per generator drawn from `degrees`; supports are uniform among subsets of
/// that degree. The result is minimalized, so it may have fewer generators.
pub fn random_ideal_with_rng<R: Rng + ?Sized>(
    n: usize,
    gen_count: RangeInclusive<usize>,
    degrees: RangeInclusive<usize>,
    rng: &mut R,
) -> Result<SquarefreeIdeal> {
    if n == 0 || n > crate::ideal::MAX_VARIABLES {
        return Err(Error::domain(format!("random ideal needs 1 <= n <= 64, got {n}")));
    }
    if gen_count.is_empty() || *gen_count.start() == 0 {
        return Err(Error::domain(format!(
            "generator count range {gen_count:?} must be nonempty and start at 1 or more"
        )));
    }
    if degrees.is_empty() || *degrees.start() == 0 || *degrees.end() > n {
        return Err(Error::domain(format!(
            "degree range {degrees:?} must lie within 1..={n}"
        )));
    }
    let count = rng.random_range(gen_count);
    let gens: Vec<SquarefreeMonomial> = (0..count)
        .map(|_| {
            let d = rng.random_range(degrees.clone());
            let mask = sample(rng, n, d).iter().fold(0u64, |m, i| m | 1 << i);
            SquarefreeMonomial::from_mask(mask)
        })
        .collect();
    SquarefreeIdeal::new(n, &gens)
}

/// Seeded form of [`random_ideal_with_rng`] (ChaCha8).
pub fn random_ideal(
    n: usize,
    gen_count: RangeInclusive<usize>,
    degrees: RangeInclusive<usize>,
    seed: u64,
) -> Result<SquarefreeIdeal> {
    random_ideal_with_rng(n, gen_count, degrees, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Calls `f` on every nonzero proper squarefree ideal of `K[x_1..x_n]`, that
/// is on every nonempty antichain of nonempty subsets of `{1..n}`.
pub fn for_each_minimal_ideal<F: FnMut(&SquarefreeIdeal)>(n: usize, mut f: F) -> Result<()> {
    if n == 0 || n > ANTICHAIN_MAX_N {
        return Err(Error::Capacity {
            what: "antichain enumeration n",
            value: n as u64,
            limit: ANTICHAIN_MAX_N as u64,
        });
    }
    // Subsets are decided in increasing mask order, so a later subset can
    // never be contained in an earlier one; only the other direction is checked.
    fn walk<F: FnMut(&SquarefreeIdeal)>(
        n: usize,
        next: u64,
        chosen: &mut Vec<SquarefreeMonomial>,
        f: &mut F,
    ) {
        if next == 1u64 << n {
            if !chosen.is_empty() {
                f(&SquarefreeIdeal::new(n, chosen).expect("masks fit in n"));
            }
            return;
        }
        walk(n, next + 1, chosen, f);
        let mono = SquarefreeMonomial::from_mask(next);
        if chosen.iter().all(|c| !c.divides(mono)) {
            chosen.push(mono);
            walk(n, next + 1, chosen, f);
            chosen.pop();
        }
    }
    walk(n, 1, &mut Vec::new(), &mut f);
    Ok(())
}

pub fn all_minimal_ideals(n: usize) -> Result<Vec<SquarefreeIdeal>> {
    let mut out = Vec::new();
    for_each_minimal_ideal(n, |i| out.push(i.clone()))?;
    Ok(out)
}

/// For a nonzero proper ideal, checks that the three statements
/// `hdepth(S/I) = n-1`, "`I` is principal" and `hdepth(I) = n` are all true
/// or all false.
pub fn principal_equivalence_holds(ideal: &SquarefreeIdeal) -> Result<bool> {
    let n = ideal.n();
    let quotient = hdepth(&alpha_of_complement(ideal)?)?.hdepth;
    let whole = hdepth(&alpha_of_ideal(ideal)?)?.hdepth;
    let principal = ideal.is_principal();
    Ok((quotient == n - 1) == principal && (whole == n) == principal)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignConfig {
    pub n_values: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
}

/// Both depths of one sampled ideal; `gap = hdepth(S/I) - hdepth(I)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub n: usize,
    pub trial: u64,
    pub ideal: SquarefreeIdeal,
    pub h_quotient: usize,
    pub h_ideal: usize,
    pub gap: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// `"gap <= 1"` or `"gap <= 0"`.
    pub rule: &'static str,
    pub outcome: TrialOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignRow {
    pub n: usize,
    pub trials: u64,
    /// Gap value to number of trials.
    pub gaps: BTreeMap<i64, u64>,
    /// Trials where the sharp rule `gap <= 0` was required.
    pub sharp_checked: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub name: String,
    pub h_quotient: usize,
    pub h_ideal: usize,
    pub gap: i64,
    pub expected_gap: i64,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.gap == self.expected_gap
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub rows: Vec<CampaignRow>,
    pub fixtures: Vec<FixtureResult>,
    pub counterexamples: Vec<Counterexample>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.fixtures.iter().all(FixtureResult::passed)
    }
}

fn trial_rng(seed: u64, n: usize, trial: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(n as u64).to_le_bytes());
    key[16..24].copy_from_slice(&trial.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

fn depths(ideal: &SquarefreeIdeal) -> Result<(usize, usize)> {
    let quotient = hdepth(&alpha_of_complement(ideal)?)?.hdepth;
    let whole = hdepth(&alpha_of_ideal(ideal)?)?.hdepth;
    Ok((quotient, whole))
}

/// One trial: `1..=2n` generators, a maximum degree uniform in `2..=n`, and
/// each generator degree uniform in `2..=max`. The ideal always lies in `m²`.
pub fn run_trial(n: usize, seed: u64, trial: u64) -> Result<TrialOutcome> {
    let mut rng = trial_rng(seed, n, trial);
    let max_degree = rng.random_range(2..=n);
    let ideal = random_ideal_with_rng(n, 1..=2 * n, 2..=max_degree, &mut rng)?;
    let (h_quotient, h_ideal) = depths(&ideal)?;
    Ok(TrialOutcome {
        n,
        trial,
        ideal,
        h_quotient,
        h_ideal,
        gap: h_quotient as i64 - h_ideal as i64,
    })
}

fn fixture(name: String, ideal: &SquarefreeIdeal, expected_gap: i64) -> Result<FixtureResult> {
    let (h_quotient, h_ideal) = depths(ideal)?;
    Ok(FixtureResult {
        name,
        h_quotient,
        h_ideal,
        gap: h_quotient as i64 - h_ideal as i64,
        expected_gap,
    })
}

/// Samples `trials` ideals in `m²` for every `n` and checks
/// `hdepth(I) >= hdepth(S/I) - 1` when `hdepth(S/I) <= 8` or `n <= 10`, and
/// `hdepth(I) >= hdepth(S/I)` when `hdepth(S/I) <= 6` or `n <= 9`.
///
/// Trial `t` at `n` draws from its own stream keyed by `(seed, n, t)`, so the
/// report does not depend on `exec` or on which `n` values are requested
/// together. Fixed fixtures: `I_{10,2}` (gap 1) and `(x1x2)` for each `n`
/// (gap -1).
pub fn run_campaign(config: &CampaignConfig, exec: Execution) -> Result<CampaignReport> {
    for &n in &config.n_values {
        if n > CAMPAIGN_MAX_N {
            return Err(Error::Capacity {
                what: "campaign n",
                value: n as u64,
                limit: CAMPAIGN_MAX_N as u64,
            });
        }
        if n < 2 {
            return Err(Error::domain(format!("campaign needs n >= 2 for ideals in m^2, got {n}")));
        }
    }
    let trials = usize::try_from(config.trials)
        .map_err(|_| Error::domain("trial count does not fit in memory"))?;
    let mut rows = Vec::new();
    let mut counterexamples = Vec::new();
    for &n in &config.n_values {
        let outcomes = exec.map_indexed(trials, |t| run_trial(n, config.seed, t as u64));
        let mut row = CampaignRow {
            n,
            trials: config.trials,
            gaps: BTreeMap::new(),
            sharp_checked: 0,
            violations: 0,
        };
        for outcome in outcomes {
            let outcome = outcome?;
            *row.gaps.entry(outcome.gap).or_default() += 1;
            let q = outcome.h_quotient;
            let mut rule = None;
            if (q <= 8 || n <= 10) && outcome.gap > 1 {
                rule = Some("gap <= 1");
            }
            if q <= 6 || n <= 9 {
                row.sharp_checked += 1;
                if rule.is_none() && outcome.gap > 0 {
                    rule = Some("gap <= 0");
                }
            }
            if let Some(rule) = rule {
                row.violations += 1;
                counterexamples.push(Counterexample { rule, outcome });
            }
        }
        rows.push(row);
    }

    let mut fixtures = vec![fixture("I_{10,2}".into(), &family_ideal(10, 2)?, 1)?];
    for &n in &config.n_values {
        let principal = SquarefreeIdeal::from_index_lists(n, &[&[1, 2]])?;
        fixtures.push(fixture(format!("(x1*x2) in n={n}"), &principal, -1)?);
    }
    Ok(CampaignReport {
        config: config.clone(),
        rows,
        fixtures,
        counterexamples,
    })
}
