//! Squarefree monomials, squarefree monomial ideals and α-vectors.
//!
//! A squarefree monomial is identified with its support. Variable `x_i`
//! (1-based, as in all text I/O) is bit `i - 1` of a `u64`, so ideals live in
//! at most [`MAX_VARIABLES`] variables. Counting α-vectors walks all `2^n`
//! supports and is capped at [`ENUMERATION_CAP`] variables.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::binom;
use crate::{Error, Execution, Result};

pub const MAX_VARIABLES: usize = 64;
pub const ENUMERATION_CAP: usize = 25;

/// A squarefree monomial, stored as its support bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquarefreeMonomial(u64);

impl SquarefreeMonomial {
    /// The monomial `1`.
    pub const ONE: SquarefreeMonomial = SquarefreeMonomial(0);

    pub fn from_mask(mask: u64) -> Self {
        SquarefreeMonomial(mask)
    }

    /// Builds `x_{i_1} ⋯ x_{i_r}` from 1-based indices. Repeated or zero
    /// indices and indices above 64 are rejected.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &i in indices {
            if i == 0 || i > MAX_VARIABLES {
                return Err(Error::domain(format!("variable index {i} out of range")));
            }
            let bit = 1u64 << (i - 1);
            if mask & bit != 0 {
                return Err(Error::domain(format!("variable x{i} repeated")));
            }
            mask |= bit;
        }
        Ok(SquarefreeMonomial(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    /// Support subset test: `self | other`.
    pub fn divides(self, other: SquarefreeMonomial) -> bool {
        self.0 & !other.0 == 0
    }

    /// Sorted 1-based variable indices.
    pub fn indices(self) -> Vec<usize> {
        (0..64)
            .filter(|b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    /// Largest variable index, 0 for the monomial 1.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("x{i}")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Drops duplicates and multiples of other generators. Output is sorted by
/// degree, then by support mask.
pub fn minimalize(generators: &[SquarefreeMonomial]) -> Vec<SquarefreeMonomial> {
    let mut sorted: Vec<SquarefreeMonomial> = generators.to_vec();
    sorted.sort_by_key(|g| (g.degree(), g.0));
    sorted.dedup();
    let mut kept: Vec<SquarefreeMonomial> = Vec::with_capacity(sorted.len());
    for g in sorted {
        // anything dividing g has degree <= deg g and is already in `kept`
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g);
        }
    }
    kept
}

/// A squarefree monomial ideal of `K[x_1..x_n]` given by its minimal generators.
///
/// The empty generator list is the zero ideal; the generator `1` gives the
/// whole ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    n: usize,
    generators: Vec<SquarefreeMonomial>,
}

impl SquarefreeIdeal {
    pub fn new(n: usize, generators: &[SquarefreeMonomial]) -> Result<Self> {
        check_ambient(n)?;
        for g in generators {
            if g.max_index() > n {
                return Err(Error::domain(format!(
                    "generator {g} uses a variable beyond x{n}"
                )));
            }
        }
        Ok(SquarefreeIdeal {
            n,
            generators: minimalize(generators),
        })
    }

    /// Convenience constructor from lists of 1-based indices.
    pub fn from_index_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        let gens = lists
            .iter()
            .map(|l| SquarefreeMonomial::from_indices(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, &gens)
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// The whole ring `S`.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new(n, &[SquarefreeMonomial::ONE])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff some generator divides `mono`.
    pub fn contains(&self, mono: SquarefreeMonomial) -> bool {
        self.generators.iter().any(|g| g.divides(mono))
    }

    /// `other ⊆ self`, checked on generators.
    pub fn contains_ideal(&self, other: &SquarefreeIdeal) -> bool {
        other.generators.iter().all(|&g| self.contains(g))
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    /// Every generator has degree at least 2 (vacuously true for zero).
    pub fn is_in_m2(&self) -> bool {
        self.generators.iter().all(|g| g.degree() >= 2)
    }

    /// Renders the generators in `x<i>*x<j>` form, one per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }
}

impl Serialize for SquarefreeIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let mut st = serializer.serialize_struct("SquarefreeIdeal", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("generators", &gens)?;
        st.end()
    }
}

fn check_ambient(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("ambient variable count must be positive"));
    }
    if n > MAX_VARIABLES {
        return Err(Error::Capacity {
            what: "variables",
            value: n as u64,
            limit: MAX_VARIABLES as u64,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LineFormat {
    Product,
    Indices,
}

/// Parses the ideal file format and minimalizes.
///
/// One generator per line, either as `x<i>` tokens joined by `*`
/// (`x1*x3*x5`) or as whitespace-separated 1-based indices (`1 3 5`). Blank
/// lines and lines starting with `#` are skipped. All generator lines of a
/// file must use the same format.
pub fn parse_ideal(text: &str, n: usize) -> Result<SquarefreeIdeal> {
    check_ambient(n)?;
    let mut format: Option<LineFormat> = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let this = if line.contains('x') || line.contains('*') {
            LineFormat::Product
        } else {
            LineFormat::Indices
        };
        match format {
            None => format = Some(this),
            Some(f) if f != this => {
                return Err(parse_err(
                    "mixed generator formats (x<i>*… and index lists) in one file".into(),
                ))
            }
            _ => {}
        }
        let indices: Vec<usize> = match this {
            LineFormat::Product => line
                .split('*')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.strip_prefix('x')
                        .and_then(parse_index)
                        .ok_or_else(|| parse_err(format!("malformed token `{tok}`")))
                })
                .collect::<Result<_>>()?,
            LineFormat::Indices => line
                .split_whitespace()
                .map(|tok| {
                    parse_index(tok).ok_or_else(|| parse_err(format!("malformed token `{tok}`")))
                })
                .collect::<Result<_>>()?,
        };
        let mut mask = 0u64;
        for &i in &indices {
            if i == 0 || i > n {
                return Err(parse_err(format!("variable index {i} outside 1..={n}")));
            }
            let bit = 1u64 << (i - 1);
            if mask & bit != 0 {
                return Err(parse_err(format!("variable x{i} repeated in one monomial")));
            }
            mask |= bit;
        }
        gens.push(SquarefreeMonomial(mask));
    }
    SquarefreeIdeal::new(n, &gens)
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// `(α_0, …, α_n)`: the number of squarefree monomials in each degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AlphaVector {
    #[serde(serialize_with = "crate::bigser::many")]
    values: Vec<BigUint>,
}

impl AlphaVector {
    /// Wraps `α_0..α_n`; the ambient count is `values.len() - 1`.
    pub fn new(values: Vec<BigUint>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("α-vector needs at least α_0"));
        }
        Ok(AlphaVector { values })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// `(C(n,0), …, C(n,n))`, the α-vector of `S` itself.
    pub fn full(n: usize) -> Self {
        AlphaVector {
            values: (0..=n).map(|j| binom(n as u64, j as u64)).collect(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        AlphaVector {
            values: vec![BigUint::zero(); n + 1],
        }
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn get(&self, j: usize) -> &BigUint {
        &self.values[j]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `α_j <= C(n, j)` for every `j`.
    pub fn is_valid(&self) -> bool {
        let n = self.n() as u64;
        self.values
            .iter()
            .enumerate()
            .all(|(j, a)| *a <= binom(n, j as u64))
    }

    /// Total number of monomials counted.
    pub fn total(&self) -> BigUint {
        self.values.iter().sum()
    }
}

const BLOCK_BITS: usize = 14;

/// α-vector of `J/I`: squarefree `u` with `u ∈ J` and `u ∉ I`, by degree.
///
/// Walks all `2^n` supports. Requires `I ⊆ J` (checked on generators), equal
/// ambient counts and `n <= ENUMERATION_CAP`.
pub fn alpha_of_quotient_with(
    j: &SquarefreeIdeal,
    i: &SquarefreeIdeal,
    exec: Execution,
) -> Result<AlphaVector> {
    if j.n != i.n {
        return Err(Error::domain(format!(
            "ambient counts differ: J has n={}, I has n={}",
            j.n, i.n
        )));
    }
    if !j.contains_ideal(i) {
        return Err(Error::domain("I is not contained in J"));
    }
    let n = j.n;
    if n > ENUMERATION_CAP {
        return Err(Error::Capacity {
            what: "variables for α enumeration",
            value: n as u64,
            limit: ENUMERATION_CAP as u64,
        });
    }
    let block_bits = BLOCK_BITS.min(n);
    let blocks = 1usize << (n - block_bits);
    let partial = exec.map_indexed(blocks, |b| {
        let mut counts = vec![0u64; n + 1];
        let start = (b as u64) << block_bits;
        for mask in start..start + (1u64 << block_bits) {
            let u = SquarefreeMonomial(mask);
            if j.contains(u) && !i.contains(u) {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        counts
    });
    let mut totals = vec![0u64; n + 1];
    for counts in partial {
        for (t, c) in totals.iter_mut().zip(counts) {
            *t += c;
        }
    }
    AlphaVector::from_u64s(&totals)
}

pub fn alpha_of_quotient(j: &SquarefreeIdeal, i: &SquarefreeIdeal) -> Result<AlphaVector> {
    alpha_of_quotient_with(j, i, Execution::default())
}

/// `α(S/I)`.
pub fn alpha_of_complement(i: &SquarefreeIdeal) -> Result<AlphaVector> {
    alpha_of_quotient(&SquarefreeIdeal::unit(i.n)?, i)
}

/// `α(I)`.
pub fn alpha_of_ideal(i: &SquarefreeIdeal) -> Result<AlphaVector> {
    alpha_of_quotient(i, &SquarefreeIdeal::zero(i.n)?)
}
