//! Counts of rational plane curves from the stable-maps recursion.
//!
//! `n_d` is the number of degree-`d` rational curves through `3d - 1` general
//! points of the plane. Two formulas are provided: the symmetrized recursion,
//! which needs exact rational intermediates, and the unsymmetrized one, which
//! is pure integer arithmetic. The boundary counts over the two reducible
//! fibers `[1,0]` and `[0,1]` are exposed as well; their equality is what
//! produces the unsymmetrized formula.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which computation populated a memo entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    /// `n_1 = 1`.
    BaseCase,
    /// The symmetrized recursion with rational prefactor.
    Recursion,
    /// The unsymmetrized all-integer recursion.
    Unsymmetrized,
    /// Loaded from a persisted cache.
    Cache,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::BaseCase => "base-case",
            Source::Recursion => "recursion",
            Source::Unsymmetrized => "unsym",
            Source::Cache => "cache",
        })
    }
}

#[derive(Clone, Debug)]
struct Entry {
    value: BigInt,
    sources: Vec<Source>,
}

/// Memoized `n_d` values with per-entry provenance.
///
/// Each formula only recurses through entries it produced itself (plus the
/// base case, and cache-loaded values for the recursion), so two formulas sharing a table still
/// compute independently. Inserting a value that disagrees with an existing
/// entry is an error. Readers never observe a partially written entry.
#[derive(Debug)]
pub struct MemoTable {
    entries: RwLock<BTreeMap<u32, Entry>>,
}

impl Default for MemoTable {
    fn default() -> Self {
        Self::new()
    }
}

impl MemoTable {
    pub fn new() -> MemoTable {
        let mut entries = BTreeMap::new();
        entries.insert(
            1,
            Entry {
                value: BigInt::one(),
                sources: vec![Source::BaseCase],
            },
        );
        MemoTable {
            entries: RwLock::new(entries),
        }
    }

    /// Builds a table from persisted `(d, n_d)` pairs, tagged [`Source::Cache`].
    pub fn from_cache(values: impl IntoIterator<Item = (u32, BigInt)>) -> Result<MemoTable> {
        let table = MemoTable::new();
        for (d, v) in values {
            if d == 0 {
                return Err(Error::InvalidDegree(0));
            }
            table.insert(d, v, Source::Cache)?;
        }
        Ok(table)
    }

    /// Snapshot of every stored value.
    pub fn values(&self) -> BTreeMap<u32, BigInt> {
        self.read()
            .iter()
            .map(|(d, e)| (*d, e.value.clone()))
            .collect()
    }

    pub fn get(&self, d: u32) -> Option<(BigInt, Vec<Source>)> {
        self.read()
            .get(&d)
            .map(|e| (e.value.clone(), e.sources.clone()))
    }

    fn read(&self) -> std::sync::RwLockReadGuard<'_, BTreeMap<u32, Entry>> {
        self.entries.read().unwrap_or_else(|e| e.into_inner())
    }

    fn lookup(&self, d: u32, source: Source) -> Option<BigInt> {
        self.read().get(&d).and_then(|e| {
            e.sources
                .iter()
                .any(|s| match s {
                    Source::BaseCase => true,
                    // Cached values came from the recursion; the unsymmetrized
                    // formula stays an independent check.
                    Source::Cache => source == Source::Recursion,
                    _ => *s == source,
                })
                .then(|| e.value.clone())
        })
    }

    fn insert(&self, d: u32, value: BigInt, source: Source) -> Result<()> {
        let mut map = self.entries.write().unwrap_or_else(|e| e.into_inner());
        match map.get_mut(&d) {
            Some(e) if e.value != value => Err(Error::Disagreement {
                degree: d,
                existing: e.value.to_string(),
                existing_source: e.sources[0].to_string(),
                new: value.to_string(),
                new_source: source.to_string(),
            }),
            Some(e) => {
                if !e.sources.contains(&source) {
                    e.sources.push(source);
                }
                Ok(())
            }
            None => {
                map.insert(
                    d,
                    Entry {
                        value,
                        sources: vec![source],
                    },
                );
                Ok(())
            }
        }
    }

    /// Values `n_1..=n_d` from one formula, filling the table bottom-up.
    fn run(
        &self,
        d: i64,
        source: Source,
        step: fn(u32, &[BigInt]) -> Result<BigInt>,
    ) -> Result<BigInt> {
        let d = checked_degree(d)?;
        // known[k - 1] = n_k
        let mut known: Vec<BigInt> = Vec::with_capacity(d as usize);
        for k in 1..=d {
            let v = match self.lookup(k, source) {
                Some(v) => v,
                None => {
                    let v = step(k, &known)?;
                    self.insert(k, v.clone(), source)?;
                    v
                }
            };
            known.push(v);
        }
        Ok(known.pop().expect("d >= 1"))
    }

    /// `n_d` from the symmetrized recursion.
    pub fn nd(&self, d: i64) -> Result<BigInt> {
        self.run(d, Source::Recursion, recursion_step)
    }

    /// `n_d` from the unsymmetrized recursion.
    pub fn nd_unsym(&self, d: i64) -> Result<BigInt> {
        self.run(d, Source::Unsymmetrized, unsym_step)
    }

    /// Boundary count over the reducible fiber `side`, using recursion values for `n`.
    pub fn boundary(&self, d: i64, side: BoundarySide) -> Result<BoundaryCount> {
        let deg = checked_degree(d)?;
        let n: Vec<BigInt> = (1..=deg)
            .map(|k| self.nd(k as i64))
            .collect::<Result<_>>()?;
        let value = boundary_sum(deg, side, &n);
        Ok(BoundaryCount {
            d: deg,
            side,
            value,
        })
    }
}

fn checked_degree(d: i64) -> Result<u32> {
    if d < 1 || d > u32::MAX as i64 {
        return Err(Error::InvalidDegree(d));
    }
    Ok(d as u32)
}

/// `binom(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `binom(n, k)` for possibly negative `n`, treated as an empty range.
fn binom_i(n: i64, k: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    binomial(n as u64, k)
}

fn recursion_step(d: u32, n: &[BigInt]) -> Result<BigInt> {
    if d == 1 {
        return Ok(BigInt::one());
    }
    let dd = d as i64;
    let mut sum = BigRational::zero();
    for d1 in 1..dd {
        let d2 = dd - d1;
        let weight = BigRational::from_integer(BigInt::from(d1 * d2))
            - BigRational::new(
                BigInt::from(2 * (d1 - d2) * (d1 - d2)),
                BigInt::from(3 * dd - 2),
            );
        let count = binom_i(3 * dd - 2, 3 * d1 - 1)
            * BigInt::from(d1 * d2)
            * &n[(d1 - 1) as usize]
            * &n[(d2 - 1) as usize];
        sum += weight * BigRational::from_integer(count);
    }
    let value = sum / BigRational::from_integer(BigInt::from(6 * (dd - 1)));
    if !value.is_integer() {
        return Err(Error::NonIntegral(d));
    }
    Ok(value.to_integer())
}

fn unsym_step(d: u32, n: &[BigInt]) -> Result<BigInt> {
    if d == 1 {
        return Ok(BigInt::one());
    }
    let dd = d as i64;
    let mut sum = BigInt::zero();
    for d1 in 1..dd {
        let d2 = dd - d1;
        let bracket = binom_i(3 * dd - 4, 3 * d1 - 2) * (d1 * d2)
            - binom_i(3 * dd - 4, 3 * d1 - 1) * (d1 * d1);
        sum += bracket * (d1 * d2) * &n[(d1 - 1) as usize] * &n[(d2 - 1) as usize];
    }
    Ok(sum)
}

/// One of the two reducible fibers used to evaluate the boundary count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundarySide {
    /// `[1,0]`: both components carry positive degree, each meets one line.
    OneZero,
    /// `[0,1]`: includes the contribution of a degree-zero component.
    ZeroOne,
}

impl fmt::Display for BoundarySide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundarySide::OneZero => "[1,0]",
            BoundarySide::ZeroOne => "[0,1]",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCount {
    pub d: u32,
    pub side: BoundarySide,
    pub value: BigInt,
}

/// `n[k - 1]` must hold `n_k` for `k = 1..=d`.
fn boundary_sum(d: u32, side: BoundarySide, n: &[BigInt]) -> BigInt {
    let dd = d as i64;
    let mut sum = match side {
        BoundarySide::OneZero => BigInt::zero(),
        BoundarySide::ZeroOne => n[(d - 1) as usize].clone(),
    };
    for d1 in 1..dd {
        let d2 = dd - d1;
        let nn = &n[(d1 - 1) as usize] * &n[(d2 - 1) as usize];
        // The node is one of d1*d2 intersection points of the two components.
        sum += match side {
            BoundarySide::OneZero => binom_i(3 * dd - 4, 3 * d1 - 2) * (d1 * d1 * d2 * d2) * nn,
            BoundarySide::ZeroOne => binom_i(3 * dd - 4, 3 * d1 - 1) * (d1 * d1 * d1 * d2) * nn,
        };
    }
    sum
}
