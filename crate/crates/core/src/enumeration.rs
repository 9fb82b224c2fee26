//! Brute-force ground truth: walk every multiset permutation and tally
//! ascents, descents and plateaux against the zero-padded word
//! `0 w_1 ... w_m 0`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multiset::MultisetSpec;
use crate::poly::{rat, BiPoly, UniPoly};

/// Default enumeration budget, in words.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "MSEULER_BUDGET";

pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// A multiset permutation; letters are `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u8>);

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.0.iter().any(|&l| l > 9) {
            ","
        } else {
            ""
        };
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatTriple {
    pub asc: u32,
    pub des: u32,
    pub plat: u32,
}

/// Rearranges `w` into the next lexicographically larger arrangement of the
/// same multiset. Returns false, leaving `w` untouched, if `w` is already the last.
pub fn next_permutation(w: &mut [u8]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Lexicographic stream of all distinct words of a multiset.
pub struct Words {
    current: Vec<u8>,
    done: bool,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let w = Word(self.current.clone());
        self.done = !next_permutation(&mut self.current);
        Some(w)
    }
}

pub fn iterate_words(spec: &MultisetSpec) -> Result<Words> {
    if spec.total() == 0 {
        return Err(Error::EmptySpec);
    }
    Ok(Words {
        current: spec.first_word(),
        done: false,
    })
}

#[inline]
fn letter_stats(w: &[u8]) -> StatTriple {
    // Position 0 always ascends (0 < w_1) and position m always descends (w_m > 0).
    let mut asc = 1;
    let mut des = 1;
    for pair in w.windows(2) {
        asc += (pair[0] < pair[1]) as u32;
        des += (pair[0] > pair[1]) as u32;
    }
    StatTriple {
        asc,
        des,
        plat: w.len() as u32 + 1 - asc - des,
    }
}

pub fn statistics(w: &Word) -> StatTriple {
    assert!(!w.0.is_empty(), "statistics of the empty word");
    letter_stats(&w.0)
}

/// Histogram of descent and ascent numbers over every word of a multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTally {
    pub words: u64,
    /// `des[d]` = number of words with `d` descents, `d = 0..=m`.
    pub des: Vec<u64>,
    pub asc: Vec<u64>,
}

impl DescentTally {
    fn new(m: usize) -> Self {
        DescentTally {
            words: 0,
            des: vec![0; m + 1],
            asc: vec![0; m + 1],
        }
    }

    fn merge(mut self, other: &DescentTally) -> Self {
        self.words += other.words;
        for (a, b) in self.des.iter_mut().zip(&other.des) {
            *a += b;
        }
        for (a, b) in self.asc.iter_mut().zip(&other.asc) {
            *a += b;
        }
        self
    }

    fn record_all(&mut self, buf: &mut [u8], from: usize) {
        loop {
            let s = letter_stats(buf);
            self.words += 1;
            self.des[s.des as usize] += 1;
            self.asc[s.asc as usize] += 1;
            if !next_permutation(&mut buf[from..]) {
                break;
            }
        }
    }
}

fn check_budget(spec: &MultisetSpec, budget: u64) -> Result<()> {
    if spec.total() == 0 {
        return Err(Error::EmptySpec);
    }
    let count = spec.word_count();
    if count > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { count, budget });
    }
    Ok(())
}

/// Single-threaded tally in lexicographic order.
pub fn tally_sequential(spec: &MultisetSpec, budget: u64) -> Result<DescentTally> {
    check_budget(spec, budget)?;
    let mut buf = spec.first_word();
    let mut t = DescentTally::new(buf.len());
    t.record_all(&mut buf, 0);
    Ok(t)
}

/// Tally partitioned by first letter, each block enumerated on its own
/// rayon task. Counts are identical to [`tally_sequential`].
pub fn tally(spec: &MultisetSpec, budget: u64) -> Result<DescentTally> {
    check_budget(spec, budget)?;
    let words = spec.word_count().to_u64().unwrap_or(u64::MAX);
    if words < 50_000 || spec.letters() < 2 {
        return tally_sequential(spec, budget);
    }
    let m = spec.total() as usize;
    let blocks: Vec<DescentTally> = (0..spec.letters())
        .into_par_iter()
        .map(|first| {
            let mut rest = spec.multiplicities().to_vec();
            rest[first] -= 1;
            let mut buf = vec![first as u8 + 1];
            for (idx, &mi) in rest.iter().enumerate() {
                buf.extend(std::iter::repeat_n(idx as u8 + 1, mi as usize));
            }
            let mut t = DescentTally::new(m);
            t.record_all(&mut buf, 1);
            t
        })
        .collect();
    Ok(blocks
        .iter()
        .fold(DescentTally::new(m), |acc, b| acc.merge(b)))
}

fn checked_tally(spec: &MultisetSpec, budget: u64) -> Result<DescentTally> {
    let t = tally(spec, budget)?;
    assert_eq!(
        t.des, t.asc,
        "ascent and descent polynomials differ for {spec}"
    );
    Ok(t)
}

/// `sum over words of x^des`, cross-checked against `sum x^asc`.
pub fn descent_polynomial_brute(spec: &MultisetSpec, budget: u64) -> Result<UniPoly> {
    let t = checked_tally(spec, budget)?;
    Ok(UniPoly::from_coeffs(t.des.iter().map(|&c| rat(c as i64))))
}

/// `sum over words of x^des y^(m+1-des)`.
pub fn bivariate_brute(spec: &MultisetSpec, budget: u64) -> Result<BiPoly> {
    let t = checked_tally(spec, budget)?;
    let top = spec.total() + 1;
    Ok(BiPoly::from_terms(
        t.des
            .iter()
            .enumerate()
            .map(|(d, &c)| (d as u32, top - d as u32, rat(c as i64))),
    ))
}
