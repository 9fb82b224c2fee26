//! Multiplicity sequences `(m_1, ..., m_n)` describing `{1^m_1, ..., n^m_n}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A normalized multiplicity sequence: zero entries are dropped on
/// construction, so letter `i` (1-based) has multiplicity `multiplicities[i-1] > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultisetSpec {
    multiplicities: Vec<u32>,
}

impl MultisetSpec {
    pub fn new(multiplicities: impl IntoIterator<Item = u32>) -> Self {
        MultisetSpec {
            multiplicities: multiplicities.into_iter().filter(|&m| m > 0).collect(),
        }
    }

    pub fn empty() -> Self {
        MultisetSpec::new([])
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Number of distinct letters.
    pub fn letters(&self) -> usize {
        self.multiplicities.len()
    }

    /// Total size `m = sum m_i`.
    pub fn total(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.multiplicities.iter().copied().max().unwrap_or(0)
    }

    /// True when every multiplicity is 1 or 2 (vacuously for the empty multiset).
    pub fn within_one_two(&self) -> bool {
        self.multiplicities.iter().all(|&m| m <= 2)
    }

    pub fn count_of(&self, multiplicity: u32) -> usize {
        self.multiplicities
            .iter()
            .filter(|&&m| m == multiplicity)
            .count()
    }

    /// Non-increasing reordering, the representative of its permutation class.
    pub fn canonical(&self) -> MultisetSpec {
        let mut m = self.multiplicities.clone();
        m.sort_unstable_by(|a, b| b.cmp(a));
        MultisetSpec { multiplicities: m }
    }

    /// Reorders the multiplicity sequence; `order` is a permutation of `0..n`.
    pub fn permuted(&self, order: &[usize]) -> MultisetSpec {
        assert_eq!(order.len(), self.letters());
        MultisetSpec {
            multiplicities: order.iter().map(|&i| self.multiplicities[i]).collect(),
        }
    }

    /// Multinomial `m! / prod m_i!`, the number of distinct words.
    pub fn word_count(&self) -> BigUint {
        // Product of binomials C(m_1 + .. + m_i, m_i) avoids the big factorials.
        let mut acc = BigUint::one();
        let mut seen = 0u32;
        for &mi in &self.multiplicities {
            seen += mi;
            acc *= crate::macmahon::binomial(seen, mi);
        }
        acc
    }

    /// Sorted letter sequence `1^m_1 2^m_2 ...`, the lexicographically first word.
    pub fn first_word(&self) -> Vec<u8> {
        assert!(
            self.letters() < u8::MAX as usize,
            "too many distinct letters"
        );
        let mut w = Vec::with_capacity(self.total() as usize);
        for (idx, &mi) in self.multiplicities.iter().enumerate() {
            w.extend(std::iter::repeat_n(idx as u8 + 1, mi as usize));
        }
        w
    }

    /// All non-increasing multiplicity sequences with entries from `allowed`
    /// and total in `1..=max_total`, in lexicographic order of total then sequence.
    pub fn sweep(max_total: u32, allowed: &[u32]) -> Vec<MultisetSpec> {
        let mut allowed: Vec<u32> = allowed.iter().copied().filter(|&a| a > 0).collect();
        allowed.sort_unstable_by(|a, b| b.cmp(a));
        allowed.dedup();
        let mut out = Vec::new();
        for total in 1..=max_total {
            let mut found = Vec::new();
            partitions(total, &allowed, 0, &mut Vec::new(), &mut found);
            found.sort();
            out.extend(
                found
                    .into_iter()
                    .map(|m| MultisetSpec { multiplicities: m }),
            );
        }
        out
    }
}

fn partitions(
    rest: u32,
    allowed: &[u32],
    from: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for (idx, &a) in allowed.iter().enumerate().skip(from) {
        if a <= rest {
            cur.push(a);
            partitions(rest - a, allowed, idx, cur, out);
            cur.pop();
        }
    }
}

impl fmt::Display for MultisetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.multiplicities.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `"2,1,2"`, the power form `"1^3 2^4"` (three letters of
/// multiplicity 1, then four of multiplicity 2), or a mix of both. The empty
/// string is the empty multiset.
impl FromStr for MultisetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::SpecParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut out = Vec::new();
        let tokens = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty());
        for tok in tokens {
            let (value, repeat) = match tok.split_once('^') {
                Some((v, r)) => (v, r),
                None => (tok, "1"),
            };
            let value: u32 = value
                .parse()
                .map_err(|_| fail(&format!("bad multiplicity {value:?}")))?;
            let repeat: u32 = repeat
                .parse()
                .map_err(|_| fail(&format!("bad repeat count {repeat:?}")))?;
            out.extend(std::iter::repeat_n(value, repeat as usize));
        }
        if s.contains(",,") || s.trim().starts_with(',') || s.trim().ends_with(',') {
            return Err(fail("empty entry"));
        }
        Ok(MultisetSpec::new(out))
    }
}
