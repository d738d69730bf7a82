//! Letters, cyclic words and scenarios.
//!
//! Words are stored as the lexicographically least of their cyclic
//! rotations, so two words index the same invariant exactly when they are
//! equal as values. Reflection is *not* quotiented: `(1,2,3)` and `(1,3,2)`
//! are different coordinates.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A state label. Letters are positive integers.
pub type Letter = u32;

/// Default cap on the number of necklaces produced by [`full_scenario`].
pub const DEFAULT_NECKLACE_CAP: u128 = 1_000_000;

/// A word in canonical (least-rotation) form.
///
/// Ordering is by length first and then lexicographic, which is the
/// coordinate order used for every vector indexed by a scenario.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Canonicalizes `letters`. Same as [`canonical_form`].
    pub fn new(letters: &[Letter]) -> Result<Self> {
        canonical_form(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct letters of the word, sorted.
    pub fn distinct_letters(&self) -> Vec<Letter> {
        let set: BTreeSet<Letter> = self.0.iter().copied().collect();
        set.into_iter().collect()
    }

    /// `Some(l)` when the word is `(l, l, ..., l)`.
    pub fn repeated_letter(&self) -> Option<Letter> {
        let first = self.0[0];
        self.0.iter().all(|&l| l == first).then_some(first)
    }

    pub fn has_two_distinct_letters(&self) -> bool {
        self.repeated_letter().is_none()
    }

    /// Key used in JSON maps: letters concatenated when all are single
    /// digits (`"1122"`), comma separated otherwise (`"1,12"`).
    pub fn key(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let compact = self.0.iter().all(|&l| l < 10);
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                out.push(',');
            }
            let _ = write!(out, "{l}");
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses the [`Word::key`] format; parentheses are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let letters: Vec<Letter> = if trimmed.contains(',') {
            trimmed
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<Letter>()
                        .map_err(|_| Error::InvalidWord(format!("bad letter {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidWord(format!("bad letter {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        canonical_form(&letters)
    }
}

/// Returns the lexicographically least cyclic rotation of `w`.
pub fn canonical_form(w: &[Letter]) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::InvalidWord("empty word".into()));
    }
    if w.contains(&0) {
        return Err(Error::InvalidWord("letters must be positive".into()));
    }
    let n = w.len();
    let rotation = |k: usize| w[k..].iter().chain(&w[..k]);
    let best = (1..n).fold(0, |best, k| {
        if rotation(k).lt(rotation(best)) {
            k
        } else {
            best
        }
    });
    Ok(Word(rotation(best).copied().collect()))
}

/// A finite set of cyclically inequivalent words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scenario {
    words: Vec<Word>,
    letters: Vec<Letter>,
}

impl Scenario {
    /// Builds a scenario from already canonical words.
    pub fn from_words(words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let set: BTreeSet<Word> = words.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidScenario("no words".into()));
        }
        let words: Vec<Word> = set.into_iter().collect();
        let letters: BTreeSet<Letter> = words.iter().flat_map(|w| w.0.iter().copied()).collect();
        Ok(Scenario {
            words,
            letters: letters.into_iter().collect(),
        })
    }

    /// Words in coordinate order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Sorted letter set.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Coordinate index of `w`.
    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    pub fn letter_index(&self, l: Letter) -> Option<usize> {
        self.letters.binary_search(&l).ok()
    }

    /// Words as plain letter sequences, in coordinate order.
    pub fn to_sequences(&self) -> Vec<Vec<Letter>> {
        self.words.iter().map(|w| w.0.clone()).collect()
    }
}

/// Canonicalizes every sequence and drops cyclic duplicates.
pub fn build_scenario<W: AsRef<[Letter]>>(ws: &[W]) -> Result<Scenario> {
    if ws.is_empty() {
        return Err(Error::InvalidScenario("no words".into()));
    }
    let words = ws
        .iter()
        .map(|w| canonical_form(w.as_ref()))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::InvalidScenario(format!("{e}")))?;
    Scenario::from_words(words)
}

/// Structural predicates of a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub length_homogeneous: bool,
    pub every_word_two_distinct_letters: bool,
    /// The scenario is length-homogeneous with length `m` and contains
    /// `(l, ..., l)` of length `m` for every letter `l`.
    pub contains_all_single_letter_repeats: bool,
    /// Common word length when homogeneous.
    pub word_length: Option<usize>,
}

pub fn classify(s: &Scenario) -> Classification {
    let m = s.words[0].len();
    let length_homogeneous = s.words.iter().all(|w| w.len() == m);
    let every_word_two_distinct_letters = s.words.iter().all(Word::has_two_distinct_letters);
    let contains_all_single_letter_repeats = length_homogeneous
        && s.letters
            .iter()
            .all(|&l| s.index_of(&Word(vec![l; m])).is_some());
    Classification {
        length_homogeneous,
        every_word_two_distinct_letters,
        contains_all_single_letter_repeats,
        word_length: length_homogeneous.then_some(m),
    }
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Number of necklaces of length `k` over `n` letters, or `None` on
/// overflow.
pub fn necklace_count(n: u64, k: u64) -> Option<u128> {
    if k == 0 {
        return Some(1);
    }
    let mut total: u128 = 0;
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        let power = (n as u128).checked_pow(u32::try_from(k / d).ok()?)?;
        total = total.checked_add(power.checked_mul(euler_phi(d) as u128)?)?;
    }
    Some(total / k as u128)
}

/// Appends all necklaces of length `k` over letters `1..=n`, in
/// lexicographic order, as canonical words (FKM algorithm).
fn push_necklaces(n: Letter, k: usize, out: &mut Vec<Word>) {
    let mut a = vec![0 as Letter; k + 1];
    let emit = |a: &[Letter], out: &mut Vec<Word>| {
        out.push(Word(a[1..].iter().map(|&x| x + 1).collect()));
    };
    emit(&a, out);
    loop {
        let mut i = k;
        while i > 0 && a[i] == n - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        a[i] += 1;
        for j in i + 1..=k {
            a[j] = a[j - i];
        }
        if k.is_multiple_of(i) {
            emit(&a, out);
        }
    }
}

/// All necklaces over letters `1..=n` of every length `1..=max_len`.
pub fn full_scenario(n: Letter, max_len: usize) -> Result<Scenario> {
    full_scenario_capped(n, max_len, DEFAULT_NECKLACE_CAP)
}

pub fn full_scenario_capped(n: Letter, max_len: usize, cap: u128) -> Result<Scenario> {
    if n == 0 || max_len == 0 {
        return Err(Error::InvalidScenario(
            "letter count and maximal length must be at least 1".into(),
        ));
    }
    let mut required: u128 = 0;
    for k in 1..=max_len as u64 {
        required = necklace_count(n as u64, k)
            .and_then(|c| required.checked_add(c))
            .unwrap_or(u128::MAX);
    }
    if required > cap {
        return Err(Error::ResourceLimit {
            what: "full scenario",
            required,
            cap,
        });
    }
    let mut words = Vec::with_capacity(required as usize);
    for k in 1..=max_len {
        push_necklaces(n, k, &mut words);
    }
    Scenario::from_words(words)
}

/// Scenario whose words are the edges of an event graph.
pub fn event_graph_scenario(edges: &[(Letter, Letter)]) -> Result<Scenario> {
    if let Some(&(a, _)) = edges.iter().find(|(a, b)| a == b) {
        return Err(Error::InvalidScenario(format!(
            "self-loop ({a},{a}) is not an edge"
        )));
    }
    let seqs: Vec<[Letter; 2]> = edges.iter().map(|&(a, b)| [a, b]).collect();
    build_scenario(&seqs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn brute_force_necklaces(n: Letter, k: usize) -> BTreeSet<Word> {
        let total = (n as usize).pow(k as u32);
        (0..total)
            .map(|mut idx| {
                let mut w = vec![0; k];
                for slot in w.iter_mut().rev() {
                    *slot = (idx % n as usize) as Letter + 1;
                    idx /= n as usize;
                }
                canonical_form(&w).unwrap()
            })
            .collect()
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(canonical_form(&[3, 1, 2]).unwrap().letters(), &[1, 2, 3]);
        assert_eq!(canonical_form(&[2, 2]).unwrap().letters(), &[2, 2]);
        assert_eq!(
            canonical_form(&[1, 4, 2, 3]).unwrap().letters(),
            &[1, 4, 2, 3]
        );
        assert_eq!(
            canonical_form(&[2, 3, 1, 4]).unwrap().letters(),
            &[1, 4, 2, 3]
        );
        assert!(matches!(canonical_form(&[]), Err(Error::InvalidWord(_))));
        assert!(matches!(
            canonical_form(&[0, 1]),
            Err(Error::InvalidWord(_))
        ));
    }

    #[test]
    fn build_scenario_examples() {
        let s = build_scenario(&[vec![1, 2, 3], vec![3, 1, 2]]).unwrap();
        assert_eq!(s.to_sequences(), vec![vec![1, 2, 3]]);

        let s = build_scenario(&[vec![1, 1, 2, 2], vec![1, 2, 1, 2]]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.letters(), &[1, 2]);

        let s = build_scenario(&[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.letters(), &[1, 2, 3]);

        assert!(build_scenario::<Vec<Letter>>(&[]).is_err());
        assert!(build_scenario(&[vec![1], vec![]]).is_err());
    }

    #[test]
    fn ordering_is_length_then_lex() {
        let s = build_scenario(&[vec![1, 2, 3], vec![2, 3], vec![1, 3], vec![1, 2]]).unwrap();
        assert_eq!(
            s.to_sequences(),
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn reflections_are_distinct() {
        let s = build_scenario(&[vec![1, 2, 3], vec![1, 3, 2]]).unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&build_scenario(&[vec![1, 1, 2, 2], vec![1, 2, 1, 2]]).unwrap());
        assert_eq!(
            (
                c.length_homogeneous,
                c.every_word_two_distinct_letters,
                c.contains_all_single_letter_repeats
            ),
            (true, true, false)
        );
        assert_eq!(c.word_length, Some(4));

        let c = classify(&build_scenario(&[vec![1, 1], vec![2, 2], vec![1, 2]]).unwrap());
        assert_eq!(
            (
                c.length_homogeneous,
                c.every_word_two_distinct_letters,
                c.contains_all_single_letter_repeats
            ),
            (true, false, true)
        );
        assert_eq!(c.word_length, Some(2));

        let c = classify(&build_scenario(&[vec![1], vec![2], vec![1, 2]]).unwrap());
        assert_eq!(
            (
                c.length_homogeneous,
                c.every_word_two_distinct_letters,
                c.contains_all_single_letter_repeats
            ),
            (false, false, false)
        );
        assert_eq!(c.word_length, None);
    }

    #[test]
    fn full_scenario_examples() {
        let s = full_scenario(2, 2).unwrap();
        assert_eq!(
            s.to_sequences(),
            vec![vec![1], vec![2], vec![1, 1], vec![1, 2], vec![2, 2]]
        );
        assert_eq!(full_scenario(4, 4).unwrap().len(), 108);
        assert_eq!(
            full_scenario(1, 3).unwrap().to_sequences(),
            vec![vec![1], vec![1, 1], vec![1, 1, 1]]
        );
    }

    #[test]
    fn necklace_counts_match_brute_force() {
        for n in 1..=4 {
            for k in 1..=6 {
                let brute = brute_force_necklaces(n, k);
                assert_eq!(
                    necklace_count(n as u64, k as u64).unwrap(),
                    brute.len() as u128
                );
                let mut fkm = Vec::new();
                push_necklaces(n, k, &mut fkm);
                let fkm_set: BTreeSet<Word> = fkm.iter().cloned().collect();
                assert_eq!(fkm.len(), fkm_set.len());
                assert_eq!(fkm_set, brute, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn full_scenario_respects_cap() {
        let err = full_scenario_capped(4, 6, 100).unwrap_err();
        assert!(err.is_resource_limit());
        assert!(full_scenario(0, 2).is_err());
    }

    #[test]
    fn necklace_count_per_length() {
        assert_eq!(necklace_count(4, 2), Some(10));
        assert_eq!(necklace_count(4, 3), Some(24));
        assert_eq!(necklace_count(4, 4), Some(70));
    }

    #[test]
    fn event_graph_examples() {
        let s = event_graph_scenario(&[(1, 2), (2, 3)]).unwrap();
        assert_eq!(s.to_sequences(), vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(
            event_graph_scenario(&[(1, 2), (1, 3), (2, 3)])
                .unwrap()
                .len(),
            3
        );
        assert!(event_graph_scenario(&[(1, 1)]).is_err());
    }

    #[test]
    fn word_keys_round_trip() {
        let w = canonical_form(&[1, 1, 2, 2]).unwrap();
        assert_eq!(w.key(), "1122");
        assert_eq!("1122".parse::<Word>().unwrap(), w);
        let w = canonical_form(&[12, 1]).unwrap();
        assert_eq!(w.key(), "1,12");
        assert_eq!("1,12".parse::<Word>().unwrap(), w);
        assert_eq!("(2,1)".parse::<Word>().unwrap().letters(), &[1, 2]);
        assert_eq!(w.to_string(), "(1,12)");
        assert!("1a".parse::<Word>().is_err());
    }
}
