use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact;
use crate::scenario::{Letter, Scenario};

/// Default cap on `|Lambda|^|L|`, the number of assignments.
pub const DEFAULT_ASSIGNMENT_CAP: u128 = 10_000_000;

/// Colors (1-based) for the scenario's letters, in sorted letter order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment(Vec<u32>);

impl Assignment {
    pub fn new(colors: Vec<u32>) -> Self {
        Assignment(colors)
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn color_of(&self, s: &Scenario, l: Letter) -> Option<u32> {
        s.letter_index(l).map(|i| self.0[i])
    }

    /// The indicator vector `lambda_alpha` over the scenario's words.
    pub fn vertex(&self, s: &Scenario) -> Vec<u8> {
        let words = word_letter_indices(s);
        indicator(&words, &self.0)
    }
}

fn word_letter_indices(s: &Scenario) -> Vec<Vec<usize>> {
    s.words()
        .iter()
        .map(|w| {
            w.distinct_letters()
                .iter()
                .map(|&l| s.letter_index(l).expect("letter of scenario"))
                .collect()
        })
        .collect()
}

fn indicator(words: &[Vec<usize>], colors: &[u32]) -> Vec<u8> {
    words
        .iter()
        .map(|idx| {
            let c = colors[idx[0]];
            u8::from(idx.iter().all(|&i| colors[i] == c))
        })
        .collect()
}

/// Distinct 0/1 vertices of the classical polytope, each with the
/// lexicographically least assignment producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    scenario: Scenario,
    vertices: Vec<Vec<u8>>,
    witnesses: Vec<Assignment>,
}

impl VertexSet {
    /// Builds a vertex set from explicit 0/1 vectors, checking each against
    /// its witness.
    pub fn from_parts(
        scenario: Scenario,
        vertices: Vec<Vec<u8>>,
        witnesses: Vec<Assignment>,
    ) -> Result<Self> {
        if vertices.is_empty() || vertices.len() != witnesses.len() {
            return Err(Error::Precondition(
                "vertex set needs one witness per vertex and at least one vertex".into(),
            ));
        }
        for (v, w) in vertices.iter().zip(&witnesses) {
            if w.colors().len() != scenario.letters().len() || w.vertex(&scenario) != *v {
                return Err(Error::Precondition(
                    "witness does not reproduce its vertex".into(),
                ));
            }
        }
        let mut seen = BTreeMap::new();
        for v in &vertices {
            if seen.insert(v.clone(), ()).is_some() {
                return Err(Error::Precondition("duplicate vertex".into()));
            }
        }
        Ok(VertexSet {
            scenario,
            vertices,
            witnesses,
        })
    }

    pub fn scenario(&self) -> &Scenario {
        &self.scenario
    }

    pub fn vertices(&self) -> &[Vec<u8>] {
        &self.vertices
    }

    pub fn witnesses(&self) -> &[Assignment] {
        &self.witnesses
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.scenario.len()
    }

    /// Dimension of the polytope (of its affine hull).
    pub fn dimension(&self) -> usize {
        let pts: Vec<&[u8]> = self.vertices.iter().map(Vec::as_slice).collect();
        exact::affine_dimension(&pts).unwrap_or(0)
    }
}

fn assignment_count(alphabet: usize, letters: usize) -> u128 {
    u32::try_from(letters)
        .ok()
        .and_then(|n| (alphabet as u128).checked_pow(n))
        .unwrap_or(u128::MAX)
}

/// All vertices with the default assignment cap.
pub fn vertex_enumerate(s: &Scenario) -> Result<VertexSet> {
    vertex_enumerate_capped(s, DEFAULT_ASSIGNMENT_CAP)
}

/// All vertices over the alphabet `{1..|L|}`.
///
/// Only restricted growth strings are visited: relabeling colors by first
/// occurrence never changes `lambda_alpha` and never increases `alpha`
/// lexicographically, so this yields the same vertices, witnesses and
/// order as scanning all `|L|^|L|` assignments.
pub fn vertex_enumerate_capped(s: &Scenario, cap: u128) -> Result<VertexSet> {
    let n = s.letters().len();
    let required = assignment_count(n, n);
    if required > cap {
        return Err(Error::ResourceLimit {
            what: "vertex enumeration (assignments)",
            required,
            cap,
        });
    }
    let words = word_letter_indices(s);
    let mut found = Collector::default();
    let mut colors = vec![0u32; n];
    restricted_growth(&mut colors, 0, 0, &mut |colors| {
        found.offer(indicator(&words, colors), colors)
    });
    Ok(found.finish(s.clone()))
}

/// Brute force over every assignment into an alphabet of size `alphabet`,
/// in lexicographic order.
pub fn vertex_enumerate_with_alphabet(
    s: &Scenario,
    alphabet: usize,
    cap: u128,
) -> Result<VertexSet> {
    let n = s.letters().len();
    if alphabet == 0 {
        return Err(Error::Precondition("alphabet must be non-empty".into()));
    }
    let required = assignment_count(alphabet, n);
    if required > cap {
        return Err(Error::ResourceLimit {
            what: "vertex enumeration (assignments)",
            required,
            cap,
        });
    }
    let words = word_letter_indices(s);
    let mut found = Collector::default();
    let mut colors = vec![1u32; n];
    loop {
        found.offer(indicator(&words, &colors), &colors);
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(found.finish(s.clone()));
            }
            i -= 1;
            if (colors[i] as usize) < alphabet {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
        }
    }
}

/// Visits all restricted growth strings (1-based colors) in lex order.
fn restricted_growth(colors: &mut [u32], pos: usize, max: u32, visit: &mut impl FnMut(&[u32])) {
    if pos == colors.len() {
        visit(colors);
        return;
    }
    for c in 1..=max + 1 {
        colors[pos] = c;
        restricted_growth(colors, pos + 1, max.max(c), visit);
    }
}

#[derive(Default)]
struct Collector {
    index: BTreeMap<Vec<u8>, ()>,
    vertices: Vec<Vec<u8>>,
    witnesses: Vec<Assignment>,
}

impl Collector {
    fn offer(&mut self, v: Vec<u8>, colors: &[u32]) {
        if self.index.contains_key(&v) {
            return;
        }
        self.index.insert(v.clone(), ());
        self.vertices.push(v);
        self.witnesses.push(Assignment(colors.to_vec()));
    }

    fn finish(self, scenario: Scenario) -> VertexSet {
        VertexSet {
            scenario,
            vertices: self.vertices,
            witnesses: self.witnesses,
        }
    }
}
