//! Alphabets, strands, master lineups, synthesis time, and acceptance
//! schedules: the primitive layer every census builds on.
//!
//! A [`Strand`] stores alphabet *indices*, not symbol text; an [`Alphabet`]
//! maps between the two. The alphabet's symbol order fixes the cyclic lineup
//! and every downstream tie-break. All operations here are pure functions of
//! immutable inputs and safe to call from any number of threads.

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

/// Ordered alphabet of distinct printable tokens.
///
/// Tokens are arbitrary (multi-character tokens cover shortmer- and
/// composite-letter-style alphabets; only the size matters to the counting
/// machinery). Text form of a strand: tokens joined directly when every
/// symbol is a single character, comma-separated otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    /// Build an alphabet from distinct, nonempty, comma-free tokens.
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = HashMap::new();
        for (i, tok) in symbols.iter().enumerate() {
            if tok.is_empty() || tok.contains(',') {
                return Err(Error::InvalidSymbol { token: tok.clone() });
            }
            if seen.insert(tok.clone(), i).is_some() {
                return Err(Error::DuplicateSymbol { token: tok.clone() });
            }
        }
        Ok(Self { symbols })
    }

    /// Parse alphabet text: comma-separated tokens, or one symbol per
    /// character when no comma is present.
    pub fn parse(text: &str) -> Result<Self> {
        if text.contains(',') {
            Self::new(text.split(',').map(str::to_owned))
        } else {
            Self::new(text.chars().map(|c| c.to_string()))
        }
    }

    /// The four-letter nucleotide alphabet `A C G T`.
    pub fn dna() -> Self {
        Self::new(["A", "C", "G", "T"]).expect("static alphabet is valid")
    }

    /// A generic alphabet of `q` distinct symbols: `A C G T` first, then the
    /// remaining uppercase letters, then `x26`, `x27`, ...
    pub fn of_size(q: u32) -> Self {
        assert!(q >= 1, "alphabet size must be at least 1");
        let mut tokens: Vec<String> = vec!["A".into(), "C".into(), "G".into(), "T".into()];
        tokens.extend(
            ('B'..='Z')
                .filter(|c| !matches!(c, 'C' | 'G' | 'T'))
                .map(|c| c.to_string()),
        );
        let mut next = tokens.len() as u32;
        while next < q {
            tokens.push(format!("x{next}"));
            next += 1;
        }
        tokens.truncate(q as usize);
        Self::new(tokens).expect("generated symbols are distinct")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one symbol
    }

    /// Alphabet size as the `q` the counting formulas use.
    pub fn size(&self) -> u32 {
        self.symbols.len() as u32
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// Token of letter `letter`. Panics when out of range.
    pub fn symbol(&self, letter: u32) -> &str {
        &self.symbols[letter as usize]
    }

    pub fn index_of(&self, token: &str) -> Option<u32> {
        self.symbols
            .iter()
            .position(|s| s == token)
            .map(|i| i as u32)
    }

    /// Parse strand text against this alphabet. Empty text is the empty
    /// strand; comma-separated tokens and joined single characters are both
    /// accepted. Over an alphabet with multi-character symbols, comma-free
    /// text is a single token (multi-letter strands carry commas there).
    pub fn parse_strand(&self, text: &str) -> Result<Strand> {
        if text.is_empty() {
            return Ok(Strand::default());
        }
        let single = self.symbols.iter().all(|s| s.chars().count() == 1);
        let tokens: Vec<String> = if text.contains(',') {
            text.split(',').map(str::to_owned).collect()
        } else if single {
            text.chars().map(|c| c.to_string()).collect()
        } else {
            vec![text.to_owned()]
        };
        let mut letters = Vec::with_capacity(tokens.len());
        for tok in tokens {
            match self.index_of(&tok) {
                Some(i) => letters.push(i),
                None => {
                    return Err(Error::UnknownSymbol {
                        token: tok,
                        alphabet: self.to_string(),
                    })
                }
            }
        }
        Ok(Strand::from(letters))
    }

    /// Text form of a strand over this alphabet.
    pub fn format_strand(&self, strand: &Strand) -> String {
        let single = self.symbols.iter().all(|s| s.chars().count() == 1);
        let toks: Vec<&str> = strand.letters().iter().map(|&l| self.symbol(l)).collect();
        if single {
            toks.concat()
        } else {
            toks.join(",")
        }
    }

    /// Check that every letter of `strand` indexes into this alphabet.
    pub fn validate_strand(&self, strand: &Strand) -> Result<()> {
        let q = self.size();
        match strand.letters().iter().find(|&&l| l >= q) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, q }),
            None => Ok(()),
        }
    }

    /// The `ordinal`-th strand of length `len` in lexicographic order
    /// (most-significant letter first). `ordinal` must be below
    /// `size^len`.
    pub fn strand_at(&self, len: u32, ordinal: u64) -> Strand {
        let q = self.size() as u64;
        let mut letters = vec![0u32; len as usize];
        let mut rest = ordinal;
        for slot in letters.iter_mut().rev() {
            *slot = (rest % q) as u32;
            rest /= q;
        }
        debug_assert_eq!(rest, 0, "ordinal out of range");
        Strand::from(letters)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = self.symbols.iter().all(|s| s.chars().count() == 1);
        if single {
            write!(f, "{}", self.symbols.concat())
        } else {
            write!(f, "{}", self.symbols.join(","))
        }
    }
}

/// Finite sequence of alphabet indices.
///
/// Ordering is lexicographic on the letters (prefixes sort first), which
/// matches the enumeration order of the censuses.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strand(Vec<u32>);

impl Strand {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: u32) {
        self.0.push(letter);
    }

    /// First `n` letters (all of them when `n` exceeds the length).
    pub fn prefix(&self, n: usize) -> Strand {
        Strand(self.0[..n.min(self.0.len())].to_vec())
    }

    /// Copy with the last letter removed. Panics on the empty strand.
    pub fn without_last(&self) -> Strand {
        assert!(!self.is_empty(), "empty strand has no last letter");
        Strand(self.0[..self.0.len() - 1].to_vec())
    }
}

impl From<Vec<u32>> for Strand {
    fn from(letters: Vec<u32>) -> Self {
        Strand(letters)
    }
}

impl From<&[u32]> for Strand {
    fn from(letters: &[u32]) -> Self {
        Strand(letters.to_vec())
    }
}

impl FromIterator<u32> for Strand {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        Strand(iter.into_iter().collect())
    }
}

/// A master lineup: the machine's letter schedule. Finite, or a nonempty
/// base repeated without bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterLineup {
    base: Strand,
    cyclic: bool,
}

impl MasterLineup {
    pub fn finite(base: Strand) -> Self {
        Self {
            base,
            cyclic: false,
        }
    }

    pub fn cyclic(base: Strand) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::EmptyCyclicBase);
        }
        Ok(Self { base, cyclic: true })
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn base(&self) -> &Strand {
        &self.base
    }

    /// Letter at 0-based position `pos`, if the lineup is that long.
    pub fn letter(&self, pos: u64) -> Option<u32> {
        let len = self.base.len() as u64;
        if self.cyclic {
            Some(self.base.letters()[(pos % len) as usize])
        } else if pos < len {
            Some(self.base.letters()[pos as usize])
        } else {
            None
        }
    }
}

/// Order-preserving embedding test: true iff `x` can be obtained from `m` by
/// deleting letters (greedy left-to-right scan).
pub fn is_subsequence(x: &Strand, m: &Strand) -> bool {
    let mut it = m.letters().iter();
    x.letters().iter().all(|a| it.any(|b| b == a))
}

/// The length-`t` strand that cycles through the alphabet in order.
pub fn cyclic_lineup(alphabet: &Alphabet, t: u32) -> Strand {
    let q = alphabet.size();
    (0..t).map(|i| i % q).collect()
}

/// Synthesis time of `x` under lineup `m`: the least `s` such that `x` is a
/// subsequence of the first `s` letters of `m`, or `None` when no prefix
/// works. The empty strand takes time 0. Equals the end position of the
/// leftmost embedding.
pub fn synthesis_time(x: &Strand, m: &MasterLineup) -> Option<u64> {
    let mut pos: u64 = 0; // letters of m consumed so far
    for &a in x.letters() {
        let window = if m.is_cyclic() {
            m.base().len() as u64 // a letter recurs within one period or never
        } else {
            (m.base().len() as u64).saturating_sub(pos)
        };
        let mut found = false;
        for k in 0..window {
            if m.letter(pos + k) == Some(a) {
                pos += k + 1;
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    Some(pos)
}

/// True when every window of at most `p` consecutive letters of `m` has
/// pairwise-distinct letters; equivalently, equal letters sit at distance
/// at least `p`.
pub fn window_distinct(m: &Strand, p: u32) -> bool {
    assert!(p >= 1, "window length must be at least 1");
    let mut last_seen: HashMap<u32, usize> = HashMap::new();
    for (i, &a) in m.letters().iter().enumerate() {
        if let Some(&j) = last_seen.get(&a) {
            if i - j < p as usize {
                return false;
            }
        }
        last_seen.insert(a, i);
    }
    true
}

/// Acceptance table of a synthesis run over a finite lineup: entry
/// `(s, j)` says whether strand `j` accepts the letter offered at time
/// `s + 1`. Columns are the leftmost embeddings, so reading a column back
/// against the lineup reproduces the strand exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    lineup: Strand,
    strands: usize,
    accept: Vec<bool>, // row-major, time_steps x strands
}

impl Schedule {
    pub fn lineup(&self) -> &Strand {
        &self.lineup
    }

    pub fn time_steps(&self) -> usize {
        self.lineup.len()
    }

    pub fn strand_count(&self) -> usize {
        self.strands
    }

    pub fn accepts(&self, time: usize, strand: usize) -> bool {
        assert!(time < self.time_steps() && strand < self.strands);
        self.accept[time * self.strands + strand]
    }

    /// Acceptance column of strand `j`.
    pub fn column(&self, j: usize) -> Vec<bool> {
        (0..self.time_steps()).map(|s| self.accepts(s, j)).collect()
    }

    /// Read column `j` back into the strand it synthesizes.
    pub fn strand(&self, j: usize) -> Strand {
        (0..self.time_steps())
            .filter(|&s| self.accepts(s, j))
            .map(|s| self.lineup.letters()[s])
            .collect()
    }
}

/// Leftmost-embedding schedule of `strands` under lineup `m`. Fails with the
/// index of the first strand that is not a subsequence of `m`.
pub fn schedule(m: &Strand, strands: &[Strand]) -> Result<Schedule> {
    let t = m.len();
    let n = strands.len();
    let mut accept = vec![false; t * n];
    for (j, x) in strands.iter().enumerate() {
        let mut pos = 0usize;
        for &a in x.letters() {
            let hit = m.letters()[pos..].iter().position(|&b| b == a);
            match hit {
                Some(k) => {
                    accept[(pos + k) * n + j] = true;
                    pos += k + 1;
                }
                None => return Err(Error::NotASubsequence { index: j }),
            }
        }
    }
    Ok(Schedule {
        lineup: m.clone(),
        strands: n,
        accept,
    })
}
