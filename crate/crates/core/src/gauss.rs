//! Gauss diagrams of long (based) and closed virtual knots, plus the two
//! arrow-free variants produced by the projection maps: flat words with
//! letters `a`/`b`, and pseudo diagrams with signs only.
//!
//! Positions are 0-based indices into the traversal word, counted from the
//! base point. A chord joins the two passages through one crossing; it stores
//! which of its endpoints is the over-passage rather than an arrow direction,
//! so reversing the traversal never needs to recompute anything.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    /// Product of two signs.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn from_positive(positive: bool) -> Sign {
        if positive {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// One crossing of a based Gauss diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Chord {
    pub id: u32,
    pub end_first: usize,
    pub end_second: usize,
    pub sign: Sign,
    /// Position of the over-passage; the arrow points from here to the other end.
    pub over_end: usize,
}

impl Chord {
    pub fn over_is_first(&self) -> bool {
        self.over_end == self.end_first
    }

    pub fn under_end(&self) -> usize {
        self.other_end(self.over_end)
    }

    pub fn other_end(&self, pos: usize) -> usize {
        if pos == self.end_first {
            self.end_second
        } else {
            self.end_first
        }
    }
}

/// Checks that the endpoint pairs tile `0..2n` exactly once and that ids are distinct.
fn check_word<I>(ends: I) -> Result<()>
where
    I: IntoIterator<Item = (u32, usize, usize)>,
{
    let ends: Vec<_> = ends.into_iter().collect();
    let len = 2 * ends.len();
    let mut used = vec![false; len];
    let mut ids = std::collections::HashSet::new();
    for (id, a, b) in ends {
        if id == 0 {
            return Err(Error::InvalidDiagram("chord ids must be positive".into()));
        }
        if !ids.insert(id) {
            return Err(Error::InvalidDiagram(format!("duplicate chord id {id}")));
        }
        if a >= b {
            return Err(Error::InvalidDiagram(format!("chord {id}: end_first {a} must precede end_second {b}")));
        }
        for p in [a, b] {
            if p >= len || used[p] {
                return Err(Error::InvalidDiagram(format!("position {p} is out of range or used twice")));
            }
            used[p] = true;
        }
    }
    Ok(())
}

/// Position → index into the chord list.
fn endpoint_table<I>(len: usize, ends: I) -> Vec<usize>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut table = vec![usize::MAX; len];
    for (k, (a, b)) in ends.into_iter().enumerate() {
        table[a] = k;
        table[b] = k;
    }
    table
}

/// A Gauss diagram with signs and arrows, based unless `closed` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasedGaussDiagram {
    chords: Vec<Chord>,
    closed: bool,
}

impl BasedGaussDiagram {
    pub fn empty() -> Self {
        BasedGaussDiagram { chords: Vec::new(), closed: false }
    }

    /// Validates and normalizes (chords sorted by first endpoint).
    pub fn new(mut chords: Vec<Chord>, closed: bool) -> Result<Self> {
        check_word(chords.iter().map(|c| (c.id, c.end_first, c.end_second)))?;
        if let Some(c) = chords.iter().find(|c| c.over_end != c.end_first && c.over_end != c.end_second) {
            return Err(Error::InvalidDiagram(format!(
                "chord {}: over_end {} is not one of its endpoints",
                c.id, c.over_end
            )));
        }
        chords.sort_by_key(|c| c.end_first);
        Ok(BasedGaussDiagram { chords, closed })
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn n_chords(&self) -> usize {
        self.chords.len()
    }

    /// Length of the traversal word (2n).
    pub fn word_len(&self) -> usize {
        2 * self.chords.len()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn chord(&self, id: u32) -> Option<&Chord> {
        self.chords.iter().find(|c| c.id == id)
    }

    pub fn max_id(&self) -> u32 {
        self.chords.iter().map(|c| c.id).max().unwrap_or(0)
    }

    /// For each position, the index (into [`chords`](Self::chords)) of the chord ending there.
    pub fn endpoint_table(&self) -> Vec<usize> {
        endpoint_table(self.word_len(), self.chords.iter().map(|c| (c.end_first, c.end_second)))
    }

    pub fn writhe(&self) -> i32 {
        self.chords.iter().map(|c| c.sign.value()).sum()
    }

    /// Identifies the two ends of a long diagram.
    pub fn close(&self) -> Result<Self> {
        if self.closed {
            return Err(Error::AlreadyClosed);
        }
        Ok(BasedGaussDiagram { chords: self.chords.clone(), closed: true })
    }

    /// Reverses the traversal orientation: position `p` becomes `2n-1-p`.
    pub fn reverse(&self) -> Self {
        let last = self.word_len().saturating_sub(1);
        let chords = self
            .chords
            .iter()
            .map(|c| Chord {
                id: c.id,
                end_first: last - c.end_second,
                end_second: last - c.end_first,
                sign: c.sign,
                over_end: last - c.over_end,
            })
            .collect();
        BasedGaussDiagram::new(chords, self.closed).expect("reversal preserves validity")
    }

    /// Crossing switch at every chord: sign flipped, over/under swapped.
    pub fn mirror(&self) -> Self {
        let chords = self.chords.iter().map(|c| Chord { sign: c.sign.flip(), over_end: c.under_end(), ..*c }).collect();
        BasedGaussDiagram { chords, closed: self.closed }
    }

    /// Swaps over/under at one chord while keeping its sign.
    pub fn virtualize_chord(&self, id: u32) -> Result<Self> {
        if self.chord(id).is_none() {
            return Err(Error::NoSuchChord { id });
        }
        let chords =
            self.chords.iter().map(|c| if c.id == id { Chord { over_end: c.under_end(), ..*c } } else { *c }).collect();
        Ok(BasedGaussDiagram { chords, closed: self.closed })
    }

    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BasedGaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let table = self.endpoint_table();
        let mut tokens: Vec<String> = table
            .iter()
            .enumerate()
            .map(|(pos, &k)| {
                let c = &self.chords[k];
                let role = if c.over_end == pos { 'O' } else { 'U' };
                format!("{role}{}{}", c.id, c.sign.symbol())
            })
            .collect();
        if self.closed {
            tokens.push("@closed".to_string());
        }
        f.write_str(&tokens.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    Over,
    Under,
}

/// Splits one whitespace-free chunk into `O<k><s>` / `U<k><s>` tokens.
fn scan_chunk(chunk: &str, out: &mut Vec<(Role, u32, Sign)>) -> Result<()> {
    let bytes = chunk.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let malformed = || {
            let end = chunk[start..]
                .char_indices()
                .skip(1)
                .find(|&(_, ch)| ch == 'O' || ch == 'U')
                .map_or(chunk.len(), |(k, _)| start + k);
            Error::MalformedToken { token: chunk[start..end].to_string() }
        };
        let role = match bytes[i] {
            b'O' => Role::Over,
            b'U' => Role::Under,
            _ => return Err(malformed()),
        };
        i += 1;
        let digits = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == digits || i >= bytes.len() {
            return Err(malformed());
        }
        let id: u32 = chunk[digits..i].parse().map_err(|_| malformed())?;
        if id == 0 {
            return Err(malformed());
        }
        let sign = match bytes[i] {
            b'+' => Sign::Pos,
            b'-' => Sign::Neg,
            _ => return Err(malformed()),
        };
        i += 1;
        out.push((role, id, sign));
    }
    Ok(())
}

/// Parses the `O<k><s>` / `U<k><s>` token format, with an optional trailing `@closed`.
pub fn parse_gauss_code(text: &str) -> Result<BasedGaussDiagram> {
    let chunks: Vec<&str> = text.split_whitespace().collect();
    let mut closed = false;
    let mut tokens = Vec::new();
    for (k, chunk) in chunks.iter().enumerate() {
        if *chunk == "@closed" {
            if k + 1 != chunks.len() {
                return Err(Error::MalformedToken { token: chunk.to_string() });
            }
            closed = true;
        } else {
            scan_chunk(chunk, &mut tokens)?;
        }
    }

    let mut seen: BTreeMap<u32, Vec<(usize, Role, Sign)>> = BTreeMap::new();
    for (pos, &(role, id, sign)) in tokens.iter().enumerate() {
        seen.entry(id).or_default().push((pos, role, sign));
    }
    let mut chords = Vec::with_capacity(seen.len());
    for (&id, occ) in &seen {
        if occ.len() != 2 {
            return Err(Error::ChordSeenOnceOrThrice { id, count: occ.len() });
        }
        let (a, b) = (occ[0], occ[1]);
        if a.1 == b.1 {
            return Err(Error::DuplicateRole { id });
        }
        if a.2 != b.2 {
            return Err(Error::SignMismatch { id });
        }
        let over_end = if a.1 == Role::Over { a.0 } else { b.0 };
        chords.push(Chord { id, end_first: a.0, end_second: b.0, sign: a.2, over_end });
    }
    BasedGaussDiagram::new(chords, closed)
}

impl FromStr for BasedGaussDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gauss_code(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FlatChord {
    pub id: u32,
    pub end_first: usize,
    pub end_second: usize,
    pub letter: Letter,
}

/// A based chord diagram whose chords carry the letter `a` or `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlatWord {
    chords: Vec<FlatChord>,
}

impl FlatWord {
    pub fn empty() -> Self {
        FlatWord { chords: Vec::new() }
    }

    pub fn new(mut chords: Vec<FlatChord>) -> Result<Self> {
        check_word(chords.iter().map(|c| (c.id, c.end_first, c.end_second)))?;
        chords.sort_by_key(|c| c.end_first);
        Ok(FlatWord { chords })
    }

    pub fn chords(&self) -> &[FlatChord] {
        &self.chords
    }

    pub fn n_chords(&self) -> usize {
        self.chords.len()
    }

    pub fn word_len(&self) -> usize {
        2 * self.chords.len()
    }

    pub fn endpoint_table(&self) -> Vec<usize> {
        endpoint_table(self.word_len(), self.chords.iter().map(|c| (c.end_first, c.end_second)))
    }

    /// Swaps the letter of a single chord; `None` if no such chord.
    pub fn with_letter_flipped(&self, id: u32) -> Option<Self> {
        self.chords.iter().position(|c| c.id == id)?;
        let chords = self
            .chords
            .iter()
            .map(|c| if c.id == id { FlatChord { letter: c.letter.swap(), ..*c } } else { *c })
            .collect();
        Some(FlatWord { chords })
    }
}

impl fmt::Display for FlatWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let table = self.endpoint_table();
        let tokens: Vec<String> = table
            .iter()
            .enumerate()
            .map(|(pos, &k)| {
                let c = &self.chords[k];
                if c.end_first == pos {
                    format!("{}{}", c.id, c.letter.symbol())
                } else {
                    c.id.to_string()
                }
            })
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

impl FromStr for FlatWord {
    type Err = Error;

    /// Accepts `<id>` or `<id><letter>` tokens; each id twice, with a letter on
    /// at least one occurrence and agreeing letters where both carry one.
    fn from_str(s: &str) -> Result<Self> {
        let mut seen: BTreeMap<u32, Vec<(usize, Option<Letter>)>> = BTreeMap::new();
        for (pos, tok) in s.split_whitespace().enumerate() {
            let malformed = || Error::MalformedToken { token: tok.to_string() };
            let (digits, letter) = match tok.as_bytes().last() {
                Some(b'a') => (&tok[..tok.len() - 1], Some(Letter::A)),
                Some(b'b') => (&tok[..tok.len() - 1], Some(Letter::B)),
                _ => (tok, None),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let id: u32 = digits.parse().map_err(|_| malformed())?;
            if id == 0 {
                return Err(malformed());
            }
            seen.entry(id).or_default().push((pos, letter));
        }
        let mut chords = Vec::new();
        for (&id, occ) in &seen {
            if occ.len() != 2 {
                return Err(Error::ChordSeenOnceOrThrice { id, count: occ.len() });
            }
            let letter = match (occ[0].1, occ[1].1) {
                (Some(x), Some(y)) if x != y => return Err(Error::SignMismatch { id }),
                (Some(x), _) | (None, Some(x)) => x,
                (None, None) => {
                    return Err(Error::MalformedToken { token: id.to_string() });
                }
            };
            chords.push(FlatChord { id, end_first: occ[0].0, end_second: occ[1].0, letter });
        }
        FlatWord::new(chords)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PseudoChord {
    pub id: u32,
    pub end_first: usize,
    pub end_second: usize,
    pub sign: Sign,
}

/// A chord diagram with signs and no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PseudoDiagram {
    chords: Vec<PseudoChord>,
    closed: bool,
}

impl PseudoDiagram {
    pub fn empty() -> Self {
        PseudoDiagram { chords: Vec::new(), closed: false }
    }

    pub fn new(mut chords: Vec<PseudoChord>, closed: bool) -> Result<Self> {
        check_word(chords.iter().map(|c| (c.id, c.end_first, c.end_second)))?;
        chords.sort_by_key(|c| c.end_first);
        Ok(PseudoDiagram { chords, closed })
    }

    pub fn chords(&self) -> &[PseudoChord] {
        &self.chords
    }

    pub fn n_chords(&self) -> usize {
        self.chords.len()
    }

    pub fn word_len(&self) -> usize {
        2 * self.chords.len()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// The same diagram with the closed flag set (idempotent).
    pub fn closure(&self) -> Self {
        PseudoDiagram { chords: self.chords.clone(), closed: true }
    }

    pub fn endpoint_table(&self) -> Vec<usize> {
        endpoint_table(self.word_len(), self.chords.iter().map(|c| (c.end_first, c.end_second)))
    }

    pub fn writhe(&self) -> i32 {
        self.chords.iter().map(|c| c.sign.value()).sum()
    }
}

impl fmt::Display for PseudoDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let table = self.endpoint_table();
        let mut tokens: Vec<String> =
            table.iter().map(|&k| format!("{}{}", self.chords[k].id, self.chords[k].sign.symbol())).collect();
        if self.closed {
            tokens.push("@closed".to_string());
        }
        f.write_str(&tokens.join(" "))
    }
}
