//! Projections between the diagram variants.
//!
//! `p_r` forgets arrows, `p` forgets over/under and records the flat crossing
//! type as a letter, `i` turns letters back into signs, `q` rebuilds a
//! descending diagram from a flat word, and `tau0`/`tau1` swap letters/signs.

use crate::error::{Error, Result};
use crate::gauss::{BasedGaussDiagram, Chord, FlatChord, FlatWord, Letter, PseudoChord, PseudoDiagram, Sign};

/// Keeps the word and the signs, drops the arrows.
pub fn map_p_r(d: &BasedGaussDiagram) -> PseudoDiagram {
    let chords = d
        .chords()
        .iter()
        .map(|c| PseudoChord { id: c.id, end_first: c.end_first, end_second: c.end_second, sign: c.sign })
        .collect();
    PseudoDiagram::new(chords, d.is_closed()).expect("same word")
}

/// Flat crossing type of a chord: `a` when the tangent frame (first branch,
/// second branch) is positively oriented.
pub fn letter_of(c: &Chord) -> Letter {
    let frame = c.sign.times(Sign::from_positive(c.over_is_first()));
    match frame {
        Sign::Pos => Letter::A,
        Sign::Neg => Letter::B,
    }
}

pub fn map_p(d: &BasedGaussDiagram) -> Result<FlatWord> {
    if d.is_closed() {
        return Err(Error::RequiresBasePoint);
    }
    let chords = d
        .chords()
        .iter()
        .map(|c| FlatChord { id: c.id, end_first: c.end_first, end_second: c.end_second, letter: letter_of(c) })
        .collect();
    Ok(FlatWord::new(chords).expect("same word"))
}

pub fn tau0(f: &FlatWord) -> FlatWord {
    let chords = f.chords().iter().map(|c| FlatChord { letter: c.letter.swap(), ..*c }).collect();
    FlatWord::new(chords).expect("same word")
}

pub fn tau1(s: &PseudoDiagram) -> PseudoDiagram {
    let chords = s.chords().iter().map(|c| PseudoChord { sign: c.sign.flip(), ..*c }).collect();
    PseudoDiagram::new(chords, s.is_closed()).expect("same word")
}

fn sign_of_letter(l: Letter) -> Sign {
    match l {
        Letter::A => Sign::Pos,
        Letter::B => Sign::Neg,
    }
}

/// `a ↦ +`, `b ↦ −`; the result is based.
pub fn map_i(f: &FlatWord) -> PseudoDiagram {
    let chords = f
        .chords()
        .iter()
        .map(|c| PseudoChord {
            id: c.id,
            end_first: c.end_first,
            end_second: c.end_second,
            sign: sign_of_letter(c.letter),
        })
        .collect();
    PseudoDiagram::new(chords, false).expect("same word")
}

/// The descending diagram over a flat word: the first-traversed branch is
/// always the over-strand, which forces the sign from the letter.
pub fn map_q(f: &FlatWord) -> BasedGaussDiagram {
    let chords = f
        .chords()
        .iter()
        .map(|c| Chord {
            id: c.id,
            end_first: c.end_first,
            end_second: c.end_second,
            sign: sign_of_letter(c.letter),
            over_end: c.end_first,
        })
        .collect();
    BasedGaussDiagram::new(chords, false).expect("same word")
}

pub fn map_p_a(d: &BasedGaussDiagram) -> Result<FlatWord> {
    map_p(d).map(|f| tau0(&f))
}

pub fn map_p_ra(d: &BasedGaussDiagram) -> PseudoDiagram {
    tau1(&map_p_r(d))
}

pub fn map_i_a(f: &FlatWord) -> PseudoDiagram {
    tau1(&map_i(f))
}

/// Names the four projections of a based diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Pr,
    Pra,
    Ip,
    Iap,
}

impl MapKind {
    pub const ALL: [MapKind; 4] = [MapKind::Pr, MapKind::Pra, MapKind::Ip, MapKind::Iap];

    pub fn key(self) -> &'static str {
        match self {
            MapKind::Pr => "pr",
            MapKind::Pra => "pra",
            MapKind::Ip => "ip",
            MapKind::Iap => "iap",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MapKind::Pr => "p_r",
            MapKind::Pra => "p_ra",
            MapKind::Ip => "i∘p",
            MapKind::Iap => "i_a∘p",
        }
    }

    pub fn from_key(key: &str) -> Option<MapKind> {
        MapKind::ALL.into_iter().find(|m| m.key() == key)
    }
}

/// One value per projection: `p_r`, `p_ra = τ1∘p_r`, `i∘p`, `i_a∘p = τ1∘i∘p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FourWay<T> {
    pub pr: T,
    pub pra: T,
    pub ip: T,
    pub iap: T,
}

impl<T> FourWay<T> {
    pub fn get(&self, kind: MapKind) -> &T {
        match kind {
            MapKind::Pr => &self.pr,
            MapKind::Pra => &self.pra,
            MapKind::Ip => &self.ip,
            MapKind::Iap => &self.iap,
        }
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, mut f: F) -> FourWay<U> {
        FourWay { pr: f(&self.pr), pra: f(&self.pra), ip: f(&self.ip), iap: f(&self.iap) }
    }

    pub fn try_map<U, E, F: FnMut(&T) -> std::result::Result<U, E>>(
        &self,
        mut f: F,
    ) -> std::result::Result<FourWay<U>, E> {
        Ok(FourWay { pr: f(&self.pr)?, pra: f(&self.pra)?, ip: f(&self.ip)?, iap: f(&self.iap)? })
    }

    pub fn iter(&self) -> impl Iterator<Item = (MapKind, &T)> {
        MapKind::ALL.into_iter().map(move |k| (k, self.get(k)))
    }
}

/// One projection. Closed diagrams only admit `Pr` and `Pra`.
pub fn project(d: &BasedGaussDiagram, kind: MapKind) -> Result<PseudoDiagram> {
    match kind {
        MapKind::Pr => Ok(map_p_r(d)),
        MapKind::Pra => Ok(map_p_ra(d)),
        MapKind::Ip => Ok(map_i(&map_p(d)?)),
        MapKind::Iap => Ok(map_i_a(&map_p(d)?)),
    }
}

pub fn four_projections(d: &BasedGaussDiagram) -> Result<FourWay<PseudoDiagram>> {
    let flat = map_p(d)?;
    let pr = map_p_r(d);
    let ip = map_i(&flat);
    Ok(FourWay { pra: tau1(&pr), pr, iap: tau1(&ip), ip })
}
