//! Reidemeister moves on based Gauss diagrams.
//!
//! Moves never wrap across the base point: adjacency is linear in the word.
//!
//! * R1: one chord with adjacent endpoints, any sign, either arrow.
//! * R2: two chords whose endpoints form two adjacent pairs (one endpoint of
//!   each chord per pair), opposite signs, both over-passages in the same
//!   pair. The second pair lists the chords in the same order (parallel
//!   strands) or reversed (antiparallel).
//! * R3: three chords X, Y, Z on three adjacent pairs S1 < S2 < S3 (the three
//!   branches in traversal order) with X joining S1–S2, Y joining S1–S3 and Z
//!   joining S2–S3. One side of the move reads `S1=[X Y] S2=[X Z] S3=[Y Z]`,
//!   the other `S1=[Y X] S2=[Z X] S3=[Z Y]`. Signs and arrows must form one
//!   of the twelve rows of [`R3_TABLE`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gauss::{BasedGaussDiagram, Chord, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] =
        [MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert, MoveKind::R2Delete, MoveKind::R3];
}

/// Arrow class of an R3 chord: α when the over-passage is on the earlier branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Alpha,
    Beta,
}

use Direction::{Alpha as Al, Beta as Be};
use Sign::{Neg as M, Pos as P};

/// Sign and direction triples for (X, Y, Z), cases 1–12.
pub const R3_TABLE: [([Sign; 3], [Direction; 3]); 12] = [
    ([P, P, P], [Al, Al, Al]),
    ([P, P, P], [Be, Be, Be]),
    ([M, M, M], [Al, Al, Al]),
    ([M, M, M], [Be, Be, Be]),
    ([P, P, M], [Al, Al, Be]),
    ([P, P, M], [Be, Be, Al]),
    ([M, M, P], [Al, Al, Be]),
    ([M, M, P], [Be, Be, Al]),
    ([P, M, M], [Al, Be, Be]),
    ([P, M, M], [Be, Al, Al]),
    ([M, P, P], [Al, Be, Be]),
    ([M, P, P], [Be, Al, Al]),
];

/// The case number (1–12) of a sign/direction triple in [`R3_TABLE`].
pub fn r3_case(signs: [Sign; 3], dirs: [Direction; 3]) -> Option<u8> {
    R3_TABLE.iter().position(|&(s, d)| s == signs && d == dirs).map(|k| k as u8 + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveSpec {
    /// New chord at positions `gap, gap+1` of the result.
    R1Insert {
        gap: usize,
        sign: Sign,
        over_first: bool,
        id: u32,
    },
    R1Delete {
        chord: u32,
    },
    /// `ids.0` gets `sign`, `ids.1` the opposite; segment A = `[ids.0 ids.1]`
    /// goes into `gaps.0`, segment B into `gaps.1` (gaps in the old word).
    R2Insert {
        gaps: (usize, usize),
        sign: Sign,
        over_on_first: bool,
        parallel: bool,
        ids: (u32, u32),
    },
    R2Delete {
        chords: (u32, u32),
    },
    /// Chords `[X, Y, Z]` and their case number in [`R3_TABLE`].
    R3 {
        chords: [u32; 3],
        case: u8,
    },
}

impl MoveSpec {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSpec::R1Insert { .. } => MoveKind::R1Insert,
            MoveSpec::R1Delete { .. } => MoveKind::R1Delete,
            MoveSpec::R2Insert { .. } => MoveKind::R2Insert,
            MoveSpec::R2Delete { .. } => MoveKind::R2Delete,
            MoveSpec::R3 { .. } => MoveKind::R3,
        }
    }
}

impl std::fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            MoveSpec::R1Insert { gap, sign, over_first, id } => {
                write!(
                    f,
                    "R1+ gap={gap} sign={} over={} id={id}",
                    sign.symbol(),
                    if over_first { "first" } else { "second" }
                )
            }
            MoveSpec::R1Delete { chord } => write!(f, "R1- chord={chord}"),
            MoveSpec::R2Insert { gaps, sign, over_on_first, parallel, ids } => write!(
                f,
                "R2+ gaps=({},{}) sign={} over={} {} ids=({},{})",
                gaps.0,
                gaps.1,
                sign.symbol(),
                if over_on_first { "first" } else { "second" },
                if parallel { "parallel" } else { "antiparallel" },
                ids.0,
                ids.1
            ),
            MoveSpec::R2Delete { chords } => write!(f, "R2- chords=({},{})", chords.0, chords.1),
            MoveSpec::R3 { chords, case } => {
                write!(f, "R3 chords=({},{},{}) case={case}", chords[0], chords[1], chords[2])
            }
        }
    }
}

/// Positions of an R3 site: segment starts and which side of the move it is.
#[derive(Clone, Copy, Debug)]
struct R3Site {
    starts: [usize; 3],
    chords: [usize; 3],
}

fn dir_of(c: &Chord) -> Direction {
    if c.over_is_first() {
        Direction::Alpha
    } else {
        Direction::Beta
    }
}

fn r3_sites(d: &BasedGaussDiagram) -> Vec<(R3Site, u8)> {
    let chords = d.chords();
    let table = d.endpoint_table();
    let len = d.word_len();
    let mut out = Vec::new();
    for p in 0..len.saturating_sub(1) {
        let (c1, c2) = (table[p], table[p + 1]);
        if c1 == c2 {
            continue;
        }
        // S1 = [X Y], S2 = [X Z], S3 = [Y Z]
        let left = || -> Option<R3Site> {
            let (x, y) = (c1, c2);
            if chords[x].end_first != p || chords[y].end_first != p + 1 {
                return None;
            }
            let q = chords[x].end_second;
            let z = *table.get(q + 1)?;
            if z == x || z == y || chords[z].end_first != q + 1 {
                return None;
            }
            let r = chords[y].end_second;
            (r > q + 1 && chords[z].end_second == r + 1).then_some(R3Site { starts: [p, q, r], chords: [x, y, z] })
        };
        // S1 = [Y X], S2 = [Z X], S3 = [Z Y]
        let right = || -> Option<R3Site> {
            let (y, x) = (c1, c2);
            if chords[y].end_first != p || chords[x].end_first != p + 1 {
                return None;
            }
            let q = chords[x].end_second;
            if q < p + 3 {
                return None;
            }
            let z = table[q - 1];
            if z == x || z == y || chords[z].end_first != q - 1 {
                return None;
            }
            let r = chords[y].end_second;
            (r > q + 1 && chords[z].end_second == r - 1)
                .then_some(R3Site { starts: [p, q - 1, r - 1], chords: [x, y, z] })
        };
        for site in [left(), right()].into_iter().flatten() {
            let cs = site.chords.map(|k| &chords[k]);
            if let Some(case) = r3_case(cs.map(|c| c.sign), cs.map(dir_of)) {
                out.push((site, case));
            }
        }
    }
    out
}

/// `(first chord index, second chord index, start of second segment)`.
fn r2_sites(d: &BasedGaussDiagram) -> Vec<(usize, usize, usize)> {
    let chords = d.chords();
    let table = d.endpoint_table();
    let mut out = Vec::new();
    for p in 0..d.word_len().saturating_sub(1) {
        let (a, b) = (table[p], table[p + 1]);
        if a == b || chords[a].end_first != p || chords[b].end_first != p + 1 {
            continue;
        }
        let (oa, ob) = (chords[a].end_second, chords[b].end_second);
        let s = oa.min(ob);
        if oa.max(ob) != s + 1 || s < p + 2 {
            continue;
        }
        let in_first = |c: &Chord| c.over_end <= p + 1;
        if chords[a].sign != chords[b].sign && in_first(&chords[a]) == in_first(&chords[b]) {
            out.push((a, b, s));
        }
    }
    out
}

/// All applicable moves of one kind. Closed diagrams have none.
pub fn enumerate_moves(d: &BasedGaussDiagram, kind: MoveKind) -> Vec<MoveSpec> {
    if d.is_closed() {
        return Vec::new();
    }
    let chords = d.chords();
    let gaps = d.word_len() + 1;
    let fresh = d.max_id() + 1;
    match kind {
        MoveKind::R1Insert => (0..gaps)
            .flat_map(|gap| {
                [Sign::Pos, Sign::Neg].into_iter().flat_map(move |sign| {
                    [true, false].into_iter().map(move |over_first| MoveSpec::R1Insert {
                        gap,
                        sign,
                        over_first,
                        id: fresh,
                    })
                })
            })
            .collect(),
        MoveKind::R1Delete => chords
            .iter()
            .filter(|c| c.end_second == c.end_first + 1)
            .map(|c| MoveSpec::R1Delete { chord: c.id })
            .collect(),
        MoveKind::R2Insert => {
            let mut out = Vec::new();
            for g1 in 0..gaps {
                for g2 in g1..gaps {
                    for sign in [Sign::Pos, Sign::Neg] {
                        for over_on_first in [true, false] {
                            for parallel in [true, false] {
                                out.push(MoveSpec::R2Insert {
                                    gaps: (g1, g2),
                                    sign,
                                    over_on_first,
                                    parallel,
                                    ids: (fresh, fresh + 1),
                                });
                            }
                        }
                    }
                }
            }
            out
        }
        MoveKind::R2Delete => r2_sites(d)
            .into_iter()
            .map(|(a, b, _)| MoveSpec::R2Delete { chords: (chords[a].id, chords[b].id) })
            .collect(),
        MoveKind::R3 => r3_sites(d)
            .into_iter()
            .map(|(site, case)| MoveSpec::R3 { chords: site.chords.map(|k| chords[k].id), case })
            .collect(),
    }
}

pub fn enumerate_all_moves(d: &BasedGaussDiagram) -> Vec<MoveSpec> {
    MoveKind::ALL.iter().flat_map(|&k| enumerate_moves(d, k)).collect()
}

/// Rebuilds a diagram after sending every old position through `relocate`.
fn relocated(chords: impl Iterator<Item = Chord>, relocate: impl Fn(usize) -> usize) -> Vec<Chord> {
    chords
        .map(|c| {
            let (a, b) = (relocate(c.end_first), relocate(c.end_second));
            Chord { end_first: a.min(b), end_second: a.max(b), over_end: relocate(c.over_end), ..c }
        })
        .collect()
}

fn without(d: &BasedGaussDiagram, ids: &[u32]) -> Vec<Chord> {
    let removed: Vec<usize> =
        d.chords().iter().filter(|c| ids.contains(&c.id)).flat_map(|c| [c.end_first, c.end_second]).collect();
    let shift = |p: usize| p - removed.iter().filter(|&&r| r < p).count();
    relocated(d.chords().iter().filter(|c| !ids.contains(&c.id)).copied(), shift)
}

pub fn apply_move(d: &BasedGaussDiagram, m: &MoveSpec) -> Result<BasedGaussDiagram> {
    if d.is_closed() {
        return Err(Error::RequiresBasePoint);
    }
    let len = d.word_len();
    match *m {
        MoveSpec::R1Insert { gap, sign, over_first, id } => {
            if gap > len || id == 0 || d.chord(id).is_some() {
                return Err(Error::InvalidSite);
            }
            let mut chords = relocated(d.chords().iter().copied(), |p| if p >= gap { p + 2 } else { p });
            let over_end = if over_first { gap } else { gap + 1 };
            chords.push(Chord { id, end_first: gap, end_second: gap + 1, sign, over_end });
            BasedGaussDiagram::new(chords, false)
        }
        MoveSpec::R1Delete { chord } => {
            let c = d.chord(chord).ok_or(Error::InvalidSite)?;
            if c.end_second != c.end_first + 1 {
                return Err(Error::InvalidSite);
            }
            BasedGaussDiagram::new(without(d, &[chord]), false)
        }
        MoveSpec::R2Insert { gaps: (g1, g2), sign, over_on_first, parallel, ids: (i1, i2) } => {
            if g1 > g2 || g2 > len || i1 == 0 || i2 == 0 || i1 == i2 || d.chord(i1).is_some() || d.chord(i2).is_some() {
                return Err(Error::InvalidSite);
            }
            let mut chords = relocated(d.chords().iter().copied(), |p| {
                if p < g1 {
                    p
                } else if p < g2 {
                    p + 2
                } else {
                    p + 4
                }
            });
            let (a, b) = (g1, g2 + 2);
            let (b1, b2) = if parallel { (b, b + 1) } else { (b + 1, b) };
            let over1 = if over_on_first { a } else { b1 };
            let over2 = if over_on_first { a + 1 } else { b2 };
            chords.push(Chord { id: i1, end_first: a, end_second: b1, sign, over_end: over1 });
            chords.push(Chord { id: i2, end_first: a + 1, end_second: b2, sign: sign.flip(), over_end: over2 });
            BasedGaussDiagram::new(chords, false)
        }
        MoveSpec::R2Delete { chords: (x, y) } => {
            let found = r2_sites(d).into_iter().any(|(a, b, _)| {
                let (ia, ib) = (d.chords()[a].id, d.chords()[b].id);
                (ia, ib) == (x, y) || (ia, ib) == (y, x)
            });
            if !found {
                return Err(Error::InvalidSite);
            }
            BasedGaussDiagram::new(without(d, &[x, y]), false)
        }
        MoveSpec::R3 { chords: ids, case } => {
            let (site, _) = r3_sites(d)
                .into_iter()
                .find(|(site, c)| *c == case && site.chords.map(|k| d.chords()[k].id) == ids)
                .ok_or(Error::InvalidSite)?;
            let [s1, s2, s3] = site.starts;
            let swap = |p: usize| {
                for s in [s1, s2, s3] {
                    if p == s {
                        return s + 1;
                    }
                    if p == s + 1 {
                        return s;
                    }
                }
                p
            };
            BasedGaussDiagram::new(relocated(d.chords().iter().copied(), swap), false)
        }
    }
}

/// A move undoing `m` on `apply_move(d, m)`.
pub fn inverse_move(d: &BasedGaussDiagram, m: &MoveSpec) -> Result<MoveSpec> {
    Ok(match *m {
        MoveSpec::R1Insert { id, .. } => MoveSpec::R1Delete { chord: id },
        MoveSpec::R1Delete { chord } => {
            let c = d.chord(chord).ok_or(Error::InvalidSite)?;
            MoveSpec::R1Insert { gap: c.end_first, sign: c.sign, over_first: c.over_is_first(), id: c.id }
        }
        MoveSpec::R2Insert { ids, .. } => MoveSpec::R2Delete { chords: ids },
        MoveSpec::R2Delete { chords: (x, y) } => {
            let chords = d.chords();
            let (a, b, s) = r2_sites(d)
                .into_iter()
                .find(|&(a, b, _)| {
                    let (ia, ib) = (chords[a].id, chords[b].id);
                    (ia, ib) == (x, y) || (ia, ib) == (y, x)
                })
                .ok_or(Error::InvalidSite)?;
            let (ca, cb) = (&chords[a], &chords[b]);
            MoveSpec::R2Insert {
                gaps: (ca.end_first, s - 2),
                sign: ca.sign,
                over_on_first: ca.over_is_first(),
                parallel: ca.end_second == s,
                ids: (ca.id, cb.id),
            }
        }
        MoveSpec::R3 { .. } => *m,
    })
}

/// Cap on chord growth used by [`random_walk`].
pub fn default_walk_cap(d: &BasedGaussDiagram) -> usize {
    d.n_chords() + 4
}

pub fn random_walk(d: &BasedGaussDiagram, steps: usize, seed: u64) -> BasedGaussDiagram {
    random_walk_trace(d, steps, seed, default_walk_cap(d)).0
}

/// Each step picks a move kind uniformly among those with an applicable
/// site (insertions only while the result stays within `max_chords`), then a
/// uniform site of that kind. Returns the final diagram and the moves taken.
pub fn random_walk_trace(
    d: &BasedGaussDiagram,
    steps: usize,
    seed: u64,
    max_chords: usize,
) -> (BasedGaussDiagram, Vec<MoveSpec>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut trace = Vec::with_capacity(steps);
    if cur.is_closed() {
        return (cur, trace);
    }
    for _ in 0..steps {
        let n = cur.n_chords();
        let options: Vec<Vec<MoveSpec>> = MoveKind::ALL
            .iter()
            .filter(|&&k| match k {
                MoveKind::R1Insert => n < max_chords,
                MoveKind::R2Insert => n + 2 <= max_chords,
                _ => true,
            })
            .map(|&k| enumerate_moves(&cur, k))
            .filter(|v| !v.is_empty())
            .collect();
        let Some(kind) = options.choose(&mut rng) else {
            break;
        };
        let m = kind[rng.gen_range(0..kind.len())];
        cur = apply_move(&cur, &m).expect("enumerated moves apply");
        trace.push(m);
    }
    (cur, trace)
}
