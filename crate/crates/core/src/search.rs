//! Exhaustive enumeration of small based Gauss diagrams and invariant filters.
//!
//! Diagrams on `n` chords are enumerated word by word: every perfect matching
//! of `0..2n`, then every sign vector, then every arrow vector. The four
//! Jones polynomials of all `4^n` decorations of one word only depend on a
//! sign vector of the underlying chord diagram, so each word needs `2^n`
//! state sums instead of `4^(n+1)`.

use rayon::prelude::*;

use crate::bracket::jones;
use crate::error::{Error, Result};
use crate::gauss::{BasedGaussDiagram, Chord, PseudoChord, PseudoDiagram, Sign};
use crate::khovanov::{kh_four, GradedDims};
use crate::maps::FourWay;
use crate::poly::LaurentPoly;

pub const MAX_ENUMERATION_CHORDS: usize = 6;
pub const MAX_SEARCH_CHORDS: usize = 5;

/// Every perfect matching of `0..2n`, pairs ordered by their first position.
pub fn chord_words(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn extend(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let first = free.remove(0);
        for k in 0..free.len() {
            let partner = free.remove(k);
            cur.push((first, partner));
            extend(free, cur, out);
            cur.pop();
            free.insert(k, partner);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    extend(&mut (0..2 * n).collect(), &mut Vec::new(), &mut out);
    out
}

/// `(2n)! / (2ⁿ n!) · 4ⁿ`.
pub fn based_diagram_count(n: usize) -> u128 {
    let words: u128 = (1..=n as u128).map(|k| 2 * k - 1).product();
    words << (2 * n)
}

fn sign_bit(mask: u32, k: usize) -> Sign {
    Sign::from_positive(mask >> k & 1 == 1)
}

/// Bit `k` of `signs` set: chord `k` positive; of `overs`: over-passage first.
pub fn decorate(word: &[(usize, usize)], signs: u32, overs: u32) -> BasedGaussDiagram {
    let chords = word
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| Chord {
            id: k as u32 + 1,
            end_first: a,
            end_second: b,
            sign: sign_bit(signs, k),
            over_end: if overs >> k & 1 == 1 { a } else { b },
        })
        .collect();
    BasedGaussDiagram::new(chords, false).expect("matching is a valid word")
}

fn pseudo(word: &[(usize, usize)], signs: u32) -> PseudoDiagram {
    let chords = word
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| PseudoChord { id: k as u32 + 1, end_first: a, end_second: b, sign: sign_bit(signs, k) })
        .collect();
    PseudoDiagram::new(chords, true).expect("matching is a valid word")
}

/// All based diagrams on `n` chords in a fixed order: word, then signs, then arrows.
pub fn enumerate_based_diagrams(n: usize) -> Result<impl Iterator<Item = BasedGaussDiagram>> {
    if n > MAX_ENUMERATION_CHORDS {
        return Err(Error::TooLarge { n, limit: MAX_ENUMERATION_CHORDS });
    }
    let full = 1u32 << n;
    Ok(chord_words(n).into_iter().flat_map(move |word| {
        (0..full).flat_map(move |s| {
            let word = word.clone();
            (0..full).map(move |o| decorate(&word, s, o))
        })
    }))
}

/// The Jones polynomial of the closed chord diagram `word` under every sign vector.
pub fn word_jones_table(word: &[(usize, usize)]) -> Vec<LaurentPoly> {
    (0..1u32 << word.len()).map(|s| jones(&pseudo(word, s)).expect("small closed diagram")).collect()
}

/// The four Jones polynomials of `decorate(word, signs, overs)` read off a word table.
pub fn four_jones_from_table(table: &[LaurentPoly], n: usize, signs: u32, overs: u32) -> FourWay<LaurentPoly> {
    let full = (1u32 << n) - 1;
    // letter a exactly when the sign agrees with the arrow choice
    let letters = !(signs ^ overs) & full;
    FourWay {
        pr: table[signs as usize].clone(),
        pra: table[(!signs & full) as usize].clone(),
        ip: table[letters as usize].clone(),
        iap: table[(!letters & full) as usize].clone(),
    }
}

/// A diagram together with its four Jones polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hit {
    pub diagram: BasedGaussDiagram,
    pub jones: FourWay<LaurentPoly>,
}

/// All diagrams with at most `n_max` chords whose four-Jones tuple satisfies
/// `predicate`, sorted by chord count and then by Gauss code.
pub fn find_by_invariants<P>(n_max: usize, predicate: P) -> Result<Vec<Hit>>
where
    P: Fn(&FourWay<LaurentPoly>) -> bool + Sync,
{
    if n_max > MAX_SEARCH_CHORDS {
        return Err(Error::TooLarge { n: n_max, limit: MAX_SEARCH_CHORDS });
    }
    let mut hits: Vec<(usize, String, Hit)> = (0..=n_max)
        .flat_map(|n| chord_words(n).into_iter().map(move |w| (n, w)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|(n, word)| {
            let table = word_jones_table(&word);
            let full = 1u32 << n;
            let mut found = Vec::new();
            for s in 0..full {
                for o in 0..full {
                    let four = four_jones_from_table(&table, n, s, o);
                    if predicate(&four) {
                        let d = decorate(&word, s, o);
                        found.push((n, d.serialize(), Hit { diagram: d, jones: four }));
                    }
                }
            }
            found
        })
        .collect();
    hits.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(hits.into_iter().map(|(_, _, h)| h).collect())
}

/// Jones polynomial with `t ↦ t⁻¹`.
pub fn t_inverted(v: &LaurentPoly) -> LaurentPoly {
    v.invert_variable()
}

/// Diagrams with Jones polynomial `target`, split by whether
/// `V(i∘p) = target(t)` (`first`) or `V(i∘p) = target(t⁻¹)` (`second`).
#[derive(Clone, Debug, Default)]
pub struct OrientationPairs {
    pub first: Vec<Hit>,
    pub second: Vec<Hit>,
}

pub fn orientation_pairs(n_max: usize, target: &LaurentPoly) -> Result<OrientationPairs> {
    let inv = t_inverted(target);
    let hits = find_by_invariants(n_max, |f| f.pr == *target && (f.ip == *target || f.ip == inv))?;
    let (first, second) = hits.into_iter().partition(|h| h.jones.ip == *target);
    let mut pairs = OrientationPairs { first, second };
    // a symmetric target puts every hit in `first`; keep `second` consistent
    if inv == *target {
        pairs.second = pairs.first.clone();
    }
    Ok(pairs)
}

/// Diagrams whose descending projection reverses the variable:
/// `V(i∘p)(t) = V(t⁻¹) ≠ V(t)`.
pub fn reversed_descending(n_max: usize) -> Result<Vec<Hit>> {
    find_by_invariants(n_max, |f| f.ip != f.pr && f.ip == t_inverted(&f.pr))
}

/// Two diagrams with equal `V(p_r)` and different `V(i∘p)`, the first such
/// pair in search order.
pub fn jones_separation(n_max: usize) -> Result<Option<(Hit, Hit)>> {
    use std::collections::HashMap;
    let hits = find_by_invariants(n_max, |_| true)?;
    let mut seen: HashMap<&LaurentPoly, &Hit> = HashMap::new();
    for h in &hits {
        match seen.get(&h.jones.pr) {
            Some(other) if other.jones.ip != h.jones.ip => return Ok(Some(((*other).clone(), h.clone()))),
            Some(_) => {}
            None => {
                seen.insert(&h.jones.pr, h);
            }
        }
    }
    Ok(None)
}

/// Khovanov tables of the four projections of a hit.
pub fn hit_homology(h: &Hit) -> Result<FourWay<GradedDims>> {
    kh_four(&h.diagram)
}

/// Two diagrams with equal `KH(p_r)` but different `KH(i∘p)`, scanning all
/// diagrams up to `n_max` chords in enumeration order.
pub fn khovanov_separation(n_max: usize) -> Result<Option<(BasedGaussDiagram, BasedGaussDiagram)>> {
    use std::collections::HashMap;
    if n_max > MAX_SEARCH_CHORDS {
        return Err(Error::TooLarge { n: n_max, limit: MAX_SEARCH_CHORDS });
    }
    let mut seen: HashMap<GradedDims, (BasedGaussDiagram, GradedDims)> = HashMap::new();
    for n in 0..=n_max {
        for d in enumerate_based_diagrams(n)? {
            let kh = kh_four(&d)?;
            match seen.get(&kh.pr) {
                Some((other, other_ip)) if *other_ip != kh.ip => return Ok(Some((other.clone(), d))),
                Some(_) => {}
                None => {
                    seen.insert(kh.pr, (d, kh.ip));
                }
            }
        }
    }
    Ok(None)
}
