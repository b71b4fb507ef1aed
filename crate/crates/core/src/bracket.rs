//! Kauffman state sum and the Jones polynomial of signed chord diagrams.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gauss::{BasedGaussDiagram, PseudoDiagram};
use crate::maps::{four_projections, FourWay};
use crate::poly::LaurentPoly;
use crate::state::{Smoothing, StateMask};

pub const DEFAULT_JONES_LIMIT: usize = 20;

const PARALLEL_FROM: usize = 14;

/// `−A² − A⁻²`, the value of an extra circle.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_pairs([(2, -1), (-2, -1)])
}

pub fn writhe(s: &PseudoDiagram) -> i32 {
    s.writhe()
}

/// Histogram `counts[#positive markers][#circles]` over all `2^n` states.
fn state_histogram(sm: &Smoothing) -> Vec<Vec<u64>> {
    let n = sm.n_chords();
    let empty = || vec![vec![0u64; n + 2]; n + 1];
    let tally = |mut acc: Vec<Vec<u64>>, m: u64| {
        let mask = StateMask(m);
        acc[mask.positive_count() as usize][sm.circle_count(mask)] += 1;
        acc
    };
    let total = 1u64 << n;
    if n < PARALLEL_FROM {
        (0..total).fold(empty(), tally)
    } else {
        (0..total).into_par_iter().fold(empty, tally).reduce(empty, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        })
    }
}

pub fn kauffman_bracket(s: &PseudoDiagram) -> Result<LaurentPoly> {
    kauffman_bracket_limited(s, DEFAULT_JONES_LIMIT)
}

/// `Σ_S A^σ(S) (−A² − A⁻²)^(|S|−1)` over all markers of a closed diagram.
pub fn kauffman_bracket_limited(s: &PseudoDiagram, limit: usize) -> Result<LaurentPoly> {
    if !s.is_closed() {
        return Err(Error::NotClosed);
    }
    let n = s.n_chords();
    if n > limit {
        return Err(Error::TooManyChords { n, limit });
    }
    let sm = Smoothing::new(s)?;
    let hist = state_histogram(&sm);
    let d = loop_value();
    let d_pows: Vec<LaurentPoly> = (0..=n as u32).map(|k| d.pow(k)).collect();
    let mut out = LaurentPoly::zero();
    for (pos, row) in hist.iter().enumerate() {
        let sigma = 2 * pos as i32 - n as i32;
        for (circles, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = &LaurentPoly::monomial(count as i64, sigma) * &d_pows[circles - 1];
            out += &term;
        }
    }
    Ok(out)
}

pub fn jones(s: &PseudoDiagram) -> Result<LaurentPoly> {
    jones_limited(s, DEFAULT_JONES_LIMIT)
}

/// `(−A³)^(−w) ⟨s⟩`, closing a based diagram first.
pub fn jones_limited(s: &PseudoDiagram, limit: usize) -> Result<LaurentPoly> {
    let closed = s.closure();
    let bracket = kauffman_bracket_limited(&closed, limit)?;
    let w = closed.writhe();
    let norm = LaurentPoly::monomial(if w % 2 == 0 { 1 } else { -1 }, -3 * w);
    Ok(&norm * &bracket)
}

pub fn four_jones(d: &BasedGaussDiagram) -> Result<FourWay<LaurentPoly>> {
    four_jones_limited(d, DEFAULT_JONES_LIMIT)
}

pub fn four_jones_limited(d: &BasedGaussDiagram, limit: usize) -> Result<FourWay<LaurentPoly>> {
    four_projections(d)?.try_map(|p| jones_limited(p, limit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{parse_gauss_code, PseudoChord, Sign};
    use crate::maps::map_p_r;

    fn pr(code: &str) -> PseudoDiagram {
        map_p_r(&parse_gauss_code(code).unwrap())
    }

    fn a(pairs: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn bracket_of_unknot_and_kink() {
        assert_eq!(kauffman_bracket(&PseudoDiagram::empty().closure()).unwrap(), LaurentPoly::one());
        assert_eq!(kauffman_bracket(&pr("O1+ U1+ @closed")).unwrap(), a(&[(3, -1)]));
        assert_eq!(kauffman_bracket(&pr("O1- U1- @closed")).unwrap(), a(&[(-3, -1)]));
    }

    #[test]
    fn bracket_requires_closed_and_bounded() {
        assert_eq!(kauffman_bracket(&pr("O1+ U1+")), Err(Error::NotClosed));
        let chords = (0..3)
            .map(|k| PseudoChord {
                id: k + 1,
                end_first: 2 * k as usize,
                end_second: 2 * k as usize + 1,
                sign: Sign::Pos,
            })
            .collect();
        let s = PseudoDiagram::new(chords, true).unwrap();
        assert_eq!(kauffman_bracket_limited(&s, 2), Err(Error::TooManyChords { n: 3, limit: 2 }));
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(writhe(&PseudoDiagram::empty()), 0);
        assert_eq!(writhe(&pr("O1+ U1+")), 1);
        assert_eq!(writhe(&pr("O1+ U2+ O3+ U1+ O2+ U3+")), 3);
    }

    #[test]
    fn jones_kink_is_one() {
        assert_eq!(jones(&pr("O1+ U1+")).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&pr("U1- O1-")).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&PseudoDiagram::empty()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn jones_of_virtual_trefoil() {
        // frozen from the independent 4-state brute-force oracle
        let v = jones(&pr("O1+ O2+ U1+ U2+ @closed")).unwrap();
        assert_eq!(v, a(&[(-10, -1), (-6, 1), (-4, 1)]));
        assert_eq!(v.render(crate::poly::Var::T), "t + t^3/2 - t^5/2");
    }

    #[test]
    fn four_jones_of_empty() {
        let four = four_jones(&BasedGaussDiagram::empty()).unwrap();
        for (_, v) in four.iter() {
            assert_eq!(*v, LaurentPoly::one());
        }
    }

    #[test]
    fn large_diagram_uses_parallel_path() {
        // 15 isolated positive kinks: bracket = (−A³)^15
        let chords = (0..15u32)
            .map(|k| PseudoChord {
                id: k + 1,
                end_first: 2 * k as usize,
                end_second: 2 * k as usize + 1,
                sign: Sign::Pos,
            })
            .collect();
        let s = PseudoDiagram::new(chords, true).unwrap();
        assert_eq!(kauffman_bracket(&s).unwrap(), a(&[(45, -1)]));
        assert_eq!(jones(&s).unwrap(), LaurentPoly::one());
    }
}
