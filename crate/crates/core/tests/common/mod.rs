#![allow(dead_code)]

use gaussforge::search::decorate;
use gaussforge::{parse_gauss_code, BasedGaussDiagram};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn code(s: &str) -> BasedGaussDiagram {
    parse_gauss_code(s).unwrap()
}

/// Uniform chord count in `0..=max_chords`, then a uniform word and decoration.
pub fn random_diagram(rng: &mut impl Rng, max_chords: usize) -> BasedGaussDiagram {
    let n = rng.gen_range(0..=max_chords);
    random_diagram_exact(rng, n)
}

pub fn random_diagram_exact(rng: &mut impl Rng, n: usize) -> BasedGaussDiagram {
    let mut positions: Vec<usize> = (0..2 * n).collect();
    positions.shuffle(rng);
    let mut word: Vec<(usize, usize)> = positions.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
    word.sort();
    let full = 1u32 << n;
    decorate(&word, rng.gen_range(0..full), rng.gen_range(0..full))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Long Gauss code of the closure of a braid on `strands` strands, cut open
/// at the top of strand 0. Generator `k > 0` is σ_k (strand at position k
/// passes over, sign +); `k < 0` is σ_|k|⁻¹ (it passes under, sign −).
pub fn braid_closure_code(strands: usize, word: &[i32]) -> String {
    let mut tokens = Vec::new();
    let mut pos = 0usize;
    loop {
        for (id, &g) in word.iter().enumerate() {
            let i = g.unsigned_abs() as usize - 1;
            if pos != i && pos != i + 1 {
                continue;
            }
            let positive = g > 0;
            let over = (pos == i) == positive;
            let sign = if positive { '+' } else { '-' };
            tokens.push(format!("{}{}{sign}", if over { 'O' } else { 'U' }, id + 1));
            pos = if pos == i { i + 1 } else { i };
        }
        if pos == 0 {
            break;
        }
        assert!(tokens.len() <= 2 * word.len() * strands, "closure is not a knot");
    }
    assert_eq!(tokens.len(), 2 * word.len(), "closure is not a knot");
    tokens.join(" ")
}
