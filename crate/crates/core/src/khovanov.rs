//! Z/2 Khovanov homology of closed signed chord diagrams, built from
//! enhanced Kauffman states.
//!
//! Gradings: `i = (w − σ)/2`, `j = w + i + τ`, where `σ` counts positive
//! minus negative markers and `τ` sums `deg 1 = +1`, `deg x = −1` over the
//! circles. The differential turns one positive marker negative. A merge of
//! two circles acts by multiplication, a split by comultiplication, and a flip
//! that keeps the number of circles (only possible for non-planar diagrams)
//! contributes zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bracket::jones_limited;
use crate::error::{Error, Result};
use crate::gauss::{BasedGaussDiagram, PseudoDiagram};
use crate::gf2::BitMatrix;
use crate::maps::{four_projections, FourWay};
use crate::poly::LaurentPoly;
use crate::state::{Circles, Smoothing, StateMask};

pub const DEFAULT_KH_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bigrading {
    pub i: i32,
    pub j: i32,
}

/// A state together with a label per circle: bit set = `x`, clear = `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnhancedState {
    pub mask: StateMask,
    pub labels: u64,
}

/// `(i, j) → dim H^{i,j}` over Z/2; zero entries are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDims {
    dims: BTreeMap<(i32, i32), usize>,
}

impl GradedDims {
    pub fn from_entries<I: IntoIterator<Item = ((i32, i32), usize)>>(entries: I) -> Self {
        let dims = entries.into_iter().filter(|&(_, d)| d > 0).collect();
        GradedDims { dims }
    }

    pub fn get(&self, i: i32, j: i32) -> usize {
        self.dims.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `((i, j), dim)` sorted lexicographically by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((i32, i32), usize)> + '_ {
        self.dims.iter().map(|(&k, &d)| (k, d))
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total_rank(&self) -> usize {
        self.dims.values().sum()
    }
}

impl fmt::Display for GradedDims {
    /// One `i j dim` row per nonzero entry.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j), d) in self.entries() {
            writeln!(f, "{i} {j} {d}")?;
        }
        Ok(())
    }
}

/// Generators bucketed by bigrading, with one differential matrix per
/// bucket: columns index `C^{i,j}`, rows index `C^{i+1,j}`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    writhe: i32,
    groups: BTreeMap<Bigrading, Vec<EnhancedState>>,
    differentials: BTreeMap<Bigrading, BitMatrix>,
}

fn grading(writhe: i32, n: usize, mask: StateMask, circles: usize, labels: u64) -> Bigrading {
    let sigma = mask.sigma(n);
    let i = (writhe - sigma) / 2;
    let tau = circles as i32 - 2 * labels.count_ones() as i32;
    Bigrading { i, j: writhe + i + tau }
}

fn min_arcs(c: &Circles) -> Vec<u8> {
    let mut out = vec![u8::MAX; c.count];
    for (a, &k) in c.circle_of_arc.iter().enumerate() {
        if out[k as usize] == u8::MAX {
            out[k as usize] = a as u8;
        }
    }
    out
}

/// Label images of one enhanced state under one marker flip.
fn flip_targets(
    arcs: [u8; 4],
    src: &Circles,
    dst: &Circles,
    dst_min_arcs: &[u8],
    labels: u64,
    out: &mut Vec<u64>,
) -> Result<()> {
    out.clear();
    let ks = src.count;
    let kt = dst.count;
    if ks == kt {
        return Ok(());
    }
    let label_of = |s: u8| labels >> s & 1;
    // circles not touching the chord keep their label
    let mut base = 0u64;
    for (t, &arc) in dst_min_arcs.iter().enumerate() {
        base |= label_of(src.circle_of_arc[arc as usize]) << t;
    }
    let distinct = |circles: &Circles| {
        let first = circles.circle_of_arc[arcs[0] as usize];
        let second = arcs.iter().map(|&a| circles.circle_of_arc[a as usize]).find(|&c| c != first);
        (first, second)
    };
    if kt + 1 == ks {
        let (a, b) = distinct(src);
        let b = b.ok_or_else(|| Error::Internal("merge without two circles".into()))?;
        let (la, lb) = (label_of(a), label_of(b));
        if la == 1 && lb == 1 {
            return Ok(());
        }
        let merged = dst.circle_of_arc[arcs[0] as usize];
        let target = (base & !(1 << merged)) | ((la | lb) << merged);
        out.push(target);
    } else if ks + 1 == kt {
        let c = src.circle_of_arc[arcs[0] as usize];
        let (t1, t2) = distinct(dst);
        let t2 = t2.ok_or_else(|| Error::Internal("split without two circles".into()))?;
        let cleared = base & !(1 << t1) & !(1 << t2);
        if label_of(c) == 1 {
            out.push(cleared | 1 << t1 | 1 << t2);
        } else {
            out.push(cleared | 1 << t2);
            out.push(cleared | 1 << t1);
        }
    } else {
        return Err(Error::Internal(format!("marker flip changed circle count {ks} -> {kt}")));
    }
    Ok(())
}

impl ChainComplex {
    pub fn writhe(&self) -> i32 {
        self.writhe
    }

    pub fn groups(&self) -> &BTreeMap<Bigrading, Vec<EnhancedState>> {
        &self.groups
    }

    /// The differential out of `C^{i,j}`, if both ends are nonzero.
    pub fn differential(&self, g: Bigrading) -> Option<&BitMatrix> {
        self.differentials.get(&g)
    }

    pub fn generator_count(&self) -> usize {
        self.groups.values().map(Vec::len).sum()
    }

    /// Checks `d ∘ d = 0` on every bigrading.
    pub fn d_squared_is_zero(&self) -> bool {
        self.differentials.iter().all(|(g, d)| match self.differentials.get(&Bigrading { i: g.i + 1, j: g.j }) {
            Some(next) => next.mul(d).is_zero(),
            None => true,
        })
    }

    pub fn homology(&self) -> GradedDims {
        let ranks: HashMap<Bigrading, usize> = self.differentials.par_iter().map(|(g, d)| (*g, d.rank())).collect();
        GradedDims::from_entries(self.groups.iter().map(|(g, gens)| {
            let out = ranks.get(g).copied().unwrap_or(0);
            let inc = ranks.get(&Bigrading { i: g.i - 1, j: g.j }).copied().unwrap_or(0);
            ((g.i, g.j), gens.len() - out - inc)
        }))
    }

    /// `Σ (−1)^i q^j` over all generators.
    pub fn euler_characteristic(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (g, gens) in &self.groups {
            let sign = if g.i % 2 == 0 { 1 } else { -1 };
            out.add_term(sign * gens.len() as i64, g.j);
        }
        out
    }
}

pub fn build_complex(s: &PseudoDiagram) -> Result<ChainComplex> {
    build_complex_limited(s, DEFAULT_KH_LIMIT)
}

pub fn build_complex_limited(s: &PseudoDiagram, limit: usize) -> Result<ChainComplex> {
    if !s.is_closed() {
        return Err(Error::NotClosed);
    }
    let n = s.n_chords();
    if n > limit {
        return Err(Error::TooManyChords { n, limit });
    }
    let sm = Smoothing::new(s)?;
    let writhe = s.writhe();
    let states: Vec<Circles> = (0..1u64 << n).map(|m| sm.circles(StateMask(m))).collect();
    let minima: Vec<Vec<u8>> = states.iter().map(min_arcs).collect();

    let mut groups: BTreeMap<Bigrading, Vec<EnhancedState>> = BTreeMap::new();
    let mut index: HashMap<EnhancedState, (Bigrading, usize)> = HashMap::new();
    for (m, circles) in states.iter().enumerate() {
        let mask = StateMask(m as u64);
        for labels in 0..1u64 << circles.count {
            let g = grading(writhe, n, mask, circles.count, labels);
            let bucket = groups.entry(g).or_default();
            let state = EnhancedState { mask, labels };
            index.insert(state, (g, bucket.len()));
            bucket.push(state);
        }
    }

    let built: Vec<(Bigrading, BitMatrix)> = groups
        .par_iter()
        .filter_map(|(g, gens)| {
            let target_g = Bigrading { i: g.i + 1, j: g.j };
            let rows = groups.get(&target_g).map_or(0, Vec::len);
            let mut matrix = BitMatrix::zeros(rows, gens.len());
            let mut buf = Vec::with_capacity(2);
            let mut nonzero = false;
            for (col, st) in gens.iter().enumerate() {
                let src = &states[st.mask.0 as usize];
                for c in (0..n).filter(|&c| st.mask.is_positive(c)) {
                    let tmask = st.mask.with_negative(c);
                    let dst = &states[tmask.0 as usize];
                    if let Err(e) =
                        flip_targets(sm.arcs_at(c), src, dst, &minima[tmask.0 as usize], st.labels, &mut buf)
                    {
                        return Some(Err(e));
                    }
                    for &labels in &buf {
                        let target = EnhancedState { mask: tmask, labels };
                        match index.get(&target) {
                            Some(&(tg, row)) if tg == target_g => {
                                matrix.toggle(row, col);
                                nonzero = true;
                            }
                            _ => {
                                return Some(Err(Error::Internal(format!(
                                    "differential leaves bigrading ({}, {}) for {target:?}",
                                    g.i + 1,
                                    g.j
                                ))))
                            }
                        }
                    }
                }
            }
            (rows > 0 && nonzero).then_some(Ok((*g, matrix)))
        })
        .collect::<Result<_>>()?;

    Ok(ChainComplex { writhe, groups, differentials: built.into_iter().collect() })
}

pub fn homology_dims(s: &PseudoDiagram) -> Result<GradedDims> {
    homology_dims_limited(s, DEFAULT_KH_LIMIT)
}

pub fn homology_dims_limited(s: &PseudoDiagram, limit: usize) -> Result<GradedDims> {
    Ok(build_complex_limited(&s.closure(), limit)?.homology())
}

/// `Σ (−1)^i q^j dim H^{i,j}`, as a polynomial in `q`.
pub fn euler_characteristic(g: &GradedDims) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for ((i, j), d) in g.entries() {
        out.add_term(if i % 2 == 0 { d as i64 } else { -(d as i64) }, j);
    }
    out
}

/// `(q + q⁻¹) · V(q)` for a Jones polynomial given in `A`.
pub fn unnormalized_jones_q(jones_a: &LaurentPoly) -> Option<LaurentPoly> {
    let v = jones_a.a_to_q()?;
    Some(&LaurentPoly::from_pairs([(1, 1), (-1, 1)]) * &v)
}

/// Checks the Euler identity of a homology table against the Jones polynomial.
pub fn euler_matches(g: &GradedDims, jones_a: &LaurentPoly) -> bool {
    unnormalized_jones_q(jones_a).is_some_and(|j| j == euler_characteristic(g))
}

/// Homology of `s` together with the result of its Euler self-check.
pub fn homology_checked(s: &PseudoDiagram, limit: usize) -> Result<(GradedDims, bool)> {
    let dims = homology_dims_limited(s, limit)?;
    let v = jones_limited(s, limit.max(crate::bracket::DEFAULT_JONES_LIMIT))?;
    let ok = euler_matches(&dims, &v);
    Ok((dims, ok))
}

pub fn kh_four(d: &BasedGaussDiagram) -> Result<FourWay<GradedDims>> {
    kh_four_limited(d, DEFAULT_KH_LIMIT)
}

pub fn kh_four_limited(d: &BasedGaussDiagram, limit: usize) -> Result<FourWay<GradedDims>> {
    four_projections(d)?.try_map(|p| homology_dims_limited(p, limit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::parse_gauss_code;
    use crate::maps::map_p_r;

    fn pr(code: &str) -> PseudoDiagram {
        map_p_r(&parse_gauss_code(code).unwrap()).closure()
    }

    #[test]
    fn unknot_complex() {
        let cx = build_complex(&PseudoDiagram::empty().closure()).unwrap();
        let keys: Vec<_> = cx.groups().keys().copied().collect();
        assert_eq!(keys, vec![Bigrading { i: 0, j: -1 }, Bigrading { i: 0, j: 1 }]);
        assert!(cx.differential(Bigrading { i: 0, j: 1 }).is_none());
        let h = cx.homology();
        assert_eq!(h, GradedDims::from_entries([((0, 1), 1), ((0, -1), 1)]));
        assert_eq!(euler_characteristic(&h), LaurentPoly::from_pairs([(1, 1), (-1, 1)]));
    }

    #[test]
    fn kink_grading_by_hand() {
        // mask {+}, both circles labelled 1: w = 1, σ = 1 → i = 0; τ = 2 → j = 3
        let g = grading(1, 1, StateMask(1), 2, 0);
        assert_eq!(g, Bigrading { i: 0, j: 3 });
        let cx = build_complex(&pr("O1+ U1+")).unwrap();
        assert!(cx.groups()[&g].contains(&EnhancedState { mask: StateMask(1), labels: 0 }));
    }

    #[test]
    fn kink_homology_is_unknot() {
        let h = homology_dims(&pr("O1+ U1+")).unwrap();
        assert_eq!(h, GradedDims::from_entries([((0, 1), 1), ((0, -1), 1)]));
        let h = homology_dims(&pr("U1- O1-")).unwrap();
        assert_eq!(h, GradedDims::from_entries([((0, 1), 1), ((0, -1), 1)]));
    }

    #[test]
    fn empty_table_has_zero_euler() {
        assert!(euler_characteristic(&GradedDims::default()).is_zero());
    }

    #[test]
    fn based_input_is_closed_first() {
        let based = map_p_r(&parse_gauss_code("O1+ U1+").unwrap());
        assert!(homology_dims(&based).is_ok());
        assert_eq!(build_complex(&based).unwrap_err(), Error::NotClosed);
    }

    #[test]
    fn limit_enforced() {
        let code = "O1+ U1+ O2+ U2+ O3+ U3+";
        assert_eq!(build_complex_limited(&pr(code), 2).unwrap_err(), Error::TooManyChords { n: 3, limit: 2 });
    }

    #[test]
    fn trefoil_euler_and_d_squared() {
        let s = pr("O1+ U2+ O3+ U1+ O2+ U3+");
        let cx = build_complex(&s).unwrap();
        assert!(cx.d_squared_is_zero());
        let h = cx.homology();
        let v = crate::bracket::jones(&s).unwrap();
        assert!(euler_matches(&h, &v));
        assert_eq!(euler_characteristic(&h), cx.euler_characteristic());
    }

    #[test]
    fn virtual_trefoil_has_anomalous_faces() {
        let s = pr("O1+ O2+ U1+ U2+");
        let cx = build_complex(&s).unwrap();
        assert!(cx.d_squared_is_zero());
        let v = crate::bracket::jones(&s).unwrap();
        assert!(euler_matches(&cx.homology(), &v));
    }

    #[test]
    fn four_tables_of_empty() {
        let four = kh_four(&BasedGaussDiagram::empty()).unwrap();
        let unknot = GradedDims::from_entries([((0, 1), 1), ((0, -1), 1)]);
        for (_, t) in four.iter() {
            assert_eq!(*t, unknot);
        }
    }
}
