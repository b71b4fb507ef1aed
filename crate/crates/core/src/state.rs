//! Kauffman states of a closed signed chord diagram and their circles.
//!
//! The closed word of length `2n` has `2n` boundary arcs; arc `p` runs from
//! endpoint `p` to endpoint `p+1 (mod 2n)`. Smoothing a chord with endpoints
//! `u`, `v` glues the arcs meeting there, either in the oriented pattern
//! (in-arc at `u` to out-arc at `v` and vice versa) or the disoriented one
//! (in to in, out to out). Circles are the resulting components.

use crate::error::{Error, Result};
use crate::gauss::{PseudoDiagram, Sign};

/// Bit `c` set: positive marker (A-smoothing) on the `c`-th chord.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateMask(pub u64);

impl StateMask {
    pub fn is_positive(self, chord: usize) -> bool {
        self.0 >> chord & 1 == 1
    }

    pub fn positive_count(self) -> u32 {
        self.0.count_ones()
    }

    /// `#positive − #negative` markers.
    pub fn sigma(self, n: usize) -> i32 {
        2 * self.0.count_ones() as i32 - n as i32
    }

    pub fn with_negative(self, chord: usize) -> StateMask {
        StateMask(self.0 & !(1u64 << chord))
    }
}

/// Hard cap from the 64-bit mask representation.
pub const MAX_STATE_CHORDS: usize = 63;

struct Dsu {
    parent: Vec<u8>,
}

impl Dsu {
    fn new(len: usize) -> Self {
        Dsu { parent: (0..len as u8).collect() }
    }

    fn find(&mut self, mut x: u8) -> u8 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u8, b: u8) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so roots are minimal arcs
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Circles of one state, indexed by increasing minimal arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circles {
    pub count: usize,
    pub circle_of_arc: Vec<u8>,
}

/// The arc data of a closed diagram, ready for repeated smoothing.
#[derive(Clone, Debug)]
pub struct Smoothing {
    n: usize,
    arcs: usize,
    /// Per chord: (in-arc at u, out-arc at u, in-arc at v, out-arc at v), and sign.
    sites: Vec<([u8; 4], Sign)>,
}

impl Smoothing {
    pub fn new(s: &PseudoDiagram) -> Result<Self> {
        if !s.is_closed() {
            return Err(Error::NotClosed);
        }
        let n = s.n_chords();
        if n > MAX_STATE_CHORDS {
            return Err(Error::TooManyChords { n, limit: MAX_STATE_CHORDS });
        }
        let arcs = 2 * n;
        let prev = |p: usize| ((p + arcs - 1) % arcs) as u8;
        let sites = s
            .chords()
            .iter()
            .map(|c| {
                let (u, v) = (c.end_first, c.end_second);
                ([prev(u), u as u8, prev(v), v as u8], c.sign)
            })
            .collect();
        Ok(Smoothing { n, arcs, sites })
    }

    pub fn n_chords(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    /// The four arcs meeting at chord `c`.
    pub fn arcs_at(&self, chord: usize) -> [u8; 4] {
        self.sites[chord].0
    }

    fn union_state(&self, mask: StateMask) -> Dsu {
        let mut dsu = Dsu::new(self.arcs);
        for (c, &([in_u, out_u, in_v, out_v], sign)) in self.sites.iter().enumerate() {
            let oriented = (sign == Sign::Pos) == mask.is_positive(c);
            if oriented {
                dsu.union(in_u, out_v);
                dsu.union(in_v, out_u);
            } else {
                dsu.union(in_u, in_v);
                dsu.union(out_u, out_v);
            }
        }
        dsu
    }

    pub fn circle_count(&self, mask: StateMask) -> usize {
        if self.arcs == 0 {
            return 1;
        }
        let mut dsu = self.union_state(mask);
        (0..self.arcs as u8).filter(|&a| dsu.find(a) == a).count()
    }

    pub fn circles(&self, mask: StateMask) -> Circles {
        if self.arcs == 0 {
            return Circles { count: 1, circle_of_arc: Vec::new() };
        }
        let mut dsu = self.union_state(mask);
        let mut index_of_root = vec![u8::MAX; self.arcs];
        let mut count = 0u8;
        let mut circle_of_arc = vec![0u8; self.arcs];
        for a in 0..self.arcs as u8 {
            let r = dsu.find(a) as usize;
            if index_of_root[r] == u8::MAX {
                index_of_root[r] = count;
                count += 1;
            }
            circle_of_arc[a as usize] = index_of_root[r];
        }
        Circles { count: count as usize, circle_of_arc }
    }
}

/// Number of circles after smoothing a closed diagram by `mask`.
pub fn smooth_and_count(s: &PseudoDiagram, mask: StateMask) -> Result<usize> {
    Ok(Smoothing::new(s)?.circle_count(mask))
}
