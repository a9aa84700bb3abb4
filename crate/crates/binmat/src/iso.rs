//! Backtracking isomorphism search on circuit families.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, ElemSet};

/// Precomputed circuit structure of one matroid.
pub(crate) struct IsoData {
    n: usize,
    circuits: Vec<ElemSet>,
    sorted: Vec<ElemSet>,
    /// `co[e * n + f]` counts circuits containing both `e` and `f`.
    co: Vec<u32>,
    hist: Vec<Vec<u32>>,
}

impl IsoData {
    pub(crate) fn new(n: usize, circuits: Vec<ElemSet>) -> Self {
        let mut co = vec![0u32; n * n];
        let mut hist = vec![vec![0u32; n + 1]; n];
        for &c in &circuits {
            let m: Vec<usize> = bits::members(c).collect();
            for &e in &m {
                hist[e][m.len()] += 1;
                for &f in &m {
                    co[e * n + f] += 1;
                }
            }
        }
        let mut sorted = circuits.clone();
        sorted.sort_unstable();
        Self {
            n,
            circuits,
            sorted,
            co,
            hist,
        }
    }

    pub(crate) fn circuit_count(&self) -> usize {
        self.circuits.len()
    }

    fn size_histogram(&self) -> Vec<u32> {
        let mut h = vec![0u32; self.n + 1];
        for c in &self.circuits {
            h[c.count_ones() as usize] += 1;
        }
        h
    }
}

/// Colour refinement run jointly on both sides so that colour ids are comparable.
fn joint_colours(a: &IsoData, b: &IsoData) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = a.n;
    let mut ids: BTreeMap<&[u32], usize> = BTreeMap::new();
    for h in a.hist.iter().chain(b.hist.iter()) {
        let next = ids.len();
        ids.entry(h.as_slice()).or_insert(next);
    }
    let mut ca: Vec<usize> = a.hist.iter().map(|h| ids[h.as_slice()]).collect();
    let mut cb: Vec<usize> = b.hist.iter().map(|h| ids[h.as_slice()]).collect();
    let mut classes = ids.len();
    loop {
        let key = |d: &IsoData, c: &[usize], e: usize| {
            let mut k: Vec<(usize, u32)> = (0..n)
                .filter(|&f| f != e)
                .map(|f| (c[f], d.co[e * n + f]))
                .collect();
            k.sort_unstable();
            (c[e], k)
        };
        let ka: Vec<_> = (0..n).map(|e| key(a, &ca, e)).collect();
        let kb: Vec<_> = (0..n).map(|e| key(b, &cb, e)).collect();
        let mut map = BTreeMap::new();
        for k in ka.iter().chain(kb.iter()) {
            let next = map.len();
            map.entry(k.clone()).or_insert(next);
        }
        ca = ka.iter().map(|k| map[k]).collect();
        cb = kb.iter().map(|k| map[k]).collect();
        let mut sa = ca.clone();
        let mut sb = cb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        if map.len() == classes {
            break;
        }
        classes = map.len();
    }
    Some((ca, cb))
}

struct Search<'a> {
    a: &'a IsoData,
    b: &'a IsoData,
    order: Vec<usize>,
    ca: Vec<usize>,
    cb: Vec<usize>,
    /// Circuits of `a` completed when `order[p]` is placed.
    closing: Vec<Vec<ElemSet>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn image(&self, c: ElemSet) -> ElemSet {
        bits::members(c).fold(0, |s, e| s | 1 << self.map[e])
    }

    fn run(&mut self, p: usize) -> bool {
        if p == self.order.len() {
            return true;
        }
        let n = self.a.n;
        let e = self.order[p];
        for f in 0..n {
            if self.used[f] || self.cb[f] != self.ca[e] {
                continue;
            }
            let consistent = self.order[..p]
                .iter()
                .all(|&g| self.a.co[e * n + g] == self.b.co[f * n + self.map[g]]);
            if !consistent {
                continue;
            }
            self.map[e] = f;
            self.used[f] = true;
            let ok = self.closing[p]
                .iter()
                .all(|&c| self.b.sorted.binary_search(&self.image(c)).is_ok());
            if ok && self.run(p + 1) {
                return true;
            }
            self.used[f] = false;
        }
        false
    }
}

/// A bijection `a -> b` mapping circuits onto circuits, if one exists.
pub(crate) fn find(a: &IsoData, b: &IsoData) -> Option<Vec<usize>> {
    if a.n != b.n
        || a.circuit_count() != b.circuit_count()
        || a.size_histogram() != b.size_histogram()
    {
        return None;
    }
    let n = a.n;
    let (ca, cb) = joint_colours(a, b)?;
    let mut class_size = vec![0usize; 2 * n + 2];
    for &c in &ca {
        if c >= class_size.len() {
            class_size.resize(c + 1, 0);
        }
        class_size[c] += 1;
    }
    // Place rare colours first, then whatever is most entangled with what is placed.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut weight = vec![0u32; n];
    for _ in 0..n {
        let e = (0..n)
            .filter(|&e| !placed[e])
            .max_by(|&x, &y| {
                weight[x]
                    .cmp(&weight[y])
                    .then(class_size[ca[y]].cmp(&class_size[ca[x]]))
                    .then(y.cmp(&x))
            })
            .unwrap();
        placed[e] = true;
        order.push(e);
        for f in 0..n {
            weight[f] += a.co[e * n + f];
        }
    }
    let mut pos = vec![0usize; n];
    for (p, &e) in order.iter().enumerate() {
        pos[e] = p;
    }
    let mut closing = vec![Vec::new(); n];
    for &c in &a.circuits {
        let last = bits::members(c).map(|e| pos[e]).max().unwrap();
        closing[last].push(c);
    }
    let mut s = Search {
        a,
        b,
        order,
        ca,
        cb,
        closing,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if s.run(0) {
        Some(s.map)
    } else {
        None
    }
}
