//! Canonical labeling of small multigraphs given as multiplicity matrices.
//!
//! Colour refinement, then individualization of one vertex per twin class in the first
//! non-singleton cell. The smallest leaf certificate wins.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

type Matrix = [Vec<u8>];

fn refine(m: &Matrix, colours: &mut Vec<u32>) {
    let n = m.len();
    let mut classes = count_classes(colours);
    loop {
        let keys: Vec<(u32, Vec<(u32, u8)>)> = (0..n)
            .map(|v| {
                let mut k: Vec<(u32, u8)> = (0..n)
                    .filter(|&u| u != v && m[v][u] > 0)
                    .map(|u| (colours[u], m[v][u]))
                    .collect();
                k.sort_unstable();
                (colours[v], k)
            })
            .collect();
        let mut ids: BTreeMap<&(u32, Vec<(u32, u8)>), u32> = BTreeMap::new();
        for k in &keys {
            ids.insert(k, 0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i as u32;
        }
        *colours = keys.iter().map(|k| ids[k]).collect();
        let next = ids.len();
        if next == classes {
            return;
        }
        classes = next;
    }
}

fn count_classes(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn certificate(m: &Matrix, colours: &[u32]) -> Vec<u8> {
    let n = m.len();
    let mut at = vec![0usize; n];
    for (v, &c) in colours.iter().enumerate() {
        at[c as usize] = v;
    }
    let mut cert = Vec::with_capacity(n * (n + 1) / 2 + 1);
    cert.push(n as u8);
    for i in 0..n {
        for j in i..n {
            cert.push(m[at[i]][at[j]]);
        }
    }
    cert
}

fn twins(m: &Matrix, u: usize, w: usize) -> bool {
    m[u][u] == m[w][w] && (0..m.len()).all(|x| x == u || x == w || m[u][x] == m[w][x])
}

struct Best {
    cert: Vec<u8>,
    perm: Vec<usize>,
}

fn search(m: &Matrix, mut colours: Vec<u32>, best: &mut Option<Best>) {
    refine(m, &mut colours);
    let n = m.len();
    let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colours.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let Some(cell) = cells.values().find(|c| c.len() > 1) else {
        let cert = certificate(m, &colours);
        if best.as_ref().is_none_or(|b| cert < b.cert) {
            *best = Some(Best {
                cert,
                perm: colours.iter().map(|&c| c as usize).collect(),
            });
        }
        return;
    };
    let mut reps: Vec<usize> = Vec::new();
    for &v in cell {
        if reps.iter().any(|&r| twins(m, r, v)) {
            continue;
        }
        reps.push(v);
    }
    for v in reps {
        let next: Vec<u32> = (0..n).map(|u| colours[u] * 2 + u32::from(u != v)).collect();
        search(m, next, best);
    }
}

/// Canonical position of every vertex, and the certificate read off in that order.
pub(crate) fn canonical(m: &Matrix) -> (Vec<usize>, Vec<u8>) {
    let n = m.len();
    if n == 0 {
        return (Vec::new(), vec![0]);
    }
    let colours: Vec<u32> = (0..n).map(|v| u32::from(m[v][v])).collect();
    let mut best = None;
    search(m, colours, &mut best);
    let b = best.expect("search reaches a leaf");
    (b.perm, b.cert)
}
