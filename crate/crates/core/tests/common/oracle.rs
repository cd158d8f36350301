//! Brute-force reference computations that read only the raw constructor
//! trace of a term. Nothing here calls the library's observers.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use hypermap::{Dart, Dim, FreeMap, Op};

/// Closed permutations of a well-formed term, computed by walking paths.
pub struct Perms {
    pub darts: Vec<u32>,
    /// `alpha[k][z]`, closed.
    pub alpha: [BTreeMap<u32, u32>; 2],
    pub alpha_inv: [BTreeMap<u32, u32>; 2],
    pub phi: BTreeMap<u32, u32>,
    pub links: Vec<(usize, u32, u32)>,
}

pub fn perms(m: &FreeMap) -> Perms {
    let mut darts = Vec::new();
    let mut links = Vec::new();
    for op in m.ops() {
        match *op {
            Op::Insert(Dart(x)) => darts.push(x),
            Op::Link(k, Dart(x), Dart(y)) => links.push((if k == Dim::Zero { 0 } else { 1 }, x, y)),
        }
    }
    darts.sort_unstable();
    let mut next: [HashMap<u32, u32>; 2] = Default::default();
    let mut prev: [HashMap<u32, u32>; 2] = Default::default();
    for &(k, x, y) in &links {
        next[k].insert(x, y);
        prev[k].insert(y, x);
    }
    let mut alpha: [BTreeMap<u32, u32>; 2] = Default::default();
    for k in 0..2 {
        for &z in &darts {
            let img = match next[k].get(&z) {
                Some(&y) => y,
                None => {
                    let mut b = z;
                    while let Some(&p) = prev[k].get(&b) {
                        b = p;
                    }
                    b
                }
            };
            alpha[k].insert(z, img);
        }
    }
    let inv = |p: &BTreeMap<u32, u32>| p.iter().map(|(&a, &b)| (b, a)).collect::<BTreeMap<_, _>>();
    let alpha_inv = [inv(&alpha[0]), inv(&alpha[1])];
    let phi = darts.iter().map(|&z| (z, alpha_inv[1][&alpha_inv[0][&z]])).collect();
    Perms {
        darts,
        alpha,
        alpha_inv,
        phi,
        links,
    }
}

pub fn cycles(darts: &[u32], p: &BTreeMap<u32, u32>) -> Vec<BTreeSet<u32>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &z in darts {
        if seen.contains(&z) {
            continue;
        }
        let mut c = BTreeSet::new();
        let mut w = z;
        while seen.insert(w) {
            c.insert(w);
            w = p[&w];
        }
        out.push(c);
    }
    out
}

pub fn components(p: &Perms) -> Vec<BTreeSet<u32>> {
    let mut adj: HashMap<u32, Vec<u32>> = HashMap::new();
    for &(_, x, y) in &p.links {
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &z in &p.darts {
        if seen.contains(&z) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([z]);
        seen.insert(z);
        while let Some(w) = queue.pop_front() {
            comp.insert(w);
            for &v in adj.get(&w).map(Vec::as_slice).unwrap_or(&[]) {
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        out.push(comp);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleStats {
    pub nd: u64,
    pub ne: u64,
    pub nv: u64,
    pub nf: u64,
    pub nc: u64,
    pub ec: i64,
    pub genus: i64,
}

pub fn stats(m: &FreeMap) -> OracleStats {
    let p = perms(m);
    let nd = p.darts.len() as u64;
    let ne = cycles(&p.darts, &p.alpha[0]).len() as u64;
    let nv = cycles(&p.darts, &p.alpha[1]).len() as u64;
    let nf = cycles(&p.darts, &p.phi).len() as u64;
    let nc = components(&p).len() as u64;
    let ec = (nv + ne + nf) as i64 - nd as i64;
    OracleStats {
        nd,
        ne,
        nv,
        nf,
        nc,
        ec,
        genus: nc as i64 - ec.div_euclid(2),
    }
}

pub fn genus(m: &FreeMap) -> i64 {
    stats(m).genus
}

/// Set of darts in the cycle of `z` under `p`.
pub fn cycle_of(p: &BTreeMap<u32, u32>, z: u32) -> BTreeSet<u32> {
    let mut c = BTreeSet::new();
    let mut w = z;
    while c.insert(w) {
        w = p[&w];
    }
    c
}

pub fn same_face(m: &FreeMap, a: u32, b: u32) -> bool {
    let p = perms(m);
    p.phi.contains_key(&a) && cycle_of(&p.phi, a).contains(&b)
}

pub fn same_component(m: &FreeMap, a: u32, b: u32) -> bool {
    let p = perms(m);
    components(&p).iter().any(|c| c.contains(&a) && c.contains(&b))
}

/// Break along a ring by swapping images in the closed dimension-zero
/// permutation: for each item `x` with `y = alpha0_open(x)` and
/// `y' = bottom(x)` in the current closed permutation, every dart mapping
/// to `y` is sent to `y'` and vice versa. Returns the resulting closed
/// `alpha0` and the component count of `(alpha0', alpha1)`.
pub fn swap_break(m: &FreeMap, ring: &[(u32, bool)]) -> (BTreeMap<u32, u32>, u64) {
    let p = perms(m);
    let mut next: HashMap<u32, u32> = p.links.iter().filter(|l| l.0 == 0).map(|l| (l.1, l.2)).collect();
    let mut a0 = p.alpha[0].clone();
    for &(x, _) in ring {
        let y = next.remove(&x).expect("ring item has a 0-link");
        // x0 is the closed image of the orbit's top: the bottom of x's path.
        let mut x0 = x;
        let prev: HashMap<u32, u32> = next.iter().map(|(&a, &b)| (b, a)).collect();
        while let Some(&q) = prev.get(&x0) {
            x0 = q;
        }
        for v in a0.values_mut() {
            if *v == y {
                *v = x0;
            } else if *v == x0 {
                *v = y;
            }
        }
    }
    // Components of the group generated by a0 and alpha1.
    let mut parent: HashMap<u32, u32> = p.darts.iter().map(|&d| (d, d)).collect();
    fn find(parent: &mut HashMap<u32, u32>, mut z: u32) -> u32 {
        while parent[&z] != z {
            z = parent[&z];
        }
        z
    }
    for perm in [&a0, &p.alpha[1]] {
        for (&a, &b) in perm.iter() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent.insert(ra, rb);
        }
    }
    let roots: BTreeSet<u32> = p.darts.iter().map(|&d| find(&mut parent, d)).collect();
    (a0, roots.len() as u64)
}
