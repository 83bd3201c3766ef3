//! Exponent-vector helpers and the vertex-cover description of the minimal
//! primes of a square-free monomial ideal.

use std::collections::BTreeSet;

/// Exponent vector; position `i` holds the exponent of `x_{i+1}`.
pub type Monomial = Vec<u32>;

/// Set of 1-based variable indices.
pub type VarSet = BTreeSet<u32>;

pub fn divides(u: &[u32], v: &[u32]) -> bool {
    let n = u.len().max(v.len());
    (0..n).all(|i| u.get(i).copied().unwrap_or(0) <= v.get(i).copied().unwrap_or(0))
}

pub fn lcm(u: &[u32], v: &[u32]) -> Monomial {
    let n = u.len().max(v.len());
    (0..n)
        .map(|i| u.get(i).copied().unwrap_or(0).max(v.get(i).copied().unwrap_or(0)))
        .collect()
}

pub fn is_squarefree(u: &[u32]) -> bool {
    u.iter().all(|&e| e <= 1)
}

pub fn support(u: &[u32]) -> VarSet {
    u.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

pub fn from_support(vars: &VarSet, nvars: usize) -> Monomial {
    let mut m = vec![0; nvars];
    for &v in vars {
        m[v as usize - 1] = 1;
    }
    m
}

pub fn variable(index: u32, nvars: usize) -> Monomial {
    let mut m = vec![0; nvars];
    m[index as usize - 1] = 1;
    m
}

pub fn pad(u: &[u32], nvars: usize) -> Monomial {
    let mut m = u.to_vec();
    m.resize(nvars.max(u.len()), 0);
    m
}

/// Drops every generator divisible by another one, then sorts.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    all.sort();
    all.dedup();
    let kept: Vec<Monomial> = all
        .iter()
        .filter(|g| !all.iter().any(|h| h != *g && divides(h, g)))
        .cloned()
        .collect();
    kept
}

pub fn in_ideal(m: &[u32], gens: &[Monomial]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// Minimal vertex covers of the hypergraph whose edges are the supports of
/// `gens`. Each cover is the variable set of a minimal prime of the ideal.
pub fn minimal_vertex_covers(gens: &[Monomial]) -> Vec<VarSet> {
    let edges: Vec<VarSet> = gens.iter().map(|g| support(g)).collect();
    let mut found: BTreeSet<VarSet> = BTreeSet::new();
    let mut current = VarSet::new();
    branch(&edges, &mut current, &mut found);
    let all: Vec<VarSet> = found.into_iter().collect();
    all.iter()
        .filter(|c| !all.iter().any(|d| d != *c && d.is_subset(c)))
        .cloned()
        .collect()
}

fn branch(edges: &[VarSet], current: &mut VarSet, found: &mut BTreeSet<VarSet>) {
    // a cover that already contains a found cover cannot be minimal
    if found.iter().any(|f| f.is_subset(current)) {
        return;
    }
    match edges.iter().find(|e| e.is_disjoint(current)) {
        None => {
            found.retain(|f| !current.is_subset(f));
            found.insert(current.clone());
        }
        Some(edge) => {
            for &v in edge {
                current.insert(v);
                branch(edges, current, found);
                current.remove(&v);
            }
        }
    }
}

/// Every vertex set containing a minimal cover, i.e. all monomial primes
/// of the quotient.
pub fn all_covers(gens: &[Monomial], nvars: usize) -> Vec<VarSet> {
    let minimal = minimal_vertex_covers(gens);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << nvars) {
        let set: VarSet = (0..nvars).filter(|i| mask >> i & 1 == 1).map(|i| i as u32 + 1).collect();
        if minimal.iter().any(|c| c.is_subset(&set)) {
            out.push(set);
        }
    }
    out.sort();
    out
}
