//! The ring `K[x_1..x_n]/(x_i x_k : i != k)` localized at `(x_1..x_n)`, and
//! the checks that make it a one-dimensional reduced local P.Z. ring whose
//! minimal primes are the `I_k = (x_i : i != k)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::ideal_generators;
use crate::rings::{monomial, CoefficientField, IdealRepr, Monomial, RingElement, RingExpr, VarSet};
use crate::spectrum::{prime_ideal, PrimePoint, Space};

/// Largest variable count for the exhaustive vertex-cover oracle.
pub const ORACLE_MAX_VARS: usize = 20;
/// Largest spectrum for the P.Z. and C.P. checks.
pub const FAMILY_MAX_POINTS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SupplementReport {
    pub n: usize,
    pub field: CoefficientField,
    /// `n = 1`: the ideal is zero and the ring is `K[x]` localized.
    pub degenerate: bool,
    pub intersection_ok: bool,
    pub minimal_primes: Vec<PrimePoint>,
    pub minimal_primes_ok: bool,
    pub dim: usize,
    pub reduced: bool,
    pub pz_ok: bool,
}

impl SupplementReport {
    pub fn all_ok(&self) -> bool {
        self.intersection_ok && self.minimal_primes_ok && self.dim == 1 && self.reduced && self.pz_ok
    }
}

fn supplement_gens(n: usize) -> Vec<Monomial> {
    let mut gens = Vec::new();
    for i in 1..=n as u32 {
        for k in i + 1..=n as u32 {
            gens.push(monomial::from_support(&VarSet::from([i, k]), n));
        }
    }
    gens
}

/// The supplement ring on `n` variables.
pub fn build_supplement(field: CoefficientField, n: usize) -> Result<RingExpr> {
    if n == 0 {
        return Err(Error::BadArity(n));
    }
    RingExpr::supplement(field, n)
}

/// `I_k`, generated by the variables other than `x_k`.
pub fn supplement_component(n: usize, k: u32) -> IdealRepr {
    IdealRepr::monomial((1..=n as u32).filter(|&i| i != k).map(|i| monomial::variable(i, n)))
}

fn edges_of(gens: &[Monomial]) -> Vec<VarSet> {
    gens.iter().map(|g| monomial::support(g)).collect()
}

/// Minimal vertex covers by trying every variable subset.
pub fn minimal_covers_brute_force(gens: &[Monomial], nvars: usize) -> Result<Vec<VarSet>> {
    if nvars > ORACLE_MAX_VARS {
        return Err(Error::TooManyVars(nvars));
    }
    let edges = edges_of(gens);
    let masks: Vec<u32> = (0u32..1 << nvars)
        .filter(|mask| edges.iter().all(|e| e.iter().any(|&v| mask >> (v - 1) & 1 == 1)))
        .collect();
    let minimal = masks.iter().filter(|&&m| !masks.iter().any(|&o| o != m && o & m == o));
    Ok(minimal
        .map(|&m| (1..=nvars as u32).filter(|v| m >> (v - 1) & 1 == 1).collect())
        .collect::<BTreeSet<VarSet>>()
        .into_iter()
        .collect())
}

/// Minimal primes of a square-free monomial ideal in `nvars` variables, as
/// monomial prime points. With `oracle`, the result is cross-checked
/// against the exhaustive search, which caps `nvars`.
pub fn minimal_primes_monomial(ideal: &IdealRepr, nvars: usize, oracle: bool) -> Result<Vec<PrimePoint>> {
    let IdealRepr::Monomial { gens } = ideal else {
        return Err(Error::KindMismatch(format!("{ideal} is not a monomial ideal")));
    };
    if let Some(g) = gens.iter().find(|g| !monomial::is_squarefree(g)) {
        return Err(Error::Unsupported(format!("generator {g:?} is not square-free")));
    }
    if let Some(g) = gens.iter().find(|g| g.len() > nvars && g[nvars..].iter().any(|&e| e > 0)) {
        return Err(Error::InvalidRing(format!("generator {g:?} uses more than {nvars} variables")));
    }
    let mut covers = monomial::minimal_vertex_covers(gens);
    covers.sort();
    if oracle {
        let mut expected = minimal_covers_brute_force(gens, nvars)?;
        expected.sort();
        if expected != covers {
            return Err(Error::Unsupported(format!("vertex cover search disagrees with the oracle on {ideal}")));
        }
    }
    let mut points: Vec<PrimePoint> = covers.into_iter().map(|cover| PrimePoint::MonoPrime { cover }).collect();
    points.sort();
    Ok(points)
}

/// Whether the intersection of the `I_k` is the supplement ideal.
pub fn verify_intersection(n: usize, field: CoefficientField) -> Result<bool> {
    if n == 0 {
        return Err(Error::BadArity(n));
    }
    let ambient = RingExpr::monomial_quotient(field, n, Vec::new())?;
    let mut acc = supplement_component(n, 1);
    for k in 2..=n as u32 {
        acc = ambient.ideal_intersect(&acc, &supplement_component(n, k))?;
    }
    Ok(acc == IdealRepr::monomial(supplement_gens(n)))
}

/// Length of the longest chain of primes.
pub fn krull_dim(r: &RingExpr) -> Result<usize> {
    match r {
        RingExpr::Integers | RingExpr::FpPoly(_) | RingExpr::SymbolicSupplement(_) => return Ok(1),
        RingExpr::MonomialQuotient(m) if Space::new(r).is_err() => return Ok(m.dimension()),
        _ => {}
    }
    let space = Space::new(r)?;
    let points: Vec<&PrimePoint> = space.points()?.iter().collect();
    chain_length(&space, &points)
}

// Longest chain among `points` in the order of `space`; the points are
// processed so that every point comes after everything below it.
fn chain_length(space: &Space, points: &[&PrimePoint]) -> Result<usize> {
    let mut order: Vec<&PrimePoint> = points.to_vec();
    order.sort_by_key(|p| points.iter().filter(|q| space.leq(q, p)).count());
    let mut height = vec![0usize; order.len()];
    for i in 0..order.len() {
        for j in 0..i {
            if order[j] != order[i] && space.leq(order[j], order[i]) {
                height[i] = height[i].max(height[j] + 1);
            }
        }
    }
    Ok(height.into_iter().max().unwrap_or(0))
}

/// Chain search over all monomial primes of a quotient, independent of the
/// cover-size formula.
pub fn krull_dim_by_chains(r: &RingExpr) -> Result<usize> {
    let m = r.monomial_ring().ok_or_else(|| Error::KindMismatch(format!("{r} is not a monomial quotient")))?;
    let primes = crate::spectrum::monomial_primes(m);
    let points: Vec<&PrimePoint> = primes.iter().collect();
    let mut best = 0;
    let mut height = vec![0usize; points.len()];
    // cover inclusion: sort by size so that every subset comes first
    let mut order: Vec<usize> = (0..points.len()).collect();
    let size = |p: &PrimePoint| match p {
        PrimePoint::MonoPrime { cover } => cover.len(),
        _ => 0,
    };
    order.sort_by_key(|&i| size(points[i]));
    for (a, &i) in order.iter().enumerate() {
        for &j in &order[..a] {
            if let (PrimePoint::MonoPrime { cover: small }, PrimePoint::MonoPrime { cover: big }) = (points[j], points[i]) {
                if small.len() < big.len() && small.is_subset(big) {
                    height[i] = height[i].max(height[j] + 1);
                }
            }
        }
        best = best.max(height[i]);
    }
    Ok(best)
}

/// The nilradical is zero.
pub fn is_reduced(r: &RingExpr) -> Result<bool> {
    match r {
        RingExpr::SymbolicSupplement(_) | RingExpr::ResidueField(_) | RingExpr::LocalizedPid { .. } => Ok(true),
        RingExpr::Product(factors) => {
            for f in factors {
                if !is_reduced(f)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Ok(r.nilradical()?.is_zero_ideal()),
    }
}

fn enumerated(r: &RingExpr) -> Result<(Space, Vec<PrimePoint>)> {
    let space = Space::new(r)?;
    let points: Vec<PrimePoint> = space.points()?.iter().cloned().collect();
    if points.len() > FAMILY_MAX_POINTS {
        return Err(Error::SpectrumTooLarge(points.len()));
    }
    Ok((space, points))
}

/// Prime absorbance over every nonempty family of primes: a prime that
/// contains the intersection of the family contains a member.
pub fn pz_check(r: &RingExpr) -> Result<bool> {
    pz_counterexample(r).map(|c| c.is_none())
}

/// A family and a prime violating absorbance, if any.
pub fn pz_counterexample(r: &RingExpr) -> Result<Option<(Vec<PrimePoint>, PrimePoint)>> {
    let (space, points) = enumerated(r)?;
    let ideals = points.iter().map(|p| prime_ideal(p, r)).collect::<Result<Vec<_>>>()?;
    let n = points.len();
    // intersections of all families, built from the family without its lowest member
    let mut meet: Vec<Option<IdealRepr>> = vec![None; 1 << n];
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let ideal = match &meet[rest] {
            None => ideals[low].clone(),
            Some(acc) => r.ideal_intersect(acc, &ideals[low])?,
        };
        for (j, p) in points.iter().enumerate() {
            if !r.ideal_contains(&ideals[j], &ideal)? {
                continue;
            }
            let absorbed = (0..n).any(|k| mask >> k & 1 == 1 && space.leq(&points[k], p));
            if !absorbed {
                let family = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| points[k].clone()).collect();
                return Ok(Some((family, p.clone())));
            }
        }
        meet[mask] = Some(ideal);
    }
    Ok(None)
}

// Elements of a prime used to test containment in a union: its generators,
// their pairwise sums and products, and the sum of all of them.
fn union_probes(r: &RingExpr, gens: &[RingElement]) -> Result<Vec<RingElement>> {
    let mut out = gens.to_vec();
    let mut total = r.zero()?;
    for (i, a) in gens.iter().enumerate() {
        total = r.add(&total, a)?;
        for b in &gens[i + 1..] {
            out.push(r.add(a, b)?);
            out.push(r.mul(a, b)?);
        }
    }
    out.push(total);
    Ok(out)
}

/// Prime avoidance over every nonempty family: a prime covered by the union
/// of the family lies in a member. The union is tested on sample elements
/// of the covered prime.
pub fn cp_check(r: &RingExpr) -> Result<bool> {
    let (space, points) = enumerated(r)?;
    let n = points.len();
    for q in &points {
        let probes = union_probes(r, &ideal_generators(r, &prime_ideal(q, r)?)?)?;
        // which primes contain each probe, as a bitmask
        let mut hits = Vec::with_capacity(probes.len());
        for x in &probes {
            let mut m = 0usize;
            for (k, p) in points.iter().enumerate() {
                if space.point_contains(p, x)? {
                    m |= 1 << k;
                }
            }
            hits.push(m);
        }
        for mask in 1usize..1 << n {
            let covered = hits.iter().all(|h| h & mask != 0);
            if covered && !(0..n).any(|k| mask >> k & 1 == 1 && space.leq(q, &points[k])) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every part of the structure theorem for the supplement on `n` variables.
/// With `oracle`, the minimal primes are cross-checked by exhaustive search.
pub fn supplement_report(field: CoefficientField, n: usize, oracle: bool) -> Result<SupplementReport> {
    let ring = build_supplement(field.clone(), n)?;
    let m = ring.monomial_ring().expect("supplement is monomial");
    let minimal_primes = minimal_primes_monomial(&IdealRepr::monomial(m.gens().to_vec()), n, oracle)?;
    let expected: BTreeSet<PrimePoint> =
        (1..=n as u32).map(|k| PrimePoint::mono((1..=n as u32).filter(|&i| i != k))).collect();
    let minimal_primes_ok = minimal_primes.iter().cloned().collect::<BTreeSet<_>>() == expected;
    let pz_ok = n < FAMILY_MAX_POINTS && pz_check(&ring)?;
    Ok(SupplementReport {
        n,
        field: field.clone(),
        degenerate: n == 1,
        intersection_ok: verify_intersection(n, field)?,
        minimal_primes,
        minimal_primes_ok,
        dim: krull_dim(&ring)?,
        reduced: is_reduced(&ring)?,
        pz_ok,
    })
}
