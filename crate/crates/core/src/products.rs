//! Finite products: unit idempotents, tame primes, and the images of the
//! spectra of `prod R/p` and `prod R_p` in `Spec(R)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::{self, FactorKind, RingMapSpec};
use crate::rings::{MPoly, RingElement, RingExpr};
use crate::spectrum::{PrimePoint, Space, SpecSubset};
use crate::topology::Topology;

/// An image of a spectrum map next to the closure that contains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageReport {
    pub image: SpecSubset,
    pub closure: SpecSubset,
    pub topology: Topology,
    pub strict: bool,
    pub witness: Option<PrimePoint>,
}

fn factors_of(r: &RingExpr) -> Result<&[RingExpr]> {
    r.factors().ok_or_else(|| Error::KindMismatch(format!("{r} is not a product")))
}

/// `e_k`: one in slot `k`, zero elsewhere.
pub fn unit_idempotent(k: usize, r: &RingExpr) -> Result<RingElement> {
    let factors = factors_of(r)?;
    if k >= factors.len() {
        return Err(Error::BadSlot { slot: k, len: factors.len() });
    }
    let items = factors
        .iter()
        .enumerate()
        .map(|(i, f)| if i == k { f.one() } else { f.zero() })
        .collect::<Result<_>>()?;
    Ok(RingElement::Tuple(items))
}

/// `V(I)` for the direct sum `I` of the factors. A prime is wild iff it
/// contains `I`; a finite product has `1 = sum e_k` in `I`, hence no wild
/// primes.
pub fn direct_sum_locus(r: &RingExpr) -> Result<SpecSubset> {
    let factors = factors_of(r)?;
    let space = Space::new(r)?;
    let mut sum = r.zero()?;
    for k in 0..factors.len() {
        sum = r.add(&sum, &unit_idempotent(k, r)?)?;
    }
    if space.is_finite() {
        let mut locus = space.whole();
        for k in 0..factors.len() {
            locus = space.intersection(&locus, &space.v_locus(&unit_idempotent(k, r)?)?)?;
        }
        return space.canonical(&locus);
    }
    // the idempotents generate I, and they sum to the unit
    if r.is_unit(&sum)? {
        Ok(SpecSubset::Empty)
    } else {
        Err(Error::Unsupported(format!("direct sum locus of {r}")))
    }
}

/// Contraction of a tame prime along a canonical map into a finite product.
pub fn tame_contract(p: &PrimePoint, map: &RingMapSpec) -> Result<PrimePoint> {
    if !matches!(p, PrimePoint::TamePrime { .. }) {
        return Err(Error::WildPrimeUnsupported);
    }
    maps::tame_contract(map, p)
}

fn special_point(space: &Space) -> PrimePoint {
    space.generic_point().cloned().unwrap_or(PrimePoint::SuppTop)
}

/// `Im(Spec(prod_{p in E} R/p) -> Spec(R))`.
///
/// Finite spectra: the union of the `V(p)`. Over `Z` and `F_p[x]` an infinite
/// set of closed points picks up the generic point and nothing else; over
/// the supplement every minimal prime lies under the maximal ideal.
pub fn quotient_product_image(r: &RingExpr, e: &SpecSubset) -> Result<SpecSubset> {
    let space = Space::new(r)?;
    let e = space.canonical(e)?;
    if space.is_finite() || space.is_supplement() {
        return space.up_set(&e);
    }
    let generic = special_point(&space);
    if space.contains(&e, &generic)? {
        // V(0) is everything
        Ok(SpecSubset::Whole)
    } else if e.is_finite() {
        Ok(e)
    } else {
        space.union(&e, &SpecSubset::explicit([generic]))
    }
}

/// `Im(Spec(prod_{p in E} R_p) -> Spec(R))`.
///
/// Finite spectra and `Z`, `F_p[x]`: the union of the down-sets of the
/// points of `E`. Over the supplement an infinite set of minimal primes adds
/// the maximal ideal, and the maximal ideal itself brings in everything.
pub fn local_product_image(r: &RingExpr, e: &SpecSubset) -> Result<SpecSubset> {
    let space = Space::new(r)?;
    let e = space.canonical(e)?;
    if !space.is_supplement() {
        return space.down_set(&e);
    }
    let top = special_point(&space);
    if space.contains(&e, &top)? {
        Ok(SpecSubset::Whole)
    } else if e.is_finite() {
        Ok(e)
    } else {
        space.union(&e, &SpecSubset::explicit([top]))
    }
}

pub fn product_image(r: &RingExpr, e: &SpecSubset, kind: FactorKind) -> Result<SpecSubset> {
    match kind {
        FactorKind::Quotient => quotient_product_image(r, e),
        FactorKind::Local => local_product_image(r, e),
    }
}

/// The image computed by building the product ring, listing its tame primes
/// and contracting each one.
pub fn brute_force_image(r: &RingExpr, e: &SpecSubset, kind: FactorKind) -> Result<SpecSubset> {
    let space = Space::new(r)?;
    let e = space.canonical(e)?;
    if !e.is_finite() {
        return Err(Error::NonEnumerable(format!("the product over {e}")));
    }
    if matches!(e, SpecSubset::Empty) {
        return Ok(SpecSubset::Empty);
    }
    let map = match kind {
        FactorKind::Quotient => RingMapSpec::IntoQuotientProduct { ring: r.clone(), set: e },
        FactorKind::Local => RingMapSpec::IntoLocalProduct { ring: r.clone(), set: e },
    };
    let target = Space::new(&map.target()?)?;
    let mut out = BTreeSet::new();
    for q in target.points()? {
        out.insert(maps::contract(&map, q)?);
    }
    space.canonical(&SpecSubset::explicit(out))
}

/// Whether the image of `x` in `prod_{p in E} R/p` is a unit, i.e. `x` lies
/// in no prime of `E`.
pub fn is_unit_in_quotient_product(x: &RingElement, e: &SpecSubset, r: &RingExpr) -> Result<bool> {
    let space = Space::new(r)?;
    let hit = space.intersection(e, &space.v_locus(x)?)?;
    Ok(matches!(hit, SpecSubset::Empty))
}

/// The image of `R -> prod R/p` (Zariski) or `R -> prod R_p` (flat) next to
/// the closure of `E` in that topology, with a point of the closure that the
/// image misses when there is one.
pub fn strictness_demo(r: &RingExpr, e: &SpecSubset, topology: Topology) -> Result<ImageReport> {
    let space = Space::new(r)?;
    let e = space.canonical(e)?;
    let image = match topology {
        Topology::Zariski => quotient_product_image(r, &e)?,
        Topology::Flat => local_product_image(r, &e)?,
        Topology::Patch => return Err(Error::Unsupported("images are compared with zariski or flat closures".into())),
    };
    let closure = space.closure(&e, topology)?;
    let gap = space.difference(&closure, &image)?;
    let mut witness = None;
    for q in space.probe_points(&[&closure, &image], 1)? {
        if space.contains(&gap, &q)? && witness.as_ref().is_none_or(|w| q < *w) {
            witness = Some(q);
        }
    }
    Ok(ImageReport { image, closure, topology, strict: witness.is_some(), witness })
}

/// Elements of a factor to try: everything in a small `Z/n`, otherwise a
/// fixed selection.
fn sample_elements(r: &RingExpr) -> Result<Vec<RingElement>> {
    Ok(match r {
        RingExpr::PrimeField(n) => (0..*n.min(&12)).map(RingElement::Mod).collect(),
        RingExpr::ZMod { n, .. } if *n <= 12 => (0..*n).map(RingElement::Mod).collect(),
        RingExpr::ZMod { n, factors } => {
            let rad: u64 = factors.iter().map(|(p, _)| p).product();
            let mut xs: BTreeSet<u64> = (0..12).collect();
            xs.extend((1..4).map(|k| (k * rad) % n));
            xs.extend(factors.iter().map(|(p, _)| n / p));
            xs.insert(n - 1);
            xs.into_iter().map(RingElement::Mod).collect()
        }
        RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m) => {
            let nv = m.nvars() as u32;
            let var = |i: u32| r.normalize(&RingElement::MPoly(MPoly::variable(i)));
            let one = r.one()?;
            let mut xs = vec![r.zero()?, one.clone()];
            let mut all = one.clone();
            for i in 1..=nv {
                let x = var(i)?;
                xs.push(r.add(&one, &x)?);
                for j in i + 1..=nv {
                    let y = var(j)?;
                    xs.push(r.add(&x, &y)?);
                    xs.push(r.mul(&x, &y)?);
                }
                all = r.mul(&all, &x)?;
                xs.push(x);
            }
            xs.push(all);
            xs
        }
        _ => return Err(Error::Unsupported(format!("nilradical check on a factor {r}"))),
    })
}

/// An exponent `N` with `x^N = 0` for every nilpotent sample element `x`.
fn nilpotency_bound(r: &RingExpr, x: &RingElement) -> u64 {
    match (r, x) {
        (RingExpr::ZMod { factors, .. }, _) => factors.iter().map(|(_, e)| u64::from(*e)).max().unwrap_or(1),
        (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), RingElement::MPoly(p)) => {
            // each term has its d-th power in the ideal; pigeonhole over the terms
            let d = m.gens().iter().flatten().copied().max().unwrap_or(1).max(1);
            p.len() as u64 * u64::from(d - 1) + 1
        }
        _ => 1,
    }
}

const SAMPLE_CAP: usize = 400;

/// `N(prod R_k) = prod N(R_k)`, checked on a sample of elements by raising
/// to a power, together with the equivalent statement that the minimal tame
/// primes are Zariski dense.
pub fn nilradical_product_law_check(r: &RingExpr) -> Result<bool> {
    let factors = factors_of(r)?;
    let pools = factors.iter().map(sample_elements).collect::<Result<Vec<_>>>()?;
    let total: usize = pools.iter().map(Vec::len).product();
    let step = total.div_ceil(SAMPLE_CAP).max(1);
    let mut idx = 0;
    while idx < total {
        let mut rest = idx;
        let mut items = Vec::with_capacity(pools.len());
        for pool in &pools {
            items.push(pool[rest % pool.len()].clone());
            rest /= pool.len();
        }
        let n = factors.iter().zip(&items).map(|(f, x)| nilpotency_bound(f, x)).max().unwrap_or(1);
        let x = RingElement::Tuple(items.clone());
        let by_power = r.is_zero_element(&r.pow(&x, n)?)?;
        let mut by_factor = true;
        for (f, y) in factors.iter().zip(&items) {
            by_factor &= f.is_nilpotent(y)?;
        }
        if by_power != by_factor {
            return Ok(false);
        }
        idx += step;
    }

    let space = Space::new(r)?;
    let all = space.points()?;
    let minimal: BTreeSet<PrimePoint> =
        all.iter().filter(|p| !all.iter().any(|q| q != *p && space.leq(q, p))).cloned().collect();
    let mut tame_minimal = BTreeSet::new();
    for (slot, f) in factors.iter().enumerate() {
        let fs = Space::new(f)?;
        let pts = fs.points()?;
        for m in pts.iter().filter(|p| !pts.iter().any(|q| q != *p && fs.leq(q, p))) {
            tame_minimal.insert(PrimePoint::tame(slot, m.clone()));
        }
    }
    let dense = space.is_dense(&SpecSubset::explicit(minimal.iter().cloned()), Topology::Zariski)?;
    Ok(minimal == tame_minimal && dense)
}
