//! Canonical ring maps, contraction of primes along them, injectivity and
//! lying-over search.
//!
//! Target rings are built concretely for finite index sets: `R/p` and `R_p`
//! become rings of the supported kinds, so that contraction can be computed
//! on elements (an element `r` lies in `phi^-1(q)` iff its image lies in
//! `q`) rather than read off the order of the source spectrum.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{
    fpoly, monomial, CoefficientField, FieldDescriptor, IdealRepr, MPoly, MonomialRing, RingElement, RingExpr,
};
use crate::spectrum::{prime_ideal, PrimePoint, Space, SpecSubset};

/// A canonical ring map out of `ring`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum RingMapSpec {
    /// `R -> R/p`.
    #[serde(rename = "quotientMap")]
    Quotient { ring: RingExpr, prime: PrimePoint },
    /// `R -> prod_{p in E} R/p`.
    #[serde(rename = "canonicalIntoQuotientProduct")]
    IntoQuotientProduct { ring: RingExpr, set: SpecSubset },
    /// `R -> prod_{p in E} R_p`.
    #[serde(rename = "canonicalIntoLocalProduct")]
    IntoLocalProduct { ring: RingExpr, set: SpecSubset },
    /// `Z/n -> prod Z/d_i`.
    #[serde(rename = "diagonalIntoModProduct")]
    DiagonalIntoModProduct { n: u64, divisors: Vec<u64> },
    /// `R -> k(p)`.
    #[serde(rename = "residueMap")]
    Residue { ring: RingExpr, prime: PrimePoint },
}

/// Which kind of factor a prime contributes to a product target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Quotient,
    Local,
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorKind::Quotient => "quotient",
            FactorKind::Local => "local",
        })
    }
}

impl RingMapSpec {
    pub fn source(&self) -> Result<RingExpr> {
        match self {
            RingMapSpec::Quotient { ring, .. }
            | RingMapSpec::IntoQuotientProduct { ring, .. }
            | RingMapSpec::IntoLocalProduct { ring, .. }
            | RingMapSpec::Residue { ring, .. } => Ok(ring.clone()),
            RingMapSpec::DiagonalIntoModProduct { n, .. } => RingExpr::zmod(*n),
        }
    }

    /// Checks the map data: the prime or index set lives in the source
    /// spectrum, the divisors divide `n`.
    pub fn validate(&self) -> Result<()> {
        match self {
            RingMapSpec::Quotient { ring, prime } | RingMapSpec::Residue { ring, prime } => {
                Space::new(ring)?.validate(prime)
            }
            RingMapSpec::IntoQuotientProduct { ring, set } | RingMapSpec::IntoLocalProduct { ring, set } => {
                Space::new(ring)?.canonical(set).map(|_| ())
            }
            RingMapSpec::DiagonalIntoModProduct { n, divisors } => {
                RingExpr::zmod(*n)?;
                if divisors.is_empty() {
                    return Err(Error::UnsupportedMap("no divisors".into()));
                }
                for d in divisors {
                    if *d < 2 || n % d != 0 {
                        return Err(Error::UnsupportedMap(format!("{d} is not a proper divisor factor of {n}")));
                    }
                }
                Ok(())
            }
        }
    }

    /// Index set of a product map, as a sorted list of primes.
    fn finite_index(&self) -> Result<Vec<PrimePoint>> {
        match self {
            RingMapSpec::IntoQuotientProduct { ring, set } | RingMapSpec::IntoLocalProduct { ring, set } => {
                let e = Space::new(ring)?.canonical(set)?;
                match e {
                    SpecSubset::Empty => Ok(Vec::new()),
                    SpecSubset::Explicit { points } => Ok(points.into_iter().collect()),
                    _ => Err(Error::UnsupportedSymbolic(format!(
                        "the product over {e} is infinite; its primes are not enumerated"
                    ))),
                }
            }
            _ => Ok(Vec::new()),
        }
    }

    /// The target ring; product targets need a finite index set.
    pub fn target(&self) -> Result<RingExpr> {
        self.validate()?;
        match self {
            RingMapSpec::Quotient { ring, prime } => factor_ring(ring, prime, FactorKind::Quotient),
            RingMapSpec::Residue { ring, prime } => residue_field(ring, prime),
            RingMapSpec::IntoQuotientProduct { ring, .. } | RingMapSpec::IntoLocalProduct { ring, .. } => {
                let kind = self.factor_kind().expect("product map");
                let index = self.finite_index()?;
                if index.is_empty() {
                    return Err(Error::UnsupportedMap("the empty product is the zero ring".into()));
                }
                let factors = index.iter().map(|p| factor_ring(ring, p, kind)).collect::<Result<_>>()?;
                RingExpr::product(factors)
            }
            RingMapSpec::DiagonalIntoModProduct { divisors, .. } => {
                RingExpr::product(divisors.iter().map(|&d| RingExpr::zmod(d)).collect::<Result<_>>()?)
            }
        }
    }

    fn factor_kind(&self) -> Option<FactorKind> {
        match self {
            RingMapSpec::IntoQuotientProduct { .. } => Some(FactorKind::Quotient),
            RingMapSpec::IntoLocalProduct { .. } => Some(FactorKind::Local),
            _ => None,
        }
    }
}

impl fmt::Display for RingMapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingMapSpec::Quotient { ring, prime } => write!(f, "{ring} -> {ring}/{prime}"),
            RingMapSpec::IntoQuotientProduct { ring, set } => write!(f, "{ring} -> prod R/p over {set}"),
            RingMapSpec::IntoLocalProduct { ring, set } => write!(f, "{ring} -> prod R_p over {set}"),
            RingMapSpec::DiagonalIntoModProduct { n, divisors } => {
                let ds: Vec<String> = divisors.iter().map(|d| format!("Z/{d}")).collect();
                write!(f, "Z/{n} -> {}", ds.join(" x "))
            }
            RingMapSpec::Residue { ring, prime } => write!(f, "{ring} -> k({prime})"),
        }
    }
}

fn field_of(k: &CoefficientField) -> RingExpr {
    k.as_ring()
}

fn small_prime(p: &num_bigint::BigUint) -> Result<u64> {
    p.to_u64()
        .ok_or_else(|| Error::Unsupported(format!("residue rings of Z at {p} need a 64-bit prime")))
}

// Variables of a monomial quotient that survive modulo the prime with the
// given cover, in increasing order.
fn surviving(m: &MonomialRing, cover: &BTreeSet<u32>) -> Vec<u32> {
    (1..=m.nvars() as u32).filter(|v| !cover.contains(v)).collect()
}

/// `R/p` or `R_p` as a concrete ring.
pub fn factor_ring(ring: &RingExpr, p: &PrimePoint, kind: FactorKind) -> Result<RingExpr> {
    Space::new(ring)?.validate(p)?;
    let unsupported = || Error::UnsupportedMap(format!("{kind} factor of {ring} at {p}"));
    Ok(match (ring, p, kind) {
        (RingExpr::Integers, PrimePoint::ZGeneric, FactorKind::Quotient) => RingExpr::Integers,
        (RingExpr::Integers, PrimePoint::ZGeneric, FactorKind::Local) => RingExpr::Rationals,
        (RingExpr::Integers, PrimePoint::ZMax { p: q }, FactorKind::Quotient) => RingExpr::PrimeField(small_prime(q)?),
        (RingExpr::Integers, PrimePoint::ZMax { .. }, FactorKind::Local) => {
            RingExpr::LocalizedPid { base: Box::new(RingExpr::Integers), at: p.clone() }
        }
        (RingExpr::ZMod { .. }, PrimePoint::ZmodPrime { p: q }, FactorKind::Quotient) => RingExpr::PrimeField(*q),
        (RingExpr::ZMod { factors, .. }, PrimePoint::ZmodPrime { p: q }, FactorKind::Local) => {
            let e = factors.iter().find(|(f, _)| f == q).map(|(_, e)| *e).unwrap_or(1);
            RingExpr::zmod(q.pow(e))?
        }
        (RingExpr::PrimeField(_) | RingExpr::Rationals | RingExpr::ResidueField(_), PrimePoint::FieldZero, _) => {
            ring.clone()
        }
        (RingExpr::FpPoly(_), PrimePoint::FpxGeneric, FactorKind::Quotient) => ring.clone(),
        (RingExpr::FpPoly(q), PrimePoint::FpxGeneric, FactorKind::Local) => {
            RingExpr::ResidueField(FieldDescriptor::RationalFunctions { field: CoefficientField::Prime(*q), var: 1 })
        }
        (RingExpr::FpPoly(_), PrimePoint::FpxMax { .. }, FactorKind::Quotient) => residue_field(ring, p)?,
        (RingExpr::FpPoly(_), PrimePoint::FpxMax { .. }, FactorKind::Local) => {
            RingExpr::LocalizedPid { base: Box::new(ring.clone()), at: p.clone() }
        }
        (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), PrimePoint::MonoPrime { cover }, FactorKind::Quotient) => {
            let rest = surviving(m, cover);
            if rest.is_empty() {
                field_of(m.field())
            } else {
                let q = MonomialRing::new(m.field().clone(), rest.len(), Vec::new())?;
                if matches!(ring, RingExpr::LocalizedAtIrrelevant(_)) {
                    RingExpr::localized(q)?
                } else {
                    RingExpr::MonomialQuotient(q)
                }
            }
        }
        (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), PrimePoint::MonoPrime { cover }, FactorKind::Local) => {
            let is_max = cover.len() == m.nvars();
            let minimal = m.minimal_covers().contains(cover);
            match (is_max, minimal) {
                (true, _) if matches!(ring, RingExpr::LocalizedAtIrrelevant(_)) => ring.clone(),
                (true, true) => field_of(m.field()),
                // a reduced ring localized at a minimal prime is its residue field
                (false, true) => residue_field(ring, p)?,
                _ => return Err(unsupported()),
            }
        }
        (RingExpr::SymbolicSupplement(k), PrimePoint::SuppMin { .. }, FactorKind::Quotient) => {
            RingExpr::localized(MonomialRing::new(k.clone(), 1, Vec::new())?)?
        }
        (RingExpr::SymbolicSupplement(k), PrimePoint::SuppTop, FactorKind::Quotient) => field_of(k),
        (RingExpr::SymbolicSupplement(_), PrimePoint::SuppMin { .. }, FactorKind::Local) => residue_field(ring, p)?,
        (RingExpr::Product(factors), PrimePoint::TamePrime { slot, inner }, _) => {
            factor_ring(&factors[*slot], inner, kind)?
        }
        _ => return Err(unsupported()),
    })
}

/// The residue field `k(p)`, the fraction field of `R/p`.
pub fn residue_field(ring: &RingExpr, p: &PrimePoint) -> Result<RingExpr> {
    Space::new(ring)?.validate(p)?;
    let unsupported = || Error::Unsupported(format!("residue field of {ring} at {p}"));
    Ok(match (ring, p) {
        (RingExpr::Integers, PrimePoint::ZGeneric) => RingExpr::Rationals,
        (RingExpr::Integers, PrimePoint::ZMax { p: q }) => RingExpr::PrimeField(small_prime(q)?),
        (RingExpr::ZMod { .. }, PrimePoint::ZmodPrime { p: q }) => RingExpr::PrimeField(*q),
        (RingExpr::PrimeField(_) | RingExpr::Rationals | RingExpr::ResidueField(_), PrimePoint::FieldZero) => {
            ring.clone()
        }
        (RingExpr::FpPoly(q), PrimePoint::FpxGeneric) => {
            RingExpr::ResidueField(FieldDescriptor::RationalFunctions { field: CoefficientField::Prime(*q), var: 1 })
        }
        (RingExpr::FpPoly(q), PrimePoint::FpxMax { f }) if f.len() == 2 => RingExpr::PrimeField(*q),
        (RingExpr::FpPoly(q), PrimePoint::FpxMax { f }) => {
            RingExpr::ResidueField(FieldDescriptor::GaloisField { p: *q, modulus: f.clone() })
        }
        (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), PrimePoint::MonoPrime { cover }) => {
            match surviving(m, cover).as_slice() {
                [] => field_of(m.field()),
                // R/p is a polynomial ring in the one surviving variable
                [v] => RingExpr::ResidueField(FieldDescriptor::RationalFunctions {
                    field: m.field().clone(),
                    var: u64::from(*v),
                }),
                _ => return Err(unsupported()),
            }
        }
        (RingExpr::SymbolicSupplement(k), PrimePoint::SuppMin { k: idx }) => {
            RingExpr::ResidueField(FieldDescriptor::RationalFunctions { field: k.clone(), var: *idx })
        }
        (RingExpr::SymbolicSupplement(k), PrimePoint::SuppTop) => field_of(k),
        (RingExpr::LocalizedPid { base, .. }, q) => residue_field(base, q)?,
        (RingExpr::Product(factors), PrimePoint::TamePrime { slot, inner }) => residue_field(&factors[*slot], inner)?,
        _ => return Err(unsupported()),
    })
}

/// Generators of an ideal as ring elements.
pub(crate) fn ideal_generators(ring: &RingExpr, ideal: &IdealRepr) -> Result<Vec<RingElement>> {
    Ok(match (ring, ideal) {
        (_, IdealRepr::Principal { generator }) => vec![generator.clone()],
        (_, IdealRepr::Monomial { gens }) => gens
            .iter()
            .map(|g| RingElement::MPoly(MPoly::monomial(g.clone(), num_rational::BigRational::from_integer(1.into()))))
            .collect(),
        (RingExpr::Product(factors), IdealRepr::Tuple { items }) => {
            let mut out = Vec::new();
            for (slot, (f, i)) in factors.iter().zip(items).enumerate() {
                for g in ideal_generators(f, i)? {
                    out.push(ring.embed(slot, &g)?);
                }
            }
            out
        }
        _ => return Err(Error::KindMismatch(format!("ideal {ideal} in {ring}"))),
    })
}

// Whether the image of `r` under R -> (R/p or R_p) lies in the prime `q` of
// that factor. Only called for sources with a finite spectrum.
fn image_in(ring: &RingExpr, p: &PrimePoint, kind: FactorKind, q: &PrimePoint, r: &RingElement) -> Result<bool> {
    let r = ring.normalize(r)?;
    match (ring, p, &r) {
        (RingExpr::Product(factors), PrimePoint::TamePrime { slot, inner }, RingElement::Tuple(items)) => {
            image_in(&factors[*slot], inner, kind, q, &items[*slot])
        }
        (RingExpr::ZMod { .. }, PrimePoint::ZmodPrime { .. }, RingElement::Mod(v)) => {
            let target = factor_ring(ring, p, kind)?;
            let image = target.normalize(&RingElement::Mod(*v))?;
            target.ideal_member(&prime_ideal(q, &target)?, &image)
        }
        (RingExpr::PrimeField(_) | RingExpr::Rationals, PrimePoint::FieldZero, _) => {
            ring.ideal_member(&prime_ideal(q, ring)?, &r)
        }
        (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), PrimePoint::MonoPrime { cover }, RingElement::MPoly(poly)) => {
            let target = factor_ring(ring, p, kind)?;
            match kind {
                FactorKind::Quotient => {
                    // x_i -> 0 for i in the cover, the rest renumbered
                    let rest = surviving(m, cover);
                    let terms = poly.terms().filter(|(e, _)| cover.iter().all(|&i| e[i as usize - 1] == 0)).map(
                        |(e, c)| (rest.iter().map(|&v| e[v as usize - 1]).collect::<Vec<u32>>(), c.clone()),
                    );
                    let image = MPoly::from_terms(terms);
                    let image = match &target {
                        RingExpr::PrimeField(_) | RingExpr::Rationals => {
                            constant_as_field_element(&target, &image)?
                        }
                        _ => RingElement::MPoly(image),
                    };
                    let image = target.normalize(&image)?;
                    target.ideal_member(&prime_ideal(q, &target)?, &image)
                }
                FactorKind::Local => {
                    if target == *ring {
                        return ring.ideal_member(&prime_ideal(q, ring)?, &r);
                    }
                    // R_p is a field: r/1 = 0 iff some s outside p kills r;
                    // the product u of the variables outside the cover is such an s
                    // whenever one exists, since the ring is square-free
                    let u = RingElement::MPoly(MPoly::monomial(
                        monomial::from_support(&surviving(m, cover).into_iter().collect(), m.nvars()),
                        num_rational::BigRational::from_integer(1.into()),
                    ));
                    ring.is_zero_element(&ring.mul(&u, &r)?)
                }
            }
        }
        _ => Err(Error::UnsupportedMap(format!("elementwise contraction from {ring}"))),
    }
}

fn constant_as_field_element(field: &RingExpr, p: &MPoly) -> Result<RingElement> {
    let c = p.constant_term();
    Ok(match field {
        RingExpr::PrimeField(q) => {
            let v = c.numer().mod_floor(&BigInt::from(*q)).to_u64().unwrap_or(0);
            let d = c.denom().mod_floor(&BigInt::from(*q)).to_u64().unwrap_or(1);
            RingElement::Mod(fpoly::mulmod(v, fpoly::invmod(d, *q), *q))
        }
        _ => RingElement::Rat(c),
    })
}

// The prime of a finite source spectrum equal to {r : member(r)}, found as
// the largest prime all of whose generators satisfy `member`.
fn contraction_by_elements(
    source: &RingExpr,
    member: impl Fn(&RingElement) -> Result<bool>,
) -> Result<PrimePoint> {
    let space = Space::new(source)?;
    let mut candidates = Vec::new();
    for t in space.points()? {
        let ideal = prime_ideal(t, source)?;
        let mut inside = true;
        for g in ideal_generators(source, &ideal)? {
            if !member(&g)? {
                inside = false;
                break;
            }
        }
        if inside {
            candidates.push((t.clone(), ideal));
        }
    }
    for (t, big) in &candidates {
        let mut top = true;
        for (_, small) in &candidates {
            if !source.ideal_contains(big, small)? {
                top = false;
                break;
            }
        }
        if top {
            return Ok(t.clone());
        }
    }
    Err(Error::NotFound("no prime of the source matches the preimage".into()))
}

// Contraction along R -> R/p or R -> R_p for sources with an infinite
// spectrum, through the order correspondences of quotients and localizations.
fn contraction_by_correspondence(ring: &RingExpr, p: &PrimePoint, kind: FactorKind, q: &PrimePoint) -> Result<PrimePoint> {
    let bad = || Error::InvalidPoint(format!("{q} is not a prime of the {kind} factor at {p}"));
    Ok(match (ring, kind, q) {
        (RingExpr::Integers | RingExpr::FpPoly(_), FactorKind::Quotient, _) if p.is_generic() => q.clone(),
        (RingExpr::Integers | RingExpr::FpPoly(_), FactorKind::Quotient, PrimePoint::FieldZero) => p.clone(),
        (RingExpr::Integers | RingExpr::FpPoly(_), FactorKind::Local, PrimePoint::FieldZero) => p.clone(),
        (RingExpr::Integers | RingExpr::FpPoly(_), FactorKind::Local, _) => q.clone(),
        (RingExpr::SymbolicSupplement(_), FactorKind::Quotient, PrimePoint::MonoPrime { cover }) => {
            if cover.is_empty() {
                p.clone()
            } else {
                PrimePoint::SuppTop
            }
        }
        (RingExpr::SymbolicSupplement(_), _, PrimePoint::FieldZero) => p.clone(),
        (RingExpr::SymbolicSupplement(_), FactorKind::Local, _) if *p == PrimePoint::SuppTop => q.clone(),
        _ => return Err(bad()),
    })
}

fn contract_factor(ring: &RingExpr, p: &PrimePoint, kind: FactorKind, q: &PrimePoint) -> Result<PrimePoint> {
    let target = factor_ring(ring, p, kind)?;
    Space::new(&target)?.validate(q)?;
    let source = Space::new(ring)?;
    let found = if source.is_finite() {
        contraction_by_elements(ring, |r| image_in(ring, p, kind, q, r))?
    } else {
        contraction_by_correspondence(ring, p, kind, q)?
    };
    Ok(found)
}

/// The preimage `phi^-1(q)` of a prime of the target.
pub fn contract(map: &RingMapSpec, q: &PrimePoint) -> Result<PrimePoint> {
    map.validate()?;
    match map {
        RingMapSpec::Quotient { ring, prime } => contract_factor(ring, prime, FactorKind::Quotient, q),
        RingMapSpec::Residue { prime, .. } => {
            if *q != PrimePoint::FieldZero {
                return Err(Error::InvalidPoint(format!("{q} is not the prime of a field")));
            }
            // the kernel of R -> k(p) is p
            Ok(prime.clone())
        }
        RingMapSpec::IntoQuotientProduct { ring, .. } | RingMapSpec::IntoLocalProduct { ring, .. } => {
            let PrimePoint::TamePrime { slot, inner } = q else {
                return Err(Error::WildPrimeUnsupported);
            };
            let index = map.finite_index()?;
            let p = index.get(*slot).ok_or(Error::BadSlot { slot: *slot, len: index.len() })?;
            contract_factor(ring, p, map.factor_kind().expect("product map"), inner)
        }
        RingMapSpec::DiagonalIntoModProduct { n, divisors } => {
            let PrimePoint::TamePrime { slot, inner } = q else {
                return Err(Error::WildPrimeUnsupported);
            };
            let d = *divisors.get(*slot).ok_or(Error::BadSlot { slot: *slot, len: divisors.len() })?;
            let factor = RingExpr::zmod(d)?;
            let ideal = prime_ideal(inner, &factor)?;
            let source = RingExpr::zmod(*n)?;
            contraction_by_elements(&source, |r| match r {
                RingElement::Mod(v) => factor.ideal_member(&ideal, &RingElement::Mod(v % d)),
                _ => Err(Error::KindMismatch(format!("{r} in Z/{n}"))),
            })
        }
    }
}

/// Contraction of a tame prime `pi_slot^-1(inner)` of a product target.
pub fn tame_contract(map: &RingMapSpec, p: &PrimePoint) -> Result<PrimePoint> {
    contract(map, p)
}

// Kernel of R -> prod_{p in points} R_p is zero.
fn local_kernel_zero(ring: &RingExpr, points: &[PrimePoint]) -> Result<bool> {
    Ok(match ring {
        RingExpr::ZMod { n, factors } => {
            // Z/n -> (Z/n)_(p) = Z/p^e has kernel (p^e)
            let l = factors
                .iter()
                .filter(|(p, _)| points.contains(&PrimePoint::ZmodPrime { p: *p }))
                .fold(1u64, |acc, (p, e)| acc.lcm(&p.pow(*e)));
            l % n == 0
        }
        RingExpr::PrimeField(_) | RingExpr::Rationals | RingExpr::ResidueField(_) => !points.is_empty(),
        // reduced: the kernel of R -> R_p is the intersection of the minimal
        // primes inside p
        RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m) => m.minimal_covers().iter().all(|c| {
            points.iter().any(|p| matches!(p, PrimePoint::MonoPrime { cover } if c.is_subset(cover)))
        }),
        RingExpr::Product(factors) => {
            let mut all = true;
            for (slot, f) in factors.iter().enumerate() {
                let inner: Vec<PrimePoint> = points
                    .iter()
                    .filter_map(|p| match p {
                        PrimePoint::TamePrime { slot: s, inner } if *s == slot => Some((**inner).clone()),
                        _ => None,
                    })
                    .collect();
                all &= local_kernel_zero(f, &inner)?;
            }
            all
        }
        _ => return Err(Error::Unsupported(format!("localization kernel of {ring}"))),
    })
}

/// Whether the map has zero kernel.
pub fn is_injective(map: &RingMapSpec) -> Result<bool> {
    map.validate()?;
    match map {
        RingMapSpec::DiagonalIntoModProduct { n, divisors } => {
            Ok(divisors.iter().fold(1u64, |acc, d| acc.lcm(d)) == *n)
        }
        RingMapSpec::Quotient { ring, prime } | RingMapSpec::Residue { ring, prime } => {
            if matches!(ring, RingExpr::SymbolicSupplement(_)) {
                return Ok(false);
            }
            let ideal = prime_ideal(prime, ring)?;
            ideal_is_zero(ring, &ideal)
        }
        RingMapSpec::IntoQuotientProduct { ring, set } => {
            let space = Space::new(ring)?;
            let e = space.canonical(set)?;
            if space.is_dedekind() {
                // a nonzero element has finitely many prime factors
                return Ok(!e.is_finite() || e.points().is_some_and(|s| s.iter().any(PrimePoint::is_generic)));
            }
            if space.is_supplement() {
                // x_j lies in every P_k with k != j
                return Ok(matches!(e, SpecSubset::Whole)
                    || matches!(&e, SpecSubset::CofiniteMin { excluded, .. } if excluded.is_empty()));
            }
            let points: Vec<PrimePoint> = e.points().map(|s| s.iter().cloned().collect()).unwrap_or_default();
            if points.is_empty() {
                return Ok(false);
            }
            let mut acc = prime_ideal(&points[0], ring)?;
            for p in &points[1..] {
                acc = ring.ideal_intersect(&acc, &prime_ideal(p, ring)?)?;
            }
            ideal_is_zero(ring, &acc)
        }
        RingMapSpec::IntoLocalProduct { ring, set } => {
            let space = Space::new(ring)?;
            let e = space.canonical(set)?;
            if space.is_dedekind() {
                return Ok(!matches!(e, SpecSubset::Empty));
            }
            if space.is_supplement() {
                return Ok(space.contains(&e, &PrimePoint::SuppTop)?
                    || matches!(&e, SpecSubset::CofiniteMin { excluded, .. } if excluded.is_empty()));
            }
            let points: Vec<PrimePoint> = e.points().map(|s| s.iter().cloned().collect()).unwrap_or_default();
            local_kernel_zero(ring, &points)
        }
    }
}

fn ideal_is_zero(ring: &RingExpr, ideal: &IdealRepr) -> Result<bool> {
    for g in ideal_generators(ring, ideal)? {
        if !ring.is_zero_element(&g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A prime of the target contracting to `p`, the least one in the point
/// order. Exists for minimal `p` whenever the map is injective.
pub fn laying_over(map: &RingMapSpec, p: &PrimePoint) -> Result<PrimePoint> {
    let source = Space::new(&map.source()?)?;
    source.validate(p)?;
    let target = Space::new(&map.target()?)?;
    let candidates: Vec<PrimePoint> = if target.is_finite() {
        target.points()?.iter().cloned().collect()
    } else {
        // R -> R/(0): the target is the source again
        let mut c = target.probe_points(&[], 0)?;
        if target.validate(p).is_ok() {
            c.push(p.clone());
        }
        c.sort();
        c
    };
    for q in candidates {
        if contract(map, &q)? == *p {
            return Ok(q);
        }
    }
    let why = if is_injective(map)? { "" } else { " (the map is not injective)" };
    Err(Error::NotFound(format!("no prime of the target of {map} lies over {p}{why}")))
}

/// `Im(Spec(prod_{p in E} k(p)) -> Spec(R))`, decided point by point: `q` is
/// missed iff some `a_1..a_m` in `q` and `s` outside `q` satisfy
/// `E ∩ V(a_1..a_m) ∩ D(s) = {}` (the image of `s` then lies in the ideal
/// generated by `q` in the product of fields). The candidate `a`'s and `s`'s
/// are built out of the points that `E` mentions.
pub fn residue_product_image(ring: &RingExpr, e: &SpecSubset) -> Result<SpecSubset> {
    const FRESH: usize = 2;
    let space = Space::new(ring)?;
    let e = space.canonical(e)?;
    let probes = space.probe_points(&[&e], FRESH)?;
    let mut hit = Vec::with_capacity(probes.len());
    for q in &probes {
        hit.push(!missed_by_residues(&space, &e, q)?);
    }
    if space.is_finite() {
        return Ok(SpecSubset::explicit(probes.into_iter().zip(hit).filter(|(_, h)| *h).map(|(p, _)| p)));
    }
    // probe 0 is the distinguished point, the last FRESH stand for every
    // point the representation does not mention
    let n = probes.len();
    let fresh_in = hit[n - FRESH..].iter().all(|&h| h);
    if hit[n - FRESH..].iter().any(|&h| h != fresh_in) {
        return Err(Error::UnsupportedSymbolic(format!("residue image of {e}: unmentioned points disagree")));
    }
    let special_in = hit[0];
    let mentioned = &probes[1..n - FRESH];
    let flags = &hit[1..n - FRESH];
    let out = if fresh_in {
        let excluded = mentioned.iter().zip(flags).filter(|(_, h)| !**h).map(|(p, _)| p.clone());
        if space.is_supplement() {
            let ks = excluded.map(|p| match p {
                PrimePoint::SuppMin { k } => k,
                _ => unreachable!("mentioned points of the supplement are minimal"),
            });
            SpecSubset::cofinite_min(ks, special_in)
        } else {
            SpecSubset::cofinite_closed(excluded, special_in)
        }
    } else {
        let listed = mentioned.iter().zip(flags).filter(|(_, h)| **h).map(|(p, _)| p.clone());
        let special = special_in.then(|| probes[0].clone());
        SpecSubset::explicit(listed.chain(special))
    };
    space.canonical(&out)
}

fn missed_by_residues(space: &Space, e: &SpecSubset, q: &PrimePoint) -> Result<bool> {
    let (a_pool, s_pool) = witness_pools(space, e, q)?;
    for a in &a_pool {
        let mut va = space.whole();
        for g in a {
            debug_assert!(space.point_contains(q, g)?);
            va = space.intersection(&va, &space.v_locus(g)?)?;
        }
        let ea = space.intersection(e, &va)?;
        for s in &s_pool {
            if space.point_contains(q, s)? {
                continue;
            }
            let left = space.intersection(&ea, &space.d_locus(s)?)?;
            if matches!(left, SpecSubset::Empty) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

// Candidate tuples (a_1..a_m) in q and elements s outside q.
type Pools = (Vec<Vec<RingElement>>, Vec<RingElement>);

fn witness_pools(space: &Space, e: &SpecSubset, q: &PrimePoint) -> Result<Pools> {
    let ring = space.ring();
    let one = ring.one()?;
    match ring {
        RingExpr::Integers | RingExpr::FpPoly(_) => {
            // V(a) is smallest for the generator of q; s = 1 or the product
            // of the finitely many closed points of E
            let a = ideal_generators(ring, &prime_ideal(q, ring)?)?;
            let mut s_pool = vec![one.clone()];
            if let Some(points) = e.points() {
                let mut prod = one;
                for p in points.iter().filter(|p| !p.is_generic()) {
                    for g in ideal_generators(ring, &prime_ideal(p, ring)?)? {
                        prod = ring.mul(&prod, &g)?;
                    }
                }
                s_pool.push(prod);
            }
            Ok((vec![a], s_pool))
        }
        RingExpr::SymbolicSupplement(_) => {
            let ks: Vec<u64> = space
                .probe_points(&[e], 0)?
                .into_iter()
                .filter_map(|p| match p {
                    PrimePoint::SuppMin { k } => Some(k),
                    _ => None,
                })
                .collect();
            let var = |k: u64| -> Result<RingElement> {
                let k = u32::try_from(k).map_err(|_| Error::Unsupported(format!("variable index {k}")))?;
                Ok(RingElement::MPoly(MPoly::variable(k)))
            };
            match q {
                PrimePoint::SuppMin { k } => {
                    // a in P_k avoids x_k; s = x_k has D(s) = {P_k}
                    let a = ks.iter().filter(|j| *j != k).map(|&j| var(j)).collect::<Result<_>>()?;
                    Ok((vec![a], vec![one, var(*k)?]))
                }
                _ => {
                    let a = ks.iter().map(|&j| var(j)).collect::<Result<_>>()?;
                    Ok((vec![a], vec![one]))
                }
            }
        }
        _ => {
            // finite spectrum: the generators of q cut out V(q); s multiplies
            // one element from each prime strictly above q, chosen outside q
            let gens = ideal_generators(ring, &prime_ideal(q, ring)?)?;
            let mut s = one.clone();
            for p in space.points()? {
                if p == q || !contains_all(space, p, &gens)? {
                    continue;
                }
                for g in ideal_generators(ring, &prime_ideal(p, ring)?)? {
                    if !space.point_contains(q, &g)? {
                        s = ring.mul(&s, &g)?;
                        break;
                    }
                }
            }
            Ok((vec![gens], vec![one, s]))
        }
    }
}

fn contains_all(space: &Space, p: &PrimePoint, gens: &[RingElement]) -> Result<bool> {
    for g in gens {
        if !space.point_contains(p, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
