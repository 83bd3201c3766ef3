//! Prime points, subsets of spectra, the specialization order and the
//! loci `V(r)`, `D(r)`.

mod point;
mod subset;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

pub use point::PrimePoint;
pub use subset::{subset_member, SpecSubset};
pub(crate) use subset::{Part, Sym};

use crate::error::{Error, Result};
use crate::rings::{factor, fpoly, monomial, IdealRepr, MonomialRing, RingElement, RingExpr};

/// Prime points of a ring whose spectrum is finite and explicitly known.
pub fn spec_points(ring: &RingExpr) -> Result<BTreeSet<PrimePoint>> {
    Ok(match ring {
        RingExpr::ZMod { factors, .. } => factors.iter().map(|&(p, _)| PrimePoint::ZmodPrime { p }).collect(),
        RingExpr::PrimeField(_) | RingExpr::Rationals | RingExpr::ResidueField(_) => {
            BTreeSet::from([PrimePoint::FieldZero])
        }
        RingExpr::MonomialQuotient(m) if m.dimension() == 0 => monomial_primes(m),
        RingExpr::MonomialQuotient(m) => {
            return Err(Error::NonEnumerable(format!(
                "{ring} has dimension {} and primes that are not monomial",
                m.dimension()
            )))
        }
        // dimension <= 1 is enforced on construction, so every prime inside
        // the irrelevant ideal is monomial
        RingExpr::LocalizedAtIrrelevant(m) => monomial_primes(m),
        RingExpr::LocalizedPid { base, at } => {
            let generic = if matches!(**base, RingExpr::Integers) { PrimePoint::ZGeneric } else { PrimePoint::FpxGeneric };
            BTreeSet::from([generic, at.clone()])
        }
        RingExpr::Product(factors) => {
            let mut out = BTreeSet::new();
            for (slot, f) in factors.iter().enumerate() {
                out.extend(spec_points(f)?.into_iter().map(|q| PrimePoint::tame(slot, q)));
            }
            out
        }
        RingExpr::Integers | RingExpr::FpPoly(_) | RingExpr::SymbolicSupplement(_) => {
            return Err(Error::NonEnumerable(format!("the spectrum of {ring} is infinite")))
        }
    })
}

/// All monomial primes `(x_i : i in C)` of a square-free quotient, one per
/// vertex cover `C`. These include every minimal prime.
pub fn monomial_primes(m: &MonomialRing) -> BTreeSet<PrimePoint> {
    monomial::all_covers(m.gens(), m.nvars())
        .into_iter()
        .map(|cover| PrimePoint::MonoPrime { cover })
        .collect()
}

/// The whole spectrum, explicit when finite.
pub fn enumerate_spec(ring: &RingExpr) -> Result<SpecSubset> {
    Ok(Space::new(ring)?.whole())
}

/// Ideal containment between two points of the same ring.
pub fn leq_specialization(p: &PrimePoint, q: &PrimePoint, ring: &RingExpr) -> Result<bool> {
    validate_point(p, ring)?;
    validate_point(q, ring)?;
    Ok(leq_points(p, q))
}

pub(crate) fn leq_points(p: &PrimePoint, q: &PrimePoint) -> bool {
    if p == q {
        return true;
    }
    match (p, q) {
        (PrimePoint::ZGeneric, PrimePoint::ZMax { .. }) => true,
        (PrimePoint::FpxGeneric, PrimePoint::FpxMax { .. }) => true,
        (PrimePoint::MonoPrime { cover: a }, PrimePoint::MonoPrime { cover: b }) => a.is_subset(b),
        (PrimePoint::SuppMin { .. }, PrimePoint::SuppTop) => true,
        (PrimePoint::TamePrime { slot: s, inner: a }, PrimePoint::TamePrime { slot: t, inner: b }) => {
            s == t && leq_points(a, b)
        }
        _ => false,
    }
}

fn bad_point(p: &PrimePoint, ring: &RingExpr, why: &str) -> Error {
    Error::InvalidPoint(format!("{p} is not a prime of {ring}: {why}"))
}

/// Checks that `p` names a prime ideal of `ring`.
pub fn validate_point(p: &PrimePoint, ring: &RingExpr) -> Result<()> {
    match (ring, p) {
        (RingExpr::Integers, PrimePoint::ZGeneric) => Ok(()),
        (RingExpr::Integers, PrimePoint::ZMax { p: q }) => {
            if factor::is_prime_big(q) {
                Ok(())
            } else {
                Err(bad_point(p, ring, "not a prime number"))
            }
        }
        (RingExpr::ZMod { n, .. }, PrimePoint::ZmodPrime { p: q }) => {
            if factor::is_prime_u64(*q) && n % q == 0 {
                Ok(())
            } else {
                Err(bad_point(p, ring, "not a prime divisor of the modulus"))
            }
        }
        (RingExpr::PrimeField(_) | RingExpr::Rationals | RingExpr::ResidueField(_), PrimePoint::FieldZero) => Ok(()),
        (RingExpr::FpPoly(_), PrimePoint::FpxGeneric) => Ok(()),
        (RingExpr::FpPoly(q), PrimePoint::FpxMax { f }) => {
            if f.len() < 2 || f.last() != Some(&1) || f.iter().any(|c| c >= q) {
                return Err(bad_point(p, ring, "not a reduced monic polynomial of positive degree"));
            }
            match fpoly::is_irreducible(f, *q) {
                Some(true) => Ok(()),
                Some(false) => Err(bad_point(p, ring, "reducible")),
                None => Err(Error::FactorizationLimit(format!(
                    "irreducibility of degree {} polynomials is not decided",
                    f.len() - 1
                ))),
            }
        }
        (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), PrimePoint::MonoPrime { cover }) => {
            if cover.iter().any(|&v| v == 0 || v as usize > m.nvars()) {
                return Err(bad_point(p, ring, "variable index out of range"));
            }
            if m.gens().iter().all(|g| !monomial::support(g).is_disjoint(cover)) {
                Ok(())
            } else {
                Err(bad_point(p, ring, "does not contain the defining ideal"))
            }
        }
        (RingExpr::SymbolicSupplement(_), PrimePoint::SuppMin { k }) => {
            if *k >= 1 {
                Ok(())
            } else {
                Err(bad_point(p, ring, "indices start at 1"))
            }
        }
        (RingExpr::SymbolicSupplement(_), PrimePoint::SuppTop) => Ok(()),
        (RingExpr::LocalizedPid { base, at }, q) => {
            let generic = if matches!(**base, RingExpr::Integers) { PrimePoint::ZGeneric } else { PrimePoint::FpxGeneric };
            if *q == generic || q == at {
                Ok(())
            } else {
                Err(bad_point(p, ring, "not inside the localizing prime"))
            }
        }
        (RingExpr::Product(factors), PrimePoint::TamePrime { slot, inner }) => match factors.get(*slot) {
            Some(f) => validate_point(inner, f),
            None => Err(Error::BadSlot { slot: *slot, len: factors.len() }),
        },
        _ => Err(bad_point(p, ring, "wrong kind of point")),
    }
}

/// The unit ideal, in the representation used for prime ideals.
pub(crate) fn unit_ideal(ring: &RingExpr) -> Result<IdealRepr> {
    Ok(match ring {
        RingExpr::MonomialQuotient(_) | RingExpr::LocalizedAtIrrelevant(_) => IdealRepr::monomial([Vec::new()]),
        RingExpr::Product(f) => IdealRepr::Tuple { items: f.iter().map(unit_ideal).collect::<Result<_>>()? },
        _ => IdealRepr::Principal { generator: ring.one()? },
    })
}

/// The ideal of a prime point, where it is finitely generated.
pub fn prime_ideal(p: &PrimePoint, ring: &RingExpr) -> Result<IdealRepr> {
    validate_point(p, ring)?;
    Ok(match (ring, p) {
        (RingExpr::Integers, PrimePoint::ZMax { p }) => IdealRepr::Principal { generator: RingElement::Int(p.clone().into()) },
        (RingExpr::ZMod { .. }, PrimePoint::ZmodPrime { p }) => IdealRepr::Principal { generator: RingElement::Mod(*p) },
        (RingExpr::FpPoly(_), PrimePoint::FpxMax { f }) => IdealRepr::Principal { generator: RingElement::Poly(f.clone()) },
        (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), PrimePoint::MonoPrime { cover }) => {
            IdealRepr::monomial(cover.iter().map(|&v| monomial::variable(v, m.nvars())))
        }
        (RingExpr::Product(factors), PrimePoint::TamePrime { slot, inner }) => {
            let items = factors
                .iter()
                .enumerate()
                .map(|(i, f)| if i == *slot { prime_ideal(inner, f) } else { unit_ideal(f) })
                .collect::<Result<_>>()?;
            IdealRepr::Tuple { items }
        }
        (RingExpr::SymbolicSupplement(_), _) => {
            return Err(Error::UnsupportedSymbolic(format!("{p} is not finitely generated")))
        }
        _ => IdealRepr::Principal { generator: ring.zero()? },
    })
}

#[derive(Clone, Debug)]
enum Universe {
    Finite(BTreeSet<PrimePoint>),
    /// `Z` or `F_p[x]`, with its generic point.
    Dedekind(PrimePoint),
    Supplement,
}

#[derive(Clone, Debug)]
enum Repr {
    Finite(BTreeSet<PrimePoint>),
    Dedekind(Sym<PrimePoint>),
    Supplement(Sym<u64>),
}

/// The spectrum of a fixed ring, with set operations on its subsets.
#[derive(Clone, Debug)]
pub struct Space {
    ring: RingExpr,
    universe: Universe,
}

impl Space {
    pub fn new(ring: &RingExpr) -> Result<Self> {
        let universe = match ring {
            RingExpr::Integers => Universe::Dedekind(PrimePoint::ZGeneric),
            RingExpr::FpPoly(_) => Universe::Dedekind(PrimePoint::FpxGeneric),
            RingExpr::SymbolicSupplement(_) => Universe::Supplement,
            _ => Universe::Finite(spec_points(ring)?),
        };
        Ok(Space { ring: ring.clone(), universe })
    }

    pub fn ring(&self) -> &RingExpr {
        &self.ring
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.universe, Universe::Finite(_))
    }

    pub fn is_supplement(&self) -> bool {
        matches!(self.universe, Universe::Supplement)
    }

    /// `Z` or `F_p[x]`.
    pub fn is_dedekind(&self) -> bool {
        matches!(self.universe, Universe::Dedekind(_))
    }

    /// The generic point of `Z` / `F_p[x]`.
    pub fn generic_point(&self) -> Option<&PrimePoint> {
        match &self.universe {
            Universe::Dedekind(g) => Some(g),
            _ => None,
        }
    }

    pub fn points(&self) -> Result<&BTreeSet<PrimePoint>> {
        match &self.universe {
            Universe::Finite(all) => Ok(all),
            _ => Err(Error::NonEnumerable(format!("the spectrum of {} is infinite", self.ring))),
        }
    }

    pub fn whole(&self) -> SpecSubset {
        match &self.universe {
            Universe::Finite(all) => SpecSubset::explicit(all.iter().cloned()),
            _ => SpecSubset::Whole,
        }
    }

    pub fn validate(&self, p: &PrimePoint) -> Result<()> {
        validate_point(p, &self.ring)
    }

    pub fn leq(&self, p: &PrimePoint, q: &PrimePoint) -> bool {
        leq_points(p, q)
    }

    fn repr(&self, e: &SpecSubset) -> Result<Repr> {
        let wrong = || Error::KindMismatch(format!("{e} is not a subset of Spec({})", self.ring));
        match &self.universe {
            Universe::Finite(all) => Ok(Repr::Finite(match e {
                SpecSubset::Empty => BTreeSet::new(),
                SpecSubset::Whole => all.clone(),
                SpecSubset::Explicit { points } => {
                    for p in points {
                        if !all.contains(p) {
                            self.validate(p)?;
                            return Err(bad_point(p, &self.ring, "not in the spectrum"));
                        }
                    }
                    points.clone()
                }
                _ => return Err(wrong()),
            })),
            Universe::Dedekind(generic) => {
                let closed = |s: &BTreeSet<PrimePoint>| -> Result<BTreeSet<PrimePoint>> {
                    for p in s {
                        self.validate(p)?;
                        if p == generic {
                            return Err(Error::InvalidPoint(format!("{p} is not a closed point")));
                        }
                    }
                    Ok(s.clone())
                };
                Ok(Repr::Dedekind(match e {
                    SpecSubset::Empty => Sym { special: false, part: Part::Fin(BTreeSet::new()) },
                    SpecSubset::Whole => Sym { special: true, part: Part::Cof(BTreeSet::new()) },
                    SpecSubset::Explicit { points } => {
                        let special = points.contains(generic);
                        let rest: BTreeSet<PrimePoint> = points.iter().filter(|p| *p != generic).cloned().collect();
                        Sym { special, part: Part::Fin(closed(&rest)?) }
                    }
                    SpecSubset::CofiniteClosed { excluded, with_generic } => {
                        Sym { special: *with_generic, part: Part::Cof(closed(excluded)?) }
                    }
                    SpecSubset::CofiniteMin { .. } => return Err(wrong()),
                }))
            }
            Universe::Supplement => Ok(Repr::Supplement(match e {
                SpecSubset::Empty => Sym { special: false, part: Part::Fin(BTreeSet::new()) },
                SpecSubset::Whole => Sym { special: true, part: Part::Cof(BTreeSet::new()) },
                SpecSubset::Explicit { points } => {
                    let mut special = false;
                    let mut ks = BTreeSet::new();
                    for p in points {
                        self.validate(p)?;
                        match p {
                            PrimePoint::SuppMin { k } => {
                                ks.insert(*k);
                            }
                            _ => special = true,
                        }
                    }
                    Sym { special, part: Part::Fin(ks) }
                }
                SpecSubset::CofiniteMin { excluded, with_top } => {
                    if excluded.contains(&0) {
                        return Err(Error::InvalidPoint("minimal prime indices start at 1".into()));
                    }
                    Sym { special: *with_top, part: Part::Cof(excluded.clone()) }
                }
                SpecSubset::CofiniteClosed { .. } => return Err(wrong()),
            })),
        }
    }

    fn from_repr(&self, r: Repr) -> SpecSubset {
        match r {
            Repr::Finite(set) => SpecSubset::explicit(set),
            Repr::Dedekind(Sym { special, part }) => {
                let generic = self.generic_point().cloned().unwrap_or(PrimePoint::ZGeneric);
                match part {
                    Part::Fin(mut s) => {
                        if special {
                            s.insert(generic);
                        }
                        SpecSubset::explicit(s)
                    }
                    Part::Cof(x) if x.is_empty() && special => SpecSubset::Whole,
                    Part::Cof(x) => SpecSubset::CofiniteClosed { excluded: x, with_generic: special },
                }
            }
            Repr::Supplement(Sym { special, part }) => match part {
                Part::Fin(ks) => {
                    let mut s: BTreeSet<PrimePoint> = ks.into_iter().map(|k| PrimePoint::SuppMin { k }).collect();
                    if special {
                        s.insert(PrimePoint::SuppTop);
                    }
                    SpecSubset::explicit(s)
                }
                Part::Cof(x) if x.is_empty() && special => SpecSubset::Whole,
                Part::Cof(x) => SpecSubset::CofiniteMin { excluded: x, with_top: special },
            },
        }
    }

    /// Validates `e` and returns its canonical form.
    pub fn canonical(&self, e: &SpecSubset) -> Result<SpecSubset> {
        let r = self.repr(e)?;
        Ok(self.from_repr(r))
    }

    fn binary(
        &self,
        a: &SpecSubset,
        b: &SpecSubset,
        fin: impl Fn(&BTreeSet<PrimePoint>, &BTreeSet<PrimePoint>) -> BTreeSet<PrimePoint>,
        ded: impl Fn(&Sym<PrimePoint>, &Sym<PrimePoint>) -> Sym<PrimePoint>,
        sup: impl Fn(&Sym<u64>, &Sym<u64>) -> Sym<u64>,
    ) -> Result<SpecSubset> {
        let r = match (self.repr(a)?, self.repr(b)?) {
            (Repr::Finite(x), Repr::Finite(y)) => Repr::Finite(fin(&x, &y)),
            (Repr::Dedekind(x), Repr::Dedekind(y)) => Repr::Dedekind(ded(&x, &y)),
            (Repr::Supplement(x), Repr::Supplement(y)) => Repr::Supplement(sup(&x, &y)),
            _ => unreachable!("both subsets live in the same universe"),
        };
        Ok(self.from_repr(r))
    }

    pub fn union(&self, a: &SpecSubset, b: &SpecSubset) -> Result<SpecSubset> {
        self.binary(a, b, |x, y| x | y, Sym::union, Sym::union)
    }

    pub fn intersection(&self, a: &SpecSubset, b: &SpecSubset) -> Result<SpecSubset> {
        self.binary(a, b, |x, y| x & y, Sym::intersection, Sym::intersection)
    }

    pub fn complement(&self, a: &SpecSubset) -> Result<SpecSubset> {
        let r = match self.repr(a)? {
            Repr::Finite(x) => {
                let Universe::Finite(all) = &self.universe else { unreachable!() };
                Repr::Finite(all - &x)
            }
            Repr::Dedekind(x) => Repr::Dedekind(x.complement()),
            Repr::Supplement(x) => Repr::Supplement(x.complement()),
        };
        Ok(self.from_repr(r))
    }

    pub fn difference(&self, a: &SpecSubset, b: &SpecSubset) -> Result<SpecSubset> {
        self.intersection(a, &self.complement(b)?)
    }

    pub fn is_subset(&self, a: &SpecSubset, b: &SpecSubset) -> Result<bool> {
        Ok(match (self.repr(a)?, self.repr(b)?) {
            (Repr::Finite(x), Repr::Finite(y)) => x.is_subset(&y),
            (Repr::Dedekind(x), Repr::Dedekind(y)) => x.is_subset(&y),
            (Repr::Supplement(x), Repr::Supplement(y)) => x.is_subset(&y),
            _ => unreachable!("both subsets live in the same universe"),
        })
    }

    /// Set equality.
    pub fn same(&self, a: &SpecSubset, b: &SpecSubset) -> Result<bool> {
        Ok(self.canonical(a)? == self.canonical(b)?)
    }

    pub fn contains(&self, e: &SpecSubset, p: &PrimePoint) -> Result<bool> {
        self.validate(p)?;
        Ok(subset_member(p, &self.canonical(e)?))
    }

    /// Points that decide every set question about `sets`: all points of a
    /// finite spectrum; otherwise the distinguished point, every point the
    /// sets mention, and `fresh` further points that no set mentions. Any
    /// two unmentioned points behave identically in every set built from
    /// these representations.
    pub fn probe_points(&self, sets: &[&SpecSubset], fresh: usize) -> Result<Vec<PrimePoint>> {
        match &self.universe {
            Universe::Finite(all) => Ok(all.iter().cloned().collect()),
            Universe::Dedekind(generic) => {
                let mut seen = BTreeSet::new();
                for e in sets {
                    if let Repr::Dedekind(s) = self.repr(e)? {
                        seen.extend(s.part.mentioned().iter().cloned());
                    }
                }
                let mut out = vec![generic.clone()];
                out.extend(seen.iter().cloned());
                out.extend(self.fresh_points(&seen, fresh));
                Ok(out)
            }
            Universe::Supplement => {
                let mut seen = BTreeSet::new();
                for e in sets {
                    if let Repr::Supplement(s) = self.repr(e)? {
                        seen.extend(s.part.mentioned().iter().copied());
                    }
                }
                let mut out = vec![PrimePoint::SuppTop];
                out.extend(seen.iter().map(|&k| PrimePoint::SuppMin { k }));
                let avoid: BTreeSet<PrimePoint> = seen.iter().map(|&k| PrimePoint::SuppMin { k }).collect();
                out.extend(self.fresh_points(&avoid, fresh));
                Ok(out)
            }
        }
    }

    /// The first `count` closed (resp. minimal) points outside `avoid`, in
    /// increasing order.
    pub fn fresh_points(&self, avoid: &BTreeSet<PrimePoint>, count: usize) -> Vec<PrimePoint> {
        let mut out = Vec::with_capacity(count);
        match (&self.universe, &self.ring) {
            (Universe::Dedekind(_), RingExpr::Integers) => {
                let mut n = 1u64;
                while out.len() < count {
                    n += 1;
                    let p = PrimePoint::z_max(n);
                    if factor::is_prime_u64(n) && !avoid.contains(&p) {
                        out.push(p);
                    }
                }
            }
            (Universe::Dedekind(_), RingExpr::FpPoly(q)) => {
                let q = *q;
                let mut degree = 1usize;
                while out.len() < count {
                    // monic polynomials of this degree, lower coefficients in base q
                    let total = q.checked_pow(degree as u32).unwrap_or(u64::MAX);
                    for code in 0..total {
                        let mut f = Vec::with_capacity(degree + 1);
                        let mut c = code;
                        for _ in 0..degree {
                            f.push(c % q);
                            c /= q;
                        }
                        f.push(1);
                        if fpoly::is_irreducible(&f, q) == Some(true) {
                            let p = PrimePoint::FpxMax { f };
                            if !avoid.contains(&p) {
                                out.push(p);
                                if out.len() == count {
                                    break;
                                }
                            }
                        }
                    }
                    degree += 1;
                }
            }
            (Universe::Supplement, _) => {
                let mut k = 0u64;
                while out.len() < count {
                    k += 1;
                    let p = PrimePoint::SuppMin { k };
                    if !avoid.contains(&p) {
                        out.push(p);
                    }
                }
            }
            _ => {}
        }
        out
    }

    /// Whether the prime `p` contains the element `r`.
    pub fn point_contains(&self, p: &PrimePoint, r: &RingElement) -> Result<bool> {
        self.validate(p)?;
        match (&self.ring, p) {
            (RingExpr::SymbolicSupplement(_), _) => {
                let RingElement::MPoly(m) = self.ring.normalize(r)? else { unreachable!() };
                Ok(match p {
                    PrimePoint::SuppTop => m.constant_term().is_zero(),
                    // every surviving monomial is a constant or a pure power
                    PrimePoint::SuppMin { k } => m.terms().all(|(e, _)| {
                        let s = monomial::support(e);
                        !s.is_empty() && s.iter().any(|&v| u64::from(v) != *k)
                    }),
                    _ => unreachable!(),
                })
            }
            _ => self.ring.ideal_member(&prime_ideal(p, &self.ring)?, r),
        }
    }

    /// `V(r)`, the primes containing `r`.
    pub fn v_locus(&self, r: &RingElement) -> Result<SpecSubset> {
        let r = self.ring.normalize(r)?;
        match (&self.universe, &self.ring, &r) {
            (Universe::Finite(all), _, _) => {
                let mut out = BTreeSet::new();
                for p in all {
                    if self.point_contains(p, &r)? {
                        out.insert(p.clone());
                    }
                }
                Ok(SpecSubset::explicit(out))
            }
            (Universe::Dedekind(_), RingExpr::Integers, RingElement::Int(v)) => {
                if v.is_zero() {
                    return Ok(SpecSubset::Whole);
                }
                let n: BigUint = v.abs().to_biguint().expect("absolute value");
                if n.is_one() {
                    return Ok(SpecSubset::Empty);
                }
                let primes = factor::factor_biguint(&n)?;
                Ok(SpecSubset::explicit(primes.into_keys().map(|p| PrimePoint::ZMax { p })))
            }
            (Universe::Dedekind(_), RingExpr::FpPoly(q), RingElement::Poly(c)) => {
                if c.is_empty() {
                    return Ok(SpecSubset::Whole);
                }
                if c.len() == 1 {
                    return Ok(SpecSubset::Empty);
                }
                let factors = fpoly::irreducible_factors(c, *q).ok_or_else(|| {
                    Error::FactorizationLimit(format!("factoring degree {} polynomials", c.len() - 1))
                })?;
                Ok(SpecSubset::explicit(factors.into_iter().map(|f| PrimePoint::FpxMax { f })))
            }
            (Universe::Supplement, _, RingElement::MPoly(m)) => {
                if m.is_zero() {
                    return Ok(SpecSubset::Whole);
                }
                if !m.constant_term().is_zero() {
                    return Ok(SpecSubset::Empty);
                }
                // the remaining terms are pure powers; r lies in P_k unless
                // a power of x_k occurs
                let support: BTreeSet<u64> =
                    m.terms().flat_map(|(e, _)| monomial::support(e)).map(u64::from).collect();
                Ok(SpecSubset::CofiniteMin { excluded: support, with_top: true })
            }
            _ => Err(Error::KindMismatch(format!("{r} in {}", self.ring))),
        }
    }

    /// `D(r)`, the primes not containing `r`.
    pub fn d_locus(&self, r: &RingElement) -> Result<SpecSubset> {
        self.complement(&self.v_locus(r)?)
    }
}

pub fn v_locus(r: &RingElement, ring: &RingExpr) -> Result<SpecSubset> {
    Space::new(ring)?.v_locus(r)
}

pub fn d_locus(r: &RingElement, ring: &RingExpr) -> Result<SpecSubset> {
    Space::new(ring)?.d_locus(r)
}
