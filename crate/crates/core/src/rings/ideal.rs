//! Principal and monomial ideals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::element::RingElement;
use super::{fpoly, monomial, Monomial, RingExpr};
use crate::error::{Error, Result};

/// An ideal of one of the supported rings.
///
/// Monomial ideals of a quotient are given by generators in the ambient
/// polynomial ring; a tuple is a product of ideals of the factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IdealRepr {
    Principal { generator: RingElement },
    Monomial { gens: Vec<Monomial> },
    Tuple { items: Vec<IdealRepr> },
}

fn mismatch(i: &IdealRepr, r: &RingExpr) -> Error {
    Error::KindMismatch(format!("ideal {i} does not belong to {r}"))
}

impl IdealRepr {
    /// The ideal generated by `r`, with its generator in canonical form:
    /// nonnegative over `Z`, monic over `F_p[x]`, a divisor of `n` over `Z/n`.
    pub fn principal(r: &RingElement, ring: &RingExpr) -> Result<Self> {
        let r = ring.normalize(r)?;
        let generator = match (ring, &r) {
            (RingExpr::Integers, RingElement::Int(v)) => RingElement::Int(v.abs()),
            (RingExpr::ZMod { n, .. }, RingElement::Mod(v)) => RingElement::Mod(v.gcd(n) % n),
            (RingExpr::PrimeField(_), RingElement::Mod(v)) => RingElement::Mod(u64::from(*v != 0)),
            (RingExpr::FpPoly(p), RingElement::Poly(c)) => RingElement::Poly(fpoly::monic(c, *p)),
            (RingExpr::MonomialQuotient(_) | RingExpr::LocalizedAtIrrelevant(_), RingElement::MPoly(m))
                if m.len() <= 1 =>
            {
                // a monomial times a unit coefficient
                return Ok(IdealRepr::monomial(m.terms().map(|(e, _)| e.clone())));
            }
            _ => {
                return Err(Error::Unsupported(format!("principal ideal of {r} in {ring}")));
            }
        };
        Ok(IdealRepr::Principal { generator })
    }

    /// Monomial ideal with a minimal generating set; exponent vectors are
    /// stripped of trailing zeros so that the form does not depend on padding.
    pub fn monomial(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let trimmed = gens.into_iter().map(|mut g| {
            while g.last() == Some(&0) {
                g.pop();
            }
            g
        });
        IdealRepr::Monomial { gens: monomial::minimalize(trimmed) }
    }

    pub fn is_zero_ideal(&self) -> bool {
        match self {
            IdealRepr::Principal { generator } => match generator {
                RingElement::Int(v) => v.is_zero(),
                RingElement::Mod(v) => *v == 0,
                RingElement::Poly(c) => c.is_empty(),
                _ => false,
            },
            IdealRepr::Monomial { gens } => gens.is_empty(),
            IdealRepr::Tuple { items } => items.iter().all(IdealRepr::is_zero_ideal),
        }
    }
}

impl fmt::Display for IdealRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealRepr::Principal { generator } => write!(f, "({generator})"),
            IdealRepr::Monomial { gens } => {
                write!(f, "(")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    let s = monomial::support(g);
                    if s.is_empty() {
                        write!(f, "1")?;
                    }
                    for (j, (k, e)) in g.iter().enumerate().filter(|(_, &e)| e > 0).enumerate() {
                        if j > 0 {
                            write!(f, "*")?;
                        }
                        if *e == 1 {
                            write!(f, "x{}", k + 1)?;
                        } else {
                            write!(f, "x{}^{e}", k + 1)?;
                        }
                    }
                }
                write!(f, ")")
            }
            IdealRepr::Tuple { items } => {
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl RingExpr {
    pub fn ideal_member(&self, ideal: &IdealRepr, r: &RingElement) -> Result<bool> {
        let r = self.normalize(r)?;
        match (self, ideal, &r) {
            (RingExpr::Integers, IdealRepr::Principal { generator: RingElement::Int(g) }, RingElement::Int(v)) => {
                Ok(if g.is_zero() { v.is_zero() } else { (v % g).is_zero() })
            }
            (
                RingExpr::ZMod { n, .. } | RingExpr::PrimeField(n),
                IdealRepr::Principal { generator: RingElement::Mod(g) },
                RingElement::Mod(v),
            ) => Ok(v % g.gcd(n) == 0),
            (RingExpr::Rationals, IdealRepr::Principal { generator: RingElement::Rat(g) }, RingElement::Rat(v)) => {
                Ok(!g.is_zero() || v.is_zero())
            }
            (RingExpr::FpPoly(p), IdealRepr::Principal { generator: RingElement::Poly(g) }, RingElement::Poly(c)) => {
                Ok(if g.is_empty() { c.is_empty() } else { fpoly::rem(c, g, *p).is_empty() })
            }
            (
                RingExpr::MonomialQuotient(_) | RingExpr::LocalizedAtIrrelevant(_),
                IdealRepr::Monomial { gens },
                RingElement::MPoly(m),
            ) => Ok(m.terms().all(|(e, _)| monomial::in_ideal(e, gens))),
            (RingExpr::Product(f), IdealRepr::Tuple { items }, RingElement::Tuple(xs)) if items.len() == f.len() => {
                for ((ring, i), x) in f.iter().zip(items).zip(xs) {
                    if !ring.ideal_member(i, x)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Err(mismatch(ideal, self)),
        }
    }

    /// `J` is contained in `I`, tested on the generators of `J`.
    pub fn ideal_contains(&self, i: &IdealRepr, j: &IdealRepr) -> Result<bool> {
        match (self, j) {
            (_, IdealRepr::Principal { generator }) => self.ideal_member(i, generator),
            (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), IdealRepr::Monomial { gens }) => {
                let IdealRepr::Monomial { gens: big } = i else {
                    return Err(mismatch(i, self));
                };
                // generators of J that vanish in the quotient impose nothing
                Ok(gens.iter().all(|g| monomial::in_ideal(g, m.gens()) || monomial::in_ideal(g, big)))
            }
            (RingExpr::Product(f), IdealRepr::Tuple { items }) => {
                let IdealRepr::Tuple { items: big } = i else {
                    return Err(mismatch(i, self));
                };
                if big.len() != f.len() || items.len() != f.len() {
                    return Err(mismatch(j, self));
                }
                for ((ring, a), b) in f.iter().zip(big).zip(items) {
                    if !ring.ideal_contains(a, b)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Err(mismatch(j, self)),
        }
    }

    pub fn ideal_intersect(&self, i: &IdealRepr, j: &IdealRepr) -> Result<IdealRepr> {
        match (self, i, j) {
            (_, IdealRepr::Monomial { gens: a }, IdealRepr::Monomial { gens: b })
                if matches!(self, RingExpr::MonomialQuotient(_) | RingExpr::LocalizedAtIrrelevant(_)) =>
            {
                Ok(IdealRepr::monomial(a.iter().flat_map(|u| b.iter().map(move |v| monomial::lcm(u, v)))))
            }
            (
                RingExpr::Integers,
                IdealRepr::Principal { generator: RingElement::Int(a) },
                IdealRepr::Principal { generator: RingElement::Int(b) },
            ) => Ok(IdealRepr::Principal { generator: RingElement::Int(a.lcm(b)) }),
            (
                RingExpr::ZMod { n, .. },
                IdealRepr::Principal { generator: RingElement::Mod(a) },
                IdealRepr::Principal { generator: RingElement::Mod(b) },
            ) => {
                // (a) = (gcd(a, n)) in Z/n and (d) meet (e) is (lcm(d, e)) for divisors
                let l = a.gcd(n).lcm(&b.gcd(n));
                Ok(IdealRepr::Principal { generator: RingElement::Mod(l % n) })
            }
            (
                RingExpr::PrimeField(_),
                IdealRepr::Principal { generator: RingElement::Mod(a) },
                IdealRepr::Principal { generator: RingElement::Mod(b) },
            ) => Ok(IdealRepr::Principal { generator: RingElement::Mod(u64::from(*a != 0 && *b != 0)) }),
            (
                RingExpr::Rationals,
                IdealRepr::Principal { generator: RingElement::Rat(a) },
                IdealRepr::Principal { generator: RingElement::Rat(b) },
            ) => Ok(IdealRepr::Principal {
                generator: if a.is_zero() || b.is_zero() { self.zero()? } else { self.one()? },
            }),
            (
                RingExpr::FpPoly(p),
                IdealRepr::Principal { generator: RingElement::Poly(a) },
                IdealRepr::Principal { generator: RingElement::Poly(b) },
            ) => Ok(IdealRepr::Principal { generator: RingElement::Poly(fpoly::lcm(a, b, *p)) }),
            (RingExpr::Product(f), IdealRepr::Tuple { items: a }, IdealRepr::Tuple { items: b })
                if a.len() == f.len() && b.len() == f.len() =>
            {
                let items = f
                    .iter()
                    .zip(a.iter().zip(b))
                    .map(|(ring, (x, y))| ring.ideal_intersect(x, y))
                    .collect::<Result<_>>()?;
                Ok(IdealRepr::Tuple { items })
            }
            _ => Err(Error::KindMismatch(format!("cannot intersect {i} and {j} in {self}"))),
        }
    }

    /// The ideal of nilpotent elements.
    pub fn nilradical(&self) -> Result<IdealRepr> {
        match self {
            RingExpr::Integers => Ok(IdealRepr::Principal { generator: RingElement::Int(BigInt::zero()) }),
            RingExpr::ZMod { n, factors } => {
                let rad: u64 = factors.iter().map(|(p, _)| p).product();
                Ok(IdealRepr::Principal { generator: RingElement::Mod(rad % n) })
            }
            RingExpr::PrimeField(_) => Ok(IdealRepr::Principal { generator: RingElement::Mod(0) }),
            RingExpr::Rationals => Ok(IdealRepr::Principal { generator: self.zero()? }),
            RingExpr::FpPoly(_) => Ok(IdealRepr::Principal { generator: RingElement::Poly(Vec::new()) }),
            RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m) => {
                // intersection of the minimal primes, which is the square-free
                // ideal itself, hence zero in the quotient
                let mut acc: Option<IdealRepr> = None;
                for cover in m.minimal_covers() {
                    let prime = IdealRepr::monomial(cover.iter().map(|&v| monomial::variable(v, m.nvars())));
                    acc = Some(match acc {
                        None => prime,
                        Some(a) => self.ideal_intersect(&a, &prime)?,
                    });
                }
                let IdealRepr::Monomial { gens } = acc.unwrap_or(IdealRepr::Monomial { gens: Vec::new() }) else {
                    unreachable!()
                };
                Ok(IdealRepr::monomial(gens.into_iter().filter(|g| !monomial::in_ideal(g, m.gens()))))
            }
            _ => Err(Error::Unsupported(format!("nilradical of {self}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::CoefficientField;
    use crate::rings::MPoly;
    use num_rational::BigRational;
    use num_traits::One;

    fn mq(nvars: usize) -> RingExpr {
        RingExpr::monomial_quotient(CoefficientField::Prime(2), nvars, vec![]).unwrap()
    }

    fn mono(e: Vec<u32>) -> RingElement {
        RingElement::MPoly(MPoly::monomial(e, BigRational::one()))
    }

    #[test]
    fn field_intersections() {
        let f = RingExpr::prime_field(3).unwrap();
        let unit = IdealRepr::principal(&RingElement::Mod(2), &f).unwrap();
        let zero = IdealRepr::principal(&RingElement::Mod(0), &f).unwrap();
        assert_eq!(f.ideal_intersect(&unit, &unit).unwrap(), unit);
        assert_eq!(f.ideal_intersect(&unit, &zero).unwrap(), zero);
        let q = RingExpr::Rationals;
        let one = IdealRepr::Principal { generator: q.one().unwrap() };
        let nothing = IdealRepr::Principal { generator: q.zero().unwrap() };
        assert_eq!(q.ideal_intersect(&one, &nothing).unwrap(), nothing);
        assert!(q.ideal_contains(&one, &q.ideal_intersect(&one, &one).unwrap()).unwrap());
    }

    #[test]
    fn membership() {
        let z = RingExpr::Integers;
        let six = IdealRepr::principal(&RingElement::int(-6), &z).unwrap();
        assert_eq!(six, IdealRepr::Principal { generator: RingElement::int(6) });
        assert!(z.ideal_member(&six, &RingElement::int(12)).unwrap());
        let r = mq(2);
        let x2 = IdealRepr::monomial([vec![0, 1]]);
        let el = r.add(&mono(vec![1, 1]), &mono(vec![0, 1])).unwrap();
        assert!(r.ideal_member(&x2, &el).unwrap());
        assert!(!r.ideal_member(&IdealRepr::monomial([vec![1]]), &mono(vec![0, 1])).unwrap());
    }

    #[test]
    fn intersections() {
        let r = mq(3);
        let a = IdealRepr::monomial([vec![0, 1]]);
        let b = IdealRepr::monomial([vec![1]]);
        assert_eq!(r.ideal_intersect(&a, &b).unwrap(), IdealRepr::monomial([vec![1, 1]]));
        let c = IdealRepr::monomial([vec![1], vec![0, 1]]);
        let d = IdealRepr::monomial([vec![1], vec![0, 0, 1]]);
        assert_eq!(r.ideal_intersect(&c, &d).unwrap(), IdealRepr::monomial([vec![1], vec![0, 1, 1]]));
        let z = RingExpr::Integers;
        let p = |v| IdealRepr::Principal { generator: RingElement::int(v) };
        assert_eq!(z.ideal_intersect(&p(4), &p(6)).unwrap(), p(12));
    }

    #[test]
    fn intersection_membership_matches_both() {
        let r = mq(3);
        let c = IdealRepr::monomial([vec![1], vec![0, 1]]);
        let d = IdealRepr::monomial([vec![1], vec![0, 0, 1]]);
        let cd = r.ideal_intersect(&c, &d).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for e in 0..3 {
                    let m = mono(vec![a, b, e]);
                    let both = r.ideal_member(&c, &m).unwrap() && r.ideal_member(&d, &m).unwrap();
                    assert_eq!(r.ideal_member(&cd, &m).unwrap(), both, "{a} {b} {e}");
                }
            }
        }
    }

    #[test]
    fn nilradicals() {
        let r = RingExpr::zmod(12).unwrap();
        assert_eq!(r.nilradical().unwrap(), IdealRepr::Principal { generator: RingElement::Mod(6) });
        assert!(RingExpr::Integers.nilradical().unwrap().is_zero_ideal());
        let supp = RingExpr::monomial_quotient(
            CoefficientField::Prime(2),
            3,
            vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]],
        )
        .unwrap();
        assert!(supp.nilradical().unwrap().is_zero_ideal());
    }
}
