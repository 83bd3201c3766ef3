//! Canonical forms and ring operations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::element::{MPoly, RingElement};
use super::{fpoly, monomial, CoefficientField, MonomialRing, RingExpr};
use crate::error::{Error, Result};

fn mismatch(e: &RingElement, r: &RingExpr) -> Error {
    Error::KindMismatch(format!("{} element `{e}` does not belong to {r}", e.kind_name()))
}

fn no_arithmetic(r: &RingExpr) -> Error {
    Error::Unsupported(format!("{r} has no element arithmetic"))
}

/// Reduces a rational coefficient into the given field.
pub(crate) fn reduce_coeff(c: &BigRational, field: &CoefficientField) -> Result<BigRational> {
    match field {
        CoefficientField::Rational => Ok(c.clone()),
        CoefficientField::Prime(p) => {
            let pb = BigInt::from(*p);
            let num = c.numer().mod_floor(&pb).to_u64().unwrap();
            let den = c.denom().mod_floor(&pb).to_u64().unwrap();
            if den == 0 {
                return Err(Error::KindMismatch(format!("{c} has a denominator divisible by {p}")));
            }
            let v = fpoly::mulmod(num, fpoly::invmod(den, *p), *p);
            Ok(BigRational::from_integer(BigInt::from(v)))
        }
    }
}

fn trim_exps(e: &[u32]) -> Vec<u32> {
    let mut v = e.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn normalize_monomial_poly(p: &MPoly, ring: &MonomialRing) -> Result<MPoly> {
    let mut terms = Vec::with_capacity(p.len());
    for (e, c) in p.terms() {
        let t = trim_exps(e);
        if t.len() > ring.nvars() {
            return Err(Error::KindMismatch(format!(
                "monomial {e:?} uses more than {} variables",
                ring.nvars()
            )));
        }
        terms.push((monomial::pad(&t, ring.nvars()), c.clone()));
    }
    let summed = MPoly::from_terms(terms);
    let mut out = Vec::with_capacity(summed.len());
    for (e, c) in summed.terms() {
        if monomial::in_ideal(e, ring.gens()) {
            continue;
        }
        out.push((e.clone(), reduce_coeff(c, ring.field())?));
    }
    Ok(MPoly::from_terms(out))
}

// In the supplement every product of two distinct variables vanishes.
fn normalize_supplement_poly(p: &MPoly, field: &CoefficientField) -> Result<MPoly> {
    let summed = MPoly::from_terms(p.terms().map(|(e, c)| (trim_exps(e), c.clone())));
    let mut out = Vec::with_capacity(summed.len());
    for (e, c) in summed.terms() {
        if e.iter().filter(|&&x| x > 0).count() >= 2 {
            continue;
        }
        out.push((e.clone(), reduce_coeff(c, field)?));
    }
    Ok(MPoly::from_terms(out))
}

fn mpoly_mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut terms = Vec::with_capacity(a.len() * b.len());
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let n = ea.len().max(eb.len());
            let e: Vec<u32> = (0..n)
                .map(|i| ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0))
                .collect();
            terms.push((e, ca * cb));
        }
    }
    MPoly::from_terms(terms)
}

fn mpoly_add(a: &MPoly, b: &MPoly) -> MPoly {
    MPoly::from_terms(a.terms().chain(b.terms()).map(|(e, c)| (e.clone(), c.clone())))
}

fn mpoly_neg(a: &MPoly) -> MPoly {
    MPoly::from_terms(a.terms().map(|(e, c)| (e.clone(), -c.clone())))
}

impl RingExpr {
    /// Canonical form of `e` as an element of `self`.
    pub fn normalize(&self, e: &RingElement) -> Result<RingElement> {
        match (self, e) {
            (RingExpr::Integers, RingElement::Int(_)) => Ok(e.clone()),
            (RingExpr::ZMod { n, .. }, RingElement::Mod(v)) => Ok(RingElement::Mod(v % n)),
            (RingExpr::PrimeField(p), RingElement::Mod(v)) => Ok(RingElement::Mod(v % p)),
            (RingExpr::FpPoly(p), RingElement::Poly(c)) => Ok(RingElement::Poly(fpoly::reduce(c, *p))),
            (RingExpr::Rationals, RingElement::Rat(_)) => Ok(e.clone()),
            (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), RingElement::MPoly(p)) => {
                Ok(RingElement::MPoly(normalize_monomial_poly(p, m)?))
            }
            (RingExpr::SymbolicSupplement(k), RingElement::MPoly(p)) => {
                Ok(RingElement::MPoly(normalize_supplement_poly(p, k)?))
            }
            (RingExpr::Product(factors), RingElement::Tuple(items)) => {
                if factors.len() != items.len() {
                    return Err(mismatch(e, self));
                }
                Ok(RingElement::Tuple(
                    factors.iter().zip(items).map(|(r, x)| r.normalize(x)).collect::<Result<_>>()?,
                ))
            }
            (RingExpr::LocalizedPid { .. } | RingExpr::ResidueField(_), _) => Err(no_arithmetic(self)),
            _ => Err(mismatch(e, self)),
        }
    }

    pub fn zero(&self) -> Result<RingElement> {
        Ok(match self {
            RingExpr::Integers => RingElement::Int(BigInt::zero()),
            RingExpr::ZMod { .. } | RingExpr::PrimeField(_) => RingElement::Mod(0),
            RingExpr::FpPoly(_) => RingElement::Poly(Vec::new()),
            RingExpr::Rationals => RingElement::Rat(BigRational::zero()),
            RingExpr::MonomialQuotient(_) | RingExpr::LocalizedAtIrrelevant(_) | RingExpr::SymbolicSupplement(_) => {
                RingElement::MPoly(MPoly::zero())
            }
            RingExpr::Product(f) => RingElement::Tuple(f.iter().map(|r| r.zero()).collect::<Result<_>>()?),
            RingExpr::LocalizedPid { .. } | RingExpr::ResidueField(_) => return Err(no_arithmetic(self)),
        })
    }

    pub fn one(&self) -> Result<RingElement> {
        let e = match self {
            RingExpr::Integers => RingElement::Int(BigInt::one()),
            RingExpr::ZMod { .. } | RingExpr::PrimeField(_) => RingElement::Mod(1),
            RingExpr::FpPoly(_) => RingElement::Poly(vec![1]),
            RingExpr::Rationals => RingElement::Rat(BigRational::one()),
            RingExpr::MonomialQuotient(_) | RingExpr::LocalizedAtIrrelevant(_) | RingExpr::SymbolicSupplement(_) => {
                RingElement::MPoly(MPoly::constant(BigRational::one()))
            }
            RingExpr::Product(f) => RingElement::Tuple(f.iter().map(|r| r.one()).collect::<Result<_>>()?),
            RingExpr::LocalizedPid { .. } | RingExpr::ResidueField(_) => return Err(no_arithmetic(self)),
        };
        self.normalize(&e)
    }

    /// The image of an integer under `Z -> self`.
    pub fn from_integer(&self, v: &BigInt) -> Result<RingElement> {
        let e = match self {
            RingExpr::Integers => RingElement::Int(v.clone()),
            RingExpr::ZMod { n, .. } => RingElement::Mod(v.mod_floor(&BigInt::from(*n)).to_u64().unwrap()),
            RingExpr::PrimeField(p) => RingElement::Mod(v.mod_floor(&BigInt::from(*p)).to_u64().unwrap()),
            RingExpr::FpPoly(p) => RingElement::Poly(vec![v.mod_floor(&BigInt::from(*p)).to_u64().unwrap()]),
            RingExpr::Rationals => RingElement::Rat(BigRational::from_integer(v.clone())),
            RingExpr::MonomialQuotient(_) | RingExpr::LocalizedAtIrrelevant(_) | RingExpr::SymbolicSupplement(_) => {
                RingElement::MPoly(MPoly::constant(BigRational::from_integer(v.clone())))
            }
            RingExpr::Product(f) => {
                RingElement::Tuple(f.iter().map(|r| r.from_integer(v)).collect::<Result<_>>()?)
            }
            RingExpr::LocalizedPid { .. } | RingExpr::ResidueField(_) => return Err(no_arithmetic(self)),
        };
        self.normalize(&e)
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        let (a, b) = (self.normalize(a)?, self.normalize(b)?);
        let sum = match (self, &a, &b) {
            (RingExpr::Integers, RingElement::Int(x), RingElement::Int(y)) => RingElement::Int(x + y),
            (RingExpr::ZMod { n: m, .. } | RingExpr::PrimeField(m), RingElement::Mod(x), RingElement::Mod(y)) => {
                RingElement::Mod(((*x as u128 + *y as u128) % *m as u128) as u64)
            }
            (RingExpr::FpPoly(p), RingElement::Poly(x), RingElement::Poly(y)) => RingElement::Poly(fpoly::add(x, y, *p)),
            (RingExpr::Rationals, RingElement::Rat(x), RingElement::Rat(y)) => RingElement::Rat(x + y),
            (_, RingElement::MPoly(x), RingElement::MPoly(y)) => RingElement::MPoly(mpoly_add(x, y)),
            (RingExpr::Product(f), RingElement::Tuple(x), RingElement::Tuple(y)) => RingElement::Tuple(
                f.iter().zip(x.iter().zip(y)).map(|(r, (u, v))| r.add(u, v)).collect::<Result<_>>()?,
            ),
            _ => return Err(mismatch(&a, self)),
        };
        self.normalize(&sum)
    }

    pub fn neg(&self, a: &RingElement) -> Result<RingElement> {
        let a = self.normalize(a)?;
        let out = match (self, &a) {
            (RingExpr::Integers, RingElement::Int(x)) => RingElement::Int(-x),
            (RingExpr::ZMod { n: m, .. } | RingExpr::PrimeField(m), RingElement::Mod(x)) => {
                RingElement::Mod(if *x == 0 { 0 } else { m - x })
            }
            (RingExpr::FpPoly(p), RingElement::Poly(x)) => RingElement::Poly(fpoly::neg(x, *p)),
            (RingExpr::Rationals, RingElement::Rat(x)) => RingElement::Rat(-x),
            (_, RingElement::MPoly(x)) => RingElement::MPoly(mpoly_neg(x)),
            (RingExpr::Product(f), RingElement::Tuple(x)) => {
                RingElement::Tuple(f.iter().zip(x).map(|(r, u)| r.neg(u)).collect::<Result<_>>()?)
            }
            _ => return Err(mismatch(&a, self)),
        };
        self.normalize(&out)
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        let (a, b) = (self.normalize(a)?, self.normalize(b)?);
        let prod = match (self, &a, &b) {
            (RingExpr::Integers, RingElement::Int(x), RingElement::Int(y)) => RingElement::Int(x * y),
            (RingExpr::ZMod { n: m, .. } | RingExpr::PrimeField(m), RingElement::Mod(x), RingElement::Mod(y)) => {
                RingElement::Mod(fpoly::mulmod(*x, *y, *m))
            }
            (RingExpr::FpPoly(p), RingElement::Poly(x), RingElement::Poly(y)) => RingElement::Poly(fpoly::mul(x, y, *p)),
            (RingExpr::Rationals, RingElement::Rat(x), RingElement::Rat(y)) => RingElement::Rat(x * y),
            (_, RingElement::MPoly(x), RingElement::MPoly(y)) => RingElement::MPoly(mpoly_mul(x, y)),
            (RingExpr::Product(f), RingElement::Tuple(x), RingElement::Tuple(y)) => RingElement::Tuple(
                f.iter().zip(x.iter().zip(y)).map(|(r, (u, v))| r.mul(u, v)).collect::<Result<_>>()?,
            ),
            _ => return Err(mismatch(&a, self)),
        };
        self.normalize(&prod)
    }

    pub fn pow(&self, a: &RingElement, mut exp: u64) -> Result<RingElement> {
        let mut base = self.normalize(a)?;
        let mut acc = self.one()?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn is_zero_element(&self, a: &RingElement) -> Result<bool> {
        Ok(self.normalize(a)? == self.zero()?)
    }

    /// Embeds an element of factor `slot` with zeros elsewhere.
    pub fn embed(&self, slot: usize, x: &RingElement) -> Result<RingElement> {
        let factors = self
            .factors()
            .ok_or_else(|| Error::KindMismatch(format!("{self} is not a product")))?;
        if slot >= factors.len() {
            return Err(Error::BadSlot { slot, len: factors.len() });
        }
        let items = factors
            .iter()
            .enumerate()
            .map(|(i, r)| if i == slot { r.normalize(x) } else { r.zero() })
            .collect::<Result<_>>()?;
        Ok(RingElement::Tuple(items))
    }
}
