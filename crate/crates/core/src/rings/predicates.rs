//! Unit, nilpotent and regular-element tests.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::element::{MPoly, RingElement};
use super::{monomial, MonomialRing, RingExpr};
use crate::error::{Error, Result};

// A monomial lies in the prime (x_i : i in C) iff its support meets C.
fn monomial_in_every_minimal_prime(e: &[u32], ring: &MonomialRing) -> bool {
    let s = monomial::support(e);
    ring.minimal_covers().iter().all(|c| !c.is_disjoint(&s))
}

fn nonconstant_terms(p: &MPoly) -> impl Iterator<Item = &Vec<u32>> {
    p.terms().map(|(e, _)| e).filter(|e| e.iter().any(|&x| x > 0))
}

impl RingExpr {
    pub fn is_unit(&self, r: &RingElement) -> Result<bool> {
        let r = self.normalize(r)?;
        Ok(match (self, &r) {
            (RingExpr::Integers, RingElement::Int(v)) => v.abs().is_one(),
            (RingExpr::ZMod { n, .. }, RingElement::Mod(v)) => v.gcd(n) == 1,
            (RingExpr::PrimeField(_), RingElement::Mod(v)) => *v != 0,
            (RingExpr::Rationals, RingElement::Rat(v)) => !v.is_zero(),
            (RingExpr::FpPoly(_), RingElement::Poly(c)) => c.len() == 1,
            // r = c + z with c != 0 and z in every minimal prime; exact for
            // square-free quotients since they are reduced
            (RingExpr::MonomialQuotient(m), RingElement::MPoly(p)) => {
                !p.constant_term().is_zero()
                    && nonconstant_terms(p).all(|e| monomial_in_every_minimal_prime(e, m))
            }
            (RingExpr::LocalizedAtIrrelevant(_) | RingExpr::SymbolicSupplement(_), RingElement::MPoly(p)) => {
                !p.constant_term().is_zero()
            }
            (RingExpr::Product(f), RingElement::Tuple(items)) => {
                let mut all = true;
                for (ring, x) in f.iter().zip(items) {
                    all &= ring.is_unit(x)?;
                }
                all
            }
            _ => return Err(Error::KindMismatch(format!("{r} in {self}"))),
        })
    }

    pub fn is_nilpotent(&self, r: &RingElement) -> Result<bool> {
        let r = self.normalize(r)?;
        Ok(match (self, &r) {
            (RingExpr::Integers, RingElement::Int(v)) => v.is_zero(),
            (RingExpr::ZMod { factors, .. }, RingElement::Mod(v)) => factors.iter().all(|(p, _)| v % p == 0),
            (RingExpr::PrimeField(_), RingElement::Mod(v)) => *v == 0,
            (RingExpr::Rationals, RingElement::Rat(v)) => v.is_zero(),
            (RingExpr::FpPoly(_), RingElement::Poly(c)) => c.is_empty(),
            (RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m), RingElement::MPoly(p)) => {
                p.terms().all(|(e, _)| monomial_in_every_minimal_prime(e, m))
            }
            // r lies in every P_k iff it has no constant term and no pure power
            (RingExpr::SymbolicSupplement(_), RingElement::MPoly(p)) => p.is_zero(),
            (RingExpr::Product(f), RingElement::Tuple(items)) => {
                let mut all = true;
                for (ring, x) in f.iter().zip(items) {
                    all &= ring.is_nilpotent(x)?;
                }
                all
            }
            _ => return Err(Error::KindMismatch(format!("{r} in {self}"))),
        })
    }

    /// Not a zero divisor.
    pub fn is_regular(&self, r: &RingElement) -> Result<bool> {
        match self {
            RingExpr::MonomialQuotient(_)
            | RingExpr::LocalizedAtIrrelevant(_)
            | RingExpr::SymbolicSupplement(_)
            | RingExpr::LocalizedPid { .. }
            | RingExpr::ResidueField(_) => {
                return Err(Error::Unsupported(format!("regular elements of {self}")))
            }
            _ => {}
        }
        let r = self.normalize(r)?;
        Ok(match (self, &r) {
            (RingExpr::Integers, RingElement::Int(v)) => !v.is_zero(),
            // p^e || n and p does not divide r, for every p; same as gcd = 1
            (RingExpr::ZMod { factors, .. }, RingElement::Mod(v)) => factors.iter().all(|(p, _)| v % p != 0),
            (RingExpr::PrimeField(_), RingElement::Mod(v)) => *v != 0,
            (RingExpr::Rationals, RingElement::Rat(v)) => !v.is_zero(),
            (RingExpr::FpPoly(_), RingElement::Poly(c)) => !c.is_empty(),
            (RingExpr::Product(f), RingElement::Tuple(items)) => {
                let mut all = true;
                for (ring, x) in f.iter().zip(items) {
                    all &= ring.is_regular(x)?;
                }
                all
            }
            _ => return Err(Error::KindMismatch(format!("{r} in {self}"))),
        })
    }
}
