//! Ring descriptions, exact element arithmetic and ideal arithmetic.

mod arith;
mod element;
pub mod factor;
pub mod fpoly;
mod ideal;
pub mod monomial;
mod predicates;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use element::{ElementJson, MPoly, RingElement, TermJson};
pub use ideal::IdealRepr;
pub use monomial::{Monomial, VarSet};

use crate::error::{Error, Result};
use crate::spectrum::PrimePoint;

/// Coefficient field of a monomial quotient or of the symbolic supplement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientField {
    Prime(u64),
    Rational,
}

impl CoefficientField {
    pub fn prime(p: u64) -> Result<Self> {
        if !factor::is_prime_u64(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(CoefficientField::Prime(p))
    }

    pub fn as_ring(&self) -> RingExpr {
        match self {
            CoefficientField::Prime(p) => RingExpr::PrimeField(*p),
            CoefficientField::Rational => RingExpr::Rationals,
        }
    }

    /// Parses the short names used on the command line: `F2`, `F3`, `Fp7`, `Q`.
    pub fn parse_short(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(CoefficientField::Rational);
        }
        let digits = t.trim_start_matches(['F', 'f']).trim_start_matches(['p', 'P', '_']);
        digits
            .parse::<u64>()
            .map_err(|_| Error::InvalidRing(format!("unknown field `{s}`")))
            .and_then(Self::prime)
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Prime(p) => write!(f, "F_{p}"),
            CoefficientField::Rational => write!(f, "Q"),
        }
    }
}

/// `K[x_1..x_n]/I` with `I` generated by square-free monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialRing {
    field: CoefficientField,
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialRing {
    pub fn new(field: CoefficientField, nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidRing("monomial quotient needs at least one variable".into()));
        }
        let mut padded = Vec::with_capacity(gens.len());
        for g in gens {
            if g.len() > nvars && g[nvars..].iter().any(|&e| e > 0) {
                return Err(Error::InvalidRing(format!("generator {g:?} has more than {nvars} variables")));
            }
            let mut g = g;
            g.resize(nvars, 0);
            if !monomial::is_squarefree(&g) {
                return Err(Error::InvalidRing(format!("generator {g:?} is not square-free")));
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::InvalidRing("the unit ideal gives the zero ring".into()));
            }
            padded.push(g);
        }
        Ok(MonomialRing { field, nvars, gens: monomial::minimalize(padded) })
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal primes as variable sets (minimal vertex covers).
    pub fn minimal_covers(&self) -> Vec<VarSet> {
        monomial::minimal_vertex_covers(&self.gens)
    }

    /// Krull dimension `n - (smallest minimal cover)`.
    pub fn dimension(&self) -> usize {
        let smallest = self.minimal_covers().iter().map(|c| c.len()).min().unwrap_or(0);
        self.nvars - smallest
    }

    pub fn all_variables(&self) -> VarSet {
        (1..=self.nvars as u32).collect()
    }
}

/// Fields that only appear as residue fields or localizations in the
/// targets of canonical maps. They carry no element arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum FieldDescriptor {
    /// `F_p[x]/(f)` for a monic irreducible `f`.
    GaloisField { p: u64, modulus: Vec<u64> },
    /// `K(x_var)`, the fraction field of a polynomial ring in one variable.
    RationalFunctions { field: CoefficientField, var: u64 },
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::GaloisField { p, modulus } => {
                write!(f, "F_{p}^{}", modulus.len().saturating_sub(1))
            }
            FieldDescriptor::RationalFunctions { field, var } => write!(f, "{field}(x{var})"),
        }
    }
}

/// A concrete commutative ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RingJson", try_from = "RingJson")]
pub enum RingExpr {
    Integers,
    /// `Z/n` with the factorization of `n` cached, primes ascending.
    ZMod { n: u64, factors: Vec<(u64, u32)> },
    PrimeField(u64),
    FpPoly(u64),
    Rationals,
    MonomialQuotient(MonomialRing),
    /// Localization of a monomial quotient at `(x_1, ..., x_n)`.
    LocalizedAtIrrelevant(MonomialRing),
    Product(Vec<RingExpr>),
    /// `(K[x_i : i >= 1]/(x_i x_k : i != k))` localized at `(x_i)`, handled
    /// purely through rules on its spectrum.
    SymbolicSupplement(CoefficientField),
    /// `Z_(p)` or `F_p[x]_(f)`; only arises as a factor of a map target.
    LocalizedPid { base: Box<RingExpr>, at: PrimePoint },
    ResidueField(FieldDescriptor),
}

impl RingExpr {
    pub fn zmod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n} needs n >= 2")));
        }
        Ok(RingExpr::ZMod { n, factors: factor::factor_u64(n).into_iter().collect() })
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        CoefficientField::prime(p).map(|_| RingExpr::PrimeField(p))
    }

    pub fn fp_poly(p: u64) -> Result<Self> {
        CoefficientField::prime(p).map(|_| RingExpr::FpPoly(p))
    }

    pub fn monomial_quotient(field: CoefficientField, nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        MonomialRing::new(field, nvars, gens).map(RingExpr::MonomialQuotient)
    }

    /// Localization at the irrelevant ideal; the quotient must have Krull
    /// dimension at most one so that every prime is monomial.
    pub fn localized(inner: MonomialRing) -> Result<Self> {
        let dim = inner.dimension();
        if dim > 1 {
            return Err(Error::InvalidRing(format!(
                "localization needs a quotient of dimension <= 1, got {dim}"
            )));
        }
        Ok(RingExpr::LocalizedAtIrrelevant(inner))
    }

    /// Finite product; nested products are flattened.
    pub fn product(factors: Vec<RingExpr>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidRing("empty product".into()));
        }
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                RingExpr::Product(inner) => flat.extend(inner),
                RingExpr::SymbolicSupplement(_) => {
                    return Err(Error::InvalidRing("the symbolic supplement cannot be a product factor".into()))
                }
                other => flat.push(other),
            }
        }
        Ok(RingExpr::Product(flat))
    }

    /// The supplement ring with `n` variables, localized.
    pub fn supplement(field: CoefficientField, n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for i in 0..n {
            for k in i + 1..n {
                let mut g = vec![0; n];
                g[i] = 1;
                g[k] = 1;
                gens.push(g);
            }
        }
        RingExpr::localized(MonomialRing::new(field, n, gens)?)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            RingExpr::ZMod { n, .. } => Some(*n),
            _ => None,
        }
    }

    pub fn monomial_ring(&self) -> Option<&MonomialRing> {
        match self {
            RingExpr::MonomialQuotient(m) | RingExpr::LocalizedAtIrrelevant(m) => Some(m),
            _ => None,
        }
    }

    pub fn factors(&self) -> Option<&[RingExpr]> {
        match self {
            RingExpr::Product(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingExpr::PrimeField(_) | RingExpr::Rationals | RingExpr::ResidueField(_))
            || matches!(self, RingExpr::ZMod { factors, .. } if factors.len() == 1 && factors[0].1 == 1)
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            RingExpr::Integers => "Z",
            RingExpr::ZMod { .. } => "Zmod",
            RingExpr::PrimeField(_) => "Fp",
            RingExpr::FpPoly(_) => "FpPoly",
            RingExpr::Rationals => "Q",
            RingExpr::MonomialQuotient(_) => "MonomialQuotient",
            RingExpr::LocalizedAtIrrelevant(_) => "LocalizedAtIrrelevant",
            RingExpr::Product(_) => "Product",
            RingExpr::SymbolicSupplement(_) => "SymbolicSupplement",
            RingExpr::LocalizedPid { .. } => "LocalizedPid",
            RingExpr::ResidueField(_) => "ResidueField",
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Integers => write!(f, "Z"),
            RingExpr::ZMod { n, .. } => write!(f, "Z/{n}"),
            RingExpr::PrimeField(p) => write!(f, "F_{p}"),
            RingExpr::FpPoly(p) => write!(f, "F_{p}[x]"),
            RingExpr::Rationals => write!(f, "Q"),
            RingExpr::MonomialQuotient(m) => write_monomial_ring(f, m),
            RingExpr::LocalizedAtIrrelevant(m) => {
                write!(f, "(")?;
                write_monomial_ring(f, m)?;
                write!(f, ")_m")
            }
            RingExpr::Product(factors) => {
                for (i, r) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{r}")?;
                }
                Ok(())
            }
            RingExpr::SymbolicSupplement(k) => write!(f, "Supp({k})"),
            RingExpr::LocalizedPid { base, at } => write!(f, "({base})_{at}"),
            RingExpr::ResidueField(d) => write!(f, "{d}"),
        }
    }
}

fn write_monomial_ring(f: &mut fmt::Formatter<'_>, m: &MonomialRing) -> fmt::Result {
    write!(f, "{}[x1..x{}]/(", m.field, m.nvars)?;
    for (i, g) in m.gens.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        for v in monomial::support(g) {
            write!(f, "x{v}")?;
        }
    }
    write!(f, ")")
}

/// Wire form of [`RingExpr`].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingJson {
    Z,
    Zmod { n: u64 },
    Fp { p: u64 },
    FpPoly { p: u64 },
    Q,
    MonomialQuotient { field: Box<RingJson>, nvars: usize, gens: Vec<Vec<u32>> },
    LocalizedAtIrrelevant { inner: Box<RingJson> },
    Product { factors: Vec<RingJson> },
    SymbolicSupplement { field: Box<RingJson> },
    LocalizedPid { base: Box<RingJson>, at: PrimePoint },
    ResidueField { field: FieldDescriptor },
}

fn field_from_json(j: RingJson) -> Result<CoefficientField> {
    match j {
        RingJson::Fp { p } => CoefficientField::prime(p),
        RingJson::Q => Ok(CoefficientField::Rational),
        other => Err(Error::InvalidRing(format!("{other:?} is not a coefficient field"))),
    }
}

fn field_to_json(k: &CoefficientField) -> Box<RingJson> {
    Box::new(match k {
        CoefficientField::Prime(p) => RingJson::Fp { p: *p },
        CoefficientField::Rational => RingJson::Q,
    })
}

impl TryFrom<RingJson> for RingExpr {
    type Error = Error;

    fn try_from(j: RingJson) -> Result<Self> {
        match j {
            RingJson::Z => Ok(RingExpr::Integers),
            RingJson::Zmod { n } => RingExpr::zmod(n),
            RingJson::Fp { p } => RingExpr::prime_field(p),
            RingJson::FpPoly { p } => RingExpr::fp_poly(p),
            RingJson::Q => Ok(RingExpr::Rationals),
            RingJson::MonomialQuotient { field, nvars, gens } => {
                RingExpr::monomial_quotient(field_from_json(*field)?, nvars, gens)
            }
            RingJson::LocalizedAtIrrelevant { inner } => match RingExpr::try_from(*inner)? {
                RingExpr::MonomialQuotient(m) => RingExpr::localized(m),
                other => Err(Error::InvalidRing(format!("cannot localize {other} at the irrelevant ideal"))),
            },
            RingJson::Product { factors } => {
                let rings = factors.into_iter().map(RingExpr::try_from).collect::<Result<Vec<_>>>()?;
                RingExpr::product(rings)
            }
            RingJson::SymbolicSupplement { field } => Ok(RingExpr::SymbolicSupplement(field_from_json(*field)?)),
            RingJson::LocalizedPid { base, at } => {
                let base = RingExpr::try_from(*base)?;
                let ok = matches!(
                    (&base, &at),
                    (RingExpr::Integers, PrimePoint::ZMax { .. }) | (RingExpr::FpPoly(_), PrimePoint::FpxMax { .. })
                );
                if !ok {
                    return Err(Error::InvalidRing(format!("cannot localize {base} at {at}")));
                }
                crate::spectrum::validate_point(&at, &base)?;
                Ok(RingExpr::LocalizedPid { base: Box::new(base), at })
            }
            RingJson::ResidueField { field } => Ok(RingExpr::ResidueField(field)),
        }
    }
}

impl From<RingExpr> for RingJson {
    fn from(r: RingExpr) -> Self {
        match r {
            RingExpr::Integers => RingJson::Z,
            RingExpr::ZMod { n, .. } => RingJson::Zmod { n },
            RingExpr::PrimeField(p) => RingJson::Fp { p },
            RingExpr::FpPoly(p) => RingJson::FpPoly { p },
            RingExpr::Rationals => RingJson::Q,
            RingExpr::MonomialQuotient(m) => RingJson::MonomialQuotient {
                field: field_to_json(&m.field),
                nvars: m.nvars,
                gens: m.gens,
            },
            RingExpr::LocalizedAtIrrelevant(m) => RingJson::LocalizedAtIrrelevant {
                inner: Box::new(RingExpr::MonomialQuotient(m).into()),
            },
            RingExpr::Product(factors) => RingJson::Product { factors: factors.into_iter().map(Into::into).collect() },
            RingExpr::SymbolicSupplement(k) => RingJson::SymbolicSupplement { field: field_to_json(&k) },
            RingExpr::LocalizedPid { base, at } => RingJson::LocalizedPid { base: Box::new((*base).into()), at },
            RingExpr::ResidueField(d) => RingJson::ResidueField { field: d },
        }
    }
}

// `CoefficientField` travels as a ring JSON object.
impl Serialize for CoefficientField {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        field_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoefficientField {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RingJson::deserialize(d)?;
        field_from_json(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_json_round_trip() {
        let text = r#"{"kind":"Product","factors":[{"kind":"Zmod","n":12},
            {"kind":"LocalizedAtIrrelevant","inner":{"kind":"MonomialQuotient","field":{"kind":"Fp","p":2},
            "nvars":3,"gens":[[1,1,0],[1,0,1],[0,1,1]]}}]}"#;
        let r: RingExpr = serde_json::from_str(text).unwrap();
        assert_eq!(r, RingExpr::product(vec![
            RingExpr::zmod(12).unwrap(),
            RingExpr::supplement(CoefficientField::Prime(2), 3).unwrap(),
        ]).unwrap());
        let back: RingExpr = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn invalid_rings_are_rejected() {
        assert!(RingExpr::zmod(1).is_err());
        assert!(RingExpr::prime_field(9).is_err());
        assert!(RingExpr::monomial_quotient(CoefficientField::Rational, 2, vec![vec![2, 0]]).is_err());
        let m = MonomialRing::new(CoefficientField::Prime(2), 3, vec![vec![1, 1, 0]]).unwrap();
        assert_eq!(m.dimension(), 2);
        assert!(RingExpr::localized(m).is_err());
        assert!(RingExpr::product(vec![RingExpr::SymbolicSupplement(CoefficientField::Rational)]).is_err());
    }

    #[test]
    fn products_flatten() {
        let inner = RingExpr::product(vec![RingExpr::Integers, RingExpr::Rationals]).unwrap();
        let outer = RingExpr::product(vec![inner, RingExpr::zmod(4).unwrap()]).unwrap();
        assert_eq!(outer.factors().unwrap().len(), 3);
    }

    #[test]
    fn field_short_names() {
        assert_eq!(CoefficientField::parse_short("F2").unwrap(), CoefficientField::Prime(2));
        assert_eq!(CoefficientField::parse_short("Q").unwrap(), CoefficientField::Rational);
        assert!(CoefficientField::parse_short("F4").is_err());
    }
}
