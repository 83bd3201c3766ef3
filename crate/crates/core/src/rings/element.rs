use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::Error;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Over `F_p` the coefficients are integers in `[0, p)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly {
    pub(crate) terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    pub fn monomial(exps: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { terms }
    }

    /// `x_index` with coefficient one (1-based index).
    pub fn variable(index: u32) -> Self {
        let mut e = vec![0; index as usize];
        e[index as usize - 1] = 1;
        MPoly::monomial(e, BigRational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut out = MPoly::zero();
        for (e, c) in terms {
            *out.terms.entry(e).or_insert_with(BigRational::zero) += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> BigRational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(j, &x)| if x == 1 { format!("x{}", j + 1) } else { format!("x{}^{x}", j + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// An element of one of the supported rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "ElementJson", try_from = "ElementJson")]
pub enum RingElement {
    /// Element of `Z`.
    Int(BigInt),
    /// Residue of `Z/n` or `F_p`.
    Mod(u64),
    /// Element of `Q`.
    Rat(BigRational),
    /// Element of `F_p[x]`, ascending coefficients.
    Poly(Vec<u64>),
    /// Element of a monomial quotient, its localization, or the supplement.
    MPoly(MPoly),
    Tuple(Vec<RingElement>),
}

impl RingElement {
    pub fn int(v: i64) -> Self {
        RingElement::Int(BigInt::from(v))
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            RingElement::Int(_) => "int",
            RingElement::Mod(_) => "mod",
            RingElement::Rat(_) => "rat",
            RingElement::Poly(_) => "poly",
            RingElement::MPoly(_) => "mpoly",
            RingElement::Tuple(_) => "tuple",
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(v) => write!(f, "{v}"),
            RingElement::Mod(v) => write!(f, "{v}"),
            RingElement::Rat(v) => write!(f, "{v}"),
            RingElement::Poly(c) => {
                if c.is_empty() {
                    return write!(f, "0");
                }
                let parts: Vec<String> = c
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &a)| a != 0)
                    .map(|(i, &a)| match (i, a) {
                        (0, a) => format!("{a}"),
                        (1, 1) => "x".to_string(),
                        (1, a) => format!("{a}x"),
                        (i, 1) => format!("x^{i}"),
                        (i, a) => format!("{a}x^{i}"),
                    })
                    .collect();
                write!(f, "{}", parts.join(" + "))
            }
            RingElement::MPoly(p) => write!(f, "{p}"),
            RingElement::Tuple(items) => {
                write!(f, "(")?;
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

/// Wire form of [`RingElement`].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ElementJson {
    Int { v: String },
    Mod { v: u64 },
    Rat { v: String },
    Poly { coeffs: Vec<u64> },
    Mpoly { terms: Vec<TermJson> },
    Tuple { items: Vec<ElementJson> },
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::KindMismatch(format!("`{s}` is not a rational number"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl TryFrom<ElementJson> for RingElement {
    type Error = Error;

    fn try_from(j: ElementJson) -> Result<Self, Error> {
        Ok(match j {
            ElementJson::Int { v } => RingElement::Int(
                v.trim()
                    .parse()
                    .map_err(|_| Error::KindMismatch(format!("`{v}` is not an integer")))?,
            ),
            ElementJson::Mod { v } => RingElement::Mod(v),
            ElementJson::Rat { v } => RingElement::Rat(parse_rational(&v)?),
            ElementJson::Poly { coeffs } => RingElement::Poly(coeffs),
            ElementJson::Mpoly { terms } => {
                let parsed = terms
                    .into_iter()
                    .map(|t| Ok((t.e, parse_rational(&t.c)?)))
                    .collect::<Result<Vec<_>, Error>>()?;
                RingElement::MPoly(MPoly::from_terms(parsed))
            }
            ElementJson::Tuple { items } => {
                RingElement::Tuple(items.into_iter().map(RingElement::try_from).collect::<Result<_, _>>()?)
            }
        })
    }
}

impl From<RingElement> for ElementJson {
    fn from(e: RingElement) -> Self {
        match e {
            RingElement::Int(v) => ElementJson::Int { v: v.to_string() },
            RingElement::Mod(v) => ElementJson::Mod { v },
            RingElement::Rat(v) => ElementJson::Rat { v: v.to_string() },
            RingElement::Poly(coeffs) => ElementJson::Poly { coeffs },
            RingElement::MPoly(p) => ElementJson::Mpoly {
                terms: p.terms.into_iter().map(|(e, c)| TermJson { c: c.to_string(), e }).collect(),
            },
            RingElement::Tuple(items) => ElementJson::Tuple { items: items.into_iter().map(Into::into).collect() },
        }
    }
}
