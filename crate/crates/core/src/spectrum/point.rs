use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::rings::monomial::VarSet;

/// A prime ideal of one of the supported rings.
/// Points are ordered by kind, then within a kind: numerically, by degree,
/// or for monomial primes lexicographically on the indicator vector of the
/// cover (so `P_1 < P_2 < ...` and inclusion implies order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum PrimePoint {
    /// `(0)` in `Z` or in `Z_(p)`.
    ZGeneric,
    /// `pZ`.
    ZMax {
        #[serde(with = "big_nat")]
        p: BigUint,
    },
    /// `(p)` in `Z/n`.
    ZmodPrime { p: u64 },
    FpxGeneric,
    /// `(f)` in `F_p[x]`, `f` monic irreducible (ascending coefficients).
    FpxMax { f: Vec<u64> },
    /// `(x_i : i in cover)` in a monomial quotient.
    MonoPrime { cover: VarSet },
    /// `P_k = (x_i : i != k)` in the symbolic supplement.
    SuppMin { k: u64 },
    /// The maximal ideal of the symbolic supplement.
    SuppTop,
    /// `(0)` in a field.
    FieldZero,
    /// The preimage of `inner` under the projection onto factor `slot`.
    TamePrime { slot: usize, inner: Box<PrimePoint> },
}

impl PrimePoint {
    pub fn z_max(p: u64) -> Self {
        PrimePoint::ZMax { p: BigUint::from(p) }
    }

    pub fn mono(cover: impl IntoIterator<Item = u32>) -> Self {
        PrimePoint::MonoPrime { cover: cover.into_iter().collect() }
    }

    pub fn tame(slot: usize, inner: PrimePoint) -> Self {
        PrimePoint::TamePrime { slot, inner: Box::new(inner) }
    }

    /// Generic point of a one-dimensional domain.
    pub fn is_generic(&self) -> bool {
        matches!(self, PrimePoint::ZGeneric | PrimePoint::FpxGeneric)
    }

    /// Closed point of `Z` or `F_p[x]`.
    pub fn is_dedekind_closed(&self) -> bool {
        matches!(self, PrimePoint::ZMax { .. } | PrimePoint::FpxMax { .. })
    }
}

impl PrimePoint {
    fn rank(&self) -> u8 {
        match self {
            PrimePoint::ZGeneric => 0,
            PrimePoint::ZMax { .. } => 1,
            PrimePoint::ZmodPrime { .. } => 2,
            PrimePoint::FpxGeneric => 3,
            PrimePoint::FpxMax { .. } => 4,
            PrimePoint::MonoPrime { .. } => 5,
            PrimePoint::SuppMin { .. } => 6,
            PrimePoint::SuppTop => 7,
            PrimePoint::FieldZero => 8,
            PrimePoint::TamePrime { .. } => 9,
        }
    }
}

fn cover_cmp(a: &VarSet, b: &VarSet) -> Ordering {
    // the least variable in exactly one of the covers decides
    match a.symmetric_difference(b).next() {
        None => Ordering::Equal,
        Some(v) if a.contains(v) => Ordering::Greater,
        Some(_) => Ordering::Less,
    }
}

impl Ord for PrimePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        use PrimePoint::*;
        match (self, other) {
            (ZMax { p }, ZMax { p: q }) => p.cmp(q),
            (ZmodPrime { p }, ZmodPrime { p: q }) => p.cmp(q),
            (FpxMax { f }, FpxMax { f: g }) => f.len().cmp(&g.len()).then_with(|| f.iter().rev().cmp(g.iter().rev())),
            (MonoPrime { cover: a }, MonoPrime { cover: b }) => cover_cmp(a, b),
            (SuppMin { k }, SuppMin { k: l }) => k.cmp(l),
            (TamePrime { slot: s, inner: i }, TamePrime { slot: t, inner: j }) => s.cmp(t).then_with(|| i.cmp(j)),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for PrimePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimePoint::ZGeneric | PrimePoint::FpxGeneric | PrimePoint::FieldZero => write!(f, "(0)"),
            PrimePoint::ZMax { p } => write!(f, "({p})"),
            PrimePoint::ZmodPrime { p } => write!(f, "({p})"),
            PrimePoint::FpxMax { f: poly } => {
                write!(f, "(")?;
                let mut first = true;
                for (i, &c) in poly.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match (i, c) {
                        (0, c) => write!(f, "{c}")?,
                        (1, 1) => write!(f, "x")?,
                        (1, c) => write!(f, "{c}x")?,
                        (i, 1) => write!(f, "x^{i}")?,
                        (i, c) => write!(f, "{c}x^{i}")?,
                    }
                }
                write!(f, ")")
            }
            PrimePoint::MonoPrime { cover } => {
                let names: Vec<String> = cover.iter().map(|v| format!("x{v}")).collect();
                write!(f, "({})", names.join(","))
            }
            PrimePoint::SuppMin { k } => write!(f, "P_{k}"),
            PrimePoint::SuppTop => write!(f, "m"),
            PrimePoint::TamePrime { slot, inner } => write!(f, "pi{slot}^-1{inner}"),
        }
    }
}

/// Natural numbers on the wire: a JSON number when it fits in `u64`,
/// otherwise a decimal string. Both forms are accepted on input.
pub(crate) mod big_nat {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match v.to_u64() {
            Some(small) => s.serialize_u64(small),
            None => s.serialize_str(&v.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Either {
        Num(u64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        match Either::deserialize(d)? {
            Either::Num(n) => Ok(BigUint::from(n)),
            Either::Str(s) => s.trim().parse().map_err(serde::de::Error::custom),
        }
    }
}

pub(crate) fn display_set<T: fmt::Display>(items: &BTreeSet<T>) -> String {
    let parts: Vec<String> = items.iter().map(|p| p.to_string()).collect();
    parts.join(", ")
}
