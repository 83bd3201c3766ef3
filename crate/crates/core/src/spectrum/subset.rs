use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::point::{display_set, PrimePoint};

/// A subset of a prime spectrum.
///
/// The cofinite forms only occur over the infinite spectra: `CofiniteClosed`
/// over `Z` and `F_p[x]`, `CofiniteMin` over the symbolic supplement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum SpecSubset {
    Empty,
    Explicit { points: BTreeSet<PrimePoint> },
    /// All closed points except `excluded`, plus the generic point if asked.
    #[serde(rename_all = "camelCase")]
    CofiniteClosed { excluded: BTreeSet<PrimePoint>, with_generic: bool },
    /// All `P_k` with `k` not excluded, plus the maximal ideal if asked.
    #[serde(rename_all = "camelCase")]
    CofiniteMin { excluded: BTreeSet<u64>, with_top: bool },
    Whole,
}

impl SpecSubset {
    pub fn explicit(points: impl IntoIterator<Item = PrimePoint>) -> Self {
        let points: BTreeSet<PrimePoint> = points.into_iter().collect();
        if points.is_empty() {
            SpecSubset::Empty
        } else {
            SpecSubset::Explicit { points }
        }
    }

    pub fn cofinite_closed(excluded: impl IntoIterator<Item = PrimePoint>, with_generic: bool) -> Self {
        SpecSubset::CofiniteClosed { excluded: excluded.into_iter().collect(), with_generic }
    }

    pub fn cofinite_min(excluded: impl IntoIterator<Item = u64>, with_top: bool) -> Self {
        SpecSubset::CofiniteMin { excluded: excluded.into_iter().collect(), with_top }
    }

    /// Finite as a set, whatever the ring.
    pub fn is_finite(&self) -> bool {
        matches!(self, SpecSubset::Empty | SpecSubset::Explicit { .. })
    }

    pub fn points(&self) -> Option<&BTreeSet<PrimePoint>> {
        match self {
            SpecSubset::Explicit { points } => Some(points),
            _ => None,
        }
    }
}

/// Membership, decided on the representation alone.
pub fn subset_member(p: &PrimePoint, e: &SpecSubset) -> bool {
    match e {
        SpecSubset::Empty => false,
        SpecSubset::Explicit { points } => points.contains(p),
        SpecSubset::CofiniteClosed { excluded, with_generic } => {
            if p.is_generic() {
                *with_generic
            } else {
                p.is_dedekind_closed() && !excluded.contains(p)
            }
        }
        SpecSubset::CofiniteMin { excluded, with_top } => match p {
            PrimePoint::SuppMin { k } => *k >= 1 && !excluded.contains(k),
            PrimePoint::SuppTop => *with_top,
            _ => false,
        },
        SpecSubset::Whole => true,
    }
}

impl fmt::Display for SpecSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecSubset::Empty => write!(f, "{{}}"),
            SpecSubset::Explicit { points } => write!(f, "{{{}}}", display_set(points)),
            SpecSubset::CofiniteClosed { excluded, with_generic } => {
                write!(f, "closed points")?;
                if !excluded.is_empty() {
                    write!(f, " except {{{}}}", display_set(excluded))?;
                }
                if *with_generic {
                    write!(f, ", plus (0)")?;
                }
                Ok(())
            }
            SpecSubset::CofiniteMin { excluded, with_top } => {
                write!(f, "all P_k")?;
                if !excluded.is_empty() {
                    write!(f, " except k in {{{}}}", display_set(excluded))?;
                }
                if *with_top {
                    write!(f, ", plus m")?;
                }
                Ok(())
            }
            SpecSubset::Whole => write!(f, "Spec"),
        }
    }
}

/// A finite or cofinite subset of an infinite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Part<T: Ord + Clone> {
    Fin(BTreeSet<T>),
    Cof(BTreeSet<T>),
}

impl<T: Ord + Clone> Part<T> {
    #[cfg(test)]
    pub fn contains(&self, t: &T) -> bool {
        match self {
            Part::Fin(a) => a.contains(t),
            Part::Cof(x) => !x.contains(t),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        match (self, other) {
            (Part::Fin(a), Part::Fin(b)) => Part::Fin(a | b),
            (Part::Fin(a), Part::Cof(x)) | (Part::Cof(x), Part::Fin(a)) => Part::Cof(x - a),
            (Part::Cof(x), Part::Cof(y)) => Part::Cof(x & y),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        match (self, other) {
            (Part::Fin(a), Part::Fin(b)) => Part::Fin(a & b),
            (Part::Fin(a), Part::Cof(x)) | (Part::Cof(x), Part::Fin(a)) => Part::Fin(a - x),
            (Part::Cof(x), Part::Cof(y)) => Part::Cof(x | y),
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            Part::Fin(a) => Part::Cof(a.clone()),
            Part::Cof(x) => Part::Fin(x.clone()),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        match (self, other) {
            (Part::Fin(a), Part::Fin(b)) => a.is_subset(b),
            (Part::Fin(a), Part::Cof(x)) => a.is_disjoint(x),
            (Part::Cof(_), Part::Fin(_)) => false,
            (Part::Cof(x), Part::Cof(y)) => y.is_subset(x),
        }
    }

    pub fn mentioned(&self) -> &BTreeSet<T> {
        match self {
            Part::Fin(a) | Part::Cof(a) => a,
        }
    }
}

/// A subset of an infinite one-dimensional spectrum: a distinguished point
/// (generic or maximal) and a finite or cofinite set of the other points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Sym<T: Ord + Clone> {
    pub special: bool,
    pub part: Part<T>,
}

impl<T: Ord + Clone> Sym<T> {
    pub fn union(&self, o: &Self) -> Self {
        Sym { special: self.special || o.special, part: self.part.union(&o.part) }
    }

    pub fn intersection(&self, o: &Self) -> Self {
        Sym { special: self.special && o.special, part: self.part.intersection(&o.part) }
    }

    pub fn complement(&self) -> Self {
        Sym { special: !self.special, part: self.part.complement() }
    }

    pub fn is_subset(&self, o: &Self) -> bool {
        (!self.special || o.special) && self.part.is_subset(&o.part)
    }
}
