//! Zariski, flat and patch closures, stability under specialization and
//! generalization, and density.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{MPoly, RingElement, RingExpr};
use crate::spectrum::{Part, PrimePoint, Space, SpecSubset, Sym};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Zariski,
    Flat,
    Patch,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Topology::Zariski => "zariski",
            Topology::Flat => "flat",
            Topology::Patch => "patch",
        })
    }
}

impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "zariski" => Ok(Topology::Zariski),
            "flat" => Ok(Topology::Flat),
            "patch" => Ok(Topology::Patch),
            _ => Err(Error::Unsupported(format!("unknown topology `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stability {
    Specialization,
    Generalization,
}

impl FromStr for Stability {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "specialization" => Ok(Stability::Specialization),
            "generalization" => Ok(Stability::Generalization),
            _ => Err(Error::Unsupported(format!("unknown stability mode `{s}`"))),
        }
    }
}

/// Why a density criterion holds or fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum DensityRationale {
    /// The spectrum is finite, so the statement is vacuous.
    FiniteSpectrum,
    /// Every nonzero element has finitely many prime factors.
    FactorizationFinite,
    /// Every nonunit lies outside only finitely many minimal primes.
    FiniteSupport,
    /// The witness has an infinite locus that is not dense.
    CounterexampleElement,
}

/// Whether every infinite subset of the spectrum is dense in `mode`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityCertificate {
    pub holds: bool,
    pub mode: Topology,
    pub witness: Option<RingElement>,
    pub rationale: DensityRationale,
}

// Which points a symbolic set contains, read through the order: for Z and
// F_p[x] the distinguished point is the generic one (below everything), for
// the supplement it is the maximal ideal (above everything).
enum Shape {
    Finite(BTreeSet<PrimePoint>),
    Bottom { special: bool, others_nonempty: bool, others_infinite: bool },
    Top { special: bool, others_nonempty: bool, others_infinite: bool },
}

fn shape_of<T: Ord + Clone>(s: &Sym<T>) -> (bool, bool, bool) {
    let nonempty = match &s.part {
        Part::Fin(a) => !a.is_empty(),
        Part::Cof(_) => true,
    };
    (s.special, nonempty, matches!(s.part, Part::Cof(_)))
}

impl Space {
    fn shape(&self, e: &SpecSubset) -> Result<Shape> {
        let e = self.canonical(e)?;
        if self.is_finite() {
            return Ok(Shape::Finite(e.points().cloned().unwrap_or_default()));
        }
        let (special, nonempty, infinite) = if self.is_supplement() {
            shape_of(&self.supplement_sym(&e))
        } else {
            shape_of(&self.dedekind_sym(&e))
        };
        Ok(if self.is_supplement() {
            Shape::Top { special, others_nonempty: nonempty, others_infinite: infinite }
        } else {
            Shape::Bottom { special, others_nonempty: nonempty, others_infinite: infinite }
        })
    }

    fn dedekind_sym(&self, e: &SpecSubset) -> Sym<PrimePoint> {
        match e {
            SpecSubset::Empty => Sym { special: false, part: Part::Fin(BTreeSet::new()) },
            SpecSubset::Whole => Sym { special: true, part: Part::Cof(BTreeSet::new()) },
            SpecSubset::Explicit { points } => Sym {
                special: points.iter().any(PrimePoint::is_generic),
                part: Part::Fin(points.iter().filter(|p| !p.is_generic()).cloned().collect()),
            },
            SpecSubset::CofiniteClosed { excluded, with_generic } => {
                Sym { special: *with_generic, part: Part::Cof(excluded.clone()) }
            }
            SpecSubset::CofiniteMin { .. } => unreachable!("validated by canonical"),
        }
    }

    fn supplement_sym(&self, e: &SpecSubset) -> Sym<u64> {
        match e {
            SpecSubset::Empty => Sym { special: false, part: Part::Fin(BTreeSet::new()) },
            SpecSubset::Whole => Sym { special: true, part: Part::Cof(BTreeSet::new()) },
            SpecSubset::Explicit { points } => Sym {
                special: points.contains(&PrimePoint::SuppTop),
                part: Part::Fin(
                    points
                        .iter()
                        .filter_map(|p| match p {
                            PrimePoint::SuppMin { k } => Some(*k),
                            _ => None,
                        })
                        .collect(),
                ),
            },
            SpecSubset::CofiniteMin { excluded, with_top } => {
                Sym { special: *with_top, part: Part::Cof(excluded.clone()) }
            }
            SpecSubset::CofiniteClosed { .. } => unreachable!("validated by canonical"),
        }
    }

    fn with_special(&self, e: &SpecSubset) -> Result<SpecSubset> {
        let special = match self.generic_point() {
            Some(g) => g.clone(),
            None => PrimePoint::SuppTop,
        };
        self.union(e, &SpecSubset::explicit([special]))
    }

    /// All specializations of points of `e`.
    pub fn up_set(&self, e: &SpecSubset) -> Result<SpecSubset> {
        Ok(match self.shape(e)? {
            Shape::Finite(points) => {
                let all = self.points()?;
                SpecSubset::explicit(all.iter().filter(|q| points.iter().any(|p| self.leq(p, q))).cloned())
            }
            Shape::Bottom { special: true, .. } => SpecSubset::Whole,
            Shape::Bottom { .. } => self.canonical(e)?,
            Shape::Top { others_nonempty: true, .. } => self.with_special(e)?,
            Shape::Top { .. } => self.canonical(e)?,
        })
    }

    /// All generalizations of points of `e`.
    pub fn down_set(&self, e: &SpecSubset) -> Result<SpecSubset> {
        Ok(match self.shape(e)? {
            Shape::Finite(points) => {
                let all = self.points()?;
                SpecSubset::explicit(all.iter().filter(|q| points.iter().any(|p| self.leq(q, p))).cloned())
            }
            Shape::Bottom { others_nonempty: true, .. } => self.with_special(e)?,
            Shape::Bottom { .. } => self.canonical(e)?,
            Shape::Top { special: true, .. } => SpecSubset::Whole,
            Shape::Top { .. } => self.canonical(e)?,
        })
    }

    pub fn zariski_closure(&self, e: &SpecSubset) -> Result<SpecSubset> {
        match self.shape(e)? {
            // an infinite set of closed points of a one-dimensional domain
            // lies in no V(a) with a != 0
            Shape::Bottom { others_infinite: true, .. } => Ok(SpecSubset::Whole),
            _ => self.up_set(e),
        }
    }

    pub fn flat_closure(&self, e: &SpecSubset) -> Result<SpecSubset> {
        match self.shape(e)? {
            // an infinite set of minimal primes of the supplement needs the
            // maximal ideal as a patch limit, and then all its generalizations
            Shape::Top { others_infinite: true, .. } => Ok(SpecSubset::Whole),
            _ => self.down_set(e),
        }
    }

    pub fn patch_closure(&self, e: &SpecSubset) -> Result<SpecSubset> {
        match self.shape(e)? {
            Shape::Finite(_) => self.canonical(e),
            Shape::Bottom { others_infinite: true, .. } | Shape::Top { others_infinite: true, .. } => {
                self.with_special(e)
            }
            _ => self.canonical(e),
        }
    }

    pub fn closure(&self, e: &SpecSubset, topology: Topology) -> Result<SpecSubset> {
        match topology {
            Topology::Zariski => self.zariski_closure(e),
            Topology::Flat => self.flat_closure(e),
            Topology::Patch => self.patch_closure(e),
        }
    }

    pub fn is_stable(&self, e: &SpecSubset, mode: Stability) -> Result<bool> {
        let hull = match mode {
            Stability::Specialization => self.up_set(e)?,
            Stability::Generalization => self.down_set(e)?,
        };
        self.same(&hull, e)
    }

    pub fn is_closed(&self, e: &SpecSubset, topology: Topology) -> Result<bool> {
        let c = self.closure(e, topology)?;
        self.same(&c, e)
    }

    pub fn is_dense(&self, e: &SpecSubset, topology: Topology) -> Result<bool> {
        let c = self.closure(e, topology)?;
        self.same(&c, &self.whole())
    }

    /// Whether every infinite subset is dense in `mode` (Zariski or flat),
    /// decided through the finiteness of the loci `V(a)` or `D(a)`.
    pub fn density_criterion(&self, mode: Topology) -> Result<DensityCertificate> {
        let cert = |holds, witness, rationale| DensityCertificate { holds, mode, witness, rationale };
        if self.is_finite() {
            return Ok(cert(true, None, DensityRationale::FiniteSpectrum));
        }
        let witness = match self.ring() {
            RingExpr::Integers => RingElement::Int(BigInt::from(2)),
            RingExpr::FpPoly(_) => RingElement::Poly(vec![0, 1]),
            _ => RingElement::MPoly(MPoly::variable(1)),
        };
        match (mode, self.is_supplement()) {
            (Topology::Zariski, false) => Ok(cert(true, None, DensityRationale::FactorizationFinite)),
            (Topology::Flat, true) => Ok(cert(true, None, DensityRationale::FiniteSupport)),
            (Topology::Zariski, true) | (Topology::Flat, false) => {
                Ok(cert(false, Some(witness), DensityRationale::CounterexampleElement))
            }
            (Topology::Patch, _) => Err(Error::Unsupported("density criteria exist for zariski and flat".into())),
        }
    }

    /// Checks a failing certificate: the witness is not nilpotent (Zariski)
    /// or not a unit (flat), and its locus `V(a)` (resp. `D(a)`) is infinite
    /// but not dense.
    pub fn check_certificate(&self, cert: &DensityCertificate) -> Result<bool> {
        if cert.holds {
            return Ok(cert.witness.is_none());
        }
        let Some(a) = &cert.witness else { return Ok(false) };
        let (locus, admissible) = match cert.mode {
            Topology::Zariski => (self.v_locus(a)?, !self.ring().is_nilpotent(a)?),
            Topology::Flat => (self.d_locus(a)?, !self.ring().is_unit(a)?),
            Topology::Patch => return Ok(false),
        };
        Ok(admissible && !locus.is_finite() && !self.is_dense(&locus, cert.mode)?)
    }
}

pub fn zariski_closure(e: &SpecSubset, ring: &RingExpr) -> Result<SpecSubset> {
    Space::new(ring)?.zariski_closure(e)
}

pub fn flat_closure(e: &SpecSubset, ring: &RingExpr) -> Result<SpecSubset> {
    Space::new(ring)?.flat_closure(e)
}

pub fn patch_closure(e: &SpecSubset, ring: &RingExpr) -> Result<SpecSubset> {
    Space::new(ring)?.patch_closure(e)
}

pub fn is_stable(e: &SpecSubset, ring: &RingExpr, mode: Stability) -> Result<bool> {
    Space::new(ring)?.is_stable(e, mode)
}

pub fn is_dense(e: &SpecSubset, ring: &RingExpr, topology: Topology) -> Result<bool> {
    Space::new(ring)?.is_dense(e, topology)
}

pub fn density_criterion(ring: &RingExpr, mode: Topology) -> Result<DensityCertificate> {
    Space::new(ring)?.density_criterion(mode)
}
