//! Acceptance run: ten numbered criteria, exact comparisons only. Each
//! criterion prints one line; the process fails if any criterion fails.
//! Expected values come from oracles written here, against the raw point
//! data, not from the closure code under test.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use primespec::construction;
use primespec::maps::{self, FactorKind, RingMapSpec};
use primespec::products;
use primespec::spectrum::{validate_point, Space};
use primespec::topology::Stability;
use primespec::{CoefficientField, PrimePoint, RingElement, RingExpr, SpecSubset, Topology};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: primespec::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---------------------------------------------------------------- oracles

fn trial_factor(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && trial_factor(n) == [n]
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Inclusion of prime ideals read off the point data.
fn included(p: &PrimePoint, q: &PrimePoint) -> bool {
    use PrimePoint::*;
    match (p, q) {
        (MonoPrime { cover: a }, MonoPrime { cover: b }) => a.iter().all(|i| b.contains(i)),
        (TamePrime { slot: i, inner: a }, TamePrime { slot: j, inner: b }) => i == j && included(a, b),
        _ => p == q,
    }
}

fn up(points: &[PrimePoint], e: &BTreeSet<PrimePoint>) -> BTreeSet<PrimePoint> {
    points.iter().filter(|q| e.iter().any(|p| included(p, q))).cloned().collect()
}

fn down(points: &[PrimePoint], e: &BTreeSet<PrimePoint>) -> BTreeSet<PrimePoint> {
    points.iter().filter(|q| e.iter().any(|p| included(q, p))).cloned().collect()
}

fn explicit(s: &BTreeSet<PrimePoint>) -> SpecSubset {
    SpecSubset::explicit(s.iter().cloned())
}

fn zoo() -> Vec<RingExpr> {
    let zm = |n| RingExpr::zmod(n).unwrap();
    let f2 = CoefficientField::Prime(2);
    let supp = |k: &CoefficientField, n| RingExpr::supplement(k.clone(), n).unwrap();
    let prod = |fs| RingExpr::product(fs).unwrap();
    vec![
        zm(2),
        zm(8),
        zm(6),
        zm(36),
        zm(30),
        zm(210),
        zm(2310),
        zm(30030),
        zm(510510),
        zm(9699690),
        RingExpr::prime_field(7).unwrap(),
        RingExpr::Rationals,
        supp(&f2, 1),
        supp(&f2, 2),
        supp(&f2, 3),
        supp(&f2, 4),
        supp(&CoefficientField::Prime(3), 5),
        supp(&CoefficientField::Rational, 6),
        supp(&f2, 7),
        prod(vec![zm(6), zm(10)]),
        prod(vec![zm(2), zm(3), zm(5)]),
        prod(vec![supp(&f2, 2), zm(4)]),
        prod(vec![supp(&f2, 1), supp(&f2, 1), zm(2)]),
        prod(vec![supp(&f2, 3), zm(6), zm(15)]),
    ]
}

fn points_of(space: &Space) -> Vec<PrimePoint> {
    space.points().unwrap().iter().cloned().collect()
}

fn subsets(points: &[PrimePoint]) -> impl Iterator<Item = BTreeSet<PrimePoint>> + '_ {
    (0u32..1 << points.len())
        .map(move |m| points.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, p)| p.clone()).collect())
}

/// Closed points of `Z` or `F_2[x]` for random sets, found here by trial
/// division and by testing polynomials for roots and small factors.
fn dedekind_pool(ring: &RingExpr) -> Vec<PrimePoint> {
    match ring {
        RingExpr::Integers => (2..60).filter(|&n| is_prime(n)).map(PrimePoint::z_max).collect(),
        _ => {
            // irreducible binary polynomials of degree at most 4, as bit masks
            let mul = |a: u32, b: u32| (0..8).filter(|i| b >> i & 1 == 1).fold(0, |acc, i| acc ^ (a << i));
            let deg = |a: u32| 31 - a.leading_zeros();
            let reducible: BTreeSet<u32> = (2u32..32)
                .flat_map(|a| (2u32..32).map(move |b| (a, b)))
                .filter(|&(a, b)| deg(a) >= 1 && deg(b) >= 1)
                .map(|(a, b)| mul(a, b))
                .collect();
            (2u32..32)
                .filter(|f| !reducible.contains(f))
                .map(|f| PrimePoint::FpxMax { f: (0..=deg(f)).map(|i| u64::from(f >> i & 1)).collect() })
                .collect()
        }
    }
}

/// Closures on the one-dimensional spectra, from their shape alone.
struct SymbolicOracle {
    dedekind: bool,
    special: PrimePoint,
}

impl SymbolicOracle {
    fn new(space: &Space) -> Self {
        match space.ring() {
            RingExpr::Integers => SymbolicOracle { dedekind: true, special: PrimePoint::ZGeneric },
            RingExpr::FpPoly(_) => SymbolicOracle { dedekind: true, special: PrimePoint::FpxGeneric },
            _ => SymbolicOracle { dedekind: false, special: PrimePoint::SuppTop },
        }
    }

    fn empty(e: &SpecSubset) -> bool {
        matches!(e, SpecSubset::Empty)
    }

    fn with_special(&self, space: &Space, e: &SpecSubset) -> SpecSubset {
        space.union(e, &SpecSubset::explicit([self.special.clone()])).unwrap()
    }

    fn has_special(&self, space: &Space, e: &SpecSubset) -> bool {
        space.contains(e, &self.special).unwrap()
    }

    // In a Dedekind spectrum the special point is generic, in the
    // supplement it is the closed point; the two cases are mirror images.
    fn closure(&self, space: &Space, e: &SpecSubset, t: Topology) -> SpecSubset {
        let infinite = !e.is_finite();
        let absorbing = if self.dedekind { Topology::Zariski } else { Topology::Flat };
        match t {
            Topology::Patch if infinite => self.with_special(space, e),
            Topology::Patch => e.clone(),
            t if t == absorbing => {
                if infinite || self.has_special(space, e) {
                    SpecSubset::Whole
                } else {
                    e.clone()
                }
            }
            _ if Self::empty(e) => e.clone(),
            _ => self.with_special(space, e),
        }
    }
}

fn random_symbolic(rng: &mut ChaCha8Rng, space: &Space, pool: &[PrimePoint]) -> SpecSubset {
    let special = rng.gen_bool(0.3);
    let cofinite = rng.gen_bool(0.5);
    let count = rng.gen_range(0..=4);
    if space.is_supplement() {
        let ks: BTreeSet<u64> = (0..count).map(|_| rng.gen_range(1..=12)).collect();
        if cofinite {
            return SpecSubset::cofinite_min(ks, special);
        }
        let mut pts: BTreeSet<PrimePoint> = ks.into_iter().map(|k| PrimePoint::SuppMin { k }).collect();
        if special {
            pts.insert(PrimePoint::SuppTop);
        }
        return SpecSubset::explicit(pts);
    }
    let mut pts: BTreeSet<PrimePoint> = (0..count).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    if cofinite {
        return SpecSubset::cofinite_closed(pts, special);
    }
    if special {
        pts.insert(space.generic_point().unwrap().clone());
    }
    SpecSubset::explicit(pts)
}

fn symbolic_spaces() -> Vec<(Space, Vec<PrimePoint>)> {
    [RingExpr::Integers, RingExpr::fp_poly(2).unwrap(), RingExpr::SymbolicSupplement(CoefficientField::Prime(2))]
        .into_iter()
        .map(|r| {
            let pool = dedekind_pool(&r);
            (Space::new(&r).unwrap(), pool)
        })
        .collect()
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    if spent > limit {
        Err(format!("took {spent:.2?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------- criteria

fn finite_closure_formula() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(2..=1_000_000u64);
        let ring = ok(RingExpr::zmod(n))?;
        let space = ok(Space::new(&ring))?;
        let primes = trial_factor(n);
        let all: Vec<PrimePoint> = primes.iter().map(|&p| PrimePoint::ZmodPrime { p }).collect();
        ensure!(all.iter().cloned().collect::<BTreeSet<_>>() == *ok(space.points())?, "Spec(Z/{n}) differs");
        let chosen: BTreeSet<PrimePoint> = all.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        let e = explicit(&chosen);
        let closure = ok(space.zariski_closure(&e))?;
        ensure!(closure == explicit(&up(&all, &chosen)), "Z/{n}: closure {closure} is not the up-closure");
        // V of the intersection: the intersection of the (p) is (prod p)
        let prod: u64 = chosen.iter().map(|p| if let PrimePoint::ZmodPrime { p } = p { *p } else { 1 }).product();
        let v: BTreeSet<PrimePoint> = primes.iter().filter(|&&q| prod.is_multiple_of(q)).map(|&p| PrimePoint::ZmodPrime { p }).collect();
        let lib_meet = chosen.iter().try_fold(None, |acc, p| {
            let ip = primespec::spectrum::prime_ideal(p, &ring)?;
            Ok::<_, primespec::Error>(Some(match acc {
                None => ip,
                Some(m) => ring.ideal_intersect(&m, &ip)?,
            }))
        });
        if let Some(m) = ok(lib_meet)? {
            let lib_v: BTreeSet<PrimePoint> = all
                .iter()
                .filter(|q| ring.ideal_contains(&primespec::spectrum::prime_ideal(q, &ring).unwrap(), &m).unwrap())
                .cloned()
                .collect();
            ensure!(lib_v == v, "Z/{n}: V of the intersection ideal differs");
        }
        ensure!(closure == explicit(&v), "Z/{n}: closure {closure} is not V of the intersection");
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("100 moduli in {:.2?}", start.elapsed()))
}

fn cofinite_image_over_z() -> Outcome {
    let start = Instant::now();
    let ring = RingExpr::Integers;
    let e = SpecSubset::cofinite_closed([PrimePoint::z_max(11)], false);
    let rep = ok(products::strictness_demo(&ring, &e, Topology::Zariski))?;
    let image = ok(products::quotient_product_image(&ring, &e))?;
    let space = ok(Space::new(&ring))?;
    ensure!(image == SpecSubset::cofinite_closed([PrimePoint::z_max(11)], true), "image {image}");
    ensure!(rep.image == image, "report image {}", rep.image);
    ensure!(ok(space.zariski_closure(&e))? == SpecSubset::Whole, "closure is not everything");
    ensure!(rep.strict, "not strict");
    ensure!(rep.witness == Some(PrimePoint::z_max(11)), "witness {:?}", rep.witness);
    // 11 lies in no prime of E, so its image in every factor is nonzero in a field
    ensure!(ok(products::is_unit_in_quotient_product(&RingElement::int(11), &e, &ring))?, "11 is not a unit");
    ensure!(!ok(products::is_unit_in_quotient_product(&RingElement::int(13), &e, &ring))?, "13 is a unit");
    within(start, Duration::from_secs(1))?;
    Ok("image E + (0), closure everything, witness 11Z".into())
}

fn dedekind_images() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for ring in [RingExpr::Integers, RingExpr::fp_poly(2).unwrap()] {
        let space = ok(Space::new(&ring))?;
        let pool = dedekind_pool(&ring);
        for _ in 0..50 {
            let k = rng.gen_range(0..=5);
            let excl: BTreeSet<PrimePoint> = (0..k).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
            let e = SpecSubset::cofinite_closed(excl.clone(), false);
            let expected = ok(space.canonical(&SpecSubset::cofinite_closed(excl, true)))?;
            let q = ok(products::quotient_product_image(&ring, &e))?;
            let l = ok(products::local_product_image(&ring, &e))?;
            let f = ok(space.flat_closure(&e))?;
            ensure!(q == expected, "{ring}: quotient image of {e} is {q}");
            ensure!(l == expected, "{ring}: local image of {e} is {l}");
            ensure!(l == f, "{ring}: local image {l} and flat closure {f} differ");
        }
    }
    Ok("100 cofinite sets over Z and F_2[x]".into())
}

fn supplement_images() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let ring = RingExpr::SymbolicSupplement(CoefficientField::Prime(2));
    let space = ok(Space::new(&ring))?;
    for _ in 0..50 {
        // with nothing excluded E + m is everything and there is no gap
        let k = rng.gen_range(1..=5);
        let excl: BTreeSet<u64> = (0..k).map(|_| rng.gen_range(1..=30)).collect();
        let e = SpecSubset::cofinite_min(excl.clone(), false);
        let expected = ok(space.canonical(&SpecSubset::cofinite_min(excl, true)))?;
        let q = ok(products::quotient_product_image(&ring, &e))?;
        let z = ok(space.zariski_closure(&e))?;
        let l = ok(products::local_product_image(&ring, &e))?;
        let f = ok(space.flat_closure(&e))?;
        ensure!(q == expected && z == expected, "{e}: quotient image {q}, zariski closure {z}");
        ensure!(l == expected, "{e}: local image {l}");
        ensure!(f == SpecSubset::Whole, "{e}: flat closure {f}");
        ensure!(ok(space.is_subset(&l, &f))? && !ok(space.same(&l, &f))?, "{e}: local image not strictly inside");
    }
    Ok("50 cofinite sets of minimal primes".into())
}

/// Minimal vertex covers of the complete graph on `n` vertices, by brute force.
fn complete_graph_covers(n: usize) -> BTreeSet<BTreeSet<u32>> {
    let covers: Vec<u32> = (0u32..1 << n)
        .filter(|s| (0..n).all(|i| (i + 1..n).all(|k| s >> i & 1 == 1 || s >> k & 1 == 1)))
        .collect();
    covers
        .iter()
        .filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t))
        .map(|&s| (0..n as u32).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect())
        .collect()
}

fn supplement_theorem() -> Outcome {
    let start = Instant::now();
    for n in 2..=8usize {
        let expected: BTreeSet<PrimePoint> =
            complete_graph_covers(n).into_iter().map(|c| PrimePoint::MonoPrime { cover: c }).collect();
        ensure!(expected.len() == n, "oracle found {} covers for n={n}", expected.len());
        for field in [CoefficientField::Prime(2), CoefficientField::Prime(3), CoefficientField::Rational] {
            let ring = ok(construction::build_supplement(field.clone(), n))?;
            let m = ring.monomial_ring().unwrap();
            ensure!(ok(construction::verify_intersection(n, field.clone()))?, "n={n} {field}: intersection");
            let ideal = primespec::IdealRepr::monomial(m.gens().to_vec());
            let mins: BTreeSet<PrimePoint> =
                ok(construction::minimal_primes_monomial(&ideal, n, true))?.into_iter().collect();
            ensure!(mins == expected, "n={n} {field}: minimal primes");
            ensure!(ok(construction::krull_dim(&ring))? == 1, "n={n} {field}: dimension");
            ensure!(ok(construction::is_reduced(&ring))?, "n={n} {field}: not reduced");
            ensure!(ok(construction::pz_check(&ring))?, "n={n} {field}: absorbance");
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("n = 2..8 over F_2, F_3, Q in {:.2?}", start.elapsed()))
}

fn oracle_agreement() -> Outcome {
    let mut rings = 0;
    let mut sets = 0;
    for ring in zoo() {
        let space = ok(Space::new(&ring))?;
        let points = points_of(&space);
        if points.len() > 6 {
            continue;
        }
        rings += 1;
        for chosen in subsets(&points) {
            sets += 1;
            let e = explicit(&chosen);
            for (kind, expected, closure) in [
                (FactorKind::Quotient, up(&points, &chosen), ok(space.zariski_closure(&e))?),
                (FactorKind::Local, down(&points, &chosen), ok(space.flat_closure(&e))?),
            ] {
                let formula = ok(products::product_image(&ring, &e, kind))?;
                let brute = ok(products::brute_force_image(&ring, &e, kind))?;
                ensure!(ok(space.same(&brute, &formula))?, "{ring} {e} {kind:?}: brute {brute}, formula {formula}");
                ensure!(ok(space.same(&formula, &explicit(&expected)))?, "{ring} {e} {kind:?}: formula {formula}");
                ensure!(ok(space.is_subset(&formula, &closure))?, "{ring} {e} {kind:?}: image outside closure");
            }
        }
    }
    Ok(format!(
        "{rings} rings, {sets} sets; limit points of infinite products are fixed by the symbolic rules, not by brute force"
    ))
}

fn patch_images() -> Outcome {
    let mut finite = 0;
    for ring in zoo() {
        let space = ok(Space::new(&ring))?;
        let points = points_of(&space);
        if points.len() > 8 {
            continue;
        }
        for chosen in subsets(&points) {
            finite += 1;
            let e = explicit(&chosen);
            ensure!(ok(space.patch_closure(&e))? == e, "{ring}: patch closure of {e} moves");
            let img = ok(maps::residue_product_image(&ring, &e))?;
            ensure!(ok(space.same(&img, &e))?, "{ring}: residue image of {e} is {img}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let spaces = symbolic_spaces();
    for i in 0..200 {
        let (space, pool) = &spaces[i % spaces.len()];
        let e = random_symbolic(&mut rng, space, pool);
        let oracle = SymbolicOracle::new(space).closure(space, &e, Topology::Patch);
        let patch = ok(space.patch_closure(&e))?;
        let img = ok(maps::residue_product_image(space.ring(), &e))?;
        ensure!(ok(space.same(&patch, &oracle))?, "{}: patch closure of {e} is {patch}", space.ring());
        ensure!(ok(space.same(&img, &patch))?, "{}: residue image of {e} is {img}", space.ring());
    }
    Ok(format!("{finite} finite sets, 200 symbolic sets"))
}

fn density_criteria() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (space, pool) in symbolic_spaces() {
        let ring = space.ring().clone();
        let holding = if space.is_supplement() { Topology::Flat } else { Topology::Zariski };
        let failing = if space.is_supplement() { Topology::Zariski } else { Topology::Flat };
        let cert = ok(space.density_criterion(holding))?;
        ensure!(cert.holds && ok(space.check_certificate(&cert))?, "{ring}: {holding} criterion");
        for _ in 0..50 {
            let mut e = random_symbolic(&mut rng, &space, &pool);
            while e.is_finite() {
                e = random_symbolic(&mut rng, &space, &pool);
            }
            ensure!(ok(space.is_dense(&e, holding))?, "{ring}: {e} not {holding} dense");
            // a nonzero element lies in finitely many primes, so it misses a
            // point of any cofinite set; checked on integers by hand
            if ring == RingExpr::Integers {
                let a = rng.gen_range(2..10_000u64);
                let escapes = (2..200u64)
                    .filter(|&p| is_prime(p) && a % p != 0)
                    .any(|p| ok(space.contains(&e, &PrimePoint::z_max(p))).unwrap_or(false));
                ensure!(escapes, "{e} lies inside V({a})");
            }
        }
        let cert = ok(space.density_criterion(failing))?;
        ensure!(!cert.holds, "{ring}: {failing} criterion should fail");
        ensure!(ok(space.check_certificate(&cert))?, "{ring}: witness does not verify");
        let a = cert.witness.clone().ok_or("no witness")?;
        let locus = match failing {
            Topology::Zariski => ok(space.v_locus(&a))?,
            _ => ok(space.d_locus(&a))?,
        };
        ensure!(!locus.is_finite(), "{ring}: locus of {a} is finite");
        ensure!(ok(space.closure(&locus, failing))? != SpecSubset::Whole, "{ring}: locus of {a} is dense");
        if ring == RingExpr::Integers {
            ensure!(!ok(space.contains(&locus, &PrimePoint::z_max(2)))?, "D(2) contains 2Z");
        }
    }
    Ok("Z, F_2[x] zariski and supplement flat; failure witnesses verify".into())
}

fn closure_axioms() -> Outcome {
    let topologies = [Topology::Zariski, Topology::Flat, Topology::Patch];
    let mut checked = 0;
    for ring in zoo() {
        let space = ok(Space::new(&ring))?;
        let points = points_of(&space);
        if points.len() > 8 {
            continue;
        }
        let all: Vec<BTreeSet<PrimePoint>> = subsets(&points).collect();
        for (i, chosen) in all.iter().enumerate() {
            checked += 1;
            let e = explicit(chosen);
            let other = &all[(i * 7 + 3) % all.len()];
            let oe = explicit(other);
            let expect = [explicit(&up(&points, chosen)), explicit(&down(&points, chosen)), e.clone()];
            for (t, want) in topologies.iter().zip(&expect) {
                let c = ok(space.closure(&e, *t))?;
                ensure!(ok(space.same(&c, want))?, "{ring} {t}: closure of {e} is {c}, expected {want}");
                ensure!(ok(space.same(&ok(space.closure(&c, *t))?, &c))?, "{ring} {t}: not idempotent on {e}");
                let joint = ok(space.closure(&ok(space.union(&e, &oe))?, *t))?;
                let split = ok(space.union(&c, &ok(space.closure(&oe, *t))?))?;
                ensure!(ok(space.same(&joint, &split))?, "{ring} {t}: not additive on {e}, {oe}");
            }
            let spec_stable = up(&points, chosen) == *chosen;
            let gen_stable = down(&points, chosen) == *chosen;
            ensure!(ok(space.is_stable(&e, Stability::Specialization))? == spec_stable, "{ring}: stability of {e}");
            ensure!(ok(space.is_stable(&e, Stability::Generalization))? == gen_stable, "{ring}: stability of {e}");
            ensure!(ok(space.is_closed(&e, Topology::Zariski))? == spec_stable, "{ring}: zariski closed {e}");
            ensure!(ok(space.is_closed(&e, Topology::Flat))? == gen_stable, "{ring}: flat closed {e}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let spaces = symbolic_spaces();
    for i in 0..500 {
        let (space, pool) = &spaces[i % spaces.len()];
        let oracle = SymbolicOracle::new(space);
        let e = random_symbolic(&mut rng, space, pool);
        let other = random_symbolic(&mut rng, space, pool);
        for t in topologies {
            let c = ok(space.closure(&e, t))?;
            let want = oracle.closure(space, &e, t);
            ensure!(ok(space.same(&c, &want))?, "{} {t}: closure of {e} is {c}, expected {want}", space.ring());
            ensure!(ok(space.is_subset(&e, &c))?, "{} {t}: not extensive on {e}", space.ring());
            ensure!(ok(space.same(&ok(space.closure(&c, t))?, &c))?, "{} {t}: not idempotent on {e}", space.ring());
            let joint = ok(space.closure(&ok(space.union(&e, &other))?, t))?;
            let split = ok(space.union(&c, &ok(space.closure(&other, t))?))?;
            ensure!(ok(space.same(&joint, &split))?, "{} {t}: not additive on {e}, {other}", space.ring());
        }
        let z = ok(space.zariski_closure(&e))?;
        let f = ok(space.flat_closure(&e))?;
        ensure!(ok(space.is_stable(&z, Stability::Specialization))?, "{}: zariski closure of {e} unstable", space.ring());
        ensure!(ok(space.is_stable(&f, Stability::Generalization))?, "{}: flat closure of {e} unstable", space.ring());
        if ok(space.is_closed(&e, Topology::Patch))? {
            ensure!(
                ok(space.is_stable(&e, Stability::Specialization))? == ok(space.is_closed(&e, Topology::Zariski))?,
                "{}: zariski characterization fails on {e}",
                space.ring()
            );
            ensure!(
                ok(space.is_stable(&e, Stability::Generalization))? == ok(space.is_closed(&e, Topology::Flat))?,
                "{}: flat characterization fails on {e}",
                space.ring()
            );
        }
    }
    Ok(format!("{checked} finite sets, 500 symbolic sets"))
}

fn lying_over() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut lifts = 0;
    for i in 0..50 {
        let (map, minimal): (RingMapSpec, Vec<PrimePoint>) = match i % 3 {
            0 => {
                let n = rng.gen_range(2..=2000u64);
                let mut divisors = Vec::new();
                let mut l = 1u64;
                while l != n {
                    let d = loop {
                        let d = rng.gen_range(2..=n);
                        if n % d == 0 {
                            break d;
                        }
                    };
                    divisors.push(d);
                    l = l / gcd(l, d) * d;
                }
                let primes = trial_factor(n).into_iter().map(|p| PrimePoint::ZmodPrime { p }).collect();
                (RingMapSpec::DiagonalIntoModProduct { n, divisors }, primes)
            }
            1 => {
                let n = rng.gen_range(2..=2000u64);
                let ring = ok(RingExpr::zmod(n))?;
                let primes: Vec<PrimePoint> = trial_factor(n).into_iter().map(|p| PrimePoint::ZmodPrime { p }).collect();
                let set = SpecSubset::explicit(primes.clone());
                (RingMapSpec::IntoLocalProduct { ring, set }, primes)
            }
            _ => {
                let n = rng.gen_range(2..=5usize);
                let ring = ok(RingExpr::supplement(CoefficientField::Prime(2), n))?;
                let minimal: Vec<PrimePoint> =
                    (1..=n as u32).map(|k| PrimePoint::mono((1..=n as u32).filter(|&j| j != k))).collect();
                let set = SpecSubset::explicit(minimal.clone());
                if rng.gen_bool(0.5) {
                    (RingMapSpec::IntoQuotientProduct { ring, set }, minimal)
                } else {
                    (RingMapSpec::IntoLocalProduct { ring, set }, minimal)
                }
            }
        };
        ensure!(ok(maps::is_injective(&map))?, "{map} reported not injective");
        let target = ok(map.target())?;
        for p in &minimal {
            let q = ok(maps::laying_over(&map, p))?;
            ok(validate_point(&q, &target))?;
            ensure!(ok(maps::contract(&map, &q))? == *p, "{map}: {q} does not contract to {p}");
            if let (RingMapSpec::DiagonalIntoModProduct { divisors, .. }, PrimePoint::TamePrime { slot, inner }) = (&map, &q) {
                let PrimePoint::ZmodPrime { p: r } = **inner else { return Err(format!("{q} is not a prime of Z/d")) };
                ensure!(PrimePoint::ZmodPrime { p: r } == *p && divisors[*slot] % r == 0, "{map}: {q} over {p}");
            }
            lifts += 1;
        }
    }
    Ok(format!("50 maps, {lifts} minimal primes lifted"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("finite closure formula", finite_closure_formula),
        ("cofinite quotient image over Z", cofinite_image_over_z),
        ("Dedekind images", dedekind_images),
        ("supplement images", supplement_images),
        ("supplement structure", supplement_theorem),
        ("image oracle agreement", oracle_agreement),
        ("patch closure as residue image", patch_images),
        ("density criteria", density_criteria),
        ("closure axioms", closure_axioms),
        ("lying over", lying_over),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
