use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use primespec::construction;
use primespec::maps::{self, FactorKind, RingMapSpec};
use primespec::products;
use primespec::rings::{monomial, MPoly, Monomial, MonomialRing};
use primespec::spectrum::{leq_specialization, Space};
use primespec::topology::Stability;
use primespec::{CoefficientField, IdealRepr, PrimePoint, RingElement, RingExpr, SpecSubset, Topology};
use proptest::prelude::*;

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn trial_primes(mut n: u64) -> Vec<u64> {
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

fn small_factor() -> impl Strategy<Value = RingExpr> {
    prop_oneof![
        (2u64..60).prop_map(|n| RingExpr::zmod(n).unwrap()),
        prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(|p| RingExpr::prime_field(p).unwrap()),
        (1usize..=3).prop_map(|n| RingExpr::supplement(CoefficientField::Prime(2), n).unwrap()),
    ]
}

/// A quotient that stays of dimension at most one: some variables are
/// killed and the rest pairwise multiply to zero.
fn supplement_like(n: usize, killed: &BTreeSet<u32>) -> MonomialRing {
    let alive: Vec<u32> = (1..=n as u32).filter(|i| !killed.contains(i)).collect();
    let mut gens: Vec<Monomial> = killed.iter().map(|&k| monomial::variable(k, n)).collect();
    for (a, &i) in alive.iter().enumerate() {
        for &k in &alive[a + 1..] {
            gens.push(monomial::from_support(&[i, k].into(), n));
        }
    }
    MonomialRing::new(CoefficientField::Prime(2), n, gens).unwrap()
}

fn localized_monomial() -> impl Strategy<Value = RingExpr> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::btree_set(1..=n as u32, 0..n).prop_map(move |k| RingExpr::localized(supplement_like(n, &k)).unwrap())
    })
}

fn element_of(ring: &RingExpr, seed: u64) -> RingElement {
    let mut s = seed;
    let mut next = || {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        s >> 33
    };
    match ring {
        RingExpr::Integers => RingElement::int(next() as i64 % 2000 - 1000),
        RingExpr::ZMod { n, .. } => RingElement::Mod(next() % n),
        RingExpr::PrimeField(p) => RingElement::Mod(next() % p),
        RingExpr::FpPoly(p) => RingElement::Poly((0..next() % 5).map(|_| next() % p).collect()),
        RingExpr::Product(f) => {
            RingElement::Tuple(f.iter().map(|r| element_of(r, next())).collect())
        }
        _ => {
            let nvars = ring.monomial_ring().map_or(5, MonomialRing::nvars);
            let terms = (0..next() % 4).map(|_| {
                let e: Monomial = (0..nvars).map(|_| (next() % 3) as u32).collect();
                (e, rat(next() as i64 % 5 - 2))
            });
            RingElement::MPoly(MPoly::from_terms(terms))
        }
    }
}

fn enumerable_rings() -> Vec<RingExpr> {
    let zm = |n| RingExpr::zmod(n).unwrap();
    let supp = |n| RingExpr::supplement(CoefficientField::Prime(3), n).unwrap();
    vec![
        zm(12),
        zm(2310),
        RingExpr::prime_field(5).unwrap(),
        supp(1),
        supp(3),
        supp(6),
        RingExpr::product(vec![zm(6), zm(4), supp(2), RingExpr::prime_field(2).unwrap()]).unwrap(),
        RingExpr::product(vec![supp(2), supp(1)]).unwrap(),
    ]
}

fn symbolic_spaces() -> Vec<Space> {
    [RingExpr::Integers, RingExpr::fp_poly(3).unwrap(), RingExpr::SymbolicSupplement(CoefficientField::Rational)]
        .iter()
        .map(|r| Space::new(r).unwrap())
        .collect()
}

fn symbolic_set(space: &Space, mentioned: &[usize], special: bool, cofinite: bool) -> SpecSubset {
    if space.is_supplement() {
        let ks = mentioned.iter().map(|&k| k as u64 + 1);
        if cofinite {
            return SpecSubset::cofinite_min(ks, special);
        }
        let mut pts: Vec<PrimePoint> = ks.map(|k| PrimePoint::SuppMin { k }).collect();
        if special {
            pts.push(PrimePoint::SuppTop);
        }
        return SpecSubset::explicit(pts);
    }
    let pool = space.fresh_points(&BTreeSet::new(), 12);
    let pts: Vec<PrimePoint> = mentioned.iter().map(|&i| pool[i % pool.len()].clone()).collect();
    if cofinite {
        return SpecSubset::cofinite_closed(pts, special);
    }
    let mut pts = pts;
    if special {
        pts.push(space.generic_point().unwrap().clone());
    }
    SpecSubset::explicit(pts)
}

fn any_symbolic() -> impl Strategy<Value = (usize, Vec<usize>, bool, bool)> {
    (0usize..3, prop::collection::vec(0usize..12, 0..5), any::<bool>(), any::<bool>())
}

// ------------------------------------------------------------------ rings

proptest! {
    #[test]
    fn normalize_is_idempotent(ring in prop_oneof![
        Just(RingExpr::Integers),
        (2u64..500).prop_map(|n| RingExpr::zmod(n).unwrap()),
        Just(RingExpr::fp_poly(5).unwrap()),
        localized_monomial(),
        prop::collection::vec(small_factor(), 1..=3).prop_map(|f| RingExpr::product(f).unwrap()),
    ], seed in any::<u64>()) {
        let e = element_of(&ring, seed);
        let once = ring.normalize(&e).unwrap();
        prop_assert_eq!(ring.normalize(&once).unwrap(), once);
    }

    #[test]
    fn product_predicates_are_componentwise(
        factors in prop::collection::vec(prop_oneof![
            (2u64..200).prop_map(|n| RingExpr::zmod(n).unwrap()),
            prop::sample::select(vec![2u64, 3, 11]).prop_map(|p| RingExpr::prime_field(p).unwrap()),
        ], 1..=3),
        seed in any::<u64>(),
    ) {
        let ring = RingExpr::product(factors.clone()).unwrap();
        let RingElement::Tuple(items) = element_of(&ring, seed) else { unreachable!() };
        let x = RingElement::Tuple(items.clone());
        let unit = factors.iter().zip(&items).all(|(r, y)| r.is_unit(y).unwrap());
        let regular = factors.iter().zip(&items).all(|(r, y)| r.is_regular(y).unwrap());
        prop_assert_eq!(ring.is_unit(&x).unwrap(), unit);
        prop_assert_eq!(ring.is_regular(&x).unwrap(), regular);
    }

    #[test]
    fn principal_intersections_are_a_semilattice(n in 2u64..5000, a in 0u64..5000, b in 0u64..5000, c in 0u64..5000) {
        let ring = RingExpr::zmod(n).unwrap();
        let ideal = |v: u64| IdealRepr::principal(&RingElement::Mod(v % n), &ring).unwrap();
        let (i, j, k) = (ideal(a), ideal(b), ideal(c));
        let meet = |x: &IdealRepr, y: &IdealRepr| ring.ideal_intersect(x, y).unwrap();
        prop_assert_eq!(meet(&i, &j), meet(&j, &i));
        prop_assert_eq!(meet(&meet(&i, &j), &k), meet(&i, &meet(&j, &k)));
        prop_assert_eq!(meet(&i, &i), i.clone());
        for v in 0..n.min(200) {
            let x = RingElement::Mod(v);
            let both = ring.ideal_member(&i, &x).unwrap() && ring.ideal_member(&j, &x).unwrap();
            prop_assert_eq!(ring.ideal_member(&meet(&i, &j), &x).unwrap(), both);
        }
    }

    #[test]
    fn monomial_intersections_match_membership(
        a in prop::collection::vec(prop::collection::vec(0u32..3, 5), 1..=3),
        b in prop::collection::vec(prop::collection::vec(0u32..3, 5), 1..=3),
        c in prop::collection::vec(prop::collection::vec(0u32..3, 5), 1..=3),
    ) {
        let m = MonomialRing::new(CoefficientField::Rational, 5, vec![vec![1, 1, 1, 1, 1]]).unwrap();
        let ring = RingExpr::MonomialQuotient(m);
        let (i, j, k) = (IdealRepr::monomial(a), IdealRepr::monomial(b), IdealRepr::monomial(c));
        let meet = |x: &IdealRepr, y: &IdealRepr| ring.ideal_intersect(x, y).unwrap();
        prop_assert_eq!(meet(&i, &j), meet(&j, &i));
        prop_assert_eq!(meet(&meet(&i, &j), &k), meet(&i, &meet(&j, &k)));
        prop_assert_eq!(meet(&i, &i), i.clone());
        let ij = meet(&i, &j);
        // every monomial of total degree at most 4
        let mut stack = vec![vec![0u32; 5]];
        while let Some(e) = stack.pop() {
            let x = RingElement::MPoly(MPoly::monomial(e.clone(), rat(1)));
            let both = ring.ideal_member(&i, &x).unwrap() && ring.ideal_member(&j, &x).unwrap();
            prop_assert_eq!(ring.ideal_member(&ij, &x).unwrap(), both, "{:?}", e);
            if e.iter().sum::<u32>() < 4 {
                for v in 0..5 {
                    let mut f = e.clone();
                    f[v] += 1;
                    if f.iter().skip(v + 1).all(|&x| x == 0) {
                        stack.push(f);
                    }
                }
            }
        }
    }
}

#[test]
fn units_are_regular_and_nonzero_nilpotents_are_not() {
    for n in 2..=300u64 {
        let ring = RingExpr::zmod(n).unwrap();
        for v in 0..n {
            let x = RingElement::Mod(v);
            if ring.is_unit(&x).unwrap() {
                assert!(ring.is_regular(&x).unwrap(), "{v} in Z/{n}");
            }
            if ring.is_nilpotent(&x).unwrap() && v != 0 {
                assert!(!ring.is_regular(&x).unwrap(), "{v} in Z/{n}");
            }
        }
    }
}

#[test]
fn nilradical_of_zmod_is_generated_by_the_radical() {
    for n in 2..=10_000u64 {
        let rad: u64 = trial_primes(n).iter().product();
        let got = RingExpr::zmod(n).unwrap().nilradical().unwrap();
        assert_eq!(got, IdealRepr::Principal { generator: RingElement::Mod(rad % n) }, "n = {n}");
    }
}

// --------------------------------------------------------------- spectrum

#[test]
fn specialization_is_a_partial_order() {
    let mut rings = enumerable_rings();
    for n in 2..=6usize {
        for killed in [BTreeSet::new(), BTreeSet::from([1]), (2..=n as u32).collect()] {
            rings.push(RingExpr::localized(supplement_like(n, &killed)).unwrap());
        }
    }
    for ring in rings {
        let pts: Vec<PrimePoint> = Space::new(&ring).unwrap().points().unwrap().iter().cloned().collect();
        let leq = |a: &PrimePoint, b: &PrimePoint| leq_specialization(a, b, &ring).unwrap();
        for a in &pts {
            assert!(leq(a, a));
            for b in &pts {
                if a != b {
                    assert!(!(leq(a, b) && leq(b, a)), "{ring}: {a} {b}");
                }
                for c in &pts {
                    if leq(a, b) && leq(b, c) {
                        assert!(leq(a, c), "{ring}: {a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn enumerated_monomial_primes_cover_every_generator() {
    for n in 1..=6usize {
        for mask in 0u32..1 << n {
            let killed: BTreeSet<u32> = (1..=n as u32).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let m = supplement_like(n, &killed);
            let gens = m.gens().to_vec();
            if gens.is_empty() {
                continue;
            }
            for ring in [RingExpr::localized(m.clone()).unwrap(), RingExpr::MonomialQuotient(m)] {
                let Ok(space) = Space::new(&ring) else { continue };
                let Ok(points) = space.points() else { continue };
                for p in points {
                    let PrimePoint::MonoPrime { cover } = p else { panic!("{p}") };
                    for g in &gens {
                        assert!(!cover.is_disjoint(&monomial::support(g)), "{cover:?} misses {g:?}");
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn d_locus_complements_v_locus(idx in 0usize..8, seed in any::<u64>()) {
        let ring = enumerable_rings()[idx].clone();
        let space = Space::new(&ring).unwrap();
        let r = element_of(&ring, seed);
        let v = space.v_locus(&r).unwrap();
        let d = space.d_locus(&r).unwrap();
        for p in space.points().unwrap() {
            let inside = space.point_contains(p, &r).unwrap();
            prop_assert_eq!(space.contains(&v, p).unwrap(), inside);
            prop_assert_eq!(space.contains(&d, p).unwrap(), !inside);
        }
    }

    #[test]
    fn symbolic_d_locus_complements_v_locus(which in 0usize..3, seed in any::<u64>()) {
        let space = &symbolic_spaces()[which];
        let r = element_of(space.ring(), seed);
        let v = space.v_locus(&r).unwrap();
        let d = space.d_locus(&r).unwrap();
        let mut probes = space.fresh_points(&BTreeSet::new(), 100);
        probes.push(space.generic_point().cloned().unwrap_or(PrimePoint::SuppTop));
        for p in &probes {
            let inside = space.point_contains(p, &r).unwrap();
            prop_assert_eq!(space.contains(&v, p).unwrap(), inside, "{} {}", r, p);
            prop_assert_eq!(space.contains(&d, p).unwrap(), !inside, "{} {}", r, p);
        }
    }

    #[test]
    fn v_locus_of_a_product_is_the_union(a in 1i64..100_000, b in 1i64..100_000, pa in prop::collection::vec(0u64..3, 1..6), pb in prop::collection::vec(0u64..3, 1..6)) {
        let z = Space::new(&RingExpr::Integers).unwrap();
        let (x, y) = (RingElement::int(a), RingElement::int(b));
        let xy = RingExpr::Integers.mul(&x, &y).unwrap();
        prop_assert_eq!(z.v_locus(&xy).unwrap(), z.union(&z.v_locus(&x).unwrap(), &z.v_locus(&y).unwrap()).unwrap());
        let ring = RingExpr::fp_poly(3).unwrap();
        let f3 = Space::new(&ring).unwrap();
        let (f, g) = (RingElement::Poly(pa), RingElement::Poly(pb));
        if !ring.is_zero_element(&f).unwrap() && !ring.is_zero_element(&g).unwrap() {
            let fg = ring.mul(&f, &g).unwrap();
            prop_assert_eq!(
                f3.v_locus(&fg).unwrap(),
                f3.union(&f3.v_locus(&f).unwrap(), &f3.v_locus(&g).unwrap()).unwrap()
            );
        }
    }
}

// --------------------------------------------------------------- topology

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn symbolic_closure_axioms(a in any_symbolic(), b in any_symbolic()) {
        let spaces = symbolic_spaces();
        let space = &spaces[a.0];
        let e = symbolic_set(space, &a.1, a.2, a.3);
        let f = symbolic_set(space, &b.1, b.2, b.3);
        let big = space.union(&e, &f).unwrap();
        for t in [Topology::Zariski, Topology::Flat, Topology::Patch] {
            let c = space.closure(&e, t).unwrap();
            prop_assert!(space.is_subset(&e, &c).unwrap());
            prop_assert_eq!(space.closure(&c, t).unwrap(), c.clone());
            prop_assert!(space.is_subset(&c, &space.closure(&big, t).unwrap()).unwrap());
        }
        let p = space.patch_closure(&e).unwrap();
        let z = space.zariski_closure(&e).unwrap();
        let fl = space.flat_closure(&e).unwrap();
        prop_assert!(space.is_subset(&p, &z).unwrap() && space.is_subset(&p, &fl).unwrap());
        prop_assert_eq!(space.intersection(&p, &z).unwrap(), p.clone());
        prop_assert_eq!(space.intersection(&p, &fl).unwrap(), p.clone());
        // the patch closure is exactly where both product images meet
        let meet = space.intersection(
            &products::quotient_product_image(space.ring(), &e).unwrap(),
            &products::local_product_image(space.ring(), &e).unwrap(),
        ).unwrap();
        prop_assert_eq!(meet, p);
    }
}

proptest! {
    #[test]
    fn finite_closure_characterizations(ring in prop_oneof![
        localized_monomial(),
        prop::collection::vec(small_factor(), 1..=2).prop_map(|f| RingExpr::product(f).unwrap()),
    ], mask in any::<u64>(), other in any::<u64>()) {
        let space = Space::new(&ring).unwrap();
        let pts: Vec<PrimePoint> = space.points().unwrap().iter().cloned().collect();
        let pick = |m: u64| SpecSubset::explicit(pts.iter().enumerate().filter(|(i, _)| m >> (i % 64) & 1 == 1).map(|(_, p)| p.clone()));
        let (e, f) = (pick(mask), pick(other));
        for t in [Topology::Zariski, Topology::Flat, Topology::Patch] {
            let c = space.closure(&e, t).unwrap();
            prop_assert!(space.is_subset(&e, &c).unwrap());
            prop_assert!(space.same(&space.closure(&c, t).unwrap(), &c).unwrap());
            prop_assert!(space.is_subset(&c, &space.closure(&space.union(&e, &f).unwrap(), t).unwrap()).unwrap());
        }
        let patch_fixed = space.same(&space.patch_closure(&e).unwrap(), &e).unwrap();
        prop_assert!(patch_fixed);
        prop_assert_eq!(
            space.same(&space.zariski_closure(&e).unwrap(), &e).unwrap(),
            patch_fixed && space.is_stable(&e, Stability::Specialization).unwrap()
        );
        prop_assert_eq!(
            space.same(&space.flat_closure(&e).unwrap(), &e).unwrap(),
            patch_fixed && space.is_stable(&e, Stability::Generalization).unwrap()
        );
        // images of the two products
        for (kind, closure) in [(FactorKind::Quotient, space.zariski_closure(&e).unwrap()), (FactorKind::Local, space.flat_closure(&e).unwrap())] {
            let img = products::product_image(&ring, &e, kind).unwrap();
            prop_assert!(space.is_subset(&e, &img).unwrap());
            prop_assert!(space.is_subset(&img, &closure).unwrap());
            prop_assert!(space.same(&products::brute_force_image(&ring, &e, kind).unwrap(), &img).unwrap());
        }
    }

    #[test]
    fn zariski_closure_of_primes_is_v_of_their_product(ps in prop::collection::btree_set(prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]), 1..6)) {
        let z = Space::new(&RingExpr::Integers).unwrap();
        let e = SpecSubset::explicit(ps.iter().map(|&p| PrimePoint::z_max(p)));
        let prod: i64 = ps.iter().map(|&p| p as i64).product();
        let meet = ps.iter().map(|&p| IdealRepr::Principal { generator: RingElement::int(p as i64) })
            .reduce(|a, b| RingExpr::Integers.ideal_intersect(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(meet, IdealRepr::Principal { generator: RingElement::int(prod) });
        prop_assert_eq!(z.zariski_closure(&e).unwrap(), z.v_locus(&RingElement::int(prod)).unwrap());
    }
}

#[test]
fn density_certificates_verify() {
    for space in symbolic_spaces() {
        for t in [Topology::Zariski, Topology::Flat] {
            let cert = space.density_criterion(t).unwrap();
            assert!(space.check_certificate(&cert).unwrap(), "{} {t}", space.ring());
            if cert.holds {
                for k in 0..50 {
                    let e = symbolic_set(&space, &[k % 12, (k * 5) % 12], k % 2 == 0, true);
                    assert!(space.is_dense(&e, t).unwrap(), "{} {e}", space.ring());
                }
            }
        }
    }
}

// --------------------------------------------------------------- products

#[test]
fn unit_idempotents_split_one() {
    for ring in enumerable_rings() {
        let Some(f) = ring.factors() else { continue };
        let es: Vec<RingElement> = (0..f.len()).map(|k| products::unit_idempotent(k, &ring).unwrap()).collect();
        let mut total = ring.zero().unwrap();
        for (i, a) in es.iter().enumerate() {
            total = ring.add(&total, a).unwrap();
            for (j, b) in es.iter().enumerate() {
                let ab = ring.mul(a, b).unwrap();
                if i == j {
                    assert_eq!(ring.normalize(&ab).unwrap(), ring.normalize(a).unwrap());
                } else {
                    assert!(ring.is_zero_element(&ab).unwrap());
                }
            }
        }
        assert_eq!(ring.normalize(&total).unwrap(), ring.one().unwrap());
    }
}

// ----------------------------------------------------------- construction

fn brute_minimal_covers(gens: &[Monomial], nvars: usize) -> BTreeSet<BTreeSet<u32>> {
    let supports: Vec<u32> = gens
        .iter()
        .map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | 1 << i))
        .collect();
    let covers: Vec<u32> = (0u32..1 << nvars).filter(|s| supports.iter().all(|g| g & s != 0)).collect();
    covers
        .iter()
        .filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t))
        .map(|&s| (0..nvars as u32).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn minimal_primes_agree_with_cover_enumeration(nvars in 2usize..=10, seed in prop::collection::vec(prop::collection::btree_set(0u32..10, 1..=3), 1..=6)) {
        let gens: Vec<Monomial> = seed
            .iter()
            .map(|s| monomial::from_support(&s.iter().map(|i| i % nvars as u32 + 1).collect(), nvars))
            .collect();
        let ideal = IdealRepr::monomial(gens.clone());
        let got: BTreeSet<BTreeSet<u32>> = construction::minimal_primes_monomial(&ideal, nvars, false)
            .unwrap()
            .into_iter()
            .map(|p| match p { PrimePoint::MonoPrime { cover } => cover, other => panic!("{other}") })
            .collect();
        prop_assert_eq!(got, brute_minimal_covers(&gens, nvars));
    }
}

#[test]
fn supplement_components_are_dual() {
    for n in 2..=8usize {
        let ring = RingExpr::supplement(CoefficientField::Prime(2), n).unwrap();
        let space = Space::new(&ring).unwrap();
        let top = PrimePoint::mono(1..=n as u32);
        for k in 1..=n as u32 {
            let pk = PrimePoint::mono((1..=n as u32).filter(|&i| i != k));
            let e = SpecSubset::explicit([pk.clone()]);
            assert_eq!(space.zariski_closure(&e).unwrap(), SpecSubset::explicit([pk.clone(), top.clone()]));
            assert_eq!(space.flat_closure(&e).unwrap(), e);
        }
    }
}

#[test]
fn chain_spectra_are_packed_and_zipped() {
    // every chain of primes the ring kinds produce: a point, and two points
    let chains = [
        RingExpr::zmod(8).unwrap(),
        RingExpr::zmod(3).unwrap(),
        RingExpr::prime_field(5).unwrap(),
        RingExpr::Rationals,
        RingExpr::supplement(CoefficientField::Prime(2), 1).unwrap(),
        RingExpr::supplement(CoefficientField::Rational, 1).unwrap(),
    ];
    for ring in chains {
        let space = Space::new(&ring).unwrap();
        let pts: Vec<&PrimePoint> = space.points().unwrap().iter().collect();
        assert!(pts.iter().all(|a| pts.iter().all(|b| space.leq(a, b) || space.leq(b, a))), "{ring}");
        assert!(construction::pz_check(&ring).unwrap(), "{ring}");
        assert!(construction::cp_check(&ring).unwrap(), "{ring}");
    }
}

// ------------------------------------------------------------------- maps

#[test]
fn lifts_round_trip_through_local_products() {
    for ring in enumerable_rings() {
        let space = Space::new(&ring).unwrap();
        let map = RingMapSpec::IntoLocalProduct { ring: ring.clone(), set: space.whole() };
        let pts = space.points().unwrap();
        for p in pts.iter().filter(|p| !pts.iter().any(|q| q != *p && space.leq(q, p))) {
            let q = maps::laying_over(&map, p).unwrap();
            assert_eq!(&maps::contract(&map, &q).unwrap(), p, "{ring}");
        }
    }
}

#[test]
fn contraction_is_monotone() {
    for ring in enumerable_rings() {
        let space = Space::new(&ring).unwrap();
        for map in [
            RingMapSpec::IntoQuotientProduct { ring: ring.clone(), set: space.whole() },
            RingMapSpec::IntoLocalProduct { ring: ring.clone(), set: space.whole() },
        ] {
            let target = Space::new(&map.target().unwrap()).unwrap();
            let tpts: Vec<PrimePoint> = target.points().unwrap().iter().cloned().collect();
            for a in &tpts {
                for b in &tpts {
                    if target.leq(a, b) {
                        let (ca, cb) = (maps::contract(&map, a).unwrap(), maps::contract(&map, b).unwrap());
                        assert!(space.leq(&ca, &cb), "{map}: {a} <= {b} but {ca} vs {cb}");
                    }
                }
            }
        }
    }
}
