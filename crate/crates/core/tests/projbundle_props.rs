use curvecount::{ChernVector, ChowClass, GrassmannianRing, ProjBundleElement, ProjBundleRing};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Bundles built from `U*` on a few Grassmannians: `(r, n, sym degree, twist, trivial summands)`.
fn bundle(r: u32, n: u32, d: u32, twist: i64, extra: usize) -> ChernVector<GrassmannianRing> {
    let g = GrassmannianRing::new(r, n).unwrap();
    let base = ChernVector::universal_dual(g).sym_power(d).unwrap();
    let t = ChowClass::special(g, 1).scale(&BigInt::from(twist));
    let twisted = base.tensor_line(&t);
    twisted
        .whitney_sum(&ChernVector::trivial(g, extra))
        .unwrap()
}

fn bundle_strategy() -> impl Strategy<Value = ProjBundleRing> {
    (
        prop::sample::select(vec![(1u32, 3u32), (2, 4), (2, 5), (3, 5)]),
        1u32..=2,
        -2i64..=2,
        0usize..=1,
    )
        .prop_map(|((r, n), d, t, e)| ProjBundleRing::new(bundle(r, n, d, t, e)).unwrap())
}

fn class_in(g: GrassmannianRing) -> impl Strategy<Value = ChowClass> {
    let basis = g.basis();
    let len = basis.len();
    prop::collection::vec((0..len, -4i64..=4), 0..=3).prop_map(move |terms| {
        ChowClass::from_terms(
            g,
            terms
                .into_iter()
                .map(|(i, c)| (basis[i].clone(), BigInt::from(c))),
        )
        .unwrap()
    })
}

/// A raw polynomial `Σ a_i ζ^i` of ζ-degree up to `2s + 1`.
fn raw_in(p: &ProjBundleRing) -> impl Strategy<Value = Vec<ChowClass>> {
    prop::collection::vec(class_in(p.base()), 0..=2 * p.rank() + 2)
}

fn with_raw(n: usize) -> impl Strategy<Value = (ProjBundleRing, Vec<Vec<ChowClass>>)> {
    bundle_strategy().prop_flat_map(move |p| {
        let raws = prop::collection::vec(raw_in(&p), n);
        (Just(p), raws)
    })
}

fn mul(x: &ProjBundleElement, y: &ProjBundleElement) -> ProjBundleElement {
    x.multiply(y).unwrap()
}

/// Multiplies raw ζ-polynomials without any reduction.
fn raw_product(a: &[ChowClass], b: &[ChowClass], g: GrassmannianRing) -> Vec<ChowClass> {
    let mut out = vec![ChowClass::zero(g); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &x.multiply(y).unwrap();
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn reduction_is_confluent((p, raws) in with_raw(2)) {
        // reducing before or after multiplying gives the same element
        let g = p.base();
        let x = p.element(raws[0].clone()).unwrap();
        let y = p.element(raws[1].clone()).unwrap();
        let direct = p.element(raw_product(&raws[0], &raws[1], g)).unwrap();
        prop_assert_eq!(mul(&x, &y), direct);
    }

    #[test]
    fn zeta_powers_compose(p in bundle_strategy(), a in 0usize..=6, b in 0usize..=6) {
        prop_assert_eq!(mul(&p.zeta_pow(a), &p.zeta_pow(b)), p.zeta_pow(a + b));
    }

    #[test]
    fn ring_axioms((p, raws) in with_raw(3)) {
        let xs: Vec<_> = raws.into_iter().map(|r| p.element(r).unwrap()).collect();
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(mul(x, y), mul(y, x));
        prop_assert_eq!(mul(&mul(x, y), z), mul(x, &mul(y, z)));
        prop_assert_eq!(mul(x, &(y + z)), &mul(x, y) + &mul(x, z));
        prop_assert_eq!(mul(x, &p.one()), x.clone());
    }

    #[test]
    fn projection_formula((p, raws) in with_raw(1), a in 0usize..64) {
        let g = p.base();
        let basis = g.basis();
        let a = ChowClass::schubert(g, basis[a % basis.len()].clone()).unwrap();
        let x = p.element(raws[0].clone()).unwrap();
        let lhs = mul(&p.pullback(&a).unwrap(), &x).pushforward();
        prop_assert_eq!(lhs, a.multiply(&x.pushforward()).unwrap());
        prop_assert_eq!(p.pushforward_raw(&raws[0]), x.pushforward());
    }

    #[test]
    fn pushforward_lowers_degree_by_fibre_dimension(p in bundle_strategy(), k in 0u32..=12) {
        let s = p.rank() as u32;
        let g = p.base();
        for raw_deg in 0..=k.min(2 * s + 2) {
            // ζ^i times a base class of degree k - i
            let i = raw_deg as usize;
            for lambda in g.basis().into_iter().filter(|l| l.weight() + raw_deg == k) {
                let mut raw = vec![ChowClass::zero(g); i + 1];
                raw[i] = ChowClass::schubert(g, lambda).unwrap();
                let pushed = p.element(raw).unwrap().pushforward();
                if k + 1 < s {
                    prop_assert!(pushed.is_zero());
                } else {
                    prop_assert!(pushed.is_homogeneous_of(k + 1 - s));
                }
            }
        }
    }
}

#[test]
fn trivial_bundle_is_a_product() {
    // P(O^s) over P^1 is P^1 × P^(s-1): ζ^s = 0 and ∫ h ζ^(s-1) = 1
    let g = GrassmannianRing::new(1, 2).unwrap();
    let h = ChowClass::special(g, 1);
    for s in 1..=5usize {
        let p = ProjBundleRing::new(ChernVector::trivial(g, s)).unwrap();
        assert_eq!(p.dim(), s as u32);
        assert!(p.zeta_pow(s).is_zero());
        let top = mul(&p.pullback(&h).unwrap(), &p.zeta_pow(s - 1));
        assert_eq!(top.integrate(), BigInt::from(1));
        assert_eq!(p.zeta_pow(s - 1).pushforward(), ChowClass::one(g));
    }
}

#[test]
fn split_bundle_over_the_line() {
    // E = O(a) ⊕ O(b) on P^1: ζ^2 = -(a + b) h ζ, so ∫ ζ^2 = s_1(E) = -(a + b)
    let g = GrassmannianRing::new(1, 2).unwrap();
    let h = ChowClass::special(g, 1);
    for (a, b) in [(0i64, 0i64), (1, 0), (2, -1), (-3, 5)] {
        let line = |k: i64| ChernVector::line(g, h.scale(&BigInt::from(k)));
        let e = line(a).whitney_sum(&line(b)).unwrap();
        let p = ProjBundleRing::new(e).unwrap();
        assert_eq!(p.zeta_pow(2).integrate(), BigInt::from(-(a + b)));
        assert_eq!(p.segre()[1], h.scale(&BigInt::from(-(a + b))));
    }
}

#[test]
fn top_zeta_power_integrates_to_a_segre_number() {
    // s(U*) = 1 / c(U*) = Σ (-1)^k σ_k, so ∫ ζ^(s-1+dim B) = (-1)^dim ∫ σ_dim
    for (r, n) in [(1u32, 2u32), (1, 3), (1, 5), (2, 4), (2, 5), (3, 6)] {
        let g = GrassmannianRing::new(r, n).unwrap();
        let p = ProjBundleRing::new(ChernVector::universal_dual(g)).unwrap();
        let dim = g.dim();
        let sigma = ChowClass::special(g, dim).integrate();
        let sign = if dim.is_multiple_of(2) { 1 } else { -1 };
        assert_eq!(
            p.zeta_pow(r as usize - 1 + dim as usize).integrate(),
            sigma * sign,
            "Gr({r},{n})"
        );
    }
    // P(U*) over Gr(2,4) is the point-line incidence variety of P^3
    let g = GrassmannianRing::new(2, 4).unwrap();
    assert_eq!(
        ProjBundleRing::new(ChernVector::universal_dual(g))
            .unwrap()
            .dim(),
        5
    );
}

#[test]
fn foreign_classes_are_rejected() {
    let g = GrassmannianRing::new(2, 4).unwrap();
    let other = GrassmannianRing::new(2, 5).unwrap();
    let p = ProjBundleRing::new(ChernVector::universal_dual(g)).unwrap();
    assert!(p.pullback(&ChowClass::one(other)).is_err());
    let q = ProjBundleRing::new(ChernVector::universal_dual(other)).unwrap();
    assert!(p.one().multiply(&q.one()).is_err());
}
