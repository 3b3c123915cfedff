mod common;

use std::sync::OnceLock;

use hyplab::constructions::{
    double_coset_hypergroup, double_cosets, gallery, product, two_element, FiniteGroup, GALLERY_NAMES,
};
use hyplab::continuous::{legendre, IntervalHypergroup};
use hyplab::io::{emit_hyp, parse_hyp, HypFile};
use hyplab::{characters, index_lower_bound, FiniteHypergroup, Measure, MeasureKind, Rational, Scalar};
use num_complex::Complex64;
use proptest::prelude::*;

use common::{group_zoo, subgroups};

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

/// Exact instances: the exact gallery, a few two-element members, small
/// products and every double coset hypergroup of S3, D4 and A4.
fn instances() -> &'static [FiniteHypergroup<Rational>] {
    static CELL: OnceLock<Vec<FiniteHypergroup<Rational>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for name in GALLERY_NAMES {
            if let hyplab::AnyHypergroup::Exact(h) = gallery(name).unwrap().hypergroup {
                out.push(h);
            }
        }
        for (n, d) in [(1, 1), (5, 2), (7, 1)] {
            out.push(two_element(q(n, d)).unwrap());
        }
        out.push(product(&two_element(q(3, 1)).unwrap(), &two_element(q(4, 3)).unwrap()));
        for g in [FiniteGroup::symmetric(3), FiniteGroup::dihedral(4), FiniteGroup::alternating(4)] {
            for h in g.all_subgroups() {
                out.push(double_coset_hypergroup(&g, &h).unwrap().0);
            }
        }
        out
    })
}

fn signed_weights(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-6i64..=6, 1i64..=5), len).prop_map(|v| v.into_iter().map(|(n, d)| q(n, d)).collect())
}

fn probability(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(0i64..=9, len).prop_filter_map("nonzero mass", |v| {
        let total: i64 = v.iter().sum();
        (total > 0).then(|| v.iter().map(|&n| q(n, total)).collect())
    })
}

fn instance_and<T: std::fmt::Debug, S: Strategy<Value = T>>(
    f: impl Fn(usize) -> S + Clone + 'static,
) -> impl Strategy<Value = (usize, T)> {
    (0..instances().len()).prop_flat_map(move |i| (Just(i), f.clone()(instances()[i].len())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_reverses_convolution(
        (i, (a, b)) in instance_and(|n| (signed_weights(n), signed_weights(n)))
    ) {
        let h = &instances()[i];
        let (mu, nu) = (Measure::signed(a), Measure::signed(b));
        let lhs = h.involute(&h.convolve(&mu, &nu).unwrap()).unwrap();
        let rhs = h.convolve(&h.involute(&nu).unwrap(), &h.involute(&mu).unwrap()).unwrap();
        prop_assert_eq!(lhs.weights(), rhs.weights());
    }

    #[test]
    fn haar_absorbs_probabilities((i, w) in instance_and(probability)) {
        let h = &instances()[i];
        let haar = h.haar().unwrap();
        let mu = Measure::new(w, MeasureKind::Probability, 0.0).unwrap();
        let (left, right) = (h.convolve(&mu, &haar).unwrap(), h.convolve(&haar, &mu).unwrap());
        prop_assert_eq!(left.weights(), haar.weights());
        prop_assert_eq!(right.weights(), haar.weights());
    }

    #[test]
    fn convolution_is_associative_on_measures(
        (i, (a, b, c)) in instance_and(|n| (signed_weights(n), signed_weights(n), signed_weights(n)))
    ) {
        let h = &instances()[i];
        let (x, y, z) = (Measure::signed(a), Measure::signed(b), Measure::signed(c));
        let left = h.convolve(&h.convolve(&x, &y).unwrap(), &z).unwrap();
        let right = h.convolve(&x, &h.convolve(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left.weights(), right.weights());
    }

    #[test]
    fn plancherel_and_inversion(
        (i, f) in instance_and(|n| prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n))
    ) {
        let h = &instances()[i];
        prop_assume!(h.is_commutative());
        let t = characters(h).unwrap();
        let f: Vec<Complex64> = f.into_iter().map(|(re, im)| Complex64::new(re, im)).collect();
        prop_assert!(t.plancherel_residual(&f).unwrap() <= 1e-10);
        let back = t.inverse_fourier(&t.fourier(&f).unwrap()).unwrap();
        for (a, b) in back.iter().zip(&f) {
            prop_assert!((a - b).norm() <= 1e-10);
        }
    }

    #[test]
    fn index_bound_dominates_weight((i, x, b) in (0..64usize, 0..64usize, 1i64..20).prop_map(|(i, x, b)| {
        let i = i % instances().len();
        (i, x % instances()[i].len(), b)
    })) {
        let h = &instances()[i];
        let w = h.weight(x).unwrap();
        prop_assert!(w >= q(1, 1));
        prop_assert!(index_lower_bound(h, x, q(b, 1)).unwrap() >= w);
    }

    #[test]
    fn exact_round_trip(i in 0..64usize) {
        let h = instances()[i % instances().len()].clone();
        let file = HypFile::new(h.clone()).named("instance");
        let back = parse_hyp(&emit_hyp(&file)).unwrap();
        prop_assert_eq!(back, file);
    }

    #[test]
    fn float_round_trip_is_bit_exact(w in 1.0f64..1e6) {
        let file = HypFile::new(two_element(w).unwrap());
        let back = parse_hyp(&emit_hyp(&file)).unwrap();
        let (hyplab::AnyHypergroup::Float(a), hyplab::AnyHypergroup::Float(b)) = (&file.hypergroup, &back.hypergroup) else {
            panic!("float mode expected");
        };
        let same = a.constants().iter().zip(b.constants()).all(|(x, y)| x.to_bits() == y.to_bits());
        prop_assert!(same);
    }

    #[test]
    fn lift_then_push_is_identity((g, h, seed) in (0..17usize, 0..64usize, signed_weights(24))) {
        let zoo = group_zoo();
        let (_, group) = &zoo[g % zoo.len()];
        let subs = subgroups(group);
        let partition = double_cosets(group, &subs[h % subs.len()]).unwrap();
        let mu: Vec<Rational> = (0..partition.len()).map(|i| seed[i % seed.len()].clone()).collect();
        prop_assert_eq!(partition.push_forward(&partition.lift(&mu)), mu);
    }

    #[test]
    fn interval_convolution_symmetries(s in -1.0f64..=1.0, t in -1.0f64..=1.0, n in 0usize..=8) {
        let k = IntervalHypergroup::new(3, 8, 256).unwrap();
        let f = |x: f64| (1.3 * x).sin() + legendre(n, x);
        prop_assert_eq!(k.conv_apply(s, t, f).unwrap(), k.conv_apply(t, s, f).unwrap());
        prop_assert_eq!(k.conv_apply(1.0, t, f).unwrap(), f(t));
        prop_assert_eq!(k.conv_apply(-1.0, t, f).unwrap(), f(-t));
        prop_assert_eq!(k.conv_apply(s, t, |_| 1.0).unwrap(), 1.0);
        let p = k.conv_apply(s, t, |x| legendre(n, x)).unwrap();
        prop_assert!((p - legendre(n, s) * legendre(n, t)).abs() <= 1e-12);
    }
}

#[test]
fn double_coset_hyperdimensions_are_integers() {
    let mut checked = 0;
    for (_, g) in group_zoo() {
        for h in subgroups(&g) {
            let (hyp, _) = double_coset_hypergroup(&g, &h).unwrap();
            if !hyp.is_commutative() {
                continue;
            }
            let t = characters(&hyp).unwrap();
            for &k in t.hyperdims() {
                assert!((k - k.round()).abs() <= 1e-8, "non-integer hyperdimension {k}");
            }
            assert!((t.hyperdimension_sum() - (g.order() / h.len()) as f64).abs() <= 1e-8);
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn continuous_hyperdimensions_are_odd_integers() {
    let k = IntervalHypergroup::default();
    for n in 0..=12 {
        let d = k.hyperdim_continuous(n).unwrap();
        assert!((d - (2 * n + 1) as f64).abs() <= 1e-8, "n={n}: {d}");
    }
}

/// Polynomial characters are reproduced exactly by the trapezoid rule once
/// `N > n`, so refining `N` leaves only rounding error; a non-polynomial
/// integrand shows the geometric decay before reaching that floor.
#[test]
fn trapezoid_convergence_in_theta() {
    let base = IntervalHypergroup::new(21, 64, 512).unwrap();
    for n in [64, 128, 256, 512] {
        let res = base.with_theta_count(n).unwrap().character_check(8).unwrap();
        assert!(res.iter().all(|&r| r <= 1e-14), "N={n}: {res:?}");
    }
    let (s, t) = (0.3, -0.6);
    let reference = base.conv_apply(s, t, f64::exp).unwrap();
    let errors: Vec<f64> = [1, 2, 4, 8, 16]
        .iter()
        .map(|&n| (base.with_theta_count(n).unwrap().conv_apply(s, t, f64::exp).unwrap() - reference).abs())
        .collect();
    for w in errors.windows(2) {
        assert!(w[1] <= w[0] / 4.0 || w[1] <= 1e-15, "{errors:?}");
    }
    assert!(errors[4] <= 1e-14, "{errors:?}");
}
