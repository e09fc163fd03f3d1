use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use schur_weyl::radical::square_free_split;
use schur_weyl::tableaux::{enumerate_syt, enumerate_weyl, GtPattern, Partition, WeylTableau};
use schur_weyl::{
    branch_down_state, branch_up, branch_up_state, decode, encode, AmplitudeEngine, HybridState, Radical, Rational,
    SchurWeylTriplet,
};

const LOUCK: AmplitudeEngine = AmplitudeEngine::Louck;

fn radical() -> impl Strategy<Value = Radical> {
    prop::collection::vec((1u32..40, -12i64..12, 1i64..8), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(m, p, q)| Radical::scaled_sqrt(Rational::new(BigInt::from(p), BigInt::from(q)), &BigUint::from(m)))
            .sum()
    })
}

fn partition(max_size: u32, max_rows: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_size, 1..=max_rows).prop_filter_map("too big", move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        (parts.iter().sum::<u32>() <= max_size).then(|| Partition::new(parts).unwrap())
    })
}

fn hooks(shape: &Partition) -> Vec<(u64, i64)> {
    let parts = shape.parts();
    let mut out = Vec::new();
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len as usize {
            let arm = len as usize - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&l| l as usize > j).count();
            out.push(((arm + leg + 1) as u64, j as i64 - i as i64));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in radical(), b in radical(), c in radical()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Radical::one(), a.clone());
    }

    #[test]
    fn normal_form(a in radical()) {
        for (m, c) in a.terms() {
            prop_assert_eq!(square_free_split(m).0, BigUint::from(1u32));
            prop_assert!(*c != Rational::from_integer(0.into()));
        }
        let text = a.to_string();
        let parsed: Radical = text.parse().unwrap();
        prop_assert_eq!(parsed.to_string(), text);
        prop_assert_eq!(&parsed, &a);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Radical>(&json).unwrap(), a);
    }

    #[test]
    fn sqrt_squares_back(sign in prop::sample::select(vec![-1i8, 1]), n in 1u64..10_000, d in 1u64..10_000) {
        let r = Radical::signed_sqrt_u64(sign, n, d);
        prop_assert_eq!(r.square(), Radical::from_rational(Rational::new(BigInt::from(n), BigInt::from(d))));
        prop_assert_eq!(r.signum(), i32::from(sign));
    }

    #[test]
    fn signum_matches_float(a in radical()) {
        let f = a.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(a.signum(), if f > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn hook_length_formula(shape in partition(9, 4)) {
        let h = hooks(&shape);
        let fact: u64 = (1..=shape.size() as u64).product();
        let prod: u64 = h.iter().map(|(hook, _)| hook).product();
        prop_assert_eq!(enumerate_syt(&shape).len() as u64, fact / prod);
    }

    #[test]
    fn hook_content_formula(shape in partition(7, 3), d in 1u8..=4) {
        let h = hooks(&shape);
        let expected = if shape.num_rows() > d as usize {
            0
        } else {
            let num: i64 = h.iter().map(|(_, c)| i64::from(d) + c).product();
            let den: i64 = h.iter().map(|(hook, _)| *hook as i64).product();
            (num / den) as usize
        };
        let got = enumerate_weyl(&shape, d).map(|v| v.len()).unwrap_or(0);
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn gt_weyl_bijection(shape in partition(6, 3), d in 3usize..=4, pick in any::<prop::sample::Index>()) {
        let patterns = GtPattern::enumerate(&shape, d).unwrap();
        let p = &patterns[pick.index(patterns.len())];
        let t = WeylTableau::from_gt(p);
        prop_assert_eq!(&t.to_gt(), p);
        prop_assert_eq!(t.shape(), shape);
        let rebuilt = WeylTableau::new(d as u8, t.rows().iter().map(|r| r.iter().map(|&x| u32::from(x)).collect()).collect()).unwrap();
        prop_assert_eq!(rebuilt, t);
    }

    #[test]
    fn qutrit_round_trip(word in prop::collection::vec(1u8..=3, 0..=4)) {
        let state = encode(&word, 3, &LOUCK).unwrap();
        prop_assert!(state.norm_squared().is_one());
        let back = decode(&state, &LOUCK).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert!(back.amplitude(&word).is_one());
    }

    #[test]
    fn hybrid_round_trip(word in prop::collection::vec(1u8..=3, 1..=4), split in 0usize..4) {
        let split = split.min(word.len() - 1);
        let mut state = HybridState::from_word(3, &word).unwrap();
        for _ in 0..split {
            state = branch_up_state(&state, &LOUCK).unwrap();
        }
        let up = branch_up_state(&state, &LOUCK).unwrap();
        prop_assert_eq!(&up.norm_squared(), &state.norm_squared());
        prop_assert_eq!(branch_down_state(&up, &LOUCK).unwrap(), state);
    }

    #[test]
    fn distinct_letters_are_orthogonal(word in prop::collection::vec(1u8..=3, 0..=4), k1 in 1u8..=3, k2 in 1u8..=3) {
        prop_assume!(k1 != k2);
        let state = encode(&word, 3, &LOUCK).unwrap();
        for t in state.terms().keys() {
            let a = branch_up(t, k1, &LOUCK).unwrap();
            let b = branch_up(t, k2, &LOUCK).unwrap();
            prop_assert!(a.inner(&b).is_zero());
        }
    }
}

#[test]
fn triplet_shape_must_match() {
    let t = WeylTableau::from_external(2, vec![vec![0, 1]]).unwrap();
    let path = schur_weyl::GrowthPath::from_rows(&[0, 1]).unwrap();
    assert!(SchurWeylTriplet::new(&t, path).is_err());
}
