use halfspin::clifford::{
    fock_weight, parse_clifford, parse_fock_vector, phi, phi_inverse, CliffordElement, FockVector, Monomial,
};
use halfspin::diagram::{FockIndex, Sign, StrictPartition};
use halfspin::quiver::{dim_vector, star_involution, DimVector, RankContext};
use halfspin::sparse::{rat, Rational};
use halfspin::spinrep::{
    parse_spin_vector, weight_alpha_route, weight_closed_form, weight_eps, BasisState, Operator, SpinVector,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

/// A rank and a diagram that fits it.
fn ranked_diagram(max_rank: usize) -> impl Strategy<Value = (usize, StrictPartition)> {
    (2..=max_rank).prop_flat_map(|n| {
        (Just(n), any::<u64>()).prop_map(|(n, bits)| {
            let rows = (1..n as u32).filter(|l| bits >> (l - 1) & 1 == 1);
            (n, StrictPartition::from_lengths(rows).unwrap())
        })
    })
}

fn spin_vector(n: usize) -> impl Strategy<Value = SpinVector> {
    prop::collection::vec((sign(), 0u64..1 << (n - 1), rational()), 0..6).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|(s, bits, c)| {
                let rows = (1..n as u32).filter(|l| bits >> (l - 1) & 1 == 1);
                (BasisState::new(s, StrictPartition::from_lengths(rows).unwrap()), c)
            })
            .collect()
    })
}

fn fock_vector(n: usize) -> impl Strategy<Value = FockVector> {
    prop::collection::vec((0u64..1 << n, rational()), 0..6)
        .prop_map(|terms| terms.into_iter().map(|(b, c)| (FockIndex::from_bits(b), c)).collect())
}

fn clifford_element(n: usize) -> impl Strategy<Value = CliffordElement> {
    prop::collection::vec((0u64..1 << n, 0u64..1 << n, rational()), 0..5).prop_map(|terms| {
        let mut x = CliffordElement::zero();
        for (s, t, c) in terms {
            let m = Monomial {
                creators: FockIndex::from_bits(s),
                annihilators: FockIndex::from_bits(t),
            };
            x.add_term(m, c);
        }
        x
    })
}

fn operator(n: usize) -> impl Strategy<Value = Operator> {
    (0usize..6, 1..=n).prop_map(|(kind, k)| match kind {
        0 => Operator::E(k),
        1 => Operator::F(k),
        2 => Operator::H(k),
        3 => Operator::A(k),
        4 => Operator::B(k),
        _ => Operator::Kappa,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn clifford_action_is_multiplicative(
        x in clifford_element(4),
        y in clifford_element(4),
        v in fock_vector(4),
    ) {
        let ctx = RankContext::new(4).unwrap();
        let lhs = x.mul(&y).act(&v, &ctx).unwrap();
        let rhs = x.act(&y.act(&v, &ctx).unwrap(), &ctx).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn clifford_product_is_associative(x in clifford_element(3), y in clifford_element(3), z in clifford_element(3)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn parity_is_multiplicative(x in clifford_element(4), y in clifford_element(4)) {
        let p = x.mul(&y);
        if x.is_even() && y.is_even() || x.is_odd() && y.is_odd() {
            prop_assert!(p.is_even());
        }
        if x.is_even() && y.is_odd() || x.is_odd() && y.is_even() {
            prop_assert!(p.is_odd());
        }
    }

    #[test]
    fn text_forms_round_trip(
        v in spin_vector(6),
        f in fock_vector(6),
        x in clifford_element(5),
        (_, y) in ranked_diagram(20),
        bits in 0u64..1 << 20,
    ) {
        prop_assert_eq!(parse_spin_vector(&v.to_string()).unwrap(), v);
        prop_assert_eq!(parse_fock_vector(&f.to_string()).unwrap(), f);
        prop_assert_eq!(parse_clifford(&x.to_string()).unwrap(), x);
        prop_assert_eq!(y.to_string().parse::<StrictPartition>().unwrap(), y);
        let i = FockIndex::from_bits(bits);
        prop_assert_eq!(i.to_string().parse::<FockIndex>().unwrap(), i);
    }

    #[test]
    fn operators_are_linear(
        op in operator(5),
        x in spin_vector(5),
        y in spin_vector(5),
        a in rational(),
        b in rational(),
    ) {
        let ctx = RankContext::new(5).unwrap();
        let mut combo = x.scaled(&a);
        combo.add_scaled(&y, &b);
        let mut expected = op.apply(&x, &ctx).unwrap().scaled(&a);
        expected.add_scaled(&op.apply(&y, &ctx).unwrap(), &b);
        prop_assert_eq!(op.apply(&combo, &ctx).unwrap(), expected);
    }

    #[test]
    fn phi_round_trips_and_keeps_weight((n, y) in ranked_diagram(16), s in sign()) {
        let ctx = RankContext::new(n).unwrap();
        let state = BasisState::new(s, y);
        let v = SpinVector::basis(state.clone());
        let f = phi(&v, &ctx).unwrap();
        prop_assert_eq!(phi_inverse(&f, &ctx).unwrap(), v);
        let (i, _) = f.iter().next().unwrap();
        prop_assert_eq!(fock_weight(*i, &ctx), weight_eps(&state, &ctx));
        prop_assert_eq!(i.len() % 2 == 0, s == Sign::Plus);
    }

    #[test]
    fn weight_routes_agree((n, y) in ranked_diagram(16), s in sign()) {
        let ctx = RankContext::new(n).unwrap();
        let state = BasisState::new(s, y);
        let w = weight_eps(&state, &ctx);
        prop_assert_eq!(weight_alpha_route(&state, &ctx), w.clone());
        prop_assert_eq!(weight_closed_form(&state, &ctx), w);
    }

    #[test]
    fn star_exchanges_signs((n, y) in ranked_diagram(16)) {
        let ctx = RankContext::new(n).unwrap();
        let plus = dim_vector(&y, Sign::Plus, &ctx);
        let minus = dim_vector(&y, Sign::Minus, &ctx);
        prop_assert_eq!(star_involution(&plus, &ctx).unwrap(), minus);
        let text = plus.to_string();
        prop_assert_eq!(text.parse::<DimVector>().unwrap(), plus);
    }

    /// Both modules are minuscule: every sl_2 string has length at most two.
    #[test]
    fn raising_undoes_lowering((n, y) in ranked_diagram(12), s in sign(), k in 1usize..=12) {
        let ctx = RankContext::new(n).unwrap();
        let k = 1 + (k - 1) % n;
        let v = SpinVector::basis(BasisState::new(s, y));
        let fv = Operator::F(k).apply(&v, &ctx).unwrap();
        if !fv.is_zero() {
            prop_assert_eq!(Operator::E(k).apply(&fv, &ctx).unwrap(), v.clone());
            prop_assert!(Operator::F(k).apply(&fv, &ctx).unwrap().is_zero());
        }
    }
}
