mod common;

use common::{config, nonzero_rational, rational};
use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;
use quintic_cubic::identity::evaluate_identity;
use quintic_cubic::{
    clear_denominators, scale_solution, DiophantineEquation, Equation, FactorBudget, Model,
    PairedEquation, PairedParametrization, Parametrization, QuarticPoint, Rational, Solution,
};

fn pow_sum(values: &[Rational], weights: &[Rational], k: u32) -> Rational {
    values.iter().zip(weights).map(|(x, w)| w * x.pow(k)).sum()
}

/// A direct model through a chosen (t, v): every coefficient is random
/// except the first extra cubic coefficient, which is solved for.
fn direct_through_point() -> impl Strategy<Value = (Model, Rational, Rational)> {
    (0usize..3, 1usize..4)
        .prop_flat_map(|(nq, nc)| {
            (
                (nonzero_rational(9, 4), nonzero_rational(9, 4)),
                vec(nonzero_rational(9, 4), nq),
                vec(nonzero_rational(9, 4), nc - 1),
                nonzero_rational(5, 3),
                vec(rational(5, 3), nq),
                vec(nonzero_rational(5, 3), nc),
                nonzero_rational(9, 5),
                rational(9, 5),
            )
        })
        .prop_filter_map("solved coefficient vanished", |((a, b), qc, others, x1, alphas, betas, t, v)| {
            let mut quintic = vec![&t + &x1, &t - &x1];
            quintic.extend(alphas.iter().map(|al| al * &t));
            let mut weights = vec![a.clone(), a.clone()];
            weights.extend(qc.iter().cloned());
            let lhs = pow_sum(&quintic, &weights, 5);

            let extra: Vec<Rational> = betas[1..].iter().map(|be| be * &t).collect();
            let rest = &b * ((&t + &v).pow(3) + (&t - &v).pow(3)) + pow_sum(&extra, &others, 3);
            let b0 = (lhs - rest) / (&betas[0] * &t).pow(3);
            if b0.is_zero() {
                return None;
            }
            let cubic_coeffs: Vec<Rational> = std::iter::once(b0).chain(others).collect();
            let equation = DiophantineEquation::new(a, b, qc, cubic_coeffs).ok()?;
            let model = Model::direct(equation, Parametrization { x1, alphas, betas }).ok()?;
            Some((model, t, v))
        })
}

/// A paired model through (t, v) with the first quintic pair coefficient solved.
fn paired_through_point() -> impl Strategy<Value = (Model, Rational, Rational)> {
    (1usize..4, 1usize..4)
        .prop_flat_map(|(nq, nc)| {
            (
                vec(nonzero_rational(9, 4), nq),
                vec(nonzero_rational(9, 4), nc),
                vec(nonzero_rational(5, 3), nq),
                vec(rational(5, 3), nc - 1),
                nonzero_rational(9, 5),
                rational(9, 5),
            )
        })
        .prop_filter_map("solved coefficient vanished", |(mut qa, cb, xs, ys, t, v)| {
            let pair = |c: &Rational, k: u32| (&t + c).pow(k) + (&t - c).pow(k);
            let rhs: Rational = std::iter::once(&v).chain(&ys).zip(&cb).map(|(y, w)| w * pair(y, 3)).sum();
            let rest: Rational = xs[1..].iter().zip(&qa[1..]).map(|(x, w)| w * pair(x, 5)).sum();
            qa[0] = (rhs - rest) / pair(&xs[0], 5);
            if qa[0].is_zero() {
                return None;
            }
            let equation = PairedEquation::new(qa, cb).ok()?;
            let model = Model::paired(equation, PairedParametrization { xs, ys }).ok()?;
            Some((model, t, v))
        })
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn direct_parametrization_matches_quartic((model, t, v) in direct_through_point(), dv in nonzero_rational(5, 5)) {
        let quartic = model.quartic().unwrap();
        prop_assert!(quartic.contains(&QuarticPoint::new(t.clone(), v.clone())));
        prop_assert!(model.build_solution(&t, &v).unwrap().is_verified());
        // off the quartic the substitution fails (v and −v are both on it)
        let w = &v + &dv;
        if w.square() != v.square() {
            prop_assert!(!quartic.contains(&QuarticPoint::new(t.clone(), w.clone())));
            let mut s = model.substitute(&t, &w);
            prop_assert!(!s.verify());
        }
    }

    #[test]
    fn paired_parametrization_matches_quartic((model, t, v) in paired_through_point(), dv in nonzero_rational(5, 5)) {
        let quartic = model.quartic().unwrap();
        prop_assert!(quartic.contains(&QuarticPoint::new(t.clone(), v.clone())));
        prop_assert!(model.build_solution(&t, &v).unwrap().is_verified());
        let w = &v + &dv;
        if w.square() != v.square() {
            prop_assert!(!quartic.contains(&QuarticPoint::new(t.clone(), w.clone())));
            let mut s = model.substitute(&t, &w);
            prop_assert!(!s.verify());
        }
    }

    #[test]
    fn methods_agree_on_common_case(a in nonzero_rational(9, 4), b in nonzero_rational(9, 4),
                                    x1 in nonzero_rational(5, 3), t in nonzero_rational(9, 5), v in rational(9, 5)) {
        let direct = Model::direct(
            DiophantineEquation::new(a.clone(), b.clone(), vec![], vec![]).unwrap(),
            Parametrization { x1: x1.clone(), alphas: vec![], betas: vec![] },
        ).unwrap();
        let paired = Model::paired(
            PairedEquation::new(vec![a], vec![b]).unwrap(),
            PairedParametrization { xs: vec![x1], ys: vec![] },
        ).unwrap();
        prop_assert_eq!(direct.quartic().unwrap(), paired.quartic().unwrap());
        let d = direct.substitute(&t, &v);
        let p = paired.substitute(&t, &v);
        prop_assert_eq!(&d.quintic_values, &p.quintic_values);
        prop_assert_eq!(&d.cubic_values, &p.cubic_values);
        prop_assert_eq!(d.sides().unwrap(), p.sides().unwrap());
    }

    #[test]
    fn scaling_preserves_solutions((model, t, v) in direct_through_point(), mu in nonzero_rational(30, 30)) {
        let s = model.build_solution(&t, &v).unwrap();
        let scaled = scale_solution(&s, &mu).unwrap();
        prop_assert!(scaled.is_verified());
        let back = scale_solution(&scaled, &mu.recip().unwrap()).unwrap();
        prop_assert_eq!(back.quintic_values, s.quintic_values.clone());
        prop_assert_eq!(back.cubic_values, s.cubic_values.clone());

        let (ints, factor) = clear_denominators(&s, &FactorBudget::default()).unwrap();
        prop_assert!(ints.is_verified());
        prop_assert!(factor.minimal);
        let doubled = scale_solution(&ints.to_rationals(), &Rational::from(2)).unwrap();
        prop_assert!(doubled.is_verified());
    }

    #[test]
    fn printed_identity_evaluates_to_both_sides((model, t, v) in paired_through_point()) {
        let s = model.build_solution(&t, &v).unwrap();
        let (ints, _) = clear_denominators(&s, &FactorBudget::default()).unwrap();
        let (lhs, rhs) = evaluate_identity(&ints.to_string()).unwrap();
        prop_assert_eq!((lhs, rhs), ints.sides().unwrap());
    }

    #[test]
    fn perturbed_tuples_fail(k in 0usize..6, delta in prop_oneof![-5i64..0, 1i64..6]) {
        let one = Rational::from(1);
        let eq = Equation::Direct(DiophantineEquation::new(one.clone(), one.clone(), vec![one.clone()], vec![one]).unwrap());
        let mut values = ints(&[8, 6, 14, -110, 124, 14]);
        values[k] += delta;
        let s = Solution::checked(values[..3].to_vec(), values[3..].to_vec(), eq);
        prop_assert!(!s.is_verified());
    }
}
