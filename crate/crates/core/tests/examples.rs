mod common;

use common::{brute_matchings, hook_content, part, set};
use holey_aztec::arith::*;
use holey_aztec::aztec::*;
use holey_aztec::formulas::*;
use holey_aztec::identities::*;
use holey_aztec::paths::*;
use holey_aztec::schur::*;
use holey_aztec::Error;
use num_bigint::BigInt;

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn oracle(g: &HoleyAztecGraph) -> BigInt {
    let fast = count_matchings(g);
    if g.vertices().len() <= 40 {
        assert_eq!(fast, BigInt::from(brute_matchings(g)));
    }
    assert_eq!(fast, count_matchings_profile_dp(g));
    fast
}

mod arithmetic {
    use super::*;

    #[test]
    fn lambda_of_index_sets() {
        assert_eq!(partition_from_index_set(&set(&[1, 2, 3])), part(&[1, 1, 1]));
        assert_eq!(partition_from_index_set(&set(&[1, 3])), part(&[2, 1]));
        assert_eq!(partition_from_index_set(&set(&[2])), part(&[2]));
        assert_eq!(partition_from_index_set(&IndexSet::empty()), Partition::empty());
    }

    #[test]
    fn shifted_factorials() {
        assert_eq!(shifted_factorial(&ratio(7, 5), 0), rational(1));
        assert_eq!(shifted_factorial(&ratio(1, 2), 2), ratio(3, 4));
        assert_eq!(shifted_factorial(&rational(3), 3), rational(60));
        assert_eq!(q_shifted_factorial(&rational(2), &rational(2), 0), rational(1));
        assert_eq!(q_shifted_factorial(&rational(2), &rational(2), 2), rational(3));
        assert_eq!(q_shifted_factorial(&rational(3), &rational(3), 1), rational(-2));
    }

    #[test]
    fn vandermonde_values_match_tableau_counts() {
        for (a, v) in [(vec![1, 2, 3], 1), (vec![1, 3], 2), (vec![1, 3, 5], 8)] {
            let a = set(&a);
            assert_eq!(vandermonde_specialization(&a).unwrap(), int(v));
            let lambda = partition_from_index_set(&a);
            assert_eq!(hook_content(&lambda, a.len()), int(v));
            assert_eq!(schur_polynomial(&lambda, a.len()).coefficient_sum(), int(v));
        }
    }

    #[test]
    fn large_integers_round_trip() {
        let big = BigInt::from(1) << 200u32;
        assert_eq!(big.to_string().parse::<BigInt>().unwrap(), big);
        let r = parse_rational("-6/4").unwrap();
        assert_eq!(rational_to_string(&r), "-3/2");
    }

    #[test]
    fn index_sets_reject_bad_input() {
        assert!(IndexSet::new(vec![2, 1]).is_err());
        assert!(IndexSet::new(vec![0, 1]).is_err());
        assert!(IndexSet::new(vec![1, 1]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}

mod schur_functions {
    use super::*;

    #[test]
    fn small_polynomials() {
        assert_eq!(schur_polynomial(&Partition::empty(), 2).to_string(), "1");
        assert_eq!(schur_polynomial(&part(&[1]), 2).to_string(), "x1 + x2");
        assert_eq!(schur_polynomial(&part(&[2, 1]), 2).to_string(), "x1^2*x2 + x1*x2^2");
        assert!(schur_polynomial(&part(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn skew_polynomials() {
        let mu = part(&[2, 1]);
        assert_eq!(skew_schur_polynomial(&SkewShape::new(mu.clone(), mu).unwrap(), 3).to_string(), "1");
        assert_eq!(skew_schur_polynomial(&SkewShape::new(part(&[1]), Partition::empty()).unwrap(), 1).to_string(), "x1");
        assert_eq!(
            skew_schur_polynomial(&SkewShape::new(part(&[2, 1]), part(&[1])).unwrap(), 2).to_string(),
            "x1^2 + 2*x1*x2 + x2^2"
        );
        assert!(SkewShape::new(part(&[1]), part(&[2])).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(rectangle_complement(&Partition::empty(), 2, 2).unwrap(), part(&[2, 2]));
        assert_eq!(rectangle_complement(&part(&[2, 2]), 2, 2).unwrap(), Partition::empty());
        assert_eq!(rectangle_complement(&part(&[2, 1]), 3, 2).unwrap(), part(&[2, 1]));
        assert!(rectangle_complement(&part(&[3]), 2, 2).is_err());
    }

    #[test]
    fn branching_examples() {
        assert!(verify_branching(&part(&[1]), 1, 1));
        assert!(verify_branching(&part(&[2, 1]), 2, 1));
        assert!(verify_branching(&part(&[2, 2]), 1, 2));
    }

    #[test]
    fn principal_specialisation() {
        assert_eq!(schur_principal_q(&Partition::empty(), 1, 3, &ratio(1, 2), 2).unwrap(), rational(1));
        assert_eq!(schur_principal_q(&part(&[1]), 0, 2, &rational(2), 1).unwrap(), rational(6));
        assert_eq!(schur_principal_q(&part(&[1, 1]), 0, 2, &rational(3), 2).unwrap(), rational(27));
        assert!(matches!(schur_principal_q(&part(&[2]), 0, 2, &rational(1), 1), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert!(jacobi_trudi_check(&Partition::empty(), 1));
        assert!(jacobi_trudi_check(&part(&[2, 1]), 2));
        assert!(jacobi_trudi_check(&part(&[2, 2]), 3));
    }
}

mod lattice_paths {
    use super::*;

    fn weight_sum(a: &IndexSet, n: usize) -> Polynomial {
        family_weight_sum(a, n as i64, 1)
    }

    #[test]
    fn family_examples() {
        let fams = enumerate_families(&set(&[1]), 1, 1, Colour::Green);
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].paths()[0].east_heights(), vec![1]);
        assert_eq!(weight_sum(&set(&[1, 2]), 2).to_string(), schur_polynomial(&part(&[1, 1]), 2).to_string());
        assert_eq!(weight_sum(&set(&[1, 2]), 2).to_string(), "x1*x2");
        assert_eq!(weight_sum(&set(&[2]), 2), schur_polynomial(&part(&[2]), 2));
        assert_eq!(weight_sum(&set(&[2]), 2).to_string(), "x1^2 + x1*x2 + x2^2");
    }

    fn only(a: &[usize], n: i64, row: i64, colour: Colour) -> Vec<PathFamily> {
        enumerate_families(&set(a), n, row, colour)
    }

    #[test]
    fn single_path_pairs() {
        for n in 1..=3 {
            for (ga, ra) in [(2, 1), (1, 2), (3, 1), (1, 3)] {
                for g in only(&[ga], n, 1, Colour::Green) {
                    for r in only(&[ra], n, 1, Colour::Red) {
                        let g = g.clone();
                        let mt = downup_matching(&g, &r).unwrap();
                        assert_eq!(mt.pairs, vec![(1, 2)]);
                        let (g2, r2, bits) = exchange_colours(&g, &r).unwrap();
                        assert_eq!(bits, vec![ga < ra]);
                        assert_eq!(g2.ends(), vec![ga.max(ra) as i64]);
                        assert_eq!(r2.ends(), vec![ga.min(ra) as i64]);
                        if ga > ra {
                            assert_eq!((g2.clone(), r2.clone()), (g.clone(), r.clone()));
                        }
                        assert_eq!(restore_colours(&g2, &r2, &bits).unwrap(), (g, r));
                    }
                }
            }
        }
    }

    #[test]
    fn lone_red_path_is_untouched() {
        for r in only(&[3], 2, 0, Colour::Red) {
            let g = PathFamily::new(Colour::Green, 1, Vec::new()).unwrap();
            let (g2, r2, bits) = exchange_colours_odd(&g, &r).unwrap();
            assert!(bits.is_empty());
            assert_eq!((g2, r2), (g.clone(), r.clone()));
            assert_eq!(downup_matching(&g, &r).unwrap().distinguished, Some(1));
        }
    }

    #[test]
    fn two_pairs_never_cross() {
        let t = set(&[1, 2, 3, 4]);
        let mut seen = 0;
        for a in IndexSet::subsets(4, 2) {
            let a = IndexSet::new(a.as_slice().iter().map(|&i| t.t(i)).collect()).unwrap();
            let b = t.difference(&a);
            for g in enumerate_families(&a, 2, 1, Colour::Green) {
                for r in enumerate_families(&b, 2, 1, Colour::Red) {
                    let p = downup_matching(&g, &r).unwrap().pairs;
                    assert!(p == vec![(1, 2), (3, 4)] || p == vec![(1, 4), (2, 3)], "{p:?}");
                    seen += 1;
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn restore_rejects_wrong_bit_count() {
        let g = only(&[2], 2, 1, Colour::Green).remove(0);
        let r = only(&[1], 2, 1, Colour::Red).remove(0);
        assert!(restore_colours(&g, &r, &[true, false]).is_err());
    }

    #[test]
    fn trail_dump_has_one_line_per_trail() {
        let g = only(&[2, 4], 2, 1, Colour::Green).remove(0);
        let r = only(&[1, 3], 2, 1, Colour::Red).remove(0);
        let lines = trail_report(&g, &r).unwrap();
        assert_eq!(lines.len(), 2);
        assert!(lines.iter().all(|l| l.starts_with('t')));
    }
}

mod split_identities {
    use super::*;

    #[test]
    fn equal_splits() {
        assert_eq!(lhs_theorem3(&set(&[1, 2]), 1).unwrap().to_string(), "2*x1^3");
        assert_eq!(rhs_theorem3(&set(&[1, 2]), 1).unwrap().to_string(), "2*x1^3");
        let s = |a: &[usize], n| schur_polynomial(&partition_from_index_set(&set(a)), n);
        assert_eq!(lhs_theorem3(&set(&[1, 3]), 2).unwrap(), (&s(&[1], 2) * &s(&[3], 2)).scale(&int(2)));
        assert_eq!(lhs_theorem3(&set(&[1, 3]), 2).unwrap().to_string(), "2*x1^4 + 4*x1^3*x2 + 4*x1^2*x2^2 + 4*x1*x2^3 + 2*x2^4");
        assert_eq!(rhs_theorem3(&set(&[1, 2, 3, 4]), 2).unwrap(), (&s(&[2, 4], 2) * &s(&[1, 3], 2)).scale(&int(4)));
        assert!(verify_theorem3(&set(&[1, 2, 3, 4]), 2).unwrap());
        assert_eq!(rhs_theorem3(&set(&[2, 4]), 1).unwrap().to_string(), "2*x1^6");
    }

    #[test]
    fn odd_splits() {
        assert!(verify_theorem4(&set(&[1]), 1).unwrap());
        assert_eq!(lhs_theorem4(&set(&[1]), 1).unwrap().to_string(), "x1 + x2");
        assert!(verify_theorem4(&set(&[1, 2, 3]), 1).unwrap());
        assert!(verify_theorem4(&set(&[1, 2, 4]), 2).unwrap());
    }

    #[test]
    fn gap_splits_reduce() {
        let t = set(&[1, 3, 4, 6]);
        assert_eq!(lhs_theorem5(&t, 2, 0).unwrap(), lhs_theorem3(&t, 2).unwrap());
        assert_eq!(rhs_theorem5(&t, 2, 0).unwrap(), rhs_theorem3(&t, 2).unwrap());
        let t = set(&[1, 3, 4]);
        assert_eq!(lhs_theorem5(&t, 2, 1).unwrap(), lhs_theorem4(&t, 2).unwrap());
        assert_eq!(rhs_theorem5(&t, 2, 1).unwrap(), rhs_theorem4(&t, 2).unwrap());
        assert!(verify_theorem5(&set(&[1, 2, 3, 4]), 1, 2).unwrap());
        assert!(verify_theorem5(&set(&[1, 2, 3, 4, 5]), 1, 3).unwrap());
    }

    #[test]
    fn summation_examples() {
        let (x, y) = (ratio(2, 3), ratio(5, 7));
        for m in 0..4 {
            assert_eq!(selberg_sum(&x, &y, m, m + 1), selberg_product(&x, &y, m, m + 1));
        }
        assert_eq!(selberg_sum(&rational(1), &rational(1), 2, 1), rational(3));
        assert_eq!(selberg_product(&rational(1), &rational(1), 2, 1), rational(3));
        assert_eq!(selberg_sum(&x, &y, 1, 2), &x * &y);
        assert_eq!(selberg_product(&x, &y, 1, 2), &x * &y);
        for m in 0..5 {
            let chu = shifted_factorial(&(&x + &y), m) / BigInt::from((1..=m as i64).product::<i64>());
            assert_eq!(selberg_product(&x, &y, m, 1), chu);
        }
        let q = rational(2);
        assert_eq!(q_selberg_sum(&rational(1), &rational(3), &q, 3, 2).unwrap(), rational(0));
        assert_eq!(q_selberg_product(&rational(1), &rational(3), &q, 3, 2).unwrap(), rational(0));
        assert_eq!(
            q_selberg_sum(&rational(3), &rational(5), &q, 2, 1).unwrap(),
            q_selberg_product(&rational(3), &rational(5), &q, 2, 1).unwrap()
        );
        assert!(q_selberg_sum(&rational(3), &rational(5), &rational(1), 2, 1).is_err());
    }
}

mod rectangles {
    use super::*;

    #[test]
    fn rows() {
        assert_eq!(central_row(4), 5);
        assert_eq!(AztecRectangle::new(4, 3).unwrap().row_length(5), 3);
        assert_eq!(AztecRectangle::new(5, 3).unwrap().row_length(central_row(5)), 4);
        assert_eq!(AztecRectangle::new(3, 4).unwrap().row_length(4), 5);
        assert_eq!(row_below(5, 1).unwrap(), 7);
        assert_eq!(AztecRectangle::new(5, 7).unwrap().row_length(7), 7);
        assert_eq!(row_below(6, 1).unwrap(), 8);
        assert_eq!(AztecRectangle::new(6, 3).unwrap().row_length(8), 4);
        assert_eq!(row_above(6, 1).unwrap(), 6);
        assert!(row_below(2, 3).is_err());
    }

    #[test]
    fn holey_graphs() {
        let full = build_holey_graph(3, 3, 4, &IndexSet::full(4)).unwrap();
        assert!(full.removed().is_empty());
        assert_eq!(oracle(&full), int(64));
        let g = build_holey_graph(3, 4, 5, &set(&[1, 3, 4])).unwrap();
        assert_eq!(g.removed().iter().copied().collect::<Vec<_>>(), vec![(5, 2)]);
        assert!(matches!(build_holey_graph(3, 4, 5, &set(&[1, 3])), Err(Error::OddVertexCount(_))));
        assert!(build_holey_graph(3, 4, 5, &set(&[1, 9])).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(oracle(&build_holey_graph(1, 1, 1, &set(&[1])).unwrap()), int(2));
        assert_eq!(oracle(&build_holey_graph(2, 2, 1, &set(&[1, 2])).unwrap()), int(8));
        assert_eq!(oracle(&build_holey_graph(3, 4, 5, &set(&[1, 3, 4])).unwrap()), int(96));
        assert_eq!(oracle(&build_holey_graph(3, 4, 5, &set(&[1, 2, 4])).unwrap()), int(96));
        assert_eq!(count_matchings_profile_dp(&build_holey_graph(5, 5, 1, &IndexSet::full(5)).unwrap()), int(32768));
        assert_eq!(oracle(&build_holey_graph(4, 7, 5, &set(&[1, 4, 5, 7])).unwrap()), int(3072));
    }

    #[test]
    fn adjacency_json() {
        let g = build_holey_graph(1, 1, 1, &set(&[1])).unwrap();
        let j = g.to_json();
        assert_eq!(j["vertices"].as_array().unwrap().len(), 4);
        assert_eq!(j["edges"].as_array().unwrap().len(), 4);
        assert_eq!(j["vertices"][0], serde_json::json!([1, 1]));
    }
}

mod closed_forms {
    use super::*;

    fn check(theorem: Theorem, input: FormulaInput, expected: Option<i64>) {
        let value = evaluate(theorem, &input, Hypotheses::Strict).unwrap().integer().unwrap();
        let count = oracle(&configuration(theorem, &input).unwrap());
        assert_eq!(value, count, "{theorem} {:?}", input);
        if let Some(e) = expected {
            assert_eq!(value, int(e));
        }
    }

    #[test]
    fn row_formulas_against_oracle() {
        check(Theorem::TopRow, FormulaInput::with_set(1, 4, 0, set(&[2])), Some(2));
        check(Theorem::TopRow, FormulaInput::with_set(3, 5, 0, set(&[1, 3, 5])), Some(512));
        check(Theorem::TopRow, FormulaInput::with_set(2, 2, 0, set(&[1, 2])), Some(8));
        check(Theorem::SecondRow, FormulaInput::with_set(1, 3, 0, set(&[4])), Some(1));
        check(Theorem::SecondRow, FormulaInput::with_set(3, 5, 0, set(&[3, 5, 6])), Some(24));
        check(Theorem::SecondRow, FormulaInput::with_set(2, 4, 0, set(&[1, 2])), Some(2));
    }

    #[test]
    fn set_formulas_against_oracle() {
        let w = FormulaInput::with_set;
        check(Theorem::Thm7, w(1, 2, 0, set(&[1, 2])), Some(8));
        check(Theorem::Thm7, w(2, 7, 0, set(&[1, 4, 5, 7])), Some(3072));
        check(Theorem::Thm7, w(1, 3, 0, set(&[1, 3])), Some(8));
        check(Theorem::Thm8, w(3, 3, 0, set(&[2, 4])), Some(384));
        check(Theorem::Thm8, w(2, 3, 0, set(&[1, 2, 3, 4])), Some(64));
        check(Theorem::Thm9, w(1, 3, 1, set(&[1, 2, 3])), Some(64));
        check(Theorem::Thm9, w(1, 4, 1, set(&[1, 3, 4])), Some(96));
        check(Theorem::Thm9, w(2, 7, 1, set(&[1, 2, 4, 5, 7])), Some(165888));
        check(Theorem::Thm10, w(3, 3, 1, set(&[2])), Some(1536));
        check(Theorem::Thm10, w(2, 3, 1, set(&[1, 2, 4])), None);
        check(Theorem::Thm11, w(1, 4, 2, set(&[1, 2, 3, 4])), Some(1024));
        for t in IndexSet::subsets(4, 2) {
            check(Theorem::Thm12, w(2, 3, 2, t), None);
        }
    }

    #[test]
    fn progression_formulas_against_oracle() {
        let a = FormulaInput::arithmetic;
        check(Theorem::Thm13, a(1, 2, 0, 1, 1), Some(8));
        check(Theorem::Thm13, a(1, 4, 0, 1, 2), Some(8));
        check(Theorem::Thm13, a(1, 6, 1, 1, 2), Some(128));
        check(Theorem::Thm14, a(3, 3, 0, 2, 2), Some(384));
        check(Theorem::Thm14, a(3, 3, 1, 2, 1), Some(1536));
        check(Theorem::Thm14, a(2, 3, 0, 1, 1), Some(64));
        let g = |m, n, d, c, s, q| FormulaInput::geometric(m, n, d, rational(c), rational(s), rational(q));
        check(Theorem::Thm15, g(1, 2, 0, 0, 1, 2), Some(8));
        check(Theorem::Thm15, g(1, 3, 0, 0, 1, 3), Some(8));
        check(Theorem::Thm15, g(1, 4, 1, 0, 1, 2), Some(96));
        check(Theorem::Thm16, g(3, 3, 0, 0, 2, 2), Some(384));
        check(Theorem::Thm16, g(3, 3, 1, 1, 1, 2), Some(1536));
        check(Theorem::Thm16, g(3, 3, 1, 1, 1, 3), Some(1536));
        check(Theorem::Thm16, g(3, 3, 0, 0, 1, 2), None);
    }

    #[test]
    fn fractional_progression_parameters() {
        let input = FormulaInput::geometric(1, 6, 1, ratio(1, 2), ratio(1, 2), rational(3));
        assert_eq!(geometric_positions(&input, Theorem::Thm15).unwrap(), vec![1, 2, 5]);
        check(Theorem::Thm15, input, None);
        let bad = FormulaInput::geometric(1, 6, 1, ratio(1, 3), ratio(1, 2), rational(3));
        assert!(evaluate(Theorem::Thm15, &bad, Hypotheses::Strict).is_err());
    }

    #[test]
    fn typed_entry_points() {
        assert_eq!(top_row_count(3, 5, &set(&[1, 3, 5])).unwrap(), int(512));
        assert_eq!(half_row_count(3, 5, &set(&[3, 5, 6])).unwrap(), int(24));
        assert_eq!(thm11(2, 7, 0, &set(&[1, 4, 5, 7])).unwrap(), thm7(2, 7, &set(&[1, 4, 5, 7])).unwrap());
        assert_eq!(thm12(3, 3, 1, &set(&[2])).unwrap(), thm10(3, 3, &set(&[2])).unwrap());
        assert_eq!(thm12(3, 3, 0, &set(&[2, 4])).unwrap(), thm8(3, 3, &set(&[2, 4])).unwrap());
        assert_eq!(thm13(2, 6, 1, 1, 1).unwrap(), thm9(2, 6, &set(&[1, 2, 3, 4, 5])).unwrap());
        assert_eq!(thm14(3, 3, 2, 2, 0, Hypotheses::Strict).unwrap(), int(384));
        let r = rational;
        assert_eq!(thm15(1, 4, &r(0), &r(1), &r(2), 1).unwrap(), int(96));
        assert_eq!(thm16(3, 3, &r(0), &r(2), &r(2), 0, Hypotheses::Strict).unwrap(), int(384));
    }

    #[test]
    fn hypothesis_violations_are_rejected() {
        assert!(thm7(2, 3, &set(&[1, 2, 3, 4])).is_err());
        assert!(thm9(2, 4, &set(&[1, 2, 3, 4, 5])).is_err());
        assert!(matches!(thm14(3, 3, 1, 1, 2, Hypotheses::Strict), Err(Error::Hypothesis(_))));
        assert!(thm14(3, 3, 1, 1, 2, Hypotheses::Override).is_ok());
        assert!(matches!(
            thm16(3, 3, &rational(0), &rational(1), &rational(2), 2, Hypotheses::Strict),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn routing() {
        let r = dispatch(4, 7, 0, &set(&[1, 4, 5, 7])).unwrap();
        assert_eq!((r.theorem, r.m, r.value), (Theorem::Thm7, 2, int(3072)));
        assert_eq!(dispatch(5, 3, 0, &set(&[2, 4])).unwrap().theorem, Theorem::Thm8);
        assert_eq!(dispatch(3, 4, 1, &set(&[1, 3, 4])).unwrap().value, int(96));
        assert_eq!(dispatch(5, 3, 2, &set(&[1, 4])).unwrap().theorem, Theorem::Thm12);
        assert_eq!(dispatch(6, 3, 3, &set(&[2])).unwrap().value, int(0));
        assert!(matches!(dispatch(5, 3, 3, &set(&[1])), Err(Error::NoApplicableTheorem(_))));
        assert_eq!(dispatch(2, 5, 2, &set(&[1, 5])).unwrap().theorem, Theorem::Thm11);
        assert!(matches!(dispatch(3, 4, 1, &set(&[1, 3])), Err(Error::NoApplicableTheorem(_))));
        assert!(matches!(dispatch(2, 5, 1, &set(&[1, 2, 3, 4, 5, 6])), Err(Error::NoApplicableTheorem(_))));
    }
}
