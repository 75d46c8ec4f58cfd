mod common;

use common::{brute_matchings, hook_content};
use holey_aztec::arith::*;
use holey_aztec::aztec::*;
use holey_aztec::formulas::*;
use holey_aztec::identities::*;
use holey_aztec::paths::*;
use holey_aztec::schur::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn index_set(max: usize, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = IndexSet> {
    prop::collection::btree_set(1..=max, len).prop_map(|s| IndexSet::new(s.into_iter().collect()).unwrap())
}

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

/// Kept sets on row `M + 1 + d` of an `M x N` rectangle for which some
/// formula applies.
fn routed_configuration(max: usize) -> impl Strategy<Value = (usize, usize, usize, IndexSet)> {
    (1..=max, 1..=max)
        .prop_flat_map(|(rows, n)| (Just(rows), Just(n), 0..=rows))
        .prop_filter("a formula must govern the holey row", |&(rows, n, d)| {
            let odd_row = (rows + d) % 2 == 0;
            let len = if odd_row { n } else { n + 1 };
            rows.abs_diff(n) <= len && if odd_row { rows <= n } else { rows >= n }
        })
        .prop_flat_map(|(rows, n, d)| {
            let len = if (rows + d) % 2 == 0 { n } else { n + 1 };
            let keep = len - rows.abs_diff(n);
            (Just(rows), Just(n), Just(d), subsequence((1..=len).collect::<Vec<_>>(), keep))
        })
        .prop_map(|(rows, n, d, kept)| (rows, n, d, IndexSet::new(kept).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vandermonde_matches_tableau_count(a in index_set(7, 0..=4)) {
        let lambda = partition_from_index_set(&a);
        let v = vandermonde_specialization(&a).unwrap();
        prop_assert_eq!(&v, &hook_content(&lambda, a.len()));
        prop_assert_eq!(v, schur_polynomial(&lambda, a.len()).coefficient_sum());
    }

    #[test]
    fn lambda_size_is_shifted_sum(a in index_set(9, 0..=5)) {
        let lambda = partition_from_index_set(&a);
        let m = a.len();
        prop_assert!(lambda.length() <= m);
        let total: usize = a.as_slice().iter().sum();
        prop_assert_eq!(lambda.size(), total - m * m.saturating_sub(1) / 2);
    }

    #[test]
    fn shifted_factorial_recursions(a in small_rational(), q in small_rational(), k in 0usize..10) {
        prop_assert_eq!(shifted_factorial(&a, k + 1), shifted_factorial(&a, k) * (&a + rational(k as i64)));
        let qk = pow_rational(&q, k as i64).unwrap_or_else(|_| BigRational::zero());
        if !q.is_zero() || k > 0 {
            prop_assert_eq!(
                q_shifted_factorial(&a, &q, k + 1),
                q_shifted_factorial(&a, &q, k) * (BigRational::one() - &a * qk)
            );
        }
    }

    #[test]
    fn rational_inverse(a in small_rational()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * a.recip(), BigRational::one());
        prop_assert!(a.denom().is_positive());
    }

    #[test]
    fn schur_is_symmetric_and_homogeneous(lambda in partition(3, 3), n in 1usize..=3, perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        prop_assume!(lambda.size() <= 6);
        let s = schur_polynomial(&lambda, n);
        let p: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        prop_assert_eq!(s.permute(&p), s.clone());
        prop_assert!(s.terms().all(|(_, c)| c.is_positive()));
        prop_assert!(s.total_degrees().all(|d| d as usize == lambda.size()));
    }

    #[test]
    fn jacobi_trudi_agrees(lambda in partition(3, 3), n in 1usize..=3) {
        prop_assume!(lambda.size() <= 6);
        prop_assert!(jacobi_trudi_check(&lambda, n));
    }

    #[test]
    fn branching_rule(lambda in partition(3, 3), alpha in 0usize..=2, beta in 0usize..=2) {
        prop_assume!(lambda.size() <= 5 && alpha + beta >= 1 && lambda.length() <= alpha + beta);
        prop_assert!(verify_branching(&lambda, alpha, beta));
    }

    #[test]
    fn rectangle_complement_rule(rows in 2usize..=3, mu in partition(2, 3), n in 1usize..=3) {
        prop_assume!(mu.length() <= rows);
        let width = 2;
        let c = rectangle_complement(&mu, width, rows).unwrap();
        prop_assert_eq!(rectangle_complement(&c, width, rows).unwrap(), mu.clone());
        let skew = SkewShape::new(Partition::rectangle(width, rows), mu).unwrap();
        prop_assert_eq!(skew_schur_polynomial(&skew, n), schur_polynomial(&c, n));
    }

    #[test]
    fn principal_specialisation(mu in partition(3, 2), k in 0i64..=1, l in 1usize..=3, q in prop::sample::select(vec![ratio(2, 1), ratio(3, 1), ratio(1, 2)])) {
        let s = 2;
        prop_assert_eq!(schur_principal_q(&mu, k, l, &q, s).unwrap(), schur_principal_direct(&mu, k, l, &q));
    }

    #[test]
    fn lattice_path_sums(a in index_set(5, 1..=2), n in 1usize..=3) {
        let lambda = partition_from_index_set(&a);
        prop_assert_eq!(family_weight_sum(&a, n as i64, 1), schur_polynomial(&lambda, n));
        prop_assert_eq!(family_weight_sum(&a, n as i64, 0), schur_polynomial(&lambda, n + 1));
    }

    #[test]
    fn colour_exchange_round_trips(t in index_set(5, 2..=5), n in 1i64..=2, pick in any::<prop::sample::Index>(), pick_g in any::<prop::sample::Index>(), pick_r in any::<prop::sample::Index>()) {
        let odd = t.len() % 2 == 1;
        let m = t.len() / 2;
        let splits = combinations(t.len(), m);
        let pos = pick.get(&splits);
        let a = IndexSet::new(pos.iter().map(|&i| t.as_slice()[i]).collect()).unwrap();
        let b = t.difference(&a);
        let greens = enumerate_families(&a, n, 1, Colour::Green);
        let reds = enumerate_families(&b, n, if odd { 0 } else { 1 }, Colour::Red);
        prop_assume!(!greens.is_empty() && !reds.is_empty());
        let (g, r) = (pick_g.get(&greens), pick_r.get(&reds));
        let matching = downup_matching(g, r).unwrap();
        prop_assert!(matching.pairs.iter().all(|&(i, j)| (i + j) % 2 == 1));
        let (g2, r2, bits) = if odd { exchange_colours_odd(g, r) } else { exchange_colours(g, r) }.unwrap();
        prop_assert_eq!(bits.len(), m);
        let nv = n as usize + 1;
        let w = |x: &PathFamily, y: &PathFamily| -> Vec<u32> {
            x.weight(nv).iter().zip(y.weight(nv)).map(|(p, q)| p + q).collect()
        };
        prop_assert_eq!(w(g, r), w(&g2, &r2));
        prop_assert_eq!(downup_matching(&g2, &r2).unwrap(), matching);
        prop_assert_eq!(restore_colours(&g2, &r2, &bits).unwrap(), (g.clone(), r.clone()));
    }

    #[test]
    fn counters_agree(rows in 1usize..=4, n in 1usize..=4, row_pick in any::<prop::sample::Index>(), mask in any::<u16>()) {
        let base = AztecRectangle::new(rows, n).unwrap();
        let row = row_pick.index(base.vertex_rows()) + 1;
        let len = base.row_length(row);
        let removed: Vec<Vertex> = (1..=len).filter(|k| mask & (1 << k) != 0).map(|k| (row, k)).collect();
        match HoleyAztecGraph::with_removed(rows, n, removed) {
            Ok(g) => {
                let c = count_matchings(&g);
                prop_assert_eq!(&c, &count_matchings_profile_dp(&g));
                prop_assert_eq!(&c, &count_matchings_lowest_first(&g));
                prop_assert_eq!(c, BigInt::from(brute_matchings(&g)));
            }
            Err(holey_aztec::Error::OddVertexCount(k)) => prop_assert!(k % 2 == 1),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn reflections_preserve_counts(rows in 1usize..=5, n in 1usize..=5, row_pick in any::<prop::sample::Index>(), mask in any::<u16>()) {
        let base = AztecRectangle::new(rows, n).unwrap();
        let row = row_pick.index(base.vertex_rows()) + 1;
        let len = base.row_length(row);
        let kept = IndexSet::new((1..=len).filter(|k| mask & (1 << k) != 0).collect()).unwrap();
        let Ok(g) = build_holey_graph(rows, n, row, &kept) else { return Ok(()) };
        let c = count_matchings(&g);
        let lr = build_holey_graph(rows, n, row, &kept.mirror(len)).unwrap();
        prop_assert_eq!(&c, &count_matchings(&lr));
        let ud = build_holey_graph(rows, n, base.vertex_rows() + 1 - row, &kept).unwrap();
        prop_assert_eq!(c, count_matchings(&ud));
    }

    #[test]
    fn dispatch_matches_oracle((rows, n, d, kept) in routed_configuration(6)) {
        let routed = dispatch(rows, n, d, &kept).unwrap();
        let g = build_holey_graph(rows, n, rows + 1 + d, &kept);
        let count = match g {
            Ok(g) => count_matchings(&g),
            Err(holey_aztec::Error::OddVertexCount(_)) => BigInt::zero(),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert_eq!(&routed.value, &count);
        prop_assert!(!routed.value.is_negative());
        let len = AztecRectangle::new(rows, n).unwrap().row_length(rows + 1 + d);
        prop_assert_eq!(dispatch(rows, n, d, &kept.mirror(len)).unwrap().value, routed.value);
    }

    #[test]
    fn small_gaps_reduce(m in 1usize..=3, n in 1usize..=7, pick in any::<prop::sample::Index>()) {
        let sets = IndexSet::subsets(n, 2 * m);
        if !sets.is_empty() {
            let t = pick.get(&sets);
            prop_assert_eq!(thm11(m, n, 0, t).unwrap(), thm7(m, n, t).unwrap());
        }
        let sets = IndexSet::subsets(n, 2 * m + 1);
        if !sets.is_empty() {
            let t = pick.get(&sets);
            prop_assert_eq!(thm11(m, n, 1, t).unwrap(), thm9(m, n, t).unwrap());
        }
        if 2 * n + 2 >= 2 * m && 2 * n + 2 - 2 * m <= n + 1 {
            let sets = IndexSet::subsets(n + 1, 2 * n + 2 - 2 * m);
            let t = pick.get(&sets);
            prop_assert_eq!(thm12(m, n, 0, t).unwrap(), thm8(m, n, t).unwrap());
        }
        if 2 * n + 1 >= 2 * m && 2 * n + 1 - 2 * m <= n + 1 {
            let sets = IndexSet::subsets(n + 1, 2 * n + 1 - 2 * m);
            let t = pick.get(&sets);
            prop_assert_eq!(thm12(m, n, 1, t).unwrap(), thm10(m, n, t).unwrap());
        }
    }

    #[test]
    fn progressions_specialise(m in 1usize..=3, d in 0usize..=3, n in 1usize..=9, c in 1i64..=4, step in 1i64..=3, q in 2i64..=3) {
        let input = FormulaInput::arithmetic(m, n, d, c, step);
        if let Ok(v) = evaluate(Theorem::Thm13, &input, Hypotheses::Strict) {
            let t = IndexSet::new(arithmetic_positions(&input, Theorem::Thm13).unwrap().iter().map(|&x| x as usize).collect()).unwrap();
            prop_assert_eq!(v.integer().unwrap(), thm11(m, n, d, &t).unwrap());
            prop_assert!(v.integer().unwrap().is_positive());
        }
        if let Ok(v) = evaluate(Theorem::Thm14, &input, Hypotheses::Strict) {
            let t = IndexSet::new(arithmetic_positions(&input, Theorem::Thm14).unwrap().iter().map(|&x| x as usize).collect()).unwrap();
            prop_assert_eq!(v.integer().unwrap(), thm12(m, n, d, &t).unwrap());
        }
        let gap = ratio(step, q - 1);
        let input = FormulaInput::geometric(m, n, d, rational(c) - &gap, gap, rational(q));
        if let Ok(v) = evaluate(Theorem::Thm15, &input, Hypotheses::Strict) {
            let t = IndexSet::new(geometric_positions(&input, Theorem::Thm15).unwrap().iter().map(|&x| x as usize).collect()).unwrap();
            prop_assert_eq!(v.integer().unwrap(), thm11(m, n, d, &t).unwrap());
        }
        if let Ok(v) = evaluate(Theorem::Thm16, &input, Hypotheses::Strict) {
            let t = IndexSet::new(geometric_positions(&input, Theorem::Thm16).unwrap().iter().map(|&x| x as usize).collect()).unwrap();
            prop_assert_eq!(v.integer().unwrap(), thm12(m, n, d, &t).unwrap());
        }
    }

    #[test]
    fn gap_identity(m in 0usize..=2, d in 0usize..=3, n in 1usize..=2, pick in any::<prop::sample::Index>()) {
        let sets = IndexSet::subsets(6, 2 * m + d);
        prop_assume!(!sets.is_empty());
        let t = pick.get(&sets);
        prop_assert_eq!(lhs_theorem5(t, n, d).unwrap(), rhs_theorem5(t, n, d).unwrap());
    }

    #[test]
    fn selberg_summation(x in small_rational(), y in small_rational(), m in 0usize..=5, s in 1usize..=3) {
        prop_assert_eq!(selberg_sum(&x, &y, m, s), selberg_product(&x, &y, m, s));
    }

    #[test]
    fn q_selberg_summation(x in small_rational(), y in small_rational(), q in prop::sample::select(vec![ratio(2, 1), ratio(1, 2), ratio(3, 1), ratio(-2, 1)]), m in 0usize..=4, s in 1usize..=3) {
        prop_assert_eq!(q_selberg_sum(&x, &y, &q, m, s).unwrap(), q_selberg_product(&x, &y, &q, m, s).unwrap());
    }
}

#[test]
fn census_and_degrees() {
    for m in 1..=8 {
        for n in 1..=8 {
            let g = HoleyAztecGraph::with_removed_unchecked(m, n, []).unwrap();
            let base = g.base();
            assert_eq!(g.vertices().len(), (m + 1) * n + m * (n + 1));
            assert_eq!(g.edges().len(), 4 * m * n);
            assert_eq!(base.vertex_count(), g.vertices().len());
            for (i, &(r, k)) in g.vertices().iter().enumerate() {
                let deg = g.adjacency()[i].len();
                assert!(deg <= 4);
                let interior = r > 1 && r < 2 * m + 1 && (r % 2 == 1 || (k > 1 && k < n + 1));
                if interior {
                    assert_eq!(deg, 4, "({r},{k}) in {m}x{n}");
                }
            }
        }
    }
}

#[test]
fn principal_specialisation_grid() {
    for mu in Partition::rectangle(3, 2).subpartitions() {
        for q in [rational(2), rational(3), ratio(1, 2)] {
            for k in 0..=1 {
                for l in 1..=3 {
                    assert_eq!(schur_principal_q(&mu, k, l, &q, 2).unwrap(), schur_principal_direct(&mu, k, l, &q));
                }
            }
        }
    }
}
