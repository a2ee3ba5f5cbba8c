mod common;

use common::{brute_force_classes, naive_braided, naive_idempotent, naive_left_nondegenerate, Table};
use proptest::prelude::*;
use ybx_core::quadset::{
    check_properties, enumerate_solutions, make_named, make_permutation_solution, make_solution, NamedKind,
    PropertyMask, QuadraticSet,
};
use ybx_core::Error;

fn ex2() -> QuadraticSet {
    make_solution(
        3,
        &[
            ((3, 3), (1, 1)),
            ((2, 2), (1, 1)),
            ((1, 1), (1, 1)),
            ((3, 2), (2, 1)),
            ((1, 3), (2, 1)),
            ((2, 1), (2, 1)),
            ((2, 3), (3, 1)),
            ((1, 2), (3, 1)),
            ((3, 1), (3, 1)),
        ],
    )
    .unwrap()
}

fn to_table(qs: &QuadraticSet) -> Table {
    qs.table()
}

#[test]
fn ex2_left_actions_are_transpositions() {
    let qs = ex2();
    let p = check_properties(&qs);
    assert!(p.braided && p.idempotent && p.left_nondegenerate);
    assert!(!p.right_nondegenerate);
    // L_{x1} = (x2 x3), L_{x2} = (x1 x2), L_{x3} = (x1 x3)
    let act = qs.actions();
    assert_eq!(act.left[0], vec![0, 2, 1]);
    assert_eq!(act.left[1], vec![1, 0, 2]);
    assert_eq!(act.left[2], vec![2, 1, 0]);
    assert!(act.right.iter().flatten().all(|&v| v == 0));
}

#[test]
fn ex1_explicit_table() {
    let qs = make_permutation_solution(&[2, 3, 1]).unwrap();
    // r(x3x1) = x2x1, r(x2x2) = x3x2, r(x1x3) = x1x3
    assert_eq!(qs.r(2, 0), (1, 0));
    assert_eq!(qs.r(1, 1), (2, 1));
    assert_eq!(qs.r(0, 2), (0, 2));
}

#[test]
fn enumeration_matches_brute_force_on_two_points() {
    let masks: [(&str, fn(&Table) -> bool); 4] = [
        ("braided", |t: &Table| naive_braided(t, 2)),
        ("braided,idempotent", |t: &Table| naive_braided(t, 2) && naive_idempotent(t, 2)),
        ("lnd,idempotent", |t: &Table| naive_left_nondegenerate(t, 2) && naive_idempotent(t, 2)),
        ("braided,lnd,idempotent", |t: &Table| {
            naive_braided(t, 2) && naive_left_nondegenerate(t, 2) && naive_idempotent(t, 2)
        }),
    ];
    for (mask, pred) in masks {
        let expected = brute_force_classes(2, pred);
        let got: Vec<Table> = enumerate_solutions(2, PropertyMask::parse(mask).unwrap())
            .unwrap()
            .iter()
            .map(|q| common::canonical_table(&to_table(q), 2))
            .collect();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        got_sorted.dedup();
        assert_eq!(got_sorted.len(), got.len(), "duplicates for {mask}");
        assert_eq!(got_sorted, expected, "mask {mask}");
    }
}

#[test]
fn enumeration_three_points_agrees_with_direct_checks() {
    let sols = enumerate_solutions(3, PropertyMask::parse("braided,lnd,idempotent").unwrap()).unwrap();
    for s in &sols {
        let t = to_table(s);
        assert!(naive_braided(&t, 3) && naive_idempotent(&t, 3) && naive_left_nondegenerate(&t, 3));
    }
    // the identity, transposition and 3-cycle permutation solutions, plus the ex2 class
    let canon: Vec<Table> = sols.iter().map(|q| common::canonical_table(&to_table(q), 3)).collect();
    for f in [[1, 2, 3], [2, 1, 3], [2, 3, 1]] {
        let t = common::canonical_table(&to_table(&make_permutation_solution(&f).unwrap()), 3);
        assert!(canon.contains(&t));
    }
    assert!(canon.contains(&common::canonical_table(&to_table(&ex2()), 3)));
}

#[test]
fn too_large_enumeration_is_rejected() {
    assert!(matches!(enumerate_solutions(5, PropertyMask::default()), Err(Error::SizeTooLarge(_))));
}

#[test]
fn constructor_errors() {
    assert!(matches!(make_solution(2, &[((1, 1), (1, 1))]), Err(Error::MissingPair(_, _))));
    assert!(matches!(make_permutation_solution(&[1, 1]), Err(Error::NotABijection(_))));
    assert!(matches!(make_named(NamedKind::Flip, 0), Err(Error::EmptySet)));
}

fn arb_table(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    proptest::collection::vec((0..n, 0..n), n * n)
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn property_flags_match_naive_checks(t in arb_table(3)) {
        let qs = QuadraticSet::from_table(3, &t).unwrap();
        let p = check_properties(&qs);
        prop_assert_eq!(p.braided, naive_braided(&t, 3));
        prop_assert_eq!(p.idempotent, naive_idempotent(&t, 3));
        prop_assert_eq!(p.left_nondegenerate, naive_left_nondegenerate(&t, 3));
    }

    #[test]
    fn relabeling_preserves_properties(t in arb_table(3), p in arb_perm(3)) {
        let qs = QuadraticSet::from_table(3, &t).unwrap();
        let q2 = qs.relabel(&p);
        prop_assert_eq!(check_properties(&qs), check_properties(&q2));
        prop_assert_eq!(qs.canonical_form(), q2.canonical_form());
    }

    #[test]
    fn permutation_solutions_are_braided_idempotent_lnd(p in arb_perm(4)) {
        let f: Vec<usize> = p.iter().map(|x| x + 1).collect();
        let qs = make_permutation_solution(&f).unwrap();
        let rep = check_properties(&qs);
        prop_assert!(rep.braided && rep.idempotent && rep.left_nondegenerate);
    }
}
