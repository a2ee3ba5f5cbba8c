mod common;

use common::{naive_braided, naive_idempotent};
use proptest::prelude::*;
use ybx_core::linalg::{RationalMatrix, RelationSpace};
use ybx_core::linr::{
    braided_factorial, braided_matrix_relations, check_braid, check_idempotent, check_matrix_ybe, frt_relations,
    kernel_space, koszul_dual_relations, linearize, nichols_quadratic_check, nichols_relations,
    polynomial_to_vector, psi_from_r, sminus_degenerate_check, splus_relations, transpose_yb_relations, Sign,
};
use ybx_core::ncgb::{NcPolynomial, Word};
use ybx_core::quadset::{
    check_properties, enumerate_solutions, make_permutation_solution, make_solution, permutations, PropertyMask,
    QuadraticSet,
};
use ybx_core::rat;

fn ex1() -> QuadraticSet {
    make_permutation_solution(&[2, 3, 1]).unwrap()
}

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

fn rid2() -> QuadraticSet {
    make_permutation_solution(&[1, 2]).unwrap()
}

/// Quadratic polynomial from 0-based `(word, coefficient)` terms.
fn poly(terms: &[([usize; 2], i64)]) -> NcPolynomial {
    NcPolynomial::from_terms(terms.iter().map(|(w, c)| (Word(w.to_vec()), rat(*c))))
}

fn space(gens: usize, rels: &[NcPolynomial]) -> RelationSpace {
    let vecs: Vec<_> = rels.iter().map(|p| polynomial_to_vector(p, gens, 2)).collect();
    RelationSpace::span(gens * gens, &vecs)
}

fn same_span(gens: usize, a: &[NcPolynomial], b: &[NcPolynomial]) -> bool {
    space(gens, a).same_as(&space(gens, b))
}

fn perm_solutions(max_n: usize) -> Vec<(Vec<usize>, QuadraticSet)> {
    (1..=max_n)
        .flat_map(permutations)
        .map(|f| {
            let f1: Vec<usize> = f.iter().map(|x| x + 1).collect();
            (f, make_permutation_solution(&f1).unwrap())
        })
        .collect()
}

#[test]
fn matrix_flags_agree_with_set_flags() {
    for n in 2..=3 {
        for qs in enumerate_solutions(n, PropertyMask::parse("braided").unwrap()).unwrap() {
            let (psi, r) = linearize(&qs);
            let rep = check_properties(&qs);
            assert!(check_braid(&psi).unwrap());
            assert!(check_matrix_ybe(&r).unwrap());
            assert_eq!(check_idempotent(&psi).unwrap(), rep.idempotent);
        }
    }
}

#[test]
fn koszul_complement_and_sminus() {
    for n in 1..=3 {
        for qs in enumerate_solutions(n, PropertyMask::parse("lnd,idempotent").unwrap()).unwrap() {
            let (psi, r) = linearize(&qs);
            let dual = koszul_dual_relations(&r).unwrap();
            assert!(dual.space.same_as(&kernel_space(&psi).unwrap().perp()));
            assert!(dual.space.same_as(&splus_relations(&r).unwrap().perp()));
            assert_eq!(dual.space.dim(), psi.rank());
            assert!(sminus_degenerate_check(&psi).unwrap());
        }
    }
}

#[test]
fn non_idempotent_inputs_are_rejected() {
    let (psi, _) = linearize(&rid2());
    assert!(check_idempotent(&psi).unwrap());
    let flip = ybx_core::linr::flip_matrix(2);
    assert!(!check_idempotent(&flip).unwrap());
    assert!(koszul_dual_relations(&RationalMatrix::identity(4)).is_err());
    assert!(nichols_quadratic_check(&flip, 3).is_err());
    assert!(!sminus_degenerate_check(&flip).unwrap());
}

#[test]
fn nichols_algebras_are_quadratic() {
    for qs in [ex1(), ex2(), rid2()] {
        let (psi, _) = linearize(&qs);
        for m in 3..=4 {
            assert!(nichols_quadratic_check(&psi, m).unwrap(), "m = {m}");
        }
    }
}

#[test]
fn third_factorial_is_signed_permutation_sum() {
    for qs in [ex1(), ex2(), rid2()] {
        let (psi, _) = linearize(&qs);
        let n = qs.n();
        let id = RationalMatrix::identity(n);
        let p1 = psi.kron(&id);
        let p2 = id.kron(&psi);
        let mut want = RationalMatrix::identity(n * n * n).sub(&p1).unwrap().sub(&p2).unwrap();
        want = want.add(&p1.mul(&p2).unwrap()).unwrap().add(&p2.mul(&p1).unwrap()).unwrap();
        want = want.sub(&p1.mul(&p2).unwrap().mul(&p1).unwrap()).unwrap();
        assert_eq!(braided_factorial(&psi, 3, Sign::Minus).unwrap(), want);
    }
}

#[test]
fn transpose_relations_for_permutation_solutions() {
    for (f, qs) in perm_solutions(3) {
        let n = f.len();
        let (_, r) = linearize(&qs);
        // y^i y^j = 0 for i ≠ f(j)
        let want: Vec<NcPolynomial> = (0..n * n)
            .map(|p| (p / n, p % n))
            .filter(|&(i, j)| i != f[j])
            .map(|(i, j)| poly(&[([i, j], 1)]))
            .collect();
        assert!(same_span(n, &transpose_yb_relations(&r).unwrap(), &want), "f {f:?}");
    }
}

#[test]
fn transpose_relations_ex1_printed() {
    let (_, r) = linearize(&ex1());
    let printed: Vec<NcPolynomial> =
        [[0, 0], [1, 1], [2, 2], [0, 1], [1, 2], [2, 0]].iter().map(|&w| poly(&[(w, 1)])).collect();
    assert!(same_span(3, &transpose_yb_relations(&r).unwrap(), &printed));
}

#[test]
fn transpose_relations_ex2_contain_printed_list() {
    let (psi, r) = linearize(&ex2());
    let ours = transpose_yb_relations(&r).unwrap();
    let printed = [
        poly(&[([1, 1], 1), ([2, 2], 1)]),
        poly(&[([0, 2], 1), ([2, 1], 1)]),
        poly(&[([0, 1], 1), ([1, 2], 1)]),
    ];
    let s = space(3, &ours);
    assert!(space(3, &printed).dim() == 3 && s.contains_space(&space(3, &printed)));
    // the full list is image(id − Ψᵀ)
    let it = RationalMatrix::identity(9).sub(&psi.transpose()).unwrap();
    assert_eq!(s.dim(), it.rank());
    assert_eq!(s.dim(), 6);
}

#[test]
fn koszul_relations_for_permutation_solutions() {
    for (f, qs) in perm_solutions(3) {
        let n = f.len();
        let (_, r) = linearize(&qs);
        // (Σ_a y^a) y^i = 0
        let want: Vec<NcPolynomial> = (0..n)
            .map(|i| NcPolynomial::from_terms((0..n).map(|a| (Word(vec![a, i]), rat(1)))))
            .collect();
        assert!(same_span(n, &koszul_dual_relations(&r).unwrap().relations, &want), "f {f:?}");
    }
}

#[test]
fn koszul_relations_ex2_printed() {
    let (_, r) = linearize(&ex2());
    let printed = [
        poly(&[([0, 0], 1), ([1, 1], 1), ([2, 2], 1)]),
        poly(&[([0, 2], 1), ([2, 1], 1), ([1, 0], 1)]),
        poly(&[([0, 1], 1), ([1, 2], 1), ([2, 0], 1)]),
    ];
    let got = koszul_dual_relations(&r).unwrap().relations;
    assert!(same_span(3, &got, &printed));
    assert_eq!(got.len(), 3);
}

#[test]
fn nichols_relations_printed() {
    for (f, qs) in perm_solutions(3) {
        let n = f.len();
        let (_, r) = linearize(&qs);
        // f(θ_i) θ_i = 0
        let mut want: Vec<NcPolynomial> = (0..n).map(|i| poly(&[([f[i], i], 1)])).collect();
        want.sort_by(|a, b| a.leading().cmp(&b.leading()));
        assert_eq!(nichols_relations(&r).unwrap(), want, "f {f:?}");
    }
    let (_, r) = linearize(&ex2());
    let want: Vec<NcPolynomial> = (0..3).map(|i| poly(&[([i, 0], 1)])).collect();
    assert_eq!(nichols_relations(&r).unwrap(), want);
}

fn t(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

#[test]
fn frt_relations_for_permutation_solutions() {
    for (f, qs) in perm_solutions(3) {
        let n = f.len();
        let (_, r) = linearize(&qs);
        // (t^k_{f(l)} − δ_{f(i),k} Σ_a t^a_j) t^i_l = 0
        let mut want = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut p = NcPolynomial::term(Word(vec![t(n, k, f[l]), t(n, i, l)]), rat(1));
                        if f[i] == k {
                            for a in 0..n {
                                p.add_term(Word(vec![t(n, a, j), t(n, i, l)]), rat(-1));
                            }
                        }
                        want.push(p);
                    }
                }
            }
        }
        assert!(same_span(n * n, &frt_relations(&r).unwrap(), &want), "f {f:?}");
    }
}

#[test]
fn frt_relations_two_generators_printed() {
    let (_, r) = linearize(&rid2());
    let n = 2;
    let mut printed = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            // t^{ī}_j t^i_j = 0 and (t^i_j)² = (Σ_a t^a_{j̄}) t^i_j
            printed.push(poly(&[([t(n, 1 - i, j), t(n, i, j)], 1)]));
            printed.push(poly(&[
                ([t(n, i, j), t(n, i, j)], 1),
                ([t(n, 0, 1 - j), t(n, i, j)], -1),
                ([t(n, 1, 1 - j), t(n, i, j)], -1),
            ]));
        }
    }
    let got = frt_relations(&r).unwrap();
    assert!(same_span(4, &got, &printed));
    assert_eq!(space(4, &got).dim(), 8);
}

#[test]
fn braided_matrix_relations_for_identity_permutation() {
    for n in 2..=3 {
        let id: Vec<usize> = (1..=n).collect();
        let (_, r) = linearize(&make_permutation_solution(&id).unwrap());
        // u^k_i u^i_l = 0 for k ≠ i
        let mut want = Vec::new();
        for k in 0..n {
            for i in (0..n).filter(|&i| i != k) {
                for l in 0..n {
                    want.push(poly(&[([t(n, k, i), t(n, i, l)], 1)]));
                }
            }
        }
        let got = braided_matrix_relations(&r).unwrap();
        assert!(same_span(n * n, &got, &want), "n = {n}");
        if n == 2 {
            assert_eq!(space(4, &got).dim(), 4);
        }
    }
}

#[test]
fn psi_and_r_are_flip_related() {
    for qs in [ex1(), ex2(), rid2()] {
        let (psi, r) = linearize(&qs);
        assert_eq!(psi_from_r(&r).unwrap(), psi);
    }
}

fn arb_table(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    proptest::collection::vec((0..n, 0..n), n * n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn matrix_braid_matches_naive(t in arb_table(2)) {
        let qs = QuadraticSet::from_table(2, &t).unwrap();
        let (psi, r) = linearize(&qs);
        prop_assert_eq!(check_braid(&psi).unwrap(), naive_braided(&t, 2));
        prop_assert_eq!(check_matrix_ybe(&r).unwrap(), naive_braided(&t, 2));
        prop_assert_eq!(check_idempotent(&psi).unwrap(), naive_idempotent(&t, 2));
    }

    #[test]
    fn matrix_braid_matches_naive_three_points(t in arb_table(3)) {
        let qs = QuadraticSet::from_table(3, &t).unwrap();
        let (psi, _) = linearize(&qs);
        prop_assert_eq!(check_braid(&psi).unwrap(), naive_braided(&t, 3));
    }
}

#[test]
fn splus_matches_canonical_relations_and_hilbert_series() {
    let mut sets = enumerate_solutions(2, PropertyMask::parse("braided").unwrap()).unwrap();
    sets.extend(enumerate_solutions(3, PropertyMask::parse("braided,lnd,idempotent").unwrap()).unwrap());
    for qs in sets {
        let n = qs.n();
        let (_, r) = linearize(&qs);
        let splus = splus_relations(&r).unwrap();
        let canon = ybx_core::orbits::canonical_relations(&qs).to_polynomials();
        assert!(splus.same_as(&space(n, &canon)));
        let gb = ybx_core::ncgb::complete(n, &canon, 5).unwrap();
        let h = ybx_core::ncgb::hilbert_series(&gb, 4).coefficients;
        // the binomials span the same space and have integer entries
        let vecs: Vec<Vec<i64>> = canon
            .iter()
            .map(|p| polynomial_to_vector(p, n, 2).iter().map(|c| i64::try_from(&c.to_integer()).unwrap()).collect())
            .collect();
        for d in 0..=4 {
            assert_eq!(h[d], common::quadratic_dim(n, &vecs, d), "{qs:?} d {d}");
        }
    }
}

#[test]
fn flip_transpose_and_antisymmetrizer() {
    for n in 2..=3 {
        let flip = ybx_core::quadset::make_named(ybx_core::quadset::NamedKind::Flip, n).unwrap();
        let (psi, r) = linearize(&flip);
        let want: Vec<NcPolynomial> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|(i, j)| i < j)
            .map(|(i, j)| poly(&[([i, j], 1), ([j, i], -1)]))
            .collect();
        assert!(same_span(n, &transpose_yb_relations(&r).unwrap(), &want));
        // Σ sign(σ)σ on V^⊗3 has rank C(n, 3)
        let fact = braided_factorial(&psi, 3, Sign::Minus).unwrap();
        assert_eq!(fact.rank(), n * (n - 1) * (n.saturating_sub(2)) / 6);
    }
}

#[test]
fn idempotent_braiding_kills_id_minus_psi() {
    for qs in enumerate_solutions(3, PropertyMask::parse("braided,idempotent").unwrap()).unwrap() {
        let (psi, _) = linearize(&qs);
        let id = RationalMatrix::identity(psi.rows());
        assert!(psi.mul(&id.sub(&psi).unwrap()).unwrap().is_zero());
    }
}

#[test]
fn star_of_linearizations_is_linearized_product() {
    let sets = enumerate_solutions(2, PropertyMask::parse("braided").unwrap()).unwrap();
    for a in sets.iter().step_by(3) {
        for b in sets.iter().step_by(5) {
            let (pa, _) = linearize(a);
            let (pb, _) = linearize(b);
            let (prod, _) = linearize(&ybx_core::quadset::cartesian_product(a, b));
            let star = ybx_core::linr::rmatrix_star(&pa, &pb).unwrap();
            assert_eq!(star, prod);
            assert!(check_braid(&star).unwrap());
            if check_idempotent(&pa).unwrap() && check_idempotent(&pb).unwrap() {
                assert!(check_idempotent(&star).unwrap());
            }
        }
    }
}

/// `x_i ↦ Σ_a x_a ⊗ t^a_i` applied to each relation of `S_+(R)` lands in
/// `rel ⊗ T_2 + V_2 ⊗ FRT`.
#[test]
fn frt_coaction_preserves_relations() {
    for qs in enumerate_solutions(2, PropertyMask::parse("braided").unwrap()).unwrap() {
        let n = 2;
        let g = n * n;
        let (_, r) = linearize(&qs);
        let splus = splus_relations(&r).unwrap();
        let frt = frt_relations(&r).unwrap();
        let dim = n * n * g * g;
        let zero = || vec![ybx_core::rat(0); dim];
        let mut gens = Vec::new();
        for s in &splus.basis {
            for w in 0..g * g {
                let mut v = zero();
                for (p, c) in s.iter().enumerate() {
                    v[p * g * g + w] = c.clone();
                }
                gens.push(v);
            }
        }
        for f in &frt {
            let fv = polynomial_to_vector(f, g, 2);
            for p in 0..n * n {
                let mut v = zero();
                for (w, c) in fv.iter().enumerate() {
                    v[p * g * g + w] = c.clone();
                }
                gens.push(v);
            }
        }
        let target = RelationSpace::span(dim, &gens);
        for s in &splus.basis {
            let mut img = zero();
            for (p, c) in s.iter().enumerate() {
                let (i, j) = (p / n, p % n);
                for a in 0..n {
                    for b in 0..n {
                        let idx = (a * n + b) * g * g + t(n, a, i) * g + t(n, b, j);
                        img[idx] += c;
                    }
                }
            }
            assert!(target.contains(&img), "{qs:?}");
        }
    }
}
