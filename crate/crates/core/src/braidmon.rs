//! Actions of a braided set extended to words, the normalized solution on
//! normal words, and its restrictions to a fixed degree.

use crate::error::{Error, Result};
use crate::ncgb::{complete, normal_words, GroebnerBasis, Word};
use crate::orbits::canonical_relations;
use crate::quadset::{check_properties, QuadraticSet};

/// A braided set together with a binomial Gröbner basis of its algebra.
#[derive(Clone, Debug)]
pub struct WordActions {
    qs: QuadraticSet,
    gb: GroebnerBasis,
}

impl WordActions {
    /// Builds the basis of the canonical relations through `max_degree`.
    pub fn new(qs: &QuadraticSet, max_degree: usize) -> Result<Self> {
        if !check_properties(qs).braided {
            return Err(Error::NotBraided);
        }
        let gb = complete(qs.n(), &canonical_relations(qs).to_polynomials(), max_degree.max(3))?;
        Ok(WordActions { qs: qs.clone(), gb })
    }

    pub fn with_basis(qs: &QuadraticSet, gb: GroebnerBasis) -> Result<Self> {
        if !check_properties(qs).braided {
            return Err(Error::NotBraided);
        }
        if !gb.is_binomial() {
            return Err(Error::NotBinomial);
        }
        Ok(WordActions { qs: qs.clone(), gb })
    }

    pub fn quadratic_set(&self) -> &QuadraticSet {
        &self.qs
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Normal form of a word.
    pub fn nor(&self, w: &Word) -> Word {
        self.gb.normal_word(w).expect("basis is binomial")
    }

    /// `ᵃb` on the free monoid.
    pub fn left(&self, a: &Word, b: &Word) -> Word {
        let mut cur = b.0.clone();
        for &c in a.0.iter().rev() {
            let mut act = c;
            for y in cur.iter_mut() {
                let (l, r) = self.qs.r(act, *y);
                *y = l;
                act = r;
            }
        }
        Word(cur)
    }

    /// `aᵇ` on the free monoid.
    pub fn right(&self, a: &Word, b: &Word) -> Word {
        let mut cur = a.0.clone();
        for &u in &b.0 {
            let mut act = u;
            for x in cur.iter_mut().rev() {
                let (l, r) = self.qs.r(*x, act);
                *x = r;
                act = l;
            }
        }
        Word(cur)
    }

    /// `ρ(a, b) = (Nor(ᵃb), Nor(aᵇ))`.
    pub fn rho(&self, a: &Word, b: &Word) -> (Word, Word) {
        (self.nor(&self.left(a, b)), self.nor(&self.right(a, b)))
    }
}

pub fn word_left_action(a: &Word, b: &Word, wa: &WordActions) -> Word {
    wa.left(a, b)
}

pub fn word_right_action(a: &Word, b: &Word, wa: &WordActions) -> Word {
    wa.right(a, b)
}

/// Which of the braided-monoid axioms held on all tested words.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub ml1: bool,
    pub ml2: bool,
    pub mr1: bool,
    pub mr2: bool,
    /// `(ᵃb)(aᵇ) = ab` after normal forms.
    pub m3: bool,
    /// Both actions preserve length.
    pub degree_preserving: bool,
    /// Actions computed on representatives agree after normal forms.
    pub nor_compatible: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.ml1 && self.ml2 && self.mr1 && self.mr2 && self.m3 && self.degree_preserving && self.nor_compatible
    }
}

fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|d| Word::all_of_length(n, d)).collect()
}

/// Exhaustive check of the action axioms on words of length ≤ `max_len`.
/// Comparisons are made between normal forms.
pub fn check_braided_monoid_axioms(wa: &WordActions, max_len: usize) -> Result<AxiomReport> {
    wa.gb.require_degree(2 * max_len)?;
    let words = words_up_to(wa.qs.n(), max_len);
    let nor = |w: &Word| wa.nor(w);
    let eq = |x: &Word, y: &Word| nor(x) == nor(y);
    let mut rep = AxiomReport {
        ml1: true,
        ml2: true,
        mr1: true,
        mr2: true,
        m3: true,
        degree_preserving: true,
        nor_compatible: true,
    };
    for a in &words {
        for u in &words {
            let (la, ra) = (wa.left(a, u), wa.right(a, u));
            if la.len() != u.len() || ra.len() != a.len() {
                rep.degree_preserving = false;
            }
            if !eq(&la.concat(&ra), &a.concat(u)) {
                rep.m3 = false;
            }
            let (na, nu) = (nor(a), nor(u));
            if !eq(&wa.left(&na, &nu), &la) || !eq(&wa.right(&na, &nu), &ra) {
                rep.nor_compatible = false;
            }
            for b in &words {
                // ML1 and MR2 quantify over (a, b, u); ML2 and MR1 over (a, u, v = b)
                if !eq(&wa.left(&a.concat(b), u), &wa.left(a, &wa.left(b, u))) {
                    rep.ml1 = false;
                }
                let mr2 = wa.right(a, &wa.left(b, u)).concat(&wa.right(b, u));
                if !eq(&wa.right(&a.concat(b), u), &mr2) {
                    rep.mr2 = false;
                }
                let v = b;
                let ml2 = wa.left(a, u).concat(&wa.left(&wa.right(a, u), v));
                if !eq(&wa.left(a, &u.concat(v)), &ml2) {
                    rep.ml2 = false;
                }
                if !eq(&wa.right(a, &u.concat(v)), &wa.right(&wa.right(a, u), v)) {
                    rep.mr1 = false;
                }
            }
        }
    }
    Ok(rep)
}

/// The restriction `ρ_d` of the normalized solution to normal words of length `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseSolution {
    pub d: usize,
    /// Quadratic set on `0..labels.len()`, index `k` standing for `labels[k]`.
    pub base: QuadraticSet,
    /// Normal words of length `d` in deg-lex order.
    pub labels: Vec<Word>,
}

/// `(N_d, ρ_d)` built from a basis verified through degree `2d`.
pub fn veronese_from_actions(wa: &WordActions, d: usize) -> Result<VeroneseSolution> {
    wa.gb.require_degree(2 * d)?;
    let labels = normal_words(&wa.gb, d);
    let pos = |w: &Word| labels.binary_search(w).expect("normal forms are labels");
    let base = QuadraticSet::from_fn(labels.len(), |i, j| {
        let (l, r) = wa.rho(&labels[i], &labels[j]);
        (pos(&l), pos(&r))
    })?;
    Ok(VeroneseSolution { d, base, labels })
}

pub fn veronese_solution(qs: &QuadraticSet, d: usize) -> Result<VeroneseSolution> {
    if d == 0 {
        return Err(Error::PreconditionViolated("degree must be at least 1".into()));
    }
    let wa = WordActions::new(qs, 2 * d)?;
    veronese_from_actions(&wa, d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prolongation {
    /// `solutions[d - 1]` is `(X, r^(d))`.
    pub solutions: Vec<QuadraticSet>,
    /// Smallest `d ≥ 2` with `r^(d) = r`.
    pub return_degree: Option<usize>,
    /// Number of distinct tables in the sequence.
    pub distinct: usize,
}

impl Prolongation {
    /// `return_degree - 1`.
    pub fn stopping_distance(&self) -> Option<usize> {
        self.return_degree.map(|d| d - 1)
    }
}

/// The prolongations `r^(1), …, r^(d_max)` of a left-nondegenerate idempotent braided set.
pub fn prolongation_sequence(qs: &QuadraticSet, d_max: usize) -> Result<Prolongation> {
    let rep = check_properties(qs);
    if !rep.braided {
        return Err(Error::NotBraided);
    }
    if !rep.idempotent {
        return Err(Error::NotIdempotent);
    }
    if !rep.left_nondegenerate {
        return Err(Error::NotLeftNondegenerate);
    }
    let wa = WordActions::new(qs, 2 * d_max)?;
    let mut solutions = Vec::new();
    for d in 1..=d_max {
        let v = veronese_from_actions(&wa, d)?;
        debug_assert_eq!(v.labels.len(), qs.n());
        solutions.push(v.base);
    }
    let return_degree = (2..=d_max).find(|&d| solutions[d - 1] == *qs);
    let mut distinct: Vec<&QuadraticSet> = Vec::new();
    for s in &solutions {
        if !distinct.contains(&s) {
            distinct.push(s);
        }
    }
    let distinct = distinct.len();
    Ok(Prolongation { solutions, return_degree, distinct })
}

/// Whether `ρ_d` is idempotent on `N_d × N_d`.
pub fn idempotence_of_restriction(qs: &QuadraticSet, d: usize) -> Result<bool> {
    if !check_properties(qs).idempotent {
        return Err(Error::NotIdempotent);
    }
    let v = veronese_solution(qs, d)?;
    Ok(check_properties(&v.base).idempotent)
}

/// Powers of `ρ` on pairs of normal words of lengths `(p, q)` and `(q, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MixedPowers {
    pub cube_equals_rho: bool,
    pub square_equals_rho: bool,
}

pub fn mixed_degree_powers(wa: &WordActions, p: usize, q: usize) -> Result<MixedPowers> {
    wa.gb.require_degree(p + q)?;
    let mut cube = true;
    let mut square = true;
    for (s, t) in [(p, q), (q, p)] {
        let ns = normal_words(&wa.gb, s);
        let nt = normal_words(&wa.gb, t);
        for a in &ns {
            for b in &nt {
                let r1 = wa.rho(a, b);
                let r2 = wa.rho(&r1.0, &r1.1);
                let r3 = wa.rho(&r2.0, &r2.1);
                cube &= r3 == r1;
                square &= r2 == r1;
            }
        }
    }
    Ok(MixedPowers { cube_equals_rho: cube, square_equals_rho: square })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadset::tests_support::{ex1, ex2};
    use crate::quadset::{make_named, make_permutation_solution, NamedKind};

    fn w(v: &[usize]) -> Word {
        Word(v.iter().map(|x| x - 1).collect())
    }

    #[test]
    fn ex_n2_left_action() {
        let wa = WordActions::new(&ex2(), 4).unwrap();
        assert_eq!(wa.left(&w(&[1, 2]), &w(&[1, 3])), w(&[3, 3]));
        assert_eq!(wa.left(&Word::unit(), &w(&[2, 3])), w(&[2, 3]));
        assert_eq!(wa.right(&w(&[2, 3]), &Word::unit()), w(&[2, 3]));
    }

    #[test]
    fn permutation_actions() {
        // f = (1 2 3), f^3 = id
        let wa = WordActions::new(&ex1(), 6).unwrap();
        for x in 1..=3 {
            for i in 1..=3 {
                let a = w(&[2, 3, i]);
                let got = wa.left(&a, &w(&[x]));
                assert_eq!(got, w(&[x]), "f^3 is the identity");
                assert_eq!(wa.right(&w(&[x]), &w(&[3, 1, i])), w(&[i]));
            }
        }
    }

    #[test]
    fn axioms() {
        for qs in [ex1(), ex2(), make_named(NamedKind::Flip, 2).unwrap()] {
            let wa = WordActions::new(&qs, 6).unwrap();
            assert!(check_braided_monoid_axioms(&wa, 3).unwrap().all());
        }
    }

    #[test]
    fn ex2_veronese() {
        let v = veronese_solution(&ex2(), 2).unwrap();
        assert_eq!(v.labels, vec![w(&[1, 1]), w(&[1, 2]), w(&[1, 3])]);
        assert_eq!(v.base.r(1, 1), (2, 0));
        assert_eq!((0..3).map(|k| v.base.left(1, k)).collect::<Vec<_>>(), vec![1, 2, 0]);
        let p = prolongation_sequence(&ex2(), 4).unwrap();
        assert_eq!(p.solutions[0], p.solutions[2]);
        assert_eq!(p.solutions[1], p.solutions[3]);
        assert_ne!(p.solutions[0], p.solutions[1]);
        assert_eq!(p.return_degree, Some(3));
        assert!(idempotence_of_restriction(&ex2(), 3).unwrap());
    }

    #[test]
    fn permutation_mixed_degrees() {
        let wa = WordActions::new(&make_permutation_solution(&[2, 1]).unwrap(), 6).unwrap();
        let m = mixed_degree_powers(&wa, 1, 2).unwrap();
        assert!(m.cube_equals_rho && !m.square_equals_rho);
    }

    #[test]
    fn degree_one_is_identity() {
        let v = veronese_solution(&ex2(), 1).unwrap();
        assert_eq!(v.base, ex2());
    }
}
