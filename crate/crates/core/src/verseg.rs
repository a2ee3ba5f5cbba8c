//! Veronese subalgebra presentations and Segre products.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::braidmon::veronese_solution;
use crate::error::{Error, Result};
use crate::linalg::RelationSpace;
use crate::linr::polynomial_to_vector;
use crate::ncgb::{complete, hilbert_series, normal_words, GroebnerBasis, NcPolynomial, Word};
use crate::orbits::{canonical_relations, idempotent_structure};
use crate::quadset::{cartesian_product, check_properties, QuadraticSet};
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorLabel {
    /// A normal word of the original algebra.
    Word(Word),
    /// `z_{ia}` for a Segre product.
    Pair(usize, usize),
}

/// Quadratic algebra on new generators `0..generators.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation {
    pub generators: Vec<GeneratorLabel>,
    pub relations: Vec<NcPolynomial>,
}

impl QuadraticPresentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.generators[g] {
            GeneratorLabel::Word(w) => format!("v{}[{}]", g + 1, w),
            GeneratorLabel::Pair(i, a) => format!("z{}{}", i + 1, a + 1),
        }
    }
}

/// Presentation of the `d`-Veronese subalgebra of `k<x_1..x_n>/(relations)`.
///
/// Generators are the normal words of length `d`; one relation
/// `v_i v_j − Nor(v_i v_j)` for each product that is not normal.
pub fn veronese_presentation(
    n: usize,
    relations: &[NcPolynomial],
    d: usize,
) -> Result<QuadraticPresentation> {
    if d == 0 {
        return Err(Error::PreconditionViolated("degree must be at least 1".into()));
    }
    let gb = complete(n, relations, (2 * d).max(3))?;
    veronese_presentation_from_basis(&gb, d)
}

pub fn veronese_presentation_from_basis(gb: &GroebnerBasis, d: usize) -> Result<QuadraticPresentation> {
    gb.require_degree(2 * d)?;
    let labels = normal_words(gb, d);
    let index: BTreeMap<&[usize], usize> =
        labels.iter().enumerate().map(|(k, w)| (w.0.as_slice(), k)).collect();
    let mut rels = Vec::new();
    for (i, vi) in labels.iter().enumerate() {
        for (j, vj) in labels.iter().enumerate() {
            let prod = vi.concat(vj);
            let nf = gb.normal_form(&NcPolynomial::word(prod.clone()));
            if nf == NcPolynomial::word(prod) {
                continue;
            }
            let mut rel = NcPolynomial::word(Word(vec![i, j]));
            for (w, c) in nf.terms() {
                let (Some(&a), Some(&b)) = (index.get(&w.0[..d]), index.get(&w.0[d..])) else {
                    return Err(Error::NormalFormNotFactorable(d));
                };
                rel.add_term(Word(vec![a, b]), -c.clone());
            }
            rels.push(rel);
        }
    }
    Ok(QuadraticPresentation {
        generators: labels.into_iter().map(GeneratorLabel::Word).collect(),
        relations: rels,
    })
}

fn require_lnd_idempotent_braided(qs: &QuadraticSet) -> Result<()> {
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
    Ok(())
}

/// Compares the Veronese presentation with the canonical relations of `(N_d, ρ_d)`.
pub fn veronese_isomorphism_check(qs: &QuadraticSet, d: usize) -> Result<bool> {
    require_lnd_idempotent_braided(qs)?;
    let pres = veronese_presentation(qs.n(), &canonical_relations(qs).to_polynomials(), d)?;
    let sol = veronese_solution(qs, d)?;
    let labels: Vec<GeneratorLabel> = sol.labels.iter().cloned().map(GeneratorLabel::Word).collect();
    if labels != pres.generators {
        return Ok(false);
    }
    let a: BTreeSet<NcPolynomial> = pres.relations.into_iter().collect();
    let b: BTreeSet<NcPolynomial> = canonical_relations(&sol.base).to_polynomials().into_iter().collect();
    Ok(a == b)
}

/// `F_{ia,jb} = z_{ia} z_{jb} − z_{11} z_{k_ij l_ab}` over `z_{ia}` ordered lexicographically.
pub fn segre_presentation(x: &QuadraticSet, y: &QuadraticSet) -> Result<QuadraticPresentation> {
    let k = idempotent_structure(x)?;
    let l = idempotent_structure(y)?;
    let (n, m) = (x.n(), y.n());
    let z = |i: usize, a: usize| i * m + a;
    let mut rels = Vec::new();
    for i in 0..n {
        for a in 0..m {
            if (i, a) == (0, 0) {
                continue;
            }
            for j in 0..n {
                for b in 0..m {
                    rels.push(NcPolynomial::binomial(
                        Word(vec![z(i, a), z(j, b)]),
                        Word(vec![z(0, 0), z(k[i][j], l[a][b])]),
                    ));
                }
            }
        }
    }
    let generators = (0..n).flat_map(|i| (0..m).map(move |a| GeneratorLabel::Pair(i, a))).collect();
    Ok(QuadraticPresentation { generators, relations: rels })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreReport {
    /// Every `F` maps to zero in `A ⊗ B`.
    pub relations_vanish: bool,
    /// `(d, dim (A*B)_d, dim A_d · dim B_d)` for `2 ≤ d ≤ D`.
    pub dimensions: Vec<(usize, usize, usize)>,
    /// Both dimension columns equal `n·m`.
    pub dimensions_match: bool,
    /// Degree-2 relations of the product solution equal `σ23(R_A ⊗ B1 ⊗ B1 + A1 ⊗ A1 ⊗ R_B)`.
    pub relation_space_identity: bool,
    pub relation_space_dim: usize,
}

impl SegreReport {
    pub fn all_pass(&self) -> bool {
        self.relations_vanish && self.dimensions_match && self.relation_space_identity
    }
}

type Tensor = BTreeMap<(Word, Word), Rat>;

fn tensor_add(t: &mut Tensor, a: &NcPolynomial, b: &NcPolynomial, sign: &Rat) {
    for (u, c) in a.terms() {
        for (v, e) in b.terms() {
            let entry = t.entry((u.clone(), v.clone())).or_insert_with(Rat::zero);
            *entry += c * e * sign;
        }
    }
}

fn degree_two_space(n: usize, rels: &[NcPolynomial]) -> RelationSpace {
    let vecs: Vec<Vec<Rat>> = rels.iter().map(|p| polynomial_to_vector(p, n, 2)).collect();
    RelationSpace::span(n * n, &vecs)
}

pub fn segre_morphism_check(x: &QuadraticSet, y: &QuadraticSet, max_degree: usize) -> Result<SegreReport> {
    require_lnd_idempotent_braided(x)?;
    require_lnd_idempotent_braided(y)?;
    let (n, m) = (x.n(), y.n());
    let dmax = max_degree.max(3);
    let rel_a = canonical_relations(x).to_polynomials();
    let rel_b = canonical_relations(y).to_polynomials();
    let gba = complete(n, &rel_a, dmax)?;
    let gbb = complete(m, &rel_b, dmax)?;
    let k = idempotent_structure(x)?;
    let l = idempotent_structure(y)?;

    let mut relations_vanish = true;
    let one = Rat::from_integer(1.into());
    let minus = -one.clone();
    for i in 0..n {
        for a in 0..m {
            for j in 0..n {
                for b in 0..m {
                    let nf = |g: &GroebnerBasis, p: usize, q: usize| {
                        g.normal_form(&NcPolynomial::word(Word(vec![p, q])))
                    };
                    let mut t = Tensor::new();
                    tensor_add(&mut t, &nf(&gba, i, j), &nf(&gbb, a, b), &one);
                    tensor_add(&mut t, &nf(&gba, 0, k[i][j]), &nf(&gbb, 0, l[a][b]), &minus);
                    if t.values().any(|c| !c.is_zero()) {
                        relations_vanish = false;
                    }
                }
            }
        }
    }

    let prod = cartesian_product(x, y);
    let rel_ab = canonical_relations(&prod).to_polynomials();
    let gbab = complete(n * m, &rel_ab, dmax)?;
    let ha = hilbert_series(&gba, max_degree).coefficients;
    let hb = hilbert_series(&gbb, max_degree).coefficients;
    let hab = hilbert_series(&gbab, max_degree).coefficients;
    let dimensions: Vec<(usize, usize, usize)> =
        (2..=max_degree).map(|d| (d, hab[d], ha[d] * hb[d])).collect();
    let dimensions_match = dimensions.iter().all(|&(_, p, s)| p == n * m && s == n * m);

    // σ23 : V⊗V⊗W⊗W → (V⊗W)⊗(V⊗W)
    let big = n * m;
    let sigma = |i: usize, j: usize, a: usize, b: usize| (i * m + a) * big + (j * m + b);
    let ra = degree_two_space(n, &rel_a);
    let rb = degree_two_space(m, &rel_b);
    let mut vecs = Vec::new();
    for v in &ra.basis {
        for a in 0..m {
            for b in 0..m {
                let mut out = vec![Rat::zero(); big * big];
                for i in 0..n {
                    for j in 0..n {
                        out[sigma(i, j, a, b)] = v[i * n + j].clone();
                    }
                }
                vecs.push(out);
            }
        }
    }
    for v in &rb.basis {
        for i in 0..n {
            for j in 0..n {
                let mut out = vec![Rat::zero(); big * big];
                for a in 0..m {
                    for b in 0..m {
                        out[sigma(i, j, a, b)] = v[a * m + b].clone();
                    }
                }
                vecs.push(out);
            }
        }
    }
    let segre_space = RelationSpace::span(big * big, &vecs);
    let product_space = degree_two_space(big, &rel_ab);
    Ok(SegreReport {
        relations_vanish,
        dimensions,
        dimensions_match,
        relation_space_identity: segre_space.same_as(&product_space),
        relation_space_dim: product_space.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadset::tests_support::ex2;
    use crate::quadset::{make_permutation_solution, NamedKind};

    fn w(v: &[usize]) -> Word {
        Word(v.iter().map(|x| x - 1).collect())
    }

    #[test]
    fn ex2_second_veronese() {
        let pres = veronese_presentation(3, &canonical_relations(&ex2()).to_polynomials(), 2).unwrap();
        assert_eq!(pres.generator_count(), 3);
        assert_eq!(pres.relations.len(), 6);
        assert!(pres.relations.contains(&NcPolynomial::binomial(w(&[3, 3]), w(&[1, 2]))));
        assert!(pres.relations.contains(&NcPolynomial::binomial(w(&[2, 3]), w(&[1, 1]))));
        assert!(veronese_isomorphism_check(&ex2(), 2).unwrap());
    }

    #[test]
    fn free_veronese() {
        let pres = veronese_presentation(2, &[], 2).unwrap();
        assert_eq!(pres.generator_count(), 4);
        assert!(pres.relations.is_empty());
    }

    #[test]
    fn segre_identity_solutions() {
        let rid = make_permutation_solution(&[1, 2]).unwrap();
        let pres = segre_presentation(&rid, &rid).unwrap();
        assert_eq!(pres.relations.len(), 12);
        let rep = segre_morphism_check(&rid, &rid, 3).unwrap();
        assert!(rep.all_pass());
        assert_eq!(rep.dimensions, vec![(2, 4, 4), (3, 4, 4)]);
        let _ = NamedKind::Flip;
    }
}
