//! First-order differential calculi `dx_i · x_j = Σ_k ρʲ_{ik} dx_k` over quadratic algebras.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{RationalMatrix, RelationSpace};
use crate::linr::{polynomial_to_vector, psi_from_r, splus_relations, tensor_base};
use crate::ncgb::{complete, normal_words, GroebnerBasis, NcPolynomial, Word};
use crate::orbits::canonical_relations;
use crate::quadset::{make_permutation_solution, QuadraticSet};
use crate::Rat;

/// `rho[j][i][k] = ρʲ_{ik}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoMap {
    n: usize,
    rho: Vec<Vec<Vec<NcPolynomial>>>,
}

impl RhoMap {
    pub fn new(n: usize, rho: Vec<Vec<Vec<NcPolynomial>>>) -> Result<Self> {
        let ok = rho.len() == n && rho.iter().all(|m| m.len() == n && m.iter().all(|row| row.len() == n));
        if !ok {
            return Err(Error::ShapeMismatch(format!("expected {n} matrices of size {n}x{n}")));
        }
        Ok(RhoMap { n, rho })
    }

    /// `dx_i` central: `ρʲ_{ik} = δ_{ik} x_j`.
    pub fn central(n: usize) -> Self {
        let rho = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|k| if i == k { NcPolynomial::letter(j) } else { NcPolynomial::zero() })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        RhoMap { n, rho }
    }

    pub fn zero(n: usize) -> Self {
        RhoMap { n, rho: vec![vec![vec![NcPolynomial::zero(); n]; n]; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `ρʲ_{ik}`
    pub fn entry(&self, j: usize, i: usize, k: usize) -> &NcPolynomial {
        &self.rho[j][i][k]
    }

    pub fn matrix(&self, j: usize) -> &[Vec<NcPolynomial>] {
        &self.rho[j]
    }

    fn max_entry_degree(&self) -> usize {
        self.rho.iter().flatten().flatten().map(NcPolynomial::max_degree).max().unwrap_or(0)
    }
}

fn affine(a: &Rat, x: usize, y: usize) -> NcPolynomial {
    // a·x + (1 − a)·y
    let mut p = NcPolynomial::term(Word::letter(x), a.clone());
    p.add_term(Word::letter(y), Rat::one() - a);
    p
}

/// Two-generator family over the algebra of the identity permutation solution:
/// `ρ¹ = [[e, f], [e + x − y, f]]`, `ρ² = [[g, h + y − x], [g, h]]` with
/// `e = αx + (1−α)y`, `h = βx + (1−β)y`, `f = λx + (1−λ)y`, `g = μx + (1−μ)y`.
pub fn rho_family(alpha: &Rat, beta: &Rat, lambda: &Rat, mu: &Rat) -> RhoMap {
    let (x, y) = (0, 1);
    let z = NcPolynomial::letter(x).sub(&NcPolynomial::letter(y));
    let e = affine(alpha, x, y);
    let h = affine(beta, x, y);
    let f = affine(lambda, x, y);
    let g = affine(mu, x, y);
    let rho1 = vec![vec![e.clone(), f.clone()], vec![e.add(&z), f]];
    let rho2 = vec![vec![g.clone(), h.sub(&z)], vec![g, h]];
    RhoMap { n: 2, rho: vec![rho1, rho2] }
}

/// `e = f = x`, `g = h = y`.
pub fn calcsym() -> RhoMap {
    rho_family(&Rat::one(), &Rat::zero(), &Rat::one(), &Rat::zero())
}

/// Gröbner basis of the algebra with relations `x_i x_j = x_j x_j`.
pub fn identity_solution_algebra(n: usize, max_degree: usize) -> Result<GroebnerBasis> {
    let id: Vec<usize> = (1..=n).collect();
    let qs = make_permutation_solution(&id)?;
    complete(n, &canonical_relations(&qs).to_polynomials(), max_degree)
}

/// Left coefficients of `dx_1, …, dx_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    pub coefficients: Vec<NcPolynomial>,
}

impl OneForm {
    pub fn zero(n: usize) -> Self {
        OneForm { coefficients: vec![NcPolynomial::zero(); n] }
    }

    /// `dx_i`
    pub fn basis(n: usize, i: usize) -> Self {
        let mut f = Self::zero(n);
        f.coefficients[i] = NcPolynomial::one();
        f
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(NcPolynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        OneForm { coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        OneForm { coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        OneForm { coefficients: self.coefficients.iter().map(|a| a.scale(c)).collect() }
    }

    /// `a · self`
    pub fn left_multiply(&self, a: &NcPolynomial, gb: &GroebnerBasis) -> Self {
        OneForm { coefficients: self.coefficients.iter().map(|c| gb.normal_form(&a.mul(c))).collect() }
    }
}

/// `self · x_j`
fn times_letter(form: &OneForm, j: usize, rho: &RhoMap, gb: &GroebnerBasis) -> OneForm {
    let n = rho.n;
    let mut out = OneForm::zero(n);
    for (i, c) in form.coefficients.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for k in 0..n {
            let e = &rho.rho[j][i][k];
            if !e.is_zero() {
                out.coefficients[k] = out.coefficients[k].add(&c.mul(e));
            }
        }
    }
    OneForm { coefficients: out.coefficients.iter().map(|p| gb.normal_form(p)).collect() }
}

pub fn right_multiply(form: &OneForm, a: &Word, rho: &RhoMap, gb: &GroebnerBasis) -> OneForm {
    a.letters().iter().fold(form.clone(), |f, &j| times_letter(&f, j, rho, gb))
}

/// `self · p` for a polynomial `p`.
pub fn right_multiply_polynomial(form: &OneForm, p: &NcPolynomial, rho: &RhoMap, gb: &GroebnerBasis) -> OneForm {
    let mut out = OneForm::zero(rho.n);
    for (w, c) in p.terms() {
        out = out.add(&right_multiply(form, w, rho, gb).scale(c));
    }
    out
}

/// Product `ρ(a) = ρ^{a_1} ⋯ ρ^{a_m}`, reduced.
pub fn rho_of_word(a: &Word, rho: &RhoMap, gb: &GroebnerBasis) -> Vec<Vec<NcPolynomial>> {
    let n = rho.n;
    let mut m: Vec<Vec<NcPolynomial>> = (0..n)
        .map(|i| (0..n).map(|k| if i == k { NcPolynomial::one() } else { NcPolynomial::zero() }).collect())
        .collect();
    for &j in a.letters() {
        m = matrix_product(&m, &rho.rho[j], gb);
    }
    m
}

fn matrix_product(a: &[Vec<NcPolynomial>], b: &[Vec<NcPolynomial>], gb: &GroebnerBasis) -> Vec<Vec<NcPolynomial>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    let mut s = NcPolynomial::zero();
                    for (l, bl) in b.iter().enumerate() {
                        s = s.add(&a[i][l].mul(&bl[k]));
                    }
                    gb.normal_form(&s)
                })
                .collect()
        })
        .collect()
}

/// `d(u x_j) = d(u) x_j + u dx_j`, extended linearly.
pub fn differential(a: &NcPolynomial, rho: &RhoMap, gb: &GroebnerBasis) -> OneForm {
    let n = rho.n;
    let mut total = OneForm::zero(n);
    for (w, c) in a.terms() {
        let mut form = OneForm::zero(n);
        let mut prefix = Word::unit();
        for &j in w.letters() {
            form = times_letter(&form, j, rho, gb);
            let pw = gb.normal_form(&NcPolynomial::word(prefix.clone()));
            form.coefficients[j] = form.coefficients[j].add(&pw);
            prefix = prefix.concat(&Word::letter(j));
        }
        total = total.add(&form.scale(c));
    }
    total
}

/// `∂_i(a)` for every `i`.
pub fn partials(a: &NcPolynomial, rho: &RhoMap, gb: &GroebnerBasis) -> Vec<NcPolynomial> {
    differential(a, rho, gb).coefficients
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoFailure {
    /// `Σ r_ij ρⁱρʲ ≠ 0` for this relation.
    Multiplicative { relation: NcPolynomial },
    /// `Σ r_ij(ρʲ_{ik} + x_i δ_jk) ≠ 0` for this relation and `k`.
    Derivation { relation: NcPolynomial, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoReport {
    pub multiplicative: bool,
    pub derivation: bool,
    pub first_failure: Option<RhoFailure>,
}

impl RhoReport {
    pub fn passes(&self) -> bool {
        self.multiplicative && self.derivation
    }
}

/// Checks both conditions for every quadratic rule of `gb`.
pub fn check_rho_map(gb: &GroebnerBasis, rho: &RhoMap, max_degree: usize) -> Result<RhoReport> {
    gb.require_degree(max_degree)?;
    if rho.n != gb.alphabet_size() {
        return Err(Error::ShapeMismatch(format!("rho on {} letters, algebra on {}", rho.n, gb.alphabet_size())));
    }
    let need = 2 * rho.max_entry_degree().max(1);
    if need > max_degree {
        return Err(Error::InsufficientDegree { have: max_degree, need });
    }
    let n = rho.n;
    let mut report = RhoReport { multiplicative: true, derivation: true, first_failure: None };
    for rule in gb.rules().iter().filter(|r| r.lead.len() == 2) {
        let rel = rule.as_polynomial();
        let mut prod = vec![vec![NcPolynomial::zero(); n]; n];
        let mut deriv = vec![NcPolynomial::zero(); n];
        for (w, c) in rel.terms() {
            let (i, j) = (w.0[0], w.0[1]);
            let m = matrix_product(&rho.rho[i], &rho.rho[j], gb);
            for a in 0..n {
                for b in 0..n {
                    prod[a][b] = prod[a][b].add(&m[a][b].scale(c));
                }
            }
            for (k, dk) in deriv.iter_mut().enumerate() {
                let mut term = rho.rho[j][i][k].clone();
                if j == k {
                    term = term.add(&NcPolynomial::letter(i));
                }
                *dk = dk.add(&term.scale(c));
            }
        }
        if prod.iter().flatten().any(|p| !gb.reduces_to_zero(p)) {
            report.multiplicative = false;
            report.first_failure.get_or_insert(RhoFailure::Multiplicative { relation: rel.clone() });
        }
        if let Some(k) = deriv.iter().position(|p| !gb.reduces_to_zero(p)) {
            report.derivation = false;
            report.first_failure.get_or_insert(RhoFailure::Derivation { relation: rel.clone(), k });
        }
    }
    Ok(report)
}

/// `(dx − dy) · a = 0` for every normal word of degree `2..=max_degree`.
pub fn annihilator_check(rho: &RhoMap, gb: &GroebnerBasis, max_degree: usize) -> Result<bool> {
    if rho.n != 2 {
        return Err(Error::PreconditionViolated("annihilator check needs two generators".into()));
    }
    gb.require_degree(max_degree + 1)?;
    let z = OneForm::basis(2, 0).sub(&OneForm::basis(2, 1));
    for d in 2..=max_degree {
        for w in normal_words(gb, d) {
            if !right_multiply(&z, &w, rho, gb).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `d` is injective on the span of normal words of degree `1..=max_degree`.
pub fn connectedness_check(rho: &RhoMap, gb: &GroebnerBasis, max_degree: usize) -> Result<bool> {
    gb.require_degree(max_degree + rho.max_entry_degree())?;
    let words: Vec<Word> = (1..=max_degree).flat_map(|d| normal_words(gb, d)).collect();
    let images: Vec<OneForm> = words.iter().map(|w| differential(&NcPolynomial::word(w.clone()), rho, gb)).collect();
    let mut keys = std::collections::BTreeMap::new();
    for f in &images {
        for (k, c) in f.coefficients.iter().enumerate() {
            for (w, _) in c.terms() {
                let next = keys.len();
                keys.entry((k, w.clone())).or_insert(next);
            }
        }
    }
    let cols: Vec<Vec<Rat>> = images
        .iter()
        .map(|f| {
            let mut v = vec![Rat::zero(); keys.len()];
            for (k, c) in f.coefficients.iter().enumerate() {
                for (w, x) in c.terms() {
                    v[keys[&(k, w.clone())]] = x.clone();
                }
            }
            v
        })
        .collect();
    Ok(RationalMatrix::from_columns(keys.len(), &cols).rank() == words.len())
}

/// Dimension of the space of `c ∈ k^n` with `Σ r_ij (x_i c_j + c_i x_j) = 0` for every relation.
pub fn degree_lowering_derivations(n: usize, relations: &[NcPolynomial]) -> Result<usize> {
    let mut rows = Vec::new();
    for (idx, rel) in relations.iter().enumerate() {
        if rel.homogeneous_degree() != Some(2) {
            return Err(Error::NonQuadraticInput(idx));
        }
        // coefficient of x_m is a linear form in c
        let mut by_m = vec![vec![Rat::zero(); n]; n];
        for (w, r) in rel.terms() {
            let (i, j) = (w.0[0], w.0[1]);
            by_m[i][j] += r;
            by_m[j][i] += r;
        }
        rows.extend(by_m);
    }
    if rows.is_empty() {
        return Ok(n);
    }
    let cols: Vec<Vec<Rat>> = (0..n).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect();
    Ok(n - RationalMatrix::from_columns(rows.len(), &cols).rank())
}

/// Whether the algebra of `qs` has no nonzero derivation sending generators to scalars.
pub fn no_degree_lowering_derivation(qs: &QuadraticSet) -> Result<bool> {
    Ok(degree_lowering_derivations(qs.n(), &canonical_relations(qs).to_polynomials())? == 0)
}

/// Exterior algebra on the Nichols algebra: `θ_i` are generators `0..n`, `dθ_i` are `n..2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorPresentation {
    pub n: usize,
    /// Quadratic relations among the `θ_i`.
    pub theta_relations: Vec<NcPolynomial>,
    /// `(dθ_i)θ_j + Σ θ_b dθ_a R^a_i^b_j` for each `(i, j)`.
    pub bimodule_relations: Vec<NcPolynomial>,
    /// `dθ_i dθ_j − Σ dθ_b dθ_a R^a_i^b_j` for each `(i, j)`, zeros dropped.
    pub form_relations: Vec<NcPolynomial>,
    /// The span of `form_relations` equals the relation space of `S_+(R)`.
    pub forms_match_splus: bool,
}

pub fn nichols_exterior(r: &RationalMatrix) -> Result<ExteriorPresentation> {
    let n = tensor_base(r)?;
    let psi = psi_from_r(r)?;
    if psi.mul(&psi)? != psi {
        return Err(Error::NotIdempotent);
    }
    let theta_relations = crate::linr::nichols_relations(r)?;
    let entry = |a: usize, i: usize, b: usize, j: usize| &r[(a * n + b, i * n + j)];
    let mut bimodule = Vec::new();
    let mut forms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut bim = NcPolynomial::word(Word(vec![n + i, j]));
            let mut form = NcPolynomial::word(Word(vec![n + i, n + j]));
            for a in 0..n {
                for b in 0..n {
                    let c = entry(a, i, b, j);
                    if !c.is_zero() {
                        bim.add_term(Word(vec![b, n + a]), c.clone());
                        form.add_term(Word(vec![n + b, n + a]), -c.clone());
                    }
                }
            }
            bimodule.push(bim);
            if !form.is_zero() {
                forms.push(form);
            }
        }
    }
    let shifted: Vec<Vec<Rat>> = forms
        .iter()
        .map(|p| {
            let back = NcPolynomial::from_terms(
                p.terms().map(|(w, c)| (Word(w.0.iter().map(|g| g - n).collect()), c.clone())),
            );
            polynomial_to_vector(&back, n, 2)
        })
        .collect();
    let forms_match_splus = RelationSpace::span(n * n, &shifted).same_as(&splus_relations(r)?);
    Ok(ExteriorPresentation {
        n,
        theta_relations,
        bimodule_relations: bimodule,
        form_relations: forms,
        forms_match_splus,
    })
}
