//! Linearization of quadratic sets and the quadratic algebras attached to
//! a braiding `Ψ` on `V ⊗ V`.
//!
//! Basis of `V ⊗ V`: pair `(i, j)` is coordinate `i * n + j`. Matrices act on
//! column vectors, so column `(i, j)` of `Ψ` is `Ψ(x_i ⊗ x_j)`. Four-index
//! symbols `R^a_i^b_j` live at row `(a, b)`, column `(i, j)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{RationalMatrix, RelationSpace};
use crate::ncgb::{NcPolynomial, Word};
use crate::quadset::QuadraticSet;
use crate::Rat;

/// `n` with `n² = dim`, if any.
pub fn tensor_base(m: &RationalMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!("{}x{} is not square", m.rows(), m.cols())));
    }
    let n = (m.rows() as f64).sqrt().round() as usize;
    if n * n != m.rows() {
        return Err(Error::ShapeMismatch(format!("{} is not a square dimension", m.rows())));
    }
    Ok(n)
}

/// The flip `x_i ⊗ x_j ↦ x_j ⊗ x_i`.
pub fn flip_matrix(n: usize) -> RationalMatrix {
    RationalMatrix::from_map(n * n, |p| (p % n) * n + p / n)
}

/// `(Ψ, R)` with `Ψ(x_i ⊗ x_j) = x_{L_i(j)} ⊗ x_{R_j(i)}` and `Ψ = P·R`.
pub fn linearize(qs: &QuadraticSet) -> (RationalMatrix, RationalMatrix) {
    let n = qs.n();
    let psi = RationalMatrix::from_map(n * n, |p| qs.r_pair(p));
    let r = flip_matrix(n).mul(&psi).expect("square");
    (psi, r)
}

pub fn psi_from_r(r: &RationalMatrix) -> Result<RationalMatrix> {
    let n = tensor_base(r)?;
    flip_matrix(n).mul(r)
}

pub fn r_from_psi(psi: &RationalMatrix) -> Result<RationalMatrix> {
    let n = tensor_base(psi)?;
    flip_matrix(n).mul(psi)
}

/// `R^a_i^b_j`.
#[inline]
fn r4(r: &RationalMatrix, n: usize, a: usize, i: usize, b: usize, j: usize) -> &Rat {
    &r[(a * n + b, i * n + j)]
}

/// `id_{n^k} ⊗ M ⊗ id_{n^rest}`.
pub fn embed(m: &RationalMatrix, n: usize, k: usize, rest: usize) -> RationalMatrix {
    RationalMatrix::identity(n.pow(k as u32))
        .kron(m)
        .kron(&RationalMatrix::identity(n.pow(rest as u32)))
}

/// `Ψ` acting on factors `pos, pos + 1` (0-based) of `V^⊗m`.
pub fn local(psi: &RationalMatrix, n: usize, m: usize, pos: usize) -> RationalMatrix {
    embed(psi, n, pos, m - pos - 2)
}

pub fn check_braid(psi: &RationalMatrix) -> Result<bool> {
    let n = tensor_base(psi)?;
    let p1 = local(psi, n, 3, 0);
    let p2 = local(psi, n, 3, 1);
    Ok(p1.mul(&p2)?.mul(&p1)? == p2.mul(&p1)?.mul(&p2)?)
}

/// `R12 R13 R23 = R23 R13 R12` on `V^⊗3`.
pub fn check_matrix_ybe(r: &RationalMatrix) -> Result<bool> {
    let n = tensor_base(r)?;
    let r12 = local(r, n, 3, 0);
    let r23 = local(r, n, 3, 1);
    let p23 = local(&flip_matrix(n), n, 3, 1);
    let r13 = p23.mul(&r12)?.mul(&p23)?;
    Ok(r12.mul(&r13)?.mul(&r23)? == r23.mul(&r13)?.mul(&r12)?)
}

pub fn check_idempotent(psi: &RationalMatrix) -> Result<bool> {
    tensor_base(psi)?;
    Ok(psi.mul(psi)? == *psi)
}

fn require_idempotent(psi: &RationalMatrix) -> Result<()> {
    if check_idempotent(psi)? {
        Ok(())
    } else {
        Err(Error::NotIdempotent)
    }
}

fn columns(m: &RationalMatrix) -> Vec<Vec<Rat>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// Relation space `image(id − Ψ)` of `S_+(R)`.
pub fn splus_relations(r: &RationalMatrix) -> Result<RelationSpace> {
    let psi = psi_from_r(r)?;
    let d = psi.rows();
    let m = RationalMatrix::identity(d).sub(&psi)?;
    Ok(RelationSpace::span(d, &columns(&m)))
}

/// Whether `id + Ψ` is onto, so all degree-2 products of `S_−(R)` vanish.
pub fn sminus_degenerate_check(psi: &RationalMatrix) -> Result<bool> {
    tensor_base(psi)?;
    let m = RationalMatrix::identity(psi.rows()).add(psi)?;
    Ok(m.rank() == psi.rows())
}

/// Quadratic polynomial with coefficient `v[i * n + j]` on the word `ij`.
pub fn vector_to_polynomial(v: &[Rat], n: usize) -> NcPolynomial {
    NcPolynomial::from_terms(
        v.iter().enumerate().map(|(p, c)| (Word(vec![p / n, p % n]), c.clone())),
    )
}

/// Coefficients of a homogeneous polynomial of degree `deg` over `n` letters.
pub fn polynomial_to_vector(p: &NcPolynomial, n: usize, deg: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n.pow(deg as u32)];
    for (w, c) in p.terms() {
        assert_eq!(w.len(), deg, "polynomial is not of the requested degree");
        let idx = w.0.iter().fold(0, |acc, &x| acc * n + x);
        v[idx] = c.clone();
    }
    v
}

/// Makes every polynomial monic, drops zeros and duplicates, and sorts.
pub fn normalize_relations(rels: impl IntoIterator<Item = NcPolynomial>) -> Vec<NcPolynomial> {
    let set: BTreeSet<NcPolynomial> =
        rels.into_iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    let mut v: Vec<NcPolynomial> = set.into_iter().collect();
    v.sort_by(|a, b| a.leading().cmp(&b.leading()).then_with(|| a.cmp(b)));
    v
}

/// `Σ_{r(a,b)=(i,j)} y^a y^b − y^i y^j` for every `(i, j)`, in general
/// `Σ_{a,b} R^j_b^i_a y^b y^a − y^i y^j`; zero relations dropped.
pub fn transpose_yb_relations(r: &RationalMatrix) -> Result<Vec<NcPolynomial>> {
    let n = tensor_base(r)?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut p = NcPolynomial::zero();
            for a in 0..n {
                for b in 0..n {
                    p.add_term(Word(vec![b, a]), r4(r, n, j, b, i, a).clone());
                }
            }
            p.add_term(Word(vec![i, j]), -Rat::one());
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Relations of the quadratic dual of `S_+(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulDual {
    /// `image(Ψᵀ)` in the dual pair basis.
    pub space: RelationSpace,
    /// `Σ_{a,b} R^j_a^i_b y^a y^b` for each `(i, j)`, normalized.
    pub relations: Vec<NcPolynomial>,
}

pub fn koszul_dual_relations(r: &RationalMatrix) -> Result<KoszulDual> {
    let n = tensor_base(r)?;
    let psi = psi_from_r(r)?;
    require_idempotent(&psi)?;
    let pt = psi.transpose();
    let space = RelationSpace::span(n * n, &columns(&pt));
    let mut rels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut p = NcPolynomial::zero();
            for a in 0..n {
                for b in 0..n {
                    p.add_term(Word(vec![a, b]), r4(r, n, j, a, i, b).clone());
                }
            }
            rels.push(p);
        }
    }
    Ok(KoszulDual { space, relations: normalize_relations(rels) })
}

/// `ker Ψ` as a subspace of `V ⊗ V`.
pub fn kernel_space(psi: &RationalMatrix) -> Result<RelationSpace> {
    let n = tensor_base(psi)?;
    Ok(RelationSpace::span(n * n, &psi.kernel()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `[m, ±Ψ]!` on `V^⊗m`, via `[m]! = [m]·([m−1]! ⊗ id)`.
pub fn braided_factorial(psi: &RationalMatrix, m: usize, sign: Sign) -> Result<RationalMatrix> {
    let n = tensor_base(psi)?;
    if m == 0 {
        return Err(Error::PreconditionViolated("factorial degree must be at least 1".into()));
    }
    let signed = match sign {
        Sign::Plus => psi.clone(),
        Sign::Minus => psi.scale(&-Rat::one()),
    };
    let mut fact = RationalMatrix::identity(n);
    for k in 2..=m {
        let dim = n.pow(k as u32);
        // [k] = id + Ψ_{k-1} + Ψ_{k-2}Ψ_{k-1} + … + Ψ_1⋯Ψ_{k-1}
        let mut bracket = RationalMatrix::identity(dim);
        let mut prod = RationalMatrix::identity(dim);
        for pos in (0..k - 1).rev() {
            prod = local(&signed, n, k, pos).mul(&prod)?;
            bracket = bracket.add(&prod)?;
        }
        fact = bracket.mul(&fact.kron(&RationalMatrix::identity(n)))?;
    }
    Ok(fact)
}

/// `θ`-relations `Σ_{a,b} θ_b θ_a R^a_i^b_j` (the columns of `Ψ`), normalized.
pub fn nichols_relations(r: &RationalMatrix) -> Result<Vec<NcPolynomial>> {
    let psi = psi_from_r(r)?;
    require_idempotent(&psi)?;
    let n = tensor_base(r)?;
    Ok(normalize_relations(columns(&psi).iter().map(|c| vector_to_polynomial(c, n))))
}

/// Degree-`m` component `Σ_i V^⊗i ⊗ rel ⊗ V^⊗(m−i−2)` of the ideal generated by `rel ⊆ V ⊗ V`.
pub fn quadratic_ideal_component(rel: &RelationSpace, n: usize, m: usize) -> RelationSpace {
    let dim = n.pow(m as u32);
    let mut vecs = Vec::new();
    if m >= 2 {
        for i in 0..=m - 2 {
            let after = n.pow((m - i - 2) as u32);
            for u in 0..n.pow(i as u32) {
                for w in 0..after {
                    for v in &rel.basis {
                        let mut out = vec![Rat::zero(); dim];
                        for (p, c) in v.iter().enumerate() {
                            if !c.is_zero() {
                                out[(u * n * n + p) * after + w] = c.clone();
                            }
                        }
                        vecs.push(out);
                    }
                }
            }
        }
    }
    RelationSpace::span(dim, &vecs)
}

/// Whether `ker [m, −Ψ]!` equals the degree-`m` component of the ideal generated by `image(Ψ)`.
pub fn nichols_quadratic_check(psi: &RationalMatrix, m: usize) -> Result<bool> {
    let n = tensor_base(psi)?;
    require_idempotent(psi)?;
    if n.pow(m as u32) > 256 {
        return Err(Error::SizeTooLarge(format!("V^⊗{m} with dim V = {n}")));
    }
    let fact = braided_factorial(psi, m, Sign::Minus)?;
    let ker = RelationSpace::span(fact.cols(), &fact.kernel());
    let image = RelationSpace::span(n * n, &columns(psi));
    Ok(ker.same_as(&quadratic_ideal_component(&image, n, m)))
}

/// Index of `t^i_j` (or `u^i_j`) among the `n²` matrix generators.
#[inline]
pub fn matrix_generator(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

fn nonzero_entries(r: &RationalMatrix, n: usize) -> Vec<(usize, usize, usize, usize, Rat)> {
    let mut v = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let c = r4(r, n, a, i, b, j);
                    if !c.is_zero() {
                        v.push((a, i, b, j, c.clone()));
                    }
                }
            }
        }
    }
    v
}

/// `Σ R^i_a^k_b t^a_j t^b_l − Σ t^k_b t^i_a R^a_j^b_l` over all `(i, j, k, l)`, normalized.
pub fn frt_relations(r: &RationalMatrix) -> Result<Vec<NcPolynomial>> {
    let n = tensor_base(r)?;
    let t = |i, j| matrix_generator(n, i, j);
    let nz = nonzero_entries(r, n);
    let mut rels: BTreeMap<(usize, usize, usize, usize), NcPolynomial> = BTreeMap::new();
    // entry (p, q, s, u, c) is R^p_q^s_u
    for (i, a, k, b, c) in &nz {
        for j in 0..n {
            for l in 0..n {
                rels.entry((*i, j, *k, l))
                    .or_default()
                    .add_term(Word(vec![t(*a, j), t(*b, l)]), c.clone());
            }
        }
    }
    for (a, j, b, l, c) in &nz {
        for i in 0..n {
            for k in 0..n {
                rels.entry((i, *j, k, *l))
                    .or_default()
                    .add_term(Word(vec![t(k, *b), t(i, *a)]), -c.clone());
            }
        }
    }
    Ok(normalize_relations(rels.into_values()))
}

/// `Σ R^k_a^i_b u^b_c R^c_j^a_d u^d_l − Σ u^k_a R^a_b^i_c u^c_d R^d_j^b_l`, normalized.
pub fn braided_matrix_relations(r: &RationalMatrix) -> Result<Vec<NcPolynomial>> {
    let n = tensor_base(r)?;
    let u = |i, j| matrix_generator(n, i, j);
    let nz = nonzero_entries(r, n);
    let mut rels: BTreeMap<(usize, usize, usize, usize), NcPolynomial> = BTreeMap::new();
    for (k, a, i, b, c1) in &nz {
        for (c, j, a2, d, c2) in &nz {
            if a2 != a {
                continue;
            }
            for l in 0..n {
                rels.entry((*i, *j, *k, l))
                    .or_default()
                    .add_term(Word(vec![u(*b, *c), u(*d, l)]), c1 * c2);
            }
        }
    }
    for (a, b, i, c, c1) in &nz {
        for (d, j, b2, l, c2) in &nz {
            if b2 != b {
                continue;
            }
            for k in 0..n {
                rels.entry((*i, *j, k, *l))
                    .or_default()
                    .add_term(Word(vec![u(k, *a), u(*c, *d)]), -(c1 * c2));
            }
        }
    }
    Ok(normalize_relations(rels.into_values()))
}

/// `Φ * Ψ = σ23 (Φ ⊗ Ψ) σ23` on `(V ⊗ W)^⊗2`, pairs `(i, a)` indexed `i * m + a`.
pub fn rmatrix_star(phi: &RationalMatrix, psi: &RationalMatrix) -> Result<RationalMatrix> {
    let n = tensor_base(phi)?;
    let m = tensor_base(psi)?;
    let dim = n * n * m * m;
    // from V⊗W⊗V⊗W to V⊗V⊗W⊗W
    let sigma = RationalMatrix::from_map(dim, |p| {
        let b = p % m;
        let j = (p / m) % n;
        let a = (p / (m * n)) % m;
        let i = p / (m * n * m);
        ((i * n + j) * m + a) * m + b
    });
    sigma.transpose().mul(&phi.kron(psi))?.mul(&sigma)
}

/// How generators are printed by [`format_relation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorStyle {
    /// `x1`
    X,
    /// `y^1`
    DualY,
    /// `θ_1`
    Theta,
    /// `t^1_2`, generator `i * n + j`
    T,
    /// `u^1_2`, generator `i * n + j`
    U,
    /// `θ_i` for `i < n`, then `dθ_i`
    ThetaWithDifferentials,
}

pub fn generator_name(style: GeneratorStyle, n: usize, g: usize) -> String {
    match style {
        GeneratorStyle::X => format!("x{}", g + 1),
        GeneratorStyle::DualY => format!("y^{}", g + 1),
        GeneratorStyle::Theta => format!("θ_{}", g + 1),
        GeneratorStyle::T => format!("t^{}_{}", g / n + 1, g % n + 1),
        GeneratorStyle::U => format!("u^{}_{}", g / n + 1, g % n + 1),
        GeneratorStyle::ThetaWithDifferentials => {
            if g < n {
                format!("θ_{}", g + 1)
            } else {
                format!("dθ_{}", g - n + 1)
            }
        }
    }
}

/// `lhs = 0` with terms in decreasing deg-lex order.
pub fn format_relation(p: &NcPolynomial, style: GeneratorStyle, n: usize) -> String {
    let sep = matches!(style, GeneratorStyle::T | GeneratorStyle::U | GeneratorStyle::DualY);
    let name = move |g: usize| {
        let s = generator_name(style, n, g);
        if sep {
            format!("{s} ")
        } else {
            s
        }
    };
    let body = p.format_with(&name).replace("  ", " ");
    format!("{} = 0", body.trim_end())
}
