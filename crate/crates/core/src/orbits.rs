//! Orbits of `r` on `X × X` and the canonical binomial presentation.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::growth::DirectedGraph;
use crate::ncgb::{NcPolynomial, Word};
use crate::quadset::{check_properties, QuadraticSet};

/// Graph on the `n²` pairs (flat index `i * n + j`) with an edge `p -> r(p)`.
pub fn orbit_graph(qs: &QuadraticSet) -> DirectedGraph {
    let pairs = qs.n() * qs.n();
    let mut g = DirectedGraph::new(pairs);
    for p in 0..pairs {
        g.add_edge(p, qs.r_pair(p));
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Members as 0-based pairs, sorted.
    pub members: Vec<(usize, usize)>,
    /// Deg-lex least member.
    pub minimal: (usize, usize),
    pub fixed_points: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// Orbits sorted by their minimal elements.
    pub orbits: Vec<Orbit>,
    /// `orbit_of[i * n + j]` is the index of the orbit containing `(i, j)`.
    pub orbit_of: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Weakly-connected components of the orbit graph.
pub fn r_orbits(qs: &QuadraticSet) -> OrbitDecomposition {
    let n = qs.n();
    let pairs = n * n;
    let mut parent: Vec<usize> = (0..pairs).collect();
    for p in 0..pairs {
        let (a, b) = (find(&mut parent, p), find(&mut parent, qs.r_pair(p)));
        if a != b {
            // keep the smaller index as root so roots are orbit minima
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
    }
    let roots: BTreeSet<usize> = (0..pairs).map(|p| find(&mut parent, p)).collect();
    let roots: Vec<usize> = roots.into_iter().collect();
    let mut orbit_of = vec![0; pairs];
    let mut orbits: Vec<Orbit> = roots
        .iter()
        .map(|&m| Orbit { members: Vec::new(), minimal: (m / n, m % n), fixed_points: Vec::new() })
        .collect();
    for p in 0..pairs {
        let root = find(&mut parent, p);
        let k = roots.binary_search(&root).unwrap();
        orbit_of[p] = k;
        orbits[k].members.push((p / n, p % n));
        if qs.r_pair(p) == p {
            orbits[k].fixed_points.push((p / n, p % n));
        }
    }
    OrbitDecomposition { orbits, orbit_of }
}

/// A length-2 binomial `lead - rhs` with `lead > rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: (usize, usize),
    pub rhs: (usize, usize),
}

impl Binomial {
    pub fn to_polynomial(&self) -> NcPolynomial {
        NcPolynomial::binomial(
            Word(vec![self.lead.0, self.lead.1]),
            Word(vec![self.rhs.0, self.rhs.1]),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    /// Sorted by leading pair.
    pub relations: Vec<Binomial>,
}

impl RelationSet {
    pub fn to_polynomials(&self) -> Vec<NcPolynomial> {
        self.relations.iter().map(Binomial::to_polynomial).collect()
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}

/// `xy - m` for every pair `xy` that is not the minimum `m` of its orbit.
pub fn canonical_relations(qs: &QuadraticSet) -> RelationSet {
    let dec = r_orbits(qs);
    let mut relations = Vec::new();
    for orbit in &dec.orbits {
        for &p in &orbit.members {
            if p != orbit.minimal {
                relations.push(Binomial { lead: p, rhs: orbit.minimal });
            }
        }
    }
    relations.sort();
    RelationSet { relations }
}

/// The defining relations `xy - r(xy)`, zero ones dropped.
pub fn raw_relations(qs: &QuadraticSet) -> Vec<NcPolynomial> {
    let n = qs.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (k, l) = qs.r(i, j);
            if (k, l) != (i, j) {
                out.push(NcPolynomial::binomial(Word(vec![i, j]), Word(vec![k, l])));
            }
        }
    }
    out
}

/// `k[i][j]` with `L_0(k[i][j]) = L_i(j)`; row 0 is the identity.
pub fn idempotent_structure(qs: &QuadraticSet) -> Result<Vec<Vec<usize>>> {
    let rep = check_properties(qs);
    if !rep.idempotent {
        return Err(Error::NotIdempotent);
    }
    if !rep.left_nondegenerate {
        return Err(Error::NotLeftNondegenerate);
    }
    let n = qs.n();
    let mut inv0 = vec![0; n];
    for y in 0..n {
        inv0[qs.left(0, y)] = y;
    }
    Ok((0..n).map(|i| (0..n).map(|j| inv0[qs.left(i, j)]).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadset::tests_support::{ex1, ex2};
    use crate::quadset::{make_named, make_permutation_solution, NamedKind};

    fn rels(v: &[((usize, usize), (usize, usize))]) -> Vec<Binomial> {
        let mut out: Vec<Binomial> = v
            .iter()
            .map(|&((a, b), (c, d))| Binomial { lead: (a - 1, b - 1), rhs: (c - 1, d - 1) })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn ex1_relations() {
        let expected = rels(&[
            ((3, 1), (1, 1)),
            ((2, 1), (1, 1)),
            ((3, 2), (1, 2)),
            ((2, 2), (1, 2)),
            ((3, 3), (1, 3)),
            ((2, 3), (1, 3)),
        ]);
        assert_eq!(canonical_relations(&ex1()).relations, expected);
        let dec = r_orbits(&ex1());
        assert_eq!(dec.orbits.len(), 3);
        assert!(dec.orbits.iter().all(|o| o.members.len() == 3 && o.fixed_points.len() == 1));
    }

    #[test]
    fn ex2_relations() {
        let expected = rels(&[
            ((3, 3), (1, 1)),
            ((2, 2), (1, 1)),
            ((2, 3), (1, 2)),
            ((3, 1), (1, 2)),
            ((3, 2), (1, 3)),
            ((2, 1), (1, 3)),
        ]);
        assert_eq!(canonical_relations(&ex2()).relations, expected);
        let dec = r_orbits(&ex2());
        assert_eq!(dec.orbits[0].members, vec![(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn k_table() {
        let k = idempotent_structure(&ex2()).unwrap();
        assert_eq!(k[1][2], 1);
        assert_eq!(k[2][2], 0);
        let p = idempotent_structure(&make_permutation_solution(&[3, 1, 2]).unwrap()).unwrap();
        assert!(p.iter().all(|row| row.iter().enumerate().all(|(j, &v)| v == j)));
        let id = make_named(NamedKind::Identity, 2).unwrap();
        assert_eq!(idempotent_structure(&id), Err(Error::NotLeftNondegenerate));
        let flip = make_named(NamedKind::Flip, 2).unwrap();
        assert_eq!(idempotent_structure(&flip), Err(Error::NotIdempotent));
    }

    #[test]
    fn trivial_cases() {
        let id = make_named(NamedKind::Identity, 3).unwrap();
        assert_eq!(r_orbits(&id).orbits.len(), 9);
        assert!(canonical_relations(&id).is_empty());
        let flip = make_named(NamedKind::Flip, 2).unwrap();
        assert_eq!(canonical_relations(&flip).relations, rels(&[((2, 1), (1, 2))]));
        let g = orbit_graph(&flip);
        assert_eq!(g.edge_count(), 4);
    }
}
