//! Graphs of normal words and obstructions; growth and global dimension.

use std::collections::BTreeSet;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};
use crate::ncgb::{complete, hilbert_series, normal_words, GroebnerBasis, Word};
use crate::orbits::canonical_relations;
use crate::quadset::{check_properties, QuadraticSet};

/// Directed graph on `0..vertex_count`; self-arrows allowed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DirectedGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(vertex_count: usize) -> Self {
        DirectedGraph { vertex_count, edges: BTreeSet::new() }
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(vertex_count);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.vertex_count && b < self.vertex_count, "edge endpoint out of range");
        self.edges.insert((a, b));
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((a, 0)..(a + 1, 0)).map(|&(_, b)| b)
    }

    /// All `vertex_count²` ordered pairs not present as edges.
    pub fn complement(&self) -> Self {
        let n = self.vertex_count;
        let mut g = Self::new(n);
        for a in 0..n {
            for b in 0..n {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Graph with vertices relabeled by `p` (vertex `v` becomes `p[v]`).
    pub fn relabel(&self, p: &[usize]) -> Self {
        Self::from_edges(self.vertex_count, self.edges().map(|(a, b)| (p[a], p[b])))
    }

    pub fn weak_component_count(&self) -> usize {
        let n = self.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (a, b) in self.edges() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..n).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// Vertices reachable from `start` by a path of length ≥ 0.
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for w in self.successors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn reversed(&self) -> Self {
        Self::from_edges(self.vertex_count, self.edges().map(|(a, b)| (b, a)))
    }

    /// Strongly connected components, each with its internal edge count.
    fn components(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut pg: DiGraph<(), ()> = DiGraph::new();
        let nodes: Vec<_> = (0..self.vertex_count).map(|_| pg.add_node(())).collect();
        for (a, b) in self.edges() {
            pg.add_edge(nodes[a], nodes[b], ());
        }
        let comps: Vec<Vec<usize>> = tarjan_scc(&pg)
            .into_iter()
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
                v.sort();
                v
            })
            .collect();
        let mut comp_of = vec![0; self.vertex_count];
        for (k, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = k;
            }
        }
        let mut internal = vec![0; comps.len()];
        for (a, b) in self.edges() {
            if comp_of[a] == comp_of[b] {
                internal[comp_of[a]] += 1;
            }
        }
        (comps, internal)
    }

    pub fn has_cycle(&self) -> bool {
        let (_, internal) = self.components();
        internal.iter().any(|&e| e > 0)
    }

    /// Longest path (edge count) in an acyclic graph.
    pub fn longest_path(&self) -> Option<usize> {
        if self.has_cycle() {
            return None;
        }
        let order = self.topological_order()?;
        let mut best = vec![0usize; self.vertex_count];
        for &v in order.iter().rev() {
            best[v] = self.successors(v).map(|w| best[w] + 1).max().unwrap_or(0);
        }
        Some(best.into_iter().max().unwrap_or(0))
    }

    /// A topological order, smallest available vertex first.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count;
        let mut indeg = vec![0; n];
        for (_, b) in self.edges() {
            indeg[b] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            out.push(v);
            for w in self.successors(v) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        (out.len() == n).then_some(out)
    }

    /// Number of directed paths with exactly `len` edges.
    pub fn path_count(&self, len: usize) -> u128 {
        let mut counts = vec![1u128; self.vertex_count];
        for _ in 0..len {
            let mut next = vec![0u128; self.vertex_count];
            for (a, b) in self.edges() {
                next[a] += counts[b];
            }
            counts = next;
        }
        counts.iter().sum()
    }
}

/// `x -> y` iff `xy` is a normal word.
pub fn normal_graph(n2: &[(usize, usize)], n: usize) -> DirectedGraph {
    DirectedGraph::from_edges(n, n2.iter().copied())
}

/// Normal-word graph of a Gröbner basis.
pub fn normal_graph_of(gb: &GroebnerBasis) -> DirectedGraph {
    let n2: Vec<(usize, usize)> =
        normal_words(gb, 2).into_iter().map(|w| (w.0[0], w.0[1])).collect();
    normal_graph(&n2, gb.alphabet_size())
}

/// Obstruction graph: `x -> y` iff `xy` is not normal.
pub fn obstruction_graph_of(gb: &GroebnerBasis) -> DirectedGraph {
    normal_graph_of(gb).complement()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthClass {
    Exponential,
    Polynomial(usize),
}

/// Exponential iff two distinct cycles share a vertex; otherwise the
/// maximal number of cycles met by a single path.
pub fn gk_dimension(g: &DirectedGraph) -> GrowthClass {
    let (comps, internal) = g.components();
    // a strongly connected piece is a single cycle iff edges == vertices
    if comps.iter().zip(&internal).any(|(c, &e)| e > 0 && e > c.len()) {
        return GrowthClass::Exponential;
    }
    let k = comps.len();
    let mut comp_of = vec![0; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
    for (a, b) in g.edges() {
        if comp_of[a] != comp_of[b] {
            succ[comp_of[a]].insert(comp_of[b]);
        }
    }
    // tarjan_scc yields components in reverse topological order
    let mut best = vec![0usize; k];
    for i in 0..k {
        let w = usize::from(internal[i] > 0);
        best[i] = w + succ[i].iter().map(|&j| best[j]).max().unwrap_or(0);
    }
    GrowthClass::Polynomial(best.into_iter().max().unwrap_or(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlDim {
    Finite(usize),
    Infinite,
}

/// Infinite iff the obstruction graph has a cycle, else `1 + longest path`.
pub fn global_dimension(gw: &DirectedGraph) -> GlDim {
    match gw.longest_path() {
        None => GlDim::Infinite,
        Some(l) => GlDim::Finite(l + 1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TournamentReport {
    /// Polynomial growth of degree 1 and `C(n,2) + 1` edges.
    pub growth_and_count: bool,
    /// Acyclic tournament plus the single self-arrow at the basepoint.
    pub tournament_plus_loop: bool,
    /// Some enumeration `y_1..y_n` gives edges `{y_i -> y_j : i < j}` and one loop.
    pub relabeling_exists: bool,
    /// `relabeling[k]` is the vertex that becomes `y_{k+1}`.
    pub relabeling: Option<Vec<usize>>,
}

impl TournamentReport {
    pub fn matches(&self) -> bool {
        self.tournament_plus_loop
    }

    /// The three characterizations agree.
    pub fn equivalence_holds(&self) -> bool {
        self.growth_and_count == self.tournament_plus_loop
            && self.tournament_plus_loop == self.relabeling_exists
    }
}

/// Checks the tournament characterization of maximal graphs of growth degree 1.
///
/// Requires a loop at `basepoint` and every vertex to reach or be reached
/// from `basepoint` along a directed path.
pub fn tournament_structure(gn: &DirectedGraph, basepoint: usize) -> Result<TournamentReport> {
    let n = gn.vertex_count();
    if basepoint >= n || !gn.has_edge(basepoint, basepoint) {
        return Err(Error::PreconditionViolated("basepoint has no self-arrow".into()));
    }
    let fwd = gn.reachable_from(basepoint);
    let bwd = gn.reversed().reachable_from(basepoint);
    if (0..n).any(|v| !fwd[v] && !bwd[v]) {
        return Err(Error::PreconditionViolated(
            "some vertex is not joined to the basepoint by a directed path".into(),
        ));
    }
    let growth_and_count =
        gk_dimension(gn) == GrowthClass::Polynomial(1) && gn.edge_count() == n * (n - 1) / 2 + 1;

    let mut rest = gn.clone();
    rest.edges.remove(&(basepoint, basepoint));
    let oriented = (0..n).all(|a| {
        !rest.has_edge(a, a) && (0..a).all(|b| rest.has_edge(a, b) ^ rest.has_edge(b, a))
    });
    let order = if oriented { rest.topological_order() } else { None };
    let tournament_plus_loop = order.is_some();

    let relabeling_exists = if n <= 8 {
        crate::quadset::permutations(n).iter().any(|p| is_standard_shape(gn, p))
    } else {
        order.as_ref().map(|o| is_standard_shape(gn, o)).unwrap_or(false)
    };
    Ok(TournamentReport {
        growth_and_count,
        tournament_plus_loop,
        relabeling_exists,
        relabeling: order,
    })
}

/// Whether, reading `order[k]` as `y_{k+1}`, the edges are `{y_i -> y_j : i < j}` plus one loop.
fn is_standard_shape(g: &DirectedGraph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let loops = g.edges().filter(|(a, b)| a == b).count();
    loops == 1
        && g.edge_count() == n * (n - 1) / 2 + 1
        && g.edges().all(|(a, b)| a == b || pos[a] < pos[b])
}

/// Completes an acyclic graph to an acyclic tournament by joining each
/// missing pair in the direction that closes no cycle; `None` if `g` has a cycle.
pub fn extend_to_acyclic_tournament(g: &DirectedGraph) -> Option<DirectedGraph> {
    if g.has_cycle() {
        return None;
    }
    let n = g.vertex_count();
    let mut t = g.clone();
    for a in 0..n {
        for b in (a + 1)..n {
            if t.has_edge(a, b) || t.has_edge(b, a) {
                continue;
            }
            // a -> b closes a cycle exactly when b already reaches a
            if t.reachable_from(b)[a] {
                t.add_edge(b, a);
            } else {
                t.add_edge(a, b);
            }
            debug_assert!(!t.has_cycle());
        }
    }
    Some(t)
}

/// A cycle in the obstruction graph certifying infinite global dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlDimWitness {
    SelfArrow(usize),
    TwoCycle(usize, usize),
    NotApplicable,
}

/// For a quadratic PBW algebra whose growth degree is below the number of
/// generators, returns a short cycle of the obstruction graph.
pub fn gldiminf_witness(gb: &GroebnerBasis) -> GlDimWitness {
    let n = gb.alphabet_size();
    if !gb.is_complete() || gb.rules().iter().any(|r| r.lead.len() != 2) {
        return GlDimWitness::NotApplicable;
    }
    let gn = normal_graph_of(gb);
    match gk_dimension(&gn) {
        GrowthClass::Polynomial(m) if m < n => {}
        _ => return GlDimWitness::NotApplicable,
    }
    if let Some(v) = (0..n).find(|&v| !gn.has_edge(v, v)) {
        return GlDimWitness::SelfArrow(v);
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if !gn.has_edge(a, b) && !gn.has_edge(b, a) {
                return GlDimWitness::TwoCycle(a, b);
            }
        }
    }
    GlDimWitness::NotApplicable
}

/// Outcome of the `dim A_2` bounds for a left-nondegenerate idempotent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub dim_a2: usize,
    pub pbw: bool,
    pub growth: GrowthClass,
    /// `n ≤ dim A_2`.
    pub lower_bound_holds: bool,
    /// `dim A_2 ≤ C(n,2) + 1`, checked when PBW of growth degree 1.
    pub upper_bound_holds: Option<bool>,
    /// `dim A_d = n` for all checked `d`, checked when PBW with `dim A_2 = n`.
    pub constant_growth_holds: Option<bool>,
    pub hilbert: Vec<usize>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.lower_bound_holds
            && self.upper_bound_holds.unwrap_or(true)
            && self.constant_growth_holds.unwrap_or(true)
    }
}

/// Checks the `dim A_2` bounds through degree `max_degree`.
pub fn dim_a2_bounds_check(qs: &QuadraticSet, max_degree: usize) -> Result<BoundsReport> {
    let rep = check_properties(qs);
    if !rep.left_nondegenerate {
        return Err(Error::NotLeftNondegenerate);
    }
    if !rep.idempotent {
        return Err(Error::NotIdempotent);
    }
    let n = qs.n();
    let rels = canonical_relations(qs).to_polynomials();
    let gb = complete(n, &rels, max_degree.max(3))?;
    let pbw = gb.rules().iter().all(|r| r.lead.len() == 2);
    let hilbert = hilbert_series(&gb, max_degree.max(2)).coefficients;
    let dim_a2 = hilbert[2];
    let growth = gk_dimension(&normal_graph_of(&gb));
    let upper_bound_holds = (pbw && growth == GrowthClass::Polynomial(1))
        .then_some(dim_a2 <= n * (n - 1) / 2 + 1);
    let constant_growth_holds =
        (pbw && dim_a2 == n).then(|| hilbert.iter().skip(1).all(|&h| h == n));
    Ok(BoundsReport {
        n,
        dim_a2,
        pbw,
        growth,
        lower_bound_holds: n <= dim_a2,
        upper_bound_holds,
        constant_growth_holds,
        hilbert,
    })
}

/// The quadratic monomial algebra whose normal length-2 words are the edges of `gn`.
pub fn monomial_algebra(gn: &DirectedGraph, max_degree: usize) -> Result<GroebnerBasis> {
    let words: Vec<Word> = gn.complement().edges().map(|(a, b)| Word(vec![a, b])).collect();
    crate::ncgb::monomial_basis(gn.vertex_count(), &words, max_degree)
}
