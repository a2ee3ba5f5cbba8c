//! Finite quadratic sets `(X, r)` with `r(x, y) = (L_x(y), R_y(x))`.

use crate::error::{Error, Result};

/// A finite set `{0..n}` with a map `r` on ordered pairs.
///
/// `r` is stored through its two action tables; neither bijectivity nor
/// any Yang-Baxter property is assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticSet {
    n: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

/// `left[i][j]` is the first component of `r(i, j)`, `right[i][j]` the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTables {
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub involutive: bool,
    pub idempotent: bool,
    pub braided: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub left_2_cancellative: bool,
}

/// Properties an enumerated quadratic set is required to have.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PropertyMask {
    pub involutive: bool,
    pub idempotent: bool,
    pub braided: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub left_2_cancellative: bool,
}

impl PropertyMask {
    pub fn accepts(&self, rep: &PropertyReport) -> bool {
        (!self.involutive || rep.involutive)
            && (!self.idempotent || rep.idempotent)
            && (!self.braided || rep.braided)
            && (!self.left_nondegenerate || rep.left_nondegenerate)
            && (!self.right_nondegenerate || rep.right_nondegenerate)
            && (!self.left_2_cancellative || rep.left_2_cancellative)
    }

    /// Parses a comma-separated list such as `braided,idempotent,lnd`.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let mut m = PropertyMask::default();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok {
                "involutive" => m.involutive = true,
                "idempotent" => m.idempotent = true,
                "braided" => m.braided = true,
                "left_nondegenerate" | "lnd" => m.left_nondegenerate = true,
                "right_nondegenerate" | "rnd" => m.right_nondegenerate = true,
                "left_2_cancellative" | "l2c" => m.left_2_cancellative = true,
                other => return Err(format!("unknown property `{other}`")),
            }
        }
        Ok(m)
    }
}

/// The two built-in baseline solutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedKind {
    /// `r(i, j) = (i, j)`
    Identity,
    /// `r(i, j) = (j, i)`
    Flip,
}

impl QuadraticSet {
    /// Builds a quadratic set from a 0-based map.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> (usize, usize)) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySet);
        }
        let mut left = Vec::with_capacity(n * n);
        let mut right = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (k, l) = f(i, j);
                for v in [k, l] {
                    if v >= n {
                        return Err(Error::IndexOutOfRange { index: v + 1, n });
                    }
                }
                left.push(k);
                right.push(l);
            }
        }
        Ok(QuadraticSet { n, left, right })
    }

    /// Builds from a flat 0-based table indexed by `i * n + j`.
    pub fn from_table(n: usize, table: &[(usize, usize)]) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::PreconditionViolated(format!(
                "table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        Self::from_fn(n, |i, j| table[i * n + j])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn r(&self, i: usize, j: usize) -> (usize, usize) {
        let p = i * self.n + j;
        (self.left[p], self.right[p])
    }

    /// `L_i(j)`, the left action of `i` on `j`.
    #[inline]
    pub fn left(&self, i: usize, j: usize) -> usize {
        self.left[i * self.n + j]
    }

    /// `R_j(i)`, the right action of `j` on `i`.
    #[inline]
    pub fn right(&self, i: usize, j: usize) -> usize {
        self.right[i * self.n + j]
    }

    /// `r` on flat pair indices.
    #[inline]
    pub fn r_pair(&self, p: usize) -> usize {
        self.left[p] * self.n + self.right[p]
    }

    pub fn actions(&self) -> ActionTables {
        let rows = |t: &Vec<usize>| t.chunks(self.n).map(<[usize]>::to_vec).collect();
        ActionTables { left: rows(&self.left), right: rows(&self.right) }
    }

    /// Flat table of images, indexed by `i * n + j`.
    pub fn table(&self) -> Vec<(usize, usize)> {
        self.left.iter().copied().zip(self.right.iter().copied()).collect()
    }

    /// Transports the structure along the bijection `p`: `r'(p i, p j) = (p k, p l)`.
    pub fn relabel(&self, p: &[usize]) -> Self {
        let n = self.n;
        let mut inv = vec![0; n];
        for (i, &pi) in p.iter().enumerate() {
            inv[pi] = i;
        }
        Self::from_fn(n, |a, b| {
            let (k, l) = self.r(inv[a], inv[b]);
            (p[k], p[l])
        })
        .expect("relabeling preserves range")
    }

    /// Lexicographically least table among all relabelings.
    pub fn canonical_form(&self) -> Self {
        let mut best = self.clone();
        for p in permutations(self.n) {
            let c = self.relabel(&p);
            if c.table() < best.table() {
                best = c;
            }
        }
        best
    }

    pub fn is_canonical(&self) -> bool {
        let t = self.table();
        permutations(self.n).iter().all(|p| self.relabel(p).table() >= t)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Validating constructor from 1-based entries `((i, j), (k, l))`.
pub fn make_solution(n: usize, entries: &[((usize, usize), (usize, usize))]) -> Result<QuadraticSet> {
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let mut table: Vec<Option<(usize, usize)>> = vec![None; n * n];
    for &((i, j), (k, l)) in entries {
        for v in [i, j, k, l] {
            if v == 0 || v > n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
        }
        let slot = &mut table[(i - 1) * n + (j - 1)];
        if slot.is_some() {
            return Err(Error::DuplicatePair(i, j));
        }
        *slot = Some((k - 1, l - 1));
    }
    if let Some(p) = table.iter().position(Option::is_none) {
        return Err(Error::MissingPair(p / n + 1, p % n + 1));
    }
    QuadraticSet::from_fn(n, |i, j| table[i * n + j].unwrap())
}

/// `r_f(x, y) = (f(y), y)` for a 1-based permutation `f`.
pub fn make_permutation_solution(f: &[usize]) -> Result<QuadraticSet> {
    let n = f.len();
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let mut seen = vec![false; n];
    for &v in f {
        if v == 0 || v > n || seen[v - 1] {
            return Err(Error::NotABijection(n));
        }
        seen[v - 1] = true;
    }
    QuadraticSet::from_fn(n, |_, j| (f[j] - 1, j))
}

pub fn make_named(kind: NamedKind, n: usize) -> Result<QuadraticSet> {
    match kind {
        NamedKind::Identity => QuadraticSet::from_fn(n, |i, j| (i, j)),
        NamedKind::Flip => QuadraticSet::from_fn(n, |i, j| (j, i)),
    }
}

/// Whether `r12 r23 r12 = r23 r12 r23` holds on the triple `(x, y, z)`.
pub fn braid_holds_at(qs: &QuadraticSet, x: usize, y: usize, z: usize) -> bool {
    let r12 = |t: [usize; 3]| {
        let (a, b) = qs.r(t[0], t[1]);
        [a, b, t[2]]
    };
    let r23 = |t: [usize; 3]| {
        let (b, c) = qs.r(t[1], t[2]);
        [t[0], b, c]
    };
    let t = [x, y, z];
    r12(r23(r12(t))) == r23(r12(r23(t)))
}

/// The three pointwise conditions `l1`, `r1`, `lr3` at `(x, y, z)`.
pub fn ybe_conditions_at(qs: &QuadraticSet, x: usize, y: usize, z: usize) -> (bool, bool, bool) {
    let l = |a, b| qs.left(a, b);
    let r = |a, b| qs.right(a, b);
    let l1 = l(x, l(y, z)) == l(l(x, y), l(r(x, y), z));
    let r1 = r(r(x, y), z) == r(r(x, l(y, z)), r(y, z));
    let lr3 = r(l(x, y), l(r(x, y), z)) == l(r(x, l(y, z)), r(y, z));
    (l1, r1, lr3)
}

fn is_bijective(vals: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in vals {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub fn check_properties(qs: &QuadraticSet) -> PropertyReport {
    let n = qs.n;
    let pairs = n * n;
    let idempotent = (0..pairs).all(|p| qs.r_pair(qs.r_pair(p)) == qs.r_pair(p));
    let involutive = (0..pairs).all(|p| qs.r_pair(qs.r_pair(p)) == p);
    let braided = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| braid_holds_at(qs, x, y, z))));
    let left_nondegenerate = (0..n).all(|x| is_bijective((0..n).map(|y| qs.left(x, y)), n));
    let right_nondegenerate = (0..n).all(|y| is_bijective((0..n).map(|x| qs.right(x, y)), n));
    let left_2_cancellative =
        (0..n).all(|x| is_bijective((0..n).map(|y| qs.r_pair(x * n + y)), pairs));
    PropertyReport {
        involutive,
        idempotent,
        braided,
        left_nondegenerate,
        right_nondegenerate,
        left_2_cancellative,
    }
}

/// `(r * s)` on pairs `z_{ia} = (x_i, y_a)`, indexed `i * m + a`.
pub fn cartesian_product(a: &QuadraticSet, b: &QuadraticSet) -> QuadraticSet {
    let m = b.n;
    QuadraticSet::from_fn(a.n * m, |p, q| {
        let (i, ai) = (p / m, p % m);
        let (j, bj) = (q / m, q % m);
        let (k, l) = a.r(i, j);
        let (c, d) = b.r(ai, bj);
        (k * m + c, l * m + d)
    })
    .expect("product indices in range")
}

/// All quadratic sets on `n ≤ 3` points satisfying `mask`, one per
/// isomorphism class (the lexicographically least table is kept).
pub fn enumerate_solutions(n: usize, mask: PropertyMask) -> Result<Vec<QuadraticSet>> {
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if n > 3 {
        return Err(Error::SizeTooLarge(format!("enumeration supports n <= 3, got {n}")));
    }
    let mut search = Search { n, mask, table: vec![None; n * n], out: Vec::new() };
    search.run(0);
    Ok(search.out)
}

struct Search {
    n: usize,
    mask: PropertyMask,
    table: Vec<Option<(usize, usize)>>,
    out: Vec<QuadraticSet>,
}

impl Search {
    fn run(&mut self, pos: usize) {
        let n = self.n;
        if pos == n * n {
            let t: Vec<(usize, usize)> = self.table.iter().map(|e| e.unwrap()).collect();
            let qs = QuadraticSet::from_table(n, &t).unwrap();
            if self.mask.accepts(&check_properties(&qs)) && qs.is_canonical() {
                self.out.push(qs);
            }
            return;
        }
        for k in 0..n {
            for l in 0..n {
                self.table[pos] = Some((k, l));
                if self.consistent(pos) {
                    self.run(pos + 1);
                }
            }
        }
        self.table[pos] = None;
    }

    fn get(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        self.table[i * self.n + j]
    }

    /// Partial-assignment pruning; every check only looks at defined entries.
    fn consistent(&self, pos: usize) -> bool {
        let n = self.n;
        let (i, j) = (pos / n, pos % n);
        let (k, l) = self.table[pos].unwrap();
        let m = &self.mask;
        if m.left_nondegenerate && (0..j).any(|y| self.get(i, y).unwrap().0 == k) {
            return false;
        }
        if m.right_nondegenerate && (0..i).any(|x| self.get(x, j).unwrap().1 == l) {
            return false;
        }
        if m.left_2_cancellative && (0..j).any(|y| self.get(i, y) == Some((k, l))) {
            return false;
        }
        if m.idempotent || m.involutive {
            // every defined p whose image is also defined
            for p in 0..=pos {
                let img = self.table[p].unwrap();
                let q = img.0 * n + img.1;
                if let Some(img2) = self.table[q] {
                    if m.idempotent && img2 != img {
                        return false;
                    }
                    if m.involutive && img2 != (p / n, p % n) {
                        return false;
                    }
                }
            }
        }
        if m.braided && !self.braid_partial_ok() {
            return false;
        }
        true
    }

    fn braid_partial_ok(&self) -> bool {
        let n = self.n;
        let r = |a: usize, b: usize| self.get(a, b);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = (|| {
                        let (a, b) = r(x, y)?;
                        let (b2, c) = r(b, z)?;
                        let (a2, b3) = r(a, b2)?;
                        Some([a2, b3, c])
                    })();
                    let rhs = (|| {
                        let (b, c) = r(y, z)?;
                        let (a, b2) = r(x, b)?;
                        let (b3, c2) = r(b2, c)?;
                        Some([a, b3, c2])
                    })();
                    if let (Some(u), Some(v)) = (lhs, rhs) {
                        if u != v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}


/// Fixtures shared between unit tests of several modules.
#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;

    pub fn ex1() -> QuadraticSet {
        make_permutation_solution(&[2, 3, 1]).unwrap()
    }

    pub fn ex2() -> QuadraticSet {
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
}
