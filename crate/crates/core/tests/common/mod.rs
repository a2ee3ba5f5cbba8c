//! Independent reference implementations used as test oracles.
//!
//! Nothing here calls into the library except for converting its types.
#![allow(dead_code)]

use std::collections::HashMap;

/// Plain table: `t[i * n + j] = r(i, j)`.
pub type Table = Vec<(usize, usize)>;

pub fn table_from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Table {
    (0..n * n).map(|p| f(p / n, p % n)).collect()
}

fn apply12(t: &Table, n: usize, (a, b, c): (usize, usize, usize)) -> (usize, usize, usize) {
    let (x, y) = t[a * n + b];
    (x, y, c)
}

fn apply23(t: &Table, n: usize, (a, b, c): (usize, usize, usize)) -> (usize, usize, usize) {
    let (y, z) = t[b * n + c];
    (a, y, z)
}

/// `r12 r23 r12 = r23 r12 r23` by direct composition on every triple.
pub fn naive_braided(t: &Table, n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let v = (a, b, c);
                let lhs = apply12(t, n, apply23(t, n, apply12(t, n, v)));
                let rhs = apply23(t, n, apply12(t, n, apply23(t, n, v)));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

pub fn naive_idempotent(t: &Table, n: usize) -> bool {
    (0..n * n).all(|p| {
        let (x, y) = t[p];
        t[x * n + y] == t[p]
    })
}

pub fn naive_left_nondegenerate(t: &Table, n: usize) -> bool {
    (0..n).all(|x| {
        let mut seen = vec![false; n];
        for y in 0..n {
            seen[t[x * n + y].0] = true;
        }
        seen.iter().all(|&s| s)
    })
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically smallest relabeling of a table.
pub fn canonical_table(t: &Table, n: usize) -> Table {
    let mut best: Option<Table> = None;
    for p in all_perms(n) {
        let mut inv = vec![0; n];
        for (i, &pi) in p.iter().enumerate() {
            inv[pi] = i;
        }
        let u = table_from_fn(n, |i, j| {
            let (k, l) = t[inv[i] * n + inv[j]];
            (p[k], p[l])
        });
        if best.as_ref().is_none_or(|b| u < *b) {
            best = Some(u);
        }
    }
    best.unwrap()
}

/// Isomorphism classes of all maps on `n²` pairs satisfying `pred`.
pub fn brute_force_classes(n: usize, pred: impl Fn(&Table) -> bool) -> Vec<Table> {
    let n2 = n * n;
    let total = n2.pow(n2 as u32);
    let mut classes = std::collections::BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let t: Table = (0..n2)
            .map(|_| {
                let v = c % n2;
                c /= n2;
                (v / n, v % n)
            })
            .collect();
        if pred(&t) {
            classes.insert(canonical_table(&t, n));
        }
    }
    classes.into_iter().collect()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn encode(w: &[usize], n: usize) -> usize {
    w.iter().fold(0, |acc, &x| acc * n + x)
}

fn decode(mut code: usize, n: usize, d: usize) -> Vec<usize> {
    let mut w = vec![0; d];
    for k in (0..d).rev() {
        w[k] = code % n;
        code /= n;
    }
    w
}

/// Congruence classes of words of length `d` in the monoid `⟨x_1..x_n | u = v⟩`.
///
/// Returns the class count and, for every word, the deg-lex smallest word in its class.
pub fn congruence_classes(n: usize, rels: &[(Vec<usize>, Vec<usize>)], d: usize) -> (usize, Vec<Vec<usize>>) {
    let total = n.pow(d as u32);
    let mut parent: Vec<usize> = (0..total).collect();
    for code in 0..total {
        let w = decode(code, n, d);
        for (u, v) in rels {
            let k = u.len();
            if k > d {
                continue;
            }
            for pos in 0..=d - k {
                if w[pos..pos + k] == u[..] {
                    let mut w2 = w.clone();
                    w2[pos..pos + k].copy_from_slice(v);
                    let (a, b) = (find(&mut parent, code), find(&mut parent, encode(&w2, n)));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
    }
    // roots are minimal codes, and code order equals lex order at fixed length
    let mins: Vec<Vec<usize>> = (0..total).map(|c| decode(find(&mut parent, c), n, d)).collect();
    let classes = (0..total).filter(|&c| find(&mut parent, c) == c).count();
    (classes, mins)
}

/// Number of length-`d` words with no factor in `forbidden`.
pub fn count_avoiding(n: usize, forbidden: &[(usize, usize)], d: usize) -> usize {
    if d == 0 {
        return 1;
    }
    let mut ends = vec![1usize; n];
    for _ in 1..d {
        let mut next = vec![0usize; n];
        for (a, &c) in ends.iter().enumerate() {
            for (b, nb) in next.iter_mut().enumerate() {
                if !forbidden.contains(&(a, b)) {
                    *nb += c;
                }
            }
        }
        ends = next;
    }
    ends.iter().sum()
}

pub const PRIME: i64 = 1_000_000_007;

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut r = 1;
    b = b.rem_euclid(PRIME);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    r
}

/// Rank of an integer matrix over `GF(PRIME)`; rows given as vectors.
pub fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(PRIME)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][c], PRIME - 2);
        for j in 0..cols {
            m[rank][j] = m[rank][j] * inv % PRIME;
        }
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] - f * m[rank][j]).rem_euclid(PRIME);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim A_d = n^d − dim I_d` for a quadratic algebra with relation vectors over `n²` (integer entries).
pub fn quadratic_dim(n: usize, rels: &[Vec<i64>], d: usize) -> usize {
    if d < 2 {
        return n.pow(d as u32);
    }
    let total = n.pow(d as u32);
    let mut rows = Vec::new();
    for i in 0..=d - 2 {
        let after = n.pow((d - i - 2) as u32);
        for u in 0..n.pow(i as u32) {
            for w in 0..after {
                for v in rels {
                    let mut row = vec![0i64; total];
                    for (p, &c) in v.iter().enumerate() {
                        row[(u * n * n + p) * after + w] = c;
                    }
                    rows.push(row);
                }
            }
        }
    }
    total - rank_mod_p(&rows)
}

/// Order of a permutation.
pub fn perm_order(f: &[usize]) -> usize {
    let n = f.len();
    let id: Vec<usize> = (0..n).collect();
    let mut g = f.to_vec();
    let mut k = 1;
    while g != id {
        g = g.iter().map(|&x| f[x]).collect();
        k += 1;
    }
    k
}

pub fn perm_power(f: &[usize], k: usize) -> Vec<usize> {
    let mut g: Vec<usize> = (0..f.len()).collect();
    for _ in 0..k {
        g = g.iter().map(|&x| f[x]).collect();
    }
    g
}

/// Memoized count of walks with `len` edges.
pub fn walk_count(n: usize, edges: &[(usize, usize)], len: usize) -> u128 {
    let mut memo: HashMap<(usize, usize), u128> = HashMap::new();
    fn go(v: usize, k: usize, e: &[(usize, usize)], memo: &mut HashMap<(usize, usize), u128>) -> u128 {
        if k == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(&(v, k)) {
            return c;
        }
        let c = e.iter().filter(|&&(a, _)| a == v).map(|&(_, b)| go(b, k - 1, e, memo)).sum();
        memo.insert((v, k), c);
        c
    }
    (0..n).map(|v| go(v, len, edges, &mut memo)).sum()
}
