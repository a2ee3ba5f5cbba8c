//! Words, deg-lex order, noncommutative polynomials and degree-bounded
//! Gröbner completion for homogeneous ideals of the free algebra.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// A word in the free monoid on `0..n`; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: usize) -> Self {
        Word(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `x^k` for a single letter.
    pub fn power(x: usize, k: usize) -> Word {
        Word(vec![x; k])
    }

    /// Space-separated 1-based indices, e.g. `1 3`.
    pub fn to_indices(&self) -> String {
        self.0.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
    }

    /// All `n^d` words of length `d` in lexicographic order.
    pub fn all_of_length(n: usize, d: usize) -> Vec<Word> {
        let mut out = vec![Word::unit()];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..n).map(move |x| {
                        let mut v = w.0.clone();
                        v.push(x);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for x in &self.0 {
            write!(f, "x{}", x + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Shorter words first, equal lengths compared letter by letter.
pub fn deglex_compare(u: &Word, v: &Word) -> Ordering {
    u.0.len().cmp(&v.0.len()).then_with(|| u.0.cmp(&v.0))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite linear combination of words with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct NcPolynomial {
    terms: BTreeMap<Word, Rat>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::unit())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Rat::one())
    }

    pub fn letter(x: usize) -> Self {
        Self::word(Word::letter(x))
    }

    pub fn term(w: Word, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    /// `u - v` for two words.
    pub fn binomial(u: Word, v: Word) -> Self {
        let mut p = Self::word(u);
        p.add_term(v, -Rat::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rat)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing deg-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    /// Deg-lex largest term.
    pub fn leading(&self) -> Option<(&Word, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Common length of all words, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::len);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&(Rat::one() / c)),
            None => Self::zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), -c.clone());
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                p.add_term(u.concat(v), a * b);
            }
        }
        p
    }

    /// `left · self · right` for words.
    pub fn sandwich(&self, left: &[usize], right: &[usize]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut v = Vec::with_capacity(left.len() + w.len() + right.len());
                    v.extend_from_slice(left);
                    v.extend_from_slice(&w.0);
                    v.extend_from_slice(right);
                    (Word(v), c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes each letter `x` by the word `map[x]`.
    pub fn substitute(&self, map: &[Word]) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| {
            let v: Vec<usize> = w.0.iter().flat_map(|&x| map[x].0.iter().copied()).collect();
            (Word(v), c.clone())
        }))
    }

    /// Pretty-prints with the largest term first, e.g. `x3x1 - x1x1`.
    pub fn format_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body: String = if w.is_empty() {
                "1".to_string()
            } else {
                w.0.iter().map(|&x| name(x)).collect::<Vec<_>>().join("")
            };
            if abs.is_one() {
                out.push_str(&body);
            } else if w.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("{abs} {body}"));
            }
        }
        out
    }
}

impl fmt::Debug for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&|x| format!("x{}", x + 1)))
    }
}

impl fmt::Display for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A rewrite rule `lead -> rhs` with every word of `rhs` deg-lex below `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Word,
    pub rhs: NcPolynomial,
}

impl Rule {
    /// The ideal element `lead - rhs`.
    pub fn as_polynomial(&self) -> NcPolynomial {
        NcPolynomial::word(self.lead.clone()).sub(&self.rhs)
    }
}

/// Counters gathered during completion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CompletionStats {
    /// Overlap ambiguities examined.
    pub ambiguities: usize,
    /// Ambiguities whose S-polynomial reduced to zero.
    pub resolved: usize,
    /// Rules produced by ambiguities (not counting input relations).
    pub rules_from_ambiguities: usize,
}

/// Reduced Gröbner basis truncated at `max_degree`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    n: usize,
    rules: Vec<Rule>,
    max_degree: usize,
    complete: bool,
    binomial: bool,
    stats: CompletionStats,
    index: HashMap<Vec<usize>, usize>,
    lead_lengths: Vec<usize>,
}

impl GroebnerBasis {
    /// A basis with no rules: the free algebra on `n` letters.
    pub fn free(n: usize) -> Self {
        let mut gb = GroebnerBasis {
            n,
            rules: Vec::new(),
            max_degree: usize::MAX,
            complete: true,
            binomial: true,
            stats: CompletionStats::default(),
            index: HashMap::new(),
            lead_lengths: Vec::new(),
        };
        gb.reindex();
        gb
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    /// Rules sorted by leading word.
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_binomial(&self) -> bool {
        self.binomial
    }

    pub fn stats(&self) -> CompletionStats {
        self.stats
    }

    /// Degree up to which normal forms are guaranteed correct.
    pub fn verified_degree(&self) -> usize {
        if self.complete {
            usize::MAX
        } else {
            self.max_degree
        }
    }

    pub fn require_degree(&self, need: usize) -> Result<()> {
        if self.verified_degree() < need {
            Err(Error::InsufficientDegree { have: self.max_degree, need })
        } else {
            Ok(())
        }
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.rules.iter().map(|r| r.lead.clone()).collect()
    }

    fn reindex(&mut self) {
        self.rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        self.index = self.rules.iter().enumerate().map(|(i, r)| (r.lead.0.clone(), i)).collect();
        let lens: BTreeSet<usize> = self.rules.iter().map(|r| r.lead.len()).collect();
        self.lead_lengths = lens.into_iter().collect();
        self.binomial = self.rules.iter().all(|r| {
            r.rhs.len() == 1 && r.rhs.leading().map(|(_, c)| c.is_one()).unwrap_or(false)
        });
    }

    /// Leftmost occurrence of a leading word: `(start, rule index)`.
    fn find_lead(&self, w: &[usize]) -> Option<(usize, usize)> {
        for s in 0..w.len() {
            for &l in &self.lead_lengths {
                if s + l > w.len() {
                    break;
                }
                if let Some(&i) = self.index.get(&w[s..s + l]) {
                    return Some((s, i));
                }
            }
        }
        None
    }

    /// Whether `w` contains no leading word.
    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_lead(&w.0).is_none()
    }

    /// Fully reduces `p`; the largest reducible term is rewritten first.
    pub fn normal_form(&self, p: &NcPolynomial) -> NcPolynomial {
        let mut work = p.terms.clone();
        let mut done = NcPolynomial::zero();
        while let Some((w, c)) = work.pop_last() {
            match self.find_lead(&w.0) {
                None => {
                    done.terms.insert(w, c);
                }
                Some((s, i)) => {
                    let rule = &self.rules[i];
                    let right = &w.0[s + rule.lead.len()..];
                    for (v, a) in &rule.rhs.terms {
                        let mut t = Vec::with_capacity(w.len());
                        t.extend_from_slice(&w.0[..s]);
                        t.extend_from_slice(&v.0);
                        t.extend_from_slice(right);
                        let e = work.entry(Word(t)).or_insert_with(Rat::zero);
                        *e += a * &c;
                    }
                    work.retain(|_, v| !v.is_zero());
                }
            }
        }
        done
    }

    /// Normal form of a single word under a binomial basis.
    pub fn normal_word(&self, w: &Word) -> Result<Word> {
        if !self.binomial {
            return Err(Error::NotBinomial);
        }
        let mut cur = w.0.clone();
        while let Some((s, i)) = self.find_lead(&cur) {
            let rule = &self.rules[i];
            let (v, _) = rule.rhs.leading().expect("binomial rule");
            let mut t = Vec::with_capacity(cur.len());
            t.extend_from_slice(&cur[..s]);
            t.extend_from_slice(&v.0);
            t.extend_from_slice(&cur[s + rule.lead.len()..]);
            cur = t;
        }
        Ok(Word(cur))
    }

    /// Whether `p` lies in the ideal (as far as the basis is verified).
    pub fn reduces_to_zero(&self, p: &NcPolynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// One overlap ambiguity `w = u·s = p·v` between two leading words.
struct Overlap {
    word: Word,
    s_poly: NcPolynomial,
}

fn overlaps_of_degree(rules: &[Rule], d: usize) -> Vec<Overlap> {
    let mut out = Vec::new();
    for u in rules {
        for v in rules {
            let (lu, lv) = (u.lead.len(), v.lead.len());
            for k in 1..lu.min(lv) {
                if lu + lv - k != d || u.lead.0[lu - k..] != v.lead.0[..k] {
                    continue;
                }
                let suffix = &v.lead.0[k..];
                let prefix = &u.lead.0[..lu - k];
                let word = Word([&u.lead.0[..], suffix].concat());
                let s_poly = u.rhs.sandwich(&[], suffix).sub(&v.rhs.sandwich(prefix, &[]));
                out.push(Overlap { word, s_poly });
            }
        }
    }
    out.sort_by(|a, b| a.word.cmp(&b.word));
    out
}

/// Completes the homogeneous `relations` over `n` letters through degree `max_degree`.
///
/// Works degree by degree, so the result is the reduced Gröbner basis of
/// the ideal truncated at `max_degree`. The basis is flagged complete when
/// every possible overlap of the rules found has degree at most `max_degree`,
/// so that no further rule can appear in any degree.
pub fn complete(n: usize, relations: &[NcPolynomial], max_degree: usize) -> Result<GroebnerBasis> {
    let mut by_degree: BTreeMap<usize, Vec<NcPolynomial>> = BTreeMap::new();
    for (i, p) in relations.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        match p.homogeneous_degree() {
            Some(0) | None => return Err(Error::NonHomogeneousInput(i)),
            Some(d) => by_degree.entry(d).or_default().push(p.clone()),
        }
        if let Some(&x) = p.terms.keys().flat_map(|w| w.0.iter()).find(|&&x| x >= n) {
            return Err(Error::IndexOutOfRange { index: x + 1, n });
        }
    }
    let mut gb = GroebnerBasis::free(n);
    gb.max_degree = max_degree;
    let mut input_beyond_bound = false;
    let first = by_degree.keys().next().copied().unwrap_or(max_degree + 1);
    for d in first..=max_degree {
        let mut candidates: Vec<(NcPolynomial, bool)> = by_degree
            .get(&d)
            .map(|v| v.iter().map(|p| (p.clone(), false)).collect())
            .unwrap_or_default();
        for o in overlaps_of_degree(&gb.rules, d) {
            candidates.push((o.s_poly, true));
        }
        let mut added = false;
        for (cand, from_overlap) in candidates {
            let red = gb.normal_form(&cand);
            if from_overlap {
                gb.stats.ambiguities += 1;
            }
            if red.is_zero() {
                if from_overlap {
                    gb.stats.resolved += 1;
                }
                continue;
            }
            if from_overlap {
                gb.stats.rules_from_ambiguities += 1;
            }
            let red = red.monic();
            let (lead, _) = red.leading().expect("nonzero");
            let lead = lead.clone();
            let rhs = NcPolynomial::word(lead.clone()).sub(&red);
            gb.rules.push(Rule { lead, rhs });
            gb.reindex();
            added = true;
        }
        if added {
            // inter-reduce right-hand sides of the degree-d rules
            for i in 0..gb.rules.len() {
                if gb.rules[i].lead.len() == d {
                    let nf = gb.normal_form(&gb.rules[i].rhs);
                    gb.rules[i].rhs = nf;
                }
            }
            gb.reindex();
        }
    }
    if by_degree.keys().any(|&d| d > max_degree) {
        input_beyond_bound = true;
    }
    let top = gb.rules.iter().map(|r| r.lead.len()).max().unwrap_or(0);
    gb.complete = !input_beyond_bound && (top == 0 || 2 * top - 1 <= max_degree);
    Ok(gb)
}

/// Monomial ideal generated by the given words (rules `w -> 0`).
pub fn monomial_basis(n: usize, words: &[Word], max_degree: usize) -> Result<GroebnerBasis> {
    let rels: Vec<NcPolynomial> = words.iter().cloned().map(NcPolynomial::word).collect();
    complete(n, &rels, max_degree)
}

/// Normal words of length `d`, deg-lex sorted.
pub fn normal_words(gb: &GroebnerBasis, d: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    extend_normal(gb, d, &mut cur, &mut out);
    out
}

fn extend_normal(gb: &GroebnerBasis, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
    if cur.len() == d {
        out.push(Word(cur.clone()));
        return;
    }
    for x in 0..gb.n {
        cur.push(x);
        let len = cur.len();
        let bad = gb
            .lead_lengths
            .iter()
            .take_while(|&&l| l <= len)
            .any(|&l| gb.index.contains_key(&cur[len - l..]));
        if !bad {
            extend_normal(gb, d, cur, out);
        }
        cur.pop();
    }
}

/// `dim A_0, …, dim A_D` read off from normal words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPrefix {
    pub coefficients: Vec<usize>,
    /// False when some coefficient exceeds the degree the basis was verified to.
    pub exact: bool,
}

pub fn hilbert_series(gb: &GroebnerBasis, max_degree: usize) -> HilbertPrefix {
    let coefficients = (0..=max_degree).map(|d| normal_words(gb, d).len()).collect();
    HilbertPrefix { coefficients, exact: gb.verified_degree() >= max_degree }
}

/// Whether homogeneous quadratic relations already form a Gröbner basis.
pub fn is_pbw(n: usize, relations: &[NcPolynomial]) -> Result<bool> {
    for (i, p) in relations.iter().enumerate() {
        if !p.is_zero() && p.homogeneous_degree() != Some(2) {
            return Err(Error::NonQuadraticInput(i));
        }
    }
    let gb = complete(n, relations, 3)?;
    Ok(gb.rules.iter().all(|r| r.lead.len() == 2))
}

/// `u • v = Nor(uv)` in the monoid of normal words.
pub fn monoid_multiply(u: &Word, v: &Word, gb: &GroebnerBasis) -> Result<Word> {
    if !gb.binomial {
        return Err(Error::NotBinomial);
    }
    gb.require_degree(u.len() + v.len())?;
    gb.normal_word(&u.concat(v))
}

/// Outcome of the left-cancellation test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cancellation {
    Cancellative,
    /// `x • u = x • v` with `u ≠ v`.
    Counterexample { x: usize, u: Word, v: Word },
}

/// Tests `x • u = x • v ⇒ u = v` for letters `x` and normal words of length ≤ d.
pub fn left_cancellative_check(gb: &GroebnerBasis, d: usize) -> Result<Cancellation> {
    if !gb.binomial {
        return Err(Error::NotBinomial);
    }
    gb.require_degree(d + 1)?;
    for len in 0..=d {
        let words = normal_words(gb, len);
        for x in 0..gb.n {
            let mut seen: HashMap<Word, Word> = HashMap::new();
            for u in &words {
                let prod = monoid_multiply(&Word::letter(x), u, gb)?;
                if let Some(prev) = seen.insert(prod, u.clone()) {
                    return Ok(Cancellation::Counterexample { x, u: prev, v: u.clone() });
                }
            }
        }
    }
    Ok(Cancellation::Cancellative)
}
