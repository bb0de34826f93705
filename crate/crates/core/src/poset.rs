//! Finite partial orders and their foundation rank.
//!
//! A [`FinitePoset`] is given by a relation on `0..n` whose transitive
//! closure is the strict order. On a finite poset the foundation rank of an
//! element is the length of the longest strictly descending chain below it,
//! and the length of the poset is the largest rank. Ranks are returned as
//! [`Ordinal`]s so they compose with the ordinal arithmetic.

use std::collections::VecDeque;

use rand::Rng;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

pub const MAX_POSET_SIZE: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    len: usize,
    relations: Vec<(usize, usize)>,
    // below[b] lists every a with a recorded relation a < b.
    below: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl FinitePoset {
    /// Builds a poset on `0..len` from pairs `(a, b)` meaning `a < b`.
    pub fn new(len: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if len > MAX_POSET_SIZE {
            return Err(Error::BoundExceeded(format!(
                "poset has {len} elements, limit is {MAX_POSET_SIZE}"
            )));
        }
        let mut relations: Vec<(usize, usize)> = relations.into_iter().collect();
        relations.sort_unstable();
        relations.dedup();
        let mut below = vec![Vec::new(); len];
        let mut above = vec![Vec::new(); len];
        for &(a, b) in &relations {
            if a >= len || b >= len {
                return Err(Error::Precondition(format!(
                    "relation {a} < {b} mentions an element outside 0..{len}"
                )));
            }
            if a == b {
                return Err(Error::CyclicRelation(a));
            }
            below[b].push(a);
            above[a].push(b);
        }

        // Kahn's algorithm; whatever is left over sits on a cycle.
        let mut indegree: Vec<usize> = below.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..len).filter(|&v| indegree[v] == 0).collect();
        let mut topo = Vec::with_capacity(len);
        while let Some(v) = queue.pop_front() {
            topo.push(v);
            for &w in &above[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if topo.len() < len {
            let stuck = (0..len).find(|&v| indegree[v] > 0).unwrap_or(0);
            return Err(Error::CyclicRelation(stuck));
        }
        Ok(FinitePoset {
            len,
            relations,
            below,
            topo,
        })
    }

    pub fn chain(len: usize) -> Result<Self> {
        Self::new(len, (1..len).map(|i| (i - 1, i)))
    }

    pub fn antichain(len: usize) -> Result<Self> {
        Self::new(len, std::iter::empty())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    /// Foundation ranks of all elements, as plain integers.
    pub fn ranks(&self) -> Vec<u64> {
        let mut rank = vec![0u64; self.len];
        for &v in &self.topo {
            rank[v] = self.below[v]
                .iter()
                .map(|&u| rank[u] + 1)
                .max()
                .unwrap_or(0);
        }
        rank
    }

    pub fn foundation_rank(&self, x: usize) -> Result<Ordinal> {
        if x >= self.len {
            return Err(Error::Precondition(format!(
                "element {x} outside 0..{}",
                self.len
            )));
        }
        Ok(Ordinal::finite(self.ranks()[x]))
    }

    /// Supremum of all foundation ranks; `0` for the empty poset.
    pub fn length(&self) -> Ordinal {
        Ordinal::finite(self.ranks().into_iter().max().unwrap_or(0))
    }

    /// Strict-order reachability: `closure[a][b]` iff `a < b`.
    pub fn transitive_closure(&self) -> Vec<Vec<bool>> {
        let mut less = vec![vec![false; self.len]; self.len];
        for &v in &self.topo {
            for &u in &self.below[v] {
                less[u][v] = true;
                for row in less.iter_mut() {
                    if row[u] {
                        row[v] = true;
                    }
                }
            }
        }
        less
    }

    /// The induced order on `subset` (elements renumbered in the given order).
    pub fn induced(&self, subset: &[usize]) -> Result<FinitePoset> {
        let less = self.transitive_closure();
        self.induced_with(&less, subset)
    }

    fn induced_with(&self, less: &[Vec<bool>], subset: &[usize]) -> Result<FinitePoset> {
        if let Some(&x) = subset.iter().find(|&&x| x >= self.len) {
            return Err(Error::Precondition(format!(
                "element {x} outside 0..{}",
                self.len
            )));
        }
        let mut rel = Vec::new();
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate() {
                if less[a][b] {
                    rel.push((i, j));
                }
            }
        }
        FinitePoset::new(subset.len(), rel)
    }

    /// The unique minimum, if any.
    pub fn minimum(&self) -> Option<usize> {
        let mut minimal = (0..self.len).filter(|&v| self.below[v].is_empty());
        let m = minimal.next()?;
        minimal.next().is_none().then_some(m)
    }

    /// The unique maximum, if any.
    pub fn maximum(&self) -> Option<usize> {
        let mut has_above = vec![false; self.len];
        for &(a, _) in &self.relations {
            has_above[a] = true;
        }
        let mut maximal = (0..self.len).filter(|&v| !has_above[v]);
        let m = maximal.next()?;
        maximal.next().is_none().then_some(m)
    }
}

/// `P + Q`: disjoint union with every element of `p` below every element of
/// `q`. Elements of `q` are shifted by `p.len()`.
pub fn sum_order(p: &FinitePoset, q: &FinitePoset) -> Result<FinitePoset> {
    let n = p.len() + q.len();
    if n > MAX_POSET_SIZE {
        return Err(Error::BoundExceeded(format!(
            "sum order would have {n} elements, limit is {MAX_POSET_SIZE}"
        )));
    }
    let shift = p.len();
    let mut rel: Vec<(usize, usize)> = p.relations().to_vec();
    rel.extend(q.relations().iter().map(|&(a, b)| (a + shift, b + shift)));
    for a in 0..p.len() {
        for b in 0..q.len() {
            rel.push((a, b + shift));
        }
    }
    FinitePoset::new(n, rel)
}

/// `P x Q` with the componentwise order; `(a, b)` is element `a * q.len() + b`.
pub fn product_order(p: &FinitePoset, q: &FinitePoset) -> Result<FinitePoset> {
    let n = p.len().saturating_mul(q.len());
    if n > MAX_POSET_SIZE {
        return Err(Error::BoundExceeded(format!(
            "product order would have {n} elements, limit is {MAX_POSET_SIZE}"
        )));
    }
    let m = q.len();
    let mut rel = Vec::new();
    for &(a, a2) in p.relations() {
        for b in 0..m {
            rel.push((a * m + b, a2 * m + b));
        }
    }
    for a in 0..p.len() {
        for &(b, b2) in q.relations() {
            rel.push((a * m + b, a * m + b2));
        }
    }
    FinitePoset::new(n, rel)
}

/// Checks `len(A) + rank_B(B) <= rank_P(B)` for subsets with every element of
/// `a` below or equal to every element of `b`.
pub fn check_subset_lemma(p: &FinitePoset, a: &[usize], b: &[usize]) -> Result<bool> {
    let less = p.transitive_closure();
    for &x in a {
        for &y in b {
            if x >= p.len() || y >= p.len() {
                return Err(Error::Precondition("subset element out of range".into()));
            }
            if x != y && !less[x][y] {
                return Err(Error::Precondition(format!("{x} is not below {y}")));
            }
        }
    }
    let len_a = p.induced_with(&less, a)?.length();
    let rank_b_in_b = p.induced_with(&less, b)?.length();
    let ranks = p.ranks();
    let rank_b_in_p = Ordinal::finite(b.iter().map(|&y| ranks[y]).max().unwrap_or(0));
    Ok(len_a.ord_sum(&rank_b_in_b)? <= rank_b_in_p)
}

/// Whether `f` is strictly increasing from `p` to `q`.
pub fn is_strictly_increasing(p: &FinitePoset, q: &FinitePoset, f: &[usize]) -> bool {
    if f.len() != p.len() || f.iter().any(|&v| v >= q.len()) {
        return false;
    }
    let less_q = q.transitive_closure();
    p.relations().iter().all(|&(a, b)| less_q[f[a]][f[b]])
}

/// For a strictly increasing `f: P -> Q` with `P` having a minimum, checks
/// `rank_Q(f(min)) + rank_P(a) <= rank_Q(f(a))` for every `a`.
pub fn check_increasing_map(p: &FinitePoset, q: &FinitePoset, f: &[usize]) -> Result<bool> {
    let bottom = p
        .minimum()
        .ok_or_else(|| Error::Precondition("domain has no minimum".into()))?;
    if !is_strictly_increasing(p, q, f) {
        return Err(Error::Precondition("map is not strictly increasing".into()));
    }
    let rp = p.ranks();
    let rq = q.ranks();
    let base = Ordinal::finite(rq[f[bottom]]);
    for a in 0..p.len() {
        if base.ord_sum(&Ordinal::finite(rp[a]))? > Ordinal::finite(rq[f[a]]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Random poset on `0..len`: each pair `i < j` is related with probability
/// `edge_prob`, then the labels are shuffled.
pub fn random_poset<R: Rng + ?Sized>(
    len: usize,
    edge_prob: f64,
    rng: &mut R,
) -> Result<FinitePoset> {
    let mut labels: Vec<usize> = (0..len).collect();
    for i in (1..len).rev() {
        labels.swap(i, rng.random_range(0..=i));
    }
    let mut rel = Vec::new();
    for i in 0..len {
        for j in (i + 1)..len {
            if rng.random_bool(edge_prob) {
                rel.push((labels[i], labels[j]));
            }
        }
    }
    FinitePoset::new(len, rel)
}

/// Samples a strictly increasing map `P -> Q` by assigning images in
/// topological order; `None` if a dead end is reached.
pub fn random_increasing_map<R: Rng + ?Sized>(
    p: &FinitePoset,
    q: &FinitePoset,
    rng: &mut R,
) -> Option<Vec<usize>> {
    let less_q = q.transitive_closure();
    let mut f = vec![usize::MAX; p.len()];
    for &v in &p.topo {
        let candidates: Vec<usize> = (0..q.len())
            .filter(|&c| p.below[v].iter().all(|&u| less_q[f[u]][c]))
            .collect();
        if candidates.is_empty() {
            return None;
        }
        f[v] = candidates[rng.random_range(0..candidates.len())];
    }
    Some(f)
}

/// Finite truncation of the "disjoint finite chains under one top" order:
/// chains of lengths `0..k` side by side, plus one element above all of them.
/// Returns the poset and the index of the top, whose rank is `k`.
pub fn truncated_chain_fan(k: usize) -> Result<(FinitePoset, usize)> {
    let (mut rel, next) = chain_fan_body(k);
    let top = next;
    rel.extend((0..next).map(|v| (v, top)));
    Ok((FinitePoset::new(next + 1, rel)?, top))
}

/// Like [`truncated_chain_fan`] but with two elements `a < top` above every
/// chain; the top then has rank `k + 1`.
pub fn truncated_chain_fan_with_step(k: usize) -> Result<(FinitePoset, usize)> {
    let (mut rel, next) = chain_fan_body(k);
    let (a, top) = (next, next + 1);
    rel.extend((0..next).flat_map(|v| [(v, a), (v, top)]));
    rel.push((a, top));
    Ok((FinitePoset::new(next + 2, rel)?, top))
}

fn chain_fan_body(k: usize) -> (Vec<(usize, usize)>, usize) {
    let mut rel = Vec::new();
    let mut next = 0;
    for chain_len in 0..k {
        for i in 0..chain_len {
            rel.push((next + i, next + i + 1));
        }
        next += chain_len + 1;
    }
    (rel, next)
}

/// Parses the text format: first line `n`, then one `a < b` per line.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_poset(text: &str) -> Result<FinitePoset> {
    let mut len: Option<usize> = None;
    let mut rel = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let col = start + (line.len() - line.trim_start().len());
        match len {
            None => {
                let n = trimmed
                    .parse::<usize>()
                    .map_err(|_| Error::syntax(col, "expected element count"))?;
                len = Some(n);
            }
            Some(_) => {
                let (a, b) = trimmed
                    .split_once('<')
                    .ok_or_else(|| Error::syntax(col, "expected `a < b`"))?;
                let a = a
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::syntax(col, "expected element index before `<`"))?;
                let b = b
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::syntax(col, "expected element index after `<`"))?;
                rel.push((a, b));
            }
        }
    }
    let len = len.ok_or_else(|| Error::syntax(offset, "missing element count"))?;
    FinitePoset::new(len, rel)
}

pub fn format_poset(p: &FinitePoset) -> String {
    let mut out = format!("{}\n", p.len());
    for &(a, b) in p.relations() {
        out.push_str(&format!("{a} < {b}\n"));
    }
    out
}
