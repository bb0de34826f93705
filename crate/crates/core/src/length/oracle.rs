//! Brute-force length of a small Artinian module over the two-element field:
//! enumerate every submodule, order them by reverse inclusion and read off
//! the foundation rank of the zero submodule.

use std::collections::{BTreeSet, VecDeque};

use super::Subquotient;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::poset::FinitePoset;

/// Largest `dim_k M` accepted; subspaces are stored as bit sets over the
/// `2^dim` vectors.
pub const GRASSMANNIAN_MAX_DIM: usize = 5;

/// A subspace of `F_2^d`, as the set of its vectors.
type Subspace = u64;

fn span_with(h: Subspace, v: u32, nvec: u32) -> Subspace {
    let mut out = h;
    for w in 0..nvec {
        if h & (1 << w) != 0 {
            out |= 1 << (w ^ v);
        }
    }
    out
}

pub fn grassmannian_oracle(m: &Subquotient) -> Result<Ordinal> {
    let basis = m.basis_monomials()?;
    let d = basis.len();
    if d > GRASSMANNIAN_MAX_DIM {
        return Err(Error::BoundExceeded(format!(
            "oracle needs dim_k M <= {GRASSMANNIAN_MAX_DIM}, got {d}"
        )));
    }
    let n = m.nvars();

    // action[i][k]: image of basis vector k under multiplication by x_i.
    let mut action = vec![vec![0u32; d]; n];
    for (i, row) in action.iter_mut().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            let mut e = b.exponents().to_vec();
            e[i] += 1;
            let image = crate::monomial::Monomial::new(e);
            if m.lower().contains(&image) {
                continue;
            }
            let j = basis.iter().position(|c| *c == image).ok_or_else(|| {
                Error::Internal("variable action leaves the monomial basis".into())
            })?;
            row[k] = 1 << j;
        }
    }
    let apply = |i: usize, v: u32| -> u32 {
        (0..d)
            .filter(|&k| v & (1 << k) != 0)
            .fold(0, |acc, k| acc ^ action[i][k])
    };

    let nvec = 1u32 << d;
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    let mut queue = VecDeque::from([1u64]);
    seen.insert(1);
    while let Some(h) = queue.pop_front() {
        for v in 1..nvec {
            if h & (1 << v) == 0 {
                let next = span_with(h, v, nvec);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    let invariant: Vec<Subspace> = seen
        .into_iter()
        .filter(|&h| {
            (0..nvec)
                .filter(|&v| h & (1 << v) != 0)
                .all(|v| (0..n).all(|i| h & (1 << apply(i, v)) != 0))
        })
        .collect();

    let mut relations = Vec::new();
    for (a, &big) in invariant.iter().enumerate() {
        for (b, &small) in invariant.iter().enumerate() {
            if big != small && big & small == small {
                relations.push((a, b));
            }
        }
    }
    let poset = FinitePoset::new(invariant.len(), relations)?;
    let zero = invariant
        .iter()
        .position(|&h| h == 1)
        .expect("zero subspace is invariant");
    poset.foundation_rank(zero)
}
