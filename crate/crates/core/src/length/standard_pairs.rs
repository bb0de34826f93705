//! Standard pairs of a monomial ideal, an independent route to the
//! fundamental cycle of `S/I`.
//!
//! A pair `(m, Z)` with `supp(m) ∩ Z = ∅` is admissible when no monomial of
//! `m * k[Z]` lies in `I`, and standard when it is maximal among admissible
//! pairs. The pairs with variable set `Z` number exactly the local
//! multiplicity of `S/I` at the prime generated by the other variables.

use std::collections::HashMap;

use super::FundamentalCycle;
use crate::error::{Error, Result};
use crate::monomial::{for_each_in_box, full_mask, Monomial, MonomialIdeal, MonomialPrime};

pub const STANDARD_PAIRS_MAX_VARS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardPair {
    pub monomial: Monomial,
    /// Bit mask of the free variables `Z`.
    pub free: u32,
}

impl StandardPair {
    pub fn free_variables(&self) -> Vec<usize> {
        (0..self.monomial.nvars())
            .filter(|&i| self.free & (1 << i) != 0)
            .collect()
    }
}

/// `I` with the variables of `dropped` set to 1.
fn specialize(
    ideal: &MonomialIdeal,
    dropped: u32,
    cache: &mut HashMap<u32, MonomialIdeal>,
) -> MonomialIdeal {
    cache
        .entry(dropped)
        .or_insert_with(|| {
            let keep = full_mask(ideal.nvars()) & !dropped;
            let gens = ideal
                .generators()
                .iter()
                .map(|g| g.restrict(keep))
                .collect();
            MonomialIdeal::new(ideal.nvars(), gens).expect("same ambient")
        })
        .clone()
}

/// All standard pairs, sorted by free set and then monomial.
pub fn standard_pairs(ideal: &MonomialIdeal) -> Result<Vec<StandardPair>> {
    let n = ideal.nvars();
    if n > STANDARD_PAIRS_MAX_VARS {
        return Err(Error::BoundExceeded(format!(
            "standard pairs support at most {STANDARD_PAIRS_MAX_VARS} variables, got {n}"
        )));
    }
    let maxes = ideal.max_exponents();
    let mut cache = HashMap::new();
    let mut pairs = Vec::new();
    for free in 0..=full_mask(n) {
        let here = specialize(ideal, free, &mut cache);
        let bounds: Vec<u32> = (0..n)
            .map(|j| if free & (1 << j) != 0 { 1 } else { maxes[j] })
            .collect();
        let wider: Vec<(usize, MonomialIdeal)> = (0..n)
            .filter(|&j| free & (1 << j) == 0)
            .map(|j| (j, specialize(ideal, free | (1 << j), &mut cache)))
            .collect();
        for_each_in_box(&bounds, |m| {
            if here.contains(m) {
                return;
            }
            let maximal = wider.iter().all(|(j, ideal_j)| {
                let stripped = m.restrict(!(1u32 << j));
                ideal_j.contains(&stripped)
            });
            if maximal {
                pairs.push(StandardPair {
                    monomial: m.clone(),
                    free,
                });
            }
        });
    }
    pairs.sort_by(|a, b| {
        a.free
            .count_ones()
            .cmp(&b.free.count_ones())
            .then(a.free.cmp(&b.free))
            .then_with(|| a.monomial.cmp(&b.monomial))
    });
    Ok(pairs)
}

/// Counts standard pairs per free set; the pair `(m, Z)` contributes to the
/// prime generated by the variables outside `Z`.
pub fn cycle_from_standard_pairs(ideal: &MonomialIdeal) -> Result<FundamentalCycle> {
    let n = ideal.nvars();
    let mut counts: HashMap<u32, u64> = HashMap::new();
    for pair in standard_pairs(ideal)? {
        *counts.entry(pair.free).or_insert(0) += 1;
    }
    let entries = counts
        .into_iter()
        .map(|(free, k)| Ok((MonomialPrime::new(n, full_mask(n) & !free)?, k)))
        .collect::<Result<Vec<_>>>()?;
    FundamentalCycle::new(n, entries)
}
