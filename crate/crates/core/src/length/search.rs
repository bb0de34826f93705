//! Bounded search for a monomial submodule of a prescribed length.

use super::{length_of, Subquotient};
use crate::error::{Error, Result};
use crate::monomial::{monomials_up_to, Monomial};
use crate::ordinal::Ordinal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_generators: usize,
    pub max_degree: u32,
    /// Cap on the number of submodule lengths computed.
    pub max_evaluations: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_generators: 4,
            max_degree: 6,
            max_evaluations: 20_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakerWitness {
    pub generators: Vec<Monomial>,
    pub module: Subquotient,
}

/// Looks for a submodule of `m` generated by monomials with length exactly
/// `target`. `Ok(None)` only means nothing was found within `bounds`.
pub fn search_weaker_submodule(
    m: &Subquotient,
    target: &Ordinal,
    bounds: SearchBounds,
) -> Result<Option<WeakerWitness>> {
    let total = length_of(m)?;
    if !target.weaker_than(&total) {
        return Err(Error::Precondition(format!(
            "target {target} is not weaker than the module length {total}"
        )));
    }
    if target.is_zero() {
        return Ok(Some(WeakerWitness {
            generators: Vec::new(),
            module: m.submodule(&[])?,
        }));
    }
    if *target == total {
        return Ok(Some(WeakerWitness {
            generators: m.upper().generators().to_vec(),
            module: m.clone(),
        }));
    }

    let candidates: Vec<Monomial> = monomials_up_to(m.nvars(), bounds.max_degree)
        .into_iter()
        .filter(|c| m.upper().contains(c) && !m.lower().contains(c))
        .collect();
    let mut search = Search {
        m,
        target,
        candidates: &candidates,
        bounds,
        evaluations: 0,
    };
    search.extend(&mut Vec::new(), 0)
}

struct Search<'a> {
    m: &'a Subquotient,
    target: &'a Ordinal,
    candidates: &'a [Monomial],
    bounds: SearchBounds,
    evaluations: usize,
}

impl Search<'_> {
    // Lengths only grow (coefficient-wise) as generators are added, so a
    // branch is abandoned as soon as it is no longer weaker than the target.
    fn extend(&mut self, chosen: &mut Vec<Monomial>, from: usize) -> Result<Option<WeakerWitness>> {
        if chosen.len() == self.bounds.max_generators {
            return Ok(None);
        }
        let current = self.m.submodule(chosen)?;
        for k in from..self.candidates.len() {
            let c = &self.candidates[k];
            if current.upper().contains(c) {
                continue;
            }
            if self.evaluations >= self.bounds.max_evaluations {
                return Ok(None);
            }
            self.evaluations += 1;
            chosen.push(c.clone());
            let sub = self.m.submodule(chosen)?;
            let len = length_of(&sub)?;
            if len == *self.target {
                return Ok(Some(WeakerWitness {
                    generators: chosen.clone(),
                    module: sub,
                }));
            }
            if len.weaker_than(self.target) {
                if let Some(w) = self.extend(chosen, k + 1)? {
                    return Ok(Some(w));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Ring;

    #[test]
    fn finds_x_multiples() {
        let r = Ring::parse_vars("x,y,z").unwrap();
        let m = Subquotient::ring(r.parse_ideal("x^2, x*y").unwrap());
        let target: Ordinal = "w".parse().unwrap();
        let w = search_weaker_submodule(&m, &target, SearchBounds::default())
            .unwrap()
            .unwrap();
        assert_eq!(w.generators, vec![r.parse_monomial("x").unwrap()]);
        assert_eq!(length_of(&w.module).unwrap(), target);
    }

    #[test]
    fn trivial_targets_and_precondition() {
        let r = Ring::parse_vars("x,y").unwrap();
        let m = Subquotient::ring(r.parse_ideal("x*y").unwrap());
        let total = length_of(&m).unwrap();
        let w = search_weaker_submodule(&m, &total, SearchBounds::default())
            .unwrap()
            .unwrap();
        assert_eq!(w.module, m);
        let w = search_weaker_submodule(&m, &Ordinal::ZERO, SearchBounds::default())
            .unwrap()
            .unwrap();
        assert!(w.module.is_zero());
        let too_big: Ordinal = "w^2".parse().unwrap();
        assert!(matches!(
            search_weaker_submodule(&m, &too_big, SearchBounds::default()),
            Err(Error::Precondition(_))
        ));
    }
}
