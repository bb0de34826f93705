//! Ordinal length of monomial subquotients.
//!
//! A module is represented as `M = I/J` for monomial ideals `J ⊆ I` of a
//! polynomial ring `S`; the ring `S/J` is the case `I = S` (the unit ideal).
//! Its length is read off the fundamental cycle: for every monomial prime `p`
//! the local multiplicity `mul_M(p)`, the length of the `p`-torsion of `M_p`,
//! contributes `mul_M(p) * w^dim(S/p)` to a shuffle sum.
//!
//! Everything is exact exponent-vector combinatorics; the coefficient field
//! never enters.

mod checks;
mod oracle;
mod search;
mod standard_pairs;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monomial::{for_each_in_box, full_mask, Monomial, MonomialIdeal, MonomialPrime};
use crate::ordinal::Ordinal;

pub use checks::{
    check_semi_additivity, closure, dimension_filtration, is_closed, is_equilateral, is_open,
    is_parameter, open_report, DimensionFiltration, OpenReport, ParameterReport,
    SemiAdditivityReport,
};
pub use oracle::{grassmannian_oracle, GRASSMANNIAN_MAX_DIM};
pub use search::{search_weaker_submodule, SearchBounds, WeakerWitness};
pub use standard_pairs::{
    cycle_from_standard_pairs, standard_pairs, StandardPair, STANDARD_PAIRS_MAX_VARS,
};

/// Associated-prime scans enumerate all `2^n` monomial primes.
pub const MAX_SCAN_VARS: usize = 16;

/// The module `upper / lower` for monomial ideals `lower ⊆ upper`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subquotient {
    upper: MonomialIdeal,
    lower: MonomialIdeal,
}

impl Subquotient {
    pub fn new(upper: MonomialIdeal, lower: MonomialIdeal) -> Result<Self> {
        if upper.nvars() != lower.nvars() {
            return Err(Error::AmbientMismatch {
                expected: upper.nvars(),
                found: lower.nvars(),
            });
        }
        if !upper.contains_ideal(&lower) {
            return Err(Error::Precondition(
                "lower ideal is not contained in upper ideal".into(),
            ));
        }
        Ok(Subquotient { upper, lower })
    }

    /// The ring `S/J` as a module over itself.
    pub fn ring(lower: MonomialIdeal) -> Self {
        Subquotient {
            upper: MonomialIdeal::unit(lower.nvars()),
            lower,
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Subquotient {
            upper: MonomialIdeal::zero(nvars),
            lower: MonomialIdeal::zero(nvars),
        }
    }

    pub fn upper(&self) -> &MonomialIdeal {
        &self.upper
    }

    pub fn lower(&self) -> &MonomialIdeal {
        &self.lower
    }

    pub fn nvars(&self) -> usize {
        self.upper.nvars()
    }

    pub fn is_ring(&self) -> bool {
        self.upper.is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.lower.contains_ideal(&self.upper)
    }

    fn check_generators(&self, gens: &[Monomial]) -> Result<()> {
        for g in gens {
            if g.nvars() != self.nvars() {
                return Err(Error::AmbientMismatch {
                    expected: self.nvars(),
                    found: g.nvars(),
                });
            }
            if !self.upper.contains(g) {
                return Err(Error::Precondition(
                    "submodule generator does not lie in the module".into(),
                ));
            }
        }
        Ok(())
    }

    fn generated(&self, gens: &[Monomial]) -> Result<MonomialIdeal> {
        self.check_generators(gens)?;
        MonomialIdeal::new(self.nvars(), gens.to_vec())?.sum(&self.lower)
    }

    /// The submodule `(N + J)/J` generated by `gens`.
    pub fn submodule(&self, gens: &[Monomial]) -> Result<Subquotient> {
        Ok(Subquotient {
            upper: self.generated(gens)?,
            lower: self.lower.clone(),
        })
    }

    /// The quotient `I/(J + N)` by the submodule generated by `gens`.
    pub fn quotient_by(&self, gens: &[Monomial]) -> Result<Subquotient> {
        Ok(Subquotient {
            upper: self.upper.clone(),
            lower: self.generated(gens)?,
        })
    }

    /// `ann(M) = (J : I)`.
    pub fn annihilator(&self) -> Result<MonomialIdeal> {
        self.lower.colon(&self.upper)
    }

    /// Krull dimension of the support; `-1` for the zero module.
    pub fn dimension(&self) -> Result<i64> {
        Ok(self.annihilator()?.krull_dimension())
    }

    /// Monomials spanning `M` over the field, for Artinian `M`.
    pub fn basis_monomials(&self) -> Result<Vec<Monomial>> {
        let dim = self.dimension()?;
        if dim > 0 {
            return Err(Error::NotArtinian(dim));
        }
        // Every monomial of I outside J is killed by a power of each variable
        // modulo J, so its exponents stay below J's largest ones.
        let bounds = self.lower.max_exponents();
        let mut basis = Vec::new();
        for_each_in_box(&bounds, |m| {
            if self.upper.contains(m) && !self.lower.contains(m) {
                basis.push(m.clone());
            }
        });
        basis.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        Ok(basis)
    }

    /// `dim_k M` for Artinian `M`.
    pub fn k_dimension(&self) -> Result<u64> {
        Ok(self.basis_monomials()?.len() as u64)
    }

    /// `M ⊗ k[t_1..t_extra]`.
    pub fn extend(&self, extra: usize) -> Result<Subquotient> {
        Ok(Subquotient {
            upper: self.upper.extend(extra)?,
            lower: self.lower.extend(extra)?,
        })
    }
}

/// Positive multiplicities attached to distinct monomial primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FundamentalCycle {
    nvars: usize,
    entries: BTreeMap<MonomialPrime, u64>,
}

impl FundamentalCycle {
    pub fn new(
        nvars: usize,
        entries: impl IntoIterator<Item = (MonomialPrime, u64)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, mult) in entries {
            if p.nvars() != nvars {
                return Err(Error::AmbientMismatch {
                    expected: nvars,
                    found: p.nvars(),
                });
            }
            if mult == 0 {
                return Err(Error::Precondition(
                    "cycle multiplicities must be positive".into(),
                ));
            }
            if map.insert(p, mult).is_some() {
                return Err(Error::Precondition("repeated prime in cycle".into()));
            }
        }
        Ok(FundamentalCycle {
            nvars,
            entries: map,
        })
    }

    pub fn empty(nvars: usize) -> Self {
        FundamentalCycle {
            nvars,
            entries: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, p: &MonomialPrime) -> u64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    /// Entries in prime order (by height, then variable list).
    pub fn iter(&self) -> impl Iterator<Item = (&MonomialPrime, &u64)> {
        self.entries.iter()
    }

    pub fn primes(&self) -> Vec<MonomialPrime> {
        self.entries.keys().copied().collect()
    }

    /// Sum of all multiplicities.
    pub fn degree(&self) -> Result<u64> {
        self.entries.values().try_fold(0u64, |acc, &m| {
            acc.checked_add(m).ok_or(Error::Overflow("cycle degree"))
        })
    }

    /// Entry-wise `<=`.
    pub fn weaker_than(&self, other: &FundamentalCycle) -> bool {
        self.entries
            .iter()
            .all(|(p, &m)| m <= other.multiplicity(p))
    }

    /// Shuffle sum of `mult * w^dim(S/p)`.
    pub fn to_ordinal(&self) -> Result<Ordinal> {
        Ordinal::from_coefficients(self.entries.iter().map(|(p, &m)| (p.dim() as u64, m)))
    }
}

pub fn cycle_to_ordinal(cycle: &FundamentalCycle) -> Result<Ordinal> {
    cycle.to_ordinal()
}

/// Length of `H^0_p(M_p)`: localize, saturate the lower ideal at `p`,
/// intersect with the upper one and count the monomials in between.
pub fn local_multiplicity(m: &Subquotient, p: &MonomialPrime) -> Result<u64> {
    if p.nvars() != m.nvars() {
        return Err(Error::AmbientMismatch {
            expected: m.nvars(),
            found: p.nvars(),
        });
    }
    let upper = m.upper.localize(p);
    let lower = m.lower.localize(p);
    if lower.contains_ideal(&upper) {
        return Ok(0);
    }
    let torsion = lower.saturate(&p.ideal())?.intersect(&upper)?;

    // Monomials of the torsion outside `lower` have exponent below lower's
    // largest one in each variable of p, and exponent 0 elsewhere.
    let maxes = lower.max_exponents();
    let bounds: Vec<u32> = (0..m.nvars())
        .map(|i| {
            if p.mask() & (1 << i) != 0 {
                maxes[i]
            } else {
                1
            }
        })
        .collect();
    let inside = |g: &Monomial| g.exponents().iter().zip(&bounds).all(|(&e, &b)| e < b);
    if let Some(g) = torsion
        .generators()
        .iter()
        .find(|g| !lower.contains(g) && !inside(g))
    {
        return Err(Error::Internal(format!(
            "torsion generator {:?} escapes the finite box at a prime of height {}",
            g.exponents(),
            p.height()
        )));
    }
    let mut count = 0u64;
    for_each_in_box(&bounds, |mono| {
        if torsion.contains(mono) && !lower.contains(mono) {
            count += 1;
        }
    });
    Ok(count)
}

fn check_scan_bound(nvars: usize) -> Result<()> {
    if nvars > MAX_SCAN_VARS {
        return Err(Error::BoundExceeded(format!(
            "prime scan supports at most {MAX_SCAN_VARS} variables, got {nvars}"
        )));
    }
    Ok(())
}

/// Local multiplicities at every monomial prime, scanned over all `2^n`
/// variable subsets; `threads > 1` splits the scan across scoped threads.
pub fn fundamental_cycle_with_threads(m: &Subquotient, threads: usize) -> Result<FundamentalCycle> {
    let n = m.nvars();
    check_scan_bound(n)?;
    let masks: Vec<u32> = (0..=full_mask(n)).collect();
    let threads = threads.clamp(1, masks.len());
    let results: Vec<Result<Vec<(MonomialPrime, u64)>>> = if threads == 1 {
        vec![scan_primes(m, &masks)]
    } else {
        let chunk = masks.len().div_ceil(threads);
        std::thread::scope(|scope| {
            let handles: Vec<_> = masks
                .chunks(chunk)
                .map(|part| scope.spawn(move || scan_primes(m, part)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("prime scan thread panicked"))
                .collect()
        })
    };
    let mut entries = Vec::new();
    for r in results {
        entries.extend(r?);
    }
    FundamentalCycle::new(n, entries)
}

fn scan_primes(m: &Subquotient, masks: &[u32]) -> Result<Vec<(MonomialPrime, u64)>> {
    let mut out = Vec::new();
    for &mask in masks {
        let p = MonomialPrime::new(m.nvars(), mask)?;
        let mult = local_multiplicity(m, &p)?;
        if mult > 0 {
            out.push((p, mult));
        }
    }
    Ok(out)
}

pub fn fundamental_cycle(m: &Subquotient) -> Result<FundamentalCycle> {
    fundamental_cycle_with_threads(m, 1)
}

/// Primes with positive local multiplicity.
pub fn associated_primes(m: &Subquotient) -> Result<Vec<MonomialPrime>> {
    Ok(fundamental_cycle(m)?.primes())
}

pub fn length_of(m: &Subquotient) -> Result<Ordinal> {
    fundamental_cycle(m)?.to_ordinal()
}

/// Foundation rank of the submodule generated by `gens`, i.e. the length of
/// `M/N`.
pub fn hd(gens: &[Monomial], m: &Subquotient) -> Result<Ordinal> {
    length_of(&m.quotient_by(gens)?)
}

/// Length after adjoining `extra` variables, via the shift `w^extra * len M`.
pub fn polynomial_extension_length(m: &Subquotient, extra: usize) -> Result<Ordinal> {
    length_of(m)?.omega_shift(extra as u64)
}

/// The same length recomputed from scratch in `nvars + extra` variables.
pub fn polynomial_extension_length_recomputed(m: &Subquotient, extra: usize) -> Result<Ordinal> {
    length_of(&m.extend(extra)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Ring;

    pub(crate) const EXAMPLE: &str =
        "x^5*y*z, x^3*y^3*z, x^3*y^2*z^2, x^2*y^3*z^2, x^2*y^2*z^3, x^4*y*z^4, x^6*z^4, x^5*z^5";
    // Same as EXAMPLE but with x^4*y^3*z in place of x^3*y^3*z: one more
    // unit of torsion at (x,z), one less at the maximal ideal.
    pub(crate) const EXAMPLE_VARIANT: &str =
        "x^5*y*z, x^4*y^3*z, x^3*y^2*z^2, x^2*y^3*z^2, x^2*y^2*z^3, x^4*y*z^4, x^6*z^4, x^5*z^5";

    fn ring_module(vars: &str, ideal: &str) -> (Ring, Subquotient) {
        let r = Ring::parse_vars(vars).unwrap();
        let j = r.parse_ideal(ideal).unwrap();
        (r, Subquotient::ring(j))
    }

    fn prime(r: &Ring, vars: &[&str]) -> MonomialPrime {
        let idx: Vec<usize> = vars.iter().map(|v| r.var_index(v).unwrap()).collect();
        MonomialPrime::from_vars(r.nvars(), &idx).unwrap()
    }

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn local_multiplicity_examples() {
        let (r, m) = ring_module("x,y", "x^2, x*y");
        assert_eq!(local_multiplicity(&m, &prime(&r, &["x", "y"])).unwrap(), 1);
        assert_eq!(local_multiplicity(&m, &prime(&r, &["x"])).unwrap(), 1);
        assert_eq!(local_multiplicity(&m, &prime(&r, &["y"])).unwrap(), 0);
        assert_eq!(local_multiplicity(&m, &prime(&r, &[])).unwrap(), 0);

        let (r, m) = ring_module("x,y,z", EXAMPLE);
        assert_eq!(local_multiplicity(&m, &prime(&r, &["x", "y"])).unwrap(), 5);
        assert_eq!(local_multiplicity(&m, &prime(&r, &["y"])).unwrap(), 0);
    }

    #[test]
    fn example_cycle_and_length() {
        let (r, m) = ring_module("x,y,z", EXAMPLE);
        let cycle = fundamental_cycle(&m).unwrap();
        let listed: Vec<(String, u64)> =
            cycle.iter().map(|(p, &k)| (r.format_prime(p), k)).collect();
        let expected = [
            ("(x)", 2),
            ("(z)", 1),
            ("(x,y)", 5),
            ("(x,z)", 1),
            ("(y,z)", 3),
            ("(x,y,z)", 7),
        ];
        assert_eq!(listed.len(), expected.len());
        for ((name, k), (en, ek)) in listed.iter().zip(expected) {
            assert_eq!((name.as_str(), *k), (en, ek));
        }
        assert_eq!(length_of(&m).unwrap(), o("3w^2 + 9w + 7"));
        assert_eq!(fundamental_cycle_with_threads(&m, 4).unwrap(), cycle);

        let (r, m) = ring_module("x,y,z", EXAMPLE_VARIANT);
        let cycle = fundamental_cycle(&m).unwrap();
        assert_eq!(cycle.multiplicity(&prime(&r, &["x", "z"])), 2);
        assert_eq!(cycle.multiplicity(&prime(&r, &["x", "y", "z"])), 6);
        assert_eq!(length_of(&m).unwrap(), o("3w^2 + 10w + 6"));
    }

    #[test]
    fn domain_and_zero_module() {
        let (_, s) = ring_module("x,y,z", "0");
        let cycle = fundamental_cycle(&s).unwrap();
        assert_eq!(cycle.primes(), vec![MonomialPrime::new(3, 0).unwrap()]);
        assert_eq!(cycle.to_ordinal().unwrap(), Ordinal::omega_pow(3));
        let zero = Subquotient::ring(MonomialIdeal::unit(3));
        assert!(zero.is_zero());
        assert!(fundamental_cycle(&zero).unwrap().is_empty());
        assert_eq!(length_of(&zero).unwrap(), Ordinal::ZERO);
        assert_eq!(zero.dimension().unwrap(), -1);
    }

    #[test]
    fn named_lengths() {
        assert_eq!(
            length_of(&ring_module("x,y,z", "z*x, z*y").1).unwrap(),
            o("w^2 + w")
        );
        assert_eq!(
            length_of(&ring_module("x,y,z", "x^2, x*y").1).unwrap(),
            o("w^2 + w")
        );
        let (_, m) = ring_module("x,y", "x^3, x*y, y^2");
        assert_eq!(
            length_of(&m).unwrap(),
            Ordinal::finite(m.k_dimension().unwrap())
        );
        assert_eq!(m.k_dimension().unwrap(), 4);
    }

    #[test]
    fn associated_primes_examples() {
        let (r, m) = ring_module("x,y,z", EXAMPLE);
        let names: Vec<String> = associated_primes(&m)
            .unwrap()
            .iter()
            .map(|p| r.format_prime(p))
            .collect();
        assert_eq!(names, ["(x)", "(z)", "(x,y)", "(x,z)", "(y,z)", "(x,y,z)"]);
        let (r, m) = ring_module("x,y", "x^2, x*y");
        let names: Vec<String> = associated_primes(&m)
            .unwrap()
            .iter()
            .map(|p| r.format_prime(p))
            .collect();
        assert_eq!(names, ["(x)", "(x,y)"]);
    }

    #[test]
    fn hd_of_trivial_submodules() {
        let (r, m) = ring_module("x,y,z", "z*x, z*y");
        assert_eq!(hd(&[], &m).unwrap(), length_of(&m).unwrap());
        assert_eq!(hd(&[Monomial::one(3)], &m).unwrap(), Ordinal::ZERO);
        // (x, y, z^i) has finite colength i, then (x, y) has colength w.
        for i in 1..5u32 {
            let gens = [
                r.parse_monomial("x").unwrap(),
                r.parse_monomial("y").unwrap(),
                Monomial::var(3, 2, i),
            ];
            assert_eq!(hd(&gens, &m).unwrap(), Ordinal::finite(i as u64));
        }
        let xy = [
            r.parse_monomial("x").unwrap(),
            r.parse_monomial("y").unwrap(),
        ];
        assert_eq!(hd(&xy, &m).unwrap(), Ordinal::omega_pow(1));
    }

    #[test]
    fn subquotient_construction() {
        let r = Ring::parse_vars("x,y").unwrap();
        let i = r.parse_ideal("x").unwrap();
        let j = r.parse_ideal("x^2, x*y").unwrap();
        let m = Subquotient::new(i.clone(), j.clone()).unwrap();
        assert_eq!(length_of(&m).unwrap(), Ordinal::finite(1));
        assert!(Subquotient::new(j, i).is_err());
        assert!(m.submodule(&[r.parse_monomial("y").unwrap()]).is_err());
    }

    #[test]
    fn polynomial_extension() {
        let (_, m) = ring_module("x,y", "x^2, x*y");
        assert_eq!(polynomial_extension_length(&m, 1).unwrap(), o("w^2 + w"));
        assert_eq!(
            polynomial_extension_length_recomputed(&m, 1).unwrap(),
            o("w^2 + w")
        );
        assert_eq!(polynomial_extension_length(&m, 0).unwrap(), o("w + 1"));
        let (_, s) = ring_module("x,y,z", "0");
        assert_eq!(
            polynomial_extension_length(&s, 2).unwrap(),
            Ordinal::omega_pow(5)
        );
        assert_eq!(
            polynomial_extension_length_recomputed(&s, 2).unwrap(),
            Ordinal::omega_pow(5)
        );
    }

    #[test]
    fn cycle_validation() {
        let p = MonomialPrime::new(2, 1).unwrap();
        assert!(FundamentalCycle::new(2, [(p, 0)]).is_err());
        assert!(FundamentalCycle::new(2, [(p, 1), (p, 2)]).is_err());
        assert!(FundamentalCycle::new(3, [(p, 1)]).is_err());
        let c = FundamentalCycle::new(2, [(p, 3)]).unwrap();
        assert_eq!(cycle_to_ordinal(&c).unwrap(), o("3w"));
        assert!(FundamentalCycle::empty(2).weaker_than(&c));
    }
}
