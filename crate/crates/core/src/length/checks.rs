//! Structural tests built on top of [`length_of`]: semi-additivity on short
//! exact sequences, open and closed submodules, the dimension filtration and
//! the parameter criterion.

use serde::Serialize;

use super::{fundamental_cycle, length_of, Subquotient};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ordinal::{Ordinal, Truncation};

/// The five checks on `0 -> K/J -> I/J -> I/K -> 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiAdditivityReport {
    pub len_sub: Ordinal,
    pub len_module: Ordinal,
    pub len_quotient: Ordinal,
    /// `len Q + len N`
    pub lower_bound: Ordinal,
    /// `len Q # len N`
    pub upper_bound: Ordinal,
    pub lower_holds: bool,
    pub upper_holds: bool,
    /// `len Q + len N` is coefficient-wise below `len M`.
    pub sharpened_lower_holds: bool,
    /// `len N` is coefficient-wise below `len M`.
    pub sub_weaker_holds: bool,
    /// Top Cantor coefficients add up at `d = dim M`.
    pub top_additivity_holds: bool,
}

impl SemiAdditivityReport {
    pub fn all_hold(&self) -> bool {
        self.lower_holds
            && self.upper_holds
            && self.sharpened_lower_holds
            && self.sub_weaker_holds
            && self.top_additivity_holds
    }
}

pub fn check_semi_additivity(
    lower: &MonomialIdeal,
    middle: &MonomialIdeal,
    upper: &MonomialIdeal,
) -> Result<SemiAdditivityReport> {
    if !middle.contains_ideal(lower) || !upper.contains_ideal(middle) {
        return Err(Error::Precondition(
            "semi-additivity needs nested ideals J ⊆ K ⊆ I".into(),
        ));
    }
    let module = Subquotient::new(upper.clone(), lower.clone())?;
    let sub = Subquotient::new(middle.clone(), lower.clone())?;
    let quotient = Subquotient::new(upper.clone(), middle.clone())?;
    let len_module = length_of(&module)?;
    let len_sub = length_of(&sub)?;
    let len_quotient = length_of(&quotient)?;
    let lower_bound = len_quotient.ord_sum(&len_sub)?;
    let upper_bound = len_quotient.shuffle_sum(&len_sub)?;

    let top_additivity_holds = match len_module.degree() {
        None => len_sub.is_zero() && len_quotient.is_zero(),
        Some(d) => len_sub
            .coefficient(d)
            .checked_add(len_quotient.coefficient(d))
            .is_some_and(|s| s == len_module.coefficient(d)),
    };

    Ok(SemiAdditivityReport {
        lower_holds: lower_bound <= len_module,
        upper_holds: len_module <= upper_bound,
        sharpened_lower_holds: lower_bound.weaker_than(&len_module),
        sub_weaker_holds: len_sub.weaker_than(&len_module),
        top_additivity_holds,
        len_sub,
        len_module,
        len_quotient,
        lower_bound,
        upper_bound,
    })
}

/// The three equivalent openness criteria, computed independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenReport {
    pub len_sub: Ordinal,
    pub len_module: Ordinal,
    pub by_length: bool,
    pub by_valence: bool,
    pub by_cycle: bool,
}

pub fn open_report(gens: &[Monomial], m: &Subquotient) -> Result<OpenReport> {
    let sub = m.submodule(gens)?;
    let len_sub = length_of(&sub)?;
    let len_module = length_of(m)?;
    let by_valence = len_sub.checked_valence()? == len_module.checked_valence()?;
    let by_cycle = fundamental_cycle(&sub)? == fundamental_cycle(m)?;
    Ok(OpenReport {
        by_length: len_sub == len_module,
        by_valence,
        by_cycle,
        len_sub,
        len_module,
    })
}

/// Whether the submodule generated by `gens` has the same length as `m`.
pub fn is_open(gens: &[Monomial], m: &Subquotient) -> Result<bool> {
    let r = open_report(gens, m)?;
    if r.by_length != r.by_valence || r.by_length != r.by_cycle {
        return Err(Error::Internal(format!(
            "openness criteria disagree: length {}, valence {}, cycle {}",
            r.by_length, r.by_valence, r.by_cycle
        )));
    }
    Ok(r.by_length)
}

/// `len M == len N # len(M/N)`.
pub fn is_equilateral(gens: &[Monomial], m: &Subquotient) -> Result<bool> {
    let len_sub = length_of(&m.submodule(gens)?)?;
    let len_quotient = length_of(&m.quotient_by(gens)?)?;
    Ok(length_of(m)? == len_sub.shuffle_sum(&len_quotient)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionFiltration {
    /// `steps[i]` is the largest submodule of dimension at most `i`.
    pub steps: Vec<Subquotient>,
    pub lengths: Vec<Ordinal>,
    /// Length of the module itself.
    pub total: Ordinal,
    /// Every step has length equal to the `<= i` truncation of the total.
    pub truncations_match: bool,
    /// Shuffle sum of the lengths of consecutive factors.
    pub reconstruction: Ordinal,
    pub reconstruction_matches: bool,
}

/// The largest submodule of dimension at most `i`, as an upper ideal over the
/// module's own lower ideal: intersect with the primary components of `J`
/// whose dimension exceeds `i`.
fn filtration_upper(m: &Subquotient, i: i64) -> Result<MonomialIdeal> {
    m.upper()
        .intersect(&m.lower().primary_components_above_dim(i)?)
}

pub fn dimension_filtration(m: &Subquotient) -> Result<DimensionFiltration> {
    let d = m.dimension()?;
    let total = length_of(m)?;
    let mut steps = Vec::new();
    let mut lengths = Vec::new();
    let mut reconstruction = Ordinal::ZERO;
    let mut previous = m.lower().clone();
    let mut truncations_match = true;
    for i in 0..=d.max(-1) {
        let upper = filtration_upper(m, i)?;
        let step = Subquotient::new(upper.clone(), m.lower().clone())?;
        let len = length_of(&step)?;
        truncations_match &= len == total.truncate(i as u64, Truncation::Le);
        let factor = Subquotient::new(upper.clone(), previous)?;
        reconstruction = reconstruction.shuffle_sum(&length_of(&factor)?)?;
        previous = upper;
        steps.push(step);
        lengths.push(len);
    }
    if let Some(last) = steps.last() {
        if last.upper() != m.upper() {
            return Err(Error::Internal(
                "top step of the dimension filtration differs from the module".into(),
            ));
        }
    }
    Ok(DimensionFiltration {
        steps,
        lengths,
        reconstruction_matches: reconstruction == total,
        reconstruction,
        truncations_match,
        total,
    })
}

/// `N + fl d_0(M)`, as a submodule of `M`.
pub fn closure(gens: &[Monomial], m: &Subquotient) -> Result<Subquotient> {
    let sub = m.submodule(gens)?;
    let finite_part = filtration_upper(m, 0)?;
    Subquotient::new(sub.upper().sum(&finite_part)?, m.lower().clone())
}

/// Closed iff the finite (constant) Cantor coefficients of `N` and `M` agree.
pub fn is_closed(gens: &[Monomial], m: &Subquotient) -> Result<bool> {
    let len_sub = length_of(&m.submodule(gens)?)?;
    Ok(len_sub.coefficient(0) == length_of(m)?.coefficient(0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterReport {
    pub module_dim: i64,
    /// `dim M/fM`
    pub quotient_dim: i64,
    /// `dim ann_M(f)`
    pub annihilator_dim: i64,
    pub quotient_nonzero: bool,
    pub is_parameter: bool,
}

/// `f` is a parameter on `M` when `M/fM` is nonzero of smaller dimension;
/// the annihilator criterion `dim ann_M(f) < dim M` is computed alongside and
/// must agree.
pub fn is_parameter(f: &Monomial, m: &Subquotient) -> Result<ParameterReport> {
    if f.nvars() != m.nvars() {
        return Err(Error::AmbientMismatch {
            expected: m.nvars(),
            found: f.nvars(),
        });
    }
    let module_dim = m.dimension()?;
    let f_times = m.upper().mul_monomial(f)?.sum(m.lower())?;
    let quotient = Subquotient::new(m.upper().clone(), f_times)?;
    let quotient_dim = quotient.dimension()?;
    let annihilated = m.lower().colon_monomial(f)?.intersect(m.upper())?;
    let annihilator = Subquotient::new(annihilated, m.lower().clone())?;
    let annihilator_dim = annihilator.dimension()?;

    let by_quotient = quotient_dim < module_dim;
    let by_annihilator = annihilator_dim < module_dim;
    if by_quotient != by_annihilator {
        return Err(Error::Internal(format!(
            "parameter criteria disagree: dim M = {module_dim}, dim M/fM = {quotient_dim}, \
             dim ann_M(f) = {annihilator_dim}"
        )));
    }
    let quotient_nonzero = !quotient.is_zero();
    Ok(ParameterReport {
        module_dim,
        quotient_dim,
        annihilator_dim,
        quotient_nonzero,
        is_parameter: quotient_nonzero && by_quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{MonomialPrime, Ring};

    fn setup(vars: &str, ideal: &str) -> (Ring, Subquotient) {
        let r = Ring::parse_vars(vars).unwrap();
        let m = Subquotient::ring(r.parse_ideal(ideal).unwrap());
        (r, m)
    }

    fn gens(r: &Ring, text: &str) -> Vec<Monomial> {
        r.parse_ideal(text).unwrap().generators().to_vec()
    }

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn semi_additivity_examples() {
        let r = Ring::parse_vars("x,y").unwrap();
        // 0 -> (x)/(xy) -> (x,y)/(xy) -> (x,y)/(x) -> 0 splits: (x,y)/(xy) is
        // the direct sum of (x)/(xy) and (y)/(xy).
        let j = r.parse_ideal("x*y").unwrap();
        let k = r.parse_ideal("x").unwrap();
        let i = r.parse_ideal("x, y").unwrap();
        let rep = check_semi_additivity(&j, &k, &i).unwrap();
        assert!(rep.all_hold());
        assert_eq!(rep.len_module, rep.upper_bound);
        assert_eq!(rep.len_module, o("2w"));

        let rep = check_semi_additivity(&j, &j, &i).unwrap();
        assert!(rep.all_hold());
        assert_eq!(rep.len_sub, Ordinal::ZERO);
        assert_eq!(rep.len_module, rep.len_quotient);

        assert!(check_semi_additivity(&i, &j, &i).is_err());
    }

    #[test]
    fn openness_examples() {
        let (r, m) = setup("x,y,z", "x^2, x*y");
        assert!(is_open(&gens(&r, "x*z, y"), &m).unwrap());
        assert!(!is_open(&gens(&r, "x"), &m).unwrap());
        assert!(is_open(&[Monomial::one(3)], &m).unwrap());
        assert!(is_equilateral(&[Monomial::one(3)], &m).unwrap());

        // Equidimensional: primes are open exactly when not minimal.
        let (r, m) = setup("x,y,z", "x*y");
        assert!(!is_open(&gens(&r, "x"), &m).unwrap());
        assert!(!is_open(&gens(&r, "y"), &m).unwrap());
        assert!(is_open(&gens(&r, "x, z"), &m).unwrap());
        assert!(is_open(&gens(&r, "x, y"), &m).unwrap());
        assert!(is_open(&gens(&r, "x, y, z"), &m).unwrap());
    }

    #[test]
    fn open_report_paths_agree() {
        let (r, m) = setup("x,y,z", "x^2, x*y");
        let rep = open_report(&gens(&r, "y"), &m).unwrap();
        assert!(!rep.by_length && !rep.by_valence && !rep.by_cycle);
        assert_eq!(rep.len_sub, o("w^2"));
    }

    #[test]
    fn filtration_examples() {
        let (r, m) = setup("x,y", "x^2, x*y");
        let f = dimension_filtration(&m).unwrap();
        assert_eq!(f.steps.len(), 2);
        assert_eq!(f.steps[0].upper(), &r.parse_ideal("x").unwrap());
        assert_eq!(f.lengths[0], Ordinal::finite(1));
        assert!(f.truncations_match && f.reconstruction_matches);

        let (_, m) = setup("x,y,z", "x*y");
        let f = dimension_filtration(&m).unwrap();
        assert!(f.lengths[..2].iter().all(Ordinal::is_zero));
        assert_eq!(f.lengths[2], o("2w^2"));

        let (_, m) = setup("x,y,z", super::super::tests::EXAMPLE);
        let f = dimension_filtration(&m).unwrap();
        assert_eq!(f.lengths[1], o("9w + 7"));
        assert!(f.truncations_match && f.reconstruction_matches);

        let zero = Subquotient::ring(MonomialIdeal::unit(2));
        assert!(dimension_filtration(&zero).unwrap().steps.is_empty());
    }

    #[test]
    fn closure_examples() {
        let (r, m) = setup("x,y", "x^2, x*y");
        let c = closure(&[], &m).unwrap();
        assert_eq!(c.upper(), &r.parse_ideal("x").unwrap());
        assert!(!is_closed(&[], &m).unwrap());
        assert!(is_closed(&gens(&r, "x"), &m).unwrap());
        let n = gens(&r, "x, y^2");
        assert_eq!(closure(&n, &m).unwrap(), m.submodule(&n).unwrap());

        // Positive order: everything is closed.
        let (r, m) = setup("x,y,z", "x*y");
        for text in ["x", "y^3", "x*z, y", "0"] {
            assert!(is_closed(&gens(&r, text), &m).unwrap());
        }
    }

    #[test]
    fn parameter_examples() {
        let (r, s) = setup("x,y", "0");
        let x = r.parse_monomial("x").unwrap();
        let rep = is_parameter(&x, &s).unwrap();
        assert!(rep.is_parameter);
        assert_eq!(rep.annihilator_dim, -1);

        let (_, m) = setup("x,y", "x*y");
        let rep = is_parameter(&x, &m).unwrap();
        assert!(!rep.is_parameter);
        assert_eq!(rep.annihilator_dim, 1);
        assert_eq!(rep.module_dim, 1);

        let rep = is_parameter(&Monomial::one(2), &m).unwrap();
        assert!(!rep.is_parameter);
        assert!(!rep.quotient_nonzero);
    }

    #[test]
    fn graded_maximal_ideal_is_open() {
        let (r, m) = setup("x,y,z", super::super::tests::EXAMPLE);
        assert!(!is_open(&gens(&r, "x"), &m).unwrap());
        let maximal = MonomialPrime::maximal(3).ideal();
        assert!(is_open(maximal.generators(), &m).unwrap());
        // Artinian: the maximal ideal is never open.
        let (r, m) = setup("x,y", "x^2, y^2");
        assert!(!is_open(&gens(&r, "x, y"), &m).unwrap());
    }
}
