//! Ordinals below `w^w` in Cantor normal form.
//!
//! An [`Ordinal`] is a finite list of `(exponent, coefficient)` terms with
//! strictly descending exponents and nonzero coefficients; the empty list is
//! `0`. Both additions are provided: the ordinal sum [`Ordinal::ord_sum`],
//! which lets the right operand absorb lower-degree terms of the left one, and
//! the commutative shuffle (natural, Hessenberg) sum [`Ordinal::shuffle_sum`],
//! which adds Cantor coefficients degree by degree.
//!
//! All arithmetic is checked: a coefficient or exponent leaving the `u64`
//! range is reported as [`Error::Overflow`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest combined valence accepted by [`Ordinal::shuffle_sum_oracle`].
pub const ORACLE_VALENCE_BOUND: u64 = 12;

/// One Cantor normal form term `coef * w^exp`.
///
/// Field order matters: the derived `Ord` on `(exp, coef)` followed by the
/// derived lexicographic `Ord` on `Vec<Term>` is exactly the ordinal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Term {
    pub exp: u64,
    pub coef: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrdinal")]
pub struct Ordinal {
    terms: Vec<Term>,
}

#[derive(Deserialize)]
struct RawOrdinal {
    terms: Vec<Term>,
}

impl TryFrom<RawOrdinal> for Ordinal {
    type Error = Error;

    fn try_from(raw: RawOrdinal) -> Result<Self> {
        Ordinal::from_terms(raw.terms)
    }
}

impl Ordinal {
    pub const ZERO: Ordinal = Ordinal { terms: Vec::new() };

    /// Builds an ordinal from terms that already satisfy the CNF invariants.
    pub fn from_terms(terms: Vec<Term>) -> Result<Self> {
        if let Some(t) = terms.iter().find(|t| t.coef == 0) {
            return Err(Error::Precondition(format!(
                "Cantor normal form term w^{} has coefficient 0",
                t.exp
            )));
        }
        if terms.windows(2).any(|w| w[0].exp <= w[1].exp) {
            return Err(Error::Precondition(
                "Cantor normal form exponents must be strictly descending".into(),
            ));
        }
        Ok(Ordinal { terms })
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs in any order;
    /// coefficients of repeated exponents are added and zero coefficients
    /// dropped.
    pub fn from_coefficients<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut terms: Vec<Term> = Vec::new();
        let mut pairs: Vec<(u64, u64)> = pairs.into_iter().filter(|&(_, c)| c > 0).collect();
        pairs.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
        for (exp, coef) in pairs {
            match terms.last_mut() {
                Some(last) if last.exp == exp => {
                    last.coef = last
                        .coef
                        .checked_add(coef)
                        .ok_or(Error::Overflow("coefficient"))?;
                }
                _ => terms.push(Term { exp, coef }),
            }
        }
        Ok(Ordinal { terms })
    }

    pub fn finite(n: u64) -> Self {
        Self::monomial(n, 0)
    }

    /// `w^exp`.
    pub fn omega_pow(exp: u64) -> Self {
        Self::monomial(1, exp)
    }

    /// `coef * w^exp` (zero when `coef == 0`).
    pub fn monomial(coef: u64, exp: u64) -> Self {
        if coef == 0 {
            Ordinal::ZERO
        } else {
            Ordinal {
                terms: vec![Term { exp, coef }],
            }
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.first().map(|t| t.exp)
    }

    /// Smallest exponent with a nonzero coefficient; `None` for zero.
    pub fn order(&self) -> Option<u64> {
        self.terms.last().map(|t| t.exp)
    }

    /// Sum of all Cantor coefficients. Saturates at `u64::MAX`.
    pub fn valence(&self) -> u64 {
        self.terms
            .iter()
            .fold(0u64, |acc, t| acc.saturating_add(t.coef))
    }

    pub fn checked_valence(&self) -> Result<u64> {
        self.terms.iter().try_fold(0u64, |acc, t| {
            acc.checked_add(t.coef).ok_or(Error::Overflow("valence"))
        })
    }

    /// The Cantor coefficient of `w^exp` (0 when absent).
    pub fn coefficient(&self, exp: u64) -> u64 {
        self.terms
            .iter()
            .find(|t| t.exp == exp)
            .map_or(0, |t| t.coef)
    }

    pub fn is_successor(&self) -> bool {
        self.order() == Some(0)
    }

    /// Ordinal (concatenation) sum `self + rhs`: terms of `self` below the
    /// degree of `rhs` are absorbed.
    pub fn ord_sum(&self, rhs: &Ordinal) -> Result<Ordinal> {
        let Some(lead) = rhs.terms.first() else {
            return Ok(self.clone());
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .copied()
            .take_while(|t| t.exp >= lead.exp)
            .collect();
        let mut rest = rhs.terms.iter().copied();
        match terms.last_mut() {
            Some(last) if last.exp == lead.exp => {
                last.coef = last
                    .coef
                    .checked_add(lead.coef)
                    .ok_or(Error::Overflow("ordinal sum"))?;
                rest.next();
            }
            _ => {}
        }
        terms.extend(rest);
        Ok(Ordinal { terms })
    }

    /// Shuffle (natural) sum: Cantor coefficients add degree by degree.
    pub fn shuffle_sum(&self, rhs: &Ordinal) -> Result<Ordinal> {
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (a, b) = (self.terms[i], rhs.terms[j]);
            match a.exp.cmp(&b.exp) {
                Ordering::Greater => {
                    terms.push(a);
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let coef = a
                        .coef
                        .checked_add(b.coef)
                        .ok_or(Error::Overflow("shuffle sum"))?;
                    terms.push(Term { exp: a.exp, coef });
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&rhs.terms[j..]);
        Ok(Ordinal { terms })
    }

    /// Shuffle sum computed as the maximum, over all interleavings of the unit
    /// terms of both operands that keep each side in its own order, of the
    /// left-to-right ordinal sum.
    ///
    /// Unit terms `w^e` are treated as atomic pieces; finer decompositions
    /// cannot produce a larger value. Exponential in the valence, hence the
    /// [`ORACLE_VALENCE_BOUND`].
    pub fn shuffle_sum_oracle(&self, rhs: &Ordinal) -> Result<Ordinal> {
        let total = self.valence().saturating_add(rhs.valence());
        if total > ORACLE_VALENCE_BOUND {
            return Err(Error::BoundExceeded(format!(
                "shuffle oracle needs combined valence <= {ORACLE_VALENCE_BOUND}, got {total}"
            )));
        }
        let left = self.unit_terms();
        let right = rhs.unit_terms();
        let mut best = Ordinal::ZERO;
        interleave(&left, &right, Ordinal::ZERO, &mut best)?;
        Ok(best)
    }

    /// Exponents of the unit terms `w^e`, in descending order, each repeated
    /// by its coefficient.
    fn unit_terms(&self) -> Vec<u64> {
        self.terms
            .iter()
            .flat_map(|t| std::iter::repeat_n(t.exp, t.coef as usize))
            .collect()
    }

    /// `n * self`, i.e. the n-fold shuffle sum.
    pub fn scalar_mul(&self, n: u64) -> Result<Ordinal> {
        if n == 0 {
            return Ok(Ordinal::ZERO);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                t.coef
                    .checked_mul(n)
                    .map(|coef| Term { exp: t.exp, coef })
                    .ok_or(Error::Overflow("scalar multiplication"))
            })
            .collect::<Result<_>>()?;
        Ok(Ordinal { terms })
    }

    /// `w^n * self`: every exponent shifted up by `n`.
    pub fn omega_shift(&self, n: u64) -> Result<Ordinal> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                t.exp
                    .checked_add(n)
                    .map(|exp| Term { exp, coef: t.coef })
                    .ok_or(Error::Overflow("exponent"))
            })
            .collect::<Result<_>>()?;
        Ok(Ordinal { terms })
    }

    /// Keeps the terms whose exponent stands in relation `mode` to `exp`.
    pub fn truncate(&self, exp: u64, mode: Truncation) -> Ordinal {
        let terms = self
            .terms
            .iter()
            .copied()
            .filter(|t| mode.keeps(t.exp, exp))
            .collect();
        Ordinal { terms }
    }

    /// Coefficient-wise `<=`.
    pub fn weaker_than(&self, other: &Ordinal) -> bool {
        self.terms
            .iter()
            .all(|t| t.coef <= other.coefficient(t.exp))
    }

    /// Coefficient-wise maximum: the least upper bound for
    /// [`Ordinal::weaker_than`].
    pub fn join(&self, other: &Ordinal) -> Ordinal {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (self.terms[i], other.terms[j]);
            match a.exp.cmp(&b.exp) {
                Ordering::Greater => {
                    terms.push(a);
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    terms.push(Term {
                        exp: a.exp,
                        coef: a.coef.max(b.coef),
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Ordinal { terms }
    }
}

fn interleave(left: &[u64], right: &[u64], acc: Ordinal, best: &mut Ordinal) -> Result<()> {
    match (left.split_first(), right.split_first()) {
        (None, None) => {
            if acc > *best {
                *best = acc;
            }
        }
        (Some((&e, rest)), None) => {
            interleave(rest, right, acc.ord_sum(&Ordinal::omega_pow(e))?, best)?;
        }
        (None, Some((&e, rest))) => {
            interleave(left, rest, acc.ord_sum(&Ordinal::omega_pow(e))?, best)?;
        }
        (Some((&a, left_rest)), Some((&b, right_rest))) => {
            interleave(left_rest, right, acc.ord_sum(&Ordinal::omega_pow(a))?, best)?;
            interleave(left, right_rest, acc.ord_sum(&Ordinal::omega_pow(b))?, best)?;
        }
    }
    Ok(())
}

/// Which terms [`Ordinal::truncate`] keeps, relative to a cut exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    Ge,
    Le,
    Gt,
    Lt,
}

impl Truncation {
    fn keeps(self, exp: u64, cut: u64) -> bool {
        match self {
            Truncation::Ge => exp >= cut,
            Truncation::Le => exp <= cut,
            Truncation::Gt => exp > cut,
            Truncation::Lt => exp < cut,
        }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (t.exp, t.coef) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("w")?,
                (1, c) => write!(f, "{c}*w")?,
                (e, 1) => write!(f, "w^{e}")?,
                (e, c) => write!(f, "{c}*w^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ordinal(s)
    }
}

pub fn format_ordinal(a: &Ordinal) -> String {
    a.to_string()
}

/// Parses `0 | term ("+" term)*` with `term := [coef ["*"]] "w" ["^" exp] | coef`.
pub fn parse_ordinal(text: &str) -> Result<Ordinal> {
    let mut p = OrdinalParser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(Error::syntax(p.pos, "empty ordinal"));
    }
    let mut terms: Vec<Term> = Vec::new();
    loop {
        p.skip_ws();
        let start = p.pos;
        let term = p.term()?;
        if let Some(prev) = terms.last() {
            if term.exp >= prev.exp {
                return Err(Error::syntax(
                    start,
                    format!(
                        "exponents must be strictly descending (w^{} after w^{})",
                        term.exp, prev.exp
                    ),
                ));
            }
        }
        if term.coef == 0 {
            // A lone "0" is the whole ordinal; anything else with a zero
            // coefficient is rejected.
            if terms.is_empty() && term.exp == 0 {
                p.skip_ws();
                if p.at_end() {
                    return Ok(Ordinal::ZERO);
                }
            }
            return Err(Error::syntax(start, "term with coefficient 0"));
        }
        terms.push(term);
        p.skip_ws();
        if p.at_end() {
            break;
        }
        if !p.eat(b'+') {
            return Err(Error::syntax(p.pos, "expected `+`"));
        }
    }
    Ok(Ordinal { terms })
}

struct OrdinalParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl OrdinalParser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<Option<u64>> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::Overflow("ordinal literal"))
    }

    fn term(&mut self) -> Result<Term> {
        let coef = self.number()?;
        let star = coef.is_some() && self.eat(b'*');
        if self.eat(b'w') {
            let exp = if self.eat(b'^') {
                self.number()?
                    .ok_or_else(|| Error::syntax(self.pos, "expected exponent after `^`"))?
            } else {
                1
            };
            return Ok(Term {
                exp,
                coef: coef.unwrap_or(1),
            });
        }
        if star {
            return Err(Error::syntax(self.pos, "expected `w` after `*`"));
        }
        match coef {
            Some(coef) => Ok(Term { exp: 0, coef }),
            None => Err(Error::syntax(self.pos, "expected a coefficient or `w`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert!(o("w") < o("w^2"));
        assert!(o("2w + 2") > o("2w + 1"));
        assert_eq!(o("3w^2 + 9w + 7").cmp(&o("3w^2 + 9w + 7")), Ordering::Equal);
        assert!(o("w") > o("1000"));
        assert!(o("w^2") > o("w + 5"));
    }

    #[test]
    fn ord_sum_examples() {
        assert_eq!(o("1").ord_sum(&o("w")).unwrap(), o("w"));
        assert_eq!(
            o("w^3 + w").ord_sum(&o("w^2 + 2w")).unwrap(),
            o("w^3 + w^2 + 2w")
        );
        assert_eq!(o("w + 1").ord_sum(&o("w + 1")).unwrap(), o("2w + 1"));
        assert_eq!(o("w + 4").ord_sum(&Ordinal::ZERO).unwrap(), o("w + 4"));
        assert_eq!(o("w").ord_sum(&o("1")).unwrap(), o("w + 1"));
    }

    #[test]
    fn shuffle_sum_examples() {
        assert_eq!(
            o("w^3 + w").shuffle_sum(&o("w^2 + 2w")).unwrap(),
            o("w^3 + w^2 + 3w")
        );
        assert_eq!(o("w + 1").shuffle_sum(&o("w + 1")).unwrap(), o("2w + 2"));
        assert_eq!(
            Ordinal::ZERO.shuffle_sum(&o("w^2 + 3")).unwrap(),
            o("w^2 + 3")
        );
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(o("w").shuffle_sum_oracle(&o("1")).unwrap(), o("w + 1"));
        assert_eq!(
            o("w + 1").shuffle_sum_oracle(&o("w + 1")).unwrap(),
            o("2w + 2")
        );
        assert_eq!(
            o("w^2 + 3").shuffle_sum_oracle(&Ordinal::ZERO).unwrap(),
            o("w^2 + 3")
        );
        assert!(matches!(
            o("7").shuffle_sum_oracle(&o("6")),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn scalar_and_shift() {
        assert_eq!(o("w^2 + 3").scalar_mul(2).unwrap(), o("2w^2 + 6"));
        assert_eq!(o("w^2 + 3").scalar_mul(1).unwrap(), o("w^2 + 3"));
        assert_eq!(o("w").scalar_mul(0).unwrap(), Ordinal::ZERO);
        assert_eq!(o("2w + 3").omega_shift(1).unwrap(), o("2w^2 + 3w"));
        assert_eq!(o("2w + 3").omega_shift(0).unwrap(), o("2w + 3"));
        assert_eq!(o("1").omega_shift(2).unwrap(), o("w^2"));
    }

    #[test]
    fn overflow_is_reported() {
        let big = Ordinal::finite(u64::MAX);
        assert_eq!(
            big.shuffle_sum(&o("1")),
            Err(Error::Overflow("shuffle sum"))
        );
        assert_eq!(big.ord_sum(&o("1")), Err(Error::Overflow("ordinal sum")));
        assert!(big.scalar_mul(2).is_err());
        assert!(Ordinal::omega_pow(u64::MAX).omega_shift(1).is_err());
        assert_eq!(
            parse_ordinal("99999999999999999999"),
            Err(Error::Overflow("ordinal literal"))
        );
    }

    #[test]
    fn statistics() {
        let a = o("3w^2 + 9w + 7");
        assert_eq!(a.degree(), Some(2));
        assert_eq!(a.order(), Some(0));
        assert_eq!(a.valence(), 19);
        assert_eq!(a.coefficient(1), 9);
        assert_eq!(a.coefficient(5), 0);
        assert_eq!(o("w^2 + w").order(), Some(1));
        assert_eq!(Ordinal::ZERO.valence(), 0);
        assert_eq!(Ordinal::ZERO.degree(), None);
        assert_eq!(Ordinal::ZERO.order(), None);
    }

    #[test]
    fn truncation() {
        let a = o("3w^2 + 9w + 7");
        assert_eq!(a.truncate(1, Truncation::Ge), o("3w^2 + 9w"));
        assert_eq!(a.truncate(2, Truncation::Le), a);
        assert_eq!(o("w^2 + w").truncate(1, Truncation::Lt), Ordinal::ZERO);
        assert_eq!(
            a.truncate(1, Truncation::Gt)
                .ord_sum(&a.truncate(1, Truncation::Le))
                .unwrap(),
            a
        );
    }

    #[test]
    fn weaker_and_join() {
        assert!(!o("w").weaker_than(&o("w^2")));
        assert!(o("w^2 + w").weaker_than(&o("3w^2 + 9w + 7")));
        assert_eq!(o("w^3 + w").join(&o("w^2 + 2w")), o("w^3 + w^2 + 2w"));
    }

    #[test]
    fn parse_and_format() {
        let a = o("3w^2 + 9w + 7");
        assert_eq!(
            a.terms(),
            &[
                Term { exp: 2, coef: 3 },
                Term { exp: 1, coef: 9 },
                Term { exp: 0, coef: 7 }
            ]
        );
        assert_eq!(a.to_string(), "3*w^2 + 9*w + 7");
        assert_eq!(o("3 * w ^ 2+w").to_string(), "3*w^2 + w");
        assert_eq!(Ordinal::ZERO.to_string(), "0");
        assert_eq!(o("0"), Ordinal::ZERO);
        assert_eq!(o("w^0"), o("1"));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_ordinal("w^3 + w^3") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_ordinal(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ordinal("w +"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ordinal("3*"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ordinal("0 + w"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ordinal("w + 0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ordinal("w^"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ordinal("x"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn json_form() {
        let a = o("3w^2 + 9w + 7");
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"exp":2,"coef":3},{"exp":1,"coef":9},{"exp":0,"coef":7}]}"#
        );
        assert_eq!(serde_json::from_str::<Ordinal>(&json).unwrap(), a);
        assert!(serde_json::from_str::<Ordinal>(
            r#"{"terms":[{"exp":1,"coef":1},{"exp":1,"coef":2}]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<Ordinal>(r#"{"terms":[{"exp":1,"coef":0}]}"#).is_err());
    }

    #[test]
    fn from_coefficients_merges() {
        let a = Ordinal::from_coefficients([(0, 7), (2, 1), (1, 9), (2, 2), (3, 0)]).unwrap();
        assert_eq!(a, o("3w^2 + 9w + 7"));
    }
}
