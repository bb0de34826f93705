//! Monomial ideals over a polynomial ring, as exponent-vector combinatorics.
//!
//! Nothing here depends on the coefficient field. Ideals are stored by their
//! unique minimal generating set, sorted in descending lexicographic order of
//! exponent vectors, so equal ideals compare equal structurally and every
//! output is reproducible.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Ambient variable limit; primes are stored as `u32` bit masks.
pub const MAX_VARS: usize = 32;
/// Input bounds for [`MonomialIdeal::irreducible_decomposition`].
pub const DECOMPOSITION_MAX_VARS: usize = 8;
pub const DECOMPOSITION_MAX_GENERATORS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Bit mask of the variables with positive exponent.
    pub fn support(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow("monomial exponent")))
            .collect::<Result<_>>()
            .map(Monomial)
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Sets every variable outside `mask` to 1, i.e. zeroes its exponent.
    pub fn restrict(&self, mask: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &e)| if mask & (1 << i) != 0 { e } else { 0 })
                .collect(),
        )
    }

    /// Appends `extra` variables with exponent 0.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(self.0.len() + extra, 0);
        Monomial(e)
    }
}

/// A prime generated by a subset of the variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    nvars: usize,
    mask: u32,
}

impl MonomialPrime {
    pub fn new(nvars: usize, mask: u32) -> Result<Self> {
        if nvars > MAX_VARS || (nvars < 32 && mask >> nvars != 0) {
            return Err(Error::Precondition(format!(
                "prime mask {mask:#b} does not fit {nvars} variables"
            )));
        }
        Ok(MonomialPrime { nvars, mask })
    }

    pub fn from_vars(nvars: usize, vars: &[usize]) -> Result<Self> {
        let mask = vars.iter().try_fold(0u32, |m, &v| {
            if v < nvars {
                Ok(m | (1 << v))
            } else {
                Err(Error::Precondition(format!(
                    "variable index {v} out of range"
                )))
            }
        })?;
        Self::new(nvars, mask)
    }

    /// The prime generated by all variables.
    pub fn maximal(nvars: usize) -> Self {
        MonomialPrime {
            nvars,
            mask: full_mask(nvars),
        }
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn height(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// `dim(S/p) = n - |p|`.
    pub fn dim(&self) -> usize {
        self.nvars - self.height()
    }

    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.mask & (1 << i) != 0)
            .collect()
    }

    pub fn contains_prime(&self, other: &MonomialPrime) -> bool {
        other.mask & !self.mask == 0
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_minimal(
            self.nvars,
            self.variables()
                .into_iter()
                .map(|i| Monomial::var(self.nvars, i, 1))
                .collect(),
        )
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.variables().cmp(&other.variables()))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn full_mask(nvars: usize) -> u32 {
    if nvars >= 32 {
        u32::MAX
    } else {
        (1u32 << nvars) - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`: drops duplicates and generators divisible by
    /// another generator.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::BoundExceeded(format!(
                "{nvars} variables, limit is {MAX_VARS}"
            )));
        }
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::AmbientMismatch {
                expected: nvars,
                found: g.nvars(),
            });
        }
        Ok(Self::from_minimal(nvars, minimalize(gens)))
    }

    fn from_minimal(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { nvars, gens }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            nvars: m.nvars(),
            gens: vec![m],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::AmbientMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.nvars];
        for g in &self.gens {
            for (a, &e) in m.iter_mut().zip(g.exponents()) {
                *a = (*a).max(e);
            }
        }
        m
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_minimal(self.nvars, minimalize(gens)))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::from_minimal(self.nvars, minimalize(gens)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ok(Self::from_minimal(self.nvars, minimalize(gens)))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.product(&MonomialIdeal::principal(m.clone()))
    }

    /// `(self : m)`, generated by `g / gcd(g, m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.nvars() != self.nvars {
            return Err(Error::AmbientMismatch {
                expected: self.nvars,
                found: m.nvars(),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.quotient(&g.gcd(m)).expect("gcd divides"))
            .collect();
        Ok(Self::from_minimal(self.nvars, minimalize(gens)))
    }

    /// `(self : other)`, the intersection of `(self : g)` over the generators
    /// `g` of `other`. Colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut acc = MonomialIdeal::unit(self.nvars);
        for g in &other.gens {
            acc = acc.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// `(self : other^∞)`: iterates the colon until it stabilizes.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut current = self.clone();
        loop {
            let next = current.colon(other)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Localization at a monomial prime: variables outside `p` become units,
    /// so their exponents are dropped. The result keeps the ambient variable
    /// count but only involves the variables of `p`.
    pub fn localize(&self, p: &MonomialPrime) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.restrict(p.mask())).collect();
        Self::from_minimal(self.nvars, minimalize(gens))
    }

    /// The same generators in `nvars + extra` variables.
    pub fn extend(&self, extra: usize) -> Result<MonomialIdeal> {
        MonomialIdeal::new(
            self.nvars + extra,
            self.gens.iter().map(|g| g.extend(extra)).collect(),
        )
    }

    /// Irreducible components (each generated by pure variable powers), via
    /// the splitting `I = (I + x^a) ∩ (I + m)` on a generator `x^a m` with
    /// `m != 1` coprime to `x`. The unit ideal has no components.
    pub fn irreducible_decomposition(&self) -> Result<Vec<MonomialIdeal>> {
        if self.nvars > DECOMPOSITION_MAX_VARS || self.gens.len() > DECOMPOSITION_MAX_GENERATORS {
            return Err(Error::BoundExceeded(format!(
                "irreducible decomposition supports at most {DECOMPOSITION_MAX_VARS} variables and \
                 {DECOMPOSITION_MAX_GENERATORS} generators, got {} and {}",
                self.nvars,
                self.gens.len()
            )));
        }
        let mut memo = HashMap::new();
        let mut comps = split_components(self, &mut memo);
        comps.sort_by(|a, b| b.gens.cmp(&a.gens));
        comps.dedup();
        // Keep only the irredundant components.
        let minimal: Vec<MonomialIdeal> = comps
            .iter()
            .filter(|q| {
                !comps
                    .iter()
                    .any(|other| other != *q && q.contains_ideal(other))
            })
            .cloned()
            .collect();
        Ok(minimal)
    }

    /// Minimal primes: the minimal radicals of the irreducible components.
    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        let comps = self.irreducible_decomposition()?;
        let mut radicals: Vec<MonomialPrime> = comps.iter().map(|q| q.radical_prime()).collect();
        radicals.sort();
        radicals.dedup();
        let mut minimal: Vec<MonomialPrime> = radicals
            .iter()
            .filter(|p| !radicals.iter().any(|q| q != *p && p.contains_prime(q)))
            .copied()
            .collect();
        minimal.sort();
        Ok(minimal)
    }

    /// Prime generated by the variables appearing in the generators; the
    /// radical when the ideal is generated by pure powers.
    pub fn radical_prime(&self) -> MonomialPrime {
        let mask = self.gens.iter().fold(0, |m, g| m | g.support());
        MonomialPrime {
            nvars: self.nvars,
            mask,
        }
    }

    /// Intersection of the irreducible components whose radical `p` has
    /// `dim(S/p) > i`; the unit ideal when there are none.
    pub fn primary_components_above_dim(&self, i: i64) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for q in self.irreducible_decomposition()? {
            if q.radical_prime().dim() as i64 > i {
                acc = acc.intersect(&q)?;
            }
        }
        Ok(acc)
    }

    /// Krull dimension of `S/I`: the largest variable set `Z` such that no
    /// generator is supported inside `Z`. The unit ideal gives `-1`.
    pub fn krull_dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let supports: Vec<u32> = self.gens.iter().map(Monomial::support).collect();
        let mut best = 0;
        for z in 0..=full_mask(self.nvars) {
            let size = z.count_ones();
            if size > best && supports.iter().all(|&s| s & !z != 0) {
                best = size;
            }
            if z == full_mask(self.nvars) {
                break;
            }
        }
        best as i64
    }

    /// Monomials of total degree at most `d` outside the ideal.
    pub fn standard_monomials_up_to(&self, d: u32) -> Vec<Monomial> {
        monomials_up_to(self.nvars, d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// `dim_k S/I` for a zero-dimensional (or unit) ideal.
    pub fn artinian_k_dimension(&self) -> Result<u64> {
        let dim = self.krull_dimension();
        if dim > 0 {
            return Err(Error::NotArtinian(dim));
        }
        if dim < 0 {
            return Ok(0);
        }
        let bounds = self.pure_power_bounds();
        let mut count = 0u64;
        for_each_in_box(&bounds, |m| {
            if !self.contains(m) {
                count += 1;
            }
        });
        Ok(count)
    }

    /// For each variable, the smallest `a` with `x^a` in the ideal (0 when
    /// there is none).
    fn pure_power_bounds(&self) -> Vec<u32> {
        let mut b = vec![0u32; self.nvars];
        for g in &self.gens {
            let s = g.support();
            if s.count_ones() == 1 {
                let i = s.trailing_zeros() as usize;
                let e = g.exponents()[i];
                if b[i] == 0 || e < b[i] {
                    b[i] = e;
                }
            }
        }
        b
    }
}

fn split_components(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<Vec<Monomial>, Vec<MonomialIdeal>>,
) -> Vec<MonomialIdeal> {
    if ideal.is_unit() {
        return Vec::new();
    }
    if let Some(hit) = memo.get(&ideal.gens) {
        return hit.clone();
    }
    let mixed = ideal.gens.iter().find(|g| g.support().count_ones() >= 2);
    let result = match mixed {
        None => vec![ideal.clone()],
        Some(g) => {
            let var = g.support().trailing_zeros() as usize;
            let power = Monomial::var(ideal.nvars, var, g.exponents()[var]);
            let rest = g.quotient(&power).expect("power divides generator");
            let left = ideal
                .sum(&MonomialIdeal::principal(power))
                .expect("same ambient");
            let right = ideal
                .sum(&MonomialIdeal::principal(rest))
                .expect("same ambient");
            let mut out = split_components(&left, memo);
            out.extend(split_components(&right, memo));
            out
        }
    };
    memo.insert(ideal.gens.clone(), result.clone());
    result
}

/// Removes duplicates and generators divisible by another generator; output
/// is sorted in descending lexicographic order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Sorting by degree first means a divisor is always seen before its
    // multiples.
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// All monomials in `nvars` variables of total degree at most `d`.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// Calls `f` on every exponent vector `e` with `e[i] < bounds[i]`.
pub(crate) fn for_each_in_box(bounds: &[u32], mut f: impl FnMut(&Monomial)) {
    if bounds.contains(&0) {
        return;
    }
    let mut cur = Monomial(vec![0; bounds.len()]);
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == bounds.len() {
                return;
            }
            cur.0[i] += 1;
            if cur.0[i] < bounds[i] {
                break;
            }
            cur.0[i] = 0;
            i += 1;
        }
    }
}

/// Variable names of the ambient polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new(vars: Vec<String>) -> Result<Self> {
        if vars.len() > MAX_VARS {
            return Err(Error::BoundExceeded(format!(
                "{} variables, limit is {MAX_VARS}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            let valid = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::syntax(0, format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::syntax(0, format!("duplicate variable `{v}`")));
            }
        }
        Ok(Ring { vars })
    }

    /// Parses a comma-separated variable list such as `x,y,z`.
    pub fn parse_vars(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ring::new(Vec::new());
        }
        Ring::new(trimmed.split(',').map(|s| s.trim().to_string()).collect())
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A ring with `extra` more variables named `t1, t2, ...` (skipping names
    /// already taken).
    pub fn extended(&self, extra: usize) -> Result<Ring> {
        let mut vars = self.vars.clone();
        let mut k = 1;
        while vars.len() < self.vars.len() + extra {
            let name = format!("t{k}");
            if !vars.contains(&name) {
                vars.push(name);
            }
            k += 1;
        }
        Ring::new(vars)
    }

    pub fn parse_ideal(&self, text: &str) -> Result<MonomialIdeal> {
        parse_ideal(text, self)
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let ideal = parse_ideal(text, self)?;
        match ideal.generators() {
            [m] => Ok(m.clone()),
            _ => Err(Error::syntax(0, "expected a single monomial")),
        }
    }

    pub fn display_monomial<'a>(&'a self, m: &'a Monomial) -> impl fmt::Display + 'a {
        DisplayMonomial { ring: self, m }
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        self.display_monomial(m).to_string()
    }

    pub fn format_ideal(&self, ideal: &MonomialIdeal) -> String {
        if ideal.is_zero() {
            return "0".to_string();
        }
        ideal
            .generators()
            .iter()
            .map(|g| self.format_monomial(g))
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn prime_names(&self, p: &MonomialPrime) -> Vec<String> {
        p.variables()
            .into_iter()
            .map(|i| self.vars[i].clone())
            .collect()
    }

    pub fn format_prime(&self, p: &MonomialPrime) -> String {
        format!("({})", self.prime_names(p).join(","))
    }
}

struct DisplayMonomial<'a> {
    ring: &'a Ring,
    m: &'a Monomial,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.ring.vars[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Num(&'a str),
    Star,
    Caret,
    Comma,
    Space,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok<'_>)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            toks.push((start, Tok::Space));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            toks.push((start, Tok::Ident(&text[start..i])));
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            toks.push((start, Tok::Num(&text[start..i])));
        } else {
            let t = match c {
                b'*' => Tok::Star,
                b'^' => Tok::Caret,
                b',' => Tok::Comma,
                _ => {
                    return Err(Error::syntax(
                        start,
                        format!("unexpected character `{}`", c as char),
                    ))
                }
            };
            toks.push((start, t));
            i += 1;
        }
    }
    // Whitespace next to `*`, `^`, `,` or at the ends is insignificant; what
    // remains separates monomials.
    let mut cleaned: Vec<(usize, Tok<'_>)> = Vec::with_capacity(toks.len());
    for (k, &(pos, t)) in toks.iter().enumerate() {
        if t == Tok::Space {
            let prev = cleaned.last().map(|&(_, t)| t);
            let next = toks.get(k + 1).map(|&(_, t)| t);
            let glue =
                |t: Option<Tok<'_>>| matches!(t, None | Some(Tok::Star | Tok::Caret | Tok::Comma));
            if glue(prev) || glue(next) {
                continue;
            }
        }
        cleaned.push((pos, t));
    }
    Ok(cleaned)
}

/// Parses `monomial (("," | space) monomial)*` with
/// `monomial := "1" | factor ("*"? factor)*` and `factor := var ["^" exp]`.
/// An empty string or `0` is the zero ideal.
pub fn parse_ideal(text: &str, ring: &Ring) -> Result<MonomialIdeal> {
    let toks = tokenize(text)?;
    let n = ring.nvars();
    if toks.is_empty() || matches!(toks.as_slice(), [(_, Tok::Num("0"))]) {
        return Ok(MonomialIdeal::zero(n));
    }
    let end = text.len();
    let mut gens = Vec::new();
    let mut k = 0;
    loop {
        let (m, next) = parse_monomial_at(&toks, k, ring, end)?;
        gens.push(m);
        k = next;
        match toks.get(k) {
            None => break,
            Some((_, Tok::Comma | Tok::Space)) => {
                k += 1;
                if k >= toks.len() {
                    return Err(Error::syntax(end, "expected a monomial after separator"));
                }
            }
            Some(&(pos, _)) => return Err(Error::syntax(pos, "expected `,` or whitespace")),
        }
    }
    MonomialIdeal::new(n, gens)
}

fn parse_monomial_at(
    toks: &[(usize, Tok<'_>)],
    mut k: usize,
    ring: &Ring,
    end: usize,
) -> Result<(Monomial, usize)> {
    let n = ring.nvars();
    let mut exps = vec![0u32; n];
    match toks.get(k) {
        Some(&(pos, Tok::Num(s))) => {
            if s != "1" {
                return Err(Error::syntax(
                    pos,
                    "only the constant monomial `1` may be a number",
                ));
            }
            return Ok((Monomial(exps), k + 1));
        }
        Some((_, Tok::Ident(_))) => {}
        Some(&(pos, _)) => return Err(Error::syntax(pos, "expected a variable or `1`")),
        None => return Err(Error::syntax(end, "expected a monomial")),
    }
    loop {
        let &(pos, tok) = toks
            .get(k)
            .ok_or_else(|| Error::syntax(end, "expected a variable"))?;
        let Tok::Ident(name) = tok else {
            return Err(Error::syntax(pos, "expected a variable"));
        };
        let var = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        k += 1;
        let mut e = 1u32;
        if let Some((_, Tok::Caret)) = toks.get(k) {
            k += 1;
            match toks.get(k) {
                Some(&(p, Tok::Num(s))) => {
                    e = s
                        .parse()
                        .map_err(|_| Error::Overflow("monomial exponent"))?;
                    let _ = p;
                    k += 1;
                }
                Some(&(p, _)) => return Err(Error::syntax(p, "expected exponent after `^`")),
                None => return Err(Error::syntax(end, "expected exponent after `^`")),
            }
        }
        exps[var] = exps[var]
            .checked_add(e)
            .ok_or(Error::Overflow("monomial exponent"))?;
        match toks.get(k) {
            Some((_, Tok::Star)) => k += 1,
            Some((_, Tok::Ident(_))) => {}
            _ => return Ok((Monomial(exps), k)),
        }
    }
}
