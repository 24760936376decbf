//! Sparse multivariate polynomials in `X, Y, Z` over a [`Field`].
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic with `X > Y > Z`; the leading term is the last entry.
//! Two-variable contexts (Newton power sums in `x, y`) use `X, Y` and leave
//! the `Z` exponent at zero.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['X', 'Y', 'Z'][self.index()]
    }
}

/// Exponent triple `(a, b, c)` for `X^a Y^b Z^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    /// Total degree, widened so it cannot overflow.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut e = [0; 3];
        for i in 0..3 {
            e[i] = self.0[i]
                .checked_add(other.0[i])
                .ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial(e))
    }

    /// `self / other` when every exponent of `other` is at most ours.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; 3];
        for i in 0..3 {
            e[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `c_x * X + c_y * Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm<E> {
    pub c_x: E,
    pub c_y: E,
}

impl<E> LinearForm<E> {
    pub fn new(c_x: E, c_y: E) -> Self {
        LinearForm { c_x, c_y }
    }
}

/// Result of [`MultiPoly::homogeneity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u64),
    Mixed,
}

/// How many times a linear form divides a polynomial. The zero polynomial
/// is divisible infinitely often.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Multiplicity {
    pub fn at_least(self, n: u32) -> bool {
        match self {
            Multiplicity::Finite(k) => k >= n,
            Multiplicity::Infinite => true,
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            Multiplicity::Finite(k) => Value::from(k),
            Multiplicity::Infinite => Value::from("infinite"),
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(k) => write!(f, "{k}"),
            Multiplicity::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone)]
pub struct MultiPoly<K: Field> {
    field: K,
    terms: BTreeMap<Monomial, K::Elem>,
}

impl<K: Field> PartialEq for MultiPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.terms == other.terms
    }
}

impl<K: Field> Eq for MultiPoly<K> {}

impl<K: Field> fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.field.describe(), self)
    }
}

impl<K: Field> MultiPoly<K> {
    pub fn zero(field: &K) -> Self {
        MultiPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &K, c: K::Elem) -> Self {
        Self::monomial(field, c, Monomial::ONE)
    }

    pub fn one(field: &K) -> Self {
        Self::constant(field, field.one())
    }

    pub fn monomial(field: &K, c: K::Elem, m: Monomial) -> Self {
        let mut p = Self::zero(field);
        if !field.is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(field: &K, v: Var) -> Self {
        Self::monomial(field, field.one(), Monomial::var(v))
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(field: &K, terms: I) -> Self
    where
        I: IntoIterator<Item = (K::Elem, [u32; 3])>,
    {
        let mut p = Self::zero(field);
        for (c, e) in terms {
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Integer coefficients mapped into the field.
    pub fn from_int_terms<I>(field: &K, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, [u32; 3])>,
    {
        Self::from_terms(field, terms.into_iter().map(|(c, e)| (field.from_int(c), e)))
    }

    /// The linear form `c_x X + c_y Y` as a polynomial.
    pub fn from_linear_form(field: &K, form: &LinearForm<K::Elem>) -> Self {
        Self::from_terms(
            field,
            [(form.c_x.clone(), [1, 0, 0]), (form.c_y.clone(), [0, 1, 0])],
        )
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K::Elem)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> K::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &K::Elem)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.0[v.index()]).max()
    }

    fn add_term(&mut self, m: Monomial, c: K::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = self.field.add(existing, &c);
                if self.field.is_zero(&sum) {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, self.field.neg(c));
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, self.field.neg(c)))
                .collect(),
        }
    }

    pub fn scalar_mul(&self, c: &K::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field);
        }
        MultiPoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (*m, self.field.mul(x, c)))
                .collect(),
        }
    }

    /// `c * mono * self`.
    pub fn mul_term(&self, mono: &Monomial, c: &K::Elem) -> Result<Self> {
        let mut out = Self::zero(&self.field);
        if self.field.is_zero(c) {
            return Ok(out);
        }
        for (m, x) in &self.terms {
            out.terms.insert(m.checked_mul(mono)?, self.field.mul(x, c));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let mut out = Self::zero(&self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.checked_mul(m2)?, self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, mut n: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `q` with `self = q * divisor`, or [`Error::NotExact`] when the
    /// remainder under graded-lex division does not vanish.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        self.check_field(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.field.inv(lead_c).expect("leading coefficient is nonzero");
        let mut rem = self.clone();
        let mut quotient = Self::zero(&self.field);
        while let Some((m, c)) = rem.leading_term() {
            let shift = m.checked_div(lead_m).ok_or(Error::NotExact)?;
            let factor = self.field.mul(c, &lead_inv);
            for (dm, dc) in &divisor.terms {
                let prod = self.field.mul(dc, &factor);
                rem.add_term(dm.checked_mul(&shift)?, self.field.neg(&prod));
            }
            quotient.terms.insert(shift, factor);
        }
        Ok(quotient)
    }

    /// Whether `self` divides `other` exactly.
    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.exact_divide(self).is_ok()
    }

    /// Replaces `v` by `c_x X + c_y Y` everywhere.
    pub fn substitute(&self, v: Var, form: &LinearForm<K::Elem>) -> Result<Self> {
        let image = Self::from_linear_form(&self.field, form);
        let max = self.degree_in(v).unwrap_or(0) as usize;
        let mut powers = Vec::with_capacity(max + 1);
        powers.push(Self::one(&self.field));
        for i in 1..=max {
            powers.push(powers[i - 1].try_mul(&image)?);
        }
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = std::mem::take(&mut rest.0[v.index()]);
            for (pm, pc) in &powers[e as usize].terms {
                out.add_term(pm.checked_mul(&rest)?, self.field.mul(c, pc));
            }
        }
        Ok(out)
    }

    /// Formal partial derivative; exponents divisible by the characteristic
    /// kill their term.
    pub fn partial_derivative(&self, v: Var) -> Self {
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let e = m.0[v.index()];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.0[v.index()] -= 1;
            out.add_term(dm, self.field.mul(c, &self.field.from_int(e as i64)));
        }
        out
    }

    pub fn evaluate(&self, point: &[K::Elem; 3]) -> K::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                if m.0[i] > 0 {
                    t = f.mul(&t, &f.pow(x, m.0[i] as u64));
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) if degrees.all(|e| e == d) => Homogeneity::Homogeneous(d),
            Some(_) => Homogeneity::Mixed,
        }
    }

    /// Applies `perm` to the variables: the exponent of variable `i` moves to
    /// position `perm[i]`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let mut e = [0; 3];
            for i in 0..3 {
                e[perm[i]] = m.0[i];
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Invariance under every permutation of `X, Y, Z`. The transpositions
    /// `(X Y)` and `(Y Z)` generate the symmetric group, so two checks suffice.
    pub fn is_symmetric3(&self) -> bool {
        self.permute([1, 0, 2]) == *self && self.permute([0, 2, 1]) == *self
    }

    /// `f(X^d, Y^d, Z^d)`.
    pub fn inflate(&self, d: u32) -> Result<Self> {
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let mut e = [0; 3];
            for i in 0..3 {
                e[i] = m.0[i].checked_mul(d).ok_or(Error::ExponentOverflow)?;
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Coefficients of `self` viewed as a polynomial in `v`: entry `j` is the
    /// coefficient of `v^j`, a polynomial in the other two variables.
    pub fn coefficients_in(&self, v: Var) -> Vec<Self> {
        let len = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![Self::zero(&self.field); len];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = std::mem::take(&mut rest.0[v.index()]);
            out[e as usize].terms.insert(rest, c.clone());
        }
        out
    }

    /// Multiplicity of the nonzero linear form `c_x X + c_y Y` as a factor of
    /// a polynomial in `X, Y` alone.
    pub fn linear_multiplicity(&self, form: &LinearForm<K::Elem>) -> Result<Multiplicity> {
        if self.degree_in(Var::Z).unwrap_or(0) > 0 {
            return Err(Error::UnexpectedVariable('Z'));
        }
        let divisor = Self::from_linear_form(&self.field, form);
        if divisor.is_zero() {
            return Err(Error::Precondition("linear form is zero".into()));
        }
        if self.is_zero() {
            return Ok(Multiplicity::Infinite);
        }
        let mut count = 0;
        let mut current = self.clone();
        while let Ok(q) = current.exact_divide(&divisor) {
            count += 1;
            current = q;
        }
        Ok(Multiplicity::Finite(count))
    }

    /// Coefficient-wise image under a field map, e.g. Frobenius.
    pub fn map_coefficients(&self, f: impl Fn(&K::Elem) -> K::Elem) -> Self {
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// JSON form: `[[coeff, [a, b, c]], ...]` in descending monomial order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| {
                    Value::Array(vec![
                        self.field.elem_to_json(c),
                        Value::from(m.0.to_vec()),
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(field: &K, v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad polynomial JSON {v}"));
        let mut out = Self::zero(field);
        for term in v.as_array().ok_or_else(bad)? {
            let pair = term.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
            let c = field.elem_from_json(&pair[0])?;
            let exps = pair[1].as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
            let mut e = [0u32; 3];
            for (slot, x) in e.iter_mut().zip(exps) {
                *slot = x
                    .as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(bad)?;
            }
            out.add_term(Monomial(e), c);
        }
        Ok(out)
    }

    /// Parses the text form written by `Display`.
    pub fn parse(field: &K, s: &str) -> Result<Self> {
        let mut out = Self::zero(field);
        let mut depth = 0i32;
        let mut start = 0;
        let mut negative = false;
        let mut first = true;
        let flush = |from: usize, to: usize, negative: bool, out: &mut Self| -> Result<()> {
            let text = s[from..to].trim();
            if text.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let (m, c) = parse_term(field, text)?;
            let c = if negative { field.neg(&c) } else { c };
            out.add_term(m, c);
            Ok(())
        };
        for (i, b) in s.bytes().enumerate() {
            match b {
                b'[' => depth += 1,
                b']' => depth -= 1,
                b'+' | b'-' if depth == 0 => {
                    let pending = s[start..i].trim();
                    if pending.is_empty() {
                        // only a single leading minus may stand alone
                        if !first || b == b'+' || negative {
                            return Err(Error::Parse(format!("dangling sign in {s:?}")));
                        }
                        negative = true;
                    } else {
                        flush(start, i, negative, &mut out)?;
                        negative = b == b'-';
                        first = false;
                    }
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
        }
        flush(start, s.len(), negative, &mut out)?;
        Ok(out)
    }
}

fn parse_term<K: Field>(field: &K, text: &str) -> Result<(Monomial, K::Elem)> {
    let mut coeff = field.one();
    let mut e = [0u32; 3];
    for factor in text.split('*') {
        let factor = factor.trim();
        let var = match factor.chars().next() {
            Some('X') => Some(0),
            Some('Y') => Some(1),
            Some('Z') => Some(2),
            _ => None,
        };
        match var {
            Some(i) => {
                let exp = match factor[1..].trim() {
                    "" => 1,
                    rest => rest
                        .strip_prefix('^')
                        .and_then(|x| x.trim().parse::<u32>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad factor {factor:?}")))?,
                };
                e[i] = e[i].checked_add(exp).ok_or(Error::ExponentOverflow)?;
            }
            None => coeff = field.mul(&coeff, &field.parse_elem(factor)?),
        }
    }
    Ok((Monomial(e), coeff))
}

impl<K: Field> fmt::Display for MultiPoly<K> {
    /// Terms in descending graded-lex order as `c*X^a*Y^b*Z^c`, unit
    /// coefficients and exponents omitted, joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let field = &self.field;
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = field.is_negative(c);
            let magnitude = if negative { field.neg(c) } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if *m == Monomial::ONE || !field.is_one(&magnitude) {
                parts.push(field.format_elem(&magnitude));
            }
            for v in Var::ALL {
                match m.0[v.index()] {
                    0 => {}
                    1 => parts.push(v.name().to_string()),
                    e => parts.push(format!("{}^{e}", v.name())),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl<K: Field> std::ops::Add for &MultiPoly<K> {
    type Output = MultiPoly<K>;

    /// Panics on mismatched fields; use [`MultiPoly::try_add`] to get an error.
    fn add(self, rhs: Self) -> MultiPoly<K> {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<K: Field> std::ops::Sub for &MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn sub(self, rhs: Self) -> MultiPoly<K> {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<K: Field> std::ops::Mul for &MultiPoly<K> {
    type Output = MultiPoly<K>;

    /// Panics on mismatched fields or exponent overflow.
    fn mul(self, rhs: Self) -> MultiPoly<K> {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl<K: Field> std::ops::Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn neg(self) -> MultiPoly<K> {
        MultiPoly::neg(self)
    }
}
