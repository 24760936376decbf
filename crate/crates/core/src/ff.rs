//! Prime fields `F_p` and their extensions `F_{p^r}`, in the power basis of a
//! deterministically chosen modulus.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use smallvec::SmallVec;

use crate::arith::{is_prime, multiplicative_order};
use crate::error::{Error, Result};
use crate::field::Field;

/// `F_{p^r}` as `F_p[X]/(modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub r: u32,
    /// Coefficients of the modulus, low degree first; length `r + 1`, monic.
    pub modulus: Vec<u64>,
    #[serde(skip)]
    order: u64,
}

/// An element of some `F_{p^r}`: its `r` coordinates in the power basis.
///
/// Elements do not point back at their field; every operation goes through
/// the [`FieldSpec`] that produced them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FFElement(pub SmallVec<[u32; 4]>);

impl FFElement {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

/// Shared handle to a [`FieldSpec`]; this is the [`Field`] implementation
/// for finite fields.
#[derive(Clone)]
pub struct GaloisField(Arc<FieldSpec>);

impl Deref for GaloisField {
    type Target = FieldSpec;

    fn deref(&self) -> &FieldSpec {
        &self.0
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaloisField({})", self.describe())
    }
}

fn field_cache() -> &'static Mutex<HashMap<(u64, u32), GaloisField>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), GaloisField>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Builds `F_{p^r}` with the lexicographically smallest monic irreducible
/// modulus of degree `r` (coefficient vectors compared from the constant term
/// up). Results are cached, so repeated calls return the same handle.
pub fn make_field(p: u64, r: u32) -> Result<GaloisField> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r < 1 {
        return Err(Error::InvalidDegree(r));
    }
    let order = p
        .checked_pow(r)
        .filter(|&q| q < (1 << 62))
        .ok_or_else(|| Error::Precondition(format!("F_{p}^{r} is too large to represent")))?;
    if let Some(f) = field_cache().lock().unwrap().get(&(p, r)) {
        return Ok(f.clone());
    }
    let modulus = smallest_irreducible(p, r);
    let field = GaloisField(Arc::new(FieldSpec {
        p,
        r,
        modulus,
        order,
    }));
    field_cache()
        .lock()
        .unwrap()
        .entry((p, r))
        .or_insert(field.clone());
    Ok(field)
}

/// The prime field `F_p`.
pub fn prime_field(p: u64) -> Result<GaloisField> {
    make_field(p, 1)
}

fn smallest_irreducible(p: u64, r: u32) -> Vec<u64> {
    let r = r as usize;
    let mut low = vec![0u64; r];
    loop {
        let mut candidate = low.clone();
        candidate.push(1);
        if is_irreducible(&candidate, p) {
            return candidate;
        }
        // odometer with the constant coefficient as the most significant digit
        let mut i = r;
        loop {
            i -= 1;
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            assert!(i > 0, "no irreducible polynomial of degree {r} over F_{p}");
        }
    }
}

/// Exhaustive trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for k in 1..=deg / 2 {
        let mut divisor = vec![0u64; k + 1];
        divisor[k] = 1;
        loop {
            if poly_rem_is_zero(f, &divisor, p) {
                return false;
            }
            let mut i = 0;
            while i < k {
                divisor[i] += 1;
                if divisor[i] < p {
                    break;
                }
                divisor[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: &[u64], monic: &[u64], p: u64) -> bool {
    let k = monic.len() - 1;
    let mut rem = f.to_vec();
    for top in (k..rem.len()).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        for (i, &m) in monic.iter().enumerate() {
            let idx = top - k + i;
            rem[idx] = (rem[idx] + (p - c) * m) % p;
        }
    }
    rem[..k].iter().all(|&c| c == 0)
}

impl FieldSpec {
    /// `p^r`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> FFElement {
        FFElement(SmallVec::from_elem(0, self.r as usize))
    }

    pub fn one(&self) -> FFElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FFElement {
        let mut x = self.zero();
        x.0[0] = n.rem_euclid(self.p as i64) as u32;
        x
    }

    /// The class of `X`, which generates the field over `F_p`.
    pub fn generator(&self) -> FFElement {
        if self.r == 1 {
            // modulus is X itself, so the class of X is zero; use 1 instead
            return self.one();
        }
        let mut x = self.zero();
        x.0[1] = 1;
        x
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FFElement> {
        if coords.len() != self.r as usize || coords.iter().any(|&c| c as u64 >= self.p) {
            return Err(Error::Parse(format!(
                "{coords:?} is not an element of {}",
                self.describe()
            )));
        }
        Ok(FFElement(coords.iter().copied().collect()))
    }

    pub fn is_valid(&self, x: &FFElement) -> bool {
        x.0.len() == self.r as usize && x.0.iter().all(|&c| (c as u64) < self.p)
    }

    /// The element whose coordinate vector has rank `index` in lexicographic
    /// order (constant coordinate most significant).
    pub fn element_at(&self, mut index: u64) -> FFElement {
        let mut x = self.zero();
        for c in x.0.iter_mut().rev() {
            *c = (index % self.p) as u32;
            index /= self.p;
        }
        x
    }

    /// All elements, sorted by coordinate vector.
    pub fn elements(&self) -> impl Iterator<Item = FFElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    pub fn add(&self, a: &FFElement, b: &FFElement) -> FFElement {
        let p = self.p as u32;
        FFElement(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| {
                    let s = x + y;
                    if s >= p {
                        s - p
                    } else {
                        s
                    }
                })
                .collect(),
        )
    }

    pub fn neg(&self, a: &FFElement) -> FFElement {
        let p = self.p as u32;
        FFElement(a.0.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect())
    }

    pub fn mul(&self, a: &FFElement, b: &FFElement) -> FFElement {
        let p = self.p;
        let r = self.r as usize;
        if r == 1 {
            return FFElement(smallvec::smallvec![(a.0[0] as u64 * b.0[0] as u64 % p) as u32]);
        }
        let mut prod: SmallVec<[u64; 8]> = SmallVec::from_elem(0, 2 * r - 1);
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for top in (r..2 * r - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for i in 0..r {
                prod[top - r + i] = (prod[top - r + i] + (p - c) * self.modulus[i]) % p;
            }
        }
        FFElement(prod[..r].iter().map(|&c| c as u32).collect())
    }

    pub fn pow(&self, a: &FFElement, mut n: u64) -> FFElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_zero(&self, a: &FFElement) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn inv(&self, a: &FFElement) -> Option<FFElement> {
        (!self.is_zero(a)).then(|| self.pow(a, self.order - 2))
    }

    /// `x^(p^k)`, by `k mod r` successive p-th powers.
    pub fn frobenius(&self, x: &FFElement, k: u64) -> FFElement {
        let steps = k % self.r as u64;
        let mut y = x.clone();
        for _ in 0..steps {
            y = self.pow(&y, self.p);
        }
        y
    }

    /// Whether `x` lies in the subfield `F_{p^m}`; `m` must divide `r`.
    pub fn in_subfield(&self, x: &FFElement, m: u32) -> Result<bool> {
        if m == 0 || self.r % m != 0 {
            return Err(Error::NotASubfield { m, r: self.r });
        }
        Ok(self.frobenius(x, m as u64) == *x)
    }

    /// All `n` solutions of `z^n = 1`, sorted by coordinate vector.
    pub fn roots_of_unity(&self, n: u64) -> Result<Vec<FFElement>> {
        if n == 0 {
            return Err(Error::Precondition("order of a root of unity must be >= 1".into()));
        }
        if n % self.p == 0 {
            return Err(Error::RepeatedRoots { p: self.p, n });
        }
        if (self.order - 1) % n != 0 {
            return Err(Error::FieldTooSmall {
                n,
                order: self.order.to_string(),
                required_degree: multiplicative_order(self.p, n).unwrap_or(0),
            });
        }
        let cofactor = (self.order - 1) / n;
        let mut found = BTreeSet::new();
        // x^cofactor is an n-th root for every nonzero x, and the images cover
        // the whole group of n-th roots
        for i in 1..self.order {
            found.insert(self.pow(&self.element_at(i), cofactor));
            if found.len() as u64 == n {
                break;
            }
        }
        Ok(found.into_iter().collect())
    }

    pub fn describe(&self) -> String {
        if self.r == 1 {
            format!("F_{}", self.p)
        } else {
            format!("F_{}^{}", self.p, self.r)
        }
    }

    /// `"p^r:[c0,c1,...]"`.
    pub fn element_json(&self, x: &FFElement) -> String {
        format!("{}^{}:{}", self.p, self.r, coord_list(x))
    }

    pub fn parse_element_json(&self, s: &str) -> Result<FFElement> {
        let bad = || Error::Parse(format!("bad field element {s:?}"));
        let (head, coords) = s.split_once(':').ok_or_else(bad)?;
        let (p, r) = head.split_once('^').ok_or_else(bad)?;
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let r: u32 = r.trim().parse().map_err(|_| bad())?;
        if p != self.p || r != self.r {
            return Err(Error::FieldMismatch);
        }
        self.parse_coord_list(coords)
    }

    fn parse_coord_list(&self, s: &str) -> Result<FFElement> {
        let bad = || Error::Parse(format!("bad coordinate list {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        self.from_coords(&coords)
    }
}

fn coord_list(x: &FFElement) -> String {
    let parts: Vec<String> = x.0.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

impl Field for GaloisField {
    type Elem = FFElement;

    fn zero(&self) -> FFElement {
        FieldSpec::zero(self)
    }

    fn one(&self) -> FFElement {
        FieldSpec::one(self)
    }

    fn from_int(&self, n: i64) -> FFElement {
        FieldSpec::from_int(self, n)
    }

    fn add(&self, a: &FFElement, b: &FFElement) -> FFElement {
        FieldSpec::add(self, a, b)
    }

    fn neg(&self, a: &FFElement) -> FFElement {
        FieldSpec::neg(self, a)
    }

    fn mul(&self, a: &FFElement, b: &FFElement) -> FFElement {
        FieldSpec::mul(self, a, b)
    }

    fn inv(&self, a: &FFElement) -> Option<FFElement> {
        FieldSpec::inv(self, a)
    }

    fn is_zero(&self, a: &FFElement) -> bool {
        FieldSpec::is_zero(self, a)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn roots_of_unity(&self, n: u64) -> Result<Vec<FFElement>> {
        FieldSpec::roots_of_unity(self, n)
    }

    fn pow(&self, a: &FFElement, n: u64) -> FFElement {
        FieldSpec::pow(self, a, n)
    }

    /// Elements of the prime subfield print as integers, others as
    /// coordinate lists.
    fn format_elem(&self, a: &FFElement) -> String {
        if a.0[1..].iter().all(|&c| c == 0) {
            a.0[0].to_string()
        } else {
            coord_list(a)
        }
    }

    fn parse_elem(&self, s: &str) -> Result<FFElement> {
        let s = s.trim();
        if s.starts_with('[') {
            self.parse_coord_list(s)
        } else {
            let n: i64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad field element {s:?}")))?;
            Ok(FieldSpec::from_int(self, n))
        }
    }

    fn elem_to_json(&self, a: &FFElement) -> Value {
        Value::String(self.element_json(a))
    }

    fn elem_from_json(&self, v: &Value) -> Result<FFElement> {
        match v {
            Value::String(s) => self.parse_element_json(s),
            _ => Err(Error::Parse(format!("bad field element {v}"))),
        }
    }

    fn describe(&self) -> String {
        FieldSpec::describe(self)
    }
}
