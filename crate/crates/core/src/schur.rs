//! Determinantal polynomials `R`, `V`, `I`, `T` and their Schur-function
//! identities.
//!
//! For an exponent pair `A > B >= 1` with `d = gcd(A, B)`:
//!
//! * `R_{A,B} = det [[X^A, Y^A, Z^A], [X^B, Y^B, Z^B], [1, 1, 1]]`
//! * `V = (X - Y)(Z - X)(Z - Y)`, the classical Vandermonde determinant
//! * `T_{A,B} = R_{A,B} / V(X^d, Y^d, Z^d)`, the Schur polynomial
//!   `s_λ(X^d, Y^d, Z^d)` with `λ = (A/d - 2, B/d - 1, 0)`
//! * `I_{A,B} = R_{A,B} / (X^d - Y^d)`, halfway between the two.

use serde::Serialize;

use crate::arith::{gcd, lcm, multiplicative_order};
use crate::error::{Error, Result};
use crate::ff::make_field;
use crate::field::Field;
use crate::mpoly::{Monomial, MultiPoly, Var};

/// Field size above which the roots-of-unity cross-check of `I` is skipped.
pub const DEFAULT_CROSS_CHECK_CEILING: u64 = 1_000_000;

/// The pair `(A, B)` indexing `R`, `I` and `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentPair {
    pub a: u32,
    pub b: u32,
    pub d: u32,
}

impl ExponentPair {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if b < 1 || a <= b {
            return Err(Error::InvalidExponentPair { a, b });
        }
        Ok(ExponentPair { a, b, d: gcd(a, b) })
    }

    /// `B = d` or `A - B = d`: no upper or no lower signature.
    pub fn is_case_two(&self) -> bool {
        self.b == self.d || self.a - self.b == self.d
    }

    /// `(A/d - 2, B/d - 1, 0)`.
    pub fn partition(&self) -> Partition3 {
        Partition3([self.a / self.d - 2, self.b / self.d - 1, 0])
    }

    /// Degree of `T` in each variable: `A - 2d`.
    pub fn t_degree_in_z(&self) -> u32 {
        self.a - 2 * self.d
    }

    /// Total degree of `T`: `A + B - 3d`.
    pub fn t_total_degree(&self) -> u32 {
        self.a + self.b - 3 * self.d
    }
}

/// Non-increasing triple of non-negative integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Partition3(pub [u32; 3]);

impl Partition3 {
    pub fn new(parts: [u32; 3]) -> Result<Self> {
        if parts[0] < parts[1] || parts[1] < parts[2] {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition3(parts))
    }
}

fn det3<K: Field>(m: &[[MultiPoly<K>; 3]; 3]) -> Result<MultiPoly<K>> {
    const PERMS: [([usize; 3], bool); 6] = [
        ([0, 1, 2], false),
        ([1, 2, 0], false),
        ([2, 0, 1], false),
        ([0, 2, 1], true),
        ([2, 1, 0], true),
        ([1, 0, 2], true),
    ];
    let field = m[0][0].field();
    let mut acc = MultiPoly::zero(field);
    for (perm, odd) in PERMS {
        let term = m[0][perm[0]]
            .try_mul(&m[1][perm[1]])?
            .try_mul(&m[2][perm[2]])?;
        acc = if odd { acc.try_sub(&term)? } else { acc.try_add(&term)? };
    }
    Ok(acc)
}

fn power_row<K: Field>(field: &K, e: u32) -> [MultiPoly<K>; 3] {
    Var::ALL.map(|v| {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        MultiPoly::monomial(field, field.one(), m)
    })
}

/// `det` of the matrix with rows `(X^e, Y^e, Z^e)` for `e` in `exponents`.
pub fn generalized_vandermonde<K: Field>(field: &K, exponents: [u32; 3]) -> Result<MultiPoly<K>> {
    det3(&exponents.map(|e| power_row(field, e)))
}

/// `V(X^d, Y^d, Z^d)` with `V = (X - Y)(Z - X)(Z - Y)`.
pub fn vandermonde<K: Field>(field: &K, d: u32) -> Result<MultiPoly<K>> {
    if d < 1 {
        return Err(Error::Precondition("d must be >= 1".into()));
    }
    let x = MultiPoly::var(field, Var::X);
    let y = MultiPoly::var(field, Var::Y);
    let z = MultiPoly::var(field, Var::Z);
    let v = (&x - &y).try_mul(&(&z - &x))?.try_mul(&(&z - &y))?;
    v.inflate(d)
}

/// `Z^A (X^B - Y^B) - Z^B (X^A - Y^A) + X^B Y^B (X^{A-B} - Y^{A-B})`.
fn r_closed_form<K: Field>(field: &K, e: &ExponentPair) -> MultiPoly<K> {
    let (a, b) = (e.a, e.b);
    MultiPoly::from_int_terms(
        field,
        [
            (1, [b, 0, a]),
            (-1, [0, b, a]),
            (-1, [a, 0, b]),
            (1, [0, a, b]),
            (1, [a, b, 0]),
            (-1, [b, a, 0]),
        ],
    )
}

/// `R_{A,B}`, built by cofactor expansion and by the closed form, which must
/// agree.
pub fn r_poly<K: Field>(field: &K, e: &ExponentPair) -> Result<MultiPoly<K>> {
    let det = generalized_vandermonde(field, [e.a, e.b, 0])?;
    if det != r_closed_form(field, e) {
        return Err(Error::ConstructionMismatch { what: "R" });
    }
    Ok(det)
}

/// `I_{A,B} = R_{A,B} / (X^d - Y^d)`.
pub fn i_poly<K: Field>(field: &K, e: &ExponentPair) -> Result<MultiPoly<K>> {
    let divisor = MultiPoly::from_int_terms(field, [(1, [e.d, 0, 0]), (-1, [0, e.d, 0])]);
    r_poly(field, e)?.exact_divide(&divisor)
}

/// `∏ (X - θY)` over the `n`-th roots of unity `θ` with `θ^d != 1`.
fn cyclotomic_like_product<K: Field>(field: &K, n: u32, d: u32) -> Result<MultiPoly<K>> {
    let mut acc = MultiPoly::one(field);
    for theta in field.roots_of_unity(n as u64)? {
        if field.is_one(&field.pow(&theta, d as u64)) {
            continue;
        }
        let factor = MultiPoly::from_terms(field, [(field.one(), [1, 0, 0]), (field.neg(&theta), [0, 1, 0])]);
        acc = acc.try_mul(&factor)?;
    }
    Ok(acc)
}

/// `I_{A,B}` rebuilt from roots of unity:
/// `Z^A ∏_ζ (X - ζY) - Z^B ∏_ξ (X - ξY) + X^B Y^B ∏_θ (X - θY)` with
/// `ζ^B = 1`, `ξ^A = 1`, `θ^{A-B} = 1`, all excluding the `d`-th roots.
pub fn i_poly_product_form<K: Field>(field: &K, e: &ExponentPair) -> Result<MultiPoly<K>> {
    let z_a = MultiPoly::monomial(field, field.one(), Monomial([0, 0, e.a]));
    let z_b = MultiPoly::monomial(field, field.one(), Monomial([0, 0, e.b]));
    let xy_b = MultiPoly::monomial(field, field.one(), Monomial([e.b, e.b, 0]));
    let first = z_a.try_mul(&cyclotomic_like_product(field, e.b, e.d)?)?;
    let second = z_b.try_mul(&cyclotomic_like_product(field, e.a, e.d)?)?;
    let third = xy_b.try_mul(&cyclotomic_like_product(field, e.a - e.b, e.d)?)?;
    first.try_sub(&second)?.try_add(&third)
}

/// Outcome of comparing `I` with its roots-of-unity product form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CrossCheck {
    Verified { p: u64, degree: u32 },
    Mismatch { p: u64, degree: u32 },
    Skipped { reason: String },
}

/// Compares the division construction of `I_{A,B}` in characteristic `p`
/// with the product form, in the smallest `F_{p^L}` containing all needed
/// roots of unity. Skips when `p | A B (A - B)`, in characteristic 0, or
/// when `p^L` exceeds `ceiling`.
pub fn i_poly_cross_check(p: u64, e: &ExponentPair, ceiling: u64) -> Result<CrossCheck> {
    if p == 0 {
        return Ok(CrossCheck::Skipped {
            reason: "characteristic 0 has no finite field for the roots of unity".into(),
        });
    }
    let (a, b, c) = (e.a as u64, e.b as u64, (e.a - e.b) as u64);
    if a % p == 0 || b % p == 0 || c % p == 0 {
        return Ok(CrossCheck::Skipped {
            reason: format!("p = {p} divides one of A, B, A - B"),
        });
    }
    let degree = [a, b, c]
        .iter()
        .map(|&n| multiplicative_order(p, n).expect("n is prime to p"))
        .fold(1, lcm);
    let size = (p as f64).powi(degree as i32);
    if size > ceiling as f64 {
        return Ok(CrossCheck::Skipped {
            reason: format!("needs F_{p}^{degree}, above the ceiling {ceiling}"),
        });
    }
    let field = make_field(p, degree)?;
    let ok = i_poly(&field, e)? == i_poly_product_form(&field, e)?;
    Ok(if ok {
        CrossCheck::Verified { p, degree }
    } else {
        CrossCheck::Mismatch { p, degree }
    })
}

/// `I_{A,B}` together with its product-form cross-check.
pub fn i_poly_checked<K: Field>(
    field: &K,
    e: &ExponentPair,
    ceiling: u64,
) -> Result<(MultiPoly<K>, CrossCheck)> {
    let poly = i_poly(field, e)?;
    let check = i_poly_cross_check(field.characteristic(), e, ceiling)?;
    Ok((poly, check))
}

/// `T_{A,B} = R_{A,B} / V(X^d, Y^d, Z^d)`.
pub fn t_poly<K: Field>(field: &K, e: &ExponentPair) -> Result<MultiPoly<K>> {
    r_poly(field, e)?.exact_divide(&vandermonde(field, e.d)?)
}

/// `h_k(X, Y, Z)`: every monomial of total degree `k` with coefficient 1.
pub fn complete_homogeneous<K: Field>(field: &K, k: u32) -> MultiPoly<K> {
    let mut terms = Vec::new();
    for a in 0..=k {
        for b in 0..=k - a {
            terms.push((field.one(), [a, b, k - a - b]));
        }
    }
    MultiPoly::from_terms(field, terms)
}

/// `s_λ(X^d, Y^d, Z^d)` as the bialternant quotient
/// `a_{λ + (2,1,0)} / a_{(2,1,0)}`.
pub fn schur_bialternant<K: Field>(field: &K, lambda: &Partition3, d: u32) -> Result<MultiPoly<K>> {
    if d < 1 {
        return Err(Error::Precondition("d must be >= 1".into()));
    }
    let [l1, l2, l3] = lambda.0;
    let shifted = [
        l1.checked_add(2).ok_or(Error::ExponentOverflow)?,
        l2.checked_add(1).ok_or(Error::ExponentOverflow)?,
        l3,
    ];
    let numerator = generalized_vandermonde(field, shifted)?;
    let denominator = generalized_vandermonde(field, [2, 1, 0])?;
    numerator.exact_divide(&denominator)?.inflate(d)
}

/// `(XYZ)^D f(1/X, 1/Y, 1/Z)`: every exponent `e` becomes `D - e`.
pub fn inverted_transform<K: Field>(f: &MultiPoly<K>, bound: u32) -> Result<MultiPoly<K>> {
    let mut terms = Vec::with_capacity(f.num_terms());
    for (m, c) in f.terms() {
        let mut e = [0; 3];
        for i in 0..3 {
            e[i] = bound
                .checked_sub(m.0[i])
                .ok_or(Error::NegativeExponent { bound })?;
        }
        terms.push((c.clone(), e));
    }
    Ok(MultiPoly::from_terms(f.field(), terms))
}
