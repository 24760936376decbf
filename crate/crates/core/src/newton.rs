//! Newton power sums `N_m = X^m + Y^m` and the counterexample family.
//!
//! Here `X, Y` play the role of the two symmetric-field variables; `Z` is
//! unused.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{checked_pow, gcd, is_prime, log_exact};
use crate::error::{Error, Result};
use crate::ff::{make_field, prime_field, FFElement, GaloisField};
use crate::field::{Field, Rationals};
use crate::mpoly::{LinearForm, MultiPoly, Var};
use crate::schur::ExponentPair;

/// Largest field enumerated by the alternative-pair oracle by default.
pub const DEFAULT_ORACLE_CEILING: u64 = 1_000_000;

fn check_characteristic(p: u64) -> Result<()> {
    if p != 0 && !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// `X^m + Y^m`.
pub fn newton_poly<K: Field>(field: &K, m: u64) -> Result<MultiPoly<K>> {
    if m == 0 {
        return Err(Error::Precondition("Newton polynomial index must be >= 1".into()));
    }
    let m = u32::try_from(m).map_err(|_| Error::ExponentOverflow)?;
    Ok(MultiPoly::from_terms(
        field,
        [(field.one(), [m, 0, 0]), (field.one(), [0, m, 0])],
    ))
}

/// Exponents `a > b > c` of three Newton polynomials over characteristic `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NewtonTriple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub p: u64,
    pub gcd: u32,
}

impl NewtonTriple {
    pub fn new(a: u32, b: u32, c: u32, p: u64) -> Result<Self> {
        if !(a > b && b > c && c >= 1) {
            return Err(Error::Precondition(format!(
                "need a > b > c >= 1, got ({a}, {b}, {c})"
            )));
        }
        check_characteristic(p)?;
        Ok(NewtonTriple {
            a,
            b,
            c,
            p,
            gcd: gcd(gcd(a, b), c),
        })
    }

    /// `(A, B) = (a - c, b - c)`.
    pub fn exponent_pair(&self) -> ExponentPair {
        ExponentPair::new(self.a - self.c, self.b - self.c).expect("a > b > c")
    }

    /// Whether `p` divides each of `a, b, c, a-b, a-c, b-c`, in that order.
    pub fn divisibility_flags(&self) -> [bool; 6] {
        let vals = [
            self.a,
            self.b,
            self.c,
            self.a - self.b,
            self.a - self.c,
            self.b - self.c,
        ];
        vals.map(|v| self.p != 0 && (v as u64) % self.p == 0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a, "b": self.b, "c": self.c, "p": self.p, "gcd": self.gcd,
            "p_divides": {
                "a": self.divisibility_flags()[0],
                "b": self.divisibility_flags()[1],
                "c": self.divisibility_flags()[2],
                "a-b": self.divisibility_flags()[3],
                "a-c": self.divisibility_flags()[4],
                "b-c": self.divisibility_flags()[5],
            },
        })
    }
}

/// `[S : N_a, N_b]` for coprime `a > b` prime to the characteristic.
pub fn two_generator_degree(a: u32, b: u32, p: u64) -> Result<u64> {
    check_characteristic(p)?;
    if !(a > b && b >= 1) {
        return Err(Error::Hypothesis(format!("need a > b >= 1, got ({a}, {b})")));
    }
    if gcd(a, b) != 1 {
        return Err(Error::Hypothesis(format!("{a} and {b} are not coprime")));
    }
    if p != 0 && ((a as u64) % p == 0 || (b as u64) % p == 0) {
        return Err(Error::Hypothesis(format!("characteristic {p} divides {a} or {b}")));
    }
    let (a, b) = (a as u64, b as u64);
    Ok(if (a * b) % 2 == 0 { a * b / 2 } else { (a - 1) * b / 2 })
}

fn jacobian<K: Field>(field: &K, a: u32, b: u32) -> Result<MultiPoly<K>> {
    let f = newton_poly(field, a as u64)?;
    let g = newton_poly(field, b as u64)?;
    let lhs = f.partial_derivative(Var::X).try_mul(&g.partial_derivative(Var::Y))?;
    let rhs = f.partial_derivative(Var::Y).try_mul(&g.partial_derivative(Var::X))?;
    lhs.try_sub(&rhs)
}

/// Whether the Jacobian of `(N_a, N_b)` is a nonzero polynomial in
/// characteristic `p`.
pub fn jacobian_nonzero_check(a: u32, b: u32, p: u64) -> Result<bool> {
    if !(a > b && b >= 1) {
        return Err(Error::Precondition(format!("need a > b >= 1, got ({a}, {b})")));
    }
    check_characteristic(p)?;
    Ok(if p == 0 {
        !jacobian(&Rationals, a, b)?.is_zero()
    } else {
        !jacobian(&prime_field(p)?, a, b)?.is_zero()
    })
}

/// Smallest `η` for which `X² - 2ηX + η` has no root in `F_p`.
pub fn find_irreducible_eta(p: u64) -> Result<u64> {
    if p == 2 {
        return Err(Error::Precondition(
            "characteristic 2 uses a cube root of unity instead".into(),
        ));
    }
    check_characteristic(p)?;
    if p == 0 {
        return Err(Error::Precondition("needs a finite field".into()));
    }
    (0..p)
        .find(|&eta| !has_root_mod_p(p, eta))
        .ok_or(Error::ConstructionMismatch { what: "no irreducible P_eta" })
}

fn has_root_mod_p(p: u64, eta: u64) -> bool {
    let two_eta = (2 * eta) % p;
    (0..p).any(|x| (x * x % p + p * p - two_eta * x % p + eta) % p == 0)
}

/// Linear forms `z = αX + (1-α)Y`, `w = (1-α)X + αY` over `ambient`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternativePair {
    pub alpha: FFElement,
    pub z: LinearForm<FFElement>,
    pub w: LinearForm<FFElement>,
    pub ambient: GaloisField,
    /// The `η` used for odd characteristic.
    pub eta: Option<u64>,
}

impl AlternativePair {
    fn from_alpha(ambient: GaloisField, alpha: FFElement, eta: Option<u64>) -> Self {
        let beta = ambient.sub(&ambient.one(), &alpha);
        AlternativePair {
            z: LinearForm::new(alpha.clone(), beta.clone()),
            w: LinearForm::new(beta, alpha.clone()),
            alpha,
            ambient,
            eta,
        }
    }

    pub fn z_poly(&self) -> MultiPoly<GaloisField> {
        linear_poly(&self.ambient, &self.z)
    }

    pub fn w_poly(&self) -> MultiPoly<GaloisField> {
        linear_poly(&self.ambient, &self.w)
    }

    pub fn to_json(&self) -> Value {
        let f = &self.ambient;
        json!({
            "ambient": f.describe(),
            "eta": self.eta,
            "alpha": f.element_json(&self.alpha),
            "z": self.z_poly().to_string(),
            "w": self.w_poly().to_string(),
        })
    }
}

fn linear_poly(field: &GaloisField, form: &LinearForm<FFElement>) -> MultiPoly<GaloisField> {
    MultiPoly::from_terms(
        field,
        [(form.c_x.clone(), [1, 0, 0]), (form.c_y.clone(), [0, 1, 0])],
    )
}

/// The alternative pair for characteristic `p`: for odd `p`, `α` is the
/// first root in `F_{p²}` of `X² - 2ηX + η` with the smallest admissible
/// `η`; for `p = 2`, `α` is the first primitive cube root of unity in `F_4`.
pub fn build_alternative_pair(p: u64) -> Result<AlternativePair> {
    if p == 2 {
        let f4 = make_field(2, 2)?;
        let alpha = f4
            .roots_of_unity(3)?
            .into_iter()
            .find(|x| !f4.is_one(x))
            .expect("F_4 has primitive cube roots");
        return Ok(AlternativePair::from_alpha(f4, alpha, None));
    }
    build_alternative_pair_with_eta(p, find_irreducible_eta(p)?)
}

pub fn build_alternative_pair_with_eta(p: u64, eta: u64) -> Result<AlternativePair> {
    if p == 2 || !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    let eta = eta % p;
    if has_root_mod_p(p, eta) {
        return Err(Error::Hypothesis(format!(
            "X^2 - 2*{eta}*X + {eta} has a root in F_{p}"
        )));
    }
    let field = make_field(p, 2)?;
    let e = field.from_int(eta as i64);
    let two_e = field.add(&e, &e);
    let alpha = field
        .elements()
        .find(|x| {
            let v = field.add(&field.sub(&field.mul(x, x), &field.mul(&two_e, x)), &e);
            field.is_zero(&v)
        })
        .ok_or(Error::ConstructionMismatch { what: "root of P_eta" })?;
    let beta = field.frobenius(&alpha, 1);
    let two_ab = field.mul(&field.from_int(2), &field.mul(&alpha, &beta));
    if field.add(&alpha, &beta) != two_e || two_ab != two_e {
        return Err(Error::ConstructionMismatch { what: "2αβ = α + β = 2η" });
    }
    Ok(AlternativePair::from_alpha(field, alpha, Some(eta)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityMode {
    Direct,
    FrobeniusShortcut,
}

impl FromStr for IdentityMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(IdentityMode::Direct),
            "frobenius_shortcut" | "frobenius-shortcut" | "shortcut" => {
                Ok(IdentityMode::FrobeniusShortcut)
            }
            _ => Err(Error::Parse(format!("unknown identity mode {s:?}"))),
        }
    }
}

/// Whether `z^m + w^m = X^m + Y^m`.
pub fn verify_newton_identity(pair: &AlternativePair, m: u64, mode: IdentityMode) -> Result<bool> {
    match mode {
        IdentityMode::Direct => {
            let field = &pair.ambient;
            let lhs = pair.z_poly().try_pow(m)?.try_add(&pair.w_poly().try_pow(m)?)?;
            Ok(lhs == newton_poly(field, m)?)
        }
        IdentityMode::FrobeniusShortcut => {
            let p = pair.ambient.p;
            let j = m
                .checked_sub(1)
                .and_then(|n| log_exact(n, p))
                .ok_or_else(|| {
                    Error::Precondition(format!("shortcut needs m = {p}^j + 1, got {m}"))
                })?;
            Ok(shortcut_identity(pair, j as u64))
        }
    }
}

/// `z^{p^j + 1} + w^{p^j + 1} = X^{p^j + 1} + Y^{p^j + 1}`, decided from the
/// four coefficients of `(a^{(j)} X^q + b^{(j)} Y^q)(aX + bY)` with `q = p^j`
/// and `a^{(j)}` the `j`-th Frobenius image. No exponent is ever expanded,
/// so `j` may be arbitrarily large.
pub fn shortcut_identity(pair: &AlternativePair, j: u64) -> bool {
    let f = &pair.ambient;
    let mut c = [f.zero(), f.zero(), f.zero(), f.zero()];
    for form in [&pair.z, &pair.w] {
        let (a, b) = (&form.c_x, &form.c_y);
        let (aq, bq) = (f.frobenius(a, j), f.frobenius(b, j));
        // X^{q+1}, X^q Y, X Y^q, Y^{q+1}
        let parts = [f.mul(&aq, a), f.mul(&aq, b), f.mul(&bq, a), f.mul(&bq, b)];
        for (acc, part) in c.iter_mut().zip(parts) {
            *acc = f.add(acc, &part);
        }
    }
    let one = f.one();
    if j == 0 {
        // q = 1: the middle monomials coincide
        c[0] == one && f.is_zero(&f.add(&c[1], &c[2])) && c[3] == one
    } else {
        c[0] == one && f.is_zero(&c[1]) && f.is_zero(&c[2]) && c[3] == one
    }
}

/// `(p, r, s)` with `r > s >= 0` and `m = gcd(r, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TowerParams {
    pub p: u64,
    pub r: u32,
    pub s: u32,
    pub m: u32,
}

impl TowerParams {
    pub fn new(p: u64, r: u32, s: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r <= s {
            return Err(Error::Precondition(format!("need r > s, got r={r} s={s}")));
        }
        Ok(TowerParams { p, r, s, m: gcd(r, s) })
    }
}

/// `#{α ∈ F_{p^{r-s}} : 2α·α^{p^s} = α + α^{p^s}}`.
pub fn brute_count_alternatives(t: &TowerParams, ceiling: u64) -> Result<u64> {
    if t.s == 0 {
        return Err(Error::Precondition("the count needs s >= 1".into()));
    }
    let n = t.r - t.s;
    let size = checked_pow(t.p, n).filter(|&q| q <= ceiling).ok_or_else(|| {
        Error::CeilingExceeded {
            size: format!("{}^{}", t.p, n),
            ceiling,
        }
    })?;
    let field = make_field(t.p, n)?;
    let two = field.from_int(2);
    let count = (0..size)
        .into_par_iter()
        .filter(|&i| {
            let a = field.element_at(i);
            let b = field.frobenius(&a, t.s as u64);
            field.mul(&two, &field.mul(&a, &b)) == field.add(&a, &b)
        })
        .count();
    Ok(count as u64)
}

/// Closed form for `[S : N_{p^r+1}, N_{p^s+1}, N_1]`.
pub fn degree_formula(t: &TowerParams) -> Result<u64> {
    if t.s == 0 {
        return Err(Error::Hypothesis("the degree formula needs s >= 1".into()));
    }
    let overflow = || Error::Precondition(format!("{}^{} overflows", t.p, t.m));
    if t.p == 2 {
        return checked_pow(2, t.m - 1).ok_or_else(overflow);
    }
    if (t.r - t.s) % (2 * t.m) != 0 {
        return Ok(1);
    }
    Ok(checked_pow(t.p, t.m).ok_or_else(overflow)?.div_ceil(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeMode {
    Formula,
    Oracle,
    Both,
}

impl FromStr for DegreeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(DegreeMode::Formula),
            "oracle" => Ok(DegreeMode::Oracle),
            "both" => Ok(DegreeMode::Both),
            _ => Err(Error::Parse(format!("unknown degree mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub params: TowerParams,
    pub formula_value: Option<u64>,
    pub oracle_count: Option<u64>,
    pub oracle_value: Option<u64>,
    /// Only set when both sides were computed.
    pub agree: Option<bool>,
}

impl DegreeReport {
    pub fn passes(&self) -> bool {
        self.agree != Some(false)
    }
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(v) = self.formula_value {
            parts.push(format!("formula={v}"));
        }
        if let Some(v) = self.oracle_value {
            parts.push(format!("oracle={v}"));
        }
        if let Some(a) = self.agree {
            parts.push(format!("agree={a}"));
        }
        f.write_str(&parts.join(" "))
    }
}

pub fn degree_of_extension(t: &TowerParams, mode: DegreeMode, ceiling: u64) -> Result<DegreeReport> {
    let formula_value = match mode {
        DegreeMode::Formula | DegreeMode::Both => Some(degree_formula(t)?),
        DegreeMode::Oracle => None,
    };
    let oracle_count = match mode {
        DegreeMode::Oracle | DegreeMode::Both => Some(brute_count_alternatives(t, ceiling)?),
        DegreeMode::Formula => None,
    };
    if let Some(c) = oracle_count {
        if c % 2 != 0 {
            return Err(Error::ConstructionMismatch { what: "odd alternative count" });
        }
    }
    let oracle_value = oracle_count.map(|c| c / 2);
    let agree = match (formula_value, oracle_value) {
        (Some(f), Some(o)) => Some(f == o),
        _ => None,
    };
    Ok(DegreeReport {
        params: *t,
        formula_value,
        oracle_count,
        oracle_value,
        agree,
    })
}

/// `g² · base`.
pub fn gcd_reduction_degree(g: u64, base: &BigRational) -> Result<BigRational> {
    if g == 0 {
        return Err(Error::Precondition("g must be >= 1".into()));
    }
    let g = BigInt::from(g);
    Ok(base * BigRational::from_integer(&g * &g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_poly_basics() {
        let q = Rationals;
        assert_eq!(newton_poly(&q, 1).unwrap().to_string(), "X + Y");
        assert_eq!(newton_poly(&q, 2).unwrap().to_string(), "X^2 + Y^2");
        assert!(newton_poly(&q, 0).is_err());
        assert_eq!(newton_poly(&q, 1 << 40).unwrap_err(), Error::ExponentOverflow);
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(
            newton_poly(&f5, 15).unwrap(),
            newton_poly(&f5, 3).unwrap().try_pow(5).unwrap()
        );
    }

    #[test]
    fn two_generator_examples() {
        assert_eq!(two_generator_degree(3, 2, 0).unwrap(), 3);
        assert_eq!(two_generator_degree(5, 3, 0).unwrap(), 6);
        assert_eq!(two_generator_degree(5, 2, 7).unwrap(), 5);
        assert_eq!(two_generator_degree(2, 1, 0).unwrap(), 1);
        assert!(two_generator_degree(3, 2, 3).is_err());
        assert!(two_generator_degree(4, 2, 0).is_err());
    }

    #[test]
    fn jacobian_examples() {
        assert!(jacobian_nonzero_check(3, 2, 5).unwrap());
        assert!(!jacobian_nonzero_check(3, 2, 3).unwrap());
        assert!(!jacobian_nonzero_check(3, 2, 2).unwrap());
        assert!(jacobian_nonzero_check(7, 3, 0).unwrap());
        assert!(jacobian_nonzero_check(2, 3, 0).is_err());
    }

    #[test]
    fn eta_scan() {
        assert_eq!(find_irreducible_eta(3).unwrap(), 2);
        // oracle: η² - η must be a non-residue mod p
        for p in [3u64, 5, 7, 11, 13] {
            let eta = find_irreducible_eta(p).unwrap();
            let residues: Vec<u64> = (0..p).map(|x| x * x % p).collect();
            let disc = (eta * eta + p - eta) % p;
            assert!(!residues.contains(&disc), "p={p}");
            for smaller in 0..eta {
                assert!(residues.contains(&((smaller * smaller + p - smaller) % p)));
            }
        }
        assert!(find_irreducible_eta(2).is_err());
    }

    #[test]
    fn alternative_pairs() {
        let pair = build_alternative_pair(3).unwrap();
        let f9 = &pair.ambient;
        assert_eq!(pair.eta, Some(2));
        assert!(!f9.in_subfield(&pair.alpha, 1).unwrap());
        let sum = pair.z_poly().try_add(&pair.w_poly()).unwrap();
        assert_eq!(sum, newton_poly(f9, 1).unwrap());

        let pair2 = build_alternative_pair(2).unwrap();
        let f4 = &pair2.ambient;
        let a = &pair2.alpha;
        assert!(f4.is_zero(&f4.add(&f4.add(&f4.mul(a, a), a), &f4.one())));
        assert!(build_alternative_pair_with_eta(3, 1).is_err());
    }

    #[test]
    fn newton_identity_p3() {
        let pair = build_alternative_pair(3).unwrap();
        assert!(verify_newton_identity(&pair, 1, IdentityMode::Direct).unwrap());
        for m in [4, 10] {
            let direct = verify_newton_identity(&pair, m, IdentityMode::Direct).unwrap();
            let short = verify_newton_identity(&pair, m, IdentityMode::FrobeniusShortcut).unwrap();
            assert_eq!(direct, short, "m={m}");
        }
        assert!(verify_newton_identity(&pair, 4, IdentityMode::Direct).unwrap());
        assert!(verify_newton_identity(&pair, 28, IdentityMode::FrobeniusShortcut).unwrap());
        assert!(!verify_newton_identity(&pair, 10, IdentityMode::Direct).unwrap());
        assert!(verify_newton_identity(&pair, 5, IdentityMode::FrobeniusShortcut).is_err());
        assert!(shortcut_identity(&pair, 101));
        assert!(!shortcut_identity(&pair, 100));
    }

    #[test]
    fn newton_identity_p2() {
        let pair = build_alternative_pair(2).unwrap();
        for m in [1, 5, 17] {
            assert!(verify_newton_identity(&pair, m, IdentityMode::Direct).unwrap(), "m={m}");
        }
        assert!(verify_newton_identity(&pair, 17, IdentityMode::FrobeniusShortcut).unwrap());
        assert!(!verify_newton_identity(&pair, 3, IdentityMode::Direct).unwrap());
    }

    #[test]
    fn brute_counts() {
        let ceil = DEFAULT_ORACLE_CEILING;
        assert_eq!(brute_count_alternatives(&TowerParams::new(3, 2, 1).unwrap(), ceil).unwrap(), 2);
        assert_eq!(brute_count_alternatives(&TowerParams::new(3, 3, 1).unwrap(), ceil).unwrap(), 4);
        assert_eq!(brute_count_alternatives(&TowerParams::new(2, 4, 2).unwrap(), ceil).unwrap(), 4);
        assert!(matches!(
            brute_count_alternatives(&TowerParams::new(3, 9, 1).unwrap(), 100),
            Err(Error::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn degree_examples() {
        let ceil = DEFAULT_ORACLE_CEILING;
        let rep = degree_of_extension(&TowerParams::new(3, 3, 1).unwrap(), DegreeMode::Both, ceil).unwrap();
        assert_eq!(rep.to_string(), "formula=2 oracle=2 agree=true");
        let rep = degree_of_extension(&TowerParams::new(3, 2, 1).unwrap(), DegreeMode::Formula, ceil).unwrap();
        assert_eq!(rep.formula_value, Some(1));
        let rep = degree_of_extension(&TowerParams::new(2, 4, 2).unwrap(), DegreeMode::Both, ceil).unwrap();
        assert_eq!((rep.formula_value, rep.oracle_value), (Some(2), Some(2)));
        let s0 = TowerParams::new(3, 2, 0).unwrap();
        assert!(degree_of_extension(&s0, DegreeMode::Formula, ceil).is_err());
    }

    #[test]
    fn gcd_reduction() {
        let three = BigRational::from_integer(3.into());
        let one = BigRational::from_integer(1.into());
        assert_eq!(gcd_reduction_degree(1, &three).unwrap(), three);
        assert_eq!(gcd_reduction_degree(2, &three).unwrap(), BigRational::from_integer(12.into()));
        assert_eq!(gcd_reduction_degree(3, &one).unwrap(), BigRational::from_integer(9.into()));
    }

    #[test]
    fn triple_flags() {
        let t = NewtonTriple::new(10, 4, 1, 3).unwrap();
        assert_eq!(t.gcd, 1);
        assert_eq!(t.divisibility_flags(), [false, false, false, true, true, true]);
        assert_eq!(t.exponent_pair(), ExponentPair::new(9, 3).unwrap());
        assert!(NewtonTriple::new(3, 3, 1, 0).is_err());
    }
}
