//! Factorization and irreducibility evidence for the `T` family.
//!
//! Irreducibility is only ever asserted by one of two criteria, each tagged
//! in its report: the signature pattern of `I_{A,B}` (exponent pairs with
//! both an upper and a lower signature) and the Eisenstein-like test on the
//! constant and linear `Z`-coefficients. A missing linear factor proves
//! nothing and is never reported as irreducibility.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ff::{make_field, FFElement, GaloisField};
use crate::field::Field;
use crate::mpoly::{Homogeneity, LinearForm, MultiPoly, Multiplicity, Var};
use crate::schur::{i_poly, t_poly, ExponentPair};

/// Largest `p^r` for which every `(α, β) ∈ F_{p^r}²` is tried by default.
pub const DEFAULT_FACTOR_CEILING: u64 = 512;

/// `Z - αX - βY` with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFactor {
    pub alpha: FFElement,
    pub beta: FFElement,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FactorReport {
    pub field: GaloisField,
    pub input: Option<ExponentPair>,
    /// Coefficient of the top power of `Z`, a polynomial in `X, Y`.
    pub leading_coefficient: MultiPoly<GaloisField>,
    /// Sorted by `(α, β)` coordinate vectors.
    pub linear_factors: Vec<LinearFactor>,
    /// What is left after dividing out every linear factor.
    pub residual: MultiPoly<GaloisField>,
    pub residual_degree_in_z: u32,
    pub fully_split: bool,
}

impl FactorReport {
    pub fn factor_count(&self) -> u32 {
        self.linear_factors.iter().map(|f| f.multiplicity).sum()
    }

    /// Product of the linear factors with the residual; equals the input.
    pub fn reassemble(&self) -> Result<MultiPoly<GaloisField>> {
        let mut acc = self.residual.clone();
        for f in &self.linear_factors {
            let lin = linear_factor_poly(&self.field, &f.alpha, &f.beta);
            acc = acc.try_mul(&lin.try_pow(f.multiplicity as u64)?)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let field = &self.field;
        json!({
            "field": field.describe(),
            "input": self.input.map(|e| json!({"A": e.a, "B": e.b, "d": e.d})),
            "leading_coefficient": self.leading_coefficient.to_string(),
            "linear_factors": self.linear_factors.iter().map(|f| json!({
                "alpha": field.element_json(&f.alpha),
                "beta": field.element_json(&f.beta),
                "multiplicity": f.multiplicity,
            })).collect::<Vec<_>>(),
            "factor_count": self.factor_count(),
            "residual_degree_in_z": self.residual_degree_in_z,
            "fully_split": self.fully_split,
        })
    }
}

/// `Z - αX - βY`.
pub fn linear_factor_poly(
    field: &GaloisField,
    alpha: &FFElement,
    beta: &FFElement,
) -> MultiPoly<GaloisField> {
    MultiPoly::from_terms(
        field,
        [
            (field.one(), [0, 0, 1]),
            (field.neg(alpha), [1, 0, 0]),
            (field.neg(beta), [0, 1, 0]),
        ],
    )
}

/// Extracts every factor `Z - αX - βY` of `f` over its coefficient field,
/// trying all `(α, β)` in coordinate order. A pair divides `f` exactly when
/// the substitution `Z = αX + βY` annihilates it.
pub fn linear_factors_over(f: &MultiPoly<GaloisField>, ceiling: u64) -> Result<FactorReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field().clone();
    if field.order() > ceiling {
        return Err(Error::CeilingExceeded {
            size: field.order().to_string(),
            ceiling,
        });
    }
    let coeffs = f.coefficients_in(Var::Z);
    let leading_coefficient = coeffs.last().cloned().expect("nonzero polynomial");
    let elements: Vec<FFElement> = field.elements().collect();
    let mut current = f.clone();
    let mut linear_factors = Vec::new();
    'outer: for alpha in &elements {
        for beta in &elements {
            if current.degree_in(Var::Z) == Some(0) {
                break 'outer;
            }
            let form = LinearForm::new(alpha.clone(), beta.clone());
            let divisor = linear_factor_poly(&field, alpha, beta);
            let mut multiplicity = 0;
            while current.degree_in(Var::Z).unwrap_or(0) > 0
                && current.substitute(Var::Z, &form)?.is_zero()
            {
                current = current.exact_divide(&divisor)?;
                multiplicity += 1;
            }
            if multiplicity > 0 {
                linear_factors.push(LinearFactor {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    multiplicity,
                });
            }
        }
    }
    let residual_degree_in_z = current.degree_in(Var::Z).unwrap_or(0);
    Ok(FactorReport {
        field,
        input: None,
        leading_coefficient,
        linear_factors,
        residual: current,
        residual_degree_in_z,
        fully_split: residual_degree_in_z == 0,
    })
}

/// Verdict for one of the closed-form factorizations of `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct FactVerdict {
    pub holds: bool,
    /// The explicit product equals `T`.
    pub product_matches: bool,
    pub expected_factor_count: u64,
    pub report: FactorReport,
}

impl FactVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds,
            "product_matches": self.product_matches,
            "expected_factor_count": self.expected_factor_count,
            "report": self.report.to_json(),
        })
    }
}

fn fact_verdict(
    field: &GaloisField,
    pair: ExponentPair,
    expected: Vec<(FFElement, FFElement)>,
    ceiling: u64,
) -> Result<FactVerdict> {
    let t = t_poly(field, &pair)?;
    let mut product = MultiPoly::one(field);
    for (alpha, beta) in &expected {
        product = product.try_mul(&linear_factor_poly(field, alpha, beta))?;
    }
    let mut report = linear_factors_over(&t, ceiling)?;
    report.input = Some(pair);
    let mut found: Vec<_> = report
        .linear_factors
        .iter()
        .map(|f| (f.alpha.clone(), f.beta.clone(), f.multiplicity))
        .collect();
    found.sort();
    let mut wanted: Vec<_> = expected.into_iter().map(|(a, b)| (a, b, 1)).collect();
    wanted.sort();
    let product_matches = product == t;
    Ok(FactVerdict {
        holds: product_matches && report.fully_split && found == wanted,
        product_matches,
        expected_factor_count: wanted.len() as u64,
        report,
    })
}

fn checked_field(p: u64, r: u32, ceiling: u64) -> Result<GaloisField> {
    let size = p.checked_pow(r).unwrap_or(u64::MAX);
    if size > ceiling {
        return Err(Error::CeilingExceeded {
            size: size.to_string(),
            ceiling,
        });
    }
    make_field(p, r)
}

/// `T_{p^r,1} = ∏_{α ∈ F_{p^r}, α ≠ 0,1} (Z - αX + (α - 1)Y)` over `F_{p^r}`.
pub fn verify_fact_eq1(p: u64, r: u32, ceiling: u64) -> Result<FactVerdict> {
    let field = checked_field(p, r, ceiling)?;
    let q = field.order() as u32;
    let pair = ExponentPair::new(q, 1)?;
    let one = field.one();
    let expected = field
        .elements()
        .filter(|a| !field.is_zero(a) && *a != one)
        .map(|a| {
            let beta = field.sub(&one, &a);
            (a, beta)
        })
        .collect();
    fact_verdict(&field, pair, expected, ceiling)
}

/// `T_{p^{2r}-1, p^r-1} = ∏_{α, β ∈ F_{p^r} \ 0} (Z - αX - βY)` over `F_{p^r}`.
pub fn verify_fact_eq2(p: u64, r: u32, ceiling: u64) -> Result<FactVerdict> {
    let field = checked_field(p, r, ceiling)?;
    let q = field.order() as u32;
    let pair = ExponentPair::new(q * q - 1, q - 1)?;
    let nonzero: Vec<_> = field.elements().filter(|a| !field.is_zero(a)).collect();
    let expected = nonzero
        .iter()
        .flat_map(|a| nonzero.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    fact_verdict(&field, pair, expected, ceiling)
}

/// `f | g`. The zero polynomial divides nothing here.
pub fn divides<K: Field>(f: &MultiPoly<K>, g: &MultiPoly<K>) -> bool {
    f.divides(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignatureKind {
    /// Pattern on the lowest `Z`-coefficients.
    Lower,
    /// Pattern on the highest `Z`-coefficients.
    Upper,
}

impl SignatureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SignatureKind::Lower => "lower",
            SignatureKind::Upper => "upper",
        }
    }
}

/// A signature of `I_{A,B}` relative to the prime `X - θY`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureWitness<E> {
    pub kind: SignatureKind,
    pub length: u32,
    pub root: E,
    pub prime_form: LinearForm<E>,
    /// Multiplicity of the prime in the `length + 1` coefficients of the
    /// pattern, starting at the end (`Z^0` for lower, `Z^top` for upper).
    pub checks: Vec<Multiplicity>,
    pub verdict: bool,
}

impl<E> SignatureWitness<E> {
    fn new(kind: SignatureKind, length: u32, root: E, prime_form: LinearForm<E>, checks: Vec<Multiplicity>) -> Self {
        let n = checks.len();
        let verdict = n == length as usize + 1
            && checks[0] == Multiplicity::Finite(1)
            && checks[1..n - 1].iter().all(|m| m.at_least(1))
            && checks[n - 1] == Multiplicity::Finite(0);
        SignatureWitness {
            kind,
            length,
            root,
            prime_form,
            checks,
            verdict,
        }
    }

    pub fn to_json<K: Field<Elem = E>>(&self, field: &K) -> Value {
        json!({
            "kind": self.kind.as_str(),
            "length": self.length,
            "root": field.elem_to_json(&self.root),
            "prime_form": [field.elem_to_json(&self.prime_form.c_x), field.elem_to_json(&self.prime_form.c_y)],
            "checks": self.checks.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
            "verdict": self.verdict,
        })
    }
}

/// Every lower signature of `I_{A,B}` (length `B`, primes `X - θY` with
/// `θ^{A-B} = 1 ≠ θ^d`) and every upper signature (length `A - B`, primes
/// `X - ζY` with `ζ^B = 1 ≠ ζ^d`).
///
/// Only defined when both kinds exist and the roots are simple, i.e. for
/// `B ≠ d`, `A - B ≠ d` and a characteristic dividing neither `B` nor `A - B`.
pub fn signature_witness<K: Field>(
    field: &K,
    e: &ExponentPair,
) -> Result<Vec<SignatureWitness<K::Elem>>> {
    if e.is_case_two() {
        return Err(Error::CaseTwoPair);
    }
    let p = field.characteristic();
    if p != 0 && ((e.b as u64) % p == 0 || ((e.a - e.b) as u64) % p == 0) {
        return Err(Error::Hypothesis(format!(
            "characteristic {p} divides B = {} or A - B = {}",
            e.b,
            e.a - e.b
        )));
    }
    let lower_roots = field.roots_of_unity((e.a - e.b) as u64)?;
    let upper_roots = field.roots_of_unity(e.b as u64)?;
    let i = i_poly(field, e)?;
    let coeffs = i.coefficients_in(Var::Z);
    if coeffs.len() != e.a as usize + 1 {
        return Err(Error::ConstructionMismatch { what: "degree of I in Z" });
    }

    let mut witnesses = Vec::new();
    let primitive = |root: &K::Elem| !field.is_one(&field.pow(root, e.d as u64));
    for theta in lower_roots.into_iter().filter(primitive) {
        let form = LinearForm::new(field.one(), field.neg(&theta));
        let checks = coeffs[..=e.b as usize]
            .iter()
            .map(|c| c.linear_multiplicity(&form))
            .collect::<Result<Vec<_>>>()?;
        witnesses.push(SignatureWitness::new(SignatureKind::Lower, e.b, theta, form, checks));
    }
    let top = e.a as usize;
    let length = e.a - e.b;
    for zeta in upper_roots.into_iter().filter(primitive) {
        let form = LinearForm::new(field.one(), field.neg(&zeta));
        let checks = (0..=length as usize)
            .map(|j| coeffs[top - j].linear_multiplicity(&form))
            .collect::<Result<Vec<_>>>()?;
        witnesses.push(SignatureWitness::new(SignatureKind::Upper, length, zeta, form, checks));
    }
    Ok(witnesses)
}

/// Outcome of the Eisenstein-like test on `f = Σ f_j Z^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinVerdict {
    /// `Some(k)` when `f_0` is a unit times `P^k`.
    pub constant_power: Option<u32>,
    pub prime_divides_linear_coefficient: bool,
    /// When true, `f` is irreducible.
    pub irreducible: bool,
}

impl EisensteinVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "criterion": "eisenstein_like",
            "constant_power": self.constant_power,
            "prime_divides_linear_coefficient": self.prime_divides_linear_coefficient,
            "irreducible": self.irreducible,
        })
    }
}

/// For homogeneous `f`: irreducible if `f_0` is a power of the linear form
/// `P` and `P` does not divide `f_1`.
pub fn eisenstein_like_check<K: Field>(
    f: &MultiPoly<K>,
    prime: &LinearForm<K::Elem>,
) -> Result<EisensteinVerdict> {
    match f.homogeneity() {
        Homogeneity::Zero => return Err(Error::ZeroPolynomial),
        Homogeneity::Mixed => return Err(Error::NotHomogeneous),
        Homogeneity::Homogeneous(_) => {}
    }
    let coeffs = f.coefficients_in(Var::Z);
    let zero = MultiPoly::zero(f.field());
    let f0 = coeffs.first().unwrap_or(&zero);
    let f1 = coeffs.get(1).unwrap_or(&zero);
    let constant_power = match f0.linear_multiplicity(prime)? {
        Multiplicity::Finite(k) if Some(k as u64) == f0.total_degree() => Some(k),
        _ => None,
    };
    let prime_divides_linear_coefficient = f1.linear_multiplicity(prime)?.at_least(1);
    let irreducible = constant_power.is_some_and(|k| k >= 1)
        && !prime_divides_linear_coefficient
        && f.degree_in(Var::Z).unwrap_or(0) >= 1;
    Ok(EisensteinVerdict {
        constant_power,
        prime_divides_linear_coefficient,
        irreducible,
    })
}

/// Values of `f` and its three partials at one projective point.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularityReport<E> {
    pub value: E,
    pub partials: [E; 3],
    /// `[f, ∂X f, ∂Y f, ∂Z f]` vanish.
    pub vanishing: [bool; 4],
    pub singular: bool,
}

impl<E> SingularityReport<E> {
    pub fn to_json<K: Field<Elem = E>>(&self, field: &K) -> Value {
        json!({
            "value": field.elem_to_json(&self.value),
            "partials": self.partials.iter().map(|x| field.elem_to_json(x)).collect::<Vec<_>>(),
            "vanishing": self.vanishing,
            "singular": self.singular,
        })
    }
}

/// Evaluates a homogeneous `f` and its gradient at `point`; the point is
/// singular iff all four values vanish.
pub fn singular_point_probe<K: Field>(
    f: &MultiPoly<K>,
    point: &[K::Elem; 3],
) -> Result<SingularityReport<K::Elem>> {
    let field = f.field();
    if point.iter().all(|x| field.is_zero(x)) {
        return Err(Error::ZeroPoint);
    }
    match f.homogeneity() {
        Homogeneity::Mixed => return Err(Error::NotHomogeneous),
        Homogeneity::Zero | Homogeneity::Homogeneous(_) => {}
    }
    let value = f.evaluate(point);
    let partials = Var::ALL.map(|v| f.partial_derivative(v).evaluate(point));
    let vanishing = [
        field.is_zero(&value),
        field.is_zero(&partials[0]),
        field.is_zero(&partials[1]),
        field.is_zero(&partials[2]),
    ];
    Ok(SingularityReport {
        value,
        partials,
        singular: vanishing.iter().all(|&b| b),
        vanishing,
    })
}

/// Both sides of `∂Z T_{k,1}(φ, ψ, 1) = (k - 1) / ((1 - φ)(1 - ψ))`.
#[derive(Debug, Clone, PartialEq)]
pub struct GradEval<E> {
    pub lhs: E,
    pub rhs: E,
    pub holds: bool,
}

/// Checks the gradient value of `T_{k,1}` at `(φ, ψ, 1)` where `φ, ψ` are
/// distinct nontrivial `(k-1)`-th roots of unity and the characteristic
/// divides neither `k` nor `k - 1`.
pub fn grad_eval_identity<K: Field>(
    field: &K,
    k: u32,
    phi: &K::Elem,
    psi: &K::Elem,
) -> Result<GradEval<K::Elem>> {
    if k < 3 {
        return Err(Error::Precondition(format!("k = {k} must be at least 3")));
    }
    let p = field.characteristic();
    if p != 0 && ((k as u64) % p == 0 || ((k - 1) as u64) % p == 0) {
        return Err(Error::Precondition(format!(
            "characteristic {p} divides k = {k} or k - 1"
        )));
    }
    let one = field.one();
    for root in [phi, psi] {
        if !field.is_one(&field.pow(root, (k - 1) as u64)) {
            return Err(Error::Precondition(format!(
                "{} is not a {}-th root of unity",
                field.format_elem(root),
                k - 1
            )));
        }
    }
    if *phi == one || *psi == one || phi == psi {
        return Err(Error::Precondition("φ, ψ and 1 must be pairwise distinct".into()));
    }
    let t = t_poly(field, &ExponentPair::new(k, 1)?)?;
    let lhs = t
        .partial_derivative(Var::Z)
        .evaluate(&[phi.clone(), psi.clone(), one.clone()]);
    let denom = field.mul(&field.sub(&one, phi), &field.sub(&one, psi));
    let rhs = field
        .div(&field.from_int((k - 1) as i64), &denom)
        .expect("φ, ψ differ from 1");
    Ok(GradEval {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::schur::{complete_homogeneous, vandermonde};

    fn pair(a: u32, b: u32) -> ExponentPair {
        ExponentPair::new(a, b).unwrap()
    }

    #[test]
    fn t31_over_f3_has_one_factor() {
        let f3 = make_field(3, 1).unwrap();
        let t = t_poly(&f3, &pair(3, 1)).unwrap();
        let report = linear_factors_over(&t, DEFAULT_FACTOR_CEILING).unwrap();
        assert_eq!(
            report.linear_factors,
            vec![LinearFactor {
                alpha: f3.from_int(2),
                beta: f3.from_int(2),
                multiplicity: 1
            }]
        );
        assert!(report.fully_split);
        assert_eq!(report.reassemble().unwrap(), t);
    }

    #[test]
    fn t31_over_f2_has_one_factor() {
        let f2 = make_field(2, 1).unwrap();
        let t = t_poly(&f2, &pair(3, 1)).unwrap();
        let report = linear_factors_over(&t, DEFAULT_FACTOR_CEILING).unwrap();
        assert_eq!(report.factor_count(), 1);
        assert_eq!(report.linear_factors[0].alpha, f2.one());
        assert_eq!(report.linear_factors[0].beta, f2.one());
    }

    #[test]
    fn z_squared_is_a_double_factor() {
        let f5 = make_field(5, 1).unwrap();
        let z2 = MultiPoly::parse(&f5, "Z^2").unwrap();
        let report = linear_factors_over(&z2, DEFAULT_FACTOR_CEILING).unwrap();
        assert_eq!(
            report.linear_factors,
            vec![LinearFactor {
                alpha: f5.zero(),
                beta: f5.zero(),
                multiplicity: 2
            }]
        );
    }

    #[test]
    fn factor_report_invariant_on_non_split_input() {
        let f3 = make_field(3, 1).unwrap();
        // (Z - X)(Z^2 + X^2 + Y^2) has a single linear factor and a residual
        let f = MultiPoly::parse(&f3, "Z - X").unwrap();
        let g = MultiPoly::parse(&f3, "Z^2 + X^2 + Y^2").unwrap();
        let report = linear_factors_over(&(&f * &g), DEFAULT_FACTOR_CEILING).unwrap();
        assert_eq!(report.factor_count() + report.residual_degree_in_z, 3);
        assert!(!report.fully_split);
        assert_eq!(report.reassemble().unwrap(), &f * &g);
        assert!(linear_factors_over(&MultiPoly::zero(&f3), 10).is_err());
        let big = make_field(2, 10).unwrap();
        assert!(matches!(
            linear_factors_over(&MultiPoly::var(&big, Var::Z), DEFAULT_FACTOR_CEILING),
            Err(Error::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn fact_eq1_small_cases() {
        for (p, r, count) in [(2, 2, 2), (3, 1, 1), (5, 1, 3)] {
            let v = verify_fact_eq1(p, r, DEFAULT_FACTOR_CEILING).unwrap();
            assert!(v.holds, "p={p} r={r}");
            assert_eq!(v.report.factor_count(), count);
            assert_eq!(v.expected_factor_count, count as u64);
        }
    }

    #[test]
    fn fact_eq2_small_cases() {
        for (p, r, count) in [(2, 1, 1), (3, 1, 4), (2, 2, 9)] {
            let v = verify_fact_eq2(p, r, DEFAULT_FACTOR_CEILING).unwrap();
            assert!(v.holds, "p={p} r={r}");
            assert_eq!(v.report.factor_count(), count);
        }
    }

    #[test]
    fn divisibility_examples() {
        let f2 = make_field(2, 1).unwrap();
        let small = t_poly(&f2, &pair(3, 1)).unwrap();
        let big = t_poly(&f2, &pair(15, 3)).unwrap();
        assert!(divides(&small, &big));
        assert!(divides(&small, &small));
        // h_2 = (X+Y+Z)^2 + XY + XZ + YZ over F_2; the remainder survives
        let h2 = complete_homogeneous(&f2, 2);
        assert!(!divides(&small, &h2));
        assert!(!divides(&MultiPoly::zero(&f2), &small));
    }

    #[test]
    fn signatures_over_f7() {
        let f7 = make_field(7, 1).unwrap();
        for (a, b) in [(5, 2), (5, 3)] {
            let ws = signature_witness(&f7, &pair(a, b)).unwrap();
            assert!(!ws.is_empty());
            assert!(ws.iter().all(|w| w.verdict), "A={a} B={b}: {ws:?}");
        }
        let ws = signature_witness(&f7, &pair(5, 3)).unwrap();
        let lower: Vec<_> = ws.iter().filter(|w| w.kind == SignatureKind::Lower).collect();
        let upper: Vec<_> = ws.iter().filter(|w| w.kind == SignatureKind::Upper).collect();
        // θ² = 1, θ ≠ 1: only θ = 6; ζ³ = 1, ζ ≠ 1: ζ ∈ {2, 4}
        assert_eq!(lower.len(), 1);
        assert_eq!(lower[0].root, f7.from_int(6));
        assert_eq!(lower[0].length, 3);
        assert_eq!(upper.len(), 2);
        assert_eq!(upper[0].length, 2);
    }

    #[test]
    fn signature_refusals() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(signature_witness(&f7, &pair(4, 2)).unwrap_err(), Error::CaseTwoPair);
        assert!(matches!(
            signature_witness(&f7, &pair(7, 2)).unwrap_err(),
            Error::FieldTooSmall { .. }
        ));
        assert!(matches!(
            signature_witness(&Rationals, &pair(5, 2)).unwrap_err(),
            Error::FieldTooSmall { .. }
        ));
        let f3 = make_field(3, 2).unwrap();
        assert!(matches!(
            signature_witness(&f3, &pair(5, 2)).unwrap_err(),
            Error::Hypothesis(_)
        ));
    }

    #[test]
    fn eisenstein_examples() {
        let f3 = make_field(3, 1).unwrap();
        let xy = LinearForm::new(f3.one(), f3.from_int(-1));
        let t = t_poly(&f3, &pair(4, 1)).unwrap();
        let v = eisenstein_like_check(&t, &xy).unwrap();
        assert_eq!(v.constant_power, Some(2));
        assert!(!v.prime_divides_linear_coefficient);
        assert!(v.irreducible);

        let f4 = make_field(2, 2).unwrap();
        let xy4 = LinearForm::new(f4.one(), f4.from_int(-1));
        let t = t_poly(&f4, &pair(5, 1)).unwrap();
        assert!(eisenstein_like_check(&t, &xy4).unwrap().irreducible);

        let q = Rationals;
        let xyq = LinearForm::new(q.one(), q.from_int(-1));
        let f = MultiPoly::parse(&q, "Z^2 - X*Z - Y*Z + X*Y").unwrap();
        let v = eisenstein_like_check(&f, &xyq).unwrap();
        assert_eq!(v.constant_power, None);
        assert!(!v.irreducible);
        let inhomogeneous = MultiPoly::parse(&q, "Z^2 + X").unwrap();
        assert_eq!(eisenstein_like_check(&inhomogeneous, &xyq), Err(Error::NotHomogeneous));
    }

    #[test]
    fn singular_points() {
        let f2 = make_field(2, 1).unwrap();
        let t = t_poly(&f2, &pair(5, 1)).unwrap();
        let ones = [f2.one(), f2.one(), f2.one()];
        let rep = singular_point_probe(&t, &ones).unwrap();
        assert!(rep.singular);

        let q = Rationals;
        let v = vandermonde(&q, 1).unwrap();
        let rep = singular_point_probe(&v, &[q.one(), q.one(), q.one()]).unwrap();
        // V vanishes to second order along X = Y = Z
        assert!(rep.singular);
        let rep = singular_point_probe(&v, &[q.from_int(1), q.from_int(2), q.from_int(3)]).unwrap();
        assert!(!rep.singular);
        assert!(!rep.vanishing[0]);
        assert_eq!(
            singular_point_probe(&v, &[q.zero(), q.zero(), q.zero()]).unwrap_err(),
            Error::ZeroPoint
        );
    }

    #[test]
    fn gradient_identity() {
        let f7 = make_field(7, 1).unwrap();
        let g = grad_eval_identity(&f7, 4, &f7.from_int(2), &f7.from_int(4)).unwrap();
        // ∂Z h_2 = X + Y + 2Z at (2, 4, 1) is 8 = 1, and 3 / ((-1)(-3)) = 1
        assert_eq!(g.lhs, f7.one());
        assert_eq!(g.rhs, f7.one());
        assert!(g.holds);
        for psi in 0..7 {
            assert!(grad_eval_identity(&f7, 3, &f7.from_int(6), &f7.from_int(psi)).is_err());
        }
        assert!(grad_eval_identity(&Rationals, 4, &Rationals.from_int(-1), &Rationals.one()).is_err());
    }
}
