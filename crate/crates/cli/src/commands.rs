use newton_schur::factor::{
    eisenstein_like_check, linear_factors_over, signature_witness, verify_fact_eq1,
    verify_fact_eq2, FactorReport, DEFAULT_FACTOR_CEILING,
};
use newton_schur::newton::{
    build_alternative_pair, degree_of_extension, verify_newton_identity, DegreeMode,
    IdentityMode, TowerParams, DEFAULT_ORACLE_CEILING,
};
use newton_schur::schur::{
    complete_homogeneous, r_poly, schur_bialternant, t_poly, vandermonde, ExponentPair,
    Partition3,
};
use newton_schur::{make_field, Error, Field, GaloisField, LinearForm, MultiPoly, Rationals, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{FieldArgs, IdentityModeArg, ModeArg, Which};
use crate::output::{Record, Verdict};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

pub type CmdResult = Result<Vec<Record>, CliError>;

/// Ceiling overruns become a skip record; other errors propagate.
pub fn skip_on_ceiling(res: CmdResult, fields: Value) -> CmdResult {
    match res {
        Err(CliError::Lib(e @ Error::CeilingExceeded { .. })) => {
            let Value::Object(m) = fields else { unreachable!() };
            Ok(vec![Record::skip(e.to_string(), m)])
        }
        other => other,
    }
}

pub enum AnyField {
    Q(Rationals),
    F(GaloisField),
}

pub fn field_of(args: &FieldArgs) -> Result<AnyField, CliError> {
    if args.characteristic == 0 {
        if args.r != 1 {
            return Err(CliError::Usage("--r only applies to a prime characteristic".into()));
        }
        return Ok(AnyField::Q(Rationals));
    }
    Ok(AnyField::F(make_field(args.characteristic, args.r)?))
}

macro_rules! with_field {
    ($args:expr, |$f:ident| $body:expr) => {
        match field_of($args)? {
            AnyField::Q(q) => {
                let $f = &q;
                $body
            }
            AnyField::F(g) => {
                let $f = &g;
                $body
            }
        }
    };
}

/// Uniform random field elements for sampled checks.
trait Sample: Field {
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
}

impl Sample for Rationals {
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem {
        self.from_int(rng.gen_range(-50..=50))
    }
}

impl Sample for GaloisField {
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem {
        self.element_at(rng.gen_range(0..self.order()))
    }
}

fn pair(a: u32, b: u32) -> Result<ExponentPair, CliError> {
    ExponentPair::new(a, b).map_err(|e| CliError::Usage(e.to_string()))
}

fn poly_record<K: Field>(poly: &MultiPoly<K>, extra: Value) -> Record {
    let mut fields = json!({
        "field": poly.field().describe(),
        "poly": poly.to_string(),
        "terms": poly.to_json(),
    });
    if let (Value::Object(m), Value::Object(x)) = (&mut fields, extra) {
        m.extend(x);
    }
    Record::new(Verdict::Info, poly.to_string(), fields)
}

pub fn tpoly(a: u32, b: u32, field: &FieldArgs) -> CmdResult {
    let e = pair(a, b)?;
    with_field!(field, |f| {
        let t = t_poly(f, &e)?;
        Ok(vec![poly_record(&t, json!({"A": a, "B": b, "d": e.d}))])
    })
}

pub fn rpoly(a: u32, b: u32, field: &FieldArgs) -> CmdResult {
    let e = pair(a, b)?;
    with_field!(field, |f| {
        let r = r_poly(f, &e)?;
        Ok(vec![poly_record(&r, json!({"A": a, "B": b, "d": e.d}))])
    })
}

pub fn schur(parts: &[u32], d: u32, field: &FieldArgs) -> CmdResult {
    let parts: [u32; 3] = parts
        .try_into()
        .map_err(|_| CliError::Usage("--parts needs exactly three values".into()))?;
    let lambda = Partition3::new(parts).map_err(|e| CliError::Usage(e.to_string()))?;
    if d == 0 {
        return Err(CliError::Usage("--d must be at least 1".into()));
    }
    with_field!(field, |f| {
        let s = schur_bialternant(f, &lambda, d)?;
        Ok(vec![poly_record(&s, json!({"partition": parts, "d": d}))])
    })
}

fn factor_lines(report: &FactorReport) -> Vec<String> {
    let f = &report.field;
    report
        .linear_factors
        .iter()
        .map(|lf| {
            format!(
                "  Z - ({})*X - ({})*Y  multiplicity={}",
                f.format_elem(&lf.alpha),
                f.format_elem(&lf.beta),
                lf.multiplicity
            )
        })
        .collect()
}

fn plural(n: u64, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

pub fn factor(a: u32, b: u32, p: u64, r: u32, ceiling: Option<u64>) -> CmdResult {
    let e = pair(a, b)?;
    let field = make_field(p, r)?;
    let t = t_poly(&field, &e)?;
    let mut report = linear_factors_over(&t, ceiling.unwrap_or(DEFAULT_FACTOR_CEILING))?;
    report.input = Some(e);
    let mut lines = vec![format!(
        "T_{{{a},{b}}} over {}: {}, residual degree in Z {}, fully split {}",
        field.describe(),
        plural(report.factor_count() as u64, "linear factor", "linear factors"),
        report.residual_degree_in_z,
        report.fully_split
    )];
    lines.extend(factor_lines(&report));
    Ok(vec![Record::new(Verdict::Info, lines.join("\n"), report.to_json())])
}

pub fn signature(a: u32, b: u32, field: &FieldArgs) -> CmdResult {
    let e = pair(a, b)?;
    with_field!(field, |f| {
        let ws = signature_witness(f, &e)?;
        let ok = !ws.is_empty() && ws.iter().all(|w| w.verdict);
        let verdict = Verdict::from_bool(ok);
        let mut lines = vec![format!(
            "signature A={a} B={b} over {}: {} ({})",
            f.describe(),
            verdict.as_str(),
            plural(ws.len() as u64, "witness", "witnesses")
        )];
        for w in &ws {
            let checks: Vec<String> = w.checks.iter().map(|m| m.to_string()).collect();
            lines.push(format!(
                "  {} length={} root={} multiplicities=[{}] {}",
                w.kind.as_str(),
                w.length,
                f.format_elem(&w.root),
                checks.join(", "),
                Verdict::from_bool(w.verdict).as_str()
            ));
        }
        let fields = json!({
            "criterion": "signature",
            "A": a, "B": b, "d": e.d,
            "field": f.describe(),
            "irreducible": ok,
            "witnesses": ws.iter().map(|w| w.to_json(f)).collect::<Vec<_>>(),
        });
        Ok(vec![Record::new(verdict, lines.join("\n"), fields)])
    })
}

pub fn verify_fact(which: Which, p: u64, r: u32, ceiling: Option<u64>) -> CmdResult {
    let ceiling = ceiling.unwrap_or(DEFAULT_FACTOR_CEILING);
    let (name, v) = match which {
        Which::Eq1 => ("eq1", verify_fact_eq1(p, r, ceiling)?),
        Which::Eq2 => ("eq2", verify_fact_eq2(p, r, ceiling)?),
    };
    let verdict = Verdict::from_bool(v.holds);
    let mut lines = vec![format!(
        "verify-fact {name} p={p} r={r}: {}, {}",
        verdict.as_str(),
        plural(v.report.factor_count() as u64, "factor", "factors")
    )];
    lines.extend(factor_lines(&v.report));
    let mut fields = v.to_json();
    fields["which"] = json!(name);
    fields["p"] = json!(p);
    fields["r"] = json!(r);
    Ok(vec![Record::new(verdict, lines.join("\n"), fields)])
}

pub fn counterexample(p: u64, ms: &[u64], mode: IdentityModeArg) -> CmdResult {
    let pair = build_alternative_pair(p)?;
    let f = &pair.ambient;
    let ms: Vec<u64> = if ms.is_empty() { vec![1, p + 1] } else { ms.to_vec() };
    let eta = pair.eta.map(|e| format!(" eta={e}")).unwrap_or_default();
    let mut out = vec![Record::new(
        Verdict::Info,
        format!(
            "p={p}{eta} alpha={} in {}\n  z = {}\n  w = {}",
            f.format_elem(&pair.alpha),
            f.describe(),
            pair.z_poly(),
            pair.w_poly()
        ),
        pair.to_json(),
    )];
    for m in ms {
        let direct = matches!(mode, IdentityModeArg::Direct | IdentityModeArg::Both)
            .then(|| verify_newton_identity(&pair, m, IdentityMode::Direct))
            .transpose()?;
        // in `both` mode an exponent without the shortcut shape is checked directly only
        let shortcut = match (mode, verify_newton_identity(&pair, m, IdentityMode::FrobeniusShortcut)) {
            (IdentityModeArg::Direct, _) => None,
            (IdentityModeArg::Both, Err(Error::Precondition(_))) => None,
            (_, res) => Some(res?),
        };
        let holds = direct.or(shortcut).expect("at least one mode");
        let agree = direct.zip(shortcut).map(|(d, s)| d == s);
        let verdict = Verdict::from_bool(holds && agree != Some(false));
        let mut text = format!("m={m}: z^m + w^m = x^m + y^m is {holds}");
        if let Some(a) = agree {
            text.push_str(&format!(" (modes agree={a})"));
        }
        out.push(Record::new(
            verdict,
            text,
            json!({"p": p, "m": m, "direct": direct, "shortcut": shortcut, "holds": holds}),
        ));
    }
    Ok(out)
}

pub fn degree(p: u64, r: u32, s: u32, mode: ModeArg, ceiling: Option<u64>) -> CmdResult {
    let t = TowerParams::new(p, r, s).map_err(|e| CliError::Usage(e.to_string()))?;
    let mode = match mode {
        ModeArg::Formula => DegreeMode::Formula,
        ModeArg::Oracle => DegreeMode::Oracle,
        ModeArg::Both => DegreeMode::Both,
    };
    let rep = degree_of_extension(&t, mode, ceiling.unwrap_or(DEFAULT_ORACLE_CEILING))?;
    let verdict = match rep.agree {
        Some(a) => Verdict::from_bool(a),
        None => Verdict::Info,
    };
    let mut fields = serde_json::to_value(&rep).expect("plain data");
    if let Value::Object(m) = &mut fields {
        m.remove("params");
        m.extend([
            ("p".to_string(), json!(t.p)),
            ("r".to_string(), json!(t.r)),
            ("s".to_string(), json!(t.s)),
            ("m".to_string(), json!(t.m)),
        ]);
    }
    Ok(vec![Record::new(verdict, rep.to_string(), fields)])
}

pub fn eisenstein(p: u64, r: u32) -> CmdResult {
    let field = make_field(p, 1)?;
    let q = p
        .checked_pow(r)
        .and_then(|q| u32::try_from(q).ok())
        .ok_or_else(|| CliError::Usage(format!("{p}^{r} is too large")))?;
    let t = t_poly(&field, &pair(q + 1, 1)?)?;
    let form = LinearForm::new(field.one(), field.from_int(-1));
    let v = eisenstein_like_check(&t, &form)?;
    let mut fields = v.to_json();
    fields["p"] = json!(p);
    fields["r"] = json!(r);
    Ok(vec![Record::new(
        Verdict::from_bool(v.irreducible),
        format!(
            "T_{{{},1}} over F_{p} against X - Y: constant power {}, irreducible {}",
            q + 1,
            v.constant_power.map_or("none".to_string(), |k| k.to_string()),
            v.irreducible
        ),
        fields,
    )])
}

fn identity_checks<K: Sample>(f: &K, k_max: u32, samples: u32, seed: u64) -> CmdResult {
    if k_max < 2 {
        return Err(CliError::Usage("--k-max must be at least 2".into()));
    }
    let mut out = Vec::new();
    for k in 2..=k_max {
        let t = t_poly(f, &pair(k, 1)?)?;
        let h = t == complete_homogeneous(f, k - 2);
        let derivative = if k >= 3 {
            let div = Var::ALL
                .iter()
                .map(|&v| t.partial_derivative(v))
                .try_fold(MultiPoly::zero(f), |acc, d| acc.try_add(&d))?;
            let lower = t_poly(f, &pair(k - 1, 1)?)?.scalar_mul(&f.from_int(k as i64));
            Some(div == lower)
        } else {
            None
        };
        let mut pairs_ok = true;
        for b in 1..k {
            let e = pair(k, b)?;
            let t = t_poly(f, &e)?;
            let v = vandermonde(f, e.d)?;
            let by_schur = schur_bialternant(f, &e.partition(), e.d)?;
            pairs_ok &= t.try_mul(&v)? == r_poly(f, &e)? && t == by_schur;
        }
        let ok = h && derivative != Some(false) && pairs_ok;
        out.push(Record::new(
            Verdict::from_bool(ok),
            format!(
                "k={k}: T_{{k,1}} = h_{{k-2}} {h}, divergence {}, T*V = R and bialternant for A={k} {pairs_ok}",
                derivative.map_or("n/a".to_string(), |d| d.to_string())
            ),
            json!({"k": k, "complete_homogeneous": h, "divergence": derivative, "pairs": pairs_ok}),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let a = rng.gen_range(2..=k_max);
        let b = rng.gen_range(1..a);
        let e = pair(a, b)?;
        let point = [f.sample(&mut rng), f.sample(&mut rng), f.sample(&mut rng)];
        let lhs = f.mul(&t_poly(f, &e)?.evaluate(&point), &vandermonde(f, e.d)?.evaluate(&point));
        let rhs = r_poly(f, &e)?.evaluate(&point);
        let shown: Vec<String> = point.iter().map(|x| f.format_elem(x)).collect();
        out.push(Record::new(
            Verdict::from_bool(lhs == rhs),
            format!("sample {i}: A={a} B={b} at ({}): T*V = R {}", shown.join(", "), lhs == rhs),
            json!({"sample": i, "A": a, "B": b, "point": shown, "holds": lhs == rhs}),
        ));
    }
    Ok(out)
}

pub fn identity(k_max: u32, samples: u32, seed: u64, field: &FieldArgs) -> CmdResult {
    with_field!(field, |f| identity_checks(f, k_max, samples, seed))
}
