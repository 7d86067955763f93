//! Parsers for value expressions and period-class specs.
//!
//! Value grammar (for relation hunting):
//!   expr   := term ('*' term)*
//!   term   := atom ('^' uint)?
//!   atom   := 'pi' | 'phi' | name '(' args ')' | rational
//!   name   := zeta | mzv | log | gamma | sqrt
//! zeta with several arguments is the multiple zeta value.

use periodlab_core::error::{Error, Result};
use periodlab_core::galois::PeriodSpec;
use periodlab_core::mzv::Composition;
use periodlab_core::periods::EllipticCurveQ;
use periodlab_core::rational::Rational;
use periodlab_core::relations::NamedValue;

/// Parse a comma-separated list of value expressions. Top-level commas
/// only: parentheses nest.
pub fn parse_value_list(s: &str) -> Result<Vec<NamedValue>> {
    split_top_level(s)?
        .into_iter()
        .map(|part| parse_value_expr(&part))
        .collect()
}

pub fn split_top_level(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur = String::new();
            }
            _ => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    if out.is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    Ok(out)
}

/// Parse one value expression into a recomputable named source.
pub fn parse_value_expr(s: &str) -> Result<NamedValue> {
    let factors = split_on_top_level_char(s, '*')?;
    let mut acc: Option<NamedValue> = None;
    for f in factors {
        let term = parse_term(f.trim())?;
        acc = Some(match acc {
            None => term,
            Some(prev) => prev.product(&term),
        });
    }
    acc.ok_or_else(|| Error::Parse(format!("empty expression `{s}`")))
}

fn split_on_top_level_char(s: &str, sep: char) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                cur.push(c);
            }
            c if c == sep && depth == 0 => {
                out.push(cur.clone());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    out.push(cur);
    Ok(out)
}

fn parse_term(s: &str) -> Result<NamedValue> {
    if let Some((base, exp)) = s.rsplit_once('^') {
        // a '^' inside parentheses is not supported by the grammar
        if !base.contains('(') || base.matches('(').count() == base.matches(')').count() {
            let e: u32 = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{exp}`")))?;
            return Ok(parse_atom(base.trim())?.power(e));
        }
    }
    parse_atom(s)
}

fn parse_atom(s: &str) -> Result<NamedValue> {
    match s {
        "pi" => {
            return Ok(NamedValue::new("pi", |bits| {
                Ok(periodlab_core::periods::compute_pi(bits))
            }));
        }
        "phi" => {
            return Ok(NamedValue::new("phi", |bits| {
                let r = periodlab_core::real::Real::from_integer(5, bits + 16).try_sqrt()?;
                Ok((&r + &periodlab_core::real::Real::one(bits + 16)).mul_pow2(-1))
            }));
        }
        _ => {}
    }
    if let Some(open) = s.find('(') {
        let name = s[..open].trim();
        let rest = &s[open..];
        if !rest.ends_with(')') {
            return Err(Error::Parse(format!("expected closing parenthesis in `{s}`")));
        }
        let inner = &rest[1..rest.len() - 1];
        let args = split_top_level(inner)?;
        return build_function(name, &args, s);
    }
    // bare rational
    let r: Rational = s
        .parse()
        .map_err(|_| Error::Parse(format!("unrecognized value `{s}`")))?;
    Ok(NamedValue::from_rational(s, r))
}

fn build_function(name: &str, args: &[String], display: &str) -> Result<NamedValue> {
    let label = display.to_string();
    match name {
        "zeta" | "mzv" => {
            if args.len() == 1 && name == "zeta" {
                let s: i64 = args[0]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad zeta argument `{}`", args[0])))?;
                Ok(NamedValue::new(label, move |bits| {
                    periodlab_core::periods::compute_zeta(s, bits)
                }))
            } else {
                let comp = Composition::parse(&args.join(","))?;
                Ok(NamedValue::new(label, move |bits| {
                    periodlab_core::periods::compute_mzv(&comp, bits)
                }))
            }
        }
        "log" => {
            let q: Rational = args
                .first()
                .ok_or_else(|| Error::Parse("log needs an argument".into()))?
                .parse()?;
            Ok(NamedValue::new(label, move |bits| {
                periodlab_core::periods::compute_log_rational(&q, bits)
            }))
        }
        "gamma" => {
            let x: Rational = args
                .first()
                .ok_or_else(|| Error::Parse("gamma needs an argument".into()))?
                .parse()?;
            Ok(NamedValue::new(label, move |bits| {
                periodlab_core::periods::compute_gamma_rational(&x, bits)
            }))
        }
        "sqrt" => {
            let r: Rational = args
                .first()
                .ok_or_else(|| Error::Parse("sqrt needs an argument".into()))?
                .parse()?;
            if !r.is_positive() {
                return Err(Error::DomainError(format!("sqrt needs a positive rational, got {r}")));
            }
            Ok(NamedValue::new(label, move |bits| {
                r.to_real(bits + 16).try_sqrt()
            }))
        }
        other => Err(Error::Parse(format!("unknown function `{other}`"))),
    }
}

/// Parse a period-class spec for the galois commands.
pub fn parse_class_spec(s: &str) -> Result<PeriodSpec> {
    let s = s.trim();
    if s == "pi" {
        return Ok(PeriodSpec::Pi);
    }
    let Some(open) = s.find('(') else {
        return Err(Error::Parse(format!(
            "unrecognized class `{s}` (try pi, zeta(3), log(2), gamma(1/4), elliptic(4,0), algebraic(-2,0,1))"
        )));
    };
    if !s.ends_with(')') {
        return Err(Error::Parse(format!("expected closing parenthesis in `{s}`")));
    }
    let name = s[..open].trim();
    let args = split_top_level(&s[open + 1..s.len() - 1])?;
    let spec = match name {
        "zeta" | "mzv" => {
            if args.len() == 1 && name == "zeta" {
                let v: i64 = args[0]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad zeta argument `{}`", args[0])))?;
                PeriodSpec::ZetaInt { s: v }
            } else {
                PeriodSpec::Mzv { composition: Composition::parse(&args.join(","))? }
            }
        }
        "log" => PeriodSpec::LogRational { q: args[0].parse()? },
        "gamma" => PeriodSpec::GammaRational { x: args[0].parse()? },
        "elliptic" => {
            if args.len() != 2 {
                return Err(Error::Parse("elliptic(g2,g3) takes two rationals".into()));
            }
            PeriodSpec::EllipticPeriod {
                curve: EllipticCurveQ::new(args[0].parse()?, args[1].parse()?)?,
            }
        }
        "algebraic" => {
            let coeffs: Result<Vec<Rational>> = args.iter().map(|a| a.parse()).collect();
            PeriodSpec::AlgebraicNumber { minpoly: coeffs? }
        }
        other => return Err(Error::Parse(format!("unknown class `{other}`"))),
    };
    spec.validate()?;
    Ok(spec)
}

/// Parse orbit parameters: "2,1/3" (scalars) or "(1,0),(0,1)" (pairs).
pub fn parse_orbit_params(s: &str) -> Result<periodlab_core::galois::OrbitParams> {
    use periodlab_core::galois::OrbitParams;
    let parts = split_top_level(s)?;
    if parts.iter().all(|p| p.starts_with('(')) {
        let pairs: Result<Vec<(Rational, Rational)>> = parts
            .iter()
            .map(|p| {
                let inner = p
                    .strip_prefix('(')
                    .and_then(|x| x.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("bad pair `{p}`")))?;
                let ab: Vec<&str> = inner.split(',').collect();
                if ab.len() != 2 {
                    return Err(Error::Parse(format!("pair `{p}` needs two rationals")));
                }
                Ok((ab[0].trim().parse()?, ab[1].trim().parse()?))
            })
            .collect();
        Ok(OrbitParams::Pairs(pairs?))
    } else {
        let scalars: Result<Vec<Rational>> = parts.iter().map(|p| p.parse()).collect();
        Ok(OrbitParams::Scalars(scalars?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_expressions() {
        let vals = parse_value_list("zeta(2),pi^2").unwrap();
        assert_eq!(vals.len(), 2);
        assert_eq!(vals[0].name(), "zeta(2)");
        assert_eq!(vals[1].name(), "pi^2");
        let v = parse_value_expr("sqrt(2)*pi^2").unwrap();
        let x = v.eval(128).unwrap();
        let want = std::f64::consts::SQRT_2 * std::f64::consts::PI * std::f64::consts::PI;
        assert!((x.to_f64() - want).abs() < 1e-10);
    }

    #[test]
    fn multi_argument_zeta_is_mzv() {
        let v = parse_value_expr("zeta(2,1)").unwrap();
        let x = v.eval(140).unwrap();
        // zeta(2,1) = zeta(3) = 1.2020569...
        assert!((x.to_f64() - 1.2020569031595942).abs() < 1e-12);
    }

    #[test]
    fn class_specs() {
        assert!(matches!(parse_class_spec("pi").unwrap(), PeriodSpec::Pi));
        assert!(matches!(
            parse_class_spec("zeta(3)").unwrap(),
            PeriodSpec::ZetaInt { s: 3 }
        ));
        assert!(matches!(
            parse_class_spec("elliptic(4,0)").unwrap(),
            PeriodSpec::EllipticPeriod { .. }
        ));
        assert!(parse_class_spec("zeta(1)").is_err());
        assert!(parse_class_spec("nonsense(1)").is_err());
        assert!(parse_class_spec("elliptic(3,1)").is_err(), "singular curve");
    }

    #[test]
    fn orbit_params() {
        use periodlab_core::galois::OrbitParams;
        match parse_orbit_params("2,1/3").unwrap() {
            OrbitParams::Scalars(v) => assert_eq!(v.len(), 2),
            _ => panic!(),
        }
        match parse_orbit_params("(1,0),(0,1)").unwrap() {
            OrbitParams::Pairs(v) => assert_eq!(v.len(), 2),
            _ => panic!(),
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_value_list("").is_err());
        assert!(parse_value_expr("frob(2)").is_err());
        assert!(parse_value_expr("zeta(2").is_err());
        assert!(parse_value_expr("sqrt(-2)").is_err());
    }
}
