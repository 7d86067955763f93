//! Report assembly and decimal formatting.
//!
//! Text mode is byte-deterministic for a given argv: no timestamps, no
//! timings. JSON mode emits one object per result line plus a final meta
//! line whose timing field is explicitly nondeterministic.

use periodlab_core::complex::Complex;
use periodlab_core::error::{Error, Result};
use periodlab_core::real::Real;
use serde_json::{Value, json};

/// Correctly rounded decimal with an explicit error annotation:
/// "3.141592654 ± 10^-10", or "0.33333 ± 0 (exact)" for exact sources.
pub fn format_real(x: &Real, digits: usize) -> Result<String> {
    if digits == 0 {
        return Err(Error::DomainError("digits must be >= 1".into()));
    }
    let (err_str, err_pow10) = match x.error_exp() {
        None => ("± 0 (exact)".to_string(), None),
        Some(e) => {
            let k = (e as f64 * std::f64::consts::LOG10_2).ceil() as i64;
            (format!("± 10^{k}"), Some(k))
        }
    };
    let (digits_str, e10, neg) = x.decimal_digits(digits)?;
    if let Some(k) = err_pow10 {
        // displayed digits must be meaningful: error below the last digit
        if k > e10 + 1 - digits as i64 {
            return Err(Error::InsufficientPrecision(format!(
                "value certified to ~10^{k} cannot support {digits} digits"
            )));
        }
    }
    Ok(format!("{} {}", render_decimal(&digits_str, e10, neg), err_str))
}

/// Place the decimal point (plain notation within a reasonable exponent
/// window, scientific outside it).
fn render_decimal(digits: &str, e10: i64, neg: bool) -> String {
    let sign = if neg { "-" } else { "" };
    let n = digits.len() as i64;
    if e10 >= 0 && e10 < n {
        let split = (e10 + 1) as usize;
        if split == digits.len() {
            format!("{sign}{digits}")
        } else {
            format!("{sign}{}.{}", &digits[..split], &digits[split..])
        }
    } else if (-6..0).contains(&e10) {
        let zeros = "0".repeat((-e10 - 1) as usize);
        format!("{sign}0.{zeros}{digits}")
    } else {
        let head = &digits[..1];
        let tail = &digits[1..];
        if tail.is_empty() {
            format!("{sign}{head}e{e10}")
        } else {
            format!("{sign}{head}.{tail}e{e10}")
        }
    }
}

pub fn format_complex(z: &Complex, digits: usize) -> Result<String> {
    let re = format_real(&z.re, digits)?;
    let im = format_real(&z.im, digits)?;
    Ok(format!("({re}) + ({im})·i"))
}

/// One command run's worth of output.
pub struct Report {
    pub command_echo: String,
    pub digits: usize,
    pub bits: usize,
    lines: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command_echo: String, digits: usize, bits: usize) -> Self {
        Report { command_echo, digits, bits, lines: Vec::new() }
    }

    /// Add a result: its text rendering and its JSON object.
    pub fn push(&mut self, text: impl Into<String>, json: Value) {
        self.lines.push((text.into(), json));
    }

    pub fn push_real(&mut self, label: &str, x: &Real, digits: usize) -> Result<()> {
        let rendered = format_real(x, digits)?;
        let (d, e10, neg) = x.decimal_digits(digits)?;
        self.push(
            format!("{label} = {rendered}"),
            json!({
                "kind": "value",
                "label": label,
                "decimal": render_decimal(&d, e10, neg),
                "error_exp": x.error_exp(),
                "digits": digits,
                "exact": x.is_exact(),
                "status": "ok",
            }),
        );
        Ok(())
    }

    pub fn push_complex(&mut self, label: &str, z: &Complex, digits: usize) -> Result<()> {
        let rendered = format_complex(z, digits)?;
        let (dr, er, nr) = z.re.decimal_digits(digits)?;
        let (di, ei, ni) = z.im.decimal_digits(digits)?;
        self.push(
            format!("{label} = {rendered}"),
            json!({
                "kind": "complex_value",
                "label": label,
                "re": render_decimal(&dr, er, nr),
                "im": render_decimal(&di, ei, ni),
                "error_exp_re": z.re.error_exp(),
                "error_exp_im": z.im.error_exp(),
                "digits": digits,
                "status": "ok",
            }),
        );
        Ok(())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command_echo));
        out.push_str(&format!("precision: {} digits ({} bits)\n", self.digits, self.bits));
        for (text, _) in &self.lines {
            out.push_str(text);
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self, timing_ms: u128, cache_note: &str) -> String {
        let mut out = String::new();
        for (_, value) in &self.lines {
            let mut v = value.clone();
            if let Value::Object(map) = &mut v {
                map.insert("command".into(), Value::String(self.command_echo.clone()));
            }
            out.push_str(&serde_json::to_string(&v).unwrap());
            out.push('\n');
        }
        let meta = json!({
            "kind": "meta",
            "command": self.command_echo,
            "digits": self.digits,
            "bits": self.bits,
            "timing_ms": timing_ms,
            "cache": cache_note,
            "nondeterministic": ["timing_ms", "cache"],
        });
        out.push_str(&serde_json::to_string(&meta).unwrap());
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use periodlab_core::periods::compute_pi;
    use periodlab_core::rational::Rational;

    #[test]
    fn pi_at_ten_digits() {
        // rounding of ...5897 at the cut, annotation from certified error
        let pi = compute_pi(periodlab_core::bits_for_digits(10));
        let s = format_real(&pi, 10).unwrap();
        assert_eq!(s, "3.141592654 ± 10^-10");
    }

    #[test]
    fn exact_rational_marked_exact() {
        let third = Rational::new(1, 3).unwrap().to_real(200);
        // 1/3 is not dyadic: carries an error bound
        let s = format_real(&third, 5).unwrap();
        assert!(s.starts_with("0.33333 ± 10^-"), "{s}");
        let half = Rational::new(1, 2).unwrap().to_real(200);
        let s = format_real(&half, 5).unwrap();
        assert_eq!(s, "0.50000 ± 0 (exact)");
    }

    #[test]
    fn insufficient_precision_rejected() {
        let pi = compute_pi(periodlab_core::bits_for_digits(10));
        assert!(matches!(
            format_real(&pi, 500),
            Err(Error::InsufficientPrecision(_))
        ));
    }

    #[test]
    fn scientific_rendering() {
        assert_eq!(render_decimal("12345", 9, false), "1.2345e9");
        assert_eq!(render_decimal("12345", -7, true), "-1.2345e-7");
        assert_eq!(render_decimal("12345", -1, false), "0.12345");
        assert_eq!(render_decimal("12345", 4, false), "12345");
    }
}
