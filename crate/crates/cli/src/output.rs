//! CSV assembly: deterministic number formatting, metadata headers, and the
//! output sink.
//!
//! Output is golden-file friendly: fixed column order, numbers rendered with
//! 12 significant digits, `\n`-terminated rows, and `#`-prefixed metadata
//! lines carrying the tool version and the full parameter set.

use std::io::Write;
use std::path::Path;

use crate::CliError;

/// Render with 12 significant digits; positional notation for moderate
/// exponents, scientific otherwise, trailing zeros trimmed.
pub fn sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        let prec = (11 - exp).max(0) as usize;
        trim_zeros(format!("{x:.prec$}"))
    } else {
        let s = format!("{x:.11e}");
        let (mantissa, exponent) = s.split_once('e').expect("scientific format");
        format!("{}e{exponent}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    trimmed.to_string()
}

/// A CSV document under construction.
pub struct Csv {
    text: String,
}

impl Csv {
    /// Start a document with the tool banner and the command echo.
    pub fn new(command: &str, params: &[(&str, String)]) -> Self {
        let mut text = format!(
            "# oic {}\n# command: {command}\n",
            env!("CARGO_PKG_VERSION")
        );
        for (key, value) in params {
            text.push_str(&format!("# {key} = {value}\n"));
        }
        Csv { text }
    }

    pub fn header(&mut self, columns: &str) {
        self.text.push_str(columns);
        self.text.push('\n');
    }

    pub fn row(&mut self, fields: &[String]) {
        self.text.push_str(&fields.join(","));
        self.text.push('\n');
    }

    pub fn finish(self) -> String {
        self.text
    }
}

/// Write to the given path, or to stdout when no path is set.
pub fn emit(output: Option<&Path>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::internal(format!("cannot write to stdout: {e}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::sig;

    #[test]
    fn significant_digit_rendering() {
        assert_eq!(sig(0.0), "0");
        assert_eq!(sig(1.0), "1");
        assert_eq!(sig(2.0), "2");
        assert_eq!(sig(0.5), "0.5");
        assert_eq!(sig(-3.25), "-3.25");
        assert_eq!(sig(100.0), "100");
        assert_eq!(sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig(2f64.sqrt()), "1.41421356237");
        assert_eq!(sig(1e-7), "1e-7");
        assert_eq!(sig(-1.5e15), "-1.5e15");
        assert_eq!(sig(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn twelve_digits_round_trip_closely() {
        for &x in &[std::f64::consts::PI, 12345.6789012345, 9.87654321e-3] {
            let back: f64 = sig(x).parse().unwrap();
            assert!((back - x).abs() <= 1e-11 * x.abs(), "{x} -> {}", sig(x));
        }
    }
}
