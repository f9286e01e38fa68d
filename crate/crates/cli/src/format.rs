use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::CliResult;

pub const SCHEMA_VERSION: u32 = 1;
pub const CSV_DIGITS: usize = 15;

/// `x` with `digits` significant digits in the style of C's `%g`.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits.saturating_sub(1), x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{exp}", trim_zeros(mantissa))
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    data: &'a T,
}

pub fn json<T: Serialize>(command: &str, data: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(&Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        data,
    })?;
    s.push('\n');
    Ok(s)
}

/// CSV text with LF line endings.
pub fn csv_text(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("CSV fields are UTF-8"))
}

pub fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

pub fn opt<T, F: Fn(&T) -> String>(x: Option<T>, f: F) -> String {
    x.as_ref().map(f).unwrap_or_default()
}
