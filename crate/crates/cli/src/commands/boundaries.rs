use hardy_rellich::{regime_boundaries, Error, RegimeBoundaries};
use serde::Serialize;

use crate::args::Output;
use crate::error::CliResult;
use crate::format::{csv_text, emit, json, sig};

pub const BOUNDARY_DIGITS: usize = 12;

fn table(b: &RegimeBoundaries<f64>) -> [(&'static str, &'static str, f64); 5] {
    [
        ("integrability", "2 - N", b.integrability),
        ("degenerate_weight", "4 - N", b.degenerate_weight),
        ("lower_middle", "2 - sqrt((N-1)^2 + 1)", b.lower_middle),
        ("upper_middle", "2 + sqrt((N-1)^2 + 1)", b.upper_middle),
        ("prior_threshold", "(N + 4 - 2 sqrt(N^2 - N + 1))/3", b.prior_threshold),
    ]
}

#[derive(Serialize)]
struct BoundariesDoc {
    #[serde(rename = "N")]
    n: u32,
    #[serde(flatten)]
    boundaries: RegimeBoundaries<f64>,
}

pub fn boundaries(n: u32, output: &Output) -> CliResult<()> {
    if n < 1 {
        return Err(Error::DimensionTooSmall { n }.into());
    }
    let b = regime_boundaries::<f64>(n);
    let text = if output.json {
        json("boundaries", &BoundariesDoc { n, boundaries: b })?
    } else if output.csv {
        let rows: Vec<Vec<String>> = table(&b)
            .iter()
            .map(|(name, formula, v)| {
                vec![name.to_string(), formula.to_string(), sig(*v, BOUNDARY_DIGITS)]
            })
            .collect();
        csv_text(&["name", "formula", "value"], &rows)?
    } else {
        let mut s = format!("regime boundaries for N = {n}\n");
        for (name, formula, v) in table(&b) {
            s.push_str(&format!(
                "  {name:<18} {formula:<32} {}\n",
                sig(v, BOUNDARY_DIGITS)
            ));
        }
        s
    };
    emit(output.out.as_deref(), &text)
}
