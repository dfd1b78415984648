//! Per-genus output rows: `genus, n_g, n_g / n_{g-1}`.

use crate::counter::{Counter, Counts};

/// Digits kept after the decimal point of a ratio.
pub const RATIO_DIGITS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub genus: u32,
    pub count: u128,
    /// `count / previous count`, truncated to [`RATIO_DIGITS`] decimals.
    /// Empty for genus 0.
    pub ratio: String,
}

/// `numerator / denominator` with exactly [`RATIO_DIGITS`] decimals,
/// truncated toward zero (23/12 gives "1.91666"). Empty when the
/// denominator is zero.
pub fn render_ratio(numerator: u128, denominator: u128) -> String {
    if denominator == 0 {
        return String::new();
    }
    let mut out = format!("{}.", numerator / denominator);
    let mut rem = numerator % denominator;
    for _ in 0..RATIO_DIGITS {
        // rem < denominator, so this only overflows for denominators
        // beyond u128::MAX / 10.
        let scaled = rem
            .checked_mul(10)
            .expect("denominator too large to render");
        out.push(char::from(b'0' + (scaled / denominator) as u8));
        rem = scaled % denominator;
    }
    out
}

/// One record per genus.
pub fn records<C: Counter>(counts: &Counts<C>) -> Vec<OutputRecord> {
    let values: Vec<u128> = counts
        .as_slice()
        .iter()
        .map(|n| n.to_u128().expect("counter fits in u128"))
        .collect();
    values
        .iter()
        .enumerate()
        .map(|(g, &count)| OutputRecord {
            genus: g as u32,
            count,
            ratio: if g == 0 {
                String::new()
            } else {
                render_ratio(count, values[g - 1])
            },
        })
        .collect()
}
