//! Graph indices: closed-form evaluation on NSGs ([`fast`]) and reference
//! definitions on arbitrary graphs ([`oracle`]).

pub mod fast;
pub mod oracle;

use std::fmt;

/// The eight indices (plus the edge count they start from) of one graph.
///
/// Distance-based indices are `None` when the graph is disconnected.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphIndices {
    pub edges: u64,
    pub entropy: f64,
    pub randic: f64,
    pub wiener: Option<u128>,
    pub szeged: Option<u128>,
    pub copi: Option<u128>,
    pub estrada: f64,
    pub gutman: f64,
    pub resolvent: f64,
}

impl GraphIndices {
    pub const NAMES: [&'static str; 9] = [
        "edges",
        "entropy",
        "randic",
        "wiener",
        "szeged",
        "copi",
        "estrada",
        "gutman",
        "resolvent",
    ];

    /// Values at full precision, in [`Self::NAMES`] order. Missing values are
    /// written as `NA`.
    pub fn full_precision(&self) -> [String; 9] {
        self.render(|x| format!("{x}"))
    }

    /// Values rounded to `digits` significant figures; integers stay exact.
    pub fn significant(&self, digits: usize) -> [String; 9] {
        self.render(|x| significant(x, digits))
    }

    fn render(&self, real: impl Fn(f64) -> String) -> [String; 9] {
        let int = |v: Option<u128>| v.map_or_else(|| "NA".to_string(), |v| v.to_string());
        [
            self.edges.to_string(),
            real(self.entropy),
            real(self.randic),
            int(self.wiener),
            int(self.szeged),
            int(self.copi),
            real(self.estrada),
            real(self.gutman),
            real(self.resolvent),
        ]
    }
}

impl fmt::Display for GraphIndices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in Self::NAMES.iter().zip(self.significant(4)) {
            writeln!(f, "{name}={value}")?;
        }
        Ok(())
    }
}

/// Formats `x` with `digits` significant figures, switching to scientific
/// notation from `1e6` upwards and below `1e-4`.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let exponent = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&exponent) {
        return format!("{:.*e}", digits - 1, x);
    }
    let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit (9.9996 -> 10.000)
    let rounded: f64 = s.parse().unwrap_or(x);
    let new_exponent = rounded.abs().log10().floor() as i32;
    if new_exponent != exponent && decimals > 0 {
        let decimals = decimals - 1;
        return format!("{x:.decimals$}");
    }
    s
}
