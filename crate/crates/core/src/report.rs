//! Number formatting shared by the JSON exports.
//!
//! Floats are written in fixed decimal with 15 significant digits so output
//! files can be diffed byte for byte.

use std::str::FromStr;

use serde_json::{Number, Value};

/// Fixed-decimal rendering with 15 significant digits.
pub fn sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let render = |exp: i32| {
        let decimals = (14 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    };
    let exp = x.abs().log10().floor() as i32;
    let s = render(exp);
    // rounding can carry into a new leading digit
    let digits = s
        .chars()
        .filter(char::is_ascii_digit)
        .skip_while(|&c| c == '0')
        .count();
    if digits > 15 && exp < 14 {
        render(exp + 1)
    } else {
        s
    }
}

/// JSON number carrying the [`sig15`] text verbatim; `null` if not finite.
pub fn json_num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(Number::from_str(&sig15(x)).expect("sig15 renders a valid JSON number"))
}
