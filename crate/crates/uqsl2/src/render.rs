//! Text, LaTeX and JSON rendering.
//!
//! Text output round-trips through the expression parser. JSON schemas are
//! stable: scalars are `{"num": [[exp, coeff], ...], "den": [...]}` sorted by
//! exponent, monomials are `{"K": int, "c2": int, "x": [...], "h": [...],
//! "y": [...]}`, elements and tensor elements wrap their terms in a canonical
//! order, and series are lists of `[exponent, coefficient]` pairs.

use std::fmt::Write as _;

use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::pbw::{Element, PbwMonomial};
use crate::scalar::{LaurentPoly, ScalarQ};
use crate::series::{SeriesCoeff, TruncatedSeries};
use crate::tensor::TensorElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "text" => Some(Format::Text),
            "latex" => Some(Format::Latex),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

// ---- JSON ----

fn big_to_json(b: &num_bigint::BigInt) -> Value {
    let v: i64 = b
        .try_into()
        .expect("coefficient exceeds the JSON integer range");
    Value::from(v)
}

pub fn laurent_json(p: &LaurentPoly) -> Value {
    Value::Array(p.iter().map(|(e, c)| json!([e, big_to_json(c)])).collect())
}

pub fn scalar_json(s: &ScalarQ) -> Value {
    json!({ "num": laurent_json(s.num()), "den": laurent_json(s.den()) })
}

pub fn monomial_json(m: &PbwMonomial) -> Value {
    json!({
        "K": m.k_exp(),
        "c2": m.c_half(),
        "x": m.x_block(),
        "h": m.h_block(),
        "y": m.y_block(),
    })
}

pub fn element_json(e: &Element) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(m, c)| {
            let mut obj = monomial_json(m);
            obj.as_object_mut()
                .unwrap()
                .insert("coeff".into(), scalar_json(c));
            obj
        })
        .collect();
    json!({ "terms": terms })
}

pub fn tensor_json(t: &TensorElement) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .map(|((l, r), c)| {
            json!({
                "coeff": scalar_json(c),
                "left": monomial_json(l),
                "right": monomial_json(r),
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn series_json<C: SeriesCoeff>(
    s: &TruncatedSeries<C>,
    coeff_json: impl Fn(&C) -> Value,
) -> Value {
    let (lo, hi) = s.window();
    json!({
        "window": [lo, hi],
        "coeffs": s.stored().map(|(e, c)| json!([e, coeff_json(c)])).collect::<Vec<_>>(),
    })
}

// ---- LaTeX ----

pub fn laurent_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (e, c) in p.iter().rev() {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let show_coeff = !mag.is_one() || *e == 0;
        if show_coeff {
            let _ = write!(out, "{mag}");
        }
        match e {
            0 => {}
            1 => out.push('q'),
            _ => {
                let _ = write!(out, "q^{{{e}}}");
            }
        }
    }
    out
}

pub fn scalar_latex(s: &ScalarQ) -> String {
    if s.is_laurent() {
        laurent_latex(s.num())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            laurent_latex(s.num()),
            laurent_latex(s.den())
        )
    }
}

fn c_power_latex(c_half: i64) -> String {
    if c_half % 2 == 0 {
        format!("c^{{{}}}", c_half / 2)
    } else {
        format!("c^{{{c_half}/2}}")
    }
}

pub fn monomial_latex(m: &PbwMonomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut out = String::new();
    for i in m.x_block() {
        let _ = write!(out, "x_{{{i}}}");
    }
    for k in m.h_block() {
        let _ = write!(out, "h_{{{k}}}");
    }
    for p in m.y_block() {
        let _ = write!(out, "y_{{{p}}}");
    }
    match m.k_exp() {
        0 => {}
        1 => out.push('K'),
        a => {
            let _ = write!(out, "K^{{{a}}}");
        }
    }
    if m.c_half() != 0 {
        out.push_str(&c_power_latex(m.c_half()));
    }
    out
}

fn joined_latex<I: Iterator<Item = (String, String)>>(terms: I) -> String {
    // Each item is (coefficient, monomial body); the coefficient string "1"
    // is suppressed and a leading "-" folds into the separator.
    let mut out = String::new();
    let mut first = true;
    for (coeff, body) in terms {
        let (neg, coeff) = match coeff.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, coeff),
        };
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let needs_parens = coeff.contains('+') || coeff.contains(" - ");
        match (coeff.as_str(), body.as_str()) {
            ("1", "1") => out.push('1'),
            ("1", _) => out.push_str(&body),
            (_, "1") => out.push_str(&coeff),
            _ if needs_parens => {
                let _ = write!(out, "\\left({coeff}\\right){body}");
            }
            _ => {
                let _ = write!(out, "{coeff}\\,{body}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn element_latex(e: &Element) -> String {
    joined_latex(e.terms().map(|(m, c)| (scalar_latex(c), monomial_latex(m))))
}

pub fn tensor_latex(t: &TensorElement) -> String {
    joined_latex(t.terms().map(|((l, r), c)| {
        (
            scalar_latex(c),
            format!("{} \\otimes {}", monomial_latex(l), monomial_latex(r)),
        )
    }))
}

pub fn series_latex<C: SeriesCoeff>(
    s: &TruncatedSeries<C>,
    coeff_latex: impl Fn(&C) -> String,
) -> String {
    let mut out = String::new();
    let mut first = true;
    for (e, c) in s.stored() {
        if !first {
            out.push_str(" + ");
        }
        first = false;
        match e {
            0 => {
                let _ = write!(out, "\\left({}\\right)", coeff_latex(c));
            }
            _ => {
                let _ = write!(out, "\\left({}\\right)z^{{{e}}}", coeff_latex(c));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// ---- dispatch ----

pub fn render_element(e: &Element, format: Format) -> String {
    match format {
        Format::Text => e.to_string(),
        Format::Latex => element_latex(e),
        Format::Json => element_json(e).to_string(),
    }
}

pub fn render_tensor(t: &TensorElement, format: Format) -> String {
    match format {
        Format::Text => t.to_string(),
        Format::Latex => tensor_latex(t),
        Format::Json => tensor_json(t).to_string(),
    }
}

pub fn render_element_series(s: &TruncatedSeries<Element>, format: Format) -> String {
    match format {
        Format::Text => s.to_string(),
        Format::Latex => series_latex(s, element_latex),
        Format::Json => series_json(s, element_json).to_string(),
    }
}

pub fn render_scalar(s: &ScalarQ, format: Format) -> String {
    match format {
        Format::Text => s.to_string(),
        Format::Latex => scalar_latex(s),
        Format::Json => scalar_json(s).to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_eval;

    #[test]
    fn scalar_json_shape() {
        // A unit denominator is normalized into the numerator.
        let s = ScalarQ::new(
            &LaurentPoly::q_pow(2) + &LaurentPoly::one(),
            LaurentPoly::q(),
        );
        let v = scalar_json(&s);
        assert_eq!(v["num"].to_string(), "[[-1,1],[1,1]]");
        assert_eq!(v["den"].to_string(), "[[0,1]]");
        // A genuine fraction keeps both parts, exponent-sorted.
        let s = ScalarQ::new(
            LaurentPoly::one(),
            &LaurentPoly::q_pow(2) + &LaurentPoly::from_int(2),
        );
        let v = scalar_json(&s);
        assert_eq!(v["num"].to_string(), "[[0,1]]");
        assert_eq!(v["den"].to_string(), "[[0,2],[2,1]]");
    }

    #[test]
    fn element_json_shape() {
        let e = parse_eval("2*x[0]*K").unwrap();
        let v = element_json(&e);
        assert_eq!(v["terms"][0]["K"], 1);
        assert_eq!(v["terms"][0]["x"][0], 0);
        assert_eq!(v["terms"][0]["coeff"]["num"][0][1], 2);
    }

    #[test]
    fn latex_examples() {
        let e = parse_eval("psi[1]").unwrap();
        assert_eq!(element_latex(&e), "\\left(q - q^{-1}\\right)h_{1}K");
        let t = crate::morphisms::delta_seed(crate::morphisms::SeedGenerator::X0);
        assert_eq!(tensor_latex(&t), "1 \\otimes x_{0} + x_{0} \\otimes K");
    }

    #[test]
    fn empty_element_renders_zero() {
        assert_eq!(render_element(&Element::zero(), Format::Text), "0");
        assert_eq!(render_element(&Element::zero(), Format::Latex), "0");
    }
}
