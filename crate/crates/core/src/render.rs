//! LaTeX and CSV renderings of polynomials.

use num_traits::{One, Signed};

use crate::poly::{BiPoly, Rational, UniPoly};

fn latex_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        e if e < 10 => format!("{var}^{e}"),
        e => format!("{var}^{{{e}}}"),
    }
}

fn latex_sum(terms: &[(Rational, String)]) -> String {
    let mut out = String::new();
    for (idx, (c, mono)) in terms.iter().enumerate() {
        let abs = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        if mono.is_empty() {
            out.push_str(&latex_coeff(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&latex_coeff(&abs));
            }
            out.push_str(mono);
        }
    }
    out
}

fn wrap(prefix: String, inner: &[(Rational, String)]) -> String {
    if inner.is_empty() {
        return "0".into();
    }
    match (prefix.is_empty(), inner.len()) {
        (true, _) => latex_sum(inner),
        (false, 1) if inner[0].1.is_empty() && inner[0].0.is_one() => prefix,
        (false, 1) if inner[0].1.is_empty() => format!("{}{prefix}", latex_sum(inner)),
        (false, _) => format!("{prefix}({})", latex_sum(inner)),
    }
}

/// Factors out the largest common monomial, e.g. `xy^2(y^3+12xy^2+15x^2y+2x^3)`.
/// Inner terms run by increasing power of `x`.
pub fn latex_bivariate(p: &BiPoly) -> String {
    let g = p.min_monomial();
    let mut inner: Vec<(u32, u32, Rational)> = p
        .terms()
        .map(|(m, c)| (m.x - g.x, m.y - g.y, c.clone()))
        .collect();
    inner.sort_by_key(|&(i, j, _)| (i, std::cmp::Reverse(j)));
    let inner: Vec<(Rational, String)> = inner
        .into_iter()
        .map(|(i, j, c)| (c, format!("{}{}", latex_power("x", i), latex_power("y", j))))
        .collect();
    wrap(
        format!("{}{}", latex_power("x", g.x), latex_power("y", g.y)),
        &inner,
    )
}

pub fn latex_univariate(f: &UniPoly) -> String {
    let low = f.terms().next().map(|(i, _)| i).unwrap_or(0);
    let inner: Vec<(Rational, String)> = f
        .terms()
        .map(|(i, c)| (c.clone(), latex_power("x", i - low)))
        .collect();
    wrap(latex_power("x", low), &inner)
}

pub fn csv_bivariate(p: &BiPoly) -> String {
    let mut out = String::from("i,j,num,den\n");
    for (m, c) in p.terms() {
        out.push_str(&format!("{},{},{},{}\n", m.x, m.y, c.numer(), c.denom()));
    }
    out
}

pub fn csv_univariate(f: &UniPoly) -> String {
    let mut out = String::from("i,num,den\n");
    for (i, c) in f.terms() {
        out.push_str(&format!("{},{},{}\n", i, c.numer(), c.denom()));
    }
    out
}
