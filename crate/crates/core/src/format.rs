//! Text, LaTeX and JSON rendering.
//!
//! Surds are printed with the square factors of the radicand pulled out:
//! `(12/43)·√(168259/6912)` prints as `(1/12)*sqrt(273)`. Real surds are
//! written `s√D ± t`; imaginary ones in `t ± s√|D|·i` order. Decimals always
//! use `.` as the separator.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::solve::{ExactValue, SolveResult};
use crate::{
    squarefree_decompose, Branches, ComplexDecimal, DenestedPair, Error, GeneralCubic, Integer,
    QuadSurd, Rational, Result,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    #[default]
    Text,
    Latex,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "latex" => Ok(OutputFormat::Latex),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Syntax { pos: 0, msg: format!("unknown format '{other}'") }),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Latex => "latex",
            OutputFormat::Json => "json",
        })
    }
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        return q.numer().to_string();
    }
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
}

pub fn format_rational(q: &Rational, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => q.to_string(),
        OutputFormat::Latex => latex_rational(q),
        OutputFormat::Json => serde_json::to_string(&q.to_string()).expect("string"),
    }
}

/// Positive coefficient times `√radicand` (and `i`), without sign.
fn surd_term(coeff: &Rational, radicand: &Integer, imaginary: bool, fmt: OutputFormat) -> String {
    let unit_root = radicand.is_one();
    match fmt {
        OutputFormat::Latex => {
            let mut out = if coeff.is_one() {
                String::new()
            } else {
                latex_rational(coeff)
            };
            if !unit_root {
                out.push_str(&format!("\\sqrt{{{radicand}}}"));
            }
            if imaginary {
                out.push('i');
            }
            out
        }
        _ => {
            let mut factors: Vec<String> = Vec::new();
            if !coeff.is_one() {
                factors.push(if coeff.is_integer() { coeff.to_string() } else { format!("({coeff})") });
            }
            if !unit_root {
                factors.push(format!("sqrt({radicand})"));
            }
            if imaginary {
                factors.push("i".into());
            }
            if factors.is_empty() {
                "1".into()
            } else {
                factors.join("*")
            }
        }
    }
}

fn join_signed(first: (bool, String), second: (bool, String), fmt: OutputFormat) -> String {
    let lead = if first.0 { "-" } else { "" };
    let (sep_pos, sep_neg) = match fmt {
        OutputFormat::Latex => ("+", "-"),
        _ => (" + ", " - "),
    };
    format!("{lead}{}{}{}", first.1, if second.0 { sep_neg } else { sep_pos }, second.1)
}

fn render_surd(x: &QuadSurd, fmt: OutputFormat) -> String {
    let d = x.radicand();
    let rational = |q: &Rational| match fmt {
        OutputFormat::Latex => latex_rational(q),
        _ => q.to_string(),
    };
    if x.s().is_zero() || d.is_zero() {
        return rational(x.t());
    }
    let imaginary = d.is_negative();
    let (c, r) = squarefree_decompose(&d.abs()).expect("non-zero radicand");
    let coeff = x.s() * &c;
    if r.is_one() && !imaginary {
        return rational(&(x.t() + coeff));
    }
    let term = (coeff.is_negative(), surd_term(&coeff.abs(), &r, imaginary, fmt));
    if x.t().is_zero() {
        return format!("{}{}", if term.0 { "-" } else { "" }, term.1);
    }
    let t = (x.t().is_negative(), rational(&x.t().abs()));
    if imaginary {
        join_signed(t, term, fmt)
    } else {
        join_signed(term, t, fmt)
    }
}

/// Renders `t + s√D` with squarefree extraction applied to `|D|`.
pub fn format_surd(x: &QuadSurd, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => {
            serde_json::to_string(&render_surd(x, OutputFormat::Text)).expect("string")
        }
        _ => render_surd(x, fmt),
    }
}

/// `(w₃, w₄)` of a denested pair.
pub fn format_denested(p: &DenestedPair<Rational>, fmt: OutputFormat) -> (String, String) {
    (format_surd(&p.w3(), fmt), format_surd(&p.w4(), fmt))
}

pub fn format_exact(v: &ExactValue, fmt: OutputFormat) -> String {
    match v {
        ExactValue::Rational(q) => format_rational(q, fmt),
        ExactValue::Quad(q) => format_surd(q, fmt),
    }
}

/// `c3x^3 + c2x^2 + c1x + c0 = 0`, re-parseable by [`crate::parse_equation`].
pub fn format_equation(g: &GeneralCubic<Rational>, var: char) -> String {
    let mut out = String::new();
    for (coeff, degree) in [(&g.c3, 3), (&g.c2, 2), (&g.c1, 1), (&g.c0, 0)] {
        if coeff.is_zero() {
            continue;
        }
        let sign = if coeff.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if coeff.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mag = coeff.abs();
        let power = match degree {
            0 => String::new(),
            1 => var.to_string(),
            n => format!("{var}^{n}"),
        };
        if degree == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
            if degree > 0 && !mag.is_integer() {
                out.push('*');
            }
        }
        out.push_str(&power);
    }
    out.push_str(" = 0");
    out
}

#[derive(Serialize)]
struct RootJson {
    exact: Option<String>,
    numeric_re: String,
    numeric_im: String,
    provenance: &'static str,
}

#[derive(Serialize)]
struct DenestingJson {
    t: String,
    s: String,
    #[serde(rename = "D")]
    radicand: String,
    w3: String,
    w4: String,
}

#[derive(Serialize)]
struct CardanoJson {
    w1: String,
    w2: String,
    x: String,
}

#[derive(Serialize)]
struct SolveJson {
    classification: &'static str,
    a: String,
    b: String,
    #[serde(rename = "D")]
    discriminant: String,
    roots: Vec<RootJson>,
    denesting: Option<DenestingJson>,
    cardano: Option<CardanoJson>,
    digits: String,
}

fn denesting_json(p: &DenestedPair<Rational>) -> DenestingJson {
    let (w3, w4) = format_denested(p, OutputFormat::Text);
    DenestingJson {
        t: p.t.to_string(),
        s: p.s.to_string(),
        radicand: p.radicand.to_string(),
        w3,
        w4,
    }
}

/// JSON for a denested pair alone: `{"t","s","D","w3","w4"}`.
pub fn denesting_to_json(p: &DenestedPair<Rational>) -> String {
    serde_json::to_string(&denesting_json(p)).expect("serializable")
}

fn solve_json(r: &SolveResult) -> SolveJson {
    let denesting = match (&r.denesting, &r.numeric_denesting) {
        (Some(p), _) => Some(denesting_json(p)),
        (None, Some(n)) => Some(DenestingJson {
            t: n.t.to_string(),
            s: n.s.to_string(),
            radicand: r.discriminant.to_string(),
            w3: n.w3.to_string(),
            w4: n.w4.to_string(),
        }),
        (None, None) => None,
    };
    SolveJson {
        classification: r.classification.as_str(),
        a: r.depressed.a.to_string(),
        b: r.depressed.b.to_string(),
        discriminant: r.discriminant.to_string(),
        roots: r
            .roots
            .iter()
            .map(|root| RootJson {
                exact: root.exact.as_ref().map(|v| format_exact(v, OutputFormat::Text)),
                numeric_re: root.numeric.re.to_string(),
                numeric_im: root.numeric.im.to_string(),
                provenance: root.provenance.as_str(),
            })
            .collect(),
        denesting,
        cardano: r.cardano.as_ref().map(|c| CardanoJson {
            w1: c.w1.to_string(),
            w2: c.w2.to_string(),
            x: c.x.to_string(),
        }),
        digits: r.digits.to_string(),
    }
}

/// JSON report with fixed key order; identical inputs give identical bytes.
pub fn solve_to_json(r: &SolveResult) -> String {
    serde_json::to_string(&solve_json(r)).expect("serializable")
}

/// Human-readable report in text or LaTeX; JSON defers to [`solve_to_json`].
pub fn render_solve(r: &SolveResult, fmt: OutputFormat) -> String {
    if fmt == OutputFormat::Json {
        return solve_to_json(r);
    }
    let q = |v: &Rational| format_rational(v, fmt);
    let mut out = Vec::new();
    let shift_note = if r.shift.is_zero() { String::new() } else { format!(", shift {}", q(&r.shift)) };
    out.push(format!(
        "depressed: x^3 + 3ax = 2b with a = {}, b = {}{}",
        q(&r.depressed.a),
        q(&r.depressed.b),
        shift_note
    ));
    out.push(format!("D = a^3 + b^2 = {} ({})", q(&r.discriminant), r.classification));
    for (i, root) in r.roots.iter().enumerate() {
        let exact = root
            .exact
            .as_ref()
            .map(|v| format!("{} ≈ ", format_exact(v, fmt)))
            .unwrap_or_default();
        out.push(format!("root {}: {}{} [{}]", i + 1, exact, root.numeric, root.provenance));
    }
    if let Some(p) = &r.denesting {
        let (w3, w4) = format_denested(p, fmt);
        out.push(format!("denesting: t = {}, s = {}", q(&p.t), q(&p.s)));
        let n3 = crate::eval_quadext(&p.w3(), r.digits).to_complex();
        let n4 = crate::eval_quadext(&p.w4(), r.digits).to_complex();
        out.push(format!("  w3 = {w3} ≈ {n3}"));
        out.push(format!("  w4 = {w4} ≈ {n4}"));
    }
    if let Some(n) = &r.numeric_denesting {
        out.push(format!("denesting (numeric): t ≈ {}, s ≈ {}", n.t, n.s));
        out.push(format!("  w3 ≈ {}", n.w3));
        out.push(format!("  w4 ≈ {}", n.w4));
    }
    if let Some(c) = &r.cardano {
        out.push(format!("cardano: w1 ≈ {}, w2 ≈ {}, x = w1 - w2 ≈ {}", c.w1, c.w2, c.x));
    }
    if let Some(b) = &r.branches {
        out.push(render_branches_lines(b).join("\n"));
    }
    out.join("\n")
}

fn render_branches_lines(b: &Branches) -> Vec<String> {
    let labels = ["w3 - w4", "e1*w3 - e2*w4", "e2*w3 - e1*w4"];
    let mut out = vec!["branches:".to_string()];
    for (k, label) in labels.iter().enumerate() {
        out.push(format!("  {label}: {} = ({}) - ({})", b.roots[k], b.w3[k], b.w4[k]));
    }
    out
}

#[derive(Serialize)]
struct BranchJson {
    root: String,
    w3: [String; 2],
    w4: [String; 2],
}

fn pair_strings(z: &ComplexDecimal) -> [String; 2] {
    [z.re.to_string(), z.im.to_string()]
}

pub fn render_branches(b: &Branches, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => {
            let items: Vec<BranchJson> = (0..3)
                .map(|k| BranchJson {
                    root: b.roots[k].re.to_string(),
                    w3: pair_strings(&b.w3[k]),
                    w4: pair_strings(&b.w4[k]),
                })
                .collect();
            serde_json::to_string(&items).expect("serializable")
        }
        _ => render_branches_lines(b).join("\n"),
    }
}
