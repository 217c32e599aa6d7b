//! Text syntax for polynomials and ideal files.
//!
//! Polynomials: terms joined by `+`/`-`, `*` for products, `^` for powers,
//! e.g. `x0*x2^4 - 3*x1^5`. Printing is canonical (degrevlex-descending
//! terms, balanced signed coefficients), and parse(render(f)) == f.
//!
//! Ideal files: line 1 `char <p>`, line 2 `vars <name>+`, then one
//! polynomial per non-empty line; `#` starts a comment.

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::sync::Arc;

pub fn render_monomial(m: &Monomial, ring: &PolyRing) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for i in 0..m.nvars() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(ring.vars[i].clone()),
            e => parts.push(format!("{}^{}", ring.vars[i], e)),
        }
    }
    parts.join("*")
}

/// Canonical rendering: terms in degrevlex-descending order, balanced
/// signed coefficients, explicit `*` between coefficient and monomial.
pub fn render_polynomial(f: &Polynomial, ring: &PolyRing) -> String {
    let k = ring.field;
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in f.terms().iter().enumerate() {
        let s = k.signed(*c);
        let (sign, mag) = if s < 0 { ("-", -s) } else { ("+", s) };
        if idx == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push(' ');
            out.push_str(sign);
            out.push(' ');
        }
        if m.is_one() {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&render_monomial(m, ring));
        } else {
            out.push_str(&format!("{}*{}", mag, render_monomial(m, ring)));
        }
    }
    out
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    line_start: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Cursor {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            line,
            line_start: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.pos - self.line_start + 1,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn ident(&mut self) -> Option<&'a str> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_') {
            return None;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        Some(&self.src[start..self.pos])
    }
}

/// Parses one polynomial in the given ring. `line` seeds error positions.
pub fn parse_polynomial(src: &str, ring: &PolyRing, line: usize) -> Result<Polynomial> {
    let k = ring.field;
    let n = ring.nvars();
    let mut cur = Cursor::new(src, line);
    let mut terms: Vec<(Monomial, Fp)> = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty polynomial"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        // sign
        let mut neg = false;
        if cur.eat(b'-') {
            neg = true;
        } else if cur.eat(b'+') {
        } else if !first {
            return Err(cur.err("expected '+' or '-' between terms"));
        }
        first = false;
        cur.skip_ws();
        // term: optional coefficient, factors joined by '*'
        let mut coef = Fp::ONE;
        let mut exps = vec![0u16; n];
        if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            let v = cur.integer()?;
            coef = k.el((v % k.characteristic()) as i64);
        } else {
            parse_var_factor(&mut cur, ring, &mut exps)?;
        }
        loop {
            cur.skip_ws();
            if cur.eat(b'*') {
                cur.skip_ws();
                if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
                    let v = cur.integer()?;
                    coef = k.mul(coef, k.el((v % k.characteristic()) as i64));
                } else {
                    parse_var_factor(&mut cur, ring, &mut exps)?;
                }
            } else {
                break;
            }
        }
        let c = if neg { k.neg(coef) } else { coef };
        terms.push((Monomial::from_exps(&exps), c));
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') | Some(b'-') => continue,
            Some(c) => return Err(cur.err(format!("unexpected character '{}'", c as char))),
        }
    }
    Ok(Polynomial::from_terms(terms, k))
}

fn parse_var_factor(cur: &mut Cursor, ring: &PolyRing, exps: &mut [u16]) -> Result<()> {
    let at = cur.pos;
    let Some(name) = cur.ident() else {
        return Err(cur.err("expected a variable or coefficient"));
    };
    let Some(idx) = ring.var_index(name) else {
        cur.pos = at;
        return Err(cur.err(format!("unknown variable '{name}'")));
    };
    let mut e: u64 = 1;
    cur.skip_ws();
    if cur.eat(b'^') {
        cur.skip_ws();
        e = cur.integer()?;
        if e > u16::MAX as u64 {
            return Err(cur.err("exponent too large"));
        }
    }
    exps[idx] = exps[idx]
        .checked_add(e as u16)
        .ok_or_else(|| cur.err("exponent overflow"))?;
    Ok(())
}

/// Parsed ideal file: characteristic, ring and generators.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ideal: Ideal,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Grammar: line 1 `char <p>`; line 2 `vars <name>+`; subsequent
/// non-empty lines one polynomial each; `#` comments anywhere.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut char_p: Option<u64> = None;
    let mut ring: Option<Arc<PolyRing>> = None;
    let mut gens: Vec<Polynomial> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        if char_p.is_none() {
            let rest = line.strip_prefix("char").ok_or(Error::Parse {
                line: lineno,
                col: 1,
                msg: "expected 'char <p>' header".into(),
            })?;
            let p: u64 = rest.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                col: 6,
                msg: "invalid characteristic".into(),
            })?;
            PrimeField::new(p)?;
            char_p = Some(p);
            continue;
        }
        if ring.is_none() {
            let rest = line.strip_prefix("vars").ok_or(Error::Parse {
                line: lineno,
                col: 1,
                msg: "expected 'vars <name>+' header".into(),
            })?;
            let vars: Vec<String> = rest.split_whitespace().map(|s| s.to_string()).collect();
            if vars.is_empty() {
                return Err(Error::Parse {
                    line: lineno,
                    col: 6,
                    msg: "no variables declared".into(),
                });
            }
            for v in &vars {
                if !v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    return Err(Error::Parse {
                        line: lineno,
                        col: 6,
                        msg: format!("invalid variable name '{v}'"),
                    });
                }
            }
            let field = PrimeField::for_ring(char_p.unwrap(), vars.len())?;
            ring = Some(PolyRing::new(vars, field)?);
            continue;
        }
        let r = ring.as_ref().unwrap();
        let f = parse_polynomial(line, r, lineno)?;
        if f.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if f.homogeneous_degree().is_none() {
            return Err(Error::Parse {
                line: lineno,
                col: 1,
                msg: format!(
                    "generator is not homogeneous: {}",
                    render_polynomial(&f, r)
                ),
            });
        }
        gens.push(f);
    }
    let ring = ring.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        col: 1,
        msg: "missing headers".into(),
    })?;
    Ok(IdealFile {
        ideal: Ideal::new(ring, gens)?,
    })
}

/// Canonical rendering; parse(render(ideal)) reproduces the ideal and
/// render is idempotent on its own output.
pub fn render_ideal_file(ideal: &Ideal) -> String {
    let mut out = String::new();
    out.push_str(&format!("char {}\n", ideal.ring.field.characteristic()));
    out.push_str(&format!("vars {}\n", ideal.ring.vars.join(" ")));
    for g in &ideal.gens {
        out.push_str(&render_polynomial(g, &ideal.ring));
        out.push('\n');
    }
    out
}
