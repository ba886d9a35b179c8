//! Text grammars for rings, monomials, monomial ideals and polynomials.
//!
//! ```text
//! ideal    := '0' | '1' | gen (',' gen)*
//! gen      := '1' | term ('*' term)*
//! term     := var ('^' uint)?
//! poly     := sign? pterm (('+' | '-') pterm)*
//! pterm    := uint ('*'? gen)? | gen
//! ```
//!
//! Whitespace is ignored between tokens.

use std::fmt;

use monideal::groebner::{FpRing, PolyFp};
use monideal::{Monomial, MonomialIdeal, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cannot parse `{}` at offset {}: {}",
            self.input, self.pos, self.msg
        )
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            input: self.src.to_string(),
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn uint(&mut self) -> PResult<u64> {
        self.skip_ws();
        let digits: &str = {
            let r = self.rest();
            let n = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            &r[..n]
        };
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        match digits.parse() {
            Ok(v) => {
                self.pos += digits.len();
                Ok(v)
            }
            Err(_) => self.err("integer too large"),
        }
    }

    fn ident(&mut self) -> PResult<&'a str> {
        self.skip_ws();
        let r = self.rest();
        let mut chars = r.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_alphabetic() || c == '_' => {}
            _ => return self.err("expected a variable name"),
        }
        let n = chars
            .find(|&(_, c)| !(c.is_alphanumeric() || c == '_'))
            .map_or(r.len(), |(i, _)| i);
        self.pos += n;
        Ok(&r[..n])
    }

    /// `term ('*' term)*`, or `1`.
    fn monomial(&mut self, ring: &Ring) -> PResult<Monomial> {
        let mut exps = vec![0u32; ring.dim()];
        if self.peek() == Some('1') {
            self.uint().and_then(|v| {
                if v == 1 {
                    Ok(())
                } else {
                    self.err("expected 1")
                }
            })?;
            return Ok(Monomial::new(exps));
        }
        loop {
            self.power_into(ring, &mut exps)?;
            if !self.eat('*') {
                return Ok(Monomial::new(exps));
            }
        }
    }

    fn power_into(&mut self, ring: &Ring, exps: &mut [u32]) -> PResult<()> {
        let start = self.pos;
        let name = self.ident()?;
        let Some(v) = ring.index_of(name) else {
            self.pos = start;
            return self.err(format!("unknown variable `{name}`"));
        };
        let e = if self.eat('^') { self.uint()? } else { 1 };
        match u32::try_from(e).ok().and_then(|e| exps[v].checked_add(e)) {
            Some(s) => exps[v] = s,
            None => return self.err("exponent overflow"),
        }
        Ok(())
    }
}

/// `x,y,z` (commas and/or whitespace).
pub fn parse_ring(
    names: &str,
    characteristic: u32,
) -> Result<Ring, Box<dyn std::error::Error + Send + Sync>> {
    let names: Vec<&str> = names
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    for n in &names {
        let mut c = Cursor::new(n);
        let ok = c.ident().is_ok() && c.at_end();
        if !ok {
            return Err(format!("invalid variable name `{n}`").into());
        }
    }
    Ok(Ring::new(names, characteristic)?)
}

pub fn parse_monomial(ring: &Ring, src: &str) -> PResult<Monomial> {
    let mut c = Cursor::new(src);
    let m = c.monomial(ring)?;
    if !c.at_end() {
        return c.err("trailing input");
    }
    Ok(m)
}

pub fn parse_ideal(ring: &Ring, src: &str) -> PResult<MonomialIdeal> {
    let mut c = Cursor::new(src);
    if c.peek() == Some('0') {
        c.uint()
            .and_then(|v| if v == 0 { Ok(()) } else { c.err("expected 0") })?;
        if !c.at_end() {
            return c.err("trailing input after 0");
        }
        return Ok(MonomialIdeal::zero(ring));
    }
    let mut gens = Vec::new();
    loop {
        gens.push(c.monomial(ring)?);
        if !c.eat(',') {
            break;
        }
    }
    if !c.at_end() {
        return c.err("trailing input");
    }
    MonomialIdeal::new(ring, gens).map_err(|e| ParseError {
        input: src.to_string(),
        pos: 0,
        msg: e.to_string(),
    })
}

/// Integer coefficients are reduced mod `p`.
pub fn parse_poly(ring: &FpRing, src: &str) -> PResult<PolyFp> {
    let mut c = Cursor::new(src);
    let p = ring.p();
    let mut terms = Vec::new();
    let mut negative = c.eat('-');
    if !negative {
        c.eat('+');
    }
    loop {
        let coeff = match c.peek() {
            Some(d) if d.is_ascii_digit() => Some(c.uint()? % p),
            Some(_) => None,
            None => return c.err("expected a term"),
        };
        let has_monomial = match c.peek() {
            Some('*') if coeff.is_some() => {
                c.eat('*');
                true
            }
            Some(ch) => coeff.is_none() || ch.is_alphabetic() || ch == '_',
            None => false,
        };
        let m = if has_monomial {
            let mut exps = vec![0u32; ring.dim()];
            loop {
                c.power_into(ring.ring(), &mut exps)?;
                if !c.eat('*') {
                    break;
                }
            }
            Monomial::new(exps)
        } else {
            Monomial::one(ring.dim())
        };
        let k = coeff.unwrap_or(1) as i64;
        terms.push((m, if negative { -k } else { k }));
        if c.eat('+') {
            negative = false;
        } else if c.eat('-') {
            negative = true;
        } else {
            break;
        }
    }
    if !c.at_end() {
        return c.err("trailing input");
    }
    Ok(PolyFp::from_terms(ring, terms))
}

/// A comma separated list of `u32` values.
pub fn parse_list(src: &str) -> PResult<Vec<u32>> {
    let mut c = Cursor::new(src);
    let mut out = Vec::new();
    loop {
        let v = c.uint()?;
        match u32::try_from(v) {
            Ok(v) => out.push(v),
            Err(_) => return c.err("value too large"),
        }
        if !c.eat(',') {
            break;
        }
    }
    if !c.at_end() {
        return c.err("trailing input");
    }
    Ok(out)
}
