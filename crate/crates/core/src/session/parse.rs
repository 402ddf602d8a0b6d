use crate::arith::{Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self, p: u64) -> Option<(u64, u64)> {
        self.skip_ws();
        let start = self.pos;
        let mut exact: u64 = 0;
        let mut modp: u64 = 0;
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            let d = c as u64 - '0' as u64;
            exact = exact.saturating_mul(10).saturating_add(d);
            modp = (modp * 10 + d) % p;
            self.pos += 1;
        }
        (self.pos > start).then_some((exact, modp))
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let mut len = 0;
        for (k, c) in rest.char_indices() {
            let ok = if k == 0 {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            len = k + c.len_utf8();
        }
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &rest[..len]))
    }
}

/// Parses `expr := term (('+'|'-') term)*`,
/// `term := coeff? ('*'? var ('^' nat)?)*` over the variables of `ring`.
/// Errors carry the byte offset of the offending input.
pub fn parse_polynomial(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    let p = ring.field().characteristic() as u64;
    let mut cur = Cursor { text, pos: 0 };
    let mut terms: Vec<(Monomial, u32)> = Vec::new();
    cur.skip_ws();
    if cur.pos == text.len() {
        return Err(Error::parse(cur.pos, "empty polynomial"));
    }
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (mon, coeff) = parse_term(ring, &mut cur, p)?;
        let coeff = if negative { (p - coeff) % p } else { coeff };
        terms.push((mon, coeff as u32));
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.pos += 1;
                negative = false;
            }
            Some('-') => {
                cur.pos += 1;
                negative = true;
            }
            Some(c) => return Err(Error::parse(cur.pos, format!("unexpected '{c}'"))),
        }
    }
    Ok(ring.from_terms(terms))
}

fn parse_term(ring: &PolyRing, cur: &mut Cursor<'_>, p: u64) -> Result<(Monomial, u64)> {
    let mut exps = vec![0u16; ring.nvars()];
    let start = cur.pos;
    let coeff = cur.nat(p).map(|(_, m)| m);
    let mut factors = 0;
    loop {
        let save = cur.pos;
        let star = cur.eat('*');
        if star && coeff.is_none() && factors == 0 {
            return Err(Error::parse(save, "'*' without a left factor"));
        }
        match cur.ident() {
            Some((at, name)) => {
                let v = ring
                    .var_index(name)
                    .ok_or_else(|| Error::parse(at, format!("unknown variable '{name}'")))?;
                let mut e: u64 = 1;
                if cur.eat('^') {
                    cur.skip_ws();
                    let at = cur.pos;
                    e = match cur.nat(u64::MAX) {
                        Some((e, _)) => e,
                        None => return Err(Error::parse(at, "malformed exponent")),
                    };
                    if e > u16::MAX as u64 / 2 {
                        return Err(Error::parse(at, "exponent too large"));
                    }
                }
                let total = exps[v] as u64 + e;
                if total > u16::MAX as u64 / 2 {
                    return Err(Error::parse(at, "exponent too large"));
                }
                exps[v] = total as u16;
                factors += 1;
            }
            None => {
                if star {
                    cur.skip_ws();
                    return Err(Error::parse(cur.pos, "expected a variable after '*'"));
                }
                cur.pos = save;
                break;
            }
        }
    }
    if coeff.is_none() && factors == 0 {
        cur.skip_ws();
        let at = cur.pos.max(start);
        return Err(Error::parse(at, "expected a term"));
    }
    Ok((Monomial::from_exponents(&exps), coeff.unwrap_or(1)))
}
