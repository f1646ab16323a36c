//! Polynomial string grammar:
//!
//! ```text
//! poly := ['+'|'-'] term (('+'|'-') term)*
//! term := [coeff]['*']? (var('^'int)?('*'var('^'int)?)*)
//! ```
//!
//! Variables must be declared names. Whitespace is ignored and integer
//! coefficients are reduced mod p.

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::PolyRing;
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn integer(&mut self) -> Result<Option<u64>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<u64>() {
            Ok(v) => Ok(Some(v)),
            Err(_) => {
                self.pos = start;
                self.err("integer literal out of range")
            }
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let ok_start = |c: u8| c.is_ascii_alphabetic() || c == b'_';
        if self.pos < self.src.len() && ok_start(self.src[self.pos]) {
            self.pos += 1;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
        } else {
            None
        }
    }
}

pub(crate) fn parse_polynomial(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    let field = ring.field();
    let n = ring.nvars();
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = if lx.eat(b'-') {
            true
        } else if lx.eat(b'+') || first {
            false
        } else if lx.peek().is_none() {
            break;
        } else {
            return lx.err("expected `+` or `-` between terms");
        };
        first = false;

        let coeff = lx.integer()?;
        let mut exps = vec![0u32; n];
        let mut has_factor = false;
        if coeff.is_some() {
            lx.eat(b'*');
        }
        loop {
            let Some(name) = lx.ident() else {
                break;
            };
            let Some(idx) = ring.var_index(name) else {
                lx.pos -= name.len();
                return lx.err(format!("unknown variable `{name}`"));
            };
            let mut e = 1u64;
            if lx.eat(b'^') {
                match lx.integer()? {
                    Some(v) => e = v,
                    None => return lx.err("expected exponent after `^`"),
                }
            }
            exps[idx] = exps[idx]
                .checked_add(u32::try_from(e).map_err(|_| Error::Parse {
                    pos: lx.pos,
                    msg: "exponent too large".into(),
                })?)
                .ok_or(Error::Parse {
                    pos: lx.pos,
                    msg: "exponent too large".into(),
                })?;
            has_factor = true;
            if !lx.eat(b'*') {
                break;
            }
        }
        if coeff.is_none() && !has_factor {
            return lx.err("expected a coefficient or variable");
        }
        let c = field.reduce(coeff.unwrap_or(1));
        let c = if negative { field.neg(c) } else { c };
        terms.push((Monomial::from_exponents(exps), c));
        if lx.peek().is_none() {
            break;
        }
    }
    if lx.peek().is_some() {
        return lx.err("trailing input");
    }
    Ok(Polynomial::from_terms(field, ring.order(), n, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;
    use crate::poly::MonomialOrder;

    fn ring() -> PolyRing {
        PolyRing::new(
            PrimeField::new(101).unwrap(),
            vec!["a".into(), "b".into(), "c".into()],
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    #[test]
    fn parses_grammar_forms() {
        let r = ring();
        let p = r.parse("b^2 - a*c").unwrap();
        assert_eq!(p.format(r.var_names()), "b^2 - a*c");
        let q = r.parse(" 3*a*b + 2b -  c^3 ").unwrap();
        assert_eq!(q.format(r.var_names()), "-c^3 + 3*a*b + 2*b");
        let z = r.parse("a - a").unwrap();
        assert!(z.is_zero());
        assert_eq!(r.parse("-1").unwrap().terms()[0].1, 100);
        assert_eq!(r.parse("202*a").unwrap().format(r.var_names()), "0");
        assert_eq!(r.parse("a^2*a").unwrap().format(r.var_names()), "a^3");
    }

    #[test]
    fn rejects_bad_input() {
        let r = ring();
        assert!(matches!(r.parse("x^2"), Err(Error::Parse { .. })));
        assert!(r.parse("a +").is_err());
        assert!(r.parse("a^").is_err());
        assert!(r.parse("a b").is_err());
        assert!(r.parse("").is_err());
    }
}
