//! Recursive-descent parser.
//!
//! ```text
//! expr   := term ('.' term)*
//! term   := factor ('*' factor)*
//! factor := gen | '(' expr ')'
//! gen    := 'mu' ['[' nums ']'] | 'delta' ['[' nums ']'] | 'eta' | 'eps' | 'S'
//!         | 'P' cycle+ | 'cas' | 'br' | 'c' | 'i' | 'ad' | 'adL' | 'id(' word ')'
//! cycle  := '(' num* ')'
//! word   := 'I' | ('H' | 'L')+
//! ```

use symgrp::Perm;

use crate::expr::{Expr, Gen, Letter, ObjectWord};
use crate::DslError;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, DslError> {
        Err(DslError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: u8) -> Result<(), DslError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphabetic() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Result<usize, DslError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().or_else(|_| self.err("number too large"))
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut items = vec![self.term()?];
        while self.peek() == Some(b'.') {
            self.pos += 1;
            items.push(self.term()?);
        }
        Ok(Expr::compose(items))
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut items = vec![self.factor()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            items.push(self.factor()?);
        }
        Ok(Expr::tensor(items))
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(e);
        }
        let at = self.pos;
        let name = match self.ident() {
            Some(n) => n,
            None => return self.err("expected a generator or '('"),
        };
        let g = match name.as_str() {
            "mu" => Gen::Mu(self.opt_list()?.unwrap_or_else(|| vec![2])),
            "delta" => Gen::Delta(self.opt_list()?.unwrap_or_else(|| vec![2])),
            "eta" => Gen::Eta,
            "eps" => Gen::Eps,
            "S" => Gen::Antipode,
            "P" => Gen::P(self.cycles()?),
            "cas" => Gen::Cas,
            "br" => Gen::Br,
            "c" => Gen::C,
            "i" => Gen::I,
            "ad" => Gen::Ad,
            "adL" => Gen::AdL,
            "id" => Gen::Id(self.word()?),
            _ => return Err(DslError::UnknownGenerator { pos: at, name }),
        };
        Ok(Expr::Gen(g))
    }

    fn opt_list(&mut self) -> Result<Option<Vec<usize>>, DslError> {
        if self.peek() != Some(b'[') {
            return Ok(None);
        }
        self.pos += 1;
        let mut out = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(Some(out));
        }
        loop {
            out.push(self.number()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(Some(out));
                }
                _ => return self.err("expected ',' or ']'"),
            }
        }
    }

    fn cycles(&mut self) -> Result<Perm, DslError> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        if self.peek() != Some(b'(') {
            return self.err("P needs at least one cycle, e.g. P(1 2)");
        }
        while self.peek() == Some(b'(') {
            self.pos += 1;
            let mut c = Vec::new();
            while self.peek() != Some(b')') {
                if self.peek().is_none() {
                    return self.err("unterminated cycle");
                }
                c.push(self.number()?);
                if self.peek() == Some(b',') {
                    self.pos += 1;
                }
            }
            self.pos += 1;
            if c.contains(&0) {
                return self.err("cycle entries are 1-based");
            }
            if !c.is_empty() {
                cycles.push(c);
            }
        }
        let n = cycles.iter().flatten().copied().max().unwrap_or(0);
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(n, &refs).or_else(|e| self.err(format!("bad permutation: {e}")))
    }

    fn word(&mut self) -> Result<ObjectWord, DslError> {
        self.expect(b'(')?;
        let mut letters = Vec::new();
        let mut unit = false;
        loop {
            match self.peek() {
                Some(b'H') => letters.push(Letter::H),
                Some(b'L') => letters.push(Letter::L),
                Some(b'I') => unit = true,
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return self.err("expected H, L, I or ')' in object word"),
            }
            self.pos += 1;
        }
        if unit && !letters.is_empty() {
            return self.err("I cannot be mixed with H or L");
        }
        Ok(ObjectWord(letters))
    }
}

/// Parses an expression; whitespace is insignificant.
pub fn parse(text: &str) -> Result<Expr, DslError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_tensor_precedence() {
        let e = parse("mu . (id(H) * S) . delta").unwrap();
        let expect = Expr::Compose(vec![
            Expr::Gen(Gen::Mu(vec![2])),
            Expr::Tensor(vec![Expr::Gen(Gen::Id(ObjectWord::h(1))), Expr::Gen(Gen::Antipode)]),
            Expr::Gen(Gen::Delta(vec![2])),
        ]);
        assert_eq!(e, expect);
        assert_eq!(parse("c").unwrap(), Expr::Gen(Gen::C));
    }

    #[test]
    fn four_t_witness_term() {
        let e = parse("mu[2,1] . P(1 2) . i*i*i . (id(L) * c)").unwrap();
        match &e {
            Expr::Compose(v) => assert_eq!(v.len(), 4),
            _ => panic!("expected a composition"),
        }
        assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn errors_carry_positions() {
        match parse("mu . foo") {
            Err(DslError::UnknownGenerator { pos, name }) => {
                assert_eq!(pos, 5);
                assert_eq!(name, "foo");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("mu . (S"), Err(DslError::Syntax { .. })));
        assert!(matches!(parse("P"), Err(DslError::Syntax { .. })));
    }

    #[test]
    fn permutation_printing_round_trips() {
        for s in ["P(1 2)", "P(2 3)(4)", "P()", "P(1 3 2)(4 5)", "id(I)", "id(HLH)"] {
            let e = parse(s).unwrap();
            assert_eq!(e.to_string(), s);
        }
    }
}
