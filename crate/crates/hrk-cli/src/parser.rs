//! Recursive-descent parser for representation expressions.
//!
//! Grammar:
//!   expr   := term { "+" term }
//!   term   := "trivial(" INT ")" | ctor
//!   ctor   := "std(" group ")" | "dual(" ctor ")" | "wedge(" INT "," ctor ")"
//!           | "sym2(" ctor ")" | "tensor(" ctor "," ctor ")"
//!           | "spinrep(" INT ")" | "adj(" group ")"
//!   group  := [ "z*" ] FAMILY "(" INT ")",  FAMILY := so | su | sp | u
//!
//! A ctor introducing a single group atom may carry a share suffix "#k";
//! atoms with the same suffix denote one factor acting diagonally.

use std::fmt;

use hrk_core::liealg::Family;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    pub z: bool,
    pub family: Family,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ctor {
    Trivial(usize),
    Std(Group, Option<u32>),
    Dual(Box<Ctor>),
    Wedge(usize, Box<Ctor>),
    Sym2(Box<Ctor>),
    Tensor(Box<Ctor>, Box<Ctor>),
    SpinRep(usize, Option<u32>),
    Adj(Group, Option<u32>),
}

/// A representation expression: a direct sum of terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepExpr {
    pub terms: Vec<Ctor>,
}

#[derive(Debug, Clone)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at position {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse(src: &str) -> Result<RepExpr, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(expr)
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn share_suffix(&mut self) -> Result<Option<u32>, ParseError> {
        if self.peek() == Some(b'#') {
            self.pos += 1;
            let k = self.integer()?;
            Ok(Some(k as u32))
        } else {
            Ok(None)
        }
    }

    fn expr(&mut self) -> Result<RepExpr, ParseError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(RepExpr { terms })
    }

    fn term(&mut self) -> Result<Ctor, ParseError> {
        self.ctor()
    }

    fn ctor(&mut self) -> Result<Ctor, ParseError> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident();
        match name.as_str() {
            "trivial" => {
                self.eat(b'(')?;
                let d = self.integer()?;
                self.eat(b')')?;
                Ok(Ctor::Trivial(d))
            }
            "std" => {
                self.eat(b'(')?;
                let g = self.group()?;
                self.eat(b')')?;
                let share = self.share_suffix()?;
                Ok(Ctor::Std(g, share))
            }
            "dual" => {
                self.eat(b'(')?;
                let inner = self.ctor()?;
                self.eat(b')')?;
                Ok(Ctor::Dual(Box::new(inner)))
            }
            "wedge" => {
                self.eat(b'(')?;
                let k = self.integer()?;
                self.eat(b',')?;
                let inner = self.ctor()?;
                self.eat(b')')?;
                Ok(Ctor::Wedge(k, Box::new(inner)))
            }
            "sym2" => {
                self.eat(b'(')?;
                let inner = self.ctor()?;
                self.eat(b')')?;
                Ok(Ctor::Sym2(Box::new(inner)))
            }
            "tensor" => {
                self.eat(b'(')?;
                let a = self.ctor()?;
                self.eat(b',')?;
                let b = self.ctor()?;
                self.eat(b')')?;
                Ok(Ctor::Tensor(Box::new(a), Box::new(b)))
            }
            "spinrep" => {
                self.eat(b'(')?;
                let n = self.integer()?;
                self.eat(b')')?;
                let share = self.share_suffix()?;
                Ok(Ctor::SpinRep(n, share))
            }
            "adj" => {
                self.eat(b'(')?;
                let g = self.group()?;
                self.eat(b')')?;
                let share = self.share_suffix()?;
                Ok(Ctor::Adj(g, share))
            }
            other => {
                self.pos = at;
                Err(self.err(&format!(
                    "expected a constructor, found '{}'",
                    if other.is_empty() { "<end>" } else { other }
                )))
            }
        }
    }

    fn group(&mut self) -> Result<Group, ParseError> {
        self.skip_ws();
        let mut z = false;
        if self.src[self.pos..].starts_with(b"z*") {
            z = true;
            self.pos += 2;
        }
        let at = self.pos;
        let name = self.ident();
        let family = match name.as_str() {
            "so" => Family::So,
            "su" => Family::Su,
            "sp" => Family::Sp,
            "u" => Family::U,
            other => {
                self.pos = at;
                return Err(self.err(&format!("expected a family (so|su|sp|u), found '{other}'")));
            }
        };
        self.eat(b'(')?;
        let size = self.integer()?;
        self.eat(b')')?;
        Ok(Group { z, family, size })
    }
}

/// Canonical pretty-printer; `parse(pretty(e)) == e` on well-formed trees.
pub fn pretty(expr: &RepExpr) -> String {
    let terms: Vec<String> = expr.terms.iter().map(pretty_ctor).collect();
    terms.join(" + ")
}

fn pretty_group(g: &Group) -> String {
    format!(
        "{}{}({})",
        if g.z { "z*" } else { "" },
        g.family.name(),
        g.size
    )
}

fn share(s: &Option<u32>) -> String {
    s.map(|k| format!("#{k}")).unwrap_or_default()
}

fn pretty_ctor(c: &Ctor) -> String {
    match c {
        Ctor::Trivial(d) => format!("trivial({d})"),
        Ctor::Std(g, s) => format!("std({}){}", pretty_group(g), share(s)),
        Ctor::Dual(inner) => format!("dual({})", pretty_ctor(inner)),
        Ctor::Wedge(k, inner) => format!("wedge({k}, {})", pretty_ctor(inner)),
        Ctor::Sym2(inner) => format!("sym2({})", pretty_ctor(inner)),
        Ctor::Tensor(a, b) => format!("tensor({}, {})", pretty_ctor(a), pretty_ctor(b)),
        Ctor::SpinRep(n, s) => format!("spinrep({n}){}", share(s)),
        Ctor::Adj(g, s) => format!("adj({}){}", pretty_group(g), share(s)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_paper_expressions() {
        let e = parse("std(sp(1)) + std(sp(1)) + trivial(4)").unwrap();
        assert_eq!(e.terms.len(), 3);
        let e = parse("wedge(3, std(su(6)))").unwrap();
        assert!(matches!(e.terms[0], Ctor::Wedge(3, _)));
        let e = parse("std(so(3))#1 + std(so(3))#1").unwrap();
        assert!(matches!(e.terms[0], Ctor::Std(_, Some(1))));
    }

    #[test]
    fn z_marker_and_nesting() {
        let e = parse("std(z*sp(2)) + std(u(2))").unwrap();
        match &e.terms[0] {
            Ctor::Std(g, None) => {
                assert!(g.z);
                assert_eq!(g.family, Family::Sp);
            }
            other => panic!("unexpected {other:?}"),
        }
        let e = parse("tensor(std(so(3)), std(sp(1)))").unwrap();
        assert!(matches!(e.terms[0], Ctor::Tensor(_, _)));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("std(xy(3))").unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse("std(so(3)) + ").unwrap_err();
        assert!(err.position >= 12);
        assert!(parse("wedge(3 std(su(6)))").is_err());
    }

    #[test]
    fn roundtrip_examples() {
        for src in [
            "std(sp(1)) + std(sp(1)) + trivial(4)",
            "wedge(3, std(su(6)))",
            "std(so(3))#1 + std(so(3))#1",
            "tensor(std(z*so(4)), dual(std(su(3))))",
            "sym2(std(su(2))) + spinrep(7)#2 + adj(sp(1))#2",
        ] {
            let e = parse(src).unwrap();
            let printed = pretty(&e);
            assert_eq!(parse(&printed).unwrap(), e, "{src} -> {printed}");
        }
    }
}
