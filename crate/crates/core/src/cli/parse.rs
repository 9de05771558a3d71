//! Grammar of the command line:
//!
//! ```text
//! field   = "Q" | "Q(sqrt" int ")" | "Fq(t;q=" int ")"
//! expr    = term { ("+" | "-") term }
//! term    = unary { ("*" | "/") unary }
//! unary   = "-" unary | power
//! power   = atom [ "^" [ "-" ] int ]
//! atom    = int | "w" | "t" | "a" | "(" expr ")"
//! place   = int | "[" expr { "," expr } "]" | expr | "inf"
//! ideal   = factor { ("*" | "/") factor }
//! factor  = ( "[" expr { "," expr } "]" | "(" expr ")" | int ) [ "^" [ "-" ] int ]
//! adele   = "{" [ entry { "," entry } ";" ] "tail" expr [ ";" "inf" coord { "," coord } ] "}"
//! entry   = place ":" expr [ "prec" int ]
//! coord   = float | complex | expr [ "prec" int ]
//! ```
//!
//! `w` is the integral generator of a quadratic field, `t` the variable of
//! `F_q(t)` and `a` the generator of `F_q` over its prime field.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::domains::{FunctionField, GlobalField, GlobalFieldSpec, QuadraticField, Rationals};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Int(digits.parse().expect("ascii digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()[],".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn new(s: &str) -> Result<Self> {
        Ok(Parser { toks: tokenize(s)?, pos: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {c:?} at token {}", self.pos)))
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.toks.len()
    }

    fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(Error::Parse(format!("unexpected trailing input at token {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn exponent(&mut self) -> Result<Option<i64>> {
        if !self.eat('^') {
            return Ok(None);
        }
        let neg = self.eat('-');
        match self.toks.get(self.pos) {
            Some(Tok::Int(n)) => {
                let n = n.to_i64().ok_or_else(|| Error::Parse("exponent too large".into()))?;
                self.pos += 1;
                Ok(Some(if neg { -n } else { n }))
            }
            _ => Err(Error::Parse("expected an integer exponent".into())),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        Ok(match self.exponent()? {
            Some(n) => Expr::Pow(Box::new(base), n),
            None => base,
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            other => Err(Error::Parse(format!("expected a number, symbol or '(' but found {other:?}"))),
        }
    }

    fn generator_list(&mut self) -> Result<Vec<Expr>> {
        self.expect('[')?;
        let mut gens = vec![self.expr()?];
        while self.eat(',') {
            gens.push(self.expr()?);
        }
        self.expect(']')?;
        Ok(gens)
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser::new(s)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// A factor of an ideal expression.
#[derive(Debug, Clone, PartialEq)]
pub enum IdealAtom {
    Generators(Vec<Expr>),
    Principal(Expr),
}

/// `prod atom^exp`.
pub fn parse_ideal(s: &str) -> Result<Vec<(IdealAtom, i64)>> {
    let mut p = Parser::new(s)?;
    let mut out = Vec::new();
    let mut sign = 1;
    loop {
        let atom = match p.peek() {
            Some(Tok::Sym('[')) => IdealAtom::Generators(p.generator_list()?),
            Some(Tok::Sym('(')) => {
                p.pos += 1;
                let e = p.expr()?;
                p.expect(')')?;
                IdealAtom::Principal(e)
            }
            _ => IdealAtom::Principal(p.atom()?),
        };
        let e = p.exponent()?.unwrap_or(1);
        out.push((atom, sign * e));
        if p.eat('*') {
            sign = 1;
        } else if p.eat('/') {
            sign = -1;
        } else {
            break;
        }
    }
    p.finish()?;
    Ok(out)
}

/// `[g, ...]` or anything else, verbatim.
pub enum PlaceSyntax {
    Generators(Vec<Expr>),
    Expr(Expr),
    Named(String),
}

pub fn parse_place(s: &str) -> Result<PlaceSyntax> {
    let t = s.trim();
    if matches!(t, "inf" | "real0" | "real1" | "complex0") {
        return Ok(PlaceSyntax::Named(t.to_string()));
    }
    let mut p = Parser::new(t)?;
    let out = if p.peek() == Some(&Tok::Sym('[')) {
        PlaceSyntax::Generators(p.generator_list()?)
    } else {
        PlaceSyntax::Expr(p.expr()?)
    };
    p.finish()?;
    Ok(out)
}

pub enum AnyField {
    Rationals(Rationals),
    Quadratic(QuadraticField),
    Function(FunctionField),
}

pub fn parse_field(s: &str) -> Result<AnyField> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "Q" {
        return Ok(AnyField::Rationals(Rationals));
    }
    if let Some(inner) = compact.strip_prefix("Q(sqrt").and_then(|r| r.strip_suffix(')')) {
        let inner = inner.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(inner);
        let d: i64 = inner.parse().map_err(|_| Error::InvalidField(s.to_string()))?;
        return Ok(AnyField::Quadratic(QuadraticField::new(d)?));
    }
    if let Some(inner) = compact.strip_prefix("Fq(t;q=").and_then(|r| r.strip_suffix(')')) {
        let q: u32 = inner.parse().map_err(|_| Error::InvalidField(s.to_string()))?;
        return Ok(AnyField::Function(FunctionField::with_order(q)?));
    }
    Err(Error::InvalidField(format!("{s:?}; expected Q, Q(sqrt d) or Fq(t;q=N)")))
}

impl AnyField {
    pub fn spec(&self) -> GlobalFieldSpec {
        match self {
            AnyField::Rationals(k) => k.spec(),
            AnyField::Quadratic(k) => k.spec(),
            AnyField::Function(k) => k.spec(),
        }
    }
}

/// Splits at `sep` outside brackets.
pub fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// An expression with an optional trailing `prec n`.
pub fn parse_value(s: &str) -> Result<(Expr, Option<i64>)> {
    let mut p = Parser::new(s)?;
    let e = p.expr()?;
    let prec = if p.peek() == Some(&Tok::Ident("prec".into())) {
        p.pos += 1;
        let neg = p.eat('-');
        match p.toks.get(p.pos) {
            Some(Tok::Int(n)) => {
                p.pos += 1;
                let n = n.to_i64().ok_or_else(|| Error::Parse("precision too large".into()))?;
                Some(if neg { -n } else { n })
            }
            _ => return Err(Error::Parse("expected an integer after prec".into())),
        }
    } else {
        None
    };
    p.finish()?;
    Ok((e, prec))
}

/// The syntactic pieces of an adèle literal.
pub struct AdeleSyntax<'a> {
    pub entries: Vec<(&'a str, &'a str)>,
    pub tail: &'a str,
    pub inf: Option<Vec<&'a str>>,
}

pub fn parse_adele(s: &str) -> Result<AdeleSyntax<'_>> {
    let t = s.trim();
    let body = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("adele literal must be enclosed in braces: {s:?}")))?;
    let sections: Vec<&str> = split_top(body, ';').into_iter().map(str::trim).collect();
    let mut entries = Vec::new();
    let mut tail = None;
    let mut inf = None;
    for (i, sec) in sections.iter().enumerate() {
        if let Some(rest) = keyword(sec, "tail") {
            if tail.is_some() {
                return Err(Error::Parse("duplicate tail".into()));
            }
            tail = Some(rest);
        } else if let Some(rest) = keyword(sec, "inf") {
            inf = Some(split_top(rest, ',').into_iter().map(str::trim).collect());
        } else if i == 0 {
            if sec.is_empty() {
                continue;
            }
            for entry in split_top(sec, ',') {
                let parts = split_top(entry, ':');
                if parts.len() != 2 {
                    return Err(Error::Parse(format!("expected place: value, found {entry:?}")));
                }
                entries.push((parts[0].trim(), parts[1].trim()));
            }
        } else {
            return Err(Error::Parse(format!("unexpected section {sec:?}")));
        }
    }
    let tail = tail.ok_or_else(|| Error::Parse("adele literal needs a tail".into()))?;
    Ok(AdeleSyntax { entries, tail, inf })
}

fn keyword<'a>(s: &'a str, kw: &str) -> Option<&'a str> {
    let rest = s.strip_prefix(kw)?;
    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
        Some(rest.trim())
    } else {
        None
    }
}

/// Evaluates an expression in `field`, given the meaning of symbols.
pub fn eval<F: GlobalField>(field: &F, e: &Expr, var: &dyn Fn(&str) -> Option<F::Elem>) -> Result<F::Elem> {
    Ok(match e {
        Expr::Int(n) => from_bigint(field, n),
        Expr::Var(s) => var(s).ok_or_else(|| Error::Parse(format!("unknown symbol {s:?} in {}", field.spec())))?,
        Expr::Neg(x) => field.neg(&eval(field, x, var)?),
        Expr::Add(x, y) => field.add(&eval(field, x, var)?, &eval(field, y, var)?),
        Expr::Sub(x, y) => field.sub(&eval(field, x, var)?, &eval(field, y, var)?),
        Expr::Mul(x, y) => field.mul(&eval(field, x, var)?, &eval(field, y, var)?),
        Expr::Div(x, y) => field.div(&eval(field, x, var)?, &eval(field, y, var)?).ok_or(Error::ZeroElement)?,
        Expr::Pow(x, n) => field.pow(&eval(field, x, var)?, *n).ok_or(Error::ZeroElement)?,
    })
}

fn from_bigint<F: GlobalField>(field: &F, n: &BigInt) -> F::Elem {
    if let Some(m) = n.to_i64() {
        return field.from_int(m);
    }
    let base = BigInt::from(1u64 << 32);
    let mut digits = Vec::new();
    let mut m = n.clone();
    while !m.is_zero() {
        let (q, r) = num_integer::Integer::div_mod_floor(&m, &base);
        digits.push(r.to_i64().unwrap());
        m = q;
    }
    let b = field.from_int(1 << 32);
    digits.iter().rev().fold(field.zero(), |acc, &d| field.add(&field.mul(&acc, &b), &field.from_int(d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let k = Rationals;
        let v = |e: &str| eval(&k, &parse_expr(e).unwrap(), &|_| None).unwrap().to_string();
        assert_eq!(v("98/3"), "98/3");
        assert_eq!(v("-2^3 + 1"), "-7");
        assert_eq!(v("(1/2)^-2"), "4");
        assert_eq!(v("123456789012345678901234567890"), "123456789012345678901234567890");
        assert!(parse_expr("1 +").is_err());
        assert!(parse_expr("2 $ 3").is_err());
    }

    #[test]
    fn literals() {
        let a = parse_adele("{2: 1/2, 3: 7 prec 4; tail 1; inf 0.0}").unwrap();
        assert_eq!(a.entries, vec![("2", "1/2"), ("3", "7 prec 4")]);
        assert_eq!(a.tail, "1");
        assert_eq!(a.inf.unwrap(), vec!["0.0"]);
        let b = parse_adele("{[2, 1+w]: (1+w)/2; tail 1}").unwrap();
        assert_eq!(b.entries, vec![("[2, 1+w]", "(1+w)/2")]);
        assert!(parse_adele("{tail 5/6}").unwrap().entries.is_empty());
        assert!(parse_adele("{2: 1}").is_err());
        assert_eq!(parse_value("7 prec 4").unwrap().1, Some(4));
    }

    #[test]
    fn fields_and_ideals() {
        assert!(matches!(parse_field("Q").unwrap(), AnyField::Rationals(_)));
        assert!(matches!(parse_field("Q(sqrt -5)").unwrap(), AnyField::Quadratic(_)));
        assert!(matches!(parse_field("Q(sqrt(-23))").unwrap(), AnyField::Quadratic(_)));
        assert!(matches!(parse_field("Fq(t;q=4)").unwrap(), AnyField::Function(_)));
        assert!(parse_field("R").is_err());
        assert!(parse_field("Q(sqrt 4)").is_err());
        let i = parse_ideal("[2, 1+w]^2 / (3)").unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!(i[1].1, -1);
    }
}
