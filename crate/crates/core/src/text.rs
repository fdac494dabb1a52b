//! Concrete syntax for differential polynomials and instance files.
//!
//! Entries are sums of terms `coeff*D^k`, coefficients are rational
//! functions in `t`, e.g. `1 + (t+2)*D + D^2` or `(-1/2)/(t)*D`. The parser
//! accepts general expressions built from integers, `t`, `D`, `+ - * / ^`
//! and parentheses, evaluated in the Ore ring (so `D*t` means `t*D + 1`).
//! Division is only allowed by elements of degree zero in `D`.
//!
//! Instance files:
//!
//! ```text
//! # comment
//! 2 2 euler
//! D; 1
//! 0; t*D + 1
//! ```

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::field::{BigRat, Derivation, RatFun, TPoly};
use crate::matrix::OreMatrix;
use crate::ore::OrePoly;

/// Canonical text for an entry: ascending powers of `D`, reduced
/// coefficients with monic denominators.
pub fn print_entry(f: &OrePoly) -> String {
    let terms: Vec<String> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| render_term(c, k))
        .collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, term) in terms.iter().enumerate() {
        match (i, term.strip_prefix('-')) {
            (0, _) => out.push_str(term),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
    }
    out
}

fn render_term(c: &RatFun, k: usize) -> String {
    let dpow = match k {
        0 => String::new(),
        1 => "D".to_string(),
        _ => format!("D^{k}"),
    };
    if k == 0 {
        return c.to_string();
    }
    if c.is_polynomial() {
        let num = c.num();
        if num.is_one() {
            return dpow;
        }
        if num.term_count() == 1 {
            if (-num).is_one() {
                return format!("-{dpow}");
            }
            return format!("{num}*{dpow}");
        }
        return format!("({num})*{dpow}");
    }
    format!("{c}*{dpow}")
}

/// Parses one entry. Line and column numbers in errors are 1-based and
/// relative to `text`.
pub fn parse_entry(text: &str, derivation: Derivation) -> Result<OrePoly> {
    parse_entry_at(text, derivation, 1, 1)
}

fn parse_entry_at(text: &str, derivation: Derivation, line: usize, col: usize) -> Result<OrePoly> {
    let tokens = tokenize(text, line, col)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        derivation,
        end: (line, col + text.chars().count()),
    };
    let value = parser.expr()?;
    if let Some(tok) = parser.tokens.get(parser.pos) {
        return Err(parse_error(tok.line, tok.column, "unexpected trailing input"));
    }
    Ok(value)
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    T,
    D,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str, line: usize, col: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = col + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            't' => Tok::T,
            'D' => Tok::D,
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            other => {
                return Err(parse_error(line, column, format!("unexpected character '{other}'")));
            }
        };
        out.push(Token { tok, line, column });
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    derivation: Derivation,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|t| (t.line, t.column))
            .unwrap_or(self.end)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        parse_error(line, column, message)
    }

    fn expr(&mut self) -> Result<OrePoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<OrePoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let (line, column) = self.here();
                    let divisor = self.unary()?;
                    if divisor.is_zero() {
                        return Err(parse_error(line, column, "division by zero"));
                    }
                    if !divisor.is_unit() {
                        return Err(parse_error(line, column, "division by an expression containing D"));
                    }
                    let inv = divisor.lc().inv()?;
                    acc = &acc * &OrePoly::constant(inv, self.derivation);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<OrePoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<OrePoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = match self.peek() {
            Some(Tok::Int(k)) => k.to_usize().ok_or_else(|| self.error("exponent too large"))?,
            _ => return Err(self.error("expected a non-negative integer exponent")),
        };
        self.pos += 1;
        if base.is_unit() && base.coeff(0).is_polynomial() && base.coeff(0).num().term_count() == 1 {
            // fast path for monomials such as t^k or 3^k
            let c = base.coeff(0);
            let num = c.num();
            let k = num.degree().unwrap_or(0);
            let coeff = pow_rat(&num.lc(), exp);
            return Ok(OrePoly::constant(
                RatFun::from_poly(TPoly::monomial(coeff, k * exp)),
                self.derivation,
            ));
        }
        let mut acc = OrePoly::one(self.derivation);
        for _ in 0..exp {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<OrePoly> {
        let dv = self.derivation;
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Int(k)) => {
                self.pos += 1;
                Ok(OrePoly::constant(RatFun::constant(BigRat::from_integer(k)), dv))
            }
            Some(Tok::T) => {
                self.pos += 1;
                Ok(OrePoly::constant(RatFun::t(), dv))
            }
            Some(Tok::D) => {
                self.pos += 1;
                Ok(OrePoly::d_power(1, dv))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.error("expected a number, 't', 'D' or '('")),
            None => Err(self.error("unexpected end of entry")),
        }
    }
}

fn pow_rat(base: &BigRat, exp: usize) -> BigRat {
    let mut acc = BigRat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Renders a matrix in the instance-file format.
pub fn print_instance(m: &OreMatrix) -> String {
    let mut out = format!("{} {}", m.rows(), m.cols());
    if m.derivation() == Derivation::Euler {
        out.push_str(" euler");
    }
    out.push('\n');
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(print_entry).collect();
        out.push_str(&row.join("; "));
        out.push('\n');
    }
    out
}

/// Parses an instance file: a header `n m [euler|standard]` followed by `n`
/// lines of `m` entries separated by `;`. `#` starts a comment.
pub fn parse_instance(text: &str) -> Result<OreMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "missing header line 'n m [euler]'"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let dim = |idx: usize, what: &str| -> Result<usize> {
        let f = fields
            .get(idx)
            .ok_or_else(|| parse_error(hline, 1, format!("header is missing {what}")))?;
        match f.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(parse_error(hline, 1, format!("{what} must be a positive integer, got '{f}'"))),
        }
    };
    let n = dim(0, "the row count")?;
    let m = dim(1, "the column count")?;
    let derivation = match fields.get(2).copied() {
        None | Some("standard") => Derivation::Standard,
        Some("euler") => Derivation::Euler,
        Some(other) => {
            return Err(parse_error(hline, 1, format!("unknown derivation '{other}'")));
        }
    };
    if fields.len() > 3 {
        return Err(parse_error(hline, 1, "unexpected extra fields in header"));
    }

    let mut rows = Vec::with_capacity(n);
    for (lineno, line) in lines {
        if rows.len() == n {
            return Err(parse_error(lineno, 1, format!("expected only {n} rows")));
        }
        let mut row = Vec::with_capacity(m);
        let mut col = 1;
        for piece in line.split(';') {
            row.push(parse_entry_at(piece, derivation, lineno, col)?);
            col += piece.chars().count() + 1;
        }
        if row.len() != m {
            return Err(parse_error(
                lineno,
                1,
                format!("expected {m} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_error(
            text.lines().count().max(1),
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    OreMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    const STD: Derivation = Derivation::Standard;

    #[test]
    fn parse_examples() {
        let f = parse_entry("1 + (t+2)*D + D^2", STD).unwrap();
        assert_eq!(
            f,
            OrePoly::new(
                vec![
                    RatFun::one(),
                    RatFun::from_poly(TPoly::from_ints(&[2, 1])),
                    RatFun::one()
                ],
                STD
            )
        );
        assert!(parse_entry("0", STD).unwrap().is_zero());
        let g = parse_entry("(-1/2)/(t)*D", STD).unwrap();
        let c = RatFun::new(TPoly::constant(rat(-1, 2)), TPoly::t());
        assert_eq!(g, OrePoly::monomial(c, 1, STD));
    }

    #[test]
    fn operator_products_follow_commutation() {
        assert_eq!(parse_entry("D*t", STD).unwrap(), parse_entry("t*D + 1", STD).unwrap());
    }

    #[test]
    fn print_examples() {
        assert_eq!(print_entry(&OrePoly::zero(STD)), "0");
        let f = parse_entry("-2/t + ((-1+2*t+t^2)/t)*D + D^2", STD).unwrap();
        assert_eq!(print_entry(&f), "(-2)/(t) + (-1 + 2*t + t^2)/(t)*D + D^2");
        assert_eq!(print_entry(&parse_entry("2 + t + D", STD).unwrap()), "2 + t + D");
        assert_eq!(print_entry(&parse_entry("1 - t*D - D^3", STD).unwrap()), "1 - t*D - D^3");
        assert_eq!(print_entry(&parse_entry("(t+1)*D - 1/2*D^2", STD).unwrap()), "(1 + t)*D - 1/2*D^2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_entry("1 + * D", STD) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_entry("1/(D+1)", STD), Err(Error::Parse { .. })));
        assert!(matches!(parse_entry("1/0", STD), Err(Error::Parse { .. })));
        assert!(matches!(parse_entry("2x", STD), Err(Error::Parse { .. })));
        assert!(matches!(parse_entry("(t+1", STD), Err(Error::Parse { .. })));
    }

    #[test]
    fn instance_round_trip() {
        let text = "# sample\n2 2 euler\nD; 1\n0; t*D + 1\n";
        let m = parse_instance(text).unwrap();
        assert_eq!(m.derivation(), Derivation::Euler);
        assert_eq!(parse_instance(&print_instance(&m)).unwrap(), m);
    }

    #[test]
    fn instance_errors() {
        assert!(parse_instance("").is_err());
        assert!(parse_instance("2 2\nD; 1\n").is_err());
        assert!(parse_instance("1 2\nD\n").is_err());
        match parse_instance("1 2\nD; 1 +\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
