//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+' | '~') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | INT '/' INT | 'i' | 'z' INT | PARAM
//!         | 'conj' '(' expr ')' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coeff::Coefficient;
use crate::error::{ParseError, ParseErrorKind};
use crate::poly::MixedPoly;

pub const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(BigRational),
    Var(usize),
    Param,
    I,
    Conj,
    Tilde,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(r) => format!("number `{}`", r),
            Tok::Var(i) => format!("variable `z{}`", i),
            Tok::Param => "parameter".into(),
            Tok::I => "`i`".into(),
            Tok::Conj => "`conj`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
    /// Raw digits for integer literals, used for exponents.
    digits: Option<String>,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
    line: usize,
    column: usize,
    param: Option<&'a str>,
}

impl<'a> Lexer<'a> {
    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn err(&self, line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line, column, kind }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        s
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let (line, column) = (self.line, self.column);
            let Some(c) = self.peek() else {
                out.push(Spanned { tok: Tok::End, line, column, digits: None });
                return Ok(out);
            };
            let mut digits = None;
            let tok = match c {
                '0'..='9' => {
                    let num = self.digits();
                    digits = Some(num.clone());
                    let numer: BigInt = num.parse().unwrap();
                    let save = (self.chars.clone(), self.line, self.column);
                    self.skip_ws();
                    if self.peek() == Some('/') {
                        self.bump();
                        self.skip_ws();
                        let (dl, dc) = (self.line, self.column);
                        let den = self.digits();
                        if den.is_empty() {
                            let found = self.peek().map_or(Tok::End.describe(), |c| format!("`{}`", c));
                            return Err(self.err(dl, dc, ParseErrorKind::UnexpectedToken {
                                found,
                                expected: "integer denominator".into(),
                            }));
                        }
                        let den: BigInt = den.parse().unwrap();
                        if den.is_zero() {
                            return Err(self.err(dl, dc, ParseErrorKind::ZeroDenominator));
                        }
                        digits = None;
                        Tok::Number(BigRational::new(numer, den))
                    } else {
                        (self.chars, self.line, self.column) = save;
                        Tok::Number(BigRational::from_integer(numer))
                    }
                }
                'a'..='z' | 'A'..='Z' | '_' => {
                    let start = self.chars.peek().unwrap().0;
                    let mut end = start;
                    while let Some(&(i, c)) = self.chars.peek() {
                        if c.is_ascii_alphabetic() || c == '_' {
                            end = i + c.len_utf8();
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    let word = &self.src[start..end];
                    match word {
                        "z" => {
                            let idx = self.digits();
                            if idx.is_empty() {
                                return Err(self.err(line, column, ParseErrorKind::UnexpectedToken {
                                    found: "`z`".into(),
                                    expected: "indexed variable such as `z1`".into(),
                                }));
                            }
                            let index: usize = idx.parse().unwrap_or(usize::MAX);
                            Tok::Var(index)
                        }
                        "i" => Tok::I,
                        "conj" => Tok::Conj,
                        w if Some(w) == self.param => Tok::Param,
                        w => {
                            return Err(self.err(line, column, ParseErrorKind::UnexpectedToken {
                                found: format!("identifier `{}`", w),
                                expected: "variable, number or `i`".into(),
                            }))
                        }
                    }
                }
                _ => {
                    self.bump();
                    match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        '~' => Tok::Tilde,
                        other => return Err(self.err(line, column, ParseErrorKind::UnexpectedChar(other))),
                    }
                }
            };
            out.push(Spanned { tok, line, column, digits });
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    num_vars: usize,
    /// Total variables in the result, including the parameter slot.
    ring_vars: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, t: &Spanned, expected: &str) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            kind: ParseErrorKind::UnexpectedToken {
                found: t.tok.describe(),
                expected: expected.into(),
            },
        }
    }

    fn expr(&mut self) -> Result<MixedPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MixedPoly, ParseError> {
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MixedPoly, ParseError> {
        match self.peek().tok {
            Tok::Minus => {
                self.next();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            Tok::Tilde => {
                self.next();
                Ok(self.unary()?.conjugate())
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MixedPoly, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let t = self.next();
        let digits = match (&t.tok, &t.digits) {
            (Tok::Number(_), Some(d)) => d.clone(),
            _ => return Err(self.unexpected(&t, "integer exponent")),
        };
        let e: u64 = digits.parse().unwrap_or(u64::MAX);
        if e > MAX_EXPONENT as u64 {
            return Err(ParseError {
                line: t.line,
                column: t.column,
                kind: ParseErrorKind::ExponentOverflow(digits),
            });
        }
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self) -> Result<MixedPoly, ParseError> {
        let t = self.next();
        let k = self.ring_vars;
        match t.tok {
            Tok::Number(ref r) => Ok(MixedPoly::constant(k, Coefficient::real(r.clone()))),
            Tok::I => Ok(MixedPoly::constant(k, Coefficient::i())),
            Tok::Var(index) => {
                if index == 0 || index > self.num_vars {
                    return Err(ParseError {
                        line: t.line,
                        column: t.column,
                        kind: ParseErrorKind::VariableOutOfRange {
                            index,
                            num_vars: self.num_vars,
                        },
                    });
                }
                Ok(MixedPoly::var(k, index - 1).unwrap())
            }
            Tok::Param => Ok(MixedPoly::var(k, self.num_vars).unwrap()),
            Tok::Conj => {
                let open = self.next();
                if open.tok != Tok::LParen {
                    return Err(self.unexpected(&open, "`(` after `conj`"));
                }
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(self.unexpected(&close, "`)`"));
                }
                Ok(inner.conjugate())
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(self.unexpected(&close, "`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.unexpected(&t, "variable, number, `i` or `(`")),
        }
    }
}

fn run(text: &str, num_vars: usize, param: Option<&str>) -> Result<MixedPoly, ParseError> {
    let toks = Lexer {
        chars: text.char_indices().peekable(),
        src: text,
        line: 1,
        column: 1,
        param,
    }
    .tokens()?;
    let mut p = Parser {
        toks,
        pos: 0,
        num_vars,
        ring_vars: num_vars + usize::from(param.is_some()),
    };
    let poly = p.expr()?;
    let end = p.next();
    if end.tok != Tok::End {
        return Err(p.unexpected(&end, "operator or end of input"));
    }
    Ok(poly)
}

/// Parses `text` as a polynomial in `z1..z{num_vars}` and their conjugates.
pub fn parse(text: &str, num_vars: usize) -> Result<MixedPoly, ParseError> {
    run(text, num_vars, None)
}

/// Like [`parse`], but also accepts the identifier `param` as an extra
/// variable placed after `z{num_vars}`. The result has `num_vars + 1`
/// variables.
pub fn parse_with_parameter(text: &str, num_vars: usize, param: &str) -> Result<MixedPoly, ParseError> {
    run(text, num_vars, Some(param))
}

/// The largest variable index `N` such that `zN` appears in `text`, or 0.
/// Used to infer a variable count when none is given.
pub fn max_variable_index(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'z' && (i == 0 || !bytes[i - 1].is_ascii_alphanumeric()) {
            let mut j = i + 1;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(n) = text[i + 1..j].parse::<usize>() {
                best = best.max(n);
            }
            i = j.max(i + 1);
        } else {
            i += 1;
        }
    }
    best
}
