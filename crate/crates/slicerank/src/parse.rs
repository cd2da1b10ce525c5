//! Text formats for polynomials and families of linear subspaces.
//!
//! A polynomial file starts with a `vars:` header naming the variables in
//! order, may carry a `degree:` line, and then holds one polynomial that may
//! span several lines:
//!
//! ```text
//! # f_2
//! vars: x1 x2 y12
//! x1*x2*y12
//! ```
//!
//! A family file has the same header followed by blocks of linear forms, one
//! form per line, blocks separated by blank lines. `#` starts a comment.

use std::collections::HashMap;

use num_bigint::BigInt;
use slicerank_core::{Field, Monomial, Polynomial, Subspace};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: undeclared variable `{name}`")]
    UndeclaredVariable { line: usize, column: usize, name: String },
    #[error("{line}:{column}: term of degree {found} in a polynomial of degree {expected}")]
    Inhomogeneous {
        line: usize,
        column: usize,
        expected: u32,
        found: u32,
    },
    #[error("{line}:{column}: zero denominator")]
    ZeroDenominator { line: usize, column: usize },
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("missing `vars:` header")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Header { line: usize, message: String },
    #[error("family file declares no subspaces")]
    EmptyFamily,
    #[error("{0}")]
    Algebra(#[from] slicerank_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, first_line: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (offset, line_text) in text.lines().enumerate() {
        let line = first_line + offset;
        let code = line_text.split('#').next().unwrap_or("");
        let chars: Vec<char> = code.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let single = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                '/' => Some(Tok::Slash),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Spanned { tok, line, column });
                i += 1;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let tok = Tok::Int(digits.parse().expect("ascii digits"));
                out.push(Spanned { tok, line, column });
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let tok = Tok::Ident(chars[start..i].iter().collect());
                out.push(Spanned { tok, line, column });
            } else {
                return Err(ParseError::Syntax {
                    line,
                    column,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    Ok(out)
}

/// Variable order with lookup by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableOrder {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableOrder {
    pub fn new<I, S>(names: I) -> Result<Self, ParseError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(ParseError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VariableOrder { names, index })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Resolves a name; `y21` and `y2_1` fall back to `y12` and `y1_2`.
    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied().or_else(|| self.index.get(&swapped_pair(name)?).copied())
    }
}

fn swapped_pair(name: &str) -> Option<String> {
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let (stem, digits) = name.split_at(split);
    if let Some((a, b)) = digits.split_once('_') {
        if a.chars().all(|c| c.is_ascii_digit()) && !b.is_empty() && b.chars().all(|c| c.is_ascii_digit()) {
            return Some(format!("{stem}{b}_{a}"));
        }
        return None;
    }
    let d: Vec<char> = digits.chars().collect();
    (d.len() == 2 && d.iter().all(char::is_ascii_digit)).then(|| format!("{stem}{}{}", d[1], d[0]))
}

struct Parser<'a, K: Field> {
    field: &'a K,
    vars: &'a VariableOrder,
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

struct Term<K: Field> {
    coeff: K::Elem,
    exponents: Vec<u32>,
    line: usize,
    column: usize,
}

impl<K: Field> Parser<'_, K> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.peek().map_or(self.end, |s| (s.line, s.column));
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().map(|s| &s.tok) {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error_here("expected an integer")),
        }
    }

    fn factor(&mut self, term: &mut Term<K>) -> Result<(), ParseError> {
        let Some(s) = self.peek().cloned() else {
            return Err(self.error_here("expected a coefficient or a variable"));
        };
        self.pos += 1;
        match s.tok {
            Tok::Int(num) => {
                let value = if matches!(self.peek().map(|t| &t.tok), Some(Tok::Slash)) {
                    self.pos += 1;
                    let den = self.int()?;
                    self.field.from_fraction(&num, &den).ok_or(ParseError::ZeroDenominator {
                        line: s.line,
                        column: s.column,
                    })?
                } else {
                    self.field.from_bigint(&num)
                };
                term.coeff = self.field.mul(&term.coeff, &value);
            }
            Tok::Ident(name) => {
                let var = self.vars.lookup(&name).ok_or(ParseError::UndeclaredVariable {
                    line: s.line,
                    column: s.column,
                    name,
                })?;
                let exp = if matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
                    self.pos += 1;
                    let e = self.int()?;
                    u32::try_from(&e).map_err(|_| ParseError::Syntax {
                        line: s.line,
                        column: s.column,
                        message: format!("exponent {e} is too large"),
                    })?
                } else {
                    1
                };
                term.exponents[var] += exp;
            }
            _ => {
                return Err(ParseError::Syntax {
                    line: s.line,
                    column: s.column,
                    message: "expected a coefficient or a variable".into(),
                })
            }
        }
        Ok(())
    }

    fn term(&mut self, negative: bool) -> Result<Term<K>, ParseError> {
        let (line, column) = self.peek().map_or(self.end, |s| (s.line, s.column));
        let one = self.field.one();
        let mut term = Term {
            coeff: if negative { self.field.neg(&one) } else { one },
            exponents: vec![0; self.vars.len()],
            line,
            column,
        };
        self.factor(&mut term)?;
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Star)) {
            self.pos += 1;
            self.factor(&mut term)?;
        }
        Ok(term)
    }

    fn terms(&mut self) -> Result<Vec<Term<K>>, ParseError> {
        let mut out = Vec::new();
        let mut negative = match self.peek().map(|t| &t.tok) {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            out.push(self.term(negative)?);
            negative = match self.peek().map(|t| &t.tok) {
                None => return Ok(out),
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                Some(_) => return Err(self.error_here("expected `+`, `-` or `*`")),
            };
            self.pos += 1;
        }
    }
}

/// Parses a homogeneous polynomial whose first line is `first_line` in the
/// surrounding file. With `degree = None` the degree is read off the first
/// term; a text with no variables at all (such as `0`) then has degree 0.
pub fn parse_polynomial_at<K: Field>(
    field: &K,
    vars: &VariableOrder,
    text: &str,
    degree: Option<u32>,
    first_line: usize,
) -> Result<Polynomial<K>, ParseError> {
    let toks = lex(text, first_line)?;
    let end = toks.last().map_or((first_line, 1), |s| (s.line, s.column + 1));
    if toks.is_empty() {
        return Err(ParseError::Syntax {
            line: end.0,
            column: end.1,
            message: "empty polynomial".into(),
        });
    }
    let mut parser = Parser {
        field,
        vars,
        toks,
        pos: 0,
        end,
    };
    let terms = parser.terms()?;
    let term_degree = |t: &Term<K>| t.exponents.iter().sum::<u32>();
    // A bare `0` is degree-agnostic.
    let is_zero_literal = |t: &Term<K>| term_degree(t) == 0 && field.is_zero(&t.coeff);
    let expected = degree
        .or_else(|| terms.iter().find(|t| !is_zero_literal(t)).map(term_degree))
        .unwrap_or(0);
    let mut poly = Polynomial::zero(field, vars.len(), expected);
    for t in terms {
        let found = term_degree(&t);
        if found != expected && !is_zero_literal(&t) {
            return Err(ParseError::Inhomogeneous {
                line: t.line,
                column: t.column,
                expected,
                found,
            });
        }
        if found == expected {
            let mono = Polynomial::from_terms(field, vars.len(), expected, [(Monomial::new(t.exponents), t.coeff)])?;
            poly = poly.add(&mono)?;
        }
    }
    Ok(poly)
}

pub fn parse_polynomial<K: Field>(field: &K, vars: &VariableOrder, text: &str) -> Result<Polynomial<K>, ParseError> {
    parse_polynomial_at(field, vars, text, None, 1)
}

/// Canonical text of a polynomial. `parse_polynomial` inverts it except on
/// the zero polynomial, whose degree the text `0` does not record.
pub fn format_polynomial<K: Field>(f: &Polynomial<K>, vars: &VariableOrder) -> String {
    f.format_with(vars.names())
}

/// A linear form as text.
pub fn format_linear_form<K: Field>(field: &K, row: &[K::Elem], vars: &VariableOrder) -> String {
    Polynomial::linear(field, row).format_with(vars.names())
}

struct Header {
    vars: VariableOrder,
    degree: Option<u32>,
    /// `(line number, text)` of every line after the header.
    body: Vec<(usize, String)>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn read_header(text: &str) -> Result<Header, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut vars = None;
    let mut degree = None;
    let mut body = Vec::new();
    for (number, raw) in lines.by_ref() {
        let line = strip_comment(raw);
        if line.is_empty() {
            if vars.is_some() {
                break;
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            let names = rest.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty());
            vars = Some(VariableOrder::new(names)?);
        } else if let Some(rest) = line.strip_prefix("degree:") {
            degree = Some(rest.trim().parse().map_err(|_| ParseError::Header {
                line: number,
                message: format!("bad degree `{}`", rest.trim()),
            })?);
        } else if vars.is_none() {
            return Err(ParseError::MissingHeader);
        } else {
            body.push((number, raw.to_string()));
            break;
        }
    }
    body.extend(lines.map(|(n, l)| (n, l.to_string())));
    let vars = vars.ok_or(ParseError::MissingHeader)?;
    Ok(Header { vars, degree, body })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialFile<K: Field> {
    pub vars: VariableOrder,
    pub polynomial: Polynomial<K>,
}

pub fn parse_polynomial_file<K: Field>(field: &K, text: &str) -> Result<PolynomialFile<K>, ParseError> {
    let header = read_header(text)?;
    let Some(first) = header.body.iter().find(|(_, l)| !strip_comment(l).is_empty()).map(|(n, _)| *n) else {
        return Err(ParseError::Syntax {
            line: text.lines().count() + 1,
            column: 1,
            message: "missing polynomial".into(),
        });
    };
    let joined: Vec<&str> = header.body.iter().filter(|(n, _)| *n >= first).map(|(_, l)| l.as_str()).collect();
    let polynomial = parse_polynomial_at(field, &header.vars, &joined.join("\n"), header.degree, first)?;
    Ok(PolynomialFile {
        vars: header.vars,
        polynomial,
    })
}

pub fn format_polynomial_file<K: Field>(f: &Polynomial<K>, vars: &VariableOrder) -> String {
    format!(
        "vars: {}\ndegree: {}\n{}\n",
        vars.names().join(" "),
        f.degree(),
        format_polynomial(f, vars)
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyFile<K: Field> {
    pub vars: VariableOrder,
    pub members: Vec<Subspace<K>>,
}

pub fn parse_family_file<K: Field>(field: &K, text: &str) -> Result<FamilyFile<K>, ParseError> {
    let header = read_header(text)?;
    let n = header.vars.len();
    let mut members = Vec::new();
    let mut block: Vec<Vec<K::Elem>> = Vec::new();
    let mut flush = |block: &mut Vec<Vec<K::Elem>>| -> Result<(), ParseError> {
        if !block.is_empty() {
            members.push(Subspace::from_rows(field, n, std::mem::take(block))?);
        }
        Ok(())
    };
    for (number, raw) in &header.body {
        if strip_comment(raw).is_empty() {
            // comment-only lines do not split blocks
            if raw.trim().is_empty() {
                flush(&mut block)?;
            }
            continue;
        }
        let form = parse_polynomial_at(field, &header.vars, raw, Some(1), *number)?;
        block.push(form.coefficient_vector());
    }
    flush(&mut block)?;
    if members.is_empty() {
        return Err(ParseError::EmptyFamily);
    }
    Ok(FamilyFile {
        vars: header.vars,
        members,
    })
}

pub fn format_family_file<K: Field>(members: &[Subspace<K>], vars: &VariableOrder) -> String {
    let mut out = format!("vars: {}\n", vars.names().join(" "));
    for m in members {
        out.push('\n');
        for row in m.basis() {
            out.push_str(&format_linear_form(m.field(), row, vars));
            out.push('\n');
        }
    }
    out
}

/// Parses a field element written as `a`, `-a` or `a/b`.
pub fn parse_element<K: Field>(field: &K, text: &str) -> Result<K::Elem, ParseError> {
    let bad = || ParseError::Syntax {
        line: 1,
        column: 1,
        message: format!("bad field element `{text}`"),
    };
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.parse::<BigInt>().map_err(|_| bad())?, b.parse::<BigInt>().map_err(|_| bad())?),
        None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::from(1)),
    };
    field.from_fraction(&num, &den).ok_or(ParseError::ZeroDenominator { line: 1, column: 1 })
}

/// Rebuilds a subspace from rows of element strings as emitted in reports.
pub fn parse_subspace_rows<K: Field>(field: &K, ambient: usize, rows: &[Vec<String>]) -> Result<Subspace<K>, ParseError> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|e| parse_element(field, e)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subspace::from_rows(field, ambient, rows)?)
}
