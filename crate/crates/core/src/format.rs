//! The `.lsa` text format.
//!
//! ```text
//! # comment
//! dim 2
//! field Q
//! e1*e1 = e1
//! e1*e2 = -1/3*e2 + (1/2)+(3)i*e1
//! ```
//!
//! `field` is `Q` or `Qi` and defaults to `Q`. Products not listed are zero.

use std::fmt::Write as _;

use crate::algebra::Algebra;
use crate::linalg::{parse_rational, FieldTag, Gaussian, Rational, Scalar, Subspace, Vector};
use crate::{Error, Result};

/// An algebra over either supported field.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyAlgebra {
    Rational(Algebra<Rational>),
    Gaussian(Algebra<Gaussian>),
}

impl AnyAlgebra {
    pub fn field(&self) -> FieldTag {
        match self {
            AnyAlgebra::Rational(_) => FieldTag::Rational,
            AnyAlgebra::Gaussian(_) => FieldTag::GaussianRational,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Rational(a) => a.dim(),
            AnyAlgebra::Gaussian(a) => a.dim(),
        }
    }

    pub fn serialize(&self) -> String {
        match self {
            AnyAlgebra::Rational(a) => serialize(a),
            AnyAlgebra::Gaussian(a) => serialize(a),
        }
    }

    /// Complexification; fails on Gaussian input.
    pub fn complexify(&self) -> Result<Algebra<Gaussian>> {
        match self {
            AnyAlgebra::Rational(a) => Ok(crate::simplicity::complexify(a)),
            AnyAlgebra::Gaussian(_) => Err(Error::AlreadyGaussian),
        }
    }
}

impl From<Algebra<Rational>> for AnyAlgebra {
    fn from(a: Algebra<Rational>) -> Self {
        AnyAlgebra::Rational(a)
    }
}

impl From<Algebra<Gaussian>> for AnyAlgebra {
    fn from(a: Algebra<Gaussian>) -> Self {
        AnyAlgebra::Gaussian(a)
    }
}

/// One product line `ei*ej = sum c ek`, as `(i, j, [(k, c)])`.
pub type ProductLine = (usize, usize, Vec<(usize, Gaussian)>);

/// Parsed file contents before conversion to a field.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraFile {
    pub dim: usize,
    pub field: FieldTag,
    /// Zero-based, in file order.
    pub products: Vec<ProductLine>,
}

impl AlgebraFile {
    pub fn into_algebra<F: Scalar>(&self) -> Result<Algebra<F>> {
        if self.field != F::FIELD {
            return Err(Error::FieldMismatch {
                expected: F::FIELD.symbol().into(),
                found: self.field.symbol().into(),
            });
        }
        let mut a = Algebra::<F>::zero(self.dim);
        for (i, j, terms) in &self.products {
            for (k, c) in terms {
                let c = F::from_gaussian(c).ok_or_else(|| Error::FieldMismatch {
                    expected: F::FIELD.symbol().into(),
                    found: FieldTag::GaussianRational.symbol().into(),
                })?;
                let old = a.constant(*i, *j, *k).clone();
                a.set_constant(*i, *j, *k, old + c);
            }
        }
        Ok(a)
    }

    pub fn into_any(&self) -> Result<AnyAlgebra> {
        Ok(match self.field {
            FieldTag::Rational => AnyAlgebra::Rational(self.into_algebra()?),
            FieldTag::GaussianRational => AnyAlgebra::Gaussian(self.into_algebra()?),
        })
    }
}

/// Parse text into an algebra over the field named in the file.
pub fn parse(text: &str) -> Result<AnyAlgebra> {
    parse_file(text)?.into_any()
}

/// Parse text into an algebra over `F`, which must match the file's field.
pub fn parse_as<F: Scalar>(text: &str) -> Result<Algebra<F>> {
    parse_file(text)?.into_algebra()
}

struct Cursor<'a> {
    line: usize,
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        Cursor {
            line,
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
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

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    /// Maximal run of characters allowed in a number or symbol.
    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '/' || c == '.' || c == '_')
        {
            self.pos += 1;
        }
        let from = self.chars.get(start).map_or(self.text.len(), |(b, _)| *b);
        let to = self.chars.get(self.pos).map_or(self.text.len(), |(b, _)| *b);
        &self.text[from..to]
    }
}

fn basis_index(cur: &mut Cursor, dim: usize) -> Result<usize> {
    cur.skip_ws();
    let col = cur.column();
    let w = cur.word();
    let err = |m: String| Error::Parse {
        line: cur.line,
        column: col,
        message: m,
    };
    let k = w
        .strip_prefix('e')
        .and_then(|d| d.parse::<usize>().ok())
        .ok_or_else(|| err(format!("expected a basis symbol like e1, found `{w}`")))?;
    if k == 0 || k > dim {
        return Err(err(format!("dimension mismatch: e{k} is outside e1..e{dim}")));
    }
    Ok(k - 1)
}

fn rational_word(cur: &mut Cursor) -> Result<Rational> {
    cur.skip_ws();
    let col = cur.column();
    let neg = cur.eat('-');
    if !neg {
        cur.eat('+');
    }
    let w = cur.word();
    let v = parse_rational(w).ok_or_else(|| Error::Parse {
        line: cur.line,
        column: col,
        message: format!("non-rational coefficient `{w}`"),
    })?;
    Ok(if neg { -v } else { v })
}

/// `(re)+(im)i` after the opening parenthesis has been seen.
fn gaussian(cur: &mut Cursor) -> Result<Gaussian> {
    let re = rational_word(cur)?;
    cur.expect(')')?;
    let neg = if cur.eat('-') {
        true
    } else {
        cur.expect('+')?;
        false
    };
    cur.expect('(')?;
    let im = rational_word(cur)?;
    cur.expect(')')?;
    cur.skip_ws();
    if cur.peek() != Some('i') {
        return Err(cur.error("expected `i` after the imaginary part"));
    }
    cur.pos += 1;
    Ok(Gaussian::new(re, if neg { -im } else { im }))
}

/// One signed term `[c*]ek`.
fn term(cur: &mut Cursor, dim: usize, sign: bool) -> Result<(usize, Gaussian)> {
    cur.skip_ws();
    let coeff = if cur.eat('(') {
        let g = gaussian(cur)?;
        cur.expect('*')?;
        Some(g)
    } else if cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
        let col = cur.column();
        let w = cur.word();
        let q = parse_rational(w).ok_or_else(|| Error::Parse {
            line: cur.line,
            column: col,
            message: format!("non-rational coefficient `{w}`"),
        })?;
        cur.expect('*')?;
        Some(Gaussian::from_rational(q))
    } else {
        None
    };
    let k = basis_index(cur, dim)?;
    let c = coeff.unwrap_or_else(|| Gaussian::from_int(1));
    Ok((k, if sign { -c } else { c }))
}

fn lin_comb(cur: &mut Cursor, dim: usize) -> Result<Vec<(usize, Gaussian)>> {
    cur.skip_ws();
    if cur.peek() == Some('0') {
        let save = cur.pos;
        cur.pos += 1;
        if cur.at_end() {
            return Ok(Vec::new());
        }
        cur.pos = save;
    }
    let mut terms = Vec::new();
    let mut neg = cur.eat('-');
    if !neg {
        cur.eat('+');
    }
    loop {
        terms.push(term(cur, dim, neg)?);
        if cur.at_end() {
            return Ok(terms);
        }
        neg = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            false
        } else {
            return Err(cur.error("expected `+`, `-` or end of line"));
        };
    }
}

/// Parse without choosing a field.
pub fn parse_file(text: &str) -> Result<AlgebraFile> {
    let mut dim: Option<usize> = None;
    let mut field: Option<FieldTag> = None;
    let mut products: Vec<ProductLine> = Vec::new();
    let mut seen = std::collections::BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor::new(line, body);
        cur.skip_ws();
        let start = cur.pos;
        let head = cur.word();
        match head {
            "dim" => {
                if dim.is_some() {
                    return Err(cur.error("duplicate `dim` line"));
                }
                let col = cur.column() + 1;
                let w = cur.word();
                let n = w.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    column: col,
                    message: format!("expected a dimension, found `{w}`"),
                })?;
                if !cur.at_end() {
                    return Err(cur.error("unexpected text after the dimension"));
                }
                dim = Some(n);
            }
            "field" => {
                if field.is_some() {
                    return Err(cur.error("duplicate `field` line"));
                }
                if !products.is_empty() {
                    return Err(cur.error("`field` must precede product lines"));
                }
                let col = cur.column() + 1;
                field = Some(match cur.word() {
                    "Q" => FieldTag::Rational,
                    "Qi" => FieldTag::GaussianRational,
                    other => {
                        return Err(Error::Parse {
                            line,
                            column: col,
                            message: format!("unknown field `{other}` (expected Q or Qi)"),
                        })
                    }
                });
                if !cur.at_end() {
                    return Err(cur.error("unexpected text after the field"));
                }
            }
            _ => {
                let n = dim.ok_or_else(|| Error::Parse {
                    line,
                    column: 1,
                    message: "`dim` must come before product lines".into(),
                })?;
                cur.pos = start;
                let i = basis_index(&mut cur, n)?;
                cur.expect('*')?;
                let j = basis_index(&mut cur, n)?;
                cur.expect('=')?;
                let terms = lin_comb(&mut cur, n)?;
                if let Some(prev) = seen.insert((i, j), line) {
                    return Err(Error::Parse {
                        line,
                        column: 1,
                        message: format!(
                            "duplicate product e{}*e{} (first given on line {prev})",
                            i + 1,
                            j + 1
                        ),
                    });
                }
                let field = *field.get_or_insert(FieldTag::Rational);
                if field == FieldTag::Rational && terms.iter().any(|(_, c)| c.to_rational().is_none()) {
                    return Err(Error::Parse {
                        line,
                        column: 1,
                        message: "non-rational coefficient in a `field Q` file".into(),
                    });
                }
                products.push((i, j, terms));
            }
        }
    }
    let dim = dim.ok_or_else(|| Error::Parse {
        line: text.lines().count().max(1),
        column: 1,
        message: "missing `dim` line".into(),
    })?;
    Ok(AlgebraFile {
        dim,
        field: field.unwrap_or(FieldTag::Rational),
        products,
    })
}

fn render_term<F: Scalar>(c: &F, k: usize, first: bool) -> String {
    let basis = format!("e{}", k + 1);
    match c.to_rational() {
        Some(q) => {
            let neg = q < Rational::from_int(0);
            let mag = if neg { -q } else { q };
            let body = if mag == Rational::from_int(1) {
                basis
            } else {
                format!("{mag}*{basis}")
            };
            match (first, neg) {
                (true, true) => format!("-{body}"),
                (true, false) => body,
                (false, true) => format!(" - {body}"),
                (false, false) => format!(" + {body}"),
            }
        }
        None => {
            let body = format!("{}*{basis}", c.render());
            if first {
                body
            } else {
                format!(" + {body}")
            }
        }
    }
}

/// Parse a single linear combination such as `e1 - 1/2*e3` or `0`.
pub fn parse_vector<F: Scalar>(text: &str, dim: usize) -> Result<Vector<F>> {
    let mut cur = Cursor::new(1, text);
    let terms = lin_comb(&mut cur, dim)?;
    let mut v = vec![F::zero(); dim];
    for (k, c) in terms {
        let c = F::from_gaussian(&c).ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: format!("non-rational coefficient in `{text}`"),
        })?;
        v[k] = v[k].clone() + c;
    }
    Ok(v)
}

/// Render a vector in the same syntax as product right-hand sides.
pub fn render_vector<F: Scalar>(v: &[F]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out.push_str(&render_term(c, k, out.is_empty()));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical basis of a subspace, one rendered vector per element.
pub fn render_subspace<F: Scalar>(s: &Subspace<F>) -> Vec<String> {
    s.basis().iter().map(|v| render_vector(v)).collect()
}

/// Canonical text form; `parse(serialize(a))` reproduces `a`.
pub fn serialize<F: Scalar>(a: &Algebra<F>) -> String {
    let n = a.dim();
    let mut out = String::new();
    if let Some(name) = a.name() {
        let _ = writeln!(out, "# {name}");
    }
    let _ = writeln!(out, "dim {n}");
    let _ = writeln!(out, "field {}", F::FIELD.symbol());
    for i in 0..n {
        for j in 0..n {
            let p = a.basis_product(i, j);
            if p.iter().all(|c| c.is_zero()) {
                continue;
            }
            let _ = writeln!(out, "e{}*e{} = {}", i + 1, j + 1, render_vector(p));
        }
    }
    out
}
