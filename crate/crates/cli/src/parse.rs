//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)*
//! atom   := INT | VAR | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. Variables are
//! `x`, `y`, `z`, `t`; `w` names the generator of a cyclotomic or extension
//! field. Division is only by nonzero constants.

use std::collections::BTreeMap;

use compoly::{BivariatePoly, Fe, Field, UniPoly};
use num_bigint::BigInt;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Op(char),
    End,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PolyExpr {
    Int(BigInt),
    Var(char),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    /// Division, checked for a constant divisor on evaluation.
    Div(Box<PolyExpr>, Box<PolyExpr>, Pos),
    Pow(Box<PolyExpr>, u32),
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, CliError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Int(s.parse().unwrap()), pos));
            continue;
        }
        chars.next();
        col += 1;
        let tok = match c {
            'x' | 'y' | 'z' | 't' | 'w' => Tok::Var(c),
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => Tok::Op(c),
            '−' => Tok::Op('-'),
            _ => return Err(syntax(pos, format!("unexpected character '{c}'"))),
        };
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, col }));
    Ok(out)
}

fn syntax(pos: Pos, msg: String) -> CliError {
    CliError::Syntax {
        line: pos.line,
        col: pos.col,
        msg,
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<PolyExpr, CliError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Op('-') => {
                    self.bump();
                    lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, CliError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Op('/') => {
                    let (_, pos) = self.bump();
                    lhs = PolyExpr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<PolyExpr, CliError> {
        if self.peek() == &Tok::Op('-') {
            self.bump();
            return Ok(PolyExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<PolyExpr, CliError> {
        let mut base = self.atom()?;
        while self.peek() == &Tok::Op('^') {
            self.bump();
            let pos = self.pos();
            match self.bump().0 {
                Tok::Int(n) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| syntax(pos, "exponent too large".into()))?;
                    base = PolyExpr::Pow(Box::new(base), e);
                }
                Tok::Op('-') | Tok::Op('(') => {
                    return Err(CliError::NonPolynomial {
                        line: pos.line,
                        col: pos.col,
                        msg: "exponents must be nonnegative integer literals".into(),
                    })
                }
                _ => return Err(syntax(pos, "expected an integer exponent after '^'".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<PolyExpr, CliError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(n) => Ok(PolyExpr::Int(n)),
            Tok::Var(v) => Ok(PolyExpr::Var(v)),
            Tok::Op('(') => {
                let inner = self.expr()?;
                let close = self.pos();
                match self.bump().0 {
                    Tok::Op(')') => Ok(inner),
                    _ => Err(syntax(close, "expected ')'".into())),
                }
            }
            Tok::End => Err(syntax(pos, "unexpected end of input".into())),
            Tok::Op(c) => Err(syntax(pos, format!("unexpected '{c}'"))),
        }
    }
}

/// Parse `src` into an expression tree.
pub fn parse_expr(src: &str) -> Result<PolyExpr, CliError> {
    if src.trim().is_empty() {
        return Err(syntax(Pos { line: 1, col: 1 }, "empty expression".into()));
    }
    let mut p = Parser { toks: lex(src)?, i: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        _ => Err(syntax(p.pos(), "expected an operator (multiplication must be written with '*')".into())),
    }
}

/// Exponents of (x, y, z, t).
type Mono = [u32; 4];

/// Sparse polynomial in x, y, z, t over a field.
#[derive(Clone, Debug)]
pub struct MPoly {
    field: Field,
    terms: BTreeMap<Mono, Fe>,
}

fn var_index(v: char) -> usize {
    match v {
        'x' => 0,
        'y' => 1,
        'z' => 2,
        _ => 3,
    }
}

const VARS: [char; 4] = ['x', 'y', 'z', 't'];

impl MPoly {
    fn constant(field: &Field, c: Fe) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; 4], c);
        }
        MPoly {
            field: field.clone(),
            terms,
        }
    }

    fn var(field: &Field, v: char) -> Self {
        let mut m = [0; 4];
        m[var_index(v)] = 1;
        MPoly {
            field: field.clone(),
            terms: BTreeMap::from([(m, field.one())]),
        }
    }

    fn add_term(&mut self, m: Mono, c: Fe) {
        let sum = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    fn add(mut self, other: &MPoly, sign: bool) -> Self {
        for (m, c) in &other.terms {
            self.add_term(*m, if sign { c.clone() } else { -c });
        }
        self
    }

    fn mul(&self, other: &MPoly) -> Self {
        let mut out = MPoly::constant(&self.field, self.field.zero());
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                let m = [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]];
                out.add_term(m, a * b);
            }
        }
        out
    }

    fn as_constant(&self) -> Option<Fe> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    /// Variables that occur, in x, y, z, t order.
    pub fn variables(&self) -> Vec<char> {
        (0..4)
            .filter(|&i| self.terms.keys().any(|m| m[i] > 0))
            .map(|i| VARS[i])
            .collect()
    }
}

fn generator(field: &Field) -> Option<Fe> {
    (field.degree() > 1).then(|| field.generator())
}

pub fn evaluate(e: &PolyExpr, field: &Field) -> Result<MPoly, CliError> {
    Ok(match e {
        PolyExpr::Int(n) => MPoly::constant(field, field.from_bigint(n)),
        PolyExpr::Var('w') => {
            let g = generator(field).ok_or_else(|| CliError::Input("'w' needs a cyclotomic or extension field".into()))?;
            MPoly::constant(field, g)
        }
        PolyExpr::Var(v) => MPoly::var(field, *v),
        PolyExpr::Neg(a) => MPoly::constant(field, field.zero()).add(&evaluate(a, field)?, false),
        PolyExpr::Add(a, b) => evaluate(a, field)?.add(&evaluate(b, field)?, true),
        PolyExpr::Sub(a, b) => evaluate(a, field)?.add(&evaluate(b, field)?, false),
        PolyExpr::Mul(a, b) => evaluate(a, field)?.mul(&evaluate(b, field)?),
        PolyExpr::Div(a, b, pos) => {
            let d = evaluate(b, field)?.as_constant().ok_or(CliError::NonPolynomial {
                line: pos.line,
                col: pos.col,
                msg: "division by a non-constant".into(),
            })?;
            let inv = d.checked_inv().ok_or_else(|| syntax(*pos, "division by zero".into()))?;
            evaluate(a, field)?.mul(&MPoly::constant(field, inv))
        }
        PolyExpr::Pow(a, k) => {
            let base = evaluate(a, field)?;
            let mut acc = MPoly::constant(field, field.one());
            for _ in 0..*k {
                acc = acc.mul(&base);
            }
            acc
        }
    })
}

/// A bivariate polynomial in x and y, monic in y after normalisation.
pub fn parse_bivariate(src: &str, field: &Field) -> Result<BivariatePoly, CliError> {
    let p = evaluate(&parse_expr(src)?, field)?;
    if let Some(v) = p.variables().into_iter().find(|v| *v != 'x' && *v != 'y') {
        return Err(CliError::Input(format!("unexpected variable '{v}' in a polynomial in x and y")));
    }
    let terms = p.terms.into_iter().map(|(m, c)| (m[0] as i64, m[1], c));
    Ok(BivariatePoly::from_terms(field, terms)?)
}

/// A univariate polynomial in whichever single variable occurs (`x` if none).
pub fn parse_univariate(src: &str, field: &Field) -> Result<UniPoly, CliError> {
    let p = evaluate(&parse_expr(src)?, field)?;
    let vars = p.variables();
    if vars.len() > 1 {
        return Err(CliError::Input(format!("expected one variable, found {}", vars.iter().collect::<String>())));
    }
    let v = vars.first().copied().unwrap_or('x');
    let idx = var_index(v);
    let deg = p.terms.keys().map(|m| m[idx] as usize).max().unwrap_or(0);
    let mut coeffs = vec![field.zero(); deg + 1];
    for (m, c) in p.terms {
        coeffs[m[idx] as usize] = c;
    }
    Ok(UniPoly::new(field, coeffs).with_var(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let q = Field::rational();
        let p = parse_univariate("-x^2 + 3*x - 2", &q).unwrap();
        assert_eq!(p, UniPoly::from_i64s(&q, &[-2, 3, -1]));
        let p = parse_univariate("(x + 1)^2*2", &q).unwrap();
        assert_eq!(p, UniPoly::from_i64s(&q, &[2, 4, 2]));
        let p = parse_univariate("x/2 - 1/3", &q).unwrap();
        assert_eq!(p.to_string(), "1/2*x - 1/3");
    }

    #[test]
    fn errors_carry_positions() {
        let q = Field::rational();
        match parse_bivariate("y +\n 2x", &q) {
            Err(CliError::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_bivariate("y^(1/2)", &q), Err(CliError::NonPolynomial { .. })));
        assert!(matches!(parse_bivariate("y^-1", &q), Err(CliError::NonPolynomial { .. })));
        assert!(matches!(parse_bivariate("y/x", &q), Err(CliError::NonPolynomial { .. })));
        assert!(matches!(parse_bivariate("", &q), Err(CliError::Syntax { .. })));
        assert!(matches!(parse_bivariate("y + z", &q), Err(CliError::Input(_))));
        assert!(matches!(parse_bivariate("(y + 1", &q), Err(CliError::Syntax { .. })));
    }

    #[test]
    fn generator_symbol() {
        let k = Field::cyclotomic(4).unwrap();
        let p = parse_bivariate("y - w*x", &k).unwrap();
        assert_eq!(p.to_string(), "y + (-w)*x");
        assert!(matches!(parse_bivariate("y - w", &Field::rational()), Err(CliError::Input(_))));
    }
}
