//! Expression grammar, from lowest to highest precedence:
//!
//! ```text
//! sum     := vee (('+' | '-') vee)*
//! vee     := wedge ('&' wedge)*
//! wedge   := product ('^' product)*
//! product := unary ('*' unary)*
//! unary   := ('-' | '!' | 'J' | 'Jinv' | 'H' | 'Hinv' | 'P') unary | primary
//! primary := number | blade | 'I' | '(' sum ')'
//! blade   := 'e' digits | 'e^' digits
//! ```
//!
//! `e032` is the product of generators in the written order and resolves to
//! `-e023`. `e^03` is a blade of the dual algebra, and a bare `e^` its scalar
//! unit. Whitespace is insignificant.

use std::fmt;

use crate::signature::BasisBlade;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    /// Unified dual map.
    Dual,
    J,
    Jinv,
    H,
    Hinv,
    P,
}

impl UnaryOp {
    fn symbol(self) -> &'static str {
        match self {
            UnaryOp::Neg => "-",
            UnaryOp::Dual => "!",
            UnaryOp::J => "J",
            UnaryOp::Jinv => "Jinv",
            UnaryOp::H => "H",
            UnaryOp::Hinv => "Hinv",
            UnaryOp::P => "P",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    /// Geometric product `*`.
    Gp,
    /// Outer product `^`.
    Wedge,
    /// Regressive product `&`.
    Vee,
}

impl BinaryOp {
    fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Gp => "*",
            BinaryOp::Wedge => "^",
            BinaryOp::Vee => "&",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(f64),
    /// A blade literal: `sign * e_blade`, with `dual` set for `e^…`.
    Blade {
        sign: i8,
        blade: BasisBlade,
        dual: bool,
    },
    Pseudoscalar,
    Unary(UnaryOp, Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(x) => write!(f, "{x}"),
            Expr::Blade { sign, blade, dual } => {
                if *sign < 0 {
                    f.write_str("-")?;
                }
                match (dual, *blade == BasisBlade::SCALAR) {
                    (false, true) => f.write_str("1"),
                    (false, false) => f.write_str(&blade.name()),
                    (true, true) => f.write_str("e^"),
                    (true, false) => write!(f, "e^{}", &blade.name()[1..]),
                }
            }
            Expr::Pseudoscalar => f.write_str("I"),
            Expr::Unary(op, arg) => write!(f, "{}({arg})", op.symbol()),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator e{index} at line {line}, column {column}: the algebra has {dim} generators")]
    UnknownGenerator {
        index: usize,
        dim: usize,
        line: usize,
        column: usize,
    },
}

impl ParseError {
    /// 1-based `(line, column)` of the problem.
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, column, .. }
            | ParseError::UnknownGenerator { line, column, .. } => (*line, *column),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(f64),
    Blade { indices: Vec<usize>, dual: bool },
    Word(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(x) => format!("number {x}"),
            Tok::Blade { .. } => "blade literal".to_string(),
            Tok::Word(w) => format!("`{w}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn syntax(pos: Pos, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        let start = i;
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let text: String = chars[start..i].iter().collect();
            let value = text
                .parse::<f64>()
                .map_err(|_| syntax(pos, format!("malformed number `{text}`")))?;
            tokens.push((Tok::Number(value), pos));
        } else if c.is_ascii_alphabetic() {
            if c == 'e'
                && chars
                    .get(i + 1)
                    .is_some_and(|n| n.is_ascii_digit() || *n == '^')
            {
                i += 1;
                let dual = chars[i] == '^';
                if dual {
                    i += 1;
                }
                let mut indices = Vec::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    indices.push(chars[i].to_digit(10).unwrap() as usize);
                    i += 1;
                }
                if i < chars.len() && chars[i].is_ascii_alphabetic() {
                    return Err(syntax(pos, "malformed blade literal"));
                }
                tokens.push((Tok::Blade { indices, dual }, pos));
            } else {
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                tokens.push((Tok::Word(word), pos));
            }
        } else if "+-*^&!()".contains(c) {
            i += 1;
            tokens.push((Tok::Sym(c), pos));
        } else {
            return Err(syntax(pos, format!("unexpected character `{c}`")));
        }
        column += i - start;
    }
    tokens.push((Tok::End, Pos { line, column }));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    at: usize,
    dim: usize,
}

fn unary_word(word: &str) -> Option<UnaryOp> {
    Some(match word {
        "J" => UnaryOp::J,
        "Jinv" => UnaryOp::Jinv,
        "H" => UnaryOp::H,
        "Hinv" => UnaryOp::Hinv,
        "P" => UnaryOp::P,
        _ => return None,
    })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn starts_operand(&self) -> bool {
        match self.peek() {
            Tok::Number(_) | Tok::Blade { .. } => true,
            Tok::Word(w) => w == "I" || unary_word(w).is_some(),
            Tok::Sym(c) => matches!(c, '(' | '-' | '!'),
            Tok::End => false,
        }
    }

    fn binary_level(
        &mut self,
        ops: &[(char, BinaryOp)],
        next: fn(&mut Parser) -> Result<Expr, ParseError>,
    ) -> Result<Expr, ParseError> {
        let mut lhs = next(self)?;
        loop {
            let op = match self.peek() {
                Tok::Sym(c) => ops.iter().find(|(s, _)| s == c).map(|(_, op)| *op),
                _ => None,
            };
            let Some(op) = op else { break };
            let (_, op_pos) = self.bump();
            if !self.starts_operand() {
                return Err(syntax(
                    op_pos,
                    format!("missing right operand for `{}`", op.symbol()),
                ));
            }
            let rhs = next(self)?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&[('+', BinaryOp::Add), ('-', BinaryOp::Sub)], Parser::vee)
    }

    fn vee(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&[('&', BinaryOp::Vee)], Parser::wedge)
    }

    fn wedge(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&[('^', BinaryOp::Wedge)], Parser::product)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        self.binary_level(&[('*', BinaryOp::Gp)], Parser::unary)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let op = match self.peek() {
            Tok::Sym('-') => Some(UnaryOp::Neg),
            Tok::Sym('!') => Some(UnaryOp::Dual),
            Tok::Word(w) => unary_word(w),
            _ => None,
        };
        let Some(op) = op else {
            return self.primary();
        };
        let (_, op_pos) = self.bump();
        if !self.starts_operand() {
            return Err(syntax(
                op_pos,
                format!("missing operand for `{}`", op.symbol()),
            ));
        }
        Ok(Expr::Unary(op, Box::new(self.unary()?)))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Number(x) => Ok(Expr::Number(x)),
            Tok::Blade { indices, dual } => {
                if let Some(&index) = indices.iter().find(|&&i| i >= self.dim) {
                    return Err(ParseError::UnknownGenerator {
                        index,
                        dim: self.dim,
                        line: pos.line,
                        column: pos.column,
                    });
                }
                let (sign, blade) = BasisBlade::from_indices(&indices)
                    .ok_or_else(|| syntax(pos, "repeated generator in blade literal"))?;
                Ok(Expr::Blade { sign, blade, dual })
            }
            Tok::Word(w) if w == "I" => Ok(Expr::Pseudoscalar),
            Tok::Sym('(') => {
                let inner = self.sum()?;
                match self.bump() {
                    (Tok::Sym(')'), _) => Ok(inner),
                    (other, p) => Err(syntax(
                        p,
                        format!("expected `)`, found {}", other.describe()),
                    )),
                }
            }
            Tok::Word(w) => Err(syntax(pos, format!("unknown identifier `{w}`"))),
            other => Err(syntax(pos, format!("unexpected {}", other.describe()))),
        }
    }
}

/// Parses an expression over an algebra with `dim` generators.
pub fn parse(input: &str, dim: usize) -> Result<Expr, ParseError> {
    let tokens = lex(input)?;
    let mut parser = Parser { tokens, at: 0, dim };
    if matches!(parser.peek(), Tok::End) {
        return Err(syntax(parser.pos(), "empty expression"));
    }
    let expr = parser.sum()?;
    match parser.peek() {
        Tok::End => Ok(expr),
        other => Err(syntax(
            parser.pos(),
            format!("unexpected {}", other.describe()),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blade(sign: i8, mask: u32, dual: bool) -> Expr {
        Expr::Blade {
            sign,
            blade: BasisBlade::from_mask(mask),
            dual,
        }
    }

    #[test]
    fn wedge_of_two_blades() {
        assert_eq!(
            parse("e12 ^ e3", 4).unwrap(),
            Expr::Binary(
                BinaryOp::Wedge,
                Box::new(blade(1, 0b0110, false)),
                Box::new(blade(1, 0b1000, false))
            )
        );
    }

    #[test]
    fn regressive_node_with_non_canonical_blade() {
        assert_eq!(
            parse("e123 & e032", 4).unwrap(),
            Expr::Binary(
                BinaryOp::Vee,
                Box::new(blade(1, 0b1110, false)),
                Box::new(blade(-1, 0b1101, false))
            )
        );
    }

    #[test]
    fn doubled_operator_reports_column() {
        let err = parse("e1 ^^ e2", 4).unwrap_err();
        assert_eq!(err.position(), (1, 4));
        assert!(matches!(err, ParseError::Syntax { .. }));
    }

    #[test]
    fn unknown_generator() {
        assert_eq!(
            parse("e1 + e4", 4).unwrap_err(),
            ParseError::UnknownGenerator {
                index: 4,
                dim: 4,
                line: 1,
                column: 6
            }
        );
    }

    #[test]
    fn precedence() {
        let e = parse("e1 + e2 & e3 ^ e0 * 2", 4).unwrap();
        assert_eq!(e.to_string(), "(e1 + (e2 & (e3 ^ (e0 * 2))))");
        let e = parse("!e0 * e1", 4).unwrap();
        assert_eq!(e.to_string(), "(!(e0) * e1)");
        let e = parse("J Hinv (e1 - e2) - -e3", 4).unwrap();
        assert_eq!(e.to_string(), "(J(Hinv((e1 - e2))) - -(e3))");
        let e = parse("e1 ^ e2 ^ e3", 4).unwrap();
        assert_eq!(e.to_string(), "((e1 ^ e2) ^ e3)");
    }

    #[test]
    fn dual_literals() {
        assert_eq!(parse("e^03", 4).unwrap(), blade(1, 0b1001, true));
        assert_eq!(parse("e^", 4).unwrap(), blade(1, 0, true));
        assert_eq!(
            parse("e1^e2", 4).unwrap(),
            Expr::Binary(
                BinaryOp::Wedge,
                Box::new(blade(1, 0b0010, false)),
                Box::new(blade(1, 0b0100, false))
            )
        );
    }

    #[test]
    fn syntax_errors() {
        for (src, col) in [
            ("", 1),
            ("e1 +", 4),
            ("(e1", 4),
            ("e1 e2", 4),
            ("foo", 1),
            ("e1 $ e2", 4),
            ("e11", 1),
            ("2e1", 2),
            ("J", 1),
        ] {
            let err = parse(src, 4).unwrap_err();
            assert_eq!(err.position(), (1, col), "{src}: {err}");
        }
        let err = parse("e1 +\n  ^ e2", 4).unwrap_err();
        assert_eq!(err.position(), (1, 4));
        let err = parse("e1\n  +)", 4).unwrap_err();
        assert_eq!(err.position(), (2, 3));
    }

    #[test]
    fn numbers() {
        assert_eq!(parse("2.5", 4).unwrap(), Expr::Number(2.5));
        assert_eq!(parse("I", 4).unwrap(), Expr::Pseudoscalar);
    }
}
