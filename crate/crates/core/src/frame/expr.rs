use std::fmt;

use super::{Frame, Proposition};
use crate::error::{Error, Result};

/// Syntax tree of a `∪`/`∩` expression over the hypotheses of a frame.
///
/// Singleton indices are zero-based positions in the frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PropExpr {
    Singleton(usize),
    Union(Vec<PropExpr>),
    Inter(Vec<PropExpr>),
}

impl PropExpr {
    pub fn union(children: Vec<PropExpr>) -> Self {
        Self::Union(children)
    }

    pub fn inter(children: Vec<PropExpr>) -> Self {
        Self::Inter(children)
    }

    /// Operand count plus operator count; a node with `k` children uses
    /// `k - 1` operators.
    pub fn cost(&self) -> usize {
        match self {
            Self::Singleton(_) => 1,
            Self::Union(c) | Self::Inter(c) => {
                c.iter().map(Self::cost).sum::<usize>() + c.len().saturating_sub(1)
            }
        }
    }

    pub fn display<'a>(&'a self, frame: &'a Frame) -> impl fmt::Display + 'a {
        ExprDisplay { expr: self, frame }
    }

    /// Collapses nested nodes of the same operator into one n-ary node.
    pub fn flatten(self) -> Self {
        match self {
            Self::Singleton(_) => self,
            Self::Union(c) => Self::Union(flatten_into(c, true)),
            Self::Inter(c) => Self::Inter(flatten_into(c, false)),
        }
    }
}

fn flatten_into(children: Vec<PropExpr>, union: bool) -> Vec<PropExpr> {
    let mut out = Vec::with_capacity(children.len());
    for child in children.into_iter().map(PropExpr::flatten) {
        match child {
            PropExpr::Union(c) if union => out.extend(c),
            PropExpr::Inter(c) if !union => out.extend(c),
            other => out.push(other),
        }
    }
    out
}

struct ExprDisplay<'a> {
    expr: &'a PropExpr,
    frame: &'a Frame,
}

impl ExprDisplay<'_> {
    fn write(&self, e: &PropExpr, f: &mut fmt::Formatter<'_>, inside_inter: bool) -> fmt::Result {
        match e {
            PropExpr::Singleton(i) => write!(f, "{}", self.frame.label(*i)),
            PropExpr::Inter(c) => self.join(c, " & ", f, true),
            PropExpr::Union(c) if inside_inter && c.len() > 1 => {
                write!(f, "(")?;
                self.join(c, " | ", f, false)?;
                write!(f, ")")
            }
            PropExpr::Union(c) => self.join(c, " | ", f, false),
        }
    }

    fn join(
        &self,
        c: &[PropExpr],
        sep: &str,
        f: &mut fmt::Formatter<'_>,
        inter: bool,
    ) -> fmt::Result {
        for (k, child) in c.iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            self.write(child, f, inter)?;
        }
        Ok(())
    }
}

impl fmt::Display for ExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.expr, f, false)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Label(String),
    And,
    Or,
    Open,
    Close,
}

fn tokenize(text: &str) -> Vec<(usize, Token)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '&' | '|' | '(' | ')' => {
                chars.next();
                let t = match c {
                    '&' => Token::And,
                    '|' => Token::Or,
                    '(' => Token::Open,
                    _ => Token::Close,
                };
                out.push((pos, t));
            }
            _ => {
                let mut label = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_whitespace() || matches!(c, '&' | '|' | '(' | ')') {
                        break;
                    }
                    label.push(c);
                    chars.next();
                }
                out.push((pos, Token::Label(label)));
            }
        }
    }
    out
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    next: usize,
    end: usize,
    frame: &'a Frame,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.next).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.next).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<PropExpr> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(&Token::Or) {
            self.next += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            PropExpr::Union(terms)
        })
    }

    fn term(&mut self) -> Result<PropExpr> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Token::And) {
            self.next += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            PropExpr::Inter(factors)
        })
    }

    fn factor(&mut self) -> Result<PropExpr> {
        let pos = self.pos();
        match self.tokens.get(self.next).map(|(_, t)| t.clone()) {
            Some(Token::Label(label)) => {
                self.next += 1;
                self.frame
                    .index_of(&label)
                    .map(PropExpr::Singleton)
                    .ok_or(Error::UnknownLabel { label, pos })
            }
            Some(Token::Open) => {
                self.next += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::Syntax {
                        pos: self.pos(),
                        msg: "expected `)`".into(),
                    });
                }
                self.next += 1;
                Ok(inner)
            }
            Some(t) => Err(Error::Syntax {
                pos,
                msg: format!("unexpected {t:?}"),
            }),
            None => Err(Error::Syntax {
                pos,
                msg: "unexpected end of expression".into(),
            }),
        }
    }
}

/// Parses `label`, `&` (intersection), `|` (union) and parentheses; `&` binds
/// tighter than `|`.
pub fn parse_expr(text: &str, frame: &Frame) -> Result<PropExpr> {
    let mut p = Parser {
        tokens: tokenize(text),
        next: 0,
        end: text.len(),
        frame,
    };
    let e = p.expr()?;
    if p.next != p.tokens.len() {
        return Err(Error::Syntax {
            pos: p.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

/// Evaluates an expression to its atom mask.
pub fn to_canonical(expr: &PropExpr, frame: &Frame) -> Proposition {
    let n = frame.len();
    match expr {
        PropExpr::Singleton(i) => Proposition::singleton(n, *i),
        PropExpr::Union(c) => {
            let mask = c.iter().fold(0, |m, e| m | to_canonical(e, frame).mask());
            Proposition::from_mask_unchecked(n, mask)
        }
        PropExpr::Inter(c) => {
            let mask = c
                .iter()
                .fold(u64::MAX, |m, e| m & to_canonical(e, frame).mask());
            Proposition::from_mask_unchecked(n, if c.is_empty() { 0 } else { mask })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PropExpr::*;

    fn f3() -> Frame {
        Frame::numbered(3).unwrap()
    }

    #[test]
    fn parses_intersection() {
        assert_eq!(
            parse_expr("t1 & t2", &f3()).unwrap(),
            Inter(vec![Singleton(0), Singleton(1)])
        );
    }

    #[test]
    fn parenthesized_and_precedence_agree() {
        let want = Union(vec![Inter(vec![Singleton(0), Singleton(1)]), Singleton(2)]);
        assert_eq!(parse_expr("(t1 & t2) | t3", &f3()).unwrap(), want);
        assert_eq!(parse_expr("t1 & t2 | t3", &f3()).unwrap(), want);
        assert_eq!(parse_expr("  t1&t2|t3 ", &f3()).unwrap(), want);
    }

    #[test]
    fn reports_unknown_label_and_position() {
        assert_eq!(
            parse_expr("t1 | t9", &f3()),
            Err(Error::UnknownLabel {
                label: "t9".into(),
                pos: 5
            })
        );
        assert!(matches!(
            parse_expr("(t1 | t2", &f3()),
            Err(Error::Syntax { pos: 8, .. })
        ));
        assert!(matches!(
            parse_expr("t1 t2", &f3()),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_expr("", &f3()),
            Err(Error::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_expr("t1 & | t2", &f3()),
            Err(Error::Syntax { pos: 5, .. })
        ));
    }

    #[test]
    fn canonical_forms_identify_equivalent_expressions() {
        let f = f3();
        let a = f.prop("(t1 | t3) & (t2 | t3)").unwrap();
        let b = f.prop("(t1 & t2) | t3").unwrap();
        assert_eq!(a, b);
        assert_eq!(f.prop("t1 & t1").unwrap(), f.prop("t1").unwrap());
    }

    #[test]
    fn majority_proposition_atoms_match_truth_table() {
        let f = f3();
        let p = f.prop("(t1 | t2) & (t1 | t3) & (t2 | t3)").unwrap();
        // Truth table over the seven atoms: an atom S is covered iff it lies in
        // at least two of the three hypotheses.
        let want: Vec<u64> = (1u64..8).filter(|s| s.count_ones() >= 2).collect();
        assert_eq!(p.atoms(), want);
        assert_eq!(want, vec![0b011, 0b101, 0b110, 0b111]);
        assert!(p.is_up_closed());
    }

    #[test]
    fn cost_counts_operands_and_operators() {
        let f = f3();
        assert_eq!(parse_expr("t1", &f).unwrap().cost(), 1);
        assert_eq!(parse_expr("t1 | t2 | t3", &f).unwrap().cost(), 5);
        assert_eq!(parse_expr("(t1 | t3) & (t2 | t3)", &f).unwrap().cost(), 7);
    }

    #[test]
    fn display_parenthesizes_unions_under_intersections() {
        let f = f3();
        let e = parse_expr("(t1 | t2) & t3", &f).unwrap();
        assert_eq!(e.display(&f).to_string(), "(t1 | t2) & t3");
        let e = parse_expr("t1 & t2 | t3", &f).unwrap();
        assert_eq!(e.display(&f).to_string(), "t1 & t2 | t3");
    }

    #[test]
    fn flatten_merges_same_operator() {
        let e = Union(vec![Union(vec![Singleton(0), Singleton(1)]), Singleton(2)]);
        assert_eq!(
            e.flatten(),
            Union(vec![Singleton(0), Singleton(1), Singleton(2)])
        );
    }
}
