//! Tangle expressions: tokens, parser and typechecker.
//!
//! ```text
//! expr   := term (';' term)*
//! term   := factor ('|' factor)*
//! factor := gen | '(' expr ')'
//! gen    := id+ | id- | ev | ev* | coev | coev* | b±± | B±±
//! ```

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A boundary word over `{+, −}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Sign>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn concat(words: impl IntoIterator<Item = Word>) -> Word {
        Word(words.into_iter().flat_map(|w| w.0).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.symbol().to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Id(Sign),
    Ev,
    EvStar,
    Coev,
    CoevStar,
    /// Positive crossing `(s, t) → (t, s)`.
    Cross(Sign, Sign),
    /// Negative crossing `(s, t) → (t, s)`, the inverse of `Cross(t, s)`.
    InvCross(Sign, Sign),
}

impl Generator {
    pub fn parse(name: &str) -> Option<Generator> {
        let chars: Vec<char> = name.chars().collect();
        let g = match name {
            "id+" => Generator::Id(Sign::Plus),
            "id-" => Generator::Id(Sign::Minus),
            "ev" => Generator::Ev,
            "ev*" => Generator::EvStar,
            "coev" => Generator::Coev,
            "coev*" => Generator::CoevStar,
            _ if chars.len() == 3 && (chars[0] == 'b' || chars[0] == 'B') => {
                let s = Sign::from_char(chars[1])?;
                let t = Sign::from_char(chars[2])?;
                if chars[0] == 'b' {
                    Generator::Cross(s, t)
                } else {
                    Generator::InvCross(s, t)
                }
            }
            _ => return None,
        };
        Some(g)
    }

    pub fn name(self) -> String {
        match self {
            Generator::Id(s) => format!("id{}", s.symbol()),
            Generator::Ev => "ev".into(),
            Generator::EvStar => "ev*".into(),
            Generator::Coev => "coev".into(),
            Generator::CoevStar => "coev*".into(),
            Generator::Cross(s, t) => format!("b{}{}", s.symbol(), t.symbol()),
            Generator::InvCross(s, t) => format!("B{}{}", s.symbol(), t.symbol()),
        }
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, Generator::Cross(..) | Generator::InvCross(..))
    }

    pub fn signature(self) -> (Word, Word) {
        use Sign::*;
        match self {
            Generator::Id(s) => (Word(vec![s]), Word(vec![s])),
            Generator::Ev => (Word(vec![Minus, Plus]), Word::default()),
            Generator::EvStar => (Word::default(), Word(vec![Minus, Plus])),
            Generator::Coev => (Word::default(), Word(vec![Plus, Minus])),
            Generator::CoevStar => (Word(vec![Plus, Minus]), Word::default()),
            Generator::Cross(s, t) | Generator::InvCross(s, t) => {
                (Word(vec![s, t]), Word(vec![t, s]))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Gen(Generator),
    /// Vertical composite, read top to bottom.
    Seq(Vec<Tangle>),
    /// Horizontal juxtaposition, left to right.
    Par(Vec<Tangle>),
}

/// A typechecked tangle expression.
#[derive(Debug, Clone, PartialEq)]
pub struct Tangle {
    pub node: Node,
    pub src: Word,
    pub tgt: Word,
}

impl Tangle {
    pub fn generator(g: Generator) -> Tangle {
        let (src, tgt) = g.signature();
        Tangle {
            node: Node::Gen(g),
            src,
            tgt,
        }
    }

    /// `self ; other`.
    pub fn then(self, other: Tangle) -> Result<Tangle> {
        seq(vec![(self, 0), (other, 0)])
    }

    /// `self | other`.
    pub fn beside(self, other: Tangle) -> Tangle {
        par(vec![self, other])
    }

    pub fn is_closed(&self) -> bool {
        self.src.is_empty() && self.tgt.is_empty()
    }

    pub fn crossings(&self) -> usize {
        match &self.node {
            Node::Gen(g) => usize::from(g.is_crossing()),
            Node::Seq(v) | Node::Par(v) => v.iter().map(Tangle::crossings).sum(),
        }
    }

    /// JSON AST: `{"op": "seq" | "par" | "gen", ...}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(JsonNode::from(self)).expect("tangle serializes")
    }
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Gen(g) => write!(f, "{}", g.name()),
            Node::Seq(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join(" ; "))
            }
            Node::Par(parts) => {
                let s: Vec<String> = parts
                    .iter()
                    .map(|p| match p.node {
                        Node::Seq(_) => format!("({p})"),
                        _ => p.to_string(),
                    })
                    .collect();
                write!(f, "{}", s.join(" | "))
            }
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "op", rename_all = "lowercase")]
enum JsonNode {
    Seq {
        src: String,
        tgt: String,
        args: Vec<JsonNode>,
    },
    Par {
        src: String,
        tgt: String,
        args: Vec<JsonNode>,
    },
    Gen {
        src: String,
        tgt: String,
        name: String,
    },
}

impl From<&Tangle> for JsonNode {
    fn from(t: &Tangle) -> Self {
        let (src, tgt) = (t.src.to_string(), t.tgt.to_string());
        match &t.node {
            Node::Gen(g) => JsonNode::Gen {
                src,
                tgt,
                name: g.name(),
            },
            Node::Seq(v) => JsonNode::Seq {
                src,
                tgt,
                args: v.iter().map(JsonNode::from).collect(),
            },
            Node::Par(v) => JsonNode::Par {
                src,
                tgt,
                args: v.iter().map(JsonNode::from).collect(),
            },
        }
    }
}

/// Typechecks a vertical composite; each part carries its source position.
fn seq(parts: Vec<(Tangle, usize)>) -> Result<Tangle> {
    if parts.len() == 1 {
        return Ok(parts.into_iter().next().expect("one part").0);
    }
    for w in parts.windows(2) {
        let (upper, lower) = (&w[0].0, &w[1].0);
        if upper.tgt != lower.src {
            return Err(Error::Type(format!(
                "inner boundary mismatch at position {}: `{}` ends at {} but `{}` starts at {}",
                w[1].1, upper, upper.tgt, lower, lower.src
            )));
        }
    }
    let src = parts[0].0.src.clone();
    let tgt = parts[parts.len() - 1].0.tgt.clone();
    Ok(Tangle {
        node: Node::Seq(parts.into_iter().map(|(t, _)| t).collect()),
        src,
        tgt,
    })
}

fn par(parts: Vec<Tangle>) -> Tangle {
    if parts.len() == 1 {
        return parts.into_iter().next().expect("one part");
    }
    let src = Word::concat(parts.iter().map(|p| p.src.clone()));
    let tgt = Word::concat(parts.iter().map(|p| p.tgt.clone()));
    Tangle {
        node: Node::Par(parts),
        src,
        tgt,
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Semi,
    Bar,
    Open,
    Close,
    Name(String),
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            ';' | '|' | '(' | ')' => {
                chars.next();
                let tok = match c {
                    ';' => Token::Semi,
                    '|' => Token::Bar,
                    '(' => Token::Open,
                    _ => Token::Close,
                };
                out.push((tok, pos));
            }
            c if c.is_ascii_alphanumeric() || c == '+' || c == '-' || c == '*' => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '+' || c == '-' || c == '*' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((Token::Name(name), pos));
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn expr(&mut self) -> Result<Tangle> {
        let mut parts = vec![(self.term()?, 0)];
        while self.peek() == Some(&Token::Semi) {
            self.at += 1;
            let pos = self.pos();
            parts.push((self.term()?, pos));
        }
        seq(parts)
    }

    fn term(&mut self) -> Result<Tangle> {
        let mut parts = vec![self.factor()?];
        while self.peek() == Some(&Token::Bar) {
            self.at += 1;
            parts.push(self.factor()?);
        }
        Ok(par(parts))
    }

    fn factor(&mut self) -> Result<Tangle> {
        let pos = self.pos();
        match self.tokens.get(self.at).cloned() {
            Some((Token::Open, _)) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::Syntax {
                        pos: self.pos(),
                        msg: "expected `)`".into(),
                    });
                }
                self.at += 1;
                Ok(inner)
            }
            Some((Token::Name(name), _)) => {
                self.at += 1;
                let g = Generator::parse(&name).ok_or_else(|| Error::Syntax {
                    pos,
                    msg: format!("unknown generator `{name}`"),
                })?;
                Ok(Tangle::generator(g))
            }
            Some((tok, _)) => Err(Error::Syntax {
                pos,
                msg: format!("expected a generator or `(`, found {}", describe(&tok)),
            }),
            None => Err(Error::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

fn describe(tok: &Token) -> String {
    match tok {
        Token::Semi => "`;`".into(),
        Token::Bar => "`|`".into(),
        Token::Open => "`(`".into(),
        Token::Close => "`)`".into(),
        Token::Name(n) => format!("`{n}`"),
    }
}

/// Parses and typechecks a tangle expression.
pub fn parse(text: &str) -> Result<Tangle> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        at: 0,
        end: text.len(),
    };
    let t = p.expr()?;
    if p.at != p.tokens.len() {
        let tok = p.tokens[p.at].0.clone();
        return Err(Error::Syntax {
            pos: p.pos(),
            msg: format!("unexpected {}", describe(&tok)),
        });
    }
    Ok(t)
}
