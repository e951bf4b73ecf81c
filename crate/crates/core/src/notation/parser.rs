//! Recursive-descent parser, one token of lookahead.
//!
//! ```text
//! program  := stmt*
//! stmt     := 'space' NAME '=' literal
//!           | 'map' NAME ':' NAME '->' NAME '=' '{' [entry (',' entry)*] '}'
//!           | 'lift' NAME '|>' NAME
//!           | 'check' PROPERTY NAME
//!           | 'orthogonal' ('left' | 'right') '[' [NAME (',' NAME)*] ']' 'size' N
//!           | 'mono' NAME 'size' N | 'epi' NAME 'size' N
//!           | 'hom' NAME NAME
//!           | 'enumerate' N
//! literal  := '{' [item (',' item)*] '}'
//! item     := NAME (('<' | '<>') NAME)*
//! entry    := NAME '|->' NAME
//! ```
//!
//! Names must be declared before use. Monotonicity of map declarations is
//! not checked here; see [`super::eval::validate`].

use std::collections::HashMap;

use crate::builtin;
use crate::characterize::{Property, SubjectKind};
use crate::preorder::{FinPreorder, DEFAULT_SIZE_CAP};
use crate::universe::Side;

use super::ast::{Declaration, MapDecl, Program, Query, SpaceDecl};
use super::error::{ErrorKind, NotationError, Pos};
use super::lexer::{tokenize, Tok, Token};

pub fn parse(text: &str) -> Result<Program, NotationError> {
    parse_with_cap(text, DEFAULT_SIZE_CAP)
}

/// Like [`parse`] with a custom cap on `size N` / `enumerate N`.
pub fn parse_with_cap(text: &str, cap: usize) -> Result<Program, NotationError> {
    let mut parser = Parser::new(tokenize(text)?, cap);
    parser.program()?;
    Ok(parser.out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    cap: usize,
    spaces: HashMap<String, FinPreorder>,
    maps: HashMap<String, (String, String)>,
    out: Program,
}

type PResult<T> = Result<T, NotationError>;

fn is_name(w: &str) -> bool {
    !w.is_empty() && w.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Parser {
    fn new(toks: Vec<Token>, cap: usize) -> Self {
        let spaces = builtin::SPACE_NAMES
            .iter()
            .map(|&n| (n.to_string(), (*builtin::space_by_name(n).unwrap()).clone()))
            .collect();
        let maps = builtin::MAP_NAMES
            .iter()
            .map(|&n| {
                let (s, t) = builtin::map_endpoints(n).unwrap();
                (n.to_string(), (s.to_string(), t.to_string()))
            })
            .collect();
        Self {
            toks,
            at: 0,
            cap,
            spaces,
            maps,
            out: Program::default(),
        }
    }

    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, pos: Pos, msg: String) -> PResult<T> {
        Err(NotationError::new(pos, ErrorKind::Syntax(msg)))
    }

    fn expect(&mut self, tok: Tok) -> PResult<Pos> {
        let t = self.bump();
        if t.tok == tok {
            Ok(t.pos)
        } else {
            self.syntax(t.pos, format!("expected {}, found {}", tok.describe(), t.tok.describe()))
        }
    }

    fn word(&mut self, what: &str) -> PResult<(String, Pos)> {
        let t = self.bump();
        match t.tok {
            Tok::Word(w) => Ok((w, t.pos)),
            other => self.syntax(t.pos, format!("expected {what}, found {}", other.describe())),
        }
    }

    fn name(&mut self, what: &str) -> PResult<(String, Pos)> {
        let (w, pos) = self.word(what)?;
        if !is_name(&w) {
            return Err(NotationError::new(pos, ErrorKind::InvalidName(w)));
        }
        Ok((w, pos))
    }

    fn number(&mut self) -> PResult<usize> {
        let (w, pos) = self.word("a number")?;
        let n: usize = match w.parse() {
            Ok(n) => n,
            Err(_) => return self.syntax(pos, format!("expected a number, found `{w}`")),
        };
        if n > self.cap {
            return Err(NotationError::new(
                pos,
                ErrorKind::SizeCap {
                    requested: n,
                    cap: self.cap,
                },
            ));
        }
        Ok(n)
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        let (w, pos) = self.word(&format!("`{kw}`"))?;
        if w == kw {
            Ok(())
        } else {
            self.syntax(pos, format!("expected `{kw}`, found `{w}`"))
        }
    }

    fn space_ref(&mut self) -> PResult<String> {
        let (name, pos) = self.name("a space name")?;
        if !self.spaces.contains_key(&name) {
            return Err(NotationError::new(pos, ErrorKind::UnknownName { kind: "space", name }));
        }
        Ok(name)
    }

    fn map_ref(&mut self) -> PResult<String> {
        let (name, pos) = self.name("a map name")?;
        if !self.maps.contains_key(&name) {
            return Err(NotationError::new(pos, ErrorKind::UnknownName { kind: "map", name }));
        }
        Ok(name)
    }

    fn fresh(&mut self, kind: &'static str) -> PResult<String> {
        let (name, pos) = self.name(&format!("a {kind} name"))?;
        if builtin::is_reserved(&name) {
            return Err(NotationError::new(pos, ErrorKind::Reserved(name)));
        }
        let taken = match kind {
            "space" => self.spaces.contains_key(&name),
            _ => self.maps.contains_key(&name),
        };
        if taken {
            return Err(NotationError::new(pos, ErrorKind::Redeclared { kind, name }));
        }
        Ok(name)
    }

    fn program(&mut self) -> PResult<()> {
        loop {
            let t = self.peek().clone();
            let kw = match &t.tok {
                Tok::Eof => return Ok(()),
                Tok::Word(w) => w.clone(),
                other => return self.syntax(t.pos, format!("expected a statement, found {}", other.describe())),
            };
            self.bump();
            match kw.as_str() {
                "space" => self.space_decl()?,
                "map" => self.map_decl()?,
                "lift" => {
                    let left = self.map_ref()?;
                    self.expect(Tok::Lifts)?;
                    let right = self.map_ref()?;
                    self.out.queries.push(Query::Lift { left, right });
                }
                "check" => {
                    let (id, pos) = self.word("a property")?;
                    let property: Property = id
                        .parse()
                        .map_err(|_| NotationError::new(pos, ErrorKind::UnknownProperty(id.clone())))?;
                    let subject = match property.subject() {
                        SubjectKind::Space => self.space_ref()?,
                        SubjectKind::Map => self.map_ref()?,
                    };
                    self.out.queries.push(Query::Check { property, subject });
                }
                "orthogonal" => {
                    let (w, pos) = self.word("`left` or `right`")?;
                    let side: Side = match w.parse() {
                        Ok(s) => s,
                        Err(msg) => return self.syntax(pos, msg),
                    };
                    self.expect(Tok::LBracket)?;
                    let mut tests = Vec::new();
                    if self.peek().tok != Tok::RBracket {
                        tests.push(self.map_ref()?);
                        while self.peek().tok == Tok::Comma {
                            self.bump();
                            tests.push(self.map_ref()?);
                        }
                    }
                    self.expect(Tok::RBracket)?;
                    self.keyword("size")?;
                    let size = self.number()?;
                    self.out.queries.push(Query::Orthogonal { side, tests, size });
                }
                "mono" | "epi" => {
                    let map = self.map_ref()?;
                    self.keyword("size")?;
                    let size = self.number()?;
                    self.out.queries.push(if kw == "mono" {
                        Query::Mono { map, size }
                    } else {
                        Query::Epi { map, size }
                    });
                }
                "hom" => {
                    let source = self.space_ref()?;
                    let target = self.space_ref()?;
                    self.out.queries.push(Query::Hom { source, target });
                }
                "enumerate" => {
                    let size = self.number()?;
                    self.out.queries.push(Query::Enumerate { size });
                }
                other => return self.syntax(t.pos, format!("expected a statement, found `{other}`")),
            }
        }
    }

    fn space_decl(&mut self) -> PResult<()> {
        let name = self.fresh("space")?;
        self.expect(Tok::Equals)?;
        let space = self.literal()?;
        self.spaces.insert(name.clone(), space.clone());
        self.out
            .declarations
            .push(Declaration::Space(SpaceDecl { name, space }));
        Ok(())
    }

    fn literal(&mut self) -> PResult<FinPreorder> {
        self.expect(Tok::LBrace)?;
        let mut labels: Vec<String> = Vec::new();
        let mut generators: Vec<(String, String)> = Vec::new();
        let note = |labels: &mut Vec<String>, l: &str| {
            if !labels.iter().any(|x| x == l) {
                labels.push(l.to_string());
            }
        };
        if self.peek().tok != Tok::RBrace {
            loop {
                let (mut prev, _) = self.name("a point name")?;
                note(&mut labels, &prev);
                while matches!(self.peek().tok, Tok::Below | Tok::Equiv) {
                    let op = self.bump().tok;
                    let (next, _) = self.name("a point name")?;
                    note(&mut labels, &next);
                    generators.push((prev.clone(), next.clone()));
                    if op == Tok::Equiv {
                        generators.push((next.clone(), prev.clone()));
                    }
                    prev = next;
                }
                if self.peek().tok == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RBrace)?;
        Ok(FinPreorder::build(&labels, &generators).expect("labels are distinct and declared"))
    }

    fn map_decl(&mut self) -> PResult<()> {
        let name = self.fresh("map")?;
        self.expect(Tok::Colon)?;
        let source = self.space_ref()?;
        self.expect(Tok::Arrow)?;
        let target = self.space_ref()?;
        self.expect(Tok::Equals)?;
        self.expect(Tok::LBrace)?;
        let src = self.spaces[&source].clone();
        let tgt = self.spaces[&target].clone();
        let mut slots: Vec<Option<(String, Pos)>> = vec![None; src.len()];
        if self.peek().tok != Tok::RBrace {
            loop {
                let (x, xpos) = self.name("a point name")?;
                let xi = src.index_of(&x).ok_or_else(|| {
                    NotationError::new(
                        xpos,
                        ErrorKind::UnknownLabel {
                            label: x.clone(),
                            space: source.clone(),
                        },
                    )
                })?;
                self.expect(Tok::MapsTo)?;
                let (y, ypos) = self.name("a point name")?;
                if tgt.index_of(&y).is_none() {
                    return Err(NotationError::new(
                        ypos,
                        ErrorKind::UnknownLabel {
                            label: y,
                            space: target.clone(),
                        },
                    ));
                }
                if slots[xi].is_some() {
                    return Err(NotationError::new(
                        xpos,
                        ErrorKind::AssignedTwice {
                            map: name.clone(),
                            label: x,
                        },
                    ));
                }
                slots[xi] = Some((y, xpos));
                if self.peek().tok == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        let close = self.expect(Tok::RBrace)?;
        let missing: Vec<&str> = src
            .points()
            .filter(|&x| slots[x].is_none())
            .map(|x| src.label(x))
            .collect();
        if !missing.is_empty() {
            return Err(NotationError::new(
                close,
                ErrorKind::NotTotal {
                    map: name,
                    missing: missing.join(", "),
                },
            ));
        }
        let (assign, entry_pos) = slots
            .into_iter()
            .enumerate()
            .map(|(x, slot)| {
                let (y, pos) = slot.expect("checked total");
                ((src.label(x).to_string(), y), pos)
            })
            .unzip();
        self.maps.insert(name.clone(), (source.clone(), target.clone()));
        self.out.declarations.push(Declaration::Map(MapDecl {
            name,
            source,
            target,
            assign,
            entry_pos,
        }));
        Ok(())
    }
}
