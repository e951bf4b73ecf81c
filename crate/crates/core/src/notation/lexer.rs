use super::error::{ErrorKind, NotationError, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    /// Names, keywords, property ids and numbers; `[A-Za-z0-9_]` plus
    /// interior hyphens (`pi0-injective`).
    Word(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Equals,
    /// `<`
    Below,
    /// `<>`
    Equiv,
    /// `->`
    Arrow,
    /// `|->`
    MapsTo,
    /// `|>`
    Lifts,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Below => "`<`".into(),
            Tok::Equiv => "`<>`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::MapsTo => "`|->`".into(),
            Tok::Lifts => "`|>`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, NotationError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0usize, 1usize, 1usize);
    let at = |k: usize| chars.get(k).copied();

    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        let advance = |n: usize, i: &mut usize, column: &mut usize| {
            *i += n;
            *column += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => advance(1, &mut i, &mut column),
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            c if is_word_char(c) => {
                let start = i;
                while let Some(c) = at(i) {
                    if is_word_char(c) || (c == '-' && at(i + 1).is_some_and(is_word_char)) {
                        i += 1;
                    } else {
                        break;
                    }
                }
                column += i - start;
                out.push(Token {
                    tok: Tok::Word(chars[start..i].iter().collect()),
                    pos,
                });
            }
            _ => {
                let (tok, len) = match (c, at(i + 1), at(i + 2)) {
                    ('{', ..) => (Tok::LBrace, 1),
                    ('}', ..) => (Tok::RBrace, 1),
                    ('[', ..) => (Tok::LBracket, 1),
                    (']', ..) => (Tok::RBracket, 1),
                    (',', ..) => (Tok::Comma, 1),
                    (':', ..) => (Tok::Colon, 1),
                    ('=', ..) => (Tok::Equals, 1),
                    ('<', Some('>'), _) => (Tok::Equiv, 2),
                    ('<', ..) => (Tok::Below, 1),
                    ('-', Some('>'), _) => (Tok::Arrow, 2),
                    ('|', Some('-'), Some('>')) => (Tok::MapsTo, 3),
                    ('|', Some('>'), _) => (Tok::Lifts, 2),
                    _ => {
                        return Err(NotationError::new(
                            pos,
                            ErrorKind::Lexical(format!("unexpected character `{c}`")),
                        ))
                    }
                };
                out.push(Token { tok, pos });
                advance(len, &mut i, &mut column);
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, column },
    });
    Ok(out)
}
