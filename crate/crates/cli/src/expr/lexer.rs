use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Define,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Define => "`:=`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub offset: usize,
}

pub fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let single = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b',' => Some(Tok::Comma),
            b';' => Some(Tok::Semi),
            _ => None,
        };
        let tok = if let Some(t) = single {
            pos += 1;
            t
        } else if c == b':' && bytes.get(pos + 1) == Some(&b'=') {
            pos += 2;
            Tok::Define
        } else if c.is_ascii_digit() {
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            Tok::Int(text[start..pos].to_string())
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            Tok::Ident(text[start..pos].to_string())
        } else {
            let ch = text[start..].chars().next().unwrap_or('?');
            return Err(CliError::Syntax { offset: start, expected: vec!["a token".into()], found: format!("`{ch}`") });
        };
        out.push(Token { tok, offset: start });
    }
    out.push(Token { tok: Tok::Eof, offset: text.len() });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_offsets() {
        let t = lex("x := (1/3)*E11[12];").unwrap();
        let kinds: Vec<Tok> = t.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(kinds[1], Tok::Define);
        assert_eq!(kinds[4], Tok::Slash);
        assert_eq!(t[1].offset, 2);
        assert_eq!(kinds.last(), Some(&Tok::Eof));
    }

    #[test]
    fn rejects_stray_characters() {
        let err = lex("1 + $").unwrap_err();
        assert!(matches!(err, CliError::Syntax { offset: 4, .. }));
    }
}
