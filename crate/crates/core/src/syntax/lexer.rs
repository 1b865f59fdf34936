use rug::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    T,
    Theta,
    D,
    Int(Integer),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::T => "'t'".into(),
            Tok::Theta => "'theta'".into(),
            Tok::D => "'D'".into(),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

/// A token with its character offset in the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub pos: usize,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' | '\u{00b7}' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '\u{03b8}' => Some(Tok::Theta),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, pos });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[pos..i].iter().collect();
            let n = Integer::from_str_radix(&digits, 10).expect("ascii digits");
            out.push(Spanned { tok: Tok::Int(n), pos });
        } else if c.is_alphabetic() {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[pos..i].iter().collect();
            let tok = match word.as_str() {
                "t" => Tok::T,
                "theta" => Tok::Theta,
                "D" => Tok::D,
                _ => {
                    return Err(Error::Syntax { position: pos, message: format!("unknown identifier '{word}'") })
                }
            };
            out.push(Spanned { tok, pos });
        } else {
            return Err(Error::Syntax { position: pos, message: format!("unexpected character '{c}'") });
        }
    }
    out.push(Spanned { tok: Tok::End, pos: chars.len() });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|s| s.tok).collect()
    }

    #[test]
    fn basic_tokens() {
        assert_eq!(
            toks("theta^2 - 1/4*t"),
            vec![
                Tok::Theta,
                Tok::Caret,
                Tok::Int(2.into()),
                Tok::Minus,
                Tok::Int(1.into()),
                Tok::Slash,
                Tok::Int(4.into()),
                Tok::Star,
                Tok::T,
                Tok::End
            ]
        );
        assert_eq!(toks("θ·D"), vec![Tok::Theta, Tok::Star, Tok::D, Tok::End]);
    }

    #[test]
    fn positions_and_errors() {
        let s = tokenize("  t +x").unwrap_err();
        assert_eq!(s, Error::Syntax { position: 5, message: "unknown identifier 'x'".into() });
        assert!(matches!(tokenize("t % 2"), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(tokenize("tt"), Err(Error::Syntax { position: 0, .. })));
        let sp = tokenize("12 ").unwrap();
        assert_eq!(sp[1].pos, 3);
    }
}
