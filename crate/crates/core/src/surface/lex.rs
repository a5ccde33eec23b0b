//! Tokenizer for `.hit` files.

use super::ast::Span;
use crate::errors::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    KwPostulate,
    KwDef,
    KwAnd,
    KwRewrite,
    KwInstance,
    KwCoh,
    KwImport,
    KwType,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Colon,
    Arrow,
    DoubleEq,
    Assign,
    Lambda,
    Pipe,
    Underscore,
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '&'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '\'' || c == '_'
}

pub fn lex(src: &str) -> Result<Vec<Token>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0usize;
    let mut line = 1usize;
    let mut col = 1usize;
    macro_rules! push {
        ($t:expr, $span:expr) => {
            toks.push(Token { tok: $t, span: $span })
        };
    }
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line, col };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '-' if i + 1 < chars.len() && chars[i + 1] == '-' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '-' if i + 1 < chars.len() && chars[i + 1] == '>' => {
                push!(Tok::Arrow, span);
                i += 2;
                col += 2;
            }
            '(' => {
                push!(Tok::LParen, span);
                i += 1;
                col += 1;
            }
            ')' => {
                push!(Tok::RParen, span);
                i += 1;
                col += 1;
            }
            '{' => {
                push!(Tok::LBrace, span);
                i += 1;
                col += 1;
            }
            '}' => {
                push!(Tok::RBrace, span);
                i += 1;
                col += 1;
            }
            ':' => {
                push!(Tok::Colon, span);
                i += 1;
                col += 1;
            }
            '|' => {
                push!(Tok::Pipe, span);
                i += 1;
                col += 1;
            }
            '\\' | 'λ' => {
                push!(Tok::Lambda, span);
                i += 1;
                col += 1;
            }
            '=' if i + 1 < chars.len() && chars[i + 1] == '=' => {
                push!(Tok::DoubleEq, span);
                i += 2;
                col += 2;
            }
            '=' => {
                push!(Tok::Assign, span);
                i += 1;
                col += 1;
            }
            '_' if i + 1 >= chars.len() || !is_ident_continue(chars[i + 1]) => {
                push!(Tok::Underscore, span);
                i += 1;
                col += 1;
            }
            c if is_ident_start(c) => {
                let mut s = String::new();
                while i < chars.len() {
                    let c = chars[i];
                    if is_ident_continue(c) || c == '&' {
                        s.push(c);
                        i += 1;
                        col += 1;
                    } else if c == '-'
                        && i + 1 < chars.len()
                        && (chars[i + 1].is_alphanumeric())
                    {
                        // hyphenated names like `po-ap-in`; `->` and `--`
                        // never reach here because of the peek.
                        s.push(c);
                        i += 1;
                        col += 1;
                    } else {
                        break;
                    }
                }
                let tok = match s.as_str() {
                    "postulate" => Tok::KwPostulate,
                    "def" => Tok::KwDef,
                    "and" => Tok::KwAnd,
                    "rewrite" => Tok::KwRewrite,
                    "instance" => Tok::KwInstance,
                    "coh" => Tok::KwCoh,
                    "import" => Tok::KwImport,
                    "Type" => Tok::KwType,
                    _ => Tok::Ident(s),
                };
                push!(tok, span);
            }
            other => {
                return Err(Error::ParseError {
                    line,
                    col,
                    expected: format!("a token (found `{}`)", other),
                });
            }
        }
    }
    toks.push(Token { tok: Tok::Eof, span: Span { line, col } });
    Ok(toks)
}
