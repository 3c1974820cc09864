use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Select,
    Star,
    From,
    Where,
    And,
    Or,
    Not,
    LParen,
    RParen,
    Equals,
    Identifier,
    QuotedString,
}

/// One lexical unit; `position` is the byte offset of its first character
/// in the source (for quoted strings, the opening quote).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub position: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("lex error at byte {position}: {message}")]
pub struct LexError {
    pub position: usize,
    pub message: String,
}

/// A byte offset resolved to a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourcePosition {
    pub line: usize,
    pub column: usize,
    pub line_text: String,
}

impl SourcePosition {
    /// Resolves a byte offset within `source`, clamping past-the-end
    /// offsets to just after the last character.
    pub fn locate(source: &str, position: usize) -> Self {
        let position = position.min(source.len());
        let before = &source[..position];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map(|i| i + 1).unwrap_or(0);
        let column = source[line_start..position].chars().count() + 1;
        let line_text = source[line_start..]
            .lines()
            .next()
            .unwrap_or("")
            .to_string();
        SourcePosition {
            line,
            column,
            line_text,
        }
    }

    /// The offending line with a caret under the column.
    pub fn caret_block(&self) -> String {
        format!("{}\n{}^", self.line_text, " ".repeat(self.column - 1))
    }
}

impl fmt::Display for SourcePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

fn keyword(word: &str) -> Option<TokenKind> {
    match word.to_ascii_lowercase().as_str() {
        "select" => Some(TokenKind::Select),
        "from" => Some(TokenKind::From),
        "where" => Some(TokenKind::Where),
        "and" => Some(TokenKind::And),
        "or" => Some(TokenKind::Or),
        "not" => Some(TokenKind::Not),
        _ => None,
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Splits query text into tokens.
///
/// Keywords match case-insensitively; identifiers are letters, digits and
/// underscores (no internal spaces — multi-word attributes are written with
/// underscores). Quoted strings use double quotes and carry their content
/// without the quotes. Anything else is reported, never skipped.
pub fn tokenize(source: &str) -> Result<Vec<Token>, LexError> {
    let mut tokens = Vec::new();
    let mut chars = source.char_indices().peekable();

    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let symbol = |kind| Token {
            kind,
            text: c.to_string(),
            position: start,
        };
        match c {
            '*' => {
                tokens.push(symbol(TokenKind::Star));
                chars.next();
            }
            '(' => {
                tokens.push(symbol(TokenKind::LParen));
                chars.next();
            }
            ')' => {
                tokens.push(symbol(TokenKind::RParen));
                chars.next();
            }
            '=' => {
                tokens.push(symbol(TokenKind::Equals));
                chars.next();
            }
            '"' => {
                chars.next();
                let content_start = start + c.len_utf8();
                let mut end = None;
                for (i, ch) in chars.by_ref() {
                    if ch == '"' {
                        end = Some(i);
                        break;
                    }
                }
                let end = end.ok_or_else(|| LexError {
                    position: start,
                    message: "unterminated quoted string".to_string(),
                })?;
                tokens.push(Token {
                    kind: TokenKind::QuotedString,
                    text: source[content_start..end].to_string(),
                    position: start,
                });
            }
            _ if is_ident_start(c) => {
                let mut end = start;
                while let Some(&(i, ch)) = chars.peek() {
                    if is_ident_continue(ch) {
                        end = i + ch.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let text = &source[start..end];
                tokens.push(Token {
                    kind: keyword(text).unwrap_or(TokenKind::Identifier),
                    text: text.to_string(),
                    position: start,
                });
            }
            _ => {
                return Err(LexError {
                    position: start,
                    message: format!("illegal character {c:?}"),
                })
            }
        }
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(source: &str) -> Vec<TokenKind> {
        tokenize(source).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn tokenizes_a_full_query() {
        use TokenKind::*;
        let tokens = tokenize(r#"Select * From donors Where (usia = "Baya")"#).unwrap();
        let expected = [
            (Select, "Select"),
            (Star, "*"),
            (From, "From"),
            (Identifier, "donors"),
            (Where, "Where"),
            (LParen, "("),
            (Identifier, "usia"),
            (Equals, "="),
            (QuotedString, "Baya"),
            (RParen, ")"),
        ];
        assert_eq!(tokens.len(), expected.len());
        for (token, (kind, text)) in tokens.iter().zip(expected) {
            assert_eq!(token.kind, kind);
            assert_eq!(token.text, text);
        }
    }

    #[test]
    fn keywords_are_case_insensitive() {
        let upper = kinds("SELECT * FROM t WHERE a = \"x\" AND NOT b = \"y\"");
        let lower = kinds("select * from t where a = \"x\" and not b = \"y\"");
        assert_eq!(upper, lower);
    }

    #[test]
    fn quoted_text_excludes_quotes_and_keeps_spaces() {
        let tokens = tokenize(r#"x = "Agak Jauh""#).unwrap();
        assert_eq!(tokens[2].kind, TokenKind::QuotedString);
        assert_eq!(tokens[2].text, "Agak Jauh");
    }

    #[test]
    fn unterminated_quote_errors_at_opening_quote() {
        let err = tokenize(r#"Where (x = "unclosed"#).unwrap_err();
        assert_eq!(err.position, 11);
        assert!(err.message.contains("unterminated"));
    }

    #[test]
    fn illegal_character_is_reported() {
        let err = tokenize("a = \"x\" ; b").unwrap_err();
        assert_eq!(err.position, 8);
    }

    #[test]
    fn positions_are_byte_offsets() {
        let tokens = tokenize("ab  cd").unwrap();
        assert_eq!(tokens[0].position, 0);
        assert_eq!(tokens[1].position, 4);
    }

    #[test]
    fn locate_reports_line_and_column() {
        let source = "Select *\nFrom t\nWhere x = \"y\"";
        let pos = SourcePosition::locate(source, source.find('x').unwrap());
        assert_eq!(pos.line, 3);
        assert_eq!(pos.column, 7);
        assert_eq!(pos.line_text, "Where x = \"y\"");
        assert!(pos.caret_block().ends_with("      ^"));
    }
}
