//! Parser for the eNB configuration file format.
//!
//! The accepted grammar is the subset of libconfig syntax that base-station
//! configuration files actually use:
//!
//! ```text
//! file      = { assignment }
//! assignment= NAME ("=" | ":") value terminator
//! value     = INTEGER [L] | "string" | group | list-of-groups
//! group     = "{" { assignment } "}"
//! list      = "(" [ group { "," group } [","] ] ")"
//! ```
//!
//! `#` and `//` start comments running to end of line. A `;` terminates an
//! assignment; a line break (or a closing bracket) is accepted in its place,
//! which keeps files with a stray missing semicolon parseable.

use std::fmt;

/// A parsed configuration value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigValue {
    /// Signed 64-bit integer. A trailing `L` suffix in the source is ignored.
    Int(i64),
    /// Double-quoted string (includes boolean-like strings such as `"yes"`).
    Str(String),
    /// Nested group of assignments.
    Group(ConfigTree),
    /// Parenthesised list of groups.
    List(Vec<ConfigTree>),
}

/// Ordered name -> value map; names are unique within a scope.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConfigTree {
    entries: Vec<(String, ConfigValue)>,
}

impl ConfigTree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &ConfigValue)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn get(&self, name: &str) -> Option<&ConfigValue> {
        self.entries.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn get_int(&self, name: &str) -> Option<i64> {
        match self.get(name) {
            Some(ConfigValue::Int(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn get_str(&self, name: &str) -> Option<&str> {
        match self.get(name) {
            Some(ConfigValue::Str(s)) => Some(s.as_str()),
            _ => None,
        }
    }

    pub fn get_group(&self, name: &str) -> Option<&ConfigTree> {
        match self.get(name) {
            Some(ConfigValue::Group(g)) => Some(g),
            _ => None,
        }
    }

    pub fn get_list(&self, name: &str) -> Option<&[ConfigTree]> {
        match self.get(name) {
            Some(ConfigValue::List(l)) => Some(l.as_slice()),
            _ => None,
        }
    }

    fn insert(&mut self, name: String, value: ConfigValue) -> bool {
        if self.get(&name).is_some() {
            return false;
        }
        self.entries.push((name, value));
        true
    }

    /// Render back to configuration-file text. Parsing the result yields an
    /// identical tree.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        write_tree(self, 0, &mut out);
        out
    }
}

fn indent(level: usize, out: &mut String) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn write_tree(tree: &ConfigTree, level: usize, out: &mut String) {
    for (name, value) in tree.entries() {
        indent(level, out);
        out.push_str(name);
        out.push_str(" = ");
        write_value(value, level, out);
        out.push_str(";\n");
    }
}

fn write_value(value: &ConfigValue, level: usize, out: &mut String) {
    match value {
        ConfigValue::Int(v) => out.push_str(&v.to_string()),
        ConfigValue::Str(s) => {
            out.push('"');
            for c in s.chars() {
                match c {
                    '"' => out.push_str("\\\""),
                    '\\' => out.push_str("\\\\"),
                    _ => out.push(c),
                }
            }
            out.push('"');
        }
        ConfigValue::Group(g) => {
            out.push_str("{\n");
            write_tree(g, level + 1, out);
            indent(level, out);
            out.push('}');
        }
        ConfigValue::List(groups) => {
            out.push_str("(\n");
            for (i, g) in groups.iter().enumerate() {
                indent(level + 1, out);
                out.push_str("{\n");
                write_tree(g, level + 2, out);
                indent(level + 1, out);
                out.push('}');
                if i + 1 < groups.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            indent(level, out);
            out.push(')');
        }
    }
}

/// Parse error with source position (1-based line and column).
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: u32, col: u32, msg: String },
    #[error("duplicate key `{name}` at {line}:{col}")]
    DuplicateKey { line: u32, col: u32, name: String },
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Name(String),
    Int(i64),
    Str(String),
    Assign, // '=' or ':'
    Semi,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Name(n) => write!(f, "`{n}`"),
            Token::Int(v) => write!(f, "integer {v}"),
            Token::Str(_) => write!(f, "string"),
            Token::Assign => write!(f, "`=`"),
            Token::Semi => write!(f, "`;`"),
            Token::LBrace => write!(f, "`{{`"),
            Token::RBrace => write!(f, "`}}`"),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
            Token::Comma => write!(f, "`,`"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Token,
    line: u32,
    col: u32,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = *self.src.get(self.pos)?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(b' ') | Some(b'\t') | Some(b'\r') | Some(b'\n') => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                Some(b'/') if self.src.get(self.pos + 1) == Some(&b'/') => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn tokenize(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_trivia();
            let (line, col) = (self.line, self.col);
            let Some(b) = self.peek() else { break };
            let tok = match b {
                b'=' | b':' => {
                    self.bump();
                    Token::Assign
                }
                b';' => {
                    self.bump();
                    Token::Semi
                }
                b'{' => {
                    self.bump();
                    Token::LBrace
                }
                b'}' => {
                    self.bump();
                    Token::RBrace
                }
                b'(' => {
                    self.bump();
                    Token::LParen
                }
                b')' => {
                    self.bump();
                    Token::RParen
                }
                b',' => {
                    self.bump();
                    Token::Comma
                }
                b'"' => {
                    self.bump();
                    let mut s = String::new();
                    loop {
                        match self.bump() {
                            None => return Err(self.err("unterminated string")),
                            Some(b'"') => break,
                            Some(b'\\') => match self.bump() {
                                Some(b'"') => s.push('"'),
                                Some(b'\\') => s.push('\\'),
                                Some(c) => {
                                    return Err(self.err(format!(
                                        "unsupported escape `\\{}`",
                                        c as char
                                    )))
                                }
                                None => return Err(self.err("unterminated string")),
                            },
                            Some(c) => s.push(c as char),
                        }
                    }
                    Token::Str(s)
                }
                b'-' | b'+' | b'0'..=b'9' => {
                    let mut text = String::new();
                    if b == b'-' || b == b'+' {
                        text.push(b as char);
                        self.bump();
                        if !matches!(self.peek(), Some(b'0'..=b'9')) {
                            return Err(self.err("expected digits after sign"));
                        }
                    }
                    while let Some(c @ b'0'..=b'9') = self.peek() {
                        text.push(c as char);
                        self.bump();
                    }
                    // trailing long suffix, as written by some config generators
                    if self.peek() == Some(b'L') {
                        self.bump();
                    }
                    let v: i64 = text
                        .parse()
                        .map_err(|_| self.err(format!("integer `{text}` out of 64-bit range")))?;
                    Token::Int(v)
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let mut name = String::new();
                    while let Some(c) = self.peek() {
                        if c.is_ascii_alphanumeric() || c == b'_' {
                            name.push(c as char);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Token::Name(name)
                }
                c => return Err(self.err(format!("unexpected character `{}`", c as char))),
            };
            out.push(Spanned { tok, line, col });
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_at(&self, msg: impl Into<String>) -> ParseError {
        match self.peek() {
            Some(s) => ParseError::Syntax { line: s.line, col: s.col, msg: msg.into() },
            None => {
                let (line, col) = self
                    .toks
                    .last()
                    .map(|s| (s.line, s.col))
                    .unwrap_or((1, 1));
                ParseError::Syntax { line, col, msg: msg.into() }
            }
        }
    }

    fn parse_tree(&mut self, top_level: bool) -> Result<ConfigTree, ParseError> {
        let mut tree = ConfigTree::new();
        loop {
            match self.peek() {
                None => {
                    if top_level {
                        return Ok(tree);
                    }
                    return Err(self.err_at("unexpected end of input inside group"));
                }
                Some(s) if s.tok == Token::RBrace => {
                    if top_level {
                        return Err(self.err_at("unmatched `}`"));
                    }
                    return Ok(tree);
                }
                Some(s) => {
                    let (line, col) = (s.line, s.col);
                    let name = match self.bump().unwrap().tok {
                        Token::Name(n) => n,
                        other => {
                            self.pos -= 1;
                            return Err(self.err_at(format!("expected a name, found {other}")));
                        }
                    };
                    match self.peek().map(|s| &s.tok) {
                        Some(Token::Assign) => {
                            self.bump();
                        }
                        _ => return Err(self.err_at(format!("expected `=` after `{name}`"))),
                    }
                    let value_line = self.peek().map(|s| s.line).unwrap_or(line);
                    let value = self.parse_value()?;
                    self.expect_terminator(value_line)?;
                    if !tree.insert(name.clone(), value) {
                        return Err(ParseError::DuplicateKey { line, col, name });
                    }
                }
            }
        }
    }

    fn parse_value(&mut self) -> Result<ConfigValue, ParseError> {
        match self.peek().map(|s| s.tok.clone()) {
            Some(Token::Int(v)) => {
                self.bump();
                Ok(ConfigValue::Int(v))
            }
            Some(Token::Str(s)) => {
                self.bump();
                Ok(ConfigValue::Str(s))
            }
            Some(Token::LBrace) => {
                self.bump();
                let g = self.parse_tree(false)?;
                match self.bump().map(|s| s.tok) {
                    Some(Token::RBrace) => Ok(ConfigValue::Group(g)),
                    _ => Err(self.err_at("expected `}` to close group")),
                }
            }
            Some(Token::LParen) => {
                self.bump();
                let mut groups = Vec::new();
                loop {
                    match self.peek().map(|s| s.tok.clone()) {
                        Some(Token::RParen) => {
                            self.bump();
                            break;
                        }
                        Some(Token::LBrace) => {
                            self.bump();
                            let g = self.parse_tree(false)?;
                            match self.bump().map(|s| s.tok) {
                                Some(Token::RBrace) => {}
                                _ => return Err(self.err_at("expected `}` to close group")),
                            }
                            groups.push(g);
                            if let Some(Token::Comma) = self.peek().map(|s| s.tok.clone()) {
                                self.bump();
                            }
                        }
                        _ => return Err(self.err_at("expected `{` or `)` in group list")),
                    }
                }
                Ok(ConfigValue::List(groups))
            }
            Some(other) => Err(self.err_at(format!("expected a value, found {other}"))),
            None => Err(self.err_at("expected a value, found end of input")),
        }
    }

    /// Consume `;` after a value. A line break before the next token (or a
    /// closing bracket / end of input) is accepted in its place.
    fn expect_terminator(&mut self, value_line: u32) -> Result<(), ParseError> {
        match self.peek() {
            Some(s) if s.tok == Token::Semi => {
                self.bump();
                Ok(())
            }
            None => Ok(()),
            Some(s) if matches!(s.tok, Token::RBrace | Token::RParen | Token::Comma) => Ok(()),
            Some(s) if s.line > value_line => Ok(()),
            Some(_) => Err(self.err_at("expected `;` after value")),
        }
    }
}

/// Parse full configuration-file text into a [`ConfigTree`].
pub fn parse_config(text: &str) -> Result<ConfigTree, ParseError> {
    let toks = Lexer::new(text).tokenize()?;
    let mut parser = Parser { toks, pos: 0 };
    parser.parse_tree(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_integer_assignment() {
        let tree = parse_config("eutra_band = 28;").unwrap();
        assert_eq!(tree.get_int("eutra_band"), Some(28));
    }

    #[test]
    fn empty_input_gives_empty_tree() {
        let tree = parse_config("").unwrap();
        assert!(tree.is_empty());
    }

    #[test]
    fn quoted_string_value() {
        let tree = parse_config("npdcch_Offset_RA = \"oneFourth\";").unwrap();
        assert_eq!(tree.get_str("npdcch_Offset_RA"), Some("oneFourth"));
    }

    #[test]
    fn missing_value_is_a_syntax_error() {
        let err = parse_config("x = ;").unwrap_err();
        match err {
            ParseError::Syntax { line: 1, col, .. } => assert_eq!(col, 5),
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn long_suffix_is_ignored() {
        let tree = parse_config("downlink_frequency = 780000000L;").unwrap();
        assert_eq!(tree.get_int("downlink_frequency"), Some(780_000_000));
    }

    #[test]
    fn negative_integer() {
        let tree = parse_config("uplink_frequency_offset = -55000000;").unwrap();
        assert_eq!(tree.get_int("uplink_frequency_offset"), Some(-55_000_000));
    }

    #[test]
    fn group_with_colon_assignment() {
        let tree = parse_config("NETWORK_INTERFACES :\n{\n  ENB_PORT_FOR_S1U = 2152; # spec 2152\n};\n").unwrap();
        let group = tree.get_group("NETWORK_INTERFACES").unwrap();
        assert_eq!(group.get_int("ENB_PORT_FOR_S1U"), Some(2152));
    }

    #[test]
    fn list_of_groups() {
        let tree = parse_config("cc = ( { a = 1; }, { a = 2; } );").unwrap();
        let list = tree.get_list("cc").unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!(list[0].get_int("a"), Some(1));
        assert_eq!(list[1].get_int("a"), Some(2));
    }

    #[test]
    fn newline_accepted_in_place_of_semicolon() {
        let tree = parse_config("a = \"zero\"\nb = 3;").unwrap();
        assert_eq!(tree.get_str("a"), Some("zero"));
        assert_eq!(tree.get_int("b"), Some(3));
    }

    #[test]
    fn same_line_missing_semicolon_is_an_error() {
        assert!(parse_config("a = 1 b = 2;").is_err());
    }

    #[test]
    fn duplicate_key_in_scope_rejected() {
        let err = parse_config("a = 1;\na = 2;").unwrap_err();
        match err {
            ParseError::DuplicateKey { name, line, .. } => {
                assert_eq!(name, "a");
                assert_eq!(line, 2);
            }
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn duplicates_allowed_across_scopes() {
        let tree = parse_config("g1 = { a = 1; };\ng2 = { a = 2; };").unwrap();
        assert_eq!(tree.get_group("g1").unwrap().get_int("a"), Some(1));
        assert_eq!(tree.get_group("g2").unwrap().get_int("a"), Some(2));
    }

    #[test]
    fn both_comment_styles() {
        let tree = parse_config("# hash comment\n////////// slashes:\na = 1;\n").unwrap();
        assert_eq!(tree.get_int("a"), Some(1));
    }

    #[test]
    fn serialize_parse_is_identity() {
        let text = "a = 1;\nb = \"two\";\ng = { c = -3; };\nl = ( { d = 4; }, { d = 5; } );";
        let tree = parse_config(text).unwrap();
        let round = parse_config(&tree.serialize()).unwrap();
        assert_eq!(tree, round);
    }

    #[test]
    fn integer_overflow_is_reported() {
        assert!(parse_config("x = 99999999999999999999;").is_err());
    }
}
