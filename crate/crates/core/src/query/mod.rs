//! The fuzzy query dialect: tokenizer, recursive-descent parser, and the
//! Tahani-style evaluator that turns a parsed condition into per-record
//! fire strengths and a ranked result list.
//!
//! Grammar:
//!
//! ```text
//! query := SELECT '*' FROM ident WHERE cond
//! cond  := term ('Or' term)*
//! term  := factor ('And' factor)*
//! factor:= 'Not' factor | '(' cond ')' | ident '=' quoted
//! ```
//!
//! Keywords are case-insensitive; `And` binds tighter than `Or`, both
//! associate left. Predicates combine by minimum, `Or` by maximum, `Not`
//! by complement.

mod ast;
mod eval;
mod lexer;
mod parser;

pub use ast::{pretty_print, ConditionNode, QueryAst};
pub use eval::{evaluate, run_query, EvalError, PredicateDegree, QueryRecord, RankedRow, RecordEvalError};
pub use lexer::{tokenize, LexError, SourcePosition, Token, TokenKind};
pub use parser::{parse, parse_query, ParseError, QueryParseError};
