//! A small ASCII notation for spaces, maps and lifting queries.
//!
//! ```text
//! # Sierpinski space and its collapse
//! space S = { b < s }
//! map c : S -> PT = { b |-> pt, s |-> pt }
//! lift CODIAG |> c
//! check T1 S
//! orthogonal left [SIERP_TO_PT] size 2
//! ```

mod ast;
mod error;
mod eval;
mod lexer;
mod parser;
mod print;
mod result;

pub use ast::{Declaration, MapDecl, Program, Query, SpaceDecl};
pub use error::{ErrorKind, NotationError, Pos};
pub use eval::{execute, run_program, validate, Environment, Outcome, QueryResult, RunError};
pub use lexer::{tokenize, Tok, Token};
pub use parser::{parse, parse_with_cap};
pub use print::{map_literal, print_map, print_program, print_query, print_space, space_literal};
pub use result::{encode_result, encode_result_line, print_result, FORMAT_VERSION};
