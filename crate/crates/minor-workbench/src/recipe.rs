//! A miniature construction language for attachment recipes.
//!
//! A recipe starts from the half-grid and attaches complete or complete
//! bipartite patterns along row 0, selected by a column-sign predicate:
//!
//! ```text
//! base halfgrid; attach K5 where col < 0; attach K33 where col >= 0;
//! ```
//!
//! Grammar (whitespace-insensitive, case-sensitive keywords):
//!
//! ```text
//! recipe  := stmt (";" stmt)* ";"?
//! stmt    := "base" "halfgrid" | "attach" pattern "where" "col" cmp "0"
//! pattern := "K5" | "K33"
//! cmp     := "<" | "<=" | ">" | ">=" | "=="
//! ```
//!
//! # Example
//!
//! ```
//! use minor_workbench::construct::{build_g, TruncationParams};
//! use minor_workbench::recipe::{canonical_recipe, eval_recipe, parse_recipe};
//!
//! let r = parse_recipe("base halfgrid; attach K5 where col < 0; attach K33 where col >= 0;")
//!     .unwrap();
//! assert_eq!(r, canonical_recipe());
//! let p = TruncationParams::new(1, 1).unwrap();
//! assert_eq!(eval_recipe(&r, &p), build_g(&p));
//! ```

use std::fmt;

use thiserror::Error;

use crate::construct::{attach_k33, attach_k5, half_grid, TruncationParams};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttachPattern {
    K5,
    K33,
}

/// Column comparison against 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColCmp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

impl ColCmp {
    pub fn matches(&self, col: i32) -> bool {
        match self {
            ColCmp::Lt => col < 0,
            ColCmp::Le => col <= 0,
            ColCmp::Gt => col > 0,
            ColCmp::Ge => col >= 0,
            ColCmp::Eq => col == 0,
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            ColCmp::Lt => "<",
            ColCmp::Le => "<=",
            ColCmp::Gt => ">",
            ColCmp::Ge => ">=",
            ColCmp::Eq => "==",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statement {
    Base,
    Attach { pattern: AttachPattern, cmp: ColCmp },
}

/// A parsed recipe: exactly one `Base` statement, first, then any number of
/// attachments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    pub statements: Vec<Statement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecipeError {
    #[error("unexpected character {found:?} at byte {position}")]
    Lexical { position: usize, found: char },
    #[error("expected {expected} at byte {position}, found {found:?}")]
    Unexpected { position: usize, expected: &'static str, found: String },
    #[error("unknown pattern {name:?} at byte {position} (known: K5, K33)")]
    UnknownPattern { position: usize, name: String },
    #[error("recipe has no 'base halfgrid' statement")]
    MissingBase,
    #[error("duplicate 'base' statement at byte {position}")]
    DuplicateBase { position: usize },
    #[error("'base' must be the first statement (found at byte {position})")]
    BaseNotFirst { position: usize },
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Word(String),
    Cmp(ColCmp),
    Semicolon,
    Zero,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, RecipeError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            c if c.is_ascii_whitespace() => i += 1,
            ';' => {
                tokens.push((i, Token::Semicolon));
                i += 1;
            }
            '0' => {
                tokens.push((i, Token::Zero));
                i += 1;
            }
            '<' | '>' => {
                let wide = i + 1 < bytes.len() && bytes[i + 1] == b'=';
                let cmp = match (c, wide) {
                    ('<', false) => ColCmp::Lt,
                    ('<', true) => ColCmp::Le,
                    ('>', false) => ColCmp::Gt,
                    _ => ColCmp::Ge,
                };
                tokens.push((i, Token::Cmp(cmp)));
                i += if wide { 2 } else { 1 };
            }
            '=' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'=' {
                    tokens.push((i, Token::Cmp(ColCmp::Eq)));
                    i += 2;
                } else {
                    return Err(RecipeError::Lexical { position: i, found: '=' });
                }
            }
            c if c.is_ascii_alphanumeric() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push((start, Token::Word(text[start..i].to_string())));
            }
            other => return Err(RecipeError::Lexical { position: i, found: other }),
        }
    }
    Ok(tokens)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.at)
    }

    fn describe(token: &Token) -> String {
        match token {
            Token::Word(w) => w.clone(),
            Token::Cmp(c) => c.symbol().to_string(),
            Token::Semicolon => ";".to_string(),
            Token::Zero => "0".to_string(),
        }
    }

    fn unexpected(&self, expected: &'static str) -> RecipeError {
        match self.peek() {
            Some((position, token)) => RecipeError::Unexpected {
                position: *position,
                expected,
                found: Self::describe(token),
            },
            None => RecipeError::Unexpected {
                position: self.end,
                expected,
                found: "end of input".to_string(),
            },
        }
    }

    fn expect_word(&mut self, word: &'static str) -> Result<(), RecipeError> {
        match self.peek() {
            Some((_, Token::Word(w))) if w == word => {
                self.at += 1;
                Ok(())
            }
            _ => Err(self.unexpected(word)),
        }
    }

    fn statement(&mut self) -> Result<(usize, Statement), RecipeError> {
        let (position, token) = self.peek().cloned().ok_or_else(|| self.unexpected("statement"))?;
        match token {
            Token::Word(w) if w == "base" => {
                self.at += 1;
                self.expect_word("halfgrid")?;
                Ok((position, Statement::Base))
            }
            Token::Word(w) if w == "attach" => {
                self.at += 1;
                let pattern = match self.peek() {
                    Some((_, Token::Word(name))) => match name.as_str() {
                        "K5" => AttachPattern::K5,
                        "K33" => AttachPattern::K33,
                        _ => {
                            return Err(RecipeError::UnknownPattern {
                                position: self.peek().unwrap().0,
                                name: name.clone(),
                            })
                        }
                    },
                    _ => return Err(self.unexpected("pattern name")),
                };
                self.at += 1;
                self.expect_word("where")?;
                self.expect_word("col")?;
                let cmp = match self.peek() {
                    Some((_, Token::Cmp(cmp))) => *cmp,
                    _ => return Err(self.unexpected("comparison operator")),
                };
                self.at += 1;
                match self.peek() {
                    Some((_, Token::Zero)) => self.at += 1,
                    _ => return Err(self.unexpected("0")),
                }
                Ok((position, Statement::Attach { pattern, cmp }))
            }
            _ => Err(self.unexpected("'base' or 'attach'")),
        }
    }
}

/// Parses a recipe, checking the single-leading-`base` invariant.
pub fn parse_recipe(text: &str) -> Result<Recipe, RecipeError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, at: 0, end: text.len() };
    let mut statements = Vec::new();
    let mut base_seen = false;
    loop {
        let (position, stmt) = parser.statement()?;
        match stmt {
            Statement::Base if base_seen => {
                return Err(RecipeError::DuplicateBase { position });
            }
            Statement::Base if !statements.is_empty() => {
                return Err(RecipeError::BaseNotFirst { position });
            }
            Statement::Base => base_seen = true,
            Statement::Attach { .. } => {}
        }
        statements.push(stmt);
        match parser.peek() {
            Some((_, Token::Semicolon)) => {
                parser.at += 1;
                if parser.peek().is_none() {
                    break; // trailing semicolon
                }
            }
            None => break,
            Some(_) => return Err(parser.unexpected(";")),
        }
    }
    if !base_seen {
        return Err(RecipeError::MissingBase);
    }
    Ok(Recipe { statements })
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Base => write!(f, "base halfgrid"),
            Statement::Attach { pattern, cmp } => {
                let name = match pattern {
                    AttachPattern::K5 => "K5",
                    AttachPattern::K33 => "K33",
                };
                write!(f, "attach {name} where col {} 0", cmp.symbol())
            }
        }
    }
}

impl fmt::Display for Recipe {
    /// Canonical form: each statement followed by "; ". Parsing the output
    /// returns the same recipe.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for stmt in &self.statements {
            write!(f, "{stmt}; ")?;
        }
        Ok(())
    }
}

/// The recipe describing the standard doubly-attached host: K5 on negative
/// columns, K3,3 on the rest.
pub fn canonical_recipe() -> Recipe {
    Recipe {
        statements: vec![
            Statement::Base,
            Statement::Attach { pattern: AttachPattern::K5, cmp: ColCmp::Lt },
            Statement::Attach { pattern: AttachPattern::K33, cmp: ColCmp::Ge },
        ],
    }
}

/// Evaluates a recipe over a truncation window. Attach statements run in
/// recipe order; within one statement columns are visited in ascending
/// order, so evaluation is deterministic. The canonical recipe reproduces
/// [`crate::construct::build_g`] exactly (same ids, edges and tags).
pub fn eval_recipe(recipe: &Recipe, p: &TruncationParams) -> Graph {
    let mut g = half_grid(p);
    let m = p.m as i32;
    for stmt in &recipe.statements {
        if let Statement::Attach { pattern, cmp } = stmt {
            for col in -m..=m {
                if !cmp.matches(col) {
                    continue;
                }
                let anchor = g.grid_vertex(col, 0).expect("row-0 vertex exists");
                g = match pattern {
                    AttachPattern::K5 => attach_k5(&g, anchor),
                    AttachPattern::K33 => attach_k33(&g, anchor),
                }
                .expect("anchor id in range");
            }
        }
    }
    g
}
