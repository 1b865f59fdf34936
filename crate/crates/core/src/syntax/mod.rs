//! Surface syntax for operators over Q(t)[theta].
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' uint)?
//! atom   := 't' | 'theta' | 'D' | int ('/' uint)? | '(' expr ')' | '-' factor
//! ```
//!
//! `D` is `d/dt` and `theta = t d/dt`. A literal `n/m` is only read as one
//! rational at the start of a term; elsewhere `/` is right division by a
//! function of `t`.
//!
//! ```
//! use limhodge::syntax::{parse_operator, parse_theta_operator};
//!
//! let ast = parse_operator("theta^2 - (t/(1-t))*theta - (1/4)*(t/(1-t))").unwrap();
//! assert_eq!(parse_operator(&ast.to_string()).unwrap(), ast);
//! assert_eq!(parse_theta_operator("t*D").unwrap(), parse_theta_operator("theta").unwrap());
//! ```

mod ast;
mod lexer;
mod normalize;
mod parser;

pub use ast::OperatorAst;
pub use normalize::{collect_operator, normalize_operator, parse_symbol, parse_theta_operator};
pub use parser::parse_operator;
