//! Text front end for freeabel: a small language for quivers with
//! relations and Adelman data, plus the `freeabel` command.

pub mod app;
pub mod ast;
pub mod error;
pub mod parser;
pub mod printer;
pub mod repfile;
pub mod session;
