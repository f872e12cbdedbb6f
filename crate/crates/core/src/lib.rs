//! Computing with finitely and recursively presented groups, centred on the
//! Baumslag–Solitar group BS(2,3).

pub mod bs;
pub mod cli;
pub mod harness;
pub mod presentations;
pub mod search;
pub mod stream;
pub mod tietze;
pub mod words;
