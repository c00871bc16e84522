use std::fmt;
use std::fs;

use oppdc::cover::{parse_cover, parse_cycles, CycleCover};
use oppdc::graph::{parse_edge_list, parse_graph6};
use oppdc::{Graph, PathCover};

use crate::EXIT_INPUT;

/// An error that ends the command with the given exit code.
#[derive(Debug)]
pub(crate) struct Failure {
    pub(crate) code: u8,
    pub(crate) message: String,
}

impl Failure {
    pub(crate) fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    pub(crate) fn with(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub(crate) fn code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub(crate) fn read_text(path: &str) -> Result<String, Failure> {
    let r = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    };
    r.map_err(|e| Failure::input(format!("{path}: {e}")))
}

/// graph6 when the first byte is printable graph6 data (63..=126) or the
/// `>>graph6<<` header; an edge list otherwise.
pub(crate) fn looks_like_graph6(text: &str) -> bool {
    let t = text.trim_start();
    t.starts_with(">>graph6<<") || t.bytes().next().is_some_and(|b| (63..=126).contains(&b))
}

pub(crate) fn parse_graph(text: &str) -> Result<Graph, String> {
    if looks_like_graph6(text) {
        let t = text.trim();
        parse_graph6(t.strip_prefix(">>graph6<<").unwrap_or(t)).map_err(|e| e.to_string())
    } else {
        parse_edge_list(text).map_err(|e| e.to_string())
    }
}

pub(crate) fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    parse_graph(&text).map_err(|e| Failure::input(format!("{path}: {e}")))
}

pub(crate) fn read_cover(path: &str) -> Result<PathCover, Failure> {
    let text = read_text(path)?;
    parse_cover(&text).map_err(|e| Failure::input(format!("{path}: {e}")))
}

pub(crate) fn read_cycles(path: &str) -> Result<CycleCover, Failure> {
    let text = read_text(path)?;
    parse_cycles(&text).map_err(|e| Failure::input(format!("{path}: {e}")))
}

pub(crate) fn write_text(path: &str, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::input(format!("{path}: {e}")))
}
