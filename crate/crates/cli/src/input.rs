//! Reading graphs from files or stdin.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Cursor, Read};

use anyhow::{bail, Context, Result};
use poc_core::io::{graph6_lines, parse_edge_list_with_cap, InputFormat};
use poc_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FormatArg {
    Auto,
    Graph6,
    Edgelist,
}

fn open(path: &str) -> Result<Box<dyn BufRead>> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).with_context(|| format!("cannot open {path}"))?;
    Ok(Box::new(BufReader::new(f)))
}

/// Calls `each(line, graph)` for every graph in `path` ("-" is stdin).
/// graph6 input is streamed one line at a time; an edge list is one graph.
pub fn for_each_graph(
    path: &str,
    format: FormatArg,
    cap: usize,
    mut each: impl FnMut(usize, Graph) -> Result<()>,
) -> Result<()> {
    let mut reader = open(path)?;
    // Keep everything up to the first data line so detection can see it.
    let mut head = String::new();
    loop {
        let before = head.len();
        if reader.read_line(&mut head)? == 0 {
            break;
        }
        let line = head[before..].split('#').next().unwrap_or("").trim();
        if !line.is_empty() {
            break;
        }
    }
    let format = match format {
        FormatArg::Graph6 => InputFormat::Graph6,
        FormatArg::Edgelist => InputFormat::EdgeList,
        FormatArg::Auto => InputFormat::detect((path != "-").then_some(path), &head),
    };
    match format {
        InputFormat::EdgeList => {
            let mut text = head;
            reader.read_to_string(&mut text)?;
            let first = text
                .lines()
                .position(|l| !l.split('#').next().unwrap_or("").trim().is_empty())
                .map_or(1, |i| i + 1);
            let g = parse_edge_list_with_cap(&text, cap).with_context(|| path.to_string())?;
            each(first, g)
        }
        InputFormat::Graph6 => {
            for item in graph6_lines(Cursor::new(head.into_bytes()).chain(reader), cap) {
                let (line, g) = item.with_context(|| path.to_string())?;
                each(line, g)?;
            }
            Ok(())
        }
    }
}

pub fn read_all(path: &str, format: FormatArg, cap: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_graph(path, format, cap, |_, g| {
        out.push(g);
        Ok(())
    })?;
    Ok(out)
}

/// Exactly one graph.
pub fn read_one(path: &str, format: FormatArg, cap: usize) -> Result<Graph> {
    let mut graphs = read_all(path, format, cap)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        0 => bail!("{path}: no graph found"),
        k => bail!("{path}: expected one graph, found {k}"),
    }
}
