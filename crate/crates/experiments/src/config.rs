//! `key = value` config files whose keys are the long flag names of a
//! subcommand. `#` starts a comment. Flags given on the command line win.

use std::path::Path;

use crate::{Error, Result};

pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("line {}: expected key = value", no + 1)))?;
        let k = k.trim().trim_start_matches("--");
        if k.is_empty() {
            return Err(Error::Config(format!("line {}: empty key", no + 1)));
        }
        out.push((k.to_string(), v.trim().to_string()));
    }
    Ok(out)
}

/// Config entries as command-line flags. `true`/`false` toggle switches.
pub fn to_flags(entries: &[(String, String)]) -> Vec<String> {
    let mut flags = Vec::new();
    for (k, v) in entries {
        match v.as_str() {
            "true" => flags.push(format!("--{k}")),
            "false" => {}
            _ => {
                flags.push(format!("--{k}"));
                flags.push(v.clone());
            }
        }
    }
    flags
}

/// Removes `--config <path>` (or `--config=<path>`) from `args` and splices
/// the file's flags in right after the subcommand name, ahead of the
/// explicit flags so those take precedence.
pub fn expand_args(args: Vec<String>) -> Result<Vec<String>> {
    let mut rest = Vec::with_capacity(args.len());
    let mut path = None;
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            path = Some(it.next().ok_or_else(|| Error::Config("--config needs a path".into()))?);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else { return Ok(rest) };
    let text = std::fs::read_to_string(Path::new(&path))?;
    let flags = to_flags(&parse_config(&text)?);
    // rest[0] is the program name; the subcommand is the first non-flag
    let at = rest.iter().skip(1).position(|a| !a.starts_with('-')).map(|i| i + 2).unwrap_or(rest.len());
    rest.splice(at..at, flags);
    Ok(rest)
}
