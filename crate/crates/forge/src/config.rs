// SPDX-License-Identifier: Apache-2.0
//! `key=value` config files. Each key names a long flag of the chosen
//! subcommand; values from the file apply only when the flag is absent from
//! the command line. `#` starts a comment.

use std::collections::BTreeMap;

use anyhow::{bail, Result};

use crate::run::sha256_hex;

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("config line {}: expected key=value", i + 1);
        };
        let key = k.trim().trim_start_matches("--");
        if key.is_empty() || key.contains(char::is_whitespace) {
            bail!("config line {}: bad key {k:?}", i + 1);
        }
        out.insert(key.to_owned(), v.trim().to_owned());
    }
    Ok(out)
}

/// Appends `--key value` for every config key not already given as a flag.
pub fn merge_config(args: &[String], config: &BTreeMap<String, String>) -> Vec<String> {
    let given = |key: &str| {
        let flag = format!("--{key}");
        args.iter()
            .any(|a| *a == flag || a.starts_with(&format!("{flag}=")))
    };
    let mut out = args.to_vec();
    for (k, v) in config {
        if !given(k) {
            out.push(format!("--{k}"));
            out.push(v.clone());
        }
    }
    out
}

/// Hash of the effective options, independent of flag order. Flags that do
/// not affect outputs (`--config`, `--threads`) are left out.
pub fn config_hash(args: &[String]) -> String {
    let mut pairs: Vec<String> = Vec::new();
    let mut iter = args.iter().skip(1).peekable();
    while let Some(a) = iter.next() {
        if let Some(flag) = a.strip_prefix("--") {
            let (flag, value) = match flag.split_once('=') {
                Some((f, v)) => (f.to_owned(), v.to_owned()),
                None => {
                    let v = match iter.peek() {
                        Some(n) if !n.starts_with("--") => iter.next().cloned().unwrap_or_default(),
                        _ => String::new(),
                    };
                    (flag.to_owned(), v)
                }
            };
            if flag != "config" && flag != "threads" {
                pairs.push(format!("{flag}={value}"));
            }
        } else {
            pairs.push(a.clone());
        }
    }
    pairs.sort();
    sha256_hex(pairs.join("\n").as_bytes())
}
