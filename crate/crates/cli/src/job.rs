//! Job file schema and command parsing.

use std::collections::BTreeSet;
use std::fmt;

use loopreps::json::{ContextJson, LWeightJson};
use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer};

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct JobFile {
    pub field: ContextJson,
    pub lie_type: String,
    #[serde(default)]
    pub lweights: Named,
    pub commands: Vec<CommandSpec>,
}

/// Named ℓ-weights in file order. Duplicate names are rejected at parse time.
#[derive(Debug, Default)]
pub struct Named(pub Vec<(String, LWeightJson)>);

impl<'de> Deserialize<'de> for Named {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Named;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from names to l-weights")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Named, A::Error> {
                let mut seen = BTreeSet::new();
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, LWeightJson>()? {
                    if !seen.insert(k.clone()) {
                        return Err(serde::de::Error::custom(format!("duplicate l-weight name {k:?}")));
                    }
                    out.push((k, v));
                }
                Ok(Named(out))
            }
        }
        d.deserialize_map(V)
    }
}

/// Either `"tensor p q"` or `{"command": "tensor", "args": ["p", "q"]}`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CommandSpec {
    Line(String),
    Record {
        command: String,
        #[serde(default)]
        args: Vec<String>,
    },
}

impl CommandSpec {
    pub fn tokens(&self) -> Vec<String> {
        match self {
            CommandSpec::Line(s) => s.split_whitespace().map(str::to_string).collect(),
            CommandSpec::Record { command, args } => {
                let mut t: Vec<String> = command.split_whitespace().map(str::to_string).collect();
                t.extend(args.iter().cloned());
                t
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    ValidateField,
    LwInfo(String),
    Conjugates(String),
    Tensor(String, String),
    RationalSplit(String),
    Dual(String),
    Blocks(Vec<String>),
    KxMatrix { name: String, coeff: Option<(usize, usize)> },
    EmbeddingRank(String, String),
    LinkChain { lie: String, lambda: Vec<i64>, mu: Vec<i64>, max_steps: Option<usize> },
    SeriesCheck { order: Option<usize>, lie: Option<String> },
}

impl Command {
    /// Names of declared ℓ-weights the command reads.
    pub fn names(&self) -> Vec<&str> {
        match self {
            Command::LwInfo(n)
            | Command::Conjugates(n)
            | Command::RationalSplit(n)
            | Command::Dual(n)
            | Command::KxMatrix { name: n, .. } => vec![n],
            Command::Tensor(a, b) | Command::EmbeddingRank(a, b) => vec![a, b],
            Command::Blocks(ns) => ns.iter().map(String::as_str).collect(),
            Command::ValidateField | Command::LinkChain { .. } | Command::SeriesCheck { .. } => vec![],
        }
    }
}

/// Splits `--flag value` pairs from positional arguments.
fn split_flags(tokens: &[String], allowed: &[&str]) -> Result<(Vec<String>, Vec<(String, String)>), String> {
    let mut pos = Vec::new();
    let mut flags = Vec::new();
    let mut it = tokens.iter();
    while let Some(t) = it.next() {
        if let Some(name) = t.strip_prefix("--") {
            if !allowed.contains(&name) {
                return Err(format!("unknown option --{name}"));
            }
            let v = it.next().ok_or_else(|| format!("--{name} needs a value"))?;
            if flags.iter().any(|(n, _)| n == name) {
                return Err(format!("--{name} given twice"));
            }
            flags.push((name.to_string(), v.clone()));
        } else {
            pos.push(t.clone());
        }
    }
    Ok((pos, flags))
}

fn flag<'a>(flags: &'a [(String, String)], name: &str) -> Option<&'a str> {
    flags.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_str())
}

fn parse_usize(name: &str, v: &str) -> Result<usize, String> {
    v.parse().map_err(|_| format!("--{name} expects a nonnegative integer, got {v:?}"))
}

/// Accepts `4,0`, `(4,0)` or `[4,0]`.
pub fn parse_weight(s: &str) -> Result<Vec<i64>, String> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    t.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| format!("bad weight {s:?}")))
        .collect()
}

fn arity(op: &str, pos: &[String], n: usize) -> Result<(), String> {
    if pos.len() == n {
        Ok(())
    } else {
        Err(format!("{op} takes {n} argument(s), got {}", pos.len()))
    }
}

pub fn parse_command(tokens: &[String]) -> Result<Command, String> {
    let (op, rest) = tokens.split_first().ok_or("empty command")?;
    let op = op.as_str();
    let allowed: &[&str] = match op {
        "kx-matrix" => &["node", "index"],
        "link-chain" => &["max-steps"],
        "series-check" => &["order", "type"],
        _ => &[],
    };
    let (pos, flags) = split_flags(rest, allowed)?;
    let one = |pos: &[String]| -> Result<String, String> {
        arity(op, pos, 1)?;
        Ok(pos[0].clone())
    };
    let two = |pos: &[String]| -> Result<(String, String), String> {
        arity(op, pos, 2)?;
        Ok((pos[0].clone(), pos[1].clone()))
    };
    Ok(match op {
        "validate-field" => {
            arity(op, &pos, 0)?;
            Command::ValidateField
        }
        "lw-info" => Command::LwInfo(one(&pos)?),
        "conjugates" => Command::Conjugates(one(&pos)?),
        "rational-split" => Command::RationalSplit(one(&pos)?),
        "dual" => Command::Dual(one(&pos)?),
        "tensor" => {
            let (a, b) = two(&pos)?;
            Command::Tensor(a, b)
        }
        "embedding-rank" => {
            let (a, b) = two(&pos)?;
            Command::EmbeddingRank(a, b)
        }
        "blocks" => {
            if pos.is_empty() {
                return Err("blocks needs at least one name".into());
            }
            Command::Blocks(pos)
        }
        "kx-matrix" => {
            let name = one(&pos)?;
            let coeff = match (flag(&flags, "node"), flag(&flags, "index")) {
                (None, None) => None,
                (Some(i), Some(r)) => {
                    let (i, r) = (parse_usize("node", i)?, parse_usize("index", r)?);
                    if i == 0 || r == 0 {
                        return Err("--node and --index count from 1".into());
                    }
                    Some((i, r))
                }
                _ => return Err("--node and --index must be given together".into()),
            };
            Command::KxMatrix { name, coeff }
        }
        "link-chain" => {
            arity(op, &pos, 3)?;
            Command::LinkChain {
                lie: pos[0].clone(),
                lambda: parse_weight(&pos[1])?,
                mu: parse_weight(&pos[2])?,
                max_steps: flag(&flags, "max-steps").map(|v| parse_usize("max-steps", v)).transpose()?,
            }
        }
        "series-check" => {
            arity(op, &pos, 0)?;
            Command::SeriesCheck {
                order: flag(&flags, "order").map(|v| parse_usize("order", v)).transpose()?,
                lie: flag(&flags, "type").map(str::to_string),
            }
        }
        other => return Err(format!("unknown command {other:?}")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        s.split_whitespace().map(str::to_string).collect()
    }

    #[test]
    fn parses_commands() {
        assert_eq!(parse_command(&toks("tensor p q")).unwrap(), Command::Tensor("p".into(), "q".into()));
        assert_eq!(
            parse_command(&toks("kx-matrix w --node 1 --index 2")).unwrap(),
            Command::KxMatrix { name: "w".into(), coeff: Some((1, 2)) }
        );
        assert_eq!(
            parse_command(&toks("link-chain A2 (1,1) [0,0] --max-steps 3")).unwrap(),
            Command::LinkChain { lie: "A2".into(), lambda: vec![1, 1], mu: vec![0, 0], max_steps: Some(3) }
        );
        assert_eq!(
            parse_command(&toks("series-check --order 4 --type G2")).unwrap(),
            Command::SeriesCheck { order: Some(4), lie: Some("G2".into()) }
        );
    }

    #[test]
    fn rejects_malformed_commands() {
        for bad in ["", "frobnicate", "tensor p", "dual p q", "kx-matrix w --node 1", "blocks", "lw-info p --order 3", "link-chain A1 4,x 0"] {
            assert!(parse_command(&toks(bad)).is_err(), "{bad}");
        }
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let text = r#"{"field":{"modulus":["1","0","1"],"automorphisms":[["0","1"],["0","-1"]],"subgroup":[0,1]},
            "lieType":"A1","lweights":{"p":[],"p":[]},"commands":[]}"#;
        let err = serde_json::from_str::<JobFile>(text).unwrap_err();
        assert!(err.to_string().contains("duplicate"));
    }
}
