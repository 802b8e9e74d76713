//! Parsers for factor lists, root lists, words and custom algebra files.

use num_bigint::BigInt;
use serde::Deserialize;

use crate::cyclicity::TensorFactor;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, GaussianRational};
use crate::root_system::{validate_cartan, CartanData, ReducedWord};

/// Parses `[-]p[/q][(+|-)r[/s]i]`.
pub fn parse_param(literal: &str) -> Result<GaussianRational> {
    let s: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("malformed parameter `{literal}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some(body) = s.strip_suffix('i') {
        // split at the last sign that is not the leading one
        let cut = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(k, _)| k)
            .last()
            .ok_or_else(bad)?;
        let re = parse_rational(&body[..cut]).ok_or_else(bad)?;
        let im_str = &body[cut..];
        let im_str = im_str.strip_prefix('+').unwrap_or(im_str);
        let im = parse_rational(im_str).ok_or_else(bad)?;
        return Ok(GaussianRational::new(re, im));
    }
    parse_rational(&s)
        .map(GaussianRational::real)
        .ok_or_else(bad)
}

/// Comma-separated `node:param` tokens.
pub fn parse_factors(spec: &str, rank: usize) -> Result<Vec<TensorFactor>> {
    let spec: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(|token| {
            let (node, param) = token
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("factor `{token}` is not node:param")))?;
            let node: usize = node
                .parse()
                .map_err(|_| Error::Parse(format!("bad node in `{token}`")))?;
            if node == 0 || node > rank {
                return Err(Error::UnknownNode { node, rank });
            }
            Ok(TensorFactor::new(node, parse_param(param)?))
        })
        .collect()
}

/// Comma-separated parameter literals; the empty string is the empty list.
pub fn parse_roots(spec: &str) -> Result<Vec<GaussianRational>> {
    let spec: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',').map(parse_param).collect()
}

pub fn parse_word(spec: &str) -> Result<ReducedWord> {
    parse_usizes(spec).map(ReducedWord)
}

/// Integers separated by commas and/or whitespace.
pub fn parse_usizes(spec: &str) -> Result<Vec<usize>> {
    spec.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("expected a non-negative integer, got `{t}`")))
        })
        .collect()
}

pub fn parse_bigints(spec: &str) -> Result<Vec<BigInt>> {
    spec.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("expected an integer, got `{t}`")))
        })
        .collect()
}

/// A custom algebra file: integer matrix rows, a `d:` line with the
/// symmetrizers and an optional `word:` line. `#` starts a comment.
///
/// ```text
/// # G2, node 1 long
/// 2 -1
/// -3 2
/// d: 3 1
/// word: 1 2 1 2 1 2
/// ```
pub fn parse_algebra_file(text: &str) -> Result<(CartanData, Option<ReducedWord>)> {
    let mut rows = Vec::new();
    let mut symmetrizers = None;
    let mut word = None;
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("d:") {
            symmetrizers = Some(parse_ints(rest)?);
        } else if let Some(rest) = line.strip_prefix("word:") {
            word = Some(parse_word(rest)?);
        } else {
            rows.push(parse_ints(line)?);
        }
    }
    let symmetrizers =
        symmetrizers.ok_or_else(|| Error::Parse("algebra file has no `d:` line".into()))?;
    Ok((validate_cartan(rows, symmetrizers)?, word))
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("expected an integer, got `{t}`")))
        })
        .collect()
}

/// Optional configuration file (TOML).
#[derive(Debug, Clone, Default, Deserialize)]
pub struct Config {
    /// Dimensions of the fundamental Yangian modules, one per node.
    pub fundamental_dims: Option<Vec<u64>>,
}

pub fn parse_config(text: &str) -> Result<Config> {
    toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::root_system::g2;

    #[test]
    fn factor_tokens() {
        let f = parse_factors("1:3/2", 2).unwrap();
        assert_eq!(
            f,
            vec![TensorFactor::new(1, GaussianRational::real(rat(3, 2)))]
        );
        let f = parse_factors(" 2 : -1+2/3i , 1:0", 2).unwrap();
        assert_eq!(f[0].param, GaussianRational::new(int(-1), rat(2, 3)));
        assert_eq!(f[1], TensorFactor::new(1, GaussianRational::real(int(0))));
        assert!(matches!(
            parse_factors("3:0", 2),
            Err(Error::UnknownNode { node: 3, rank: 2 })
        ));
        assert!(parse_factors("1:1/0", 2).is_err());
        assert!(parse_factors("1", 2).is_err());
    }

    #[test]
    fn params() {
        assert_eq!(
            parse_param("-1/2-3i").unwrap(),
            GaussianRational::new(rat(-1, 2), int(-3))
        );
        assert_eq!(parse_param("5").unwrap(), GaussianRational::real(int(5)));
        assert!(parse_param("2i").is_err());
        assert!(parse_param("").is_err());
        assert!(parse_param("1+i").is_err());
    }

    #[test]
    fn algebra_file() {
        let (c, w) = parse_algebra_file("# g2\n2 -1\n-3 2\nd: 3 1\nword: 2,1,2,1,2,1\n").unwrap();
        assert_eq!(c, g2());
        assert_eq!(w, Some(ReducedWord(vec![2, 1, 2, 1, 2, 1])));
        assert!(parse_algebra_file("2 -1\n-3 2\n").is_err());
        assert!(parse_algebra_file("2 -1\n-3 2\nd: 1 1\n").is_err());
    }

    #[test]
    fn config() {
        let c = parse_config("fundamental_dims = [15, 7]\n").unwrap();
        assert_eq!(c.fundamental_dims, Some(vec![15, 7]));
        assert!(parse_config("").unwrap().fundamental_dims.is_none());
    }
}
