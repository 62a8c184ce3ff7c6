//! Parsers for the compact flag syntax: `--I "(2,3),(2,9)"`, `--L "3,5"`,
//! `--zeta "2,3,9=1"`, `--mu "0,0=-1/2"`.

use std::collections::BTreeMap;

use hopfforge::scalar::parse_rational;
use hopfforge::{CycScalar, GroupDatum};

use crate::CliError;

fn bad(what: &str, s: &str) -> CliError {
    CliError::Input(format!("cannot parse {what} from {s:?}"))
}

fn numbers<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',').map(|t| t.trim().parse().map_err(|_| bad(what, s))).collect()
}

/// A list of pairs such as "(2,3),(2,9)".
pub fn pairs(s: &str) -> Result<Vec<(u32, u32)>, CliError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if !compact.is_empty() && !compact.ends_with(')') {
        return Err(bad("pairs", s));
    }
    let mut out = Vec::new();
    for chunk in compact.split(')').filter(|c| !c.is_empty()) {
        let inner = chunk.trim_start_matches(',').strip_prefix('(').ok_or_else(|| bad("pairs", s))?;
        match numbers::<u32>(inner, "pairs")?.as_slice() {
            &[i, k] => out.push((i, k)),
            _ => return Err(bad("pairs", s)),
        }
    }
    Ok(out)
}

/// A comma-separated list of ℓ values.
pub fn ells(s: &str) -> Result<Vec<u32>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    numbers(s, "ℓ values")
}

/// Assignments "k1,k2,...=c" separated by ';' or given as repeated flags.
fn assignments(values: &[String], arity: usize, what: &str) -> Result<Vec<(Vec<u32>, String)>, CliError> {
    let mut out = Vec::new();
    for v in values {
        for item in v.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| bad(what, item))?;
            let key: Vec<u32> = numbers(key, what)?;
            if key.len() != arity {
                return Err(bad(what, item));
            }
            out.push((key, value.trim().to_string()));
        }
    }
    Ok(out)
}

fn scalar(g: &GroupDatum, s: &str) -> Result<CycScalar, CliError> {
    let r = parse_rational(s).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(CycScalar::from_rational(g.m(), &r))
}

pub fn zeta(g: &GroupDatum, values: &[String]) -> Result<BTreeMap<(u32, u32, u32), CycScalar>, CliError> {
    assignments(values, 3, "ζ")?.into_iter().map(|(k, v)| Ok(((k[0], k[1], k[2]), scalar(g, &v)?))).collect()
}

pub fn positions(g: &GroupDatum, values: &[String], what: &str) -> Result<BTreeMap<(usize, usize), CycScalar>, CliError> {
    assignments(values, 2, what)?.into_iter().map(|(k, v)| Ok(((k[0] as usize, k[1] as usize), scalar(g, &v)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_lists() {
        assert_eq!(pairs("(2,3),(2,9)").unwrap(), vec![(2, 3), (2, 9)]);
        assert_eq!(pairs(" ( 1 , 5 ) ").unwrap(), vec![(1, 5)]);
        assert_eq!(pairs("").unwrap(), vec![]);
        assert!(pairs("(1,2,3)").is_err());
        assert!(pairs("1,2").is_err());
        assert!(pairs("(2,3").is_err());
    }

    #[test]
    fn assignments_and_values() {
        let g = GroupDatum::new(12).unwrap();
        let z = zeta(&g, &["2,3,9=1;2,9,3=-1/2".into()]).unwrap();
        assert_eq!(z[&(2, 3, 9)], CycScalar::one(12));
        assert_eq!(z[&(2, 9, 3)], CycScalar::from_ratio(12, -1, 2).unwrap());
        assert!(zeta(&g, &["2,3=1".into()]).is_err());
        assert!(positions(&g, &["0,0=x".into()], "μ").is_err());
        assert_eq!(ells("1, 3").unwrap(), vec![1, 3]);
    }
}
