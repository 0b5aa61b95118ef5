//! Arrangement files.
//!
//! ```text
//! # comment
//! name: three concurrent lines
//! component: x
//! component: y
//! component: x + y
//! expect_tau: 4
//! expect_exponents: 0, 2
//! expect_W: 3; 0, 1
//! ```
//!
//! `expect_W` lists the component counts by degree, then the ordinary point
//! counts `n_2, n_3, ...`, then optional `t3=`, `t5=`, `t7=` entries, the
//! three groups separated by `;`.

use std::path::Path;

use curvefree::combin::WeakCombinatorics;
use curvefree::polyring::{parse, Polynomial};

use crate::normalize::normalize;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expected {
    pub tau: Option<u64>,
    pub exponents: Option<(u32, u32)>,
    pub combinatorics: Option<WeakCombinatorics>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementFile {
    pub name: String,
    /// Component equations as written (after normalization).
    pub component_text: Vec<String>,
    pub components: Vec<Polynomial>,
    pub expected: Expected,
}

impl ArrangementFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))?;
        let mut file = Self::parse(&text)?;
        if file.name.is_empty() {
            file.name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        }
        Ok(file)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut name = String::new();
        let mut component_text = Vec::new();
        let mut components = Vec::new();
        let mut expected = Expected::default();
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| CliError::Format { line: line_no, msg };
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| bad(format!("expected `key: value`, found `{line}`")))?;
            let value = value.trim();
            match key.trim() {
                "name" => name = value.to_string(),
                "component" => {
                    let text = normalize(value);
                    let poly = parse(&text).map_err(|e| bad(format!("in `{value}`: {e}")))?;
                    component_text.push(text);
                    components.push(poly);
                }
                "expect_tau" => expected.tau = Some(value.parse().map_err(|_| bad(format!("bad tau `{value}`")))?),
                "expect_exponents" => expected.exponents = Some(parse_pair(value).ok_or_else(|| bad(format!("bad exponents `{value}`")))?),
                "expect_W" => expected.combinatorics = Some(parse_combinatorics(value).map_err(bad)?),
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        if components.is_empty() {
            return Err(CliError::Format { line: 0, msg: "no `component:` lines".into() });
        }
        Ok(ArrangementFile { name, component_text, components, expected })
    }

    pub fn product(&self) -> Polynomial {
        self.components.iter().fold(Polynomial::one(), |acc, c| &acc * c)
    }
}

fn parse_pair(s: &str) -> Option<(u32, u32)> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = s.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

fn parse_count(s: &str) -> Result<u64, String> {
    s.trim().parse().map_err(|_| format!("bad count `{}`", s.trim()))
}

fn comma_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_count).collect()
}

/// Parses `k1, k2, ...; n2, n3, ...; t3=.., t5=.., t7=..`.
pub fn parse_combinatorics(s: &str) -> Result<WeakCombinatorics, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let mut groups = s.split(';');
    let ks = comma_list(groups.next().unwrap_or(""))?;
    let ns = comma_list(groups.next().unwrap_or(""))?;
    let mut t = [0u64; 3];
    if let Some(tail) = groups.next() {
        for entry in tail.split(',').filter(|e| !e.trim().is_empty()) {
            let (key, value) = entry.split_once('=').ok_or_else(|| format!("expected `tK=count`, found `{}`", entry.trim()))?;
            let slot = match key.trim() {
                "t3" => 0,
                "t5" => 1,
                "t7" => 2,
                other => return Err(format!("unknown singularity count `{other}`")),
            };
            t[slot] = parse_count(value)?;
        }
    }
    if groups.next().is_some() {
        return Err("too many `;`-separated groups".into());
    }
    WeakCombinatorics::new(
        ks.iter().enumerate().map(|(i, &k)| (i as u32 + 1, k)),
        ns.iter().enumerate().map(|(i, &n)| (i as u32 + 2, n)),
        t[0],
        t[1],
        t[2],
    )
    .map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_a_file() {
        let f = ArrangementFile::parse(
            "# pencil\nname: pencil\ncomponent: x\ncomponent: y\ncomponent: x+y\nexpect_tau: 4\nexpect_exponents: (0, 2)\nexpect_W: 3; 0, 1\n",
        )
        .unwrap();
        assert_eq!(f.name, "pencil");
        assert_eq!(f.components.len(), 3);
        assert_eq!(f.expected.tau, Some(4));
        assert_eq!(f.expected.exponents, Some((0, 2)));
        assert_eq!(f.expected.combinatorics, Some(WeakCombinatorics::conic_line(3, 0, &[0, 1])));
    }

    #[test]
    fn combinatorics_with_tacnodes() {
        let w = parse_combinatorics("0, 4; ; t3=12").unwrap();
        assert_eq!(w.conics(), 4);
        assert_eq!(w.t3, 12);
        assert!(w.n_by_mult.is_empty());
        assert!(parse_combinatorics("1; 2; t9=1").is_err());
    }

    #[test]
    fn reports_line_numbers() {
        let err = ArrangementFile::parse("component: x\ncomponent: x +* y\n").unwrap_err();
        assert!(matches!(err, CliError::Format { line: 2, .. }));
        assert!(matches!(ArrangementFile::parse("name: empty\n"), Err(CliError::Format { .. })));
    }
}
