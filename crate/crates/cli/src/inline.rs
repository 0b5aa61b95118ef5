//! Commands that work from combinatorics given inline as `key=value` pairs:
//! `k1` lines, `k2` (or `k`) conics, `n2, n3, ...` ordinary points,
//! `t3, t5, t7` tangential points, `d` a degree and `tau` a Tjurina number.

use std::collections::BTreeMap;

use curvefree::combin::{self, WeakCombinatorics};

use crate::CliError;

/// Parsed `key=value` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Inline {
    values: BTreeMap<String, u64>,
}

impl Inline {
    pub fn parse<S: AsRef<str>>(args: &[S]) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for arg in args {
            let arg = arg.as_ref();
            let bad = || CliError::Precondition(format!("expected key=value, found `{arg}`"));
            let (k, v) = arg.split_once('=').ok_or_else(bad)?;
            let key = k.trim().to_string();
            let known = matches!(key.as_str(), "k" | "k1" | "k2" | "d" | "tau" | "t3" | "t5" | "t7")
                || key.strip_prefix('n').is_some_and(|r| r.parse::<u32>().is_ok_and(|r| r >= 2));
            if !known {
                return Err(CliError::Precondition(format!("unknown key `{key}`")));
            }
            values.insert(key, v.trim().parse().map_err(|_| bad())?);
        }
        Ok(Inline { values })
    }

    pub fn get(&self, key: &str) -> u64 {
        self.values.get(key).copied().unwrap_or(0)
    }

    pub fn has(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    fn conics(&self) -> u64 {
        self.get("k2") + self.get("k")
    }

    fn has_tacnodes(&self) -> bool {
        ["t3", "t5", "t7"].iter().any(|t| self.get(t) > 0)
    }

    /// Weak combinatorics with `lines` lines and the given conic count.
    pub fn combinatorics(&self, lines: u64, conics: u64) -> Result<WeakCombinatorics, CliError> {
        let ns = self
            .values
            .iter()
            .filter_map(|(k, &v)| Some((k.strip_prefix('n')?.parse::<u32>().ok()?, v)));
        Ok(WeakCombinatorics::new([(1, lines), (2, conics)], ns, self.get("t3"), self.get("t5"), self.get("t7"))?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Lines,
    ConicLine,
    Conics,
    General,
}

fn mismatch(msg: &str) -> CliError {
    CliError::VariantMismatch(msg.into())
}

/// `1 + 7t + 16t^2 (no rational splitting)` or `1 + 5t + 6t^2 = (1+2*t)(1+3*t)`.
pub fn poincare(variant: Variant, args: &Inline) -> Result<String, CliError> {
    let poly = match variant {
        Variant::Lines => {
            if args.conics() > 0 || args.has_tacnodes() {
                return Err(mismatch("--lines takes only k1 (or d) and n_r"));
            }
            let lines = if args.has("k1") { args.get("k1") } else { args.get("d") };
            combin::pi0(&args.combinatorics(lines, 0)?)?
        }
        Variant::ConicLine => {
            if args.has_tacnodes() {
                return Err(mismatch("--cl allows ordinary points only"));
            }
            combin::poincare_cl(&args.combinatorics(args.get("k1"), args.conics())?)?
        }
        Variant::Conics => {
            if args.get("k1") > 0 {
                return Err(mismatch("--conics does not allow lines"));
            }
            combin::poincare_conics(&args.combinatorics(0, args.conics())?)
                .map_err(|e| mismatch(&e.to_string()))?
        }
        Variant::General => {
            if !args.has("d") || !args.has("tau") {
                return Err(mismatch("--general needs d and tau"));
            }
            combin::poincare_general(args.get("d"), args.get("tau")).map_err(|e| mismatch(&e.to_string()))?
        }
    };
    let split = combin::split_over_rationals(&poly);
    Ok(match split.factored() {
        Some(f) => format!("{poly} = {f}"),
        None => format!("{poly} (no rational splitting)"),
    })
}

/// Both sides of the inequality for free `d`-arrangements and what it says.
pub fn ddcheck(args: &Inline) -> Result<String, CliError> {
    if args.has_tacnodes() {
        return Err(mismatch("d-arrangements have ordinary singular points only"));
    }
    let (d, k) = (args.get("d"), args.get("k"));
    if d < 2 {
        return Err(mismatch("the inequality needs d >= 2"));
    }
    if k < 2 {
        return Err(mismatch("the inequality needs k >= 2"));
    }
    let d = u32::try_from(d).map_err(|_| mismatch("d is too large"))?;
    let ns = args
        .values
        .iter()
        .filter_map(|(key, &v)| Some((key.strip_prefix('n')?.parse::<u32>().ok()?, v)));
    let w = WeakCombinatorics::new([], ns, 0, 0, 0)?;
    let dd = combin::dd_inequality(&w, d, k)?;
    let verdict = if dd.holds { "freeness not excluded" } else { "freeness excluded" };
    Ok(format!("lhs = {}, rhs = {}: {verdict}", dd.lhs, dd.rhs))
}

/// Euler number of the complement via the Betti and Poincaré polynomials.
pub fn euler(args: &Inline) -> Result<String, CliError> {
    if args.has_tacnodes() {
        return Err(mismatch("the Euler formula needs ordinary singular points only"));
    }
    let w = args.combinatorics(args.get("k1"), args.conics())?;
    let b = combin::betti_polynomial(&w)?;
    let p = combin::poincare_cl(&w)?;
    let e = combin::euler_number(&w)?;
    Ok(format!("B_M(-1) = {}, P(-1) = {}, e(M) = {e}", b.eval(-1), p.eval(-1)))
}
