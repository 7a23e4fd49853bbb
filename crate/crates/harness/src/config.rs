//! The run configuration: a flat `key = value` file with `[section]` headers.
//!
//! ```text
//! kind = caseA
//! a = -1
//! b = -1
//! seed = 42
//! height_bound = 5
//! checks = ds, thm-main
//!
//! [tagging]
//! -1 = left
//! default = right
//!
//! [ds]
//! samples = 1000
//! ```
//!
//! Each `[tagging]` section describes one Clifford-like parallelism. Every
//! other section names a suite and overrides its parameters.

use std::collections::BTreeMap;
use std::fmt;

use cliffpar_core::algebra::validate_case_b;
use cliffpar_core::scalar::integer::is_squarefree;
use cliffpar_core::scalar::{squarefree_part, DEFAULT_FACTOR_BITS};
use cliffpar_core::text::{parse_quaternion, parse_scalar};
use cliffpar_core::{
    F2RatFun, Field, FourAlgebra, OrbitKey, QuarticExtension, Quaternion, QuaternionAlgebra, Rational, SideTag,
};
use num_bigint::BigInt;

use crate::suites::{suite_spec, KeyKind, Rule, SUITES};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_HEIGHT_BOUND: u64 = 5;

#[derive(Clone, Debug)]
pub enum AlgebraChoice {
    CaseA(QuaternionAlgebra),
    CaseB(QuarticExtension),
}

impl AlgebraChoice {
    pub fn is_case_a(&self) -> bool {
        matches!(self, AlgebraChoice::CaseA(_))
    }

    pub fn describe(&self) -> String {
        match self {
            AlgebraChoice::CaseA(h) => format!("caseA a={} b={}", h.a(), h.b()),
            AlgebraChoice::CaseB(h) => format!("caseB a={} b={}", h.a(), h.b()),
        }
    }
}

/// Build an algebra from `kind` and the optional structure constants.
pub fn build_algebra(kind: &str, a: Option<&str>, b: Option<&str>) -> Result<AlgebraChoice, String> {
    match kind {
        "caseA" => {
            let a: Rational = parse_scalar(a.unwrap_or("-1")).map_err(|e| format!("a: {e}"))?;
            let b: Rational = parse_scalar(b.unwrap_or("-1")).map_err(|e| format!("b: {e}"))?;
            QuaternionAlgebra::new(a, b).map(AlgebraChoice::CaseA).map_err(|e| match e {
                cliffpar_core::Error::Domain(m) => m,
                other => other.to_string(),
            })
        }
        "caseB" => {
            let a: F2RatFun = parse_scalar(a.unwrap_or("s")).map_err(|e| format!("a: {e}"))?;
            let b: F2RatFun = parse_scalar(b.unwrap_or("t")).map_err(|e| format!("b: {e}"))?;
            match validate_case_b(&a, &b) {
                Ok(true) => Ok(AlgebraChoice::CaseB(QuarticExtension::new(a, b).map_err(|e| e.to_string())?)),
                Ok(false) => Err(format!("({a}, {b}) does not give a quartic field extension")),
                Err(e) => Err(e.to_string()),
            }
        }
        other => Err(format!("unknown kind '{other}' (expected caseA or caseB)")),
    }
}

/// One Clifford-like parallelism: exceptional orbit keys over a default side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tagging {
    pub exceptions: BTreeMap<OrbitKey, SideTag>,
    pub default: SideTag,
}

impl Tagging {
    pub fn uniform(side: SideTag) -> Self {
        Tagging { exceptions: BTreeMap::new(), default: side }
    }

    pub fn label(&self) -> String {
        let mut parts: Vec<String> = self.exceptions.iter().map(|(k, s)| format!("{k}={s}")).collect();
        parts.push(format!("default={}", self.default));
        parts.join(";")
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub algebra: AlgebraChoice,
    pub seed: u64,
    pub height_bound: u64,
    pub checks: Vec<String>,
    pub taggings: Vec<Tagging>,
    overrides: BTreeMap<(String, String), String>,
}

impl SuiteConfig {
    pub fn default_for(algebra: AlgebraChoice) -> Self {
        let checks = applicable_suites(&algebra);
        let taggings = default_taggings(&algebra);
        SuiteConfig {
            algebra,
            seed: DEFAULT_SEED,
            height_bound: DEFAULT_HEIGHT_BOUND,
            checks,
            taggings,
            overrides: BTreeMap::new(),
        }
    }

    fn raw(&self, suite: &str, key: &str) -> String {
        if let Some(v) = self.overrides.get(&(suite.to_string(), key.to_string())) {
            return v.clone();
        }
        let spec = suite_spec(suite).unwrap_or_else(|| panic!("unknown suite {suite}"));
        let key = spec.keys.iter().find(|k| k.name == key).unwrap_or_else(|| panic!("unknown key {suite}.{key}"));
        if self.algebra.is_case_a() { key.default_a } else { key.default_b }.to_string()
    }

    /// A count parameter of a suite, after defaults.
    pub fn count(&self, suite: &str, key: &str) -> usize {
        self.raw(suite, key).parse().expect("counts are validated")
    }

    /// The text of each entry of an element-list parameter.
    pub fn elements(&self, suite: &str, key: &str) -> Vec<String> {
        split_list(&self.raw(suite, key))
    }

    /// Replace a parameter; the value is validated as in a config file.
    pub fn set(&mut self, suite: &str, key: &str, value: &str) -> Result<(), String> {
        let spec = suite_spec(suite).ok_or_else(|| format!("unknown suite '{suite}'"))?;
        let k = spec
            .keys
            .iter()
            .find(|k| k.name == key)
            .ok_or_else(|| format!("unknown key '{key}' in suite '{suite}'"))?;
        validate_value(&self.algebra, k.kind, value)?;
        self.overrides.insert((suite.to_string(), key.to_string()), value.to_string());
        Ok(())
    }
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(String::from).collect()
}

/// Every suite that runs on the given algebra, in canonical order.
pub fn applicable_suites(algebra: &AlgebraChoice) -> Vec<String> {
    SUITES
        .iter()
        .filter(|s| algebra.is_case_a() || !s.case_a_only)
        .map(|s| s.name.to_string())
        .collect()
}

/// sf(a) tagged left over a right default in case A, all right in case B.
pub fn default_taggings(algebra: &AlgebraChoice) -> Vec<Tagging> {
    match algebra {
        AlgebraChoice::CaseA(h) => {
            let key = squarefree_part(h.a())
                .and_then(OrbitKey::new)
                .expect("a is not a square in a division algebra");
            vec![Tagging { exceptions: BTreeMap::from([(key, SideTag::Left)]), default: SideTag::Right }]
        }
        AlgebraChoice::CaseB(_) => vec![Tagging::uniform(SideTag::Right)],
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: Option<usize>,
    pub message: String,
}

/// Every problem found in a config file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError {
    pub diagnostics: Vec<Diagnostic>,
}

impl ConfigError {
    pub fn mentions(&self, text: &str) -> bool {
        self.diagnostics.iter().any(|d| d.message.contains(text))
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, d) in self.diagnostics.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            match d.line {
                Some(l) => write!(f, "line {l}: {}", d.message)?,
                None => write!(f, "{}", d.message)?,
            }
        }
        Ok(())
    }
}

impl std::error::Error for ConfigError {}

const GLOBAL_KEYS: [&str; 6] = ["kind", "a", "b", "seed", "height_bound", "checks"];

type Entry = (String, usize);

enum Section {
    Global,
    Tagging(usize),
    Suite(String),
    Skipped,
}

pub fn parse_config(text: &str) -> Result<SuiteConfig, ConfigError> {
    let mut diags = Vec::new();
    let mut err = |line: Option<usize>, message: String| diags.push(Diagnostic { line, message });

    let mut globals: BTreeMap<String, Entry> = BTreeMap::new();
    let mut taggings: Vec<(usize, Vec<(String, String, usize)>)> = Vec::new();
    let mut suites: BTreeMap<(String, String), Entry> = BTreeMap::new();
    let mut section = Section::Global;

    for (n, raw) in text.lines().enumerate() {
        let ln = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let Some(name) = rest.strip_suffix(']') else {
                err(Some(ln), format!("malformed section header '{line}'"));
                section = Section::Skipped;
                continue;
            };
            let name = name.trim();
            section = if name == "tagging" {
                taggings.push((ln, Vec::new()));
                Section::Tagging(taggings.len() - 1)
            } else if suite_spec(name).is_some() {
                Section::Suite(name.to_string())
            } else {
                err(Some(ln), format!("unknown section '{name}'"));
                Section::Skipped
            };
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            err(Some(ln), format!("expected 'key = value', got '{line}'"));
            continue;
        };
        let (key, value) = (key.trim().to_string(), value.trim().to_string());
        if key.is_empty() {
            err(Some(ln), "missing key before '='".into());
            continue;
        }
        match &section {
            Section::Global => {
                if !GLOBAL_KEYS.contains(&key.as_str()) {
                    err(Some(ln), format!("unknown key '{key}'"));
                } else if let Some((_, first)) = globals.get(&key) {
                    err(Some(ln), format!("duplicate key '{key}' (first on line {first})"));
                } else {
                    globals.insert(key, (value, ln));
                }
            }
            Section::Tagging(t) => taggings[*t].1.push((key, value, ln)),
            Section::Suite(s) => {
                let spec = suite_spec(s).expect("checked at the header");
                if !spec.keys.iter().any(|k| k.name == key) {
                    err(Some(ln), format!("unknown key '{key}' in section '{s}'"));
                } else if let Some((_, first)) = suites.get(&(s.clone(), key.clone())) {
                    err(Some(ln), format!("duplicate key '{key}' in section '{s}' (first on line {first})"));
                } else {
                    suites.insert((s.clone(), key), (value, ln));
                }
            }
            Section::Skipped => {}
        }
    }

    let get = |k: &str| globals.get(k).map(|(v, l)| (v.as_str(), *l));
    let kind = get("kind").map(|(v, _)| v).unwrap_or("caseA");
    let algebra = match build_algebra(kind, get("a").map(|e| e.0), get("b").map(|e| e.0)) {
        Ok(alg) => Some(alg),
        Err(message) => {
            let line = get("a").or(get("b")).or(get("kind")).map(|e| e.1);
            err(line, message);
            None
        }
    };

    let seed = match get("seed") {
        None => DEFAULT_SEED,
        Some((v, l)) => v.parse().unwrap_or_else(|_| {
            err(Some(l), format!("seed must be an unsigned 64-bit integer, got '{v}'"));
            DEFAULT_SEED
        }),
    };
    let height_bound = match get("height_bound") {
        None => DEFAULT_HEIGHT_BOUND,
        Some((v, l)) => match v.parse::<u64>() {
            Ok(h) if h >= 1 => h,
            _ => {
                err(Some(l), format!("height_bound must be a positive integer, got '{v}'"));
                DEFAULT_HEIGHT_BOUND
            }
        },
    };

    let Some(algebra) = algebra else {
        return Err(ConfigError { diagnostics: diags });
    };

    let checks = match get("checks") {
        None => applicable_suites(&algebra),
        Some((v, l)) => {
            let names = split_list(v);
            if names.is_empty() {
                err(Some(l), "checks lists no suite".into());
            }
            for name in &names {
                match suite_spec(name) {
                    None => err(Some(l), format!("unknown suite '{name}'")),
                    Some(s) if s.case_a_only && !algebra.is_case_a() => {
                        err(Some(l), format!("suite '{name}' requires case A"))
                    }
                    Some(_) => {}
                }
            }
            names
        }
    };

    let mut parsed_taggings = Vec::new();
    for (header, entries) in &taggings {
        if let Some(t) = parse_tagging(&algebra, *header, entries, &mut err) {
            parsed_taggings.push(t);
        }
    }
    if taggings.is_empty() {
        parsed_taggings = default_taggings(&algebra);
    }

    let mut overrides = BTreeMap::new();
    for ((suite, key), (value, line)) in suites {
        let spec = suite_spec(&suite).expect("checked at the header");
        if spec.case_a_only && !algebra.is_case_a() {
            err(Some(line), format!("suite '{suite}' requires case A"));
            continue;
        }
        let k = spec.keys.iter().find(|k| k.name == key).expect("checked when read");
        match validate_value(&algebra, k.kind, &value) {
            Ok(()) => {
                overrides.insert((suite, key), value);
            }
            Err(m) => err(Some(line), format!("{key}: {m}")),
        }
    }

    if !diags.is_empty() {
        return Err(ConfigError { diagnostics: diags });
    }
    Ok(SuiteConfig { algebra, seed, height_bound, checks, taggings: parsed_taggings, overrides })
}

fn parse_tagging(
    algebra: &AlgebraChoice,
    header: usize,
    entries: &[(String, String, usize)],
    err: &mut impl FnMut(Option<usize>, String),
) -> Option<Tagging> {
    let mut ok = true;
    let mut default = None;
    let mut exceptions = BTreeMap::new();
    for (key, value, line) in entries {
        let side: SideTag = match value.parse() {
            Ok(s) => s,
            Err(_) => {
                err(Some(*line), format!("side must be left or right, got '{value}'"));
                ok = false;
                continue;
            }
        };
        if key == "default" {
            if default.replace(side).is_some() {
                err(Some(*line), "duplicate default".into());
                ok = false;
            }
            continue;
        }
        let Ok(d) = key.parse::<BigInt>() else {
            err(Some(*line), format!("orbit key must be an integer or 'default', got '{key}'"));
            ok = false;
            continue;
        };
        match is_squarefree(&d, DEFAULT_FACTOR_BITS) {
            Ok(true) => {}
            Ok(false) => {
                err(Some(*line), format!("key not squarefree: {d}"));
                ok = false;
                continue;
            }
            Err(e) => {
                err(Some(*line), e.to_string());
                ok = false;
                continue;
            }
        }
        match OrbitKey::new(d) {
            Ok(k) => {
                if exceptions.insert(k, side).is_some() {
                    err(Some(*line), format!("duplicate orbit key {key}"));
                    ok = false;
                }
            }
            Err(e) => {
                err(Some(*line), e.to_string());
                ok = false;
            }
        }
    }
    if !algebra.is_case_a() && !exceptions.is_empty() {
        err(Some(header), "case B admits only the trivial tagging (no orbit keys)".into());
        ok = false;
    }
    ok.then(|| Tagging { exceptions, default: default.unwrap_or(SideTag::Right) })
}

fn validate_value(algebra: &AlgebraChoice, kind: KeyKind, value: &str) -> Result<(), String> {
    match kind {
        KeyKind::Count => match value.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(()),
            _ => Err(format!("expected a positive integer, got '{value}'")),
        },
        KeyKind::Elements(rule) => {
            let items = split_list(value);
            if items.is_empty() {
                return Err("expected at least one element".into());
            }
            for item in &items {
                match algebra {
                    AlgebraChoice::CaseA(h) => check_element(h, item, rule, |x| h.trace(x).is_zero())?,
                    AlgebraChoice::CaseB(h) => check_element(h, item, rule, |_| true)?,
                }
            }
            Ok(())
        }
    }
}

fn check_element<A: FourAlgebra>(
    alg: &A,
    item: &str,
    rule: Rule,
    trace_zero: impl Fn(&Quaternion<A::Scalar>) -> bool,
) -> Result<(), String> {
    let x = parse_quaternion(alg, item).map_err(|e| format!("'{item}': {e}"))?;
    let bad = match rule {
        Rule::Nonzero => x.is_zero().then_some("must be nonzero"),
        Rule::Nonscalar => alg.in_base_field(&x).then_some("must lie outside F·1"),
        Rule::NonscalarTraced => {
            if alg.in_base_field(&x) {
                Some("must lie outside F·1")
            } else if trace_zero(&x) {
                Some("must have nonzero trace")
            } else {
                None
            }
        }
    };
    match bad {
        Some(m) => Err(format!("'{item}' {m}")),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_gets_defaults() {
        let c = parse_config("kind = caseA\na = -1\nb = -1\nseed = 42\n").unwrap();
        assert_eq!(c.seed, 42);
        assert_eq!(c.height_bound, DEFAULT_HEIGHT_BOUND);
        assert_eq!(c.checks.len(), SUITES.len());
        assert_eq!(c.taggings.len(), 1);
        assert_eq!(c.taggings[0].label(), "-1=left;default=right");
        assert_eq!(c.count("ds", "samples"), 1000);
    }

    #[test]
    fn split_algebra_rejected() {
        let e = parse_config("kind = caseA\na = 1\nb = 1\n").unwrap_err();
        assert!(e.mentions("not a division algebra"), "{e}");
        assert_eq!(e.diagnostics[0].line, Some(2));
    }

    #[test]
    fn non_squarefree_key_rejected() {
        let e = parse_config("seed = 1\n[tagging]\n4 = left\ndefault = right\n").unwrap_err();
        assert!(e.mentions("key not squarefree"), "{e}");
        assert_eq!(e.diagnostics[0].line, Some(3));
    }

    #[test]
    fn every_violation_listed() {
        let src = "kind = caseA\nbogus = 1\nseed = x\nchecks = ds, nope\n[ds]\nsamples = 0\n[nothing]\nfoo\n";
        let e = parse_config(src).unwrap_err();
        let lines: Vec<_> = e.diagnostics.iter().map(|d| d.line).collect();
        for l in [2, 3, 4, 6, 7, 8] {
            assert!(lines.contains(&Some(l)), "missing line {l} in {e}");
        }
    }

    #[test]
    fn case_b_restrictions() {
        let c = parse_config("kind = caseB\n").unwrap();
        assert!(!c.checks.iter().any(|s| s == "thm-main"));
        assert_eq!(c.taggings, vec![Tagging::uniform(SideTag::Right)]);
        assert!(parse_config("kind = caseB\nchecks = thm-main\n").unwrap_err().mentions("requires case A"));
        assert!(parse_config("kind = caseB\n[tagging]\n-1 = left\n").unwrap_err().mentions("trivial tagging"));
        assert!(parse_config("kind = caseB\na = s\nb = s\n").is_err());
    }

    #[test]
    fn suite_overrides() {
        let c = parse_config("[orbit-quadric]\nelements = 1 + i, 3 - k\nsamples = 7\n").unwrap();
        assert_eq!(c.elements("orbit-quadric", "elements"), vec!["1 + i", "3 - k"]);
        assert_eq!(c.count("orbit-quadric", "samples"), 7);
        assert!(parse_config("[orbit-quadric]\nelements = i\n").unwrap_err().mentions("nonzero trace"));
        assert!(parse_config("[invariant-classes]\nelements = 2\n").unwrap_err().mentions("outside F"));
    }
}
