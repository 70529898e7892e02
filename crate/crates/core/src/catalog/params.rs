use std::fmt;

use crate::error::{Error, Result};
use crate::series::QMonomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    /// Integer at least `min`, and at most the named earlier parameter.
    Int {
        min: i64,
        at_most: Option<&'static str>,
    },
    /// A substitution value `c q^s`.
    Monomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
}

impl ParamSpec {
    pub const fn int(name: &'static str, min: i64) -> Self {
        Self {
            name,
            kind: ParamKind::Int { min, at_most: None },
        }
    }

    pub const fn int_le(name: &'static str, min: i64, bound: &'static str) -> Self {
        Self {
            name,
            kind: ParamKind::Int {
                min,
                at_most: Some(bound),
            },
        }
    }

    pub const fn mono(name: &'static str) -> Self {
        Self {
            name,
            kind: ParamKind::Monomial,
        }
    }

    pub fn describe(&self) -> String {
        match self.kind {
            ParamKind::Int { min, at_most: None } => format!("{} >= {min}", self.name),
            ParamKind::Int {
                min,
                at_most: Some(b),
            } => format!("{min} <= {} <= {b}", self.name),
            ParamKind::Monomial => format!("{}: c*q^s", self.name),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParamValue {
    Int(i64),
    Monomial(QMonomial),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Monomial(m) => write!(f, "{m}"),
        }
    }
}

/// Named parameter bindings in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParamSet {
    bindings: Vec<(String, ParamValue)>,
}

impl ParamSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds or replaces a binding.
    pub fn set(&mut self, name: &str, value: ParamValue) {
        match self.bindings.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = value,
            None => self.bindings.push((name.to_string(), value)),
        }
    }

    pub fn with(&self, name: &str, value: ParamValue) -> Self {
        let mut p = self.clone();
        p.set(name, value);
        p
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.bindings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    pub fn int(&self, name: &str) -> Result<i64> {
        match self.get(name) {
            Some(ParamValue::Int(v)) => Ok(*v),
            Some(_) => Err(Error::Params(format!("{name} must be an integer"))),
            None => Err(Error::Params(format!("missing parameter {name}"))),
        }
    }

    pub fn mono(&self, name: &str) -> Result<&QMonomial> {
        match self.get(name) {
            Some(ParamValue::Monomial(m)) => Ok(m),
            Some(_) => Err(Error::Params(format!("{name} must be a monomial"))),
            None => Err(Error::Params(format!("missing parameter {name}"))),
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.bindings.iter().map(|(n, _)| n.as_str())
    }

    /// Bindings must cover exactly `specs`, each with the right kind.
    pub fn check_coverage(&self, specs: &[ParamSpec]) -> std::result::Result<(), String> {
        for spec in specs {
            let ok = match (spec.kind, self.get(spec.name)) {
                (ParamKind::Int { .. }, Some(ParamValue::Int(_))) => true,
                (ParamKind::Monomial, Some(ParamValue::Monomial(_))) => true,
                (_, None) => return Err(format!("missing parameter {}", spec.name)),
                _ => false,
            };
            if !ok {
                return Err(format!("parameter {} has the wrong kind", spec.name));
            }
        }
        if let Some(extra) = self.names().find(|n| specs.iter().all(|s| s.name != *n)) {
            return Err(format!("unexpected parameter {extra}"));
        }
        Ok(())
    }

    /// Same bindings, reordered to follow `specs`.
    pub fn ordered_by(&self, specs: &[ParamSpec]) -> Self {
        let mut out = Self::new();
        for spec in specs {
            if let Some(v) = self.get(spec.name) {
                out.set(spec.name, v.clone());
            }
        }
        for (n, v) in &self.bindings {
            if out.get(n).is_none() {
                out.set(n, v.clone());
            }
        }
        out
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .bindings
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}
