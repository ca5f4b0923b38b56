use std::fmt;

use serde::{Deserialize, Serialize};

/// One broken rule, naming the entity that broke it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    pub entity: String,
    pub message: String,
}

/// Outcome of a report-based validation: passes iff there are no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, rule: &str, entity: impl Into<String>, message: impl Into<String>) {
        self.violations.push(Violation {
            rule: rule.to_string(),
            entity: entity.into(),
            message: message.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    status: String,
    violations: Vec<Violation>,
}

impl Serialize for ValidationReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ReportJson {
            status: if self.passed() { "pass" } else { "fail" }.to_string(),
            violations: self.violations.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ValidationReport {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ReportJson::deserialize(deserializer)?;
        Ok(ValidationReport {
            violations: raw.violations,
        })
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "status: pass");
        }
        write!(f, "status: fail ({} violations)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  [{}] {}: {}", v.rule, v.entity, v.message)?;
        }
        Ok(())
    }
}
