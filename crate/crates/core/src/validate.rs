//! Itemized pass/fail reports used by the structural checkers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationItem {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub items: Vec<ValidationItem>,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport { items: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(ValidationItem { label: label.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ValidationItem> {
        self.items.iter().filter(|i| !i.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(
                f,
                "  [{}] {}{}{}",
                if item.passed { "ok" } else { "FAIL" },
                item.label,
                if item.detail.is_empty() { "" } else { ": " },
                item.detail
            )?;
        }
        Ok(())
    }
}
