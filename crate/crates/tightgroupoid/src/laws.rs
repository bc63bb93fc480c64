//! Named pass/fail results for batches of law checks.

/// Outcome of a batch of named law checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    pub laws: Vec<(String, bool)>,
}

impl LawReport {
    pub fn push(&mut self, name: &str, ok: bool) {
        self.laws.push((name.to_string(), ok));
    }

    pub fn all(&self) -> bool {
        self.laws.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.laws
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect()
    }
}
