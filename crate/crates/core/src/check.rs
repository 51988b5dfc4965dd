use serde::Serialize;

/// Outcome of one named identity check over a finite test set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of inputs examined.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, checked: usize) -> Self {
        Check { name: name.into(), passed: true, checked, witness: None, detail: None }
    }

    pub fn fail(
        name: impl Into<String>,
        checked: usize,
        witness: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        Check { name: name.into(), passed: false, checked, witness: Some(witness.into()), detail: Some(detail.into()) }
    }

    /// Runs `test` on every input, stopping at the first failure. `test`
    /// returns `Some((witness, detail))` on failure.
    pub fn run<T>(
        name: impl Into<String>,
        inputs: impl IntoIterator<Item = T>,
        mut test: impl FnMut(&T) -> Option<(String, String)>,
    ) -> Self {
        let name = name.into();
        let mut n = 0;
        for x in inputs {
            n += 1;
            if let Some((w, d)) = test(&x) {
                return Check::fail(name, n, w, d);
            }
        }
        Check::pass(name, n)
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed)
}
