use std::fmt;
use std::sync::Arc;

/// Variable-name table of a polynomial ring over the rationals.
///
/// Two rings are the same ambient iff their name tables agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Ring> {
        Arc::new(Ring {
            names: names.into_iter().map(Into::into).collect(),
        })
    }

    /// `prefix1, …, prefixN`
    pub fn indexed(prefix: &str, n: usize) -> Arc<Ring> {
        Ring::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    /// `x1, …, xn, y1, …, yn`: the source ring of a multiplication map.
    pub fn monoid(n: usize) -> Arc<Ring> {
        Ring::blocks(&["x", "y"], n)
    }

    /// `x1, …, xn, y1, …, yn, z1, …, zn`, used for associativity checks.
    pub fn triple(n: usize) -> Arc<Ring> {
        Ring::blocks(&["x", "y", "z"], n)
    }

    pub fn blocks(prefixes: &[&str], n: usize) -> Arc<Ring> {
        Ring::new(
            prefixes
                .iter()
                .flat_map(|p| (1..=n).map(move |i| format!("{p}{i}"))),
        )
    }

    /// This ring with `extra` variables appended.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Arc<Ring> {
        Ring::new(
            self.names
                .iter()
                .cloned()
                .chain(extra.iter().map(|s| s.as_ref().to_string())),
        )
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}
