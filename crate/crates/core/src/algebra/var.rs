//! Interned symbolic variables.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// An interned variable name.
///
/// Variables carry a total order used by the graded-lexicographic monomial
/// order and the canonical text form: `q` before `a` before `b` before `t`,
/// and every other name after those, alphabetically.
#[derive(Clone, Copy)]
pub struct Var {
    name: &'static str,
    rank: u8,
}

fn rank_of(name: &str) -> u8 {
    match name {
        "q" => 0,
        "a" => 1,
        "b" => 2,
        "t" => 3,
        _ => 4,
    }
}

static INTERNER: OnceLock<Mutex<HashMap<&'static str, &'static str>>> = OnceLock::new();

impl Var {
    /// Intern a variable by name. Names must be non-empty identifiers
    /// (letters, digits, `_`, starting with a letter).
    pub fn new(name: &str) -> Var {
        assert!(is_valid_name(name), "invalid variable name: {name:?}");
        let table = INTERNER.get_or_init(|| Mutex::new(HashMap::new()));
        let mut table = table.lock().expect("variable interner poisoned");
        let interned = match table.get(name) {
            Some(&s) => s,
            None => {
                let s: &'static str = Box::leak(name.to_owned().into_boxed_str());
                table.insert(s, s);
                s
            }
        };
        Var {
            name: interned,
            rank: rank_of(interned),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn q() -> Var {
        Var::new("q")
    }

    pub fn a() -> Var {
        Var::new("a")
    }

    pub fn b() -> Var {
        Var::new("b")
    }

    pub fn t() -> Var {
        Var::new("t")
    }

    pub fn x() -> Var {
        Var::new("x")
    }
}

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.name, other.name) || self.name == other.name
    }
}

impl Eq for Var {}

impl std::hash::Hash for Var {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name.hash(state);
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.name.cmp(other.name))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_order() {
        let q = Var::q();
        let a = Var::a();
        let b = Var::b();
        let t = Var::t();
        let x = Var::x();
        let a0 = Var::new("a_0");
        assert!(q < a && a < b && b < t && t < x);
        assert!(t < a0 && a0 < x);
    }

    #[test]
    fn interning_dedups() {
        assert_eq!(Var::new("foo"), Var::new("foo"));
        assert!(std::ptr::eq(Var::new("foo").name(), Var::new("foo").name()));
    }
}
