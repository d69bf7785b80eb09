//! Feasibility limits. Exceeding one is reported as [`Error::CapExceeded`].

use crate::error::{Error, Result};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Order of the quotient automorphism group.
    pub aut: usize,
    /// Number of subgroup conjugacy classes.
    pub subgroups: usize,
    /// Number of Lyndon basis elements.
    pub basis: usize,
    /// Largest nilpotency class.
    pub c: usize,
    /// Largest quotient graph handled by the brute-force oracle.
    pub oracle_nodes: usize,
    /// Number of connected component sets enumerated by the decider.
    pub connected_sets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            aut: 10080,
            subgroups: 5000,
            basis: 20000,
            c: 8,
            oracle_nodes: 12,
            connected_sets: 1 << 22,
        }
    }
}

impl Caps {
    pub(crate) fn check_c(&self, c: usize) -> Result<()> {
        if c > self.c {
            return Err(Error::CapExceeded {
                what: "nilpotency class",
                cap: self.c,
            });
        }
        Ok(())
    }
}

impl FromStr for Caps {
    type Err = Error;

    /// Parses overrides such as `aut=720,basis=5000`; unnamed caps keep
    /// their defaults.
    fn from_str(s: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidInput(format!("cap '{item}' is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("cap '{item}' has a non-integer value")))?;
            let slot = match key.trim() {
                "aut" => &mut caps.aut,
                "subgroups" => &mut caps.subgroups,
                "basis" => &mut caps.basis,
                "c" => &mut caps.c,
                "oracle" => &mut caps.oracle_nodes,
                "sets" => &mut caps.connected_sets,
                other => return Err(Error::InvalidInput(format!("unknown cap '{other}'"))),
            };
            *slot = value;
        }
        Ok(caps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_overrides() {
        let caps: Caps = "aut=12, basis=7".parse().unwrap();
        assert_eq!(caps.aut, 12);
        assert_eq!(caps.basis, 7);
        assert_eq!(caps.subgroups, 5000);
        assert!("aut".parse::<Caps>().is_err());
        assert!("foo=1".parse::<Caps>().is_err());
        assert!("aut=x".parse::<Caps>().is_err());
        assert_eq!("".parse::<Caps>().unwrap(), Caps::default());
    }
}
