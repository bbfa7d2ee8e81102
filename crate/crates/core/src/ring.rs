//! Polynomial ring descriptors.

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::scalar::Domain;
use std::fmt;
use std::sync::Arc;

/// Descriptor of a polynomial ring: coefficient domain, ordered variable
/// names and a monomial order. Rings are immutable and shared via `Arc`.
///
/// Equality is structural, so independently constructed descriptors of the
/// same ring are interchangeable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    domain: Domain,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new<S: Into<String>>(
        domain: Domain,
        vars: Vec<S>,
        order: MonomialOrder,
    ) -> Result<Arc<Ring>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Eliminate(k) = order {
            if k == 0 || k >= vars.len() {
                return Err(Error::InvalidRing(format!(
                    "Eliminate {k} needs 1 <= k < {}",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(Ring {
            domain,
            vars,
            order,
        }))
    }

    /// Convenience constructor over QQ with GRevLex.
    pub fn rational<S: Into<String>>(vars: Vec<S>) -> Result<Arc<Ring>> {
        Ring::new(Domain::Rational, vars, MonomialOrder::GRevLex)
    }

    /// Convenience constructor over ZZ with GRevLex.
    pub fn integer<S: Into<String>>(vars: Vec<S>) -> Result<Arc<Ring>> {
        Ring::new(Domain::Integer, vars, MonomialOrder::GRevLex)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// Fast ring identity check: pointer equality, falling back to structure.
pub fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// `same_ring` as a contract check with a readable error.
pub fn check_same_ring(a: &Arc<Ring>, b: &Arc<Ring>, what: &str) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{what}: {a} vs {b}")))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.domain)?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        match self.order {
            MonomialOrder::GRevLex => {}
            MonomialOrder::Lex => write!(f, ", Lex")?,
            MonomialOrder::Eliminate(k) => write!(f, ", Eliminate {k}")?,
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validation() {
        assert!(Ring::rational(vec!["x", "y"]).is_ok());
        assert!(Ring::rational(Vec::<&str>::new()).is_err());
        assert!(Ring::rational(vec!["x", "x"]).is_err());
        assert!(Ring::new(Domain::Rational, vec!["x", "y"], MonomialOrder::Eliminate(2)).is_err());
        assert!(Ring::new(Domain::Rational, vec!["x", "y"], MonomialOrder::Eliminate(1)).is_ok());
    }

    #[test]
    fn display_and_equality() {
        let r = Ring::new(Domain::Rational, vec!["x", "y", "z"], MonomialOrder::Eliminate(2))
            .unwrap();
        assert_eq!(r.to_string(), "QQ[x, y, z, Eliminate 2]");
        let r2 = Ring::new(Domain::Rational, vec!["x", "y", "z"], MonomialOrder::Eliminate(2))
            .unwrap();
        assert!(same_ring(&r, &r2));
        let r3 = Ring::integer(vec!["x", "y", "z"]).unwrap();
        assert!(!same_ring(&r, &r3));
        assert_eq!(r3.to_string(), "ZZ[x, y, z]");
    }
}
