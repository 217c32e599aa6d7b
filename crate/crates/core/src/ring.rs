//! Ring descriptors: variable names plus coefficient field.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// A standard-graded polynomial ring k[x_0, ..., x_{N-1}] over a prime
/// field. Variable declaration order is the display order; degrevlex
/// treats the last declared variable as revlex-cheapest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRing {
    pub vars: Vec<String>,
    pub field: PrimeField,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, field: PrimeField) -> Result<Arc<Self>> {
        let mut seen = std::collections::HashSet::new();
        for v in &vars {
            if !seen.insert(v.clone()) {
                return Err(Error::RingMismatch(format!("duplicate variable {v}")));
            }
        }
        Ok(Arc::new(PolyRing { vars, field }))
    }

    /// Ring with variables x0..x{n-1}.
    pub fn standard(nvars: usize, field: PrimeField) -> Arc<Self> {
        let vars = (0..nvars).map(|i| format!("x{i}")).collect();
        PolyRing::new(vars, field).expect("distinct names")
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}
