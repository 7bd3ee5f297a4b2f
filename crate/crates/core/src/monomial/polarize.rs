use serde::Serialize;

use super::{minimalize, Monomial, MonomialIdeal};
use crate::error::Result;

/// A squarefree ideal together with the origin `(variable, copy)` of each of
/// its variables; new variable `k` (1-based) stands for `X_{i,c}` where
/// `variables[k - 1] == (i, c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub variables: Vec<(usize, u64)>,
}

impl Polarization {
    pub fn variable_name(&self, k: usize) -> String {
        let (var, copy) = self.variables[k - 1];
        format!("X{var}_{copy}")
    }

    /// Substitutes `X_{i,c} ↦ X_i`, recovering the original generators.
    pub fn depolarize(&self, nvars: usize) -> Result<MonomialIdeal> {
        let gens = self
            .ideal
            .generators()
            .iter()
            .map(|g| {
                let pairs: Vec<(usize, u64)> =
                    g.support().map(|k| (self.variables[k - 1].0, 1)).collect();
                Monomial::from_pairs(nvars, &pairs)
            })
            .collect::<Result<Vec<_>>>()?;
        minimalize(nvars, gens)
    }
}

/// Standard polarization: `X_i^e` becomes `X_{i,1}⋯X_{i,e}`.
///
/// Variable `X_i` receives `max(1, largest exponent of X_i)` copies, so a
/// squarefree ideal is its own polarization.
pub fn polarize(ideal: &MonomialIdeal) -> Result<Polarization> {
    ideal.require_proper()?;
    let mut variables = Vec::new();
    let mut first_copy = Vec::with_capacity(ideal.nvars());
    for var in 1..=ideal.nvars() {
        first_copy.push(variables.len());
        for copy in 1..=ideal.max_exponent(var).max(1) {
            variables.push((var, copy));
        }
    }
    let total = variables.len();
    let gens = ideal.generators().iter().map(|g| {
        let mut exps = vec![0; total];
        for var in g.support() {
            let start = first_copy[var - 1];
            for slot in &mut exps[start..start + g.exponent(var) as usize] {
                *slot = 1;
            }
        }
        Monomial::from_exponents(exps)
    });
    Ok(Polarization {
        ideal: minimalize(total, gens)?,
        variables,
    })
}
