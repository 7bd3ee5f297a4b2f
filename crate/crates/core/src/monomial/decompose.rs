use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{minimalize, MIrredComponent, Monomial, MonomialIdeal};
use crate::error::Result;

/// The unique irredundant m-irreducible decomposition of `ideal`, sorted.
///
/// Splits the first mixed generator `m = u·v`, where `u` is the pure power of
/// the lowest variable of `m`, using `(J, uv) = (J, u) ∩ (J, v)` for coprime
/// `u` and `v`; leaves are ideals generated by pure powers. Redundant leaves
/// are discarded at the end. The zero ideal yields the single empty component.
pub fn m_irreducible_decompose(ideal: &MonomialIdeal) -> Result<Vec<MIrredComponent>> {
    ideal.require_proper()?;
    let mut leaves = BTreeSet::new();
    let mut seen = HashSet::new();
    split(
        ideal.generators().to_vec(),
        ideal.nvars(),
        &mut seen,
        &mut leaves,
    );

    // Containment of m-irreducible ideals is a componentwise comparison.
    let leaves: Vec<MIrredComponent> = leaves.into_iter().collect();
    let irredundant = leaves
        .iter()
        .filter(|p| !leaves.iter().any(|q| q != *p && p.contains_component(q)))
        .cloned()
        .collect();
    Ok(irredundant)
}

fn split(
    gens: Vec<Monomial>,
    nvars: usize,
    seen: &mut HashSet<Vec<Monomial>>,
    leaves: &mut BTreeSet<MIrredComponent>,
) {
    if !seen.insert(gens.clone()) {
        return;
    }
    let Some(pos) = gens.iter().position(|g| g.support().count() > 1) else {
        let powers: BTreeMap<usize, u64> = gens
            .iter()
            .map(|g| {
                let v = g
                    .support()
                    .next()
                    .expect("proper ideal has no unit generator");
                (v, g.exponent(v))
            })
            .collect();
        leaves.insert(MIrredComponent::new(powers));
        return;
    };
    let mixed = &gens[pos];
    let var = mixed.support().next().expect("mixed generator has support");
    let mut pure = Monomial::one(nvars);
    pure.exps[var - 1] = mixed.exps[var - 1];
    let mut rest = mixed.clone();
    rest.exps[var - 1] = 0;

    for factor in [pure, rest] {
        let mut next = gens.clone();
        next[pos] = factor;
        let next = minimalize(nvars, next).expect("same universe").gens;
        split(next, nvars, seen, leaves);
    }
}

/// All components of the irredundant decomposition have the same support size.
pub fn is_m_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    let components = m_irreducible_decompose(ideal)?;
    Ok(components
        .windows(2)
        .all(|w| w[0].support_size() == w[1].support_size()))
}

/// `dim S/I`: the number of variables minus the smallest component support.
pub fn krull_dimension_of_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    let components = m_irreducible_decompose(ideal)?;
    let height = components
        .iter()
        .map(MIrredComponent::support_size)
        .min()
        .unwrap_or(0);
    Ok(ideal.nvars() - height)
}
