//! Weighted `r`-path vertex covers and their correspondence with
//! m-irreducible components of the path ideal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{enumerate_r_paths, Path, WeightedGraph};
use crate::monomial::{m_irreducible_decompose, MIrredComponent};
use crate::path_ideal::{build_path_ideal, path_edge_weights, position_exponent, Combiner};

/// A pair `(W, σ)`: vertex `v ∈ W` carries weight `σ(v) ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeightedCover {
    assignment: BTreeMap<usize, u64>,
}

impl WeightedCover {
    pub fn new(assignment: BTreeMap<usize, u64>) -> Self {
        assert!(
            assignment.values().all(|&w| w >= 1),
            "cover weights must be positive"
        );
        WeightedCover { assignment }
    }

    /// Every vertex of `vertices` with weight 1.
    pub fn unit(vertices: impl IntoIterator<Item = usize>) -> Self {
        WeightedCover::new(vertices.into_iter().map(|v| (v, 1)).collect())
    }

    pub fn assignment(&self) -> &BTreeMap<usize, u64> {
        &self.assignment
    }

    pub fn weight(&self, v: usize) -> Option<u64> {
        self.assignment.get(&v).copied()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignment.keys().copied()
    }

    /// `|W|`.
    pub fn size(&self) -> usize {
        self.assignment.len()
    }

    /// The order in which `(W', σ') ≤ (W, σ)` means `W' ⊆ W` and `σ ≤ σ'` on `W'`.
    pub fn is_below(&self, other: &WeightedCover) -> bool {
        self.assignment
            .iter()
            .all(|(v, &mine)| other.weight(*v).is_some_and(|theirs| theirs <= mine))
    }

    fn sort_key(&self) -> (usize, Vec<usize>, Vec<u64>) {
        (
            self.size(),
            self.assignment.keys().copied().collect(),
            self.assignment.values().copied().collect(),
        )
    }
}

/// Support size, then support, then weights.
impl Ord for WeightedCover {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for WeightedCover {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeightedCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(v, w)| format!("v{v}^{w}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `{"3": 2}` for `{v3^2}`.
impl Serialize for WeightedCover {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.assignment.len()))?;
        for (v, w) in &self.assignment {
            map.serialize_entry(&v.to_string(), w)?;
        }
        map.end()
    }
}

pub fn cover_to_component(c: &WeightedCover) -> MIrredComponent {
    MIrredComponent::new(c.assignment.clone())
}

pub fn component_to_cover(p: &MIrredComponent) -> WeightedCover {
    WeightedCover::new(p.powers().clone())
}

/// Does some vertex of `c` on `path` satisfy the endpoint or interior weight rule?
fn covers_path(
    g: &WeightedGraph,
    f: Combiner,
    c: &WeightedCover,
    path: &Path,
    skip: Option<usize>,
) -> Result<bool> {
    let weights = path_edge_weights(g, path);
    for (j, &v) in path.vertices().iter().enumerate() {
        if Some(v) == skip {
            continue;
        }
        if let Some(sigma) = c.weight(v) {
            if sigma <= position_exponent(f, &weights, j)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// True iff every `r`-path of `g` is covered by `c`.
pub fn is_cover(g: &WeightedGraph, f: Combiner, r: usize, c: &WeightedCover) -> Result<bool> {
    for path in enumerate_r_paths(g, r) {
        if !covers_path(g, f, c, &path, None)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The minimal `f`-weighted `r`-path vertex covers, sorted.
///
/// Read off the irredundant m-irreducible decomposition of the path ideal;
/// the two descriptions coincide component by component.
pub fn minimal_covers(g: &WeightedGraph, f: Combiner, r: usize) -> Result<Vec<WeightedCover>> {
    let ideal = build_path_ideal(g, f, r)?;
    let mut covers: Vec<WeightedCover> = m_irreducible_decompose(&ideal)?
        .iter()
        .map(component_to_cover)
        .collect();
    covers.sort();
    Ok(covers)
}

/// A minimal cover below `c`: first drop removable vertices, then raise each
/// remaining weight as far as it can go, both in ascending vertex order.
pub fn reduce_to_minimal(
    g: &WeightedGraph,
    f: Combiner,
    r: usize,
    c: &WeightedCover,
) -> Result<WeightedCover> {
    if !is_cover(g, f, r, c)? {
        return Err(Error::NotACover);
    }
    let paths = enumerate_r_paths(g, r);
    let mut current = c.clone();

    let vertices: Vec<usize> = current.support().collect();
    for v in vertices {
        let mut trial = current.clone();
        trial.assignment.remove(&v);
        if is_cover(g, f, r, &trial)? {
            current = trial;
        }
    }

    // Raising one weight only shrinks what that vertex covers, so no vertex
    // becomes removable and earlier raises stay maximal.
    let vertices: Vec<usize> = current.support().collect();
    for v in vertices {
        let mut ceiling: Option<u64> = None;
        for path in &paths {
            if covers_path(g, f, &current, path, Some(v))? {
                continue;
            }
            let weights = path_edge_weights(g, path);
            let j = path
                .vertices()
                .iter()
                .position(|&u| u == v)
                .expect("a path covered only by v passes through v");
            let e = position_exponent(f, &weights, j)?;
            ceiling = Some(ceiling.map_or(e, |c| c.min(e)));
        }
        if let Some(top) = ceiling {
            current.assignment.insert(v, top);
        }
    }
    Ok(current)
}

/// All minimal covers have the same support size.
pub fn is_unmixed(g: &WeightedGraph, f: Combiner, r: usize) -> Result<bool> {
    let covers = minimal_covers(g, f, r)?;
    Ok(covers.windows(2).all(|w| w[0].size() == w[1].size()))
}
