//! Cohen–Macaulay decisions for `max`-weighted path ideals of trees (any `r`)
//! and of complete graphs (`r = 2`).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    classify, detect_r_path_suspension, enumerate_r_paths, prune_pathless_leaves, GraphClass,
    SuspensionWitness, WeightedGraph,
};

/// A base edge `v_i v_j` compared against the first whisker edges at both ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCheck {
    pub edge: (usize, usize),
    pub edge_weight: u64,
    pub whisker_weights: (u64, u64),
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CmWitness {
    /// After pruning no `r`-path is left, so the ideal is zero.
    NoPaths {
        pruned: Vec<usize>,
    },
    /// The pruned tree is a suspension and every base edge passes.
    Suspension {
        pruned: Vec<usize>,
        suspension: SuspensionWitness,
        checks: Vec<EdgeCheck>,
    },
    NoSuspension {
        pruned: Vec<usize>,
    },
    WeightInequalityViolated {
        pruned: Vec<usize>,
        suspension: SuspensionWitness,
        violated: EdgeCheck,
    },
    AllTriplesCm,
    FailingTriple {
        triple: [usize; 3],
        weights: [u64; 3],
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub is_cm: bool,
    pub witness: CmWitness,
}

impl fmt::Display for CmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_cm {
            "Cohen-Macaulay"
        } else {
            "not Cohen-Macaulay"
        })?;
        match &self.witness {
            CmWitness::NoPaths { .. } => write!(f, "; no paths remain after pruning"),
            CmWitness::Suspension { suspension, .. } => {
                write!(f, "; suspension over bases {:?}", suspension.bases)
            }
            CmWitness::NoSuspension { .. } => write!(f, "; pruned tree is not a suspension"),
            CmWitness::WeightInequalityViolated { violated, .. } => write!(
                f,
                "; base edge ({},{}) has weight {} above whisker weights ({},{})",
                violated.edge.0,
                violated.edge.1,
                violated.edge_weight,
                violated.whisker_weights.0,
                violated.whisker_weights.1
            ),
            CmWitness::AllTriplesCm => write!(f, "; every 3-clique passes"),
            CmWitness::FailingTriple {
                triple: [a, b, c], ..
            } => {
                write!(f, "; witness triple ({a},{b},{c})")
            }
        }
    }
}

/// The 3-clique with edge weights `a, b, c` is Cohen–Macaulay at `r = 2` iff
/// its two smallest weights agree.
pub fn clique3_cm(a: u64, b: u64, c: u64) -> bool {
    let mut w = [a, b, c];
    w.sort_unstable();
    w[0] == w[1]
}

/// Decides Cohen–Macaulayness of `I_{r,max}` for a tree.
pub fn cm_tree(g: &WeightedGraph, r: usize) -> Result<CmVerdict> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    if classify(g) != GraphClass::Tree {
        return Err(Error::Precondition("graph is not a tree".into()));
    }
    let (h, pruned) = prune_pathless_leaves(g, r);
    if enumerate_r_paths(&h, r).is_empty() {
        return Ok(CmVerdict {
            is_cm: true,
            witness: CmWitness::NoPaths { pruned },
        });
    }
    let Some(suspension) = detect_r_path_suspension(&h, r) else {
        return Ok(CmVerdict {
            is_cm: false,
            witness: CmWitness::NoSuspension { pruned },
        });
    };
    let mut checks = Vec::new();
    for (i, j, w) in h.edges() {
        let (Some(yi), Some(yj)) = (suspension.attachment(i), suspension.attachment(j)) else {
            continue;
        };
        let wi = h.weight(i, yi).expect("whisker edge");
        let wj = h.weight(j, yj).expect("whisker edge");
        let check = EdgeCheck {
            edge: (i, j),
            edge_weight: w,
            whisker_weights: (wi, wj),
            holds: w <= wi.min(wj),
        };
        if !check.holds {
            return Ok(CmVerdict {
                is_cm: false,
                witness: CmWitness::WeightInequalityViolated {
                    pruned,
                    suspension,
                    violated: check,
                },
            });
        }
        checks.push(check);
    }
    Ok(CmVerdict {
        is_cm: true,
        witness: CmWitness::Suspension {
            pruned,
            suspension,
            checks,
        },
    })
}

fn require_clique(g: &WeightedGraph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != n * (n - 1) / 2 {
        return Err(Error::Precondition(
            "graph is not a complete graph on at least 3 vertices".into(),
        ));
    }
    Ok(g.vertices().collect())
}

fn triples(g: &WeightedGraph) -> Result<impl Iterator<Item = ([usize; 3], [u64; 3])> + '_> {
    let vs = require_clique(g)?;
    let w = |i, j| g.weight(i, j).expect("complete graph");
    let mut out = Vec::new();
    for (x, &a) in vs.iter().enumerate() {
        for (y, &b) in vs.iter().enumerate().skip(x + 1) {
            for &c in &vs[y + 1..] {
                out.push(([a, b, c], [w(a, b), w(b, c), w(a, c)]));
            }
        }
    }
    Ok(out.into_iter())
}

/// Decides Cohen–Macaulayness of `I_{2,max}` for a complete graph.
pub fn cm_clique_r2(g: &WeightedGraph) -> Result<CmVerdict> {
    let failing = triples(g)?.find(|&(_, [a, b, c])| !clique3_cm(a, b, c));
    Ok(match failing {
        Some((triple, weights)) => CmVerdict {
            is_cm: false,
            witness: CmWitness::FailingTriple { triple, weights },
        },
        None => CmVerdict {
            is_cm: true,
            witness: CmWitness::AllTriplesCm,
        },
    })
}

/// First triple whose three weights are pairwise distinct; its presence
/// makes `I_{2,max}` mixed.
pub fn clique_mixedness_shortcut(g: &WeightedGraph) -> Result<Option<[usize; 3]>> {
    Ok(triples(g)?
        .find(|&(_, [a, b, c])| a != b && b != c && a != c)
        .map(|(t, _)| t))
}

/// Trees for every `r`, complete graphs for `r = 2`; anything else is refused.
pub fn cm_auto(g: &WeightedGraph, r: usize) -> Result<CmVerdict> {
    match classify(g) {
        GraphClass::Tree => cm_tree(g, r),
        GraphClass::Complete if r == 2 => cm_clique_r2(g),
        GraphClass::Complete => Err(Error::NoCharacterization(format!(
            "complete graph with r = {r}"
        ))),
        GraphClass::Other => Err(Error::NoCharacterization(
            "graph is neither a tree nor complete".into(),
        )),
    }
}
