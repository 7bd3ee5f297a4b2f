//! Homological Cohen–Macaulay oracle over the rationals.
//!
//! The ideal is polarized, its Stanley–Reisner complex is built, and
//! Reisner's criterion is applied: the complex is Cohen–Macaulay over `Q`
//! iff for every face `F` (the empty face included) the link of `F` has
//! vanishing reduced homology below its top dimension. Ranks are computed
//! by exact fraction-free elimination.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{minimalize, polarize, Monomial, MonomialIdeal};

/// Largest polarized universe the oracle accepts by default.
pub const DEFAULT_SIZE_GUARD: usize = 20;

/// Faces are bit masks; vertex `k` (1-based) is bit `k - 1`.
const MAX_VERTICES: usize = 63;

/// A simplicial complex on vertices `1..=vertex_count`, stored by its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<u64>,
}

fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << (v - 1))
}

fn vertices_of(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

impl SimplicialComplex {
    /// Non-maximal faces among `facets` are dropped.
    pub fn new(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::SizeGuard {
                vars: vertex_count,
                guard: MAX_VERTICES,
            });
        }
        if let Some(&v) = facets
            .iter()
            .flatten()
            .find(|&&v| v == 0 || v > vertex_count)
        {
            return Err(Error::VariableOutOfRange {
                var: v,
                nvars: vertex_count,
            });
        }
        let masks: Vec<u64> = facets.iter().map(|f| mask_of(f)).collect();
        Ok(SimplicialComplex::from_masks(vertex_count, masks))
    }

    fn from_masks(vertex_count: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        let facets = masks
            .iter()
            .copied()
            .filter(|&f| !masks.iter().any(|&g| g != f && f & !g == 0))
            .collect();
        SimplicialComplex {
            vertex_count,
            facets,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Facets as sorted vertex lists, sorted.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.facets.iter().map(|&f| vertices_of(f)).collect();
        out.sort();
        out
    }

    /// `-1` for the complex `{∅}`; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    fn is_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| mask & !f == 0)
    }

    /// Every face (the empty face first), each exactly once.
    fn faces(&self) -> Vec<u64> {
        let mut out = Vec::new();
        if self.facets.is_empty() {
            return out;
        }
        let mut stack = vec![(0u64, 0usize)];
        while let Some((face, next)) = stack.pop() {
            out.push(face);
            for b in next..self.vertex_count {
                let grown = face | 1 << b;
                if self.is_face(grown) {
                    stack.push((grown, b + 1));
                }
            }
        }
        out
    }

    fn link(&self, face: u64) -> SimplicialComplex {
        let masks = self
            .facets
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| f & !face)
            .collect();
        SimplicialComplex::from_masks(self.vertex_count, masks)
    }

    /// Some vertex lies in every facet, so the complex is a cone.
    fn is_cone(&self) -> bool {
        self.facets.iter().fold(u64::MAX, |acc, &f| acc & f) != 0
    }
}

/// Faces of the complex are the squarefree monomials outside `ideal`.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    ideal.require_proper()?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.nvars();
    if n > MAX_VERTICES {
        return Err(Error::SizeGuard {
            vars: n,
            guard: MAX_VERTICES,
        });
    }
    let nonfaces: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| mask_of(&g.support().collect::<Vec<_>>()))
        .collect();
    let is_face = |m: u64| !nonfaces.iter().any(|&g| g & !m == 0);

    let mut facets = Vec::new();
    let mut stack = vec![(0u64, 0usize)];
    while let Some((face, next)) = stack.pop() {
        let mut maximal = true;
        for b in 0..n {
            let grown = face | 1 << b;
            if grown != face && is_face(grown) {
                maximal = false;
                if b >= next {
                    stack.push((grown, b + 1));
                }
            }
        }
        if maximal {
            facets.push(face);
        }
    }
    Ok(SimplicialComplex::from_masks(n, facets))
}

/// Ranks of reduced homology over `Q` in dimensions `-1..=dim`.
///
/// Empty for the void complex.
pub fn reduced_homology_ranks(c: &SimplicialComplex) -> Vec<usize> {
    let Some(dim) = c.dimension() else {
        return Vec::new();
    };
    let top = (dim + 1) as usize;
    // by_size[s] holds the faces with s vertices, i.e. dimension s - 1
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in c.faces() {
        by_size[f.count_ones() as usize].push(f);
    }
    for faces in &mut by_size {
        faces.sort_unstable();
    }
    // boundary_rank[s] = rank of the map from s-vertex faces to (s-1)-vertex faces
    let mut boundary_rank = vec![0usize; top + 2];
    for s in 1..=top {
        boundary_rank[s] = boundary_matrix_rank(&by_size[s], &by_size[s - 1]);
    }
    (0..=top)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect()
}

fn boundary_matrix_rank(faces: &[u64], facets_below: &[u64]) -> usize {
    let index: HashMap<u64, usize> = facets_below
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();
    let columns: Vec<Vec<(usize, i64)>> = faces
        .iter()
        .map(|&face| {
            let mut col: Vec<(usize, i64)> = vertices_of(face)
                .iter()
                .enumerate()
                .map(|(pos, &v)| {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    (index[&(face & !(1 << (v - 1)))], sign)
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    exact_rank::<i128>(&columns)
        .unwrap_or_else(|| exact_rank::<BigInt>(&columns).expect("big integers do not overflow"))
}

/// Integer entries for fraction-free elimination; `None` signals overflow.
trait Coef: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn mul_sub(b: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
}

impl Coef for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(b: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self> {
        b.checked_mul(*x)?.checked_sub(a.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coef for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(b: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self> {
        Some(b * x - a * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Rank over `Q` of the matrix whose sparse columns are given (rows sorted).
fn exact_rank<T: Coef>(columns: &[Vec<(usize, i64)>]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for col in columns {
        let mut v: Vec<(usize, T)> = col.iter().map(|&(r, x)| (r, T::from_i64(x))).collect();
        while let Some((lead, a)) = v.last().cloned() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, v);
                break;
            };
            let b = p.last().expect("pivot columns are non-empty").1.clone();
            v = combine(&b, &v, &a, p)?;
        }
    }
    Some(pivots.len())
}

/// `b·x − a·y` with the result divided by the gcd of its entries.
fn combine<T: Coef>(b: &T, x: &[(usize, T)], a: &T, y: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, xv, yv) = match (x.get(i), y.get(j)) {
            (Some(p), Some(q)) if p.0 == q.0 => {
                i += 1;
                j += 1;
                (p.0, &p.1, &q.1)
            }
            (Some(p), Some(q)) if p.0 < q.0 => {
                i += 1;
                (p.0, &p.1, &zero)
            }
            (Some(p), None) => {
                i += 1;
                (p.0, &p.1, &zero)
            }
            (_, Some(q)) => {
                j += 1;
                (q.0, &zero, &q.1)
            }
            (None, None) => unreachable!(),
        };
        let value = T::mul_sub(b, xv, a, yv)?;
        if !value.is_zero() {
            out.push((row, value));
        }
    }
    if let Some(first) = out.first() {
        let mut g = first.1.clone();
        for (_, value) in &out[1..] {
            g = g.gcd(value);
        }
        if g.is_negative() {
            g = g.neg();
        }
        for (_, value) in &mut out {
            *value = value.div_exact(&g);
        }
    }
    Some(out)
}

/// Reisner's criterion with the default size guard.
pub fn is_cm_rational(ideal: &MonomialIdeal) -> Result<bool> {
    is_cm_rational_with_guard(ideal, DEFAULT_SIZE_GUARD)
}

/// Cohen–Macaulayness of `S/ideal` over `Q`.
///
/// Variables absent from every generator only add a polynomial factor and
/// are dropped first; the polarized universe must not exceed `guard`.
pub fn is_cm_rational_with_guard(ideal: &MonomialIdeal, guard: usize) -> Result<bool> {
    ideal.require_proper()?;
    let used: Vec<usize> = (1..=ideal.nvars())
        .filter(|&v| ideal.max_exponent(v) > 0)
        .collect();
    let restricted = minimalize(
        used.len(),
        ideal
            .generators()
            .iter()
            .map(|g| Monomial::from_exponents(used.iter().map(|&v| g.exponent(v)).collect())),
    )?;
    let polarized = polarize(&restricted)?;
    let vars = polarized.ideal.nvars();
    if vars > guard.min(MAX_VERTICES) {
        return Err(Error::SizeGuard { vars, guard });
    }
    let complex = stanley_reisner_complex(&polarized.ideal)?;
    Ok(satisfies_reisner(&complex))
}

fn satisfies_reisner(complex: &SimplicialComplex) -> bool {
    if !complex.is_pure() {
        return false;
    }
    complex.faces().into_iter().all(|face| {
        let link = complex.link(face);
        if link.facets.len() <= 1 || link.is_cone() {
            return true;
        }
        let ranks = reduced_homology_ranks(&link);
        // ranks[k] is dimension k - 1; the top dimension is exempt
        ranks[..ranks.len() - 1].iter().all(|&b| b == 0)
    })
}
