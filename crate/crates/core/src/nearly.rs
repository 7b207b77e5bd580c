//! Symmetric, almost symmetric and nearly Gorenstein semigroups, NG-vectors,
//! canonical reduction and Wilf-type checks.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_NG_VECTOR_CAP: usize = 1_000_000;

/// `(f_1, …, f_ν) ∈ PF(S)^ν` with `n_i + f_i − f ∈ S` for all `i` and all `f ∈ PF(S)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct NgVector(pub Vec<i64>);

impl NgVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for NgVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub fn is_symmetric(s: &NumericalSemigroup) -> bool {
    s.semigroup_type() == 1
}

/// Nari's criterion: `F(S) − f ∈ PF(S)` for every `f ∈ PF(S) ∖ {F(S)}`.
pub fn is_almost_symmetric(s: &NumericalSemigroup) -> bool {
    let frob = s.frobenius();
    s.pseudo_frobenius()
        .iter()
        .filter(|&&f| f != frob)
        .all(|&f| s.is_pseudo_frobenius(frob - f))
}

/// Admissible entries at position `index` of an NG-vector, ascending.
pub fn ng_candidates(s: &NumericalSemigroup, index: usize) -> Result<Vec<i64>> {
    let len = s.embedding_dimension();
    if index >= len {
        return Err(Error::IndexOutOfRange { index, len });
    }
    Ok(candidates_at(s, index))
}

fn candidates_at(s: &NumericalSemigroup, index: usize) -> Vec<i64> {
    let n = s.generators()[index];
    let pf = s.pseudo_frobenius();
    pf.iter()
        .copied()
        .filter(|&fi| pf.iter().all(|&f| s.contains(n + fi - f)))
        .collect()
}

/// Candidate sets for every generator position.
pub fn all_ng_candidates(s: &NumericalSemigroup) -> Vec<Vec<i64>> {
    (0..s.embedding_dimension())
        .map(|i| candidates_at(s, i))
        .collect()
}

pub fn is_nearly_gorenstein(s: &NumericalSemigroup) -> bool {
    (0..s.embedding_dimension()).all(|i| !candidates_at(s, i).is_empty())
}

/// Number of NG-vectors, saturating at `u64::MAX`.
pub fn ng_vector_count(s: &NumericalSemigroup) -> u64 {
    all_ng_candidates(s)
        .iter()
        .fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64))
}

pub fn ng_vectors(s: &NumericalSemigroup) -> Result<Vec<NgVector>> {
    ng_vectors_with_cap(s, DEFAULT_NG_VECTOR_CAP)
}

/// All NG-vectors in lexicographic order; empty iff `S` is not nearly Gorenstein.
pub fn ng_vectors_with_cap(s: &NumericalSemigroup, cap: usize) -> Result<Vec<NgVector>> {
    let candidates = all_ng_candidates(s);
    cartesian_product(&candidates, cap).map(|rows| rows.into_iter().map(NgVector).collect())
}

/// Odometer-order Cartesian product; lexicographic when each list is sorted.
pub(crate) fn cartesian_product<T: Clone>(lists: &[Vec<T>], cap: usize) -> Result<Vec<Vec<T>>> {
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(Vec::new());
    }
    let total = lists
        .iter()
        .try_fold(1usize, |acc, l| acc.checked_mul(l.len()));
    match total {
        Some(t) if t <= cap => {}
        _ => return Err(Error::LimitExceeded { cap }),
    }
    let mut out = Vec::with_capacity(total.unwrap_or(0));
    let mut idx = vec![0usize; lists.len()];
    loop {
        out.push(idx.iter().zip(lists).map(|(&k, l)| l[k].clone()).collect());
        let mut pos = lists.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn validate_ng_vector(s: &NumericalSemigroup, v: &NgVector) -> Result<()> {
    let len = s.embedding_dimension();
    if v.0.len() != len {
        return Err(Error::InvalidNgVector(format!(
            "expected {len} entries, got {}",
            v.0.len()
        )));
    }
    for (i, (&fi, &n)) in v.0.iter().zip(s.generators()).enumerate() {
        if !s.is_pseudo_frobenius(fi) {
            return Err(Error::InvalidNgVector(format!(
                "entry {} = {fi} is not pseudo-Frobenius",
                i + 1
            )));
        }
        if let Some(&f) = s
            .pseudo_frobenius()
            .iter()
            .find(|&&f| !s.contains(n + fi - f))
        {
            return Err(Error::InvalidNgVector(format!(
                "n_{} + f_{} - {f} = {} is not in S",
                i + 1,
                i + 1,
                n + fi - f
            )));
        }
    }
    Ok(())
}

/// Shape of an NG-vector relative to the Frobenius number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NgStructure {
    /// Every entry equals `F(S)`.
    AllFrobenius,
    /// `i` is the first index with `f_i ≠ F(S)` and `f_i = F(S) − n_i + n_l`, `l < i`.
    Witness { i: usize, l: usize },
    /// The first entry differs from `F(S)`.
    FirstEntryNotFrobenius,
    /// No `l < i` satisfies the relation for the first differing index `i`.
    NoWitness { i: usize },
}

pub fn verify_ng_vector_structure(s: &NumericalSemigroup, v: &NgVector) -> Result<NgStructure> {
    validate_ng_vector(s, v)?;
    Ok(ng_structure(s, v))
}

pub(crate) fn ng_structure(s: &NumericalSemigroup, v: &NgVector) -> NgStructure {
    let frob = s.frobenius();
    let gens = s.generators();
    if v.0[0] != frob {
        return NgStructure::FirstEntryNotFrobenius;
    }
    let Some(i) = v.0.iter().position(|&x| x != frob) else {
        return NgStructure::AllFrobenius;
    };
    match (0..i).find(|&l| v.0[i] == frob - gens[i] + gens[l]) {
        Some(l) => NgStructure::Witness { i, l },
        None => NgStructure::NoWitness { i },
    }
}

/// Searches for an NG-vector whose first `prefix` entries are pairwise
/// distinct. Returns `None` when no such vector exists (or `S` is not
/// nearly Gorenstein).
///
/// This is a bipartite matching between positions `0..prefix` and
/// pseudo-Frobenius numbers, so it never materializes the full product.
pub fn ng_vector_with_distinct_prefix(s: &NumericalSemigroup, prefix: usize) -> Option<NgVector> {
    let candidates = all_ng_candidates(s);
    if prefix > candidates.len() || candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let pf = s.pseudo_frobenius();
    let adj: Vec<Vec<usize>> = candidates[..prefix]
        .iter()
        .map(|c| c.iter().map(|f| pf.binary_search(f).unwrap()).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; pf.len()];
    for left in 0..prefix {
        let mut seen = vec![false; pf.len()];
        if !augment(left, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut entries: Vec<i64> = candidates.iter().map(|c| c[0]).collect();
    for (right, o) in owner.iter().enumerate() {
        if let Some(left) = *o {
            entries[left] = pf[right];
        }
    }
    Some(NgVector(entries))
}

fn augment(
    left: usize,
    adj: &[Vec<usize>],
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &right in &adj[left] {
        if seen[right] {
            continue;
        }
        seen[right] = true;
        if owner[right].is_none_or(|o| augment(o, adj, owner, seen)) {
            owner[right] = Some(left);
            return true;
        }
    }
    false
}

/// `n_1 + F(S) − f ∈ S` for every `f ∈ PF(S)`.
pub fn has_canonical_reduction(s: &NumericalSemigroup) -> bool {
    let base = s.multiplicity() + s.frobenius();
    s.pseudo_frobenius().iter().all(|&f| s.contains(base - f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WilfCheck {
    pub conductor: i64,
    pub n_count: i64,
    pub holds_fgh: bool,
    pub holds_wilf: bool,
}

pub fn wilf_check(s: &NumericalSemigroup) -> WilfCheck {
    let conductor = s.conductor();
    let n_count = (0..conductor).filter(|&z| s.contains(z)).count() as i64;
    let t = s.semigroup_type() as i64;
    let nu = s.embedding_dimension() as i64;
    WilfCheck {
        conductor,
        n_count,
        holds_fgh: conductor <= n_count * (t + 1),
        holds_wilf: conductor <= n_count * nu,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HierarchyReport {
    pub symmetric: bool,
    pub almost_symmetric: bool,
    pub nearly_gorenstein: bool,
    pub canonical_reduction: bool,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub ng_vector_count: u64,
}

impl HierarchyReport {
    /// symmetric ⇒ almost symmetric ⇒ nearly Gorenstein ⇒ canonical reduction.
    pub fn implications_hold(&self) -> bool {
        (!self.symmetric || self.almost_symmetric)
            && (!self.almost_symmetric || self.nearly_gorenstein)
            && (!self.nearly_gorenstein || self.canonical_reduction)
    }

    /// Short flag names of the properties that hold, e.g. `["as", "ng", "cr"]`.
    pub fn flag_names(&self) -> Vec<&'static str> {
        [
            (self.symmetric, "sym"),
            (self.almost_symmetric, "as"),
            (self.nearly_gorenstein, "ng"),
            (self.canonical_reduction, "cr"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

pub fn hierarchy(s: &NumericalSemigroup) -> HierarchyReport {
    let report = HierarchyReport {
        symmetric: is_symmetric(s),
        almost_symmetric: is_almost_symmetric(s),
        nearly_gorenstein: is_nearly_gorenstein(s),
        canonical_reduction: has_canonical_reduction(s),
        semigroup_type: s.semigroup_type(),
        ng_vector_count: ng_vector_count(s),
    };
    debug_assert!(report.implications_hold(), "hierarchy broken for {s}");
    report
}
