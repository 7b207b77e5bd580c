//! Exhaustive generation of numerical semigroups by genus.
//!
//! The semigroup tree is rooted at ℕ; the children of `S` are `S ∖ {g}` for
//! each minimal generator `g > F(S)`. Every numerical semigroup of genus `g`
//! appears exactly once at depth `g`.
//!
//! Minimal generators below `F(S)` survive in every descendant, so a node
//! with more than `D` of them cannot have descendants of embedding dimension
//! at most `D`. Sweeps restricted to small embedding dimension rely on this
//! to skip most of the tree.

mod report;
mod theorems;

pub use report::{recheck, sweep, write_witness_csv, TheoremReport, Witness};
pub use theorems::{dim4_shape, Check, Dim4Shape, Theorem};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nearly;
use crate::semigroup::NumericalSemigroup;

/// Largest genus budget accepted by the enumerator.
pub const MAX_SUPPORTED_GENUS: u32 = 40;

// Subtrees with at least this many remaining levels are split across workers.
const PARALLEL_DEPTH: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Symmetric,
    NotSymmetric,
    AlmostSymmetric,
    NearlyGorenstein,
    CanonicalReduction,
}

impl Property {
    pub fn holds(self, s: &NumericalSemigroup) -> bool {
        match self {
            Property::Symmetric => nearly::is_symmetric(s),
            Property::NotSymmetric => !nearly::is_symmetric(s),
            Property::AlmostSymmetric => nearly::is_almost_symmetric(s),
            Property::NearlyGorenstein => nearly::is_nearly_gorenstein(s),
            Property::CanonicalReduction => nearly::has_canonical_reduction(s),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Filter {
    pub min_embedding_dimension: Option<usize>,
    pub max_embedding_dimension: Option<usize>,
    pub require: Vec<Property>,
}

impl Filter {
    pub fn embedding_dimension(nu: usize) -> Self {
        Self {
            min_embedding_dimension: Some(nu),
            max_embedding_dimension: Some(nu),
            require: Vec::new(),
        }
    }

    pub fn accepts(&self, s: &NumericalSemigroup) -> bool {
        let nu = s.embedding_dimension();
        self.min_embedding_dimension.is_none_or(|lo| nu >= lo)
            && self.max_embedding_dimension.is_none_or(|hi| nu <= hi)
            && self.require.iter().all(|p| p.holds(s))
    }

    /// True when no descendant of `s` can pass the embedding-dimension bound.
    fn prunes(&self, s: &NumericalSemigroup) -> bool {
        match self.max_embedding_dimension {
            Some(hi) => {
                let frob = s.frobenius();
                s.generators().iter().filter(|&&n| n < frob).count() > hi
            }
            None => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeParams {
    pub max_genus: u32,
    pub filter: Filter,
    /// Worker threads; 0 means one per available core.
    pub threads: usize,
}

impl TreeParams {
    pub fn new(max_genus: u32) -> Self {
        Self {
            max_genus,
            filter: Filter::default(),
            threads: 0,
        }
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_genus == 0 {
            return Err(Error::InvalidSpec("max_genus must be at least 1".into()));
        }
        if self.max_genus > MAX_SUPPORTED_GENUS {
            return Err(Error::ResourceLimit(format!(
                "max_genus {} exceeds supported bound {MAX_SUPPORTED_GENUS}",
                self.max_genus
            )));
        }
        Ok(())
    }
}

/// Children of `s` in the semigroup tree.
pub fn children(s: &NumericalSemigroup) -> impl Iterator<Item = NumericalSemigroup> + '_ {
    let frob = s.frobenius();
    s.generators()
        .iter()
        .filter(move |&&g| g > frob)
        .map(move |&g| s.remove_generator(g).expect("generator above F"))
}

/// Sequential depth-first stream over the tree.
pub struct SemigroupTree {
    stack: Vec<NumericalSemigroup>,
    max_genus: i64,
    filter: Filter,
}

impl Iterator for SemigroupTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some(s) = self.stack.pop() {
            if s.genus() < self.max_genus && !self.filter.prunes(&s) {
                let mut kids: Vec<_> = children(&s).collect();
                kids.reverse();
                self.stack.extend(kids);
            }
            if self.filter.accepts(&s) {
                return Some(s);
            }
        }
        None
    }
}

/// Every semigroup of genus at most `max_genus` passing the filter, once each.
pub fn enumerate(params: &TreeParams) -> Result<SemigroupTree> {
    params.validate()?;
    Ok(SemigroupTree {
        stack: vec![NumericalSemigroup::naturals()],
        max_genus: params.max_genus as i64,
        filter: params.filter.clone(),
    })
}

/// Parallel fold over the filtered tree. `visit` runs once per emitted
/// semigroup on a per-subtree accumulator; accumulators are combined with
/// `merge`, which must be associative and commutative for the result to be
/// schedule-independent.
pub fn par_fold<T, I, V, M>(params: &TreeParams, identity: I, visit: V, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, &NumericalSemigroup) + Sync,
    M: Fn(T, T) -> T + Sync,
{
    params.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.threads)
        .build()
        .map_err(|e| Error::ResourceLimit(e.to_string()))?;
    let walker = Walker {
        max_genus: params.max_genus as i64,
        filter: &params.filter,
        identity: &identity,
        visit: &visit,
        merge: &merge,
    };
    Ok(pool.install(|| walker.subtree(NumericalSemigroup::naturals())))
}

struct Walker<'a, I, V, M> {
    max_genus: i64,
    filter: &'a Filter,
    identity: &'a I,
    visit: &'a V,
    merge: &'a M,
}

impl<T, I, V, M> Walker<'_, I, V, M>
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, &NumericalSemigroup) + Sync,
    M: Fn(T, T) -> T + Sync,
{
    fn subtree(&self, root: NumericalSemigroup) -> T {
        if self.max_genus - root.genus() < PARALLEL_DEPTH as i64 {
            return self.sequential(root);
        }
        let mut acc = (self.identity)();
        if self.filter.accepts(&root) {
            (self.visit)(&mut acc, &root);
        }
        if root.genus() >= self.max_genus || self.filter.prunes(&root) {
            return acc;
        }
        let kids: Vec<_> = children(&root).collect();
        let below = kids
            .into_par_iter()
            .map(|k| self.subtree(k))
            .reduce(self.identity, self.merge);
        (self.merge)(acc, below)
    }

    fn sequential(&self, root: NumericalSemigroup) -> T {
        let mut acc = (self.identity)();
        let mut stack = vec![root];
        while let Some(s) = stack.pop() {
            if self.filter.accepts(&s) {
                (self.visit)(&mut acc, &s);
            }
            if s.genus() < self.max_genus && !self.filter.prunes(&s) {
                stack.extend(children(&s));
            }
        }
        acc
    }
}

/// Number of semigroups per genus `0..=max_genus` (unfiltered).
pub fn count_by_genus(max_genus: u32, threads: usize) -> Result<Vec<u64>> {
    let len = max_genus as usize + 1;
    par_fold(
        &TreeParams::new(max_genus).with_threads(threads),
        || vec![0u64; len],
        |acc, s| acc[s.genus() as usize] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )
}
