//! Numerical semigroups represented by their Apéry table with respect to the
//! multiplicity.
//!
//! The table `apery[r]` holds the least element of `S` congruent to `r`
//! modulo `m`. Everything else (membership, gaps, Frobenius number, genus,
//! minimal generators, pseudo-Frobenius numbers) is read off from it.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest modulus for which an Apéry-style table is materialized.
pub const MAX_TABLE_LEN: i64 = 1 << 24;

/// Default cap on the number of factorizations returned by one call.
pub const DEFAULT_FACTORIZATION_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
    genus: i64,
    pseudo_frobenius: Vec<i64>,
}

/// Coefficient vector `(a_1, …, a_ν)` with `Σ a_i n_i` equal to the factored element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Factorization {
    pub coefficients: Vec<u64>,
}

impl Factorization {
    pub fn evaluate(&self, generators: &[i64]) -> Option<i64> {
        self.coefficients
            .iter()
            .zip(generators)
            .try_fold(0i64, |acc, (&a, &n)| {
                i64::try_from(a).ok()?.checked_mul(n)?.checked_add(acc)
            })
    }
}

impl NumericalSemigroup {
    /// Builds `⟨gens⟩`. The input may be unsorted, contain repeats or
    /// redundant generators; the minimal system is extracted.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0i64, |acc, &n| acc.gcd(&n));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let m = gens[0];
        if m > MAX_TABLE_LEN {
            return Err(Error::ResourceLimit(format!(
                "multiplicity {m} exceeds table limit {MAX_TABLE_LEN}"
            )));
        }
        let apery = shortest_paths(m, &gens[1..])?;
        // headroom for F(S) + n_i sums used by every later operation
        let top = apery.iter().copied().max().unwrap_or(0);
        top.checked_add(*gens.last().unwrap())
            .and_then(|x| x.checked_mul(2))
            .ok_or(Error::Overflow)?;
        Ok(Self::from_apery(apery))
    }

    /// The semigroup ℕ = ⟨1⟩.
    pub fn naturals() -> Self {
        Self::from_apery(vec![0])
    }

    /// Builds the semigroup from a valid Apéry table w.r.t. its multiplicity.
    pub(crate) fn from_apery(apery: Vec<i64>) -> Self {
        let m = apery.len() as i64;
        let member = |z: i64| z >= 0 && z >= apery[(z % m) as usize];

        let mut generators = vec![m];
        for (r, &w) in apery.iter().enumerate().skip(1) {
            let reducible = apery
                .iter()
                .enumerate()
                .skip(1)
                .any(|(q, &v)| q != r && v < w && member(w - v));
            if !reducible {
                generators.push(w);
            }
        }
        generators.sort_unstable();

        let frobenius = apery.iter().copied().max().unwrap_or(0) - m;
        let genus = apery.iter().map(|&w| w / m).sum();
        let mut pseudo_frobenius: Vec<i64> = apery
            .iter()
            .filter(|&&w| generators[1..].iter().all(|&n| member(w + n - m)))
            .map(|&w| w - m)
            .collect();
        pseudo_frobenius.sort_unstable();

        Self {
            generators,
            apery,
            frobenius,
            genus,
            pseudo_frobenius,
        }
    }

    /// Removes a minimal generator larger than the Frobenius number, the
    /// step that produces children in the semigroup tree.
    pub fn remove_generator(&self, g: i64) -> Result<Self> {
        if g <= self.frobenius || self.generators.binary_search(&g).is_err() {
            return Err(Error::InvalidSpec(format!(
                "{g} is not a minimal generator above the Frobenius number {}",
                self.frobenius
            )));
        }
        let m = self.multiplicity();
        if g == m {
            // only reachable for {0} ∪ [m, ∞)
            let next = m + 1;
            let apery = (0..next)
                .map(|r| if r == 0 { 0 } else { next + r })
                .collect();
            return Ok(Self::from_apery(apery));
        }
        let mut apery = self.apery.clone();
        apery[(g % m) as usize] = g.checked_add(m).ok_or(Error::Overflow)?;
        Ok(Self::from_apery(apery))
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Apéry table w.r.t. the multiplicity.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn is_naturals(&self) -> bool {
        self.apery.len() == 1
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        let m = self.apery.len() as i64;
        z >= self.apery[(z % m) as usize]
    }

    /// Apéry set with respect to a nonzero element `n` of `S`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n == 0 {
            return Err(Error::ZeroElement);
        }
        if !self.contains(n) {
            return Err(Error::NotInSemigroup(n));
        }
        if n > MAX_TABLE_LEN {
            return Err(Error::ResourceLimit(format!(
                "Apéry set of size {n} exceeds table limit {MAX_TABLE_LEN}"
            )));
        }
        let mut out = vec![-1i64; n as usize];
        let mut missing = n;
        let mut z = 0i64;
        while missing > 0 {
            let r = (z % n) as usize;
            if out[r] < 0 && self.contains(z) {
                out[r] = z;
                missing -= 1;
            }
            z += 1;
        }
        Ok(out)
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius)
            .filter(|&z| !self.contains(z))
            .collect()
    }

    /// Pseudo-Frobenius numbers, ascending; the last one is the Frobenius number.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pseudo_frobenius
    }

    pub fn is_pseudo_frobenius(&self, f: i64) -> bool {
        self.pseudo_frobenius.binary_search(&f).is_ok()
    }

    /// Cohen-Macaulay type `t(S) = |PF(S)|`.
    pub fn semigroup_type(&self) -> usize {
        self.pseudo_frobenius.len()
    }

    pub fn factorizations(&self, z: i64) -> Result<Vec<Factorization>> {
        self.factorizations_with_cap(z, DEFAULT_FACTORIZATION_CAP)
    }

    /// All factorizations of `z`, lexicographically descending.
    pub fn factorizations_with_cap(&self, z: i64, cap: usize) -> Result<Vec<Factorization>> {
        if !self.contains(z) {
            return Err(Error::NotInSemigroup(z));
        }
        FactorizationSearch::new(&self.generators, None, cap).run(z)
    }

    pub fn factorizations_avoiding(&self, z: i64, index: usize) -> Result<Vec<Factorization>> {
        self.factorizations_avoiding_with_cap(z, index, DEFAULT_FACTORIZATION_CAP)
    }

    /// Factorizations of `z` whose coefficient at `index` is zero.
    pub fn factorizations_avoiding_with_cap(
        &self,
        z: i64,
        index: usize,
        cap: usize,
    ) -> Result<Vec<Factorization>> {
        let len = self.generators.len();
        if index >= len {
            return Err(Error::IndexOutOfRange { index, len });
        }
        if !self.contains(z) {
            return Err(Error::NotInSemigroup(z));
        }
        FactorizationSearch::new(&self.generators, Some(index), cap).run(z)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, n) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ">")
    }
}

/// Dijkstra over residues mod `m`, edge `r -> r + n (mod m)` of weight `n`.
fn shortest_paths(m: i64, others: &[i64]) -> Result<Vec<i64>> {
    let mut dist = vec![i64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &n in others {
            let nd = d.checked_add(n).ok_or(Error::Overflow)?;
            let nr = ((r as i64 + n) % m) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Ok(dist)
}

struct FactorizationSearch<'a> {
    generators: &'a [i64],
    skip: Option<usize>,
    // gcd of the active generators at positions >= k; 0 when none remain
    suffix_gcd: Vec<i64>,
    cap: usize,
    current: Vec<u64>,
    out: Vec<Factorization>,
}

impl<'a> FactorizationSearch<'a> {
    fn new(generators: &'a [i64], skip: Option<usize>, cap: usize) -> Self {
        let len = generators.len();
        let mut suffix_gcd = vec![0i64; len + 1];
        for k in (0..len).rev() {
            suffix_gcd[k] = if skip == Some(k) {
                suffix_gcd[k + 1]
            } else {
                suffix_gcd[k + 1].gcd(&generators[k])
            };
        }
        Self {
            generators,
            skip,
            suffix_gcd,
            cap,
            current: vec![0; len],
            out: Vec::new(),
        }
    }

    fn run(mut self, z: i64) -> Result<Vec<Factorization>> {
        if self.reachable(0, z) {
            self.descend(0, z)?;
        }
        Ok(self.out)
    }

    fn reachable(&self, k: usize, rest: i64) -> bool {
        match self.suffix_gcd[k] {
            0 => rest == 0,
            g => rest % g == 0,
        }
    }

    fn descend(&mut self, k: usize, rest: i64) -> Result<()> {
        if k == self.generators.len() {
            if rest == 0 {
                if self.out.len() >= self.cap {
                    return Err(Error::LimitExceeded { cap: self.cap });
                }
                self.out.push(Factorization {
                    coefficients: self.current.clone(),
                });
            }
            return Ok(());
        }
        if self.skip == Some(k) {
            return self.descend(k + 1, rest);
        }
        let n = self.generators[k];
        for a in (0..=rest / n).rev() {
            let left = rest - a * n;
            if self.reachable(k + 1, left) {
                self.current[k] = a as u64;
                self.descend(k + 1, left)?;
            }
        }
        self.current[k] = 0;
        Ok(())
    }
}
