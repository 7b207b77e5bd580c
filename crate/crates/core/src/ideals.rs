//! Relative ideals of a numerical semigroup, stored as residue minima modulo
//! the multiplicity of the ambient semigroup.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A relative ideal `I` of `S` (`I + S ⊆ I`, bounded below).
///
/// `min_per_residue[r]` is the least element of `I` congruent to `r` modulo
/// the multiplicity `m`; because `m ∈ S`, the ideal is exactly the union of
/// the progressions `min_per_residue[r] + mℕ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeIdeal {
    ambient: NumericalSemigroup,
    min_per_residue: Vec<i64>,
}

impl RelativeIdeal {
    /// Ideal generated over `S` by a nonempty finite set of integers.
    pub fn generated_by(ambient: &NumericalSemigroup, generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let m = ambient.multiplicity();
        let apery = ambient.apery();
        let mut min = vec![i64::MAX; m as usize];
        for &g in generators {
            for &w in apery {
                let z = g.checked_add(w).ok_or(Error::Overflow)?;
                let slot = &mut min[residue(z, m)];
                *slot = (*slot).min(z);
            }
        }
        Ok(Self {
            ambient: ambient.clone(),
            min_per_residue: min,
        })
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    pub fn min_per_residue(&self) -> &[i64] {
        &self.min_per_residue
    }

    pub fn contains(&self, z: i64) -> bool {
        let m = self.ambient.multiplicity();
        z >= self.min_per_residue[residue(z, m)]
    }

    /// Least element of the ideal.
    pub fn min(&self) -> i64 {
        self.min_per_residue.iter().copied().min().unwrap_or(0)
    }

    /// `self ⊆ other` (same ambient required).
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self
            .min_per_residue
            .iter()
            .zip(&other.min_per_residue)
            .all(|(a, b)| a >= b))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }
}

#[inline]
fn residue(z: i64, m: i64) -> usize {
    z.rem_euclid(m) as usize
}

/// The ideal `S` itself.
pub fn principal(s: &NumericalSemigroup) -> RelativeIdeal {
    RelativeIdeal {
        ambient: s.clone(),
        min_per_residue: s.apery().to_vec(),
    }
}

/// `M(S) = S ∖ {0}`.
pub fn maximal_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    let mut min = s.apery().to_vec();
    min[0] = s.multiplicity();
    RelativeIdeal {
        ambient: s.clone(),
        min_per_residue: min,
    }
}

/// `K(S) = {z : F(S) − z ∉ S}`, generated by `F(S) − f` for `f ∈ PF(S)`.
pub fn canonical_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    let f = s.frobenius();
    let gens: Vec<i64> = s.pseudo_frobenius().iter().map(|&p| f - p).collect();
    RelativeIdeal::generated_by(s, &gens).expect("PF(S) is nonempty and bounded by F(S)")
}

/// `I + J = {i + j}`.
pub fn ideal_sum(i: &RelativeIdeal, j: &RelativeIdeal) -> Result<RelativeIdeal> {
    i.check_ambient(j)?;
    let m = i.ambient.multiplicity();
    let mut min = vec![i64::MAX; m as usize];
    for &a in &i.min_per_residue {
        for &b in &j.min_per_residue {
            let z = a.checked_add(b).ok_or(Error::Overflow)?;
            let slot = &mut min[residue(z, m)];
            *slot = (*slot).min(z);
        }
    }
    Ok(RelativeIdeal {
        ambient: i.ambient.clone(),
        min_per_residue: min,
    })
}

/// `I − J = {z : z + J ⊆ I}`.
///
/// The residue minima of `J` generate it over `S`, so `z` qualifies iff
/// `z + g ∈ I` for each minimum `g`.
pub fn ideal_difference(i: &RelativeIdeal, j: &RelativeIdeal) -> Result<RelativeIdeal> {
    i.check_ambient(j)?;
    let m = i.ambient.multiplicity();
    let mut min = vec![i64::MIN; m as usize];
    for (c, slot) in min.iter_mut().enumerate() {
        for &g in &j.min_per_residue {
            let target = i.min_per_residue[residue(c as i64 + g, m)];
            let bound = target.checked_sub(g).ok_or(Error::Overflow)?;
            *slot = (*slot).max(bound);
        }
    }
    Ok(RelativeIdeal {
        ambient: i.ambient.clone(),
        min_per_residue: min,
    })
}

/// Trace-style test `M(S) ⊆ K(S) + (S − K(S))`.
pub fn ng_by_trace(s: &NumericalSemigroup) -> bool {
    let k = canonical_ideal(s);
    let dual = ideal_difference(&principal(s), &k).expect("same ambient");
    let trace = ideal_sum(&k, &dual).expect("same ambient");
    maximal_ideal(s).is_subset_of(&trace).expect("same ambient")
}
