//! Gluings, the dilation `⟨dn_1, …, dn_{ν−1}, n_ν⟩`, and semigroups
//! generated by generalized arithmetic sequences.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingSpec {
    pub s1: NumericalSemigroup,
    pub s2: NumericalSemigroup,
    pub x: i64,
    pub y: i64,
}

impl GluingSpec {
    /// Checks `x ∈ S₂ ∖ G(S₂)`, `y ∈ S₁ ∖ G(S₁)` and `gcd(x, y) = 1`.
    pub fn validate(&self) -> Result<()> {
        for (elem, sg) in [(self.x, &self.s2), (self.y, &self.s1)] {
            if elem <= 0 || !sg.contains(elem) {
                return Err(Error::NotInSemigroup(elem));
            }
            if sg.generators().contains(&elem) {
                return Err(Error::IsMinimalGenerator(elem));
            }
        }
        if self.x.gcd(&self.y) != 1 {
            return Err(Error::NotCoprime {
                a: self.x,
                b: self.y,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub semigroup: NumericalSemigroup,
    /// Pseudo-Frobenius numbers predicted by the closed formula, ascending.
    pub pf_formula: Vec<i64>,
}

impl Construction {
    pub fn formula_matches(&self) -> bool {
        self.pf_formula == self.semigroup.pseudo_frobenius()
    }
}

/// `⟨xS₁, yS₂⟩ = ⟨xn_1, …, xn_ν, ym_1, …, ym_μ⟩`.
pub fn glue(spec: &GluingSpec) -> Result<Construction> {
    spec.validate()?;
    let GluingSpec { s1, s2, x, y } = spec;
    let scaled = |k: i64, gens: &[i64]| -> Result<Vec<i64>> {
        gens.iter()
            .map(|&n| k.checked_mul(n).ok_or(Error::Overflow))
            .collect()
    };
    let mut gens = scaled(*x, s1.generators())?;
    gens.extend(scaled(*y, s2.generators())?);
    let semigroup = NumericalSemigroup::from_generators(&gens)?;

    let xy = x.checked_mul(*y).ok_or(Error::Overflow)?;
    let mut pf_formula = Vec::new();
    for &f in s1.pseudo_frobenius() {
        for &g in s2.pseudo_frobenius() {
            let v = x
                .checked_mul(f)
                .and_then(|a| y.checked_mul(g).and_then(|b| a.checked_add(b)))
                .and_then(|ab| ab.checked_add(xy))
                .ok_or(Error::Overflow)?;
            pf_formula.push(v);
        }
    }
    pf_formula.sort_unstable();
    pf_formula.dedup();
    Ok(Construction {
        semigroup,
        pf_formula,
    })
}

/// `T = ⟨dn_1, …, dn_{ν−1}, n_ν⟩` with `PF(T) = {df + (d−1)n_ν}`.
pub fn dilate(s: &NumericalSemigroup, d: i64) -> Result<Construction> {
    if d <= 0 {
        return Err(Error::InvalidSpec(format!("d must be positive, got {d}")));
    }
    if d == 1 {
        return Ok(Construction {
            semigroup: s.clone(),
            pf_formula: s.pseudo_frobenius().to_vec(),
        });
    }
    if s.is_naturals() {
        return Err(Error::InvalidSpec(
            "dilation needs embedding dimension at least 2".into(),
        ));
    }
    let (&last, head) = s.generators().split_last().expect("nonempty");
    if d.gcd(&last) != 1 {
        return Err(Error::NotCoprime { a: d, b: last });
    }
    let mut gens = head
        .iter()
        .map(|&n| d.checked_mul(n).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    gens.push(last);
    let semigroup = NumericalSemigroup::from_generators(&gens)?;
    let shift = (d - 1).checked_mul(last).ok_or(Error::Overflow)?;
    let mut pf_formula = s
        .pseudo_frobenius()
        .iter()
        .map(|&f| {
            d.checked_mul(f)
                .and_then(|df| df.checked_add(shift))
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    pf_formula.sort_unstable();
    Ok(Construction {
        semigroup,
        pf_formula,
    })
}

/// Parameters of `⟨a, sa + d, sa + 2d, …, sa + nd⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GasSpec {
    pub a: i64,
    pub s: i64,
    pub d: i64,
    pub n: i64,
}

impl GasSpec {
    pub fn sequence(&self) -> Result<Vec<i64>> {
        let GasSpec { a, s, d, n } = *self;
        if a <= 0 || s <= 0 || d <= 0 {
            return Err(Error::InvalidSpec(format!(
                "a, s, d must be positive (a={a}, s={s}, d={d})"
            )));
        }
        if n < 2 {
            return Err(Error::InvalidSpec(format!("n must be at least 2, got {n}")));
        }
        if a.gcd(&d) != 1 {
            return Err(Error::NotCoprime { a, b: d });
        }
        let base = s.checked_mul(a).ok_or(Error::Overflow)?;
        let mut seq = vec![a];
        for k in 1..=n {
            let term = k
                .checked_mul(d)
                .and_then(|kd| base.checked_add(kd))
                .ok_or(Error::Overflow)?;
            seq.push(term);
        }
        Ok(seq)
    }
}

/// Builds the semigroup; refuses sequences that are not a minimal system.
pub fn gas(spec: &GasSpec) -> Result<NumericalSemigroup> {
    let seq = spec.sequence()?;
    let sg = NumericalSemigroup::from_generators(&seq)?;
    if sg.generators() != seq.as_slice() {
        return Err(Error::NotMinimal(seq));
    }
    Ok(sg)
}

/// Nearly Gorenstein iff `s = 1` or `a ≡ 2 (mod n)`.
pub fn gas_ng_predicted(spec: &GasSpec) -> Result<bool> {
    gas(spec)?;
    Ok(spec.s == 1 || (spec.a - 2).rem_euclid(spec.n) == 0)
}

/// Symmetric iff `a ≡ 2 (mod n)`.
pub fn gas_symmetric_predicted(spec: &GasSpec) -> Result<bool> {
    gas(spec)?;
    Ok((spec.a - 2).rem_euclid(spec.n) == 0)
}
