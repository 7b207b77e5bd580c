//! Per-semigroup checks for the sweeps. Each check decides whether `S`
//! satisfies the hypothesis of a statement and, if so, whether the
//! conclusion holds.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use super::Filter;
use crate::error::Error;
use crate::ideals;
use crate::nearly::{self, NgStructure, NgVector};
use crate::semigroup::NumericalSemigroup;

// NG-vector enumeration inside a sweep is skipped above this count.
const VECTOR_ENUMERATION_LIMIT: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// ν = 4 and nearly Gorenstein ⇒ t ≤ 3, with the two PF shapes and the
    /// dichotomies for the special NG-vector patterns.
    TypeBoundDim4,
    /// Nearly Gorenstein and not symmetric ⇒ every ν−1 generators are coprime.
    Coprimality,
    /// symmetric ⇒ almost symmetric ⇒ nearly Gorenstein ⇒ canonical reduction,
    /// plus agreement of the trace-ideal and NG-vector characterizations.
    Hierarchy,
    /// Every NG-vector repeats an entry; a distinct `(f_1, …, f_{ν−1})` forces
    /// `PF(S) = {f_1, …, f_{ν−1}}`.
    DistinctCorollary,
    /// Open question: ν = 5 nearly Gorenstein ⇒ t ≤ 5?
    TypeBoundDim5,
    /// Open question: how large can t be relative to ν?
    TypeVsEmbdim,
    /// Open question: ν = 4 with canonical reduction ⇒ t ≤ 4?
    CanonicalReductionDim4,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::TypeBoundDim4,
        Theorem::Coprimality,
        Theorem::Hierarchy,
        Theorem::DistinctCorollary,
        Theorem::TypeBoundDim5,
        Theorem::TypeVsEmbdim,
        Theorem::CanonicalReductionDim4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::TypeBoundDim4 => "type-bound-dim4",
            Theorem::Coprimality => "coprimality",
            Theorem::Hierarchy => "hierarchy",
            Theorem::DistinctCorollary => "distinct-corollary",
            Theorem::TypeBoundDim5 => "type-bound-dim5",
            Theorem::TypeVsEmbdim => "type-vs-embdim",
            Theorem::CanonicalReductionDim4 => "canonical-reduction-dim4",
        }
    }

    pub fn is_open_question(self) -> bool {
        matches!(
            self,
            Theorem::TypeBoundDim5 | Theorem::TypeVsEmbdim | Theorem::CanonicalReductionDim4
        )
    }

    /// Embedding-dimension restriction of the hypothesis.
    pub fn filter(self) -> Filter {
        match self {
            Theorem::TypeBoundDim4 | Theorem::CanonicalReductionDim4 => {
                Filter::embedding_dimension(4)
            }
            Theorem::TypeBoundDim5 => Filter::embedding_dimension(5),
            Theorem::Coprimality => Filter {
                min_embedding_dimension: Some(3),
                ..Filter::default()
            },
            Theorem::DistinctCorollary | Theorem::TypeVsEmbdim => Filter {
                min_embedding_dimension: Some(2),
                ..Filter::default()
            },
            Theorem::Hierarchy => Filter::default(),
        }
    }

    pub fn check(self, s: &NumericalSemigroup) -> Check {
        if !self.filter().accepts(s) {
            return Check::default();
        }
        match self {
            Theorem::TypeBoundDim4 => check_type_bound_dim4(s),
            Theorem::Coprimality => check_coprimality(s),
            Theorem::Hierarchy => check_hierarchy(s),
            Theorem::DistinctCorollary => check_distinct(s),
            Theorem::TypeBoundDim5 => check_type_bound_dim5(s),
            Theorem::TypeVsEmbdim => check_type_vs_embdim(s),
            Theorem::CanonicalReductionDim4 => check_canonical_reduction_dim4(s),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('_', "-").to_ascii_lowercase();
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == norm)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown theorem id {s:?}")))
    }
}

/// Outcome of checking one semigroup.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Check {
    pub matched: bool,
    pub violation: Option<String>,
    pub notable: Option<String>,
    /// Counter keys to bump in the report.
    pub tags: Vec<String>,
}

impl Check {
    fn matched() -> Self {
        Self {
            matched: true,
            ..Self::default()
        }
    }

    fn violate(&mut self, reason: String) {
        match &mut self.violation {
            Some(v) => {
                v.push_str("; ");
                v.push_str(&reason);
            }
            None => self.violation = Some(reason),
        }
    }

    fn tag(&mut self, t: impl Into<String>) {
        self.tags.push(t.into());
    }
}

/// Which pseudo-Frobenius pattern a 4-generated nearly Gorenstein semigroup
/// exhibits. Indices are 0-based generator positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Dim4Shape {
    AlmostSymmetric,
    /// `PF = {F, F − n_i + n_l}`.
    Two {
        i: usize,
        l: usize,
    },
    /// `PF = {F, F − n_i + n_l, λn_k − n_j}`.
    Three {
        i: usize,
        l: usize,
        j: usize,
        k: usize,
        lambda: i64,
    },
}

/// Matches `PF(S)` against the admissible shapes for some NG-vector.
/// `None` when `S` is not a 4-generated nearly Gorenstein semigroup or no
/// NG-vector yields a matching shape.
pub fn dim4_shape(s: &NumericalSemigroup) -> Option<Dim4Shape> {
    if s.embedding_dimension() != 4 || !nearly::is_nearly_gorenstein(s) {
        return None;
    }
    if nearly::is_almost_symmetric(s) {
        return Some(Dim4Shape::AlmostSymmetric);
    }
    let vectors = nearly::ng_vectors(s).ok()?;
    vectors.iter().find_map(|v| shape_for_vector(s, v))
}

fn shape_for_vector(s: &NumericalSemigroup, v: &NgVector) -> Option<Dim4Shape> {
    let NgStructure::Witness { i, l } = nearly::ng_structure(s, v) else {
        return None;
    };
    let frob = s.frobenius();
    let fi = v.0[i];
    let gens = s.generators();
    let pf = s.pseudo_frobenius();
    let rest: Vec<i64> = pf
        .iter()
        .copied()
        .filter(|&f| f != frob && f != fi)
        .collect();
    match rest.as_slice() {
        [] => Some(Dim4Shape::Two { i, l }),
        [g] => {
            let others: Vec<usize> = (0..4).filter(|&x| x != i && x != l).collect();
            [(others[0], others[1]), (others[1], others[0])]
                .into_iter()
                .find_map(|(j, k)| {
                    let (lambda, r) = (g + gens[j]).div_rem(&gens[k]);
                    (r == 0 && lambda >= 0).then_some(Dim4Shape::Three { i, l, j, k, lambda })
                })
        }
        _ => None,
    }
}

fn check_type_bound_dim4(s: &NumericalSemigroup) -> Check {
    if !nearly::is_nearly_gorenstein(s) {
        return Check::default();
    }
    let mut c = Check::matched();
    let t = s.semigroup_type();
    c.tag(format!("type={t}"));
    if t > 3 {
        c.violate(format!("type {t} exceeds 3"));
    }
    let frob = s.frobenius();
    let pf = s.pseudo_frobenius();
    let vectors = match nearly::ng_vectors(s) {
        Ok(v) => v,
        Err(e) => {
            c.violate(format!("NG-vector enumeration failed: {e}"));
            return c;
        }
    };

    for v in &vectors {
        match nearly::ng_structure(s, v) {
            NgStructure::FirstEntryNotFrobenius => c.violate(format!("{v}: f_1 != F(S)")),
            NgStructure::NoWitness { i } => {
                c.violate(format!("{v}: no l < {} with f_i = F - n_i + n_l", i + 1))
            }
            _ => {}
        }
        let e = &v.0;
        // first dichotomy: f_2 = f_3 = f_4 != F
        if e[1] == e[2] && e[2] == e[3] && e[1] != frob {
            let f2 = e[1];
            let two = pf == [f2, frob];
            let three = f2 % 2 == 0 && pf == [f2 / 2, f2, frob];
            if two || three {
                c.tag("dichotomy1");
            } else {
                c.violate(format!("{v}: f_2=f_3=f_4 but PF={pf:?}"));
            }
        }
        // second dichotomy: F = f_i = f_j != f_k for {i, j, k} = {2, 3, 4}
        for k in 1..4 {
            let others: Vec<usize> = (1..4).filter(|&x| x != k).collect();
            if e[others[0]] == frob && e[others[1]] == frob && e[k] != frob {
                c.tag("dichotomy2");
                let almost = nearly::is_almost_symmetric(s);
                for &f in pf.iter().filter(|&&f| f != e[k] && f != frob) {
                    if 2 * f != frob && !almost {
                        c.violate(format!(
                            "{v}: extra PF {f} is neither F/2 nor almost symmetric"
                        ));
                    }
                }
            }
        }
    }

    match dim4_shape(s) {
        Some(Dim4Shape::AlmostSymmetric) => c.tag("almost-symmetric"),
        Some(Dim4Shape::Two { .. }) => c.tag("shape-two"),
        Some(Dim4Shape::Three { .. }) => c.tag("shape-three"),
        None => c.violate(format!("PF={pf:?} matches no admissible shape")),
    }
    c
}

fn check_coprimality(s: &NumericalSemigroup) -> Check {
    if nearly::is_symmetric(s) || !nearly::is_nearly_gorenstein(s) {
        return Check::default();
    }
    let mut c = Check::matched();
    let gens = s.generators();
    for skip in 0..gens.len() {
        let g = gens
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .fold(0i64, |acc, (_, &n)| acc.gcd(&n));
        if g != 1 {
            c.violate(format!("gcd without n_{} is {g}", skip + 1));
        }
    }
    c
}

fn check_hierarchy(s: &NumericalSemigroup) -> Check {
    let mut c = Check::matched();
    let h = nearly::hierarchy(s);
    for name in h.flag_names() {
        c.tag(name);
    }
    if !h.implications_hold() {
        c.violate(format!("implication chain broken: {:?}", h.flag_names()));
    }
    if ideals::ng_by_trace(s) != h.nearly_gorenstein {
        c.violate("trace-ideal and NG-vector characterizations disagree".into());
    }
    let canonical_is_s = ideals::canonical_ideal(s) == ideals::principal(s);
    if canonical_is_s != h.symmetric {
        c.violate("K(S) = S does not match symmetry".into());
    }
    if h.canonical_reduction && !h.nearly_gorenstein {
        c.tag("cr-not-ng");
    }
    c
}

fn check_distinct(s: &NumericalSemigroup) -> Check {
    if !nearly::is_nearly_gorenstein(s) {
        return Check::default();
    }
    let mut c = Check::matched();
    let nu = s.embedding_dimension();
    let t = s.semigroup_type();
    if let Some(v) = nearly::ng_vector_with_distinct_prefix(s, nu) {
        c.violate(format!("NG-vector {v} has pairwise distinct entries"));
    }
    if let Some(v) = nearly::ng_vector_with_distinct_prefix(s, nu - 1) {
        c.tag("distinct-prefix");
        if t != nu - 1 {
            c.violate(format!(
                "NG-vector {v} has distinct f_1..f_{} but t = {t}",
                nu - 1
            ));
        }
    }
    // f_1 − f_j = n_j − n_1 along any distinct prefix
    if nearly::ng_vector_count(s) <= VECTOR_ENUMERATION_LIMIT {
        c.tag("prefix-differences-checked");
        let gens = s.generators();
        for v in nearly::ng_vectors(s).unwrap_or_default() {
            let e = &v.0;
            let mut seen = Vec::with_capacity(nu);
            for j in 0..nu {
                if seen.contains(&e[j]) {
                    break;
                }
                seen.push(e[j]);
                if e[0] - e[j] != gens[j] - gens[0] {
                    c.violate(format!("{v}: f_1 - f_{} != n_{} - n_1", j + 1, j + 1));
                }
            }
        }
    } else {
        c.tag("prefix-differences-skipped");
    }
    c
}

fn check_type_bound_dim5(s: &NumericalSemigroup) -> Check {
    if !nearly::is_nearly_gorenstein(s) {
        return Check::default();
    }
    let mut c = Check::matched();
    let t = s.semigroup_type();
    c.tag(format!("type={t}"));
    if t > 5 {
        c.violate(format!("type {t} exceeds 5"));
    } else if t == 5 && !nearly::is_almost_symmetric(s) {
        c.violate("type 5 without almost symmetry".into());
    } else if t == 5 {
        c.notable = Some("type 5, almost symmetric".into());
    }
    c
}

fn check_type_vs_embdim(s: &NumericalSemigroup) -> Check {
    if !nearly::is_nearly_gorenstein(s) {
        return Check::default();
    }
    let mut c = Check::matched();
    let t = s.semigroup_type();
    let nu = s.embedding_dimension();
    c.tag(format!("nu={nu}"));
    if t >= 2 * nu {
        c.violate(format!("type {t} >= 2 * embedding dimension {nu}"));
    } else if t + 1 >= 2 * nu {
        c.tag("frontier");
        c.notable = Some(format!("type {t} = 2 * {nu} - 1"));
    } else if t > nu {
        c.tag("type-exceeds-embdim");
        c.notable = Some(format!("type {t} exceeds embedding dimension {nu}"));
    }
    c
}

fn check_canonical_reduction_dim4(s: &NumericalSemigroup) -> Check {
    if !nearly::has_canonical_reduction(s) {
        return Check::default();
    }
    let mut c = Check::matched();
    let t = s.semigroup_type();
    c.tag(format!("type={t}"));
    if t > 4 {
        c.violate(format!("type {t} exceeds 4"));
    } else if t == 4 {
        c.notable = Some("type 4 with canonical reduction".into());
    }
    c
}
