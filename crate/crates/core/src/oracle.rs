//! Brute-force reference computations used by the test suites.
//!
//! Nothing here touches [`crate::semigroup`]; everything works from a raw
//! generator list or gap set by direct scanning, so it can serve as an
//! independent check of the Apéry-table machinery.

/// Membership table `0..=bound` of `⟨gens⟩` by dynamic programming.
pub fn members(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut reach = vec![false; bound as usize + 1];
    reach[0] = true;
    for z in 1..=bound {
        reach[z as usize] = gens.iter().any(|&g| g <= z && reach[(z - g) as usize]);
    }
    reach
}

/// Bound after which every integer lies in `⟨gens⟩` (gcd 1 assumed).
pub fn safe_bound(gens: &[i64]) -> i64 {
    let a = *gens.iter().min().unwrap();
    let b = *gens.iter().max().unwrap();
    a * b + b
}

pub struct BruteSemigroup {
    pub gens: Vec<i64>,
    table: Vec<bool>,
}

impl BruteSemigroup {
    pub fn new(gens: &[i64]) -> Self {
        let bound = 2 * safe_bound(gens) + 64;
        Self {
            gens: gens.to_vec(),
            table: members(gens, bound),
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        self.table.get(z as usize).copied().unwrap_or(true)
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.table.len() as i64)
            .filter(|&z| !self.contains(z))
            .collect()
    }

    pub fn frobenius(&self) -> i64 {
        self.gaps().last().copied().unwrap_or(-1)
    }

    /// Minimal generators: nonzero elements not a sum of two nonzero elements.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let top = self.frobenius() + self.gens.iter().min().unwrap() + 1;
        (1..=top)
            .filter(|&z| self.contains(z))
            .filter(|&z| !(1..z).any(|a| self.contains(a) && self.contains(z - a)))
            .collect()
    }

    /// `{f ∉ S : f + s ∈ S for all nonzero s ∈ S}`, scanning nonzero `s` up to `F + max gen`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let gaps = self.gaps();
        if gaps.is_empty() {
            return vec![-1];
        }
        let f = *gaps.last().unwrap();
        let top = f + self.gens.iter().max().unwrap() + 1;
        gaps.into_iter()
            .filter(|&g| {
                (1..=top)
                    .filter(|&s| self.contains(s))
                    .all(|s| self.contains(g + s))
            })
            .collect()
    }

    pub fn apery(&self, n: i64) -> Vec<i64> {
        (0..n)
            .map(|r| {
                (0..)
                    .map(|k| r + k * n)
                    .find(|&z| self.contains(z))
                    .unwrap()
            })
            .collect()
    }
}

/// All coefficient vectors with `Σ a_i gens_i = z`, optionally forcing
/// `a_skip = 0`, lexicographically descending.
pub fn factorizations(gens: &[i64], z: i64, skip: Option<usize>) -> Vec<Vec<u64>> {
    fn go(
        gens: &[i64],
        k: usize,
        rest: i64,
        skip: Option<usize>,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if k == gens.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = if skip == Some(k) { 0 } else { rest / gens[k] };
        for a in 0..=max {
            cur.push(a as u64);
            go(gens, k + 1, rest - a * gens[k], skip, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if z >= 0 {
        go(gens, 0, z, skip, &mut Vec::new(), &mut out);
    }
    out.sort();
    out.reverse();
    out
}

/// Every numerical semigroup of genus exactly `g`, as sorted gap sets,
/// by scanning `g`-subsets of `[1, 2g − 1]`.
pub fn gap_sets_of_genus(g: usize) -> Vec<Vec<i64>> {
    if g == 0 {
        return vec![Vec::new()];
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(g);
    fn rec(start: usize, top: usize, g: usize, pick: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pick.len() == g {
            if closed_complement(pick) {
                out.push(pick.clone());
            }
            return;
        }
        for x in start..=top {
            if top - x + 1 < g - pick.len() {
                break;
            }
            pick.push(x as i64);
            rec(x + 1, top, g, pick, out);
            pick.pop();
        }
    }
    rec(1, top, g, &mut pick, &mut out);
    out
}

fn closed_complement(gaps: &[i64]) -> bool {
    let f = *gaps.last().unwrap();
    let in_s = |z: i64| z >= 0 && gaps.binary_search(&z).is_err();
    (1..=f)
        .filter(|&a| in_s(a))
        .all(|a| (a..=f).filter(|&b| in_s(b)).all(|b| in_s(a + b)))
}

/// Minimal generators of the semigroup with the given gap set.
pub fn generators_from_gaps(gaps: &[i64]) -> Vec<i64> {
    let f = gaps.last().copied().unwrap_or(-1);
    let in_s = |z: i64| z >= 0 && gaps.binary_search(&z).is_err();
    let m = (1..).find(|&z| in_s(z)).unwrap();
    (1..=f + m + 1)
        .filter(|&z| in_s(z))
        .filter(|&z| !(1..z).any(|a| in_s(a) && in_s(z - a)))
        .collect()
}

/// The semigroups of genus at most `g`, as minimal generator lists.
pub fn all_up_to_genus(g: usize) -> Vec<Vec<i64>> {
    (0..=g)
        .flat_map(gap_sets_of_genus)
        .map(|gaps| generators_from_gaps(&gaps))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_sanity() {
        let b = BruteSemigroup::new(&[4, 5, 11]);
        assert_eq!(b.gaps(), vec![1, 2, 3, 6, 7]);
        assert_eq!(b.pseudo_frobenius(), vec![6, 7]);
        assert_eq!(b.minimal_generators(), vec![4, 5, 11]);
        assert_eq!(b.apery(4), vec![0, 5, 10, 11]);
        assert_eq!(factorizations(&[4, 5, 11], 20, None).len(), 3);
        let counts: Vec<usize> = (0..=6).map(|g| gap_sets_of_genus(g).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 7, 12, 23]);
        assert_eq!(generators_from_gaps(&[]), vec![1]);
    }
}
