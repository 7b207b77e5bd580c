use std::collections::BTreeMap;
use std::io::{self, Write};
use std::time::Instant;

use serde::Serialize;

use super::{par_fold, Theorem, TreeParams};
use crate::error::Result;
use crate::nearly;
use crate::semigroup::NumericalSemigroup;

/// Notable (non-violating) findings kept verbatim in a report; the total is
/// always counted.
pub const NOTABLE_LIMIT: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub generators: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    pub flags: Vec<String>,
    pub reason: String,
}

impl Witness {
    fn new(s: &NumericalSemigroup, reason: String) -> Self {
        Self {
            generators: s.generators().to_vec(),
            pseudo_frobenius: s.pseudo_frobenius().to_vec(),
            flags: nearly::hierarchy(s)
                .flag_names()
                .into_iter()
                .map(String::from)
                .collect(),
            reason,
        }
    }

    /// `generators;PF;flags` with comma-separated fields.
    pub fn csv_row(&self) -> String {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        format!(
            "{};{};{}",
            join(&self.generators),
            join(&self.pseudo_frobenius),
            self.flags.join(",")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub max_genus: u32,
    pub scanned: u64,
    pub matched_hypothesis: u64,
    pub violations: Vec<Witness>,
    pub notable: Vec<Witness>,
    pub notable_total: u64,
    pub counters: BTreeMap<String, u64>,
    pub elapsed_ms: u128,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Partial {
    scanned: u64,
    matched: u64,
    violations: Vec<Witness>,
    notable: Vec<Witness>,
    notable_total: u64,
    counters: BTreeMap<String, u64>,
}

impl Partial {
    fn absorb(&mut self, theorem: Theorem, s: &NumericalSemigroup) {
        self.scanned += 1;
        let check = theorem.check(s);
        if !check.matched {
            return;
        }
        self.matched += 1;
        for tag in check.tags {
            *self.counters.entry(tag).or_default() += 1;
        }
        if let Some(reason) = check.violation {
            self.violations.push(Witness::new(s, reason));
        }
        if let Some(note) = check.notable {
            self.notable_total += 1;
            self.notable.push(Witness::new(s, note));
            if self.notable.len() > 2 * NOTABLE_LIMIT {
                trim(&mut self.notable);
            }
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.scanned += other.scanned;
        self.matched += other.matched;
        self.violations.extend(other.violations);
        self.notable.extend(other.notable);
        self.notable_total += other.notable_total;
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
        if self.notable.len() > 2 * NOTABLE_LIMIT {
            trim(&mut self.notable);
        }
        self
    }
}

// Keeps the NOTABLE_LIMIT smallest witnesses under (multiplicity, generators)
// order, so the retained subset does not depend on scheduling.
fn trim(list: &mut Vec<Witness>) {
    list.sort_by(|a, b| {
        (a.generators.len(), &a.generators).cmp(&(b.generators.len(), &b.generators))
    });
    list.truncate(NOTABLE_LIMIT);
}

/// Runs `theorem` over every semigroup of genus at most `max_genus`.
pub fn sweep(theorem: Theorem, max_genus: u32, threads: usize) -> Result<TheoremReport> {
    let start = Instant::now();
    let params = TreeParams::new(max_genus)
        .with_filter(theorem.filter())
        .with_threads(threads);
    let mut p = par_fold(
        &params,
        Partial::default,
        |acc, s| acc.absorb(theorem, s),
        Partial::merge,
    )?;
    p.violations.sort();
    trim(&mut p.notable);
    Ok(TheoremReport {
        theorem_id: theorem.id().to_string(),
        max_genus,
        scanned: p.scanned,
        matched_hypothesis: p.matched,
        violations: p.violations,
        notable: p.notable,
        notable_total: p.notable_total,
        counters: p.counters,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Re-checks a violation witness in isolation.
pub fn recheck(theorem: Theorem, witness: &Witness) -> bool {
    NumericalSemigroup::from_generators(&witness.generators)
        .map(|s| theorem.check(&s).violation.is_some())
        .unwrap_or(false)
}

/// Writes violations then notable findings as `generators;PF;flags` rows.
pub fn write_witness_csv<W: Write>(report: &TheoremReport, mut out: W) -> io::Result<()> {
    writeln!(out, "generators;PF;flags")?;
    for w in report.violations.iter().chain(&report.notable) {
        writeln!(out, "{}", w.csv_row())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_rows() {
        let s = NumericalSemigroup::from_generators(&[4, 5, 11]).unwrap();
        let w = Witness::new(&s, String::new());
        assert_eq!(w.csv_row(), "4,5,11;6,7;ng,cr");
    }

    #[test]
    fn small_sweep_is_deterministic() {
        let a = sweep(Theorem::TypeVsEmbdim, 12, 1).unwrap();
        let b = sweep(Theorem::TypeVsEmbdim, 12, 4).unwrap();
        assert_eq!(
            (
                a.scanned,
                a.matched_hypothesis,
                &a.violations,
                &a.notable,
                &a.counters
            ),
            (
                b.scanned,
                b.matched_hypothesis,
                &b.violations,
                &b.notable,
                &b.counters
            )
        );
        let mut buf = Vec::new();
        write_witness_csv(&a, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("generators;PF;flags\n"));
        assert_eq!(
            text.lines().count(),
            1 + a.violations.len() + a.notable.len()
        );
    }
}
