use std::fs::File;
use std::io::BufWriter;

use ngsemi::constructions::{self, GasSpec, GluingSpec};
use ngsemi::enumeration::{self, Theorem, TheoremReport};
use ngsemi::nearly::{self, NgStructure, WilfCheck};
use ngsemi::rfmat::{self, RfKind};
use ngsemi::{HierarchyReport, NgVector, NumericalSemigroup};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{parse_int_list, CliError, Command, Construct, Outcome, RfArgs, VerifyArgs};

type CmdResult = Result<Outcome, CliError>;

pub fn execute(command: &Command) -> CmdResult {
    match command {
        Command::Analyze(g) => analyze(&parse_int_list(&g.generators)?),
        Command::NgVectors { gens, limit } => {
            ng_vectors(&parse_int_list(&gens.generators)?, *limit)
        }
        Command::Rf(args) => rf(args),
        Command::Construct(c) => construct(c),
        Command::Verify(args) => verify(args),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("result serializes")
}

fn semigroup(gens: &[i64], warnings: &mut Vec<String>) -> Result<NumericalSemigroup, CliError> {
    let s = NumericalSemigroup::from_generators(gens)?;
    let mut given = gens.to_vec();
    given.sort_unstable();
    given.dedup();
    if given != s.generators() {
        warnings.push(format!("input reduced to minimal generators {s}"));
    }
    Ok(s)
}

#[derive(Serialize)]
struct AnalyzeResult<'a> {
    generators: &'a [i64],
    multiplicity: i64,
    embedding_dimension: usize,
    frobenius: i64,
    conductor: i64,
    genus: i64,
    #[serde(rename = "type")]
    semigroup_type: usize,
    gaps: Vec<i64>,
    pseudo_frobenius: &'a [i64],
    apery: &'a [i64],
    hierarchy: HierarchyReport,
    wilf: WilfCheck,
}

fn analyze(gens: &[i64]) -> CmdResult {
    let mut warnings = Vec::new();
    let s = semigroup(gens, &mut warnings)?;
    let result = AnalyzeResult {
        generators: s.generators(),
        multiplicity: s.multiplicity(),
        embedding_dimension: s.embedding_dimension(),
        frobenius: s.frobenius(),
        conductor: s.conductor(),
        genus: s.genus(),
        semigroup_type: s.semigroup_type(),
        gaps: s.gaps(),
        pseudo_frobenius: s.pseudo_frobenius(),
        apery: s.apery(),
        hierarchy: nearly::hierarchy(&s),
        wilf: nearly::wilf_check(&s),
    };
    Ok(Outcome {
        command: "analyze",
        input: json!({ "generators": gens }),
        result: to_value(&result),
        warnings,
        violation: false,
    })
}

/// NG-vector structure with 1-based positions, as printed.
#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum StructureOut {
    AllFrobenius,
    Witness {
        i: usize,
        l: usize,
        relation: String,
    },
    FirstEntryNotFrobenius,
    NoWitness {
        i: usize,
    },
}

impl From<NgStructure> for StructureOut {
    fn from(s: NgStructure) -> Self {
        match s {
            NgStructure::AllFrobenius => StructureOut::AllFrobenius,
            NgStructure::Witness { i, l } => StructureOut::Witness {
                i: i + 1,
                l: l + 1,
                relation: format!("f_{0} = F - n_{0} + n_{1}", i + 1, l + 1),
            },
            NgStructure::FirstEntryNotFrobenius => StructureOut::FirstEntryNotFrobenius,
            NgStructure::NoWitness { i } => StructureOut::NoWitness { i: i + 1 },
        }
    }
}

#[derive(Serialize)]
struct AnnotatedVector {
    vector: NgVector,
    structure: StructureOut,
}

/// The first `limit` vectors of the lexicographic product of `lists`.
fn first_vectors(lists: &[Vec<i64>], limit: usize) -> Vec<NgVector> {
    let mut out = Vec::new();
    if lists.iter().any(|l| l.is_empty()) {
        return out;
    }
    let mut idx = vec![0usize; lists.len()];
    while out.len() < limit {
        out.push(NgVector(
            idx.iter().zip(lists).map(|(&k, l)| l[k]).collect(),
        ));
        let mut pos = lists.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
    out
}

fn ng_vectors(gens: &[i64], limit: usize) -> CmdResult {
    let mut warnings = Vec::new();
    let s = semigroup(gens, &mut warnings)?;
    let candidates = nearly::all_ng_candidates(&s);
    let count = nearly::ng_vector_count(&s);
    let vectors = first_vectors(&candidates, limit);
    if (vectors.len() as u64) < count {
        warnings.push(format!("showing {} of {count} NG-vectors", vectors.len()));
    }
    let annotated = vectors
        .into_iter()
        .map(|v| {
            let structure = nearly::verify_ng_vector_structure(&s, &v)?.into();
            Ok(AnnotatedVector {
                vector: v,
                structure,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let result = json!({
        "generators": s.generators(),
        "frobenius": s.frobenius(),
        "pseudo_frobenius": s.pseudo_frobenius(),
        "nearly_gorenstein": nearly::is_nearly_gorenstein(&s),
        "almost_symmetric": nearly::is_almost_symmetric(&s),
        "candidates": candidates,
        "count": count,
        "vectors": annotated,
    });
    Ok(Outcome {
        command: "ng-vectors",
        input: json!({ "generators": gens, "limit": limit }),
        result,
        warnings,
        violation: false,
    })
}

fn rf(args: &RfArgs) -> CmdResult {
    let gens = parse_int_list(&args.gens.generators)?;
    let mut warnings = Vec::new();
    let s = semigroup(&gens, &mut warnings)?;
    let plus = rfmat::rf_plus_matrices_with_cap(&s, args.f, args.limit)?;
    let mut result = json!({
        "generators": s.generators(),
        "pseudo_frobenius": s.pseudo_frobenius(),
        "f": args.f,
        "plus": {
            "count": plus.len(),
            "matrices": plus.iter().map(|m| &m.entries).collect::<Vec<_>>(),
        },
    });
    let mut violation = false;
    let vector = match &args.ng_vector {
        Some(tokens) if args.minus => Some(NgVector(parse_int_list(tokens)?)),
        _ => None,
    };
    if let Some(v) = &vector {
        let minus = rfmat::rf_minus_matrices_with_cap(&s, v, args.f, args.limit)?;
        let mut pairs = 0u64;
        let mut failures = Vec::new();
        for (a_idx, a) in plus.iter().enumerate() {
            for (b_idx, b) in minus.iter().enumerate() {
                pairs += 1;
                if !rfmat::check_coppie(a, b)? {
                    failures.push(json!({ "plus": a_idx + 1, "minus": b_idx + 1 }));
                }
            }
        }
        violation = !failures.is_empty();
        result["minus"] = json!({
            "ng_vector": v,
            "count": minus.len(),
            "matrices": minus.iter().map(|m| &m.entries).collect::<Vec<_>>(),
        });
        result["coppie"] = json!({
            "pairs": pairs,
            "holds": failures.is_empty(),
            "failures": failures,
        });
    }
    debug_assert!(plus
        .iter()
        .all(|m| m.kind == RfKind::Plus && m.satisfies_row_identities(&s)));
    Ok(Outcome {
        command: "rf",
        input: json!({
            "generators": gens,
            "f": args.f,
            "minus": args.minus,
            "ng_vector": vector,
            "limit": args.limit,
        }),
        result,
        warnings,
        violation,
    })
}

fn construct(c: &Construct) -> CmdResult {
    let mut warnings = Vec::new();
    let (input, result, violation) = match c {
        Construct::Glue { s1, s2, x, y } => {
            let g1 = parse_int_list(std::slice::from_ref(s1))?;
            let g2 = parse_int_list(std::slice::from_ref(s2))?;
            let spec = GluingSpec {
                s1: semigroup(&g1, &mut warnings)?,
                s2: semigroup(&g2, &mut warnings)?,
                x: *x,
                y: *y,
            };
            let built = constructions::glue(&spec)?;
            let both_symmetric = nearly::is_symmetric(&spec.s1) && nearly::is_symmetric(&spec.s2);
            let h = nearly::hierarchy(&built.semigroup);
            // symmetric iff both parts are; otherwise never nearly Gorenstein
            let violation = !built.formula_matches()
                || h.symmetric != both_symmetric
                || (!both_symmetric && h.nearly_gorenstein);
            let result = json!({
                "generators": built.semigroup.generators(),
                "pf_formula": built.pf_formula,
                "pf_direct": built.semigroup.pseudo_frobenius(),
                "formula_matches": built.formula_matches(),
                "components_symmetric": [nearly::is_symmetric(&spec.s1), nearly::is_symmetric(&spec.s2)],
                "predicted_symmetric": both_symmetric,
                "hierarchy": h,
            });
            let input = json!({ "kind": "glue", "s1": g1, "s2": g2, "x": x, "y": y });
            (input, result, violation)
        }
        Construct::Dilate { gens, d } => {
            let g = parse_int_list(&gens.generators)?;
            let s = semigroup(&g, &mut warnings)?;
            let built = constructions::dilate(&s, *d)?;
            let h = nearly::hierarchy(&built.semigroup);
            // a nontrivial dilation is nearly Gorenstein only when it is symmetric
            let predicted_ng = if *d == 1 {
                nearly::is_nearly_gorenstein(&s)
            } else {
                nearly::is_symmetric(&s)
            };
            let violation = !built.formula_matches() || h.nearly_gorenstein != predicted_ng;
            let result = json!({
                "generators": built.semigroup.generators(),
                "frobenius": built.semigroup.frobenius(),
                "pf_formula": built.pf_formula,
                "pf_direct": built.semigroup.pseudo_frobenius(),
                "formula_matches": built.formula_matches(),
                "predicted_nearly_gorenstein": predicted_ng,
                "hierarchy": h,
            });
            (
                json!({ "kind": "dilate", "generators": g, "d": d }),
                result,
                violation,
            )
        }
        Construct::Gas { a, s, d, n } => {
            let spec = GasSpec {
                a: *a,
                s: *s,
                d: *d,
                n: *n,
            };
            let sg = constructions::gas(&spec)?;
            let predicted_ng = constructions::gas_ng_predicted(&spec)?;
            let predicted_sym = constructions::gas_symmetric_predicted(&spec)?;
            let h = nearly::hierarchy(&sg);
            let violation = predicted_ng != h.nearly_gorenstein || predicted_sym != h.symmetric;
            let result = json!({
                "generators": sg.generators(),
                "pseudo_frobenius": sg.pseudo_frobenius(),
                "predicted_nearly_gorenstein": predicted_ng,
                "actual_nearly_gorenstein": h.nearly_gorenstein,
                "predicted_symmetric": predicted_sym,
                "actual_symmetric": h.symmetric,
                "hierarchy": h,
            });
            (json!({ "kind": "gas", "spec": spec }), result, violation)
        }
    };
    if violation {
        warnings.push("construction disagrees with its closed-form prediction".into());
    }
    Ok(Outcome {
        command: "construct",
        input,
        result,
        warnings,
        violation,
    })
}

fn default_genus(t: Theorem) -> u32 {
    match t {
        Theorem::TypeBoundDim4 | Theorem::CanonicalReductionDim4 => 26,
        _ => 22,
    }
}

fn verify(args: &VerifyArgs) -> CmdResult {
    let theorem: Theorem = args.theorem.parse()?;
    let max_genus = args.max_genus.unwrap_or_else(|| default_genus(theorem));
    let report: TheoremReport = enumeration::sweep(theorem, max_genus, args.threads)?;
    let mut warnings = Vec::new();
    for w in &report.violations {
        if !enumeration::recheck(theorem, w) {
            warnings.push(format!(
                "witness {:?} did not reproduce in isolation",
                w.generators
            ));
        }
    }
    if report.notable_total > report.notable.len() as u64 {
        warnings.push(format!(
            "{} notable semigroups found, {} listed",
            report.notable_total,
            report.notable.len()
        ));
    }
    if let Some(path) = &args.witness_csv {
        let io_err = |source| CliError::Io {
            path: path.clone(),
            source,
        };
        let file = File::create(path).map_err(io_err)?;
        enumeration::write_witness_csv(&report, BufWriter::new(file)).map_err(io_err)?;
    }
    let mut result = to_value(&report);
    result["open_question"] = json!(theorem.is_open_question());
    result["passed"] = json!(report.passed());
    Ok(Outcome {
        command: "verify",
        input: json!({
            "theorem": theorem.id(),
            "max_genus": max_genus,
            "threads": args.threads,
            "witness_csv": args.witness_csv,
        }),
        result,
        warnings,
        violation: !report.passed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_prefix() {
        let lists = vec![vec![7], vec![6, 7], vec![6, 7]];
        let all = first_vectors(&lists, 10);
        assert_eq!(all.len(), 4);
        assert_eq!(all[0].0, vec![7, 6, 6]);
        assert_eq!(all[3].0, vec![7, 7, 7]);
        assert_eq!(first_vectors(&lists, 2).len(), 2);
        assert!(first_vectors(&[vec![1], vec![]], 5).is_empty());
    }
}
