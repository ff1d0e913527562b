//! Command handlers. Each writes its output and returns the exit status.

use std::io::Write;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde_json::{json, Value};
use simsun_core::bijection::{self, Composition};
use simsun_core::enumeration::{self, Class, ClassSpec};
use simsun_core::motzkin::{MotzkinPath, Step};
use simsun_core::sequences::SequenceName;
use simsun_core::tree::{canonicalize, IncreasingTree, LabeledTree, OrderedTree};
use simsun_core::verify;
use simsun_core::{Pattern, Permutation};

use crate::error::CliError;

type Out<'a> = &'a mut dyn Write;

fn parse<T>(what: &str, input: &str) -> Result<T, CliError>
where
    T: FromStr<Err = simsun_core::Error>,
{
    input
        .parse()
        .map_err(|e| CliError::Usage(format!("cannot read {what} {input:?}: {e}")))
}

/// Trees may be given with children in either order; they are put in
/// canonical form first.
fn parse_tree(input: &str) -> Result<IncreasingTree, CliError> {
    let raw: LabeledTree = parse("tree", input)?;
    canonicalize(&raw).map_err(|e| CliError::Usage(format!("cannot read tree {input:?}: {e}")))
}

fn domain(e: simsun_core::Error) -> CliError {
    CliError::Domain(e.to_string())
}

/// The image of `input` under the named map, in its text format.
pub fn apply_map(name: &str, input: &str) -> Result<String, CliError> {
    let perm = || parse::<Permutation>("permutation", input);
    let path = || parse::<MotzkinPath>("path", input);
    let comp = || parse::<Composition>("composition", input);
    let out = match name {
        "phi" => bijection::phi(&parse_tree(input)?).to_string(),
        "phi-inv" => bijection::phi_inverse(&perm()?).map_err(domain)?.to_string(),
        "chi" => bijection::chi(&parse::<OrderedTree>("ordered tree", input)?).to_string(),
        "chi-inv" => bijection::chi_inverse(&path()?).map_err(domain)?.to_string(),
        "psi" => bijection::psi(&parse_tree(input)?).map_err(domain)?.to_string(),
        "psi-inv" => bijection::psi_inverse(&parse_tree(input)?)
            .map_err(domain)?
            .to_string(),
        "gamma" => bijection::gamma(&perm()?).to_string(),
        "rho" => bijection::rho(&comp()?).to_string(),
        "rho-inv" => bijection::rho_inverse(&perm()?).map_err(domain)?.to_string(),
        "varrho" => bijection::varrho(&comp()?).to_string(),
        "zeta" => bijection::zeta(&comp()?).map_err(domain)?.to_string(),
        "rs213-to-motzkin" => bijection::rs213_to_motzkin(&perm()?)
            .map_err(domain)?
            .to_string(),
        "rs231-to-motzkin" => bijection::rs231_to_motzkin(&perm()?)
            .map_err(domain)?
            .to_string(),
        "motzkin-to-rs213" => bijection::motzkin_to_rs213(&path()?)
            .map_err(domain)?
            .to_string(),
        "motzkin-to-rs231" => bijection::motzkin_to_rs231(&path()?)
            .map_err(domain)?
            .to_string(),
        _ => return Err(CliError::Usage(format!("unknown map {name:?}"))),
    };
    Ok(out)
}

pub fn map(name: &str, input: &str, json: bool, out: Out) -> Result<i32, CliError> {
    let image = apply_map(name, input)?;
    if json {
        writeln!(out, "{}", json!({ "map": name, "input": input, "output": image }))?;
    } else {
        writeln!(out, "{image}")?;
    }
    Ok(0)
}

/// Result of a predicate: whether it holds, and evidence either way.
pub struct Verdict {
    pub holds: bool,
    pub witness: Value,
    pub note: Option<String>,
}

impl Verdict {
    fn plain(holds: bool) -> Self {
        Verdict {
            holds,
            witness: Value::Null,
            note: None,
        }
    }
}

pub fn evaluate(predicate: &str, input: &str, pattern: Option<&str>) -> Result<Verdict, CliError> {
    let perm = || parse::<Permutation>("permutation", input);
    let path = || parse::<MotzkinPath>("path", input);
    let v = match predicate {
        "simsun" => match perm()?.simsun_witness() {
            None => Verdict::plain(true),
            Some(w) => Verdict {
                holds: false,
                witness: json!({ "k": w.k, "triple": w.triple }),
                note: Some(w.to_string()),
            },
        },
        "double-simsun" => {
            let s = perm()?;
            let failing = s
                .simsun_witness()
                .map(|w| ("permutation", w))
                .or_else(|| s.inverse().simsun_witness().map(|w| ("inverse", w)));
            match failing {
                None => Verdict::plain(true),
                Some((which, w)) => Verdict {
                    holds: false,
                    witness: json!({ "failing": which, "k": w.k, "triple": w.triple }),
                    note: Some(format!("{which}: {w}")),
                },
            }
        }
        "avoids" => {
            let p = pattern.ok_or_else(|| CliError::Usage("avoids needs --pattern".into()))?;
            let p: Pattern = parse("pattern", p)?;
            match perm()?.pattern_occurrences(&p).into_iter().next() {
                None => Verdict::plain(true),
                Some(at) => Verdict {
                    holds: false,
                    note: Some(format!("occurrence at positions {at:?}")),
                    witness: json!({ "positions": at }),
                },
            }
        }
        "every-4132-in-51342" => match perm()?.uncovered_4132() {
            None => Verdict::plain(true),
            Some(at) => Verdict {
                holds: false,
                note: Some(format!("4132 at positions {at:?} lies in no 51342")),
                witness: json!({ "positions": at }),
            },
        },
        "rtl-increasing" => Verdict::plain(parse_tree(input)?.is_rtl_increasing()),
        "dd-free" => {
            let p = path()?;
            let at = p
                .steps()
                .windows(2)
                .position(|w| w == [Step::D, Step::D]);
            match at {
                None => Verdict::plain(true),
                Some(i) => Verdict {
                    holds: false,
                    note: Some(format!("down steps at {} and {}", i + 1, i + 2)),
                    witness: json!({ "positions": [i + 1, i + 2] }),
                },
            }
        }
        "in-r" => Verdict::plain(path()?.in_r()),
        "in-q" => Verdict::plain(path()?.in_q()),
        "in-w" => {
            let p = path()?;
            Verdict {
                holds: p.in_w(),
                witness: json!({ "weak_ascents": p.weak_ascents() }),
                note: None,
            }
        }
        _ => return Err(CliError::Usage(format!("unknown predicate {predicate:?}"))),
    };
    Ok(v)
}

pub fn check(
    predicate: &str,
    input: &str,
    pattern: Option<&str>,
    json: bool,
    out: Out,
) -> Result<i32, CliError> {
    let v = evaluate(predicate, input, pattern)?;
    if json {
        let mut detail = json!({ "predicate": predicate, "input": input, "holds": v.holds });
        if !v.witness.is_null() {
            detail["witness"] = v.witness;
        }
        writeln!(out, "{detail}")?;
    } else {
        match v.note {
            Some(note) => writeln!(out, "{} ({note})", v.holds)?,
            None => writeln!(out, "{}", v.holds)?,
        }
    }
    Ok(if v.holds { 0 } else { 1 })
}

pub struct EnumerateArgs<'a> {
    pub n: usize,
    pub class: &'a str,
    pub avoid: &'a [String],
    pub inverse_avoid: bool,
    pub limit: Option<usize>,
    pub count_only: bool,
}

pub fn enumerate(args: &EnumerateArgs, json: bool, out: Out) -> Result<i32, CliError> {
    let class: Class = parse("class", args.class)?;
    let mut spec = ClassSpec::new(args.n, class);
    for p in args.avoid.iter().filter(|p| !p.is_empty()) {
        spec.avoid.push(parse("pattern", p)?);
    }
    spec.avoid_inverse = args.inverse_avoid;

    let limit = args.limit.unwrap_or(usize::MAX);
    let mut count = 0usize;
    let mut io_error = None;
    if limit > 0 {
        enumeration::visit_class(&spec, |w| {
            count += 1;
            if !args.count_only {
                let written = if json {
                    writeln!(out, "{}", json!(w))
                } else {
                    let line: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{}", line.join(" "))
                };
                if let Err(e) = written {
                    io_error = Some(e);
                    return ControlFlow::Break(());
                }
            }
            if count >= limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
    }
    if let Some(e) = io_error {
        return Err(e.into());
    }
    if args.count_only {
        if json {
            writeln!(out, "{}", json!({ "count": count }))?;
        } else {
            writeln!(out, "{count}")?;
        }
    }
    Ok(0)
}

pub fn verify(
    suite: &str,
    n_max: usize,
    workers: usize,
    out_dir: Option<&std::path::Path>,
    json: bool,
    out: Out,
) -> Result<i32, CliError> {
    let reports = verify::verify_suite(suite, n_max, workers)?;
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        std::fs::write(
            dir.join(format!("verify-{suite}.json")),
            verify::reports_to_json(&reports) + "\n",
        )?;
        std::fs::write(
            dir.join(format!("verify-{suite}.tsv")),
            verify::reports_to_tsv(&reports),
        )?;
    }
    if json {
        writeln!(out, "{}", verify::reports_to_json(&reports))?;
    } else {
        for r in &reports {
            let status = match (r.pass, r.exploratory) {
                (true, false) => "pass",
                (false, false) => "FAIL",
                (true, true) => "holds",
                (false, true) => "differs",
            };
            writeln!(out, "{status:<8}{:<24}n={}..{}", r.claim, r.n_min, r.n_max)?;
        }
        let counted: Vec<_> = reports.iter().filter(|r| !r.exploratory).collect();
        let passed = counted.iter().filter(|r| r.pass).count();
        writeln!(out, "{passed} of {} checks pass", counted.len())?;
    }
    Ok(if verify::all_pass(&reports) { 0 } else { 1 })
}

/// `(n, value)` pairs of a named sequence up to `n_max`.
pub fn sequence_terms(
    name: &str,
    n_max: usize,
    workers: usize,
) -> Result<Vec<(usize, String)>, CliError> {
    if name == "double-simsun" {
        return Ok(enumeration::double_simsun_sequence(n_max, workers)
            .into_iter()
            .enumerate()
            .map(|(i, v)| (i + 1, v.to_string()))
            .collect());
    }
    let seq: SequenceName = parse("sequence name", name)?;
    Ok(seq
        .terms(n_max)
        .into_iter()
        .enumerate()
        .map(|(i, v)| (i + seq.offset(), v.to_string()))
        .collect())
}

pub fn sequence(name: &str, n_max: usize, workers: usize, json: bool, out: Out) -> Result<i32, CliError> {
    let terms = sequence_terms(name, n_max, workers)?;
    if json {
        let values: Vec<Value> = terms
            .iter()
            .map(|(n, v)| json!({ "n": n, "value": v }))
            .collect();
        writeln!(out, "{}", json!({ "name": name, "terms": values }))?;
    } else {
        for (n, v) in terms {
            writeln!(out, "{n}\t{v}")?;
        }
    }
    Ok(0)
}

pub fn claims(json: bool, out: Out) -> Result<i32, CliError> {
    if json {
        let list: Vec<Value> = verify::claims()
            .iter()
            .map(|c| json!({ "id": c.id, "statement": c.statement, "exploratory": c.exploratory }))
            .collect();
        writeln!(out, "{}", Value::Array(list))?;
    } else {
        for c in verify::claims() {
            writeln!(out, "{}\t{}", c.id, c.statement)?;
        }
    }
    Ok(0)
}
