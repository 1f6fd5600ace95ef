//! `verify`: identities and formula-versus-oracle checks on one group or on
//! every builtin group.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::{Args, ValueEnum};
use num_bigint::BigUint;
use num_traits::Pow;
use periodica::builtin::all_builtins;
use periodica::counting::{psi, psi_value};
use periodica::oracle::{brute_fix_count, brute_orbit_census, brute_psi, burnside_orbit_count, OracleError};
use periodica::{SubgroupId, SubgroupLattice};
use serde::Serialize;

use crate::commands::{json, lattice, Output};
use crate::error::{exit, CliError};
use crate::source::{resolve, GroupSource, SubgroupSpec};
use crate::{parse_q_range, Context, Format};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    source: GroupSource,
    /// Check every builtin group
    #[arg(long, conflicts_with = "source")]
    all_builtin: bool,
    /// Alphabet size, or an inclusive range such as 2..3
    #[arg(long, value_name = "Q", value_parser = parse_q_range, default_value = "2")]
    q: RangeInclusive<u64>,
    /// Run only these checks (repeatable); all by default
    #[arg(long, value_enum)]
    check: Vec<Check>,
    #[arg(long, value_name = "N", default_value_t = periodica::fg::DEFAULT_MAX_COSETS)]
    max_cosets: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// Σ_{K ≥ H} ψ_K = q^[G:H] for every H
    Inversion,
    /// Σ over classes of ψ_[H] = q^|G|
    Partition,
    /// ψ_H equals ψ_{gHg⁻¹}
    Conjugation,
    /// Brute-force ψ_H equals the formula
    Oracle,
    /// |Fix(H)| = q^[G:H] by enumeration
    Fix,
    /// Σ α_[H] equals the Burnside orbit count
    Burnside,
    /// Brute-force orbit census matches ψ_[H] and α_[H] per class
    Census,
}

const ALL_CHECKS: [Check; 7] =
    [Check::Inversion, Check::Partition, Check::Conjugation, Check::Oracle, Check::Fix, Check::Burnside, Check::Census];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Serialize)]
struct CheckResult {
    group: String,
    q: u64,
    check: Check,
    status: Status,
    detail: String,
}

pub fn run(ctx: &Context, args: &VerifyArgs) -> Result<Output, CliError> {
    let lattices: Vec<SubgroupLattice> = if args.all_builtin {
        all_builtins().into_iter().map(lattice).collect::<Result<_, _>>()?
    } else if args.source.is_given() {
        let spec = SubgroupSpec { members: None, subgroup_words: None, max_cosets: args.max_cosets };
        vec![lattice(resolve(&args.source, &spec)?.group)?]
    } else {
        return Err(CliError::parse("verify", "give a group source or --all-builtin"));
    };
    let mut checks = if args.check.is_empty() { ALL_CHECKS.to_vec() } else { args.check.clone() };
    checks.sort();
    checks.dedup();

    let mut results = Vec::new();
    for l in &lattices {
        for q in args.q.clone() {
            for &check in &checks {
                results.push(run_check(ctx, l, q, check)?);
            }
        }
    }

    let failed = results.iter().filter(|r| r.status == Status::Fail).count();
    let code = if failed > 0 { exit::CHECK_FAILED } else { exit::OK };
    let text = match ctx.format.unwrap_or(Format::Text) {
        Format::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                passed: bool,
                results: &'a [CheckResult],
            }
            json(&Report { passed: failed == 0, results: &results })
        }
        Format::Csv => {
            let mut out = String::from("group,q,check,status,detail\n");
            for r in &results {
                let check = serde_json::to_value(r.check).unwrap();
                let status = serde_json::to_value(r.status).unwrap();
                writeln!(
                    out,
                    "{},{},{},{},\"{}\"",
                    r.group,
                    r.q,
                    check.as_str().unwrap(),
                    status.as_str().unwrap(),
                    r.detail.replace('"', "\"\"")
                )
                .unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &results {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                let check = serde_json::to_value(r.check).unwrap();
                writeln!(out, "[{tag}] {} q={} {}: {}", r.group, r.q, check.as_str().unwrap(), r.detail).unwrap();
            }
            let skipped = results.iter().filter(|r| r.status == Status::Skip).count();
            writeln!(
                out,
                "{} checks: {} passed, {failed} failed, {skipped} skipped",
                results.len(),
                results.len() - failed - skipped
            )
            .unwrap();
            out
        }
    };
    Ok(Output { text, code })
}

fn members(l: &SubgroupLattice, h: SubgroupId) -> String {
    let m: Vec<String> = l.subgroup(h).members().iter().map(usize::to_string).collect();
    format!("{{{}}}", m.join(","))
}

fn verdict(failures: Vec<String>, pass: String) -> (Status, String) {
    match failures.into_iter().next() {
        Some(first) => (Status::Fail, format!("counterexample: {first}")),
        None => (Status::Pass, pass),
    }
}

fn run_check(ctx: &Context, l: &SubgroupLattice, q: u64, check: Check) -> Result<CheckResult, CliError> {
    let g = l.group();
    let count = |e| CliError::count("verify", e);
    let psis: Vec<BigUint> = l.ids().map(|h| psi_value(l, h, q)).collect::<Result<_, _>>().map_err(count)?;
    let pow = |e: usize| BigUint::from(q).pow(e);
    let subgroups = l.len();

    let (status, detail) = match check {
        Check::Inversion => {
            let failures = l
                .ids()
                .filter_map(|h| {
                    let above = l.interval(h, l.whole()).expect("H ≤ G");
                    let sum: BigUint = above.iter().map(|k| &psis[k.index()]).sum();
                    let expected = pow(l.subgroup(h).index());
                    (sum != expected).then(|| format!("H = {}: sum {sum}, expected {expected}", members(l, h)))
                })
                .collect();
            verdict(
                failures,
                format!(
                    "sum of psi_K over K >= H equals q^[G:H] for all {subgroups} subgroups (H = 1: {})",
                    pow(g.order())
                ),
            )
        }
        Check::Partition => {
            let total: BigUint = l.classes().iter().map(|c| &psis[c[0].index()] * BigUint::from(c.len())).sum();
            let expected = pow(g.order());
            if total == expected {
                (Status::Pass, format!("classes partition A^G: {total} configurations"))
            } else {
                (Status::Fail, format!("counterexample: total {total}, expected {expected}"))
            }
        }
        Check::Conjugation => {
            let mut failures = Vec::new();
            for h in l.ids() {
                for x in 0..g.order() {
                    let c = l.id_of(&g.conjugate_subgroup(x, l.subgroup(h))).expect("conjugate is a subgroup");
                    if psis[c.index()] != psis[h.index()] {
                        failures.push(format!("H = {}, g = {x}", members(l, h)));
                    }
                }
            }
            verdict(failures, format!("psi constant on conjugacy classes ({} classes)", l.classes().len()))
        }
        Check::Oracle | Check::Fix => {
            let mut failures = Vec::new();
            let mut checked = 0;
            for h in l.ids() {
                let s = l.subgroup(h);
                let (got, expected) = if check == Check::Oracle {
                    (brute_psi(g, s, q, ctx.budget, ctx.exec), psis[h.index()].clone())
                } else {
                    (brute_fix_count(g, s, q, ctx.budget, ctx.exec), pow(s.index()))
                };
                match got {
                    Ok(v) => {
                        checked += 1;
                        if v != expected {
                            failures.push(format!("H = {}: enumeration {v}, formula {expected}", members(l, h)));
                        }
                    }
                    Err(OracleError::BudgetExceeded { .. }) => {}
                    Err(e) => return Err(CliError::oracle("verify", e)),
                }
            }
            let what = if check == Check::Oracle { "brute-force psi equals the formula" } else { "|Fix(H)| = q^[G:H]" };
            if checked == 0 {
                (Status::Skip, format!("every subgroup exceeds the budget of {}", ctx.budget))
            } else {
                let skipped = subgroups - checked;
                let note = if skipped > 0 { format!(" ({skipped} over budget, skipped)") } else { String::new() };
                verdict(failures, format!("{what} for {checked} subgroups{note}"))
            }
        }
        Check::Burnside => {
            let mut alpha_sum = BigUint::default();
            for c in l.classes() {
                alpha_sum += psi(l, c[0], q).map_err(count)?.alpha;
            }
            let orbits = burnside_orbit_count(g, q, ctx.exec);
            if orbits == alpha_sum {
                (Status::Pass, format!("total orbits {orbits} = sum of alpha over classes"))
            } else {
                (Status::Fail, format!("counterexample: Burnside {orbits}, sum of alpha {alpha_sum}"))
            }
        }
        Check::Census => match brute_orbit_census(l, q, ctx.budget) {
            Ok(census) => {
                let mut failures = Vec::new();
                for (class, entry) in &census {
                    let rep = l.classes()[*class][0];
                    let r = psi(l, rep, q).map_err(count)?;
                    if r.psi_class != entry.psi_class || r.alpha != entry.alpha {
                        failures.push(format!(
                            "class of {}: census ({}, {}), formula ({}, {})",
                            members(l, rep),
                            entry.psi_class,
                            entry.alpha,
                            r.psi_class,
                            r.alpha
                        ));
                    }
                }
                let realized = census.values().filter(|e| e.alpha > BigUint::default()).count();
                verdict(failures, format!("orbit census matches psi_[H] and alpha_[H] ({realized} classes realized)"))
            }
            Err(OracleError::BudgetExceeded { needed, .. }) => {
                (Status::Skip, format!("{needed} configurations exceed the budget of {}", ctx.budget))
            }
            Err(e) => return Err(CliError::oracle("verify", e)),
        },
    };
    Ok(CheckResult { group: g.display_label(), q, check, status, detail })
}
