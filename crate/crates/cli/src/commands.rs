use std::fmt::Write as _;

use periodica::counting::{
    aut_structure, classify_small_alpha, lyndon_words, necklace_count, psi_cyclic, table_small_values, Catalog,
    CountReport,
};
use periodica::fg::{low_index_subgroups, parse_presentation};
use periodica::SubgroupLattice;
use serde::Serialize;

use crate::error::{exit, CliError};
use crate::source::{resolve, GroupSource, SubgroupSpec};
use crate::{Context, CountArgs, Format};

/// Finished command output, printed only once the whole command succeeded.
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Self { text, code: exit::OK }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn set(members: &[usize]) -> String {
    let inner: Vec<String> = members.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

#[derive(Serialize)]
struct AlphaReport<'a> {
    group: &'a str,
    subgroup_members: &'a [usize],
    #[serde(serialize_with = "as_string")]
    q: u64,
    index: usize,
    class_size: usize,
    #[serde(serialize_with = "as_string")]
    alpha: &'a num_bigint::BigUint,
}

fn as_string<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn lattice(group: periodica::FiniteGroup) -> Result<SubgroupLattice, CliError> {
    SubgroupLattice::new(group).map_err(|e| CliError::group("subgroup lattice", e))
}

pub fn psi(ctx: &Context, args: &CountArgs, alpha_only: bool) -> Result<Output, CliError> {
    let resolved = resolve(&args.source, &args.subgroup)?;
    let l = lattice(resolved.group)?;
    let h = l.id_of(&resolved.subgroup).expect("subgroup is in its lattice");
    let reports: Vec<CountReport> = args
        .q
        .clone()
        .map(|q| periodica::counting::psi(&l, h, q).map_err(|e| CliError::count("counting", e)))
        .collect::<Result<_, _>>()?;

    let text = match ctx.format.unwrap_or(Format::Json) {
        Format::Json if alpha_only => {
            let short: Vec<AlphaReport> = reports
                .iter()
                .map(|r| AlphaReport {
                    group: &r.group,
                    subgroup_members: &r.subgroup_members,
                    q: r.q,
                    index: r.index,
                    class_size: r.class_size,
                    alpha: &r.alpha,
                })
                .collect();
            if short.len() == 1 {
                json(&short[0])
            } else {
                json(&short)
            }
        }
        Format::Json => {
            if reports.len() == 1 {
                json(&reports[0])
            } else {
                json(&reports)
            }
        }
        Format::Csv => {
            let mut out = String::from("group,q,index,class_size,psi,psi_class,alpha\n");
            for r in &reports {
                writeln!(out, "{},{},{},{},{},{},{}", r.group, r.q, r.index, r.class_size, r.psi, r.psi_class, r.alpha)
                    .unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                writeln!(out, "group {}  H = {}  q = {}", r.group, set(&r.subgroup_members), r.q).unwrap();
                writeln!(out, "  [G:H] = {}  |[H]| = {}", r.index, r.class_size).unwrap();
                if !alpha_only {
                    for t in &r.terms {
                        writeln!(out, "  mu = {:>4}  [G:K] = {:>3}  K = {}", t.mu, t.index, set(&t.subgroup_members))
                            .unwrap();
                    }
                    writeln!(out, "  psi       = {}", r.psi).unwrap();
                    writeln!(out, "  psi_class = {}", r.psi_class).unwrap();
                }
                writeln!(out, "  alpha     = {}", r.alpha).unwrap();
            }
            out
        }
    };
    Ok(Output::ok(text))
}

pub fn table(ctx: &Context, q_max: u64) -> Result<Output, CliError> {
    let t = table_small_values(q_max, ctx.exec).map_err(|e| CliError::count("table", e))?;
    let text = match ctx.format.unwrap_or(Format::Csv) {
        Format::Csv => t.to_csv(),
        Format::Json => json(&t),
        Format::Text => {
            let mut out = format!("{:<8}", "G/H");
            for q in &t.q {
                write!(out, "{:>8}", format!("q={q}")).unwrap();
            }
            out.push('\n');
            for row in &t.rows {
                write!(out, "{:<8}", row.group).unwrap();
                for a in &row.alpha {
                    write!(out, "{a:>8}").unwrap();
                }
                out.push('\n');
            }
            out
        }
    };
    Ok(Output::ok(text))
}

pub fn classify(ctx: &Context, alpha_max: u64) -> Result<Output, CliError> {
    if alpha_max == 0 {
        return Err(CliError::parse("classify", "--alpha-max must be positive"));
    }
    if alpha_max > 10 {
        eprintln!("warning: --alpha-max {alpha_max} goes beyond the default range of 10");
    }
    let c = classify_small_alpha(alpha_max, &Catalog::small(), ctx.exec).map_err(|e| CliError::count("classify", e))?;
    let text = match ctx.format.unwrap_or(Format::Json) {
        Format::Json => {
            #[derive(Serialize)]
            struct Value<'a> {
                alpha: u64,
                attained_by: Vec<&'a periodica::counting::ClassifiedCell>,
            }
            #[derive(Serialize)]
            struct Report<'a> {
                values: Vec<Value<'a>>,
                unattained: Vec<u64>,
                certificate: &'a periodica::counting::ScanCertificate,
            }
            let values = c.by_value().into_iter().map(|(alpha, attained_by)| Value { alpha, attained_by }).collect();
            json(&Report { values, unattained: c.unattained(), certificate: &c.certificate })
        }
        Format::Csv => {
            let mut out = String::from("alpha,group,order,q\n");
            for (v, cells) in c.by_value() {
                if cells.is_empty() {
                    writeln!(out, "{v},unattained,,").unwrap();
                }
                for cell in cells {
                    writeln!(out, "{v},{},{},{}", cell.group, cell.order, cell.q).unwrap();
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (v, cells) in c.by_value() {
                if cells.is_empty() {
                    writeln!(out, "alpha = {v}: unattained").unwrap();
                } else {
                    let list: Vec<String> =
                        cells.iter().map(|c| format!("G/H = {} with q = {}", c.group, c.q)).collect();
                    writeln!(out, "alpha = {v}: {}", list.join("; ")).unwrap();
                }
            }
            let cert = &c.certificate;
            writeln!(out, "scan:").unwrap();
            for o in &cert.orders {
                writeln!(
                    out,
                    "  order {}: q = 2..{} ({}); q = {} excluded by bound {}/{}",
                    o.order,
                    o.q_max,
                    o.groups.join(", "),
                    o.q_max + 1,
                    o.excluded_bound_numerator,
                    o.order
                )
                .unwrap();
            }
            writeln!(
                out,
                "  order >= {} excluded: bound at q = 2 is {}/{} > {}",
                cert.stop_order, cert.stop_bound_numerator, cert.stop_order, cert.alpha_max
            )
            .unwrap();
            writeln!(
                out,
                "  {} cells examined; lower bound respected: {}",
                cert.cells_examined, cert.lower_bound_respected
            )
            .unwrap();
            out
        }
    };
    Ok(Output::ok(text))
}

pub fn aut(ctx: &Context, source: &GroupSource, q: u64) -> Result<Output, CliError> {
    let resolved = resolve(
        source,
        &SubgroupSpec { members: None, subgroup_words: None, max_cosets: periodica::fg::DEFAULT_MAX_COSETS },
    )?;
    let l = lattice(resolved.group)?;
    let d = aut_structure(&l, q).map_err(|e| CliError::count("automorphism structure", e))?;
    let text = match ctx.format.unwrap_or(Format::Json) {
        Format::Json => json(&d),
        Format::Csv => {
            let mut out = String::from("representative,class_size,index,quotient_order,quotient,alpha\n");
            for f in &d.factors {
                let rep: Vec<String> = f.representative.iter().map(usize::to_string).collect();
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    rep.join(" "),
                    f.class_size,
                    f.index,
                    f.quotient.order,
                    f.quotient.name,
                    f.alpha
                )
                .unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "Aut(A^G) for G = {}, q = {}: product over classes [H] of (N(H)/H) wr Sym(alpha)\n",
                d.group, d.q
            );
            for f in &d.factors {
                writeln!(
                    out,
                    "  H = {}  |[H]| = {}  [G:H] = {}  N(H)/H = {} (order {})  alpha = {}",
                    set(&f.representative),
                    f.class_size,
                    f.index,
                    f.quotient.name,
                    f.quotient.order,
                    f.alpha
                )
                .unwrap();
            }
            writeln!(out, "  total configurations: {}", d.configuration_total()).unwrap();
            out
        }
    };
    Ok(Output::ok(text))
}

pub fn lowindex(ctx: &Context, presentation: &str, max_index: usize) -> Result<Output, CliError> {
    let p = parse_presentation(presentation).map_err(|e| CliError::fg("parsing presentation", e))?;
    let tables = low_index_subgroups(&p, max_index).map_err(|e| CliError::fg("low-index search", e))?;

    #[derive(Serialize)]
    struct Entry {
        index: usize,
        conjugates: usize,
        generators: Vec<(String, Vec<usize>)>,
    }
    let entries: Vec<Entry> = tables
        .iter()
        .map(|t| Entry {
            index: t.len(),
            conjugates: t.conjugate_count(),
            generators: p.generators.iter().enumerate().map(|(i, g)| (g.clone(), t.generator_permutation(i))).collect(),
        })
        .collect();
    let mut totals = vec![0usize; max_index];
    for e in &entries {
        totals[e.index - 1] += e.conjugates;
    }

    let text = match ctx.format.unwrap_or(Format::Json) {
        Format::Json => {
            #[derive(Serialize)]
            struct Report {
                classes: Vec<Entry>,
                totals_by_index: Vec<usize>,
            }
            json(&Report { classes: entries, totals_by_index: totals })
        }
        Format::Csv => {
            let mut out = String::from("index,conjugates,action\n");
            for e in &entries {
                let action: Vec<String> =
                    e.generators.iter().map(|(g, perm)| format!("{g}={}", perm_string(perm))).collect();
                writeln!(out, "{},{},{}", e.index, e.conjugates, action.join(" ")).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for e in &entries {
                let action: Vec<String> =
                    e.generators.iter().map(|(g, perm)| format!("{g} -> {}", perm_string(perm))).collect();
                writeln!(out, "index {:>2}  conjugates {:>3}  {}", e.index, e.conjugates, action.join("  ")).unwrap();
            }
            for (i, t) in totals.iter().enumerate() {
                writeln!(out, "index {:>2}: {t} in total", i + 1).unwrap();
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn perm_string(perm: &[usize]) -> String {
    let images: Vec<String> = perm.iter().map(usize::to_string).collect();
    format!("[{}]", images.join(" "))
}

pub fn necklaces(ctx: &Context, n: u64, q: u64, list: bool) -> Result<Output, CliError> {
    if !(1..=64).contains(&n) {
        return Err(CliError::parse("necklaces", "--n must be between 1 and 64"));
    }
    if q < 2 {
        return Err(CliError::parse("necklaces", "--q must be at least 2"));
    }
    let count = necklace_count(n, q).map_err(|e| CliError::count("necklaces", e))?;
    let psi = psi_cyclic(n, q).map_err(|e| CliError::count("necklaces", e))?;
    let words = if list {
        let words = lyndon_words(n as usize, q, ctx.budget).map_err(|e| CliError::count("listing Lyndon words", e))?;
        let sep = if q > 10 { "," } else { "" };
        Some(words.iter().map(|w| w.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)).collect::<Vec<_>>())
    } else {
        None
    };

    let text = match ctx.format.unwrap_or(Format::Json) {
        Format::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                n: u64,
                #[serde(serialize_with = "as_string")]
                q: u64,
                #[serde(serialize_with = "as_string")]
                psi: &'a num_bigint::BigUint,
                #[serde(serialize_with = "as_string")]
                aperiodic_necklaces: &'a num_bigint::BigUint,
                #[serde(skip_serializing_if = "Option::is_none")]
                lyndon_words: Option<Vec<String>>,
            }
            json(&Report { n, q, psi: &psi, aperiodic_necklaces: &count, lyndon_words: words })
        }
        Format::Csv => {
            let mut out = format!("n,q,aperiodic_necklaces\n{n},{q},{count}\n");
            if let Some(words) = words {
                out.push_str("lyndon_word\n");
                for w in words {
                    writeln!(out, "{w}").unwrap();
                }
            }
            out
        }
        Format::Text => {
            let mut out = format!("aperiodic necklaces (Lyndon words) of length {n} over {q} letters: {count}\n");
            for w in words.into_iter().flatten() {
                writeln!(out, "{w}").unwrap();
            }
            out
        }
    };
    Ok(Output::ok(text))
}
