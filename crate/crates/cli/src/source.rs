//! Resolving the group and subgroup named on the command line to a finite
//! pair `(Ḡ, H̄)`.

use std::path::{Path, PathBuf};

use clap::Args;
use periodica::builtin::{builtin, BUILTIN_NAMES};
use periodica::fg::{coset_action_group, coset_enumerate, parse_presentation, smith_quotient, IntegerMatrix};
use periodica::group::{parse_cayley_table, parse_permutations};
use periodica::{FiniteGroup, Subgroup};

use crate::error::CliError;

#[derive(Debug, Clone, Args)]
#[group(id = "source", multiple = false)]
pub struct GroupSource {
    /// Cayley table file: the order on the first line, then one row per line
    #[arg(long, value_name = "FILE")]
    pub cayley: Option<PathBuf>,
    /// Permutation generators in cycle notation, one per line
    #[arg(long, value_name = "FILE")]
    pub perms: Option<PathBuf>,
    /// Presentation such as "< a, b | a^2, b^3, (a b)^2 >", optionally with "; H = ..."
    #[arg(long, value_name = "TEXT")]
    pub presentation: Option<String>,
    /// Sublattice of Z^d whose columns are the rows of "2,1;0,3"-style input
    #[arg(long, value_name = "MATRIX", allow_hyphen_values = true)]
    pub zd: Option<String>,
    /// Shipped group: Z2..Z12, Z2xZ2, Z2xZ4, Z3xZ3, S3, D4, Q8, S4
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SubgroupSpec {
    /// Subgroup of a finite group as a comma-separated element list
    #[arg(long, value_name = "LIST", conflicts_with_all = ["presentation", "zd"])]
    pub members: Option<String>,
    /// Subgroup generators as words in a presentation's generators
    #[arg(long, value_name = "WORDS", requires = "presentation")]
    pub subgroup_words: Option<String>,
    /// Largest number of cosets coset enumeration may define
    #[arg(long, value_name = "N", default_value_t = periodica::fg::DEFAULT_MAX_COSETS)]
    pub max_cosets: usize,
}

pub struct Resolved {
    pub group: FiniteGroup,
    pub subgroup: Subgroup,
}

impl GroupSource {
    pub fn is_given(&self) -> bool {
        self.cayley.is_some()
            || self.perms.is_some()
            || self.presentation.is_some()
            || self.zd.is_some()
            || self.builtin.is_some()
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::parse("reading input", format!("{}: {e}", path.display())))
}

fn file_label(path: &Path) -> Option<String> {
    path.file_stem().map(|s| s.to_string_lossy().into_owned())
}

pub fn lookup_builtin(name: &str) -> Result<FiniteGroup, CliError> {
    builtin(name).ok_or_else(|| {
        CliError::parse("resolving group", format!("unknown builtin `{name}`; known: {}", BUILTIN_NAMES.join(", ")))
    })
}

pub fn resolve(source: &GroupSource, sub: &SubgroupSpec) -> Result<Resolved, CliError> {
    if let Some(text) = &source.presentation {
        let mut p = parse_presentation(text).map_err(|e| CliError::fg("parsing presentation", e))?;
        if let Some(words) = &sub.subgroup_words {
            let mut extra = Vec::new();
            for w in words.split(',').filter(|w| !w.trim().is_empty()) {
                extra.push(p.parse_word(w).map_err(|e| CliError::fg("parsing subgroup words", e))?);
            }
            let mut all = p.subgroup_words.take().unwrap_or_default();
            all.extend(extra);
            p = p.with_subgroup(all);
        }
        let table = coset_enumerate(&p, sub.max_cosets).map_err(|e| CliError::fg("coset enumeration", e))?;
        let (group, subgroup) = coset_action_group(&table).map_err(|e| CliError::fg("coset action", e))?;
        let name = group.descriptor().name;
        return Ok(Resolved { group: group.with_label(name), subgroup });
    }
    if let Some(text) = &source.zd {
        let m: IntegerMatrix = text.parse().map_err(|e| CliError::fg("parsing matrix", e))?;
        let group = smith_quotient(&m).map_err(|e| CliError::fg("Smith normal form", e))?;
        let subgroup = group.trivial_subgroup();
        return Ok(Resolved { group, subgroup });
    }

    let group = if let Some(path) = &source.cayley {
        let table = parse_cayley_table(&read(path)?).map_err(|e| CliError::group("parsing Cayley table", e))?;
        FiniteGroup::from_cayley_table(&table, file_label(path).as_deref())
            .map_err(|e| CliError::group("validating Cayley table", e))?
    } else if let Some(path) = &source.perms {
        let input = parse_permutations(&read(path)?).map_err(|e| CliError::group("parsing permutations", e))?;
        FiniteGroup::from_permutations(input.degree, &input.generators, file_label(path).as_deref())
            .map_err(|e| CliError::group("permutation closure", e))?
    } else if let Some(name) = &source.builtin {
        lookup_builtin(name)?
    } else {
        return Err(CliError::parse(
            "resolving group",
            "no group given; use one of --cayley, --perms, --presentation, --zd, --builtin",
        ));
    };
    let subgroup = match &sub.members {
        Some(list) => {
            let members = parse_list(list).map_err(|m| CliError::parse("parsing --members", m))?;
            Subgroup::from_members(&group, &members).map_err(|e| CliError::group("checking subgroup", e))?
        }
        None => group.trivial_subgroup(),
    };
    Ok(Resolved { group, subgroup })
}

fn parse_list(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("bad element `{s}`")))
        .collect()
}
