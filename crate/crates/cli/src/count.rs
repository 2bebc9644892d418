use std::fmt;
use std::str::FromStr;

use polya::oracle::{burnside_count, enumerate_orbits, expand_count};
use polya::{polya_tally_parallel, BigCount, Concentration, Group};

use crate::error::CliError;
use crate::source::parse_group_source;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OracleMode {
    #[default]
    None,
    Burnside,
    Orbits,
    Expand,
    All,
}

impl OracleMode {
    fn selected(self) -> &'static [OracleMode] {
        use OracleMode::*;
        match self {
            None => &[],
            Burnside => &[Burnside],
            Orbits => &[Orbits],
            Expand => &[Expand],
            All => &[Burnside, Orbits, Expand],
        }
    }
}

impl FromStr for OracleMode {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "none" => OracleMode::None,
            "burnside" => OracleMode::Burnside,
            "orbits" => OracleMode::Orbits,
            "expand" => OracleMode::Expand,
            "all" => OracleMode::All,
            _ => return Err(CliError::Input(format!("unknown oracle mode {s:?}"))),
        })
    }
}

impl fmt::Display for OracleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleMode::None => "none",
            OracleMode::Burnside => "burnside",
            OracleMode::Orbits => "orbits",
            OracleMode::Expand => "expand",
            OracleMode::All => "all",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CountRequest {
    pub group: String,
    pub colors: Vec<usize>,
    pub oracle: OracleMode,
    pub validate: bool,
    /// Worker cap; `None` uses the default rayon pool.
    pub threads: Option<usize>,
}

/// Parses `c1,c2,...`. Entries must be nonnegative and at least one positive.
pub fn parse_colors(text: &str) -> Result<Vec<usize>, CliError> {
    let colors = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("bad color count {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if colors.iter().all(|&c| c == 0) {
        return Err(CliError::Input(
            "at least one color count must be positive".into(),
        ));
    }
    Ok(colors)
}

/// Runs `f` on a pool with `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> Result<T, CliError> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(CliError::Input("--threads must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| CliError::Input(format!("cannot start thread pool: {e}"))),
    }
}

/// Resolves the group, counts, and cross-checks against the requested oracles.
/// Returns the count on success.
pub fn run_count(req: &CountRequest) -> Result<BigCount, CliError> {
    if req.colors.iter().all(|&c| c == 0) {
        return Err(CliError::Input(
            "at least one color count must be positive".into(),
        ));
    }
    let group = parse_group_source(&req.group)?;
    if req.validate {
        let report = group.validate();
        if !report.is_valid() {
            return Err(CliError::Input(format!(
                "{} is not a group: {}",
                req.group,
                report.failures().join("; ")
            )));
        }
    }
    let conc = Concentration::new(req.colors.clone())?;
    let count = with_threads(req.threads, || polya_tally_parallel(&group, &conc))??.count;
    check_oracles(&group, &conc, &count, req.oracle)?;
    Ok(count)
}

fn check_oracles(
    group: &Group,
    conc: &Concentration,
    count: &BigCount,
    mode: OracleMode,
) -> Result<(), CliError> {
    for &oracle in mode.selected() {
        let expected = match oracle {
            OracleMode::Burnside => burnside_count(group, conc),
            OracleMode::Orbits => enumerate_orbits(group, conc),
            OracleMode::Expand => expand_count(group, conc),
            OracleMode::None | OracleMode::All => unreachable!(),
        }?;
        if &expected != count {
            return Err(CliError::OracleMismatch(format!(
                "engine gave {count}, {oracle} oracle gave {expected}"
            )));
        }
    }
    Ok(())
}
