//! Scaling sweeps that time the counting engine and emit CSV.
//!
//! * `colors`: one fixed group, the number of colors runs over the range.
//! * `set_size`, `group_size`: the family template's `{n}` runs over the
//!   range, with a fixed number of colors.
//!
//! Every point uses the equal split of the set size over the colors.

use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use polya::{polya_tally_parallel, Concentration};
use serde::Serialize;

use crate::count::with_threads;
use crate::error::CliError;
use crate::source::parse_group_source;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    Colors,
    SetSize,
    GroupSize,
}

impl FromStr for Sweep {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "colors" => Ok(Sweep::Colors),
            "set_size" => Ok(Sweep::SetSize),
            "group_size" => Ok(Sweep::GroupSize),
            _ => Err(CliError::Input(format!("unknown sweep {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchPlan {
    /// Group source; contains `{n}` for the set_size and group_size sweeps.
    pub family: String,
    pub sweep: Sweep,
    pub start: usize,
    pub end: usize,
    /// Colors used by the set_size and group_size sweeps.
    pub num_colors: usize,
    /// Each point reports the fastest of this many runs.
    pub repeat: usize,
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub group_order: usize,
    pub set_size: usize,
    pub num_colors: usize,
    pub concentration: String,
    pub elapsed_ms: u128,
    pub count: String,
}

/// Parses an inclusive range `a..b` (or `a..=b`).
pub fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Input(format!("expected a range like 2..5, found {text:?}"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// Splits `total` over `parts` colors: every color gets `total / parts` and
/// the first color also takes the remainder, so 20 over 3 is `[8, 6, 6]`.
pub fn equal_split(total: usize, parts: usize) -> Vec<usize> {
    assert!(parts >= 1, "at least one color");
    let base = total / parts;
    let mut out = vec![base; parts];
    out[0] += total % parts;
    out
}

impl BenchPlan {
    fn validate(&self) -> Result<(), CliError> {
        let templated = self.family.contains("{n}");
        match self.sweep {
            Sweep::Colors if templated => Err(CliError::Input(
                "colors sweep takes a concrete group, not a {n} template".into(),
            )),
            Sweep::SetSize | Sweep::GroupSize if !templated => Err(CliError::Input(format!(
                "family {:?} needs a {{n}} placeholder for this sweep",
                self.family
            ))),
            Sweep::Colors if self.start == 0 => Err(CliError::Input(
                "number of colors must be at least 1".into(),
            )),
            _ if self.num_colors == 0 || self.repeat == 0 => Err(CliError::Input(
                "--num-colors and --repeat must be at least 1".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn run(&self) -> Result<Vec<BenchRecord>, CliError> {
        self.validate()?;
        let fixed = match self.sweep {
            Sweep::Colors => Some(parse_group_source(&self.family)?),
            _ => None,
        };
        let mut records = Vec::with_capacity(self.end - self.start + 1);
        for point in self.start..=self.end {
            let (group, colors) = match &fixed {
                Some(g) => (g.clone(), point),
                None => (
                    parse_group_source(&self.family.replace("{n}", &point.to_string()))?,
                    self.num_colors,
                ),
            };
            let counts = equal_split(group.set_size(), colors);
            let conc = Concentration::new(counts.clone())?;
            let mut best = Duration::MAX;
            let mut count = None;
            for _ in 0..self.repeat {
                let started = Instant::now();
                let tally = with_threads(self.threads, || polya_tally_parallel(&group, &conc))??;
                best = best.min(started.elapsed());
                count = Some(tally.count);
            }
            records.push(BenchRecord {
                group_order: group.order(),
                set_size: group.set_size(),
                num_colors: colors,
                concentration: counts
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join("+"),
                elapsed_ms: best.as_millis(),
                count: count.expect("repeat >= 1").to_string(),
            });
        }
        Ok(records)
    }
}

/// Writes records as CSV with a header row and LF line endings.
pub fn write_csv(records: &[BenchRecord], out: impl Write) -> Result<(), CliError> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    if records.is_empty() {
        writer
            .write_record([
                "group_order",
                "set_size",
                "num_colors",
                "concentration",
                "elapsed_ms",
                "count",
            ])
            .map_err(|e| CliError::Input(e.to_string()))?;
    }
    for r in records {
        writer
            .serialize(r)
            .map_err(|e| CliError::Input(e.to_string()))?;
    }
    writer.flush().map_err(|e| CliError::Input(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(family: &str, sweep: Sweep, start: usize, end: usize) -> BenchPlan {
        BenchPlan {
            family: family.into(),
            sweep,
            start,
            end,
            num_colors: 2,
            repeat: 1,
            threads: Some(1),
        }
    }

    #[test]
    fn split_rule() {
        assert_eq!(equal_split(20, 2), [10, 10]);
        assert_eq!(equal_split(20, 3), [8, 6, 6]);
        assert_eq!(equal_split(20, 4), [5, 5, 5, 5]);
        assert_eq!(equal_split(20, 5), [4, 4, 4, 4, 4]);
        assert_eq!(equal_split(6, 3), [2, 2, 2]);
        assert_eq!(equal_split(7, 2), [4, 3]);
    }

    #[test]
    fn split_invariants() {
        for total in 1..60 {
            for parts in 1..12 {
                let s = equal_split(total, parts);
                assert_eq!(s.iter().sum::<usize>(), total);
                assert!(s.windows(2).all(|w| w[0] >= w[1]));
                assert!(s[1..].iter().all(|&c| c == total / parts));
                assert!(s[0] - s[parts - 1] < parts);
            }
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5").unwrap(), (2, 5));
        assert_eq!(parse_range("2..=5").unwrap(), (2, 5));
        assert_eq!(parse_range("3..3").unwrap(), (3, 3));
        for bad in ["5..2", "2-5", "a..b", "..4"] {
            assert!(parse_range(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn colors_sweep() {
        let records = plan("dihedral:6", Sweep::Colors, 2, 3).run().unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].concentration, "3+3");
        assert_eq!(records[0].count, "3");
        assert_eq!(records[1].concentration, "2+2+2");
        assert_eq!(records[1].count, "11");
        assert_eq!(records[1].group_order, 12);
    }

    #[test]
    fn templated_sweeps() {
        let records = plan("cyclic:{n}", Sweep::SetSize, 3, 6).run().unwrap();
        let sizes: Vec<_> = records.iter().map(|r| r.set_size).collect();
        assert_eq!(sizes, [3, 4, 5, 6]);
        let records = plan("grid:2x{n}", Sweep::GroupSize, 1, 3).run().unwrap();
        let orders: Vec<_> = records.iter().map(|r| r.group_order).collect();
        assert_eq!(orders, [2, 4, 12]);
    }

    #[test]
    fn malformed_plans() {
        assert!(plan("dihedral:{n}", Sweep::Colors, 2, 3).run().is_err());
        assert!(plan("dihedral:6", Sweep::SetSize, 2, 3).run().is_err());
        assert!(plan("dihedral:6", Sweep::Colors, 0, 3).run().is_err());
        assert!("sizes".parse::<Sweep>().is_err());
    }

    #[test]
    fn csv_layout() {
        let records = plan("dihedral:4", Sweep::Colors, 2, 2).run().unwrap();
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.split('\n');
        assert_eq!(
            lines.next(),
            Some("group_order,set_size,num_colors,concentration,elapsed_ms,count")
        );
        let row = lines.next().unwrap();
        assert!(row.starts_with("8,4,2,2+2,"), "{row}");
        assert!(row.ends_with(",2"), "{row}");
        assert_eq!(lines.next(), Some(""));
        assert!(!text.contains('\r'));

        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "group_order,set_size,num_colors,concentration,elapsed_ms,count\n"
        );
    }
}
