//! Group sources: `scheme:n` constructors or a path to a group file.

use std::path::Path;

use polya::Group;

use crate::error::CliError;

/// Resolves `dihedral:n`, `cyclic:n`, `symmetric:n`, `trivial:n`,
/// `grid:RxC`, or a path to a group file.
pub fn parse_group_source(text: &str) -> Result<Group, CliError> {
    let text = text.trim();
    if let Some((scheme, arg)) = text.split_once(':') {
        let known = ["dihedral", "cyclic", "symmetric", "trivial", "grid"];
        if known.contains(&scheme) {
            return named_group(scheme, arg);
        }
        if !Path::new(text).exists() {
            return Err(CliError::Input(format!("unknown group scheme {scheme:?}")));
        }
    }
    let contents = std::fs::read_to_string(text)
        .map_err(|e| CliError::Input(format!("cannot read group file {text:?}: {e}")))?;
    Group::parse_file(&contents).map_err(|e| CliError::Input(format!("{text}: {e}")))
}

fn number(arg: &str, scheme: &str) -> Result<usize, CliError> {
    arg.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{scheme}: expected a size, found {arg:?}")))
}

fn named_group(scheme: &str, arg: &str) -> Result<Group, CliError> {
    let group = match scheme {
        "dihedral" => Group::dihedral(number(arg, scheme)?),
        "cyclic" => Group::cyclic(number(arg, scheme)?),
        "symmetric" => Group::symmetric(number(arg, scheme)?),
        "trivial" => Group::trivial(number(arg, scheme)?),
        "grid" => {
            let (rows, cols) = arg
                .split_once('x')
                .ok_or_else(|| CliError::Input(format!("grid: expected RxC, found {arg:?}")))?;
            Group::grid_product(number(rows, scheme)?, number(cols, scheme)?)
        }
        _ => unreachable!("checked by caller"),
    };
    Ok(group?)
}
