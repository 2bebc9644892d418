//! Finite permutation groups: closure from generators, named families, the
//! text file format, and opt-in validation.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default upper bound on the number of elements `close_group` will produce.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000_000;

/// Largest `n` accepted by [`Group::symmetric`].
pub const MAX_SYMMETRIC_DEGREE: usize = 10;

/// A list of distinct permutations of a common set, assumed to form a group.
///
/// Only the size of each element is checked on construction. Use
/// [`Group::validate`] to check the group axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    set_size: usize,
    elements: Vec<Permutation>,
}

impl Group {
    pub fn from_elements(set_size: usize, elements: Vec<Permutation>) -> Result<Self> {
        if set_size == 0 {
            return Err(Error::EmptySet);
        }
        if let Some(p) = elements.iter().find(|p| p.size() != set_size) {
            return Err(Error::SizeMismatch {
                left: set_size,
                right: p.size(),
            });
        }
        Ok(Self { set_size, elements })
    }

    /// Closes `generators` under composition, capped at [`DEFAULT_CLOSURE_CAP`].
    pub fn close(generators: &[Permutation]) -> Result<Self> {
        Self::close_with_cap(generators, DEFAULT_CLOSURE_CAP)
    }

    /// Breadth-first closure. Elements appear in discovery order, starting
    /// with the identity and then the generators.
    pub fn close_with_cap(generators: &[Permutation], cap: usize) -> Result<Self> {
        let first = generators.first().ok_or(Error::NoGenerators)?;
        let set_size = first.size();
        if let Some(p) = generators.iter().find(|p| p.size() != set_size) {
            return Err(Error::SizeMismatch {
                left: set_size,
                right: p.size(),
            });
        }

        let mut seen = HashSet::new();
        let mut elements = Vec::new();
        let mut push = |p: Permutation, elements: &mut Vec<Permutation>| -> Result<()> {
            if seen.insert(p.clone()) {
                if elements.len() == cap {
                    return Err(Error::ClosureCap { cap });
                }
                elements.push(p);
            }
            Ok(())
        };

        push(Permutation::identity(set_size)?, &mut elements)?;
        for g in generators {
            push(g.clone(), &mut elements)?;
        }
        let mut next = 0;
        while next < elements.len() {
            let current = elements[next].clone();
            for g in generators {
                push(g.compose(&current)?, &mut elements)?;
            }
            next += 1;
        }
        Ok(Self { set_size, elements })
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Ok(Self {
            set_size: n,
            elements: vec![Permutation::identity(n)?],
        })
    }

    /// Rotations of an `n`-cycle: `j -> j + k (mod n)` for `k = 0..n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedSize {
                what: "cyclic group",
                n,
            });
        }
        let elements = (0..n)
            .map(|k| Permutation::from_image((0..n).map(|j| (j + k) % n).collect()))
            .collect::<Result<_>>()?;
        Ok(Self {
            set_size: n,
            elements,
        })
    }

    /// Symmetries of a regular `n`-gon acting on its vertices: the `n`
    /// rotations followed by the `n` reflections `j -> k - j (mod n)`.
    ///
    /// For `n <= 2` several of these coincide as permutations, so the
    /// group has order `n!` (1 and 2) instead of `2n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedSize {
                what: "dihedral group",
                n,
            });
        }
        let mut seen = HashSet::new();
        let rotations = (0..n).map(|k| (0..n).map(|j| (j + k) % n).collect::<Vec<_>>());
        let reflections = (0..n).map(|k| (0..n).map(|j| (k + n - j) % n).collect::<Vec<_>>());
        let mut elements = Vec::with_capacity(2 * n);
        for image in rotations.chain(reflections) {
            if seen.insert(image.clone()) {
                elements.push(Permutation::from_image(image)?);
            }
        }
        Ok(Self {
            set_size: n,
            elements,
        })
    }

    /// All `n!` permutations of `n` elements in lexicographic order of image.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::UnsupportedSize {
                what: "symmetric group",
                n,
            });
        }
        let mut image: Vec<usize> = (0..n).collect();
        let mut elements = Vec::new();
        loop {
            elements.push(Permutation::from_image(image.clone())?);
            if !next_permutation(&mut image) {
                break;
            }
        }
        Ok(Self {
            set_size: n,
            elements,
        })
    }

    /// `S_rows × S_cols` acting on the cells of a `rows × cols` grid, cell
    /// `(i, j)` stored at `i * cols + j`. Transitive, of order `rows!·cols!`.
    pub fn grid_product(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::UnsupportedSize {
                what: "grid product group",
                n: rows * cols,
            });
        }
        let size = rows * cols;
        let lift = |row_map: &dyn Fn(usize) -> usize, col_map: &dyn Fn(usize) -> usize| {
            let image = (0..size)
                .map(|cell| row_map(cell / cols) * cols + col_map(cell % cols))
                .collect();
            Permutation::from_image(image)
        };
        let mut generators = vec![Permutation::identity(size)?];
        if rows > 1 {
            generators.push(lift(&|i| if i < 2 { 1 - i } else { i }, &|j| j)?);
            generators.push(lift(&|i| (i + 1) % rows, &|j| j)?);
        }
        if cols > 1 {
            generators.push(lift(&|i| i, &|j| if j < 2 { 1 - j } else { j })?);
            generators.push(lift(&|i| i, &|j| (j + 1) % cols)?);
        }
        Self::close(&generators)
    }

    /// Parses the group file format: `#` comment lines and blank lines are
    /// skipped, the first remaining line is the set size, and every later
    /// line is one permutation in cycle or image-list notation.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::GroupFile {
            line: 0,
            message: "missing set size".into(),
        })?;
        let set_size: usize = header.parse().map_err(|_| Error::GroupFile {
            line,
            message: format!("expected set size, found {header:?}"),
        })?;
        if set_size == 0 {
            return Err(Error::GroupFile {
                line,
                message: "set size must be at least 1".into(),
            });
        }
        let elements = lines
            .map(|(line, l)| {
                Permutation::parse(l, set_size).map_err(|e| Error::GroupFile {
                    line,
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_elements(set_size, elements)
    }

    /// Writes the group in the format read by [`Group::parse_file`].
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.set_size);
        for p in &self.elements {
            let _ = writeln!(out, "{p}");
        }
        out
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Checks distinctness, presence of the identity and closure. Costs
    /// `O(|G|²)` compositions.
    pub fn validate(&self) -> ValidationReport {
        let mut members = HashSet::with_capacity(self.elements.len());
        let mut duplicates = 0;
        for p in &self.elements {
            if !members.insert(p) {
                duplicates += 1;
            }
        }
        let has_identity = self.elements.iter().any(Permutation::is_identity);
        let mut missing_product = None;
        'outer: for a in &self.elements {
            for b in &self.elements {
                // sizes are uniform by construction
                let ab = a.compose(b).expect("uniform sizes");
                if !members.contains(&ab) {
                    missing_product = Some(ab);
                    break 'outer;
                }
            }
        }
        ValidationReport {
            duplicates,
            has_identity,
            missing_product,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Number of elements that repeat an earlier one.
    pub duplicates: usize,
    pub has_identity: bool,
    /// A product of two elements that is not itself an element, if any.
    pub missing_product: Option<Permutation>,
}

impl ValidationReport {
    pub fn distinct(&self) -> bool {
        self.duplicates == 0
    }

    pub fn closed(&self) -> bool {
        self.missing_product.is_none()
    }

    pub fn is_valid(&self) -> bool {
        self.distinct() && self.has_identity && self.closed()
    }

    /// Human-readable list of failures, empty when valid.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.distinct() {
            out.push(format!("{} duplicate element(s)", self.duplicates));
        }
        if !self.has_identity {
            out.push("identity missing".to_string());
        }
        if let Some(p) = &self.missing_product {
            out.push(format!("not closed: product {p} is missing"));
        }
        out
    }
}

/// Advances `a` to the next permutation in lexicographic order; returns
/// `false` (leaving `a` sorted ascending) after the last one. Handles repeats.
pub(crate) fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    const SQUARE_OPERATIONS: [&str; 8] = [
        "(1)(2)(3)(4)",
        "(1,3)(2)(4)",
        "(2,4)(1)(3)",
        "(1,2)(3,4)",
        "(1,4)(2,3)",
        "(1,4,3,2)",
        "(1,3)(2,4)",
        "(1,2,3,4)",
    ];

    #[test]
    fn square_from_generators() {
        let g = Group::close(&[perm("(1,4,3,2)", 4), perm("(1,2)(3,4)", 4)]).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.validate().is_valid());
    }

    #[test]
    fn small_closures() {
        let id = Permutation::identity(3).unwrap();
        assert_eq!(Group::close(&[id]).unwrap().order(), 1);
        assert_eq!(Group::close(&[perm("(1,2)", 2)]).unwrap().order(), 2);
        assert!(matches!(Group::close(&[]), Err(Error::NoGenerators)));
        assert!(matches!(
            Group::close(&[perm("(1,2)", 2), perm("(1,2)", 3)]),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn closure_cap_aborts() {
        let gens = [perm("(1,2)", 6), perm("(1,2,3,4,5,6)", 6)];
        assert!(matches!(
            Group::close_with_cap(&gens, 100),
            Err(Error::ClosureCap { cap: 100 })
        ));
        assert_eq!(Group::close_with_cap(&gens, 720).unwrap().order(), 720);
    }

    #[test]
    fn dihedral_matches_square_operations() {
        let g = Group::dihedral(4).unwrap();
        assert_eq!(g.order(), 8);
        let mut expected: Vec<_> = SQUARE_OPERATIONS.iter().map(|s| perm(s, 4)).collect();
        let mut actual = g.elements().to_vec();
        expected.sort();
        actual.sort();
        assert_eq!(actual, expected);
    }

    #[test]
    fn family_orders() {
        for n in 3..=12 {
            assert_eq!(Group::dihedral(n).unwrap().order(), 2 * n);
            assert!(Group::dihedral(n).unwrap().validate().is_valid());
        }
        assert_eq!(Group::dihedral(1).unwrap().order(), 1);
        assert_eq!(Group::dihedral(2).unwrap().order(), 2);
        assert_eq!(Group::cyclic(1).unwrap().order(), 1);
        assert_eq!(Group::cyclic(7).unwrap().order(), 7);
        let mut fact = 1;
        for n in 1..=7 {
            fact *= n;
            assert_eq!(Group::symmetric(n).unwrap().order(), fact);
        }
        assert!(Group::symmetric(0).is_err());
        assert!(Group::symmetric(11).is_err());
        assert!(Group::dihedral(0).is_err());
        assert!(Group::cyclic(0).is_err());
        let grid = Group::grid_product(3, 4).unwrap();
        assert_eq!(grid.order(), 144);
        assert_eq!(grid.set_size(), 12);
        assert!(grid.validate().is_valid());
    }

    #[test]
    fn validation_failures() {
        let g = Group::from_elements(
            3,
            vec![Permutation::identity(3).unwrap(), perm("(1,2,3)", 3)],
        )
        .unwrap();
        let report = g.validate();
        assert!(!report.is_valid());
        assert!(report.has_identity);
        assert!(!report.closed());
        assert_eq!(report.missing_product, Some(perm("(1,3,2)", 3)));

        let empty = Group::from_elements(3, vec![]).unwrap().validate();
        assert!(!empty.is_valid());
        assert!(!empty.has_identity);

        let dup = Group::from_elements(2, vec![perm("()", 2), perm("()", 2)]).unwrap();
        assert_eq!(dup.validate().duplicates, 1);
    }

    #[test]
    fn group_file_round_trip() {
        let mut text = String::from("# the square\n\n4\n");
        for row in SQUARE_OPERATIONS {
            text.push_str(row);
            text.push('\n');
        }
        let g = Group::parse_file(&text).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.validate().is_valid());
        let again = Group::parse_file(&g.to_file_string()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn group_file_errors_carry_line_numbers() {
        let err = Group::parse_file("# c\n4\n(1,2)\n(1,9)\n").unwrap_err();
        assert!(matches!(err, Error::GroupFile { line: 4, .. }));
        let err = Group::parse_file("four\n").unwrap_err();
        assert!(matches!(err, Error::GroupFile { line: 1, .. }));
        assert!(Group::parse_file("# only comments\n").is_err());
        let g = Group::parse_file("3\n()\n2 3 1\n3 1 2\n").unwrap();
        assert!(g.validate().is_valid());
    }

    #[test]
    fn next_permutation_handles_repeats() {
        let mut a = [0, 0, 1, 1];
        let mut count = 1;
        while next_permutation(&mut a) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(a, [0, 0, 1, 1]);
    }
}
