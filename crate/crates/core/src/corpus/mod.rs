//! Group files, named constructions and report serialization.
//!
//! Two on-disk formats are understood, both UTF-8 with LF line endings:
//!
//! * `.grp`: line oriented, `#` starts a comment.
//!   ```text
//!   name: d10
//!   degree: 5
//!   provenance: construct dihedral 5
//!   gen: (1 2 3 4 5)
//!   gen: (1 5)(2 4)
//!   ```
//! * `.cay`: a Cayley table as CSV of 1-based element indices, element 1
//!   the identity. Header comments `# name: …` and `# provenance: …` carry
//!   the metadata.
//!
//! The bundled corpus is laid out as `corpus/<order>/<name>.grp|.cay`.

mod cycles;
mod families;
mod report;

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};
use crate::perm::Permutation;

pub use cycles::{format_permutation, parse_permutation, CycleParseError};
pub use families::{construct_named, Family, FamilyError};
pub use report::{
    build_report, parse_report, parse_reports, read_report, read_reports, reports_to_json,
    write_report, write_reports, ClassEntry, GroupInfo, MatchEntry, ReportError, ReportFile,
    SchemaError,
};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Cycle {
        line: usize,
        #[source]
        source: CycleParseError,
    },
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}: expected a .grp or .cay file")]
    UnknownExtension(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("empty Cayley table")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at row {row}, column {col} is outside 1..={n}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("row and column 1 must be the identity")]
    IdentityViolation,
    #[error("not a Latin square: {0}")]
    NotLatin(String),
    #[error("table is not associative")]
    NotAssociative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFormat {
    Cycles,
    Cayley,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Generators {
        degree: usize,
        generators: Vec<Permutation>,
    },
    /// 1-based entries.
    Cayley { table: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub name: String,
    pub provenance: String,
    pub payload: Payload,
}

impl GroupFile {
    pub fn from_generators(
        name: impl Into<String>,
        provenance: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
    ) -> GroupFile {
        GroupFile {
            name: name.into(),
            provenance: provenance.into(),
            payload: Payload::Generators { degree, generators },
        }
    }

    pub fn format(&self) -> GroupFormat {
        match self.payload {
            Payload::Generators { .. } => GroupFormat::Cycles,
            Payload::Cayley { .. } => GroupFormat::Cayley,
        }
    }

    pub fn extension(&self) -> &'static str {
        match self.format() {
            GroupFormat::Cycles => "grp",
            GroupFormat::Cayley => "cay",
        }
    }

    pub fn parse_grp(text: &str) -> Result<GroupFile, FileError> {
        let mut name = None;
        let mut provenance = String::new();
        let mut degree: Option<usize> = None;
        let mut generators = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |message: String| FileError::Syntax { line, message };
            let (key, value) = content
                .split_once(':')
                .ok_or_else(|| syntax(format!("expected `key: value`, got `{content}`")))?;
            let value = value.trim();
            match key.trim() {
                "name" => name = Some(value.to_string()),
                "provenance" => provenance = value.to_string(),
                "degree" => {
                    let d: usize = value
                        .parse()
                        .map_err(|_| syntax(format!("bad degree `{value}`")))?;
                    if d == 0 {
                        return Err(syntax("degree must be positive".into()));
                    }
                    degree = Some(d);
                }
                "gen" => {
                    let d = degree.ok_or_else(|| syntax("`gen` before `degree`".into()))?;
                    let p = parse_permutation(value, d)
                        .map_err(|source| FileError::Cycle { line, source })?;
                    generators.push(p);
                }
                other => return Err(syntax(format!("unknown key `{other}`"))),
            }
        }
        let name = name.ok_or(FileError::Syntax {
            line: 0,
            message: "missing `name`".into(),
        })?;
        let degree = degree.ok_or(FileError::Syntax {
            line: 0,
            message: "missing `degree`".into(),
        })?;
        Ok(GroupFile::from_generators(
            name, provenance, degree, generators,
        ))
    }

    pub fn parse_cay(text: &str) -> Result<GroupFile, FileError> {
        let mut name = String::new();
        let mut provenance = String::new();
        let mut table = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.trim();
            if let Some(comment) = content.strip_prefix('#') {
                let comment = comment.trim();
                if let Some(v) = comment.strip_prefix("name:") {
                    name = v.trim().to_string();
                } else if let Some(v) = comment.strip_prefix("provenance:") {
                    provenance = v.trim().to_string();
                }
                continue;
            }
            if content.is_empty() {
                continue;
            }
            let row = content
                .split(',')
                .map(|v| {
                    v.trim().parse::<usize>().map_err(|_| FileError::Syntax {
                        line,
                        message: format!("bad table entry `{}`", v.trim()),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            table.push(row);
        }
        Ok(GroupFile {
            name,
            provenance,
            payload: Payload::Cayley { table },
        })
    }

    pub fn to_grp(&self) -> Option<String> {
        let Payload::Generators { degree, generators } = &self.payload else {
            return None;
        };
        let mut out = format!("name: {}\ndegree: {}\n", self.name, degree);
        if !self.provenance.is_empty() {
            out.push_str(&format!("provenance: {}\n", self.provenance));
        }
        for g in generators {
            out.push_str(&format!("gen: {}\n", g));
        }
        Some(out)
    }

    pub fn to_cay(&self) -> Option<String> {
        let Payload::Cayley { table } = &self.payload else {
            return None;
        };
        let mut out = format!("# name: {}\n", self.name);
        if !self.provenance.is_empty() {
            out.push_str(&format!("# provenance: {}\n", self.provenance));
        }
        for row in table {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        Some(out)
    }

    pub fn serialize(&self) -> String {
        self.to_grp()
            .or_else(|| self.to_cay())
            .expect("one of the two formats applies")
    }

    pub fn load(path: &Path) -> Result<GroupFile, FileError> {
        let text = fs::read_to_string(path).map_err(|source| FileError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        match path.extension().and_then(|e| e.to_str()) {
            Some("grp") => GroupFile::parse_grp(&text),
            Some("cay") => {
                let mut f = GroupFile::parse_cay(&text)?;
                if f.name.is_empty() {
                    f.name = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_default();
                }
                Ok(f)
            }
            _ => Err(FileError::UnknownExtension(path.to_path_buf())),
        }
    }

    pub fn save(&self, path: &Path) -> Result<(), FileError> {
        fs::write(path, self.serialize()).map_err(|source| FileError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup, FileError> {
        match &self.payload {
            Payload::Generators { degree, generators } => {
                Ok(FiniteGroup::generate(*degree, generators, max_order)?)
            }
            Payload::Cayley { table } => {
                if table.len() > max_order {
                    return Err(GroupError::BudgetExceeded { max_order }.into());
                }
                Ok(cayley_to_group(table)?)
            }
        }
    }
}

/// Regular permutation representation of a group given by its Cayley table
/// (1-based, element 1 the identity): element `i` acts on points by
/// `j ↦ table[j][i]`, i.e. right multiplication.
pub fn cayley_to_group(table: &[Vec<usize>]) -> Result<FiniteGroup, CayleyError> {
    let n = table.len();
    if n == 0 {
        return Err(CayleyError::Empty);
    }
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(CayleyError::NotSquare {
                row: r + 1,
                len: row.len(),
                expected: n,
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v == 0 || v > n {
                return Err(CayleyError::OutOfRange {
                    row: r + 1,
                    col: c + 1,
                    value: v,
                    n,
                });
            }
        }
    }
    if (0..n).any(|k| table[0][k] != k + 1 || table[k][0] != k + 1) {
        return Err(CayleyError::IdentityViolation);
    }
    let mut seen = vec![false; n];
    for (r, row) in table.iter().enumerate() {
        seen.iter_mut().for_each(|s| *s = false);
        for &v in row {
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(CayleyError::NotLatin(format!(
                    "row {} repeats {}",
                    r + 1,
                    v
                )));
            }
        }
    }
    for c in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for row in table {
            let v = row[c];
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(CayleyError::NotLatin(format!(
                    "column {} repeats {}",
                    c + 1,
                    v
                )));
            }
        }
    }

    let perm_of = |i: usize| {
        Permutation::from_fn(n, |j| (table[j as usize][i] - 1) as u32)
            .expect("Latin columns are bijections")
    };
    // The regular permutations are determined by where they send point 0, so
    // if they generate a group of order n, composition agrees with the table
    // and the table is associative.
    let mut gens = Vec::new();
    let mut group = FiniteGroup::trivial(n);
    for i in 1..n {
        let p = perm_of(i);
        if group.contains(&p) {
            continue;
        }
        gens.push(p);
        group = FiniteGroup::generate(n, &gens, n).map_err(|_| CayleyError::NotAssociative)?;
    }
    if group.order() != n || !(0..n).all(|i| group.contains(&perm_of(i))) {
        return Err(CayleyError::NotAssociative);
    }
    Ok(group)
}

/// Cayley table of `g` in its canonical element order, 1-based.
pub fn group_to_cayley(g: &FiniteGroup) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|i| (0..g.order()).map(|j| g.mul(i, j) + 1).collect())
        .collect()
}

/// Group files under `root` (a file or a directory, searched recursively),
/// sorted by path. Directories named by a number larger than
/// `max_order` are skipped, matching the `corpus/<order>/` layout.
pub fn collect_group_files(root: &Path, max_order: Option<usize>) -> std::io::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    if root.is_file() {
        out.push(root.to_path_buf());
        return Ok(out);
    }
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in fs::read_dir(&dir)? {
            let path = entry?.path();
            if path.is_dir() {
                let over_budget = match (max_order, path.file_name().and_then(|s| s.to_str())) {
                    (Some(limit), Some(name)) => name.parse::<usize>().is_ok_and(|o| o > limit),
                    _ => false,
                };
                if !over_budget {
                    stack.push(path);
                }
            } else if matches!(
                path.extension().and_then(|e| e.to_str()),
                Some("grp") | Some("cay")
            ) {
                out.push(path);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_MAX_ORDER;

    const D10: &str = "# dihedral group\nname: d10\ndegree: 5\nprovenance: construct dihedral 5\ngen: (1 2 3 4 5)\ngen: (1 5)(2 4)  # reflection\n";

    #[test]
    fn grp_round_trip() {
        let f = GroupFile::parse_grp(D10).unwrap();
        assert_eq!(f.name, "d10");
        assert_eq!(f.build(DEFAULT_MAX_ORDER).unwrap().order(), 10);
        let text = f.serialize();
        let again = GroupFile::parse_grp(&text).unwrap();
        assert_eq!(again, f);
        assert_eq!(again.serialize(), text);
    }

    #[test]
    fn grp_errors() {
        assert!(matches!(
            GroupFile::parse_grp("name: x\ngen: (1 2)\n"),
            Err(FileError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            GroupFile::parse_grp("name: x\ndegree: 3\ngen: (1 2)(2 3)\n"),
            Err(FileError::Cycle {
                line: 3,
                source: CycleParseError::RepeatedPoint { point: 2, .. }
            })
        ));
        assert!(matches!(
            GroupFile::parse_grp("degree: 3\n"),
            Err(FileError::Syntax { .. })
        ));
        assert!(matches!(
            GroupFile::parse_grp("name: x\ndegree: 3\ncolour: red\n"),
            Err(FileError::Syntax { line: 3, .. })
        ));
    }

    #[test]
    fn cayley_basics() {
        let g = cayley_to_group(&[vec![1]]).unwrap();
        assert_eq!(g.order(), 1);
        let z3 = vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]];
        let g = cayley_to_group(&z3).unwrap();
        assert_eq!((g.order(), g.degree()), (3, 3));
        assert!(g.is_abelian());
    }

    #[test]
    fn cayley_rejections() {
        assert!(matches!(cayley_to_group(&[]), Err(CayleyError::Empty)));
        let not_latin = vec![vec![1, 2, 3], vec![2, 2, 1], vec![3, 1, 2]];
        assert!(matches!(
            cayley_to_group(&not_latin),
            Err(CayleyError::NotLatin(_))
        ));
        let bad_identity = vec![vec![2, 1], vec![1, 2]];
        assert_eq!(
            cayley_to_group(&bad_identity).unwrap_err(),
            CayleyError::IdentityViolation
        );
        // a Latin square with identity that is not associative (order-5 loop)
        let loop5 = vec![
            vec![1, 2, 3, 4, 5],
            vec![2, 1, 4, 5, 3],
            vec![3, 5, 1, 2, 4],
            vec![4, 3, 5, 1, 2],
            vec![5, 4, 2, 3, 1],
        ];
        assert_eq!(
            cayley_to_group(&loop5).unwrap_err(),
            CayleyError::NotAssociative
        );
        let ragged = vec![vec![1, 2], vec![2]];
        assert!(matches!(
            cayley_to_group(&ragged),
            Err(CayleyError::NotSquare { row: 2, .. })
        ));
    }

    #[test]
    fn cayley_export_round_trip() {
        let g = GroupFile::parse_grp(D10)
            .unwrap()
            .build(DEFAULT_MAX_ORDER)
            .unwrap();
        let table = group_to_cayley(&g);
        let back = cayley_to_group(&table).unwrap();
        assert_eq!(back.fingerprint(), g.fingerprint());
        // right-regular action multiplies like the table
        for i in 0..g.order() {
            for j in 0..g.order() {
                let k = table[i][j] - 1;
                let pi = back.element(back.index_of(&regular(&table, i)).unwrap());
                let pj = regular(&table, j);
                assert_eq!(pi.compose(&pj).unwrap(), regular(&table, k));
            }
        }
        let file = GroupFile {
            name: "d10".into(),
            provenance: String::new(),
            payload: Payload::Cayley { table },
        };
        let text = file.to_cay().unwrap();
        assert_eq!(GroupFile::parse_cay(&text).unwrap(), file);
    }

    fn regular(table: &[Vec<usize>], i: usize) -> Permutation {
        Permutation::from_fn(table.len(), |j| (table[j as usize][i] - 1) as u32).unwrap()
    }
}
