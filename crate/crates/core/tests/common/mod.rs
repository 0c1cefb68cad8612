//! Helpers shared by the integration tests: corpus loading and brute-force
//! oracles that work on raw permutations, independent of `ClassTable`.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use classprod::corpus::{collect_group_files, GroupFile};
use classprod::{ClassTable, FiniteGroup, Permutation};

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub struct Loaded {
    pub path: PathBuf,
    pub name: String,
    pub table: ClassTable,
}

pub fn load(path: &Path) -> Loaded {
    let file = GroupFile::load(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let group = file
        .build(20_000)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    Loaded {
        path: path.to_path_buf(),
        name: file.name.clone(),
        table: ClassTable::new(Arc::new(group)),
    }
}

pub fn fixture(rel: &str) -> Loaded {
    load(&corpus_dir().join(rel))
}

/// Every corpus group of order at most `max_order`.
pub fn corpus_up_to(max_order: usize) -> Vec<Loaded> {
    collect_group_files(&corpus_dir(), Some(max_order))
        .expect("corpus directory")
        .iter()
        .map(|p| load(p))
        .filter(|l| l.table.group().order() <= max_order)
        .collect()
}

/// A group as a plain list of permutations with classes found by direct
/// conjugation.
pub struct Brute {
    pub elements: Vec<Permutation>,
    pub index: HashMap<Permutation, usize>,
    /// Classes as sorted element-index lists, in order of least member.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl Brute {
    pub fn new(group: &FiniteGroup) -> Brute {
        let elements = group.elements().to_vec();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        for i in 0..elements.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut members = BTreeSet::new();
            for g in &elements {
                let c = g
                    .inverse()
                    .compose(&elements[i])
                    .unwrap()
                    .compose(g)
                    .unwrap();
                members.insert(index[&c]);
            }
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members.into_iter().collect());
        }
        Brute {
            elements,
            index,
            classes,
            class_of,
        }
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].compose(&self.elements[j]).unwrap()]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of[self.inv(self.classes[c][0])]
    }

    /// Multiplicities of every class in the product of class sums, from all
    /// `|A|·|B|` products.
    pub fn decomposition(&self, a: usize, b: usize) -> Vec<u64> {
        let mut hits = vec![0u64; self.classes.len()];
        for &x in &self.classes[a] {
            for &y in &self.classes[b] {
                hits[self.class_of[self.mul(x, y)]] += 1;
            }
        }
        hits.iter()
            .enumerate()
            .map(|(c, &h)| {
                let size = self.classes[c].len() as u64;
                assert_eq!(h % size, 0, "pair count not divisible by class size");
                h / size
            })
            .collect()
    }

    /// The element set `AB` turned into the set of classes it meets.
    pub fn product_classes(&self, a: usize, b: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &x in &self.classes[a] {
            for &y in &self.classes[b] {
                out.insert(self.class_of[self.mul(x, y)]);
            }
        }
        out
    }

    /// Pair count for one fixed target element `c`.
    pub fn factorizations(&self, a: usize, b: usize, c: usize) -> u64 {
        self.classes[a]
            .iter()
            .filter(|&&x| self.class_of[self.mul(self.inv(x), c)] == b)
            .count() as u64
    }

    pub fn is_real(&self, c: usize) -> bool {
        self.inverse_class(c) == c
    }

    pub fn order_of(&self, i: usize) -> u64 {
        self.elements[i].order()
    }
}

/// Class id permutation from the brute-force numbering to the table's.
pub fn class_map(brute: &Brute, table: &ClassTable) -> Vec<usize> {
    brute
        .classes
        .iter()
        .map(|members| table.class_of(members[0]))
        .collect()
}
