//! Conjugacy classes and class-sum structure constants.
//!
//! For classes `A`, `B`, `C` the structure constant `(ÂB̂, Ĉ)` is the number
//! of ways a fixed element `c ∈ C` factors as `a·b` with `a ∈ A`, `b ∈ B`.
//! It is computed per target class as `#{a ∈ A : a⁻¹c ∈ B}`, a linear scan
//! over `A` with O(1) class lookups.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use crate::group::FiniteGroup;
use crate::perm::Permutation;

pub type ClassId = usize;

/// Class id of the identity in every table.
pub const IDENTITY_CLASS: ClassId = 0;

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub id: ClassId,
    /// Least member (by canonical element order), as an element index.
    pub representative: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub element_order: u64,
    pub real: bool,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Multiplicities of each class in the product of two class sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub left: ClassId,
    pub right: ClassId,
    /// Indexed by class id.
    pub mults: Vec<u64>,
}

impl Decomposition {
    pub fn get(&self, class: ClassId) -> u64 {
        self.mults[class]
    }

    /// Classes with nonzero multiplicity.
    pub fn support(&self) -> BTreeSet<ClassId> {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(|&m| m == 0)
    }
}

pub struct ClassTable {
    group: Arc<FiniteGroup>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<ClassId>,
    inverse_of: Vec<ClassId>,
    cache: RwLock<HashMap<(ClassId, ClassId), Arc<Decomposition>>>,
}

impl std::fmt::Debug for ClassTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClassTable")
            .field("order", &self.group.order())
            .field("sizes", &self.sizes())
            .finish()
    }
}

impl ClassTable {
    /// Conjugacy classes ordered by `(element order, size, least member)`.
    pub fn new(group: Arc<FiniteGroup>) -> ClassTable {
        let mut parts = group.conjugacy_partition();
        parts.sort_by_key(|m| (group.element_order(m[0]), m.len(), m[0]));

        let mut class_of = vec![0; group.order()];
        for (id, members) in parts.iter().enumerate() {
            for &e in members {
                class_of[e] = id;
            }
        }
        let inverse_of: Vec<ClassId> = parts
            .iter()
            .map(|m| class_of[group.inverse_index(m[0])])
            .collect();
        let classes = parts
            .into_iter()
            .enumerate()
            .map(|(id, members)| ConjugacyClass {
                id,
                representative: members[0],
                element_order: group.element_order(members[0]),
                real: inverse_of[id] == id,
                members,
            })
            .collect();
        ClassTable {
            group,
            classes,
            class_of,
            inverse_of,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, id: ClassId) -> &ConjugacyClass {
        &self.classes[id]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    #[inline]
    pub fn class_of(&self, element: usize) -> ClassId {
        self.class_of[element]
    }

    pub fn class_of_perm(&self, p: &Permutation) -> Option<ClassId> {
        self.group.index_of(p).map(|i| self.class_of[i])
    }

    #[inline]
    pub fn inverse_of(&self, id: ClassId) -> ClassId {
        self.inverse_of[id]
    }

    pub fn representative(&self, id: ClassId) -> &Permutation {
        self.group.element(self.classes[id].representative)
    }

    /// Classes contained in the subgroup `h` (which must live in the same degree).
    pub fn classes_in(&self, h: &FiniteGroup) -> BTreeSet<ClassId> {
        h.elements()
            .iter()
            .filter_map(|p| self.class_of_perm(p))
            .collect()
    }

    /// Element indices of the union of the given classes, sorted.
    pub fn members_of(&self, ids: &BTreeSet<ClassId>) -> Vec<usize> {
        let mut out: Vec<usize> = ids
            .iter()
            .flat_map(|&c| self.classes[c].members.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Subgroup generated by a union of classes (always normal).
    pub fn subgroup_of_classes(&self, ids: &BTreeSet<ClassId>) -> FiniteGroup {
        self.group
            .subgroup_generated_by_indices(&self.members_of(ids))
    }

    /// `(ÂB̂, Ĉ)` for every class `C`. Results are cached per `(A, B)`.
    pub fn product_decomposition(&self, a: ClassId, b: ClassId) -> Arc<Decomposition> {
        if let Some(d) = self.cache.read().unwrap().get(&(a, b)) {
            return Arc::clone(d);
        }
        let d = Arc::new(self.compute_decomposition(a, b));
        let mut cache = self.cache.write().unwrap();
        Arc::clone(cache.entry((a, b)).or_insert(d))
    }

    fn count_factorizations(&self, a: ClassId, b: ClassId, target: usize) -> u64 {
        let g = &self.group;
        self.classes[a]
            .members
            .iter()
            .filter(|&&x| self.class_of[g.mul(g.inverse_index(x), target)] == b)
            .count() as u64
    }

    fn compute_decomposition(&self, a: ClassId, b: ClassId) -> Decomposition {
        let mults = self
            .classes
            .iter()
            .map(|c| self.count_factorizations(a, b, c.representative))
            .collect();
        let d = Decomposition {
            left: a,
            right: b,
            mults,
        };
        #[cfg(debug_assertions)]
        for c in &self.classes {
            if let Some(&alt) = c.members.last() {
                debug_assert_eq!(self.count_factorizations(a, b, alt), d.mults[c.id]);
            }
        }
        d
    }

    /// Pair-enumeration route: tally the class of every product `a·b` and
    /// divide by the target class size. Independent of
    /// [`product_decomposition`](Self::product_decomposition); kept as an oracle.
    pub fn product_decomposition_by_pairs(&self, a: ClassId, b: ClassId) -> Decomposition {
        let g = &self.group;
        let mut tally = vec![0u64; self.len()];
        for &x in &self.classes[a].members {
            for &y in &self.classes[b].members {
                tally[self.class_of[g.mul(x, y)]] += 1;
            }
        }
        let mults = tally
            .iter()
            .zip(&self.classes)
            .map(|(&t, c)| {
                let size = c.size() as u64;
                assert_eq!(t % size, 0, "pair tally not divisible by class size");
                t / size
            })
            .collect();
        Decomposition {
            left: a,
            right: b,
            mults,
        }
    }

    /// Multiplicity `(ÂB̂, Ĉ)`.
    pub fn structure_constant(&self, a: ClassId, b: ClassId, c: ClassId) -> u64 {
        self.product_decomposition(a, b).get(c)
    }

    /// Classes appearing in the set product `AB`.
    pub fn product_set(&self, a: ClassId, b: ClassId) -> BTreeSet<ClassId> {
        self.product_decomposition(a, b).support()
    }

    /// Decomposition of `ÂB̂` with the `excluded` classes zeroed out.
    pub fn residual(&self, a: ClassId, b: ClassId, excluded: &BTreeSet<ClassId>) -> Decomposition {
        let mut d = (*self.product_decomposition(a, b)).clone();
        for &c in excluded {
            d.mults[c] = 0;
        }
        d
    }

    /// Set product of two unions of classes.
    pub fn union_product_set(
        &self,
        left: &BTreeSet<ClassId>,
        right: &BTreeSet<ClassId>,
    ) -> BTreeSet<ClassId> {
        let mut out = BTreeSet::new();
        for &a in left {
            for &b in right {
                out.extend(self.product_set(a, b));
            }
        }
        out
    }
}
