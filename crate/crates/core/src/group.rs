//! Finite permutation groups held as fully enumerated element lists.
//!
//! Elements are sorted lexicographically by image array, so the identity is
//! always element 0 and the ordering is reproducible across runs. Subgroups
//! are standalone [`FiniteGroup`] values with their own indexing.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::perm::{PermError, Permutation};

/// Default closure budget.
pub const DEFAULT_MAX_ORDER: usize = 20_000;

/// Environment variable overriding [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "CLASSPROD_MAX_ORDER";

/// The closure budget: `CLASSPROD_MAX_ORDER` if set to a positive integer,
/// otherwise [`DEFAULT_MAX_ORDER`].
pub fn default_max_order() -> usize {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n >= 1)
        .unwrap_or(DEFAULT_MAX_ORDER)
}

/// Up to this order the derived subgroup is generated by every commutator
/// of element pairs; above it, by the normal closure of generator commutators.
pub const PAIR_COMMUTATOR_LIMIT: usize = 2000;

// Groups up to this order get a lazily built multiplication table.
const TABLE_LIMIT: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group closure exceeds the order budget of {max_order}")]
    BudgetExceeded { max_order: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("element {0} is not in the group")]
    NotInGroup(String),
    #[error("subgroup is not contained in the group")]
    NotContained,
    #[error("subgroup is not normal in the group")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    table: OnceLock<Option<Vec<u32>>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Result of [`FiniteGroup::is_elementary_abelian`] when the answer is yes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementaryAbelian {
    Trivial,
    Prime(u64),
}

/// Isomorphism-invariant summary used in place of isomorphism testing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFingerprint {
    pub order: usize,
    /// element order ↦ number of elements
    pub element_orders: BTreeMap<u64, usize>,
    /// (class size, element order) ↦ number of classes
    pub classes: BTreeMap<(usize, u64), usize>,
}

impl FiniteGroup {
    /// Closure of `gens` under composition. Generators equal to the identity
    /// and duplicates are dropped from the stored generating list.
    pub fn generate(
        degree: usize,
        gens: &[Permutation],
        max_order: usize,
    ) -> Result<FiniteGroup, GroupError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree.into());
        }
        let mut generators: Vec<Permutation> = Vec::new();
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
            if !g.is_identity() && !generators.contains(g) {
                generators.push(g.clone());
            }
        }

        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut frontier = vec![identity];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in &generators {
                    let y = x.compose_unchecked(g);
                    if !seen.contains(&y) {
                        if seen.len() >= max_order {
                            return Err(GroupError::BudgetExceeded { max_order });
                        }
                        seen.insert(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(FiniteGroup::from_sorted(degree, generators, elements))
    }

    pub fn trivial(degree: usize) -> FiniteGroup {
        FiniteGroup::from_sorted(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    fn from_sorted(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> FiniteGroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        FiniteGroup {
            degree,
            generators,
            elements,
            index,
            inverses,
            orders,
            table: OnceLock::new(),
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    #[inline]
    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    #[inline]
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    #[inline]
    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverses[i]
    }

    #[inline]
    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i]
    }

    /// Index of `elements[i] · elements[j]`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match self.table() {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.index[&self.elements[i].compose_unchecked(&self.elements[j])],
        }
    }

    fn table(&self) -> Option<&[u32]> {
        self.table
            .get_or_init(|| {
                let n = self.order();
                if !(2..=TABLE_LIMIT).contains(&n) {
                    return None;
                }
                let rows: Vec<Vec<u32>> = (0..n)
                    .into_par_iter()
                    .map(|i| {
                        let a = &self.elements[i];
                        self.elements
                            .iter()
                            .map(|b| self.index[&a.compose_unchecked(b)] as u32)
                            .collect()
                    })
                    .collect();
                Some(rows.concat())
            })
            .as_deref()
    }

    /// Index of `g⁻¹ · elements[i] · g` for a permutation `g` normalizing this group.
    fn conj_index(&self, i: usize, g: &Permutation) -> usize {
        self.index[&self.elements[i]
            .conjugate(g)
            .expect("degree checked at construction")]
    }

    pub fn same_elements(&self, other: &FiniteGroup) -> bool {
        self.elements == other.elements
    }

    pub fn is_subset_of(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().enumerate().all(|(k, a)| {
            gens[k + 1..]
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    /// Sorted indices of the closure of `gens` (indices into this group).
    fn closure_indices(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut all = vec![0usize];
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &x in &frontier {
                for &g in gens {
                    let y = self.mul(x, g);
                    if !member[y] {
                        member[y] = true;
                        all.push(y);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        all.sort_unstable();
        all
    }

    /// Subgroup generated by the given element indices. The stored generating
    /// list keeps only the seeds that enlarged the closure.
    pub fn subgroup_generated_by_indices(&self, seed: &[usize]) -> FiniteGroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut current = vec![0usize];
        for &s in seed {
            if member[s] {
                continue;
            }
            gens.push(s);
            current = self.closure_indices(&gens);
            member.iter_mut().for_each(|m| *m = false);
            for &c in &current {
                member[c] = true;
            }
        }
        self.subgroup_from_indices(&current, &gens)
    }

    fn subgroup_from_indices(&self, sorted: &[usize], gens: &[usize]) -> FiniteGroup {
        // parent indices are sorted, so the images stay sorted
        let elements = sorted.iter().map(|&i| self.elements[i].clone()).collect();
        let generators = gens.iter().map(|&i| self.elements[i].clone()).collect();
        FiniteGroup::from_sorted(self.degree, generators, elements)
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_generated(&self, seed: &[Permutation]) -> Result<FiniteGroup, GroupError> {
        let idx = seed
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| GroupError::NotInGroup(p.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.subgroup_generated_by_indices(&idx))
    }

    /// Smallest normal subgroup containing the given element indices.
    pub fn normal_closure_of_indices(&self, seed: &[usize]) -> FiniteGroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut pending: Vec<usize> = seed.to_vec();
        while let Some(s) = pending.pop() {
            if member[s] {
                continue;
            }
            gens.push(s);
            for &c in &self.closure_indices(&gens) {
                member[c] = true;
            }
            for g in &self.generators {
                let c = self.conj_index(s, g);
                if !member[c] {
                    pending.push(c);
                }
            }
        }
        let all: Vec<usize> = (0..self.order()).filter(|&i| member[i]).collect();
        self.subgroup_from_indices(&all, &gens)
    }

    pub fn is_normal(&self, h: &FiniteGroup) -> Result<bool, GroupError> {
        if !h.is_subset_of(self) {
            return Err(GroupError::NotContained);
        }
        // conjugates of H's generators by G's generators suffice
        Ok(h.generators.iter().all(|x| {
            self.generators
                .iter()
                .all(|g| h.contains(&x.conjugate(g).expect("same degree")))
        }))
    }

    fn commutator(&self, i: usize, j: usize) -> usize {
        let ii = self.inverses[i];
        let jj = self.inverses[j];
        self.mul(self.mul(ii, jj), self.mul(i, j))
    }

    /// Subgroup generated by every commutator `[a, b]`, `a, b ∈ G`.
    pub fn derived_subgroup_by_pairs(&self) -> FiniteGroup {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comms = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let c = self.commutator(i, j);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        comms.sort_unstable();
        self.subgroup_generated_by_indices(&comms)
    }

    /// Normal closure of the commutators of generator pairs.
    pub fn derived_subgroup_by_normal_closure(&self) -> FiniteGroup {
        let gens: Vec<usize> = self.generators.iter().map(|g| self.index[g]).collect();
        let mut comms = Vec::new();
        for (k, &a) in gens.iter().enumerate() {
            for &b in &gens[k + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure_of_indices(&comms)
    }

    pub fn derived_subgroup(&self) -> FiniteGroup {
        if self.order() <= PAIR_COMMUTATOR_LIMIT {
            self.derived_subgroup_by_pairs()
        } else {
            self.derived_subgroup_by_normal_closure()
        }
    }

    /// Orders of the derived series terms, starting with `|G|`, until it stabilizes.
    pub fn derived_series_orders(&self) -> Vec<usize> {
        let mut orders = vec![self.order()];
        let mut current = self.derived_subgroup();
        while current.order() < *orders.last().unwrap() {
            orders.push(current.order());
            if current.order() == 1 {
                break;
            }
            current = current.derived_subgroup();
        }
        orders
    }

    pub fn is_solvable(&self) -> bool {
        *self.derived_series_orders().last().unwrap() == 1
    }

    /// The normal `p`-complement, if one exists: the `p′`-elements, provided
    /// they are closed under multiplication.
    pub fn normal_p_complement(&self, p: u64) -> Result<Option<FiniteGroup>, GroupError> {
        if !arith::is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let coprime: Vec<usize> = (0..self.order())
            .filter(|&i| !self.orders[i].is_multiple_of(p))
            .collect();
        let expected = arith::p_prime_part(self.order() as u64, p) as usize;
        if coprime.len() != expected {
            return Ok(None);
        }
        let h = self.subgroup_generated_by_indices(&coprime);
        Ok((h.order() == coprime.len()).then_some(h))
    }

    pub fn is_p_nilpotent(&self, p: u64) -> Result<bool, GroupError> {
        Ok(self.normal_p_complement(p)?.is_some())
    }

    pub fn is_elementary_abelian(&self) -> Option<ElementaryAbelian> {
        if self.order() == 1 {
            return Some(ElementaryAbelian::Trivial);
        }
        let p = self.orders[1..].first().copied()?;
        if !arith::is_prime(p) || !self.orders[1..].iter().all(|&o| o == p) {
            return None;
        }
        self.is_abelian().then_some(ElementaryAbelian::Prime(p))
    }

    pub fn center(&self) -> FiniteGroup {
        let central: Vec<usize> = (0..self.order())
            .filter(|&i| {
                let x = &self.elements[i];
                self.generators
                    .iter()
                    .all(|g| x.compose_unchecked(g) == g.compose_unchecked(x))
            })
            .collect();
        self.subgroup_generated_by_indices(&central)
    }

    /// Conjugation action of each generator as a map on element indices.
    pub(crate) fn conjugation_maps(&self) -> Vec<Vec<usize>> {
        self.generators
            .iter()
            .map(|g| {
                (0..self.order())
                    .into_par_iter()
                    .map(|i| self.conj_index(i, g))
                    .collect()
            })
            .collect()
    }

    /// Conjugacy classes as sorted index lists, in order of least member.
    pub fn conjugacy_partition(&self) -> Vec<Vec<usize>> {
        let maps = self.conjugation_maps();
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for m in &maps {
                    let y = m[x];
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        classes
    }

    /// Sorted indices of the conjugacy class of element `i`.
    pub fn conjugacy_class_of(&self, i: usize) -> Vec<usize> {
        let mut seen = HashSet::from([i]);
        let mut orbit = vec![i];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for g in &self.generators {
                let y = self.conj_index(x, g);
                if seen.insert(y) {
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Whether every element of the coset `xN` is conjugate to `x` in `G`.
    pub fn coset_all_conjugate(
        &self,
        n: &FiniteGroup,
        x: &Permutation,
    ) -> Result<bool, GroupError> {
        if !self.is_normal(n)? {
            return Err(GroupError::NotNormal);
        }
        let xi = self
            .index_of(x)
            .ok_or_else(|| GroupError::NotInGroup(x.to_string()))?;
        let class: HashSet<usize> = self.conjugacy_class_of(xi).into_iter().collect();
        if class.len() < n.order() {
            return Ok(false);
        }
        Ok(n.elements.iter().all(|m| {
            let y = self.index[&x.compose_unchecked(m)];
            class.contains(&y)
        }))
    }

    pub fn fingerprint(&self) -> GroupFingerprint {
        let mut element_orders = BTreeMap::new();
        for &o in &self.orders {
            *element_orders.entry(o).or_insert(0) += 1;
        }
        let mut classes = BTreeMap::new();
        for class in self.conjugacy_partition() {
            *classes
                .entry((class.len(), self.orders[class[0]]))
                .or_insert(0) += 1;
        }
        GroupFingerprint {
            order: self.order(),
            element_orders,
            classes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn gen(degree: usize, gens: &[Permutation]) -> FiniteGroup {
        FiniteGroup::generate(degree, gens, DEFAULT_MAX_ORDER).unwrap()
    }

    fn s3() -> FiniteGroup {
        gen(3, &[cyc(3, &[&[0, 1, 2]]), cyc(3, &[&[0, 1]])])
    }

    fn d10() -> FiniteGroup {
        let r = cyc(5, &[&[0, 1, 2, 3, 4]]);
        let s = Permutation::from_fn(5, |i| (5 - i) % 5).unwrap();
        gen(5, &[r, s])
    }

    fn z(n: usize) -> FiniteGroup {
        let c: Vec<u32> = (0..n as u32).collect();
        gen(n, &[cyc(n, &[&c])])
    }

    fn sym(n: usize) -> FiniteGroup {
        let c: Vec<u32> = (0..n as u32).collect();
        gen(n, &[cyc(n, &[&c]), cyc(n, &[&[0, 1]])])
    }

    fn a5() -> FiniteGroup {
        gen(5, &[cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])])
    }

    #[test]
    fn closure_basics() {
        let t = FiniteGroup::generate(4, &[], 10).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(d10().order(), 10);
        assert_eq!(sym(4).order(), 24);
        assert_eq!(a5().order(), 60);
        let g = s3();
        assert!(g.element(0).is_identity());
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn budget_is_enforced() {
        let err = FiniteGroup::generate(5, sym(5).generators(), 100).unwrap_err();
        assert_eq!(err, GroupError::BudgetExceeded { max_order: 100 });
    }

    #[test]
    fn mul_agrees_with_compose() {
        let g = sym(4);
        for i in 0..g.order() {
            for j in 0..g.order() {
                let p = g.element(i).compose(g.element(j)).unwrap();
                assert_eq!(g.element(g.mul(i, j)), &p);
            }
            assert!(g.element(g.mul(i, g.inverse_index(i))).is_identity());
        }
    }

    #[test]
    fn generated_subgroups() {
        let g = d10();
        let triv = g.subgroup_generated(&[Permutation::identity(5)]).unwrap();
        assert_eq!(triv.order(), 1);
        let r = cyc(5, &[&[0, 1, 2, 3, 4]]);
        let rot = g.subgroup_generated(&[r.clone(), r.inverse()]).unwrap();
        assert_eq!(rot.order(), 5);
        let outside = cyc(5, &[&[0, 1]]);
        assert!(matches!(
            g.subgroup_generated(&[outside]),
            Err(GroupError::NotInGroup(_))
        ));
    }

    #[test]
    fn normality() {
        let g = s3();
        assert!(g.is_normal(&FiniteGroup::trivial(3)).unwrap());
        let a3 = g.subgroup_generated(&[cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert!(g.is_normal(&a3).unwrap());
        let t = g.subgroup_generated(&[cyc(3, &[&[0, 1]])]).unwrap();
        assert!(!g.is_normal(&t).unwrap());
        let foreign = z(3);
        let sub_of_s4 = sym(4);
        assert_eq!(g.is_normal(&sub_of_s4), Err(GroupError::NotContained));
        // Z3 generated by (0 1 2) is A3 again
        assert!(g.is_normal(&foreign).unwrap());
    }

    #[test]
    fn class_generated_subgroups_are_normal() {
        let g = sym(4);
        for class in g.conjugacy_partition() {
            let h = g.subgroup_generated_by_indices(&class);
            assert!(g.is_normal(&h).unwrap());
            assert_eq!(g.order() % h.order(), 0);
        }
    }

    #[test]
    fn solvability() {
        assert!(z(6).is_solvable());
        assert!(sym(4).is_solvable());
        assert_eq!(sym(4).derived_series_orders(), vec![24, 12, 4, 1]);
        assert!(!a5().is_solvable());
        assert!(!sym(5).is_solvable());
        assert_eq!(sym(5).derived_series_orders(), vec![120, 60]);
    }

    #[test]
    fn derived_subgroup_routes_agree() {
        for g in [s3(), d10(), sym(4), a5(), sym(5), z(8)] {
            let a = g.derived_subgroup_by_pairs();
            let b = g.derived_subgroup_by_normal_closure();
            assert!(a.same_elements(&b), "order {}", g.order());
        }
    }

    #[test]
    fn p_nilpotency() {
        let g = s3();
        let c = g.normal_p_complement(2).unwrap().unwrap();
        assert_eq!(c.order(), 3);
        assert!(!g.is_p_nilpotent(3).unwrap());
        let p = z(8);
        assert_eq!(p.normal_p_complement(2).unwrap().unwrap().order(), 1);
        assert_eq!(g.is_p_nilpotent(4), Err(GroupError::NotPrime(4)));
        // A5 is not p-nilpotent for any prime dividing its order
        for p in [2, 3, 5] {
            assert!(!a5().is_p_nilpotent(p).unwrap());
        }
    }

    #[test]
    fn elementary_abelian() {
        assert_eq!(
            z(5).is_elementary_abelian(),
            Some(ElementaryAbelian::Prime(5))
        );
        assert_eq!(z(4).is_elementary_abelian(), None);
        assert_eq!(s3().is_elementary_abelian(), None);
        assert_eq!(
            FiniteGroup::trivial(2).is_elementary_abelian(),
            Some(ElementaryAbelian::Trivial)
        );
        let v4 = gen(
            4,
            &[cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])],
        );
        assert_eq!(
            v4.is_elementary_abelian(),
            Some(ElementaryAbelian::Prime(2))
        );
    }

    #[test]
    fn centers() {
        let g = z(6);
        assert!(g.center().same_elements(&g));
        assert_eq!(s3().center().order(), 1);
        // D8 on 4 points has center of order 2
        let d8 = gen(4, &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])]);
        assert_eq!(d8.center().order(), 2);
    }

    #[test]
    fn coset_conjugacy() {
        let g = d10();
        let s = Permutation::from_fn(5, |i| (5 - i) % 5).unwrap();
        assert!(g.coset_all_conjugate(&FiniteGroup::trivial(5), &s).unwrap());
        let rot = g
            .subgroup_generated(&[cyc(5, &[&[0, 1, 2, 3, 4]])])
            .unwrap();
        assert!(g.coset_all_conjugate(&rot, &s).unwrap());

        let z4 = z(4);
        let r = z4.generators()[0].clone();
        let n = z4.subgroup_generated(&[r.compose(&r).unwrap()]).unwrap();
        assert!(!z4.coset_all_conjugate(&n, &r).unwrap());

        let g = s3();
        let t = g.subgroup_generated(&[cyc(3, &[&[0, 1]])]).unwrap();
        assert_eq!(
            g.coset_all_conjugate(&t, &cyc(3, &[&[0, 1]])),
            Err(GroupError::NotNormal)
        );
    }

    #[test]
    fn fingerprints() {
        let t = FiniteGroup::trivial(1).fingerprint();
        assert_eq!(t.order, 1);
        assert_eq!(t.element_orders, BTreeMap::from([(1, 1)]));
        assert_eq!(t.classes, BTreeMap::from([((1, 1), 1)]));

        let f = s3().fingerprint();
        assert_eq!(f.element_orders, BTreeMap::from([(1, 1), (2, 3), (3, 2)]));
        assert_eq!(
            f.classes,
            BTreeMap::from([((1, 1), 1), ((2, 3), 1), ((3, 2), 1)])
        );

        // relabeling points leaves the fingerprint unchanged
        let g = sym(4);
        let relabel = cyc(4, &[&[0, 3, 1]]);
        let moved: Vec<Permutation> = g
            .generators()
            .iter()
            .map(|x| x.conjugate(&relabel).unwrap())
            .collect();
        assert_eq!(gen(4, &moved).fingerprint(), g.fingerprint());
    }
}
