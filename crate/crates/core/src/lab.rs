//! Hypothesis detection and conclusion checking.
//!
//! [`Lab`] scans a [`ClassTable`] for the class-product patterns
//!
//! | kind                   | set equation                 |
//! |------------------------|------------------------------|
//! | `AB_eq_AuB`            | `AB = A ∪ B`                 |
//! | `AB_eq_AinvUB_nonreal` | `AB = A⁻¹ ∪ B`, `A ≠ A⁻¹`    |
//! | `AAinv_eq_1AAinv`      | `AA⁻¹ = 1 ∪ A ∪ A⁻¹`         |
//! | `A2_eq_AuAinv`         | `A² = A ∪ A⁻¹`               |
//! | `KKinv_eq_1DDinv`      | `KK⁻¹ = 1 ∪ D ∪ D⁻¹`         |
//! | `coset_conjugate`      | all of `xN` conjugate to `x` |
//!
//! and verifies the structural conclusions attached to each pattern. A
//! failed conclusion never aborts anything: it is recorded as a `FALSIFIED`
//! report carrying the classes involved as witnesses.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::class_algebra::{ClassId, ClassTable, IDENTITY_CLASS};
use crate::group::{ElementaryAbelian, FiniteGroup, GroupError};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HypothesisKind {
    #[serde(rename = "AB_eq_AuB")]
    AbEqAuB,
    #[serde(rename = "AB_eq_AinvUB_nonreal")]
    AbEqAinvUB,
    #[serde(rename = "AAinv_eq_1AAinv")]
    AAinvEq1AAinv,
    #[serde(rename = "A2_eq_AuAinv")]
    A2EqAuAinv,
    #[serde(rename = "KKinv_eq_1DDinv")]
    KKinvEq1DDinv,
    #[serde(rename = "coset_conjugate")]
    CosetConjugate,
}

impl HypothesisKind {
    pub const ALL: [HypothesisKind; 6] = [
        HypothesisKind::AbEqAuB,
        HypothesisKind::AbEqAinvUB,
        HypothesisKind::AAinvEq1AAinv,
        HypothesisKind::A2EqAuAinv,
        HypothesisKind::KKinvEq1DDinv,
        HypothesisKind::CosetConjugate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HypothesisKind::AbEqAuB => "AB_eq_AuB",
            HypothesisKind::AbEqAinvUB => "AB_eq_AinvUB_nonreal",
            HypothesisKind::AAinvEq1AAinv => "AAinv_eq_1AAinv",
            HypothesisKind::A2EqAuAinv => "A2_eq_AuAinv",
            HypothesisKind::KKinvEq1DDinv => "KKinv_eq_1DDinv",
            HypothesisKind::CosetConjugate => "coset_conjugate",
        }
    }

    /// Verifiers run on a match of this kind during a sweep.
    pub fn theorems(self) -> &'static [Theorem] {
        match self {
            HypothesisKind::AbEqAuB => &[Theorem::A],
            HypothesisKind::AbEqAinvUB => &[Theorem::B],
            HypothesisKind::AAinvEq1AAinv => &[Theorem::C],
            HypothesisKind::A2EqAuAinv => &[Theorem::T3_1],
            HypothesisKind::KKinvEq1DDinv => &[Theorem::Lemma2_2, Theorem::Conjecture],
            HypothesisKind::CosetConjugate => &[Theorem::T2_1],
        }
    }
}

impl fmt::Display for HypothesisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown hypothesis kind `{0}`")]
pub struct UnknownName(pub String);

impl FromStr for HypothesisKind {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HypothesisKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "theorem_A")]
    A,
    #[serde(rename = "theorem_B")]
    B,
    #[serde(rename = "theorem_C")]
    C,
    #[serde(rename = "theorem_3_1")]
    T3_1,
    #[serde(rename = "lemma_2_2")]
    Lemma2_2,
    #[serde(rename = "theorem_2_1")]
    T2_1,
    #[serde(rename = "conjecture")]
    Conjecture,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::A,
        Theorem::B,
        Theorem::C,
        Theorem::T3_1,
        Theorem::Lemma2_2,
        Theorem::T2_1,
        Theorem::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::A => "theorem_A",
            Theorem::B => "theorem_B",
            Theorem::C => "theorem_C",
            Theorem::T3_1 => "theorem_3_1",
            Theorem::Lemma2_2 => "lemma_2_2",
            Theorem::T2_1 => "theorem_2_1",
            Theorem::Conjecture => "conjecture",
        }
    }

    pub fn hypothesis(self) -> HypothesisKind {
        match self {
            Theorem::A => HypothesisKind::AbEqAuB,
            Theorem::B => HypothesisKind::AbEqAinvUB,
            Theorem::C => HypothesisKind::AAinvEq1AAinv,
            Theorem::T3_1 => HypothesisKind::A2EqAuAinv,
            Theorem::Lemma2_2 | Theorem::Conjecture => HypothesisKind::KKinvEq1DDinv,
            Theorem::T2_1 => HypothesisKind::CosetConjugate,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisMatch {
    pub kind: HypothesisKind,
    pub class_ids: Vec<ClassId>,
    /// Classes making up `N` for `coset_conjugate` matches.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_subgroup: Option<Vec<ClassId>>,
    pub group_ref: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "skipped")]
    Skipped,
    #[serde(rename = "FALSIFIED")]
    Falsified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Skipped => "skipped",
            Status::Falsified => "FALSIFIED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    fn new(name: &str, expected: impl ToString, observed: impl ToString, pass: bool) -> Check {
        Check {
            name: name.to_string(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
            witness: None,
        }
    }

    fn flag(name: &str, observed: bool) -> Check {
        Check::new(name, true, observed, observed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub matched: HypothesisMatch,
    pub checks: Vec<Check>,
    /// Named readouts such as the prime `p` or subgroup orders.
    pub facts: BTreeMap<String, String>,
    pub notes: Vec<String>,
    pub status: Status,
}

impl TheoremReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn fact(&self, name: &str) -> Option<&str> {
        self.facts.get(name).map(String::as_str)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("hypothesis {kind} not met by classes {classes:?}")]
    HypothesisNotMet {
        kind: HypothesisKind,
        classes: Vec<ClassId>,
    },
    #[error("no class with id {0}")]
    InvalidClass(ClassId),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabOptions {
    /// Require `D̂₁D̂₂⁻¹ = n₁D̂₁ + n₂D̂₂⁻¹` with the coefficients of `D̂₁D̂₂`,
    /// not just the set equation.
    pub step1_coefficients: bool,
}

impl Default for LabOptions {
    fn default() -> Self {
        LabOptions {
            step1_coefficients: true,
        }
    }
}

struct ReportBuilder {
    theorem: Theorem,
    matched: HypothesisMatch,
    checks: Vec<Check>,
    facts: BTreeMap<String, String>,
    notes: Vec<String>,
    skipped: bool,
    witness: String,
}

impl ReportBuilder {
    fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.insert(key.to_string(), value.to_string());
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn finish(mut self) -> TheoremReport {
        // a failed check outranks a vacuous conclusion
        let status = if !self.checks.iter().all(|c| c.pass) {
            Status::Falsified
        } else if self.skipped {
            Status::Skipped
        } else {
            Status::Pass
        };
        for c in self.checks.iter_mut().filter(|c| !c.pass) {
            if c.witness.is_none() {
                c.witness = Some(self.witness.clone());
            }
        }
        TheoremReport {
            theorem: self.theorem,
            matched: self.matched,
            checks: self.checks,
            facts: self.facts,
            notes: self.notes,
            status,
        }
    }
}

fn fmt_classes(ids: &BTreeSet<ClassId>) -> String {
    if ids.is_empty() {
        return "empty".to_string();
    }
    let parts: Vec<String> = ids.iter().map(|c| c.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Hypothesis scanner and verifier bound to one class table.
pub struct Lab<'t> {
    table: &'t ClassTable,
    group_ref: String,
    options: LabOptions,
}

impl<'t> Lab<'t> {
    pub fn new(table: &'t ClassTable, group_ref: impl Into<String>) -> Self {
        Lab {
            table,
            group_ref: group_ref.into(),
            options: LabOptions::default(),
        }
    }

    pub fn with_options(mut self, options: LabOptions) -> Self {
        self.options = options;
        self
    }

    pub fn table(&self) -> &ClassTable {
        self.table
    }

    pub fn group_ref(&self) -> &str {
        &self.group_ref
    }

    fn check_id(&self, id: ClassId) -> Result<(), TheoremError> {
        if id < self.table.len() {
            Ok(())
        } else {
            Err(TheoremError::InvalidClass(id))
        }
    }

    /// Human-readable class description used in witnesses.
    pub fn describe_class(&self, id: ClassId) -> String {
        let c = self.table.class(id);
        format!(
            "class {} (size {}, order {}, rep {})",
            id,
            c.size(),
            c.element_order,
            self.table.representative(id)
        )
    }

    fn builder(&self, theorem: Theorem, ids: &[ClassId]) -> ReportBuilder {
        let witness = ids
            .iter()
            .map(|&c| self.describe_class(c))
            .collect::<Vec<_>>()
            .join("; ");
        ReportBuilder {
            theorem,
            matched: self.make_match(theorem.hypothesis(), ids.to_vec()),
            checks: Vec::new(),
            facts: BTreeMap::new(),
            notes: Vec::new(),
            skipped: false,
            witness: format!("{}: {}", self.group_ref, witness),
        }
    }

    fn make_match(&self, kind: HypothesisKind, class_ids: Vec<ClassId>) -> HypothesisMatch {
        HypothesisMatch {
            kind,
            class_ids,
            normal_subgroup: None,
            group_ref: self.group_ref.clone(),
        }
    }

    /// Whether the set equation of `kind` holds for the given classes.
    /// Not defined for `coset_conjugate`, which needs a subgroup.
    pub fn holds(&self, kind: HypothesisKind, ids: &[ClassId]) -> bool {
        let t = self.table;
        let nontrivial = |c: ClassId| c != IDENTITY_CLASS && c < t.len();
        match (kind, ids) {
            (HypothesisKind::AbEqAuB, &[a, b]) if nontrivial(a) && nontrivial(b) => {
                t.product_set(a, b) == BTreeSet::from([a, b])
            }
            (HypothesisKind::AbEqAinvUB, &[a, b]) if nontrivial(a) && nontrivial(b) => {
                !t.class(a).real && t.product_set(a, b) == BTreeSet::from([t.inverse_of(a), b])
            }
            (HypothesisKind::AAinvEq1AAinv, &[a]) if nontrivial(a) => {
                let ai = t.inverse_of(a);
                t.product_set(a, ai) == BTreeSet::from([IDENTITY_CLASS, a, ai])
            }
            (HypothesisKind::A2EqAuAinv, &[k]) if nontrivial(k) => {
                t.product_set(k, k) == BTreeSet::from([k, t.inverse_of(k)])
            }
            (HypothesisKind::KKinvEq1DDinv, &[k, d]) if nontrivial(k) && nontrivial(d) => {
                t.product_set(k, t.inverse_of(k))
                    == BTreeSet::from([IDENTITY_CLASS, d, t.inverse_of(d)])
            }
            _ => false,
        }
    }

    fn require(&self, kind: HypothesisKind, ids: &[ClassId]) -> Result<(), TheoremError> {
        for &c in ids {
            self.check_id(c)?;
        }
        if self.holds(kind, ids) {
            Ok(())
        } else {
            Err(TheoremError::HypothesisNotMet {
                kind,
                classes: ids.to_vec(),
            })
        }
    }

    /// All matches of the requested kinds, grouped by kind in the order of
    /// [`HypothesisKind::ALL`], then by class ids.
    pub fn scan_hypotheses(&self, kinds: &BTreeSet<HypothesisKind>) -> Vec<HypothesisMatch> {
        let k = self.table.len();
        let mut out = Vec::new();
        for kind in HypothesisKind::ALL {
            if !kinds.contains(&kind) {
                continue;
            }
            match kind {
                HypothesisKind::AbEqAuB
                | HypothesisKind::AbEqAinvUB
                | HypothesisKind::KKinvEq1DDinv => {
                    let found: Vec<HypothesisMatch> = (1..k)
                        .into_par_iter()
                        .flat_map_iter(|a| {
                            // AB = BA, and D, D⁻¹ give the same equation
                            let lo = if kind == HypothesisKind::AbEqAuB {
                                a
                            } else {
                                1
                            };
                            (lo..k)
                                .filter(move |&b| {
                                    kind != HypothesisKind::KKinvEq1DDinv
                                        || b <= self.table.inverse_of(b)
                                })
                                .filter(move |&b| self.holds(kind, &[a, b]))
                                .map(move |b| self.make_match(kind, vec![a, b]))
                        })
                        .collect();
                    out.extend(found);
                }
                HypothesisKind::AAinvEq1AAinv | HypothesisKind::A2EqAuAinv => {
                    out.extend(
                        (1..k)
                            .filter(|&a| self.holds(kind, &[a]))
                            .map(|a| self.make_match(kind, vec![a])),
                    );
                }
                HypothesisKind::CosetConjugate => out.extend(self.scan_coset_conjugate()),
            }
        }
        out
    }

    /// Every normal subgroup, as the set of classes it is made of, ordered by
    /// subgroup order and then class ids. Built as joins of class closures.
    pub fn normal_subgroups(&self) -> Vec<BTreeSet<ClassId>> {
        let t = self.table;
        let trivial = BTreeSet::from([IDENTITY_CLASS]);
        let mut found: BTreeSet<BTreeSet<ClassId>> = BTreeSet::from([trivial.clone()]);
        let mut frontier = vec![trivial];
        while let Some(n) = frontier.pop() {
            for c in 1..t.len() {
                if n.contains(&c) {
                    continue;
                }
                let mut seed = n.clone();
                seed.insert(c);
                let joined = t.classes_in(&t.subgroup_of_classes(&seed));
                if found.insert(joined.clone()) {
                    frontier.push(joined);
                }
            }
        }
        let mut all: Vec<BTreeSet<ClassId>> = found.into_iter().collect();
        all.sort_by_key(|n| {
            (
                n.iter().map(|&c| t.class(c).size()).sum::<usize>(),
                n.clone(),
            )
        });
        all
    }

    fn scan_coset_conjugate(&self) -> Vec<HypothesisMatch> {
        let t = self.table;
        let g = t.group();
        self.normal_subgroups()
            .into_iter()
            .filter(|n| n.len() > 1)
            .flat_map(|n| {
                let sub = t.subgroup_of_classes(&n);
                (1..t.len())
                    .filter(|c| !n.contains(c))
                    .filter(|&c| {
                        g.coset_all_conjugate(&sub, t.representative(c))
                            .expect("class-generated subgroups are normal")
                    })
                    .map(|c| HypothesisMatch {
                        kind: HypothesisKind::CosetConjugate,
                        class_ids: vec![c],
                        normal_subgroup: Some(n.iter().copied().collect()),
                        group_ref: self.group_ref.clone(),
                    })
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    fn generated(&self, ids: &[ClassId]) -> FiniteGroup {
        self.table
            .subgroup_of_classes(&ids.iter().copied().collect())
    }

    /// `p` when every listed class consists of `p`-elements for one prime `p`.
    fn common_prime(&self, ids: &[ClassId]) -> Option<u64> {
        let mut primes = ids
            .iter()
            .map(|&c| arith::prime_power_base(self.table.class(c).element_order));
        let first = primes.next()??;
        primes.all(|p| p == Some(first)).then_some(first)
    }

    fn solvable_check(&self, b: &mut ReportBuilder, h: &FiniteGroup) {
        let series = h.derived_series_orders();
        let solvable = *series.last().unwrap() == 1;
        let mut c = Check::flag("solvable", solvable);
        c.witness = (!solvable).then(|| format!("derived series orders {:?}", series));
        b.push(c);
    }

    fn p_nilpotent_check(&self, b: &mut ReportBuilder, h: &FiniteGroup, p: Option<u64>) {
        match p {
            Some(p) => {
                let complement = h.normal_p_complement(p).expect("p is prime");
                let expected = arith::p_prime_part(h.order() as u64, p);
                match complement {
                    Some(n) => {
                        b.fact("complement_order", n.order());
                        b.push(Check::new(
                            "p_nilpotent",
                            format!("normal {p}'-subgroup of order {expected}"),
                            format!("order {}", n.order()),
                            true,
                        ));
                    }
                    None => b.push(Check::new(
                        "p_nilpotent",
                        format!("normal {p}'-subgroup of order {expected}"),
                        format!("{p}'-elements do not form a subgroup"),
                        false,
                    )),
                }
            }
            None => b.push(Check::new(
                "p_nilpotent",
                "normal p-complement",
                "not checked: no single prime",
                false,
            )),
        }
    }

    fn prime_check(&self, b: &mut ReportBuilder, ids: &[ClassId]) -> Option<u64> {
        let p = self.common_prime(ids);
        let orders: Vec<String> = ids
            .iter()
            .map(|&c| self.table.class(c).element_order.to_string())
            .collect();
        match p {
            Some(p) => {
                b.fact("p", p);
                b.push(Check::new(
                    "p_elements",
                    "single prime p",
                    format!("p={p}"),
                    true,
                ));
            }
            None => b.push(Check::new(
                "p_elements",
                "single prime p",
                format!("element orders {}", orders.join(", ")),
                false,
            )),
        }
        p
    }

    /// `AB = A ∪ B` implies `⟨A⟩ = ⟨B⟩` solvable and `p`-nilpotent, with
    /// `A`, `B` real classes of `p`-elements. When `M₁`, the part of `Â²`
    /// outside `{1, A, B}`, is nonempty, it coincides with `M₂` (same for
    /// `B̂²`) and `A·M₁ = A`.
    pub fn verify_theorem_a(&self, a: ClassId, b: ClassId) -> Result<TheoremReport, TheoremError> {
        self.require(HypothesisKind::AbEqAuB, &[a, b])?;
        let t = self.table;
        let mut r = self.builder(Theorem::A, &[a, b]);

        let ga = self.generated(&[a]);
        let gb = self.generated(&[b]);
        r.fact("generated_order", ga.order());
        r.push(Check::new(
            "generated_subgroups_equal",
            "<A> = <B>",
            format!("|<A>|={}, |<B>|={}", ga.order(), gb.order()),
            ga.same_elements(&gb),
        ));
        self.solvable_check(&mut r, &ga);
        let p = self.prime_check(&mut r, &[a, b]);
        self.p_nilpotent_check(&mut r, &ga, p);
        r.push(Check::new(
            "classes_real",
            "A = A^-1 and B = B^-1",
            format!("A real: {}, B real: {}", t.class(a).real, t.class(b).real),
            t.class(a).real && t.class(b).real,
        ));

        if self.options.step1_coefficients {
            let ab = t.product_decomposition(a, b);
            let (n1, n2) = (ab.get(a), ab.get(b));
            let binv = t.inverse_of(b);
            let abinv = t.product_decomposition(a, binv);
            let mut expected = vec![0u64; t.len()];
            expected[a] += n1;
            expected[binv] += n2;
            r.push(Check::new(
                "step1_coefficients",
                format!("A*B^-1 = {n1}*A + {n2}*B^-1"),
                format!("{:?}", abinv.mults),
                abinv.mults == expected,
            ));
        }

        let excluded = BTreeSet::from([IDENTITY_CLASS, a, b]);
        let m1 = t.residual(a, a, &excluded).support();
        let m2 = t.residual(b, b, &excluded).support();
        r.fact("M1", fmt_classes(&m1));
        r.fact("M2", fmt_classes(&m2));
        if m1.is_empty() {
            r.note("M1 empty: <A> = 1 u A u B case");
        } else {
            r.fact("M1_generated_order", t.subgroup_of_classes(&m1).order());
            r.push(Check::new(
                "M1_eq_M2",
                fmt_classes(&m1),
                fmt_classes(&m2),
                m1 == m2,
            ));
            let prod = t.union_product_set(&BTreeSet::from([a]), &m1);
            r.push(Check::new(
                "A_M1_eq_A",
                fmt_classes(&BTreeSet::from([a])),
                fmt_classes(&prod),
                prod == BTreeSet::from([a]),
            ));
        }
        Ok(r.finish())
    }

    /// `AB = A⁻¹ ∪ B` with `A` non-real forces `A = B`; the remaining
    /// conclusions are those of [`verify_theorem_3_1`](Self::verify_theorem_3_1).
    pub fn verify_theorem_b(&self, a: ClassId, b: ClassId) -> Result<TheoremReport, TheoremError> {
        self.require(HypothesisKind::AbEqAinvUB, &[a, b])?;
        let mut r = self.builder(Theorem::B, &[a, b]);
        let mut c = Check::new("A_eq_B", format!("class {a}"), format!("class {b}"), a == b);
        if a != b {
            c.witness = Some(format!(
                "{}: A = {}; B = {}",
                self.group_ref,
                self.describe_class(a),
                self.describe_class(b)
            ));
            r.note("counterexample: distinct classes with AB = A^-1 u B");
            r.push(c);
        } else {
            r.push(c);
            let inner = self.verify_theorem_3_1(a)?;
            r.checks.extend(inner.checks);
            r.facts.extend(inner.facts);
            r.notes.extend(inner.notes);
        }
        Ok(r.finish())
    }

    /// `AA⁻¹ = 1 ∪ A ∪ A⁻¹` implies `⟨A⟩ = 1 ∪ A ∪ A⁻¹` is elementary abelian;
    /// for non-real `A` also `A² = A ∪ A⁻¹`.
    pub fn verify_theorem_c(&self, a: ClassId) -> Result<TheoremReport, TheoremError> {
        self.require(HypothesisKind::AAinvEq1AAinv, &[a])?;
        let t = self.table;
        let g = t.group();
        let ai = t.inverse_of(a);
        let mut r = self.builder(Theorem::C, &[a]);

        let h = self.generated(&[a]);
        r.fact("generated_order", h.order());
        let union = t.members_of(&BTreeSet::from([IDENTITY_CLASS, a, ai]));
        let union_perms: Vec<Permutation> = union.iter().map(|&i| g.element(i).clone()).collect();
        r.push(Check::new(
            "generated_eq_1_A_Ainv",
            format!("{} elements", union.len()),
            format!("{} elements", h.order()),
            h.elements() == union_perms.as_slice(),
        ));
        match h.is_elementary_abelian() {
            Some(ElementaryAbelian::Prime(p)) => {
                r.fact("p", p);
                r.push(Check::new(
                    "elementary_abelian",
                    "prime exponent",
                    format!("p={p}"),
                    true,
                ));
            }
            Some(ElementaryAbelian::Trivial) => r.push(Check::new(
                "elementary_abelian",
                "prime exponent",
                "trivial",
                true,
            )),
            None => r.push(Check::new(
                "elementary_abelian",
                "prime exponent",
                "no",
                false,
            )),
        }
        let size = t.class(a).size();
        let expected = 1 + size + if ai == a { 0 } else { size };
        r.push(Check::new(
            "order_formula",
            expected,
            h.order(),
            expected == h.order(),
        ));
        if ai != a {
            let sq = t.product_set(a, a);
            r.push(Check::new(
                "square_eq_A_u_Ainv",
                fmt_classes(&BTreeSet::from([a, ai])),
                fmt_classes(&sq),
                sq == BTreeSet::from([a, ai]),
            ));
        }
        Ok(r.finish())
    }

    /// `K² = K ∪ K⁻¹` implies `⟨K⟩` solvable and `p`-nilpotent with `K` a
    /// class of `p`-elements. With `S` the part of `KK⁻¹` outside
    /// `{1, K, K⁻¹}`: `KS = K` when `S ≠ ∅`, else `⟨K⟩` is elementary abelian.
    pub fn verify_theorem_3_1(&self, k: ClassId) -> Result<TheoremReport, TheoremError> {
        self.require(HypothesisKind::A2EqAuAinv, &[k])?;
        let t = self.table;
        let ki = t.inverse_of(k);
        let mut r = self.builder(Theorem::T3_1, &[k]);

        let h = self.generated(&[k]);
        r.fact("generated_order", h.order());
        self.solvable_check(&mut r, &h);
        let p = self.prime_check(&mut r, &[k]);
        self.p_nilpotent_check(&mut r, &h, p);

        let s = t
            .residual(k, ki, &BTreeSet::from([IDENTITY_CLASS, k, ki]))
            .support();
        r.fact("S", fmt_classes(&s));
        if s.is_empty() {
            let ea = h.is_elementary_abelian();
            r.push(Check::new(
                "S_empty_elementary_abelian",
                "elementary abelian",
                format!("{:?}", ea),
                ea.is_some(),
            ));
        } else {
            let prod = t.union_product_set(&BTreeSet::from([k]), &s);
            r.push(Check::new(
                "K_S_eq_K",
                fmt_classes(&BTreeSet::from([k])),
                fmt_classes(&prod),
                prod == BTreeSet::from([k]),
            ));
        }
        Ok(r.finish())
    }

    /// `KK⁻¹ = 1 ∪ D ∪ D⁻¹` with `K` real implies `D` real. Skipped when `K`
    /// is non-real.
    pub fn verify_lemma_2_2(&self, k: ClassId, d: ClassId) -> Result<TheoremReport, TheoremError> {
        self.require(HypothesisKind::KKinvEq1DDinv, &[k, d])?;
        let t = self.table;
        let mut r = self.builder(Theorem::Lemma2_2, &[k, d]);
        if !t.class(k).real {
            r.skipped = true;
            r.note("hypothesis vacuous: K non-real");
        } else {
            r.push(Check::flag("D_real", t.class(d).real));
        }
        Ok(r.finish())
    }

    /// `AA⁻¹ = 1 ∪ B ∪ B⁻¹` should make `⟨A⟩` solvable.
    pub fn verify_conjecture(&self, a: ClassId, b: ClassId) -> Result<TheoremReport, TheoremError> {
        self.require(HypothesisKind::KKinvEq1DDinv, &[a, b])?;
        let mut r = self.builder(Theorem::Conjecture, &[a, b]);
        let h = self.generated(&[a]);
        r.fact("generated_order", h.order());
        self.solvable_check(&mut r, &h);
        Ok(r.finish())
    }

    pub fn conjecture_scan(&self) -> Vec<TheoremReport> {
        self.scan_hypotheses(&BTreeSet::from([HypothesisKind::KKinvEq1DDinv]))
            .into_iter()
            .map(|m| {
                self.verify_conjecture(m.class_ids[0], m.class_ids[1])
                    .expect("scan matches satisfy the hypothesis")
            })
            .collect()
    }

    /// With all of `xN` conjugate to `x` in `G`: `N` is solvable, and has a
    /// normal `p`-complement when `x` is a `p`-element.
    pub fn verify_theorem_2_1(
        &self,
        n: &FiniteGroup,
        x: &Permutation,
    ) -> Result<TheoremReport, TheoremError> {
        let t = self.table;
        let g = t.group();
        let xc = t
            .class_of_perm(x)
            .ok_or_else(|| GroupError::NotInGroup(x.to_string()))?;
        let not_met = || TheoremError::HypothesisNotMet {
            kind: HypothesisKind::CosetConjugate,
            classes: vec![xc],
        };
        match g.coset_all_conjugate(n, x) {
            Ok(true) => {}
            Ok(false) | Err(GroupError::NotNormal) => return Err(not_met()),
            Err(e) => return Err(e.into()),
        }
        let n_classes = t.classes_in(n);
        let mut r = self.builder(Theorem::T2_1, &[xc]);
        r.matched.normal_subgroup = Some(n_classes.iter().copied().collect());
        r.fact("normal_subgroup_order", n.order());
        self.solvable_check(&mut r, n);
        let ox = x.order();
        if let Some(p) = arith::prime_power_base(ox) {
            r.fact("p", p);
            self.p_nilpotent_check(&mut r, n, Some(p));
        } else {
            r.skipped = true;
            r.note(format!(
                "p-complement conclusion vacuous: x has order {ox}, not a prime power"
            ));
        }
        Ok(r.finish())
    }

    /// Runs the verifier of `theorem` on a scan match.
    pub fn verify_match(
        &self,
        theorem: Theorem,
        m: &HypothesisMatch,
    ) -> Result<TheoremReport, TheoremError> {
        let ids = &m.class_ids;
        let pair = || -> Result<(ClassId, ClassId), TheoremError> {
            match ids.as_slice() {
                &[a, b] => Ok((a, b)),
                _ => Err(TheoremError::HypothesisNotMet {
                    kind: m.kind,
                    classes: ids.clone(),
                }),
            }
        };
        let single = || -> Result<ClassId, TheoremError> {
            match ids.as_slice() {
                &[a] => Ok(a),
                _ => Err(TheoremError::HypothesisNotMet {
                    kind: m.kind,
                    classes: ids.clone(),
                }),
            }
        };
        match theorem {
            Theorem::A => pair().and_then(|(a, b)| self.verify_theorem_a(a, b)),
            Theorem::B => pair().and_then(|(a, b)| self.verify_theorem_b(a, b)),
            Theorem::C => single().and_then(|a| self.verify_theorem_c(a)),
            Theorem::T3_1 => single().and_then(|a| self.verify_theorem_3_1(a)),
            Theorem::Lemma2_2 => pair().and_then(|(a, b)| self.verify_lemma_2_2(a, b)),
            Theorem::Conjecture => pair().and_then(|(a, b)| self.verify_conjecture(a, b)),
            Theorem::T2_1 => {
                let x = single()?;
                self.check_id(x)?;
                let classes: BTreeSet<ClassId> = m
                    .normal_subgroup
                    .clone()
                    .unwrap_or_default()
                    .into_iter()
                    .chain([IDENTITY_CLASS])
                    .collect();
                for &c in &classes {
                    self.check_id(c)?;
                }
                let n = self.table.subgroup_of_classes(&classes);
                self.verify_theorem_2_1(&n, self.table.representative(x))
            }
        }
    }

    /// Scan for `kinds` and verify every match, in canonical order.
    pub fn sweep(&self, kinds: &BTreeSet<HypothesisKind>) -> Vec<TheoremReport> {
        self.scan_hypotheses(kinds)
            .iter()
            .flat_map(|m| {
                m.kind.theorems().iter().map(move |&th| {
                    self.verify_match(th, m)
                        .expect("scan matches satisfy their hypothesis")
                })
            })
            .collect()
    }
}
