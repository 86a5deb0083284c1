//! Branch-cycle tuples and Nielsen classes.
//!
//! A tuple `(σ_1, .., σ_r)` describes a cover of the sphere by its local
//! monodromy. The Nielsen class `ni(G, ℂ)` collects all tuples with
//! product one, generating `G`, and with entries in the classes `ℂ`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{normalizer_in_symmetric, ClassTable, GroupAutomorphism, PermGroup};
use crate::perm::Perm;
use crate::{Error, Result, DEFAULT_BRUTE_FORCE_DEGREE};

/// An ordered tuple of permutations of a common degree, optionally with one
/// slot marked as the branch cycle over infinity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchTuple {
    degree: usize,
    entries: Vec<Perm>,
    infinity_slot: Option<usize>,
}

impl BranchTuple {
    /// `infinity_slot` is 0-based.
    pub fn new(entries: Vec<Perm>, infinity_slot: Option<usize>) -> Result<Self> {
        let degree = entries
            .first()
            .map(Perm::degree)
            .ok_or_else(|| Error::MalformedTuple("empty tuple".into()))?;
        for e in &entries {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: e.degree(),
                });
            }
        }
        if let Some(s) = infinity_slot {
            if s >= entries.len() {
                return Err(Error::MalformedTuple(format!(
                    "infinity slot {} out of range",
                    s + 1
                )));
            }
        }
        Ok(BranchTuple {
            degree,
            entries,
            infinity_slot,
        })
    }

    /// Tuple with the last entry marked as `σ_∞`.
    pub fn with_infinity_last(entries: Vec<Perm>) -> Result<Self> {
        let last = entries.len().checked_sub(1);
        Self::new(entries, last)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[Perm] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn infinity_slot(&self) -> Option<usize> {
        self.infinity_slot
    }

    pub fn sigma_infinity(&self) -> Option<&Perm> {
        self.infinity_slot.map(|s| &self.entries[s])
    }

    /// `σ_1 ⋯ σ_r` (functional product).
    pub fn product(&self) -> Perm {
        self.entries
            .iter()
            .fold(Perm::identity(self.degree), |acc, x| &acc * x)
    }

    pub fn satisfies_product_one(&self) -> bool {
        self.product().is_identity()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.entries.iter().map(Perm::index).collect()
    }

    pub fn index_sum(&self) -> usize {
        self.entries.iter().map(Perm::index).sum()
    }

    /// Transitivity of `⟨entries⟩` on the letters, without enumerating the
    /// group.
    pub fn is_transitive(&self) -> bool {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for e in &self.entries {
                let y = e.apply0(x);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    pub fn generated_group(&self, order_bound: usize) -> Result<PermGroup> {
        PermGroup::generate(self.degree, &self.entries, order_bound)
    }

    /// Genus from Riemann-Hurwitz: `2(n + g - 1) = Σ ind(σ_i)`.
    pub fn genus(&self) -> Result<usize> {
        if !self.satisfies_product_one() {
            return Err(Error::MalformedTuple("product-one fails".into()));
        }
        if !self.is_transitive() {
            return Err(Error::MalformedTuple("entries are not transitive".into()));
        }
        let sum = self.index_sum();
        if !sum.is_multiple_of(2) {
            return Err(Error::MalformedTuple(format!("index sum {sum} is odd")));
        }
        let base = 2 * (self.degree - 1);
        if sum < base {
            return Err(Error::MalformedTuple(format!(
                "index sum {sum} below 2(n-1) = {base}"
            )));
        }
        Ok((sum - base) / 2)
    }

    /// Simultaneous conjugation `x ↦ g x g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> BranchTuple {
        BranchTuple {
            degree: self.degree,
            entries: self.entries.iter().map(|x| x.conjugate_by(g)).collect(),
            infinity_slot: self.infinity_slot,
        }
    }

    /// Entry-wise image under an automorphism.
    pub fn map_automorphism(&self, gamma: &GroupAutomorphism) -> Result<BranchTuple> {
        let entries = self
            .entries
            .iter()
            .map(|x| gamma.apply(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(BranchTuple {
            degree: self.degree,
            entries,
            infinity_slot: self.infinity_slot,
        })
    }

    /// Concatenated 0-based image tables; the order used for canonical forms.
    pub fn key(&self) -> Vec<u32> {
        self.entries.iter().flat_map(|e| e.raw().iter().copied()).collect()
    }

    /// Lexicographically least conjugate under `acting`.
    pub fn canonical_under(&self, acting: &[Perm]) -> BranchTuple {
        let mut best = self.clone();
        let mut best_key = self.key();
        for g in acting {
            let c = self.conjugate_by(g);
            let k = c.key();
            if k < best_key {
                best_key = k;
                best = c;
            }
        }
        best
    }

    /// Some `g ∈ acting` with `g·self·g⁻¹ = other`.
    pub fn conjugator_to(&self, other: &BranchTuple, acting: &[Perm]) -> Option<Perm> {
        if self.len() != other.len() || self.degree != other.degree {
            return None;
        }
        acting
            .iter()
            .find(|g| {
                self.entries
                    .iter()
                    .zip(&other.entries)
                    .all(|(x, y)| &x.conjugate_by(g) == y)
            })
            .cloned()
    }
}

impl fmt::Display for BranchTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for BranchTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BranchTuple{self}")?;
        if let Some(s) = self.infinity_slot {
            write!(f, "@{}", s + 1)?;
        }
        Ok(())
    }
}

/// Which conjugations identify two tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equivalence {
    /// Modulo `N_{S_n}(G, ℂ)`.
    Absolute,
    /// Modulo `G`.
    Inner,
}

/// How the class list constrains slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlotOrder {
    /// The class list is a multiset; any ordering of it is allowed.
    Multiset,
    /// Entry `i` must lie in class `i`.
    Slotwise,
}

/// `(G, ℂ)` together with the equivalence used to count classes.
#[derive(Clone, Debug)]
pub struct NielsenClassSpec {
    table: ClassTable,
    classes: Vec<usize>,
    equivalence: Equivalence,
    slot_order: SlotOrder,
    brute_force_degree: usize,
}

impl NielsenClassSpec {
    pub fn new(table: ClassTable, classes: Vec<usize>, equivalence: Equivalence) -> Result<Self> {
        if let Some(&bad) = classes.iter().find(|&&k| k >= table.len()) {
            return Err(Error::InvalidArgument(format!("no class number {bad}")));
        }
        Ok(NielsenClassSpec {
            table,
            classes,
            equivalence,
            slot_order: SlotOrder::Multiset,
            brute_force_degree: DEFAULT_BRUTE_FORCE_DEGREE,
        })
    }

    /// Spec whose classes are those of the entries of `t`, in order.
    pub fn from_tuple(group: &PermGroup, t: &BranchTuple, equivalence: Equivalence) -> Result<Self> {
        let table = ClassTable::new(group);
        let classes = t
            .entries()
            .iter()
            .map(|e| table.class_of(e).ok_or(Error::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Self::new(table, classes, equivalence)
    }

    pub fn with_slot_order(mut self, order: SlotOrder) -> Self {
        self.slot_order = order;
        self
    }

    pub fn with_equivalence(mut self, equivalence: Equivalence) -> Self {
        self.equivalence = equivalence;
        self
    }

    pub fn with_brute_force_degree(mut self, bound: usize) -> Self {
        self.brute_force_degree = bound;
        self
    }

    pub fn group(&self) -> &PermGroup {
        self.table.group()
    }

    pub fn table(&self) -> &ClassTable {
        &self.table
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn equivalence(&self) -> Equivalence {
        self.equivalence
    }

    pub fn slot_order(&self) -> SlotOrder {
        self.slot_order
    }

    /// The group whose conjugation defines equivalence. For absolute
    /// equivalence beyond the brute-force degree this falls back to `G`;
    /// the flag reports the fallback.
    pub fn acting_group(&self) -> Result<(PermGroup, bool)> {
        match self.equivalence {
            Equivalence::Inner => Ok((self.group().clone(), false)),
            Equivalence::Absolute => {
                match normalizer_in_symmetric(&self.table, &self.classes, self.brute_force_degree) {
                    Ok(n) => Ok((n, false)),
                    Err(Error::BruteForceBound { .. }) => Ok((self.group().clone(), true)),
                    Err(e) => Err(e),
                }
            }
        }
    }

    fn class_orderings(&self) -> Vec<Vec<usize>> {
        match self.slot_order {
            SlotOrder::Slotwise => vec![self.classes.clone()],
            SlotOrder::Multiset => {
                let mut current = self.classes.clone();
                current.sort_unstable();
                let mut out = vec![current.clone()];
                while next_permutation(&mut current) {
                    out.push(current.clone());
                }
                out
            }
        }
    }

    fn classes_match(&self, t: &BranchTuple) -> bool {
        let Some(mut got) = t
            .entries()
            .iter()
            .map(|e| self.table.class_of(e))
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        match self.slot_order {
            SlotOrder::Slotwise => got == self.classes,
            SlotOrder::Multiset => {
                let mut want = self.classes.clone();
                got.sort_unstable();
                want.sort_unstable();
                got == want
            }
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// First failed Nielsen condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NielsenFailure {
    DegreeMismatch,
    ProductOne,
    Generation,
    Classes,
}

impl fmt::Display for NielsenFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NielsenFailure::DegreeMismatch => "degree mismatch",
            NielsenFailure::ProductOne => "product-one fails",
            NielsenFailure::Generation => "entries do not generate G",
            NielsenFailure::Classes => "entry classes differ from the class multiset",
        })
    }
}

/// Checks product-one, generation of exactly `G` and the class condition.
pub fn verify_nielsen(t: &BranchTuple, spec: &NielsenClassSpec) -> core::result::Result<(), NielsenFailure> {
    let g = spec.group();
    if t.degree() != g.degree() || t.len() != spec.classes.len() {
        return Err(NielsenFailure::DegreeMismatch);
    }
    if !t.satisfies_product_one() {
        return Err(NielsenFailure::ProductOne);
    }
    if !t.entries().iter().all(|e| g.contains(e)) {
        return Err(NielsenFailure::Generation);
    }
    match t.generated_group(g.order()) {
        Ok(h) if h.order() == g.order() => {}
        _ => return Err(NielsenFailure::Generation),
    }
    if !spec.classes_match(t) {
        return Err(NielsenFailure::Classes);
    }
    Ok(())
}

/// Genus-zero tuple with an `n`-cycle entry; returns that slot (0-based),
/// preferring the last one.
pub fn is_polynomial_tuple(t: &BranchTuple) -> Option<usize> {
    if t.genus().ok()? != 0 {
        return None;
    }
    (0..t.len()).rev().find(|&i| t.entries()[i].is_n_cycle())
}

/// Canonical representatives of a Nielsen class.
#[derive(Clone, Debug)]
pub struct NielsenEnumeration {
    pub representatives: Vec<BranchTuple>,
    /// Number of tuples before quotienting.
    pub tuple_count: usize,
    pub acting_group: PermGroup,
    /// Absolute equivalence fell back to conjugation by `G`.
    pub fallback_to_inner: bool,
}

impl NielsenEnumeration {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Every tuple of the Nielsen class up to the requested equivalence, in
/// canonical order. The last entry is marked as infinity.
pub fn enumerate_nielsen(spec: &NielsenClassSpec) -> Result<NielsenEnumeration> {
    let (acting_group, fallback_to_inner) = spec.acting_group()?;
    let acting = acting_group.elements();
    let g = spec.group();
    let table = spec.table();
    let r = spec.classes.len();
    let mut seen: BTreeSet<BranchTuple> = BTreeSet::new();
    let mut tuple_count = 0usize;
    if r == 0 {
        return Ok(NielsenEnumeration {
            representatives: Vec::new(),
            tuple_count,
            acting_group,
            fallback_to_inner,
        });
    }
    for ordering in spec.class_orderings() {
        let pools: Vec<Vec<&Perm>> = ordering
            .iter()
            .map(|&k| table.class(k).members().iter().map(|&i| g.element(i)).collect())
            .collect();
        let last_class = ordering[r - 1];
        let mut choice = vec![0usize; r - 1];
        loop {
            let mut entries: Vec<Perm> = choice
                .iter()
                .zip(&pools)
                .map(|(&c, pool)| pool[c].clone())
                .collect();
            let partial = entries
                .iter()
                .fold(Perm::identity(g.degree()), |acc, x| &acc * x);
            let last = partial.inverse();
            if table.class_of(&last) == Some(last_class) {
                entries.push(last);
                let t = BranchTuple::with_infinity_last(entries)?;
                if t.generated_group(g.order())
                    .map(|h| h.order() == g.order())
                    .unwrap_or(false)
                {
                    tuple_count += 1;
                    seen.insert(t.canonical_under(acting));
                }
            }
            // odometer over the first r-1 slots
            let mut k = 0;
            loop {
                if k == r - 1 {
                    break;
                }
                choice[k] += 1;
                if choice[k] < pools[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == r - 1 {
                break;
            }
        }
    }
    let mut representatives: Vec<BranchTuple> = seen.into_iter().collect();
    representatives.sort_by_key(|a| a.key());
    Ok(NielsenEnumeration {
        representatives,
        tuple_count,
        acting_group,
        fallback_to_inner,
    })
}

/// The canonical map from inner classes to absolute classes.
#[derive(Clone, Debug)]
pub struct EquivalenceMap {
    pub inner: Vec<BranchTuple>,
    pub absolute: Vec<BranchTuple>,
    /// `map[i]` is the absolute class of inner class `i`.
    pub map: Vec<usize>,
    /// Size of each fiber, indexed by absolute class.
    pub fibers: Vec<usize>,
}

impl EquivalenceMap {
    pub fn is_surjective(&self) -> bool {
        self.fibers.iter().all(|&f| f > 0)
    }

    pub fn is_bijective(&self) -> bool {
        self.fibers.iter().all(|&f| f == 1)
    }
}

pub fn equivalence_class_map(spec: &NielsenClassSpec) -> Result<EquivalenceMap> {
    let inner_spec = spec.clone().with_equivalence(Equivalence::Inner);
    let abs_spec = spec.clone().with_equivalence(Equivalence::Absolute);
    let inner = enumerate_nielsen(&inner_spec)?;
    let absolute = enumerate_nielsen(&abs_spec)?;
    let acting = absolute.acting_group.elements();
    let mut map = Vec::with_capacity(inner.count());
    let mut fibers = vec![0usize; absolute.count()];
    for t in &inner.representatives {
        let c = t.canonical_under(acting);
        let k = absolute
            .representatives
            .iter()
            .position(|a| *a == c)
            .ok_or_else(|| Error::NoSolution("inner class without absolute image".into()))?;
        map.push(k);
        fibers[k] += 1;
    }
    Ok(EquivalenceMap {
        inner: inner.representatives,
        absolute: absolute.representatives,
        map,
        fibers,
    })
}

/// Branch cycles of `ζ_v f` from those of `f` when `ζ_v` has one orbit on the
/// finite branch points: `(σ_2, .., σ_{r-1}, σ_1, σ_1⁻¹ σ_r σ_1)`.
pub fn rotate_tuple(t: &BranchTuple) -> Result<BranchTuple> {
    let r = t.len();
    if r < 3 {
        return Err(Error::InvalidArgument(format!(
            "rotation needs at least 3 entries, got {r}"
        )));
    }
    if t.infinity_slot() != Some(r - 1) {
        return Err(Error::InvalidArgument("infinity slot must be last".into()));
    }
    let e = t.entries();
    let s1 = &e[0];
    let mut entries: Vec<Perm> = e[1..r - 1].to_vec();
    entries.push(s1.clone());
    entries.push(&(&s1.inverse() * &e[r - 1]) * s1);
    BranchTuple::with_infinity_last(entries)
}

/// How multiplication by `ζ_v` permutes the finite branch-point slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSlotMap {
    v: usize,
    slot_permutation: Perm,
}

impl BranchSlotMap {
    /// Finite points at the vertices of a regular `v`-gon: one orbit, the
    /// slot map is `(1 2 .. v)`.
    pub fn one_orbit(v: usize) -> Result<Self> {
        if v < 2 {
            return Err(Error::InvalidArgument("v must be at least 2".into()));
        }
        let cycle: Vec<usize> = (1..=v).collect();
        Ok(BranchSlotMap {
            v,
            slot_permutation: Perm::from_cycles(v, &[&cycle])?,
        })
    }

    /// Arbitrary slot map; every cycle must have length `v`.
    pub fn new(v: usize, slot_permutation: Perm) -> Result<Self> {
        if v < 2 || slot_permutation.cycles().iter().any(|c| c.len() != v) {
            return Err(Error::InvalidArgument(
                "slot map cycles must all have length v".into(),
            ));
        }
        Ok(BranchSlotMap { v, slot_permutation })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn slot_permutation(&self) -> &Perm {
        &self.slot_permutation
    }

    pub fn orbit_count(&self) -> usize {
        self.slot_permutation.cycles().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    fn cheby4() -> BranchTuple {
        BranchTuple::with_infinity_last(vec![p("(1 4)(2 3)", 4), p("(1 3)", 4), p("(1 4 3 2)", 4)])
            .unwrap()
    }

    #[test]
    fn cheby_tuple_basics() {
        let t = cheby4();
        assert!(t.satisfies_product_one());
        assert_eq!(t.indices(), vec![2, 1, 3]);
        assert_eq!(t.genus().unwrap(), 0);
        assert_eq!(is_polynomial_tuple(&t), Some(2));
    }

    #[test]
    fn verify_examples() {
        let t = cheby4();
        let g = t.generated_group(100).unwrap();
        let spec = NielsenClassSpec::from_tuple(&g, &t, Equivalence::Absolute).unwrap();
        assert_eq!(verify_nielsen(&t, &spec), Ok(()));
        let s1 = t.entries()[0].clone();
        let bad = BranchTuple::with_infinity_last(vec![s1.clone(), s1, Perm::identity(4)]).unwrap();
        assert_eq!(verify_nielsen(&bad, &spec), Err(NielsenFailure::Generation));
        let e = t.entries();
        let broken = BranchTuple::with_infinity_last(vec![
            e[0].clone(),
            e[1].clone(),
            &e[2].inverse() * &p("(1 2)", 4),
        ])
        .unwrap();
        assert_eq!(verify_nielsen(&broken, &spec), Err(NielsenFailure::ProductOne));
    }

    #[test]
    fn genus_errors() {
        let c = p("(1 2 3 4)", 4);
        let t = BranchTuple::with_infinity_last(vec![c.clone(), c.inverse()]).unwrap();
        assert_eq!(t.genus().unwrap(), 0);
        assert_eq!(is_polynomial_tuple(&t), Some(1));
        let not_transitive =
            BranchTuple::with_infinity_last(vec![p("(1 2)", 4), p("(1 2)", 4)]).unwrap();
        assert!(not_transitive.genus().is_err());
    }

    #[test]
    fn dihedral_four_has_six_absolute_classes() {
        let t = cheby4();
        let g = t.generated_group(100).unwrap();
        let spec = NielsenClassSpec::from_tuple(&g, &t, Equivalence::Absolute).unwrap();
        let e = enumerate_nielsen(&spec).unwrap();
        assert_eq!(e.count(), 6);
        assert_eq!(e.acting_group.order(), 8);
        for rep in &e.representatives {
            assert_eq!(verify_nielsen(rep, &spec), Ok(()));
        }
        let m = equivalence_class_map(&spec).unwrap();
        assert!(m.is_surjective());
        assert_eq!(m.fibers.iter().sum::<usize>(), m.inner.len());
    }

    #[test]
    fn cyclic_pair_is_one_absolute_class() {
        let c = p("(1 2 3 4 5)", 5);
        let g = PermGroup::generate(5, core::slice::from_ref(&c), 10).unwrap();
        let t = BranchTuple::with_infinity_last(vec![c.clone(), c.inverse()]).unwrap();
        let spec = NielsenClassSpec::from_tuple(&g, &t, Equivalence::Absolute).unwrap();
        assert_eq!(enumerate_nielsen(&spec).unwrap().count(), 1);
        let inner = spec.clone().with_equivalence(Equivalence::Inner);
        assert_eq!(enumerate_nielsen(&inner).unwrap().count(), 2);
    }

    #[test]
    fn impossible_spec_is_empty() {
        let g = PermGroup::symmetric(3, 10).unwrap();
        let table = ClassTable::new(&g);
        let k = table.class_of(&p("(1 2)", 3)).unwrap();
        let spec = NielsenClassSpec::new(table, vec![k], Equivalence::Inner).unwrap();
        assert_eq!(enumerate_nielsen(&spec).unwrap().count(), 0);
    }

    #[test]
    fn rotation_example() {
        let t = cheby4();
        let r = rotate_tuple(&t).unwrap();
        assert!(r.satisfies_product_one());
        assert_eq!(r.entries()[0], t.entries()[1]);
        assert_eq!(r.entries()[1], t.entries()[0]);
        // affine x ↦ x + 1 on residues, letter 4 = residue 0
        assert_eq!(r.entries()[2], p("(1 2 3 4)", 4));
        let mut back = r.clone();
        for _ in 1..2 {
            back = rotate_tuple(&back).unwrap();
        }
        assert_eq!(back, t);
    }

    #[test]
    fn rotation_rejects_bad_shapes() {
        let c = p("(1 2 3)", 3);
        let two = BranchTuple::with_infinity_last(vec![c.clone(), c.inverse()]).unwrap();
        assert!(rotate_tuple(&two).is_err());
        let first =
            BranchTuple::new(vec![c.clone(), c.clone(), c.clone()], Some(0)).unwrap();
        assert!(rotate_tuple(&first).is_err());
    }

    #[test]
    fn slot_maps() {
        let m = BranchSlotMap::one_orbit(3).unwrap();
        assert_eq!(m.slot_permutation(), &p("(1 2 3)", 3));
        assert_eq!(m.orbit_count(), 1);
        let two = BranchSlotMap::new(2, p("(1 4)(2 3)", 4)).unwrap();
        assert_eq!(two.orbit_count(), 2);
        assert!(BranchSlotMap::new(2, p("(1 2 3)", 4)).is_err());
    }
}
