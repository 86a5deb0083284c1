//! Finite permutation groups enumerated by closure.
//!
//! All instances this crate cares about are tiny (orders in the thousands at
//! most), so groups are fully materialized: the element list is sorted in the
//! canonical lexicographic order and indexed by a hash map. Enumeration is
//! guarded by an explicit order bound so that oversized inputs fail loudly.

mod automorphism;
mod blocks;
mod classes;
mod coset;
mod normalizer;

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::{HashMap, HashSet};

use crate::perm::Perm;
use crate::{Error, Result};

pub use automorphism::{automorphisms, GroupAutomorphism};
pub use blocks::{blocks_containing, is_block, minimal_block};
pub use classes::{conjugacy_classes, ClassTable, ConjClass};
pub use coset::CosetAction;
pub use normalizer::normalizer_in_symmetric;

struct GroupData {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

/// A finite subgroup of `S_n` with all of its elements enumerated.
///
/// Cloning is cheap (shared storage). Element 0 is always the identity.
#[derive(Clone)]
pub struct PermGroup {
    data: Arc<GroupData>,
}

impl PermGroup {
    /// Closure of `gens` under products. An empty generator list yields the
    /// trivial group of the given degree.
    pub fn generate(degree: usize, gens: &[Perm], order_bound: usize) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(identity);
        let mut cursor = 0;
        while cursor < elements.len() {
            let x = elements[cursor].clone();
            cursor += 1;
            for g in gens {
                let y = &x * g;
                if !seen.contains(&y) {
                    if elements.len() >= order_bound {
                        return Err(Error::OrderBoundExceeded { bound: order_bound });
                    }
                    seen.insert(y.clone());
                    elements.push(y);
                }
            }
        }
        Ok(Self::from_parts(degree, gens.to_vec(), elements))
    }

    fn from_parts(degree: usize, generators: Vec<Perm>, mut elements: Vec<Perm>) -> Self {
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        PermGroup {
            data: Arc::new(GroupData {
                degree,
                generators,
                elements,
                index,
            }),
        }
    }

    /// Wraps an element set already known to be closed under products,
    /// choosing a generating set greedily in canonical order.
    pub(crate) fn from_closed_elements(degree: usize, elements: Vec<Perm>) -> Self {
        let mut sorted = elements;
        sorted.sort_unstable();
        let mut generators = Vec::new();
        let mut span: HashSet<Perm> = HashSet::new();
        span.insert(Perm::identity(degree));
        for x in &sorted {
            if span.contains(x) {
                continue;
            }
            generators.push(x.clone());
            // re-close; orders here are bounded by the parent group
            let closure = Self::generate(degree, &generators, usize::MAX)
                .expect("unbounded closure cannot fail");
            span = closure.elements().iter().cloned().collect();
        }
        Self::from_parts(degree, generators, sorted)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), vec![Perm::identity(degree)])
    }

    /// `S_n`, generated by an `n`-cycle and a transposition.
    pub fn symmetric(n: usize, order_bound: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            let cycle: Vec<usize> = (1..=n).collect();
            gens.push(Perm::from_cycles(n, &[&cycle])?);
            gens.push(Perm::from_cycles(n, &[&[1, 2]])?);
        }
        Self::generate(n, &gens, order_bound)
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.data.generators
    }

    /// Elements in canonical (lexicographic) order; index 0 is the identity.
    pub fn elements(&self) -> &[Perm] {
        &self.data.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.data.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.data.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree() && self.data.index.contains_key(p)
    }

    /// Index of the product `elements[i] * elements[j]`.
    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        let prod = self.element(i) * self.element(j);
        self.index_of(&prod).expect("group is closed under products")
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.contains(g))
    }

    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.data.elements == other.data.elements
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<PermGroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(Error::NotInGroup);
            }
        }
        Self::generate(self.degree(), gens, self.order())
    }

    /// Orbit of a 1-based letter, sorted.
    pub fn orbit(&self, letter: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut queue = vec![letter - 1];
        seen[letter - 1] = true;
        let mut cursor = 0;
        while cursor < queue.len() {
            let x = queue[cursor];
            cursor += 1;
            for g in self.generators() {
                let y = g.apply0(x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        let mut out: Vec<usize> = queue.into_iter().map(|x| x + 1).collect();
        out.sort_unstable();
        out
    }

    /// All orbits on letters, each sorted, ordered by least letter.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.degree()];
        let mut out = Vec::new();
        for letter in 1..=self.degree() {
            if done[letter - 1] {
                continue;
            }
            let orbit = self.orbit(letter);
            for &x in &orbit {
                done[x - 1] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(1).len() == self.degree()
    }

    /// `G(T, letter)`: elements fixing a 1-based letter.
    pub fn point_stabilizer(&self, letter: usize) -> PermGroup {
        let elements: Vec<Perm> = self
            .elements()
            .iter()
            .filter(|g| g.apply0(letter - 1) == letter - 1)
            .cloned()
            .collect();
        Self::from_closed_elements(self.degree(), elements)
    }

    /// True iff `h` (a subgroup) is normalized by every generator.
    pub fn is_normal_subgroup(&self, h: &PermGroup) -> bool {
        self.generators()
            .iter()
            .all(|g| h.generators().iter().all(|x| h.contains(&x.conjugate_by(g))))
    }

    /// `g H g⁻¹` for `g` normalizing the ambient degree.
    pub fn conjugate_subgroup(h: &PermGroup, g: &Perm) -> PermGroup {
        let elements = h.elements().iter().map(|x| x.conjugate_by(g)).collect();
        Self::from_closed_elements(h.degree(), elements)
    }

    /// Some `g ∈ self` with `g a g⁻¹ = b`, if one exists.
    pub fn conjugating_element(&self, a: &PermGroup, b: &PermGroup) -> Option<Perm> {
        if a.order() != b.order() {
            return None;
        }
        self.elements()
            .iter()
            .find(|g| a.generators().iter().all(|x| b.contains(&x.conjugate_by(g))))
            .cloned()
    }

    pub fn are_conjugate_subgroups(&self, a: &PermGroup, b: &PermGroup) -> bool {
        self.conjugating_element(a, b).is_some()
    }

    /// Centralizer of `x` inside the group.
    pub fn centralizer(&self, x: &Perm) -> PermGroup {
        let elements = self
            .elements()
            .iter()
            .filter(|g| &x.conjugate_by(g) == x)
            .cloned()
            .collect();
        Self::from_closed_elements(self.degree(), elements)
    }

    /// Every subgroup, by closing cyclic subgroups under joins. Meant for the
    /// small groups of the property suites.
    pub fn all_subgroups(&self) -> Vec<PermGroup> {
        let order = self.order();
        let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut groups: Vec<PermGroup> = Vec::new();
        let key = |h: &PermGroup| -> Vec<u32> {
            h.elements()
                .iter()
                .map(|e| self.index_of(e).unwrap() as u32)
                .collect()
        };
        let mut frontier = Vec::new();
        for x in self.elements() {
            let h = Self::generate(self.degree(), core::slice::from_ref(x), order)
                .expect("subgroup of a bounded group");
            if found.insert(key(&h)) {
                groups.push(h.clone());
                frontier.push(h);
            }
        }
        let cyclic: Vec<Perm> = self.elements().to_vec();
        while let Some(h) = frontier.pop() {
            for x in &cyclic {
                if h.contains(x) {
                    continue;
                }
                let mut gens = h.generators().to_vec();
                gens.push(x.clone());
                let joined = Self::generate(self.degree(), &gens, order)
                    .expect("subgroup of a bounded group");
                if found.insert(key(&joined)) {
                    groups.push(joined.clone());
                    frontier.push(joined);
                }
            }
        }
        groups.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements().cmp(b.elements()))
        });
        groups
    }

    /// Groups strictly between `h` and `self`, through block systems of the
    /// action on cosets of `h`. Empty iff that action is primitive.
    pub fn intermediate_subgroups(&self, h: &PermGroup) -> Result<Vec<PermGroup>> {
        let action = CosetAction::new(self, h)?;
        let blocks = blocks_containing(action.degree(), action.generator_images(), 0);
        let mut out: Vec<PermGroup> = blocks
            .into_iter()
            .map(|block| {
                let mut member = vec![false; action.degree()];
                for &c in &block {
                    member[c] = true;
                }
                let elements = self
                    .elements()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| member[action.coset_of_index(*i)])
                    .map(|(_, g)| g.clone())
                    .collect();
                Self::from_closed_elements(self.degree(), elements)
            })
            .collect();
        out.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements().cmp(b.elements()))
        });
        Ok(out)
    }

    /// A small generating set chosen greedily, largest element orders first.
    pub fn small_generating_set(&self) -> Vec<Perm> {
        let mut candidates: Vec<&Perm> = self.elements().iter().skip(1).collect();
        candidates.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.cmp(b)));
        let mut gens: Vec<Perm> = Vec::new();
        let mut span = Self::trivial(self.degree());
        for x in candidates {
            if span.order() == self.order() {
                break;
            }
            if span.contains(x) {
                continue;
            }
            gens.push(x.clone());
            span = Self::generate(self.degree(), &gens, self.order()).expect("bounded");
        }
        gens
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {}, gens [", self.degree(), self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_elements(other)
    }
}

impl Eq for PermGroup {}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    fn cheby4() -> PermGroup {
        PermGroup::generate(
            4,
            &[p("(1 4)(2 3)", 4), p("(1 3)", 4), p("(1 4 3 2)", 4)],
            100,
        )
        .unwrap()
    }

    #[test]
    fn generate_examples() {
        let c4 = PermGroup::generate(4, &[p("(1 2 3 4)", 4)], 100).unwrap();
        assert_eq!(c4.order(), 4);
        let s3 = PermGroup::generate(3, &[p("(1 2)", 3), p("(1 2 3)", 3)], 100).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(cheby4().order(), 8);
        assert_eq!(PermGroup::generate(5, &[], 10).unwrap().order(), 1);
        assert!(cheby4().element(0).is_identity());
    }

    #[test]
    fn order_bound_is_enforced() {
        let err = PermGroup::symmetric(5, 100).unwrap_err();
        assert_eq!(err, Error::OrderBoundExceeded { bound: 100 });
        assert_eq!(PermGroup::symmetric(5, 120).unwrap().order(), 120);
    }

    #[test]
    fn stabilizer_examples() {
        let c4 = PermGroup::generate(4, &[p("(1 2 3 4)", 4)], 100).unwrap();
        assert_eq!(c4.point_stabilizer(1).order(), 1);
        let d4 = cheby4();
        let st = d4.point_stabilizer(4);
        assert_eq!(st.order(), 2);
        assert!(st.contains(&p("(1 3)", 4)));
    }

    #[test]
    fn orbit_stabilizer_everywhere() {
        let s4 = PermGroup::symmetric(4, 100).unwrap();
        let groups = [cheby4(), s4];
        for g in groups {
            for letter in 1..=g.degree() {
                assert_eq!(g.order(), g.orbit(letter).len() * g.point_stabilizer(letter).order());
            }
        }
    }

    #[test]
    fn normality_examples() {
        let d4 = cheby4();
        let rot = d4.subgroup(&[p("(1 4 3 2)", 4)]).unwrap();
        assert!(d4.is_normal_subgroup(&rot));
        let s4 = PermGroup::symmetric(4, 100).unwrap();
        let c4 = s4.subgroup(&[p("(1 2 3 4)", 4)]).unwrap();
        assert!(!s4.is_normal_subgroup(&c4));
        let c6 = PermGroup::generate(6, &[p("(1 2 3 4 5 6)", 6)], 100).unwrap();
        for h in c6.all_subgroups() {
            assert!(c6.is_normal_subgroup(&h));
        }
    }

    #[test]
    fn intermediate_examples() {
        let s3 = PermGroup::symmetric(3, 10).unwrap();
        let h = s3.subgroup(&[p("(1 2)", 3)]).unwrap();
        assert!(s3.intermediate_subgroups(&h).unwrap().is_empty());

        let c4 = PermGroup::generate(4, &[p("(1 2 3 4)", 4)], 100).unwrap();
        let mids = c4.intermediate_subgroups(&PermGroup::trivial(4)).unwrap();
        assert_eq!(mids.len(), 1);
        assert_eq!(mids[0], c4.subgroup(&[p("(1 3)(2 4)", 4)]).unwrap());

        let d4 = cheby4();
        let s2 = d4.subgroup(&[p("(1 3)", 4)]).unwrap();
        let mids = d4.intermediate_subgroups(&s2).unwrap();
        assert_eq!(mids.len(), 1);
        let klein = d4
            .subgroup(&[p("(1 3)", 4), p("(1 3)(2 4)", 4), p("(2 4)", 4)])
            .unwrap();
        assert_eq!(mids[0], klein);
        assert_eq!(klein.order(), 4);
    }

    #[test]
    fn intermediate_matches_subgroup_scan() {
        let s4 = PermGroup::symmetric(4, 100).unwrap();
        let subs = s4.all_subgroups();
        assert_eq!(subs.len(), 30);
        for h in &subs {
            let mids = s4.intermediate_subgroups(h).unwrap();
            let brute: Vec<&PermGroup> = subs
                .iter()
                .filter(|k| {
                    k.order() > h.order()
                        && k.order() < s4.order()
                        && h.elements().iter().all(|x| k.contains(x))
                })
                .collect();
            assert_eq!(mids.len(), brute.len());
            for m in &mids {
                assert!(brute.contains(&m));
            }
        }
    }

    #[test]
    fn small_generating_set_generates() {
        let s4 = PermGroup::symmetric(4, 100).unwrap();
        for h in s4.all_subgroups() {
            let gens = h.small_generating_set();
            assert!(gens.len() <= 2);
            assert_eq!(PermGroup::generate(4, &gens, 100).unwrap(), h);
        }
    }
}
