use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::PermGroup;
use crate::perm::Perm;

/// One conjugacy class of a [`PermGroup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    representative: Perm,
    members: Vec<usize>,
    cycle_type: Vec<usize>,
}

impl ConjClass {
    /// Canonically least member.
    pub fn representative(&self) -> &Perm {
        &self.representative
    }

    /// Element indices into the owning group, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Cycle type in `S_n`, descending with fixed points included.
    pub fn cycle_type(&self) -> &[usize] {
        &self.cycle_type
    }

    pub fn index(&self) -> usize {
        self.cycle_type.iter().map(|l| l - 1).sum()
    }

    /// Stable human-readable label, e.g. `2.2@(1 4)(2 3)`.
    pub fn label(&self) -> String {
        let lengths: Vec<String> = self
            .cycle_type
            .iter()
            .filter(|&&l| l > 1)
            .map(|l| format!("{l}"))
            .collect();
        let shape = if lengths.is_empty() {
            String::from("1")
        } else {
            lengths.join(".")
        };
        format!("{shape}@{}", self.representative)
    }
}

/// All conjugacy classes of a group together with the element-to-class map.
///
/// Classes are ordered by cycle type (ascending as a partition, so the
/// identity class comes first) and then by representative.
#[derive(Clone, Debug)]
pub struct ClassTable {
    group: PermGroup,
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

impl ClassTable {
    pub fn new(group: &PermGroup) -> Self {
        let order = group.order();
        let mut raw: Vec<Vec<usize>> = Vec::new();
        let mut assigned = vec![false; order];
        for start in 0..order {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut members = vec![start];
            let mut cursor = 0;
            while cursor < members.len() {
                let x = group.element(members[cursor]).clone();
                cursor += 1;
                for g in group.generators() {
                    let y = group.index_of(&x.conjugate_by(g)).expect("closed");
                    if !assigned[y] {
                        assigned[y] = true;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        let mut classes: Vec<ConjClass> = raw
            .into_iter()
            .map(|members| {
                let representative = group.element(members[0]).clone();
                let cycle_type = representative.cycle_type();
                ConjClass {
                    representative,
                    members,
                    cycle_type,
                }
            })
            .collect();
        // the identity's cycle type 1.1...1 sorts before every other
        classes.sort_by(|a, b| {
            a.cycle_type
                .cmp(&b.cycle_type)
                .then_with(|| a.representative.cmp(&b.representative))
        });
        let mut class_of = vec![0u32; order];
        for (k, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = k as u32;
            }
        }
        ClassTable {
            group: group.clone(),
            classes,
            class_of,
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, k: usize) -> &ConjClass {
        &self.classes[k]
    }

    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    /// Class number of `p`, or `None` if `p` is outside the group.
    pub fn class_of(&self, p: &Perm) -> Option<usize> {
        self.group.index_of(p).map(|i| self.class_of_index(i))
    }

    pub fn same_class(&self, a: &Perm, b: &Perm) -> bool {
        match (self.class_of(a), self.class_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    /// Class by label (see [`ConjClass::label`]).
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label() == label)
    }
}

pub fn conjugacy_classes(group: &PermGroup) -> Vec<ConjClass> {
    ClassTable::new(group).classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_has_five_classes() {
        let s4 = PermGroup::symmetric(4, 100).unwrap();
        let t = ClassTable::new(&s4);
        assert_eq!(t.len(), 5);
        assert!(t.class(0).representative().is_identity());
        let sizes: Vec<usize> = t.classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 24);
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn dihedral_eight_classes() {
        let d4 = PermGroup::generate(
            4,
            &[
                Perm::parse("(1 4)(2 3)", 4).unwrap(),
                Perm::parse("(1 3)", 4).unwrap(),
            ],
            100,
        )
        .unwrap();
        let t = ClassTable::new(&d4);
        assert_eq!(t.len(), 5);
        let a = Perm::parse("(1 3)", 4).unwrap();
        let b = Perm::parse("(2 4)", 4).unwrap();
        let c = Perm::parse("(1 2)(3 4)", 4).unwrap();
        assert!(t.same_class(&a, &b));
        assert!(!t.same_class(&a, &c));
        let k = t.class_of(&a).unwrap();
        assert_eq!(t.find_label(&t.class(k).label()), Some(k));
        assert_eq!(t.class(k).label(), "2@(2 4)");
    }

    #[test]
    fn class_sizes_divide_order() {
        let s5 = PermGroup::symmetric(5, 200).unwrap();
        let t = ClassTable::new(&s5);
        assert_eq!(t.len(), 7);
        for c in t.classes() {
            assert_eq!(120 % c.size(), 0);
        }
    }
}
