use alloc::vec::Vec;

use super::{ClassTable, PermGroup};
use crate::perm::for_each_permutation;
use crate::{Error, Result};

/// `N_{S_n}(G, ℂ)`: every `α ∈ S_n` normalizing `G` and permuting the class
/// multiset `classes` (class numbers in `table`, repeats allowed) while
/// preserving multiplicities. Brute force over `S_n`.
pub fn normalizer_in_symmetric(
    table: &ClassTable,
    classes: &[usize],
    brute_force_bound: usize,
) -> Result<PermGroup> {
    let group = table.group();
    let n = group.degree();
    if n > brute_force_bound {
        return Err(Error::BruteForceBound {
            degree: n,
            bound: brute_force_bound,
        });
    }
    let mut wanted: Vec<usize> = classes.to_vec();
    wanted.sort_unstable();
    let mut members = Vec::new();
    for_each_permutation(n, |alpha| {
        if !group
            .generators()
            .iter()
            .all(|g| group.contains(&g.conjugate_by(alpha)))
        {
            return;
        }
        let mut moved: Vec<usize> = wanted
            .iter()
            .map(|&k| {
                let rep = table.class(k).representative().conjugate_by(alpha);
                table.class_of(&rep).expect("α normalizes G")
            })
            .collect();
        moved.sort_unstable();
        if moved == wanted {
            members.push(alpha.clone());
        }
    });
    Ok(PermGroup::from_closed_elements(n, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    #[test]
    fn symmetric_group_is_self_normalizing() {
        let s4 = PermGroup::symmetric(4, 100).unwrap();
        let t = ClassTable::new(&s4);
        let n = normalizer_in_symmetric(&t, &[1, 2, 3], 8).unwrap();
        assert_eq!(n.order(), 24);
    }

    #[test]
    fn cyclic_three_with_both_classes() {
        let c3 = PermGroup::generate(3, &[Perm::parse("(1 2 3)", 3).unwrap()], 10).unwrap();
        let t = ClassTable::new(&c3);
        let a = t.class_of(&Perm::parse("(1 2 3)", 3).unwrap()).unwrap();
        let b = t.class_of(&Perm::parse("(1 3 2)", 3).unwrap()).unwrap();
        let n = normalizer_in_symmetric(&t, &[a, b], 8).unwrap();
        assert_eq!(n.order(), 6);
        // with one class only, the swap is excluded
        let n1 = normalizer_in_symmetric(&t, &[a], 8).unwrap();
        assert_eq!(n1.order(), 3);
    }

    #[test]
    fn bound_is_reported() {
        let c = PermGroup::generate(9, &[Perm::parse("(1 2 3 4 5 6 7 8 9)", 9).unwrap()], 10).unwrap();
        let t = ClassTable::new(&c);
        assert_eq!(
            normalizer_in_symmetric(&t, &[], 8).unwrap_err(),
            Error::BruteForceBound { degree: 9, bound: 8 }
        );
    }
}
