use alloc::vec::Vec;

use crate::group::{ClassTable, GroupAutomorphism};
use crate::nielsen::{enumerate_nielsen, BranchTuple, Equivalence, NielsenClassSpec};
use crate::{Error, Result};

/// Branch cycles of `-f` when the four finite branch points form two
/// `ζ_2`-orbits `{1, 4}` and `{2, 3}`:
/// `(σ_4, σ_4⁻¹ σ_3 σ_4, σ_1 σ_2 σ_1⁻¹, σ_1)`.
pub fn modular_rotate(t: &BranchTuple) -> Result<BranchTuple> {
    if t.len() != 4 {
        return Err(Error::InvalidArgument(
            "two-orbit rotation is defined for four branch points".into(),
        ));
    }
    let e = t.entries();
    let t4_inv = e[3].inverse();
    let t1_inv = e[0].inverse();
    let entries = alloc::vec![
        e[3].clone(),
        &(&t4_inv * &e[2]) * &e[3],
        &(&e[0] * &e[1]) * &t1_inv,
        e[0].clone(),
    ];
    BranchTuple::new(entries, t.infinity_slot())
}

/// Inner classes of a four-point Nielsen class and whether each admits an
/// automorphism `γ` with `γ(t)` inner-equivalent to [`modular_rotate`]`(t)`.
#[derive(Clone, Debug)]
pub struct ModularPairing {
    pub inner_classes: Vec<BranchTuple>,
    /// Some automorphism pairs the class.
    pub paired: Vec<bool>,
    /// Some class-permuting (hence outer) automorphism pairs the class.
    pub paired_outer: Vec<bool>,
}

impl ModularPairing {
    pub fn paired_count(&self) -> usize {
        self.paired.iter().filter(|&&p| p).count()
    }

    pub fn paired_outer_count(&self) -> usize {
        self.paired_outer.iter().filter(|&&p| p).count()
    }
}

/// Every pairing `γ` has the form `conj(g) ∘ φ` with `φ: t ↦ rotate(t)`, so a
/// class pairs iff `φ` extends to an automorphism, and all its pairings act
/// on classes the way `φ` does.
pub fn modular_pairing(spec: &NielsenClassSpec) -> Result<ModularPairing> {
    let inner_spec = spec.clone().with_equivalence(Equivalence::Inner);
    let group = inner_spec.group().clone();
    let table = ClassTable::new(&group);
    let reps = enumerate_nielsen(&inner_spec)?.representatives;
    let mut paired = Vec::with_capacity(reps.len());
    let mut paired_outer = Vec::with_capacity(reps.len());
    for t in &reps {
        let rotated = modular_rotate(t)?;
        match GroupAutomorphism::from_assignment(&group, t.entries(), rotated.entries()) {
            Ok(phi) => {
                paired.push(true);
                paired_outer.push(!phi.is_class_preserving(&table));
            }
            Err(_) => {
                paired.push(false);
                paired_outer.push(false);
            }
        }
    }
    Ok(ModularPairing {
        inner_classes: reps,
        paired,
        paired_outer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::{dihedral_classes, dihedral_group, modular_tuple};
    use crate::nielsen::SlotOrder;

    fn modular_spec(n: usize) -> NielsenClassSpec {
        let g = dihedral_group(n).unwrap();
        let table = ClassTable::new(&g);
        let c = dihedral_classes(&table).unwrap();
        let classes = alloc::vec![
            c.reflections_odd,
            c.reflections_even,
            c.reflections_even,
            c.reflections_odd
        ];
        NielsenClassSpec::new(table, classes, Equivalence::Inner)
            .unwrap()
            .with_slot_order(SlotOrder::Slotwise)
    }

    #[test]
    fn rotation_keeps_product_one() {
        let t = modular_tuple(6).unwrap();
        let r = modular_rotate(&t).unwrap();
        assert!(r.satisfies_product_one());
        // applying it twice is conjugation by σ_1 σ_2 σ_3 σ_4-type words; at
        // least the classes come back slotwise
        let table = ClassTable::new(&dihedral_group(6).unwrap());
        for (a, b) in t.entries().iter().zip(r.entries()) {
            assert!(table.same_class(a, b));
        }
    }

    #[test]
    fn four_has_two_paired_classes() {
        let p = modular_pairing(&modular_spec(4)).unwrap();
        assert_eq!(p.inner_classes.len(), 2);
        assert_eq!(p.paired_count(), 2);
        assert_eq!(p.paired_outer_count(), 0);
    }

    #[test]
    fn larger_counts() {
        for (n, count) in [(6, 4), (8, 8)] {
            let p = modular_pairing(&modular_spec(n)).unwrap();
            assert_eq!(p.inner_classes.len(), count);
            assert_eq!(p.paired_count(), count);
        }
    }
}
