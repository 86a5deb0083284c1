use alloc::vec;
use alloc::vec::Vec;

use super::PermGroup;
use crate::perm::Perm;
use crate::{Error, Result};

/// Left multiplication of `G` on the left cosets `G/H`.
///
/// Coset 0 is `H` itself; the rest are numbered in order of their
/// canonically least member.
#[derive(Clone, Debug)]
pub struct CosetAction {
    parent: PermGroup,
    subgroup: PermGroup,
    reps: Vec<Perm>,
    coset_of: Vec<u32>,
    generator_images: Vec<Perm>,
    faithful: bool,
}

impl CosetAction {
    pub fn new(parent: &PermGroup, subgroup: &PermGroup) -> Result<Self> {
        if !subgroup.is_subgroup_of(parent) {
            return Err(Error::NotSubgroup);
        }
        let order = parent.order();
        let mut coset_of = vec![u32::MAX; order];
        let mut reps = Vec::new();
        for i in 0..order {
            if coset_of[i] != u32::MAX {
                continue;
            }
            let k = reps.len() as u32;
            let g = parent.element(i).clone();
            for h in subgroup.elements() {
                let j = parent.index_of(&(&g * h)).expect("closed");
                coset_of[j] = k;
            }
            reps.push(g);
        }
        let mut action = CosetAction {
            parent: parent.clone(),
            subgroup: subgroup.clone(),
            reps,
            coset_of,
            generator_images: Vec::new(),
            faithful: false,
        };
        action.generator_images = parent
            .generators()
            .iter()
            .map(|g| action.act_unchecked(g))
            .collect();
        // the kernel is the core of H: h with r⁻¹ h r ∈ H for every rep r
        action.faithful = subgroup.elements().iter().skip(1).all(|h| {
            action
                .reps
                .iter()
                .any(|r| !subgroup.contains(&(&(&r.inverse() * h) * r)))
        });
        Ok(action)
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    /// Number of cosets.
    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Perm] {
        &self.reps
    }

    /// 0-based coset containing the element with index `i`.
    pub fn coset_of_index(&self, i: usize) -> usize {
        self.coset_of[i] as usize
    }

    pub fn coset_of(&self, g: &Perm) -> Option<usize> {
        self.parent.index_of(g).map(|i| self.coset_of_index(i))
    }

    fn act_unchecked(&self, g: &Perm) -> Perm {
        let images = self
            .reps
            .iter()
            .map(|r| self.coset_of(&(g * r)).expect("closed") as u32)
            .collect();
        Perm::from_raw(images)
    }

    /// Permutation of the cosets induced by `g`.
    pub fn act(&self, g: &Perm) -> Result<Perm> {
        if !self.parent.contains(g) {
            return Err(Error::NotInGroup);
        }
        Ok(self.act_unchecked(g))
    }

    /// Images of the parent's generators, in order.
    pub fn generator_images(&self) -> &[Perm] {
        &self.generator_images
    }

    /// True iff the action has trivial kernel.
    pub fn is_faithful(&self) -> bool {
        self.faithful
    }

    /// Image of the parent in `S_{[G:H]}`.
    pub fn image_group(&self, order_bound: usize) -> Result<PermGroup> {
        PermGroup::generate(self.degree(), &self.generator_images, order_bound)
    }

    /// Number of cosets fixed by `g`.
    pub fn trace(&self, g: &Perm) -> Result<usize> {
        Ok(self.act(g)?.fixed_points())
    }
}
