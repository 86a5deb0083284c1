use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ClassTable, PermGroup};
use crate::perm::Perm;
use crate::{Error, Result};

/// An automorphism of a materialized group, stored as its full element table.
#[derive(Clone, Debug)]
pub struct GroupAutomorphism {
    domain: PermGroup,
    generator_images: Vec<Perm>,
    table: Vec<u32>,
}

impl PartialEq for GroupAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.table == other.table
    }
}

impl Eq for GroupAutomorphism {}

impl GroupAutomorphism {
    /// Extends `generators[i] ↦ images[i]` to all of `G`, checking the
    /// homomorphism property on every edge of the Cayley graph and
    /// bijectivity. `generators` must generate `G`.
    pub fn from_assignment(group: &PermGroup, generators: &[Perm], images: &[Perm]) -> Result<Self> {
        if generators.len() != images.len() {
            return Err(Error::NotAutomorphism(format!(
                "{} generators but {} images",
                generators.len(),
                images.len()
            )));
        }
        let mut gen_idx = Vec::with_capacity(generators.len());
        let mut img_idx = Vec::with_capacity(images.len());
        for (g, x) in generators.iter().zip(images) {
            gen_idx.push(group.index_of(g).ok_or(Error::NotInGroup)?);
            img_idx.push(group.index_of(x).ok_or(Error::NotInGroup)?);
        }
        let order = group.order();
        let mut table = vec![u32::MAX; order];
        table[0] = 0;
        let mut queue = vec![0usize];
        let mut cursor = 0;
        while cursor < queue.len() {
            let x = queue[cursor];
            cursor += 1;
            let fx = table[x] as usize;
            for (&g, &fg) in gen_idx.iter().zip(&img_idx) {
                let y = group.mul_index(x, g);
                let fy = group.mul_index(fx, fg) as u32;
                if table[y] == u32::MAX {
                    table[y] = fy;
                    queue.push(y);
                } else if table[y] != fy {
                    return Err(Error::NotAutomorphism(
                        "assignment violates a relation".into(),
                    ));
                }
            }
        }
        if queue.len() != order {
            return Err(Error::NotAutomorphism(
                "given elements do not generate the group".into(),
            ));
        }
        let mut hit = vec![false; order];
        for &t in &table {
            if hit[t as usize] {
                return Err(Error::NotAutomorphism("not injective".into()));
            }
            hit[t as usize] = true;
        }
        let generator_images = group
            .generators()
            .iter()
            .map(|g| group.element(table[group.index_of(g).unwrap()] as usize).clone())
            .collect();
        Ok(GroupAutomorphism {
            domain: group.clone(),
            generator_images,
            table,
        })
    }

    /// Automorphism with `G.generators()[i] ↦ images[i]`.
    pub fn from_images(group: &PermGroup, images: &[Perm]) -> Result<Self> {
        Self::from_assignment(group, group.generators(), images)
    }

    pub fn identity(group: &PermGroup) -> Self {
        GroupAutomorphism {
            domain: group.clone(),
            generator_images: group.generators().to_vec(),
            table: (0..group.order() as u32).collect(),
        }
    }

    /// `x ↦ g x g⁻¹` for any `g ∈ S_n` normalizing the group.
    pub fn conjugation(group: &PermGroup, g: &Perm) -> Result<Self> {
        let mut table = Vec::with_capacity(group.order());
        for x in group.elements() {
            let y = x.conjugate_by(g);
            table.push(group.index_of(&y).ok_or_else(|| {
                Error::NotAutomorphism(format!("{g} does not normalize the group"))
            })? as u32);
        }
        let generator_images = group.generators().iter().map(|x| x.conjugate_by(g)).collect();
        Ok(GroupAutomorphism {
            domain: group.clone(),
            generator_images,
            table,
        })
    }

    pub fn domain(&self) -> &PermGroup {
        &self.domain
    }

    pub fn generator_images(&self) -> &[Perm] {
        &self.generator_images
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.table[i] as usize
    }

    pub fn apply(&self, x: &Perm) -> Result<Perm> {
        let i = self.domain.index_of(x).ok_or(Error::NotInGroup)?;
        Ok(self.domain.element(self.apply_index(i)).clone())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        let table: Vec<u32> = other.table.iter().map(|&i| self.table[i as usize]).collect();
        self.with_table(table)
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        let mut table = vec![0u32; self.table.len()];
        for (i, &t) in self.table.iter().enumerate() {
            table[t as usize] = i as u32;
        }
        self.with_table(table)
    }

    pub fn pow(&self, k: i64) -> GroupAutomorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(&self.domain);
        for _ in 0..k.unsigned_abs() {
            acc = base.compose(&acc);
        }
        acc
    }

    fn with_table(&self, table: Vec<u32>) -> GroupAutomorphism {
        let generator_images = self
            .domain
            .generators()
            .iter()
            .map(|g| {
                let i = self.domain.index_of(g).unwrap();
                self.domain.element(table[i] as usize).clone()
            })
            .collect();
        GroupAutomorphism {
            domain: self.domain.clone(),
            generator_images,
            table,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &t)| i == t as usize)
    }

    /// True iff this equals conjugation by `g` (which may lie outside `G`).
    pub fn is_conjugation_by(&self, g: &Perm) -> bool {
        self.domain
            .generators()
            .iter()
            .zip(&self.generator_images)
            .all(|(x, y)| &x.conjugate_by(g) == y)
    }

    /// Some `g ∈ G` inducing this automorphism, if it is inner.
    pub fn inner_witness(&self) -> Option<Perm> {
        self.domain
            .elements()
            .iter()
            .find(|g| self.is_conjugation_by(g))
            .cloned()
    }

    /// Image of a subgroup.
    pub fn image_of_subgroup(&self, h: &PermGroup) -> Result<PermGroup> {
        let mut elements = Vec::with_capacity(h.order());
        for x in h.elements() {
            elements.push(self.apply(x)?);
        }
        Ok(PermGroup::from_closed_elements(h.degree(), elements))
    }

    /// Whether each class is mapped to itself, and the induced permutation of
    /// class numbers (`perm[k]` is the class receiving class `k`).
    pub fn class_permutation(&self, classes: &ClassTable) -> (bool, Vec<usize>) {
        let perm: Vec<usize> = classes
            .classes()
            .iter()
            .map(|c| classes.class_of_index(self.apply_index(c.members()[0])))
            .collect();
        let preserving = perm.iter().enumerate().all(|(k, &j)| k == j);
        (preserving, perm)
    }

    pub fn is_class_preserving(&self, classes: &ClassTable) -> bool {
        self.class_permutation(classes).0
    }
}

/// Every automorphism of `G`, by scanning images of a small generating set
/// over elements of matching order. Exponential in the number of generators;
/// for the small groups of the property suites.
pub fn automorphisms(group: &PermGroup) -> Vec<GroupAutomorphism> {
    let gens = group.small_generating_set();
    let by_order: Vec<Vec<&Perm>> = gens
        .iter()
        .map(|g| {
            let o = g.order();
            group.elements().iter().filter(|x| x.order() == o).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if gens.is_empty() {
        return vec![GroupAutomorphism::identity(group)];
    }
    loop {
        let images: Vec<Perm> = choice
            .iter()
            .zip(&by_order)
            .map(|(&c, pool)| pool[c].clone())
            .collect();
        if let Ok(a) = GroupAutomorphism::from_assignment(group, &gens, &images) {
            out.push(a);
        }
        let mut k = 0;
        loop {
            choice[k] += 1;
            if choice[k] < by_order[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
            if k == gens.len() {
                return out;
            }
        }
    }
}
