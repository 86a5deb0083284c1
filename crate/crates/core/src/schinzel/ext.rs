use alloc::vec::Vec;

use crate::group::{CosetAction, GroupAutomorphism, PermGroup};
use crate::perm::{for_each_permutation, Perm};
use crate::{Error, Result};

/// Element `(σ*)^j σ` of the extension group, with `σ` stored as its index
/// in the base group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElem {
    pub j: usize,
    pub sigma: usize,
}

/// `G* = ⋃_j (σ*)^j G` where conjugation by `σ*` acts on `G` as `γ` and
/// `(σ*)^v = σ_∞`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    base: PermGroup,
    v: usize,
    gamma: GroupAutomorphism,
    sigma_infinity: usize,
    /// `inverse_powers[k]` is `γ^{-k}` as an index table.
    inverse_powers: Vec<Vec<u32>>,
}

/// Checks `γ(σ_∞) = σ_∞` and `γ^v = conjugation by σ_∞`, then builds `G*`.
pub fn build_ext_group(
    base: &PermGroup,
    gamma: &GroupAutomorphism,
    sigma_infinity: &Perm,
    v: usize,
) -> Result<ExtGroup> {
    if v == 0 {
        return Err(Error::InvalidArgument("v must be positive".into()));
    }
    let s = base.index_of(sigma_infinity).ok_or(Error::NotInGroup)?;
    if gamma.apply_index(s) != s {
        return Err(Error::InvalidArgument("γ does not fix σ_∞".into()));
    }
    if !gamma.pow(v as i64).is_conjugation_by(sigma_infinity) {
        return Err(Error::InvalidArgument(
            "γ^v is not conjugation by σ_∞".into(),
        ));
    }
    let inv = gamma.inverse();
    let mut inverse_powers = Vec::with_capacity(v);
    let mut acc = GroupAutomorphism::identity(base);
    for _ in 0..v {
        inverse_powers.push(acc.table().to_vec());
        acc = inv.compose(&acc);
    }
    Ok(ExtGroup {
        base: base.clone(),
        v,
        gamma: gamma.clone(),
        sigma_infinity: s,
        inverse_powers,
    })
}

impl ExtGroup {
    pub fn base(&self) -> &PermGroup {
        &self.base
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn gamma(&self) -> &GroupAutomorphism {
        &self.gamma
    }

    pub fn order(&self) -> usize {
        self.v * self.base.order()
    }

    pub fn identity(&self) -> ExtElem {
        ExtElem { j: 0, sigma: 0 }
    }

    /// `σ*_∞ = (1, e)`.
    pub fn star(&self) -> ExtElem {
        if self.v == 1 {
            ExtElem {
                j: 0,
                sigma: self.sigma_infinity,
            }
        } else {
            ExtElem { j: 1, sigma: 0 }
        }
    }

    pub fn embed(&self, g: &Perm) -> Result<ExtElem> {
        Ok(ExtElem {
            j: 0,
            sigma: self.base.index_of(g).ok_or(Error::NotInGroup)?,
        })
    }

    /// `(j', σ')(j'', σ'') = (j' + j'', γ^{-j''}(σ') σ'')`, folding
    /// `(σ*)^v = σ_∞` on the left when the exponent wraps.
    pub fn mul(&self, x: ExtElem, y: ExtElem) -> ExtElem {
        let twisted = self.inverse_powers[y.j][x.sigma] as usize;
        let mut sigma = self.base.mul_index(twisted, y.sigma);
        let mut j = x.j + y.j;
        if j >= self.v {
            j -= self.v;
            sigma = self.base.mul_index(self.sigma_infinity, sigma);
        }
        ExtElem { j, sigma }
    }

    pub fn pow(&self, x: ExtElem, k: usize) -> ExtElem {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: ExtElem) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.identity() {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> Vec<ExtElem> {
        (0..self.v)
            .flat_map(|j| (0..self.base.order()).map(move |sigma| ExtElem { j, sigma }))
            .collect()
    }

    pub fn inverse(&self, x: ExtElem) -> ExtElem {
        self.pow(x, self.element_order(x) - 1)
    }

    /// Exhaustive associativity check over all triples.
    pub fn is_associative(&self) -> bool {
        let all = self.elements();
        all.iter().all(|&x| {
            all.iter().all(|&y| {
                let xy = self.mul(x, y);
                all.iter()
                    .all(|&z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    /// `σ* (0, σ) (σ*)⁻¹ = (0, γ(σ))` for every `σ`.
    pub fn star_conjugation_is_gamma(&self) -> bool {
        let s = self.star();
        let s_inv = self.inverse(s);
        (0..self.base.order()).all(|i| {
            let c = self.mul(self.mul(s, ExtElem { j: 0, sigma: i }), s_inv);
            c == ExtElem {
                j: 0,
                sigma: self.gamma.apply_index(i),
            }
        })
    }
}

/// Some `α ∈ S_m` with `α T(σ) α⁻¹ = T(γ(σ))` for all `σ`, where `T` is the
/// given action. Brute force over `S_m`.
pub fn realizing_permutation(
    gamma: &GroupAutomorphism,
    action: &CosetAction,
    brute_force_degree: usize,
) -> Result<Option<Perm>> {
    let m = action.degree();
    if m > brute_force_degree {
        return Err(Error::BruteForceBound {
            degree: m,
            bound: brute_force_degree,
        });
    }
    let pairs: Vec<(Perm, Perm)> = action
        .parent()
        .generators()
        .iter()
        .map(|g| Ok((action.act(g)?, action.act(&gamma.apply(g)?)?)))
        .collect::<Result<_>>()?;
    let mut found = None;
    for_each_permutation(m, |alpha| {
        if found.is_none() && pairs.iter().all(|(x, y)| &x.conjugate_by(alpha) == y) {
            found = Some(alpha.clone());
        }
    });
    Ok(found)
}

/// True iff no element of `S_m` realizes `γ` in the faithful action `T`.
pub fn caz_outside_symmetric(
    gamma: &GroupAutomorphism,
    action: &CosetAction,
    brute_force_degree: usize,
) -> Result<bool> {
    if !action.is_faithful() {
        return Err(Error::InvalidArgument("coset action is not faithful".into()));
    }
    Ok(realizing_permutation(gamma, action, brute_force_degree)?.is_none())
}
