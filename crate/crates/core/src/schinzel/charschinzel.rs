use alloc::vec::Vec;

use super::ext::build_ext_group;
use crate::group::{GroupAutomorphism, PermGroup};
use crate::nielsen::{rotate_tuple, BranchTuple};
use crate::perm::Perm;
use crate::{Error, Result};

/// Itemized outcome of the same-Galois-closure test for `f` and `ζ_v f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSchinzelReport {
    /// `γ(σ_∞) = σ_∞`.
    pub gamma_fixes_infinity: bool,
    /// `γ^v` is conjugation by `σ_∞`.
    pub gamma_power_is_infinity: bool,
    /// `γ(G(T,1))` is not conjugate to `G(T,1)`.
    pub stabilizer_moved: bool,
    pub cond_i: bool,
    pub genus: Option<usize>,
    pub infinity_is_n_cycle: bool,
    pub cond_ii: bool,
    /// Least `g ∈ G` with `g · rotate(t) · g⁻¹ = γ(t)`.
    pub conjugator: Option<Perm>,
    pub cond_iii: bool,
}

impl CharSchinzelReport {
    pub fn holds(&self) -> bool {
        self.cond_i && self.cond_ii && self.cond_iii
    }
}

fn check_tuple(group: &PermGroup, t: &BranchTuple) -> Result<()> {
    if t.infinity_slot() != Some(t.len().saturating_sub(1)) {
        return Err(Error::MalformedTuple("infinity slot must be last".into()));
    }
    if !t.satisfies_product_one() {
        return Err(Error::MalformedTuple("product-one fails".into()));
    }
    if !t.entries().iter().all(|e| group.contains(e)) {
        return Err(Error::NotInGroup);
    }
    if t.generated_group(group.order())?.order() != group.order() {
        return Err(Error::MalformedTuple("entries do not generate the group".into()));
    }
    Ok(())
}

/// Conditions under which `f` (branch cycles `t`, monodromy `G`) and
/// `ζ_v f` have the same Galois closure:
///
/// 1. `γ` fixes `σ_∞`, `γ^v` is conjugation by `σ_∞`, and `γ` moves the
///    stabilizer of letter 1 to a non-conjugate subgroup;
/// 2. genus 0, `σ_∞` an `n`-cycle and `r - 1 = v`;
/// 3. `γ(t)` is conjugate in `G` to the rotated tuple.
pub fn charschinzel_check(
    group: &PermGroup,
    t: &BranchTuple,
    gamma: &GroupAutomorphism,
    v: usize,
) -> Result<CharSchinzelReport> {
    check_tuple(group, t)?;
    let s_inf = t.sigma_infinity().expect("checked above");
    let gamma_fixes_infinity = gamma.apply(s_inf)? == *s_inf;
    let gamma_power_is_infinity = gamma.pow(v as i64).is_conjugation_by(s_inf);
    let h_f = group.point_stabilizer(1);
    let h_g = gamma.image_of_subgroup(&h_f)?;
    let stabilizer_moved = !group.are_conjugate_subgroups(&h_f, &h_g);
    let ext_ok = gamma_fixes_infinity
        && gamma_power_is_infinity
        && build_ext_group(group, gamma, s_inf, v).is_ok();
    let cond_i = ext_ok && stabilizer_moved;

    let genus = t.genus().ok();
    let infinity_is_n_cycle = s_inf.is_n_cycle();
    let cond_ii = genus == Some(0) && infinity_is_n_cycle && t.len() == v + 1;

    let conjugator = if t.len() >= 3 {
        let rotated = rotate_tuple(t)?;
        let image = t.map_automorphism(gamma)?;
        rotated.conjugator_to(&image, group.elements())
    } else {
        None
    };
    let cond_iii = conjugator.is_some();
    Ok(CharSchinzelReport {
        gamma_fixes_infinity,
        gamma_power_is_infinity,
        stabilizer_moved,
        cond_i,
        genus,
        infinity_is_n_cycle,
        cond_ii,
        conjugator,
        cond_iii,
    })
}

/// An automorphism passing [`charschinzel_check`], with the element `g`
/// such that `γ = conj(g) ∘ φ` where `φ: t ↦ rotate(t)`.
#[derive(Clone, Debug)]
pub struct QualifyingGamma {
    pub gamma: GroupAutomorphism,
    pub twist: Perm,
    pub report: CharSchinzelReport,
}

/// Searches for `γ` satisfying all three conditions. Any such `γ` sends `t`
/// to a `G`-conjugate of `rotate(t)`, so it is `conj(g) ∘ φ` for the map
/// `φ: σ_i ↦ rotate(t)_i`; this scans `g ∈ G` in canonical order.
pub fn find_qualifying_gamma(
    group: &PermGroup,
    t: &BranchTuple,
    v: usize,
) -> Result<Option<QualifyingGamma>> {
    check_tuple(group, t)?;
    if t.len() != v + 1 || t.len() < 3 {
        return Ok(None);
    }
    let rotated = rotate_tuple(t)?;
    let Ok(phi) = GroupAutomorphism::from_assignment(group, t.entries(), rotated.entries()) else {
        return Ok(None);
    };
    let h_f = group.point_stabilizer(1);
    let moved = phi.image_of_subgroup(&h_f)?;
    // conjugating by g ∈ G keeps the conjugacy class of φ(h_f)
    if group.are_conjugate_subgroups(&h_f, &moved) {
        return Ok(None);
    }
    let s_inf = t.sigma_infinity().expect("checked above").clone();
    let s_idx = group.index_of(&s_inf).expect("in group");
    let phi_s = phi.apply_index(s_idx);
    for g in group.elements() {
        let gi = g.inverse();
        // γ(σ_∞) = g φ(σ_∞) g⁻¹ must be σ_∞
        if group.element(phi_s).conjugate_by(g) != s_inf {
            continue;
        }
        let images: Vec<Perm> = phi
            .generator_images()
            .iter()
            .map(|x| &(g * x) * &gi)
            .collect();
        let gamma = GroupAutomorphism::from_images(group, &images)?;
        if !gamma.pow(v as i64).is_conjugation_by(&s_inf) {
            continue;
        }
        let report = charschinzel_check(group, t, &gamma, v)?;
        if report.holds() {
            return Ok(Some(QualifyingGamma {
                gamma,
                twist: g.clone(),
                report,
            }));
        }
    }
    Ok(None)
}
