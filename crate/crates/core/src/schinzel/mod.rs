//! Reducibility of `f(x) - g(y)` read off from coset actions of the
//! monodromy group, and the criteria relating `f` to its rotation.

mod charschinzel;
mod ext;
mod modular;

use alloc::vec::Vec;

use crate::group::{CosetAction, GroupAutomorphism, PermGroup};
use crate::perm::Perm;
use crate::{Error, Result};

pub use charschinzel::{charschinzel_check, find_qualifying_gamma, CharSchinzelReport, QualifyingGamma};
pub use ext::{build_ext_group, caz_outside_symmetric, realizing_permutation, ExtElem, ExtGroup};
pub use modular::{modular_pairing, modular_rotate, ModularPairing};

/// `G` with the two stabilizers defining `T_f` and `T_g`.
#[derive(Clone, Debug)]
pub struct PairSetup {
    group: PermGroup,
    h_f: PermGroup,
    h_g: PermGroup,
    gamma: Option<GroupAutomorphism>,
}

impl PairSetup {
    pub fn new(group: &PermGroup, h_f: &PermGroup, h_g: &PermGroup) -> Result<Self> {
        if !h_f.is_subgroup_of(group) || !h_g.is_subgroup_of(group) {
            return Err(Error::NotSubgroup);
        }
        if h_f.order() != h_g.order() {
            return Err(Error::InvalidArgument(
                "stabilizers must have the same index".into(),
            ));
        }
        Ok(PairSetup {
            group: group.clone(),
            h_f: h_f.clone(),
            h_g: h_g.clone(),
            gamma: None,
        })
    }

    /// `h_g = γ(h_f)`.
    pub fn from_gamma(group: &PermGroup, h_f: &PermGroup, gamma: &GroupAutomorphism) -> Result<Self> {
        let h_g = gamma.image_of_subgroup(h_f)?;
        let mut s = Self::new(group, h_f, &h_g)?;
        s.gamma = Some(gamma.clone());
        Ok(s)
    }

    /// Attaches `γ`, checking `γ(h_f) = h_g` element-wise.
    pub fn with_gamma(mut self, gamma: &GroupAutomorphism) -> Result<Self> {
        for x in self.h_f.elements() {
            if !self.h_g.contains(&gamma.apply(x)?) {
                return Err(Error::InvalidArgument("γ(h_f) ≠ h_g".into()));
            }
        }
        self.gamma = Some(gamma.clone());
        Ok(self)
    }

    /// `T_f` is the natural action of a transitive `G`: `h_f = G(T, 1)`.
    pub fn natural(group: &PermGroup, gamma: &GroupAutomorphism) -> Result<Self> {
        Self::from_gamma(group, &group.point_stabilizer(1), gamma)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn h_f(&self) -> &PermGroup {
        &self.h_f
    }

    pub fn h_g(&self) -> &PermGroup {
        &self.h_g
    }

    pub fn gamma(&self) -> Option<&GroupAutomorphism> {
        self.gamma.as_ref()
    }

    pub fn degree(&self) -> usize {
        self.group.order() / self.h_f.order()
    }

    pub fn action_f(&self) -> Result<CosetAction> {
        CosetAction::new(&self.group, &self.h_f)
    }

    pub fn action_g(&self) -> Result<CosetAction> {
        CosetAction::new(&self.group, &self.h_g)
    }

    pub fn swapped(&self) -> PairSetup {
        PairSetup {
            group: self.group.clone(),
            h_f: self.h_g.clone(),
            h_g: self.h_f.clone(),
            gamma: self.gamma.as_ref().map(GroupAutomorphism::inverse),
        }
    }
}

/// Orbit lengths of `h_g` on the cosets of `h_f`, ascending. Each orbit is
/// one irreducible factor of `f(x) - g(y)`.
pub fn factor_orbit_lengths(setup: &PairSetup) -> Result<Vec<usize>> {
    let action = setup.action_f()?;
    let gens: Vec<Perm> = setup
        .h_g
        .generators()
        .iter()
        .map(|h| action.act(h))
        .collect::<Result<_>>()?;
    let m = action.degree();
    let mut seen = alloc::vec![false; m];
    let mut lengths = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = alloc::vec![start];
        let mut len = 0;
        while let Some(x) = stack.pop() {
            len += 1;
            for g in &gens {
                let y = g.apply0(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    Ok(lengths)
}

pub fn is_reducible_pair(setup: &PairSetup) -> Result<bool> {
    Ok(factor_orbit_lengths(setup)?.len() >= 2)
}

/// `tr(T(σ)) = tr(T(γ(σ)))` for every `σ ∈ G`.
pub fn trace_profile_equal(action: &CosetAction, gamma: &GroupAutomorphism) -> Result<bool> {
    let g = action.parent();
    for (i, x) in g.elements().iter().enumerate() {
        let y = g.element(gamma.apply_index(i));
        if action.trace(x)? != action.trace(y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `tr(T_f(σ)) > 0` iff `tr(T_g(σ)) > 0`, for every `σ ∈ G`.
pub fn positive_trace_criterion(setup: &PairSetup) -> Result<bool> {
    let af = setup.action_f()?;
    let ag = setup.action_g()?;
    for x in setup.group.elements() {
        if (af.trace(x)? > 0) != (ag.trace(x)? > 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    NewlyReducible,
    ReducibleComposite,
    Irreducible,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::NewlyReducible => "newly_reducible",
            Verdict::ReducibleComposite => "reducible_composite",
            Verdict::Irreducible => "irreducible",
        }
    }
}

/// Which cover the witnessing intermediate group sits above.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    F,
    G,
}

/// Outcome of [`is_newly_reducible`].
#[derive(Clone, Debug)]
pub struct NewlyReducible {
    pub verdict: Verdict,
    pub orbit_lengths: Vec<usize>,
    /// `(side, G')` with `h_side < G' < G` and the other stabilizer not
    /// transitive on `G/G'`.
    pub witness: Option<(Side, PermGroup)>,
    /// Intermediate groups inspected on each side.
    pub checked_f: usize,
    pub checked_g: usize,
}

fn non_transitive_intermediate(
    group: &PermGroup,
    below: &PermGroup,
    acting: &PermGroup,
) -> Result<(Option<PermGroup>, usize)> {
    let mids = group.intermediate_subgroups(below)?;
    let count = mids.len();
    for mid in mids {
        // acting is transitive on G/G' iff |acting·G'| = |G|
        let meet = acting.elements().iter().filter(|x| mid.contains(x)).count();
        if acting.order() * mid.order() / meet != group.order() {
            return Ok((Some(mid), count));
        }
    }
    Ok((None, count))
}

/// Reducible, and no intermediate level on either side carries the
/// factorization.
pub fn is_newly_reducible(setup: &PairSetup) -> Result<NewlyReducible> {
    let orbit_lengths = factor_orbit_lengths(setup)?;
    if orbit_lengths.len() < 2 {
        return Ok(NewlyReducible {
            verdict: Verdict::Irreducible,
            orbit_lengths,
            witness: None,
            checked_f: 0,
            checked_g: 0,
        });
    }
    let (wf, checked_f) = non_transitive_intermediate(&setup.group, &setup.h_f, &setup.h_g)?;
    let (wg, checked_g) = non_transitive_intermediate(&setup.group, &setup.h_g, &setup.h_f)?;
    let witness = wf.map(|m| (Side::F, m)).or(wg.map(|m| (Side::G, m)));
    let verdict = if witness.is_some() {
        Verdict::ReducibleComposite
    } else {
        Verdict::NewlyReducible
    };
    Ok(NewlyReducible {
        verdict,
        orbit_lengths,
        witness,
        checked_f,
        checked_g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::{caz_dihedral, cheby_tuple, dihedral_group, AffineElem};
    use alloc::vec;

    fn dihedral_setup(n: usize) -> PairSetup {
        let g = dihedral_group(n).unwrap();
        let t = cheby_tuple(n).unwrap();
        let hf = g.subgroup(&[t.entries()[1].clone()]).unwrap();
        let hg = g.subgroup(&[t.entries()[0].clone()]).unwrap();
        PairSetup::new(&g, &hf, &hg).unwrap()
    }

    #[test]
    fn dihedral_orbits() {
        for n in (4..=12).step_by(2) {
            assert_eq!(factor_orbit_lengths(&dihedral_setup(n)).unwrap(), vec![2; n / 2]);
        }
    }

    #[test]
    fn same_subgroup_has_fixed_coset() {
        let s = dihedral_setup(6);
        let same = PairSetup::new(s.group(), s.h_f(), s.h_f()).unwrap();
        assert_eq!(factor_orbit_lengths(&same).unwrap()[0], 1);
        assert!(positive_trace_criterion(&same).unwrap());
    }

    #[test]
    fn two_transitive_diagonal() {
        let s5 = PermGroup::symmetric(5, 200).unwrap();
        let st = s5.point_stabilizer(1);
        let s = PairSetup::new(&s5, &st, &st).unwrap();
        assert_eq!(factor_orbit_lengths(&s).unwrap(), vec![1, 4]);
        assert!(is_reducible_pair(&s).unwrap());
    }

    #[test]
    fn newly_reducible_boundary() {
        let v4 = is_newly_reducible(&dihedral_setup(4)).unwrap();
        assert_eq!(v4.verdict, Verdict::NewlyReducible);
        assert_eq!(v4.checked_f, 1);
        for n in (6..=12).step_by(2) {
            let v = is_newly_reducible(&dihedral_setup(n)).unwrap();
            assert_eq!(v.verdict, Verdict::ReducibleComposite, "n = {n}");
            let (_, mid) = v.witness.unwrap();
            assert!(mid.order() > 2 && mid.order() < 2 * n);
        }
    }

    #[test]
    fn witness_at_eight_is_index_four() {
        let v = is_newly_reducible(&dihedral_setup(8)).unwrap();
        let (side, mid) = v.witness.unwrap();
        assert_eq!(side, Side::F);
        assert_eq!(mid.order(), 4);
        for b in [0, 4] {
            assert!(mid.contains(&AffineElem::new(8, -1, b).unwrap().to_perm()));
        }
    }

    #[test]
    fn swapping_sides_keeps_verdict() {
        for n in (4..=10).step_by(2) {
            let s = dihedral_setup(n);
            assert_eq!(
                is_newly_reducible(&s).unwrap().verdict,
                is_newly_reducible(&s.swapped()).unwrap().verdict
            );
        }
    }

    #[test]
    fn dihedral_four_positive_trace_differs() {
        // T_f fixes cosets only for reflections with even b, T_g for odd b
        assert!(!positive_trace_criterion(&dihedral_setup(4)).unwrap());
    }

    #[test]
    fn trace_examples() {
        let s = dihedral_setup(4);
        let af = s.action_f().unwrap();
        assert_eq!(af.trace(&Perm::identity(4)).unwrap(), 4);
        let s1 = AffineElem::new(4, -1, 1).unwrap().to_perm();
        assert_eq!(af.trace(&s1).unwrap(), 0);
        let c = caz_dihedral(4).unwrap();
        assert!(!trace_profile_equal(&af, &c).unwrap());
        let inner = GroupAutomorphism::conjugation(s.group(), &s1).unwrap();
        assert!(trace_profile_equal(&af, &inner).unwrap());
    }

    #[test]
    fn gamma_setup() {
        let g = dihedral_group(4).unwrap();
        let c = caz_dihedral(4).unwrap();
        let s = PairSetup::natural(&g, &c).unwrap();
        assert!(!g.are_conjugate_subgroups(s.h_f(), s.h_g()));
        assert_eq!(s.degree(), 4);
        assert_eq!(is_newly_reducible(&s).unwrap().verdict, Verdict::NewlyReducible);
    }

    #[test]
    fn primitive_s3_pair_is_irreducible_or_reducible() {
        let s3 = PermGroup::symmetric(3, 10).unwrap();
        let a = s3.subgroup(&[Perm::parse("(1 2)", 3).unwrap()]).unwrap();
        let b = s3.subgroup(&[Perm::parse("(1 3)", 3).unwrap()]).unwrap();
        let v = is_newly_reducible(&PairSetup::new(&s3, &a, &b).unwrap()).unwrap();
        // two orbits (1 + 2), nothing intermediate
        assert_eq!(v.orbit_lengths, vec![1, 2]);
        assert_eq!(v.verdict, Verdict::NewlyReducible);
    }
}
