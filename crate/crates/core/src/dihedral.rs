//! Affine groups `Z/n ⋊ A`, dihedral groups and their Chebyshev branch cycles.
//!
//! Residue `k` is letter `k` for `1 ≤ k < n`, and residue 0 is letter `n`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{ClassTable, GroupAutomorphism, PermGroup};
use crate::nielsen::BranchTuple;
use crate::perm::{gcd, Perm};
use crate::{Error, Result};

/// The affine map `x ↦ a x + b` on `Z/n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElem {
    n: u32,
    a: u32,
    b: u32,
}

fn reduce(x: i64, n: u32) -> u32 {
    x.rem_euclid(n as i64) as u32
}

pub fn letter_to_residue(n: usize, letter: usize) -> usize {
    letter % n
}

pub fn residue_to_letter(n: usize, residue: usize) -> usize {
    if residue.is_multiple_of(n) {
        n
    } else {
        residue % n
    }
}

impl AffineElem {
    pub fn new(n: usize, a: i64, b: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument("modulus must be at least 2".into()));
        }
        let n32 = n as u32;
        let a = reduce(a, n32);
        if gcd(a as usize, n) != 1 {
            return Err(Error::InvalidArgument(format!("{a} is not a unit mod {n}")));
        }
        Ok(AffineElem {
            n: n32,
            a,
            b: reduce(b, n32),
        })
    }

    pub fn identity(n: usize) -> Self {
        AffineElem { n: n as u32, a: 1, b: 0 }
    }

    pub fn modulus(&self) -> usize {
        self.n as usize
    }

    pub fn a(&self) -> usize {
        self.a as usize
    }

    pub fn b(&self) -> usize {
        self.b as usize
    }

    /// `a` as the representative in `(-n/2, n/2]`.
    pub fn signed_a(&self) -> i64 {
        signed(self.a, self.n)
    }

    pub fn signed_b(&self) -> i64 {
        signed(self.b, self.n)
    }

    /// Matrix product `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &AffineElem) -> AffineElem {
        let n = self.n as u64;
        AffineElem {
            n: self.n,
            a: ((self.a as u64 * other.a as u64) % n) as u32,
            b: ((self.a as u64 * other.b as u64 + self.b as u64) % n) as u32,
        }
    }

    pub fn inverse(&self) -> AffineElem {
        let n = self.n as i64;
        let inv = (1..n)
            .find(|&x| (x * self.a as i64) % n == 1)
            .expect("a is a unit");
        AffineElem {
            n: self.n,
            a: inv as u32,
            b: reduce(-inv * self.b as i64, self.n),
        }
    }

    pub fn apply_residue(&self, x: usize) -> usize {
        ((self.a as u64 * x as u64 + self.b as u64) % self.n as u64) as usize
    }

    pub fn to_perm(&self) -> Perm {
        let n = self.n as usize;
        let images: Vec<u32> = (1..=n)
            .map(|letter| {
                let r = self.apply_residue(letter_to_residue(n, letter));
                (residue_to_letter(n, r) - 1) as u32
            })
            .collect();
        Perm::from_raw(images)
    }

    /// The affine map acting as `p`, if there is one.
    pub fn from_perm(p: &Perm) -> Option<AffineElem> {
        let n = p.degree();
        if n < 2 {
            return None;
        }
        let b = letter_to_residue(n, p.image(n));
        let f1 = letter_to_residue(n, p.image(1));
        let a = (f1 + n - b) % n;
        let e = AffineElem::new(n, a as i64, b as i64).ok()?;
        (e.to_perm() == *p).then_some(e)
    }
}

fn signed(x: u32, n: u32) -> i64 {
    if 2 * x > n {
        x as i64 - n as i64
    } else {
        x as i64
    }
}

impl fmt::Display for AffineElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.signed_a(), self.signed_b())
    }
}

/// `Z/n ⋊ A` acting on letters, with `A` given as residues.
pub fn affine_group(n: usize, units: &[i64]) -> Result<PermGroup> {
    let mut a_set: Vec<u32> = Vec::new();
    for &a in units {
        let e = AffineElem::new(n, a, 0)?;
        if !a_set.contains(&e.a) {
            a_set.push(e.a);
        }
    }
    if !a_set.contains(&1) {
        a_set.push(1);
    }
    for &x in &a_set {
        for &y in &a_set {
            let prod = ((x as u64 * y as u64) % n as u64) as u32;
            if !a_set.contains(&prod) {
                return Err(Error::InvalidArgument(format!(
                    "multiplier set not closed: {x}·{y} = {prod} mod {n}"
                )));
            }
        }
    }
    a_set.sort_unstable();
    let mut gens = Vec::new();
    gens.push(AffineElem::new(n, 1, 1)?.to_perm());
    for &a in a_set.iter().filter(|&&a| a != 1) {
        gens.push(AffineElem::new(n, a as i64, 0)?.to_perm());
    }
    PermGroup::generate(n, &gens, n * a_set.len())
}

/// `D_n = 𝒜_n({±1})`.
pub fn dihedral_group(n: usize) -> Result<PermGroup> {
    affine_group(n, &[1, -1])
}

fn require_even(n: usize) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "n must be even and at least 4, got {n}"
        )));
    }
    Ok(())
}

/// Branch cycles of the Chebyshev polynomial `T_n`:
/// `σ_1 = (-1, 1)`, `σ_2 = (-1, 0)`, `σ_3 = σ_∞ = (1, -1)`.
pub fn cheby_tuple(n: usize) -> Result<BranchTuple> {
    require_even(n)?;
    let entries = [(-1, 1), (-1, 0), (1, -1)]
        .iter()
        .map(|&(a, b)| AffineElem::new(n, a, b).map(|e| e.to_perm()))
        .collect::<Result<Vec<_>>>()?;
    BranchTuple::with_infinity_last(entries)
}

/// The outer automorphism `(1, b) ↦ (1, b)`, `(-1, b) ↦ (-1, b - 1)` of `D_n`.
pub fn caz_dihedral(n: usize) -> Result<GroupAutomorphism> {
    require_even(n)?;
    let g = dihedral_group(n)?;
    let images = g
        .generators()
        .iter()
        .map(|x| {
            let e = AffineElem::from_perm(x).expect("affine generator");
            let shift = if e.a == 1 { 0 } else { -1 };
            AffineElem::new(n, e.a as i64, e.b as i64 + shift).map(|y| y.to_perm())
        })
        .collect::<Result<Vec<_>>>()?;
    GroupAutomorphism::from_images(&g, &images)
}

/// `(σ_1, σ_2, σ_2, σ_1)` with `σ_1 = (-1, 1)`, `σ_2 = (-1, 0)`; no entry
/// is an `n`-cycle. The last slot is not marked as infinity.
pub fn modular_tuple(n: usize) -> Result<BranchTuple> {
    require_even(n)?;
    let s1 = AffineElem::new(n, -1, 1)?.to_perm();
    let s2 = AffineElem::new(n, -1, 0)?.to_perm();
    let t = BranchTuple::new(alloc::vec![s1.clone(), s2.clone(), s2, s1], None)?;
    if !t.satisfies_product_one() {
        return Err(Error::MalformedTuple("modular tuple product-one".into()));
    }
    Ok(t)
}

/// Genus of the Galois closure: Riemann-Hurwitz for the regular
/// representation, where `ind(σ) = |G|(1 - 1/ord σ)`.
pub fn galois_closure_genus(t: &BranchTuple, group: &PermGroup) -> Result<usize> {
    if !t.satisfies_product_one() {
        return Err(Error::MalformedTuple("product-one fails".into()));
    }
    if !t.entries().iter().all(|e| group.contains(e)) {
        return Err(Error::NotInGroup);
    }
    if t.generated_group(group.order())?.order() != group.order() {
        return Err(Error::MalformedTuple("entries do not generate the group".into()));
    }
    let order = group.order();
    let sum: usize = t.entries().iter().map(|e| order - order / e.order()).sum();
    if !sum.is_multiple_of(2) || sum + 2 < 2 * order {
        return Err(Error::MalformedTuple(format!(
            "regular index sum {sum} violates Riemann-Hurwitz"
        )));
    }
    Ok(sum / 2 + 1 - order)
}

/// Whether `⟨(-1, 1)⟩` and `⟨(-1, 0)⟩` are conjugate in `D_n`.
pub fn odd_dihedral_conjugacy(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidArgument("n must be at least 3".into()));
    }
    let g = dihedral_group(n)?;
    let a = g.subgroup(&[AffineElem::new(n, -1, 1)?.to_perm()])?;
    let b = g.subgroup(&[AffineElem::new(n, -1, 0)?.to_perm()])?;
    Ok(g.are_conjugate_subgroups(&a, &b))
}

/// Class numbers of `C_{-1,0}` (reflections with even `b`), `C_{-1,1}` (odd
/// `b`) and `C_∞ = {(1, ±1)}` in the class table of `D_n`, `n` even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralClasses {
    pub reflections_even: usize,
    pub reflections_odd: usize,
    pub infinity: usize,
}

pub fn dihedral_classes(table: &ClassTable) -> Result<DihedralClasses> {
    let n = table.group().degree();
    require_even(n)?;
    let find = |a: i64, b: i64| -> Result<usize> {
        table
            .class_of(&AffineElem::new(n, a, b)?.to_perm())
            .ok_or(Error::NotInGroup)
    };
    Ok(DihedralClasses {
        reflections_even: find(-1, 0)?,
        reflections_odd: find(-1, 1)?,
        infinity: find(1, -1)?,
    })
}

/// Label of an element of `D_n` in the paper-free naming used by reports:
/// `C_{-1,0}`, `C_{-1,1}`, `C_inf`, or the affine pair.
pub fn dihedral_class_name(table: &ClassTable, class: usize) -> Option<&'static str> {
    let c = dihedral_classes(table).ok()?;
    if class == c.reflections_even {
        Some("C_{-1,0}")
    } else if class == c.reflections_odd {
        Some("C_{-1,1}")
    } else if class == c.infinity {
        Some("C_inf")
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn affine_arithmetic() {
        let x = AffineElem::new(4, -1, 1).unwrap();
        assert_eq!(x.to_perm(), Perm::parse("(1 4)(2 3)", 4).unwrap());
        assert_eq!(AffineElem::new(4, -1, 0).unwrap().to_perm(), Perm::parse("(1 3)", 4).unwrap());
        assert_eq!(AffineElem::new(4, 1, -1).unwrap().to_perm(), Perm::parse("(1 4 3 2)", 4).unwrap());
        let y = AffineElem::new(4, 1, 3).unwrap();
        assert_eq!((x.to_perm() * y.to_perm()), x.compose(&y).to_perm());
        assert_eq!(x.compose(&x.inverse()), AffineElem::identity(4));
        for a in [1, 5, 7, 11] {
            for b in 0..12 {
                let e = AffineElem::new(12, a, b).unwrap();
                assert_eq!(AffineElem::from_perm(&e.to_perm()), Some(e));
            }
        }
        assert!(AffineElem::new(4, 2, 0).is_err());
    }

    #[test]
    fn affine_groups() {
        assert_eq!(dihedral_group(4).unwrap().order(), 8);
        assert_eq!(affine_group(7, &[1]).unwrap().order(), 7);
        assert_eq!(affine_group(7, &[1, 2, 4]).unwrap().order(), 21);
        assert!(affine_group(7, &[2]).is_err());
        let d6 = dihedral_group(6).unwrap();
        let involutions: Vec<&Perm> = d6.elements().iter().filter(|x| x.order() == 2).collect();
        // reflections (-1, b) for every b, plus the half-turn (1, 3)
        assert_eq!(involutions.len(), 7);
    }

    #[test]
    fn cheby_examples() {
        for n in (4..=12).step_by(2) {
            let t = cheby_tuple(n).unwrap();
            assert!(t.satisfies_product_one());
            assert_eq!(t.indices(), vec![n / 2, n / 2 - 1, n - 1]);
            assert_eq!(t.generated_group(1000).unwrap(), dihedral_group(n).unwrap());
        }
        assert!(cheby_tuple(5).is_err());
        assert!(cheby_tuple(2).is_err());
    }

    #[test]
    fn caz_properties() {
        for n in (4..=12).step_by(2) {
            let g = dihedral_group(n).unwrap();
            let c = caz_dihedral(n).unwrap();
            let table = ClassTable::new(&g);
            let cls = dihedral_classes(&table).unwrap();
            let (pres, perm) = c.class_permutation(&table);
            assert!(!pres);
            assert_eq!(perm[cls.reflections_even], cls.reflections_odd);
            assert_eq!(perm[cls.reflections_odd], cls.reflections_even);
            assert_eq!(
                (0..table.len()).filter(|&k| perm[k] != k).count(),
                2,
                "exact swap at n = {n}"
            );
            let s_inf = AffineElem::new(n, 1, -1).unwrap().to_perm();
            assert_eq!(c.apply(&s_inf).unwrap(), s_inf);
            let c2 = c.pow(2);
            assert!(c2.is_conjugation_by(&s_inf));
            // the matrix with -1 on the top row is a different inner map
            let other = AffineElem::new(n, -1, -1).unwrap().to_perm();
            assert!(!c2.is_conjugation_by(&other));
        }
    }

    #[test]
    fn modular_and_closure_genus() {
        for n in (4..=12).step_by(2) {
            let g = dihedral_group(n).unwrap();
            let m = modular_tuple(n).unwrap();
            assert_eq!(m.index_sum(), 2 * n - 2);
            assert_eq!(m.genus().unwrap(), 0);
            assert_eq!(galois_closure_genus(&m, &g).unwrap(), 1);
            let t = cheby_tuple(n).unwrap();
            assert_eq!(galois_closure_genus(&t, &g).unwrap(), 0);
        }
        let c = Perm::parse("(1 2 3 4 5)", 5).unwrap();
        let cyc = PermGroup::generate(5, core::slice::from_ref(&c), 10).unwrap();
        let t = BranchTuple::with_infinity_last(vec![c.clone(), c.inverse()]).unwrap();
        assert_eq!(galois_closure_genus(&t, &cyc).unwrap(), 0);
    }

    #[test]
    fn odd_conjugacy() {
        assert!(odd_dihedral_conjugacy(3).unwrap());
        assert!(odd_dihedral_conjugacy(5).unwrap());
        assert!(odd_dihedral_conjugacy(7).unwrap());
        assert!(!odd_dihedral_conjugacy(4).unwrap());
    }
}
