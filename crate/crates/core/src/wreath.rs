//! Wreath products `G ≀ Z/v` on `n·v` letters and branch cycles of the
//! composite cover `μ ∘ f` with `μ(z) = z^v`.
//!
//! Letter `k` of block `i` (both 1-based) is flattened to `(i - 1)·n + k`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::dihedral::{caz_dihedral, cheby_tuple, dihedral_group};
use crate::group::{ClassTable, GroupAutomorphism, PermGroup};
use crate::nielsen::BranchTuple;
use crate::perm::Perm;
use crate::{Error, Result};

/// `(s; c_1, .., c_v)` sends letter `k` of block `i` to letter `c_i(k)` of
/// block `i + s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElem {
    shift: usize,
    coords: Vec<Perm>,
}

impl WreathElem {
    pub fn new(coords: Vec<Perm>, shift: usize) -> Result<Self> {
        let v = coords.len();
        if v == 0 {
            return Err(Error::InvalidArgument("v must be positive".into()));
        }
        let n = coords[0].degree();
        if let Some(bad) = coords.iter().find(|c| c.degree() != n) {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: bad.degree(),
            });
        }
        Ok(WreathElem {
            shift: shift % v,
            coords,
        })
    }

    pub fn identity(n: usize, v: usize) -> Self {
        WreathElem {
            shift: 0,
            coords: vec![Perm::identity(n); v],
        }
    }

    pub fn v(&self) -> usize {
        self.coords.len()
    }

    pub fn n(&self) -> usize {
        self.coords[0].degree()
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn coords(&self) -> &[Perm] {
        &self.coords
    }

    /// Functional product: apply `other` first.
    pub fn mul(&self, other: &WreathElem) -> WreathElem {
        let v = self.v();
        let coords = (0..v)
            .map(|i| &self.coords[(i + other.shift) % v] * &other.coords[i])
            .collect();
        WreathElem {
            shift: (self.shift + other.shift) % v,
            coords,
        }
    }

    pub fn to_perm(&self) -> Perm {
        let n = self.n();
        let v = self.v();
        let mut images = vec![0u32; n * v];
        for (i, c) in self.coords.iter().enumerate() {
            let target = (i + self.shift) % v;
            for k in 0..n {
                images[i * n + k] = (target * n + c.apply0(k)) as u32;
            }
        }
        Perm::from_raw(images)
    }

    /// Reads a permutation of `n·v` letters as a wreath element, if it maps
    /// blocks to blocks by a cyclic shift.
    pub fn from_perm(p: &Perm, n: usize, v: usize) -> Option<WreathElem> {
        if p.degree() != n * v || n == 0 || v == 0 {
            return None;
        }
        let shift = p.apply0(0) / n;
        let mut coords = Vec::with_capacity(v);
        for i in 0..v {
            let target = (i + shift) % v;
            let mut images = Vec::with_capacity(n);
            for k in 0..n {
                let y = p.apply0(i * n + k);
                if y / n != target {
                    return None;
                }
                images.push((y % n) as u32);
            }
            coords.push(Perm::from_raw(images));
        }
        Some(WreathElem { shift, coords })
    }
}

/// Flattened letter of `k_i`.
pub fn flat_letter(n: usize, k: usize, i: usize) -> usize {
    (i - 1) * n + k
}

pub fn wreath_embed(coords: &[Perm], shift: usize) -> Result<Perm> {
    Ok(WreathElem::new(coords.to_vec(), shift)?.to_perm())
}

/// `(s = 1; e, .., e, τ)`: its `v`-th power is `τ` in every block.
pub fn star_element(tau: &Perm, v: usize) -> WreathElem {
    let n = tau.degree();
    let mut coords = vec![Perm::identity(n); v];
    coords[v - 1] = tau.clone();
    WreathElem { shift: 1 % v, coords }
}

/// The `n·v`-cycle `(1_1 1_2 .. 1_v 2_1 .. n_v)`.
pub fn sigma_star_infinity(n: usize, v: usize) -> Perm {
    let cycle: Vec<usize> = (1..=n).collect();
    let rho = if n == 1 {
        Perm::identity(1)
    } else {
        Perm::from_cycles(n, &[&cycle]).expect("valid cycle")
    };
    star_element(&rho, v).to_perm()
}

/// `ι(g) = (γ^{v-1}(g), .., γ(g), g)`.
pub fn diagonal_embedding(g: &Perm, gamma: &GroupAutomorphism, v: usize) -> Result<WreathElem> {
    let mut coords = vec![g.clone(); v];
    let mut x = g.clone();
    for i in (0..v.saturating_sub(1)).rev() {
        x = gamma.apply(&x)?;
        coords[i] = x.clone();
    }
    WreathElem::new(coords, 0)
}

/// `G* = ⟨σ*, ι(G)⟩` with `σ* = (1; e, .., e, τ)`. Requires `γ(τ) = τ` and
/// `γ^v = conj(τ)`, so that conjugation by `σ*` acts on `ι(G)` as `γ` and
/// `|G*| = v·|G|`.
pub fn twisted_wreath_group(
    group: &PermGroup,
    gamma: &GroupAutomorphism,
    tau: &Perm,
    v: usize,
    order_bound: usize,
) -> Result<(PermGroup, Perm)> {
    if gamma.apply(tau)? != *tau {
        return Err(Error::InvalidArgument("γ does not fix τ".into()));
    }
    if !gamma.pow(v as i64).is_conjugation_by(tau) {
        return Err(Error::InvalidArgument("γ^v is not conjugation by τ".into()));
    }
    let star = star_element(tau, v).to_perm();
    let mut gens = vec![star.clone()];
    for g in group.generators() {
        gens.push(diagonal_embedding(g, gamma, v)?.to_perm());
    }
    let g_star = PermGroup::generate(group.degree() * v, &gens, order_bound)?;
    Ok((g_star, star))
}

/// `G*` for `D_n`, `v = 2`: `τ = (1 2 .. n)` and `γ = c⁻¹`, so that
/// `γ² = conj(τ)`.
pub fn dihedral_star_group(n: usize) -> Result<(PermGroup, Perm)> {
    let g = dihedral_group(n)?;
    let gamma = caz_dihedral(n)?.inverse();
    let cycle: Vec<usize> = (1..=n).collect();
    let tau = Perm::from_cycles(n, &[&cycle])?;
    twisted_wreath_group(&g, &gamma, &tau, 2, 4 * n)
}

/// `G ≀ Z/v`.
pub fn full_wreath_product(group: &PermGroup, v: usize, order_bound: usize) -> Result<PermGroup> {
    let n = group.degree();
    let mut gens = vec![WreathElem::identity(n, v).with_shift(1).to_perm()];
    for g in group.generators() {
        let mut coords = vec![Perm::identity(n); v];
        coords[0] = g.clone();
        gens.push(WreathElem::new(coords, 0)?.to_perm());
    }
    PermGroup::generate(n * v, &gens, order_bound)
}

impl WreathElem {
    fn with_shift(mut self, shift: usize) -> Self {
        self.shift = shift % self.v();
        self
    }
}

/// Per-condition outcome of [`check_wreath_conditions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathConditions {
    /// The block action maps onto `Z/v`.
    pub block_surjective: bool,
    /// For each block, the projection of the shift-free part equals `G_f`.
    pub projections_full: Vec<bool>,
}

impl WreathConditions {
    pub fn holds(&self) -> bool {
        self.block_surjective && self.projections_full.iter().all(|&b| b)
    }
}

pub fn check_wreath_conditions(
    h: &PermGroup,
    g_f: &PermGroup,
    v: usize,
) -> Result<WreathConditions> {
    let n = g_f.degree();
    if h.degree() != n * v {
        return Err(Error::DegreeMismatch {
            expected: n * v,
            found: h.degree(),
        });
    }
    let mut shifts = BTreeSet::new();
    let mut projections: Vec<BTreeSet<Perm>> = vec![BTreeSet::new(); v];
    for x in h.elements() {
        let w = WreathElem::from_perm(x, n, v)
            .ok_or_else(|| Error::InvalidArgument(format!("{x} does not respect the blocks")))?;
        shifts.insert(w.shift);
        if w.shift == 0 {
            for (i, c) in w.coords.iter().enumerate() {
                projections[i].insert(c.clone());
            }
        }
    }
    // shifts form a subgroup of Z/v; it is everything iff it has v elements
    let block_surjective = shifts.len() == v;
    let projections_full = projections
        .iter()
        .map(|p| p.len() == g_f.order() && p.iter().all(|c| g_f.contains(c)))
        .collect();
    Ok(WreathConditions {
        block_surjective,
        projections_full,
    })
}

/// Sufficient condition for the full wreath product: every finite branch
/// point of `f` is its own `ζ_v`-orbit and none meets a branch point of `μ`.
pub fn disjointness_condition(orbit_sizes: &[usize], collides_with_mu: bool) -> bool {
    !collides_with_mu && orbit_sizes.iter().all(|&s| s == 1)
}

/// Branch cycles of `f` over one branch point of `μ ∘ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberData {
    /// Cycle lengths of the block permutation.
    pub block_cycle_lengths: Vec<usize>,
    /// `(σ*)^ℓ` restricted to the least block of each block cycle.
    pub branch_cycles: Vec<Perm>,
}

/// For each entry and each cycle of length `ℓ` of its block image, the
/// restriction of the `ℓ`-th power to the least block of that cycle.
pub fn restrict_to_fiber(t_star: &BranchTuple, n: usize, v: usize) -> Result<Vec<FiberData>> {
    let mut out = Vec::with_capacity(t_star.len());
    for x in t_star.entries() {
        let w = WreathElem::from_perm(x, n, v)
            .ok_or_else(|| Error::InvalidArgument(format!("{x} does not respect the blocks")))?;
        let mut seen = vec![false; v];
        let mut data = FiberData {
            block_cycle_lengths: Vec::new(),
            branch_cycles: Vec::new(),
        };
        for start in 0..v {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut b = start;
            while !seen[b] {
                seen[b] = true;
                b = (b + w.shift) % v;
                len += 1;
            }
            let power = x.pow(len as i64);
            let images: Vec<u32> = (0..n)
                .map(|k| (power.apply0(start * n + k) - start * n) as u32)
                .collect();
            data.block_cycle_lengths.push(len);
            data.branch_cycles.push(Perm::from_raw(images));
        }
        out.push(data);
    }
    Ok(out)
}

/// Outcome of [`solve_comp_branch`].
#[derive(Clone, Debug)]
pub struct CompBranchSolution {
    pub n: usize,
    pub v: usize,
    pub group: PermGroup,
    pub sigma_star_infinity: Perm,
    /// Tuples `(σ*_0, σ*_1, σ*_∞)` before quotienting.
    pub raw_count: usize,
    /// Representatives up to conjugation by the centralizer of `σ*_∞` in
    /// `G*`, in canonical order.
    pub solutions: Vec<BranchTuple>,
    /// Fiber classes of every solution match those of the Chebyshev tuple.
    pub roundtrip: bool,
}

fn shape(n_twos: usize, n_ones: usize) -> Vec<usize> {
    let mut s = vec![2; n_twos];
    s.extend(core::iter::repeat_n(1, n_ones));
    s
}

/// Branch cycles `(σ*_0, σ*_1, σ*_∞)` of `μ ∘ T_n` for `μ = z²`: `σ*_1` of
/// shape `2^{n-1} 1^2`, `σ*_0` of shape `2^n`, `σ*_∞` the `2n`-cycle, found
/// by exhaustive search in `G*`.
pub fn solve_comp_branch(n: usize) -> Result<CompBranchSolution> {
    let v = 2;
    let (group, star) = dihedral_star_group(n)?;
    if group.order() != 2 * 2 * n {
        return Err(Error::NoSolution(format!(
            "G* has order {}, expected {}",
            group.order(),
            4 * n
        )));
    }
    let star_inv = star.inverse();
    let shape_one = shape(n - 1, 2);
    let shape_zero = shape(n, 0);
    let centralizer = group.centralizer(&star);
    let mut raw_count = 0;
    let mut reps: BTreeSet<BranchTuple> = BTreeSet::new();
    for s1 in group.elements() {
        if s1.cycle_type() != shape_one {
            continue;
        }
        let s0 = &star_inv * &s1.inverse();
        if s0.cycle_type() != shape_zero {
            continue;
        }
        let t = BranchTuple::with_infinity_last(vec![s0, s1.clone(), star.clone()])?;
        if t.generated_group(group.order())?.order() != group.order() {
            continue;
        }
        raw_count += 1;
        reps.insert(t.canonical_under(centralizer.elements()));
    }
    let mut solutions: Vec<BranchTuple> = reps.into_iter().collect();
    solutions.sort_by_key(|t| t.key());
    if solutions.is_empty() {
        return Err(Error::NoSolution(format!("no branch cycles for n = {n}")));
    }
    let mut roundtrip = true;
    for t in &solutions {
        roundtrip &= fiber_roundtrip(t, n)?;
    }
    Ok(CompBranchSolution {
        n,
        v,
        group,
        sigma_star_infinity: star,
        raw_count,
        solutions,
        roundtrip,
    })
}

/// Non-identity fiber branch cycles of `t_star` lie in `D_n` and their class
/// multiset equals that of the Chebyshev tuple.
pub fn fiber_roundtrip(t_star: &BranchTuple, n: usize) -> Result<bool> {
    let g = dihedral_group(n)?;
    let table = ClassTable::new(&g);
    let mut want: Vec<usize> = cheby_tuple(n)?
        .entries()
        .iter()
        .map(|x| table.class_of(x).expect("in D_n"))
        .collect();
    want.sort_unstable();
    let mut got = Vec::new();
    for fiber in restrict_to_fiber(t_star, n, 2)? {
        for c in fiber.branch_cycles {
            if c.is_identity() {
                continue;
            }
            match table.class_of(&c) {
                Some(k) => got.push(k),
                None => return Ok(false),
            }
        }
    }
    got.sort_unstable();
    Ok(got == want)
}
