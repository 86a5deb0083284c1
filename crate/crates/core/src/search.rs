//! Small-degree search for polynomial tuples `(σ_1, .., σ_v, σ_∞)` whose
//! rotation by `ζ_v` may give a Schinzel pair.
//!
//! Candidates are in normal form: `σ_∞ = (1 2 .. n)⁻¹` in the last slot, so
//! absolute equivalence reduces to conjugation by `⟨σ_∞⟩` and a tuple is
//! kept only when it is least in its orbit. Each seed (choice of `σ_1`) is
//! enumerated independently, which lets callers fan seeds out to threads.

use alloc::vec;
use alloc::vec::Vec;

use crate::dihedral::{odd_dihedral_conjugacy, AffineElem};
use crate::group::PermGroup;
use crate::nielsen::BranchTuple;
use crate::perm::{for_each_permutation, gcd, Perm};
use crate::schinzel::{find_qualifying_gamma, is_newly_reducible, NewlyReducible, PairSetup, QualifyingGamma};
use crate::{Error, Result};

/// `⟨σ_∞⟩` is normal in `G`.
pub fn normal_infinity_criterion(t: &BranchTuple, group: &PermGroup) -> Result<bool> {
    let s = t
        .sigma_infinity()
        .ok_or_else(|| Error::MalformedTuple("no infinity slot".into()))?;
    let cyclic = group.subgroup(core::slice::from_ref(s))?;
    Ok(group.is_normal_subgroup(&cyclic))
}

/// Index of `x ↦ kx` on `Z/n`: `n` minus its number of cycles.
pub fn mult_map_index(k: i64, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let k = k.rem_euclid(n as i64) as usize;
    if gcd(k, n) != 1 && n > 1 {
        return Err(Error::InvalidArgument(alloc::format!("{k} is not a unit mod {n}")));
    }
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = (x * k) % n;
        }
    }
    Ok(n - cycles)
}

/// `(1 2 .. n)⁻¹`.
pub fn standard_infinity(n: usize) -> Perm {
    if n < 2 {
        return Perm::identity(n.max(1));
    }
    let cycle: Vec<usize> = (1..=n).collect();
    Perm::from_cycles(n, &[&cycle]).expect("valid").inverse()
}

/// Non-identity permutations of `S_n` that can sit in a finite slot of a
/// genus-zero tuple with `v` finite entries, in canonical order.
pub fn candidate_pool(n: usize, v: usize) -> Vec<Perm> {
    let budget = (n - 1).saturating_sub(v.saturating_sub(1));
    let mut pool = Vec::new();
    for_each_permutation(n, |p| {
        let ind = p.index();
        if ind >= 1 && ind <= budget {
            pool.push(p.clone());
        }
    });
    pool
}

fn least_under_rotation(t: &BranchTuple, rotations: &[Perm]) -> bool {
    let key = t.key();
    rotations.iter().all(|r| t.conjugate_by(r).key() >= key)
}

/// Normal-form candidates with `σ_1 = seed`.
pub fn candidates_from_seed(n: usize, v: usize, seed: &Perm, pool: &[Perm]) -> Vec<BranchTuple> {
    let s_inf = standard_infinity(n);
    let s_inf_inv = s_inf.inverse();
    let rotations: Vec<Perm> = (1..n as i64).map(|k| s_inf.pow(k)).collect();
    let target = n - 1;
    let mut out = Vec::new();
    let mut prefix = vec![seed.clone()];
    extend_prefix(
        v,
        target,
        seed.index(),
        seed.clone(),
        &mut prefix,
        pool,
        &s_inf,
        &s_inf_inv,
        &rotations,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_prefix(
    v: usize,
    target: usize,
    used: usize,
    partial: Perm,
    prefix: &mut Vec<Perm>,
    pool: &[Perm],
    s_inf: &Perm,
    s_inf_inv: &Perm,
    rotations: &[Perm],
    out: &mut Vec<BranchTuple>,
) {
    if prefix.len() == v - 1 || v == 1 {
        // σ_1 ⋯ σ_v σ_∞ = 1 fixes the last finite entry
        let last = if v == 1 {
            s_inf_inv.clone()
        } else {
            &partial.inverse() * s_inf_inv
        };
        let mut entries = if v == 1 { Vec::new() } else { prefix.clone() };
        if last.is_identity() || used_total(&entries, &last) != target {
            return;
        }
        entries.push(last);
        entries.push(s_inf.clone());
        let t = BranchTuple::with_infinity_last(entries).expect("same degree");
        if least_under_rotation(&t, rotations) {
            out.push(t);
        }
        return;
    }
    let remaining_slots = v - prefix.len();
    for x in pool {
        let ind = x.index();
        if used + ind + (remaining_slots - 1) > target {
            continue;
        }
        prefix.push(x.clone());
        let next = &partial * x;
        extend_prefix(
            v,
            target,
            used + ind,
            next,
            prefix,
            pool,
            s_inf,
            s_inf_inv,
            rotations,
            out,
        );
        prefix.pop();
    }
}

fn used_total(prefix: &[Perm], last: &Perm) -> usize {
    prefix.iter().map(Perm::index).sum::<usize>() + last.index()
}

/// All normal-form candidates of degree `n` with `v` finite entries.
pub fn enumerate_candidates(n: usize, v: usize) -> Vec<BranchTuple> {
    if n < 2 || v == 0 {
        return Vec::new();
    }
    let pool = candidate_pool(n, v);
    if v == 1 {
        return candidates_from_seed(n, v, &Perm::identity(n), &pool);
    }
    let mut out = Vec::new();
    for seed in &pool {
        out.extend(candidates_from_seed(n, v, seed, &pool));
    }
    out
}

/// Verdicts for one candidate tuple.
#[derive(Clone, Debug)]
pub struct CandidateEvaluation {
    pub tuple: BranchTuple,
    pub group: Option<PermGroup>,
    pub genus: Option<usize>,
    pub polynomial_slot: Option<usize>,
    pub normal_sigma_infinity: Option<bool>,
    pub qualifying: Option<QualifyingGamma>,
    pub newly_reducible: Option<NewlyReducible>,
    /// Set when a bound stopped the pipeline for this candidate.
    pub error: Option<Error>,
}

impl CandidateEvaluation {
    pub fn survives(&self) -> bool {
        self.qualifying.is_some()
    }
}

/// Genus, polynomial slot, normality of `⟨σ_∞⟩`, qualifying `γ` and the
/// newly-reducible verdict for a stored tuple.
pub fn evaluate_candidate(t: &BranchTuple, v: usize, order_bound: usize) -> CandidateEvaluation {
    let mut eval = CandidateEvaluation {
        tuple: t.clone(),
        group: None,
        genus: t.genus().ok(),
        polynomial_slot: crate::nielsen::is_polynomial_tuple(t),
        normal_sigma_infinity: None,
        qualifying: None,
        newly_reducible: None,
        error: None,
    };
    let run = |eval: &mut CandidateEvaluation| -> Result<()> {
        let group = t.generated_group(order_bound)?;
        eval.group = Some(group.clone());
        eval.normal_sigma_infinity = Some(normal_infinity_criterion(t, &group)?);
        if let Some(q) = find_qualifying_gamma(&group, t, v)? {
            let setup = PairSetup::natural(&group, &q.gamma)?;
            eval.newly_reducible = Some(is_newly_reducible(&setup)?);
            eval.qualifying = Some(q);
        }
        Ok(())
    };
    if let Err(e) = run(&mut eval) {
        eval.error = Some(e);
    }
    eval
}

/// Sequential search over one degree: number of candidates examined and the
/// evaluations of those with a qualifying `γ` (or an error).
pub fn search_degree(n: usize, v: usize, order_bound: usize) -> (usize, Vec<CandidateEvaluation>) {
    let candidates = enumerate_candidates(n, v);
    let examined = candidates.len();
    let kept = candidates
        .iter()
        .map(|t| evaluate_candidate(t, v, order_bound))
        .filter(|e| e.survives() || e.error.is_some())
        .collect();
    (examined, kept)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalKind {
    /// Multipliers `{1}`: `G` is cyclic.
    Cyclic,
    /// Multipliers `{±1}`: `G = D_n`.
    Dihedral,
    /// Anything else; a counterexample candidate.
    Exception,
}

impl NormalKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            NormalKind::Cyclic => "cyclic",
            NormalKind::Dihedral => "dihedral",
            NormalKind::Exception => "exception",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifiedTuple {
    pub tuple: BranchTuple,
    pub kind: NormalKind,
    /// Multipliers `a` of the affine entries, ascending residues.
    pub multipliers: Vec<usize>,
    /// Dihedral with non-conjugate involution stabilizers (`n` even), so `f`
    /// and `-f` can be inequivalent.
    pub pairable: bool,
}

/// Genus-zero tuples with `⟨σ_∞⟩` normal, classified by their multipliers.
#[derive(Clone, Debug)]
pub struct NormalClassification {
    pub n: usize,
    pub v: usize,
    pub tuples: Vec<ClassifiedTuple>,
    /// Entries `σ_i` with a fixed point where `ind(σ_i)` differs from the
    /// index of multiplication by `k`, `σ_i σ_∞ σ_i⁻¹ = σ_∞^k`.
    pub index_mismatches: Vec<(BranchTuple, usize)>,
    /// Entries without a fixed point skipped by the index cross-check.
    pub index_skipped: usize,
}

impl NormalClassification {
    pub fn count(&self, kind: NormalKind) -> usize {
        self.tuples.iter().filter(|t| t.kind == kind).count()
    }

    pub fn exceptions(&self) -> impl Iterator<Item = &ClassifiedTuple> {
        self.tuples.iter().filter(|t| t.kind == NormalKind::Exception)
    }
}

/// Every normal-form tuple `(σ_1, .., σ_v, σ_∞)` of genus 0 whose entries
/// normalize `⟨σ_∞⟩` (identity entries allowed), up to `⟨σ_∞⟩`.
pub fn classify_normal_sigma_infty(n: usize, v: usize) -> Result<NormalClassification> {
    if n < 2 || v == 0 {
        return Err(Error::InvalidArgument("need n ≥ 2 and v ≥ 1".into()));
    }
    let mut affine: Vec<(AffineElem, Perm)> = Vec::new();
    for a in 1..n as i64 {
        if gcd(a as usize, n) != 1 {
            continue;
        }
        for b in 0..n as i64 {
            let e = AffineElem::new(n, a, b)?;
            affine.push((e, e.to_perm()));
        }
    }
    affine.sort_by(|x, y| x.1.cmp(&y.1));
    let s_inf = standard_infinity(n);
    let s_inf_inv = s_inf.inverse();
    let rotations: Vec<Perm> = (1..n as i64).map(|k| s_inf.pow(k)).collect();
    let mut found: Vec<BranchTuple> = Vec::new();
    let mut choice = vec![0usize; v - 1];
    loop {
        let prefix: Vec<Perm> = choice.iter().map(|&c| affine[c].1.clone()).collect();
        let partial = prefix
            .iter()
            .fold(Perm::identity(n), |acc, x| &acc * x);
        let last = &partial.inverse() * &s_inf_inv;
        let mut entries = prefix;
        entries.push(last);
        let sum: usize = entries.iter().map(Perm::index).sum();
        if sum == n - 1 {
            entries.push(s_inf.clone());
            let t = BranchTuple::with_infinity_last(entries)?;
            if least_under_rotation(&t, &rotations) {
                found.push(t);
            }
        }
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < affine.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    found.sort_by_key(|t| t.key());
    let odd_conjugate = n >= 3 && odd_dihedral_conjugacy(n)?;
    let mut tuples = Vec::with_capacity(found.len());
    let mut index_mismatches = Vec::new();
    let mut index_skipped = 0;
    for t in found {
        let mut multipliers: Vec<usize> = t
            .entries()
            .iter()
            .map(|x| AffineElem::from_perm(x).expect("affine entry").a())
            .collect();
        multipliers.sort_unstable();
        multipliers.dedup();
        // the multiplier group generated by the entries
        let mut closure = multipliers.clone();
        loop {
            let mut grew = false;
            for i in 0..closure.len() {
                for j in 0..closure.len() {
                    let p = closure[i] * closure[j] % n;
                    if !closure.contains(&p) {
                        closure.push(p);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        closure.sort_unstable();
        let kind = if closure == [1] {
            NormalKind::Cyclic
        } else if n >= 3 && closure == [1, n - 1] {
            NormalKind::Dihedral
        } else {
            NormalKind::Exception
        };
        for x in &t.entries()[..v] {
            if x.is_identity() {
                continue;
            }
            let a = AffineElem::from_perm(x).expect("affine entry");
            if x.fixed_points() == 0 {
                index_skipped += 1;
                continue;
            }
            // x σ_∞ x⁻¹ = σ_∞^a
            if mult_map_index(a.a() as i64, n)? != x.index() {
                index_mismatches.push((t.clone(), a.a()));
            }
        }
        let pairable = kind == NormalKind::Dihedral && !odd_conjugate;
        tuples.push(ClassifiedTuple {
            tuple: t,
            kind,
            multipliers: closure,
            pairable,
        });
    }
    Ok(NormalClassification {
        n,
        v,
        tuples,
        index_mismatches,
        index_skipped,
    })
}
