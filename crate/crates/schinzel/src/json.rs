//! Serialized forms. Permutations are 1-based image arrays; tuple
//! `infinity_slot` values are 0-based.

use serde::{Deserialize, Serialize};

use schinzel_core::dihedral::AffineElem;
use schinzel_core::nielsen::{Equivalence, NielsenEnumeration};
use schinzel_core::schinzel::{CharSchinzelReport, NewlyReducible, Side};
use schinzel_core::wreath::CompBranchSolution;
use schinzel_core::{BranchTuple, ClassTable, GroupAutomorphism, Perm, PermGroup};

use crate::CliResult;

pub fn perm_json(p: &Perm) -> Vec<usize> {
    p.images()
}

pub fn perm_from_json(images: &[usize]) -> CliResult<Perm> {
    Ok(Perm::from_images(images)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

impl GroupJson {
    pub fn from_group(g: &PermGroup) -> Self {
        GroupJson {
            degree: g.degree(),
            generators: g.generators().iter().map(perm_json).collect(),
            order: Some(g.order()),
        }
    }

    pub fn to_group(&self, order_bound: usize) -> CliResult<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| perm_from_json(g))
            .collect::<CliResult<Vec<_>>>()?;
        let g = PermGroup::generate(self.degree, &gens, order_bound)?;
        if let Some(o) = self.order {
            if o != g.order() {
                return Err(crate::CliError::Usage(format!(
                    "declared order {o}, generated {}",
                    g.order()
                )));
            }
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleJson {
    pub degree: usize,
    pub entries: Vec<Vec<usize>>,
    pub infinity_slot: Option<usize>,
}

impl TupleJson {
    pub fn from_tuple(t: &BranchTuple) -> Self {
        TupleJson {
            degree: t.degree(),
            entries: t.entries().iter().map(perm_json).collect(),
            infinity_slot: t.infinity_slot(),
        }
    }

    pub fn to_tuple(&self) -> CliResult<BranchTuple> {
        let entries = self
            .entries
            .iter()
            .map(|e| perm_from_json(e))
            .collect::<CliResult<Vec<_>>>()?;
        if entries.iter().any(|e| e.degree() != self.degree) {
            return Err(crate::CliError::Usage("entry degree differs from tuple degree".into()));
        }
        Ok(BranchTuple::new(entries, self.infinity_slot)?)
    }
}

/// An automorphism given by the images of a list of group elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismJson {
    pub generators: Vec<Vec<usize>>,
    pub images: Vec<Vec<usize>>,
}

impl AutomorphismJson {
    pub fn from_automorphism(a: &GroupAutomorphism) -> Self {
        AutomorphismJson {
            generators: a.domain().generators().iter().map(perm_json).collect(),
            images: a.generator_images().iter().map(perm_json).collect(),
        }
    }

    pub fn to_automorphism(&self, group: &PermGroup) -> CliResult<GroupAutomorphism> {
        let gens = self
            .generators
            .iter()
            .map(|g| perm_from_json(g))
            .collect::<CliResult<Vec<_>>>()?;
        let images = self
            .images
            .iter()
            .map(|g| perm_from_json(g))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(GroupAutomorphism::from_assignment(group, &gens, &images)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineJson {
    pub n: usize,
    pub a: i64,
    pub b: i64,
}

impl From<&AffineElem> for AffineJson {
    fn from(e: &AffineElem) -> Self {
        AffineJson {
            n: e.modulus(),
            a: e.signed_a(),
            b: e.signed_b(),
        }
    }
}

impl AffineJson {
    pub fn to_affine(&self) -> CliResult<AffineElem> {
        Ok(AffineElem::new(self.n, self.a, self.b)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NielsenReportJson {
    pub group: GroupJson,
    pub classes: Vec<String>,
    pub equivalence: String,
    pub count: usize,
    pub tuple_count: usize,
    pub fallback_to_inner: bool,
    pub representatives: Vec<TupleJson>,
}

pub fn equivalence_name(e: Equivalence) -> &'static str {
    match e {
        Equivalence::Absolute => "abs",
        Equivalence::Inner => "inner",
    }
}

impl NielsenReportJson {
    pub fn new(
        group: &PermGroup,
        table: &ClassTable,
        classes: &[usize],
        equivalence: Equivalence,
        e: &NielsenEnumeration,
    ) -> Self {
        NielsenReportJson {
            group: GroupJson::from_group(group),
            classes: classes.iter().map(|&k| table.class(k).label()).collect(),
            equivalence: equivalence_name(equivalence).into(),
            count: e.count(),
            tuple_count: e.tuple_count,
            fallback_to_inner: e.fallback_to_inner,
            representatives: e.representatives.iter().map(TupleJson::from_tuple).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharSchinzelJson {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub gamma_fixes_infinity: bool,
    pub gamma_power_is_infinity: bool,
    pub stabilizer_moved: bool,
    pub genus: Option<usize>,
    pub conjugator: Option<Vec<usize>>,
}

impl From<&CharSchinzelReport> for CharSchinzelJson {
    fn from(r: &CharSchinzelReport) -> Self {
        CharSchinzelJson {
            cond_i: r.cond_i,
            cond_ii: r.cond_ii,
            cond_iii: r.cond_iii,
            gamma_fixes_infinity: r.gamma_fixes_infinity,
            gamma_power_is_infinity: r.gamma_power_is_infinity,
            stabilizer_moved: r.stabilizer_moved,
            genus: r.genus,
            conjugator: r.conjugator.as_ref().map(perm_json),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub side: String,
    pub group: GroupJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub reducible: bool,
    pub orbit_lengths: Vec<usize>,
    pub newly_reducible: bool,
    pub verdict: String,
    pub witness_intermediate: Option<WitnessJson>,
    pub charschinzel: Option<CharSchinzelJson>,
}

impl VerdictJson {
    pub fn new(nr: &NewlyReducible, cs: Option<&CharSchinzelReport>) -> Self {
        VerdictJson {
            reducible: nr.orbit_lengths.len() > 1,
            orbit_lengths: nr.orbit_lengths.clone(),
            newly_reducible: nr.verdict == schinzel_core::schinzel::Verdict::NewlyReducible,
            verdict: nr.verdict.as_str().into(),
            witness_intermediate: nr.witness.as_ref().map(|(side, g)| WitnessJson {
                side: match side {
                    Side::F => "f".into(),
                    Side::G => "g".into(),
                },
                group: GroupJson::from_group(g),
            }),
            charschinzel: cs.map(CharSchinzelJson::from),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompBranchJson {
    pub n: usize,
    pub v: usize,
    pub group_order: usize,
    pub sigma_star_infinity: Vec<usize>,
    pub raw_count: usize,
    pub solutions: Vec<TupleJson>,
    pub restriction_roundtrip: String,
}

impl From<&CompBranchSolution> for CompBranchJson {
    fn from(s: &CompBranchSolution) -> Self {
        CompBranchJson {
            n: s.n,
            v: s.v,
            group_order: s.group.order(),
            sigma_star_infinity: perm_json(&s.sigma_star_infinity),
            raw_count: s.raw_count,
            solutions: s.solutions.iter().map(TupleJson::from_tuple).collect(),
            restriction_roundtrip: if s.roundtrip { "pass" } else { "fail" }.into(),
        }
    }
}
