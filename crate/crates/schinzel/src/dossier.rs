//! Everything known about the Chebyshev tuple at one even degree.

use serde::{Deserialize, Serialize};

use schinzel_core::dihedral::{
    caz_dihedral, cheby_tuple, dihedral_class_name, dihedral_classes, dihedral_group,
    galois_closure_genus, modular_tuple, AffineElem,
};
use schinzel_core::nielsen::{enumerate_nielsen, Equivalence, NielsenClassSpec};
use schinzel_core::schinzel::{
    build_ext_group, caz_outside_symmetric, charschinzel_check, is_newly_reducible,
    positive_trace_criterion, PairSetup,
};
use schinzel_core::{ClassTable, DEFAULT_BRUTE_FORCE_DEGREE};

use crate::json::{AffineJson, AutomorphismJson, CharSchinzelJson, GroupJson, TupleJson, VerdictJson};
use crate::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub name: String,
    pub label: String,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NielsenCount {
    pub count: usize,
    pub fallback_to_inner: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtSummary {
    pub order: usize,
    pub star_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularSummary {
    pub tuple: TupleJson,
    pub fiber_genus: usize,
    pub closure_genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralDossier {
    pub n: usize,
    pub group: GroupJson,
    pub tuple: TupleJson,
    pub affine_entries: Vec<AffineJson>,
    pub classes: Vec<ClassInfo>,
    pub indices: Vec<usize>,
    pub genus: usize,
    pub nielsen_absolute: NielsenCount,
    pub nielsen_inner: NielsenCount,
    pub caz: AutomorphismJson,
    pub charschinzel: CharSchinzelJson,
    pub verdict: VerdictJson,
    pub positive_trace: bool,
    pub ext_group: ExtSummary,
    /// `None` above the brute-force degree.
    pub caz_outside_symmetric: Option<bool>,
    pub modular: ModularSummary,
}

pub fn dihedral_dossier(n: usize) -> CliResult<DihedralDossier> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(CliError::Usage(format!("n = {n} must be even and at least 4")));
    }
    let g = dihedral_group(n)?;
    let t = cheby_tuple(n)?;
    let table = ClassTable::new(&g);
    let dc = dihedral_classes(&table)?;
    let wanted = vec![dc.reflections_odd, dc.reflections_even, dc.infinity];
    let classes = wanted
        .iter()
        .map(|&k| ClassInfo {
            name: dihedral_class_name(&table, k).unwrap_or("?").into(),
            label: table.class(k).label(),
            size: table.class(k).size(),
        })
        .collect();
    let count = |eq| -> CliResult<NielsenCount> {
        let spec = NielsenClassSpec::new(table.clone(), wanted.clone(), eq)?;
        let e = enumerate_nielsen(&spec)?;
        Ok(NielsenCount {
            count: e.count(),
            fallback_to_inner: e.fallback_to_inner,
        })
    };
    let caz = caz_dihedral(n)?;
    let s_inf = t.sigma_infinity().expect("cheby tuple has infinity").clone();
    let report = charschinzel_check(&g, &t, &caz, 2)?;
    let setup = PairSetup::natural(&g, &caz)?;
    let nr = is_newly_reducible(&setup)?;
    let ext = build_ext_group(&g, &caz, &s_inf, 2)?;
    let outside = if n <= DEFAULT_BRUTE_FORCE_DEGREE {
        Some(caz_outside_symmetric(&caz, &setup.action_f()?, DEFAULT_BRUTE_FORCE_DEGREE)?)
    } else {
        None
    };
    let m = modular_tuple(n)?;
    Ok(DihedralDossier {
        n,
        group: GroupJson::from_group(&g),
        tuple: TupleJson::from_tuple(&t),
        affine_entries: t
            .entries()
            .iter()
            .map(|x| AffineJson::from(&AffineElem::from_perm(x).expect("affine")))
            .collect(),
        classes,
        indices: t.indices(),
        genus: t.genus()?,
        nielsen_absolute: count(Equivalence::Absolute)?,
        nielsen_inner: count(Equivalence::Inner)?,
        caz: AutomorphismJson::from_automorphism(&caz),
        charschinzel: CharSchinzelJson::from(&report),
        verdict: VerdictJson::new(&nr, Some(&report)),
        positive_trace: positive_trace_criterion(&setup)?,
        ext_group: ExtSummary {
            order: ext.order(),
            star_order: ext.element_order(ext.star()),
        },
        caz_outside_symmetric: outside,
        modular: ModularSummary {
            tuple: TupleJson::from_tuple(&m),
            fiber_genus: m.genus()?,
            closure_genus: galois_closure_genus(&m, &g)?,
        },
    })
}

impl DihedralDossier {
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("D_{} of order {}\n", self.n, self.group.order.unwrap_or(0)));
        let names: Vec<String> = self.affine_entries.iter().map(|a| format!("({},{})", a.a, a.b)).collect();
        out.push_str(&format!("tuple {} indices {:?} genus {}\n", names.join(" "), self.indices, self.genus));
        for c in &self.classes {
            out.push_str(&format!("  {} {} size {}\n", c.name, c.label, c.size));
        }
        out.push_str(&format!(
            "nielsen: {} absolute{}, {} inner\n",
            self.nielsen_absolute.count,
            if self.nielsen_absolute.fallback_to_inner { " (inner fallback)" } else { "" },
            self.nielsen_inner.count
        ));
        out.push_str(&format!(
            "charschinzel: i={} ii={} iii={}\n",
            self.charschinzel.cond_i, self.charschinzel.cond_ii, self.charschinzel.cond_iii
        ));
        out.push_str(&format!(
            "verdict {} orbits {:?}\n",
            self.verdict.verdict, self.verdict.orbit_lengths
        ));
        out.push_str(&format!(
            "G* order {}, star order {}; modular genus {} closure genus {}\n",
            self.ext_group.order, self.ext_group.star_order, self.modular.fiber_genus, self.modular.closure_genus
        ));
        out
    }
}
