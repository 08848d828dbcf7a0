//! The full analysis pipeline and its serialisable report.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::commutant::{analyze_commutant, TypeTag};
use crate::error::{Error, Result};
use crate::forms::{
    adjointness_check, classify_table_row, complex_extension, invariant_forms, quaternionic_extension, riesz_bijection,
    AdjointnessCase, FormSpace, TableRow,
};
use crate::rep::{is_irreducible, Certificate, Level, Representation};
use crate::structure::{
    analyze_structure, lorentz_maximality_check, orthogonal_center_check, LorentzOutcome, OrthogonalCenterCheck,
};

pub const SCHEMA_VERSION: &str = "v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub name: String,
    pub n: usize,
    pub level: Level,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    /// `division`, `invariant_subspace` or `split_element`.
    pub kind: String,
    pub hull_dim: usize,
    pub commutant_dim: usize,
    /// Dimension of the invariant subspace, when one was found.
    pub subspace_dim: Option<usize>,
    /// How the witness was found, when reducible.
    pub origin: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutantSummary {
    pub dim: usize,
    #[serde(rename = "type")]
    pub type_tag: TypeTag,
    /// `lambda` of the stored complex structure, as `p/q`.
    pub lambda: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowFragment {
    #[serde(rename = "type")]
    pub type_tag: TypeTag,
    pub stabilizer: String,
    pub family: String,
    pub signature: Option<[usize; 2]>,
    pub guard_note: Option<String>,
}

impl From<&TableRow> for TableRowFragment {
    fn from(row: &TableRow) -> Self {
        Self {
            type_tag: row.type_tag,
            stabilizer: row.stabilizer.name(),
            family: row.stabilizer.family().to_string(),
            signature: row.signature.map(|(p, q)| [p, q]),
            guard_note: row.guard_note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormsFragment {
    pub self_dual: bool,
    pub dim_sym: usize,
    pub dim_skew: usize,
    pub signatures: Vec<[usize; 2]>,
    pub table_row: Option<TableRowFragment>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSummary {
    pub flavor: crate::forms::ExtensionFlavor,
    pub symmetry: String,
    pub signature: Option<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFragment {
    pub dim_g: usize,
    pub dim_center: usize,
    pub dim_derived: usize,
    pub killing_rank: usize,
    pub semisimple: bool,
    pub reductive_split_ok: bool,
    pub center_shape: String,
    pub center_shape_note: Option<String>,
    pub closedness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub riesz_bijective: Option<bool>,
    pub adjointness: Option<AdjointnessCase>,
    pub orthogonal_center: Option<OrthogonalCenterCheck>,
    pub lorentz: Option<LorentzOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub input: InputEcho,
    pub irreducible: bool,
    pub certificate: CertificateSummary,
    pub commutant: CommutantSummary,
    pub forms: FormsFragment,
    pub extension: Option<ExtensionSummary>,
    /// Absent for group-level input.
    pub structure: Option<StructureFragment>,
    pub checks: Checks,
    pub timing: Timing,
}

impl AnalysisReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialises")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::format(format!("invalid report: {e}")))
    }

    /// One `path: value` line per leaf of the JSON report.
    pub fn to_text(&self) -> String {
        json_to_text(&self.to_json())
    }
}

/// One `path: value` line per leaf; arrays of scalars stay on one line.
pub fn json_to_text(value: &Value) -> String {
    let mut lines = Vec::new();
    flatten("", value, &mut lines);
    lines.join("\n")
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&join(k), child, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), child, out);
            }
        }
        other => out.push(format!("{prefix}: {other}")),
    }
}

fn certificate_summary(c: &Certificate, hull_dim: usize, commutant_dim: usize) -> CertificateSummary {
    let (kind, subspace_dim, origin) = match c {
        Certificate::Division { .. } => ("division", None, None),
        Certificate::InvariantSubspace { origin, basis, .. } => (
            "invariant_subspace",
            Some(basis.len()),
            Some(serde_json::to_string(origin).expect("origin serialises")),
        ),
        Certificate::SplitElement { minimal_polynomial, .. } => (
            "split_element",
            None,
            Some(format!("minimal polynomial {minimal_polynomial}")),
        ),
    };
    CertificateSummary {
        kind: kind.to_string(),
        hull_dim,
        commutant_dim,
        subspace_dim,
        origin,
    }
}

/// Every nonzero invariant form of an irreducible representation is
/// non-degenerate; checked on the basis.
fn schur_check(forms: &FormSpace) -> Result<()> {
    if let Some(k) = forms.basis().iter().position(|f| !f.is_invertible()) {
        return Err(Error::inconsistency(format!(
            "invariant basis form {k} is degenerate on an irreducible representation"
        )));
    }
    Ok(())
}

fn is_lorentzian(rep: &Representation) -> bool {
    if rep.level != Level::LieAlgebra || rep.n < 2 {
        return false;
    }
    let eta = crate::classical::ipq(1, rep.n - 1);
    rep.generators
        .iter()
        .all(|g| crate::classical::form_condition(g, &eta).is_zero())
}

/// parse -> irreducibility -> commutant -> forms -> table row -> structure
/// -> applicable checks.
pub fn analyze(rep: &Representation) -> Result<AnalysisReport> {
    let start = Instant::now();
    let verdict = is_irreducible(rep)?;
    let irreducible = verdict.irreducible;
    let comm = analyze_commutant(rep, irreducible)?;
    let forms = invariant_forms(rep)?;
    let type_tag = comm.type_tag.expect("classified");

    let mut checks = Checks {
        riesz_bijective: None,
        adjointness: None,
        orthogonal_center: None,
        lorentz: None,
    };
    let mut table_row = None;
    let mut extension = None;
    if irreducible {
        schur_check(&forms)?;
        let row = classify_table_row(&comm, &forms)?;
        if forms.self_dual {
            let riesz = riesz_bijection(&forms, &comm)?;
            if !riesz.bijective {
                return Err(Error::inconsistency(
                    "Riesz map from the commutant to the form space is not bijective",
                ));
            }
            checks.riesz_bijective = Some(true);
            let basis = forms.basis();
            if basis.len() >= 2 {
                checks.adjointness = Some(adjointness_check(&basis[0], &basis[1], &comm)?.case);
            }
            let ext = match type_tag {
                TypeTag::C => Some(complex_extension(&forms, &comm)?),
                TypeTag::H => Some(quaternionic_extension(&forms, &comm)?),
                _ => None,
            };
            extension = ext.map(|e| ExtensionSummary {
                flavor: e.flavor,
                symmetry: e.symmetry_label().to_string(),
                signature: e.signature.map(|(p, q)| [p, q]),
            });
        }
        table_row = Some(row);
    }

    let structure = if rep.level == Level::LieAlgebra {
        let st = analyze_structure(rep, &comm, irreducible)?;
        let oc = orthogonal_center_check(rep, &forms, &st, irreducible);
        if let OrthogonalCenterCheck::Fail { failures } = &oc {
            return Err(Error::inconsistency(format!(
                "orthogonal center check failed: {}",
                failures.join("; ")
            )));
        }
        checks.orthogonal_center = Some(oc);
        Some(StructureFragment {
            dim_g: st.dim_g,
            dim_center: st.dim_center,
            dim_derived: st.dim_derived,
            killing_rank: st.killing_rank,
            semisimple: st.semisimple,
            reductive_split_ok: st.reductive_split_ok,
            center_shape: st.center_shape.label().to_string(),
            center_shape_note: (!st.center_shape_within_hypothesis)
                .then(|| "outside hypothesis: reducible".to_string()),
            closedness: st.closedness.label().to_string(),
        })
    } else {
        None
    };

    if is_lorentzian(rep) {
        let outcome = lorentz_maximality_check(rep)?;
        if outcome.is_violation() {
            return Err(Error::inconsistency(format!(
                "irreducible proper subalgebra of so(1,{}): {outcome:?}",
                rep.n - 1
            )));
        }
        checks.lorentz = Some(outcome);
    }

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION.to_string(),
        input: InputEcho {
            name: rep.name.clone(),
            n: rep.n,
            level: rep.level,
        },
        irreducible,
        certificate: certificate_summary(&verdict.certificate, verdict.hull_dim, verdict.commutant_dim),
        commutant: CommutantSummary {
            dim: comm.dim(),
            type_tag,
            lambda: comm
                .complex_structure
                .as_ref()
                .map(|c| crate::linalg::format_rational(&c.lambda)),
        },
        forms: FormsFragment {
            self_dual: forms.self_dual,
            dim_sym: forms.dim_sym(),
            dim_skew: forms.dim_skew(),
            signatures: forms.normalized_signatures().into_iter().map(|(p, q)| [p, q]).collect(),
            table_row: table_row.as_ref().map(TableRowFragment::from),
        },
        extension,
        structure,
        checks,
        timing: Timing {
            elapsed_us: start.elapsed().as_micros() as u64,
        },
    })
}
