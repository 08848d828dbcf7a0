//! Lie algebra structure: center, derived algebra, Killing form, center
//! shape, closedness verdict, and the orthogonal, Lorentz and adjoint-form
//! checks.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::{form_condition, ipq};
use crate::commutant::{decompose_endomorphism, CommutantAlgebra};
use crate::error::{Error, Result};
use crate::forms::{distinguished_symmetric, invariant_forms, FormSpace};
use crate::linalg::{
    coordinates, format_rational, independent_subset, kernel_of_map, minimal_polynomial, rank, rat, Rational,
    RationalMatrix, SpanBuilder,
};
use crate::rep::{is_irreducible, lie_closure, lie_closure_of, Certificate, MatrixAlgebraSpan, Representation};

/// Basis of `{z in g : [z, x] = 0 for all x in g}`.
pub fn center_of(span: &MatrixAlgebraSpan) -> Vec<RationalMatrix> {
    let m = span.dim();
    if m == 0 {
        return Vec::new();
    }
    let images: Vec<Vec<Rational>> = span
        .basis
        .iter()
        .map(|bi| span.basis.iter().flat_map(|bj| bi.bracket(bj).to_vec()).collect())
        .collect();
    kernel_of_map(&images)
        .into_iter()
        .map(|c| RationalMatrix::combination(&c, &span.basis))
        .collect()
}

/// `c[i][j]` = coordinates of `[b_i, b_j]` in the basis.
pub fn structure_constants(span: &MatrixAlgebraSpan) -> Result<Vec<Vec<Vec<Rational>>>> {
    let basis: Vec<Vec<Rational>> = span.basis.iter().map(RationalMatrix::to_vec).collect();
    span.basis
        .iter()
        .map(|bi| {
            span.basis
                .iter()
                .map(|bj| {
                    coordinates(&basis, &bi.bracket(bj).to_vec())
                        .ok_or_else(|| Error::precondition("span is not closed under the bracket"))
                })
                .collect()
        })
        .collect()
}

/// Matrices of `ad b_i` in the basis of the span.
pub fn adjoint_matrices(span: &MatrixAlgebraSpan) -> Result<Vec<RationalMatrix>> {
    let c = structure_constants(span)?;
    let m = span.dim();
    Ok((0..m)
        .map(|i| {
            let mut ad = RationalMatrix::zeros(m, m);
            for (j, row) in c[i].iter().enumerate() {
                for (k, x) in row.iter().enumerate() {
                    ad.set(k, j, x.clone());
                }
            }
            ad
        })
        .collect())
}

/// Derived algebra basis and Killing matrix `K_ij = tr(ad b_i ad b_j)`.
pub fn derived_and_killing(span: &MatrixAlgebraSpan) -> Result<(Vec<RationalMatrix>, RationalMatrix)> {
    let n = span.n;
    let m = span.dim();
    let brackets: Vec<Vec<Rational>> = (0..m)
        .flat_map(|i| ((i + 1)..m).map(move |j| (i, j)))
        .map(|(i, j)| span.basis[i].bracket(&span.basis[j]).to_vec())
        .collect();
    let derived = independent_subset(&brackets, n * n)
        .iter()
        .map(|v| RationalMatrix::from_vec_square(v))
        .collect::<Result<Vec<_>>>()?;
    let ad = adjoint_matrices(span)?;
    let mut killing = RationalMatrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let k = (&ad[i] * &ad[j]).trace();
            killing.set(i, j, k.clone());
            killing.set(j, i, k);
        }
    }
    Ok((derived, killing))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum CenterShape {
    Trivial,
    /// `R Id`, spanned by `a Id`.
    RealScaling {
        a: String,
    },
    /// `span{Id, J}`.
    FullComplex,
    /// `R J`.
    Circle {
        b: String,
    },
    /// `R (a Id + b J)` with `a, b` nonzero.
    Spiral {
        a: String,
        b: String,
    },
    /// Anything else; only possible outside the irreducible case.
    Unclassified {
        dim: usize,
    },
}

impl CenterShape {
    pub fn label(&self) -> &'static str {
        match self {
            CenterShape::Trivial => "trivial",
            CenterShape::RealScaling { .. } => "real_scaling",
            CenterShape::FullComplex => "full_complex",
            CenterShape::Circle { .. } => "circle",
            CenterShape::Spiral { .. } => "spiral",
            CenterShape::Unclassified { .. } => "unclassified",
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(
            self,
            CenterShape::FullComplex | CenterShape::Circle { .. } | CenterShape::Spiral { .. }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Closedness {
    ClosedByIrreducibility,
    UndeterminedReducible,
}

impl Closedness {
    pub fn label(self) -> &'static str {
        match self {
            Closedness::ClosedByIrreducibility => "closed_by_irreducibility",
            Closedness::UndeterminedReducible => "undetermined_reducible",
        }
    }
}

/// Shape of `R-span` of the center. For an irreducible representation the
/// center lies in the commutant; elements outside it are an inconsistency.
pub fn center_shape(center: &[RationalMatrix], comm: &CommutantAlgebra, irreducible: bool) -> Result<CenterShape> {
    let n = comm.n;
    if irreducible {
        if let Some(k) = center.iter().position(|z| !comm.contains(z)) {
            return Err(Error::inconsistency(format!(
                "center element {k} is not in the commutant"
            )));
        }
    }
    let shape = match center.len() {
        0 => CenterShape::Trivial,
        1 => one_dim_shape(&center[0], comm, irreducible)?,
        2 => {
            let id = RationalMatrix::identity(n).to_vec();
            let mut span = SpanBuilder::new(n * n);
            for z in center {
                span.insert(&z.to_vec());
            }
            let complex = span.contains(&id)
                && center
                    .iter()
                    .any(|z| minimal_polynomial(z).is_ok_and(|mu| mu.degree() == Some(2) && mu.real_root_count() == 0));
            if complex {
                CenterShape::FullComplex
            } else {
                CenterShape::Unclassified { dim: 2 }
            }
        }
        d => CenterShape::Unclassified { dim: d },
    };
    if irreducible {
        if matches!(shape, CenterShape::Unclassified { .. }) {
            return Err(Error::inconsistency(format!(
                "center of dimension {} is not a subalgebra of C",
                center.len()
            )));
        }
        if shape.is_complex() && n % 2 == 1 {
            return Err(Error::inconsistency("complex center shape in odd dimension"));
        }
    }
    Ok(shape)
}

fn one_dim_shape(z: &RationalMatrix, comm: &CommutantAlgebra, irreducible: bool) -> Result<CenterShape> {
    let mu = minimal_polynomial(z)?;
    let (alpha, beta) = match mu.degree() {
        Some(1) => (-mu.coeff(0), Rational::zero()),
        Some(2) if mu.real_root_count() == 0 => {
            if irreducible {
                let d = decompose_endomorphism(z, comm)?;
                (d.alpha, d.beta)
            } else {
                let alpha = -mu.coeff(1) / rat(2);
                (alpha, Rational::from_integer(1.into()))
            }
        }
        _ => return Ok(CenterShape::Unclassified { dim: 1 }),
    };
    Ok(if beta.is_zero() {
        CenterShape::RealScaling {
            a: format_rational(&alpha),
        }
    } else if alpha.is_zero() {
        CenterShape::Circle {
            b: format_rational(&beta),
        }
    } else {
        CenterShape::Spiral {
            a: format_rational(&alpha),
            b: format_rational(&beta),
        }
    })
}

pub fn closedness_verdict(irreducible: bool) -> Closedness {
    if irreducible {
        Closedness::ClosedByIrreducibility
    } else {
        Closedness::UndeterminedReducible
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub dim_g: usize,
    pub dim_center: usize,
    pub dim_derived: usize,
    pub killing_rank: usize,
    pub semisimple: bool,
    pub reductive_split_ok: bool,
    pub center_shape: CenterShape,
    /// False for reducible input, where the center-shape cases do not apply.
    pub center_shape_within_hypothesis: bool,
    pub closedness: Closedness,
    pub center: Vec<RationalMatrix>,
    pub derived: Vec<RationalMatrix>,
    pub killing: RationalMatrix,
}

/// Structure of the Lie algebra generated by an algebra-level
/// representation. `irreducible` must be the irreducibility decision.
pub fn analyze_structure(rep: &Representation, comm: &CommutantAlgebra, irreducible: bool) -> Result<StructureReport> {
    rep.require_algebra("structure analysis")?;
    let span = lie_closure(rep)?;
    let center = center_of(&span);
    let (derived, killing) = derived_and_killing(&span)?;
    let dim_g = span.dim();
    let killing_rank = killing.rank();
    let semisimple = killing_rank == dim_g;
    let n2 = rep.n * rep.n;
    let joint = center
        .iter()
        .chain(&derived)
        .map(RationalMatrix::to_vec)
        .collect::<Vec<_>>();
    let reductive_split_ok = center.len() + derived.len() == dim_g && rank(&joint, n2) == dim_g;
    if irreducible {
        if !reductive_split_ok {
            return Err(Error::inconsistency(
                "irreducible Lie algebra is not center plus derived algebra",
            ));
        }
        if semisimple != center.is_empty() {
            return Err(Error::inconsistency(
                "Killing rank disagrees with the center for a reductive algebra",
            ));
        }
    }
    let center_shape = center_shape(&center, comm, irreducible)?;
    Ok(StructureReport {
        dim_g,
        dim_center: center.len(),
        dim_derived: derived.len(),
        killing_rank,
        semisimple,
        reductive_split_ok,
        center_shape,
        center_shape_within_hypothesis: irreducible,
        closedness: closedness_verdict(irreducible),
        center,
        derived,
        killing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OrthogonalCenterCheck {
    NotApplicable { reason: String },
    Pass { signature: (usize, usize) },
    Fail { failures: Vec<String> },
}

/// For an irreducible, orthogonal, non-semisimple algebra: the center is
/// `R J` with `J` skew for the form, `p` and `q` are even, and `g` lies in
/// the unitary algebra of `(form, J)`.
pub fn orthogonal_center_check(
    rep: &Representation,
    forms: &FormSpace,
    structure: &StructureReport,
    irreducible: bool,
) -> OrthogonalCenterCheck {
    let na = |reason: &str| OrthogonalCenterCheck::NotApplicable {
        reason: reason.to_string(),
    };
    if !irreducible {
        return na("reducible");
    }
    let Some((form, sig)) = distinguished_symmetric(forms) else {
        return na("no invariant symmetric form");
    };
    if structure.semisimple {
        return na("semisimple");
    }
    let mut failures = Vec::new();
    let (p, q) = (sig.negative, sig.positive);
    if p % 2 != 0 || q % 2 != 0 {
        failures.push(format!("signature ({p},{q}) has an odd entry"));
    }
    match structure.center.as_slice() {
        [j] => {
            if !matches!(structure.center_shape, CenterShape::Circle { .. }) {
                failures.push(format!(
                    "center shape is {}, expected circle",
                    structure.center_shape.label()
                ));
            }
            if let Some(k) = rep.generators.iter().position(|g| (g * j) != (j * g)) {
                failures.push(format!("generator {k} does not commute with J"));
            }
            if !form_condition(j, form).is_zero() {
                failures.push("J is not skew for the form".to_string());
            }
        }
        other => failures.push(format!("center has dimension {}, expected 1", other.len())),
    }
    if let Some(k) = rep.generators.iter().position(|g| !form_condition(g, form).is_zero()) {
        failures.push(format!("generator {k} is not skew for the form"));
    }
    if failures.is_empty() {
        OrthogonalCenterCheck::Pass {
            signature: sig.normalized(),
        }
    } else {
        OrthogonalCenterCheck::Fail { failures }
    }
}

/// Standard basis of `so(1,n)` on `R^{n+1}` with form `diag(-1, 1, ..., 1)`:
/// boosts `E_0k + E_k0`, then rotations `E_kl - E_lk`.
pub fn so1n_basis(n: usize) -> Vec<RationalMatrix> {
    let d = n + 1;
    let mut out = Vec::with_capacity(d * n / 2);
    for k in 1..d {
        out.push(&RationalMatrix::unit(d, 0, k) + &RationalMatrix::unit(d, k, 0));
    }
    for k in 1..d {
        for l in (k + 1)..d {
            out.push(&RationalMatrix::unit(d, k, l) - &RationalMatrix::unit(d, l, k));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum LorentzOutcome {
    IrreducibleAndFull {
        dim: usize,
    },
    ReducibleWithWitness {
        dim: usize,
        witness: String,
    },
    /// An irreducible proper subalgebra: contradicts the rigidity theorem.
    IrreducibleAndProper {
        dim: usize,
    },
}

impl LorentzOutcome {
    pub fn is_violation(&self) -> bool {
        matches!(self, LorentzOutcome::IrreducibleAndProper { .. })
    }
}

fn witness_label(c: &Certificate) -> String {
    match c {
        Certificate::InvariantSubspace { basis, .. } => format!("invariant subspace of dimension {}", basis.len()),
        Certificate::SplitElement { minimal_polynomial, .. } => {
            format!("commutant element with split minimal polynomial {minimal_polynomial}")
        }
        Certificate::Division { .. } => "division commutant with small hull".to_string(),
    }
}

/// Checks that generators lie in `so(1, n)`; an irreducible one must then
/// generate all of it.
pub fn lorentz_maximality_check(rep: &Representation) -> Result<LorentzOutcome> {
    rep.require_algebra("lorentz_maximality_check")?;
    if rep.n < 2 {
        return Err(Error::precondition("lorentz check needs dimension at least 2"));
    }
    let eta = ipq(1, rep.n - 1);
    if let Some(k) = rep.generators.iter().position(|g| !form_condition(g, &eta).is_zero()) {
        return Err(Error::precondition(format!(
            "generator {k} is not in so(1,{})",
            rep.n - 1
        )));
    }
    let dim = lie_closure(rep)?.dim();
    let verdict = is_irreducible(rep)?;
    let full = rep.n * (rep.n - 1) / 2;
    Ok(if !verdict.irreducible {
        LorentzOutcome::ReducibleWithWitness {
            dim,
            witness: witness_label(&verdict.certificate),
        }
    } else if dim == full {
        LorentzOutcome::IrreducibleAndFull { dim }
    } else {
        LorentzOutcome::IrreducibleAndProper { dim }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LorentzTrial {
    pub trial: u64,
    pub seed: u64,
    pub generator_count: usize,
    pub outcome: LorentzOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LorentzScanReport {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub irreducible_full: usize,
    pub reducible: usize,
    pub violations: usize,
    pub records: Vec<LorentzTrial>,
}

/// A random sparse small-integer element of `so(1, n)`.
fn random_element(rng: &mut ChaCha8Rng, basis: &[RationalMatrix]) -> RationalMatrix {
    let mut coeffs: Vec<Rational> = basis
        .iter()
        .map(|_| {
            if rng.random_bool(0.4) {
                let c: i64 = rng.random_range(-3..=3);
                rat(c)
            } else {
                Rational::zero()
            }
        })
        .collect();
    if coeffs.iter().all(Zero::is_zero) {
        let k = rng.random_range(0..basis.len());
        coeffs[k] = rat(1);
    }
    RationalMatrix::combination(&coeffs, basis)
}

fn scan_trial(n: usize, base_seed: u64, trial: u64) -> Result<LorentzTrial> {
    let seed = base_seed.wrapping_add(trial);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = so1n_basis(n);
    let count = rng.random_range(1..=3usize);
    let gens: Vec<RationalMatrix> = (0..count).map(|_| random_element(&mut rng, &basis)).collect();
    let closed = lie_closure_of(n + 1, &gens)?;
    let rep = Representation::lie_algebra(format!("so(1,{n}) trial {trial}"), closed.basis)?;
    Ok(LorentzTrial {
        trial,
        seed,
        generator_count: count,
        outcome: lorentz_maximality_check(&rep)?,
    })
}

/// Random Lie-closed subalgebras of `so(1, n)`, trial `t` seeded with
/// `seed + t`. Trials run in parallel; records are in trial order.
pub fn lorentz_scan(n: usize, trials: u64, seed: u64) -> Result<LorentzScanReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::validation(format!("n = {n} is outside 2..=6")));
    }
    if trials == 0 {
        return Err(Error::validation("trials must be at least 1"));
    }
    let records = (0..trials)
        .into_par_iter()
        .map(|t| scan_trial(n, seed, t))
        .collect::<Result<Vec<_>>>()?;
    let count = |f: fn(&LorentzOutcome) -> bool| records.iter().filter(|r| f(&r.outcome)).count();
    Ok(LorentzScanReport {
        n,
        trials,
        seed,
        irreducible_full: count(|o| matches!(o, LorentzOutcome::IrreducibleAndFull { .. })),
        reducible: count(|o| matches!(o, LorentzOutcome::ReducibleWithWitness { .. })),
        violations: count(LorentzOutcome::is_violation),
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointCriteria {
    pub dim_g: usize,
    pub dim_derived: usize,
    pub codim_derived: usize,
    pub dim_sym: usize,
    pub dim_skew: usize,
    pub has_nondegenerate_symmetric: bool,
    pub has_nondegenerate_form: bool,
    pub has_nonzero_skew: bool,
    /// Nondegenerate symmetric invariant form exists iff ad is self-dual.
    pub self_dual_equivalence_holds: bool,
    /// Nonzero invariant skew form exists iff `codim [g,g] >= 2`.
    pub skew_equivalence_holds: bool,
}

/// Whether some element of the span of `forms` is invertible: tries the
/// basis, then seeded random integer combinations.
fn has_nondegenerate(forms: &[RationalMatrix], seed: u64) -> bool {
    if forms.iter().any(RationalMatrix::is_invertible) {
        return true;
    }
    if forms.len() < 2 {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..64).any(|_| {
        let coeffs: Vec<Rational> = forms.iter().map(|_| rat(rng.random_range(-20..=20))).collect();
        RationalMatrix::combination(&coeffs, forms).is_invertible()
    })
}

/// Invariant forms of the adjoint representation and the two cited
/// equivalences on this instance.
pub fn adjoint_form_criteria(span: &MatrixAlgebraSpan) -> Result<AdjointCriteria> {
    let m = span.dim();
    if m == 0 {
        return Err(Error::precondition("zero Lie algebra"));
    }
    let ad = adjoint_matrices(span)?;
    let (derived, _) = derived_and_killing(span)?;
    let forms = if ad.iter().all(RationalMatrix::is_zero) {
        // Abelian: every bilinear form is invariant.
        all_forms(m)
    } else {
        invariant_forms(&Representation::lie_algebra("ad", ad)?)?
    };
    let has_nondegenerate_symmetric = has_nondegenerate(&forms.sym_basis, 0x5eed);
    let has_nondegenerate_form = has_nondegenerate(&forms.basis(), 0x5eed + 1);
    let has_nonzero_skew = forms.dim_skew() > 0;
    let codim_derived = m - derived.len();
    Ok(AdjointCriteria {
        dim_g: m,
        dim_derived: derived.len(),
        codim_derived,
        dim_sym: forms.dim_sym(),
        dim_skew: forms.dim_skew(),
        has_nondegenerate_symmetric,
        has_nondegenerate_form,
        has_nonzero_skew,
        self_dual_equivalence_holds: has_nondegenerate_symmetric == has_nondegenerate_form,
        skew_equivalence_holds: has_nonzero_skew == (codim_derived >= 2),
    })
}

fn all_forms(m: usize) -> FormSpace {
    let mut sym_basis = Vec::new();
    let mut skew_basis = Vec::new();
    for i in 0..m {
        for j in i..m {
            let e = RationalMatrix::unit(m, i, j);
            sym_basis.push(&e + &e.transpose());
            if i != j {
                skew_basis.push(&e - &e.transpose());
            }
        }
    }
    let sym_signatures = sym_basis
        .iter()
        .map(|s| crate::linalg::congruence_signature(s).expect("symmetric"))
        .collect();
    FormSpace {
        n: m,
        mode: crate::linalg::InvarianceMode::AlgebraForm,
        self_dual: true,
        sym_basis,
        skew_basis,
        sym_signatures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutant::analyze_commutant;
    use crate::rep::SpanKind;

    fn span(n: usize, mats: Vec<RationalMatrix>) -> MatrixAlgebraSpan {
        lie_closure_of(n, &mats).unwrap()
    }

    fn so3() -> Vec<RationalMatrix> {
        vec![
            RationalMatrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
            RationalMatrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
            RationalMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
        ]
    }

    #[test]
    fn so3_structure() {
        let s = span(3, so3());
        assert!(center_of(&s).is_empty());
        let (derived, killing) = derived_and_killing(&s).unwrap();
        assert_eq!(derived.len(), 3);
        assert_eq!(killing.rank(), 3);
        assert_eq!(crate::linalg::congruence_signature(&killing).unwrap().negative, 3);
    }

    #[test]
    fn co2_is_abelian() {
        let s = span(
            2,
            vec![
                RationalMatrix::identity(2),
                RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]),
            ],
        );
        assert_eq!(center_of(&s).len(), 2);
        let (derived, killing) = derived_and_killing(&s).unwrap();
        assert!(derived.is_empty());
        assert_eq!(killing.rank(), 0);
        assert_eq!(s.kind, SpanKind::LieSpan);
    }

    #[test]
    fn co3_center_is_real_scaling() {
        let mut gens = so3();
        gens.push(RationalMatrix::identity(3));
        let rep = Representation::lie_algebra("co3", gens).unwrap();
        let comm = analyze_commutant(&rep, true).unwrap();
        let st = analyze_structure(&rep, &comm, true).unwrap();
        assert_eq!(st.center_shape, CenterShape::RealScaling { a: "1".into() });
        assert_eq!(st.closedness, Closedness::ClosedByIrreducibility);
    }

    #[test]
    fn lorentz_examples() {
        let full = Representation::lie_algebra("so12", so1n_basis(2)).unwrap();
        assert_eq!(
            lorentz_maximality_check(&full).unwrap(),
            LorentzOutcome::IrreducibleAndFull { dim: 3 }
        );
        let rot = Representation::lie_algebra("so2", vec![so1n_basis(2)[2].clone()]).unwrap();
        assert!(matches!(
            lorentz_maximality_check(&rot).unwrap(),
            LorentzOutcome::ReducibleWithWitness { .. }
        ));
        let bad = Representation::lie_algebra("e", vec![RationalMatrix::unit(3, 0, 1)]).unwrap();
        assert!(matches!(lorentz_maximality_check(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn scan_is_reproducible() {
        let a = lorentz_scan(2, 10, 7).unwrap();
        let b = lorentz_scan(2, 10, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.violations, 0);
        assert!(lorentz_scan(7, 1, 0).is_err());
        assert!(lorentz_scan(3, 0, 0).is_err());
    }
}
