//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Runs without the libtest harness so the lines print in order;
//! the process exits nonzero when any criterion fails.

use std::process::ExitCode;

use irrep_core::commutant::{commutant_basis, TypeTag};
use irrep_core::forms::{
    invariant_forms, riesz_bijection, riesz_endomorphism, riesz_transfer, verify_identification, Identification,
};
use irrep_core::linalg::{
    characteristic_polynomial, kernel_of_map, minimal_polynomial, rat, Rational, RationalMatrix, SpanBuilder,
};
use irrep_core::rep::{associative_hull, is_irreducible, lie_closure_of, Certificate, Representation};
use irrep_core::report::analyze;
use irrep_core::structure::{adjoint_form_criteria, lorentz_maximality_check, lorentz_scan, LorentzOutcome};
use irrep_core::zoo::{catalog, check_table, make};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok_detail: impl Into<String>) -> Outcome {
    if failures.is_empty() {
        Outcome {
            pass: true,
            detail: ok_detail.into(),
        }
    } else {
        Outcome {
            pass: false,
            detail: failures.join("; "),
        }
    }
}

fn build(key: &str, params: &[usize]) -> Representation {
    make(key, params).unwrap_or_else(|e| panic!("{key}{params:?}: {e}"))
}

/// Catalog entries plus reducible fixtures in a scrambled basis, so that no
/// standard basis vector lies in an invariant subspace.
fn suite() -> Vec<(String, Representation)> {
    let mut reps: Vec<(String, Representation)> = catalog().iter().map(|e| (e.label(), e.build().unwrap())).collect();
    let p = RationalMatrix::from_i64(&[&[1, 2, 0, 1], &[0, 1, 1, 0], &[1, 0, 1, 3], &[2, 1, 0, 1]]);
    let p_inv = p.inverse().expect("invertible change of basis");
    let base = build("so2_plus_so2", &[]);
    let conj = base.generators.iter().map(|g| &(&p * g) * &p_inv).collect();
    reps.push((
        "so2_plus_so2 conjugated".into(),
        Representation::lie_algebra("conjugated", conj).unwrap(),
    ));
    let q = RationalMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 2]]);
    let q_inv = q.inverse().expect("invertible change of basis");
    let borel = build("borel", &[3]);
    let conj = borel.generators.iter().map(|g| &(&q * g) * &q_inv).collect();
    reps.push((
        "borel(3) conjugated".into(),
        Representation::lie_algebra("conjugated", conj).unwrap(),
    ));
    reps
}

/// Table reproduction, with the values quoted by the criterion itself.
fn criterion_1() -> Outcome {
    use TypeTag::*;
    type Quoted = (
        &'static str,
        &'static [usize],
        TypeTag,
        usize,
        usize,
        &'static str,
        &'static [[usize; 2]],
    );
    let quoted: [Quoted; 10] = [
        ("so", &[1, 2], R, 1, 0, "O(p,q)", &[[1, 2]]),
        ("so", &[0, 3], R, 1, 0, "O(p,q)", &[[0, 3]]),
        ("sp_real", &[1], R, 0, 1, "Sp(n/2,R)", &[]),
        ("so_complex", &[3], C, 2, 0, "O(n/2,C)", &[[3, 3], [3, 3]]),
        ("sp_complex", &[1], C, 0, 2, "Sp(n/4,C)", &[]),
        ("u_real", &[0, 2], C, 1, 1, "U(p/2,q/2)", &[[0, 4]]),
        ("u_real", &[1, 1], C, 1, 1, "U(p/2,q/2)", &[[2, 2]]),
        ("sp1_left", &[], H, 1, 3, "Sp(p/4,q/4)", &[[0, 4]]),
        ("sp_quaternionic", &[0, 1], H, 1, 3, "Sp(p/4,q/4)", &[[0, 4]]),
        ("o_star", &[2], H, 3, 1, "O*(n/4)", &[[4, 4], [4, 4], [4, 4]]),
    ];
    let mut failures = Vec::new();
    for (key, params, tag, s, k, family, sigs) in quoted {
        let report = match analyze(&build(key, params)) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{key}{params:?}: {e}"));
                continue;
            }
        };
        let got_family = report.forms.table_row.as_ref().map(|r| r.family.clone());
        let got = (
            report.commutant.type_tag,
            report.forms.dim_sym,
            report.forms.dim_skew,
            got_family,
            report.forms.signatures.clone(),
        );
        let want = (tag, s, k, Some(family.to_string()), sigs.to_vec());
        if got != want {
            failures.push(format!("{key}{params:?}: got {got:?}, want {want:?}"));
        }
    }
    if build("o_star", &[2]).n != 8 {
        failures.push("o_star(2) is not on R^8".into());
    }
    let table = check_table(&catalog());
    if !table.passed() {
        failures.push(format!("catalog check failed:\n{}", table.to_text()));
    }
    outcome(
        failures,
        format!(
            "10 quoted entries exact, {} catalog entries, 7/7 rows covered",
            table.entries.len()
        ),
    )
}

/// Irreducible means a division commutant; reducible comes with a witness.
fn criterion_2(suite: &[(String, Representation)]) -> Outcome {
    let mut failures = Vec::new();
    let (mut irr, mut red) = (0, 0);
    for (label, rep) in suite {
        let verdict = match is_irreducible(rep) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("{label}: {e}"));
                continue;
            }
        };
        let tag = match analyze(rep) {
            Ok(r) => r.commutant.type_tag,
            Err(e) => {
                failures.push(format!("{label}: {e}"));
                continue;
            }
        };
        if verdict.irreducible {
            irr += 1;
            if !matches!(tag, TypeTag::R | TypeTag::C | TypeTag::H) {
                failures.push(format!("{label}: irreducible with commutant {tag:?}"));
            }
        } else {
            red += 1;
            let witnessed = match &verdict.certificate {
                Certificate::InvariantSubspace { basis, .. } => {
                    !basis.is_empty() && basis.len() < rep.n && is_invariant(rep, basis)
                }
                Certificate::SplitElement { .. } => true,
                Certificate::Division { .. } => false,
            };
            if tag != TypeTag::NonDivision && !witnessed {
                failures.push(format!("{label}: reducible without NonDivision or witness"));
            }
        }
    }
    outcome(
        failures,
        format!("{irr} irreducible in R/C/H, {red} reducible witnessed"),
    )
}

fn is_invariant(rep: &Representation, basis: &[Vec<Rational>]) -> bool {
    let mut span = SpanBuilder::new(rep.n);
    for b in basis {
        span.insert(b);
    }
    rep.generators
        .iter()
        .all(|g| basis.iter().all(|b| span.contains(&g.apply(b))))
}

/// Riesz map: equal dimensions, linear and invertible on the nose.
fn criterion_3(suite: &[(String, Representation)]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (label, rep) in suite {
        if !is_irreducible(rep).unwrap().irreducible {
            continue;
        }
        let forms = invariant_forms(rep).unwrap();
        if !forms.self_dual {
            continue;
        }
        checked += 1;
        let comm = commutant_basis(rep).unwrap();
        let report = riesz_bijection(&forms, &comm).unwrap();
        if forms.dim() != comm.dim() || !report.bijective || !report.lands_in_forms || !report.injective {
            failures.push(format!(
                "{label}: dim forms {} vs commutant {}, {report:?}",
                forms.dim(),
                comm.dim()
            ));
            continue;
        }
        let a = &report.reference_form;
        let images: Vec<RationalMatrix> = comm.basis.iter().map(|b| riesz_transfer(a, b).unwrap()).collect();
        for (b, img) in comm.basis.iter().zip(&images) {
            if &riesz_endomorphism(a, img).unwrap() != b {
                failures.push(format!("{label}: transfer not inverted"));
            }
        }
        // Linearity on a combination with distinct rational weights.
        let weights: Vec<Rational> = (0..comm.dim())
            .map(|i| Rational::new((2 * i as i64 + 1).into(), 3.into()))
            .collect();
        let combo = RationalMatrix::combination(&weights, &comm.basis);
        if riesz_transfer(a, &combo).unwrap() != RationalMatrix::combination(&weights, &images) {
            failures.push(format!("{label}: transfer not linear"));
        }
        let flat: Vec<Vec<Rational>> = images.iter().map(RationalMatrix::to_vec).collect();
        if !kernel_of_map(&flat).is_empty() {
            failures.push(format!("{label}: transfer images dependent"));
        }
    }
    outcome(failures, format!("{checked} irreducible self-dual entries"))
}

/// Signature from the characteristic polynomial: a symmetric matrix has
/// real roots, so Descartes' rule counts positive and negative ones exactly.
fn charpoly_signature(s: &RationalMatrix) -> (usize, usize) {
    let p = characteristic_polynomial(s).unwrap();
    let coeffs: Vec<Rational> = (0..=p.degree().unwrap()).map(|k| p.coeff(k)).collect();
    let zero_roots = coeffs.iter().take_while(|c| **c == rat(0)).count();
    let changes = |cs: &[Rational]| {
        let signs: Vec<bool> = cs.iter().filter(|c| **c != rat(0)).map(|c| *c > rat(0)).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let positive = changes(&coeffs);
    let flipped: Vec<Rational> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    let negative = changes(&flipped);
    assert_eq!(positive + negative + zero_roots, s.rows());
    (negative, positive)
}

/// Non-neutral symmetric forms span at most a line; dim S at most 3.
fn criterion_4(suite: &[(String, Representation)]) -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut samples = 0;
    for (label, rep) in suite {
        if !is_irreducible(rep).unwrap().irreducible {
            continue;
        }
        let forms = invariant_forms(rep).unwrap();
        if forms.dim_sym() > 3 {
            failures.push(format!("{label}: dim S = {}", forms.dim_sym()));
        }
        if forms.dim_sym() == 0 {
            continue;
        }
        let mut candidates = forms.sym_basis.clone();
        for _ in 0..50 {
            let w: Vec<Rational> = (0..forms.dim_sym())
                .map(|_| Rational::new(rng.random_range(-9i64..=9).into(), rng.random_range(1i64..=5).into()))
                .collect();
            candidates.push(RationalMatrix::combination(&w, &forms.sym_basis));
        }
        samples += candidates.len();
        let mut non_neutral = SpanBuilder::new(rep.n * rep.n);
        for c in candidates.iter().filter(|c| !c.is_zero()) {
            let (neg, pos) = charpoly_signature(c);
            if neg != pos {
                non_neutral.insert(&c.to_vec());
            }
        }
        if non_neutral.dim() > 1 {
            failures.push(format!(
                "{label}: non-neutral forms span {} dimensions",
                non_neutral.dim()
            ));
        }
    }
    outcome(
        failures,
        format!("{samples} symmetric forms sampled over irreducible entries"),
    )
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for n in 2..=4 {
        match lorentz_scan(n, 100, 2024) {
            Ok(r) => {
                if r.violations != 0 || r.records.len() != 100 {
                    failures.push(format!("n = {n}: {} violations", r.violations));
                }
                summary.push(format!("n={n}: {} full, {} reducible", r.irreducible_full, r.reducible));
            }
            Err(e) => failures.push(format!("n = {n}: {e}")),
        }
        let full = build("so", &[1, n]);
        match lorentz_maximality_check(&full) {
            Ok(LorentzOutcome::IrreducibleAndFull { dim }) if dim == (n + 1) * n / 2 => {}
            other => failures.push(format!("so(1,{n}): {other:?}")),
        }
    }
    outcome(failures, summary.join(", "))
}

/// The worked examples, at the parameter the criterion names.
fn criterion_6(n: usize) -> Outcome {
    let mut failures = Vec::new();
    let gl1h = analyze(&build("gl1H_right", &[])).unwrap();
    if (gl1h.commutant.dim, gl1h.commutant.type_tag) != (4, TypeTag::H) {
        failures.push(format!(
            "gl1H_right: commutant {} {:?}",
            gl1h.commutant.dim, gl1h.commutant.type_tag
        ));
    }
    let cc = analyze(&build("conformal_circle", &[n])).unwrap();
    let st = cc.structure.as_ref().unwrap();
    if (
        st.dim_center,
        st.center_shape.as_str(),
        cc.forms.dim_sym + cc.forms.dim_skew,
    ) != (2, "full_complex", 0)
    {
        failures.push(format!(
            "conformal_circle({n}): irreducible {}, center dim {}, shape {}, forms {}",
            cc.irreducible,
            st.dim_center,
            st.center_shape,
            cc.forms.dim_sym + cc.forms.dim_skew
        ));
    }
    let sp = analyze(&build("spiral", &[n])).unwrap();
    let st = sp.structure.as_ref().unwrap();
    if (st.center_shape.as_str(), st.closedness.as_str()) != ("spiral", "closed_by_irreducibility") {
        failures.push(format!(
            "spiral({n}): irreducible {}, center dim {}, shape {}, closedness {}",
            sp.irreducible, st.dim_center, st.center_shape, st.closedness
        ));
    }
    outcome(
        failures,
        "gl1H_right type H dim 4, conformal_circle full_complex, spiral closed",
    )
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut dims = Vec::new();
    for which in Identification::smallest() {
        match verify_identification(which) {
            Ok(r) if r.holds() && r.left_dim == r.right_dim => dims.push(format!("{}:{}", which.name(), r.left_dim)),
            Ok(r) => failures.push(format!("{which}: {r:?}")),
            Err(e) => failures.push(format!("{which}: {e}")),
        }
    }
    outcome(failures, dims.join(" "))
}

/// Closes `seed` under the generators with a plain worklist.
fn spin(gens: &[RationalMatrix], seed: &[Rational]) -> usize {
    let mut span = SpanBuilder::new(seed.len());
    let mut queue = vec![seed.to_vec()];
    while let Some(v) = queue.pop() {
        if span.contains(&v) {
            continue;
        }
        span.insert(&v);
        queue.extend(gens.iter().map(|g| g.apply(&v)));
    }
    span.dim()
}

fn kernel(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    kernel_of_map(&(0..m.cols()).map(|j| m.column(j)).collect::<Vec<_>>())
}

/// The documented seed set: standard basis vectors; kernels of `g(C)` for
/// each commutant basis element `C`, with `g` its repeated factor
/// `gcd(mu, mu')` or `x - r` for a rational root `r`; columns of elements in
/// the radical of the trace form on the associative hull.
fn seed_set(rep: &Representation) -> Vec<Vec<Rational>> {
    let n = rep.n;
    let mut seeds: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect();
    let comm = commutant_basis(rep).unwrap();
    for c in &comm.basis {
        let mu = minimal_polynomial(c).unwrap();
        let repeated = mu.gcd(&mu.derivative());
        if repeated.degree().unwrap_or(0) > 0 {
            seeds.extend(kernel(&repeated.eval_matrix(c)));
        }
        for r in mu.rational_roots().unwrap_or_default() {
            seeds.extend(kernel(&(c - &RationalMatrix::identity(n).scale(&r))));
        }
    }
    let hull = associative_hull(rep).basis;
    let gram: Vec<Vec<Rational>> = hull
        .iter()
        .map(|x| hull.iter().map(|y| (x * y).trace()).collect())
        .collect();
    for coeffs in kernel_of_map(&gram) {
        let z = RationalMatrix::combination(&coeffs, &hull);
        seeds.extend((0..n).map(|j| z.column(j)).filter(|v| v.iter().any(|x| *x != rat(0))));
    }
    seeds
}

fn criterion_8(suite: &[(String, Representation)]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (label, rep) in suite.iter().filter(|(_, r)| r.n <= 8) {
        checked += 1;
        let gens = lie_closure_of(rep.n, &rep.generators).unwrap().basis;
        let proper = seed_set(rep).iter().any(|s| spin(&gens, s) < rep.n);
        let decided = is_irreducible(rep).unwrap().irreducible;
        if decided == proper {
            failures.push(format!(
                "{label}: double centralizer says irreducible = {decided}, spinning found proper = {proper}"
            ));
        }
    }
    outcome(failures, format!("{checked} representations with n <= 8 agree"))
}

fn criterion_9() -> Outcome {
    let e = |i, j| RationalMatrix::unit(2, i, j);
    let cases: [(&str, Vec<RationalMatrix>, usize, bool); 3] = [
        ("sl(2,R)", vec![&e(0, 0) - &e(1, 1), e(0, 1), e(1, 0)], 0, false),
        ("aff(1)", vec![e(0, 0), e(0, 1)], 1, false),
        ("R^2", vec![e(0, 0), e(1, 1)], 2, true),
    ];
    let mut failures = Vec::new();
    for (name, gens, codim, skew) in cases {
        let span = lie_closure_of(2, &gens).unwrap();
        let c = adjoint_form_criteria(&span).unwrap();
        if c.codim_derived != codim
            || c.has_nonzero_skew != skew
            || !c.skew_equivalence_holds
            || !c.self_dual_equivalence_holds
        {
            failures.push(format!("{name}: {c:?}"));
        }
    }
    outcome(failures, "codim 0, 1, 2 give skew forms no, no, yes")
}

fn main() -> ExitCode {
    let suite = suite();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("1 table reproduction", criterion_1()),
        ("2 commutant is a division algebra", criterion_2(&suite)),
        ("3 Riesz bijection", criterion_3(&suite)),
        ("4 non-neutral symmetric forms", criterion_4(&suite)),
        ("5 Lorentz rigidity scan", criterion_5()),
        ("6 worked examples at n = 2", criterion_6(2)),
        ("7 identifications", criterion_7()),
        ("8 spinning oracle agreement", criterion_8(&suite)),
        ("9 adjoint form criteria", criterion_9()),
    ];
    // Same statements one dimension up, where the algebras are non-abelian.
    let supplementary = ("6' worked examples at n = 3 (supplementary)", criterion_6(3));
    let mut all_pass = true;
    for (name, o) in &criteria {
        all_pass &= o.pass;
        println!(
            "[{}] criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    let (name, o) = supplementary;
    println!("[{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    let passed = criteria.iter().filter(|(_, o)| o.pass).count();
    println!("{passed}/{} criteria pass", criteria.len());
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
