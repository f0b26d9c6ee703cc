//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the console.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;

use starlattice::fixtures;
use starlattice::hilbert_lattice::{self, soler_subspace_family, summarize_family, Subspace};
use starlattice::locality;
use starlattice::qlogic::{self, FiniteOrtholattice};
use starlattice::sampling::sample_rng;
use starlattice::star_algebra::{group_star_algebra, matrix_algebra};
use starlattice::states_norms::{self, gns_representation, State};
use starlattice::wedderburn;
use starlattice::{Scalar, ScalarRing, StarAlgebra};

use ScalarRing::{C, H, R};

const SEED: u64 = 20_241_016;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

/// Collects sub-check failures; passes when none were recorded.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn finish(self, summary: String) -> Outcome {
        if self.0.is_empty() {
            Outcome::new(true, summary)
        } else {
            let shown: Vec<_> = self.0.iter().take(5).cloned().collect();
            Outcome::new(false, format!("{} failure(s): {}", self.0.len(), shown.join("; ")))
        }
    }
}

/// Numerical rank by singular values relative to the largest.
fn rank(m: &DMatrix<f64>) -> usize {
    let sv = m.clone().svd(false, false).singular_values;
    let top = sv.iter().fold(0.0_f64, |a, &b| a.max(b));
    sv.iter().filter(|&&s| s > 1e-8 * top.max(1.0)).count()
}

fn stack(ms: &[DMatrix<f64>]) -> DMatrix<f64> {
    let rows = ms[0].len();
    DMatrix::from_fn(rows, ms.len(), |r, c| ms[c].as_slice()[r])
}

fn sigma_max(m: &DMatrix<f64>) -> f64 {
    m.clone().svd(false, false).singular_values.max()
}

fn matrix_algebras() -> Vec<(String, StarAlgebra)> {
    let mut v = Vec::new();
    for k in [R, C, H] {
        for n in 1..=3 {
            v.push((format!("M{n}({k})"), matrix_algebra(&[(n, k)]).unwrap()));
        }
    }
    v
}

fn criterion1_reports(workers: usize) -> Vec<String> {
    matrix_algebras()
        .iter()
        .map(|(_, a)| {
            let r = states_norms::verify_banach_cstar_with_workers(a, 1000, SEED, workers);
            serde_json::to_string(&r).unwrap()
        })
        .collect()
}

fn criterion1() -> Outcome {
    let mut f = Failures::default();
    let mut worst = 0.0_f64;
    for (name, a) in matrix_algebras() {
        let r = states_norms::verify_banach_cstar_with_workers(&a, 1000, SEED, 0);
        for c in &r.checks {
            f.check(c.pass, || format!("{name} {} residual {:.2e}", c.check, c.max_residual));
            worst = worst.max(c.max_residual);
        }
        // oracle: the norm is the operator norm of the real matrix image
        let ctx = states_norms::NormContext::new(&a).unwrap();
        let mut rng = sample_rng(SEED ^ 1, 0);
        for _ in 0..100 {
            let x = a.random_element(&mut rng).into_coords();
            let op = sigma_max(&a.real_matrix(&x).unwrap());
            let rel = (ctx.norm(&x) - op).abs() / op;
            f.check(rel < 1e-9, || format!("{name} norm differs from operator norm by {rel:.2e}"));
        }
    }
    f.finish(format!("9 algebras x 1000 samples, max residual {worst:.2e}; norm = operator norm"))
}

/// `φ` is positive on `M₂(ℝ)` iff `ρ_{ba} = φ(E_ab)` is positive semidefinite.
fn density_psd_oracle(form: &[f64]) -> bool {
    let (p11, p12, p21, p22) = (form[0], form[1], form[2], form[3]);
    let off = 0.5 * (p12 + p21);
    let tol = 1e-10;
    p11 >= -tol && p22 >= -tol && p11 * p22 - off * off >= -tol
}

fn criterion2() -> Outcome {
    let mut f = Failures::default();
    let mut summary = Vec::new();
    for (name, a) in [
        ("M2(R)", matrix_algebra(&[(2, R)]).unwrap()),
        ("M1(H)", matrix_algebra(&[(1, H)]).unwrap()),
    ] {
        let sweep = states_norms::positivity_equivalence_sweep(&a, 10_000, SEED, 0).unwrap();
        f.check(sweep.disagreements == 0, || {
            format!("{name}: {} disagreements, first {:?}", sweep.disagreements, sweep.witnesses.first())
        });
        summary.push(format!("{name} {}/{} positive", sweep.positive, sweep.samples));
    }
    // independent oracle on M₂(ℝ): forms with 1 = E11 + E22, symmetric in E12/E21
    let a = matrix_algebra(&[(2, R)]).unwrap();
    let mut rng = sample_rng(SEED ^ 2, 0);
    let mut pos = 0;
    for _ in 0..2000 {
        use rand::Rng;
        let p11: f64 = rng.random_range(-0.5..1.5);
        let off: f64 = rng.random_range(-1.0..1.0);
        let form = [p11, off, off, 1.0 - p11];
        let r = states_norms::check_positivity_equivalence(&a, &form).unwrap();
        let truth = density_psd_oracle(&form);
        pos += truth as usize;
        f.check(r.full_gram_psd == truth && r.squares_psd == truth, || {
            format!("M2(R) form {form:?}: gram {} squares {} oracle {truth}", r.full_gram_psd, r.squares_psd)
        });
    }
    summary.push(format!("density oracle agrees on 2000 forms ({pos} positive)"));
    f.finish(summary.join(", "))
}

/// Commutant and Hermitian-count identification of every block, computed
/// from the block images of the basis.
fn ring_agreement(a: &StarAlgebra, dec: &wedderburn::BlockDecomposition, f: &mut Failures, name: &str) {
    for (i, b) in dec.blocks.iter().enumerate() {
        let gens = wedderburn::block_generators(a, dec, i).unwrap();
        let by_commutant = wedderburn::identify_division_ring(&gens);
        let dim = rank(&stack(&gens));
        let syms: Vec<DMatrix<f64>> = gens.iter().map(|g| (g + g.transpose()) * 0.5).collect();
        let sym = rank(&stack(&syms));
        let by_count = wedderburn::ring_from_hermitian_count(dim, sym);
        f.check(
            matches!(by_commutant, Ok(k) if k == b.ring) && by_count == Some((b.ring, b.n)),
            || format!("{name} block {i}: declared {}, commutant {by_commutant:?}, count {by_count:?}", b.ring),
        );
    }
}

fn criterion3() -> Outcome {
    let mut f = Failures::default();
    let cases: Vec<(&str, StarAlgebra, Vec<(usize, ScalarRing)>)> = vec![
        ("R[C3]", group_star_algebra(3).unwrap(), vec![(1, R), (1, C)]),
        ("R[C4]", group_star_algebra(4).unwrap(), vec![(1, R), (1, R), (1, C)]),
        ("H", matrix_algebra(&[(1, H)]).unwrap(), vec![(1, H)]),
        ("scrambled M2(R)+M3(R)", fixtures::scrambled_m2_m3(), vec![(2, R), (3, R)]),
    ];
    let mut worst = 0.0_f64;
    for (name, a, expected) in &cases {
        match wedderburn::block_diagonalize(a, SEED) {
            Ok(dec) => {
                let got = dec.signature();
                f.check(&got == expected, || format!("{name}: got {got:?}"));
                let res = wedderburn::verify_decomposition(a, &dec).unwrap();
                worst = worst.max(res);
                f.check(res < 1e-8, || format!("{name}: residual {res:.2e}"));
                ring_agreement(a, &dec, &mut f, name);
            }
            Err(e) => f.check(false, || format!("{name}: {e}")),
        }
    }
    let mut n_fixtures = 0;
    for fx in fixtures::all() {
        if fx.kind != fixtures::FixtureKind::Algebra {
            continue;
        }
        let a = StarAlgebra::from_json(&fx.contents).unwrap();
        if !starlattice::star_algebra::verify_algebra_axioms(&a).passed() {
            continue;
        }
        n_fixtures += 1;
        match wedderburn::block_diagonalize(&a, SEED) {
            Ok(dec) => ring_agreement(&a, &dec, &mut f, fx.name),
            Err(e) => f.check(false, || format!("{}: {e}", fx.name)),
        }
    }
    f.finish(format!(
        "4 decompositions match, max residual {worst:.2e}; rings agree on {n_fixtures} algebra fixtures"
    ))
}

fn criterion4() -> Outcome {
    let mut f = Failures::default();
    for (ring, n, m, want) in [(R, 2, 2, (10, 9, 1)), (C, 2, 2, (16, 16, 0)), (H, 1, 1, (10, 1, 9))] {
        let r = locality::deficit_row(ring, n, m).unwrap();
        let got = (r.sym_dim, r.span_dim, r.deficit);
        f.check(got == want, || format!("({ring},{n},{m}) gave {got:?}"));
    }
    for n in 1..=3 {
        for m in 1..=3 {
            let r = locality::deficit_row(R, n, m).unwrap();
            let want = n * (n - 1) / 2 * (m * (m - 1) / 2);
            f.check(r.deficit == want, || format!("real ({n},{m}): {} != {want}", r.deficit));
            let c = locality::deficit_row(C, n, m).unwrap();
            f.check(c.deficit == 0, || format!("complex ({n},{m}): {}", c.deficit));
        }
    }
    f.finish("table rows exact; real n,m<=3 match the formula; complex deficit 0".into())
}

fn criterion5() -> Outcome {
    let mut f = Failures::default();
    let a = matrix_algebra(&[(2, R)]).unwrap();
    let pure = State::new(&a, vec![1.0, 0.0, 0.0, 0.0]).unwrap();
    let tracial = State::tracial(&a).unwrap();
    let mut dims = Vec::new();
    let mut worst = 0.0_f64;
    for (name, phi, want) in [("pure", &pure, 2), ("tracial", &tracial, 4)] {
        let g = gns_representation(&a, phi).unwrap();
        dims.push(g.carrier_dim);
        f.check(g.carrier_dim == want, || format!("{name}: carrier dim {}", g.carrier_dim));
        for i in 0..a.dim() {
            let e = a.basis_element(i);
            let r = (phi.expectation(&e).unwrap() - g.vector_expectation(e.coords())).abs();
            worst = worst.max(r);
            f.check(r < 1e-9, || format!("{name}: basis {i} residual {r:.2e}"));
            for j in 0..a.dim() {
                let ej = a.basis_element(j);
                let prod = a.product_coords(e.coords(), ej.coords());
                let hom = g.represent(&prod) - g.represent(e.coords()) * g.represent(ej.coords());
                let h = hom.abs().max();
                f.check(h < 1e-9, || format!("{name}: pi not multiplicative at ({i},{j}): {h:.2e}"));
            }
        }
    }
    f.finish(format!("carrier dims {dims:?}, reconstruction residual {worst:.2e}"))
}

fn criterion6() -> Outcome {
    let mut f = Failures::default();
    let b3 = qlogic::boolean_lattice(3).unwrap();
    let mo2 = qlogic::mo2();
    let o6 = qlogic::o6();
    let ax = qlogic::verify_axioms(&b3);
    f.check(ax.passed(), || format!("B3 axioms: {:?}", ax.checks.iter().find(|c| !c.pass)));
    f.check(qlogic::is_distributive(&b3).unwrap().pass, || "B3 not distributive".into());
    let ax = qlogic::verify_axioms(&mo2);
    f.check(ax.passed(), || format!("MO2 axioms: {:?}", ax.checks.iter().find(|c| !c.pass)));
    let d = qlogic::is_distributive(&mo2).unwrap();
    f.check(!d.pass && d.witness.is_some(), || "MO2 distributive".into());

    let oc = qlogic::verify_orthocomplement(&o6);
    f.check(oc.passed() && oc.passes("order_reversing"), || "O6 orthocomplement".into());
    f.check(qlogic::verify_de_morgan(&o6).unwrap().pass, || "O6 De Morgan".into());
    let om = qlogic::verify_orthomodular(&o6);
    let om_check = om.get("orthomodular").unwrap();
    f.check(!om_check.pass && om_check.witness.is_some(), || "O6 orthomodular".into());

    match qlogic::find_nonreversing_complement(6).unwrap() {
        Some(w) => {
            let l = &w.lattice;
            let r = qlogic::verify_orthocomplement(l);
            f.check(r.passes("involutive") && r.passes("complement_meet"), || "witness laws".into());
            f.check(!r.passes("order_reversing"), || "witness reverses order".into());
            // direct check of the stored pair
            let (p, q) = w.pair;
            let (np, nq) = (l.neg(p).unwrap(), l.neg(q).unwrap());
            f.check(l.leq(p, q) && !l.leq(nq, np), || format!("pair {:?} is not a violation", w.pair));
            for x in 0..l.size() {
                f.check(l.meet(x, l.neg(x).unwrap()).unwrap() == l.bottom(), || format!("{x} meets its complement"));
            }
        }
        None => f.check(false, || "no nonreversing complement at size 6".into()),
    }
    f.finish("B3 I-V+distributive; MO2 I-V, not distributive; O6 fails orthomodularity; size-6 nonreversing witness".into())
}

fn criterion7() -> Outcome {
    let mut f = Failures::default();
    let cases = [(R, 2), (R, 3), (R, 4), (C, 2), (C, 3), (C, 4), (H, 2), (H, 3)];
    let mut worst = 0.0_f64;
    for (k, n) in cases {
        let r = hilbert_lattice::verify_pointwise_axioms(k, n, 1000, SEED).unwrap();
        for c in &r.checks {
            f.check(c.pass, || format!("{k}^{n} {} residual {:.2e}", c.check, c.max_residual));
            if c.check != "distributivity_counterexample" {
                worst = worst.max(c.max_residual);
            }
        }
        for name in ["double_complement", "orthomodular", "order_reversal", "covering", "distributivity_counterexample"] {
            f.check(r.get(name).is_some(), || format!("{k}^{n}: {name} missing"));
        }
    }
    f.finish(format!("8 (ring, n) pairs x 1000 samples, max residual {worst:.2e}"))
}

/// Overlapping chain `span(u_α, u_{α+1})` in a random orthonormal basis.
fn rotated_chain<S: Scalar>(n: usize) -> Vec<Subspace<S>> {
    let mut rng = sample_rng(SEED ^ 8, 0);
    let u = Subspace::<S>::random(n, n, &mut rng);
    let b = u.basis();
    (0..n - 1)
        .map(|a| Subspace::span(n, &[b[a].clone(), b[a + 1].clone()]).unwrap())
        .collect()
}

fn subsets(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for i in 0..n {
        let grown: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.len() < max)
            .map(|s| {
                let mut t = s.clone();
                t.push(i);
                t
            })
            .collect();
        out.extend(grown);
    }
    out
}

fn criterion8() -> Outcome {
    let mut f = Failures::default();
    let mut details = Vec::new();
    for k in [R, C] {
        let fam = hilbert_lattice::orthogonal_atom_family(k, 4).unwrap();
        f.check(fam.max_cross < 1e-9, || format!("{k}^4 cyclic: max cross {:.2e}", fam.max_cross));
        details.push(format!("{k}^4 cyclic dims {:?}", fam.dims));
    }
    let chains = [
        summarize_family(&soler_subspace_family(&rotated_chain::<f64>(4)).unwrap()),
        summarize_family(&soler_subspace_family(&rotated_chain::<Complex64>(4)).unwrap()),
    ];
    for fam in chains {
        f.check(fam.max_cross < 1e-9, || format!("{} chain: max cross {:.2e}", fam.ring, fam.max_cross));
        f.check(fam.nonzero > 0, || format!("{} chain: empty family", fam.ring));
        details.push(format!("{}^4 chain dims {:?}", fam.ring, fam.dims));
    }
    let mut n_lattices = 0;
    let mut n_families = 0;
    for fx in fixtures::all() {
        if fx.kind != fixtures::FixtureKind::Lattice {
            continue;
        }
        let l = FiniteOrtholattice::from_json(&fx.contents).unwrap();
        if !qlogic::verify_orthocomplement(&l).passed() {
            continue;
        }
        n_lattices += 1;
        for gens in subsets(l.size(), 4) {
            let fam = qlogic::soler_family(&l, &gens).unwrap();
            n_families += 1;
            f.check(fam.orthogonal.pass, || format!("{} generators {gens:?}", fx.name));
        }
    }
    details.push(format!("{n_families} lattice families on {n_lattices} ortholattices orthogonal"));
    f.finish(details.join("; "))
}

fn criterion9() -> Outcome {
    let mut f = Failures::default();
    let bin = env!("CARGO_BIN_EXE_starlattice");
    let seed = SEED.to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec!["verify-algebra", "fixture:scrambled-m2-m3.json", "--seed", &seed],
        vec!["verify-algebra", "fixture:broken-assoc.json", "--seed", &seed],
        vec!["decompose", "fixture:group-c3.json", "--seed", &seed],
        vec!["tensor-deficit", "--ring", "H", "2", "2"],
        vec!["verify-lattice", "fixture:o6.json", "--expect-fail", "orthomodular"],
        vec!["subspace", "--ring", "H", "--dim", "3", "--samples", "300", "--seed", &seed],
        vec!["list-fixtures"],
    ];
    for args in &runs {
        let a = Command::new(bin).args(args).output().unwrap();
        let b = Command::new(bin).args(args).output().unwrap();
        f.check(a.stdout == b.stdout && a.status == b.status, || format!("{args:?} differs between runs"));
        f.check(!a.stdout.is_empty(), || format!("{args:?} printed nothing"));
    }
    let one = criterion1_reports(1);
    let many = criterion1_reports(4);
    f.check(one == many, || "criterion-1 reports depend on the worker count".into());
    f.finish(format!("{} CLI commands byte-identical; criterion-1 reports equal for 1 and 4 workers", runs.len()))
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 9] = [
        (1, "C*-condition suite", criterion1, Some(Duration::from_secs(30))),
        (2, "positivity equivalence", criterion2, Some(Duration::from_secs(60))),
        (3, "Wedderburn decomposition", criterion3, None),
        (4, "locality deficit", criterion4, None),
        (5, "GNS construction", criterion5, None),
        (6, "ortholattice battery", criterion6, Some(Duration::from_secs(10))),
        (7, "subspace lattices", criterion7, Some(Duration::from_secs(60))),
        (8, "orthogonal atom families", criterion8, None),
        (9, "determinism", criterion9, None),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let mut out = run();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            if elapsed > limit {
                out.pass = false;
                out.detail = format!("{} (exceeded {}s)", out.detail, limit.as_secs());
            }
        }
        failed += !out.pass as usize;
        println!(
            "criterion {id} [{name}]: {} ({:.2}s) {}",
            if out.pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            out.detail
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
