//! States, the Born rule, the state-space norm, C*-conditions and the GNS
//! construction.
//!
//! A state is a real linear form `φ(x) = ⟨f, x⟩` on coefficient space that
//! is symmetric (`φ(x*) = φ(x)`), positive (`φ(x*x) ≥ 0`) and normalized
//! (`φ(1) = 1`). Positivity is decided on the Gram matrix
//! `G[i][j] = φ(e_i* e_j)`, since `φ(x*x) = xᵀ G x`.
//!
//! The norm `‖x‖² = sup_φ φ(x*x)` is computed spectrally: the supremum is
//! the top of the spectrum of `x*x`, read off the left-regular
//! representation. When the normalized trace of the left-regular
//! representation is a faithful state, its GNS inner product makes that
//! representation orthogonal and the eigenproblem symmetric.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::report::{AxiomReport, CheckResult, Witness};
use crate::sampling::{par_map, sample_rng};
use crate::star_algebra::{symmetric_basis_matrix, AlgebraElement, MatrixBlock, StarAlgebra};

/// Tolerance on state predicates (symmetry, normalization, PSD scale).
pub const STATE_TOL: f64 = 1e-10;
/// Relative tolerance on norm identities and inequalities.
pub const NORM_TOL: f64 = 1e-9;
/// Relative eigenvalue cut for the GNS null space.
pub const GNS_CUT: f64 = 1e-10;
/// Kept GNS directions below this relative size produce a warning.
pub const GNS_WARN: f64 = 1e-6;

/// `G[i][j] = φ(e_i* e_j)`.
pub fn gram_matrix(a: &StarAlgebra, form: &[f64]) -> DMatrix<f64> {
    let d = a.dim();
    // t[k][j] = φ(e_k e_j)
    let mut t = DMatrix::zeros(d, d);
    for k in 0..d {
        for j in 0..d {
            t[(k, j)] = a.basis_product(k, j).iter().map(|&(l, c)| c * form[l]).sum();
        }
    }
    a.involution_matrix().transpose() * t
}

/// PSD decision with the scale-invariant threshold `−STATE_TOL · tr(G)/dim`.
fn psd(g: &DMatrix<f64>) -> (bool, f64) {
    if g.nrows() == 0 {
        return (true, 0.0);
    }
    let min = linalg::min_sym_eigenvalue(g);
    let scale = g.trace().abs() / g.nrows() as f64;
    (min >= -STATE_TOL * scale, min)
}

/// The three state predicates with their residuals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateReport {
    pub symmetric: CheckResult,
    pub positive: CheckResult,
    pub normalized: CheckResult,
    pub min_gram_eigenvalue: f64,
}

impl StateReport {
    pub fn is_state(&self) -> bool {
        self.symmetric.pass && self.positive.pass && self.normalized.pass
    }

    pub fn into_axiom_report(self) -> AxiomReport {
        AxiomReport {
            checks: vec![self.normalized, self.positive, self.symmetric],
        }
    }
}

/// Checks whether `form` defines a state on `a`.
pub fn is_state(a: &StarAlgebra, form: &[f64]) -> Result<StateReport> {
    if form.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: form.len(),
        });
    }
    let scale = linalg::max_abs_slice(form).max(1.0);
    let st = a.involution_matrix().transpose() * nalgebra::DVector::from_column_slice(form);
    let sym_res = st
        .iter()
        .zip(form)
        .fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()));
    let symmetric = CheckResult::new("symmetric", sym_res <= STATE_TOL * scale, sym_res);

    let g = gram_matrix(a, form);
    let (pos, min) = psd(&g);
    let positive = CheckResult::new("positive", pos, (-min).max(0.0));

    let phi_one: f64 = form.iter().zip(a.unit_coords()).map(|(f, u)| f * u).sum();
    let norm_res = (phi_one - 1.0).abs();
    let normalized = CheckResult::new("normalized", norm_res <= STATE_TOL, norm_res);

    Ok(StateReport {
        symmetric,
        positive,
        normalized,
        min_gram_eigenvalue: min,
    })
}

/// Density matrix of a state on a matrix model, stored in the algebra's own
/// coordinates (`ρ = Fᴴ` where `F` is the matrix with entries `Σ_r f_abr u_r`).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    pub model: Vec<MatrixBlock>,
    pub coords: Vec<f64>,
}

impl DensityMatrix {
    /// Block-diagonal real embedding of `ρ`.
    pub fn real_embedding(&self, a: &StarAlgebra) -> DMatrix<f64> {
        a.real_matrix(&self.coords).expect("density matrix needs a matrix model")
    }

    /// `Σ_b Re tr ρ_b`.
    pub fn trace(&self) -> f64 {
        let mut offset = 0;
        let mut t = 0.0;
        for b in &self.model {
            let d = b.ring.real_dim();
            for i in 0..b.n {
                t += self.coords[offset + (i * b.n + i) * d];
            }
            offset += b.real_dim();
        }
        t
    }

    /// Smallest eigenvalue of the Hermitian matrix `ρ`.
    pub fn min_eigenvalue(&self, a: &StarAlgebra) -> f64 {
        linalg::min_sym_eigenvalue(&self.real_embedding(a))
    }

    /// Rank of `ρ` over its ring (real rank of the embedding divided per block).
    pub fn rank(&self, a: &StarAlgebra) -> usize {
        let m = self.real_embedding(a);
        let (vals, _) = linalg::sym_eigen(&m);
        let top = vals.iter().fold(0.0_f64, |x, v| x.max(v.abs()));
        let mut rank = 0;
        let mut row0 = 0;
        for b in &self.model {
            let d = b.ring.real_dim();
            let block = m.view((row0, row0), (b.n * d, b.n * d)).into_owned();
            let (bv, _) = linalg::sym_eigen(&block);
            rank += bv.iter().filter(|v| v.abs() > 1e-10 * top).count() / d;
            row0 += b.n * d;
        }
        rank
    }

    /// `Σ_b Re tr(ρ_b X_b)`, computed as `tr(emb ρ · emb X) / d` per block.
    pub fn born_expectation(&self, a: &StarAlgebra, x: &[f64]) -> f64 {
        let r = self.real_embedding(a);
        let m = a.real_matrix(x).expect("matrix model");
        let mut total = 0.0;
        let mut row0 = 0;
        for b in &self.model {
            let w = b.n * b.ring.real_dim();
            let rb = r.view((row0, row0), (w, w));
            let mb = m.view((row0, row0), (w, w));
            total += (rb * mb).trace() / b.ring.real_dim() as f64;
            row0 += w;
        }
        total
    }
}

/// A validated state on an algebra.
#[derive(Debug, Clone)]
pub struct State<'a> {
    algebra: &'a StarAlgebra,
    form: Vec<f64>,
    density: Option<DensityMatrix>,
}

impl<'a> State<'a> {
    /// Validates `form` and attaches a density matrix when the algebra has a
    /// matrix model.
    pub fn new(a: &'a StarAlgebra, form: Vec<f64>) -> Result<Self> {
        let report = is_state(a, &form)?;
        if !report.is_state() {
            let failed: Vec<&str> = [&report.symmetric, &report.positive, &report.normalized]
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.check.as_str())
                .collect();
            return Err(Error::InvalidState(format!("fails {}", failed.join(", "))));
        }
        let density = a.model().map(|model| DensityMatrix {
            model: model.to_vec(),
            coords: a.involute_coords(&form),
        });
        Ok(Self {
            algebra: a,
            form,
            density,
        })
    }

    /// Normalized trace of the left-regular representation, symmetrized.
    pub fn tracial(a: &'a StarAlgebra) -> Result<Self> {
        Self::new(a, tracial_form(a))
    }

    /// State `φ(x) = Σ_b Re tr(ρ_b X_b)` of a density matrix on a matrix model.
    pub fn from_density(a: &'a StarAlgebra, rho_coords: Vec<f64>) -> Result<Self> {
        if a.model().is_none() {
            return Err(Error::InvalidState("algebra has no matrix model".into()));
        }
        let form = a.involute_coords(&rho_coords);
        Self::new(a, form)
    }

    pub fn algebra(&self) -> &'a StarAlgebra {
        self.algebra
    }

    pub fn form(&self) -> &[f64] {
        &self.form
    }

    pub fn density_matrix(&self) -> Option<&DensityMatrix> {
        self.density.as_ref()
    }

    pub fn expectation(&self, x: &AlgebraElement<'_>) -> Result<f64> {
        expectation(self, x)
    }
}

/// `φ(x)`.
pub fn expectation(phi: &State<'_>, x: &AlgebraElement<'_>) -> Result<f64> {
    if !std::ptr::eq(phi.algebra, x.algebra()) {
        return Err(Error::MismatchedAlgebras);
    }
    Ok(phi.form.iter().zip(x.coords()).map(|(f, c)| f * c).sum())
}

/// Coordinates of `x ↦ tr(L_x)/dim`, symmetrized under the involution.
pub fn tracial_form(a: &StarAlgebra) -> Vec<f64> {
    let d = a.dim();
    let raw: Vec<f64> = (0..d)
        .map(|i| {
            let tr: f64 = (0..d)
                .map(|j| {
                    a.basis_product(i, j)
                        .iter()
                        .filter(|&&(k, _)| k == j)
                        .map(|&(_, c)| c)
                        .sum::<f64>()
                })
                .sum();
            tr / d as f64
        })
        .collect();
    let st = a.involution_matrix().transpose() * nalgebra::DVector::from_column_slice(&raw);
    raw.iter().zip(st.iter()).map(|(x, y)| 0.5 * (x + y)).collect()
}

/// Precomputed data for repeated norm evaluations on one algebra.
pub struct NormContext<'a> {
    algebra: &'a StarAlgebra,
    /// `G^{1/2}` and `G^{-1/2}` of the trace-state Gram matrix when faithful.
    whitening: Option<(DMatrix<f64>, DMatrix<f64>)>,
}

impl<'a> NormContext<'a> {
    /// Fails with [`Error::EmptyStateSpace`] unless the normalized trace is a
    /// state, which is how state existence is certified here.
    pub fn new(a: &'a StarAlgebra) -> Result<Self> {
        let tau = tracial_form(a);
        let report = is_state(a, &tau)?;
        if !report.is_state() {
            return Err(Error::EmptyStateSpace);
        }
        let g = gram_matrix(a, &tau);
        let (vals, vecs) = linalg::sym_eigen(&g);
        let top = vals.last().copied().unwrap_or(0.0);
        let whitening = (vals[0] > GNS_CUT * top).then(|| {
            let sqrt = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
                vals.len(),
                vals.iter().map(|v| v.sqrt()),
            ));
            let inv = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
                vals.len(),
                vals.iter().map(|v| 1.0 / v.sqrt()),
            ));
            (
                &vecs * sqrt * vecs.transpose(),
                &vecs * inv * vecs.transpose(),
            )
        });
        Ok(Self { algebra: a, whitening })
    }

    /// Spectrum (ascending, real parts) of a symmetric element.
    fn symmetric_spectrum(&self, p: &[f64]) -> Vec<f64> {
        let l = self.algebra.left_regular(p);
        match &self.whitening {
            Some((w, winv)) => linalg::sym_eigen(&(w * l * winv)).0,
            None => {
                let mut v = linalg::real_eigenvalues(&l);
                v.sort_by(f64::total_cmp);
                v
            }
        }
    }

    /// `(sup_φ φ(x*x))^{1/2}`.
    pub fn norm(&self, x: &[f64]) -> f64 {
        let xs = self.algebra.involute_coords(x);
        let p = self.algebra.product_coords(&xs, x);
        let spec = self.symmetric_spectrum(&p);
        spec.last().copied().unwrap_or(0.0).max(0.0).sqrt()
    }

    /// Smallest spectral value of the symmetric element `p`.
    pub fn min_spectrum(&self, p: &[f64]) -> f64 {
        self.symmetric_spectrum(p).first().copied().unwrap_or(0.0)
    }
}

/// The state-space norm of `x`.
pub fn sup_norm(a: &StarAlgebra, x: &AlgebraElement<'_>) -> Result<f64> {
    if !std::ptr::eq(a, x.algebra()) {
        return Err(Error::MismatchedAlgebras);
    }
    Ok(NormContext::new(a)?.norm(x.coords()))
}

#[derive(Debug, Clone)]
struct NormSample {
    x: Vec<f64>,
    triangle: f64,
    submultiplicative: f64,
    cstar_identity: f64,
    star_isometry: f64,
    homogeneity: f64,
    one_plus_star_square: f64,
    positivity_argument: f64,
}

fn norm_sample(ctx: &NormContext<'_>, seed: u64, index: usize) -> NormSample {
    let a = ctx.algebra;
    let mut rng = sample_rng(seed, index as u64);
    let x = a.random_element(&mut rng).into_coords();
    let y = a.random_element(&mut rng).into_coords();
    let lambda: f64 = rng.sample(StandardNormal);

    let nx = ctx.norm(&x);
    let ny = ctx.norm(&y);
    let sum: Vec<f64> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
    let xy = a.product_coords(&x, &y);
    let xs = a.involute_coords(&x);
    let xsx = a.product_coords(&xs, &x);
    let scaled: Vec<f64> = x.iter().map(|v| lambda * v).collect();

    let rel = |v: f64, s: f64| if s > 0.0 { v / s } else { v };
    let triangle = rel((ctx.norm(&sum) - nx - ny).max(0.0), nx + ny);
    let submultiplicative = rel((ctx.norm(&xy) - nx * ny).max(0.0), nx * ny);
    let nx2 = nx * nx;
    let cstar_identity = rel((ctx.norm(&xsx) - nx2).abs(), nx2);
    let nxs = ctx.norm(&xs);
    let star_isometry = rel((nxs * nxs - nx2).abs(), nx2);
    let homogeneity = rel((ctx.norm(&scaled) - lambda.abs() * nx).abs(), lambda.abs() * nx);

    let mut one_plus: Vec<f64> = xsx.clone();
    for (v, u) in one_plus.iter_mut().zip(a.unit_coords()) {
        *v += u;
    }
    let one_plus_star_square = (1.0 - ctx.min_spectrum(&one_plus)).max(0.0);

    // y*y + (xy)*(xy) is bounded below by y*y, so its norm is at least ‖y‖²
    let ys = a.involute_coords(&y);
    let yy = a.product_coords(&ys, &y);
    let xys = a.involute_coords(&xy);
    let xyxy = a.product_coords(&xys, &xy);
    let combined: Vec<f64> = yy.iter().zip(&xyxy).map(|(p, q)| p + q).collect();
    let ratio = rel(ctx.norm(&combined), ny * ny);
    let positivity_argument = (1.0 - ratio).max(0.0);

    NormSample {
        x,
        triangle,
        submultiplicative,
        cstar_identity,
        star_isometry,
        homogeneity,
        one_plus_star_square,
        positivity_argument,
    }
}

/// Banach-algebra inequalities, the C*-identity and the invertibility of
/// `1 + x*x` on `n_samples` seeded random elements.
pub fn verify_banach_cstar(a: &StarAlgebra, n_samples: usize, seed: u64) -> AxiomReport {
    verify_banach_cstar_with_workers(a, n_samples, seed, 0)
}

/// As [`verify_banach_cstar`], on `workers` threads; the report does not
/// depend on the worker count.
pub fn verify_banach_cstar_with_workers(
    a: &StarAlgebra,
    n_samples: usize,
    seed: u64,
    workers: usize,
) -> AxiomReport {
    let ctx = match NormContext::new(a) {
        Ok(ctx) => ctx,
        Err(e) => {
            let mut r = AxiomReport::default();
            r.push(CheckResult::new(format!("state_space: {e}"), false, f64::INFINITY));
            return r;
        }
    };
    let samples = par_map(n_samples, workers, |i| norm_sample(&ctx, seed, i));

    type Field = fn(&NormSample) -> f64;
    let fields: [(&str, Field); 7] = [
        ("triangle", |s| s.triangle),
        ("submultiplicative", |s| s.submultiplicative),
        ("cstar_identity", |s| s.cstar_identity),
        ("star_isometry", |s| s.star_isometry),
        ("homogeneity", |s| s.homogeneity),
        ("one_plus_star_square_invertible", |s| s.one_plus_star_square),
        ("positivity_argument", |s| s.positivity_argument),
    ];
    let mut report = AxiomReport::default();
    for (name, get) in fields {
        let max = samples.iter().map(get).fold(0.0_f64, f64::max);
        let witness = samples
            .iter()
            .find(|s| !(get(s) <= NORM_TOL))
            .map(|s| Witness::Coords(s.x.clone()));
        report.push(CheckResult::new(name, witness.is_none(), max).with_witness(witness));
    }
    report
}

/// Outcome of comparing `φ(x*x) ≥ 0 ∀x` with `φ(s²) ≥ 0 ∀ s = s*`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub full_gram_psd: bool,
    pub full_gram_min: f64,
    pub squares_psd: bool,
    pub squares_min: f64,
    pub agree: bool,
}

/// Gram matrix of `φ(s_i s_j + s_j s_i)/2` on the symmetric subspace.
fn square_gram(a: &StarAlgebra, form: &[f64], sym: &DMatrix<f64>) -> DMatrix<f64> {
    let k = sym.ncols();
    let cols: Vec<Vec<f64>> = (0..k).map(|c| sym.column(c).iter().copied().collect()).collect();
    let phi = |v: &[f64]| -> f64 { v.iter().zip(form).map(|(x, f)| x * f).sum() };
    let mut h = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let v = 0.5
                * (phi(&a.product_coords(&cols[i], &cols[j]))
                    + phi(&a.product_coords(&cols[j], &cols[i])));
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    h
}

/// Decides both positivity conditions independently for one form.
pub fn check_positivity_equivalence(a: &StarAlgebra, form: &[f64]) -> Result<EquivalenceReport> {
    let sym = symmetric_basis_matrix(a);
    positivity_equivalence_with_basis(a, form, &sym)
}

fn positivity_equivalence_with_basis(
    a: &StarAlgebra,
    form: &[f64],
    sym: &DMatrix<f64>,
) -> Result<EquivalenceReport> {
    if form.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: form.len(),
        });
    }
    let (full_gram_psd, full_gram_min) = psd(&gram_matrix(a, form));
    let (squares_psd, squares_min) = psd(&square_gram(a, form, sym));
    Ok(EquivalenceReport {
        full_gram_psd,
        full_gram_min,
        squares_psd,
        squares_min,
        agree: full_gram_psd == squares_psd,
    })
}

/// Summary of a random sweep over symmetric normalized forms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceSweep {
    pub samples: usize,
    pub positive: usize,
    pub disagreements: usize,
    /// Forms on which the two conditions disagree, kept verbatim.
    pub witnesses: Vec<Vec<f64>>,
}

/// Draws `n_samples` symmetric normalized forms `τ + t·g` (τ the trace
/// state, `g` symmetric with `g(1) = 0`, `t` log-uniform on `[e⁻³, e²]`) and
/// compares both positivity conditions on each.
pub fn positivity_equivalence_sweep(
    a: &StarAlgebra,
    n_samples: usize,
    seed: u64,
    workers: usize,
) -> Result<EquivalenceSweep> {
    let tau = tracial_form(a);
    let tau_one: f64 = tau.iter().zip(a.unit_coords()).map(|(x, u)| x * u).sum();
    if tau_one.abs() < STATE_TOL {
        return Err(Error::EmptyStateSpace);
    }
    let sym = symmetric_basis_matrix(a);
    let st = a.involution_matrix().transpose();
    let results = par_map(n_samples, workers, |i| {
        let mut rng = sample_rng(seed, i as u64);
        let g: Vec<f64> = (0..a.dim()).map(|_| rng.sample(StandardNormal)).collect();
        let gs = &st * nalgebra::DVector::from_column_slice(&g);
        let mut g: Vec<f64> = g.iter().zip(gs.iter()).map(|(x, y)| 0.5 * (x + y)).collect();
        let g_one: f64 = g.iter().zip(a.unit_coords()).map(|(x, u)| x * u).sum();
        for (v, t) in g.iter_mut().zip(&tau) {
            *v -= g_one / tau_one * t;
        }
        let t = rng.random_range(-3.0..2.0_f64).exp();
        let form: Vec<f64> = tau.iter().zip(&g).map(|(p, q)| (p + t * q) / tau_one).collect();
        let r = positivity_equivalence_with_basis(a, &form, &sym).expect("dimensions match");
        (form, r)
    });
    let mut sweep = EquivalenceSweep {
        samples: n_samples,
        positive: 0,
        disagreements: 0,
        witnesses: Vec::new(),
    };
    for (form, r) in results {
        if r.full_gram_psd {
            sweep.positive += 1;
        }
        if !r.agree {
            sweep.disagreements += 1;
            sweep.witnesses.push(form);
        }
    }
    Ok(sweep)
}

/// Finite-dimensional GNS data: `π(e_i)` on the quotient of the algebra by
/// the null space of `⟨x, y⟩ = φ(x*y)`, with cyclic vector `Ω = [1]`.
#[derive(Debug, Clone)]
pub struct GnsRepresentation {
    pub carrier_dim: usize,
    pub representation_matrices: Vec<DMatrix<f64>>,
    pub cyclic_vector: Vec<f64>,
    /// Set when a kept direction is within `GNS_WARN` of the cut.
    pub warnings: Vec<String>,
}

impl GnsRepresentation {
    /// `π(x) = Σ_i x_i π(e_i)`.
    pub fn represent(&self, x: &[f64]) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.carrier_dim, self.carrier_dim);
        for (xi, p) in x.iter().zip(&self.representation_matrices) {
            if *xi != 0.0 {
                m += p * *xi;
            }
        }
        m
    }

    /// `⟨Ω, π(x) Ω⟩`.
    pub fn vector_expectation(&self, x: &[f64]) -> f64 {
        let omega = nalgebra::DVector::from_column_slice(&self.cyclic_vector);
        omega.dot(&(self.represent(x) * &omega))
    }
}

pub fn gns_representation(a: &StarAlgebra, phi: &State<'_>) -> Result<GnsRepresentation> {
    if !std::ptr::eq(a, phi.algebra) {
        return Err(Error::MismatchedAlgebras);
    }
    let report = is_state(a, &phi.form)?;
    if !report.is_state() {
        return Err(Error::InvalidState("GNS needs a valid state".into()));
    }
    let g = gram_matrix(a, &phi.form);
    let g = (&g + g.transpose()) * 0.5;
    let (vals, vecs) = linalg::sym_eigen(&g);
    let top = vals.last().copied().unwrap_or(0.0);
    let mut warnings = Vec::new();
    let kept: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] > GNS_CUT * top).collect();
    if kept.iter().any(|&i| vals[i] < GNS_WARN * top) {
        warnings.push(format!(
            "ill-conditioned state: smallest kept Gram eigenvalue {:e} relative to {:e}",
            kept.iter().map(|&i| vals[i]).fold(f64::INFINITY, f64::min),
            top
        ));
    }
    let k = kept.len();
    // u_c = v_c / sqrt(λ_c) is G-orthonormal; π(x)_{cd} = u_cᵀ G L_x u_d
    let mut u = DMatrix::zeros(a.dim(), k);
    for (c, &i) in kept.iter().enumerate() {
        u.set_column(c, &(vecs.column(i) / vals[i].sqrt()));
    }
    let ug = u.transpose() * &g;
    let representation_matrices = (0..a.dim())
        .map(|i| {
            let l = a.left_regular(&a.basis_element(i).into_coords());
            &ug * l * &u
        })
        .collect();
    let unit = nalgebra::DVector::from_column_slice(a.unit_coords());
    let omega = &ug * unit;
    Ok(GnsRepresentation {
        carrier_dim: k,
        representation_matrices,
        cyclic_vector: omega.iter().copied().collect(),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ScalarRing;
    use crate::star_algebra::{group_star_algebra, matrix_algebra, symmetric_basis};

    fn m2r() -> StarAlgebra {
        matrix_algebra(&[(2, ScalarRing::R)]).unwrap()
    }

    // M2(R) basis order: E11, E12, E21, E22
    const E11: usize = 0;
    const E12: usize = 1;
    const E22: usize = 3;

    #[test]
    fn born_rule_examples() {
        let a = m2r();
        let mixed = State::new(&a, vec![0.5, 0.0, 0.0, 0.5]).unwrap();
        assert!((mixed.expectation(&a.unit()).unwrap() - 1.0).abs() < 1e-15);
        assert!((mixed.expectation(&a.basis_element(E11)).unwrap() - 0.5).abs() < 1e-15);

        let pure = State::new(&a, vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        let x = a.element(vec![1.0, 0.0, 0.0, 2.0]).unwrap();
        assert!((pure.expectation(&x).unwrap() - 1.0).abs() < 1e-15);
        let rho = pure.density_matrix().unwrap();
        assert!((rho.born_expectation(&a, x.coords()) - 1.0).abs() < 1e-12);
        assert_eq!(rho.rank(&a), 1);
    }

    #[test]
    fn is_state_examples() {
        let a = m2r();
        assert!(is_state(&a, &[0.5, 0.0, 0.0, 0.5]).unwrap().is_state());
        let r = is_state(&a, &[1.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(!r.normalized.pass && r.symmetric.pass && r.positive.pass);

        // φ(X) = tr(D X)/tr(D), D = diag(1, −0.5): Gram = I₂ ⊗ diag(2, −1)
        let r = is_state(&a, &[2.0, 0.0, 0.0, -1.0]).unwrap();
        assert!(r.symmetric.pass && r.normalized.pass);
        assert!(!r.positive.pass);
        assert!((r.min_gram_eigenvalue + 1.0).abs() < 1e-12);
        assert!(is_state(&a, &[1.0]).is_err());
    }

    #[test]
    fn positivity_equivalence_examples() {
        let a = m2r();
        let ok = check_positivity_equivalence(&a, &[0.7, 0.2, 0.2, 0.3]).unwrap();
        assert!(ok.full_gram_psd && ok.squares_psd && ok.agree);
        let bad = check_positivity_equivalence(&a, &[2.0, 0.0, 0.0, -1.0]).unwrap();
        assert!(!bad.full_gram_psd && !bad.squares_psd && bad.agree);
    }

    #[test]
    fn sweep_small() {
        let a = m2r();
        let s = positivity_equivalence_sweep(&a, 500, 3, 2).unwrap();
        assert_eq!(s.disagreements, 0);
        assert!(s.positive > 0 && s.positive < s.samples);
    }

    #[test]
    fn norm_examples() {
        let a = m2r();
        assert!((sup_norm(&a, &a.unit()).unwrap() - 1.0).abs() < 1e-12);
        let e12 = a.basis_element(E12);
        assert!((sup_norm(&a, &e12).unwrap() - 1.0).abs() < 1e-12);
        // x*x = E22 for x = E12
        let p = e12.star_square();
        assert_eq!(p, a.basis_element(E22));
        let ctx = NormContext::new(&a).unwrap();
        let mut one_plus = p.coords().to_vec();
        for (v, u) in one_plus.iter_mut().zip(a.unit_coords()) {
            *v += u;
        }
        assert!((ctx.min_spectrum(&one_plus) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn norm_matches_operator_norm() {
        for blocks in [
            vec![(3, ScalarRing::R)],
            vec![(2, ScalarRing::C), (1, ScalarRing::R)],
            vec![(2, ScalarRing::H)],
        ] {
            let a = matrix_algebra(&blocks).unwrap();
            let ctx = NormContext::new(&a).unwrap();
            let mut rng = sample_rng(4, 0);
            for _ in 0..30 {
                let x = a.random_element(&mut rng);
                let op = a.real_matrix(x.coords()).unwrap().singular_values().max();
                let n = ctx.norm(x.coords());
                assert!((n - op).abs() <= 1e-9 * op, "{blocks:?}: {n} vs {op}");
            }
        }
    }

    #[test]
    fn norm_without_whitening_uses_general_spectrum() {
        // the trace form on C3 group algebra is faithful, so exercise both paths
        let a = group_star_algebra(3).unwrap();
        let ctx = NormContext::new(&a).unwrap();
        assert!(ctx.whitening.is_some());
        let general = NormContext {
            algebra: &a,
            whitening: None,
        };
        let x = [0.3, -1.2, 0.8];
        assert!((ctx.norm(&x) - general.norm(&x)).abs() < 1e-10);
    }

    #[test]
    fn random_states_stay_below_the_norm() {
        let a = matrix_algebra(&[(2, ScalarRing::C)]).unwrap();
        let ctx = NormContext::new(&a).unwrap();
        let mut rng = sample_rng(8, 0);
        let x = a.random_element(&mut rng);
        let nx = ctx.norm(x.coords());
        let xsx = x.star_square();
        // density ρ = v vᴴ / |v|² from a random complex vector: a pure state
        for _ in 0..50 {
            let v: Vec<f64> = (0..4).map(|_| rng.sample(StandardNormal)).collect();
            let rho = pure_density_m2c(&v);
            let phi = State::from_density(&a, rho).unwrap();
            assert!(phi.expectation(&xsx).unwrap() <= nx * nx * (1.0 + 1e-12));
        }
        // the top right-singular vector attains the supremum
        let m = a.real_matrix(x.coords()).unwrap();
        let svd = m.svd(false, true);
        let (imax, _) = svd.singular_values.argmax();
        let vt = svd.v_t.unwrap();
        let v = [vt[(imax, 0)], vt[(imax, 1)], vt[(imax, 2)], vt[(imax, 3)]];
        let phi = State::from_density(&a, pure_density_m2c(&v)).unwrap();
        assert!((phi.expectation(&xsx).unwrap() - nx * nx).abs() < 1e-9 * nx * nx);
        assert_eq!(phi.density_matrix().unwrap().rank(&a), 1);
    }

    /// `v v† / |v|²` in M2(C) coordinates from a real 4-vector `(re0, im0, re1, im1)`.
    fn pure_density_m2c(v: &[f64]) -> Vec<f64> {
        use num_complex::Complex64;
        let c = [Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3])];
        let n: f64 = c.iter().map(|z| z.norm_sqr()).sum();
        let mut out = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                let z = c[a] * c[b].conj() / n;
                out.push(z.re);
                out.push(z.im);
            }
        }
        out
    }

    #[test]
    fn skew_elements_have_zero_expectation() {
        let a = matrix_algebra(&[(2, ScalarRing::C), (1, ScalarRing::H)]).unwrap();
        let split = symmetric_basis(&a);
        let mut rng = sample_rng(10, 0);
        for _ in 0..20 {
            let phi = random_state(&a, &mut rng);
            for _ in 0..5 {
                let mut x = a.zero();
                for s in &split.skew {
                    x = x.linear_combination(1.0, s, rng.sample(StandardNormal)).unwrap();
                }
                assert!(phi.expectation(&x).unwrap().abs() < 1e-10);
            }
        }
    }

    /// Convex mixture of the trace state with a random pure-ish perturbation
    /// kept inside the state space.
    fn random_state<'a>(a: &'a StarAlgebra, rng: &mut impl Rng) -> State<'a> {
        let y = a.random_element(rng);
        let p = y.star_square();
        let phi1 = tracial_form(a);
        let w: f64 = p.coords().iter().zip(&phi1).map(|(x, f)| x * f).sum();
        // φ(x) = τ(p x) / τ(p) is a state when τ is a trace
        let form: Vec<f64> = (0..a.dim())
            .map(|i| {
                let px = a.product_coords(p.coords(), &a.basis_element(i).into_coords());
                let sx = a.product_coords(&a.basis_element(i).into_coords(), p.coords());
                0.5 * (px.iter().zip(&phi1).map(|(x, f)| x * f).sum::<f64>()
                    + sx.iter().zip(&phi1).map(|(x, f)| x * f).sum::<f64>())
                    / w
            })
            .collect();
        State::new(a, form).unwrap()
    }

    #[test]
    fn born_rule_consistency_on_random_states() {
        for blocks in [
            vec![(2, ScalarRing::R)],
            vec![(2, ScalarRing::C), (1, ScalarRing::H)],
        ] {
            let a = matrix_algebra(&blocks).unwrap();
            let mut rng = sample_rng(12, 0);
            for _ in 0..20 {
                let phi = random_state(&a, &mut rng);
                let rho = phi.density_matrix().unwrap();
                assert!((rho.trace() - 1.0).abs() < 1e-10);
                assert!(rho.min_eigenvalue(&a) > -1e-10);
                let x = a.random_element(&mut rng);
                let direct = phi.expectation(&x).unwrap();
                assert!((rho.born_expectation(&a, x.coords()) - direct).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn gns_dimensions_and_round_trip() {
        let a = m2r();
        let tracial = State::new(&a, vec![0.5, 0.0, 0.0, 0.5]).unwrap();
        let g = gns_representation(&a, &tracial).unwrap();
        assert_eq!(g.carrier_dim, 4);
        let pure = State::new(&a, vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        let g = gns_representation(&a, &pure).unwrap();
        assert_eq!(g.carrier_dim, 2);
        for i in 0..4 {
            let e = a.basis_element(i).into_coords();
            assert!((g.vector_expectation(&e) - pure.form()[i]).abs() < 1e-9);
        }
        let r = matrix_algebra(&[(1, ScalarRing::R)]).unwrap();
        let phi = State::new(&r, vec![1.0]).unwrap();
        let g = gns_representation(&r, &phi).unwrap();
        assert_eq!(g.carrier_dim, 1);
        assert!((g.representation_matrices[0][(0, 0)] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gns_is_a_star_homomorphism() {
        let a = matrix_algebra(&[(2, ScalarRing::C), (1, ScalarRing::R)]).unwrap();
        let mut rng = sample_rng(14, 0);
        let phi = random_state(&a, &mut rng);
        let g = gns_representation(&a, &phi).unwrap();
        for _ in 0..10 {
            let x = a.random_element(&mut rng);
            let y = a.random_element(&mut rng);
            let xy = x.multiply(&y).unwrap();
            let lhs = g.represent(xy.coords());
            let rhs = g.represent(x.coords()) * g.represent(y.coords());
            assert!(linalg::max_abs(&(lhs - rhs)) < 1e-9);
            let adj = g.represent(x.involute().coords());
            assert!(linalg::max_abs(&(adj - g.represent(x.coords()).transpose())) < 1e-9);
        }
    }

    #[test]
    fn gns_rejects_invalid_state() {
        let a = m2r();
        let fake = State {
            algebra: &a,
            form: vec![2.0, 0.0, 0.0, -1.0],
            density: None,
        };
        assert!(matches!(gns_representation(&a, &fake), Err(Error::InvalidState(_))));
        assert!(matches!(
            State::new(&a, vec![2.0, 0.0, 0.0, -1.0]),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn banach_small_run() {
        let a = matrix_algebra(&[(2, ScalarRing::R)]).unwrap();
        let r = verify_banach_cstar(&a, 50, 1);
        assert!(r.passed(), "{r:?}");
    }
}
