//! Lattices of subspaces of `K^n`, `K = ℝ, ℂ, ℍ`.
//!
//! Vectors are right `K`-modules: scalars multiply from the right and the
//! Hermitian form `f(x, y) = Σ conj(x_i) y_i` is conjugate-linear in the first
//! slot. A subspace is stored through a `K`-orthonormal basis.
//!
//! Factorizations go through the real embedding `K^n ≅ ℝ^{dn}`: a subspace
//! becomes the real span of `b_j · u_r` for every basis vector `b_j` and ring
//! unit `u_r`, real orthogonality coincides with `f`-orthogonality on such
//! spans, and results are pulled back by a pivoted Gram–Schmidt run in `K`
//! arithmetic. The same Gram–Schmidt on raw generators is an independent
//! route used as a cross-check.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, RANK_TOL};
use crate::report::{AxiomReport, CheckResult, Witness};
use crate::sampling::{par_map, sample_rng};
use crate::scalars::{Quaternion, Scalar, ScalarRing};

/// Subspace comparison threshold on projector entries.
pub const SUBSPACE_TOL: f64 = 1e-8;
/// Fraction (one in this many) of samples that are recomputed by the
/// direct Gram–Schmidt route.
pub const CROSS_CHECK_EVERY: usize = 10;

/// `f(x, y) = Σ conj(x_i) y_i`.
pub fn hermitian_form<S: Scalar>(x: &[S], y: &[S]) -> Result<S> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    Ok(form(x, y))
}

fn form<S: Scalar>(x: &[S], y: &[S]) -> S {
    x.iter().zip(y).fold(S::zero(), |acc, (&a, &b)| acc + a.conj() * b)
}

#[cfg(test)]
fn to_real<S: Scalar>(v: &[S]) -> Vec<f64> {
    v.iter().flat_map(|s| s.coords()).collect()
}

fn from_real<S: Scalar>(r: &[f64]) -> Vec<S> {
    r.chunks(S::RING.real_dim()).map(S::from_coords).collect()
}

/// Pivoted Gram–Schmidt in `K` arithmetic: repeatedly takes the candidate
/// with the largest residual, stopping at `max_dim` vectors or when every
/// residual is below `tol`.
fn gram_schmidt<S: Scalar>(candidates: Vec<Vec<S>>, tol: f64, max_dim: usize) -> Vec<Vec<S>> {
    let mut res = candidates;
    let mut basis: Vec<Vec<S>> = Vec::new();
    while basis.len() < max_dim {
        let Some((best, norm)) = res
            .iter()
            .enumerate()
            .map(|(i, v)| (i, form(v, v).re().sqrt()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
        else {
            break;
        };
        if norm <= tol {
            break;
        }
        let b: Vec<S> = res.swap_remove(best).into_iter().map(|x| x.scale(1.0 / norm)).collect();
        // one re-orthogonalization pass against earlier vectors
        let b = {
            let mut b = b;
            for e in &basis {
                let c = form(e, &b);
                for (bi, &ei) in b.iter_mut().zip(e) {
                    *bi -= ei * c;
                }
            }
            let nb = form(&b, &b).re().sqrt();
            b.into_iter().map(|x| x.scale(1.0 / nb)).collect::<Vec<S>>()
        };
        for v in res.iter_mut() {
            let c = form(&b, v);
            for (vi, &bi) in v.iter_mut().zip(&b) {
                *vi -= bi * c;
            }
        }
        basis.push(b);
    }
    basis
}

#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<S: Scalar> {
    n: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(n: usize) -> Self {
        Self { n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self::coordinate(n, &(0..n).collect::<Vec<_>>())
    }

    /// Span of the listed standard basis vectors.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        let basis = indices
            .iter()
            .map(|&i| {
                let mut v = vec![S::zero(); n];
                v[i] = S::one();
                v
            })
            .collect();
        Self { n, basis }
    }

    /// `K`-span of arbitrary vectors, by direct Gram–Schmidt with a rank
    /// cut relative to the largest input norm.
    pub fn span(n: usize, vectors: &[Vec<S>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        let scale = vectors.iter().map(|v| form(v, v).re().sqrt()).fold(0.0, f64::max);
        Ok(Self {
            n,
            basis: gram_schmidt(vectors.to_vec(), RANK_TOL * scale, n),
        })
    }

    /// Uniformly distributed `k`-dimensional subspace.
    pub fn random<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Self {
        let k = k.min(n);
        let g: Vec<Vec<S>> = (0..k).map(|_| (0..n).map(|_| S::random(rng)).collect()).collect();
        Self::span(n, &g).expect("lengths match")
    }

    /// Pulls back a real orthonormal basis of an `K`-invariant subspace of
    /// `ℝ^{dn}`.
    fn from_real_span(n: usize, r: &DMatrix<f64>) -> Self {
        let d = S::RING.real_dim();
        let k = (r.ncols() + d / 2) / d;
        let cands = (0..r.ncols()).map(|c| from_real::<S>(r.column(c).as_slice())).collect();
        Self {
            n,
            basis: gram_schmidt(cands, 1e-6, k),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn ring(&self) -> ScalarRing {
        S::RING
    }

    /// Real orthonormal basis of the embedded subspace (`dn × dk`).
    pub fn real_span(&self) -> DMatrix<f64> {
        let d = S::RING.real_dim();
        let mut m = DMatrix::zeros(d * self.n, d * self.dim());
        for (j, b) in self.basis.iter().enumerate() {
            for r in 0..d {
                let u = S::basis(r);
                let col: Vec<f64> = b.iter().flat_map(|&x| (x * u).coords()).collect();
                m.set_column(j * d + r, &nalgebra::DVector::from_vec(col));
            }
        }
        m
    }

    /// Real embedding of the projector `P = B Bᴴ`.
    pub fn real_projector(&self) -> DMatrix<f64> {
        let r = self.real_span();
        &r * r.transpose()
    }

    /// `P = B Bᴴ` over `K`, row-major.
    pub fn projector(&self) -> Vec<S> {
        let n = self.n;
        let mut p = vec![S::zero(); n * n];
        for b in &self.basis {
            for i in 0..n {
                for j in 0..n {
                    p[i * n + j] += b[i] * b[j].conj();
                }
            }
        }
        p
    }

    /// Largest deviation of the basis Gram matrix from the identity.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut r = 0.0_f64;
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                let target = if i == j { S::one() } else { S::zero() };
                r = r.max((form(a, b) - target).abs());
            }
        }
        r
    }

    /// `max |P_M − P_N|`.
    pub fn distance(&self, other: &Self) -> f64 {
        linalg::max_abs(&(self.real_projector() - other.real_projector()))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.distance(other) < SUBSPACE_TOL
    }

    /// `max |P_N P_M − P_M|`, zero exactly when `M ⊆ N`.
    pub fn inclusion_residual(&self, other: &Self) -> f64 {
        let pm = self.real_projector();
        linalg::max_abs(&(other.real_projector() * &pm - pm))
    }

    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.inclusion_residual(other) < SUBSPACE_TOL
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }
}

pub fn ortho_complement<S: Scalar>(m: &Subspace<S>) -> Subspace<S> {
    let r = m.real_span();
    let d = S::RING.real_dim();
    let ns = if m.dim() == 0 {
        DMatrix::identity(d * m.n, d * m.n)
    } else {
        linalg::null_space(&r.transpose(), RANK_TOL)
    };
    Subspace::from_real_span(m.n, &ns)
}

pub fn join<S: Scalar>(m: &Subspace<S>, n: &Subspace<S>) -> Result<Subspace<S>> {
    m.check_ambient(n)?;
    let (a, b) = (m.real_span(), n.real_span());
    let mut cat = DMatrix::zeros(a.nrows(), a.ncols() + b.ncols());
    cat.columns_mut(0, a.ncols()).copy_from(&a);
    cat.columns_mut(a.ncols(), b.ncols()).copy_from(&b);
    Ok(Subspace::from_real_span(m.n, &linalg::column_space(&cat, RANK_TOL)))
}

/// `(M⊥ ∨ N⊥)⊥`.
pub fn meet<S: Scalar>(m: &Subspace<S>, n: &Subspace<S>) -> Result<Subspace<S>> {
    Ok(ortho_complement(&join(&ortho_complement(m), &ortho_complement(n))?))
}

/// Join by Gram–Schmidt on the concatenated bases, without the real
/// embedding.
pub fn join_direct<S: Scalar>(m: &Subspace<S>, n: &Subspace<S>) -> Result<Subspace<S>> {
    m.check_ambient(n)?;
    let mut v = m.basis.clone();
    v.extend(n.basis.iter().cloned());
    Subspace::span(m.n, &v)
}

/// Intersection as the common null space of `I − P_M` and `I − P_N`.
pub fn meet_by_null_space<S: Scalar>(m: &Subspace<S>, n: &Subspace<S>) -> Result<Subspace<S>> {
    m.check_ambient(n)?;
    let d = S::RING.real_dim() * m.n;
    let id = DMatrix::<f64>::identity(d, d);
    let mut stacked = DMatrix::zeros(2 * d, d);
    stacked.rows_mut(0, d).copy_from(&(&id - m.real_projector()));
    stacked.rows_mut(d, d).copy_from(&(&id - n.real_projector()));
    Ok(Subspace::from_real_span(m.n, &linalg::null_space(&stacked, RANK_TOL)))
}

#[derive(Debug, Clone, Default)]
struct Sample {
    double_complement: f64,
    orthomodular: f64,
    order_reversal: (bool, f64),
    covering: bool,
    dimension_sum: bool,
    projector_dictionary: f64,
    atomistic: f64,
    cross_check: Option<f64>,
}

fn random_dim<R: Rng>(rng: &mut R, n: usize) -> usize {
    rng.random_range(0..=n)
}

fn pointwise_sample<S: Scalar>(n: usize, seed: u64, index: usize) -> Sample {
    let mut rng = sample_rng(seed, index as u64);
    let mut s = Sample::default();

    let m = Subspace::<S>::random(n, random_dim(&mut rng, n), &mut rng);
    let mc = ortho_complement(&m);
    s.double_complement = ortho_complement(&mc).distance(&m);
    s.dimension_sum = m.dim() + mc.dim() == n;
    let pm = m.real_projector();
    let pmc = mc.real_projector();
    let id = DMatrix::<f64>::identity(pm.nrows(), pm.nrows());
    s.projector_dictionary = linalg::max_abs(&(&pm * &pmc)).max(linalg::max_abs(&(&pm + &pmc - &id)));

    // nested pair M' ⊆ N from random combinations of N's basis
    let big = Subspace::<S>::random(n, random_dim(&mut rng, n), &mut rng);
    let k = rng.random_range(0..=big.dim());
    let combos: Vec<Vec<S>> = (0..k)
        .map(|_| {
            let coeffs: Vec<S> = (0..big.dim()).map(|_| S::random(&mut rng)).collect();
            (0..n)
                .map(|i| big.basis.iter().zip(&coeffs).fold(S::zero(), |acc, (b, &c)| acc + b[i] * c))
                .collect()
        })
        .collect();
    let small = Subspace::span(n, &combos).expect("lengths match");
    let small_c = ortho_complement(&small);
    let rebuilt = join(&small, &meet(&big, &small_c).expect("same ambient")).expect("same ambient");
    s.orthomodular = rebuilt.distance(&big);
    s.projector_dictionary = s.projector_dictionary.max(small.inclusion_residual(&big));

    // order reversal: nested pair reverses; a random pair keeps the
    // equivalence M ⊆ N ⟺ N⊥ ⊆ M⊥
    let big_c = ortho_complement(&big);
    let rev = big_c.inclusion_residual(&small_c);
    let other = Subspace::<S>::random(n, random_dim(&mut rng, n), &mut rng);
    let other_c = ortho_complement(&other);
    let fwd = m.is_contained_in(&other);
    let back = other_c.is_contained_in(&mc);
    s.order_reversal = (rev < SUBSPACE_TOL && fwd == back, rev);

    // covering: B ∨ p covers B when the line p misses B
    let b = Subspace::<S>::random(n, rng.random_range(0..n), &mut rng);
    let p = Subspace::<S>::random(n, 1, &mut rng);
    let bp_meet = meet(&b, &p).expect("same ambient");
    s.covering = bp_meet.dim() != 0 || join(&b, &p).expect("same ambient").dim() == b.dim() + 1;

    // atomistic: M is the join of the lines through its basis vectors
    let lines = m
        .basis
        .iter()
        .fold(Subspace::zero(n), |acc, v| join(&acc, &Subspace::span(n, std::slice::from_ref(v)).expect("length")).expect("same ambient"));
    s.atomistic = lines.distance(&m);

    if index.is_multiple_of(CROSS_CHECK_EVERY) {
        let via_embedding = join(&m, &other).expect("same ambient");
        let direct = join_direct(&m, &other).expect("same ambient");
        let gs = direct.orthonormality_residual();
        s.cross_check = Some(via_embedding.distance(&direct).max(gs));
    }
    s
}

/// Fixed three-line witness `L₁ ∧ (L₂ ∨ L₃) ≠ (L₁ ∧ L₂) ∨ (L₁ ∧ L₃)`; returns
/// the projector distance between the two sides.
pub fn distributivity_gap<S: Scalar>(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument("needs ambient dimension at least 2".into()));
    }
    let l1 = Subspace::<S>::coordinate(n, &[0]);
    let l2 = Subspace::<S>::coordinate(n, &[1]);
    let mut v = vec![S::zero(); n];
    v[0] = S::one();
    v[1] = S::one();
    let l3 = Subspace::span(n, &[v])?;
    let lhs = meet(&l1, &join(&l2, &l3)?)?;
    let rhs = join(&meet(&l1, &l2)?, &meet(&l1, &l3)?)?;
    Ok(lhs.distance(&rhs))
}

fn pointwise_report<S: Scalar>(n: usize, n_samples: usize, seed: u64, workers: usize) -> AxiomReport {
    let samples = par_map(n_samples, workers, |i| pointwise_sample::<S>(n, seed, i));

    fn residual_check(name: &str, samples: &[Sample], get: impl Fn(&Sample) -> f64) -> CheckResult {
        let max = samples.iter().map(&get).fold(0.0, f64::max);
        let first = samples.iter().position(|s| !(get(s) < SUBSPACE_TOL));
        CheckResult::new(name, first.is_none(), max).with_witness(first.map(|i| Witness::Elements(vec![i])))
    }
    fn bool_check(name: &str, samples: &[Sample], get: impl Fn(&Sample) -> bool) -> CheckResult {
        CheckResult::exact(name, samples.iter().position(|s| !get(s)).map(|i| vec![i]))
    }

    let mut r = AxiomReport::default();
    r.push(residual_check("double_complement", &samples, |s| s.double_complement));
    r.push(residual_check("orthomodular", &samples, |s| s.orthomodular));
    let mut rev = bool_check("order_reversal", &samples, |s| s.order_reversal.0);
    rev.max_residual = samples.iter().map(|s| s.order_reversal.1).fold(0.0, f64::max);
    r.push(rev);
    r.push(bool_check("covering", &samples, |s| s.covering));
    r.push(bool_check("dimension_sum", &samples, |s| s.dimension_sum));
    r.push(residual_check("projector_dictionary", &samples, |s| s.projector_dictionary));
    r.push(residual_check("atomistic", &samples, |s| s.atomistic));
    let cross: Vec<Sample> = samples.iter().filter(|s| s.cross_check.is_some()).cloned().collect();
    if !cross.is_empty() {
        r.push(residual_check("embedding_cross_check", &cross, |s| s.cross_check.unwrap_or(0.0)));
    }
    if n >= 2 {
        let gap = distributivity_gap::<S>(n).unwrap_or(0.0);
        r.push(CheckResult::new("distributivity_counterexample", gap > SUBSPACE_TOL, gap));
    }
    r
}

/// Double complement, orthomodularity, order reversal, covering,
/// atomisticity and the projector dictionary on `n_samples` random
/// subspaces of `K^n`, plus a fixed distributivity counterexample.
pub fn verify_pointwise_axioms(ring: ScalarRing, n: usize, n_samples: usize, seed: u64) -> Result<AxiomReport> {
    verify_pointwise_axioms_with_workers(ring, n, n_samples, seed, 0)
}

pub fn verify_pointwise_axioms_with_workers(
    ring: ScalarRing,
    n: usize,
    n_samples: usize,
    seed: u64,
    workers: usize,
) -> Result<AxiomReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("ambient dimension must be positive".into()));
    }
    Ok(match ring {
        ScalarRing::R => pointwise_report::<f64>(n, n_samples, seed, workers),
        ScalarRing::C => pointwise_report::<Complex64>(n, n_samples, seed, workers),
        ScalarRing::H => pointwise_report::<Quaternion>(n, n_samples, seed, workers),
    })
}

/// `b_α = a_α ∧ ⋀_{β≠α} a_β⊥` inside the subspace lattice.
pub fn soler_subspace_family<S: Scalar>(generators: &[Subspace<S>]) -> Result<Vec<Subspace<S>>> {
    let comps: Vec<Subspace<S>> = generators.iter().map(ortho_complement).collect();
    generators
        .iter()
        .enumerate()
        .map(|(i, a)| {
            comps
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .try_fold(a.clone(), |acc, (_, c)| meet(&acc, c))
        })
        .collect()
}

/// Summary of a family produced by [`soler_subspace_family`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AtomFamily {
    pub ring: ScalarRing,
    pub ambient_dim: usize,
    pub dims: Vec<usize>,
    pub nonzero: usize,
    /// `max_{α≠β} max |P_α P_β|`.
    pub max_cross: f64,
}

pub fn summarize_family<S: Scalar>(family: &[Subspace<S>]) -> AtomFamily {
    let projectors: Vec<DMatrix<f64>> = family.iter().map(Subspace::real_projector).collect();
    let mut max_cross = 0.0_f64;
    for (i, p) in projectors.iter().enumerate() {
        for (j, q) in projectors.iter().enumerate() {
            if i != j {
                max_cross = max_cross.max(linalg::max_abs(&(p * q)));
            }
        }
    }
    AtomFamily {
        ring: S::RING,
        ambient_dim: family.first().map_or(0, Subspace::ambient_dim),
        dims: family.iter().map(Subspace::dim).collect(),
        nonzero: family.iter().filter(|s| s.dim() > 0).count(),
        max_cross,
    }
}

fn cyclic_pairs<S: Scalar>(n: usize) -> Vec<Subspace<S>> {
    (0..n).map(|a| Subspace::coordinate(n, &[a, (a + 1) % n])).collect()
}

/// The family built from the overlapping generators
/// `a_α = span(e_α, e_{α+1 mod n})`.
pub fn orthogonal_atom_family(ring: ScalarRing, n: usize) -> Result<AtomFamily> {
    if n < 2 {
        return Err(Error::InvalidArgument("needs ambient dimension at least 2".into()));
    }
    Ok(match ring {
        ScalarRing::R => summarize_family(&soler_subspace_family(&cyclic_pairs::<f64>(n))?),
        ScalarRing::C => summarize_family(&soler_subspace_family(&cyclic_pairs::<Complex64>(n))?),
        ScalarRing::H => summarize_family(&soler_subspace_family(&cyclic_pairs::<Quaternion>(n))?),
    })
}
