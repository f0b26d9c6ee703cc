//! Numerical Wedderburn–Artin decomposition.
//!
//! The left-regular representation is made orthogonal by the trace form
//! `⟨x, y⟩ = τ(x* y)`; in those coordinates `L_{x*} = L_xᵀ` and likewise for
//! right multiplications. A random symmetric central element separates the
//! simple summands (its eigenspaces are the two-sided ideals), and a random
//! symmetric right multiplication — which commutes with every `L_x` — splits
//! each ideal into irreducible left modules. The division ring of a block is
//! read off the real dimension of its commutant and cross-checked against the
//! number of symmetric elements in the ideal.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, RANK_TOL};
use crate::sampling::sample_rng;
use crate::scalars::ScalarRing;
use crate::star_algebra::StarAlgebra;
use crate::states_norms::{gram_matrix, tracial_form};

/// Eigenvalue clustering tolerance, relative to the spectral radius.
pub const CLUSTER_TOL: f64 = 1e-8;
/// Random draws before giving up.
pub const MAX_ATTEMPTS: u64 = 5;

/// One simple summand `M_n(K)` and the number of times its irreducible
/// module occurs in the carrier space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub n: usize,
    pub ring: ScalarRing,
    pub multiplicity: usize,
}

impl Block {
    /// Real size of one irreducible copy.
    pub fn irrep_dim(&self) -> usize {
        self.n * self.ring.real_dim()
    }
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    /// Sorted by `(d_K, n)` descending.
    pub blocks: Vec<Block>,
    /// Rows: new carrier coordinates; `C L_x C⁻¹` is block diagonal.
    pub change_of_basis: DMatrix<f64>,
    pub residual: f64,
    /// The seed whose draw succeeded.
    pub seed: u64,
}

impl BlockDecomposition {
    /// Diagonal block sizes of `C L_x C⁻¹`, in order.
    pub fn block_pattern(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.irrep_dim(), b.multiplicity))
            .collect()
    }

    /// `Σ d_K n²`.
    pub fn algebra_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.ring.real_dim() * b.n * b.n).sum()
    }

    /// Multiset of `(n, K)` pairs, sorted.
    pub fn signature(&self) -> Vec<(usize, ScalarRing)> {
        let mut v: Vec<(usize, ScalarRing)> = self.blocks.iter().map(|b| (b.n, b.ring)).collect();
        v.sort_by_key(|&(n, k)| (n, k.real_dim()));
        v
    }

    pub fn report(&self) -> DecompositionReport {
        DecompositionReport {
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockEntry {
                    n: b.n,
                    ring: b.ring,
                    multiplicity: b.multiplicity,
                })
                .collect(),
            residual: self.residual,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub n: usize,
    pub ring: ScalarRing,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub blocks: Vec<BlockEntry>,
    pub residual: f64,
    pub seed: u64,
}

/// Basis (as column-major `m²`-vectors) of `{X : X B = B X for all B}`.
pub fn commutant_basis(generators: &[DMatrix<f64>]) -> DMatrix<f64> {
    let Some(first) = generators.first() else {
        return DMatrix::zeros(0, 0);
    };
    let m = first.nrows();
    let id = DMatrix::<f64>::identity(m, m);
    // vec(XB − BX) = (Bᵀ ⊗ I − I ⊗ B) vec(X)
    let mut stacked = DMatrix::zeros(generators.len() * m * m, m * m);
    for (g, b) in generators.iter().enumerate() {
        let k = linalg::kron(&b.transpose(), &id) - linalg::kron(&id, b);
        stacked.view_mut((g * m * m, 0), (m * m, m * m)).copy_from(&k);
    }
    if linalg::max_abs(&stacked) == 0.0 {
        return DMatrix::identity(m * m, m * m);
    }
    linalg::null_space(&stacked, RANK_TOL)
}

pub fn commutant_dimension(generators: &[DMatrix<f64>]) -> usize {
    commutant_basis(generators).ncols()
}

/// Division ring of an irreducible block from the dimension of its commutant.
///
/// The generators must act on an orthonormal carrier with a transpose-closed
/// span. The commutant is then transpose-closed too, and by Schur's lemma
/// the action is irreducible exactly when its only symmetric commuting
/// matrices are scalars; this separates ℍ from `M₂(ℝ)` (both of dimension 4).
pub fn identify_division_ring(generators: &[DMatrix<f64>]) -> Result<ScalarRing> {
    let basis = commutant_basis(generators);
    let c = basis.ncols();
    let m = generators.first().map_or(0, |g| g.nrows());
    let mut sym = DMatrix::zeros(m * m, c);
    for k in 0..c {
        let x = DMatrix::from_column_slice(m, m, basis.column(k).as_slice());
        let s = &x + x.transpose();
        sym.set_column(k, &nalgebra::DVector::from_column_slice(s.as_slice()));
    }
    let symmetric_dim = linalg::rank(&sym, RANK_TOL);
    match ScalarRing::from_real_dim(c) {
        Some(ring) if symmetric_dim == 1 => Ok(ring),
        _ => Err(Error::NotIrreducible { commutant_dim: c }),
    }
}

/// Division ring and block size of a simple algebra of real dimension
/// `dim` with `sym` symmetric dimensions, if the count fits one of
/// `n(n+1)/2` (ℝ), `n²` (ℂ), `n(2n−1)` (ℍ). The three counts never coincide.
pub fn ring_from_hermitian_count(dim: usize, sym: usize) -> Option<(ScalarRing, usize)> {
    ScalarRing::ALL.into_iter().find_map(|k| {
        let d = k.real_dim();
        if !dim.is_multiple_of(d) {
            return None;
        }
        let n = (dim / d).isqrt();
        (n * n * d == dim && k.hermitian_dim(n) == sym).then_some((k, n))
    })
}

/// Whitened regular representation: `W = G^{1/2}` of the trace-form Gram.
struct Whitened {
    w: DMatrix<f64>,
    winv: DMatrix<f64>,
    involution: DMatrix<f64>,
}

fn whiten(a: &StarAlgebra) -> Result<Whitened> {
    let d = a.dim();
    // trace form of the regular representation: radical = Jacobson radical
    let mut b = DMatrix::zeros(d, d);
    let ls: Vec<DMatrix<f64>> = (0..d)
        .map(|i| a.left_regular(&a.basis_element(i).into_coords()))
        .collect();
    for i in 0..d {
        for j in i..d {
            let t = ls[i].component_mul(&ls[j].transpose()).sum();
            b[(i, j)] = t;
            b[(j, i)] = t;
        }
    }
    let radical_dim = d - linalg::rank(&b, RANK_TOL);
    if radical_dim > 0 {
        return Err(Error::NotSemisimple { radical_dim });
    }
    let tau = tracial_form(a);
    let g = gram_matrix(a, &tau);
    let (vals, vecs) = linalg::sym_eigen(&g);
    let top = vals.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let negative = vals.iter().filter(|&&v| v < -RANK_TOL * top).count();
    let asym = linalg::max_abs(&(&g - g.transpose()));
    if negative > 0 || asym > RANK_TOL * top || vals[0] <= RANK_TOL * top {
        return Err(Error::NotCStar {
            negative: negative.max(1),
        });
    }
    let diag = |f: fn(f64) -> f64| {
        DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(d, vals.iter().map(|&v| f(v))))
    };
    let w = &vecs * diag(f64::sqrt) * vecs.transpose();
    let winv = &vecs * diag(|v| 1.0 / v.sqrt()) * vecs.transpose();
    let involution = &w * a.involution_matrix() * &winv;
    Ok(Whitened { w, winv, involution })
}

impl Whitened {
    fn left(&self, a: &StarAlgebra, x: &[f64]) -> DMatrix<f64> {
        &self.w * a.left_regular(x) * &self.winv
    }

    fn right(&self, a: &StarAlgebra, x: &[f64]) -> DMatrix<f64> {
        &self.w * a.right_regular(x) * &self.winv
    }
}

/// Orthonormal bases of the eigenspaces of a symmetric matrix restricted to
/// the column span of `q`, clustered at `CLUSTER_TOL` of the spectral radius.
fn eigenspaces(m: &DMatrix<f64>, q: &DMatrix<f64>) -> Vec<DMatrix<f64>> {
    let restricted = q.transpose() * m * q;
    let (vals, vecs) = linalg::sym_eigen(&restricted);
    let radius = vals.iter().fold(0.0_f64, |r, v| r.max(v.abs()));
    linalg::cluster_sorted(&vals, CLUSTER_TOL * radius.max(f64::MIN_POSITIVE))
        .into_iter()
        .map(|r| q * vecs.columns(r.start, r.len()))
        .collect()
}

fn random_symmetric(a: &StarAlgebra, rng: &mut impl Rng, span: &DMatrix<f64>) -> Vec<f64> {
    let coeffs: Vec<f64> = (0..span.ncols()).map(|_| rng.sample(StandardNormal)).collect();
    let x = span * nalgebra::DVector::from_vec(coeffs);
    let x: Vec<f64> = x.iter().copied().collect();
    let xs = a.involute_coords(&x);
    x.iter().zip(&xs).map(|(p, q)| 0.5 * (p + q)).collect()
}

/// Basis of the centre: `x` with `x e_j = e_j x` for all `j`.
fn center_basis(a: &StarAlgebra) -> DMatrix<f64> {
    let d = a.dim();
    let mut sys = DMatrix::zeros(d * d, d);
    for i in 0..d {
        let e = a.basis_element(i).into_coords();
        let diff = a.left_regular(&e) - a.right_regular(&e);
        // column i: coordinates of e_i e_j − e_j e_i for every j
        for j in 0..d {
            for k in 0..d {
                sys[(j * d + k, i)] = diff[(k, j)];
            }
        }
    }
    linalg::null_space(&sys, RANK_TOL)
}

struct Isotypic {
    irreps: Vec<DMatrix<f64>>,
    ring: ScalarRing,
    n: usize,
}

fn attempt(a: &StarAlgebra, wh: &Whitened, center: &DMatrix<f64>, seed: u64) -> Result<Vec<Isotypic>, String> {
    let d = a.dim();
    let mut rng = sample_rng(seed, 0);
    let id = DMatrix::<f64>::identity(d, d);
    let sym_center_dim = {
        let s = a.involution_matrix();
        let img = s * center;
        // symmetric part of the centre: (x + x*)/2 over the centre's basis
        let sym = (center + img) * 0.5;
        linalg::rank(&sym, RANK_TOL)
    };

    let c = random_symmetric(a, &mut rng, center);
    let ideals = eigenspaces(&wh.left(a, &c), &id);
    if ideals.len() != sym_center_dim {
        return Err(format!(
            "central element split {} ideals, expected {sym_center_dim}",
            ideals.len()
        ));
    }

    let y = random_symmetric(a, &mut rng, &id);
    let ry = wh.right(a, &y);
    let generators: Vec<DMatrix<f64>> = (0..d)
        .map(|i| wh.left(a, &a.basis_element(i).into_coords()))
        .collect();

    let mut out = Vec::with_capacity(ideals.len());
    for ideal in ideals {
        let dim_i = ideal.ncols();
        let irreps = eigenspaces(&ry, &ideal);
        let m = irreps[0].ncols();
        if irreps.iter().any(|v| v.ncols() != m) {
            return Err("right multiplication has a degenerate spectrum".into());
        }
        let block_gens: Vec<DMatrix<f64>> = generators
            .iter()
            .map(|g| irreps[0].transpose() * g * &irreps[0])
            .collect();
        let ring = match identify_division_ring(&block_gens) {
            Ok(r) => r,
            Err(e) => return Err(e.to_string()),
        };
        let k = ring.real_dim();
        if !m.is_multiple_of(k) || dim_i != k * (m / k) * (m / k) {
            return Err(format!(
                "ideal of dimension {dim_i} does not fit irreducible size {m} over {ring}"
            ));
        }
        let n = m / k;
        if irreps.len() != n {
            return Err(format!("found {} irreducible copies, expected {n}", irreps.len()));
        }
        // symmetric dimension of the ideal: the whitened involution is an
        // orthogonal reflection, so the +1 eigenspace has (dim + trace)/2 dims
        let tr = (ideal.transpose() * &wh.involution * &ideal).trace();
        let sym = ((dim_i as f64 + tr) / 2.0).round() as usize;
        match ring_from_hermitian_count(dim_i, sym) {
            Some((r, rn)) if r == ring && rn == n => {}
            other => {
                return Err(Error::RingMismatch {
                    commutant: ring.to_string(),
                    hermitian: other.map_or_else(|| format!("none (sym dim {sym})"), |(r, _)| r.to_string()),
                }
                .to_string())
            }
        }
        out.push(Isotypic { irreps, ring, n });
    }
    Ok(out)
}

/// Decomposes the left-regular representation of `a` into irreducible blocks.
pub fn block_diagonalize(a: &StarAlgebra, seed: u64) -> Result<BlockDecomposition> {
    let wh = whiten(a)?;
    let center = center_basis(a);
    let mut tried = Vec::new();
    let mut last = String::new();
    for k in 0..MAX_ATTEMPTS {
        let s = seed.wrapping_add(k);
        tried.push(s);
        match attempt(a, &wh, &center, s) {
            Ok(mut parts) => {
                parts.sort_by(|p, q| {
                    (q.ring.real_dim(), q.n).cmp(&(p.ring.real_dim(), p.n))
                });
                let d = a.dim();
                let mut v = DMatrix::zeros(d, d);
                let mut col = 0;
                for p in &parts {
                    for irrep in &p.irreps {
                        v.columns_mut(col, irrep.ncols()).copy_from(irrep);
                        col += irrep.ncols();
                    }
                }
                let blocks = parts
                    .iter()
                    .map(|p| Block {
                        n: p.n,
                        ring: p.ring,
                        multiplicity: p.irreps.len(),
                    })
                    .collect();
                let mut dec = BlockDecomposition {
                    blocks,
                    change_of_basis: v.transpose() * &wh.w,
                    residual: 0.0,
                    seed: s,
                };
                dec.residual = verify_decomposition(a, &dec)?;
                return Ok(dec);
            }
            Err(reason) => last = reason,
        }
    }
    Err(Error::DecompositionFailed {
        seeds: tried,
        reason: last,
    })
}

/// `C L_{e_i} C⁻¹` restricted to the first irreducible copy of block
/// `index`, for every basis element `e_i`.
pub fn block_generators(a: &StarAlgebra, dec: &BlockDecomposition, index: usize) -> Result<Vec<DMatrix<f64>>> {
    let block = dec
        .blocks
        .get(index)
        .ok_or_else(|| Error::InvalidArgument(format!("no block {index}")))?;
    let start: usize = dec.blocks[..index].iter().map(|b| b.irrep_dim() * b.multiplicity).sum();
    let m = block.irrep_dim();
    let c = &dec.change_of_basis;
    let cinv = c
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::InvalidArgument("change of basis is singular".into()))?;
    Ok((0..a.dim())
        .map(|i| {
            let g = c * a.left_regular(&a.basis_element(i).into_coords()) * &cinv;
            g.view((start, start), (m, m)).into_owned()
        })
        .collect())
}

/// Largest entry of `C L_{e_i} C⁻¹` outside the declared diagonal blocks,
/// together with the deviation of `C L_{e_i*} C⁻¹` from the transpose of
/// `C L_{e_i} C⁻¹` (the involution acting block-wise).
pub fn verify_decomposition(a: &StarAlgebra, dec: &BlockDecomposition) -> Result<f64> {
    let d = a.dim();
    let c = &dec.change_of_basis;
    if c.shape() != (d, d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: c.nrows(),
        });
    }
    let pattern = dec.block_pattern();
    if pattern.iter().sum::<usize>() != d {
        return Err(Error::InvalidArgument(format!(
            "block pattern covers {} of {d} carrier dimensions",
            pattern.iter().sum::<usize>()
        )));
    }
    let cinv = c
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::InvalidArgument("change of basis is singular".into()))?;
    let mut owner = Vec::with_capacity(d);
    for (b, &size) in pattern.iter().enumerate() {
        owner.extend(std::iter::repeat_n(b, size));
    }
    let mut residual = 0.0_f64;
    for i in 0..d {
        let e = a.basis_element(i).into_coords();
        let m = c * a.left_regular(&e) * &cinv;
        for r in 0..d {
            for s in 0..d {
                if owner[r] != owner[s] {
                    residual = residual.max(m[(r, s)].abs());
                }
            }
        }
        let ms = c * a.left_regular(&a.involute_coords(&e)) * &cinv;
        residual = residual.max(linalg::max_abs(&(ms - m.transpose())));
    }
    Ok(residual)
}

/// Matrix of the density element of the state `form` in the decomposed
/// carrier: the symmetric `ρ` with `φ(x) = τ(ρ x)`, represented as
/// `C L_ρ C⁻¹`.
pub fn density_in_blocks(a: &StarAlgebra, dec: &BlockDecomposition, form: &[f64]) -> Result<DMatrix<f64>> {
    let tau = tracial_form(a);
    let g = gram_matrix(a, &tau);
    let ginv = g
        .try_inverse()
        .ok_or(Error::NotSemisimple { radical_dim: 1 })?;
    // ⟨ρ, x⟩ = τ(ρ* x) = φ(x)
    let rho_star = ginv * nalgebra::DVector::from_column_slice(form);
    let rho = a.involute_coords(rho_star.as_slice());
    let c = &dec.change_of_basis;
    let cinv = c
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::InvalidArgument("change of basis is singular".into()))?;
    Ok(c * a.left_regular(&rho) * cinv)
}
