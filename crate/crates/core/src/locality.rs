//! Tensor products and the observable-span deficit.
//!
//! For a composite `A₁ ⊗ A₂` the symmetric elements are compared with the
//! span of products `s ⊗ t` of symmetric elements of the factors. Over ℝ the
//! symmetric part of the tensor also contains `skew ⊗ skew`, which no such
//! product reaches; over ℂ (tensoring over the centre) the gap closes.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, RANK_TOL};
use crate::scalars::ScalarRing;
use crate::star_algebra::{matrix_algebra, symmetric_basis_matrix, StarAlgebra};

/// Largest tensor dimension materialized as a dense algebra.
pub const MAX_DENSE_DIM: usize = 400;
/// Largest composite real dimension accepted by [`deficit_for`].
pub const MAX_DEFICIT_DIM: usize = 1296;

/// `A₁ ⊗ A₂`, possibly quotiented to a tensor over ℂ.
#[derive(Debug, Clone)]
pub struct TensorAlgebra<'a> {
    pub factors: (&'a StarAlgebra, &'a StarAlgebra),
    pub algebra: StarAlgebra,
    /// For a ℂ-tensor: orthonormal columns spanning the complement of the
    /// identifying ideal inside the real tensor; quotient coordinates of a
    /// real-tensor vector `x` are `Qᵀ x`.
    pub quotient: Option<DMatrix<f64>>,
}

impl TensorAlgebra<'_> {
    /// Coordinates of `x ⊗ y`.
    pub fn simple_tensor(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let t: Vec<f64> = x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect();
        match &self.quotient {
            Some(q) => (q.transpose() * nalgebra::DVector::from_vec(t)).iter().copied().collect(),
            None => t,
        }
    }
}

fn real_tensor(a1: &StarAlgebra, a2: &StarAlgebra) -> Result<StarAlgebra> {
    let (d1, d2) = (a1.dim(), a2.dim());
    let d = d1 * d2;
    if d > MAX_DENSE_DIM {
        return Err(Error::InvalidArgument(format!(
            "tensor dimension {d} exceeds the dense limit {MAX_DENSE_DIM}"
        )));
    }
    let mut trip = Vec::new();
    for i in 0..d1 {
        for j in 0..d1 {
            for &(k, c) in a1.basis_product(i, j) {
                for p in 0..d2 {
                    for q in 0..d2 {
                        for &(r, e) in a2.basis_product(p, q) {
                            trip.push((i * d2 + p, j * d2 + q, k * d2 + r, c * e));
                        }
                    }
                }
            }
        }
    }
    let names = a1
        .basis_names()
        .iter()
        .flat_map(|x| a2.basis_names().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let s = linalg::kron(a1.involution_matrix(), a2.involution_matrix());
    let unit = a1
        .unit_coords()
        .iter()
        .flat_map(|x| a2.unit_coords().iter().map(move |y| x * y))
        .collect();
    StarAlgebra::from_triplets(names, &trip, s, unit)
}

/// Real tensor product with basis `(i, p)` in lexicographic order.
pub fn tensor_product<'a>(a1: &'a StarAlgebra, a2: &'a StarAlgebra) -> Result<TensorAlgebra<'a>> {
    Ok(TensorAlgebra {
        factors: (a1, a2),
        algebra: real_tensor(a1, a2)?,
        quotient: None,
    })
}

/// The central element `Σ_a E_aa·i` of a matrix model whose blocks are all
/// over ℂ.
pub fn complex_structure(a: &StarAlgebra) -> Option<Vec<f64>> {
    let model = a.model()?;
    if model.iter().any(|b| b.ring != ScalarRing::C) {
        return None;
    }
    let mut j = vec![0.0; a.dim()];
    let mut offset = 0;
    for b in model {
        for i in 0..b.n {
            j[offset + (i * b.n + i) * 2 + 1] = 1.0;
        }
        offset += b.real_dim();
    }
    Some(j)
}

/// Orthonormal basis of the complement of the ideal generated by
/// `j₁ ⊗ 1 − 1 ⊗ j₂` in the real tensor.
fn complex_quotient_basis(a1: &StarAlgebra, j1: &[f64], a2: &StarAlgebra, j2: &[f64]) -> DMatrix<f64> {
    let l1 = a1.left_regular(j1);
    let l2 = a2.left_regular(j2);
    let i1 = DMatrix::identity(a1.dim(), a1.dim());
    let i2 = DMatrix::identity(a2.dim(), a2.dim());
    let gen = linalg::kron(&l1, &i2) - linalg::kron(&i1, &l2);
    // j central: the left ideal L_g·T is two-sided; its complement is ker gᵀ
    linalg::null_space(&gen.transpose(), RANK_TOL)
}

fn check_complex_unit(a: &StarAlgebra, j: &[f64]) -> Result<()> {
    let jj = a.product_coords(j, j);
    let res = jj
        .iter()
        .zip(a.unit_coords())
        .fold(0.0_f64, |m, (x, u)| m.max((x + u).abs()));
    let d = a.dim();
    let mut comm = 0.0_f64;
    for i in 0..d {
        let e = a.basis_element(i).into_coords();
        let l = a.product_coords(j, &e);
        let r = a.product_coords(&e, j);
        comm = comm.max(l.iter().zip(&r).fold(0.0, |m, (x, y)| m.max((x - y).abs())));
    }
    if res > 1e-10 || comm > 1e-10 {
        return Err(Error::InvalidArgument(
            "complex structure must be central with square −1".into(),
        ));
    }
    Ok(())
}

/// `A₁ ⊗_ℂ A₂` for algebras carrying the complex structures `j₁`, `j₂`
/// (central, `j² = −1`), as the quotient of the real tensor by the ideal
/// identifying `j₁ ⊗ 1` with `1 ⊗ j₂`.
pub fn complex_tensor_product_with<'a>(
    a1: &'a StarAlgebra,
    j1: &[f64],
    a2: &'a StarAlgebra,
    j2: &[f64],
) -> Result<TensorAlgebra<'a>> {
    check_complex_unit(a1, j1)?;
    check_complex_unit(a2, j2)?;
    let real = real_tensor(a1, a2)?;
    let q = complex_quotient_basis(a1, j1, a2, j2);
    let k = q.ncols();
    let cols: Vec<Vec<f64>> = (0..k).map(|c| q.column(c).iter().copied().collect()).collect();
    let qt = q.transpose();
    let mut constants = vec![0.0; k * k * k];
    for a in 0..k {
        for b in 0..k {
            let p = qt.clone() * nalgebra::DVector::from_vec(real.product_coords(&cols[a], &cols[b]));
            for c in 0..k {
                constants[(a * k + b) * k + c] = p[c];
            }
        }
    }
    let s = &qt * real.involution_matrix() * &q;
    let unit = (&qt * nalgebra::DVector::from_column_slice(real.unit_coords()))
        .iter()
        .copied()
        .collect();
    let names = (0..k).map(|c| format!("q{c}")).collect();
    Ok(TensorAlgebra {
        factors: (a1, a2),
        algebra: StarAlgebra::new(names, constants, s, unit)?,
        quotient: Some(q),
    })
}

/// ℂ-tensor of two complex matrix algebras.
pub fn complex_tensor_product<'a>(a1: &'a StarAlgebra, a2: &'a StarAlgebra) -> Result<TensorAlgebra<'a>> {
    let j1 = complex_structure(a1)
        .ok_or_else(|| Error::InvalidArgument("first factor has no complex matrix model".into()))?;
    let j2 = complex_structure(a2)
        .ok_or_else(|| Error::InvalidArgument("second factor has no complex matrix model".into()))?;
    complex_tensor_product_with(a1, &j1, a2, &j2)
}

/// Dimension of the `+1` eigenspace of the involution.
pub fn symmetric_dimension(a: &StarAlgebra) -> usize {
    symmetric_basis_matrix(a).ncols()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deficit {
    pub sym_dim: usize,
    pub span_dim: usize,
    pub deficit: usize,
}

impl Deficit {
    fn new(sym_dim: usize, span_dim: usize) -> Self {
        Self {
            sym_dim,
            span_dim,
            deficit: sym_dim.saturating_sub(span_dim),
        }
    }
}

/// `(dim + tr S)/2` for an involutive `S`, whose eigenvalues are ±1.
fn plus_one_dim(s: &DMatrix<f64>, trace: f64) -> Result<usize> {
    let n = s.nrows();
    let sq = s * s - DMatrix::identity(n, n);
    if linalg::max_abs(&sq) > 1e-10 {
        return Err(Error::InvalidAlgebra("involution is not involutive".into()));
    }
    let v = (n as f64 + trace) / 2.0;
    let r = v.round();
    if (v - r).abs() > 1e-6 {
        return Err(Error::InvalidAlgebra(format!("non-integral symmetric dimension {v}")));
    }
    Ok(r as usize)
}

/// Symmetric dimension of the real tensor against the span of `s ⊗ t`.
///
/// Works on the factors only: the tensor involution is `S₁ ⊗ S₂`, whose
/// trace is `tr S₁ · tr S₂`, and the products are the columns of
/// `Sym₁ ⊗ Sym₂`.
pub fn observable_span_deficit(a1: &StarAlgebra, a2: &StarAlgebra) -> Result<Deficit> {
    let (s1, s2) = (a1.involution_matrix(), a2.involution_matrix());
    let n1 = plus_one_dim(s1, s1.trace())?;
    let n2 = plus_one_dim(s2, s2.trace())?;
    let k1 = a1.dim() - n1;
    let k2 = a2.dim() - n2;
    // (D + tr S₁ tr S₂)/2 = n₁n₂ + k₁k₂
    let sym_dim = n1 * n2 + k1 * k2;
    let products = linalg::kron(&symmetric_basis_matrix(a1), &symmetric_basis_matrix(a2));
    let span_dim = linalg::rank(&products, RANK_TOL);
    Ok(Deficit::new(sym_dim, span_dim))
}

/// As [`observable_span_deficit`] for the ℂ-tensor of two complex matrix
/// algebras, measured in real dimensions of the quotient.
pub fn complex_observable_span_deficit(a1: &StarAlgebra, a2: &StarAlgebra) -> Result<Deficit> {
    let j1 = complex_structure(a1)
        .ok_or_else(|| Error::InvalidArgument("first factor has no complex matrix model".into()))?;
    let j2 = complex_structure(a2)
        .ok_or_else(|| Error::InvalidArgument("second factor has no complex matrix model".into()))?;
    check_complex_unit(a1, &j1)?;
    check_complex_unit(a2, &j2)?;
    let q = complex_quotient_basis(a1, &j1, a2, &j2);
    let qt = q.transpose();
    // the tensor involution preserves the ideal, so it acts on the quotient
    // as Qᵀ (S₁ ⊗ S₂) Q; (S₁ ⊗ S₂) x = vec(S₂ X S₁ᵀ) in row-major (i, p) order
    let (d1, d2) = (a1.dim(), a2.dim());
    let (s1, s2) = (a1.involution_matrix(), a2.involution_matrix());
    let mut sq = DMatrix::zeros(d1 * d2, q.ncols());
    for c in 0..q.ncols() {
        let x = DMatrix::from_row_slice(d1, d2, q.column(c).as_slice());
        let y = s1 * x * s2.transpose();
        for i in 0..d1 {
            for p in 0..d2 {
                sq[(i * d2 + p, c)] = y[(i, p)];
            }
        }
    }
    let sbar = &qt * sq;
    let sym_dim = plus_one_dim(&sbar, sbar.trace())?;
    let products = &qt * linalg::kron(&symmetric_basis_matrix(a1), &symmetric_basis_matrix(a2));
    let span_dim = linalg::rank(&products, RANK_TOL);
    Ok(Deficit::new(sym_dim, span_dim))
}

/// Deficit for `M_n(K) ⊗ M_m(K)`: over ℂ the ℂ-tensor, otherwise the real
/// tensor.
pub fn deficit_for(ring: ScalarRing, n: usize, m: usize) -> Result<Deficit> {
    let d = ring.real_dim();
    let composite = d * n * n * d * m * m;
    if composite > MAX_DEFICIT_DIM {
        return Err(Error::InvalidArgument(format!(
            "composite real dimension {composite} exceeds {MAX_DEFICIT_DIM}"
        )));
    }
    let a1 = matrix_algebra(&[(n, ring)])?;
    let a2 = matrix_algebra(&[(m, ring)])?;
    match ring {
        ScalarRing::C => complex_observable_span_deficit(&a1, &a2),
        _ => observable_span_deficit(&a1, &a2),
    }
}

/// One row of the deficit table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficitRow {
    pub ring: ScalarRing,
    pub n: usize,
    pub m: usize,
    pub sym_dim: usize,
    pub span_dim: usize,
    pub deficit: usize,
}

pub fn deficit_row(ring: ScalarRing, n: usize, m: usize) -> Result<DeficitRow> {
    let d = deficit_for(ring, n, m)?;
    Ok(DeficitRow {
        ring,
        n,
        m,
        sym_dim: d.sym_dim,
        span_dim: d.span_dim,
        deficit: d.deficit,
    })
}

/// Aligned text table.
pub fn format_table(rows: &[DeficitRow]) -> String {
    let mut out = format!("{:<4} {:>3} {:>3} {:>8} {:>9} {:>8}\n", "ring", "n", "m", "sym_dim", "span_dim", "deficit");
    for r in rows {
        out.push_str(&format!(
            "{:<4} {:>3} {:>3} {:>8} {:>9} {:>8}\n",
            r.ring.symbol(),
            r.n,
            r.m,
            r.sym_dim,
            r.span_dim,
            r.deficit
        ));
    }
    out
}
