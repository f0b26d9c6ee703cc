//! Finite-dimensional real associative unital algebras with an involution.
//!
//! An algebra is stored as dense structure constants `c[i][j][k]`
//! (`e_i · e_j = Σ_k c[i][j][k] e_k`), an involution matrix `S` whose column
//! `i` holds the coordinates of `e_i*`, and the coordinates of the unit.

use std::fmt;

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, RANK_TOL};
use crate::report::{AxiomReport, CheckResult, Witness};
use crate::scalars::{ring_basis_conj_sign, ring_basis_product, Quaternion, Scalar, ScalarRing};

/// Global axiom tolerance, relative to the largest structure constant.
pub const AXIOM_TOL: f64 = 1e-10;

/// One `M_n(K)` summand of a matrix model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixBlock {
    pub n: usize,
    pub ring: ScalarRing,
}

impl MatrixBlock {
    pub fn new(n: usize, ring: ScalarRing) -> Self {
        Self { n, ring }
    }

    pub fn real_dim(&self) -> usize {
        self.ring.real_dim() * self.n * self.n
    }
}

#[derive(Clone)]
pub struct StarAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    /// Dense `dim³` array, index `(i * dim + j) * dim + k`.
    constants: Vec<f64>,
    /// Nonzero terms of `e_i · e_j`, index `i * dim + j`.
    products: Vec<Vec<(usize, f64)>>,
    involution: DMatrix<f64>,
    unit: Vec<f64>,
    model: Option<Vec<MatrixBlock>>,
}

impl fmt::Debug for StarAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StarAlgebra")
            .field("dim", &self.dim)
            .field("basis_names", &self.basis_names)
            .field("model", &self.model)
            .finish_non_exhaustive()
    }
}

impl StarAlgebra {
    /// Builds an algebra from dense structure constants.
    ///
    /// Shapes are validated here; the algebraic axioms are not (see
    /// [`verify_algebra_axioms`]), so that broken inputs can still be reported on.
    pub fn new(
        basis_names: Vec<String>,
        constants: Vec<f64>,
        involution: DMatrix<f64>,
        unit: Vec<f64>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::InvalidAlgebra(format!(
                "expected {} structure constants, got {}",
                dim * dim * dim,
                constants.len()
            )));
        }
        if involution.shape() != (dim, dim) {
            return Err(Error::InvalidAlgebra(format!(
                "involution must be {dim}x{dim}, got {}x{}",
                involution.nrows(),
                involution.ncols()
            )));
        }
        if unit.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "unit must have {dim} coordinates, got {}",
                unit.len()
            )));
        }
        if constants.iter().chain(unit.iter()).chain(involution.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidAlgebra("non-finite entry".into()));
        }
        let products = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = constants[ij * dim + k];
                        (c != 0.0).then_some((k, c))
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            dim,
            basis_names,
            constants,
            products,
            involution,
            unit,
            model: None,
        })
    }

    /// Builds an algebra from a sparse `(i, j, k, value)` list; repeated
    /// triples are summed.
    pub fn from_triplets(
        basis_names: Vec<String>,
        triplets: &[(usize, usize, usize, f64)],
        involution: DMatrix<f64>,
        unit: Vec<f64>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        let mut constants = vec![0.0; dim * dim * dim];
        for &(i, j, k, v) in triplets {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "structure constant index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            constants[(i * dim + j) * dim + k] += v;
        }
        Self::new(basis_names, constants, involution, unit)
    }

    /// The same algebra in the basis given by the columns of `p`
    /// (`f_i = Σ_a p[a][i] e_a`). The matrix model is not carried over.
    pub fn change_basis(&self, p: &DMatrix<f64>) -> Result<StarAlgebra> {
        let d = self.dim;
        if p.shape() != (d, d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: p.nrows(),
            });
        }
        let pinv = p
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidArgument("basis change is singular".into()))?;
        let mut constants = vec![0.0; d * d * d];
        for i in 0..d {
            let col: Vec<f64> = p.column(i).iter().copied().collect();
            let l = &pinv * self.left_regular(&col) * p;
            for j in 0..d {
                for k in 0..d {
                    constants[(i * d + j) * d + k] = l[(k, j)];
                }
            }
        }
        let involution = &pinv * &self.involution * p;
        let unit = (&pinv * nalgebra::DVector::from_column_slice(&self.unit))
            .iter()
            .copied()
            .collect();
        let names = (0..d).map(|i| format!("f{i}")).collect();
        StarAlgebra::new(names, constants, involution, unit)
    }

    pub(crate) fn with_model(mut self, model: Vec<MatrixBlock>) -> Self {
        self.model = Some(model);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[f64] {
        &self.constants
    }

    pub fn involution_matrix(&self) -> &DMatrix<f64> {
        &self.involution
    }

    pub fn unit_coords(&self) -> &[f64] {
        &self.unit
    }

    /// Matrix-block model, present for algebras built by [`matrix_algebra`].
    pub fn model(&self) -> Option<&[MatrixBlock]> {
        self.model.as_deref()
    }

    /// Block-diagonal real matrix of `x` in the defining representation:
    /// each `M_n(K)` block becomes a `d·n × d·n` real matrix whose `d × d`
    /// tiles are left multiplications by the entries. `None` without a model.
    pub fn real_matrix(&self, x: &[f64]) -> Option<DMatrix<f64>> {
        let model = self.model.as_ref()?;
        let size: usize = model.iter().map(|b| b.n * b.ring.real_dim()).sum();
        let mut m = DMatrix::zeros(size, size);
        let (mut offset, mut row0) = (0, 0);
        for &block in model {
            let d = block.ring.real_dim();
            for a in 0..block.n {
                for b in 0..block.n {
                    let base = matrix_unit_index(offset, block, a, b, 0);
                    let tile = match block.ring {
                        ScalarRing::R => DMatrix::from_element(1, 1, x[base]),
                        ScalarRing::C => {
                            num_complex::Complex64::from_coords(&x[base..base + 2]).embed_real()
                        }
                        ScalarRing::H => Quaternion::from_coords(&x[base..base + 4]).embed_real(),
                    };
                    m.view_mut((row0 + a * d, row0 + b * d), (d, d)).copy_from(&tile);
                }
            }
            offset += block.real_dim();
            row0 += block.n * d;
        }
        Some(m)
    }

    pub fn max_constant(&self) -> f64 {
        linalg::max_abs_slice(&self.constants)
    }

    pub(crate) fn basis_product(&self, i: usize, j: usize) -> &[(usize, f64)] {
        &self.products[i * self.dim + j]
    }

    /// Product of two coefficient vectors.
    pub fn product_coords(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0.0 {
                    continue;
                }
                let s = xi * yj;
                for &(k, c) in self.basis_product(i, j) {
                    out[k] += s * c;
                }
            }
        }
        out
    }

    pub fn involute_coords(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += self.involution[(k, i)] * xi;
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y` on coefficient space.
    pub fn left_regular(&self, x: &[f64]) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            for j in 0..self.dim {
                for &(k, c) in self.basis_product(i, j) {
                    m[(k, j)] += xi * c;
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y·x` on coefficient space.
    pub fn right_regular(&self, x: &[f64]) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0.0 {
                continue;
            }
            for i in 0..self.dim {
                for &(k, c) in self.basis_product(i, j) {
                    m[(k, i)] += xj * c;
                }
            }
        }
        m
    }

    pub fn element(&self, coords: Vec<f64>) -> Result<AlgebraElement<'_>> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: coords.len(),
            });
        }
        Ok(AlgebraElement {
            algebra: self,
            coords,
        })
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement<'_> {
        let mut coords = vec![0.0; self.dim];
        coords[i] = 1.0;
        AlgebraElement {
            algebra: self,
            coords,
        }
    }

    pub fn unit(&self) -> AlgebraElement<'_> {
        AlgebraElement {
            algebra: self,
            coords: self.unit.clone(),
        }
    }

    pub fn zero(&self) -> AlgebraElement<'_> {
        AlgebraElement {
            algebra: self,
            coords: vec![0.0; self.dim],
        }
    }

    /// Element with independent standard-normal coefficients.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement<'_> {
        let coords = (0..self.dim).map(|_| rng.sample(StandardNormal)).collect();
        AlgebraElement {
            algebra: self,
            coords,
        }
    }

    /// Serializable file form (sparse structure constants).
    pub fn to_file(&self) -> AlgebraFile {
        let d = self.dim;
        let mut structure_constants = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for &(k, c) in self.basis_product(i, j) {
                    structure_constants.push((i, j, k, c));
                }
            }
        }
        AlgebraFile {
            dim: d,
            basis_names: self.basis_names.clone(),
            structure_constants,
            involution: (0..d)
                .map(|r| (0..d).map(|c| self.involution[(r, c)]).collect())
                .collect(),
            unit: self.unit.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        file.into_algebra()
    }
}

/// On-disk JSON algebra schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub structure_constants: Vec<(usize, usize, usize, f64)>,
    /// Row-major `dim × dim` involution matrix.
    pub involution: Vec<Vec<f64>>,
    pub unit: Vec<f64>,
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<StarAlgebra> {
        let d = self.dim;
        if self.basis_names.len() != d {
            return Err(Error::InvalidAlgebra(format!(
                "dim is {d} but {} basis names were given",
                self.basis_names.len()
            )));
        }
        if self.involution.len() != d || self.involution.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidAlgebra(format!(
                "involution must be a {d}x{d} row-major matrix"
            )));
        }
        let s = DMatrix::from_fn(d, d, |r, c| self.involution[r][c]);
        StarAlgebra::from_triplets(self.basis_names, &self.structure_constants, s, self.unit)
    }
}

/// A coefficient vector tied to its algebra.
#[derive(Debug, Clone)]
pub struct AlgebraElement<'a> {
    algebra: &'a StarAlgebra,
    coords: Vec<f64>,
}

impl PartialEq for AlgebraElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.algebra, other.algebra) && self.coords == other.coords
    }
}

impl<'a> AlgebraElement<'a> {
    pub fn algebra(&self) -> &'a StarAlgebra {
        self.algebra
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.algebra, other.algebra) {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebras)
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        multiply(self, other)
    }

    pub fn involute(&self) -> Self {
        involute(self)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.linear_combination(1.0, other, 1.0)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.linear_combination(1.0, other, -1.0)
    }

    /// `α·self + β·other`.
    pub fn linear_combination(&self, alpha: f64, other: &Self, beta: f64) -> Result<Self> {
        self.same_algebra(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| alpha * x + beta * y)
            .collect();
        Ok(Self {
            algebra: self.algebra,
            coords,
        })
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            algebra: self.algebra,
            coords: self.coords.iter().map(|x| x * s).collect(),
        }
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        linalg::max_abs_slice(&self.coords)
    }

    /// `x*x`.
    pub fn star_square(&self) -> Self {
        let adj = self.involute();
        Self {
            algebra: self.algebra,
            coords: self.algebra.product_coords(&adj.coords, &self.coords),
        }
    }
}

/// Bilinear product through the structure constants.
pub fn multiply<'a>(x: &AlgebraElement<'a>, y: &AlgebraElement<'a>) -> Result<AlgebraElement<'a>> {
    x.same_algebra(y)?;
    Ok(AlgebraElement {
        algebra: x.algebra,
        coords: x.algebra.product_coords(&x.coords, &y.coords),
    })
}

pub fn involute<'a>(x: &AlgebraElement<'a>) -> AlgebraElement<'a> {
    AlgebraElement {
        algebra: x.algebra,
        coords: x.algebra.involute_coords(&x.coords),
    }
}

fn vec_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()))
}

/// Checks associativity, the unit laws and the involution axioms.
///
/// Each entry carries the maximum residual; the first offending basis
/// indices are kept as witness.
pub fn verify_algebra_axioms(a: &StarAlgebra) -> AxiomReport {
    let d = a.dim;
    let scale = a.max_constant().max(1.0);
    let tol = AXIOM_TOL * scale;
    let mut report = AxiomReport::default();

    // (e_i e_j) e_k − e_i (e_j e_k)
    let mut assoc = 0.0_f64;
    let mut assoc_w = None;
    let mut lhs = vec![0.0; d];
    let mut rhs = vec![0.0; d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                lhs.iter_mut().for_each(|v| *v = 0.0);
                rhs.iter_mut().for_each(|v| *v = 0.0);
                for &(m, c) in a.basis_product(i, j) {
                    for &(l, c2) in a.basis_product(m, k) {
                        lhs[l] += c * c2;
                    }
                }
                for &(m, c) in a.basis_product(j, k) {
                    for &(l, c2) in a.basis_product(i, m) {
                        rhs[l] += c * c2;
                    }
                }
                let r = vec_diff(&lhs, &rhs);
                if r > assoc {
                    assoc = r;
                }
                if r > tol * scale && assoc_w.is_none() {
                    assoc_w = Some(vec![i, j, k]);
                }
            }
        }
    }
    report.push(
        CheckResult::new("associativity", assoc <= tol * scale, assoc)
            .with_witness(assoc_w.map(Witness::Elements)),
    );

    let mut unit_r = 0.0_f64;
    let mut unit_w = None;
    for i in 0..d {
        let e = a.basis_element(i);
        let l = a.product_coords(&a.unit, &e.coords);
        let r = a.product_coords(&e.coords, &a.unit);
        let res = vec_diff(&l, &e.coords).max(vec_diff(&r, &e.coords));
        unit_r = unit_r.max(res);
        if res > tol && unit_w.is_none() {
            unit_w = Some(vec![i]);
        }
    }
    report.push(
        CheckResult::new("unit", unit_r <= tol, unit_r).with_witness(unit_w.map(Witness::Elements)),
    );

    let s = &a.involution;
    let inv_r = linalg::max_abs(&(s * s - DMatrix::identity(d, d)));
    report.push(CheckResult::new("involution_involutive", inv_r <= tol, inv_r));

    // (e_i e_j)* − e_j* e_i*
    let mut anti = 0.0_f64;
    let mut anti_w = None;
    let cols: Vec<Vec<f64>> = (0..d).map(|i| s.column(i).iter().copied().collect()).collect();
    for i in 0..d {
        for j in 0..d {
            let mut prod = vec![0.0; d];
            for &(k, c) in a.basis_product(i, j) {
                prod[k] += c;
            }
            let l = a.involute_coords(&prod);
            let r = a.product_coords(&cols[j], &cols[i]);
            let res = vec_diff(&l, &r);
            anti = anti.max(res);
            if res > tol && anti_w.is_none() {
                anti_w = Some(vec![i, j]);
            }
        }
    }
    report.push(
        CheckResult::new("involution_antihomomorphism", anti <= tol, anti)
            .with_witness(anti_w.map(Witness::Elements)),
    );

    // (αx + βy)* − (αx* + βy*) on a fixed probe pair
    let x: Vec<f64> = (0..d).map(|i| ((i * 7 + 3) % 11) as f64 / 11.0 - 0.5).collect();
    let y: Vec<f64> = (0..d).map(|i| ((i * 5 + 1) % 13) as f64 / 13.0 - 0.5).collect();
    let (alpha, beta) = (1.75, -0.625);
    let comb: Vec<f64> = x.iter().zip(&y).map(|(p, q)| alpha * p + beta * q).collect();
    let lhs = a.involute_coords(&comb);
    let xs = a.involute_coords(&x);
    let ys = a.involute_coords(&y);
    let rhs: Vec<f64> = xs.iter().zip(&ys).map(|(p, q)| alpha * p + beta * q).collect();
    let lin = vec_diff(&lhs, &rhs);
    report.push(CheckResult::new("involution_linearity", lin <= tol, lin));

    report
}

/// Index of basis element `E_ab · u_r` of a block inside the block-major,
/// row-major basis of a matrix algebra.
fn matrix_unit_index(offset: usize, block: MatrixBlock, a: usize, b: usize, r: usize) -> usize {
    offset + (a * block.n + b) * block.ring.real_dim() + r
}

/// Direct sum of full matrix algebras `M_n(K)` with conjugate transpose as
/// involution, in the basis `E_ab · u_r` (block-major, then row-major, then
/// ring basis `1, i, j, k`).
pub fn matrix_algebra(blocks: &[(usize, ScalarRing)]) -> Result<StarAlgebra> {
    if blocks.is_empty() {
        return Err(Error::InvalidArgument("at least one block is required".into()));
    }
    if blocks.iter().any(|&(n, _)| n == 0) {
        return Err(Error::InvalidArgument("block sizes must be positive".into()));
    }
    let model: Vec<MatrixBlock> = blocks.iter().map(|&(n, k)| MatrixBlock::new(n, k)).collect();
    let dim: usize = model.iter().map(MatrixBlock::real_dim).sum();
    let multi = model.len() > 1;
    let mut names = Vec::with_capacity(dim);
    let mut triplets = Vec::new();
    let mut s = DMatrix::zeros(dim, dim);
    let mut unit = vec![0.0; dim];
    let mut offset = 0;
    for (bi, &block) in model.iter().enumerate() {
        let n = block.n;
        let d = block.ring.real_dim();
        let suffix = ["", "i", "j", "k"];
        for a in 0..n {
            for b in 0..n {
                for r in 0..d {
                    let prefix = if multi { format!("b{bi}:") } else { String::new() };
                    names.push(format!("{prefix}E{}{}{}", a + 1, b + 1, suffix[r]));
                    let idx = matrix_unit_index(offset, block, a, b, r);
                    let img = matrix_unit_index(offset, block, b, a, r);
                    s[(img, idx)] = ring_basis_conj_sign(r);
                    for c in 0..n {
                        for rs in 0..d {
                            let lhs2 = matrix_unit_index(offset, block, b, c, rs);
                            let prod = ring_basis_product(block.ring, r, rs);
                            for (t, &v) in prod.iter().enumerate() {
                                if v != 0.0 {
                                    let out = matrix_unit_index(offset, block, a, c, t);
                                    triplets.push((idx, lhs2, out, v));
                                }
                            }
                        }
                    }
                }
            }
            unit[matrix_unit_index(offset, block, a, a, 0)] = 1.0;
        }
        offset += block.real_dim();
    }
    Ok(StarAlgebra::from_triplets(names, &triplets, s, unit)?.with_model(model))
}

/// Real group algebra of the cyclic group `C_n` with `g ↦ g⁻¹`.
pub fn group_star_algebra(n: usize) -> Result<StarAlgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument("group order must be positive".into()));
    }
    let names = (0..n).map(|g| format!("g{g}")).collect();
    let mut triplets = Vec::with_capacity(n * n);
    let mut s = DMatrix::zeros(n, n);
    for g in 0..n {
        for h in 0..n {
            triplets.push((g, h, (g + h) % n, 1.0));
        }
        s[((n - g) % n, g)] = 1.0;
    }
    let mut unit = vec![0.0; n];
    unit[0] = 1.0;
    StarAlgebra::from_triplets(names, &triplets, s, unit)
}

/// Bases of the symmetric (`x* = x`) and skew (`x* = −x`) subspaces.
#[derive(Debug, Clone)]
pub struct SymmetricSplit<'a> {
    pub symmetric: Vec<AlgebraElement<'a>>,
    pub skew: Vec<AlgebraElement<'a>>,
}

fn columns_as_elements<'a>(a: &'a StarAlgebra, m: &DMatrix<f64>) -> Vec<AlgebraElement<'a>> {
    (0..m.ncols())
        .map(|c| AlgebraElement {
            algebra: a,
            coords: m.column(c).iter().copied().collect(),
        })
        .collect()
}

/// Coefficient-orthonormal bases of the `±1` eigenspaces of the involution.
pub fn symmetric_basis(a: &StarAlgebra) -> SymmetricSplit<'_> {
    let id = DMatrix::<f64>::identity(a.dim, a.dim);
    let sym = linalg::null_space(&(&a.involution - &id), RANK_TOL);
    let skew = linalg::null_space(&(&a.involution + &id), RANK_TOL);
    SymmetricSplit {
        symmetric: columns_as_elements(a, &sym),
        skew: columns_as_elements(a, &skew),
    }
}

/// Matrix whose columns span the symmetric subspace.
pub(crate) fn symmetric_basis_matrix(a: &StarAlgebra) -> DMatrix<f64> {
    let id = DMatrix::<f64>::identity(a.dim, a.dim);
    linalg::null_space(&(&a.involution - &id), RANK_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m2r() -> StarAlgebra {
        matrix_algebra(&[(2, ScalarRing::R)]).unwrap()
    }

    fn idx(a: &StarAlgebra, name: &str) -> usize {
        a.basis_names().iter().position(|n| n == name).unwrap()
    }

    #[test]
    fn unit_law_and_matrix_units() {
        let a = m2r();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = a.random_element(&mut rng);
        let ux = a.unit().multiply(&x).unwrap();
        assert!(vec_diff(ux.coords(), x.coords()) < 1e-14);
        let e12 = a.basis_element(idx(&a, "E12"));
        let e21 = a.basis_element(idx(&a, "E21"));
        assert_eq!(e12.multiply(&e21).unwrap(), a.basis_element(idx(&a, "E11")));
        assert_eq!(e12.involute(), e21);
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let a = m2r();
        let b = m2r();
        assert!(matches!(
            a.unit().multiply(&b.unit()),
            Err(Error::MismatchedAlgebras)
        ));
        assert!(matches!(
            a.element(vec![1.0]),
            Err(Error::DimensionMismatch { expected: 4, got: 1 })
        ));
    }

    /// Product of two coefficient vectors of `M_n(H)` computed as 4n×4n real
    /// matrices through the left-multiplication embedding.
    fn quaternion_matrix_oracle(n: usize, x: &[f64]) -> DMatrix<f64> {
        use crate::scalars::{Quaternion, Scalar};
        let mut m = DMatrix::zeros(4 * n, 4 * n);
        for a in 0..n {
            for b in 0..n {
                let o = (a * n + b) * 4;
                let q = Quaternion::new(x[o], x[o + 1], x[o + 2], x[o + 3]);
                m.view_mut((4 * a, 4 * b), (4, 4)).copy_from(&q.embed_real());
            }
        }
        m
    }

    #[test]
    fn associativity_in_m2h_against_real_embedding() {
        let a = matrix_algebra(&[(2, ScalarRing::H)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let x = a.random_element(&mut rng);
            let y = a.random_element(&mut rng);
            let z = a.random_element(&mut rng);
            let l = x.multiply(&y).unwrap().multiply(&z).unwrap();
            let r = x.multiply(&y.multiply(&z).unwrap()).unwrap();
            assert!(vec_diff(l.coords(), r.coords()) < 1e-10);
            let xy = x.multiply(&y).unwrap();
            let oracle = quaternion_matrix_oracle(2, x.coords()) * quaternion_matrix_oracle(2, y.coords());
            assert!(linalg::max_abs(&(oracle - quaternion_matrix_oracle(2, xy.coords()))) < 1e-12);
        }
    }

    #[test]
    fn involution_reverses_products_in_m2c() {
        let a = matrix_algebra(&[(2, ScalarRing::C)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let x = a.random_element(&mut rng);
            let y = a.random_element(&mut rng);
            let l = x.multiply(&y).unwrap().involute();
            let r = y.involute().multiply(&x.involute()).unwrap();
            assert!(vec_diff(l.coords(), r.coords()) < 1e-12);
            assert!(vec_diff(x.involute().involute().coords(), x.coords()) < 1e-15);
        }
    }

    #[test]
    fn conjugate_transpose_oracle_m2c() {
        use num_complex::Complex64;
        let a = matrix_algebra(&[(2, ScalarRing::C)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let to_m = |x: &[f64]| {
            nalgebra::DMatrix::from_fn(2, 2, |r, c| {
                let o = (r * 2 + c) * 2;
                Complex64::new(x[o], x[o + 1])
            })
        };
        for _ in 0..20 {
            let x = a.random_element(&mut rng);
            let xs = x.involute();
            let lhs = to_m(xs.coords());
            let rhs = to_m(x.coords()).adjoint();
            assert!((lhs - rhs).iter().all(|z| z.norm() < 1e-15));
        }
    }

    #[test]
    fn axioms_pass_on_exact_constructions() {
        let a = matrix_algebra(&[(3, ScalarRing::R)]).unwrap();
        let r = verify_algebra_axioms(&a);
        assert!(r.passed(), "{r:?}");
        assert!(r.max_residual() < 1e-12);
        for blocks in [
            vec![(2, ScalarRing::H)],
            vec![(2, ScalarRing::C), (1, ScalarRing::R)],
            vec![(1, ScalarRing::H), (2, ScalarRing::R), (1, ScalarRing::C)],
        ] {
            let a = matrix_algebra(&blocks).unwrap();
            let r = verify_algebra_axioms(&a);
            assert!(r.passed() && r.max_residual() < 1e-10, "{blocks:?}: {r:?}");
        }
    }

    #[test]
    fn perturbed_constant_breaks_associativity() {
        let a = m2r();
        let mut c = a.constants().to_vec();
        c[0] += 0.1;
        let b = StarAlgebra::new(
            a.basis_names().to_vec(),
            c,
            a.involution_matrix().clone(),
            a.unit_coords().to_vec(),
        )
        .unwrap();
        let r = verify_algebra_axioms(&b);
        let assoc = r.get("associativity").unwrap();
        assert!(!assoc.pass);
        assert!((assoc.max_residual - 0.1).abs() < 0.05);
        assert!(assoc.witness.is_some());
    }

    #[test]
    fn negated_involution_is_not_antihomomorphism() {
        let a = m2r();
        let b = StarAlgebra::new(
            a.basis_names().to_vec(),
            a.constants().to_vec(),
            -DMatrix::<f64>::identity(4, 4),
            a.unit_coords().to_vec(),
        )
        .unwrap();
        let r = verify_algebra_axioms(&b);
        assert!(r.passes("involution_involutive"));
        assert!(r.passes("associativity"));
        let anti = r.get("involution_antihomomorphism").unwrap();
        assert!(!anti.pass);
        // explicit counterexample: e_0 e_0 = e_0, so (e_0 e_0)* = −e_0 while e_0* e_0* = e_0
        assert_eq!(anti.witness, Some(Witness::Elements(vec![0, 0])));
    }

    #[test]
    fn matrix_algebra_dimensions() {
        for (blocks, dim, sym) in [
            (vec![(2, ScalarRing::R)], 4, 3),
            (vec![(1, ScalarRing::H)], 4, 1),
            (vec![(2, ScalarRing::C)], 8, 4),
            (vec![(2, ScalarRing::H)], 16, 6),
        ] {
            let a = matrix_algebra(&blocks).unwrap();
            assert_eq!(a.dim(), dim);
            let split = symmetric_basis(&a);
            assert_eq!(split.symmetric.len(), sym);
            assert_eq!(split.symmetric.len() + split.skew.len(), dim);
        }
        assert!(matrix_algebra(&[]).is_err());
        assert!(matrix_algebra(&[(0, ScalarRing::R)]).is_err());
    }

    #[test]
    fn cyclic_group_algebras() {
        let a1 = group_star_algebra(1).unwrap();
        assert_eq!(a1.dim(), 1);
        assert_eq!(a1.involution_matrix()[(0, 0)], 1.0);

        let a2 = group_star_algebra(2).unwrap();
        assert_eq!(*a2.involution_matrix(), DMatrix::<f64>::identity(2, 2));

        let a3 = group_star_algebra(3).unwrap();
        assert!(verify_algebra_axioms(&a3).passed());
        let x = a3.basis_element(1);
        let y = a3.basis_element(2);
        assert_eq!(x.multiply(&y).unwrap(), y.multiply(&x).unwrap());
        let split = symmetric_basis(&a3);
        assert_eq!(split.symmetric.len(), 2);
        // e and g + g² span the fixed space
        let s = symmetric_basis_matrix(&a3);
        let probe = DMatrix::from_column_slice(3, 2, &[1.0, 0.0, 0.0, 0.0, 1.0, 1.0]);
        let proj = &s * (s.transpose() * &probe);
        assert!(linalg::max_abs(&(proj - probe)) < 1e-12);
        assert!(group_star_algebra(0).is_err());
    }

    #[test]
    fn symmetric_split_counts() {
        let m2c = matrix_algebra(&[(2, ScalarRing::C)]).unwrap();
        let split = symmetric_basis(&m2c);
        assert_eq!((split.symmetric.len(), split.skew.len()), (4, 4));
        let h = matrix_algebra(&[(1, ScalarRing::H)]).unwrap();
        let split = symmetric_basis(&h);
        assert_eq!((split.symmetric.len(), split.skew.len()), (1, 3));
        for s in &split.symmetric {
            assert!(vec_diff(s.involute().coords(), s.coords()) < 1e-12);
        }
    }

    #[test]
    fn bilinearity() {
        let a = matrix_algebra(&[(2, ScalarRing::C)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let x = a.random_element(&mut rng);
            let y = a.random_element(&mut rng);
            let z = a.random_element(&mut rng);
            let (al, be): (f64, f64) = (rng.sample(StandardNormal), rng.sample(StandardNormal));
            let l = x.linear_combination(al, &y, be).unwrap().multiply(&z).unwrap();
            let r = x
                .multiply(&z)
                .unwrap()
                .linear_combination(al, &y.multiply(&z).unwrap(), be)
                .unwrap();
            assert!(vec_diff(l.coords(), r.coords()) < 1e-12 * (1.0 + l.max_abs()));
        }
    }

    #[test]
    fn json_round_trip() {
        let a = matrix_algebra(&[(2, ScalarRing::C)]).unwrap();
        let b = StarAlgebra::from_json(&a.to_json()).unwrap();
        assert_eq!(a.constants(), b.constants());
        assert_eq!(a.involution_matrix(), b.involution_matrix());
        assert_eq!(a.unit_coords(), b.unit_coords());
        assert!(StarAlgebra::from_json(r#"{"dim": 2}"#).is_err());
        let bad = r#"{"dim":1,"basis_names":["e"],"structure_constants":[[0,0,3,1.0]],"involution":[[1]],"unit":[1]}"#;
        assert!(matches!(StarAlgebra::from_json(bad), Err(Error::InvalidAlgebra(_))));
    }
}
