//! Scalars of the three associative real division rings ℝ, ℂ and ℍ.
//!
//! All matrix code in the crate is written once over the [`Scalar`] trait.
//! Quaternionic vectors form a *right* module: scalars multiply vectors on
//! the right, so left multiplication by a quaternion matrix is ℍ-linear.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// Which division ring a scalar or matrix block lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ScalarRing {
    R,
    C,
    H,
}

impl ScalarRing {
    pub const ALL: [ScalarRing; 3] = [ScalarRing::R, ScalarRing::C, ScalarRing::H];

    /// Real dimension of the ring.
    pub fn real_dim(self) -> usize {
        match self {
            ScalarRing::R => 1,
            ScalarRing::C => 2,
            ScalarRing::H => 4,
        }
    }

    pub fn from_real_dim(d: usize) -> Option<Self> {
        match d {
            1 => Some(ScalarRing::R),
            2 => Some(ScalarRing::C),
            4 => Some(ScalarRing::H),
            _ => None,
        }
    }

    /// Real dimension of the Hermitian `n × n` matrices over this ring.
    pub fn hermitian_dim(self, n: usize) -> usize {
        match self {
            ScalarRing::R => n * (n + 1) / 2,
            ScalarRing::C => n * n,
            ScalarRing::H => n * (2 * n - 1),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ScalarRing::R => "R",
            ScalarRing::C => "C",
            ScalarRing::H => "H",
        }
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for ScalarRing {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "R" | "r" => Ok(ScalarRing::R),
            "C" | "c" => Ok(ScalarRing::C),
            "H" | "h" => Ok(ScalarRing::H),
            other => Err(format!("unknown ring `{other}` (expected R, C or H)")),
        }
    }
}

/// A quaternion `w + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        let p = self;
        Self::new(
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        )
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

/// Hamilton product of two quaternions.
pub fn quat_mul(p: Quaternion, q: Quaternion) -> Quaternion {
    p * q
}

/// Common interface of ℝ (`f64`), ℂ (`Complex64`) and ℍ ([`Quaternion`]).
pub trait Scalar:
    Copy
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
{
    const RING: ScalarRing;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(r: f64) -> Self;
    fn conj(self) -> Self;
    /// Real part, i.e. the coefficient of 1.
    fn re(self) -> f64;
    fn norm_sqr(self) -> f64;
    fn scale(self, s: f64) -> Self;
    /// Coefficients on the ring basis `1, i, j, k` (length [`ScalarRing::real_dim`]).
    fn coords(self) -> Vec<f64>;
    fn from_coords(c: &[f64]) -> Self;

    /// The `r`-th ring basis element.
    fn basis(r: usize) -> Self {
        let mut c = vec![0.0; Self::RING.real_dim()];
        c[r] = 1.0;
        Self::from_coords(&c)
    }

    fn abs(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Matrix of left multiplication `t ↦ self · t` on the real coordinates.
    fn embed_real(self) -> DMatrix<f64> {
        let d = Self::RING.real_dim();
        DMatrix::from_fn(d, d, |row, col| (self * Self::basis(col)).coords()[row])
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let c: Vec<f64> = (0..Self::RING.real_dim())
            .map(|_| rng.sample(StandardNormal))
            .collect();
        Self::from_coords(&c)
    }
}

impl Scalar for f64 {
    const RING: ScalarRing = ScalarRing::R;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_real(r: f64) -> Self {
        r
    }
    fn conj(self) -> Self {
        self
    }
    fn re(self) -> f64 {
        self
    }
    fn norm_sqr(self) -> f64 {
        self * self
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn coords(self) -> Vec<f64> {
        vec![self]
    }
    fn from_coords(c: &[f64]) -> Self {
        c[0]
    }
}

impl Scalar for Complex64 {
    const RING: ScalarRing = ScalarRing::C;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_real(r: f64) -> Self {
        Complex64::new(r, 0.0)
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn re(self) -> f64 {
        self.re
    }
    fn norm_sqr(self) -> f64 {
        Complex64::norm_sqr(&self)
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn coords(self) -> Vec<f64> {
        vec![self.re, self.im]
    }
    fn from_coords(c: &[f64]) -> Self {
        Complex64::new(c[0], c[1])
    }
}

impl Scalar for Quaternion {
    const RING: ScalarRing = ScalarRing::H;

    fn zero() -> Self {
        Quaternion::default()
    }
    fn one() -> Self {
        Quaternion::ONE
    }
    fn from_real(r: f64) -> Self {
        Quaternion::new(r, 0.0, 0.0, 0.0)
    }
    fn conj(self) -> Self {
        Quaternion::conj(self)
    }
    fn re(self) -> f64 {
        self.w
    }
    fn norm_sqr(self) -> f64 {
        Quaternion::norm_sqr(self)
    }
    fn scale(self, s: f64) -> Self {
        Quaternion::scale(self, s)
    }
    fn coords(self) -> Vec<f64> {
        vec![self.w, self.x, self.y, self.z]
    }
    fn from_coords(c: &[f64]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }
}

/// Ring involution.
pub fn conj<S: Scalar>(s: S) -> S {
    s.conj()
}

/// Real `d × d` matrix of left multiplication by `s`.
pub fn embed_real<S: Scalar>(s: S) -> DMatrix<f64> {
    s.embed_real()
}

/// Product `basis(r) · basis(s)` in coordinates, for a ring chosen at runtime.
pub(crate) fn ring_basis_product(ring: ScalarRing, r: usize, s: usize) -> Vec<f64> {
    match ring {
        ScalarRing::R => (f64::basis(r) * f64::basis(s)).coords(),
        ScalarRing::C => (Complex64::basis(r) * Complex64::basis(s)).coords(),
        ScalarRing::H => (Quaternion::basis(r) * Quaternion::basis(s)).coords(),
    }
}

/// Sign of `conj(basis(r))` relative to `basis(r)`.
pub(crate) fn ring_basis_conj_sign(r: usize) -> f64 {
    if r == 0 {
        1.0
    } else {
        -1.0
    }
}
