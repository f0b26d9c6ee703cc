//! Bundled example inputs. Every file under `fixtures/` is produced by
//! [`all`] (see `examples/gen_fixtures.rs`) and checked against it in the
//! test suite, so none of the structure constants are typed by hand.

use std::path::Path;

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::qlogic::{self, FiniteOrtholattice};
use crate::sampling::sample_rng;
use crate::scalars::ScalarRing;
use crate::star_algebra::{group_star_algebra, matrix_algebra, StarAlgebra};

/// Seed of the orthogonal scramble in `scrambled-m2-m3.json`.
pub const SCRAMBLE_SEED: u64 = 77;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    Algebra,
    Lattice,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub kind: FixtureKind,
    pub description: &'static str,
    pub contents: String,
}

/// `M₂(ℝ)` with the associativity-breaking perturbation `c[0][0][0] += 0.1`.
pub fn broken_assoc() -> StarAlgebra {
    let a = matrix_algebra(&[(2, ScalarRing::R)]).expect("valid blocks");
    let mut c = a.constants().to_vec();
    c[0] += 0.1;
    StarAlgebra::new(
        a.basis_names().to_vec(),
        c,
        a.involution_matrix().clone(),
        a.unit_coords().to_vec(),
    )
    .expect("same shapes")
}

/// `M₂(ℝ) ⊕ M₃(ℝ)` in a random orthonormal basis.
pub fn scrambled_m2_m3() -> StarAlgebra {
    let a = matrix_algebra(&[(2, ScalarRing::R), (3, ScalarRing::R)]).expect("valid blocks");
    let d = a.dim();
    let mut rng = sample_rng(SCRAMBLE_SEED, 0);
    let g = DMatrix::from_fn(d, d, |_, _| rng.sample::<f64, _>(StandardNormal));
    a.change_basis(&g.qr().q()).expect("orthogonal")
}

/// First lattice found with an involutive complement satisfying
/// `a ∧ ¬a = 0` that does not reverse the order.
pub fn nonreversing_six() -> FiniteOrtholattice {
    qlogic::find_nonreversing_complement(6)
        .expect("size within bound")
        .expect("a witness exists at six elements")
        .lattice
}

/// All bundled fixtures in listing order.
pub fn all() -> Vec<Fixture> {
    use FixtureKind::*;
    let alg = |name, description, a: StarAlgebra| Fixture {
        name,
        kind: Algebra,
        description,
        contents: a.to_json() + "\n",
    };
    let lat = |name, description, l: FiniteOrtholattice| Fixture {
        name,
        kind: Lattice,
        description,
        contents: l.to_json() + "\n",
    };
    vec![
        alg("m2r.json", "2x2 real matrices", matrix_algebra(&[(2, ScalarRing::R)]).expect("valid")),
        alg("broken-assoc.json", "2x2 real matrices with one perturbed structure constant", broken_assoc()),
        alg("group-c3.json", "real group algebra of the cyclic group of order 3", group_star_algebra(3).expect("valid")),
        alg("h-quaternions.json", "the quaternions", matrix_algebra(&[(1, ScalarRing::H)]).expect("valid")),
        alg("scrambled-m2-m3.json", "M2(R) + M3(R) in a random orthonormal basis", scrambled_m2_m3()),
        lat("boolean-b3.json", "subsets of a 3-set", qlogic::boolean_lattice(3).expect("valid")),
        lat("o6.json", "benzene ortholattice (not orthomodular)", qlogic::o6()),
        lat("mo2.json", "four-atom orthomodular lattice (not distributive)", qlogic::mo2()),
        lat("nonreversing-6.json", "complement that is not order reversing", nonreversing_six()),
    ]
}

pub fn get(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}

/// Writes every fixture into `dir`.
pub fn write_all(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for f in all() {
        std::fs::write(dir.join(f.name), &f.contents)?;
    }
    Ok(())
}
