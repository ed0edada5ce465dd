use nalgebra::{DMatrix, Matrix2};

use crate::linalg::{hermiticity_residual, min_eigenvalue};
use crate::model::{AnyonModel, Charge};
use crate::{Error, Result, C64};

/// Tolerance for Hermiticity, unit trace and positivity of supplied states.
pub const STATE_TOL: f64 = 1e-9;

/// Fusion-tree label `|a, c; f>`: target charge `a`, complement `c`, total `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub a: Charge,
    pub c: Charge,
    pub f: Charge,
}

impl BasisLabel {
    pub fn new(a: Charge, c: Charge, f: Charge) -> Self {
        BasisLabel { a, c, f }
    }
}

/// Density matrix of target plus complement in a labeled fusion basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AnyonicDensityMatrix {
    basis: Vec<BasisLabel>,
    rho: DMatrix<C64>,
}

impl AnyonicDensityMatrix {
    /// Validates labels, charge superselection, Hermiticity, trace and positivity.
    pub fn new(model: &AnyonModel, basis: Vec<BasisLabel>, rho: DMatrix<C64>) -> Result<Self> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::InvalidState("empty basis".into()));
        }
        if rho.shape() != (n, n) {
            return Err(Error::InvalidState(format!(
                "matrix is {:?}, basis has {n} labels",
                rho.shape()
            )));
        }
        let k = model.num_charges();
        for (i, l) in basis.iter().enumerate() {
            if l.a.0 >= k || l.c.0 >= k || l.f.0 >= k {
                return Err(Error::InvalidState(format!("label {i} references an unknown charge")));
            }
            if !model.fuses(l.a, l.c, l.f) {
                return Err(Error::InvalidState(format!(
                    "label {i}: {} is not in {} x {}",
                    model.charge_name(l.f),
                    model.charge_name(l.a),
                    model.charge_name(l.c)
                )));
            }
            if basis[..i].contains(l) {
                return Err(Error::InvalidState(format!("label {i} is repeated")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if basis[i].f != basis[j].f && rho[(i, j)].norm() > STATE_TOL {
                    return Err(Error::InvalidState(format!(
                        "entry ({i},{j}) couples different total charges"
                    )));
                }
            }
        }
        let herm = hermiticity_residual(&rho);
        if herm > STATE_TOL {
            return Err(Error::InvalidState(format!("not Hermitian (residual {herm:e})")));
        }
        let trace = rho.trace();
        if (trace - C64::new(1.0, 0.0)).norm() > STATE_TOL {
            return Err(Error::InvalidState(format!("trace is {trace}")));
        }
        let min = min_eigenvalue(&rho);
        if min < -STATE_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        Ok(AnyonicDensityMatrix { basis, rho })
    }

    /// Trusted constructor for matrices produced by the channel maps.
    pub(crate) fn from_parts(basis: Vec<BasisLabel>, rho: DMatrix<C64>) -> Self {
        AnyonicDensityMatrix { basis, rho }
    }

    /// Qubit basis `|0> = |I,I;I>`, `|1> = |psi,psi;I>` of a model with a `psi` charge.
    pub fn qubit_basis(model: &AnyonModel) -> Result<Vec<BasisLabel>> {
        let vac = model.vacuum();
        let psi = model.charge("psi")?;
        Ok(vec![BasisLabel::new(vac, vac, vac), BasisLabel::new(psi, psi, vac)])
    }

    /// Embeds a 2x2 qubit density matrix into the anyonic basis.
    pub fn ising_qubit(model: &AnyonModel, rho: &Matrix2<C64>) -> Result<Self> {
        let basis = Self::qubit_basis(model)?;
        Self::new(model, basis, DMatrix::from_fn(2, 2, |i, j| rho[(i, j)]))
    }

    /// Qubit density with the given `rho_00` and `rho_01`.
    pub fn ising_qubit_entries(model: &AnyonModel, rho00: f64, rho01: C64) -> Result<Self> {
        let m = Matrix2::new(C64::new(rho00, 0.0), rho01, rho01.conj(), C64::new(1.0 - rho00, 0.0));
        Self::ising_qubit(model, &m)
    }

    /// `|psi><psi|` for normalized amplitudes over `basis`.
    pub fn pure(model: &AnyonModel, basis: Vec<BasisLabel>, amplitudes: &[C64]) -> Result<Self> {
        if amplitudes.len() != basis.len() {
            return Err(Error::InvalidState("amplitude count differs from basis size".into()));
        }
        let rho = DMatrix::from_fn(basis.len(), basis.len(), |i, j| amplitudes[i] * amplitudes[j].conj());
        Self::new(model, basis, rho)
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.rho
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.rho[(i, j)]
    }

    pub fn trace(&self) -> f64 {
        self.rho.trace().re
    }

    /// Populations, the real diagonal.
    pub fn populations(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.rho[(i, i)].re).collect()
    }

    /// Largest off-diagonal modulus over the largest population.
    pub fn coherence(&self) -> f64 {
        let n = self.dim();
        let max_diag = self.populations().into_iter().fold(0.0, f64::max);
        let mut max_off = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    max_off = max_off.max(self.rho[(i, j)].norm());
                }
            }
        }
        if max_diag > 0.0 {
            max_off / max_diag
        } else {
            0.0
        }
    }

    /// Total weight of labels whose `a` lies in `members`.
    pub fn weight_of(&self, members: &[Charge]) -> f64 {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, l)| members.contains(&l.a))
            .map(|(i, _)| self.rho[(i, i)].re)
            .sum()
    }

    /// Charges `e` with `e in a x a'` and `e in c' x c`, i.e. the lines that can
    /// connect the target and complement in entry `(i, j)`.
    pub fn connecting_charges(&self, model: &AnyonModel, i: usize, j: usize) -> Vec<Charge> {
        let (row, col) = (self.basis[i], self.basis[j]);
        let a_prime_bar = model.dual(col.a);
        let c_bar = model.dual(row.c);
        model
            .charges()
            .filter(|&e| model.fuses(row.a, a_prime_bar, e) && model.fuses(col.c, c_bar, e))
            .collect()
    }

    /// The 2x2 matrix when this is a two-label state.
    pub fn as_qubit(&self) -> Option<Matrix2<C64>> {
        (self.dim() == 2).then(|| Matrix2::from_fn(|i, j| self.rho[(i, j)]))
    }
}
