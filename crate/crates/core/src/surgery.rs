//! Closed-form omega-loop and tau-loop calculus and solid-torus boundary data.
//!
//! An `omega_a` loop is the formal sum `sum_x S_{0a} S*_{ax} (x-loop)`; around a
//! charge line `c` it evaluates to `delta_{ac}`, so it projects the lines
//! threading it onto total charge `a`. A `tau^m` loop multiplies a threading
//! `c` line by `theta_c^m`. Twisted interferometry is then described by the
//! boundary vector of a solid torus glued along a twisted curve, obtained from
//! the meridional vector by `B = S T^2 S^{-1}`.

use std::fmt;

use nalgebra::{DMatrix, DVector};

use crate::model::{AnyonModel, Charge};
use crate::{Error, Result, C64};

/// Which boundary decomposition of the solid torus a vector or operator is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorusBasis {
    Longitudinal,
    Meridional,
    Twisted,
}

impl fmt::Display for TorusBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TorusBasis::Longitudinal => "longitudinal",
            TorusBasis::Meridional => "meridional",
            TorusBasis::Twisted => "twisted",
        })
    }
}

/// Charge-diagonal operator: one complex entry per charge.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalLoopOperator {
    basis: TorusBasis,
    entries: Vec<C64>,
}

impl DiagonalLoopOperator {
    pub fn new(basis: TorusBasis, entries: Vec<C64>) -> Self {
        DiagonalLoopOperator { basis, entries }
    }

    pub fn basis(&self) -> TorusBasis {
        self.basis
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn entry(&self, c: Charge) -> C64 {
        self.entries[c.0]
    }

    pub fn to_matrix(&self) -> DMatrix<C64> {
        DMatrix::from_diagonal(&DVector::from_vec(self.entries.clone()))
    }

    /// Entrywise product, i.e. operator composition.
    pub fn compose(&self, other: &DiagonalLoopOperator) -> DiagonalLoopOperator {
        DiagonalLoopOperator {
            basis: self.basis,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| x * y).collect(),
        }
    }

    /// Restriction to the listed charges, in the given order.
    pub fn restrict(&self, charges: &[Charge]) -> Vec<C64> {
        charges.iter().map(|c| self.entries[c.0]).collect()
    }
}

/// Boundary vector of a solid torus in one of the three bases.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusVector {
    pub basis: TorusBasis,
    pub coefficients: Vec<C64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModularMatrices {
    pub s: DMatrix<C64>,
    pub t: DMatrix<C64>,
    /// `S T^2 S^{-1}`.
    pub b: DMatrix<C64>,
}

/// Either a plain charge-`x` Wilson loop or an `omega_a` projector loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopLabel {
    Charge(Charge),
    Omega(Charge),
}

/// Coefficients `S_{0a} S*_{ax}` of `omega_a` over charge-`x` loops.
pub fn omega_vector(model: &AnyonModel, a: Charge) -> Vec<C64> {
    let s00a = model.s(Charge::VACUUM, a);
    model.charges().map(|x| s00a * model.s(a, x).conj()).collect()
}

/// Value of a loop encircling a `c` line, relative to the bare line.
///
/// A charge-`x` loop gives `S_{cx} / S_{0c}`; an `omega_a` loop gives
/// `sum_x S_{0a} S*_{ax} S_{cx} / S_{0c} = delta_{ac}`.
pub fn loop_around_line(model: &AnyonModel, label: LoopLabel, c: Charge) -> C64 {
    let s0c = model.s(Charge::VACUUM, c);
    match label {
        LoopLabel::Charge(x) => model.s(c, x) / s0c,
        LoopLabel::Omega(a) => omega_vector(model, a)
            .iter()
            .zip(model.charges())
            .map(|(w, x)| w * model.s(c, x) / s0c)
            .sum(),
    }
}

/// Sliding `omega_a` over `omega_b` for abelian `b` yields `omega_{a x b}`.
pub fn slide_omega(model: &AnyonModel, a: Charge, b: Charge) -> Result<Charge> {
    if model.dim(b) > 1.0 + 1e-9 {
        return Err(Error::NonAbelianSlide(model.charge_name(b).to_string()));
    }
    match model.fusion_outcomes(a, b).as_slice() {
        [c] => Ok(*c),
        other => Err(Error::InvalidModel(format!(
            "abelian fusion {} x {} has {} outcomes",
            model.charge_name(a),
            model.charge_name(b),
            other.len()
        ))),
    }
}

/// Largest `|S_{a x b, x} - M_{b,x} S_{a,x}|` over all `(a, x)` for abelian `b`.
pub fn slide_witness_residual(model: &AnyonModel, b: Charge) -> Result<f64> {
    let mut worst = 0.0f64;
    for a in model.charges() {
        let ab = slide_omega(model, a, b)?;
        for x in model.charges() {
            let r = (model.s(ab, x) - model.monodromy(b, x) * model.s(a, x)).norm();
            worst = worst.max(r);
        }
    }
    Ok(worst)
}

/// `tau^m`: diagonal `theta_c^m`; negative `m` allowed.
pub fn tau_operator(model: &AnyonModel, m: i32) -> DiagonalLoopOperator {
    DiagonalLoopOperator::new(
        TorusBasis::Longitudinal,
        model.charges().map(|c| model.twist(c).powi(m)).collect(),
    )
}

fn invert(m: &DMatrix<C64>) -> DMatrix<C64> {
    m.clone().try_inverse().expect("modular S is invertible")
}

/// `S T^m S^{-1}`.
pub fn twist_transform(model: &AnyonModel, m: i32) -> DMatrix<C64> {
    let s = model.s_matrix();
    let tm = tau_operator(model, m).to_matrix();
    s * tm * invert(s)
}

pub fn modular_matrices(model: &AnyonModel) -> ModularMatrices {
    ModularMatrices {
        s: model.s_matrix().clone(),
        t: model.t_matrix().clone(),
        b: twist_transform(model, 2),
    }
}

/// The alternate spelling `S^{-1} T^2 S`; equal to `B` whenever `S^2` commutes with `T`.
pub fn modular_b_alias(model: &AnyonModel) -> DMatrix<C64> {
    let s = model.s_matrix();
    invert(s) * model.t_matrix() * model.t_matrix() * s
}

/// Diagonal operator `[v]_c / S_{0c}` of a boundary vector.
pub fn vector_to_operator(model: &AnyonModel, v: &TorusVector) -> DiagonalLoopOperator {
    DiagonalLoopOperator::new(
        v.basis,
        v.coefficients
            .iter()
            .zip(model.charges())
            .map(|(x, c)| x / model.s(Charge::VACUUM, c))
            .collect(),
    )
}

fn unit(model: &AnyonModel, core: Charge) -> DVector<C64> {
    DVector::from_fn(model.num_charges(), |i, _| {
        if i == core.0 {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// Boundary vector and normalized operator of a solid torus with a Wilson
/// line of charge `core`.
///
/// Longitudinal: `v_l = (d_a / D)` with identity operator (core must be vacuum).
/// Meridional: the unit vector at `core`. Twisted: `B` applied to the meridional vector.
pub fn solid_torus_operator(
    model: &AnyonModel,
    boundary: TorusBasis,
    core: Charge,
) -> Result<(TorusVector, DiagonalLoopOperator)> {
    let coefficients: Vec<C64> = match boundary {
        TorusBasis::Longitudinal => {
            if !core.is_vacuum() {
                return Err(Error::InvalidCore(model.charge_name(core).to_string()));
            }
            model
                .charges()
                .map(|a| C64::new(model.dim(a) / model.total_dim(), 0.0))
                .collect()
        }
        TorusBasis::Meridional => unit(model, core).iter().copied().collect(),
        TorusBasis::Twisted => (twist_transform(model, 2) * unit(model, core))
            .iter()
            .copied()
            .collect(),
    };
    let v = TorusVector {
        basis: boundary,
        coefficients,
    };
    let op = vector_to_operator(model, &v);
    Ok((v, op))
}

/// Twisted-measurement operator `O_t(core)` for `total_twists` Dehn twists.
///
/// Only `total_twists = 2` corresponds to the double-twisted interferometer
/// analysed for Ising; other values apply `S T^m S^{-1}` by extrapolation.
pub fn twisted_operator(model: &AnyonModel, core: Charge, total_twists: i32) -> DiagonalLoopOperator {
    let v = twist_transform(model, total_twists) * unit(model, core);
    vector_to_operator(
        model,
        &TorusVector {
            basis: TorusBasis::Twisted,
            coefficients: v.iter().copied().collect(),
        },
    )
}

/// Whether `twisted_operator` with this twist count is an extrapolation.
pub fn is_extrapolated_twist(total_twists: i32) -> bool {
    total_twists != 2
}
