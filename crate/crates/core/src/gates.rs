//! Twisted interferometry on the Ising topological qubit.
//!
//! The qubit is `|0> = |I,I;I>`, `|1> = |psi,psi;I>`. A double-twisted
//! interferometer with `sigma` probes acts as the two-outcome measurement with
//! Kraus operators `K_a = S_{00} O_t(a)` restricted to the `{I, psi}` block, where
//! `O_t(I) = diag(1 + w, 1 - w)`, `O_t(psi) = diag(1 - w, 1 + w)` and
//! `w = exp(i pi / 4)`. Unlike the untwisted measurement it does not
//! decohere the qubit: off-diagonal entries survive with factor `+-i cos sin(pi/8)`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::sync::OnceLock;

use nalgebra::{Matrix2, Vector2};
use rand::Rng;

use crate::linalg::{equal_up_to_phase, normalize};
use crate::model::{ising, AnyonModel, Charge};
use crate::rng::stream_rng;
use crate::surgery::{is_extrapolated_twist, twisted_operator};
use crate::{Error, Result, C64};

const ZERO_PROBABILITY: f64 = 1e-12;

fn ising_model() -> &'static AnyonModel {
    static MODEL: OnceLock<AnyonModel> = OnceLock::new();
    MODEL.get_or_init(ising)
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Qubit-sector charge: the twisted outcome `a` or fusion outcome `alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QubitCharge {
    I,
    Psi,
}

impl QubitCharge {
    pub const BOTH: [QubitCharge; 2] = [QubitCharge::I, QubitCharge::Psi];

    /// 0 for `I`, 1 for `psi`.
    pub fn bit(self) -> u8 {
        match self {
            QubitCharge::I => 0,
            QubitCharge::Psi => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            QubitCharge::I => "I",
            QubitCharge::Psi => "psi",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "I" => Ok(QubitCharge::I),
            "psi" => Ok(QubitCharge::Psi),
            other => Err(Error::UnknownCharge(other.to_string())),
        }
    }

    pub fn charge(self, model: &AnyonModel) -> Result<Charge> {
        match self {
            QubitCharge::I => Ok(model.vacuum()),
            QubitCharge::Psi => model.charge("psi"),
        }
    }
}

impl fmt::Display for QubitCharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Pure qubit state `alpha |0> + beta |1>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitState(pub Vector2<C64>);

impl QubitState {
    pub fn new(alpha: C64, beta: C64) -> Self {
        QubitState(Vector2::new(alpha, beta))
    }

    pub fn zero() -> Self {
        Self::new(re(1.0), re(0.0))
    }

    pub fn amplitudes(&self) -> [C64; 2] {
        [self.0[0], self.0[1]]
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn normalized(&self) -> Self {
        let v = normalize(&self.amplitudes());
        Self::new(v[0], v[1])
    }

    pub fn density(&self) -> QubitDensity {
        QubitDensity(self.0 * self.0.adjoint())
    }

    pub fn fidelity(&self, other: &QubitState) -> f64 {
        self.0.dotc(&other.0).norm_sqr()
    }

    /// Equal up to global phase, after normalizing both.
    pub fn same_ray(&self, other: &QubitState, tol: f64) -> bool {
        equal_up_to_phase(&self.normalized().amplitudes(), &other.normalized().amplitudes(), tol)
    }
}

/// 2x2 qubit density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitDensity(pub Matrix2<C64>);

impl QubitDensity {
    /// Checks Hermiticity, unit trace and positivity to `1e-9`.
    pub fn new(m: Matrix2<C64>) -> Result<Self> {
        let tol = 1e-9;
        if (m - m.adjoint()).iter().any(|x| x.norm() > tol) {
            return Err(Error::InvalidState("qubit density is not Hermitian".into()));
        }
        let trace = m.trace();
        if (trace - re(1.0)).norm() > tol {
            return Err(Error::InvalidState(format!("qubit density has trace {trace}")));
        }
        let det = (m[(0, 0)].re * m[(1, 1)].re) - m[(0, 1)].norm_sqr();
        if m[(0, 0)].re < -tol || m[(1, 1)].re < -tol || det < -tol {
            return Err(Error::InvalidState("qubit density is not positive".into()));
        }
        Ok(QubitDensity(m))
    }

    pub fn from_entries(rho00: f64, rho01: C64) -> Result<Self> {
        Self::new(Matrix2::new(re(rho00), rho01, rho01.conj(), re(1.0 - rho00)))
    }

    pub fn maximally_mixed() -> Self {
        QubitDensity(Matrix2::new(re(0.5), re(0.0), re(0.0), re(0.5)))
    }

    pub fn matrix(&self) -> &Matrix2<C64> {
        &self.0
    }

    pub fn rho00(&self) -> f64 {
        self.0[(0, 0)].re
    }

    pub fn rho11(&self) -> f64 {
        self.0[(1, 1)].re
    }

    pub fn rho01(&self) -> C64 {
        self.0[(0, 1)]
    }
}

/// Dehn twists on the handle-body curves induced by arm twists `(l, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistRules {
    pub l: i32,
    pub r: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HandleCurve {
    Gamma,
    GammaBar,
    Beta,
    BetaBar,
}

impl TwistRules {
    /// The double twist in the right arm.
    pub const DOUBLE_RIGHT: TwistRules = TwistRules { l: 0, r: 2 };

    pub fn dehn_twists(&self, curve: HandleCurve) -> i32 {
        match curve {
            HandleCurve::Gamma => self.r,
            HandleCurve::GammaBar => -self.r,
            HandleCurve::Beta => self.l,
            HandleCurve::BetaBar => -self.l,
        }
    }

    /// Net framing change on the omega_0 curves; mirror pairs cancel.
    pub fn net_framing(&self) -> i32 {
        [
            HandleCurve::Gamma,
            HandleCurve::GammaBar,
            HandleCurve::Beta,
            HandleCurve::BetaBar,
        ]
        .iter()
        .map(|&c| self.dehn_twists(c))
        .sum()
    }

    /// Twists entering the `S T^m S^{-1}` transform.
    pub fn total(&self) -> i32 {
        self.l + self.r
    }
}

/// Two-outcome twisted measurement on the qubit, derived from `O_t`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedQubitChannel {
    pub twists: TwistRules,
    kraus: [Matrix2<C64>; 2],
}

impl TwistedQubitChannel {
    pub fn new(model: &AnyonModel, twists: TwistRules) -> Result<Self> {
        let (vac, psi) = (model.vacuum(), model.charge("psi")?);
        let scale = model.s(vac, vac);
        let kraus_for = |a: QubitCharge| -> Result<Matrix2<C64>> {
            let op = twisted_operator(model, a.charge(model)?, twists.total());
            let d = op.restrict(&[vac, psi]);
            Ok(Matrix2::new(d[0] * scale, re(0.0), re(0.0), d[1] * scale))
        };
        Ok(TwistedQubitChannel {
            twists,
            kraus: [kraus_for(QubitCharge::I)?, kraus_for(QubitCharge::Psi)?],
        })
    }

    /// The double-twisted Ising channel.
    pub fn ising() -> Self {
        Self::new(ising_model(), TwistRules::DOUBLE_RIGHT).expect("Ising has psi")
    }

    pub fn is_extrapolated(&self) -> bool {
        is_extrapolated_twist(self.twists.total())
    }

    pub fn kraus(&self, a: QubitCharge) -> &Matrix2<C64> {
        &self.kraus[a.bit() as usize]
    }

    /// `K_a rho K_a^dagger / Pr(a)`.
    pub fn measure(&self, rho: &QubitDensity, a: QubitCharge) -> Result<(f64, QubitDensity)> {
        let k = self.kraus(a);
        let image = k * rho.0 * k.adjoint();
        let prob = image.trace().re;
        if prob < ZERO_PROBABILITY {
            return Err(Error::ZeroProbability(prob));
        }
        Ok((prob, QubitDensity(image / re(prob))))
    }

    /// Draws an outcome for `seed` from the Kraus probabilities and conditions on it.
    pub fn sample(&self, rho: &QubitDensity, seed: u64) -> Result<(QubitCharge, QubitDensity)> {
        let mut rng = stream_rng(seed);
        let p_i = (self.kraus[0] * rho.0 * self.kraus[0].adjoint()).trace().re;
        let a = if rng.random::<f64>() < p_i {
            QubitCharge::I
        } else {
            QubitCharge::Psi
        };
        let (_, post) = self.measure(rho, a)?;
        Ok((a, post))
    }

    pub fn povm_residual(&self) -> f64 {
        let sum = self.kraus[0].adjoint() * self.kraus[0] + self.kraus[1].adjoint() * self.kraus[1];
        (sum - Matrix2::identity()).iter().map(|x| x.norm()).fold(0.0, f64::max)
    }
}

fn cs() -> (f64, f64) {
    ((PI / 8.0).cos(), (PI / 8.0).sin())
}

/// Factor multiplying `rho_01` (before dividing by `Pr(a)`): `+i cs` for `I`, `-i cs` for `psi`.
pub fn off_diagonal_coefficient(a: QubitCharge) -> C64 {
    let (c, s) = cs();
    match a {
        QubitCharge::I => C64::new(0.0, c * s),
        QubitCharge::Psi => C64::new(0.0, -c * s),
    }
}

/// `Pr(I) = cos^2(pi/8) rho_00 + sin^2(pi/8) rho_11`, and the swapped form for `psi`.
pub fn twisted_probability(rho: &QubitDensity, a: QubitCharge) -> f64 {
    let (c, s) = cs();
    let (w0, w1) = match a {
        QubitCharge::I => (c * c, s * s),
        QubitCharge::Psi => (s * s, c * c),
    };
    w0 * rho.rho00() + w1 * rho.rho11()
}

/// Closed-form post-measurement state of the twisted interferometer.
pub fn twisted_measure(rho: &QubitDensity, a: QubitCharge) -> Result<(f64, QubitDensity)> {
    let (c, s) = cs();
    let prob = twisted_probability(rho, a);
    if prob < ZERO_PROBABILITY {
        return Err(Error::ZeroProbability(prob));
    }
    let (w0, w1) = match a {
        QubitCharge::I => (c * c, s * s),
        QubitCharge::Psi => (s * s, c * c),
    };
    let off = off_diagonal_coefficient(a) * rho.rho01();
    let m = Matrix2::new(re(w0 * rho.rho00()), off, off.conj(), re(w1 * rho.rho11()));
    Ok((prob, QubitDensity(m / re(prob))))
}

/// Draws the twisted outcome for `seed` and conditions on it.
pub fn sample_twisted(rho: &QubitDensity, seed: u64) -> Result<(QubitCharge, QubitDensity)> {
    let mut rng = stream_rng(seed);
    let a = if rng.random::<f64>() < twisted_probability(rho, QubitCharge::I) {
        QubitCharge::I
    } else {
        QubitCharge::Psi
    };
    let (_, post) = twisted_measure(rho, a)?;
    Ok((a, post))
}

/// `cos(pi/8)|0> - i sin(pi/8)|1>` for `I`, `sin(pi/8)|0> + i cos(pi/8)|1>` for `psi`.
pub fn magic_state(a: QubitCharge) -> QubitState {
    let (c, s) = cs();
    match a {
        QubitCharge::I => QubitState::new(re(c), C64::new(0.0, -s)),
        QubitCharge::Psi => QubitState::new(re(s), C64::new(0.0, c)),
    }
}

/// `normalize(K_a H |0>)`: the magic state as produced by the twisted channel.
pub fn synthesize_magic_state(channel: &TwistedQubitChannel, a: QubitCharge) -> QubitState {
    let lib = clifford_library();
    QubitState(channel.kraus(a) * lib.h * QubitState::zero().0).normalized()
}

/// Single-qubit gates used alongside the twisted channel.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordLibrary {
    pub h: Matrix2<C64>,
    pub sigma_x: Matrix2<C64>,
    pub pi0: Matrix2<C64>,
    pub pi1: Matrix2<C64>,
}

impl CliffordLibrary {
    /// `R_theta = diag(1, e^{i theta})`.
    pub fn phase(&self, theta: f64) -> Matrix2<C64> {
        phase_gate(theta)
    }
}

pub fn phase_gate(theta: f64) -> Matrix2<C64> {
    Matrix2::new(re(1.0), re(0.0), re(0.0), C64::from_polar(1.0, theta))
}

pub fn clifford_library() -> CliffordLibrary {
    let h = re(FRAC_1_SQRT_2);
    CliffordLibrary {
        h: Matrix2::new(h, h, h, -h),
        sigma_x: Matrix2::new(re(0.0), re(1.0), re(1.0), re(0.0)),
        pi0: Matrix2::new(re(1.0), re(0.0), re(0.0), re(0.0)),
        pi1: Matrix2::new(re(0.0), re(0.0), re(0.0), re(1.0)),
    }
}

/// Outcome pair of the direct phase-gate protocol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProtocolOutcome {
    /// Twisted-interferometry outcome.
    pub a: QubitCharge,
    /// Fusion-channel measurement outcome.
    pub alpha: QubitCharge,
}

impl ProtocolOutcome {
    pub fn all() -> [ProtocolOutcome; 4] {
        let mut out = [ProtocolOutcome {
            a: QubitCharge::I,
            alpha: QubitCharge::I,
        }; 4];
        for (i, (a, alpha)) in QubitCharge::BOTH
            .iter()
            .flat_map(|&a| QubitCharge::BOTH.iter().map(move |&al| (a, al)))
            .enumerate()
        {
            out[i] = ProtocolOutcome { a, alpha };
        }
        out
    }
}

/// Tabulated gate: `diag(1, e^{-i pi/4})` for `alpha = I`, `diag(1, e^{-3i pi/4})` for `alpha = psi`.
pub fn protocol_unitary(outcome: ProtocolOutcome) -> Matrix2<C64> {
    match outcome.alpha {
        QubitCharge::I => phase_gate(-PI / 4.0),
        QubitCharge::Psi => phase_gate(-3.0 * PI / 4.0),
    }
}

/// Diagonal entries of the protocol operator evaluated from the twisted
/// coefficients `C_{a,z}` and Ising R-symbols.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProtocolCheck {
    pub outcome: ProtocolOutcome,
    /// `[u_I, u_psi]` before removing the common phase.
    pub raw: [C64; 2],
}

impl ProtocolCheck {
    /// The evaluated operator with `u_I` rotated to 1; off-diagonals vanish.
    pub fn operator(&self) -> Matrix2<C64> {
        Matrix2::new(re(1.0), re(0.0), re(0.0), self.ratio())
    }

    pub fn ratio(&self) -> C64 {
        self.raw[1] / self.raw[0]
    }

    /// `|u_psi/u_I - U_11/U_00|` against the tabulated gate.
    pub fn residual(&self) -> f64 {
        let u = protocol_unitary(self.outcome);
        (self.ratio() - u[(1, 1)] / u[(0, 0)]).norm()
    }
}

/// `C_{a,z}`: `cos(pi/8)` when `a = z`, `i sin(pi/8)` otherwise.
pub fn twisted_coefficient(a: QubitCharge, z: QubitCharge) -> C64 {
    let (c, s) = cs();
    if a == z {
        re(c)
    } else {
        C64::new(0.0, s)
    }
}

/// `u_q = sum_z C_{a,z} (-1)^{zq + z alpha + z + alpha q} e^{i pi/8} R^{alpha sigma}_sigma / R^{sigma sigma}_q`.
pub fn protocol_check(outcome: ProtocolOutcome) -> ProtocolCheck {
    let model = ising_model();
    let sigma = model.charge("sigma").expect("Ising has sigma");
    let alpha_charge = outcome.alpha.charge(model).expect("Ising has psi");
    let prefactor = C64::from_polar(1.0, PI / 8.0) * model.r_symbol(alpha_charge, sigma, sigma);
    let al = u32::from(outcome.alpha.bit());
    let raw = QubitCharge::BOTH.map(|q| {
        let qb = u32::from(q.bit());
        let q_charge = q.charge(model).expect("Ising has psi");
        let sum: C64 = QubitCharge::BOTH
            .iter()
            .map(|&z| {
                let zb = u32::from(z.bit());
                let sign = if (zb * qb + zb * al + zb + al * qb) % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                twisted_coefficient(outcome.a, z) * sign
            })
            .sum();
        sum * prefactor / model.r_symbol(sigma, sigma, q_charge)
    });
    ProtocolCheck { outcome, raw }
}
