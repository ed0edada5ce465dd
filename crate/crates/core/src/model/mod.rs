//! Anyon-model data and the built-in Ising theory.
//!
//! Models are multiplicity-free: every `N^c_{ab}` is 0 or 1, so vertex labels
//! carry no multiplicity index. Charges are dense indices with the vacuum
//! fixed at index 0; names are kept only for I/O.

mod consistency;
mod spec;

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::fmt;
use std::path::Path;

use nalgebra::DMatrix;

pub use consistency::{verify_consistency, AxiomFamily, ConsistencyReport, FamilyReport, Violation, CONSISTENCY_TOL};
pub use spec::{FEntry, ModelSpec};

use crate::{Error, Result, C64};

/// Index of a topological charge in its model's charge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Charge(pub usize);

impl Charge {
    pub const VACUUM: Charge = Charge(0);

    pub fn index(self) -> usize {
        self.0
    }

    pub fn is_vacuum(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Immutable UMTC data. Construct with [`build_model`] or [`ising`].
#[derive(Clone, Debug)]
pub struct AnyonModel {
    name: String,
    names: Vec<String>,
    dual: Vec<Charge>,
    fusion: Vec<u8>,
    f_symbols: Vec<C64>,
    r_symbols: Vec<C64>,
    twists: Vec<C64>,
    dims: Vec<f64>,
    total_dim: f64,
    s_matrix: DMatrix<C64>,
    s_supplied: bool,
    t_matrix: DMatrix<C64>,
    monodromy: DMatrix<C64>,
}

impl AnyonModel {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_charges(&self) -> usize {
        self.names.len()
    }

    pub fn charges(&self) -> impl Iterator<Item = Charge> + '_ {
        (0..self.names.len()).map(Charge)
    }

    pub fn vacuum(&self) -> Charge {
        Charge::VACUUM
    }

    pub fn charge(&self, name: &str) -> Result<Charge> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(Charge)
            .ok_or_else(|| Error::UnknownCharge(name.to_string()))
    }

    pub fn charge_name(&self, c: Charge) -> &str {
        &self.names[c.0]
    }

    pub fn charge_names(&self) -> &[String] {
        &self.names
    }

    pub fn dual(&self, a: Charge) -> Charge {
        self.dual[a.0]
    }

    /// `N^c_{ab}`.
    pub fn fusion(&self, a: Charge, b: Charge, c: Charge) -> u8 {
        self.fusion[self.idx3(a.0, b.0, c.0)]
    }

    pub fn fuses(&self, a: Charge, b: Charge, c: Charge) -> bool {
        self.fusion(a, b, c) > 0
    }

    pub fn fusion_outcomes(&self, a: Charge, b: Charge) -> Vec<Charge> {
        self.charges().filter(|&c| self.fuses(a, b, c)).collect()
    }

    /// `[F^{abc}_d]_{ef}`, zero when any vertex is fusion-forbidden.
    pub fn f_symbol(&self, a: Charge, b: Charge, c: Charge, d: Charge, e: Charge, f: Charge) -> C64 {
        self.f_symbols[self.idx6([a.0, b.0, c.0, d.0, e.0, f.0])]
    }

    /// `R^{ab}_c`, zero when `c` is not in `a x b`.
    pub fn r_symbol(&self, a: Charge, b: Charge, c: Charge) -> C64 {
        self.r_symbols[self.idx3(a.0, b.0, c.0)]
    }

    pub fn twist(&self, a: Charge) -> C64 {
        self.twists[a.0]
    }

    pub fn dim(&self, a: Charge) -> f64 {
        self.dims[a.0]
    }

    pub fn total_dim(&self) -> f64 {
        self.total_dim
    }

    pub fn is_abelian(&self, a: Charge) -> bool {
        (self.dims[a.0] - 1.0).abs() <= CONSISTENCY_TOL
    }

    pub fn s_matrix(&self) -> &DMatrix<C64> {
        &self.s_matrix
    }

    /// Whether S came from the model description rather than the ribbon formula.
    pub fn s_supplied(&self) -> bool {
        self.s_supplied
    }

    pub fn t_matrix(&self) -> &DMatrix<C64> {
        &self.t_matrix
    }

    pub fn monodromy_matrix(&self) -> &DMatrix<C64> {
        &self.monodromy
    }

    pub fn s(&self, a: Charge, b: Charge) -> C64 {
        self.s_matrix[(a.0, b.0)]
    }

    pub fn monodromy(&self, a: Charge, b: Charge) -> C64 {
        self.monodromy[(a.0, b.0)]
    }

    fn idx3(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.names.len();
        (a * n + b) * n + c
    }

    fn idx6(&self, k: [usize; 6]) -> usize {
        let n = self.names.len();
        k.iter().fold(0, |acc, &x| acc * n + x)
    }
}

/// `M_{ab}` read from the model's monodromy matrix.
pub fn monodromy(model: &AnyonModel, a: Charge, b: Charge) -> C64 {
    model.monodromy(a, b)
}

/// `M_{ab} = S_{ab} S_{00} / (S_{0a} S_{0b})`.
pub fn monodromy_from_s(s: &DMatrix<C64>) -> DMatrix<C64> {
    let n = s.nrows();
    DMatrix::from_fn(n, n, |a, b| s[(a, b)] * s[(0, 0)] / (s[(0, a)] * s[(0, b)]))
}

/// Ribbon formula `S_{ab} = D^{-1} sum_c N^c_{a' b} d_c theta_c / (theta_a theta_b)`
/// with `a'` the dual of `a`.
pub fn s_from_ribbon(model: &AnyonModel) -> DMatrix<C64> {
    let n = model.num_charges();
    DMatrix::from_fn(n, n, |a, b| {
        let (a, b) = (Charge(a), Charge(b));
        let abar = model.dual(a);
        let sum: C64 = model
            .charges()
            .filter(|&c| model.fuses(abar, b, c))
            .map(|c| model.twist(c) / (model.twist(a) * model.twist(b)) * model.dim(c))
            .sum();
        sum / model.total_dim()
    })
}

/// Validates a model description and returns the certified model.
///
/// Structural problems (unknown names, repeated fusion triples, symbols on
/// forbidden vertices) are reported as their own errors; axiom failures come
/// back as [`Error::ConsistencyViolation`] carrying the full report.
pub fn build_model(spec: &ModelSpec) -> Result<AnyonModel> {
    let model = spec::assemble(spec)?;
    let report = verify_consistency(&model);
    if report.passed() {
        Ok(model)
    } else {
        Err(Error::ConsistencyViolation(Box::new(report)))
    }
}

/// Reads a JSON model file and builds it.
pub fn load_model(path: impl AsRef<Path>) -> Result<AnyonModel> {
    let text = std::fs::read_to_string(path.as_ref())?;
    let spec: ModelSpec =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.as_ref().display())))?;
    build_model(&spec)
}

/// Ising data with `theta_sigma = exp(i pi / 8)`, in charge order (I, sigma, psi).
pub fn ising_spec() -> ModelSpec {
    let s = FRAC_1_SQRT_2;
    let polar = |phase: f64| (phase.cos(), phase.sin());
    let (r_i_re, r_i_im) = polar(-PI / 8.0);
    let (r_psi_re, r_psi_im) = polar(3.0 * PI / 8.0);
    let (th_re, th_im) = polar(PI / 8.0);
    let f = |a: &str, b: &str, c: &str, d: &str, e: &str, f: &str, re: f64| {
        (a.into(), b.into(), c.into(), d.into(), e.into(), f.into(), re, 0.0)
    };
    let r = |a: &str, b: &str, c: &str, re: f64, im: f64| (a.into(), b.into(), c.into(), re, im);
    let half = |x: f64| (x / 2.0, 0.0);
    ModelSpec {
        name: "ising".into(),
        charges: vec!["I".into(), "sigma".into(), "psi".into()],
        vacuum: None,
        fusion: vec![
            ("sigma".into(), "sigma".into(), "I".into()),
            ("sigma".into(), "sigma".into(), "psi".into()),
            ("sigma".into(), "psi".into(), "sigma".into()),
            ("psi".into(), "psi".into(), "I".into()),
        ],
        f_symbols: vec![
            f("sigma", "sigma", "sigma", "sigma", "I", "I", s),
            f("sigma", "sigma", "sigma", "sigma", "I", "psi", s),
            f("sigma", "sigma", "sigma", "sigma", "psi", "I", s),
            f("sigma", "sigma", "sigma", "sigma", "psi", "psi", -s),
            f("sigma", "psi", "sigma", "psi", "sigma", "sigma", -1.0),
            f("psi", "sigma", "psi", "sigma", "sigma", "sigma", -1.0),
        ],
        r_symbols: vec![
            r("sigma", "sigma", "I", r_i_re, r_i_im),
            r("sigma", "sigma", "psi", r_psi_re, r_psi_im),
            r("sigma", "psi", "sigma", 0.0, -1.0),
            r("psi", "sigma", "sigma", 0.0, -1.0),
            r("psi", "psi", "I", -1.0, 0.0),
        ],
        twists: vec![("sigma".into(), th_re, th_im), ("psi".into(), -1.0, 0.0)],
        dims: None,
        s_matrix: Some(vec![
            vec![half(1.0), half(SQRT_2), half(1.0)],
            vec![half(SQRT_2), half(0.0), half(-SQRT_2)],
            vec![half(1.0), half(-SQRT_2), half(1.0)],
        ]),
    }
}

/// The Ising model (I, sigma, psi).
pub fn ising() -> AnyonModel {
    build_model(&ising_spec()).expect("built-in Ising data is consistent")
}

/// The vacuum-only theory.
pub fn trivial() -> AnyonModel {
    build_model(&ModelSpec {
        name: "trivial".into(),
        charges: vec!["I".into()],
        ..ModelSpec::default()
    })
    .expect("trivial model is consistent")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ising_basic_data() {
        let m = ising();
        let sigma = m.charge("sigma").unwrap();
        let psi = m.charge("psi").unwrap();
        assert!((m.dim(sigma) - SQRT_2).abs() < 1e-14);
        assert!((m.total_dim() - 2.0).abs() < 1e-14);
        assert!((m.twist(sigma) - C64::from_polar(1.0, PI / 8.0)).norm() < 1e-15);
        assert_eq!(m.twist(psi), C64::new(-1.0, 0.0));
        assert_eq!(m.fusion_outcomes(sigma, sigma), vec![Charge(0), psi]);
        assert_eq!(m.dual(sigma), sigma);
        assert!(m.s_supplied());
    }

    #[test]
    fn ising_monodromy_entries() {
        let m = ising();
        let sigma = m.charge("sigma").unwrap();
        let psi = m.charge("psi").unwrap();
        assert!(monodromy(&m, sigma, sigma).norm() < 1e-15);
        assert!((monodromy(&m, psi, sigma) - C64::new(-1.0, 0.0)).norm() < 1e-15);
        for x in m.charges() {
            assert!((monodromy(&m, m.vacuum(), x) - C64::new(1.0, 0.0)).norm() < 1e-15);
            for y in m.charges() {
                assert_eq!(monodromy(&m, x, y), monodromy(&m, y, x));
            }
        }
    }

    #[test]
    fn ribbon_formula_reproduces_ising_s() {
        let m = ising();
        let derived = s_from_ribbon(&m);
        assert!(crate::linalg::max_abs_diff(&derived, m.s_matrix()) < 1e-14);
    }

    #[test]
    fn unknown_charge_is_an_error() {
        assert!(matches!(ising().charge("tau"), Err(Error::UnknownCharge(_))));
    }

    #[test]
    fn trivial_model_is_valid() {
        let m = trivial();
        assert_eq!(m.num_charges(), 1);
        assert_eq!(m.s(Charge(0), Charge(0)), C64::new(1.0, 0.0));
        assert_eq!(m.monodromy(Charge(0), Charge(0)), C64::new(1.0, 0.0));
    }
}
