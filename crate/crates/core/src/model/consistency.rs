//! Brute-force evaluation of the UMTC axioms over every charge labeling.

use std::fmt;

use super::{monodromy_from_s, s_from_ribbon, AnyonModel, Charge};
use crate::C64;

/// Residual threshold below which an axiom instance counts as satisfied.
pub const CONSISTENCY_TOL: f64 = 1e-9;

const MAX_LISTED: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomFamily {
    /// Unit, conjugates, commutativity and associativity of `N^c_{ab}`.
    Fusion,
    Pentagon,
    /// Both hexagons plus the ribbon relation `theta_a d_a = sum_c d_c R^{aa}_c`.
    Hexagon,
    /// Unitarity, symmetry, vacuum row, and agreement with the ribbon formula.
    SMatrix,
    /// `M_{ab} = S_{ab}S_{00}/(S_{0a}S_{0b})` and its braiding counterpart.
    Monodromy,
    /// `theta_0 = 1`, `|theta_a| = 1`, `theta_{a'} = theta_a`, trivial vacuum braiding.
    TwistVacuum,
}

impl fmt::Display for AxiomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomFamily::Fusion => "fusion",
            AxiomFamily::Pentagon => "pentagon",
            AxiomFamily::Hexagon => "hexagon",
            AxiomFamily::SMatrix => "s-matrix",
            AxiomFamily::Monodromy => "monodromy",
            AxiomFamily::TwistVacuum => "twist/vacuum",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub instance: String,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyReport {
    pub family: AxiomFamily,
    pub instances: usize,
    pub max_residual: f64,
    /// Failing instances, capped at a handful per family.
    pub failures: Vec<Violation>,
    pub failure_count: usize,
}

impl FamilyReport {
    fn new(family: AxiomFamily) -> Self {
        FamilyReport {
            family,
            instances: 0,
            max_residual: 0.0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn record(&mut self, residual: f64, instance: impl FnOnce() -> String) {
        self.instances += 1;
        let residual = if residual.is_nan() { f64::INFINITY } else { residual };
        self.max_residual = self.max_residual.max(residual);
        if residual >= CONSISTENCY_TOL {
            self.failure_count += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(Violation {
                    instance: instance(),
                    residual,
                });
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConsistencyReport {
    pub model: String,
    pub families: Vec<FamilyReport>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyReport::passed)
    }

    pub fn family(&self, family: AxiomFamily) -> &FamilyReport {
        self.families
            .iter()
            .find(|f| f.family == family)
            .expect("every family is evaluated")
    }

    pub fn max_residual(&self) -> f64 {
        self.families.iter().map(|f| f.max_residual).fold(0.0, f64::max)
    }

    pub fn failing_families(&self) -> Vec<AxiomFamily> {
        self.families.iter().filter(|f| !f.passed()).map(|f| f.family).collect()
    }
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "model `{}`:", self.model)?;
        for fam in &self.families {
            write!(
                f,
                " {} {} (max residual {:.3e} over {} instances)",
                fam.family,
                if fam.passed() { "ok" } else { "FAILED" },
                fam.max_residual,
                fam.instances
            )?;
            if let Some(v) = fam.failures.first() {
                write!(f, " e.g. {} [{:.3e}]", v.instance, v.residual)?;
            }
            f.write_str(";")?;
        }
        Ok(())
    }
}

/// Evaluates every axiom family; failures are report content, never errors.
pub fn verify_consistency(model: &AnyonModel) -> ConsistencyReport {
    ConsistencyReport {
        model: model.name().to_string(),
        families: vec![
            fusion_family(model),
            pentagon_family(model),
            hexagon_family(model),
            s_matrix_family(model),
            monodromy_family(model),
            twist_vacuum_family(model),
        ],
    }
}

fn labels(model: &AnyonModel, cs: &[Charge]) -> String {
    cs.iter().map(|&c| model.charge_name(c)).collect::<Vec<_>>().join(",")
}

fn fusion_family(m: &AnyonModel) -> FamilyReport {
    let mut rep = FamilyReport::new(AxiomFamily::Fusion);
    let n = |a, b, c| f64::from(m.fusion(a, b, c));
    for a in m.charges() {
        for c in m.charges() {
            let expect = if a == c { 1.0 } else { 0.0 };
            rep.record((n(Charge::VACUUM, a, c) - expect).abs(), || {
                format!("N^{{{}}}_(I,{})", m.charge_name(c), m.charge_name(a))
            });
        }
        let vac: f64 = m.charges().map(|b| n(a, b, Charge::VACUUM)).sum();
        rep.record((vac - 1.0).abs(), || format!("conjugate count of {}", m.charge_name(a)));
        rep.record((n(a, m.dual(a), Charge::VACUUM) - 1.0).abs(), || {
            format!("{} x dual contains vacuum", m.charge_name(a))
        });
        for b in m.charges() {
            for c in m.charges() {
                rep.record((n(a, b, c) - n(b, a, c)).abs(), || {
                    format!("commutativity ({})", labels(m, &[a, b, c]))
                });
                for d in m.charges() {
                    let left: f64 = m.charges().map(|e| n(a, b, e) * n(e, c, d)).sum();
                    let right: f64 = m.charges().map(|f| n(b, c, f) * n(a, f, d)).sum();
                    rep.record((left - right).abs(), || {
                        format!("associativity ({})", labels(m, &[a, b, c, d]))
                    });
                }
            }
        }
    }
    rep
}

fn pentagon_family(m: &AnyonModel) -> FamilyReport {
    let mut rep = FamilyReport::new(AxiomFamily::Pentagon);
    let cs: Vec<Charge> = m.charges().collect();
    // [F^{fcd}_e]_{gl} [F^{abl}_e]_{fk} = sum_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}
    for &a in &cs {
        for &b in &cs {
            for &c in &cs {
                for &d in &cs {
                    for &e in &cs {
                        for &f in &cs {
                            if !m.fuses(a, b, f) {
                                continue;
                            }
                            for &g in &cs {
                                if !m.fuses(f, c, g) || !m.fuses(g, d, e) {
                                    continue;
                                }
                                for &k in &cs {
                                    if !m.fuses(a, k, e) {
                                        continue;
                                    }
                                    for &l in &cs {
                                        if !m.fuses(c, d, l) || !m.fuses(b, l, k) {
                                            continue;
                                        }
                                        let lhs = m.f_symbol(f, c, d, e, g, l) * m.f_symbol(a, b, l, e, f, k);
                                        let rhs: C64 = cs
                                            .iter()
                                            .map(|&h| {
                                                m.f_symbol(a, b, c, g, f, h)
                                                    * m.f_symbol(a, h, d, e, g, k)
                                                    * m.f_symbol(b, c, d, k, h, l)
                                            })
                                            .sum();
                                        rep.record((lhs - rhs).norm(), || {
                                            format!(
                                                "pentagon (a,b,c,d,e,f,g,k,l)=({})",
                                                labels(m, &[a, b, c, d, e, f, g, k, l])
                                            )
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    rep
}

fn inv(z: C64) -> C64 {
    if z.norm() == 0.0 {
        z
    } else {
        z.inv()
    }
}

fn hexagon_family(m: &AnyonModel) -> FamilyReport {
    let mut rep = FamilyReport::new(AxiomFamily::Hexagon);
    let cs: Vec<Charge> = m.charges().collect();
    // R^{ca}_e [F^{acb}_d]_{eg} R^{cb}_g = sum_f [F^{cab}_d]_{ef} R^{cf}_d [F^{abc}_d]_{fg}, and its mirror with R^{-1}.
    for &a in &cs {
        for &b in &cs {
            for &c in &cs {
                for &d in &cs {
                    for &e in &cs {
                        if !m.fuses(a, c, e) || !m.fuses(e, b, d) {
                            continue;
                        }
                        for &g in &cs {
                            if !m.fuses(c, b, g) || !m.fuses(a, g, d) {
                                continue;
                            }
                            let name =
                                |kind: &str| format!("{kind} (a,b,c,d,e,g)=({})", labels(m, &[a, b, c, d, e, g]));
                            let lhs = m.r_symbol(c, a, e) * m.f_symbol(a, c, b, d, e, g) * m.r_symbol(c, b, g);
                            let rhs: C64 = cs
                                .iter()
                                .map(|&f| {
                                    m.f_symbol(c, a, b, d, e, f) * m.r_symbol(c, f, d) * m.f_symbol(a, b, c, d, f, g)
                                })
                                .sum();
                            rep.record((lhs - rhs).norm(), || name("hexagon"));
                            let lhs =
                                inv(m.r_symbol(a, c, e)) * m.f_symbol(a, c, b, d, e, g) * inv(m.r_symbol(b, c, g));
                            let rhs: C64 = cs
                                .iter()
                                .map(|&f| {
                                    m.f_symbol(c, a, b, d, e, f)
                                        * inv(m.r_symbol(f, c, d))
                                        * m.f_symbol(a, b, c, d, f, g)
                                })
                                .sum();
                            rep.record((lhs - rhs).norm(), || name("inverse hexagon"));
                        }
                    }
                }
            }
        }
    }
    for &a in &cs {
        let trace: C64 = cs.iter().map(|&c| m.r_symbol(a, a, c) * m.dim(c)).sum();
        rep.record((trace - m.twist(a) * m.dim(a)).norm(), || {
            format!("ribbon relation theta_{} d = sum_c d_c R^{{aa}}_c", m.charge_name(a))
        });
    }
    rep
}

fn s_matrix_family(m: &AnyonModel) -> FamilyReport {
    let mut rep = FamilyReport::new(AxiomFamily::SMatrix);
    let s = m.s_matrix();
    let n = m.num_charges();
    for a in 0..n {
        for c in 0..n {
            let dot: C64 = (0..n).map(|x| s[(a, x)] * s[(c, x)].conj()).sum();
            let expect = if a == c { 1.0 } else { 0.0 };
            rep.record((dot - expect).norm(), || {
                format!("unitarity row ({},{})", m.names[a], m.names[c])
            });
            rep.record((s[(a, c)] - s[(c, a)]).norm(), || {
                format!("symmetry ({},{})", m.names[a], m.names[c])
            });
        }
        let d = m.dims[a];
        rep.record((s[(0, a)] - d / m.total_dim()).norm(), || {
            format!("S_(I,{}) = d/D", m.names[a])
        });
        rep.record((s[(0, a)] / s[(0, 0)] - d).norm(), || {
            format!("d_{} = S_(I,a)/S_(I,I)", m.names[a])
        });
    }
    let d2: f64 = m.dims.iter().map(|d| d * d).sum();
    rep.record((d2 - m.total_dim() * m.total_dim()).abs(), || "D^2 = sum d^2".into());
    if m.s_supplied() {
        let ribbon = s_from_ribbon(m);
        for a in 0..n {
            for b in 0..n {
                rep.record((ribbon[(a, b)] - s[(a, b)]).norm(), || {
                    format!("supplied S vs ribbon formula ({},{})", m.names[a], m.names[b])
                });
            }
        }
    }
    rep
}

fn monodromy_family(m: &AnyonModel) -> FamilyReport {
    let mut rep = FamilyReport::new(AxiomFamily::Monodromy);
    let recomputed = monodromy_from_s(m.s_matrix());
    for a in m.charges() {
        for b in m.charges() {
            let stored = m.monodromy(a, b);
            rep.record((stored - recomputed[(a.0, b.0)]).norm(), || {
                format!("M_({},{}) from S", m.charge_name(a), m.charge_name(b))
            });
            rep.record((stored - m.monodromy(b, a)).norm(), || {
                format!("M symmetric ({},{})", m.charge_name(a), m.charge_name(b))
            });
            // Full braid of a' around b through R-symbols; equals M_{ab} under the S convention used here.
            let abar = m.dual(a);
            let braided: C64 = m
                .charges()
                .filter(|&c| m.fuses(abar, b, c))
                .map(|c| m.r_symbol(b, abar, c) * m.r_symbol(abar, b, c) * m.dim(c))
                .sum::<C64>()
                / (m.dim(a) * m.dim(b));
            rep.record((stored - braided).norm(), || {
                format!("M_({},{}) from braiding", m.charge_name(a), m.charge_name(b))
            });
        }
    }
    rep
}

fn twist_vacuum_family(m: &AnyonModel) -> FamilyReport {
    let mut rep = FamilyReport::new(AxiomFamily::TwistVacuum);
    let one = C64::new(1.0, 0.0);
    rep.record((m.twist(Charge::VACUUM) - one).norm(), || "theta_I = 1".into());
    for a in m.charges() {
        rep.record((m.twist(a).norm() - 1.0).abs(), || {
            format!("|theta_{}| = 1", m.charge_name(a))
        });
        rep.record((m.twist(a) - m.twist(m.dual(a))).norm(), || {
            format!("theta_{} = theta of conjugate", m.charge_name(a))
        });
        rep.record((m.r_symbol(Charge::VACUUM, a, a) - one).norm(), || {
            format!("R^(I,{0})_{0} = 1", m.charge_name(a))
        });
        rep.record((m.r_symbol(a, Charge::VACUUM, a) - one).norm(), || {
            format!("R^({0},I)_{0} = 1", m.charge_name(a))
        });
        rep.record((m.t_matrix()[(a.0, a.0)] - m.twist(a)).norm(), || {
            format!("T_({0},{0}) = theta", m.charge_name(a))
        });
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_model, ising, ising_spec, trivial};
    use crate::Error;

    #[test]
    fn ising_passes_every_family_tightly() {
        let report = verify_consistency(&ising());
        assert!(report.passed(), "{report}");
        assert!(report.max_residual() < 1e-12, "{report}");
        assert!(report.family(AxiomFamily::Pentagon).instances > 0);
        assert!(report.family(AxiomFamily::Hexagon).instances > 0);
    }

    #[test]
    fn trivial_model_passes() {
        let report = verify_consistency(&trivial());
        assert!(report.passed());
        assert_eq!(report.max_residual(), 0.0);
    }

    #[test]
    fn flipped_f_sign_breaks_pentagon() {
        let mut spec = ising_spec();
        for entry in spec.f_symbols.iter_mut() {
            if entry.0 == "sigma" && entry.1 == "sigma" && entry.4 == "psi" && entry.5 == "psi" {
                entry.6 = -entry.6;
            }
        }
        match build_model(&spec) {
            Err(Error::ConsistencyViolation(report)) => {
                let pent = report.family(AxiomFamily::Pentagon);
                assert!(!pent.passed());
                assert!(pent.failures[0].instance.starts_with("pentagon"));
            }
            other => panic!("expected pentagon failure, got {other:?}"),
        }
    }

    #[test]
    fn trivial_sigma_twist_breaks_hexagon_family() {
        let mut spec = ising_spec();
        spec.twists.retain(|t| t.0 != "sigma");
        match build_model(&spec) {
            Err(Error::ConsistencyViolation(report)) => {
                assert!(!report.family(AxiomFamily::Hexagon).passed(), "{report}");
                assert!(report.family(AxiomFamily::Pentagon).passed());
            }
            other => panic!("expected hexagon failure, got {other:?}"),
        }
    }

    #[test]
    fn wrong_r_symbol_breaks_hexagon() {
        let mut spec = ising_spec();
        for r in spec.r_symbols.iter_mut() {
            if r.0 == "sigma" && r.1 == "psi" {
                r.4 = -r.4;
            }
        }
        let err = build_model(&spec).unwrap_err();
        let Error::ConsistencyViolation(report) = err else {
            panic!()
        };
        assert!(report.failing_families().contains(&AxiomFamily::Hexagon));
    }
}
