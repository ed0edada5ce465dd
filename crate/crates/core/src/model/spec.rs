use std::collections::HashMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{monodromy_from_s, s_from_ribbon, AnyonModel, Charge};
use crate::{Error, Result, C64};

/// `[F^{abc}_d]_{ef}` entry: `(a, b, c, d, e, f, re, im)`.
pub type FEntry = (String, String, String, String, String, String, f64, f64);

/// On-disk model description.
///
/// F and R entries that are not listed default to 1 when every vertex is
/// fusion-allowed and 0 otherwise. Vacuum fusion rules and the `a x b = b x a`
/// closure are implied; only the nontrivial rules need to be listed. Twists
/// default to 1. `dims` and `S` are optional: dimensions are otherwise read off
/// `[F^{a a' a}_a]_{II} = 1/d_a` and S comes from the ribbon formula.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    #[serde(default)]
    pub name: String,
    pub charges: Vec<String>,
    /// Name of the vacuum charge; defaults to the first listed charge.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vacuum: Option<String>,
    #[serde(default)]
    pub fusion: Vec<(String, String, String)>,
    #[serde(default, rename = "F")]
    pub f_symbols: Vec<FEntry>,
    #[serde(default, rename = "R")]
    pub r_symbols: Vec<(String, String, String, f64, f64)>,
    #[serde(default)]
    pub twists: Vec<(String, f64, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<(String, f64)>>,
    #[serde(default, rename = "S", skip_serializing_if = "Option::is_none")]
    pub s_matrix: Option<Vec<Vec<(f64, f64)>>>,
}

impl ModelSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model spec serializes")
    }
}

/// Builds the model arrays without running the axiom checker.
pub(super) fn assemble(spec: &ModelSpec) -> Result<AnyonModel> {
    if spec.charges.is_empty() {
        return Err(Error::MissingVacuum);
    }
    let vacuum_name = spec.vacuum.as_deref().unwrap_or(&spec.charges[0]);
    let vac_pos = spec
        .charges
        .iter()
        .position(|c| c == vacuum_name)
        .ok_or(Error::MissingVacuum)?;
    let mut names = vec![spec.charges[vac_pos].clone()];
    names.extend(
        spec.charges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != vac_pos)
            .map(|(_, c)| c.clone()),
    );

    let mut index = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(Error::InvalidModel(format!("charge `{name}` listed twice")));
        }
    }
    let lookup = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownCharge(name.to_string()))
    };

    let n = names.len();
    let idx3 = |a: usize, b: usize, c: usize| (a * n + b) * n + c;

    let mut listed = vec![0u32; n * n * n];
    for (a, b, c) in &spec.fusion {
        let (ia, ib, ic) = (lookup(a)?, lookup(b)?, lookup(c)?);
        let count = &mut listed[idx3(ia, ib, ic)];
        *count += 1;
        if *count > 1 {
            return Err(Error::NonMultiplicityFree {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
                multiplicity: *count,
            });
        }
    }
    let mut fusion = vec![0u8; n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if listed[idx3(a, b, c)] > 0 || listed[idx3(b, a, c)] > 0 {
                    fusion[idx3(a, b, c)] = 1;
                }
            }
        }
        fusion[idx3(0, a, a)] = 1;
        fusion[idx3(a, 0, a)] = 1;
    }

    let mut dual = Vec::with_capacity(n);
    for a in 0..n {
        let candidates: Vec<usize> = (0..n).filter(|&b| fusion[idx3(a, b, 0)] > 0).collect();
        match candidates.as_slice() {
            [b] => dual.push(Charge(*b)),
            [] => return Err(Error::InvalidModel(format!("charge `{}` has no conjugate", names[a]))),
            _ => {
                return Err(Error::InvalidModel(format!(
                    "charge `{}` has several conjugates",
                    names[a]
                )))
            }
        }
    }

    let allowed = |a: usize, b: usize, c: usize| fusion[idx3(a, b, c)] > 0;
    let f_allowed = |k: [usize; 6]| {
        let [a, b, c, d, e, f] = k;
        allowed(a, b, e) && allowed(e, c, d) && allowed(b, c, f) && allowed(a, f, d)
    };
    let idx6 = |k: [usize; 6]| k.iter().fold(0, |acc, &x| acc * n + x);

    let mut f_symbols = vec![C64::new(0.0, 0.0); n.pow(6)];
    for (i, slot) in f_symbols.iter_mut().enumerate() {
        let mut k = [0usize; 6];
        let mut rest = i;
        for pos in (0..6).rev() {
            k[pos] = rest % n;
            rest /= n;
        }
        if f_allowed(k) {
            *slot = C64::new(1.0, 0.0);
        }
    }
    for (a, b, c, d, e, f, re, im) in &spec.f_symbols {
        let k = [lookup(a)?, lookup(b)?, lookup(c)?, lookup(d)?, lookup(e)?, lookup(f)?];
        if !f_allowed(k) {
            return Err(Error::InvalidModel(format!(
                "F^{{{a}{b}{c}}}_{d}[{e},{f}] given for a fusion-forbidden labeling"
            )));
        }
        f_symbols[idx6(k)] = C64::new(*re, *im);
    }

    let mut r_symbols: Vec<C64> = fusion.iter().map(|&x| C64::new(f64::from(x), 0.0)).collect();
    for (a, b, c, re, im) in &spec.r_symbols {
        let (ia, ib, ic) = (lookup(a)?, lookup(b)?, lookup(c)?);
        if !allowed(ia, ib, ic) {
            return Err(Error::InvalidModel(format!(
                "R^{{{a}{b}}}_{c} given but {c} is not in {a} x {b}"
            )));
        }
        r_symbols[idx3(ia, ib, ic)] = C64::new(*re, *im);
    }

    let mut twists = vec![C64::new(1.0, 0.0); n];
    for (a, re, im) in &spec.twists {
        twists[lookup(a)?] = C64::new(*re, *im);
    }

    let dims = match &spec.dims {
        Some(list) => {
            let mut dims = vec![1.0; n];
            for (a, d) in list {
                dims[lookup(a)?] = *d;
            }
            dims
        }
        None => (0..n)
            .map(|a| {
                let abar = dual[a].0;
                let entry = f_symbols[idx6([a, abar, a, a, 0, 0])].norm();
                if entry > 0.0 {
                    Ok(1.0 / entry)
                } else {
                    Err(Error::InvalidModel(format!(
                        "cannot infer d_{}: [F^{{a a' a}}_a]_(I,I) vanishes",
                        names[a]
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?,
    };
    if dims.iter().any(|d| !d.is_finite() || *d <= 0.0) {
        return Err(Error::InvalidModel("quantum dimensions must be positive".into()));
    }
    let total_dim = dims.iter().map(|d| d * d).sum::<f64>().sqrt();

    let supplied_s = match &spec.s_matrix {
        Some(rows) => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidModel(format!("S must be {n}x{n}")));
            }
            // Rows are given in the file's charge order; permute into index order.
            let file_pos: Vec<usize> = names
                .iter()
                .map(|name| spec.charges.iter().position(|c| c == name).expect("name from spec"))
                .collect();
            Some(DMatrix::from_fn(n, n, |i, j| {
                let (re, im) = rows[file_pos[i]][file_pos[j]];
                C64::new(re, im)
            }))
        }
        None => None,
    };

    let mut model = AnyonModel {
        name: spec.name.clone(),
        names,
        dual,
        fusion,
        f_symbols,
        r_symbols,
        t_matrix: DMatrix::from_diagonal(&nalgebra::DVector::from_vec(twists.clone())),
        twists,
        dims,
        total_dim,
        s_matrix: DMatrix::zeros(n, n),
        s_supplied: supplied_s.is_some(),
        monodromy: DMatrix::zeros(n, n),
    };
    model.s_matrix = match supplied_s {
        Some(s) => s,
        None => s_from_ribbon(&model),
    };
    model.monodromy = monodromy_from_s(&model.s_matrix);
    Ok(model)
}
