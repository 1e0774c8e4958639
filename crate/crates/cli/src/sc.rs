//! Structure-constant tables: export to JSON or CSV and exact re-import.

use std::fmt;

use albert_core::albert::{self, AlbertElem, DIM};
use albert_core::composition::oct::CD_NAMES;
use albert_core::composition::vdbs::{self, vdbs_build};
use albert_core::composition::{Oct, Quat};
use albert_core::linalg::{unit_vector, Vector};
use albert_core::Scalar;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Algebra {
    Quat,
    Oct,
    Albert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Basis {
    /// Cayley–Dickson coordinates (`1, i, j, k, v, ...`); for H₃(O) the 27
    /// matrix-unit coordinates.
    Cd,
    /// The standard basis `x0..x3, y0..y3`.
    Vdbs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// `e_i e_j = Σ_k c_k e_k`, stored for every ordered pair with a nonzero product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScTable {
    pub algebra: String,
    pub basis: Vec<String>,
    /// Sorted by `(i, j)`; each coefficient list sorted by `k` with no zeros.
    pub entries: Vec<(usize, usize, Vec<(usize, Scalar)>)>,
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    algebra: String,
    dim: usize,
    basis: Vec<String>,
    table: Vec<(usize, usize, Vec<(usize, String)>)>,
}

impl ScTable {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coefficients of `e_i e_j`, dense.
    pub fn product(&self, i: usize, j: usize) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim()];
        if let Ok(n) = self.entries.binary_search_by(|e| (e.0, e.1).cmp(&(i, j))) {
            for (k, c) in &self.entries[n].2 {
                out[*k] = c.clone();
            }
        }
        out
    }

    fn from_products(algebra: &str, basis: Vec<String>, product: impl Fn(usize, usize) -> Vector) -> Self {
        let n = basis.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let coeffs: Vec<(usize, Scalar)> =
                    product(i, j).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !coeffs.is_empty() {
                    entries.push((i, j, coeffs));
                }
            }
        }
        ScTable { algebra: algebra.to_string(), basis, entries }
    }

    pub fn to_json(&self) -> String {
        let t = JsonTable {
            algebra: self.algebra.clone(),
            dim: self.dim(),
            basis: self.basis.clone(),
            table: self
                .entries
                .iter()
                .map(|(i, j, c)| (*i, *j, c.iter().map(|(k, s)| (*k, s.to_string())).collect()))
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&t).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("# algebra {}\n# basis {}\ni,j,k,coefficient\n", self.algebra, self.basis.join(" "));
        for (i, j, coeffs) in &self.entries {
            for (k, c) in coeffs {
                s.push_str(&format!("{i},{j},{k},{c}\n"));
            }
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    fn validated(self) -> Result<Self> {
        let n = self.dim();
        let bad = |m: String| Err(CliError::Format(m));
        for w in self.entries.windows(2) {
            if (w[0].0, w[0].1) >= (w[1].0, w[1].1) {
                return bad(format!("entries not strictly sorted at ({}, {})", w[1].0, w[1].1));
            }
        }
        for (i, j, coeffs) in &self.entries {
            if *i >= n || *j >= n {
                return bad(format!("index ({i}, {j}) out of range for dim {n}"));
            }
            if coeffs.is_empty() {
                return bad(format!("empty coefficient list at ({i}, {j})"));
            }
            for w in coeffs.windows(2) {
                if w[0].0 >= w[1].0 {
                    return bad(format!("coefficients at ({i}, {j}) not strictly sorted"));
                }
            }
            for (k, c) in coeffs {
                if *k >= n || c.is_zero() {
                    return bad(format!("bad coefficient {c} on {k} at ({i}, {j})"));
                }
            }
        }
        Ok(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let t: JsonTable = serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))?;
        if t.dim != t.basis.len() {
            return Err(CliError::Format(format!("dim {} but {} basis names", t.dim, t.basis.len())));
        }
        let entries = t
            .table
            .into_iter()
            .map(|(i, j, c)| {
                let coeffs = c.into_iter().map(|(k, s)| Ok((k, s.parse::<Scalar>()?))).collect::<Result<Vec<_>>>()?;
                Ok((i, j, coeffs))
            })
            .collect::<Result<Vec<_>>>()?;
        ScTable { algebra: t.algebra, basis: t.basis, entries }.validated()
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let mut header = |prefix: &str| {
            lines
                .next()
                .and_then(|l| l.strip_prefix(prefix))
                .map(str::to_string)
                .ok_or_else(|| CliError::Format(format!("missing `{prefix}` line")))
        };
        let algebra = header("# algebra ")?;
        let basis: Vec<String> = header("# basis ")?.split(' ').map(str::to_string).collect();
        if !header("i,j,k,coefficient")?.is_empty() {
            return Err(CliError::Format("bad column header".into()));
        }
        let mut entries: Vec<(usize, usize, Vec<(usize, Scalar)>)> = Vec::new();
        for (n, line) in lines.enumerate() {
            let fields: Vec<&str> = line.split(',').collect();
            let [i, j, k, c] = fields[..] else {
                return Err(CliError::Format(format!("row {} has {} fields", n + 1, fields.len())));
            };
            let idx = |s: &str| s.parse::<usize>().map_err(|_| CliError::Format(format!("bad index `{s}`")));
            let (i, j, k) = (idx(i)?, idx(j)?, idx(k)?);
            let c: Scalar = c.parse()?;
            match entries.last_mut() {
                Some(last) if (last.0, last.1) == (i, j) => last.2.push((k, c)),
                _ => entries.push((i, j, vec![(k, c)])),
            }
        }
        ScTable { algebra, basis, entries }.validated()
    }

    /// Reads either format.
    pub fn import(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_csv(text)
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Quat => "quat",
            Algebra::Oct => "oct",
            Algebra::Albert => "albert",
        })
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Cd => "cd",
            Basis::Vdbs => "vdbs",
        })
    }
}

pub fn build_table(algebra: Algebra, basis: Basis) -> Result<ScTable> {
    let label = format!("{algebra}/{basis}");
    let names = |list: &[&str]| list.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    Ok(match (algebra, basis) {
        (Algebra::Quat, Basis::Cd) => {
            let e: Vec<Quat> = (0..4).map(|n| Quat::from_ijk(&unit_vector(4, n))).collect();
            ScTable::from_products(&label, names(&CD_NAMES[..4]), |i, j| (&e[i] * &e[j]).ijk_coords().to_vec())
        }
        (Algebra::Oct, Basis::Cd) => {
            let e: Vec<Oct> = (0..8).map(Oct::cd_basis).collect();
            ScTable::from_products(&label, names(&CD_NAMES), |i, j| (&e[i] * &e[j]).cd_coords())
        }
        (Algebra::Oct, Basis::Vdbs) => {
            let b = vdbs_build()?;
            let products: Vec<Vec<Vector>> = (0..8)
                .map(|i| (0..8).map(|j| b.coords_of(&(b.get(i) * b.get(j)))).collect::<albert_core::Result<_>>())
                .collect::<albert_core::Result<_>>()?;
            ScTable::from_products(&label, names(&vdbs::NAMES), |i, j| products[i][j].clone())
        }
        (Algebra::Albert, Basis::Cd) => {
            let e: Vec<Vector> = (0..DIM).map(|n| AlbertElem::basis(n).coords()).collect();
            ScTable::from_products(&label, (0..DIM).map(AlbertElem::basis_name).collect(), |i, j| {
                albert::jordan_coords(&e[i], &e[j])
            })
        }
        (other, Basis::Vdbs) => return Err(CliError::InvalidCombination(format!("vdbs ({other})"))),
    })
}

/// Renders a table for the given algebra, basis and format.
pub fn dump_sc(algebra: Algebra, basis: Basis, format: Format) -> Result<String> {
    Ok(build_table(algebra, basis)?.render(format))
}
