//! Finite-dimensional Lie algebras given by structure constants.

use serde_json::{json, Value};

use crate::echelon::{kernel, Echelon, SparseVec};
use crate::error::{Error, Result};
use crate::scalars::{find_roots, Rational, Scalar, UniPoly};

pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// `table[i][j]` holds the coordinates of `[e_i, e_j]`.
    table: Vec<Vec<Vector>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub value: Vector,
}

impl LieAlgebra {
    /// `brackets` lists `[e_i, e_j]` for some pairs; the rest follow from
    /// antisymmetry or are zero.
    pub fn new(names: Vec<String>, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let d = names.len();
        for (i, n) in names.iter().enumerate() {
            if !crate::freealg::is_identifier(n) || names[..i].contains(n) {
                return Err(Error::InvalidParameter(format!(
                    "bad or duplicate basis name '{n}'"
                )));
            }
        }
        let zero = vec![Scalar::zero(); d];
        let mut table = vec![vec![zero.clone(); d]; d];
        let mut set = vec![vec![false; d]; d];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= d || j >= d || v.len() != d {
                return Err(Error::InvalidParameter(format!(
                    "bracket [{i},{j}] out of range"
                )));
            }
            if i == j {
                if v.iter().any(|c| !c.is_zero()) {
                    return Err(Error::InvalidParameter(format!("[e{i}, e{i}] must vanish")));
                }
                continue;
            }
            if set[i][j] {
                return Err(Error::InvalidParameter(format!(
                    "bracket [{i},{j}] given twice"
                )));
            }
            set[i][j] = true;
            set[j][i] = true;
            table[i][j] = v.clone();
            table[j][i] = v.iter().map(|c| -c).collect();
        }
        Ok(LieAlgebra { names, table })
    }

    fn ints(v: &[i64]) -> Vector {
        v.iter().map(|&c| Scalar::from_int(c)).collect()
    }

    /// sl2 with basis h, e, f: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let names = ["h", "e", "f"].map(String::from).to_vec();
        Self::new(
            names,
            &[
                (0, 1, Self::ints(&[0, 2, 0])),
                (0, 2, Self::ints(&[0, 0, -2])),
                (1, 2, Self::ints(&[1, 0, 0])),
            ],
        )
        .expect("valid constants")
    }

    /// Heisenberg Lie algebra: `[x,y] = z`, `z` central.
    pub fn heisenberg() -> Self {
        let names = ["x", "y", "z"].map(String::from).to_vec();
        Self::new(names, &[(0, 1, Self::ints(&[0, 0, 1]))]).expect("valid constants")
    }

    pub fn abelian(d: usize) -> Self {
        let names = (0..d).map(|i| format!("a{i}")).collect();
        Self::new(names, &[]).expect("valid constants")
    }

    /// Two-dimensional non-abelian algebra `[x,y] = y`.
    pub fn affine_line() -> Self {
        let names = ["x", "y"].map(String::from).to_vec();
        Self::new(names, &[(0, 1, Self::ints(&[0, 1]))]).expect("valid constants")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    /// `None` for Q, else the quadratic field of the constants.
    pub fn field(&self) -> Option<i64> {
        self.table
            .iter()
            .flatten()
            .flatten()
            .find_map(Scalar::field)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, ui) in u.iter().enumerate().take(d) {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate().take(d) {
                if vj.is_zero() {
                    continue;
                }
                let c = ui.try_mul(vj)?;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = o.try_add(&c.try_mul(t)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x`, `m[k][j]` the `e_k` coordinate of `[x, e_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        let d = self.dim();
        let mut m = vec![vec![Scalar::zero(); d]; d];
        for j in 0..d {
            let col = self.bracket(x, &self.basis_vector(j))?;
            for (row, c) in m.iter_mut().zip(col) {
                row[j] = c;
            }
        }
        Ok(m)
    }

    /// Violations of the Jacobi identity on basis triples `i < j < k`.
    pub fn jacobi_check(&self) -> Result<Vec<JacobiViolation>> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (x, y, z) = (
                        self.basis_vector(i),
                        self.basis_vector(j),
                        self.basis_vector(k),
                    );
                    let a = self.bracket(&x, &self.bracket(&y, &z)?)?;
                    let b = self.bracket(&y, &self.bracket(&z, &x)?)?;
                    let c = self.bracket(&z, &self.bracket(&x, &y)?)?;
                    let s: Vector = a
                        .iter()
                        .zip(&b)
                        .zip(&c)
                        .map(|((a, b), c)| a + b + c.clone())
                        .collect();
                    if s.iter().any(|c| !c.is_zero()) {
                        out.push(JacobiViolation {
                            triple: (i, j, k),
                            value: s,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    fn to_sparse(v: &[Scalar]) -> SparseVec<usize> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    fn to_dense(&self, v: &SparseVec<usize>) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, c) in v {
            out[*i] = c.clone();
        }
        out
    }

    /// Dimensions of `L ⊇ [L,L] ⊇ [L,[L,L]] ⊇ ...`, stopping at 0 or at
    /// the first repeated dimension.
    pub fn lower_central_series(&self) -> Result<Vec<usize>> {
        let d = self.dim();
        let mut dims = vec![d];
        let mut current: Vec<Vector> = (0..d).map(|i| self.basis_vector(i)).collect();
        while !current.is_empty() {
            let mut ech = Echelon::new();
            for i in 0..d {
                for v in &current {
                    ech.insert(Self::to_sparse(&self.bracket(&self.basis_vector(i), v)?))?;
                }
            }
            let next: Vec<Vector> = ech.rows().map(|r| self.to_dense(r)).collect();
            let repeated = next.len() == current.len();
            dims.push(next.len());
            if repeated {
                break;
            }
            current = next;
        }
        Ok(dims)
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.lower_central_series()?.last() == Some(&0))
    }

    /// Basis of the centre in reduced echelon form.
    pub fn center(&self) -> Result<Vec<Vector>> {
        let d = self.dim();
        let cols: Vec<SparseVec<(usize, usize)>> = (0..d)
            .map(|j| {
                let mut col = SparseVec::new();
                for i in 0..d {
                    for (k, c) in self.table[i][j].iter().enumerate() {
                        if !c.is_zero() {
                            col.insert((i, k), c.clone());
                        }
                    }
                }
                col
            })
            .collect();
        Ok(kernel(&cols)?.iter().map(|v| self.to_dense(v)).collect())
    }

    /// A pair spanning a two-dimensional subalgebra.
    ///
    /// Nilpotent algebras give (first centre vector, first basis vector
    /// outside its span). Otherwise the witnesses `e_i`, then `e_i ± e_j`,
    /// are searched for a non-nilpotent `ad x`, and `(x, v)` is returned
    /// with `v` an eigenvector for the preferred nonzero eigenvalue.
    pub fn two_dim_subalgebra(&self) -> Result<(Vector, Vector)> {
        let d = self.dim();
        if d < 2 {
            return Err(Error::InvalidParameter("need dimension at least 2".into()));
        }
        let (u, v) = if self.is_nilpotent()? {
            let z = self.center()?.into_iter().next().ok_or_else(|| {
                Error::Falsification("nilpotent Lie algebra with trivial centre".into())
            })?;
            let mut ech = Echelon::new();
            ech.insert(Self::to_sparse(&z))?;
            let v = (0..d)
                .map(|i| self.basis_vector(i))
                .find(|b| !ech.contains(&Self::to_sparse(b)).unwrap_or(true))
                .expect("dimension at least 2");
            (z, v)
        } else {
            self.eigen_pair()?
        };
        self.check_closed(&u, &v)?;
        Ok((u, v))
    }

    fn witnesses(&self) -> Vec<Vector> {
        let d = self.dim();
        let mut out: Vec<Vector> = (0..d).map(|i| self.basis_vector(i)).collect();
        for i in 0..d {
            for j in i + 1..d {
                for sign in [1, -1] {
                    let mut v = self.basis_vector(i);
                    v[j] = Scalar::from_int(sign);
                    out.push(v);
                }
            }
        }
        out
    }

    fn eigen_pair(&self) -> Result<(Vector, Vector)> {
        let mut last_err = None;
        for x in self.witnesses() {
            let a = self.ad(&x)?;
            if is_nilpotent_matrix(&a)? {
                continue;
            }
            let p = charpoly(&a)?;
            let lambda = match find_roots(&p) {
                Ok(roots) => roots.into_iter().find(|r| !r.is_zero()),
                Err(e @ Error::ResidualDegreeTooHigh(_)) => {
                    last_err = Some(e);
                    continue;
                }
                Err(e) => return Err(e),
            };
            let Some(lambda) = lambda else {
                last_err = Some(Error::ResidualDegreeTooHigh(p));
                continue;
            };
            let d = self.dim();
            let cols: Vec<SparseVec<usize>> = (0..d)
                .map(|j| {
                    let mut col: Vector = (0..d).map(|k| a[k][j].clone()).collect();
                    col[j] = col[j].try_sub(&lambda)?;
                    Ok(Self::to_sparse(&col))
                })
                .collect::<Result<_>>()?;
            let v = kernel(&cols)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::Falsification("eigenvalue without eigenvector".into()))?;
            return Ok((x, self.to_dense(&v)));
        }
        Err(last_err.unwrap_or(Error::NoWitness))
    }

    fn check_closed(&self, u: &[Scalar], v: &[Scalar]) -> Result<()> {
        let mut ech = Echelon::new();
        let pu = ech.insert(Self::to_sparse(u))?;
        let pv = ech.insert(Self::to_sparse(v))?;
        if pu.is_none() || pv.is_none() {
            return Err(Error::Falsification("subalgebra pair is dependent".into()));
        }
        if !ech.contains(&Self::to_sparse(&self.bracket(u, v)?))? {
            return Err(Error::Falsification(
                "subalgebra pair is not bracket-closed".into(),
            ));
        }
        Ok(())
    }

    /// Restriction to the span of `u, v` as a two-dimensional algebra
    /// with basis names `names`.
    pub fn subalgebra(&self, u: &[Scalar], v: &[Scalar], names: [&str; 2]) -> Result<LieAlgebra> {
        self.check_closed(u, v)?;
        let w = self.bracket(u, v)?;
        // solve w = a u + b v on a pivot pair
        let d = self.dim();
        let (mut a, mut b) = (None, None);
        'outer: for i in 0..d {
            for j in 0..d {
                let det = u[i].try_mul(&v[j])?.try_sub(&u[j].try_mul(&v[i])?)?;
                if !det.is_zero() {
                    a = Some(
                        w[i].try_mul(&v[j])?
                            .try_sub(&w[j].try_mul(&v[i])?)?
                            .try_div(&det)?,
                    );
                    b = Some(
                        u[i].try_mul(&w[j])?
                            .try_sub(&u[j].try_mul(&w[i])?)?
                            .try_div(&det)?,
                    );
                    break 'outer;
                }
            }
        }
        let (a, b) = (a.unwrap(), b.unwrap());
        LieAlgebra::new(names.map(String::from).to_vec(), &[(0, 1, vec![a, b])])
    }

    pub fn fmt_vector(&self, v: &[Scalar]) -> String {
        let terms: std::collections::BTreeMap<usize, Scalar> = Self::to_sparse(v);
        crate::freealg::fmt_terms(terms.iter(), "*", |i| self.names[*i].clone())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Value = serde_json::from_str(text)?;
        let bad = |m: &str| Error::InvalidParameter(format!("Lie algebra file: {m}"));
        let dim = doc["dim"].as_u64().ok_or_else(|| bad("missing dim"))? as usize;
        let names: Vec<String> = match doc.get("names") {
            Some(Value::Array(a)) => a
                .iter()
                .map(|n| {
                    n.as_str()
                        .map(String::from)
                        .ok_or_else(|| bad("names must be strings"))
                })
                .collect::<Result<_>>()?,
            None => (0..dim).map(|i| format!("e{i}")).collect(),
            _ => return Err(bad("names must be an array")),
        };
        if names.len() != dim {
            return Err(bad("names length differs from dim"));
        }
        let mut brackets = Vec::new();
        for entry in doc["brackets"]
            .as_array()
            .ok_or_else(|| bad("missing brackets"))?
        {
            let arr = entry
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| bad("bracket entries are [i, j, coeffs]"))?;
            let i = arr[0].as_u64().ok_or_else(|| bad("index"))? as usize;
            let j = arr[1].as_u64().ok_or_else(|| bad("index"))? as usize;
            let coeffs = arr[2]
                .as_array()
                .ok_or_else(|| bad("coefficients must be an array"))?
                .iter()
                .map(json_scalar)
                .collect::<Result<Vector>>()?;
            brackets.push((i, j, coeffs));
        }
        LieAlgebra::new(names, &brackets)
    }

    pub fn to_json(&self) -> Value {
        let d = self.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if self.table[i][j].iter().any(|c| !c.is_zero()) {
                    let coeffs: Vec<Value> = self.table[i][j].iter().map(scalar_json).collect();
                    brackets.push(json!([i, j, coeffs]));
                }
            }
        }
        json!({"dim": d, "names": self.names, "brackets": brackets})
    }
}

pub(crate) fn json_scalar(v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::from_int)
            .ok_or_else(|| Error::InvalidParameter(format!("coefficient {n} is not an integer"))),
        Value::String(s) => s.parse(),
        _ => Err(Error::InvalidParameter(format!("bad coefficient {v}"))),
    }
}

pub(crate) fn scalar_json(c: &Scalar) -> Value {
    match c.to_i64() {
        Some(n) => json!(n),
        None => json!(c.to_string()),
    }
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].try_add(&a[i][k].try_mul(&b[k][j])?)?;
            }
        }
    }
    Ok(out)
}

fn is_nilpotent_matrix(a: &[Vec<Scalar>]) -> Result<bool> {
    let mut p = a.to_vec();
    for _ in 1..a.len() {
        p = mat_mul(&p, a)?;
    }
    Ok(p.iter().flatten().all(Scalar::is_zero))
}

/// `det(sI - A)` by the Faddeev-LeVerrier recursion.
pub fn charpoly(a: &[Vec<Scalar>]) -> Result<UniPoly> {
    let n = a.len();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &m)?;
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].try_add(&coeffs[n - k + 1])?;
        }
        let am = mat_mul(a, &next)?;
        let mut tr = Scalar::zero();
        for (i, row) in am.iter().enumerate() {
            tr = tr.try_add(&row[i])?;
        }
        coeffs[n - k] = -tr.try_div(&Scalar::from_int(k as i64))?;
        m = next;
    }
    let rat: Vec<Rational> = coeffs
        .iter()
        .map(|c| {
            c.as_rational()
                .cloned()
                .ok_or_else(|| Error::Unsupported("characteristic polynomial outside Q".into()))
        })
        .collect::<Result<_>>()?;
    Ok(UniPoly::new(rat))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_examples() {
        assert!(LieAlgebra::sl2().jacobi_check().unwrap().is_empty());
        assert!(LieAlgebra::heisenberg().jacobi_check().unwrap().is_empty());
        let ints = LieAlgebra::ints;
        let bad = LieAlgebra::new(
            ["h", "e", "f"].map(String::from).to_vec(),
            &[
                (0, 1, ints(&[0, 2, 0])),
                (0, 2, ints(&[0, 0, -2])),
                (1, 2, ints(&[0, 1, 0])),
            ],
        )
        .unwrap();
        assert!(!bad.jacobi_check().unwrap().is_empty());
    }

    #[test]
    fn lower_central_series_examples() {
        assert_eq!(
            LieAlgebra::heisenberg().lower_central_series().unwrap(),
            vec![3, 1, 0]
        );
        assert_eq!(
            LieAlgebra::sl2().lower_central_series().unwrap(),
            vec![3, 3]
        );
        assert_eq!(
            LieAlgebra::abelian(2).lower_central_series().unwrap(),
            vec![2, 0]
        );
        assert_eq!(
            LieAlgebra::affine_line().lower_central_series().unwrap(),
            vec![2, 1, 1]
        );
    }

    #[test]
    fn two_dim_subalgebra_examples() {
        let sl2 = LieAlgebra::sl2();
        let (u, v) = sl2.two_dim_subalgebra().unwrap();
        assert_eq!(sl2.fmt_vector(&u), "h");
        assert_eq!(sl2.fmt_vector(&v), "e");
        let heis = LieAlgebra::heisenberg();
        let (u, v) = heis.two_dim_subalgebra().unwrap();
        assert_eq!(
            (heis.fmt_vector(&u), heis.fmt_vector(&v)),
            ("z".into(), "x".into())
        );
        let aff = LieAlgebra::affine_line();
        let (u, v) = aff.two_dim_subalgebra().unwrap();
        assert_eq!(
            (aff.fmt_vector(&u), aff.fmt_vector(&v)),
            ("x".into(), "y".into())
        );
    }

    #[test]
    fn rotation_algebra_needs_quadratic_eigenvalue() {
        // so(3): [a,b]=c, [b,c]=a, [c,a]=b; ad a has eigenvalues 0, ±i
        let ints = LieAlgebra::ints;
        let so3 = LieAlgebra::new(
            ["a", "b", "c"].map(String::from).to_vec(),
            &[
                (0, 1, ints(&[0, 0, 1])),
                (1, 2, ints(&[1, 0, 0])),
                (2, 0, ints(&[0, 1, 0])),
            ],
        )
        .unwrap();
        assert!(so3.jacobi_check().unwrap().is_empty());
        let (u, v) = so3.two_dim_subalgebra().unwrap();
        let w = so3.bracket(&u, &v).unwrap();
        let lambda = w
            .iter()
            .zip(&v)
            .find(|(_, c)| !c.is_zero())
            .map(|(a, b)| a / b)
            .unwrap();
        assert_eq!(lambda.field(), Some(-1));
    }

    #[test]
    fn charpoly_of_ad_h() {
        let sl2 = LieAlgebra::sl2();
        let p = charpoly(&sl2.ad(&sl2.basis_vector(0)).unwrap()).unwrap();
        assert_eq!(p, UniPoly::from_ints(&[0, -4, 0, 1]));
    }

    #[test]
    fn json_round_trip() {
        let sl2 = LieAlgebra::sl2();
        let back = LieAlgebra::from_json(&sl2.to_json().to_string()).unwrap();
        assert_eq!(back, sl2);
    }
}
