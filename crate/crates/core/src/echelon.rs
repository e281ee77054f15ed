//! Exact sparse row echelon over the scalar field.
//!
//! Vectors are maps from an ordered key to a scalar. Each stored row is
//! monic with a distinct pivot, the pivot being the row's largest key.
//! Reduction only cancels leading terms, which is enough to decide
//! membership and independence; [`Echelon::reduced_rows`] gives fully
//! reduced rows when a canonical basis is needed.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::scalars::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

#[derive(Clone, Debug)]
struct Row<K> {
    vec: SparseVec<K>,
    /// Coefficients of inputs whose combination is this row.
    combo: SparseVec<usize>,
}

#[derive(Clone, Debug)]
pub enum Insertion<K> {
    /// The vector was independent; its reduced form now has this pivot.
    New(K),
    /// The vector was dependent; `Σ c_j v_j = 0` over the tracked inputs,
    /// the just inserted one having coefficient 1.
    Dependent(SparseVec<usize>),
}

#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, Row<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

pub fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Scalar, x: &SparseVec<K>) -> Result<()> {
    for (k, v) in x {
        let d = a.try_mul(v)?;
        match y.entry(k.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !d.is_zero() {
                    e.insert(d);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().try_add(&d)?;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
    Ok(())
}

fn scale<K: Ord + Clone>(x: &mut SparseVec<K>, a: &Scalar) -> Result<()> {
    for v in x.values_mut() {
        *v = v.try_mul(a)?;
    }
    Ok(())
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn has_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    fn reduce_inner(
        &self,
        mut v: SparseVec<K>,
        mut combo: Option<&mut SparseVec<usize>>,
    ) -> Result<SparseVec<K>> {
        loop {
            let Some((lead, c)) = v.iter().next_back() else {
                return Ok(v);
            };
            let Some(row) = self.rows.get(lead) else {
                return Ok(v);
            };
            let a = -c;
            axpy(&mut v, &a, &row.vec)?;
            if let Some(cb) = combo.as_deref_mut() {
                axpy(cb, &a, &row.combo)?;
            }
        }
    }

    /// Leading-term reduction; zero iff `v` lies in the span.
    pub fn reduce(&self, v: SparseVec<K>) -> Result<SparseVec<K>> {
        self.reduce_inner(v, None)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> Result<bool> {
        Ok(self.reduce(v.clone())?.is_empty())
    }

    /// Inserts `v`; returns the new pivot or `None` if dependent.
    pub fn insert(&mut self, v: SparseVec<K>) -> Result<Option<K>> {
        let r = self.reduce(v)?;
        self.push_reduced(r, SparseVec::new())
    }

    /// Inserts `v` as input number `id`, tracking combinations.
    pub fn insert_tracked(&mut self, v: SparseVec<K>, id: usize) -> Result<Insertion<K>> {
        let mut combo = SparseVec::new();
        combo.insert(id, Scalar::one());
        let r = self.reduce_inner(v, Some(&mut combo))?;
        if r.is_empty() {
            return Ok(Insertion::Dependent(combo));
        }
        let pivot = self.push_reduced(r, combo)?.expect("nonzero remainder");
        Ok(Insertion::New(pivot))
    }

    fn push_reduced(
        &mut self,
        mut r: SparseVec<K>,
        mut combo: SparseVec<usize>,
    ) -> Result<Option<K>> {
        let Some((lead, c)) = r.iter().next_back() else {
            return Ok(None);
        };
        let lead = lead.clone();
        let inv = c.inv()?;
        scale(&mut r, &inv)?;
        scale(&mut combo, &inv)?;
        self.rows.insert(lead.clone(), Row { vec: r, combo });
        Ok(Some(lead))
    }

    /// Rows in ascending pivot order, each reduced against all others
    /// (reduced row echelon form).
    pub fn reduced_rows(&self) -> Result<Vec<SparseVec<K>>> {
        let mut done: BTreeMap<K, SparseVec<K>> = BTreeMap::new();
        for (pivot, row) in &self.rows {
            let mut v = row.vec.clone();
            let tail: Vec<K> = v.keys().filter(|k| *k != pivot).cloned().collect();
            for k in tail.into_iter().rev() {
                if let (Some(c), Some(r)) = (v.get(&k).cloned(), done.get(&k)) {
                    axpy(&mut v, &-c, r)?;
                }
            }
            done.insert(pivot.clone(), v);
        }
        Ok(done.into_values().collect())
    }

    /// Stored rows in ascending pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values().map(|r| &r.vec)
    }
}

/// Basis of the kernel of `i -> columns[i]`, as coefficient vectors over
/// column indices, in reduced echelon form with pivots on the largest
/// column index.
pub fn kernel<K: Ord + Clone>(columns: &[SparseVec<K>]) -> Result<Vec<SparseVec<usize>>> {
    let mut ech = Echelon::new();
    let mut rels = Echelon::new();
    for (i, c) in columns.iter().enumerate() {
        if let Insertion::Dependent(combo) = ech.insert_tracked(c.clone(), i)? {
            rels.insert(combo)?;
        }
    }
    rels.reduced_rows()
}
