//! Exact sparse row reduction over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Rational;

pub type SparseRow = BTreeMap<usize, Rational>;

/// A subspace of `Q^N` kept in reduced row echelon form.
///
/// Each stored row has a leading one at its pivot column and zeros at every
/// other pivot column, so the stored basis is unique for a given subspace.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    rows: BTreeMap<usize, SparseRow>,
}

fn axpy(target: &mut SparseRow, factor: &Rational, source: &SparseRow) {
    for (&col, v) in source {
        let delta = factor * v;
        match target.get_mut(&col) {
            Some(t) => {
                *t += delta;
                if t.is_zero() {
                    target.remove(&col);
                }
            }
            None => {
                target.insert(col, delta);
            }
        }
    }
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseRow> {
        self.rows.get(&pivot)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseRow)> {
        self.rows.iter().map(|(&p, r)| (p, r))
    }

    /// Remainder of `row` after clearing every pivot column.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        let mut out = row.clone();
        for (col, coeff) in row {
            if let Some(basis) = self.rows.get(col) {
                axpy(&mut out, &-coeff.clone(), basis);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Add `row` to the span; returns the new pivot if the rank grew.
    pub fn insert(&mut self, row: &SparseRow) -> Option<usize> {
        let mut r = self.reduce(row);
        let (&pivot, lead) = r.iter().next()?;
        let inv = Rational::one() / lead.clone();
        for v in r.values_mut() {
            *v *= &inv;
        }
        for existing in self.rows.values_mut() {
            if let Some(c) = existing.get(&pivot).cloned() {
                axpy(existing, &-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        Some(pivot)
    }

    /// Whether the unit vector `e_col` lies in the span.
    pub fn contains_unit(&self, col: usize) -> bool {
        self.rows.get(&col).is_some_and(|r| r.len() == 1)
    }

    /// Basis of `{v : row·v = 0 for every row}` in `Q^ncols`.
    pub fn kernel_basis(&self, ncols: usize) -> Vec<SparseRow> {
        let mut out = Vec::new();
        for free in (0..ncols).filter(|c| !self.rows.contains_key(c)) {
            let mut v = SparseRow::new();
            v.insert(free, Rational::one());
            for (&p, r) in &self.rows {
                if let Some(c) = r.get(&free) {
                    v.insert(p, -c.clone());
                }
            }
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries
            .iter()
            .map(|&(c, v)| (c, Rational::from_integer(v.into())))
            .collect()
    }

    #[test]
    fn rref_is_canonical_under_insertion_order() {
        let vs = [
            row(&[(0, 1), (1, 2)]),
            row(&[(1, 1), (2, 1)]),
            row(&[(0, 1), (2, -2)]),
        ];
        let mut a = RowSpace::new();
        for v in &vs {
            a.insert(v);
        }
        let mut b = RowSpace::new();
        for v in vs.iter().rev() {
            b.insert(v);
        }
        assert_eq!(a.rank(), 2);
        let ra: Vec<_> = a.rows().map(|(p, r)| (p, r.clone())).collect();
        let rb: Vec<_> = b.rows().map(|(p, r)| (p, r.clone())).collect();
        assert_eq!(ra, rb);
    }

    #[test]
    fn kernel_is_orthogonal_to_rows() {
        let mut s = RowSpace::new();
        s.insert(&row(&[(0, 1), (1, -1)]));
        s.insert(&row(&[(1, 2), (3, 4)]));
        let ker = s.kernel_basis(4);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for (_, r) in s.rows() {
                let dot: Rational = r
                    .iter()
                    .map(|(c, a)| a * v.get(c).cloned().unwrap_or_else(Rational::zero))
                    .sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn unit_membership() {
        let mut s = RowSpace::new();
        s.insert(&row(&[(0, 1), (1, 1)]));
        assert!(!s.contains_unit(0));
        s.insert(&row(&[(1, 1)]));
        assert!(s.contains_unit(0));
        assert!(s.contains_unit(1));
        assert!(s.contains(&row(&[(0, 5), (1, 7)])));
        assert!(!s.contains(&row(&[(2, 1)])));
    }
}
