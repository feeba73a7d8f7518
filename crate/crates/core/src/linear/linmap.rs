//! Matrices over an exact field, read as linear maps between coordinate
//! spaces. Tensor products use the row-major flat index: basis vector
//! `(i, j)` of `V (x) W` sits at `i * dim(W) + j`.

use crate::error::{Error, Result};

use super::field::Field;

/// A linear map `k^cols -> k^rows`; `data[r * cols + c]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinMap<F: Field> {
    pub field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> LinMap<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        LinMap {
            data: vec![field.zero(); rows * cols],
            field: field.clone(),
            rows,
            cols,
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Malformed(
                "matrix rows have different lengths".into(),
            ));
        }
        Ok(LinMap {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Row-major integer entries, reduced into the field.
    pub fn from_ints(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        LinMap {
            field: field.clone(),
            rows,
            cols,
            data: entries.iter().map(|&n| field.from_i64(n)).collect(),
        }
    }

    /// Map whose column `c` is `columns(c)`.
    pub fn from_columns(
        field: &F,
        rows: usize,
        cols: usize,
        column: impl Fn(usize) -> Vec<F::Elem>,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for c in 0..cols {
            let v = column(c);
            assert_eq!(v.len(), rows, "column length");
            for (r, x) in v.into_iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: F::Elem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<F::Elem> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    /// `self . other`.
    ///
    /// # Panics
    /// When the inner dimensions differ.
    pub fn compose(&self, other: &LinMap<F>) -> LinMap<F> {
        assert_eq!(
            self.cols, other.rows,
            "composing {}x{} after {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if f.is_zero(b) {
                        continue;
                    }
                    let i = r * out.cols + c;
                    out.data[i] = f.add(&out.data[i], &f.mul(a, b));
                }
            }
        }
        out
    }

    /// Composite of a path written outermost first.
    pub fn chain(maps: &[&LinMap<F>]) -> LinMap<F> {
        let (last, rest) = maps.split_last().expect("non-empty path");
        rest.iter()
            .rev()
            .fold((*last).clone(), |acc, m| m.compose(&acc))
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "vector length");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(f.zero(), |acc, c| {
                    f.add(&acc, &f.mul(self.get(r, c), &v[c]))
                })
            })
            .collect()
    }

    pub fn add(&self, other: &LinMap<F>) -> LinMap<F> {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "adding maps of different shapes"
        );
        let f = &self.field;
        LinMap {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &F::Elem) -> LinMap<F> {
        let f = &self.field;
        LinMap {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    /// Tensor product; `(f (x) g)(i*dim + j) = f(i) (x) g(j)`.
    pub fn kron(&self, other: &LinMap<F>) -> LinMap<F> {
        let f = &self.field;
        let (rows, cols) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(f, rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if f.is_zero(a) {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !f.is_zero(b) {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Tensor product of several maps, left to right.
    pub fn kron_all(maps: &[&LinMap<F>]) -> LinMap<F> {
        let (first, rest) = maps.split_first().expect("non-empty list");
        rest.iter().fold((*first).clone(), |acc, m| acc.kron(m))
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular or not square.
    pub fn inverse(&self) -> Option<LinMap<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut a = self.clone();
        let mut inv = Self::identity(f, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !f.is_zero(a.get(r, col)))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let s = f.inv(a.get(col, col))?;
            a.scale_row(col, &s);
            inv.scale_row(col, &s);
            for r in 0..n {
                if r != col && !f.is_zero(a.get(r, col)) {
                    let factor = f.neg(a.get(r, col));
                    a.add_row_multiple(r, col, &factor);
                    inv.add_row_multiple(r, col, &factor);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, i: usize, s: &F::Elem) {
        for c in 0..self.cols {
            let x = self.field.mul(self.get(i, c), s);
            self.set(i, c, x);
        }
    }

    /// `row_i += s * row_j`.
    fn add_row_multiple(&mut self, i: usize, j: usize, s: &F::Elem) {
        for c in 0..self.cols {
            let x = self
                .field
                .add(self.get(i, c), &self.field.mul(s, self.get(j, c)));
            self.set(i, c, x);
        }
    }

    /// Row-major text: one line per row, entries separated by spaces.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.field.format(self.get(r, c)))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Permutation of tensor factors: the map
/// `V_0 (x) ... (x) V_{n-1} -> V_{perm[0]} (x) ... (x) V_{perm[n-1]}`.
pub fn permute_factors<F: Field>(field: &F, dims: &[usize], perm: &[usize]) -> LinMap<F> {
    assert_eq!(dims.len(), perm.len(), "one index per factor");
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = LinMap::zeros(field, total, total);
    let mut idx = vec![0usize; dims.len()];
    for flat in 0..total {
        let mut rest = flat;
        for k in (0..dims.len()).rev() {
            idx[k] = rest % dims[k];
            rest /= dims[k];
        }
        let target = perm
            .iter()
            .zip(&out_dims)
            .fold(0, |acc, (&p, &d)| acc * d + idx[p]);
        m.set(target, flat, field.one());
    }
    m
}

/// `V (x) W -> W (x) V`.
pub fn swap<F: Field>(field: &F, dv: usize, dw: usize) -> LinMap<F> {
    permute_factors(field, &[dv, dw], &[1, 0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::field::{PrimeField, Rationals};

    #[test]
    fn kron_identities() {
        let f = Rationals;
        assert_eq!(
            LinMap::identity(&f, 2).kron(&LinMap::identity(&f, 3)),
            LinMap::identity(&f, 6)
        );
        let m = LinMap::from_ints(&f, 2, 3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(m.kron(&LinMap::identity(&f, 1)), m);
        assert_eq!(LinMap::identity(&f, 1).kron(&m), m);
    }

    #[test]
    fn flat_index_convention() {
        let f = PrimeField::new(5).unwrap();
        // e_1 (x) e_2 in k^2 (x) k^3 is e_{1*3+2}
        let a = LinMap::from_ints(&f, 2, 1, &[0, 1]);
        let b = LinMap::from_ints(&f, 3, 1, &[0, 0, 1]);
        let v = a.kron(&b);
        assert_eq!(v.column(0), vec![0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(3).unwrap();
        let m = LinMap::from_ints(&f, 2, 2, &[1, 1, 0, 2]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv), LinMap::identity(&f, 2));
        assert!(LinMap::from_ints(&f, 2, 2, &[1, 2, 2, 1])
            .inverse()
            .is_none());
    }

    #[test]
    fn swap_squares_to_identity() {
        let f = Rationals;
        let s = swap(&f, 2, 3);
        assert_eq!(swap(&f, 3, 2).compose(&s), LinMap::identity(&f, 6));
        let a = LinMap::from_ints(&f, 2, 2, &[1, 2, 3, 4]);
        let b = LinMap::from_ints(&f, 3, 3, &[1, 0, 0, 5, 1, 0, 0, 7, 1]);
        assert_eq!(s.compose(&a.kron(&b)), b.kron(&a).compose(&s));
    }
}
