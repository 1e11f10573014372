//! Dense exact linear algebra: Gaussian elimination with deterministic
//! pivoting (first nonzero in column order, scanning rows top-down), used
//! for antipode solving, map inversion and algebra-element inversion.

use crate::error::HopfError;
use crate::map::StructureMap;
use crate::scalar::{FieldSpec, Scalar};
use crate::sparse::SparseVec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one(field);
        }
        m
    }

    /// Matrix of a structure map on flattened indices: column `c` is the
    /// image of the `c`-th input basis vector.
    pub fn from_map(map: &StructureMap) -> Self {
        let mut m = Matrix::zero(map.field(), map.out_total(), map.in_total());
        for c in 0..map.in_total() {
            if let Some(row) = map.row(c) {
                for (r, x) in row.entries() {
                    *m.at_mut(r, c) = x.clone();
                }
            }
        }
        m
    }

    pub fn to_map(&self, in_dims: Vec<usize>, out_dims: Vec<usize>) -> StructureMap {
        let mut map = StructureMap::new(self.field, in_dims, out_dims);
        for c in 0..self.cols {
            let mut v = SparseVec::zero(self.rows);
            for r in 0..self.rows {
                v.add_entry(r, self.at(r, c).clone());
            }
            map.set_row(c, v);
        }
        map
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Solves `A x = b` for one exact solution, or `None` when inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &SparseVec) -> Result<Option<SparseVec>, HopfError> {
        if b.dim() != self.rows {
            return Err(HopfError::DimensionMismatch(format!(
                "solve: matrix has {} rows, rhs has dim {}",
                self.rows,
                b.dim()
            )));
        }
        let mut a = self.clone();
        let mut rhs: Vec<Scalar> = (0..self.rows)
            .map(|i| b.coeff(i).cloned().unwrap_or_else(|| Scalar::zero(self.field)))
            .collect();

        let mut pivot_col_of_row = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            // first nonzero in this column at or below `row`
            let Some(p) = (row..a.rows).find(|&r| !a.at(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(row, p);
            rhs.swap(row, p);
            let inv = a.at(row, col).inv()?;
            for c in col..a.cols {
                *a.at_mut(row, c) = a.at(row, c).mul(&inv);
            }
            rhs[row] = rhs[row].mul(&inv);
            for r in 0..a.rows {
                if r != row && !a.at(r, col).is_zero() {
                    let factor = a.at(r, col).clone();
                    for c in col..a.cols {
                        *a.at_mut(r, c) = a.at(r, c).sub(&factor.mul(a.at(row, c)));
                    }
                    rhs[r] = rhs[r].sub(&factor.mul(&rhs[row]));
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
            if row == a.rows {
                break;
            }
        }
        // consistency: zero rows must have zero rhs
        for r in row..a.rows {
            if !rhs[r].is_zero() {
                return Ok(None);
            }
        }
        let mut x = SparseVec::zero(self.cols);
        for (r, &col) in pivot_col_of_row.iter().enumerate() {
            x.add_entry(col, rhs[r].clone());
        }
        Ok(Some(x))
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.cols);
        let mut out = SparseVec::zero(self.rows);
        for (c, x) in v.entries() {
            for r in 0..self.rows {
                out.add_entry(r, self.at(r, c).mul(x));
            }
        }
        out
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix, HopfError> {
        if self.rows != self.cols {
            return Err(HopfError::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut inv = Matrix::zero(self.field, n, n);
        for c in 0..n {
            let e = SparseVec::basis(n, c, self.field);
            let col = self
                .solve(&e)?
                .ok_or_else(|| HopfError::NotInvertible(": singular matrix".into()))?;
            for (r, x) in col.entries() {
                *inv.at_mut(r, c) = x.clone();
            }
        }
        // solve() picks a solution; for square systems confirm it inverts
        for c in 0..n {
            let e = SparseVec::basis(n, c, self.field);
            if self.mul_vec(&inv.mul_vec(&e)) != e {
                return Err(HopfError::NotInvertible(": singular matrix".into()));
            }
        }
        Ok(inv)
    }
}

/// Solves the linear system given by a structure map viewed as a matrix.
pub fn solve_linear(a: &Matrix, b: &SparseVec) -> Result<Option<SparseVec>, HopfError> {
    a.solve(b)
}

/// Inverts a 1-leg-to-1-leg structure map; errors when singular.
pub fn invert_map(map: &StructureMap) -> Result<StructureMap, HopfError> {
    let inv = Matrix::from_map(map)
        .inverse()
        .map_err(|_| HopfError::SingularAntipode)?;
    Ok(inv.to_map(map.out_dims().to_vec(), map.in_dims().to_vec()))
}

/// Inverts an element of a finite-dimensional unital associative algebra:
/// solves `u * v = 1` by elimination, then checks `v * u = 1`.
pub fn invert_element(
    mult: &StructureMap,
    unit: &SparseVec,
    u: &SparseVec,
) -> Result<SparseVec, HopfError> {
    let n = unit.dim();
    if u.dim() != n {
        return Err(HopfError::DimensionMismatch("invert_element: wrong dimension".into()));
    }
    let field = mult.field();
    // left-multiplication by u as a matrix
    let mut l = Matrix::zero(field, n, n);
    for c in 0..n {
        let mut prod = SparseVec::zero(n);
        for (i, a) in u.entries() {
            let row = mult.apply_basis(i * n + c);
            for (j, x) in row.entries() {
                prod.add_entry(j, a.mul(x));
            }
        }
        for (r, x) in prod.entries() {
            *l.at_mut(r, c) = x.clone();
        }
    }
    let v = l
        .solve(unit)?
        .ok_or_else(|| HopfError::NotInvertible(": no right inverse".into()))?;
    // check the other side
    let mut vu = SparseVec::zero(n);
    for (i, a) in v.entries() {
        for (j, b) in u.entries() {
            let row = mult.apply_basis(i * n + j);
            for (k, x) in row.entries() {
                vu.add_entry(k, a.mul(b).mul(x));
            }
        }
    }
    if &vu != unit {
        return Err(HopfError::NotInvertible(": one-sided inverse only".into()));
    }
    Ok(v)
}
