//! Sparse exact vectors and tensors.
//!
//! A `SparseVec` is an element of a based vector space with the basis
//! indexed `0..dim`; a `Tensor` is an element of a tensor product of based
//! spaces with one index per leg. The two views are interchangeable through
//! the global row-major flattening convention: the tuple `(i1, ..., in)`
//! flattens to `i1*(d2*...*dn) + ... + in`.

use std::collections::BTreeMap;

use crate::scalar::{FieldSpec, Scalar};

/// Row-major flattening of an index tuple.
pub fn flatten_index(dims: &[usize], tuple: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), tuple.len());
    let mut idx = 0;
    for (d, i) in dims.iter().zip(tuple) {
        debug_assert!(i < d);
        idx = idx * d + i;
    }
    idx
}

/// Inverse of [`flatten_index`].
pub fn unflatten_index(dims: &[usize], mut idx: usize) -> Vec<usize> {
    let mut tuple = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        tuple[k] = idx % dims[k];
        idx /= dims[k];
    }
    debug_assert_eq!(idx, 0);
    tuple
}

/// Total dimension of a tensor product space.
pub fn total_dim(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// A sparse vector: finite map basis-index -> nonzero scalar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVec {
    dim: usize,
    entries: BTreeMap<usize, Scalar>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec { dim, entries: BTreeMap::new() }
    }

    pub fn basis(dim: usize, index: usize, field: FieldSpec) -> Self {
        let mut v = SparseVec::zero(dim);
        v.add_entry(index, Scalar::one(field));
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn coeff(&self, index: usize) -> Option<&Scalar> {
        self.entries.get(&index)
    }

    /// Accumulates `c` at `index`, pruning the entry when it cancels to zero.
    pub fn add_entry(&mut self, index: usize, c: Scalar) {
        assert!(index < self.dim, "index {} out of range {}", index, self.dim);
        if c.is_zero() {
            return;
        }
        match self.entries.remove(&index) {
            None => {
                self.entries.insert(index, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.entries.insert(index, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (i, c) in other.entries() {
            out.add_entry(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (i, c) in other.entries() {
            out.add_entry(i, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        let mut out = SparseVec::zero(self.dim);
        for (i, x) in self.entries() {
            out.add_entry(i, x.mul(c));
        }
        out
    }

    /// Leg-structured view of this vector over the given dims.
    pub fn to_tensor(&self, dims: &[usize]) -> Tensor {
        assert_eq!(total_dim(dims), self.dim);
        let mut t = Tensor::zero(dims.to_vec());
        for (i, c) in self.entries() {
            t.add_entry(unflatten_index(dims, i), c.clone());
        }
        t
    }
}

/// A sparse element of a tensor product of based spaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    dims: Vec<usize>,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn zero(dims: Vec<usize>) -> Self {
        Tensor { dims, entries: BTreeMap::new() }
    }

    pub fn basis(dims: Vec<usize>, tuple: Vec<usize>, field: FieldSpec) -> Self {
        let mut t = Tensor::zero(dims);
        t.add_entry(tuple, Scalar::one(field));
        t
    }

    /// The scalar line, viewed as an empty tensor product.
    pub fn scalar(field: FieldSpec, c: Scalar) -> Self {
        let mut t = Tensor::zero(vec![]);
        let _ = field;
        t.add_entry(vec![], c);
        t
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.entries.iter()
    }

    pub fn add_entry(&mut self, tuple: Vec<usize>, c: Scalar) {
        assert_eq!(tuple.len(), self.dims.len());
        if c.is_zero() {
            return;
        }
        match self.entries.remove(&tuple) {
            None => {
                self.entries.insert(tuple, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.entries.insert(tuple, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims);
        let mut out = self.clone();
        for (t, c) in other.entries() {
            out.add_entry(t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims);
        let mut out = self.clone();
        for (t, c) in other.entries() {
            out.add_entry(t.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.dims.clone());
        for (t, x) in self.entries() {
            out.add_entry(t.clone(), x.mul(c));
        }
        out
    }

    /// Outer (tensor) product; arities add.
    pub fn tensor(&self, other: &Tensor) -> Tensor {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut out = Tensor::zero(dims);
        for (t, c) in self.entries() {
            for (u, d) in other.entries() {
                let mut key = t.clone();
                key.extend_from_slice(u);
                out.add_entry(key, c.mul(d));
            }
        }
        out
    }

    /// Reorders legs: new leg `j` is old leg `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.dims.len());
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Tensor::zero(dims);
        for (t, c) in self.entries() {
            let key: Vec<usize> = perm.iter().map(|&p| t[p]).collect();
            out.add_entry(key, c.clone());
        }
        out
    }

    pub fn flatten(&self) -> SparseVec {
        let mut v = SparseVec::zero(total_dim(&self.dims));
        for (t, c) in self.entries() {
            v.add_entry(flatten_index(&self.dims, t), c.clone());
        }
        v
    }

    /// The coefficient of a 0-leg tensor, if this is one.
    pub fn as_scalar(&self, field: FieldSpec) -> Scalar {
        assert!(self.dims.is_empty());
        self.entries
            .get(&vec![])
            .cloned()
            .unwrap_or_else(|| Scalar::zero(field))
    }
}
