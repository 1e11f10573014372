//! Linear maps between tensor powers of based spaces, stored as sparse
//! structure constants: for every input basis tuple, the image vector.
//!
//! Linearity is by construction. Index tuples flatten row-major (see
//! [`crate::sparse::flatten_index`]); every module in the crate uses that
//! one convention for leg bookkeeping.

use std::collections::BTreeMap;

use crate::error::HopfError;
use crate::scalar::FieldSpec;
use crate::sparse::{flatten_index, total_dim, unflatten_index, SparseVec, Tensor};

#[derive(Clone, Debug)]
pub struct StructureMap {
    field: FieldSpec,
    in_dims: Vec<usize>,
    out_dims: Vec<usize>,
    /// Flattened input index -> image. Absent rows are zero.
    table: BTreeMap<usize, SparseVec>,
}

impl PartialEq for StructureMap {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.equal_tables(other)
    }
}

impl Eq for StructureMap {}

impl StructureMap {
    pub fn new(field: FieldSpec, in_dims: Vec<usize>, out_dims: Vec<usize>) -> Self {
        StructureMap { field, in_dims, out_dims, table: BTreeMap::new() }
    }

    /// Defines the map on every basis tuple of the input space.
    pub fn from_fn(
        field: FieldSpec,
        in_dims: Vec<usize>,
        out_dims: Vec<usize>,
        mut f: impl FnMut(&[usize]) -> Tensor,
    ) -> Self {
        let mut map = StructureMap::new(field, in_dims.clone(), out_dims.clone());
        for flat in 0..total_dim(&in_dims) {
            let tuple = unflatten_index(&in_dims, flat);
            let image = f(&tuple);
            assert_eq!(image.dims(), &out_dims[..], "from_fn image has wrong legs");
            map.set_row(flat, image.flatten());
        }
        map
    }

    pub fn identity(field: FieldSpec, dims: Vec<usize>) -> Self {
        let n = total_dim(&dims);
        let mut map = StructureMap::new(field, dims.clone(), dims);
        for i in 0..n {
            map.set_row(i, SparseVec::basis(n, i, field));
        }
        map
    }

    /// The map permuting legs: basis tuple `t` maps to `u` with
    /// `u[j] = t[perm[j]]`, coefficient 1.
    pub fn leg_permute(
        field: FieldSpec,
        dims: &[usize],
        perm: &[usize],
    ) -> Result<Self, HopfError> {
        let n = dims.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(HopfError::InvalidPermutation(perm.to_vec()));
        }
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let out_total = total_dim(&out_dims);
        let mut map = StructureMap::new(field, dims.to_vec(), out_dims.clone());
        for flat in 0..total_dim(dims) {
            let t = unflatten_index(dims, flat);
            let u: Vec<usize> = perm.iter().map(|&p| t[p]).collect();
            map.set_row(flat, SparseVec::basis(out_total, flatten_index(&out_dims, &u), field));
        }
        Ok(map)
    }

    /// The flip on two legs of equal or different dimension.
    pub fn flip(field: FieldSpec, d1: usize, d2: usize) -> Self {
        StructureMap::leg_permute(field, &[d1, d2], &[1, 0]).unwrap()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn out_dims(&self) -> &[usize] {
        &self.out_dims
    }

    pub fn in_arity(&self) -> usize {
        self.in_dims.len()
    }

    pub fn out_arity(&self) -> usize {
        self.out_dims.len()
    }

    pub fn in_total(&self) -> usize {
        total_dim(&self.in_dims)
    }

    pub fn out_total(&self) -> usize {
        total_dim(&self.out_dims)
    }

    pub fn set_row(&mut self, flat_in: usize, image: SparseVec) {
        assert!(flat_in < self.in_total());
        assert_eq!(image.dim(), self.out_total());
        if image.is_zero() {
            self.table.remove(&flat_in);
        } else {
            self.table.insert(flat_in, image);
        }
    }

    pub fn row(&self, flat_in: usize) -> Option<&SparseVec> {
        self.table.get(&flat_in)
    }

    pub fn apply_basis(&self, flat_in: usize) -> SparseVec {
        self.row(flat_in)
            .cloned()
            .unwrap_or_else(|| SparseVec::zero(self.out_total()))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.in_total());
        let mut out = SparseVec::zero(self.out_total());
        for (i, c) in v.entries() {
            if let Some(row) = self.row(i) {
                for (j, d) in row.entries() {
                    out.add_entry(j, c.mul(d));
                }
            }
        }
        out
    }

    /// Composition `self . g`: apply `g`, then `self`.
    pub fn compose(&self, g: &StructureMap) -> Result<StructureMap, HopfError> {
        if g.out_dims != self.in_dims {
            return Err(HopfError::SignatureMismatch(format!(
                "compose: inner map produces {:?}, outer map consumes {:?}",
                g.out_dims, self.in_dims
            )));
        }
        let mut out = StructureMap::new(self.field, g.in_dims.clone(), self.out_dims.clone());
        for (&i, row) in &g.table {
            out.set_row(i, self.apply(row));
        }
        Ok(out)
    }

    /// Tensor product `(f (x) g)(x (x) y) = f(x) (x) g(y)`; arities add.
    pub fn tensor(&self, g: &StructureMap) -> StructureMap {
        let mut in_dims = self.in_dims.clone();
        in_dims.extend_from_slice(&g.in_dims);
        let mut out_dims = self.out_dims.clone();
        out_dims.extend_from_slice(&g.out_dims);
        let out_total = total_dim(&out_dims);
        let g_in_total = g.in_total();
        let g_out_total = g.out_total();
        let mut out = StructureMap::new(self.field, in_dims, out_dims);
        for (&i, ri) in &self.table {
            for (&j, rj) in &g.table {
                let flat_in = i * g_in_total + j;
                let mut image = SparseVec::zero(out_total);
                for (a, c) in ri.entries() {
                    for (b, d) in rj.entries() {
                        image.add_entry(a * g_out_total + b, c.mul(d));
                    }
                }
                out.set_row(flat_in, image);
            }
        }
        out
    }

    /// Table equality after pruning zeros; signatures must agree.
    pub fn equal_tables(&self, other: &StructureMap) -> bool {
        self.in_dims == other.in_dims
            && self.out_dims == other.out_dims
            && self.table == other.table
    }

    /// The transpose, swapping input and output spaces.
    pub fn transpose(&self) -> StructureMap {
        let mut out = StructureMap::new(self.field, self.out_dims.clone(), self.in_dims.clone());
        let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
        let in_total = self.in_total();
        for (&i, row) in &self.table {
            for (j, c) in row.entries() {
                rows.entry(j)
                    .or_insert_with(|| SparseVec::zero(in_total))
                    .add_entry(i, c.clone());
            }
        }
        for (j, row) in rows {
            out.set_row(j, row);
        }
        out
    }
}

impl Tensor {
    /// Applies `map` to the contiguous legs `start..start + map.in_arity()`,
    /// splicing the output legs in their place. This is the workhorse for
    /// Sweedler-style evaluation of axiom sides.
    pub fn apply_at(&self, start: usize, map: &StructureMap) -> Tensor {
        let m = map.in_arity();
        assert!(
            start + m <= self.arity() && self.dims()[start..start + m] == *map.in_dims(),
            "apply_at: legs {:?} at {} do not match map input {:?}",
            self.dims(),
            start,
            map.in_dims()
        );
        let mut dims: Vec<usize> = self.dims()[..start].to_vec();
        dims.extend_from_slice(map.out_dims());
        dims.extend_from_slice(&self.dims()[start + m..]);
        let mut out = Tensor::zero(dims);
        for (key, coeff) in self.entries() {
            let flat_in = flatten_index(map.in_dims(), &key[start..start + m]);
            if let Some(row) = map.row(flat_in) {
                for (flat_out, c) in row.entries() {
                    let mid = unflatten_index(map.out_dims(), flat_out);
                    let mut new_key: Vec<usize> = key[..start].to_vec();
                    new_key.extend_from_slice(&mid);
                    new_key.extend_from_slice(&key[start + m..]);
                    out.add_entry(new_key, coeff.mul(c));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// Multiplication table of the cyclic group Z3 as a 2->1 map.
    fn z3_mult() -> StructureMap {
        StructureMap::from_fn(q(), vec![3, 3], vec![3], |t| {
            Tensor::basis(vec![3], vec![(t[0] + t[1]) % 3], q())
        })
    }

    #[test]
    fn compose_identity_is_identity_law() {
        let m = z3_mult();
        let id = StructureMap::identity(q(), vec![3]);
        assert!(id.compose(&m).unwrap().equal_tables(&m));
        let id2 = StructureMap::identity(q(), vec![3, 3]);
        assert!(m.compose(&id2).unwrap().equal_tables(&m));
    }

    #[test]
    fn flip_is_an_involution() {
        let flip = StructureMap::flip(q(), 3, 3);
        let id = StructureMap::identity(q(), vec![3, 3]);
        assert!(flip.compose(&flip).unwrap().equal_tables(&id));
    }

    #[test]
    fn group_law_in_z3() {
        // m(m (x) id) on the basis tuple (g, g, g) with g = 1: g^3 = 1.
        let m = z3_mult();
        let id = StructureMap::identity(q(), vec![3]);
        let assoc = m.compose(&m.tensor(&id)).unwrap();
        let g3 = assoc.apply_basis(flatten_index(&[3, 3, 3], &[1, 1, 1]));
        assert_eq!(g3, SparseVec::basis(3, 0, q()));
    }

    #[test]
    fn compose_signature_mismatch_errors() {
        let m = z3_mult();
        assert!(m.compose(&m).is_err());
    }

    #[test]
    fn tensor_dims_multiply() {
        let m = z3_mult();
        let t = m.tensor(&m);
        assert_eq!(t.in_total(), 81);
        assert_eq!(t.out_total(), 9);
    }

    #[test]
    fn transpose_round_trip() {
        let m = z3_mult();
        assert!(m.transpose().transpose().equal_tables(&m));
    }

    #[test]
    fn apply_at_splices_legs() {
        let m = z3_mult();
        let t = Tensor::basis(vec![3, 3, 3], vec![1, 2, 1], q());
        let u = t.apply_at(0, &m);
        assert_eq!(u.dims(), &[3, 3]);
        let (key, _) = u.entries().next().unwrap();
        assert_eq!(key, &vec![0, 1]);
    }
}
