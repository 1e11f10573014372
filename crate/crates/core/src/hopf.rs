//! Finite-dimensional algebra, coalgebra, bialgebra and Hopf data with
//! exact axiom checkers, an antipode solver, and the standard
//! constructions: duals, opposites, co-opposites, tensor products, group
//! algebras and Sweedler's 4-dimensional Hopf algebra.

use crate::error::HopfError;
use crate::linalg::{invert_element, invert_map, Matrix};
use crate::map::StructureMap;
use crate::report::{check_equality, CheckReport};
use crate::scalar::{FieldSpec, Scalar};
use crate::sparse::{SparseVec, Tensor};

/// A finite-dimensional unital associative algebra on a chosen basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraData {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// 2 -> 1 structure map.
    pub mult: StructureMap,
    pub unit: SparseVec,
}

/// A coalgebra structure on the same based space.
#[derive(Clone, Debug, PartialEq)]
pub struct CoalgebraData {
    /// 1 -> 2 structure map.
    pub comult: StructureMap,
    /// 1 -> 0 structure map.
    pub counit: StructureMap,
}

/// A Hopf algebra: bialgebra data plus an antipode.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    /// 1 -> 1 structure map.
    pub antipode: StructureMap,
}

impl AlgebraData {
    pub fn basis_vec(&self, i: usize) -> SparseVec {
        SparseVec::basis(self.dim, i, self.field)
    }

    pub fn basis_tensor(&self, tuple: &[usize]) -> Tensor {
        Tensor::basis(vec![self.dim; tuple.len()], tuple.to_vec(), self.field)
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let t = a.to_tensor(&[self.dim]).tensor(&b.to_tensor(&[self.dim]));
        t.apply_at(0, &self.mult).flatten()
    }

    pub fn is_commutative(&self) -> bool {
        let flip = StructureMap::flip(self.field, self.dim, self.dim);
        self.mult.compose(&flip).unwrap().equal_tables(&self.mult)
    }

    pub fn invert_element(&self, u: &SparseVec) -> Result<SparseVec, HopfError> {
        invert_element(&self.mult, &self.unit, u)
    }

    /// The tensor product algebra on `A (x) B`, basis flattened row-major.
    pub fn tensor_algebra(&self, other: &AlgebraData) -> AlgebraData {
        assert_eq!(self.field, other.field);
        let (n, m) = (self.dim, other.dim);
        let nm = n * m;
        let mult = StructureMap::from_fn(self.field, vec![nm, nm], vec![nm], |t| {
            let (i1, j1) = (t[0] / m, t[0] % m);
            let (i2, j2) = (t[1] / m, t[1] % m);
            let a = self.basis_tensor(&[i1, i2]).apply_at(0, &self.mult);
            let b = other.basis_tensor(&[j1, j2]).apply_at(0, &other.mult);
            a.tensor(&b).flatten().to_tensor(&[nm])
        });
        let unit = self
            .unit
            .to_tensor(&[n])
            .tensor(&other.unit.to_tensor(&[m]))
            .flatten();
        AlgebraData {
            field: self.field,
            dim: nm,
            basis_labels: tensor_labels(&self.basis_labels, &other.basis_labels),
            mult,
            unit,
        }
    }
}

pub(crate) fn tensor_labels(a: &[String], b: &[String]) -> Vec<String> {
    let mut labels = Vec::with_capacity(a.len() * b.len());
    for la in a {
        for lb in b {
            labels.push(format!("{}.{}", la, lb));
        }
    }
    labels
}

impl HopfData {
    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn mult(&self) -> &StructureMap {
        &self.algebra.mult
    }

    pub fn unit(&self) -> &SparseVec {
        &self.algebra.unit
    }

    pub fn comult(&self) -> &StructureMap {
        &self.coalgebra.comult
    }

    pub fn counit(&self) -> &StructureMap {
        &self.coalgebra.counit
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        let flip = StructureMap::flip(self.field(), self.dim(), self.dim());
        flip.compose(self.comult())
            .unwrap()
            .equal_tables(self.comult())
    }

    /// The inverse antipode as a map; errors when `S` is singular.
    pub fn antipode_inverse(&self) -> Result<StructureMap, HopfError> {
        invert_map(&self.antipode)
    }
}

// ---------------------------------------------------------------------------
// axiom checkers
// ---------------------------------------------------------------------------

pub fn check_algebra(a: &AlgebraData) -> CheckReport {
    let n = a.dim;
    check_equality(
        "associativity",
        &[n, n, n],
        |t| a.basis_tensor(t).apply_at(0, &a.mult).apply_at(0, &a.mult),
        |t| a.basis_tensor(t).apply_at(1, &a.mult).apply_at(0, &a.mult),
    )
    .and_then(|| {
        let unit_t = a.unit.to_tensor(&[n]);
        check_equality(
            "unit.left",
            &[n],
            |t| unit_t.tensor(&a.basis_tensor(t)).apply_at(0, &a.mult),
            |t| a.basis_tensor(t),
        )
    })
    .and_then(|| {
        let unit_t = a.unit.to_tensor(&[n]);
        check_equality(
            "unit.right",
            &[n],
            |t| a.basis_tensor(t).tensor(&unit_t).apply_at(0, &a.mult),
            |t| a.basis_tensor(t),
        )
    })
}

pub fn check_coalgebra(field: FieldSpec, n: usize, c: &CoalgebraData) -> CheckReport {
    let basis = |t: &[usize]| Tensor::basis(vec![n; t.len()], t.to_vec(), field);
    check_equality(
        "coassociativity",
        &[n],
        |t| basis(t).apply_at(0, &c.comult).apply_at(0, &c.comult),
        |t| basis(t).apply_at(0, &c.comult).apply_at(1, &c.comult),
    )
    .and_then(|| {
        check_equality(
            "counit.left",
            &[n],
            |t| basis(t).apply_at(0, &c.comult).apply_at(0, &c.counit),
            |t| basis(t),
        )
    })
    .and_then(|| {
        check_equality(
            "counit.right",
            &[n],
            |t| basis(t).apply_at(0, &c.comult).apply_at(1, &c.counit),
            |t| basis(t),
        )
    })
}

/// Bialgebra axioms: algebra + coalgebra + comultiplication and counit are
/// algebra maps.
pub fn check_bialgebra(a: &AlgebraData, c: &CoalgebraData) -> CheckReport {
    let n = a.dim;
    check_algebra(a)
        .and_then(|| check_coalgebra(a.field, n, c))
        .and_then(|| {
            check_equality(
                "comult.multiplicative",
                &[n, n],
                |t| a.basis_tensor(t).apply_at(0, &a.mult).apply_at(0, &c.comult),
                |t| {
                    a.basis_tensor(t)
                        .apply_at(0, &c.comult)
                        .apply_at(2, &c.comult)
                        .permute(&[0, 2, 1, 3])
                        .apply_at(0, &a.mult)
                        .apply_at(1, &a.mult)
                },
            )
        })
        .and_then(|| {
            let unit_t = a.unit.to_tensor(&[n]);
            let lhs = unit_t.apply_at(0, &c.comult);
            let rhs = unit_t.tensor(&unit_t);
            let residual = lhs.sub(&rhs);
            if residual.is_zero() {
                CheckReport::pass()
            } else {
                CheckReport::fail("comult.unital", vec![], residual)
            }
        })
        .and_then(|| {
            check_equality(
                "counit.multiplicative",
                &[n, n],
                |t| a.basis_tensor(t).apply_at(0, &a.mult).apply_at(0, &c.counit),
                |t| a.basis_tensor(t).apply_at(0, &c.counit).apply_at(0, &c.counit),
            )
        })
        .and_then(|| {
            let eps_one = a.unit.to_tensor(&[n]).apply_at(0, &c.counit);
            let one = Tensor::scalar(a.field, Scalar::one(a.field));
            let residual = eps_one.sub(&one);
            if residual.is_zero() {
                CheckReport::pass()
            } else {
                CheckReport::fail("counit.unital", vec![], residual)
            }
        })
}

/// Full Hopf check: bialgebra axioms plus both antipode identities.
pub fn check_hopf(h: &HopfData) -> CheckReport {
    let n = h.dim();
    let a = &h.algebra;
    let c = &h.coalgebra;
    check_bialgebra(a, c)
        .and_then(|| {
            check_equality(
                "antipode.left",
                &[n],
                |t| {
                    a.basis_tensor(t)
                        .apply_at(0, &c.comult)
                        .apply_at(0, &h.antipode)
                        .apply_at(0, &a.mult)
                },
                |t| unit_times_counit(a, c, t),
            )
        })
        .and_then(|| {
            check_equality(
                "antipode.right",
                &[n],
                |t| {
                    a.basis_tensor(t)
                        .apply_at(0, &c.comult)
                        .apply_at(1, &h.antipode)
                        .apply_at(0, &a.mult)
                },
                |t| unit_times_counit(a, c, t),
            )
        })
}

fn unit_times_counit(a: &AlgebraData, c: &CoalgebraData, t: &[usize]) -> Tensor {
    let eps = a
        .basis_tensor(t)
        .apply_at(0, &c.counit)
        .as_scalar(a.field);
    a.unit.to_tensor(&[a.dim]).scale(&eps)
}

// ---------------------------------------------------------------------------
// antipode solver
// ---------------------------------------------------------------------------

/// Solves `m(S (x) id) comult = unit . counit` for `S` by exact linear
/// elimination, then verifies the other antipode identity. Returns `None`
/// when the left system is inconsistent; errors when only a one-sided
/// convolution inverse exists.
pub fn solve_antipode(
    a: &AlgebraData,
    c: &CoalgebraData,
) -> Result<Option<StructureMap>, HopfError> {
    let n = a.dim;
    let field = a.field;
    // Unknowns s[(j, i)] = coefficient of e_j in S(e_i), flattened j*n + i.
    let mut system = Matrix::zero(field, n * n, n * n);
    let mut rhs = SparseVec::zero(n * n);
    for k in 0..n {
        let delta = c.comult.apply_basis(k).to_tensor(&[n, n]);
        for (key, d) in delta.entries() {
            let (i, l) = (key[0], key[1]);
            // contributes d * s[j,i] * m(e_j, e_l) to equation row k
            for j in 0..n {
                let prod = a.mult.apply_basis(j * n + l);
                for (out, m_c) in prod.entries() {
                    let row = k * n + out;
                    let col = j * n + i;
                    let cur = system.at(row, col).add(&d.mul(m_c));
                    *system.at_mut(row, col) = cur;
                }
            }
        }
        let eps = c.counit.apply_basis(k);
        let eps_val = eps.coeff(0).cloned().unwrap_or_else(|| Scalar::zero(field));
        for (u, x) in a.unit.entries() {
            rhs.add_entry(k * n + u, eps_val.mul(x));
        }
    }
    let Some(sol) = system.solve(&rhs)? else {
        return Ok(None);
    };
    let mut antipode = StructureMap::new(field, vec![n], vec![n]);
    for i in 0..n {
        let mut col = SparseVec::zero(n);
        for j in 0..n {
            if let Some(x) = sol.coeff(j * n + i) {
                col.add_entry(j, x.clone());
            }
        }
        antipode.set_row(i, col);
    }
    // verify the right identity; convolution inverses are unique, so a
    // genuine Hopf algebra always passes here
    let candidate = HopfData { algebra: a.clone(), coalgebra: c.clone(), antipode };
    let right = check_equality(
        "antipode.right",
        &[n],
        |t| {
            a.basis_tensor(t)
                .apply_at(0, &c.comult)
                .apply_at(1, &candidate.antipode)
                .apply_at(0, &a.mult)
        },
        |t| unit_times_counit(a, c, t),
    );
    if !right.passed() {
        return Err(HopfError::NotAHopfAlgebra(
            "solved antipode satisfies only the left identity".into(),
        ));
    }
    Ok(Some(candidate.antipode))
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

/// The dual Hopf algebra under the pairing `<fg, h> = <f (x) g, delta(h)>`,
/// `<delta*(f), x (x) y> = <f, xy>`.
pub fn dual_hopf(h: &HopfData) -> HopfData {
    let n = h.dim();
    let field = h.field();
    let mult = h.comult().transpose();
    let comult = h.mult().transpose();
    // unit of the dual is the counit as a vector
    let mut unit = SparseVec::zero(n);
    for k in 0..n {
        let eps = h.counit().apply_basis(k);
        if let Some(x) = eps.coeff(0) {
            unit.add_entry(k, x.clone());
        }
    }
    // counit of the dual is evaluation at the unit
    let mut counit = StructureMap::new(field, vec![n], vec![]);
    for k in 0..n {
        if let Some(x) = h.unit().coeff(k) {
            let mut v = SparseVec::zero(1);
            v.add_entry(0, x.clone());
            counit.set_row(k, v);
        }
    }
    HopfData {
        algebra: AlgebraData {
            field,
            dim: n,
            basis_labels: h.algebra.basis_labels.iter().map(|l| format!("{}*", l)).collect(),
            mult,
            unit,
        },
        coalgebra: CoalgebraData { comult, counit },
        antipode: h.antipode.transpose(),
    }
}

/// The opposite Hopf algebra: reversed multiplication, antipode `S^{-1}`.
pub fn opposite(h: &HopfData) -> Result<HopfData, HopfError> {
    let flip = StructureMap::flip(h.field(), h.dim(), h.dim());
    let mult = h.mult().compose(&flip).unwrap();
    let antipode = h.antipode_inverse()?;
    Ok(HopfData {
        algebra: AlgebraData { mult, ..h.algebra.clone() },
        coalgebra: h.coalgebra.clone(),
        antipode,
    })
}

/// The co-opposite Hopf algebra: flipped comultiplication, antipode `S^{-1}`.
pub fn co_opposite(h: &HopfData) -> Result<HopfData, HopfError> {
    let comult = cop_comult(h.comult());
    let antipode = h.antipode_inverse()?;
    Ok(HopfData {
        algebra: h.algebra.clone(),
        coalgebra: CoalgebraData { comult, counit: h.counit().clone() },
        antipode,
    })
}

/// Flips the two output legs of a 1 -> 2 comultiplication.
pub fn cop_comult(comult: &StructureMap) -> StructureMap {
    let d = comult.out_dims().to_vec();
    let flip = StructureMap::flip(comult.field(), d[0], d[1]);
    flip.compose(comult).unwrap()
}

/// Componentwise Hopf structure on `A (x) B`.
pub fn tensor_hopf(a: &HopfData, b: &HopfData) -> HopfData {
    assert_eq!(a.field(), b.field());
    let field = a.field();
    let (n, m) = (a.dim(), b.dim());
    let nm = n * m;
    let algebra = a.algebra.tensor_algebra(&b.algebra);
    let comult = StructureMap::from_fn(field, vec![nm], vec![nm, nm], |t| {
        let (i, j) = (t[0] / m, t[0] % m);
        let da = a.algebra.basis_tensor(&[i]).apply_at(0, a.comult());
        let db = b.algebra.basis_tensor(&[j]).apply_at(0, b.comult());
        da.tensor(&db)
            .permute(&[0, 2, 1, 3])
            .flatten()
            .to_tensor(&[nm, nm])
    });
    let counit = StructureMap::from_fn(field, vec![nm], vec![], |t| {
        let (i, j) = (t[0] / m, t[0] % m);
        let ea = a.algebra.basis_tensor(&[i]).apply_at(0, a.counit());
        let eb = b.algebra.basis_tensor(&[j]).apply_at(0, b.counit());
        ea.tensor(&eb)
    });
    let antipode = StructureMap::from_fn(field, vec![nm], vec![nm], |t| {
        let (i, j) = (t[0] / m, t[0] % m);
        let sa = a.algebra.basis_tensor(&[i]).apply_at(0, &a.antipode);
        let sb = b.algebra.basis_tensor(&[j]).apply_at(0, &b.antipode);
        sa.tensor(&sb).flatten().to_tensor(&[nm])
    });
    HopfData { algebra, coalgebra: CoalgebraData { comult, counit }, antipode }
}

/// Checks that a 1 -> 1 map is a morphism of Hopf algebras: it must
/// respect multiplication, unit, comultiplication, counit and antipode.
pub fn check_hopf_morphism(src: &HopfData, dst: &HopfData, f: &StructureMap) -> CheckReport {
    let (ns, nd) = (src.dim(), dst.dim());
    if f.in_dims() != [ns] || f.out_dims() != [nd] {
        return CheckReport::fail("morphism.signature", vec![], Tensor::zero(vec![]));
    }
    check_equality(
        "morphism.multiplicative",
        &[ns, ns],
        |t| src.algebra.basis_tensor(t).apply_at(0, src.mult()).apply_at(0, f),
        |t| {
            src.algebra
                .basis_tensor(t)
                .apply_at(0, f)
                .apply_at(1, f)
                .apply_at(0, dst.mult())
        },
    )
    .and_then(|| {
        let lhs = src.unit().to_tensor(&[ns]).apply_at(0, f);
        let rhs = dst.unit().to_tensor(&[nd]);
        let residual = lhs.sub(&rhs);
        if residual.is_zero() {
            CheckReport::pass()
        } else {
            CheckReport::fail("morphism.unital", vec![], residual)
        }
    })
    .and_then(|| {
        check_equality(
            "morphism.comultiplicative",
            &[ns],
            |t| src.algebra.basis_tensor(t).apply_at(0, f).apply_at(0, dst.comult()),
            |t| {
                src.algebra
                    .basis_tensor(t)
                    .apply_at(0, src.comult())
                    .apply_at(0, f)
                    .apply_at(1, f)
            },
        )
    })
    .and_then(|| {
        check_equality(
            "morphism.counit",
            &[ns],
            |t| src.algebra.basis_tensor(t).apply_at(0, f).apply_at(0, dst.counit()),
            |t| src.algebra.basis_tensor(t).apply_at(0, src.counit()),
        )
    })
    .and_then(|| {
        check_equality(
            "morphism.antipode",
            &[ns],
            |t| src.algebra.basis_tensor(t).apply_at(0, &src.antipode).apply_at(0, f),
            |t| src.algebra.basis_tensor(t).apply_at(0, f).apply_at(0, &dst.antipode),
        )
    })
}

/// Group algebra `kG` from a Cayley table: `table[i][j]` is the index of
/// the product. Group-likes diagonal, antipode by inversion.
pub fn group_algebra(
    field: FieldSpec,
    table: &[Vec<usize>],
    labels: &[String],
) -> Result<HopfData, HopfError> {
    let n = table.len();
    if n == 0 || table.iter().any(|r| r.len() != n) || labels.len() != n {
        return Err(HopfError::NotAGroup("table is not square".into()));
    }
    if table.iter().flatten().any(|&x| x >= n) {
        return Err(HopfError::NotAGroup("entry out of range".into()));
    }
    // identity
    let e = (0..n)
        .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
        .ok_or_else(|| HopfError::NotAGroup("no identity element".into()))?;
    // associativity
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(HopfError::NotAGroup(format!(
                        "associativity fails at ({}, {}, {})",
                        a, b, c
                    )));
                }
            }
        }
    }
    // inverses
    let mut inv = vec![None; n];
    for a in 0..n {
        inv[a] = (0..n).find(|&b| table[a][b] == e && table[b][a] == e);
        if inv[a].is_none() {
            return Err(HopfError::NotAGroup(format!("element {} has no inverse", a)));
        }
    }
    let mult = StructureMap::from_fn(field, vec![n, n], vec![n], |t| {
        Tensor::basis(vec![n], vec![table[t[0]][t[1]]], field)
    });
    let comult = StructureMap::from_fn(field, vec![n], vec![n, n], |t| {
        Tensor::basis(vec![n, n], vec![t[0], t[0]], field)
    });
    let counit = StructureMap::from_fn(field, vec![n], vec![], |_| {
        Tensor::scalar(field, Scalar::one(field))
    });
    let antipode = StructureMap::from_fn(field, vec![n], vec![n], |t| {
        Tensor::basis(vec![n], vec![inv[t[0]].unwrap()], field)
    });
    Ok(HopfData {
        algebra: AlgebraData {
            field,
            dim: n,
            basis_labels: labels.to_vec(),
            mult,
            unit: SparseVec::basis(n, e, field),
        },
        coalgebra: CoalgebraData { comult, counit },
        antipode,
    })
}

/// Sweedler's 4-dimensional Hopf algebra on the basis `{1, g, x, gx}`:
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `delta(x) = x (x) g + 1 (x) x`,
/// `S(g) = g`, `S(x) = gx`. Requires characteristic != 2.
pub fn sweedler_h4(field: FieldSpec) -> Result<HopfData, HopfError> {
    if field.characteristic() == 2 {
        return Err(HopfError::CharacteristicTwo);
    }
    let n = 4;
    // index = 2*b + a for the monomial g^a x^b
    let idx = |a: usize, b: usize| 2 * b + a;
    let mult = StructureMap::from_fn(field, vec![n, n], vec![n], |t| {
        let (a1, b1) = (t[0] % 2, t[0] / 2);
        let (a2, b2) = (t[1] % 2, t[1] / 2);
        if b1 + b2 >= 2 {
            return Tensor::zero(vec![n]);
        }
        let sign = if b1 * a2 % 2 == 1 { -1 } else { 1 };
        Tensor::basis(vec![n], vec![idx((a1 + a2) % 2, b1 + b2)], field)
            .scale(&Scalar::from_i64(field, sign))
    });
    let mut comult = StructureMap::new(field, vec![n], vec![n, n]);
    let pair = |i: usize, j: usize| i * n + j;
    let one = Scalar::one(field);
    // delta(1), delta(g) group-like
    for g in [idx(0, 0), idx(1, 0)] {
        let mut v = SparseVec::zero(n * n);
        v.add_entry(pair(g, g), one.clone());
        comult.set_row(g, v);
    }
    // delta(x) = x (x) g + 1 (x) x
    let mut vx = SparseVec::zero(n * n);
    vx.add_entry(pair(idx(0, 1), idx(1, 0)), one.clone());
    vx.add_entry(pair(idx(0, 0), idx(0, 1)), one.clone());
    comult.set_row(idx(0, 1), vx);
    // delta(gx) = gx (x) 1 + g (x) gx
    let mut vgx = SparseVec::zero(n * n);
    vgx.add_entry(pair(idx(1, 1), idx(0, 0)), one.clone());
    vgx.add_entry(pair(idx(1, 0), idx(1, 1)), one.clone());
    comult.set_row(idx(1, 1), vgx);
    let counit = StructureMap::from_fn(field, vec![n], vec![], |t| {
        if t[0] / 2 == 0 {
            Tensor::scalar(field, Scalar::one(field))
        } else {
            Tensor::zero(vec![])
        }
    });
    // S(1) = 1, S(g) = g, S(x) = gx, S(gx) = -x
    let mut antipode = StructureMap::new(field, vec![n], vec![n]);
    antipode.set_row(idx(0, 0), SparseVec::basis(n, idx(0, 0), field));
    antipode.set_row(idx(1, 0), SparseVec::basis(n, idx(1, 0), field));
    antipode.set_row(idx(0, 1), SparseVec::basis(n, idx(1, 1), field));
    let mut sgx = SparseVec::zero(n);
    sgx.add_entry(idx(0, 1), Scalar::from_i64(field, -1));
    antipode.set_row(idx(1, 1), sgx);
    Ok(HopfData {
        algebra: AlgebraData {
            field,
            dim: n,
            basis_labels: vec!["1".into(), "g".into(), "x".into(), "gx".into()],
            mult,
            unit: SparseVec::basis(n, 0, field),
        },
        coalgebra: CoalgebraData { comult, counit },
        antipode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn group_algebras_pass_check_hopf() {
        for name in ["z2", "z3", "z2xz2", "s3", "d4"] {
            let h = zoo::hopf(name, q()).unwrap();
            let r = check_hopf(&h);
            assert!(r.passed(), "{} failed: {:?}", name, r.failed_axiom);
        }
    }

    #[test]
    fn sweedler_h4_passes_all_checks() {
        let h = sweedler_h4(q()).unwrap();
        assert!(check_algebra(&h.algebra).passed());
        assert!(check_coalgebra(q(), 4, &h.coalgebra).passed());
        assert!(check_bialgebra(&h.algebra, &h.coalgebra).passed());
        assert!(check_hopf(&h).passed());
        assert!(!h.is_commutative());
        assert!(!h.is_cocommutative());
    }

    #[test]
    fn h4_refused_in_characteristic_two() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(sweedler_h4(f2), Err(HopfError::CharacteristicTwo)));
    }

    #[test]
    fn corrupt_h4_antipode_fails_with_witness_x() {
        let mut h = sweedler_h4(q()).unwrap();
        // S(x) = x instead of gx
        let mut bad = h.antipode.clone();
        bad.set_row(2, SparseVec::basis(4, 2, q()));
        h.antipode = bad;
        let r = check_hopf(&h);
        assert!(!r.passed());
        assert_eq!(r.witness, Some(vec![2]));
    }

    #[test]
    fn non_associative_table_fails_with_witness() {
        // e0 acts as a left unit, but e1*e0 = e1*e1 = e0 breaks
        // associativity: (e1 e0) e1 = e1 while e1 (e0 e1) = e0
        let field = q();
        let mut mult = StructureMap::new(field, vec![2, 2], vec![2]);
        mult.set_row(0, SparseVec::basis(2, 0, field));
        mult.set_row(1, SparseVec::basis(2, 1, field));
        mult.set_row(2, SparseVec::basis(2, 0, field));
        mult.set_row(3, SparseVec::basis(2, 0, field));
        let a = AlgebraData {
            field,
            dim: 2,
            basis_labels: vec!["e0".into(), "e1".into()],
            mult,
            unit: SparseVec::basis(2, 0, field),
        };
        let r = check_algebra(&a);
        assert!(!r.passed());
        assert_eq!(r.failed_axiom.as_deref(), Some("associativity"));
        assert_eq!(r.witness, Some(vec![1, 0, 1]));
    }

    #[test]
    fn solve_antipode_recovers_group_inverse() {
        let h = zoo::hopf("z3", q()).unwrap();
        let s = solve_antipode(&h.algebra, &h.coalgebra).unwrap().unwrap();
        // S(g) = g^2
        assert_eq!(s.apply_basis(1), SparseVec::basis(3, 2, q()));
        assert!(s.equal_tables(&h.antipode));
    }

    #[test]
    fn solve_antipode_recovers_h4_antipode() {
        let h = sweedler_h4(q()).unwrap();
        let s = solve_antipode(&h.algebra, &h.coalgebra).unwrap().unwrap();
        assert!(s.equal_tables(&h.antipode));
    }

    #[test]
    fn matrix_coefficient_bialgebra_has_no_antipode() {
        // coordinate bialgebra of 2x2 matrices: basis e_ij, Delta(e_ij) =
        // sum_k e_ik (x) e_kj, eps(e_ij) = [i = j], mult e_ij e_kl =
        // [j = k] e_il extended... that algebra has no unit; use instead the
        // monoid bialgebra of the multiplicative monoid {0, 1}: group-like
        // basis z (z^2 = z) has no antipode since z is not invertible.
        let field = q();
        let n = 2; // basis {1, z}
        let mult = StructureMap::from_fn(field, vec![n, n], vec![n], |t| {
            Tensor::basis(vec![n], vec![t[0].max(t[1])], field)
        });
        let comult = StructureMap::from_fn(field, vec![n], vec![n, n], |t| {
            Tensor::basis(vec![n, n], vec![t[0], t[0]], field)
        });
        let counit = StructureMap::from_fn(field, vec![n], vec![], |_| {
            Tensor::scalar(field, Scalar::one(field))
        });
        let a = AlgebraData {
            field,
            dim: n,
            basis_labels: vec!["1".into(), "z".into()],
            mult,
            unit: SparseVec::basis(n, 0, field),
        };
        let c = CoalgebraData { comult, counit };
        assert!(check_bialgebra(&a, &c).passed());
        assert!(solve_antipode(&a, &c).unwrap().is_none());
    }

    #[test]
    fn duals_are_hopf_and_double_dual_is_identity() {
        let h4 = sweedler_h4(q()).unwrap();
        let d = dual_hopf(&h4);
        assert!(check_hopf(&d).passed());
        let dd = dual_hopf(&d);
        assert!(dd.mult().equal_tables(h4.mult()));
        assert!(dd.comult().equal_tables(h4.comult()));
        assert!(dd.antipode.equal_tables(&h4.antipode));
        assert_eq!(dd.unit(), h4.unit());
    }

    #[test]
    fn dual_z2_is_self_dual_up_to_iso() {
        let z2 = zoo::hopf("z2", q()).unwrap();
        let d = dual_hopf(&z2);
        assert!(check_hopf(&d).passed());
        // kZ2 and its dual are both 2-dim commutative cocommutative
        assert!(d.is_commutative() && d.is_cocommutative());
    }

    #[test]
    fn dual_s3_is_commutative_not_cocommutative() {
        let s3 = zoo::hopf("s3", q()).unwrap();
        let d = dual_hopf(&s3);
        assert!(check_hopf(&d).passed());
        assert!(d.is_commutative());
        assert!(!d.is_cocommutative());
        assert!(!s3.is_commutative());
        assert!(s3.is_cocommutative());
    }

    #[test]
    fn opposites_pass_and_are_involutions() {
        let h4 = sweedler_h4(q()).unwrap();
        let op = opposite(&h4).unwrap();
        assert!(check_hopf(&op).passed());
        let opop = opposite(&op).unwrap();
        assert!(opop.mult().equal_tables(h4.mult()));
        assert!(opop.antipode.equal_tables(&h4.antipode));
        let cop = co_opposite(&h4).unwrap();
        assert!(check_hopf(&cop).passed());
        let copcop = co_opposite(&cop).unwrap();
        assert!(copcop.comult().equal_tables(h4.comult()));
    }

    #[test]
    fn co_opposite_h4_has_expected_comult_and_antipode() {
        let h4 = sweedler_h4(q()).unwrap();
        let cop = co_opposite(&h4).unwrap();
        // delta^cop(x) = g (x) x + x (x) 1
        let dx = cop.comult().apply_basis(2).to_tensor(&[4, 4]);
        let mut expected = Tensor::zero(vec![4, 4]);
        expected.add_entry(vec![1, 2], Scalar::one(q()));
        expected.add_entry(vec![2, 0], Scalar::one(q()));
        assert_eq!(dx, expected);
        // S^{-1}(x) = xg = -gx
        let sx = cop.antipode.apply_basis(2);
        let mut exp = SparseVec::zero(4);
        exp.add_entry(3, Scalar::from_i64(q(), -1));
        assert_eq!(sx, exp);
    }

    #[test]
    fn opposite_of_abelian_group_algebra_is_unchanged() {
        let z3 = zoo::hopf("z3", q()).unwrap();
        let op = opposite(&z3).unwrap();
        assert!(op.mult().equal_tables(z3.mult()));
        let cop = co_opposite(&z3).unwrap();
        assert!(cop.comult().equal_tables(z3.comult()));
    }

    #[test]
    fn tensor_hopf_of_z2_z2_is_klein_four() {
        let z2 = zoo::hopf("z2", q()).unwrap();
        let t = tensor_hopf(&z2, &z2);
        assert_eq!(t.dim(), 4);
        assert!(check_hopf(&t).passed());
        let klein = zoo::hopf("z2xz2", q()).unwrap();
        // same multiplication table under the matching basis order
        assert!(t.mult().equal_tables(klein.mult()));
    }

    #[test]
    fn tensor_counit_is_product_of_counits() {
        let h4 = sweedler_h4(q()).unwrap();
        let z2 = zoo::hopf("z2", q()).unwrap();
        let t = tensor_hopf(&h4, &z2);
        assert_eq!(t.dim(), 8);
        assert!(check_hopf(&t).passed());
        for i in 0..4 {
            for j in 0..2 {
                let e = t.algebra.basis_tensor(&[i * 2 + j]).apply_at(0, t.counit());
                let ea = h4.algebra.basis_tensor(&[i]).apply_at(0, h4.counit());
                let eb = z2.algebra.basis_tensor(&[j]).apply_at(0, z2.counit());
                assert_eq!(e, ea.tensor(&eb));
            }
        }
    }

    #[test]
    fn bad_cayley_table_is_rejected() {
        let field = q();
        // 0 is identity, but 1 has no inverse
        let table = vec![vec![0, 1], vec![1, 1]];
        let labels = vec!["e".to_string(), "a".to_string()];
        assert!(matches!(
            group_algebra(field, &table, &labels),
            Err(HopfError::NotAGroup(_))
        ));
    }
}
