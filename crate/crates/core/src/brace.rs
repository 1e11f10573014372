//! Hopf braces: one algebra carrying two Hopf coalgebra structures tied by
//! a compatibility identity, the coactions they induce, the resulting braid
//! operator, and braces obtained by twisting a coproduct with a copairing.
//!
//! Throughout, the first coalgebra half is written (delta, eps, S) and the
//! second (delta', eps, T); the compatibility identity is
//! `h_1' (x) h_2'1 (x) h_2'2 = h_11' S(h_2) h_31' (x) h_12' (x) h_32'`.

use crate::error::HopfError;
use crate::hopf::{self, check_hopf, CoalgebraData, HopfData};
use crate::linalg::Matrix;
use crate::map::StructureMap;
use crate::report::{check_equality, CheckReport};
use crate::sparse::Tensor;

/// A Hopf brace: the first Hopf half plus a second comultiplication and
/// antipode over the same algebra and counit.
#[derive(Clone, Debug, PartialEq)]
pub struct BraceData {
    pub hopf: HopfData,
    /// The second comultiplication (delta').
    pub comult2: StructureMap,
    /// The second antipode (T).
    pub antipode2: StructureMap,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoactionSide {
    Left,
    Right,
}

/// A coaction as a 1 -> 2 map together with which leg carries the
/// coacting Hopf algebra: `Left` puts it first, `Right` last.
#[derive(Clone, Debug, PartialEq)]
pub struct CoactionData {
    pub side: CoactionSide,
    pub map: StructureMap,
}

impl BraceData {
    /// Wraps the parts without running any checks; used by parsers and by
    /// tests that need deliberately broken data.
    pub fn new_unchecked(hopf: HopfData, comult2: StructureMap, antipode2: StructureMap) -> Self {
        BraceData { hopf, comult2, antipode2 }
    }

    /// Builds a brace and verifies it. A second counit, when supplied,
    /// must agree with the first; the two counits of a genuine brace are
    /// always equal, so disagreement means bad input.
    pub fn new(
        hopf: HopfData,
        comult2: StructureMap,
        counit2: Option<&StructureMap>,
        antipode2: StructureMap,
    ) -> Result<Self, HopfError> {
        if let Some(c2) = counit2 {
            if !c2.equal_tables(hopf.counit()) {
                return Err(HopfError::CounitMismatch(
                    "supplied second counit differs from the first".into(),
                ));
            }
        }
        let b = BraceData::new_unchecked(hopf, comult2, antipode2);
        let report = check_brace(&b);
        if !report.passed() {
            return Err(HopfError::BraceCheckFailed(
                report.failed_axiom.unwrap_or_default(),
            ));
        }
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// The second Hopf half (m, 1, delta', eps, T) as standalone data.
    pub fn hopf2(&self) -> HopfData {
        HopfData {
            algebra: self.hopf.algebra.clone(),
            coalgebra: CoalgebraData {
                comult: self.comult2.clone(),
                counit: self.hopf.counit().clone(),
            },
            antipode: self.antipode2.clone(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.hopf.is_commutative()
    }

    fn basis(&self, t: &[usize]) -> Tensor {
        self.hopf.algebra.basis_tensor(t)
    }
}

/// Both Hopf halves plus the brace compatibility identity.
pub fn check_brace(b: &BraceData) -> CheckReport {
    let n = b.dim();
    check_hopf(&b.hopf)
        .prefixed("first")
        .and_then(|| check_hopf(&b.hopf2()).prefixed("second"))
        .and_then(|| {
            check_equality(
                "brace.compatibility",
                &[n],
                |t| compat_lhs(b, t),
                |t| compat_rhs(b, t),
            )
        })
}

/// `h_1' (x) h_2'1 (x) h_2'2`.
fn compat_lhs(b: &BraceData, t: &[usize]) -> Tensor {
    b.basis(t)
        .apply_at(0, &b.comult2)
        .apply_at(1, b.hopf.comult())
}

/// `h_11' S(h_2) h_31' (x) h_12' (x) h_32'`.
fn compat_rhs(b: &BraceData, t: &[usize]) -> Tensor {
    let m = b.hopf.mult();
    b.basis(t)
        .apply_at(0, b.hopf.comult())
        .apply_at(0, b.hopf.comult())
        .apply_at(0, &b.comult2)
        .apply_at(3, &b.comult2)
        .apply_at(2, &b.hopf.antipode)
        .permute(&[0, 2, 3, 1, 4])
        .apply_at(0, m)
        .apply_at(0, m)
}

/// The brace with both coproducts equal.
pub fn trivial_brace(h: &HopfData) -> Result<BraceData, HopfError> {
    BraceData::new(h.clone(), h.comult().clone(), None, h.antipode.clone())
}

/// The brace pairing the coproduct with its co-opposite; needs an
/// invertible antipode.
pub fn cop_brace(h: &HopfData) -> Result<BraceData, HopfError> {
    let comult2 = hopf::cop_comult(h.comult());
    let antipode2 = h.antipode_inverse()?;
    BraceData::new(h.clone(), comult2, None, antipode2)
}

/// The canonical left coaction `rho(h) = S(h_1) h_21' (x) h_22'`, a left
/// comodule-coalgebra coaction of the second half on the first.
pub fn rho_coaction(b: &BraceData) -> CoactionData {
    let n = b.dim();
    let map = StructureMap::from_fn(b.hopf.field(), vec![n], vec![n, n], |t| {
        b.basis(t)
            .apply_at(0, b.hopf.comult())
            .apply_at(1, &b.comult2)
            .apply_at(0, &b.hopf.antipode)
            .apply_at(0, b.hopf.mult())
    });
    CoactionData { side: CoactionSide::Left, map }
}

/// The right coaction `phi(a) = T(a_1')_(-1) a_2' (x) T(a_1')_(0) a_3'`
/// on a commutative brace.
pub fn phi_coaction(b: &BraceData) -> Result<CoactionData, HopfError> {
    if !b.is_commutative() {
        return Err(HopfError::NotCommutative);
    }
    let n = b.dim();
    let rho = rho_coaction(b).map;
    let map = StructureMap::from_fn(b.hopf.field(), vec![n], vec![n, n], |t| {
        b.basis(t)
            .apply_at(0, &b.comult2)
            .apply_at(1, &b.comult2)
            .apply_at(0, &b.antipode2)
            .apply_at(0, &rho)
            .permute(&[0, 2, 1, 3])
            .apply_at(0, b.hopf.mult())
            .apply_at(1, b.hopf.mult())
    });
    Ok(CoactionData { side: CoactionSide::Right, map })
}

/// The braid operator `c(x (x) y) = x_(-1) y_[0] (x) x_(0) y_[1]` of a
/// commutative brace.
pub fn braid_operator(b: &BraceData) -> Result<StructureMap, HopfError> {
    let rho = rho_coaction(b).map;
    let phi = phi_coaction(b)?.map;
    let n = b.dim();
    Ok(StructureMap::from_fn(b.hopf.field(), vec![n, n], vec![n, n], |t| {
        b.basis(t)
            .apply_at(0, &rho)
            .apply_at(2, &phi)
            .permute(&[0, 2, 1, 3])
            .apply_at(0, b.hopf.mult())
            .apply_at(1, b.hopf.mult())
    }))
}

/// Exact inverse of a 2 -> 2 operator by matrix inversion.
pub fn invert_operator(c: &StructureMap) -> Result<StructureMap, HopfError> {
    let inv = Matrix::from_map(c).inverse()?;
    Ok(inv.to_map(c.out_dims().to_vec(), c.in_dims().to_vec()))
}

/// `gamma(x (x) y) = x y_(-1) (x) y_(0)`.
pub fn gamma_map(b: &BraceData) -> StructureMap {
    let rho = rho_coaction(b).map;
    let n = b.dim();
    StructureMap::from_fn(b.hopf.field(), vec![n, n], vec![n, n], |t| {
        b.basis(t).apply_at(1, &rho).apply_at(0, b.hopf.mult())
    })
}

/// `gamma^{-1}(x (x) y) = x T(y_(-1)) (x) y_(0)`.
pub fn gamma_inverse(b: &BraceData) -> StructureMap {
    let rho = rho_coaction(b).map;
    let n = b.dim();
    StructureMap::from_fn(b.hopf.field(), vec![n, n], vec![n, n], |t| {
        b.basis(t)
            .apply_at(1, &rho)
            .apply_at(1, &b.antipode2)
            .apply_at(0, b.hopf.mult())
    })
}

/// `sigma(x (x) y) = y_2 (x) x S(y_1) y_3`, defined for any Hopf algebra.
pub fn sigma_map(h: &HopfData) -> StructureMap {
    let n = h.dim();
    StructureMap::from_fn(h.field(), vec![n, n], vec![n, n], |t| {
        h.algebra
            .basis_tensor(t)
            .apply_at(1, h.comult())
            .apply_at(1, h.comult())
            .apply_at(1, &h.antipode)
            .permute(&[2, 0, 1, 3])
            .apply_at(1, h.mult())
            .apply_at(1, h.mult())
    })
}

/// `(c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c)` on
/// basis triples.
pub fn check_braid_equation(c: &StructureMap) -> CheckReport {
    let n = c.in_dims()[0];
    let field = c.field();
    check_equality(
        "braid.equation",
        &[n, n, n],
        |t| {
            Tensor::basis(vec![n, n, n], t.to_vec(), field)
                .apply_at(0, c)
                .apply_at(1, c)
                .apply_at(0, c)
        },
        |t| {
            Tensor::basis(vec![n, n, n], t.to_vec(), field)
                .apply_at(1, c)
                .apply_at(0, c)
                .apply_at(1, c)
        },
    )
}

/// `gamma^{-1} c gamma = sigma` on a commutative brace.
pub fn check_braid_conjugation(b: &BraceData) -> Result<CheckReport, HopfError> {
    let c = braid_operator(b)?;
    let g = gamma_map(b);
    let g_inv = gamma_inverse(b);
    let sigma = sigma_map(&b.hopf);
    let n = b.dim();
    let field = b.hopf.field();
    Ok(check_equality(
        "braid.conjugation",
        &[n, n],
        |t| {
            Tensor::basis(vec![n, n], t.to_vec(), field)
                .apply_at(0, &g)
                .apply_at(0, &c)
                .apply_at(0, &g_inv)
        },
        |t| Tensor::basis(vec![n, n], t.to_vec(), field).apply_at(0, &sigma),
    ))
}

// ---------------------------------------------------------------------------
// derived identities
// ---------------------------------------------------------------------------

/// `S(h_1)_1' h_2 (x) S(h_1)_2' = S(h_1) h_21' (x) S(h_22')`.
pub fn check_antipode_exchange(b: &BraceData) -> CheckReport {
    let n = b.dim();
    check_equality(
        "antipode.exchange",
        &[n],
        |t| {
            b.basis(t)
                .apply_at(0, b.hopf.comult())
                .apply_at(0, &b.hopf.antipode)
                .apply_at(0, &b.comult2)
                .permute(&[0, 2, 1])
                .apply_at(0, b.hopf.mult())
        },
        |t| {
            b.basis(t)
                .apply_at(0, b.hopf.comult())
                .apply_at(1, &b.comult2)
                .apply_at(0, &b.hopf.antipode)
                .apply_at(0, b.hopf.mult())
                .apply_at(1, &b.hopf.antipode)
        },
    )
}

/// `h (x) 1 = h_11' S(h_2) h_31' (x) h_12' S(h_32')`.
pub fn check_cancellation(b: &BraceData) -> CheckReport {
    let n = b.dim();
    let unit_t = b.hopf.unit().to_tensor(&[n]);
    check_equality(
        "cancellation",
        &[n],
        |t| b.basis(t).tensor(&unit_t),
        |t| {
            let m = b.hopf.mult();
            b.basis(t)
                .apply_at(0, b.hopf.comult())
                .apply_at(0, b.hopf.comult())
                .apply_at(0, &b.comult2)
                .apply_at(3, &b.comult2)
                .apply_at(2, &b.hopf.antipode)
                .apply_at(4, &b.hopf.antipode)
                .permute(&[0, 2, 3, 1, 4])
                .apply_at(0, m)
                .apply_at(0, m)
                .apply_at(1, m)
        },
    )
}

/// `delta'(h) = h_1 h_2(-1) (x) h_2(0)`: the second coproduct rebuilt from
/// the canonical coaction.
pub fn check_comult2_reconstruction(b: &BraceData) -> CheckReport {
    let n = b.dim();
    let rho = rho_coaction(b).map;
    check_equality(
        "comult2.reconstruction",
        &[n],
        |t| b.basis(t).apply_at(0, &b.comult2),
        |t| {
            b.basis(t)
                .apply_at(0, b.hopf.comult())
                .apply_at(1, &rho)
                .apply_at(0, b.hopf.mult())
        },
    )
}

/// `delta(h) = h_1' T(h_2'(-1)) (x) h_2'(0)`: the first coproduct rebuilt
/// from the canonical coaction.
pub fn check_comult_reconstruction(b: &BraceData) -> CheckReport {
    let n = b.dim();
    let rho = rho_coaction(b).map;
    check_equality(
        "comult.reconstruction",
        &[n],
        |t| b.basis(t).apply_at(0, b.hopf.comult()),
        |t| {
            b.basis(t)
                .apply_at(0, &b.comult2)
                .apply_at(1, &rho)
                .apply_at(1, &b.antipode2)
                .apply_at(0, b.hopf.mult())
        },
    )
}

/// `(id (x) S) rho = rho S` on commutative braces.
pub fn check_rho_antipode(b: &BraceData) -> CheckReport {
    let n = b.dim();
    let rho = rho_coaction(b).map;
    check_equality(
        "rho.antipode",
        &[n],
        |t| b.basis(t).apply_at(0, &rho).apply_at(1, &b.hopf.antipode),
        |t| b.basis(t).apply_at(0, &b.hopf.antipode).apply_at(0, &rho),
    )
}

// ---------------------------------------------------------------------------
// copairing twists
// ---------------------------------------------------------------------------

/// Inverse of an element of `H (x) H` in the tensor-square algebra.
pub fn invert_copairing(h: &HopfData, r: &Tensor) -> Result<Tensor, HopfError> {
    let n = h.dim();
    let alg2 = h.algebra.tensor_algebra(&h.algebra);
    let inv = alg2.invert_element(&r.flatten())?;
    Ok(inv.to_tensor(&[n, n]))
}

fn fixed_equality(axiom: &str, lhs: &Tensor, rhs: &Tensor) -> CheckReport {
    let residual = lhs.sub(rhs);
    if residual.is_zero() {
        CheckReport::pass()
    } else {
        CheckReport::fail(axiom, vec![], residual)
    }
}

fn counit_normalizations(h: &HopfData, r: &Tensor, prefix: &str) -> CheckReport {
    let n = h.dim();
    let unit_t = h.unit().to_tensor(&[n]);
    fixed_equality(
        &format!("{}.counit.left", prefix),
        &r.apply_at(0, h.counit()),
        &unit_t,
    )
    .and_then(|| {
        fixed_equality(
            &format!("{}.counit.right", prefix),
            &r.apply_at(1, h.counit()),
            &unit_t,
        )
    })
}

/// Normalized 2-cocycle conditions for a copairing `R` in `H (x) H`:
/// counit normalizations plus
/// `r' R'_1 (x) r'' R'_2 (x) R'' = R' (x) r' R''_1 (x) r'' R''_2`.
pub fn check_harrison_cocycle(h: &HopfData, r: &Tensor) -> Result<CheckReport, HopfError> {
    invert_copairing(h, r)?;
    let m = h.mult();
    let lhs = r
        .apply_at(0, h.comult())
        .tensor(r)
        .permute(&[3, 0, 4, 1, 2])
        .apply_at(0, m)
        .apply_at(1, m);
    let rhs = r
        .apply_at(1, h.comult())
        .tensor(r)
        .permute(&[0, 3, 1, 4, 2])
        .apply_at(1, m)
        .apply_at(2, m);
    Ok(counit_normalizations(h, r, "harrison")
        .and_then(|| fixed_equality("harrison.cocycle", &lhs, &rhs)))
}

/// Copairing conditions making the twist a second brace coproduct:
/// first leg central, counit normalizations, and the two coproduct
/// splittings
/// `(delta (x) id)R = R'_i (x) r'_j (x) r''_j R''_i` and
/// `(id (x) delta)R = R'_i r'_j (x) R''_i (x) r''_j`.
pub fn check_long_copaired(h: &HopfData, r: &Tensor) -> Result<CheckReport, HopfError> {
    invert_copairing(h, r)?;
    let n = h.dim();
    let m = h.mult();
    let centrality = check_equality(
        "long.centrality",
        &[n],
        |t| {
            r.tensor(&h.algebra.basis_tensor(t))
                .permute(&[0, 2, 1])
                .apply_at(0, m)
        },
        |t| {
            r.tensor(&h.algebra.basis_tensor(t))
                .permute(&[2, 0, 1])
                .apply_at(0, m)
        },
    );
    let split_left = fixed_equality(
        "long.comult.left",
        &r.apply_at(0, h.comult()),
        &r.tensor(r).permute(&[0, 2, 3, 1]).apply_at(2, m),
    );
    let split_right = fixed_equality(
        "long.comult.right",
        &r.apply_at(1, h.comult()),
        &r.tensor(r).permute(&[0, 2, 1, 3]).apply_at(0, m),
    );
    Ok(centrality
        .and_then(|| counit_normalizations(h, r, "long"))
        .and_then(|| split_left)
        .and_then(|| split_right))
}

/// `delta_R(h) = R delta(h) R^{-1}` in the tensor-square algebra.
fn conjugated_comult(h: &HopfData, r: &Tensor, r_inv: &Tensor) -> StructureMap {
    let n = h.dim();
    let m = h.mult();
    StructureMap::from_fn(h.field(), vec![n], vec![n, n], |t| {
        r.tensor(&h.algebra.basis_tensor(t).apply_at(0, h.comult()))
            .tensor(r_inv)
            .permute(&[0, 2, 4, 1, 3, 5])
            .apply_at(0, m)
            .apply_at(0, m)
            .apply_at(1, m)
            .apply_at(1, m)
    })
}

/// `S_R(x) = u S(x) v` with `u = R'_i S(R''_i)` and
/// `v = S(R^{-1}'_j) R^{-1}''_j`.
fn twisted_antipode(h: &HopfData, r: &Tensor, r_inv: &Tensor) -> StructureMap {
    let n = h.dim();
    let m = h.mult();
    let u = r.apply_at(1, &h.antipode).apply_at(0, m);
    let v = r_inv.apply_at(0, &h.antipode).apply_at(0, m);
    StructureMap::from_fn(h.field(), vec![n], vec![n], |t| {
        u.tensor(&h.algebra.basis_tensor(t).apply_at(0, &h.antipode))
            .tensor(&v)
            .apply_at(0, m)
            .apply_at(0, m)
    })
}

/// The Hopf structure with the coproduct conjugated by a normalized
/// 2-cocycle copairing and the antipode twisted to match.
pub fn twist_comultiplication(h: &HopfData, r: &Tensor) -> Result<HopfData, HopfError> {
    let report = check_harrison_cocycle(h, r)?;
    if !report.passed() {
        return Err(HopfError::HarrisonCheckFailed(
            report.failed_axiom.unwrap_or_default(),
        ));
    }
    let r_inv = invert_copairing(h, r)?;
    Ok(HopfData {
        algebra: h.algebra.clone(),
        coalgebra: CoalgebraData {
            comult: conjugated_comult(h, r, &r_inv),
            counit: h.counit().clone(),
        },
        antipode: twisted_antipode(h, r, &r_inv),
    })
}

/// The brace pairing `delta` with its twist by a copairing that passes
/// [`check_long_copaired`].
pub fn long_brace(h: &HopfData, r: &Tensor) -> Result<BraceData, HopfError> {
    let report = check_long_copaired(h, r)?;
    if !report.passed() {
        return Err(HopfError::LongCheckFailed(
            report.failed_axiom.unwrap_or_default(),
        ));
    }
    let r_inv = invert_copairing(h, r)?;
    let comult2 = conjugated_comult(h, r, &r_inv);
    let antipode2 = twisted_antipode(h, r, &r_inv);
    BraceData::new(h.clone(), comult2, None, antipode2)
}

/// The identity element of `H (x) H` as a copairing.
pub fn unit_copairing(h: &HopfData) -> Tensor {
    let n = h.dim();
    h.unit().to_tensor(&[n]).tensor(&h.unit().to_tensor(&[n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::sweedler_h4;
    use crate::scalar::FieldSpec;
    use crate::zoo;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn trivial_and_cop_braces_on_h4_pass() {
        let h4 = sweedler_h4(q()).unwrap();
        assert!(trivial_brace(&h4).is_ok());
        assert!(cop_brace(&h4).is_ok());
    }

    #[test]
    fn cop_brace_equals_trivial_on_cocommutative() {
        let z3 = zoo::hopf("z3", q()).unwrap();
        let t = trivial_brace(&z3).unwrap();
        let c = cop_brace(&z3).unwrap();
        assert!(t.comult2.equal_tables(&c.comult2));
    }

    #[test]
    fn wrong_comult2_fails_check_brace() {
        let h4 = sweedler_h4(q()).unwrap();
        // diagonal coproduct is not a brace partner for delta: x is not
        // group-like, the second counit axiom already fails at x
        let diag = StructureMap::from_fn(q(), vec![4], vec![4, 4], |t| {
            Tensor::basis(vec![4, 4], vec![t[0], t[0]], q())
        });
        let b = BraceData::new_unchecked(h4.clone(), diag, h4.antipode.clone());
        let r = check_brace(&b);
        assert!(!r.passed());
        assert!(r.failed_axiom.unwrap().starts_with("second."));
    }

    #[test]
    fn counit_mismatch_is_rejected() {
        let z2 = zoo::hopf("z2", q()).unwrap();
        let zero_counit = StructureMap::new(q(), vec![2], vec![]);
        assert!(matches!(
            BraceData::new(
                z2.clone(),
                z2.comult().clone(),
                Some(&zero_counit),
                z2.antipode.clone()
            ),
            Err(HopfError::CounitMismatch(_))
        ));
    }

    #[test]
    fn rho_is_trivial_on_trivial_brace() {
        let h4 = sweedler_h4(q()).unwrap();
        let b = trivial_brace(&h4).unwrap();
        let rho = rho_coaction(&b).map;
        for i in 0..4 {
            let expected = b
                .hopf
                .unit()
                .to_tensor(&[4])
                .tensor(&Tensor::basis(vec![4], vec![i], q()));
            assert_eq!(rho.apply_basis(i).to_tensor(&[4, 4]), expected);
        }
    }

    #[test]
    fn phi_on_trivial_commutative_brace_matches_collapsed_formula() {
        // phi(a) = a_2 (x) S(a_1) a_3 when rho is trivial
        let z3 = zoo::hopf("z3", q()).unwrap();
        let b = trivial_brace(&z3).unwrap();
        let phi = phi_coaction(&b).unwrap().map;
        for i in 0..3 {
            let expected = z3
                .algebra
                .basis_tensor(&[i])
                .apply_at(0, z3.comult())
                .apply_at(1, z3.comult())
                .apply_at(0, &z3.antipode)
                .permute(&[1, 0, 2])
                .apply_at(1, z3.mult());
            assert_eq!(phi.apply_basis(i).to_tensor(&[3, 3]), expected);
        }
    }

    #[test]
    fn phi_refused_on_noncommutative() {
        let h4 = sweedler_h4(q()).unwrap();
        let b = trivial_brace(&h4).unwrap();
        assert!(matches!(phi_coaction(&b), Err(HopfError::NotCommutative)));
    }

    #[test]
    fn braid_of_trivial_brace_is_sigma_and_flip_when_cocommutative() {
        let z2 = zoo::hopf("z2", q()).unwrap();
        let b = trivial_brace(&z2).unwrap();
        let c = braid_operator(&b).unwrap();
        assert!(c.equal_tables(&sigma_map(&z2)));
        assert!(c.equal_tables(&StructureMap::flip(q(), 2, 2)));
        assert!(check_braid_equation(&c).passed());
    }

    #[test]
    fn gamma_is_identity_on_trivial_brace() {
        let z3 = zoo::hopf("z3", q()).unwrap();
        let b = trivial_brace(&z3).unwrap();
        let g = gamma_map(&b);
        assert!(g.equal_tables(&StructureMap::identity(q(), vec![3, 3])));
    }

    #[test]
    fn shear_operator_fails_braid_equation() {
        // the basis shear (x, y) -> (x + y, y) on kZ3 indices is bijective
        // but violates the braid equation whenever the last two legs differ
        let c = StructureMap::from_fn(q(), vec![3, 3], vec![3, 3], |t| {
            Tensor::basis(vec![3, 3], vec![(t[0] + t[1]) % 3, t[1]], q())
        });
        let r = check_braid_equation(&c);
        assert!(!r.passed());
        assert_eq!(r.witness, Some(vec![0, 0, 1]));
    }

    #[test]
    fn derived_identities_hold_on_h4_braces() {
        let h4 = sweedler_h4(q()).unwrap();
        for b in [trivial_brace(&h4).unwrap(), cop_brace(&h4).unwrap()] {
            assert!(check_antipode_exchange(&b).passed());
            assert!(check_cancellation(&b).passed());
            assert!(check_comult2_reconstruction(&b).passed());
            assert!(check_comult_reconstruction(&b).passed());
        }
    }

    #[test]
    fn rho_antipode_identity_on_commutative_brace() {
        let d = zoo::hopf("dual-s3", q()).unwrap();
        let b = cop_brace(&d).unwrap();
        assert!(b.is_commutative());
        assert!(check_rho_antipode(&b).passed());
    }

    #[test]
    fn unit_copairing_gives_trivial_twist() {
        let h4 = sweedler_h4(q()).unwrap();
        let r = unit_copairing(&h4);
        assert!(check_harrison_cocycle(&h4, &r).unwrap().passed());
        assert!(check_long_copaired(&h4, &r).unwrap().passed());
        let b = long_brace(&h4, &r).unwrap();
        assert!(b.comult2.equal_tables(h4.comult()));
    }

    #[test]
    fn normalization_failure_is_reported() {
        // R = 1 (x) g on kZ2: (eps (x) id)R = g != 1
        let z2 = zoo::hopf("z2", q()).unwrap();
        let r = Tensor::basis(vec![2, 2], vec![0, 1], q());
        let report = check_harrison_cocycle(&z2, &r).unwrap();
        assert!(!report.passed());
        assert_eq!(report.failed_axiom.as_deref(), Some("harrison.counit.left"));
    }

    #[test]
    fn z2_copairing_passes_and_twist_is_trivial() {
        let z2 = zoo::hopf("z2", q()).unwrap();
        let r = zoo::z2_copairing(q()).unwrap();
        // R is its own inverse
        assert_eq!(invert_copairing(&z2, &r).unwrap(), r);
        assert!(check_long_copaired(&z2, &r).unwrap().passed());
        let b = long_brace(&z2, &r).unwrap();
        assert!(b.comult2.equal_tables(z2.comult()));
    }
}
