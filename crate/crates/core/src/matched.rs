//! Hopf matched pairs: a pair (A, H) with a left coaction
//! `rho: A -> H (x) A` and a right coaction `phi: H -> H (x) A` subject to
//! four compatibilities, weak R-matrices producing such pairs, and the
//! correspondence between matched pairs with A = H and commutative Hopf
//! braces.

use crate::brace::{self, BraceData};
use crate::error::HopfError;
use crate::hopf::{AlgebraData, CoalgebraData, HopfData};
use crate::map::StructureMap;
use crate::report::{check_equality, CheckReport};
use crate::sparse::Tensor;

/// A Hopf matched pair. `rho` coacts on A with the H leg first; `phi`
/// coacts on H with the A leg last. `roles_swapped` records that the pair
/// came from a weak R-matrix given in the opposite order.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchedPairData {
    pub a: HopfData,
    pub h: HopfData,
    /// 1 -> 2, `A -> H (x) A`.
    pub rho: StructureMap,
    /// 1 -> 2, `H -> H (x) A`.
    pub phi: StructureMap,
    pub roles_swapped: bool,
}

/// An invertible element of `H (x) A` whose coproduct splittings make the
/// conjugation coactions a matched pair.
#[derive(Clone, Debug, PartialEq)]
pub struct WeakRMatrix {
    pub r: Tensor,
    pub r_inv: Tensor,
}

impl WeakRMatrix {
    /// Inverts `r` in the tensor algebra `H (x) A`.
    pub fn new(h: &HopfData, a: &HopfData, r: Tensor) -> Result<Self, HopfError> {
        let alg = h.algebra.tensor_algebra(&a.algebra);
        let r_inv = alg
            .invert_element(&r.flatten())?
            .to_tensor(&[h.dim(), a.dim()]);
        Ok(WeakRMatrix { r, r_inv })
    }
}

// ---------------------------------------------------------------------------
// generic comodule checkers
// ---------------------------------------------------------------------------

/// Left comodule axioms for `rho: C -> H (x) C`.
pub fn check_left_comodule(h: &HopfData, rho: &StructureMap) -> CheckReport {
    let field = rho.field();
    let nc = rho.in_dims()[0];
    let basis = |t: &[usize]| Tensor::basis(vec![nc], t.to_vec(), field);
    check_equality(
        "rho.coassoc",
        &[nc],
        |t| basis(t).apply_at(0, rho).apply_at(0, h.comult()),
        |t| basis(t).apply_at(0, rho).apply_at(1, rho),
    )
    .and_then(|| {
        check_equality(
            "rho.counit",
            &[nc],
            |t| basis(t).apply_at(0, rho).apply_at(0, h.counit()),
            |t| basis(t),
        )
    })
}

/// Right comodule axioms for `phi: C -> C (x) A`.
pub fn check_right_comodule(a: &HopfData, phi: &StructureMap) -> CheckReport {
    let field = phi.field();
    let nc = phi.in_dims()[0];
    let basis = |t: &[usize]| Tensor::basis(vec![nc], t.to_vec(), field);
    check_equality(
        "phi.coassoc",
        &[nc],
        |t| basis(t).apply_at(0, phi).apply_at(0, phi),
        |t| basis(t).apply_at(0, phi).apply_at(1, a.comult()),
    )
    .and_then(|| {
        check_equality(
            "phi.counit",
            &[nc],
            |t| basis(t).apply_at(0, phi).apply_at(1, a.counit()),
            |t| basis(t),
        )
    })
}

/// Left comodule plus: `rho` is an algebra map into `H (x) C`.
pub fn check_left_comodule_algebra(
    h: &HopfData,
    c: &AlgebraData,
    rho: &StructureMap,
) -> CheckReport {
    let nc = c.dim;
    check_left_comodule(h, rho)
        .and_then(|| {
            check_equality(
                "rho.multiplicative",
                &[nc, nc],
                |t| c.basis_tensor(t).apply_at(0, &c.mult).apply_at(0, rho),
                |t| {
                    c.basis_tensor(t)
                        .apply_at(0, rho)
                        .apply_at(2, rho)
                        .permute(&[0, 2, 1, 3])
                        .apply_at(0, h.mult())
                        .apply_at(1, &c.mult)
                },
            )
        })
        .and_then(|| {
            let lhs = c.unit.to_tensor(&[nc]).apply_at(0, rho);
            let rhs = h.unit().to_tensor(&[h.dim()]).tensor(&c.unit.to_tensor(&[nc]));
            fixed("rho.unital", &lhs, &rhs)
        })
}

/// Right comodule plus: `phi` is an algebra map into `C (x) A`.
pub fn check_right_comodule_algebra(
    a: &HopfData,
    c: &AlgebraData,
    phi: &StructureMap,
) -> CheckReport {
    let nc = c.dim;
    check_right_comodule(a, phi)
        .and_then(|| {
            check_equality(
                "phi.multiplicative",
                &[nc, nc],
                |t| c.basis_tensor(t).apply_at(0, &c.mult).apply_at(0, phi),
                |t| {
                    c.basis_tensor(t)
                        .apply_at(0, phi)
                        .apply_at(2, phi)
                        .permute(&[0, 2, 1, 3])
                        .apply_at(0, &c.mult)
                        .apply_at(1, a.mult())
                },
            )
        })
        .and_then(|| {
            let lhs = c.unit.to_tensor(&[nc]).apply_at(0, phi);
            let rhs = c.unit.to_tensor(&[nc]).tensor(&a.unit().to_tensor(&[a.dim()]));
            fixed("phi.unital", &lhs, &rhs)
        })
}

/// Left comodule plus: `rho` respects the coalgebra structure of the
/// carrier, `(id (x) delta_C) rho(c) = c_1(-1) c_2(-1) (x) c_1(0) (x) c_2(0)`
/// and `(id (x) eps_C) rho(c) = eps_C(c) 1_H`.
pub fn check_left_comodule_coalgebra(
    h: &HopfData,
    c: &CoalgebraData,
    rho: &StructureMap,
) -> CheckReport {
    let field = rho.field();
    let nc = rho.in_dims()[0];
    let basis = |t: &[usize]| Tensor::basis(vec![nc], t.to_vec(), field);
    check_left_comodule(h, rho)
        .and_then(|| {
            check_equality(
                "rho.comult",
                &[nc],
                |t| basis(t).apply_at(0, rho).apply_at(1, &c.comult),
                |t| {
                    basis(t)
                        .apply_at(0, &c.comult)
                        .apply_at(0, rho)
                        .apply_at(2, rho)
                        .permute(&[0, 2, 1, 3])
                        .apply_at(0, h.mult())
                },
            )
        })
        .and_then(|| {
            check_equality(
                "rho.counit.carrier",
                &[nc],
                |t| basis(t).apply_at(0, rho).apply_at(1, &c.counit),
                |t| {
                    let eps = basis(t).apply_at(0, &c.counit).as_scalar(field);
                    h.unit().to_tensor(&[h.dim()]).scale(&eps)
                },
            )
        })
}

/// Left comodule whose coaction is both an algebra and a coalgebra map.
pub fn check_left_comodule_bialgebra(h: &HopfData, c: &HopfData, rho: &StructureMap) -> CheckReport {
    check_left_comodule_algebra(h, &c.algebra, rho)
        .and_then(|| check_left_comodule_coalgebra(h, &c.coalgebra, rho))
}

fn fixed(axiom: &str, lhs: &Tensor, rhs: &Tensor) -> CheckReport {
    let residual = lhs.sub(rhs);
    if residual.is_zero() {
        CheckReport::pass()
    } else {
        CheckReport::fail(axiom, vec![], residual)
    }
}

// ---------------------------------------------------------------------------
// matched pair axioms
// ---------------------------------------------------------------------------

/// Comodule-algebra axioms on both sides plus the four pair
/// compatibilities: counit normalizations, the two mixed coproduct
/// splittings, and the coaction commutation law.
pub fn check_matched_pair(mp: &MatchedPairData) -> CheckReport {
    let (a, h) = (&mp.a, &mp.h);
    let (na, nh) = (a.dim(), h.dim());
    check_left_comodule_algebra(h, &a.algebra, &mp.rho)
        .and_then(|| check_right_comodule_algebra(a, &h.algebra, &mp.phi))
        .and_then(|| {
            // a_(-1) eps(a_(0)) = eps(a) 1_H
            check_equality(
                "counit.normalization.rho",
                &[na],
                |t| a.algebra.basis_tensor(t).apply_at(0, &mp.rho).apply_at(1, a.counit()),
                |t| {
                    let eps = a.algebra.basis_tensor(t).apply_at(0, a.counit());
                    h.unit().to_tensor(&[nh]).scale(&eps.as_scalar(a.field()))
                },
            )
        })
        .and_then(|| {
            // eps(h_[0]) h_[1] = eps(h) 1_A
            check_equality(
                "counit.normalization.phi",
                &[nh],
                |t| h.algebra.basis_tensor(t).apply_at(0, &mp.phi).apply_at(0, h.counit()),
                |t| {
                    let eps = h.algebra.basis_tensor(t).apply_at(0, h.counit());
                    a.unit().to_tensor(&[na]).scale(&eps.as_scalar(h.field()))
                },
            )
        })
        .and_then(|| {
            // a_(-1) (x) a_(0)1 (x) a_(0)2
            //   = a_1(-1) a_2(-1)[0] (x) a_1(0) a_2(-1)[1] (x) a_2(0)
            check_equality(
                "mixed.comult.rho",
                &[na],
                |t| {
                    a.algebra
                        .basis_tensor(t)
                        .apply_at(0, &mp.rho)
                        .apply_at(1, a.comult())
                },
                |t| {
                    a.algebra
                        .basis_tensor(t)
                        .apply_at(0, a.comult())
                        .apply_at(0, &mp.rho)
                        .apply_at(2, &mp.rho)
                        .apply_at(2, &mp.phi)
                        .permute(&[0, 2, 1, 3, 4])
                        .apply_at(0, h.mult())
                        .apply_at(1, a.mult())
                },
            )
        })
        .and_then(|| {
            // h_[0]1 (x) h_[0]2 (x) h_[1]
            //   = h_1[0] (x) h_1[1](-1) h_2[0] (x) h_1[1](0) h_2[1]
            check_equality(
                "mixed.comult.phi",
                &[nh],
                |t| {
                    h.algebra
                        .basis_tensor(t)
                        .apply_at(0, &mp.phi)
                        .apply_at(0, h.comult())
                },
                |t| {
                    h.algebra
                        .basis_tensor(t)
                        .apply_at(0, h.comult())
                        .apply_at(0, &mp.phi)
                        .apply_at(2, &mp.phi)
                        .apply_at(1, &mp.rho)
                        .permute(&[0, 1, 3, 2, 4])
                        .apply_at(1, h.mult())
                        .apply_at(2, a.mult())
                },
            )
        })
        .and_then(|| {
            // h_[0] a_(-1) (x) h_[1] a_(0) = a_(-1) h_[0] (x) a_(0) h_[1]
            let expand = |t: &[usize]| {
                Tensor::basis(vec![nh], vec![t[0]], h.field())
                    .apply_at(0, &mp.phi)
                    .tensor(
                        &Tensor::basis(vec![na], vec![t[1]], a.field()).apply_at(0, &mp.rho),
                    )
            };
            check_equality(
                "coaction.commutation",
                &[nh, na],
                |t| {
                    expand(t)
                        .permute(&[0, 2, 1, 3])
                        .apply_at(0, h.mult())
                        .apply_at(1, a.mult())
                },
                |t| {
                    expand(t)
                        .permute(&[2, 0, 3, 1])
                        .apply_at(0, h.mult())
                        .apply_at(1, a.mult())
                },
            )
        })
}

/// The pair with `rho(a) = 1 (x) a` and `phi(h) = h (x) 1`.
pub fn trivial_matched_pair(a: &HopfData, h: &HopfData) -> MatchedPairData {
    let (na, nh) = (a.dim(), h.dim());
    let rho = StructureMap::from_fn(a.field(), vec![na], vec![nh, na], |t| {
        h.unit()
            .to_tensor(&[nh])
            .tensor(&Tensor::basis(vec![na], vec![t[0]], a.field()))
    });
    let phi = StructureMap::from_fn(h.field(), vec![nh], vec![nh, na], |t| {
        Tensor::basis(vec![nh], vec![t[0]], h.field()).tensor(&a.unit().to_tensor(&[na]))
    });
    MatchedPairData { a: a.clone(), h: h.clone(), rho, phi, roles_swapped: false }
}

// ---------------------------------------------------------------------------
// weak R-matrices
// ---------------------------------------------------------------------------

/// Invertibility plus the two coproduct splittings
/// `(delta_H (x) id)R = R'_i (x) r'_j (x) R''_i r''_j` and
/// `(id (x) delta_A)R = R'_i r'_j (x) r''_j (x) R''_i`.
pub fn check_weak_rmatrix(h: &HopfData, a: &HopfData, r: &Tensor) -> CheckReport {
    if WeakRMatrix::new(h, a, r.clone()).is_err() {
        return CheckReport::fail("rmatrix.invertible", vec![], r.clone());
    }
    let split_h = fixed(
        "rmatrix.comult.left",
        &r.apply_at(0, h.comult()),
        &r.tensor(r).permute(&[0, 2, 1, 3]).apply_at(2, a.mult()),
    );
    let split_a = fixed(
        "rmatrix.comult.right",
        &r.apply_at(1, a.comult()),
        &r.tensor(r).permute(&[0, 2, 3, 1]).apply_at(0, h.mult()),
    );
    split_h.and_then(|| split_a)
}

/// Matched pair from a weak R-matrix `R` in `H (x) A` by conjugation in
/// `A (x) H`: `rho(h) = t(R)(1 (x) h)t(R^{-1})` and
/// `phi(a) = t(R)(a (x) 1)t(R^{-1})` with `t` the flip.
///
/// The output follows the (A, H) convention of [`MatchedPairData`], which
/// swaps the roles relative to the input order: the returned `a` is the
/// input `h` and vice versa. `roles_swapped` records this.
pub fn matched_from_rmatrix(
    h: &HopfData,
    a: &HopfData,
    rm: &WeakRMatrix,
) -> Result<MatchedPairData, HopfError> {
    let report = check_weak_rmatrix(h, a, &rm.r);
    if !report.passed() {
        return Err(HopfError::RMatrixCheckFailed(
            report.failed_axiom.unwrap_or_default(),
        ));
    }
    let (nh, na) = (h.dim(), a.dim());
    // the ambient algebra A (x) H in which the conjugation happens
    let amb = a.algebra.tensor_algebra(&h.algebra);
    let tau_r = rm.r.permute(&[1, 0]).flatten();
    let tau_r_inv = rm.r_inv.permute(&[1, 0]).flatten();
    let rho = StructureMap::from_fn(h.field(), vec![nh], vec![na, nh], |t| {
        let mid = a
            .unit()
            .to_tensor(&[na])
            .tensor(&Tensor::basis(vec![nh], vec![t[0]], h.field()))
            .flatten();
        amb.mul(&amb.mul(&tau_r, &mid), &tau_r_inv).to_tensor(&[na, nh])
    });
    let phi = StructureMap::from_fn(a.field(), vec![na], vec![na, nh], |t| {
        let mid = Tensor::basis(vec![na], vec![t[0]], a.field())
            .tensor(&h.unit().to_tensor(&[nh]))
            .flatten();
        amb.mul(&amb.mul(&tau_r, &mid), &tau_r_inv).to_tensor(&[na, nh])
    });
    let mp = MatchedPairData {
        a: h.clone(),
        h: a.clone(),
        rho,
        phi,
        roles_swapped: true,
    };
    let report = check_matched_pair(&mp);
    if !report.passed() {
        return Err(HopfError::RMatrixCheckFailed(
            report.failed_axiom.unwrap_or_default(),
        ));
    }
    Ok(mp)
}

// ---------------------------------------------------------------------------
// brace correspondence
// ---------------------------------------------------------------------------

/// The matched pair (A', A') of a commutative brace: both objects are the
/// second Hopf half, with the canonical coactions.
pub fn brace_to_matched(b: &BraceData) -> Result<MatchedPairData, HopfError> {
    if !b.is_commutative() {
        return Err(HopfError::NotCommutative);
    }
    let report = brace::check_brace(b);
    if !report.passed() {
        return Err(HopfError::BraceCheckFailed(
            report.failed_axiom.unwrap_or_default(),
        ));
    }
    let half2 = b.hopf2();
    Ok(MatchedPairData {
        a: half2.clone(),
        h: half2,
        rho: brace::rho_coaction(b).map,
        phi: brace::phi_coaction(b)?.map,
        roles_swapped: false,
    })
}

/// For pairs with A = H: the coproduct of A factors through the coactions,
/// `delta(a) = a_1(-1) a_2[0] (x) a_1(0) a_2[1]`.
pub fn check_coproduct_factorization(mp: &MatchedPairData) -> Result<CheckReport, HopfError> {
    if mp.a != mp.h {
        return Err(HopfError::RolesDiffer);
    }
    let a = &mp.a;
    let n = a.dim();
    Ok(check_equality(
        "coproduct.factorization",
        &[n],
        |t| a.algebra.basis_tensor(t).apply_at(0, a.comult()),
        |t| {
            a.algebra
                .basis_tensor(t)
                .apply_at(0, a.comult())
                .apply_at(0, &mp.rho)
                .apply_at(2, &mp.phi)
                .permute(&[0, 2, 1, 3])
                .apply_at(0, a.mult())
                .apply_at(1, a.mult())
        },
    ))
}

/// Rebuilds the commutative brace of a matched pair with A = H: the first
/// coproduct is `delta(a) = a_1' T(a_2'(-1)) (x) a_2'(0)` and its antipode
/// `S(a) = a_(-1) T(a_(0))`; the given coproduct becomes the second half.
pub fn matched_to_brace(mp: &MatchedPairData) -> Result<BraceData, HopfError> {
    if mp.a != mp.h {
        return Err(HopfError::RolesDiffer);
    }
    if !mp.a.is_commutative() {
        return Err(HopfError::NotCommutative);
    }
    let report = check_matched_pair(mp);
    if !report.passed() {
        return Err(HopfError::MatchedCheckFailed(
            report.failed_axiom.unwrap_or_default(),
        ));
    }
    let report = check_coproduct_factorization(mp)?;
    if !report.passed() {
        return Err(HopfError::CoproductFactorizationFailed(
            report.failed_axiom.unwrap_or_default(),
        ));
    }
    let a = &mp.a;
    let n = a.dim();
    let t_map = &a.antipode;
    let comult = StructureMap::from_fn(a.field(), vec![n], vec![n, n], |t| {
        a.algebra
            .basis_tensor(t)
            .apply_at(0, a.comult())
            .apply_at(1, &mp.rho)
            .apply_at(1, t_map)
            .apply_at(0, a.mult())
    });
    let antipode = StructureMap::from_fn(a.field(), vec![n], vec![n], |t| {
        a.algebra
            .basis_tensor(t)
            .apply_at(0, &mp.rho)
            .apply_at(1, t_map)
            .apply_at(0, a.mult())
    });
    let hopf1 = HopfData {
        algebra: a.algebra.clone(),
        coalgebra: CoalgebraData { comult, counit: a.counit().clone() },
        antipode,
    };
    BraceData::new(hopf1, a.comult().clone(), None, a.antipode.clone())
}

/// `rho` of the pair equals the canonical coaction of the rebuilt brace.
pub fn check_rho_reconstruction(mp: &MatchedPairData, b: &BraceData) -> CheckReport {
    let canonical = brace::rho_coaction(b).map;
    if mp.rho.equal_tables(&canonical) {
        CheckReport::pass()
    } else {
        CheckReport::fail("rho.reconstruction", vec![], Tensor::zero(vec![]))
    }
}

/// `(id (x) delta) rho(a) = a_1(-1) a_2(-1) (x) a_1(0) (x) a_2(0)` for the
/// rebuilt first coproduct `delta`.
pub fn check_rho_mixed_coassociativity(
    mp: &MatchedPairData,
    delta: &StructureMap,
) -> CheckReport {
    let a = &mp.a;
    let n = a.dim();
    check_equality(
        "rho.mixed.coassoc",
        &[n],
        |t| a.algebra.basis_tensor(t).apply_at(0, &mp.rho).apply_at(1, delta),
        |t| {
            a.algebra
                .basis_tensor(t)
                .apply_at(0, delta)
                .apply_at(0, &mp.rho)
                .apply_at(2, &mp.rho)
                .permute(&[0, 2, 1, 3])
                .apply_at(0, a.mult())
        },
    )
}
