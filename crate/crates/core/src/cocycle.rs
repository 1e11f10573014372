//! Bijective 1-cocycles: an algebra isomorphism `pi: A -> H` intertwining
//! the coproducts through a comodule-coalgebra coaction, and the two
//! functors translating between such cocycles and Hopf braces. The round
//! trips are exact table identities.

use crate::brace::{self, BraceData, CoactionData, CoactionSide};
use crate::error::HopfError;
use crate::hopf::{check_hopf_morphism, HopfData};
use crate::linalg::invert_map;
use crate::map::StructureMap;
use crate::matched::check_left_comodule_coalgebra;
use crate::report::{check_equality, CheckReport};
use crate::sparse::Tensor;

/// A bijective 1-cocycle `pi: A -> H` with its comodule coaction
/// `rho: A -> H (x) A`.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleData {
    pub a: HopfData,
    pub h: HopfData,
    pub pi: StructureMap,
    pub rho: CoactionData,
}

/// A morphism of bijective 1-cocycles `(src: B -> K) -> (dst: A -> H)`:
/// Hopf maps `f: K -> H` and `g: B -> A` compatible with the cocycles and
/// coactions.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleMorphism {
    pub f: StructureMap,
    pub g: StructureMap,
}

/// Everything the definition asks of a bijective 1-cocycle: `pi`
/// invertible, multiplicative, unital, counit-compatible; `rho` a
/// comodule-coalgebra coaction; and the cocycle identity
/// `pi(a)_1 (x) pi(a)_2 = pi(a_1) a_2(-1) (x) pi(a_2(0))`.
pub fn check_cocycle(c: &CocycleData) -> CheckReport {
    let (a, h) = (&c.a, &c.h);
    let (na, nh) = (a.dim(), h.dim());
    if invert_map(&c.pi).is_err() {
        return CheckReport::fail("pi.invertible", vec![], Tensor::zero(vec![]));
    }
    check_equality(
        "pi.multiplicative",
        &[na, na],
        |t| a.algebra.basis_tensor(t).apply_at(0, a.mult()).apply_at(0, &c.pi),
        |t| {
            a.algebra
                .basis_tensor(t)
                .apply_at(0, &c.pi)
                .apply_at(1, &c.pi)
                .apply_at(0, h.mult())
        },
    )
    .and_then(|| {
        let residual = a
            .unit()
            .to_tensor(&[na])
            .apply_at(0, &c.pi)
            .sub(&h.unit().to_tensor(&[nh]));
        if residual.is_zero() {
            CheckReport::pass()
        } else {
            CheckReport::fail("pi.unital", vec![], residual)
        }
    })
    .and_then(|| {
        check_equality(
            "pi.counit",
            &[na],
            |t| a.algebra.basis_tensor(t).apply_at(0, &c.pi).apply_at(0, h.counit()),
            |t| a.algebra.basis_tensor(t).apply_at(0, a.counit()),
        )
    })
    .and_then(|| check_left_comodule_coalgebra(h, &a.coalgebra, &c.rho.map))
    .and_then(|| {
        check_equality(
            "cocycle.identity",
            &[na],
            |t| a.algebra.basis_tensor(t).apply_at(0, &c.pi).apply_at(0, h.comult()),
            |t| {
                a.algebra
                    .basis_tensor(t)
                    .apply_at(0, a.comult())
                    .apply_at(1, &c.rho.map)
                    .apply_at(0, &c.pi)
                    .apply_at(2, &c.pi)
                    .apply_at(0, h.mult())
            },
        )
    })
}

/// Forward functor: a brace becomes the identity cocycle between its two
/// halves, with the canonical coaction.
pub fn brace_to_cocycle(b: &BraceData) -> Result<CocycleData, HopfError> {
    let report = brace::check_brace(b);
    if !report.passed() {
        return Err(HopfError::BraceCheckFailed(
            report.failed_axiom.unwrap_or_default(),
        ));
    }
    Ok(CocycleData {
        a: b.hopf.clone(),
        h: b.hopf2(),
        pi: StructureMap::identity(b.hopf.field(), vec![b.dim()]),
        rho: brace::rho_coaction(b),
    })
}

/// Backward functor: a cocycle becomes the brace on A whose second
/// coproduct is the pullback of H's along `pi`, with `T = pi^{-1} S pi`.
pub fn cocycle_to_brace(c: &CocycleData) -> Result<BraceData, HopfError> {
    let report = check_cocycle(c);
    if !report.passed() {
        return Err(HopfError::CocycleCheckFailed(
            report.failed_axiom.unwrap_or_default(),
        ));
    }
    let pi_inv = invert_map(&c.pi)?;
    let comult2 = pi_inv
        .tensor(&pi_inv)
        .compose(&c.h.comult().compose(&c.pi)?)?;
    let antipode2 = pi_inv.compose(&c.h.antipode.compose(&c.pi)?)?;
    BraceData::new(c.a.clone(), comult2, None, antipode2)
}

/// Morphism conditions: `f` and `g` are Hopf maps, the squares
/// `pi_dst g = f pi_src` and `rho_dst g = (f (x) g) rho_src` commute.
pub fn check_cocycle_morphism(
    m: &CocycleMorphism,
    src: &CocycleData,
    dst: &CocycleData,
) -> CheckReport {
    let nb = src.a.dim();
    check_hopf_morphism(&src.h, &dst.h, &m.f)
        .prefixed("f")
        .and_then(|| check_hopf_morphism(&src.a, &dst.a, &m.g).prefixed("g"))
        .and_then(|| {
            check_equality(
                "compat.pi",
                &[nb],
                |t| src.a.algebra.basis_tensor(t).apply_at(0, &m.g).apply_at(0, &dst.pi),
                |t| src.a.algebra.basis_tensor(t).apply_at(0, &src.pi).apply_at(0, &m.f),
            )
        })
        .and_then(|| {
            check_equality(
                "compat.rho",
                &[nb],
                |t| src.a.algebra.basis_tensor(t).apply_at(0, &m.g).apply_at(0, &dst.rho.map),
                |t| {
                    src.a
                        .algebra
                        .basis_tensor(t)
                        .apply_at(0, &src.rho.map)
                        .apply_at(0, &m.f)
                        .apply_at(1, &m.g)
                },
            )
        })
}

/// The identity cocycle of a Hopf algebra: `pi = id` with the trivial
/// coaction `rho(a) = 1 (x) a`.
pub fn identity_cocycle(h: &HopfData) -> CocycleData {
    let n = h.dim();
    let rho = StructureMap::from_fn(h.field(), vec![n], vec![n, n], |t| {
        h.unit()
            .to_tensor(&[n])
            .tensor(&Tensor::basis(vec![n], vec![t[0]], h.field()))
    });
    CocycleData {
        a: h.clone(),
        h: h.clone(),
        pi: StructureMap::identity(h.field(), vec![n]),
        rho: CoactionData { side: CoactionSide::Left, map: rho },
    }
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
    fn identity_cocycle_on_h4_passes() {
        let h4 = sweedler_h4(q()).unwrap();
        assert!(check_cocycle(&identity_cocycle(&h4)).passed());
    }

    #[test]
    fn forward_functor_output_passes() {
        let h4 = sweedler_h4(q()).unwrap();
        let b = brace::cop_brace(&h4).unwrap();
        let c = brace_to_cocycle(&b).unwrap();
        assert!(check_cocycle(&c).passed());
    }

    #[test]
    fn wrong_leg_rho_fails_comodule_axiom() {
        let h4 = sweedler_h4(q()).unwrap();
        let mut c = identity_cocycle(&h4);
        c.rho.map = StructureMap::from_fn(q(), vec![4], vec![4, 4], |t| {
            Tensor::basis(vec![4], vec![t[0]], q()).tensor(&h4.unit().to_tensor(&[4]))
        });
        let r = check_cocycle(&c);
        assert!(!r.passed());
        assert!(r.failed_axiom.unwrap().starts_with("rho."));
    }

    #[test]
    fn round_trip_brace_to_brace() {
        for name in ["h4", "dual-s3", "z3"] {
            let h = zoo::hopf(name, q()).unwrap();
            let b = brace::cop_brace(&h).unwrap();
            let b2 = cocycle_to_brace(&brace_to_cocycle(&b).unwrap()).unwrap();
            assert!(b2.comult2.equal_tables(&b.comult2), "{}", name);
            assert!(b2.antipode2.equal_tables(&b.antipode2), "{}", name);
            assert!(b2.hopf.comult().equal_tables(b.hopf.comult()), "{}", name);
        }
    }

    #[test]
    fn round_trip_cocycle_to_cocycle() {
        let h4 = sweedler_h4(q()).unwrap();
        let c = brace_to_cocycle(&brace::cop_brace(&h4).unwrap()).unwrap();
        let c2 = brace_to_cocycle(&cocycle_to_brace(&c).unwrap()).unwrap();
        assert!(c2.pi.equal_tables(&c.pi));
        assert!(c2.rho.map.equal_tables(&c.rho.map));
        assert!(c2.h.comult().equal_tables(c.h.comult()));
    }

    #[test]
    fn identity_morphism_passes() {
        let h4 = sweedler_h4(q()).unwrap();
        let c = identity_cocycle(&h4);
        let id = StructureMap::identity(q(), vec![4]);
        let m = CocycleMorphism { f: id.clone(), g: id };
        assert!(check_cocycle_morphism(&m, &c, &c).passed());
    }

    #[test]
    fn antipode_as_g_fails_pi_square() {
        // on kZ3 the antipode is an algebra map, but id . S != id . id
        let z3 = zoo::hopf("z3", q()).unwrap();
        let c = identity_cocycle(&z3);
        let m = CocycleMorphism {
            f: StructureMap::identity(q(), vec![3]),
            g: z3.antipode.clone(),
        };
        let r = check_cocycle_morphism(&m, &c, &c);
        assert!(!r.passed());
        assert_eq!(r.failed_axiom.as_deref(), Some("compat.pi"));
    }
}
