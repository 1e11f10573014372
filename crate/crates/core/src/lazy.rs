//! Locally finite Hopf data on the Laurent monomial basis g^a x^b of
//! k[g, g^-1, x]: structure maps are closed-form functions returning
//! finite linear combinations, so every axiom can be checked exactly at
//! any chosen monomial with no truncation.
//!
//! The brace carried here has Delta(x) = x (x) 1 + 1 (x) x and
//! Delta'(x) = x (x) 1 + g (x) x, both extended as algebra maps, with
//! S(x) = -x and T(x) = -g^-1 x.

use std::collections::BTreeMap;

use crate::report::{CheckReport, CheckStatus};
use crate::scalar::{FieldSpec, Scalar};
use crate::sparse::Tensor;

/// A monomial g^a x^b; the algebra is commutative, so this basis is
/// closed under multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LaurentMonomial {
    pub a: i64,
    pub b: u64,
}

impl LaurentMonomial {
    pub fn new(a: i64, b: u64) -> Self {
        LaurentMonomial { a, b }
    }

    pub fn one() -> Self {
        LaurentMonomial { a: 0, b: 0 }
    }

    pub fn label(&self) -> String {
        format!("g^{}x^{}", self.a, self.b)
    }
}

/// A finite linear combination of tuples of monomials: the lazy analogue
/// of a sparse tensor with a fixed number of legs.
#[derive(Clone, Debug, PartialEq)]
pub struct LazyTensor {
    pub field: FieldSpec,
    pub arity: usize,
    entries: BTreeMap<Vec<LaurentMonomial>, Scalar>,
}

impl LazyTensor {
    pub fn zero(field: FieldSpec, arity: usize) -> Self {
        LazyTensor { field, arity, entries: BTreeMap::new() }
    }

    pub fn basis(field: FieldSpec, monomials: Vec<LaurentMonomial>) -> Self {
        let arity = monomials.len();
        let mut t = LazyTensor::zero(field, arity);
        t.add_entry(monomials, Scalar::one(field));
        t
    }

    pub fn add_entry(&mut self, key: Vec<LaurentMonomial>, coeff: Scalar) {
        assert_eq!(key.len(), self.arity);
        let updated = match self.entries.get(&key) {
            Some(existing) => existing.add(&coeff),
            None => coeff,
        };
        if updated.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, updated);
        }
    }

    pub fn add(&self, other: &LazyTensor) -> LazyTensor {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_entry(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &LazyTensor) -> LazyTensor {
        self.add(&other.scale(&Scalar::one(self.field).neg()))
    }

    pub fn scale(&self, s: &Scalar) -> LazyTensor {
        let mut out = LazyTensor::zero(self.field, self.arity);
        for (k, v) in &self.entries {
            out.add_entry(k.clone(), v.mul(s));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<LaurentMonomial>, &Scalar)> {
        self.entries.iter()
    }

    pub fn permute(&self, perm: &[usize]) -> LazyTensor {
        assert_eq!(perm.len(), self.arity);
        let mut out = LazyTensor::zero(self.field, self.arity);
        for (k, v) in &self.entries {
            let key: Vec<LaurentMonomial> = perm.iter().map(|&j| k[j]).collect();
            out.add_entry(key, v.clone());
        }
        out
    }

    /// Replaces leg `at` by the legs of `f`'s output on that monomial,
    /// splicing them in place; the lazy Sweedler evaluation step.
    pub fn apply_at(&self, at: usize, f: impl Fn(&LaurentMonomial) -> LazyTensor) -> LazyTensor {
        let mut out: Option<LazyTensor> = None;
        for (k, v) in &self.entries {
            let image = f(&k[at]);
            let arity = self.arity - 1 + image.arity;
            let acc = out.get_or_insert_with(|| LazyTensor::zero(self.field, arity));
            for (ik, iv) in &image.entries {
                let mut key = Vec::with_capacity(arity);
                key.extend_from_slice(&k[..at]);
                key.extend_from_slice(ik);
                key.extend_from_slice(&k[at + 1..]);
                acc.add_entry(key, v.mul(iv));
            }
        }
        // the arity change of an empty tensor is unobservable; keep it
        out.unwrap_or_else(|| LazyTensor::zero(self.field, self.arity))
    }

    /// Multiplies legs `at` and `at + 1` (exponents add).
    pub fn multiply_at(&self, at: usize) -> LazyTensor {
        let mut out = LazyTensor::zero(self.field, self.arity - 1);
        for (k, v) in &self.entries {
            let mut key = k.clone();
            let m = LaurentMonomial::new(k[at].a + k[at + 1].a, k[at].b + k[at + 1].b);
            key.splice(at..at + 2, [m]);
            out.add_entry(key, v.clone());
        }
        out
    }

    /// Applies the counit (1 at b = 0, else 0) to leg `at`.
    pub fn counit_at(&self, at: usize) -> LazyTensor {
        let mut out = LazyTensor::zero(self.field, self.arity - 1);
        for (k, v) in &self.entries {
            if k[at].b == 0 {
                let mut key = k.clone();
                key.remove(at);
                out.add_entry(key, v.clone());
            }
        }
        out
    }
}

fn binomial(field: FieldSpec, b: u64, k: u64) -> Scalar {
    let mut num = Scalar::one(field);
    for i in 0..k {
        let f = Scalar::from_i64(field, (b - i) as i64);
        let d = Scalar::from_i64(field, (i + 1) as i64);
        num = num.mul(&f).div(&d).unwrap();
    }
    num
}

/// The Laurent Hopf brace structure maps in closed form.
#[derive(Clone, Copy, Debug)]
pub struct LazyHopfData {
    pub field: FieldSpec,
}

/// Returns the Laurent brace over the given field.
pub fn laurent_brace(field: FieldSpec) -> LazyHopfData {
    LazyHopfData { field }
}

impl LazyHopfData {
    fn single(&self, m: LaurentMonomial) -> LazyTensor {
        LazyTensor::basis(self.field, vec![m])
    }

    pub fn one(&self) -> LazyTensor {
        self.single(LaurentMonomial::one())
    }

    pub fn mult(&self, m: &LaurentMonomial, n: &LaurentMonomial) -> LazyTensor {
        self.single(LaurentMonomial::new(m.a + n.a, m.b + n.b))
    }

    /// `Delta(g^a x^b) = sum_k C(b,k) g^a x^k (x) g^a x^(b-k)`.
    pub fn comult(&self, m: &LaurentMonomial) -> LazyTensor {
        let mut out = LazyTensor::zero(self.field, 2);
        for k in 0..=m.b {
            out.add_entry(
                vec![
                    LaurentMonomial::new(m.a, k),
                    LaurentMonomial::new(m.a, m.b - k),
                ],
                binomial(self.field, m.b, k),
            );
        }
        out
    }

    /// `Delta'(g^a x^b) = sum_k C(b,k) g^(a+b-k) x^k (x) g^a x^(b-k)`.
    pub fn comult_prime(&self, m: &LaurentMonomial) -> LazyTensor {
        let mut out = LazyTensor::zero(self.field, 2);
        for k in 0..=m.b {
            out.add_entry(
                vec![
                    LaurentMonomial::new(m.a + (m.b - k) as i64, k),
                    LaurentMonomial::new(m.a, m.b - k),
                ],
                binomial(self.field, m.b, k),
            );
        }
        out
    }

    pub fn counit(&self, m: &LaurentMonomial) -> Scalar {
        if m.b == 0 {
            Scalar::one(self.field)
        } else {
            Scalar::zero(self.field)
        }
    }

    /// `S(g^a x^b) = (-1)^b g^(-a) x^b`.
    pub fn antipode_s(&self, m: &LaurentMonomial) -> LazyTensor {
        let sign = if m.b % 2 == 0 { 1 } else { -1 };
        self.single(LaurentMonomial::new(-m.a, m.b))
            .scale(&Scalar::from_i64(self.field, sign))
    }

    /// `T(g^a x^b) = (-1)^b g^(-a-b) x^b`.
    pub fn antipode_t(&self, m: &LaurentMonomial) -> LazyTensor {
        let sign = if m.b % 2 == 0 { 1 } else { -1 };
        self.single(LaurentMonomial::new(-m.a - m.b as i64, m.b))
            .scale(&Scalar::from_i64(self.field, sign))
    }

    /// The canonical coaction `rho(h) = S(h_1) h_21' (x) h_22'`.
    pub fn rho(&self, m: &LaurentMonomial) -> LazyTensor {
        self.single(*m)
            .apply_at(0, |x| self.comult(x))
            .apply_at(1, |x| self.comult_prime(x))
            .apply_at(0, |x| self.antipode_s(x))
            .multiply_at(0)
    }
}

/// All monomials g^a x^b with |a| <= a_max and b <= b_max, in row-major
/// order of (a, b).
pub fn monomial_window(a_max: i64, b_max: u64) -> Vec<LaurentMonomial> {
    let mut out = Vec::new();
    for a in -a_max..=a_max {
        for b in 0..=b_max {
            out.push(LaurentMonomial::new(a, b));
        }
    }
    out
}

fn fail_at(axiom: &str, index: usize) -> CheckReport {
    // lazy residuals have no fixed finite basis; the witness index points
    // into the supplied test set
    CheckReport::fail(axiom, vec![index], Tensor::zero(vec![]))
}

/// Coalgebra, counit and antipode laws for one half at one monomial.
fn half_checks(
    l: &LazyHopfData,
    idx: usize,
    prefix: &str,
    comult: &impl Fn(&LaurentMonomial) -> LazyTensor,
    antipode: &impl Fn(&LaurentMonomial) -> LazyTensor,
    m: &LaurentMonomial,
) -> CheckReport {
    let start = l.single(*m);
    let lhs = start.apply_at(0, comult).apply_at(0, comult);
    let rhs = start.apply_at(0, comult).apply_at(1, comult);
    if !lhs.sub(&rhs).is_zero() {
        return fail_at(&format!("{}.coassociativity", prefix), idx);
    }
    let split = start.apply_at(0, comult);
    if !split.counit_at(0).sub(&start).is_zero() {
        return fail_at(&format!("{}.counit.left", prefix), idx);
    }
    if !split.counit_at(1).sub(&start).is_zero() {
        return fail_at(&format!("{}.counit.right", prefix), idx);
    }
    let target = l.one().scale(&l.counit(m));
    if !split.apply_at(0, antipode).multiply_at(0).sub(&target).is_zero() {
        return fail_at(&format!("{}.antipode.left", prefix), idx);
    }
    if !split.apply_at(1, antipode).multiply_at(0).sub(&target).is_zero() {
        return fail_at(&format!("{}.antipode.right", prefix), idx);
    }
    CheckReport::pass()
}

/// Per-monomial brace verification: both coalgebra halves with their
/// counit and antipode laws, and the brace compatibility
/// `h_1' (x) h_2'1 (x) h_2'2 = h_11' S(h_2) h_31' (x) h_12' (x) h_32'`,
/// each evaluated exactly. The witness indexes into `test_set`.
pub fn check_brace_on_monomials(l: &LazyHopfData, test_set: &[LaurentMonomial]) -> CheckReport {
    let comult = |m: &LaurentMonomial| l.comult(m);
    let comult_prime = |m: &LaurentMonomial| l.comult_prime(m);
    let antipode_s = |m: &LaurentMonomial| l.antipode_s(m);
    let antipode_t = |m: &LaurentMonomial| l.antipode_t(m);
    for (idx, m) in test_set.iter().enumerate() {
        let r = half_checks(l, idx, "first", &comult, &antipode_s, m);
        if r.status == CheckStatus::Fail {
            return r;
        }
        let r = half_checks(l, idx, "second", &comult_prime, &antipode_t, m);
        if r.status == CheckStatus::Fail {
            return r;
        }
        let start = l.single(*m);
        let lhs = start.apply_at(0, comult_prime).apply_at(1, comult);
        let rhs = start
            .apply_at(0, comult)
            .apply_at(0, comult)
            .apply_at(0, comult_prime)
            .apply_at(3, comult_prime)
            .apply_at(2, antipode_s)
            .permute(&[0, 2, 3, 1, 4])
            .multiply_at(0)
            .multiply_at(0);
        if !lhs.sub(&rhs).is_zero() {
            return fail_at("brace.compatibility", idx);
        }
    }
    CheckReport::pass()
}

/// `Delta'` is an algebra map on every pairwise product from `test_set`.
pub fn check_comult_prime_multiplicative(
    l: &LazyHopfData,
    test_set: &[LaurentMonomial],
) -> CheckReport {
    let comult_prime = |m: &LaurentMonomial| l.comult_prime(m);
    for (i, m) in test_set.iter().enumerate() {
        for n in test_set {
            let lhs = l.mult(m, n).apply_at(0, comult_prime);
            // legwise product of the two coproducts
            let dm = l.single(*m).apply_at(0, comult_prime);
            let dn = l.single(*n).apply_at(0, comult_prime);
            let mut prod = LazyTensor::zero(l.field, 2);
            for (km, vm) in dm.entries() {
                for (kn, vn) in dn.entries() {
                    prod.add_entry(
                        vec![
                            LaurentMonomial::new(km[0].a + kn[0].a, km[0].b + kn[0].b),
                            LaurentMonomial::new(km[1].a + kn[1].a, km[1].b + kn[1].b),
                        ],
                        vm.mul(vn),
                    );
                }
            }
            if !lhs.sub(&prod).is_zero() {
                return fail_at("comult.prime.multiplicative", i);
            }
        }
    }
    CheckReport::pass()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LazyHopfData {
        laurent_brace(FieldSpec::Rationals)
    }

    fn m(a: i64, b: u64) -> LaurentMonomial {
        LaurentMonomial::new(a, b)
    }

    #[test]
    fn comult_prime_of_x_matches_closed_form() {
        let l = q();
        // Delta'(x) = x (x) 1 + g (x) x
        let mut expect = LazyTensor::zero(l.field, 2);
        expect.add_entry(vec![m(0, 1), m(0, 0)], Scalar::one(l.field));
        expect.add_entry(vec![m(1, 0), m(0, 1)], Scalar::one(l.field));
        assert_eq!(l.comult_prime(&m(0, 1)), expect);
    }

    #[test]
    fn comult_prime_of_x_squared() {
        let l = q();
        // x^2 (x) 1 + 2 gx (x) x + g^2 (x) x^2
        let mut expect = LazyTensor::zero(l.field, 2);
        expect.add_entry(vec![m(0, 2), m(0, 0)], Scalar::one(l.field));
        expect.add_entry(vec![m(1, 1), m(0, 1)], Scalar::from_i64(l.field, 2));
        expect.add_entry(vec![m(2, 0), m(0, 2)], Scalar::one(l.field));
        assert_eq!(l.comult_prime(&m(0, 2)), expect);
    }

    #[test]
    fn group_likes_are_group_like_in_both_halves() {
        let l = q();
        for a in -2..=2 {
            let g = m(a, 0);
            let expect = LazyTensor::basis(l.field, vec![g, g]);
            assert_eq!(l.comult(&g), expect);
            assert_eq!(l.comult_prime(&g), expect);
        }
    }

    #[test]
    fn compatibility_at_x_expands_to_three_terms() {
        let l = q();
        // both sides of the compatibility at x equal
        // x (x) 1 (x) 1 + g (x) x (x) 1 + g (x) 1 (x) x
        let lhs = l
            .single(m(0, 1))
            .apply_at(0, |v| l.comult_prime(v))
            .apply_at(1, |v| l.comult(v));
        let mut expect = LazyTensor::zero(l.field, 3);
        expect.add_entry(vec![m(0, 1), m(0, 0), m(0, 0)], Scalar::one(l.field));
        expect.add_entry(vec![m(1, 0), m(0, 1), m(0, 0)], Scalar::one(l.field));
        expect.add_entry(vec![m(1, 0), m(0, 0), m(0, 1)], Scalar::one(l.field));
        assert_eq!(lhs, expect);
        assert!(check_brace_on_monomials(&l, &[m(0, 1)]).passed());
    }

    #[test]
    fn default_window_passes_all_checks() {
        let l = q();
        let window = monomial_window(2, 2);
        assert_eq!(window.len(), 15);
        assert!(check_brace_on_monomials(&l, &window).passed());
        assert!(check_comult_prime_multiplicative(&l, &window).passed());
    }

    #[test]
    fn rho_of_x_is_g_tensor_x() {
        let l = q();
        let expect = LazyTensor::basis(l.field, vec![m(1, 0), m(0, 1)]);
        assert_eq!(l.rho(&m(0, 1)), expect);
    }

    #[test]
    fn corrupt_antipode_fails_at_a_group_like() {
        let l = q();
        // a flipped-sign antipode still satisfies the law at x, where
        // both sides vanish, but fails at g: -g^-1 g = -1 != eps(g) 1
        let bad = |v: &LaurentMonomial| l.antipode_s(v).scale(&Scalar::from_i64(l.field, -1));
        let at = |v: LaurentMonomial| {
            let split = l.single(v).apply_at(0, |w| l.comult(w));
            let collapsed = split.apply_at(0, &bad).multiply_at(0);
            collapsed.sub(&l.one().scale(&l.counit(&v)))
        };
        assert!(at(m(0, 1)).is_zero());
        assert!(!at(m(1, 0)).is_zero());
    }

    #[test]
    fn antipode_t_is_inverse_on_the_second_half() {
        let l = q();
        // T then T is the identity on monomials up to sign bookkeeping:
        // T(T(g^a x^b)) = g^a x^b
        for mm in monomial_window(2, 2) {
            let twice = l.single(mm).apply_at(0, |v| l.antipode_t(v)).apply_at(0, |v| l.antipode_t(v));
            assert_eq!(twice, l.single(mm));
        }
    }
}
