//! Check reports: every axiom checker returns a pass, or the first failing
//! axiom with a basis witness and the exact residual (LHS - RHS) there.

use rayon::prelude::*;

use crate::sparse::{total_dim, unflatten_index, Tensor};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub status: CheckStatus,
    pub failed_axiom: Option<String>,
    pub witness: Option<Vec<usize>>,
    pub residual: Option<Tensor>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport { status: CheckStatus::Pass, failed_axiom: None, witness: None, residual: None }
    }

    pub fn fail(axiom: impl Into<String>, witness: Vec<usize>, residual: Tensor) -> Self {
        CheckReport {
            status: CheckStatus::Fail,
            failed_axiom: Some(axiom.into()),
            witness: Some(witness),
            residual: Some(residual),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// Chains checks: keeps the first failure.
    pub fn and_then(self, next: impl FnOnce() -> CheckReport) -> CheckReport {
        if self.passed() {
            next()
        } else {
            self
        }
    }

    /// Namespaces the failed axiom, e.g. "second.counit.left".
    pub fn prefixed(mut self, prefix: &str) -> CheckReport {
        if let Some(a) = self.failed_axiom.take() {
            self.failed_axiom = Some(format!("{}.{}", prefix, a));
        }
        self
    }
}

/// Checks that two linear maps, given as evaluators on basis tuples of the
/// common input space `in_dims`, agree on every basis tuple. Tuples are
/// checked in parallel; the reported witness is the first (in row-major
/// order) failing tuple, so reports are deterministic.
pub fn check_equality<L, R>(axiom: &str, in_dims: &[usize], lhs: L, rhs: R) -> CheckReport
where
    L: Fn(&[usize]) -> Tensor + Sync,
    R: Fn(&[usize]) -> Tensor + Sync,
{
    let total = total_dim(in_dims);
    let failure = (0..total).into_par_iter().find_map_first(|flat| {
        let tuple = unflatten_index(in_dims, flat);
        let l = lhs(&tuple);
        let r = rhs(&tuple);
        let residual = l.sub(&r);
        if residual.is_zero() {
            None
        } else {
            Some((tuple, residual))
        }
    });
    match failure {
        None => CheckReport::pass(),
        Some((witness, residual)) => CheckReport::fail(axiom, witness, residual),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    #[test]
    fn pass_has_no_witness() {
        let q = FieldSpec::Rationals;
        let r = check_equality(
            "id = id",
            &[3],
            |t| Tensor::basis(vec![3], t.to_vec(), q),
            |t| Tensor::basis(vec![3], t.to_vec(), q),
        );
        assert!(r.passed());
        assert!(r.witness.is_none());
    }

    #[test]
    fn first_failing_tuple_is_reported() {
        let q = FieldSpec::Rationals;
        let r = check_equality(
            "shift = id",
            &[3],
            |t| Tensor::basis(vec![3], vec![(t[0] + 1) % 3], q),
            |t| Tensor::basis(vec![3], t.to_vec(), q),
        );
        assert!(!r.passed());
        assert_eq!(r.witness, Some(vec![0]));
        assert!(!r.residual.unwrap().is_zero());
    }
}
