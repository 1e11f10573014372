//! A small zoo of named Hopf algebras and Hopf braces used by the CLI and
//! the test suite.
//!
//! Hopf names: `z2`, `z3`, `z2xz2`, `s3`, `d4`, `h4`, optionally wrapped in
//! the prefixes `dual-`, `op-`, `cop-` (applied left to right, so
//! `dual-s3` is the dual of `kS3`). Brace names are built on top of these.

use crate::brace::{self, BraceData};
use crate::error::HopfError;
use crate::hopf::{self, HopfData};
use crate::scalar::{FieldSpec, Scalar};
use crate::sparse::Tensor;

const BASE_HOPF: &[&str] = &["z2", "z3", "z2xz2", "s3", "d4", "h4"];

/// Cayley table of the symmetric group S3.
///
/// Elements: e, t12, t13, t23, r = (123), r2 = (132), with the composition
/// convention (pq)(x) = p(q(x)).
fn s3_table() -> Vec<Vec<usize>> {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2], // e
        [1, 0, 2], // t12
        [2, 1, 0], // t13
        [0, 2, 1], // t23
        [1, 2, 0], // r: 0->1, 1->2, 2->0
        [2, 0, 1], // r2
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    (0..6)
        .map(|i| {
            (0..6)
                .map(|j| {
                    let pq = compose(&perms[i], &perms[j]);
                    perms.iter().position(|x| *x == pq).unwrap()
                })
                .collect()
        })
        .collect()
}

/// Cayley table of the dihedral group D4: elements r^a s^b, index 4b + a,
/// with r^4 = s^2 = 1 and s r = r^{-1} s.
fn d4_table() -> Vec<Vec<usize>> {
    let idx = |a: usize, b: usize| 4 * b + a;
    (0..8)
        .map(|i| {
            let (a, b) = (i % 4, i / 4);
            (0..8)
                .map(|j| {
                    let (c, d) = (j % 4, j / 4);
                    let a2 = if b == 0 { (a + c) % 4 } else { (a + 4 - c) % 4 };
                    idx(a2, (b + d) % 2)
                })
                .collect()
        })
        .collect()
}

fn base_hopf(name: &str, field: FieldSpec) -> Result<HopfData, HopfError> {
    let labelled = |table: Vec<Vec<usize>>, labels: &[&str]| {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        hopf::group_algebra(field, &table, &labels)
    };
    match name {
        "z2" => labelled(vec![vec![0, 1], vec![1, 0]], &["1", "g"]),
        "z3" => labelled(
            (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect(),
            &["1", "g", "g2"],
        ),
        "z2xz2" => labelled(
            (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect(),
            &["1", "a", "b", "ab"],
        ),
        "s3" => labelled(s3_table(), &["e", "t12", "t13", "t23", "r", "r2"]),
        "d4" => labelled(d4_table(), &["1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]),
        "h4" => hopf::sweedler_h4(field),
        _ => Err(HopfError::UnknownZooObject(name.into())),
    }
}

/// Looks up a Hopf algebra by zoo name.
pub fn hopf(name: &str, field: FieldSpec) -> Result<HopfData, HopfError> {
    if let Some(rest) = name.strip_prefix("dual-") {
        return Ok(hopf::dual_hopf(&hopf(rest, field)?));
    }
    if let Some(rest) = name.strip_prefix("op-") {
        return hopf::opposite(&hopf(rest, field)?);
    }
    if let Some(rest) = name.strip_prefix("cop-") {
        return hopf::co_opposite(&hopf(rest, field)?);
    }
    base_hopf(name, field)
}

/// Looks up a Hopf brace by zoo name.
///
/// `<hopf>-trivial` is the brace with both coproducts equal; `<hopf>-cop`
/// pairs the coproduct with its co-opposite; `h4-z2`, `long-z2` and
/// `long-d4` are the copairing-twisted braces; `double-dual-<hopf>` is the
/// brace on `H^op` bicrossed with `H*`.
pub fn brace(name: &str, field: FieldSpec) -> Result<BraceData, HopfError> {
    if let Some(rest) = name.strip_suffix("-trivial") {
        return brace::trivial_brace(&hopf(rest, field)?);
    }
    if let Some(rest) = name.strip_suffix("-cop") {
        return brace::cop_brace(&hopf(rest, field)?);
    }
    if let Some(rest) = name.strip_prefix("double-dual-") {
        let dd = crate::bicrossed::drinfeld_double_dual(&hopf(rest, field)?)?;
        return Ok(dd.brace);
    }
    match name {
        "h4-z2" => Ok(crate::bicrossed::h4_z2_brace(field)?.brace),
        "long-z2" => brace::long_brace(&hopf("z2", field)?, &z2_copairing(field)?),
        "long-d4" => brace::long_brace(&hopf("d4", field)?, &d4_copairing(field)?),
        _ => Err(HopfError::UnknownZooObject(name.into())),
    }
}

/// The copairing (1/2)(1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) on kZ2.
/// It is its own inverse and induces the trivial twist.
pub fn z2_copairing(field: FieldSpec) -> Result<Tensor, HopfError> {
    if field.characteristic() == 2 {
        return Err(HopfError::CharacteristicTwo);
    }
    let half = Scalar::from_fraction(field, 1, 2)?;
    let mut r = Tensor::zero(vec![2, 2]);
    r.add_entry(vec![0, 0], half.clone());
    r.add_entry(vec![0, 1], half.clone());
    r.add_entry(vec![1, 0], half.clone());
    r.add_entry(vec![1, 1], half.neg());
    Ok(r)
}

/// The copairing 1 (x) (1+s)/2 + r2 (x) (1-s)/2 on kD4. Self-inverse, and
/// the induced twist moves the coproduct off the diagonal.
pub fn d4_copairing(field: FieldSpec) -> Result<Tensor, HopfError> {
    if field.characteristic() == 2 {
        return Err(HopfError::CharacteristicTwo);
    }
    let half = Scalar::from_fraction(field, 1, 2)?;
    // basis order 1, r, r2, r3, s, rs, r2s, r3s
    let mut t = Tensor::zero(vec![8, 8]);
    t.add_entry(vec![0, 0], half.clone());
    t.add_entry(vec![0, 4], half.clone());
    t.add_entry(vec![2, 0], half.clone());
    t.add_entry(vec![2, 4], half.neg());
    Ok(t)
}

/// All names the zoo resolves without prefixes, for `zoo list`.
pub fn list() -> Vec<String> {
    let mut names: Vec<String> = BASE_HOPF.iter().map(|s| s.to_string()).collect();
    for base in BASE_HOPF {
        names.push(format!("dual-{}", base));
        names.push(format!("op-{}", base));
        names.push(format!("cop-{}", base));
    }
    for base in BASE_HOPF {
        names.push(format!("{}-trivial", base));
        names.push(format!("{}-cop", base));
    }
    names.extend(
        ["h4-z2", "long-z2", "long-d4", "double-dual-z2", "double-dual-z3"]
            .iter()
            .map(|s| s.to_string()),
    );
    names
}
