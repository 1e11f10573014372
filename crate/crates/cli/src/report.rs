//! CLI-facing check reports: witnesses and residuals resolved to basis
//! labels, rendered as one text line or as JSON.

use hopfbrace::{CheckReport, Tensor};
use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub check: String,
    pub object: String,
    pub field: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_axiom: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<ResidualEntry>>,
}

#[derive(Serialize)]
pub struct ResidualEntry {
    pub at: Vec<String>,
    pub value: String,
}

/// A witness index resolves to a label only when the leg dimension matches
/// the label list; other legs stay numeric.
fn leg_label(labels: &[String], dim: usize, index: usize) -> String {
    if dim == labels.len() {
        labels[index].clone()
    } else {
        index.to_string()
    }
}

fn residual_entries(labels: &[String], t: &Tensor) -> Vec<ResidualEntry> {
    let dims = t.dims().to_vec();
    t.entries()
        .map(|(key, c)| ResidualEntry {
            at: key
                .iter()
                .zip(&dims)
                .map(|(&i, &d)| leg_label(labels, d, i))
                .collect(),
            value: c.to_string(),
        })
        .collect()
}

impl Report {
    pub fn from_check(
        check: &str,
        object: &str,
        field: &str,
        labels: &[String],
        r: &CheckReport,
    ) -> Self {
        Report {
            check: check.into(),
            object: object.into(),
            field: field.into(),
            status: if r.passed() { "pass" } else { "fail" }.into(),
            failed_axiom: r.failed_axiom.clone(),
            witness: r.witness.as_ref().map(|w| {
                w.iter()
                    .map(|&i| leg_label(labels, labels.len().max(i + 1), i))
                    .collect()
            }),
            residual: r.residual.as_ref().map(|t| residual_entries(labels, t)),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn text(&self) -> String {
        let mut line = format!(
            "{} {} {} over {}",
            self.status.to_uppercase(),
            self.check,
            self.object,
            self.field
        );
        if let Some(a) = &self.failed_axiom {
            line.push_str(&format!(": axiom {}", a));
        }
        if let Some(w) = &self.witness {
            line.push_str(&format!(" at [{}]", w.join(", ")));
        }
        if let Some(res) = &self.residual {
            if !res.is_empty() {
                let parts: Vec<String> = res
                    .iter()
                    .map(|e| format!("{} = {}", e.at.join(" (*) "), e.value))
                    .collect();
                line.push_str(&format!(", residual [{}]", parts.join("; ")));
            }
        }
        line
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfbrace::{FieldSpec, Scalar};

    #[test]
    fn fail_report_resolves_labels() {
        let labels: Vec<String> = vec!["1".into(), "g".into()];
        let mut res = Tensor::zero(vec![2]);
        res.add_entry(vec![1], Scalar::from_i64(FieldSpec::Rationals, -2));
        let r = CheckReport::fail("antipode.left", vec![1], res);
        let rep = Report::from_check("hopf", "z2", "Q", &labels, &r);
        assert_eq!(rep.witness, Some(vec!["g".to_string()]));
        let text = rep.text();
        assert!(text.starts_with("FAIL hopf z2 over Q: axiom antipode.left at [g]"));
        assert!(text.contains("g = -2"));
        let json: serde_json::Value = serde_json::from_str(&rep.json()).unwrap();
        assert_eq!(json["status"], "fail");
        assert_eq!(json["witness"][0], "g");
    }

    #[test]
    fn pass_report_is_one_line_without_detail() {
        let rep = Report::from_check("brace", "h4-cop", "Q", &[], &CheckReport::pass());
        assert_eq!(rep.text(), "PASS brace h4-cop over Q");
        let json: serde_json::Value = serde_json::from_str(&rep.json()).unwrap();
        assert!(json.get("failed_axiom").is_none());
    }
}
