//! Line-oriented text format for Hopf data: every structure constant is
//! written out, so a file is a complete description of the object. The
//! grammar lives in docs/hopf-format.md.
//!
//! One `object` block with one comultiplication parses to a Hopf algebra,
//! one block with a second comultiplication to a brace candidate; two
//! blocks need `coaction` or `rmatrix` lines tying them together. Parsing
//! validates shape and completeness only; the axioms are checked by the
//! `check` commands.

use std::collections::BTreeMap;
use std::fmt;

use hopfbrace::brace::{BraceData, CoactionData, CoactionSide};
use hopfbrace::hopf::{solve_antipode, AlgebraData, CoalgebraData};
use hopfbrace::matched::MatchedPairData;
use hopfbrace::{FieldSpec, HopfData, Scalar, SparseVec, StructureMap, Tensor};

#[derive(Debug)]
pub struct ParseError {
    /// 1-based source line, or 0 for file-level problems.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}: {}", self.line, self.message)
        } else {
            write!(f, "{}", self.message)
        }
    }
}

fn perr(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// What a file can describe.
#[derive(Debug)]
pub enum ParsedFile {
    Hopf { name: String, hopf: HopfData },
    Brace { name: String, brace: BraceData },
    /// Two objects with both coactions `rho: A -> H (x) A` and
    /// `phi: H -> H (x) A`.
    Matched { name: String, pair: MatchedPairData },
    /// Two objects with only `rho`, the input shape of a smash coproduct.
    Coacted { name: String, h: HopfData, a: HopfData, rho: CoactionData },
    /// One or two objects with an element of `H (x) A`.
    RMatrix { name: String, h: HopfData, a: HopfData, r: Tensor },
}

impl ParsedFile {
    pub fn name(&self) -> &str {
        match self {
            ParsedFile::Hopf { name, .. }
            | ParsedFile::Brace { name, .. }
            | ParsedFile::Matched { name, .. }
            | ParsedFile::Coacted { name, .. }
            | ParsedFile::RMatrix { name, .. } => name,
        }
    }
}

/// `Q`, `F<p>` or `Fp:<p>`.
pub fn parse_field_token(s: &str) -> Result<FieldSpec, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = s
        .strip_prefix("Fp:")
        .or_else(|| s.strip_prefix("fp:"))
        .or_else(|| s.strip_prefix('F'))
        .or_else(|| s.strip_prefix('f'));
    if let Some(d) = digits {
        let p: u64 = d
            .parse()
            .map_err(|_| format!("bad field '{}': expected Q or F<prime>", s))?;
        return FieldSpec::prime(p).map_err(|e| e.to_string());
    }
    Err(format!("bad field '{}': expected Q or F<prime>", s))
}

struct LabelIndex {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl LabelIndex {
    fn new(labels: &[String]) -> Self {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        LabelIndex { labels: labels.to_vec(), index }
    }

    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn get(&self, tok: &str, line: usize) -> Result<usize, ParseError> {
        self.index
            .get(tok)
            .copied()
            .ok_or_else(|| perr(line, format!("unknown basis label '{}'", tok)))
    }
}

fn parse_rational(field: FieldSpec, tok: &str, line: usize) -> Result<Scalar, ParseError> {
    let (num_s, den_s) = tok.split_once('/').unwrap_or((tok, "1"));
    let num: i64 = num_s
        .parse()
        .map_err(|_| perr(line, format!("bad scalar '{}'", tok)))?;
    let den: i64 = den_s
        .parse()
        .map_err(|_| perr(line, format!("bad scalar '{}'", tok)))?;
    Scalar::from_fraction(field, num, den)
        .map_err(|e| perr(line, format!("bad scalar '{}': {}", tok, e)))
}

/// `0`, or terms `[scalar *] label (*) label ...` joined by `+`. A token
/// counts as a coefficient exactly when the next token is `*`.
fn parse_expr(
    field: FieldSpec,
    legs: &[&LabelIndex],
    toks: &[String],
    line: usize,
) -> Result<Tensor, ParseError> {
    let dims: Vec<usize> = legs.iter().map(|l| l.dim()).collect();
    if toks.is_empty() {
        return Err(perr(line, "empty expression"));
    }
    if toks.len() == 1 && toks[0] == "0" {
        return Ok(Tensor::zero(dims));
    }
    let mut out = Tensor::zero(dims);
    for term in toks.split(|t| t == "+") {
        let (coeff, rest) = if term.len() >= 2 && term[1] == "*" {
            (parse_rational(field, &term[0], line)?, &term[2..])
        } else {
            (Scalar::one(field), term)
        };
        let expected = 2 * legs.len() - 1;
        if rest.len() != expected {
            return Err(perr(
                line,
                format!(
                    "term '{}' should be {} label(s) joined by (*)",
                    rest.join(" "),
                    legs.len()
                ),
            ));
        }
        let mut key = Vec::with_capacity(legs.len());
        for (k, leg) in legs.iter().enumerate() {
            if k > 0 && rest[2 * k - 1] != "(*)" {
                return Err(perr(
                    line,
                    format!("expected (*) between legs, found '{}'", rest[2 * k - 1]),
                ));
            }
            key.push(leg.get(&rest[2 * k], line)?);
        }
        out.add_entry(key, coeff);
    }
    Ok(out)
}

struct RawBlock {
    line: usize,
    name: String,
    field: Option<(usize, String)>,
    labels: Option<Vec<String>>,
    stmts: Vec<(usize, Vec<String>)>,
}

struct BlockOut {
    name: String,
    index: LabelIndex,
    hopf: HopfData,
    comult2: Option<StructureMap>,
    antipode2: Option<StructureMap>,
}

/// Rows of one keyword section, keyed by flattened input index. Presence
/// of a key means the row was declared, even when the value is zero.
struct Section {
    keyword: &'static str,
    rows: BTreeMap<usize, SparseVec>,
}

impl Section {
    fn new(keyword: &'static str) -> Self {
        Section { keyword, rows: BTreeMap::new() }
    }

    fn insert(&mut self, key: usize, v: SparseVec, line: usize) -> Result<(), ParseError> {
        if self.rows.insert(key, v).is_some() {
            return Err(perr(line, format!("duplicate {} entry", self.keyword)));
        }
        Ok(())
    }
}

fn missing_rows(section: &Section, keys: &[(usize, String)]) -> Vec<String> {
    keys.iter()
        .filter(|(k, _)| !section.rows.contains_key(k))
        .map(|(_, name)| format!("{} {}", section.keyword, name))
        .collect()
}

fn rows_to_map(
    field: FieldSpec,
    in_dims: Vec<usize>,
    out_dims: Vec<usize>,
    rows: &BTreeMap<usize, SparseVec>,
) -> StructureMap {
    let mut map = StructureMap::new(field, in_dims, out_dims);
    for (&k, v) in rows {
        map.set_row(k, v.clone());
    }
    map
}

fn build_block(raw: &RawBlock, field: FieldSpec) -> Result<BlockOut, ParseError> {
    let labels = raw
        .labels
        .as_ref()
        .ok_or_else(|| perr(raw.line, format!("object {} has no basis line", raw.name)))?;
    let index = LabelIndex::new(labels);
    let n = index.dim();
    let mut mult = Section::new("mult");
    let mut comul = Section::new("comul");
    let mut comul2 = Section::new("comul'");
    let mut counit = Section::new("counit");
    let mut anti = Section::new("antipode");
    let mut anti2 = Section::new("antipode'");
    let mut unit: Option<SparseVec> = None;
    for (line, toks) in &raw.stmts {
        let line = *line;
        let eq = toks
            .iter()
            .position(|t| t == "=")
            .ok_or_else(|| perr(line, "missing '='"))?;
        let (lhs, rhs) = (&toks[1..eq], &toks[eq + 1..]);
        let one_leg: [&LabelIndex; 1] = [&index];
        let two_legs: [&LabelIndex; 2] = [&index, &index];
        match toks[0].as_str() {
            "mult" => {
                if lhs.len() != 2 {
                    return Err(perr(line, "mult takes two labels"));
                }
                let (i, j) = (index.get(&lhs[0], line)?, index.get(&lhs[1], line)?);
                let v = parse_expr(field, &one_leg, rhs, line)?.flatten();
                mult.insert(i * n + j, v, line)?;
            }
            "unit" => {
                if !lhs.is_empty() {
                    return Err(perr(line, "unit takes no labels"));
                }
                if unit.is_some() {
                    return Err(perr(line, "duplicate unit entry"));
                }
                unit = Some(parse_expr(field, &one_leg, rhs, line)?.flatten());
            }
            kw @ ("comul" | "comul'") => {
                if lhs.len() != 1 {
                    return Err(perr(line, format!("{} takes one label", kw)));
                }
                let i = index.get(&lhs[0], line)?;
                let v = parse_expr(field, &two_legs, rhs, line)?.flatten();
                let section = if kw == "comul" { &mut comul } else { &mut comul2 };
                section.insert(i, v, line)?;
            }
            "counit" => {
                if lhs.len() != 1 || rhs.len() != 1 {
                    return Err(perr(line, "counit takes one label and one scalar"));
                }
                let i = index.get(&lhs[0], line)?;
                let c = parse_rational(field, &rhs[0], line)?;
                let mut v = SparseVec::zero(1);
                v.add_entry(0, c);
                counit.insert(i, v, line)?;
            }
            kw @ ("antipode" | "antipode'") => {
                if lhs.len() != 1 {
                    return Err(perr(line, format!("{} takes one label", kw)));
                }
                let i = index.get(&lhs[0], line)?;
                let v = parse_expr(field, &one_leg, rhs, line)?.flatten();
                let section = if kw == "antipode" { &mut anti } else { &mut anti2 };
                section.insert(i, v, line)?;
            }
            other => return Err(perr(line, format!("unknown keyword '{}'", other))),
        }
    }
    let mut pair_keys: Vec<(usize, String)> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            pair_keys.push((i * n + j, format!("{} {}", index.labels[i], index.labels[j])));
        }
    }
    let single_keys: Vec<(usize, String)> =
        (0..n).map(|i| (i, index.labels[i].clone())).collect();
    let mut missing = missing_rows(&mult, &pair_keys);
    missing.extend(missing_rows(&comul, &single_keys));
    missing.extend(missing_rows(&counit, &single_keys));
    if unit.is_none() {
        missing.push("unit".into());
    }
    if !anti.rows.is_empty() {
        missing.extend(missing_rows(&anti, &single_keys));
    }
    if !comul2.rows.is_empty() {
        missing.extend(missing_rows(&comul2, &single_keys));
    }
    if !anti2.rows.is_empty() {
        missing.extend(missing_rows(&anti2, &single_keys));
    }
    if !missing.is_empty() {
        return Err(perr(
            0,
            format!("object {}: missing entries: {}", raw.name, missing.join(", ")),
        ));
    }
    if !anti2.rows.is_empty() && comul2.rows.is_empty() {
        return Err(perr(0, format!("object {}: antipode' without comul'", raw.name)));
    }
    let algebra = AlgebraData {
        field,
        dim: n,
        basis_labels: index.labels.clone(),
        mult: rows_to_map(field, vec![n, n], vec![n], &mult.rows),
        unit: unit.unwrap(),
    };
    let coalgebra = CoalgebraData {
        comult: rows_to_map(field, vec![n], vec![n, n], &comul.rows),
        counit: rows_to_map(field, vec![n], vec![], &counit.rows),
    };
    let antipode = if anti.rows.is_empty() {
        match solve_antipode(&algebra, &coalgebra) {
            Ok(Some(s)) => s,
            Ok(None) => {
                return Err(perr(
                    0,
                    format!("object {}: no antipode declared and none exists", raw.name),
                ))
            }
            Err(e) => {
                return Err(perr(
                    0,
                    format!("object {}: antipode solver failed: {}", raw.name, e),
                ))
            }
        }
    } else {
        rows_to_map(field, vec![n], vec![n], &anti.rows)
    };
    let comult2 = if comul2.rows.is_empty() {
        None
    } else {
        Some(rows_to_map(field, vec![n], vec![n, n], &comul2.rows))
    };
    let antipode2 = match (&comult2, anti2.rows.is_empty()) {
        (None, _) => None,
        (Some(_), false) => Some(rows_to_map(field, vec![n], vec![n], &anti2.rows)),
        (Some(c2), true) => {
            let second = CoalgebraData { comult: c2.clone(), counit: coalgebra.counit.clone() };
            match solve_antipode(&algebra, &second) {
                Ok(Some(s)) => Some(s),
                _ => {
                    return Err(perr(
                        0,
                        format!(
                            "object {}: no antipode' declared and none exists for comul'",
                            raw.name
                        ),
                    ))
                }
            }
        }
    };
    Ok(BlockOut {
        name: raw.name.clone(),
        index,
        hopf: HopfData { algebra, coalgebra, antipode },
        comult2,
        antipode2,
    })
}

pub fn parse(text: &str) -> Result<ParsedFile, ParseError> {
    let mut blocks: Vec<RawBlock> = Vec::new();
    let mut globals: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<String> = raw
            .split('#')
            .next()
            .unwrap_or("")
            .split_whitespace()
            .map(str::to_string)
            .collect();
        if toks.is_empty() {
            continue;
        }
        match toks[0].as_str() {
            "object" => {
                if toks.len() != 2 {
                    return Err(perr(line, "object takes one name"));
                }
                if blocks.len() == 2 {
                    return Err(perr(line, "at most two objects per file"));
                }
                blocks.push(RawBlock {
                    line,
                    name: toks[1].clone(),
                    field: None,
                    labels: None,
                    stmts: Vec::new(),
                });
            }
            "field" => {
                let block = blocks
                    .last_mut()
                    .ok_or_else(|| perr(line, "field before any object"))?;
                if toks.len() != 2 {
                    return Err(perr(line, "field takes one value"));
                }
                if block.field.is_some() {
                    return Err(perr(line, "duplicate field line"));
                }
                block.field = Some((line, toks[1].clone()));
            }
            "basis" => {
                let block = blocks
                    .last_mut()
                    .ok_or_else(|| perr(line, "basis before any object"))?;
                if block.labels.is_some() {
                    return Err(perr(line, "duplicate basis line"));
                }
                let labels = toks[1..].to_vec();
                if labels.is_empty() {
                    return Err(perr(line, "basis needs at least one label"));
                }
                for l in &labels {
                    if matches!(l.as_str(), "0" | "+" | "*" | "(*)" | "=") {
                        return Err(perr(line, format!("reserved token '{}' as label", l)));
                    }
                }
                let mut seen = labels.clone();
                seen.sort();
                seen.dedup();
                if seen.len() != labels.len() {
                    return Err(perr(line, "duplicate basis label"));
                }
                block.labels = Some(labels);
            }
            "coaction" | "rmatrix" => globals.push((line, toks)),
            _ => {
                let block = blocks
                    .last_mut()
                    .ok_or_else(|| perr(line, "structure line before any object"))?;
                block.stmts.push((line, toks));
            }
        }
    }
    if blocks.is_empty() {
        return Err(perr(0, "no object declared"));
    }
    let (fline, ftok) = blocks[0]
        .field
        .as_ref()
        .ok_or_else(|| perr(blocks[0].line, "first object needs a field line"))?;
    let field = parse_field_token(ftok).map_err(|m| perr(*fline, m))?;
    if let Some(b2) = blocks.get(1) {
        if let Some((l2, f2)) = &b2.field {
            let other = parse_field_token(f2).map_err(|m| perr(*l2, m))?;
            if other != field {
                return Err(perr(*l2, "objects declare different fields"));
            }
        }
    }
    let built: Vec<BlockOut> = blocks
        .iter()
        .map(|b| build_block(b, field))
        .collect::<Result<_, _>>()?;
    let hb = &built[0];
    let ab = built.last().unwrap();
    let name = if built.len() == 2 {
        format!("{}+{}", hb.name, ab.name)
    } else {
        hb.name.clone()
    };

    let mut rho = Section::new("coaction rho");
    let mut phi = Section::new("coaction phi");
    let mut rmatrix: Option<Tensor> = None;
    for (line, toks) in &globals {
        let line = *line;
        let mixed_legs: [&LabelIndex; 2] = [&hb.index, &ab.index];
        match toks[0].as_str() {
            "coaction" => {
                // rho is keyed by A labels, phi by H labels; both land in
                // H (x) A, with H the first object block
                if toks.len() < 5 || toks[3] != "=" {
                    return Err(perr(line, "expected: coaction rho|phi <label> = <expr>"));
                }
                let value = parse_expr(field, &mixed_legs, &toks[4..], line)?.flatten();
                match toks[1].as_str() {
                    "rho" => {
                        let i = ab.index.get(&toks[2], line)?;
                        rho.insert(i, value, line)?;
                    }
                    "phi" => {
                        let i = hb.index.get(&toks[2], line)?;
                        phi.insert(i, value, line)?;
                    }
                    other => return Err(perr(line, format!("unknown coaction '{}'", other))),
                }
            }
            "rmatrix" => {
                if toks.len() < 3 || toks[1] != "=" {
                    return Err(perr(line, "expected: rmatrix = <expr>"));
                }
                if rmatrix.is_some() {
                    return Err(perr(line, "duplicate rmatrix line"));
                }
                rmatrix = Some(parse_expr(field, &mixed_legs, &toks[2..], line)?);
            }
            _ => unreachable!(),
        }
    }

    let (nh, na) = (hb.index.dim(), ab.index.dim());
    if let Some(r) = rmatrix {
        if !rho.rows.is_empty() || !phi.rows.is_empty() {
            return Err(perr(0, "rmatrix and coaction lines cannot be mixed"));
        }
        if hb.comult2.is_some() || ab.comult2.is_some() {
            return Err(perr(0, "rmatrix files cannot carry a second comultiplication"));
        }
        return Ok(ParsedFile::RMatrix {
            name,
            h: hb.hopf.clone(),
            a: ab.hopf.clone(),
            r,
        });
    }
    if !phi.rows.is_empty() && rho.rows.is_empty() {
        return Err(perr(0, "coaction phi without coaction rho"));
    }
    if !rho.rows.is_empty() {
        if hb.comult2.is_some() || ab.comult2.is_some() {
            return Err(perr(0, "coaction files cannot carry a second comultiplication"));
        }
        let a_keys: Vec<(usize, String)> =
            (0..na).map(|i| (i, ab.index.labels[i].clone())).collect();
        let h_keys: Vec<(usize, String)> =
            (0..nh).map(|i| (i, hb.index.labels[i].clone())).collect();
        let mut missing = missing_rows(&rho, &a_keys);
        if !phi.rows.is_empty() {
            missing.extend(missing_rows(&phi, &h_keys));
        }
        if !missing.is_empty() {
            return Err(perr(0, format!("missing entries: {}", missing.join(", "))));
        }
        let rho_map = rows_to_map(field, vec![na], vec![nh, na], &rho.rows);
        if phi.rows.is_empty() {
            return Ok(ParsedFile::Coacted {
                name,
                h: hb.hopf.clone(),
                a: ab.hopf.clone(),
                rho: CoactionData { side: CoactionSide::Left, map: rho_map },
            });
        }
        let phi_map = rows_to_map(field, vec![nh], vec![nh, na], &phi.rows);
        return Ok(ParsedFile::Matched {
            name,
            pair: MatchedPairData {
                a: ab.hopf.clone(),
                h: hb.hopf.clone(),
                rho: rho_map,
                phi: phi_map,
                roles_swapped: false,
            },
        });
    }
    if built.len() == 2 {
        return Err(perr(0, "two objects need coaction or rmatrix lines"));
    }
    let single = built.into_iter().next().unwrap();
    match single.comult2 {
        Some(comult2) => Ok(ParsedFile::Brace {
            name,
            brace: BraceData::new_unchecked(single.hopf, comult2, single.antipode2.unwrap()),
        }),
        None => Ok(ParsedFile::Hopf { name, hopf: single.hopf }),
    }
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

/// Deterministic expression text for a tensor, one leg label list per leg.
pub fn expr_string(t: &Tensor, legs: &[&[String]]) -> String {
    if t.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = t
        .entries()
        .map(|(key, c)| {
            let tensor_part = key
                .iter()
                .enumerate()
                .map(|(k, &i)| legs[k][i].clone())
                .collect::<Vec<_>>()
                .join(" (*) ");
            if c.is_one() {
                tensor_part
            } else {
                format!("{} * {}", c, tensor_part)
            }
        })
        .collect();
    terms.join(" + ")
}

fn write_coalgebra_half(
    out: &mut String,
    h: &HopfData,
    comult: &StructureMap,
    antipode: &StructureMap,
    comul_kw: &str,
    antipode_kw: &str,
) {
    let n = h.dim();
    let labels = &h.algebra.basis_labels;
    let legs2: [&[String]; 2] = [labels, labels];
    let legs1: [&[String]; 1] = [labels];
    for i in 0..n {
        let t = comult.apply_basis(i).to_tensor(&[n, n]);
        out.push_str(&format!("{} {} = {}\n", comul_kw, labels[i], expr_string(&t, &legs2)));
    }
    for i in 0..n {
        let t = antipode.apply_basis(i).to_tensor(&[n]);
        out.push_str(&format!(
            "{} {} = {}\n",
            antipode_kw,
            labels[i],
            expr_string(&t, &legs1)
        ));
    }
}

fn serialize_base(name: &str, h: &HopfData) -> String {
    let n = h.dim();
    let labels = &h.algebra.basis_labels;
    let legs1: [&[String]; 1] = [labels];
    let mut out = String::new();
    out.push_str(&format!("object {}\n", name));
    out.push_str(&format!("field {}\n", h.field()));
    out.push_str(&format!("basis {}\n", labels.join(" ")));
    out.push_str(&format!(
        "unit = {}\n",
        expr_string(&h.unit().to_tensor(&[n]), &legs1)
    ));
    for i in 0..n {
        for j in 0..n {
            let t = h.mult().apply_basis(i * n + j).to_tensor(&[n]);
            out.push_str(&format!(
                "mult {} {} = {}\n",
                labels[i],
                labels[j],
                expr_string(&t, &legs1)
            ));
        }
    }
    write_coalgebra_half(&mut out, h, h.comult(), &h.antipode, "comul", "antipode");
    for i in 0..n {
        let eps = h.counit().apply_basis(i);
        let value = eps.coeff(0).map(|c| c.to_string()).unwrap_or_else(|| "0".into());
        out.push_str(&format!("counit {} = {}\n", labels[i], value));
    }
    out
}

pub fn serialize_hopf(name: &str, h: &HopfData) -> String {
    serialize_base(name, h)
}

pub fn serialize_brace(name: &str, b: &BraceData) -> String {
    let mut out = serialize_base(name, &b.hopf);
    write_coalgebra_half(&mut out, &b.hopf, &b.comult2, &b.antipode2, "comul'", "antipode'");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfbrace::zoo;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn hopf_round_trip_on_all_zoo_objects() {
        for name in ["z2", "z3", "z2xz2", "s3", "d4", "h4", "dual-s3", "cop-h4", "op-h4"] {
            let h = zoo::hopf(name, q()).unwrap();
            let text = serialize_hopf(name, &h);
            let ParsedFile::Hopf { name: parsed_name, hopf } = parse(&text).unwrap() else {
                panic!("{} did not parse back to a Hopf file", name);
            };
            assert_eq!(parsed_name, name);
            assert!(hopf.mult().equal_tables(h.mult()), "{} mult", name);
            assert_eq!(hopf.unit(), h.unit(), "{} unit", name);
            assert!(hopf.comult().equal_tables(h.comult()), "{} comult", name);
            assert!(hopf.counit().equal_tables(h.counit()), "{} counit", name);
            assert!(hopf.antipode.equal_tables(&h.antipode), "{} antipode", name);
        }
    }

    #[test]
    fn brace_round_trip() {
        for name in ["h4-cop", "long-d4", "h4-z2"] {
            let b = zoo::brace(name, q()).unwrap();
            let text = serialize_brace(name, &b);
            let ParsedFile::Brace { brace, .. } = parse(&text).unwrap() else {
                panic!("{} did not parse back to a brace file", name);
            };
            assert!(brace.comult2.equal_tables(&b.comult2), "{} comult'", name);
            assert!(brace.antipode2.equal_tables(&b.antipode2), "{} antipode'", name);
            assert!(brace.hopf.mult().equal_tables(b.hopf.mult()), "{} mult", name);
        }
    }

    #[test]
    fn round_trip_over_prime_field() {
        let f5 = FieldSpec::prime(5).unwrap();
        let h = zoo::hopf("h4", f5).unwrap();
        let text = serialize_hopf("h4", &h);
        assert!(text.contains("field F5"));
        let ParsedFile::Hopf { hopf, .. } = parse(&text).unwrap() else {
            panic!("expected a Hopf file");
        };
        assert!(hopf.mult().equal_tables(h.mult()));
        assert!(hopf.antipode.equal_tables(&h.antipode));
    }

    #[test]
    fn missing_mult_rows_are_listed() {
        let text = "object t\nfield Q\nbasis 1 g\nunit = 1\n\
                    mult 1 1 = 1\ncomul 1 = 1 (*) 1\ncomul g = g (*) g\n\
                    counit 1 = 1\ncounit g = 1\n";
        let err = parse(text).unwrap_err();
        assert!(err.message.contains("mult 1 g"), "{}", err.message);
        assert!(err.message.contains("mult g g"), "{}", err.message);
        assert!(!err.message.contains("mult 1 1"), "{}", err.message);
    }

    #[test]
    fn unknown_label_reports_line_number() {
        let text = "object t\nfield Q\nbasis 1 g\nunit = 1\nmult 1 h = 1\n";
        let err = parse(text).unwrap_err();
        assert_eq!(err.line, 5);
        assert!(err.message.contains("'h'"));
    }

    #[test]
    fn duplicate_entry_is_rejected() {
        let text = "object t\nfield Q\nbasis 1\nunit = 1\nmult 1 1 = 1\nmult 1 1 = 1\n";
        let err = parse(text).unwrap_err();
        assert_eq!(err.line, 6);
        assert!(err.message.contains("duplicate"));
    }

    #[test]
    fn missing_antipode_is_solved() {
        // kZ2 without antipode lines; the solver must find S(g) = g
        let text = "object z2\nfield Q\nbasis 1 g\nunit = 1\n\
                    mult 1 1 = 1\nmult 1 g = g\nmult g 1 = g\nmult g g = 1\n\
                    comul 1 = 1 (*) 1\ncomul g = g (*) g\n\
                    counit 1 = 1\ncounit g = 1\n";
        let ParsedFile::Hopf { hopf, .. } = parse(text).unwrap() else {
            panic!("expected a Hopf file");
        };
        let z2 = zoo::hopf("z2", q()).unwrap();
        assert!(hopf.antipode.equal_tables(&z2.antipode));
    }

    #[test]
    fn rmatrix_file_parses_with_mixed_legs() {
        let h4 = zoo::hopf("h4", q()).unwrap();
        let z2 = zoo::hopf("z2", q()).unwrap();
        let mut text = serialize_hopf("h4", &h4);
        text.push_str(&serialize_hopf("z2", &z2));
        text.push_str(
            "rmatrix = 1/2 * 1 (*) 1 + 1/2 * 1 (*) g + 1/2 * g (*) 1 + -1/2 * g (*) g\n",
        );
        let ParsedFile::RMatrix { name, h, a, r } = parse(&text).unwrap() else {
            panic!("expected an rmatrix file");
        };
        assert_eq!(name, "h4+z2");
        assert_eq!(h.dim(), 4);
        assert_eq!(a.dim(), 2);
        assert_eq!(r.dims(), &[4, 2]);
        assert_eq!(
            *r.entries().next().unwrap().1,
            Scalar::from_fraction(q(), 1, 2).unwrap()
        );
    }

    #[test]
    fn expr_string_is_deterministic_and_parseable() {
        let labels: Vec<String> = vec!["1".into(), "g".into()];
        let legs: [&[String]; 2] = [&labels, &labels];
        let mut t = Tensor::zero(vec![2, 2]);
        t.add_entry(vec![1, 0], Scalar::from_fraction(q(), -1, 2).unwrap());
        t.add_entry(vec![0, 1], Scalar::one(q()));
        assert_eq!(expr_string(&t, &legs), "1 (*) g + -1/2 * g (*) 1");
    }
}
