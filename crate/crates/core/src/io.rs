//! JSON formats for algebras, quivers and complexes.
//!
//! Algebra:
//! `{"field": "Q" | {"p": 5} | {"p": 2, "degree": 3}, "dim": n, "basis": [labels],
//!   "unit": [coords], "idempotents": [..], "blocks": [[i, j], ..],
//!   "products": [[i, j, [[k, "c"], ..]], ..], "radical": [vectors]}`
//!
//! Quiver: `{"vertices": n, "arrows": [[src, tgt, label]], "relations": [[labels]], "nilpotency": l}`
//!
//! Complex: `{"lo": d, "terms": [[multiplicity of P_i, ..] per degree],
//!   "diff": [[degree, row, col, [coeffs in the Peirce block basis]], ..]}`;
//! rows and columns index the summands of a term listed by type.
//! Indices are 0-based throughout.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{gen_nakayama, Algebra, Arrow, QuiverPresentation, RawAlgebra};
use crate::error::{Error, Result};
use crate::homotopy::{ProjComplex, ProjMap};
use exactla::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Name(String),
    Finite {
        p: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<u32>,
    },
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldSpec::Name(s) => parse_field(s),
            FieldSpec::Finite { p, degree } => Ok(Field::galois(*p, degree.unwrap_or(1))?),
        }
    }

    pub fn of(field: &Field) -> FieldSpec {
        match field {
            Field::Rationals => FieldSpec::Name("Q".into()),
            Field::Prime(p) => FieldSpec::Finite { p: *p, degree: None },
            Field::Galois(g) => FieldSpec::Finite { p: g.characteristic(), degree: Some(g.degree()) },
        }
    }
}

/// `Q`, `Fp:<p>` or `Fq:<p>^<m>`.
pub fn parse_field(s: &str) -> Result<Field> {
    let t = s.trim();
    if t == "Q" {
        return Ok(Field::Rationals);
    }
    let bad = || Error::Invalid(format!("unknown field {s:?}; expected Q or Fp:<p>"));
    if let Some(p) = t.strip_prefix("Fp:") {
        return Ok(Field::prime(p.parse().map_err(|_| bad())?)?);
    }
    if let Some(rest) = t.strip_prefix("Fq:") {
        let (p, m) = rest.split_once('^').ok_or_else(bad)?;
        return Ok(Field::galois(p.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?)?);
    }
    Err(bad())
}

pub fn field_name(field: &Field) -> String {
    match field {
        Field::Rationals => "Q".into(),
        Field::Prime(p) => format!("Fp:{p}"),
        Field::Galois(g) => format!("Fq:{}^{}", g.characteristic(), g.degree()),
    }
}

/// A coefficient written as a string or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Text(String),
    Int(i64),
}

impl Coeff {
    fn parse(&self, field: &Field) -> Result<Scalar> {
        Ok(match self {
            Coeff::Text(s) => field.parse(s)?,
            Coeff::Int(v) => field.from_i64(*v),
        })
    }

    fn of(field: &Field, s: &Scalar) -> Coeff {
        Coeff::Text(field.format(s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub basis: Vec<String>,
    pub unit: Vec<Coeff>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotents: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<(usize, usize)>>,
    pub products: Vec<(usize, usize, Vec<(usize, Coeff)>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical: Option<Vec<Vec<Coeff>>>,
}

impl AlgebraFile {
    pub fn to_raw(&self) -> Result<RawAlgebra> {
        let field = self.field.to_field()?;
        if let Some(d) = self.dim {
            if d != self.basis.len() {
                return Err(Error::Invalid(format!("dim {d} but {} basis labels", self.basis.len())));
            }
        }
        let coeffs = |v: &[Coeff]| v.iter().map(|c| c.parse(&field)).collect::<Result<Vec<_>>>();
        let products = self
            .products
            .iter()
            .map(|(i, j, terms)| {
                let terms = terms.iter().map(|(k, c)| Ok((*k, c.parse(&field)?))).collect::<Result<Vec<_>>>()?;
                Ok((*i, *j, terms))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RawAlgebra {
            field: field.clone(),
            labels: self.basis.clone(),
            products,
            unit: coeffs(&self.unit)?,
            idempotents: self.idempotents.clone(),
            blocks: self.blocks.clone(),
            radical: self.radical.as_ref().map(|r| r.iter().map(|v| coeffs(v)).collect::<Result<Vec<_>>>()).transpose()?,
        })
    }

    pub fn of(alg: &Algebra) -> AlgebraFile {
        let f = alg.field();
        let dim = alg.dim();
        let mut products = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let terms = alg.mul_basis(i, j);
                if !terms.is_empty() {
                    products.push((i, j, terms.iter().map(|(k, c)| (*k, Coeff::of(f, c))).collect()));
                }
            }
        }
        let peirce = alg.peirce().ok();
        AlgebraFile {
            field: FieldSpec::of(f),
            dim: Some(dim),
            basis: alg.labels().to_vec(),
            unit: alg.unit().iter().map(|c| Coeff::of(f, c)).collect(),
            idempotents: peirce.map(|p| p.idempotents().to_vec()),
            blocks: peirce.map(|p| p.blocks().to_vec()),
            products,
            radical: match f {
                Field::Galois(_) => alg
                    .radical()
                    .ok()
                    .map(|j| j.basis().iter().map(|v| v.iter().map(|c| Coeff::of(f, c)).collect()).collect()),
                _ => None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverFile {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize, String)>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    #[serde(default)]
    pub nilpotency: Option<usize>,
}

impl QuiverFile {
    pub fn to_presentation(&self) -> QuiverPresentation {
        QuiverPresentation {
            vertices: self.vertices,
            arrows: self.arrows.iter().map(|(s, t, l)| Arrow { source: *s, target: *t, label: l.clone() }).collect(),
            relations: self.relations.clone(),
            nilpotency: self.nilpotency,
        }
    }

    pub fn of(q: &QuiverPresentation) -> QuiverFile {
        QuiverFile {
            vertices: q.vertices,
            arrows: q.arrows.iter().map(|a| (a.source, a.target, a.label.clone())).collect(),
            relations: q.relations.clone(),
            nilpotency: q.nilpotency,
        }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Invalid(format!("malformed JSON: {e}"))
}

/// Parses `N(n,l)`.
pub fn parse_builtin(s: &str) -> Option<(usize, usize)> {
    let inner = s.trim().strip_prefix("N(")?.strip_suffix(')')?;
    let (n, l) = inner.split_once(',')?;
    Some((n.trim().parse().ok()?, l.trim().parse().ok()?))
}

/// An algebra from `N(n,l)`, a quiver document or an algebra document. The
/// field applies to builtins and quivers; algebra documents carry their own.
pub fn load_algebra(spec: &str, text: Option<&str>, field: &Field) -> Result<Algebra> {
    if let Some((n, l)) = parse_builtin(spec) {
        if n == 0 || l == 0 {
            return Err(Error::Invalid("N(n,l) needs n, l >= 1".into()));
        }
        return gen_nakayama(n, l).to_algebra(field);
    }
    let text = text.ok_or_else(|| Error::Invalid(format!("no algebra named {spec:?}")))?;
    algebra_from_json(text, field)
}

/// The `result` of a report envelope, or the document itself.
fn unwrap_report(v: Value) -> Value {
    match v {
        Value::Object(mut m) if m.contains_key("tool") && m.contains_key("result") => m.remove("result").unwrap_or_default(),
        other => other,
    }
}

/// Reads an algebra or quiver document; the output of `gen`, `tensor` and
/// `extend-scalars` is accepted as is.
pub fn algebra_from_json(text: &str, field: &Field) -> Result<Algebra> {
    let v = unwrap_report(serde_json::from_str(text).map_err(json_error)?);
    if v.get("vertices").is_some() {
        let q: QuiverFile = serde_json::from_value(v).map_err(json_error)?;
        return q.to_presentation().to_algebra(field);
    }
    let a: AlgebraFile = serde_json::from_value(v).map_err(json_error)?;
    Algebra::validate(a.to_raw()?)
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    serde_json::to_value(AlgebraFile::of(alg)).expect("serializable")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub lo: i64,
    pub terms: Vec<Vec<usize>>,
    #[serde(default)]
    pub diff: Vec<(i64, usize, usize, Vec<Coeff>)>,
}

fn expand(mult: &[usize]) -> Vec<usize> {
    mult.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat(i).take(m)).collect()
}

impl ComplexFile {
    pub fn to_complex(&self, alg: &Algebra) -> Result<ProjComplex> {
        let n = alg.n_idempotents();
        let f = alg.field();
        if let Some(t) = self.terms.iter().find(|t| t.len() != n) {
            return Err(Error::Invalid(format!("term {t:?} needs {n} multiplicities")));
        }
        let terms: Vec<Vec<usize>> = self.terms.iter().map(|m| expand(m)).collect();
        let mut diffs: Vec<ProjMap> =
            (0..terms.len().saturating_sub(1)).map(|k| ProjMap::zero(alg, &terms[k], &terms[k + 1])).collect();
        for (deg, row, col, coeffs) in &self.diff {
            let k = deg - self.lo;
            if k < 0 || k as usize >= diffs.len() {
                return Err(Error::Invalid(format!("differential in degree {deg} is outside the complex")));
            }
            let d = &mut diffs[k as usize];
            if *row >= d.src().len() || *col >= d.tgt().len() {
                return Err(Error::Invalid(format!("entry ({row}, {col}) of d^{deg} is out of range")));
            }
            let (i, j) = (d.src()[*row], d.tgt()[*col]);
            if coeffs.len() != alg.block_dim(i, j) {
                return Err(Error::Invalid(format!(
                    "entry ({row}, {col}) of d^{deg} needs {} coefficients",
                    alg.block_dim(i, j)
                )));
            }
            let v = coeffs.iter().map(|c| c.parse(f)).collect::<Result<Vec<_>>>()?;
            d.set_entry(*row, *col, v);
        }
        ProjComplex::new(alg, self.lo, terms, diffs)
    }

    pub fn of(alg: &Algebra, x: &ProjComplex) -> ComplexFile {
        let n = alg.n_idempotents();
        let f = alg.field();
        let x = x.sorted();
        if x.is_zero() {
            return ComplexFile { algebra: None, lo: 0, terms: Vec::new(), diff: Vec::new() };
        }
        let terms = x
            .terms()
            .iter()
            .map(|t| (0..n).map(|i| t.iter().filter(|&&j| j == i).count()).collect())
            .collect();
        let mut diff = Vec::new();
        for (k, d) in x.diffs().iter().enumerate() {
            for s in 0..d.src().len() {
                for t in 0..d.tgt().len() {
                    let e = d.entry(s, t);
                    if e.iter().any(|c| !c.is_zero()) {
                        diff.push((x.lo() + k as i64, s, t, e.iter().map(|c| Coeff::of(f, c)).collect()));
                    }
                }
            }
        }
        ComplexFile { algebra: None, lo: x.lo(), terms, diff }
    }
}

/// A single complex, or `{"summands": [complex, ..]}`.
pub fn complexes_from_json(text: &str, alg: &Algebra) -> Result<Vec<ProjComplex>> {
    let v: Value = serde_json::from_str(text).map_err(json_error)?;
    match v.get("summands") {
        Some(list) => {
            let files: Vec<ComplexFile> = serde_json::from_value(list.clone()).map_err(json_error)?;
            files.iter().map(|c| c.to_complex(alg)).collect()
        }
        None => {
            let c: ComplexFile = serde_json::from_value(v).map_err(json_error)?;
            Ok(vec![c.to_complex(alg)?])
        }
    }
}

pub fn complex_to_json(alg: &Algebra, x: &ProjComplex) -> Value {
    serde_json::to_value(ComplexFile::of(alg, x)).expect("serializable")
}
