//! The JSON document format: a coalgebra by sparse structure constants,
//! optional comodules, and named subspaces.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "name": "lomp",
//!   "field": "F_3",
//!   "dim": 2,
//!   "delta": [[0, 0, 0, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
//!   "epsilon": ["1", "0"],
//!   "comodules": [{"name": "M", "dim": 1, "rho": [[0, 0, 0, "1"]]}],
//!   "subspaces": [{"name": "g", "of": "C", "basis": [["1", "0"]]}]
//! }
//! ```
//!
//! A `delta` entry `[i, j, k, c]` puts `c · e_j ⊗ e_k` into `Δ(e_i)`; a `rho`
//! entry `[a, b, k, c]` puts `c · f_b ⊗ e_k` into `ρ(f_a)`. Scalars are
//! strings (`"a/b"` over ℚ, residues over `F_p`); integers are accepted too.

use std::fmt;
use std::sync::Arc;

use serde_json::Value;

use crate::axioms::AxiomReport;
use crate::coalg::{Coalgebra, Comodule};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{tensor_index, Matrix, Subspace};

pub const SCHEMA_VERSION: u64 = 1;

/// Largest dimension accepted for a coalgebra or comodule.
pub const MAX_DIM: usize = 64;

/// A syntax or structure error with its location in the text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based; `0` when the location could not be recovered.
    pub line: usize,
    pub column: usize,
    /// JSON path such as `delta[3][1]`; empty for syntax errors.
    pub path: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)?;
        if !self.path.is_empty() {
            write!(f, " ({})", self.path)?;
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedComodule {
    pub name: String,
    pub comodule: Comodule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSubspace {
    pub name: String,
    /// `"C"` or the name of a comodule.
    pub of: String,
    pub subspace: Subspace,
}

/// A parsed document. Shapes, indices and scalars are checked on parsing;
/// the axioms are checked by [`WorkbenchDocument::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkbenchDocument {
    pub name: String,
    pub coalgebra: Arc<Coalgebra>,
    pub comodules: Vec<NamedComodule>,
    pub subspaces: Vec<NamedSubspace>,
}

/// Axiom failures of one object in a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationError {
    /// `"C"` or a comodule name.
    pub target: String,
    pub report: AxiomReport,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.target, self.report)
    }
}

impl WorkbenchDocument {
    pub fn new(name: impl Into<String>, coalgebra: Coalgebra) -> Self {
        WorkbenchDocument {
            name: name.into(),
            coalgebra: Arc::new(coalgebra),
            comodules: Vec::new(),
            subspaces: Vec::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.coalgebra.spec()
    }

    pub fn comodule(&self, name: &str) -> Option<&Comodule> {
        self.comodules.iter().find(|c| c.name == name).map(|c| &c.comodule)
    }

    pub fn subspace(&self, name: &str) -> Option<&NamedSubspace> {
        self.subspaces.iter().find(|s| s.name == name)
    }

    /// Axiom failures of the coalgebra and of every comodule.
    pub fn validate(&self) -> Vec<ValidationError> {
        let mut out = Vec::new();
        let report = self.coalgebra.validate();
        if !report.passed() {
            out.push(ValidationError {
                target: "C".into(),
                report,
            });
            // comodule axioms are meaningless over a broken coalgebra
            return out;
        }
        for c in &self.comodules {
            let report = c.comodule.validate();
            if !report.passed() {
                out.push(ValidationError {
                    target: c.name.clone(),
                    report,
                });
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
enum Seg {
    Key(&'static str),
    Index(usize),
}

type Path = Vec<Seg>;

fn show_path(path: &[Seg]) -> String {
    let mut s = String::new();
    for seg in path {
        match seg {
            Seg::Key(k) => {
                if !s.is_empty() {
                    s.push('.');
                }
                s.push_str(k);
            }
            Seg::Index(i) => s.push_str(&format!("[{i}]")),
        }
    }
    s
}

struct Parser<'a> {
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, path: &[Seg], message: impl Into<String>) -> ParseError {
        let (line, column) = locate(self.text, path).unwrap_or((0, 0));
        ParseError {
            line,
            column,
            path: show_path(path),
            message: message.into(),
        }
    }

    fn object<'v>(&self, v: &'v Value, path: &[Seg], allowed: &[&str]) -> Result<&'v serde_json::Map<String, Value>, ParseError> {
        let obj = v.as_object().ok_or_else(|| self.error(path, "expected an object"))?;
        if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(self.error(path, format!("unknown key {k:?}")));
        }
        Ok(obj)
    }

    fn index(&self, v: &Value, path: &[Seg], bound: usize) -> Result<usize, ParseError> {
        let i = v
            .as_u64()
            .ok_or_else(|| self.error(path, "expected a nonnegative integer index"))? as usize;
        if i >= bound {
            return Err(self.error(path, format!("index {i} out of range 0..{bound}")));
        }
        Ok(i)
    }

    fn dim(&self, v: Option<&Value>, path: &[Seg]) -> Result<usize, ParseError> {
        let d = v
            .and_then(Value::as_u64)
            .ok_or_else(|| self.error(path, "expected a positive integer dimension"))? as usize;
        if d == 0 || d > MAX_DIM {
            return Err(self.error(path, format!("dimension must be between 1 and {MAX_DIM}")));
        }
        Ok(d)
    }

    fn scalar(&self, v: &Value, path: &[Seg], spec: FieldSpec) -> Result<Scalar, ParseError> {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            _ => return Err(self.error(path, "expected a scalar string")),
        };
        spec.parse_scalar(&text).map_err(|e| self.error(path, e.to_string()))
    }

    fn array<'v>(&self, v: &'v Value, path: &[Seg]) -> Result<&'v Vec<Value>, ParseError> {
        v.as_array().ok_or_else(|| self.error(path, "expected an array"))
    }

    /// `[[x, y, z, c], …]` into a `(rows × cols)` matrix with entry
    /// `(row(y, z), x)`.
    fn triples(
        &self,
        v: Option<&Value>,
        path: &[Seg],
        bounds: [usize; 3],
        spec: FieldSpec,
        shape: (usize, usize),
        row: impl Fn(usize, usize) -> usize,
    ) -> Result<Matrix, ParseError> {
        let mut m = Matrix::zeros(spec, shape.0, shape.1);
        let Some(v) = v else {
            return Ok(m);
        };
        for (t, entry) in self.array(v, path)?.iter().enumerate() {
            let mut p: Path = path.to_vec();
            p.push(Seg::Index(t));
            let items = self.array(entry, &p)?;
            if items.len() != 4 {
                return Err(self.error(&p, "expected [index, index, index, scalar]"));
            }
            let mut idx = [0; 3];
            for (n, bound) in bounds.iter().enumerate() {
                let mut q = p.clone();
                q.push(Seg::Index(n));
                idx[n] = self.index(&items[n], &q, *bound)?;
            }
            let mut q = p.clone();
            q.push(Seg::Index(3));
            let c = self.scalar(&items[3], &q, spec)?;
            let r = row(idx[1], idx[2]);
            let sum = m.get(r, idx[0]).add(&c);
            m.set(r, idx[0], sum);
        }
        Ok(m)
    }

    fn document(&self) -> Result<WorkbenchDocument, ParseError> {
        let root: Value = serde_json::from_str(self.text).map_err(|e| ParseError {
            line: e.line(),
            column: e.column(),
            path: String::new(),
            message: e.to_string(),
        })?;
        let top = self.object(
            &root,
            &[],
            &["schema_version", "name", "field", "dim", "delta", "epsilon", "comodules", "subspaces"],
        )?;
        if let Some(v) = top.get("schema_version") {
            if v.as_u64() != Some(SCHEMA_VERSION) {
                return Err(self.error(&[Seg::Key("schema_version")], format!("unsupported schema version, expected {SCHEMA_VERSION}")));
            }
        }
        let name = match top.get("name") {
            None => String::new(),
            Some(v) => v
                .as_str()
                .ok_or_else(|| self.error(&[Seg::Key("name")], "expected a string"))?
                .to_string(),
        };
        let field_path = [Seg::Key("field")];
        let spec: FieldSpec = top
            .get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| self.error(&field_path, "expected a field name such as \"Q\" or \"F_3\""))?
            .parse()
            .map_err(|e: crate::Error| self.error(&field_path, e.to_string()))?;
        let n = self.dim(top.get("dim"), &[Seg::Key("dim")])?;
        let delta = self.triples(top.get("delta"), &[Seg::Key("delta")], [n, n, n], spec, (n * n, n), |j, k| {
            tensor_index(j, k, n)
        })?;
        let mut epsilon = vec![spec.zero(); n];
        if let Some(v) = top.get("epsilon") {
            let path = [Seg::Key("epsilon")];
            let items = self.array(v, &path)?;
            if items.len() != n {
                return Err(self.error(&path, format!("expected {n} counit values, got {}", items.len())));
            }
            for (i, x) in items.iter().enumerate() {
                epsilon[i] = self.scalar(x, &[Seg::Key("epsilon"), Seg::Index(i)], spec)?;
            }
        }
        let coalgebra = Arc::new(Coalgebra::unchecked(delta, epsilon).map_err(|e| self.error(&[], e.to_string()))?);

        let mut comodules: Vec<NamedComodule> = Vec::new();
        if let Some(v) = top.get("comodules") {
            for (ci, entry) in self.array(v, &[Seg::Key("comodules")])?.iter().enumerate() {
                let path = vec![Seg::Key("comodules"), Seg::Index(ci)];
                let obj = self.object(entry, &path, &["name", "dim", "rho"])?;
                let mut np = path.clone();
                np.push(Seg::Key("name"));
                let cname = obj
                    .get("name")
                    .and_then(Value::as_str)
                    .ok_or_else(|| self.error(&np, "expected a comodule name"))?;
                if cname == "C" || comodules.iter().any(|c| c.name == cname) {
                    return Err(self.error(&np, format!("duplicate or reserved name {cname:?}")));
                }
                let mut dp = path.clone();
                dp.push(Seg::Key("dim"));
                let m = self.dim(obj.get("dim"), &dp)?;
                let mut rp = path.clone();
                rp.push(Seg::Key("rho"));
                let rho = self.triples(obj.get("rho"), &rp, [m, m, n], spec, (m * n, m), |b, k| tensor_index(b, k, n))?;
                let comodule = Comodule::unchecked(coalgebra.clone(), rho).map_err(|e| self.error(&path, e.to_string()))?;
                comodules.push(NamedComodule {
                    name: cname.to_string(),
                    comodule,
                });
            }
        }

        let mut subspaces: Vec<NamedSubspace> = Vec::new();
        if let Some(v) = top.get("subspaces") {
            for (si, entry) in self.array(v, &[Seg::Key("subspaces")])?.iter().enumerate() {
                let path = vec![Seg::Key("subspaces"), Seg::Index(si)];
                let obj = self.object(entry, &path, &["name", "of", "basis"])?;
                let mut np = path.clone();
                np.push(Seg::Key("name"));
                let sname = obj
                    .get("name")
                    .and_then(Value::as_str)
                    .ok_or_else(|| self.error(&np, "expected a subspace name"))?;
                if subspaces.iter().any(|s| s.name == sname) {
                    return Err(self.error(&np, format!("duplicate subspace name {sname:?}")));
                }
                let mut op = path.clone();
                op.push(Seg::Key("of"));
                let of = match obj.get("of") {
                    None => "C".to_string(),
                    Some(v) => v.as_str().ok_or_else(|| self.error(&op, "expected \"C\" or a comodule name"))?.to_string(),
                };
                let ambient = if of == "C" {
                    n
                } else {
                    comodules
                        .iter()
                        .find(|c| c.name == of)
                        .ok_or_else(|| self.error(&op, format!("no comodule named {of:?}")))?
                        .comodule
                        .dim()
                };
                let mut bp = path.clone();
                bp.push(Seg::Key("basis"));
                let rows = match obj.get("basis") {
                    None => Vec::new(),
                    Some(v) => self.array(v, &bp)?.clone(),
                };
                let mut vectors = Vec::new();
                for (r, row) in rows.iter().enumerate() {
                    let mut rp = bp.clone();
                    rp.push(Seg::Index(r));
                    let items = self.array(row, &rp)?;
                    if items.len() != ambient {
                        return Err(self.error(&rp, format!("expected a vector of length {ambient}")));
                    }
                    let mut vec = Vec::with_capacity(ambient);
                    for (i, x) in items.iter().enumerate() {
                        let mut xp = rp.clone();
                        xp.push(Seg::Index(i));
                        vec.push(self.scalar(x, &xp, spec)?);
                    }
                    vectors.push(vec);
                }
                let subspace = Subspace::span(spec, ambient, &vectors).map_err(|e| self.error(&bp, e.to_string()))?;
                subspaces.push(NamedSubspace {
                    name: sname.to_string(),
                    of,
                    subspace,
                });
            }
        }
        Ok(WorkbenchDocument {
            name,
            coalgebra,
            comodules,
            subspaces,
        })
    }
}

/// Parses document text. Structure errors carry the JSON path and, when it
/// can be found, the line and column of the offending value.
pub fn parse(text: &str) -> Result<WorkbenchDocument, ParseError> {
    Parser { text }.document()
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

fn scalar_list(v: &[Scalar]) -> String {
    let items: Vec<String> = v.iter().map(|x| quote(&x.to_string())).collect();
    format!("[{}]", items.join(", "))
}

fn push_triples(out: &mut String, indent: &str, triples: &[(usize, usize, usize, Scalar)]) {
    if triples.is_empty() {
        out.push_str("[]");
        return;
    }
    out.push_str("[\n");
    for (t, (a, b, c, s)) in triples.iter().enumerate() {
        out.push_str(&format!("{indent}  [{a}, {b}, {c}, {}]", quote(&s.to_string())));
        out.push_str(if t + 1 < triples.len() { ",\n" } else { "\n" });
    }
    out.push_str(indent);
    out.push(']');
}

/// Canonical text: sorted sparse triples, one per line, subspaces in their
/// reduced echelon bases. `emit(&parse(&emit(d))?) == emit(d)`.
pub fn emit(doc: &WorkbenchDocument) -> String {
    let c = &doc.coalgebra;
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"schema_version\": {SCHEMA_VERSION},\n"));
    out.push_str(&format!("  \"name\": {},\n", quote(&doc.name)));
    out.push_str(&format!("  \"field\": {},\n", quote(&c.spec().to_string())));
    out.push_str(&format!("  \"dim\": {},\n", c.dim()));
    let delta: Vec<_> = (0..c.dim())
        .flat_map(|i| c.terms(i).iter().map(move |(j, k, s)| (i, *j, *k, s.clone())))
        .collect();
    out.push_str("  \"delta\": ");
    push_triples(&mut out, "  ", &delta);
    out.push_str(",\n");
    out.push_str(&format!("  \"epsilon\": {},\n", scalar_list(c.epsilon())));
    out.push_str("  \"comodules\": [");
    for (ci, m) in doc.comodules.iter().enumerate() {
        out.push_str(if ci == 0 { "\n" } else { ",\n" });
        out.push_str(&format!("    {{\n      \"name\": {},\n      \"dim\": {},\n      \"rho\": ", quote(&m.name), m.comodule.dim()));
        let rho: Vec<_> = (0..m.comodule.dim())
            .flat_map(|a| m.comodule.terms(a).iter().map(move |(b, k, s)| (a, *b, *k, s.clone())))
            .collect();
        push_triples(&mut out, "      ", &rho);
        out.push_str("\n    }");
    }
    out.push_str(if doc.comodules.is_empty() { "],\n" } else { "\n  ],\n" });
    out.push_str("  \"subspaces\": [");
    for (si, s) in doc.subspaces.iter().enumerate() {
        out.push_str(if si == 0 { "\n" } else { ",\n" });
        let rows: Vec<String> = s.subspace.basis_vectors().iter().map(|v| scalar_list(v)).collect();
        out.push_str(&format!(
            "    {{\"name\": {}, \"of\": {}, \"basis\": [{}]}}",
            quote(&s.name),
            quote(&s.of),
            rows.join(", ")
        ));
    }
    out.push_str(if doc.subspaces.is_empty() { "]\n" } else { "\n  ]\n" });
    out.push_str("}\n");
    out
}

/// Line and column (1-based) of the value at `path`, by a small scan of the
/// text.
fn locate(text: &str, path: &[Seg]) -> Option<(usize, usize)> {
    let bytes = text.as_bytes();
    let mut pos = skip_ws(bytes, 0);
    for seg in path {
        match seg {
            Seg::Key(key) => {
                if bytes.get(pos) != Some(&b'{') {
                    return None;
                }
                pos = skip_ws(bytes, pos + 1);
                loop {
                    if bytes.get(pos) != Some(&b'"') {
                        return None;
                    }
                    let end = skip_string(bytes, pos)?;
                    let name: String = serde_json::from_str(&text[pos..end]).ok()?;
                    pos = skip_ws(bytes, end);
                    if bytes.get(pos) != Some(&b':') {
                        return None;
                    }
                    pos = skip_ws(bytes, pos + 1);
                    if name == *key {
                        break;
                    }
                    pos = skip_ws(bytes, skip_value(bytes, pos)?);
                    if bytes.get(pos) != Some(&b',') {
                        return None;
                    }
                    pos = skip_ws(bytes, pos + 1);
                }
            }
            Seg::Index(i) => {
                if bytes.get(pos) != Some(&b'[') {
                    return None;
                }
                pos = skip_ws(bytes, pos + 1);
                for _ in 0..*i {
                    pos = skip_ws(bytes, skip_value(bytes, pos)?);
                    if bytes.get(pos) != Some(&b',') {
                        return None;
                    }
                    pos = skip_ws(bytes, pos + 1);
                }
            }
        }
    }
    let before = &text[..pos];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Some((line, column))
}

fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

/// Position just past the string starting at `pos`.
fn skip_string(bytes: &[u8], mut pos: usize) -> Option<usize> {
    pos += 1;
    while pos < bytes.len() {
        match bytes[pos] {
            b'\\' => pos += 2,
            b'"' => return Some(pos + 1),
            _ => pos += 1,
        }
    }
    None
}

/// Position just past the value starting at `pos`.
fn skip_value(bytes: &[u8], pos: usize) -> Option<usize> {
    match *bytes.get(pos)? {
        b'"' => skip_string(bytes, pos),
        open @ (b'{' | b'[') => {
            let close = if open == b'{' { b'}' } else { b']' };
            let mut p = skip_ws(bytes, pos + 1);
            if bytes.get(p) == Some(&close) {
                return Some(p + 1);
            }
            loop {
                if open == b'{' {
                    p = skip_ws(bytes, skip_string(bytes, p)?);
                    p = skip_ws(bytes, p + 1);
                }
                p = skip_ws(bytes, skip_value(bytes, p)?);
                match bytes.get(p)? {
                    b',' => p = skip_ws(bytes, p + 1),
                    c if *c == close => return Some(p + 1),
                    _ => return None,
                }
            }
        }
        _ => {
            let mut p = pos;
            while p < bytes.len() && !matches!(bytes[p], b',' | b']' | b'}') && !bytes[p].is_ascii_whitespace() {
                p += 1;
            }
            Some(p)
        }
    }
}
