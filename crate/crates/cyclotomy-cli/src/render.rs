//! Deterministic output builders. JSON is the machine contract: identical
//! arguments must produce byte-identical output, so every object is built
//! with a fixed key order and every list in a stable order. Tables render
//! `Z[ζ_e]` values in the `a+b*z` text form.

use cyclotomy::{
    BigInt, CharacterSetup, CycInt, CycNumMatrix, FieldElement, FieldSpec, JacobiMatrix,
    OrbitClass, RuleKind,
};
use serde_json::{json, Map, Value};

/// Exact JSON number from an arbitrary-precision integer.
fn bigint_value(n: &BigInt) -> Value {
    serde_json::from_str(&n.to_string()).expect("decimal integer is valid JSON")
}

fn generator_value(g: &FieldElement) -> Value {
    Value::String(g.to_string())
}

pub fn rules_name(kind: RuleKind) -> &'static str {
    match kind {
        RuleKind::Even => "even",
        RuleKind::Odd => "odd",
    }
}

// --- field ---

pub fn field_json(f: &FieldSpec, g: &FieldElement) -> Value {
    let mut obj = Map::new();
    obj.insert("p".into(), json!(f.p()));
    obj.insert("r".into(), json!(f.r()));
    obj.insert("q".into(), json!(f.q()));
    if let Some(m) = f.modulus() {
        obj.insert("modulus".into(), json!(m));
    }
    obj.insert("generator".into(), generator_value(g));
    Value::Object(obj)
}

/// Human form of a little-endian polynomial, e.g. `x^2+x+1`.
pub fn poly_text(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (t, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let var = match t {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{t}"),
        };
        let term = match (t, c) {
            (0, c) => format!("{c}"),
            (_, 1) => var,
            (_, c) => format!("{c}{var}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

pub fn field_table(f: &FieldSpec, g: &FieldElement) -> String {
    let mut out = String::new();
    out.push_str(&format!("p: {}\nr: {}\nq: {}\n", f.p(), f.r(), f.q()));
    if let Some(m) = f.modulus() {
        let list: Vec<String> = m.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("modulus: {} ({})\n", list.join(","), poly_text(m)));
    }
    out.push_str(&format!("generator: {g}\n"));
    out
}

// --- matrices ---

fn matrix_header(s: &CharacterSetup) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("e".into(), json!(s.e()));
    obj.insert("q".into(), json!(s.field().q()));
    obj.insert("generator".into(), generator_value(s.generator()));
    obj
}

pub fn cycint_json(v: &CycInt) -> Value {
    let mut obj = Map::new();
    obj.insert("e".into(), json!(v.e()));
    obj.insert(
        "coeffs".into(),
        Value::Array(v.coeffs().iter().map(bigint_value).collect()),
    );
    Value::Object(obj)
}

pub fn cyc_matrix_json(m: &CycNumMatrix, s: &CharacterSetup) -> Value {
    let e = m.e();
    let rows: Vec<Value> = (0..e)
        .map(|a| Value::Array((0..e).map(|b| json!(m.get(a, b))).collect()))
        .collect();
    let mut obj = matrix_header(s);
    obj.insert("entries".into(), Value::Array(rows));
    Value::Object(obj)
}

pub fn jacobi_matrix_json(m: &JacobiMatrix, s: &CharacterSetup) -> Value {
    let e = m.e();
    let rows: Vec<Value> = (0..e)
        .map(|i| Value::Array((0..e).map(|j| cycint_json(m.get(i, j))).collect()))
        .collect();
    let mut obj = matrix_header(s);
    obj.insert("entries".into(), Value::Array(rows));
    Value::Object(obj)
}

fn grid(e: u64, row_label: &str, col_label: &str, cell: impl Fn(u64, u64) -> String) -> String {
    let cells: Vec<Vec<String>> = (0..e)
        .map(|a| (0..e).map(|b| cell(a, b)).collect())
        .collect();
    let mut width = format!("{col_label}={}", e - 1).len();
    for row in &cells {
        for c in row {
            width = width.max(c.len());
        }
    }
    let label_width = format!("{row_label}={}", e - 1).len();
    let mut out = String::new();
    out.push_str(&" ".repeat(label_width));
    for b in 0..e {
        out.push_str(&format!("  {:>width$}", format!("{col_label}={b}")));
    }
    out.push('\n');
    for (a, row) in cells.iter().enumerate() {
        out.push_str(&format!("{:<label_width$}", format!("{row_label}={a}")));
        for c in row {
            out.push_str(&format!("  {c:>width$}"));
        }
        out.push('\n');
    }
    out
}

fn setup_line(s: &CharacterSetup) -> String {
    format!(
        "q={} (p={}, r={}), e={}, k={}, generator {}, {} rules",
        s.field().q(),
        s.field().p(),
        s.field().r(),
        s.e(),
        s.k(),
        s.generator(),
        rules_name(s.symmetry_case().kind()),
    )
}

pub fn cyc_matrix_table(m: &CycNumMatrix, s: &CharacterSetup) -> String {
    let mut out = format!("cyclotomic numbers of order {}: {}\n", m.e(), setup_line(s));
    out.push_str(&grid(m.e(), "a", "b", |a, b| m.get(a, b).to_string()));
    out.push_str(&format!("sum of entries: {} (q-2)\n", m.sum()));
    out
}

pub fn jacobi_matrix_table(m: &JacobiMatrix, s: &CharacterSetup) -> String {
    let mut out = format!("Jacobi sums of order {}: {}\n", m.e(), setup_line(s));
    out.push_str(&grid(m.e(), "i", "j", |i, j| m.get(i, j).to_string()));
    out
}

pub fn cyc_matrix_csv(m: &CycNumMatrix) -> String {
    let mut out = String::from("a,b,value\n");
    for a in 0..m.e() {
        for b in 0..m.e() {
            out.push_str(&format!("{a},{b},{}\n", m.get(a, b)));
        }
    }
    out
}

pub fn jacobi_matrix_csv(m: &JacobiMatrix) -> String {
    let mut out = String::from("i,j,value\n");
    for i in 0..m.e() {
        for j in 0..m.e() {
            out.push_str(&format!("{i},{j},{}\n", m.get(i, j)));
        }
    }
    out
}

// --- classes ---

pub fn orbit_class_json(class: &OrbitClass) -> Value {
    let mut obj = Map::new();
    let (ra, rb) = class.representative();
    obj.insert("rep".into(), json!([ra, rb]));
    obj.insert(
        "members".into(),
        Value::Array(
            class
                .members()
                .iter()
                .map(|&(a, b)| json!([a, b]))
                .collect(),
        ),
    );
    obj.insert("signs".into(), json!(class.signs()));
    Value::Object(obj)
}

pub fn classes_json(
    e: u64,
    kind: RuleKind,
    family_name: &str,
    classes: &[OrbitClass],
) -> Value {
    let mut obj = Map::new();
    obj.insert("e".into(), json!(e));
    obj.insert("case".into(), json!(rules_name(kind)));
    obj.insert("family".into(), json!(family_name));
    obj.insert(
        "classes".into(),
        Value::Array(classes.iter().map(orbit_class_json).collect()),
    );
    obj.insert("count".into(), json!(classes.len()));
    obj.insert("closed_form".into(), json!(cyclotomy::class_count(e)));
    obj.insert(
        "published_closed_form".into(),
        json!(cyclotomy::published_class_count(e)),
    );
    Value::Object(obj)
}

pub fn classes_table(e: u64, kind: RuleKind, family_name: &str, classes: &[OrbitClass]) -> String {
    let mut out = format!(
        "symmetry classes: order {e}, {} rules, {family_name} family\n",
        rules_name(kind)
    );
    for (n, class) in classes.iter().enumerate() {
        let (ra, rb) = class.representative();
        let members: Vec<String> = class
            .members()
            .iter()
            .zip(class.signs())
            .map(|(&(a, b), &s)| {
                if class.signs().iter().any(|&x| x < 0) {
                    format!("({a},{b}){}", if s < 0 { "-" } else { "+" })
                } else {
                    format!("({a},{b})")
                }
            })
            .collect();
        out.push_str(&format!(
            "{:>4}: rep ({ra},{rb})  size {}  members {}\n",
            n + 1,
            class.size(),
            members.join(" ")
        ));
    }
    let count = classes.len() as u64;
    let closed = cyclotomy::class_count(e);
    let published = cyclotomy::published_class_count(e);
    out.push_str(&format!("{count} classes; closed form {closed}"));
    if published != closed {
        out.push_str(&format!("; published closed form {published}"));
    }
    out.push('\n');
    out
}

/// Pretty JSON plus trailing newline; key order is already fixed by
/// construction.
pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialization cannot fail");
    s.push('\n');
    s
}
