use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use quasikit::classify::{
    catalog_entry, classify, derive_identity, ClassificationReport, ClassifyError, ClassifyOptions, EntryOutcome,
};
use quasikit::constructions::{
    ch_quasigroup, left_distributive_quasigroup, linear_quasigroup, resolve_group, t_quasigroup, ConstructionError,
    LinearForm,
};
use quasikit::freewords::{canonical_form, words_equal, WordEquality, WordProblemMode};
use quasikit::tables::{parse_qg, write_qg, Permutation, QgError, QuasigroupTable};
use quasikit::terms::{
    check_identity_with, parse_identity, parse_loop_identity, parse_term, EvalConfig, EvalError, Identity, Verdict,
};
use serde_json::{json, Value};

use crate::{exit, Command, Form, Kind};

pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: u8,
    /// Printed on the error stream after the output.
    pub diagnostic: Option<String>,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: exit::OK,
            diagnostic: None,
        }
    }
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::BudgetExceeded { .. } => Failure::new(exit::SOFTWARE, e.to_string()),
            EvalError::UnboundVariable(_) => Failure::new(exit::DATA, e.to_string()),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Eval(inner) => inner.into(),
            ClassifyError::UnknownEntry(_) => Failure::new(exit::USAGE, e.to_string()),
            other => Failure::new(exit::DATA, other.to_string()),
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        Failure::new(exit::DATA, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(exit::NO_INPUT, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<QuasigroupTable, Failure> {
    parse_qg(&read(path)?).map_err(|e| Failure::new(exit::DATA, format!("{}: {e}", path.display())))
}

fn mode(medial: bool) -> WordProblemMode {
    if medial {
        WordProblemMode::Medial
    } else {
        WordProblemMode::FreeT
    }
}

fn rows(q: &QuasigroupTable) -> Value {
    json!(q.rows().collect::<Vec<_>>())
}

fn check_element(q: &QuasigroupTable, name: &str, x: usize) -> Result<(), Failure> {
    if x < q.order() {
        Ok(())
    } else {
        Err(Failure::new(
            exit::USAGE,
            format!("{name} = {x} is outside 0..{}", q.order()),
        ))
    }
}

/// Writes the table to `output`, or returns it as the text output.
fn emit_table(q: &QuasigroupTable, output: Option<&Path>, mut json: Value) -> Result<Output, Failure> {
    let qg = write_qg(q);
    json["order"] = json!(q.order());
    json["table"] = rows(q);
    let text = match output {
        Some(path) => {
            fs::write(path, &qg).map_err(|e| Failure::new(exit::NO_INPUT, format!("{}: {e}", path.display())))?;
            json["output"] = json!(path.display().to_string());
            format!("wrote order-{} table to {}\n", q.order(), path.display())
        }
        None => qg,
    };
    Ok(Output::ok(text, json))
}

pub fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Check {
            file,
            identity,
            named,
            u,
            budget,
        } => check(&file, identity.as_deref(), named.as_deref(), EvalConfig { u, budget }),
        Command::Classify {
            file,
            max_class,
            decompose_t,
            entries,
            budget,
        } => {
            let options = ClassifyOptions {
                entries,
                max_class,
                decompose_t,
                config: EvalConfig { u: 0, budget },
            };
            run_classify(&file, &options)
        }
        Command::Isotope { file, a, b, output } => {
            let q = load(&file)?;
            check_element(&q, "a", a)?;
            check_element(&q, "b", b)?;
            let iso = q.principal_isotope(a, b);
            emit_table(
                &iso,
                output.as_deref(),
                json!({"command": "isotope", "a": a, "b": b, "identity": q.mul(b, a)}),
            )
        }
        Command::Construct {
            kind,
            group,
            phi,
            psi,
            c,
            form,
            output,
        } => {
            let g = resolve_group(&group);
            let n = g.order();
            let phi = phi.unwrap_or_else(|| Permutation::identity(n));
            let psi = psi.unwrap_or_else(|| Permutation::identity(n));
            let c = c.unwrap_or(0);
            let form = match form {
                Form::Middle => LinearForm::Middle,
                Form::Trailing => LinearForm::Trailing,
            };
            let (q, name) = match kind {
                Kind::Group => (g, "group"),
                Kind::Linear => (linear_quasigroup(&g, &phi, &psi, c, form)?, "linear"),
                Kind::T => (t_quasigroup(&g, &phi, &psi, c)?, "t"),
                Kind::Ch => (ch_quasigroup(&g, c)?, "ch"),
                Kind::Leftdist => (left_distributive_quasigroup(&g, &phi)?, "leftdist"),
            };
            emit_table(
                &q,
                output.as_deref(),
                json!({"command": "construct", "kind": name, "group": group.to_string()}),
            )
        }
        Command::Derive { identity } => {
            let loop_identity = parse_loop_identity(&identity).map_err(|e| Failure::new(exit::DATA, e.to_string()))?;
            let derived = derive_identity(&loop_identity);
            Ok(Output::ok(
                format!("{derived}\n"),
                json!({"command": "derive", "input": loop_identity.to_string(), "identity": derived.to_string()}),
            ))
        }
        Command::WordEq { t1, t2, medial } => word_eq(&t1, &t2, mode(medial)),
        Command::Normalize { term, medial } => {
            let t = parse_term(&term).map_err(|e| Failure::new(exit::DATA, e.to_string()))?;
            let mode = mode(medial);
            let form = canonical_form(&t, mode);
            Ok(Output::ok(
                format!("{form}\n"),
                json!({"command": "normalize", "mode": mode, "term": t.to_string(), "canonical": form.to_string(), "items": form}),
            ))
        }
    }
}

fn validate(path: &Path) -> Result<Output, Failure> {
    let text = read(path)?;
    Ok(match parse_qg(&text) {
        Ok(q) => Output::ok(
            format!("valid quasigroup of order {}\n", q.order()),
            json!({"command": "validate", "valid": true, "order": q.order()}),
        ),
        Err(e) => {
            let reason = match &e {
                QgError::Invalid(inner) => inner.to_string(),
                other => other.to_string(),
            };
            Output {
                text: format!("invalid: {reason}\n"),
                json: json!({"command": "validate", "valid": false, "error": reason}),
                code: exit::INVALID,
                diagnostic: Some(format!("{}: {e}", path.display())),
            }
        }
    })
}

fn verdict_output(command: &str, identity: &Identity, verdict: &Verdict, mut json: Value) -> Output {
    json["command"] = json!(command);
    json["identity"] = json!(identity.to_string());
    if let Value::Object(extra) = serde_json::to_value(verdict).expect("serializable") {
        json.as_object_mut().expect("object").extend(extra);
    }
    let (text, code) = match verdict {
        Verdict::Holds => ("holds\n".to_string(), exit::OK),
        Verdict::Fails(a) => (format!("fails\ncounterexample: {a}\n"), exit::FAILS),
    };
    Output {
        text,
        json,
        code,
        diagnostic: None,
    }
}

fn check(path: &Path, identity: Option<&str>, named: Option<&str>, config: EvalConfig) -> Result<Output, Failure> {
    let (id, key) = match (identity, named) {
        (Some(text), _) => (
            parse_identity(text).map_err(|e| Failure::new(exit::DATA, e.to_string()))?,
            None,
        ),
        (None, Some(key)) => {
            let entry =
                catalog_entry(key).ok_or_else(|| Failure::new(exit::USAGE, format!("no catalog entry `{key}`")))?;
            (entry.identity(), Some(key))
        }
        (None, None) => return Err(Failure::new(exit::USAGE, "give --identity or --named")),
    };
    let q = load(path)?;
    check_element(&q, "u", config.u)?;
    let verdict = check_identity_with(&q, &id, &config)?;
    Ok(verdict_output("check", &id, &verdict, json!({"named": key})))
}

fn run_classify(path: &Path, options: &ClassifyOptions) -> Result<Output, Failure> {
    let q = load(path)?;
    let report = classify(&q, options)?;
    let mut json = serde_json::to_value(&report).expect("serializable");
    json["command"] = json!("classify");
    Ok(Output::ok(classify_text(&report), json))
}

fn outcome_text(o: &EntryOutcome) -> String {
    match o {
        EntryOutcome::Checked(Verdict::Holds) => "holds".into(),
        EntryOutcome::Checked(Verdict::Fails(a)) => format!("fails at {a}"),
        EntryOutcome::BudgetExceeded => "budget exceeded".into(),
    }
}

fn classify_text(r: &ClassificationReport) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut s = String::new();
    let o = &r.oracle;
    let _ = writeln!(s, "order {}", r.order);
    let _ = writeln!(
        s,
        "oracle: group isotope {}, abelian isotope {}, nilpotency class {}",
        yes_no(o.group_isotope),
        yes_no(o.abelian_isotope),
        o.nilpotency_class.map_or_else(|| "-".to_string(), |c| c.to_string())
    );
    let width = r.entries.keys().map(String::len).max().unwrap_or(0);
    for (key, outcome) in &r.entries {
        let _ = writeln!(s, "{key:width$}  {}", outcome_text(outcome));
    }
    for (n, outcome) in &r.nilpotent_isotopy {
        let _ = writeln!(s, "nilpotent class <= {n}: {}", outcome_text(outcome));
    }
    if let Some(d) = &r.t_decomposition {
        let _ = writeln!(
            s,
            "T-decomposition: a={} b={} zero={} phi={} psi={} c={}",
            d.a, d.b, d.zero, d.phi, d.psi, d.c
        );
    }
    let _ = writeln!(s, "consistency: {}", r.consistency);
    s
}

fn word_eq(t1: &str, t2: &str, mode: WordProblemMode) -> Result<Output, Failure> {
    let parse = |s: &str| parse_term(s).map_err(|e| Failure::new(exit::DATA, format!("`{s}`: {e}")));
    let (a, b) = (parse(t1)?, parse(t2)?);
    let (ca, cb) = (canonical_form(&a, mode), canonical_form(&b, mode));
    let result = words_equal(&a, &b, mode);
    let mut json = json!({"command": "word-eq", "mode": mode, "lhs": ca.to_string(), "rhs": cb.to_string()});
    if let Value::Object(extra) = serde_json::to_value(&result).expect("serializable") {
        json.as_object_mut().expect("object").extend(extra);
    }
    let mut text = String::new();
    let code = match &result {
        WordEquality::Equal => {
            text.push_str("equal\n");
            exit::OK
        }
        WordEquality::Unequal(cert) => {
            text.push_str("unequal\n");
            let _ = writeln!(text, "lhs: {ca}");
            let _ = writeln!(text, "rhs: {cb}");
            match cert {
                Some(c) => {
                    let _ = writeln!(
                        text,
                        "certificate: T-quasigroup over {} with phi={} psi={} at {} gives {} vs {}",
                        c.group, c.phi, c.psi, c.assignment, c.lhs_value, c.rhs_value
                    );
                }
                None => text.push_str("certificate: canonical forms differ\n"),
            }
            exit::FAILS
        }
    };
    Ok(Output {
        text,
        json,
        code,
        diagnostic: None,
    })
}
