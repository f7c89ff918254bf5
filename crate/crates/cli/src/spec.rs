//! Operator specs: JSON files and `demo:` pseudo-operators.

use std::path::Path;

use num_complex::Complex64;
use serde_json::{Map, Value};

use normdecomp::constructions::{
    cantor_coarsen, coarse_projection, minf_sample, row_isometry, GeneratorSpec, MinfRule,
};
use normdecomp::model::{BasisIndex, BlockId, ExplicitOperator, OperatorRep, Partition};
use normdecomp::Error;

/// An operator together with the partition it is evaluated against.
pub struct Loaded {
    pub op: OperatorRep,
    pub partition: Partition,
}

/// A malformed input, with the path of the offending key.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecError {
    pub key: String,
    pub message: String,
}

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.key, self.message)
    }
}

fn bad(key: impl Into<String>, message: impl Into<String>) -> SpecError {
    SpecError {
        key: key.into(),
        message: message.into(),
    }
}

/// Parses `uniform:W` or `cantor:<partition>`.
pub fn parse_partition(s: &str) -> Result<Partition, SpecError> {
    let key = "--partition";
    if let Some(rest) = s.strip_prefix("cantor:") {
        return Ok(cantor_coarsen(parse_partition(rest)?));
    }
    let w = s
        .strip_prefix("uniform:")
        .ok_or_else(|| bad(key, format!("expected uniform:W or cantor:<partition>, got {s:?}")))?;
    let w: usize = w.parse().map_err(|_| bad(key, format!("width {w:?} is not a non-negative integer")))?;
    Partition::uniform(w).map_err(|e| bad(key, e.to_string()))
}

fn as_index(v: &Value, key: &str) -> Result<usize, SpecError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| bad(key, format!("expected a non-negative integer, got {v}")))
}

fn as_real(v: &Value, key: &str) -> Result<f64, SpecError> {
    v.as_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| bad(key, format!("expected a finite number, got {v}")))
}

fn as_object<'a>(v: &'a Value, key: &str) -> Result<&'a Map<String, Value>, SpecError> {
    v.as_object().ok_or_else(|| bad(key, format!("expected an object, got {v}")))
}

fn field<'a>(obj: &'a Map<String, Value>, parent: &str, name: &str) -> Result<&'a Value, SpecError> {
    obj.get(name).ok_or_else(|| bad(join(parent, name), "missing"))
}

fn join(parent: &str, name: &str) -> String {
    if parent.is_empty() {
        name.to_string()
    } else {
        format!("{parent}.{name}")
    }
}

fn reject_unknown(obj: &Map<String, Value>, parent: &str, allowed: &[&str]) -> Result<(), SpecError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(bad(join(parent, k), "unknown key")),
        None => Ok(()),
    }
}

fn json_partition(v: &Value, key: &str) -> Result<Partition, SpecError> {
    let obj = as_object(v, key)?;
    let kind = field(obj, key, "kind")?;
    match kind.as_str() {
        Some("uniform") => {
            reject_unknown(obj, key, &["kind", "width"])?;
            let wkey = join(key, "width");
            let w = as_index(field(obj, key, "width")?, &wkey)?;
            Partition::uniform(w).map_err(|e| bad(wkey, e.to_string()))
        }
        Some("cantor_coarsen") => {
            reject_unknown(obj, key, &["kind", "base"])?;
            let base = json_partition(field(obj, key, "base")?, &join(key, "base"))?;
            Ok(cantor_coarsen(base))
        }
        _ => Err(bad(
            join(key, "kind"),
            format!("expected \"uniform\" or \"cantor_coarsen\", got {kind}"),
        )),
    }
}

fn json_entries(v: &Value) -> Result<OperatorRep, SpecError> {
    let list = v
        .as_array()
        .ok_or_else(|| bad("entries", format!("expected a list of [row, col, re, im], got {v}")))?;
    let mut out = Vec::with_capacity(list.len());
    for (n, e) in list.iter().enumerate() {
        let key = format!("entries[{n}]");
        let t = e
            .as_array()
            .filter(|t| t.len() == 4)
            .ok_or_else(|| bad(&key, format!("expected [row, col, re, im], got {e}")))?;
        let r = as_index(&t[0], &format!("{key}[0]"))?;
        let c = as_index(&t[1], &format!("{key}[1]"))?;
        let re = as_real(&t[2], &format!("{key}[2]"))?;
        let im = as_real(&t[3], &format!("{key}[3]"))?;
        out.push((BasisIndex(r), BasisIndex(c), Complex64::new(re, im)));
    }
    match ExplicitOperator::new(out) {
        Ok(e) => Ok(e.into()),
        Err(Error::Overlap { row, col }) => Err(bad("entries", format!("position ({row}, {col}) appears twice"))),
        Err(e) => Err(bad("entries", e.to_string())),
    }
}

fn json_lambda(v: &Value, key: &str) -> Result<Complex64, SpecError> {
    if let Some(pair) = v.as_array() {
        if pair.len() == 2 {
            return Ok(Complex64::new(
                as_real(&pair[0], &format!("{key}[0]"))?,
                as_real(&pair[1], &format!("{key}[1]"))?,
            ));
        }
        return Err(bad(key, format!("expected a number or [re, im], got {v}")));
    }
    Ok(Complex64::new(as_real(v, key)?, 0.0))
}

fn json_generator(v: &Value, partition: &Partition) -> Result<GeneratorSpec, SpecError> {
    let obj = as_object(v, "generator")?;
    reject_unknown(obj, "generator", &["name", "params"])?;
    let name = field(obj, "generator", "name")?;
    let empty = Value::Object(Map::new());
    let params = as_object(obj.get("params").unwrap_or(&empty), "generator.params")?;
    let p = "generator.params";
    let construction_partition = |params: &Map<String, Value>| match params.get("partition") {
        Some(v) => json_partition(v, &join(p, "partition")),
        None => Ok(partition.clone()),
    };
    let spec = match name.as_str() {
        Some("matrix_unit") => {
            reject_unknown(params, p, &["group", "i", "j", "partition"])?;
            GeneratorSpec::MatrixUnit {
                partition: construction_partition(params)?,
                group: BlockId(as_index(field(params, p, "group")?, &join(p, "group"))?),
                i: as_index(field(params, p, "i")?, &join(p, "i"))?,
                j: as_index(field(params, p, "j")?, &join(p, "j"))?,
            }
        }
        Some("row_isometry") => {
            reject_unknown(params, p, &["lambda", "partition"])?;
            GeneratorSpec::RowIsometry {
                lambda: json_lambda(field(params, p, "lambda")?, &join(p, "lambda"))?,
                partition: construction_partition(params)?,
            }
        }
        Some("minf_sample") => {
            reject_unknown(params, p, &["rule", "base"])?;
            let rule = field(params, p, "rule")?;
            match rule.as_str() {
                Some("geometric") => GeneratorSpec::MinfSample(MinfRule::Geometric {
                    base: as_real(field(params, p, "base")?, &join(p, "base"))?,
                }),
                Some("inverse_sum") => GeneratorSpec::MinfSample(MinfRule::InverseSum),
                _ => {
                    return Err(bad(
                        join(p, "rule"),
                        format!("expected \"geometric\" or \"inverse_sum\", got {rule}"),
                    ))
                }
            }
        }
        Some("coarse_projection") => {
            reject_unknown(params, p, &["group", "partition"])?;
            GeneratorSpec::CoarseProjection {
                partition: construction_partition(params)?,
                group: BlockId(as_index(field(params, p, "group")?, &join(p, "group"))?),
            }
        }
        _ => {
            return Err(bad(
                "generator.name",
                format!("expected one of matrix_unit, row_isometry, minf_sample, coarse_projection, got {name}"),
            ))
        }
    };
    let blamed = match &spec {
        GeneratorSpec::MinfSample(_) => "base",
        GeneratorSpec::RowIsometry { .. } => "lambda",
        GeneratorSpec::MatrixUnit { .. } | GeneratorSpec::CoarseProjection { .. } => "partition",
    };
    spec.validate().map_err(|e| bad(join(p, blamed), e.to_string()))?;
    Ok(spec)
}

/// Parses the text of an operator spec file.
pub fn parse_spec(text: &str) -> Result<Loaded, SpecError> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad("<file>", format!("invalid JSON: {e}")))?;
    let obj = as_object(&v, "<file>")?;
    reject_unknown(obj, "", &["entries", "generator", "partition"])?;
    let partition = json_partition(field(obj, "", "partition")?, "partition")?;
    let op = match (obj.get("entries"), obj.get("generator")) {
        (Some(e), None) => json_entries(e)?,
        (None, Some(g)) => json_generator(g, &partition)?.build().map_err(|e| bad("generator", e.to_string()))?,
        (Some(_), Some(_)) => return Err(bad("entries", "give exactly one of \"entries\" and \"generator\"")),
        (None, None) => return Err(bad("entries", "missing (or give \"generator\")")),
    };
    Ok(Loaded { op, partition })
}

/// Parameters that shape `demo:` pseudo-operators.
#[derive(Debug, Clone, Copy)]
pub struct DemoParams {
    pub lambda: f64,
    pub base: f64,
    pub group: usize,
}

pub const DEMO_NAMES: [&str; 4] = ["row-isometry", "minf-geometric", "minf-inverse-sum", "coarse-projection"];

fn demo(name: &str, params: DemoParams) -> Result<Loaded, SpecError> {
    let coarse = cantor_coarsen(Partition::atomic());
    let fail = |key: &'static str| move |e: Error| bad(key, e.to_string());
    let (op, partition) = match name {
        "row-isometry" => (
            row_isometry(Complex64::new(params.lambda, 0.0), &coarse).map_err(fail("--lambda"))?,
            coarse,
        ),
        "minf-geometric" => (
            minf_sample(MinfRule::Geometric { base: params.base }).map_err(fail("--base"))?,
            Partition::atomic(),
        ),
        "minf-inverse-sum" => (minf_sample(MinfRule::InverseSum).map_err(fail("--op"))?, Partition::atomic()),
        "coarse-projection" => (
            coarse_projection(&coarse, BlockId(params.group)).map_err(fail("--group"))?,
            coarse,
        ),
        _ => {
            return Err(bad(
                "--op",
                format!("unknown demo operator {name:?}; expected one of {}", DEMO_NAMES.join(", ")),
            ))
        }
    };
    Ok(Loaded { op, partition })
}

/// Resolves `--op` (a file path or `demo:NAME`) and the optional partition override.
pub fn load(op: &str, params: DemoParams, partition: Option<&str>) -> Result<Loaded, SpecError> {
    let mut loaded = match op.strip_prefix("demo:") {
        Some(name) => demo(name, params)?,
        None => {
            let text = std::fs::read_to_string(Path::new(op))
                .map_err(|e| bad("--op", format!("cannot read {op:?}: {e}")))?;
            parse_spec(&text)?
        }
    };
    if let Some(p) = partition {
        loaded.partition = parse_partition(p)?;
    }
    Ok(loaded)
}
