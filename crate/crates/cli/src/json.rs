//! Job-file parsing and exact-scalar JSON encoding.
//!
//! A job is a single JSON object describing the group, a 3-cocycle in
//! canonical-representative form, and optionally a module (by fixture name
//! or inline) or a raw diagonal braiding, plus command parameters.  Every
//! schema violation is reported with the JSON path of the offending value,
//! so that `$.cocycle.c_pair["1,2"]` pinpoints a bad coefficient inside a
//! nested document.
//!
//! Scalars always serialize as `{"root_order": N, "exponent": k}` when they
//! are a power of the distinguished root of unity, and otherwise as an
//! array of rational coefficients in the power basis.  No decimal
//! approximations appear anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use twisted_yd::cocycles::{CocycleData, CocycleSpec};
use twisted_yd::coboundary::SolverVariant;
use twisted_yd::fixtures;
use twisted_yd::groups::{Elem, GroupSpec};
use twisted_yd::linalg::ExactMatrix;
use twisted_yd::nichols::BraidingMatrix;
use twisted_yd::scalars::CycScalar;
use twisted_yd::yd::{Component, YDModule};

/// A schema violation located by JSON path.
#[derive(Debug, Clone)]
pub struct SchemaError {
    /// JSON-pointer-style location of the offending value, e.g. `$.cocycle.c_pair["1,2"]`.
    pub path: String,
    /// What was wrong at that location.
    pub message: String,
}

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at {}: {}", self.path, self.message)
    }
}

impl std::error::Error for SchemaError {}

type R<T> = Result<T, SchemaError>;

fn err<T>(path: &str, message: impl Into<String>) -> R<T> {
    Err(SchemaError { path: path.to_string(), message: message.into() })
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

fn as_obj<'a>(v: &'a Value, path: &str) -> R<&'a Map<String, Value>> {
    v.as_object().ok_or(SchemaError {
        path: path.to_string(),
        message: format!("expected object, found {}", type_name(v)),
    })
}

fn as_array<'a>(v: &'a Value, path: &str) -> R<&'a Vec<Value>> {
    v.as_array().ok_or(SchemaError {
        path: path.to_string(),
        message: format!("expected array, found {}", type_name(v)),
    })
}

fn as_u64(v: &Value, path: &str) -> R<u64> {
    match v.as_u64() {
        Some(n) => Ok(n),
        None => err(path, format!("expected nonnegative integer, found {}", type_name(v))),
    }
}

fn as_i64(v: &Value, path: &str) -> R<i64> {
    match v.as_i64() {
        Some(n) => Ok(n),
        None => err(path, format!("expected integer, found {}", type_name(v))),
    }
}

fn as_bool(v: &Value, path: &str) -> R<bool> {
    match v.as_bool() {
        Some(b) => Ok(b),
        None => err(path, format!("expected boolean, found {}", type_name(v))),
    }
}

fn as_str<'a>(v: &'a Value, path: &str) -> R<&'a str> {
    match v.as_str() {
        Some(s) => Ok(s),
        None => err(path, format!("expected string, found {}", type_name(v))),
    }
}

/// Reject keys outside the allowed set so typos surface as path errors
/// instead of silently ignored fields.
fn check_keys(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> R<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return err(
                &format!("{}.{}", path, key),
                format!("unknown field (allowed: {})", allowed.join(", ")),
            );
        }
    }
    Ok(())
}

/// Output format selector shared by all subcommands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    /// Human-readable lines.
    Text,
    /// Machine-readable JSON with sorted keys.
    Json,
}

/// Command parameters with their defaults.
#[derive(Clone, Debug)]
pub struct Params {
    /// Highest degree explored before reporting an unknown verdict.
    pub cutoff: usize,
    /// Largest per-block word count the symmetrizer will rank.
    pub budget_rows: u64,
    /// Use the covering-group path even when not required.
    pub force_cover: bool,
    /// Which coboundary antiderivative the solver returns.
    pub solver: SolverVariant,
    /// Truncation degree for biproduct construction.
    pub trunc: usize,
    /// Length bound for the biproduct axiom checks.
    pub max_len: usize,
    /// Restrict the simples classification to one degree.
    pub degree: Option<Vec<u32>>,
    /// Output rendering.
    pub format: OutputFormat,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            cutoff: 12,
            budget_rows: 4u64.pow(8),
            force_cover: false,
            solver: SolverVariant::Canonical,
            trunc: 3,
            max_len: 3,
            degree: None,
            format: OutputFormat::Text,
        }
    }
}

/// Module reference inside a job: a named fixture or an inline description.
#[derive(Clone, Debug)]
pub enum ModuleRef {
    /// A named built-in module.
    Fixture(String),
    /// A module given explicitly in the job file.
    Inline(YDModule),
}

/// A parsed job file.  The group is folded into the cocycle (every
/// canonical representative carries its group), so only derived objects
/// remain here.
#[derive(Clone, Debug)]
pub struct Job {
    /// The 3-cocycle, when the job provides one (the group is folded
    /// into it).
    pub cocycle: Option<CocycleSpec>,
    /// The module to operate on, when provided.
    pub module: Option<ModuleRef>,
    /// A raw diagonal braiding, when provided.
    pub braiding: Option<BraidingMatrix>,
    /// Knobs, defaulted when absent.
    pub params: Params,
}

/// The fixture names a job may reference.
pub const FIXTURE_NAMES: [&str; 5] =
    ["example-3.19", "example-3.20", "sec5-V1", "sec5-V2", "sec5-V3"];

/// Resolve a fixture name to its module.
pub fn resolve_fixture(name: &str) -> Option<YDModule> {
    match name {
        "example-3.19" | "sec5-V1" => Some(fixtures::order2_cube_module()),
        "sec5-V2" => Some(fixtures::order2_cube_module_deg2()),
        "sec5-V3" => Some(fixtures::order2_cube_module_deg3()),
        "example-3.20" => Some(fixtures::order6_cube_module()),
        _ => None,
    }
}

/// Parse a full job document.
pub fn parse_job(v: &Value) -> R<Job> {
    let obj = as_obj(v, "$")?;
    check_keys(obj, &["group", "cocycle", "module", "braiding", "params"], "$")?;

    let group = match obj.get("group") {
        Some(g) => Some(parse_group(g, "$.group")?),
        None => None,
    };
    let cocycle = match obj.get("cocycle") {
        Some(c) => {
            let g = group.clone().ok_or(SchemaError {
                path: "$.cocycle".into(),
                message: "a cocycle requires $.group to be present".into(),
            })?;
            Some(parse_cocycle(c, g, "$.cocycle")?)
        }
        None => None,
    };
    let module = match obj.get("module") {
        Some(m) => Some(parse_module_ref(m, group.as_ref(), cocycle.as_ref(), "$.module")?),
        None => None,
    };
    let braiding = match obj.get("braiding") {
        Some(b) => Some(parse_braiding(b, "$.braiding")?),
        None => None,
    };
    let params = match obj.get("params") {
        Some(p) => parse_params(p, "$.params")?,
        None => Params::default(),
    };
    Ok(Job { cocycle, module, braiding, params })
}

fn parse_group(v: &Value, path: &str) -> R<GroupSpec> {
    let obj = as_obj(v, path)?;
    check_keys(obj, &["orders"], path)?;
    let orders_path = format!("{}.orders", path);
    let orders_val = obj
        .get("orders")
        .ok_or(SchemaError { path: orders_path.clone(), message: "missing field".into() })?;
    let arr = as_array(orders_val, &orders_path)?;
    if arr.is_empty() {
        return err(&orders_path, "at least one cyclic factor order is required");
    }
    let mut orders = Vec::with_capacity(arr.len());
    for (i, item) in arr.iter().enumerate() {
        let p = format!("{}[{}]", orders_path, i);
        let n = as_u64(item, &p)?;
        if n < 2 || n > 1_000 {
            return err(&p, format!("cyclic factor order must be in 2..=1000, found {}", n));
        }
        orders.push(n as u32);
    }
    Ok(GroupSpec::new(orders))
}

/// Parse an index list like "1,3" (1-based in the document) into 0-based
/// indices, checking strict increase and range.
fn parse_index_key(key: &str, arity: usize, rank: usize, path: &str) -> R<Vec<usize>> {
    let parts: Vec<&str> = key.split(',').collect();
    if parts.len() != arity {
        return err(path, format!("key must list exactly {} factor indices", arity));
    }
    let mut out = Vec::with_capacity(arity);
    for part in parts {
        let n: usize = match part.trim().parse() {
            Ok(n) => n,
            Err(_) => return err(path, format!("key component {:?} is not an integer", part)),
        };
        if n < 1 || n > rank {
            return err(path, format!("factor index {} out of range 1..={}", n, rank));
        }
        out.push(n - 1);
    }
    for w in out.windows(2) {
        if w[0] >= w[1] {
            return err(path, "factor indices must be strictly increasing");
        }
    }
    Ok(out)
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

fn parse_cocycle(v: &Value, group: GroupSpec, path: &str) -> R<CocycleSpec> {
    let obj = as_obj(v, path)?;
    check_keys(obj, &["c_single", "c_pair", "c_triple"], path)?;
    let orders = group.orders().to_vec();
    let rank = orders.len();

    let mut spec = CocycleSpec::trivial(group);

    if let Some(single) = obj.get("c_single") {
        let p = format!("{}.c_single", path);
        let arr = as_array(single, &p)?;
        if arr.len() != rank {
            return err(
                &p,
                format!("expected {} entries (one per cyclic factor), found {}", rank, arr.len()),
            );
        }
        let mut c_single = Vec::with_capacity(rank);
        for (i, item) in arr.iter().enumerate() {
            let ip = format!("{}[{}]", p, i);
            let c = as_u64(item, &ip)?;
            if c >= orders[i] as u64 {
                return err(&ip, format!("coefficient must be < {}, found {}", orders[i], c));
            }
            c_single.push(c as u32);
        }
        spec.c_single = c_single;
    }

    if let Some(pair) = obj.get("c_pair") {
        let p = format!("{}.c_pair", path);
        let map = as_obj(pair, &p)?;
        for (key, item) in map {
            let kp = format!("{}[{:?}]", p, key);
            let idx = parse_index_key(key, 2, rank, &kp)?;
            let modulus = gcd_u32(orders[idx[0]], orders[idx[1]]);
            let c = as_u64(item, &kp)?;
            if c >= modulus as u64 {
                return err(&kp, format!("coefficient must be < {}, found {}", modulus, c));
            }
            spec.c_pair.insert((idx[0], idx[1]), c as u32);
        }
    }

    if let Some(triple) = obj.get("c_triple") {
        let p = format!("{}.c_triple", path);
        let map = as_obj(triple, &p)?;
        for (key, item) in map {
            let kp = format!("{}[{:?}]", p, key);
            let idx = parse_index_key(key, 3, rank, &kp)?;
            let modulus = gcd_u32(gcd_u32(orders[idx[0]], orders[idx[1]]), orders[idx[2]]);
            let c = as_u64(item, &kp)?;
            if c >= modulus as u64 {
                return err(&kp, format!("coefficient must be < {}, found {}", modulus, c));
            }
            spec.c_triple.insert((idx[0], idx[1], idx[2]), c as u32);
        }
    }

    if let Err(msg) = spec.validate() {
        return err(path, msg);
    }
    Ok(spec)
}

fn parse_module_ref(
    v: &Value,
    group: Option<&GroupSpec>,
    cocycle: Option<&CocycleSpec>,
    path: &str,
) -> R<ModuleRef> {
    let obj = as_obj(v, path)?;
    check_keys(obj, &["fixture", "inline"], path)?;
    match (obj.get("fixture"), obj.get("inline")) {
        (Some(f), None) => {
            let p = format!("{}.fixture", path);
            let name = as_str(f, &p)?;
            if resolve_fixture(name).is_none() {
                return err(
                    &p,
                    format!("unknown fixture {:?} (known: {})", name, FIXTURE_NAMES.join(", ")),
                );
            }
            Ok(ModuleRef::Fixture(name.to_string()))
        }
        (None, Some(inner)) => {
            let p = format!("{}.inline", path);
            let group = group.ok_or(SchemaError {
                path: p.clone(),
                message: "an inline module requires $.group to be present".into(),
            })?;
            let cocycle = cocycle.ok_or(SchemaError {
                path: p.clone(),
                message: "an inline module requires $.cocycle to be present".into(),
            })?;
            Ok(ModuleRef::Inline(parse_inline_module(inner, group, cocycle, &p)?))
        }
        _ => err(path, "exactly one of \"fixture\" or \"inline\" is required"),
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

fn parse_inline_module(
    v: &Value,
    group: &GroupSpec,
    cocycle: &CocycleSpec,
    path: &str,
) -> R<YDModule> {
    let obj = as_obj(v, path)?;
    check_keys(obj, &["root_order", "components"], path)?;

    let rp = format!("{}.root_order", path);
    let root = match obj.get("root_order") {
        Some(r) => {
            let n = as_u64(r, &rp)?;
            if n < 1 || n > 10_000 {
                return err(&rp, format!("root order must be in 1..=10000, found {}", n));
            }
            n as u32
        }
        None => return err(&rp, "missing field"),
    };
    let cocycle_data = CocycleData::Rep(cocycle.clone());
    let n_ctx = lcm_u32(root, cocycle_data.root_order());

    let cp = format!("{}.components", path);
    let comps_val =
        obj.get("components").ok_or(SchemaError { path: cp.clone(), message: "missing field".into() })?;
    let comps = as_array(comps_val, &cp)?;
    if comps.is_empty() {
        return err(&cp, "at least one component is required");
    }

    let gsize = group.size() as usize;
    let mut components = Vec::with_capacity(comps.len());
    for (ci, comp_val) in comps.iter().enumerate() {
        let comp_path = format!("{}[{}]", cp, ci);
        let comp = as_obj(comp_val, &comp_path)?;
        check_keys(comp, &["degree", "action"], &comp_path)?;

        let dp = format!("{}.degree", comp_path);
        let degree_val =
            comp.get("degree").ok_or(SchemaError { path: dp.clone(), message: "missing field".into() })?;
        let degree = parse_elem(degree_val, group, &dp)?;

        let ap = format!("{}.action", comp_path);
        let action_val =
            comp.get("action").ok_or(SchemaError { path: ap.clone(), message: "missing field".into() })?;
        let mats = as_array(action_val, &ap)?;
        if mats.len() != gsize {
            return err(
                &ap,
                format!(
                    "expected {} matrices (one per group element in lexicographic order), found {}",
                    gsize,
                    mats.len()
                ),
            );
        }
        let mut action = Vec::with_capacity(gsize);
        let mut dim: Option<usize> = None;
        for (mi, mat_val) in mats.iter().enumerate() {
            let mp = format!("{}[{}]", ap, mi);
            let mat = parse_matrix(mat_val, n_ctx, &mp)?;
            if mat.rows() != mat.cols() {
                return err(&mp, format!("matrix must be square, found {}x{}", mat.rows(), mat.cols()));
            }
            match dim {
                None => dim = Some(mat.rows()),
                Some(d) if d != mat.rows() => {
                    return err(
                        &mp,
                        format!("matrix size {} disagrees with earlier matrices of size {}", mat.rows(), d),
                    )
                }
                _ => {}
            }
            action.push(mat);
        }
        components.push(Component { degree, action });
    }

    Ok(YDModule { group: group.clone(), cocycle: cocycle_data, n_ctx, components })
}

/// Parse a group element as an array of coordinates.
pub fn parse_elem(v: &Value, group: &GroupSpec, path: &str) -> R<Elem> {
    let arr = as_array(v, path)?;
    let orders = group.orders();
    if arr.len() != orders.len() {
        return err(
            path,
            format!("expected {} coordinates (one per cyclic factor), found {}", orders.len(), arr.len()),
        );
    }
    let mut out = Vec::with_capacity(arr.len());
    for (i, item) in arr.iter().enumerate() {
        let p = format!("{}[{}]", path, i);
        let c = as_u64(item, &p)?;
        if c >= orders[i] as u64 {
            return err(&p, format!("coordinate must be < {}, found {}", orders[i], c));
        }
        out.push(c as u32);
    }
    Ok(out)
}

fn parse_matrix(v: &Value, n_ctx: u32, path: &str) -> R<ExactMatrix> {
    let rows_val = as_array(v, path)?;
    if rows_val.is_empty() {
        return err(path, "matrix must have at least one row");
    }
    let mut rows = Vec::with_capacity(rows_val.len());
    let mut cols: Option<usize> = None;
    for (ri, row_val) in rows_val.iter().enumerate() {
        let rp = format!("{}[{}]", path, ri);
        let row_arr = as_array(row_val, &rp)?;
        match cols {
            None => cols = Some(row_arr.len()),
            Some(c) if c != row_arr.len() => {
                return err(&rp, format!("row length {} disagrees with earlier rows of length {}", row_arr.len(), c))
            }
            _ => {}
        }
        let mut row = Vec::with_capacity(row_arr.len());
        for (ci, cell) in row_arr.iter().enumerate() {
            let cellp = format!("{}[{}]", rp, ci);
            row.push(parse_scalar(cell, n_ctx, &cellp)?);
        }
        rows.push(row);
    }
    Ok(ExactMatrix::from_rows(n_ctx, rows))
}

fn parse_rational(s: &str, path: &str) -> R<(BigInt, BigInt)> {
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = match num_str.parse() {
        Ok(n) => n,
        Err(_) => return err(path, format!("{:?} is not an integer numerator", num_str)),
    };
    let den: BigInt = match den_str.parse() {
        Ok(d) => d,
        Err(_) => return err(path, format!("{:?} is not an integer denominator", den_str)),
    };
    if den.is_zero() {
        return err(path, "denominator must be nonzero");
    }
    Ok((num, den))
}

/// Parse one scalar.  Accepted forms:
/// - integer: `-1`
/// - rational string: `"3/2"`
/// - root-of-unity power: `{"root_order": 12, "exponent": 5}`
/// - power-basis coefficients: `{"root_order": 8, "coefficients": ["1/2", "0", "-1/2", "0"]}`
pub fn parse_scalar(v: &Value, n_ctx: u32, path: &str) -> R<CycScalar> {
    match v {
        Value::Number(_) => {
            let n = as_i64(v, path)?;
            Ok(CycScalar::from_int(n_ctx, n))
        }
        Value::String(s) => {
            let (num, den) = parse_rational(s, path)?;
            Ok(CycScalar::from_ratio(n_ctx, num, den))
        }
        Value::Object(obj) => {
            check_keys(obj, &["root_order", "exponent", "coefficients"], path)?;
            let rp = format!("{}.root_order", path);
            let root = match obj.get("root_order") {
                Some(r) => as_u64(r, &rp)? as u32,
                None => return err(&rp, "missing field"),
            };
            if root < 1 {
                return err(&rp, "root order must be at least 1");
            }
            if n_ctx % root != 0 {
                return err(
                    &rp,
                    format!("root order {} does not divide the ambient root order {}", root, n_ctx),
                );
            }
            match (obj.get("exponent"), obj.get("coefficients")) {
                (Some(e), None) => {
                    let k = as_i64(e, &format!("{}.exponent", path))?;
                    Ok(CycScalar::root_of_unity(root, k).embed(n_ctx))
                }
                (None, Some(c)) => {
                    let cp = format!("{}.coefficients", path);
                    let arr = as_array(c, &cp)?;
                    let phi = twisted_yd::scalars::euler_phi(root) as usize;
                    if arr.len() != phi {
                        return err(
                            &cp,
                            format!(
                                "expected {} power-basis coefficients for root order {}, found {}",
                                phi,
                                root,
                                arr.len()
                            ),
                        );
                    }
                    let mut rationals = Vec::with_capacity(arr.len());
                    for (i, item) in arr.iter().enumerate() {
                        let ip = format!("{}[{}]", cp, i);
                        let (num, den) = match item {
                            Value::Number(_) => (BigInt::from(as_i64(item, &ip)?), BigInt::one()),
                            Value::String(s) => parse_rational(s, &ip)?,
                            other => {
                                return err(
                                    &ip,
                                    format!("expected integer or rational string, found {}", type_name(other)),
                                )
                            }
                        };
                        rationals.push((num, den));
                    }
                    let mut common = BigInt::one();
                    for (_, den) in &rationals {
                        common = common.lcm(den);
                    }
                    let nums: Vec<BigInt> =
                        rationals.iter().map(|(num, den)| num * (&common / den)).collect();
                    Ok(CycScalar::from_coeffs(root, nums, common).embed(n_ctx))
                }
                _ => err(path, "exactly one of \"exponent\" or \"coefficients\" is required"),
            }
        }
        other => err(path, format!("expected scalar, found {}", type_name(other))),
    }
}

fn parse_braiding(v: &Value, path: &str) -> R<BraidingMatrix> {
    let obj = as_obj(v, path)?;
    check_keys(obj, &["root_order", "exponents"], path)?;
    let rp = format!("{}.root_order", path);
    let root = match obj.get("root_order") {
        Some(r) => {
            let n = as_u64(r, &rp)?;
            if n < 1 || n > 10_000 {
                return err(&rp, format!("root order must be in 1..=10000, found {}", n));
            }
            n as u32
        }
        None => return err(&rp, "missing field"),
    };
    let ep = format!("{}.exponents", path);
    let rows_val =
        obj.get("exponents").ok_or(SchemaError { path: ep.clone(), message: "missing field".into() })?;
    let rows = as_array(rows_val, &ep)?;
    let dim = rows.len();
    if dim == 0 {
        return err(&ep, "at least one row is required");
    }
    let mut exps = Vec::with_capacity(dim * dim);
    for (ri, row_val) in rows.iter().enumerate() {
        let rp = format!("{}[{}]", ep, ri);
        let row = as_array(row_val, &rp)?;
        if row.len() != dim {
            return err(&rp, format!("expected {} entries to match the row count, found {}", dim, row.len()));
        }
        for (ci, cell) in row.iter().enumerate() {
            exps.push(as_i64(cell, &format!("{}[{}]", rp, ci))?);
        }
    }
    Ok(BraidingMatrix::new(root, dim, exps))
}

fn parse_params(v: &Value, path: &str) -> R<Params> {
    let obj = as_obj(v, path)?;
    check_keys(
        obj,
        &["cutoff", "budget_rows", "force_cover", "solver", "trunc", "max_len", "degree", "format"],
        path,
    )?;
    let mut params = Params::default();
    if let Some(c) = obj.get("cutoff") {
        let p = format!("{}.cutoff", path);
        let n = as_u64(c, &p)?;
        if n < 1 || n > 64 {
            return err(&p, format!("cutoff must be in 1..=64, found {}", n));
        }
        params.cutoff = n as usize;
    }
    if let Some(b) = obj.get("budget_rows") {
        let p = format!("{}.budget_rows", path);
        let n = as_u64(b, &p)?;
        if n < 1 {
            return err(&p, "budget must be at least 1");
        }
        params.budget_rows = n;
    }
    if let Some(f) = obj.get("force_cover") {
        params.force_cover = as_bool(f, &format!("{}.force_cover", path))?;
    }
    if let Some(s) = obj.get("solver") {
        let p = format!("{}.solver", path);
        params.solver = match as_str(s, &p)? {
            "canonical" => SolverVariant::Canonical,
            "shifted" => SolverVariant::Shifted,
            other => return err(&p, format!("expected \"canonical\" or \"shifted\", found {:?}", other)),
        };
    }
    if let Some(t) = obj.get("trunc") {
        let p = format!("{}.trunc", path);
        let n = as_u64(t, &p)?;
        if n > 32 {
            return err(&p, format!("truncation must be at most 32, found {}", n));
        }
        params.trunc = n as usize;
    }
    if let Some(m) = obj.get("max_len") {
        let p = format!("{}.max_len", path);
        let n = as_u64(m, &p)?;
        if n > 32 {
            return err(&p, format!("max_len must be at most 32, found {}", n));
        }
        params.max_len = n as usize;
    }
    if let Some(d) = obj.get("degree") {
        let p = format!("{}.degree", path);
        let arr = as_array(d, &p)?;
        let mut out = Vec::with_capacity(arr.len());
        for (i, item) in arr.iter().enumerate() {
            out.push(as_u64(item, &format!("{}[{}]", p, i))? as u32);
        }
        params.degree = Some(out);
    }
    if let Some(f) = obj.get("format") {
        let p = format!("{}.format", path);
        params.format = match as_str(f, &p)? {
            "text" => OutputFormat::Text,
            "json" => OutputFormat::Json,
            other => return err(&p, format!("expected \"text\" or \"json\", found {:?}", other)),
        };
    }
    Ok(params)
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

fn rational_string(num: &BigInt, den: &BigInt) -> String {
    let g = num.gcd(den);
    let (mut n, mut d) = (num / &g, den / &g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    if d.is_one() {
        n.to_string()
    } else {
        format!("{}/{}", n, d)
    }
}

/// Serialize a scalar: root-of-unity powers as `{"root_order", "exponent"}`,
/// everything else as exact power-basis rational coefficients.
pub fn scalar_value(s: &CycScalar) -> Value {
    if let Some(k) = s.as_root_power() {
        let mut obj = Map::new();
        obj.insert("root_order".into(), Value::from(s.root_order()));
        obj.insert("exponent".into(), Value::from(k));
        return Value::Object(obj);
    }
    let (nums, den) = s.coeffs();
    let coeffs: Vec<Value> =
        nums.iter().map(|n| Value::String(rational_string(n, den))).collect();
    let mut obj = Map::new();
    obj.insert("root_order".into(), Value::from(s.root_order()));
    obj.insert("coefficients".into(), Value::Array(coeffs));
    Value::Object(obj)
}

/// Serialize a cocycle in the same canonical-representative schema the
/// parser accepts, with 1-based factor indices in the keys.
pub fn cocycle_value(spec: &CocycleSpec) -> Value {
    let mut obj = Map::new();
    obj.insert(
        "c_single".into(),
        Value::Array(spec.c_single.iter().map(|&c| Value::from(c)).collect()),
    );
    let mut pair = Map::new();
    for (&(s, t), &c) in &spec.c_pair {
        pair.insert(format!("{},{}", s + 1, t + 1), Value::from(c));
    }
    obj.insert("c_pair".into(), Value::Object(pair));
    let mut triple = Map::new();
    for (&(r, s, t), &c) in &spec.c_triple {
        triple.insert(format!("{},{},{}", r + 1, s + 1, t + 1), Value::from(c));
    }
    obj.insert("c_triple".into(), Value::Object(triple));
    Value::Object(obj)
}

/// Serialize a group element.
pub fn elem_value(e: &Elem) -> Value {
    Value::Array(e.iter().map(|&c| Value::from(c)).collect())
}

/// Serialize a module in the inline schema the parser accepts.
pub fn module_inline_value(m: &YDModule) -> Value {
    let comps: Vec<Value> = m
        .components
        .iter()
        .map(|c| {
            let mats: Vec<Value> = c
                .action
                .iter()
                .map(|mat| {
                    let rows: Vec<Value> = (0..mat.rows())
                        .map(|i| {
                            Value::Array(
                                (0..mat.cols()).map(|j| scalar_value(mat.at(i, j))).collect(),
                            )
                        })
                        .collect();
                    Value::Array(rows)
                })
                .collect();
            let mut obj = Map::new();
            obj.insert("degree".into(), elem_value(&c.degree));
            obj.insert("action".into(), Value::Array(mats));
            Value::Object(obj)
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("root_order".into(), Value::from(m.n_ctx));
    obj.insert("components".into(), Value::Array(comps));
    Value::Object(obj)
}

/// Serialize a full job document referencing the module inline, in the
/// schema `parse_job` accepts.
pub fn job_with_inline_module(m: &YDModule, params: Option<Value>) -> Value {
    let spec = match &m.cocycle {
        CocycleData::Rep(spec) => spec.clone(),
        _ => panic!("inline job serialization expects a canonical-representative cocycle"),
    };
    let mut group = Map::new();
    group.insert(
        "orders".into(),
        Value::Array(m.group.orders().iter().map(|&o| Value::from(o)).collect()),
    );
    let mut obj = Map::new();
    obj.insert("group".into(), Value::Object(group));
    obj.insert("cocycle".into(), cocycle_value(&spec));
    let mut module = Map::new();
    module.insert("inline".into(), module_inline_value(m));
    obj.insert("module".into(), Value::Object(module));
    if let Some(p) = params {
        obj.insert("params".into(), p);
    }
    Value::Object(obj)
}
