//! Instance files: JSON descriptions of a group, a ring, a (twisted) partial
//! action and optional cocycles. Every semantic failure names the offending
//! value by JSON pointer.

use std::collections::BTreeMap;
use std::path::Path;

use pcross_core::cohomology::Cochain;
use pcross_core::paction::{validate_twisted, Report, TwistedUnitalPartialAction, UnitalPartialAction};
use pcross_core::{Caps, FiniteCommRing, FiniteGroup};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("{0}")]
    Io(String),
    #[error("{pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error("{pointer}: {message}")]
    Semantic { pointer: String, message: String },
    #[error("{what}: {source}")]
    Core { what: String, source: pcross_core::Error },
}

impl InstanceError {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceError::Io(_) => "IoError",
            InstanceError::Schema { .. } => "SchemaError",
            InstanceError::Semantic { .. } => "SemanticError",
            InstanceError::Core { .. } => "CoreError",
        }
    }

    pub fn pointer(&self) -> Option<&str> {
        match self {
            InstanceError::Schema { pointer, .. } | InstanceError::Semantic { pointer, .. } => Some(pointer),
            _ => None,
        }
    }
}

type Result<T> = std::result::Result<T, InstanceError>;

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> InstanceError {
    InstanceError::Schema { pointer: pointer.into(), message: message.into() }
}

fn semantic(pointer: impl Into<String>, message: impl Into<String>) -> InstanceError {
    InstanceError::Semantic { pointer: pointer.into(), message: message.into() }
}

/// A parsed instance. `tpa` has passed shape checks; call [`Instance::validate`]
/// (or use [`parse_instance`]) for the axioms.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub tpa: TwistedUnitalPartialAction,
    pub caps: Caps,
    /// named cochains from the "cocycles" object, unvalidated values
    pub cocycles: BTreeMap<String, (usize, Vec<usize>)>,
}

impl Instance {
    pub fn action(&self) -> &UnitalPartialAction {
        self.tpa.base()
    }

    pub fn validate(&self) -> Report {
        validate_twisted(&self.tpa)
    }

    /// A named cocycle as a checked [`Cochain`] over the base action.
    pub fn cocycle(&self, name: &str) -> Result<Cochain> {
        let (degree, values) =
            self.cocycles.get(name).ok_or_else(|| semantic(format!("/cocycles/{name}"), "no such cocycle"))?;
        Cochain::new(self.action(), *degree, values.clone())
            .map_err(|e| semantic(format!("/cocycles/{name}"), e.to_string()))
    }

    /// The twist `omega` as a 2-cochain.
    pub fn twist_cochain(&self) -> Result<Cochain> {
        Cochain::new(self.action(), 2, self.tpa.omegas().to_vec()).map_err(|e| semantic("/twist", e.to_string()))
    }
}

/// Reads, builds and validates. The first axiom violation becomes a
/// [`InstanceError::Semantic`] pointing into the file.
pub fn parse_instance(path: &Path) -> Result<Instance> {
    let inst = load_instance(path)?;
    check(&inst)?;
    Ok(inst)
}

/// Reads and builds without checking the partial-action axioms.
pub fn load_instance(path: &Path) -> Result<Instance> {
    let v = read_json(path)?;
    let default_name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    from_value(&v, &default_name)
}

/// Same as [`parse_instance`] for an in-memory document.
pub fn parse_value(v: &Value, default_name: &str) -> Result<Instance> {
    let inst = from_value(v, default_name)?;
    check(&inst)?;
    Ok(inst)
}

/// Maps the first violation to the part of the file it comes from.
fn check(inst: &Instance) -> Result<()> {
    let report = inst.validate();
    // axioms about a single entry point more precisely than the identities tying several together
    let broad = |a: &str| matches!(a, "twist-cocycle" | "composition" | "inverse");
    let Some(v) = report.violations.iter().min_by_key(|v| broad(&v.axiom)) else { return Ok(()) };
    let pointer = match v.axiom.as_str() {
        "identity" => "/paction/idem/0".to_string(),
        "idempotents" | "unital" => format!("/paction/idem/{}", v.witness[0]),
        a if a.starts_with("twist") => format!("/twist/{},{}", v.witness[0], v.witness[1]),
        _ => format!("/paction/alpha/{}", v.witness[0]),
    };
    Err(semantic(pointer, format!("{} at {:?}: {}", v.axiom, v.witness, v.message)))
}

fn object<'a>(v: &'a Value, pointer: &str) -> Result<&'a serde_json::Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(pointer, "expected an object"))
}

fn get<'a>(v: &'a Value, key: &str, pointer: &str) -> Result<&'a Value> {
    object(v, pointer)?.get(key).ok_or_else(|| schema(format!("{pointer}/{key}"), "missing"))
}

fn uint(v: &Value, pointer: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| schema(pointer, "expected a non-negative integer"))
}

fn array<'a>(v: &'a Value, pointer: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(pointer, "expected an array"))
}

fn from_value(v: &Value, default_name: &str) -> Result<Instance> {
    object(v, "")?;
    let name = match v.get("name") {
        Some(n) => n.as_str().ok_or_else(|| schema("/name", "expected a string"))?.to_string(),
        None => default_name.to_string(),
    };
    let caps = match v.get("caps") {
        Some(c) => serde_json::from_value(c.clone()).map_err(|e| schema("/caps", e.to_string()))?,
        None => Caps::default(),
    };
    let group = parse_group(get(v, "group", "")?, "/group", &caps)?;
    let ring = parse_ring(get(v, "ring", "")?, "/ring", &caps)?;
    let pa = parse_paction(v.get("paction"), &group, &ring)?;
    let omega = parse_tuple_values(v.get("twist"), "/twist", &pa, 2)?;
    let tpa = TwistedUnitalPartialAction::new(pa, omega).map_err(|e| semantic("/twist", e.to_string()))?;
    let mut cocycles = BTreeMap::new();
    if let Some(c) = v.get("cocycles") {
        for (key, entry) in object(c, "/cocycles")? {
            let p = format!("/cocycles/{key}");
            let degree = uint(get(entry, "degree", &p)?, &format!("{p}/degree"))? as usize;
            let values = parse_tuple_values(entry.get("values"), &format!("{p}/values"), tpa.base(), degree)?;
            cocycles.insert(key.clone(), (degree, values));
        }
    }
    Ok(Instance { name, tpa, caps, cocycles })
}

/// Reads a standalone cochain document `{"degree": n, "values": ...}`
/// without requiring unit values.
pub fn parse_cochain_raw(v: &Value, pa: &UnitalPartialAction) -> Result<(usize, Vec<usize>)> {
    let degree = uint(get(v, "degree", "")?, "/degree")? as usize;
    Ok((degree, parse_tuple_values(v.get("values"), "/values", pa, degree)?))
}

pub fn parse_cochain_value(v: &Value, pa: &UnitalPartialAction) -> Result<Cochain> {
    let (degree, values) = parse_cochain_raw(v, pa)?;
    Cochain::new(pa, degree, values).map_err(|e| semantic("/values", e.to_string()))
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| InstanceError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| schema("", format!("invalid JSON: {e}")))
}

fn parse_group(v: &Value, p: &str, caps: &Caps) -> Result<FiniteGroup> {
    let kind = get(v, "kind", p)?.as_str().ok_or_else(|| schema(format!("{p}/kind"), "expected a string"))?;
    let n = || -> Result<usize> { Ok(uint(get(v, "n", p)?, &format!("{p}/n"))? as usize) };
    let g = match kind {
        "cyclic" => FiniteGroup::cyclic_capped(n()?, caps),
        "dihedral" => FiniteGroup::dihedral_capped(n()?, caps),
        "product" => {
            let fp = format!("{p}/factors");
            let factors = array(get(v, "factors", p)?, &fp)?;
            let mut g = FiniteGroup::trivial();
            for (i, f) in factors.iter().enumerate() {
                let h = parse_group(f, &format!("{fp}/{i}"), caps)?;
                g = FiniteGroup::direct_product_capped(&g, &h, caps).map_err(|e| semantic(&fp, e.to_string()))?;
            }
            Ok(g)
        }
        "table" => {
            let tp = format!("{p}/table");
            let rows = array(get(v, "table", p)?, &tp)?;
            let table = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    array(r, &format!("{tp}/{i}"))?
                        .iter()
                        .enumerate()
                        .map(|(j, e)| Ok(uint(e, &format!("{tp}/{i}/{j}"))? as usize))
                        .collect()
                })
                .collect::<Result<Vec<Vec<usize>>>>()?;
            if table.len() > caps.group_order {
                return Err(InstanceError::Core {
                    what: p.into(),
                    source: pcross_core::Error::cap("group order", table.len(), caps.group_order),
                });
            }
            FiniteGroup::from_table(table)
        }
        other => return Err(schema(format!("{p}/kind"), format!("unknown group kind {other:?}"))),
    };
    g.map_err(|e| match e {
        pcross_core::Error::SizeCapExceeded { .. } => InstanceError::Core { what: p.into(), source: e },
        e => semantic(p, e.to_string()),
    })
}

fn parse_ring(v: &Value, p: &str, caps: &Caps) -> Result<FiniteCommRing> {
    let mp = format!("{p}/moduli");
    let moduli = array(get(v, "moduli", p)?, &mp)?
        .iter()
        .enumerate()
        .map(|(i, m)| uint(m, &format!("{mp}/{i}")))
        .collect::<Result<Vec<u64>>>()?;
    FiniteCommRing::with_caps(&moduli, caps).map_err(|e| match e {
        pcross_core::Error::SizeCapExceeded { .. } => InstanceError::Core { what: p.into(), source: e },
        e => semantic(&mp, e.to_string()),
    })
}

/// A ring element: an index, or the list of residues.
fn element(v: &Value, p: &str, k: &FiniteCommRing) -> Result<usize> {
    match v {
        Value::Number(_) => {
            let a = uint(v, p)? as usize;
            if a >= k.size() {
                return Err(semantic(p, format!("element index {a} out of range (ring has {} elements)", k.size())));
            }
            Ok(a)
        }
        Value::Array(rs) => {
            if rs.len() != k.moduli().len() {
                return Err(semantic(p, format!("expected {} residues", k.moduli().len())));
            }
            let r = rs.iter().enumerate().map(|(i, x)| uint(x, &format!("{p}/{i}"))).collect::<Result<Vec<_>>>()?;
            if let Some(i) = (0..r.len()).find(|&i| r[i] >= k.moduli()[i]) {
                return Err(semantic(format!("{p}/{i}"), format!("residue must be below {}", k.moduli()[i])));
            }
            Ok(k.elem(&r))
        }
        _ => Err(schema(p, "expected an element index or a residue list")),
    }
}

fn group_key(key: &str, p: &str, g: &FiniteGroup) -> Result<usize> {
    match key.parse::<usize>() {
        Ok(x) if x < g.order() => Ok(x),
        _ => Err(semantic(format!("{p}/{key}"), "not a group element index")),
    }
}

fn parse_paction(v: Option<&Value>, g: &FiniteGroup, k: &FiniteCommRing) -> Result<UnitalPartialAction> {
    let n = g.order();
    let Some(v) = v else {
        return Ok(UnitalPartialAction::trivial_global(g.clone(), k.clone()));
    };
    object(v, "/paction")?;
    let mut idem = vec![k.one(); n];
    if let Some(iv) = v.get("idem") {
        for (key, e) in object(iv, "/paction/idem")? {
            let x = group_key(key, "/paction/idem", g)?;
            let p = format!("/paction/idem/{key}");
            let e = element(e, &p, k)?;
            if !k.is_idempotent(e) {
                return Err(semantic(p, "not idempotent"));
            }
            idem[x] = e;
        }
    }
    let specs: BTreeMap<usize, (String, &Value)> = match v.get("alpha") {
        Some(av) => object(av, "/paction/alpha")?
            .iter()
            .map(|(key, s)| Ok((group_key(key, "/paction/alpha", g)?, (key.clone(), s))))
            .collect::<Result<_>>()?,
        None => BTreeMap::new(),
    };
    let mut alpha = vec![];
    for x in 0..n {
        let p = format!("/paction/alpha/{x}");
        let dom = k.ideal_elements(idem[g.inv(x)]).map_err(|e| semantic(&p, e.to_string()))?;
        let map: BTreeMap<usize, usize> = match specs.get(&x) {
            None if x == 0 => dom.iter().map(|&a| (a, a)).collect(),
            None => return Err(semantic(p, "missing")),
            Some((_, Value::String(s))) if s == "identity" => dom.iter().map(|&a| (a, a)).collect(),
            Some((_, s)) if s.get("permute").is_some() => {
                let pp = format!("{p}/permute");
                let perm = array(&s["permute"], &pp)?
                    .iter()
                    .enumerate()
                    .map(|(i, c)| Ok(uint(c, &format!("{pp}/{i}"))? as usize))
                    .collect::<Result<Vec<_>>>()?;
                let m = k.moduli().len();
                let mut sorted = perm.clone();
                sorted.sort_unstable();
                if sorted != (0..m).collect::<Vec<_>>() || (0..m).any(|i| k.moduli()[perm[i]] != k.moduli()[i]) {
                    return Err(semantic(pp, "not a permutation of equal-modulus components"));
                }
                dom.iter()
                    .map(|&a| {
                        let r = k.residues(a);
                        let mut out = vec![0; m];
                        for i in 0..m {
                            out[perm[i]] = r[i];
                        }
                        (a, k.elem(&out))
                    })
                    .collect()
            }
            Some((_, s)) if s.get("map").is_some() => {
                let mp = format!("{p}/map");
                let mut m = BTreeMap::new();
                for (a, b) in object(&s["map"], &mp)? {
                    let ap = format!("{mp}/{a}");
                    let a = a
                        .parse::<usize>()
                        .ok()
                        .filter(|&a| a < k.size())
                        .ok_or_else(|| semantic(&ap, "not an element index"))?;
                    if !dom.contains(&a) {
                        return Err(semantic(ap, "outside the domain K 1_{x^-1}"));
                    }
                    m.insert(a, element(b, &ap, k)?);
                }
                if let Some(a) = dom.iter().find(|a| !m.contains_key(a)) {
                    return Err(semantic(mp, format!("missing a value for element {a}")));
                }
                m
            }
            Some(_) => return Err(schema(p, "expected \"identity\", {\"permute\": [...]} or {\"map\": {...}}")),
        };
        alpha.push(map);
    }
    UnitalPartialAction::new(g.clone(), k.clone(), idem, alpha).map_err(|e| semantic("/paction", e.to_string()))
}

/// Values per tuple, keyed `"x,y,..."`; missing tuples take the unit value
/// `1_{x_1} 1_{x_1 x_2} ...`. A plain array lists all values in tuple order.
fn parse_tuple_values(v: Option<&Value>, p: &str, pa: &UnitalPartialAction, degree: usize) -> Result<Vec<usize>> {
    let (g, k) = (pa.group(), pa.ring());
    let mut values = Cochain::unit(pa, degree).values;
    let Some(v) = v else { return Ok(values) };
    match v {
        Value::Array(items) => {
            if items.len() != values.len() {
                return Err(semantic(p, format!("expected {} values", values.len())));
            }
            for (i, item) in items.iter().enumerate() {
                values[i] = element(item, &format!("{p}/{i}"), k)?;
            }
        }
        Value::Object(m) => {
            for (key, item) in m {
                let kp = format!("{p}/{key}");
                let t: Vec<usize> = key
                    .split(',')
                    .map(|s| s.trim().parse::<usize>().ok().filter(|&x| x < g.order()))
                    .collect::<Option<_>>()
                    .filter(|t: &Vec<usize>| t.len() == degree)
                    .ok_or_else(|| semantic(&kp, format!("expected {degree} comma-separated group indices")))?;
                values[g.tuple_index(&t)] = element(item, &kp, k)?;
            }
        }
        _ => return Err(schema(p, "expected an object or an array")),
    }
    Ok(values)
}

/// The instances shipped in `instances/`, embedded for tests and `--instance desk`.
pub fn builtin(name: &str) -> Option<&'static str> {
    match name {
        "desk" => Some(include_str!("../../../instances/desk.json")),
        "trivial" => Some(include_str!("../../../instances/trivial.json")),
        "swap" => Some(include_str!("../../../instances/swap.json")),
        _ => None,
    }
}

/// A path, or the name of a shipped instance when no such file exists.
pub fn resolve(arg: &str, validate: bool) -> Result<Instance> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(text) = builtin(arg) {
            let v: Value = serde_json::from_str(text).expect("shipped instance is JSON");
            return if validate { parse_value(&v, arg) } else { from_value(&v, arg) };
        }
    }
    if validate {
        parse_instance(path)
    } else {
        load_instance(path)
    }
}
