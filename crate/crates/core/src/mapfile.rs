//! JSON files for structure maps.
//!
//! ```json
//! {"kind": "coaction", "algebra": <presentation or path>,
//!  "hopf": <presentation or path>, "matrix": [[...], ...]}
//! ```
//!
//! `"rho"` and `"kappa"` are accepted as aliases of `"matrix"`. Paths are
//! resolved against the directory of the map file. Partial group actions
//! use `{"kind": "partial-group-action", "group": table, "algebra": ...,
//! "idempotents": {"σ": vector}, "alphas": {"σ": matrix}}` with group
//! elements named by their row in the table.

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::actions::{ActionMap, PartialGroupAction};
use crate::coactions::CoactionMap;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::presentations::{
    algebra_from_json, hopf_from_json, hopf_to_json, matrix_from_json, matrix_to_json,
    presentation_to_json, vector_from_json, vector_to_json, Algebra, Presentation,
};

#[derive(Clone, Debug)]
pub enum MapFile {
    Coaction(CoactionMap),
    Action(ActionMap),
    PartialGroupAction(PartialGroupAction),
}

impl MapFile {
    pub fn kind(&self) -> &'static str {
        match self {
            MapFile::Coaction(_) => "coaction",
            MapFile::Action(_) => "action",
            MapFile::PartialGroupAction(_) => "partial-group-action",
        }
    }

    pub fn field(&self) -> Field {
        match self {
            MapFile::Coaction(c) => c.field(),
            MapFile::Action(a) => a.field(),
            MapFile::PartialGroupAction(p) => p.field(),
        }
    }

    /// Presentations are written inline.
    pub fn to_json(&self) -> Value {
        let alg = |a: &Algebra| presentation_to_json(&Presentation::Algebra(a.clone()));
        match self {
            MapFile::Coaction(c) => json!({
                "kind": self.kind(),
                "algebra": alg(&c.algebra),
                "hopf": hopf_to_json(&c.hopf),
                "matrix": matrix_to_json(&c.rho),
            }),
            MapFile::Action(a) => json!({
                "kind": self.kind(),
                "algebra": alg(&a.algebra),
                "hopf": hopf_to_json(&a.hopf),
                "matrix": matrix_to_json(&a.kappa),
            }),
            MapFile::PartialGroupAction(p) => {
                let keyed = |vals: Vec<Value>| -> Map<String, Value> {
                    vals.into_iter()
                        .enumerate()
                        .map(|(s, v)| (s.to_string(), v))
                        .collect()
                };
                json!({
                    "kind": self.kind(),
                    "group": p.group.table,
                    "algebra": alg(&p.algebra),
                    "idempotents": keyed(p.idempotents.iter().map(|e| vector_to_json(e)).collect()),
                    "alphas": keyed(p.alphas.iter().map(matrix_to_json).collect()),
                })
            }
        }
    }

    pub fn to_canonical_string(&self) -> String {
        // serde_json maps are sorted, so this is stable
        serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n"
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_canonical_string())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<MapFile> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        let v: Value = serde_json::from_str(&text)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        MapFile::from_json(&v, &base)
    }

    /// `base` resolves presentation paths.
    pub fn from_json(v: &Value, base: &Path) -> Result<MapFile> {
        let o = v
            .as_object()
            .ok_or_else(|| Error::Parse("map file must be a JSON object".into()))?;
        let kind = o
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing string key \"kind\"".into()))?;
        let algebra = algebra_from_json(&resolve(o, "algebra", base)?)?;
        let f = algebra.field;
        match kind {
            "coaction" | "action" => {
                let hopf = hopf_from_json(&resolve(o, "hopf", base)?)?;
                let (n, m) = (algebra.dim, hopf.dim);
                let raw = ["matrix", "rho", "kappa"]
                    .iter()
                    .find_map(|k| o.get(*k))
                    .ok_or_else(|| Error::Parse("missing key \"matrix\"".into()))?;
                if kind == "coaction" {
                    let rho = matrix_from_json(f, raw, n * m, n)?;
                    Ok(MapFile::Coaction(CoactionMap::new(algebra, hopf, rho)?))
                } else {
                    let kappa = matrix_from_json(f, raw, n, m * n)?;
                    Ok(MapFile::Action(ActionMap::new(algebra, hopf, kappa)?))
                }
            }
            "partial-group-action" => {
                let table: Vec<Vec<usize>> = serde_json::from_value(
                    o.get("group")
                        .cloned()
                        .ok_or_else(|| Error::Parse("missing key \"group\"".into()))?,
                )
                .map_err(|e| Error::Parse(format!("bad group table: {e}")))?;
                let g = table.len();
                let n = algebra.dim;
                let idempotents = keyed_values(o, "idempotents", g)?
                    .iter()
                    .map(|v| vector_from_json(f, v, n))
                    .collect::<Result<Vec<_>>>()?;
                let alphas = keyed_values(o, "alphas", g)?
                    .iter()
                    .map(|v| matrix_from_json(f, v, n, n))
                    .collect::<Result<Vec<Matrix>>>()?;
                Ok(MapFile::PartialGroupAction(PartialGroupAction::new(
                    table,
                    algebra,
                    idempotents,
                    alphas,
                )?))
            }
            other => Err(Error::Parse(format!("unknown map kind {other:?}"))),
        }
    }
}

/// An inline presentation, or a path to one.
fn resolve(o: &Map<String, Value>, key: &str, base: &Path) -> Result<Value> {
    match o.get(key) {
        Some(Value::String(p)) => {
            let mut path = PathBuf::from(p);
            if path.is_relative() {
                path = base.join(path);
            }
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            Ok(serde_json::from_str(&text)?)
        }
        Some(v @ Value::Object(_)) => Ok(v.clone()),
        Some(_) => Err(Error::Parse(format!("{key:?} must be a path or an object"))),
        None => Err(Error::Parse(format!("missing key {key:?}"))),
    }
}

/// `{"0": x, "1": y}` or `[x, y]`, one entry per group element.
fn keyed_values(o: &Map<String, Value>, key: &str, g: usize) -> Result<Vec<Value>> {
    match o.get(key) {
        Some(Value::Array(a)) if a.len() == g => Ok(a.clone()),
        Some(Value::Object(m)) => (0..g)
            .map(|s| {
                m.get(&s.to_string())
                    .cloned()
                    .ok_or_else(|| Error::Parse(format!("{key:?} has no entry for element {s}")))
            })
            .collect(),
        _ => Err(Error::Parse(format!(
            "{key:?} needs one entry per group element"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{partial_s3_group, partial_z2_on_k2, sweedler_on_dual_numbers};
    use crate::presentations::Presentation;

    #[test]
    fn round_trips_are_byte_stable() {
        let f = Field::Rational;
        let files = [
            MapFile::Coaction(sweedler_on_dual_numbers(f).unwrap()),
            MapFile::Action(partial_z2_on_k2(f).unwrap()),
            MapFile::PartialGroupAction(partial_s3_group(f).unwrap()),
        ];
        for m in files {
            let s = m.to_canonical_string();
            let back =
                MapFile::from_json(&serde_json::from_str(&s).unwrap(), Path::new(".")).unwrap();
            assert_eq!(back.to_canonical_string(), s, "{}", m.kind());
        }
    }

    #[test]
    fn presentation_paths_resolve_against_the_map_file() {
        let f = Field::Rational;
        let c = sweedler_on_dual_numbers(f).unwrap();
        let dir = std::env::temp_dir().join(format!("hpa-mapfile-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Presentation::Hopf(c.hopf.clone())
            .save(dir.join("h.json"))
            .unwrap();
        Presentation::Algebra(c.algebra.clone())
            .save(dir.join("a.json"))
            .unwrap();
        let v = json!({"kind": "coaction", "algebra": "a.json", "hopf": "h.json",
                       "rho": matrix_to_json(&c.rho)});
        std::fs::write(dir.join("map.json"), v.to_string()).unwrap();
        let MapFile::Coaction(back) = MapFile::load(dir.join("map.json")).unwrap() else {
            panic!("wrong kind")
        };
        assert_eq!(back, c);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn shape_errors_are_reported() {
        let f = Field::Rational;
        let mut v = MapFile::Action(partial_z2_on_k2(f).unwrap()).to_json();
        v["matrix"] = json!([["1"]]);
        assert!(matches!(
            MapFile::from_json(&v, Path::new(".")),
            Err(Error::Dimension(_))
        ));
        v["kind"] = json!("nonsense");
        assert!(matches!(
            MapFile::from_json(&v, Path::new(".")),
            Err(Error::Parse(_))
        ));
    }
}
