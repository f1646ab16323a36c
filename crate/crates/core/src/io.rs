//! Ring and module description files, and the bundled presets.
//!
//! ```toml
//! [ring]
//! char = 101
//! vars = ["a", "b", "c"]
//! order = "grevlex"
//! ideal = ["a^2", "b*c", "c^2", "b^2 - a*c"]
//! ```
//!
//! ```toml
//! [module]
//! kind = "cyclic"
//! ideal = ["b", "c"]
//! ```

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use crate::algebra::QuotientAlgebra;
use crate::error::{Error, Result};
use crate::linalg::PrimeField;
use crate::modrep::{ModuleRep, PresentationMatrix};
use crate::poly::{MonomialOrder, PolyRing, DEFAULT_DEGREE_GUARD};

pub const DEFAULT_CHARACTERISTIC: u32 = 101;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    ring: RingSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(rename = "char", default = "default_char")]
    pub characteristic: u32,
    pub vars: Vec<String>,
    #[serde(default = "default_order")]
    pub order: String,
    #[serde(default)]
    pub ideal: Vec<String>,
}

fn default_char() -> u32 {
    DEFAULT_CHARACTERISTIC
}

fn default_order() -> String {
    "grevlex".into()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    module: ModuleSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub kind: String,
    pub ideal: Option<Vec<String>>,
    pub matrix: Option<Vec<Vec<String>>>,
}

fn config(e: impl std::fmt::Display) -> Error {
    Error::Config(e.to_string())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str::<RingFile>(text).map_err(config)?.ring)
    }

    pub fn build(&self) -> Result<QuotientAlgebra> {
        let order = match self.order.as_str() {
            "grevlex" => MonomialOrder::Grevlex,
            "lex" => MonomialOrder::Lex,
            other => return Err(Error::Config(format!("unknown monomial order `{other}`"))),
        };
        let ring = PolyRing::new(PrimeField::new(self.characteristic)?, self.vars.clone(), order)?;
        let gens = self.ideal.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        QuotientAlgebra::from_polynomials(ring, gens, DEFAULT_DEGREE_GUARD)
    }

    pub fn to_toml(&self) -> String {
        format!(
            "[ring]\nchar = {}\nvars = {}\norder = \"{}\"\nideal = {}\n",
            self.characteristic,
            string_array(&self.vars),
            self.order,
            string_array(&self.ideal)
        )
    }
}

impl ModuleSpec {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str::<ModuleFile>(text).map_err(config)?.module)
    }

    pub fn cyclic(ideal: &[&str]) -> Self {
        ModuleSpec {
            kind: "cyclic".into(),
            ideal: Some(ideal.iter().map(|s| s.to_string()).collect()),
            matrix: None,
        }
    }

    pub fn build(&self, a: &Arc<QuotientAlgebra>) -> Result<ModuleRep> {
        match (self.kind.as_str(), &self.ideal, &self.matrix) {
            ("cyclic", Some(ideal), None) => {
                let gens: Vec<&str> = ideal.iter().map(String::as_str).collect();
                ModuleRep::cyclic_from_strs(a.clone(), &gens)
            }
            ("cokernel", None, Some(rows)) => {
                let pres = PresentationMatrix::parse(a, rows)?;
                ModuleRep::cokernel_module(a.clone(), &pres)
            }
            ("cyclic", _, _) => Err(Error::Config("cyclic module needs `ideal` and no `matrix`".into())),
            ("cokernel", _, _) => Err(Error::Config("cokernel module needs `matrix` and no `ideal`".into())),
            (other, _, _) => Err(Error::Config(format!("unknown module kind `{other}`"))),
        }
    }

    pub fn to_toml(&self) -> String {
        let mut s = format!("[module]\nkind = \"{}\"\n", self.kind);
        if let Some(ideal) = &self.ideal {
            s += &format!("ideal = {}\n", string_array(ideal));
        }
        if let Some(rows) = &self.matrix {
            let rows: Vec<String> = rows.iter().map(|r| string_array(r)).collect();
            s += &format!("matrix = [{}]\n", rows.join(", "));
        }
        s
    }
}

fn string_array(items: &[String]) -> String {
    let quoted: Vec<String> = items.iter().map(|s| format!("\"{s}\"")).collect();
    format!("[{}]", quoted.join(", "))
}

pub fn load_ring(path: &Path) -> Result<Arc<QuotientAlgebra>> {
    Ok(Arc::new(RingSpec::parse(&read(path)?)?.build()?))
}

pub fn load_module(a: &Arc<QuotientAlgebra>, path: &Path) -> Result<ModuleRep> {
    let m = ModuleSpec::parse(&read(path)?)?.build(a)?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    Ok(match name {
        Some(n) => m.with_tag(n),
        None => m,
    })
}

/// A file written by a preset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresetFile {
    pub name: String,
    pub contents: String,
}

fn ring_spec(characteristic: u32, vars: &[&str], ideal: &[&str]) -> RingSpec {
    RingSpec {
        characteristic,
        vars: vars.iter().map(|s| s.to_string()).collect(),
        order: default_order(),
        ideal: ideal.iter().map(|s| s.to_string()).collect(),
    }
}

fn file(name: &str, contents: String) -> PresetFile {
    PresetFile {
        name: name.into(),
        contents,
    }
}

/// The bundled fixtures: `ex1` (with `h = 2`), `msquare`, `hypersurface` and
/// `modx`.
pub fn preset(name: &str, h: Option<u32>, characteristic: Option<u32>) -> Result<Vec<PresetFile>> {
    let p = characteristic.unwrap_or(DEFAULT_CHARACTERISTIC);
    PrimeField::new(p)?;
    let files = match name {
        "ex1" => {
            let h = h.unwrap_or(2);
            if h != 2 {
                return Err(Error::Config(format!("preset ex1 supports only h = 2, got h = {h}")));
            }
            vec![
                file("r3.toml", ring_spec(p, &["a", "b", "c"], &["a^2", "b*c", "c^2", "b^2 - a*c"]).to_toml()),
                file("mod-a.toml", ModuleSpec::cyclic(&["a"]).to_toml()),
                file("mod-bc.toml", ModuleSpec::cyclic(&["b", "c"]).to_toml()),
            ]
        }
        "msquare" => vec![
            file("r2.toml", ring_spec(p, &["x", "y"], &["x^2", "x*y", "y^2"]).to_toml()),
            file("mod-k.toml", ModuleSpec::cyclic(&["x", "y"]).to_toml()),
        ],
        "hypersurface" => vec![file("r1.toml", ring_spec(p, &["x"], &["x^2"]).to_toml())],
        "modx" => vec![file("r4.toml", ring_spec(p, &["x", "y"], &["y^2"]).to_toml())],
        other => return Err(Error::UnknownPreset(other.into())),
    };
    Ok(files)
}

/// The linear form paired with the `modx` preset.
pub const MODX_LINEAR_FORM: &str = "x";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_round_trip() {
        let spec = RingSpec::parse("[ring]\nchar = 7\nvars = [\"x\", \"y\"]\norder = \"lex\"\nideal = [\"x^2\", \"y^3\"]\n").unwrap();
        assert_eq!(RingSpec::parse(&spec.to_toml()).unwrap(), spec);
        let a = spec.build().unwrap();
        assert_eq!(a.length(), Some(6));
    }

    #[test]
    fn unknown_keys_rejected() {
        let bad = "[ring]\nchar = 7\nvars = [\"x\"]\nideal = [\"x^2\"]\nfoo = 1\n";
        assert!(matches!(RingSpec::parse(bad), Err(Error::Config(_))));
        let bad = "[module]\nkind = \"cyclic\"\nideal = [\"x\"]\nrank = 2\n";
        assert!(matches!(ModuleSpec::parse(bad), Err(Error::Config(_))));
        assert!(matches!(ModuleSpec::parse("[extra]\n"), Err(Error::Config(_))));
    }

    #[test]
    fn modules_from_files() {
        let a = Arc::new(preset_ring("ex1"));
        let m = ModuleSpec::parse("[module]\nkind = \"cokernel\"\nmatrix = [[\"a\"]]\n").unwrap().build(&a).unwrap();
        let c = ModuleSpec::cyclic(&["a"]).build(&a).unwrap();
        assert_eq!(m.length(), c.length());
        assert_eq!(m.length(), 3);
        let bad = ModuleSpec { kind: "free".into(), ideal: None, matrix: None };
        assert!(matches!(bad.build(&a), Err(Error::Config(_))));
    }

    fn preset_ring(name: &str) -> QuotientAlgebra {
        let files = preset(name, None, None).unwrap();
        RingSpec::parse(&files[0].contents).unwrap().build().unwrap()
    }

    #[test]
    fn presets_build() {
        assert_eq!(preset_ring("ex1").length(), Some(6));
        assert_eq!(preset_ring("msquare").length(), Some(3));
        assert!(preset_ring("hypersurface").is_complete_intersection());
        assert_eq!(preset_ring("modx").krull_dim(), 1);
        assert_eq!(preset("nope", None, None).unwrap_err(), Error::UnknownPreset("nope".into()));
        assert!(preset("ex1", Some(3), None).is_err());
        let k = ModuleSpec::parse(&preset("msquare", None, None).unwrap()[1].contents).unwrap();
        let a = Arc::new(preset_ring("msquare"));
        assert_eq!(k.build(&a).unwrap().length(), 1);
    }
}
