//! Declared symbolic generators with their attached measures.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::Error;
use crate::poly::{rat, BiPoly, UniPoly};
use crate::Result;

/// One declared generator. `poincare` is the image of the class under the
/// Poincare measure, i.e. the specialization u = v = t of `hodge_deligne`;
/// for generators with odd cohomology this carries alternating signs (the
/// genus-g curve entry is 1 - 2g t + t^2, not 1 + 2g t + t^2). For the
/// even-cohomology classes everything downstream measures, the two
/// conventions coincide. `effective` flags point-count availability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorEntry {
    pub name: String,
    pub dimension: u32,
    pub poincare: UniPoly,
    pub hodge_deligne: BiPoly,
    pub effective: bool,
}

impl GeneratorEntry {
    /// Entry for a smooth projective curve of genus g:
    /// HD = 1 - g u - g v + uv.
    pub fn genus_curve(name: &str, g: u32) -> Self {
        let hd = BiPoly::from_terms([
            (0, 0, rat(1)),
            (1, 0, rat(-(g as i64))),
            (0, 1, rat(-(g as i64))),
            (1, 1, rat(1)),
        ]);
        Self {
            name: name.to_string(),
            dimension: 1,
            poincare: hd.specialize_diagonal(),
            hodge_deligne: hd,
            effective: false,
        }
    }
}

/// Frozen at construction; invariants are checked once here and nowhere else.
#[derive(Clone, Debug, Default)]
pub struct GeneratorTable {
    entries: BTreeMap<String, GeneratorEntry>,
}

impl GeneratorTable {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(entries: Vec<GeneratorEntry>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for e in entries {
            if e.name.is_empty() || !e.name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::InvalidGeneratorTable {
                    reason: format!("invalid generator name `{}`", e.name),
                });
            }
            if e.poincare.degree() != Some(2 * e.dimension) {
                return Err(Error::InvalidGeneratorTable {
                    reason: format!(
                        "generator `{}`: deg(poincare) = {:?} but dimension = {} demands {}",
                        e.name,
                        e.poincare.degree(),
                        e.dimension,
                        2 * e.dimension
                    ),
                });
            }
            if e.hodge_deligne.specialize_diagonal() != e.poincare {
                return Err(Error::InvalidGeneratorTable {
                    reason: format!(
                        "generator `{}`: hodge_deligne does not specialize to poincare under (u,v) -> (t,t)",
                        e.name
                    ),
                });
            }
            if map.insert(e.name.clone(), e).is_some() {
                return Err(Error::InvalidGeneratorTable {
                    reason: "duplicate generator name".to_string(),
                });
            }
        }
        Ok(Self { entries: map })
    }

    /// The table used by the ordinary-double-point cubic threefold study:
    /// one generator V, a genus-4 curve.
    pub fn odp_standard() -> Self {
        Self::new(vec![GeneratorEntry::genus_curve("V", 4)]).expect("builtin table is valid")
    }

    pub fn get(&self, name: &str) -> Result<&GeneratorEntry> {
        self.entries
            .get(name)
            .ok_or_else(|| Error::MissingGenerator {
                name: name.to_string(),
            })
    }

    pub fn entries(&self) -> impl Iterator<Item = &GeneratorEntry> {
        self.entries.values()
    }

    /// Ingests the CLI config format:
    ///
    /// ```toml
    /// [[generator]]
    /// name = "V"
    /// dimension = 1
    /// poincare = "1 - 8*t + t^2"
    /// hodge_deligne = "1 - 4*u - 4*v + u*v"
    /// effective = false
    /// ```
    pub fn from_toml_str(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct RawEntry {
            name: String,
            dimension: u32,
            poincare: String,
            hodge_deligne: String,
            #[serde(default)]
            effective: bool,
        }
        #[derive(Deserialize)]
        struct RawTable {
            #[serde(default)]
            generator: Vec<RawEntry>,
        }
        let raw: RawTable = toml::from_str(s).map_err(|e| Error::Parse {
            input: "generator table".to_string(),
            reason: e.to_string(),
        })?;
        let mut entries = Vec::new();
        for r in raw.generator {
            entries.push(GeneratorEntry {
                name: r.name,
                dimension: r.dimension,
                poincare: UniPoly::parse(&r.poincare, "t")?,
                hodge_deligne: BiPoly::parse(&r.hodge_deligne, "u", "v")?,
                effective: r.effective,
            });
        }
        Self::new(entries)
    }
}
