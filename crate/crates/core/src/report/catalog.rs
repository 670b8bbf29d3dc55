use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::blocks::{BlockData, GroupAlgebra};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::group::{read_group_file, PermGroup};

use super::golden::{check_golden, golden_record, GoldenStatus};

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub enum Tag {
    #[serde(rename = "TRIVIAL")]
    Trivial,
    #[serde(rename = "DERIVED")]
    Derived,
}

/// One expected invariant value.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Expectation {
    pub field: String,
    pub value: Value,
    pub tag: Tag,
    /// Required for derived values: the check that establishes them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

/// A manifest: a group file, a prime and the invariants expected there.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub group: String,
    /// Relative to the catalog root.
    pub group_file: String,
    pub prime: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_degree: Option<u32>,
    #[serde(default)]
    pub expect: Vec<Expectation>,
}

pub fn load_manifest(path: &Path) -> Result<CatalogEntry> {
    let text = std::fs::read_to_string(path)?;
    let entry: CatalogEntry = serde_json::from_str(&text).map_err(|e| Error::Parse {
        source_name: path.display().to_string(),
        line: e.line(),
        message: e.to_string(),
    })?;
    for x in &entry.expect {
        if x.tag == Tag::Derived && x.oracle.as_deref().is_none_or(str::is_empty) {
            return Err(Error::Parse {
                source_name: path.display().to_string(),
                line: 0,
                message: format!("derived value {} names no oracle", x.field),
            });
        }
    }
    Ok(entry)
}

/// Every `*.json` under `dir`, sorted by file name.
pub fn load_manifests(dir: &Path) -> Result<Vec<(PathBuf, Result<CatalogEntry>)>> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    Ok(paths.into_iter().map(|p| {
        let r = load_manifest(&p);
        (p, r)
    }).collect())
}

/// Invariants of `F_q G` for the catalog: `group_order`, `field_order`,
/// `block_count` and per block `block[i].principal`, `defect_order`,
/// `block_dim`, `source_dim`, `focal_order`, `hyperfocal_order`, `nilpotent`.
pub fn compute_invariants(g: &PermGroup, p: u64, field_degree: Option<u32>, seed: u64) -> Result<BTreeMap<String, Value>> {
    let kg = GroupAlgebra::over_splitting_field(g, p, field_degree)?;
    let blocks = BlockData::all(&kg, seed)?;
    let mut out = BTreeMap::new();
    out.insert("group_order".into(), Value::from(g.order()));
    out.insert("field_order".into(), Value::from(kg.field().size()));
    out.insert("block_count".into(), Value::from(blocks.len()));
    for b in &blocks {
        let f = FusionSystem::block_fusion(b)?;
        let hyp = f.hyperfocal();
        let key = |s: &str| format!("block[{}].{s}", b.index);
        out.insert(key("principal"), Value::from(b.principal));
        out.insert(key("defect_order"), Value::from(b.defect_group.order()));
        out.insert(key("block_dim"), Value::from(b.block_dim()));
        out.insert(key("source_dim"), Value::from(b.source.dim()));
        out.insert(key("focal_order"), Value::from(f.focal().order()));
        out.insert(key("hyperfocal_order"), Value::from(hyp.order()));
        out.insert(key("nilpotent"), Value::from(hyp.is_trivial()));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryOutcome {
    pub name: String,
    pub manifest: String,
    pub passed: bool,
    pub diffs: Vec<String>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegressionSummary {
    pub passed: bool,
    pub entries: Vec<EntryOutcome>,
}

fn run_entry(root: &Path, entry: &CatalogEntry, goldens: Option<&Path>, seed: u64) -> Result<Vec<String>> {
    let g = read_group_file(root.join(&entry.group_file))?;
    let inv = compute_invariants(&g, entry.prime, entry.field_degree, seed)?;
    let mut diffs = Vec::new();
    for x in &entry.expect {
        match inv.get(&x.field) {
            None => diffs.push(format!("{}: no such invariant", x.field)),
            Some(v) if *v != x.value => diffs.push(format!("{}: expected {}, got {}", x.field, x.value, v)),
            Some(_) => {}
        }
    }
    if let Some(groot) = goldens {
        let kg = GroupAlgebra::over_splitting_field(&g, entry.prime, entry.field_degree)?;
        for b in BlockData::all(&kg, seed)? {
            let rec = golden_record(&entry.group, &b, seed)?;
            match check_golden(groot, &rec)? {
                GoldenStatus::Match => {}
                GoldenStatus::Missing(p) => diffs.push(format!("golden missing: {p}")),
                GoldenStatus::Differs(d) => diffs.push(format!("golden block {}: {d}", b.index)),
            }
        }
    }
    Ok(diffs)
}

/// Recomputes every manifest under `root/manifest` (and, when `goldens` is
/// given, compares per-block golden records). Entries run on separate
/// threads; the summary keeps manifest order.
pub fn run_regression(root: &Path, goldens: Option<&Path>, seed: u64) -> Result<RegressionSummary> {
    let manifests = load_manifests(&root.join("manifest"))?;
    let entries: Vec<EntryOutcome> = std::thread::scope(|s| {
        let handles: Vec<_> = manifests
            .iter()
            .map(|(path, entry)| {
                s.spawn(move || {
                    let manifest = path.display().to_string();
                    match entry {
                        Err(e) => EntryOutcome {
                            name: path.file_stem().map(|x| x.to_string_lossy().into_owned()).unwrap_or_default(),
                            manifest,
                            passed: false,
                            diffs: Vec::new(),
                            error: Some(e.to_string()),
                        },
                        Ok(entry) => match run_entry(root, entry, goldens, seed) {
                            Ok(diffs) => EntryOutcome {
                                name: entry.name.clone(),
                                manifest,
                                passed: diffs.is_empty(),
                                diffs,
                                error: None,
                            },
                            Err(e) => EntryOutcome {
                                name: entry.name.clone(),
                                manifest,
                                passed: false,
                                diffs: Vec::new(),
                                error: Some(e.to_string()),
                            },
                        },
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("regression worker panicked")).collect()
    });
    Ok(RegressionSummary {
        passed: entries.iter().all(|e| e.passed),
        entries,
    })
}
