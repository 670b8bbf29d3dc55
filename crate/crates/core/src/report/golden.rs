use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::blocks::BlockData;
use crate::error::Result;
use crate::fusion::FusionSystem;
use crate::pipeline::corollary15_suite;

use super::to_canonical_json;

/// Blocks whose source algebra is larger than this are recorded without a
/// pipeline run: the endomorphism algebra behind the stable basis search
/// grows like the fourth power of the dimension.
pub const PIPELINE_DIM_LIMIT: usize = 24;

/// Verdicts and invariants of one block; witnesses are never stored.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GoldenRecord {
    pub group: String,
    pub prime: u64,
    pub block: usize,
    pub defect_order: usize,
    pub block_dim: usize,
    pub source_dim: usize,
    pub focal_order: usize,
    pub hyperfocal_order: usize,
    pub aut_orders: Vec<usize>,
    pub pipeline: Option<PipelineRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PipelineRecord {
    pub branch: String,
    pub dtilde_order: usize,
    pub stages: Vec<(String, String)>,
    pub hyperfocal_verdict: String,
    pub source_verdict: String,
}

fn word<T: Serialize>(x: &T) -> String {
    serde_json::to_value(x)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default()
}

pub fn golden_record(group: &str, block: &BlockData, seed: u64) -> Result<GoldenRecord> {
    let f = FusionSystem::block_fusion(block)?;
    let summary = f.summary();
    let pipeline = if block.source.dim() <= PIPELINE_DIM_LIMIT {
        let r = corollary15_suite(block, &f, seed)?;
        Some(PipelineRecord {
            branch: r.branch,
            dtilde_order: r.run.dtilde_order,
            stages: r.run.stages.iter().map(|s| (s.name.clone(), word(&s.status))).collect(),
            hyperfocal_verdict: word(&r.run.hyperfocal_verdict),
            source_verdict: word(&r.run.source_verdict),
        })
    } else {
        None
    };
    Ok(GoldenRecord {
        group: group.to_string(),
        prime: block.kg.characteristic(),
        block: block.index,
        defect_order: block.defect_group.order(),
        block_dim: block.block_dim(),
        source_dim: block.source.dim(),
        focal_order: summary.focal_order,
        hyperfocal_order: summary.hyperfocal_order,
        aut_orders: summary.aut_orders,
        pipeline,
    })
}

/// `root/<group>/<p>/<block>/record.json`.
pub fn golden_path(root: &Path, rec: &GoldenRecord) -> PathBuf {
    root.join(&rec.group)
        .join(rec.prime.to_string())
        .join(rec.block.to_string())
        .join("record.json")
}

pub fn write_golden(root: &Path, rec: &GoldenRecord) -> Result<PathBuf> {
    let path = golden_path(root, rec);
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(&path, to_canonical_json(rec)?)?;
    Ok(path)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldenStatus {
    Match,
    Missing(String),
    Differs(String),
}

pub fn check_golden(root: &Path, rec: &GoldenRecord) -> Result<GoldenStatus> {
    let path = golden_path(root, rec);
    if !path.exists() {
        return Ok(GoldenStatus::Missing(path.display().to_string()));
    }
    let stored = std::fs::read_to_string(&path)?;
    let fresh = to_canonical_json(rec)?;
    if stored == fresh {
        return Ok(GoldenStatus::Match);
    }
    let first = stored
        .lines()
        .zip(fresh.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| stored.lines().count().min(fresh.lines().count()));
    let show = |s: &str| s.lines().nth(first).unwrap_or("<end>").trim().to_string();
    Ok(GoldenStatus::Differs(format!(
        "line {}: stored `{}`, computed `{}`",
        first + 1,
        show(&stored),
        show(&fresh)
    )))
}
