//! Report assembly, canonical JSON, the catalog manifest and golden files.

mod catalog;
mod golden;

pub use catalog::{
    compute_invariants, load_manifest, load_manifests, run_regression, CatalogEntry, EntryOutcome, Expectation,
    RegressionSummary, Tag,
};
pub use golden::{golden_path, golden_record, GoldenRecord, GoldenStatus, check_golden, write_golden};

use serde::Serialize;

use crate::blocks::{BlockData, GroupAlgebra};
use crate::error::Result;
use crate::fusion::FusionSummary;
use crate::pipeline::{ConjectureReport, HyperfocalSearch, MoritaCheckReport, StageStatus};

/// Pretty JSON with a trailing newline. Field order is declaration order,
/// so equal values always serialize to identical bytes.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// A report with a human-readable rendering alongside its JSON form.
pub trait Report: Serialize {
    fn text(&self) -> String;
}

/// Both renderings of a report.
pub fn emit_report<R: Report>(r: &R) -> Result<(String, String)> {
    Ok((to_canonical_json(r)?, r.text()))
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockRow {
    pub index: usize,
    pub principal: bool,
    pub defect_order: usize,
    pub defect_generators: Vec<String>,
    pub block_dim: usize,
    pub source_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockTable {
    pub group_order: usize,
    pub prime: u64,
    pub field_order: usize,
    pub blocks: Vec<BlockRow>,
}

pub fn block_table(kg: &GroupAlgebra, blocks: &[BlockData]) -> BlockTable {
    BlockTable {
        group_order: kg.group().order(),
        prime: kg.characteristic(),
        field_order: kg.field().size(),
        blocks: blocks
            .iter()
            .map(|b| BlockRow {
                index: b.index,
                principal: b.principal,
                defect_order: b.defect_group.order(),
                defect_generators: b.defect_group.generators().iter().map(|g| g.to_string()).collect(),
                block_dim: b.block_dim(),
                source_dim: b.source.dim(),
            })
            .collect(),
    }
}

impl Report for BlockTable {
    fn text(&self) -> String {
        let mut out = format!(
            "|G| = {}, p = {}, field F_{}: {} block(s)\n",
            self.group_order,
            self.prime,
            self.field_order,
            self.blocks.len()
        );
        out.push_str("  idx  principal  |D|  dim kGb  dim A  D generators\n");
        for b in &self.blocks {
            out.push_str(&format!(
                "  {:>3}  {:>9}  {:>3}  {:>7}  {:>5}  <{}>\n",
                b.index,
                if b.principal { "yes" } else { "no" },
                b.defect_order,
                b.block_dim,
                b.source_dim,
                b.defect_generators.join(", ")
            ));
        }
        out
    }
}

impl Report for FusionSummary {
    fn text(&self) -> String {
        let mut out = format!(
            "fusion system on D of order {} ({}), p = {}\n",
            self.defect_order, self.realization, self.prime
        );
        out.push_str(&format!("  subgroups of D: {}\n", self.objects.len()));
        out.push_str(&format!(
            "  focal subgroup: order {} <{}>\n",
            self.focal_order,
            self.focal_generators.join(", ")
        ));
        out.push_str(&format!(
            "  hyperfocal subgroup: order {} <{}>\n",
            self.hyperfocal_order,
            self.hyperfocal_generators.join(", ")
        ));
        let total: usize = self.hom_sizes.iter().map(|h| h[2]).sum();
        out.push_str(&format!("  morphisms: {total}\n"));
        out
    }
}

/// Output of the `hyperfocal` subcommand.
#[derive(Clone, Debug, Serialize)]
pub struct HyperfocalReport {
    pub block: usize,
    pub dtilde_order: usize,
    pub hyperfocal_order: usize,
    pub found: bool,
    pub dim: Option<usize>,
    pub source_dim: usize,
    pub method: Option<String>,
    pub attempts: Vec<String>,
}

impl HyperfocalReport {
    pub fn new(block: &BlockData, dtilde_order: usize, hyperfocal_order: usize, search: &HyperfocalSearch) -> Self {
        HyperfocalReport {
            block: block.index,
            dtilde_order,
            hyperfocal_order,
            found: search.candidate.is_some(),
            dim: search.candidate.as_ref().map(|c| c.space.dim()),
            source_dim: block.source.dim(),
            method: search.candidate.as_ref().map(|c| c.method.clone()),
            attempts: search.attempts.clone(),
        }
    }
}

impl Report for HyperfocalReport {
    fn text(&self) -> String {
        let mut out = format!(
            "block {}: |hyp| = {}, |D~| = {}, dim A = {}\n",
            self.block, self.hyperfocal_order, self.dtilde_order, self.source_dim
        );
        match (self.dim, &self.method) {
            (Some(d), Some(m)) => out.push_str(&format!("  hyperfocal subalgebra of dimension {d} ({m})\n")),
            _ => out.push_str("  no verified candidate found\n"),
        }
        for a in &self.attempts {
            out.push_str(&format!("  tried: {a}\n"));
        }
        out
    }
}

fn status_word(s: StageStatus) -> &'static str {
    match s {
        StageStatus::Passed => "passed",
        StageStatus::Failed => "FAILED",
        StageStatus::Undetermined => "undetermined",
        StageStatus::Skipped => "skipped",
    }
}

impl Report for ConjectureReport {
    fn text(&self) -> String {
        let mut out = format!(
            "block {} (|D| = {}, dim A = {}, F_{}), D~ of order {}, seed {}\n",
            self.block, self.defect_order, self.source_dim, self.field_order, self.dtilde_order, self.seed
        );
        for s in &self.stages {
            out.push_str(&format!("  {:<22} {:<12} {}\n", s.name, status_word(s.status), s.detail));
        }
        out.push_str(&format!("  stable unital basis of A~: {:?}\n", self.hyperfocal_verdict));
        out.push_str(&format!("  stable unital basis of A:  {:?}\n", self.source_verdict));
        out
    }
}

impl Report for MoritaCheckReport {
    fn text(&self) -> String {
        let yn = |b: bool| if b { "ok" } else { "MISMATCH" };
        let mut out = String::new();
        out.push_str(&format!("  fusion transported:     {}\n", yn(self.fusion_transported)));
        out.push_str(&format!("  local point counts:     {}\n", yn(self.local_point_counts_match)));
        out.push_str(&format!("  point multiplicities:   {}\n", yn(self.multiplicities_match)));
        for m in &self.mismatches {
            out.push_str(&format!("  - {m}\n"));
        }
        for a in &self.ambiguous {
            out.push_str(&format!("  ambiguous matching at {a}\n"));
        }
        out.push_str(if self.consistent {
            "necessary conditions hold (not a proof of equivalence)\n"
        } else {
            "blocks are not basic Morita equivalent through this isomorphism\n"
        });
        out
    }
}

impl Report for RegressionSummary {
    fn text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let verdict = if e.passed { "ok" } else { "FAIL" };
            out.push_str(&format!("{:<14} {verdict}\n", e.name));
            if let Some(err) = &e.error {
                out.push_str(&format!("  error: {err}\n"));
            }
            for d in &e.diffs {
                out.push_str(&format!("  {d}\n"));
            }
        }
        out.push_str(&format!(
            "{} entries, {} failed\n",
            self.entries.len(),
            self.entries.iter().filter(|e| !e.passed).count()
        ));
        out
    }
}
