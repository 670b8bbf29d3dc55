use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::fusion::FusionSystem;
use blockbasis::group::{read_group_file, GroupHom, Perm, PermGroup};
use blockbasis::pipeline::{morita_necessary_check, run_thm14, search_hyperfocal};
use blockbasis::report::{block_table, emit_report, HyperfocalReport, Report};
use blockbasis::{Error, Result};

#[derive(Parser)]
#[command(name = "blockbasis", version, about = "Blocks, fusion systems and stable unital bases of source algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Group file: `degree n` then one generator per line in cycle notation.
    group_file: PathBuf,
    #[arg(short = 'p', long)]
    prime: u64,
    /// Override the degree of the coefficient field over F_p.
    #[arg(long)]
    field_degree: Option<u32>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Block idempotents, defect groups and source algebra dimensions.
    Blocks(Common),
    /// Fusion system of a block, with focal and hyperfocal subgroups.
    Fusion {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        block: usize,
    },
    /// Search for and verify a hyperfocal subalgebra.
    Hyperfocal {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        block: usize,
        /// `1`, `D`, `hyp`, or generators separated by `;`.
        #[arg(long, default_value = "hyp")]
        dtilde: String,
    },
    /// Full stable-basis pipeline on a block.
    Conjecture {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        block: usize,
        /// `1`, `D`, `hyp`, or generators separated by `;`. Defaults to `1`
        /// for nilpotent blocks and `D` otherwise.
        #[arg(long)]
        dtilde: Option<String>,
    },
    /// Necessary conditions for a basic Morita equivalence.
    MoritaCompare {
        group_file: PathBuf,
        other_group_file: PathBuf,
        #[arg(short = 'p', long)]
        prime: u64,
        /// Block indices `i,j`.
        #[arg(long, default_value = "0,0")]
        blocks: String,
        /// Lines `x -> y` mapping generators of D to D'; omit when D = D'.
        #[arg(long)]
        iso: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn load_block(c: &Common, index: usize) -> Result<BlockData> {
    let g = read_group_file(&c.group_file)?;
    let kg = GroupAlgebra::over_splitting_field(&g, c.prime, c.field_degree)?;
    BlockData::nth(&kg, index, c.seed)
}

fn parse_dtilde(spec: &str, d: &PermGroup, hyp: &PermGroup) -> Result<PermGroup> {
    match spec.trim() {
        "1" | "trivial" => Ok(PermGroup::trivial(d.degree())),
        "D" | "d" => Ok(d.clone()),
        "hyp" => Ok(hyp.clone()),
        s => {
            let gens: Vec<Perm> = s
                .split(';')
                .map(|x| Perm::parse_cycles(x.trim(), d.degree()))
                .collect::<Result<_>>()?;
            let h = PermGroup::generate(d.degree(), &gens)?;
            if !h.is_subgroup_of(d) {
                return Err(Error::Argument(format!("{s} does not generate a subgroup of D")));
            }
            Ok(h)
        }
    }
}

fn parse_iso(path: &Path, d: &PermGroup, d2: &PermGroup) -> Result<GroupHom> {
    let text = std::fs::read_to_string(path)?;
    let mut gens = Vec::new();
    let mut imgs = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: String| Error::Parse {
            source_name: path.display().to_string(),
            line: k + 1,
            message: m,
        };
        let (x, y) = line.split_once("->").ok_or_else(|| err("expected `x -> y`".into()))?;
        gens.push(Perm::parse_cycles(x.trim(), d.degree()).map_err(|e| err(e.to_string()))?);
        imgs.push(Perm::parse_cycles(y.trim(), d2.degree()).map_err(|e| err(e.to_string()))?);
    }
    GroupHom::from_generator_images(d, d2, &gens, &imgs)
}

fn print<R: Report>(r: &R, json: bool) -> Result<()> {
    let (j, t) = emit_report(r)?;
    print!("{}", if json { j } else { t });
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Blocks(c) => {
            let g = read_group_file(&c.group_file)?;
            let kg = GroupAlgebra::over_splitting_field(&g, c.prime, c.field_degree)?;
            let blocks = BlockData::all(&kg, c.seed)?;
            print(&block_table(&kg, &blocks), c.json)
        }
        Command::Fusion { common, block } => {
            let b = load_block(&common, block)?;
            let f = FusionSystem::block_fusion(&b)?;
            print(&f.summary(), common.json)
        }
        Command::Hyperfocal { common, block, dtilde } => {
            let b = load_block(&common, block)?;
            let f = FusionSystem::block_fusion(&b)?;
            let hyp = f.hyperfocal();
            let dt = parse_dtilde(&dtilde, &b.defect_group, &hyp)?;
            let s = search_hyperfocal(&b, &f, &dt, common.seed)?;
            print(&HyperfocalReport::new(&b, dt.order(), hyp.order(), &s), common.json)
        }
        Command::Conjecture { common, block, dtilde } => {
            let b = load_block(&common, block)?;
            let f = FusionSystem::block_fusion(&b)?;
            let hyp = f.hyperfocal();
            let spec = dtilde.unwrap_or_else(|| if hyp.is_trivial() { "1".into() } else { "D".into() });
            let dt = parse_dtilde(&spec, &b.defect_group, &hyp)?;
            print(&run_thm14(&b, &f, &dt, None, common.seed)?, common.json)
        }
        Command::MoritaCompare {
            group_file,
            other_group_file,
            prime,
            blocks,
            iso,
            seed,
            json,
        } => {
            let (i, j) = blocks
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Error::Argument(format!("--blocks expects `i,j`, got {blocks}")))?;
            let g1 = read_group_file(&group_file)?;
            let g2 = read_group_file(&other_group_file)?;
            let b1 = BlockData::nth(&GroupAlgebra::over_splitting_field(&g1, prime, None)?, i, seed)?;
            let b2 = BlockData::nth(&GroupAlgebra::over_splitting_field(&g2, prime, None)?, j, seed)?;
            let (d1, d2) = (&b1.defect_group, &b2.defect_group);
            let lambda = match iso {
                Some(p) => parse_iso(&p, d1, d2)?,
                None => GroupHom::from_images(d1, d2, d1.elements())?,
            };
            print(&morita_necessary_check(&b1, &b2, &lambda, seed)?, json)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
