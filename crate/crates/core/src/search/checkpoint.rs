use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{emitted, scan_range, CellGrid, SearchConfig};
use crate::error::{Error, Result};

const CHUNK: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub config_digest: String,
    /// Index of the first cell not yet written.
    pub next_cell: u64,
    pub total_cells: u64,
    /// Cells processed so far, by status tag.
    pub counts: BTreeMap<String, u64>,
    /// Length of the output file when this checkpoint was taken.
    pub output_bytes: u64,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        if text.trim().is_empty() {
            return Err(Error::CheckpointCorrupt("empty file".into()));
        }
        serde_json::from_str(&text).map_err(|e| Error::CheckpointCorrupt(e.to_string()))
    }

    /// Writes through a temporary file so a crash never leaves a torn file.
    pub fn store(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let json = serde_json::to_string_pretty(self).expect("checkpoint serializes");
        fs::write(&tmp, json + "\n")?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn is_finished(&self) -> bool {
        self.next_cell >= self.total_cells
    }
}

/// SHA-256 over the settings that determine the output. Parallelism is left
/// out since it does not change a byte.
pub fn config_digest(cfg: &SearchConfig) -> String {
    let canonical = format!(
        "record-format=1;height_b={};height_c={};instance={};root_height_bound={};require_positive={}",
        cfg.height_b, cfg.height_c, cfg.instance, cfg.root_height_bound, cfg.require_positive
    );
    let digest = Sha256::digest(canonical.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSummary {
    pub checkpoint: Checkpoint,
    /// Cells evaluated by this invocation.
    pub processed: u64,
}

/// Runs (or continues) a scan into `output`.
///
/// With `resume`, the checkpoint must exist and match `cfg`; the output is
/// cut back to the checkpointed length and the scan continues from there.
/// `max_cells` stops early after that many cells, leaving a checkpoint to
/// resume from.
pub fn run_search(
    cfg: &SearchConfig,
    output: &Path,
    checkpoint_path: Option<&Path>,
    resume: bool,
    max_cells: Option<u64>,
) -> Result<RunSummary> {
    cfg.validate()?;
    let grid = CellGrid::new(cfg);
    let digest = config_digest(cfg);
    let mut state = match (resume, checkpoint_path) {
        (true, Some(path)) => {
            let cp = Checkpoint::load(path)?;
            if cp.config_digest != digest || cp.total_cells != grid.len() {
                return Err(Error::CheckpointMismatch);
            }
            cp
        }
        (true, None) => return Err(Error::ConfigInvalid("resume needs a checkpoint path".into())),
        (false, _) => Checkpoint {
            config_digest: digest,
            next_cell: 0,
            total_cells: grid.len(),
            counts: BTreeMap::new(),
            output_bytes: 0,
        },
    };

    let file = if resume {
        let f = OpenOptions::new().write(true).open(output)?;
        if f.metadata()?.len() < state.output_bytes {
            return Err(Error::CheckpointCorrupt("output is shorter than the checkpoint records".into()));
        }
        f.set_len(state.output_bytes)?;
        let mut f = f;
        std::io::Seek::seek(&mut f, std::io::SeekFrom::End(0))?;
        f
    } else {
        File::create(output)?
    };
    let mut out = BufWriter::new(file);

    let stop = max_cells.map_or(grid.len(), |m| (state.next_cell + m).min(grid.len()));
    let mut processed = 0;
    while state.next_cell < stop {
        let end = (state.next_cell + CHUNK * cfg.parallelism as u64).min(stop);
        let records = scan_range(cfg, &grid, state.next_cell..end)?;
        for rec in &records {
            *state.counts.entry(rec.status.tag().to_string()).or_insert(0) += 1;
            if emitted(cfg, rec) {
                let line = format!("{rec}\n");
                out.write_all(line.as_bytes())?;
                state.output_bytes += line.len() as u64;
            }
        }
        out.flush()?;
        processed += end - state.next_cell;
        state.next_cell = end;
        if let Some(path) = checkpoint_path {
            state.store(path)?;
        }
    }
    out.flush()?;
    if let Some(path) = checkpoint_path {
        state.store(path)?;
    }
    Ok(RunSummary { checkpoint: state, processed })
}
