use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::Mutex;

use crate::session::{GameSession, SessionView};

/// Append-only JSON-lines log of session records.
pub struct Snapshot {
    path: PathBuf,
    file: Mutex<File>,
}

impl Snapshot {
    pub fn open(path: PathBuf) -> io::Result<Self> {
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Snapshot {
            path,
            file: Mutex::new(file),
        })
    }

    pub fn append(&self, view: &SessionView) -> io::Result<()> {
        let mut line = serde_json::to_string(view)?;
        line.push('\n');
        self.file.lock().unwrap().write_all(line.as_bytes())
    }

    /// Latest record per session id, each rebuilt by replay. Records that
    /// fail to parse or replay are skipped with a warning.
    pub fn load(&self) -> io::Result<Vec<GameSession>> {
        let reader = BufReader::new(File::open(&self.path)?);
        let mut latest: HashMap<String, SessionView> = HashMap::new();
        for (n, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<SessionView>(&line) {
                Ok(view) => {
                    latest.insert(view.id.clone(), view);
                }
                Err(e) => tracing::warn!("snapshot line {}: {e}", n + 1),
            }
        }
        Ok(latest
            .values()
            .filter_map(|v| match GameSession::from_view(v) {
                Ok(s) => Some(s),
                Err(e) => {
                    tracing::warn!("snapshot session {}: {e}", v.id);
                    None
                }
            })
            .collect())
    }
}
