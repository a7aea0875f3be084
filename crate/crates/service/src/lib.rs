//! HTTP JSON API serving human-versus-engine games.
//!
//! Sessions live in memory. Each mutation can optionally be appended to a
//! snapshot file (one JSON session record per line); on startup the last
//! record per id is restored by replaying its history.

mod api;
mod session;
mod snapshot;

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, RwLock};

use axum::routing::{get, post};
use axum::Router;

pub use api::{AnalysisResponse, ApiError, CandidateValue, CreateGame, HumanMove, MoveView};
pub use session::{Board, GameSession, HistoryEntry, Player, SessionView, Status, DEFAULT_BUDGET};
pub use snapshot::Snapshot;

/// Environment variable holding the default bind address.
pub const BIND_ENV: &str = "WELTER_BIND";
pub const DEFAULT_BIND: &str = "127.0.0.1:8080";

#[derive(Clone, Default)]
pub struct AppState {
    inner: Arc<Inner>,
}

#[derive(Default)]
struct Inner {
    sessions: RwLock<HashMap<String, Arc<Mutex<GameSession>>>>,
    snapshot: Option<Snapshot>,
}

impl AppState {
    pub fn new() -> Self {
        AppState::default()
    }

    /// State backed by a snapshot file, restoring any sessions it holds.
    pub fn with_snapshot(path: PathBuf) -> std::io::Result<Self> {
        let snapshot = Snapshot::open(path)?;
        let restored = snapshot.load()?;
        let sessions = restored
            .into_iter()
            .map(|s| (s.id.clone(), Arc::new(Mutex::new(s))))
            .collect();
        Ok(AppState {
            inner: Arc::new(Inner {
                sessions: RwLock::new(sessions),
                snapshot: Some(snapshot),
            }),
        })
    }

    pub fn session(&self, id: &str) -> Option<Arc<Mutex<GameSession>>> {
        self.inner.sessions.read().unwrap().get(id).cloned()
    }

    pub fn session_count(&self) -> usize {
        self.inner.sessions.read().unwrap().len()
    }

    fn insert(&self, session: GameSession) -> SessionView {
        let view = session.view();
        self.persist(&view);
        self.inner
            .sessions
            .write()
            .unwrap()
            .insert(session.id.clone(), Arc::new(Mutex::new(session)));
        view
    }

    fn persist(&self, view: &SessionView) {
        if let Some(snap) = &self.inner.snapshot {
            if let Err(e) = snap.append(view) {
                tracing::warn!("snapshot write failed: {e}");
            }
        }
    }
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/games", post(api::create_game))
        .route("/games/{id}", get(api::get_game))
        .route("/games/{id}/moves", post(api::post_human_move))
        .route("/games/{id}/engine-move", post(api::post_engine_move))
        .route("/games/{id}/analysis", get(api::get_analysis))
        .with_state(state)
}

pub async fn serve(addr: SocketAddr, snapshot: Option<PathBuf>) -> std::io::Result<()> {
    let state = match snapshot {
        Some(path) => AppState::with_snapshot(path)?,
        None => AppState::new(),
    };
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(state)).await
}
