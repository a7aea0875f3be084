use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::{Deserialize, Serialize};
use welter_core::{GameKind, Ordinal};

use crate::session::{Board, GameSession, Player, SessionView, Status, DEFAULT_BUDGET};
use crate::AppState;

#[derive(Debug)]
pub struct ApiError {
    pub status: StatusCode,
    pub message: String,
    pub reason: Option<&'static str>,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            message: message.into(),
            reason: None,
        }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, message)
    }

    fn not_found(id: &str) -> Self {
        ApiError::new(StatusCode::NOT_FOUND, format!("no game with id {id}"))
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody {
            error: &self.message,
            reason: self.reason,
        };
        (self.status, Json(body)).into_response()
    }
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CreateGame {
    pub game: GameKind,
    pub position: Vec<String>,
    #[serde(default = "default_true")]
    pub human_moves_first: bool,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HumanMove {
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveView {
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateValue {
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisResponse {
    pub value: String,
    pub is_p: bool,
    pub winning_moves: Vec<MoveView>,
    pub what_if: Vec<CandidateValue>,
}

#[derive(Debug, Deserialize)]
pub struct AnalysisQuery {
    #[serde(default)]
    candidates: Option<String>,
}

fn parse_ordinal(field: &str, text: &str) -> Result<Ordinal, ApiError> {
    text.parse()
        .map_err(|e| ApiError::bad_request(format!("{field}: {e}")))
}

pub async fn create_game(
    State(state): State<AppState>,
    body: Result<Json<CreateGame>, JsonRejection>,
) -> Result<(StatusCode, Json<SessionView>), ApiError> {
    let Json(req) = body.map_err(|e| ApiError::bad_request(e.body_text()))?;
    let board = Board::parse(req.game, &req.position).map_err(|e| ApiError::bad_request(e.to_string()))?;
    let id = uuid::Uuid::new_v4().simple().to_string();
    let session = GameSession::new(
        id,
        board,
        req.human_moves_first,
        req.seed,
        req.budget.unwrap_or(DEFAULT_BUDGET),
    );
    Ok((StatusCode::CREATED, Json(state.insert(session))))
}

pub async fn get_game(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<SessionView>, ApiError> {
    let session = state.session(&id).ok_or_else(|| ApiError::not_found(&id))?;
    let view = session.lock().unwrap().view();
    Ok(Json(view))
}

fn ensure_turn(session: &GameSession, player: Player) -> Result<(), ApiError> {
    if session.status != Status::Ongoing {
        return Err(ApiError::new(StatusCode::CONFLICT, "game is over"));
    }
    if session.to_move != player {
        return Err(ApiError::new(StatusCode::CONFLICT, "move out of turn"));
    }
    Ok(())
}

pub async fn post_human_move(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Result<Json<HumanMove>, JsonRejection>,
) -> Result<Json<SessionView>, ApiError> {
    let session = state.session(&id).ok_or_else(|| ApiError::not_found(&id))?;
    let Json(req) = body.map_err(|e| ApiError::bad_request(e.body_text()))?;
    let from = parse_ordinal("from", &req.from)?;
    let to = parse_ordinal("to", &req.to)?;

    let mut s = session.lock().unwrap();
    ensure_turn(&s, Player::Human)?;
    let (next, mv) = s.position.play(&from, &to).map_err(|m| ApiError {
        status: StatusCode::UNPROCESSABLE_ENTITY,
        message: format!("illegal move {from} -> {to}: {m}"),
        reason: Some(m.reason()),
    })?;
    s.record(Player::Human, next, &mv);
    let view = s.view();
    state.persist(&view);
    Ok(Json(view))
}

pub async fn post_engine_move(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    let session = state.session(&id).ok_or_else(|| ApiError::not_found(&id))?;
    let mut s = session.lock().unwrap();
    ensure_turn(&s, Player::Engine)?;
    let internal = |m: String| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, m);
    let mv = s
        .position
        .engine_move(s.ply_seed(), s.budget)
        .map_err(|e| internal(e.to_string()))?
        .ok_or_else(|| internal("engine found no legal move".into()))?;
    let (next, mv) = s
        .position
        .play(&mv.from, &mv.to)
        .map_err(|m| internal(format!("engine produced an illegal move: {m}")))?;
    s.record(Player::Engine, next, &mv);
    let view = s.view();
    state.persist(&view);
    Ok(Json(view))
}

/// `candidates` is a comma-separated list of `from->to` pairs in ordinal
/// notation (percent-encode `+` as `%2B`).
pub async fn get_analysis(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Query(query): Query<AnalysisQuery>,
) -> Result<Json<AnalysisResponse>, ApiError> {
    let session = state.session(&id).ok_or_else(|| ApiError::not_found(&id))?;
    let mut candidates = Vec::new();
    for pair in query.candidates.iter().flat_map(|c| c.split(',')).filter(|p| !p.trim().is_empty()) {
        let (from, to) = pair
            .split_once("->")
            .ok_or_else(|| ApiError::bad_request(format!("candidate {pair:?} is not of the form from->to")))?;
        candidates.push((parse_ordinal("candidate", from)?, parse_ordinal("candidate", to)?));
    }

    let board = session.lock().unwrap().position.clone();
    let value = board.value();
    let winning_moves = board
        .winning_moves()
        .into_iter()
        .map(|m| MoveView {
            from: m.from.to_string(),
            to: m.to.to_string(),
        })
        .collect();
    let what_if = candidates
        .into_iter()
        .map(|(from, to)| {
            let (value, error) = match board.play(&from, &to) {
                Ok((next, _)) => (Some(next.value().to_string()), None),
                Err(m) => (None, Some(m.reason().to_owned())),
            };
            CandidateValue {
                from: from.to_string(),
                to: to.to_string(),
                value,
                error,
            }
        })
        .collect();
    Ok(Json(AnalysisResponse {
        is_p: value.is_zero(),
        value: value.to_string(),
        winning_moves,
        what_if,
    }))
}
