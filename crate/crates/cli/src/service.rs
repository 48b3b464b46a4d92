//! HTTP game service.
//!
//! Sessions live in memory. Each session sits behind its own async mutex, so
//! requests to one session are serialized while different sessions proceed
//! in parallel. Hints and solutions are computed on a snapshot in a blocking
//! task, leaving the session playable meanwhile.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};
use std::time::{Duration, SystemTime};

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tokio::sync::Mutex;

use flood_core::generate::{gen_random, GraphKind};
use flood_core::instances::{InstanceDocument, VariantName};
use flood_core::oracle::{hint, Hint};
use flood_core::solve::{solve, Engine};
use flood_core::{ColoredGraph, FloodError, GameState, Move, SearchBudget, Variant, Vertex};

/// Problem-detail error body.
#[derive(Debug, Serialize, Deserialize)]
pub struct Problem {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
}

pub struct ApiError {
    status: StatusCode,
    problem: Problem,
}

impl ApiError {
    fn new(status: StatusCode, code: &str, message: String) -> Self {
        ApiError { status, problem: Problem { code: code.into(), message, field: None } }
    }

    fn not_found(id: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, "not_found", format!("no game session {id}"))
    }
}

impl From<FloodError> for ApiError {
    fn from(e: FloodError) -> Self {
        let message = e.to_string();
        match e {
            FloodError::VariantViolation { .. } => Self::new(StatusCode::CONFLICT, "variant_violation", message),
            FloodError::BudgetExhausted { .. } => Self::new(StatusCode::UNPROCESSABLE_ENTITY, "budget_exhausted", message),
            FloodError::Parse { field, message } => ApiError {
                status: StatusCode::BAD_REQUEST,
                problem: Problem { code: "invalid_instance".into(), message, field: Some(field) },
            },
            FloodError::UnknownVertex(_) => ApiError {
                status: StatusCode::BAD_REQUEST,
                problem: Problem { code: "invalid_move".into(), message, field: Some("vertex".into()) },
            },
            FloodError::UnknownColor { .. } => ApiError {
                status: StatusCode::BAD_REQUEST,
                problem: Problem { code: "invalid_move".into(), message, field: Some("color".into()) },
            },
            FloodError::Internal(_) | FloodError::WitnessGap { .. } => {
                Self::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", message)
            }
            _ => Self::new(StatusCode::BAD_REQUEST, "invalid_input", message),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.problem)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

pub struct Session {
    pub graph: Arc<ColoredGraph>,
    pub variant: Variant,
    pub state: GameState,
    pub budget: SearchBudget,
    pub created: SystemTime,
}

#[derive(Default)]
pub struct AppState {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    next_id: AtomicU64,
}

impl AppState {
    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        let sessions = self.sessions.read().expect("session table lock");
        sessions.get(id).cloned().ok_or_else(|| ApiError::not_found(id))
    }
}

#[derive(Debug, Deserialize)]
pub struct GeneratorParams {
    pub kind: GraphKind,
    pub n: usize,
    pub k: u32,
    #[serde(default)]
    pub seed: u64,
}

/// Either a full instance document or generator parameters.
#[derive(Debug, Deserialize)]
pub struct CreateGame {
    pub instance: Option<InstanceDocument>,
    pub generator: Option<GeneratorParams>,
    /// Overrides the document's variant.
    pub variant: Option<VariantName>,
    pub pivot: Option<Vertex>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BlobView {
    pub vertices: Vec<Vertex>,
    pub color: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StateView {
    pub blobs: Vec<BlobView>,
    pub colors: Vec<u32>,
    pub move_count: usize,
    pub distinct_colors: usize,
    pub lower_bound: usize,
    pub solved: bool,
    pub history: Vec<Move>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GameView {
    pub session_id: String,
    pub state: StateView,
    /// The instance, included when the session is created.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SolutionView {
    pub opt: usize,
    pub engine: Engine,
    pub witness: Vec<Move>,
}

fn view(state: &GameState) -> StateView {
    let distinct = state.distinct_colors();
    StateView {
        blobs: state.blobs().into_iter().map(|b| BlobView { color: state.color(b[0]), vertices: b }).collect(),
        colors: state.colors().to_vec(),
        move_count: state.history().len(),
        distinct_colors: distinct,
        lower_bound: distinct - 1,
        solved: state.is_monochrome(),
        history: state.history().to_vec(),
    }
}

pub fn router() -> Router {
    Router::new()
        .route("/api/game", post(create_game))
        .route("/api/game/{id}", get(get_game))
        .route("/api/game/{id}/move", post(play_move))
        .route("/api/game/{id}/hint", get(get_hint))
        .route("/api/game/{id}/undo", post(undo))
        .route("/api/game/{id}/solution", get(get_solution))
        .with_state(Arc::new(AppState::default()))
}

pub async fn serve(addr: &str) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    log::info!("serving on {}", listener.local_addr()?);
    axum::serve(listener, router()).await
}

async fn create_game(State(app): State<Arc<AppState>>, Json(req): Json<CreateGame>) -> ApiResult<GameView> {
    let mut doc = match (req.instance, req.generator) {
        (Some(doc), None) => doc,
        (None, Some(p)) => gen_random(p.kind, p.n, p.k, p.seed)?,
        _ => {
            return Err(ApiError::new(
                StatusCode::BAD_REQUEST,
                "invalid_input",
                "give exactly one of instance and generator".into(),
            ))
        }
    };
    match (req.variant, req.pivot) {
        (Some(VariantName::Fixed), Some(pivot)) => doc = doc.with_variant(Variant::Fixed { pivot }),
        (Some(VariantName::Fixed), None) => doc = doc.with_variant(Variant::Fixed { pivot: 0 }),
        (Some(VariantName::Free), _) => doc = doc.with_variant(Variant::Free),
        (None, _) => {}
    }
    doc.validate()?;
    let graph = Arc::new(doc.graph()?);
    let state = GameState::new(graph.clone());
    let session = Session {
        graph,
        variant: doc.game_variant(),
        state,
        budget: SearchBudget::default().with_time_limit(Duration::from_secs(10)),
        created: SystemTime::now(),
    };
    let id = format!("g{}", app.next_id.fetch_add(1, Ordering::Relaxed) + 1);
    let state = view(&session.state);
    app.sessions.write().expect("session table lock").insert(id.clone(), Arc::new(Mutex::new(session)));
    Ok(Json(GameView { session_id: id, state, instance: Some(doc) }))
}

async fn get_game(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult<GameView> {
    let session = app.session(&id)?;
    let session = session.lock().await;
    Ok(Json(GameView { session_id: id, state: view(&session.state), instance: None }))
}

async fn play_move(State(app): State<Arc<AppState>>, Path(id): Path<String>, Json(m): Json<Move>) -> ApiResult<GameView> {
    let session = app.session(&id)?;
    let mut session = session.lock().await;
    session.state = session.state.apply_move(m, session.variant)?;
    Ok(Json(GameView { session_id: id, state: view(&session.state), instance: None }))
}

async fn undo(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult<GameView> {
    let session = app.session(&id)?;
    let mut session = session.lock().await;
    let history = session.state.history();
    if history.is_empty() {
        return Err(ApiError::new(StatusCode::CONFLICT, "nothing_to_undo", "no moves have been played".into()));
    }
    let kept = history[..history.len() - 1].to_vec();
    session.state = GameState::replay(session.graph.clone(), session.variant, &kept)?;
    Ok(Json(GameView { session_id: id, state: view(&session.state), instance: None }))
}

#[derive(Debug, Deserialize)]
pub struct BudgetQuery {
    /// Most states the search may store.
    pub budget: Option<usize>,
}

/// Snapshot of what a background computation needs.
async fn snapshot(app: &AppState, id: &str, q: &BudgetQuery) -> Result<(GameState, Variant, SearchBudget), ApiError> {
    let session = app.session(id)?;
    let session = session.lock().await;
    let mut budget = session.budget;
    if let Some(b) = q.budget {
        budget.max_states = b;
    }
    Ok((session.state.clone(), session.variant, budget))
}

async fn blocking<T: Send + 'static>(f: impl FnOnce() -> flood_core::Result<T> + Send + 'static) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string()))?
        .map_err(ApiError::from)
}

async fn get_hint(State(app): State<Arc<AppState>>, Path(id): Path<String>, Query(q): Query<BudgetQuery>) -> ApiResult<Hint> {
    let (state, variant, budget) = snapshot(&app, &id, &q).await?;
    Ok(Json(blocking(move || hint(&state, variant, budget)).await?))
}

/// An optimal continuation from the current position. Vertex ids refer to
/// the session's graph.
async fn get_solution(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    Query(q): Query<BudgetQuery>,
) -> ApiResult<SolutionView> {
    let (state, variant, budget) = snapshot(&app, &id, &q).await?;
    let outcome = blocking(move || solve(&state.current_graph(), variant, Engine::Auto, budget)).await?;
    Ok(Json(SolutionView { opt: outcome.solution.opt, engine: outcome.engine, witness: outcome.solution.witness }))
}
