//! HTTP service exposing generation and the teach loop.
//!
//! Readers work on an `Arc` snapshot of the store. Mutations are
//! serialized by `writer`: the new store is saved to disk first and only
//! swapped in when the save succeeded.

use std::path::PathBuf;
use std::sync::{Arc, Mutex, RwLock};

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{delete, get, post};
use axum::{Json, Router};
use metaqa_core::learner::{Learned, MSDIP_VERSION};
use metaqa_core::preprocess::normalize_text;
use metaqa_core::{
    generate, learn_clause, learn_pair, Diagnostic, EngineConfig, InsertOutcome, Msdip, PhrasalLexicon, QaPair,
    Source, TaggedSentence, TeachRequest, TeachStatus,
};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::io;
use crate::oracle::{OracleClient, OracleError};

pub struct Service {
    store: RwLock<Arc<Msdip>>,
    writer: tokio::sync::Mutex<()>,
    queue: Mutex<Vec<TeachRequest>>,
    msdip_path: PathBuf,
    queue_path: Option<PathBuf>,
    oracle: OracleClient,
    lexicon: Option<PhrasalLexicon>,
}

impl Service {
    pub fn new(
        store: Msdip,
        msdip_path: PathBuf,
        queue_path: Option<PathBuf>,
        oracle_url: &str,
        lexicon: Option<PhrasalLexicon>,
    ) -> anyhow::Result<Self> {
        let queue = match &queue_path {
            Some(p) => io::read_queue(p)?,
            None => Vec::new(),
        };
        Ok(Service {
            store: RwLock::new(Arc::new(store)),
            writer: tokio::sync::Mutex::new(()),
            queue: Mutex::new(queue),
            msdip_path,
            queue_path,
            oracle: OracleClient::new(oracle_url),
            lexicon,
        })
    }

    pub fn snapshot(&self) -> Arc<Msdip> {
        self.store.read().expect("store lock").clone()
    }

    fn config(&self) -> EngineConfig {
        self.snapshot().config().clone()
    }

    /// Inserts learned pairs under the writer lock and persists the store.
    async fn commit(&self, learned: Learned) -> Result<(Vec<String>, Vec<String>), ApiError> {
        let _guard = self.writer.lock().await;
        let mut next = (*self.snapshot()).clone();
        let mut inserted = Vec::new();
        let mut duplicates = Vec::new();
        for pair in learned.pairs {
            let id = pair.id.clone();
            match next.insert(pair).map_err(ApiError::unprocessable)? {
                InsertOutcome::Inserted => inserted.push(id),
                InsertOutcome::Duplicate => duplicates.push(id),
            }
        }
        if !inserted.is_empty() {
            next.save(&self.msdip_path)
                .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, format!("store not saved: {e}")))?;
            *self.store.write().expect("store lock") = Arc::new(next);
        }
        Ok((inserted, duplicates))
    }

    fn update_queue(&self, f: impl FnOnce(&mut Vec<TeachRequest>)) -> Result<(), ApiError> {
        let mut queue = self.queue.lock().expect("queue lock");
        f(&mut queue);
        if let Some(p) = &self.queue_path {
            io::write_atomic(p, io::queue_lines(&queue).as_bytes())
                .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?;
        }
        Ok(())
    }

    async fn tag(&self, text: &str) -> Result<TaggedSentence, ApiError> {
        self.oracle.tag(&normalize_text(text)).await.map_err(ApiError::from)
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            message: message.into(),
        }
    }

    fn unprocessable(e: impl std::fmt::Display) -> Self {
        ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, e.to_string())
    }
}

impl From<OracleError> for ApiError {
    fn from(e: OracleError) -> Self {
        let status = match e {
            OracleError::Unreachable(_) => StatusCode::SERVICE_UNAVAILABLE,
            OracleError::BadResponse(_) => StatusCode::BAD_GATEWAY,
        };
        ApiError::new(status, e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let retriable = self.status == StatusCode::SERVICE_UNAVAILABLE;
        let body = json!({ "error": self.message, "retriable": retriable });
        (self.status, Json(body)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

#[derive(Deserialize)]
pub struct TeachBody {
    pub request_id: String,
    pub interrogatives: Vec<String>,
}

#[derive(Deserialize)]
pub struct PairsBody {
    pub decl: TaggedSentence,
    pub interrogatives: Vec<TaggedSentence>,
}

#[derive(Deserialize)]
pub struct GenerateBody {
    pub text: String,
}

#[derive(Serialize)]
pub struct LearnReply {
    /// `learned` when at least one pair was new, else `duplicate`.
    pub status: &'static str,
    pub learned: Vec<String>,
    pub duplicates: Vec<String>,
    pub msdip_size: usize,
    pub diagnostics: Vec<Diagnostic>,
    pub qaps: Vec<QaPair>,
}

#[derive(Serialize)]
pub struct GenerateReply {
    pub sentence: TaggedSentence,
    pub qaps: Vec<QaPair>,
    pub teach_request: Option<TeachRequest>,
    pub teach_requests: Vec<TeachRequest>,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Serialize)]
struct PairView {
    id: String,
    source: Source,
    md: String,
    mi: String,
}

async fn get_queue(State(svc): State<Arc<Service>>) -> Json<Vec<TeachRequest>> {
    let queue = svc.queue.lock().expect("queue lock");
    Json(
        queue
            .iter()
            .filter(|r| r.status == TeachStatus::Pending)
            .cloned()
            .collect(),
    )
}

async fn post_teach(State(svc): State<Arc<Service>>, Json(body): Json<TeachBody>) -> ApiResult<LearnReply> {
    let request = svc
        .queue
        .lock()
        .expect("queue lock")
        .iter()
        .find(|r| r.id == body.request_id && r.status != TeachStatus::Dismissed)
        .cloned()
        .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no open teach request {}", body.request_id)))?;
    if body.interrogatives.iter().all(|q| q.trim().is_empty()) {
        return Err(ApiError::new(StatusCode::BAD_REQUEST, "no interrogative sentences given"));
    }
    let mut tagged = Vec::new();
    for q in body.interrogatives.iter().filter(|q| !q.trim().is_empty()) {
        tagged.push(svc.tag(q).await?);
    }
    let cfg = svc.config();
    let learned = learn_clause(&request.tagged, request.frame, &tagged, &cfg, svc.lexicon.as_ref(), Source::Taught)
        .map_err(ApiError::unprocessable)?;
    let diagnostics = learned.diagnostics.clone();
    let (inserted, duplicates) = svc.commit(learned).await?;
    let snapshot = svc.snapshot();
    let qaps = generate(&request.tagged, &snapshot, svc.lexicon.as_ref()).qaps;
    svc.update_queue(|q| {
        for r in q.iter_mut().filter(|r| r.id == request.id) {
            r.status = TeachStatus::Taught;
        }
    })?;
    Ok(Json(LearnReply {
        status: if inserted.is_empty() { "duplicate" } else { "learned" },
        learned: inserted,
        duplicates,
        msdip_size: snapshot.len(),
        diagnostics,
        qaps,
    }))
}

async fn post_pairs(State(svc): State<Arc<Service>>, Json(body): Json<PairsBody>) -> ApiResult<LearnReply> {
    let cfg = svc.config();
    let learned = learn_pair(&body.decl, &body.interrogatives, &cfg, svc.lexicon.as_ref(), Source::Taught)
        .map_err(ApiError::unprocessable)?;
    let diagnostics = learned.diagnostics.clone();
    let (inserted, duplicates) = svc.commit(learned).await?;
    Ok(Json(LearnReply {
        status: if inserted.is_empty() { "duplicate" } else { "learned" },
        learned: inserted,
        duplicates,
        msdip_size: svc.snapshot().len(),
        diagnostics,
        qaps: Vec::new(),
    }))
}

async fn get_msdip(State(svc): State<Arc<Service>>) -> Json<serde_json::Value> {
    let store = svc.snapshot();
    let pairs: Vec<PairView> = store
        .pairs()
        .iter()
        .map(|p| PairView {
            id: p.id.clone(),
            source: p.source,
            md: p.md.to_string(),
            mi: p.mi.to_string(),
        })
        .collect();
    Json(json!({
        "version": MSDIP_VERSION,
        "config": store.config(),
        "size": store.len(),
        "pairs": pairs,
    }))
}

async fn post_generate(State(svc): State<Arc<Service>>, Json(body): Json<GenerateBody>) -> ApiResult<GenerateReply> {
    if body.text.trim().is_empty() {
        return Err(ApiError::new(StatusCode::BAD_REQUEST, "empty text"));
    }
    let ts = svc.tag(&body.text).await?;
    let g = generate(&ts, &svc.snapshot(), svc.lexicon.as_ref());
    svc.update_queue(|q| {
        for r in &g.teach_requests {
            match q.iter_mut().find(|x| x.id == r.id) {
                Some(existing) if existing.status == TeachStatus::Taught => *existing = r.clone(),
                Some(_) => {}
                None => q.push(r.clone()),
            }
        }
    })?;
    Ok(Json(GenerateReply {
        sentence: ts,
        qaps: g.qaps,
        teach_request: g.teach_requests.first().cloned(),
        teach_requests: g.teach_requests,
        diagnostics: g.diagnostics,
    }))
}

async fn delete_queue(State(svc): State<Arc<Service>>, Path(id): Path<String>) -> ApiResult<serde_json::Value> {
    let mut found = false;
    svc.update_queue(|q| {
        for r in q.iter_mut().filter(|r| r.id == id) {
            r.status = TeachStatus::Dismissed;
            found = true;
        }
    })?;
    if !found {
        return Err(ApiError::new(StatusCode::NOT_FOUND, format!("no teach request {id}")));
    }
    Ok(Json(json!({ "id": id, "status": "dismissed" })))
}

pub fn router(svc: Arc<Service>) -> Router {
    Router::new()
        .route("/queue", get(get_queue))
        .route("/queue/{id}", delete(delete_queue))
        .route("/teach", post(post_teach))
        .route("/pairs", post(post_pairs))
        .route("/msdip", get(get_msdip))
        .route("/generate", post(post_generate))
        .with_state(svc)
}

/// Serves until the listener fails.
pub async fn serve(svc: Arc<Service>, listener: tokio::net::TcpListener) -> std::io::Result<()> {
    axum::serve(listener, router(svc)).await
}
