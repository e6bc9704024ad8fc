#![allow(dead_code)]

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use axum::extract::State;
use axum::http::StatusCode;
use axum::routing::post;
use axum::{Json, Router};
use metaqa::service::{self, Service};
use metaqa_core::{Msdip, TaggedSentence};
use serde_json::Value;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

type Tags = Arc<HashMap<String, TaggedSentence>>;

async fn tag(State(tags): State<Tags>, Json(body): Json<Value>) -> Result<Json<TaggedSentence>, StatusCode> {
    let text = body["text"].as_str().unwrap_or_default();
    tags.get(text).cloned().map(Json).ok_or(StatusCode::UNPROCESSABLE_ENTITY)
}

/// Serves canned tags for the texts in `oracle_tags.json`.
pub async fn fake_oracle() -> SocketAddr {
    let tags: HashMap<String, TaggedSentence> = serde_json::from_str(&read("oracle_tags.json")).unwrap();
    let app = Router::new().route("/tag", post(tag)).with_state(Arc::new(tags));
    let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
    let addr = listener.local_addr().unwrap();
    tokio::spawn(async move { axum::serve(listener, app).await.unwrap() });
    addr
}

/// An address nothing listens on.
pub async fn dead_address() -> SocketAddr {
    let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
    listener.local_addr().unwrap()
}

pub struct Running {
    pub base: String,
    pub service: Arc<Service>,
    pub client: reqwest::Client,
}

impl Running {
    pub async fn get(&self, path: &str) -> (u16, Value) {
        let r = self.client.get(format!("{}{path}", self.base)).send().await.unwrap();
        (r.status().as_u16(), r.json().await.unwrap_or(Value::Null))
    }

    pub async fn post(&self, path: &str, body: Value) -> (u16, Value) {
        let r = self.client.post(format!("{}{path}", self.base)).json(&body).send().await.unwrap();
        (r.status().as_u16(), r.json().await.unwrap_or(Value::Null))
    }

    pub async fn delete(&self, path: &str) -> (u16, Value) {
        let r = self.client.delete(format!("{}{path}", self.base)).send().await.unwrap();
        (r.status().as_u16(), r.json().await.unwrap_or(Value::Null))
    }
}

pub async fn start_service(store: Msdip, msdip_path: &Path, oracle: SocketAddr) -> Running {
    let svc = Arc::new(
        Service::new(store, msdip_path.to_path_buf(), None, &format!("http://{oracle}"), None).unwrap(),
    );
    let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
    let addr = listener.local_addr().unwrap();
    let s = svc.clone();
    tokio::spawn(async move { service::serve(s, listener).await.unwrap() });
    Running {
        base: format!("http://{addr}"),
        service: svc,
        client: reqwest::Client::new(),
    }
}
