//! HTTP client for the tagging oracle (`POST {base}/tag {"text": ...}`).

use std::time::Duration;

use metaqa_core::TaggedSentence;
use serde_json::json;

#[derive(Debug)]
pub enum OracleError {
    /// Connection failed or timed out; worth retrying.
    Unreachable(String),
    /// The oracle answered with an error status or an invalid sentence.
    BadResponse(String),
}

impl std::fmt::Display for OracleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleError::Unreachable(m) => write!(f, "tagging oracle unreachable: {m}"),
            OracleError::BadResponse(m) => write!(f, "tagging oracle returned a bad response: {m}"),
        }
    }
}

impl std::error::Error for OracleError {}

#[derive(Clone, Debug)]
pub struct OracleClient {
    base: String,
    http: reqwest::Client,
}

impl OracleClient {
    pub fn new(base: &str) -> Self {
        let http = reqwest::Client::builder()
            .timeout(Duration::from_secs(30))
            .build()
            .expect("http client builds");
        OracleClient {
            base: base.trim_end_matches('/').to_string(),
            http,
        }
    }

    pub async fn tag(&self, text: &str) -> Result<TaggedSentence, OracleError> {
        let resp = self
            .http
            .post(format!("{}/tag", self.base))
            .json(&json!({ "text": text }))
            .send()
            .await
            .map_err(|e| OracleError::Unreachable(e.to_string()))?;
        let status = resp.status();
        if status.is_server_error() && status.as_u16() == 503 {
            return Err(OracleError::Unreachable(format!("status {status}")));
        }
        if !status.is_success() {
            return Err(OracleError::BadResponse(format!("status {status}")));
        }
        let body = resp
            .text()
            .await
            .map_err(|e| OracleError::Unreachable(e.to_string()))?;
        TaggedSentence::from_json(&body).map_err(|e| OracleError::BadResponse(e.to_string()))
    }
}
