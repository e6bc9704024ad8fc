//! Per-pronoun run statistics.

use std::fmt::{self, Write};

use serde::Serialize;

/// Pronoun columns of the statistics table.
pub const PRONOUNS: [&str; 7] = ["Where", "Who", "What", "When", "Why", "How", "other"];

/// Column index for a wh literal; `How many`/`How much` count as `How`.
pub fn pronoun_bucket(wh: Option<&str>) -> usize {
    let first = wh.and_then(|w| w.split_whitespace().next()).unwrap_or("");
    PRONOUNS[..6]
        .iter()
        .position(|p| p.eq_ignore_ascii_case(first))
        .unwrap_or(6)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunStats {
    pub pairs: [usize; 7],
    pub qaps: [usize; 7],
    pub sentences: usize,
    pub clauses: usize,
    pub discarded: usize,
    pub unusable: usize,
    pub teach_requests: usize,
    pub diagnostics: usize,
    pub mean_ms: f64,
}

impl RunStats {
    pub fn total_pairs(&self) -> usize {
        self.pairs.iter().sum()
    }

    pub fn total_qaps(&self) -> usize {
        self.qaps.iter().sum()
    }
}

fn row(out: &mut String, label: &str, cells: &[usize; 7], total: usize) {
    let _ = write!(out, "{label:<16}");
    for c in cells {
        let _ = write!(out, "{c:>7}");
    }
    let _ = writeln!(out, "{total:>7}");
}

impl fmt::Display for RunStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let _ = write!(out, "{:<16}", "");
        for p in PRONOUNS {
            let _ = write!(out, "{p:>7}");
        }
        let _ = writeln!(out, "{:>7}", "Total");
        row(&mut out, "MSDIP pairs", &self.pairs, self.total_pairs());
        row(&mut out, "QAPs generated", &self.qaps, self.total_qaps());
        let _ = writeln!(
            out,
            "sentences {} (unusable {}), clauses {} (discarded {}), teach requests {}, diagnostics {}",
            self.sentences, self.unusable, self.clauses, self.discarded, self.teach_requests, self.diagnostics
        );
        let _ = write!(out, "mean generation time {:.3} ms/sentence", self.mean_ms);
        f.write_str(&out)
    }
}
