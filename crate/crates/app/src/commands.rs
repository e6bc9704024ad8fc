//! Batch commands behind the CLI.

use std::fmt::Write;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use metaqa_core::builder::build_meta_sequence;
use metaqa_core::matcher::rank_candidates;
use metaqa_core::preprocess::{segment_counted, strip_leading_cc};
use metaqa_core::{
    generate, learn_pair, Case2Order, Diagnostic, EngineConfig, Generation, InsertOutcome, Msdip,
    PhrasalLexicon, QaPair, Source, TaggedSentence, TeachRequest,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::io::{self, InputLine};
use crate::stats::{pronoun_bucket, RunStats};

/// Engine settings given on the command line. They only shape new
/// stores; a loaded store keeps its own.
#[derive(Clone, Debug, Default)]
pub struct StoreOptions {
    pub r: Option<usize>,
    pub phrasal_merge: Option<bool>,
    pub case2_order: Option<Case2Order>,
}

impl StoreOptions {
    fn config(&self) -> EngineConfig {
        let d = EngineConfig::default();
        EngineConfig {
            r: self.r.unwrap_or(d.r),
            phrasal_merge: self.phrasal_merge.unwrap_or(d.phrasal_merge),
            case2_order: self.case2_order.unwrap_or(d.case2_order),
            ..d
        }
    }

    fn check(&self, cfg: &EngineConfig) -> Result<()> {
        if self.r.is_some_and(|r| r != cfg.r) {
            bail!("store was built with r = {}; it cannot be changed for an existing store", cfg.r);
        }
        if self.phrasal_merge.is_some_and(|p| p != cfg.phrasal_merge) {
            bail!("store was built with phrasal_merge = {}; it cannot be changed", cfg.phrasal_merge);
        }
        if self.case2_order.is_some_and(|c| c != cfg.case2_order) {
            bail!("store was built with case2_order = {:?}; it cannot be changed", cfg.case2_order);
        }
        Ok(())
    }
}

/// Loads the store at `path`, reporting load warnings on stderr.
pub fn load_store(path: &Path) -> Result<Msdip> {
    let loaded = Msdip::load(path).with_context(|| format!("cannot load MSDIP {}", path.display()))?;
    for d in &loaded.diagnostics {
        log::warn!("{d}");
    }
    Ok(loaded.store)
}

fn open_or_create(path: &Path, opts: &StoreOptions) -> Result<Msdip> {
    if path.exists() {
        let store = load_store(path)?;
        opts.check(store.config())?;
        Ok(store)
    } else {
        let cfg = opts.config();
        cfg.validate()?;
        Ok(Msdip::new(cfg))
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LearnSummary {
    pub inserted: usize,
    pub duplicates: usize,
    pub total: usize,
    pub diagnostics: Vec<Diagnostic>,
}

/// Learns every training record and saves the store. Nothing is written
/// if any record fails.
pub fn cmd_learn(
    pairs_file: &Path,
    msdip_path: &Path,
    opts: &StoreOptions,
    lexicon: Option<&PhrasalLexicon>,
) -> Result<LearnSummary> {
    let records = io::read_pairs(pairs_file)?;
    let mut store = open_or_create(msdip_path, opts)?;
    let cfg = store.config().clone();
    let mut summary = LearnSummary::default();
    for (i, rec) in records.iter().enumerate() {
        let learned = learn_pair(&rec.decl, &rec.interrogatives, &cfg, lexicon, Source::Seed)
            .with_context(|| format!("record {i} (`{}`)", rec.decl.text))?;
        summary.diagnostics.extend(learned.diagnostics);
        for pair in learned.pairs {
            match store.insert(pair).with_context(|| format!("record {i}"))? {
                InsertOutcome::Inserted => summary.inserted += 1,
                InsertOutcome::Duplicate => summary.duplicates += 1,
            }
        }
    }
    store.save(msdip_path)?;
    summary.total = store.len();
    Ok(summary)
}

/// Everything a generation run produced, in input order.
#[derive(Clone, Debug, Default)]
pub struct RunOutput {
    pub qaps: Vec<QaPair>,
    pub teach_requests: Vec<TeachRequest>,
    pub diagnostics: Vec<Diagnostic>,
    pub stats: RunStats,
}

impl RunOutput {
    pub fn qap_lines(&self) -> String {
        self.qaps.iter().map(|q| q.to_json_line() + "\n").collect()
    }
}

/// Pattern counts per pronoun column.
pub fn store_pairs_by_pronoun(store: &Msdip) -> [usize; 7] {
    let mut counts = [0; 7];
    for p in store.pairs() {
        counts[pronoun_bucket(p.mi.wh().map(|w| w.as_str()))] += 1;
    }
    counts
}

/// Generates for all sentences in parallel; results keep input order.
pub fn run_generation(lines: &[InputLine], store: &Msdip, lexicon: Option<&PhrasalLexicon>) -> RunOutput {
    let results: Vec<(Option<Generation>, f64, Option<Diagnostic>)> = lines
        .par_iter()
        .map(|line| match line {
            InputLine::Sentence(ts) => {
                let start = Instant::now();
                let g = generate(ts, store, lexicon);
                (Some(g), start.elapsed().as_secs_f64() * 1e3, None)
            }
            InputLine::Invalid(d) => (None, 0.0, Some(d.clone())),
        })
        .collect();

    let mut out = RunOutput::default();
    out.stats.pairs = store_pairs_by_pronoun(store);
    let mut total_ms = 0.0;
    for (g, ms, bad) in results {
        out.stats.sentences += 1;
        if let Some(d) = bad {
            out.stats.unusable += 1;
            out.diagnostics.push(d);
            continue;
        }
        let g = g.expect("sentence lines generate");
        total_ms += ms;
        if g.clauses == 0 && g.discarded == 0 {
            out.stats.unusable += 1;
        }
        out.stats.clauses += g.clauses;
        out.stats.discarded += g.discarded;
        for q in &g.qaps {
            out.stats.qaps[pronoun_bucket(q.wh.as_deref())] += 1;
        }
        out.qaps.extend(g.qaps);
        out.teach_requests.extend(g.teach_requests);
        out.diagnostics.extend(g.diagnostics);
    }
    let generated = out.stats.sentences - lines.iter().filter(|l| matches!(l, InputLine::Invalid(_))).count();
    if generated > 0 {
        out.stats.mean_ms = total_ms / generated as f64;
    }
    out.stats.teach_requests = out.teach_requests.len();
    out.stats.diagnostics = out.diagnostics.len();
    out
}

/// Runs generation over a JSON-lines corpus and writes the QAP file and,
/// if given, appends to the teach queue.
pub fn cmd_generate(
    input: &Path,
    msdip_path: &Path,
    out_path: &Path,
    teach_queue: Option<&Path>,
    lexicon: Option<&PhrasalLexicon>,
) -> Result<RunOutput> {
    let store = load_store(msdip_path)?;
    let lines = io::read_sentences(input)?;
    let out = run_generation(&lines, &store, lexicon);
    io::write_atomic(out_path, out.qap_lines().as_bytes())?;
    if let Some(q) = teach_queue {
        io::append_queue(q, &out.teach_requests)?;
    }
    Ok(out)
}

/// Ranked match candidates for one sentence, as text.
pub fn match_report(ts: &TaggedSentence, store: &Msdip, lexicon: Option<&PhrasalLexicon>, out: &mut String) {
    let _ = writeln!(out, "{} {}", ts.id(), ts.text);
    let segments = match segment_counted(ts) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(out, "  unusable: {e}");
            return;
        }
    };
    if segments.discarded > 0 {
        let _ = writeln!(out, "  {} clause(s) discarded", segments.discarded);
    }
    for s in segments.sentences {
        let frame = s.frame;
        let xs = match build_meta_sequence(&strip_leading_cc(s), store.config(), lexicon) {
            Ok((xs, _)) => xs,
            Err(e) => {
                let _ = writeln!(out, "  clause {frame}: rejected: {e}");
                continue;
            }
        };
        let _ = writeln!(out, "  clause {frame}: {xs}");
        let ranked = rank_candidates(&xs, store).unwrap_or_default();
        let found: Vec<_> = ranked.iter().filter(|m| m.z_len > 0).collect();
        if found.is_empty() {
            let _ = writeln!(out, "    none");
        }
        for (i, m) in found.iter().take(5).enumerate() {
            let _ = writeln!(
                out,
                "    {}. {} z_len={} x_off={} xs_off={} pairs={} md={}",
                i + 1,
                m.classification.as_str(),
                m.z_len,
                m.x_off,
                m.xs_off,
                m.pairs.len(),
                m.md.map(ToString::to_string).unwrap_or_default()
            );
        }
    }
}

pub fn cmd_match(input: &Path, msdip_path: &Path, lexicon: Option<&PhrasalLexicon>) -> Result<String> {
    let store = load_store(msdip_path)?;
    let mut out = String::new();
    for line in io::read_sentences(input)? {
        match line {
            InputLine::Sentence(ts) => match_report(&ts, &store, lexicon, &mut out),
            InputLine::Invalid(d) => {
                let _ = writeln!(out, "{d}");
            }
        }
    }
    Ok(out)
}

pub fn cmd_stats(msdip_path: &Path) -> Result<String> {
    let store = load_store(msdip_path)?;
    let stats = RunStats {
        pairs: store_pairs_by_pronoun(&store),
        ..RunStats::default()
    };
    let cfg = store.config();
    let seed = store.pairs().iter().filter(|p| p.source == Source::Seed).count();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "r = {}, max_len = {}, phrasal_merge = {}, case2_order = {:?}",
        cfg.r, cfg.max_len, cfg.phrasal_merge, cfg.case2_order
    );
    let _ = writeln!(
        out,
        "{} pairs ({} seed, {} taught), {} distinct MDs",
        store.len(),
        seed,
        store.len() - seed,
        store.md_groups().count()
    );
    let table = stats.to_string();
    for l in table.lines().take(2) {
        let _ = writeln!(out, "{l}");
    }
    Ok(out)
}
