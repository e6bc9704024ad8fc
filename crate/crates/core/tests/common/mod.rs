#![allow(dead_code)]

use std::path::PathBuf;

use metaqa_core::{learn_pair, EngineConfig, Msdip, Source, TaggedSentence, TrainingPair};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

#[derive(serde::Deserialize)]
pub struct Scenario {
    pub pairs: Vec<TrainingPair>,
    pub input: TaggedSentence,
}

pub fn scenario(name: &str) -> Scenario {
    serde_json::from_str(&read(name)).unwrap()
}

pub fn store_from(pairs: &[TrainingPair], cfg: EngineConfig) -> Msdip {
    let mut store = Msdip::new(cfg.clone());
    for p in pairs {
        let learned = learn_pair(&p.decl, &p.interrogatives, &cfg, None, Source::Seed).unwrap();
        for pair in learned.pairs {
            store.insert(pair).unwrap();
        }
    }
    store
}

pub fn golden_store() -> Msdip {
    let pairs: Vec<TrainingPair> = serde_json::from_str(&read("golden/seed_pairs.json")).unwrap();
    store_from(&pairs, EngineConfig::default())
}

pub fn golden_inputs() -> Vec<TaggedSentence> {
    read("golden/input.jsonl")
        .lines()
        .map(|l| TaggedSentence::from_json(l).unwrap())
        .collect()
}
