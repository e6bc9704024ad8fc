use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use metaqa::commands::{self, StoreOptions};
use metaqa::service::{self, Service};
use metaqa_core::{Case2Order, PhrasalLexicon};

#[derive(Parser)]
#[command(name = "metaqa", version, about = "Learn question patterns and generate question-answer pairs")]
struct Cli {
    /// Phrasal-verb word list used to pre-join verbs and particles.
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    AfterThenBefore,
    BeforeThenAfter,
}

#[derive(Subcommand)]
enum Command {
    /// Learn pattern pairs from a JSON array of {decl, interrogatives}.
    Learn {
        #[arg(long)]
        pairs: PathBuf,
        #[arg(long)]
        msdip: PathBuf,
        /// Maximum occurrences of one SR tag (new stores only).
        #[arg(long)]
        r: Option<usize>,
        /// Phrasal-aware merging on/off (new stores only).
        #[arg(long)]
        phrasal_merge: Option<bool>,
        /// Order of input units added around the match (new stores only).
        #[arg(long, value_enum)]
        case2_order: Option<Order>,
    },
    /// Generate QAPs for a JSON-lines file of tagged sentences.
    Generate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        msdip: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        teach_queue: Option<PathBuf>,
    },
    /// Print ranked match candidates per clause.
    Match {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        msdip: PathBuf,
    },
    /// Run the HTTP teach-loop service.
    Serve {
        #[arg(long)]
        msdip: PathBuf,
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: String,
        #[arg(long)]
        oracle: String,
        /// File the teach queue is kept in across restarts.
        #[arg(long)]
        queue: Option<PathBuf>,
    },
    /// Summarize a store.
    Stats {
        #[arg(long)]
        msdip: PathBuf,
    },
}

fn run(cli: Cli) -> Result<()> {
    let lexicon = cli
        .lexicon
        .as_deref()
        .map(|p| PhrasalLexicon::load(p).with_context(|| format!("cannot read lexicon {}", p.display())))
        .transpose()?;
    match cli.command {
        Command::Learn {
            pairs,
            msdip,
            r,
            phrasal_merge,
            case2_order,
        } => {
            let opts = StoreOptions {
                r,
                phrasal_merge,
                case2_order: case2_order.map(|o| match o {
                    Order::AfterThenBefore => Case2Order::AfterThenBefore,
                    Order::BeforeThenAfter => Case2Order::BeforeThenAfter,
                }),
            };
            let s = commands::cmd_learn(&pairs, &msdip, &opts, lexicon.as_ref())?;
            for d in &s.diagnostics {
                eprintln!("{d}");
            }
            println!("inserted {}, duplicates {}, store size {}", s.inserted, s.duplicates, s.total);
        }
        Command::Generate {
            input,
            msdip,
            out,
            teach_queue,
        } => {
            let run = commands::cmd_generate(&input, &msdip, &out, teach_queue.as_deref(), lexicon.as_ref())?;
            for d in &run.diagnostics {
                eprintln!("{d}");
            }
            println!("{}", run.stats);
        }
        Command::Match { input, msdip } => {
            print!("{}", commands::cmd_match(&input, &msdip, lexicon.as_ref())?);
        }
        Command::Serve {
            msdip,
            bind,
            oracle,
            queue,
        } => {
            let store = if msdip.exists() {
                commands::load_store(&msdip)?
            } else {
                metaqa_core::Msdip::new(Default::default())
            };
            let svc = Arc::new(Service::new(store, msdip, queue, &oracle, lexicon)?);
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(async {
                let listener = tokio::net::TcpListener::bind(&bind)
                    .await
                    .with_context(|| format!("cannot bind {bind}"))?;
                log::info!("listening on {}", listener.local_addr()?);
                service::serve(svc, listener).await?;
                Ok::<_, anyhow::Error>(())
            })?;
        }
        Command::Stats { msdip } => print!("{}", commands::cmd_stats(&msdip)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
