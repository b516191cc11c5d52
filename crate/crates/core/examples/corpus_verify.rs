//! Random bridgeless cubic graphs through the theorem checks, in parallel,
//! written as JSON lines with a summary footer.
//!
//! ```bash
//! cargo run --release --example corpus_verify -- 50 4
//! ```

use std::io;

use cubecore::families::random_bridgeless_cubic;
use cubecore::harness::{corpus_run, write_jsonl, CorpusItem, RunConfig, Task, VerifyOptions};

fn main() -> cubecore::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer"));
    let count = args.next().unwrap_or(20);
    let jobs = args.next().unwrap_or(2);

    let items: Vec<CorpusItem> = (0..count as u64)
        .map(|s| {
            let n = 10 + 2 * (s as usize % 6);
            CorpusItem {
                id: format!("random-{n}-{s}"),
                graph: random_bridgeless_cubic(n, s),
            }
        })
        .collect();
    let cfg = RunConfig {
        task: Task::Verify(VerifyOptions::default()),
        jobs,
    };
    let (records, summary) = corpus_run(&items, &cfg)?;
    write_jsonl(&mut io::stdout().lock(), &records, &summary).expect("stdout");
    eprintln!("{} graphs, {} snarks, any false: {}", summary.graphs, summary.snarks, summary.any_false());
    Ok(())
}
