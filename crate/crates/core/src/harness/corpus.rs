//! Batch runs over many graphs: parallel across graphs, output in input order.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::verify::{verify_theorems, GraphVerification, VerifyOptions, THEOREMS};
use crate::error::{Error, Result};
use crate::graphcore::{parse_edge_list, parse_graph6, Graph};
use crate::invariants::{invariant_report, Bounded, InvariantReport, ReportOptions, Verdict};

/// One input graph, or the reason it could not be read.
#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub id: String,
    pub graph: Result<Graph>,
}

impl CorpusItem {
    pub fn new(id: impl Into<String>, graph: Graph) -> Self {
        Self {
            id: id.into(),
            graph: Ok(graph),
        }
    }
}

/// Splits a corpus file into graphs. An edge-list record is a
/// `graph <n> <m>` header plus its `m` edge lines; every other non-empty,
/// non-comment line is one graph6 string. Ids are `<source>:<line>`.
pub fn read_corpus(text: &str, source: &str) -> Vec<CorpusItem> {
    let mut items = Vec::new();
    let lines: Vec<&str> = text.lines().collect();
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i].trim();
        if line.is_empty() || line.starts_with('#') {
            i += 1;
            continue;
        }
        let id = format!("{source}:{}", i + 1);
        if line.starts_with("graph ") {
            // the header's edge count says where the record ends
            let want = line
                .split_whitespace()
                .nth(2)
                .and_then(|t| t.parse::<usize>().ok())
                .unwrap_or(0);
            let start = i;
            let mut seen = 0;
            i += 1;
            while i < lines.len() && seen < want {
                let l = lines[i].trim();
                if l.starts_with("graph ") {
                    break;
                }
                if !l.is_empty() && !l.starts_with('#') {
                    seen += 1;
                }
                i += 1;
            }
            items.push(CorpusItem {
                id,
                graph: parse_edge_list(&lines[start..i].join("\n")),
            });
        } else {
            items.push(CorpusItem {
                id,
                graph: parse_graph6(line),
            });
            i += 1;
        }
    }
    items
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Invariants(ReportOptions),
    Verify(VerifyOptions),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub task: Task,
    /// Worker threads; at least 1.
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Report(InvariantReport),
    Verified(GraphVerification),
}

impl Outcome {
    pub fn report(&self) -> &InvariantReport {
        match self {
            Outcome::Report(r) => r,
            Outcome::Verified(v) => &v.report,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub id: String,
    #[serde(flatten)]
    pub result: RecordResult,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum RecordResult {
    Ok(Outcome),
    Err { error: String },
}

/// Minimum and maximum of one invariant across the successful records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub min: usize,
    pub max: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub errors: usize,
    pub snarks: usize,
    /// Exact values only; bracketed results are counted separately.
    pub ranges: BTreeMap<&'static str, Range>,
    pub bracketed: usize,
    /// Per theorem: counts of true / false / inconclusive.
    pub verdicts: BTreeMap<&'static str, BTreeMap<&'static str, usize>>,
    /// `(graph id, theorem, verdict)` for every verdict that is not true.
    pub non_true: Vec<(String, &'static str, Verdict)>,
}

impl Summary {
    pub fn any_false(&self) -> bool {
        self.non_true.iter().any(|(_, _, v)| *v == Verdict::False)
    }

    fn widen(&mut self, key: &'static str, v: usize) {
        let r = self.ranges.entry(key).or_insert(Range { min: v, max: v });
        r.min = r.min.min(v);
        r.max = r.max.max(v);
    }

    pub fn of(records: &[Record]) -> Self {
        let mut s = Summary {
            graphs: records.len(),
            ..Default::default()
        };
        for rec in records {
            let out = match &rec.result {
                RecordResult::Err { .. } => {
                    s.errors += 1;
                    continue;
                }
                RecordResult::Ok(o) => o,
            };
            let r = out.report();
            s.snarks += r.is_snark as usize;
            s.widen("n", r.n);
            s.widen("gamma2", r.gamma2);
            s.widen("oddness", r.oddness);
            if let Some(g) = r.girth {
                s.widen("girth", g);
            }
            if let Some(v) = r.resistance3 {
                s.widen("resistance3", v);
            }
            for (key, val) in [("mu2", r.mu2), ("mu3", r.mu3), ("mu4", r.mu4)] {
                match val {
                    Some(Bounded::Exact(v)) => s.widen(key, v),
                    Some(Bounded::Bracket { .. }) => s.bracketed += 1,
                    None => {}
                }
            }
            if let Outcome::Verified(v) = out {
                for t in &v.verdicts {
                    let name = match t.verdict {
                        Verdict::True => "true",
                        Verdict::False => "false",
                        Verdict::Inconclusive => "inconclusive",
                    };
                    *s.verdicts.entry(t.theorem).or_default().entry(name).or_insert(0) += 1;
                    if t.verdict != Verdict::True {
                        s.non_true.push((rec.id.clone(), t.theorem, t.verdict));
                    }
                }
            }
        }
        for t in THEOREMS {
            if s.verdicts.is_empty() {
                break;
            }
            s.verdicts.entry(t).or_default();
        }
        s
    }
}

fn run_one(item: &CorpusItem, task: &Task) -> RecordResult {
    let g = match &item.graph {
        Ok(g) => g,
        Err(e) => return RecordResult::Err { error: e.to_string() },
    };
    let out = match task {
        Task::Invariants(o) => invariant_report(g, o).map(Outcome::Report),
        Task::Verify(o) => verify_theorems(g, &item.id, o).map(Outcome::Verified),
    };
    match out {
        Ok(o) => RecordResult::Ok(o),
        Err(e) => RecordResult::Err { error: e.to_string() },
    }
}

/// Processes every item, one worker per graph; records come back in input
/// order whatever the completion order was.
pub fn corpus_run(items: &[CorpusItem], cfg: &RunConfig) -> Result<(Vec<Record>, Summary)> {
    if cfg.jobs == 0 {
        return Err(Error::Parameter("jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let records: Vec<Record> = pool.install(|| {
        items
            .par_iter()
            .map(|item| Record {
                id: item.id.clone(),
                result: run_one(item, &cfg.task),
            })
            .collect()
    });
    let summary = Summary::of(&records);
    Ok((records, summary))
}

/// One JSON object per record, then the summary as `{"summary": ...}`.
pub fn write_jsonl(out: &mut impl Write, records: &[Record], summary: &Summary) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out)?;
    }
    serde_json::to_writer(&mut *out, &json!({ "summary": summary }))?;
    writeln!(out)
}

fn cell(b: Option<Bounded>) -> String {
    match b {
        None => String::new(),
        Some(Bounded::Exact(v)) => v.to_string(),
        Some(Bounded::Bracket { lower, upper }) => format!("{lower}..{upper}"),
    }
}

pub const CSV_HEADER: &str =
    "id,n,m,girth,is_bridgeless,is_snark,perfect_matchings,gamma2,mu2,mu3,mu4,oddness,resistance3,verdicts,error";

/// Flat projection: witnesses are dropped, brackets print as `lo..hi`, and
/// verdicts as `T1=true;...`.
pub fn write_csv(out: &mut impl Write, records: &[Record]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for rec in records {
        let o = match &rec.result {
            RecordResult::Err { error } => {
                writeln!(out, "{},,,,,,,,,,,,,,\"{}\"", rec.id, error.replace('"', "'"))?;
                continue;
            }
            RecordResult::Ok(o) => o,
        };
        let r = o.report();
        let verdicts = r
            .theorem_verdicts
            .iter()
            .map(|(k, v)| format!("{k}={}", serde_json::to_value(v).expect("enum").as_str().expect("str")))
            .collect::<Vec<_>>()
            .join(";");
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},",
            rec.id,
            r.n,
            r.m,
            r.girth.map(|g| g.to_string()).unwrap_or_default(),
            r.is_bridgeless,
            r.is_snark,
            r.perfect_matchings,
            r.gamma2,
            cell(r.mu2),
            cell(r.mu3),
            cell(r.mu4),
            r.oddness,
            r.resistance3.map(|v| v.to_string()).unwrap_or_default(),
            verdicts
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{k4, petersen, random_bridgeless_cubic};
    use crate::graphcore::{write_edge_list, write_graph6};

    #[test]
    fn reads_mixed_corpus() {
        let text = format!(
            "# corpus\n{}\n{}\nnot-graph6\n",
            write_graph6(&petersen()).unwrap(),
            write_edge_list(&k4()).trim_end()
        );
        let items = read_corpus(&text, "c");
        assert_eq!(items.len(), 3);
        assert_eq!(items[0].id, "c:2");
        assert_eq!(items[1].graph.as_ref().unwrap().n(), 4);
        assert!(items[2].graph.is_err());
    }

    #[test]
    fn errors_are_isolated_and_order_kept() {
        let mut items: Vec<CorpusItem> = (0..12)
            .map(|s| CorpusItem::new(format!("r{s}"), random_bridgeless_cubic(10, s).unwrap()))
            .collect();
        items.insert(3, CorpusItem::new("path", Graph::from_edges(2, [(0, 1)]).unwrap()));
        let cfg = |jobs| RunConfig {
            task: Task::Verify(VerifyOptions::default()),
            jobs,
        };
        let (one, s1) = corpus_run(&items, &cfg(1)).unwrap();
        let (four, s4) = corpus_run(&items, &cfg(4)).unwrap();
        assert_eq!(one, four);
        assert_eq!(s1, s4);
        assert_eq!(s1.errors, 1);
        assert!(matches!(one[3].result, RecordResult::Err { .. }));
        let ids: Vec<&str> = one.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids[..4], ["r0", "r1", "r2", "path"]);
        assert!(!s1.any_false());
    }

    #[test]
    fn jsonl_and_csv() {
        let items = vec![CorpusItem::new("p", petersen())];
        let cfg = RunConfig {
            task: Task::Verify(VerifyOptions::default()),
            jobs: 1,
        };
        let (recs, sum) = corpus_run(&items, &cfg).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &recs, &sum).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        for key in ["id", "n", "m", "girth", "gamma2", "mu2", "mu3", "oddness", "resistance3", "witnesses", "theorem_verdicts", "verdicts"] {
            assert!(first.get(key).is_some(), "missing {key}");
        }
        assert_eq!(first["mu3"], 3);
        assert!(text.lines().nth(1).unwrap().starts_with("{\"summary\""));
        let mut csv = Vec::new();
        write_csv(&mut csv, &recs).unwrap();
        let csv = String::from_utf8(csv).unwrap();
        assert!(csv.lines().nth(1).unwrap().starts_with("p,10,15,5,true,true,6,1,6,3,,2,2,T1=true"));
    }
}
