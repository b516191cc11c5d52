//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod common;

use std::sync::Mutex;
use std::time::{Duration, Instant};

use common::*;
use cubecore::cores::{core_circuits, is_petersen_core, triples_with_value, CoreDecomposition};
use cubecore::families::{core_census, double_flower_j7, flower_snark, goldberg_snark, petersen, random_simple_cubic, theta};
use cubecore::graphcore::{
    girth, is_bridgeless, parse_edge_list, parse_graph6, write_edge_list, write_graph6, EdgeSet, Graph,
};
use cubecore::harness::{corpus_run, CorpusItem, RecordResult, RunConfig, Task, VerifyOptions};
use cubecore::invariants::{
    gamma2, invariant_report, mu, oddness, perfect_matching_list, Bounded, ReportOptions,
    SearchOptions,
};
use cubecore::matchings::{count_perfect_matchings, is_3_edge_colorable};

/// Every matching list built while checking criteria 1-7, for criterion 8.
static BUILT: Mutex<Vec<(Graph, Vec<EdgeSet>)>> = Mutex::new(Vec::new());

fn keep(g: &Graph, list: &[EdgeSet]) {
    BUILT.lock().unwrap().push((g.clone(), list.to_vec()));
}

fn decompose(g: &Graph, t: &[EdgeSet]) -> CoreDecomposition {
    keep(g, t);
    CoreDecomposition::new(g, [t[0].clone(), t[1].clone(), t[2].clone()]).unwrap()
}

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn exact(b: Bounded) -> Option<usize> {
    b.exact()
}

fn c1_petersen_battery() -> Check {
    let p = petersen();
    let r = invariant_report(&p, &ReportOptions::all()).map_err(|e| e.to_string())?;
    for w in [&r.witnesses.mu2, &r.witnesses.mu3, &r.witnesses.mu4] {
        keep(&p, w.as_ref().unwrap());
    }
    let got = (
        girth(&p),
        count_perfect_matchings(&p),
        r.gamma2,
        r.mu2.and_then(exact),
        r.mu3.and_then(exact),
        r.mu4.and_then(exact),
        r.oddness,
        r.resistance3,
    );
    let want = (Some(5), 6, 1, Some(6), Some(3), Some(1), 2, Some(2));
    ensure(got == want, format!("got {got:?}"))?;
    Ok("girth 5, 6 PMs, gamma2 1, mu2 6, mu3 3, mu4 1, oddness 2, r3 2".into())
}

fn c2_petersen_cores() -> Check {
    let p = petersen();
    let list = perfect_matching_list(&p, 100).unwrap();
    let mu3 = mu(&p, 3, SearchOptions::default()).unwrap().value.exact().unwrap();
    let odd = oddness(&p).unwrap().0;
    ensure(3 * odd == 2 * mu3, "oddness is not 2/3 mu3")?;
    ensure(odd == 2 * gamma2(&p).unwrap().0, "oddness != 2 gamma2")?;
    let triples = triples_with_value(&list, mu3, usize::MAX);
    for [i, j, l] in &triples {
        let d = decompose(&p, &[list[*i].clone(), list[*j].clone(), list[*l].clone()]);
        is_petersen_core(&d).map_err(|v| format!("triple {i},{j},{l}: {v:?}"))?;
    }
    Ok(format!("{} optimal triples, all Petersen cores", triples.len()))
}

fn flower_check(n: usize) -> Result<Graph, String> {
    let j = flower_snark(n).map_err(|e| e.to_string())?;
    let r = mu(&j, 3, SearchOptions::default()).unwrap();
    keep(&j, &r.witness);
    ensure(r.value == Bounded::Exact(3), format!("mu3(J{n}) = {:?}", r.value))?;
    ensure(oddness(&j).unwrap().0 == 2, format!("oddness(J{n}) != 2"))?;
    Ok(j)
}

fn c3_flowers() -> Check {
    let t = Instant::now();
    flower_check(5)?;
    let t5 = t.elapsed();
    ensure(t5 < Duration::from_secs(10), format!("J5 took {t5:?}"))?;
    let j7 = flower_check(7)?;
    ensure(girth(&j7) == Some(6), "girth(J7) != 6")?;
    let list = perfect_matching_list(&j7, usize::MAX).unwrap();
    let triples = triples_with_value(&list, 3, usize::MAX);
    let six = triples
        .iter()
        .filter(|[i, j, l]| {
            let d = decompose(&j7, &[list[*i].clone(), list[*j].clone(), list[*l].clone()]);
            core_circuits(&d) == Some(vec![6])
        })
        .count();
    ensure(six > 0, "no optimal core of J7 is a 6-circuit")?;
    Ok(format!("J5 {t5:.2?}; J7 girth 6, {six}/{} optimal cores are 6-circuits", triples.len()))
}

fn c4_goldberg() -> Check {
    let g = goldberg_snark(5).map_err(|e| e.to_string())?;
    ensure(g.n() == 40, "order")?;
    ensure(is_bridgeless(&g) && g.is_cubic() && !is_3_edge_colorable(&g), "not a snark")?;
    let r = mu(&g, 3, SearchOptions::default()).unwrap();
    keep(&g, &r.witness);
    ensure(r.value == Bounded::Exact(3), format!("mu3 = {:?}", r.value))?;
    ensure(oddness(&g).unwrap().0 == 2, "oddness != 2")?;
    Ok(format!("order 40, snark, oddness 2, mu3 3 ({} nodes)", r.nodes))
}

fn c5_additivity() -> Check {
    let p = petersen();
    let j5 = flower_snark(5).unwrap();
    let pp = core_junction(&p, &p);
    let r = mu(&pp, 3, SearchOptions::default()).unwrap();
    keep(&pp, &r.witness);
    ensure(r.value == Bounded::Exact(6), format!("P+P: {:?}", r.value))?;
    let pj = core_junction(&p, &j5);
    let s = mu(&pj, 3, SearchOptions::default()).unwrap();
    keep(&pj, &s.witness);
    ensure(s.value.contains(6), format!("P+J5: {:?}", s.value))?;
    Ok(format!("P+P = {:?}, P+J5 = {:?}", r.value, s.value))
}

fn c6_corpus() -> Check {
    let mut items: Vec<CorpusItem> = named_graphs()
        .into_iter()
        .map(|(id, g)| CorpusItem::new(id, g))
        .collect();
    items.extend(random_graphs().into_iter().map(|(id, g)| CorpusItem::new(id, g)));
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let cfg = RunConfig {
        task: Task::Verify(VerifyOptions::default()),
        jobs,
    };
    let (records, summary) = corpus_run(&items, &cfg).map_err(|e| e.to_string())?;
    for (rec, item) in records.iter().zip(&items) {
        match &rec.result {
            RecordResult::Err { error } => return Err(format!("{}: {error}", rec.id)),
            RecordResult::Ok(o) => {
                let g = item.graph.as_ref().unwrap();
                let w = &o.report().witnesses;
                keep(g, w.mu2.as_ref().unwrap());
                keep(g, w.mu3.as_ref().unwrap());
            }
        }
    }
    ensure(summary.errors == 0, "errors")?;
    ensure(summary.non_true.is_empty(), format!("non-true verdicts: {:?}", summary.non_true))?;
    ensure(!summary.any_false(), "false verdict")?;
    Ok(format!(
        "{} graphs ({} snarks), T1..T8 all true",
        summary.graphs, summary.snarks
    ))
}

fn c7_double_j7() -> Check {
    let t = Instant::now();
    let dj = double_flower_j7().map_err(|e| e.to_string())?;
    let g = &dj.graph;
    ensure((g.n(), g.m()) == (54, 81), "order")?;
    let d = decompose(g, &dj.witness);
    ensure(d.k == 5 && core_circuits(&d) == Some(vec![10]), "witness core")?;
    let built = t.elapsed();
    ensure(built < Duration::from_secs(300), format!("construction took {built:?}"))?;
    let r = mu(g, 3, SearchOptions::default()).unwrap();
    keep(g, &r.witness);
    ensure(r.value.upper() <= 5 && r.value.contains(5), format!("mu3 = {:?}", r.value))?;
    let searched = t.elapsed();
    let list = perfect_matching_list(g, usize::MAX).unwrap();
    let census = core_census(g, 5, &list).map_err(|e| e.to_string())?;
    ensure(
        census.shapes.keys().eq(["[10]"].iter()),
        format!("optimal core shapes {:?}", census.shapes),
    )?;
    Ok(format!(
        "witness |E0| = 5 on a 10-circuit ({built:.2?}); default search: {:?} in {searched:.2?}; all {} optimal cores are 10-circuits",
        r.value, census.optimal_triples
    ))
}

fn c8_identities() -> Check {
    let built = BUILT.lock().unwrap();
    for (g, list) in built.iter() {
        let m = g.m();
        let mut cls = vec![0usize; list.len() + 1];
        for e in 0..m {
            cls[list.iter().filter(|s| s.contains(e)).count()] += 1;
        }
        let slots: usize = cls.iter().enumerate().map(|(i, c)| i * c).sum();
        ensure(3 * slots == list.len() * m, "slot count")?;
        if list.len() == 3 {
            ensure(cls[0] == cls[2] + 2 * cls[3], "|E0| = |E2| + 2|E3|")?;
        }
    }
    Ok(format!("{} matching lists rechecked", built.len()))
}

fn c9_formats() -> Check {
    for s in 0..1000u64 {
        let g = random_simple_cubic(4 + 2 * (s as usize % 20), s).unwrap();
        let text = write_graph6(&g).unwrap();
        let back = write_graph6(&parse_graph6(&text).unwrap()).unwrap();
        ensure(back == text, format!("graph6 mismatch at seed {s}"))?;
    }
    let mut multi = vec![theta()];
    for s in 0..50 {
        multi.push(cubecore::families::random_bridgeless_cubic(6, s).unwrap());
    }
    let with_parallel = multi.iter().filter(|g| !g.is_simple()).count();
    for g in &multi {
        ensure(&parse_edge_list(&write_edge_list(g)).unwrap() == g, "edge-list mismatch")?;
    }
    Ok(format!("1000 graph6 round trips; {with_parallel} multigraphs through edge lists"))
}

fn c10_oracle() -> Check {
    let mut checked = 0;
    for (id, g) in named_graphs().into_iter().chain(random_graphs()) {
        if count_perfect_matchings(&g) > 200 {
            continue;
        }
        let pms = perfect_matching_list(&g, 200).unwrap();
        let (v, first) = triple_scan(g.m(), &pms);
        let r = mu(&g, 3, SearchOptions::default()).unwrap();
        ensure(r.value == Bounded::Exact(v), format!("{id}: {:?} vs scan {v}", r.value))?;
        ensure(r.witness_indices.as_deref() == Some(&first[..]), format!("{id}: witness"))?;
        checked += 1;
    }
    Ok(format!("{checked} graphs agree with the pruning-free scan"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 Petersen battery", 1, c1_petersen_battery),
        ("2 Petersen-core equality", 1, c2_petersen_cores),
        ("3 flower snarks", 310, c3_flowers),
        ("4 Goldberg G5 gate", 300, c4_goldberg),
        ("5 2-junction additivity", 120, c5_additivity),
        ("6 theorem suite over corpus", 600, c6_corpus),
        ("7 double-J7", 300, c7_double_j7),
        ("8 slot-count and core identities", 60, c8_identities),
        ("9 format fidelity", 1, c9_formats),
        ("10 oracle equivalence", 60, c10_oracle),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let t = Instant::now();
        let out = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        let out = match out {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("took {took:.2?}, limit {limit} s")),
            o => o,
        };
        match out {
            Ok(msg) => println!("PASS  criterion {name} [{took:.2?}]: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name} [{took:.2?}]: {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
