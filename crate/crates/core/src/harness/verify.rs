//! Theorem checks T1..T8 on one graph.
//!
//! Each check is recomputed from raw matchings and counts here, not read off
//! the assertions inside the search and decomposition code, so a verdict does
//! not depend on the code it audits.

use serde::Serialize;
use serde_json::{json, Value};

use crate::cores::{
    classify_core, find_cyclic_core, is_petersen_core, odd_complement_sum, triples_with_value,
    CoreDecomposition, CyclicCoreSearch,
};
use crate::error::{Error, Result};
use crate::graphcore::{EdgeSet, Graph};
use crate::invariants::{
    invariant_report, perfect_matching_list, Bounded, InvariantReport, ReportOptions,
    SearchOptions, Verdict,
};

pub const THEOREMS: [&str; 8] = ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: &'static str,
    pub graph: String,
    pub verdict: Verdict,
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub search: SearchOptions,
    pub mu4: bool,
    /// Triples examined by the cyclic-core search.
    pub cyclic_core_budget: u64,
    /// Optimal triples are enumerated for the core checks only when the
    /// graph has at most this many perfect matchings.
    pub census_max_matchings: usize,
    /// Cap on the optimal triples checked per graph.
    pub census_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            search: SearchOptions::default(),
            mu4: false,
            cyclic_core_budget: 50_000_000,
            census_max_matchings: 20_000,
            census_limit: 50_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphVerification {
    #[serde(flatten)]
    pub report: InvariantReport,
    pub verdicts: Vec<TheoremVerdict>,
}

impl GraphVerification {
    pub fn any_false(&self) -> bool {
        self.verdicts.iter().any(|v| v.verdict == Verdict::False)
    }

    pub fn verdict(&self, theorem: &str) -> Option<&TheoremVerdict> {
        self.verdicts.iter().find(|v| v.theorem == theorem)
    }
}

fn from_bool(b: bool) -> Verdict {
    if b {
        Verdict::True
    } else {
        Verdict::False
    }
}

/// Three-valued `pred(mu)` over every value the bracket allows, for a
/// predicate monotone in `mu`.
fn over_bracket(b: Bounded, pred: impl Fn(usize) -> bool) -> Verdict {
    match (pred(b.lower()), pred(b.upper())) {
        (true, true) => Verdict::True,
        (false, false) => Verdict::False,
        _ => Verdict::Inconclusive,
    }
}

/// Uncovered, doubly and triply covered counts from the raw matchings.
fn recount(m: usize, triple: &[EdgeSet]) -> [usize; 4] {
    let mut c = [0; 4];
    for e in 0..m {
        c[triple.iter().filter(|t| t.contains(e)).count()] += 1;
    }
    c
}

/// Computes the invariants and all eight verdicts for `g`.
pub fn verify_theorems(g: &Graph, id: &str, opts: &VerifyOptions) -> Result<GraphVerification> {
    check_preconditions(g)?;
    let mut mu = vec![2, 3];
    if opts.mu4 {
        mu.push(4);
    }
    let ropts = ReportOptions {
        mu,
        resistance: true,
        search: opts.search,
    };
    let mut report = invariant_report(g, &ropts)?;
    let mu3 = report.mu3.expect("requested");
    let w = report.witnesses.mu3.clone().expect("requested");
    let witness = CoreDecomposition::new(g, [w[0].clone(), w[1].clone(), w[2].clone()])?;

    // optimal cores, when the graph is small enough to list them
    let mut optimal: Vec<CoreDecomposition> = Vec::new();
    let mut census_complete = false;
    if let Some(v) = mu3.exact() {
        if report.perfect_matchings <= opts.census_max_matchings {
            let list = perfect_matching_list(g, opts.census_max_matchings).expect("within cap");
            let triples = triples_with_value(&list, v, opts.census_limit);
            census_complete = triples.len() < opts.census_limit;
            for [i, j, l] in triples {
                optimal.push(CoreDecomposition::new(
                    g,
                    [list[i].clone(), list[j].clone(), list[l].clone()],
                )?);
            }
        }
    }
    if optimal.is_empty() {
        optimal.push(witness.clone());
    }

    let cyclic = if classify_core(&witness).cyclic {
        CyclicCoreSearch::Found {
            indices: [0; 3],
            decomposition: Box::new(witness.clone()),
        }
    } else {
        find_cyclic_core(g, opts.cyclic_core_budget)?
    };

    let mut decomps: Vec<&CoreDecomposition> = optimal.iter().collect();
    if let CyclicCoreSearch::Found { decomposition, .. } = &cyclic {
        decomps.push(decomposition);
    }

    let verdicts = vec![
        t1(&report, id),
        t2(&report, &witness, id),
        t3(g, &decomps, &optimal, mu3, id),
        t4(&decomps, id),
        t5(&report, &optimal, census_complete, id),
        t6(&report, id),
        t7(&report, id),
        t8(&cyclic, id),
    ];
    for v in &verdicts {
        report.theorem_verdicts.insert(v.theorem.to_string(), v.verdict);
    }
    Ok(GraphVerification { report, verdicts })
}

/// The five characterisations of 3-edge-colourability agree.
fn t1(r: &InvariantReport, id: &str) -> TheoremVerdict {
    let colorable = r.is_3_edge_colorable();
    let mu3 = r.mu3.expect("requested");
    let r3 = r.resistance3.expect("requested");
    let mu3_zero = match mu3 {
        Bounded::Exact(v) => Some(v == 0),
        Bounded::Bracket { lower, .. } if lower > 0 => Some(false),
        Bounded::Bracket { .. } => None,
    };
    let verdict = match mu3_zero {
        None => Verdict::Inconclusive,
        Some(z) => from_bool([r.oddness == 0, r3 == 0, r.gamma2 == 0, z].iter().all(|&s| s == colorable)),
    };
    TheoremVerdict {
        theorem: "T1",
        graph: id.into(),
        verdict,
        details: json!({
            "colorable": colorable,
            "oddness": r.oddness,
            "resistance3": r3,
            "gamma2": r.gamma2,
            "mu3": mu3,
        }),
    }
}

/// On snarks, `omega <= 2 gamma_2 <= mu_3 - 1`, and `3 gamma_2 <= mu_3` when
/// the optimal witness core is cyclic.
fn t2(r: &InvariantReport, witness: &CoreDecomposition, id: &str) -> TheoremVerdict {
    let mu3 = r.mu3.expect("requested");
    let cyclic = witness.e3.is_empty();
    let verdict = if !r.is_snark {
        Verdict::True
    } else if r.oddness > 2 * r.gamma2 {
        Verdict::False
    } else {
        let chain = over_bracket(mu3, |mu| 2 * r.gamma2 < mu);
        // a bracket's witness is not known to be optimal
        let second = if let (true, Some(mu)) = (cyclic, mu3.exact()) {
            from_bool(3 * r.gamma2 <= mu)
        } else {
            Verdict::True
        };
        match (chain, second) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Inconclusive,
        }
    };
    TheoremVerdict {
        theorem: "T2",
        graph: id.into(),
        verdict,
        details: json!({
            "snark": r.is_snark,
            "oddness": r.oddness,
            "gamma2": r.gamma2,
            "mu3": mu3,
            "witness_core_cyclic": cyclic,
            "gamma2_pair": r.witnesses.gamma2,
        }),
    }
}

/// `|E_0| = |E_2| + 2|E_3|` on every decomposition built for this graph, and
/// every optimal core is proper.
fn t3(
    g: &Graph,
    decomps: &[&CoreDecomposition],
    optimal: &[CoreDecomposition],
    mu3: Bounded,
    id: &str,
) -> TheoremVerdict {
    let mut failures = Vec::new();
    for d in decomps {
        let [e0, _, e2, e3] = recount(g.m(), &d.triple);
        if e0 != e2 + 2 * e3 {
            failures.push(json!({"triple": d.triple, "e0": e0, "e2": e2, "e3": e3}));
        }
    }
    let improper: Vec<&CoreDecomposition> = if mu3.exact().is_some() {
        optimal.iter().filter(|d| !classify_core(d).proper).collect()
    } else {
        Vec::new()
    };
    for d in &improper {
        failures.push(json!({"improper_core": d.triple}));
    }
    TheoremVerdict {
        theorem: "T3",
        graph: id.into(),
        verdict: from_bool(failures.is_empty()),
        details: json!({"checked": decomps.len(), "failures": failures}),
    }
}

/// Odd circuits of the three complementary 2-factors sum to at most `2k`,
/// and equality forces a Petersen core.
fn t4(decomps: &[&CoreDecomposition], id: &str) -> TheoremVerdict {
    let mut failures = Vec::new();
    let mut equalities = 0;
    for d in decomps {
        let (each, sum) = odd_complement_sum(d);
        let k = recount(d.host.m(), &d.triple)[0];
        if sum > 2 * k {
            failures.push(json!({"triple": d.triple, "odd": each, "k": k}));
        } else if sum == 2 * k {
            equalities += 1;
            if let Err(v) = is_petersen_core(d) {
                failures.push(json!({"triple": d.triple, "odd": each, "k": k, "violation": v}));
            }
        }
    }
    TheoremVerdict {
        theorem: "T4",
        graph: id.into(),
        verdict: from_bool(failures.is_empty()),
        details: json!({"checked": decomps.len(), "equalities": equalities, "failures": failures}),
    }
}

/// `3 omega <= 2 mu_3`; at equality `omega = 2 gamma_2` and every optimal
/// core is a Petersen core.
fn t5(r: &InvariantReport, optimal: &[CoreDecomposition], complete: bool, id: &str) -> TheoremVerdict {
    let mu3 = r.mu3.expect("requested");
    let mut details = json!({"oddness": r.oddness, "mu3": mu3, "gamma2": r.gamma2});
    let verdict = match mu3 {
        Bounded::Exact(mu) => {
            if 3 * r.oddness > 2 * mu {
                Verdict::False
            } else if 3 * r.oddness < 2 * mu {
                Verdict::True
            } else {
                let bad: Vec<_> = optimal
                    .iter()
                    .filter_map(|d| is_petersen_core(d).err().map(|v| json!({"triple": d.triple, "violation": v})))
                    .collect();
                details["equality"] = json!(true);
                details["optimal_cores_checked"] = json!(optimal.len());
                details["census_complete"] = json!(complete);
                if r.oddness != 2 * r.gamma2 || !bad.is_empty() {
                    details["failures"] = json!(bad);
                    Verdict::False
                } else if complete {
                    Verdict::True
                } else {
                    Verdict::Inconclusive
                }
            }
        }
        Bounded::Bracket { lower, upper } => {
            if 3 * r.oddness > 2 * upper {
                Verdict::False
            } else if 3 * r.oddness < 2 * lower {
                Verdict::True
            } else {
                Verdict::Inconclusive
            }
        }
    };
    TheoremVerdict {
        theorem: "T5",
        graph: id.into(),
        verdict,
        details,
    }
}

/// On snarks, `girth <= 2 mu_3`.
fn t6(r: &InvariantReport, id: &str) -> TheoremVerdict {
    let mu3 = r.mu3.expect("requested");
    let verdict = match (r.is_snark, r.girth) {
        (false, _) | (true, None) => Verdict::True,
        (true, Some(girth)) => over_bracket(mu3, |mu| girth <= 2 * mu),
    };
    TheoremVerdict {
        theorem: "T6",
        graph: id.into(),
        verdict,
        details: json!({"snark": r.is_snark, "girth": r.girth, "mu3": mu3}),
    }
}

/// On snarks, `mu_3 >= 3`. A bracket's lower end already assumes this, so
/// only an exact value can confirm it.
fn t7(r: &InvariantReport, id: &str) -> TheoremVerdict {
    let mu3 = r.mu3.expect("requested");
    let verdict = match (r.is_snark, mu3) {
        (false, _) => Verdict::True,
        (true, Bounded::Exact(v)) => from_bool(v >= 3),
        (true, Bounded::Bracket { upper, .. }) if upper < 3 => Verdict::False,
        (true, Bounded::Bracket { .. }) => Verdict::Inconclusive,
    };
    TheoremVerdict {
        theorem: "T7",
        graph: id.into(),
        verdict,
        details: json!({"snark": r.is_snark, "mu3": mu3}),
    }
}

/// A cyclic core exists (found within the budget).
fn t8(search: &CyclicCoreSearch, id: &str) -> TheoremVerdict {
    let (verdict, details) = match search {
        CyclicCoreSearch::Found { decomposition, .. } => (
            Verdict::True,
            json!({"triple": decomposition.triple, "k": decomposition.k}),
        ),
        CyclicCoreSearch::NoneExists => (Verdict::False, json!({"searched": "all triples"})),
        CyclicCoreSearch::Unknown => (Verdict::Inconclusive, json!({"searched": "budget exhausted"})),
    };
    TheoremVerdict {
        theorem: "T8",
        graph: id.into(),
        verdict,
        details,
    }
}

/// Rejects graphs the theorems do not speak about.
pub fn check_preconditions(g: &Graph) -> Result<()> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if !crate::graphcore::is_bridgeless(g) {
        return Err(Error::Parameter("theorem checks need a bridgeless graph".into()));
    }
    Ok(())
}
