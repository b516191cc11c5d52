//! Exact 1-factor cover invariants: `mu_k` for `k = 2, 3, 4`, `gamma_2`,
//! oddness and resistance.
//!
//! Every search runs over the list of perfect matchings in enumeration order.
//! Optimal witnesses are the lexicographically least index tuples: candidates
//! replace the incumbent only on strict improvement, and pruning only discards
//! subtrees whose lower bound reaches the incumbent, so the first optimum met
//! in lexicographic order is kept.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphcore::{girth, is_bridgeless, EdgeSet, Graph};
use crate::matchings::{
    color_classes, enumerate_perfect_matchings, odd_circuits_of_complement, three_edge_coloring,
};

/// Default cap on the number of perfect matchings kept in memory.
pub const DEFAULT_LIST_CAP: usize = 1 << 20;
/// Default node budget for one `mu_k` search.
pub const DEFAULT_NODE_BUDGET: u64 = 4_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub node_budget: u64,
    pub list_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
            list_cap: DEFAULT_LIST_CAP,
        }
    }
}

/// An exact value, or an interval known to contain it when a search ran out
/// of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bounded {
    Exact(usize),
    Bracket { lower: usize, upper: usize },
}

impl Bounded {
    pub fn exact(self) -> Option<usize> {
        match self {
            Bounded::Exact(v) => Some(v),
            Bounded::Bracket { .. } => None,
        }
    }

    pub fn lower(self) -> usize {
        match self {
            Bounded::Exact(v) => v,
            Bounded::Bracket { lower, .. } => lower,
        }
    }

    pub fn upper(self) -> usize {
        match self {
            Bounded::Exact(v) => v,
            Bounded::Bracket { upper, .. } => upper,
        }
    }

    pub fn contains(self, v: usize) -> bool {
        self.lower() <= v && v <= self.upper()
    }
}

/// Exact values serialize as integers, brackets as `{"lower": a, "upper": b}`.
impl Serialize for Bounded {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Bracket {
            lower: usize,
            upper: usize,
        }
        match *self {
            Bounded::Exact(v) => s.serialize_u64(v as u64),
            Bounded::Bracket { lower, upper } => Bracket { lower, upper }.serialize(s),
        }
    }
}

fn require_cubic(g: &Graph) -> Result<()> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    Ok(())
}

/// All perfect matchings in enumeration order, or `None` when there are more
/// than `cap`.
pub fn perfect_matching_list(g: &Graph, cap: usize) -> Option<Vec<EdgeSet>> {
    let mut out = Vec::new();
    for pm in enumerate_perfect_matchings(g) {
        if out.len() == cap {
            return None;
        }
        out.push(pm);
    }
    Some(out)
}

/// `E_0, ..., E_k`: edges lying in exactly `i` members of `list`.
pub fn multiplicity_classes(m: usize, list: &[EdgeSet]) -> Vec<EdgeSet> {
    let mut classes = vec![EdgeSet::new(m); list.len() + 1];
    for e in 0..m {
        let c = list.iter().filter(|pm| pm.contains(e)).count();
        classes[c].insert(e);
    }
    classes
}

/// `sum_i i * |E_i| = k * m / 3` for a list of `k` perfect matchings of a
/// cubic graph (each perfect matching has `m / 3` edges).
pub fn slot_identity_holds(g: &Graph, list: &[EdgeSet]) -> bool {
    let classes = multiplicity_classes(g.m(), list);
    let slots: usize = classes.iter().enumerate().map(|(i, c)| i * c.len()).sum();
    3 * slots == list.len() * g.m()
}

/// Oddness with a witness perfect matching whose complementary 2-factor has
/// the minimum number of odd circuits.
pub fn oddness(g: &Graph) -> Result<(usize, EdgeSet)> {
    require_cubic(g)?;
    oddness_over(g, enumerate_perfect_matchings(g), 0)
}

fn oddness_over(
    g: &Graph,
    pms: impl IntoIterator<Item = EdgeSet>,
    floor: usize,
) -> Result<(usize, EdgeSet)> {
    let mut best: Option<(usize, EdgeSet)> = None;
    for pm in pms {
        let odd = odd_circuits_of_complement(g, &pm);
        if best.as_ref().is_none_or(|(b, _)| odd < *b) {
            let stop = odd <= floor;
            best = Some((odd, pm));
            if stop {
                break;
            }
        }
    }
    best.ok_or(Error::NoPerfectMatching)
}

/// `gamma_2`: the minimum `|M1 & M2|` over pairs of perfect matchings, with
/// the witness pair.
pub fn gamma2(g: &Graph) -> Result<(usize, [EdgeSet; 2])> {
    require_cubic(g)?;
    let list = perfect_matching_list(g, usize::MAX).unwrap_or_default();
    gamma2_over(&list, 0)
}

fn gamma2_over(list: &[EdgeSet], floor: usize) -> Result<(usize, [EdgeSet; 2])> {
    let first = list.first().ok_or(Error::NoPerfectMatching)?;
    let mut best = (first.len(), 0, 0);
    'outer: for i in 0..list.len() {
        for j in i + 1..list.len() {
            let v = list[i].intersection_len(&list[j]);
            if v < best.0 {
                best = (v, i, j);
                if v <= floor {
                    break 'outer;
                }
            }
        }
    }
    Ok((best.0, [list[best.1].clone(), list[best.2].clone()]))
}

/// Outcome of a `mu_k` search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuResult {
    pub k: usize,
    pub value: Bounded,
    /// The `k` perfect matchings attaining `value.upper()`.
    pub witness: Vec<EdgeSet>,
    /// Positions of the witness in enumeration order, when the matching list
    /// was materialized.
    pub witness_indices: Option<Vec<usize>>,
    pub nodes: u64,
}

struct Incumbent {
    value: usize,
    tuple: Vec<usize>,
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    #[inline]
    fn spend(&mut self, n: u64) -> bool {
        self.used += n;
        self.used <= self.limit
    }
}

/// Flat word storage for fast intersection counts.
struct Packed {
    words: Vec<u64>,
    width: usize,
}

impl Packed {
    fn new(list: &[EdgeSet]) -> Self {
        let width = list.first().map_or(0, |s| s.words().len());
        let mut words = Vec::with_capacity(width * list.len());
        for s in list {
            words.extend_from_slice(s.words());
        }
        Self { words, width }
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.width..(i + 1) * self.width]
    }

    #[inline]
    fn inter(&self, a: usize, b: usize) -> usize {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    #[inline]
    fn inter3(&self, a: usize, b: usize, c: usize) -> usize {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .zip(self.row(c))
            .map(|((x, y), z)| (x & y & z).count_ones() as usize)
            .sum()
    }
}

enum Stop {
    Complete,
    Budget,
}

/// Triple search. `|E_0| = |ij| + |il| + |jl| - |ijl|` for perfect matchings
/// of a cubic graph, so each pairwise intersection is a lower bound on
/// `|E_0|`; this subsumes the union bound `m - |U| - (k-j) m/3`, which at two
/// chosen matchings equals `|ij|`.
fn mu3_list(p: &Packed, count: usize, inc: &mut Incumbent, floor: usize, budget: &mut Budget) -> Stop {
    let mut compat: Vec<(usize, usize)> = Vec::with_capacity(count);
    for i in 0..count {
        if inc.value <= floor {
            return Stop::Complete;
        }
        compat.clear();
        for l in i..count {
            let il = p.inter(i, l);
            if il < inc.value {
                compat.push((l, il));
            }
        }
        if !budget.spend((count - i) as u64) {
            return Stop::Budget;
        }
        for a in 0..compat.len() {
            let (j, ij) = compat[a];
            if ij >= inc.value {
                continue;
            }
            if !budget.spend(1 + (compat.len() - a) as u64) {
                return Stop::Budget;
            }
            for &(l, il) in &compat[a..] {
                if il >= inc.value {
                    continue;
                }
                let jl = p.inter(j, l);
                if jl >= inc.value {
                    continue;
                }
                let value = ij + il + jl - p.inter3(i, j, l);
                if value < inc.value {
                    inc.value = value;
                    inc.tuple = vec![i, j, l];
                    if value <= floor {
                        return Stop::Complete;
                    }
                }
            }
        }
    }
    Stop::Complete
}

/// Generic non-decreasing tuple search with the union bound.
fn mu_generic_list(
    list: &[EdgeSet],
    k: usize,
    m: usize,
    half: usize,
    inc: &mut Incumbent,
    floor: usize,
    budget: &mut Budget,
) -> Stop {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        list: &[EdgeSet],
        k: usize,
        m: usize,
        half: usize,
        union: &EdgeSet,
        tuple: &mut Vec<usize>,
        inc: &mut Incumbent,
        floor: usize,
        budget: &mut Budget,
    ) -> Option<Stop> {
        let j = tuple.len();
        let covered = union.len();
        if j == k {
            let value = m - covered;
            if value < inc.value {
                inc.value = value;
                inc.tuple = tuple.clone();
                if value <= floor {
                    return Some(Stop::Complete);
                }
            }
            return None;
        }
        let start = tuple.last().copied().unwrap_or(0);
        for idx in start..list.len() {
            if !budget.spend(1) {
                return Some(Stop::Budget);
            }
            let next = union.union(&list[idx]);
            let lb = m.saturating_sub(next.len() + (k - j - 1) * half);
            if lb >= inc.value {
                continue;
            }
            tuple.push(idx);
            let r = rec(list, k, m, half, &next, tuple, inc, floor, budget);
            tuple.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    let mut tuple = Vec::with_capacity(k);
    rec(list, k, m, half, &EdgeSet::new(m), &mut tuple, inc, floor, budget).unwrap_or(Stop::Complete)
}

/// Streaming fallback for graphs with more perfect matchings than the list
/// cap: each level re-enumerates the matchings from its start position.
fn mu_generic_stream(
    g: &Graph,
    k: usize,
    inc: &mut Incumbent,
    witness: &mut Vec<EdgeSet>,
    floor: usize,
    budget: &mut Budget,
) -> Stop {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        k: usize,
        union: &EdgeSet,
        chosen: &mut Vec<(usize, EdgeSet)>,
        inc: &mut Incumbent,
        witness: &mut Vec<EdgeSet>,
        floor: usize,
        budget: &mut Budget,
    ) -> Option<Stop> {
        let (m, half) = (g.m(), g.n() / 2);
        let j = chosen.len();
        if j == k {
            let value = m - union.len();
            if value < inc.value {
                inc.value = value;
                inc.tuple = chosen.iter().map(|c| c.0).collect();
                *witness = chosen.iter().map(|c| c.1.clone()).collect();
                if value <= floor {
                    return Some(Stop::Complete);
                }
            }
            return None;
        }
        let start = chosen.last().map_or(0, |c| c.0);
        for (idx, pm) in enumerate_perfect_matchings(g).enumerate().skip(start) {
            if !budget.spend(1) {
                return Some(Stop::Budget);
            }
            if k == 3 && chosen.iter().any(|c| c.1.intersection_len(&pm) >= inc.value) {
                continue;
            }
            let next = union.union(&pm);
            if m.saturating_sub(next.len() + (k - j - 1) * half) >= inc.value {
                continue;
            }
            chosen.push((idx, pm));
            let r = rec(g, k, &next, chosen, inc, witness, floor, budget);
            chosen.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    let mut chosen = Vec::with_capacity(k);
    rec(g, k, &EdgeSet::new(g.m()), &mut chosen, inc, witness, floor, budget)
        .unwrap_or(Stop::Complete)
}

/// Lower bound used for early exit and for brackets: `mu_k` can never drop
/// below `m - k * m/3`, and `mu_3 >= 3` once the graph is known not to be
/// 3-edge-colourable. For `k = 2` the value is `m/3 + gamma_2`, and
/// `gamma_2 >= 1` exactly when the graph is not 3-edge-colourable.
fn mu_floor(g: &Graph, k: usize, colorable: bool) -> usize {
    let half = g.n() / 2;
    let base = g.m().saturating_sub(k * half);
    match (k, colorable) {
        (3, false) => base.max(3),
        (2, false) => half + 1,
        _ => base,
    }
}

#[derive(Clone, Debug, Default)]
pub struct MuRequest {
    pub options: SearchOptions,
    /// A known list of `k` perfect matchings; the search then only looks for
    /// tuples at least as good, falling back to this witness on budget
    /// exhaustion.
    pub hint: Option<Vec<EdgeSet>>,
    /// Skip the 3-edge-colourability test when the caller already knows.
    pub colorable: Option<bool>,
}

/// `mu_k(g)`: the minimum number of edges left uncovered by a list of `k`
/// perfect matchings, over all such lists (repetition allowed).
pub fn mu(g: &Graph, k: usize, options: SearchOptions) -> Result<MuResult> {
    mu_with(g, k, &MuRequest { options, ..Default::default() })
}

pub fn mu_with(g: &Graph, k: usize, req: &MuRequest) -> Result<MuResult> {
    require_cubic(g)?;
    if !(2..=4).contains(&k) {
        return Err(Error::Parameter(format!("mu_k is supported for k in 2..=4, got {k}")));
    }
    let colorable = req
        .colorable
        .unwrap_or_else(|| three_edge_coloring(g, None).is_some());
    let list = perfect_matching_list(g, req.options.list_cap);
    mu_from_list(g, k, list.as_deref(), colorable, req)
}

pub(crate) fn mu_from_list(
    g: &Graph,
    k: usize,
    list: Option<&[EdgeSet]>,
    colorable: bool,
    req: &MuRequest,
) -> Result<MuResult> {
    let (m, half) = (g.m(), g.n() / 2);
    let floor = mu_floor(g, k, colorable);
    let mut budget = Budget {
        used: 0,
        limit: req.options.node_budget,
    };
    if let Some(hint) = &req.hint {
        if hint.len() != k {
            return Err(Error::Parameter(format!("hint has {} matchings, expected {k}", hint.len())));
        }
        for pm in hint {
            crate::matchings::Matching::perfect(g, pm.clone())?;
        }
    }
    let hint_value = req
        .hint
        .as_ref()
        .map(|h| multiplicity_classes(m, h)[0].len());

    let (stop, inc, mut witness) = match list {
        Some(list) => {
            if list.is_empty() {
                return Err(Error::NoPerfectMatching);
            }
            // The all-zero tuple is the lexicographically first candidate.
            let mut inc = Incumbent {
                value: m - half,
                tuple: vec![0; k],
            };
            if let Some(hv) = hint_value {
                if hv < inc.value {
                    inc = Incumbent {
                        value: hv + 1,
                        tuple: Vec::new(),
                    };
                }
            }
            let stop = if inc.value <= floor {
                Stop::Complete
            } else if k == 3 {
                mu3_list(&Packed::new(list), list.len(), &mut inc, floor, &mut budget)
            } else {
                mu_generic_list(list, k, m, half, &mut inc, floor, &mut budget)
            };
            let witness: Vec<EdgeSet> = inc.tuple.iter().map(|&i| list[i].clone()).collect();
            (stop, inc, witness)
        }
        None => {
            let mut inc = Incumbent {
                value: usize::MAX,
                tuple: Vec::new(),
            };
            if let Some(hv) = hint_value {
                inc.value = hv + 1;
            }
            let mut witness = Vec::new();
            let stop = mu_generic_stream(g, k, &mut inc, &mut witness, floor, &mut budget);
            (stop, inc, witness)
        }
    };

    // no tuple beat the hint: the hint itself is the incumbent
    let (value, indices) = if inc.tuple.is_empty() {
        let hint = req.hint.as_ref().ok_or(Error::NoPerfectMatching)?;
        witness = hint.clone();
        let idx = list.map(|l| {
            hint.iter()
                .map(|h| l.iter().position(|x| x == h).expect("hint matchings are perfect"))
                .collect()
        });
        (hint_value.expect("hint present"), idx)
    } else {
        (inc.value, list.map(|_| inc.tuple.clone()))
    };
    assert!(
        slot_identity_holds(g, &witness),
        "slot-count identity violated by a mu_{k} witness"
    );
    let value = match stop {
        Stop::Complete => Bounded::Exact(value),
        Stop::Budget => Bounded::Bracket {
            lower: floor,
            upper: value,
        },
    };
    Ok(MuResult {
        k,
        value,
        witness,
        witness_indices: indices,
        nodes: budget.used,
    })
}

/// Resistance `r_3`: the least `t` such that deleting some matching of size
/// `t` leaves a 3-edge-colourable graph. The witness is that matching plus a
/// proper 4-edge-colouring whose colour 3 is exactly the matching.
pub fn resistance3(g: &Graph) -> Result<(usize, EdgeSet, Vec<u8>)> {
    require_cubic(g)?;
    for t in 0..=g.n() / 2 {
        let mut chosen = Vec::with_capacity(t);
        let mut blocked = vec![0u8; g.n()];
        if let Some(found) = resistance_at(g, t, 0, &mut chosen, &mut blocked) {
            return Ok((t, EdgeSet::from_indices(g.m(), chosen_clone(&found.0)), found.1));
        }
    }
    Err(Error::NoPerfectMatching)
}

fn chosen_clone(v: &[usize]) -> Vec<usize> {
    v.to_vec()
}

fn resistance_at(
    g: &Graph,
    t: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    blocked: &mut [u8],
) -> Option<(Vec<usize>, Vec<u8>)> {
    if chosen.len() == t {
        let mut active = g.edge_set();
        for &e in chosen.iter() {
            active.remove(e);
        }
        let col = three_edge_coloring(g, Some(&active))?;
        let colors = col.iter().map(|c| c.unwrap_or(3)).collect();
        return Some((chosen.clone(), colors));
    }
    for e in from..g.m() {
        let (a, b) = g.edge(e);
        if a == b || blocked[a] > 0 || blocked[b] > 0 {
            continue;
        }
        if g.m() - e < t - chosen.len() {
            break;
        }
        blocked[a] += 1;
        blocked[b] += 1;
        chosen.push(e);
        let r = resistance_at(g, t, e + 1, chosen, blocked);
        chosen.pop();
        blocked[a] -= 1;
        blocked[b] -= 1;
        if r.is_some() {
            return r;
        }
    }
    None
}

/// Which invariants a report computes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Subset of `{2, 3, 4}`.
    pub mu: Vec<usize>,
    pub resistance: bool,
    pub search: SearchOptions,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            mu: vec![2, 3],
            resistance: true,
            search: SearchOptions::default(),
        }
    }
}

impl ReportOptions {
    pub fn all() -> Self {
        Self {
            mu: vec![2, 3, 4],
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResistanceWitness {
    pub matching: EdgeSet,
    /// Colour per edge, `0..4`; colour 3 is the deleted matching.
    pub coloring: Vec<u8>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub oddness: Option<EdgeSet>,
    pub gamma2: Option<[EdgeSet; 2]>,
    pub mu2: Option<Vec<EdgeSet>>,
    pub mu3: Option<Vec<EdgeSet>>,
    pub mu4: Option<Vec<EdgeSet>>,
    pub resistance3: Option<ResistanceWitness>,
    /// A proper 3-edge-colouring (colour per edge) when one exists.
    pub coloring: Option<Vec<u8>>,
}

/// Three-valued theorem check outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub girth: Option<usize>,
    pub is_bridgeless: bool,
    pub is_snark: bool,
    pub perfect_matchings: usize,
    pub gamma2: usize,
    pub mu2: Option<Bounded>,
    pub mu3: Option<Bounded>,
    pub oddness: usize,
    pub resistance3: Option<usize>,
    pub mu4: Option<Bounded>,
    pub witnesses: Witnesses,
    pub theorem_verdicts: std::collections::BTreeMap<String, Verdict>,
}

impl InvariantReport {
    pub fn is_3_edge_colorable(&self) -> bool {
        self.witnesses.coloring.is_some()
    }
}

/// Computes every selected invariant of a cubic graph.
pub fn invariant_report(g: &Graph, opts: &ReportOptions) -> Result<InvariantReport> {
    require_cubic(g)?;
    for &k in &opts.mu {
        if !(2..=4).contains(&k) {
            return Err(Error::Parameter(format!("mu_k is supported for k in 2..=4, got {k}")));
        }
    }
    let coloring = three_edge_coloring(g, None);
    let colorable = coloring.is_some();
    let bridgeless = is_bridgeless(g);
    let list = perfect_matching_list(g, opts.search.list_cap);
    let count = match &list {
        Some(l) => l.len(),
        None => enumerate_perfect_matchings(g).count(),
    };
    if count == 0 {
        return Err(Error::NoPerfectMatching);
    }

    let odd_floor = if colorable { 0 } else { 2 };
    let (odd, odd_w) = match &list {
        Some(l) => oddness_over(g, l.iter().cloned(), odd_floor)?,
        None => oddness_over(g, enumerate_perfect_matchings(g), odd_floor)?,
    };
    let (g2, g2_w) = match &list {
        Some(l) => gamma2_over(l, if colorable { 0 } else { 1 })?,
        None => {
            let l = perfect_matching_list(g, usize::MAX).expect("uncapped");
            gamma2_over(&l, if colorable { 0 } else { 1 })?
        }
    };

    let mut report = InvariantReport {
        n: g.n(),
        m: g.m(),
        girth: girth(g),
        is_bridgeless: bridgeless,
        is_snark: bridgeless && !colorable,
        perfect_matchings: count,
        gamma2: g2,
        mu2: None,
        mu3: None,
        oddness: odd,
        resistance3: None,
        mu4: None,
        witnesses: Witnesses {
            oddness: Some(odd_w),
            gamma2: Some(g2_w),
            coloring: coloring.map(|c| c.into_iter().map(|x| x.expect("all edges coloured")).collect()),
            ..Default::default()
        },
        theorem_verdicts: Default::default(),
    };
    let req = MuRequest {
        options: opts.search,
        hint: None,
        colorable: Some(colorable),
    };
    for &k in &opts.mu {
        let r = mu_from_list(g, k, list.as_deref(), colorable, &req)?;
        match k {
            2 => {
                report.mu2 = Some(r.value);
                report.witnesses.mu2 = Some(r.witness);
            }
            3 => {
                report.mu3 = Some(r.value);
                report.witnesses.mu3 = Some(r.witness);
            }
            _ => {
                report.mu4 = Some(r.value);
                report.witnesses.mu4 = Some(r.witness);
            }
        }
    }
    if opts.resistance {
        let (r, matching, coloring) = resistance3(g)?;
        report.resistance3 = Some(r);
        report.witnesses.resistance3 = Some(ResistanceWitness { matching, coloring });
    }
    Ok(report)
}

/// The three colour classes of a 3-edge-colouring, as perfect matchings.
pub fn coloring_triple(g: &Graph) -> Option<[EdgeSet; 3]> {
    three_edge_coloring(g, None).map(|c| color_classes(g, &c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{flower_snark, k4, petersen, theta};

    #[test]
    fn petersen_values() {
        let p = petersen();
        assert_eq!(oddness(&p).unwrap().0, 2);
        assert_eq!(gamma2(&p).unwrap().0, 1);
        let opts = SearchOptions::default();
        assert_eq!(mu(&p, 2, opts).unwrap().value, Bounded::Exact(6));
        assert_eq!(mu(&p, 3, opts).unwrap().value, Bounded::Exact(3));
        assert_eq!(mu(&p, 4, opts).unwrap().value, Bounded::Exact(1));
        assert_eq!(resistance3(&p).unwrap().0, 2);
    }

    #[test]
    fn colourable_graphs_are_zero() {
        for g in [k4(), theta()] {
            let r = invariant_report(&g, &ReportOptions::all()).unwrap();
            assert_eq!(r.gamma2, 0);
            assert_eq!(r.oddness, 0);
            assert_eq!(r.mu3, Some(Bounded::Exact(0)));
            assert_eq!(r.mu4, Some(Bounded::Exact(0)));
            assert_eq!(r.resistance3, Some(0));
            assert_eq!(r.mu2, Some(Bounded::Exact(g.m() / 3)));
            assert!(!r.is_snark);
        }
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let p = petersen();
        let list = perfect_matching_list(&p, 100).unwrap();
        let r = mu(&p, 3, SearchOptions::default()).unwrap();
        let idx = r.witness_indices.clone().unwrap();
        let mut first = None;
        'scan: for i in 0..list.len() {
            for j in i..list.len() {
                for l in j..list.len() {
                    let v = multiplicity_classes(p.m(), &[list[i].clone(), list[j].clone(), list[l].clone()])[0].len();
                    if v == 3 {
                        first = Some(vec![i, j, l]);
                        break 'scan;
                    }
                }
            }
        }
        assert_eq!(Some(idx), first);
    }

    #[test]
    fn budget_exhaustion_brackets() {
        let j5 = flower_snark(5).unwrap();
        let r = mu(
            &j5,
            3,
            SearchOptions {
                node_budget: 1,
                list_cap: DEFAULT_LIST_CAP,
            },
        )
        .unwrap();
        match r.value {
            Bounded::Bracket { lower, upper } => {
                assert_eq!(lower, 3);
                assert!(upper >= 3);
                assert_eq!(multiplicity_classes(j5.m(), &r.witness)[0].len(), upper);
            }
            Bounded::Exact(_) => panic!("budget of one node cannot finish"),
        }
    }

    #[test]
    fn streaming_fallback_agrees() {
        let p = petersen();
        let capped = SearchOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            list_cap: 2,
        };
        for k in 2..=4 {
            let a = mu(&p, k, capped).unwrap();
            let b = mu(&p, k, SearchOptions::default()).unwrap();
            assert_eq!(a.value, b.value, "k = {k}");
            assert!(a.witness_indices.is_none());
        }
    }

    #[test]
    fn hint_is_respected() {
        let p = petersen();
        let list = perfect_matching_list(&p, 100).unwrap();
        let base = mu(&p, 3, SearchOptions::default()).unwrap();
        let req = MuRequest {
            hint: Some(base.witness.clone()),
            ..Default::default()
        };
        let hinted = mu_with(&p, 3, &req).unwrap();
        assert_eq!(hinted.value, Bounded::Exact(3));
        assert_eq!(hinted.witness, base.witness);
        let bad = MuRequest {
            hint: Some(vec![list[0].clone()]),
            ..Default::default()
        };
        assert!(mu_with(&p, 3, &bad).is_err());
    }

    #[test]
    fn rejects_non_cubic() {
        let path = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(oddness(&path), Err(Error::NotCubic));
        assert!(mu(&k4(), 5, SearchOptions::default()).is_err());
    }

    #[test]
    fn bracket_json() {
        let v = serde_json::to_string(&Bounded::Bracket { lower: 3, upper: 5 }).unwrap();
        assert_eq!(v, r#"{"lower":3,"upper":5}"#);
        assert_eq!(serde_json::to_string(&Bounded::Exact(4)).unwrap(), "4");
    }
}
