//! Exhaustive scan over all labeled connected graphs of a given order.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    identity_report, is_strongly_regular, non_unit_eigenvalues, SubdivisionData, Tolerances,
    VerificationReport,
};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, ConnectedGraphs, Graph};
use crate::spectra::{perron_residual, randic_matrix, spectra, BOUND_SLACK};

/// Claims evaluated by the scan, in report order.
pub const CLAIMS: [&str; 10] = [
    "two_distinct_iff_complete",
    "regular_three_distinct_iff_srg",
    "eigenvalue_relations",
    "eigenvalue_bounds",
    "perron_vector",
    "k_distinct_identity",
    "local_conditions",
    "subdivision_charpoly",
    "eigenvalue_correspondence",
    "subdivision_energy",
];

const MASKS_PER_TASK: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub order: usize,
    pub tolerances: Tolerances,
    /// Also run the three subdivision checks (one extra eigensolve of order
    /// `n + m` per graph).
    pub include_subdivision: bool,
    /// Worker threads; 0 lets the pool decide, 1 runs on the calling thread.
    pub jobs: usize,
}

impl ScanOptions {
    pub fn new(order: usize) -> ScanOptions {
        ScanOptions {
            order,
            tolerances: Tolerances::default(),
            include_subdivision: true,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub claim: &'static str,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    /// Position among the scanned graphs, in enumeration order.
    pub graph_index: usize,
    pub graph6: String,
    pub claim: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyRecord {
    pub graph_index: usize,
    pub graph6: String,
    pub randic_energy: f64,
    /// Whether the graph is the subdivision of a star.
    pub is_subdivided_star: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanSummary {
    pub order: usize,
    pub graphs_scanned: usize,
    /// Graphs per distinct Randić eigenvalue count.
    pub distinct_count_histogram: BTreeMap<usize, usize>,
    pub complete_graphs: usize,
    pub two_distinct_graphs: usize,
    pub regular_graphs: usize,
    pub regular_three_distinct_graphs: usize,
    pub strongly_regular_graphs: usize,
    pub claims: Vec<ClaimTally>,
    pub counterexamples: Vec<Counterexample>,
    /// Highest Randić energy seen; the first graph wins ties.
    pub max_randic_energy: Option<EnergyRecord>,
}

impl ScanSummary {
    fn empty(order: usize) -> ScanSummary {
        ScanSummary {
            order,
            graphs_scanned: 0,
            distinct_count_histogram: BTreeMap::new(),
            complete_graphs: 0,
            two_distinct_graphs: 0,
            regular_graphs: 0,
            regular_three_distinct_graphs: 0,
            strongly_regular_graphs: 0,
            claims: CLAIMS
                .iter()
                .map(|&claim| ClaimTally {
                    claim,
                    checked: 0,
                    failed: 0,
                })
                .collect(),
            counterexamples: Vec::new(),
            max_randic_energy: None,
        }
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimTally> {
        self.claims.iter().find(|c| c.claim == name)
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Appends the results of a later, disjoint stretch of the enumeration.
    fn absorb(&mut self, later: ScanSummary) {
        let offset = self.graphs_scanned;
        self.graphs_scanned += later.graphs_scanned;
        for (k, count) in later.distinct_count_histogram {
            *self.distinct_count_histogram.entry(k).or_default() += count;
        }
        self.complete_graphs += later.complete_graphs;
        self.two_distinct_graphs += later.two_distinct_graphs;
        self.regular_graphs += later.regular_graphs;
        self.regular_three_distinct_graphs += later.regular_three_distinct_graphs;
        self.strongly_regular_graphs += later.strongly_regular_graphs;
        for (mine, theirs) in self.claims.iter_mut().zip(later.claims) {
            mine.checked += theirs.checked;
            mine.failed += theirs.failed;
        }
        self.counterexamples
            .extend(later.counterexamples.into_iter().map(|mut c| {
                c.graph_index += offset;
                c
            }));
        if let Some(mut record) = later.max_randic_energy {
            record.graph_index += offset;
            let better = self
                .max_randic_energy
                .as_ref()
                .is_none_or(|best| record.randic_energy > best.randic_energy + ENERGY_TIE);
            if better {
                self.max_randic_energy = Some(record);
            }
        }
    }

    fn tally(&mut self, index: usize, g: &Graph, claim: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let slot = self
            .claims
            .iter_mut()
            .find(|c| c.claim == claim)
            .expect("claim is listed in CLAIMS");
        slot.checked += 1;
        if !ok {
            slot.failed += 1;
            self.counterexamples.push(Counterexample {
                graph_index: index,
                graph6: encode_graph6(g).unwrap_or_default(),
                claim,
                detail: detail(),
            });
        }
    }

    fn tally_report(&mut self, index: usize, g: &Graph, claim: &'static str, report: Result<VerificationReport>) {
        match report {
            Ok(r) => self.tally(index, g, claim, r.passed, || r.detail.clone()),
            Err(e) => self.tally(index, g, claim, false, || e.to_string()),
        }
    }
}

const ENERGY_TIE: f64 = 1e-9;

/// Subdivision of a star: a tree with a centre whose neighbours all have
/// degree 2 and lead on to leaves.
pub fn is_subdivided_star(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 || g.size() + 1 != n || !g.is_connected() {
        return false;
    }
    (0..n).any(|centre| {
        2 * g.degree(centre) + 1 == n
            && g.neighbors(centre).all(|w| {
                g.degree(w) == 2 && g.neighbors(w).all(|x| x == centre || g.degree(x) == 1)
            })
    })
}

/// Evaluates every claim on one graph.
fn scan_graph(summary: &mut ScanSummary, index: usize, g: &Graph, opts: &ScanOptions) {
    let n = g.order();
    let tol = opts.tolerances;
    let verdict = tol.verdict_for(n);
    summary.graphs_scanned += 1;

    let spectra = match spectra(g, tol.distinct) {
        Ok(s) => s,
        Err(e) => {
            for claim in CLAIMS {
                summary.tally(index, g, claim, false, || e.to_string());
            }
            return;
        }
    };
    let k = spectra.randic.distinct_count();
    *summary.distinct_count_histogram.entry(k).or_default() += 1;

    let complete = g.is_complete();
    summary.complete_graphs += usize::from(complete);
    summary.two_distinct_graphs += usize::from(k == 2);
    summary.tally(index, g, "two_distinct_iff_complete", complete == (k == 2), || {
        format!("complete = {complete}, distinct eigenvalues = {k}")
    });

    if g.regular_degree().is_some() {
        let srg = is_strongly_regular(g);
        summary.regular_graphs += 1;
        summary.regular_three_distinct_graphs += usize::from(k == 3);
        summary.strongly_regular_graphs += usize::from(srg.is_some());
        summary.tally(index, g, "regular_three_distinct_iff_srg", srg.is_some() == (k == 3), || {
            format!("strongly regular = {srg:?}, distinct eigenvalues = {k}")
        });
    }

    let relation = spectra.relation_residual();
    summary.tally(index, g, "eigenvalue_relations", relation < BOUND_SLACK, || {
        format!("|μ - (1 - ρ)|, |θ - (1 + ρ)| up to {relation:e}")
    });

    let bound = spectra.bound_violation();
    let trace = spectra.trace_residual();
    summary.tally(
        index,
        g,
        "eigenvalue_bounds",
        bound <= BOUND_SLACK && trace < n as f64 * 1e-9,
        || format!("bound violation {bound:e}, trace residual {trace:e}"),
    );

    let perron = perron_residual(g);
    let perron_ok = matches!(perron, Ok(p) if p < n as f64 * 1e-10);
    summary.tally(index, g, "perron_vector", perron_ok, || format!("R·α - α: {perron:?}"));

    let roots = non_unit_eigenvalues(&spectra.randic);
    let identity = randic_matrix(g).map(|r| identity_report(g, &r, &roots, tol.distinct, verdict));
    summary.tally_report(index, g, "k_distinct_identity", identity);

    if k == 3 {
        summary.tally_report(index, g, "local_conditions", super::local_conditions_check(g, &tol));
    }

    let energy = spectra.randic.energy();
    let better = summary
        .max_randic_energy
        .as_ref()
        .is_none_or(|best| energy > best.randic_energy + ENERGY_TIE);
    if better {
        summary.max_randic_energy = Some(EnergyRecord {
            graph_index: index,
            graph6: encode_graph6(g).unwrap_or_default(),
            randic_energy: energy,
            is_subdivided_star: is_subdivided_star(g),
        });
    }

    if opts.include_subdivision {
        match SubdivisionData::compute(g, Some(&spectra.norm_signless), tol.distinct) {
            Ok(data) => {
                summary.tally_report(index, g, "subdivision_charpoly", Ok(data.charpoly_report(verdict)));
                summary.tally_report(index, g, "eigenvalue_correspondence", data.correspondence_report(verdict));
                summary.tally_report(index, g, "subdivision_energy", data.energy_report(verdict));
            }
            Err(e) => {
                for claim in &CLAIMS[7..] {
                    summary.tally(index, g, claim, false, || e.to_string());
                }
            }
        }
    }
}

fn scan_range(opts: &ScanOptions, start: u64, end: u64) -> Result<ScanSummary> {
    let mut summary = ScanSummary::empty(opts.order);
    for (index, g) in ConnectedGraphs::over_masks(opts.order, start..end)?.enumerate() {
        scan_graph(&mut summary, index, &g, opts);
    }
    Ok(summary)
}

/// Scans all labeled connected graphs of order `opts.order` (2 to 7).
///
/// Work is split into contiguous ranges of edge masks; partial results are
/// merged in enumeration order, so the summary is identical for any number
/// of jobs.
pub fn scan_small_graphs(opts: &ScanOptions) -> Result<ScanSummary> {
    let total = ConnectedGraphs::mask_count(opts.order)?;
    let starts: Vec<u64> = (0..total).step_by(MASKS_PER_TASK as usize).collect();
    let run = |&start: &u64| scan_range(opts, start, start + MASKS_PER_TASK);

    let parts: Vec<ScanSummary> = if opts.jobs == 1 {
        starts.iter().map(run).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
        pool.install(|| starts.par_iter().map(run).collect::<Result<_>>())?
    };

    let mut summary = ScanSummary::empty(opts.order);
    for part in parts {
        summary.absorb(part);
    }
    Ok(summary)
}
