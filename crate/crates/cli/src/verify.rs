//! The one-shot identity battery behind `verify`.

use std::collections::BTreeSet;

use hyperkirchhoff_core::activation::{activation_class_iter, activation_successors};
use hyperkirchhoff_core::matrix::vertex_minor;
use hyperkirchhoff_core::random::random_strikes;
use hyperkirchhoff_core::{
    adjacency_matrix, classify, cofactor_tree_check, complete, contributor_sums,
    det_l_via_maximal_negatives, edge_sign, enumerate_contributors, enumerate_sub_contributors,
    laplacian, minor_sums, universal_cut, BigInt, Error, OrientedHypergraph, VertexId,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::output::{vertex_set, Table};
use crate::{Format, Result, RunConfig};

/// Completions with more activation classes than this are not searched.
const MAX_COMPLETION_CLASSES: u128 = 200_000;
/// Sampled strike pairs per size.
const SAMPLES_PER_SIZE: usize = 2;
/// Above this many vertices the tree check samples pairs instead of
/// covering all of them.
const ALL_PAIRS_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn compare(
        &mut self,
        suite: &'static str,
        name: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
    ) {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        let status = if lhs == rhs {
            Status::Pass
        } else {
            Status::Fail
        };
        self.checks.push(Check {
            suite,
            name: name.into(),
            lhs,
            rhs,
            status,
        });
    }

    fn skip(&mut self, suite: &'static str, reason: impl Into<String>) {
        self.checks.push(Check {
            suite,
            name: "-".into(),
            lhs: "-".into(),
            rhs: "-".into(),
            status: Status::Skipped(reason.into()),
        });
    }

    fn error(&mut self, suite: &'static str, name: impl Into<String>, e: Error) {
        self.checks.push(Check {
            suite,
            name: name.into(),
            lhs: format!("error: {e}"),
            rhs: "-".into(),
            status: Status::Fail,
        });
    }

    /// True iff no executed check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, pred: impl Fn(&Status) -> bool) -> usize {
        self.checks.iter().filter(|c| pred(&c.status)).count()
    }

    pub fn render(&self, format: Format) -> Result<String> {
        let mut t = Table::new(["suite", "check", "lhs", "rhs", "status"]);
        for c in &self.checks {
            let status = match &c.status {
                Status::Pass => "pass".to_string(),
                Status::Fail => "FAIL".to_string(),
                Status::Skipped(why) => format!("skipped: {why}"),
            };
            t.push([
                c.suite.to_string(),
                c.name.clone(),
                c.lhs.clone(),
                c.rhs.clone(),
                status,
            ]);
        }
        let mut out = t.render(format)?;
        if format == Format::Text {
            out.push_str(&format!(
                "\n{} checks: {} passed, {} failed, {} skipped\n",
                self.checks.len(),
                self.count(|s| *s == Status::Pass),
                self.count(|s| *s == Status::Fail),
                self.count(|s| matches!(s, Status::Skipped(_))),
            ));
        }
        Ok(out)
    }
}

/// Runs every identity check that applies to `g`. Sampled strike sets come
/// from `config.seed`, so equal inputs give equal reports.
pub fn verify(g: &OrientedHypergraph, config: &RunConfig) -> Report {
    let mut report = Report::default();
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut samples: Vec<(Vec<VertexId>, Vec<VertexId>)> = Vec::new();
    for k in 1..=n.min(2) {
        for _ in 0..SAMPLES_PER_SIZE {
            let s = random_strikes(&mut rng, n, k);
            if !samples.contains(&s) {
                samples.push(s);
            }
        }
    }

    if n > config.max_exhaustive {
        let why = format!(
            "{n} vertices exceeds --max-exhaustive {}",
            config.max_exhaustive
        );
        for suite in ["sums", "minors", "activation", "completion"] {
            report.skip(suite, why.clone());
        }
        return report;
    }

    full_sums(g, &mut report);
    minors(g, &samples, &mut report);
    if let Some(why) = activation_gate(g) {
        report.skip("activation", why);
    } else {
        activation(g, &mut report);
    }
    if !g.is_bidirected() {
        report.skip("completion", "not bidirected");
    } else {
        completion(g, &samples, &mut report, &mut rng);
    }
    report
}

fn full_sums(g: &OrientedHypergraph, report: &mut Report) {
    let s = contributor_sums(g);
    let (l, a) = (laplacian(g), adjacency_matrix(g));
    let pairs = [
        ("perm(L)", s.perm_l, l.permanent()),
        ("det(L)", s.det_l, l.determinant()),
        ("perm(A)", s.perm_a, a.permanent()),
        ("det(A)", s.det_a, a.determinant()),
    ];
    for (name, lhs, rhs) in pairs {
        match rhs {
            Ok(rhs) => report.compare("sums", name, lhs, rhs),
            Err(e) => report.error("sums", name, e),
        }
    }
}

fn minors(g: &OrientedHypergraph, samples: &[(Vec<VertexId>, Vec<VertexId>)], report: &mut Report) {
    if samples.is_empty() {
        report.skip("minors", "no vertices to strike");
        return;
    }
    let (l, a) = (laplacian(g), adjacency_matrix(g));
    for (us, ws) in samples {
        let tag = format!("[{};{}]", vertex_set(g, us), vertex_set(g, ws));
        let s = match minor_sums(g, us, ws) {
            Ok(s) => s,
            Err(e) => {
                report.error("minors", tag, e);
                continue;
            }
        };
        let (ml, ma) = (vertex_minor(&l, us, ws), vertex_minor(&a, us, ws));
        let rows: [(&str, BigInt, Result<BigInt, Error>); 4] = [
            ("perm L", s.perm_l, ml.permanent()),
            ("det L", s.det_l.clone(), ml.determinant()),
            ("perm A", s.perm_a, ma.permanent()),
            ("det A", s.det_a, ma.determinant()),
        ];
        for (name, lhs, rhs) in rows {
            match rhs {
                Ok(rhs) => report.compare("minors", format!("{name}{tag}"), lhs, rhs),
                Err(e) => report.error("minors", format!("{name}{tag}"), e),
            }
        }
        report.compare(
            "minors",
            format!("det L{tag} by paths"),
            s.det_l_by_paths,
            s.det_l,
        );
    }
}

fn activation_gate(g: &OrientedHypergraph) -> Option<String> {
    if !g.is_bidirected() {
        return Some("not bidirected".into());
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Some(format!("adjacency-free component at {}", g.vertex_name(v)));
    }
    None
}

fn activation(g: &OrientedHypergraph, report: &mut Report) {
    let classes = match activation_class_iter(g) {
        Ok(it) => it.collect::<Vec<_>>(),
        Err(e) => {
            report.error("activation", "classes", e);
            return;
        }
    };
    let n = g.vertex_count();
    let lattice_total: BigInt = classes.iter().map(|c| c.member_count()).sum();
    report.compare(
        "activation",
        "sum of 2^cycles = contributors",
        lattice_total,
        enumerate_contributors(g).count(),
    );

    let mut order_ok = 0usize;
    let mut cut_ok = 0usize;
    for class in &classes {
        let all = class.all_cycles();
        let lawful = all.subsets().all(|s| {
            let Ok(m) = class.member(s) else { return false };
            let Ok(next) = activation_successors(g, &m) else {
                return false;
            };
            let got: BTreeSet<_> = next.into_iter().map(|d| d.steps().to_vec()).collect();
            let want: BTreeSet<_> = all
                .iter()
                .filter(|&c| !s.contains(c))
                .filter_map(|c| class.member(s.with(c)).ok())
                .map(|d| d.steps().to_vec())
                .collect();
            got == want
        });
        order_ok += usize::from(lawful);
        for u in g.vertices() {
            let total: usize = g.vertices().map(|w| class.cut(u, w).len()).sum();
            cut_ok += usize::from(BigInt::from(total) == class.member_count());
        }
    }
    report.compare(
        "activation",
        "classes obeying the subset order",
        order_ok,
        classes.len(),
    );
    report.compare(
        "activation",
        "(class,u) pairs with complementary cuts",
        cut_ok,
        classes.len() * n,
    );
    match (det_l_via_maximal_negatives(g), laplacian(g).determinant()) {
        (Ok(lhs), Ok(rhs)) => report.compare("activation", "det(L) via negative classes", lhs, rhs),
        (Err(e), _) | (_, Err(e)) => report.error("activation", "det(L) via negative classes", e),
    }
}

fn completion_class_count(g: &OrientedHypergraph) -> u128 {
    let n = g.vertex_count();
    g.vertices()
        .map(|v| {
            let missing = (0..n)
                .filter(|&w| w != v.index() && !g.adjacent(v, VertexId(w)))
                .count();
            (g.degree(v) + missing) as u128
        })
        .try_fold(1u128, |acc, d| acc.checked_mul(d))
        .unwrap_or(u128::MAX)
}

fn completion(
    g: &OrientedHypergraph,
    samples: &[(Vec<VertexId>, Vec<VertexId>)],
    report: &mut Report,
    rng: &mut ChaCha8Rng,
) {
    let n = g.vertex_count();
    if n < 2 {
        report.skip("completion", "needs at least two vertices");
        return;
    }
    let classes = completion_class_count(g);
    if classes > MAX_COMPLETION_CLASSES {
        report.skip(
            "completion",
            format!("completion has {classes} activation classes"),
        );
        return;
    }
    let gc = match complete(g) {
        Ok(gc) => gc,
        Err(e) => {
            report.error("completion", "complete", e);
            return;
        }
    };
    for (us, ws) in samples {
        let tag = format!("[{};{}]", vertex_set(g, us), vertex_set(g, ws));
        let direct: Result<BTreeSet<_>, Error> =
            enumerate_sub_contributors(g, us, ws).map(Iterator::collect);
        match (universal_cut(&gc, us, ws), direct) {
            (Ok(cut), Ok(direct)) => {
                let profiles_match = cut
                    .iter()
                    .all(|c| classify(gc.graph(), c) == classify(g, c));
                let lhs = format!("trimmed={}", cut.len());
                let rhs = format!("direct={}", direct.len());
                let status = if cut == direct && profiles_match {
                    Status::Pass
                } else {
                    Status::Fail
                };
                report.checks.push(Check {
                    suite: "completion",
                    name: format!("universal cut{tag}"),
                    lhs,
                    rhs,
                    status,
                });
            }
            (Err(e), _) | (_, Err(e)) => {
                report.error("completion", format!("universal cut{tag}"), e)
            }
        }
    }

    let positive = g.edges().all(|e| edge_sign(g, e) == Ok(1));
    if !positive || !g.is_connected() {
        report.skip("trees", "needs a connected all-positive graph");
        return;
    }
    let pairs: Vec<(usize, usize)> = if n <= ALL_PAIRS_LIMIT {
        (0..n).flat_map(|u| (0..n).map(move |w| (u, w))).collect()
    } else {
        use rand::Rng;
        let mut p = vec![(0, 0)];
        for _ in 0..3 {
            p.push((rng.gen_range(0..n), rng.gen_range(0..n)));
        }
        p
    };
    for (u, w) in pairs {
        let name = format!(
            "({};{})",
            g.vertex_name(VertexId(u)),
            g.vertex_name(VertexId(w))
        );
        match cofactor_tree_check(g, VertexId(u), VertexId(w)) {
            Ok(c) => {
                let lhs = format!("cofactor={}", c.cofactor);
                let rhs = format!("ideals={} trees={}", c.ideals, c.oracle);
                let status = if c.passed() {
                    Status::Pass
                } else {
                    Status::Fail
                };
                report.checks.push(Check {
                    suite: "trees",
                    name,
                    lhs,
                    rhs,
                    status,
                });
            }
            Err(e) => report.error("trees", name, e),
        }
    }
}
