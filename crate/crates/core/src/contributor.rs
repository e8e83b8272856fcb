//! Contributors, sub-contributors and their component structure.
//!
//! A pre-contributor picks one length-1 weak walk out of every vertex. It is
//! a contributor when the heads form a permutation of the vertices. A
//! sub-contributor for struck rows `U` and struck columns `W` assigns walks
//! only to `V \ U` and its heads must biject onto `V \ W`.
//!
//! Summing signed component counts over these objects reproduces the
//! permanent and determinant of the Laplacian and adjacency matrices and of
//! all their minors; see [`contributor_sums`] and [`minor_sums`].

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hypergraph::{OrientedHypergraph, VertexId, WeakWalk1};

/// Read access shared by contributors and sub-contributors.
pub trait StepAssignment {
    fn vertex_count(&self) -> usize;
    fn step_at(&self, v: VertexId) -> Option<&WeakWalk1>;
}

/// One length-1 weak walk per vertex, indexed by tail.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreContributor {
    steps: Vec<WeakWalk1>,
}

impl PreContributor {
    pub fn new(g: &OrientedHypergraph, steps: Vec<WeakWalk1>) -> Result<Self> {
        if steps.len() != g.vertex_count() {
            return Err(Error::StepCount {
                expected: g.vertex_count(),
                actual: steps.len(),
            });
        }
        for (v, s) in steps.iter().enumerate() {
            check_step(g, VertexId(v), s)?;
        }
        Ok(PreContributor { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<WeakWalk1>) -> Self {
        PreContributor { steps }
    }

    pub fn steps(&self) -> &[WeakWalk1] {
        &self.steps
    }

    pub fn step(&self, v: VertexId) -> &WeakWalk1 {
        &self.steps[v.index()]
    }

    pub(crate) fn replace_step(&mut self, v: VertexId, step: WeakWalk1) {
        self.steps[v.index()] = step;
    }

    pub fn is_contributor(&self) -> bool {
        let mut seen = vec![false; self.steps.len()];
        self.steps
            .iter()
            .all(|s| !std::mem::replace(&mut seen[s.head.index()], true))
    }

    pub fn into_contributor(self) -> Result<Contributor> {
        if self.is_contributor() {
            Ok(Contributor(self))
        } else {
            Err(Error::NotBijective)
        }
    }
}

fn check_step(g: &OrientedHypergraph, v: VertexId, s: &WeakWalk1) -> Result<()> {
    if s.tail != v {
        return Err(Error::MisplacedStep {
            vertex: g.vertex_name(v).to_string(),
        });
    }
    if g.step(s.tail_incidence, s.head_incidence)? != *s {
        return Err(Error::ForeignIncidences {
            tail: s.tail_incidence.index(),
            head: s.head_incidence.index(),
        });
    }
    Ok(())
}

impl StepAssignment for PreContributor {
    fn vertex_count(&self) -> usize {
        self.steps.len()
    }

    fn step_at(&self, v: VertexId) -> Option<&WeakWalk1> {
        self.steps.get(v.index())
    }
}

/// A pre-contributor whose heads form a permutation of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Contributor(PreContributor);

impl Contributor {
    pub fn steps(&self) -> &[WeakWalk1] {
        &self.0.steps
    }

    pub fn step(&self, v: VertexId) -> &WeakWalk1 {
        self.0.step(v)
    }

    pub fn as_pre(&self) -> &PreContributor {
        &self.0
    }

    pub fn into_pre(self) -> PreContributor {
        self.0
    }

    /// Head of each vertex's walk, in vertex order.
    pub fn head_permutation(&self) -> Vec<VertexId> {
        self.0.steps.iter().map(|s| s.head).collect()
    }

    pub fn backstep_vertices(&self) -> Vec<VertexId> {
        self.0
            .steps
            .iter()
            .filter(|s| s.is_backstep())
            .map(|s| s.tail)
            .collect()
    }

    pub fn is_strong(&self) -> bool {
        self.0.steps.iter().all(|s| !s.is_backstep())
    }
}

impl StepAssignment for Contributor {
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    fn step_at(&self, v: VertexId) -> Option<&WeakWalk1> {
        self.0.step_at(v)
    }
}

/// Walks out of `V \ U` whose heads biject onto `V \ W`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubContributor {
    steps: Vec<Option<WeakWalk1>>,
    struck_rows: Vec<VertexId>,
    struck_cols: Vec<VertexId>,
}

impl SubContributor {
    pub fn new(
        g: &OrientedHypergraph,
        steps: Vec<Option<WeakWalk1>>,
        struck_rows: &[VertexId],
        struck_cols: &[VertexId],
    ) -> Result<Self> {
        let (rows, cols) = normalize_strikes(g, struck_rows, struck_cols)?;
        if steps.len() != g.vertex_count() {
            return Err(Error::StepCount {
                expected: g.vertex_count(),
                actual: steps.len(),
            });
        }
        let mut hit = vec![false; g.vertex_count()];
        for (v, s) in steps.iter().enumerate() {
            let v = VertexId(v);
            match s {
                Some(s) => {
                    if rows.contains(&v) {
                        return Err(Error::NotBijective);
                    }
                    check_step(g, v, s)?;
                    if cols.contains(&s.head) || std::mem::replace(&mut hit[s.head.index()], true) {
                        return Err(Error::NotBijective);
                    }
                }
                None if !rows.contains(&v) => return Err(Error::NotBijective),
                None => {}
            }
        }
        Ok(SubContributor {
            steps,
            struck_rows: rows,
            struck_cols: cols,
        })
    }

    pub(crate) fn from_parts_unchecked(
        steps: Vec<Option<WeakWalk1>>,
        struck_rows: Vec<VertexId>,
        struck_cols: Vec<VertexId>,
    ) -> Self {
        SubContributor {
            steps,
            struck_rows,
            struck_cols,
        }
    }

    pub fn steps(&self) -> &[Option<WeakWalk1>] {
        &self.steps
    }

    pub fn struck_rows(&self) -> &[VertexId] {
        &self.struck_rows
    }

    pub fn struck_cols(&self) -> &[VertexId] {
        &self.struck_cols
    }

    pub fn is_strong(&self) -> bool {
        self.steps.iter().flatten().all(|s| !s.is_backstep())
    }

    /// No surviving walk touches a 0-signed incidence.
    pub fn is_nonzero(&self, g: &OrientedHypergraph) -> bool {
        self.steps
            .iter()
            .flatten()
            .all(|s| g.sign(s.tail_incidence) != 0 && g.sign(s.head_incidence) != 0)
    }
}

impl From<Contributor> for SubContributor {
    fn from(c: Contributor) -> Self {
        SubContributor {
            steps: c.0.steps.into_iter().map(Some).collect(),
            struck_rows: Vec::new(),
            struck_cols: Vec::new(),
        }
    }
}

impl StepAssignment for SubContributor {
    fn vertex_count(&self) -> usize {
        self.steps.len()
    }

    fn step_at(&self, v: VertexId) -> Option<&WeakWalk1> {
        self.steps.get(v.index()).and_then(Option::as_ref)
    }
}

/// Sorts and de-duplicates `U` and `W` into the implied vertex order.
pub(crate) fn normalize_strikes(
    g: &OrientedHypergraph,
    rows: &[VertexId],
    cols: &[VertexId],
) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let norm = |xs: &[VertexId]| -> Result<Vec<VertexId>> {
        let mut out = xs.to_vec();
        out.sort_unstable();
        out.dedup();
        if let Some(bad) = out.iter().find(|v| v.index() >= g.vertex_count()) {
            return Err(Error::UnknownLabel(format!("#{}", bad.index())));
        }
        Ok(out)
    };
    let (r, c) = (norm(rows)?, norm(cols)?);
    if r.len() != c.len() {
        return Err(Error::SizeMismatch {
            rows: r.len(),
            cols: c.len(),
        });
    }
    Ok((r, c))
}

/// Depth-first enumeration over tails in vertex order. Each level tries the
/// walks out of one tail in (tail incidence, head incidence) order and skips
/// heads already taken or struck.
#[derive(Debug, Clone)]
pub struct SubContributors<'g> {
    g: &'g OrientedHypergraph,
    domain: Vec<VertexId>,
    options: Vec<Vec<WeakWalk1>>,
    cursor: Vec<usize>,
    chosen: Vec<WeakWalk1>,
    used: Vec<bool>,
    struck_rows: Vec<VertexId>,
    struck_cols: Vec<VertexId>,
    fresh: bool,
    done: bool,
}

impl<'g> SubContributors<'g> {
    fn new(
        g: &'g OrientedHypergraph,
        rows: Vec<VertexId>,
        cols: Vec<VertexId>,
        strong: bool,
    ) -> Self {
        let domain: Vec<VertexId> = g.vertices().filter(|v| !rows.contains(v)).collect();
        let options = domain
            .iter()
            .map(|&v| {
                g.steps_from(v)
                    .filter(|s| !(strong && s.is_backstep()))
                    .filter(|s| !cols.contains(&s.head))
                    .collect()
            })
            .collect();
        SubContributors {
            g,
            cursor: vec![0; domain.len() + 1],
            chosen: Vec::with_capacity(domain.len()),
            used: vec![false; g.vertex_count()],
            domain,
            options,
            struck_rows: rows,
            struck_cols: cols,
            fresh: true,
            done: false,
        }
    }

    fn pop(&mut self) -> bool {
        match self.chosen.pop() {
            Some(s) => {
                self.used[s.head.index()] = false;
                true
            }
            None => false,
        }
    }

    /// Advances to the next complete assignment, leaving it in `chosen`.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.fresh {
            self.fresh = false;
            if self.domain.is_empty() {
                self.done = true;
                return true;
            }
        } else if !self.pop() {
            self.done = true;
            return false;
        }
        loop {
            let depth = self.chosen.len();
            let opts = &self.options[depth];
            let start = self.cursor[depth];
            let found = (start..opts.len()).find(|&k| !self.used[opts[k].head.index()]);
            match found {
                Some(k) => {
                    let s = opts[k];
                    self.cursor[depth] = k + 1;
                    self.used[s.head.index()] = true;
                    self.chosen.push(s);
                    if self.chosen.len() == self.domain.len() {
                        return true;
                    }
                    self.cursor[depth + 1] = 0;
                }
                None => {
                    if !self.pop() {
                        self.done = true;
                        return false;
                    }
                }
            }
        }
    }

    fn current(&self) -> SubContributor {
        let mut steps = vec![None; self.g.vertex_count()];
        for s in &self.chosen {
            steps[s.tail.index()] = Some(*s);
        }
        SubContributor {
            steps,
            struck_rows: self.struck_rows.clone(),
            struck_cols: self.struck_cols.clone(),
        }
    }
}

impl Iterator for SubContributors<'_> {
    type Item = SubContributor;

    fn next(&mut self) -> Option<SubContributor> {
        if self.advance() {
            Some(self.current())
        } else {
            None
        }
    }
}

/// Contributors in deterministic order; wraps the sub-contributor search
/// with nothing struck.
#[derive(Debug, Clone)]
pub struct Contributors<'g>(SubContributors<'g>);

impl Iterator for Contributors<'_> {
    type Item = Contributor;

    fn next(&mut self) -> Option<Contributor> {
        if self.0.advance() {
            Some(Contributor(PreContributor {
                steps: self.0.chosen.clone(),
            }))
        } else {
            None
        }
    }
}

pub fn enumerate_contributors(g: &OrientedHypergraph) -> Contributors<'_> {
    Contributors(SubContributors::new(g, Vec::new(), Vec::new(), false))
}

/// Backstep-free contributors.
pub fn enumerate_strong_contributors(g: &OrientedHypergraph) -> Contributors<'_> {
    Contributors(SubContributors::new(g, Vec::new(), Vec::new(), true))
}

pub fn enumerate_sub_contributors<'g>(
    g: &'g OrientedHypergraph,
    struck_rows: &[VertexId],
    struck_cols: &[VertexId],
) -> Result<SubContributors<'g>> {
    let (r, c) = normalize_strikes(g, struck_rows, struck_cols)?;
    Ok(SubContributors::new(g, r, c, false))
}

pub fn enumerate_strong_sub_contributors<'g>(
    g: &'g OrientedHypergraph,
    struck_rows: &[VertexId],
    struck_cols: &[VertexId],
) -> Result<SubContributors<'g>> {
    let (r, c) = normalize_strikes(g, struck_rows, struck_cols)?;
    Ok(SubContributors::new(g, r, c, true))
}

/// Circle, path and backstep census of a (sub-)contributor's image.
///
/// Circles are the closed components other than backsteps: a loop is an odd
/// 1-circle and a walk that returns along the same edge is an even
/// 2-circle. Paths run from a vertex that is nobody's head to a vertex with
/// no walk of its own. Parity counts steps; sign is the product of step
/// signs. The `e*/o*/p*/n*` counters for non-adjacency-trivial components
/// cover circles and paths together.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentProfile {
    pub ec: usize,
    pub oc: usize,
    pub pc: usize,
    pub nc: usize,
    pub tc: usize,
    pub en: usize,
    pub on: usize,
    pub pn: usize,
    pub nn: usize,
    pub ep: usize,
    pub op: usize,
    pub pp: usize,
    pub np: usize,
    pub backstep_count: usize,
    /// Components (backsteps included) whose sign is 0.
    pub zero_count: usize,
    /// Product of all walk signs.
    pub walk_sign: i8,
    /// Vertex sequence of each circle, starting at its smallest vertex.
    pub circles: Vec<Vec<VertexId>>,
    /// Vertex sequence of each path, tail end first.
    pub paths: Vec<Vec<VertexId>>,
}

impl ComponentProfile {
    pub fn is_zero(&self) -> bool {
        self.zero_count > 0
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    fn record(&mut self, steps: usize, sign: i8, is_path: bool) {
        let even = steps % 2 == 0;
        let (e, o, p, n) = if is_path {
            (&mut self.ep, &mut self.op, &mut self.pp, &mut self.np)
        } else {
            self.tc += 1;
            (&mut self.ec, &mut self.oc, &mut self.pc, &mut self.nc)
        };
        if even {
            *e += 1;
            self.en += 1;
        } else {
            *o += 1;
            self.on += 1;
        }
        match sign {
            1 => {
                *p += 1;
                self.pn += 1;
            }
            -1 => {
                *n += 1;
                self.nn += 1;
            }
            _ => self.zero_count += 1,
        }
    }
}

pub fn classify<C: StepAssignment + ?Sized>(g: &OrientedHypergraph, c: &C) -> ComponentProfile {
    let n = c.vertex_count();
    let mut is_head = vec![false; n];
    for v in 0..n {
        if let Some(s) = c.step_at(VertexId(v)) {
            is_head[s.head.index()] = true;
        }
    }
    let mut profile = ComponentProfile {
        walk_sign: 1,
        ..Default::default()
    };
    let mut visited = vec![false; n];

    for start in 0..n {
        if is_head[start] || c.step_at(VertexId(start)).is_none() {
            continue;
        }
        let mut seq = vec![VertexId(start)];
        let mut sign = 1i8;
        let mut cur = VertexId(start);
        visited[start] = true;
        while let Some(s) = c.step_at(cur) {
            sign *= g.step_sign(s);
            cur = s.head;
            visited[cur.index()] = true;
            seq.push(cur);
        }
        profile.walk_sign *= sign;
        profile.record(seq.len() - 1, sign, true);
        profile.paths.push(seq);
    }

    for start in 0..n {
        if visited[start] {
            continue;
        }
        let Some(first) = c.step_at(VertexId(start)) else {
            continue;
        };
        if first.is_backstep() {
            visited[start] = true;
            profile.backstep_count += 1;
            let sign = g.step_sign(first);
            profile.walk_sign *= sign;
            if sign == 0 {
                profile.zero_count += 1;
            }
            continue;
        }
        let mut seq = Vec::new();
        let mut sign = 1i8;
        let mut cur = VertexId(start);
        while !visited[cur.index()] {
            visited[cur.index()] = true;
            seq.push(cur);
            let s = c.step_at(cur).expect("closed component");
            sign *= g.step_sign(s);
            cur = s.head;
        }
        profile.walk_sign *= sign;
        profile.record(seq.len(), sign, false);
        profile.circles.push(seq);
    }
    profile
}

fn inversion_parity(seq: &[usize]) -> i8 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Column position of every kept column vertex.
fn column_positions(n: usize, struck_cols: &[VertexId]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n];
    let mut k = 0;
    for (v, slot) in pos.iter_mut().enumerate() {
        if !struck_cols.contains(&VertexId(v)) {
            *slot = k;
            k += 1;
        }
    }
    pos
}

/// `(-1)^inversions` of the head bijection `V \ U -> V \ W`, both sides read
/// in vertex order.
pub fn inversion_sign(c: &SubContributor) -> i8 {
    let pos = column_positions(c.steps.len(), &c.struck_cols);
    let seq: Vec<usize> = c
        .steps
        .iter()
        .flatten()
        .map(|s| pos[s.head.index()])
        .collect();
    inversion_parity(&seq)
}

/// Inversion sign of the path part alone: vertices on closed components
/// (circles and backsteps) are sent to themselves, path vertices to their
/// heads.
pub fn path_inversion_sign(c: &SubContributor) -> i8 {
    let n = c.steps.len();
    let pos = column_positions(n, &c.struck_cols);
    let closed = |v: VertexId| {
        let mut cur = v;
        for _ in 0..n {
            match &c.steps[cur.index()] {
                Some(s) => cur = s.head,
                None => return false,
            }
            if cur == v {
                return true;
            }
        }
        false
    };
    let seq: Vec<usize> = c
        .steps
        .iter()
        .flatten()
        .map(|s| {
            if closed(s.tail) {
                pos[s.tail.index()]
            } else {
                pos[s.head.index()]
            }
        })
        .collect();
    inversion_parity(&seq)
}

fn sign_of(odd: usize) -> i128 {
    if odd % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Permanent and determinant of `L` and `A` as contributor sums.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DeterminantSums {
    pub perm_l: BigInt,
    pub det_l: BigInt,
    pub perm_a: BigInt,
    pub det_a: BigInt,
}

/// Evaluates all four contributor sums in one enumeration:
///
/// * `perm(L) = Σ (-1)^(oc+nc)` and `det(L) = Σ (-1)^pc` over contributors,
/// * `perm(A) = Σ (-1)^nc` and `det(A) = Σ (-1)^(ec+nc)` over strong ones.
///
/// Contributors with a 0-signed component contribute nothing.
pub fn contributor_sums(g: &OrientedHypergraph) -> DeterminantSums {
    // Totals are bounded by the enumeration length, so i128 cannot overflow.
    let (mut pl, mut dl, mut pa, mut da) = (0i128, 0i128, 0i128, 0i128);
    for c in enumerate_contributors(g) {
        let p = classify(g, &c);
        if p.is_zero() {
            continue;
        }
        pl += sign_of(p.oc + p.nc);
        dl += sign_of(p.pc);
        if p.backstep_count == 0 {
            pa += sign_of(p.nc);
            da += sign_of(p.ec + p.nc);
        }
    }
    DeterminantSums {
        perm_l: pl.into(),
        det_l: dl.into(),
        perm_a: pa.into(),
        det_a: da.into(),
    }
}

pub fn perm_l(g: &OrientedHypergraph) -> BigInt {
    contributor_sums(g).perm_l
}

pub fn det_l(g: &OrientedHypergraph) -> BigInt {
    contributor_sums(g).det_l
}

pub fn perm_a(g: &OrientedHypergraph) -> BigInt {
    let total: i128 = enumerate_strong_contributors(g)
        .map(|c| classify(g, &c))
        .filter(|p| !p.is_zero())
        .map(|p| sign_of(p.nc))
        .sum();
    total.into()
}

pub fn det_a(g: &OrientedHypergraph) -> BigInt {
    let total: i128 = enumerate_strong_contributors(g)
        .map(|c| classify(g, &c))
        .filter(|p| !p.is_zero())
        .map(|p| sign_of(p.ec + p.nc))
        .sum();
    total.into()
}

/// Permanents and determinants of the `(U;W)` minors of `L` and `A` as
/// sub-contributor sums.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MinorSums {
    /// `Σ (-1)^(on+nn)` over sub-contributors.
    pub perm_l: BigInt,
    /// `Σ ε(c)·(-1)^(on+nn)` over sub-contributors.
    pub det_l: BigInt,
    /// `Σ ε'(c)·(-1)^pc·(-1)^(op+np)`: the same determinant with the
    /// inversion sign restricted to path parts.
    pub det_l_by_paths: BigInt,
    /// `Σ (-1)^nn` over strong sub-contributors.
    pub perm_a: BigInt,
    /// `Σ ε(c)·(-1)^nn` over strong sub-contributors.
    pub det_a: BigInt,
}

/// Term contributed by one sub-contributor to each entry of [`MinorSums`]
/// (`None` for the adjacency entries when the sub-contributor has a
/// backstep).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorTerms {
    pub perm_l: i8,
    pub det_l: i8,
    pub det_l_by_paths: i8,
    pub perm_a: Option<i8>,
    pub det_a: Option<i8>,
}

pub fn minor_terms(c: &SubContributor, p: &ComponentProfile) -> MinorTerms {
    if p.is_zero() {
        return MinorTerms {
            perm_l: 0,
            det_l: 0,
            det_l_by_paths: 0,
            perm_a: (p.backstep_count == 0).then_some(0),
            det_a: (p.backstep_count == 0).then_some(0),
        };
    }
    let eps = inversion_sign(c);
    let perm_l = sign_of(p.on + p.nn) as i8;
    let strong = p.backstep_count == 0;
    MinorTerms {
        perm_l,
        det_l: eps * perm_l,
        det_l_by_paths: path_inversion_sign(c) * sign_of(p.pc + p.op + p.np) as i8,
        perm_a: strong.then(|| sign_of(p.nn) as i8),
        det_a: strong.then(|| eps * sign_of(p.nn) as i8),
    }
}

pub fn minor_sums(
    g: &OrientedHypergraph,
    struck_rows: &[VertexId],
    struck_cols: &[VertexId],
) -> Result<MinorSums> {
    let (mut pl, mut dl, mut dp, mut pa, mut da) = (0i128, 0i128, 0i128, 0i128, 0i128);
    for c in enumerate_sub_contributors(g, struck_rows, struck_cols)? {
        let p = classify(g, &c);
        let t = minor_terms(&c, &p);
        pl += t.perm_l as i128;
        dl += t.det_l as i128;
        dp += t.det_l_by_paths as i128;
        pa += t.perm_a.unwrap_or(0) as i128;
        da += t.det_a.unwrap_or(0) as i128;
    }
    Ok(MinorSums {
        perm_l: pl.into(),
        det_l: dl.into(),
        det_l_by_paths: dp.into(),
        perm_a: pa.into(),
        det_a: da.into(),
    })
}

pub fn minor_perm_l(
    g: &OrientedHypergraph,
    rows: &[VertexId],
    cols: &[VertexId],
) -> Result<BigInt> {
    Ok(minor_sums(g, rows, cols)?.perm_l)
}

pub fn minor_det_l(g: &OrientedHypergraph, rows: &[VertexId], cols: &[VertexId]) -> Result<BigInt> {
    Ok(minor_sums(g, rows, cols)?.det_l)
}

pub fn minor_perm_a(
    g: &OrientedHypergraph,
    rows: &[VertexId],
    cols: &[VertexId],
) -> Result<BigInt> {
    let total: i128 = enumerate_strong_sub_contributors(g, rows, cols)?
        .map(|c| (classify(g, &c), c))
        .filter(|(p, _)| !p.is_zero())
        .map(|(p, _)| sign_of(p.nn))
        .sum();
    Ok(total.into())
}

pub fn minor_det_a(g: &OrientedHypergraph, rows: &[VertexId], cols: &[VertexId]) -> Result<BigInt> {
    let total: i128 = enumerate_strong_sub_contributors(g, rows, cols)?
        .map(|c| (classify(g, &c), c))
        .filter(|(p, _)| !p.is_zero())
        .map(|(p, c)| inversion_sign(&c) as i128 * sign_of(p.nn))
        .sum();
    Ok(total.into())
}
