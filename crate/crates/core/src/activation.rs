//! Activation classes of bidirected graphs.
//!
//! Fixing a tail incidence at every vertex gives a class of contributors.
//! The all-backstep member is the minimum. Unpacking a backstep sends its
//! vertex along the other end of its edge, so the tail choice induces a
//! functional map on the vertices; every member is obtained by unpacking the
//! vertices of some subset of that map's cycles. The class is therefore the
//! boolean lattice on its cycles.
//!
//! Loops are fixed points of the functional map: activating one replaces a
//! backstep by a loop, and the head of that vertex stays put.

use std::fmt;

use num_bigint::BigInt;

use crate::contributor::{classify, Contributor, PreContributor};
use crate::error::{Error, Result};
use crate::hypergraph::{IncidenceId, OrientedHypergraph, VertexId, WeakWalk1};

/// Packs the adjacency (or loop) out of `v` into the backstep on its tail
/// incidence.
pub fn pack(g: &OrientedHypergraph, p: &PreContributor, v: VertexId) -> Result<PreContributor> {
    g.require_bidirected()?;
    let s = p.step(v);
    if s.is_backstep() {
        return Err(Error::AlreadyBackstep(g.vertex_name(v).to_string()));
    }
    let mut out = p.clone();
    out.replace_step(v, g.step(s.tail_incidence, s.tail_incidence)?);
    Ok(out)
}

/// Unpacks the backstep at `v` into the walk that leaves through the other
/// incidence of its edge. Well defined only because every edge has exactly
/// two incidences.
pub fn unpack(g: &OrientedHypergraph, p: &PreContributor, v: VertexId) -> Result<PreContributor> {
    g.require_bidirected()?;
    let s = p.step(v);
    if !s.is_backstep() {
        return Err(Error::NotBackstep(g.vertex_name(v).to_string()));
    }
    let mut out = p.clone();
    out.replace_step(v, g.step(s.tail_incidence, g.opposite(s.tail_incidence)?)?);
    Ok(out)
}

/// Subset of a class's cycles, one bit per cycle index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleSet(pub u64);

impl CycleSet {
    pub const EMPTY: CycleSet = CycleSet(0);

    pub fn full(k: usize) -> CycleSet {
        if k >= 64 {
            CycleSet(u64::MAX)
        } else {
            CycleSet((1u64 << k) - 1)
        }
    }

    pub fn single(c: usize) -> CycleSet {
        CycleSet(1 << c)
    }

    pub fn contains(self, c: usize) -> bool {
        self.0 >> c & 1 == 1
    }

    pub fn with(self, c: usize) -> CycleSet {
        CycleSet(self.0 | 1 << c)
    }

    pub fn without(self, c: usize) -> CycleSet {
        CycleSet(self.0 & !(1 << c))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: CycleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&c| self.contains(c))
    }

    /// Every subset of `self`, in increasing numeric order.
    pub fn subsets(self) -> impl Iterator<Item = CycleSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(CycleSet(cur))
        })
    }
}

impl fmt::Display for CycleSet {
    /// `{c1,c3}` with 1-based cycle numbers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "c{}", c + 1)?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivationClass {
    id: usize,
    tails: Vec<IncidenceId>,
    backsteps: Vec<WeakWalk1>,
    unpacked: Vec<WeakWalk1>,
    cycles: Vec<Vec<VertexId>>,
    cycle_of: Vec<Option<usize>>,
    cycle_signs: Vec<i8>,
}

impl ActivationClass {
    fn from_tails(g: &OrientedHypergraph, id: usize, tails: Vec<IncidenceId>) -> Result<Self> {
        let n = g.vertex_count();
        let mut backsteps = Vec::with_capacity(n);
        let mut unpacked = Vec::with_capacity(n);
        for &t in &tails {
            backsteps.push(g.step(t, t)?);
            unpacked.push(g.step(t, g.opposite(t)?)?);
        }
        let successor: Vec<usize> = unpacked.iter().map(|s| s.head.index()).collect();

        // cycles of the functional map, each listed from its smallest vertex
        let mut state = vec![0u8; n]; // 0 unseen, 1 on current trail, 2 done
        let mut cycle_of = vec![None; n];
        let mut cycles: Vec<Vec<VertexId>> = Vec::new();
        for start in 0..n {
            let mut trail = Vec::new();
            let mut cur = start;
            while state[cur] == 0 {
                state[cur] = 1;
                trail.push(cur);
                cur = successor[cur];
            }
            if state[cur] == 1 {
                let at = trail.iter().position(|&x| x == cur).expect("on trail");
                cycles.push(trail[at..].iter().map(|&x| VertexId(x)).collect());
            }
            for x in trail {
                state[x] = 2;
            }
        }
        for c in &mut cycles {
            let min_at = c
                .iter()
                .enumerate()
                .min_by_key(|(_, v)| **v)
                .map(|(k, _)| k)
                .unwrap_or(0);
            c.rotate_left(min_at);
        }
        cycles.sort();
        for (k, c) in cycles.iter().enumerate() {
            for v in c {
                cycle_of[v.index()] = Some(k);
            }
        }
        let cycle_signs = cycles
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| g.step_sign(&unpacked[v.index()]))
                    .product()
            })
            .collect();
        Ok(ActivationClass {
            id,
            tails,
            backsteps,
            unpacked,
            cycles,
            cycle_of,
            cycle_signs,
        })
    }

    /// Position in the deterministic class order.
    pub fn id(&self) -> usize {
        self.id
    }

    /// Tail incidence chosen at each vertex; identifies the class.
    pub fn tails(&self) -> &[IncidenceId] {
        &self.tails
    }

    /// Vertex each vertex is sent to when its backstep is unpacked.
    pub fn successor(&self, v: VertexId) -> VertexId {
        self.unpacked[v.index()].head
    }

    pub fn cycles(&self) -> &[Vec<VertexId>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle_of(&self, v: VertexId) -> Option<usize> {
        self.cycle_of[v.index()]
    }

    /// Product of edge signs around each cycle. A 2-cycle returning along
    /// one edge is always positive.
    pub fn cycle_signs(&self) -> &[i8] {
        &self.cycle_signs
    }

    pub fn all_cycles(&self) -> CycleSet {
        CycleSet::full(self.cycles.len())
    }

    pub fn member_count(&self) -> BigInt {
        BigInt::from(1) << self.cycles.len()
    }

    pub fn is_positive_circle_free(&self) -> bool {
        self.cycle_signs.iter().all(|&s| s == -1)
    }

    pub fn minimal(&self) -> Contributor {
        self.assemble(CycleSet::EMPTY)
    }

    pub fn maximal(&self) -> Contributor {
        self.assemble(self.all_cycles())
    }

    /// Member with exactly the cycles in `active` unpacked.
    pub fn member(&self, active: CycleSet) -> Result<Contributor> {
        if let Some(bad) = active.iter().find(|&c| c >= self.cycles.len()) {
            return Err(Error::UnknownCycle(bad));
        }
        Ok(self.assemble(active))
    }

    fn assemble(&self, active: CycleSet) -> Contributor {
        let steps = (0..self.tails.len())
            .map(|v| match self.cycle_of[v] {
                Some(c) if active.contains(c) => self.unpacked[v],
                _ => self.backsteps[v],
            })
            .collect();
        PreContributor::from_steps_unchecked(steps)
            .into_contributor()
            .expect("cycle unions are permutations")
    }

    /// Active-cycle set of a contributor in this class, if it belongs here.
    pub fn locate(&self, c: &Contributor) -> Option<CycleSet> {
        let mut active = CycleSet::EMPTY;
        for (v, s) in c.steps().iter().enumerate() {
            if s.tail_incidence != self.tails[v] {
                return None;
            }
            if !s.is_backstep() {
                active = active.with(self.cycle_of[v]?);
            }
        }
        (self.assemble(active) == *c).then_some(active)
    }

    /// Cycle whose activation moves the head of `u` away from `u`: the cycle
    /// through `u` unless that cycle is a loop.
    fn moving_cycle(&self, u: VertexId) -> Option<usize> {
        self.cycle_of[u.index()].filter(|&c| self.cycles[c].len() >= 2)
    }

    /// The `(u;w)`-cut: members whose walk out of `u` ends at `w`.
    ///
    /// For `u = w` this is the principal lower ideal below the member with
    /// every cycle active except the one moving `u`. For `u != w` it is the
    /// principal upper ideal above the member activating only `u`'s cycle,
    /// and empty unless that cycle sends `u` to `w`.
    pub fn cut(&self, u: VertexId, w: VertexId) -> OrderIdealCut {
        let moving = self.moving_cycle(u);
        if u == w {
            let generator = match moving {
                Some(c) => self.all_cycles().without(c),
                None => self.all_cycles(),
            };
            OrderIdealCut {
                class: self.id,
                u,
                w,
                kind: CutKind::Lower,
                generator: Some(generator),
                members: generator.subsets().collect(),
            }
        } else if let Some(c) = moving.filter(|_| self.successor(u) == w) {
            let generator = CycleSet::single(c);
            let members = self
                .all_cycles()
                .without(c)
                .subsets()
                .map(|s| s.with(c))
                .collect();
            OrderIdealCut {
                class: self.id,
                u,
                w,
                kind: CutKind::Upper,
                generator: Some(generator),
                members,
            }
        } else {
            OrderIdealCut {
                class: self.id,
                u,
                w,
                kind: CutKind::Empty,
                generator: None,
                members: Vec::new(),
            }
        }
    }

    /// Members satisfying every constraint `head(us[i]) = ws[i]`, in
    /// increasing cycle-set order. Constraint order does not matter.
    pub fn vector_cut(&self, us: &[VertexId], ws: &[VertexId]) -> Result<Vec<CycleSet>> {
        if us.len() != ws.len() {
            return Err(Error::SizeMismatch {
                rows: us.len(),
                cols: ws.len(),
            });
        }
        let mut on = CycleSet::EMPTY;
        let mut off = CycleSet::EMPTY;
        for (&u, &w) in us.iter().zip(ws) {
            match self.moving_cycle(u) {
                None if u == w => {}
                None => return Ok(Vec::new()),
                Some(c) if u == w => off = off.with(c),
                Some(c) if self.successor(u) == w => on = on.with(c),
                Some(_) => return Ok(Vec::new()),
            }
        }
        if on.0 & off.0 != 0 {
            return Ok(Vec::new());
        }
        let free = CycleSet(self.all_cycles().0 & !on.0 & !off.0);
        let mut out: Vec<CycleSet> = free.subsets().map(|s| CycleSet(s.0 | on.0)).collect();
        out.sort();
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutKind {
    Lower,
    Upper,
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderIdealCut {
    pub class: usize,
    pub u: VertexId,
    pub w: VertexId,
    pub kind: CutKind,
    /// Top element of a lower cut or bottom element of an upper cut.
    pub generator: Option<CycleSet>,
    pub members: Vec<CycleSet>,
}

impl OrderIdealCut {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn require_activation_input(g: &OrientedHypergraph) -> Result<()> {
    g.require_bidirected()?;
    if g.vertex_count() > 64 {
        return Err(Error::TooLarge(g.vertex_count()));
    }
    // in a bidirected graph a component without adjacencies is an isolated
    // vertex
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(Error::AdjacencyFree(g.vertex_name(v).to_string()));
    }
    Ok(())
}

/// Lazily walks every tail-incidence choice vector in lexicographic order.
#[derive(Debug, Clone)]
pub struct ActivationClasses<'g> {
    g: &'g OrientedHypergraph,
    odometer: Vec<usize>,
    next_id: usize,
    done: bool,
}

impl Iterator for ActivationClasses<'_> {
    type Item = ActivationClass;

    fn next(&mut self) -> Option<ActivationClass> {
        if self.done {
            return None;
        }
        let g = self.g;
        let tails = self
            .odometer
            .iter()
            .enumerate()
            .map(|(v, &k)| g.incidences_at(VertexId(v))[k])
            .collect();
        let class = ActivationClass::from_tails(g, self.next_id, tails).expect("validated input");
        self.next_id += 1;
        // advance, last vertex fastest
        let mut v = self.odometer.len();
        loop {
            if v == 0 {
                self.done = true;
                break;
            }
            v -= 1;
            self.odometer[v] += 1;
            if self.odometer[v] < g.degree(VertexId(v)) {
                break;
            }
            self.odometer[v] = 0;
        }
        Some(class)
    }
}

pub fn activation_class_iter(g: &OrientedHypergraph) -> Result<ActivationClasses<'_>> {
    require_activation_input(g)?;
    Ok(ActivationClasses {
        g,
        odometer: vec![0; g.vertex_count()],
        next_id: 0,
        done: false,
    })
}

/// One class per tail-incidence choice vector, `Π deg(v)` in total.
pub fn activation_classes(g: &OrientedHypergraph) -> Result<Vec<ActivationClass>> {
    Ok(activation_class_iter(g)?.collect())
}

/// Class containing a given contributor.
pub fn class_of(g: &OrientedHypergraph, c: &Contributor) -> Result<ActivationClass> {
    require_activation_input(g)?;
    let tails = c.steps().iter().map(|s| s.tail_incidence).collect();
    ActivationClass::from_tails(g, usize::MAX, tails)
}

/// `det(L)` as `Σ 2^nc` over the maximal members of the classes in which
/// every cycle is negative. Classes with a positive cycle cancel to zero.
pub fn det_l_via_maximal_negatives(g: &OrientedHypergraph) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for class in activation_class_iter(g)? {
        if class.is_positive_circle_free() {
            total += BigInt::from(1) << classify(g, &class.maximal()).nc;
        }
    }
    Ok(total)
}

/// Contributors reachable from `c` by activating one more circle: a minimal
/// set of unpackings whose result is again a contributor with one extra
/// circle. Built only from [`unpack`] and [`classify`], independently of the
/// cycle bookkeeping in [`ActivationClass`].
pub fn activation_successors(g: &OrientedHypergraph, c: &Contributor) -> Result<Vec<Contributor>> {
    let backs = c.backstep_vertices();
    if backs.len() > 20 {
        return Err(Error::TooLarge(backs.len()));
    }
    let tc = classify(g, c).tc;
    let mut hits: Vec<(u32, Contributor)> = Vec::new();
    for mask in 1u32..(1 << backs.len()) {
        let mut p = c.as_pre().clone();
        for (k, &v) in backs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                p = unpack(g, &p, v)?;
            }
        }
        if let Ok(d) = p.into_contributor() {
            if classify(g, &d).tc == tc + 1 {
                hits.push((mask, d));
            }
        }
    }
    let masks: Vec<u32> = hits.iter().map(|(m, _)| *m).collect();
    Ok(hits
        .into_iter()
        .filter(|(m, _)| !masks.iter().any(|&o| o != *m && o & m == o))
        .map(|(_, d)| d)
        .collect())
}
