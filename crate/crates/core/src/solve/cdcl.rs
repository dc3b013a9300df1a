//! Conflict-driven clause learning solver.
//!
//! Standard architecture: two-literal watching for unit propagation, 1-UIP
//! conflict analysis with clause learning and cheap self-subsumption
//! minimization, exponential VSIDS variable activities with an indexed max
//! heap, phase saving, Luby restarts, and activity-driven learnt-clause
//! deletion. Search order is fully determined by the formula and the seed.

use super::{SolveStats, SolverOutcome, SolverStatus};
use crate::encode::CnfFormula;
use crate::util::XorShift64;
use std::time::{Duration, Instant};

type Lit = u32; // var << 1 | sign, sign 1 = negated
type ClauseRef = u32;

const NO_REASON: ClauseRef = u32::MAX;

#[inline]
fn lit_from_dimacs(l: i32) -> Lit {
    let var = (l.unsigned_abs() - 1) << 1;
    if l < 0 {
        var | 1
    } else {
        var
    }
}

#[inline]
fn var_of(l: Lit) -> usize {
    (l >> 1) as usize
}

#[inline]
fn negate(l: Lit) -> Lit {
    l ^ 1
}

#[inline]
fn is_pos(l: Lit) -> bool {
    l & 1 == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Value {
    Unassigned,
    True,
    False,
}

struct Clause {
    lits: Vec<Lit>,
    activity: f32,
    learnt: bool,
    deleted: bool,
}

#[derive(Clone, Copy)]
struct Watcher {
    clause: ClauseRef,
    blocker: Lit,
}

/// Indexed max-heap over variable activities; ties break toward the smaller
/// variable index, which keeps runs reproducible.
struct VarHeap {
    heap: Vec<u32>,
    position: Vec<i32>,
}

impl VarHeap {
    fn new(n: usize) -> Self {
        VarHeap {
            heap: (0..n as u32).collect(),
            position: (0..n as i32).collect(),
        }
    }

    fn build(&mut self, activity: &[f64]) {
        for i in (0..self.heap.len() / 2).rev() {
            self.sift_down(i, activity);
        }
    }

    fn less(a: u32, b: u32, activity: &[f64]) -> bool {
        // "less" = higher priority
        let (aa, ab) = (activity[a as usize], activity[b as usize]);
        aa > ab || (aa == ab && a < b)
    }

    fn contains(&self, v: usize) -> bool {
        self.position[v] >= 0
    }

    fn sift_up(&mut self, mut i: usize, activity: &[f64]) {
        let item = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            if Self::less(item, self.heap[parent], activity) {
                self.heap[i] = self.heap[parent];
                self.position[self.heap[i] as usize] = i as i32;
                i = parent;
            } else {
                break;
            }
        }
        self.heap[i] = item;
        self.position[item as usize] = i as i32;
    }

    fn sift_down(&mut self, mut i: usize, activity: &[f64]) {
        let item = self.heap[i];
        loop {
            let left = 2 * i + 1;
            if left >= self.heap.len() {
                break;
            }
            let right = left + 1;
            let child = if right < self.heap.len()
                && Self::less(self.heap[right], self.heap[left], activity)
            {
                right
            } else {
                left
            };
            if Self::less(self.heap[child], item, activity) {
                self.heap[i] = self.heap[child];
                self.position[self.heap[i] as usize] = i as i32;
                i = child;
            } else {
                break;
            }
        }
        self.heap[i] = item;
        self.position[item as usize] = i as i32;
    }

    fn push(&mut self, v: usize, activity: &[f64]) {
        if self.contains(v) {
            return;
        }
        self.position[v] = self.heap.len() as i32;
        self.heap.push(v as u32);
        self.sift_up(self.heap.len() - 1, activity);
    }

    fn pop(&mut self, activity: &[f64]) -> Option<usize> {
        let top = *self.heap.first()?;
        self.position[top as usize] = -1;
        let last = self.heap.pop().unwrap();
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.position[last as usize] = 0;
            self.sift_down(0, activity);
        }
        Some(top as usize)
    }

    fn on_bump(&mut self, v: usize, activity: &[f64]) {
        if self.contains(v) {
            self.sift_up(self.position[v] as usize, activity);
        }
    }
}

pub(crate) struct Cdcl {
    num_vars: usize,
    clauses: Vec<Clause>,
    watches: Vec<Vec<Watcher>>,
    assign: Vec<Value>,
    level: Vec<u32>,
    reason: Vec<ClauseRef>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    heap: VarHeap,
    polarity: Vec<bool>,
    seen: Vec<bool>,
    cla_inc: f32,
    learnt_count: usize,
    max_learnts: f64,
    rng: XorShift64,
    root_conflict: bool,
    stats: SolveStats,
}

const VAR_DECAY: f64 = 1.0 / 0.95;
const CLA_DECAY: f32 = 1.0 / 0.999;
const RESTART_BASE: u64 = 100;
const RANDOM_DECISION_FREQ: f64 = 0.02;

impl Cdcl {
    pub(crate) fn new(formula: &CnfFormula, seed: u64) -> Self {
        let n = formula.variable_count();
        let mut rng = XorShift64::new(seed.wrapping_add(0x5eed));
        // tiny seed-dependent jitter diversifies initial branching
        let activity: Vec<f64> = (0..n).map(|_| rng.next_f64() * 1e-9).collect();
        let mut heap = VarHeap::new(n);
        heap.build(&activity);
        let mut solver = Cdcl {
            num_vars: n,
            clauses: Vec::with_capacity(formula.clause_count()),
            watches: vec![Vec::new(); 2 * n],
            assign: vec![Value::Unassigned; n],
            level: vec![0; n],
            reason: vec![NO_REASON; n],
            trail: Vec::with_capacity(n),
            trail_lim: Vec::new(),
            qhead: 0,
            activity,
            var_inc: 1.0,
            heap,
            polarity: vec![false; n],
            seen: vec![false; n],
            cla_inc: 1.0,
            learnt_count: 0,
            max_learnts: (formula.clause_count() as f64 / 3.0).max(1000.0),
            rng,
            root_conflict: false,
            stats: SolveStats::default(),
        };
        for clause in formula.clauses() {
            solver.add_input_clause(clause);
            if solver.root_conflict {
                break;
            }
        }
        solver
    }

    fn add_input_clause(&mut self, lits: &[i32]) {
        match lits.len() {
            0 => self.root_conflict = true,
            1 => {
                let l = lit_from_dimacs(lits[0]);
                match self.value(l) {
                    Value::True => {}
                    Value::False => self.root_conflict = true,
                    Value::Unassigned => self.enqueue(l, NO_REASON),
                }
            }
            _ => {
                let lits: Vec<Lit> = lits.iter().map(|&l| lit_from_dimacs(l)).collect();
                self.attach(Clause {
                    lits,
                    activity: 0.0,
                    learnt: false,
                    deleted: false,
                });
            }
        }
    }

    fn attach(&mut self, clause: Clause) -> ClauseRef {
        let idx = self.clauses.len() as ClauseRef;
        let (w0, w1) = (clause.lits[0], clause.lits[1]);
        self.watches[w0 as usize].push(Watcher {
            clause: idx,
            blocker: w1,
        });
        self.watches[w1 as usize].push(Watcher {
            clause: idx,
            blocker: w0,
        });
        if clause.learnt {
            self.learnt_count += 1;
        }
        self.clauses.push(clause);
        idx
    }

    #[inline]
    fn value(&self, l: Lit) -> Value {
        match self.assign[var_of(l)] {
            Value::Unassigned => Value::Unassigned,
            Value::True => {
                if is_pos(l) {
                    Value::True
                } else {
                    Value::False
                }
            }
            Value::False => {
                if is_pos(l) {
                    Value::False
                } else {
                    Value::True
                }
            }
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn enqueue(&mut self, l: Lit, reason: ClauseRef) {
        debug_assert_eq!(self.value(l), Value::Unassigned);
        let v = var_of(l);
        self.assign[v] = if is_pos(l) { Value::True } else { Value::False };
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    fn propagate(&mut self) -> ClauseRef {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = negate(p);
            let mut watchers = std::mem::take(&mut self.watches[false_lit as usize]);
            let mut keep = 0;
            let mut conflict = NO_REASON;
            let mut i = 0;
            while i < watchers.len() {
                let w = watchers[i];
                i += 1;
                self.stats.propagations += 1;
                if self.value(w.blocker) == Value::True {
                    watchers[keep] = w;
                    keep += 1;
                    continue;
                }
                let ci = w.clause as usize;
                // make lits[1] the falsified watch
                {
                    let clause = &mut self.clauses[ci];
                    if clause.lits[0] == false_lit {
                        clause.lits.swap(0, 1);
                    }
                    debug_assert_eq!(clause.lits[1], false_lit);
                }
                let first = self.clauses[ci].lits[0];
                if first != w.blocker && self.value(first) == Value::True {
                    watchers[keep] = Watcher {
                        clause: w.clause,
                        blocker: first,
                    };
                    keep += 1;
                    continue;
                }
                let mut found_new_watch = usize::MAX;
                for j in 2..self.clauses[ci].lits.len() {
                    if self.value(self.clauses[ci].lits[j]) != Value::False {
                        found_new_watch = j;
                        break;
                    }
                }
                if found_new_watch != usize::MAX {
                    let clause = &mut self.clauses[ci];
                    clause.lits.swap(1, found_new_watch);
                    let new_watch = clause.lits[1];
                    self.watches[new_watch as usize].push(Watcher {
                        clause: w.clause,
                        blocker: first,
                    });
                    continue; // watcher moves away from this list
                }
                // unit or conflict
                watchers[keep] = Watcher {
                    clause: w.clause,
                    blocker: first,
                };
                keep += 1;
                if self.value(first) == Value::False {
                    conflict = w.clause;
                    // keep the remaining watchers untouched
                    while i < watchers.len() {
                        watchers[keep] = watchers[i];
                        keep += 1;
                        i += 1;
                    }
                    self.qhead = self.trail.len();
                    break;
                }
                self.enqueue(first, w.clause);
            }
            watchers.truncate(keep);
            self.watches[false_lit as usize] = watchers;
            if conflict != NO_REASON {
                return conflict;
            }
        }
        NO_REASON
    }

    fn bump_var(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in self.activity.iter_mut() {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        self.heap.on_bump(v, &self.activity);
    }

    fn bump_clause(&mut self, ci: usize) {
        if !self.clauses[ci].learnt {
            return;
        }
        self.clauses[ci].activity += self.cla_inc;
        if self.clauses[ci].activity > 1e20 {
            for c in self.clauses.iter_mut().filter(|c| c.learnt) {
                c.activity *= 1e-20;
            }
            self.cla_inc *= 1e-20;
        }
    }

    /// 1-UIP learning; returns the learnt clause (asserting literal first)
    /// and the backjump level.
    fn analyze(&mut self, mut conflict: ClauseRef) -> (Vec<Lit>, u32) {
        let mut learnt: Vec<Lit> = vec![0];
        let mut path_count = 0u32;
        let mut p: Option<Lit> = None;
        let mut index = self.trail.len();

        loop {
            debug_assert_ne!(conflict, NO_REASON);
            self.bump_clause(conflict as usize);
            let start = usize::from(p.is_some());
            for j in start..self.clauses[conflict as usize].lits.len() {
                let q = self.clauses[conflict as usize].lits[j];
                let v = var_of(q);
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.bump_var(v);
                    if self.level[v] >= self.decision_level() {
                        path_count += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            // walk back to the next marked trail literal
            loop {
                index -= 1;
                if self.seen[var_of(self.trail[index])] {
                    break;
                }
            }
            let lit = self.trail[index];
            let v = var_of(lit);
            self.seen[v] = false;
            path_count -= 1;
            if path_count == 0 {
                learnt[0] = negate(lit);
                break;
            }
            p = Some(lit);
            conflict = self.reason[v];
        }

        // cheap minimization: drop literals whose reason is fully subsumed
        let keep_mask: Vec<bool> = {
            for &l in &learnt[1..] {
                self.seen[var_of(l)] = true;
            }
            learnt
                .iter()
                .enumerate()
                .map(|(i, &l)| {
                    if i == 0 {
                        return true;
                    }
                    let r = self.reason[var_of(l)];
                    if r == NO_REASON {
                        return true;
                    }
                    !self.clauses[r as usize].lits.iter().all(|&q| {
                        let v = var_of(q);
                        v == var_of(l) || self.seen[v] || self.level[v] == 0
                    })
                })
                .collect()
        };
        for &l in &learnt[1..] {
            self.seen[var_of(l)] = false;
        }
        let mut out = Vec::with_capacity(learnt.len());
        for (i, &l) in learnt.iter().enumerate() {
            if keep_mask[i] {
                out.push(l);
            }
        }

        let backjump = if out.len() == 1 {
            0
        } else {
            // second-highest level, swapped into the watch slot
            let mut max_i = 1;
            for i in 2..out.len() {
                if self.level[var_of(out[i])] > self.level[var_of(out[max_i])] {
                    max_i = i;
                }
            }
            out.swap(1, max_i);
            self.level[var_of(out[1])]
        };
        (out, backjump)
    }

    fn cancel_until(&mut self, target: u32) {
        if self.decision_level() <= target {
            return;
        }
        let limit = self.trail_lim[target as usize];
        for i in (limit..self.trail.len()).rev() {
            let l = self.trail[i];
            let v = var_of(l);
            self.polarity[v] = is_pos(l);
            self.assign[v] = Value::Unassigned;
            self.reason[v] = NO_REASON;
            self.heap.push(v, &self.activity);
        }
        self.trail.truncate(limit);
        self.trail_lim.truncate(target as usize);
        self.qhead = self.trail.len();
    }

    fn decide(&mut self) -> bool {
        // occasional random decision, still seed-deterministic
        let pick_random = self.rng.next_f64() < RANDOM_DECISION_FREQ;
        let v = if pick_random {
            let unassigned: Vec<usize> = (0..self.num_vars)
                .filter(|&v| self.assign[v] == Value::Unassigned)
                .collect();
            if unassigned.is_empty() {
                None
            } else {
                Some(unassigned[self.rng.below(unassigned.len())])
            }
        } else {
            loop {
                match self.heap.pop(&self.activity) {
                    Some(v) if self.assign[v] == Value::Unassigned => break Some(v),
                    Some(_) => continue,
                    None => break None,
                }
            }
        };
        let Some(v) = v else { return false };
        self.stats.decisions += 1;
        self.trail_lim.push(self.trail.len());
        let lit = ((v as u32) << 1) | u32::from(!self.polarity[v]);
        self.enqueue(lit, NO_REASON);
        true
    }

    fn reduce_db(&mut self) {
        let mut candidates: Vec<usize> = (0..self.clauses.len())
            .filter(|&i| {
                let c = &self.clauses[i];
                c.learnt && !c.deleted && c.lits.len() > 2 && !self.is_reason(i)
            })
            .collect();
        candidates.sort_by(|&a, &b| {
            self.clauses[a]
                .activity
                .partial_cmp(&self.clauses[b].activity)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
        for &i in candidates.iter().take(candidates.len() / 2) {
            self.clauses[i].deleted = true;
            self.learnt_count -= 1;
        }
        // rebuild the watch lists without the deleted clauses
        for w in self.watches.iter_mut() {
            w.clear();
        }
        for i in 0..self.clauses.len() {
            if self.clauses[i].deleted {
                continue;
            }
            let (w0, w1) = (self.clauses[i].lits[0], self.clauses[i].lits[1]);
            self.watches[w0 as usize].push(Watcher {
                clause: i as ClauseRef,
                blocker: w1,
            });
            self.watches[w1 as usize].push(Watcher {
                clause: i as ClauseRef,
                blocker: w0,
            });
        }
    }

    fn is_reason(&self, ci: usize) -> bool {
        self.clauses[ci]
            .lits
            .first()
            .is_some_and(|&l| self.reason[var_of(l)] == ci as ClauseRef && self.value(l) == Value::True)
    }

    fn luby(mut x: u64) -> u64 {
        // sequence 1 1 2 1 1 2 4 ...
        let mut size = 1u64;
        let mut seq = 0u32;
        while size < x + 1 {
            seq += 1;
            size = 2 * size + 1;
        }
        while size - 1 != x {
            size = (size - 1) / 2;
            seq -= 1;
            x %= size;
        }
        1u64 << seq
    }

    pub(crate) fn solve(
        &mut self,
        max_conflicts: Option<u64>,
        max_wall: Option<Duration>,
    ) -> SolverOutcome {
        let start = Instant::now();
        let unknown = |stats: &SolveStats| SolverOutcome {
            status: SolverStatus::Unknown,
            model: None,
            stats: stats.clone(),
        };
        if self.root_conflict {
            return SolverOutcome {
                status: SolverStatus::Unsat,
                model: None,
                stats: self.stats.clone(),
            };
        }
        let mut restart_num = 0u64;
        let mut conflicts_in_restart = 0u64;
        let mut restart_limit = RESTART_BASE * Self::luby(restart_num);
        loop {
            let conflict = self.propagate();
            if conflict != NO_REASON {
                self.stats.conflicts += 1;
                conflicts_in_restart += 1;
                if self.decision_level() == 0 {
                    return SolverOutcome {
                        status: SolverStatus::Unsat,
                        model: None,
                        stats: self.stats.clone(),
                    };
                }
                let (learnt, backjump) = self.analyze(conflict);
                self.cancel_until(backjump);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], NO_REASON);
                } else {
                    let asserting = learnt[0];
                    let cref = self.attach(Clause {
                        lits: learnt,
                        activity: self.cla_inc,
                        learnt: true,
                        deleted: false,
                    });
                    self.enqueue(asserting, cref);
                }
                self.var_inc *= VAR_DECAY;
                self.cla_inc *= CLA_DECAY;

                if let Some(max) = max_conflicts {
                    if self.stats.conflicts >= max {
                        return unknown(&self.stats);
                    }
                }
                if self.stats.conflicts % 1024 == 0 {
                    if let Some(max) = max_wall {
                        if start.elapsed() >= max {
                            return unknown(&self.stats);
                        }
                    }
                }
            } else {
                if conflicts_in_restart >= restart_limit {
                    restart_num += 1;
                    conflicts_in_restart = 0;
                    restart_limit = RESTART_BASE * Self::luby(restart_num);
                    self.stats.restarts += 1;
                    self.cancel_until(0);
                    continue;
                }
                if self.learnt_count as f64 > self.max_learnts {
                    self.reduce_db();
                    self.max_learnts *= 1.5;
                }
                if !self.decide() {
                    // full assignment
                    let model: Vec<bool> = (0..self.num_vars)
                        .map(|v| self.assign[v] == Value::True)
                        .collect();
                    return SolverOutcome {
                        status: SolverStatus::Sat,
                        model: Some(model),
                        stats: self.stats.clone(),
                    };
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn luby_sequence_prefix() {
        let expect = [1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(Cdcl::luby(i as u64), e, "luby({i})");
        }
    }

    #[test]
    fn pigeonhole_three_into_two_is_unsat() {
        // vars p(i,j) = hole j for pigeon i; i in 0..3, j in 0..2
        let mut f = CnfFormula::new(6);
        let v = |i: usize, j: usize| (i * 2 + j + 1) as i32;
        for i in 0..3 {
            f.add_clause(vec![v(i, 0), v(i, 1)]).unwrap();
        }
        for j in 0..2 {
            for a in 0..3 {
                for b in a + 1..3 {
                    f.add_clause(vec![-v(a, j), -v(b, j)]).unwrap();
                }
            }
        }
        let outcome = super::super::solve_builtin(&f, &Default::default());
        assert_eq!(outcome.status, SolverStatus::Unsat);
    }

    #[test]
    fn simple_chain_propagation() {
        let mut f = CnfFormula::new(4);
        f.add_clause(vec![1]).unwrap();
        f.add_clause(vec![-1, 2]).unwrap();
        f.add_clause(vec![-2, 3]).unwrap();
        f.add_clause(vec![-3, 4]).unwrap();
        let outcome = super::super::solve_builtin(&f, &Default::default());
        assert_eq!(outcome.status, SolverStatus::Sat);
        assert_eq!(outcome.model, Some(vec![true; 4]));
    }
}
