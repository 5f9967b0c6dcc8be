//! Occurrence enumeration for one- and two-variable patterns on long words.
//!
//! An occurrence is fixed by its start and the two image lengths. Instead of
//! scanning all such triples, enumeration is driven by one *anchor*: a pair of
//! consecutive copies of the same variable, separated only by copies of the
//! other variable. The anchor relation (square, even palindrome, repeat or
//! mirrored repeat with a gap) is answered by LCE queries, and pins down all
//! but at most one free length. The anchor with the smallest estimated work
//! on the given word is chosen; every remaining constraint is then checked in
//! constant time per copy.

use std::cell::Cell;
use std::ops::ControlFlow;

use super::backtrack::Slot;
use super::index::LceIndex;
use crate::pattern::PatLetter;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub start: usize,
    pub lens: [usize; 2],
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum AnchorKind {
    /// `x x^R`
    Palindrome,
    /// `x x`
    Square,
    /// `x y^m x`
    Repeat { gap: usize },
    /// `x y^m x^R`
    Mirror { gap: usize },
}

#[derive(Clone, Copy, Debug)]
struct Anchor {
    var: usize,
    // pattern index of the left copy
    left: usize,
    kind: AnchorKind,
}

pub(crate) struct Planner<'a> {
    idx: &'a LceIndex,
    n: usize,
    pattern: &'a [PatLetter],
    vars: usize,
    counts: [usize; 2],
    first: [usize; 2],
    before: Vec<[usize; 2]>,
}

impl<'a> Planner<'a> {
    /// `pattern` must use one or two variables, numbered from 0.
    pub fn new(idx: &'a LceIndex, pattern: &'a [PatLetter], vars: usize) -> Self {
        assert!((1..=2).contains(&vars));
        let mut counts = [0; 2];
        let mut first = [usize::MAX; 2];
        let mut before = Vec::with_capacity(pattern.len());
        for (k, p) in pattern.iter().enumerate() {
            before.push(counts);
            let v = p.var as usize;
            if counts[v] == 0 {
                first[v] = k;
            }
            counts[v] += 1;
        }
        Planner {
            idx,
            n: idx.len(),
            pattern,
            vars,
            counts,
            first,
            before,
        }
    }

    pub fn total_len(&self, lens: [usize; 2]) -> usize {
        self.counts[0] * lens[0] + self.counts[1] * lens[1]
    }

    fn offset(&self, k: usize, lens: [usize; 2]) -> usize {
        self.before[k][0] * lens[0] + self.before[k][1] * lens[1]
    }

    /// Verifies every copy against the first copy of its variable.
    pub fn check(&self, c: Candidate) -> bool {
        if c.start + self.total_len(c.lens) > self.n {
            return false;
        }
        for (k, p) in self.pattern.iter().enumerate() {
            let v = p.var as usize;
            let fk = self.first[v];
            if k == fk {
                continue;
            }
            let len = c.lens[v];
            let head = c.start + self.offset(fk, c.lens);
            let here = c.start + self.offset(k, c.lens);
            let ok = if p.reversed == self.pattern[fk].reversed {
                self.idx.forward(head, here) >= len
            } else {
                self.idx.mirror(head + len - 1, here) >= len
            };
            if !ok {
                return false;
            }
        }
        true
    }

    pub fn slots(&self, c: Candidate) -> Vec<Option<Slot>> {
        (0..self.vars)
            .map(|v| {
                let fk = self.first[v];
                Some(Slot {
                    pos: c.start + self.offset(fk, c.lens),
                    len: c.lens[v],
                    reversed: self.pattern[fk].reversed,
                })
            })
            .collect()
    }

    fn anchors(&self) -> Vec<Anchor> {
        let mut out = Vec::new();
        for var in 0..self.vars {
            let copies: Vec<usize> = (0..self.pattern.len())
                .filter(|&k| self.pattern[k].var as usize == var)
                .collect();
            for pair in copies.windows(2) {
                let (i, j) = (pair[0], pair[1]);
                let same = self.pattern[i].reversed == self.pattern[j].reversed;
                let gap = j - i - 1;
                let kind = match (gap, same) {
                    (0, false) => AnchorKind::Palindrome,
                    (0, true) => AnchorKind::Square,
                    (gap, true) => AnchorKind::Repeat { gap },
                    (gap, false) => AnchorKind::Mirror { gap },
                };
                out.push(Anchor {
                    var,
                    left: i,
                    kind,
                });
            }
        }
        out
    }

    /// Rough count of elementary operations for enumerating from `a`.
    fn estimate(&self, a: &Anchor) -> f64 {
        let n = self.n as f64;
        let completion = if self.vars == 2 && matches!(a.kind, AnchorKind::Palindrome | AnchorKind::Square) {
            let other = 1 - a.var;
            n / (2.0 * self.counts[other] as f64)
        } else {
            1.0
        };
        match a.kind {
            AnchorKind::Palindrome => {
                let arms: usize = (1..self.n).map(|c| self.idx.mirror(c - 1, c)).sum();
                n + arms as f64 * completion
            }
            _ => {
                let rows = self.n.min(32);
                let mut sampled = 0usize;
                for r in 0..rows {
                    let t = ((r * self.n) / rows + r % 5).min(self.n - 1);
                    let _ = self.row(a, t, &mut |_| {
                        sampled += 1;
                        ControlFlow::Continue(())
                    });
                }
                let survivors = sampled as f64 * n / rows as f64;
                let queries = match a.kind {
                    AnchorKind::Mirror { gap } => n * n / (2.0 * gap as f64),
                    AnchorKind::Square => n * n / 4.0,
                    _ => n * n / 2.0,
                };
                queries + survivors * completion
            }
        }
    }

    /// Anchor instances `(left copy position, anchored length, other length if fixed)`
    /// whose left copy starts (or, for mirrored anchors, ends) at row `t`.
    fn row<F>(&self, a: &Anchor, t: usize, emit: &mut F) -> ControlFlow<()>
    where
        F: FnMut((usize, usize, Option<usize>)) -> ControlFlow<()>,
    {
        let n = self.n;
        match a.kind {
            AnchorKind::Palindrome => {
                // t is the centre: copies are w[t-l..t) and w[t..t+l)
                if t == 0 {
                    return ControlFlow::Continue(());
                }
                let arm = self.idx.mirror(t - 1, t);
                for l in 1..=arm {
                    emit((t - l, l, None))?;
                }
            }
            AnchorKind::Square => {
                for l in 1..=(n - t) / 2 {
                    if self.idx.forward(t, t + l) >= l {
                        emit((t, l, None))?;
                    }
                }
            }
            AnchorKind::Repeat { gap } => {
                for d in gap + 1..n - t {
                    let lce = self.idx.forward(t, t + d);
                    if lce == 0 {
                        continue;
                    }
                    let max_l = lce.min(d - gap);
                    // d = l + gap * other, other >= 1
                    let first_l = match (d % gap, gap) {
                        (_, 1) => 1,
                        (r, _) => {
                            if r == 0 {
                                gap
                            } else {
                                r
                            }
                        }
                    };
                    let mut l = first_l;
                    while l <= max_l {
                        emit((t, l, Some((d - l) / gap)))?;
                        l += gap;
                    }
                }
            }
            AnchorKind::Mirror { gap } => {
                // t is the last position of the left copy
                let mut g = gap;
                while t + 1 + g < n {
                    let arm = self.idx.mirror(t, t + 1 + g).min(t + 1);
                    for l in 1..=arm {
                        emit((t + 1 - l, l, Some(g / gap)))?;
                    }
                    g += gap;
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Extends an anchor instance to full candidates, skipping any whose
    /// start is not below `bound`.
    fn complete<F>(
        &self,
        a: &Anchor,
        inst: (usize, usize, Option<usize>),
        bound: &Cell<usize>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(Candidate) -> ControlFlow<()>,
    {
        let (pos, l, other) = inst;
        let mut lens = [0; 2];
        lens[a.var] = l;
        // Some(..) while the candidate fits; lengths only grow, so None ends a loop
        let try_lens = |lens: [usize; 2], visit: &mut F| -> Option<ControlFlow<()>> {
            let off = self.offset(a.left, lens);
            if off > pos {
                return None;
            }
            let start = pos - off;
            if start + self.total_len(lens) > self.n {
                return None;
            }
            let c = Candidate { start, lens };
            Some(if start < bound.get() && self.check(c) {
                visit(c)
            } else {
                ControlFlow::Continue(())
            })
        };
        if self.vars == 1 {
            return try_lens(lens, visit).unwrap_or(ControlFlow::Continue(()));
        }
        let o = 1 - a.var;
        if let Some(lo) = other {
            lens[o] = lo;
            return try_lens(lens, visit).unwrap_or(ControlFlow::Continue(()));
        }
        // start = pos - fixed - per * lo
        let fixed = self.before[a.left][a.var] * l;
        let per = self.before[a.left][o];
        if fixed > pos {
            return ControlFlow::Continue(());
        }
        let mut lo = 1;
        let b = bound.get();
        if pos - fixed >= b {
            if per == 0 {
                return ControlFlow::Continue(());
            }
            lo = lo.max((pos - fixed - b) / per + 1);
        }
        loop {
            lens[o] = lo;
            match try_lens(lens, visit) {
                None => return ControlFlow::Continue(()),
                Some(ControlFlow::Break(())) => return ControlFlow::Break(()),
                Some(ControlFlow::Continue(())) => lo += 1,
            }
        }
    }

    fn best_anchor(&self) -> Anchor {
        self.anchors()
            .iter()
            .map(|a| (self.estimate(a), *a))
            .min_by(|x, y| x.0.total_cmp(&y.0))
            .map(|(_, a)| a)
            .expect("planner needs a repeated variable")
    }

    /// Visits every occurrence exactly once, in no particular order.
    pub fn for_each<F>(&self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(Candidate) -> ControlFlow<()>,
    {
        let best = self.best_anchor();
        let bound = Cell::new(usize::MAX);
        for t in 0..self.n {
            self.row(&best, t, &mut |inst| self.complete(&best, inst, &bound, visit))?;
        }
        ControlFlow::Continue(())
    }

    /// Start of the leftmost occurrence.
    pub fn leftmost_start(&self) -> Option<usize> {
        let best = self.best_anchor();
        let bound = Cell::new(usize::MAX);
        for t in 0..self.n {
            let _ = self.row(&best, t, &mut |inst| {
                self.complete(&best, inst, &bound, &mut |c| {
                    bound.set(c.start);
                    ControlFlow::Continue(())
                })
            });
            if bound.get() == 0 {
                break;
            }
        }
        (bound.get() != usize::MAX).then_some(bound.get())
    }

    pub fn meets(&self) -> bool {
        self.for_each(&mut |_| ControlFlow::Break(())).is_break()
    }

    /// All occurrences starting at `start` of the least total length.
    pub fn shortest_at(&self, start: usize) -> Vec<Candidate> {
        let mut out = Vec::new();
        let [c0, c1] = self.counts;
        for total in 1..=self.n - start {
            for l0 in 1..=total / c0 {
                let rest = total - c0 * l0;
                let lens = match (self.vars, rest) {
                    (1, 0) => [l0, 0],
                    (2, r) if r > 0 && r % c1 == 0 => [l0, r / c1],
                    _ => continue,
                };
                let c = Candidate { start, lens };
                if self.check(c) {
                    out.push(c);
                }
            }
            if !out.is_empty() {
                break;
            }
        }
        out
    }

    /// Visits occurrences whose image lengths are all at most `bound`, by start.
    pub fn for_each_bounded<F>(&self, bound: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(Candidate) -> ControlFlow<()>,
    {
        let second = if self.vars == 2 { bound } else { 1 };
        for start in 0..self.n {
            for l0 in 1..=bound {
                for l1 in 1..=second {
                    let lens = if self.vars == 2 { [l0, l1] } else { [l0, 0] };
                    let c = Candidate { start, lens };
                    if self.check(c) {
                        visit(c)?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }
}

/// Smallest period of the whole word.
pub(crate) fn smallest_period(idx: &LceIndex) -> usize {
    let n = idx.len();
    (1..n).find(|&q| idx.forward(0, q) >= n - q).unwrap_or(n)
}
