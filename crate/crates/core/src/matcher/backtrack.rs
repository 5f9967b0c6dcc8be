//! Start-anchored backtracking over variable lengths, generic in the letter type
//! so that it serves both words and patterns-as-words.

use std::ops::ControlFlow;

use crate::pattern::PatLetter;
use crate::word::Symbol;

/// A letter with an involutive mirror image, applied when a reversed copy is read.
pub(crate) trait Letter: Copy + Eq {
    fn mirror(self) -> Self;
}

impl Letter for Symbol {
    fn mirror(self) -> Self {
        self
    }
}

impl Letter for PatLetter {
    fn mirror(self) -> Self {
        PatLetter::new(self.var, !self.reversed)
    }
}

/// Location of the first copy of a variable: start, length, flag of that copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Slot {
    pub pos: usize,
    pub len: usize,
    pub reversed: bool,
}

pub(crate) struct Backtracker<'a, L> {
    text: &'a [L],
    pattern: &'a [PatLetter],
    // copies of each variable at positions >= k, per k
    remaining: Vec<Vec<usize>>,
    slots: Vec<Option<Slot>>,
    limit: usize,
}

impl<'a, L: Letter> Backtracker<'a, L> {
    pub fn new(text: &'a [L], pattern: &'a [PatLetter], variable_count: usize) -> Self {
        let m = pattern.len();
        let mut remaining = vec![vec![0; variable_count]; m + 1];
        for k in (0..m).rev() {
            remaining[k] = remaining[k + 1].clone();
            remaining[k][pattern[k].var as usize] += 1;
        }
        Backtracker {
            text,
            pattern,
            remaining,
            slots: vec![None; variable_count],
            limit: text.len(),
        }
    }

    /// Visits every assignment whose occurrence starts at `start`.
    pub fn for_each_at<F>(&mut self, start: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Option<Slot>], usize) -> ControlFlow<()>,
    {
        self.slots.iter_mut().for_each(|s| *s = None);
        self.step(0, start, visit)
    }

    fn step<F>(&mut self, k: usize, off: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Option<Slot>], usize) -> ControlFlow<()>,
    {
        if k == self.pattern.len() {
            return visit(&self.slots, off);
        }
        let p = self.pattern[k];
        let v = p.var as usize;
        match self.slots[v] {
            Some(slot) => {
                if off + slot.len > self.limit || !self.copy_matches(slot, off, p.reversed) {
                    return ControlFlow::Continue(());
                }
                self.step(k + 1, off + slot.len, visit)
            }
            None => {
                // lower bound on the length still needed by the other variables
                let mut others = 0;
                for (u, &c) in self.remaining[k].iter().enumerate() {
                    if u != v {
                        others += c * self.slots[u].map_or(1, |s| s.len);
                    }
                }
                let copies = self.remaining[k][v];
                let room = self.limit.saturating_sub(off + others);
                let max_len = room / copies;
                let result = (1..=max_len).try_for_each(|len| {
                    self.slots[v] = Some(Slot {
                        pos: off,
                        len,
                        reversed: p.reversed,
                    });
                    self.step(k + 1, off + len, visit)
                });
                self.slots[v] = None;
                result
            }
        }
    }

    fn copy_matches(&self, slot: Slot, off: usize, reversed: bool) -> bool {
        let t = self.text;
        if reversed == slot.reversed {
            t[slot.pos..slot.pos + slot.len] == t[off..off + slot.len]
        } else {
            (0..slot.len).all(|i| t[off + i] == t[slot.pos + slot.len - 1 - i].mirror())
        }
    }
}

/// The image of each variable, read off the first copies.
pub(crate) fn images_from_slots<L: Letter>(text: &[L], slots: &[Option<Slot>]) -> Vec<Vec<L>> {
    slots
        .iter()
        .map(|s| {
            let s = s.expect("every variable is assigned at a full match");
            let mut img: Vec<L> = text[s.pos..s.pos + s.len].to_vec();
            if s.reversed {
                img.reverse();
                img.iter_mut().for_each(|l| *l = l.mirror());
            }
            img
        })
        .collect()
}

/// Whether `pattern` occurs somewhere in `text`.
pub(crate) fn occurs_anywhere<L: Letter>(
    text: &[L],
    pattern: &[PatLetter],
    variable_count: usize,
) -> bool {
    let mut bt = Backtracker::new(text, pattern, variable_count);
    (0..text.len()).any(|s| bt.for_each_at(s, &mut |_, _| ControlFlow::Break(())).is_break())
}
