//! Constrained partition enumeration.
//!
//! Partitions are produced in colexicographic order of their (weakly
//! decreasing) part sequences, which is lexicographic order of the same parts
//! written in increasing order: for `n = 4` the order is `1+1+1+1`, `2+1+1`,
//! `3+1`, `2+2`, `4`.

use super::Partition;

/// Restrictions on the parts a partition may use.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartConstraint {
    /// `(m, residues)`: every part must be congruent to one of `residues` mod `m`.
    pub residues: Option<(u32, Vec<u32>)>,
    /// `(m, r)` pairs: no part may be congruent to `r` mod `m`.
    pub excluded_residues: Vec<(u32, u32)>,
    pub odd_only: bool,
    /// each odd part value occurs at most once
    pub distinct_odd: bool,
    pub max_part: Option<u32>,
}

impl PartConstraint {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn residue(a: u32, m: u32) -> Self {
        Self {
            residues: Some((m, vec![a % m])),
            ..Self::default()
        }
    }

    pub fn odd_only() -> Self {
        Self {
            odd_only: true,
            ..Self::default()
        }
    }

    pub fn distinct_odd() -> Self {
        Self {
            distinct_odd: true,
            ..Self::default()
        }
    }

    pub fn excluding(mut self, a: u32, m: u32) -> Self {
        self.excluded_residues.push((m, a % m));
        self
    }

    pub fn with_max_part(mut self, max: u32) -> Self {
        self.max_part = Some(max);
        self
    }

    /// Whether `part` may be used at all, ignoring multiplicity rules.
    pub fn allows(&self, part: u32) -> bool {
        if part == 0 || self.max_part.is_some_and(|mx| part > mx) {
            return false;
        }
        if self.odd_only && part % 2 == 0 {
            return false;
        }
        if let Some((m, rs)) = &self.residues {
            if !rs.contains(&(part % m)) {
                return false;
            }
        }
        self.excluded_residues.iter().all(|&(m, r)| part % m != r)
    }

    /// Whether `part` may follow `prev` in an increasing sequence.
    fn may_follow(&self, prev: Option<u32>, part: u32) -> bool {
        match prev {
            Some(p) if part < p => false,
            Some(p) if part == p => !(self.distinct_odd && part % 2 == 1),
            _ => true,
        }
    }
}

/// Depth-first walker over constrained partitions of `n`.
///
/// [`Partitions::next_ascending`] lends the current parts in increasing
/// order without allocating; the [`Iterator`] impl yields owned
/// [`Partition`]s.
#[derive(Debug, Clone)]
pub struct Partitions {
    n: u32,
    constraint: PartConstraint,
    allowed: Vec<u32>,
    // indices into `allowed`, and the matching part values
    stack: Vec<usize>,
    parts: Vec<u32>,
    sum: u32,
    state: WalkState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WalkState {
    Fresh,
    Running,
    Done,
}

impl Partitions {
    pub fn new(n: u32, constraint: PartConstraint) -> Self {
        let allowed = (1..=n).filter(|&p| constraint.allows(p)).collect();
        Self {
            n,
            constraint,
            allowed,
            stack: Vec::new(),
            parts: Vec::new(),
            sum: 0,
            state: WalkState::Fresh,
        }
    }

    fn last(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Smallest allowed index `>= from` that fits after the current top.
    fn first_fit(&self, from: usize) -> Option<usize> {
        let remaining = self.n - self.sum;
        let prev = self.last();
        (from..self.allowed.len())
            .take_while(|&i| self.allowed[i] <= remaining)
            .find(|&i| self.constraint.may_follow(prev, self.allowed[i]))
    }

    fn push(&mut self, idx: usize) {
        self.sum += self.allowed[idx];
        self.stack.push(idx);
        self.parts.push(self.allowed[idx]);
    }

    fn pop(&mut self) -> Option<usize> {
        let idx = self.stack.pop()?;
        self.parts.pop();
        self.sum -= self.allowed[idx];
        Some(idx)
    }

    /// One step of the walk: extend if possible, otherwise advance the
    /// deepest part that can be advanced. Returns false when exhausted.
    fn step(&mut self) -> bool {
        if self.sum < self.n {
            let from = self.stack.last().copied().unwrap_or(0);
            if let Some(i) = self.first_fit(from) {
                self.push(i);
                return true;
            }
        }
        while let Some(idx) = self.pop() {
            if let Some(i) = self.first_fit(idx + 1) {
                self.push(i);
                return true;
            }
        }
        false
    }

    /// Advances to the next partition and lends its parts in increasing order.
    pub fn next_ascending(&mut self) -> Option<&[u32]> {
        match self.state {
            WalkState::Done => return None,
            WalkState::Fresh => {
                self.state = WalkState::Running;
                if self.n == 0 {
                    self.state = WalkState::Done;
                    return Some(&[]);
                }
            }
            WalkState::Running => {}
        }
        loop {
            if !self.step() {
                self.state = WalkState::Done;
                return None;
            }
            if self.sum == self.n {
                break;
            }
        }
        Some(&self.parts)
    }
}

impl Iterator for Partitions {
    type Item = Partition;
    fn next(&mut self) -> Option<Partition> {
        let parts: Vec<u32> = self.next_ascending()?.iter().rev().copied().collect();
        Some(Partition::from_sorted_unchecked(parts))
    }
}

pub fn enumerate_partitions(n: u32, constraint: PartConstraint) -> Partitions {
    Partitions::new(n, constraint)
}
