//! Overpartitions: partitions in which the first occurrence of each part
//! value may carry an overline.

use std::fmt;

use super::{enumerate_partitions, PartConstraint, Partition, Partitions};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overpartition {
    partition: Partition,
    // overlined part values, decreasing
    overlined: Vec<u32>,
}

impl Overpartition {
    /// `overlined` values not occurring in `partition` are dropped.
    pub fn new(partition: Partition, overlined: impl IntoIterator<Item = u32>) -> Self {
        let mut overlined: Vec<u32> = overlined
            .into_iter()
            .filter(|v| partition.parts().contains(v))
            .collect();
        overlined.sort_unstable_by(|a, b| b.cmp(a));
        overlined.dedup();
        Self {
            partition,
            overlined,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn parts(&self) -> &[u32] {
        self.partition.parts()
    }

    pub fn overlined(&self) -> &[u32] {
        &self.overlined
    }

    pub fn is_overlined(&self, value: u32) -> bool {
        self.overlined.contains(&value)
    }

    pub fn weight(&self) -> u64 {
        self.partition.weight()
    }

    /// Parts with one copy of each overlined value removed, decreasing.
    pub fn non_overlined_parts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.parts().len());
        let mut prev = None;
        for &p in self.parts() {
            if prev != Some(p) && self.is_overlined(p) {
                prev = Some(p);
                continue;
            }
            prev = Some(p);
            out.push(p);
        }
        out
    }
}

impl fmt::Display for Overpartition {
    /// Overlined first occurrences are marked with a trailing `'`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts().is_empty() {
            return f.write_str("0");
        }
        let mut prev = None;
        for (i, &p) in self.parts().iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
            if prev != Some(p) && self.is_overlined(p) {
                f.write_str("'")?;
            }
            prev = Some(p);
        }
        Ok(())
    }
}

/// Every overpartition of `n`: each partition in colexicographic order,
/// followed through all subsets of its distinct values (by bitmask).
#[derive(Debug, Clone)]
pub struct Overpartitions {
    partitions: Partitions,
    current: Option<(Partition, Vec<u32>)>,
    mask: u64,
}

impl Iterator for Overpartitions {
    type Item = Overpartition;
    fn next(&mut self) -> Option<Overpartition> {
        loop {
            if let Some((p, distinct)) = &self.current {
                if self.mask < 1u64 << distinct.len() {
                    let chosen = distinct
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| self.mask >> i & 1 == 1)
                        .map(|(_, &v)| v);
                    let op = Overpartition::new(p.clone(), chosen);
                    self.mask += 1;
                    return Some(op);
                }
            }
            let p = self.partitions.next()?;
            let mut distinct = p.parts().to_vec();
            distinct.dedup();
            self.current = Some((p, distinct));
            self.mask = 0;
        }
    }
}

pub fn enumerate_overpartitions(n: u32) -> Overpartitions {
    Overpartitions {
        partitions: enumerate_partitions(n, PartConstraint::none()),
        current: None,
        mask: 0,
    }
}
