//! m-modular Young diagrams and offset Durfee rectangles.
//!
//! A part `m b + a` with `0 < a < m` is drawn as one box holding `a` followed
//! by `b` boxes holding `m`, so its row has `b + 1` boxes. The ordinary Young
//! diagram is the case where a row has as many boxes as the part.

use super::Partition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularDiagram {
    modulus: u32,
    residue: u32,
    rows: Vec<u32>,
}

impl ModularDiagram {
    /// Requires every part of `p` to be congruent to `a` mod `m`, `0 < a < m`.
    pub fn new(p: &Partition, a: u32, m: u32) -> Result<Self> {
        if a == 0 || a >= m {
            return Err(Error::InvalidResidue {
                a: a as u64,
                m: m as u64,
            });
        }
        if p.parts().iter().any(|&x| x % m != a) {
            return Err(Error::MixedResidues(p.to_string()));
        }
        Ok(Self {
            modulus: m,
            residue: a,
            rows: p.parts().iter().map(|&x| row_boxes(x, a, m)).collect(),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn residue(&self) -> u32 {
        self.residue
    }

    /// Box counts, longest row first.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_sorted_unchecked(
            self.rows
                .iter()
                .map(|&b| self.modulus * (b - 1) + self.residue)
                .collect(),
        )
    }
}

#[inline]
fn row_boxes(part: u32, a: u32, m: u32) -> u32 {
    (part - a) / m + 1
}

/// A rectangle of `height` rows and `height + offset` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DurfeeRect {
    pub height: usize,
    pub offset: u32,
}

impl DurfeeRect {
    pub fn width(&self) -> u32 {
        self.height as u32 + self.offset
    }
}

/// Largest rectangle with `width - height = offset` fitting in a diagram
/// whose (weakly decreasing) row lengths are `rows`. Height 0 is allowed.
pub fn durfee(rows: &[u32], offset: u32) -> DurfeeRect {
    let mut height = 0;
    while height < rows.len() && rows[height] >= height as u32 + 1 + offset {
        height += 1;
    }
    DurfeeRect { height, offset }
}

/// Every row strictly below the rectangle is shorter than its width.
fn below_fits(rows: &[u32], rect: DurfeeRect) -> bool {
    rows[rect.height..].iter().all(|&r| r < rect.width())
}

/// Membership in the class counted by `M(a, m, nu; n)`, on parts in weakly
/// decreasing order.
pub(crate) fn m_member_desc(parts: &[u32], a: u32, m: u32, nu: u32, rows: &mut Vec<u32>) -> bool {
    if parts.iter().any(|&x| x % m != a) {
        return false;
    }
    // mandatory parts a, m+a, ..., m nu + a, scanned from the smallest part up
    let mut i = parts.len();
    for expect in (0..=nu).map(|k| a + m * k) {
        while i > 0 && parts[i - 1] < expect {
            i -= 1;
        }
        if i == 0 || parts[i - 1] != expect {
            return false;
        }
    }
    rows.clear();
    rows.extend(parts.iter().map(|&x| row_boxes(x, a, m)));
    below_fits(rows, durfee(rows, nu + 2))
}

/// Membership in the class counted by `N_nu(n)`, on parts in weakly
/// decreasing order.
pub(crate) fn n_member_desc(parts: &[u32], nu: u32) -> bool {
    let mut i = parts.len();
    for v in 1..nu {
        while i > 0 && parts[i - 1] < v {
            i -= 1;
        }
        if i == 0 || parts[i - 1] != v {
            return false;
        }
    }
    below_fits(parts, durfee(parts, nu))
}

/// Whether `p` is counted by `M(a, m, nu; |p|)`: all parts are `a` mod `m`,
/// each of `a, m+a, ..., m nu + a` occurs, and in the m-modular diagram every
/// row below the `(nu+2)`-Durfee rectangle is shorter than its width.
pub fn is_m_member(p: &Partition, a: u32, m: u32, nu: u32) -> bool {
    a > 0 && a < m && m_member_desc(p.parts(), a, m, nu, &mut Vec::new())
}

/// Whether `p` is counted by `N_nu(|p|)`: each of `1, ..., nu-1` occurs and
/// every row below the `nu`-Durfee rectangle is shorter than its width.
pub fn is_n_member(p: &Partition, nu: u32) -> bool {
    nu >= 1 && n_member_desc(p.parts(), nu)
}
