//! Subsets of a carrier of at most 64 elements, stored as bitmasks over
//! element indices.

pub type Set = u64;

/// Largest carrier a [`Set`] can index.
pub const CAP: usize = 64;

pub fn full(n: usize) -> Set {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn bit(i: usize) -> Set {
    1u64 << i
}

#[inline]
pub fn has(s: Set, i: usize) -> bool {
    (s >> i) & 1 == 1
}

#[inline]
pub fn within(a: Set, b: Set) -> bool {
    a & !b == 0
}

#[inline]
pub fn count(s: Set) -> usize {
    s.count_ones() as usize
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Set {
    it.into_iter().fold(0, |s, i| s | bit(i))
}

pub fn iter(s: Set) -> Members {
    Members(s)
}

pub struct Members(Set);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// All subsets of `s`, starting from the empty set.
pub fn subsets(s: Set) -> Subsets {
    Subsets { of: s, next: Some(0) }
}

pub struct Subsets {
    of: Set,
    next: Option<Set>,
}

impl Iterator for Subsets {
    type Item = Set;

    fn next(&mut self) -> Option<Set> {
        let cur = self.next?;
        self.next = if cur == self.of {
            None
        } else {
            Some((cur.wrapping_sub(self.of)) & self.of)
        };
        Some(cur)
    }
}

/// Subsets of `s` with at most `k` members.
pub fn small_subsets(s: Set, k: usize) -> Vec<Set> {
    let members: Vec<usize> = iter(s).collect();
    let mut out = vec![0];
    let mut frontier = vec![(0 as Set, 0usize)];
    for _ in 0..k {
        let mut next = Vec::new();
        for &(acc, from) in &frontier {
            for (j, &m) in members.iter().enumerate().skip(from) {
                let t = acc | bit(m);
                out.push(t);
                next.push((t, j + 1));
            }
        }
        frontier = next;
    }
    out
}
