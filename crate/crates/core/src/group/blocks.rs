use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::perm::Perm;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        true
    }
}

/// Smallest block (0-based points, sorted) containing all of `seed` for the
/// group generated by `gens` acting on `0..degree`.
pub fn minimal_block(degree: usize, gens: &[Perm], seed: &[usize]) -> Vec<usize> {
    let mut uf = UnionFind::new(degree);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    if let Some(&first) = seed.first() {
        for &s in &seed[1..] {
            if uf.union(first, s) {
                queue.push((first, s));
            }
        }
        while let Some((a, b)) = queue.pop() {
            for g in gens {
                let (x, y) = (g.apply0(a), g.apply0(b));
                let (rx, ry) = (uf.find(x), uf.find(y));
                if uf.union(rx, ry) {
                    queue.push((rx, ry));
                }
            }
        }
        let root = uf.find(first);
        return (0..degree).filter(|&x| uf.find(x) == root).collect();
    }
    Vec::new()
}

/// True iff `set` is a block: every group image of it is equal to it or
/// disjoint from it.
pub fn is_block(degree: usize, gens: &[Perm], set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    minimal_block(degree, gens, set).len() == set.len()
}

/// Every nontrivial block containing `point`, ordered by size then content.
/// Assumes a transitive action.
pub fn blocks_containing(degree: usize, gens: &[Perm], point: usize) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = Vec::new();
    for k in 0..degree {
        if k == point {
            continue;
        }
        let b = minimal_block(degree, gens, &[point, k]);
        if found.insert(b.clone()) {
            frontier.push(b);
        }
    }
    while let Some(b) = frontier.pop() {
        if b.len() == degree {
            continue;
        }
        for k in 0..degree {
            if b.binary_search(&k).is_ok() {
                continue;
            }
            let mut seed = b.clone();
            seed.push(k);
            let bigger = minimal_block(degree, gens, &seed);
            if found.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().filter(|b| b.len() < degree).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn brute_blocks(degree: usize, gens: &[Perm], point: usize) -> Vec<Vec<usize>> {
        let group = crate::group::PermGroup::generate(degree, gens, 100_000).unwrap();
        let mut out = Vec::new();
        for mask in 0u32..(1 << degree) {
            let set: Vec<usize> = (0..degree).filter(|&i| mask >> i & 1 == 1).collect();
            if set.len() < 2 || set.len() == degree || !set.contains(&point) {
                continue;
            }
            let closed = group.elements().iter().all(|g| {
                let image: Vec<usize> = set.iter().map(|&x| g.apply0(x)).collect();
                let hits = image.iter().filter(|x| set.contains(x)).count();
                hits == 0 || hits == set.len()
            });
            if closed {
                out.push(set);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn cyclic_six_blocks() {
        let c6 = Perm::parse("(1 2 3 4 5 6)", 6).unwrap();
        let blocks = blocks_containing(6, core::slice::from_ref(&c6), 0);
        assert_eq!(blocks, vec![vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(blocks, brute_blocks(6, &[c6], 0));
    }

    #[test]
    fn primitive_group_has_no_blocks() {
        let gens = [
            Perm::parse("(1 2 3 4 5)", 5).unwrap(),
            Perm::parse("(1 2)", 5).unwrap(),
        ];
        assert!(blocks_containing(5, &gens, 0).is_empty());
    }

    #[test]
    fn dihedral_eight_matches_brute_force() {
        let gens = [
            Perm::parse("(1 2 3 4 5 6 7 8)", 8).unwrap(),
            Perm::parse("(1 8)(2 7)(3 6)(4 5)", 8).unwrap(),
        ];
        for p in 0..8 {
            assert_eq!(blocks_containing(8, &gens, p), brute_blocks(8, &gens, p));
        }
    }

    #[test]
    fn is_block_examples() {
        let c6 = [Perm::parse("(1 2 3 4 5 6)", 6).unwrap()];
        assert!(is_block(6, &c6, &[1, 4]));
        assert!(!is_block(6, &c6, &[0, 1]));
    }
}
