//! Permutations of `{1, .., n}`.
//!
//! Letters are 1-based at every public boundary (parsing, display, image
//! arrays handed out by [`Perm::images`]) and 0-based in storage.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::{Error, Result};

/// A bijection of `{1, .., n}` stored as its 0-based image table.
///
/// Ordering is lexicographic on the image table, which is the canonical
/// element order used for every "minimal representative" choice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: entry `k-1` is the image of `k`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero: Vec<u32> = images
            .iter()
            .map(|&x| if x == 0 { u32::MAX } else { (x - 1) as u32 })
            .collect();
        Self::from_zero_based(zero)
    }

    /// Builds a permutation from a 0-based image table.
    pub fn from_zero_based(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotBijective);
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Internal constructor for tables already known to be bijective.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_zero_based(images.clone()).is_ok());
        Perm { images }
    }

    /// Builds the permutation whose disjoint cycles are `cycles` (1-based letters).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &letter in cycle.iter() {
                if letter == 0 || letter > degree {
                    return Err(Error::Parse(alloc::format!(
                        "letter {letter} out of range 1..={degree}"
                    )));
                }
                if used[letter - 1] {
                    return Err(Error::Parse(alloc::format!("letter {letter} repeated")));
                }
                used[letter - 1] = true;
            }
            for (i, &letter) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[letter - 1] = (next - 1) as u32;
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `"(1 4)(2 3)"`. Empty text and `"()"`
    /// denote the identity; unmentioned letters are fixed.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number = String::new();

        let flush = |number: &mut String, current: &mut Option<Vec<usize>>| -> Result<()> {
            if number.is_empty() {
                return Ok(());
            }
            let letter: usize = number
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad letter '{number}'")))?;
            match current {
                Some(c) => c.push(letter),
                None => return Err(Error::Parse("letter outside parentheses".into())),
            }
            number.clear();
            Ok(())
        };

        for ch in text.chars() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::Parse("nested '('".into()));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut number, &mut current)?;
                    match current.take() {
                        Some(c) => cycles.push(c),
                        None => return Err(Error::Parse("unmatched ')'".into())),
                    }
                }
                c if c.is_ascii_digit() => number.push(c),
                c if c.is_whitespace() || c == ',' => flush(&mut number, &mut current)?,
                other => {
                    return Err(Error::Parse(alloc::format!("unexpected character '{other}'")))
                }
            }
        }
        if current.is_some() {
            return Err(Error::Parse("unclosed '('".into()));
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based letter.
    pub fn image(&self, letter: usize) -> usize {
        self.images[letter - 1] as usize + 1
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply0(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// 1-based image array, the serialized form.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Result<Perm> {
        other.checked_mul(self)
    }

    /// Functional product `self ∘ other` (apply `other` first).
    pub fn checked_mul(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    /// `g * self * g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        // (g σ g⁻¹)(g(x)) = g(σ(x))
        let mut out = vec![0u32; self.images.len()];
        for (x, &sx) in self.images.iter().enumerate() {
            out[g.images[x] as usize] = g.images[sx as usize];
        }
        Perm { images: out }
    }

    pub fn pow(&self, exp: i64) -> Perm {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&sq);
            }
            sq = sq.compose_unchecked(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles with 1-based letters, fixed points included, each cycle
    /// starting at its least letter, cycles ordered by least letter.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
            }
        }
        count
    }

    /// `n` minus the number of disjoint cycles (fixed points count as cycles).
    pub fn index(&self) -> usize {
        self.degree() - self.cycle_count()
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i == x as usize)
            .count()
    }

    pub fn is_n_cycle(&self) -> bool {
        self.cycle_count() == 1
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl Mul for &Perm {
    type Output = Perm;

    /// Functional product; panics on degree mismatch.
    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in Perm product");
        self.compose_unchecked(rhs)
    }
}

impl Mul for Perm {
    type Output = Perm;

    fn mul(self, rhs: Perm) -> Perm {
        &self * &rhs
    }
}

impl fmt::Display for Perm {
    /// Canonical cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            f.write_str("(")?;
            for (i, letter) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{letter}")?;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// Visits every permutation of `{0..n}` in lexicographic order of image tables.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&Perm)) {
    let mut images: Vec<u32> = (0..n as u32).collect();
    loop {
        visit(&Perm {
            images: images.clone(),
        });
        if !next_permutation(&mut images) {
            break;
        }
    }
}

/// Visits every permutation of `{0..n}` sending point 0 to `first`.
pub fn for_each_permutation_with_first(n: usize, first: usize, mut visit: impl FnMut(&Perm)) {
    let mut rest: Vec<u32> = (0..n as u32).filter(|&x| x as usize != first).collect();
    loop {
        let mut images = Vec::with_capacity(n);
        images.push(first as u32);
        images.extend_from_slice(&rest);
        visit(&Perm { images });
        if !next_permutation(&mut rest) {
            break;
        }
    }
}

fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(1 2 3 4)", 4).images(), vec![2, 3, 4, 1]);
        assert_eq!(p("(1 4)(2 3)", 4).images(), vec![4, 3, 2, 1]);
        assert_eq!(p("", 3).images(), vec![1, 2, 3]);
        assert_eq!(p("()", 3).images(), vec![1, 2, 3]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Perm::parse("(1 2)(2 3)", 3), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse("(1 5)", 4), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse("(1 2", 4), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse("1 2)", 4), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse("((1 2))", 4), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse("(0 1)", 4), Err(Error::Parse(_))));
    }

    #[test]
    fn then_is_left_to_right() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        assert_eq!(a.then(&b).unwrap(), p("(1 3 2)", 3));
        assert_eq!(&a * &b, p("(1 2 3)", 3));
        assert!(a.then(&p("(1 2)", 4)).is_err());
    }

    #[test]
    fn inverse_law() {
        let a = p("(1 3 5 2)(4 6)", 6);
        assert!((&a * &a.inverse()).is_identity());
        assert!((&a.inverse() * &a).is_identity());
    }

    #[test]
    fn cycles_examples() {
        assert_eq!(p("(1 4)(2 3)", 4).cycles(), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(Perm::identity(3).cycles(), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(p("(1 4 3 2)", 4).cycles(), vec![vec![1, 4, 3, 2]]);
    }

    #[test]
    fn index_examples() {
        assert_eq!(p("(1 2 3 4)", 4).index(), 3);
        assert_eq!(p("(1 4)(2 3)", 4).index(), 2);
        assert_eq!(Perm::identity(5).index(), 0);
    }

    #[test]
    fn display_round_trip() {
        let a = p("(2 5)(1 3 4)", 6);
        assert_eq!(a.to_string(), "(1 3 4)(2 5)");
        assert_eq!(Perm::identity(2).to_string(), "()");
    }

    #[test]
    fn conjugate_matches_product() {
        let s = p("(1 2 3)(4 5)", 5);
        let g = p("(1 5 2)", 5);
        assert_eq!(s.conjugate_by(&g), &(&g * &s) * &g.inverse());
    }

    #[test]
    fn pow_and_order() {
        let c = p("(1 2 3 4 5 6)", 6);
        assert_eq!(c.order(), 6);
        assert!(c.pow(6).is_identity());
        assert_eq!(c.pow(-1), c.inverse());
        assert_eq!(p("(1 2)(3 4 5)", 5).order(), 6);
    }

    #[test]
    fn enumerates_symmetric_group() {
        let mut count = 0;
        let mut last: Option<Perm> = None;
        for_each_permutation(4, |q| {
            if let Some(prev) = &last {
                assert!(prev < q);
            }
            last = Some(q.clone());
            count += 1;
        });
        assert_eq!(count, 24);
        let mut with_first = 0;
        for_each_permutation_with_first(4, 2, |q| {
            assert_eq!(q.apply0(0), 2);
            with_first += 1;
        });
        assert_eq!(with_first, 6);
    }
}
