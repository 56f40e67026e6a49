//! Permutations of `{1..n}`.
//!
//! Points are stored 0-based and printed 1-based in disjoint-cycle notation.
//! Permutations act on the right: `p.compose(q)` first applies `p`, then `q`.

use std::fmt;
use std::ops::Mul;

use crate::error::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(GroupError::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; images.len()];
        for &img in &images {
            let slot = seen.get_mut(img as usize).ok_or_else(|| {
                GroupError::InvalidPermutation(format!(
                    "image {} out of range for degree {}",
                    img + 1,
                    images.len()
                ))
            })?;
            if *slot {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {} appears twice",
                    img + 1
                )));
            }
            *slot = true;
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from disjoint cycles given with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {pt} out of range 1..={degree}"
                    )));
                }
                if used[pt - 1] {
                    return Err(GroupError::InvalidPermutation(format!(
                        "cycles not disjoint: point {pt} repeated"
                    )));
                }
                used[pt - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses disjoint-cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    /// Commas are accepted as separators inside a cycle.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(GroupError::InvalidPermutation(format!(
                    "expected `(` at `{rest}`"
                )));
            };
            let close = body.find(')').ok_or_else(|| {
                GroupError::InvalidPermutation("unterminated cycle".into())
            })?;
            let mut cycle = Vec::new();
            for tok in body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                let pt: usize = tok.parse().map_err(|_| {
                    GroupError::InvalidPermutation(format!("`{tok}` is not a point"))
                })?;
                cycle.push(pt);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `i ↦ other(self(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    #[inline]
    pub(crate) fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u32;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate(&self, g: &Self) -> Result<Self> {
        if self.degree() != g.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        let mut out = vec![0u32; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            out[g.image(i)] = g.images[img as usize];
        }
        Ok(Self {
            images: out.into_boxed_slice(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &img)| i as u32 != img)
            .map(|(i, _)| i)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.images[i] as usize == i
    }

    /// Non-trivial cycles, each starting at its smallest point, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.image(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.image(next);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}
