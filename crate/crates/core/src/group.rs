use std::collections::HashMap;

use crate::chain::StabilizerChain;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Size limits for enumeration-based algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group whose elements may be listed.
    pub element_cap: usize,
    /// Largest group on which lattice operations (Cayley table, subgroup
    /// enumeration) are performed.
    pub lattice_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            element_cap: 5000,
            lattice_cap: 500,
        }
    }
}

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
    order: u128,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::InvalidParameter("degree must be at least 1".into()));
        }
        if generators.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let chain = StabilizerChain::new(degree, &generators);
        let order = chain.order()?;
        Ok(Self {
            degree,
            generators,
            chain,
            order,
        })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::new(degree, vec![Permutation::identity(degree.max(1))])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.chain.contains(p))
    }

    /// Lists every element, breadth first from the identity, multiplying on
    /// the right by the generators in their given order.
    pub fn all_elements(&self, cap: usize) -> Result<ElementTable> {
        if self.order > cap as u128 {
            return Err(GroupError::TooLarge {
                what: "element enumeration",
                order: self.order,
                cap,
            });
        }
        let n = self.order as usize;
        let id = Permutation::identity(self.degree);
        let mut elements = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        index.insert(id.clone(), 0);
        elements.push(id);
        let mut k = 0;
        while k < elements.len() {
            for g in &self.generators {
                let next = elements[k].then(g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            k += 1;
        }
        debug_assert_eq!(elements.len(), n);
        Ok(ElementTable { elements, index })
    }
}

/// All elements of a group in a fixed order; position 0 is the identity.
#[derive(Clone, Debug)]
pub struct ElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl ElementTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }
}
