//! Enumerated groups with a full Cayley table, the ambient for bitset subgroups.

use crate::error::{GroupError, Result};
use crate::group::{Caps, ElementTable, PermGroup};
use crate::perm::Permutation;

pub struct FiniteGroup {
    perm: PermGroup,
    table: ElementTable,
    caps: Caps,
    /// `mul[i * n + j]` is the index of `e_i * e_j`.
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<u32>,
    orders: Vec<u32>,
}

impl FiniteGroup {
    pub fn new(perm: PermGroup, caps: Caps) -> Result<Self> {
        if perm.order() > caps.lattice_cap as u128 {
            return Err(GroupError::TooLarge {
                what: "lattice operations",
                order: perm.order(),
                cap: caps.lattice_cap,
            });
        }
        let table = perm.all_elements(caps.element_cap)?;
        let n = table.len();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            let a = table.get(i);
            for j in 0..n {
                let prod = a.then(table.get(j));
                mul[i * n + j] = table.index_of(&prod).expect("closed under products") as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let row = &mul[i * n..(i + 1) * n];
            inv[i] = row.iter().position(|&m| m == 0).expect("inverse exists") as u32;
        }
        let gens = perm
            .generators()
            .iter()
            .map(|g| table.index_of(g).expect("generator enumerated") as u32)
            .collect();
        let mut orders = vec![0u32; n];
        for (i, slot) in orders.iter_mut().enumerate() {
            let mut x = i;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + i] as usize;
                k += 1;
            }
            *slot = k;
        }
        Ok(Self {
            perm,
            table,
            caps,
            mul,
            inv,
            gens,
            orders,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn perm_group(&self) -> &PermGroup {
        &self.perm
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn elements(&self) -> &ElementTable {
        &self.table
    }

    pub fn element(&self, i: usize) -> &Permutation {
        self.table.get(i)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.table.index_of(p)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i] as usize
    }

    /// Indices of the defining generators.
    pub fn generator_indices(&self) -> &[u32] {
        &self.gens
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .finish()
    }
}
