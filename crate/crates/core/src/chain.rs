//! Base and strong generating set via deterministic Schreier-Sims.

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// Orbit of `base` in discovery order.
    orbit: Vec<usize>,
    /// `transversal[pt]` maps `base` to `pt`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Self {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: Vec::new(),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base];
        let mut k = 0;
        while k < self.orbit.len() {
            let pt = self.orbit[k];
            let u = self.transversal[pt].clone().expect("orbit point has a representative");
            for s in &self.gens {
                let img = s.image(pt);
                if self.transversal[img].is_none() {
                    self.transversal[img] = Some(u.then(s));
                    self.orbit.push(img);
                }
            }
            k += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let gens: Vec<&Permutation> = generators.iter().filter(|g| !g.is_identity()).collect();
        let mut levels: Vec<Level> = Vec::new();
        for g in &gens {
            if levels.iter().all(|l| g.fixes(l.base)) {
                let base = g.first_moved().expect("non-identity");
                levels.push(Level::new(base, degree));
            }
        }
        for k in 0..levels.len() {
            let fixing: Vec<Permutation> = gens
                .iter()
                .filter(|g| levels[..k].iter().all(|l| g.fixes(l.base)))
                .map(|g| (*g).clone())
                .collect();
            levels[k].gens = fixing;
            levels[k].rebuild(degree);
        }

        let mut chain = Self { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'levels: while i >= 0 {
            let level = i as usize;
            let orbit = self.levels[level].orbit.clone();
            let gens = self.levels[level].gens.clone();
            for &pt in &orbit {
                let u = self.levels[level].transversal[pt].clone().expect("orbit point");
                for s in &gens {
                    let img = s.image(pt);
                    let v = self.levels[level].transversal[img].as_ref().expect("orbit closed");
                    let schreier = u.then(s).then(&v.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, drop) = self.sift_from(schreier, level + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if drop == self.levels.len() {
                        let base = residue.first_moved().expect("non-identity");
                        self.levels.push(Level::new(base, self.degree));
                    }
                    for l in level + 1..=drop {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild(self.degree);
                    }
                    i = drop as isize;
                    continue 'levels;
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` through levels `from..`, returning the residue and the level
    /// where sifting stopped (`levels.len()` if it passed every level).
    fn sift_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let pt = g.image(level.base);
            match &level.transversal[pt] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    pub fn sift(&self, g: &Permutation) -> Permutation {
        self.sift_from(g.clone(), 0).0
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).is_identity()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    pub fn order(&self) -> Result<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128)
                .ok_or(GroupError::OrderOverflow)
        })
    }
}
