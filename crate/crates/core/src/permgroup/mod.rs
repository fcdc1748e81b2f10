//! Finite permutation groups stored as explicit element lists.

mod catalog;

pub use catalog::{identify, GroupId};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default element cap for [`PermGroup::close`].
pub const DEFAULT_CAP: usize = 1_000_000;

/// A bijection of `{0, ..., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i as u32).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {cycles:?} are not disjoint cycles on 0..{degree}"
                    )));
                }
                touched[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    /// `self` followed by `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then_unchecked(other))
    }

    fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut order = 1usize;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.images[s] as usize == s {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A permutation group with its full element list. `elements()[0]` is the identity.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    /// The subgroup of `Sym(degree)` generated by `generators`, with the default cap.
    pub fn close(degree: usize, generators: &[Permutation]) -> Result<PermGroup> {
        Self::close_with_cap(degree, generators, DEFAULT_CAP)
    }

    /// Breadth-first closure; fails once more than `cap` elements are found.
    pub fn close_with_cap(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<PermGroup> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut next = 0;
        while next < elements.len() {
            let x = elements[next].clone();
            next += 1;
            for g in generators {
                let y = x.then_unchecked(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators: generators.to_vec(),
            elements,
            index,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().enumerate().all(|(i, a)| {
            gens[i + 1..]
                .iter()
                .all(|b| a.then_unchecked(b) == b.then_unchecked(a))
        })
    }

    /// Every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = self.elements.iter().map(|p| p.apply(point)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }

    /// The image of `self` under relabeling of points by `sigma`
    /// (each generator `g` becomes `sigma^-1 g sigma`).
    pub fn conjugate(&self, sigma: &Permutation) -> Result<PermGroup> {
        let inv = sigma.inverse();
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| inv.then(g).and_then(|x| x.then(sigma)))
            .collect::<Result<_>>()?;
        PermGroup::close(self.degree, &gens)
    }

    fn center_order(&self) -> usize {
        self.elements
            .iter()
            .filter(|x| {
                self.generators
                    .iter()
                    .all(|g| x.then_unchecked(g) == g.then_unchecked(x))
            })
            .count()
    }

    /// Normal closure of the generator commutators.
    fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a
                    .inverse()
                    .then_unchecked(&b.inverse())
                    .then_unchecked(a)
                    .then_unchecked(b);
                if !c.is_identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        let mut h = PermGroup::close(self.degree, &gens)?;
        'grow: loop {
            for x in h.generators.clone() {
                for g in &self.generators {
                    let conj = g.inverse().then_unchecked(&x).then_unchecked(g);
                    if !h.contains(&conj) {
                        gens.push(conj);
                        h = PermGroup::close(self.degree, &gens)?;
                        continue 'grow;
                    }
                }
            }
            return Ok(h);
        }
    }

    /// Isomorphism invariants used for catalog identification.
    pub fn signature(&self) -> GroupSignature {
        let mut element_orders = BTreeMap::new();
        for p in &self.elements {
            *element_orders.entry(p.order()).or_insert(0) += 1;
        }
        GroupSignature {
            order: self.order(),
            abelian: self.is_abelian(),
            element_orders,
            center_order: self.center_order(),
            // the derived subgroup is no larger than the group itself
            derived_order: self
                .derived_subgroup()
                .expect("subgroup closure stays under the cap")
                .order(),
        }
    }
}

/// `(order, abelian, element-order histogram, |Z(G)|, |G'|)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupSignature {
    pub order: usize,
    pub abelian: bool,
    pub element_orders: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub derived_order: usize,
}
