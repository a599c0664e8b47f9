//! Brute-force closure of a generating set and congruences on the result.
//!
//! [`closure`] runs a breadth-first product search from the identity,
//! recording for every element its index, a first-found factorization and
//! the right and left Cayley edges. Element order is the BFS discovery
//! order, so indices are stable across runs: the identity is element 0 and
//! everything else follows in word-length order.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::element::MonoidElement;
use crate::error::{Error, Result};
use crate::wreath::WreathElement;

/// Element cap for closures and coset enumerations.
pub const DEFAULT_LIMIT: usize = 2_000_000;

/// A finite monoid listed by brute force: elements, index lookup and both
/// Cayley edge tables.
#[derive(Clone, Debug)]
pub struct EnumeratedMonoid<E: MonoidElement> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<E>,
    right: Vec<usize>,
    left: Vec<usize>,
    parent: Vec<Option<(usize, usize)>>,
}

/// BFS closure of `generators` with the [`DEFAULT_LIMIT`].
pub fn closure<E: MonoidElement>(generators: &[E]) -> Result<EnumeratedMonoid<E>> {
    closure_with_limit(generators, DEFAULT_LIMIT)
}

/// BFS closure of `generators`, failing with [`Error::LimitExceeded`] once
/// more than `limit` elements appear.
pub fn closure_with_limit<E: MonoidElement>(
    generators: &[E],
    limit: usize,
) -> Result<EnumeratedMonoid<E>> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    for (index, g) in generators.iter().enumerate() {
        if !first.same_shape(g) {
            return Err(Error::GeneratorShapeMismatch { index });
        }
    }
    let identity = first.identity_like();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut right = Vec::new();
    let mut parent = vec![None];
    let mut i = 0;
    while i < elements.len() {
        for (k, g) in generators.iter().enumerate() {
            let product = elements[i].multiply(g);
            let j = match index.get(&product) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    if j >= limit {
                        return Err(Error::LimitExceeded { limit });
                    }
                    index.insert(product.clone(), j);
                    elements.push(product);
                    parent.push(Some((i, k)));
                    j
                }
            };
            right.push(j);
        }
        i += 1;
    }
    let mut left = Vec::with_capacity(right.len());
    for e in &elements {
        for g in generators {
            let product = g.multiply(e);
            left.push(*index.get(&product).expect("closed under products"));
        }
    }
    Ok(EnumeratedMonoid {
        elements,
        index,
        generators: generators.to_vec(),
        right,
        left,
        parent,
    })
}

impl<E: MonoidElement> EnumeratedMonoid<E> {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Index of `element(i) * generator(g)`.
    pub fn right(&self, i: usize, g: usize) -> usize {
        self.right[i * self.generators.len() + g]
    }

    /// Index of `generator(g) * element(i)`.
    pub fn left(&self, i: usize, g: usize) -> usize {
        self.left[i * self.generators.len() + g]
    }

    /// The BFS factorization of element `i` as generator indices; empty for
    /// the identity.
    pub fn word_of(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = i;
        while let Some((prev, g)) = self.parent[cur] {
            out.push(g);
            cur = prev;
        }
        out.reverse();
        out
    }

    /// All right Cayley edges as `(element, generator, product)` triples, in
    /// deterministic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let k = self.generators.len();
        self.right
            .iter()
            .enumerate()
            .map(move |(pos, &j)| (pos / k, pos % k, j))
    }
}

/// Whether `generators` generate a monoid of exactly `expected` elements.
/// Closures larger than `limit` propagate [`Error::LimitExceeded`], so an
/// `expected` above the limit cannot be confirmed.
pub fn is_generating<E: MonoidElement>(
    generators: &[E],
    expected: &BigUint,
    limit: usize,
) -> Result<bool> {
    let em = closure_with_limit(generators, limit)?;
    Ok(BigUint::from(em.size()) == *expected)
}

/// A partition of an [`EnumeratedMonoid`]'s elements into congruence
/// classes. Class ids are normalized: class 0 contains element 0, and ids
/// increase with the smallest element index in the class, so two
/// congruences on the same carrier are equal exactly when their id vectors
/// are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Congruence {
    class_ids: Vec<usize>,
    representatives: Vec<usize>,
}

impl Congruence {
    fn from_class_keys<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Self {
        let mut seen: HashMap<K, usize> = HashMap::new();
        let mut class_ids = Vec::new();
        let mut representatives = Vec::new();
        for (i, key) in keys.enumerate() {
            let next = seen.len();
            let id = *seen.entry(key).or_insert(next);
            if id == next {
                representatives.push(i);
            }
            class_ids.push(id);
        }
        Congruence {
            class_ids,
            representatives,
        }
    }

    /// Number of elements partitioned.
    pub fn carrier_size(&self) -> usize {
        self.class_ids.len()
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_ids[element]
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_ids[a] == self.class_ids[b]
    }

    /// Smallest element index in each class, indexed by class id.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// The classes as sorted element lists, indexed by class id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.representatives.len()];
        for (i, &c) in self.class_ids.iter().enumerate() {
            out[c].push(i);
        }
        out
    }
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
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
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// The smallest congruence of `em` containing the given element-index
/// pairs: a union-find closure that keeps translating merged pairs by every
/// generator on both sides until stable.
pub fn congruence_from_pairs<E: MonoidElement>(
    em: &EnumeratedMonoid<E>,
    pairs: &[(usize, usize)],
) -> Result<Congruence> {
    let size = em.size();
    for &(a, b) in pairs {
        for index in [a, b] {
            if index >= size {
                return Err(Error::IndexOutOfRange { index, size });
            }
        }
    }
    let mut dsu = Dsu::new(size);
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = work.pop() {
        if !dsu.union(a, b) {
            continue;
        }
        for g in 0..em.generator_count() {
            work.push((em.right(a, g), em.right(b, g)));
            work.push((em.left(a, g), em.left(b, g)));
        }
    }
    let mut roots = Vec::with_capacity(size);
    for i in 0..size {
        roots.push(dsu.find(i));
    }
    Ok(Congruence::from_class_keys(roots.into_iter()))
}

/// The kernel of the block quotient on an enumerated subset of PTₙ ≀ Tₘ:
/// elements are congruent exactly when their canonical forms agree.
pub fn kernel_congruence(em: &EnumeratedMonoid<WreathElement>) -> Congruence {
    Congruence::from_class_keys(em.elements().iter().map(WreathElement::canonical_form))
}

/// Whether two congruences on the same carrier have identical classes.
pub fn congruences_equal(a: &Congruence, b: &Congruence) -> Result<bool> {
    if a.carrier_size() != b.carrier_size() {
        return Err(Error::MismatchedCarriers {
            left: a.carrier_size(),
            right: b.carrier_size(),
        });
    }
    Ok(a.class_ids == b.class_ids)
}
