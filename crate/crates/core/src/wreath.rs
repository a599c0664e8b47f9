//! The wreath product PTₙ ≀ Tₘ.
//!
//! An element is a tuple `(a₁, …, a_m; t)` of partial maps `a_j` on `n`
//! points together with a full map `t` on `m` points, multiplied by
//!
//! ```text
//! (a; s)(b; t) = (a₁ b_{s(1)}, …, a_m b_{s(m)}; s t)
//! ```
//!
//! so the tail of the left factor decides which right component lands on
//! each slot, and tails compose left to right like everything else. The
//! text codec separates components with `|` and the tail with `;`, e.g.
//! `([-,-] | [1,2] ; [2,1])`.

use std::fmt;
use std::str::FromStr;

use crate::element::MonoidElement;
use crate::error::{Error, Result};
use crate::transform::PartialMap;

/// An element of PTₙ ≀ Tₘ.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathElement {
    components: Vec<PartialMap>,
    tail: PartialMap,
}

impl WreathElement {
    /// Builds an element from components and tail, checking that the tail is
    /// a full map of degree equal to the component count and that all
    /// components share one degree.
    pub fn new(components: Vec<PartialMap>, tail: PartialMap) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::DegreeTooSmall { required: 1, got: 0 });
        }
        if tail.degree() != components.len() {
            return Err(Error::TailDegree {
                components: components.len(),
                tail: tail.degree(),
            });
        }
        if !tail.is_full() {
            return Err(Error::TailNotFull);
        }
        let n = components[0].degree();
        for c in &components[1..] {
            if c.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: c.degree(),
                });
            }
        }
        Ok(WreathElement { components, tail })
    }

    /// The identity of PTₙ ≀ Tₘ.
    pub fn identity(n: usize, m: usize) -> Self {
        WreathElement {
            components: vec![PartialMap::identity(n); m],
            tail: PartialMap::identity(m),
        }
    }

    /// Places `a` in the given 1-based slot, identities elsewhere, identity
    /// tail.
    pub fn embed_slot(a: PartialMap, slot: usize, m: usize) -> Result<Self> {
        if slot == 0 || slot > m {
            return Err(Error::SlotOutOfRange { slot, count: m });
        }
        let n = a.degree();
        let mut components = vec![PartialMap::identity(n); m];
        components[slot - 1] = a;
        Ok(WreathElement {
            components,
            tail: PartialMap::identity(m),
        })
    }

    /// Pairs the full map `t` with identity components of degree `n`.
    pub fn embed_tail(t: PartialMap, n: usize) -> Result<Self> {
        if !t.is_full() {
            return Err(Error::TailNotFull);
        }
        let m = t.degree();
        Ok(WreathElement {
            components: vec![PartialMap::identity(n); m],
            tail: t,
        })
    }

    /// Degree of the components.
    pub fn inner_degree(&self) -> usize {
        self.components[0].degree()
    }

    /// Number of components, which is also the tail degree.
    pub fn outer_degree(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[PartialMap] {
        &self.components
    }

    pub fn tail(&self) -> &PartialMap {
        &self.tail
    }

    /// Product of `self` and `rhs`, in that order.
    pub fn multiply(&self, rhs: &WreathElement) -> Result<WreathElement> {
        if !MonoidElement::same_shape(self, rhs) {
            return Err(Error::DimensionMismatch {
                left: (self.inner_degree(), self.outer_degree()),
                right: (rhs.inner_degree(), rhs.outer_degree()),
            });
        }
        let components = self
            .components
            .iter()
            .zip(self.tail.images())
            .map(|(a, &t)| {
                a.compose(&rhs.components[t]).expect("inner degrees match")
            })
            .collect();
        let tail = self.tail.compose(&rhs.tail).expect("outer degrees match");
        Ok(WreathElement { components, tail })
    }

    /// The distinguished representative of this element's fibre under the
    /// quotient onto the block monoid: wherever a component is the empty
    /// map, the tail entry is rewritten to point at block 1.
    pub fn canonical_form(&self) -> WreathElement {
        let tail_images = self
            .components
            .iter()
            .zip(self.tail.images())
            .map(|(c, &t)| if c.is_empty_map() { 0 } else { t })
            .collect();
        WreathElement {
            components: self.components.clone(),
            tail: PartialMap::from_images(tail_images).expect("entries already in range"),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.components
            .iter()
            .zip(self.tail.images())
            .all(|(c, &t)| t == 0 || !c.is_empty_map())
    }
}

impl MonoidElement for WreathElement {
    fn multiply(&self, rhs: &Self) -> Self {
        WreathElement::multiply(self, rhs).expect("shapes match")
    }

    fn identity_like(&self) -> Self {
        WreathElement::identity(self.inner_degree(), self.outer_degree())
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.inner_degree() == other.inner_degree()
            && self.outer_degree() == other.outer_degree()
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.components.iter().enumerate() {
            if j > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " ; {})", self.tail)
    }
}

impl FromStr for WreathElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| {
                Error::Parse(format!("expected `(c1 | … | cm ; tail)`, got `{s}`"))
            })?;
        let (comps, tail) = inner
            .rsplit_once(';')
            .ok_or_else(|| Error::Parse("missing `;` before the tail".into()))?;
        let components = comps
            .split('|')
            .map(|c| c.parse::<PartialMap>())
            .collect::<Result<Vec<_>>>()?;
        WreathElement::new(components, tail.parse()?)
    }
}
