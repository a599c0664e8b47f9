//! The monoid PT_{n×m} of partial transformations preserving a uniform
//! partition.
//!
//! Points of the ground set are pairs `(i, j)` with `i ∈ {1, …, n}` inside
//! block `j ∈ {1, …, m}`, flattened column-major: `(i, j) ↦ i + (j−1)n`
//! (1-based). A [`BlockMap`] is a partial map on the `nm` flattened points
//! that sends defined points of any one block into a single block.
//!
//! [`phi`] is the canonical surjection from the wreath product PTₙ ≀ Tₘ onto
//! PT_{n×m}: component `j` says what happens inside block `j` and the tail
//! says where each block goes. [`phi_section`] picks the distinguished
//! preimage whose tail points empty blocks at block 1; fibres of [`phi`] are
//! exactly the classes of [`kernel_equivalent`].
//!
//! The text codec prefixes the flat image list with the shape, e.g.
//! `n=2 m=2 [1,2,-,-]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::element::MonoidElement;
use crate::error::{Error, Result};
use crate::transform::{PartialMap, UNDEFINED};
use crate::wreath::WreathElement;

/// Exact element counts, which overflow machine words already for modest
/// `n, m`.
pub type BigCount = BigUint;

/// A partition-preserving partial transformation of `n·m` points.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BlockMap {
    block_size: usize,
    block_count: usize,
    map: PartialMap,
}

impl BlockMap {
    /// Wraps a flat partial map, checking the degree is `n·m` and the
    /// partition into `m` blocks of size `n` is preserved.
    pub fn new(n: usize, m: usize, map: PartialMap) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::DegreeTooSmall {
                required: 1,
                got: n.min(m),
            });
        }
        if !preserves_partition(&map, n, m)? {
            return Err(Error::NotPartitionPreserving);
        }
        Ok(BlockMap {
            block_size: n,
            block_count: m,
            map,
        })
    }

    pub fn identity(n: usize, m: usize) -> Self {
        BlockMap {
            block_size: n,
            block_count: m,
            map: PartialMap::identity(n * m),
        }
    }

    /// Points per block.
    pub fn block_size(&self) -> usize {
        self.block_size
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.block_count
    }

    /// The underlying flat partial map on `n·m` points.
    pub fn map(&self) -> &PartialMap {
        &self.map
    }

    /// Product of `self` and `rhs`, in that order. Partition preservation is
    /// closed under composition, so no re-check happens here.
    pub fn multiply(&self, rhs: &BlockMap) -> Result<BlockMap> {
        if !MonoidElement::same_shape(self, rhs) {
            return Err(Error::DimensionMismatch {
                left: (self.block_size, self.block_count),
                right: (rhs.block_size, rhs.block_count),
            });
        }
        let map = self.map.compose(&rhs.map).expect("degrees match");
        debug_assert!(preserves_partition(&map, self.block_size, self.block_count).unwrap());
        Ok(BlockMap {
            block_size: self.block_size,
            block_count: self.block_count,
            map,
        })
    }
}

impl MonoidElement for BlockMap {
    fn multiply(&self, rhs: &Self) -> Self {
        BlockMap::multiply(self, rhs).expect("shapes match")
    }

    fn identity_like(&self) -> Self {
        BlockMap::identity(self.block_size, self.block_count)
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.block_size == other.block_size && self.block_count == other.block_count
    }
}

/// Whether the flat map `p` of degree `n·m` sends the defined points of each
/// block into one block.
pub fn preserves_partition(p: &PartialMap, n: usize, m: usize) -> Result<bool> {
    if p.degree() != n * m {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: n * m,
        });
    }
    for j in 0..m {
        let mut target = None;
        for i in 0..n {
            if let Some(v) = p.image(i + j * n) {
                let b = v / n;
                match target {
                    None => target = Some(b),
                    Some(t) if t != b => return Ok(false),
                    _ => {}
                }
            }
        }
    }
    Ok(true)
}

/// The canonical surjection PTₙ ≀ Tₘ → PT_{n×m}.
///
/// Block `j` maps into block `tail(j)`, acting inside as component `j`; the
/// point `(i, j)` is defined exactly when component `j` is defined at `i`.
pub fn phi(x: &WreathElement) -> BlockMap {
    let n = x.inner_degree();
    let m = x.outer_degree();
    let mut images = vec![UNDEFINED; n * m];
    for (j, (c, &t)) in x.components().iter().zip(x.tail().images()).enumerate() {
        for i in 0..n {
            if let Some(v) = c.image(i) {
                images[i + j * n] = v + t * n;
            }
        }
    }
    BlockMap {
        block_size: n,
        block_count: m,
        map: PartialMap::from_images(images).expect("images in range"),
    }
}

/// The distinguished preimage of `b` under [`phi`]: empty blocks get tail
/// entry 1. The result is always in canonical form and
/// `phi(&phi_section(b)) == *b`.
pub fn phi_section(b: &BlockMap) -> WreathElement {
    let n = b.block_size;
    let m = b.block_count;
    let mut components = Vec::with_capacity(m);
    let mut tail = Vec::with_capacity(m);
    for j in 0..m {
        let mut target = 0;
        let mut inner = vec![UNDEFINED; n];
        for (i, slot) in inner.iter_mut().enumerate() {
            if let Some(v) = b.map.image(i + j * n) {
                target = v / n;
                *slot = v % n;
            }
        }
        components.push(PartialMap::from_images(inner).expect("images in range"));
        tail.push(target);
    }
    WreathElement::new(
        components,
        PartialMap::from_images(tail).expect("images in range"),
    )
    .expect("shape is consistent")
}

/// Whether `x` and `y` have the same image under [`phi`], i.e. lie in the
/// same fibre of the cover. Decided directly on canonical forms.
pub fn kernel_equivalent(x: &WreathElement, y: &WreathElement) -> Result<bool> {
    if !MonoidElement::same_shape(x, y) {
        return Err(Error::DimensionMismatch {
            left: (x.inner_degree(), x.outer_degree()),
            right: (y.inner_degree(), y.outer_degree()),
        });
    }
    Ok(x.canonical_form() == y.canonical_form())
}

/// `|PT_{n×m}| = (m(n+1)ⁿ − m + 1)ᵐ`.
pub fn order_formula(n: usize, m: usize) -> BigCount {
    if m == 0 {
        return BigUint::from(1u32);
    }
    let inner = BigUint::from(n as u64 + 1).pow(n as u32) * m - (m as u64 - 1);
    inner.pow(m as u32)
}

impl fmt::Display for BlockMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} {}",
            self.block_size, self.block_count, self.map
        )
    }
}

impl FromStr for BlockMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rest = s.trim();
        let rest = rest
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("expected `n=… m=… […]`, got `{rest}`")))?;
        let (n_str, rest) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Parse("missing `m=`".into()))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad block size `{n_str}`")))?;
        let rest = rest
            .trim_start()
            .strip_prefix("m=")
            .ok_or_else(|| Error::Parse("missing `m=`".into()))?;
        let (m_str, list) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Parse("missing image list".into()))?;
        let m: usize = m_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad block count `{m_str}`")))?;
        BlockMap::new(n, m, list.parse()?)
    }
}
