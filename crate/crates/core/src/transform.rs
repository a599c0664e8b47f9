//! Partial transformations of a finite chain.
//!
//! A [`PartialMap`] is a partial self-map of `{1, …, n}` stored as an image
//! table. Maps act on the right and compose left to right: `(ab)(i) = b(a(i))`,
//! with the product defined exactly where both steps are. Points are 0-based
//! in the API and 1-based in the text codec, which writes an image list in
//! brackets with `-` for undefined, e.g. `[2,-,3]`.

use std::fmt;
use std::str::FromStr;

use crate::element::MonoidElement;
use crate::error::{Error, Result};

/// Image table entry for points outside the domain.
pub const UNDEFINED: usize = usize::MAX;

/// A partial transformation of `{1, …, n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartialMap {
    images: Vec<usize>,
}

impl PartialMap {
    /// The identity map on `n` points.
    pub fn identity(n: usize) -> Self {
        PartialMap {
            images: (0..n).collect(),
        }
    }

    /// The map on `n` points with empty domain.
    pub fn empty(n: usize) -> Self {
        PartialMap {
            images: vec![UNDEFINED; n],
        }
    }

    /// Builds a map from a 0-based image table; entries are point indices or
    /// [`UNDEFINED`].
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        for &v in &images {
            if v != UNDEFINED && v >= n {
                return Err(Error::InvalidImage { value: v, degree: n });
            }
        }
        Ok(PartialMap { images })
    }

    /// The cyclic permutation of `n` points moving `points[0] → points[1] → …
    /// → points[0]`, written 1-based. Fewer than two points gives the
    /// identity.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut seen = vec![false; n];
        for &p in points {
            if p == 0 || p > n {
                return Err(Error::InvalidPoint { point: p, degree: n });
            }
            if seen[p - 1] {
                return Err(Error::DuplicatePoint { point: p });
            }
            seen[p - 1] = true;
        }
        let mut images: Vec<usize> = (0..n).collect();
        if points.len() >= 2 {
            for (i, &p) in points.iter().enumerate() {
                images[p - 1] = points[(i + 1) % points.len()] - 1;
            }
        }
        Ok(PartialMap { images })
    }

    /// Number of points.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The raw 0-based image table.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 0-based point `i`, or `None` if `i` is outside the
    /// domain.
    pub fn image(&self, i: usize) -> Option<usize> {
        match self.images[i] {
            UNDEFINED => None,
            v => Some(v),
        }
    }

    /// Number of distinct points in the image.
    pub fn rank(&self) -> usize {
        let mut hit = vec![false; self.images.len()];
        let mut count = 0;
        for &v in &self.images {
            if v != UNDEFINED && !hit[v] {
                hit[v] = true;
                count += 1;
            }
        }
        count
    }

    /// Number of points in the domain.
    pub fn domain_size(&self) -> usize {
        self.images.iter().filter(|&&v| v != UNDEFINED).count()
    }

    pub fn is_full(&self) -> bool {
        self.images.iter().all(|&v| v != UNDEFINED)
    }

    pub fn is_empty_map(&self) -> bool {
        self.images.iter().all(|&v| v == UNDEFINED)
    }

    pub fn is_permutation(&self) -> bool {
        self.is_full() && self.rank() == self.degree()
    }

    /// `self` followed by `rhs`.
    pub fn compose(&self, rhs: &PartialMap) -> Result<PartialMap> {
        if self.degree() != rhs.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: rhs.degree(),
            });
        }
        let images = self
            .images
            .iter()
            .map(|&v| if v == UNDEFINED { UNDEFINED } else { rhs.images[v] })
            .collect();
        Ok(PartialMap { images })
    }
}

impl MonoidElement for PartialMap {
    fn multiply(&self, rhs: &Self) -> Self {
        self.compose(rhs).expect("degrees match")
    }

    fn identity_like(&self) -> Self {
        PartialMap::identity(self.degree())
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if v == UNDEFINED {
                write!(f, "-")?;
            } else {
                write!(f, "{}", v + 1)?;
            }
        }
        write!(f, "]")
    }
}

impl FromStr for PartialMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PartialMap::from_images(parse_image_list(s)?)
    }
}

/// Parses a bracketed 1-based image list like `[2,-,3]` into a 0-based table
/// with [`UNDEFINED`] holes. Range checking against the degree is left to
/// [`PartialMap::from_images`].
pub(crate) fn parse_image_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed image list, got `{s}`")))?;
    if inner.trim().is_empty() {
        return Err(Error::Parse("empty image list".into()));
    }
    inner
        .split(',')
        .map(|item| {
            let item = item.trim();
            if item == "-" {
                return Ok(UNDEFINED);
            }
            let v: usize = item
                .parse()
                .map_err(|_| Error::Parse(format!("bad image entry `{item}`")))?;
            if v == 0 {
                return Err(Error::Parse("points are numbered from 1".into()));
            }
            Ok(v - 1)
        })
        .collect()
}
