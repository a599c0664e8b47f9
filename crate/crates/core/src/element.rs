use std::hash::Hash;

/// The interface the enumeration and word machinery need from an element.
///
/// Implementations exist for [`crate::PartialMap`], [`crate::WreathElement`]
/// and [`crate::BlockMap`]. Products act left to right throughout the crate:
/// `a.multiply(&b)` applied to a point `i` is `b(a(i))`.
pub trait MonoidElement: Clone + Eq + Hash {
    /// Product of `self` and `rhs`, in that order.
    ///
    /// Callers must only pair elements of the same shape (see
    /// [`same_shape`](Self::same_shape)); implementations may panic
    /// otherwise. The checked entry points are the inherent `compose` /
    /// `multiply` methods on the concrete types.
    fn multiply(&self, rhs: &Self) -> Self;

    /// The identity with the same shape as `self`.
    fn identity_like(&self) -> Self;

    /// Whether the two elements live in the same monoid instance.
    fn same_shape(&self, other: &Self) -> bool;

    /// `self` raised to `exp` by binary exponentiation; `exp == 0` gives the
    /// identity.
    fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.identity_like();
        let mut base = self.clone();
        loop {
            if exp & 1 == 1 {
                acc = acc.multiply(&base);
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            base = base.multiply(&base);
        }
        acc
    }
}
