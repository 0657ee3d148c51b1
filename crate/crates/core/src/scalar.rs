use std::fmt::Debug;

use num_traits::{FromPrimitive, Num};

/// Numeric types the exact kernels run over.
///
/// Counting and matrix kernels only need ring operations, so machine
/// integers work as long as the result fits. Interpolation and polynomial
/// division additionally require exact division, i.e. a field such as
/// [`crate::Rational`].
pub trait Scalar: Clone + Debug + PartialEq + Num + FromPrimitive + Send + Sync {
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("scalar type cannot represent index")
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + FromPrimitive + Send + Sync {}
