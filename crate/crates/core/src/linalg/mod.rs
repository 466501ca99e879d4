//! Integer linear algebra: dense big-integer matrices, Smith normal form,
//! and finitely generated abelian groups.

mod abelian;
mod matrix;
mod snf;

pub use abelian::{AbelianGroupData, AbelianQuotient};
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithDecomposition};
