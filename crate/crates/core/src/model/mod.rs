//! Basis indexing, partitions, operators and the certified-bound type shared
//! by every other module.

mod bound;
mod index;
mod matrix;
mod operator;
mod partition;

pub use bound::NormBound;
pub use index::{cantor_pair, cantor_unpair, BasisIndex, BlockId};
pub use matrix::FiniteMatrix;
pub use operator::{
    ExplicitOperator, Generator, OperatorRep, StripBound, TailBound, WitnessFamily,
    INNER_SUM_CUTOFF,
};
pub use partition::{BlockIndices, BlockSize, Partition};
