//! Exact arbitrary-precision integers and truncating scaled decimals.

mod dec;
mod nat;

pub use dec::FixedDec;
pub use nat::BigNat;
