//! Skew polynomials over finite fields and the (σ,δ)-polycyclic codes they
//! generate.
//!
//! Elements of GF(p^m) are handled as integer indices `Σ d_i p^i` over the
//! power basis of a root of the field modulus. A [`FieldCtx`] fixes the
//! twist: σ is a power of the Frobenius and δ = β(σ − id).
//!
//! ```
//! use orecodec_core::{FieldCtx, OrePoly};
//!
//! let ctx = FieldCtx::parse("gf(4)", "sigma=1,beta=1").unwrap();
//! let x = OrePoly::x(&ctx);
//! let w = OrePoly::from_indices(&ctx, &[2]).unwrap();
//! // x·w = (w+1)x + 1
//! assert_eq!(&x * &w, OrePoly::from_indices(&ctx, &[1, 3]).unwrap());
//! ```

pub mod codes;
pub mod error;
pub mod field;
pub mod linalg;
pub mod plt;
pub mod poly;
pub mod spectral;
pub mod wedderburn;

pub use codes::{LinearCode, PolycyclicCode, Side, WeightProfile};
pub use error::{Error, Result};
pub use field::{Felt, FieldCtx, GaloisField};
pub use plt::{CompanionKind, Eigenspace, Plt, SkewMatrix};
pub use poly::OrePoly;
pub use spectral::Decomposition;
pub use wedderburn::WedderburnData;
