pub mod classify;
pub mod code;
pub mod error;
pub mod families;
pub mod field;
pub mod linalg;
pub mod numtheory;
pub mod poly;

pub use code::{Bounds, Code, CodeKind, CosetId, CosetLeaderTable, DistanceMethod, Syndrome, Word};
pub use error::{Error, Result};
pub use families::{DeepHoleContext, DeepHoleFamily, FamilyParams, FamilyTag};
pub use field::{Fe, Field, FieldElement};
pub use linalg::Matrix;
pub use poly::{Poly, RationalFunction};
