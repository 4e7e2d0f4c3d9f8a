//! Classification of self-dual additive codes over `F_{m²}` through orbits
//! of `m`-weighted graphs under generalized local complementation.

pub mod canon;
pub mod circulant;
pub mod classify;
pub mod code;
pub mod counting;
pub mod error;
pub mod exec;
pub mod field;
pub mod formats;
pub mod graph;
mod linalg;
pub mod orbit;
mod packed;
pub mod standard_form;
pub mod weights;

pub use canon::{canonical_form, CanonicalForm, Canonizer, Equivalence};
pub use circulant::{search_circulant, verify_listed_codes, CirculantResult, ListedCheck, ListedCode};
pub use classify::{classify, classify_up_to, distance_table, lengthen_search, ClassifyOptions, OrbitDatabase, OrbitRep};
pub use code::{graph_code, is_self_dual, singleton_status, AdditiveCode, SingletonStatus, StabilizerMatrix};
pub use counting::{aut_order_bruteforce, euler_transform, mass_lower_bound, mass_total, selfdual_count_oracle, CountTable};
pub use error::{Error, Result};
pub use exec::Exec;
pub use field::{ArithOp, Field, FieldElement, FieldSpec, Level};
pub use graph::{Connectivity, WeightedGraph};
pub use orbit::{codes_equivalent, lc_orbit, orbit_min_degree_check, KeyCodec, OrbitEngine, OrbitSummary, DEFAULT_ORBIT_BUDGET};
pub use standard_form::{standard_form, StandardForm, Step};
pub use weights::{
    circulant_min_distance_at_least, code_min_distance, min_distance, min_distance_at_least, weight_enumerator,
    WeightEnumerator, DEFAULT_ENUMERATION_CAP,
};
