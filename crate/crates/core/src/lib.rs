//! Evaluation codes over finite fields: vanishing ideals of point sets,
//! standard monomials, evaluation and dual codes, algebraic duals,
//! indicator functions, v-numbers and Reed–Muller duality.

pub mod duality;
pub mod error;
pub mod evalcode;
pub mod families;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod json;
pub mod linalg;
pub mod points;
pub mod polyring;

pub use error::{Error, Result};
pub use field::{Field, FiniteField, GaloisField, Gf};
pub use groebner::VanishingIdeal;
pub use points::PointSet;
pub use polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

pub type Poly = Polynomial<Gf>;
pub type Ring = PolyRing<GaloisField>;
pub type GfCode = evalcode::LinearCode<GaloisField>;
