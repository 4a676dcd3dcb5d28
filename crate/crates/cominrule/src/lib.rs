//! Schubert intersection numbers for minuscule and cominuscule flag
//! varieties, computed by jeu de taquin on the box poset of the space,
//! together with an executable verification layer for the combinatorial
//! identities the rule satisfies.
//!
//! The supported spaces are named by compact specs:
//!
//! | spec       | space                                   |
//! |------------|-----------------------------------------|
//! | `Gr:k,n`   | Grassmannian Gr(k, C^n)                 |
//! | `QB:n`     | odd quadric Q^(2n-1)                    |
//! | `LG:n`     | Lagrangian Grassmannian LG(n, 2n)       |
//! | `QD:n`     | even quadric Q^(2n-2)                   |
//! | `OG:n`     | spinor variety of D_n                   |
//! | `E6`       | the 16-box exceptional space            |
//! | `E7`       | the 27-box exceptional space            |
//! | `Pmin:n`   | projective space P^(2n-1)               |
//! | `OGmin:n`  | odd orthogonal Grassmannian OG(n, 2n+1) |

pub mod error;
pub mod root_data;
pub mod schubert;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use root_data::{BoxPoset, CorePoset, SpaceSpec};
pub use shapes::{Shape, SkewShape};
