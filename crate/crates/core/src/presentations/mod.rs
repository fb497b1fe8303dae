//! Cartan matrix, Chevalley and Green presentations (classical and
//! deformed), the conversion formulas between the two generator systems,
//! and the root data.

mod cartan;
mod chevalley;
mod conversion;
mod green;
mod relation;
mod roots;
mod signature;

pub use cartan::{cartan_entry, cartan_matrix, CartanMatrix, B44};
pub use chevalley::chevalley_presentation;
pub use conversion::{
    chevalley_from_green, chevalley_image, green_from_chevalley, green_image, l_from_chevalley,
    q_index_exponent, substitute_scaled, ConversionError, ScaledElement, ScaledExpr,
};
pub use green::{green_presentation, preoscillator_presentation};
pub use relation::{Presentation, PresentationKind, Relation};
pub use roots::{green_root, root_assignment, root_system, Root};
pub use signature::{AlgebraSignature, Sign, SignatureError};
