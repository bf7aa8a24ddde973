//! Standard Young tableaux with at most three rows, their m-diagrams, and
//! the sl3 webs obtained by resolving them.
//!
//! The pipeline is tableau -> [`MDiagram`] -> [`Web`], and back through the
//! depth map. Promotion of tableaux corresponds to rotation of webs and
//! shuffling corresponds to joining.

pub mod format;
pub mod mdiagram;
mod planar;
pub mod tableau;
pub mod verify;
pub mod webmap;

pub use format::{FormatError, ParseError};
pub use mdiagram::{
    arcs_cross, Arc, Arrangement, ArrangementFaceTable, Crossing, M, MDiagram, MDiagramError,
    PairPosition, PointRole, Rational,
};
pub use tableau::{
    compact, count_standard, enumerate_standard, random_standard, shuffle, PromotionPath, Shape,
    Slide, SlideDirection, StandardTableau, TableauError,
};
pub use verify::{VerifyError, VerifyReport};
pub use webmap::{
    resolve, resolve_with_faces, DepthProfile, FaceTable, NonReduced, Orientation, Resolution,
    Vertex, VertexKind, Web, WebError,
};
