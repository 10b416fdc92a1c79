//! Equilateral sets of the Petty space.
//!
//! After a translation and a rotation about the z-axis every 5-point
//! 1-equilateral set contains the origin and `(0, d, 1 − d)`; the other three
//! points form a unit triangle on an ellipse determined by the submersion
//! `d`, which exists exactly for `d` in a short interval `[d₂, d₁]`.

mod center;
mod ellipse;
mod extension;
mod section;
mod triangle;

pub use center::{
    center_spread, inflated_box, no_center_evidence, no_center_evidence_for_set, CenterEvidence,
};
pub use ellipse::{endpoint_cubic, feasibility_endpoints, EllipseFamily, FeasibleInterval};
pub use extension::{equidistant_extensions, extend_triangle_to_four};
pub use section::{cone_cross_section, section, Disc, SectionPair};
pub use triangle::{
    build_quintuple, equilateral_triangle_on_ellipse, neighbor_at_unit_distance, EllipseTriangle,
    EquilateralQuintuple, BOUNDARY_BAND,
};
