//! Ideal arithmetic on top of Buchberger's algorithm: normal forms,
//! membership, intersections, colon ideals, saturation, Krull dimension and
//! graded Hilbert function values.

mod basis;
mod ideal;
mod order;

pub use basis::{Budget, GbConfig, GroebnerBasis};
pub use ideal::{
    colon_by_ideal, colon_ideal, hilbert_component_dim, ideal_membership, intersect,
    is_regular_sequence, krull_dim, saturate_wrt, standard_monomials, Ideal,
};
pub use order::MonomialOrder;

/// Reduced basis of `ideal` under `order`; the ideal's generators are kept.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder, budget: &Budget) -> crate::Result<Ideal> {
    ideal.buchberger(order, budget)
}

/// Normal form against the cached basis of `ideal`.
pub fn normal_form(f: &crate::Poly, ideal: &Ideal) -> crate::Result<crate::Poly> {
    ideal.normal_form(f)
}
