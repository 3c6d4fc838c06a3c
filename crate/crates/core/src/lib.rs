//! Exact structure theory of finite-dimensional Leibniz algebras over the
//! rationals.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod envelope;
pub mod exact;
pub mod extensions;
pub mod structure;
