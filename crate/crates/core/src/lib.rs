pub mod abstract_ops;
pub mod cli;
pub mod exact_values;
pub mod expr;
pub mod identity_registry;
pub mod odd_zeta;
pub mod quad;
pub mod real;
pub mod series_mapping;
