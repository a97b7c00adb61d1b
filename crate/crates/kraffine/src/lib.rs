//! Exact symbolic computation for Kirillov–Reshetikhin modules over quantum
//! affine algebras: R-matrix denominators, universal coefficients,
//! q-characters, T-systems, Dorey-rule combinatorics and commuting families.

pub mod affine_data;
pub mod arquiver;
pub mod commuting;
pub mod denominator;
pub mod dorey;
pub mod error;
pub mod qchar;
pub mod scalar;
pub mod tsystem;
pub mod ucoef;

pub use affine_data::{cartan_data, AffineType, CartanData, Family, Kind};
pub use denominator::{
    fundamental_denominator, kr_denominator, Denominators, FundamentalTable, RootMultiset,
};
pub use error::{Error, Result};
pub use scalar::QMonomial;
