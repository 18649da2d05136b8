pub mod arith;
pub mod blocks;
pub mod chartab;
pub mod classdata;
pub mod conjectures;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod groupspec;
pub mod modp;
pub mod permgroup;
pub mod permutation;
pub mod workbench;

pub use chartab::CharacterTable;
pub use classdata::ClassData;
pub use cyclotomic::Cyclo;
pub use error::{Error, Result};
pub use groupspec::GroupSpec;
pub use permgroup::PermGroup;
pub use permutation::Permutation;
