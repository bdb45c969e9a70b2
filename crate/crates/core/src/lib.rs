pub mod database;
pub mod proof;
pub mod query;
pub mod semantics;
pub mod syntax;
