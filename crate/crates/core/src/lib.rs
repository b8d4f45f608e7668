pub mod cache;
pub mod cli;
pub mod engine;
pub mod fixtures;
pub mod model;
pub mod potential;
pub mod rational;
pub mod render;
