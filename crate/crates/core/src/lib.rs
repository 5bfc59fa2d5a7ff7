pub mod bitset;
pub mod clique;
pub mod cover;
pub mod distance;
pub mod equalizer;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod apfree;
pub mod families;
pub mod resolving;
pub mod enumerate;
pub mod conjectures;
pub mod report;
