pub mod algebra;
pub mod analysis;
pub mod cellular;
pub mod cli;
pub mod connections;
pub mod diagrams;
pub mod exactnum;
pub mod refgroups;
pub mod reps;
pub mod theorem86;
