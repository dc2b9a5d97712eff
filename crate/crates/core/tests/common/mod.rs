pub use freeabel::audit::{random_lin, random_mat, random_tuple};
