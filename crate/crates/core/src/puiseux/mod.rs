pub mod branches;
pub mod expand;
pub mod relative;
pub mod series;

pub use branches::{group_branches, Branch, BranchSet};
pub use expand::{expand_isolated, expand_to};
pub use relative::{relative_roots, Leaf};
pub use series::{ExtRat, PuiseuxSeries};
