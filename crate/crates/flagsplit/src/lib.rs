//! Exact combinatorics of Weyl groups, Bruhat order, and Richardson
//! intervals, with a desk-scale Frobenius-splitting laboratory over small
//! prime fields.

mod bitmat;
pub mod cartan;
mod error;
pub mod export;
pub mod frobenius;
pub mod report;
pub mod richardson;
pub mod systems;
pub mod weyl;

pub use cartan::{CartanType, Family};
pub use error::{Error, Result};
pub use richardson::{all_intervals, CellModel, CellSet, Interval, UnionVariety};
pub use systems::System;
pub use weyl::{WeylElement, WeylGroup, DEFAULT_ORDER_CAP};

// The guide's code blocks run as doctests, so the book cannot drift from
// the crate.
#[cfg(doctest)]
#[doc(hidden)]
pub mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(weyl_groups, "../../../book/src/weyl-groups.md");
    chapter!(bruhat_order, "../../../book/src/bruhat-order.md");
    chapter!(
        richardson_intervals,
        "../../../book/src/richardson-intervals.md"
    );
    chapter!(
        intersection_systems,
        "../../../book/src/intersection-systems.md"
    );
    chapter!(
        splitting_laboratory,
        "../../../book/src/splitting-laboratory.md"
    );
    chapter!(big_cell_models, "../../../book/src/big-cell-models.md");
    chapter!(cli_and_formats, "../../../book/src/cli-and-formats.md");
}
