//! Partitions, Young and Weyl tableaux, growth paths and Gelfand–Tsetlin patterns.

mod gt;
mod partition;
mod weyl;
mod young;

use std::fmt;

pub(crate) use gt::interlacing_violation;
pub use gt::GtPattern;
pub use partition::{partitions, BoxCoord, Partition};
pub use weyl::{Alphabet, ContentVector, WeylTableau};
pub use young::{enumerate_syt, GrowthPath, StandardYoungTableau};

use crate::error::TableauError;

/// All standard Weyl tableaux of `shape` over `1..=d`, in canonical order.
pub fn enumerate_weyl(shape: &Partition, d: u8) -> Result<Vec<WeylTableau>, TableauError> {
    WeylTableau::enumerate(shape, d)
}

/// `[[a,b,c],[d]]`
pub(crate) fn write_rows<R, I>(f: &mut fmt::Formatter<'_>, rows: R) -> fmt::Result
where
    R: Iterator<Item = I>,
    I: Iterator<Item = u64>,
{
    f.write_str("[")?;
    for (r, row) in rows.enumerate() {
        if r > 0 {
            f.write_str(",")?;
        }
        f.write_str("[")?;
        for (c, e) in row.enumerate() {
            if c > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")?;
    }
    f.write_str("]")
}
