//! File formats, the sweep harness and the `kreg` command line on top of
//! [`kreg_core`].

pub mod cli;
pub mod format;
pub mod sweep;

pub use format::{
    encode_dot, encode_edgelist, encode_trace, parse_edgelist, parse_trace, FormatError, Metadata,
    OutputDocument,
};
pub use sweep::{render_table, sweep, SweepRow};
