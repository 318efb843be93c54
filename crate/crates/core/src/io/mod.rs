//! Graph codecs and report output.

pub mod edgelist;
pub mod graph6;
pub mod report;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};
pub use report::{write_records, ReportFormat, ReportRecord, Source};
