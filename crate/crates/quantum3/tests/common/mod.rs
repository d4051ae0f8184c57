//! Shared test support: the independent pentagon/hexagon solver oracle.

pub mod oracle;
