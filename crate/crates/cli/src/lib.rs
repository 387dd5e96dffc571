//! Document format and report rendering behind the `ivfg` binary, exposed
//! as a library so integration tests can drive them directly.

pub mod format;
pub mod render;
