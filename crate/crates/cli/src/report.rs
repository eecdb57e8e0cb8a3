use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Stats {
    pub nodes: u64,
    pub wall_ms: f64,
}

/// One line of output. `body` holds the command's own fields and is
/// flattened into the top level.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    /// The input graph as graph6.
    pub input: String,
    #[serde(flatten)]
    pub body: Value,
    pub stats: Stats,
}

impl Report {
    pub fn new(command: &str, input: &str, body: Value, nodes: u64, wall: Duration) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input: input.to_string(),
            body,
            stats: Stats {
                nodes,
                wall_ms: wall.as_secs_f64() * 1e3,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }
}
