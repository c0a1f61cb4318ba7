use serde::Serialize;
use serde_json::Value;

/// Uniform envelope for machine-readable command output.
#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub items: Vec<Value>,
    pub mismatches: Vec<String>,
    pub wall_ms: u128,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            items: Vec::new(),
            mismatches: Vec::new(),
            wall_ms: 0,
        }
    }

    pub fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("report serializes"));
    }
}
