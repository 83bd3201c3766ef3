use std::fs;

use serde::de::DeserializeOwned;

/// Parses a JSON argument given inline or as a path to a file.
pub fn load<T: DeserializeOwned>(arg: &str) -> Result<T, String> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') || trimmed.starts_with('"') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("malformed JSON in {}: {e}", short(arg)))
}

fn short(arg: &str) -> String {
    let one_line: String = arg.chars().filter(|c| *c != '\n').take(60).collect();
    if one_line.len() < arg.len() {
        format!("`{one_line}...`")
    } else {
        format!("`{one_line}`")
    }
}
