use chain_endo_cli::{run_command, CommandOutput, REPORT_SCHEMA};

pub fn run(args: &[&str]) -> CommandOutput {
    run_command(std::iter::once("chain-endo").chain(args.iter().copied()))
}

/// Validation errors of `instance` against the report schema; empty if valid.
pub fn schema_errors(instance: &serde_json::Value) -> Vec<String> {
    let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).expect("schema is JSON");
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    validator
        .iter_errors(instance)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect()
}
