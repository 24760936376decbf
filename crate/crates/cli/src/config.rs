//! `--config` support. The file is TOML whose keys are flag names; they are
//! spliced into the argument list ahead of the user's own flags so the
//! command line wins and clap rejects unknown keys.

use std::ffi::OsString;
use std::path::Path;

const GLOBAL_WITH_VALUE: &[&str] = &["--format", "--ceiling", "--seed", "--jobs", "--config"];
const GLOBAL_KEYS: &[&str] = &["format", "ceiling", "seed", "jobs", "strict"];

fn config_path(args: &[String]) -> Option<String> {
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(v) = a.strip_prefix("--config=") {
            return Some(v.to_string());
        }
    }
    None
}

fn value_to_flags(key: &str, value: &toml::Value) -> Result<Vec<String>, String> {
    let flag = format!("--{}", key.replace('_', "-"));
    let scalar = |v: &toml::Value| -> Result<String, String> {
        match v {
            toml::Value::String(s) => Ok(s.clone()),
            toml::Value::Integer(i) => Ok(i.to_string()),
            other => Err(format!("unsupported value for {key:?}: {other}")),
        }
    };
    Ok(match value {
        toml::Value::Boolean(true) => vec![flag],
        toml::Value::Boolean(false) => vec![],
        toml::Value::Array(items) => {
            let parts = items.iter().map(scalar).collect::<Result<Vec<_>, _>>()?;
            vec![flag, parts.join(",")]
        }
        v => vec![flag, scalar(v)?],
    })
}

/// Index just past the subcommand path (`cmd` or `sweep target`), if any.
fn command_end(args: &[String]) -> Option<usize> {
    let mut i = 1;
    while i < args.len() {
        let a = &args[i];
        if GLOBAL_WITH_VALUE.contains(&a.as_str()) {
            i += 2;
        } else if a.starts_with('-') {
            i += 1;
        } else {
            let mut end = i + 1;
            if a == "sweep" && args.get(end).is_some_and(|t| !t.starts_with('-')) {
                end += 1;
            }
            return Some(end);
        }
    }
    None
}

/// Returns the effective argument list after merging the config file.
pub fn merge(args: Vec<String>) -> Result<Vec<OsString>, String> {
    let Some(path) = config_path(&args) else {
        return Ok(args.into_iter().map(Into::into).collect());
    };
    let text = std::fs::read_to_string(Path::new(&path))
        .map_err(|e| format!("cannot read config {path}: {e}"))?;
    let table: toml::Table = text
        .parse()
        .map_err(|e| format!("invalid config {path}: {e}"))?;

    let mut globals = Vec::new();
    let mut params = Vec::new();
    let mut command: Option<Vec<String>> = None;
    for (key, value) in &table {
        if key == "command" {
            let s = value.as_str().ok_or("config key \"command\" must be a string")?;
            command = Some(s.split_whitespace().map(String::from).collect());
        } else if GLOBAL_KEYS.contains(&key.as_str()) {
            globals.extend(value_to_flags(key, value)?);
        } else {
            params.extend(value_to_flags(key, value)?);
        }
    }

    let mut out = vec![args[0].clone()];
    out.extend(globals);
    match command_end(&args) {
        Some(end) => {
            out.extend_from_slice(&args[1..end]);
            out.extend(params);
            out.extend_from_slice(&args[end..]);
        }
        None => {
            let cmd = command.ok_or("no command given on the command line or in the config")?;
            out.extend_from_slice(&args[1..]);
            out.extend(cmd);
            out.extend(params);
        }
    }
    Ok(out.into_iter().map(Into::into).collect())
}
