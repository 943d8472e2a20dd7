//! Optional key-value configuration: default truncation orders and grid
//! bounds for `verify`. Flags override the file; the `LATPATH_MAX_N`
//! environment variable caps grid sizes regardless of both.
//!
//! Format: one `key = value` pair per line, `#` starts a comment.
//! Recognized keys: `max-n`, `max-k`, `order`.

use std::path::Path;

#[derive(Debug, Clone, Copy, Default)]
pub struct Config {
    pub max_n: Option<usize>,
    pub max_k: Option<u32>,
    pub order: Option<usize>,
}

impl Config {
    pub fn load(explicit: Option<&Path>) -> Result<Config, String> {
        let path = match explicit {
            Some(p) => p.to_path_buf(),
            None => {
                let default = Path::new("latpath.conf");
                if !default.exists() {
                    return Ok(Config::default());
                }
                default.to_path_buf()
            }
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut config = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("{}:{}: expected key = value", path.display(), lineno + 1))?;
            let key = key.trim();
            let value = value.trim();
            let parse = |what: &str| {
                value
                    .parse::<usize>()
                    .map_err(|_| format!("{}:{}: bad {what} value {value:?}", path.display(), lineno + 1))
            };
            match key {
                "max-n" => config.max_n = Some(parse("max-n")?),
                "max-k" => config.max_k = Some(parse("max-k")? as u32),
                "order" => config.order = Some(parse("order")?),
                other => {
                    return Err(format!(
                        "{}:{}: unknown key {other:?}",
                        path.display(),
                        lineno + 1
                    ))
                }
            }
        }
        Ok(config)
    }
}

/// Apply the `LATPATH_MAX_N` safety cap to a grid bound.
pub fn cap_max_n(requested: usize) -> usize {
    match std::env::var("LATPATH_MAX_N") {
        Ok(v) => match v.parse::<usize>() {
            Ok(cap) => requested.min(cap),
            Err(_) => requested,
        },
        Err(_) => requested,
    }
}
