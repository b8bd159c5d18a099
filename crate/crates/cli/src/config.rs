//! Settings resolution: flags, then `SELFDUAL_*` environment variables, then
//! a flat TOML file, then built-in defaults.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use selfdual_core::analysis::{Filter, TablePreset, DEFAULT_SCAN_LIMIT};
use selfdual_core::{Letter, PairKind};

use crate::error::{CliError, CliResult};

pub const DEFAULT_HEIGHT: u32 = 2;
pub const DEFAULT_CACHE_CAPACITY: usize = 4096;
pub const ENV_PREFIX: &str = "SELFDUAL_";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Paper,
    Long,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paper" => Ok(Format::Paper),
            "long" | "csv" => Ok(Format::Long),
            "json" => Ok(Format::Json),
            other => Err(CliError::Parse(format!(
                "unknown format {other:?} (expected paper, long or json)"
            ))),
        }
    }
}

/// One source of settings, every value still unparsed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Layer {
    pub family: Option<String>,
    pub rank: Option<String>,
    pub pair: Option<String>,
    pub n: Option<String>,
    pub height: Option<String>,
    pub filter: Option<String>,
    pub format: Option<String>,
    pub workers: Option<String>,
    pub cache: Option<String>,
    pub cache_capacity: Option<String>,
    pub limit: Option<String>,
    pub stable: Option<String>,
    pub preset: Option<String>,
}

macro_rules! each_key {
    ($m:ident) => {
        $m!(
            family,
            rank,
            pair,
            n,
            height,
            filter,
            format,
            workers,
            cache,
            cache_capacity,
            limit,
            stable,
            preset
        )
    };
}

impl Layer {
    /// `self` wins wherever both are set.
    pub fn or(self, fallback: Layer) -> Layer {
        macro_rules! merge {
            ($($k:ident),*) => { Layer { $($k: self.$k.or(fallback.$k)),* } };
        }
        each_key!(merge)
    }

    pub fn from_env(env: &HashMap<String, String>) -> Layer {
        let get = |k: &str| env.get(&format!("{ENV_PREFIX}{}", k.to_ascii_uppercase())).cloned();
        macro_rules! read {
            ($($k:ident),*) => { Layer { $($k: get(stringify!($k))),* } };
        }
        each_key!(read)
    }

    /// Scalars of any TOML type are accepted and kept as text.
    pub fn from_toml(text: &str, origin: &Path) -> CliResult<Layer> {
        let table: toml::Table =
            toml::from_str(text).map_err(|e| CliError::Parse(format!("config {}: {e}", origin.display())))?;
        let mut flat = toml::Table::new();
        for (k, v) in table {
            let s = match v {
                toml::Value::String(s) => s,
                toml::Value::Integer(i) => i.to_string(),
                toml::Value::Boolean(b) => b.to_string(),
                other => {
                    return Err(CliError::Parse(format!(
                        "config {}: key {k:?} must be a scalar, found {}",
                        origin.display(),
                        other.type_str()
                    )))
                }
            };
            flat.insert(k.replace('-', "_"), toml::Value::String(s));
        }
        flat.try_into()
            .map_err(|e| CliError::Parse(format!("config {}: {e}", origin.display())))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub family: Option<Letter>,
    pub rank: Option<usize>,
    pub pair: Option<PairKind>,
    pub n: Option<usize>,
    pub height: u32,
    pub filter: Filter,
    pub format: Format,
    pub workers: Option<usize>,
    pub cache: Option<PathBuf>,
    pub cache_capacity: usize,
    pub limit: u64,
    pub stable: bool,
    pub preset: Option<TablePreset>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            family: None,
            rank: None,
            pair: None,
            n: None,
            height: DEFAULT_HEIGHT,
            filter: Filter::none(),
            format: Format::Paper,
            workers: None,
            cache: None,
            cache_capacity: DEFAULT_CACHE_CAPACITY,
            limit: DEFAULT_SCAN_LIMIT,
            stable: false,
            preset: None,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> CliResult<T> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::Parse(format!("invalid value {value:?} for {key}")))
}

fn parse_core<T: FromStr<Err = selfdual_core::Error>>(value: &str) -> CliResult<T> {
    value
        .parse()
        .map_err(|e: selfdual_core::Error| CliError::Parse(e.to_string()))
}

fn parse_bool(key: &str, value: &str) -> CliResult<bool> {
    match value.trim().to_ascii_lowercase().as_str() {
        "1" | "true" | "yes" | "on" => Ok(true),
        "0" | "false" | "no" | "off" | "" => Ok(false),
        _ => Err(CliError::Parse(format!("invalid value {value:?} for {key}"))),
    }
}

/// `0` means "one worker per core".
fn parse_workers(value: &str) -> CliResult<Option<usize>> {
    let w: usize = parse("workers", value)?;
    Ok((w > 0).then_some(w))
}

impl Settings {
    pub fn from_layer(layer: &Layer) -> CliResult<Settings> {
        let d = Settings::default();
        Ok(Settings {
            family: layer.family.as_deref().map(parse_core).transpose()?,
            rank: layer.rank.as_deref().map(|v| parse("rank", v)).transpose()?,
            pair: layer.pair.as_deref().map(parse_core).transpose()?,
            n: layer.n.as_deref().map(|v| parse("n", v)).transpose()?,
            height: layer
                .height
                .as_deref()
                .map(|v| parse("height", v))
                .transpose()?
                .unwrap_or(d.height),
            filter: layer.filter.as_deref().map(parse_core).transpose()?.unwrap_or(d.filter),
            format: layer.format.as_deref().map(str::parse).transpose()?.unwrap_or(d.format),
            workers: layer.workers.as_deref().map(parse_workers).transpose()?.flatten(),
            cache: layer.cache.as_ref().filter(|p| !p.is_empty()).map(PathBuf::from),
            cache_capacity: layer
                .cache_capacity
                .as_deref()
                .map(|v| parse("cache-capacity", v))
                .transpose()?
                .unwrap_or(d.cache_capacity),
            limit: layer
                .limit
                .as_deref()
                .map(|v| parse("limit", v))
                .transpose()?
                .unwrap_or(d.limit),
            stable: layer
                .stable
                .as_deref()
                .map(|v| parse_bool("stable", v))
                .transpose()?
                .unwrap_or(d.stable),
            preset: layer.preset.as_deref().map(parse_core).transpose()?,
        })
    }

    /// `config` is the file named by `--config` or `SELFDUAL_CONFIG`.
    pub fn resolve(flags: Layer, env: &HashMap<String, String>, config: Option<&Path>) -> CliResult<Settings> {
        let file = match config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Parse(format!("cannot read config {}: {e}", path.display())))?;
                Layer::from_toml(&text, path)?
            }
            None => Layer::default(),
        };
        Settings::from_layer(&flags.or(Layer::from_env(env)).or(file))
    }
}
