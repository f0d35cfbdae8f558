//! Flat `key = value` scenario files.
//!
//! One assignment per line, `#` starts a comment, blank lines are ignored.
//! Keys outside the accepted set and repeated keys are rejected.

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`, found `{text}`")]
    Syntax { line: usize, text: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: key `{key}` already set on line {first}")]
    DuplicateKey {
        line: usize,
        key: String,
        first: usize,
    },
    #[error("missing required key `{0}`")]
    Missing(String),
    #[error("line {line}: `{key}` expects {expected}, found `{value}`")]
    BadValue {
        line: usize,
        key: String,
        value: String,
        expected: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq)]
struct Entry {
    value: String,
    line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    entries: BTreeMap<String, Entry>,
}

impl ScenarioConfig {
    pub fn parse(text: &str, accepted_keys: &[&str]) -> Result<Self, ConfigError> {
        let mut entries: BTreeMap<String, Entry> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = match content.split_once('=') {
                Some((k, v)) if !k.trim().is_empty() && !v.trim().is_empty() => {
                    (k.trim(), v.trim())
                }
                _ => {
                    return Err(ConfigError::Syntax {
                        line,
                        text: content.to_string(),
                    })
                }
            };
            if !accepted_keys.contains(&key) {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                });
            }
            if let Some(first) = entries.get(key) {
                return Err(ConfigError::DuplicateKey {
                    line,
                    key: key.to_string(),
                    first: first.line,
                });
            }
            entries.insert(
                key.to_string(),
                Entry {
                    value: value.to_string(),
                    line,
                },
            );
        }
        Ok(Self { entries })
    }

    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|e| e.value.as_str())
    }

    pub fn get_f64(&self, key: &str) -> Result<Option<f64>, ConfigError> {
        let Some(entry) = self.entries.get(key) else {
            return Ok(None);
        };
        match entry.value.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(Some(v)),
            _ => Err(ConfigError::BadValue {
                line: entry.line,
                key: key.to_string(),
                value: entry.value.clone(),
                expected: "a finite number",
            }),
        }
    }

    pub fn require_f64(&self, key: &str) -> Result<f64, ConfigError> {
        self.get_f64(key)?
            .ok_or_else(|| ConfigError::Missing(key.to_string()))
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64, ConfigError> {
        Ok(self.get_f64(key)?.unwrap_or(default))
    }

    /// Reports a value that parsed but is not one of `expected`.
    pub fn bad_value(&self, key: &str, expected: &'static str) -> ConfigError {
        let entry = &self.entries[key];
        ConfigError::BadValue {
            line: entry.line,
            key: key.to_string(),
            value: entry.value.clone(),
            expected,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KEYS: &[&str] = &["freq_ghz", "atmosphere", "margin_db"];

    #[test]
    fn parses_comments_and_blank_lines() {
        let cfg = ScenarioConfig::parse(
            "# scenario\n\nfreq_ghz = 165   # carrier\natmosphere=standard\n",
            KEYS,
        )
        .unwrap();
        assert_eq!(cfg.require_f64("freq_ghz").unwrap(), 165.0);
        assert_eq!(cfg.get_str("atmosphere"), Some("standard"));
        assert_eq!(cfg.f64_or("margin_db", 7.0).unwrap(), 7.0);
    }

    #[test]
    fn unknown_key_is_fatal() {
        let err = ScenarioConfig::parse("freq_ghx = 165\n", KEYS).unwrap_err();
        assert_eq!(
            err,
            ConfigError::UnknownKey {
                line: 1,
                key: "freq_ghx".into()
            }
        );
    }

    #[test]
    fn duplicate_key_is_fatal() {
        let err = ScenarioConfig::parse("freq_ghz = 165\n\nfreq_ghz = 166\n", KEYS).unwrap_err();
        assert!(matches!(
            err,
            ConfigError::DuplicateKey {
                line: 3,
                first: 1,
                ..
            }
        ));
    }

    #[test]
    fn malformed_lines() {
        for bad in ["freq_ghz 165", "= 3", "freq_ghz =", "[section]"] {
            assert!(
                matches!(
                    ScenarioConfig::parse(bad, KEYS),
                    Err(ConfigError::Syntax { .. })
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn typed_access() {
        let cfg = ScenarioConfig::parse("freq_ghz = lots\nmargin_db = inf\n", KEYS).unwrap();
        assert!(matches!(
            cfg.get_f64("freq_ghz"),
            Err(ConfigError::BadValue { line: 1, .. })
        ));
        assert!(cfg.get_f64("margin_db").is_err());
        assert_eq!(
            cfg.require_f64("atmosphere"),
            Err(ConfigError::Missing("atmosphere".into()))
        );
    }
}
