use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::binoid::{BinoidDocument, ImageDocument};
use crate::error::{Error, Result};

/// A section given by the id of a shared binoid or inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SectionDocument {
    Id(String),
    Inline(BinoidDocument),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to: Option<String>,
    pub images: BTreeMap<String, ImageDocument>,
}

/// Index sets are keyed by sorted digit strings such as `"12"`, or by
/// comma separated indices such as `"2,10"` once there are ten or more charts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeDocument {
    #[serde(default)]
    pub binoids: BTreeMap<String, BinoidDocument>,
    pub charts: BTreeMap<String, SectionDocument>,
    #[serde(default)]
    pub intersections: BTreeMap<String, SectionDocument>,
    /// Keyed `"α<β"` for `α ⊂ β`; omitted entries between equal section
    /// ids are identities.
    #[serde(default)]
    pub restrictions: BTreeMap<String, RestrictionDocument>,
}

impl SchemeDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn parse_index_set(key: &str) -> Result<Vec<usize>> {
    let bad = || Error::ParseError(format!("bad index set `{key}`"));
    let mut out: Vec<usize> = if key.contains(',') {
        key.split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    } else {
        key.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect::<Result<_>>()?
    };
    if out.is_empty() || out.contains(&0) {
        return Err(bad());
    }
    let len = out.len();
    out.sort_unstable();
    out.dedup();
    if out.len() != len {
        return Err(bad());
    }
    Ok(out)
}

pub fn index_set_key(set: &[usize]) -> String {
    if set.iter().all(|&i| i < 10) {
        set.iter().map(|i| i.to_string()).collect()
    } else {
        set.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_restriction_key(key: &str) -> Result<(Vec<usize>, Vec<usize>)> {
    let (a, b) = key
        .split_once('<')
        .ok_or_else(|| Error::ParseError(format!("restriction key `{key}` lacks `<`")))?;
    Ok((parse_index_set(a.trim())?, parse_index_set(b.trim())?))
}
