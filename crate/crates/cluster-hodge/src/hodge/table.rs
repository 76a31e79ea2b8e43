use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::HodgeError;

/// Which cohomology theory a table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableVariant {
    Cohomology,
    IntersectionCohomology,
}

impl fmt::Display for TableVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableVariant::Cohomology => write!(f, "cohomology"),
            TableVariant::IntersectionCohomology => write!(f, "intersection-cohomology"),
        }
    }
}

/// A table of mixed Hodge numbers h^{k,(p,p)} of Tate type.
///
/// Only diagonal Hodge pieces (p, p) occur; `offdiagonal_zero` records
/// that. Zero entries are not stored, so equal tables compare equal
/// structurally. Valid positions satisfy k <= 2*dim, p <= dim, p <= k and
/// k - p <= dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedHodgeTable {
    dim: usize,
    smooth: bool,
    variant: TableVariant,
    offdiagonal_zero: bool,
    entries: BTreeMap<(usize, usize), i64>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    k: usize,
    p: usize,
    h: i64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    dim: usize,
    smooth: bool,
    variant: TableVariant,
    entries: Vec<EntryJson>,
}

impl MixedHodgeTable {
    pub fn empty(dim: usize, smooth: bool, variant: TableVariant) -> Self {
        Self {
            dim,
            smooth,
            variant,
            offdiagonal_zero: true,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn smooth(&self) -> bool {
        self.smooth
    }

    pub fn variant(&self) -> TableVariant {
        self.variant
    }

    /// Relabels the table as intersection cohomology without touching the
    /// entries; valid for smooth varieties where the two theories agree.
    pub fn as_intersection_cohomology(mut self) -> Self {
        self.variant = TableVariant::IntersectionCohomology;
        self
    }

    /// Sets h^{k,(p,p)} = h, validating the position; h = 0 clears it.
    pub fn set(&mut self, k: usize, p: usize, h: i64) -> Result<(), HodgeError> {
        if k > 2 * self.dim || p > k || p > self.dim || k - p > self.dim {
            return Err(HodgeError::EntryOutOfRange {
                k,
                p,
                dim: self.dim,
            });
        }
        if h < 0 {
            return Err(HodgeError::NegativeEntry { k, p, h });
        }
        if h == 0 {
            self.entries.remove(&(k, p));
        } else {
            self.entries.insert((k, p), h);
        }
        Ok(())
    }

    /// h^{k,(p,p)}, zero when unset.
    pub fn entry(&self, k: usize, p: usize) -> i64 {
        *self.entries.get(&(k, p)).unwrap_or(&0)
    }

    /// Like [`entry`](Self::entry) but tolerating out-of-range signed
    /// positions, which count as zero.
    pub fn entry_signed(&self, k: i64, p: i64) -> i64 {
        if k < 0 || p < 0 {
            return 0;
        }
        self.entry(k as usize, p as usize)
    }

    /// Nonzero entries in lexicographic (k, p) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().map(|(&(k, p), &h)| (k, p, h))
    }

    /// Sum of (-1)^k h^{k,(p,p)} over the whole table.
    pub fn euler_characteristic(&self) -> i64 {
        self.entries
            .iter()
            .map(|(&(k, _), &h)| if k % 2 == 0 { h } else { -h })
            .sum()
    }

    /// Serializes to the documented JSON schema.
    pub fn to_json(&self) -> String {
        let repr = TableJson {
            dim: self.dim,
            smooth: self.smooth,
            variant: self.variant,
            entries: self
                .entries
                .iter()
                .map(|(&(k, p), &h)| EntryJson { k, p, h })
                .collect(),
        };
        serde_json::to_string_pretty(&repr).expect("table serialization cannot fail")
    }

    /// Parses the documented JSON schema, revalidating every entry.
    pub fn from_json(text: &str) -> Result<Self, HodgeError> {
        let repr: TableJson = serde_json::from_str(text).map_err(|e| {
            HodgeError::TableUnavailable {
                case: "json".to_string(),
                reason: e.to_string(),
            }
        })?;
        let mut t = MixedHodgeTable::empty(repr.dim, repr.smooth, repr.variant);
        for e in repr.entries {
            let prev = t.entry(e.k, e.p);
            t.set(e.k, e.p, prev + e.h)?;
        }
        Ok(t)
    }

    /// Renders the table with one column per cohomological degree H^k and
    /// one row per weight defect k - p, defect zero first. Every admissible
    /// cell prints its value, zero included.
    pub fn ascii(&self) -> String {
        let max_k = self
            .entries
            .keys()
            .map(|&(k, _)| k)
            .max()
            .unwrap_or(0)
            .max(self.dim);
        let max_defect = self
            .entries
            .iter()
            .filter(|&(_, &h)| h != 0)
            .map(|(&(k, p), _)| k - p)
            .max()
            .unwrap_or(0);
        let width = self
            .entries
            .values()
            .map(|h| h.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        let mut out = String::new();
        out.push_str(&format!("{:>4}", "k-p"));
        for k in 0..=max_k {
            out.push_str(&format!(" {:>width$}", format!("H^{k}")));
        }
        out.push('\n');
        for defect in 0..=max_defect {
            out.push_str(&format!("{defect:>4}"));
            for k in 0..=max_k {
                let cell = if k < defect {
                    0
                } else {
                    self.entry(k, k - defect)
                };
                out.push_str(&format!(" {cell:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Whether every Hodge piece off the (p, p) diagonal vanishes. Tables built
/// by this crate are of Tate type by construction, so this reports their
/// stored flag.
pub fn is_mixed_tate(t: &MixedHodgeTable) -> bool {
    t.offdiagonal_zero
}

/// The curious hard Lefschetz condition in its numerical form: the table is
/// symmetric under (k, p) -> (k + d - 2p, d - p), with positions outside
/// the table reading as zero. The map is an involution, so scanning the
/// whole admissible box checks both directions.
pub fn numerical_chl(t: &MixedHodgeTable) -> bool {
    let d = t.dim() as i64;
    for k in 0..=2 * d {
        for p in 0..=d {
            if t.entry_signed(k, p) != t.entry_signed(k + d - 2 * p, d - p) {
                return false;
            }
        }
    }
    true
}
