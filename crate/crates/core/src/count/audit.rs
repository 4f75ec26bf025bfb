use num_bigint::BigUint;
use serde::Serialize;

use super::{CountError, Engine};
use crate::graph::Graph;
use crate::props::{Checker, Property};

pub const DEFAULT_K_MAX: u32 = 4;
/// Color sets are tracked as bitmasks over the palette.
pub const MAX_AUDIT_PALETTE: u32 = 16;

/// `c_G^Φ(I,k)` for one palette size and one color set `I` (1-based colors).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub k: u32,
    pub colors: Vec<u32>,
    pub count: u64,
}

/// Two color sets of equal size with different counts at the same `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionA {
    pub k: u32,
    pub first: Vec<u32>,
    pub first_count: u64,
    pub second: Vec<u32>,
    pub second_count: u64,
}

/// One color set whose count changes with the palette size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionB {
    pub colors: Vec<u32>,
    pub k1: u32,
    pub count1: u64,
    pub k2: u32,
    pub count2: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub property: String,
    pub k_max: u32,
    pub rows: Vec<AuditRow>,
    pub condition_a: Option<ConditionA>,
    pub condition_b: Option<ConditionB>,
}

impl AuditReport {
    pub fn passes(&self) -> bool {
        self.condition_a.is_none() && self.condition_b.is_none()
    }

    /// One line naming the first violation of each condition, if any.
    pub fn violation_summary(&self) -> Option<String> {
        let mut parts = Vec::new();
        if let Some(a) = &self.condition_a {
            parts.push(format!(
                "condition A: at k={} colors {:?} give {} but {:?} give {}",
                a.k, a.first, a.first_count, a.second, a.second_count
            ));
        }
        if let Some(b) = &self.condition_b {
            parts.push(format!(
                "condition B: colors {:?} give {} at k={} but {} at k={}",
                b.colors, b.count1, b.k1, b.count2, b.k2
            ));
        }
        (!parts.is_empty()).then(|| parts.join("; "))
    }
}

fn set_colors(mask: u64) -> Vec<u32> {
    (0..64).filter(|c| mask >> c & 1 == 1).map(|c| c + 1).collect()
}

impl Engine {
    /// Counts `c_G^Φ(I,k)` for every `k ≤ k_max` and `I ⊆ [k]` by enumeration
    /// and reports the first violation of each invariance condition.
    pub fn zilber_audit(&self, g: &Graph, prop: &Property, k_max: u32) -> Result<AuditReport, CountError> {
        if k_max > MAX_AUDIT_PALETTE {
            return Err(CountError::Budget {
                what: "invariance audit palette",
                needed: k_max.to_string(),
                budget: MAX_AUDIT_PALETTE as u64,
            });
        }
        let checker = Checker::new(prop, g)?;
        let d = checker.domain_size();
        let cost: BigUint = (1..=k_max).map(|k| BigUint::from(k).pow(d as u32)).sum();
        self.charge("invariance audit", &cost)?;
        let mut rows = Vec::new();
        // first_seen[mask] = (k, count) at the first k where the set was counted
        let mut first_seen: Vec<Option<(u32, u64)>> = vec![None; 1 << k_max];
        let mut condition_a = None;
        let mut condition_b = None;
        for k in 1..=k_max {
            let sets = 1usize << k;
            let counts = self.sweep(
                d,
                k,
                || vec![0u64; sets],
                |acc, colors| {
                    if checker.accepts(colors, k) {
                        let used = colors.iter().fold(0usize, |m, &c| m | 1 << c);
                        acc[used] += 1;
                    }
                },
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
            // representative count per set size at this k
            let mut by_size: Vec<Option<(u64, u64)>> = vec![None; k as usize + 1];
            for (mask, &count) in counts.iter().enumerate() {
                let mask64 = mask as u64;
                rows.push(AuditRow { k, colors: set_colors(mask64), count });
                let size = mask.count_ones() as usize;
                match by_size[size] {
                    None => by_size[size] = Some((mask64, count)),
                    Some((m0, c0)) if c0 != count && condition_a.is_none() => {
                        condition_a = Some(ConditionA {
                            k,
                            first: set_colors(m0),
                            first_count: c0,
                            second: set_colors(mask64),
                            second_count: count,
                        });
                    }
                    _ => {}
                }
                match first_seen[mask] {
                    None => first_seen[mask] = Some((k, count)),
                    Some((k1, c1)) if c1 != count && condition_b.is_none() => {
                        condition_b =
                            Some(ConditionB { colors: set_colors(mask64), k1, count1: c1, k2: k, count2: count });
                    }
                    _ => {}
                }
            }
        }
        Ok(AuditReport { property: prop.to_string(), k_max, rows, condition_a, condition_b })
    }
}
