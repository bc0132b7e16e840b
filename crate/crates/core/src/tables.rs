//! Embedded classification tables: primitive groups of degree dividing 80,
//! simple groups with a subgroup of index dividing 2⁵·3², and the soluble and
//! insoluble vertex stabilizers of pentavalent s-transitive graphs.
//!
//! The records live in `tables.toml` next to this file and are parsed once.

use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::{Error, Result, StabilizerTag};

const TABLES_TOML: &str = include_str!("tables.toml");

/// 2⁹·3²·5: every insoluble stabilizer order divides this.
pub const INSOLUBLE_ORDER_BOUND: u64 = 23_040;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveRecord {
    #[serde(rename = "group")]
    pub group_name: String,
    #[serde(rename = "stabilizer")]
    pub stabilizer_name: String,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRecord {
    #[serde(rename = "group")]
    pub group_name: String,
    #[serde(rename = "subgroup")]
    pub subgroup_name: String,
    #[serde(rename = "index")]
    pub index_description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub remark: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerRecord {
    pub soluble: bool,
    pub s: u32,
    pub names: Vec<String>,
    /// Orders, parallel to `names`.
    pub orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub primitive: Vec<PrimitiveRecord>,
    pub index: Vec<IndexRecord>,
    pub stabilizer: Vec<StabilizerRecord>,
}

pub fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| parse_tables(TABLES_TOML).expect("embedded tables parse"))
}

pub fn parse_tables(text: &str) -> Result<Tables> {
    toml::from_str(text).map_err(|e| Error::TableData(e.to_string()))
}

/// Primitive records whose degree divides `degree`, which must divide 80.
pub fn lookup_primitive(degree: u64) -> Result<Vec<PrimitiveRecord>> {
    if degree == 0 || 80 % degree != 0 {
        return Err(Error::NotADivisorOf80(degree));
    }
    Ok(tables().primitive.iter().filter(|r| degree % r.degree == 0).cloned().collect())
}

pub fn lookup_stabilizers(s: u32, soluble: bool) -> Result<StabilizerRecord> {
    tables()
        .stabilizer
        .iter()
        .find(|r| r.s == s && r.soluble == soluble)
        .cloned()
        .ok_or(Error::UnknownS { s, soluble })
}

/// Outcome of [`self_check_tables`]: one line per invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCheckReport {
    pub checks: Vec<(String, bool)>,
}

impl TableCheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| name.as_str()).collect()
    }
}

fn alternating_degree(name: &str) -> Option<u64> {
    name.strip_prefix('A')?.parse().ok()
}

pub fn self_check_tables() -> TableCheckReport {
    check_tables(tables())
}

pub fn check_tables(t: &Tables) -> TableCheckReport {
    let mut checks = Vec::new();
    let mut check = |name: &str, ok: bool| checks.push((name.to_string(), ok));

    check("primitive: seven records", t.primitive.len() == 7);
    check("primitive: degrees divide 80", t.primitive.iter().all(|r| r.degree > 0 && 80 % r.degree == 0));
    check(
        "primitive: alternating rows are (An, An-1, n)",
        t.primitive.iter().all(|r| match alternating_degree(&r.group_name) {
            Some(n) => r.degree == n && alternating_degree(&r.stabilizer_name) == Some(n - 1),
            None => true,
        }),
    );
    check(
        "primitive: contains (A80, A79, 80)",
        t.primitive.iter().any(|r| r.group_name == "A80" && r.stabilizer_name == "A79" && r.degree == 80),
    );

    check("index: four records", t.index.len() == 4);
    check(
        "index: numeric indices divide 2^5*3^2",
        t.index.iter().all(|r| match r.index_description.parse::<u64>() {
            Ok(n) => 288 % n == 0,
            Err(_) => r.remark.is_some(),
        }),
    );

    let soluble: Vec<&StabilizerRecord> = t.stabilizer.iter().filter(|r| r.soluble).collect();
    let insoluble: Vec<&StabilizerRecord> = t.stabilizer.iter().filter(|r| !r.soluble).collect();
    check("stabilizer: names and orders are parallel", t.stabilizer.iter().all(|r| r.names.len() == r.orders.len()));
    check(
        "stabilizer: soluble s values are 1, 2, 3",
        soluble.iter().map(|r| r.s).collect::<Vec<_>>() == vec![1, 2, 3],
    );
    check(
        "stabilizer: insoluble s values are 2..5",
        insoluble.iter().map(|r| r.s).collect::<Vec<_>>() == vec![2, 3, 4, 5],
    );
    check(
        "stabilizer: soluble orders divide 80",
        soluble.iter().flat_map(|r| &r.orders).all(|&o| o > 0 && 80 % o == 0),
    );
    check(
        "stabilizer: insoluble orders divide 2^9*3^2*5",
        insoluble.iter().flat_map(|r| &r.orders).all(|&o| o > 0 && INSOLUBLE_ORDER_BOUND % o == 0),
    );
    let expected_insoluble: [&[u64]; 4] = [&[60, 120], &[720, 1440, 2880], &[960, 1920, 2880, 5760], &[23040]];
    check(
        "stabilizer: insoluble order rows",
        insoluble.len() == 4 && insoluble.iter().zip(expected_insoluble).all(|(r, e)| r.orders == e),
    );
    check(
        "stabilizer: soluble names are the six recognizable tags with matching orders and s",
        {
            let mut seen = Vec::new();
            let consistent = soluble.iter().all(|r| {
                r.names.iter().zip(&r.orders).all(|(name, &order)| {
                    seen.push(name.clone());
                    StabilizerTag::from_name(name).is_some_and(|tag| {
                        tag.order() == Some(order) && tag.s_value() == Some(r.s)
                    })
                })
            });
            seen.sort();
            let mut all: Vec<String> = StabilizerTag::SOLUBLE.iter().map(|t| t.name().to_string()).collect();
            all.sort();
            consistent && seen == all
        },
    );
    check(
        "stabilizer: order 80 occurs only at s = 3",
        soluble.iter().all(|r| r.orders.contains(&80) == (r.s == 3)),
    );
    TableCheckReport { checks }
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> =
            row.iter().enumerate().map(|(c, cell)| format!("{cell:<width$}", width = widths[c])).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

/// Table `number` (1 to 4) as aligned text.
pub fn render_table(number: u32) -> Result<String> {
    let t = tables();
    let rows: Vec<Vec<String>> = match number {
        1 => std::iter::once(vec!["group".into(), "stabilizer".into(), "degree".into()])
            .chain(t.primitive.iter().map(|r| {
                vec![r.group_name.clone(), r.stabilizer_name.clone(), r.degree.to_string()]
            }))
            .collect(),
        2 => std::iter::once(vec!["group".into(), "subgroup".into(), "index".into(), "remark".into()])
            .chain(t.index.iter().map(|r| {
                vec![
                    r.group_name.clone(),
                    r.subgroup_name.clone(),
                    r.index_description.clone(),
                    r.remark.clone().unwrap_or_default(),
                ]
            }))
            .collect(),
        3 | 4 => {
            let soluble = number == 3;
            std::iter::once(vec!["s".into(), "stabilizers".into(), "orders".into()])
                .chain(t.stabilizer.iter().filter(|r| r.soluble == soluble).map(|r| {
                    vec![
                        r.s.to_string(),
                        r.names.join(", "),
                        r.orders.iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
                    ]
                }))
                .collect()
        }
        other => return Err(Error::TableData(format!("no table {other}; expected 1-4"))),
    };
    Ok(aligned(&rows))
}

/// Table `number` (1 to 4) as JSON.
pub fn table_json(number: u32) -> Result<serde_json::Value> {
    let t = tables();
    let value = match number {
        1 => serde_json::to_value(&t.primitive),
        2 => serde_json::to_value(&t.index),
        3 => serde_json::to_value(t.stabilizer.iter().filter(|r| r.soluble).collect::<Vec<_>>()),
        4 => serde_json::to_value(t.stabilizer.iter().filter(|r| !r.soluble).collect::<Vec<_>>()),
        other => return Err(Error::TableData(format!("no table {other}; expected 1-4"))),
    };
    value.map_err(|e| Error::TableData(e.to_string()))
}
