//! TSV and JSON renderings of marks tables and vectors.

use serde::{Deserialize, Serialize};

use super::{MarkVector, MarksTable};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarksTableJson {
    pub classes: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

/// Header row of class labels, then one row per transitive set `[G/K]`.
pub fn marks_table_tsv(table: &MarksTable) -> String {
    let labels = table.labels();
    let mut out = format!("class\t{}\n", labels.join("\t"));
    for (label, row) in labels.iter().zip(table.matrix()) {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        out.push_str(&format!("{label}\t{}\n", cells.join("\t")));
    }
    out
}

pub fn marks_table_json(table: &MarksTable) -> MarksTableJson {
    MarksTableJson { classes: table.labels(), matrix: table.matrix().to_vec() }
}

/// Parses the TSV produced by [`marks_table_tsv`].
pub fn parse_marks_table_tsv(text: &str) -> Result<MarksTableJson> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Descriptor("empty marks table".into()))?;
    let classes: Vec<String> = header.split('\t').skip(1).map(str::to_string).collect();
    let mut matrix = Vec::new();
    for line in lines {
        let row = line
            .split('\t')
            .skip(1)
            .map(|c| c.trim().parse::<i64>().map_err(|e| Error::Descriptor(format!("bad entry {c:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != classes.len() {
            return Err(Error::Dimension { expected: classes.len(), got: row.len() });
        }
        matrix.push(row);
    }
    Ok(MarksTableJson { classes, matrix })
}

/// One tab-separated line of values.
pub fn mark_vector_tsv(v: &MarkVector) -> String {
    v.values.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\t")
}
