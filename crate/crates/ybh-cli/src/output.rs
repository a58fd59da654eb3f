//! Report records and their JSON/CSV codecs.
//!
//! Every writer feeds its own output back through the matching parser
//! before returning, so anything the binary emits is guaranteed to
//! round-trip. Torsion factors use the canonical Laurent serialization
//! and are re-parsed as polynomials, not just compared as strings.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use ybh_core::homology::HomologyGroup;
use ybh_core::LaurentPoly;

/// One homology (or cohomology) group per degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub n: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjecture_agrees: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<DualPart>,
}

/// The cohomology half of a degree record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualPart {
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

/// One row of the conjecture table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRecord {
    pub n: usize,
    pub a_n: usize,
    pub s_n_minus_2: usize,
    pub predicted: String,
    pub computed: String,
    pub agrees: bool,
}

/// Smith normal form summary of one differential.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SnfRecord {
    pub n: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub invariant_factors: Vec<String>,
}

/// A differential matrix as an entry list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub n: usize,
    pub method: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub methods_agree: Option<bool>,
}

pub fn torsion_strings(g: &HomologyGroup) -> Vec<String> {
    g.torsion.iter().map(|t| t.to_string()).collect()
}

fn check_torsion_entries(torsion: &[String]) -> Result<()> {
    for t in torsion {
        let p: LaurentPoly =
            t.parse().ok().with_context(|| format!("unparseable torsion factor `{t}`"))?;
        if p.is_zero() || p.is_unit() {
            bail!("torsion factor `{t}` is not a nonunit");
        }
    }
    Ok(())
}

pub fn degree_records_to_json(records: &[DegreeRecord]) -> Result<String> {
    let s = serde_json::to_string_pretty(records)?;
    let back = degree_records_from_json(&s)?;
    anyhow::ensure!(back == records, "JSON round-trip drifted");
    Ok(s + "\n")
}

pub fn degree_records_from_json(s: &str) -> Result<Vec<DegreeRecord>> {
    let records: Vec<DegreeRecord> = serde_json::from_str(s)?;
    for r in &records {
        check_torsion_entries(&r.torsion)?;
        if let Some(c) = &r.cohomology {
            check_torsion_entries(&c.torsion)?;
        }
    }
    Ok(records)
}

/// CSV rows keep the torsion field quoted, factors joined by `;`.
pub fn degree_records_to_csv(records: &[DegreeRecord]) -> Result<String> {
    let dual = records.iter().any(|r| r.cohomology.is_some());
    let mut s = String::from(if dual {
        "n,free_rank,torsion,cohomology_free_rank,cohomology_torsion\n"
    } else {
        "n,free_rank,torsion\n"
    });
    for r in records {
        s.push_str(&format!("{},{},\"{}\"", r.n, r.free_rank, r.torsion.join(";")));
        if dual {
            let c = r.cohomology.as_ref().context("mixed cohomology columns")?;
            s.push_str(&format!(",{},\"{}\"", c.free_rank, c.torsion.join(";")));
        }
        s.push('\n');
    }
    let back = degree_records_from_csv(&s)?;
    let stripped: Vec<DegreeRecord> =
        records.iter().map(|r| DegreeRecord { conjecture_agrees: None, ..r.clone() }).collect();
    anyhow::ensure!(back == stripped, "CSV round-trip drifted");
    Ok(s)
}

pub fn degree_records_from_csv(s: &str) -> Result<Vec<DegreeRecord>> {
    let mut reader = csv::Reader::from_reader(s.as_bytes());
    let headers = reader.headers()?.clone();
    let dual = match headers.iter().collect::<Vec<_>>().as_slice() {
        ["n", "free_rank", "torsion"] => false,
        ["n", "free_rank", "torsion", "cohomology_free_rank", "cohomology_torsion"] => true,
        other => bail!("unexpected CSV header {other:?}"),
    };
    let split = |field: &str| -> Vec<String> {
        if field.is_empty() {
            Vec::new()
        } else {
            field.split(';').map(str::to_owned).collect()
        }
    };
    let mut records = Vec::new();
    for row in reader.records() {
        let row = row?;
        let torsion = split(&row[2]);
        check_torsion_entries(&torsion)?;
        let cohomology = if dual {
            let t = split(&row[4]);
            check_torsion_entries(&t)?;
            Some(DualPart { free_rank: row[3].parse()?, torsion: t })
        } else {
            None
        };
        records.push(DegreeRecord {
            n: row[0].parse()?,
            free_rank: row[1].parse()?,
            torsion,
            conjecture_agrees: None,
            cohomology,
        });
    }
    Ok(records)
}

pub fn conjecture_records_to_json(records: &[ConjectureRecord]) -> Result<String> {
    let s = serde_json::to_string_pretty(records)?;
    let back: Vec<ConjectureRecord> = serde_json::from_str(&s)?;
    anyhow::ensure!(back == records, "JSON round-trip drifted");
    Ok(s + "\n")
}

pub fn conjecture_records_to_csv(records: &[ConjectureRecord]) -> Result<String> {
    let mut s = String::from("n,a_n,s_n_minus_2,agrees,predicted,computed\n");
    for r in records {
        s.push_str(&format!(
            "{},{},{},{},\"{}\",\"{}\"\n",
            r.n, r.a_n, r.s_n_minus_2, r.agrees, r.predicted, r.computed
        ));
    }
    let back = conjecture_records_from_csv(&s)?;
    anyhow::ensure!(back == records, "CSV round-trip drifted");
    Ok(s)
}

pub fn conjecture_records_from_csv(s: &str) -> Result<Vec<ConjectureRecord>> {
    let mut reader = csv::Reader::from_reader(s.as_bytes());
    let mut records = Vec::new();
    for row in reader.records() {
        let row = row?;
        records.push(ConjectureRecord {
            n: row[0].parse()?,
            a_n: row[1].parse()?,
            s_n_minus_2: row[2].parse()?,
            agrees: row[3].parse()?,
            predicted: row[4].to_owned(),
            computed: row[5].to_owned(),
        });
    }
    Ok(records)
}

pub fn snf_record_to_json(record: &SnfRecord) -> Result<String> {
    let s = serde_json::to_string_pretty(record)?;
    let back: SnfRecord = serde_json::from_str(&s)?;
    for f in &back.invariant_factors {
        let _: LaurentPoly =
            f.parse().ok().with_context(|| format!("unparseable invariant factor `{f}`"))?;
    }
    anyhow::ensure!(back == *record, "JSON round-trip drifted");
    Ok(s + "\n")
}

pub fn matrix_record_to_json(record: &MatrixRecord) -> Result<String> {
    let s = serde_json::to_string_pretty(record)?;
    let back: MatrixRecord = serde_json::from_str(&s)?;
    for (_, _, e) in &back.entries {
        let _: LaurentPoly =
            e.parse().ok().with_context(|| format!("unparseable entry `{e}`"))?;
    }
    anyhow::ensure!(back == *record, "JSON round-trip drifted");
    Ok(s + "\n")
}
