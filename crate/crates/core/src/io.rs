//! Text formats for edge-colored graphs (`.ecg`) and digraphs (`.dg`), plus
//! the JSON certificate document binding a feasible partition to the hash of
//! its instance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{ColorId, Digraph, Edge, EdgeColoredGraph, PartitionTargets, VertexId};
use crate::partition::{check_partition, CheckOutcome, PartitionCertificate, PartitionError};

pub const CERT_FORMAT: &str = "ecdecomp-cert-v1";
pub const HASH_ALGORITHM: &str = "sha256";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("json error: {0}")]
    Json(String),
    #[error("unsupported certificate format tag {0:?}")]
    UnsupportedFormat(String),
    #[error("unsupported hash algorithm {0:?}")]
    UnsupportedHash(String),
    #[error("graph hash mismatch: certificate was issued for a different instance")]
    HashMismatch,
    #[error("certificate invalid: {0}")]
    Invalid(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

fn parse_fields<const K: usize>(line: usize, s: &str) -> Result<[usize; K], IoError> {
    let mut out = [0usize; K];
    let mut it = s.split_whitespace();
    for slot in &mut out {
        let tok = it.next().ok_or_else(|| IoError::Parse {
            line,
            reason: format!("expected {K} integer fields"),
        })?;
        *slot = tok.parse().map_err(|_| IoError::Parse {
            line,
            reason: format!("not a nonnegative integer: {tok:?}"),
        })?;
    }
    if it.next().is_some() {
        return Err(IoError::Parse { line, reason: format!("expected exactly {K} fields") });
    }
    Ok(out)
}

/// Meaningful (line_number, content) pairs: comments and blanks dropped.
fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_ecg(text: &str) -> Result<EdgeColoredGraph, IoError> {
    let mut lines = meaningful_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or(IoError::Parse { line: 1, reason: "empty file".into() })?;
    let n = header
        .strip_prefix("ecg ")
        .and_then(|rest| rest.trim().parse::<usize>().ok())
        .ok_or_else(|| IoError::Parse {
            line: hline,
            reason: format!("expected header \"ecg <n>\", got {header:?}"),
        })?;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (lno, l) in lines {
        let [u, v, c] = parse_fields::<3>(lno, l)?;
        if u == v {
            return Err(IoError::Parse { line: lno, reason: format!("self-loop at vertex {u}") });
        }
        if u >= n || v >= n {
            return Err(IoError::Parse {
                line: lno,
                reason: format!("vertex {} out of range for n = {n}", u.max(v)),
            });
        }
        let key = (u.min(v), u.max(v));
        if let Some(first) = seen.insert(key, lno) {
            return Err(IoError::Parse {
                line: lno,
                reason: format!("duplicate edge {}-{} (first seen at line {first})", key.0, key.1),
            });
        }
        edges.push(Edge::new(u, v, c));
    }
    EdgeColoredGraph::new(n, edges)
        .map_err(|e| IoError::Parse { line: hline, reason: e.to_string() })
}

/// Canonical form: sorted edges, u < v, no comments.
pub fn write_ecg(g: &EdgeColoredGraph) -> String {
    let mut out = format!("ecg {}\n", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.color));
    }
    out
}

pub fn parse_dg(text: &str) -> Result<Digraph, IoError> {
    let mut lines = meaningful_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or(IoError::Parse { line: 1, reason: "empty file".into() })?;
    let mut parts = header.split_whitespace();
    let (n, oriented) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
        (Some("dg"), Some(n), flag, None) => {
            let n: usize = n.parse().map_err(|_| IoError::Parse {
                line: hline,
                reason: format!("bad vertex count {n:?}"),
            })?;
            match flag {
                None => (n, false),
                Some("oriented") => (n, true),
                Some(other) => {
                    return Err(IoError::Parse {
                        line: hline,
                        reason: format!("unknown header flag {other:?}"),
                    })
                }
            }
        }
        _ => {
            return Err(IoError::Parse {
                line: hline,
                reason: format!("expected header \"dg <n> [oriented]\", got {header:?}"),
            })
        }
    };
    let mut arcs = Vec::new();
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (lno, l) in lines {
        let [u, v] = parse_fields::<2>(lno, l)?;
        if u == v {
            return Err(IoError::Parse { line: lno, reason: format!("self-loop at vertex {u}") });
        }
        if u >= n || v >= n {
            return Err(IoError::Parse {
                line: lno,
                reason: format!("vertex {} out of range for n = {n}", u.max(v)),
            });
        }
        if oriented {
            if let Some(first) = seen.get(&(v, u)) {
                return Err(IoError::Parse {
                    line: lno,
                    reason: format!("2-cycle {u}<->{v} in oriented digraph (see line {first})"),
                });
            }
        }
        seen.entry((u, v)).or_insert(lno);
        arcs.push((u, v));
    }
    Digraph::new(n, arcs, oriented)
        .map_err(|e| IoError::Parse { line: hline, reason: e.to_string() })
}

pub fn write_dg(d: &Digraph) -> String {
    let mut out = if d.is_oriented() {
        format!("dg {} oriented\n", d.vertex_count())
    } else {
        format!("dg {}\n", d.vertex_count())
    };
    for &(u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Hex SHA-256 digest of the canonical `.ecg` bytes.
pub fn graph_hash(g: &EdgeColoredGraph) -> String {
    let mut h = Sha256::new();
    h.update(write_ecg(g).as_bytes());
    let digest = h.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub format: String,
    pub hash_algorithm: String,
    pub graph_hash: String,
    pub targets: Vec<usize>,
    pub parts: Vec<Vec<VertexId>>,
    /// vertex (as a decimal string, for JSON object keys) → witness colors
    pub witnesses: BTreeMap<String, Vec<ColorId>>,
    pub checked: bool,
}

pub fn certificate_document(
    g: &EdgeColoredGraph,
    cert: &PartitionCertificate,
) -> CertificateDocument {
    let witnesses = cert
        .witnesses
        .iter()
        .enumerate()
        .map(|(v, w)| (v.to_string(), w.iter().copied().collect()))
        .collect();
    CertificateDocument {
        format: CERT_FORMAT.into(),
        hash_algorithm: HASH_ALGORITHM.into(),
        graph_hash: graph_hash(g),
        targets: cert.targets.as_slice().to_vec(),
        parts: cert.parts.clone(),
        witnesses,
        checked: true,
    }
}

pub fn write_certificate(doc: &CertificateDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("certificate serializes");
    s.push('\n');
    s
}

pub fn parse_certificate(text: &str) -> Result<CertificateDocument, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))
}

/// Re-derive everything from the graph: the hash must bind, the partition
/// must check out, and the recorded witnesses must match the recomputed ones.
pub fn verify_certificate(
    doc: &CertificateDocument,
    g: &EdgeColoredGraph,
) -> Result<PartitionCertificate, IoError> {
    if doc.format != CERT_FORMAT {
        return Err(IoError::UnsupportedFormat(doc.format.clone()));
    }
    if doc.hash_algorithm != HASH_ALGORITHM {
        return Err(IoError::UnsupportedHash(doc.hash_algorithm.clone()));
    }
    if doc.graph_hash != graph_hash(g) {
        return Err(IoError::HashMismatch);
    }
    let targets = PartitionTargets::new(doc.targets.clone())
        .map_err(PartitionError::from)?;
    let cert = match check_partition(g, &doc.parts, &targets)? {
        CheckOutcome::Valid(cert) => cert,
        CheckOutcome::Deficient(report) => {
            let d = &report.deficient[0];
            return Err(IoError::Invalid(format!(
                "vertex {} in part {} has color degree {} < {}",
                d.vertex, d.part, d.have, d.need
            )));
        }
    };
    for (v, w) in cert.witnesses.iter().enumerate() {
        let recorded = doc.witnesses.get(&v.to_string()).ok_or_else(|| {
            IoError::Invalid(format!("vertex {v} missing from witness map"))
        })?;
        let recomputed: Vec<ColorId> = w.iter().copied().collect();
        if *recorded != recomputed {
            return Err(IoError::Invalid(format!(
                "witness colors for vertex {v} do not match the graph"
            )));
        }
    }
    Ok(cert)
}
