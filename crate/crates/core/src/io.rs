//! File formats: graphs, graphon specifications and CSV outputs.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complexity::RadiusSweep;
use crate::error::{GraphonError, Result};
use crate::estimate::{t_n, DistanceEstimate};
use crate::model::{AdjacencyMatrix, GraphonSpec};
use crate::oracle::TrueDistanceMatrix;

pub const MAGIC: &[u8; 4] = b"GADJ";

fn parse_err(msg: impl Into<String>) -> GraphonError {
    GraphonError::Parse(msg.into())
}

/// Text edge list: a header `n=<N> rho=<R>`, then one `i j` line per edge
/// with `i < j`, 0-based.
pub fn write_edge_list<W: Write>(mut w: W, a: &AdjacencyMatrix) -> Result<()> {
    writeln!(w, "n={} rho={}", a.n(), a.rho())?;
    for (i, j) in a.edges() {
        writeln!(w, "{i} {j}")?;
    }
    Ok(())
}

pub fn read_edge_list<R: BufRead>(r: R) -> Result<AdjacencyMatrix> {
    let mut lines = r.lines();
    let header = lines.next().ok_or_else(|| parse_err("empty edge list"))??;
    let (mut n, mut rho) = (None, None);
    for field in header.split_whitespace() {
        match field.split_once('=') {
            Some(("n", v)) => n = Some(v.parse::<usize>().map_err(|e| parse_err(format!("n: {e}")))?),
            Some(("rho", v)) => rho = Some(v.parse::<f64>().map_err(|e| parse_err(format!("rho: {e}")))?),
            _ => return Err(parse_err(format!("unexpected header field {field:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_err("header lacks n="))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(i)), Some(Ok(j)), None) => edges.push((i, j)),
            _ => return Err(parse_err(format!("bad edge on line {}: {line:?}", lineno + 2))),
        }
    }
    AdjacencyMatrix::from_edges(n, &edges, rho.unwrap_or(1.0))
}

/// Binary layout: magic, `u32` n, `f64` rho (little-endian), then the full
/// `n x n` matrix packed row-major, LSB first.
pub fn write_binary<W: Write>(mut w: W, a: &AdjacencyMatrix) -> Result<()> {
    let n = a.n();
    let n32 = u32::try_from(n).map_err(|_| GraphonError::InvalidArgument(format!("n = {n} too large")))?;
    w.write_all(MAGIC)?;
    w.write_all(&n32.to_le_bytes())?;
    w.write_all(&a.rho().to_le_bytes())?;
    let mut bytes = vec![0u8; (n * n).div_ceil(8)];
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) {
                let k = i * n + j;
                bytes[k / 8] |= 1 << (k % 8);
            }
        }
    }
    w.write_all(&bytes)?;
    Ok(())
}

pub fn read_binary<R: Read>(mut r: R) -> Result<AdjacencyMatrix> {
    let mut header = [0u8; 16];
    r.read_exact(&mut header)?;
    if &header[..4] != MAGIC {
        return Err(parse_err("missing GADJ magic"));
    }
    let n = u32::from_le_bytes(header[4..8].try_into().unwrap()) as usize;
    let rho = f64::from_le_bytes(header[8..16].try_into().unwrap());
    let mut bytes = vec![0u8; (n * n).div_ceil(8)];
    r.read_exact(&mut bytes)?;
    let bit = |k: usize| bytes[k / 8] >> (k % 8) & 1 == 1;
    let mut edges = Vec::new();
    for i in 0..n {
        if bit(i * n + i) {
            return Err(parse_err(format!("self-loop at node {i}")));
        }
        for j in (i + 1)..n {
            match (bit(i * n + j), bit(j * n + i)) {
                (true, true) => edges.push((i, j)),
                (false, false) => {}
                _ => return Err(parse_err(format!("asymmetric entry ({i}, {j})"))),
            }
        }
    }
    AdjacencyMatrix::from_edges(n, &edges, rho)
}

/// Reads either format, detected from the magic bytes.
pub fn read_graph(path: &Path) -> Result<AdjacencyMatrix> {
    let mut r = BufReader::new(File::open(path)?);
    if r.fill_buf()?.starts_with(MAGIC) {
        read_binary(r)
    } else {
        read_edge_list(r)
    }
}

/// Writes an edge list for `.txt`/`.edges` paths, the binary format otherwise.
pub fn write_graph(path: &Path, a: &AdjacencyMatrix) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    match path.extension().and_then(|e| e.to_str()) {
        Some("txt") | Some("edges") => write_edge_list(&mut w, a)?,
        _ => write_binary(&mut w, a)?,
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct SpecFile {
    graphon: GraphonSpec,
}

/// Parses a `[graphon]` section, e.g. `family = "erdos_renyi"` and `p = 0.5`.
pub fn spec_from_toml(text: &str) -> Result<GraphonSpec> {
    let f: SpecFile = toml::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    f.graphon.validate()?;
    Ok(f.graphon)
}

pub fn spec_to_toml(spec: &GraphonSpec) -> Result<String> {
    toml::to_string(&SpecFile { graphon: spec.clone() }).map_err(|e| parse_err(e.to_string()))
}

pub fn read_spec(path: &Path) -> Result<GraphonSpec> {
    spec_from_toml(&std::fs::read_to_string(path)?)
}

/// `i,j,sq_standard[,sq_conservative]` for `i < j`.
pub fn write_distances_csv<W: Write>(mut w: W, est: &DistanceEstimate, conservative: bool) -> Result<()> {
    writeln!(w, "# n={} rho={} t_n={}", est.n, est.rho, t_n(est.n))?;
    if conservative {
        writeln!(w, "i,j,sq_standard,sq_conservative")?;
    } else {
        writeln!(w, "i,j,sq_standard")?;
    }
    for i in 0..est.n {
        for j in (i + 1)..est.n {
            if conservative {
                writeln!(w, "{i},{j},{},{}", est.sq_standard.get(i, j), est.sq_conservative.get(i, j))?;
            } else {
                writeln!(w, "{i},{j},{}", est.sq_standard.get(i, j))?;
            }
        }
    }
    Ok(())
}

/// `i,j,r` for `i < j`.
pub fn write_oracle_csv<W: Write>(mut w: W, oracle: &TrueDistanceMatrix) -> Result<()> {
    writeln!(
        w,
        "# method={} integration_error={}",
        oracle.method.as_str(),
        oracle.integration_error
    )?;
    writeln!(w, "i,j,r")?;
    let n = oracle.n();
    for i in 0..n {
        for j in (i + 1)..n {
            writeln!(w, "{i},{j},{}", oracle.values.get(i, j))?;
        }
    }
    Ok(())
}

pub fn write_sweep_csv<W: Write>(mut w: W, sweep: &RadiusSweep) -> Result<()> {
    match &sweep.plateau {
        Some(p) => writeln!(
            w,
            "# method={} plateau_eps={}:{} plateau_mean={}",
            sweep.method, p.eps_lo, p.eps_hi, p.mean
        )?,
        None => writeln!(w, "# method={} plateau=none", sweep.method)?,
    }
    writeln!(w, "eps,cov_size,dim_value")?;
    for r in &sweep.rows {
        writeln!(w, "{},{},{}", r.eps, r.cov_size, r.dim_value)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> AdjacencyMatrix {
        AdjacencyMatrix::from_edges(10, &[(0, 1), (2, 9), (3, 4), (8, 9), (0, 9)], 0.5).unwrap()
    }

    #[test]
    fn edge_list_round_trip() {
        let a = sample();
        let mut buf = Vec::new();
        write_edge_list(&mut buf, &a).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("n=10 rho=0.5\n0 1\n0 9\n"));
        assert_eq!(read_edge_list(&buf[..]).unwrap(), a);
    }

    #[test]
    fn binary_layout() {
        let a = AdjacencyMatrix::from_edges(3, &[(0, 1)], 1.0).unwrap();
        let mut buf = Vec::new();
        write_binary(&mut buf, &a).unwrap();
        assert_eq!(buf.len(), 16 + 2);
        assert_eq!(&buf[..4], b"GADJ");
        assert_eq!(&buf[4..8], &3u32.to_le_bytes());
        assert_eq!(&buf[8..16], &1.0f64.to_le_bytes());
        // bits 1 (0,1) and 3 (1,0)
        assert_eq!(buf[16], 0b0000_1010);
        assert_eq!(buf[17], 0);
        assert_eq!(read_binary(&buf[..]).unwrap(), a);
    }

    #[test]
    fn binary_round_trip() {
        let a = sample();
        let mut buf = Vec::new();
        write_binary(&mut buf, &a).unwrap();
        assert_eq!(read_binary(&buf[..]).unwrap(), a);
    }

    #[test]
    fn binary_rejects_asymmetry() {
        let mut buf = Vec::new();
        write_binary(&mut buf, &AdjacencyMatrix::empty(3)).unwrap();
        buf[16] = 0b10;
        assert!(matches!(read_binary(&buf[..]), Err(GraphonError::Parse(_))));
    }

    #[test]
    fn spec_toml() {
        let s = spec_from_toml("[graphon]\nfamily = \"erdos_renyi\"\np = 0.5\n").unwrap();
        assert_eq!(s, GraphonSpec::ErdosRenyi { p: 0.5 });
        let sbm = GraphonSpec::Sbm {
            weights: vec![0.5, 0.5],
            block_probs: vec![vec![0.9, 0.1], vec![0.1, 0.9]],
        };
        assert_eq!(spec_from_toml(&spec_to_toml(&sbm).unwrap()).unwrap(), sbm);
        assert!(spec_from_toml("[graphon]\nfamily = \"erdos_renyi\"\np = 1.5\n").is_err());
    }

    #[test]
    fn bad_edge_list() {
        assert!(read_edge_list(&b"n=3 rho=1\n0 3\n"[..]).is_err());
        assert!(read_edge_list(&b"n=3\n0 x\n"[..]).is_err());
        assert!(read_edge_list(&b""[..]).is_err());
    }
}
